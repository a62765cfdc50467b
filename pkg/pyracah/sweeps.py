"""
Randomized, reproducible sweeps comparing computed lattices with predictions.

@author : davidrpugh

"""
import collections
import concurrent.futures
import logging
from fractions import Fraction

import numpy as np

from . algebras import check_h_relations, check_racah_relations, zeta_pullback
from . exceptions import PyRacahError
from . lattices import LatticeEngine, compare_lattices, predicted_lattice
from . modules import (EPSILONS, OddFamily, build_module, central_scalars,
                       format_spec, irreducibility_criterion, module_spec)

logger = logging.getLogger(__name__)

NUMERATOR_BOUND = 50

SweepConfig = collections.namedtuple(
    'SweepConfig', ['families', 'twists', 'd_max', 'trials', 'seed',
                    'denominator_bound', 'max_retries', 'jobs'])


def sweep_config(families=("E", "O"), twists=tuple(EPSILONS.values()), d_max=9,
                 trials=100, seed=0, denominator_bound=10, max_retries=100, jobs=1):
    """
    Create a validated SweepConfig.

    Raises
    ------
    ValueError
        If any field is out of range.

    """
    families, twists = tuple(families), tuple(tuple(e) for e in twists)
    if not families or not set(families) <= {"E", "O"}:
        mesg = "families must be a non-empty subset of E, O, got {}."
        raise ValueError(mesg.format(families))
    if not twists or not set(twists) <= set(EPSILONS.values()):
        mesg = "twists must be a non-empty subset of {}, got {}."
        raise ValueError(mesg.format(list(EPSILONS.values()), twists))
    for name, value in (("d_max", d_max), ("trials", trials),
                        ("denominator_bound", denominator_bound),
                        ("max_retries", max_retries), ("jobs", jobs)):
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            mesg = "{} must be a positive integer, got {!r}."
            raise ValueError(mesg.format(name, value))
    return SweepConfig(families, twists, d_max, trials, seed, denominator_bound,
                       max_retries, jobs)


def _largest(d_max, parity):
    return d_max if d_max % 2 == parity else d_max - 1


def _random_rational(prng, denominator_bound):
    numerator = int(prng.integers(-NUMERATOR_BOUND, NUMERATOR_BOUND + 1))
    denominator = int(prng.integers(1, denominator_bound + 1))
    return Fraction(numerator, denominator)


def sample_spec(prng, config, family=None, d=None, epsilon=None, constraint=None):
    """
    Draw a random irreducible module specification.

    Parameters
    ----------
    prng : numpy.random.Generator
    config : SweepConfig
    family, d, epsilon : optional
        Drawn from `config` when not given.
    constraint : callable, optional(default=None)
        Maps the drawn (a, b, c) to the parameters actually used.

    Returns
    -------
    spec : ModuleSpec or None
        None when `config.max_retries` draws all fail the irreducibility
        criterion.

    """
    if family is None:
        family = config.families[int(prng.integers(len(config.families)))]
    if d is None:
        if family == "E":
            d = 2 * int(prng.integers((config.d_max + 1) // 2)) + 1
        else:
            d = 2 * int(prng.integers(config.d_max // 2 + 1))
    if epsilon is None:
        epsilon = config.twists[int(prng.integers(len(config.twists)))]
    for _ in range(config.max_retries):
        params = tuple(_random_rational(prng, config.denominator_bound)
                       for _ in range(3))
        if constraint is not None:
            params = constraint(*params)
        spec = module_spec(family, d, *params, epsilon=epsilon)
        if irreducibility_criterion(spec):
            return spec
    logger.warning("no irreducible %s module with d=%d after %d draws; skipping",
                   family, d, config.max_retries)
    return None


def _zero(index):
    def constraint(*params):
        params = list(params)
        params[index] = Fraction(0)
        return tuple(params)
    return constraint


def _sigma_zero(d, epsilon):
    """Parameters whose untwisted equivalent satisfies a + b + c = (d+1)/2."""
    def constraint(a, b, c):
        c = Fraction(d + 1, 2) - a - b
        return OddFamily.twisted_parameters(a, b, c, epsilon)
    return constraint


def injected_specs(prng, config):
    """
    Specifications hitting the measure-zero branches of the classification.

    Returns
    -------
    injected : list(tuple(str, ModuleSpec or None))
        Branch names with their sampled specs (None when skipped).

    """
    branches = []
    twisted = {(1, -1): (0, "E a=0"), (-1, 1): (1, "E b=0"), (-1, -1): (2, "E c=0")}
    if "E" in config.families:
        if (1, 1) in config.twists:
            branches.append(("E d=1", dict(family="E", d=1, epsilon=(1, 1))))
        for epsilon in config.twists:
            if epsilon in twisted:
                index, name = twisted[epsilon]
                branches.append((name, dict(family="E", d=_largest(config.d_max, 1),
                                            epsilon=epsilon, constraint=_zero(index))))
    if "O" in config.families:
        branches.append(("O d=0", dict(family="O", d=0, epsilon=config.twists[0])))
        if config.d_max >= 2:
            d, epsilon = _largest(config.d_max, 0), config.twists[0]
            branches.append(("O a+b+c=(d+1)/2",
                             dict(family="O", d=d, epsilon=epsilon,
                                  constraint=_sigma_zero(d, epsilon))))
    return [(name, sample_spec(prng, config, **kwargs)) for name, kwargs in branches]


def evaluate_trial(spec, engine_seed=0):
    """
    Run every check of a sweep on one module.

    Returns
    -------
    reasons : list(str)
        Empty iff the module passes.

    """
    reasons = []
    try:
        h = build_module(spec)
        h_report = check_h_relations(h)
        if not h_report.ok:
            reasons.append("DAHA relations fail: {}".format(
                [name for name, _ in h_report.violations]))
        if h_report.central_squares != central_scalars(spec):
            reasons.append("central squares {} differ from {}".format(
                h_report.central_squares, central_scalars(spec)))
        r_report = check_racah_relations(zeta_pullback(h))
        if not r_report.ok:
            reasons.append("Racah relations fail: {}".format(
                [name for name, _ in r_report.violations]))

        report = LatticeEngine(seed=engine_seed).submodule_lattice(h)
        reasons.extend(compare_lattices(report, predicted_lattice(spec)))
        completely_reducible = report.is_completely_reducible()
        split_shape = report.shape in ("simple", "diamond")
        if not completely_reducible == report.t0_diagonalizable == split_shape:
            mesg = "complete reducibility {}, t0 diagonalizable {}, shape {}"
            reasons.append(mesg.format(completely_reducible, report.t0_diagonalizable,
                                       report.shape))
    except (PyRacahError, ValueError, ArithmeticError) as err:
        reasons.append("{}: {}".format(type(err).__name__, err))
    return reasons


def _evaluate(specs, jobs, engine_seed):
    seeds = [engine_seed] * len(specs)
    if jobs == 1:
        return list(map(evaluate_trial, specs, seeds))
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(evaluate_trial, specs, seeds))


def run_sweep(config):
    """
    Run a sweep.

    Specifications are drawn sequentially from a generator seeded with
    `config.seed` before any trial runs, and results are assembled in trial
    order, so the summary depends only on `config`.

    Returns
    -------
    summary : dict
        Keys trials, passed, skipped, injected, injected_passed, failures.

    """
    logger.info("sweep of %d trials over %s with seed %d", config.trials,
                ",".join(config.families), config.seed)
    prng = np.random.default_rng(config.seed)
    sampled = [sample_spec(prng, config) for _ in range(config.trials)]
    injected = injected_specs(prng, config)

    labelled = [(index, None, spec) for index, spec in enumerate(sampled)]
    labelled += [(config.trials + k, name, spec)
                 for k, (name, spec) in enumerate(injected)]
    runnable = [item for item in labelled if item[2] is not None]
    results = _evaluate([spec for _, _, spec in runnable], config.jobs, config.seed)

    failures, passed, injected_passed = [], 0, 0
    for (trial, branch, spec), reasons in zip(runnable, results):
        logger.debug("trial %d %s: %s", trial, format_spec(spec),
                     "ok" if not reasons else "; ".join(reasons))
        if not reasons:
            if branch is None:
                passed += 1
            else:
                injected_passed += 1
            continue
        record = {"trial": trial, "spec": format_spec(spec), "reasons": reasons}
        if branch is not None:
            record["branch"] = branch
        failures.append(record)

    summary = {"trials": config.trials,
               "passed": passed,
               "skipped": sum(1 for _, _, spec in labelled if spec is None),
               "injected": sum(1 for _, spec in injected if spec is not None),
               "injected_passed": injected_passed,
               "failures": failures}
    logger.info("sweep finished: %d/%d passed, %d skipped, %d failures",
                passed, config.trials, summary["skipped"], len(failures))
    return summary
