"""
Command-line interface: build, verify, lattice and sweep.

Exit codes are 0 on success, 1 when a verification fails, 2 on usage or
parse errors, 3 when a reducible module is refused and 4 when an internal
invariant is breached.

@author : davidrpugh

"""
import argparse
import logging
import sys

from . algebras import (HRepLike, bi_triple, check_anticommutator_identities,
                        check_h_relations, check_racah_relations,
                        check_t0_centralizes, zeta_pullback)
from . exceptions import (DocumentError, LatticeInvariantError,
                          ReducibleModuleError, SpecError)
from . lattices import LatticeEngine, compare_lattices, predicted_lattice
from . linalg import format_rational
from . modules import EPSILONS, build_module, irreducibility_criterion, parse_spec
from . serialization import (dumps, lattice_report_to_json, load_module,
                             module_to_json, predicted_lattice_to_json,
                             relation_report_to_json)
from . sweeps import run_sweep, sweep_config

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_REDUCIBLE, EXIT_INTERNAL = range(5)


def _emit(text, out=None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as handle:
            handle.write(text)


def cmd_build(args):
    spec = parse_spec(args.spec)
    _emit(dumps(module_to_json(build_module(spec))), args.out)
    return EXIT_OK


def cmd_verify(args):
    rep = load_module(args.path)
    if isinstance(rep, HRepLike):
        pullback = zeta_pullback(rep)
        reports = {"h_relations": check_h_relations(rep),
                   "racah_relations": check_racah_relations(pullback),
                   "bi_relations": bi_triple(rep)[3]}
        extra = {"t0_centralizes": check_t0_centralizes(rep, pullback),
                 "anticommutators": check_anticommutator_identities(rep)}
    else:
        reports = {"racah_relations": check_racah_relations(rep)}
        extra = {}
    document = {name: relation_report_to_json(report)
                for name, report in reports.items()}
    document.update(extra)
    ok = all(report.ok for report in reports.values()) and all(extra.values())
    document["ok"] = ok
    _emit(dumps(document), args.out)
    return EXIT_OK if ok else EXIT_FAILED


def _lattice_text(report, mismatches):
    lines = ["shape: {}".format(report.shape),
             "node dims: {}".format(" ".join(str(d) for d in report.node_dims)),
             "hasse edges: {}".format(" ".join("{}<{}".format(i, j)
                                                for i, j in report.hasse_edges)),
             "t0 diagonalizable: {}".format(report.t0_diagonalizable)]
    for theta, (geo, alg) in report.eigen_data.items():
        lines.append("V({}): geometric {} algebraic {}".format(
            format_rational(theta), geo, alg))
    for (lower, upper), tag in report.subquotients.items():
        status = "verified" if tag.verified else "unverified ({})".format(tag.note)
        lines.append("{}/{} = R_{}({}, {}, {}) {}".format(
            upper, lower, tag.d_prime, tag.a_prime, tag.b_prime, tag.c_prime, status))
    if mismatches is not None:
        lines.append("matches prediction: {}".format(not mismatches))
        lines.extend("  " + mismatch for mismatch in mismatches)
    return "\n".join(lines) + "\n"


def cmd_lattice(args):
    spec = parse_spec(args.spec)
    if spec.family == "R":
        raise SpecError("the lattice command requires family E or O")
    if not irreducibility_criterion(spec):
        raise ReducibleModuleError("{} fails the irreducibility criterion".format(args.spec))
    report = LatticeEngine(seed=args.seed).submodule_lattice(build_module(spec))
    mismatches = None
    if args.expect:
        predicted = predicted_lattice(spec)
        mismatches = compare_lattices(report, predicted)
    if args.json:
        document = lattice_report_to_json(report)
        if mismatches is not None:
            document["expected"] = predicted_lattice_to_json(predicted)
            document["mismatches"] = mismatches
        _emit(dumps(document), args.out)
    else:
        _emit(_lattice_text(report, mismatches), args.out)
    return EXIT_FAILED if mismatches else EXIT_OK


def _twists(text):
    try:
        return tuple(EPSILONS[item.strip()] for item in text.split(","))
    except KeyError as err:
        raise argparse.ArgumentTypeError("unknown twist {}".format(err))


def cmd_sweep(args):
    config = sweep_config(families=[f.strip() for f in args.families.split(",")],
                          twists=args.twists, d_max=args.dmax, trials=args.trials,
                          seed=args.seed, denominator_bound=args.denominator_bound,
                          max_retries=args.max_retries, jobs=args.jobs)
    summary = run_sweep(config)
    _emit(dumps(summary), args.out)
    return EXIT_OK if not summary["failures"] else EXIT_FAILED


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0, help="random seed")
    common.add_argument("-o", "--out", default=None, help="output file (default stdout)")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging")

    parser = argparse.ArgumentParser(
        prog="pyracah", description="Racah submodule lattices of DAHA modules.")
    commands = parser.add_subparsers(dest="command")
    commands.required = True

    build = commands.add_parser("build", parents=[common],
                                help="write the matrices of a catalog module")
    build.add_argument("spec", help='e.g. "E:d=3,a=2,b=3,c=7,eps=+-"')
    build.set_defaults(handler=cmd_build)

    verify = commands.add_parser("verify", parents=[common],
                                 help="check the defining relations of a module file")
    verify.add_argument("path")
    verify.set_defaults(handler=cmd_verify)

    lattice = commands.add_parser("lattice", parents=[common],
                                  help="compute the lattice of Racah submodules")
    lattice.add_argument("spec")
    lattice.add_argument("--expect", action="store_true",
                         help="compare with the predicted lattice")
    lattice.set_defaults(handler=cmd_lattice)

    sweep = commands.add_parser("sweep", parents=[common],
                                help="compare lattices at random parameters")
    sweep.add_argument("--families", default="E,O")
    sweep.add_argument("--twists", type=_twists, default=tuple(EPSILONS.values()))
    sweep.add_argument("--dmax", type=int, default=9)
    sweep.add_argument("--trials", type=int, default=100)
    sweep.add_argument("--denominator-bound", type=int, default=10)
    sweep.add_argument("--max-retries", type=int, default=100)
    sweep.add_argument("--jobs", type=int, default=1)
    sweep.set_defaults(handler=cmd_sweep)
    return parser


def main(argv=None):
    """
    Run the command line interface.

    Returns
    -------
    code : int
        The process exit code.

    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s",
                        force=True)
    try:
        return args.handler(args)
    except ReducibleModuleError as err:
        logger.error("%s", err)
        return EXIT_REDUCIBLE
    except LatticeInvariantError as err:
        logger.error("internal invariant breached: %s", err)
        return EXIT_INTERNAL
    except (SpecError, DocumentError, ValueError, OSError) as err:
        logger.error("%s", err)
        return EXIT_USAGE
