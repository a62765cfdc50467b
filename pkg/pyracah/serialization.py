"""
JSON encodings of matrices, modules, relation reports and lattices.

Rationals are written as strings "p/q" ("p" when q = 1) so that every
document round-trips exactly.

@author : davidrpugh

"""
import json

from . algebras import HRep, HRepLike, RacahRep
from . exceptions import DocumentError, SpecError
from . linalg import RatMatrix, format_rational, to_rational
from . modules import EPSILONS, format_epsilon, module_spec


def dumps(document):
    """Canonical text of a JSON document."""
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def matrix_to_json(m):
    return [[format_rational(x) for x in row] for row in m.rows]


def matrix_from_json(data, name="matrix"):
    """
    Decode an array of arrays of rational strings.

    Raises
    ------
    DocumentError
        If `data` is not a rectangular array of rationals.

    """
    if not isinstance(data, list) or not all(isinstance(row, list) for row in data):
        mesg = "{} must be an array of arrays, got {!r}."
        raise DocumentError(mesg.format(name, data))
    try:
        rows = [[to_rational(x) for x in row] for row in data]
        ncols = len(rows[0]) if rows else 0
        return RatMatrix(rows, ncols)
    except (ValueError, TypeError) as err:
        mesg = "{} is not a rational matrix: {}"
        raise DocumentError(mesg.format(name, err))


def spec_to_json(spec):
    return {"family": spec.family, "d": spec.d, "a": format_rational(spec.a),
            "b": format_rational(spec.b), "c": format_rational(spec.c),
            "epsilon": format_epsilon(spec.epsilon)}


def spec_from_json(data):
    try:
        epsilon = EPSILONS[data.get("epsilon", "++")]
        return module_spec(data["family"], data["d"], data["a"], data["b"],
                           data["c"], epsilon)
    except (KeyError, TypeError, AttributeError, SpecError) as err:
        mesg = "malformed meta record {!r}: {}"
        raise DocumentError(mesg.format(data, err))


def module_to_json(rep):
    """Encode an HRep or a RacahRep."""
    if isinstance(rep, HRepLike):
        names = HRepLike.GENERATOR_NAMES
        document = {name: matrix_to_json(m) for name, m in zip(names, rep.generators)}
    else:
        document = {name: matrix_to_json(m)
                    for name, m in zip("ABC", (rep.A, rep.B, rep.C))}
        if rep.delta is not None:
            document["delta"] = format_rational(rep.delta)
    document["dim"] = rep.dim
    if rep.meta is not None:
        document["meta"] = spec_to_json(rep.meta)
    return document


def module_from_json(document):
    """
    Decode a module document.

    The presence of "t0" selects an HRep and the presence of "A" a RacahRep.

    Raises
    ------
    DocumentError

    """
    if not isinstance(document, dict):
        raise DocumentError("a module document must be a JSON object")
    meta = document.get("meta")
    meta = spec_from_json(meta) if meta is not None else None
    if "t0" in document:
        names, cls = HRepLike.GENERATOR_NAMES, HRep
        kwargs = {}
    elif "A" in document:
        names, cls = ("A", "B", "C"), RacahRep
        kwargs = {"delta": document.get("delta")}
    else:
        raise DocumentError("a module document needs either 't0' or 'A'")
    missing = [name for name in names if name not in document]
    if missing:
        raise DocumentError("missing generators {}".format(missing))
    matrices = [matrix_from_json(document[name], name) for name in names]
    try:
        rep = cls(*matrices, meta=meta, **kwargs)
    except ValueError as err:
        raise DocumentError(str(err))
    if "dim" in document and document["dim"] != rep.dim:
        mesg = "dim is {} but the matrices are {}x{}"
        raise DocumentError(mesg.format(document["dim"], rep.dim, rep.dim))
    return rep


def load_module(path):
    """Read a module document from a file."""
    with open(path) as handle:
        try:
            document = json.load(handle)
        except ValueError as err:
            raise DocumentError("{} is not valid JSON: {}".format(path, err))
    return module_from_json(document)


def relation_report_to_json(report):
    document = {"ok": report.ok,
                "violations": [{"name": name, "residual": matrix_to_json(residual)}
                               for name, residual in report.violations]}
    for key in ("h_sum_ok", "racah_d_ok", "central_elements_ok"):
        value = getattr(report, key)
        if value is not None:
            document[key] = value
    if report.central_squares is not None:
        document["central_squares"] = [format_rational(x) for x in report.central_squares]
    for key in ("alpha", "beta", "gamma"):
        value = getattr(report, key)
        if value is not None:
            document[key] = format_rational(value)
    return document


def _tag_to_json(tag):
    def fmt(x):
        return None if x is None else format_rational(x)
    return {"d": tag.d_prime, "a": fmt(tag.a_prime), "b": fmt(tag.b_prime),
            "c": fmt(tag.c_prime), "verified": tag.verified}


def lattice_report_to_json(report):
    """
    Encode a LatticeReport.

    Each subquotient record names the covering pair as (lower, node) with
    node the index of the upper subspace.

    """
    subquotients = []
    for (lower, upper), tag in report.subquotients.items():
        record = _tag_to_json(tag)
        record.update(lower=lower, node=upper)
        if tag.note:
            record["note"] = tag.note
        subquotients.append(record)
    return {"shape": report.shape,
            "t0_diagonalizable": report.t0_diagonalizable,
            "nodes": [{"dim": node.dim, "basis": matrix_to_json(node.basis)}
                      for node in report.nodes],
            "hasse_edges": [[lower, upper] for lower, upper in report.hasse_edges],
            "eigen": {format_rational(theta): {"geo": geo, "alg": alg}
                      for theta, (geo, alg) in report.eigen_data.items()},
            "factors": list(report.composition_factor_dims),
            "subquotients": subquotients}


def predicted_lattice_to_json(predicted):
    return {"shape": predicted.shape,
            "node_dims": list(predicted.node_dims),
            "edge_dims": [list(edge) for edge in predicted.edge_dims],
            "eigen": {format_rational(theta): {"geo": geo, "alg": alg}
                      for theta, (geo, alg) in predicted.eigen_data.items()},
            "subquotients": [{"lower": lower, "upper": upper, "d": d,
                              "a": format_rational(a), "b": format_rational(b),
                              "c": format_rational(c)}
                             for lower, upper, d, a, b, c in predicted.subquotients]}
