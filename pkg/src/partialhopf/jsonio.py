"""JSON input documents and canonical report serialization.

Tensors travel as sparse triples [i, j, k, num] or [i, j, k, num, den];
vectors and matrices are dense, with scalars written as integers or
"num/den" strings.  Reports are emitted with sorted keys and scalars in
lowest terms, so identical inputs give identical bytes.
"""

from __future__ import annotations

import json

from .actions import ActionData, PartialActionData, RightIdealSpec
from .algebras import AlgebraData
from .coactions import CoactionData
from .errors import ParseError
from .fields import field_to_json, parse_field
from .groups import CayleyTable
from .hopf import CoalgebraData, HopfData, PairingData, dual_hopf
from .linalg import Matrix, Subspace


def _require(obj, key, where):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"missing key {key!r}", where=where)
    return obj[key]


def _parse_scalar(field, obj, where):
    try:
        return field.parse(obj)
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(f"bad scalar {obj!r}: {exc}", where=where) from None


def parse_vector(field, obj, n, where):
    if not isinstance(obj, list) or len(obj) != n:
        raise ParseError(f"expected a vector of length {n}", where=where)
    return [_parse_scalar(field, x, f"{where}[{i}]") for i, x in enumerate(obj)]


def parse_matrix(field, obj, rows, cols, where):
    if not isinstance(obj, list) or len(obj) != rows:
        raise ParseError(f"expected {rows} matrix rows", where=where)
    data = [parse_vector(field, r, cols, f"{where}[{i}]") for i, r in enumerate(obj)]
    return Matrix(field, data, cols=cols)


def parse_triples(field, obj, n1, n2, n3, where):
    """Sparse [i,j,k,num(,den)] entries into a dense tensor; duplicates add."""
    if not isinstance(obj, list):
        raise ParseError("expected a list of sparse entries", where=where)
    t = [[[field.zero] * n3 for _ in range(n2)] for _ in range(n1)]
    for e, entry in enumerate(obj):
        w = f"{where}[{e}]"
        if not isinstance(entry, list) or len(entry) not in (4, 5):
            raise ParseError("entry must be [i,j,k,num] or [i,j,k,num,den]", where=w)
        i, j, k = entry[0], entry[1], entry[2]
        for idx, bound in ((i, n1), (j, n2), (k, n3)):
            if not isinstance(idx, int) or isinstance(idx, bool) or not 0 <= idx < bound:
                raise ParseError(f"index {idx!r} out of range (bound {bound})", where=w)
        if len(entry) == 4:
            v = _parse_scalar(field, entry[3], w)
        else:
            v = _parse_scalar(field, [entry[3], entry[4]], w)
        t[i][j][k] = t[i][j][k] + v
    return t


def parse_hopf(field, obj, where="hopf") -> HopfData:
    dim = _require(obj, "dim", where)
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ParseError("dim must be a positive integer", where=f"{where}.dim")
    names = obj.get("basis", [f"b{i}" for i in range(dim)])
    if not isinstance(names, list) or len(names) != dim or not all(isinstance(s, str) for s in names):
        raise ParseError("basis must list one name per dimension", where=f"{where}.basis")
    mult = parse_triples(field, _require(obj, "mult", where), dim, dim, dim, f"{where}.mult")
    unit = parse_vector(field, _require(obj, "unit", where), dim, f"{where}.unit")
    comult = parse_triples(field, _require(obj, "comult", where), dim, dim, dim, f"{where}.comult")
    counit = parse_vector(field, _require(obj, "counit", where), dim, f"{where}.counit")
    antipode = parse_matrix(field, _require(obj, "antipode", where), dim, dim, f"{where}.antipode")
    alg = AlgebraData(field, dim, names, mult, unit)
    return HopfData(alg, CoalgebraData(dim, comult, counit), antipode)


def parse_algebra(field, obj, where="algebra") -> AlgebraData:
    dim = _require(obj, "dim", where)
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ParseError("dim must be a positive integer", where=f"{where}.dim")
    names = obj.get("basis", [f"a{i}" for i in range(dim)])
    if not isinstance(names, list) or len(names) != dim or not all(isinstance(s, str) for s in names):
        raise ParseError("basis must list one name per dimension", where=f"{where}.basis")
    mult = parse_triples(field, _require(obj, "mult", where), dim, dim, dim, f"{where}.mult")
    unit = obj.get("unit")
    if unit is not None:
        unit = parse_vector(field, unit, dim, f"{where}.unit")
    return AlgebraData(field, dim, names, mult, unit)


def parse_document(doc: dict) -> dict:
    """An InputDocument into constructed objects, keyed like catalog entries."""
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object", where="$")
    field = parse_field(_require(doc, "field", "$"))
    out = {"field": field}

    hopf = None
    if "hopf" in doc:
        hopf = parse_hopf(field, doc["hopf"])
        out["hopf"] = hopf
    algebra = None
    if "algebra" in doc:
        algebra = parse_algebra(field, doc["algebra"])
        out["algebra"] = algebra

    def need_hopf(where):
        if hopf is None:
            raise ParseError("document has no hopf block", where=where)
        return hopf

    def need_algebra(where):
        if algebra is None:
            raise ParseError("document has no algebra block", where=where)
        return algebra

    for key, cls in (("action", ActionData), ("partial_action", PartialActionData)):
        if key in doc:
            h = need_hopf(key)
            a = need_algebra(key)
            act = parse_triples(field, _require(doc[key], "act", key), h.dim, a.dim, a.dim, f"{key}.act")
            out[key] = cls(h, a, act)
    if "partial_action" not in out and "action" in out and out["action"].algebra.unit is not None:
        out["partial_action"] = PartialActionData(
            out["action"].hopf, out["action"].algebra, out["action"].act
        )

    if "coaction" in doc:
        h = need_hopf("coaction")
        a = need_algebra("coaction")
        block = doc["coaction"]
        rho = parse_triples(field, _require(block, "rho", "coaction"), a.dim, a.dim, h.dim, "coaction.rho")
        partial = block.get("partial", True)
        if not isinstance(partial, bool):
            raise ParseError("partial must be a boolean", where="coaction.partial")
        out["coaction"] = CoactionData(h, a, rho, partial=partial)

    if "ideal" in doc:
        a = need_algebra("ideal")
        block = doc["ideal"]
        basis = _require(block, "basis", "ideal")
        if not isinstance(basis, list) or not basis:
            raise ParseError("ideal basis must be a nonempty list of vectors", where="ideal.basis")
        vecs = [parse_vector(field, v, a.dim, f"ideal.basis[{i}]") for i, v in enumerate(basis)]
        unit = parse_vector(field, _require(block, "unit", "ideal"), a.dim, "ideal.unit")
        out["ideal"] = RightIdealSpec(a, Subspace.span(field, vecs, a.dim), unit)

    if "pairing" in doc:
        h = need_hopf("pairing")
        gram = parse_matrix(field, _require(doc["pairing"], "gram", "pairing"), h.dim, h.dim, "pairing.gram")
        out["pairing"] = PairingData(h, dual_hopf(h), gram)

    if "group" in doc:
        table = _require(doc["group"], "table", "group")
        if not isinstance(table, list) or not table:
            raise ParseError("group table must be a nonempty list of rows", where="group.table")
        n = len(table)
        for i, row in enumerate(table):
            if not isinstance(row, list) or len(row) != n:
                raise ParseError("group table must be square", where=f"group.table[{i}]")
        names = doc["group"].get("names")
        out["group"] = CayleyTable(n, table, names)

    if "pi" in doc:
        block = doc["pi"]
        if "matrices" in block:
            mats = block["matrices"]
            if not isinstance(mats, list) or not mats:
                raise ParseError("pi.matrices must be a nonempty list", where="pi.matrices")
            n = len(mats[0]) if isinstance(mats[0], list) else 0
            out["pi_matrices"] = [
                parse_matrix(field, m, n, n, f"pi.matrices[{i}]") for i, m in enumerate(mats)
            ]
        elif "elements" in block:
            els = block["elements"]
            if not isinstance(els, list) or not els:
                raise ParseError("pi.elements must be a nonempty list", where="pi.elements")
            a = need_algebra("pi")
            out["pi_elements"] = [
                parse_vector(field, v, a.dim, f"pi.elements[{i}]") for i, v in enumerate(els)
            ]
        else:
            raise ParseError("pi needs matrices or elements", where="pi")

    return out


def load_document(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}", where=path) from None
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}", where=path) from None
    return parse_document(doc)


# serialization

def ser_scalar(field, x) -> str:
    return field.format(x)


def ser_vector(field, v):
    return [field.format(x) for x in v]


def ser_matrix(field, m: Matrix):
    return [ser_vector(field, row) for row in m.data]


def _num_den(field, x):
    s = field.format(x)
    if "/" in s:
        a, b = s.split("/")
        return int(a), int(b)
    return int(s), 1


def tensor_to_triples(field, t):
    out = []
    for i, plane in enumerate(t):
        for j, row in enumerate(plane):
            for k, v in enumerate(row):
                if v:
                    num, den = _num_den(field, v)
                    out.append([i, j, k, num, den])
    return out


def _ser_value(field, v):
    if v is None:
        return None
    if isinstance(v, str):
        return v
    if isinstance(v, Matrix):
        return ser_matrix(field, v)
    if isinstance(v, (list, tuple)):
        return [_ser_value(field, x) for x in v]
    if isinstance(v, bool):
        return v
    if isinstance(v, int):
        return str(v)
    return field.format(v)


def report_to_json(report, command: str, field, derived=None) -> dict:
    checks = []
    for c in report.checks:
        entry = {
            "name": c.name,
            "status": "pass" if c.ok else "fail",
            "failing_instances": [
                {
                    "at": list(f.at),
                    "lhs": _ser_value(field, f.lhs),
                    "rhs": _ser_value(field, f.rhs),
                }
                for f in c.failures
            ],
        }
        checks.append(entry)
    doc = {
        "command": command,
        "subject": report.subject,
        "status": "pass" if report.ok else "fail",
        "checks": checks,
    }
    if derived is not None:
        doc["derived_objects"] = derived
    return doc


def error_to_json(command: str, exc: Exception) -> dict:
    return {
        "command": command,
        "status": "error",
        "error": {"type": type(exc).__name__, "message": str(exc)},
    }


def dump_canonical(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def hopf_to_json(field, h: HopfData) -> dict:
    return {
        "dim": h.dim,
        "basis": list(h.basis_names),
        "mult": tensor_to_triples(field, h.mult),
        "unit": ser_vector(field, h.unit),
        "comult": tensor_to_triples(field, h.comult),
        "counit": ser_vector(field, h.counit),
        "antipode": ser_matrix(field, h.antipode),
        "field": field_to_json(field),
    }


def algebra_to_json(field, a: AlgebraData) -> dict:
    return {
        "dim": a.dim,
        "basis": list(a.basis_names),
        "mult": tensor_to_triples(field, a.mult),
        "unit": None if a.unit is None else ser_vector(field, a.unit),
    }
