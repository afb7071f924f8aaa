"""Command line front end.

Thin orchestration over the library: every command loads a document
(file path or catalog:NAME), calls the matching constructors and
verifiers, and prints one canonical JSON report.  Exit codes: 0 all
checks pass, 1 some check failed, 2 parse or shape error, 3 violated
precondition.
"""

from __future__ import annotations

import argparse
import re
import sys

from .actions import verify_module_algebra, verify_partial_action
from .algebras import endomorphism_algebra, matrix_as_endo_vec
from .catalog import CATALOG_NAMES, load_catalog
from .coactions import (
    action_from_coaction,
    coaction_from_action,
    enveloping_coaction,
    verify_partial_coaction,
)
from .errors import (
    CarrierEscape,
    CharTwo,
    ClosureViolation,
    DimensionMismatch,
    GroupAxiomViolation,
    InconsistentSystem,
    InvalidGroup,
    NoUnit,
    NotAnIdeal,
    NotARightIdeal,
    NotASubmodule,
    NotPrime,
    ParseError,
    PreconditionViolated,
    ShapeMismatch,
    SingularAntipode,
)
from .fields import QQ, PrimeField
from .globalization import is_bilateral, is_minimal, standard_enveloping, verify_enveloping
from .hopf import canonical_pairing, verify_hopf, verify_pairing
from .jsonio import (
    algebra_to_json,
    dump_canonical,
    error_to_json,
    hopf_to_json,
    load_document,
    report_to_json,
    ser_matrix,
    tensor_to_triples,
)
from .linalg import Matrix
from .reps import (
    canonical_rep_end,
    canonical_rep_smash,
    verify_group_partial_rep,
    verify_partial_rep,
)
from .smash import build_morita, morita_dims, verify_morita

PARSE_ERRORS = (ParseError, ShapeMismatch, DimensionMismatch)
PRECONDITION_ERRORS = (
    PreconditionViolated,
    NoUnit,
    NotARightIdeal,
    NotAnIdeal,
    NotASubmodule,
    SingularAntipode,
    CharTwo,
    NotPrime,
    InvalidGroup,
    GroupAxiomViolation,
    ClosureViolation,
    InconsistentSystem,
    CarrierEscape,
)


def _parse_field_flag(s: str):
    if s in ("rationals", "qq", "q"):
        return QQ
    m = re.fullmatch(r"(?:gf|p):?(\d+)", s)
    if m:
        return PrimeField(int(m.group(1)))
    raise ParseError(f"bad field {s!r}: use rationals or gf:<p>", where="--field")


def _resolve_target(ns) -> dict:
    """Load the document the command will work on; doc['field'] is always set."""
    name = None
    if ns.catalog is not None:
        if ns.target is not None:
            raise ParseError("give either a target or --catalog, not both", where="--catalog")
        name = ns.catalog
    elif ns.target is not None and ns.target.startswith("catalog:"):
        name = ns.target[len("catalog:"):]
    if name is not None:
        field = _parse_field_flag(ns.field) if ns.field is not None else None
        doc = load_catalog(name, field=field)
        doc["field"] = doc["hopf"].field
        return doc
    if ns.target is None:
        raise ParseError("no target given (file path or catalog:NAME)", where="target")
    if ns.field is not None:
        raise ParseError("--field only applies to catalog targets", where="--field")
    return load_document(ns.target)


def _get(doc, key, label=None):
    obj = doc.get(key)
    if obj is None:
        raise ParseError(f"document has no {label or key} block", where=key)
    return obj


def _get_action(doc):
    d = doc.get("action") or doc.get("partial_action")
    if d is None:
        raise ParseError("document has no action block", where="action")
    return d


def _get_partial(doc):
    return _get(doc, "partial_action", "partial action")


def _rep_target(doc):
    """Target algebra and one element per basis vector, from the pi block."""
    field = doc["field"]
    if "pi_matrices" in doc:
        mats = doc["pi_matrices"]
        n = mats[0].cols
        for m in mats:
            if m.rows != n or m.cols != n:
                raise ShapeMismatch("pi matrices must be square and equal-sized")
        return endomorphism_algebra(field, n), [matrix_as_endo_vec(m) for m in mats]
    if "pi_elements" in doc:
        return _get(doc, "algebra"), doc["pi_elements"]
    raise ParseError("document has no pi block", where="pi")


def _cols_to_matrix(field, cols, dim):
    return Matrix.from_cols(field, cols, rows=dim)


def _emit(ns, doc_json) -> int:
    text = dump_canonical(doc_json)
    if ns.output:
        with open(ns.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if doc_json.get("status") == "pass":
        return 0
    return 1


def cmd_validate(ns) -> int:
    doc = _resolve_target(ns)
    field = doc["field"]
    what = ns.what
    derived = None
    if what == "hopf":
        h = _get(doc, "hopf")
        rep = verify_hopf(h)
        derived = {"dim": h.dim}
    elif what == "action":
        rep = verify_module_algebra(_get_action(doc))
    elif what == "partial-action":
        rep = verify_partial_action(_get_partial(doc))
    elif what == "coaction":
        rep = verify_partial_coaction(_get(doc, "coaction"))
    elif what == "pairing":
        p = doc.get("pairing")
        if p is None:
            p = canonical_pairing(_get(doc, "hopf"))
        rep = verify_pairing(p, require_nondegenerate=True)
    elif what == "group-rep":
        g = _get(doc, "group")
        target, cols = _rep_target(doc)
        if len(cols) != g.order:
            raise ShapeMismatch(f"need one element per group element ({g.order})")
        rep = verify_group_partial_rep(g, target, cols)
    elif what == "hopf-rep":
        h = _get(doc, "hopf")
        target, cols = _rep_target(doc)
        if len(cols) != h.dim:
            raise ShapeMismatch(f"need one element per basis vector ({h.dim})")
        rep = verify_partial_rep(h, target, _cols_to_matrix(field, cols, target.dim))
    else:  # pragma: no cover - argparse restricts choices
        raise ParseError(f"unknown validation target {what!r}", where="what")
    return _emit(ns, report_to_json(rep, "validate", field, derived))


def cmd_globalize(ns) -> int:
    doc = _resolve_target(ns)
    field = doc["field"]
    d = _get_partial(doc)
    pre = verify_partial_action(d)
    if not pre.ok:
        return _emit(ns, report_to_json(pre, "globalize", field))
    env = standard_enveloping(d, check=False)
    rep = verify_enveloping(env)
    derived = {
        "envelope": algebra_to_json(field, env.glob.algebra),
        "act": tensor_to_triples(field, env.glob.act),
        "theta": ser_matrix(field, env.theta),
    }
    if ns.check_minimal:
        derived["minimal"] = is_minimal(env)
    if ns.bilateral:
        derived["bilateral"] = is_bilateral(d)
    return _emit(ns, report_to_json(rep, "globalize", field, derived))


def cmd_morita(ns) -> int:
    doc = _resolve_target(ns)
    field = doc["field"]
    d = _get_partial(doc)
    env = standard_enveloping(d)
    ctx = build_morita(env)
    rep = verify_morita(ctx)
    derived = {"dims": morita_dims(ctx)}
    return _emit(ns, report_to_json(rep, "morita", field, derived))


def _tensor_diff_check(rep, name, got, want):
    chk = rep.new_check(name)
    for i, plane in enumerate(want):
        for j, row in enumerate(plane):
            for k, v in enumerate(row):
                chk.require(got[i][j][k] == v, (i, j, k), got[i][j][k], v)


def cmd_dualize(ns) -> int:
    doc = _resolve_target(ns)
    field = doc["field"]
    if ns.direction == "to-coaction":
        d = _get_partial(doc)
        c = coaction_from_action(d)
        rep = verify_partial_coaction(c)
        back = action_from_coaction(c, canonical_pairing(c.hopf))
        _tensor_diff_check(rep, "round-trip", back.act, d.act)
        derived = {
            "rho": tensor_to_triples(field, c.rho),
            "partial": c.partial,
            "dual_hopf": hopf_to_json(field, c.hopf),
        }
        cobj = c
    else:
        c = _get(doc, "coaction")
        d2 = action_from_coaction(c, canonical_pairing(c.hopf))
        rep = verify_partial_action(d2)
        back = coaction_from_action(d2)
        _tensor_diff_check(rep, "round-trip", back.rho, c.rho)
        derived = {
            "act": tensor_to_triples(field, d2.act),
            "acting_hopf": hopf_to_json(field, d2.hopf),
        }
        cobj = c
    if ns.envelope:
        cb, theta, erep = enveloping_coaction(cobj)
        rep.absorb(erep)
        derived["envelope"] = {
            "algebra": algebra_to_json(field, cb.algebra),
            "rho": tensor_to_triples(field, cb.rho),
            "theta": ser_matrix(field, theta),
        }
    return _emit(ns, report_to_json(rep, "dualize", field, derived))


def cmd_rep_check(ns) -> int:
    doc = _resolve_target(ns)
    field = doc["field"]
    if ns.canonical is not None:
        d = _get_partial(doc)
        if ns.canonical == "end":
            target, piM = canonical_rep_end(d)
        else:
            ps, piM = canonical_rep_smash(d)
            target = ps.algebra
        if ns.kind == "hopf":
            rep = verify_partial_rep(d.hopf, target, piM)
        else:
            g = _get(doc, "group")
            if g.order != piM.cols:
                raise ShapeMismatch("group order must match the Hopf dimension")
            rep = verify_group_partial_rep(g, target, [piM.col(i) for i in range(piM.cols)])
        derived = {"target_dim": target.dim, "pi": ser_matrix(field, piM)}
    else:
        target, cols = _rep_target(doc)
        if ns.kind == "hopf":
            h = _get(doc, "hopf")
            if len(cols) != h.dim:
                raise ShapeMismatch(f"need one element per basis vector ({h.dim})")
            rep = verify_partial_rep(h, target, _cols_to_matrix(field, cols, target.dim))
        else:
            g = _get(doc, "group")
            if len(cols) != g.order:
                raise ShapeMismatch(f"need one element per group element ({g.order})")
            rep = verify_group_partial_rep(g, target, cols)
        derived = {"target_dim": target.dim}
    return _emit(ns, report_to_json(rep, "rep-check", field, derived))


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="partialhopf",
        description="Verify and construct partial Hopf actions from structure constants.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("target", nargs="?", help="input JSON file or catalog:NAME")
    common.add_argument("--catalog", metavar="NAME",
                        help="named example (%s)" % ", ".join(CATALOG_NAMES))
    common.add_argument("--field", metavar="F",
                        help="field for catalog targets: rationals or gf:<p>")
    common.add_argument("--output", metavar="FILE", help="write the report here")
    sub = top.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", parents=[common], help="check structure axioms")
    v.add_argument("what", choices=["hopf", "action", "partial-action", "coaction",
                                    "pairing", "group-rep", "hopf-rep"])
    v.set_defaults(func=cmd_validate)

    g = sub.add_parser("globalize", parents=[common],
                       help="build and verify the standard enveloping action")
    g.add_argument("--check-minimal", action="store_true", dest="check_minimal")
    g.add_argument("--bilateral", action="store_true")
    g.set_defaults(func=cmd_globalize)

    m = sub.add_parser("morita", parents=[common],
                       help="build and verify the Morita context")
    m.set_defaults(func=cmd_morita)

    du = sub.add_parser("dualize", parents=[common],
                        help="turn an action into a coaction or back")
    du.add_argument("direction", choices=["to-coaction", "to-action"])
    du.add_argument("--envelope", action="store_true",
                    help="also build the enveloping coaction")
    du.set_defaults(func=cmd_dualize)

    r = sub.add_parser("rep-check", parents=[common],
                       help="verify a partial representation")
    r.add_argument("kind", choices=["group", "hopf"])
    r.add_argument("--canonical", choices=["end", "smash"],
                   help="derive the representation from the partial action")
    r.set_defaults(func=cmd_rep_check)
    return top


def main(argv=None) -> int:
    ns = _build_parser().parse_args(argv)
    try:
        return ns.func(ns)
    except PARSE_ERRORS as exc:
        _emit(ns, error_to_json(ns.command, exc))
        return 2
    except PRECONDITION_ERRORS as exc:
        _emit(ns, error_to_json(ns.command, exc))
        return 3


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
