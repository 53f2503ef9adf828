"""Command-line interface.

All output is deterministic (no timestamps, no environment echo):
identical inputs produce byte-identical output.  Exit status: 0 on
success, 1 when a requested check fails or a search bound is exhausted,
2 on malformed or axiom-violating input.
"""

from __future__ import annotations

import argparse
import os
import sys

from .hopf import GrouplikeSet, HopfAlgebraData, OrderSearchExhausted, element_order
from .hopf import s2_order as _s2_order
from .hopf import validate as _validate
from .io import (
    SCHEMA,
    SchemaError,
    algebra_to_dict,
    dumps,
    read_algebra,
    read_twist,
)
from .presets import ZOO, get_preset
from .qexp import quasi_exponent
from .suite import format_suite, run_suite

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfqexp",
        description="Exact quasi-exponent computations for finite-dimensional "
                    "Hopf algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str, *, source: bool = True,
            twist: bool = False, bound: bool = False) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        if source:
            p.add_argument("--preset", help="preset name, e.g. taft:3")
            p.add_argument("--in", dest="input", metavar="FILE",
                           help="algebra JSON file")
        if twist:
            p.add_argument("--twist", required=True, metavar="FILE",
                           help="twist JSON file")
        if bound:
            p.add_argument("--bound", type=int, default=None,
                           help="root-of-unity search bound "
                                "(default: env HOPFQEXP_BOUND or automatic)")
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--out", metavar="FILE", help="write output here")
        return p

    add("validate", "check all Hopf algebra axioms")
    q = add("qexp", "quasi-exponent report", bound=True)
    q.add_argument("--cross-check", action="store_true",
                   help="confirm via the regular representation of u in D(H)")
    add("exponent", "exponent (finite value or 'infinite')", bound=True)
    add("s2-order", "multiplicative order of the antipode squared")
    add("grouplikes", "declared grouplike elements, orders, and exponent")
    add("double", "emit the Drinfeld double with its R-matrix")
    add("twist-check", "verify the twist axioms for a twist file", twist=True)
    add("twist-apply", "emit the twisted Hopf algebra", twist=True)
    add("preset", "emit a preset as JSON, or list all presets")
    s = add("suite", "run the full theorem suite", source=False)
    s.add_argument("--deep", action="store_true",
                   help="include the expensive cross-check items")
    s.add_argument("--max-dim", type=int, default=None,
                   help="skip presets above this dimension")
    return parser


def _emit(args, doc: dict, text: str) -> None:
    payload = dumps(doc) if args.format == "json" else text
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _resolve_bound(args) -> int | None:
    bound = getattr(args, "bound", None)
    if bound is not None:
        return bound
    env = os.environ.get("HOPFQEXP_BOUND")
    return int(env) if env else None


def _load_algebra(args, check: bool = True) -> HopfAlgebraData:
    if getattr(args, "preset", None) and getattr(args, "input", None):
        raise SchemaError("give either --preset or --in, not both")
    if getattr(args, "preset", None):
        try:
            return get_preset(args.preset)
        except ValueError as exc:
            raise SchemaError(str(exc)) from exc
    if getattr(args, "input", None):
        return read_algebra(args.input, check=check)
    raise SchemaError("an algebra is required: use --preset or --in")


def _cmd_validate(args) -> int:
    H = _load_algebra(args, check=False)
    violations = _validate(H)
    doc = {"schema": SCHEMA, "kind": "validation-report", "name": H.name,
           "dim": H.dim, "valid": not violations, "violations": violations}
    if violations:
        text = f"{H.name}: INVALID\n" + "".join(f"  {v}\n" for v in violations)
    else:
        text = f"{H.name}: valid Hopf algebra (dim {H.dim})\n"
    _emit(args, doc, text)
    return EXIT_BAD_INPUT if violations else EXIT_OK


def _qexp_report(args):
    H = _load_algebra(args)
    return quasi_exponent(H, cross_check=getattr(args, "cross_check", False),
                          bound=_resolve_bound(args))


def _cmd_qexp(args) -> int:
    rep = _qexp_report(args)
    doc = {"schema": SCHEMA, "kind": "qexp-report", **rep.to_dict()}
    text = (f"{rep.algebra}:\n"
            f"  qexp             {rep.qexp}\n"
            f"  exponent         {rep.exponent}\n"
            f"  s2_order         {rep.s2_order}\n"
            f"  unipotency_index {rep.unipotency_index}\n"
            f"  route            {rep.route}"
            f"{' (cross-checked)' if rep.cross_checked else ''}\n"
            f"  min poly deg     {rep.min_poly_u.degree}\n")
    _emit(args, doc, text)
    return EXIT_OK


def _cmd_exponent(args) -> int:
    rep = _qexp_report(args)
    doc = {"schema": SCHEMA, "kind": "exponent-report", "name": rep.algebra,
           "exponent": rep.exponent, "qexp": rep.qexp}
    _emit(args, doc, f"{rep.algebra}: exponent {rep.exponent}\n")
    return EXIT_OK


def _cmd_s2_order(args) -> int:
    H = _load_algebra(args)
    order = _s2_order(H)
    doc = {"schema": SCHEMA, "kind": "s2-order-report", "name": H.name,
           "s2_order": order}
    _emit(args, doc, f"{H.name}: s2_order {order}\n")
    return EXIT_OK


def _cmd_grouplikes(args) -> int:
    H = _load_algebra(args)
    if H.grouplike_vectors is None:
        doc = {"schema": SCHEMA, "kind": "grouplike-report", "name": H.name,
               "grouplikes": None}
        _emit(args, doc, f"{H.name}: no grouplike data attached\n")
        return EXIT_OK
    gset = GrouplikeSet.build(H, H.grouplike_vectors)
    orders = [element_order(g) for g in gset.elements]
    doc = {"schema": SCHEMA, "kind": "grouplike-report", "name": H.name,
           "count": len(gset), "orders": orders, "exponent": gset.exponent()}
    text = (f"{H.name}: {len(gset)} grouplikes, orders {orders}, "
            f"exponent {gset.exponent()}\n")
    _emit(args, doc, text)
    return EXIT_OK


def _cmd_double(args) -> int:
    from .double import drinfeld_double

    H = _load_algebra(args)
    qt = drinfeld_double(H)
    doc = algebra_to_dict(qt.algebra, r_matrix=qt.R)
    text = (f"D({H.name}): dim {qt.algebra.dim}, conductor "
            f"{qt.algebra.conductor}; use --format json for the full data\n")
    _emit(args, doc, text)
    return EXIT_OK


def _load_twist(args):
    algebra = None
    if getattr(args, "preset", None) or getattr(args, "input", None):
        algebra = _load_algebra(args)
    return read_twist(args.twist, algebra=algebra, check=False)


def _cmd_twist_check(args) -> int:
    from .twist import is_twist

    T = _load_twist(args)
    ok, details = is_twist(T.parent, T.J, T.J_inv)
    doc = {"schema": SCHEMA, "kind": "twist-report", "name": T.parent.name,
           "is_twist": ok, "violations": [] if ok else details}
    if ok:
        text = f"{T.parent.name}: valid twist\n"
    else:
        text = (f"{T.parent.name}: NOT a twist\n"
                + "".join(f"  {d}\n" for d in details))
    _emit(args, doc, text)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _cmd_twist_apply(args) -> int:
    from .twist import is_twist, make_twist, twist_hopf

    T = _load_twist(args)
    ok, details = is_twist(T.parent, T.J, T.J_inv)
    if not ok:
        sys.stderr.write("cannot apply: not a twist\n"
                         + "".join(f"  {d}\n" for d in details))
        return EXIT_CHECK_FAILED
    verified = make_twist(T.parent, T.J, T.J_inv)
    twisted = twist_hopf(verified)
    doc = algebra_to_dict(twisted)
    text = (f"{twisted.name}: dim {twisted.dim}, conductor "
            f"{twisted.conductor}; use --format json for the full data\n")
    _emit(args, doc, text)
    return EXIT_OK


def _cmd_preset(args) -> int:
    if not getattr(args, "preset", None) and not getattr(args, "input", None):
        doc = {"schema": SCHEMA, "kind": "preset-list", "presets": list(ZOO)}
        _emit(args, doc, "".join(f"{name}\n" for name in ZOO))
        return EXIT_OK
    H = _load_algebra(args)
    _emit(args, algebra_to_dict(H),
          f"{H.name}: dim {H.dim}, conductor {H.conductor}\n")
    return EXIT_OK


def _cmd_suite(args) -> int:
    items = run_suite(deep=args.deep, max_dim=args.max_dim)
    all_ok = all(i.passed for i in items)
    doc = {"schema": SCHEMA, "kind": "suite-report", "deep": args.deep,
           "max_dim": args.max_dim, "passed": all_ok,
           "items": [{"label": i.label, "passed": i.passed, "detail": i.detail}
                     for i in items]}
    _emit(args, doc, format_suite(items))
    return EXIT_OK if all_ok else EXIT_CHECK_FAILED


_COMMANDS = {
    "validate": _cmd_validate,
    "qexp": _cmd_qexp,
    "exponent": _cmd_exponent,
    "s2-order": _cmd_s2_order,
    "grouplikes": _cmd_grouplikes,
    "double": _cmd_double,
    "twist-check": _cmd_twist_check,
    "twist-apply": _cmd_twist_apply,
    "preset": _cmd_preset,
    "suite": _cmd_suite,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except SchemaError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BAD_INPUT
    except OrderSearchExhausted as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_CHECK_FAILED
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BAD_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
