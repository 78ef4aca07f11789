"""Command line front end.

Spaces are given either as a builtin name (``flag:4``, ``grassmann:4:2``,
``cp:3``, ``m10:J1``) or as a JSON space file::

    {"name": "G(4,2)", "rank": 4, "mode": "unitary_quotient",
     "blocks": [[1, 2], [3, 4]],
     "identity_weights": [[1, 0, -1, 0], [1, 0, 0, -1], [0, 1, -1, 0], [0, 1, 0, -1]]}

    {"name": "CP1", "rank": 2, "mode": "explicit",
     "fixed_points": [{"sign": 1, "weights": [[1, -1]]},
                      {"sign": 1, "weights": [[-1, 1]]}]}

Exit codes: 0 success, 1 usage, parse or range error, 2 constraint violation.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import __version__
from .divdiff import flag_class_exact, grassmann_class_exact
from .errors import (
    BadParameters,
    ConstraintViolation,
    InputError,
    OutOfRange,
    ParseError,
    SingularPoint,
    ToricGenusError,
)
from .exactalg import CobordismClass
from .genus import cobordism_class, s_number, verify_constraints, fixed_point_table
from .rootdata import (
    BlockPartition,
    ExplicitFixedPoints,
    FixedPointDatum,
    NamedUnitaryQuotient,
    builtin_space,
    euler_characteristic,
)
from .symmchern import chern_label, omegas, partition_from_omega, s_to_chern

EXIT_OK, EXIT_INPUT, EXIT_CONSTRAINT = 0, 1, 2

_INT_ARRAY = re.compile(r"\[\s*(-?\d+(?:,\s*-?\d+)*)\s*\]")
_BUILTIN = re.compile(
    r"^(?:(flag):(\d+)|(grassmann):(\d+):(\d+)|(cp):(\d+)|(m10):(J[123]))$", re.IGNORECASE)


# -- input ------------------------------------------------------------------


@dataclass(frozen=True)
class SpaceInput:
    label: str
    spec: object
    builtin: Optional[tuple] = None  # (kind, *params) for builtin names


def parse_builtin(text: str) -> Optional[tuple]:
    m = _BUILTIN.match(text.strip())
    if not m:
        return None
    g = [x for x in m.groups() if x is not None]
    kind = g[0].lower()
    if kind == "m10":
        return (kind, g[1].upper())
    return (kind,) + tuple(int(v) for v in g[1:])


def _int_vector(v, what):
    if not isinstance(v, list) or not all(isinstance(c, int) and not isinstance(c, bool) for c in v):
        raise ParseError(f"{what} must be a list of integers, got {v!r}")
    return tuple(v)


def space_from_document(doc) -> object:
    """Build a space from a parsed space-file document (1-based blocks)."""
    if not isinstance(doc, dict):
        raise ParseError("space file must hold a JSON object")
    name = doc.get("name", "")
    rank = doc.get("rank")
    if not isinstance(rank, int) or isinstance(rank, bool) or rank < 1:
        raise ParseError(f"rank must be a positive integer, got {rank!r}")
    mode = doc.get("mode")
    if mode == "unitary_quotient":
        for key in ("blocks", "identity_weights"):
            if not isinstance(doc.get(key), list):
                raise ParseError(f"unitary_quotient needs a list {key!r}")
        blocks = [list(_int_vector(b, "block")) for b in doc["blocks"]]
        weights = [_int_vector(w, "weight") for w in doc["identity_weights"]]
        return NamedUnitaryQuotient(rank, BlockPartition.from_one_based(blocks), weights,
                                    name=name, strict=bool(doc.get("strict", False)))
    if mode == "explicit":
        pts = doc.get("fixed_points")
        if not isinstance(pts, list) or not pts:
            raise ParseError("explicit mode needs a non-empty list 'fixed_points'")
        table = []
        for p in pts:
            if not isinstance(p, dict) or "sign" not in p or "weights" not in p:
                raise ParseError(f"fixed point entries need 'sign' and 'weights', got {p!r}")
            table.append(FixedPointDatum(p["sign"], [_int_vector(w, "weight") for w in p["weights"]]))
        return ExplicitFixedPoints(rank, tuple(table), name=name)
    raise ParseError(f"mode must be 'unitary_quotient' or 'explicit', got {mode!r}")


def load_space(arg: str) -> SpaceInput:
    builtin = parse_builtin(arg)
    if builtin is not None and not os.path.exists(arg):
        return SpaceInput(arg, builtin_space(*builtin), builtin)
    try:
        with open(arg, encoding="utf-8") as fh:
            doc = json.load(fh)
    except FileNotFoundError:
        raise ParseError(
            f"{arg!r} is neither a file nor a builtin (flag:N, grassmann:N:K, cp:N, m10:J1|J2|J3)")
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {arg}: {exc}") from exc
    spec = space_from_document(doc)
    return SpaceInput(doc.get("name") or arg, spec)


def parse_int_list(text: str, what: str) -> tuple:
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise ParseError(f"{what} must be comma-separated integers, got {text!r}")


def parse_point(text: str) -> tuple:
    try:
        return tuple(Fraction(v) for v in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"point must be comma-separated rationals, got {text!r}")


def dumps(doc) -> str:
    """Indented JSON with integer vectors kept on one line, newline-terminated."""
    text = json.dumps(doc, indent=2, ensure_ascii=False)
    return _INT_ARRAY.sub(lambda m: "[" + ", ".join(re.split(r",\s*", m.group(1))) + "]", text) + "\n"


# -- result document --------------------------------------------------------


@dataclass
class ResultDocument:
    space: str
    dimension: int
    euler_characteristic: int
    cobordism_class: list          # [(omega, coefficient)], graded-lex descending
    s_numbers: list                # [(omega, value)]
    chern_numbers: list            # [(xi, value)]
    checks: dict = field(default_factory=dict)
    cross_check: Optional[bool] = None

    @classmethod
    def build(cls, space, cls_, euler, checks, cross_check=None):
        n = cls_.n
        s = {w: cls_[w] for w in omegas(n)}
        chern = s_to_chern(s, n)
        return cls(
            space=space,
            dimension=2 * n,
            euler_characteristic=euler,
            cobordism_class=[(list(w), c) for w, c in cls_.sorted_terms()],
            s_numbers=[(list(w), s[w]) for w in omegas(n)],
            chern_numbers=[(list(xi), chern[xi]) for xi in omegas(n)],
            checks=dict(checks),
            cross_check=cross_check,
        )

    def to_dict(self) -> dict:
        doc = {
            "space": self.space,
            "dimension": self.dimension,
            "euler_characteristic": self.euler_characteristic,
            "cobordism_class": [{"omega": w, "coefficient": c} for w, c in self.cobordism_class],
            "s_numbers": [{"omega": w, "value": v} for w, v in self.s_numbers],
            "chern_numbers": [{"xi": xi, "value": v} for xi, v in self.chern_numbers],
            "checks": {k: self.checks.get(k) for k in
                       ("lower_vanishing", "integrality", "point_independence")},
        }
        if self.cross_check is not None:
            doc["cross_check"] = self.cross_check
        return doc

    def to_json(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def from_dict(cls, doc: dict) -> "ResultDocument":
        try:
            return cls(
                space=doc["space"],
                dimension=doc["dimension"],
                euler_characteristic=doc["euler_characteristic"],
                cobordism_class=[(list(e["omega"]), e["coefficient"]) for e in doc["cobordism_class"]],
                s_numbers=[(list(e["omega"]), e["value"]) for e in doc["s_numbers"]],
                chern_numbers=[(list(e["xi"]), e["value"]) for e in doc["chern_numbers"]],
                checks=dict(doc["checks"]),
                cross_check=doc.get("cross_check"),
            )
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed result document: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> "ResultDocument":
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed result document: {exc}") from exc

    def cobordism(self) -> CobordismClass:
        return CobordismClass(self.dimension // 2, {tuple(w): c for w, c in self.cobordism_class})


def _table(rows, headers) -> str:
    rows = [[str(c) for c in r] for r in rows]
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
              for i, h in enumerate(headers)]
    line = lambda cells: "  ".join(c.rjust(w) if i else c.ljust(w)
                                   for i, (c, w) in enumerate(zip(cells, widths))).rstrip()
    return "\n".join([line(headers), line(["-" * w for w in widths])] + [line(r) for r in rows])


def _fmt_check(v):
    return "n/a" if v is None else ("pass" if v else "FAIL")


def render_text(doc: ResultDocument) -> str:
    cls_ = doc.cobordism()
    out = [
        f"space:                {doc.space}",
        f"dimension:            {doc.dimension}",
        f"euler characteristic: {doc.euler_characteristic}",
        f"cobordism class:      {cls_}",
        "",
        _table([(tuple(w), "(" + ",".join(map(str, partition_from_omega(w))) + ")", v)
                for w, v in doc.s_numbers], ["omega", "partition", "s_omega"]),
        "",
        _table([(chern_label(xi), v) for xi, v in doc.chern_numbers], ["chern", "value"]),
        "",
        "checks: " + ", ".join(f"{k} {_fmt_check(doc.checks.get(k))}"
                               for k in ("lower_vanishing", "integrality", "point_independence")),
    ]
    if doc.cross_check is not None:
        out.append(f"cross-check with localization: {'agree' if doc.cross_check else 'DIFFER'}")
    return "\n".join(out) + "\n"


# -- commands ----------------------------------------------------------------


def _exact_class(space: SpaceInput) -> CobordismClass:
    if space.builtin is None:
        raise OutOfRange("the exact route needs a builtin flag, grassmann or cp space")
    kind, *params = space.builtin
    if kind == "flag":
        return flag_class_exact(params[0])
    if kind == "grassmann":
        n, k = params
        if not 1 <= k < n:
            raise BadParameters(f"grassmannian needs 1 <= k < n, got n={n}, k={k}")
        return grassmann_class_exact(k, n - k)
    if kind == "cp":
        return grassmann_class_exact(params[0], 1)
    raise OutOfRange(f"no exact route for {space.label}")


def run_genus(space: SpaceInput, point=None, check_independence=False) -> ResultDocument:
    report = cobordism_class(space.spec, check_independence=check_independence, point=point)
    checks = {
        "lower_vanishing": report.lower_coefficients_vanished,
        "integrality": report.integrality_passed,
        "point_independence": report.second_point_agreed,
    }
    return ResultDocument.build(space.label, report.cobordism_class,
                                euler_characteristic(space.spec), checks)


def run_exact(space: SpaceInput, cross_check=False) -> ResultDocument:
    cls_ = _exact_class(space)
    # below t^m the x-degree is < m, so L kills those coefficients outright
    checks = {"lower_vanishing": True, "integrality": True, "point_independence": None}
    agree = None
    if cross_check:
        agree = cobordism_class(space.spec).cobordism_class == cls_
    return ResultDocument.build(space.label, cls_, euler_characteristic(space.spec),
                                checks, cross_check=agree)


def _emit(doc: ResultDocument, as_json: bool, out) -> None:
    out.write(doc.to_json() if as_json else render_text(doc))


def _emit_omega(space, omega, point, as_json, out) -> None:
    value = s_number(space.spec, omega, point=point)
    n = fixed_point_table(space.spec)[0].n
    omega = tuple(omega) + (0,) * (n - len(omega))
    if as_json:
        out.write(dumps({"space": space.label, "omega": list(omega), "value": value}))
    else:
        out.write(f"s_{omega}({space.label}) = {value}\n")


def cmd_genus(args, out) -> int:
    space = load_space(args.space)
    point = parse_point(args.point) if args.point else None
    if args.omega:
        _emit_omega(space, parse_int_list(args.omega, "omega"), point, args.json, out)
        return EXIT_OK
    if args.exact:
        doc = run_exact(space, cross_check=args.cross_check)
    else:
        doc = run_genus(space, point, args.check_independence)
        if args.cross_check:
            doc.cross_check = _exact_class(space) == doc.cobordism()
    _emit(doc, args.json, out)
    failed = doc.checks.get("point_independence") is False or doc.cross_check is False
    return EXIT_CONSTRAINT if failed else EXIT_OK


def cmd_exact(args, out) -> int:
    space = load_space(args.space)
    doc = run_exact(space, cross_check=args.cross_check)
    _emit(doc, args.json, out)
    return EXIT_CONSTRAINT if doc.cross_check is False else EXIT_OK


def cmd_verify(args, out) -> int:
    space = load_space(args.space)
    point = parse_point(args.point) if args.point else None
    table = fixed_point_table(space.spec)
    residuals = verify_constraints(table, point=point)
    vanish_ok = all(r.is_zero() for _, r in residuals)
    report = None
    if vanish_ok:
        try:
            report = cobordism_class(table, point=point)
        except ConstraintViolation:
            pass
    integral = report is not None
    omega_value = None
    if args.omega and integral:
        omega = parse_int_list(args.omega, "omega")
        omega_value = (omega, s_number(table, omega, point=point))

    if args.json:
        doc = {
            "space": space.label,
            "residuals": [{"degree": l, "residual": str(r)} for l, r in residuals],
            "lower_vanishing": vanish_ok,
            "integrality": integral if vanish_ok else None,
            "cobordism_class": ([{"omega": list(w), "coefficient": c}
                                 for w, c in report.cobordism_class.sorted_terms()]
                                if report else None),
        }
        if omega_value:
            doc["s_omega"] = {"omega": list(omega_value[0]), "value": omega_value[1]}
        out.write(dumps(doc))
    else:
        out.write(f"space: {space.label}\n")
        out.write(_table([(f"t^{l}", str(r)) for l, r in residuals], ["degree", "residual"]) + "\n")
        out.write(f"lower coefficients vanish: {'yes' if vanish_ok else 'NO'}\n")
        if vanish_ok:
            out.write(f"top coefficient integral: {'yes' if integral else 'NO'}\n")
        if report:
            out.write(f"cobordism class: {report.cobordism_class}\n")
        if omega_value:
            out.write(f"s_{omega_value[0]} = {omega_value[1]}\n")
    return EXIT_OK if vanish_ok and integral else EXIT_CONSTRAINT


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="toricgenus",
                     description="Cobordism classes and characteristic numbers from fixed-point data.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    space_help = "builtin name (flag:N, grassmann:N:K, cp:N, m10:J1|J2|J3) or JSON space file"

    p = sub.add_parser("genus", help="cobordism class, s-numbers and Chern numbers")
    p.add_argument("space", help=space_help)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--point", help="evaluation point v1,v2,... (rationals)")
    p.add_argument("--check-independence", action="store_true",
                   help="recompute at a second generic point")
    p.add_argument("--omega", help="only the number s_omega for omega = i1,i2,...")
    p.add_argument("--exact", action="store_true", help="use the divided-difference route")
    p.add_argument("--cross-check", action="store_true",
                   help="compare the divided-difference and localization routes")
    p.set_defaults(func=cmd_genus)

    p = sub.add_parser("verify", help="check the vanishing and integrality conditions")
    p.add_argument("space", help=space_help)
    p.add_argument("--json", action="store_true")
    p.add_argument("--point", help="evaluation point v1,v2,... (rationals)")
    p.add_argument("--omega", help="also report s_omega for omega = i1,i2,...")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", help="class from the divided-difference formulas")
    p.add_argument("space", help="flag:N (N <= 5), grassmann:N:K or cp:N")
    p.add_argument("--json", action="store_true")
    p.add_argument("--cross-check", action="store_true",
                   help="compare with the localization route")
    p.set_defaults(func=cmd_exact)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SingularPoint as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConstraintViolation as exc:
        print(f"constraint violation: {exc}", file=sys.stderr)
        return EXIT_CONSTRAINT
    except ToricGenusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
