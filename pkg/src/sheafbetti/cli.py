"""Command-line interface.

Subcommands:

* ``check``    applicability report for (surface, L, chi)
* ``betti``    virtual Betti/Hodge table of M(L, chi)
* ``hilb``     Betti vector and Euler number of a Hilbert scheme of points
* ``s-param``  minimal cross term with witness and restricted value
* ``audit``    stratum-bound audit of the claimed codimension
* ``table``    grid of betti runs, one row per (L, chi) cell

Surfaces are named p2, f0, f1; divisor classes are comma-separated
integers ("8" on the plane, "2,3" on F_e).  Formats: text (default),
json, csv, latex where noted.  Documents go to stdout, diagnostics to
stderr, and output is deterministic for fixed inputs.

Exit codes: 0 success, 1 malformed input, 2 hypotheses inapplicable,
3 internal invariant violation (including a failed audit).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .bounds import BoundReport, strata_bounds
from .decompose import min_cross_term, min_cross_term_integral
from .errors import (
    InapplicableError,
    InvariantViolation,
    SheafBettiError,
)
from .hilbert import hilbert_euler, hilbert_poincare
from .hypotheses import hypothesis_report
from .motivic import VirtualBettiReport, virtual_betti_table
from .surfaces import DivisorClass, Surface, surface_by_name

__all__ = ["RunConfig", "main", "run"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INAPPLICABLE = 2
EXIT_INVARIANT = 3


@dataclass
class RunConfig:
    """Parsed invocation, round-trippable through a plain dict."""

    command: str
    surface: str = "p2"
    classes: list[tuple[int, ...]] = field(default_factory=list)
    chis: list[int] = field(default_factory=list)
    n: int | None = None
    fmt: str = "text"
    cap: int | None = None

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "surface": self.surface,
            "classes": [list(c) for c in self.classes],
            "chis": list(self.chis),
            "n": self.n,
            "fmt": self.fmt,
            "cap": self.cap,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RunConfig":
        return cls(
            command=d["command"],
            surface=d["surface"],
            classes=[tuple(c) for c in d["classes"]],
            chis=list(d["chis"]),
            n=d["n"],
            fmt=d["fmt"],
            cap=d["cap"],
        )


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on errors; the published contract wants 1
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit_(EXIT_USAGE, f"error: {message}")


class SystemExit_(Exception):
    def __init__(self, code: int, message: str | None = None):
        self.code = code
        self.message = message


def _parse_class(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise SystemExit_(EXIT_USAGE, f"error: bad divisor class {text!r}") from None


def build_parser() -> _Parser:
    parser = _Parser(prog="sheafbetti", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_chi=True, chi_required=False):
        p.add_argument("--surface", default="p2", help="p2, f0 or f1")
        p.add_argument(
            "--L",
            action="append",
            required=True,
            metavar="CLASS",
            help="divisor class, comma-separated integers; repeatable in table mode",
        )
        if with_chi:
            p.add_argument(
                "--chi",
                action="append",
                type=int,
                required=chi_required,
                help="Euler characteristic; repeatable in table mode",
            )
        p.add_argument("--cap", type=int, default=None, help="Hilbert truncation cap")

    p = sub.add_parser("check", help="applicability report")
    add_common(p)
    p.add_argument("--format", default="text", choices=["text", "json"])

    p = sub.add_parser("betti", help="virtual Betti/Hodge table")
    add_common(p, chi_required=True)
    p.add_argument("--format", default="text", choices=["text", "json", "csv", "latex"])

    p = sub.add_parser("hilb", help="Hilbert scheme of points")
    p.add_argument("--surface", default="p2")
    p.add_argument("--n", type=int, required=True, help="number of points")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--format", default="text", choices=["text", "json", "csv"])

    p = sub.add_parser("s-param", help="minimal cross term of a decomposition")
    add_common(p, with_chi=False)
    p.add_argument("--format", default="text", choices=["text", "json"])

    p = sub.add_parser("audit", help="stratum-bound audit")
    add_common(p)
    p.add_argument("--format", default="text", choices=["text", "json"])

    p = sub.add_parser("table", help="grid of betti runs")
    add_common(p, chi_required=True)
    p.add_argument("--format", default="text", choices=["text", "json", "csv", "latex"])
    return parser


def config_from_args(argv: list[str]) -> RunConfig:
    ns = build_parser().parse_args(argv)
    return RunConfig(
        command=ns.command,
        surface=getattr(ns, "surface", "p2"),
        classes=[_parse_class(c) for c in getattr(ns, "L", []) or []],
        chis=list(getattr(ns, "chi", []) or []),
        n=getattr(ns, "n", None),
        fmt=ns.format,
        cap=getattr(ns, "cap", None),
    )


# -- serialisation helpers -------------------------------------------------


def _cross_json(cross) -> dict | None:
    if cross is None:
        return None
    return {
        "value": cross.json_value(),
        "witness": None
        if cross.witness is None
        else [list(p.coords) for p in cross.witness],
    }


def _report_json(rep) -> dict:
    return {
        "surface": rep.surface.name,
        "L": list(rep.L.coords),
        "chi": rep.chi,
        "effective": rep.effective,
        "kx_negative": rep.kx_negative,
        "has_integral_member": rep.has_integral,
        "self_intersection": rep.self_intersection,
        "multiplicity": rep.multiplicity,
        "primitive_part": None if rep.primitive_part is None else list(rep.primitive_part.coords),
        "cross_min": _cross_json(rep.cross_min),
        "adjoint": list(rep.adjoint.coords),
        "adjoint_nonpositive": rep.adjoint_nonpositive,
        "cross_min_adjoint": _cross_json(rep.cross_min_adjoint),
        "condition": rep.condition,
        "condition_evidence": rep.condition_evidence,
        "support_codim": rep.support_codim,
        "moduli_empty": rep.moduli_empty,
        "motivic_applicable": rep.motivic_applicable,
        "irreducible": rep.irreducible,
        "irreducible_evidence": rep.irreducible_evidence,
        "fine_moduli": rep.fine_moduli,
        "rationality": rep.rationality,
        "strictly_semistable_note": rep.strictly_semistable_note,
    }


def betti_json(rv: VirtualBettiReport) -> dict:
    return {
        "input": {
            "surface": rv.surface.name,
            "L": list(rv.L.coords),
            "chi": rv.chi,
        },
        "normalization": {
            "chi": rv.normalization.chi,
            "modulus": rv.normalization.modulus,
            "candidates": list(rv.normalization.candidates),
            "chi0": rv.normalization.chi0,
            "window": rv.normalization.window,
        },
        "shift": {
            "colength": rv.shift.colength,
            "exponent": rv.shift.exponent,
            "top_degree": rv.shift.top_degree,
            "controlled_codim": rv.shift.controlled_codim,
        },
        "valid_degree_min": rv.shift.min_controlled_degree,
        "raw_high": [[i, rv.raw_high[i]] for i in sorted(rv.raw_high)],
        "reflected_low": [[i, rv.reflected_low[i]] for i in sorted(rv.reflected_low)],
        "hodge": [[p, p, v] for p, v in sorted(rv.hodge_diag.items())],
        "flags": {
            "fine_moduli": rv.fine_moduli,
            "smoothness_assumed": rv.smoothness_assumed,
            "strictly_semistable_note": rv.strictly_semistable_note,
        },
    }


BETTI_JSON_SCHEMA = {
    "type": "object",
    "required": [
        "input",
        "normalization",
        "shift",
        "valid_degree_min",
        "raw_high",
        "reflected_low",
        "hodge",
        "flags",
    ],
    "properties": {
        "input": {
            "type": "object",
            "required": ["surface", "L", "chi"],
            "properties": {
                "surface": {"enum": ["p2", "f0", "f1"]},
                "L": {"type": "array", "items": {"type": "integer"}},
                "chi": {"type": "integer"},
            },
        },
        "normalization": {
            "type": "object",
            "required": ["chi", "modulus", "candidates", "chi0", "window"],
        },
        "shift": {
            "type": "object",
            "required": ["colength", "exponent", "top_degree", "controlled_codim"],
        },
        "valid_degree_min": {"type": "integer"},
        "raw_high": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "integer"},
                "minItems": 2,
                "maxItems": 2,
            },
        },
        "reflected_low": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "integer"},
                "minItems": 2,
                "maxItems": 2,
            },
        },
        "hodge": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "integer"},
                "minItems": 3,
                "maxItems": 3,
            },
        },
        "flags": {"type": "object"},
    },
}


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def _flag(v) -> str:
    if v is None:
        return "n/a"
    return "yes" if v else "no"


# -- per-command rendering -------------------------------------------------


def _render_check(surface: Surface, L: DivisorClass, chi: int | None, fmt: str, out) -> int:
    rep = hypothesis_report(surface, L, chi)
    if fmt == "json":
        print(_dump(_report_json(rep)), file=out)
    else:
        cls = surface.format_class(L)
        print(f"surface {surface.name}, L = {cls}, chi = {rep.chi}", file=out)
        print(
            f"  effective {_flag(rep.effective)}, K-negative {_flag(rep.kx_negative)}, "
            f"integral member {_flag(rep.has_integral)}, L^2 = {rep.self_intersection}",
            file=out,
        )
        if rep.multiplicity is not None:
            print(
                f"  multiplicity n = {rep.multiplicity}, primitive part "
                f"{surface.format_class(rep.primitive_part)}",
                file=out,
            )
        if rep.cross_min is not None:
            wit = (
                " + ".join(surface.format_class(p) for p in rep.cross_min.witness)
                if rep.cross_min.witness
                else "none"
            )
            print(f"  minimal cross term {rep.cross_min.json_value()} (witness {wit})", file=out)
        adj = surface.format_class(rep.adjoint) if rep.adjoint else "0"
        adj_s = "n/a" if rep.cross_min_adjoint is None else rep.cross_min_adjoint.json_value()
        print(
            f"  adjoint L+K = {adj}: nonpositive {_flag(rep.adjoint_nonpositive)}, "
            f"minimal cross term {adj_s}",
            file=out,
        )
        cond = "none" if rep.condition is None else f"({rep.condition})"
        print(f"  applicability condition {cond}: {rep.condition_evidence}", file=out)
        if rep.support_codim is not None:
            print(f"  non-integral-support codimension {rep.support_codim}", file=out)
        if rep.moduli_empty:
            print("  moduli space empty (L^2 < 0, L non-primitive)", file=out)
        print(f"  motivic pipeline applicable {_flag(rep.motivic_applicable)}", file=out)
        print(f"  irreducibility: {rep.irreducible} ({rep.irreducible_evidence})", file=out)
        print(
            f"  fine moduli {_flag(rep.fine_moduli)}, rationality {rep.rationality}, "
            f"strictly semistable note {_flag(rep.strictly_semistable_note)}",
            file=out,
        )
    return EXIT_OK if rep.motivic_applicable else EXIT_INAPPLICABLE


def _render_betti(rv: VirtualBettiReport, fmt: str, out) -> int:
    if fmt == "json":
        print(_dump(betti_json(rv)), file=out)
        return EXIT_OK
    if fmt == "csv":
        print("degree,virtual_betti", file=out)
        for i in sorted(rv.reflected_low):
            print(f"{i},{rv.reflected_low[i]}", file=out)
        return EXIT_OK
    if fmt == "latex":
        degs = sorted(rv.reflected_low)
        print("\\begin{tabular}{l" + "c" * len(degs) + "}", file=out)
        print("$i$ & " + " & ".join(str(i) for i in degs) + " \\\\\\hline", file=out)
        print(
            "$b_i$ & " + " & ".join(str(rv.reflected_low[i]) for i in degs) + " \\\\",
            file=out,
        )
        print("\\end{tabular}", file=out)
        return EXIT_OK
    s = rv.surface
    print(
        f"virtual Betti table, surface {s.name}, L = {s.format_class(rv.L)}, "
        f"chi = {rv.chi}",
        file=out,
    )
    n = rv.normalization
    print(
        f"  chi0 = {n.chi0} (modulus {n.modulus}, window {n.window}), "
        f"colength {rv.shift.colength}, shift exponent {rv.shift.exponent}",
        file=out,
    )
    print(
        f"  controlled degrees i >= {rv.shift.min_controlled_degree} "
        f"(top {rv.shift.top_degree}); below the window: uncontrolled, not zero",
        file=out,
    )
    print("  reflected table (degrees from 0):", file=out)
    degs = sorted(rv.reflected_low)
    print("    " + " ".join(f"b_{i}={rv.reflected_low[i]}" for i in degs), file=out)
    print(
        "  hodge diagonal: "
        + " ".join(f"h^{{{p},{p}}}={v}" for p, v in sorted(rv.hodge_diag.items())),
        file=out,
    )
    print(
        f"  flags: fine_moduli {_flag(rv.fine_moduli)}, smoothness_assumed "
        f"{_flag(rv.smoothness_assumed)}, strictly_semistable_note "
        f"{_flag(rv.strictly_semistable_note)}",
        file=out,
    )
    return EXIT_OK


def _render_hilb(surface: Surface, n: int, cap: int | None, fmt: str, out) -> int:
    poly = hilbert_poincare(surface, n, cap)
    euler = hilbert_euler(surface, n)
    if fmt == "json":
        doc = {
            "surface": surface.name,
            "n": n,
            "betti": list(poly.coeffs),
            "euler": euler,
            "dim": poly.dim,
        }
        print(_dump(doc), file=out)
    elif fmt == "csv":
        print("degree,betti", file=out)
        for i, c in enumerate(poly.coeffs):
            print(f"{i},{c}", file=out)
    else:
        print(",".join(str(c) for c in poly.coeffs), file=out)
        print(f"euler {euler}", file=out)
    return EXIT_OK


def _render_sparam(surface: Surface, L: DivisorClass, fmt: str, out) -> int:
    plain = min_cross_term(surface, L)
    restricted = min_cross_term_integral(surface, L)
    if fmt == "json":
        doc = {
            "surface": surface.name,
            "L": list(L.coords),
            "value": plain.json_value(),
            "witness": None
            if plain.witness is None
            else [list(p.coords) for p in plain.witness],
            "restricted_value": restricted.json_value(),
        }
        print(_dump(doc), file=out)
    else:
        wit = (
            " + ".join(surface.format_class(p) for p in plain.witness)
            if plain.witness
            else "none"
        )
        print(
            f"s({surface.format_class(L)}) = {plain.json_value()}  witness: {wit}  "
            f"restricted: {restricted.json_value()}",
            file=out,
        )
    return EXIT_OK


def _bounds_json(rep: BoundReport) -> dict:
    return {
        "surface": rep.surface.name,
        "L": list(rep.L.coords),
        "ambient_stack": rep.ambient_stack,
        "ambient_scheme": rep.ambient_scheme,
        "claimed": rep.claimed,
        "passed": rep.passed,
        "entries": [
            {
                "name": e.name,
                "applicable": e.applicable,
                "needed": e.needed,
                "value": e.value,
                "formula": e.formula,
                "note": e.note,
            }
            for e in rep.entries
        ],
    }


def _render_audit(surface: Surface, L: DivisorClass, fmt: str, out) -> int:
    rep = strata_bounds(surface, L)
    if rep.claimed is None:
        raise InapplicableError(
            "codim_condition", f"no codimension claim for {L} on {surface.name}"
        )
    if fmt == "json":
        print(_dump(_bounds_json(rep)), file=out)
    else:
        print(
            f"audit {surface.name}, L = {surface.format_class(L)}: "
            f"claimed dim <= {rep.claimed} (stack {rep.ambient_stack})",
            file=out,
        )
        for e in rep.entries:
            val = "empty" if e.value is None else str(e.value)
            tag = "needed" if e.needed else ("info" if e.applicable else "inapplicable")
            note = f"  [{e.note}]" if e.note else ""
            print(f"  {e.name:28s} {val:>6s}  {tag}{note}", file=out)
        print(f"  audit {'PASS' if rep.passed else 'FAIL'}", file=out)
    return EXIT_OK if rep.passed else EXIT_INVARIANT


def _table_cell(surface: Surface, coords: tuple[int, ...], chi: int, cap: int | None) -> dict:
    row = {
        "surface": surface.name,
        "L": list(coords),
        "chi": chi,
        "applicable": False,
        "chi0": None,
        "modulus": None,
        "window": None,
        "colength": None,
        "exponent": None,
        "valid_degree_min": None,
        "betti_low": None,
        "note": "",
    }
    try:
        rv = virtual_betti_table(surface, DivisorClass(coords), chi, cap)
    except InapplicableError as exc:
        row["note"] = str(exc)
    else:
        row.update(
            applicable=True,
            chi0=rv.normalization.chi0,
            modulus=rv.normalization.modulus,
            window=rv.normalization.window,
            colength=rv.shift.colength,
            exponent=rv.shift.exponent,
            valid_degree_min=rv.shift.min_controlled_degree,
            betti_low=[rv.reflected_low[i] for i in sorted(rv.reflected_low)],
        )
    return row


def _render_table(cfg: RunConfig, surface: Surface, out) -> int:
    cells = [(coords, chi) for coords in cfg.classes for chi in cfg.chis]
    # cells are independent; map preserves input order, so the document
    # stays deterministic
    with ThreadPoolExecutor(max_workers=min(8, max(1, len(cells)))) as pool:
        rows = list(
            pool.map(lambda c: _table_cell(surface, c[0], c[1], cfg.cap), cells)
        )
    if cfg.fmt == "json":
        print(_dump(rows), file=out)
        return EXIT_OK
    cols = [
        "surface",
        "L",
        "chi",
        "applicable",
        "chi0",
        "modulus",
        "window",
        "colength",
        "exponent",
        "valid_degree_min",
        "betti_low",
        "note",
    ]

    def cell(row, c):
        v = row[c]
        if v is None:
            return ""
        if c == "L":
            return ",".join(str(x) for x in v)
        if c == "betti_low":
            return " ".join(str(x) for x in v)
        return str(v)

    if cfg.fmt == "csv":
        print(",".join(cols), file=out)
        for row in rows:
            print(",".join(f'"{cell(row, c)}"' if "," in cell(row, c) else cell(row, c) for c in cols), file=out)
        return EXIT_OK
    if cfg.fmt == "latex":
        print("\\begin{tabular}{" + "l" * len(cols) + "}", file=out)
        print(" & ".join(c.replace("_", "\\_") for c in cols) + " \\\\\\hline", file=out)
        for row in rows:
            print(" & ".join(cell(row, c) for c in cols) + " \\\\", file=out)
        print("\\end{tabular}", file=out)
        return EXIT_OK
    widths = [max(len(c), max((len(cell(r, c)) for r in rows), default=0)) for c in cols]
    print("  ".join(c.ljust(w) for c, w in zip(cols, widths)), file=out)
    for row in rows:
        print("  ".join(cell(row, c).ljust(w) for c, w in zip(cols, widths)), file=out)
    return EXIT_OK


# -- driver ----------------------------------------------------------------


def run(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    surface = surface_by_name(cfg.surface)
    if cfg.command == "hilb":
        return _render_hilb(surface, cfg.n, cfg.cap, cfg.fmt, out)
    if cfg.command == "table":
        # an empty grid is legal and yields a header-only document
        return _render_table(cfg, surface, out)
    if not cfg.classes:
        raise SystemExit_(EXIT_USAGE, "error: --L is required")
    first = DivisorClass(cfg.classes[0])
    chi = cfg.chis[0] if cfg.chis else None
    if cfg.command == "check":
        return _render_check(surface, first, chi, cfg.fmt, out)
    if cfg.command == "betti":
        rv = virtual_betti_table(surface, first, chi, cfg.cap)
        return _render_betti(rv, cfg.fmt, out)
    if cfg.command == "s-param":
        return _render_sparam(surface, first, cfg.fmt, out)
    if cfg.command == "audit":
        return _render_audit(surface, first, cfg.fmt, out)
    raise SystemExit_(EXIT_USAGE, f"error: unknown command {cfg.command!r}")


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = config_from_args(argv)
        code = run(cfg)
    except SystemExit_ as exc:
        if exc.message:
            print(exc.message, file=sys.stderr)
        code = exc.code
    except InapplicableError as exc:
        print(f"inapplicable ({exc.check}): {exc}", file=sys.stderr)
        code = EXIT_INAPPLICABLE
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        code = EXIT_INVARIANT
    except SheafBettiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_USAGE
    return code


if __name__ == "__main__":
    raise SystemExit(main())
