"""Command-line front end: inspect root systems, check one lattice,
or run the full classification sweep."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys as _sys
from fractions import Fraction

from .classify import Bounds, ClassificationResult, classify_all
from .classify import classify as run_classify
from .classify import result_csv_rows, result_json, result_markdown
from .classify import result_text, supported_types
from .intlin import RatVector
from .rootsys import (
    AffineRootSystem,
    AffineType,
    base_change_coefficients,
    build,
    change_basis,
    finite_type_label,
    local_system,
    vertex,
)
from .spherical import (
    Generator,
    LatticeSpec,
    PairReport,
    Term,
    check_spherical_pair,
    resolve_generators,
    transport_lattice,
)

USAGE_ERROR = 2


class LatticeSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# ---------------------------------------------------------------------------
# lattice expression grammar:  expr := gen (';' gen)*
#                              gen  := ['-'] term (('+'|'-') term)*
#                              term := [int '*']? ('w'|'a') index


def parse_lattice(expr: str, atype: AffineType, basis_vertex: int = 0) -> LatticeSpec:
    """Parse a generator list such as "2*w1; a1+a2" into a resolved lattice."""
    sys = build(atype)
    gens: list[Generator] = []
    for chunk, offset in _split_generators(expr):
        gens.append(_parse_generator(chunk, offset))
    if not gens:
        raise LatticeSyntaxError("empty lattice expression", 0)
    return resolve_generators(sys, basis_vertex, tuple(gens))


def _split_generators(expr: str):
    start = 0
    for i, ch in enumerate(expr + ";"):
        if ch == ";":
            chunk = expr[start:i]
            if chunk.strip():
                yield chunk, start
            elif i < len(expr):
                raise LatticeSyntaxError("empty generator", start)
            start = i + 1


def _parse_generator(chunk: str, offset: int) -> Generator:
    text = chunk
    pos = 0
    terms: list[Term] = []
    sign = 1
    expect_term = True
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch in "+-":
            if expect_term and terms:
                raise LatticeSyntaxError("two signs in a row", offset + pos)
            sign = 1 if ch == "+" else -1
            expect_term = True
            pos += 1
            continue
        if not expect_term:
            raise LatticeSyntaxError("expected '+', '-' or ';'", offset + pos)
        coef = 1
        digits_start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if pos > digits_start:
            coef = int(text[digits_start:pos])
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos >= len(text) or text[pos] != "*":
                raise LatticeSyntaxError("expected '*' after coefficient", offset + pos)
            pos += 1
            while pos < len(text) and text[pos].isspace():
                pos += 1
        if pos >= len(text) or text[pos] not in "wa":
            raise LatticeSyntaxError("expected 'w' or 'a'", offset + pos)
        kind = text[pos]
        pos += 1
        idx_start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if pos == idx_start:
            raise LatticeSyntaxError("expected an index", offset + pos)
        index = int(text[idx_start:pos])
        terms.append(Term(sign * coef, kind, index))
        sign = 1
        expect_term = False
    if expect_term or not terms:
        raise LatticeSyntaxError("dangling sign or empty generator", offset + len(text))
    return tuple(terms)


# ---------------------------------------------------------------------------
# rendering helpers


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _vec(v: RatVector) -> str:
    return "(" + ", ".join(_frac(c) for c in v) + ")"


def _affine_str(constant: Fraction, gradient: RatVector) -> str:
    parts = []
    if constant != 0:
        parts.append(_frac(constant))
    for i, c in enumerate(gradient):
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        coefficient = "" if mag == 1 else f"{_frac(mag)}*"
        parts.append(f"{sign} {coefficient}e{i + 1}" if parts else f"{sign}{coefficient}e{i + 1}")
    return " ".join(parts) if parts else "0"


def _type_from_args(args) -> AffineType:
    return AffineType(args.type, args.n, args.twist)


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


# ---------------------------------------------------------------------------
# inspect


def _inspect_text(sys: AffineRootSystem, args) -> str:
    lines = [f"{sys.atype.label()}  ambient dim {sys.ambient_dim}, rank {sys.rank}"]
    lines.append("labels: " + " ".join(f"k{i}={k}" for i, k in enumerate(sys.labels)))
    for i, a in enumerate(sys.simple_roots):
        lines.append(f"alpha{i} = {_affine_str(a.constant, a.gradient)}")
    lines.append(
        "vertices: "
        + "; ".join(f"X{i} = {_vec(vertex(sys, i))}" for i in range(sys.rank + 1))
    )
    if args.vertex is not None:
        loc = local_system(sys, args.vertex)
        lines.append(
            f"local system at X{args.vertex}: type {finite_type_label(loc.simple_roots)}"
        )
        for j in loc.indices:
            lines.append(
                f"  a{j} = {_vec(loc.root(j))}  coroot {_vec(loc.coroot_of(j))}"
                f"  w{j} = {_vec(loc.weight(j))}"
            )
    if args.base_change is not None:
        mat = change_basis(sys, args.base_change)
        loce = local_system(sys, args.base_change)
        cols = " ".join(f"w~{j}" for j in loce.indices)
        lines.append(f"base change to X{args.base_change} (columns {cols}):")
        for f, row in enumerate(mat, start=1):
            lines.append(f"  w{f} = [" + ", ".join(_frac(c) for c in row) + "]")
        coeffs = base_change_coefficients(sys)
        lines.append(
            "length-label ratios: [" + ", ".join(_frac(c) for c in coeffs) + "]"
        )
    return "\n".join(lines)


def _inspect_json(sys: AffineRootSystem, args) -> dict:
    data = {
        "type": sys.atype.label(),
        "ambient_dim": sys.ambient_dim,
        "rank": sys.rank,
        "labels": list(sys.labels),
        "simple_roots": [
            {"index": i, "constant": _frac(a.constant),
             "gradient": [_frac(c) for c in a.gradient]}
            for i, a in enumerate(sys.simple_roots)
        ],
        "vertices": [
            [_frac(c) for c in vertex(sys, i)] for i in range(sys.rank + 1)
        ],
    }
    if args.vertex is not None:
        loc = local_system(sys, args.vertex)
        data["local_system"] = {
            "vertex": args.vertex,
            "type": finite_type_label(loc.simple_roots),
            "roots": {str(j): [_frac(c) for c in loc.root(j)] for j in loc.indices},
            "coroots": {
                str(j): [_frac(c) for c in loc.coroot_of(j)] for j in loc.indices
            },
            "weights": {
                str(j): [_frac(c) for c in loc.weight(j)] for j in loc.indices
            },
        }
    if args.base_change is not None:
        mat = change_basis(sys, args.base_change)
        data["base_change"] = {
            "target_vertex": args.base_change,
            "matrix": [[_frac(c) for c in row] for row in mat],
            "ratios": [_frac(c) for c in base_change_coefficients(sys)],
        }
    return data


def _inspect_rows(sys: AffineRootSystem) -> list[list[str]]:
    rows = [["index", "label", "root", "vertex"]]
    for i, a in enumerate(sys.simple_roots):
        rows.append(
            [str(i), str(sys.labels[i]), _affine_str(a.constant, a.gradient),
             _vec(vertex(sys, i))]
        )
    return rows


def cmd_inspect(args) -> int:
    sys = build(_type_from_args(args))
    if args.vertex is not None and not 0 <= args.vertex <= sys.rank:
        raise ValueError(f"vertex {args.vertex} out of range")
    if args.base_change is not None and not 1 <= args.base_change <= sys.rank:
        raise ValueError(f"base-change vertex {args.base_change} out of range")
    if args.format == "json":
        _emit(json.dumps(_inspect_json(sys, args), indent=2), args.output)
    elif args.format == "csv":
        buf = io.StringIO()
        csv.writer(buf).writerows(_inspect_rows(sys))
        _emit(buf.getvalue().rstrip("\n"), args.output)
    elif args.format == "markdown":
        rows = _inspect_rows(sys)
        lines = ["| " + " | ".join(rows[0]) + " |",
                 "|" + "---|" * len(rows[0])]
        lines += ["| " + " | ".join(r) + " |" for r in rows[1:]]
        _emit("\n".join(lines), args.output)
    else:
        _emit(_inspect_text(sys, args), args.output)
    return 0


# ---------------------------------------------------------------------------
# check


def _canonical_render(report: PairReport, sys: AffineRootSystem) -> str:
    from .spherical import lattice_from_coords

    return lattice_from_coords(
        sys, report.lattice.basis_vertex, report.lattice.coords
    ).render()


def _pair_text(report: PairReport, sys: AffineRootSystem) -> str:
    lines = [
        f"type {sys.atype.label()}   lattice at X{report.lattice.basis_vertex}: "
        f"<{report.lattice.render()}>",
        f"canonical form: <{_canonical_render(report, sys)}>",
    ]
    for r in report.per_vertex:
        view = transport_lattice(report.lattice, sys, r.vertex)
        sigma = ", ".join(r.sigma.describe()) or "-"
        crit = ", ".join(f"a{i}" for i in r.critical_roots) or "-"
        flags = " ".join(
            f"{name}={'ok' if val else 'FAIL'}"
            for name, val in (("cond1", r.cond1), ("cond2", r.cond2), ("cond3", r.cond3))
        )
        verdict = "smooth" if r.smooth else "NOT smooth"
        lines.append(
            f"  X{r.vertex} [{r.local_label}] <{view.render()}>: {verdict}; "
            f"spherical roots {{{sigma}}}; critical {{{crit}}}; {flags}"
        )
    verdict = "yes" if report.is_spherical_pair else "no"
    line = f"spherical pair: {verdict}"
    failure = report.first_failure()
    if failure is not None:
        conds = [
            name
            for name, ok in (("1", failure.cond1), ("2", failure.cond2), ("3", failure.cond3))
            if not ok
        ]
        line += f" (failing vertex {failure.vertex}, condition {','.join(conds)})"
    lines.append(line)
    return "\n".join(lines)


def _pair_json(report: PairReport, sys: AffineRootSystem) -> dict:
    failure = report.first_failure()
    return {
        "type": report.atype.label(),
        "lattice": report.lattice.render(),
        "canonical": _canonical_render(report, sys),
        "basis_vertex": report.lattice.basis_vertex,
        "is_spherical_pair": report.is_spherical_pair,
        "failing_vertex": None if failure is None else failure.vertex,
        "per_vertex": [
            {
                "vertex": r.vertex,
                "local_type": r.local_label,
                "spherical_roots": r.sigma.describe(),
                "critical_roots": list(r.critical_roots),
                "cond1": r.cond1,
                "cond2": r.cond2,
                "cond3": r.cond3,
                "smooth": r.smooth,
            }
            for r in report.per_vertex
        ],
    }


def _pair_csv(report: PairReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(
        ["vertex", "local_type", "spherical_roots", "critical_roots",
         "cond1", "cond2", "cond3", "smooth"]
    )
    for r in report.per_vertex:
        writer.writerow(
            [r.vertex, r.local_label, " ".join(r.sigma.describe()),
             " ".join(f"a{i}" for i in r.critical_roots),
             r.cond1, r.cond2, r.cond3, r.smooth]
        )
    writer.writerow(["pair", "", "", "", "", "", "", report.is_spherical_pair])
    return buf.getvalue().rstrip("\n")


def _pair_markdown(report: PairReport) -> str:
    lines = [
        "| vertex | local type | spherical roots | critical | c1 | c2 | c3 | smooth |",
        "|--------|-----------|-----------------|----------|----|----|----|--------|",
    ]
    for r in report.per_vertex:
        lines.append(
            f"| X{r.vertex} | {r.local_label} | {', '.join(r.sigma.describe()) or '-'} "
            f"| {', '.join(f'a{i}' for i in r.critical_roots) or '-'} "
            f"| {'+' if r.cond1 else 'x'} | {'+' if r.cond2 else 'x'} "
            f"| {'+' if r.cond3 else 'x'} | {'yes' if r.smooth else 'no'} |"
        )
    lines.append("")
    lines.append(f"**spherical pair: {'yes' if report.is_spherical_pair else 'no'}**")
    return "\n".join(lines)


def cmd_check(args) -> int:
    sys = build(_type_from_args(args))
    lat = parse_lattice(args.lattice, sys.atype, args.vertex)
    report = check_spherical_pair(lat, sys)
    if args.format == "json":
        _emit(json.dumps(_pair_json(report, sys), indent=2), args.output)
    elif args.format == "csv":
        _emit(_pair_csv(report), args.output)
    elif args.format == "markdown":
        _emit(_pair_markdown(report), args.output)
    else:
        _emit(_pair_text(report, sys), args.output)
    return 0 if report.is_spherical_pair else 1


# ---------------------------------------------------------------------------
# classify


def cmd_classify(args) -> int:
    bounds = Bounds(max_n=args.max_n, max_param=args.max_param)
    if args.all:
        result = classify_all(bounds)
    elif args.n is None:
        # family-wide sweep: every subscript of this family and twist
        types = [
            t
            for t in supported_types(bounds)
            if t.family == args.type and t.twist == args.twist
        ]
        if not types:
            raise ValueError(
                f"no {args.type}^({args.twist}) systems within --max-n {bounds.max_n}"
            )
        result = ClassificationResult(())
        for atype in types:
            result = result.merge(run_classify(atype, bounds))
    else:
        atype = _type_from_args(args)
        if atype.n > bounds.max_n:
            raise ValueError("type subscript exceeds --max-n")
        result = run_classify(atype, bounds)
    if args.format == "json":
        _emit(json.dumps(result_json(result), indent=2), args.output)
    elif args.format == "csv":
        buf = io.StringIO()
        csv.writer(buf).writerows(result_csv_rows(result))
        _emit(buf.getvalue().rstrip("\n"), args.output)
    elif args.format == "markdown":
        _emit(result_markdown(result), args.output)
    else:
        _emit(result_text(result), args.output)
    return 0 if not result.disagreements else 1


# ---------------------------------------------------------------------------
# argument plumbing


def _add_type_args(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--type", choices=list("ABCDEFG"), required=required,
                   help="family letter")
    p.add_argument("--n", type=int, required=required,
                   help="subscript of the affine symbol, e.g. 4 for A4^(2)")
    p.add_argument("--twist", type=int, choices=(1, 2, 3), default=1,
                   help="twist order (superscript)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alcove",
        description="Exact computations with affine root systems and the "
        "classification of spherical weight-lattice pairs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inspect = sub.add_parser("inspect", help="print roots, labels, vertices")
    _add_type_args(p_inspect)
    p_inspect.add_argument("--vertex", type=int, default=None,
                           help="also print the local system at this vertex")
    p_inspect.add_argument("--base-change", type=int, default=None, dest="base_change",
                           help="print the weight base change to this vertex")
    p_inspect.add_argument("--format", choices=("text", "json", "csv", "markdown"),
                           default="text")
    p_inspect.add_argument("--output", default=None, help="write to a file")
    p_inspect.set_defaults(func=cmd_inspect)

    p_check = sub.add_parser("check", help="decide whether a lattice is a spherical pair")
    _add_type_args(p_check)
    p_check.add_argument("--lattice", required=True,
                         help="generators, e.g. '2*w1; w2' or 'a1+a2; 2*a1'")
    p_check.add_argument("--vertex", type=int, default=0,
                         help="vertex whose weight basis the expression uses")
    p_check.add_argument("--format", choices=("text", "json", "csv", "markdown"),
                         default="text")
    p_check.add_argument("--output", default=None)
    p_check.set_defaults(func=cmd_check)

    p_classify = sub.add_parser("classify", help="sweep candidates and diff the table")
    _add_type_args(p_classify, required=False)
    p_classify.add_argument("--all", action="store_true",
                            help="sweep every supported type within --max-n")
    p_classify.add_argument("--max-n", type=int, default=8, dest="max_n")
    p_classify.add_argument("--max-param", type=int, default=12, dest="max_param")
    p_classify.add_argument("--format", choices=("text", "json", "csv", "markdown"),
                            default="text")
    p_classify.add_argument("--output", default=None)
    p_classify.set_defaults(func=cmd_classify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "classify" and not args.all and args.type is None:
        parser.error("classify needs --all or a --type")
    try:
        return args.func(args)
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
