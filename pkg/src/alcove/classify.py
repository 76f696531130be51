"""Candidate lattice families and the sweep that reproduces the
classification of spherical weight-lattice pairs.

Each catalog row pairs an affine system with the lattice families that
are smooth local models at vertex 0; `classify` runs the vertex-by-vertex
pair check over every instantiated candidate and diffs the verdicts
against the nine-row expected table.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from . import intlin
from .intlin import IntMatrix, RatVector, vdot
from .rootsys import AffineRootSystem, AffineType, build, local_system
from .spherical import (
    Generator,
    LatticeSpec,
    PairReport,
    Term,
    check_spherical_pair,
    lattice_basis_rat,
    lattice_contains_rat,
    lattice_equal_rat,
    lattice_from_coords,
    resolve_generators,
)


@dataclass(frozen=True)
class Bounds:
    """Desk-scale search bounds for the classification sweep."""

    max_n: int = 8
    max_param: int = 12


@dataclass(frozen=True)
class CandidateFamily:
    """One lattice family from the local-model catalog, tied to a case row."""

    id: str
    case: int
    atype: AffineType
    param_names: tuple[str, ...]

    def describe(self) -> str:
        return _FAMILY_DESCRIPTIONS[self.id]


_FAMILY_DESCRIPTIONS = {
    "A1": "<w1>",
    "A2": "<2*w1>",
    "A3": "<4*w1>",
    "A4": "2<a2,...,an, d*wn>",
    "A5": "Z S+ + Z(k*w{n-1})",
    "A6": "<a2+a3,...,a{n-1}+an, e*w{n-1}, r*w{n-1}+wn>",
    "B1": "2ZS",
    "B2": "2L",
    "B3": "Z(S+ u {2a_s})",
    "B4": "<w1,...,2w_s,...,wn>",
    "C1": "2ZS",
    "C2": "2L",
    "C3": "L",
    "D1": "2ZS",
    "D2": "2L",
    "D3": "2<a1,...,a{n-2},an, w1>",
    "D4": "2<a1,...,a{n-2},an, wn>",
    "D5": "2<a1,...,an, w1+wn>",
    "E61": "2ZS",
    "E62": "2L",
    "E71": "2ZS",
    "E72": "2L",
    "E8": "2L",
    "F4": "2L",
    "G2": "2L",
}

_PARAM_NAMES = {"A4": ("d",), "A5": ("k",), "A6": ("e", "r")}


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _short_root_index(sys: AffineRootSystem) -> int:
    """Index of the unique shortest simple root of the vertex-0 system."""
    loc = local_system(sys, 0)
    norms = {j: vdot(loc.root(j), loc.root(j)) for j in loc.indices}
    least = min(norms.values())
    shortest = [j for j, v in norms.items() if v == least]
    if len(shortest) != 1:
        raise ValueError("no unique short root in the local system")
    return shortest[0]


def _t(c: int, kind: str, i: int) -> Term:
    return Term(c, kind, i)


def family_generators(
    family_id: str, sys: AffineRootSystem, params: dict[str, int]
) -> tuple[Generator, ...]:
    """Symbolic generators of a catalog family at vertex 0."""
    n = sys.rank
    if family_id in ("A1", "C3"):
        return tuple((_t(1, "w", i),) for i in range(1, n + 1))
    if family_id in ("A2", "B2", "C2", "D2", "E62", "E72", "E8", "F4", "G2"):
        return tuple((_t(2, "w", i),) for i in range(1, n + 1))
    if family_id in ("A3", "B1", "C1", "D1", "E61", "E71"):
        if family_id == "A3" and n != 1:
            raise ValueError("rank-1 family on a higher-rank system")
        return tuple((_t(2, "a", i),) for i in range(1, n + 1))
    if family_id == "A4":
        d = params["d"]
        if n < 2 or d < 1 or (n + 1) % d != 0:
            raise ValueError(f"invalid parameter d={d} for rank {n}")
        gens = [(_t(2, "a", i),) for i in range(2, n + 1)]
        gens.append((_t(2 * d, "w", n),))
        return tuple(gens)
    if family_id == "A5":
        k = params["k"]
        if n % 2 != 0 or k < 1:
            raise ValueError(f"invalid parameter k={k} for rank {n}")
        gens = [(_t(1, "a", i), _t(1, "a", i + 1)) for i in range(1, n)]
        gens.append((_t(k, "w", n - 1),))
        return tuple(gens)
    if family_id == "A6":
        e, r = params["e"], params["r"]
        if n % 2 == 0 or n < 3 or e < 1 or ((n + 1) // 2) % e != 0 or not 0 <= r <= e - 1:
            raise ValueError(f"invalid parameters e={e}, r={r} for rank {n}")
        gens = [(_t(1, "a", i), _t(1, "a", i + 1)) for i in range(2, n)]
        gens.append((_t(e, "w", n - 1),))
        if r:
            gens.append((_t(r, "w", n - 1), _t(1, "w", n)))
        else:
            gens.append((_t(1, "w", n),))
        return tuple(gens)
    if family_id == "B3":
        s = _short_root_index(sys)
        gens = [
            (_t(1, "a", i), _t(1, "a", j))
            for i, j in _adjacent_pairs(sys)
        ]
        gens.append((_t(2, "a", s),))
        return tuple(gens)
    if family_id == "B4":
        s = _short_root_index(sys)
        gens = [(_t(1, "w", i),) for i in range(1, n + 1) if i != s]
        gens.append((_t(2, "w", s),))
        return tuple(gens)
    if family_id == "D3":
        return _doubled_root_family(n, extra=(_t(2, "w", 1),))
    if family_id == "D4":
        return _doubled_root_family(n, extra=(_t(2, "w", n),))
    if family_id == "D5":
        # spans the doubled root lattice plus the doubled sum of the vector
        # and spinor weights; dropping a{n-1} here would lose 2a{n-1} itself
        gens = [(_t(2, "a", i),) for i in range(1, n + 1)]
        gens.append((_t(2, "w", 1), _t(2, "w", n)))
        return tuple(gens)
    raise ValueError(f"unknown family {family_id!r}")


def _adjacent_pairs(sys: AffineRootSystem) -> list[tuple[int, int]]:
    loc = local_system(sys, 0)
    out = []
    for a in range(len(loc.indices)):
        for b in range(a + 1, len(loc.indices)):
            if vdot(loc.simple_roots[a], loc.simple_roots[b]) != 0:
                out.append((loc.indices[a], loc.indices[b]))
    return out


def _doubled_root_family(n: int, extra: Generator) -> tuple[Generator, ...]:
    gens = [(_t(2, "a", i),) for i in range(1, n - 1)]
    gens.append((_t(2, "a", n),))
    gens.append(extra)
    return tuple(gens)


# ---------------------------------------------------------------------------
# the candidate catalog


def candidate_table(atype: AffineType) -> list[CandidateFamily]:
    """Lattice families that are smooth local models at vertex 0."""
    f, n, t = atype.family, atype.n, atype.twist

    def fam(fid: str, case: int) -> CandidateFamily:
        return CandidateFamily(
            id=fid, case=case, atype=atype, param_names=_PARAM_NAMES.get(fid, ())
        )

    rows: list[CandidateFamily] = []
    if t == 1 and f == "A":
        if n == 1:
            rows += [fam("A2", 1), fam("A3", 1), fam("A1", 3)]
        else:
            rows.append(fam("A4", 1))
            if n % 2 == 0:
                rows.append(fam("A5", 2))
            else:
                rows.append(fam("A6", 3))
    elif t == 1 and f == "B":
        rows += [fam("B1", 4), fam("B2", 4), fam("B3", 5), fam("B4", 5)]
    elif t == 1 and f == "C":
        rows += [fam("C1", 6), fam("C2", 6), fam("C3", 7)]
        if n == 2:
            rows += [fam("B3", 8), fam("B4", 8)]
    elif t == 1 and f == "D":
        rows += [fam("D1", 9), fam("D2", 9), fam("D3", 9)]
        if n % 2 == 0:
            rows += [fam("D4", 9), fam("D5", 9)]
    elif t == 1 and f == "E":
        rows += {
            6: [fam("E61", 10), fam("E62", 10)],
            7: [fam("E71", 11), fam("E72", 11)],
            8: [fam("E8", 12)],
        }[n]
    elif t == 1 and f == "F":
        rows.append(fam("F4", 13))
    elif t == 1 and f == "G":
        rows.append(fam("G2", 14))
    elif t == 2 and f == "A" and n % 2 == 0:
        rows += [fam("C1", 15), fam("C2", 15), fam("C3", 16)]
        if n == 4:
            rows += [fam("B3", 17), fam("B4", 17)]
    elif t == 2 and f == "A":
        rows += [fam("C1", 18), fam("C2", 18), fam("C3", 19)]
    elif t == 2 and f == "D":
        rows += [fam("B1", 20), fam("B2", 20), fam("B3", 21), fam("B4", 21)]
        if n == 3:
            rows.append(fam("C3", 22))
    elif t == 2 and f == "E":
        rows.append(fam("F4", 23))
    else:  # D4 triple twist
        rows.append(fam("G2", 24))
    return rows


def param_assignments(
    family_id: str, rank: int, bounds: Bounds
) -> list[dict[str, int]]:
    if family_id == "A4":
        return [{"d": d} for d in _divisors(rank + 1)]
    if family_id == "A5":
        return [{"k": k} for k in range(1, bounds.max_param + 1)]
    if family_id == "A6":
        return [
            {"e": e, "r": r}
            for e in _divisors((rank + 1) // 2)
            for r in range(0, e)
            if e <= bounds.max_param
        ]
    return [{}]


def instantiate(
    family: CandidateFamily, sys: AffineRootSystem, params: dict[str, int]
) -> LatticeSpec:
    """Concrete lattice at vertex 0; raises on parameter violations."""
    gens = family_generators(family.id, sys, params)
    return resolve_generators(sys, 0, gens)


# ---------------------------------------------------------------------------
# the expected table


@dataclass(frozen=True)
class ExpectedRow:
    case_number: int
    group: str
    order: int
    lattice_description: str
    parameter_condition: str


def expected_table() -> tuple[ExpectedRow, ...]:
    """The nine expected rows, with machine-checkable predicates attached
    through `expected_verdict`."""
    return (
        ExpectedRow(1, "any simple K except SU(2n+1) twisted", 0,
                    "2ZS <= L <= 2Lambda", "lattice sandwich"),
        ExpectedRow(2, "SU(n+1), n even", 1,
                    "Z S+ + Z(k*w{n-1})", "k | n+1"),
        ExpectedRow(3, "SU(n+1), n odd", 1,
                    "<a2+a3,...,a{n-1}+an, e*w{n-1}, r*w{n-1}+wn>",
                    "e | (n+1)/2, 0 <= r <= e-1"),
        ExpectedRow(4, "Sp(2n)", 1, "Lambda", "none"),
        ExpectedRow(5, "SU(5)", 2, "<2*w1; w2>", "none"),
        ExpectedRow(6, "SU(2n+1)", 2, "Lambda", "none"),
        ExpectedRow(7, "SU(2n+1)", 2, "2Lambda", "none"),
        ExpectedRow(8, "Spin(2n+2)", 2, "<w1,...,w{n-1}, 2wn>", "none"),
        ExpectedRow(9, "Spin(2n+2)", 2, "<a1+a2,...,a{n-1}+an, 2an>", "n odd"),
    )


def _is_twisted_even_a(atype: AffineType) -> bool:
    return atype.family == "A" and atype.twist == 2 and atype.n % 2 == 0


@lru_cache(maxsize=None)
def _reference_lattices(atype: AffineType):
    """Vertex-0 reference lattices used by the expected-row predicates."""
    sys = build(atype)
    loc = local_system(sys, 0)
    n = sys.rank
    weights = tuple(loc.weight(i) for i in range(1, n + 1))
    roots = tuple(loc.root(i) for i in range(1, n + 1))
    refs = {
        "L": weights,
        "2L": tuple(intlin.vscale(2, w) for w in weights),
        "2ZS": tuple(intlin.vscale(2, a) for a in roots),
    }
    return refs


def expected_verdict(
    sys: AffineRootSystem, family_id: str, params: dict[str, int], lat: LatticeSpec
) -> tuple[bool, int | None]:
    """Expected pair verdict for an instance, with the matching row number."""
    atype = sys.atype
    n = sys.rank
    refs = _reference_lattices(atype)

    if not _is_twisted_even_a(atype):
        if lattice_contains_rat(lat.coords, refs["2ZS"]) and lattice_contains_rat(
            refs["2L"], lat.coords
        ):
            return True, 1
    if atype.family == "A" and atype.twist == 1:
        if n % 2 == 0 and family_id == "A5" and (n + 1) % params["k"] == 0:
            return True, 2
        if n % 2 == 1 and family_id in ("A6", "A1"):
            return True, 3
    if atype.family == "C" and atype.twist == 1:
        if lattice_equal_rat(lat.coords, refs["L"]):
            return True, 4
    if _is_twisted_even_a(atype):
        if atype.n == 4:
            case5 = resolve_generators(
                sys, 0, ((Term(2, "w", 1),), (Term(1, "w", 2),))
            )
            if lattice_equal_rat(lat.coords, case5.coords):
                return True, 5
        if lattice_equal_rat(lat.coords, refs["L"]):
            return True, 6
        if lattice_equal_rat(lat.coords, refs["2L"]):
            return True, 7
    if atype.family == "D" and atype.twist == 2:
        b4 = resolve_generators(sys, 0, family_generators("B4", sys, {}))
        if lattice_equal_rat(lat.coords, b4.coords):
            return True, 8
        if n % 2 == 1:
            b3 = resolve_generators(sys, 0, family_generators("B3", sys, {}))
            if lattice_equal_rat(lat.coords, b3.coords):
                return True, 9
    return False, None


# ---------------------------------------------------------------------------
# the sweep


@dataclass(frozen=True)
class Instance:
    atype: AffineType
    family: str
    case: int
    params: tuple[tuple[str, int], ...]
    lattice: LatticeSpec
    report: PairReport
    expected: bool
    matched_row: int | None

    @property
    def agrees(self) -> bool:
        return self.report.is_spherical_pair == self.expected


@dataclass(frozen=True)
class ClassificationResult:
    instances: tuple[Instance, ...]

    @property
    def disagreements(self) -> tuple[Instance, ...]:
        return tuple(i for i in self.instances if not i.agrees)

    def merge(self, other: "ClassificationResult") -> "ClassificationResult":
        return ClassificationResult(self.instances + other.instances)


def classify(atype: AffineType, bounds: Bounds = Bounds()) -> ClassificationResult:
    """Check every catalog candidate of one affine system against the
    expected table."""
    sys = build(atype)
    instances = []
    for family in candidate_table(atype):
        for params in param_assignments(family.id, sys.rank, bounds):
            lat = instantiate(family, sys, params)
            report = check_spherical_pair(lat, sys)
            expected, row = expected_verdict(sys, family.id, params, lat)
            instances.append(
                Instance(
                    atype=atype,
                    family=family.id,
                    case=family.case,
                    params=tuple(sorted(params.items())),
                    lattice=lat,
                    report=report,
                    expected=expected,
                    matched_row=row,
                )
            )
    return ClassificationResult(tuple(instances))


def supported_types(bounds: Bounds = Bounds()) -> list[AffineType]:
    """Every affine system with subscript within the bound."""
    out: list[AffineType] = []
    for n in range(1, bounds.max_n + 1):
        out.append(AffineType("A", n, 1))
    for n in range(3, bounds.max_n + 1):
        out.append(AffineType("B", n, 1))
    for n in range(2, bounds.max_n + 1):
        out.append(AffineType("C", n, 1))
    for n in range(4, bounds.max_n + 1):
        out.append(AffineType("D", n, 1))
    for n in (6, 7, 8):
        if n <= bounds.max_n:
            out.append(AffineType("E", n, 1))
    if bounds.max_n >= 4:
        out.append(AffineType("F", 4, 1))
    if bounds.max_n >= 2:
        out.append(AffineType("G", 2, 1))
    for n in range(2, bounds.max_n + 1, 2):
        out.append(AffineType("A", n, 2))
    for n in range(5, bounds.max_n + 1, 2):
        out.append(AffineType("A", n, 2))
    for n in range(3, bounds.max_n + 1):
        out.append(AffineType("D", n, 2))
    if bounds.max_n >= 6:
        out.append(AffineType("E", 6, 2))
    if bounds.max_n >= 4:
        out.append(AffineType("D", 4, 3))
    return out


def classify_all(bounds: Bounds = Bounds()) -> ClassificationResult:
    result = ClassificationResult(())
    for atype in supported_types(bounds):
        result = result.merge(classify(atype, bounds))
    return result


# ---------------------------------------------------------------------------
# enumeration of intermediate lattices


def adapted_quotient(
    sub_rows, super_rows
) -> tuple[tuple[int, ...], tuple[RatVector, ...]]:
    """Adapt the super-lattice basis to a sublattice.

    Returns (orders, rows) where `rows` is a new basis of the super
    lattice and the sublattice is spanned by orders[i] * rows[i] over the
    positions with orders[i] > 0; orders[i] == 0 marks directions of the
    super lattice missing from the sublattice (free quotient directions).
    """
    sub = lattice_basis_rat(sub_rows)
    sup = lattice_basis_rat(super_rows)
    coeff_rows = []
    for v in sub:
        cols = [[w[d] for w in sup] for d in range(len(v))]
        sol = intlin.solve_exact(cols, list(v))
        if sol is None or any(c.denominator != 1 for c in sol):
            raise ValueError("sublattice is not contained in the super lattice")
        coeff_rows.append([int(c) for c in sol])
    c_mat = IntMatrix.from_rows(coeff_rows, cols=len(sup))
    d, _, v = intlin.smith_normal_form(c_mat)
    vinv = intlin.rational_inverse(
        [[Fraction(v[i, j]) for j in range(v.cols)] for i in range(v.rows)]
    )
    new_rows = []
    for i in range(len(sup)):
        acc = [Fraction(0)] * len(sup[0])
        for j in range(len(sup)):
            for dcoord, comp in enumerate(sup[j]):
                acc[dcoord] += vinv[i][j] * comp
        new_rows.append(tuple(acc))
    orders = tuple(
        d[i, i] if i < c_mat.rows else 0 for i in range(len(sup))
    )
    return orders, tuple(new_rows)


def _closure(orders, gens) -> frozenset:
    zero = tuple(0 for _ in orders)
    seen = {zero}
    frontier = [zero]
    while frontier:
        cur = frontier.pop()
        for g in gens:
            nxt = tuple((a + b) % d for a, b, d in zip(cur, g, orders))
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return frozenset(seen)


def enumerate_subgroups(orders: tuple[int, ...]) -> list[frozenset]:
    """All subgroups of the product of cyclic groups Z_orders."""
    elements = list(product(*(range(d) for d in orders)))
    subgroups = {_closure(orders, [])}
    changed = True
    while changed:
        changed = False
        for sg in list(subgroups):
            for g in elements:
                if g in sg:
                    continue
                bigger = _closure(orders, list(sg) + [g])
                if bigger not in subgroups:
                    subgroups.add(bigger)
                    changed = True
    return sorted(subgroups, key=lambda s: (len(s), sorted(s)))


def intermediate_sweep(
    atype: AffineType, limit: int = 512
) -> list[tuple[LatticeSpec, PairReport]]:
    """Pair-check every lattice between the doubled root lattice and the
    doubled weight lattice at vertex 0."""
    sys = build(atype)
    refs = _reference_lattices(atype)
    orders, rows = adapted_quotient(refs["2ZS"], refs["2L"])
    if any(o == 0 for o in orders):
        raise ValueError("doubled root lattice is not of full rank")
    index = 1
    for o in orders:
        index *= o
    if index > limit:
        raise ValueError(f"quotient of order {index} exceeds the sweep limit {limit}")
    out = []
    seen: set = set()
    for sg in enumerate_subgroups(orders):
        lat_rows = [intlin.vscale(o, r) for o, r in zip(orders, rows)]
        for h in sorted(sg):
            if any(h):
                vec = tuple(Fraction(0) for _ in rows[0])
                for hi, r in zip(h, rows):
                    vec = intlin.vadd(vec, intlin.vscale(hi, r))
                lat_rows.append(vec)
        basis = lattice_basis_rat(lat_rows)
        if basis in seen:
            continue
        seen.add(basis)
        lat = lattice_from_coords(sys, 0, basis)
        out.append((lat, check_spherical_pair(lat, sys)))
    return out


# ---------------------------------------------------------------------------
# renderings


def compact_group_label(atype: AffineType) -> tuple[str, int]:
    f, n, t = atype.family, atype.n, atype.twist
    if f == "A":
        return f"SU({n + 1})", t
    if f == "B":
        return f"Spin({2 * n + 1})", t
    if f == "C":
        return f"Sp({2 * n})", t
    if f == "D":
        return f"Spin({2 * n})", t
    if f == "E":
        return f"E{n}", t
    if f == "F":
        return "F4", t
    return "G2", t


def instance_json(inst: Instance) -> dict:
    failure = inst.report.first_failure()
    return {
        "type": inst.atype.label(),
        "family": inst.family,
        "case": inst.case,
        "params": dict(inst.params),
        "lattice": inst.lattice.render(),
        "is_spherical_pair": inst.report.is_spherical_pair,
        "expected": inst.expected,
        "matched_row": inst.matched_row,
        "agrees": inst.agrees,
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
            for r in inst.report.per_vertex
        ],
    }


def result_json(result: ClassificationResult) -> dict:
    return {
        "instances": [instance_json(i) for i in result.instances],
        "instance_count": len(result.instances),
        "disagreement_count": len(result.disagreements),
        "expected_rows": [
            {
                "case": row.case_number,
                "group": row.group,
                "order": row.order,
                "lattice": row.lattice_description,
                "condition": row.parameter_condition,
            }
            for row in expected_table()
        ],
    }


def result_markdown(result: ClassificationResult) -> str:
    lines = [
        "| case | group | ord | lattice | condition | verified instances |",
        "|------|-------|-----|---------|-----------|--------------------|",
    ]
    for row in expected_table():
        hits = [
            i
            for i in result.instances
            if i.matched_row == row.case_number and i.report.is_spherical_pair
        ]
        grp = row.group if row.case_number != 1 else "(all but SU(2n+1) tw.)"
        ordtxt = "any" if row.case_number == 1 else str(row.order)
        lines.append(
            f"| {row.case_number} | {grp} | {ordtxt} | {row.lattice_description} "
            f"| {row.parameter_condition} | {len(hits)} |"
        )
    rejected = [i for i in result.instances if not i.expected]
    correct_rejects = sum(1 for i in rejected if not i.report.is_spherical_pair)
    lines.append("")
    lines.append(
        f"candidates outside the table: {len(rejected)} "
        f"(correctly rejected: {correct_rejects})"
    )
    lines.append(f"disagreements: {len(result.disagreements)}")
    return "\n".join(lines)


def result_csv_rows(result: ClassificationResult) -> list[list[str]]:
    rows = [
        ["type", "family", "case", "params", "lattice", "verdict", "expected",
         "matched_row", "agrees", "failing_vertex"]
    ]
    for i in result.instances:
        failure = i.report.first_failure()
        rows.append(
            [
                i.atype.label(),
                i.family,
                str(i.case),
                ";".join(f"{k}={v}" for k, v in i.params),
                i.lattice.render(),
                str(i.report.is_spherical_pair),
                str(i.expected),
                "" if i.matched_row is None else str(i.matched_row),
                str(i.agrees),
                "" if failure is None else str(failure.vertex),
            ]
        )
    return rows


def result_text(result: ClassificationResult) -> str:
    lines = []
    for i in result.instances:
        params = ", ".join(f"{k}={v}" for k, v in i.params)
        verdict = "pair" if i.report.is_spherical_pair else "not a pair"
        expect = "pair" if i.expected else "not a pair"
        mark = "ok" if i.agrees else "MISMATCH"
        failure = i.report.first_failure()
        where = "" if failure is None else f"  fails at X{failure.vertex}"
        lines.append(
            f"{i.atype.label():>9}  {i.family:<3} {params:<12} -> {verdict:<10}"
            f" expected {expect:<10} [{mark}]{where}"
        )
    lines.append(
        f"instances: {len(result.instances)}, disagreements: {len(result.disagreements)}"
    )
    return "\n".join(lines)
