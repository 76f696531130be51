"""Spherical-variety combinatorics over a chosen affine root system.

A full-rank sublattice of the vertex-0 weight lattice is tested, vertex
by vertex, against the combinatorial smoothness criterion for saturated
weight monoids: compute the spherical roots the lattice supports, the
maximal subset of local simple roots whose coroots positively combine
into the valuation cone, and the three smoothness conditions (dual
basis extension, orthogonality, no doubled root in the support).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm

from . import intlin
from .intlin import (
    IntMatrix,
    LinearConstraintSystem,
    RatVector,
    strict_feasible,
    vadd,
    vdot,
    vscale,
)
from .rootsys import (
    AffineRootSystem,
    AffineType,
    LocalSystem,
    express_in_local_basis,
    finite_type_label,
    local_system,
)


class UniquenessError(AssertionError):
    """The feasible support subsets failed to have a unique maximal element."""


# ---------------------------------------------------------------------------
# lattices with rational coordinates


@dataclass(frozen=True)
class Term:
    """One summand c*w<i> (fundamental weight) or c*a<i> (simple root)."""

    coefficient: int
    kind: str  # "w" or "a"
    index: int

    def __post_init__(self):
        if self.kind not in ("w", "a"):
            raise ValueError(f"unknown term kind {self.kind!r}")

    def render(self, leading: bool) -> str:
        c = self.coefficient
        sign = "-" if c < 0 else ("" if leading else "+")
        mag = abs(c)
        coef = "" if mag == 1 else f"{mag}*"
        return f"{sign}{coef}{self.kind}{self.index}"


Generator = tuple[Term, ...]


def render_generator(g: Generator) -> str:
    return "".join(t.render(i == 0) for i, t in enumerate(g))


@dataclass(frozen=True)
class LatticeSpec:
    """A sublattice of a local weight lattice, resolved to exact coordinates.

    `generators` is the symbolic form over the weight/root basis at
    `basis_vertex`; `coords` are the corresponding ambient vectors.  The
    integer form is the coordinate matrix cleared by `scale`.
    """

    atype: AffineType
    basis_vertex: int
    generators: tuple[Generator, ...]
    coords: tuple[RatVector, ...]

    @property
    def scale(self) -> int:
        return _common_denominator(self.coords)

    @property
    def resolved(self) -> IntMatrix:
        return _scaled_matrix(self.coords, self.scale)

    def render(self) -> str:
        return "; ".join(render_generator(g) for g in self.generators)


def _common_denominator(rows) -> int:
    d = 1
    for row in rows:
        for c in row:
            d = lcm(d, Fraction(c).denominator)
    return d


def _scaled_matrix(rows, scale: int) -> IntMatrix:
    return IntMatrix.from_rows(
        [[int(Fraction(c) * scale) for c in row] for row in rows],
        cols=len(rows[0]) if rows else 0,
    )


def lattice_rank(rows) -> int:
    scale = _common_denominator(rows)
    return intlin.lattice_basis(_scaled_matrix(rows, scale)).rows


def lattice_member_rat(rows, v: RatVector) -> bool:
    scale = _common_denominator(list(rows) + [v])
    basis = _scaled_matrix(rows, scale)
    return intlin.lattice_member(basis, [int(Fraction(c) * scale) for c in v])


def lattice_contains_rat(a_rows, b_rows) -> bool:
    scale = _common_denominator(list(a_rows) + list(b_rows))
    return intlin.lattice_contains(
        _scaled_matrix(a_rows, scale), _scaled_matrix(b_rows, scale)
    )


def lattice_equal_rat(a_rows, b_rows) -> bool:
    return lattice_contains_rat(a_rows, b_rows) and lattice_contains_rat(b_rows, a_rows)


def lattice_basis_rat(rows) -> tuple[RatVector, ...]:
    scale = _common_denominator(rows)
    basis = intlin.lattice_basis(_scaled_matrix(rows, scale))
    return tuple(
        tuple(Fraction(x, scale) for x in basis.row(i)) for i in range(basis.rows)
    )


def resolve_generators(
    sys: AffineRootSystem, vertex: int, generators: tuple[Generator, ...]
) -> LatticeSpec:
    """Turn symbolic generators at a vertex into an exact LatticeSpec."""
    loc = local_system(sys, vertex)
    coords = []
    for g in generators:
        total = tuple(Fraction(0) for _ in range(sys.ambient_dim))
        for term in g:
            if not (0 <= term.index <= sys.rank) or term.index == vertex:
                raise ValueError(
                    f"index {term.index} not available at vertex {vertex}"
                )
            vec = loc.weight(term.index) if term.kind == "w" else loc.root(term.index)
            total = vadd(total, vscale(term.coefficient, vec))
        coords.append(total)
    spec = LatticeSpec(
        atype=sys.atype,
        basis_vertex=vertex,
        generators=tuple(generators),
        coords=tuple(coords),
    )
    if lattice_rank(spec.coords) != sys.rank:
        raise ValueError("rank-deficient generator set")
    return spec


def weight_lattice_rows(loc: LocalSystem) -> tuple[RatVector, ...]:
    return loc.fundamental_weights


def lattice_from_coords(
    sys: AffineRootSystem, vertex: int, rows
) -> LatticeSpec:
    """Build a LatticeSpec from ambient coordinate rows, deriving the
    symbolic weight expression at the given vertex."""
    loc = local_system(sys, vertex)
    basis = lattice_basis_rat(rows)
    gens = []
    for vec in basis:
        coeffs = express_in_local_basis(vec, loc)
        terms = []
        for pos, c in enumerate(coeffs):
            if c == 0:
                continue
            if c.denominator != 1:
                raise ValueError("lattice is not integral over the local weights")
            terms.append(Term(int(c), "w", loc.indices[pos]))
        gens.append(tuple(terms) if terms else (Term(0, "w", loc.indices[0]),))
    spec = LatticeSpec(
        atype=sys.atype, basis_vertex=vertex, generators=tuple(gens), coords=basis
    )
    if lattice_rank(spec.coords) != sys.rank:
        raise ValueError("rank-deficient generator set")
    return spec


def transport_lattice(
    lat: LatticeSpec, sys: AffineRootSystem, target_vertex: int
) -> LatticeSpec:
    """Re-express the same geometric lattice over the weights at another vertex."""
    if target_vertex == lat.basis_vertex:
        return lat
    loc = local_system(sys, target_vertex)
    new_gens = []
    for vec in lat.coords:
        coeffs = express_in_local_basis(vec, loc)
        terms = []
        for pos, c in enumerate(coeffs):
            if c == 0:
                continue
            if c.denominator != 1:
                raise ValueError(
                    "lattice is not integral over the weights at the target vertex"
                )
            terms.append(Term(int(c), "w", loc.indices[pos]))
        new_gens.append(tuple(terms) if terms else (Term(0, "w", loc.indices[0]),))
    return LatticeSpec(
        atype=lat.atype,
        basis_vertex=target_vertex,
        generators=tuple(new_gens),
        coords=lat.coords,
    )


# ---------------------------------------------------------------------------
# spherical roots


@dataclass(frozen=True)
class SphericalRootSet:
    """Doubled simple roots and non-orthogonal sums supported by a lattice."""

    doubled: tuple[tuple[int, RatVector], ...]  # (root index, 2*gradient)
    sums: tuple[tuple[int, int, RatVector], ...]  # (i, j, gradient sum), i < j

    def vectors(self) -> tuple[RatVector, ...]:
        return tuple(v for _, v in self.doubled) + tuple(v for _, _, v in self.sums)

    def doubled_indices(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.doubled)

    def describe(self) -> list[str]:
        return [f"2a{i}" for i, _ in self.doubled] + [
            f"a{i}+a{j}" for i, j, _ in self.sums
        ]

    def __len__(self) -> int:
        return len(self.doubled) + len(self.sums)


def candidate_spherical_roots(
    loc: LocalSystem,
) -> tuple[tuple[tuple[int, RatVector], ...], tuple[tuple[int, int, RatVector], ...]]:
    """All doubled roots and all sums of distinct non-orthogonal simple roots."""
    doubled = tuple((j, vscale(2, loc.root(j))) for j in loc.indices)
    sums = []
    for i, j in combinations(loc.indices, 2):
        if vdot(loc.root(i), loc.root(j)) != 0:
            sums.append((i, j, vadd(loc.root(i), loc.root(j))))
    return doubled, tuple(sums)


def spherical_roots(lat: LatticeSpec, loc: LocalSystem) -> SphericalRootSet:
    """Spherical roots of the saturated monoid cut out by the lattice at loc.

    A doubled root needs membership in the lattice and an even pairing of
    its coroot with every generator; a sum only needs membership.
    """
    doubled_c, sums_c = candidate_spherical_roots(loc)
    doubled = []
    for j, vec in doubled_c:
        if not lattice_member_rat(lat.coords, vec):
            continue
        cr = loc.coroot_of(j)
        pairings = [vdot(cr, g) for g in lat.coords]
        if any(p.denominator != 1 for p in pairings):
            raise ValueError("lattice pairs non-integrally with a local coroot")
        if all(int(p) % 2 == 0 for p in pairings):
            doubled.append((j, vec))
    sums = [
        (i, j, vec) for i, j, vec in sums_c if lattice_member_rat(lat.coords, vec)
    ]
    return SphericalRootSet(doubled=tuple(doubled), sums=tuple(sums))


# ---------------------------------------------------------------------------
# support subsets against the valuation cone

_support_cache: dict[tuple, tuple[int, ...]] = {}


def _feasible_positions(pairing: tuple[tuple[Fraction, ...], ...], subset) -> bool:
    dim = len(subset)
    strict = tuple(
        tuple(Fraction(1 if k == a else 0) for k in range(dim)) for a in range(dim)
    )
    nsigma = len(pairing[0]) if pairing else 0
    nonstrict = tuple(
        tuple(pairing[pos][s] for pos in subset) for s in range(nsigma)
    )
    return strict_feasible(
        LinearConstraintSystem(strict_positive=strict, nonstrict=nonstrict, dim=dim)
    )


def _maximal_feasible(pairing: tuple[tuple[Fraction, ...], ...]) -> tuple[int, ...]:
    n = len(pairing)
    if pairing in _support_cache:
        return _support_cache[pairing]
    best = None
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            if _feasible_positions(pairing, subset):
                best = subset
                break
        if best is not None:
            break
    assert best is not None  # the empty subset is always feasible
    best_set = set(best)
    for size in range(len(best), 0, -1):
        for subset in combinations(range(n), size):
            if set(subset) <= best_set:
                continue
            if _feasible_positions(pairing, subset):
                raise UniquenessError(
                    f"feasible subset {subset} not contained in maximum {best}"
                )
    _support_cache[pairing] = best
    return best


def critical_support(
    lat: LatticeSpec, sigma: SphericalRootSet, loc: LocalSystem
) -> tuple[int, ...]:
    """Maximal set of local simple roots whose coroots positively combine
    to pair <= 0 with every spherical root.

    Restriction of the coroots to the lattice is injective at full rank,
    so pairings are evaluated in ambient coordinates.  Subsets are searched
    in decreasing size; a full sweep then certifies that every feasible
    subset sits inside the returned one.
    """
    vectors = sigma.vectors()
    pairing = tuple(
        tuple(vdot(loc.coroots[pos], s) for s in vectors)
        for pos in range(loc.rank)
    )
    best = _maximal_feasible(pairing)
    return tuple(loc.indices[pos] for pos in best)


# ---------------------------------------------------------------------------
# the smoothness criterion at one vertex


@dataclass(frozen=True)
class SmoothnessReport:
    """Outcome of the smoothness test at one alcove vertex."""

    vertex: int
    local_label: str
    sigma: SphericalRootSet
    critical_roots: tuple[int, ...]
    cond1: bool  # restricted coroots extend to a basis of the dual lattice
    cond2: bool  # critical roots pairwise orthogonal
    cond3: bool  # no critical root has its double among the spherical roots

    @property
    def smooth(self) -> bool:
        return self.cond1 and self.cond2 and self.cond3


def coroot_pairing_matrix(
    lat: LatticeSpec, loc: LocalSystem, root_indices
) -> IntMatrix:
    """Pairings of a lattice basis (rows) with chosen local coroots (columns)."""
    basis = lattice_basis_rat(lat.coords)
    rows = []
    for b in basis:
        row = []
        for j in root_indices:
            p = vdot(loc.coroot_of(j), b)
            if p.denominator != 1:
                raise ValueError("non-integral coroot pairing")
            row.append(int(p))
        rows.append(row)
    return IntMatrix.from_rows(rows, cols=len(list(root_indices)))


def smoothness(lat: LatticeSpec, loc: LocalSystem) -> SmoothnessReport:
    """Run the three-part smoothness criterion for the saturated monoid."""
    sigma = spherical_roots(lat, loc)
    crit = critical_support(lat, sigma, loc)
    if crit:
        pairing = coroot_pairing_matrix(lat, loc, crit)
        cond1 = intlin.subset_of_basis(pairing)
    else:
        cond1 = True
    cond2 = all(
        vdot(loc.root(i), loc.root(j)) == 0 for i, j in combinations(crit, 2)
    )
    doubled = sigma.doubled_indices()
    cond3 = not any(i in doubled for i in crit)
    return SmoothnessReport(
        vertex=loc.vertex_index,
        local_label=finite_type_label(loc.simple_roots),
        sigma=sigma,
        critical_roots=crit,
        cond1=cond1,
        cond2=cond2,
        cond3=cond3,
    )


# ---------------------------------------------------------------------------
# the vertex-by-vertex pair decision


@dataclass(frozen=True)
class PairReport:
    """Aggregated smoothness reports over all alcove vertices."""

    atype: AffineType
    lattice: LatticeSpec
    per_vertex: tuple[SmoothnessReport, ...]

    @property
    def is_spherical_pair(self) -> bool:
        return all(r.smooth for r in self.per_vertex)

    def first_failure(self) -> SmoothnessReport | None:
        return next((r for r in self.per_vertex if not r.smooth), None)


def check_spherical_pair(lat: LatticeSpec, sys: AffineRootSystem) -> PairReport:
    """Run the smoothness criterion at every alcove vertex.

    The lattice must lie inside the vertex-0 weight lattice (which sits
    inside the weight lattice of every other vertex), so that all coroot
    pairings stay integral.
    """
    loc0 = local_system(sys, 0)
    if not lattice_contains_rat(loc0.fundamental_weights, lat.coords):
        raise ValueError("lattice is not contained in the vertex-0 weight lattice")
    reports = tuple(
        smoothness(lat, local_system(sys, i)) for i in range(sys.rank + 1)
    )
    return PairReport(atype=sys.atype, lattice=lat, per_vertex=reports)
