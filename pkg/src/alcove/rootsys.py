"""Irreducible affine root systems with exact coordinates.

Each supported system is built from its classical realization: simple
roots are affine-linear functions on a rational ambient space (possibly
cut out by linear constraints), with the node labels of the affine
diagram attached.  From these we derive alcove vertices, the finite
root system seen at each vertex, fundamental weights per vertex, and
the base change between the weight bases of different vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .intlin import (
    RatVector,
    is_zero_vector,
    rational_inverse,
    rational_kernel,
    ratvec,
    solve_exact,
    vdot,
    vscale,
)

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")


@dataclass(frozen=True)
class AffineType:
    """A named affine system: family letter, subscript n, twist order."""

    family: str
    n: int
    twist: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if not self._valid():
            raise ValueError(f"no affine system {self.label()}")

    def _valid(self) -> bool:
        f, n, t = self.family, self.n, self.twist
        if t == 1:
            return (
                (f == "A" and n >= 1)
                or (f == "B" and n >= 3)
                or (f == "C" and n >= 2)
                or (f == "D" and n >= 4)
                or (f == "E" and n in (6, 7, 8))
                or (f == "F" and n == 4)
                or (f == "G" and n == 2)
            )
        if t == 2:
            # twisted rows: A_2, A_{2n} (n>=2), A_{2n-1} (n>=3), D_{n+1} (n>=2), E_6
            if f == "A":
                return n == 2 or (n % 2 == 0 and n >= 4) or (n % 2 == 1 and n >= 5)
            if f == "D":
                return n >= 3
            if f == "E":
                return n == 6
            return False
        if t == 3:
            return f == "D" and n == 4
        return False

    @property
    def rank(self) -> int:
        """Number of classical nodes = dimension of the alcove."""
        f, n, t = self.family, self.n, self.twist
        if t == 1:
            return {"A": n, "B": n, "C": n, "D": n, "E": n, "F": 4, "G": 2}[f]
        if t == 2:
            if f == "A":
                return n // 2 if n % 2 == 0 else (n + 1) // 2
            if f == "D":
                return n - 1
            return 4  # E6 twisted
        return 2  # D4 triple twist

    def label(self) -> str:
        return f"{self.family}{self.n}^({self.twist})"


@dataclass(frozen=True)
class AffineFunction:
    """Affine-linear function x -> constant + <gradient, x>."""

    constant: Fraction
    gradient: RatVector

    def __call__(self, point: RatVector) -> Fraction:
        return self.constant + vdot(self.gradient, point)


@dataclass(frozen=True)
class AffineRootSystem:
    atype: AffineType
    ambient_dim: int
    simple_roots: tuple[AffineFunction, ...]
    labels: tuple[int, ...]
    subspace_constraints: tuple[RatVector, ...]
    span_basis: tuple[RatVector, ...]

    @property
    def rank(self) -> int:
        return self.atype.rank

    @property
    def delta_constant(self) -> Fraction:
        """Constant value of sum(label_i * root_i); 2 on the A_{2n}^(2) rows."""
        return sum(
            (k * a.constant for k, a in zip(self.labels, self.simple_roots)),
            Fraction(0),
        )


def _zero(m: int) -> list[Fraction]:
    return [Fraction(0)] * m


def _eps(m: int, assignments: dict[int, Fraction | int]) -> RatVector:
    v = _zero(m)
    for idx, c in assignments.items():
        v[idx] = Fraction(c)
    return tuple(v)


def _chain(m: int, i: int) -> RatVector:
    # epsilon_i - epsilon_{i+1}, 1-based index
    return _eps(m, {i - 1: 1, i: -1})


def _realization(atype: AffineType):
    """Ambient dimension, constraints, (constant, gradient) list, labels."""
    f, n, t = atype.family, atype.n, atype.twist
    r = atype.rank
    half = Fraction(1, 2)
    if t == 1 and f == "A":
        m = n + 1
        roots = [(1, _eps(m, {0: -1, m - 1: 1}))]
        roots += [(0, _chain(m, i)) for i in range(1, n + 1)]
        return m, [ratvec([1] * m)], roots, [1] * (n + 1)
    if t == 1 and f == "B":
        m = n
        roots = [(1, _eps(m, {0: -1, 1: -1}))]
        roots += [(0, _chain(m, i)) for i in range(1, n)]
        roots.append((0, _eps(m, {n - 1: 1})))
        return m, [], roots, [1, 1] + [2] * (n - 1)
    if t == 1 and f == "C":
        m = n
        roots = [(1, _eps(m, {0: -2}))]
        roots += [(0, _chain(m, i)) for i in range(1, n)]
        roots.append((0, _eps(m, {n - 1: 2})))
        return m, [], roots, [1] + [2] * (n - 1) + [1]
    if t == 1 and f == "D":
        m = n
        roots = [(1, _eps(m, {0: -1, 1: -1}))]
        roots += [(0, _chain(m, i)) for i in range(1, n)]
        roots.append((0, _eps(m, {n - 2: 1, n - 1: 1})))
        return m, [], roots, [1, 1] + [2] * (n - 3) + [1, 1]
    if t == 1 and f == "E":
        m = 8
        alpha1 = tuple(
            half * c for c in (1, -1, -1, -1, -1, -1, -1, 1)
        )
        base = {
            2: _eps(m, {0: 1, 1: 1}),
            3: _eps(m, {1: 1, 0: -1}),
            4: _eps(m, {2: 1, 1: -1}),
            5: _eps(m, {3: 1, 2: -1}),
            6: _eps(m, {4: 1, 3: -1}),
            7: _eps(m, {5: 1, 4: -1}),
            8: _eps(m, {6: 1, 5: -1}),
        }
        if n == 6:
            constraints = [
                _eps(m, {5: 1, 6: -1}),
                _eps(m, {5: 1, 7: 1}),
            ]
            a0 = tuple(-half * c for c in (1, 1, 1, 1, 1, -1, -1, 1))
            roots = [(1, a0), (0, alpha1)] + [(0, base[i]) for i in range(2, 7)]
            return m, constraints, roots, [1, 1, 2, 2, 3, 2, 1]
        if n == 7:
            constraints = [_eps(m, {6: 1, 7: 1})]
            a0 = _eps(m, {6: 1, 7: -1})
            roots = [(1, a0), (0, alpha1)] + [(0, base[i]) for i in range(2, 8)]
            return m, constraints, roots, [1, 2, 2, 3, 4, 3, 2, 1]
        a0 = _eps(m, {6: -1, 7: -1})
        roots = [(1, a0), (0, alpha1)] + [(0, base[i]) for i in range(2, 9)]
        return m, [], roots, [1, 2, 3, 4, 6, 5, 4, 3, 2]
    if t == 1 and f == "F":
        m = 4
        roots = [
            (1, _eps(m, {0: -1, 1: -1})),
            (0, _eps(m, {1: 1, 2: -1})),
            (0, _eps(m, {2: 1, 3: -1})),
            (0, _eps(m, {3: 1})),
            (0, tuple(half * c for c in (1, -1, -1, -1))),
        ]
        return m, [], roots, [1, 2, 3, 4, 2]
    if t == 1 and f == "G":
        m = 3
        roots = [
            (1, _eps(m, {0: 1, 1: 1, 2: -2})),
            (0, _eps(m, {0: 1, 1: -1})),
            (0, _eps(m, {0: -2, 1: 1, 2: 1})),
        ]
        return m, [ratvec([1, 1, 1])], roots, [1, 3, 2]
    if t == 2 and f == "A" and n == 2:
        roots = [(1, (-half,)), (0, (Fraction(1),))]
        return 1, [], roots, [2, 1]
    if t == 2 and f == "A" and n % 2 == 0:
        m = r
        roots = [(1, _eps(m, {0: -1}))]
        roots += [(0, _chain(m, i)) for i in range(1, r)]
        roots.append((0, _eps(m, {r - 1: 2})))
        return m, [], roots, [2] * r + [1]
    if t == 2 and f == "A":
        m = r
        roots = [(1, _eps(m, {0: -1, 1: -1}))]
        roots += [(0, _chain(m, i)) for i in range(1, r)]
        roots.append((0, _eps(m, {r - 1: 2})))
        return m, [], roots, [1, 1] + [2] * (r - 2) + [1]
    if t == 2 and f == "D":
        m = r
        roots = [(1, _eps(m, {0: -1}))]
        roots += [(0, _chain(m, i)) for i in range(1, r)]
        roots.append((0, _eps(m, {r - 1: 1})))
        return m, [], roots, [1] * (r + 1)
    if t == 2 and f == "E":
        m = 4
        roots = [
            (1, _eps(m, {0: -1})),
            (0, tuple(half * c for c in (1, -1, -1, -1))),
            (0, _eps(m, {3: 1})),
            (0, _eps(m, {2: 1, 3: -1})),
            (0, _eps(m, {1: 1, 2: -1})),
        ]
        return m, [], roots, [1, 2, 3, 2, 1]
    # D4 triple twist
    m = 3
    roots = [
        (1, _eps(m, {1: 1, 2: -1})),
        (0, _eps(m, {0: 1, 1: -1})),
        (0, _eps(m, {0: -2, 1: 1, 2: 1})),
    ]
    return m, [ratvec([1, 1, 1])], roots, [1, 2, 1]


@lru_cache(maxsize=None)
def build(atype: AffineType) -> AffineRootSystem:
    """Construct the affine root system with its classical coordinates."""
    m, constraints, roots, labels = _realization(atype)
    simple = tuple(AffineFunction(Fraction(c), ratvec(g)) for c, g in roots)
    span = tuple(rational_kernel([list(c) for c in constraints], m))
    sys = AffineRootSystem(
        atype=atype,
        ambient_dim=m,
        simple_roots=simple,
        labels=tuple(labels),
        subspace_constraints=tuple(constraints),
        span_basis=span,
    )
    _check_construction(sys)
    return sys


def _check_construction(sys: AffineRootSystem) -> None:
    m = sys.ambient_dim
    total = _zero(m)
    for k, a in zip(sys.labels, sys.simple_roots):
        for i, c in enumerate(a.gradient):
            total[i] += k * c
    if not is_zero_vector(total):
        raise AssertionError(f"label relation fails for {sys.atype.label()}")
    # the constant of the label relation is 1 except on the A_{2n}^(2) rows
    expected = 2 if sys.labels[0] == 2 else 1
    if sys.delta_constant != expected:
        raise AssertionError(f"wrong level for {sys.atype.label()}")
    for a in sys.simple_roots:
        for c in sys.subspace_constraints:
            if vdot(a.gradient, c) != 0:
                raise AssertionError("root gradient violates an ambient constraint")
    if len(sys.span_basis) != sys.rank:
        raise AssertionError("constrained span has wrong dimension")


def coroot(sys: AffineRootSystem, i: int) -> RatVector:
    """Gradient coroot 2a/|a|^2 of the i-th simple root."""
    if not 0 <= i <= sys.rank:
        raise IndexError(f"root index {i} out of range")
    g = sys.simple_roots[i].gradient
    return vscale(Fraction(2) / vdot(g, g), g)


def coroot_relation(sys: AffineRootSystem) -> tuple[int, ...]:
    """Coprime integer coefficients c with sum(c_i * coroot_i) = 0."""
    raw = [
        k * vdot(a.gradient, a.gradient)
        for k, a in zip(sys.labels, sys.simple_roots)
    ]
    denom_lcm = 1
    for c in raw:
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in raw]
    g = 0
    for x in ints:
        g = gcd(g, x)
    coeffs = tuple(x // g for x in ints)
    total = _zero(sys.ambient_dim)
    for c, i in zip(coeffs, range(sys.rank + 1)):
        for j, comp in enumerate(coroot(sys, i)):
            total[j] += c * comp
    if not is_zero_vector(total):
        raise AssertionError("coroot relation does not close")
    return coeffs


@lru_cache(maxsize=None)
def _vertex_cached(atype: AffineType, i: int) -> RatVector:
    sys = build(atype)
    rows = [list(sys.simple_roots[j].gradient) for j in range(sys.rank + 1) if j != i]
    rhs = [-sys.simple_roots[j].constant for j in range(sys.rank + 1) if j != i]
    for c in sys.subspace_constraints:
        rows.append(list(c))
        rhs.append(Fraction(0))
    sol = solve_exact(rows, rhs)
    if sol is None:
        raise ValueError(f"vertex system inconsistent for {atype.label()} at {i}")
    return sol


def vertex(sys: AffineRootSystem, i: int) -> RatVector:
    """The alcove corner where every simple root except the i-th vanishes."""
    if not 0 <= i <= sys.rank:
        raise IndexError(f"vertex index {i} out of range")
    return _vertex_cached(sys.atype, i)


@dataclass(frozen=True)
class LocalSystem:
    """The finite root system seen at one alcove vertex.

    Parallel tuples are ordered by the original affine indices (all nodes
    except the vertex index).  Fundamental weights are the vectors in the
    constrained span pairing as delta_{jk} with the coroots; components
    orthogonal to the span are zero.
    """

    atype: AffineType
    vertex_index: int
    indices: tuple[int, ...]
    simple_roots: tuple[RatVector, ...]
    coroots: tuple[RatVector, ...]
    fundamental_weights: tuple[RatVector, ...]
    vertex_point: RatVector

    @property
    def rank(self) -> int:
        return len(self.indices)

    def position(self, j: int) -> int:
        return self.indices.index(j)

    def root(self, j: int) -> RatVector:
        return self.simple_roots[self.position(j)]

    def coroot_of(self, j: int) -> RatVector:
        return self.coroots[self.position(j)]

    def weight(self, j: int) -> RatVector:
        return self.fundamental_weights[self.position(j)]


@lru_cache(maxsize=None)
def _local_cached(atype: AffineType, i: int) -> LocalSystem:
    sys = build(atype)
    indices = tuple(j for j in range(sys.rank + 1) if j != i)
    roots = tuple(sys.simple_roots[j].gradient for j in indices)
    coroots = tuple(coroot(sys, j) for j in indices)
    span = sys.span_basis
    gram = [[vdot(cr, b) for b in span] for cr in coroots]
    inv = rational_inverse(gram)
    weights = []
    for pos in range(len(indices)):
        w = _zero(sys.ambient_dim)
        for b_idx, b in enumerate(span):
            c = inv[b_idx][pos]
            for j, comp in enumerate(b):
                w[j] += c * comp
        weights.append(tuple(w))
    loc = LocalSystem(
        atype=atype,
        vertex_index=i,
        indices=indices,
        simple_roots=roots,
        coroots=coroots,
        fundamental_weights=tuple(weights),
        vertex_point=vertex(sys, i),
    )
    for a, cr in enumerate(coroots):
        for b, w in enumerate(loc.fundamental_weights):
            if vdot(w, cr) != (1 if a == b else 0):
                raise AssertionError("weight pairing failed")
    return loc


def local_system(sys: AffineRootSystem, i: int) -> LocalSystem:
    """Roots, coroots and fundamental weights of the stabilizer at vertex i."""
    if not 0 <= i <= sys.rank:
        raise IndexError(f"vertex index {i} out of range")
    return _local_cached(sys.atype, i)


def express_in_local_basis(v: RatVector, loc: LocalSystem) -> RatVector:
    """Coordinates of v over the fundamental weights of the local system."""
    rows = [
        [w[d] for w in loc.fundamental_weights] for d in range(len(v))
    ]
    sol = solve_exact(rows, list(v))
    if sol is None:
        raise ValueError("vector lies outside the span of the local weights")
    return sol


def base_change_coefficients(sys: AffineRootSystem) -> tuple[Fraction, ...]:
    """The ratios k_i |a_i|^2 / (k_0 |a_0|^2) for i = 1..rank."""
    a0 = sys.simple_roots[0].gradient
    denom = sys.labels[0] * vdot(a0, a0)
    out = []
    for i in range(1, sys.rank + 1):
        g = sys.simple_roots[i].gradient
        out.append(sys.labels[i] * vdot(g, g) / denom)
    return tuple(out)


def change_basis(sys: AffineRootSystem, e: int) -> list[list[Fraction]]:
    """Matrix of the vertex-0 weights over the vertex-e weights.

    Row f-1 holds the coordinates of the vertex-0 weight omega_f over the
    weight basis at vertex e (columns ordered by original index, skipping e).
    Entries are computed by direct exact re-expansion, not by formula.
    """
    if not 1 <= e <= sys.rank:
        raise IndexError(f"vertex index {e} out of range")
    loc0 = local_system(sys, 0)
    loce = local_system(sys, e)
    return [list(express_in_local_basis(loc0.weight(f), loce)) for f in range(1, sys.rank + 1)]


# ---------------------------------------------------------------------------
# finite type recognition (used for report labels and tests)


def finite_type_label(gradients: tuple[RatVector, ...]) -> str:
    """Classify a set of simple roots of a finite system, e.g. 'A2xB3'.

    Rank-2 systems with a double bond are reported as B2.
    """
    n = len(gradients)
    norms = [vdot(g, g) for g in gradients]
    bonds = {}
    adj = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            d = vdot(gradients[i], gradients[j])
            if d != 0:
                mult = int(4 * d * d / (norms[i] * norms[j]))
                bonds[(i, j)] = mult
                adj[i].append(j)
                adj[j].append(i)
    seen = [False] * n
    labels = []
    for start in range(n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        queue = [start]
        while queue:
            cur = queue.pop()
            for nxt in adj[cur]:
                if not seen[nxt]:
                    seen[nxt] = True
                    comp.append(nxt)
                    queue.append(nxt)
        labels.append(_component_label(comp, adj, bonds, norms))
    labels.sort()
    return "x".join(labels) if labels else "0"


def _component_label(comp, adj, bonds, norms) -> str:
    k = len(comp)
    mults = [bonds[tuple(sorted((i, j)))] for i in comp for j in adj[i] if j > i and j in comp]
    if any(m == 3 for m in mults):
        return "G2"
    if any(m == 2 for m in mults):
        if k == 2:
            return "B2"
        degrees = {i: sum(1 for j in adj[i] if j in comp) for i in comp}
        double = [p for p, m in bonds.items() if m == 2 and p[0] in comp]
        (i, j) = double[0]
        if degrees[i] == 2 and degrees[j] == 2:
            return "F4"
        shorts = sum(1 for i in comp if norms[i] == min(norms[c] for c in comp))
        return f"B{k}" if shorts == 1 else f"C{k}"
    branch = [i for i in comp if sum(1 for j in adj[i] if j in comp) >= 3]
    if not branch:
        return f"A{k}"
    arms = sorted(_arm_lengths(branch[0], comp, adj))
    if arms[:2] == [1, 1]:
        return f"D{k}"
    return {(1, 2, 2): "E6", (1, 2, 3): "E7", (1, 2, 4): "E8"}[tuple(arms)]


def _arm_lengths(center, comp, adj):
    lengths = []
    for start in adj[center]:
        if start not in comp:
            continue
        length = 1
        prev, cur = center, start
        while True:
            nxt = [j for j in adj[cur] if j != prev and j in comp]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        lengths.append(length)
    return lengths
