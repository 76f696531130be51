"""Exact integer and rational linear algebra kernel.

Everything in this module is exact: matrices hold arbitrary-precision
integers, vectors hold fractions in lowest terms, and all decisions
(lattice membership, basis extension, feasibility of strict inequality
systems) are computed without floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import gcd
from typing import Iterable, Sequence

RatVector = tuple[Fraction, ...]


class BoxTooSmallError(ValueError):
    """The search box cannot certify a complete Hilbert basis."""


# ---------------------------------------------------------------------------
# rational vectors


def ratvec(values: Iterable) -> RatVector:
    return tuple(Fraction(v) for v in values)


def vdot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def vadd(x: RatVector, y: RatVector) -> RatVector:
    return tuple(a + b for a, b in zip(x, y))


def vsub(x: RatVector, y: RatVector) -> RatVector:
    return tuple(a - b for a, b in zip(x, y))


def vscale(c, x: Sequence[Fraction]) -> RatVector:
    c = Fraction(c)
    return tuple(c * a for a in x)


def is_zero_vector(x: Sequence) -> bool:
    return all(a == 0 for a in x)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s, next_s = 1, 0
    t, next_t = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        s, next_s = next_s, s - q * next_s
        t, next_t = next_t, t - q * next_t
        g, next_g = next_g, g - q * next_g
    if g < 0:
        g, s, t = -g, -s, -t
    return g, s, t


# ---------------------------------------------------------------------------
# integer matrices


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, entries stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if rows:
            cols = len(rows[0])
        elif cols is None:
            cols = 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        flat = tuple(int(x) for r in rows for x in r)
        return cls(len(rows), cols, flat)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(key)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows(
            [[self[i, j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            out.append(
                [sum(ri[k] * other[k, j] for k in range(self.cols)) for j in range(other.cols)]
            )
        return IntMatrix.from_rows(out, cols=other.cols)

    def det(self) -> int:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return _det_bareiss(self.to_rows())


def _det_bareiss(a: list[list[int]]) -> int:
    # Fraction-free elimination; all divisions below are exact.
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# normal forms


def hermite_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns (h, u) with u unimodular and u @ m = h.  The form is echelon
    with positive pivots; entries above each pivot are reduced into
    [0, pivot).  Zero rows sink to the bottom.
    """
    nr, nc = m.rows, m.cols
    work = m.to_rows()
    trans = IntMatrix.identity(nr).to_rows()
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if work[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            work[r], work[piv] = work[piv], work[r]
            trans[r], trans[piv] = trans[piv], trans[r]
        for i in range(r + 1, nr):
            if work[i][c] == 0:
                continue
            a, b = work[r][c], work[i][c]
            g, s, t = xgcd(a, b)
            p, q = a // g, b // g
            # [[s, t], [-q, p]] is unimodular: s*p + t*q = 1.
            work[r], work[i] = (
                [s * x + t * y for x, y in zip(work[r], work[i])],
                [-q * x + p * y for x, y in zip(work[r], work[i])],
            )
            trans[r], trans[i] = (
                [s * x + t * y for x, y in zip(trans[r], trans[i])],
                [-q * x + p * y for x, y in zip(trans[r], trans[i])],
            )
        if work[r][c] < 0:
            work[r] = [-x for x in work[r]]
            trans[r] = [-x for x in trans[r]]
        for i in range(r):
            q = work[i][c] // work[r][c]
            if q:
                work[i] = [x - q * y for x, y in zip(work[i], work[r])]
                trans[i] = [x - q * y for x, y in zip(trans[i], trans[r])]
        r += 1
        if r == nr:
            break
    return IntMatrix.from_rows(work, cols=nc), IntMatrix.from_rows(trans, cols=nr)


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (d, u, v) with u @ m @ v = d diagonal and d[i] | d[i+1].

    u and v are unimodular; diagonal entries are nonnegative.
    """
    nr, nc = m.rows, m.cols
    a = m.to_rows()
    u = IntMatrix.identity(nr).to_rows()
    v = IntMatrix.identity(nc).to_rows()

    def row_op(i, j, s, t, p, q):
        a[i], a[j] = (
            [s * x + t * y for x, y in zip(a[i], a[j])],
            [-q * x + p * y for x, y in zip(a[i], a[j])],
        )
        u[i], u[j] = (
            [s * x + t * y for x, y in zip(u[i], u[j])],
            [-q * x + p * y for x, y in zip(u[i], u[j])],
        )

    def col_op(i, j, s, t, p, q):
        for row in (a, v):
            for rr in row:
                rr[i], rr[j] = s * rr[i] + t * rr[j], -q * rr[i] + p * rr[j]

    k = min(nr, nc)
    for t0 in range(k):
        # pull a nonzero pivot into position (t0, t0)
        pivot = next(
            (
                (i, j)
                for i in range(t0, nr)
                for j in range(t0, nc)
                if a[i][j] != 0
            ),
            None,
        )
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t0:
            a[t0], a[pi] = a[pi], a[t0]
            u[t0], u[pi] = u[pi], u[t0]
        if pj != t0:
            for row in (a, v):
                for rr in row:
                    rr[t0], rr[pj] = rr[pj], rr[t0]
        while True:
            # Exact-division entries are cleared by plain subtraction so the
            # pivot row/column stays put; the gcd transform is reserved for
            # the non-dividing case, where it strictly shrinks the pivot.
            for i in range(t0 + 1, nr):
                b = a[i][t0]
                if not b:
                    continue
                piv = a[t0][t0]
                if b % piv == 0:
                    q = b // piv
                    a[i] = [x - q * y for x, y in zip(a[i], a[t0])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[t0])]
                else:
                    g, s, t = xgcd(piv, b)
                    row_op(t0, i, s, t, piv // g, b // g)
            for j in range(t0 + 1, nc):
                b = a[t0][j]
                if not b:
                    continue
                piv = a[t0][t0]
                if b % piv == 0:
                    q = b // piv
                    for row in (a, v):
                        for rr in row:
                            rr[j] -= q * rr[t0]
                else:
                    g, s, t = xgcd(piv, b)
                    col_op(t0, j, s, t, piv // g, b // g)
            if all(a[i][t0] == 0 for i in range(t0 + 1, nr)) and all(
                a[t0][j] == 0 for j in range(t0 + 1, nc)
            ):
                break
        if a[t0][t0] < 0:
            a[t0] = [-x for x in a[t0]]
            u[t0] = [-x for x in u[t0]]
    # enforce the divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(k - 1):
            di, dj = a[i][i], a[i + 1][i + 1]
            if di and dj % di != 0:
                # fold d[i+1] into column i, then re-clear the 2x2 block;
                # after the gcd row step the off-diagonal entry is a multiple
                # of the new pivot, so one column subtraction finishes it
                for row in (a, v):
                    for rr in row:
                        rr[i] += rr[i + 1]
                g, s, t = xgcd(a[i][i], a[i + 1][i])
                row_op(i, i + 1, s, t, a[i][i] // g, a[i + 1][i] // g)
                q = a[i][i + 1] // a[i][i]
                for row in (a, v):
                    for rr in row:
                        rr[i + 1] -= q * rr[i]
                if a[i][i] < 0:
                    a[i] = [-x for x in a[i]]
                    u[i] = [-x for x in u[i]]
                if a[i + 1][i + 1] < 0:
                    a[i + 1] = [-x for x in a[i + 1]]
                    u[i + 1] = [-x for x in u[i + 1]]
                changed = True
    return (
        IntMatrix.from_rows(a, cols=nc),
        IntMatrix.from_rows(u, cols=nr),
        IntMatrix.from_rows(v, cols=nc),
    )


def invariant_factors(m: IntMatrix) -> tuple[int, ...]:
    """Nonzero diagonal of the Smith normal form, in divisibility order."""
    d, _, _ = smith_normal_form(m)
    out = [d[i, i] for i in range(min(m.rows, m.cols)) if d[i, i] != 0]
    return tuple(out)


# ---------------------------------------------------------------------------
# lattices of integer row vectors


def lattice_basis(generators: IntMatrix) -> IntMatrix:
    """A basis (independent rows, same integer row span) for the input rows."""
    h, _ = hermite_normal_form(generators)
    rows = [r for r in h.to_rows() if any(r)]
    return IntMatrix.from_rows(rows, cols=generators.cols)


def lattice_member(basis: IntMatrix, v: Sequence[int]) -> bool:
    """Is v an integer combination of the basis rows?"""
    if len(v) != basis.cols:
        raise ValueError("dimension mismatch")
    h, _ = hermite_normal_form(basis)
    x = [int(c) for c in v]
    for i in range(h.rows):
        row = h.row(i)
        pc = next((j for j, val in enumerate(row) if val != 0), None)
        if pc is None:
            continue
        q, rem = divmod(x[pc], row[pc])
        if rem:
            return False
        if q:
            x = [a - q * b for a, b in zip(x, row)]
    return all(a == 0 for a in x)


def lattice_contains(a_basis: IntMatrix, b_basis: IntMatrix) -> bool:
    """Does the row lattice of a_basis contain every row of b_basis?"""
    if a_basis.cols != b_basis.cols:
        raise ValueError("dimension mismatch")
    h, _ = hermite_normal_form(a_basis)
    return all(lattice_member(h, b_basis.row(i)) for i in range(b_basis.rows))


def minors_gcd(m: IntMatrix, size: int) -> int:
    """gcd of the absolute values of all size x size minors (0 if all vanish)."""
    if size < 0 or size > min(m.rows, m.cols):
        raise ValueError(f"minor size {size} out of range for {m.rows}x{m.cols}")
    if size == 0:
        return 1
    rows = m.to_rows()
    g = 0
    for ri in combinations(range(m.rows), size):
        sub = [rows[i] for i in ri]
        for ci in combinations(range(m.cols), size):
            d = _det_bareiss([[row[j] for j in ci] for row in sub])
            g = gcd(g, abs(d))
            if g == 1:
                return 1
    return g


def subset_of_basis(m: IntMatrix) -> bool:
    """Do the columns of m extend to a basis of Z^rows?

    Orientation is fixed: candidate vectors are the columns, so m must have
    at least as many rows (ambient rank) as columns.  By the elementary
    divisors theorem this holds iff the gcd of the maximal minors is 1.
    """
    if m.cols < 1:
        raise ValueError("need at least one candidate column")
    if m.rows < m.cols:
        raise ValueError("more candidate vectors than ambient rank")
    return minors_gcd(m, m.cols) == 1


# ---------------------------------------------------------------------------
# exact rational linear algebra


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals; returns (rows, pivot cols)."""
    mat = [[Fraction(x) for x in row] for row in rows]
    nr = len(mat)
    nc = len(mat[0]) if mat else 0
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(nr):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return mat, pivots


def solve_exact(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> RatVector | None:
    """Solve rows . x = rhs exactly; None if inconsistent.

    Requires the solution to be unique (full column rank); raises otherwise.
    """
    nc = len(rows[0]) if rows else 0
    aug = [list(row) + [Fraction(b)] for row, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if nc in pivots:
        return None
    if len(pivots) < nc:
        raise ValueError("underdetermined system")
    sol = [Fraction(0)] * nc
    for i, c in enumerate(pivots):
        sol[c] = red[i][nc]
    return tuple(sol)


def rational_kernel(rows: Sequence[Sequence[Fraction]], dim: int) -> list[RatVector]:
    """Basis of {x in Q^dim : row . x = 0 for every row}."""
    if not rows:
        return [tuple(Fraction(1 if i == j else 0) for j in range(dim)) for i in range(dim)]
    red, pivots = rref([list(r) for r in rows])
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * dim
        vec[f] = Fraction(1)
        for i, c in enumerate(pivots):
            vec[c] = -red[i][f]
        basis.append(tuple(vec))
    return basis


def rational_inverse(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    n = len(rows)
    aug = [list(r) + [Fraction(1 if i == j else 0) for j in range(n)] for i, r in enumerate(rows)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


# ---------------------------------------------------------------------------
# exact feasibility of homogeneous strict/nonstrict systems


@dataclass(frozen=True)
class LinearConstraintSystem:
    """Homogeneous system: <p, x> > 0 for strict rows, <q, x> <= 0 otherwise."""

    strict_positive: tuple[RatVector, ...]
    nonstrict: tuple[RatVector, ...]
    dim: int

    def __post_init__(self):
        for row in self.strict_positive + self.nonstrict:
            if len(row) != self.dim:
                raise ValueError("constraint row of wrong dimension")


def _normalize_row(coeffs: list[Fraction], rhs: Fraction) -> tuple[tuple[int, ...], int]:
    # Scale by a positive rational so all entries are coprime integers.
    denoms = [c.denominator for c in coeffs] + [rhs.denominator]
    lcm = 1
    for d in denoms:
        lcm = lcm * d // gcd(lcm, d)
    ints = [int(c * lcm) for c in coeffs]
    r = int(rhs * lcm)
    g = 0
    for x in ints + [r]:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
        r //= g
    return tuple(ints), r


def strict_feasible(sys: LinearConstraintSystem) -> bool:
    """Decide by Fourier-Motzkin elimination whether the system has a solution.

    Homogeneity converts the open conditions to closed ones: <p, x> > 0 is
    solvable together with the nonstrict rows iff <p, x> >= 1 is.
    """
    # rows are (coeffs, rhs) meaning  coeffs . x <= rhs
    rows: set[tuple[tuple[int, ...], int]] = set()
    for p in sys.strict_positive:
        rows.add(_normalize_row([-c for c in map(Fraction, p)], Fraction(-1)))
    for q in sys.nonstrict:
        rows.add(_normalize_row([Fraction(c) for c in q], Fraction(0)))

    for var in range(sys.dim):
        pos, neg, rest = [], [], set()
        for coeffs, rhs in rows:
            c = coeffs[var]
            if c > 0:
                pos.append((coeffs, rhs))
            elif c < 0:
                neg.append((coeffs, rhs))
            else:
                rest.add((coeffs, rhs))
        for (cp, bp) in pos:
            for (cn, bn) in neg:
                # positive combination eliminating x_var
                a, b = -cn[var], cp[var]
                merged = [Fraction(a * x + b * y) for x, y in zip(cp, cn)]
                rhs = Fraction(a * bp + b * bn)
                row = _normalize_row(merged, rhs)
                if not any(row[0]):
                    if row[1] < 0:
                        return False
                    continue
                rest.add(row)
        rows = rest
    return all(rhs >= 0 for coeffs, rhs in rows)


# ---------------------------------------------------------------------------
# Hilbert bases by bounded enumeration


def hilbert_basis(
    lattice: IntMatrix,
    cone_normals: Sequence[Sequence[int]],
    bound: int,
) -> list[tuple[int, ...]]:
    """Minimal generating set of (row lattice of `lattice`) meet the cone.

    The cone is the intersection of half-spaces <normal, x> >= 0.  Points
    are enumerated in the coordinate box [-bound, bound]^dim and filtered
    down to the irreducible elements.  If an irreducible element touches
    the box boundary the box cannot certify completeness and a
    BoxTooSmallError is raised instead of returning a possibly wrong set.
    """
    dim = lattice.cols
    h, _ = hermite_normal_form(lattice)

    def in_monoid(pt: tuple[int, ...]) -> bool:
        return all(
            sum(n[i] * pt[i] for i in range(dim)) >= 0 for n in cone_normals
        ) and lattice_member(h, pt)

    elements = [
        pt
        for pt in product(range(-bound, bound + 1), repeat=dim)
        if any(pt) and in_monoid(pt)
    ]
    irreducible = []
    for x in elements:
        reducible = False
        for y in elements:
            if y == x:
                continue
            z = tuple(a - b for a, b in zip(x, y))
            if any(z) and in_monoid(z):
                reducible = True
                break
        if not reducible:
            irreducible.append(x)
    for x in irreducible:
        if any(abs(c) == bound for c in x):
            raise BoxTooSmallError(
                f"irreducible element {x} lies on the search box boundary"
            )
    return sorted(irreducible)
