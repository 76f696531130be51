"""Acceptance suite: one test per release criterion.

Each test prints a single PASS line on success; every expected value is
either structural (exact integer identities) or frozen from an
independent derivation in the sibling test modules.
"""

import json
import time
from fractions import Fraction

from alcove.classify import (
    Bounds,
    adapted_quotient,
    candidate_table,
    instantiate,
    intermediate_sweep,
    param_assignments,
    _reference_lattices,
)
from alcove.cli import main, parse_lattice
from alcove.intlin import (
    IntMatrix,
    hilbert_basis,
    invariant_factors,
    lattice_basis,
    lattice_member,
    subset_of_basis,
    vdot,
)
from alcove.rootsys import (
    AffineType,
    base_change_coefficients,
    build,
    local_system,
)
from alcove.spherical import (
    Term,
    check_spherical_pair,
    coroot_pairing_matrix,
    lattice_contains_rat,
    lattice_equal_rat,
    lattice_from_coords,
    resolve_generators,
    smoothness,
)

LEVEL_TWO_ROWS = "the twisted even-A rows carry label 2 at node 0, so their label relation sums to 2"


def desk_types(max_rank=8):
    out = [AffineType("A", n, 1) for n in range(1, max_rank + 1)]
    out += [AffineType("B", n, 1) for n in range(3, max_rank + 1)]
    out += [AffineType("C", n, 1) for n in range(2, max_rank + 1)]
    out += [AffineType("D", n, 1) for n in range(4, max_rank + 1)]
    out += [AffineType("E", n, 1) for n in (6, 7, 8)]
    out += [AffineType("F", 4, 1), AffineType("G", 2, 1)]
    out += [AffineType("A", 2, 2)]
    out += [AffineType("A", 2 * n, 2) for n in range(2, max_rank + 1)]
    out += [AffineType("A", 2 * n - 1, 2) for n in range(3, max_rank + 1)]
    out += [AffineType("D", n + 1, 2) for n in range(2, max_rank + 1)]
    out += [AffineType("E", 6, 2), AffineType("D", 4, 3)]
    return out


def full_weight_lattice(sys):
    return resolve_generators(
        sys, 0, tuple((Term(1, "w", i),) for i in range(1, sys.rank + 1))
    )


def chain_sum_lattice(sys, extra):
    n = sys.rank
    gens = [(Term(1, "a", i), Term(1, "a", i + 1)) for i in range(1, n)]
    gens.extend(extra)
    return resolve_generators(sys, 0, tuple(gens))


def test_criterion_1_construction_invariants():
    start = time.perf_counter()
    count = 0
    for atype in desk_types():
        sys = build(atype)
        total = [Fraction(0)] * sys.ambient_dim
        const = Fraction(0)
        for k, a in zip(sys.labels, sys.simple_roots):
            const += k * a.constant
            for d, c in enumerate(a.gradient):
                total[d] += k * c
        assert all(c == 0 for c in total), atype
        # the label relation sums to 1 except where the node-0 label is 2,
        # which forces the exact value 2 with these root coordinates
        if atype.family == "A" and atype.twist == 2 and atype.n % 2 == 0:
            assert sys.labels[0] == 2 and const == 2, atype
        else:
            assert const == 1, atype
        for i in range(sys.rank + 1):
            loc = local_system(sys, i)
            for a_idx in loc.indices:
                for b_idx in loc.indices:
                    want = 1 if a_idx == b_idx else 0
                    assert vdot(loc.weight(a_idx), loc.coroot_of(b_idx)) == want
        count += 1
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0, f"{elapsed:.2f}s"
    print(
        f"\n[criterion 1] PASS - label relation and weight pairings exact on "
        f"{count} systems in {elapsed:.2f}s (note: {LEVEL_TWO_ROWS})"
    )


def test_criterion_2_base_change_integrality():
    for atype in desk_types():
        sys = build(atype)
        ratios = base_change_coefficients(sys)
        assert all(c.denominator == 1 for c in ratios), atype
        if atype.twist == 1 and atype.family in ("A", "C"):
            assert all(c == 1 for c in ratios), atype
        rows0 = local_system(sys, 0).fundamental_weights
        for k in range(1, sys.rank + 1):
            rowsk = local_system(sys, k).fundamental_weights
            assert lattice_contains_rat(rowsk, rows0), (atype, k)
    print("\n[criterion 2] PASS - base change integral, vertex-0 weights "
          "contained in every other vertex lattice")


def test_criterion_3_even_chain_worked_example():
    for n in (4, 6):
        sys = build(AffineType("C", n, 1))
        loc0 = local_system(sys, 0)
        lam = full_weight_lattice(sys)
        sums = tuple(
            tuple(a + b for a, b in zip(loc0.root(i), loc0.root(i + 1)))
            for i in range(1, n)
        )
        orders, rows = adapted_quotient(sums, lam.coords)
        free = [i for i, o in enumerate(orders) if o == 0]
        assert len(free) == 1 and all(o == 1 for o in orders if o != 0)
        passing = []
        for k in range(1, 7):
            lat_rows = [r for i, r in enumerate(rows) if orders[i] != 0]
            lat_rows.append(tuple(k * c for c in rows[free[0]]))
            lat = lattice_from_coords(sys, 0, lat_rows)
            rep = smoothness(lat, loc0)
            assert rep.sigma.doubled == ()
            assert [(i, j) for i, j, _ in rep.sigma.sums] == [
                (i, i + 1) for i in range(1, n)
            ]
            assert rep.critical_roots == tuple(range(1, n + 1, 2))
            if rep.cond1:
                passing.append(k)
                assert lattice_equal_rat(lat.coords, lam.coords)
        assert passing == [1], n
    print("\n[criterion 3] PASS - odd-index critical roots and uniqueness of "
          "the full weight lattice for the even symplectic chains (n=4, 6)")


def test_criterion_4_divisibility_law():
    start = time.perf_counter()
    for n in (2, 4, 6):
        atype = AffineType("A", n, 1)
        sys = build(atype)
        fam = [f for f in candidate_table(atype) if f.id == "A5"][0]
        for k in range(1, n + 3):
            lat = instantiate(fam, sys, {"k": k})
            verdict = check_spherical_pair(lat, sys).is_spherical_pair
            assert verdict == ((n + 1) % k == 0), (n, k)
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0, f"{elapsed:.2f}s"
    print(f"\n[criterion 4] PASS - pair verdict is exactly k | n+1 for the "
          f"even chain family (n=2,4,6) in {elapsed:.2f}s")


def test_criterion_5_odd_chain_family():
    import pytest

    for n in (3, 5):
        atype = AffineType("A", n, 1)
        sys = build(atype)
        fam = [f for f in candidate_table(atype) if f.id == "A6"][0]
        combos = param_assignments("A6", n, Bounds())
        assert combos, n
        for params in combos:
            lat = instantiate(fam, sys, params)
            assert check_spherical_pair(lat, sys).is_spherical_pair, (n, params)
        with pytest.raises(ValueError):
            instantiate(fam, sys, {"e": 2, "r": 2})
    print("\n[criterion 5] PASS - every valid (e, r) instance passes for "
          "n=3,5; the corrupted instance r=e is rejected at instantiation")


def test_criterion_6_negative_cases():
    # two rank-n sublattices fail at the last vertex of the odd orthogonal rows
    for n in (3, 4):
        sys = build(AffineType("B", n, 1))
        b4 = resolve_generators(
            sys, 0,
            tuple((Term(1, "w", i),) for i in range(1, n)) + ((Term(2, "w", n),),),
        )
        rep = check_spherical_pair(b4, sys)
        assert not rep.per_vertex[n].smooth, n
        b3 = chain_sum_lattice(sys, [(Term(2, "a", n),)])
        rep = check_spherical_pair(b3, sys)
        assert not rep.per_vertex[n].smooth, n

    # both rank-2 untwisted sublattices fail at vertex 1 through the dual basis
    sys = build(AffineType("C", 2, 1))
    for expr in ("2*w1; w2", "2*a1; a1+a2"):
        lat = parse_lattice(expr, sys.atype)
        rep = check_spherical_pair(lat, sys)
        assert not rep.is_spherical_pair
        assert not rep.per_vertex[1].cond1

    # the full weight lattice of the odd twisted-A rows fails at the last vertex
    sys = build(AffineType("A", 5, 2))
    lam = full_weight_lattice(sys)
    rep3 = smoothness(lam, local_system(sys, 3))
    assert not rep3.cond1
    pairing = coroot_pairing_matrix(lam, local_system(sys, 3), rep3.critical_roots)
    minors = sorted(
        abs(pairing.row(i)[0] * pairing.row(j)[1] - pairing.row(i)[1] * pairing.row(j)[0])
        for i in range(pairing.rows)
        for j in range(i + 1, pairing.rows)
    )
    assert minors == [0, 0, 2]
    for n in (4, 5):
        sys = build(AffineType("A", 2 * n - 1, 2))
        rep = smoothness(full_weight_lattice(sys), local_system(sys, n))
        assert not rep.cond2, n  # non-orthogonal critical roots

    # parity of the short-root sum family on the twisted D rows
    for n, expect in [(3, True), (4, False), (5, True)]:
        sys = build(AffineType("D", n + 1, 2))
        lat = chain_sum_lattice(sys, [(Term(2, "a", n),)])
        rep = check_spherical_pair(lat, sys)
        assert rep.is_spherical_pair == expect, n
        if not expect:
            assert not rep.per_vertex[n].cond2

    # rank-2 twisted D row: the full weight lattice fails
    sys = build(AffineType("D", 3, 2))
    rep = check_spherical_pair(full_weight_lattice(sys), sys)
    assert not rep.is_spherical_pair
    assert rep.first_failure().vertex == 1 and not rep.first_failure().cond1
    print("\n[criterion 6] PASS - all negative cases fail at the stated "
          "vertices through the stated conditions")


def test_criterion_7_positive_twisted_cases():
    # twisted even-A rows: only the doubled weight lattice survives among
    # the lattices between the doubled root and doubled weight lattices
    for n in (2, 3):
        atype = AffineType("A", 2 * n, 2)
        refs = _reference_lattices(atype)
        results = intermediate_sweep(atype)
        passing = [lat for lat, rep in results if rep.is_spherical_pair]
        assert len(passing) == 1 and lattice_equal_rat(passing[0].coords, refs["2L"])
        # and the full weight lattice passes as well
        sys = build(atype)
        assert check_spherical_pair(full_weight_lattice(sys), sys).is_spherical_pair

    # rank-2 twisted row: one sublattice passes, its doubled-root twin fails
    atype = AffineType("A", 4, 2)
    sys = build(atype)
    assert check_spherical_pair(parse_lattice("2*w1; w2", atype), sys).is_spherical_pair
    assert not check_spherical_pair(
        parse_lattice("4*w1-2*w2; w2", atype), sys
    ).is_spherical_pair

    # twisted D rows: the doubled-short-weight lattice always passes, the
    # short-root sum family passes at odd rank
    for n in (2, 3, 4, 5):
        sys = build(AffineType("D", n + 1, 2))
        gens = tuple((Term(1, "w", i),) for i in range(1, n)) + ((Term(2, "w", n),),)
        lat = resolve_generators(sys, 0, gens)
        assert check_spherical_pair(lat, sys).is_spherical_pair, n
    for n in (3, 5):
        sys = build(AffineType("D", n + 1, 2))
        lat = chain_sum_lattice(sys, [(Term(2, "a", n),)])
        assert check_spherical_pair(lat, sys).is_spherical_pair, n
    print("\n[criterion 7] PASS - positive twisted cases verified")


def test_criterion_8_headline_sweep(tmp_path):
    target = tmp_path / "classification.json"
    start = time.perf_counter()
    code = main(["classify", "--all", "--max-n", "6", "--format", "json",
                 "--output", str(target)])
    elapsed = time.perf_counter() - start
    assert code == 0
    data = json.loads(target.read_text())
    assert data["disagreement_count"] == 0
    assert data["instance_count"] >= 100
    assert elapsed < 60.0, f"{elapsed:.2f}s"
    print(f"\n[criterion 8] PASS - full sweep reproduces the nine-row table: "
          f"{data['instance_count']} instances, 0 disagreements, {elapsed:.1f}s")


def test_criterion_9_kernel_oracles():
    import random

    rng = random.Random(20260808)
    for _ in range(1000):
        l = rng.randint(1, 5)
        k = rng.randint(l, 5)
        m = IntMatrix.from_rows(
            [[rng.randint(-9, 9) for _ in range(l)] for _ in range(k)]
        )
        factors = invariant_factors(m)
        via_snf = len(factors) == l and all(f == 1 for f in factors)
        assert subset_of_basis(m) == via_snf, m

    from itertools import product as iproduct

    checked = 0
    while checked < 1000:
        d = rng.randint(2, 4)
        k = rng.randint(1, min(3, d))
        rows = [[rng.randint(-5, 5) for _ in range(d)] for _ in range(k)]
        if lattice_basis(IntMatrix.from_rows(rows)).rows != k:
            continue
        if rng.random() < 0.5:
            combo = [rng.randint(-3, 3) for _ in range(k)]
            v = tuple(sum(combo[i] * rows[i][j] for i in range(k)) for j in range(d))
        else:
            v = tuple(rng.randint(-8, 8) for _ in range(d))
        got = lattice_member(IntMatrix.from_rows(rows), v)
        brute = any(
            all(
                sum(c[i] * rows[i][j] for i in range(k)) == v[j]
                for j in range(d)
            )
            for c in iproduct(range(-4, 5), repeat=k)
        )
        if got and not brute:
            continue  # member via coefficients outside the brute-force box
        assert got == brute, (rows, v)
        checked += 1

    lat = IntMatrix.from_rows([[2, 0], [1, 1]])
    assert hilbert_basis(lat, [[1, 0], [0, 1]], 4) == [(0, 2), (1, 1), (2, 0)]
    print("\n[criterion 9] PASS - minor-gcd vs invariant-factor oracle (1000), "
          "membership vs brute force (1000), rank-two Hilbert basis")
