import itertools
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from ringline.ring import (AxiomViolation, CeilingExceeded, HomError, Ideal, RingError, check_ideal,
                           has_stable_rank_2, ideal_closure, is_dedekind_finite, jacobson_radical,
                           left_radical_characterization, materialize, non_units_form_ideal,
                           quotient_ring, reduction_hom, units_and_inverses, validate_hom)
from ringline.spec import Table

BATTERY = ["Z/1", "Z/2", "Z/4", "Z/6", "Z/8", "Z/9", "GF(4)", "GF(8)", "Dual(GF(2))", "Dual(GF(3))",
           "UT2(GF(2))", "EpsDelta(GF(2))", "Z/2 x Z/3", "M2(GF(2))", "Dual(GF(4),frob^1)"]


def brute_units(R):
    return {a for a in range(R.size) for b in range(R.size)
            if R.mul(a, b) == R.one and R.mul(b, a) == R.one}


def brute_radical(R):
    units = brute_units(R)
    return {a for a in range(R.size)
            if all(R.sub(R.one, R.mul(r, a)) in units for r in range(R.size))}


@pytest.mark.parametrize("text", BATTERY)
def test_units_and_radical_match_brute_force(ring, text):
    R = ring(text)
    assert set(R.units) == brute_units(R)
    inv = units_and_inverses(R)
    assert all(R.mul(u, v) == R.one == R.mul(v, u) for u, v in inv.items())
    rad = jacobson_radical(R).members
    assert set(rad) == brute_radical(R)
    assert left_radical_characterization(R) == rad
    check_ideal(jacobson_radical(R))


@pytest.mark.parametrize("n", range(1, 13))
def test_modint_against_integer_arithmetic(ring, n):
    R = ring(f"Z/{n}")
    assert R.size == n and R.characteristic == n
    val = {a: int(R.label(a)) for a in range(n)}
    for a, b in itertools.product(range(n), repeat=2):
        assert val[R.add(a, b)] == (val[a] + val[b]) % n
        assert val[R.mul(a, b)] == (val[a] * val[b]) % n
    assert {val[u] for u in R.units} == {x for x in range(n) if gcd(x, n) == 1} or n == 1


@pytest.mark.parametrize("text,size,units,radical", [
    # frozen from the brute-force oracles above
    ("Z/4", 4, 2, 2), ("Z/6", 6, 2, 1), ("GF(4)", 4, 3, 1), ("Dual(GF(3))", 9, 6, 3),
    ("UT2(GF(2))", 8, 2, 2), ("EpsDelta(GF(2))", 8, 4, 4), ("M2(GF(2))", 16, 6, 1),
    ("Z/2 x Z/3", 6, 2, 1),
])
def test_frozen_counts(ring, text, size, units, radical):
    R = ring(text)
    assert (R.size, len(R.units), len(jacobson_radical(R))) == (size, units, radical)


def test_named_values(ring):
    Z6 = ring("Z/6")
    assert {Z6.label(u): Z6.label(v) for u, v in units_and_inverses(Z6).items()} == {"1": "1", "5": "5"}
    Z1 = ring("Z/1")
    assert units_and_inverses(Z1) == {0: 0}
    assert [ring("Z/4").label(x) for x in sorted(jacobson_radical(ring("Z/4")).members)] == ["0", "2"]
    D3 = ring("Dual(GF(3))")
    assert sorted(D3.label(x) for x in jacobson_radical(D3).members) == ["0", "2e", "e"]


def test_twisted_dual_relation(ring):
    R = ring("Dual(GF(4),frob^1)")
    e = R.element("e")
    F = R.kstruct.field
    for k in range(F.q):
        kk = R.kstruct.embed[k]
        assert R.mul(e, kk) == R.mul(R.kstruct.embed[F.frob[k]], e)
    assert R.mul(e, e) == 0


def test_eps_delta_relations(ring):
    R = ring("EpsDelta(GF(3))")
    e, d = R.element("e"), R.element("d")
    assert R.mul(e, e) == R.mul(d, d) == R.mul(e, d) == R.mul(d, e) == 0
    for x in range(R.size):
        assert R.mul(e, x) == R.mul(x, e) and R.mul(d, x) == R.mul(x, d)


@pytest.mark.parametrize("text", BATTERY)
def test_finite_rings_dedekind_finite_and_sr2(ring, text):
    R = ring(text)
    assert is_dedekind_finite(R) == (True, None)
    assert has_stable_rank_2(R) == (True, None)


def test_local_rings(ring):
    assert non_units_form_ideal(ring("Dual(GF(2))"))
    assert non_units_form_ideal(ring("EpsDelta(GF(2))"))
    assert not non_units_form_ideal(ring("Z/6"))
    assert not non_units_form_ideal(ring("UT2(GF(2))"))


def test_ideal_closure(ring):
    Z6 = ring("Z/6")
    assert {Z6.label(x) for x in ideal_closure(Z6, [Z6.element("2")]).members} == {"0", "2", "4"}
    D = ring("Dual(GF(2))")
    assert {D.label(x) for x in ideal_closure(D, [D.element("e")]).members} == {"0", "e"}
    U = ring("UT2(GF(2))")
    e12 = U.element("[0,1;0,0]")
    assert {U.label(x) for x in ideal_closure(U, [e12]).members} == {"[0,0;0,0]", "[0,1;0,0]"}


def test_quotients(ring):
    Z4 = ring("Z/4")
    Q, pi = quotient_ring(Z4, Ideal(Z4, frozenset({0, Z4.element("2")})))
    assert Q.size == 2 and len(Q.units) == 1
    D3 = ring("Dual(GF(3))")
    Q, pi = quotient_ring(D3, jacobson_radical(D3))
    assert Q.size == 3 and len(Q.units) == 2 and pi.is_surjective()
    Q, pi = quotient_ring(D3, Ideal(D3, frozenset({0})))
    assert Q.size == D3.size and pi.is_injective()
    assert materialize("Quot(Z/6;2)").size == 2


def test_homs(ring):
    Z4, Z2, Z6 = ring("Z/4"), ring("Z/2"), ring("Z/6")
    phi = reduction_hom(Z4, Z2)
    assert phi.kernel() == frozenset({0, Z4.element("2")})
    reduction_hom(Z6, Z2)
    with pytest.raises(HomError):
        validate_hom(Z6, Z6, [Z6.element(str(3 * int(Z6.label(a)) % 6)) for a in range(6)])


def test_ceiling():
    with pytest.raises(CeilingExceeded):
        materialize("M2(GF(3))", ceiling=16)


def test_structured_evaluator_above_threshold():
    R = materialize("GF(3) x M2(GF(2)) x Z/2")  # 96 elements, tables; and a larger one below
    assert R.size == 96
    big = materialize("M2(GF(3)) x GF(4)")
    assert big.size == 324 and not big.has_tables
    assert len(big.units) == 48 * 3


def test_table_ring_axioms_rejected():
    # a "ring" whose multiplication is not associative
    add = [[(a + b) % 3 for b in range(3)] for a in range(3)]
    mul = [[0, 0, 0], [0, 1, 2], [0, 2, 2]]
    with pytest.raises((AxiomViolation, RingError)):
        materialize(Table(tuple(map(tuple, add)), tuple(map(tuple, mul)), 0, 1, None))


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(["UT2(GF(2))", "M2(GF(2))", "Dual(GF(4),frob^1)", "EpsDelta(GF(3))"]), st.data())
def test_ring_axioms_property(text, data):
    R = materialize(text)
    a, b, c = (data.draw(st.integers(0, R.size - 1)) for _ in range(3))
    assert R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c))
    assert R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c))
    assert R.mul(R.add(a, b), c) == R.add(R.mul(a, c), R.mul(b, c))
    assert R.add(a, R.neg(a)) == 0
