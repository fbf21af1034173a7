import pytest

from steenrodgroup.algebra import eps_part, eps_reduce, mk_algebra
from steenrodgroup.group import compose, is_identity
from steenrodgroup.grouptheory import (
    GroupTheoryError,
    check_filtration_bounds,
    derived_series,
    enumerate_group,
    ev_subgroup,
    ev_subgroup_series,
    lower_central_series,
    size_limit,
    subgroup_closure,
)
from steenrodgroup.hopf import milnor_quotient


def G21():
    return enumerate_group(mk_algebra(2, [("z1", 1, 2)]), 1, 2)


def G22():
    return enumerate_group(milnor_quotient(2, 2).algebra, 2, 2)


def G31():
    return enumerate_group(milnor_quotient(3, 1).algebra, 1, 3)


# -- orders --------------------------------------------------------------------


def test_order_two_group():
    G = G21()
    assert G.order == 2
    assert lower_central_series(G).length == 1  # abelian


def test_order_eight_group():
    G = G22()
    assert G.order == 8
    rep = lower_central_series(G)
    assert rep.length == 1
    assert rep.sizes[0] == 8


def test_order_81_group_class_2():
    G = G31()
    assert G.order == 81
    rep = lower_central_series(G)
    assert rep.length == 2
    assert rep.sizes == [81, 3, 1]
    assert rep.ok is True


def test_trivial_group():
    G = enumerate_group(mk_algebra(2, [("z1", 1, 2)]), 0, 2)
    assert G.order == 1
    assert lower_central_series(G).length == 0


def test_coefficient_constraints_g22():
    # alpha_1 ranges over the degree-1 component {0, z1}, alpha_2 over the
    # degree-3 component span{z1^3, z2}; alpha_i^(2^(n-i+1)) = 0 holds for all
    G = G22()
    alg = G.algebra
    firsts = {g.coeffs[1].key() for g in G.elements}
    seconds = {g.coeffs[2].key() for g in G.elements}
    assert len(firsts) == 2 and len(seconds) == 4
    for g in G.elements:
        assert g.coeffs[0] == alg.one()
        assert (g.coeffs[2] * g.coeffs[2]).is_zero()


# -- table structure -----------------------------------------------------------


def test_latin_square_and_inverses():
    G = G31()
    assert G.verify_latin_square()
    for i in range(G.order):
        assert G.mul(i, G.inv(i)) == G.identity_index
        assert G.mul(G.identity_index, i) == i


def test_table_matches_compose():
    G = G22()
    for i in (0, 3, 5):
        for j in (1, 2, 7):
            k = G.mul(i, j)
            assert compose(G.elements[i], G.elements[j]) == G.elements[k]


def test_subgroup_closure_of_identity():
    G = G22()
    assert subgroup_closure(G, []) == frozenset({G.identity_index})


def test_subgroup_closure_generates_lagrange_divisor():
    G = G31()
    sub = subgroup_closure(G, [1])
    assert G.order % len(sub) == 0
    assert len(sub) > 1


# -- series --------------------------------------------------------------------


def test_derived_series_first_term_matches_gamma_one():
    for G in (G22(), G31()):
        dser = derived_series(G)
        gamma = lower_central_series(G)
        assert dser.chain[1] == gamma.chain[1]


def test_filtration_bounds_hold():
    assert check_filtration_bounds(G22())
    assert check_filtration_bounds(G31())


def test_ev_subgroup_order_and_series():
    G = G31()
    H = ev_subgroup(G)
    assert H.order == 3
    for g in H.elements:
        assert eps_part(g.coeffs[1]).is_zero()
    rep = ev_subgroup_series(milnor_quotient(3, 1).algebra, 1, 3)
    assert rep.sizes == [3, 1]
    assert rep.length == 1
    assert rep.ok is True


def test_ev_subgroup_requires_odd_prime():
    with pytest.raises(GroupTheoryError):
        ev_subgroup(G22())
    with pytest.raises(GroupTheoryError):
        ev_subgroup_series(milnor_quotient(2, 2).algebra, 2, 2)


def test_level_zero_odd_group_is_elementary_abelian():
    # heads 1 + b*eps only: the group is (A_1, +)
    G = enumerate_group(milnor_quotient(3, 1).algebra, 0, 3)
    assert G.order == 3  # heads 1 + b*eps, b in the degree-1 component span{t0}
    assert lower_central_series(G).length <= 1
    for i in range(G.order):
        cube = G.mul(G.mul(i, i), i)
        assert cube == G.identity_index


def test_od_part_has_exponent_p():
    G = G31()
    for g in G.elements:
        if all(eps_reduce(c) == c for c in g.coeffs[1:]) and g.coeffs[0] == G.algebra.one():
            continue
        if g.coeffs[0] != G.algebra.one():
            continue
        if not all(eps_reduce(c).is_zero() for c in g.coeffs[1:]):
            continue
        cube = compose(compose(g, g), g)
        assert is_identity(cube)


# -- limits --------------------------------------------------------------------


def test_size_limit_env(monkeypatch):
    monkeypatch.setenv("STEENROD_LIMIT", "4")
    assert size_limit() == 4
    with pytest.raises(GroupTheoryError):
        enumerate_group(milnor_quotient(3, 1).algebra, 1, 3)
    monkeypatch.setenv("STEENROD_LIMIT", "nope")
    with pytest.raises(GroupTheoryError):
        size_limit()


def test_explicit_limit_overrides():
    with pytest.raises(GroupTheoryError):
        enumerate_group(milnor_quotient(2, 2).algebra, 2, 2, limit=7)


def test_prime_mismatch_rejected():
    with pytest.raises(GroupTheoryError):
        enumerate_group(milnor_quotient(2, 2).algebra, 2, 3)
