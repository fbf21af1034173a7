import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from steenrodgroup.algebra import (
    AlgebraError,
    EnumerationError,
    adjoin_epsilon,
    component_dimension,
    component_monomials,
    enumerate_component,
    eps_part,
    eps_reduce,
    frobenius,
    mk_algebra,
    times_eps,
)
from steenrodgroup.sampling import random_homogeneous


def A22():
    # F_2[z1, z2] / (z1^4, z2^2), degrees 1 and 3
    return mk_algebra(2, [("z1", 1, 4), ("z2", 3, 2)])


def A3():
    return adjoin_epsilon(
        mk_algebra(3, [("t0", 1, 2), ("t1", 5, 2), ("x1", 4, 9)])
    )


def random_homog(seed, pres, d):
    return random_homogeneous(random.Random(seed), pres, d)


# -- presentation validation ---------------------------------------------------


def test_non_prime_rejected():
    with pytest.raises(AlgebraError):
        mk_algebra(4, [("a", 1, 2)])


def test_duplicate_names_rejected():
    with pytest.raises(AlgebraError):
        mk_algebra(2, [("a", 1, 2), ("a", 3, 2)])


def test_odd_generator_cap_normalized():
    a = mk_algebra(3, [("t0", 1, 5)])
    assert a.generators[0].cap == 2
    assert a.gen("t0", 2).is_zero()


def test_adjoin_epsilon_p2_is_identity():
    a = mk_algebra(2, [("z1", 1, 2)])
    assert adjoin_epsilon(a) == a


def test_adjoin_epsilon_twice_fails():
    a = mk_algebra(3, [("x1", 4, 3)])
    with pytest.raises(AlgebraError):
        adjoin_epsilon(adjoin_epsilon(a))


# -- multiplication ------------------------------------------------------------


def test_eps_squares_to_zero():
    a = A3()
    eps = a.gen("eps")
    assert (eps * eps).is_zero()


def test_odd_generator_squares_to_zero():
    a = A3()
    t0 = a.gen("t0")
    assert (t0 * t0).is_zero()


def test_even_odd_commute_without_sign():
    a = A3()
    assert a.gen("t0") * a.gen("x1") == a.gen("x1") * a.gen("t0")


def test_odd_odd_anticommute():
    a = A3()
    t0, t1 = a.gen("t0"), a.gen("t1")
    assert t0 * t1 == -(t1 * t0)
    assert not (t0 * t1).is_zero()


def test_unit_law():
    a = A22()
    x = a.gen("z1") + a.gen("z2")
    assert a.one() * x == x


@given(st.integers(0, 10**6), st.data())
def test_koszul_commutativity(seed, data):
    a = A3()
    d1 = data.draw(st.integers(0, 8))
    d2 = data.draw(st.integers(0, 8))
    x = random_homog(seed, a, d1)
    y = random_homog(seed + 1, a, d2)
    sign = -1 if (d1 % 2 == 1 and d2 % 2 == 1) else 1
    assert x * y == (y * x).scale(sign)


@given(st.integers(0, 10**6))
def test_associativity_and_distributivity(seed):
    a = A3()
    r = random.Random(seed)
    x = random_homogeneous(r, a, r.randint(0, 8))
    y = random_homogeneous(r, a, r.randint(0, 8))
    z = random_homogeneous(r, a, r.randint(0, 8))
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


# -- frobenius -----------------------------------------------------------------


def test_frobenius_kills_eps_tail():
    a = A3()
    x = a.one() + a.gen("t0") * a.gen("eps")
    assert frobenius(x, 1) == a.one()


def test_frobenius_zero_power_is_identity():
    a = A22()
    x = a.gen("z1") + a.gen("z2")
    assert frobenius(x, 0) == x


def test_frobenius_is_additive_p2():
    a = A22()
    assert frobenius(a.gen("z1") + a.gen("z2"), 1) == a.gen("z1", 2)  # z2^2 = 0


@given(st.integers(0, 10**6))
def test_frobenius_ring_homomorphism(seed):
    a = A3()
    r = random.Random(seed)
    x = random_homogeneous(r, a, r.randint(0, 6))
    y = random_homogeneous(r, a, r.randint(0, 6))
    assert frobenius(x * y, 1) == frobenius(x, 1) * frobenius(y, 1)
    assert frobenius(x + y, 1) == frobenius(x, 1) + frobenius(y, 1)


# -- eps split -----------------------------------------------------------------


@given(st.integers(0, 10**6))
def test_eps_split_reassembles(seed):
    a = A3()
    r = random.Random(seed)
    x = random_homogeneous(r, a, r.randint(0, 6))
    assert eps_reduce(x) + times_eps(eps_part(x)) == x


@given(st.integers(0, 10**6))
def test_eps_reduce_is_ring_hom(seed):
    a = A3()
    r = random.Random(seed)
    x = random_homogeneous(r, a, r.randint(0, 6))
    y = random_homogeneous(r, a, r.randint(0, 6))
    assert eps_reduce(x * y) == eps_reduce(x) * eps_reduce(y)


# -- component enumeration -----------------------------------------------------


def test_component_degree_1():
    assert len(enumerate_component(A22(), 1)) == 2  # {0, z1}


def test_component_degree_3():
    a = A22()
    got = enumerate_component(a, 3)
    assert len(got) == 4  # span{z1^3, z2}


def test_empty_component_is_zero_only():
    a = mk_algebra(2, [("z2", 3, 2)])
    assert enumerate_component(a, 2) == [a.zero()]


def test_component_cardinality_is_p_pow_dim():
    a = A3()
    for d in range(0, 7):
        assert len(enumerate_component(a, d)) == 3 ** component_dimension(a, d)


def test_negative_degree_monomials_found():
    a = A3()
    # degree -1 component is spanned by eps
    assert component_monomials(a, -1) == [(0, 0, 0, 1)]


def test_capless_degree_zero_is_rejected():
    a = mk_algebra(2, [("u", 0, None)])
    with pytest.raises(EnumerationError):
        component_monomials(a, 0)


def test_mixed_sign_capless_is_rejected():
    a = mk_algebra(2, [("u", 1, None), ("v", -1, None)])
    with pytest.raises(EnumerationError):
        component_monomials(a, 0)
