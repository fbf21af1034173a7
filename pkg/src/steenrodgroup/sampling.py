"""Seeded random generation of homogeneous elements, group elements, and
generator assignments.

All sampling goes through an explicit random.Random instance so that every
report is reproducible from its seed.  Components are sampled uniformly (one
independent uniform residue per basis monomial) whenever the component is
finite; otherwise a sparse combination with at most three terms is drawn.
"""

from __future__ import annotations

import functools
import random

from .algebra import (
    AlgebraElement,
    AlgebraPresentation,
    EnumerationError,
    component_monomials,
    eps_reduce,
    times_eps,
)
from .group import GroupElement
from .hopf import GeneratorAssignment, HopfPresentation

SPARSE_TERMS = 3


@functools.lru_cache(maxsize=None)
def _monos(pres: AlgebraPresentation, d: int) -> tuple:
    return tuple(component_monomials(pres, d))


def random_homogeneous(
    rng: random.Random,
    pres: AlgebraPresentation,
    d: int,
    eps_free: bool = False,
) -> AlgebraElement:
    """Uniform element of the degree-d component (sparse fallback if infinite)."""
    try:
        monos = _monos(pres, d)
    except EnumerationError:
        return _random_sparse(rng, pres, d, eps_free)
    if eps_free and pres.has_epsilon:
        i = pres.epsilon_index
        monos = tuple(m for m in monos if m[i] == 0)
    terms = {}
    for m in monos:
        c = rng.randrange(pres.p)
        if c:
            terms[m] = c
    return AlgebraElement(pres, terms)


def _random_sparse(rng, pres, d, eps_free):
    """At most SPARSE_TERMS random degree-d monomials with random coefficients."""
    acc = pres.zero()
    for _ in range(50):
        if len(acc.terms) >= SPARSE_TERMS:
            break
        mono = []
        for g in pres.generators:
            hi = (g.cap - 1) if g.cap is not None else 3
            mono.append(rng.randint(0, hi))
        m = tuple(mono)
        if pres.mono_degree(m) != d:
            continue
        if eps_free and pres.has_epsilon and m[pres.epsilon_index] != 0:
            continue
        acc = acc + pres.monomial(m, rng.randrange(1, pres.p))
    return acc


def random_group_element(
    rng: random.Random,
    p: int,
    k: int,
    algebra: AlgebraPresentation,
    level: int = 0,
    zero_prefix: int = 0,
) -> GroupElement:
    """Random element of the order-k truncated group of the given flavor.

    zero_prefix forces alpha_1..alpha_zero_prefix to vanish (for commutator
    case hypotheses).
    """
    one = algebra.one()
    if p == 2 or level >= 2:
        head = one
    else:
        head = one + times_eps(random_homogeneous(rng, algebra, 1, eps_free=True))
    coeffs = [head]
    probe = GroupElement(p, k, level, algebra, tuple([one] + [algebra.zero()] * k))
    for i in range(1, k + 1):
        if i <= zero_prefix:
            coeffs.append(algebra.zero())
            continue
        d = probe.coeff_degree(i)
        if p == 2 or level == 0:
            c = random_homogeneous(rng, algebra, d)
        else:
            c = eps_reduce(random_homogeneous(rng, algebra, d, eps_free=True))
        coeffs.append(c)
    return GroupElement(p, k, level, algebra, tuple(coeffs))


def random_assignment(
    rng: random.Random,
    hp: HopfPresentation,
    target: AlgebraPresentation,
) -> GeneratorAssignment:
    """Random degree-preserving assignment of target values to the generators."""
    values = {}
    for g in hp.algebra.generators:
        v = random_homogeneous(rng, target, g.degree)
        if not v.is_zero():
            values[g.name] = v
    return GeneratorAssignment(hp, target, values)
