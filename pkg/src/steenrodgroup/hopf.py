"""The dual Steenrod algebra family as symbolic Hopf algebras.

A HopfPresentation wraps a finitely presented graded-commutative algebra whose
generators are the Milnor generators (possibly Frobenius-shifted: the level-k
subalgebras are generated by zeta_i^(2^k) resp. xi_i^(p^k)), together with a
generator index bound N, a degree cap D and the Frobenius shift.  All
quotients in play are by monomial ideals, so ideal membership is decided by
the caps of the presentation.

Everything is exact below degree D.  Presentations of the full (infinitely
generated, cap-free) algebras carry synthetic caps just large enough that no
monomial of degree <= D is lost.

Naming: "z{i}" are the p=2 generators, "x{i}" the polynomial and "t{i}" the
exterior generators for odd p.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Optional

from .algebra import (
    AlgebraElement,
    AlgebraError,
    AlgebraPresentation,
    Generator,
    adjoin_epsilon,
    frobenius,
    mono_mul,
    monomials_up_to_degree,
    times_eps,
)
from .group import GroupElement, GroupError, rho

HopfElement = AlgebraElement


class HopfError(Exception):
    pass


@dataclass(frozen=True)
class HopfPresentation:
    p: int
    N: int  # generator index bound
    D: int  # degree cap
    shift: int  # generators are the (p^shift)-th powers of the Milnor generators
    algebra: AlgebraPresentation
    label: str

    def gen_names(self) -> list[str]:
        return [g.name for g in self.algebra.generators]

    def has_gen(self, name: str) -> bool:
        return any(g.name == name for g in self.algebra.generators)

    def gen_degree(self, name: str) -> int:
        return self.algebra.generators[self.algebra.index(name)].degree

    @property
    def degree_cap(self) -> int:
        # D, relaxed so that every generator itself is admissible (the top
        # exterior generator outweighs D = 2(p^N - 1) by one)
        gens = self.algebra.generators
        return max([self.D] + [g.degree for g in gens])


def default_degree_cap(p: int, N: int = 4) -> int:
    return 2 * (p**N - 1)


def _synthetic_cap(degree: int, D: int) -> int:
    # smallest cap that keeps every monomial of degree <= D representable
    return D // degree + 1


def _build(p, N, D, shift, gens, label) -> HopfPresentation:
    return HopfPresentation(p, N, D, shift, AlgebraPresentation(p, tuple(gens)), label)


def dual_steenrod(p: int, N: int = 4, D: Optional[int] = None) -> HopfPresentation:
    """The full dual algebra, truncated at generator bound N and degree D."""
    if D is None:
        D = default_degree_cap(p, N)
    gens = []
    if p == 2:
        for i in range(1, N + 1):
            deg = 2**i - 1
            gens.append(Generator(f"z{i}", deg, _synthetic_cap(deg, D)))
    else:
        for i in range(0, N + 1):
            gens.append(Generator(f"t{i}", 2 * p**i - 1, 2))
        for i in range(1, N + 1):
            deg = 2 * (p**i - 1)
            gens.append(Generator(f"x{i}", deg, _synthetic_cap(deg, D)))
    return _build(p, N, D, 0, gens, f"A_dual(p={p})")


def milnor_quotient(p: int, n: int) -> HopfPresentation:
    """The finite quotient dual to the length-n subalgebra of operations."""
    gens = []
    if p == 2:
        for i in range(1, n + 1):
            gens.append(Generator(f"z{i}", 2**i - 1, 2 ** (n - i + 1)))
    else:
        for i in range(0, n + 1):
            gens.append(Generator(f"t{i}", 2 * p**i - 1, 2))
        for i in range(1, n + 1):
            gens.append(Generator(f"x{i}", 2 * (p**i - 1), p ** (n - i + 1)))
    D = sum((g.cap - 1) * g.degree for g in gens)
    return _build(p, n, max(D, 0), 0, gens, f"A({n})")


def milnor_quotient_ev(p: int, n: int) -> HopfPresentation:
    """Polynomial part of milnor_quotient (odd p)."""
    if p == 2:
        raise HopfError("the even subalgebra split is an odd-p notion")
    gens = [
        Generator(f"x{i}", 2 * (p**i - 1), p ** (n - i + 1)) for i in range(1, n + 1)
    ]
    D = sum((g.cap - 1) * g.degree for g in gens)
    return _build(p, n, max(D, 0), 0, gens, f"A_ev({n})")


def level_algebra(p: int, k: int, N: int = 4, D: Optional[int] = None) -> HopfPresentation:
    """The level-k subalgebra, generated by the (p^k)-th generator powers."""
    if k == 0:
        return dual_steenrod(p, N, D)
    if D is None:
        D = default_degree_cap(p, N) * p**k
    gens = []
    if p == 2:
        for i in range(1, N + 1):
            deg = 2**k * (2**i - 1)
            gens.append(Generator(f"z{i}", deg, _synthetic_cap(deg, D)))
    else:
        if k == 1:
            gens.append(Generator("t0", 1, 2))
        for i in range(1, N + 1):
            deg = 2 * p**k * (p**i - 1)
            gens.append(Generator(f"x{i}", deg, _synthetic_cap(deg, D)))
    return _build(p, N, D, k, gens, f"A_angle({k})")


def level_mod_I(p: int, k: int, N: int = 4) -> HopfPresentation:
    """Quotient of the level-k algebra by the minimal cocommutativity ideal."""
    gens = []
    if p == 2:
        for i in range(1, N + 1):
            gens.append(Generator(f"z{i}", 2**k * (2**i - 1), 2))
    elif k == 0:
        for i in range(1, N + 1):
            gens.append(Generator(f"t{i}", 2 * p**i - 1, 2))
        for i in range(1, N + 1):
            gens.append(Generator(f"x{i}", 2 * (p**i - 1), p))
    else:
        if k == 1:
            gens.append(Generator("t0", 1, 2))
        for i in range(1, N + 1):
            gens.append(Generator(f"x{i}", 2 * p**k * (p**i - 1), p))
    D = sum((g.cap - 1) * g.degree for g in gens)
    return _build(p, N, max(D, 0), k, gens, f"A_mod_I({k})")


def dual_mod_J(p: int, k: int, N: int = 4) -> HopfPresentation:
    """Quotient of the full dual algebra by the extended level-k ideal."""
    gens = []
    if p == 2:
        for i in range(1, N + 1):
            gens.append(Generator(f"z{i}", 2**i - 1, 2 ** (k + 1)))
    elif k == 0:
        return level_mod_I(p, 0, N)
    else:
        for i in range(0, N + 1):
            gens.append(Generator(f"t{i}", 2 * p**i - 1, 2))
        for i in range(1, N + 1):
            gens.append(Generator(f"x{i}", 2 * (p**i - 1), p ** (k + 1)))
    D = sum((g.cap - 1) * g.degree for g in gens)
    return _build(p, N, max(D, 0), 0, gens, f"A_mod_J({k})")


# -- tensor square -------------------------------------------------------------


class TensorElement:
    """Sparse element of the two-fold tensor square, with Koszul signs."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres: AlgebraPresentation, terms: dict):
        self.pres = pres
        self.terms = terms

    @classmethod
    def zero(cls, pres) -> "TensorElement":
        return cls(pres, {})

    @classmethod
    def of(cls, x: AlgebraElement, y: AlgebraElement) -> "TensorElement":
        pres = x.pres
        terms = {}
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                c = c1 * c2 % pres.p
                if c:
                    terms[(m1, m2)] = c
        return cls(pres, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.pres == other.pres and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __add__(self, other: "TensorElement") -> "TensorElement":
        p = self.pres.p
        terms = dict(self.terms)
        for key, c in other.terms.items():
            v = (terms.get(key, 0) + c) % p
            if v:
                terms[key] = v
            else:
                terms.pop(key, None)
        return TensorElement(self.pres, terms)

    def __neg__(self) -> "TensorElement":
        p = self.pres.p
        return TensorElement(self.pres, {k: (-c) % p for k, c in self.terms.items()})

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        pres = self.pres
        p = pres.p
        terms: dict = {}
        for (a1, b1), c1 in self.terms.items():
            deg_b1 = pres.mono_degree(b1)
            for (a2, b2), c2 in other.terms.items():
                left = mono_mul(pres, a1, a2)
                if left is None:
                    continue
                right = mono_mul(pres, b1, b2)
                if right is None:
                    continue
                sign = left[1] * right[1]
                if deg_b1 % 2 == 1 and pres.mono_degree(a2) % 2 == 1:
                    sign = -sign
                key = (left[0], right[0])
                v = (terms.get(key, 0) + sign * c1 * c2) % p
                if v:
                    terms[key] = v
                else:
                    terms.pop(key, None)
        return TensorElement(pres, terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"{c}*{m1}(x){m2}" for (m1, m2), c in sorted(self.terms.items())
        )


def switch(t: TensorElement) -> TensorElement:
    """The switching map x(x)y -> (-1)^(|x||y|) y(x)x."""
    pres = t.pres
    p = pres.p
    terms = {}
    for (m1, m2), c in t.terms.items():
        if pres.mono_degree(m1) % 2 == 1 and pres.mono_degree(m2) % 2 == 1:
            c = -c % p
        key = (m2, m1)
        v = (terms.get(key, 0) + c) % p
        if v:
            terms[key] = v
        else:
            terms.pop(key, None)
    return TensorElement(pres, terms)


# -- structure maps ------------------------------------------------------------


def _gen_kind_index(name: str) -> tuple[str, int]:
    return name[0], int(name[1:])


@functools.lru_cache(maxsize=None)
def coproduct_gen(hp: HopfPresentation, name: str) -> TensorElement:
    """Coproduct of one generator; quotient caps kill the out-of-range terms."""
    alg = hp.algebra
    kind, n = _gen_kind_index(name)
    p = hp.p
    acc = TensorElement.zero(alg)
    if kind in ("z", "x"):
        # mu(g_n) = sum_j g_{n-j}^{p^j} (x) g_j  with g_0 = 1; the shifted
        # generators satisfy the same formula
        for j in range(0, n + 1):
            left = alg.one() if j == n else alg.gen(f"{kind}{n - j}", p**j)
            right = alg.one() if j == 0 else alg.gen(f"{kind}{j}")
            acc = acc + TensorElement.of(left, right)
        return acc
    if kind == "t":
        for j in range(0, n + 1):
            left = alg.one() if j == n else _maybe_gen(hp, f"x{n - j}", p**j)
            right = _maybe_gen(hp, f"t{j}")
            acc = acc + TensorElement.of(left, right)
        acc = acc + TensorElement.of(alg.gen(name), alg.one())
        return acc
    raise HopfError(f"unknown generator {name}")


def _maybe_gen(hp: HopfPresentation, name: str, exp: int = 1) -> AlgebraElement:
    """gen(name)^exp, or zero when the quotient presentation lacks the generator."""
    if not hp.has_gen(name):
        return hp.algebra.zero()
    return hp.algebra.gen(name, exp)


def coproduct(hp: HopfPresentation, x: HopfElement, check_cap: bool = True) -> TensorElement:
    """Multiplicative extension of the generator coproducts."""
    alg = hp.algebra
    if check_cap:
        cap = hp.degree_cap
        for mono in x.terms:
            if alg.mono_degree(mono) > cap:
                raise HopfError(f"degree {alg.mono_degree(mono)} exceeds cap D={hp.D}")
    acc = TensorElement.zero(alg)
    one = TensorElement.of(alg.one(), alg.one())
    for mono, c in x.terms.items():
        term = one
        for g, e in zip(alg.generators, mono):
            if e == 0:
                continue
            mg = coproduct_gen(hp, g.name)
            for _ in range(e):
                term = term * mg
        scaled = TensorElement(alg, {k: v * c % alg.p for k, v in term.terms.items() if v * c % alg.p})
        acc = acc + scaled
    return acc


@functools.lru_cache(maxsize=None)
def antipode_gen(hp: HopfPresentation, name: str) -> AlgebraElement:
    """Conjugation on one generator, by the defining recursions."""
    alg = hp.algebra
    kind, n = _gen_kind_index(name)
    p = hp.p
    if kind in ("z", "x"):
        # sum_j g_{n-j}^{p^j} iota(g_j) = 0, iota(g_0) = 1
        acc = alg.gen(f"{kind}{n}")  # j = 0 term
        for j in range(1, n):
            acc = acc + alg.gen(f"{kind}{n - j}", p**j) * antipode_gen(hp, f"{kind}{j}")
        return -acc
    if kind == "t":
        acc = alg.zero()
        for j in range(0, n + 1):
            tau = _maybe_gen(hp, f"t{j}")
            if tau.is_zero():
                continue
            if j == n:
                xi_conj = alg.one()
            else:
                xi_conj = antipode_gen(hp, f"x{n - j}") if hp.has_gen(f"x{n - j}") else alg.zero()
            acc = acc + frobenius(xi_conj, j) * tau
        return -acc
    raise HopfError(f"unknown generator {name}")


def antipode(hp: HopfPresentation, x: HopfElement) -> HopfElement:
    """Multiplicative extension; legitimate because the algebra is graded-commutative."""
    alg = hp.algebra
    acc = alg.zero()
    for mono, c in x.terms.items():
        term = alg.scalar(c)
        for g, e in zip(alg.generators, mono):
            if e == 0:
                continue
            ig = antipode_gen(hp, g.name)
            for _ in range(e):
                term = term * ig
        acc = acc + term
    return acc


def counit(x: HopfElement) -> int:
    return x.constant_term()


# -- axiom defects (zero iff the axiom holds) ---------------------------------


def coassociativity_defect(hp: HopfPresentation, x: HopfElement) -> dict:
    """(mu (x) id) mu(x) - (id (x) mu) mu(x) as a sparse triple-tensor."""
    alg = hp.algebra
    mu = coproduct(hp, x)
    terms: dict = {}

    def bump(key, c):
        v = (terms.get(key, 0) + c) % alg.p
        if v:
            terms[key] = v
        else:
            terms.pop(key, None)

    for (m1, m2), c in mu.terms.items():
        inner = coproduct(hp, AlgebraElement(alg, {m1: 1}), check_cap=False)
        for (a, b), c2 in inner.terms.items():
            bump((a, b, m2), c * c2)
        inner = coproduct(hp, AlgebraElement(alg, {m2: 1}), check_cap=False)
        for (a, b), c2 in inner.terms.items():
            bump((m1, a, b), -c * c2)
    return terms


def counit_defect(hp: HopfPresentation, x: HopfElement) -> tuple[AlgebraElement, AlgebraElement]:
    """((counit (x) id) mu(x) - x, (id (x) counit) mu(x) - x)."""
    alg = hp.algebra
    mu = coproduct(hp, x)
    left = alg.zero()
    right = alg.zero()
    empty = (0,) * alg.ngens
    for (m1, m2), c in mu.terms.items():
        if m1 == empty:
            left = left + AlgebraElement(alg, {m2: c})
        if m2 == empty:
            right = right + AlgebraElement(alg, {m1: c})
    return left - x, right - x


def antipode_defect(hp: HopfPresentation, x: HopfElement) -> tuple[AlgebraElement, AlgebraElement]:
    """(m(iota (x) id) mu(x) - counit(x) 1,  m(id (x) iota) mu(x) - counit(x) 1)."""
    alg = hp.algebra
    mu = coproduct(hp, x)
    left = alg.zero()
    right = alg.zero()
    for (m1, m2), c in mu.terms.items():
        e1 = AlgebraElement(alg, {m1: c})
        e2 = AlgebraElement(alg, {m2: 1})
        left = left + antipode(hp, e1) * e2
        right = right + e1 * antipode(hp, e2)
    target = alg.scalar(counit(x))
    return left - target, right - target


def cocommutativity_defect(hp: HopfPresentation, d: Optional[int] = None):
    """Per-generator images of mu - T mu; all zero means cocommutative up to d."""
    if d is None:
        d = hp.D
    out = []
    for g in hp.algebra.generators:
        if g.degree > d:
            continue
        mu = coproduct(hp, hp.algebra.gen(g.name))
        out.append((g.name, mu - switch(mu)))
    return out


def primitivity_check(hp: HopfPresentation) -> bool:
    """True iff every generator is primitive in this quotient."""
    alg = hp.algebra
    for g in alg.generators:
        x = alg.gen(g.name)
        expected = TensorElement.of(x, alg.one()) + TensorElement.of(alg.one(), x)
        if coproduct(hp, x, check_cap=False) != expected:
            return False
    return True


# -- monomial Hopf ideals ------------------------------------------------------


def check_hopf_ideal(hp: HopfPresentation, ideal_gens: Iterable[HopfElement], d: int):
    """Verify the Hopf-ideal axioms for a monomial ideal, up to degree d.

    Returns (ok, first_violation) where the violation names the offending
    monomial and axiom.
    """
    alg = hp.algebra
    gen_monos = []
    for g in ideal_gens:
        if len(g.terms) != 1 or next(iter(g.terms.values())) != 1:
            raise HopfError("ideal generators must be single monomials")
        gen_monos.append(next(iter(g.terms)))

    def in_ideal(mono) -> bool:
        return any(all(a >= b for a, b in zip(mono, gm)) for gm in gen_monos)

    for mono in monomials_up_to_degree(alg, d):
        if not in_ideal(mono):
            continue
        x = AlgebraElement(alg, {mono: 1})
        if counit(x) != 0:
            return False, (mono, "counit")
        mu = coproduct(hp, x, check_cap=False)
        for (m1, m2), c in mu.terms.items():
            if not in_ideal(m1) and not in_ideal(m2):
                return False, (mono, "coproduct", (m1, m2, c))
        conj = antipode(hp, x)
        for m in conj.terms:
            if not in_ideal(m):
                return False, (mono, "antipode", m)
    return True, None


# -- assignments, convolution, theta -------------------------------------------


@dataclass
class GeneratorAssignment:
    """A degree-preserving assignment of target values to the Hopf generators,
    i.e. an algebra homomorphism into the target presentation."""

    hopf: HopfPresentation
    target: AlgebraPresentation
    values: dict

    def __post_init__(self):
        if self.target.p != self.hopf.p:
            raise HopfError("target prime mismatch")
        for name, v in self.values.items():
            if not self.hopf.has_gen(name):
                raise HopfError(f"assignment to unknown generator {name}")
            if v.is_zero():
                continue
            if v.degree() != self.hopf.gen_degree(name):
                raise HopfError(f"assignment to {name} is not degree-preserving")

    def value(self, name: str) -> AlgebraElement:
        return self.values.get(name, self.target.zero())

    def eval_monomial(self, mono) -> AlgebraElement:
        out = self.target.one()
        for g, e in zip(self.hopf.algebra.generators, mono):
            for _ in range(e):
                out = out * self.value(g.name)
        return out

    def eval(self, x: HopfElement) -> AlgebraElement:
        acc = self.target.zero()
        for mono, c in x.terms.items():
            acc = acc + self.eval_monomial(mono).scale(c)
        return acc


def trivial_assignment(hp: HopfPresentation, target: AlgebraPresentation) -> GeneratorAssignment:
    return GeneratorAssignment(hp, target, {})


def convolution(phi: GeneratorAssignment, psi: GeneratorAssignment) -> GeneratorAssignment:
    """The point-group product: x -> m(psi (x) phi)(mu(x)) on each generator."""
    if phi.hopf != psi.hopf or phi.target != psi.target:
        raise HopfError("convolution needs matching presentations")
    hp = phi.hopf
    values = {}
    for g in hp.algebra.generators:
        mu = coproduct(hp, hp.algebra.gen(g.name), check_cap=False)
        acc = phi.target.zero()
        for (m1, m2), c in mu.terms.items():
            acc = acc + (psi.eval_monomial(m1) * phi.eval_monomial(m2)).scale(c)
        if not acc.is_zero():
            values[g.name] = acc
    return GeneratorAssignment(hp, phi.target, values)


def antipode_assignment(phi: GeneratorAssignment) -> GeneratorAssignment:
    """phi precomposed with the conjugation."""
    hp = phi.hopf
    values = {}
    for g in hp.algebra.generators:
        v = phi.eval(antipode_gen(hp, g.name))
        if not v.is_zero():
            values[g.name] = v
    return GeneratorAssignment(hp, phi.target, values)


def group_algebra_for(target: AlgebraPresentation) -> AlgebraPresentation:
    """Coefficient algebra of the group elements read off from assignments."""
    if target.p == 2 or target.has_epsilon:
        return target
    return adjoin_epsilon(target)


def embed(x: AlgebraElement, big: AlgebraPresentation) -> AlgebraElement:
    """Extend an element along an append-only extension of its presentation."""
    if x.pres == big:
        return x
    extra = big.ngens - x.pres.ngens
    if extra < 0 or big.generators[: x.pres.ngens] != x.pres.generators:
        raise AlgebraError("not an append-only extension")
    return AlgebraElement(big, {m + (0,) * extra: c for m, c in x.terms.items()})


def theta(phi: GeneratorAssignment, trunc: int) -> GroupElement:
    """The group element corresponding to an algebra homomorphism."""
    hp = phi.hopf
    if trunc > hp.N:
        raise GroupError(f"truncation {trunc} exceeds generator bound N={hp.N}")
    p = hp.p
    galg = group_algebra_for(phi.target)
    one = galg.one()

    def up(v):
        return embed(v, galg)

    coeffs = []
    if p == 2:
        coeffs.append(one)
        for i in range(1, trunc + 1):
            coeffs.append(up(phi.value(f"z{i}")))
    else:
        if hp.shift <= 1:
            coeffs.append(one + times_eps(up(phi.value("t0"))))
        else:
            coeffs.append(one)
        for i in range(1, trunc + 1):
            c = up(phi.value(f"x{i}"))
            if hp.shift == 0:
                c = c + times_eps(up(phi.value(f"t{i}")))
            coeffs.append(c)
    return GroupElement(p, trunc, hp.shift, galg, tuple(coeffs))


def restrict_assignment(phi: GeneratorAssignment, next_hp: Optional[HopfPresentation] = None) -> GeneratorAssignment:
    """Precompose with the inclusion of the next level: generators become p-th powers."""
    hp = phi.hopf
    if next_hp is None:
        next_hp = level_algebra(hp.p, hp.shift + 1, hp.N, hp.D * hp.p)
    values = {}
    base = "z" if hp.p == 2 else "x"
    for i in range(1, hp.N + 1):
        v = frobenius(phi.value(f"{base}{i}"), 1)
        if not v.is_zero():
            values[f"{base}{i}"] = v
    if next_hp.has_gen("t0"):
        v = phi.value("t0")
        if not v.is_zero():
            values["t0"] = v
    return GeneratorAssignment(next_hp, phi.target, values)


def rho_diagram_check(phi: GeneratorAssignment, trunc: int) -> bool:
    """rho(theta(phi)) must equal theta of the restricted assignment."""
    lhs = rho(theta(phi, trunc))
    rhs = theta(restrict_assignment(phi), trunc)
    return lhs == rhs
