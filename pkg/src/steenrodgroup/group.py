"""Truncated Steenrod groups: composition, inverses, commutators, filtrations.

A group element is a stunted series  sum_i alpha_i X^(p^i)  with coefficients
in A_*[eps]/(eps^2), truncated at index k.  The flavor is the level index j:
level 0 is the base group (quotients G_p^k of G_p), level j >= 1 the groups
G_p<j> whose coefficient degrees are shifted by p^j.  The product is series
composition

    (alpha . beta)_i = sum_{j<=i} alpha_{i-j}^(p^j) beta_j,

with the eps-drop applied to positive-index coefficients at level 1 (odd p).
For odd p elements always live over an algebra with eps adjoined; for p = 2
eps does not exist and the eps operations are identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    AlgebraElement,
    AlgebraError,
    AlgebraPresentation,
    eps_part,
    eps_reduce,
    frobenius,
    times_eps,
)
from .partitions import enumerate_compositions

BOTTOM = Fraction(-1)  # filtration verdict for alpha_0 != 1
TOP = Fraction(10**9)  # identity up to truncation


class GroupError(Exception):
    pass


@dataclass(frozen=True)
class GroupElement:
    p: int
    k: int  # truncation level: coefficients alpha_0 .. alpha_k retained
    level: int  # 0 = base group, j >= 1 = G_p<j>
    algebra: AlgebraPresentation
    coeffs: tuple[AlgebraElement, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.k + 1:
            raise GroupError("coefficient list must have length k+1")
        if self.level < 0:
            raise GroupError("level must be >= 0")
        if self.p != self.algebra.p:
            raise GroupError("prime of algebra and element disagree")

    def coeff_degree(self, i: int) -> int:
        """Degree of the even part of alpha_i for this flavor."""
        p, j = self.p, self.level
        if p == 2:
            if j == 0:
                return 2**i - 1
            return 2 ** (i + j) - 2**j
        return 2 * (p ** (i + j) - p**j)

    def key(self):
        return (self.p, self.k, self.level) + tuple(c.key() for c in self.coeffs)

    def __repr__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            parts.append(f"({c!r})X^{self.p}^{i}" if i else f"({c!r})X")
        return " + ".join(parts) if parts else "0"


def _check_compatible(a: GroupElement, b: GroupElement):
    if (a.p, a.k, a.level, a.algebra) != (b.p, b.k, b.level, b.algebra):
        raise GroupError("mismatched group element parameters")


def identity(p: int, k: int, algebra: AlgebraPresentation, level: int = 0) -> GroupElement:
    coeffs = (algebra.one(),) + tuple(algebra.zero() for _ in range(k))
    return GroupElement(p, k, level, algebra, coeffs)


def is_identity(a: GroupElement) -> bool:
    return a.coeffs[0] == a.algebra.one() and all(c.is_zero() for c in a.coeffs[1:])


def compose(a: GroupElement, b: GroupElement) -> GroupElement:
    """The product a(X).b(X) = b(a(X))."""
    _check_compatible(a, b)
    out = []
    drop = a.level == 1 and a.p != 2
    for i in range(a.k + 1):
        acc = a.algebra.zero()
        for j in range(i + 1):
            acc = acc + frobenius(a.coeffs[i - j], j) * b.coeffs[j]
        if drop and i >= 1:
            acc = eps_reduce(acc)
        out.append(acc)
    return GroupElement(a.p, a.k, a.level, a.algebra, tuple(out))


def invert_recursive(a: GroupElement) -> GroupElement:
    """Inverse by solving sum_j alpha_{i-j}^(p^j) beta_j = 0 coefficient by coefficient."""
    alg = a.algebra
    drop = a.level == 1 and a.p != 2
    betas = [alg.scalar(2) - a.coeffs[0]]  # alpha_0^{-1} = 2 - alpha_0
    for i in range(1, a.k + 1):
        acc = alg.zero()
        for j in range(i):
            acc = acc + frobenius(a.coeffs[i - j], j) * betas[j]
        acc = -acc  # alpha_0^(p^i) = 1 for i >= 1
        if drop:
            acc = eps_reduce(acc)
        betas.append(acc)
    return GroupElement(a.p, a.k, a.level, a.algebra, tuple(betas))


def invert_closed(a: GroupElement) -> GroupElement:
    """Inverse by the closed partition-sum formula."""
    alg = a.algebra
    inv0 = alg.scalar(2) - a.coeffs[0]
    drop = a.level == 1 and a.p != 2
    betas = [inv0]
    for i in range(1, a.k + 1):
        acc = alg.zero()
        for nu in enumerate_compositions(i):
            prod = alg.one()
            for j in range(1, nu.length + 1):
                prod = prod * frobenius(a.coeffs[nu.parts[j - 1]], nu.sigma(j))
            acc = acc + prod.scale((-1) ** nu.length)
        beta = inv0 * acc
        if drop:
            beta = eps_reduce(beta)
        betas.append(beta)
    return GroupElement(a.p, a.k, a.level, a.algebra, tuple(betas))


def invert_split(a: GroupElement) -> GroupElement:
    """Inverse via the eps-split formula (odd p, base flavor only)."""
    if a.p == 2:
        raise GroupError("eps-split inverse requires odd p")
    if a.level != 0:
        raise GroupError("eps-split inverse is for the base flavor")
    alg = a.algebra
    even = [eps_reduce(c) for c in a.coeffs]
    odd = [eps_part(c) for c in a.coeffs]
    inv0 = alg.one() - times_eps(odd[0])  # (1 - alpha_{10} eps)
    betas = [inv0]
    for i in range(1, a.k + 1):
        acc = alg.zero()
        for nu in enumerate_compositions(i):
            prod_even = alg.one()
            for j in range(1, nu.length + 1):
                prod_even = prod_even * frobenius(even[nu.parts[j - 1]], nu.sigma(j))
            tail = alg.one()
            for j in range(2, nu.length + 1):
                tail = tail * frobenius(even[nu.parts[j - 1]], nu.sigma(j))
            term = prod_even + times_eps(odd[nu.parts[0]] * tail)
            acc = acc + term.scale((-1) ** nu.length)
        betas.append(inv0 * acc)
    return GroupElement(a.p, a.k, a.level, a.algebra, tuple(betas))


def commutator(a: GroupElement, b: GroupElement) -> GroupElement:
    """[a, b] = (a^{-1} . b^{-1}) . (a . b) in the composition product order."""
    _check_compatible(a, b)
    return compose(compose(invert_recursive(a), invert_recursive(b)), compose(a, b))


def zero_prefix_length(a: GroupElement) -> int:
    """Largest m with alpha_1 = ... = alpha_m = 0."""
    m = 0
    for i in range(1, a.k + 1):
        if not a.coeffs[i].is_zero():
            break
        m += 1
    return m


def commutator_leading(a: GroupElement, b: GroupElement, case: int):
    """Predicted leading commutator coefficients.

    Case 1 (k = l = 0) predicts the X^p and X^(p^2) coefficients; cases 2 and 3
    predict the X^(p^(k+1)) and X^(p^(k+2)) coefficients, where k is the number
    of leading vanishing alpha_i and l that of beta.  Returns (k, c1, c2).
    """
    _check_compatible(a, b)
    alg = a.algebra
    one = alg.one()
    kk = zero_prefix_length(a)
    ll = zero_prefix_length(b)
    a0, b0 = a.coeffs[0], b.coeffs[0]

    if case == 1:
        if a.k < 2:
            raise GroupError("truncation too small for case-1 prediction")
        a1, a2 = a.coeffs[1], a.coeffs[2]
        b1, b2 = b.coeffs[1], b.coeffs[2]
        c1 = a1 * (b0 - one) + (one - a0) * b1
        c2 = (
            (a2 - frobenius(a1, 1) * a1) * (b0 - one)
            + (one - a0) * (b2 - frobenius(b1, 1) * b1)
            + a0 * frobenius(a1, 1) * b1
            - a1 * b0 * frobenius(b1, 1)
        )
        return 0, c1, c2

    if case == 2:
        if kk < 1 or ll != 0:
            raise GroupError("case 2 requires k >= 1 vanishing alpha_i and beta_1 != 0 allowed")
        if a.k < kk + 2:
            raise GroupError("truncation too small for case-2 prediction")
        bbar = invert_recursive(b).coeffs
        ak1, ak2 = a.coeffs[kk + 1], a.coeffs[kk + 2]
        b1 = b.coeffs[1]
        c1 = ak1 * (b0 - one) - (one - a0) * b0 * bbar[kk + 1]
        c2 = (
            ak2 * (b0 - one)
            - (one - a0) * b0 * bbar[kk + 2]
            + a0 * frobenius(ak1, 1) * b1
            - ak1 * b0 * frobenius(b1, kk + 1)
        )
        return kk, c1, c2

    if case == 3:
        if not (kk >= ll >= 1):
            raise GroupError("case 3 requires k >= l >= 1")
        if a.k < kk + 2:
            raise GroupError("truncation too small for case-3 prediction")
        bbar = invert_recursive(b).coeffs
        ak1, ak2 = a.coeffs[kk + 1], a.coeffs[kk + 2]
        c1 = ak1 * (b0 - one) - (one - a0) * b0 * bbar[kk + 1]
        c2 = ak2 * (b0 - one) - (one - a0) * b0 * bbar[kk + 2]
        return kk, c1, c2

    raise GroupError(f"unknown case {case}")


def project(a: GroupElement, k2: int) -> GroupElement:
    """Truncate to level k2 <= k (a group homomorphism)."""
    if not 0 <= k2 <= a.k:
        raise GroupError(f"cannot project to truncation {k2}")
    return GroupElement(a.p, k2, a.level, a.algebra, a.coeffs[: k2 + 1])


def half_quotient(a: GroupElement) -> GroupElement:
    """Delete the eps-part of the top coefficient (the q^k map); identity for p=2."""
    if a.p == 2:
        return a
    coeffs = a.coeffs[:-1] + (eps_reduce(a.coeffs[-1]),)
    return GroupElement(a.p, a.k, a.level, a.algebra, coeffs)


def in_half_group(a: GroupElement) -> bool:
    """Top coefficient eps-free, i.e. membership in G_p^(k+0.5) inside G_p^(k+1)."""
    return eps_part(a.coeffs[-1]).is_zero()


def star_product(a: GroupElement, b: GroupElement) -> GroupElement:
    """Group law of G_p^(k+0.5): compose, then drop the top eps-part."""
    if not (in_half_group(a) and in_half_group(b)):
        raise GroupError("star product needs eps-free top coefficients")
    return half_quotient(compose(a, b))


def star_inverse(a: GroupElement) -> GroupElement:
    return half_quotient(invert_recursive(a))


def filtration_level(a: GroupElement) -> Fraction:
    """Largest filtration stage G_p^(m) / G_p^(m+0.5) containing a.

    Returns BOTTOM when alpha_0 != 1 and TOP when a is the identity up to
    truncation; otherwise an integer or half-integer Fraction.
    """
    if a.level != 0:
        raise GroupError("filtration is defined for the base flavor")
    if a.coeffs[0] != a.algebra.one():
        return BOTTOM
    for i in range(1, a.k + 1):
        if a.coeffs[i].is_zero():
            continue
        m = Fraction(i - 1)
        if a.p != 2 and eps_reduce(a.coeffs[i]).is_zero():
            return m + Fraction(1, 2)
        return m
    return TOP


def in_Gpn(a: GroupElement, n: int) -> bool:
    """Membership in G_{p,n}: alpha_i^(p^(n-i+1)) = 0 for i <= n, alpha_i = 0 beyond."""
    if a.level != 0:
        raise GroupError("G_{p,n} is defined inside the base group")
    if n < 0:
        raise GroupError("n must be >= 0")
    for i in range(1, a.k + 1):
        if i >= n + 1:
            if not a.coeffs[i].is_zero():
                return False
        elif not frobenius(a.coeffs[i], n - i + 1).is_zero():
            return False
    return True


def pi_ev(a: GroupElement) -> GroupElement:
    """Projection onto the eps-free subgroup G_p^ev (odd p)."""
    if a.p == 2:
        raise GroupError("pi^ev is defined for odd p")
    if a.level != 0:
        raise GroupError("pi^ev is defined on the base group")
    return GroupElement(
        a.p, a.k, a.level, a.algebra, tuple(eps_reduce(c) for c in a.coeffs)
    )


def in_G_od(a: GroupElement) -> bool:
    """Kernel of pi^ev: all coefficients lie in (eps) after subtracting X."""
    if a.p == 2:
        return is_identity(a)
    if eps_reduce(a.coeffs[0]) != a.algebra.one():
        return False
    return all(eps_reduce(c).is_zero() for c in a.coeffs[1:])


def rho(a: GroupElement) -> GroupElement:
    """The quotient map rho_j: level j -> level j+1, alpha_i -> alpha_i^p."""
    alg = a.algebra
    if a.level == 0:
        head = a.coeffs[0]
    else:
        head = alg.one()
    tail = tuple(eps_reduce(frobenius(c, 1)) for c in a.coeffs[1:])
    return GroupElement(a.p, a.k, a.level + 1, alg, (head,) + tail)


def in_abelian_kernel(a: GroupElement) -> bool:
    """Membership in the kernel of rho, i.e. rho(a) = identity."""
    return is_identity(rho(a))
