"""Named property suites over seeded random samples, with counterexamples.

Each suite checks one family of algebraic laws (group axioms, inverse-oracle
agreement, commutator-coefficient predictions, filtration bounds, Hopf axioms,
diagram compatibilities, basis complementarity).  Results are returned sorted
by suite name; a failing suite carries a fully serialized counterexample so
the failure can be replayed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .algebra import AlgebraPresentation, adjoin_epsilon, eps_part, frobenius, times_eps
from .group import (
    GroupElement,
    commutator,
    commutator_leading,
    compose,
    filtration_level,
    identity,
    in_Gpn,
    invert_closed,
    invert_recursive,
    invert_split,
    is_identity,
    pi_ev,
    project,
    rho,
)
from .hopf import (
    HopfPresentation,
    TensorElement,
    antipode_defect,
    antipode_gen,
    check_hopf_ideal,
    coassociativity_defect,
    cocommutativity_defect,
    convolution,
    counit_defect,
    dual_mod_J,
    dual_steenrod,
    level_algebra,
    level_mod_I,
    milnor_quotient,
    primitivity_check,
    rho_diagram_check,
    theta,
)
from .milnor import DualSymbol, in_J_basis, in_dual_span
from .partitions import Composition, enumerate_compositions, extend_F
from .sampling import random_assignment, random_group_element, random_homogeneous
from .serialize import group_to_obj


@dataclass
class PropertyResult:
    name: str
    ok: bool
    samples: int
    counterexample: Optional[dict] = field(default=None)

    def to_obj(self) -> dict:
        out = {"name": self.name, "ok": self.ok, "samples": self.samples}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def group_test_algebra(p: int) -> AlgebraPresentation:
    """Default coefficient algebra for random group-element tests."""
    n = 3 if p == 2 else 2
    base = milnor_quotient(p, n).algebra
    return base if p == 2 else adjoin_epsilon(base)


def _ce_group(**named) -> dict:
    return {k: group_to_obj(v) if isinstance(v, GroupElement) else repr(v) for k, v in named.items()}


def check_group_axioms(p: int, k: int, rng: random.Random, samples: int) -> PropertyResult:
    alg = group_test_algebra(p)
    e = identity(p, k, alg)
    for _ in range(samples):
        a = random_group_element(rng, p, k, alg)
        b = random_group_element(rng, p, k, alg)
        c = random_group_element(rng, p, k, alg)
        if compose(compose(a, b), c) != compose(a, compose(b, c)):
            return PropertyResult("group_axioms", False, samples, _ce_group(law="associativity", a=a, b=b, c=c))
        if compose(e, a) != a or compose(a, e) != a:
            return PropertyResult("group_axioms", False, samples, _ce_group(law="identity", a=a))
        if not is_identity(compose(a, invert_recursive(a))):
            return PropertyResult("group_axioms", False, samples, _ce_group(law="inverse", a=a))
    return PropertyResult("group_axioms", True, samples)


def check_inverse_oracles(p: int, k: int, rng: random.Random, samples: int) -> PropertyResult:
    alg = group_test_algebra(p)
    for _ in range(samples):
        a = random_group_element(rng, p, k, alg)
        r = invert_recursive(a)
        c = invert_closed(a)
        if r != c:
            return PropertyResult("inverse_oracles", False, samples, _ce_group(law="closed", a=a, recursive=r, closed=c))
        if p != 2:
            s = invert_split(a)
            if r != s:
                return PropertyResult("inverse_oracles", False, samples, _ce_group(law="split", a=a, recursive=r, split=s))
    return PropertyResult("inverse_oracles", True, samples)


def _sample_with_prefix(rng, p, k, alg, want: int) -> GroupElement:
    """Random element whose leading vanishing-coefficient count is exactly want."""
    from .group import zero_prefix_length

    for _ in range(100):
        a = random_group_element(rng, p, k, alg, zero_prefix=want)
        if zero_prefix_length(a) == want:
            return a
    raise RuntimeError(f"could not sample element with zero prefix {want}")


def check_commutator_leading(p: int, k: int, rng: random.Random, samples: int) -> PropertyResult:
    alg = group_test_algebra(p)
    k = max(k, 3)
    per_case = max(samples // 3, 1)
    for case in (1, 2, 3):
        for _ in range(per_case):
            if case == 1:
                a = random_group_element(rng, p, k, alg)
                b = random_group_element(rng, p, k, alg)
            elif case == 2:
                kk = rng.randint(1, k - 2)
                a = _sample_with_prefix(rng, p, k, alg, kk)
                b = _sample_with_prefix(rng, p, k, alg, 0)
            else:
                ll = rng.randint(1, k - 2)
                kk = rng.randint(ll, k - 2)
                a = _sample_with_prefix(rng, p, k, alg, kk)
                b = _sample_with_prefix(rng, p, k, alg, ll)
            kk, c1, c2 = commutator_leading(a, b, case)
            actual = commutator(a, b)
            if actual.coeffs[kk + 1] != c1 or actual.coeffs[kk + 2] != c2:
                return PropertyResult(
                    "commutator_leading", False, samples,
                    _ce_group(case=case, a=a, b=b, predicted_1=c1, predicted_2=c2, actual=actual),
                )
    return PropertyResult("commutator_leading", True, samples)


def _filtered_element(rng, p, k, alg, m: Fraction) -> GroupElement:
    """Random element of filtration >= m (integer or half-integer Fraction)."""
    whole = int(m)
    half = m - whole == Fraction(1, 2)
    a = random_group_element(rng, p, k, alg, zero_prefix=min(whole, k))
    coeffs = list(a.coeffs)
    coeffs[0] = alg.one()
    if half and whole + 1 <= k:
        coeffs[whole + 1] = times_eps(eps_part(coeffs[whole + 1]))
    return GroupElement(p, k, 0, alg, tuple(coeffs))


def check_filtration_bounds(p: int, k: int, rng: random.Random, samples: int) -> PropertyResult:
    """Commutator inclusions between filtration stages, elementwise."""
    alg = group_test_algebra(p)
    k = max(k, 4)
    H = Fraction(1, 2)
    cases = [
        (Fraction(-1), Fraction(-1), H),
        (H, H, Fraction(2)),
        (Fraction(1), Fraction(1), Fraction(3)),
        (Fraction(2), Fraction(2), Fraction(4)),
        (Fraction(1), Fraction(-1), Fraction(1) + H),
        (Fraction(2), Fraction(-1), Fraction(2) + H),
        (H, Fraction(-1), Fraction(1) + H),
        (Fraction(1) + H, Fraction(-1), Fraction(2) + H),
    ]
    per = max(samples // len(cases), 1)
    for ma, mb, bound in cases:
        for _ in range(per):
            a = _filtered_element(rng, p, k, alg, max(ma, Fraction(0)))
            b = _filtered_element(rng, p, k, alg, max(mb, Fraction(0)))
            if ma == Fraction(-1):
                a = random_group_element(rng, p, k, alg)
            if mb == Fraction(-1):
                b = random_group_element(rng, p, k, alg)
            c = commutator(a, b)
            lvl = filtration_level(c)
            if lvl < min(bound, Fraction(k)):
                return PropertyResult(
                    "filtration_bounds", False, samples,
                    _ce_group(stage_a=ma, stage_b=mb, bound=bound, a=a, b=b, commutator=c, level=lvl),
                )
    return PropertyResult("filtration_bounds", True, samples)


def check_nested_commutators(p: int, k: int, rng: random.Random, samples: int) -> PropertyResult:
    """Lower-central bound: depth-(d+1) nested commutators sit above d + 1/2."""
    alg = group_test_algebra(p)
    k = max(k, 4)
    per = max(samples // 4, 1)
    for depth in range(1, 5):
        for _ in range(per):
            acc = random_group_element(rng, p, k, alg)
            for _ in range(depth):
                acc = commutator(acc, random_group_element(rng, p, k, alg))
            lvl = filtration_level(acc)
            bound = min(Fraction(depth - 1) + Fraction(1, 2), Fraction(k))
            if lvl < bound:
                return PropertyResult(
                    "nested_commutators", False, samples,
                    _ce_group(depth=depth, result=acc, level=lvl, bound=bound),
                )
            if p != 2:
                acc = pi_ev(random_group_element(rng, p, k, alg))
                for _ in range(depth):
                    acc = commutator(acc, pi_ev(random_group_element(rng, p, k, alg)))
                lvl = filtration_level(acc)
                bound = min(Fraction(depth), Fraction(k))
                if lvl < bound:
                    return PropertyResult(
                        "nested_commutators", False, samples,
                        _ce_group(depth=depth, variant="ev", result=acc, level=lvl, bound=bound),
                    )
    return PropertyResult("nested_commutators", True, samples)


def check_subgroup_closure(p: int, k: int, rng: random.Random, samples: int) -> PropertyResult:
    """Closure of the Frobenius-nilpotency condition under compose and invert."""
    n = 2
    alg = group_test_algebra(p)
    k = max(k, n)
    found = 0
    for _ in range(samples * 4):
        if found >= samples:
            break
        a = random_group_element(rng, p, k, alg)
        b = random_group_element(rng, p, k, alg)
        if not (in_Gpn(a, n) and in_Gpn(b, n)):
            continue
        found += 1
        c = compose(a, b)
        inv = invert_recursive(a)
        if not in_Gpn(c, n):
            return PropertyResult("subgroup_closure", False, samples, _ce_group(a=a, b=b, product=c))
        if not in_Gpn(inv, n):
            return PropertyResult("subgroup_closure", False, samples, _ce_group(a=a, inverse=inv))
    return PropertyResult("subgroup_closure", True, samples)


def check_homomorphisms(p: int, k: int, rng: random.Random, samples: int) -> PropertyResult:
    alg = group_test_algebra(p)
    for _ in range(samples):
        a = random_group_element(rng, p, k, alg)
        b = random_group_element(rng, p, k, alg)
        ab = compose(a, b)
        k2 = rng.randint(0, k)
        if project(ab, k2) != compose(project(a, k2), project(b, k2)):
            return PropertyResult("homomorphisms", False, samples, _ce_group(law="project", a=a, b=b))
        if rho(ab) != compose(rho(a), rho(b)):
            return PropertyResult("homomorphisms", False, samples, _ce_group(law="rho", a=a, b=b))
        if p != 2:
            if pi_ev(ab) != compose(pi_ev(a), pi_ev(b)):
                return PropertyResult("homomorphisms", False, samples, _ce_group(law="pi_ev", a=a, b=b))
    return PropertyResult("homomorphisms", True, samples)


def check_hopf_axioms(p: int, rng=None, samples: int = 0) -> PropertyResult:
    hp = dual_steenrod(p)
    alg = hp.algebra
    for g in alg.generators:
        x = alg.gen(g.name)
        if coassociativity_defect(hp, x):
            return PropertyResult("hopf_axioms", False, samples, {"law": "coassociativity", "generator": g.name})
        l, r = counit_defect(hp, x)
        if not (l.is_zero() and r.is_zero()):
            return PropertyResult("hopf_axioms", False, samples, {"law": "counit", "generator": g.name})
        l, r = antipode_defect(hp, x)
        if not (l.is_zero() and r.is_zero()):
            return PropertyResult("hopf_axioms", False, samples, {"law": "antipode", "generator": g.name})
    # the defining antipode recursions, checked directly
    kind = "z" if p == 2 else "x"
    for n in range(1, hp.N + 1):
        acc = alg.gen(f"{kind}{n}") + antipode_gen(hp, f"{kind}{n}")
        for j in range(1, n):
            acc = acc + alg.gen(f"{kind}{n - j}", p**j) * antipode_gen(hp, f"{kind}{j}")
        if not acc.is_zero():
            return PropertyResult("hopf_axioms", False, samples, {"law": "recursion", "generator": f"{kind}{n}"})
    return PropertyResult("hopf_axioms", True, samples)


def check_hopf_ideals(p: int, rng=None, samples: int = 0) -> PropertyResult:
    """The named quotient ideals satisfy the Hopf-ideal axioms up to a degree."""
    hp = dual_steenrod(p, N=3, D=2 * (p**3 - 1))
    alg = hp.algebra
    d = 2 * p**2 if p != 2 else 15
    ideals = {}
    if p == 2:
        ideals["I<0>"] = [alg.gen(f"z{i}", 2) for i in range(1, 4)]
        ideals["I<1>"] = [alg.gen(f"z{i}", 4) for i in (1, 2) if not alg.gen(f"z{i}", 4).is_zero()]
        ideals["I(2,n)"] = [alg.gen("z1", 4), alg.gen("z2", 2), alg.gen("z3")]
    else:
        ideals["J<0>"] = [alg.gen("t0")] + [alg.gen(f"x{i}", p) for i in range(1, 4) if not alg.gen(f"x{i}", p).is_zero()]
        ideals["I(p,n)"] = [alg.gen("t2"), alg.gen("t3"), alg.gen("x1", p), alg.gen("x2"), alg.gen("x3")]
    for name, gens in ideals.items():
        gens = [g for g in gens if not g.is_zero()]
        ok, witness = check_hopf_ideal(hp, gens, d)
        if not ok:
            return PropertyResult("hopf_ideals", False, samples, {"ideal": name, "witness": repr(witness)})
    # a non-Hopf ideal must be rejected
    bad = [alg.gen("z2" if p == 2 else "x2")]
    ok, _ = check_hopf_ideal(hp, bad, d)
    if ok:
        return PropertyResult("hopf_ideals", False, samples, {"ideal": "principal-degree-counterexample", "witness": "accepted"})
    return PropertyResult("hopf_ideals", True, samples)


def check_primitivity(p: int, rng=None, samples: int = 0) -> PropertyResult:
    for k in range(0, 3):
        if not primitivity_check(level_mod_I(p, k, N=3)):
            return PropertyResult("primitivity", False, samples, {"preset": f"A_mod_I({k})"})
    if not primitivity_check(dual_mod_J(p, 0, N=3)):
        return PropertyResult("primitivity", False, samples, {"preset": "A_mod_J(0)"})
    if p != 2:
        hp = dual_steenrod(p, N=2, D=2 * (p**2 - 1) + 4 * p)
        defects = dict(cocommutativity_defect(hp))
        alg = hp.algebra
        witness = TensorElement.of(alg.gen("x1"), alg.gen("t0")) - TensorElement.of(alg.gen("t0"), alg.gen("x1"))
        if defects.get("t1") != witness:
            return PropertyResult("primitivity", False, samples, {"law": "cocommutativity witness", "got": repr(defects.get("t1"))})
    else:
        hp = dual_steenrod(2, N=3)
        defects = dict(cocommutativity_defect(hp))
        alg = hp.algebra
        witness = TensorElement.of(alg.gen("z1", 2), alg.gen("z1")) - TensorElement.of(alg.gen("z1"), alg.gen("z1", 2))
        if not defects["z1"].is_zero() or defects["z2"] != witness:
            return PropertyResult("primitivity", False, samples, {"law": "p=2 cocommutativity defect"})
    return PropertyResult("primitivity", True, samples)


def theta_target(p: int) -> AlgebraPresentation:
    """A roomy finite target algebra for random generator assignments."""
    n = 4 if p == 2 else 3
    return milnor_quotient(p, n).algebra


def check_theta_convolution(p: int, rng: random.Random, samples: int) -> PropertyResult:
    hp = dual_steenrod(p, N=3, D=2 * (p**3 - 1))
    target = theta_target(p)
    trunc = 3
    for _ in range(samples):
        phi = random_assignment(rng, hp, target)
        psi = random_assignment(rng, hp, target)
        lhs = theta(convolution(phi, psi), trunc)
        rhs = compose(theta(psi, trunc), theta(phi, trunc))
        if lhs != rhs:
            return PropertyResult(
                "theta_convolution", False, samples,
                _ce_group(lhs=lhs, rhs=rhs),
            )
    return PropertyResult("theta_convolution", True, samples)


def check_rho_diagram(p: int, rng: random.Random, samples: int) -> PropertyResult:
    target = theta_target(p)
    per = max(samples // 3, 1)
    for k in (0, 1, 2):
        hp = level_algebra(p, k, N=3)
        for _ in range(per):
            phi = random_assignment(rng, hp, target)
            if not rho_diagram_check(phi, 3):
                return PropertyResult(
                    "rho_diagram", False, samples,
                    {"k": k, "values": {n: repr(v) for n, v in phi.values.items()}},
                )
    return PropertyResult("rho_diagram", True, samples)


def check_milnor_complement(p: int, rng=None, samples: int = 0) -> PropertyResult:
    """J-basis membership and dual-span membership partition the monomial indices."""
    import itertools

    for k in range(0, 3):
        hi = min(p ** (k + 2), 30)
        for R in itertools.product(range(hi), repeat=3):
            e_choices = [()] if p == 2 else [(), (1,), (0, 1), (1, 1, 1)]
            for E in e_choices:
                in_j = in_J_basis(E, R, k, p)
                in_span = in_dual_span(DualSymbol(p, R, E), k)
                if in_j == in_span:
                    return PropertyResult(
                        "milnor_complement", False, samples,
                        {"k": k, "E": list(E), "R": list(R), "in_J": in_j, "in_span": in_span},
                    )
    return PropertyResult("milnor_complement", True, samples)


def check_partition_bijection(p: int = 2, rng=None, samples: int = 0) -> PropertyResult:
    """Appending the deficit is a bijection onto length->=2 compositions."""
    for m in range(2, 11):
        image = set()
        total = 0
        for k in range(1, m):
            for nu in enumerate_compositions(k):
                image.add(extend_F(nu, m).parts)
                total += 1
        expected = {c.parts for c in enumerate_compositions(m) if c.length >= 2}
        if image != expected or len(image) != total:
            return PropertyResult("partition_bijection", False, samples, {"m": m})
        if total != 2 ** (m - 1) - 1:
            return PropertyResult("partition_bijection", False, samples, {"m": m, "count": total})
    return PropertyResult("partition_bijection", True, samples)


SUITES = {
    "group_axioms": check_group_axioms,
    "inverse_oracles": check_inverse_oracles,
    "commutator_leading": check_commutator_leading,
    "filtration_bounds": check_filtration_bounds,
    "nested_commutators": check_nested_commutators,
    "subgroup_closure": check_subgroup_closure,
    "homomorphisms": check_homomorphisms,
    "hopf_axioms": lambda p, k, rng, samples: check_hopf_axioms(p, rng, samples),
    "hopf_ideals": lambda p, k, rng, samples: check_hopf_ideals(p, rng, samples),
    "primitivity": lambda p, k, rng, samples: check_primitivity(p, rng, samples),
    "theta_convolution": lambda p, k, rng, samples: check_theta_convolution(p, rng, samples),
    "rho_diagram": lambda p, k, rng, samples: check_rho_diagram(p, rng, samples),
    "milnor_complement": lambda p, k, rng, samples: check_milnor_complement(p, rng, samples),
    "partition_bijection": lambda p, k, rng, samples: check_partition_bijection(p, rng, samples),
}


def run_suites(p: int, k: int, seed: int, samples: int) -> list[PropertyResult]:
    results = []
    for name in sorted(SUITES):
        rng = random.Random(f"{seed}:{name}")
        results.append(SUITES[name](p, k, rng, samples))
    return results
