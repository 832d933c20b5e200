"""Lefschetz, signature and Spin computations on fixed-point profiles.

All values are exact: signature and Spin numbers live in cyclotomic fields,
signature defects and the equivariant multiplicities d_k are rational.
For a profile P describing Fix(g) with local weights as in
:mod:`rational4.gindex.profiles`,

    L(g)    = sum chi(Y_i) + #points,
    Sign(g) = -sum cot(a_j pi/m) cot(b_j pi/m) + sum csc^2(c_i pi/m) Y_i^2,
    Spin(g) = -sum (-1)^{k_j} csc(a_j pi/p) csc(b_j pi/p) / 4
              + sum (-1)^{k_i} Y_i^2 csc(c_i pi/p) cot(c_i pi/p) / 4,

with the parities k determined by k*p = 2r + a + b (0 <= r < p) at points
and k*p = 2r + c (0 < r < p) along surfaces.
"""

from __future__ import annotations

import math
from fractions import Fraction

from rational4 import cyclotomic as cy
from rational4.cyclotomic import CycNumber
from rational4.gindex.profiles import FixedPointProfile, FixedSurface, IsolatedPoint


class InconsistentSpin(ValueError):
    """The Spin values are not realised by integer multiplicities d_k."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


def lefschetz_fix(profile: FixedPointProfile) -> int:
    return sum(s.euler() for s in profile.surfaces) + len(profile.points)


def signature_number(profile: FixedPointProfile, g_exponent: int = 1) -> CycNumber:
    """Exact Sign(g^e, M) from the local data of the profile.

    The profile must list exactly the fixed-point set of g^e; a weight
    hitting 0 mod its order signals that the member is not isolated/fixed
    for that element and raises.
    """
    total = cy.ZERO
    for pt in profile.points:
        q = pt.power(g_exponent)
        a, b = q.weights
        total = total - cy.cot(a, q.order) * cy.cot(b, q.order)
    for s in profile.surfaces:
        t = s.power(g_exponent)
        c = cy.csc(t.normal_weight, t.order)
        total = total + c * c * t.self_int
    return total


def signature_defect(member, p: int) -> Fraction:
    """The rational signature defect of one fixed-point-set member at prime p."""
    if not _is_prime(p):
        raise ValueError("defects are defined for prime group order")
    if isinstance(member, FixedSurface):
        if member.order != p:
            raise ValueError("surface isotropy must equal p")
        return Fraction((p * p - 1) * member.self_int, 3)
    if isinstance(member, IsolatedPoint):
        if member.order != p:
            raise ValueError("point isotropy must equal p")
        a, b = member.weights
        total = cy.ZERO
        for t in range(1, p):
            la = CycNumber.zeta(p, (t * a) % p)
            lb = CycNumber.zeta(p, (t * b) % p)
            total = total + ((1 + la) * (1 + lb)) / ((1 - la) * (1 - lb))
        q = total.to_rational()
        if q is None:
            raise RuntimeError("internal error: Galois-invariant defect not rational")
        return q
    raise TypeError("member must be an IsolatedPoint or FixedSurface")


def weak_checks(p: int, chi_m: int, sign_m: int, profile: FixedPointProfile):
    """Quotient Euler number and signature from the summed index theorems.

    Returns (chi_quotient, sign_quotient, consistent) where consistency
    means chi(M/G) came out an integer.  Requires every member to have
    isotropy exactly p.
    """
    if not _is_prime(p):
        raise ValueError("the weak index theorems need prime order")
    for m in list(profile.points) + list(profile.surfaces):
        if m.order != p:
            raise ValueError("all isotropy orders must equal p")
    chi_q = Fraction(chi_m + (p - 1) * lefschetz_fix(profile), p)
    defects = sum(
        (signature_defect(m, p) for m in (*profile.points, *profile.surfaces)),
        Fraction(0),
    )
    sign_q = Fraction(sign_m) / p + defects / p
    return chi_q, sign_q, chi_q.denominator == 1 and sign_q.denominator == 1


def spin_k_point(a: int, b: int, p: int) -> int:
    """The parity exponent k with k*p = 2r + a + b, 0 <= r < p."""
    for k in range(0, 4):
        d = k * p - (a + b)
        if d % 2 == 0 and 0 <= d < 2 * p:
            return k
    raise ValueError(f"no parity exponent for weights ({a},{b}) mod {p}")


def spin_k_surface(c: int, p: int) -> int:
    """The parity exponent k with k*p = 2r + c, 0 < r < p."""
    for k in range(0, 4):
        d = k * p - c
        if d % 2 == 0 and 0 < d < 2 * p:
            return k
    raise ValueError(f"no parity exponent for normal weight {c} mod {p}")


def spin_number(profile: FixedPointProfile, p: int, g_exponent: int = 1) -> CycNumber:
    """Exact Spin(g^e, M) for a spin action of odd prime order p."""
    if not _is_prime(p) or p == 2:
        raise ValueError("the Spin number formula needs odd prime order")
    total = cy.ZERO
    quarter = Fraction(1, 4)
    for pt in profile.points:
        if pt.order != p:
            raise ValueError("all isotropy orders must equal p")
        q = pt.power(g_exponent)
        a, b = q.weights
        k = spin_k_point(a, b, p)
        term = cy.csc(a, p) * cy.csc(b, p) * quarter
        total = total - term if k % 2 == 0 else total + term
    for s in profile.surfaces:
        if s.order != p:
            raise ValueError("all isotropy orders must equal p")
        t = s.power(g_exponent)
        c = t.normal_weight
        k = spin_k_surface(c, p)
        term = cy.csc(c, p) * cy.cot(c, p) * Fraction(t.self_int, 4)
        total = total + term if k % 2 == 0 else total - term
    return total


def spin_coefficients(values: dict[int, CycNumber], p: int, index_total) -> list[int]:
    """Solve Spin(g^e) = sum_k d_k zeta_p^{ke} for integer d_0..d_{p-1}.

    ``values`` maps every nonzero exponent e to the exact Spin number;
    the e = 0 slot is the total index.  Raises InconsistentSpin when the
    solution is non-integral or violates d_k = d_{p-k}.
    """
    if not _is_prime(p) or p == 2:
        raise ValueError("equivariant Spin multiplicities need odd prime order")
    if set(values) != set(range(1, p)):
        raise ValueError("need Spin values for every nonzero exponent")
    index_total = Fraction(index_total)
    ds: list[int] = []
    for j in range(p):
        acc = cy.CycNumber.from_rational(index_total)
        for e in range(1, p):
            acc = acc + values[e] * CycNumber.zeta(p, (-j * e) % p)
        q = (acc / p).to_rational()
        if q is None or q.denominator != 1:
            raise InconsistentSpin(
                f"multiplicity d_{j} is not an integer (got {q if q is not None else 'irrational'})"
            )
        ds.append(int(q))
    for k in range(1, p):
        if ds[k] != ds[p - k]:
            raise InconsistentSpin("multiplicities violate d_k = d_(p-k)")
    if sum(ds) != index_total:
        raise InconsistentSpin("multiplicities do not sum to the index")
    return ds
