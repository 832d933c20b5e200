"""The rank-4 rotation model for actions trivial on a 4-torus cohomology ring.

An element acting on H^1 = R^4 by rotations of angles theta_1, theta_2
(rational multiples of 2*pi) determines the whole cohomology action.  The
model computes the Lefschetz number and equivariant signature twice -- from
the closed forms

    L = 4 (1 - cos t1)(1 - cos t2),      Sign = -4 sin t1 sin t2

and from the explicit matrices on the exterior algebra -- and checks the
lattice-integrality conditions 2(cos t1 + cos t2), 4 cos t1 cos t2 in Z.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from rational4 import cyclotomic as cy
from rational4.cyclotomic import CycNumber


class IntegralityViolation(ValueError):
    """The angle pair cannot arise from an automorphism of a rank-4 lattice."""


def _cos2pi(t: Fraction) -> CycNumber:
    t = Fraction(t)
    return cy.cos_pi(2 * t.numerator, t.denominator)


def _sin2pi(t: Fraction) -> CycNumber:
    t = Fraction(t)
    return cy.sin_pi(2 * t.numerator, t.denominator)


@dataclass
class TorusModel:
    theta1: Fraction
    theta2: Fraction
    lefschetz: int | None  # None when the angle pair is not lattice-integral
    sign: CycNumber
    trace_b1: CycNumber
    b2plus_fixed: int
    integrality_ok: bool
    trace_sum: CycNumber      # 2(cos t1 + cos t2)
    trace_product: CycNumber  # 4 cos t1 cos t2


def _matmul(a, b):
    n, m, k = len(a), len(b[0]), len(b)
    return [
        [sum((a[i][t] * b[t][j] for t in range(k)), cy.ZERO) for j in range(m)]
        for i in range(n)
    ]


def _minor(mat, rows, cols):
    sub = [[mat[r][c] for c in cols] for r in rows]
    if len(sub) == 2:
        return sub[0][0] * sub[1][1] - sub[0][1] * sub[1][0]
    if len(sub) == 3:
        return (
            sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1])
            - sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0])
            + sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0])
        )
    raise ValueError


def torus_model(theta1, theta2, check: bool = True) -> TorusModel:
    """Closed forms, exterior-algebra matrices, and integrality checks.

    Angles are fractions of a full turn (theta = 2*pi*t).  With
    ``check=True`` an IntegralityViolation is raised when
    2(cos t1 + cos t2) or 4 cos t1 cos t2 fails to be a rational integer.
    """
    t1, t2 = Fraction(theta1), Fraction(theta2)
    c1, s1 = _cos2pi(t1), _sin2pi(t1)
    c2, s2 = _cos2pi(t2), _sin2pi(t2)

    l_closed = 4 * (1 - c1) * (1 - c2)
    sign_closed = -4 * s1 * s2

    # rotation block matrix on H^1
    M = [
        [c1, -s1, cy.ZERO, cy.ZERO],
        [s1, c1, cy.ZERO, cy.ZERO],
        [cy.ZERO, cy.ZERO, c2, -s2],
        [cy.ZERO, cy.ZERO, s2, c2],
    ]
    tr1 = sum((M[i][i] for i in range(4)), cy.ZERO)

    pairs = list(itertools.combinations(range(4), 2))
    lam2 = [
        [_minor(M, p, q) for q in pairs]
        for p in pairs
    ]
    tr2 = sum((lam2[i][i] for i in range(len(pairs))), cy.ZERO)

    triples = list(itertools.combinations(range(4), 3))
    tr3 = sum((_minor(M, t, t) for t in triples), cy.ZERO)
    det = (
        _minor(M, (0, 1), (0, 1)) * _minor(M, (2, 3), (2, 3))
    )  # block diagonal determinant

    l_matrix = 1 - tr1 + tr2 - tr3 + det
    if l_matrix != l_closed:
        raise RuntimeError("Lefschetz closed form disagrees with the matrix model")
    lq = l_closed.to_rational()

    # self-dual / anti-self-dual bases inside Lambda^2:
    #   beta  = e12+e34, e13-e24, e14+e23;  beta' = e12-e34, e13+e24, e14-e23
    # with pair order (01),(02),(03),(12),(13),(23)
    basis = [
        [1, 0, 0, 0, 0, 1],   # beta1
        [0, 1, 0, 0, -1, 0],  # beta2
        [0, 0, 1, 1, 0, 0],   # beta3
        [1, 0, 0, 0, 0, -1],  # beta1'
        [0, 1, 0, 0, 1, 0],   # beta2'
        [0, 0, 1, -1, 0, 0],  # beta3'
    ]
    # transform: B = P^-1 (Lambda^2 M) P where columns of P are the basis
    P = [[Fraction(basis[j][i]) for j in range(6)] for i in range(6)]
    Pinv = _invert_rational(P)
    Pc = [[cy.CycNumber.from_rational(x) for x in row] for row in P]
    Pinvc = [[cy.CycNumber.from_rational(x) for x in row] for row in Pinv]
    B = _matmul(Pinvc, _matmul(lam2, Pc))
    for i in range(3):
        for j in range(3):
            if not B[i][3 + j].is_zero() or not B[3 + i][j].is_zero():
                raise RuntimeError("H2+/H2- blocks failed to split")
    tr_plus = B[0][0] + B[1][1] + B[2][2]
    tr_minus = B[3][3] + B[4][4] + B[5][5]
    sign_matrix = tr_plus - tr_minus
    if sign_matrix != sign_closed:
        raise RuntimeError("signature closed form disagrees with the matrix model")
    if tr_plus != 1 + 2 * _cos2pi(t1 + t2) or tr_minus != 1 + 2 * _cos2pi(t1 - t2):
        raise RuntimeError("H2+/H2- traces disagree with the rotation angles")

    trace_sum = 2 * (c1 + c2)
    trace_product = 4 * c1 * c2
    ok = all(
        (q := x.to_rational()) is not None and q.denominator == 1
        for x in (trace_sum, trace_product)
    )
    if ok and (lq is None or lq.denominator != 1):
        raise RuntimeError("integral traces must force an integral Lefschetz number")
    if check and not ok:
        raise IntegralityViolation(
            f"angle pair ({t1}, {t2}) violates lattice integrality: "
            f"2(c1+c2) = {trace_sum}, 4c1c2 = {trace_product}"
        )
    b2plus_fixed = 3 if (t1 + t2).denominator == 1 else 1
    return TorusModel(
        theta1=t1,
        theta2=t2,
        lefschetz=int(lq) if lq is not None and lq.denominator == 1 else None,
        sign=sign_closed,
        trace_b1=tr1,
        b2plus_fixed=b2plus_fixed,
        integrality_ok=ok,
        trace_sum=trace_sum,
        trace_product=trace_product,
    )


def _invert_rational(mat):
    n = len(mat)
    a = [row[:] + [Fraction(1) if i == j else Fraction(0) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(i for i in range(col, n) if a[i][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [row[n:] for row in a]


def integrality_conditions(t1, t2) -> bool:
    """Whether 2(cos t1 + cos t2) and 4 cos t1 cos t2 are rational integers."""
    c1, c2 = _cos2pi(Fraction(t1)), _cos2pi(Fraction(t2))
    for x in (2 * (c1 + c2), 4 * c1 * c2):
        q = x.to_rational()
        if q is None or q.denominator != 1:
            return False
    return True


def order_admissible_pairs(n: int) -> list[tuple[int, int]]:
    """Angle pairs (a, b)/n for a generator of an order-n action.

    Requirements: every nontrivial power keeps both angles nonzero (both
    numerators coprime to n) and the integrality conditions hold for the
    generator.  Pairs are normalised to a <= b.
    """
    out = []
    for a in range(1, n):
        if math.gcd(a, n) != 1:
            continue
        for b in range(a, n):
            if math.gcd(b, n) != 1:
                continue
            if integrality_conditions(Fraction(a, n), Fraction(b, n)):
                out.append((a, b))
    return out


def integrality_failure_orders(n_max: int, n_min: int = 2) -> list[int]:
    """Orders n with no admissible generator angle pair at all."""
    return [n for n in range(n_min, n_max + 1) if not order_admissible_pairs(n)]
