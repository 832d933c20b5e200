"""Enumeration of homology classes of symplectic spheres A^2 = -alpha.

A sphere class satisfies A^2 = -alpha and K.A = alpha - 2.  Writing
A = a*H - sum b_i E_i this becomes

    sum b_i   = 3a + alpha - 2,      sum b_i^2 = a^2 + alpha,

so for each a there are finitely many b-vectors.  Classes with a < 0 exist
only for alpha > 2|a| and have the rigid shape
a*H + (|a|+1)E_{j1} - E_{j2} - ... - E_{js}; they additionally force E_{j1}
to have the strictly largest area, a side condition consumers must add to
their area systems.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from rational4.lattice import (
    E,
    H,
    HClass,
    K,
    adjunction_genus,
    pair,
    reflect_cremona,
)


@dataclass(frozen=True)
class SphereClassQuery:
    n: int
    alpha: int
    a_min: int = 0
    a_max: int = 3
    include_negative: bool = False

    def __post_init__(self):
        if self.alpha < 1:
            raise ValueError("alpha must be positive")
        if self.a_max < self.a_min:
            raise ValueError("empty a-range")


class GenusMismatch(ValueError):
    pass


def surface_class_filter(x: HClass, g: int):
    """Necessary conditions for x to be a genus-g symplectic surface class.

    Returns (True, "") or (False, reason).  Raises GenusMismatch when g
    disagrees with the adjunction genus of x.
    """
    if adjunction_genus(x) != g:
        raise GenusMismatch(
            f"adjunction genus of {x} is {adjunction_genus(x)}, not {g}"
        )
    a, b = x.a, x.b
    if a > 0 and any(v < 0 for v in b):
        return False, "positive a-coefficient with a negative b-coefficient"
    lhs = (a - 1) * (a - 2)
    if lhs < 2 * g:
        return False, "(a-1)(a-2) < 2g"
    if lhs == 2 * g and any(v not in (0, 1) for v in b):
        return False, "(a-1)(a-2) = 2g forces every b in {0, 1}"
    if a < 0:
        if g != 0:
            return False, "negative a-coefficient with positive genus"
        sq = x.square()
        if sq >= -2:
            return False, "negative a-coefficient needs self-intersection < -2"
        alpha = -sq
        if 2 * (-a) >= alpha:
            return False, "2|a| >= alpha"
        heads = [v for v in b if v == a - 1]  # b_{j1} = -(|a|+1) = a - 1
        others = [v for v in b if v != a - 1]
        ones = sum(1 for v in others if v == 1)
        if len(heads) != 1 or any(v not in (0, 1) for v in others):
            return False, "not of the rigid negative-a shape"
        if ones != alpha - 2 * (-a) - 1:
            return False, "wrong tail length for the rigid negative-a shape"
    return True, ""


def _b_vectors(n, total, total_sq, lo, hi):
    out = []
    vec = []

    def rec(i, s, sq):
        rem = n - i
        if rem == 0:
            if s == 0 and sq == 0:
                out.append(tuple(vec))
            return
        if s > rem * hi or s < rem * lo:
            return
        if sq < 0 or sq > rem * max(lo * lo, hi * hi):
            return
        for v in range(lo, hi + 1):
            vec.append(v)
            rec(i + 1, s - v, sq - v * v)
            vec.pop()

    rec(0, total, total_sq)
    return out


def enumerate_sphere_classes(q: SphereClassQuery) -> list[HClass]:
    """All sphere classes with the query's alpha and a-range, sorted."""
    out: set[HClass] = set()
    for a in range(q.a_min, q.a_max + 1):
        if a < 0:
            if not q.include_negative:
                continue
            for x, _ in negative_sphere_forms(q.n, q.alpha):
                if x.a == a:
                    out.add(x)
            continue
        total = 3 * a + q.alpha - 2
        total_sq = a * a + q.alpha
        if a > 0:
            lo, hi = 0, max(1, a - 1)
        else:
            bound = math.isqrt(total_sq)
            lo, hi = -bound, bound
        for b in _b_vectors(q.n, total, total_sq, lo, hi):
            x = HClass(a, b)
            ok, _ = surface_class_filter(x, 0)
            if ok:
                out.add(x)
    return sorted(out)


def observation_forms(n: int, alpha: int, a: int) -> list[HClass]:
    """The closed-form classes a*H - (a-1)E_{j1} - E_{j2} - ... - E_{j_{2a+alpha}}.

    These are exactly the sphere classes with 0 <= a <= 3 (and, under the
    area condition, with any a).  Returned sorted and deduplicated.
    """
    if a < 0:
        raise ValueError("closed forms cover a >= 0 only")
    out: set[HClass] = set()
    head = a - 1
    tail_len = 2 * a + alpha - 1
    idx = range(1, n + 1)
    if head == 0:
        if tail_len <= n:
            for tail in itertools.combinations(idx, tail_len):
                b = [0] * n
                for t in tail:
                    b[t - 1] = 1
                out.add(HClass(a, tuple(b)))
    else:
        if 2 * a + alpha <= n:
            for j1 in idx:
                rest = [i for i in idx if i != j1]
                for tail in itertools.combinations(rest, tail_len):
                    b = [0] * n
                    b[j1 - 1] = head
                    for t in tail:
                        b[t - 1] = 1
                    out.add(HClass(a, tuple(b)))
    return sorted(out)


def area_bounded_forms(n: int, alpha: int) -> list[HClass]:
    """Candidate pool of (-alpha)-sphere classes under the small-area regime.

    Under the area condition w(A) < -K.w every class takes the closed form
    with 0 <= a <= (N - alpha)/2; this returns that full pool, sorted.
    """
    if alpha not in (2, 3):
        raise ValueError("the area-bounded catalogue covers alpha in {2, 3}")
    out: list[HClass] = []
    for a in range(0, (n - alpha) // 2 + 1):
        out.extend(observation_forms(n, alpha, a))
    for x in out:
        assert x.square() == -alpha and pair(K(n), x) == alpha - 2
    return sorted(out)


def negative_sphere_forms(n: int, alpha: int):
    """Rigid classes with a < 0: a*H + (|a|+1)E_{j1} - E_{j2} - ... - E_{js}.

    Returns a list of (class, j1) pairs; j1 is the index whose area the
    class forces to be strictly largest (an area-system side condition).
    """
    out = []
    a = -1
    while 2 * (-a) < alpha:
        tail_len = alpha - 2 * (-a) - 1
        for j1 in range(1, n + 1):
            rest = [i for i in range(1, n + 1) if i != j1]
            if tail_len > len(rest):
                continue
            for tail in itertools.combinations(rest, tail_len):
                b = [0] * n
                b[j1 - 1] = a - 1
                for t in tail:
                    b[t - 1] = 1
                x = HClass(a, tuple(b))
                assert x.square() == -alpha and pair(K(n), x) == alpha - 2
                out.append((x, j1))
        a -= 1
    return sorted(out)


def reduce_by_cremona(x: HClass):
    """Repeatedly reflect at the three largest positive b-coefficients.

    Applies R_ijk while a > 3 and some positive triple has b_i+b_j+b_k > a.
    Preserves A^2 and K.A; returns (terminal class, list of (i,j,k) used).
    """
    trail: list[tuple[int, int, int]] = []
    while x.a > 3:
        pos = sorted(
            ((v, i + 1) for i, v in enumerate(x.b) if v > 0),
            key=lambda t: (-t[0], t[1]),
        )
        if len(pos) < 3:
            break
        (v1, i), (v2, j), (v3, k) = pos[:3]
        if v1 + v2 + v3 <= x.a:
            break
        i, j, k = sorted((i, j, k))
        x = reflect_cremona(x, i, j, k)
        trail.append((i, j, k))
    return x, trail


def zero_square_forms(n: int) -> list[HClass]:
    """All B with B^2 = K.B = 0 and a = 3, i.e. 3H minus nine distinct E's."""
    if n < 9:
        raise ValueError("needs N >= 9")
    out = []
    for combo in itertools.combinations(range(1, n + 1), 9):
        b = [0] * n
        for t in combo:
            b[t - 1] = 1
        out.append(HClass(3, tuple(b)))
    return sorted(out)


def zero_square_classes(n: int, a_value: int) -> list[HClass]:
    """All nonzero B with B^2 = K.B = 0 and the given a-coefficient."""
    total = 3 * a_value
    total_sq = a_value * a_value
    bound = math.isqrt(total_sq) if total_sq else 0
    out = [
        HClass(a_value, b)
        for b in _b_vectors(n, total, total_sq, -bound, bound)
        if any(b) or a_value != 0
    ]
    return sorted(out)


def zero_square_scan(n: int, a_lo: int, a_hi: int, b_bound: int):
    """Brute-force scan for nonzero B^2 = K.B = 0 classes, by a-coefficient.

    Returns {a: count of solutions with all |b_i| <= b_bound}.
    """
    found = {}
    for a in range(a_lo, a_hi + 1):
        sols = _b_vectors(n, 3 * a, a * a, -b_bound, b_bound)
        sols = [b for b in sols if a != 0 or any(b)]
        if sols:
            found[a] = len(sols)
    return found


# ---------------------------------------------------------------------------
# Pattern-level enumeration (orbit representatives of the b-multiset)


def coefficient_patterns(n: int, alpha: int, a: int):
    """Sorted-descending b-multisets of sphere classes with a > 3 allowed.

    Yields (pattern, count) where count is the number of labelled classes
    at lattice size n realising the pattern.  Agrees with the explicit
    enumeration; used where the labelled class set is large.
    """
    if a <= 0:
        raise ValueError("pattern enumeration is for positive a")
    total = 3 * a + alpha - 2
    total_sq = a * a + alpha
    hi = max(1, a - 1)
    patterns: list[tuple[int, ...]] = []

    def rec(prefix, s, sq, maxv, slots):
        if s == 0 and sq == 0:
            patterns.append(tuple(prefix))
            return
        if slots == 0 or s < 0 or sq < 0:
            return
        for v in range(min(maxv, s, hi), 0, -1):
            if v * v > sq:
                continue
            prefix.append(v)
            rec(prefix, s - v, sq - v * v, v, slots - 1)
            prefix.pop()

    rec([], total, total_sq, hi, n)
    out = []
    for p in patterns:
        mult = {}
        for v in p:
            mult[v] = mult.get(v, 0) + 1
        count = 1
        rem = n
        for v in sorted(mult):
            count *= math.comb(rem, mult[v])
            rem -= mult[v]
        out.append((p, count))
    return out


def min_support_size(n: int, alpha: int, a: int):
    """(min #nonzero b_i, total class count) over all sphere classes.

    Computed at pattern level; returns (None, 0) when no class exists.
    """
    best = None
    total = 0
    for p, count in coefficient_patterns(n, alpha, a):
        total += count
        if best is None or len(p) < best:
            best = len(p)
    return best, total
