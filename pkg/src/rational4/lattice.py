"""The intersection lattice of X = CP^2 # N CP^2-bar.

Classes are written in a fixed basis H, E_1, ..., E_N with pairing
diag(+1, -1, ..., -1) and stored as ``a*H - sum_i b_i E_i``, i.e. the pair
``(a, (b_1, ..., b_N))``.  The canonical class is K = -3H + E_1 + ... + E_N.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, order=True)
class HClass:
    """An integral class a*H - sum_i b_i E_i.

    Ordering is lexicographic on (a, b_1, ..., b_N); this is the total order
    used everywhere for canonical forms and deterministic output.
    """

    a: int
    b: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.b)

    def __add__(self, other: "HClass") -> "HClass":
        _check_same(self, other)
        return HClass(self.a + other.a, tuple(x + y for x, y in zip(self.b, other.b)))

    def __sub__(self, other: "HClass") -> "HClass":
        _check_same(self, other)
        return HClass(self.a - other.a, tuple(x - y for x, y in zip(self.b, other.b)))

    def __neg__(self) -> "HClass":
        return HClass(-self.a, tuple(-x for x in self.b))

    def scale(self, k: int) -> "HClass":
        return HClass(k * self.a, tuple(k * x for x in self.b))

    def dot(self, other: "HClass") -> int:
        return pair(self, other)

    def square(self) -> int:
        return pair(self, self)

    def support(self) -> tuple[int, ...]:
        """1-based indices i with b_i != 0."""
        return tuple(i + 1 for i, x in enumerate(self.b) if x != 0)

    def is_zero(self) -> bool:
        return self.a == 0 and not any(self.b)

    def to_json(self) -> list[int]:
        return [self.a, *self.b]

    @staticmethod
    def from_json(arr) -> "HClass":
        arr = [int(x) for x in arr]
        return HClass(arr[0], tuple(arr[1:]))

    def __str__(self) -> str:
        terms = []
        if self.a != 0:
            terms.append(_coef(self.a, "H"))
        for i, x in enumerate(self.b):
            if x != 0:
                terms.append(_coef(-x, f"E{i + 1}"))
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out


def _coef(c: int, sym: str) -> str:
    if c == 1:
        return sym
    if c == -1:
        return "-" + sym
    return f"{c}{sym}"


def _check_same(x: HClass, y: HClass) -> None:
    if x.n != y.n:
        raise ValueError(f"classes live in different lattices (N={x.n} vs N={y.n})")


@dataclass(frozen=True)
class BlowupLattice:
    """The lattice H^2(CP^2 # n CP^2-bar) with its standard basis."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one blow-up")

    def H(self) -> HClass:
        return HClass(1, (0,) * self.n)

    def E(self, k: int) -> HClass:
        if not 1 <= k <= self.n:
            raise IndexError(f"E_{k} out of range for N={self.n}")
        return HClass(0, tuple(-1 if i == k - 1 else 0 for i in range(self.n)))

    def K(self) -> HClass:
        # -3H + E_1 + ... + E_N
        return HClass(-3, (-1,) * self.n)

    def zero(self) -> HClass:
        return HClass(0, (0,) * self.n)

    def cls(self, a: int, *b: int) -> HClass:
        if len(b) != self.n:
            raise ValueError("wrong number of E-coefficients")
        return HClass(a, tuple(b))


def H(n: int) -> HClass:
    return BlowupLattice(n).H()


def E(n: int, k: int) -> HClass:
    return BlowupLattice(n).E(k)


def K(n: int) -> HClass:
    return BlowupLattice(n).K()


def pair(x: HClass, y: HClass) -> int:
    """Intersection pairing a a' - sum_i b_i b'_i."""
    _check_same(x, y)
    return x.a * y.a - sum(p * q for p, q in zip(x.b, y.b))


def adjunction_genus(x: HClass) -> Fraction:
    """(A^2 + K.A)/2 + 1."""
    return Fraction(pair(x, x) + pair(K(x.n), x), 2) + 1


def reflect_exceptional(x: HClass, k: int) -> HClass:
    """Reflection in E_k: A -> A + 2(A.E_k)E_k.  Flips the sign of b_k."""
    if not 1 <= k <= x.n:
        raise IndexError(f"E_{k} out of range for N={x.n}")
    ek = E(x.n, k)
    return x + ek.scale(2 * pair(x, ek))


def reflect_cremona(x: HClass, i: int, j: int, k: int) -> HClass:
    """Reflection in H_ijk = H - E_i - E_j - E_k: A -> A + (A.H_ijk) H_ijk."""
    if len({i, j, k}) != 3:
        raise ValueError("indices must be distinct")
    h = H(x.n) - E(x.n, i) - E(x.n, j) - E(x.n, k)
    return x + h.scale(pair(x, h))


# ---------------------------------------------------------------------------
# Canonical forms of class tuples under index permutation


def canonical_tuple(classes, marks=None) -> tuple[HClass, ...]:
    """Lexicographically least representative of a tuple of classes.

    The group acting is S_N on the exceptional indices (the same permutation
    applied to every member) composed with arbitrary reordering of the tuple.
    Minimisation is over the flattened sequence of class keys
    (a, b_1, ..., b_N)[, mark], rows emitted in sorted order.

    ``marks`` optionally attaches an integer to each class (e.g. to single
    out a distinguished member); marked tuples canonicalise jointly.

    The implementation refines an ordered partition of the columns row by
    row, branching only on genuinely tied choices, which is equivalent to
    branch-and-bound over all index permutations.
    """
    classes = list(classes)
    if not classes:
        return ()
    n = classes[0].n
    for c in classes:
        if c.n != n:
            raise ValueError("classes live in different lattices")
    if marks is None:
        marks = [0] * len(classes)
    rows = [(c.a, c.b, int(m)) for c, m in zip(classes, marks)]

    start_part = (tuple(range(n)),)
    branches = {(start_part, frozenset(range(len(rows))))}
    out: list[tuple[int, tuple[int, ...], int]] = []
    for _ in range(len(rows)):
        best_key = None
        best_states = set()
        for part, rem in branches:
            for r in rem:
                a, b, m = rows[r]
                vals: list[int] = []
                newpart: list[tuple[int, ...]] = []
                for block in part:
                    groups: dict[int, list[int]] = {}
                    for c in block:
                        groups.setdefault(b[c], []).append(c)
                    for v in sorted(groups):
                        vals.extend([v] * len(groups[v]))
                        newpart.append(tuple(groups[v]))
                key = (a, tuple(vals), m)
                if best_key is None or key < best_key:
                    best_key = key
                    best_states = {(tuple(newpart), rem - {r})}
                elif key == best_key:
                    best_states.add((tuple(newpart), rem - {r}))
        out.append(best_key)
        branches = best_states
    canon = tuple(HClass(a, b) for a, b, _ in out)
    return canon


def canonical_tuple_with_marks(classes, marks):
    """As canonical_tuple but returns (classes, marks) after minimisation."""
    classes = list(classes)
    if not classes:
        return (), ()
    n = classes[0].n
    rows = [(c.a, c.b, int(m)) for c, m in zip(classes, marks)]
    start_part = (tuple(range(n)),)
    branches = {(start_part, frozenset(range(len(rows))))}
    out = []
    for _ in range(len(rows)):
        best_key = None
        best_states = set()
        for part, rem in branches:
            for r in rem:
                a, b, m = rows[r]
                vals: list[int] = []
                newpart: list[tuple[int, ...]] = []
                for block in part:
                    groups: dict[int, list[int]] = {}
                    for c in block:
                        groups.setdefault(b[c], []).append(c)
                    for v in sorted(groups):
                        vals.extend([v] * len(groups[v]))
                        newpart.append(tuple(groups[v]))
                key = (a, tuple(vals), m)
                if best_key is None or key < best_key:
                    best_key = key
                    best_states = {(tuple(newpart), rem - {r})}
                elif key == best_key:
                    best_states.add((tuple(newpart), rem - {r}))
        out.append(best_key)
        branches = best_states
    return tuple(HClass(a, b) for a, b, _ in out), tuple(m for _, _, m in out)


# ---------------------------------------------------------------------------
# (-2)-classes orthogonal to K, modulo K (N = 9 only)


def minus2_classes_mod_K(n: int = 9) -> list[HClass]:
    """All A with A^2 = -2, K.A = 0 at N=9, one representative per K-orbit.

    Translating by K (which satisfies K^2 = K.A = 0) changes the
    a-coefficient by multiples of 3, so every orbit has a unique
    representative with a in {-1, 0, 1}.  The enumeration window
    a in [-4, 4] is therefore generously complete; representatives are
    deduplicated by reducing a into {-1, 0, 1}.
    """
    if n != 9:
        raise ValueError("the K-orthogonal (-2)-class catalogue is specific to N=9")
    reps: set[HClass] = set()
    for a in range(-4, 5):
        target_sum = 3 * a          # K.A = 0  <=>  sum b_i = 3a
        target_sq = a * a + 2       # A^2 = -2 <=>  sum b_i^2 = a^2 + 2
        for b in _vectors_with_sum_sq(n, target_sum, target_sq, -4, 4):
            r = (a + 1) % 3 - 1     # reduce a into {-1, 0, 1}
            t = (a - r) // 3        # A + tK shifts the a-coefficient by -3t
            rep = HClass(a, b) + K(n).scale(t)
            assert rep.a == r
            reps.add(rep)
    return sorted(reps)


def _vectors_with_sum_sq(n, total, total_sq, lo, hi):
    """Integer vectors of length n with given sum and sum of squares."""
    out: list[tuple[int, ...]] = []
    vec: list[int] = []

    def rec(i, s, sq):
        if sq < 0:
            return
        rem = n - i
        if rem == 0:
            if s == 0 and sq == 0:
                out.append(tuple(vec))
            return
        # bounds: each remaining entry in [lo, hi], squares nonnegative
        if s > rem * hi or s < rem * lo:
            return
        if sq > rem * max(lo * lo, hi * hi):
            return
        for v in range(lo, hi + 1):
            vec.append(v)
            rec(i + 1, s - v, sq - v * v)
            vec.pop()

    rec(0, total, total_sq)
    return out


# ---------------------------------------------------------------------------
# Exact linear algebra over Q for root-system certificates


def gram_matrix(classes) -> list[list[int]]:
    return [[pair(x, y) for y in classes] for x in classes]


def exact_rank(rows) -> int:
    """Rank over Q of a list of integer/Fraction rows."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        rank += 1
        if r == len(m):
            break
    return rank


def negative_definite_rank(classes) -> tuple[int, bool]:
    """Rank of the pairing on span(classes) and whether it is negative
    definite there (i.e. negative semidefinite on the span with radical of
    dimension span-rank minus pairing-rank equal to zero... the returned
    flag asserts: x != 0 in span with x.x >= 0 implies x in the radical)."""
    # choose a basis of the span
    basis: list[HClass] = []
    rows: list[list[int]] = []
    for c in classes:
        cand = rows + [[c.a, *c.b]]
        if exact_rank(cand) > len(rows):
            basis.append(c)
            rows = cand
    g = [[Fraction(pair(x, y)) for y in basis] for x in basis]
    k = len(basis)
    prank = exact_rank(g)
    # LDL^T with symmetric pivoting; negative semidefinite iff all pivots < 0
    g = [row[:] for row in g]
    idx = list(range(k))
    neg_ok = True
    for step in range(prank):
        piv = next((i for i in range(step, k) if g[idx[i]][idx[i]] != 0), None)
        if piv is None:
            # nonzero off-diagonal with zero diagonal => indefinite
            nonzero = any(
                g[idx[i]][idx[j]] != 0
                for i in range(step, k)
                for j in range(step, k)
            )
            if nonzero:
                neg_ok = False
            break
        idx[step], idx[piv] = idx[piv], idx[step]
        d = g[idx[step]][idx[step]]
        if d >= 0:
            neg_ok = False
        for i in range(step + 1, k):
            f = g[idx[i]][idx[step]] / d
            for j in range(step, k):
                g[idx[i]][idx[j]] -= f * g[idx[step]][idx[j]]
    return prank, neg_ok
