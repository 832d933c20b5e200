"""Hirzebruch-Jung resolution of the cyclic quotient singularity 1/m (1, b).

The exceptional set is a chain of rational curves with self-intersections
-c_1, ..., -c_k read off the negative-regular continued fraction of m/b.
Discrepancies a_i solve the adjunction system K.E_i = c_i - 2 against the
chain intersection matrix; the singularity is Du Val (all discrepancies
zero) exactly when b = m - 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class ResolutionData:
    m: int
    b: int
    chain: tuple[int, ...]
    discrepancies: tuple[Fraction, ...]
    delta_chi: int
    delta_b2minus: int
    delta_K2: Fraction

    def is_du_val(self) -> bool:
        return all(a == 0 for a in self.discrepancies)

    def to_json(self):
        return {
            "m": self.m,
            "b": self.b,
            "chain": list(self.chain),
            "discrepancies": [str(a) for a in self.discrepancies],
            "delta_chi": self.delta_chi,
            "delta_b2minus": self.delta_b2minus,
            "delta_K2": str(self.delta_K2),
        }


def hj_chain(m: int, b: int) -> tuple[int, ...]:
    """Coefficients of m/b = c_1 - 1/(c_2 - 1/(...)), all c_i >= 2."""
    chain = []
    x, y = m, b
    while y:
        c = -(-x // y)  # ceil
        chain.append(c)
        x, y = y, c * y - x
    return tuple(chain)


def hj_resolution(m: int, b: int) -> ResolutionData:
    if m < 2 or not 0 < b < m:
        raise ValueError("need 0 < b < m with m >= 2")
    if math.gcd(m, b) != 1:
        raise ValueError("need gcd(m, b) = 1")
    chain = hj_chain(m, b)
    assert all(c >= 2 for c in chain)
    k = len(chain)
    # solve sum_j a_j (E_j . E_i) = c_i - 2 with E_i.E_i = -c_i, E_i.E_{i+1} = 1
    mat = [[Fraction(0)] * k for _ in range(k)]
    for i in range(k):
        mat[i][i] = Fraction(-chain[i])
        if i + 1 < k:
            mat[i][i + 1] = Fraction(1)
            mat[i + 1][i] = Fraction(1)
    rhs = [Fraction(c - 2) for c in chain]
    disc = _solve(mat, rhs)
    for a in disc:
        if not -1 < a <= 0:
            raise RuntimeError("discrepancy out of (-1, 0]")
    delta_k2 = sum((a * (c - 2) for a, c in zip(disc, chain)), Fraction(0))
    return ResolutionData(
        m=m,
        b=b,
        chain=chain,
        discrepancies=tuple(disc),
        delta_chi=k,
        delta_b2minus=k,
        delta_K2=delta_k2,
    )


def _solve(mat, rhs):
    n = len(mat)
    a = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(i for i in range(col, n) if a[i][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [a[i][n] for i in range(n)]
