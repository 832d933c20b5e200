"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are stored as rational-coefficient polynomials in the power basis
1, z, ..., z^(phi(m)-1) of Q[x]/Phi_m(x), where z = exp(2*pi*i/m).  Mixed
conductors lift lazily to the lcm; nothing ever descends, so equality and
rationality tests read off the unique normal form directly.

The trigonometric constructors return exact values of cot, csc, cos and sin
at rational multiples of pi, including odd half-multiples, via

    cot(k*pi/m) = i (z_m^k + 1) / (z_m^k - 1)          in Q(zeta_lcm(4,m))
    csc(k*pi/m) = 2i z_{2m}^k / (z_m^k - 1)            in Q(zeta_lcm(4,2m))
    cos(k*pi/m), sin(k*pi/m) via z_{2m}^{+-k}/2.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Poly = tuple[Fraction, ...]


def _trim(p) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _poly_add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return _trim(
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)
    )


def _poly_scale(p: Poly, c: Fraction) -> Poly:
    if c == 0:
        return ()
    return tuple(x * c for x in p)


def _poly_mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x == 0:
            continue
        for j, y in enumerate(q):
            if y != 0:
                out[i + j] += x * y
    return _trim(out)


def _poly_divmod(p: Poly, d: Poly) -> tuple[Poly, Poly]:
    """Division of p by monic d."""
    assert d and d[-1] == 1
    r = list(p)
    q = [Fraction(0)] * max(0, len(p) - len(d) + 1)
    while len(r) >= len(d):
        c = r[-1]
        if c != 0:
            deg = len(r) - len(d)
            q[deg] = c
            for i, y in enumerate(d):
                r[deg + i] -= c * y
        r.pop()
    return _trim(q), _trim(r)


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> Poly:
    """The m-th cyclotomic polynomial, monic with integer coefficients."""
    if m < 1:
        raise ValueError("conductor must be positive")
    # x^m - 1 divided by the product of Phi_d over proper divisors d of m
    num: Poly = tuple(
        Fraction(-1 if i == 0 else (1 if i == m else 0)) for i in range(m + 1)
    )
    for d in range(1, m):
        if m % d == 0:
            num, rem = _poly_divmod(num, cyclotomic_poly(d))
            assert not rem
    return num


def euler_phi(m: int) -> int:
    return len(cyclotomic_poly(m)) - 1


@dataclass(frozen=True)
class CycNumber:
    """An element of Q(zeta_m) in the power basis modulo Phi_m."""

    m: int
    coeffs: Poly  # length <= phi(m), trailing zeros trimmed

    # -- construction ------------------------------------------------------

    @staticmethod
    def from_rational(x, m: int = 1) -> "CycNumber":
        x = Fraction(x)
        return CycNumber(m, _trim([x]))

    @staticmethod
    def zeta(m: int, k: int = 1) -> "CycNumber":
        """zeta_m^k."""
        k %= m
        mono = [Fraction(0)] * k + [Fraction(1)]
        _, r = _poly_divmod(tuple(mono), cyclotomic_poly(m))
        return CycNumber(m, r)

    # -- conductor handling ------------------------------------------------

    def lift(self, bigm: int) -> "CycNumber":
        if bigm == self.m:
            return self
        if bigm % self.m != 0:
            raise ValueError("can only lift to a multiple of the conductor")
        step = bigm // self.m
        phi = cyclotomic_poly(bigm)
        acc: Poly = ()
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = [Fraction(0)] * (j * step) + [Fraction(1)]
            _, r = _poly_divmod(tuple(mono), phi)
            acc = _poly_add(acc, _poly_scale(r, c))
        return CycNumber(bigm, acc)

    @staticmethod
    def _common(x: "CycNumber", y: "CycNumber"):
        m = math.lcm(x.m, y.m)
        return x.lift(m), y.lift(m)

    # -- field operations ----------------------------------------------

    def __add__(self, other) -> "CycNumber":
        other = _as_cyc(other)
        a, b = CycNumber._common(self, other)
        return CycNumber(a.m, _poly_add(a.coeffs, b.coeffs))

    __radd__ = __add__

    def __neg__(self) -> "CycNumber":
        return CycNumber(self.m, _poly_scale(self.coeffs, Fraction(-1)))

    def __sub__(self, other) -> "CycNumber":
        return self + (-_as_cyc(other))

    def __rsub__(self, other) -> "CycNumber":
        return _as_cyc(other) + (-self)

    def __mul__(self, other) -> "CycNumber":
        other = _as_cyc(other)
        a, b = CycNumber._common(self, other)
        _, r = _poly_divmod(_poly_mul(a.coeffs, b.coeffs), cyclotomic_poly(a.m))
        return CycNumber(a.m, r)

    __rmul__ = __mul__

    def inv(self) -> "CycNumber":
        """Multiplicative inverse via extended gcd with Phi_m."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        # extended Euclid in Q[x]: s*self + t*Phi = gcd (a unit)
        r0, r1 = cyclotomic_poly(self.m), self.coeffs
        s0, s1 = (), (Fraction(1),)
        while r1:
            # make r1 monic for division
            lead = r1[-1]
            r1m = _poly_scale(r1, 1 / lead)
            q, r = _poly_divmod(r0, r1m)
            q = _poly_scale(q, 1 / lead)
            r0, r1 = r1, _trim(r)
            s0, s1 = s1, _poly_add(s0, _poly_scale(_poly_mul(q, s1), Fraction(-1)))
        # r0 = gcd = nonzero constant (Phi_m squarefree, self != 0)
        assert len(r0) == 1
        out = _poly_scale(s0, 1 / r0[0])
        _, r = _poly_divmod(out, cyclotomic_poly(self.m))
        return CycNumber(self.m, r)

    def __truediv__(self, other) -> "CycNumber":
        return self * _as_cyc(other).inv()

    def __rtruediv__(self, other) -> "CycNumber":
        return _as_cyc(other) * self.inv()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycNumber.from_rational(other)
        if not isinstance(other, CycNumber):
            return NotImplemented
        a, b = CycNumber._common(self, other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        # hash stable under lifting only for rationals; hash on value when
        # rational, else on the (conductor, coeffs) pair
        q = self.to_rational()
        if q is not None:
            return hash(q)
        return hash((self.m, self.coeffs))

    # -- predicates and conversions -----------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def conj(self) -> "CycNumber":
        """Complex conjugation zeta -> zeta^(-1)."""
        phi = cyclotomic_poly(self.m)
        acc: Poly = ()
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = [Fraction(0)] * ((self.m - j) % self.m) + [Fraction(1)]
            _, r = _poly_divmod(tuple(mono), phi)
            acc = _poly_add(acc, _poly_scale(r, c))
        return CycNumber(self.m, acc)

    def galois(self, t: int) -> "CycNumber":
        """The Galois twist zeta -> zeta^t (t coprime to the conductor)."""
        if math.gcd(t, self.m) != 1:
            raise ValueError("Galois exponent must be coprime to the conductor")
        phi = cyclotomic_poly(self.m)
        acc: Poly = ()
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = [Fraction(0)] * ((j * t) % self.m) + [Fraction(1)]
            _, r = _poly_divmod(tuple(mono), phi)
            acc = _poly_add(acc, _poly_scale(r, c))
        return CycNumber(self.m, acc)

    def is_real(self) -> bool:
        return self.conj() == self

    def to_rational(self):
        """The Fraction value if the number is rational, else None."""
        if not self.coeffs:
            return Fraction(0)
        if len(self.coeffs) == 1:
            return self.coeffs[0]
        return None

    def complex_eval(self) -> complex:
        """Float embedding at zeta = exp(2*pi*i/m), for diagnostics only."""
        z = cmath.exp(2j * cmath.pi / self.m)
        val = 0j
        for c in reversed(self.coeffs):
            val = val * z + complex(c)
        return val

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                parts.append(str(c))
            else:
                mono = f"z{self.m}" if j == 1 else f"z{self.m}^{j}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append("-" + mono)
                else:
                    parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _as_cyc(x) -> CycNumber:
    if isinstance(x, CycNumber):
        return x
    return CycNumber.from_rational(x)


ZERO = CycNumber.from_rational(0)
ONE = CycNumber.from_rational(1)


def cyc_arith(op: str, x: CycNumber, y: CycNumber | None = None) -> CycNumber:
    """Dispatch form of the field operations (add/sub/mul/inv)."""
    if op == "inv":
        return x.inv()
    if y is None:
        raise ValueError(f"operation {op!r} needs two operands")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown operation {op!r}")


@lru_cache(maxsize=None)
def trig(kind: str, k: int, m: int) -> CycNumber:
    """Exact value of kind(k*pi/m) for kind in {cot, csc, cos, sin}."""
    if m < 1:
        raise ValueError("m must be positive")
    if kind in ("cot", "csc") and k % m == 0:
        raise ZeroDivisionError(f"{kind}({k}*pi/{m}) is a pole")
    if kind == "cot":
        big = math.lcm(4, m)
        z = CycNumber.zeta(big, (k % m) * (big // m))
        i = CycNumber.zeta(big, big // 4)
        return i * (z + 1) / (z - 1)
    if kind == "csc":
        big = math.lcm(4, 2 * m)
        zh = CycNumber.zeta(big, (k % (2 * m)) * (big // (2 * m)))
        z = CycNumber.zeta(big, (k % m) * (big // m))
        i = CycNumber.zeta(big, big // 4)
        return 2 * i * zh / (z - 1)
    if kind == "cos":
        z = CycNumber.zeta(2 * m, k % (2 * m))
        return (z + z.conj()) / 2
    if kind == "sin":
        big = math.lcm(4, 2 * m)
        z = CycNumber.zeta(big, (k % (2 * m)) * (big // (2 * m)))
        i = CycNumber.zeta(big, big // 4)
        return (z - z.conj()) / (2 * i)
    raise ValueError(f"unknown trig kind {kind!r}")


def cot(k: int, m: int) -> CycNumber:
    return trig("cot", k, m)


def csc(k: int, m: int) -> CycNumber:
    return trig("csc", k, m)


def cos_pi(k: int, m: int) -> CycNumber:
    return trig("cos", k, m)


def sin_pi(k: int, m: int) -> CycNumber:
    return trig("sin", k, m)


def to_rational(x: CycNumber):
    """Fraction value of x, or None when x is irrational."""
    return x.to_rational()
