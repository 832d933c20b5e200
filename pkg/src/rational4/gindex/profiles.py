"""Fixed-point data of a cyclic action: isolated points and fixed surfaces.

Weights are recorded for a fixed generator g of the isotropy group: at an
isolated point g acts on the tangent space with eigenvalues
exp(2*pi*i*a/m), exp(2*pi*i*b/m); along a fixed surface it rotates the
normal bundle by exp(2*pi*i*c/m).  A point is "of type (1,b)" if some
generator realises the weights (1,b); types are the normal forms used in
classification statements, the raw weights are what the index formulas eat.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field


@dataclass(frozen=True, order=True)
class IsolatedPoint:
    order: int
    weights: tuple[int, int]

    def __post_init__(self):
        m = self.order
        a, b = self.weights
        if m < 2:
            raise ValueError("isotropy order must be at least 2")
        if not (0 < a < m and 0 < b < m):
            raise ValueError(f"weights must lie strictly between 0 and {m}")

    def point_type(self) -> tuple[int, int]:
        """The normal form (1, b) over all choices of generator.

        A generator change multiplies both weights by a unit t mod m; when
        either weight is invertible the pair normalises to (1, b').  The
        smaller admissible b' is returned.
        """
        m = self.order
        a, b = self.weights
        candidates = []
        if math.gcd(a, m) == 1:
            candidates.append((1, (pow(a, -1, m) * b) % m))
        if math.gcd(b, m) == 1:
            candidates.append((1, (pow(b, -1, m) * a) % m))
        if not candidates:
            raise ValueError(f"point weights {self.weights} mod {m} have no (1,b) form")
        return min(candidates)

    def power(self, e: int) -> "IsolatedPoint":
        """Weights of g^e at this point (must remain a fixed point)."""
        m = self.order
        a, b = (self.weights[0] * e) % m, (self.weights[1] * e) % m
        if a == 0 or b == 0:
            raise ValueError(
                f"g^{e} does not fix this point in isolation (weight hit 0 mod {m})"
            )
        return IsolatedPoint(m, (a, b))

    def to_json(self):
        return {"order": self.order, "weights": list(self.weights)}

    @staticmethod
    def from_json(d) -> "IsolatedPoint":
        return IsolatedPoint(int(d["order"]), tuple(int(x) for x in d["weights"])[:2])


@dataclass(frozen=True, order=True)
class FixedSurface:
    genus: int
    self_int: int
    normal_weight: int
    order: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        if not 0 < self.normal_weight < self.order:
            raise ValueError("normal weight must lie strictly between 0 and the order")

    def euler(self) -> int:
        return 2 - 2 * self.genus

    def power(self, e: int) -> "FixedSurface":
        c = (self.normal_weight * e) % self.order
        if c == 0:
            raise ValueError(f"g^{e} fixes a neighbourhood of this surface")
        return FixedSurface(self.genus, self.self_int, c, self.order)

    def to_json(self):
        return {
            "genus": self.genus,
            "self_int": self.self_int,
            "normal_weight": self.normal_weight,
            "order": self.order,
        }

    @staticmethod
    def from_json(d) -> "FixedSurface":
        return FixedSurface(
            int(d["genus"]),
            int(d["self_int"]),
            int(d["normal_weight"]),
            int(d["order"]),
        )


@dataclass(frozen=True)
class FixedPointProfile:
    group_order: int
    points: tuple[IsolatedPoint, ...] = ()
    surfaces: tuple[FixedSurface, ...] = ()
    cy: bool = True

    def __post_init__(self):
        for p in self.points:
            if self.group_order % p.order != 0:
                raise ValueError("point isotropy order must divide the group order")
        for s in self.surfaces:
            if self.group_order % s.order != 0:
                raise ValueError("surface isotropy order must divide the group order")
            if self.cy and s.self_int != 2 * s.genus - 2:
                raise ValueError(
                    "in the Calabi-Yau setting a fixed surface has Y^2 = 2g - 2"
                )

    @staticmethod
    def make(group_order, points=(), surfaces=(), cy=True) -> "FixedPointProfile":
        return FixedPointProfile(
            group_order,
            tuple(sorted(points)),
            tuple(sorted(surfaces)),
            cy,
        )

    def sum_self_int(self) -> int:
        return sum(s.self_int for s in self.surfaces)

    def type_counts(self) -> dict[tuple[int, tuple[int, int]], int]:
        out: dict[tuple[int, tuple[int, int]], int] = {}
        for p in self.points:
            key = (p.order, p.point_type())
            out[key] = out.get(key, 0) + 1
        return out

    def to_json(self):
        return {
            "group_order": self.group_order,
            "cy": self.cy,
            "points": [p.to_json() for p in self.points],
            "surfaces": [s.to_json() for s in self.surfaces],
        }

    @staticmethod
    def from_json(d) -> "FixedPointProfile":
        return FixedPointProfile.make(
            int(d["group_order"]),
            [IsolatedPoint.from_json(p) for p in d.get("points", [])],
            [FixedSurface.from_json(s) for s in d.get("surfaces", [])],
            bool(d.get("cy", True)),
        )
