"""Exact rational feasibility of symplectic-area constraint systems.

Systems mix strict rows (f > 0), non-strict rows (f >= 0) and equalities
over the symbolic areas w_H, w_E1..w_EN and the auxiliary sizes delta1,
delta2.  Feasibility is decided exactly: a slack variable t is maximised
subject to every strict row having slack at least t (with t capped at 1);
the system is feasible iff the optimum is positive.  All pivoting is over
Fractions; a returned witness satisfies every row on exact substitution and
an infeasibility verdict is backed by an exact Farkas certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from rational4.lattice import HClass

STRICT = ">"
NONSTRICT = ">="
EQ = "=="
_RELS = (STRICT, NONSTRICT, EQ)


@dataclass(frozen=True)
class LinearForm:
    """A finitely supported rational linear form plus constant."""

    coeffs: tuple[tuple[str, Fraction], ...]
    const: Fraction = Fraction(0)

    @staticmethod
    def make(coeffs: dict, const=0) -> "LinearForm":
        items = tuple(
            sorted((v, Fraction(c)) for v, c in coeffs.items() if Fraction(c) != 0)
        )
        return LinearForm(items, Fraction(const))

    def coeff(self, var: str) -> Fraction:
        for v, c in self.coeffs:
            if v == var:
                return c
        return Fraction(0)

    def variables(self):
        return [v for v, _ in self.coeffs]

    def __add__(self, other: "LinearForm") -> "LinearForm":
        d = dict(self.coeffs)
        for v, c in other.coeffs:
            d[v] = d.get(v, Fraction(0)) + c
        return LinearForm.make(d, self.const + other.const)

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        return self + other.scale(-1)

    def scale(self, k) -> "LinearForm":
        k = Fraction(k)
        return LinearForm.make({v: c * k for v, c in self.coeffs}, self.const * k)

    def evaluate(self, assignment: dict) -> Fraction:
        return self.const + sum(
            (Fraction(assignment.get(v, 0)) * c for v, c in self.coeffs),
            Fraction(0),
        )

    def to_json(self):
        return {
            "coeffs": {v: str(c) for v, c in self.coeffs},
            "const": str(self.const),
        }

    @staticmethod
    def from_json(d) -> "LinearForm":
        return LinearForm.make(
            {v: Fraction(c) for v, c in d.get("coeffs", {}).items()},
            Fraction(d.get("const", 0)),
        )

    def __str__(self):
        if not self.coeffs and self.const == 0:
            return "0"
        parts = []
        for v, c in self.coeffs:
            if c == 1:
                parts.append(v)
            elif c == -1:
                parts.append(f"-{v}")
            else:
                parts.append(f"{c}*{v}")
        if self.const != 0:
            parts.append(str(self.const))
        return " + ".join(parts).replace("+ -", "- ")


def var_w_H() -> str:
    return "w_H"


def var_w_E(i: int) -> str:
    return f"w_E{i}"


def area_of(x: HClass) -> LinearForm:
    """The symbolic area a*w_H - sum_i b_i w_Ei of a class."""
    d = {var_w_H(): Fraction(x.a)}
    for i, bi in enumerate(x.b):
        if bi:
            d[var_w_E(i + 1)] = Fraction(-bi)
    return LinearForm.make(d)


@dataclass(frozen=True)
class AreaSystem:
    """A conjunction of rows (form REL 0)."""

    rows: tuple[tuple[LinearForm, str], ...] = ()

    def extended(self, more) -> "AreaSystem":
        extra = tuple((f, r) for f, r in more)
        for _, r in extra:
            if r not in _RELS:
                raise ValueError(f"unknown relation {r!r}")
        return AreaSystem(self.rows + extra)

    def variables(self):
        out = []
        seen = set()
        for f, _ in self.rows:
            for v in f.variables():
                if v not in seen:
                    seen.add(v)
                    out.append(v)
        return sorted(out)

    def to_json(self):
        return {"rows": [{**f.to_json(), "rel": r} for f, r in self.rows]}

    @staticmethod
    def from_json(d) -> "AreaSystem":
        rows = []
        for row in d["rows"]:
            rel = row.get("rel", NONSTRICT)
            if rel not in _RELS:
                raise ValueError(f"unknown relation {rel!r}")
            rows.append((LinearForm.from_json(row), rel))
        return AreaSystem(tuple(rows))

    def satisfied_by(self, assignment: dict) -> bool:
        for f, rel in self.rows:
            v = f.evaluate(assignment)
            if rel == STRICT and not v > 0:
                return False
            if rel == NONSTRICT and not v >= 0:
                return False
            if rel == EQ and v != 0:
                return False
        return True


def system(rows) -> AreaSystem:
    return AreaSystem().extended(rows)


def reduced_basis_system(n: int, monotone: bool = True) -> AreaSystem:
    """The area constraints satisfied by any reduced basis of CP^2 # N.

    Rows: w_H > 0; w_Ei > 0; the monotone chain w_Ei >= w_Ej (i < j);
    w_H - w_Ei - w_Ej > 0 for i != j; w_H - w_Ei - w_Ej - w_Ek >= 0 for
    distinct triples.  With ``monotone=False`` the chain is dropped; the
    remaining rows are symmetric under index permutations, which the family
    searches exploit (any witness reorders to a monotone one).
    """
    if n < 3:
        raise ValueError("reduced-basis area constraints need N >= 3")
    rows: list[tuple[LinearForm, str]] = []
    rows.append((LinearForm.make({var_w_H(): 1}), STRICT))
    for i in range(1, n + 1):
        rows.append((LinearForm.make({var_w_E(i): 1}), STRICT))
    if monotone:
        for i in range(1, n):
            rows.append(
                (LinearForm.make({var_w_E(i): 1, var_w_E(i + 1): -1}), NONSTRICT)
            )
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rows.append(
                (LinearForm.make({var_w_H(): 1, var_w_E(i): -1, var_w_E(j): -1}), STRICT)
            )
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                rows.append(
                    (
                        LinearForm.make(
                            {var_w_H(): 1, var_w_E(i): -1, var_w_E(j): -1, var_w_E(k): -1}
                        ),
                        NONSTRICT,
                    )
                )
    return AreaSystem(tuple(rows))


# ---------------------------------------------------------------------------
# Exact feasibility engine


@dataclass
class FeasibilityResult:
    feasible: bool
    witness: dict | None = None
    certificate: list | None = None  # Farkas multipliers (row index, value)


def feasible(sys_: AreaSystem) -> FeasibilityResult:
    """Exact feasibility of a mixed strict/non-strict rational system.

    Affine rows are homogenised with an auxiliary positive scale variable,
    so the engine proper only ever sees homogeneous rows.
    """
    variables = sys_.variables()
    affine = any(f.const != 0 for f, _ in sys_.rows)
    scale_var = "__scale"
    rows = []
    for f, rel in sys_.rows:
        vec = {v: f.coeff(v) for v in f.variables()}
        if affine and f.const != 0:
            vec[scale_var] = f.const
        rows.append((vec, rel))
    if affine:
        rows.append(({scale_var: Fraction(1)}, STRICT))
        variables = variables + [scale_var]

    ok, data = _homogeneous_feasible(variables, rows)
    if not ok:
        return FeasibilityResult(False, certificate=data)
    witness = dict(zip(variables, data))
    if affine:
        s = witness.pop(scale_var)
        witness = {v: val / s for v, val in witness.items()}
    witness = {v: witness.get(v, Fraction(0)) for v in sys_.variables()}
    if not sys_.satisfied_by(witness):
        raise RuntimeError("internal error: witness failed exact verification")
    return FeasibilityResult(True, witness=witness)


def _homogeneous_feasible(variables, rows):
    """Decide existence of z with c_i.z >0 / >=0 / =0 per row.

    Returns (True, witness_vector) or (False, farkas_certificate).  By the
    transposition theorem the system is infeasible iff some y >= 0 on the
    inequality rows (free on equalities) combines the rows to zero with
    positive total weight on the strict rows; the LP below maximises that
    weight, capped at 1.
    """
    nv = len(variables)
    vidx = {v: i for i, v in enumerate(variables)}
    strict_ids = [i for i, (_, rel) in enumerate(rows) if rel == STRICT]
    if not strict_ids:
        # the zero vector satisfies every homogeneous non-strict row
        return True, [Fraction(0)] * nv

    # standard-form columns: one per inequality row, two per equality row,
    # then the cap slack; constraint rows: one per variable, then the cap.
    cols: list[tuple[int, int]] = []  # (row index, sign)
    costs: list[Fraction] = []
    for i, (_, rel) in enumerate(rows):
        cols.append((i, +1))
        costs.append(Fraction(-1) if rel == STRICT else Fraction(0))
        if rel == EQ:
            cols.append((i, -1))
            costs.append(Fraction(0))
    ncols = len(cols) + 1  # + cap slack
    nrows = nv + 1

    # tableau[r] = [col coefficients..., artificial block..., rhs]
    width = ncols + nrows + 1
    T = [[Fraction(0)] * width for _ in range(nrows)]
    for j, (ri, sign) in enumerate(cols):
        vec, _ = rows[ri]
        for v, c in vec.items():
            T[vidx[v]][j] = sign * c
        if rows[ri][1] == STRICT:
            T[nv][j] = Fraction(1)
    T[nv][ncols - 1] = Fraction(1)  # cap slack column
    for r in range(nrows):
        T[r][ncols + r] = Fraction(1)  # artificial / initial-basis columns
        T[r][-1] = Fraction(0)
    T[nv][-1] = Fraction(1)

    cost = costs + [Fraction(0)] * (1 + nrows)
    basis = [ncols + r for r in range(nrows)]
    basis[nv] = ncols - 1  # cap slack starts basic on the cap row

    # objective row of reduced costs (c_B = 0 initially)
    obj = [c for c in cost] + []
    objval = Fraction(0)

    enterable = [True] * (ncols) + [False] * nrows  # artificials never enter

    for _pivots in range(20000):
        j = next(
            (jj for jj in range(ncols) if enterable[jj] and obj[jj] < 0), None
        )
        if j is None:
            break
        # ratio test (Bland tie-break on basis variable index)
        best = None
        for r in range(nrows):
            a = T[r][j]
            if a > 0:
                ratio = T[r][-1] / a
                key = (ratio, basis[r])
                if best is None or key < best[0]:
                    best = (key, r)
        if best is None:
            raise RuntimeError("internal error: capped LP reported unbounded")
        r = best[1]
        piv = T[r][j]
        T[r] = [x / piv for x in T[r]]
        for rr in range(nrows):
            if rr != r and T[rr][j] != 0:
                f = T[rr][j]
                T[rr] = [x - f * y for x, y in zip(T[rr], T[r])]
        f = obj[j]
        objval -= f * T[r][-1]
        obj = [x - f * y for x, y in zip(obj, T[r][:-1])]
        basis[r] = j
    else:
        raise RuntimeError("pivot limit exceeded")

    value = -objval  # max sum of strict-row multipliers
    if value > 0:
        # infeasible: read off the Farkas certificate y
        y = [Fraction(0)] * len(rows)
        for r, bj in enumerate(basis):
            if bj < len(cols):
                ri, sign = cols[bj]
                y[ri] += sign * T[r][-1]
        _verify_certificate(variables, rows, y)
        return False, [(i, v) for i, v in enumerate(y) if v != 0]

    # feasible: witness from the reduced costs of the artificial columns
    z = [obj[ncols + r] for r in range(nv)]
    for vec, rel in rows:
        val = sum((vec[v] * z[vidx[v]] for v in vec), Fraction(0))
        if rel == STRICT and not val > 0:
            raise RuntimeError("internal error: strict row unsatisfied by witness")
        if rel == NONSTRICT and not val >= 0:
            raise RuntimeError("internal error: row unsatisfied by witness")
        if rel == EQ and val != 0:
            raise RuntimeError("internal error: equality unsatisfied by witness")
    return True, z


def _verify_certificate(variables, rows, y):
    comb = {v: Fraction(0) for v in variables}
    strict_weight = Fraction(0)
    for (vec, rel), yi in zip(rows, y):
        if rel != EQ and yi < 0:
            raise RuntimeError("internal error: negative multiplier on inequality")
        for v, c in vec.items():
            comb[v] += yi * c
        if rel == STRICT:
            strict_weight += yi
    if any(val != 0 for val in comb.values()) or strict_weight <= 0:
        raise RuntimeError("internal error: invalid Farkas certificate")
