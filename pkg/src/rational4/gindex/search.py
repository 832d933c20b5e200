"""Fixed-point profile searches driven by declarative scenarios.

A scenario fixes the group order, the first Betti number of the acted-on
Calabi-Yau 4-manifold (chi = Sign = 0, fixed surfaces satisfy Y^2 = 2g-2),
the hypothesis on the quotient (rational / ruled / torsion canonical
class), and search bounds.  The solver enumerates candidate profiles,
imposes the Lefschetz and exact signature equations for every group
element, the parity and positivity constraints carried by the quotient's
b2+/b2-, and optionally the Dirac-index and mod-p vanishing filters; it
reports raw solutions, survivors and per-branch eliminations.

Scenario kinds:

* ``prime_b1_low``  -- prime order, b1(M) in {2, 3}
* ``prime_b1_4``    -- prime order, b1(M) = 4 (rotation-model traces)
* ``z4_b1_2`` / ``z4_b1_4`` / ``z8_b1_4`` -- composite orders, resolution
  bookkeeping against rationality of the resolved quotient
* ``torsion``       -- prime order with Du Val quotient, chi bookkeeping
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field, asdict
from fractions import Fraction

from rational4 import cyclotomic as cy
from rational4.cyclotomic import CycNumber
from rational4.gindex.indexthms import (
    InconsistentSpin,
    lefschetz_fix,
    signature_defect,
    signature_number,
    spin_coefficients,
    spin_number,
)
from rational4.gindex.profiles import FixedPointProfile, FixedSurface, IsolatedPoint
from rational4.gindex.resolution import hj_resolution
from rational4.gindex.torus import torus_model

KINDS = ("prime_b1_low", "prime_b1_4", "z4_b1_2", "z4_b1_4", "z8_b1_4", "torsion")


@dataclass
class ScenarioSpec:
    kind: str
    label: str = ""
    p: int = 0
    b1: int = 0
    quotient: str = "rational"      # rational | ruled | torsion
    b2_minus_quotient: tuple[int, ...] = ()
    max_points: int = 20
    max_surfaces: int = 6
    y2_min: int = -6
    y2_max: int = 8
    max_genus: int = 4
    dirac_index_zero: str = "auto"  # "auto" | "on" | "off"
    mod_p_vanishing: bool = False
    h_fixed_points: int = 0         # composite kinds: #Fix of the halved element
    chi_targets: tuple[int, ...] = (12,)
    notes: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown scenario kind {self.kind!r}")

    def to_json(self):
        d = asdict(self)
        d["b2_minus_quotient"] = list(self.b2_minus_quotient)
        d["chi_targets"] = list(self.chi_targets)
        return d

    @staticmethod
    def from_json(d) -> "ScenarioSpec":
        d = dict(d)
        d["b2_minus_quotient"] = tuple(d.get("b2_minus_quotient", ()))
        d["chi_targets"] = tuple(d.get("chi_targets", (12,)))
        return ScenarioSpec(**d)


@dataclass
class Elimination:
    aggregate: dict
    reason: str


@dataclass
class BranchResult:
    params: dict
    solutions: list = field(default_factory=list)       # FixedPointProfile
    aggregates: list = field(default_factory=list)      # type-level dicts
    raw_aggregates: list = field(default_factory=list)  # before filters
    eliminated: list = field(default_factory=list)      # Elimination
    notes: list = field(default_factory=list)

    def to_json(self):
        return {
            "params": self.params,
            "solutions": [p.to_json() for p in self.solutions],
            "aggregates": self.aggregates,
            "raw_aggregates": self.raw_aggregates,
            "eliminated": [
                {"aggregate": e.aggregate, "reason": e.reason} for e in self.eliminated
            ],
            "notes": self.notes,
        }


@dataclass
class SearchResult:
    scenario: ScenarioSpec
    branches: list[BranchResult]

    def all_solutions(self):
        return [p for b in self.branches for p in b.solutions]

    def to_json(self):
        return {
            "scenario": self.scenario.to_json(),
            "branches": [b.to_json() for b in self.branches],
        }


def profile_search(spec: ScenarioSpec) -> SearchResult:
    if spec.max_points <= 0 or spec.max_surfaces < 0:
        raise ValueError("scenario bounds must be positive")
    if spec.kind == "prime_b1_low":
        return _search_prime_b1_low(spec)
    if spec.kind == "prime_b1_4":
        return _search_prime_b1_4(spec)
    if spec.kind == "z4_b1_2":
        return _search_z4_b1_2(spec)
    if spec.kind == "z4_b1_4":
        return _search_z4_b1_4(spec)
    if spec.kind == "z8_b1_4":
        return _search_z8_b1_4(spec)
    if spec.kind == "torsion":
        return _search_torsion(spec)
    raise AssertionError


# ---------------------------------------------------------------------------
# shared helpers


def _is_prime(p):
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


def _point_types(p: int):
    """Distinct point types (1, b) at prime order p, b normalised upward."""
    types = set()
    for b in range(1, p):
        binv = pow(b, -1, p)
        types.add((1, min(b, binv)))
    return sorted(types)


def _weight_groups(p: int):
    """Units mod p modulo +-1, as sorted tuples; the refinement classes."""
    units = set(range(1, p))
    groups = []
    seen = set()
    for u in sorted(units):
        if u in seen:
            continue
        cls = {u, p - u}
        seen |= cls
        groups.append(tuple(sorted(cls)))
    return groups


def _nontorus_surface_multisets(p, spec, max_neg, max_pos, allow_spheres):
    """Multisets of (genus, normal weight) with Y^2 = 2g - 2 != 0."""
    elements = []
    for g in range(0, spec.max_genus + 1):
        if g == 1:
            continue
        if g == 0 and not allow_spheres:
            continue
        y2 = 2 * g - 2
        if not spec.y2_min <= y2 <= spec.y2_max:
            continue
        for c in range(1, p):
            elements.append((g, c))
    out = []
    for size in range(0, spec.max_surfaces + 1):
        for combo in itertools.combinations_with_replacement(elements, size):
            neg = sum(1 for g, _ in combo if g == 0)
            pos = sum(1 for g, _ in combo if g >= 2)
            if neg <= max_neg and pos <= max_pos:
                out.append(combo)
    return out


def _torus_note():
    return (
        "self-intersection-zero tori are invisible to every index equation; "
        "any number may be appended to each solution"
    )


def _aggregate(p, type_counts, surf):
    return {
        "point_types": {f"(1,{t[1]})": c for t, c in type_counts.items() if c},
        "points_total": sum(type_counts.values()),
        "surfaces": [
            {"genus": g, "self_int": 2 * g - 2, "normal_weight": c} for g, c in surf
        ],
        "sum_y2": sum(2 * g - 2 for g, _ in surf),
    }


def _profile_from(p, refined_counts, surf, group_order=None):
    """Build a profile from {(1,b) type -> {group -> count}} refinements."""
    pts = []
    for (one, b), groups in refined_counts.items():
        for g_rep, count in groups.items():
            s = g_rep
            pts.extend(
                IsolatedPoint(p, ((s * one) % p, (s * b) % p)) for _ in range(count)
            )
    surfaces = [FixedSurface(g, 2 * g - 2, c, p) for g, c in surf]
    return FixedPointProfile.make(group_order or p, pts, surfaces)


# ---------------------------------------------------------------------------
# prime order, b1 in {2, 3}


def _search_prime_b1_low(spec: ScenarioSpec) -> SearchResult:
    p, b1 = spec.p, spec.b1
    if not _is_prime(p):
        raise ValueError("prime_b1_low needs prime order")
    if b1 not in (2, 3):
        raise ValueError("prime_b1_low covers b1 in {2, 3}")
    b2m = b2p = b1 - 1
    b1q = 2 if spec.quotient == "ruled" else 0

    # trace of the generator on H^1: no invariant part off the quotient's b1
    if p == 2:
        tr_h1 = 2 * b1q - b1
    elif p == 3 and b1 == 2:
        tr_h1 = 2 if b1q == 2 else -1  # rotation by 2pi/3 on the non-invariant part
    else:
        raise ValueError(f"no order-{p} action on a rank-{b1} H^1 without fixed part")

    branches = []
    b2mq_list = spec.b2_minus_quotient or tuple(range(0, b2m + 1))
    for b2mq in b2mq_list:
        if not 0 <= b2mq <= b2m:
            continue
        if p != 2 and (b2m - b2mq) % 2:
            continue  # odd-order rotations act on even-dimensional complements
        b2pq = 1
        if p != 2 and (b2p - b2pq) % 2:
            continue
        tr_plus = 2 * b2pq - b2p
        tr_minus = 2 * b2mq - b2m
        if p != 2:
            tr_plus, tr_minus = b2pq, b2mq  # forced: complements are trivial here
        lefschetz = 2 - 2 * tr_h1 + tr_plus + tr_minus
        sign_targets = {
            e: CycNumber.from_rational(tr_plus - tr_minus) for e in range(1, p)
        }
        br = BranchResult(
            params={
                "p": p,
                "b1": b1,
                "quotient": spec.quotient,
                "b2_minus_quotient": b2mq,
                "lefschetz": lefschetz,
                "sign": tr_plus - tr_minus,
            }
        )
        _solve_prime_branch(
            spec,
            br,
            p=p,
            lefschetz=lefschetz,
            sign_targets=sign_targets,
            b2mq_cap=b2mq,
            b2pq_cap=b2pq,
            allow_spheres=True,
            b1q=b1q,
            b2pq=b2pq,
            dirac_gate=(b2pq == 1 and b2mq == 1),
        )
        branches.append(br)
    return SearchResult(spec, branches)


# ---------------------------------------------------------------------------
# prime order, b1 = 4 (rotation model)


def _angle_orbit_reps(p: int):
    """Generator angle pairs (q1, q2)/p up to generator change, q1 <= q2."""
    seen = set()
    reps = []
    for q1 in range(1, p):
        for q2 in range(q1, p):
            pair = tuple(sorted((q1, q2)))
            if pair in seen:
                continue
            orbit = set()
            for t in range(1, p):
                if math.gcd(t, p) != 1:
                    continue
                orbit.add(tuple(sorted(((t * q1) % p, (t * q2) % p))))
            seen |= orbit
            reps.append(pair)
    return reps


def _search_prime_b1_4(spec: ScenarioSpec) -> SearchResult:
    p = spec.p
    if not _is_prime(p):
        raise ValueError("prime_b1_4 needs prime order")
    want_torsion = spec.quotient == "torsion"
    branches = []
    for q1, q2 in _angle_orbit_reps(p):
        t1, t2 = Fraction(q1, p), Fraction(q2, p)
        tm = torus_model(t1, t2, check=False)
        if not tm.integrality_ok:
            continue
        b2pq = 3 if (q1 + q2) % p == 0 else 1
        b2mq = 3 if q1 == q2 else 1
        if want_torsion != (b2pq == 3):
            continue
        lefschetz = tm.lefschetz
        # Lefschetz number must be constant on nontrivial powers (prime order)
        if any(
            torus_model(e * t1, e * t2, check=False).lefschetz != lefschetz
            for e in range(2, p)
        ):
            continue
        sign_targets = {
            e: torus_model(e * t1, e * t2, check=False).sign for e in range(1, p)
        }
        br = BranchResult(
            params={
                "p": p,
                "b1": 4,
                "quotient": spec.quotient,
                "angles": [str(t1), str(t2)],
                "lefschetz": lefschetz,
                "b2_plus_quotient": b2pq,
                "b2_minus_quotient": b2mq,
            }
        )
        _solve_prime_branch(
            spec,
            br,
            p=p,
            lefschetz=lefschetz,
            sign_targets=sign_targets,
            b2mq_cap=b2mq,
            b2pq_cap=b2pq,
            allow_spheres=False,  # no spherical fixed components when b1 = 4
            b1q=0,
            b2pq=b2pq,
            dirac_gate=(b2pq == 1 and b2mq == 1),
        )
        if want_torsion:
            for agg in br.aggregates:
                for t, c in agg["point_types"].items():
                    if c and t != f"(1,{p-1})":
                        br.notes.append(
                            "non-Du-Val point type in torsion branch: " + t
                        )
        branches.append(br)
    return SearchResult(spec, branches)


def _solve_prime_branch(
    spec,
    br: BranchResult,
    *,
    p,
    lefschetz,
    sign_targets,
    b2mq_cap,
    b2pq_cap,
    allow_spheres,
    b1q,
    b2pq,
    dirac_gate,
):
    """Enumerate profiles for one prime-order branch and apply the filters.

    Candidates pass, in order: the weak (defect) signature equation at type
    level, the exact signature equation for every power on refined weights,
    then (odd p) integrality of the Spin multiplicities, the vanishing of
    d_0 when the quotient carries it, and the mod-p vanishing filter.
    """
    types = _point_types(p)
    groups = _weight_groups(p)
    dirac_on = (
        spec.dirac_index_zero == "on"
        or (spec.dirac_index_zero == "auto" and dirac_gate)
    ) and p != 2
    sign_quotient = b2pq - (br.params.get("b2_minus_quotient", b2mq_cap))
    defect_of_type = {
        t: signature_defect(IsolatedPoint(p, t), p) for t in types
    }

    # contribution tables: per refined point kind and per surface element
    sig_pt = {}   # (type, group rep) -> tuple over e of CycNumber
    spin_pt = {}
    for t in types:
        for grp in groups:
            s = grp[0]
            pt = IsolatedPoint(p, ((s * t[0]) % p, (s * t[1]) % p))
            prof = FixedPointProfile.make(p, [pt], ())
            sig_pt[(t, s)] = tuple(
                signature_number(prof, e) for e in range(1, p)
            )
            if p != 2:
                spin_pt[(t, s)] = tuple(
                    spin_number(prof, p, e) for e in range(1, p)
                )
    surf_elements = sorted(
        {
            (g, c)
            for g in range(0, spec.max_genus + 1)
            if g != 1 and (allow_spheres or g != 0)
            and spec.y2_min <= 2 * g - 2 <= spec.y2_max
            for c in range(1, p)
        }
    )
    sig_sf = {}
    spin_sf = {}
    for g, c in surf_elements:
        prof = FixedPointProfile.make(p, (), [FixedSurface(g, 2 * g - 2, c, p)])
        sig_sf[(g, c)] = tuple(signature_number(prof, e) for e in range(1, p))
        if p != 2:
            spin_sf[(g, c)] = tuple(spin_number(prof, p, e) for e in range(1, p))

    surf_sets = []
    for size in range(0, spec.max_surfaces + 1):
        for combo in itertools.combinations_with_replacement(surf_elements, size):
            neg = sum(1 for g, _ in combo if g == 0)
            pos = sum(1 for g, _ in combo if g >= 2)
            if neg <= b2mq_cap and pos <= b2pq_cap:
                surf_sets.append(combo)

    seen_raw = []
    for surf in surf_sets:
        euler = sum(2 - 2 * g for g, _ in surf)
        total_points = lefschetz - euler
        if total_points < 0 or total_points > spec.max_points:
            continue
        surf_defect = sum(
            (Fraction((p * p - 1) * (2 * g - 2), 3) for g, _ in surf), Fraction(0)
        )
        for counts in _compositions(total_points, len(types)):
            type_counts = dict(zip(types, counts))
            # weak signature equation: sum of defects = p * Sign(M/G)
            total_defect = surf_defect + sum(
                defect_of_type[t] * c for t, c in type_counts.items()
            )
            if total_defect != p * sign_quotient:
                continue
            agg = _aggregate(p, type_counts, surf)
            seen_raw.append(agg)
            reasons = set()
            survivors = []
            for refined in _refinements(type_counts, groups, p):
                sig = [cy.ZERO] * (p - 1)
                for (t, splits) in refined.items():
                    for s, cnt in splits.items():
                        if cnt:
                            vals = sig_pt[(t, s)]
                            sig = [x + vals[i] * cnt for i, x in enumerate(sig)]
                for el in surf:
                    vals = sig_sf[el]
                    sig = [x + vals[i] for i, x in enumerate(sig)]
                if any(sig[e - 1] != sign_targets[e] for e in range(1, p)):
                    reasons.add("exact_signature")
                    continue
                if p == 2:
                    survivors.append(_profile_from(p, refined, surf))
                    continue
                spin = [cy.ZERO] * (p - 1)
                for (t, splits) in refined.items():
                    for s, cnt in splits.items():
                        if cnt:
                            vals = spin_pt[(t, s)]
                            spin = [x + vals[i] * cnt for i, x in enumerate(spin)]
                for el in surf:
                    vals = spin_sf[el]
                    spin = [x + vals[i] for i, x in enumerate(spin)]
                try:
                    ds = spin_coefficients(
                        {e: spin[e - 1] for e in range(1, p)}, p, 0
                    )
                except InconsistentSpin as exc:
                    reasons.add(f"spin_multiplicities: {exc}")
                    continue
                if dirac_on and ds[0] != 0:
                    reasons.add(f"dirac_index_nonzero (d0 = {ds[0]})")
                    continue
                if spec.mod_p_vanishing and all(
                    2 * d < 1 - b1q + b2pq for d in ds
                ):
                    reasons.add(
                        "mod_p_vanishing: all 2 d_k < 1 - b1(M/G) + b2+(M/G), "
                        "forcing a vanishing invariant that is in fact nonzero"
                    )
                    continue
                survivors.append(_profile_from(p, refined, surf))
            if survivors:
                br.aggregates.append(agg)
                br.solutions.extend(_dedupe_profiles(survivors))
            else:
                spin_reasons = sorted(reasons - {"exact_signature"})
                reason = "; ".join(spin_reasons) if spin_reasons else (
                    "no weight refinement matches the exact signature equation"
                )
                br.eliminated.append(Elimination(agg, reason))
    br.raw_aggregates = seen_raw
    br.notes.append(_torus_note())


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


def _refinements(type_counts, groups, p):
    """Distribute each type count over the +-unit refinement classes."""
    items = [(t, c) for t, c in type_counts.items()]
    per_type_options = []
    for t, c in items:
        opts = [
            dict(zip((g[0] for g in groups), split))
            for split in _compositions(c, len(groups))
        ]
        per_type_options.append(opts)
    for picks in itertools.product(*per_type_options):
        yield {t: pick for (t, _), pick in zip(items, picks)}


def _dedupe_profiles(profiles):
    out = {}
    for pr in profiles:
        out[(pr.points, pr.surfaces)] = pr
    return sorted(out.values(), key=lambda q: (q.points, q.surfaces))


# ---------------------------------------------------------------------------
# composite orders: resolution bookkeeping


def _search_z4_b1_2(spec: ScenarioSpec) -> SearchResult:
    """Order 4, b1 = 2, order-2 subgroup with torsion quotient (8 fixed points)."""
    h_fixed = spec.h_fixed_points or 8
    branches = []
    for b2mq in spec.b2_minus_quotient or (0, 1):
        tr_minus = 2 * b2mq - 1
        lefschetz = 2 - 2 * 0 + 1 + tr_minus  # tr(H^1) = 0 for an order-4 rotation
        br = BranchResult(
            params={"b2_minus_quotient": b2mq, "lefschetz": lefschetz}
        )
        if lefschetz < 0 or (h_fixed - lefschetz) % 2 or h_fixed < lefschetz:
            br.eliminated.append(
                Elimination({"lefschetz": lefschetz}, "fixed-point count impossible")
            )
            branches.append(br)
            continue
        a1_count = (h_fixed - lefschetz) // 2
        found = False
        for x in range(lefschetz + 1):
            y = lefschetz - x
            # type (1,1) resolves to a (-4)-sphere, type (1,3) to an A3 chain
            b2m_res = b2mq + x * 1 + y * 3 + a1_count
            c1k2 = -x
            if c1k2 != 9 - b2m_res:
                continue
            agg = {
                "points_type_1_1": x,
                "points_type_1_3": y,
                "order2_points": h_fixed - lefschetz,
                "c1K2": c1k2,
                "b2_minus_resolution": b2m_res,
            }
            if x == 0:
                br.eliminated.append(
                    Elimination(
                        agg,
                        "forces c1(K) = 0 on the resolution, impossible for a "
                        "rational surface",
                    )
                )
                continue
            found = True
            br.aggregates.append(agg)
            pts = [IsolatedPoint(4, (1, 1)) for _ in range(x)] + [
                IsolatedPoint(4, (1, 3)) for _ in range(y)
            ] + [IsolatedPoint(2, (1, 1)) for _ in range(h_fixed - lefschetz)]
            br.solutions.append(FixedPointProfile.make(4, pts, ()))
        if not found and not br.eliminated:
            br.eliminated.append(
                Elimination({"lefschetz": lefschetz}, "no (x, y) satisfies the "
                            "rationality bookkeeping")
            )
        branches.append(br)
    return SearchResult(spec, branches)


def _search_z4_b1_4(spec: ScenarioSpec) -> SearchResult:
    """Order 4, b1 = 4, order-2 subgroup with torsion quotient (16 fixed points)."""
    h_fixed = spec.h_fixed_points or 16
    lefschetz = 4
    a1_count = (h_fixed - lefschetz) // 2
    chi_quotient = 6
    branches = []
    # branch (i): b2+(M/G) = 3, resolution has torsion canonical class
    br1 = BranchResult(params={"case": "torsion_resolution", "b2_plus_quotient": 3})
    x, y = 0, lefschetz  # c1(K)^2 = -x must vanish for torsion
    chi_res = chi_quotient + x + 3 * y + a1_count
    if chi_res in (12, 24):
        br1.aggregates.append(
            {"points_type_1_1": x, "points_type_1_3": y,
             "order2_points": h_fixed - lefschetz, "chi_resolution": chi_res}
        )
        pts = [IsolatedPoint(4, (1, 3)) for _ in range(y)] + [
            IsolatedPoint(2, (1, 1)) for _ in range(h_fixed - lefschetz)
        ]
        br1.solutions.append(FixedPointProfile.make(4, pts, ()))
    branches.append(br1)
    # branch (ii): resolution rational, c1(K)^2 = 12 - chi
    br2 = BranchResult(params={"case": "rational_resolution", "b2_plus_quotient": 1})
    for x in range(lefschetz + 1):
        y = lefschetz - x
        chi_res = chi_quotient + x + 3 * y + a1_count
        if -x != 12 - chi_res:
            continue
        if x == 0:
            br2.eliminated.append(
                Elimination({"points_type_1_1": 0}, "forces c1(K) = 0, not rational")
            )
            continue
        br2.aggregates.append(
            {"points_type_1_1": x, "points_type_1_3": y,
             "order2_points": h_fixed - lefschetz, "chi_resolution": chi_res}
        )
        pts = [IsolatedPoint(4, (1, 1)) for _ in range(x)] + [
            IsolatedPoint(4, (1, 3)) for _ in range(y)
        ] + [IsolatedPoint(2, (1, 1)) for _ in range(h_fixed - lefschetz)]
        br2.solutions.append(FixedPointProfile.make(4, pts, ()))
    branches.append(br2)
    return SearchResult(spec, branches)


def _search_z8_b1_4(spec: ScenarioSpec) -> SearchResult:
    """Order 8, b1 = 4; both prime subgroups have torsion quotients."""
    branches = []
    for q in (3, 5):  # theta = (1/8, q/8); q odd, q not in {1,7} by integrality
        t1, t2 = Fraction(1, 8), Fraction(q, 8)
        tm = torus_model(t1, t2)
        lefschetz = tm.lefschetz  # = 2
        # chi(M/G) from the weak Lefschetz theorem over all powers
        total = 0
        for e in range(1, 8):
            total += torus_model(e * t1, e * t2, check=False).lefschetz
        chi_quotient = Fraction(total, 8)
        assert chi_quotient.denominator == 1
        chi_quotient = int(chi_quotient)
        # singular set of M/G: 2 points of order 8, 1 of order 4, 3 of order 2
        z4_case = "torsion_resolution" if (1 + q) % 4 == 0 else "rational_resolution"
        if z4_case == "torsion_resolution":
            order4 = {"type": (1, 3), "delta_chi": 3, "delta_K2": Fraction(0)}
        else:
            order4 = {"type": (1, 1), "delta_chi": 1, "delta_K2": Fraction(-1)}
        br = BranchResult(
            params={
                "q": q,
                "angles": [str(t1), str(t2)],
                "lefschetz": lefschetz,
                "chi_quotient": chi_quotient,
                "z4_subgroup_case": z4_case,
                "order4_point_type": list(order4["type"]),
            }
        )
        base_chi = chi_quotient + order4["delta_chi"] + 3  # + three A1 chains
        base_k2 = order4["delta_K2"]
        res = {b: hj_resolution(8, b) for b in (1, 3, 5, 7)}
        for b_1, b_2 in itertools.combinations_with_replacement((1, 3, 5, 7), 2):
            chi_res = base_chi + res[b_1].delta_chi + res[b_2].delta_chi
            k2 = base_k2 + res[b_1].delta_K2 + res[b_2].delta_K2
            agg = {
                "fixed_point_types": [f"(1,{b_1})", f"(1,{b_2})"],
                "chi_resolution": chi_res,
                "c1K2": str(k2),
            }
            if k2 == 12 - chi_res:
                br.aggregates.append(agg)
                pts = [
                    IsolatedPoint(8, (1, b_1)),
                    IsolatedPoint(8, (1, b_2)),
                    IsolatedPoint(4, order4["type"]),
                    IsolatedPoint(4, order4["type"]),
                ] + [IsolatedPoint(2, (1, 1)) for _ in range(12)]
                br.solutions.append(FixedPointProfile.make(8, pts, ()))
            else:
                br.eliminated.append(
                    Elimination(agg, "c1(K)^2 != 12 - chi on the resolution")
                )
        branches.append(br)
    return SearchResult(spec, branches)


def _search_torsion(spec: ScenarioSpec) -> SearchResult:
    """Prime order with Du Val quotient: chi bookkeeping plus the weak
    signature bound |Sign(M/G)| <= b2(M/G)."""
    branches = []
    for chi_target in spec.chi_targets:
        br = BranchResult(params={"chi_resolution": chi_target})
        for p in (2, 3, 5, 7, 11, 13):
            # chi(M_G) = (p-1)(1/p + 1) z with z = #M^G
            num = chi_target * p
            den = (p - 1) * (p + 1)
            if num % den:
                continue
            z = num // den
            if z <= 0:
                continue
            point = IsolatedPoint(p, (1, p - 1))
            defect = signature_defect(point, p)
            sign_q = Fraction(z) * defect / p
            chi_q = Fraction((p - 1) * z, p)
            agg = {
                "p": p,
                "fixed_points": z,
                "point_type": f"(1,{p-1})",
                "chi_quotient": str(chi_q),
                "sign_quotient": str(sign_q),
            }
            if chi_q.denominator != 1:
                br.eliminated.append(Elimination(agg, "chi(M/G) not an integer"))
                continue
            b2_q = int(chi_q) - 2
            if abs(sign_q) > b2_q:
                br.eliminated.append(
                    Elimination(agg, "|Sign(M/G)| exceeds b2(M/G)")
                )
                continue
            br.aggregates.append(agg)
            br.solutions.append(
                FixedPointProfile.make(p, [point] * z, ())
            )
        branches.append(br)
    return SearchResult(spec, branches)
