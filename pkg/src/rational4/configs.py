"""Disjoint sphere-class configurations: search, classification, incidence.

The classification pipeline enumerates pairwise-orthogonal k-tuples from a
candidate pool, groups them into canonical families under index
permutation, and decides for each family whether the area system (reduced
basis constraints plus the delta-rows tying one distinguished member to
area delta1 and the rest to delta2, delta2 < delta1 < 2 delta2,
7 delta_i < -K.w) admits an exact rational solution.

Feasibility over "some labelling" is decided on the canonical labelling
with the monotone chain dropped: the remaining reduced-basis rows are
symmetric under index permutations, and any witness can be reordered into
a monotone one (witnesses returned to callers are re-sorted and re-checked
against the full monotone system).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from rational4 import areafeas as af
from rational4.areafeas import (
    EQ,
    NONSTRICT,
    STRICT,
    AreaSystem,
    LinearForm,
    area_of,
    reduced_basis_system,
)
from rational4.lattice import (
    E,
    H,
    HClass,
    K,
    canonical_tuple,
    canonical_tuple_with_marks,
    exact_rank,
    gram_matrix,
    minus2_classes_mod_K,
    negative_definite_rank,
    pair,
)
from rational4.spheres import area_bounded_forms, surface_class_filter


@dataclass
class ConfigFamily:
    classes: tuple[HClass, ...]           # canonical form
    label: str | None = None              # "a" | "b" | "c" | None
    witness: dict | None = None           # labelled witness for the full system
    witness_classes: tuple[HClass, ...] | None = None
    slot_feasibility: dict | None = None  # distinguished slot -> bool

    def to_json(self):
        return {
            "classes": [c.to_json() for c in self.classes],
            "label": self.label,
            "witness": {k: str(v) for k, v in self.witness.items()}
            if self.witness
            else None,
            "witness_classes": [c.to_json() for c in self.witness_classes]
            if self.witness_classes
            else None,
            "slot_feasibility": self.slot_feasibility,
        }


def orthogonal_cliques(pool, k):
    """All k-subsets of the pool with pairwise intersection number zero."""
    n = len(pool)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if pair(pool[i], pool[j]) == 0:
                adj[i] |= 1 << j
    out = []

    def rec(cand, chosen):
        need = k - len(chosen)
        if need == 0:
            out.append(tuple(chosen))
            return
        while cand:
            if cand.bit_count() < need:
                return
            low = cand & -cand
            i = low.bit_length() - 1
            cand ^= low
            chosen.append(i)
            rec(cand & adj[i], chosen)
            chosen.pop()

    rec((1 << n) - 1, [])
    return [tuple(pool[i] for i in idx) for idx in out]


def delta_rows(classes, slot, area_bound_multiplier: int = 7):
    """Area rows for a distinguished-member tuple.

    Member ``slot`` has area delta1, the others delta2;
    delta2 < delta1 < 2*delta2 and m*delta_i < -K.w for i = 1, 2.
    """
    n = classes[0].n
    rows = []
    for i, c in enumerate(classes):
        target = "delta1" if i == slot else "delta2"
        rows.append((area_of(c) - LinearForm.make({target: 1}), EQ))
    rows.append((LinearForm.make({"delta1": 1, "delta2": -1}), STRICT))
    rows.append((LinearForm.make({"delta2": 2, "delta1": -1}), STRICT))
    minus_k_area = area_of(-K(n))
    m = area_bound_multiplier
    rows.append((minus_k_area - LinearForm.make({"delta1": m}), STRICT))
    rows.append((minus_k_area - LinearForm.make({"delta2": m}), STRICT))
    return rows


def disjoint_tuples(candidates, k, extra_rows_fn=None, dedupe=True):
    """All size-k pairwise-orthogonal sub-tuples of the candidate list.

    With ``extra_rows_fn`` each tuple must additionally make the area
    system [reduced basis + extra_rows_fn(tuple)] feasible (full monotone
    system, labelled indices).  Output is canonicalised and deduplicated.
    """
    candidates = sorted(set(candidates))
    if not candidates:
        return []
    n = candidates[0].n
    base = reduced_basis_system(n) if extra_rows_fn is not None else None
    families = {}
    for tup in orthogonal_cliques(candidates, k):
        witness = None
        if extra_rows_fn is not None:
            res = af.feasible(base.extended(extra_rows_fn(tup)))
            if not res.feasible:
                continue
            witness = res.witness
        canon = canonical_tuple(tup)
        if not dedupe:
            families[tup] = ConfigFamily(canon, witness=witness, witness_classes=tup)
        elif canon not in families:
            families[canon] = ConfigFamily(canon, witness=witness, witness_classes=tup)
    return sorted(families.values(), key=lambda f: f.classes)


# ---------------------------------------------------------------------------
# The classification of 8 disjoint (-2)-classes at N = 9 (and 7/8 variants)


def _expected_families_n9():
    """Canonical forms of the three families of the classification."""
    n = 9
    e = lambda i: E(n, i)
    h = H(n)
    fam_a = [
        HClass(3, (2, 1, 1, 1, 1, 1, 1, 1, 0)),
        h - e(2) - e(3) - e(4),
        h - e(2) - e(5) - e(6),
        h - e(2) - e(7) - e(8),
        h - e(3) - e(5) - e(7),
        h - e(3) - e(6) - e(8),
        h - e(4) - e(5) - e(8),
        h - e(4) - e(6) - e(7),
    ]
    fam_b = [
        h - e(1) - e(2) - e(3),
        h - e(1) - e(4) - e(5),
        h - e(1) - e(6) - e(7),
        h - e(2) - e(4) - e(6),
        h - e(3) - e(5) - e(6),
        h - e(2) - e(5) - e(7),
        h - e(3) - e(4) - e(7),
        e(8) - e(9),
    ]
    fam_c = [
        h - e(1) - e(2) - e(3),
        h - e(1) - e(4) - e(5),
        h - e(1) - e(6) - e(7),
        h - e(1) - e(8) - e(9),
        e(2) - e(3),
        e(4) - e(5),
        e(6) - e(7),
        e(8) - e(9),
    ]
    return {
        "a": canonical_tuple(fam_a),
        "b": canonical_tuple(fam_b),
        "c": canonical_tuple(fam_c),
    }


@dataclass
class ClassificationReport:
    n: int
    k: int
    pool_size: int
    tuple_count: int
    family_count: int
    survivors: list[ConfigFamily]
    expected_match: bool | None = None
    missing: list = field(default_factory=list)
    extra: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self):
        return self.expected_match is not False

    def to_json(self):
        return {
            "n": self.n,
            "k": self.k,
            "pool_size": self.pool_size,
            "tuple_count": self.tuple_count,
            "family_count": self.family_count,
            "survivors": [f.to_json() for f in self.survivors],
            "expected_match": self.expected_match,
            "missing": [[c.to_json() for c in fam] for fam in self.missing],
            "extra": [[c.to_json() for c in fam] for fam in self.extra],
            "notes": self.notes,
        }


def classify_disjoint_spheres(n: int, k: int, area_bound_multiplier: int = 7):
    """Canonical families of k disjoint (-2)-classes surviving the delta system.

    Returns (report-sans-expectations, families) where each family carries
    per-slot feasibility and, when feasible, a monotone labelled witness.
    """
    pool = area_bounded_forms(n, 2)
    cliques = orthogonal_cliques(pool, k)
    families: dict = {}
    for tup in cliques:
        canon = canonical_tuple(tup)
        families.setdefault(canon, 0)
        families[canon] += 1

    base = reduced_basis_system(n, monotone=False)
    survivors = []
    for canon in sorted(families):
        # distinguished slots up to the family's symmetries
        slot_reps = {}
        for slot in range(k):
            marked = canonical_tuple_with_marks(
                canon, [1 if i == slot else 0 for i in range(k)]
            )
            slot_reps.setdefault(marked, slot)
        slot_feas = {}
        witness = None
        witness_classes = None
        for marked, slot in sorted(slot_reps.items(), key=lambda kv: kv[1]):
            res = af.feasible(
                base.extended(delta_rows(canon, slot, area_bound_multiplier))
            )
            slot_feas[slot] = res.feasible
            if res.feasible and witness is None:
                witness, witness_classes = _monotone_witness(canon, res.witness)
        if any(slot_feas.values()):
            survivors.append(
                ConfigFamily(
                    canon,
                    witness=witness,
                    witness_classes=witness_classes,
                    slot_feasibility={str(s): v for s, v in slot_feas.items()},
                )
            )
    report = ClassificationReport(
        n=n,
        k=k,
        pool_size=len(pool),
        tuple_count=len(cliques),
        family_count=len(families),
        survivors=survivors,
    )
    return report, survivors


def _monotone_witness(classes, witness):
    """Relabel a no-monotone witness so the full reduced-basis system holds."""
    n = classes[0].n
    areas = [(witness[af.var_w_E(i)], i) for i in range(1, n + 1)]
    order = sorted(range(n), key=lambda t: (-areas[t][0], areas[t][1]))
    # new index of old column order[j] is j+1
    new_of_old = {areas[t][1]: j + 1 for j, t in enumerate(order)}
    relabelled = tuple(
        HClass(c.a, tuple(c.b[order[j]] for j in range(n))) for c in classes
    )
    new_witness = {af.var_w_H(): witness[af.var_w_H()]}
    for old, new in new_of_old.items():
        new_witness[af.var_w_E(new)] = witness[af.var_w_E(old)]
    for extra in ("delta1", "delta2"):
        if extra in witness:
            new_witness[extra] = witness[extra]
    full = reduced_basis_system(n)
    if not full.satisfied_by(new_witness):
        raise RuntimeError("relabelled witness failed the monotone system")
    for c_old, c_new in zip(classes, relabelled):
        if area_of(c_old).evaluate(witness) != area_of(c_new).evaluate(new_witness):
            raise RuntimeError("relabelling changed a member area")
    return new_witness, relabelled


def verify_eight_sphere_classification() -> ClassificationReport:
    """The bundled check `lemma-5.1`: exactly three families at N = 9."""
    report, survivors = classify_disjoint_spheres(9, 8)
    expected = _expected_families_n9()
    by_canon = {f.classes: f for f in survivors}
    for name, canon in expected.items():
        if canon in by_canon:
            by_canon[canon].label = name
        else:
            report.missing.append(canon)
    for f in survivors:
        if f.classes not in expected.values():
            report.extra.append(f.classes)
    report.expected_match = not report.missing and not report.extra
    report.notes.append(
        "delta system: one member of area delta1, seven of area delta2, "
        "delta2 < delta1 < 2 delta2, 7 delta_i < -K.w"
    )
    return report


# ---------------------------------------------------------------------------
# Fano incidence


@dataclass
class IncidenceStructure:
    points: tuple[int, ...]
    lines: tuple[HClass, ...]
    membership: tuple[tuple[bool, ...], ...]
    is_fano: bool
    failures: tuple[str, ...] = ()

    def to_json(self):
        return {
            "points": list(self.points),
            "lines": [l.to_json() for l in self.lines],
            "membership": [[int(x) for x in row] for row in self.membership],
            "is_fano": self.is_fano,
            "failures": list(self.failures),
        }


def fano_incidence(classes) -> IncidenceStructure:
    """Blow-down bookkeeping of a Fano-shaped family.

    Accepts either one a=3 class plus seven a=1 classes (the points are the
    seven indices carried by the a=3 class with coefficient 1) or seven a=1
    classes alone (the points are the union of their supports).  Raises on
    any other shape; the returned structure records which of the Fano plane
    axioms hold.
    """
    classes = list(classes)
    a3 = [c for c in classes if c.a == 3]
    a1 = [c for c in classes if c.a == 1]
    rest = [c for c in classes if c.a not in (1, 3)]
    if len(a1) != 7 or len(a3) > 1 or (rest and len(classes) != len(a1) + len(a3)):
        raise ValueError(
            "family is not of the Fano shape (need seven a=1 classes and "
            "at most one a=3 class)"
        )
    if a3:
        c3 = a3[0]
        points = tuple(i + 1 for i, v in enumerate(c3.b) if v == 1)
        if len(points) != 7:
            raise ValueError("the a=3 class does not carry seven coefficient-1 indices")
    else:
        points = tuple(sorted({i for c in a1 for i in c.support()}))
    failures = []
    if len(points) != 7:
        failures.append(f"{len(points)} points instead of 7")
    membership = tuple(
        tuple(p in c.support() for p in points) for c in a1
    )
    for row, c in zip(membership, a1):
        if sum(row) != 3 or len(c.support()) != 3:
            failures.append(f"line {c} does not pass through exactly 3 points")
    for j, p in enumerate(points):
        if sum(row[j] for row in membership) != 3:
            failures.append(f"point E{p} does not lie on exactly 3 lines")
    for (r1, c1), (r2, c2) in itertools.combinations(zip(membership, a1), 2):
        common = sum(1 for x, y in zip(r1, r2) if x and y)
        if common != 1:
            failures.append(f"lines {c1} and {c2} share {common} points")
    return IncidenceStructure(
        points=points,
        lines=tuple(a1),
        membership=membership,
        is_fano=not failures,
        failures=tuple(failures),
    )


# ---------------------------------------------------------------------------
# Non-existence of N disjoint (-2)-spheres for N in {7, 8, 9}


def n_minus_one_exhibit(n: int):
    """N-1 pairwise-orthogonal (-2)-classes for odd N >= 3."""
    if n < 3 or n % 2 == 0:
        raise ValueError("the N-1 construction needs odd N >= 3")
    h = H(n)
    out = []
    for k in range(1, (n - 1) // 2 + 1):
        out.append(h - E(n, 1) - E(n, 2 * k) - E(n, 2 * k + 1))
        out.append(E(n, 2 * k) - E(n, 2 * k + 1))
    return out


@dataclass
class DisjointLimitReport:
    n: int
    passed: bool
    details: dict
    notes: list = field(default_factory=list)

    def to_json(self):
        return {
            "n": self.n,
            "passed": self.passed,
            "details": self.details,
            "notes": self.notes,
        }


def verify_disjoint_minus2_limit(n: int) -> DisjointLimitReport:
    """The bundled checks `thm-1.4-n7/n8/n9`.

    n = 9: there is no homological candidate at all -- nine pairwise
    orthogonal (-2)-classes orthogonal to K would give nine pairwise
    orthogonal roots in the rank-8 negative-definite quotient lattice.
    n in {7, 8}: every family surviving the delta system is Fano-shaped,
    and the non-realizability of the Fano incidence (an external input) is
    what obstructs it; the classes themselves do exist, and explicit
    pairwise-orthogonal N-tuples are exhibited.
    """
    notes = []
    if n == 9:
        reps = minus2_classes_mod_K(9)
        rank, negdef = negative_definite_rank(reps)
        exhibit = _find_orthogonal_roots(reps, 8)
        gram = gram_matrix(exhibit)
        nonsingular = exact_rank(gram) == 8
        # pairwise-orthogonal roots have diagonal Gram -2I: any such set is
        # linearly independent, so its size is capped by the pairing rank
        details = {
            "representatives": len(reps),
            "pairing_rank": rank,
            "negative_definite": negdef,
            "max_orthogonal_upper_bound": rank,
            "orthogonal_exhibit": [c.to_json() for c in exhibit],
            "exhibit_gram_nonsingular": nonsingular,
        }
        eight = n_minus_one_exhibit(9)
        details["disjoint_eight_tuple"] = [c.to_json() for c in eight]
        ok_eight = all(
            pair(x, y) == 0 for x, y in itertools.combinations(eight, 2)
        ) and all(surface_class_filter(c, 0)[0] for c in eight)
        passed = (
            len(reps) == 240
            and rank == 8
            and negdef
            and len(exhibit) == 8
            and nonsingular
            and ok_eight
        )
        notes.append(
            "no nine pairwise-orthogonal roots exist: they would be linearly "
            "independent in a rank-8 pairing"
        )
        return DisjointLimitReport(9, passed, details, notes)

    if n not in (7, 8):
        raise ValueError("the disjoint (-2)-sphere bound covers N in {7, 8, 9}")
    report, survivors = classify_disjoint_spheres(n, n)
    fano_flags = []
    for fam in survivors:
        inc = fano_incidence(fam.classes)
        fano_flags.append(inc.is_fano)
    exhibit = survivors[0].classes if survivors else ()
    ok_exhibit = bool(exhibit) and all(
        pair(x, y) == 0 for x, y in itertools.combinations(exhibit, 2)
    )
    details = {
        "pool_size": report.pool_size,
        "tuple_count": report.tuple_count,
        "family_count": report.family_count,
        "surviving_families": len(survivors),
        "all_fano": bool(fano_flags) and all(fano_flags),
        "exhibit": [c.to_json() for c in exhibit],
        "slot_feasibility": [f.slot_feasibility for f in survivors],
    }
    if n == 7:
        six = n_minus_one_exhibit(7)
        details["disjoint_six_tuple"] = [c.to_json() for c in six]
        ok_exhibit = ok_exhibit and all(
            pair(x, y) == 0 for x, y in itertools.combinations(six, 2)
        )
    passed = bool(survivors) and all(fano_flags) and ok_exhibit
    notes.append(
        "survivors obstructed by the non-realizability of the Fano plane "
        "by symplectic spheres (external input)"
    )
    return DisjointLimitReport(n, passed, details, notes)


def _find_orthogonal_roots(reps, size):
    """Backtracking search for a pairwise-orthogonal subset of given size."""
    n = len(reps)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if pair(reps[i], reps[j]) == 0:
                adj[i] |= 1 << j

    best: list = []

    def rec(cand, chosen):
        if len(chosen) == size:
            best.extend(chosen)
            return True
        while cand:
            if cand.bit_count() + len(chosen) < size:
                return False
            low = cand & -cand
            i = low.bit_length() - 1
            cand ^= low
            chosen.append(i)
            if rec(cand & adj[i], chosen):
                return True
            chosen.pop()
        return False

    rec((1 << n) - 1, [])
    return [reps[i] for i in best]
