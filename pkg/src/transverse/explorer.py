"""Exhaustive sweeps over small parameter spaces: every claim the library
makes about transverse and bilinear sets at desk scale is re-checked here by
brute force, candidate by candidate.

Each sweep walks a canonically ranked candidate space (subset indicator,
lexicographic permutation rank, mixed-radix fiber/digit index), so the work
can be split into contiguous rank ranges and merged back in rank order.  A
SweepReport's digestable content is a function of the parameters alone;
wall time and worker count are carried only as metadata, and a sweep run
with 1 worker is bit-for-bit the same report as with 8.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .bilinear import FormSpace, ann, is_bilinear, orth
from .constructions import ProjBijection, build_P_sigma, build_P_xi
from .detrng import SplitMix64, exchange_shuffle
from .fpcore import (
    CapExceeded,
    Subspace,
    all_subspaces,
    check_cap,
    decode,
    proj_enumerate,
    vspace,
)
from .pairsets import (
    PairSet,
    SingleSet,
    phi,
    subspace_mask,
    sumset_word,
    transversality_violation,
)
from .projgeom import ProjMap, _line_condition, line_structure, recognize_projective

__all__ = [
    "BogolyubovReport",
    "ClassificationError",
    "SweepReport",
    "bogolyubov_explore",
    "classify_hyperplane_fibers",
    "contains_bilinear",
    "exhaustive_subset_sweep",
    "fundamental_sweep",
    "perm_rank",
    "perm_unrank",
    "search_sigma",
    "subspace_in_sumset",
    "verify_collineation_lemma",
    "xi_line_sweep",
]


class ClassificationError(RuntimeError):
    """A hyperplane-fiber transverse set fit none of the three alternatives."""


@dataclass
class SweepReport:
    """Outcome of one sweep: verdict counts plus a short, rank-sorted list
    of witness records.  `ok` is the sweep's headline claim."""

    kind: str
    parameters: dict
    counts: dict
    witnesses: list
    ok: bool
    wall_time: float = 0.0
    workers: int = 1

    def canonical(self) -> dict:
        """The parameter-determined content.  Wall time and worker count are
        excluded on purpose: equal parameters must serialize equally."""
        return {
            "kind": self.kind,
            "parameters": self.parameters,
            "payload": {
                "counts": self.counts,
                "ok": self.ok,
                "witnesses": self.witnesses,
            },
        }


# ------------------------------------------------------------------ engine


def _ranges(total: int, jobs: int) -> list[tuple[int, int]]:
    jobs = max(1, jobs)
    size, extra = divmod(total, jobs)
    out, lo = [], 0
    for i in range(jobs):
        hi = lo + size + (1 if i < extra else 0)
        if hi > lo:
            out.append((lo, hi))
        lo = hi
    return out


def _map_ranges(worker, args: tuple, total: int, jobs: int) -> list:
    """Partial results for contiguous rank ranges, merged in rank order."""
    ranges = _ranges(total, jobs)
    if jobs <= 1 or len(ranges) <= 1:
        return [worker(args, lo, hi) for lo, hi in ranges]
    with ProcessPoolExecutor(max_workers=len(ranges)) as pool:
        futures = [pool.submit(worker, args, lo, hi) for lo, hi in ranges]
        return [f.result() for f in futures]


def _merge(parts: list) -> tuple[dict, list]:
    counts: dict = {}
    witnesses: list = []
    for c, w in parts:
        for key, val in c.items():
            counts[key] = counts.get(key, 0) + val
        witnesses.extend(w)
    return counts, witnesses


def perm_unrank(rank: int, n: int) -> tuple[int, ...]:
    """The permutation of range(n) with the given lexicographic rank."""
    total = math.factorial(n)
    if not 0 <= rank < total:
        raise ValueError(f"rank must lie in [0, {total}), got {rank}")
    avail = list(range(n))
    out = []
    f = total
    for i in range(n, 0, -1):
        f //= i
        d, rank = divmod(rank, f)
        out.append(avail.pop(d))
    return tuple(out)


def perm_rank(perm) -> int:
    """Lexicographic rank of a permutation of range(len(perm))."""
    n = len(perm)
    avail = list(range(n))
    f = math.factorial(n)
    rank = 0
    for i, v in enumerate(perm):
        f //= n - i
        j = avail.index(v)
        rank += j * f
        avail.pop(j)
    return rank


def _npoints(p: int, n: int) -> int:
    return (p**n - 1) // (p - 1)


# ------------------------------------------------- (2,2) full powerset sweep


@lru_cache(maxsize=4)
def _bilinear_family(p: int, n: int) -> frozenset:
    """Indicator masks of every set {(x,y) in W1 x W2 : all forms of M vanish},
    enumerated directly from subspace pairs and flattened form subspaces.
    Deliberately avoids the ann/orth machinery so it can sit on the other
    side of an agreement check with is_bilinear."""
    m1 = p**n
    outer = {}
    for x in range(m1):
        xs = decode(x, p, n)
        for y in range(m1):
            ys = decode(y, p, n)
            outer[x, y] = tuple(a * b % p for a in xs for b in ys)
    subs = all_subspaces(p, n)
    members = {s: s.element_indices() for s in subs}
    form_subs = all_subspaces(p, n * n)
    masks = set()
    for w1 in subs:
        for w2 in subs:
            grid = [(x, y) for x in members[w1] for y in members[w2]]
            for fs in form_subs:
                mask = 0
                for x, y in grid:
                    o = outer[x, y]
                    if all(sum(f * c for f, c in zip(row, o)) % p == 0 for row in fs.basis):
                        mask |= 1 << (x + m1 * y)
                masks.add(mask)
    return frozenset(masks)


def _subset_range(args: tuple, lo: int, hi: int):
    p, n = args
    family = _bilinear_family(p, n)
    counts = {
        "subsets": hi - lo,
        "transverse_nonempty": 0,
        "transverse_empty": 0,
        "transverse_bilinear": 0,
        "transverse_non_bilinear": 0,
        "bilinear_sets": 0,
        "oracle_mismatch": 0,
    }
    witnesses = []
    for mask in range(lo, hi):
        s = PairSet(p, n, n, mask)
        verdict_bilinear = is_bilinear(s).status == "bilinear"
        counts["bilinear_sets"] += verdict_bilinear
        if verdict_bilinear != (mask in family):
            counts["oracle_mismatch"] += 1
            if len(witnesses) < 8:
                witnesses.append(["oracle_mismatch", mask])
        if mask == 0:
            counts["transverse_empty"] += 1
            continue
        if transversality_violation(s) is None:
            counts["transverse_nonempty"] += 1
            if verdict_bilinear:
                counts["transverse_bilinear"] += 1
            else:
                counts["transverse_non_bilinear"] += 1
                if len(witnesses) < 8:
                    witnesses.append(["transverse_non_bilinear", mask])
    return counts, witnesses


def exhaustive_subset_sweep(p: int, n: int, jobs: int = 1) -> SweepReport:
    """Scan every subset of F_p^n x F_p^n: each one gets an is_bilinear
    verdict cross-checked against direct membership in the enumerated
    bilinear family, and every nonempty transverse subset must be bilinear.
    Only pair spaces of at most 16 points are powerset-enumerable; larger
    parameters go through classify_hyperplane_fibers instead."""
    bits = p ** (2 * n)
    if bits > 16:
        raise CapExceeded(
            f"powerset sweep needs p^2n <= 16 pair-space points, got {bits}"
        )
    t0 = time.perf_counter()
    total = 1 << bits
    parts = _map_ranges(_subset_range, (p, n), total, jobs)
    counts, witnesses = _merge(parts)
    ok = counts["transverse_non_bilinear"] == 0 and counts["oracle_mismatch"] == 0
    return SweepReport(
        kind="exhaustive_subset_sweep",
        parameters={"p": p, "n": n},
        counts=counts,
        witnesses=witnesses,
        ok=ok,
        wall_time=time.perf_counter() - t0,
        workers=jobs,
    )


# ------------------------------------------- hyperplane-fiber classification


def _zero_set_size(p: int, n: int, flat, outer) -> int:
    count = 0
    for o in outer:
        if sum(f * c for f, c in zip(flat, o)) % p == 0:
            count += 1
    return count


def _classify_leaf(p, n, s, f0_full, class_full_mask, rest, full, outer):
    """Alternative number (1, 2 or 3) for one valid hyperplane-fiber set.

    Priority order is 1 -> 2 -> 3; the alternatives overlap (the full space
    satisfies both 1 and 2) and the first match wins.
    """
    m1 = p**n
    # alternative 1: P = W x V2  union  V1 x H, with W read off the fibers
    # ({x : fiber = V2}, empty when the fiber over 0 is already proper).
    if not rest:
        return 1
    h = rest[0]
    if all(r == h for r in rest) and h.bit_count() == p ** (n - 1):
        target = 0
        for x in range(m1):
            fm = full if (class_full_mask >> x) & 1 else h
            for y in range(m1):
                if (fm >> y) & 1:
                    target |= 1 << (x + m1 * y)
        if target == s.indicator:
            return 1
    # alternative 2: the zero set of a single bilinear form.  Forms in the
    # full-ambient annihilator already vanish on P, so equality is a size
    # check; scalar multiples share a zero set, so only normalized
    # representatives are tried.
    space = ann(s)
    if space.dim:
        for flat in _form_reps(space):
            if _zero_set_size(p, n, flat, outer) == s.size:
                return 2
    # alternative 3: the largest W with W x V2 inside P has codimension
    # exactly 2 (only reachable for p >= 5).  That W is {x : fiber = V2}; the
    # line condition makes it a subspace, so its size is a power of p.
    if p >= 5 and f0_full:
        wdim = 0
        while p**wdim < class_full_mask.bit_count():
            wdim += 1
        if n - wdim == 2:
            return 3
    raise ClassificationError(f"set of size {s.size} fits no alternative")


def _form_reps(space: FormSpace):
    """One flattened representative per scalar class of nonzero forms."""
    for mat in space.elements():
        flat = tuple(c for row in mat for c in row)
        lead = next((c for c in flat if c), 0)
        if lead == 1:
            yield flat


def _classify_digits(args: tuple, d_lo: int, d_hi: int):
    """DFS over fiber assignments whose fiber-over-zero digit lies in
    [d_lo, d_hi).  Digits index `options` = [full] + hyperplanes; a full
    assignment is one digit for the zero fiber plus one per projective
    class, pruned by fiber containment and the pairwise line condition."""
    p, n = args
    sp = vspace(p, n)
    k = len(sp.proj_reps)
    m1 = p**n
    full = (1 << m1) - 1
    hyps = all_subspaces(p, n, dim=n - 1)
    options = [full] + [subspace_mask(h) for h in hyps]
    lines, _ = line_structure(p, n)
    lines_with = [[ids for ids in lines if j in ids] for j in range(k)]
    outer = []
    for x in range(m1):
        xs = decode(x, p, n)
        for y in range(m1):
            ys = decode(y, p, n)
            outer.append(tuple(a * b % p for a in xs for b in ys))
    # per-option indicator column for one x, to scatter into the pair mask
    scatter = {fm: sum(1 << (m1 * y) for y in range(m1) if (fm >> y) & 1) for fm in options}
    counts = {
        "valid": 0,
        "alt1": 0,
        "alt2": 0,
        "alt3": 0,
        "bilinear": 0,
        "leaf_rejected": 0,
    }
    fibers = [0] * k

    def leaf(f0):
        mask = scatter[f0]
        for cid in range(k):
            col = scatter[fibers[cid]]
            for x in sp.class_members[cid]:
                mask |= col << x
        s = PairSet(p, n, n, mask)
        if transversality_violation(s) is not None:
            counts["leaf_rejected"] += 1
            return
        counts["valid"] += 1
        f0_full = f0 == full
        if f0_full:
            class_full_mask = 1
            for cid in range(k):
                if fibers[cid] == full:
                    for x in sp.class_members[cid]:
                        class_full_mask |= 1 << x
            rest = [fm for fm in fibers if fm != full]
        else:
            class_full_mask = 0
            rest = list(fibers)
        alt = _classify_leaf(p, n, s, f0_full, class_full_mask, rest, full, outer)
        counts[f"alt{alt}"] += 1
        if is_bilinear(s).status == "bilinear":
            counts["bilinear"] += 1

    def descend(f0, j):
        if j == k:
            leaf(f0)
            return
        for fm in options:
            if fm & ~f0:
                continue
            fibers[j] = fm
            ok = True
            for ids in lines_with[j]:
                placed = [c for c in ids if c <= j]
                for ai in range(len(placed)):
                    for bi in range(ai + 1, len(placed)):
                        inter = fibers[placed[ai]] & fibers[placed[bi]]
                        if any(inter & ~fibers[c] for c in placed):
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if ok:
                descend(f0, j + 1)

    for d0 in range(d_lo, d_hi):
        descend(options[d0], 0)
    return counts, []


def classify_hyperplane_fibers(
    p: int, n: int, jobs: int = 1, override_cap: bool = False
) -> SweepReport:
    """Enumerate every fiber map whose fibers are hyperplanes or the full
    space, keep the transverse ones, and sort each into one of the three
    alternatives: (1) W x V2 union V1 x H, (2) the zero set of a single
    bilinear form, (3) p >= 5 with the maximal W x V2 slab of codimension
    exactly 2.  A set fitting no alternative raises ClassificationError."""
    t0 = time.perf_counter()
    k = _npoints(p, n)
    n_options = 1 + _npoints(p, n)  # full plus one hyperplane per functional class
    check_cap(n_options ** (k + 1), override_cap, "fiber-map enumeration")
    parts = _map_ranges(_classify_digits, (p, n), n_options, jobs)
    counts, witnesses = _merge(parts)
    counts["raw"] = n_options ** (k + 1)
    counts["rejected"] = counts["raw"] - counts["valid"]
    classified = counts["alt1"] + counts["alt2"] + counts["alt3"]
    ok = (
        counts["leaf_rejected"] == 0
        and classified == counts["valid"]
        and (p >= 5 or (counts["alt3"] == 0 and counts["bilinear"] == counts["valid"]))
    )
    return SweepReport(
        kind="classify_hyperplane_fibers",
        parameters={"p": p, "n": n},
        counts=counts,
        witnesses=witnesses,
        ok=ok,
        wall_time=time.perf_counter() - t0,
        workers=jobs,
    )


# --------------------------------------------------------------- sigma sweep


def _sigma_range(args: tuple, lo: int, hi: int):
    p, n, tables = args
    pts = proj_enumerate(p, n)
    k = len(pts)
    counts = {
        "candidates": hi - lo,
        "non_bilinear": 0,
        "bilinear": 0,
        "projective": 0,
        "projective_non_bilinear": 0,
    }
    witnesses = []
    for rank in range(lo, hi):
        table = tables[rank] if tables is not None else perm_unrank(rank, k)
        sigma = ProjBijection(p, n, n, tuple(pts[i] for i in table))
        verdict = is_bilinear(build_P_sigma(sigma))
        hit = verdict.status == "non_bilinear"
        projective = recognize_projective(sigma) is not None
        counts["non_bilinear" if hit else "bilinear"] += 1
        counts["projective"] += projective
        if projective and hit:
            counts["projective_non_bilinear"] += 1
            witnesses.append(["projective_non_bilinear", rank])
        elif hit and len(witnesses) < 16:
            wit = list(verdict.witness) if verdict.witness is not None else None
            witnesses.append([rank, wit])
    return counts, witnesses


def search_sigma(
    p: int,
    n: int,
    mode: str = "exhaustive",
    samples: int | None = None,
    seed: int | None = None,
    jobs: int = 1,
    override_cap: bool = False,
) -> SweepReport:
    """Sweep projective permutations sigma and test each span set P_sigma for
    bilinearity.  Exhaustive mode ranks all k! permutations lexicographically;
    samples mode draws `samples` seeded permutations instead.  Projective
    sigma must never produce a non-bilinear set."""
    t0 = time.perf_counter()
    k = _npoints(p, n)
    if mode == "exhaustive":
        total = math.factorial(k)
        check_cap(total, override_cap, "permutation sweep")
        tables = None
        parameters = {"p": p, "n": n, "mode": "exhaustive"}
    elif mode == "samples":
        if samples is None or seed is None:
            raise ValueError("samples mode needs both a sample count and a seed")
        rng = SplitMix64(seed)
        drawn = []
        for _ in range(samples):
            table = list(range(k))
            exchange_shuffle(table, rng)
            drawn.append(tuple(table))
        tables = tuple(drawn)
        total = samples
        parameters = {"p": p, "n": n, "mode": "samples", "samples": samples, "seed": seed}
    else:
        raise ValueError(f"mode must be 'exhaustive' or 'samples', got {mode!r}")
    parts = _map_ranges(_sigma_range, (p, n, tables), total, jobs)
    counts, witnesses = _merge(parts)
    ok = counts["projective_non_bilinear"] == 0
    return SweepReport(
        kind="search_sigma",
        parameters=parameters,
        counts=counts,
        witnesses=witnesses[:16],
        ok=ok,
        wall_time=time.perf_counter() - t0,
        workers=jobs,
    )


# --------------------------------------------------------- collineation sweep


def _collineation_range(args: tuple, lo: int, hi: int):
    p, n_dom, n_cod = args
    kd = _npoints(p, n_dom)
    kc = _npoints(p, n_cod)
    lines, _ = line_structure(p, n_dom)
    _, cod_span = line_structure(p, n_cod)
    counts = {
        "maps": hi - lo,
        "line_condition": 0,
        "constant": 0,
        "injective": 0,
        "violations": 0,
    }
    witnesses = []
    digits = [0] * kd
    r = lo
    for i in range(kd - 1, -1, -1):
        r, digits[i] = divmod(r, kc)
    for rank in range(lo, hi):
        passes = True
        for ids in lines:
            npts = len(ids)
            for i in range(npts):
                ci = digits[ids[i]]
                for j in range(i + 1, npts):
                    mask = cod_span[ci][digits[ids[j]]]
                    for t in range(npts):
                        if t != i and t != j and not mask >> digits[ids[t]] & 1:
                            passes = False
                            break
                    if not passes:
                        break
                if not passes:
                    break
            if not passes:
                break
        if passes:
            counts["line_condition"] += 1
            distinct = len(set(digits))
            if distinct == 1:
                counts["constant"] += 1
            elif distinct == kd:
                counts["injective"] += 1
            else:
                counts["violations"] += 1
                if len(witnesses) < 8:
                    witnesses.append([rank, list(digits)])
        # odometer step to the next mixed-radix map table
        i = kd - 1
        while i >= 0:
            digits[i] += 1
            if digits[i] < kc:
                break
            digits[i] = 0
            i -= 1
    return counts, witnesses


def verify_collineation_lemma(
    p: int, n_dom: int, n_cod: int, jobs: int = 1, override_cap: bool = False
) -> SweepReport:
    """Enumerate every total map between projective point sets and check that
    the ones satisfying the line condition are constant or injective."""
    t0 = time.perf_counter()
    kd = _npoints(p, n_dom)
    kc = _npoints(p, n_cod)
    total = kc**kd
    check_cap(total, override_cap, "total-map enumeration")
    parts = _map_ranges(_collineation_range, (p, n_dom, n_cod), total, jobs)
    counts, witnesses = _merge(parts)
    return SweepReport(
        kind="verify_collineation_lemma",
        parameters={"p": p, "n_dom": n_dom, "n_cod": n_cod},
        counts=counts,
        witnesses=witnesses,
        ok=counts["violations"] == 0,
        wall_time=time.perf_counter() - t0,
        workers=jobs,
    )


# ---------------------------------------------------------- fundamental sweep


def _fundamental_range(args: tuple, lo: int, hi: int):
    p, n = args
    pts = proj_enumerate(p, n)
    k = len(pts)
    counts = {
        "permutations": hi - lo,
        "line_preserving": 0,
        "projective": 0,
        "violations": 0,
    }
    witnesses = []
    for rank in range(lo, hi):
        table = perm_unrank(rank, k)
        preserving = _line_condition(p, n, n, table)
        images = tuple(pts[i] for i in table)
        projective = recognize_projective(ProjMap(p, n, n, images)) is not None
        counts["line_preserving"] += preserving
        counts["projective"] += projective
        if preserving != projective:
            counts["violations"] += 1
            if len(witnesses) < 8:
                witnesses.append([rank, list(table)])
    return counts, witnesses


def fundamental_sweep(p: int, n: int, jobs: int = 1, override_cap: bool = False) -> SweepReport:
    """Check, permutation by permutation, that line-preserving and projective
    coincide on P(F_p^n).  Needs dimension >= 3: on a projective line the
    line condition is vacuous and the equivalence genuinely fails."""
    if n < 3:
        raise ValueError("the line-preserving/projective equivalence needs n >= 3")
    t0 = time.perf_counter()
    k = _npoints(p, n)
    total = math.factorial(k)
    check_cap(total, override_cap, "permutation sweep")
    parts = _map_ranges(_fundamental_range, (p, n), total, jobs)
    counts, witnesses = _merge(parts)
    return SweepReport(
        kind="fundamental_sweep",
        parameters={"p": p, "n": n},
        counts=counts,
        witnesses=witnesses,
        ok=counts["violations"] == 0,
        wall_time=time.perf_counter() - t0,
        workers=jobs,
    )


# ----------------------------------------------------------------- xi sweep


def _xi_range(args: tuple, lo: int, hi: int):
    (p,) = args
    pts = proj_enumerate(p, 2)
    k = len(pts)
    w = Subspace.zero(p, 2)
    line = Subspace.full(p, 2)
    counts = {
        "bijections": hi - lo,
        "projective": 0,
        "projective_bilinear": 0,
        "non_projective": 0,
        "non_projective_non_bilinear": 0,
        "non_projective_ann_zero": 0,
        "violations": 0,
    }
    witnesses = []
    for rank in range(lo, hi):
        table = perm_unrank(rank, k)
        xi = ProjBijection(p, 2, 2, tuple(pts[i] for i in table))
        verdict = is_bilinear(build_P_xi(w, line, xi))
        bilinear = verdict.status == "bilinear"
        if recognize_projective(xi) is not None:
            counts["projective"] += 1
            counts["projective_bilinear"] += bilinear
            if not bilinear:
                counts["violations"] += 1
                witnesses.append(["projective_not_bilinear", rank])
        else:
            counts["non_projective"] += 1
            counts["non_projective_non_bilinear"] += not bilinear
            counts["non_projective_ann_zero"] += verdict.r3 == 0
            if bilinear or verdict.r3 != 0:
                counts["violations"] += 1
                if len(witnesses) < 8:
                    witnesses.append(["non_projective_bilinear", rank])
    return counts, witnesses


def xi_line_sweep(p: int, jobs: int = 1, override_cap: bool = False) -> SweepReport:
    """All bijections xi' of the projective line P(F_p^2), each driving the
    hyperplane-fiber set with W = {0}: projective xi' must give bilinear
    sets, non-projective xi' must give trivial annihilator and a
    non-bilinear verdict."""
    t0 = time.perf_counter()
    k = _npoints(p, 2)
    total = math.factorial(k)
    check_cap(total, override_cap, "line-bijection sweep")
    parts = _map_ranges(_xi_range, (p,), total, jobs)
    counts, witnesses = _merge(parts)
    return SweepReport(
        kind="xi_line_sweep",
        parameters={"p": p},
        counts=counts,
        witnesses=witnesses,
        ok=counts["violations"] == 0,
        wall_time=time.perf_counter() - t0,
        workers=jobs,
    )


# ------------------------------------------------- sumset / phi exploration


def contains_bilinear(t: PairSet, w1: Subspace, w2: Subspace, m: FormSpace) -> bool:
    """Whether the common zero set of m inside w1 x w2 sits inside t."""
    return orth(m, w1, w2).indicator & ~t.indicator == 0


@dataclass
class BogolyubovReport:
    """phi-image of a set together with the best bilinear triple found
    inside it (largest w1 + w2 dimension, then fewest forms)."""

    word: str
    image: PairSet
    w1: Subspace | None
    w2: Subspace | None
    forms: FormSpace | None
    found: bool


def bogolyubov_explore(
    a: PairSet, word: str = "HVH", max_form_dim: int = 2, override_cap: bool = False
) -> BogolyubovReport:
    """Compute the phi-image of `a` for the given operator word and search it
    for a contained bilinear set: all (w1, w2) subspace pairs in decreasing
    total dimension, then form subspaces of dimension up to max_form_dim."""
    t = phi(a, word)
    p, n1, n2 = a.p, a.n1, a.n2
    subs1 = all_subspaces(p, n1, override_cap=override_cap)
    subs2 = all_subspaces(p, n2, override_cap=override_cap)
    check_cap(len(subs1) * len(subs2), override_cap, "subspace-pair search")
    pairs = sorted(
        ((w1, w2) for w1 in subs1 for w2 in subs2),
        key=lambda ws: -(ws[0].dim + ws[1].dim),
    )
    for w1, w2 in pairs:
        width = w1.dim * w2.dim
        if width == 0:
            candidates = [FormSpace(p, w1.dim, w2.dim, ())]
        else:
            candidates = []
            for d in range(0, min(max_form_dim, width) + 1):
                candidates.extend(
                    FormSpace(p, w1.dim, w2.dim,
                              tuple(FormSpace._reshape(r, w2.dim) for r in fs.basis))
                    for fs in all_subspaces(p, width, dim=d, override_cap=override_cap)
                )
        for m in candidates:
            if contains_bilinear(t, w1, w2, m):
                return BogolyubovReport(word, t, w1, w2, m, True)
    return BogolyubovReport(word, t, None, None, None, False)


def subspace_in_sumset(a: SingleSet, codim_max: int) -> Subspace | None:
    """A maximal-dimension subspace of codimension <= codim_max contained in
    2A - 2A, or None when no such subspace exists."""
    t = sumset_word(a, "+A+A-A-A")
    tm = t.indicator
    for dim in range(a.n, max(a.n - codim_max, 0) - 1, -1):
        for s in all_subspaces(a.p, a.n, dim=dim):
            if subspace_mask(s) & ~tm == 0:
                return s
    return None
