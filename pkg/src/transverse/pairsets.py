"""Dense subsets of F_p^{n1} x F_p^{n2} and their one-sided sumset calculus.

A pair (x, y) occupies bit ``x_index + p**n1 * y_index`` of an arbitrary
precision integer, so set algebra is plain bitwise arithmetic and the
vertical / horizontal sumsets reduce to per-fiber index-table lookups.

Vertical operations fix the first coordinate and combine the second ones;
horizontal operations do the opposite.  A set A is transverse when
A +V A = A and A +H A = A.  Equivalently (and this is what the fiberwise
test checks) every vertical fiber is empty or a subspace contained in the
fiber over 0, fibers are constant on projective classes, and the fiber over
any point of the projective line through [x] and [y] contains the
intersection of the fibers over [x] and [y].
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .fpcore import (
    CapExceeded,
    Subspace,
    check_cap,
    decode,
    is_prime,
    span,
    vspace,
)

__all__ = [
    "FiberMap",
    "NotTransverseError",
    "PairSet",
    "SingleSet",
    "dir_sum",
    "fiber",
    "from_fiber_map",
    "is_transverse",
    "mask_is_subspace",
    "mask_to_subspace",
    "phi",
    "projections",
    "subspace_mask",
    "sumset_word",
    "to_fiber_map",
    "transversality_violation",
]

VERTICAL = "V"
HORIZONTAL = "H"


class NotTransverseError(ValueError):
    """Raised when an operation needs a transverse set but was given
    something else.  Carries the first violated fiber condition and a
    witness pair of encoded indices."""

    def __init__(self, condition: str, witness):
        super().__init__(f"set is not transverse: {condition} (witness {witness})")
        self.condition = condition
        self.witness = witness


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class SingleSet:
    """A subset of F_p^n as a dense bitset over encoded indices."""

    p: int
    n: int
    indicator: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if not 0 <= self.indicator < 1 << self.p**self.n:
            raise ValueError("indicator out of range")

    @classmethod
    def from_indices(cls, p: int, n: int, indices) -> "SingleSet":
        mask = 0
        for i in indices:
            if not 0 <= i < p**n:
                raise ValueError(f"index {i} out of range")
            mask |= 1 << i
        return cls(p, n, mask)

    @classmethod
    def empty(cls, p: int, n: int) -> "SingleSet":
        return cls(p, n, 0)

    @classmethod
    def full(cls, p: int, n: int) -> "SingleSet":
        return cls(p, n, (1 << p**n) - 1)

    @property
    def size(self) -> int:
        return self.indicator.bit_count()

    @property
    def density(self) -> float:
        return self.size / self.p**self.n

    def indices(self) -> list[int]:
        return list(_iter_bits(self.indicator))

    def members(self) -> list[tuple[int, ...]]:
        return [decode(i, self.p, self.n) for i in self.indices()]

    def contains(self, index: int) -> bool:
        return bool(self.indicator >> index & 1)


def _mask_sum(space, fa: int, fb: int, sign: int) -> int:
    table = space.add if sign > 0 else space.sub
    out = 0
    for i in _iter_bits(fa):
        row = table[i]
        for j in _iter_bits(fb):
            out |= 1 << row[j]
    return out


def _mask_neg(space, f: int) -> int:
    out = 0
    for i in _iter_bits(f):
        out |= 1 << space.neg[i]
    return out


def sumset_word(a: SingleSet, word: str) -> SingleSet:
    """Iterated sumset such as ``"+A+A-A-A"`` (i.e. 2A - 2A), folded left to
    right.  The word must be one or more signed occurrences of the letter A.
    """
    if not re.fullmatch(r"([+-]A)+", word):
        raise ValueError(f"malformed sumset word {word!r}")
    space = vspace(a.p, a.n)
    signs = [1 if s == "+" else -1 for s in word[::2]]
    acc = a.indicator if signs[0] > 0 else _mask_neg(space, a.indicator)
    for s in signs[1:]:
        acc = _mask_sum(space, acc, a.indicator, s)
    return SingleSet(a.p, a.n, acc)


@lru_cache(maxsize=65536)
def subspace_mask(sub: Subspace) -> int:
    mask = 0
    for i in sub.element_indices():
        mask |= 1 << i
    return mask


@lru_cache(maxsize=65536)
def mask_to_subspace(p: int, n: int, mask: int) -> Subspace:
    """Span of the vectors in a bitset, as a canonical Subspace."""
    return span([decode(i, p, n) for i in _iter_bits(mask)], p, n)


def mask_is_subspace(p: int, n: int, mask: int) -> bool:
    """True when the bitset is exactly a linear subspace (nonempty)."""
    if not mask & 1:
        return False
    space = vspace(p, n)
    bits = list(_iter_bits(mask))
    for i in bits:
        row = space.add[i]
        for j in bits:
            if not mask >> row[j] & 1:
                return False
    return True


@dataclass(frozen=True)
class PairSet:
    """A subset of F_p^{n1} x F_p^{n2} as a dense bitset over pair indices."""

    p: int
    n1: int
    n2: int
    indicator: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        total = self.p ** (self.n1 + self.n2)
        if not 0 <= self.indicator < 1 << total:
            raise ValueError("indicator out of range")

    # -- constructors -------------------------------------------------------
    @classmethod
    def from_pairs(cls, p: int, n1: int, n2: int, pairs, override_cap: bool = False) -> "PairSet":
        check_cap(p ** (n1 + n2), override_cap, "pair space")
        m1, m2 = p**n1, p**n2
        mask = 0
        for xi, yi in pairs:
            if not (0 <= xi < m1 and 0 <= yi < m2):
                raise ValueError(f"pair index ({xi}, {yi}) out of range")
            mask |= 1 << (xi + m1 * yi)
        return cls(p, n1, n2, mask)

    @classmethod
    def empty(cls, p: int, n1: int, n2: int) -> "PairSet":
        return cls(p, n1, n2, 0)

    @classmethod
    def full(cls, p: int, n1: int, n2: int) -> "PairSet":
        return cls(p, n1, n2, (1 << p ** (n1 + n2)) - 1)

    # -- basic queries ------------------------------------------------------
    @property
    def size(self) -> int:
        return self.indicator.bit_count()

    @property
    def density(self) -> float:
        return self.size / self.p ** (self.n1 + self.n2)

    def pair_indices(self) -> list[tuple[int, int]]:
        """Member pairs as (x_index, y_index), ascending in pair index."""
        m1 = self.p**self.n1
        return [(i % m1, i // m1) for i in _iter_bits(self.indicator)]

    def members(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        return [
            (decode(xi, self.p, self.n1), decode(yi, self.p, self.n2))
            for xi, yi in self.pair_indices()
        ]

    def contains(self, x_index: int, y_index: int) -> bool:
        return bool(self.indicator >> (x_index + self.p**self.n1 * y_index) & 1)

    def _replace(self, indicator: int) -> "PairSet":
        return PairSet(self.p, self.n1, self.n2, indicator)

    # -- set algebra --------------------------------------------------------
    def __or__(self, other: "PairSet") -> "PairSet":
        self._compat(other)
        return self._replace(self.indicator | other.indicator)

    def __and__(self, other: "PairSet") -> "PairSet":
        self._compat(other)
        return self._replace(self.indicator & other.indicator)

    def __sub__(self, other: "PairSet") -> "PairSet":
        self._compat(other)
        return self._replace(self.indicator & ~other.indicator)

    def _compat(self, other: "PairSet") -> None:
        if (self.p, self.n1, self.n2) != (other.p, other.n1, other.n2):
            raise ValueError("pair sets live in different spaces")

    # -- fibers -------------------------------------------------------------
    def vertical_fibers(self) -> list[int]:
        """Bitset over y-indices for each x index (fiber of the map x -> A_x)."""
        m1 = self.p**self.n1
        fibers = [0] * m1
        for i in _iter_bits(self.indicator):
            fibers[i % m1] |= 1 << i // m1
        return fibers

    def horizontal_fibers(self) -> list[int]:
        m1, m2 = self.p**self.n1, self.p**self.n2
        low = (1 << m1) - 1
        return [(self.indicator >> (y * m1)) & low for y in range(m2)]


def _scatter_vertical(fibers: list[int], m1: int) -> int:
    out = 0
    for x, f in enumerate(fibers):
        for y in _iter_bits(f):
            out |= 1 << (x + m1 * y)
    return out


def dir_sum(a: PairSet, b: PairSet, direction: str, sign=1) -> PairSet:
    """One-sided sumset.

    Vertical: {(x, y1 +/- y2) : (x, y1) in A, (x, y2) in B}.
    Horizontal: {(x1 +/- x2, y) : (x1, y) in A, (x2, y) in B}.
    """
    a._compat(b)
    sgn = {1: 1, -1: -1, "+": 1, "-": -1}.get(sign)
    if sgn is None:
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    m1 = a.p**a.n1
    if direction == VERTICAL:
        space = vspace(a.p, a.n2)
        fa, fb = a.vertical_fibers(), b.vertical_fibers()
        out = [_mask_sum(space, x, y, sgn) if x and y else 0 for x, y in zip(fa, fb)]
        return a._replace(_scatter_vertical(out, m1))
    if direction == HORIZONTAL:
        space = vspace(a.p, a.n1)
        fa, fb = a.horizontal_fibers(), b.horizontal_fibers()
        mask = 0
        for y, (x1, x2) in enumerate(zip(fa, fb)):
            if x1 and x2:
                mask |= _mask_sum(space, x1, x2, sgn) << (y * m1)
        return a._replace(mask)
    raise ValueError(f"direction must be 'V' or 'H', got {direction!r}")


def phi(a: PairSet, word: str) -> PairSet:
    """Composition of Bogolyubov operators, applied right to left.

    phi_V(A) = (A +V A) -V (A +V A), phi_H likewise; ``phi(A, "HV")`` is
    phi_H(phi_V(A)).
    """
    if not word or any(c not in "VH" for c in word):
        raise ValueError(f"operator word must be nonempty over {{V,H}}, got {word!r}")
    for c in reversed(word):
        s = dir_sum(a, a, c, 1)
        a = dir_sum(s, s, c, -1)
    return a


def fiber(a: PairSet, direction: str, at: int) -> SingleSet:
    """The fiber over one point: vertical gives {y : (x, y) in A} at x = at."""
    if direction == VERTICAL:
        return SingleSet(a.p, a.n2, a.vertical_fibers()[at])
    if direction == HORIZONTAL:
        return SingleSet(a.p, a.n1, a.horizontal_fibers()[at])
    raise ValueError(f"direction must be 'V' or 'H', got {direction!r}")


def projections(a: PairSet) -> tuple[SingleSet, SingleSet]:
    """Images of A under the two coordinate projections."""
    m1 = a.p**a.n1
    pi1 = 0
    pi2 = 0
    for i in _iter_bits(a.indicator):
        pi1 |= 1 << i % m1
        pi2 |= 1 << i // m1
    return SingleSet(a.p, a.n1, pi1), SingleSet(a.p, a.n2, pi2)


# ---------------------------------------------------------------------------
# Transversality.


def transversality_violation(a: PairSet, mode: str = "fiberwise"):
    """None when transverse; otherwise (condition, (x_index, y_index)).

    Fiberwise mode checks, in order: every nonempty vertical fiber is a
    subspace contained in the fiber over 0; fibers agree on projective
    classes; the line condition.  Direct mode compares A +V A and A +H A
    against A and reports the smallest disagreeing pair.
    """
    if mode == "direct":
        for d in (VERTICAL, HORIZONTAL):
            s = dir_sum(a, a, d, 1)
            delta = s.indicator ^ a.indicator
            if delta:
                i = (delta & -delta).bit_length() - 1
                m1 = a.p**a.n1
                return (f"A +{d} A differs from A", (i % m1, i // m1))
        return None
    if mode != "fiberwise":
        raise ValueError(f"mode must be 'direct' or 'fiberwise', got {mode!r}")

    sp1 = vspace(a.p, a.n1)
    sp2 = vspace(a.p, a.n2)
    fibers = a.vertical_fibers()
    f0 = fibers[0]
    for x, f in enumerate(fibers):
        if not f:
            continue
        if not f & 1:
            return ("nonempty vertical fiber misses 0", (x, 0))
        bits = list(_iter_bits(f))
        for i in bits:
            row = sp2.add[i]
            for j in bits:
                if not f >> row[j] & 1:
                    return ("vertical fiber is not a subspace", (x, row[j]))
        extra = f & ~f0
        if extra:
            return ("vertical fiber not contained in the fiber over 0",
                    (x, (extra & -extra).bit_length() - 1))
    for cid, members in enumerate(sp1.class_members):
        rep = sp1.proj_reps[cid]
        for m in members:
            delta = fibers[m] ^ fibers[rep]
            if delta:
                return ("fibers differ within a projective class",
                        (m, (delta & -delta).bit_length() - 1))
    reps = sp1.proj_reps
    for ia, ra in enumerate(reps):
        fa = fibers[ra]
        if not fa:
            continue
        for rb in reps[ia + 1:]:
            inter = fa & fibers[rb]
            if not inter:
                continue
            for lam in range(1, a.p):
                z = sp1.add[ra][sp1.scale[lam][rb]]
                missing = inter & ~fibers[z]
                if missing:
                    return ("line condition fails",
                            (z, (missing & -missing).bit_length() - 1))
    return None


def is_transverse(a: PairSet, mode: str = "fiberwise") -> bool:
    """Whether A +V A = A +H A = A.  The empty set counts as transverse."""
    return transversality_violation(a, mode) is None


# ---------------------------------------------------------------------------
# Fiber-map form of a transverse set.


@dataclass(frozen=True)
class FiberMap:
    """A transverse set presented by its vertical fibers: one subspace for
    the fiber over 0, and per projective class of the first factor either a
    subspace (shared by all nonzero multiples) or None for an empty fiber.

    Every non-None fiber must sit inside fiber0; class order follows the
    ascending-index enumeration of projective points.
    """

    p: int
    n1: int
    n2: int
    fiber0: Subspace
    fibers: tuple

    def __post_init__(self) -> None:
        if self.fiber0.p != self.p or self.fiber0.ambient != self.n2:
            raise ValueError("fiber0 lives in the wrong space")
        reps = vspace(self.p, self.n1).proj_reps
        if len(self.fibers) != len(reps):
            raise ValueError(
                f"need one fiber per projective class ({len(reps)}), got {len(self.fibers)}"
            )
        for f in self.fibers:
            if f is None:
                continue
            if f.p != self.p or f.ambient != self.n2:
                raise ValueError("class fiber lives in the wrong space")
            if not self.fiber0.contains(f):
                raise ValueError("class fiber is not contained in fiber0")


def to_fiber_map(a: PairSet) -> FiberMap:
    """Fiber presentation of a nonempty transverse set.

    Raises NotTransverseError naming the violated condition otherwise.
    """
    if not a.indicator:
        raise NotTransverseError("empty set has no fiber map", None)
    bad = transversality_violation(a, "fiberwise")
    if bad is not None:
        raise NotTransverseError(*bad)
    fibers = a.vertical_fibers()
    sub0 = mask_to_subspace(a.p, a.n2, fibers[0])
    out = []
    for rep in vspace(a.p, a.n1).proj_reps:
        f = fibers[rep]
        out.append(mask_to_subspace(a.p, a.n2, f) if f else None)
    return FiberMap(a.p, a.n1, a.n2, sub0, tuple(out))


def from_fiber_map(fm: FiberMap, override_cap: bool = False) -> PairSet:
    """Realize a fiber map as a PairSet.  The result always satisfies the
    subspace-fiber and class-constancy conditions but need not be transverse:
    the line condition is the caller's concern."""
    check_cap(fm.p ** (fm.n1 + fm.n2), override_cap, "pair space")
    sp1 = vspace(fm.p, fm.n1)
    m1 = fm.p**fm.n1
    mask = 0
    for yi in fm.fiber0.element_indices():
        mask |= 1 << (0 + m1 * yi)
    for cid, f in enumerate(fm.fibers):
        if f is None:
            continue
        ys = f.element_indices()
        for x in sp1.class_members[cid]:
            for yi in ys:
                mask |= 1 << (x + m1 * yi)
    return PairSet(fm.p, fm.n1, fm.n2, mask)
