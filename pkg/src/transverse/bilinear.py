"""Annihilators, bilinear closure and the bilinearity verdict.

A set is bilinear when it is cut out inside W1 x W2 by bilinear forms
(linear conditions are the rank-one special case once W1 and W2 absorb the
purely linear constraints).  The decision procedure is a Galois round trip:
take the annihilator of the set over the spans of its projections, take the
joint zero set of that annihilator, and compare with the original set.

Annihilator form spaces are stored in the coordinates of the two reference
subspaces: a form is a (dim w1) x (dim w2) matrix evaluated on RREF
coordinates.  When w1 and w2 are the full ambient spaces this is the usual
matrix of the form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .fpcore import MatP, Subspace, VecP, is_prime, rref, rref_kernel, vspace
from .pairsets import PairSet, mask_to_subspace, projections, subspace_mask

__all__ = [
    "BilinearForm",
    "BilinearVerdict",
    "ClosureResult",
    "FormSpace",
    "ann",
    "closure",
    "eval_form",
    "is_bilinear",
    "orth",
]


@dataclass(frozen=True)
class BilinearForm:
    """A bilinear form F_p^{n1} x F_p^{n2} -> F_p as an n1-by-n2 matrix."""

    p: int
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        rows = tuple(tuple(c % self.p for c in r) for r in self.matrix)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged form matrix")
        object.__setattr__(self, "matrix", rows)

    @property
    def n1(self) -> int:
        return len(self.matrix)

    @property
    def n2(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0


def eval_form(q: BilinearForm, x: VecP, y: VecP) -> int:
    """Q(x, y) = sum_ij x_i Q_ij y_j mod p."""
    if x.p != q.p or y.p != q.p or x.n != q.n1 or y.n != q.n2:
        raise ValueError("dimension or field mismatch")
    return sum(
        xi * sum(qij * yj for qij, yj in zip(row, y.coords))
        for xi, row in zip(x.coords, q.matrix)
    ) % q.p


def _eval_coords(mat, a, b, p: int) -> int:
    return sum(
        ai * sum(qij * bj for qij, bj in zip(row, b))
        for ai, row in zip(a, mat)
    ) % p


@dataclass(frozen=True)
class FormSpace:
    """A linear space of bilinear forms on coordinate space d1 x d2, stored
    through a canonical basis: the RREF of the row-major flattened matrices."""

    p: int
    n1: int
    n2: int
    basis: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        flat = [self._flatten(m) for m in self.basis]
        reduced, _ = rref(flat, self.p)
        if [list(f) for f in flat] != reduced:
            raise ValueError("form basis is not canonical (flattened RREF)")
        for m in self.basis:
            if len(m) != self.n1 or any(len(r) != self.n2 for r in m):
                raise ValueError("form matrix has the wrong shape")

    def _flatten(self, m) -> tuple[int, ...]:
        return tuple(c for row in m for c in row)

    @classmethod
    def from_matrices(cls, p: int, n1: int, n2: int, mats) -> "FormSpace":
        flat = [tuple(c % p for row in m for c in row) for m in mats]
        for f in flat:
            if len(f) != n1 * n2:
                raise ValueError("form matrix has the wrong shape")
        reduced, _ = rref(flat, p)
        return cls(p, n1, n2, tuple(cls._reshape(r, n2) for r in reduced))

    @staticmethod
    def _reshape(flat, n2: int):
        if n2 == 0:
            return ()
        return tuple(tuple(flat[i : i + n2]) for i in range(0, len(flat), n2))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def elements(self) -> list[tuple[tuple[int, ...], ...]]:
        """All p**dim member matrices (small spaces only)."""
        out = []
        for lams in product(range(self.p), repeat=self.dim):
            acc = [[0] * self.n2 for _ in range(self.n1)]
            for lam, m in zip(lams, self.basis):
                if lam:
                    for i in range(self.n1):
                        for j in range(self.n2):
                            acc[i][j] = (acc[i][j] + lam * m[i][j]) % self.p
            out.append(tuple(tuple(r) for r in acc))
        return out


@lru_cache(maxsize=4096)
def _coords_table(sub: Subspace) -> dict:
    """index -> RREF coordinates, for every member of the subspace."""
    return dict(
        zip(sub.element_indices(), product(range(sub.p), repeat=sub.dim))
    )


def _coords_in(sub: Subspace, index: int, n: int):
    c = _coords_table(sub).get(index)
    if c is None:
        raise ValueError(
            f"vector with index {index} lies outside the reference subspace"
        )
    return c


def ann(a: PairSet, w1: Subspace | None = None, w2: Subspace | None = None) -> FormSpace:
    """Annihilator of A: all forms on w1 x w2 coordinates vanishing on A.

    Defaults to the full ambient spaces.  A must be contained in w1 x w2.
    Computed as the kernel of the evaluation matrix whose rows are the
    flattened outer products of the coordinate vectors of the members of A
    (duplicate rows dropped).
    """
    w1 = w1 if w1 is not None else Subspace.full(a.p, a.n1)
    w2 = w2 if w2 is not None else Subspace.full(a.p, a.n2)
    if w1.p != a.p or w2.p != a.p or w1.ambient != a.n1 or w2.ambient != a.n2:
        raise ValueError("reference subspaces live in the wrong space")
    d1, d2 = w1.dim, w2.dim
    rows = set()
    for xi, yi in a.pair_indices():
        ca = _coords_in(w1, xi, a.n1)
        cb = _coords_in(w2, yi, a.n2)
        rows.add(tuple(ai * bj % a.p for ai in ca for bj in cb))
    if not rows:
        # empty set: every form vanishes
        mats = [
            tuple(tuple(1 if (i, j) == (r, c) else 0 for j in range(d2)) for i in range(d1))
            for r in range(d1)
            for c in range(d2)
        ]
        return FormSpace.from_matrices(a.p, d1, d2, mats)
    _, kern, _ = rref_kernel(MatP(a.p, tuple(sorted(rows))))
    return FormSpace(a.p, d1, d2, tuple(FormSpace._reshape(b, d2) for b in kern.basis))


@lru_cache(maxsize=4096)
def _member_grid(sub: Subspace):
    return tuple(zip(sub.element_indices(), product(range(sub.p), repeat=sub.dim)))


def orth(m: FormSpace, w1: Subspace, w2: Subspace) -> PairSet:
    """Joint zero set of a form space inside w1 x w2, as an ambient PairSet."""
    if w1.p != m.p or w2.p != m.p or w1.dim != m.n1 or w2.dim != m.n2:
        raise ValueError("form space does not match the reference subspaces")
    p = m.p
    xs = _member_grid(w1)
    ys = _member_grid(w2)
    m1 = p**w1.ambient
    mask = 0
    basis = m.basis
    for xi, ca in xs:
        # partial contractions a^T Q for each basis form
        partials = [
            tuple(sum(ai * row[j] for ai, row in zip(ca, q)) % p for j in range(m.n2))
            for q in basis
        ]
        for yi, cb in ys:
            if all(sum(pj * bj for pj, bj in zip(part, cb)) % p == 0 for part in partials):
                mask |= 1 << (xi + m1 * yi)
    return PairSet(p, w1.ambient, w2.ambient, mask)


@dataclass(frozen=True)
class ClosureResult:
    """Spans of the projections, the annihilator over them, and the closure."""

    w1: Subspace
    w2: Subspace
    ann: FormSpace
    closed: PairSet


def closure(a: PairSet) -> ClosureResult:
    """Bilinear closure: orth(ann(A)) over the spans of the projections.

    Extensive (A is always contained in the result, and the result always
    contains (0,0)) and idempotent; A is bilinear iff it equals its closure
    and its projections are subspaces.
    """
    pi1, pi2 = projections(a)
    w1 = mask_to_subspace(a.p, a.n1, pi1.indicator)
    w2 = mask_to_subspace(a.p, a.n2, pi2.indicator)
    m = ann(a, w1, w2)
    closed = orth(m, w1, w2)
    return ClosureResult(w1, w2, m, closed)


@dataclass(frozen=True)
class BilinearVerdict:
    """Outcome of the bilinearity decision.

    status is "bilinear", "non_bilinear" or "empty".  w1/w2 are the spans of
    the projections, ann the annihilator over them.  For a non-bilinear set
    either non_subspace_axis names the projection that is not a subspace
    ("first"/"second"), or witness is the smallest-index pair in the closure
    that is missing from the set (often both are available).
    """

    status: str
    w1: Subspace
    w2: Subspace
    ann: FormSpace
    closed: PairSet
    witness: tuple[int, int] | None
    non_subspace_axis: str | None

    @property
    def r1(self) -> int:
        return self.w1.codim

    @property
    def r2(self) -> int:
        return self.w2.codim

    @property
    def r3(self) -> int:
        return self.ann.dim


def is_bilinear(a: PairSet) -> BilinearVerdict:
    """Decide whether A = {(x, y) in W1 x W2 : all forms in M vanish} for
    some subspaces W1, W2 and form space M.

    Any such presentation forces W1 and W2 to be exactly the projections of
    A, so the decision reduces to: both projections are subspaces and A
    equals its bilinear closure.  The empty set gets its own status.
    """
    res = closure(a)
    if not a.indicator:
        return BilinearVerdict("empty", res.w1, res.w2, res.ann, res.closed, None, None)
    pi1, pi2 = projections(a)
    axis = None
    if pi1.indicator != subspace_mask(res.w1):
        axis = "first"
    elif pi2.indicator != subspace_mask(res.w2):
        axis = "second"
    extra = res.closed.indicator & ~a.indicator
    if a.indicator & ~res.closed.indicator:
        raise AssertionError("closure is not extensive; this is a bug")
    witness = None
    if extra:
        i = (extra & -extra).bit_length() - 1
        m1 = a.p**a.n1
        witness = (i % m1, i // m1)
    if axis is None and not extra:
        return BilinearVerdict("bilinear", res.w1, res.w2, res.ann, res.closed, None, None)
    return BilinearVerdict("non_bilinear", res.w1, res.w2, res.ann, res.closed, witness, axis)
