"""Reference constructions: the F_3 counterexample, span sets of projective
permutations, and hyperplane-fiber sets driven by a line bijection.

These are the concrete witnesses the verification suites revolve around:
a small transverse set that is not bilinear over F_3, the distinguished
seven-point permutation whose span set does the same over F_2, and for
p >= 5 the family built from a bijection of a projective line, which is
bilinear exactly when the bijection is projective.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .detrng import SplitMix64, exchange_shuffle
from .fpcore import (
    ProjPoint,
    Subspace,
    VecP,
    check_cap,
    complement,
    encode,
    is_prime,
    proj_enumerate,
    vspace,
)
from .pairsets import PairSet

__all__ = [
    "ProjBijection",
    "build_P_sigma",
    "build_P_xi",
    "f3_example",
    "p0_p1",
    "random_sigma",
    "sigma_fig2",
]


@dataclass(frozen=True)
class ProjBijection:
    """An injective map P(F_p^{n_dom}) -> P(F_p^{n_cod}), stored as the image
    tuple aligned with the ascending-index enumeration of the domain."""

    p: int
    n_dom: int
    n_cod: int
    images: tuple[ProjPoint, ...]

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        npts = len(vspace(self.p, self.n_dom).proj_reps)
        if len(self.images) != npts:
            raise ValueError(f"need {npts} images, got {len(self.images)}")
        for pt in self.images:
            if pt.p != self.p or pt.n != self.n_cod:
                raise ValueError("image point lives in the wrong space")
        if len({pt.index for pt in self.images}) != len(self.images):
            raise ValueError("images are not distinct")

    @classmethod
    def from_index_table(cls, p: int, n_dom: int, n_cod: int, images) -> "ProjBijection":
        pts = tuple(
            ProjPoint.from_vector(VecP.from_index(i, p, n_cod)) for i in images
        )
        return cls(p, n_dom, n_cod, pts)

    def domain(self) -> list[ProjPoint]:
        return proj_enumerate(self.p, self.n_dom)

    def image_of(self, pt: ProjPoint) -> ProjPoint:
        cid = vspace(self.p, self.n_dom).class_of[pt.index]
        if cid < 0:
            raise ValueError("point is not a domain element")
        return self.images[cid]

    def index_table(self) -> tuple[int, ...]:
        return tuple(pt.index for pt in self.images)

    def is_permutation(self) -> bool:
        return self.n_dom == self.n_cod and len(self.images) == len(
            vspace(self.p, self.n_cod).proj_reps
        )


def f3_example() -> PairSet:
    """The 29-element transverse, non-bilinear subset of F_3^2 x F_3^2:
    pairs with x1 y1^2 + x2 y2^2 = 0 and x1^2 y1 + x2^2 y2 = 0."""
    p = 3
    pairs = []
    for x in product(range(p), repeat=2):
        for y in product(range(p), repeat=2):
            if (x[0] * y[0] ** 2 + x[1] * y[1] ** 2) % p:
                continue
            if (x[0] ** 2 * y[0] + x[1] ** 2 * y[1]) % p:
                continue
            pairs.append((encode(x, p), encode(y, p)))
    return PairSet.from_pairs(p, 2, 2, pairs)


def p0_p1() -> tuple[PairSet, PairSet]:
    """The two bilinear pieces whose union is the F_3 example: P0 cut out by
    x1 y1 = 0 and x2 y2 = 0, P1 by x1 + x2 = 0 and y1 + y2 = 0."""
    p = 3
    pairs0 = []
    pairs1 = []
    for x in product(range(p), repeat=2):
        for y in product(range(p), repeat=2):
            if x[0] * y[0] % p == 0 and x[1] * y[1] % p == 0:
                pairs0.append((encode(x, p), encode(y, p)))
            if (x[0] + x[1]) % p == 0 and (y[0] + y[1]) % p == 0:
                pairs1.append((encode(x, p), encode(y, p)))
    return (
        PairSet.from_pairs(p, 2, 2, pairs0),
        PairSet.from_pairs(p, 2, 2, pairs1),
    )


def sigma_fig2() -> ProjBijection:
    """The distinguished permutation of the seven points of P(F_2^3): fixes
    (1,0,0), (0,1,0), (0,0,1), (1,1,0) and 3-cycles
    (1,0,1) -> (0,1,1) -> (1,1,1) -> (1,0,1).  Its span set is transverse
    but not bilinear."""
    return ProjBijection.from_index_table(2, 3, 3, (1, 2, 3, 4, 6, 7, 5))


def build_P_sigma(sigma: ProjBijection, override_cap: bool = False) -> PairSet:
    """Span set of a projective map: {0} x V2 together with
    Span(x) x Span(sigma([x])) for every projective class [x]."""
    p = sigma.p
    n1, n2 = sigma.n_dom, sigma.n_cod
    check_cap(p ** (n1 + n2), override_cap, "pair space")
    m1, m2 = p**n1, p**n2
    sp1 = vspace(p, n1)
    sp2 = vspace(p, n2)
    mask = 0
    for yi in range(m2):
        mask |= 1 << (m1 * yi)
    for cid, img in enumerate(sigma.images):
        ys = [0] + [sp2.scale[lam][img.index] for lam in range(1, p)]
        for x in sp1.class_members[cid]:
            for yi in ys:
                mask |= 1 << (x + m1 * yi)
    return PairSet(p, n1, n2, mask)


def random_sigma(p: int, n: int, seed: int) -> ProjBijection:
    """Seeded random permutation of P(F_p^n) via the pinned splitmix64
    stream and exchange shuffle; the same seed always gives the same map."""
    pts = proj_enumerate(p, n)
    perm = list(range(len(pts)))
    exchange_shuffle(perm, SplitMix64(seed))
    return ProjBijection(p, n, n, tuple(pts[i] for i in perm))


def build_P_xi(
    w: Subspace,
    l: Subspace,
    xi_prime: ProjBijection,
    override_cap: bool = False,
) -> PairSet:
    """Hyperplane-fiber set driven by a bijection of projective lines.

    w is a codimension-2 subspace of the first factor and l a 2-dimensional
    subspace of the second.  xi_prime maps the projective line P(V1/W) --
    presented in the coordinates of the two non-pivot columns of w -- onto
    P(l).  The fiber over x in w is all of V2; over x outside w it is the
    hyperplane orthogonal to the image of the class of x mod w.
    """
    p = xi_prime.p
    if w.p != p or l.p != p:
        raise ValueError("field mismatch")
    if w.codim != 2:
        raise ValueError(f"w must have codimension 2, got {w.codim}")
    if l.dim != 2:
        raise ValueError(f"l must be 2-dimensional, got dim {l.dim}")
    if xi_prime.n_dom != 2 or xi_prime.n_cod != l.ambient:
        raise ValueError("xi_prime must map a projective line into the ambient of l")
    for pt in xi_prime.images:
        if not l.member(pt.vector()):
            raise ValueError("xi_prime image lies outside l")
    n1, n2 = w.ambient, l.ambient
    check_cap(p ** (n1 + n2), override_cap, "pair space")
    m1, m2 = p**n1, p**n2
    free = [j for j in range(n1) if j not in w.pivots]
    full_fiber = list(range(m2))
    mask = 0
    for xi in range(m1):
        x = VecP.from_index(xi, p, n1)
        r = w.residual(x)
        if r.is_zero():
            ys = full_fiber
        else:
            u = VecP(p, (r.coords[free[0]], r.coords[free[1]]))
            img = xi_prime.image_of(ProjPoint.from_vector(u))
            ys = complement(img.vector()).element_indices()
        for yi in ys:
            mask |= 1 << (xi + m1 * yi)
    return PairSet(p, n1, n2, mask)
