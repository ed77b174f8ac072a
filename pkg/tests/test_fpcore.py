"""Base layer: F_p vectors as base-p integers, RREF subspaces, projective
points, and the enumeration cap."""

import pytest

from transverse.detrng import SplitMix64
from transverse.fpcore import (
    CapExceeded,
    MatP,
    ProjPoint,
    Subspace,
    VecP,
    all_subspaces,
    check_cap,
    complement,
    decode,
    encode,
    intersect,
    is_prime,
    proj_enumerate,
    rref,
    span,
    subspace_sum,
)


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23}
    for k in range(2, 25):
        assert is_prime(k) == (k in primes)
    assert not is_prime(1)
    assert not is_prime(0)


def test_encode_decode_roundtrip():
    rng = SplitMix64(11)
    for _ in range(300):
        p = (2, 3, 5, 7)[rng.below(4)]
        n = rng.below(4) + 1
        idx = rng.below(p**n)
        coords = decode(idx, p, n)
        assert len(coords) == n
        assert all(0 <= c < p for c in coords)
        assert encode(coords, p) == idx
    # little-endian: the first coordinate is the lowest digit
    assert decode(5, 3, 2) == (2, 1)
    assert encode((2, 1), 3) == 5


def test_vecp_arithmetic():
    rng = SplitMix64(12)
    for _ in range(200):
        p = (2, 3, 5)[rng.below(3)]
        n = rng.below(3) + 1
        a = VecP.from_index(rng.below(p**n), p, n)
        b = VecP.from_index(rng.below(p**n), p, n)
        assert (a + b - b).coords == a.coords
        assert (-a + a).is_zero()
        lam = rng.below(p)
        assert a.scale(lam).coords == tuple(lam * c % p for c in a.coords)
        assert a.dot(b) == b.dot(a)


def test_rref_canonical_and_membership():
    rng = SplitMix64(13)
    for _ in range(150):
        p = (2, 3, 5)[rng.below(3)]
        n = rng.below(3) + 2
        rows = [tuple(rng.below(p) for _ in range(n)) for _ in range(rng.below(3) + 1)]
        s = span([VecP(p, r) for r in rows])
        # the span does not depend on generator order
        t = span([VecP(p, r) for r in reversed(rows)], p=p, ambient=n)
        assert s.basis == t.basis
        for r in rows:
            assert s.member(VecP(p, r))
        assert s.size == p**s.dim
        # RREF rows have leading 1s in strictly increasing pivot columns
        pivots = s.pivots
        assert list(pivots) == sorted(pivots)
        for row, piv in zip(s.basis, pivots):
            assert row[piv] == 1
            assert all(row[j] == 0 for j in range(piv))


def test_subspace_closed_under_addition():
    rng = SplitMix64(14)
    for _ in range(60):
        p = (2, 3)[rng.below(2)]
        n = 3
        rows = [tuple(rng.below(p) for _ in range(n)) for _ in range(2)]
        s = span([VecP(p, r) for r in rows], p=p, ambient=n)
        idx = s.element_indices()
        elems = [VecP.from_index(i, p, n) for i in idx]
        for a in elems:
            for b in elems:
                assert s.member(a + b)


def test_dimension_formula():
    rng = SplitMix64(15)
    for _ in range(80):
        p = (2, 3)[rng.below(2)]
        n = 4
        s = span([VecP(p, tuple(rng.below(p) for _ in range(n))) for _ in range(2)],
                 p=p, ambient=n)
        t = span([VecP(p, tuple(rng.below(p) for _ in range(n))) for _ in range(2)],
                 p=p, ambient=n)
        inter = intersect(s, t)
        total = subspace_sum(s, t)
        assert s.dim + t.dim == inter.dim + total.dim
        assert total.contains(s) and total.contains(t)
        assert s.contains(inter) and t.contains(inter)


def test_complement_is_kernel_of_functional():
    for p in (2, 3, 5):
        phi = VecP(p, (1, 2 % p, 1))
        h = complement(phi)
        assert h.dim == 2
        for i in range(p**3):
            v = VecP.from_index(i, p, 3)
            assert h.member(v) == (phi.dot(v) % p == 0)


def test_all_subspaces_counts():
    # p=2, n=3: 1 + 7 + 7 + 1 subspaces by dimension
    subs = list(all_subspaces(2, 3))
    by_dim = {}
    for s in subs:
        by_dim[s.dim] = by_dim.get(s.dim, 0) + 1
    assert by_dim == {0: 1, 1: 7, 2: 7, 3: 1}
    # p=3, n=2: 1 + 4 + 1
    assert len(list(all_subspaces(3, 2))) == 6
    assert len(list(all_subspaces(3, 2, dim=1))) == 4
    # deduplication: every basis appears once
    seen = {s.basis for s in subs}
    assert len(seen) == 16


def test_matp_apply_and_compose():
    m = MatP(3, ((1, 2), (0, 1)))
    v = VecP(3, (1, 1))
    assert m.apply(v).coords == (0, 1)
    ident = MatP(3, ((1, 0), (0, 1)))
    assert (m @ ident).entries == m.entries
    assert m.transpose().entries == ((1, 0), (2, 1))


def test_proj_points():
    # scaling a vector does not change the projective point
    for p in (2, 3, 5):
        pts = proj_enumerate(p, 2)
        assert len(pts) == (p**2 - 1) // (p - 1)
        for pt in pts:
            assert pt.rep[next(i for i, c in enumerate(pt.rep) if c)] == 1
        v = VecP(p, (1, p - 1))
        for lam in range(1, p):
            assert ProjPoint.from_vector(v.scale(lam)) == ProjPoint.from_vector(v)


def test_cap_guard():
    with pytest.raises(CapExceeded):
        check_cap(10**9)
    check_cap(10**9, override=True)
    check_cap(10)


def test_rref_idempotent():
    rng = SplitMix64(16)
    for _ in range(100):
        p = (2, 3, 5)[rng.below(3)]
        rows = tuple(tuple(rng.below(p) for _ in range(4)) for _ in range(3))
        reduced, pivots = rref(rows, p)
        again, pivots2 = rref(reduced, p)
        assert again == reduced
        assert pivots == pivots2
