"""Exact counts: how many members, idempotents, and regular elements the
block-surjective semigroup of a shape has.

Everything is plain Python integer arithmetic (arbitrary precision, no
floats).  Counts depend on a partition only through its shape, so all
functions take a PartitionShape.

The image of a block-surjective map is a union of blocks containing at
least one block of the smallest size, so the idempotent and regular totals
are sums over such image subpartitions.  Terms depend on a subpartition
only through its SubShape (how many blocks of each size it picks), so the
sums are grouped by SubShape with multiplicity prod_i C(m_i, r_i) instead
of materializing every subpartition.
"""

from __future__ import annotations

import math
import threading

from partmaps.core import PartitionShape, SubShape

factorial = math.factorial


def binomial(n: int, r: int) -> int:
    """C(n, r); zero when r is negative or exceeds n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if r < 0 or r > n:
        return 0
    return math.comb(n, r)


_stirling_rows = [[1]]  # row t holds S(t, 0..t)
_stirling_lock = threading.Lock()


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind: partitions of an n-set into k
    nonempty blocks.  S(0,0) = 1; S(n,0) = 0 for n >= 1; 0 when k > n.

    Rows are grown on demand via S(n,k) = k*S(n-1,k) + S(n-1,k-1) and cached.
    """
    if n < 0 or k < 0:
        raise ValueError("arguments must be nonnegative")
    if k > n:
        return 0
    if len(_stirling_rows) <= n:
        with _stirling_lock:
            while len(_stirling_rows) <= n:
                t = len(_stirling_rows)
                prev = _stirling_rows[t - 1]
                row = [0] * (t + 1)
                for j in range(1, t):
                    row[j] = j * prev[j] + prev[j - 1]
                row[t] = 1
                _stirling_rows.append(row)
    return _stirling_rows[n][k]


def surjections(n: int, k: int) -> int:
    """Number of surjective maps from an n-set onto a k-set: k! * S(n, k)."""
    return factorial(k) * stirling2(n, k)


def _validated(shape: PartitionShape, sub: SubShape) -> tuple:
    sub.validate_for(shape)
    if not sub.includes_smallest():
        raise ValueError("an image subpartition must include a smallest-size block")
    return sub.counts


def count_Gamma(shape: PartitionShape) -> int:
    """Size of the block-surjective semigroup.

    A member is a free choice of one surjective block map per block; a block
    of size n_i has sum_{j<=i} m_j * n_j! * S(n_i, n_j) such maps.
    """
    total = 1
    sizes = shape.sizes
    for i, (n_i, m_i) in enumerate(sizes):
        per_block = sum(
            m_j * surjections(n_i, n_j) for n_j, m_j in sizes[: i + 1]
        )
        total *= per_block**m_i
    return total


def count_E_with_image(shape: PartitionShape, sub: SubShape) -> int:
    """Idempotents whose image is a fixed subpartition of the given subshape.

    Blocks inside the image are forced to the identity; each block outside
    surjects freely onto some image block.
    """
    counts = _validated(shape, sub)
    sizes = shape.sizes
    total = 1
    for i, (n_i, m_i) in enumerate(sizes):
        per_block = sum(
            counts[j] * surjections(n_i, n_j)
            for j, (n_j, _) in enumerate(sizes[: i + 1])
        )
        total *= per_block ** (m_i - counts[i])
    return total


def count_Reg_with_image(shape: PartitionShape, sub: SubShape) -> int:
    """Regular elements whose image is a fixed subpartition of the given
    subshape.

    Regularity forces every image block to be hit bijectively by an
    equal-size block.  Smallest-size blocks can only map to smallest-size
    image blocks, so their block assignment must be surjective:
    r_1! * S(m_1, r_1) assignments, each with n_1! bijections per block.
    For a larger size class i, some p >= r_i of its blocks cover the r_i
    equal-size image blocks surjectively and the rest surject onto strictly
    smaller image blocks; sum over p.
    """
    counts = _validated(shape, sub)
    sizes = shape.sizes
    n_1, m_1 = sizes[0]
    r_1 = counts[0]
    total = factorial(r_1) * stirling2(m_1, r_1) * factorial(n_1) ** m_1
    for i in range(1, len(sizes)):
        n_i, m_i = sizes[i]
        r_i = counts[i]
        smaller = sum(
            counts[j] * surjections(n_i, n_j)
            for j, (n_j, _) in enumerate(sizes[:i])
        )
        class_total = 0
        for p in range(r_i, m_i + 1):
            class_total += (
                binomial(m_i, p)
                * factorial(r_i)
                * stirling2(p, r_i)
                * factorial(n_i) ** p
                * smaller ** (m_i - p)
            )
        total *= class_total
    return total


def iter_subshapes(shape: PartitionShape, r: int):
    """All SubShapes with r blocks total, at least one of the smallest size,
    and r_i never exceeding the shape's multiplicity m_i."""
    if not 1 <= r <= shape.m:
        raise ValueError(f"r must lie in 1..{shape.m}, got {r}")
    mults = shape.multiplicities()
    k = len(mults)
    suffix = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix[i] = suffix[i + 1] + mults[i]

    def rec(i, remaining, acc):
        if i == k:
            if remaining == 0:
                yield SubShape(acc)
            return
        lo = max(1 if i == 0 else 0, remaining - suffix[i + 1])
        hi = min(mults[i], remaining)
        for c in range(lo, hi + 1):
            yield from rec(i + 1, remaining - c, acc + [c])

    return rec(0, r, [])


def subshape_multiplicity(shape: PartitionShape, sub: SubShape) -> int:
    """How many subpartitions of the shape realize the subshape:
    prod_i C(m_i, r_i)."""
    sub.validate_for(shape)
    return math.prod(
        binomial(mult, c) for c, (_, mult) in zip(sub.counts, shape.sizes)
    )


def count_E_Gamma(shape: PartitionShape) -> int:
    """Total idempotents of the block-surjective semigroup: sum over image
    subshapes of multiplicity times the fixed-image idempotent count."""
    total = 0
    for r in range(1, shape.m + 1):
        for sub in iter_subshapes(shape, r):
            total += subshape_multiplicity(shape, sub) * count_E_with_image(shape, sub)
    return total


def count_E_Gamma_uniform(m: int, q: int) -> int:
    """Closed form for the idempotent total of a uniform shape with m blocks
    of size q: sum_r C(m, r) * r^(m-r) * (q!)^(m-r)."""
    if m < 1 or q < 1:
        raise ValueError("m and q must be positive")
    return sum(
        binomial(m, r) * r ** (m - r) * factorial(q) ** (m - r)
        for r in range(1, m + 1)
    )


def count_Reg_Gamma(shape: PartitionShape) -> int:
    """Total regular elements of the block-surjective semigroup: sum over
    image subshapes of multiplicity times the fixed-image regular count."""
    total = 0
    for r in range(1, shape.m + 1):
        for sub in iter_subshapes(shape, r):
            total += subshape_multiplicity(shape, sub) * count_Reg_with_image(shape, sub)
    return total


def count_image_subpartitions(shape: PartitionShape, r: int) -> int:
    """Number of r-subpartitions containing at least one smallest-size
    block, by complement: C(m, r) - C(m - m_1, r)."""
    if not 1 <= r <= shape.m:
        raise ValueError(f"r must lie in 1..{shape.m}, got {r}")
    m = shape.m
    m_1 = shape.multiplicities()[0]
    return binomial(m, r) - binomial(m - m_1, r)


def count_image_subpartitions_formula(shape: PartitionShape, r: int) -> int:
    """The same count written as a sum over how many smallest-size blocks
    are included: sum_l C(m_1, l) * C(m - l, r - l).

    Kept verbatim for comparison; it overcounts on shapes where more than
    one smallest block can be chosen (the l-th term counts 'at least l'
    rather than 'exactly l'), so verify reports compare it against the
    complement count instead of asserting equality.
    """
    if not 1 <= r <= shape.m:
        raise ValueError(f"r must lie in 1..{shape.m}, got {r}")
    m = shape.m
    m_1 = shape.multiplicities()[0]
    return sum(
        binomial(m_1, l) * binomial(m - l, r - l) for l in range(1, min(m_1, r) + 1)
    )
