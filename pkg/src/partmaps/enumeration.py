"""Deterministic exhaustive enumerators.

Semigroup members are assembled block by block (choose a codomain block,
then a restriction table into it) rather than filtering all n^n maps.
Order is block-major, lexicographic over restriction tables, so repeated
runs produce identical streams.  Every enumerator returns a fresh generator.

Degree caps keep accidental n^n blowups at desk scale; pass ``cap`` to
raise them deliberately.
"""

from __future__ import annotations

import itertools

from partmaps.core import CapExceeded, Partition, SubShape, Transformation

ASSEMBLY_CAP = 8  # block-assembled streams (T, Sigma, Gamma, S)
FULL_CAP = 7  # raw n^n streams


def _check_cap(n: int, cap, default: int):
    limit = default if cap is None else cap
    if n > limit:
        raise CapExceeded(f"degree {n} exceeds the enumeration cap {limit}")


def enum_all(n: int, cap=None):
    """All n^n selfmaps, lexicographic by image table."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    _check_cap(n, cap, FULL_CAP)

    def gen():
        for images in itertools.product(range(n), repeat=n):
            yield Transformation(images)

    return gen()


def _assemble(P: Partition, rows_per_block):
    """Write one restriction table per block into a full image table."""
    n = P.n
    blocks = P.blocks
    for combo in itertools.product(*rows_per_block):
        images = [0] * n
        for block, row in zip(blocks, combo):
            for x, y in zip(block, row):
                images[x] = y
        yield tuple(images)


def _t_rows(P: Partition):
    """Per block: every map into every block, codomain-major then lex."""
    rows = []
    for block in P.blocks:
        b = len(block)
        choices = []
        for target in P.blocks:
            choices.extend(itertools.product(target, repeat=b))
        rows.append(choices)
    return rows


def _gamma_rows(P: Partition):
    """Per block: every surjection onto every no-larger block."""
    rows = []
    for block in P.blocks:
        b = len(block)
        choices = []
        for target in P.blocks:
            c = len(target)
            if c > b:
                continue
            if c == 1:
                choices.append((target[0],) * b)
            elif c == b:
                choices.extend(itertools.permutations(target))
            else:
                choices.extend(
                    row
                    for row in itertools.product(target, repeat=b)
                    if len(set(row)) == c
                )
        rows.append(choices)
    return rows


def iter_T_tables(P: Partition, cap=None):
    """Raw image tables of the block-preserving maps (internal fast path)."""
    _check_cap(P.n, cap, ASSEMBLY_CAP)
    if P.m == 1:
        return iter(itertools.product(range(P.n), repeat=P.n))
    return _assemble(P, _t_rows(P))


def iter_Gamma_tables(P: Partition, cap=None):
    """Raw image tables of the block-surjective maps (internal fast path)."""
    _check_cap(P.n, cap, ASSEMBLY_CAP)
    return _assemble(P, _gamma_rows(P))


def enum_T(P: Partition, cap=None):
    """All maps sending each block into a block."""
    tables = iter_T_tables(P, cap)
    return (Transformation(t) for t in tables)


def enum_Sigma(P: Partition, cap=None):
    """Members of T whose image meets every block."""
    bo = P.block_of
    m = P.m

    def gen():
        for t in iter_T_tables(P, cap):
            if len({bo[v] for v in t}) == m:
                yield Transformation(t)

    return gen()


def enum_Gamma(P: Partition, cap=None):
    """All maps sending each block onto a block."""
    tables = iter_Gamma_tables(P, cap)
    return (Transformation(t) for t in tables)


def enum_S(P: Partition, cap=None):
    """The unit group: block-permuting bijections.

    Assembled from every size-preserving permutation of the block indices
    and every family of block bijections compatible with it.
    """
    _check_cap(P.n, cap, ASSEMBLY_CAP)
    sizes = P.block_sizes()
    n = P.n
    blocks = P.blocks

    def gen():
        for sigma in itertools.permutations(range(P.m)):
            if any(sizes[i] != sizes[sigma[i]] for i in range(P.m)):
                continue
            per_block = [
                list(itertools.permutations(blocks[sigma[i]])) for i in range(P.m)
            ]
            for combo in itertools.product(*per_block):
                images = [0] * n
                for block, row in zip(blocks, combo):
                    for x, y in zip(block, row):
                        images[x] = y
                yield Transformation(images)

    return gen()


def enum_image_subpartitions(P: Partition, r: int):
    """All r-subpartitions of P that contain at least one smallest-size
    block, as (block indices, SubShape) pairs.

    These are exactly the possible image subpartitions of the rank-r
    members of Gamma: a smallest block always maps bijectively, so every
    image contains a block of the smallest size.
    """
    if not 1 <= r <= P.m:
        raise ValueError(f"r must lie in 1..{P.m}, got {r}")
    sizes = P.block_sizes()
    smallest = min(sizes)
    distinct = sorted(set(sizes))
    class_of = {size: idx for idx, size in enumerate(distinct)}

    def gen():
        for indices in itertools.combinations(range(P.m), r):
            if all(sizes[i] != smallest for i in indices):
                continue
            counts = [0] * len(distinct)
            for i in indices:
                counts[class_of[sizes[i]]] += 1
            yield indices, SubShape(counts)

    return gen()


def enum_Gamma_with_rank(P: Partition, r: int, cap=None):
    """Members of Gamma whose character has the given rank."""
    if not 1 <= r <= P.m:
        raise ValueError(f"rank must lie in 1..{P.m}, got {r}")
    bo = P.block_of

    def gen():
        for t in iter_Gamma_tables(P, cap):
            if len({bo[v] for v in t}) == r:
                yield Transformation(t)

    return gen()


def enum_Gamma_with_image(P: Partition, block_indices, cap=None):
    """Members of Gamma whose image is exactly the union of the given blocks."""
    indices = sorted(set(block_indices))
    if not indices:
        raise ValueError("need at least one block index")
    for i in indices:
        if not 0 <= i < P.m:
            raise ValueError(f"block index {i} out of range 0..{P.m - 1}")
    wanted = frozenset(x for i in indices for x in P.blocks[i])

    def gen():
        for t in iter_Gamma_tables(P, cap):
            if frozenset(t) == wanted:
                yield Transformation(t)

    return gen()


def iter_set_partitions(n: int):
    """Every set partition of {0, ..., n-1}, in lexicographic order of
    restricted-growth strings."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rgs = [0] * n
    while True:
        m = max(rgs) + 1
        blocks = [[] for _ in range(m)]
        for x, b in enumerate(rgs):
            blocks[b].append(x)
        yield Partition(blocks)
        # lexicographic successor: bump the rightmost growable digit
        for i in range(n - 1, 0, -1):
            if rgs[i] <= max(rgs[:i]):
                rgs[i] += 1
                for j in range(i + 1, n):
                    rgs[j] = 0
                break
        else:
            return
