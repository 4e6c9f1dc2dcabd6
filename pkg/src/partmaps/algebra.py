"""Membership predicates for the four semigroups attached to a partition,
plus the two structural decompositions every classifier consumes.

For a partition P of {0, ..., n-1}:

* ``in_T``:     every block maps into a single block.
* ``in_Sigma``: members of T whose image meets every block.
* ``in_Gamma``: every block maps onto a full block.
* ``in_S``:     the units: permutations lying in T whose inverse also lies
                in T (for a finite ground set these are exactly the maps
                that permute blocks of equal size bijectively).

A map in T induces a selfmap on block indices (its character: block i goes
to the block containing its image) and restricts to one block map per block
(the block-map family).  All classification downstream is phrased in terms
of these.
"""

from __future__ import annotations

from typing import NamedTuple

from partmaps.core import MembershipError, Partition, Transformation


def _check_degree(f: Transformation, P: Partition):
    if f.n != P.n:
        raise ValueError(f"degree mismatch: map on {f.n} points, partition of {P.n}")


class Character:
    """The induced selfmap on block indices: targets[i] = j when block i
    maps into block j."""

    __slots__ = ("targets",)

    def __init__(self, targets):
        self.targets = tuple(targets)

    @property
    def m(self) -> int:
        return len(self.targets)

    def rank(self) -> int:
        return len(set(self.targets))

    def is_bijective(self) -> bool:
        return len(set(self.targets)) == len(self.targets)

    def image(self) -> frozenset:
        return frozenset(self.targets)

    def __eq__(self, other):
        return isinstance(other, Character) and self.targets == other.targets

    def __hash__(self):
        return hash(self.targets)

    def __repr__(self):
        return f"Character({list(self.targets)})"


class BlockMap(NamedTuple):
    """Restriction of a map to one block: domain block index, codomain block
    index, image of each domain element in ascending domain order, and the
    two flags the regularity/idempotency classifiers consume."""

    source: int
    target: int
    images: tuple
    injective: bool
    surjective: bool


class BlockMapFamily:
    """The per-block restrictions of a map in T, one entry per block."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = tuple(entries)

    @property
    def targets(self) -> tuple:
        return tuple(e.target for e in self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i) -> BlockMap:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __repr__(self):
        return f"BlockMapFamily({list(self.entries)})"


def in_T(f: Transformation, P: Partition) -> bool:
    """Does every block map into a single block?"""
    _check_degree(f, P)
    im = f.images
    bo = P.block_of
    for block in P.blocks:
        j = bo[im[block[0]]]
        for x in block[1:]:
            if bo[im[x]] != j:
                return False
    return True


def in_Sigma(f: Transformation, P: Partition) -> bool:
    """Member of T whose image meets every block?"""
    if not in_T(f, P):
        return False
    bo = P.block_of
    return len({bo[v] for v in f.images}) == P.m


def in_Gamma(f: Transformation, P: Partition) -> bool:
    """Does every block map onto a full block?"""
    _check_degree(f, P)
    im = f.images
    bo = P.block_of
    for block in P.blocks:
        values = {im[x] for x in block}
        j = bo[im[block[0]]]
        if any(bo[v] != j for v in values):
            return False
        if len(values) != len(P.blocks[j]):
            return False
    return True


def in_S(f: Transformation, P: Partition) -> bool:
    """Unit test: a permutation that preserves blocks in both directions."""
    _check_degree(f, P)
    return f.is_permutation() and in_T(f, P) and in_T(f.inverse(), P)


def character(f: Transformation, P: Partition) -> Character:
    """Induced map on block indices; fails loudly when f is not in T.

    The target of each block is read off the block's first element and then
    verified against the rest (the verification is exactly T-membership).
    """
    _check_degree(f, P)
    im = f.images
    bo = P.block_of
    targets = []
    for i, block in enumerate(P.blocks):
        j = bo[im[block[0]]]
        for x in block[1:]:
            if bo[im[x]] != j:
                raise MembershipError(
                    f"map does not preserve the partition: block {i} straddles blocks"
                )
        targets.append(j)
    return Character(targets)


def block_map_family(f: Transformation, P: Partition) -> BlockMapFamily:
    """Restrict f to each block, recording codomain block and the
    injectivity/surjectivity flags of the restriction."""
    chi = character(f, P)  # also verifies membership in T
    im = f.images
    entries = []
    for i, block in enumerate(P.blocks):
        j = chi.targets[i]
        restriction = tuple(im[x] for x in block)
        values = set(restriction)
        entries.append(
            BlockMap(
                source=i,
                target=j,
                images=restriction,
                injective=len(values) == len(restriction),
                surjective=len(values) == len(P.blocks[j]),
            )
        )
    return BlockMapFamily(entries)
