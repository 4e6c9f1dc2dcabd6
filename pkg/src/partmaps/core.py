"""Ground data model: transformations, set partitions, and block-size shapes.

Everything is 0-based internally over the ground set {0, ..., n-1}; all text
I/O is 1-based.  Maps compose left to right: x(fg) = (xf)g.
"""

from __future__ import annotations

import operator
from collections import Counter


class ParseError(ValueError):
    """Malformed partition, transformation, or shape text."""


class MembershipError(ValueError):
    """Operation applied to a map outside the semigroup where it is defined."""


class CapExceeded(ValueError):
    """Requested enumeration exceeds the configured degree cap."""


class Transformation:
    """A total selfmap on {0, ..., n-1} stored as an image table.

    ``images[x]`` is the image of ``x``.  Instances are treated as immutable
    and hash/compare by their image table.
    """

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(operator.index(v) for v in images)
        if not images:
            raise ValueError("a transformation needs degree at least 1")
        n = len(images)
        for v in images:
            if not 0 <= v < n:
                raise ValueError(f"image {v} outside 0..{n - 1}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Transformation":
        return cls(range(n))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other):
        return compose(self, other)

    def __eq__(self, other):
        return isinstance(other, Transformation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Transformation({list(self.images)})"

    def image_set(self) -> frozenset:
        return frozenset(self.images)

    def rank(self) -> int:
        return len(set(self.images))

    def is_permutation(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def inverse(self) -> "Transformation":
        """Inverse map; defined only for permutations."""
        if not self.is_permutation():
            raise ValueError("only permutations have an inverse")
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images):
            inv[y] = x
        return Transformation(inv)

    def to_text(self) -> str:
        """1-based display form, e.g. '2 1 1'."""
        return " ".join(str(v + 1) for v in self.images)


def compose(f: Transformation, g: Transformation) -> Transformation:
    """Left-to-right composition: x(fg) = (xf)g."""
    if f.n != g.n:
        raise ValueError(f"degree mismatch: {f.n} vs {g.n}")
    gi = g.images
    return Transformation(gi[y] for y in f.images)


class Partition:
    """An ordered set partition of {0, ..., n-1}.

    Canonical form: elements ascending within each block, blocks ordered by
    their smallest element.  ``block_of[x]`` is the index of the block
    containing ``x``.
    """

    __slots__ = ("blocks", "block_of")

    def __init__(self, blocks):
        cleaned = []
        for b in blocks:
            b = sorted(operator.index(x) for x in b)
            if not b:
                raise ValueError("empty block")
            cleaned.append(b)
        if not cleaned:
            raise ValueError("a partition needs at least one block")
        cleaned.sort(key=lambda b: b[0])
        n = sum(len(b) for b in cleaned)
        block_of = [-1] * n
        for i, b in enumerate(cleaned):
            for x in b:
                if not 0 <= x < n:
                    raise ValueError(f"element {x} outside 0..{n - 1}")
                if block_of[x] != -1:
                    raise ValueError(f"element {x} lies in two blocks")
                block_of[x] = i
        # sizes sum to n and there are no repeats, so every slot is filled
        self.blocks = tuple(tuple(b) for b in cleaned)
        self.block_of = tuple(block_of)

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls([x] for x in range(n))

    @classmethod
    def single_block(cls, n: int) -> "Partition":
        return cls([range(n)])

    @property
    def n(self) -> int:
        return len(self.block_of)

    @property
    def m(self) -> int:
        return len(self.blocks)

    def block_sizes(self) -> tuple:
        return tuple(len(b) for b in self.blocks)

    def min_block_size(self) -> int:
        return min(len(b) for b in self.blocks)

    def is_uniform(self) -> bool:
        sizes = self.block_sizes()
        return min(sizes) == max(sizes)

    def shape(self) -> "PartitionShape":
        """The multiset of block sizes, as (size, multiplicity) pairs."""
        return PartitionShape(sorted(Counter(self.block_sizes()).items()))

    def to_text(self) -> str:
        return "|".join(",".join(str(x + 1) for x in b) for b in self.blocks)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return f"Partition({[list(b) for b in self.blocks]})"


class PartitionShape:
    """Block-size signature: (size, multiplicity) pairs, sizes strictly
    increasing, every multiplicity at least 1."""

    __slots__ = ("sizes",)

    def __init__(self, sizes):
        merged = {}
        for size, mult in sizes:
            size = operator.index(size)
            mult = operator.index(mult)
            if size < 1:
                raise ValueError(f"block size {size} must be positive")
            if mult < 1:
                raise ValueError(f"multiplicity {mult} must be positive")
            merged[size] = merged.get(size, 0) + mult
        if not merged:
            raise ValueError("a shape needs at least one block")
        self.sizes = tuple(sorted(merged.items()))

    @property
    def k(self) -> int:
        return len(self.sizes)

    @property
    def m(self) -> int:
        return sum(mult for _, mult in self.sizes)

    @property
    def n(self) -> int:
        return sum(size * mult for size, mult in self.sizes)

    def distinct_sizes(self) -> tuple:
        return tuple(size for size, _ in self.sizes)

    def multiplicities(self) -> tuple:
        return tuple(mult for _, mult in self.sizes)

    def is_uniform(self) -> bool:
        return len(self.sizes) == 1

    def canonical_partition(self) -> Partition:
        """A partition of {0, ..., n-1} realizing this shape, blocks filled
        with consecutive elements in ascending size order."""
        blocks = []
        start = 0
        for size, mult in self.sizes:
            for _ in range(mult):
                blocks.append(range(start, start + size))
                start += size
        return Partition(blocks)

    def to_text(self) -> str:
        return ",".join(f"{size}^{mult}" for size, mult in self.sizes)

    def __eq__(self, other):
        return isinstance(other, PartitionShape) and self.sizes == other.sizes

    def __hash__(self):
        return hash(self.sizes)

    def __repr__(self):
        return f"PartitionShape({list(self.sizes)})"


class SubShape:
    """How many blocks of each distinct size a subpartition picks up.

    ``counts[i]`` refers to the i-th size class of some PartitionShape; the
    pairing is validated by the operations that take both.
    """

    __slots__ = ("counts",)

    def __init__(self, counts):
        counts = tuple(operator.index(c) for c in counts)
        if any(c < 0 for c in counts):
            raise ValueError("block counts must be nonnegative")
        if sum(counts) < 1:
            raise ValueError("a subpartition needs at least one block")
        self.counts = counts

    @property
    def r(self) -> int:
        return sum(self.counts)

    def includes_smallest(self) -> bool:
        return self.counts[0] >= 1

    def validate_for(self, shape: PartitionShape):
        if len(self.counts) != shape.k:
            raise ValueError(
                f"subshape has {len(self.counts)} size classes, shape has {shape.k}"
            )
        for c, (size, mult) in zip(self.counts, shape.sizes):
            if c > mult:
                raise ValueError(
                    f"subshape picks {c} blocks of size {size}, shape only has {mult}"
                )

    def __eq__(self, other):
        return isinstance(other, SubShape) and self.counts == other.counts

    def __hash__(self):
        return hash(self.counts)

    def __repr__(self):
        return f"SubShape({list(self.counts)})"


def parse_partition(text: str) -> Partition:
    """Parse 1-based block text like '1|2,3|4,5,6' into a canonical Partition.

    The elements must be exactly 1..n with no duplicates; block order and
    element order in the input are irrelevant.
    """
    raw_blocks = []
    for raw in text.split("|"):
        if raw.strip() == "":
            raise ParseError("empty block")
        block = []
        for tok in raw.split(","):
            tok = tok.strip()
            try:
                block.append(int(tok))
            except ValueError:
                raise ParseError(f"bad element {tok!r}") from None
        raw_blocks.append(block)
    flat = [v for b in raw_blocks for v in b]
    seen = set()
    for v in flat:
        if v in seen:
            raise ParseError(f"element {v} appears twice")
        seen.add(v)
    n = len(flat)
    if min(flat) < 1 or max(flat) > n:
        missing = min(set(range(1, n + 1)) - seen)
        raise ParseError(f"elements must cover 1..{n}; {missing} is missing")
    return Partition([v - 1 for v in b] for b in raw_blocks)


def parse_transformation(text: str, n: int) -> Transformation:
    """Parse 1-based image text like '2 1 1' into a Transformation on n points."""
    tokens = text.split()
    if len(tokens) != n:
        raise ParseError(f"expected {n} images, got {len(tokens)}")
    images = []
    for tok in tokens:
        try:
            v = int(tok)
        except ValueError:
            raise ParseError(f"bad image {tok!r}") from None
        if not 1 <= v <= n:
            raise ParseError(f"image {v} out of range 1..{n}")
        images.append(v - 1)
    return Transformation(images)


def parse_shape(text: str) -> PartitionShape:
    """Parse shape text like '1^2,2^1' (two blocks of size 1, one of size 2).

    A bare term 'k' is shorthand for 'k^1'; repeated sizes are merged.
    """
    pairs = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            raise ParseError("empty shape term")
        size_part, sep, mult_part = tok.partition("^")
        try:
            size = int(size_part)
            mult = int(mult_part) if sep else 1
        except ValueError:
            raise ParseError(f"bad shape term {tok!r}") from None
        if size < 1 or mult < 1:
            raise ParseError(f"bad shape term {tok!r}: size and multiplicity must be positive")
        pairs.append((size, mult))
    return PartitionShape(pairs)
