"""Classifiers for idempotency, regularity, and unit-regularity, with
explicit witnesses, plus the brute-force oracles every classifier is
tested against.

The structural criteria:

* idempotent in Gamma: the restriction to every image block is the
  identity map.
* regular in Gamma: every image block is hit injectively (hence, block
  maps being surjective, bijectively) by some block.
* unit-regular in T: for every block i meeting the image there is a block
  j of equal size whose full image under f is exactly the part of the
  image lying in block i; the witness construction below follows this
  correspondence.
* unit-regular in Sigma: the character pairs blocks of equal size.

The brute oracles just scan a stream of candidates g for fgf = f; they are
deliberately definition-direct and share no code with the classifiers.
"""

from __future__ import annotations

from dataclasses import dataclass

from partmaps import kernels
from partmaps.algebra import block_map_family, character, in_Gamma, in_S, in_Sigma, in_T
from partmaps.core import MembershipError, Partition, Transformation, compose


def _require(flag: bool, what: str):
    if not flag:
        raise MembershipError(f"map is not in {what}")


def is_idempotent(f: Transformation) -> bool:
    """ff = f; equivalently f is the identity on its image."""
    return compose(f, f) == f


def idempotent_in_Gamma(f: Transformation, P: Partition) -> bool:
    """Block-map form of idempotency: every image block is fixed pointwise."""
    _require(in_Gamma(f, P), "Gamma(X, P)")
    chi = character(f, P)
    im = f.images
    for i in set(chi.targets):
        if chi.targets[i] != i:
            return False
        if any(im[x] != x for x in P.blocks[i]):
            return False
    return True


def regular_in_Gamma(f: Transformation, P: Partition) -> bool:
    """Is every image block hit injectively by some block?"""
    _require(in_Gamma(f, P), "Gamma(X, P)")
    family = block_map_family(f, P)
    covered = {e.target for e in family if e.injective}
    return set(family.targets) <= covered


def unit_regular_in_T(f: Transformation, P: Partition) -> bool:
    """Does every image-meeting block have an equal-size partner block whose
    full image equals the image trace inside it?"""
    _require(in_T(f, P), "T(X, P)")
    chi = character(f, P)
    image = set(f.images)
    sizes = P.block_sizes()
    block_images = [frozenset(f.images[x] for x in b) for b in P.blocks]
    for i in chi.image():
        trace = frozenset(image.intersection(P.blocks[i]))
        if not any(
            sizes[j] == sizes[i] and block_images[j] == trace for j in range(P.m)
        ):
            return False
    return True


def unit_regular_in_Sigma(f: Transformation, P: Partition) -> bool:
    """Within Sigma the criterion collapses to: the character only pairs
    blocks of equal size."""
    _require(in_Sigma(f, P), "Sigma(X, P)")
    chi = character(f, P)
    sizes = P.block_sizes()
    return all(sizes[i] == sizes[j] for i, j in enumerate(chi.targets))


def witness_unit_regular_T(f: Transformation, P: Partition):
    """A unit g with fgf = f, or None when f is not unit-regular.

    Construction: for each image-meeting block i pick the smallest
    equal-size block j whose image realizes the trace of the image in
    block i, send each trace element to its smallest preimage inside j and
    extend order-preservingly to a bijection block i -> block j.  Blocks
    displaced by those codomain choices are rerouted bijectively onto the
    lowest-index unused image-meeting block of equal size; everything else
    stays fixed.  All tie-breaks are smallest-first, so the witness is
    deterministic.
    """
    _require(in_T(f, P), "T(X, P)")
    chi = character(f, P)
    im = f.images
    sizes = P.block_sizes()
    image = set(im)
    block_images = [frozenset(im[x] for x in b) for b in P.blocks]

    meets_image = sorted(chi.image())
    assign = {}
    for i in meets_image:
        trace = frozenset(image.intersection(P.blocks[i]))
        for j in range(P.m):
            if sizes[j] == sizes[i] and block_images[j] == trace:
                assign[i] = j
                break
        else:
            return None

    g = list(range(P.n))
    for i, j in assign.items():
        trace = sorted(image.intersection(P.blocks[i]))
        taken = set()
        for y in trace:
            x = min(x for x in P.blocks[j] if im[x] == y)
            g[y] = x
            taken.add(x)
        rest_dom = [x for x in P.blocks[i] if x not in trace]
        rest_cod = [x for x in P.blocks[j] if x not in taken]
        for a, b in zip(rest_dom, rest_cod):
            g[a] = b

    # blocks used up as codomains but not themselves mapped yet go onto the
    # image-meeting blocks nobody chose; equal sizes always pair up
    used = set(assign.values())
    available = [i for i in meets_image if i not in used]
    for j in sorted(used - set(meets_image)):
        k = next(i for i in available if sizes[i] == sizes[j])
        available.remove(k)
        for a, b in zip(P.blocks[j], P.blocks[k]):
            g[a] = b

    witness = Transformation(g)
    assert in_S(witness, P) and compose(compose(f, witness), f) == f
    return witness


def witness_regular_Gamma(f: Transformation, P: Partition):
    """A g in Gamma with fgf = f, or None when f is irregular.

    On each image block apply the inverse of the lowest-index bijective
    block map landing there; fix everything else.
    """
    _require(in_Gamma(f, P), "Gamma(X, P)")
    family = block_map_family(f, P)
    g = list(range(P.n))
    for j in sorted(set(family.targets)):
        entry = next((e for e in family if e.target == j and e.injective), None)
        if entry is None:
            return None
        for x, y in zip(P.blocks[entry.source], entry.images):
            g[y] = x
    witness = Transformation(g)
    assert in_Gamma(witness, P) and compose(compose(f, witness), f) == f
    return witness


def _fgf_scan(f: Transformation, elements) -> bool:
    if isinstance(elements, kernels.PackedPool):
        return kernels.fgf_witness(f, elements) >= 0
    fi = f.images
    image = set(fi)
    for g in elements:
        gi = g.images
        if all(fi[gi[y]] == y for y in image):
            return True
    return False


def regular_brute(f: Transformation, elements) -> bool:
    """Oracle: scan a stream (or PackedPool) of semigroup members for g
    with fgf = f."""
    return _fgf_scan(f, elements)


def unit_regular_brute(f: Transformation, units) -> bool:
    """Oracle: scan a stream (or PackedPool) of units for g with fgf = f."""
    return _fgf_scan(f, units)


@dataclass(frozen=True)
class ClassificationReport:
    """Everything the classifiers can say about one (map, partition) pair.

    Fields requiring membership in a smaller semigroup are None outside it;
    ``witness`` is a unit realizing unit-regularity in T when one exists.
    """

    in_T: bool
    in_Sigma: bool
    in_Gamma: bool
    in_S: bool
    idempotent: bool
    regular_in_Gamma: "bool | None"
    unit_regular_in_T: "bool | None"
    unit_regular_in_Sigma: "bool | None"
    witness: "Transformation | None"
    reason: "str | None" = None


def classify(f: Transformation, P: Partition) -> ClassificationReport:
    """Run every applicable classifier on one map."""
    t = in_T(f, P)
    sigma = t and in_Sigma(f, P)
    gamma = t and in_Gamma(f, P)
    units = t and in_S(f, P)
    unit_regular = unit_regular_in_T(f, P) if t else None
    witness = witness_unit_regular_T(f, P) if t else None
    assert (witness is not None) == bool(unit_regular)
    return ClassificationReport(
        in_T=t,
        in_Sigma=sigma,
        in_Gamma=gamma,
        in_S=units,
        idempotent=is_idempotent(f),
        regular_in_Gamma=regular_in_Gamma(f, P) if gamma else None,
        unit_regular_in_T=unit_regular,
        unit_regular_in_Sigma=unit_regular_in_Sigma(f, P) if sigma else None,
        witness=witness,
        reason=None if t else "map does not preserve the partition",
    )
