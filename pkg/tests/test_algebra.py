"""Membership predicates, characters, block-map families, and the
exhaustive set-inclusion facts over small degrees."""

import pytest

from partmaps.algebra import (
    block_map_family,
    character,
    in_Gamma,
    in_S,
    in_Sigma,
    in_T,
)
from partmaps.core import MembershipError, Partition, Transformation, parse_partition
from partmaps.enumeration import enum_all, iter_set_partitions

P12 = parse_partition("1|2,3")
F_PAPER = Transformation([1, 0, 0])


class TestMembership:
    def test_in_T_examples(self):
        assert in_T(F_PAPER, P12)
        assert in_T(Transformation.identity(3), P12)
        assert not in_T(Transformation([1, 2, 0]), P12)

    def test_in_Sigma_examples(self):
        assert in_Sigma(F_PAPER, P12)
        assert not in_Sigma(Transformation([0, 0, 0]), P12)
        assert in_Sigma(Transformation.identity(3), P12)

    def test_in_Gamma_examples(self):
        P = Partition([[0], [1], [2, 3]])
        assert in_Gamma(Transformation([0, 0, 1, 1]), P)
        assert not in_Gamma(Transformation([0, 1, 1]), P12)
        assert in_Gamma(Transformation.identity(4), P)

    def test_in_S_examples(self):
        assert in_S(Transformation([0, 2, 1]), P12)
        assert not in_S(F_PAPER, P12)
        # a bijection whose blocks straddle: {2,3} -> {0,1}
        P = Partition([[0], [1], [2, 3]])
        assert not in_S(Transformation([2, 3, 0, 1]), P)

    def test_degree_mismatch(self):
        with pytest.raises(ValueError, match="degree mismatch"):
            in_T(Transformation([0, 1]), P12)


class TestCharacter:
    def test_paper_example(self):
        assert character(F_PAPER, P12).targets == (1, 0)

    def test_identity(self):
        assert character(Transformation.identity(3), P12).targets == (0, 1)

    def test_collapse(self):
        P = Partition([[0], [1], [2, 3]])
        assert character(Transformation([0, 0, 1, 1]), P).targets == (0, 0, 1)

    def test_rank_and_bijectivity(self):
        assert character(F_PAPER, P12).rank() == 2
        assert character(F_PAPER, P12).is_bijective()
        P = Partition([[0], [1], [2, 3]])
        chi = character(Transformation([0, 0, 1, 1]), P)
        assert chi.rank() == 2 and not chi.is_bijective()
        assert character(Transformation([0]), Partition([[0]])).rank() == 1

    def test_outside_T_fails_loudly(self):
        with pytest.raises(MembershipError):
            character(Transformation([1, 2, 0]), P12)


class TestBlockMapFamily:
    def test_paper_example_flags(self):
        fam = block_map_family(F_PAPER, P12)
        assert len(fam) == 2
        assert fam[0].target == 1 and fam[0].injective and not fam[0].surjective
        assert fam[1].target == 0 and fam[1].surjective and not fam[1].injective
        assert fam[0].images == (1,) and fam[1].images == (0, 0)

    def test_identity_family(self):
        fam = block_map_family(Transformation.identity(3), P12)
        for i, entry in enumerate(fam):
            assert entry.target == i and entry.injective and entry.surjective
            assert entry.images == P12.blocks[i]

    def test_collapse_entry(self):
        P = Partition([[0], [1], [2, 3]])
        fam = block_map_family(Transformation([0, 0, 1, 1]), P)
        entry = fam[2]
        assert entry.target == 1 and entry.surjective and not entry.injective

    def test_outside_T_fails_loudly(self):
        with pytest.raises(MembershipError):
            block_map_family(Transformation([1, 2, 0]), P12)


class TestExhaustiveInclusions:
    """The set-identity facts, swept over every map and partition, n <= 5."""

    def test_inclusions_up_to_degree_5(self):
        for n in range(1, 6):
            for P in iter_set_partitions(n):
                small = P.min_block_size()
                for f in enum_all(n):
                    t = in_T(f, P)
                    gamma = t and in_Gamma(f, P)
                    sigma = t and in_Sigma(f, P)
                    units = t and in_S(f, P)
                    # units lie in Gamma
                    assert not units or gamma
                    # Gamma meets Sigma exactly in the units
                    assert (gamma and sigma) == units
                    if gamma:
                        # a bijective character forces a unit
                        assert not character(f, P).is_bijective() or units
                        fam = block_map_family(f, P)
                        widths = [len(set(e.images)) for e in fam]
                        # some block keeps its size; smallest blocks always do
                        assert any(
                            w == len(e.images) for w, e in zip(widths, fam)
                        )
                        assert all(
                            w == small
                            for w, e in zip(widths, fam)
                            if len(e.images) == small
                        )
                        # every block map of a Gamma member is surjective
                        assert all(e.surjective for e in fam)
                    if t:
                        # restrictions never gain rank
                        assert all(
                            len(set(e.images)) <= len(e.images)
                            for e in block_map_family(f, P)
                        )

    def test_trivial_partitions(self):
        # all-singleton blocks: everything is in T and Gamma
        for n in (1, 2, 3):
            P = Partition.singletons(n)
            assert all(in_T(f, P) and in_Gamma(f, P) for f in enum_all(n))
        # one block: Gamma is exactly the permutations
        for n in (1, 2, 3, 4):
            P = Partition.single_block(n)
            members = [f for f in enum_all(n) if in_Gamma(f, P)]
            assert len(members) == len({f for f in members})
            assert all(f.is_permutation() for f in members)
            import math

            assert len(members) == math.factorial(n)
