"""Classifier behavior on the worked examples, witness contracts, and
classifier-vs-oracle equivalence at small degrees."""

import pytest

from partmaps.algebra import in_Gamma, in_S, in_Sigma
from partmaps.classify import (
    classify,
    idempotent_in_Gamma,
    is_idempotent,
    regular_brute,
    regular_in_Gamma,
    unit_regular_brute,
    unit_regular_in_Sigma,
    unit_regular_in_T,
    witness_regular_Gamma,
    witness_unit_regular_T,
)
from partmaps.core import (
    MembershipError,
    Partition,
    Transformation,
    compose,
    parse_partition,
)
from partmaps.enumeration import (
    enum_Gamma,
    enum_S,
    enum_T,
    iter_set_partitions,
)

P12 = parse_partition("1|2,3")
F_PAPER = Transformation([1, 0, 0])
P4 = Partition([[0], [1], [2, 3]])
F_IRREGULAR = Transformation([0, 0, 1, 1])


class TestIdempotency:
    def test_examples(self):
        assert is_idempotent(Transformation.identity(3))
        assert not is_idempotent(F_PAPER)
        assert is_idempotent(Transformation([0, 0, 0]))

    def test_block_form_examples(self):
        P = Partition([[0, 1], [2, 3]])
        assert idempotent_in_Gamma(Transformation([0, 1, 0, 1]), P)
        assert not idempotent_in_Gamma(Transformation([1, 0, 0, 1]), P)
        assert idempotent_in_Gamma(Transformation.identity(4), P)

    def test_block_form_agrees_up_to_degree_5(self):
        for n in range(1, 6):
            for P in iter_set_partitions(n):
                for f in enum_Gamma(P):
                    assert idempotent_in_Gamma(f, P) == is_idempotent(f)

    def test_precondition(self):
        with pytest.raises(MembershipError):
            idempotent_in_Gamma(F_PAPER, P12)  # not in Gamma

    def test_idempotents_are_regular(self):
        for P in (P12, P4):
            members = list(enum_T(P))
            for f in members:
                if is_idempotent(f):
                    assert regular_brute(f, members)
                    assert regular_brute(f, [f])


class TestRegularInGamma:
    def test_irregular_example(self):
        assert in_Gamma(F_IRREGULAR, P4)
        assert not regular_in_Gamma(F_IRREGULAR, P4)
        assert not regular_brute(F_IRREGULAR, enum_Gamma(P4))

    def test_constant_collapse_is_regular(self):
        f = Transformation([0, 0, 0])
        assert regular_in_Gamma(f, P12)
        assert regular_brute(f, enum_Gamma(P12))

    def test_identity(self):
        assert regular_in_Gamma(Transformation.identity(3), P12)

    def test_precondition(self):
        with pytest.raises(MembershipError):
            regular_in_Gamma(F_PAPER, P12)


class TestUnitRegular:
    def test_paper_map_is_regular_but_not_unit_regular(self):
        assert regular_brute(F_PAPER, enum_T(P12))
        assert not unit_regular_in_T(F_PAPER, P12)
        assert not unit_regular_brute(F_PAPER, enum_S(P12))

    def test_identity(self):
        assert unit_regular_in_T(Transformation.identity(3), P12)

    def test_all_maps_unit_regular_on_singletons(self):
        P = Partition.singletons(3)
        units = list(enum_S(P))
        f = Transformation([0, 0, 1])
        assert unit_regular_in_T(f, P)
        assert unit_regular_brute(f, units)

    def test_sigma_criterion_examples(self):
        assert not unit_regular_in_Sigma(F_PAPER, P12)
        assert unit_regular_in_Sigma(Transformation.identity(3), P12)
        P = Partition([[0, 1], [2, 3]])
        assert unit_regular_in_Sigma(Transformation([2, 3, 0, 1]), P)

    def test_sigma_precondition(self):
        with pytest.raises(MembershipError):
            unit_regular_in_Sigma(Transformation([0, 0, 0]), P12)

    def test_T_precondition(self):
        with pytest.raises(MembershipError):
            unit_regular_in_T(Transformation([1, 2, 0]), P12)


class TestWitnesses:
    def test_unit_witness_for_identity(self):
        e = Transformation.identity(3)
        g = witness_unit_regular_T(e, P12)
        assert g is not None and in_S(g, P12)
        assert compose(compose(e, g), e) == e

    def test_unit_witness_absent_for_paper_map(self):
        assert witness_unit_regular_T(F_PAPER, P12) is None

    def test_unit_witness_for_projection(self):
        P = Partition([[0, 1], [2, 3]])
        f = Transformation([0, 1, 0, 1])
        g = witness_unit_regular_T(f, P)
        assert g is not None and in_S(g, P)
        assert compose(compose(f, g), f) == f

    def test_unit_witness_reroutes_displaced_blocks(self):
        # block 0 surjects onto block 1, block 1 collapses inside itself;
        # the witness must swap the blocks back
        P = Partition([[0, 1], [2, 3]])
        f = Transformation([2, 3, 2, 2])
        g = witness_unit_regular_T(f, P)
        assert g == Transformation([2, 3, 0, 1])
        assert in_S(g, P) and compose(compose(f, g), f) == f

    def test_gamma_witness_self_inverse_swap(self):
        f = Transformation([0, 2, 1])
        assert witness_regular_Gamma(f, P12) == f

    def test_gamma_witness_absent_for_irregular(self):
        assert witness_regular_Gamma(F_IRREGULAR, P4) is None

    def test_gamma_witness_identity(self):
        e = Transformation.identity(4)
        assert witness_regular_Gamma(e, P4) == e

    def test_witness_determinism(self):
        P = Partition([[0, 1], [2, 3]])
        f = Transformation([2, 3, 2, 2])
        assert witness_unit_regular_T(f, P) == witness_unit_regular_T(f, P)

    def test_contracts_up_to_degree_4(self):
        for n in range(1, 5):
            for P in iter_set_partitions(n):
                for f in enum_T(P):
                    g = witness_unit_regular_T(f, P)
                    assert (g is not None) == unit_regular_in_T(f, P)
                    if g is not None:
                        assert in_S(g, P)
                        assert compose(compose(f, g), f) == f
                for f in enum_Gamma(P):
                    g = witness_regular_Gamma(f, P)
                    assert (g is not None) == regular_in_Gamma(f, P)
                    if g is not None:
                        assert in_Gamma(g, P)
                        assert compose(compose(f, g), f) == f


class TestGoldenScan:
    def test_exactly_two_fgf_partners_for_paper_map(self):
        # scanning all 15 members: only f itself and one other map work
        partners = [
            g for g in enum_T(P12) if compose(compose(F_PAPER, g), F_PAPER) == F_PAPER
        ]
        assert partners == [Transformation([1, 0, 0]), Transformation([2, 0, 0])]
        assert not any(g.is_permutation() for g in partners)


class TestOracleEquivalence:
    def test_classifiers_match_brute_force_up_to_degree_4(self):
        for n in range(1, 5):
            for P in iter_set_partitions(n):
                units = list(enum_S(P))
                members = list(enum_Gamma(P))
                for f in enum_T(P):
                    brute = unit_regular_brute(f, units)
                    assert unit_regular_in_T(f, P) == brute
                    if in_Sigma(f, P):
                        assert unit_regular_in_Sigma(f, P) == brute
                for f in members:
                    assert regular_in_Gamma(f, P) == regular_brute(f, members)


class TestStructuralCorollaries:
    """Uniform or at-most-two-block partitions make everything regular, and
    regular members are unit-regular; swept to degree 6."""

    def test_up_to_degree_6(self):
        for n in range(1, 7):
            for P in iter_set_partitions(n):
                easy = P.is_uniform() or P.m <= 2
                for f in enum_Gamma(P):
                    reg = regular_in_Gamma(f, P)
                    if easy:
                        assert reg
                    if reg:
                        assert unit_regular_in_T(f, P)


class TestReport:
    def test_paper_map_report(self):
        report = classify(F_PAPER, P12)
        assert report.in_T and report.in_Sigma
        assert not report.in_Gamma and not report.in_S
        assert report.regular_in_Gamma is None
        assert report.unit_regular_in_T is False
        assert report.unit_regular_in_Sigma is False
        assert report.witness is None and report.reason is None

    def test_identity_report(self):
        report = classify(Transformation.identity(3), P12)
        assert report.in_T and report.in_Sigma and report.in_Gamma and report.in_S
        assert report.idempotent
        assert report.regular_in_Gamma and report.unit_regular_in_T
        assert report.witness is not None

    def test_non_member_report(self):
        report = classify(Transformation([1, 2, 0]), P12)
        assert not report.in_T
        assert report.unit_regular_in_T is None
        assert report.witness is None
        assert report.reason is not None
