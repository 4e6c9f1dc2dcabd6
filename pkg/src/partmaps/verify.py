"""Exhaustive formula-vs-oracle sweeps over every set partition up to a
degree bound.  Each suite returns a result record; the CLI renders them and
turns failures into a nonzero exit.

Oracle choices mirror the acceptance gate: brute-force fgf scans up to
degree 5, the (already cross-checked) structural classifier above that.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from partmaps import counting as cnt
from partmaps import kernels
from partmaps.algebra import block_map_family, character, in_Gamma, in_S, in_Sigma, in_T
from partmaps.classify import (
    idempotent_in_Gamma,
    is_idempotent,
    regular_in_Gamma,
    unit_regular_in_Sigma,
    unit_regular_in_T,
    witness_regular_Gamma,
    witness_unit_regular_T,
)
from partmaps.core import Partition, Transformation, compose
from partmaps.enumeration import (
    enum_all,
    enum_image_subpartitions,
    enum_S,
    iter_Gamma_tables,
    iter_set_partitions,
    iter_T_tables,
)

BRUTE_MAX_N = 5  # beyond this, regularity counts come from the classifier


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str):
        self.failures.append(message)


def _gamma_pool(P: Partition, cap) -> kernels.PackedPool:
    return kernels.PackedPool.from_tables(P.n, iter_Gamma_tables(P, cap))


def suite_counts(max_n: int, cap=None) -> SuiteResult:
    """count_Gamma / count_E_Gamma / count_Reg_Gamma against enumeration."""
    res = SuiteResult("counts")
    cap = max_n if cap is None else cap
    for n in range(1, max_n + 1):
        for P in iter_set_partitions(n):
            shape = P.shape()
            pool = _gamma_pool(P, cap)
            got = len(pool)
            want = cnt.count_Gamma(shape)
            if want != got:
                res.fail(f"P={P.to_text()}: count_Gamma={want}, enumerated {got}")
            e_got = sum(kernels.idempotent_flags(pool))
            e_want = cnt.count_E_Gamma(shape)
            if e_want != e_got:
                res.fail(f"P={P.to_text()}: count_E_Gamma={e_want}, enumerated {e_got}")
            if n <= BRUTE_MAX_N:
                r_got = sum(kernels.fgf_flags(pool, pool))
            else:
                r_got = sum(regular_in_Gamma(f, P) for f in pool)
            r_want = cnt.count_Reg_Gamma(shape)
            if r_want != r_got:
                res.fail(f"P={P.to_text()}: count_Reg_Gamma={r_want}, enumerated {r_got}")
            res.checked += 3
    return res


def suite_classifiers(max_n: int, cap=None) -> SuiteResult:
    """Structural classifiers against brute-force fgf scans."""
    res = SuiteResult("classifiers")
    cap = max_n if cap is None else cap
    for n in range(1, max_n + 1):
        for P in iter_set_partitions(n):
            t_pool = kernels.PackedPool.from_tables(n, iter_T_tables(P, cap))
            unit_pool = kernels.PackedPool.from_maps(n, enum_S(P, cap))
            unit_flags = kernels.fgf_flags(t_pool, unit_pool)
            for i in range(len(t_pool)):
                f = t_pool[i]
                brute = bool(unit_flags[i])
                if unit_regular_in_T(f, P) != brute:
                    res.fail(f"P={P.to_text()} f={f.to_text()}: unit_regular_in_T")
                if in_Sigma(f, P) and unit_regular_in_Sigma(f, P) != brute:
                    res.fail(f"P={P.to_text()} f={f.to_text()}: unit_regular_in_Sigma")
                res.checked += 1
            g_pool = _gamma_pool(P, cap)
            g_flags = kernels.fgf_flags(g_pool, g_pool)
            for i in range(len(g_pool)):
                f = g_pool[i]
                if regular_in_Gamma(f, P) != bool(g_flags[i]):
                    res.fail(f"P={P.to_text()} f={f.to_text()}: regular_in_Gamma")
                if idempotent_in_Gamma(f, P) != is_idempotent(f):
                    res.fail(f"P={P.to_text()} f={f.to_text()}: idempotent_in_Gamma")
                res.checked += 1
    return res


def suite_inclusions(max_n: int, cap=None) -> SuiteResult:
    """Set-inclusion and structural facts swept over every map."""
    res = SuiteResult("inclusions")
    cap = max_n if cap is None else cap
    for n in range(1, max_n + 1):
        for P in iter_set_partitions(n):
            small = P.min_block_size()
            for f in enum_all(n, cap):
                t = in_T(f, P)
                sigma = t and in_Sigma(f, P)
                gamma = t and in_Gamma(f, P)
                units = t and in_S(f, P)
                tag = f"P={P.to_text()} f={f.to_text()}"
                if units and not gamma:
                    res.fail(f"{tag}: unit outside Gamma")
                if (gamma and sigma) != units:
                    res.fail(f"{tag}: Gamma-and-Sigma differs from the unit group")
                if gamma:
                    if character(f, P).is_bijective() and not units:
                        res.fail(f"{tag}: bijective character but not a unit")
                    family = block_map_family(f, P)
                    if not any(len(set(e.images)) == len(e.images) for e in family):
                        res.fail(f"{tag}: no block keeps its size")
                    if not all(
                        len(set(e.images)) == small
                        for e in family
                        if len(e.images) == small
                    ):
                        res.fail(f"{tag}: a smallest block does not map bijectively")
                    reg = regular_in_Gamma(f, P)
                    if (P.is_uniform() or P.m <= 2) and not reg:
                        res.fail(f"{tag}: should be regular (uniform or <=2 blocks)")
                    if reg and not unit_regular_in_T(f, P):
                        res.fail(f"{tag}: regular in Gamma but not unit-regular in T")
                res.checked += 1
    return res


def suite_witnesses(max_n: int, cap=None) -> SuiteResult:
    """Returned witnesses must satisfy fgf = f and their membership test."""
    res = SuiteResult("witnesses")
    cap = max_n if cap is None else cap
    for n in range(1, max_n + 1):
        for P in iter_set_partitions(n):
            for table in iter_T_tables(P, cap):
                f = Transformation(table)
                g = witness_unit_regular_T(f, P)
                if g is not None:
                    if not in_S(g, P) or compose(compose(f, g), f) != f:
                        res.fail(f"P={P.to_text()} f={f.to_text()}: bad unit witness")
                elif unit_regular_in_T(f, P):
                    res.fail(f"P={P.to_text()} f={f.to_text()}: missing unit witness")
                res.checked += 1
            for table in iter_Gamma_tables(P, cap):
                f = Transformation(table)
                g = witness_regular_Gamma(f, P)
                if g is not None:
                    if not in_Gamma(g, P) or compose(compose(f, g), f) != f:
                        res.fail(f"P={P.to_text()} f={f.to_text()}: bad Gamma witness")
                elif regular_in_Gamma(f, P):
                    res.fail(f"P={P.to_text()} f={f.to_text()}: missing Gamma witness")
                res.checked += 1
    return res


def suite_f_r(max_n: int, cap=None) -> SuiteResult:
    """Image-subpartition counts: direct enumeration vs the complement
    count (asserted) and the per-smallest-count summation (reported)."""
    res = SuiteResult("f_r")
    for n in range(1, max_n + 1):
        for P in iter_set_partitions(n):
            shape = P.shape()
            for r in range(1, P.m + 1):
                direct = sum(1 for _ in enum_image_subpartitions(P, r))
                counted = cnt.count_image_subpartitions(shape, r)
                formula = cnt.count_image_subpartitions_formula(shape, r)
                if counted != direct:
                    res.fail(
                        f"P={P.to_text()} r={r}: complement count {counted}, enumerated {direct}"
                    )
                if formula != direct:
                    res.notes.append(
                        f"P={P.to_text()} r={r}: summation formula gives {formula}, enumeration {direct}"
                    )
                res.checked += 1
    return res


SUITES = {
    "counts": suite_counts,
    "classifiers": suite_classifiers,
    "inclusions": suite_inclusions,
    "witnesses": suite_witnesses,
    "f_r": suite_f_r,
}

SUITE_ORDER = ("counts", "classifiers", "inclusions", "witnesses", "f_r")
