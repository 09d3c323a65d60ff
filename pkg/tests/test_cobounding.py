from unittest.mock import patch

import pytest
import sympy

from group_density.algebra import GroupMorphism, Subgroup, right_cosets, trivial_subgroup, whole_group
from group_density.cobounding import (
    CoboundingMap,
    certify_minimal_maps,
    coset_masses,
    find_cobounding,
    measure_of_y_alpha,
    minimal_decomposition,
    minimal_subgroup,
    orbit,
    refine,
    shifted,
    verify_cobounding,
)
from group_density.cobounding.decomposition import MOD_ONE, PERIODIC_ORBIT
from group_density.core.config import settings
from group_density.core.exceptions import PreconditionError, SemiDecisionError
from group_density.measures import build_measure
from group_density.shifts import SubstitutionShift
from group_density.skew import skew_minimal


@pytest.fixture
def balanced(z2):
    """a, b ↦ 1 and c ↦ 0 over the orbit of (abc)^∞."""
    return GroupMorphism.from_mapping(z2, {"a": 1, "b": 1, "c": 0})


@pytest.fixture
def alpha(periodic_abc, balanced):
    return find_cobounding(periodic_abc, balanced, trivial_subgroup(balanced.group))


class TestFindCobounding:
    def test_periodic_map(self, alpha):
        assert alpha.length == 1
        assert alpha.assignment == {"a": 0, "b": 1, "c": 0}
        assert alpha.labels() == {"a": "H", "b": "H1", "c": "H"}

    def test_verified(self, periodic_abc, balanced, alpha):
        assert verify_cobounding(periodic_abc, balanced, alpha).valid

    def test_broken_map_reports_violations(self, periodic_abc, balanced, alpha):
        broken = CoboundingMap(alpha.partition, 1, {"a": 0, "b": 0, "c": 0})
        check = verify_cobounding(periodic_abc, balanced, broken)
        assert not check.valid
        assert "ab" in check.violations

    def test_partial_map_reports_missing_cylinders(self, periodic_abc, balanced, alpha):
        partial = CoboundingMap(alpha.partition, 1, {"a": 0, "b": 1})
        check = verify_cobounding(periodic_abc, balanced, partial)
        assert not check.valid
        assert check.violations == ["no value for cylinder 'c'"]

    def test_none_when_skew_is_minimal(self, fibonacci, parity_of_a):
        assert find_cobounding(fibonacci, parity_of_a, trivial_subgroup(parity_of_a.group), max_length=4) is None

    def test_whole_group_is_cobounding_at_length_zero(self, fibonacci, s3):
        phi = GroupMorphism.from_mapping(s3, {"a": "(1 2)", "b": "(1 3)"})
        whole = Subgroup.from_members(s3, s3.elements)
        found = find_cobounding(fibonacci, phi, whole)
        assert found.length == 0
        assert found.assignment == {"": 0}


class TestGroupAction:
    def test_refine(self, periodic_abc, alpha):
        longer = refine(periodic_abc, alpha, 2)
        assert longer.assignment == {"ab": 0, "bc": 1, "ca": 0}
        with pytest.raises(PreconditionError):
            refine(periodic_abc, longer, 1)

    def test_shifted_map(self, periodic_abc, balanced, alpha):
        moved = shifted(alpha, 1)
        assert moved.assignment == {"a": 1, "b": 0, "c": 1}
        assert verify_cobounding(periodic_abc, balanced, moved).valid

    def test_orbit_has_index_many_maps(self, alpha):
        maps = orbit(alpha)
        assert len(maps) == 2
        assert maps[0].invariant_set != maps[1].invariant_set


class TestCosetMasses:
    def test_periodic_masses(self, periodic_abc, balanced, alpha):
        masses = coset_masses(periodic_abc, balanced, alpha, build_measure(periodic_abc))
        assert masses.exact == {0: sympy.Rational(2, 3), 1: sympy.Rational(1, 3)}
        assert masses.total() == pytest.approx(1.0)
        assert measure_of_y_alpha(alpha, masses) == pytest.approx(0.5)

    def test_unverified_map(self, periodic_abc, balanced, alpha):
        broken = CoboundingMap(alpha.partition, 1, {"a": 0, "b": 0, "c": 0})
        with pytest.raises(PreconditionError):
            coset_masses(periodic_abc, balanced, broken, build_measure(periodic_abc))


class TestMinimalDecomposition:
    def test_periodic(self, periodic_abc, balanced):
        decomposition = minimal_decomposition(periodic_abc, balanced)
        assert decomposition.subgroup.order == 1
        assert decomposition.count == 2
        assert decomposition.cylinder_length == 1
        assert decomposition.certificates == [MOD_ONE, PERIODIC_ORBIT]
        assert decomposition.certified

    def test_thue_morse_parity(self, thue_morse, parity_of_a):
        decomposition = minimal_decomposition(thue_morse, parity_of_a)
        assert decomposition.subgroup.order == 1
        assert decomposition.count == 2
        assert decomposition.cylinder_length == 7
        for masses in decomposition.masses:
            assert list(masses.values.values()) == pytest.approx([0.5, 0.5])
        assert MOD_ONE in decomposition.certificates

    def test_minimal_skew_has_one_piece(self, fibonacci, parity_of_a):
        decomposition = minimal_decomposition(fibonacci, parity_of_a)
        assert decomposition.count == 1
        assert decomposition.cylinder_length == 0

    def test_unimodular_s3_is_conditional(self, s3):
        shift = SubstitutionShift({"a": "aab", "b": "acb", "c": "ba"})
        phi = GroupMorphism.from_mapping(s3, {"a": "(1 2 3)", "b": "(1 2)", "c": "(1 2 3)"})
        decomposition = minimal_decomposition(shift, phi)
        assert decomposition.subgroup.order == 2
        assert decomposition.count == 3
        assert not decomposition.certified

    def test_minimal_subgroup(self, thue_morse, parity_of_a, s3):
        assert minimal_subgroup(thue_morse, parity_of_a).order == 1
        unimodular = SubstitutionShift({"a": "aab", "b": "acb", "c": "ba"})
        phi = GroupMorphism.from_mapping(s3, {"a": "(1 2 3)", "b": "(1 2)", "c": "(1 2 3)"})
        expected = Subgroup.from_members(s3, [s3.identity, s3.element("(1 2)")]).canonical()
        assert minimal_subgroup(unimodular, phi) == expected

    def test_uncertified_sweep(self, thue_morse, parity_of_a):
        with patch.object(settings, "MINIMALITY_MAX_LENGTH", 4):
            with pytest.raises(SemiDecisionError):
                minimal_subgroup(thue_morse, parity_of_a)


class TestMinimalityCertificate:
    def test_thue_morse_parity(self, thue_morse, parity_of_a):
        decomposition = minimal_decomposition(thue_morse, parity_of_a)
        certificate = decomposition.minimality
        assert certificate.holds
        assert certificate.return_subgroup == trivial_subgroup(parity_of_a.group)
        assert len(certificate.stabilizers) == decomposition.count
        assert len(certificate.u) >= decomposition.cylinder_length

    def test_unimodular_s3(self, s3):
        shift = SubstitutionShift({"a": "aab", "b": "acb", "c": "ba"})
        phi = GroupMorphism.from_mapping(s3, {"a": "(1 2 3)", "b": "(1 2)", "c": "(1 2 3)"})
        decomposition = minimal_decomposition(shift, phi)
        certificate = decomposition.minimality
        assert certificate.holds
        assert certificate.return_subgroup.order == 2
        assert certificate.return_subgroup.canonical() == decomposition.subgroup
        for alpha, stabilizer in zip(decomposition.maps, certificate.stabilizers, strict=True):
            assert stabilizer == alpha.partition.stabilizer(alpha.value(certificate.u))
            assert stabilizer == certificate.return_subgroup

    def test_map_mod_a_larger_subgroup_is_rejected(self, thue_morse, parity_of_a):
        group = parity_of_a.group
        coarse = CoboundingMap(right_cosets(group, whole_group(group)), 0, {"": 0})
        assert verify_cobounding(thue_morse, parity_of_a, coarse).valid
        stable = skew_minimal(thue_morse, parity_of_a).stable_length
        certificate = certify_minimal_maps(thue_morse, parity_of_a, [coarse], stable)
        assert not certificate.holds
        assert certificate.stabilizers == [whole_group(group)]
        assert certificate.return_subgroup.order == 1

    def test_needs_a_map(self, thue_morse, parity_of_a):
        with pytest.raises(PreconditionError):
            certify_minimal_maps(thue_morse, parity_of_a, [])


class TestCosetStabilizer:
    def test_conjugate_of_subgroup(self, s3):
        subgroup = Subgroup.from_members(s3, [s3.identity, s3.element("(1 2)")])
        partition = right_cosets(s3, subgroup)
        for coset, rep in enumerate(partition.representatives):
            assert partition.stabilizer(coset) == subgroup.conjugate(s3.inv(rep))
