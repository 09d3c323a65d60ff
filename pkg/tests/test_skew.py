import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from group_density.algebra import GroupMorphism, cyclic_group
from group_density.core.exceptions import PreconditionError, ReducibleShiftError, SemiDecisionError
from group_density.shifts import SFTShift
from group_density.skew import (
    SkewShift,
    fiber_ergodic,
    phi_irreducible,
    si_witness_morphism,
    skew_minimal,
    skew_transitive,
    strongly_irreducible,
    welldoc_witness,
)


@pytest.fixture
def not_si():
    return SFTShift.from_forbidden("abc", 1, ["ca", "ab", "bb", "cc"])


ALPHABETS = ("ab", "abc")


@st.composite
def irreducible_sfts(draw):
    alphabet = draw(st.sampled_from(ALPHABETS))
    blocks = [x + y for x in alphabet for y in alphabet]
    forbidden = draw(st.sets(st.sampled_from(blocks), max_size=len(blocks) - len(alphabet)))
    shift = SFTShift.from_forbidden(alphabet, 1, forbidden)
    assume(shift.is_irreducible())
    assume(set(shift.blocks()) == set(alphabet))
    return shift


@st.composite
def onto_morphisms(draw, alphabet):
    group = cyclic_group(draw(st.integers(2, 4)))
    images = draw(st.lists(st.integers(0, group.order - 1), min_size=len(alphabet), max_size=len(alphabet)))
    phi = GroupMorphism.from_mapping(group, dict(zip(alphabet, images, strict=True)), alphabet)
    assume(phi.is_onto())
    return phi


class TestSkewShift:
    def test_lift_and_project(self, golden_mean, parity_of_a):
        skew = SkewShift(golden_mean, parity_of_a)
        lifted = skew.lift(0, "aab")
        assert skew.project(lifted) == "aab"
        assert skew.fibers(lifted) == [0, 1, 0]
        assert skew.is_compatible(lifted)
        assert skew.render(lifted) == "0:a 1:a 0:b"

    def test_incompatible_word(self, golden_mean, parity_of_a):
        skew = SkewShift(golden_mean, parity_of_a)
        assert not skew.is_compatible(skew.letter(0, "a") + skew.letter(0, "a"))

    def test_language_is_lifted_language(self, golden_mean, parity_of_a):
        skew = SkewShift(golden_mean, parity_of_a)
        assert len(skew.language(3)) == 2 * len(golden_mean.language(3))

    def test_as_shift_over_sft(self, golden_mean, parity_of_a):
        presented = SkewShift(golden_mean, parity_of_a).as_shift()
        assert isinstance(presented, SFTShift)
        assert len(presented.alphabet) == 4
        assert presented.is_irreducible()

    def test_alphabet_mismatch(self, periodic_abc, parity_of_a):
        with pytest.raises(PreconditionError):
            SkewShift(periodic_abc, parity_of_a)

    def test_periodic_orbits(self, periodic_abc):
        z2 = cyclic_group(2)
        balanced = GroupMorphism.from_mapping(z2, {"a": 1, "b": 1, "c": 0})
        orbits = SkewShift(periodic_abc, balanced).periodic_orbits()
        assert [o.period for o in orbits] == [3, 3]

        odd = GroupMorphism.from_mapping(z2, {"a": 1, "b": 0, "c": 0})
        orbits = SkewShift(periodic_abc, odd).periodic_orbits()
        assert [o.period for o in orbits] == [6]
        assert orbits[0].render().startswith("(0:a 1:b")

    def test_periodic_orbits_need_periodic_base(self, golden_mean, parity_of_a):
        with pytest.raises(PreconditionError):
            SkewShift(golden_mean, parity_of_a).periodic_orbits()


class TestIrreducibility:
    def test_golden_mean_parity(self, golden_mean, parity_of_a):
        assert phi_irreducible(golden_mean, parity_of_a)
        assert skew_transitive(golden_mean, parity_of_a)
        assert fiber_ergodic(golden_mean, parity_of_a)

    def test_constant_morphism_is_not_fiber_ergodic(self, fibonacci, z2):
        trivial = GroupMorphism.from_mapping(z2, {"a": 0, "b": 0})
        assert not fiber_ergodic(fibonacci, trivial)

    def test_substitution_fiber_images(self, fibonacci):
        phi = GroupMorphism.from_mapping(cyclic_group(3), {"a": 1, "b": 0})
        assert fiber_ergodic(fibonacci, phi)

    def test_periodic_fiber_images(self, periodic_abc):
        phi = GroupMorphism.from_mapping(cyclic_group(3), {"a": 1, "b": 1, "c": 1})
        assert fiber_ergodic(periodic_abc, phi)

    def test_reducible_sft(self, z2):
        shift = SFTShift.from_forbidden("ab", 1, ["ba"])
        phi = GroupMorphism.from_mapping(z2, {"a": 1, "b": 0})
        with pytest.raises(ReducibleShiftError):
            phi_irreducible(shift, phi)

    def test_substitution_is_not_an_sft(self, fibonacci, parity_of_a):
        with pytest.raises(PreconditionError):
            phi_irreducible(fibonacci, parity_of_a)


class TestStrongIrreducibility:
    def test_golden_mean_is_strongly_irreducible(self, golden_mean):
        result = strongly_irreducible(golden_mean)
        assert result.strongly_irreducible
        assert result.relation.classes == (("a", "b"),)

    def test_two_classes(self, not_si):
        result = strongly_irreducible(not_si)
        assert result.irreducible
        assert not result.strongly_irreducible
        assert result.relation.classes == (("a", "c"), ("b",))
        assert result.relation.class_of("c") == ("a", "c")

    def test_witness_morphism(self, not_si):
        phi = si_witness_morphism(not_si, ["b"])
        assert phi.images == (0, 1, 1)
        assert not phi_irreducible(not_si, phi)
        assert si_witness_morphism(not_si, ["c", "a"]).images == (0, 1, 1)

    def test_witness_needs_a_class(self, not_si, golden_mean):
        with pytest.raises(PreconditionError):
            si_witness_morphism(not_si, ["a"])
        with pytest.raises(PreconditionError):
            si_witness_morphism(golden_mean, ["a", "b"])


class TestSkewMinimality:
    def test_fibonacci_parity_is_minimal(self, fibonacci, parity_of_a):
        evidence = skew_minimal(fibonacci, parity_of_a)
        assert evidence.minimal
        assert evidence.complete
        assert evidence.subgroup.order == 2
        assert evidence.stable_length is not None

    def test_fibonacci_s3_is_minimal(self, fibonacci, s3):
        phi = GroupMorphism.from_mapping(s3, {"a": "(1 2)", "b": "(1 3)"})
        assert skew_minimal(fibonacci, phi).minimal

    def test_thue_morse_parity_is_not_minimal(self, thue_morse, parity_of_a):
        evidence = skew_minimal(thue_morse, parity_of_a)
        assert not evidence.minimal
        assert evidence.subgroup.order == 1

    def test_periodic_orbit_splits(self, periodic_abc, z2):
        phi = GroupMorphism.from_mapping(z2, {"a": 1, "b": 1, "c": 0})
        assert not skew_minimal(periodic_abc, phi).minimal

    def test_trivial_group(self, fibonacci):
        phi = GroupMorphism.from_mapping(cyclic_group(1), {"a": 0, "b": 0})
        evidence = skew_minimal(fibonacci, phi)
        assert evidence.minimal and evidence.complete

    def test_sft_is_rejected(self, golden_mean, parity_of_a):
        with pytest.raises(PreconditionError):
            skew_minimal(golden_mean, parity_of_a)


class TestWelldocWitness:
    def test_periodic_prefix_returns(self, periodic_abc, z2):
        phi = GroupMorphism.from_mapping(z2, {"a": 1, "b": 1, "c": 0})
        witness = welldoc_witness(periodic_abc, phi, 3, 30)
        assert witness.prefix == "abc"
        assert witness.occurrences == 11
        assert witness.elements == frozenset({0})

    def test_prefix_must_recur(self, fibonacci, parity_of_a):
        with pytest.raises(SemiDecisionError):
            welldoc_witness(fibonacci, parity_of_a, 20, 5)


class TestIrreducibilityProperties:
    @given(st.data())
    @settings(suppress_health_check=[HealthCheck.filter_too_much])
    def test_phi_irreducible_iff_skew_transitive(self, data):
        shift = data.draw(irreducible_sfts())
        phi = data.draw(onto_morphisms(shift.alphabet))
        assert phi_irreducible(shift, phi) == skew_transitive(shift, phi)

    @given(st.data())
    @settings(suppress_health_check=[HealthCheck.filter_too_much])
    def test_strong_irreducibility_forces_phi_irreducibility(self, data):
        shift = data.draw(irreducible_sfts())
        phi = data.draw(onto_morphisms(shift.alphabet))
        if strongly_irreducible(shift).strongly_irreducible:
            assert phi_irreducible(shift, phi)

    @given(irreducible_sfts())
    @settings(suppress_health_check=[HealthCheck.filter_too_much])
    def test_every_class_has_a_witness(self, shift):
        result = strongly_irreducible(shift)
        assume(not result.strongly_irreducible)
        for cls in result.relation.classes:
            assert not phi_irreducible(shift, si_witness_morphism(shift, cls))
