import pytest

from group_density.algebra import GroupMorphism, Subgroup, cyclic_group, trivial_subgroup
from group_density.bifix import (
    average_length,
    bifix_code,
    degree_surjectivity_check,
    is_prefix_code,
    is_suffix_code,
    maximal_degree_containment,
    x_degree,
    z_degree,
)
from group_density.core.exceptions import PreconditionError, SemiDecisionError
from group_density.measures import build_measure


class TestBifixCode:
    def test_thue_morse_trivial_subgroup(self, thue_morse, parity_of_a):
        code = bifix_code(thue_morse, parity_of_a, trivial_subgroup(parity_of_a.group))
        assert code.words == ("b", "aa", "aba", "abba")
        assert code.degree_bound == 2
        assert code.proper_prefixes == ("", "a", "ab", "abb")

    def test_fibonacci_parity(self, fibonacci, parity_of_a):
        code = bifix_code(fibonacci, parity_of_a, trivial_subgroup(parity_of_a.group))
        assert code.words == ("b", "aa", "aba")
        assert code.suffix_complete_length is not None

    def test_fibonacci_s3_stabilizer(self, fibonacci, s3):
        phi = GroupMorphism.from_mapping(s3, {"a": "(1 2)", "b": "(1 3)"})
        subgroup = Subgroup.from_members(s3, [s3.identity, s3.element("(2 3)")])
        code = bifix_code(fibonacci, phi, subgroup)
        assert set(code.words) == {"aa", "aba", "baab", "bab"}

    def test_thue_morse_z4(self, thue_morse):
        phi = GroupMorphism.from_mapping(cyclic_group(4), {"a": 1, "b": 3})
        code = bifix_code(thue_morse, phi, trivial_subgroup(phi.group))
        assert set(code.words) == {"ab", "ba", "aabb", "bbaa", "aababb", "bbabaa"}
        assert x_degree(thue_morse, code).degree == 3

    def test_cap_reached(self, thue_morse, parity_of_a):
        with pytest.raises(SemiDecisionError):
            bifix_code(thue_morse, parity_of_a, trivial_subgroup(parity_of_a.group), cap=1)

    def test_needs_minimal_shift(self, golden_mean, parity_of_a):
        with pytest.raises(PreconditionError):
            bifix_code(golden_mean, parity_of_a, trivial_subgroup(parity_of_a.group))

    def test_subgroup_of_another_group(self, fibonacci, parity_of_a):
        with pytest.raises(PreconditionError):
            bifix_code(fibonacci, parity_of_a, trivial_subgroup(cyclic_group(2)))

    def test_parse_tree_marks_code_words(self, thue_morse, parity_of_a):
        tree = bifix_code(thue_morse, parity_of_a, trivial_subgroup(parity_of_a.group)).parse_tree()
        lines = tree.splitlines()
        assert lines[0] == "ε"
        assert any(line.strip() == "abba  ∈ U, φ = 0" for line in lines)


class TestDegrees:
    def test_z_degree(self, parity_of_a, z2):
        parse = z_degree(parity_of_a, trivial_subgroup(z2), "aba")
        assert parse.suffixes_in_p == ("", "a")
        assert parse.degree == 2

    def test_x_degree_of_thue_morse(self, thue_morse, parity_of_a):
        code = bifix_code(thue_morse, parity_of_a, trivial_subgroup(parity_of_a.group))
        result = x_degree(thue_morse, code)
        assert result.degree == 2
        assert result.certified_length is not None
        assert z_degree(parity_of_a, code.subgroup, result.witness).degree == 2

    def test_containment_uses_internal_factors(self, thue_morse, parity_of_a):
        code = bifix_code(thue_morse, parity_of_a, trivial_subgroup(parity_of_a.group))
        assert maximal_degree_containment(code, 2).holds

    def test_code_predicates(self):
        assert is_prefix_code({"b", "aa", "aba"})
        assert not is_prefix_code({"a", "ab"})
        assert is_suffix_code({"b", "aa", "aba"})
        assert not is_suffix_code({"a", "ba"})


class TestAverageLength:
    def test_fibonacci_average_is_group_order(self, fibonacci, parity_of_a):
        code = bifix_code(fibonacci, parity_of_a, trivial_subgroup(parity_of_a.group))
        avg = average_length(code, build_measure(fibonacci))
        assert avg.by_code == pytest.approx(2.0)
        assert avg.by_prefixes == pytest.approx(2.0)
        assert avg.difference < 1e-9

    def test_surjectivity_on_minimal_skew(self, fibonacci, parity_of_a):
        check = degree_surjectivity_check(fibonacci, parity_of_a, build_measure(fibonacci))
        assert check.applicable
        assert check.holds
        assert check.degree == 2
        assert check.average_length == pytest.approx(2.0)
        assert check.notes

    def test_surjectivity_not_applicable(self, thue_morse, parity_of_a):
        check = degree_surjectivity_check(thue_morse, parity_of_a, build_measure(thue_morse))
        assert not check.applicable
        assert check.holds is None
