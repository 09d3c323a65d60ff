import pytest

from group_density.algebra import GroupMorphism, cyclic_group
from group_density.core.exceptions import PreconditionError, UnknownLetterError
from group_density.shifts import SubstitutionShift
from group_density.subst_tools import (
    format_free_word,
    free_group_invertible,
    invertibility_order,
    parse_free_word,
    return_basis_check,
    skew_components_report,
    skew_substitution,
    stallings_subgroup,
)


@pytest.fixture
def fourletter():
    return SubstitutionShift({"a": "baa", "b": "adc", "c": "cdc", "d": "ad"}, name="fourletter")


@pytest.fixture
def fourletter_phi():
    return GroupMorphism.from_mapping(cyclic_group(2), {"a": 0, "b": 0, "c": 1, "d": 1})


@pytest.fixture
def unimodular():
    return SubstitutionShift({"a": "aab", "b": "acb", "c": "ba"})


class TestInvertibility:
    def test_fibonacci_orders(self, fibonacci, parity_of_a):
        assert invertibility_order(fibonacci, parity_of_a).order == 3
        z3 = GroupMorphism.from_mapping(cyclic_group(3), {"a": 1, "b": 0})
        assert invertibility_order(fibonacci, z3).order == 8

    def test_fourletter_is_invertible_at_once(self, fourletter, fourletter_phi):
        result = invertibility_order(fourletter, fourletter_phi)
        assert result.order == 1
        assert result.invertible

    def test_definitive_negative(self, unimodular, s3):
        phi = GroupMorphism.from_mapping(s3, {"a": "(1 2 3)", "b": "(1 2)", "c": "(1 2 3)"})
        result = invertibility_order(unimodular, phi)
        assert not result.invertible
        assert result.definitive

    def test_cap_cuts_search_short(self, fibonacci):
        z3 = GroupMorphism.from_mapping(cyclic_group(3), {"a": 1, "b": 0})
        result = invertibility_order(fibonacci, z3, cap=4)
        assert result.order is None
        assert not result.definitive


class TestSkewSubstitution:
    def test_fibonacci_single_component(self, fibonacci, parity_of_a):
        lifted = skew_substitution(fibonacci, parity_of_a)
        assert lifted.power == 3
        assert len(lifted.components) == 1
        assert all(lifted.component_primitive())
        for symbol, image in lifted.rules.items():
            assert lifted.skew.project(image) == fibonacci.apply(lifted.skew.pair(symbol)[1], 3)

    def test_fourletter_components(self, fourletter, fourletter_phi):
        report = skew_components_report(fourletter, fourletter_phi)
        assert report.power == 1
        assert report.count == 2
        assert len(report.primitive) == 2

    def test_labelled_rules(self, fibonacci, parity_of_a):
        rules = skew_substitution(fibonacci, parity_of_a).labelled_rules()
        assert rules["0:a"][0] == "0:a"
        assert len(rules["0:a"]) == len(fibonacci.apply("a", 3))

    def test_not_invertible(self, unimodular, s3):
        phi = GroupMorphism.from_mapping(s3, {"a": "(1 2 3)", "b": "(1 2)", "c": "(1 2 3)"})
        with pytest.raises(PreconditionError):
            skew_substitution(unimodular, phi)

    def test_needs_substitution(self, periodic_abc):
        phi = GroupMorphism.from_mapping(cyclic_group(2), {"a": 1, "b": 1, "c": 0})
        with pytest.raises(PreconditionError):
            skew_substitution(periodic_abc, phi)


class TestFreeWords:
    def test_parse_and_format(self):
        word = parse_free_word("ab-")
        assert word == (("a", 1), ("b", -1))
        assert format_free_word(word) == "ab-"
        assert parse_free_word("abb-a-") == ()

    def test_misplaced_inverse(self):
        with pytest.raises(UnknownLetterError):
            parse_free_word("-a")
        with pytest.raises(UnknownLetterError):
            parse_free_word("a--")


class TestStallings:
    def test_fibonacci_images_generate_free_group(self):
        graph = stallings_subgroup(["ab", "a"])
        assert graph.is_folded()
        assert graph.is_whole_group("ab")
        assert graph.contains("b")

    def test_cyclic_subgroup(self):
        graph = stallings_subgroup(["aa"])
        assert graph.rank == 1
        assert graph.contains("aaaa")
        assert not graph.contains("a")
        assert graph.contains("a-a-")

    def test_shared_prefix_folds(self):
        graph = stallings_subgroup(["ab", "ac"])
        assert graph.rank == 2
        assert graph.contains("b-c")
        assert not graph.contains("bc")
        assert len(graph.basis()) == 2

    def test_basis_generates_same_subgroup(self):
        graph = stallings_subgroup(["aba-", "bb"])
        rebuilt = stallings_subgroup(graph.basis())
        assert rebuilt.rank == graph.rank
        for word in graph.basis():
            assert graph.contains(word)
            assert rebuilt.contains(word)


class TestReturnBasis:
    def test_fibonacci_returns_form_a_basis(self, fibonacci):
        report = return_basis_check(fibonacci, "a")
        assert report.returns == ("a", "ab")
        assert report.rank == 2
        assert report.basis
        assert report.complete

    def test_fourletter_returns_have_lower_rank(self, fourletter):
        report = return_basis_check(fourletter, "a")
        assert report.rank == 3
        assert not report.basis


class TestFreeGroupInvertible:
    def test_fibonacci(self, fibonacci):
        result = free_group_invertible(fibonacci)
        assert result.invertible
        assert abs(result.determinant) == 1

    def test_thue_morse(self, thue_morse):
        result = free_group_invertible(thue_morse)
        assert not result.invertible
        assert result.determinant == 0
