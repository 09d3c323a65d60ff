import pytest
from hypothesis import given
from hypothesis import strategies as st

from group_density.algebra import (
    GroupMorphism,
    PeriodicPoint,
    WindowPoint,
    cocycle,
    cyclic_group,
    enumerate_subgroups,
    right_cosets,
    subgroup_generated,
    symmetric_group,
    trivial_subgroup,
    whole_group,
    word_image,
)
from group_density.algebra.groups import FiniteGroup, build_group, matrix_group, parse_cycles
from group_density.algebra.subgroups import Subgroup
from group_density.core.exceptions import GroupError, IndexUnavailableError, UnknownLetterError
from group_density.schemas.group import CyclicGroupSpec, ProductGroupSpec, SymmetricGroupSpec, TableGroupSpec

NON_ASSOCIATIVE_LOOP = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]


class TestFiniteGroup:
    @pytest.fixture
    def s3(self):
        return symmetric_group(3)

    def test_cyclic_group_adds_residues(self):
        z5 = cyclic_group(5)
        assert z5.order == 5
        assert z5.mul(3, 4) == 2
        assert z5.inv(2) == 3
        assert z5.identity == 0

    def test_symmetric_group_order_and_labels(self, s3):
        assert s3.order == 6
        assert s3.label(s3.identity) == "()"
        assert {s3.label(g) for g in s3.elements} == {"()", "(1 2)", "(1 3)", "(2 3)", "(1 2 3)", "(1 3 2)"}

    def test_products_read_left_to_right(self, s3):
        """(1 2) followed by (1 2 3) is (1 3)."""
        g, h = s3.element("(1 2)"), s3.element("(1 2 3)")
        assert s3.mul(g, h) == s3.element("(1 3)")
        assert s3.mul(h, g) == s3.element("(2 3)")

    def test_element_resolves_labels_and_indices(self, s3):
        assert s3.element(" (1  2) ") == s3.element("(1 2)")
        assert s3.element(3) == 3
        with pytest.raises(GroupError):
            s3.element("(1 4)")
        with pytest.raises(GroupError):
            s3.element(6)

    def test_element_order(self, s3):
        assert s3.element_order(s3.element("(1 2 3)")) == 3
        assert s3.element_order(s3.element("(1 2)")) == 2
        assert s3.element_order(s3.identity) == 1

    def test_conjugate(self, s3):
        g, h = s3.element("(1 2)"), s3.element("(1 3)")
        assert s3.conjugate(g, h) == s3.element("(2 3)")

    def test_from_table_rejects_non_associative_loop(self):
        with pytest.raises(GroupError, match="not associative"):
            FiniteGroup.from_table(NON_ASSOCIATIVE_LOOP)

    def test_from_table_rejects_non_latin_square(self):
        with pytest.raises(GroupError):
            FiniteGroup.from_table([[0, 1], [1, 1]])

    def test_from_table_rejects_ragged_table(self):
        with pytest.raises(GroupError):
            FiniteGroup.from_table([[0, 1], [1]])

    def test_parse_cycles(self):
        assert parse_cycles("(1 2)(3 4)", 4) == (1, 0, 3, 2)
        assert parse_cycles("()", 3) == (0, 1, 2)
        with pytest.raises(GroupError, match="repeated"):
            parse_cycles("(1 2)(2 3)", 3)
        with pytest.raises(GroupError):
            parse_cycles("(1 5)", 3)

    def test_matrix_group_over_z2(self):
        group = matrix_group([[[0, 1], [1, 1]], [[0, 1], [1, 0]]], 2)
        assert group.order == 6
        assert group.label(group.identity) == "[[1,0],[0,1]]"

    def test_build_group_from_specs(self):
        assert build_group(CyclicGroupSpec(type="cyclic", n=4)).order == 4
        assert build_group(SymmetricGroupSpec(type="symmetric", n=3)).order == 6
        product = build_group(
            ProductGroupSpec(
                type="product",
                factors=[CyclicGroupSpec(type="cyclic", n=2), CyclicGroupSpec(type="cyclic", n=3)],
            )
        )
        assert product.order == 6
        assert product.label(product.identity) == "(0,0)"

    def test_build_group_rejects_bad_table(self):
        with pytest.raises(GroupError):
            build_group(TableGroupSpec(type="table", table=NON_ASSOCIATIVE_LOOP))

    @given(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5))
    def test_s3_is_associative(self, a, b, c):
        s3 = symmetric_group(3)
        assert s3.mul(s3.mul(a, b), c) == s3.mul(a, s3.mul(b, c))

    @given(st.lists(st.integers(0, 5), max_size=8))
    def test_product_of_inverses_reversed_is_inverse(self, elements):
        s3 = symmetric_group(3)
        forward = s3.product(elements)
        backward = s3.product(s3.inv(g) for g in reversed(elements))
        assert s3.mul(forward, backward) == s3.identity


class TestSubgroups:
    @pytest.fixture
    def s3(self):
        return symmetric_group(3)

    def test_generated_subgroup(self, s3):
        a3 = subgroup_generated(s3, [s3.element("(1 2 3)")])
        assert a3.order == 3
        assert a3.index == 2
        assert a3.is_normal()

    def test_transposition_subgroup_is_not_normal(self, s3):
        h = subgroup_generated(s3, [s3.element("(2 3)")])
        assert h.order == 2
        assert not h.is_normal()
        assert len(h.conjugates()) == 3

    def test_canonical_picks_one_representative_per_class(self, s3):
        reps = {subgroup_generated(s3, [s3.element(t)]).canonical() for t in ("(1 2)", "(1 3)", "(2 3)")}
        assert len(reps) == 1

    def test_subgroup_validation(self, s3):
        with pytest.raises(GroupError):
            Subgroup.from_members(s3, [s3.identity, s3.element("(1 2 3)")])
        with pytest.raises(GroupError):
            Subgroup.from_members(s3, [s3.element("(1 2)")])

    def test_right_cosets_of_transposition_subgroup(self, s3):
        h = Subgroup.from_members(s3, [s3.identity, s3.element("(2 3)")])
        partition = right_cosets(s3, h)
        assert partition.count == 3
        assert sorted(len(c) for c in partition.cosets) == [2, 2, 2]
        assert partition.coset_label(partition.coset(s3.identity)) == "H"
        for g in s3.elements:
            assert s3.mul(partition.representatives[partition.coset(g)], s3.inv(g)) in h

    def test_coset_action_is_right_multiplication(self, s3):
        h = Subgroup.from_members(s3, [s3.identity, s3.element("(2 3)")])
        partition = right_cosets(s3, h)
        for g in s3.elements:
            for k in s3.elements:
                assert partition.act(partition.coset(g), k) == partition.coset(s3.mul(g, k))

    def test_coset_by_label(self, s3):
        partition = right_cosets(s3, trivial_subgroup(s3))
        assert partition.count == 6
        assert partition.coset_by_label("(1 2)") == partition.coset(s3.element("(1 2)"))

    def test_right_cosets_reject_foreign_subgroup(self, s3):
        with pytest.raises(GroupError):
            right_cosets(s3, trivial_subgroup(symmetric_group(3)))

    def test_enumerate_subgroups_up_to_conjugacy(self, s3):
        orders = [h.order for h in enumerate_subgroups(s3)]
        assert orders == [1, 2, 3, 6]
        assert [h.order for h in enumerate_subgroups(cyclic_group(6))] == [1, 2, 3, 6]

    def test_whole_group_has_one_coset(self, s3):
        partition = right_cosets(s3, whole_group(s3))
        assert partition.count == 1
        assert partition.coset_label(0) == "H"


class TestMorphisms:
    @pytest.fixture
    def z2(self):
        return cyclic_group(2)

    @pytest.fixture
    def phi(self, z2):
        return GroupMorphism.from_mapping(z2, {"a": 1, "b": 0}, "ab")

    def test_word_image_counts_parity_of_a(self, phi):
        assert word_image(phi, "") == 0
        assert word_image(phi, "abaab") == 1
        assert phi.word_image("aa") == 0

    def test_unknown_letter(self, phi):
        with pytest.raises(UnknownLetterError):
            phi.word_image("abc")
        with pytest.raises(UnknownLetterError):
            phi.image("c")

    def test_from_mapping_requires_every_letter(self, z2):
        with pytest.raises(UnknownLetterError):
            GroupMorphism.from_mapping(z2, {"a": 1}, "ab")

    def test_onto_and_labels(self, z2, phi):
        assert phi.is_onto()
        assert not GroupMorphism.from_mapping(z2, {"a": 0, "b": 0}).is_onto()
        assert phi.as_labels() == {"a": "1", "b": "0"}

    def test_precompose_with_fibonacci(self, phi):
        composed = phi.precompose({"a": "ab", "b": "a"})
        assert composed.images == (1, 1)

    def test_s3_images_by_label(self):
        s3 = symmetric_group(3)
        phi = GroupMorphism.from_mapping(s3, {"a": "(1 2)", "b": "(1 3)"})
        assert phi.word_image("ab") == s3.element("(1 2 3)")
        assert phi.is_onto()


class TestCocycle:
    @pytest.fixture
    def phi(self):
        return GroupMorphism.from_mapping(cyclic_group(3), {"a": 1, "b": 0, "c": 2})

    def test_periodic_point(self, phi):
        x = PeriodicPoint("abc")
        assert cocycle(phi, x, 0) == 0
        assert cocycle(phi, x, 2) == 1
        assert cocycle(phi, x, 3) == 0
        assert cocycle(phi, x, -1) == phi.group.inv(phi.image("c"))

    @given(st.integers(-12, 12), st.integers(-12, 12))
    def test_cocycle_identity(self, m, n):
        """φ⁽ᵐ⁺ⁿ⁾(x) = φ⁽ᵐ⁾(x)·φ⁽ⁿ⁾(Sᵐx)."""
        phi = GroupMorphism.from_mapping(cyclic_group(3), {"a": 1, "b": 0, "c": 2})
        x = PeriodicPoint("abcab")
        group = phi.group
        assert cocycle(phi, x, m + n) == group.mul(cocycle(phi, x, m), cocycle(phi, x.shifted(m), n))

    def test_window_point_refuses_unknown_indices(self, phi):
        x = WindowPoint("abcab", start=-2)
        assert cocycle(phi, x, 3) == phi.word_image("cab")
        assert cocycle(phi, x, -2) == phi.group.inv(phi.word_image("ab"))
        with pytest.raises(IndexUnavailableError):
            cocycle(phi, x, 4)
        with pytest.raises(IndexUnavailableError):
            cocycle(phi, x, -3)
