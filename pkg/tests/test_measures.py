import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pytest
import sympy

from group_density.core.exceptions import MeasureError, ReducibleShiftError
from group_density.measures import build_measure, markov_measure, parry_measure, perron_vector
from group_density.measures.markov import parse_probability
from group_density.schemas.shift import MarkovMeasureModel, ParryMeasureSpec, UniqueMeasureSpec
from group_density.shifts import SFTShift

GOLDEN = (1 + math.sqrt(5)) / 2


def golden_markov(**overrides) -> MarkovMeasureModel:
    data = {"type": "markov", "step": 1, "transitions": {"a": {"a": "1/2", "b": "1/2"}, "b": {"a": "1"}}}
    data.update(overrides)
    return MarkovMeasureModel.model_validate(data)


class TestPerronVector:
    def test_primitive_matrix(self):
        result = perron_vector(np.array([[1.0, 1.0], [1.0, 0.0]]))
        assert result.eigenvalue == pytest.approx(GOLDEN)
        assert result.vector.sum() == pytest.approx(1.0)
        assert result.vector[0] / result.vector[1] == pytest.approx(GOLDEN)

    def test_periodic_matrix_converges(self):
        result = perron_vector(np.array([[0.0, 1.0], [1.0, 0.0]]))
        assert result.eigenvalue == pytest.approx(1.0)
        assert result.vector.tolist() == pytest.approx([0.5, 0.5])

    def test_reducible_matrix(self):
        with pytest.raises(MeasureError):
            perron_vector(np.array([[1.0, 1.0], [0.0, 1.0]]))


class TestMarkovMeasure:
    def test_rational_markov_measure(self, golden_mean):
        measure = markov_measure(golden_mean, golden_markov())
        assert measure.is_rational
        assert measure.rational_value("a") == sympy.Rational(2, 3)
        assert measure.rational_value("ab") == sympy.Rational(1, 3)
        assert measure.rational_value("bb") == 0
        assert measure.value("aa") == pytest.approx(1 / 3)
        assert measure.value("") == pytest.approx(1.0)

    def test_supplied_stationary_vector(self, golden_mean):
        measure = markov_measure(golden_mean, golden_markov(pi={"a": "2/3", "b": "1/3"}))
        assert measure.rational_value("b") == sympy.Rational(1, 3)

    def test_non_stationary_vector(self, golden_mean):
        with pytest.raises(MeasureError, match="stationary"):
            markov_measure(golden_mean, golden_markov(pi={"a": "1/2", "b": "1/2"}))

    def test_row_must_sum_to_one(self, golden_mean):
        spec = golden_markov(transitions={"a": {"a": "1/2", "b": "1/3"}, "b": {"a": "1"}})
        with pytest.raises(MeasureError, match="sums to"):
            markov_measure(golden_mean, spec)

    def test_row_must_match_allowed_extensions(self, golden_mean):
        spec = golden_markov(transitions={"a": {"a": "1/2", "b": "1/2"}, "b": {"a": "1/2", "b": "1/2"}})
        with pytest.raises(MeasureError, match="allowed extensions"):
            markov_measure(golden_mean, spec)

    def test_reducible_shift(self):
        shift = SFTShift.from_forbidden("ab", 1, ["ba"])
        with pytest.raises(ReducibleShiftError):
            parry_measure(shift)

    def test_parse_probability(self):
        assert parse_probability("3/4") == (0.75, sympy.Rational(3, 4))
        assert parse_probability(0.5)[1] == sympy.Rational(1, 2)
        with pytest.raises(MeasureError):
            parse_probability("half")


class TestParryMeasure:
    def test_golden_mean(self, golden_mean):
        measure = parry_measure(golden_mean)
        assert measure.backend == "parry"
        assert measure.value("a") == pytest.approx(GOLDEN**2 / (GOLDEN**2 + 1))
        assert measure.transitions["a"]["a"] == pytest.approx(1 / GOLDEN)
        assert measure.transitions["b"]["a"] == pytest.approx(1.0)
        assert measure.entropy() == pytest.approx(math.log(GOLDEN))
        assert measure.value("bb") == 0.0

    def test_consistency(self, golden_mean):
        assert parry_measure(golden_mean).consistency_residual(4) < 1e-9


class TestSubstitutionMeasure:
    def test_fibonacci_frequencies(self, fibonacci):
        measure = build_measure(fibonacci)
        assert measure.value("a") == pytest.approx(1 / GOLDEN)
        assert measure.value("b") == pytest.approx(GOLDEN**-2)
        assert measure.value("aa") == pytest.approx(GOLDEN**-3)
        assert measure.value("bb") == 0.0

    def test_thue_morse_frequencies(self, thue_morse):
        measure = build_measure(thue_morse)
        assert measure.value("aa") == pytest.approx(1 / 6)
        assert measure.value("ab") == pytest.approx(1 / 3)
        assert all(mu == pytest.approx(1 / 6) for mu in measure.distribution(3).values())

    def test_marginals_are_consistent(self, fibonacci):
        assert build_measure(fibonacci).consistency_residual(4) < 1e-8

    def test_block_matrix_shape(self, fibonacci):
        blocks, matrix = build_measure(fibonacci).block_matrix(2)
        assert blocks == ("aa", "ab", "ba")
        assert matrix.sum(axis=1).tolist() == [2.0, 2.0, 1.0]

    def test_concurrent_marginals(self, thue_morse):
        serial = {n: build_measure(thue_morse).distribution(n) for n in range(1, 8)}
        shared = build_measure(thue_morse)
        shared.distribution(8)
        lengths = list(range(1, 8)) * 4
        with ThreadPoolExecutor(max_workers=8) as pool:
            results = list(pool.map(shared.distribution, lengths))
        for n, result in zip(lengths, results, strict=True):
            assert result == pytest.approx(serial[n])


class TestPeriodicMeasure:
    def test_counts_occurrences(self, periodic_abc):
        measure = build_measure(periodic_abc)
        assert measure.rational_value("ab") == sympy.Rational(1, 3)
        assert measure.rational_value("ac") == 0
        assert measure.rational_value("") == 1
        assert measure.rational_mass(["a", "b"]) == sympy.Rational(2, 3)


class TestBuildMeasure:
    def test_defaults(self, golden_mean, fibonacci):
        assert build_measure(golden_mean).backend == "parry"
        assert build_measure(fibonacci).backend == "substitution-perron"

    def test_kind_mismatch(self, golden_mean, fibonacci):
        with pytest.raises(MeasureError):
            build_measure(golden_mean, UniqueMeasureSpec(type="unique"))
        with pytest.raises(MeasureError):
            build_measure(fibonacci, ParryMeasureSpec(type="parry"))
