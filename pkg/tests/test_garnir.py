"""Two-row relation data, splits, coefficients, and linear combinations."""

import itertools

import pytest
from hypothesis import given, strategies as st

from heckehom import (
    Composition,
    GarnirDatum,
    LaurentPoly,
    LinComb,
    Multiset,
    ParseError,
    build_tableau,
    enumerate_splits,
    garnir_relation,
    iter_valid_data,
    parse_tableau,
    split_coefficient,
    split_from_tableau,
    straightening_datum,
    two_row_straighten_step,
)

from .strategies import multisets


def small_data():
    return st.sampled_from(list(iter_valid_data(6, 4)))


class TestDatumValidation:
    def test_pool_must_exceed_top_length(self):
        with pytest.raises(ValueError):
            GarnirDatum(Multiset(()), Multiset((1, 2)), Multiset(()), 2)

    def test_fixed_top_must_fit(self):
        with pytest.raises(ValueError):
            GarnirDatum(Multiset((1, 1, 1)), Multiset((1, 2, 3)), Multiset(()), 2)

    def test_top_row_must_be_at_least_half(self):
        # rows would be (2, 3): not a partition shape
        with pytest.raises(ValueError):
            GarnirDatum(Multiset(()), Multiset((1, 2, 2)), Multiset((1, 1)), 2)

    def test_shape_pinned(self):
        datum = GarnirDatum(Multiset((1,)), Multiset((2, 2, 3, 3)), Multiset(()), 3)
        assert datum.shape == Composition((3, 2))
        assert datum.take_size == 2
        assert datum.n == 5


class TestSplits:
    @given(small_data())
    def test_split_count_is_binomial(self, datum):
        splits = list(enumerate_splits(datum))
        pool = datum.pool.elements()
        expected = len(set(
            tuple(sorted(c))
            for c in itertools.combinations(pool, datum.take_size)))
        assert len(splits) == expected

    @given(small_data())
    def test_split_tableau_round_trip(self, datum):
        for split in enumerate_splits(datum):
            tab = build_tableau(datum, split)
            assert split_from_tableau(datum, tab) == split

    @given(small_data())
    def test_coefficients_are_polynomials_with_positive_coeffs(self, datum):
        for split in enumerate_splits(datum):
            coeff = split_coefficient(datum, split)
            assert coeff.min_exponent() >= 0
            assert all(c > 0 for _, c in coeff.items())


class TestRelation:
    def test_worked_small_example(self):
        datum = GarnirDatum(Multiset(()), Multiset((1, 1, 2)), Multiset((2,)), 2)
        rel = garnir_relation(datum)
        expect = {
            parse_tableau("1 1 / 2 2"): LaurentPoly.parse("1 + q"),
            parse_tableau("1 2 / 1 2"): LaurentPoly.one(),
        }
        assert dict(rel.items()) == expect

    @given(small_data())
    def test_one_term_per_split(self, datum):
        rel = garnir_relation(datum)
        assert len(rel) == len(list(enumerate_splits(datum)))

    def test_relation_never_empty(self):
        datum = GarnirDatum(Multiset(()), Multiset((1, 2)), Multiset(()), 1)
        rel = garnir_relation(datum)
        assert not rel.is_zero

    def test_valid_data_count_small(self):
        data = list(iter_valid_data(4, 3))
        assert all(d.n <= 4 for d in data)
        assert all(d.pool.size > d.top_len for d in data)
        assert len(data) == len(set(data))


class TestStraighteningDatum:
    def test_rejects_semistandard(self):
        with pytest.raises(ValueError):
            straightening_datum(parse_tableau("1 1 / 2 2"))

    def test_rejects_more_than_two_rows(self):
        with pytest.raises(ValueError):
            straightening_datum(parse_tableau("1 2 / 1 2 / 1"))

    def test_worked_example_datum(self):
        tab = parse_tableau("1 2 2 3 4 / 1 3 3 3")
        datum = straightening_datum(tab)
        assert datum.fixed_top == Multiset(())
        assert datum.pool == Multiset((1, 1, 2, 2, 3, 4))
        assert datum.fixed_bottom == Multiset((3, 3, 3))
        assert datum.top_len == 5

    def test_rightmost_column_rule(self):
        tab = parse_tableau("1 2 2 3 4 / 1 3 3 3")
        datum = straightening_datum(tab, column_rule="rightmost")
        # rightmost violating column holds 3 above and 3 below
        assert datum.fixed_top == Multiset((1, 2, 2))
        assert datum.pool == Multiset((1, 3, 3, 3, 3, 4))
        assert datum.fixed_bottom == Multiset(())

    def test_identity_split_has_unit_coefficient(self):
        tab = parse_tableau("1 2 2 3 4 / 1 3 3 3")
        for rule in ("leftmost", "rightmost"):
            datum = straightening_datum(tab, column_rule=rule)
            split = split_from_tableau(datum, tab)
            assert split_coefficient(datum, split) == LaurentPoly.one()


class TestTwoRowStep:
    def test_worked_example_first_step(self):
        tab = parse_tableau("1 2 2 3 4 / 1 3 3 3")
        step = two_row_straighten_step(tab)
        expect = {
            parse_tableau("1 1 2 2 3 / 3 3 3 4"): LaurentPoly.parse("-q^3"),
            parse_tableau("1 1 2 2 4 / 3 3 3 3"):
                LaurentPoly.parse("-1 - q - q^2 - q^3"),
            parse_tableau("1 1 2 3 4 / 2 3 3 3"): LaurentPoly.parse("-1"),
        }
        assert dict(step.items()) == expect

    def test_single_column_swap(self):
        step = two_row_straighten_step(parse_tableau("2 / 1"))
        assert dict(step.items()) == {
            parse_tableau("1 / 2"): LaurentPoly.parse("-1")}

    def test_never_returns_input(self):
        tab = parse_tableau("1 2 / 1 2")
        step = two_row_straighten_step(tab)
        assert tab not in step.support()


class TestLinComb:
    def test_constructor_checks_shape_and_type(self):
        tab = parse_tableau("1 1 / 2")
        with pytest.raises(ValueError):
            LinComb(Composition((2, 1)), Composition((1, 1, 1)), {tab: 1})
        with pytest.raises(ValueError):
            LinComb(Composition((3,)), Composition((2, 1)), {tab: 1})

    def test_zero_terms_dropped(self):
        tab = parse_tableau("1 1 / 2")
        comb = LinComb.single(tab) - LinComb.single(tab)
        assert comb.is_zero
        assert len(comb) == 0

    def test_scale_and_add(self):
        tab = parse_tableau("1 1 / 2")
        comb = LinComb.single(tab).scale(LaurentPoly.parse("q"))
        assert comb.coefficient(tab) == LaurentPoly.parse("q")
        total = comb + comb
        assert total.coefficient(tab) == LaurentPoly.parse("2q")

    def test_text_rendering_pinned(self):
        datum = GarnirDatum(Multiset(()), Multiset((1, 1, 2)), Multiset((2,)), 2)
        rel = garnir_relation(datum)
        assert rel.to_text() == "(1 + q) * 1 1 / 2 2\n(1) * 1 2 / 1 2"

    @given(small_data())
    def test_json_round_trip(self, datum):
        rel = garnir_relation(datum)
        assert LinComb.from_json(rel.to_json()) == rel

    def test_from_json_rejects_garbage(self):
        for bad in ({}, {"shape": [2]}, [1], {"shape": [2], "type": [2],
                                             "terms": [{}]}):
            with pytest.raises(ParseError):
                LinComb.from_json(bad)

    def test_from_json_accumulates_duplicates(self):
        data = {
            "shape": [1], "type": [1],
            "terms": [{"coeff": "q", "rows": [[1]]},
                      {"coeff": "1", "rows": [[1]]}],
        }
        comb = LinComb.from_json(data)
        assert comb.coefficient(parse_tableau("1")) == LaurentPoly.parse("1 + q")
