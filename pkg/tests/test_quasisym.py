import pytest
from hypothesis import given, settings, strategies as st

from quasischur.combinatorics import compositions_of
from quasischur.polynomial import QT, SparsePoly, T
from quasischur.quasisym import (
    Expansion,
    expansion_to_poly,
    extract_f_expansion,
    fundamental,
    monomial_quasisym,
)
from quasischur.schur import schur_ssyt


class TestExpansion:
    def test_rejects_mixed_degree(self):
        with pytest.raises(ValueError):
            Expansion("F", 3, {(2, 1): 1, (2, 2): 1})

    def test_rejects_unknown_basis(self):
        with pytest.raises(ValueError):
            Expansion("X", 2, {})

    def test_s_basis_needs_partitions(self):
        with pytest.raises(ValueError):
            Expansion("s", 3, {(1, 2): 1})

    def test_zero_coefficients_dropped(self):
        assert Expansion("F", 2, {(2,): 0}).is_zero()

    def test_json_round_trip(self):
        e = Expansion("F", 3, {(2, 1): QT.integer(2), (1, 1, 1): T})
        assert Expansion.from_json_dict(e.to_json_dict()) == e

    def test_json_sorted_by_index(self):
        e = Expansion("F", 3, {(3,): 1, (1, 2): 1, (2, 1): 1})
        indices = [tuple(t["index"]) for t in e.to_json_dict()["terms"]]
        assert indices == sorted(indices)

    def test_subtraction(self):
        a = Expansion("s", 2, {(2,): 1})
        b = Expansion("s", 2, {(2,): 1, (1, 1): 1})
        assert (a - b) == Expansion("s", 2, {(1, 1): -1})


class TestFundamental:
    def test_strict_pair(self):
        assert fundamental((1, 1), 2) == SparsePoly.monomial(2, (1, 1))

    def test_weak_pairs(self):
        expected = (
            SparsePoly.monomial(2, (2, 0))
            + SparsePoly.monomial(2, (1, 1))
            + SparsePoly.monomial(2, (0, 2))
        )
        assert fundamental((2,), 2) == expected

    def test_forced_sequence(self):
        assert fundamental((2, 1), 2) == SparsePoly.monomial(2, (2, 1))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_variable_stability(self, n):
        for alpha in compositions_of(n):
            wide = fundamental(alpha, n + 1).set_variable_to_zero(n + 1)
            assert wide == fundamental(alpha, n)


class TestExtract:
    def test_round_trip_single_fundamental(self):
        e = extract_f_expansion(fundamental((2, 1), 3))
        assert e == Expansion("F", 3, {(2, 1): 1})

    def test_schur_21(self):
        e = extract_f_expansion(schur_ssyt((2, 1), 3))
        assert e == Expansion("F", 3, {(2, 1): 1, (1, 2): 1})

    @pytest.mark.parametrize("n", range(1, 6))
    def test_h_n_is_single_fundamental(self, n):
        e = extract_f_expansion(schur_ssyt((n,), n))
        assert e == Expansion("F", n, {(n,): 1})

    def test_too_few_variables(self):
        with pytest.raises(ValueError):
            extract_f_expansion(schur_ssyt((2, 1), 2))

    def test_non_quasisymmetric_rejected(self):
        p = SparsePoly.monomial(3, (2, 1, 0))
        with pytest.raises(ValueError):
            extract_f_expansion(p)

    def test_inhomogeneous_rejected(self):
        p = SparsePoly.monomial(2, (1, 0)) + SparsePoly.one(2)
        with pytest.raises(ValueError):
            extract_f_expansion(p)

    @settings(max_examples=40, deadline=None)
    @given(
        n=st.integers(1, 6),
        data=st.data(),
    )
    def test_random_round_trip(self, n, data):
        terms = {}
        for alpha in compositions_of(n):
            c = data.draw(st.integers(-4, 4))
            if c:
                terms[tuple(alpha)] = c
        e = Expansion("F", n, terms)
        recovered = extract_f_expansion(expansion_to_poly(e, n))
        if e.is_zero():
            assert recovered.is_zero()
        else:
            assert recovered == e

    @pytest.mark.parametrize("n", range(1, 6))
    def test_linear_independence(self, n):
        # an exhaustive integer combination with distinct prime-ish weights
        terms = {
            tuple(alpha): 2 * i + 1 for i, alpha in enumerate(compositions_of(n))
        }
        e = Expansion("F", n, terms)
        assert extract_f_expansion(expansion_to_poly(e, n)) == e


class TestExpansionToPoly:
    def test_f_basis(self):
        e = Expansion("F", 2, {(2,): 1})
        assert expansion_to_poly(e, 2) == fundamental((2,), 2)

    def test_empty(self):
        assert expansion_to_poly(Expansion("F", 3), 3).is_zero()

    def test_s_basis_with_coefficient(self):
        e = Expansion("s", 2, {(1, 1): T})
        assert expansion_to_poly(e, 2) == SparsePoly.monomial(2, (1, 1), T)

    def test_m_basis(self):
        e = Expansion("M", 3, {(2, 1): 1})
        assert expansion_to_poly(e, 2) == monomial_quasisym((2, 1), 2)


def test_fundamental_is_m_sum_over_refinements():
    from quasischur.combinatorics import set_of_composition

    for n in range(1, 6):
        for alpha in compositions_of(n):
            sa = set_of_composition(alpha)
            total = SparsePoly.zero(n)
            for beta in compositions_of(n):
                if sa <= set_of_composition(beta):
                    total = total + monomial_quasisym(beta, n)
            assert total == fundamental(alpha, n)
