"""Exact complex rationals and interval-decided weighted comparisons."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cesarospec.exact import (
    ComplexRational,
    compare_seminorms,
    compare_weighted,
    parse_complex_rational,
    sign_minus_exp,
    weighted_argmax,
)

rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=40)


class TestComplexRational:
    def test_field_ops(self):
        z = ComplexRational(Fraction(2, 5), Fraction(3, 10))
        w = ComplexRational(Fraction(-1), Fraction(1, 2))
        assert (z + w).re == Fraction(-3, 5)
        assert (z * w) == ComplexRational(Fraction(-11, 20), Fraction(-1, 10))
        assert (z - z).is_zero()

    def test_division_is_exact_inverse(self):
        z = ComplexRational(Fraction(2, 5), Fraction(3, 10))
        assert (z / z) == ComplexRational(1)
        assert z * (1 / z) == ComplexRational(1)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            ComplexRational(1) / ComplexRational(0)

    def test_scalar_mixing(self):
        z = ComplexRational(Fraction(1, 2), Fraction(1, 3))
        assert 2 * z == ComplexRational(1, Fraction(2, 3))
        assert z + Fraction(1, 2) == ComplexRational(1, Fraction(1, 3))
        assert 1 - z == ComplexRational(Fraction(1, 2), Fraction(-1, 3))

    def test_conjugate_and_abs2(self):
        z = ComplexRational(Fraction(3), Fraction(-4))
        assert z.conjugate() == ComplexRational(3, 4)
        assert z.abs2() == 25
        assert abs(z) == pytest.approx(5.0)

    def test_is_real(self):
        assert ComplexRational(Fraction(7, 3)).is_real()
        assert not ComplexRational(0, 1).is_real()

    def test_to_complex(self):
        assert complex(ComplexRational(Fraction(2, 5), Fraction(3, 10))) \
            == 0.4 + 0.3j

    def test_str_form(self):
        assert str(ComplexRational(Fraction(2, 5), Fraction(3, 10))) \
            == "2/5+3/10i"
        assert str(ComplexRational(Fraction(-1), Fraction(-1, 2))) == "-1-1/2i"

    @given(a=rationals, b=rationals, c=rationals, d=rationals)
    @settings(max_examples=100)
    def test_matches_float_arithmetic(self, a, b, c, d):
        z, w = ComplexRational(a, b), ComplexRational(c, d)
        zf, wf = complex(z), complex(w)
        assert complex(z * w) == pytest.approx(zf * wf, abs=1e-9)
        assert complex(z + w) == pytest.approx(zf + wf, abs=1e-9)
        if not w.is_zero():
            assert complex(z / w) == pytest.approx(zf / wf, rel=1e-9, abs=1e-9)


class TestParse:
    @pytest.mark.parametrize("text,expected", [
        ("2", ComplexRational(2)),
        ("-1/3", ComplexRational(Fraction(-1, 3))),
        ("0.4", ComplexRational(Fraction(2, 5))),
        ("0.4+0.3i", ComplexRational(Fraction(2, 5), Fraction(3, 10))),
        ("1/2-3/4i", ComplexRational(Fraction(1, 2), Fraction(-3, 4))),
        ("2i", ComplexRational(0, 2)),
        ("-i", ComplexRational(0, -1)),
    ])
    def test_accepts(self, text, expected):
        assert parse_complex_rational(text) == expected

    @pytest.mark.parametrize("bad", ["", "i+i", "abc", "1+2j+3i"])
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_complex_rational(bad)

    @given(a=rationals, b=rationals)
    @settings(max_examples=50)
    def test_round_trip(self, a, b):
        z = ComplexRational(a, b)
        assert parse_complex_rational(str(z)) == z


class TestSignMinusExp:
    def test_known_signs(self):
        assert sign_minus_exp(Fraction(3), Fraction(1)) == 1   # 3 > e
        assert sign_minus_exp(Fraction(2), Fraction(1)) == -1  # 2 < e
        assert sign_minus_exp(Fraction(1), Fraction(0)) == 0
        assert sign_minus_exp(Fraction(-1), Fraction(5)) == -1

    def test_tight_separation(self):
        # e = 2.718281828459045...; these rationals straddle it closely
        assert sign_minus_exp(Fraction(271_828_183, 100_000_000), 1) == 1
        assert sign_minus_exp(Fraction(271_828_182, 100_000_000), 1) == -1

    @given(p=st.fractions(min_value=Fraction(1, 100),
                          max_value=Fraction(100), max_denominator=1000),
           u=st.fractions(min_value=Fraction(-5), max_value=Fraction(5),
                          max_denominator=60))
    @settings(max_examples=100)
    def test_agrees_with_float_when_separated(self, p, u):
        diff = float(p) - math.exp(float(u))
        if abs(diff) > 1e-6:
            assert sign_minus_exp(p, u) == (1 if diff > 0 else -1)


class TestWeightedComparisons:
    def test_compare_weighted_oracle(self):
        # |1| e^{-1} vs |1| e^{-2}: the lighter exponent wins
        assert compare_weighted(1, 1, 2, 1, 1) == 1
        assert compare_weighted(2, 1, 1, 1, 1) == -1
        assert compare_weighted(1, 1, 1, 1, 1) == 0
        # weight gap can be overcome by magnitude: 3 e^{-2} vs 1 e^{-1}
        assert compare_weighted(2, 3, 1, 1, 1) == 1

    def test_zero_magnitudes(self):
        assert compare_weighted(1, 0, 2, 0, 1) == 0
        assert compare_weighted(1, 0, 2, 1, 1) == -1
        assert compare_weighted(1, 1, 2, 0, 1) == 1

    def test_complex_magnitudes(self):
        z = ComplexRational(3, 4)  # |z| = 5
        assert compare_weighted(1, z, 1, 5, 1) == 0
        assert compare_weighted(1, z, 1, 6, 1) == -1

    def test_weighted_argmax_basis(self):
        alphas = [Fraction(n) for n in range(1, 6)]
        xs = [Fraction(0), Fraction(1), Fraction(0), Fraction(0), Fraction(0)]
        assert weighted_argmax(alphas, xs, 1) == 1

    def test_weighted_argmax_tie_prefers_earliest(self):
        alphas = [Fraction(1), Fraction(1)]
        xs = [Fraction(2), Fraction(2)]
        assert weighted_argmax(alphas, xs, 1) == 0

    @given(xs=st.lists(rationals, min_size=1, max_size=12),
           k=st.integers(min_value=1, max_value=5))
    @settings(max_examples=60)
    def test_argmax_matches_float_argmax(self, xs, k):
        alphas = [Fraction(n) for n in range(1, len(xs) + 1)]
        got = weighted_argmax(alphas, xs, k)
        weights = [abs(float(x)) * math.exp(-n / k)
                   for n, x in enumerate(xs, start=1)]
        best = max(weights)
        # float route may be off exactly at near-ties; only check clear wins
        contenders = [i for i, v in enumerate(weights) if v > best - 1e-12]
        assert got in contenders

    def test_compare_seminorms_oracle(self):
        alphas = [Fraction(n) for n in range(1, 4)]
        e1 = [Fraction(1), Fraction(0), Fraction(0)]
        e2 = [Fraction(0), Fraction(1), Fraction(0)]
        assert compare_seminorms(alphas, 1, e1, e2) == 1
        assert compare_seminorms(alphas, 1, e2, e1) == -1
        assert compare_seminorms(alphas, 1, e1, e1) == 0
