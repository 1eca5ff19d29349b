"""Character/content-product pipeline and cumulant inversion."""

import math
from fractions import Fraction

import pytest

from hurwitz.algebra import GPoly
from hurwitz.partitions import CapExceeded
from hurwitz.tau import (
    HurwitzResult,
    connected_any,
    content_product,
    genus_slice,
    hurwitz_any,
)

g = GPoly.var
half = Fraction(1, 2)


def test_content_product_small():
    assert content_product((2,), 1).series.coeff(1) == g(1)
    assert content_product((2, 1), 2).series.coeff(2) == g(2) * 2 - g(1) ** 2
    assert content_product((3,), 3).series.coeff(3) == g(1) * g(2) * 6 + g(3) * 9
    assert content_product((), 3).series.coeff(0) == GPoly.one()


def test_content_product_graded():
    for lam in [(3, 1), (2, 2), (4,), (2, 1, 1)]:
        assert content_product(lam, 5).series.is_graded()


def test_hurwitz_any_published_values():
    assert hurwitz_any((2,), 1) == g(1).scale(half)
    assert hurwitz_any((2, 1), 3) == g(1) * g(2) + g(3).scale(Fraction(3, 2))
    assert hurwitz_any((3, 2, 1), 3) == (g(1) ** 3 + g(1) * g(2)).scale(Fraction(1, 6))
    assert hurwitz_any((1,), 0) == GPoly.one()
    for d in range(1, 5):
        assert hurwitz_any((1,), d).is_zero()


def test_connected_any_published_values():
    assert connected_any((2, 1), 3) == g(1) * g(2) + g(3)
    want_222 = (
        g(1) ** 4 * g(3) * 2 + g(2) ** 2 * g(3) * 11 + g(3) * g(4) * 17
        + g(1) ** 3 * (g(2) ** 2 * 5 + g(4) * 13) + g(2) * g(5) * 13
        + g(1) ** 2 * (g(2) * g(3) * 11 + g(5) * 9) * 3
        + g(1) * (g(2) ** 3 * 7 + g(3) ** 2 * 22 + g(2) * g(4) * 36 + g(6) * 23)
        + g(7) * 7
    ).scale(Fraction(1, 6))
    assert connected_any((2, 2, 2), 7) == want_222


def test_single_part_connected_equals_nonconnected():
    for mu1 in (1, 2, 3, 4):
        for d in range(6):
            assert connected_any((mu1,), d) == hurwitz_any((mu1,), d)


def test_base_case_identity_profile():
    for n in range(1, 7):
        assert hurwitz_any((1,) * n, 0) == GPoly.const(Fraction(1, math.factorial(n)))
    assert hurwitz_any((2, 1, 1), 0).is_zero()


def test_genus_slice():
    assert genus_slice(0, (2,)) == g(1).scale(half)
    assert genus_slice(1, (2,)) == g(3).scale(half)
    want = (g(2) ** 2 + g(1) * g(3) + g(4) * 2).scale(Fraction(1, 3))
    assert genus_slice(0, (1, 1, 1)) == want


def test_caps():
    with pytest.raises(CapExceeded):
        hurwitz_any((11,), 1)
    with pytest.raises(CapExceeded):
        hurwitz_any((2,), 13)
    assert hurwitz_any((2,), 13, degree_cap=13) == g(13).scale(half)


def test_values_are_sorted_insensitive():
    assert hurwitz_any((1, 2), 3) == hurwitz_any((2, 1), 3)
    assert connected_any((1, 1, 2), 5) == connected_any((2, 1, 1), 5)


def test_result_json_round_trip():
    res = HurwitzResult((2, 1), 3, True, "tau", connected_any((2, 1), 3))
    again = HurwitzResult.from_json(res.to_json())
    assert again == res

    numeric = HurwitzResult((2,), 1, False, "oracle", Fraction(3, 4), "quantum:q=1/3")
    assert HurwitzResult.from_json(numeric.to_json()) == numeric
