"""Rho grid, closed forms, the direct expansion, and cumulant assembly."""

import json
from fractions import Fraction

import pytest

from hurwitz.algebra import GPoly
from hurwitz.correlator import (
    RhoTable,
    connected_closed_form,
    connected_from_wtilde,
    connected_len1,
    connected_len2,
    connected_len3,
    connected_via_wtilde,
    nonconnected_assemble,
    rho_coeff,
    rho_series,
    wtilde_expand,
    wtilde_series,
)
from hurwitz.tau import connected_any, hurwitz_any

g = GPoly.var
half = Fraction(1, 2)


def test_rho_published_values():
    assert rho_coeff(0, 1, 1) == g(1).scale(half)
    assert rho_coeff(0, 1, 2) == g(2).scale(-half)
    assert rho_coeff(0, 0, 0) == GPoly.one()
    for d in range(1, 6):
        assert rho_coeff(0, 0, d).is_zero()


def test_rho_0_2_symmetry_forced_value():
    # the published grid shows the opposite sign on the g3 term; the value
    # is forced by the transpose symmetry and by direct convolution
    want = -g(1) * g(2) - g(3).scale(Fraction(3, 2))
    assert rho_coeff(0, 2, 3) == want
    assert rho_coeff(2, 0, 3) == g(1) * g(2) + g(3).scale(Fraction(3, 2))


def test_rho_symmetry_and_homogeneity_grid():
    for a in range(6):
        for b in range(6):
            series = rho_series(a, b, 6)
            for d in range(7):
                coeff = series.coeff(d)
                assert coeff.is_homogeneous(d)
                assert coeff == rho_coeff(b, a, d).scale((-1) ** (a + b + d))


def test_connected_len1():
    assert connected_len1(2, 1) == g(1).scale(half)
    assert connected_len1(2, 3) == g(3).scale(half)
    assert connected_len1(1, 0) == GPoly.one()


def test_connected_len2():
    assert connected_len2(2, 1, 3) == g(1) * g(2) + g(3)
    want_22 = (g(1) * g(1) * g(2)).scale(half) + (g(2) * g(2)).scale(Fraction(1, 4)) \
        + g(1) * g(3) + g(4).scale(half)
    assert connected_len2(2, 2, 4) == want_22
    assert connected_len2(1, 1, 0).is_zero()


def test_connected_len3():
    want = (g(2) ** 2 + g(1) * g(3) + g(4).scale(2)).scale(Fraction(1, 3))
    assert connected_len3(1, 1, 1, 4) == want
    want_211 = (g(1) ** 2 * g(3) * 2 + g(2) * g(3) * 7
                + g(1) * (g(2) ** 2 * 3 + g(4) * 7) + g(5) * 5).scale(half)
    assert connected_len3(2, 1, 1, 5) == want_211
    assert connected_len3(1, 1, 1, 3).is_zero()  # parity


def test_nonconnected_assemble():
    supplier = connected_closed_form
    assert nonconnected_assemble((2, 1), 3, supplier) == \
        g(1) * g(2) + g(3).scale(Fraction(3, 2))
    # single part: nonconnected equals connected
    assert nonconnected_assemble((2,), 3, supplier) == connected_len1(2, 3)
    # two equal parts at low order: only the split contributes
    assert nonconnected_assemble((2, 2), 2, supplier) == (g(1) ** 2).scale(Fraction(1, 8))


def test_nonconnected_matches_character_pipeline():
    for mu in [(2,), (3,), (2, 1), (2, 2), (3, 1), (2, 1, 1), (2, 2, 1)]:
        for d in range(7):
            assert nonconnected_assemble(mu, d, connected_closed_form) == hurwitz_any(mu, d)


def test_wtilde_n1_matches_len1():
    arr = wtilde_expand(1, (3,), 4)
    for mu1 in (1, 2, 3, 4):
        for d in range(5):
            assert arr.coeff((mu1 - 1,), d) == connected_len1(mu1, d).scale(mu1)


def test_wtilde_n2_example():
    series = wtilde_series(2, (1, 0), 3)
    assert series.coeff(3) == (g(1) * g(2) + g(3)).scale(2)
    # no constant term: the kernel cancellation is exact
    assert wtilde_series(2, (0, 0), 0).coeff(0).is_zero()


def test_wtilde_agrees_with_moebius_inversion():
    for mu in [(2, 1), (2, 2), (3, 1), (1, 1, 1), (2, 1, 1), (2, 2, 1)]:
        for d in range(6):
            assert connected_via_wtilde(mu, d) == connected_any(mu, d)


def test_wtilde_array_extraction():
    arr = wtilde_expand(2, (2, 1), 5)
    assert connected_from_wtilde(arr, (2, 1), 3) == connected_len2(2, 1, 3)
    with pytest.raises(ValueError):
        connected_from_wtilde(arr, (2, 1, 1), 3)


def test_wtilde_rejects_bad_arity():
    with pytest.raises(ValueError):
        wtilde_expand(4, (1, 1, 1, 1), 3)
    with pytest.raises(ValueError):
        wtilde_series(2, (1,), 3)


def test_rho_table_build_and_lookup():
    table = RhoTable.build(3, 3, 4)
    assert table.coeff(0, 1, 1) == g(1).scale(half)
    assert table.series(2, 2).is_graded()


def test_rho_table_cache_round_trip(tmp_path):
    table = RhoTable.build(2, 2, 3)
    path = tmp_path / "rho.json"
    table.save(str(path))
    loaded = RhoTable.from_json(json.loads(path.read_text()))
    for a in range(3):
        for b in range(3):
            assert loaded.series(a, b) == table.series(a, b)


def test_rho_table_corrupt_cache_rejected(tmp_path):
    cache_dir = tmp_path / "cache"
    table = RhoTable.load_or_build(2, 2, 3, str(cache_dir))
    path = cache_dir / "rho_2_2_3.json"
    assert path.exists()
    data = json.loads(path.read_text())
    data["entries"][0][1][1] = []  # tamper with a coefficient
    path.write_text(json.dumps(data))
    with pytest.raises(ValueError, match="checksum"):
        RhoTable.from_json(json.loads(path.read_text()))
    # load_or_build falls back to recomputation and heals the file
    healed = RhoTable.load_or_build(2, 2, 3, str(cache_dir))
    assert healed.coeff(0, 1, 1) == table.coeff(0, 1, 1)
    assert RhoTable.from_json(json.loads(path.read_text())).coeff(0, 1, 1) == \
        table.coeff(0, 1, 1)


def test_rho_table_version_bump_invalidates(tmp_path):
    table = RhoTable.build(1, 1, 2)
    data = table.to_json()
    data["schema_version"] = 999
    with pytest.raises(ValueError, match="schema"):
        RhoTable.from_json(data)
