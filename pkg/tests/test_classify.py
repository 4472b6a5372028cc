import pytest

from limitdisc.classify import (
    AffineMap,
    Verdict,
    WordSpec,
    classify_word,
    conjugate_to_halfplane,
    gamma_series_test,
    halfplane_conjugates,
    is_limit_tangent,
    limit_disc_exact,
    q_statistic,
)
from limitdisc.dimension import make_tangent_generator
from limitdisc.errors import EmptyPrefix, InputError, MissingGamma, NotLimitDisc, NotTangentPair
from limitdisc.mobius import make_mobius
from limitdisc.tangency import GeneratorSet
from oracles import exact_orbit_discs

def word(F, prefix="", period=""):
    return WordSpec.from_names(F, list(prefix), list(period))


@pytest.fixture(scope="module")
def affine_pair():
    """gamma 4 and 1/2, both fixing 1."""
    return GeneratorSet(
        [("a", make_tangent_generator(4.0, 1.0, 1.0)), ("b", make_tangent_generator(0.5, 1.0, 1.0))]
    )


def test_wordspec_letters(F):
    w = word(F, "kk", "gh")
    assert w.letters(6) == [2, 2, 0, 1, 0, 1]
    assert w.names(F) == {"prefix": ["k", "k"], "period": ["g", "h"]}
    assert w.length() == float("inf")
    assert WordSpec((0, 1)).length() == 2
    with pytest.raises(InputError):
        WordSpec((0,), (5,)).validate(3)
    with pytest.raises(InputError):
        WordSpec((0,)).validate(3)


def test_limit_tangent(F):
    assert is_limit_tangent(F, word(F, period="gh")) == (True, 0)
    assert is_limit_tangent(F, word(F, period="hkg")) == (True, 0)
    assert is_limit_tangent(F, word(F, period="k")) == (True, 0)
    assert is_limit_tangent(F, word(F, "gg", "gh")) == (True, 2)
    assert is_limit_tangent(F, word(F, "kgg", "hg")) == (True, 2)
    assert is_limit_tangent(F, word(F, period="gg")) == (False, -1)
    assert is_limit_tangent(F, word(F, period="kh")) == (False, -1)


@pytest.mark.parametrize(
    "period, verdict",
    [
        ("gh", Verdict.LIMIT_DISC),
        ("k", Verdict.LIMIT_DISC),
        ("hkg", Verdict.LIMIT_DISC),
        ("gg", Verdict.LIMIT_POINT),
        ("hh", Verdict.LIMIT_POINT),
        ("gk", Verdict.LIMIT_POINT),
        ("kh", Verdict.LIMIT_POINT),
        ("ghk", Verdict.LIMIT_DISC),
        ("ghh", Verdict.LIMIT_POINT),
    ],
)
def test_ghk_verdicts(F, period, verdict):
    assert classify_word(F, word(F, period=period)).verdict is verdict


def test_series_test_on_affine_pair(affine_pair):
    F = affine_pair
    cases = {"a": Verdict.LIMIT_POINT, "b": Verdict.LIMIT_DISC, "abbb": Verdict.LIMIT_DISC, "ab": Verdict.LIMIT_POINT}
    for period, verdict in cases.items():
        assert classify_word(F, word(F, period=period)).verdict is verdict
    s = gamma_series_test(F, word(F, period="abb"))
    assert s.period_product == pytest.approx(1.0)
    assert s.borderline and not s.converges
    assert classify_word(F, word(F, period="abb")).borderline


def test_missing_gamma(F):
    H = GeneratorSet([*zip(F.names, F.maps), ("s", make_mobius(1, 0, 0, 3))])
    with pytest.raises(MissingGamma):
        gamma_series_test(H, word(H, period="gs"))
    # the missing gamma only matters on the period
    assert gamma_series_test(H, word(H, "s", "gh")).converges
    assert classify_word(H, word(H, period="s")).verdict is Verdict.LIMIT_POINT


def test_conjugates(F):
    for c in halfplane_conjugates(F):
        assert c.a == pytest.approx(0.5)
        assert c.b == pytest.approx(1.5)
    g = F.maps[0]
    with pytest.raises(NotTangentPair):
        conjugate_to_halfplane(g, -1, -1)
    with pytest.raises(NotTangentPair):
        conjugate_to_halfplane(g, 0.5, 1)


def test_affine_map():
    f, g = AffineMap(0.5, 1 + 1j), AffineMap(2.0, 0.5)
    assert f.then(g)(3) == pytest.approx(f(g(3)))
    with pytest.raises(ValueError):
        AffineMap(-1.0, 0j)


def test_exact_disc_period_gh(F):
    res = limit_disc_exact(F, word(F, period="gh"))
    assert res.disc.center == pytest.approx(0.75, abs=1e-15)
    assert res.disc.radius == pytest.approx(0.25, abs=1e-15)
    assert res.t_inf == pytest.approx(3.0)
    assert res.z0 == pytest.approx(1.0)
    assert res.dropped == 0


@pytest.mark.parametrize(
    "prefix, period",
    [("", "gh"), ("", "k"), ("", "hkg"), ("gg", "gh"), ("h", "k"), ("kh", "gh"), ("ggh", "kkgh")],
)
def test_exact_disc_against_rational_orbit(F, prefix, period):
    res = limit_disc_exact(F, word(F, prefix, period))
    letters = prefix + period * (80 // len(period))
    center, radius = exact_orbit_discs(letters)[-1]
    assert abs(res.full_disc.center - float(center)) < 1e-12
    assert abs(res.full_disc.radius - float(radius)) < 1e-12
    # z0 lies on the boundary of the limit disc
    assert res.full_disc.boundary_distance(res.full_z0) < 1e-12


def test_exact_disc_rejects_limit_point(F):
    with pytest.raises(NotLimitDisc):
        limit_disc_exact(F, word(F, period="gg"))


def test_q_statistic():
    assert q_statistic([0.0, -1.0, -2.0]) == pytest.approx(-1.0)
    with pytest.raises(EmptyPrefix):
        q_statistic([])
