import math

import numpy as np
import pytest

from limitdisc.dimension import (
    Method,
    dim_theorem3,
    dim_theorem4,
    dim_upper_bound,
    dlog_q,
    log_q,
    make_tangent_generator,
    minimize_g,
)
from limitdisc.errors import (
    GraphNotComplete,
    HypothesisViolated,
    InputError,
    LogBaseDegenerate,
    NoInteriorMinimum,
)
from limitdisc.mobius import make_mobius
from limitdisc.tangency import GeneratorSet, build_tangency_graph
from oracles import grid_minimum

GHK_DIM = 0.4380178794867876  # log(golden ratio) / log 3


def fixed_point_set(gammas, p=1.0):
    return GeneratorSet([(f"f{i}", make_tangent_generator(g, 1.0 + 0.5 * i, p)) for i, g in enumerate(gammas)])


def run(method, F):
    return method(F, build_tangency_graph(F))


def test_log_q_and_derivative():
    lg = np.log([4.0, 0.5])
    assert log_q(0.0, lg) == pytest.approx(math.log(2))
    h = 1e-6
    for s in (0.1, 0.7, 3.0):
        fd = (log_q(s + h, lg) - log_q(s - h, lg)) / (2 * h)
        assert dlog_q(s, lg) == pytest.approx(fd, rel=1e-6)


def test_minimize_closed_form():
    s, val = minimize_g([4.0, 0.5])
    assert s == pytest.approx(1 / 3, abs=1e-12)
    assert val == pytest.approx(math.log(3) - 2 / 3 * math.log(2), abs=1e-14)


@pytest.mark.parametrize("seed", range(8))
def test_minimize_against_grid_scan(seed):
    rng = np.random.default_rng(seed)
    gammas = np.concatenate([rng.uniform(1.1, 8, rng.integers(1, 4)), rng.uniform(0.05, 0.9, rng.integers(1, 4))])
    s, val = minimize_g(gammas)
    s_grid, val_grid = grid_minimum(gammas)
    assert val <= val_grid + 1e-14
    assert val == pytest.approx(val_grid, abs=1e-12)
    if s > 0:
        assert s == pytest.approx(s_grid, abs=1e-6)


def test_minimize_clamps_at_zero():
    # g'(0) > 0: the unconstrained minimum is at negative s
    s, val = minimize_g([2.0, 0.1, 0.1])
    assert s == 0.0 and val == pytest.approx(math.log(3))


def test_minimize_rejects_one_sided():
    with pytest.raises(NoInteriorMinimum):
        minimize_g([2.0, 3.0])
    with pytest.raises(InputError):
        minimize_g([2.0, -1.0])


def test_ghk_spectral_formula(F):
    rep = run(dim_theorem3, F)
    assert rep.method is Method.THEOREM3
    assert rep.value == pytest.approx(GHK_DIM, abs=1e-12)
    assert run(dim_upper_bound, F).value == pytest.approx(GHK_DIM, abs=1e-12)


def test_acyclic_graph_gives_zero():
    F = GeneratorSet([("a", make_mobius(0, 0.5, 1, 1.5)), ("b", make_mobius(1, 0, 0, 3))])
    rep = run(dim_theorem3, F)
    assert rep.value == 0.0 and "acyclic" in rep.details


def test_make_tangent_generator():
    f = make_tangent_generator(4.0, 1.0, 1j)
    F = GeneratorSet([("f", f)])
    d = F.data[0]
    assert d.gamma == pytest.approx(4.0)
    assert abs(d.alpha - 1j) < 1e-12 and abs(d.beta - 1j) < 1e-12
    with pytest.raises(InputError):
        make_tangent_generator(2.0, -1.0, 1.0)
    with pytest.raises(InputError):
        make_tangent_generator(2.0, 1.0, 0.5)


def test_complete_graph_mixed_gammas():
    F = fixed_point_set([4.0, 0.5])
    rep = run(dim_theorem4, F)
    assert rep.method is Method.THEOREM4
    assert rep.s_star == pytest.approx(1 / 3, abs=1e-12)
    assert rep.value == pytest.approx(math.log2(3) - 2 / 3, abs=1e-12)


@pytest.mark.parametrize(
    "gammas, value",
    [([2.0, 3.0], 0.0), ([0.5, 0.25], 1.0), ([1.0, 0.5], 1.0), ([1.0, 1.0, 2.0], 0.0)],
)
def test_complete_graph_edge_cases(gammas, value):
    rep = run(dim_theorem4, fixed_point_set(gammas))
    assert rep.value == pytest.approx(value, abs=1e-12)


def test_minimisation_formula_needs_complete_graph(F):
    with pytest.raises(GraphNotComplete):
        run(dim_theorem4, F)


def test_single_generator_has_no_log_base():
    with pytest.raises(LogBaseDegenerate):
        run(dim_upper_bound, fixed_point_set([0.5]))


def test_mixed_incomplete_case_is_a_bound(F):
    H = GeneratorSet([*zip(F.names, F.maps), ("e", make_tangent_generator(4.0, 1.0, 1.0))])
    G = build_tangency_graph(H)
    with pytest.raises(HypothesisViolated) as info:
        dim_theorem3(H, G)
    assert info.value.offenders == ["e"]
    rep = dim_upper_bound(H, G)
    assert rep.method is Method.UPPER_BOUND
    # every limit-disc word over {g,h,k} is one over the bigger set
    assert GHK_DIM * math.log(3) / math.log(4) <= rep.value + 1e-12
    assert rep.value <= 1.0
