from __future__ import annotations

import pytest

from galoishull import constructions as C
from galoishull.constructions import (
    EuclideanSeed,
    Thm31Params,
    Thm32Params,
    find_euclidean_seed,
    full_field_seed,
    lift_exponent,
    mu_n_seed,
    thm31_construct,
    thm31_points,
    thm31_subspace,
    thm32_construct,
    thm41_lift,
    thm42_lift,
    trace_cosets,
)
from galoishull.errors import (
    ExtendedSeedRequiredError,
    HOverENotOddError,
    InvalidParamsError,
    SeedInvalidWitnessError,
)
from galoishull.field import field_new
from galoishull.grs import GrsCode, check_mds, delta, u_vector_codes
from galoishull.hull import hull_dim


def test_thm31_examples():
    code = thm31_construct(Thm31Params(3, 1, 2, 2, 1, 2, 1))
    assert (code.length, code.k) == (7, 2)
    assert check_mds(code).mds and check_mds(code).method == "exhaustive"
    assert hull_dim(thm31_construct(Thm31Params(3, 1, 2, 2, 1, 2, 0)), 1).hull_dim == 0
    big = thm31_construct(Thm31Params(5, 1, 2, 4, 1, 2, 1))
    assert (big.length, big.k, hull_dim(big, 1).hull_dim) == (21, 2, 1)


@pytest.mark.parametrize(
    "params,message",
    [
        (Thm31Params(3, 1, 3, 2, 1, 2, 1), "m must be even"),
        (Thm31Params(5, 1, 2, 3, 1, 2, 1), "t must divide"),
        (Thm31Params(3, 1, 2, 2, 2, 2, 1), "r must satisfy"),
        (Thm31Params(3, 1, 2, 2, 1, 3, 1), "k must satisfy"),
        (Thm31Params(3, 1, 2, 2, 1, 2, 2), "l must satisfy"),
    ],
)
def test_thm31_param_errors(params, message):
    with pytest.raises(InvalidParamsError, match=message):
        thm31_construct(params)


def test_thm31_subspace_avoids_subfield():
    F = field_new(5, 4)
    V = thm31_subspace(F, 2, 1)
    assert len(V) == 25
    assert [x for x in V if F.in_subfield(x, 2)] == [0]


def test_thm31_closed_form_u():
    F = field_new(5, 2)
    a, omega, V = thm31_points(F, 1, 4, 1)
    b = C.thm31_b(F, omega, 4, V)
    u = u_vector_codes(F, a)
    for i, ui in enumerate(u):
        j0 = i // len(V)
        assert F.inv(ui) == F.mul(F.pow(omega, -j0 * 5), b)


def test_thm32_examples():
    code = thm32_construct(Thm32Params(3, 2, 1, 2, 2, 1))
    assert (code.length, hull_dim(code, 1).hull_dim) == (7, 1)
    code = thm32_construct(Thm32Params(3, 2, 1, 3, 2, 0))
    assert (code.length, hull_dim(code, 1).hull_dim) == (10, 0)


def test_thm32_param_errors():
    with pytest.raises(InvalidParamsError, match="2e must divide h"):
        thm32_construct(Thm32Params(3, 3, 1, 2, 2, 1))
    with pytest.raises(InvalidParamsError, match="t must satisfy"):
        thm32_construct(Thm32Params(3, 2, 1, 4, 2, 1))


def test_trace_cosets_have_unit_delta():
    F = field_new(5, 2)
    for T in trace_cosets(F, 1, range(5)):
        assert len(T) == 5
        assert all(delta(F, T, x) == 1 for x in range(F.q))


@pytest.mark.parametrize("p,h,e", [(3, 2, 1), (3, 4, 2), (5, 2, 1), (3, 4, 1)])
def test_trace_preimage_linear_matches_scan(p, h, e):
    F = field_new(p, h)
    bs = F.subfield_elements(e)
    scanned = trace_cosets(F, e, bs)
    solved = trace_cosets(F, e, bs, scan_limit=0)
    assert scanned == solved


def test_thm32_u_in_subfield():
    for t in range(1, 6):
        params = Thm32Params(5, 2, 1, t, 1, 0)
        code = thm32_construct(params, verify=False)
        F = code.ctx
        assert all(F.in_subfield(u, 1) for u in code.u())


def test_lift_exponent_identity():
    for p, h, e in [(3, 3, 1), (3, 1, 1), (5, 3, 1), (3, 5, 1)]:
        F = field_new(p, h)
        mu = lift_exponent(F, e)
        assert (mu * (p**e + 1) - 2) % (F.q - 1) == 0


def test_mu13_seed_and_lift():
    F = field_new(3, 3)
    seed = mu_n_seed(F, 13)
    assert seed.lam == 1 and seed.witness_holds()
    u = u_vector_codes(F, seed.a)
    assert u == [F.div(a, F.scalar(13)) for a in seed.a]
    for k, l, want in [(3, 2, 2), (3, 3, 3), (3, 0, 0)]:
        code = thm41_lift(seed, 1, k, l)
        assert hull_dim(code, 1).hull_dim == want


def test_lifted_multiplier_identity():
    F = field_new(3, 3)
    seed = mu_n_seed(F, 13)
    v = C._lifted_multipliers(seed, 1)
    u = u_vector_codes(F, seed.a)
    assert all(F.pow(vi, 4) == F.mul(seed.lam, ui) for vi, ui in zip(v, u))


def test_full_field_seed_and_lift():
    F = field_new(3, 3)
    seed = full_field_seed(F)
    assert seed.extended and set(seed.v) == {1}
    for k, l in [(7, 3), (7, 6)]:
        code = thm42_lift(seed, 1, k, l)
        assert (code.length, hull_dim(code, 1).hull_dim) == (28, l)


def test_lift_errors():
    F = field_new(3, 3)
    seed = full_field_seed(F)
    with pytest.raises(ExtendedSeedRequiredError):
        thm42_lift(mu_n_seed(F, 13), 1, 2, 1)
    bad = EuclideanSeed(F, seed.a, (F.g,) + seed.v[1:], None, True)
    with pytest.raises(SeedInvalidWitnessError):
        thm42_lift(bad, 1, 2, 1)
    F9 = field_new(3, 2)
    with pytest.raises(HOverENotOddError):
        thm41_lift(mu_n_seed(F9, 4), 1, 1, 0)
    with pytest.raises(InvalidParamsError, match="l must satisfy"):
        thm42_lift(seed, 1, 3, 3)
    with pytest.raises(InvalidParamsError, match="k must satisfy"):
        thm41_lift(mu_n_seed(F, 13), 1, 4, 0)


def test_seed_finder_cases():
    F = field_new(3, 3)
    assert find_euclidean_seed(F, list(range(27)), extended=True).v == tuple([1] * 27)
    # 13 divides (q-1)/2, so mu_13 sits inside the squares
    zeta = F.find_element_of_order(13)
    seed = find_euclidean_seed(F, [F.pow(zeta, i) for i in range(13)], extended=False)
    assert seed is not None and seed.lam == 1
    # planted counterexample: u_i of mixed quadratic character
    a = [0, 1, 2, 3]
    chars = {F.is_square(u) for u in u_vector_codes(F, a)}
    assert chars == {True, False}
    assert find_euclidean_seed(F, a, extended=False) is None


def test_seed_from_code_round_trip():
    F = field_new(3, 3)
    seed = mu_n_seed(F, 13)
    code = GrsCode(F, seed.a, seed.v, 2)
    assert EuclideanSeed.from_code(code) == seed


def test_alpha_choice_does_not_change_hull(monkeypatch):
    F = field_new(3, 3)
    seed = mu_n_seed(F, 13)
    alphas = [x for x in range(1, F.q) if F.pow(x, 4) != 1]
    for alpha in alphas:
        monkeypatch.setattr(C, "_alpha", lambda F_, e, a=alpha: a)
        for l in range(4):
            assert hull_dim(thm41_lift(seed, 1, 3, l, verify=False), 1).hull_dim == l
    F9 = field_new(3, 2)
    for alpha in [x for x in range(1, 9) if F9.pow(x, 4) != 1]:
        monkeypatch.setattr(C, "_alpha", lambda F_, e, a=alpha: a)
        code = thm31_construct(Thm31Params(3, 1, 2, 2, 1, 2, 0), verify=False)
        assert hull_dim(code, 1).hull_dim == 0


def test_no_verify_skips_checks():
    code = thm31_construct(Thm31Params(3, 1, 2, 2, 1, 2, 1), verify=False)
    assert code.length == 7
