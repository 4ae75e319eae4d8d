from __future__ import annotations

import random

import pytest

from galoishull import poly
from galoishull.constructions import (
    Thm31Params,
    mu_n_seed,
    thm31_b,
    thm31_construct,
    thm31_points,
    thm41_lift,
)
from galoishull.errors import LengthMismatchError, RankDeficientError
from galoishull.field import field_new
from galoishull.grs import GrsCode
from galoishull.hull import (
    HullReport,
    euclidean_hull_dim,
    galois_dual_basis,
    galois_inner,
    hermitian_hull_dim,
    hull_basis,
    hull_dim,
    in_hull,
    lemma1_membership,
)
from galoishull.linalg import Matrix

from conftest import random_full_rank, random_multipliers, random_points


def test_galois_inner_examples(gf9, rng):
    x = gf9.from_coeffs([0, 1])
    assert galois_inner(gf9, [x], [x], 1) == 1
    for _ in range(20):
        a = [rng.randrange(9) for _ in range(4)]
        b = [rng.randrange(9) for _ in range(4)]
        assert galois_inner(gf9, a, b, 0) == gf9.sum(gf9.mul(s, t) for s, t in zip(a, b))
        assert galois_inner(gf9, a, [0] * 4, 1) == 0
    with pytest.raises(LengthMismatchError):
        galois_inner(gf9, [1], [1, 1], 0)


def test_dual_basis_examples(gf9, rng):
    assert galois_dual_basis(Matrix.identity(gf9, 3), 1).nrows == 0
    F3 = field_new(3, 1)
    D = galois_dual_basis(Matrix(F3, [[1, 1, 1]]), 0)
    assert D.nrows == 2 and all(sum(r) % 3 == 0 for r in D.rows)
    for _ in range(10):
        G = random_full_rank(gf9, 3, 6, rng)
        D = galois_dual_basis(G, 1)
        assert D.nrows == 3
        assert all(galois_inner(gf9, d, g, 1) == 0 for d in D.rows for g in G.rows)
    with pytest.raises(RankDeficientError):
        galois_dual_basis(Matrix(gf9, [[1, 1], [2, 2]]), 0)


def test_report_json():
    r = HullReport(1, 2, 5, True)
    assert r.to_json() == {"e": 1, "hull_dim": 2, "dual_dim": 5, "agreement": True}
    assert HullReport.from_json(r.to_json()) == r


def test_self_orthogonal_planted(gf27):
    seed = mu_n_seed(gf27, 13)
    code = thm41_lift(seed, 1, 3, 3)
    rep = hull_dim(code, 1)
    assert rep.hull_dim == 3 and rep.method_agreement and rep.dual_dim == 10


def test_random_multipliers_regression(gf27):
    # fixed fixture: generic multipliers give a trivial hull
    code = GrsCode(gf27, list(range(1, 9)), [5, 11, 2, 19, 7, 23, 3, 14], 3)
    assert hull_dim(code, 1).hull_dim == 0


def test_thm31_code_has_requested_hull():
    code = thm31_construct(Thm31Params(3, 1, 2, 2, 1, 2, 1))
    assert hull_dim(code, 1).hull_dim == 1


def test_dimension_sum(gf25, rng):
    for _ in range(50):
        k, n = rng.randrange(1, 6), 6
        G = random_full_rank(gf25, k, n, rng)
        for e in range(2):
            assert G.nrows + galois_dual_basis(G, e).nrows == n


@pytest.mark.parametrize("pq", [(3, 2), (5, 2), (3, 3)])
def test_two_hull_methods_agree(pq):
    F = field_new(*pq)
    rng = random.Random(pq[0] * pq[1])
    for _ in range(150):
        n = rng.randrange(2, 8)
        G = random_full_rank(F, rng.randrange(1, n + 1), n, rng)
        for e in range(F.h):
            rep = hull_dim(G, e)
            assert rep.method_agreement
            assert 0 <= rep.hull_dim <= min(G.nrows, n - G.nrows)
            assert hull_basis(G, e).nrows == rep.hull_dim


def test_euclidean_and_hermitian_aliases(gf9, rng):
    for _ in range(50):
        G = random_full_rank(gf9, 3, 6, rng)
        assert euclidean_hull_dim(G) == hull_dim(G, 0).hull_dim
        assert hermitian_hull_dim(G) == hull_dim(G, 1)


def test_hull_e_and_h_minus_e_have_equal_dimension(gf27, rng):
    # Frobenius maps G^(p^(h-e)) G^T to the transpose of G^(p^e) G^T
    for _ in range(100):
        G = random_full_rank(gf27, rng.randrange(1, 6), 6, rng)
        assert hull_dim(G, 1).hull_dim == hull_dim(G, 2).hull_dim


def test_membership_zero_polynomial(gf9):
    code = GrsCode(gf9, [0, 1, 2, 3], [1, 1, 1, 1], 2)
    assert lemma1_membership(code, [0], 1) == []


def test_membership_recovers_scaled_power():
    for params in (Thm31Params(5, 1, 2, 4, 1, 3, 1), Thm31Params(5, 1, 2, 4, 1, 4, 2)):
        code = thm31_construct(params)
        F = code.ctx
        _, omega, V = thm31_points(F, params.e, params.t, params.r)
        lam = thm31_b(F, omega, params.t, V)
        f = poly.scale(F, 2, poly.from_roots(F, code.a[: params.s]))
        power = [1]
        for _ in range(F.p**params.e):
            power = poly.mul(F, power, f)
        assert lemma1_membership(code, f, params.e) == poly.scale(F, lam, power)


def _fixture_codes():
    F = field_new(3, 2)
    rng = random.Random(77)
    codes = []
    for n in range(2, 9):
        for extended in (False, True):
            for _ in range(2):
                a, v = random_points(F, n, rng), random_multipliers(F, n, rng)
                codes.append(GrsCode(F, a, v, rng.randrange(1, n + 1), extended))
    # planted hulls so the positive branch is exercised
    a = list(range(9))
    for k in range(1, 5):
        codes.append(GrsCode(F, a[:8], [1] * 8, k, False))
        codes.append(GrsCode(F, a, [1] * 9, k, True))
    return [c for c in codes if c.length <= 9]


def test_membership_matches_brute_force_monomials():
    for code in _fixture_codes():
        F = code.ctx
        for e in range(F.h):
            for j in range(code.k):
                f = [0] * j + [1]
                g = lemma1_membership(code, f, e)
                assert (g is not None) == in_hull(code, code.encode(f), e)


def test_membership_certificate_identity():
    for code in _fixture_codes()[:10]:
        F = code.ctx
        u = code.u()
        f = [1] * code.k
        for e in range(F.h):
            g = lemma1_membership(code, f, e)
            if g is None:
                continue
            for ai, vi, ui in zip(code.a, code.v, u):
                lhs = F.mul(F.pow(vi, F.p**e + 1), F.frobenius(poly.evaluate(F, f, ai), e))
                assert lhs == F.mul(ui, poly.evaluate(F, g, ai))
