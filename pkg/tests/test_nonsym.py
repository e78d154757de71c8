"""Non-symmetric Macdonald polynomials: construction, weights, moves.

Frozen values are verified through independent routes before freezing:
the recursive construction, the direct eigen-equation re-check, and
the joint-eigenspace linear algebra oracle.
"""

from __future__ import annotations

import itertools

import pytest

from dahamac.field import Scalar
from dahamac.laurent import LaurentPoly, multidegree
from dahamac.nonsym import (
    E,
    MacdonaldRecord,
    base_weight,
    check_record,
    clear_cache,
    eigen_oracle_Y,
    eigen_oracle_theta,
    index_multidegree,
    kappa,
    knop_sahi_check,
    shift_factor,
    verify_triangular,
    weight_of,
)
from dahamac.rep import RepContext, apply_Y

C21 = RepContext(2, 1, 1)
C22 = RepContext(2, 2, 2)
C31 = RepContext(3, 1, 1)


def compositions(n, total):
    if n == 1:
        return [(total,)]
    out = []
    for e in range(total + 1):
        out.extend((e,) + rest for rest in compositions(n - 1, total - e))
    return out


# ---------------------------------------------------------------------------
# weights


def test_base_weight():
    ctx = RepContext(3, 2, 2)
    assert base_weight(ctx) == (Scalar.t(2, 2), Scalar.t(2, 1), Scalar.t(2, 0))


def test_weight_anchor_rank_three():
    ctx = RepContext(3, 3, 3)
    w = weight_of(ctx, ((0, 1, 0), (2, 0, 0), (0, 0, 1)))
    assert w == (
        Scalar.param_monomial(3, 0, {2: -2, 3: -1}),
        Scalar.param_monomial(3, 1, {1: -1}),
        Scalar.t(3, 2),
    )


def test_kappa_matches_weight_of_rank_one():
    # counting formula against the walk and closed-form routes
    for n, ctx in ((2, C21), (3, C31)):
        for total in range(4):
            for mu in compositions(n, total):
                assert kappa(ctx, mu) == weight_of(ctx, (mu,))


def test_kappa_rejects_higher_rank():
    with pytest.raises(ValueError):
        kappa(C22, (1, 0))


def test_weight_shape_guards():
    with pytest.raises(ValueError):
        weight_of(C21, ((1, 0), (0, 1)))
    with pytest.raises(ValueError):
        weight_of(C22, ((1, 0, 0), (0, 0, 1)))


# ---------------------------------------------------------------------------
# rank-one values


def test_rank_one_anchors():
    x11 = LaurentPoly.var(1, 2, 1, 1, 1)
    x12 = LaurentPoly.var(1, 2, 1, 1, 2)
    one = Scalar.one(1)
    t = Scalar.t(1)
    q = Scalar.q(1, 1)

    assert E(C21, ((0, 0),)).poly == C21.one()
    assert E(C21, ((1, 0),)).poly == x11
    assert E(C21, ((1, 1),)).poly == x11 * x12
    c = (one - t) / (one - t * q)
    assert E(C21, ((0, 1),)).poly == x12 + x11.smul(c)
    assert E(C21, ((2, 0),)).poly == x11 * x11 + (x11 * x12).smul(q * c)
    c2 = (one - t) / (one - t * q**2)
    assert E(C21, ((0, 2),)).poly == \
        x12 * x12 + x11.smul(c2) * x11 + (x11 * x12).smul((one + q) * c2)


def test_rank_one_monic_triangular_box():
    for n, ctx in ((2, C21), (3, C31)):
        for total in range(4):
            for mu in compositions(n, total):
                rec = E(ctx, (mu,))
                assert rec.poly.coeff_of((mu,)).is_one()
                assert verify_triangular(ctx, mu, ())
                assert check_record(ctx, rec)


def test_negative_entries_reduce_along_omega_rank_one():
    # rank one: adding c(1,..,1) to the index is exactly the monomial shift
    assert E(C21, ((-1, 0),)).poly == \
        E(C21, ((0, 1),)).poly.mul_monomial((-1, -1))
    rec = E(C21, ((-2, 1),))
    assert check_record(C21, rec)
    assert multidegree(rec.poly) == (-1,)


# ---------------------------------------------------------------------------
# higher rank values


def test_rank_two_smallest_case():
    # n = 1: the walk is a single cycling step on each group
    ctx = RepContext(1, 2, 2)
    rec = E(ctx, ((1,), (1,)))
    expected = LaurentPoly.monomial(2, 1, 2, ((1,), (1,)), Scalar.q(2, 2, -1))
    assert rec.poly == expected
    assert check_record(ctx, rec)


def test_four_term_value_at_mixed_index():
    # the full record at ((0,1,0),(2,1,0)), verified by the direct
    # eigen-equation and the linear-algebra oracle before freezing
    ctx = RepContext(3, 2, 2)
    one = Scalar.one(2)
    t = Scalar.t(2)
    q1 = Scalar.q(1, 2)
    q2 = Scalar.q(2, 2)
    a = (one - t) / (one - q2 * t**2)
    b = (one - t) * q2**2 * t**2 / (q2**2 * t**2 - q1)

    def mono(g1, g2, c):
        return LaurentPoly(2, 3, 2, {tuple(g1) + tuple(g2): c})

    expected = (
        mono((0, 1, 0), (2, 0, 1), t)
        + mono((0, 1, 0), (1, 1, 1), a * q2 * t**2)
        + mono((1, 0, 0), (0, 2, 1), b)
        + mono((1, 0, 0), (1, 1, 1), b * a)
    )
    rec = E(ctx, ((0, 1, 0), (2, 1, 0)))
    assert rec.poly == expected
    assert check_record(ctx, rec)
    lead = max(expected.terms)
    oracle = eigen_oracle_Y(ctx, ((0, 1, 0), (2, 1, 0)))
    assert oracle.smul(expected.terms[lead] / oracle.terms[lead]) == expected


def test_records_are_cached():
    clear_cache()
    first = E(C22, ((1, 0), (0, 1)))
    assert E(C22, ((1, 0), (0, 1))) is first


def test_index_shape_guards():
    with pytest.raises(ValueError):
        E(C22, ((1, 0),))
    with pytest.raises(ValueError):
        E(C22, ((1, 0), (1, 0, 0)))


def test_index_multidegree():
    assert index_multidegree(((1, 2), (0, 3))) == (3, 3)


# ---------------------------------------------------------------------------
# eigen oracles


def test_oracle_agrees_up_to_scale():
    for mu in [((1, 0), (0, 1)), ((0, 1), (1, 0)), ((1, 1), (1, 0))]:
        rec = E(C22, mu)
        oracle = eigen_oracle_Y(C22, mu)
        lead = max(oracle.terms)
        ratio = rec.poly.terms[lead] / oracle.terms[lead]
        assert oracle.smul(ratio) == rec.poly


def test_oracle_rejects_negative_indices():
    with pytest.raises(ValueError):
        eigen_oracle_Y(C21, ((-1, 0),))


def test_theta_oracle_exists_for_dual_weights():
    # the second commuting family has a joint eigenvector at the same
    # weight, on the same graded component
    mu = ((1, 0), (0, 1))
    f = eigen_oracle_theta(C22, weight_of(C22, mu), (1, 1))
    assert not f.is_zero()
    assert multidegree(f) == (1, 1)


def test_check_record_rejects_corrupted_records():
    rec = E(C22, ((1, 0), (0, 1)))
    wrong_poly = MacdonaldRecord(rec.index, rec.poly.mul_monomial((1, 0, 0, 0)),
                                 rec.weight)
    assert not check_record(C22, wrong_poly)
    wrong_weight = MacdonaldRecord(rec.index, rec.poly,
                                   weight_of(C22, ((0, 1), (0, 1))))
    assert not check_record(C22, wrong_weight)


# ---------------------------------------------------------------------------
# raising moves


def test_pi_move():
    assert knop_sahi_check(C21, ((1, 0),), ("pi",))
    assert knop_sahi_check(C21, ((0, 2),), ("pi",))
    assert knop_sahi_check(C22, ((1, 0), (0, 1)), ("pi",))


def test_s_move():
    assert knop_sahi_check(C21, ((1, 0),), ("s", 1, 1))
    # second component moved under an s_1-fixed first component
    assert knop_sahi_check(C22, ((1, 1), (1, 0)), ("s", 1, 2))


def test_s_move_hypothesis_violations():
    with pytest.raises(ValueError):
        # lowering instead of raising
        knop_sahi_check(C21, ((0, 1),), ("s", 1, 1))
    with pytest.raises(ValueError):
        # earlier component not s_1-fixed
        knop_sahi_check(C22, ((1, 0), (1, 0)), ("s", 1, 2))


def test_shift_move_rank_one():
    for mu in [((0, 0),), ((1, 0),), ((0, 2),)]:
        assert knop_sahi_check(C21, mu, ("shift", 1, 1))
        assert knop_sahi_check(C21, mu, ("shift", 1, -1))


def test_shift_move_rank_two_needs_other_components_constant():
    # the bare monomial identity holds exactly when every other
    # component has total degree zero; otherwise a q-monomial
    # correction (shift_factor) is required
    assert knop_sahi_check(C22, ((1, 0), (0, 0)), ("shift", 1, 1))
    assert knop_sahi_check(C22, ((0, 0), (1, 0)), ("shift", 2, 1))
    for c in (1, -1):
        assert not knop_sahi_check(C22, ((1, 0), (1, 0)), ("shift", 1, c))
        assert not knop_sahi_check(C22, ((0, 1), (2, 0)), ("shift", 2, c))


def test_shift_factor_values():
    q2inv = Scalar.q(2, 2, -1)
    assert shift_factor(C22, ((0, 0), (1, 0)), 1, 1) == q2inv
    assert shift_factor(C22, ((1, 0), (0, 0)), 2, 1) == q2inv
    assert shift_factor(C22, ((1, 0), (0, 0)), 1, 1) == Scalar.one(2)
    assert shift_factor(C21, ((2, 1),), 1, -1) == Scalar.one(1)


def test_shift_factor_inverts_with_sign():
    mu = ((1, 0), (2, 0))
    for j in (1, 2):
        assert shift_factor(C22, mu, j, 1) * shift_factor(C22, mu, j, -1) == \
            Scalar.one(2)


def test_corrected_shift_identity():
    # E at the omega-shifted index equals shift_factor times the
    # monomial multiple, for every index in a small box and both signs
    for m1 in itertools.product(range(2), repeat=2):
        for m2 in itertools.product(range(2), repeat=2):
            mu = (m1, m2)
            for j in (1, 2):
                for c in (1, -1):
                    shifted = tuple(
                        tuple(e + c for e in comp) if jj == j - 1 else comp
                        for jj, comp in enumerate(mu))
                    flat = [0] * 4
                    flat[(j - 1) * 2] = flat[(j - 1) * 2 + 1] = c
                    expected = E(C22, mu).poly.mul_monomial(tuple(flat)) \
                        .smul(shift_factor(C22, mu, j, c))
                    assert E(C22, shifted).poly == expected


# ---------------------------------------------------------------------------
# triangularity


def test_triangular_box_rank_two():
    for m1 in itertools.product(range(2), repeat=2):
        for m2 in itertools.product(range(2), repeat=2):
            assert verify_triangular(C22, m1, (m2,))


def test_triangular_rejects_negative_leading_index():
    with pytest.raises(ValueError):
        verify_triangular(C21, (-1, 0), ())


def test_direct_eigen_equations():
    mu = ((1, 0), (0, 1))
    rec = E(C22, mu)
    for i in (1, 2):
        assert apply_Y(C22, i, rec.poly) == rec.poly.smul(rec.weight[i - 1])
