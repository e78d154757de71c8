"""Higher rank non-symmetric Macdonald polynomials.

E indices are tuples of r integer vectors of length n.  The
construction recurses on the number of groups: the tail of the index is
built in the parameter-shifted context and embedded with a zero group-1
row, then a greedy affine walk raises the first component from zero,
applying the cycling move q^{mu_n} X_1 pi at pi steps and the
Hecke intertwiner T_j + (t-1)/(1 - alpha(j)/alpha(j+1)) at s_j steps,
with alpha the weight before the move.  Negative entries are removed
up front by shifting components along the all-ones vector and
remembering the monomial prefactor.

Weights are computed two independent ways (the step-by-step Psi
composition and the closed form through the gamma twist) and must
agree; the rank-1 counting formula kappa gives a third route.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import affine
from .field import Scalar
from .laurent import LaurentPoly, prepend_zero_rows, coefficient_of_group1, \
    group1_rows, multidegree
from .rep import RepContext, apply_T, apply_X, apply_pi, apply_Y, \
    apply_theta, matrix_of, component_basis
from .linalg import joint_left_kernel


@dataclass(frozen=True)
class MacdonaldRecord:
    index: tuple
    poly: LaurentPoly
    weight: tuple


def _normalize_index(mu_tuple, n):
    out = []
    for comp in mu_tuple:
        comp = tuple(int(e) for e in comp)
        if len(comp) != n:
            raise ValueError("component length mismatch")
        out.append(comp)
    return tuple(out)


# ---------------------------------------------------------------------------
# weights


def psi_step(k, ell, g, w):
    """One Psi step for parameter q_ell in a k-parameter session."""
    if g == affine.PI:
        qinv = Scalar.q(ell, k).inv()
        return (qinv * w[-1],) + tuple(w[:-1])
    j = g
    out = list(w)
    out[j - 1], out[j] = out[j], out[j - 1]
    return tuple(out)


def _psi_word(k, ell, word, w):
    for g in word:
        w = psi_step(k, ell, g, w)
    return w


def base_weight(ctx: RepContext):
    return tuple(Scalar.t(ctx.k, ctx.n - i) for i in range(1, ctx.n + 1))


def _psi_weight(ctx: RepContext, mu_tuple):
    alpha = base_weight(ctx)
    for ell in range(ctx.r, 0, -1):
        comp = mu_tuple[ell - 1]
        shifted, c = affine.omega_normalize(comp)
        alpha = _psi_word(ctx.k, ell + ctx.q_offset,
                          affine.coset_word(shifted), alpha)
        if c:
            f = Scalar.q(ell + ctx.q_offset, ctx.k, c)
            alpha = tuple(a * f for a in alpha)
    return alpha


def _closed_weight(ctx: RepContext, mu_tuple):
    gamma, sigma = affine.gamma_sigma(mu_tuple)
    out = []
    for i in range(1, ctx.n + 1):
        qexps = {}
        for ell, g in enumerate(gamma, start=1):
            if g[i - 1]:
                qexps[ell + ctx.q_offset] = -g[i - 1]
        out.append(Scalar.param_monomial(ctx.k, ctx.n - sigma[i - 1], qexps))
    return tuple(out)


def weight_of(ctx: RepContext, mu_tuple):
    """The Y-weight of E_{mu}; both computations must agree."""
    mu_tuple = _normalize_index(mu_tuple, ctx.n)
    if len(mu_tuple) != ctx.r:
        raise ValueError("index has wrong number of components")
    a = _psi_weight(ctx, mu_tuple)
    b = _closed_weight(ctx, mu_tuple)
    if any(x != y for x, y in zip(a, b)):
        raise AssertionError(
            f"weight conventions disagree at {mu_tuple}: {a} vs {b}")
    return a


def kappa(ctx: RepContext, mu):
    """Rank-1 weight by the counting formula."""
    if ctx.r != 1:
        raise ValueError("kappa is a rank-1 formula")
    n = ctx.n
    mu = tuple(int(e) for e in mu)
    out = []
    for j in range(1, n + 1):
        beta = sum(1 for kk in range(j - 1) if mu[kk] > mu[j - 1]) \
            + sum(1 for kk in range(j, n) if mu[j - 1] <= mu[kk])
        out.append(Scalar.param_monomial(
            ctx.k, beta, {1 + ctx.q_offset: -mu[j - 1]}))
    return tuple(out)


# ---------------------------------------------------------------------------
# construction


_E_CACHE = {}


def _cache_key(ctx, mu_tuple):
    return (ctx.n, ctx.r, ctx.k, ctx.q_offset, mu_tuple)


def clear_cache():
    _E_CACHE.clear()


def shift_factor(ctx: RepContext, mu_tuple, j, c) -> Scalar:
    """Scalar relating the component-j omega shift to the monomial one.

    The polynomial of the index with c*(1,...,1) added to component j
    equals shift_factor * x-underbar_j^(c omega) times the polynomial
    of mu_tuple.  The factor is a q-monomial: the affine walk behind
    the construction crosses every other row once per pi step, so the
    shift costs q_j on each earlier component's degree and q_m on each
    later component's own degree.
    """
    mu_tuple = _normalize_index(mu_tuple, ctx.n)
    if not 1 <= j <= ctx.r:
        raise ValueError("component index out of range")
    out = Scalar.one(ctx.k)
    earlier = sum(sum(comp) for comp in mu_tuple[:j - 1])
    if earlier:
        out = out * ctx.scalar_q(j, -c * earlier)
    for m in range(j + 1, ctx.r + 1):
        d = sum(mu_tuple[m - 1])
        if d:
            out = out * ctx.scalar_q(m, -c * d)
    return out


def E(ctx: RepContext, mu_tuple) -> MacdonaldRecord:
    """The non-symmetric Macdonald polynomial record for an index."""
    mu_tuple = _normalize_index(mu_tuple, ctx.n)
    if len(mu_tuple) != ctx.r:
        raise ValueError("index has wrong number of components")
    key = _cache_key(ctx, mu_tuple)
    hit = _E_CACHE.get(key)
    if hit is not None:
        return hit

    shifted = []
    prefactor = [0] * (ctx.r * ctx.n)
    trivial = True
    for jj, comp in enumerate(mu_tuple):
        s, c = affine.omega_normalize(comp)
        shifted.append(s)
        if c:
            trivial = False
            for pos in range(ctx.n):
                prefactor[jj * ctx.n + pos] = -c
    shifted = tuple(shifted)

    if not trivial:
        inner = E(ctx, shifted)
        poly = inner.poly.mul_monomial(tuple(prefactor))
        degs = [sum(comp) for comp in shifted]
        for jj in range(ctx.r):
            c = (degs[jj] - sum(mu_tuple[jj])) // ctx.n
            if c:
                base = tuple(mu_tuple[:jj + 1]) + tuple(shifted[jj + 1:])
                poly = poly.smul(shift_factor(ctx, base, jj + 1, c).inv())
                degs[jj] -= c * ctx.n
        rec = MacdonaldRecord(mu_tuple, poly, weight_of(ctx, mu_tuple))
        _E_CACHE[key] = rec
        return rec

    if ctx.r == 1:
        cur = ctx.one()
    else:
        tail = E(ctx.tail(), shifted[1:])
        cur = prepend_zero_rows(tail.poly, 1)

    nu = (0,) * ctx.n
    alpha = weight_of(ctx, (nu,) + shifted[1:])
    t = Scalar.t(ctx.k)
    one = Scalar.one(ctx.k)
    for g in affine.coset_word(shifted[0]):
        if g == affine.PI:
            factor = ctx.scalar_q(1, nu[-1]) if nu[-1] else None
            cur = apply_X(ctx, 1, apply_pi(ctx, cur))
            if factor is not None:
                cur = cur.smul(factor)
        else:
            c = (t - one) / (one - alpha[g - 1] / alpha[g])
            cur = apply_T(ctx, g, cur) + cur.smul(c)
        nu = affine.act_gen(g, nu)
        alpha = psi_step(ctx.k, 1 + ctx.q_offset, g, alpha)

    rec = MacdonaldRecord(mu_tuple, cur, alpha)
    _E_CACHE[key] = rec
    return rec


# ---------------------------------------------------------------------------
# eigen oracles


_YMAT_CACHE = {}


def _y_matrices(ctx: RepContext, d):
    key = (ctx.n, ctx.r, ctx.k, ctx.q_offset, d)
    hit = _YMAT_CACHE.get(key)
    if hit is None:
        hit = [matrix_of(ctx, lambda p, i=i: apply_Y(ctx, i, p), d)
               for i in range(1, ctx.n + 1)]
        _YMAT_CACHE[key] = hit
    return hit


def _kernel_vector_to_poly(ctx, basis, vec):
    terms = {}
    for m, c in zip(basis, vec):
        if not c.is_zero():
            terms[m] = c
    return LaurentPoly(ctx.r, ctx.n, ctx.k, terms)


def _normalize_leading(poly):
    for m in sorted(poly.terms):
        lead = poly.terms[m]
        return poly.smul(lead.inv())
    return poly


def eigen_oracle_Y(ctx: RepContext, mu_tuple) -> LaurentPoly:
    """Joint Y-eigenvector found by exact linear algebra, first
    basis-ordered coefficient normalized to 1."""
    mu_tuple = _normalize_index(mu_tuple, ctx.n)
    if any(e < 0 for comp in mu_tuple for e in comp):
        raise ValueError("oracle needs a nonnegative index")
    d = tuple(sum(comp) for comp in mu_tuple)
    alpha = weight_of(ctx, mu_tuple)
    basis = component_basis(ctx, d)
    mats = _y_matrices(ctx, d)
    kernel = joint_left_kernel(mats, list(alpha))
    if len(kernel) != 1:
        raise ArithmeticError(
            f"joint eigenspace at {mu_tuple} has dimension {len(kernel)}")
    return _normalize_leading(_kernel_vector_to_poly(ctx, basis, kernel[0]))


def eigen_oracle_theta(ctx: RepContext, target_weight, d) -> LaurentPoly:
    """Joint theta-eigenvector for a target weight on a component."""
    basis = component_basis(ctx, d)
    mats = [matrix_of(ctx, lambda p, i=i: apply_theta(ctx, i, p), d)
            for i in range(1, ctx.n + 1)]
    kernel = joint_left_kernel(mats, list(target_weight))
    if len(kernel) != 1:
        raise ArithmeticError(
            f"joint theta eigenspace has dimension {len(kernel)}")
    return _normalize_leading(_kernel_vector_to_poly(ctx, basis, kernel[0]))


# ---------------------------------------------------------------------------
# Knop-Sahi moves and triangularity


def knop_sahi_check(ctx: RepContext, mu_tuple, move) -> bool:
    """Verify one move of the raising machinery on E(mu).

    move is ("pi",), ("s", j, ell) or ("shift", j, c); the s-move
    requires s_j to fix components before ell and to raise component
    ell in the Bruhat order.
    """
    mu_tuple = _normalize_index(mu_tuple, ctx.n)
    base = E(ctx, mu_tuple)
    kind = move[0]
    if kind == "pi":
        comp = mu_tuple[0]
        target = (affine.act_gen(affine.PI, comp),) + mu_tuple[1:]
        rhs = apply_X(ctx, 1, apply_pi(ctx, base.poly))
        if comp[-1]:
            rhs = rhs.smul(ctx.scalar_q(1, comp[-1]))
        return E(ctx, target).poly == rhs
    if kind == "s":
        _, j, ell = move
        if not 1 <= ell <= ctx.r:
            raise ValueError("component index out of range")
        moved = affine.act_gen(j, mu_tuple[ell - 1])
        for i in range(ell - 1):
            if affine.act_gen(j, mu_tuple[i]) != mu_tuple[i]:
                raise ValueError("move hypothesis fails: earlier component "
                                 "not s_j-fixed")
        if not affine.bruhat_less(mu_tuple[ell - 1], moved):
            raise ValueError("move hypothesis fails: component not raised")
        target = mu_tuple[:ell - 1] + (moved,) + mu_tuple[ell:]
        alpha = weight_of(ctx, mu_tuple)
        t = Scalar.t(ctx.k)
        one = Scalar.one(ctx.k)
        c = (t - one) / (one - alpha[j - 1] / alpha[j])
        rhs = apply_T(ctx, j, base.poly) + base.poly.smul(c)
        return E(ctx, target).poly == rhs
    if kind == "shift":
        _, j, c = move
        shifted = tuple(e + c for e in mu_tuple[j - 1])
        target = mu_tuple[:j - 1] + (shifted,) + mu_tuple[j:]
        flat = [0] * (ctx.r * ctx.n)
        for pos in range(ctx.n):
            flat[(j - 1) * ctx.n + pos] = c
        return E(ctx, target).poly == base.poly.mul_monomial(tuple(flat))
    raise ValueError(f"unknown move kind {kind!r}")


def t_mu_apply(ctx: RepContext, mu, p: LaurentPoly) -> LaurentPoly:
    """The operator word carrying 0 to mu, first letter applied first."""
    for g in affine.coset_word(mu):
        if g == affine.PI:
            p = apply_pi(ctx, p)
        else:
            p = apply_T(ctx, g, p)
    return p


def verify_triangular(ctx: RepContext, mu, beta_tuple) -> bool:
    """Leading-block and lower-set shape of E_{(mu, beta)}.

    Checks that the group-1 coefficient at mu is the T_mu image of the
    embedded tail polynomial and that every other group-1 exponent lies
    strictly below mu in the Bruhat order.
    """
    mu = tuple(int(e) for e in mu)
    if any(e < 0 for e in mu):
        raise ValueError("triangularity check needs nonnegative mu")
    beta_tuple = _normalize_index(beta_tuple, ctx.n) if beta_tuple else ()
    full = E(ctx, (mu,) + beta_tuple)
    if ctx.r == 1:
        emb = ctx.one()
    else:
        tail = E(ctx.tail(), beta_tuple)
        emb = prepend_zero_rows(tail.poly, 1)
    block = t_mu_apply(ctx, mu, emb)
    zero_row = (0,) * ctx.n
    lead = coefficient_of_group1(full.poly, mu)
    expected = coefficient_of_group1(block, zero_row)
    if lead != expected:
        return False
    for row in group1_rows(full.poly):
        if row != mu and not affine.bruhat_less(row, mu):
            return False
    return True


def index_multidegree(mu_tuple):
    return tuple(sum(comp) for comp in mu_tuple)


def check_record(ctx: RepContext, rec: MacdonaldRecord) -> bool:
    """Direct Y-eigen re-verification of a record."""
    for i in range(1, ctx.n + 1):
        if apply_Y(ctx, i, rec.poly) != rec.poly.smul(rec.weight[i - 1]):
            return False
    return multidegree(rec.poly) == index_multidegree(rec.index)
