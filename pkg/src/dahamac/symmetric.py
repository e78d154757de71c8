"""Hecke-invariant Macdonald polynomials of higher rank.

An orbit index is the canonical representative of a diagonal
permutation orbit on tuples of integer vectors: the columns
(nu^(1)_i, ..., nu^(r)_i) are weakly decreasing in lexicographic
order.  For each such index the symmetrizer image of the
non-symmetric polynomial is an eigenvector of the spherical operator
Delta_n with the closed-form eigenvalue below.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import affine
from .field import Scalar
from .laurent import LaurentPoly
from .rep import RepContext, apply_T, apply_Delta_n, symmetrize_eps, \
    matrix_of, component_basis
from .nonsym import E, weight_of
from .linalg import rref, joint_left_kernel, transpose, mat_vec_rows


@dataclass(frozen=True)
class SymMacdonaldRecord:
    index: tuple
    poly: LaurentPoly
    eigenvalue: Scalar


def _columns(nu_tuple):
    n = len(nu_tuple[0])
    return [tuple(comp[i] for comp in nu_tuple) for i in range(n)]


def is_orbit_index(nu_tuple) -> bool:
    """Columns weakly decreasing in lex order.

    Adjacent tie-breaking descends through all earlier levels, not
    just the previous one; with one or two levels the two readings
    coincide, and only the cumulative one indexes every orbit.
    """
    nu_tuple = tuple(tuple(comp) for comp in nu_tuple)
    cols = _columns(nu_tuple)
    return all(cols[i] >= cols[i + 1] for i in range(len(cols) - 1))


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def enumerate_orbit_indices(n, r, d):
    """All orbit indices with component degrees d, ascending."""
    if len(d) != r:
        raise ValueError("degree tuple length must equal r")
    out = []
    pools = [list(_compositions(dj, n)) for dj in d]
    for nu in product(*pools):
        if is_orbit_index(nu):
            out.append(nu)
    out.sort()
    return out


def delta_eigenvalue(ctx: RepContext, nu_tuple) -> Scalar:
    """sum_i (q_1^-gamma(1)(i) ... q_r^-gamma(r)(i) - 1) t^(n-sigma(i))."""
    nu_tuple = tuple(tuple(int(e) for e in comp) for comp in nu_tuple)
    gamma, sigma = affine.gamma_sigma(nu_tuple)
    total = Scalar.zero(ctx.k)
    for i in range(1, ctx.n + 1):
        qexps = {}
        for ell, g in enumerate(gamma, start=1):
            if g[i - 1]:
                qexps[ell + ctx.q_offset] = -g[i - 1]
        qpart = Scalar.param_monomial(ctx.k, 0, qexps)
        tpart = Scalar.t(ctx.k, ctx.n - sigma[i - 1])
        total = total + (qpart - Scalar.one(ctx.k)) * tpart
    return total


def P(ctx: RepContext, nu_tuple) -> SymMacdonaldRecord:
    """Symmetrizer image of E(nu), scaled to a deterministic form.

    The coefficient of the monomial with exponent rows nu is set to 1;
    when the symmetrized polynomial happens to have no such term the
    lexicographically greatest exponent is made monic instead.
    """
    nu_tuple = tuple(tuple(int(e) for e in comp) for comp in nu_tuple)
    if not is_orbit_index(nu_tuple):
        raise ValueError("not an orbit index")
    sym = symmetrize_eps(ctx, E(ctx, nu_tuple).poly)
    if sym.is_zero():
        raise ArithmeticError(
            f"symmetrizer kills E at {nu_tuple}")
    flat = tuple(e for comp in nu_tuple for e in comp)
    lead = sym.terms.get(flat)
    if lead is None or lead.is_zero():
        lead = sym.terms[max(sym.terms)]
    return SymMacdonaldRecord(nu_tuple, sym.smul(lead.inv()),
                              delta_eigenvalue(ctx, nu_tuple))


def verify_spectrum(ctx, n, r, d) -> dict:
    """Spectral theorem report on one graded component.

    Each enumerated index is checked for Hecke invariance and the
    exact eigen-equation; eigenvalues must be pairwise distinct and
    the number of indices must equal the rank of the symmetrizer on
    the component.
    """
    if ctx is None:
        ctx = RepContext(n=n, r=r, k=r)
    if ctx.n != n or ctx.r != r:
        raise ValueError("context does not match n, r")
    indices = enumerate_orbit_indices(n, r, d)
    rows = []
    all_ok = True
    for nu in indices:
        rec = P(ctx, nu)
        invariant = all(apply_T(ctx, j, rec.poly) == rec.poly
                        for j in range(1, n))
        eigen = apply_Delta_n(ctx, rec.poly) == rec.poly.smul(rec.eigenvalue)
        ok = invariant and eigen
        all_ok = all_ok and ok
        rows.append({"index": nu, "ok": ok, "invariant": invariant,
                     "eigen": eigen, "eigenvalue": repr(rec.eigenvalue)})
    values = [P(ctx, nu).eigenvalue for nu in indices]
    distinct = all(values[i] != values[j]
                   for i in range(len(values)) for j in range(i + 1, len(values)))
    eps_mat = matrix_of(ctx, lambda p: symmetrize_eps(ctx, p), d)
    _, pivots = rref([row[:] for row in eps_mat])
    eps_dim = len(pivots)
    count_ok = len(indices) == eps_dim
    all_ok = all_ok and distinct and count_ok
    return {"ok": all_ok, "indices": rows, "distinct": distinct,
            "count": len(indices), "eps_dim": eps_dim,
            "count_matches_dim": count_ok}


def _theta_matrices(ctx, d):
    from .rep import apply_theta
    return [matrix_of(ctx, lambda p, i=i: apply_theta(ctx, i, p), d)
            for i in range(1, ctx.n + 1)]


def paper_normalization(ctx: RepContext, nu_tuple) -> Scalar:
    """Scalar making the matching dual-weight coordinate equal to 1.

    The symmetrized polynomial is expanded against the joint
    theta-eigenvector whose weight equals the Y-weight of E(nu); that
    eigenvector is taken monic at its lexicographically greatest
    exponent.  The returned scalar s is the unique one for which
    s * eps(E(nu)) has coordinate 1 there.
    """
    nu_tuple = tuple(tuple(int(e) for e in comp) for comp in nu_tuple)
    if not is_orbit_index(nu_tuple):
        raise ValueError("not an orbit index")
    if any(e < 0 for comp in nu_tuple for e in comp):
        raise ValueError("positive indices only")
    alpha = list(weight_of(ctx, nu_tuple))
    d = tuple(sum(comp) for comp in nu_tuple)
    basis = component_basis(ctx, d)
    sym = symmetrize_eps(ctx, E(ctx, nu_tuple).poly)
    if sym.is_zero():
        raise ArithmeticError(f"symmetrizer kills E at {nu_tuple}")
    mats = _theta_matrices(ctx, d)
    kernel = joint_left_kernel(mats, alpha)
    if len(kernel) != 1:
        raise ArithmeticError(
            f"dual weight space at {nu_tuple} has dimension {len(kernel)}")
    v_f = kernel[0]
    # monic at the lex-greatest exponent present in the eigenvector
    best = None
    for m, c in zip(basis, v_f):
        if not c.is_zero() and (best is None or m > best[0]):
            best = (m, c)
    v_f = [c / best[1] for c in v_f]
    # dual pairing vector: column eigenvector for the same weight
    dual = joint_left_kernel([transpose(m) for m in mats], alpha)
    if len(dual) != 1:
        raise ArithmeticError("dual pairing vector not unique")
    u = dual[0]
    pair_f = _dot([*v_f], u, ctx.k)
    if pair_f.is_zero():
        raise ArithmeticError("degenerate dual pairing")
    v_sym = [sym.terms.get(m, Scalar.zero(ctx.k)) for m in basis]
    coord = _dot(v_sym, u, ctx.k) / pair_f
    if coord.is_zero():
        raise ArithmeticError(
            f"matching dual coordinate vanishes at {nu_tuple}")
    return coord.inv()


def _dot(a, b, k):
    total = Scalar.zero(k)
    for x, y in zip(a, b):
        total = total + x * y
    return total
