"""The rank-r polynomial representation of the double affine Hecke algebra.

Operators act on LaurentPoly values in r groups of n variables.  The
generator actions are

    T_j  =  s_j in all groups
            + (1-t) * sum over k of (s_j in groups 1..k) then (xi_j in
              group k+1),
    X_i  =  multiplication by x_{1,i},
    pi   =  cycle every group's exponent row (last entry to the front)
            and multiply the coefficient by prod_i q_{i+offset}^{-(last
            exponent of row i)},

and the derived elements

    T_j^{-1} = (T_j - (1-t)) / t,
    Y_1      = t^{n-1} pi T_{n-1}^{-1} ... T_1^{-1},
    Y_{i+1}  = t^{-1} T_i Y_i T_i,
    theta_i  = t^{i-1} T_{i-1}^{-1} ... T_1^{-1} pi T_{n-1} ... T_i,
    pitilde  = X_1 T_1^{-1} ... T_{n-1}^{-1},

with composition applying the rightmost factor first.  The symmetrizer
eps is the normalized sum of t^{-l(w)} T_w over the finite symmetric
group, and Delta_n = eps (Y_1 + ... + Y_n - [n]_t) eps.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .field import Scalar
from .laurent import LaurentPoly, swap_vars, xi


@dataclass(frozen=True)
class RepContext:
    n: int
    r: int
    k: int  # session q-parameter count
    q_offset: int = 0

    def __post_init__(self):
        if self.n < 1 or self.r < 1:
            raise ValueError("need n >= 1 and r >= 1")
        if self.q_offset < 0 or self.q_offset + self.r > self.k:
            raise ValueError("parameter window exceeds the session")

    def zero(self):
        return LaurentPoly.zero(self.r, self.n, self.k)

    def one(self):
        return LaurentPoly.one(self.r, self.n, self.k)

    def scalar_one(self):
        return Scalar.one(self.k)

    def scalar_t(self, e=1):
        return Scalar.t(self.k, e)

    def scalar_q(self, i, e=1):
        # q_i in local numbering: parameter q_{i + q_offset}
        return Scalar.q(i + self.q_offset, self.k, e)

    def tail(self):
        """Context for the recursion on groups 2..r."""
        return RepContext(self.n, self.r - 1, self.k, self.q_offset + 1)


def _check_j(ctx, j):
    if not 1 <= j <= ctx.n - 1:
        raise IndexError("Hecke generator index out of range")


def apply_T(ctx: RepContext, j: int, p: LaurentPoly) -> LaurentPoly:
    _check_j(ctx, j)
    full = p
    for i in range(1, ctx.r + 1):
        full = swap_vars(full, i, j)
    one_minus_t = Scalar.integer(1, ctx.k) - Scalar.t(ctx.k)
    acc = None
    cur = p
    for grp in range(1, ctx.r + 1):
        piece = xi(cur, grp, j)
        acc = piece if acc is None else acc + piece
        if grp < ctx.r:
            cur = swap_vars(cur, grp, j)
    return full + acc.smul(one_minus_t)


def apply_T_inv(ctx: RepContext, j: int, p: LaurentPoly) -> LaurentPoly:
    _check_j(ctx, j)
    tinv = Scalar.t(ctx.k).inv()
    shift = (Scalar.t(ctx.k) - Scalar.integer(1, ctx.k)) * tinv
    return apply_T(ctx, j, p).smul(tinv) + p.smul(shift)


def apply_X(ctx: RepContext, i: int, p: LaurentPoly) -> LaurentPoly:
    if not 1 <= i <= ctx.n:
        raise IndexError("X index out of range")
    flat = [0] * (ctx.r * ctx.n)
    flat[i - 1] = 1
    return p.mul_monomial(tuple(flat))


def apply_X_inv(ctx: RepContext, i: int, p: LaurentPoly) -> LaurentPoly:
    if not 1 <= i <= ctx.n:
        raise IndexError("X index out of range")
    flat = [0] * (ctx.r * ctx.n)
    flat[i - 1] = -1
    return p.mul_monomial(tuple(flat))


def apply_pi(ctx: RepContext, p: LaurentPoly) -> LaurentPoly:
    n, r = ctx.n, ctx.r
    out = {}
    for m, c in p.terms.items():
        qexp = {}
        rows = []
        for i in range(r):
            row = m[i * n:(i + 1) * n]
            last = row[-1]
            if last:
                qexp[i + 1 + ctx.q_offset] = -last
            rows.append((row[-1],) + row[:-1])
        if qexp:
            c = c * Scalar.param_monomial(ctx.k, 0, qexp)
        out[tuple(e for row in rows for e in row)] = c
    return LaurentPoly(r, n, ctx.k, out)


def apply_pi_tilde(ctx: RepContext, p: LaurentPoly) -> LaurentPoly:
    out = p
    for j in range(ctx.n - 1, 0, -1):
        out = apply_T_inv(ctx, j, out)
    return apply_X(ctx, 1, out)


def apply_Y(ctx: RepContext, i: int, p: LaurentPoly) -> LaurentPoly:
    if not 1 <= i <= ctx.n:
        raise IndexError("Y index out of range")
    out = p
    for j in range(i, ctx.n):
        out = apply_T_inv(ctx, j, out)
    out = apply_pi(ctx, out)
    for j in range(1, i):
        out = apply_T(ctx, j, out)
    return out.smul(Scalar.t(ctx.k, ctx.n - i))


def apply_theta(ctx: RepContext, i: int, p: LaurentPoly) -> LaurentPoly:
    if not 1 <= i <= ctx.n:
        raise IndexError("theta index out of range")
    out = p
    for j in range(i, ctx.n):
        out = apply_T(ctx, j, out)
    out = apply_pi(ctx, out)
    for j in range(1, i):
        out = apply_T_inv(ctx, j, out)
    return out.smul(Scalar.t(ctx.k, i - 1))


# ---------------------------------------------------------------------------
# symmetrizer


def _reduced_words(n):
    """Lex-smallest reduced word for every element of S_n, with length."""
    idp = tuple(range(1, n + 1))
    words = {idp: []}
    frontier = [idp]
    while frontier:
        nxt = []
        for w in frontier:
            base = words[w]
            for j in range(1, n):
                if w[j - 1] < w[j]:  # right multiplication increases length
                    u = list(w)
                    u[j - 1], u[j] = u[j], u[j - 1]
                    u = tuple(u)
                    cand = base + [j]
                    if u not in words:
                        words[u] = cand
                        nxt.append(u)
                    elif len(words[u]) == len(cand) and cand < words[u]:
                        words[u] = cand
        frontier = nxt
    return words


def symmetrize_eps(ctx: RepContext, p: LaurentPoly) -> LaurentPoly:
    words = _reduced_words(ctx.n)
    acc = ctx.zero()
    norm = Scalar.zero(ctx.k)
    for word in words.values():
        cur = p
        for j in reversed(word):
            cur = apply_T(ctx, j, cur)
        wgt = Scalar.t(ctx.k, -len(word))
        acc = acc + cur.smul(wgt)
        norm = norm + wgt
    return acc.smul(norm.inv())


def apply_Delta_n(ctx: RepContext, p: LaurentPoly) -> LaurentPoly:
    inner = symmetrize_eps(ctx, p)
    acc = ctx.zero()
    for i in range(1, ctx.n + 1):
        acc = acc + apply_Y(ctx, i, inner)
    bracket = Scalar.zero(ctx.k)
    for e in range(ctx.n):
        bracket = bracket + Scalar.t(ctx.k, e)
    acc = acc - inner.smul(bracket)
    return symmetrize_eps(ctx, acc)


# ---------------------------------------------------------------------------
# operator expressions


_GEN_TOKENS = ("Tinv", "T", "Xinv", "X")


def parse_operator_expr(text: str):
    """Parse a sum of scalar-weighted generator words.

    Grammar: terms split on '+'; each term is whitespace-separated
    tokens among t, q<i> (with optional ^<int> exponent, possibly
    negative), an optional leading integer, and the generators T<j>,
    Tinv<j>, X<i>, Xinv<i>, pi.  Generator tokens apply rightmost
    first.
    """
    terms = []
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if not chunk:
            raise ValueError("empty operator term")
        coeff_parts = []
        word = []
        for tok in chunk.split():
            if tok == "pi":
                word.append(("pi",))
                continue
            gen = next((g for g in _GEN_TOKENS if tok.startswith(g)
                        and tok[len(g):].isdigit()), None)
            if gen is not None:
                word.append((gen, int(tok[len(gen):])))
                continue
            coeff_parts.append(tok)
        terms.append((coeff_parts, word))
    return terms


def _coeff_from_parts(parts, k):
    c = Scalar.one(k)
    for tok in parts:
        if "^" in tok:
            base, _, e = tok.partition("^")
            e = int(e)
        else:
            base, e = tok, 1
        if base == "t":
            c = c * Scalar.t(k, e)
        elif base.startswith("q") and base[1:].isdigit():
            c = c * Scalar.q(int(base[1:]), k, e)
        elif base.lstrip("-").isdigit():
            c = c * Scalar.integer(int(base) ** e, k)
        else:
            raise ValueError(f"unknown token {tok!r} in operator expression")
    return c


def apply_operator_expr(ctx: RepContext, expr, p: LaurentPoly) -> LaurentPoly:
    """Apply a parsed (or textual) operator expression to p."""
    if isinstance(expr, str):
        expr = parse_operator_expr(expr)
    total = ctx.zero()
    for coeff_parts, word in expr:
        cur = p
        for tok in reversed(word):
            if tok[0] == "pi":
                cur = apply_pi(ctx, cur)
            elif tok[0] == "T":
                cur = apply_T(ctx, tok[1], cur)
            elif tok[0] == "Tinv":
                cur = apply_T_inv(ctx, tok[1], cur)
            elif tok[0] == "X":
                cur = apply_X(ctx, tok[1], cur)
            elif tok[0] == "Xinv":
                cur = apply_X_inv(ctx, tok[1], cur)
        c = _coeff_from_parts(coeff_parts, ctx.k)
        total = total + cur.smul(c)
    return total


# ---------------------------------------------------------------------------
# matrices on graded components


def component_basis(ctx: RepContext, d):
    """Positive monomials of multidegree d, ascending lex on the flat
    exponent tuple."""
    if len(d) != ctx.r:
        raise ValueError("multidegree length mismatch")

    def rows(total):
        for spots in combinations_with_replacement(range(ctx.n), total):
            row = [0] * ctx.n
            for s in spots:
                row[s] += 1
            yield tuple(row)

    flats = [()]
    for di in d:
        if di < 0:
            raise ValueError("negative multidegree has no positive component")
        flats = [f + row for f in flats for row in rows(di)]
    return sorted(flats)


def matrix_of(ctx: RepContext, op, d):
    """Matrix of op on the positive component of multidegree d.

    Row i holds the expansion of op(basis[i]) over the basis.
    """
    basis = component_basis(ctx, d)
    index = {m: c for c, m in enumerate(basis)}
    zero = Scalar.zero(ctx.k)
    mat = []
    for m in basis:
        image = op(LaurentPoly(ctx.r, ctx.n, ctx.k, {m: ctx.scalar_one()}))
        row = [zero] * len(basis)
        for mm, c in image.terms.items():
            if mm not in index:
                raise ValueError("operator escapes the graded component")
            row[index[mm]] = c
        mat.append(row)
    return mat


# ---------------------------------------------------------------------------
# relation suite


def _monomials_upto(ctx, bound):
    for d in _degrees_upto(bound):
        yield from component_basis(ctx, d)


def _degrees_upto(bound):
    if not bound:
        yield ()
        return
    for head in range(bound[0] + 1):
        for rest in _degrees_upto(bound[1:]):
            yield (head,) + rest


def verify_daha_relations(ctx: RepContext, degree_bound) -> dict:
    """Check every defining relation on all positive monomials of
    multidegree at most degree_bound (componentwise).

    Returns {"ok": bool, "checks": [{"relation": name, "ok": bool,
    "failures": [monomial texts]}...]}.
    """
    n, k = ctx.n, ctx.k
    t = Scalar.t(k)
    qell = Scalar.q(1 + ctx.q_offset, k)
    one = Scalar.one(k)

    def T(j):
        return lambda p: apply_T(ctx, j, p)

    def Tinv(j):
        return lambda p: apply_T_inv(ctx, j, p)

    def X(i):
        return lambda p: apply_X(ctx, i, p)

    def Y(i):
        return lambda p: apply_Y(ctx, i, p)

    def chain(*ops):
        def go(p):
            for op in reversed(ops):
                p = op(p)
            return p
        return go

    def scaled(c, op):
        return lambda p: op(p).smul(c)

    relations = []

    def rel(name, lhs, rhs):
        relations.append((name, lhs, rhs))

    for i in range(1, n):
        rel(f"(T{i}-1)(T{i}+t)=0",
            chain(lambda p, i=i: apply_T(ctx, i, apply_T(ctx, i, p))
                  .smul(one) + apply_T(ctx, i, p).smul(t - one)),
            scaled(t, lambda p: p))
    for i in range(1, n - 1):
        rel(f"T{i}T{i+1}T{i}=T{i+1}T{i}T{i+1}",
            chain(T(i), T(i + 1), T(i)),
            chain(T(i + 1), T(i), T(i + 1)))
    for i in range(1, n):
        for j in range(i + 2, n):
            rel(f"T{i}T{j}=T{j}T{i}", chain(T(i), T(j)), chain(T(j), T(i)))
    for i in range(1, n):
        rel(f"Tinv{i}X{i}Tinv{i}=t^-1X{i+1}",
            chain(Tinv(i), X(i), Tinv(i)),
            scaled(t.inv(), X(i + 1)))
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                rel(f"T{i}X{j}=X{j}T{i}", chain(T(i), X(j)),
                    chain(X(j), T(i)))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rel(f"X{i}X{j}=X{j}X{i}", chain(X(i), X(j)), chain(X(j), X(i)))
    for i in range(1, n):
        rel(f"T{i}Y{i}T{i}=tY{i+1}",
            chain(T(i), Y(i), T(i)), scaled(t, Y(i + 1)))
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                rel(f"T{i}Y{j}=Y{j}T{i}", chain(T(i), Y(j)),
                    chain(Y(j), T(i)))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rel(f"Y{i}Y{j}=Y{j}Y{i}", chain(Y(i), Y(j)), chain(Y(j), Y(i)))
    if n >= 2:
        rel("Y1T1X1=X2Y1T1",
            chain(Y(1), T(1), X(1)), chain(X(2), Y(1), T(1)))
    # pi substitutes q^-1 x_1, so moving Y_1 past X_1..X_n costs q^-1:
    # the product relation reads q Y1 X1..Xn = X1..Xn Y1.
    allX = chain(*[X(i) for i in range(1, n + 1)])
    rel("qY1X1..Xn=X1..XnY1",
        scaled(qell, chain(Y(1), allX)), chain(allX, Y(1)))

    mons = list(_monomials_upto(ctx, degree_bound))
    checks = []
    all_ok = True
    for name, lhs, rhs in relations:
        failures = []
        for m in mons:
            p = LaurentPoly(ctx.r, ctx.n, ctx.k, {m: one})
            if lhs(p) != rhs(p):
                failures.append(str(m))
        ok = not failures
        all_ok = all_ok and ok
        checks.append({"relation": name, "ok": ok, "failures": failures})
    return {"ok": all_ok, "checks": checks}
