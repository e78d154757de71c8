"""Sparse Laurent polynomials in r groups of n variables x_{i,j}.

Terms are stored as a dict mapping flattened exponent tuples (row-major,
length r*n, row i = variable group i) to nonzero Scalars.  The grading
is the r-vector of row sums.  Building-block operators: the exponent
swap s_j within a group and the divided-difference ksi_j, implemented
per monomial by its closed geometric sum so no rational functions in x
ever appear.
"""

from __future__ import annotations

import json

from .field import Scalar, scalar_to_json, scalar_from_json


class LaurentPoly:
    """Laurent polynomial with exact Scalar coefficients."""

    __slots__ = ("r", "n", "k", "terms")

    def __init__(self, r, n, k, terms=None):
        self.r = r
        self.n = n
        self.k = k
        self.terms = terms if terms is not None else {}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(r, n, k):
        return LaurentPoly(r, n, k)

    @staticmethod
    def monomial(r, n, k, rows, coeff=None):
        """coeff * prod x_{i,j}^{rows[i-1][j-1]}."""
        if coeff is None:
            coeff = Scalar.one(k)
        flat = tuple(e for row in rows for e in row)
        if len(flat) != r * n:
            raise ValueError("exponent matrix shape mismatch")
        if coeff.is_zero():
            return LaurentPoly(r, n, k)
        return LaurentPoly(r, n, k, {flat: coeff})

    @staticmethod
    def one(r, n, k):
        return LaurentPoly.monomial(r, n, k, [[0] * n for _ in range(r)])

    @staticmethod
    def var(r, n, k, i, j, e=1):
        """The single variable x_{i,j}^e."""
        rows = [[0] * n for _ in range(r)]
        rows[i - 1][j - 1] = e
        return LaurentPoly.monomial(r, n, k, rows)

    def row(self, flat, i):
        return flat[(i - 1) * self.n: i * self.n]

    def _check(self, other):
        if (self.r, self.n, self.k) != (other.r, other.n, other.k):
            raise ValueError("polynomial shape mismatch")

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            if m in out:
                s = out[m] + c
                if s.is_zero():
                    del out[m]
                else:
                    out[m] = s
            else:
                out[m] = c
        return LaurentPoly(self.r, self.n, self.k, out)

    def __neg__(self):
        return LaurentPoly(self.r, self.n, self.k,
                           {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.smul(other)
        self._check(other)
        out = {}
        a, b = self.terms, other.terms
        if len(b) < len(a):
            a, b = b, a
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                c = c1 * c2
                if m in out:
                    s = out[m] + c
                    if s.is_zero():
                        del out[m]
                    else:
                        out[m] = s
                elif not c.is_zero():
                    out[m] = c
        return LaurentPoly(self.r, self.n, self.k, out)

    def __rmul__(self, other):
        if isinstance(other, Scalar):
            return self.smul(other)
        return NotImplemented

    def smul(self, c: Scalar):
        if c.is_zero():
            return LaurentPoly(self.r, self.n, self.k)
        return LaurentPoly(self.r, self.n, self.k,
                           {m: cc * c for m, cc in self.terms.items()})

    def mul_monomial(self, rows_or_flat, coeff=None):
        """Multiply by a single monomial, optionally with a coefficient."""
        entries = tuple(rows_or_flat)
        if entries and isinstance(entries[0], (tuple, list)):
            flat = tuple(e for row in entries for e in row)
        else:
            flat = entries
        if len(flat) != self.r * self.n:
            raise ValueError("monomial exponent count mismatch")
        out = {}
        for m, c in self.terms.items():
            cc = c if coeff is None else c * coeff
            if not cc.is_zero():
                out[tuple(x + y for x, y in zip(m, flat))] = cc
        return LaurentPoly(self.r, self.n, self.k, out)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return ((self.r, self.n, self.k) == (other.r, other.n, other.k)
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.r, self.n, self.k,
                     frozenset((m, c) for m, c in self.terms.items())))

    def is_zero(self):
        return not self.terms

    def coeff_of(self, rows):
        flat = tuple(e for row in rows for e in row)
        return self.terms.get(flat, Scalar.zero(self.k))

    def __repr__(self):
        return f"LaurentPoly({render_poly(self)})"


# ---------------------------------------------------------------------------
# spec operations


def poly_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def poly_scalar_mul(c: Scalar, p: LaurentPoly) -> LaurentPoly:
    return p.smul(c)


def swap_vars(p: LaurentPoly, i: int, j: int) -> LaurentPoly:
    """Swap exponents j, j+1 of row i in every term."""
    if not (1 <= i <= p.r and 1 <= j <= p.n - 1):
        raise IndexError("swap_vars index out of range")
    base = (i - 1) * p.n + (j - 1)
    out = {}
    for m, c in p.terms.items():
        mm = list(m)
        mm[base], mm[base + 1] = mm[base + 1], mm[base]
        out[tuple(mm)] = c
    return LaurentPoly(p.r, p.n, p.k, out)


def xi(p: LaurentPoly, i: int, j: int) -> LaurentPoly:
    """x_{i,j}(1 - s_j)/(x_{i,j} - x_{i,j+1}) applied term by term.

    For a monomial with row-i exponents (a, b) at positions (j, j+1):
    zero when a = b, otherwise a signed geometric sum whose exponent
    pairs run from (a, b) toward (b, a), staying inside the Laurent
    ring.
    """
    if not (1 <= i <= p.r and 1 <= j <= p.n - 1):
        raise IndexError("xi index out of range")
    base = (i - 1) * p.n + (j - 1)
    acc = {}

    def put(m, c):
        if m in acc:
            s = acc[m] + c
            if s.is_zero():
                del acc[m]
            else:
                acc[m] = s
        else:
            acc[m] = c

    for m, c in p.terms.items():
        a, b = m[base], m[base + 1]
        if a == b:
            continue
        mm = list(m)
        if a > b:
            for step in range(a - b):
                mm[base], mm[base + 1] = a - step, b + step
                put(tuple(mm), c)
        else:
            nc = -c
            for step in range(b - a):
                mm[base], mm[base + 1] = b - step, a + step
                put(tuple(mm), nc)
    return LaurentPoly(p.r, p.n, p.k, acc)


def multidegree(p: LaurentPoly):
    """The common degree vector (row sums); error if not homogeneous."""
    degs = None
    for m in p.terms:
        d = tuple(sum(m[i * p.n:(i + 1) * p.n]) for i in range(p.r))
        if degs is None:
            degs = d
        elif degs != d:
            raise ValueError("polynomial is not multihomogeneous")
    return degs if degs is not None else (0,) * p.r


def is_positive(p: LaurentPoly) -> bool:
    return all(e >= 0 for m in p.terms for e in m)


def coefficient_of_group1(p: LaurentPoly, mu) -> LaurentPoly:
    """Collect terms whose group-1 row is mu and strip that row."""
    mu = tuple(mu)
    if len(mu) != p.n:
        raise ValueError("row length mismatch")
    out = {}
    for m, c in p.terms.items():
        if m[: p.n] == mu:
            out[m[p.n:]] = c
    return LaurentPoly(p.r - 1, p.n, p.k, out)


def group1_rows(p: LaurentPoly):
    """The set of group-1 exponent rows appearing in p."""
    return {m[: p.n] for m in p.terms}


def prepend_zero_rows(p: LaurentPoly, count: int) -> LaurentPoly:
    """View a poly in groups 1..r as one in groups count+1..count+r."""
    pad = (0,) * (count * p.n)
    return LaurentPoly(p.r + count, p.n, p.k,
                       {pad + m: c for m, c in p.terms.items()})


def attach_group1(mu, tail: LaurentPoly) -> LaurentPoly:
    """x_1^mu times a poly in groups 2..r, as a poly in groups 1..r."""
    mu = tuple(mu)
    return LaurentPoly(tail.r + 1, tail.n, tail.k,
                       {mu + m: c for m, c in tail.terms.items()})


# ---------------------------------------------------------------------------
# rendering and serialization


def _exp_txt(i, j, e, latex):
    if latex:
        v = f"x_{{{i},{j}}}"
        return v if e == 1 else f"{v}^{{{e}}}"
    v = f"x[{i},{j}]"
    return v if e == 1 else f"{v}^{e}"


def render_term(p, m, c, latex=False):
    from .field import render_scalar

    vs = []
    for idx, e in enumerate(m):
        if e:
            i, j = divmod(idx, p.n)
            vs.append(_exp_txt(i + 1, j + 1, e, latex))
    body = (" " if latex else "*").join(vs)
    if c.is_one() and vs:
        return body
    ctxt = render_scalar(c, latex)
    if len(c.num) > 1 or not c.den or not _scalar_is_monomial(c):
        if latex:
            # \frac bodies are unambiguous already; bare sums are not
            if not ctxt.startswith("\\frac"):
                ctxt = f"\\left({ctxt}\\right)"
        else:
            ctxt = f"({ctxt})"
    if not vs:
        return ctxt
    return f"{ctxt}{' ' if latex else '*'}{body}"


def _scalar_is_monomial(c):
    return len(c.num) == 1 and len(c.den) == 1


def render_poly(p: LaurentPoly, latex=False) -> str:
    if not p.terms:
        return "0"
    out = []
    for m in sorted(p.terms, reverse=True):
        out.append(render_term(p, m, p.terms[m], latex))
    return " + ".join(out)


def poly_to_json(p: LaurentPoly) -> dict:
    terms = []
    for m in sorted(p.terms):
        exp = [list(m[i * p.n:(i + 1) * p.n]) for i in range(p.r)]
        terms.append({"exp": exp, "coeff": scalar_to_json(p.terms[m])})
    return {"r": p.r, "n": p.n, "params": p.k, "terms": terms}


def poly_from_json(d) -> LaurentPoly:
    r, n, k = d["r"], d["n"], d["params"]
    terms = {}
    for item in d["terms"]:
        flat = tuple(e for row in item["exp"] for e in row)
        terms[flat] = scalar_from_json(item["coeff"])
    return LaurentPoly(r, n, k, terms)


def poly_dumps(p: LaurentPoly) -> str:
    return json.dumps(poly_to_json(p), sort_keys=True)
