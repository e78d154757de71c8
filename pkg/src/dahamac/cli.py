"""Command line for building and verifying the representation.

Subcommands: e (non-symmetric polynomial with its weight), p
(symmetric polynomial with its eigenvalue), verify (exhaustive
identity suites with a JSON report), stability (a truncation-stable
family with its verdicts), apply (a textual operator expression
applied to a polynomial).

Exit codes: 0 success, 1 verification failure, 2 usage or parse
error.  Output is deterministic for a fixed invocation; the optional
seed only adds randomized serialization round-trip spot-checks to
verify reports.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from itertools import product

from .field import Scalar, render_scalar, scalar_to_json
from .laurent import LaurentPoly, render_poly, poly_to_json, poly_from_json
from .rep import RepContext, verify_daha_relations, apply_operator_expr
from . import affine
from .nonsym import E, check_record, knop_sahi_check, verify_triangular
from .symmetric import P, is_orbit_index, verify_spectrum
from .stability import StableIndex, stable_family, \
    verify_quotient_relations, verify_P_stability

SUITES = ("daha-relations", "knop-sahi", "eigen", "triangular",
          "symmetric", "stability", "all")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class SessionConfig:
    n: int
    r: int
    q_count: int
    fmt: str = "text"
    max_deg: tuple = None
    seed: int = None

    def __post_init__(self):
        if self.n < 1:
            raise UsageError("need n >= 1")
        if self.r < 1 or self.q_count < self.r:
            raise UsageError("need 1 <= r <= q_count")

    def ctx(self):
        return RepContext(self.n, self.r, self.q_count)

    def bound(self):
        if self.max_deg is None:
            return (1,) * self.r
        if len(self.max_deg) != self.r or any(b < 0 for b in self.max_deg):
            raise UsageError("--max-deg needs r nonnegative entries")
        return self.max_deg


def parse_index(spec, n, r):
    """r groups of n integers: entries ',', groups '|'."""
    try:
        comps = tuple(tuple(int(e) for e in part.split(","))
                      for part in spec.split("|"))
    except ValueError:
        raise UsageError(f"cannot parse index {spec!r}")
    if len(comps) != r or any(len(c) != n for c in comps):
        raise UsageError(
            f"index {spec!r} must have {r} group(s) of {n} entries")
    return comps


def parse_ragged(spec):
    """Groups of any (possibly zero) length, for stable indices."""
    comps = []
    for part in spec.split("|"):
        part = part.strip()
        try:
            comps.append(tuple(int(e) for e in part.split(","))
                         if part else ())
        except ValueError:
            raise UsageError(f"cannot parse index {spec!r}")
    return tuple(comps)


def format_index(index):
    return "|".join(",".join(str(e) for e in comp) for comp in index)


# ---------------------------------------------------------------------------
# polynomial commands


def cmd_e(config: SessionConfig, mu_spec) -> str:
    mu = parse_index(mu_spec, config.n, config.r)
    rec = E(config.ctx(), mu)
    if config.fmt == "json":
        return json.dumps(
            {"index": [list(c) for c in mu],
             "poly": poly_to_json(rec.poly),
             "weight": [scalar_to_json(s) for s in rec.weight]},
            indent=2)
    latex = config.fmt == "latex"
    weight = ", ".join(render_scalar(s, latex=latex) for s in rec.weight)
    return render_poly(rec.poly, latex=latex) + "\nweight: (" + weight + ")"


def cmd_p(config: SessionConfig, nu_spec) -> str:
    nu = parse_index(nu_spec, config.n, config.r)
    if not is_orbit_index(nu):
        raise UsageError(f"index {nu_spec!r} is not an orbit "
                         "representative (columns must decrease)")
    rec = P(config.ctx(), nu)
    if config.fmt == "json":
        return json.dumps(
            {"index": [list(c) for c in nu],
             "poly": poly_to_json(rec.poly),
             "eigenvalue": scalar_to_json(rec.eigenvalue)},
            indent=2)
    latex = config.fmt == "latex"
    value = render_scalar(rec.eigenvalue, latex=latex)
    return render_poly(rec.poly, latex=latex) + "\neigenvalue: " + value


def cmd_apply(config: SessionConfig, expr, poly_text=None, poly_file=None,
              mu_spec=None) -> str:
    given = [x for x in (poly_text, poly_file, mu_spec) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --poly, --poly-file, --mu")
    if mu_spec is not None:
        mu = parse_index(mu_spec, config.n, config.r)
        p = LaurentPoly.monomial(config.r, config.n, config.q_count, mu)
    else:
        text = poly_text
        if poly_file is not None:
            with open(poly_file) as fh:
                text = fh.read()
        try:
            p = poly_from_json(json.loads(text))
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot parse polynomial JSON: {exc}")
        if (p.r, p.n) != (config.r, config.n) or p.k != config.q_count:
            raise UsageError("polynomial shape does not match --n/--r/"
                             "--q-count")
    try:
        image = apply_operator_expr(config.ctx(), expr, p)
    except ValueError as exc:
        raise UsageError(str(exc))
    if config.fmt == "json":
        return json.dumps({"expr": expr, "poly": poly_to_json(image)},
                          indent=2)
    return render_poly(image, latex=config.fmt == "latex")


# ---------------------------------------------------------------------------
# verification suites


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def _indices_upto(n, r, bound):
    """Index tuples with componentwise multidegree at most bound."""
    pools = []
    for b in bound:
        rows = []
        for total in range(b + 1):
            rows.extend(_compositions(total, n))
        pools.append(sorted(rows))
    return sorted(tuple(combo) for combo in product(*pools))


def _suite_daha(config):
    report = verify_daha_relations(config.ctx(), config.bound())
    rows = [{"name": row["relation"], "ok": row["ok"]}
            for row in report["checks"]]
    return report["ok"], rows


def _suite_eigen(config):
    ctx = config.ctx()
    rows, weights = [], []
    ok_all = True
    for mu in _indices_upto(config.n, config.r, config.bound()):
        rec = E(ctx, mu)
        ok = check_record(ctx, rec)
        ok_all = ok_all and ok
        weights.append(rec.weight)
        rows.append({"name": format_index(mu), "ok": ok})
    distinct = all(weights[i] != weights[j]
                   for i in range(len(weights))
                   for j in range(i + 1, len(weights)))
    rows.append({"name": "weights pairwise distinct", "ok": distinct})
    return ok_all and distinct, rows


def _admissible_moves(n, r, mu):
    moves = [("pi",)]
    for ell in range(1, r + 1):
        comp = mu[ell - 1]
        for j in range(1, n):
            if any(affine.act_gen(j, mu[i]) != mu[i]
                   for i in range(ell - 1)):
                continue
            if affine.bruhat_less(comp, affine.act_gen(j, comp)):
                moves.append(("s", j, ell))
    for j in range(1, r + 1):
        moves.append(("shift", j, 1))
        moves.append(("shift", j, -1))
    return moves


def _suite_knop_sahi(config):
    ctx = config.ctx()
    rows = []
    ok_all = True
    for mu in _indices_upto(config.n, config.r, config.bound()):
        moves = _admissible_moves(config.n, config.r, mu)
        raising = all(knop_sahi_check(ctx, mu, move) for move in moves
                      if move[0] != "shift")
        shifting = all(knop_sahi_check(ctx, mu, move) for move in moves
                       if move[0] == "shift")
        ok = raising and shifting
        ok_all = ok_all and ok
        rows.append({"name": format_index(mu), "moves": len(moves),
                     "raising_ok": raising, "shifting_ok": shifting,
                     "ok": ok})
    return ok_all, rows


def _suite_triangular(config):
    ctx = config.ctx()
    rows = []
    ok_all = True
    for mu in _indices_upto(config.n, config.r, config.bound()):
        ok = verify_triangular(ctx, mu[0], mu[1:])
        ok_all = ok_all and ok
        rows.append({"name": format_index(mu), "ok": ok})
    return ok_all, rows


def _degrees_upto(bound):
    return sorted(product(*[range(b + 1) for b in bound]))


def _suite_symmetric(config):
    ctx = config.ctx()
    rows = []
    ok_all = True
    for d in _degrees_upto(config.bound()):
        report = verify_spectrum(ctx, config.n, config.r, d)
        ok_all = ok_all and report["ok"]
        bad = [format_index(row["index"]) for row in report["indices"]
               if not row["ok"]]
        rows.append({"name": f"component {','.join(map(str, d))}",
                     "ok": report["ok"],
                     "distinct": report["distinct"],
                     "count_matches_dim": report["count_matches_dim"],
                     "failing_indices": bad})
    return ok_all, rows


def _stable_indices(r, max_len, max_entry):
    pool = [()]
    for length in range(1, max_len + 1):
        for comp in product(range(max_entry + 1), repeat=length):
            if comp[-1]:
                pool.append(comp)
    out = []
    for combo in sorted(product(sorted(pool), repeat=r)):
        try:
            out.append(StableIndex(combo))
        except ValueError:
            continue  # padding does not reach an orbit representative
    return out


def _suite_stability(config):
    rows = []
    report = verify_quotient_relations(config.n, config.r, config.bound(),
                                       k=config.q_count)
    ok_all = report["ok"]
    for name, row in report["identities"].items():
        rows.append({"name": name, "ok": not row["failures"]})
    for nu in _stable_indices(config.r, max_len=2, max_entry=2):
        if max(nu.ell, 1) > config.n:
            continue
        ok = verify_P_stability(nu, config.n, k=config.q_count)
        ok_all = ok_all and ok
        rows.append({"name": "family " + format_index(nu.components),
                     "ok": ok})
    return ok_all, rows


_SUITE_RUNNERS = (
    ("daha-relations", _suite_daha),
    ("eigen", _suite_eigen),
    ("knop-sahi", _suite_knop_sahi),
    ("triangular", _suite_triangular),
    ("symmetric", _suite_symmetric),
    ("stability", _suite_stability),
)


def _roundtrip_spotcheck(config):
    rng = random.Random(config.seed)
    size = config.r * config.n
    ok = True
    for _ in range(20):
        terms = {}
        for _ in range(rng.randrange(1, 4)):
            flat = tuple(rng.randrange(-2, 4) for _ in range(size))
            coeff = Scalar.param_monomial(
                config.q_count, rng.randrange(-2, 3),
                {rng.randrange(1, config.q_count + 1): rng.randrange(-2, 3)},
                rng.choice((1, 2, -3)))
            terms[flat] = coeff
        p = LaurentPoly(config.r, config.n, config.q_count, terms)
        ok = ok and poly_from_json(json.loads(json.dumps(
            poly_to_json(p)))) == p
    return {"name": f"json round-trip spot-check (seed={config.seed})",
            "ok": ok}


def cmd_verify(config: SessionConfig, suite):
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from "
                         + ", ".join(SUITES))
    selected = [(name, fn) for name, fn in _SUITE_RUNNERS
                if suite in ("all", name)]
    checks = []
    ok_all = True
    for name, fn in selected:
        ok, rows = fn(config)
        ok_all = ok_all and ok
        for row in rows:
            checks.append({**row, "name": f"{name}: {row['name']}"})
    if config.seed is not None:
        row = _roundtrip_spotcheck(config)
        ok_all = ok_all and row["ok"]
        checks.append(row)
    report = {"suite": suite, "n": config.n, "r": config.r,
              "q_count": config.q_count, "max_deg": list(config.bound()),
              "ok": ok_all, "checks": checks}
    return (0 if ok_all else 1), json.dumps(report, indent=2)


def cmd_stability(nu_spec, n_max, q_count=None):
    try:
        nu = StableIndex(parse_ragged(nu_spec))
    except ValueError as exc:
        raise UsageError(str(exc))
    if n_max < max(nu.ell, 1):
        raise UsageError("--n-max must be at least the longest component")
    fam = stable_family(nu, n_max, k=q_count)
    members = {}
    for n in sorted(fam.members):
        rec = fam.members[n]
        members[str(n)] = {"poly": poly_to_json(rec.poly),
                           "eigenvalue": render_scalar(rec.eigenvalue)}
    report = {
        "index": [list(c) for c in nu.components],
        "members": members,
        "projections": {str(n): ok
                        for n, ok in sorted(fam.projections.items())},
        "eigenvalue_constant": fam.eigenvalue_constant,
        "stable_value": render_scalar(fam.stable_value),
        "matches_stable_formula": fam.matches_stable_formula,
        "remark_value": None if fam.remark_value is None
        else render_scalar(fam.remark_value),
        "matches_remark": fam.matches_remark,
        "errors": list(fam.errors),
        "ok": fam.ok,
    }
    return (0 if fam.ok else 1), json.dumps(report, indent=2)


# ---------------------------------------------------------------------------
# argument plumbing


def _add_common(sub, with_bound=False):
    sub.add_argument("--n", type=int, required=True,
                     help="number of variables per group")
    sub.add_argument("--r", type=int, default=1,
                     help="number of variable groups (default 1)")
    sub.add_argument("--q-count", type=int, default=None,
                     help="session parameter count (default r)")
    sub.add_argument("--format", choices=("text", "latex", "json"),
                     default="text")
    sub.add_argument("--seed", type=int, default=None,
                     help="seed for randomized round-trip spot-checks")
    sub.add_argument("--out", default=None, help="write output to a file")
    if with_bound:
        sub.add_argument("--max-deg", default=None,
                         help="componentwise degree bound, e.g. \"2,1\"")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="dahamac",
        description="higher rank Macdonald polynomials, exactly")
    cmds = ap.add_subparsers(dest="command", required=True)

    e = cmds.add_parser("e", help="non-symmetric polynomial and weight")
    _add_common(e)
    e.add_argument("--mu", required=True,
                   help="index, entries ',' and groups '|': \"0,1,0|2,1,0\"")

    p = cmds.add_parser("p", help="symmetric polynomial and eigenvalue")
    _add_common(p)
    p.add_argument("--nu", required=True,
                   help="orbit index in the same grammar as --mu")

    v = cmds.add_parser("verify", help="run an identity suite")
    _add_common(v, with_bound=True)
    v.add_argument("--suite", required=True,
                   help="one of " + ", ".join(SUITES))

    s = cmds.add_parser("stability", help="truncation-stable family")
    s.add_argument("--nu", required=True,
                   help="ragged stable index, e.g. \"1,1|2\"")
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--q-count", type=int, default=None)
    s.add_argument("--out", default=None)

    a = cmds.add_parser("apply", help="apply an operator expression")
    _add_common(a)
    a.add_argument("--expr", required=True,
                   help="e.g. \"t^2 pi Tinv2 Tinv1\" (rightmost first)")
    a.add_argument("--poly", default=None, help="polynomial as JSON text")
    a.add_argument("--poly-file", default=None,
                   help="file holding polynomial JSON")
    a.add_argument("--mu", default=None,
                   help="monomial exponent rows in index grammar")
    return ap


def _parse_bound(text):
    if text is None:
        return None
    try:
        return tuple(int(e) for e in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse degree bound {text!r}")


def _dispatch(args):
    if args.command == "stability":
        return cmd_stability(args.nu, args.n_max, q_count=args.q_count)
    config = SessionConfig(
        n=args.n, r=args.r,
        q_count=args.q_count if args.q_count is not None else args.r,
        fmt=args.format, max_deg=_parse_bound(getattr(args, "max_deg", None)),
        seed=args.seed)
    if args.command == "e":
        return 0, cmd_e(config, args.mu)
    if args.command == "p":
        return 0, cmd_p(config, args.nu)
    if args.command == "verify":
        return cmd_verify(config, args.suite)
    if args.command == "apply":
        return 0, cmd_apply(config, args.expr, poly_text=args.poly,
                            poly_file=args.poly_file, mu_spec=args.mu)
    raise UsageError(f"unknown command {args.command!r}")


_VALUE_FLAGS = ("--mu", "--nu", "--max-deg", "--expr", "--poly")


def _merge_negative_values(argv):
    """Join "--mu -1,0" into "--mu=-1,0" so argparse keeps the value."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) \
                and argv[i + 1].startswith("-") \
                and any(ch.isdigit() for ch in argv[i + 1]):
            out.append(tok + "=" + argv[i + 1])
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_merge_negative_values(list(argv)))
    try:
        code, text = _dispatch(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = getattr(args, "out", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
