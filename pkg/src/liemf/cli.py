"""Command-line interface.

JSON results go to stdout (keys sorted); diagnostics go to stderr.
Exit codes: 0 success, 1 usage or resource failure, 2 a comparison
command found a disagreement.

Weights are written as comma-separated halves ("2,1,0" or "3/2,1/2").
Multi-slice weights join their slices with ";": for the A family
"2,1,0;1,0" gives the two gl slices, for families with a central torus
the final ";"-part is the torus charge and may be omitted, in which
case the canonical charge is used.  Shorthand names (ex:J, sym:M,
dual-sym:M, char:K, spin, w1, w2, h) can be combined with "+", e.g.
"sym:2+h" or "spin+char:2".
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import (
    classify_range,
    cross_validate,
    mf_check,
    restricted_constituents,
    witness_multiplicity,
)
from .config import DEFAULTS, load_config
from .pairs import HermitianPair
from .weights import (
    E6_FUNDAMENTAL,
    EmbeddingError,
    NotACharacterError,
    ResourceCapError,
    RootDatum,
    ShapeError,
    parse_weight,
    weight_multiplicities,
    weight_str,
)
from .weylgroup import orbit


def parse_datum(text):
    """gl:N, so:N, spin:N, sp:N, or e6."""
    name, _, arg = str(text).strip().partition(":")
    name = name.lower()
    if name == "e6":
        if arg:
            raise ShapeError("e6 takes no parameter")
        return RootDatum.e6()
    if not arg:
        raise ShapeError("datum %r needs a size, like gl:4" % (text,))
    n = int(arg)
    if name == "gl":
        return RootDatum.gl(n)
    if name in ("so", "spin"):
        return RootDatum.so(n)
    if name == "sp":
        return RootDatum.sp(n)
    raise ShapeError("unknown datum %r" % (text,))


def _shorthand(pair, name, arg):
    datum = pair.k_datum()
    fam = pair.family
    dim = datum.dim
    if name == "h":
        vec = [0] * dim
        for _, size, off in datum.layout:
            for i in range(size):
                vec[off + i] = 1
        return tuple(vec)
    if name == "char":
        k = int(arg)
        if fam in ("C", "Cmp", "D"):
            return (2 * k,) * dim
        if fam == "A":
            return (2 * k,) * (pair.r + pair.b) + (0,) * pair.r
        return (0,) * (dim - 1) + (2 * k,)
    if name in ("ex", "sym", "dual-sym"):
        if fam not in ("C", "Cmp", "D"):
            raise ShapeError("%s applies to the gl-compact families" % name)
        n = pair.n
        k = int(arg)
        if name == "ex":
            if not 0 <= k <= n:
                raise ShapeError("ex:%d is out of range for gl(%d)" % (k, n))
            return (2,) * k + (0,) * (n - k)
        if name == "sym":
            return (2 * k,) + (0,) * (n - 1)
        return (2 * k,) * (n - 1) + (0,)
    if name == "spin":
        if fam not in ("BD", "BDspin"):
            raise ShapeError("spin applies to the BD families")
        k = pair.n // 2
        return pair.canonical_rep((1,) * k + (0,))
    if name in ("w1", "w2"):
        if fam == "E6":
            mu = (1, 1, 1, 1, 1) if name == "w1" else (1, 1, 1, 1, -1)
            return pair.canonical_rep(mu + (0,))
        if fam == "E7":
            mu = E6_FUNDAMENTAL[0] if name == "w1" else E6_FUNDAMENTAL[1]
            return pair.canonical_rep(mu + (0,))
        raise ShapeError("%s applies to the exceptional families" % name)
    raise ShapeError("unknown weight shorthand %r" % (name,))


def parse_tau(pair, text, halved=False):
    """Build a doubled K-weight from slices and shorthands."""
    datum = pair.k_datum()
    total = None
    for term in str(text).split("+"):
        term = term.strip()
        if not term:
            raise ShapeError("empty term in weight spec %r" % (text,))
        if "," in term or ";" in term or (term.lstrip("-").split("/")[0]).isdigit():
            entries = ()
            for piece in term.split(";"):
                entries += parse_weight(piece, halved=halved)
            if len(entries) == datum.dim - datum.torus and datum.torus:
                entries = pair.canonical_rep(entries + (0,) * datum.torus)
            elif len(entries) != datum.dim:
                raise ShapeError(
                    "weight %r has %d coordinates, %s needs %d"
                    % (term, len(entries), pair.tag, datum.dim))
            vec = entries
        else:
            name, _, arg = term.partition(":")
            vec = _shorthand(pair, name.strip(), arg)
        total = vec if total is None else tuple(
            a + b for a, b in zip(total, vec))
    return total


def _constituent_records(cons):
    out = []
    for (sec, w), m in sorted(cons.items()):
        out.append({"sector": list(sec), "weight": weight_str(w), "mult": m})
    return out


def _cmd_weights(args, cfg):
    datum = parse_datum(args.datum)
    lam = parse_weight(args.weight, halved=args.halved)
    mults = weight_multiplicities(datum, lam, cap=args.cap or cfg["dimension_cap"])
    rows = [{"weight": weight_str(w), "mult": m}
            for w, m in sorted(mults.items())]
    return {"datum": args.datum, "highest": weight_str(lam),
            "dim": sum(mults.values()), "weights": rows}, 0


def _cmd_dim(args, cfg):
    datum = parse_datum(args.datum)
    lam = parse_weight(args.weight, halved=args.halved)
    return {"datum": args.datum, "highest": weight_str(lam),
            "dim": datum.weyl_dim(lam)}, 0


def _cmd_branch(args, cfg):
    pair = HermitianPair.from_tag(args.pair)
    tau = parse_tau(pair, args.tau, halved=args.halved)
    cap = args.cap or cfg["dimension_cap"]
    cons, dim = restricted_constituents(pair, tau, cap=cap)
    mf = all(m == 1 for m in cons.values())
    return {"pair": pair.tag, "tau": weight_str(tau), "dim": dim,
            "multiplicity_free": mf,
            "constituents": _constituent_records(cons)}, 0


def _cmd_mf(args, cfg):
    pair = HermitianPair.from_tag(args.pair)
    tau = parse_tau(pair, args.tau, halved=args.halved)
    cap = args.cap or cfg["dimension_cap"]
    res = mf_check(pair, tau, cap=cap)
    closed = pair.closed_form_verdict(tau)
    out = {"pair": pair.tag, "tau": weight_str(tau), "dim": res.dim,
           "multiplicity_free": res.multiplicity_free,
           "closed_form": closed, "witness": None}
    if res.witness is not None:
        sec, w, mult = res.witness
        recheck = witness_multiplicity(pair, tau, sec, w, cap=cap)
        out["witness"] = {"sector": list(sec), "weight": weight_str(w),
                          "mult": mult, "recheck": recheck}
    code = 0 if res.multiplicity_free == closed else 2
    return out, code


def _cmd_classify(args, cfg):
    pair = HermitianPair.from_tag(args.pair)
    default_bound = (cfg["bound_exceptional"]
                     if pair.family in ("E6", "E7") else cfg["bound_classical"])
    bound = args.bound if args.bound is not None else default_bound
    cap = args.cap or cfg["dimension_cap"]
    report = classify_range(pair, bound, cap=cap, jobs=args.jobs)
    mf_list = [weight_str(rec["weight"])
               for rec in report.records if rec["brute"]]
    out = {"pair": pair.tag, "bound": bound, "cap": cap,
           "checked": report.checked, "agree": report.agree,
           "multiplicity_free": mf_list,
           "disagreements": [
               {"weight": weight_str(rec["weight"]), "dim": rec["dim"],
                "brute": rec["brute"], "closed": rec["closed"]}
               for rec in report.disagreements],
           "skipped": [{"weight": weight_str(rec["weight"]),
                        "dim": rec["dim"]} for rec in report.skipped]}
    return out, (0 if report.agree else 2)


def _cmd_cross_validate(args, cfg):
    pair = HermitianPair.from_tag(args.pair)
    tau = parse_tau(pair, args.tau, halved=args.halved)
    cap = args.cap or cfg["dimension_cap"]
    res = cross_validate(pair, tau, cap=cap)
    out = {"pair": pair.tag, "tau": weight_str(tau), "agree": res["agree"],
           "branch_size": sum(res["branch"].values()),
           "character_size": sum(res["character"].values())}
    return out, (0 if res["agree"] else 2)


def _cmd_weyl_orbit(args, cfg):
    entries = []
    for tok in str(args.vector).split(","):
        tok = tok.strip()
        try:
            entries.append(int(tok))
        except ValueError:
            entries.append(tok)
    pts = orbit(tuple(entries), permute_only=args.permute_only)
    return {"rank": len(entries), "size": len(pts),
            "orbit": [list(p) for p in pts]}, 0


def _cmd_rho_a(args, cfg):
    pair = HermitianPair.from_tag(args.pair)
    a, b = pair.restricted_mults()
    return {"pair": pair.tag, "rank": pair.restricted_rank(),
            "type": pair.restricted_type(),
            "mult_pair": [a, b], "mult_long": 1,
            "dim_p": pair.dim_p(),
            "rho_a": [str(x) for x in pair.rho_a()]}, 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="liemf",
        description="Exact multiplicity bookkeeping for Hermitian pairs.")
    parser.add_argument("--config", help="key=value config file")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, pairarg=True, tauarg=True):
        if pairarg:
            p.add_argument("pair", help="family tag, e.g. A:r=2,b=1 or D:4")
        if tauarg:
            p.add_argument("tau", help="weight spec or shorthand")
        p.add_argument("--halved", action="store_true",
                       help="weight entries are given in doubled units")
        p.add_argument("--cap", type=int, default=None,
                       help="dimension cap override")

    p = sub.add_parser("weights", help="full weight multiset of an irreducible")
    p.add_argument("datum", help="gl:N, so:N, spin:N, sp:N, or e6")
    p.add_argument("weight", help="highest weight, comma-separated halves")
    p.add_argument("--halved", action="store_true")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=_cmd_weights)

    p = sub.add_parser("dim", help="dimension of an irreducible")
    p.add_argument("datum")
    p.add_argument("weight")
    p.add_argument("--halved", action="store_true")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("branch", help="restrict one K-type to M")
    common(p)
    p.set_defaults(func=_cmd_branch)

    p = sub.add_parser("mf", help="multiplicity-free verdict for one K-type")
    common(p)
    p.set_defaults(func=_cmd_mf)

    p = sub.add_parser("classify", help="sweep a family and compare verdicts")
    common(p, tauarg=False)
    p.add_argument("--bound", type=int, default=None,
                   help="candidate size bound")
    p.add_argument("--jobs", type=int, default=1,
                   help="parallel worker processes")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("cross-validate",
                       help="recompute one restriction by branching rules")
    common(p)
    p.set_defaults(func=_cmd_cross_validate)

    p = sub.add_parser("weyl-orbit",
                       help="signed-permutation orbit of a vector")
    p.add_argument("vector", help="comma-separated numbers or symbols")
    p.add_argument("--permute-only", action="store_true",
                   help="ignore the sign flips")
    p.set_defaults(func=_cmd_weyl_orbit)

    p = sub.add_parser("rho-a", help="restricted root data of a family")
    p.add_argument("pair")
    p.set_defaults(func=_cmd_rho_a)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config) if args.config else dict(DEFAULTS)
        out, code = args.func(args, cfg)
    except ResourceCapError as exc:
        print("resource cap exceeded: %s" % exc, file=sys.stderr)
        return 1
    except (ShapeError, EmbeddingError, NotACharacterError, ValueError,
            OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    print(json.dumps(out, sort_keys=True, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
