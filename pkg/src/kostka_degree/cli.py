"""Command-line interface: ``kostka-degree <subcommand> [options]``.

Exit codes: 0 success, 1 mismatch (verification or cross-check), 2 usage
error, 3 empty polytope.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from .rootsys import NotDominating, UnsupportedRootSystem, build_root_system, weyl_group_order

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_INFEASIBLE = 0, 1, 2, 3


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    type_label: str
    rank: int
    lam: tuple
    mu: tuple
    basis: str  # "fw" or "eps"
    method: str = "auto"
    n_max: int = None
    fmt: str = "json"
    periods: tuple = (1, 2, 3, 4, 6)
    threads: int = 1


def _parse_list(text, kind):
    try:
        items = [s.strip() for s in text.split(",") if s.strip()]
        if kind == "fw":
            vals = tuple(int(s) for s in items)
            if any(v < 0 for v in vals):
                raise UsageError("fundamental-weight coefficients must be nonnegative integers")
            return vals
        return tuple(Fraction(s) for s in items)
    except ValueError as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(f"cannot parse {text!r}: {exc}") from None


def _weight(rs, text, kind):
    vals = _parse_list(text, kind)
    if kind == "fw":
        if len(vals) != rs.rank:
            raise UsageError(f"expected {rs.rank} fundamental-weight coefficients")
        return rs.from_dynkin(vals)
    if len(vals) != rs.ambient_dim:
        raise UsageError(f"expected {rs.ambient_dim} epsilon coordinates")
    return rs.weight(vals) if rs.type_label == "A" else vals


def make_config(args):
    rs = _root_system(args)
    lam_fw, lam_eps = getattr(args, "lambda_fw", None), getattr(args, "lambda_eps", None)
    mu_fw, mu_eps = getattr(args, "mu_fw", None), getattr(args, "mu_eps", None)
    if (lam_fw is None) == (lam_eps is None):
        raise UsageError("give exactly one of --lambda-fw / --lambda-eps")
    basis = "fw" if lam_fw is not None else "eps"
    if (basis == "fw" and mu_eps is not None) or (basis == "eps" and mu_fw is not None):
        raise UsageError("lambda and mu must use the same basis")
    lam = _weight(rs, lam_fw if basis == "fw" else lam_eps, basis)
    mu_text = mu_fw if basis == "fw" else mu_eps
    mu = _weight(rs, mu_text, basis) if mu_text is not None else tuple(Fraction(0) for _ in lam)
    if not rs.is_dominant(lam) or not rs.is_integral(lam):
        raise UsageError("lambda must be a dominant integral weight")
    if not rs.is_integral(mu):
        raise UsageError("mu must be an integral weight")
    periods = tuple(int(p) for p in args.periods.split(",")) if getattr(args, "periods", None) else (1, 2, 3, 4, 6)
    threads = args.threads if getattr(args, "threads", None) else int(os.environ.get("THREADS", "1") or 1)
    return rs, RunConfig(
        rs.type_label, rs.rank, lam, mu, basis,
        method=getattr(args, "method", "auto"),
        n_max=getattr(args, "nmax", None),
        fmt=getattr(args, "format", "json"),
        periods=periods,
        threads=threads,
    )


def _root_system(args):
    try:
        return build_root_system(args.type, args.rank)
    except UnsupportedRootSystem as exc:
        raise UsageError(str(exc)) from None


def _q(x):
    return str(Fraction(x))


def _qv(v):
    return [_q(x) for x in v]


def _emit(payload, fmt="json", out=None):
    out = out or sys.stdout
    if fmt == "text":
        for k in sorted(payload):
            out.write(f"{k}: {json.dumps(payload[k], sort_keys=True)}\n")
    else:
        out.write(json.dumps(payload, sort_keys=True) + "\n")


# -- subcommands -------------------------------------------------------------------------


def cmd_roots(args):
    rs = _root_system(args)
    try:
        order = weyl_group_order(rs.type_label, rs.rank)
    except Exception:
        order = None
    payload = {
        "type": rs.type_label,
        "rank": rs.rank,
        "simple_roots": [_qv(a) for a in rs.simple_roots],
        "positive_roots": [_qv(a) for a in rs.positive_roots],
        "positive_root_coords": [list(x) for x in rs.positive_coords],
        "num_positive_roots": len(rs.positive_roots),
        "cartan_matrix": [[int(x) for x in row] for row in rs.cartan_matrix],
        "weyl_group_order": order,
    }
    _emit(payload, args.format)
    return EXIT_OK


def _methods_for(rs):
    if rs.type_label in ("B", "C", "D"):
        return ("kostant", "bz")
    if rs.type_label == "A":
        return ("kostant", "ssyt")
    return ("kostant",)


def _kostka(rs, lam, mu, method):
    from .bzgeom import count_integral_patterns
    from .multiplicity import default_method, kostka_kostant, kostka_ssyt

    if method == "auto":
        method = default_method(rs)
    if method == "kostant":
        return kostka_kostant(rs, lam, mu)
    if method == "bz":
        return count_integral_patterns(rs, lam, mu)
    if method == "ssyt":
        return kostka_ssyt(rs, lam, mu)
    raise UsageError(f"unknown method {method!r}")


def cmd_kostka(args):
    from .rootsys import dominant_representative, simple_root_coefficients

    rs, cfg = make_config(args)
    payload = {"type": cfg.type_label, "rank": cfg.rank, "lambda": _qv(cfg.lam), "mu": _qv(cfg.mu)}
    c = simple_root_coefficients(rs, cfg.lam, dominant_representative(rs, cfg.mu))
    if isinstance(c, NotDominating):
        payload["note"] = "not dominated"
    if args.cross_check:
        vals = {m: _kostka(rs, cfg.lam, cfg.mu, m) for m in _methods_for(rs)}
        agree = len(set(vals.values())) == 1
        payload.update({"kostka": vals["kostant"], "methods": vals, "agree": agree})
        _emit(payload, cfg.fmt)
        return EXIT_OK if agree else EXIT_MISMATCH
    payload.update({"kostka": _kostka(rs, cfg.lam, cfg.mu, cfg.method), "method": cfg.method})
    _emit(payload, cfg.fmt)
    return EXIT_OK


def cmd_stretch(args):
    from .multiplicity import stretched_samples
    from .stretch import predicted_degree, default_nmax

    rs, cfg = make_config(args)
    n = cfg.n_max or default_nmax(predicted_degree(rs, cfg.lam, cfg.mu))
    samples = stretched_samples(rs, cfg.lam, cfg.mu, n, method=cfg.method, threads=cfg.threads)
    if cfg.fmt == "csv":
        sys.stdout.write("N,K\n")
        for i, k in enumerate(samples, start=1):
            sys.stdout.write(f"{i},{k}\n")
        return EXIT_OK
    _emit({"type": cfg.type_label, "rank": cfg.rank, "lambda": _qv(cfg.lam), "mu": _qv(cfg.mu),
           "method": cfg.method, "n_max": n, "samples": samples}, cfg.fmt)
    return EXIT_OK


def cmd_degree(args):
    from .stretch import degree_data

    rs, cfg = make_config(args)
    data = degree_data(rs, cfg.lam, cfg.mu)
    payload = {"type": cfg.type_label, "rank": cfg.rank, "lambda": _qv(cfg.lam), "mu": _qv(cfg.mu)}
    if isinstance(data, NotDominating):
        payload.update({"predicted_degree": "NOT_DOMINATING", "reason": data.reason,
                        "c": _qv(data.coefficients)})
    else:
        payload.update({
            "predicted_degree": data.degree,
            "c": _qv(data.c),
            "d": _qv(data.d),
            "phi1": {"simple": list(data.phi1), "positive_roots": data.phi1_positive, "rank": data.phi1_rank},
            "phi2": {"simple": list(data.phi2), "positive_roots": data.phi2_positive, "rank": data.phi2_rank},
        })
    _emit(payload, cfg.fmt)
    return EXIT_OK


def cmd_verify(args):
    from .stretch import verify_pair

    rs, cfg = make_config(args)
    methods = _methods_for(rs) if args.cross_check else (cfg.method,)
    rep = verify_pair(rs, cfg.lam, cfg.mu, n_max=cfg.n_max, methods=methods, trial_periods=cfg.periods,
                      expect=args.expect, threads=cfg.threads)
    _emit(rep.to_json(), cfg.fmt)
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def cmd_dim(args):
    from .bzgeom import affine_hull, constraint_system_bz, dim_bz_lambda
    from .stretch import predicted_degree

    rs, cfg = make_config(args)
    section = args.mu_fw is not None or args.mu_eps is not None
    if section:
        formula = predicted_degree(rs, cfg.lam, cfg.mu)
        if isinstance(formula, NotDominating):
            formula = "NOT_DOMINATING"
        h = affine_hull(constraint_system_bz(rs, cfg.lam, cfg.mu))
    else:
        formula = dim_bz_lambda(rs, cfg.lam)
        h = affine_hull(constraint_system_bz(rs, cfg.lam))
    match = formula == h.dimension
    payload = {"formula": formula, "oracle": h.dimension, "match": match}
    if args.point:
        payload["point"] = _qv(h.point)
    _emit(payload, cfg.fmt)
    return EXIT_OK if match else EXIT_MISMATCH


def cmd_interior(args):
    from .bzgeom import default_delta, interior_point_bz

    rs, cfg = make_config(args)
    delta = Fraction(args.delta) if args.delta is not None else None
    p = interior_point_bz(rs, cfg.lam, delta, symbolic=args.symbolic)
    payload = p.to_json()
    if args.symbolic:
        payload["delta"] = "symbolic"
    else:
        dl = delta if delta is not None else default_delta(rs, cfg.lam)
        payload["delta"] = None if dl is None else _q(dl)
    _emit(payload, cfg.fmt)
    return EXIT_OK


def cmd_bz_count(args):
    from .bzgeom import count_integral_patterns, enumerate_integral_patterns

    rs, cfg = make_config(args)
    payload = {"type": cfg.type_label, "rank": cfg.rank, "lambda": _qv(cfg.lam), "mu": _qv(cfg.mu),
               "count": count_integral_patterns(rs, cfg.lam, cfg.mu)}
    if args.list:
        pats = []
        for k, p in enumerate(enumerate_integral_patterns(rs, cfg.lam, cfg.mu)):
            if k >= args.list:
                break
            pats.append(p.to_json())
        payload["patterns"] = pats
    _emit(payload, cfg.fmt)
    return EXIT_OK


# -- parser -------------------------------------------------------------------------------


def _add_common(p, weights=True, formats=("json", "text")):
    p.add_argument("--type", required=True, help="A, B, C, D or G2")
    p.add_argument("--rank", type=int, default=None)
    p.add_argument("--format", choices=formats, default="json")
    if weights:
        p.add_argument("--lambda-fw", help="comma-separated fundamental-weight coefficients")
        p.add_argument("--lambda-eps", help="comma-separated epsilon coordinates (p/q allowed)")
        p.add_argument("--mu-fw")
        p.add_argument("--mu-eps")


def build_parser():
    parser = argparse.ArgumentParser(prog="kostka-degree", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="print a root system")
    _add_common(p, weights=False)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("kostka", help="weight multiplicity K_{lambda,mu}")
    _add_common(p)
    p.add_argument("--method", choices=("auto", "kostant", "bz", "ssyt"), default="auto")
    p.add_argument("--cross-check", action="store_true")
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser("stretch", help="samples K_{N lambda, N mu} for N = 1..nmax")
    _add_common(p, formats=("json", "csv", "text"))
    p.add_argument("--method", choices=("auto", "kostant", "bz", "ssyt"), default="auto")
    p.add_argument("--nmax", type=int)
    p.add_argument("--threads", type=int)
    p.set_defaults(func=cmd_stretch)

    p = sub.add_parser("degree", help="predicted degree of the stretched quasi-polynomial")
    _add_common(p)
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("verify", help="predicted vs fitted vs geometric degree")
    _add_common(p)
    p.add_argument("--method", choices=("auto", "kostant", "bz", "ssyt"), default="auto")
    p.add_argument("--nmax", type=int)
    p.add_argument("--periods", help="trial periods, e.g. 1,2,3,4,6")
    p.add_argument("--cross-check", action="store_true", help="sample with every available method")
    p.add_argument("--expect", type=int, help="also compare against this degree")
    p.add_argument("--threads", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dim", help="dimension of BZ_lambda (or of BZ_{lambda,mu} when mu is given)")
    _add_common(p)
    p.add_argument("--point", action="store_true", help="also print a relative-interior point")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("interior", help="interior point of BZ_lambda by the averaging construction")
    _add_common(p)
    p.add_argument("--delta", help="perturbation for type D (p/q)")
    p.add_argument("--symbolic", action="store_true", help="print entries as affine functions of delta")
    p.set_defaults(func=cmd_interior)

    p = sub.add_parser("bz-count", help="count integral BZ patterns")
    _add_common(p)
    p.add_argument("--list", type=int, default=0, metavar="K", help="also print the first K patterns")
    p.set_defaults(func=cmd_bz_count)
    return parser


def main(argv=None):
    from .bzgeom import DeltaTooLarge
    from .lp import Infeasible

    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Infeasible as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (UsageError, DeltaTooLarge, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
