"""Batch driver: q-expansion printing, verification suites, invariants.

Exit codes: 0 everything passed, 1 at least one check failed, 2 usage
or configuration error.  Reports are deterministic for a fixed
configuration: sampling is seeded and records are assembled in name
order, independent of any parallelism (THETA_LAB_THREADS caps the
worker count)."""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .congruence import SubgroupSpec, group_tower_check, subgroup_invariants, enum_structures_above
from .identities import (
    IdentityRecord,
    b1_series,
    b4_series,
    degenerate_fibers_level4,
    eta_quotient_check,
    hesse_check,
    lam_series,
    mu6_series,
    null_invariance_check,
    phi5_series,
    quotient_model_check,
    theta_null_curve_check,
    weierstrass_check_level4,
    x6_series,
    y6_series,
)
from .projective import (
    build_canonical_matrices,
    conjugation_table_check,
    proj_residual,
    rho_theta_match,
    translation_check,
    verify_presentation,
)
from .quadrics import NullData, gen_even_basis, gen_even_s_basis, gen_odd_basis, rank_check, verify_on_curve
from .series import PuiseuxSeries, eta_series
from .theta import ThetaContext, theta_N_eval, theta_null_series, transform_check


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    N: int = 4
    order: int | None = None
    tau: complex = 1j
    tol: float = 1e-9
    samples: int = 25
    seed: int = 0
    fmt: str = "text"

    def series_order(self) -> int:
        if self.order is not None:
            return self.order
        return max(50, 8 * self.N)

    def context(self) -> ThetaContext:
        return ThetaContext(self.N, self.tau, min(self.tol, 1e-10))

    def validate(self, need_series: bool = False):
        if self.tau.imag < 0.4:
            raise ConfigError("Im tau must be >= 0.4 (raise tol and use the API directly)")
        if need_series and self.series_order() < 8 * self.N:
            raise ConfigError(f"order must be >= {8 * self.N} for N = {self.N}")
        if self.samples < 1:
            raise ConfigError("samples must be >= 1")


_QEXP_LEVEL = {"lambda": 4, "phi5": 5, "X6": 6, "Y6": 6, "mu6": 6, "b1": 8, "b4": 8}


def series_for_object(obj: str, cfg: RunConfig, k: int | None) -> PuiseuxSeries:
    order = cfg.order if cfg.order is not None else max(50, 8 * _QEXP_LEVEL.get(obj, 4))
    if obj == "eta":
        return eta_series(max(order, 1))
    if obj == "theta-null":
        if k is None:
            raise ConfigError("theta-null needs --k")
        if cfg.N < 2:
            raise ConfigError("theta-null needs --N >= 2")
        if order < 8 * cfg.N:
            raise ConfigError(f"order must be >= {8 * cfg.N} for N = {cfg.N}")
        return theta_null_series(cfg.N, k, order)
    builders = {
        "lambda": lam_series,
        "X6": x6_series,
        "Y6": y6_series,
        "mu6": mu6_series,  # prints the 3*mu expansion
        "b1": b1_series,
        "b4": b4_series,
        "phi5": phi5_series,
    }
    if obj not in builders:
        raise ConfigError(f"unknown object {obj!r}")
    lvl = _QEXP_LEVEL[obj]
    if order < 8 * lvl:
        raise ConfigError(f"order must be >= {8 * lvl} for object {obj}")
    return builders[obj](order)


# ---------------------------------------------------------------------------
# verification suites


def _suite_identities(cfg: RunConfig) -> list[IdentityRecord]:
    N = cfg.N
    order = cfg.series_order()
    out: list[IdentityRecord] = []
    if N in (4, 6, 7, 8):
        out += theta_null_curve_check(N, order)
    out += [r for r in eta_quotient_check(order) if r.level == N]
    if N in (6, 8):
        out += quotient_model_check(N, order)
    if N == 6:
        out.append(hesse_check(order, cfg.context(), cfg.samples, cfg.seed))
    if N % 2 == 0:
        out.append(null_invariance_check(N, cfg.tau))
    if not out:
        raise ConfigError(f"no series identities catalogued for N = {N}")
    return out


def _suite_quadrics(cfg: RunConfig) -> list[IdentityRecord]:
    N = cfg.N
    if N < 4:
        raise ConfigError("quadric systems need N >= 4")
    ctx = cfg.context()
    nd = NullData.numeric(ctx)
    expected = N * (N - 3) // 2
    if N % 2:
        forms = gen_odd_basis(nd)
    else:
        forms = gen_even_basis(nd).full
    rep = verify_on_curve(forms, ctx, cfg.samples, cfg.seed, cfg.tol * 10)
    rank = rank_check(forms, N)
    out = [
        IdentityRecord(
            name="quadrics.on-curve", level=N, kind="numeric-vanishing",
            status="pass" if rep.passed else "fail", tolerance=cfg.tol * 10,
            residual=rep.max_residual,
            detail=f"{rep.n_forms} forms, {rep.samples} samples",
        ),
        IdentityRecord(
            name="quadrics.rank", level=N, kind="count",
            status="pass" if rank == expected else "fail",
            detail=f"rank {rank}, expected {expected}",
        ),
    ]
    if N % 2 == 0:
        sb = gen_even_s_basis(nd)
        rep_s = verify_on_curve(sb.V0 + sb.V1, ctx, cfg.samples, cfg.seed, cfg.tol * 10)
        eb = gen_even_basis(nd)
        r_a = rank_check(eb.V0, N)
        r_s = rank_check(sb.V0, N)
        r_both = rank_check(eb.V0 + sb.V0, N)
        out.append(
            IdentityRecord(
                name="quadrics.s-basis.on-curve", level=N, kind="numeric-vanishing",
                status="pass" if rep_s.passed else "fail", tolerance=cfg.tol * 10,
                residual=rep_s.max_residual,
                detail=f"{len(sb.V0) + len(sb.V1)} forms",
            )
        )
        out.append(
            IdentityRecord(
                name="quadrics.s-basis.span", level=N, kind="count",
                status="pass" if r_a == r_s == r_both == N // 2 - 1 else "fail",
                detail=f"graded piece 0: ranks {r_a}/{r_s}/stacked {r_both}",
            )
        )
    return out


def _suite_rep(cfg: RunConfig) -> list[IdentityRecord]:
    N = cfg.N
    if N % 2:
        raise ConfigError("the projective representation suite needs even N")
    rep = verify_presentation(N)
    names = {"braid": "(A0 B0)^3 = A0^2", "order4": "A0^4 = I",
             "kernel_word": "kernel word = I",
             "kernel_word_congruence": "integer congruence behind the kernel word"}
    out = [
        IdentityRecord(
            name=f"rep.{key}", level=N, kind="count",
            status="pass" if ok else "fail", detail=names[key],
        )
        for key, ok in rep.checks.items()
    ]
    conj = conjugation_table_check(N)
    out.append(
        IdentityRecord(
            name="rep.conjugation-table", level=N, kind="count",
            status="pass" if all(conj.values()) else "fail",
            detail=", ".join(f"{k}={v}" for k, v in sorted(conj.items())),
        )
    )
    return out


def _suite_translation(cfg: RunConfig) -> list[IdentityRecord]:
    N = cfg.N
    ctx = cfg.context()
    tr = translation_check(ctx, cfg.samples, cfg.seed, cfg.tol * 10)
    out = [
        IdentityRecord(
            name="translation.equivariance", level=N, kind="numeric-vanishing",
            status="pass" if tr.passed else "fail", tolerance=cfg.tol * 10,
            residual=max(tr.max_resid_S, tr.max_resid_T),
            detail=(
                f"translate by tau/N vs M_S: {tr.max_resid_S:.3e}; "
                f"translate by 1/N vs M_T^(-1): {tr.max_resid_T:.3e}"
            ),
        )
    ]
    import numpy as np
    from random import Random

    can = build_canonical_matrices(N)
    minv = can.M_inv.complex_array()
    rng = Random(cfg.seed)
    worst = 0.0
    for _ in range(min(cfg.samples, 10)):
        z = 0.05 + 0.9 * rng.random() + (0.05 + 0.9 * rng.random()) * cfg.tau
        a = np.array([theta_N_eval(k, z, ctx) for k in range(N)])
        b = np.array([theta_N_eval(k, -z, ctx) for k in range(N)])
        worst = max(worst, proj_residual(minv @ a, b))
    out.append(
        IdentityRecord(
            name="translation.inversion", level=N, kind="numeric-vanishing",
            status="pass" if worst < cfg.tol * 10 else "fail",
            tolerance=cfg.tol * 10, residual=worst,
            detail="theta at -z vs M_inv action",
        )
    )
    origin = [theta_N_eval(k, 0.0, ctx) for k in range(N)]
    scale = max(abs(c) for c in origin)
    sign = 1 if N % 2 == 0 else -1  # null symmetry a_k = (-1)^N a_(N-k)
    dev = max(abs(origin[k] - sign * origin[(N - k) % N]) for k in range(N)) / scale
    out.append(
        IdentityRecord(
            name="translation.origin-in-H", level=N, kind="numeric-vanishing",
            status="pass" if dev < cfg.tol * 10 else "fail",
            tolerance=cfg.tol * 10, residual=dev,
            detail=f"origin is fixed by the inversion: X_k = {'' if sign == 1 else '-'}X_(N-k)",
        )
    )
    return out


def _suite_transform(cfg: RunConfig) -> list[IdentityRecord]:
    N = cfg.N
    ctx = cfg.context()
    from random import Random

    rng = Random(cfg.seed)
    worst = 0.0
    worst_shift = 0.0
    for _ in range(min(cfg.samples, 8)):
        z = 0.05 + 0.6 * rng.random() + (0.02 + 0.25 * rng.random()) * cfg.tau
        t = transform_check(z, ctx, cfg.tol * 10)
        worst = max(worst, t.max_dev)
        worst_shift = max(worst_shift, t.max_dev_shift)
    unit_dev = abs(abs(t.ratios_shift[0]) - 1.0)
    out = [
        IdentityRecord(
            name="transform.k-independence", level=N, kind="numeric-vanishing",
            status="pass" if max(worst, worst_shift) < cfg.tol * 10 else "fail",
            tolerance=cfg.tol * 10, residual=max(worst, worst_shift),
            detail=(
                f"tau->-1/tau dev {worst:.3e}; tau->tau+1 dev {worst_shift:.3e}; "
                f"|r'| - 1 = {unit_dev:.3e}"
            ),
        )
    ]
    if N % 2 == 0:
        for kind in ("A", "B"):
            m = rho_theta_match(ctx, kind, samples=4, seed=cfg.seed, rtol=cfg.tol * 10)
            out.append(
                IdentityRecord(
                    name=f"transform.rho-theta.{kind}", level=N, kind="count",
                    status="pass" if m.passed else "fail", residual=m.residual,
                    detail=f"matched candidate {m.matched}",
                )
            )
    return out


def _suite_weierstrass(cfg: RunConfig) -> list[IdentityRecord]:
    if cfg.N != 4:
        raise ConfigError("the Weierstrass suite is specific to N = 4")
    ctx = cfg.context()
    return [
        weierstrass_check_level4(ctx, cfg.samples, cfg.seed, max(cfg.tol * 100, 1e-7)),
        degenerate_fibers_level4(),
    ]


def _suite_structures(cfg: RunConfig) -> list[IdentityRecord]:
    N = cfg.N
    if N % 2:
        raise ConfigError("refined structures need even N")
    res = enum_structures_above(N)
    out = [
        IdentityRecord(
            name="structures.count", level=N, kind="count",
            status="pass" if (len(res.structures), res.class_count) == (8, 4) else "fail",
            detail=f"{len(res.structures)} refined structures in {res.class_count} classes",
        )
    ]
    tower = group_tower_check(N)
    out.append(
        IdentityRecord(
            name="structures.tower", level=N, kind="count",
            status="pass" if tower.passed and tower.quotient_orders == (4, 2) else "fail",
            detail=f"quotient orders {tower.quotient_orders}",
        )
    )
    inv = subgroup_invariants(SubgroupSpec("gammaN2N", N))
    euler_ok = 12 * (inv.genus - 1) + 6 * inv.cusps == inv.index_psl
    out.append(
        IdentityRecord(
            name="structures.invariants", level=N, kind="count",
            status="pass" if euler_ok else "fail",
            detail=(
                f"index {inv.index_psl}, cusps {inv.cusps}, genus {inv.genus}"
            ),
        )
    )
    return out


_SUITES = {
    "identities": _suite_identities,
    "quadrics": _suite_quadrics,
    "rep": _suite_rep,
    "translation": _suite_translation,
    "transform": _suite_transform,
    "weierstrass": _suite_weierstrass,
    "structures": _suite_structures,
}


def run_suites(cfg: RunConfig, suite: str) -> list[IdentityRecord]:
    if suite == "all":
        tasks = []
        for name, fn in _SUITES.items():
            if name == "rep" and cfg.N % 2:
                continue
            if name == "structures" and cfg.N % 2:
                continue
            if name == "weierstrass" and cfg.N != 4:
                continue
            if name == "identities" and cfg.N not in (4, 5, 6, 7, 8):
                continue
            tasks.append(fn)
        workers = max(1, int(os.environ.get("THETA_LAB_THREADS", "1")))
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(lambda f: f(cfg), tasks))
        else:
            results = [f(cfg) for f in tasks]
        records = [r for chunk in results for r in chunk]
    else:
        if suite not in _SUITES:
            raise ConfigError(f"unknown suite {suite!r}")
        records = _SUITES[suite](cfg)
    return sorted(records, key=lambda r: r.name)


def report_exit_code(records: list[IdentityRecord]) -> int:
    return 0 if all(r.passed for r in records) else 1


def render_report(records: list[IdentityRecord], cfg: RunConfig, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(
            {
                "schema": 1,
                "config": {
                    "N": cfg.N,
                    "order": cfg.series_order(),
                    "tau": [cfg.tau.real, cfg.tau.imag],
                    "tol": cfg.tol,
                    "samples": cfg.samples,
                    "seed": cfg.seed,
                },
                "records": [r.to_dict() for r in records],
            },
            sort_keys=True,
        )
    lines = []
    for r in records:
        resid = f" residual={r.residual:.3e}" if r.residual is not None else ""
        lines.append(f"{r.status.upper():4s} {r.name:32s}{resid}  {r.detail}")
    npass = sum(r.passed for r in records)
    lines.append(f"{npass}/{len(records)} checks passed")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="thetalab",
        description="theta immersions of elliptic curves: exact q-series and models",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, series=False):
        sp.add_argument("--N", type=int, default=4)
        sp.add_argument("--order", type=int, default=None)
        sp.add_argument("--tau-re", type=float, default=0.0)
        sp.add_argument("--tau-im", type=float, default=1.0)
        sp.add_argument("--tol", type=float, default=1e-9)
        sp.add_argument("--samples", type=int, default=25)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")

    q = sub.add_parser("qexp", help="print an exact q-expansion")
    common(q)
    q.add_argument(
        "--object",
        required=True,
        choices=("theta-null", "eta", "lambda", "X6", "Y6", "b1", "b4", "phi5", "mu6"),
    )
    q.add_argument("--k", type=int, default=None)

    v = sub.add_parser("verify", help="run a verification suite")
    common(v)
    v.add_argument("--suite", required=True, choices=tuple(_SUITES) + ("all",))

    i = sub.add_parser("invariants", help="congruence subgroup invariants")
    common(i)
    i.add_argument("--family", required=True, choices=("gamma", "gammaN2N"))
    return p


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(
        N=args.N,
        order=args.order,
        tau=complex(args.tau_re, args.tau_im),
        tol=args.tol,
        samples=args.samples,
        seed=args.seed,
        fmt=args.fmt,
    )
    try:
        if args.command == "qexp":
            series = series_for_object(args.object, cfg, args.k)
            print(series.to_json() if cfg.fmt == "json" else str(series))
            return 0
        if args.command == "verify":
            cfg.validate(need_series=args.suite in ("identities", "all"))
            records = run_suites(cfg, args.suite)
            print(render_report(records, cfg, cfg.fmt))
            return report_exit_code(records)
        if args.command == "invariants":
            spec = SubgroupSpec(args.family, args.N)
            inv = subgroup_invariants(spec)
            if cfg.fmt == "json":
                print(
                    json.dumps(
                        {
                            "family": args.family,
                            "N": args.N,
                            "index_psl": inv.index_psl,
                            "cusps": inv.cusps,
                            "genus": inv.genus,
                        },
                        sort_keys=True,
                    )
                )
            else:
                print(f"index {inv.index_psl}, cusps {inv.cusps}, genus {inv.genus}")
            return 0
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 2


if __name__ == "__main__":
    sys.exit(main())
