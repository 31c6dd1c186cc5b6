"""Named property suites: the module invariants, runnable from the CLI.

Each suite returns a list of (name, passed, detail) tuples and is
deterministic for a fixed seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import fjrep, geometry, harmonics, packets, periods
from .numerics import HalfInt, QuadratureSpec, beta, gauss_legendre_rule

__all__ = ["CheckResult", "SUITES", "run_suite"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _result(name, passed, detail=""):
    return CheckResult(name, bool(passed), detail)


def quadrature_suite(seed: int = 0) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    out = []
    worst = 0.0
    for n in (2, 4, 8, 16, 32):
        x, w = gauss_legendre_rule(n)
        for k in range(0, 2 * n):
            exact = 0.0 if k % 2 else 2.0 / (k + 1)
            worst = max(worst, abs(float(np.sum(w * x**k)) - exact))
    out.append(_result("gauss_legendre_exactness", worst <= 1e-13, f"max err {worst:.2e}"))

    worst = 0.0
    for _ in range(200):
        x, y = rng.uniform(0.05, 20.0, size=2)
        worst = max(worst, abs(beta(x, y) - beta(y, x)) / abs(beta(x, y)))
    out.append(_result("beta_symmetry", worst <= 1e-13, f"max rel err {worst:.2e}"))

    worst = 0.0
    for a_exp in (0, 1, 2, 3, 5):
        for total in (-2, -4, -7):
            c_exp = total - a_exp
            closed = geometry.radial_integral_closed(a_exp, c_exp)
            value, _ = geometry.radial_integral_numeric(a_exp, c_exp)
            worst = max(worst, abs(value - closed) / abs(closed))
    out.append(_result("radial_numeric_vs_closed", worst <= 1e-9, f"max rel err {worst:.2e}"))
    return out


def harmonics_suite(seed: int = 0) -> list[CheckResult]:
    out = []
    worst = 0.0
    for nu in (0.5, 1.0, 1.5, 2.0):
        sin_power = int(round(2 * nu - 1))
        norms = [
            harmonics.weighted_cos_integral(
                lambda x, m=m: harmonics.gegenbauer(m, nu, x) ** 2, sin_power, 128
            )
            for m in range(9)
        ]
        for m in range(9):
            for n in range(m + 1, 9):
                val = harmonics.weighted_cos_integral(
                    lambda x: harmonics.gegenbauer(m, nu, x) * harmonics.gegenbauer(n, nu, x),
                    sin_power,
                    128,
                )
                worst = max(worst, abs(val) / math.sqrt(norms[m] * norms[n]))
    out.append(_result("gegenbauer_orthogonality", worst <= 1e-10, f"max normalized {worst:.2e}"))

    worst = 0.0
    for n in (4, 5, 6):
        for a in range(7):
            for b in range(7):
                if (a - b) % 2 == 0:
                    continue
                val = harmonics.pairing_subsphere(a, b, n)
                scale = math.sqrt(
                    harmonics.zonal_norm_sq(a, n) * harmonics.zonal_norm_sq(b, n - 1)
                )
                worst = max(worst, abs(val) / scale)
    out.append(_result("pairing_parity_vanishing", worst <= 1e-12, f"max normalized {worst:.2e}"))

    worst = 0.0
    for n in (4, 5, 6):
        for a in range(9):
            closed = harmonics.zonal_norm_sq_closed(a, n)
            quad = harmonics.zonal_norm_sq(a, n)
            worst = max(worst, abs(closed - quad) / closed)
    out.append(_result("zonal_norm_closed_vs_quadrature", worst <= 1e-10, f"max rel {worst:.2e}"))

    ok = True
    for n in (4, 5, 6):
        for a in range(7):
            for b in range(7):
                nonzero, _ = harmonics.ktype_pairing_nonzero(a, b, n)
                if nonzero != (harmonics.so_branching_multiplicity(a, b) == 1):
                    ok = False
    out.append(_result("ktype_witness_matches_branching", ok))
    return out


def decay_suite(seed: int = 0) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    combos = [
        (4, 4, HalfInt(1)),
        (4, 4, HalfInt(2)),
        (4, 4, HalfInt(3)),
        (4, 6, HalfInt(2)),
        (4, 6, HalfInt(3)),
        (4, 6, HalfInt(4)),
        (5, 5, HalfInt(1)),
        (5, 5, HalfInt(2)),
        (4, 5, HalfInt.from_twice(3)),
    ]
    bound_ok = True
    slope_ok = True
    detail = []
    for p, q, lam in combos:
        param = fjrep.make_fj_param(p, q, lam)
        rate = -float(param.decay_exponent)
        zonal = harmonics.ZonalHarmonic(param.degree, q)
        xs = np.linspace(-1.0, 1.0, 2001)
        max_f = float(np.max(np.abs(zonal.value_at_cos(xs))))
        c_const = 2.0**rate * max_f
        for _ in range(100):
            vec = rng.normal(size=q)
            vec /= np.linalg.norm(vec)
            t = rng.uniform(1.0, 10.0)
            if abs(fjrep.fj_eval(param, vec, t)) > c_const * math.exp(-rate * t) + 1e-12:
                bound_ok = False
        ts = np.linspace(2.0, 10.0, 64)
        pole = np.zeros(q)
        pole[-1] = 1.0
        vals = np.abs(fjrep.fj_eval(param, pole, ts))
        slope = np.polyfit(ts, np.log(vals), 1)[0]
        rel = abs(slope + rate) / rate
        detail.append(f"{p},{q},{lam}:{rel:.4f}")
        if rel > 0.02:
            slope_ok = False
    out = [
        _result("decay_bound", bound_ok, "C = 2^rate * max|f_a|"),
        _result("decay_log_slope_2pct", slope_ok, " ".join(detail)),
    ]
    return out


def _valid_lambdas(p: int, q: int, grid) -> list[HalfInt]:
    out = []
    for lam in grid:
        try:
            fjrep.make_fj_param(p, q, lam)
        except Exception:
            continue
        out.append(lam)
    return out


def branching_suite(seed: int = 0) -> list[CheckResult]:
    grid = [HalfInt(1), HalfInt.from_twice(3), HalfInt(2), HalfInt(3)]
    agree_g2 = True
    agree_g1 = True
    interlace_g2 = True
    interlace_g1 = True
    for p in (4, 5, 6):
        for q in (4, 5, 6):
            for lam in _valid_lambdas(p, q, grid):
                ambient = fjrep.make_fj_param(p, q, lam)
                max_twice = (ambient.degree + 8) * 2
                for mu in periods.valid_targets(p, q, "g2", max_twice):
                    tgt = fjrep.make_fj_param(p, q, mu, fjrep.SpaceTag.G2_SPACE)
                    if tgt.degree > 6:
                        continue
                    v = periods.period_integral_G2(p, q, lam, mu, use_witness=True)
                    if v.nonzero != v.predicate_nonzero:
                        agree_g2 = False
                    finite = (
                        periods.interlace_class_for_pair(p, q, lam, mu, "g2")
                        is packets.InterlaceClass.FINITE_TYPE
                    )
                    if finite != v.predicate_nonzero:
                        interlace_g2 = False
                for nu in periods.valid_targets(p, q, "g1", max_twice):
                    tgt = fjrep.make_fj_param(p, q, nu, fjrep.SpaceTag.G1_SPACE)
                    if tgt.degree > 6:
                        continue
                    v = periods.period_integral_G1(p, q, lam, nu)
                    if v.nonzero != v.predicate_nonzero:
                        agree_g1 = False
                    if v.predicate_nonzero:
                        cls = periods.interlace_class_for_pair(p, q, lam, nu, "g1")
                        if cls is not packets.InterlaceClass.INFINITE_TYPE_1:
                            interlace_g1 = False
    return [
        _result("g2_period_matches_predicate", agree_g2),
        _result("g1_period_matches_predicate", agree_g1),
        _result("g2_finite_interlacing_equivalence", interlace_g2),
        _result("g1_nonzero_implies_infinite_type_1", interlace_g1),
    ]


def packets_suite(seed: int = 0) -> list[CheckResult]:
    out = []
    ok_fast = True
    ok_brute = True
    ok_size = True
    for p, q in ((4, 4), (4, 6), (6, 6)):
        m = (p + q) // 2
        left = (packets.WeylGroup("D", p // 2), packets.WeylGroup("D", q // 2))
        mid = packets.WeylGroup("D", m)
        right = packets.WeylGroup("D", m - 1)
        res = packets.double_cosets(left, mid, right)
        if res.count != 2:
            ok_fast = False
        if res.coset_space_size != 2 * m:
            ok_size = False
        if packets.double_cosets_brute(left, mid, right) != 2:
            ok_brute = False
    out.append(_result("double_coset_count_fast", ok_fast))
    out.append(_result("double_coset_count_brute", ok_brute))
    out.append(_result("coset_space_size", ok_size))

    forms = packets.pure_inner_forms(packets.RealForm(3, 3))
    out.append(
        _result(
            "pure_inner_forms_constant_total",
            all(f.total == 6 for f in forms)
            and [(f.p_sig, f.q_sig) for f in forms] == [(1, 5), (3, 3), (5, 1)],
        )
    )

    rows_ok = all(
        sum(packets.admissibility_table(member, sub) for sub in ("g1", "g2")) == 1
        for member in ("s", "as")
    )
    cols_ok = all(
        sum(packets.admissibility_table(member, sub) for member in ("s", "as")) == 1
        for sub in ("g1", "g2")
    )
    out.append(_result("admissibility_one_per_row_and_column", rows_ok and cols_ok))
    return out


def conjecture_suite(seed: int = 0) -> list[CheckResult]:
    ok = True
    grid = [HalfInt.from_twice(t) for t in range(1, 16)]
    lambdas = [HalfInt(1), HalfInt.from_twice(3), HalfInt(2), HalfInt.from_twice(5), HalfInt(3)]
    for p, q in ((4, 4), (4, 6)):
        for lam in lambdas:
            for sub in ("g1", "g2"):
                report = packets.conjecture_explore(p, q, lam, sub, grid)
                if not report.disjoint:
                    ok = False
    return [_result("default_predicate_supports_disjoint", ok)]


SUITES = {
    "quadrature": quadrature_suite,
    "harmonics": harmonics_suite,
    "decay": decay_suite,
    "branching": branching_suite,
    "packets": packets_suite,
    "conjecture": conjecture_suite,
}


def run_suite(name: str, seed: int = 0) -> list[CheckResult]:
    if name == "all":
        results = []
        for suite_name in SUITES:
            results.extend(run_suite(suite_name, seed))
        return results
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    return SUITES[name](seed)
