"""Period integrals over suborbits and the resulting branching verdicts.

The pairing of two generating functions over a codimension-one orbit factors
exactly in the chart: a full-sphere area, a one-dimensional sphere pairing,
and a radial cosh-power integral.  The non-vanishing verdict is always
decided from the K-type witness scan (the twisted pairing); the closed-form
predicates provide the independent cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DivergenceError, InvalidParameterError
from .fjrep import FJParam, SpaceTag, inf_char, make_fj_param
from .geometry import radial_integral_numeric
from .harmonics import (
    gegenbauer,
    ktype_pairing_nonzero,
    pairing_subsphere,
    sphere_area,
    weighted_cos_integral,
    zonal_norm_sq,
)
from .numerics import HalfInt, QuadratureSpec
from .packets import InterlaceClass, interlace_classify

__all__ = [
    "PeriodVerdict",
    "BranchingVerdict",
    "converges_G1",
    "converges_G2",
    "nonvanishing_G1",
    "nonvanishing_G2",
    "period_integral_G1",
    "period_integral_G2",
    "branching_verdict",
    "valid_targets",
    "interlace_class_for_pair",
]

_DEFAULT_SPEC = QuadratureSpec()
_HALF = HalfInt.from_twice(1)
_NEG_HALF = HalfInt.from_twice(-1)


@dataclass(frozen=True)
class PeriodVerdict:
    """Outcome of one period computation.

    `value` is the factored integral (with the plain zonal pairing unless
    `witness_used`); `nonzero` is the witness-based K-type decision and must
    agree with `predicate_nonzero` on every instance.
    """

    converges: bool
    parity_match: bool
    degree_pair: tuple[int, int]
    value: float | None
    err_est: float
    nonzero: bool
    predicate_nonzero: bool
    sphere_factor: float
    pairing_factor: float
    radial_factor: float
    witness_used: bool

    def to_json_dict(self) -> dict:
        return {
            "converges": self.converges,
            "parity_match": self.parity_match,
            "degree_a": self.degree_pair[0],
            "degree_target": self.degree_pair[1],
            "value": self.value,
            "err_est": self.err_est,
            "nonzero": self.nonzero,
            "predicate_nonzero": self.predicate_nonzero,
            "sphere_factor": self.sphere_factor,
            "pairing_factor": self.pairing_factor,
            "radial_factor": self.radial_factor,
            "witness_used": self.witness_used,
        }


def _as_halfint(v) -> HalfInt:
    return v if isinstance(v, HalfInt) else HalfInt(v)


def converges_G2(lam, mu) -> bool:
    """Convergence of the X(p, q-1) period: lambda + mu > -1/2, exactly."""
    return _as_halfint(lam) + _as_halfint(mu) > _NEG_HALF


def converges_G1(lam, nu) -> bool:
    """Convergence of the X(p-1, q) period: lambda + nu > -1/2, exactly."""
    return _as_halfint(lam) + _as_halfint(nu) > _NEG_HALF


def nonvanishing_G2(p: int, q: int, lam, mu) -> bool:
    """Closed-form criterion for the restriction to SO0(p, q-1).

    True iff the target degree b = mu - 1 + (p-q+1)/2 satisfies 0 <= b <= a,
    equivalently mu + 1/2 <= lambda with b >= 0.
    """
    ambient = make_fj_param(p, q, lam)
    target = make_fj_param(p, q, mu, SpaceTag.G2_SPACE)
    return 0 <= target.degree <= ambient.degree


def nonvanishing_G1(p: int, q: int, lam, nu) -> bool:
    """Closed-form criterion for the restriction to SO0(p-1, q).

    True iff nu = lambda + 1/2 exactly (the two full-sphere degrees match).
    """
    ambient = make_fj_param(p, q, lam)
    target = make_fj_param(p, q, nu, SpaceTag.G1_SPACE)
    same_degree = target.degree == ambient.degree
    assert same_degree == (target.lam == ambient.lam + _HALF)
    return same_degree


def period_integral_G2(
    p: int,
    q: int,
    lam,
    mu,
    spec: QuadratureSpec = _DEFAULT_SPEC,
    use_witness: bool = False,
) -> PeriodVerdict:
    """Period of the (lambda, mu) pair over the suborbit X(p, q-1).

    Factored value: sphere_area(p) * [subsphere pairing on S^{q-2}] *
    R(p-1, (q-2) + e_lambda + e_mu).  With `use_witness`, the pairing factor
    is the best twisted witness instead of the plain zonal restriction.
    """
    lam, mu = _as_halfint(lam), _as_halfint(mu)
    if not converges_G2(lam, mu):
        raise DivergenceError(
            f"period diverges: lambda + mu = {lam + mu} fails the > -1/2 threshold"
        )
    ambient = make_fj_param(p, q, lam)
    target = make_fj_param(p, q, mu, SpaceTag.G2_SPACE)
    a, b = ambient.degree, target.degree
    sphere = sphere_area(p)
    zonal_pairing = pairing_subsphere(a, b, q, spec)
    witness_ok, witness_value = ktype_pairing_nonzero(a, b, q, spec)
    pairing = witness_value if use_witness else zonal_pairing
    c_exp = float(q - 2 + ambient.decay_exponent + target.decay_exponent)
    radial, err = radial_integral_numeric(p - 1, c_exp, spec)
    value = sphere * pairing * radial
    return PeriodVerdict(
        converges=True,
        parity_match=(a - b) % 2 == 0,
        degree_pair=(a, b),
        value=value,
        err_est=abs(sphere * pairing) * err,
        nonzero=witness_ok,
        predicate_nonzero=nonvanishing_G2(p, q, lam, mu),
        sphere_factor=sphere,
        pairing_factor=pairing,
        radial_factor=radial,
        witness_used=use_witness,
    )


def period_integral_G1(
    p: int,
    q: int,
    lam,
    nu,
    spec: QuadratureSpec = _DEFAULT_SPEC,
) -> PeriodVerdict:
    """Period of the (lambda, nu) pair over the suborbit X(p-1, q).

    Factored value: sphere_area(p-1) * [full-sphere pairing on S^{q-1},
    which is delta_{a,c} |f_a|^2 by orthogonality] * R(p-2, (q-1)+e_lambda+e_nu).
    """
    lam, nu = _as_halfint(lam), _as_halfint(nu)
    if not converges_G1(lam, nu):
        raise DivergenceError(
            f"period diverges: lambda + nu = {lam + nu} fails the > -1/2 threshold"
        )
    ambient = make_fj_param(p, q, lam)
    target = make_fj_param(p, q, nu, SpaceTag.G1_SPACE)
    a, c = ambient.degree, target.degree
    sphere = sphere_area(p - 1)
    order = (q - 2) / 2.0
    pairing = sphere_area(q - 1) * weighted_cos_integral(
        lambda x: gegenbauer(a, order, x) * gegenbauer(c, order, x), q - 3, spec.sphere_nodes
    )
    norm_scale = math.sqrt(zonal_norm_sq(a, q, spec) * zonal_norm_sq(c, q, spec))
    nonzero = abs(pairing) > 1e-8 * norm_scale
    c_exp = float(q - 1 + ambient.decay_exponent + target.decay_exponent)
    radial, err = radial_integral_numeric(p - 2, c_exp, spec)
    value = sphere * pairing * radial
    return PeriodVerdict(
        converges=True,
        parity_match=(a - c) % 2 == 0,
        degree_pair=(a, c),
        value=value,
        err_est=abs(sphere * pairing) * err,
        nonzero=nonzero,
        predicate_nonzero=nonvanishing_G1(p, q, lam, nu),
        sphere_factor=sphere,
        pairing_factor=pairing,
        radial_factor=radial,
        witness_used=False,
    )


@dataclass(frozen=True)
class BranchingVerdict:
    hom_nonzero: bool
    verdict: PeriodVerdict
    admissible_restriction: bool
    interlace: InterlaceClass


def interlace_class_for_pair(p: int, q: int, lam, target, subgroup: str) -> InterlaceClass:
    tag = SpaceTag.G1_SPACE if subgroup.lower() == "g1" else SpaceTag.G2_SPACE
    ambient = make_fj_param(p, q, lam)
    sub = make_fj_param(p, q, target, tag)
    return interlace_classify(inf_char(ambient), inf_char(sub))


def branching_verdict(
    p: int,
    q: int,
    lam,
    subgroup: str,
    target,
    spec: QuadratureSpec = _DEFAULT_SPEC,
) -> BranchingVerdict:
    """Full verdict for one (ambient, subgroup, target) triple.

    The restriction to SO0(p-1, q) is admissible, the one to SO0(p, q-1) is
    not (encoded branching data); the hom decision is the matching
    closed-form predicate, cross-checked by the numeric verdict.
    """
    sub = subgroup.lower()
    if sub == "g1":
        verdict = period_integral_G1(p, q, lam, target, spec)
        hom = nonvanishing_G1(p, q, lam, target)
        admissible = True
    elif sub == "g2":
        verdict = period_integral_G2(p, q, lam, target, spec, use_witness=True)
        hom = nonvanishing_G2(p, q, lam, target)
        admissible = False
    else:
        raise InvalidParameterError("subgroup must be 'g1' or 'g2'")
    return BranchingVerdict(
        hom_nonzero=hom,
        verdict=verdict,
        admissible_restriction=admissible,
        interlace=interlace_class_for_pair(p, q, lam, target, sub),
    )


def valid_targets(p: int, q: int, subgroup: str, max_twice: int) -> list[HalfInt]:
    """All valid target parameters with doubled value up to max_twice."""
    tag = SpaceTag.G1_SPACE if subgroup.lower() == "g1" else SpaceTag.G2_SPACE
    out = []
    for twice in range(1, max_twice + 1):
        t = HalfInt.from_twice(twice)
        try:
            make_fj_param(p, q, t, tag)
        except InvalidParameterError:
            continue
        out.append(t)
    return out
