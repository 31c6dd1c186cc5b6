"""Gegenbauer polynomials, zonal spherical harmonics, and subsphere pairings.

The branching layer of the library: restriction pairings between a degree-a
zonal harmonic on S^{n-1} and degree-b zonal harmonics on the equatorial
subsphere S^{n-2}, together with a witness scan certifying when the degree-b
component of the restricted K-type can be reached at all.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import InvalidParameterError
from .numerics import QuadratureSpec, gauss_legendre_on, log_gamma

__all__ = [
    "gegenbauer",
    "sphere_area",
    "ZonalHarmonic",
    "weighted_cos_integral",
    "zonal_norm_sq",
    "zonal_norm_sq_closed",
    "pairing_subsphere",
    "so_branching_multiplicity",
    "ktype_pairing_nonzero",
]

_DEFAULT_SPEC = QuadratureSpec()


def gegenbauer(n: int, nu: float, x):
    """Evaluate the Gegenbauer polynomial C_n^nu(x) by the three-term recurrence.

    n * C_n = 2(n+nu-1) x C_{n-1} - (n+2nu-2) C_{n-2},  C_0 = 1,  C_1 = 2 nu x.
    Accepts scalar or ndarray x.
    """
    if n < 0:
        raise ValueError("degree must be non-negative")
    x = np.asarray(x, dtype=float)
    c_prev = np.ones_like(x)
    if n == 0:
        return c_prev if c_prev.ndim else float(c_prev)
    c = 2.0 * nu * x
    for k in range(2, n + 1):
        c, c_prev = (2.0 * (k + nu - 1.0) * x * c - (k + 2.0 * nu - 2.0) * c_prev) / k, c
    return c if c.ndim else float(c)


def sphere_area(n: int) -> float:
    """Surface area of the unit sphere S^{n-1} in R^n: 2 pi^{n/2} / Gamma(n/2)."""
    if n < 1:
        raise ValueError("sphere_area requires n >= 1")
    return 2.0 * math.pi ** (n / 2.0) / math.exp(log_gamma(n / 2.0))


@dataclass(frozen=True)
class ZonalHarmonic:
    """The degree-a zonal spherical harmonic on S^{n-1} about a pole.

    Realized as C_a^{(n-2)/2} of the pole coordinate.  n = 2 would need the
    degenerate (nu = 0) Chebyshev limit and is rejected; every sphere in this
    library has n >= 3.
    """

    degree: int
    sphere_dim: int
    pole: np.ndarray = field(default=None)

    def __post_init__(self):
        if self.degree < 0:
            raise InvalidParameterError("zonal harmonic degree must be >= 0")
        if self.sphere_dim < 3:
            raise InvalidParameterError(
                "sphere_dim < 3 hits the degenerate nu = 0 Gegenbauer case"
            )
        pole = self.pole
        if pole is None:
            pole = np.zeros(self.sphere_dim)
            pole[-1] = 1.0
        pole = np.asarray(pole, dtype=float)
        if pole.shape != (self.sphere_dim,):
            raise InvalidParameterError("pole has wrong dimension")
        if abs(np.linalg.norm(pole) - 1.0) > 1e-12:
            raise InvalidParameterError("pole must be a unit vector (1e-12)")
        object.__setattr__(self, "pole", pole)

    @property
    def gegenbauer_order(self) -> float:
        return (self.sphere_dim - 2) / 2.0

    def value_at_cos(self, x):
        """Value as a function of the cosine <y, pole>."""
        return gegenbauer(self.degree, self.gegenbauer_order, x)

    def value(self, y):
        y = np.asarray(y, dtype=float)
        return self.value_at_cos(y @ self.pole)


def weighted_cos_integral(f, sin_power: int, nodes: int) -> float:
    """Integral of f(x) (1-x^2)^{sin_power/2} over [-1, 1].

    Uses x = cos(theta); for polynomial f and integer sin_power >= 0 the
    theta-integrand is a trigonometric polynomial, so the rule is
    effectively exact.
    """
    theta, w = gauss_legendre_on(0.0, math.pi, nodes)
    x = np.cos(theta)
    return float(np.sum(w * np.asarray(f(x), dtype=float) * np.sin(theta) ** (sin_power + 1)))


def zonal_norm_sq(a: int, n: int, spec: QuadratureSpec = _DEFAULT_SPEC) -> float:
    """L^2(S^{n-1}) norm squared of the degree-a zonal harmonic, by quadrature."""
    if n < 3:
        raise InvalidParameterError("zonal_norm_sq requires sphere_dim >= 3")
    nu = (n - 2) / 2.0
    return sphere_area(n - 1) * weighted_cos_integral(
        lambda x: gegenbauer(a, nu, x) ** 2, n - 3, spec.sphere_nodes
    )


def zonal_norm_sq_closed(a: int, n: int) -> float:
    """Closed form of :func:`zonal_norm_sq` from Gegenbauer orthogonality."""
    if n < 3:
        raise InvalidParameterError("zonal_norm_sq_closed requires sphere_dim >= 3")
    nu = (n - 2) / 2.0
    line = (
        math.pi
        * 2.0 ** (1.0 - 2.0 * nu)
        * math.exp(log_gamma(a + 2.0 * nu) - log_gamma(a + 1.0) - 2.0 * log_gamma(nu))
        / (a + nu)
    )
    return sphere_area(n - 1) * line


def pairing_subsphere(a: int, b: int, n: int, spec: QuadratureSpec = _DEFAULT_SPEC) -> float:
    """Restriction pairing of zonal harmonics across the equatorial subsphere.

    The degree-a zonal harmonic of S^{n-1} (pole inside the subsphere) is
    restricted to S^{n-2} and integrated against the degree-b zonal harmonic
    of S^{n-2} about the same pole.  Vanishes when b > a or a - b is odd.
    """
    if n < 4:
        raise InvalidParameterError("pairing_subsphere requires n >= 4")
    nu_big = (n - 2) / 2.0
    nu_sub = (n - 3) / 2.0
    return sphere_area(n - 2) * weighted_cos_integral(
        lambda x: gegenbauer(a, nu_big, x) * gegenbauer(b, nu_sub, x),
        n - 4,
        spec.sphere_nodes,
    )


def so_branching_multiplicity(a: int, b: int) -> int:
    """Multiplicity of the one-row SO(n-1)-type b in the restriction of type a."""
    if a < 0 or b < 0:
        raise InvalidParameterError("degrees must be non-negative")
    return 1 if b <= a else 0


# ---------------------------------------------------------------------------
# Witness machinery: harmonic polynomials invariant under rotations of the
# equatorial band, written in the variables
#   u = coordinate normal to the subsphere,
#   s = pole coordinate,
#   w = squared radius of the remaining n-2 band coordinates.
# A monomial u^i s^j w^k is stored as {(i, j, k): coeff} and has degree i+j+2k.
# ---------------------------------------------------------------------------


def _poly_laplacian(poly: dict, n: int) -> dict:
    out: dict = {}
    for (i, j, k), c in poly.items():
        if i >= 2:
            key = (i - 2, j, k)
            out[key] = out.get(key, 0.0) + c * i * (i - 1)
        if j >= 2:
            key = (i, j - 2, k)
            out[key] = out.get(key, 0.0) + c * j * (j - 1)
        if k >= 1:
            key = (i, j, k - 1)
            out[key] = out.get(key, 0.0) + c * 2 * k * (n + 2 * k - 4)
    return {key: c for key, c in out.items() if c != 0.0}


def _poly_mul_r2(poly: dict) -> dict:
    # multiply by r^2 = u^2 + s^2 + w
    out: dict = {}
    for (i, j, k), c in poly.items():
        for key in ((i + 2, j, k), (i, j + 2, k), (i, j, k + 1)):
            out[key] = out.get(key, 0.0) + c
    return out


def _monomials(degree: int):
    for k in range(degree // 2 + 1):
        rest = degree - 2 * k
        for i in range(rest + 1):
            yield (i, rest - i, k)


def _harmonic_projection(poly: dict, degree: int, n: int) -> dict:
    """Degree-`degree` harmonic component of a homogeneous band-invariant poly.

    Solves Delta(P - r^2 Q) = 0 for Q; the map Q -> Delta(r^2 Q) on the
    degree-(degree-2) space is invertible.
    """
    if degree < 2:
        return dict(poly)
    basis = list(_monomials(degree - 2))
    index = {mono: idx for idx, mono in enumerate(basis)}
    mat = np.zeros((len(basis), len(basis)))
    for col, mono in enumerate(basis):
        image = _poly_laplacian(_poly_mul_r2({mono: 1.0}), n)
        for key, c in image.items():
            mat[index[key], col] = c
    rhs = np.zeros(len(basis))
    for key, c in _poly_laplacian(poly, n).items():
        rhs[index[key]] = c
    q = np.linalg.solve(mat, rhs)
    out = dict(poly)
    correction = _poly_mul_r2({mono: coef for mono, coef in zip(basis, q) if coef != 0.0})
    for key, c in correction.items():
        out[key] = out.get(key, 0.0) - c
    return {key: c for key, c in out.items() if abs(c) > 1e-14}


def _solid_subsphere_zonal(degree: int, sub_dim: int) -> dict:
    """Homogeneous zonal harmonic of R^{sub_dim} in the (s, w) variables.

    Homogenized Gegenbauer recurrence with t^2 = s^2 + w; the result is a
    harmonic polynomial of the subsphere variables (u-degree zero).
    """
    nu = (sub_dim - 2) / 2.0
    p_prev = {(0, 0, 0): 1.0}
    if degree == 0:
        return p_prev
    p = {(0, 1, 0): 2.0 * nu}
    for d in range(2, degree + 1):
        nxt: dict = {}
        for (i, j, k), c in p.items():
            key = (i, j + 1, k)
            nxt[key] = nxt.get(key, 0.0) + 2.0 * (d + nu - 1.0) * c / d
        for (i, j, k), c in p_prev.items():
            for key in ((i, j + 2, k), (i, j, k + 1)):
                nxt[key] = nxt.get(key, 0.0) - (d + 2.0 * nu - 2.0) * c / d
        p, p_prev = nxt, p
    return p


@lru_cache(maxsize=None)
def _witness_harmonics(a: int, n: int):
    """Spanning family of degree-a band-invariant harmonics on S^{n-1}.

    Member j is the harmonic projection of u^j times the solid degree-(a-j)
    zonal harmonic of the subsphere space R^{n-1}.
    """
    out = []
    for j in range(a + 1):
        pre = {(j, s, k): c for (_, s, k), c in _solid_subsphere_zonal(a - j, n - 1).items()}
        out.append(_harmonic_projection(pre, a, n))
    return tuple(out)


def _normal_trace(poly: dict, m: int):
    """The m-th normal-derivative trace on the subsphere, as a function of s.

    Collects the u^m part, applies m!, and substitutes w = 1 - s^2 (the
    subsphere constraint with u = 0).
    """
    terms = [(j, k, c * math.factorial(m)) for (i, j, k), c in poly.items() if i == m]
    if not terms:
        return None

    def f(x):
        x = np.asarray(x, dtype=float)
        acc = np.zeros_like(x)
        for j, k, c in terms:
            acc = acc + c * x**j * (1.0 - x * x) ** k
        return acc

    return f


def ktype_pairing_nonzero(
    a: int, b: int, n: int, spec: QuadratureSpec = _DEFAULT_SPEC
) -> tuple[bool, float]:
    """Certify whether the degree-b subsphere type is reachable from degree a.

    Scans the spanning witness family of degree-a harmonics on S^{n-1}; for
    each member, every normal-derivative trace on the subsphere is paired
    against the degree-b zonal harmonic of S^{n-2}.  A pairing is accepted
    when it exceeds 1e-8 times the product of the L^2 norms of the two
    factors (scale-free threshold).  True exactly when 0 <= b <= a.

    Returns (nonzero, witness_value) where witness_value is the pairing of
    the best witness.
    """
    if n < 4:
        raise InvalidParameterError("ktype_pairing_nonzero requires n >= 4")
    if a < 0 or b < 0:
        raise InvalidParameterError("degrees must be non-negative")
    nu_sub = (n - 3) / 2.0
    zb = lambda x: gegenbauer(b, nu_sub, x)
    zb_norm = math.sqrt(zonal_norm_sq(b, n - 1, spec))
    area = sphere_area(n - 2)
    nodes = spec.sphere_nodes
    best_ratio = 0.0
    best_value = 0.0
    for harmonic in _witness_harmonics(a, n):
        for m in range(a + 1):
            trace = _normal_trace(harmonic, m)
            if trace is None:
                continue
            t_norm_sq = area * weighted_cos_integral(lambda x: trace(x) ** 2, n - 4, nodes)
            if t_norm_sq <= 0.0:
                continue
            pairing = area * weighted_cos_integral(lambda x: trace(x) * zb(x), n - 4, nodes)
            ratio = abs(pairing) / (math.sqrt(t_norm_sq) * zb_norm)
            if ratio > best_ratio:
                best_ratio = ratio
                best_value = pairing
    return best_ratio > 1e-8, best_value
