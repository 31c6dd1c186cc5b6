import math

import numpy as np
import pytest

from hypbranch.errors import DivergenceError, InvalidParameterError
from hypbranch.fjrep import InfChar, SpaceTag, fj_eval, inf_char, is_self_dual, l2_norm_sq, make_fj_param
from hypbranch.geometry import radial_integral_closed, radial_integral_truncated
from hypbranch.harmonics import ZonalHarmonic
from hypbranch.numerics import HalfInt

H = HalfInt.from_twice


def valid_lambdas(p, q, tag=SpaceTag.G_ON_H, max_twice=8):
    out = []
    for twice in range(1, max_twice + 1):
        try:
            out.append(make_fj_param(p, q, H(twice), tag).lam)
        except InvalidParameterError:
            continue
    return out


class TestMakeParam:
    def test_basic_example(self):
        p = make_fj_param(4, 4, HalfInt(2))
        assert p.degree == 1
        assert p.decay_exponent == HalfInt(-5)
        assert p.min_ktype == HalfInt(1)
        assert p.levi_tag == "SO(4,2)xSO(0,2)"

    def test_lambda_positive(self):
        with pytest.raises(InvalidParameterError, match="lambda"):
            make_fj_param(4, 4, HalfInt(0))
        with pytest.raises(InvalidParameterError):
            make_fj_param(4, 4, HalfInt(-1))

    def test_four_six(self):
        p = make_fj_param(4, 6, HalfInt(2))
        assert p.degree == 0
        assert p.decay_exponent == HalfInt(-6)

    def test_non_integral_degree_rejected(self):
        with pytest.raises(InvalidParameterError, match="degree"):
            make_fj_param(4, 6, H(1))  # a = -3/2
        with pytest.raises(InvalidParameterError, match="degree"):
            make_fj_param(5, 4, HalfInt(2))  # a = 3/2

    def test_negative_degree_rejected(self):
        with pytest.raises(InvalidParameterError, match="degree"):
            make_fj_param(4, 6, HalfInt(1))  # a = -1

    def test_standing_assumption(self):
        with pytest.raises(InvalidParameterError):
            make_fj_param(3, 4, HalfInt(2))

    def test_min_ktype_equals_degree(self):
        for p in (4, 5, 6):
            for q in (4, 5, 6):
                for tag in SpaceTag:
                    for lam in valid_lambdas(p, q, tag):
                        param = make_fj_param(p, q, lam, tag)
                        assert param.min_ktype == param.degree

    def test_subgroup_tags_shift_signature(self):
        p = make_fj_param(4, 4, H(5), SpaceTag.G1_SPACE)
        assert p.space_signature == (3, 4)
        assert p.degree == 1
        p = make_fj_param(4, 4, H(3), SpaceTag.G2_SPACE)
        assert p.space_signature == (4, 3)
        assert p.degree == 1


class TestEval:
    def test_t_zero_reduces_to_harmonic(self):
        param = make_fj_param(4, 4, HalfInt(2))
        zonal = ZonalHarmonic(1, 4)
        rng = np.random.default_rng(1)
        for _ in range(10):
            v = rng.normal(size=4)
            v /= np.linalg.norm(v)
            assert fj_eval(param, v, 0.0) == pytest.approx(zonal.value(v), rel=1e-13, abs=1e-13)

    def test_pole_value(self):
        param = make_fj_param(4, 4, HalfInt(2))
        pole = np.array([0.0, 0.0, 0.0, 1.0])
        assert fj_eval(param, pole, 1.0) == pytest.approx(2.0 * math.cosh(1.0) ** -5, rel=1e-13)

    def test_degree_zero_constant_in_sphere(self):
        param = make_fj_param(4, 6, HalfInt(2))
        rng = np.random.default_rng(2)
        vals = set()
        for _ in range(5):
            v = rng.normal(size=6)
            v /= np.linalg.norm(v)
            vals.add(round(fj_eval(param, v, 0.7), 12))
        assert len(vals) == 1


class TestL2Norm:
    def test_factored_value(self):
        # oracle: area(S^3) * |f_1|^2_{S^3} * R(3, -7) = 2pi^2 * 2pi^2 / 12
        param = make_fj_param(4, 4, HalfInt(2))
        assert l2_norm_sq(param) == pytest.approx(math.pi**4 / 3.0, rel=1e-10)

    def test_finite_on_lambda_grid(self):
        # lambda in {1/2, 1, ..., 4} restricted to integral degree
        for p, q in ((4, 4), (5, 4), (4, 5), (5, 5)):
            for twice in range(1, 9):
                lam = H(twice)
                try:
                    param = make_fj_param(p, q, lam)
                except InvalidParameterError:
                    continue
                value = l2_norm_sq(param)
                assert math.isfinite(value) and value > 0

    def test_truncation_cauchy(self):
        # radial truncations settle; final step below 1e-7 relative
        for lam_twice in (2, 4, 6):
            param = make_fj_param(4, 4, H(lam_twice))
            c_exp = float(3 + 2 * param.decay_exponent)
            vals = [radial_integral_truncated(3, c_exp, t) for t in (5, 10, 20)]
            d1, d2 = abs(vals[1] - vals[0]), abs(vals[2] - vals[1])
            assert d2 < 0.1 * max(d1, 1e-300)
            assert d2 <= 1e-7 * abs(vals[2])

    def test_lambda_zero_breaks_radial_precondition(self):
        # at lambda = 0 the radial exponents sum to zero and convergence fails
        e_at_zero = 1 - (4 + 4) // 2
        with pytest.raises(DivergenceError):
            radial_integral_closed(3, 3 + 2 * e_at_zero)


class TestInfChar:
    def test_ambient_display(self):
        param = make_fj_param(4, 4, HalfInt(2))
        assert [e.twice for e in inf_char(param).entries] == [12, 6, 4, 2]

    def test_subgroup_display(self):
        param = make_fj_param(4, 4, H(5), SpaceTag.G1_SPACE)
        assert [str(e) for e in inf_char(param).entries] == ["6", "5/2", "3/2"]

    def test_odd_total_length(self):
        param = make_fj_param(5, 4, H(3))
        entries = inf_char(param).entries
        assert len(entries) == 4
        assert entries[0] == HalfInt(6)

    def test_regularity_enforced(self):
        with pytest.raises(InvalidParameterError):
            InfChar((HalfInt(2), HalfInt(2)))
        with pytest.raises(InvalidParameterError):
            InfChar((HalfInt(1), HalfInt(2)))


class TestSelfDual:
    def test_even_total_example(self):
        assert is_self_dual(make_fj_param(4, 4, HalfInt(2)))

    def test_odd_total_example(self):
        assert is_self_dual(make_fj_param(4, 5, H(3)))

    def test_full_valid_grid(self):
        for p in (4, 5, 6):
            for q in (4, 5, 6):
                for lam in valid_lambdas(p, q, max_twice=6):
                    assert is_self_dual(make_fj_param(p, q, lam)), (p, q, lam)


class TestDecay:
    def test_bound_and_slope(self):
        rng = np.random.default_rng(17)
        for p, q, lam in ((4, 4, HalfInt(2)), (4, 6, HalfInt(3)), (5, 5, HalfInt(1))):
            param = make_fj_param(p, q, lam)
            rate = -float(param.decay_exponent)
            zonal = ZonalHarmonic(param.degree, q)
            grid = np.linspace(-1, 1, 2001)
            c_const = 2.0**rate * float(np.max(np.abs(zonal.value_at_cos(grid))))
            for _ in range(100):
                v = rng.normal(size=q)
                v /= np.linalg.norm(v)
                t = rng.uniform(1.0, 10.0)
                assert abs(fj_eval(param, v, t)) <= c_const * math.exp(-rate * t) + 1e-12
            ts = np.linspace(2, 10, 64)
            pole = np.zeros(q)
            pole[-1] = 1.0
            slope = np.polyfit(ts, np.log(np.abs(fj_eval(param, pole, ts))), 1)[0]
            assert abs(slope + rate) / rate < 0.02


class TestSerialization:
    def test_json_dict_fields(self):
        payload = make_fj_param(4, 4, HalfInt(2)).to_json_dict()
        assert payload["p"] == 4
        assert payload["lambda_x2"] == 4
        assert payload["a"] == 1
        assert payload["exponent_x2"] == -10
        assert payload["min_ktype_x2"] == 2
        assert payload["inf_char_x2"] == [12, 6, 4, 2]
        assert payload["self_dual"] is True
        assert payload["l2_norm_sq"] == pytest.approx(math.pi**4 / 3.0, rel=1e-9)
