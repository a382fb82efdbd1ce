import math

import pytest

from grusskit.errors import DomainError, MalformedCertificate
from grusskit.funcrep import (PiecewiseFunction, RegularityCertificate,
                              eval_sided, inf_sup_on, p_norm, sup_norm_on,
                              total_variation, verify_certificate)


class TestEvalSided:
    def test_endpoint_jump_values(self, u_jump):
        assert eval_sided(u_jump, 0.0, "at") == -1.0
        assert eval_sided(u_jump, 0.5, "at") == 0.0
        assert eval_sided(u_jump, 1.0, "at") == 1.0
        assert eval_sided(u_jump, 0.0, "right") == 0.0
        assert eval_sided(u_jump, 1.0, "left") == 0.0

    def test_continuous_all_sides_agree(self, ident):
        assert eval_sided(ident, 0.3, "left") == pytest.approx(0.3)
        assert eval_sided(ident, 0.3, "right") == pytest.approx(0.3)
        assert eval_sided(ident, 0.3, "at") == pytest.approx(0.3)

    def test_domain_violations(self, ident):
        with pytest.raises(DomainError):
            eval_sided(ident, -0.1, "at")
        with pytest.raises(DomainError):
            eval_sided(ident, 0.0, "left")
        with pytest.raises(DomainError):
            eval_sided(ident, 1.0, "right")


class TestInfSup:
    def test_linear(self, ident):
        inf_e, sup_e = inf_sup_on(ident)
        assert inf_e.mid == pytest.approx(0.0, abs=1e-12)
        assert sup_e.mid == pytest.approx(1.0)

    def test_quadratic_interior_max(self):
        f = PiecewiseFunction.from_coeffs((0.0, 1.0, -1.0), 0.0, 1.0)
        _, sup_e = inf_sup_on(f)
        assert sup_e.mid == pytest.approx(0.25)

    def test_step_levels(self, pm_step):
        inf_e, sup_e = inf_sup_on(pm_step)
        assert inf_e.mid == pytest.approx(-1.0)
        assert sup_e.mid == pytest.approx(1.0)

    def test_window(self, tsq):
        _, sup_e = inf_sup_on(tsq, 0.0, 0.5)
        assert sup_e.mid == pytest.approx(0.25)


class TestSupNorm:
    def test_centred_line(self, centred_line):
        assert sup_norm_on(centred_line).mid == pytest.approx(0.5)

    def test_zero(self, zero):
        assert sup_norm_on(zero).mid == pytest.approx(0.0, abs=1e-12)

    def test_square(self, tsq):
        assert sup_norm_on(tsq).mid == pytest.approx(1.0)

    def test_scalar_homogeneous(self, tsq):
        assert sup_norm_on(tsq * -3.0).mid == pytest.approx(3.0)


class TestTotalVariation:
    def test_pure_jump_integrator(self, u_jump):
        assert total_variation(u_jump).mid == pytest.approx(2.0)

    def test_monotone_linear(self, ident):
        assert total_variation(ident).mid == pytest.approx(1.0)

    def test_rise_and_fall(self):
        f = PiecewiseFunction.from_coeffs((0.0, 1.0, -1.0), 0.0, 1.0)
        assert total_variation(f).mid == pytest.approx(0.5)

    def test_additive_over_adjacent_windows(self, vee, u_jump):
        for f in (vee, u_jump):
            whole = total_variation(f)
            left = total_variation(f, 0.0, 0.375)
            right = total_variation(f, 0.375, 1.0)
            assert left.mid + right.mid == pytest.approx(
                whole.mid, abs=left.rad + right.rad + whole.rad)

    def test_monotone_equals_endpoint_gap(self, step_at_mid):
        assert total_variation(step_at_mid).mid == pytest.approx(1.0)


class TestCertificates:
    def test_lipschitz_pass(self, ident):
        assert verify_certificate(
            ident, RegularityCertificate.lipschitz(1.0)).ok

    def test_bounds_pass(self, ident):
        assert verify_certificate(
            ident, RegularityCertificate.bounds(0.0, 1.0)).ok

    def test_step_breaks_lipschitz(self, pm_step):
        chk = verify_certificate(pm_step,
                                 RegularityCertificate.lipschitz(1e6))
        assert not chk.ok
        assert chk.witness == pytest.approx(0.5)

    def test_bounds_fail_with_witness(self, tsq):
        chk = verify_certificate(tsq, RegularityCertificate.bounds(0.0, 0.5))
        assert not chk.ok
        assert chk.witness == pytest.approx(1.0)

    def test_bounds_iff_range_contained(self, tsq):
        inf_e, sup_e = inf_sup_on(tsq)
        good = RegularityCertificate.bounds(inf_e.lo, sup_e.hi)
        assert verify_certificate(tsq, good).ok

    def test_monotone(self, ident, step_at_mid):
        mono = RegularityCertificate.monotone()
        assert verify_certificate(ident, mono).ok
        assert verify_certificate(step_at_mid, mono).ok
        down = PiecewiseFunction.from_coeffs((1.0, -1.0), 0.0, 1.0)
        assert not verify_certificate(down, mono).ok

    def test_bv(self, u_jump):
        assert verify_certificate(
            u_jump, RegularityCertificate.bounded_variation(2.0)).ok
        assert not verify_certificate(
            u_jump, RegularityCertificate.bounded_variation(1.5)).ok

    def test_holder_fractional_sampling(self):
        f = PiecewiseFunction.from_coeffs((0.0, 1.0), 0.0, 1.0)
        assert verify_certificate(
            f, RegularityCertificate.holder(1.0, 0.5), holder_grid=64).ok
        steep = PiecewiseFunction.from_coeffs((0.0, 10.0), 0.0, 1.0)
        assert not verify_certificate(
            steep, RegularityCertificate.holder(1.0, 0.5),
            holder_grid=64).ok

    def test_malformed(self):
        with pytest.raises(MalformedCertificate):
            RegularityCertificate.bounds(1.0, 0.0)
        with pytest.raises(MalformedCertificate):
            RegularityCertificate.holder(1.0, 0.0)
        with pytest.raises(MalformedCertificate):
            RegularityCertificate.lipschitz(-1.0)


class TestPNorm:
    def test_unit_step_every_p(self, pm_step):
        for p in (1.0, 2.0, 3.5, math.inf):
            assert p_norm(pm_step, p).mid == pytest.approx(1.0, abs=1e-9)

    def test_zero(self, zero):
        assert p_norm(zero, 2.0).mid == pytest.approx(0.0, abs=1e-12)

    def test_line_l2(self, ident):
        assert p_norm(ident, 2.0).mid == pytest.approx(1 / math.sqrt(3))

    def test_p_below_one_rejected(self, ident):
        with pytest.raises(DomainError):
            p_norm(ident, 0.5)

    def test_normalised_monotone_in_p(self, vee):
        # on |f| <= 1 the normalised p-norms increase with p
        norms = [p_norm(vee, p).mid / 1.0 ** (1 / p)
                 for p in (1.0, 2.0, 4.0, 8.0)]
        assert all(x <= y + 1e-12 for x, y in zip(norms, norms[1:]))


class TestConstruction:
    def test_degree_cap_enforced(self):
        with pytest.raises(DomainError):
            PiecewiseFunction.build((0.0, 1.0), (tuple(range(10)),))

    def test_breakpoints_must_increase(self):
        with pytest.raises(DomainError):
            PiecewiseFunction.build((0.0, 0.0, 1.0), ((1.0,), (2.0,)))

    def test_default_values_follow_limits(self):
        f = PiecewiseFunction.build((0.0, 0.5, 1.0), ((0.0,), (1.0,)))
        assert f(0.5) == 1.0  # right limit by default
        assert f.left_limit(0.5) == 0.0

    def test_restrict_keeps_values(self, u_jump):
        g = u_jump.restrict(0.0, 0.5)
        assert g(0.0) == -1.0
        assert g(0.5) == 0.0

    def test_antiderivative_is_continuous(self, pm_step):
        F = pm_step.antiderivative()
        assert F.is_continuous()
        assert F(1.0) == pytest.approx(0.0, abs=1e-12)

    def test_algebra(self, ident, tsq):
        h = ident + tsq
        assert h(0.5) == pytest.approx(0.75)
        assert (ident - ident)(0.3) == pytest.approx(0.0)
        assert (ident * tsq)(0.5) == pytest.approx(0.125)
        assert (2.0 * ident)(0.25) == pytest.approx(0.5)
