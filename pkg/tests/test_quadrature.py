import math
import random

import numpy as np
import pytest

from grusskit import instances
from grusskit.errors import DegenerateCell, DomainError
from grusskit.funcrep import PiecewiseFunction, RegularityCertificate
from grusskit.functionals import cheby_T
from grusskit.quadrature import (Partition, adaptive_quadrature, composite_S,
                                 oscillation_v, remainder_bound_holder,
                                 remainder_bound_osc)
from grusskit.stieltjes import rs_product_integral


class TestPartition:
    def test_uniform_hits_endpoints(self):
        p = Partition.uniform(-0.5817873439132004, 1.3039309513856616, 7)
        assert p.points[0] == -0.5817873439132004
        assert p.points[-1] == 1.3039309513856616
        assert p.n == 7

    def test_mesh(self):
        p = Partition((0.0, 0.25, 1.0))
        assert p.mesh == pytest.approx(0.75)
        assert p.widths == pytest.approx((0.25, 0.75))

    def test_invalid(self):
        with pytest.raises(DomainError):
            Partition((0.0,))
        with pytest.raises(DomainError):
            Partition((0.0, 0.0, 1.0))


class TestOscillation:
    def test_linear(self, ident):
        assert oscillation_v(ident, Partition.uniform(0, 1, 4)) \
            == pytest.approx(0.25, abs=1e-10)

    def test_constant(self, one):
        assert oscillation_v(one, Partition.uniform(0, 1, 4)) \
            == pytest.approx(0.0, abs=1e-10)

    def test_square_two_cells(self, tsq):
        assert oscillation_v(tsq, Partition.uniform(0, 1, 2)) \
            == pytest.approx(0.75, abs=1e-10)


class TestCompositeRule:
    def test_two_cell_value(self, ident):
        s = composite_S(ident, ident, ident, Partition.uniform(0, 1, 2))
        assert s == pytest.approx(5 / 16, abs=1e-12)

    def test_single_cell_matches_functional_identity(self, ident, tsq,
                                                     u_jump):
        for u in (tsq, u_jump):
            part = Partition((0.0, 1.0))
            s1 = composite_S(ident, tsq, u, part)
            exact = rs_product_integral([ident, tsq], u).value
            span = u(1.0) - u(0.0)
            t_val = cheby_T(ident, tsq, u).value
            assert exact - s1 == pytest.approx(span * t_val, abs=1e-10)

    def test_constant_second_factor_is_exact(self, ident, one, tsq):
        part = Partition.uniform(0, 1, 3)
        s = composite_S(ident, one, tsq, part)
        exact = rs_product_integral([ident, one], tsq).value
        assert s == pytest.approx(exact, abs=1e-12)

    def test_remainder_decomposes_over_cells(self, ident, tsq):
        part = Partition.uniform(0, 1, 4)
        exact = rs_product_integral([ident, tsq], tsq).value
        s = composite_S(ident, tsq, tsq, part)
        decomposed = 0.0
        for lo, hi in part.cells():
            fr = ident.restrict(lo, hi)
            gr = tsq.restrict(lo, hi)
            ur = tsq.restrict(lo, hi)
            span = ur(hi) - ur(lo)
            decomposed += span * cheby_T(fr, gr, ur).value
        assert exact - s == pytest.approx(decomposed, abs=1e-10)

    def test_degenerate_cell_detected(self, ident, vee):
        # u rises then falls back: equal endpoint values on [0, 1]
        with pytest.raises(DegenerateCell):
            composite_S(ident, ident, vee, Partition((0.0, 1.0)))
        with pytest.raises(DegenerateCell):
            remainder_bound_osc(ident, ident, vee, Partition((0.0, 1.0)))

    def test_flat_integrator_cell_skipped(self, ident):
        u = PiecewiseFunction.build((0.0, 0.5, 1.0), ((0.0,), (-1.0, 2.0)))
        s = composite_S(ident, ident, u, Partition((0.0, 0.5, 1.0)))
        exact = rs_product_integral([ident, ident], u).value
        assert abs(exact - s) <= remainder_bound_osc(
            ident, ident, u, Partition((0.0, 0.5, 1.0))).stated + 1e-10


class TestRemainderBounds:
    def test_single_cell_sharpness(self, ident, u_jump):
        part = Partition((0.0, 1.0))
        exact = rs_product_integral([ident, ident], u_jump).value
        s1 = composite_S(ident, ident, u_jump, part)
        rb = remainder_bound_osc(ident, ident, u_jump, part)
        assert abs(exact - s1) == pytest.approx(0.5, abs=1e-12)
        assert rb.stated == pytest.approx(0.5, abs=1e-9)
        assert abs(exact - s1) / rb.stated == pytest.approx(1.0, abs=1e-9)

    def test_constant_factor_gives_zero_bound(self, ident, one, tsq):
        rb = remainder_bound_osc(ident, one, tsq, Partition.uniform(0, 1, 4))
        assert rb.stated == pytest.approx(0.0, abs=1e-9)

    def test_tight_below_stated(self, ident, tsq):
        rng = random.Random(41)
        for _ in range(20):
            a, b = instances.rand_interval(rng)
            f = instances.rand_continuous(rng, a, b)
            g = instances.rand_continuous(rng, a, b)
            u = instances.ensure_span(
                rng, lambda: instances.rand_monotone(rng, a, b))
            part = Partition.uniform(a, b, rng.randint(1, 5))
            rb = remainder_bound_osc(f, g, u, part)
            assert rb.tight <= rb.stated + 1e-9 * (1.0 + rb.stated)

    def test_holder_form_matches_oscillation_for_lines(self, ident, u_jump):
        part = Partition.uniform(0, 1, 4)
        osc = remainder_bound_osc(ident, ident, u_jump, part)
        hold = remainder_bound_holder(ident, ident, u_jump, part,
                                      RegularityCertificate.holder(1.0, 1.0))
        assert hold.stated == pytest.approx(osc.stated, rel=1e-9)

    def test_constant_function_zero_bound(self, one, ident):
        rb = remainder_bound_holder(one, ident, ident,
                                    Partition.uniform(0, 1, 4),
                                    RegularityCertificate.holder(0.0, 1.0))
        assert rb.stated == pytest.approx(0.0, abs=1e-10)


class TestSoundness:
    def test_randomised(self):
        rng = random.Random(42)
        for _ in range(60):
            a, b = instances.rand_interval(rng)
            f = instances.rand_continuous(rng, a, b)
            g = instances.rand_continuous(rng, a, b)
            u = instances.ensure_span(
                rng, lambda: instances.rand_monotone(rng, a, b))
            part = Partition.uniform(a, b, rng.randint(1, 6))
            exact = rs_product_integral([f, g], u).value
            approx = composite_S(f, g, u, part)
            rb = remainder_bound_osc(f, g, u, part)
            assert abs(exact - approx) <= rb.tight + 1e-9 * (1.0 + rb.tight)


class TestAdaptive:
    def test_constant_second_factor_converges_immediately(self, ident, one):
        res = adaptive_quadrature(ident, one, ident, tol=1e-12)
        assert res.partition.n == 1
        assert res.tight_bound <= 1e-12

    def test_smooth_target(self, ident):
        res = adaptive_quadrature(ident, ident, ident, tol=1e-4)
        assert abs(res.value - 1 / 3) <= 1e-4
        assert res.tight_bound <= 1e-4

    def test_jump_integrator_target(self, ident):
        u = PiecewiseFunction((0.0, 0.5, 1.0), ((0.0, 1.0), (1.0, 1.0)),
                              (0.0, 0.5, 2.0))
        res = adaptive_quadrature(ident, ident, u, tol=1e-6)
        assert abs(res.value - (1 / 3 + 0.25)) <= 1e-6

    def test_monotone_refinement_of_tight_bound(self, ident, tsq):
        bounds = []
        for tol in (1e-2, 1e-3, 1e-4):
            res = adaptive_quadrature(ident, ident, tsq, tol=tol)
            bounds.append(res.tight_bound)
        assert bounds[0] >= bounds[1] >= bounds[2]

    def test_bisecting_worst_cell_never_raises_tight_bound(self, ident, tsq):
        cubic = PiecewiseFunction.from_coeffs((0.0, 1.0, 0.0, 1.0), 0.0, 1.0)
        for u in (tsq, cubic):
            points = [0.0, 1.0]
            prev = remainder_bound_osc(ident, ident, u,
                                       Partition(tuple(points))).tight
            for _ in range(6):
                part = Partition(tuple(points))
                rb = remainder_bound_osc(ident, ident, u, part)
                worst = max(range(part.n), key=lambda i: rb.per_cell[i])
                lo, hi = part.cells()[worst]
                points.append(0.5 * (lo + hi))
                points.sort()
                cur = remainder_bound_osc(ident, ident, u,
                                          Partition(tuple(points))).tight
                assert cur <= prev * (1.0 + 1e-9)
                prev = cur

    def test_bad_tolerance(self, ident):
        with pytest.raises(DomainError):
            adaptive_quadrature(ident, ident, ident, tol=0.0)

    def test_result_converts_to_certified_integral(self, ident):
        res = adaptive_quadrature(ident, ident, ident, tol=1e-5)
        enclosure = res.as_integral()
        assert enclosure.method == "refined"
        assert abs(enclosure.value - 1 / 3) <= enclosure.abs_error

    def test_interior_plateau_cells_freeze(self, ident):
        # u climbs on [0, 0.4], is flat on [0.4, 0.6], climbs again
        u = PiecewiseFunction.build(
            (0.0, 0.4, 0.6, 1.0),
            ((0.0, 1.0), (0.4,), (-0.2, 1.0)))
        res = adaptive_quadrature(ident, ident, u, tol=1e-6)
        exact = rs_product_integral([ident, ident], u).value
        assert abs(res.value - exact) <= 1e-6


class TestConvergenceRate:
    @pytest.mark.parametrize("r", [0.5, 1.0])
    def test_holder_bound_rate(self, r, ident):
        if r == 1.0:
            f = ident
            cert = RegularityCertificate.holder(1.0, 1.0)
        else:
            # chordal interpolant of sqrt: genuinely (1, 1/2)-Holder
            nodes = [(k / 16) ** 2 for k in range(17)]
            bps, pieces = [0.0], []
            for lo, hi in zip(nodes, nodes[1:]):
                slope = (math.sqrt(hi) - math.sqrt(lo)) / (hi - lo)
                pieces.append((math.sqrt(lo) - slope * lo, slope))
                bps.append(hi)
            f = PiecewiseFunction.build(bps, pieces)
            cert = RegularityCertificate.holder(1.0, 0.5)
        g = ident
        u = ident
        meshes, bounds = [], []
        n = 4
        while n <= 256:
            part = Partition.uniform(0.0, 1.0, n)
            rb = remainder_bound_holder(f, g, u, part, cert)
            meshes.append(part.mesh)
            bounds.append(rb.stated)
            n *= 2
        slope = np.polyfit(np.log(meshes), np.log(bounds), 1)[0]
        assert slope >= r - 0.1
