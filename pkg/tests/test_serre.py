from fractions import Fraction as F

import pytest

from bundlecalc import (
    ChernData,
    DomainError,
    PlaneLineBundle,
    SerrePlan,
    alpha_of_curve,
    check_assumptions,
    h0_plane,
    plan,
    tensor,
)
from bundlecalc.serre import twisted_c2


class TestH0:
    def test_examples(self):
        assert h0_plane(0) == 1
        assert h0_plane(3) == 10
        assert h0_plane(-1) == 0
        assert h0_plane(2) == 6


class TestPlan:
    def test_m_degree_one(self):
        p = plan(PlaneLineBundle(1))
        assert (p.n, p.q_degree, p.h0_QM, p.lz_min, p.c2_min) == (1, 2, 10, 11, 11)

    def test_negative_twist(self):
        p = plan(PlaneLineBundle(-5))
        assert (p.n, p.h0_QM, p.lz_min, p.c2_min) == (1, 0, 1, 1)

    def test_floor_dominates(self):
        p = plan(PlaneLineBundle(0), 100)
        assert (p.n, p.h0_QM, p.lz_min, p.c2_min) == (1, 6, 7, 100)

    def test_large_twist_degree(self):
        p = plan(PlaneLineBundle(10))
        assert p.q_degree == 12 and p.q_degree > 10

    def test_all_conditions_hold_on_range(self):
        for m_deg in range(-20, 21):
            m = PlaneLineBundle(m_deg)
            conditions = check_assumptions(plan(m), m)
            assert all(holds for _, holds in conditions), m_deg

    def test_minimality_on_range(self):
        for m_deg in range(-20, 21):
            p = plan(PlaneLineBundle(m_deg))
            n_dec = p.n - 1
            assert not (n_dec >= 1 and 2 * n_dec > m_deg and h0_plane(2 * n_dec) > 0)
            assert not (p.lz_min - 1 > h0_plane(p.q_degree + m_deg))


class TestAlphaOfCurve:
    def test_examples(self):
        assert alpha_of_curve(4).c2_min == 11        # M = O(1)
        assert alpha_of_curve(3).lz_min == 7         # M = O(0)
        assert alpha_of_curve(1).lz_min == 2         # M = O(-2), h0(0) = 1
        with pytest.raises(DomainError):
            alpha_of_curve(0)


class TestCheckAssumptions:
    def test_recheck_is_from_scratch(self):
        honest = plan(PlaneLineBundle(1))
        tampered = SerrePlan(
            n=honest.n,
            q_degree=honest.q_degree,
            h0_QM=honest.h0_QM,
            lz_min=honest.h0_QM,  # no longer exceeds h0(Q x M)
            c2_min=honest.h0_QM,
            stability_floor=0,
        )
        conditions = dict(check_assumptions(tampered, PlaneLineBundle(1)))
        assert conditions["cycle_length_exceeds_h0_QM"] is False
        assert conditions["h0_Q_positive"] is True
        assert conditions["deg_Q_exceeds_deg_M"] is True


class TestTwist:
    def test_twist_consistency_via_tensor_calculus(self):
        for m_deg in range(-6, 7):
            p = plan(PlaneLineBundle(m_deg))
            for c2 in (p.lz_min, p.c2_min + 3):
                assert twisted_c2(p, c2) == c2 - p.n * p.n

    def test_twist_matches_direct_tensor(self):
        p = plan(PlaneLineBundle(1))
        n, c = p.n, p.c2_min
        e = ChernData(2, F(2 * n), F(4 * n * n), F(c))
        line = ChernData(1, F(-n), F(n * n))
        assert tensor(e, line, F(-2 * n * n)).c2 == twisted_c2(p, c)
