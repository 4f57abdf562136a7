import pytest

import strata as st
from strata.errors import OutOfRange
from support import enumerate_signatures


def sig(g, orders):
    return st.StratumSignature(g, tuple(orders))


def least_class_size(g, extra):
    # independent form of the bound: least n with n(n-3)/2 >= 2g + extra - 2
    target = 2 * g + extra - 2
    n = 1
    while n * (n - 3) < 2 * target:
        n += 1
    return n


class TestAMin:
    def test_genus_two_no_secondary(self):
        assert st.a_min(2, 0) == 5

    def test_genus_five_two_secondary(self):
        assert st.a_min(5, 2) == 7

    def test_genus_three_two_secondary(self):
        assert st.a_min(3, 2) == 6

    def test_matches_quadratic_characterization(self):
        for g in range(2, 20):
            for b in range(0, 20):
                assert st.a_min(g, b) == least_class_size(g, max(b, 1))

    def test_zero_secondary_uses_one_face(self):
        for g in range(2, 30):
            assert st.a_min(g, 0) == st.point_bound(g, 1)

    def test_genus_below_two_rejected(self):
        with pytest.raises(OutOfRange):
            st.a_min(1, 0)
        with pytest.raises(OutOfRange):
            st.a_min(2, -1)


class TestCascade:
    def test_vacuous(self):
        assert st.gen2_cascade_ok(2, [])

    def test_single_class_passes(self):
        assert st.gen2_cascade_ok(2, [5])

    def test_single_class_fails(self):
        assert not st.gen2_cascade_ok(5, [2])

    def test_tail_sums_matter(self):
        # the same class size can pass late in the cascade and fail early
        assert st.gen2_cascade_ok(2, [4])
        assert not st.gen2_cascade_ok(2, [4, 4])


class TestHy2:
    def test_flagship_stratum(self):
        assert st.satisfies_hy2(sig(5, (1,) * 12 + (2, 2)))

    def test_no_equal_pair(self):
        assert not st.satisfies_hy2(sig(4, (1,) * 10 + (2,)))

    def test_principal_stratum(self):
        assert not st.satisfies_hy2(sig(2, (1, 1, 1, 1)))

    def test_odd_simple_zero_count(self):
        # 2n must be even: nine simple zeros cannot satisfy the shape
        assert not st.satisfies_hy2(sig(4, (1,) * 9 + (2, 2) + (-1,)))


class TestMainTheorem:
    def test_flagship_stratum(self):
        assert st.satisfies_main_theorem(sig(5, (1,) * 12 + (2, 2)))

    def test_large_single_order_blocks(self):
        assert not st.satisfies_main_theorem(sig(10, (1,) * 16 + (20,)))

    def test_no_higher_orders(self):
        assert not st.satisfies_main_theorem(sig(3, (1,) * 8))

    def test_odd_higher_order_blocks(self):
        assert not st.satisfies_main_theorem(sig(5, (1,) * 11 + (2, 3)))


class TestNullProp:
    def test_flagship_stratum(self):
        assert st.satisfies_null_prop(sig(5, (1,) * 12 + (2, 2)))

    def test_genus_two_excluded(self):
        assert not st.satisfies_null_prop(sig(2, (1, 1, 1, 1)))

    def test_bound_is_weaker_than_main(self):
        # ten simple zeros: above g+4=9 but not above g+5=10
        s = sig(5, (1,) * 10 + (2, 2, 2))
        assert st.satisfies_null_prop(s)
        assert not st.satisfies_main_theorem(s)


class TestHypothesisChain:
    def test_monotone_chain_and_connectivity(self):
        for g in range(2, 7):
            for s in enumerate_signatures(g, max_poles=2):
                if st.is_empty(s):
                    continue
                if st.satisfies_main_theorem(s):
                    assert st.satisfies_null_prop(s)
                    report = st.connectivity(s)
                    assert report.component_count == 1
                    assert report.reason == "c1-theorem"
                if st.satisfies_null_prop(s):
                    rest = [k for k in s.orders if k != 1]
                    assert rest and all(k > 0 and k % 2 == 0 for k in rest)
                    assert len(rest) != len(set(rest))
