"""Order bookkeeping, admissible types, type vectors, lifting conditions."""

import pytest

from burausieve.exactalg import element_order
from burausieve.golden import GOLDEN_ROWS
from burausieve.skeleton import Skeleton
from burausieve.typesys import (
    admissible_types,
    check_type_specification,
    epsilon_p,
    k_threshold,
    root_spec,
    type_ii_odd_width_excluded,
    type_vector,
)


class TestEpsilon:
    @pytest.mark.parametrize("n,p,want", [
        (7, 2, 7), (7, 5, 14), (10, 11, 5), (8, 3, 8), (12, 13, 12),
        (18, 19, 9), (9, 19, 18),
    ])
    def test_examples(self, n, p, want):
        assert epsilon_p(n, p) == want

    def test_involution(self):
        for n in range(1, 101):
            for p in (2, 3, 5, 0):
                assert epsilon_p(epsilon_p(n, p), p) == n

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            epsilon_p(0, 5)


class TestThreshold:
    @pytest.mark.parametrize("n,want", [(7, 5), (8, 3), (9, 2), (10, 2), (11, 1),
                                        (26, 1)])
    def test_values(self, n, want):
        assert k_threshold(n) == want

    def test_rejects_small(self):
        with pytest.raises(ValueError):
            k_threshold(6)


class TestRootSpec:
    def test_orders_match_table(self):
        for row in GOLDEN_ROWS:
            for f in row.factors:
                r = root_spec(row.p, f)
                assert r.N == row.N
                assert r.M == epsilon_p(row.N, row.p)
                assert element_order(-r.xi) == r.N
                assert element_order(r.xi) == r.M

    def test_rejects_reducible(self):
        with pytest.raises(ValueError):
            root_spec(2, "t^2+1")


class TestAdmissibleTypes:
    def test_p2_n7(self):
        r = root_spec(2, "t^3+t+1")
        assert admissible_types(r) == frozenset({"I", "II", "IV"})

    def test_p19_n9(self):
        r = root_spec(19, "t+4")
        assert admissible_types(r) == frozenset({"I", "II", "III+", "III-"})

    def test_p3_n8(self):
        r = root_spec(3, "t^2+2t+2")
        assert admissible_types(r) == frozenset({"I", "II", "III3"})

    def test_type_ii_parity_flag(self):
        # p odd with M odd: an odd-width type II region is impossible
        assert type_ii_odd_width_excluded(root_spec(11, "t+2"))  # M = 5
        assert not type_ii_odd_width_excluded(root_spec(19, "t+4"))  # M = 18
        assert not type_ii_odd_width_excluded(root_spec(2, "t^3+t+1"))


class TestTypeVector:
    def test_type_i_is_e2(self):
        r = root_spec(2, "t^3+t+1")
        tv = type_vector("I", r)
        assert tv.a.is_zero
        assert tv.v == (r.field.zero(), r.field.one())

    def test_type_ii_value_in_f8(self):
        r = root_spec(2, "t^3+t+1")
        tv = type_vector("II", r)
        xi = r.xi
        assert tv.a == xi.inverse() * (xi + r.field.one())
        assert tv.a == xi * xi  # reduced form in this field

    def test_type_iv_exponent(self):
        r = root_spec(2, "t^3+t+1")  # M = 7
        tv = type_vector("IV", r)
        assert tv.a == r.xi ** 3

    def test_annihilator(self):
        for row in GOLDEN_ROWS:
            r = root_spec(row.p, row.factors[0])
            for tag in sorted(admissible_types(r)):
                tv = type_vector(tag, r)
                vp, v = tv.v_perp, tv.v
                assert vp[0] * v[0] + vp[1] * v[1] == r.field.zero()

    def test_iii_exponent_identity(self):
        # xi^(3(s+1)) = 1 since s = +-M/3 - 1
        r = root_spec(19, "t+4")  # M = 18
        for tag, s in (("III+", r.M // 3 - 1), ("III-", -(r.M // 3) - 1)):
            tv = type_vector(tag, r)
            assert tv.a == -(r.xi ** s)
            assert r.xi ** (3 * (s + 1)) == r.field.one()

    def test_inadmissible_rejected(self):
        r = root_spec(2, "t^3+t+1")
        with pytest.raises(ValueError):
            type_vector("III+", r)


class TestTypeSpecification:
    """The five lifting conditions, with values read in Z/depth.

    At depth zero the torsion equations 3*type(black) = 0 and
    2*type(white) = 0 hold in Z, so monovalent vertices force type zero
    (blacks) or are outright impossible (whites): the scalar-extended
    group has third roots of its central generator but no square roots.
    """

    def test_full_group_lift(self):
        # the one-edge skeleton with depth 2 describes the scalar-extended
        # group itself: region 1, black 0, white 1 sum to 2 = 0 in Z/2
        sk = Skeleton.single_edge()
        assert check_type_specification(sk, 2, [1], [0], [1], ambient="bu3")

    def test_braid_group_lift(self):
        # depth 6 with d = 6: types (1, 2, 3) sum to 6 = 0 in Z/6
        sk = Skeleton.single_edge()
        assert check_type_specification(sk, 6, [1], [2], [3], ambient="b3")

    def test_depth_zero_single_edge_fails_torsion(self):
        # 3*2 and 2*3 are nonzero in Z, so this pair lifts nothing
        sk = Skeleton.single_edge()
        assert not check_type_specification(sk, 0, [-5], [2], [3], ambient="bu3")

    def test_sum_violation(self):
        sk = Skeleton.single_edge()
        assert not check_type_specification(sk, 2, [1], [0], [0], ambient="bu3")

    def test_congruence_violation(self):
        sk = Skeleton.single_edge()
        # region type must match the width mod 2
        assert not check_type_specification(sk, 2, [0], [0], [1], ambient="bu3")

    def test_odd_depth_rejected(self):
        sk = Skeleton.single_edge()
        with pytest.raises(ValueError):
            check_type_specification(sk, 3, [1], [0], [1])

    def test_depth_not_multiple_of_d(self):
        sk = Skeleton.single_edge()
        assert not check_type_specification(sk, 2, [1], [2], [3], ambient="b3")

    def test_two_edge_skeleton(self):
        # two monovalent blacks joined through one bivalent white: a single
        # width-2 region, black types forced to 0 at depth 2
        sk = Skeleton((0, 1), (1, 0))
        assert check_type_specification(sk, 2, [2], [0, 0], [], ambient="bu3")
        assert not check_type_specification(sk, 2, [2], [0, 1], [], ambient="bu3")
