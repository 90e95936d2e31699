"""Skeleton structure, enumeration, signatures, genus, golden comparison."""

import pytest

from burausieve.golden import GOLDEN_ROWS, self_check
from burausieve.skeleton import (
    EnumerationCapExceeded,
    Skeleton,
    SkeletonSignature,
    UniversalGroupSpec,
    enumerate_universal,
    euler_lhs,
    genus,
    signature,
    skeleton_isomorphic,
    table_verify,
    verify_distinct_lemma,
    verify_region_widths,
)
from burausieve.typesys import root_spec


def golden_row(p, N):
    for row in GOLDEN_ROWS:
        if row.p == p and row.N == N:
            return row
    raise LookupError


def enumerate_row(p, N, tag="I", ambient="bu3", factor=0):
    row = golden_row(p, N)
    root = root_spec(row.p, row.factors[factor])
    return enumerate_universal(UniversalGroupSpec(root, tag, ambient))


class TestSkeletonStructure:
    def test_rejects_black_of_order_two(self):
        with pytest.raises(ValueError):
            Skeleton((1, 0), (1, 0))

    def test_rejects_white_of_order_three(self):
        with pytest.raises(ValueError):
            Skeleton((1, 2, 0), (1, 2, 0))

    def test_rejects_disconnected(self):
        with pytest.raises(ValueError):
            Skeleton((0, 1), (0, 1))

    def test_rejects_wrong_region_permutation(self):
        with pytest.raises(ValueError):
            Skeleton((0, 1), (1, 0), region=(0, 1))

    def test_region_composition_convention(self):
        sk = enumerate_row(2, 7)
        black_inv = [0] * sk.edge_count
        for i, j in enumerate(sk.black):
            black_inv[j] = i
        assert sk.region == tuple(sk.white[black_inv[i]] for i in range(sk.edge_count))

    def test_single_edge(self):
        sk = Skeleton.single_edge()
        assert str(signature(sk)) == "(1;1,1;1^1)"
        assert genus(sk) == 0


class TestSignatureAndGenus:
    def test_row_p19_n9(self):
        assert str(signature(enumerate_row(19, 9))) == "(20;0,2;1^2 9^2)"

    def test_row_p43_n7(self):
        assert str(signature(enumerate_row(43, 7))) == "(132;0,0;1^6 7^18)"

    def test_row_p13_n12(self):
        assert str(signature(enumerate_row(13, 12))) == "(14;0,2;1^2 12^1)"

    def test_widths_partition_edges(self):
        for p, N in ((2, 7), (5, 8), (19, 18)):
            sk = enumerate_row(p, N)
            assert sum(sk.region_widths()) == sk.edge_count

    def test_genus_zero_on_golden(self):
        for p, N in ((2, 7), (3, 8), (11, 10)):
            assert genus(enumerate_row(p, N)) == 0

    def test_b3_ambient_genus_positive_for_unstarred(self):
        assert genus(enumerate_row(19, 9, ambient="b3")) == 1
        assert genus(enumerate_row(5, 12, ambient="b3")) == 2

    def test_b3_edge_count_is_a_multiple(self):
        bu3 = enumerate_row(13, 12)
        b3 = enumerate_row(13, 12, ambient="b3")
        assert b3.edge_count == 3 * bu3.edge_count

    def test_b3_skeleton_covers_bu3_skeleton(self):
        # covering: edge count a multiple, genus never smaller
        for row in GOLDEN_ROWS:
            bu3 = enumerate_row(row.p, row.N)
            b3 = enumerate_row(row.p, row.N, ambient="b3")
            assert b3.edge_count % bu3.edge_count == 0
            assert b3.edge_count // bu3.edge_count in (1, 3)
            assert genus(b3) >= genus(bu3)


class TestEulerFormula:
    def test_row1_signature(self):
        sig = SkeletonSignature(9, 1, 0, (1, 1, 7))
        assert euler_lhs(sig, 7) == 12

    def test_row_p11_signature(self):
        sig = SkeletonSignature(24, 2, 0, (1, 1, 2, 10, 10))
        assert euler_lhs(sig, 10) == 12

    def test_regular_width7_only_is_not_flat(self):
        sig = SkeletonSignature(14, 0, 0, (7, 7))
        assert euler_lhs(sig, 7) == -2

    def test_equivalence_with_genus(self):
        for row in GOLDEN_ROWS:
            for ambient in ("bu3", "b3"):
                sk = enumerate_row(row.p, row.N, ambient=ambient)
                sig = signature(sk)
                assert (euler_lhs(sig, row.N) == 12) == (genus(sk) == 0)

    def test_rejects_overwide_regions(self):
        with pytest.raises(ValueError):
            euler_lhs(SkeletonSignature(8, 0, 0, (8,)), 7)


class TestWidthAndDistinctness:
    def test_golden_widths_divide_n(self):
        for p, N in ((2, 7), (19, 18), (37, 9)):
            assert verify_region_widths(enumerate_row(p, N), N)

    def test_synthetic_width_five_fails_for_seven(self):
        # one black trivalent vertex, two monovalent blacks, a pair of
        # white bonds: the single region has width 5, which does not
        # divide 7
        sk = Skeleton((1, 2, 0, 3, 4), (4, 1, 3, 2, 0))
        assert sk.region_widths() == [5]
        assert not verify_region_widths(sk, 7)
        assert verify_region_widths(sk, 10)

    def test_distinct_lemma_on_golden(self):
        for p, N in ((2, 7), (11, 10), (43, 7)):
            assert verify_distinct_lemma(enumerate_row(p, N), N)

    def test_distinct_lemma_fails_on_bare_skeleton(self):
        assert not verify_distinct_lemma(Skeleton.single_edge(), 7)

    def test_distinct_lemma_vacuous_on_regular_trivial(self):
        # two edges, no monovalent vertices impossible; use a golden
        # regular skeleton: all width-N regions and width-1 regions absent
        sk = enumerate_row(17, 8)
        assert verify_distinct_lemma(sk, 8)


class TestIsomorphism:
    def test_comma_partners_isomorphic(self):
        row = golden_row(2, 7)
        s1 = enumerate_row(2, 7, factor=0)
        s2 = enumerate_row(2, 7, factor=1)
        assert skeleton_isomorphic(s1, s2)

    def test_semicolon_groups_not_isomorphic(self):
        # p=11 N=10: four singleton groups
        s1 = enumerate_row(11, 10, factor=0)
        s2 = enumerate_row(11, 10, factor=1)
        assert signature(s1) == signature(s2)
        assert not skeleton_isomorphic(s1, s2)

    def test_self_isomorphic(self):
        sk = enumerate_row(3, 8)
        assert skeleton_isomorphic(sk, sk)


class TestEnumeration:
    def test_state_cap(self):
        root = root_spec(43, "t+4")
        with pytest.raises(EnumerationCapExceeded):
            enumerate_universal(UniversalGroupSpec(root, "I", "bu3"),
                                state_cap=10)

    def test_edge_count_formula(self):
        # e = (|k|^2 - 1) / M: the covector action is transitive here
        for row in GOLDEN_ROWS:
            root = root_spec(row.p, row.factors[0])
            sk = enumerate_universal(UniversalGroupSpec(root, "I", "bu3"))
            q = root.field.order
            assert sk.edge_count == (q * q - 1) // root.M == row.edges

    def test_deterministic(self):
        root = root_spec(19, "t+4")
        a = enumerate_universal(UniversalGroupSpec(root, "I", "bu3"))
        b = enumerate_universal(UniversalGroupSpec(root, "I", "bu3"))
        assert a.black == b.black and a.white == b.white


class TestGoldenTable:
    def test_self_check(self):
        assert self_check()

    def test_table_verify_all_rows(self):
        report = table_verify()
        assert report["ok"]
        assert len(report["rows"]) == 13
        for row in report["rows"]:
            assert row["ok"], row

    def test_table_verify_single_row(self):
        report = table_verify(rows=[1])
        assert report["ok"] and len(report["rows"]) == 1

    def test_table_verify_unknown_row(self):
        with pytest.raises(ValueError):
            table_verify(rows=[99])

    def test_star_classification(self):
        report = table_verify()
        for entry, row in zip(report["rows"], GOLDEN_ROWS):
            for fac in entry["factors"]:
                assert (fac["b3Genus"] == 0) == row.starred
