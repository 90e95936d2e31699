"""Fibered products, pairwise exclusion, and conjugacy to the e2 line."""

from burausieve.golden import GOLDEN_ROWS
from burausieve.intersect import (
    conjugate_to_e2,
    fibered_product,
    projective_orbit_of_e2,
    verify_addendum_pairwise,
)
from burausieve.skeleton import (
    Skeleton,
    UniversalGroupSpec,
    enumerate_universal,
    genus,
    signature,
    skeleton_isomorphic,
)
from burausieve.typesys import admissible_types, root_spec


def enumerate_pair(p, text, tag="I", ambient="bu3"):
    return enumerate_universal(UniversalGroupSpec(root_spec(p, text), tag, ambient))


ROW1 = enumerate_pair(2, "t^3+t+1")
ROW1B = enumerate_pair(2, "t^3+t^2+1")
ROW3 = enumerate_pair(3, "t^2+2t+2")


class TestFiberedProduct:
    def test_base_change_identity(self):
        fp = fibered_product(Skeleton.single_edge(), ROW1)
        assert len(fp.components) == 1
        assert signature(fp.components[0]) == signature(ROW1)

    def test_component_edges_partition(self):
        fp = fibered_product(ROW1, ROW3)
        assert sum(c.edge_count for c in fp.components) == fp.total_edges == 90

    def test_self_product_has_flat_diagonal(self):
        fp = fibered_product(ROW1, ROW1)
        assert any(c.edge_count == ROW1.edge_count and genus(c) == 0
                   for c in fp.components)

    def test_distinct_rows_exclude_each_other(self):
        assert fibered_product(ROW1, ROW3).min_genus() >= 1

    def test_comma_partners_share_a_flat_component(self):
        # t^3+t+1 and t^3+t^2+1 have isomorphic skeletons (reciprocal
        # roots), so the product contains a diagonal-type component of
        # genus zero: they act as one entry of the classification, not two
        assert skeleton_isomorphic(ROW1, ROW1B)
        fp = fibered_product(ROW1, ROW1B)
        assert fp.min_genus() == 0
        assert any(c.edge_count == ROW1.edge_count and genus(c) == 0
                   for c in fp.components)

    def test_same_row_distinct_groups_exclude_each_other(self):
        # p=11 N=10: t+2 and t+6 sit in different iso-classes
        s_a = enumerate_pair(11, "t+2")
        s_b = enumerate_pair(11, "t+6")
        assert not skeleton_isomorphic(s_a, s_b)
        assert fibered_product(s_a, s_b).min_genus() >= 1

    def test_genus_monotone_under_products(self):
        # components cover both factors, so genus never drops
        high = enumerate_pair(19, "t+4", ambient="b3")  # genus 1
        assert genus(high) == 1
        fp = fibered_product(high, ROW1)
        assert fp.min_genus() >= 1


class TestAddendumPairs:
    def test_three_row_sample(self):
        reps = []
        for row in GOLDEN_ROWS[:3]:
            reps.append((row.label, enumerate_pair(row.p, row.factors[0])))
        report = verify_addendum_pairwise(reps)
        assert report["ok"]
        assert len(report["pairs"]) == 3
        for pair in report["pairs"]:
            assert pair["minGenus"] >= 1


class TestConjugacy:
    def test_type_i_trivial(self):
        spec = UniversalGroupSpec(root_spec(2, "t^3+t+1"), "I", "bu3")
        assert conjugate_to_e2(spec)

    def test_realized_types_on_golden_rows(self):
        for row in GOLDEN_ROWS:
            root = root_spec(row.p, row.factors[0])
            for tag in sorted(admissible_types(root)):
                sk = enumerate_universal(UniversalGroupSpec(root, tag, "bu3"))
                if genus(sk) == 0:
                    assert conjugate_to_e2(UniversalGroupSpec(root, tag, "bu3"))

    def test_proper_orbit_negative_control(self):
        # at xi = 1 over F_5 the braid image fixes a 3-point orbit on the
        # projective line; the type II line falls outside it
        root = root_spec(5, "t-1")
        orbit = projective_orbit_of_e2(root.field)
        assert len(orbit) == 3
        assert not conjugate_to_e2(UniversalGroupSpec(root, "II", "bu3"))
        assert conjugate_to_e2(UniversalGroupSpec(root, "IV", "bu3"))
