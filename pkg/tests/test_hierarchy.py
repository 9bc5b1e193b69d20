import pytest

from proxigraph.errors import TargetOutOfRange
from proxigraph.geometry import PointSet, distance, emst
from proxigraph.hierarchy import Linkage, agglomerate

from .conftest import random_point_set


class TestSpecExamples:
    def test_single_linkage_chain(self):
        ps = PointSet.from_xy([(0, 0), (1, 0), (2, 0), (10, 0)])
        c, _ = agglomerate(ps, Linkage.SINGLE, 2)
        assert c.labels == (0, 0, 0, 1)

    def test_complete_linkage_pairs(self):
        ps = PointSet.from_xy([(0, 0), (1, 0), (9, 0), (10, 0)])
        c, _ = agglomerate(ps, Linkage.COMPLETE, 2)
        assert c.labels == (0, 0, 1, 1)

    def test_target_n_is_singletons(self):
        ps = PointSet.from_xy([(0, 0), (1, 0), (2, 0), (10, 0)])
        c, d = agglomerate(ps, Linkage.SINGLE, 4)
        assert c.labels == (0, 1, 2, 3)
        assert len(d.merges) == 3  # dendrogram still recorded to one cluster

    def test_target_one_is_everything(self, rnd):
        ps = random_point_set(rnd, 12)
        c, _ = agglomerate(ps, Linkage.COMPLETE, 1)
        assert set(c.labels) == {0}

    def test_target_out_of_range(self):
        ps = PointSet.from_xy([(0, 0), (1, 0)])
        with pytest.raises(TargetOutOfRange):
            agglomerate(ps, Linkage.SINGLE, 3)
        with pytest.raises(TargetOutOfRange):
            agglomerate(ps, Linkage.SINGLE, 0)


class TestDendrogram:
    def test_ids_and_count(self, rnd):
        n = 17
        ps = random_point_set(rnd, n)
        _, d = agglomerate(ps, Linkage.SINGLE, 1)
        assert d.n_leaves == n
        assert len(d.merges) == n - 1
        seen = set(range(n))
        for step, (a, b, dist) in enumerate(d.merges):
            assert a < b
            assert a in seen and b in seen
            seen -= {a, b}
            seen.add(n + step)
        assert seen == {2 * n - 2}

    def test_single_merge_distances_non_decreasing(self, rnd):
        for _ in range(10):
            ps = random_point_set(rnd, rnd.randint(2, 60))
            _, d = agglomerate(ps, Linkage.SINGLE, 1)
            dd = [m[2] for m in d.merges]
            assert all(a <= b for a, b in zip(dd, dd[1:]))

    def test_single_equals_emst_exactly(self, rnd):
        for _ in range(15):
            ps = random_point_set(rnd, rnd.randint(2, 80))
            _, d = agglomerate(ps, Linkage.SINGLE, 1)
            merge_dists = sorted(m[2] for m in d.merges)
            weights = sorted(distance(ps[i], ps[j]) for i, j in emst(ps).edges)
            assert merge_dists == weights


class TestProperties:
    def test_translation_invariance(self, rnd):
        ps = random_point_set(rnd, 30)
        shifted = PointSet.from_xy([(p.x + 512.0, p.y - 256.0) for p in ps])
        for linkage in Linkage:
            c1, d1 = agglomerate(ps, linkage, 4)
            c2, d2 = agglomerate(shifted, linkage, 4)
            assert c1.labels == c2.labels
            assert [(a, b) for a, b, _ in d1.merges] == [(a, b) for a, b, _ in d2.merges]
            for (_, _, x), (_, _, y) in zip(d1.merges, d2.merges):
                assert x == pytest.approx(y, rel=1e-9)

    def test_tie_break_deterministic(self):
        # equally spaced points: every merge distance ties at 1.0
        ps = PointSet.from_xy([(i, 0) for i in range(6)])
        _, d = agglomerate(ps, Linkage.SINGLE, 1)
        # first merge must take the lexicographically smallest pair (0, 1)
        assert d.merges[0][:2] == (0, 1)
        again = agglomerate(ps, Linkage.SINGLE, 1)[1]
        assert d.merges == again.merges

    def test_labels_renumbered_by_smallest_member(self, rnd):
        ps = random_point_set(rnd, 25)
        c, _ = agglomerate(ps, Linkage.COMPLETE, 5)
        firsts = [c.labels.index(i) for i in range(5)]
        assert firsts == sorted(firsts)
