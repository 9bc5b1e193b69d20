import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from proxigraph.catalog import build_document
from proxigraph.clustering import Clustering
from proxigraph.errors import EmptyInput, ParseError
from proxigraph.geometry import Graph, PointSet, Triangulation
from proxigraph.render import (
    Document,
    Mark,
    PointFormat,
    palette_rgb,
    parse_points,
    write_ipe,
    write_result_json,
    write_svg,
)

from .conftest import random_point_set

FIXTURES = Path(__file__).parent / "fixtures"


class TestParsePoints:
    def test_csv(self):
        ps = parse_points(b"0,0\n3,4", PointFormat.CSV)
        assert [p.as_tuple() for p in ps] == [(0, 0), (3, 4)]

    def test_csv_header_skipped(self):
        ps = parse_points(b"x,y\n0,0\n3,4\n", PointFormat.CSV)
        assert len(ps) == 2

    def test_csv_bad_line_reports_location(self):
        with pytest.raises(ParseError) as err:
            parse_points(b"0,0\noops,4\n", PointFormat.CSV)
        assert "line 2" in str(err.value)

    def test_csv_empty(self):
        with pytest.raises(EmptyInput):
            parse_points(b"", PointFormat.CSV)

    def test_csv_rejects_non_finite(self):
        with pytest.raises(ParseError):
            parse_points(b"0,0\nnan,4\n", PointFormat.CSV)

    def test_json(self):
        ps = parse_points(b"[[0,0],[3,4]]", PointFormat.JSON)
        assert [p.as_tuple() for p in ps] == [(0, 0), (3, 4)]

    def test_json_bad_element(self):
        with pytest.raises(ParseError) as err:
            parse_points(b"[[0,0],[1]]", PointFormat.JSON)
        assert "element 1" in str(err.value)

    def test_json_empty(self):
        with pytest.raises(EmptyInput):
            parse_points(b"[]", PointFormat.JSON)

    def test_ipe_fragment(self):
        data = b'<ipe><page><use name="mark/disk(sx)" pos="16 32"/></page></ipe>'
        ps = parse_points(data, PointFormat.IPE_XML)
        assert [p.as_tuple() for p in ps] == [(16, 32)]

    def test_ipe_no_marks(self):
        with pytest.raises(EmptyInput):
            parse_points(b"<ipe><page/></ipe>", PointFormat.IPE_XML)

    def test_ipe_malformed_xml(self):
        with pytest.raises(ParseError):
            parse_points(b"<ipe><page>", PointFormat.IPE_XML)

    def test_duplicates_allowed_at_parse_time(self):
        ps = parse_points(b"1,1\n1,1\n", PointFormat.CSV)
        assert len(ps) == 2


class TestWriteIpe:
    def test_empty_page_golden(self):
        got = write_ipe(Document(points=PointSet(points=())))
        assert got == (FIXTURES / "empty.ipe").read_bytes()
        assert got.startswith(b'<?xml version="1.0"?>\n<ipe version="70218" creator="proxigraph">')

    def test_two_points_edge_golden(self):
        doc = Document(
            points=PointSet.from_xy([(16, 32), (48, 80)]),
            marks=(Mark(), Mark()),
            segments=((0, 1, 0),),
        )
        got = write_ipe(doc)
        assert got == (FIXTURES / "two_points_edge.ipe").read_bytes()
        text = got.decode()
        assert '<use name="mark/disk(sx)" pos="16 32" size="normal" stroke="black"/>' in text
        assert '<path stroke="black">16 32 m 48 80 l</path>' in text
        assert text.count("<use") == 2 and text.count("<path") == 1

    def test_three_cluster_golden(self):
        ps = PointSet.from_xy(
            [(0, 0), (10, 0), (100, 0), (110, 0), (50, 90), (60, 90), (200, 200)]
        )
        clustering = Clustering(labels=(0, 0, 1, 1, 2, 2, -1), n_clusters=3)
        got = write_ipe(build_document(ps, clustering, "dbscan"))
        assert got == (FIXTURES / "three_clusters.ipe").read_bytes()
        text = got.decode()
        assert '<use name="mark/cross(sx)" pos="200 200" size="normal" stroke="gray"/>' in text
        for color in ("black", "red", "blue"):
            assert f'stroke="{color}"' in text

    def test_roundtrip_exact(self, rnd):
        for _ in range(10):
            ps = random_point_set(rnd, rnd.randint(1, 40))
            # quantize to the writer's 6-digit precision
            ps = PointSet.from_xy([(round(p.x, 6), round(p.y, 6)) for p in ps])
            doc = Document(points=ps)
            assert parse_points(write_ipe(doc), PointFormat.IPE_XML) == ps

    def test_circle_element(self):
        doc = Document(points=PointSet.from_xy([(5, 5)]), circles=((0, 2.5, 0),))
        text = write_ipe(doc).decode()
        assert '<path stroke="black">2.5 0 0 2.5 5 5 e</path>' in text

    def test_wellformed_xml(self, rnd):
        ps = random_point_set(rnd, 12)
        doc = Document(
            points=ps,
            segments=tuple((i, i + 1, i % 10) for i in range(11)),
            circles=((0, 3.0, 7),),
        )
        ET.fromstring(write_ipe(doc))

    def test_deterministic_bytes(self, rnd):
        ps = random_point_set(rnd, 9)
        doc = Document(points=ps, segments=((0, 1, 2),))
        assert write_ipe(doc) == write_ipe(doc)
        assert write_svg(doc) == write_svg(doc)

    def test_coordinate_trimming(self):
        doc = Document(points=PointSet.from_xy([(0.5, -2.25), (1e-7, 1.0000001)]))
        text = write_ipe(doc).decode()
        assert 'pos="0.5 -2.25"' in text
        assert 'pos="0 1"' in text  # rounds below the 6-digit precision


class TestWriteSvg:
    def test_empty_default_viewbox(self):
        text = write_svg(Document(points=PointSet(points=()))).decode()
        assert 'viewBox="0 0 100 100"' in text

    def test_one_segment_one_line(self):
        doc = Document(points=PointSet.from_xy([(0, 0), (10, 0)]), segments=((0, 1, 0),))
        text = write_svg(doc).decode()
        assert text.count("<line") == 1

    def test_three_colors_three_strokes(self):
        ps = PointSet.from_xy([(0, 0), (10, 0), (20, 0)])
        doc = Document(points=ps, marks=(Mark(color=0), Mark(color=1), Mark(color=2)))
        text = write_svg(doc).decode()
        strokes = {part.split('"')[1] for part in text.split("stroke=")[1:]}
        assert len(strokes) == 3

    def test_y_axis_flipped(self):
        # the higher point must get the smaller svg y
        ps = PointSet.from_xy([(0, 0), (0, 100)])
        text = write_svg(Document(points=ps)).decode()
        circles = [line for line in text.splitlines() if line.startswith("<circle")]
        y0 = float(circles[0].split('cy="')[1].split('"')[0])
        y1 = float(circles[1].split('cy="')[1].split('"')[0])
        assert y1 < y0

    def test_wellformed(self, rnd):
        ps = random_point_set(rnd, 10)
        doc = Document(points=ps, circles=((0, 4.0, 7),))
        ET.fromstring(write_svg(doc))


class TestResultJson:
    def test_empty_graph(self):
        got = write_result_json(Graph.undirected(2, []))
        assert got == b'{"type":"graph","n":2,"edges":[]}'

    def test_edges_sorted(self):
        got = write_result_json(Graph.undirected(4, [(3, 2), (1, 0), (0, 2)]))
        assert got == b'{"type":"graph","n":4,"edges":[[0,1],[0,2],[2,3]]}'

    def test_clustering(self):
        got = write_result_json(Clustering(labels=(0, 0, 1), n_clusters=2))
        assert got == b'{"type":"clustering","labels":[0,0,1],"noise":-1}'

    def test_all_noise(self):
        got = write_result_json(Clustering(labels=(-1, -1), n_clusters=0))
        assert got == b'{"type":"clustering","labels":[-1,-1],"noise":-1}'

    def test_triangulation_as_graph(self):
        tri = Triangulation(n=3, triangles=((0, 1, 2),), edges=frozenset({(0, 1), (0, 2), (1, 2)}))
        assert (
            write_result_json(tri)
            == b'{"type":"graph","n":3,"edges":[[0,1],[0,2],[1,2]]}'
        )


class TestPalette:
    def test_named_head_order(self):
        assert palette_rgb(0) == (0.0, 0.0, 0.0)
        assert palette_rgb(1) == (1.0, 0.0, 0.0)
        assert palette_rgb(2) == (0.0, 0.0, 1.0)

    def test_extras_distinct_and_deterministic(self):
        seen = {palette_rgb(i) for i in range(8, 40)}
        assert len(seen) == 32
        assert palette_rgb(17) == palette_rgb(17)
