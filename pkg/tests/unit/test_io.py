from io import StringIO

import pandas as pd
import pytest

from hilbert_caratheodory.caratheodory import DensityRow, decompose_face_descent, decompose_lp_rounding, sigma
from hilbert_caratheodory.core.models import RunConfig
from hilbert_caratheodory.io import (
    format_basis,
    format_cone,
    format_decomposition,
    format_density,
    format_polytope,
    format_trace,
    parse_basis,
    parse_block,
    parse_cone,
    parse_matrix,
    parse_polytope,
    parse_vector,
    read_basis,
    read_cone,
    write_text,
)
from hilbert_caratheodory.utils.error_handling import ParseError


class TestParsing:
    """Test the plain-text input formats."""

    def test_parse_cone_with_comments(self):
        text = "# header comment\ncone 2 2\n1 0  # first row\n\n2 3\n"
        C = parse_cone(text)
        assert C.A.rows == ((1, 0), (2, 3))

    def test_parse_matrix(self):
        M = parse_matrix("matrix 1 3\n2 4 6\n")
        assert M.shape == (1, 3)

    def test_parse_polytope(self):
        P = parse_polytope("polytope 2 3\n-1 0 0\n0 -1 0\n1 1 2\n")
        assert P.A.rows == ((-1, 0), (0, -1), (1, 1))
        assert P.b == (0, 0, 2)

    def test_parse_block_shapes(self):
        (a, b), rows = parse_block("hilbert 3 2\n1 0 0\n0 1 0\n", "hilbert")
        assert (a, b) == (3, 2)
        assert rows == [[1, 0, 0], [0, 1, 0]]

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "matrix 2 2\n1 0\n0 1\n",
            "cone 2\n1 0\n",
            "cone 2 2\n1 0\n",
            "cone 2 1\n1 0 0\n",
            "cone 2 1\n1 x\n",
            "cone 2 0\n",
            "cone -1 2\n",
        ],
    )
    def test_malformed_cones(self, text):
        with pytest.raises(ParseError):
            parse_cone(text)

    def test_parse_vector(self):
        assert parse_vector("7 -3") == (7, -3)
        assert parse_vector("7, -3") == (7, -3)
        with pytest.raises(ParseError):
            parse_vector("7 -3\n1 1")
        with pytest.raises(ParseError):
            parse_vector("1.5 2")

    def test_parse_basis_dimension(self, quadrant):
        HB = parse_basis("hilbert 2 2\n1 0\n0 1\n", quadrant)
        assert HB.elements == ((0, 1), (1, 0))
        with pytest.raises(ParseError):
            parse_basis("hilbert 3 1\n1 0 0\n", quadrant)

    def test_read_fixtures(self, fixtures_dir, skew_basis):
        C = read_cone(fixtures_dir / "skew.cone")
        assert C.delta == 3
        assert read_basis(fixtures_dir / "skew.hilbert", C).elements == skew_basis.elements

    def test_missing_file(self, temp_dir):
        with pytest.raises(ParseError):
            read_cone(temp_dir / "absent.cone")


class TestFormatting:
    """Test report rendering."""

    def test_cone_round_trip_text(self, skew_cone):
        text = format_cone(skew_cone)
        assert text == "cone 2 2\n1 0\n2 3\n"
        assert parse_cone(text) == skew_cone

    def test_polytope_text(self):
        P = parse_polytope("polytope 1 2\n1 3\n-1 0\n")
        assert format_polytope(P) == "polytope 1 2\n1 3\n-1 0\n"

    def test_format_basis(self, skew_basis, fixtures_dir):
        assert format_basis(skew_basis) == (fixtures_dir / "skew.hilbert").read_text()

    def test_format_decomposition(self, skew_basis):
        _, d = sigma((7, -3), skew_basis)
        config = RunConfig(command="decompose", inputs=["skew.cone"], point=[7, -3], strategy="oracle")
        text = format_decomposition(d, config)
        lines = text.splitlines()
        assert lines[0] == "# command: decompose"
        assert "point 7 -3" in lines
        assert "strategy oracle" in lines
        assert "length 2" in lines
        assert "certified_bound none" in lines
        assert lines[-2:] == ["term 1 : 1 0", "term 3 : 2 -1"]

    def test_format_eligibility(self, quadrant_basis):
        d, report = decompose_lp_rounding((5, 7), quadrant_basis)
        lines = format_decomposition(d, eligibility=report).splitlines()
        assert "certified_bound 3" in lines
        assert "delta_H 1" in lines
        assert "vertex_multipliers_ok true" in lines
        assert "in_D unknown" in lines

    def test_format_trace(self, delta2_matrix):
        d, trace = decompose_face_descent(delta2_matrix, (3, -1))
        lines = format_trace(trace)
        assert lines[0] == "trace 3"
        assert lines[1].startswith("step interior-step | point 3 -1 | element 1 0 | multiplicity 1")
        assert "rows 1" in lines[2]
        assert lines[-1].endswith("dimension 0")
        assert format_decomposition(d).splitlines()[-4] == "trace 3"

    def test_format_density(self):
        rows = [DensityRow(delta=2, count=4, total=9), DensityRow(delta=4, count=16, total=25)]
        text = format_density(rows, RunConfig(command="d-density", boxes=[2, 4]))
        header, _, csv = text.partition("delta,")
        assert "# boxes: 2 4" in header
        frame = pd.read_csv(StringIO("delta," + csv), dtype=str)
        assert list(frame["fraction"]) == ["4/9", "16/25"]
        assert text.endswith("16,25,16/25\n")

    def test_write_text(self, temp_dir):
        target = temp_dir / "nested" / "out.txt"
        write_text(target, "3\n")
        assert target.read_text() == "3\n"
