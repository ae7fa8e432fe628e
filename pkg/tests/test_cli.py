import io
import contextlib
import json
import os

import pytest

from cubalg import chart as chartmod
from cubalg import emit
from cubalg.cli import dispatch, parse_curve, parse_range
from cubalg.cobar import BigradedChart, cobar_cohomology
from cubalg.hopf import builtin_algebroid


def run(args):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        rc = dispatch(args)
    return rc, buf.getvalue()


def test_parse_curve_mixed():
    c = parse_curve("a1,0,a3,0,0")
    assert c.a1.text() == "a1" and c.a2.is_zero()
    with pytest.raises(ValueError):
        parse_curve("a1,0,0,0")
    with pytest.raises(ValueError):
        parse_curve("a1,b,0,0,0")


def test_parse_range():
    assert parse_range("-2..2") == [-2, -1, 0, 1, 2]
    assert parse_range("1,5,9") == [1, 5, 9]


def test_nseries_golden():
    rc, out = run(["curve", "nseries", "--curve", "a1,0,a3,0,0",
                   "--n", "2", "--order", "4"])
    assert rc == 0
    obj = json.loads(out)
    assert obj["coefficients"]["z^1"] == "2"
    assert obj["coefficients"]["z^2"] == "-1*a1"
    assert obj["coefficients"]["z^4"] == "-7*a3"


def test_cover_fiber_cusp():
    rc, out = run(["cover", "fiber", "--cusp", "--prime", "2",
                   "--field", "F2"])
    assert rc == 0
    assert json.loads(out)["rank"] == 8


def test_cech_empty_twist():
    rc, out = run(["cech", "--weights", "1,3", "--twists=-1..-1"])
    assert rc == 0
    obj = json.loads(out)
    assert obj["h0"]["-1"] == [] and obj["h1"]["-1"] == []


def test_pi_table():
    rc, out = run(["descent", "--weights", "1,3", "--degrees", "0..12"])
    assert rc == 0
    obj = json.loads(out)
    assert [obj["pi"][str(d)]["rank"] for d in range(13)] == \
        [1, 0, 1, 0, 1, 0, 2, 0, 2, 0, 2, 0, 3]


def test_determinism_byte_identical():
    for args in (
        ["curve", "invariants", "--curve", "1,2,3,4,5"],
        ["hopf", "cobar", "--algebroid", "z2_group", "--twists=-2..2",
         "--smax", "4"],
        ["steenrod", "primitives", "--window", "1..8", "--cutoff", "16"],
        ["descent", "--format", "tsv"],
    ):
        rc1, out1 = run(args)
        rc2, out2 = run(args)
        assert rc1 == 0 and out1 == out2


def test_unknown_verb_nonzero():
    with pytest.raises(SystemExit):
        dispatch(["frobnicate"])


def test_error_exit_code():
    rc, _ = run(["curve", "nseries", "--curve", "bogus", "--n", "2"])
    assert rc == 2


def test_emit_tsv_header_only():
    text = emit.emit_table([], "tsv", columns=["a", "b"])
    assert text == "a\tb\n"


def test_emit_json_round_trip_chart():
    H = builtin_algebroid("z2_group")
    chart = cobar_cohomology(H, range(-2, 3), 4)
    obj = emit.chart_to_obj(chart)
    text = emit.json_text(obj)
    back = emit.chart_from_obj(json.loads(text))
    assert back.cells == chart.cells
    assert back.t_values == chart.t_values


def test_atomic_write_env_dir(tmp_path, monkeypatch):
    monkeypatch.setenv(emit.OUTPUT_DIR_ENV, str(tmp_path))
    emit.atomic_write_text("sub/file.txt", "hello\n")
    assert (tmp_path / "sub" / "file.txt").read_text() == "hello\n"
    assert not [f for f in os.listdir(tmp_path / "sub")
                if f.startswith(".tmp-")]


def test_empty_chart_grid_only():
    chart = BigradedChart(s_max=4, t_values=())
    render = chartmod.render_window_for(chart, (0, 8), (0, 4))
    svg = chartmod.chart_svg(render)
    assert "<rect" in svg and "circle" not in svg.replace(
        'marker', '')  # background rect only, no glyphs
    assert svg.count("<line") > 0


def test_chart_svg_deterministic_and_glyphs():
    H = builtin_algebroid("z2_group")
    chart = cobar_cohomology(H, range(-4, 5), 6)
    render = chartmod.render_window_for(chart, (-8, 8), (0, 6))
    svg1 = chartmod.chart_svg(render)
    svg2 = chartmod.chart_svg(render)
    assert svg1 == svg2
    # box at (0, 0); dot towers over x = 0 mod 4 columns
    assert "<rect" in svg1 and "<circle" in svg1


def test_chart_one_cluster_per_cell():
    chart = BigradedChart(s_max=2, t_values=(0,))
    chart.cells[(1, 2)] = (2, (2, 4))
    render = chartmod.render_window_for(chart, (0, 4), (0, 2))
    svg = chartmod.chart_svg(render)
    # 2 boxes + 2 dots, one labeled "4"
    assert svg.count('stroke="black"') == 2
    assert svg.count('fill="black"') == 2
    assert ">4</text>" in svg


def test_cli_chart_render_round_trip(tmp_path):
    rc, out = run(["hopf", "cobar", "--algebroid", "z2_group",
                   "--twists=-4..4", "--smax", "6"])
    assert rc == 0
    src = tmp_path / "chart.json"
    src.write_text(out)
    dst = tmp_path / "chart.svg"
    rc = dispatch(["chart", "render", "--input", str(src),
                   "--x-range=-8..8", "--s-range", "0..6",
                   "--output", str(dst)])
    assert rc == 0
    first = dst.read_bytes()
    rc = dispatch(["chart", "render", "--input", str(src),
                   "--x-range=-8..8", "--s-range", "0..6",
                   "--output", str(dst)])
    assert rc == 0
    assert dst.read_bytes() == first


def test_steenrod_verify_cli():
    rc, out = run(["steenrod", "verify", "--cutoff", "16"])
    assert rc == 0
    assert json.loads(out)["ok"]
