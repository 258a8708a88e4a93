import csv
import io
import json
from fractions import Fraction

import numpy as np
import pytest
from scipy import integrate

from qhook import __version__
from qhook.cli import job_to_argv, main
from qhook.forests import h_tree


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv)
    assert code == 0, err
    return json.loads(out)


def run_csv(*argv):
    code, out, err = run(*argv, "--csv")
    assert code == 0, err
    header, body = out.split("\n", 1)
    assert header == f"# qhook {__version__}"
    return list(csv.DictReader(io.StringIO(body)))


def test_gf_ssyt_expand():
    data = run_json("gf", "ssyt", "--shape", "3,1", "--m", "4", "--expand")
    assert data["poly"] == {"offset": 1, "coeffs": [str(c) for c in (1, 2, 4, 5, 7, 7, 7, 5, 4, 2, 1)]}
    assert data["log_concave"] is False and data["unimodal"] is True


def test_gf_pp_and_forest():
    assert run_json("gf", "pp", "--box", "1,1,1", "--expand")["poly_text"] == "q + 1"
    data = run_json("gf", "forest", "--tree", "((()()))", "--expand", "--oracle")
    assert data["poly_text"] == "q + 1" and data["oracle"]["agrees"]


def test_gf_oracle_flag_for_each_kind():
    for argv in (("syt", "--shape", "3,2"), ("ssyt", "--shape", "2,1", "--m", "3"), ("pp", "--box", "2,2,2")):
        assert run_json("gf", *argv, "--oracle")["oracle"]["agrees"]


def test_cumulants_table():
    rows = run_csv("cumulants", "ssyt", "--shape", "8,4,3,1,1,0,0", "--m", "7", "--standardized")
    assert float(rows[3]["kappa_standardized"]) == pytest.approx(-0.1908474, abs=5e-8)
    tree = h_tree(10, 7).to_text()
    rows = run_csv("cumulants", "forest", "--tree", tree, "--upto", "3")
    assert rows[2]["kappa_exact"] == "0"
    # pp 2,2,2 has degree 8 and is symmetric, so the mean is 4
    rows = run_csv("cumulants", "pp", "--box", "2,2,2", "--upto", "2")
    assert Fraction(rows[0]["kappa_exact"]) == 4


def test_scan_scale_partition():
    rows = run_csv("scan", "--family", "scale-partition", "--base", "8,4,3,1,1,0,0", "--m", "7", "--params", "0..2")
    assert [r["param"] for r in rows] == ["0", "1", "2"]
    assert float(rows[1]["kappa4_std"]) == pytest.approx(-0.14457831, abs=5e-7)


def test_scan_other_families():
    rows = run_csv("scan", "--family", "scale-rows", "--base", "8,4,3,1,1", "--scale", "linear", "--params", "100")
    assert float(rows[0]["kappa4_std"]) == pytest.approx(-0.0058903154, abs=1e-9)
    rows = run_csv("scan", "--family", "pp-box", "--base", "2,3", "--params", "1,2")
    assert rows[0]["median"] == "2"
    rows = run_csv("scan", "--family", "tree-family", "--tree-kind", "h", "--k", "3", "--params", "6,9", "--d", "4,6")
    assert rows[0]["kappa4_std"] == rows[1]["kappa4_std"]
    rows = run_csv("scan", "--family", "custom-list", "--items", "syt 2,2; pp 1,1,2")
    assert len(rows) == 2


def test_scan_params_must_increase():
    code, _, err = run("scan", "--family", "pp-box", "--base", "2,2", "--params", "3,2")
    assert code == 2 and "increasing" in err


def test_csv_cells_have_full_precision():
    rows = run_csv("scan", "--family", "scale-partition", "--base", "8,4,3,1,1", "--m", "7", "--params", "0")
    assert rows[0]["kappa4_std"] == format(float(rows[0]["kappa4_std"]), ".17g")


def test_classify():
    data = run_json("classify", "pp", "--box", "3,3,100")
    assert data["median"] == 3 and data["ab"] == 9
    data = run_json("classify", "ssyt", "--shape", "2,1", "--m", "3")
    assert data["weft"]["exact"] == "3/4"  # staircase closed form at N = 3
    assert data["exp_notation"] == [[2, 1], [1, 1], [0, 1]]
    data = run_json("classify", "tree", "--tree", h_tree(30, 27).to_text())
    assert data["n_minus_r"] == 3
    assert data["regime"] == "degenerate (n−r = o(√n)) candidate"


def test_dist_commands():
    rows = run_csv("dist", "density", "--t", "1", "--at", "0")
    assert float(rows[0]["density"]) == 1.0
    rows = run_csv("dist", "cdf", "--t", "2", "--at=-0.5,0,0.5")
    assert [float(r["cdf"]) for r in rows] == [0.25, 0.5, 0.75]
    rows = run_csv("dist", "cumulants", "--t", "1,1,1,1", "--d", "4")
    assert Fraction(rows[-1]["kappa"]) == Fraction(-1, 30)
    rows = run_csv("dist", "grid", "--t", "6,5,1", "--points", "400")
    assert len(rows) == 400
    xs = np.array([float(r["x"]) for r in rows])
    ys = np.array([float(r["pdf"]) for r in rows])
    assert abs(integrate.trapezoid(ys, xs) - 1) < 1e-6
    rows = run_csv("dist", "charfn", "--t", "1", "--sigma", "0.5", "--at", "0,1")
    assert float(rows[0]["re"]) == 1.0


def test_dist_gnuplot_grid():
    code, out, _ = run("dist", "grid", "--t", "1,1", "--points", "5", "--gnuplot")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 5 and all(len(line.split()) == 2 for line in lines)


def test_compare():
    data = run_json("compare", "pp", "--box", "2,2,3", "--self")
    assert data["kolmogorov"] == 0 and data["levy"] == 0
    data = run_json("compare", "ssyt", "--shape", "800,400,300,100,100", "--m", "7", "--delta-limit")
    assert data["kolmogorov"] < 0.02


def test_compare_h_tree_atom_bound():
    # H_{n,n-3} always has the [4]_q! law, whose central atom 6/24 keeps it
    # 0.125 away from every continuous law in Kolmogorov distance
    data = run_json("compare", "forest", "--tree", h_tree(40, 37).to_text(), "--t", "1,1,1")
    assert data["kolmogorov"] == pytest.approx(0.125)
    assert data["levy"] < data["kolmogorov"]


def test_oracle_command():
    data = run_json("oracle", "--suite", "syt,pp")
    assert [s["passed"] for s in data["suites"]] == [True, True]
    code, _, _ = run("oracle", "--suite", "nope")
    assert code == 2


@pytest.mark.parametrize(
    "argv,code",
    [
        (("gf", "syt", "--shape", "3,a"), 2),
        (("gf", "syt"), 2),
        (("gf", "ssyt", "--shape", "3,1,1", "--m", "2"), 3),
        (("dist", "density", "--t", "0", "--at", "0"), 3),
        (("gf", "syt", "--shape", "6,5,4", "--oracle"), 4),
        (("gf", "pp", "--box", "3,3,4", "--oracle"), 4),
        (("frobnicate",), 2),
    ],
)
def test_exit_codes(argv, code):
    assert run(*argv)[0] == code


def test_deterministic_output():
    argv = ("scan", "--family", "pp-box", "--base", "2,2", "--params", "1,2,3", "--csv")
    assert run(*argv)[1] == run(*argv)[1]
    assert run("oracle", "--suite", "forest")[1] == run("oracle", "--suite", "forest")[1]


def test_job_file(tmp_path):
    job = {"command": "gf", "kind": "pp", "box": "1,1,1", "expand": True, "csv": True}
    assert job_to_argv(job) == ["gf", "pp", "--box", "1,1,1", "--expand", "--csv"]
    path = tmp_path / "job.json"
    path.write_text(json.dumps(job))
    code, out, _ = run("--job", str(path))
    assert code == 0 and out.splitlines()[2] == "0,1"
    path.write_text("{not json")
    assert run("--job", str(path))[0] == 2
