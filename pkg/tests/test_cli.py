import json
import subprocess
import sys

CLI = [sys.executable, "-m", "higgs_ic"]


def run(*args, expect=0):
    proc = subprocess.run(CLI + list(args), capture_output=True, text=True)
    assert proc.returncode == expect, (proc.returncode, proc.stdout, proc.stderr)
    return proc


def test_compute_rank1_plain():
    proc = run("compute", "--group", "pgl", "-n", "1", "-g", "2", "-l", "2")
    assert proc.stdout.strip() == "t^6"


def test_compute_latex_layout():
    proc = run("compute", "--group", "pgl", "-n", "2", "-g", "2", "-l", "3",
               "--format", "latex")
    assert proc.stdout.startswith("3 t^{32} - 12 t^{33} + 15 t^{34}")


def test_compute_json_schema():
    proc = run("compute", "--group", "gl", "-n", "1", "-g", "2", "-l", "2",
               "--format", "json")
    doc = json.loads(proc.stdout)
    assert doc["schema"] == 1
    assert doc["params"] == {"n": 1, "g": 2, "l": 2}
    assert doc["variable"] == "t"
    assert [e for e, _ in doc["terms"]] == [[6], [7], [8], [9], [10]]


def test_compute_hodge_group():
    proc = run("compute", "--group", "so012", "-n", "2", "-g", "2", "--format", "json")
    doc = json.loads(proc.stdout)
    assert doc["variable"] == ["u", "v"]


def test_usage_error_for_even_n():
    proc = run("compute", "--group", "so-odd", "-n", "2", "-g", "2", expect=2)
    assert "odd" in proc.stderr


def test_usage_error_for_missing_params():
    proc = run("compute", "--group", "gl", "-n", "1", "-g", "2", expect=2)
    assert "twist" in proc.stderr


def test_cache_round_trip_and_transparency(tmp_path):
    args = ("compute", "--group", "pgl", "-n", "2", "-g", "2", "-l", "2",
            "--format", "json", "--cache-dir", str(tmp_path))
    cold = run(*args).stdout
    files = list(tmp_path.iterdir())
    assert len(files) == 1
    warm = run(*args).stdout
    assert cold == warm
    no_cache = run(*args[:-2]).stdout
    assert no_cache == cold


def test_cache_corruption_is_tolerated(tmp_path):
    args = ("compute", "--group", "pgl", "-n", "1", "-g", "2", "-l", "2",
            "--cache-dir", str(tmp_path))
    first = run(*args)
    rec_file = next(tmp_path.iterdir())
    rec_file.write_text("sha256:junk\n{}")
    again = run(*args)
    assert again.stdout == first.stdout


def test_table_lists_ranks():
    proc = run("table", "--group", "pgl", "-n", "2", "-g", "2", "-l", "2")
    lines = proc.stdout.strip().splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("pgl[n=1, g=2, l=2]: t^6")


def test_table_e6_rows_are_indexed_by_genus():
    proc = run("table", "--group", "e6", "-g", "2", "--method", "pipeline")
    lines = proc.stdout.strip().splitlines()
    assert len(lines) == 1
    assert lines[0].startswith("e6[g=2]: 36 t^90")


def test_jobs_flag_changes_nothing():
    base = run("compute", "--group", "so-odd", "-n", "3", "-g", "2").stdout
    parallel = run("compute", "--group", "so-odd", "-n", "3", "-g", "2", "--jobs", "2").stdout
    assert base == parallel


def test_verify_only_fast_subset_passes():
    proc = run("verify", "--only", "rank1")
    assert "FAIL" not in proc.stdout
    assert "PASS [criterion 4] rank1-gl(g=2,l=2)" in proc.stdout


def test_verify_reports_known_published_deviation():
    proc = subprocess.run(CLI + ["verify", "--only", "so0_nn2(3,2)"],
                          capture_output=True, text=True)
    assert proc.returncode == 1
    assert "PASS [criterion 1] so0_nn2(3,2):methods-agree" in proc.stdout
    assert "FAIL [criterion 1] so0_nn2(3,2):pipeline-vs-published" in proc.stdout
    assert "known misprint" in proc.stdout


def _perturbed_corpus(tmp_path, entry_id):
    from importlib import resources
    text = resources.files("higgs_ic.data").joinpath("reference_corpus.json").read_text()
    doc = json.loads(text)
    for entry in doc["entries"]:
        if entry["id"] == entry_id:
            entry["terms"][0][1] = str(int(entry["terms"][0][1]) + 1)
    bad = tmp_path / "corpus.json"
    bad.write_text(json.dumps(doc))
    return bad


def test_verify_detects_perturbed_published_entry(tmp_path):
    bad = _perturbed_corpus(tmp_path, "e6_g2_published")
    proc = subprocess.run(CLI + ["verify", "--corpus", str(bad), "--only", "e6(2)"],
                          capture_output=True, text=True)
    assert proc.returncode == 1
    failing = [line for line in proc.stdout.splitlines() if line.startswith("FAIL")]
    assert len(failing) == 2  # closed and pipeline each disagree with the perturbed entry
    assert all("vs-published" in line for line in failing)
    assert "PASS [criterion 3] e6(2):methods-agree" in proc.stdout


def test_verify_perturbed_regression_entry_fails_exactly_one_check(tmp_path):
    bad = _perturbed_corpus(tmp_path, "e6_g2_computed")
    proc = subprocess.run(
        CLI + ["verify", "--corpus", str(bad), "--only", "e6(2):frozen-regression"],
        capture_output=True, text=True)
    assert proc.returncode == 1
    failing = [line for line in proc.stdout.splitlines() if line.startswith("FAIL")]
    assert failing == ["FAIL [criterion 3] e6(2):frozen-regression: differs at exponents {90: -1}"]
