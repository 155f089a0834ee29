import json

import pytest

from gallaikit.cli import main
from gallaikit.coloring import read_grc
from gallaikit.construct import fixture_targets


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), err


def test_build_prints_size_and_certification(capsys, tmp_path):
    out_path = tmp_path / "g.grc"
    code, payload, _ = run_json(
        capsys, "build", "--target", "h10", "--k", "4", "--out", str(out_path))
    assert code == 0
    assert payload == {"size": 25, "colors_used": [1, 2, 3, 4], "certified": True}
    assert read_grc(out_path).n == 25


def test_build_without_certify_flags_it(capsys):
    code, payload, _ = run_json(
        capsys, "build", "--target", "kipas(3)", "--k", "3", "--no-certify")
    assert code == 0
    assert payload["size"] == 18 and payload["certified"] is False


def test_build_mixed(capsys):
    code, payload, _ = run_json(capsys, "build-mixed", "--k", "4", "--s", "3")
    assert code == 0
    assert payload["size"] == 20


def test_verify_pass_and_fail_exit_codes(capsys, tmp_path):
    path = tmp_path / "c.grc"
    assert main(["build", "--target", "h1", "--k", "3", "--out", str(path)]) == 0
    capsys.readouterr()
    code, payload, _ = run_json(
        capsys, "verify", str(path), "--gallai", "--forbid-all", "h1")
    assert code == 0 and payload["passed"] is True
    assert payload["mono_witnesses"] == [] and payload["rainbow_witness"] is None
    assert set(payload["stats"]) == {
        "pairs_scanned", "embedding_nodes", "patterns_checked"}
    # the same artifact holds a mono path(3) somewhere
    code, payload, _ = run_json(
        capsys, "verify", str(path), "--forbid", "1=path(3)")
    assert code == 1 and payload["passed"] is False
    assert payload["mono_witnesses"]


def test_verify_forbid_none_unsets(capsys, tmp_path):
    path = tmp_path / "c.grc"
    main(["build", "--target", "h10", "--k", "3", "--out", str(path)])
    capsys.readouterr()
    code, payload, _ = run_json(
        capsys, "verify", str(path),
        "--forbid-all", "path(3)", "--forbid", "1=none",
        "--forbid", "2=none", "--forbid", "3=none")
    assert code == 0 and payload["passed"] is True


def test_partition_json_schema(capsys, tmp_path):
    path = tmp_path / "c.grc"
    main(["build", "--target", "kipas(4)", "--k", "3", "--out", str(path)])
    capsys.readouterr()
    code, payload, _ = run_json(capsys, "partition", str(path))
    assert code == 0
    assert set(payload) == {"parts", "quotient_colors", "ell"}
    assert payload["ell"] == len(payload["parts"]) >= 2


def test_partition_rainbow_exits_one(capsys, tmp_path):
    path = tmp_path / "r.grc"
    path.write_text("grc 1 3 3\n1 2\n3\n", encoding="ascii")
    code, payload, _ = run_json(capsys, "partition", str(path))
    assert code == 1
    assert payload == {"rainbow_witness": [0, 1, 2]}


def test_formula_theorem_value(capsys):
    code, payload, _ = run_json(capsys, "formula", "--target", "kipas(4)",
                                "--k", "5", "--s", "5")
    assert code == 0
    assert payload["value"] == 101
    assert payload["lower_construction_size"] == 100
    assert isinstance(payload["branch"], str)


def test_formula_human_output_leads_with_value(capsys):
    code, out, _ = run(capsys, "formula", "--target", "h10", "--k", "3")
    assert code == 0
    assert out.startswith("11")


def test_formula_conjecture_needs_fan(capsys):
    code, _, err = run(capsys, "formula", "--target", "h10", "--k", "3",
                       "--conjecture")
    assert code == 2 and "kipas" in err


def test_formula_uncovered_target_is_domain_error(capsys):
    code, _, err = run(capsys, "formula", "--target", "h7", "--k", "3")
    assert code == 2 and err.startswith("error:")


def test_search_witness_and_exhaust_codes(capsys, tmp_path):
    out_path = tmp_path / "w.grc"
    code, payload, _ = run_json(
        capsys, "search", "--n", "4", "--per-color", "path(3),kipas(4)",
        "--gallai", "--out", str(out_path))
    assert code == 0 and payload["kind"] == "witness"
    assert read_grc(out_path).colors == tuple(payload["witness_colors"])
    code, payload, _ = run_json(
        capsys, "search", "--n", "5", "--per-color", "path(3),kipas(4)",
        "--gallai", "--mode", "exhaust")
    assert code == 1 and payload["kind"] == "exhausted"
    assert payload["symmetry_reduced"] is False


def test_search_scope_violation_is_usage_error(capsys):
    code, _, err = run(capsys, "search", "--n", "9", "--per-color", "h10,h10",
                       "--mode", "exhaust")
    assert code == 2 and "error:" in err


def test_encode_decode_pipeline(capsys, tmp_path):
    cnf = tmp_path / "f.cnf"
    code, payload, _ = run_json(
        capsys, "encode", "--n", "4", "--per-color", "path(3),kipas(4)",
        "--gallai", "--out", str(cnf))
    assert code == 0 and payload["vars"] == 12
    model = tmp_path / "model.out"
    model.write_text("SAT\n1 -2 -3 4 -5 6 -7 8 -9 10 11 -12 0\n", encoding="ascii")
    decoded = tmp_path / "w.grc"
    code, payload, _ = run_json(
        capsys, "decode", "--cnf", str(cnf), "--model", str(model),
        "--n", "4", "--k", "2", "--out", str(decoded))
    assert code == 0 and payload["kind"] == "sat"
    assert read_grc(decoded).colors == (1, 2, 2, 2, 2, 1)


def test_decode_unsat_exits_one(capsys, tmp_path):
    cnf = tmp_path / "f.cnf"
    main(["encode", "--n", "3", "--per-color", "k3,k3", "--out", str(cnf)])
    capsys.readouterr()
    model = tmp_path / "model.out"
    model.write_text("s UNSATISFIABLE\n", encoding="ascii")
    code, payload, _ = run_json(
        capsys, "decode", "--cnf", str(cnf), "--model", str(model),
        "--n", "3", "--k", "2")
    assert code == 1 and payload == {"kind": "unsat"}


def test_encode_k_mismatch_is_usage_error(capsys, tmp_path):
    code, _, err = run(capsys, "encode", "--n", "4", "--k", "3",
                       "--per-color", "k3,k3", "--out", str(tmp_path / "f.cnf"))
    assert code == 2 and "--k" in err


def test_catalog_lists_all_patterns(capsys):
    code, rows, _ = run_json(capsys, "catalog")
    assert code == 0 and len(rows) == 12
    for row in rows:
        assert set(row) == {"id", "vertices", "edges", "chromatic_number"}
        assert row["vertices"] == 5 and row["chromatic_number"] == 3


def test_fixtures_regenerate_to_directory(capsys, tmp_path):
    code, payload, _ = run_json(
        capsys, "fixtures", "regenerate", "--method", "seed",
        "--dest", str(tmp_path))
    assert code == 0
    assert len(payload["written"]) == len(fixture_targets())


def test_build_verify_pipeline_every_target(capsys, tmp_path):
    # end-to-end smoke: build | verify succeeds for each supported target
    for cid in fixture_targets() + ("h12",):
        path = tmp_path / f"{cid.replace('(', '_').rstrip(')')}.grc"
        assert main(["build", "--target", cid, "--k", "3",
                     "--out", str(path), "--no-certify"]) == 0
        assert main(["verify", str(path), "--gallai",
                     "--forbid-all", cid]) == 0
    capsys.readouterr()


def test_missing_required_flag_is_usage_error(capsys):
    assert main(["build", "--target", "h10"]) == 2


def test_unknown_pattern_is_domain_error(capsys):
    code, _, err = run(capsys, "build", "--target", "gadget", "--k", "3")
    assert code == 2 and err.startswith("error:")


def test_threads_must_be_nonnegative(capsys):
    assert main(["catalog", "--threads", "-1"]) == 2
    assert main(["catalog", "--threads", "4"]) == 0
    capsys.readouterr()


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    capsys.readouterr()
