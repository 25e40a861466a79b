"""Command-line interface: subcommands, formats, and exit codes."""

import json

import pytest

from adams_spectra.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_euler_invert_factorials(capsys):
    code, out, err = run(capsys, "euler", "invert", "--h",
                         "1,1,2,6,24,120,720")
    assert code == 0
    assert out.strip() == "1,1,4,17,92,572"
    assert err == ""


def test_euler_expand(capsys):
    code, out, _ = run(capsys, "euler", "expand", "--g", "1,1",
                       "--max-degree", "6")
    assert code == 0
    assert out.strip() == "1,1,2,2,3,3,4"


def test_euler_wrong_flag_for_mode(capsys):
    code, _, err = run(capsys, "euler", "invert", "--g", "1,1")
    assert code == 2
    assert "requires --h" in err


def test_euler_nonrealizable_is_domain_error(capsys):
    code, out, err = run(capsys, "euler", "invert", "--h", "1,1,0,0")
    assert code == 1
    assert out == ""
    payload = json.loads(err)
    assert payload["error"] == "NotRealizable"
    assert payload["input"] == ["1", "1", "0", "0"]
    assert payload["schema"] == 1


def test_euler_force_nonrealizable(capsys):
    code, out, _ = run(capsys, "euler", "invert", "--h", "1,1,0,0",
                       "--force-nonrealizable")
    assert code == 0
    assert out.strip() == "1,-1,0"


def test_charpoly_json_matches_spec_example(capsys):
    code, out, _ = run(capsys, "charpoly", "--preset", "ssym",
                       "--n", "-1", "--m", "3", "--format", "json")
    assert code == 0
    body = json.loads(out)
    assert body["eigenvalues"] == [{"value": "-1", "mult": 5},
                                   {"value": "1", "mult": 1}]
    assert body["factors"] == [{"k": 1, "mult": 4}, {"k": 2, "mult": 1},
                               {"k": 3, "mult": 1}]


def test_charpoly_text_and_csv(capsys):
    code, out, _ = run(capsys, "charpoly", "--v", "1,1", "--n", "2",
                       "--m", "4")
    assert code == 0
    assert "dimension 5" in out
    assert "factors k=1:1 k=2:2 k=3:1 k=4:1" in out
    code, out, _ = run(capsys, "charpoly", "--v", "1,1", "--n", "2",
                       "--m", "4", "--format", "csv")
    assert out.splitlines()[0] == "k,mult"
    assert "4,1" in out.splitlines()


def test_charpoly_q_route_rational_q(capsys):
    code, out, _ = run(capsys, "charpoly", "--v", "1,1", "--m", "3",
                       "--route", "q", "--q", "2", "--format", "json")
    assert code == 0
    body = json.loads(out)
    assert body["trace"] == "-8"          # -q^3 at q=2
    assert {"value": "-8", "mult": 1} in body["eigenvalues"]
    assert {"value": "4", "mult": 1} in body["eigenvalues"]
    assert {"value": "-4", "mult": 1} in body["eigenvalues"]


def test_charpoly_q_flag_needs_q_route(capsys):
    code, _, err = run(capsys, "charpoly", "--v", "1,1", "--m", "3",
                       "--q", "2")
    assert code == 2
    assert "q route" in err


def test_trace_table_matches_spec_example(capsys):
    code, out, _ = run(capsys, "trace", "--preset", "peak", "--n", "-1",
                       "--max-degree", "8")
    assert code == 0
    assert out.strip() == "1,-1,1,-2,1,-3,2,-5,3"


def test_trace_single_degree_fractional_n(capsys):
    code, out, _ = run(capsys, "trace", "--v", "1,1", "--n", "1/2",
                       "--m", "3")
    assert code == 0
    assert out.strip() == "7/8"           # 1/2 + 1/4 + 1/8


def test_tracegf_equals_trace_table(capsys):
    _, gf_out, _ = run(capsys, "tracegf", "--preset", "qsym", "--n", "3",
                       "--max-degree", "9")
    _, tr_out, _ = run(capsys, "trace", "--preset", "qsym", "--n", "3",
                       "--max-degree", "9")
    assert gf_out == tr_out


def test_palindromes_csv(capsys):
    code, out, _ = run(capsys, "palindromes", "--v", "1,1",
                       "--max-degree", "4", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "m,even,odd,non_palindromic,trace"
    assert lines[1] == "0,1,0,0,1"
    assert lines[5] == "4,2,1,2,1"


def test_qtrace_symbolic_and_rational(capsys):
    code, out, _ = run(capsys, "qtrace", "--v", "1,1", "--max-degree", "3")
    assert code == 0
    assert out.strip() == "1,-1,-1+q,-q^3"
    code, out, _ = run(capsys, "qtrace", "--v", "1,1", "--max-degree", "3",
                       "--q", "1")
    assert out.strip() == "1,-1,0,-1"


def test_witt_binary_alphabet(capsys):
    code, out, _ = run(capsys, "witt", "--v", "2", "--max-degree", "6")
    assert code == 0
    assert out.strip() == "2,1,2,3,6,9"


def test_species_preset(capsys):
    code, out, _ = run(capsys, "species", "--preset", "Pi",
                       "--max-degree", "9")
    assert code == 0
    lines = dict(line.split(" ", 1) for line in out.splitlines())
    assert lines["antipode_traces"] == "1,-1,0,1,1,-2,-9,-9,50,267"
    assert lines["dimensions"].startswith("1,1,2,5,15,52")


def test_asym_fibonacci(capsys):
    code, out, _ = run(capsys, "asym", "--preset", "fibonacci",
                       "--m", "20,40", "--format", "json")
    assert code == 0
    body = json.loads(out)
    assert body["gamma"] == 1
    assert float(body["ratios"][1]["relative_error"]) < 1e-8


def test_asym_custom_and_violation(capsys):
    code, out, _ = run(capsys, "asym", "--num", "1", "--den", "1,-2",
                       "--m", "10")
    assert code == 0
    assert "radius_exact 1/2" in out
    code, _, err = run(capsys, "asym", "--num", "1", "--den", "1,0,-1",
                       "--m", "10")
    assert code == 1
    payload = json.loads(err)
    assert payload["error"] == "HypothesisViolated"
    assert payload["check"] == "unique_dominant_singularity"


def test_verify_suite_text(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "figures")
    assert code == 0
    assert out.strip().endswith("PASSED")
    assert all(line.startswith("PASS") for line in
               out.strip().splitlines()[:-1])


def test_verify_bounded_oracle_spec_example(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "oracle",
                       "--alphabet", "1,1", "--max-degree", "3",
                       "--n", "-2,-1,0,1,2")
    assert code == 0
    assert "20 characteristic polynomials agree" in out


def test_verify_vacuous_bounds(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "oracle",
                       "--alphabet", "1,1", "--max-degree", "3",
                       "--n", "")
    assert code == 0
    assert "vacuous" in out


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 1
    assert json.loads(err)["error"] == "InvalidInput"


def test_oeis_profile_match(capsys):
    code, out, _ = run(capsys, "oeis", "--id", "A003319", "--preset",
                       "ssym", "--max-degree", "6", "--sequence", "v")
    assert code == 0
    assert "matched=True" in out
    assert "offline=True" in out


def test_oeis_values_mismatch_is_data(capsys):
    code, out, _ = run(capsys, "oeis", "--id", "A003319", "--values",
                       "1,1,3,14")
    assert code == 0                      # a mismatch report is a result
    assert "matched=False" in out
    assert "first_mismatch=3" in out


def test_oeis_cache_miss(capsys, tmp_path):
    code, _, err = run(capsys, "oeis", "--id", "A000001", "--values", "1",
                       "--cache-dir", str(tmp_path))
    assert code == 1
    assert json.loads(err)["error"] == "CacheMiss"


def test_oeis_env_cache_dir(capsys, tmp_path, monkeypatch):
    # the environment variable names the cache directory itself
    (tmp_path / "b999997.txt").write_text("1 5\n2 7\n")
    monkeypatch.setenv("ADAMS_SPECTRA_CACHE", str(tmp_path))
    code, out, _ = run(capsys, "oeis", "--id", "A999997", "--values", "5,7")
    assert code == 0
    assert "matched=True" in out


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "charpoly", "--m", "3")[0] == 2       # no source
    assert run(capsys, "charpoly", "--preset", "ssym", "--h", "1,1",
               "--m", "2")[0] == 2                           # two sources
    assert run(capsys, "nonesuch")[0] == 2                   # bad subcommand
    assert run(capsys)[0] == 2                               # no subcommand
    assert run(capsys, "qtrace", "--v", "1,1")[0] == 2       # no bound
    assert run(capsys, "trace", "--preset", "peak",
               "--max-degree", "4", "--n", "x")[0] == 1      # bad rational


def test_json_output_is_deterministic(capsys):
    args = ("charpoly", "--preset", "qsym", "--m", "4", "--route", "q",
            "--format", "json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0
    assert run(capsys, "charpoly", "--help")[0] == 0
