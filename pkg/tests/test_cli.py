"""Command-line surface: dispatch, formats, and exit codes."""

import json

import pytest

from mostar import FamilySpec, build, is_isomorphic, mostar_fast, parse_edge_list, tree_from_record, write_edge_list
from mostar.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def path7_file(tmp_path):
    target = tmp_path / "path7.txt"
    write_edge_list(build(FamilySpec.path(7)), target)
    return str(target)


class TestCompute:
    def test_text(self, capsys, path7_file):
        code, out, _ = run(capsys, "compute", path7_file)
        assert code == 0
        assert out.splitlines()[0] == "Mo = 18"
        assert len(out.splitlines()) == 7  # header plus one line per edge

    def test_oracle_agrees(self, capsys, path7_file):
        code, out, _ = run(capsys, "compute", path7_file, "--oracle", "--total-only")
        assert code == 0 and out.strip() == "Mo = 18"

    def test_json(self, capsys, path7_file):
        code, out, _ = run(capsys, "compute", path7_file, "--format", "json")
        obj = json.loads(out)
        assert obj["mostar"] == 18 and len(obj["splits"]) == 6

    def test_compute_equals_library_on_family_file(self, capsys, tmp_path):
        t = build(FamilySpec.c(11, 2, 1))
        f = tmp_path / "c.txt"
        write_edge_list(t, f)
        code, out, _ = run(capsys, "compute", str(f), "--total-only")
        assert out.strip() == f"Mo = {mostar_fast(t)[0]}"


class TestFamily:
    def test_dot(self, capsys):
        code, out, _ = run(capsys, "family", "spider:n=8,r=3", "--format", "dot")
        assert code == 0
        assert out.startswith("graph tree {") and out.count("--") == 7

    def test_edgelist_round_trip(self, capsys):
        code, out, _ = run(capsys, "family", "C:n=7,a=1,b=1")
        assert code == 0
        assert parse_edge_list(out) == build(FamilySpec.c(7, 1, 1))

    def test_bad_spec_exits_2(self, capsys):
        code, _, err = run(capsys, "family", "C:n=7,a=9,b=9")
        assert code == 2 and "error" in err

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "t.txt"
        code, _, _ = run(capsys, "family", "path:n=5", "--out", str(target))
        assert code == 0
        assert parse_edge_list(target.read_text()) == build(FamilySpec.path(5))


class TestEnumerate:
    def test_ndjson_round_trip(self, capsys):
        code, out, err = run(capsys, "enumerate", "--n", "6")
        assert code == 0
        records = [json.loads(line) for line in out.splitlines()]
        assert len(records) == 6
        trees = [tree_from_record(r) for r in records]
        assert all(t.n == 6 for t in trees)
        assert "6 trees" in err

    def test_filter_odd(self, capsys):
        # odd=3 selects trees with 2*3 = 6 odd-degree vertices
        code, out, _ = run(capsys, "enumerate", "--n", "10", "--filter", "odd=3")
        from mostar import stats

        trees = [tree_from_record(json.loads(line)) for line in out.splitlines()]
        assert trees and all(stats(t).odd_count == 6 for t in trees)

    def test_filter_series_reduced(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "8", "--filter", "series-reduced")
        from mostar import stats

        trees = [tree_from_record(json.loads(line)) for line in out.splitlines()]
        assert trees and all(stats(t).deg2_count == 0 for t in trees)

    def test_offset_limit(self, capsys):
        _, full, _ = run(capsys, "enumerate", "--n", "7")
        _, window, _ = run(capsys, "enumerate", "--n", "7", "--offset", "3", "--limit", "2")
        assert window.splitlines() == full.splitlines()[3:5]

    def test_bad_filter_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["enumerate", "--n", "6", "--filter", "bogus=1"])
        assert exc.value.code == 2

    def test_over_cap_exits_2(self, capsys):
        code, _, err = run(capsys, "enumerate", "--n", "25")
        assert code == 2 and "cap" in err


class TestTransformCommand:
    def test_contract(self, capsys, tmp_path):
        f = tmp_path / "p4.txt"
        write_edge_list(build(FamilySpec.path(4)), f)
        out_file = tmp_path / "after.txt"
        code, out, _ = run(capsys, "transform", "contract", str(f),
                           "--edge", "1,2", "--out", str(out_file))
        assert code == 0
        assert "Mo before = 4" in out and "Mo after  = 6" in out
        after = parse_edge_list(out_file.read_text())
        assert is_isomorphic(after, build(FamilySpec.star(4)))

    def test_contract_pendent_rejected(self, capsys, tmp_path):
        f = tmp_path / "p4.txt"
        write_edge_list(build(FamilySpec.path(4)), f)
        code, _, err = run(capsys, "transform", "contract", str(f), "--edge", "0,1")
        assert code == 2 and "pendent" in err

    def test_shift_reports_hypothesis(self, capsys, tmp_path):
        t = parse_edge_list("8\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n2 7\n")
        f = tmp_path / "cat.txt"
        write_edge_list(t, f)
        code, out, _ = run(capsys, "transform", "shift", str(f),
                           "--path", "0,1,2,3,4,5,6", "--i", "2", "--c", "1")
        assert code == 0
        assert "hypothesis held: True" in out

    def test_move_pendants(self, capsys, tmp_path):
        f = tmp_path / "ds.txt"
        write_edge_list(parse_edge_list("6\n0 1\n0 2\n0 3\n1 4\n1 5\n"), f)
        code, out, _ = run(capsys, "transform", "move-pendants", str(f), "--x", "0", "--y", "1")
        assert code == 0 and "max increases: True" in out

    def test_rebalance(self, capsys, tmp_path):
        f = tmp_path / "t.txt"
        write_edge_list(parse_edge_list("6\n0 1\n1 2\n0 3\n3 4\n0 5\n"), f)
        code, out, _ = run(capsys, "transform", "rebalance", str(f),
                           "--at", "0", "--long", "2", "--short", "2")
        assert code == 0 and "Mo before = 16" in out

    def test_relocate(self, capsys, tmp_path):
        f = tmp_path / "c.txt"
        write_edge_list(build(FamilySpec.c(12, 3, 1)), f)
        code, out, _ = run(capsys, "transform", "relocate", str(f),
                           "--leaf", "10", "--from", "3", "--to", "5")
        assert code == 0
        assert "Mo before = 80" in out and "Mo after  = 76" in out


class TestVerifyCommand:
    def test_single_claim_ok(self, capsys):
        code, out, _ = run(capsys, "verify", "--claim", "T3.1",
                           "--n-min", "5", "--n-max", "8")
        assert code == 0
        assert "FAIL" not in out and "T3.1" in out

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "verify", "--claim", "T3.4",
                           "--n-min", "6", "--n-max", "8", "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert obj["claim"] == "T3.4"
        assert all(inst["claimed_is_argopt"] for inst in obj["instances"])

    def test_csv_format(self, capsys):
        code, out, _ = run(capsys, "verify", "--claim", "C2.7",
                           "--n-min", "5", "--n-max", "7", "--format", "csv")
        assert code == 0 and out.startswith("claim,n,params")

    def test_unknown_claim_exits_2(self, capsys):
        code, _, err = run(capsys, "verify", "--claim", "T7.7")
        assert code == 2 and "unknown claim" in err

    def test_all_claims_small_range(self, capsys):
        code, out, _ = run(capsys, "verify", "--claim", "all",
                           "--n-min", "5", "--n-max", "6")
        assert code == 0
        assert "LDL-min-degseq" in out

    def test_verification_failure_exits_1(self, capsys, monkeypatch):
        # force a wrong claimed family to prove the exit-code contract
        import mostar.verify as verify_mod

        def wrong_family(n, constraint, direction):
            return FamilySpec.path(n)

        monkeypatch.setattr(verify_mod, "claimed_extremal", wrong_family)
        code, out, err = run(capsys, "verify", "--claim", "T2.1",
                             "--n-min", "6", "--n-max", "6")
        assert code == 1 and "FAIL" in out and "failing" in err


class TestBench:
    def test_small_with_oracle(self, capsys):
        code, out, _ = run(capsys, "bench", "--n", "60", "--seed", "5")
        assert code == 0
        assert "agree" in out

    def test_large_skips_oracle(self, capsys):
        code, out, _ = run(capsys, "bench", "--n", "5000", "--seed", "5")
        assert code == 0
        assert "skipped" in out


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
