import json
from importlib import resources

import pytest
from jsonschema import Draft202012Validator

from divrank import cli


@pytest.fixture(scope="module")
def validator():
    schema = json.loads(
        resources.files("divrank").joinpath("report_schema.json").read_text()
    )
    Draft202012Validator.check_schema(schema)
    return Draft202012Validator(schema)


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestProfile:
    def test_text(self, capsys):
        code, out, _ = run_cli(capsys, "profile", "36")
        assert code == 0
        assert "k = 33/58" in out
        assert "divisors = 1 2 3 4 6 9 12 18 36" in out

    def test_unit(self, capsys):
        code, out, _ = run_cli(capsys, "profile", "1")
        assert code == 0
        assert "k = 0" in out
        assert "index ratio number = yes" in out

    def test_45(self, capsys):
        code, out, _ = run_cli(capsys, "profile", "45", "--format", "json")
        assert code == 0
        assert json.loads(out)["k"] == "19/7"

    def test_csv_column_order(self, capsys):
        code, out, _ = run_cli(capsys, "profile", "12", "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n,tau,sigma_e,sigma_o,k,is_index_ratio"
        assert lines[1] == "12,6,18,10,9/5,false"

    def test_malformed_input_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["profile", "zebra"])
        assert exc.value.code == 2
        with pytest.raises(SystemExit) as exc:
            cli.main(["profile", "0"])
        assert exc.value.code == 2

    def test_json_schema(self, capsys, validator):
        _, out, _ = run_cli(capsys, "profile", "360", "--format", "json")
        validator.validate(json.loads(out))


class TestTable:
    def test_single_class_text(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--max", "20", "--k", "2")
        assert code == 0
        assert "2 | 2, 6, 8, 10, 14, 18" in out

    def test_empty_row(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--max", "10", "--k", "7109/15862")
        assert code == 0
        assert "(none)" in out

    def test_unparseable_k_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["table", "--k", "zebra"])
        assert exc.value.code == 2

    def test_json_shape(self, capsys, validator):
        code, out, _ = run_cli(capsys, "table", "--max", "100", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        validator.validate(doc)
        assert doc["classes"][0]["k"] == "0"  # n = 1 has the smallest member
        by_k = {c["k"]: c for c in doc["classes"]}
        assert by_k["2"]["first_members"] == [2, 6, 8, 10, 14, 18, 22, 26]

    def test_csv(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--max", "10", "--format", "csv",
                               "--k", "2", "--k", "2/5")
        lines = out.splitlines()
        assert lines[0] == "k,count,first_members,last_members"
        assert lines[1] == "2,4,2 6 8 10,2 6 8 10"
        assert lines[2] == "2/5,1,4,4"

    def test_normalizes_filter(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--max", "10", "--format", "csv",
                               "--k", "18/10")
        assert code == 0
        assert out.splitlines()[1].startswith("9/5,")


class TestVerifyAndScan:
    def test_verify_exit_zero(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "upper-bound", "--max", "2000")
        assert code == 0
        assert "status = verified" in out

    def test_unknown_check_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["verify", "zebra"])
        assert exc.value.code == 2

    def test_bad_conjecture_id_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["scan", "4"])
        assert exc.value.code == 2

    def test_scan_conjecture1_clean_below_counterexample(self, capsys):
        code, out, _ = run_cli(capsys, "scan", "1", "--max", "2000")
        assert code == 0

    def test_scan_conjecture1_finds_counterexample(self, capsys):
        # exit code 1 is the "counterexample found" contract
        code, out, _ = run_cli(capsys, "scan", "1", "--max", "3000", "--format", "json")
        assert code == 1
        doc = json.loads(out)
        assert doc["status"] == "violated"
        assert doc["violations"][0]["n"] == 2431

    def test_report_json_schema(self, capsys, validator):
        for argv in (("verify", "lower-bound", "--max", "500"),
                     ("verify", "multiplier", "--samples", "20"),
                     ("scan", "3", "--max", "4000")):
            _, out, _ = run_cli(capsys, *argv, "--format", "json")
            validator.validate(json.loads(out))

    def test_verify_csv(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "unit-fraction", "--max", "100",
                               "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "check,lo,hi,status,applicable,elapsed_ms,n,expected,actual"
        assert lines[1].startswith("unit-fraction,4,100,verified,")

    def test_timing_flag(self, capsys):
        _, out, _ = run_cli(capsys, "verify", "pairing", "--max", "200", "--format", "json")
        assert json.loads(out)["elapsed_ms"] is None
        _, out, _ = run_cli(capsys, "verify", "pairing", "--max", "200",
                            "--format", "json", "--timing")
        assert isinstance(json.loads(out)["elapsed_ms"], int)

    def test_inapplicable_is_exit_zero(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "lower-bound", "--max", "3")
        assert code == 0
        assert "status = inapplicable" in out


class TestIrn:
    def test_text_matches_published_prefix(self, capsys):
        code, out, _ = run_cli(capsys, "irn", "--max", "32")
        assert code == 0
        assert out.strip() == ("1, 2, 3, 5, 6, 7, 8, 10, 11, 13, 14, 15, 17, 18, "
                               "19, 21, 22, 23, 26, 27, 29, 31, 32")

    def test_unit(self, capsys):
        code, out, _ = run_cli(capsys, "irn", "--max", "1")
        assert out.strip() == "1"

    def test_json_schema(self, capsys, validator):
        _, out, _ = run_cli(capsys, "irn", "--max", "50", "--format", "json")
        doc = json.loads(out)
        validator.validate(doc)
        assert doc["count"] == len(doc["members"])

    def test_csv_rows_are_profiles(self, capsys):
        _, out, _ = run_cli(capsys, "irn", "--max", "8", "--format", "csv")
        lines = out.splitlines()
        assert lines[0] == "n,tau,sigma_e,sigma_o,k,is_index_ratio"
        assert lines[-1] == "8,4,10,5,2,true"
        assert all(line.endswith(",true") for line in lines[1:])


class TestOutAndDeterminism:
    def test_out_writes_payload(self, capsys, tmp_path):
        out_file = tmp_path / "t.json"
        code, out, err = run_cli(capsys, "table", "--max", "50",
                                 "--format", "json", "--out", str(out_file))
        assert code == 0
        assert out == ""
        assert json.loads(out_file.read_text())["hi"] == 50

    def test_workers_do_not_change_bytes(self, capsys, tmp_path):
        blobs = []
        for w in ("1", "2", "8"):
            f = tmp_path / f"w{w}.json"
            run_cli(capsys, "verify", "upper-bound", "--max", "20000",
                    "--workers", w, "--chunk-size", "4096",
                    "--format", "json", "--out", str(f))
            blobs.append(f.read_bytes())
        assert blobs[0] == blobs[1] == blobs[2]

    def test_checkpoint_interrupt_resume_identical(self, capsys, tmp_path):
        direct = tmp_path / "direct.json"
        run_cli(capsys, "table", "--max", "2000", "--chunk-size", "512",
                "--format", "json", "--out", str(direct))

        ck = tmp_path / "t.ck"
        resumed = tmp_path / "resumed.json"
        code, out, err = run_cli(capsys, "table", "--max", "2000",
                                 "--chunk-size", "512", "--checkpoint", str(ck),
                                 "--max-chunks", "1", "--format", "json",
                                 "--out", str(resumed))
        assert code == 0
        assert "paused" in err
        assert not resumed.exists()
        code, _, _ = run_cli(capsys, "table", "--max", "2000",
                             "--chunk-size", "512", "--checkpoint", str(ck),
                             "--format", "json", "--out", str(resumed))
        assert code == 0
        assert resumed.read_bytes() == direct.read_bytes()
        assert not ck.exists()

    def test_mismatched_checkpoint_exits_2(self, capsys, tmp_path):
        ck = tmp_path / "t.ck"
        run_cli(capsys, "table", "--max", "2000", "--chunk-size", "512",
                "--checkpoint", str(ck), "--max-chunks", "1",
                "--out", str(tmp_path / "x.json"))
        code, _, err = run_cli(capsys, "table", "--max", "3000",
                               "--chunk-size", "512", "--checkpoint", str(ck))
        assert code == 2
        assert "configuration" in err


class TestConfigPrecedence:
    def test_config_file_supplies_defaults(self, capsys, tmp_path):
        cfg = tmp_path / "divrank.cfg"
        cfg.write_text("# defaults\nmax=32\nformat=json\n")
        code, out, _ = run_cli(capsys, "irn", "--config", str(cfg))
        assert code == 0
        assert json.loads(out)["limit"] == 32

    def test_cli_beats_config(self, capsys, tmp_path):
        cfg = tmp_path / "divrank.cfg"
        cfg.write_text("max=32\n")
        code, out, _ = run_cli(capsys, "irn", "--config", str(cfg),
                               "--max", "10", "--format", "json")
        assert json.loads(out)["limit"] == 10

    def test_env_beats_config(self, capsys, tmp_path, monkeypatch):
        cfg = tmp_path / "divrank.cfg"
        cfg.write_text("max=32\n")
        monkeypatch.setenv("DIVRANK_MAX", "12")
        code, out, _ = run_cli(capsys, "irn", "--config", str(cfg),
                               "--format", "json")
        assert json.loads(out)["limit"] == 12

    def test_env_alone(self, capsys, monkeypatch):
        monkeypatch.setenv("DIVRANK_FORMAT", "json")
        monkeypatch.setenv("DIVRANK_MAX", "5")
        code, out, _ = run_cli(capsys, "irn")
        assert json.loads(out)["members"] == [1, 2, 3, 5]

    def test_bad_env_value_exits_2(self, capsys, monkeypatch):
        monkeypatch.setenv("DIVRANK_MAX", "minus-nine")
        with pytest.raises(SystemExit) as exc:
            cli.main(["irn"])
        assert exc.value.code == 2

    def test_bad_config_line_exits_2(self, capsys, tmp_path):
        cfg = tmp_path / "divrank.cfg"
        cfg.write_text("max 32\n")
        with pytest.raises(SystemExit) as exc:
            cli.main(["irn", "--config", str(cfg)])
        assert exc.value.code == 2

    def test_k_filter_from_config(self, capsys, tmp_path):
        cfg = tmp_path / "divrank.cfg"
        cfg.write_text("k=2/5,3/10\nmax=100\nformat=csv\n")
        code, out, _ = run_cli(capsys, "table", "--config", str(cfg))
        lines = out.splitlines()
        assert lines[1].startswith("2/5,1,4")
        assert lines[2].startswith("3/10,1,9")
