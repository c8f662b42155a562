import json

from nomvote import Committees, Dictatorship, GeneralizedMedian, Median, Quota, StatusQuo, TopsOnlyTable
from nomvote.cli import main, parse_rule_config, serialize_rule

MAJORITY3 = (0b011, 0b101, 0b110)


def write_config(tmp_path, cfg, name="rule.json"):
    path = tmp_path / name
    path.write_text(json.dumps(cfg))
    return str(path)


MEDIAN_NOM = {"family": "median", "n": 3, "space": {"kind": "linear", "m": 3}, "alpha": [0, 2]}
MEDIAN_BAD = {"family": "median", "n": 3, "space": {"kind": "linear", "m": 3}, "alpha": [0, 0]}
QUOTA_NOM = {"family": "quota", "n": 3, "space": {"kind": "subsets", "K": 2}, "quota": [2, 2]}


class TestConfigRoundTrip:
    def test_all_families(self, line3, pairspace):
        rules = [
            Median(3, line3, (0, 2)),
            GeneralizedMedian(2, line3, (2, 1, 1, 0)),
            Committees(3, pairspace, (MAJORITY3, (0b111,))),
            Quota(3, pairspace, (2, 2)),
            StatusQuo(2, line3, 1),
            Dictatorship(2, line3, 0),
            TopsOnlyTable(2, line3, tuple(range(3)) * 3),
        ]
        for rule in rules:
            parsed, errors = parse_rule_config(serialize_rule(rule))
            assert errors == []
            assert parsed == rule

    def test_bitstring_layout(self, line3):
        # leftmost character is agent 0
        cfg = serialize_rule(GeneralizedMedian(2, line3, (2, 0, 1, 0)))
        assert cfg["ballots"]["10"] == 0  # agent 0's singleton
        assert cfg["ballots"]["01"] == 1  # agent 1's singleton

    def test_bad_family(self):
        rule, errors = parse_rule_config({"family": "borda", "n": 2})
        assert rule is None and "family" in errors[0]

    def test_bad_bitstring(self):
        cfg = {"family": "gmv", "n": 2, "space": {"kind": "linear", "m": 3},
               "ballots": {"111": 0}}
        rule, errors = parse_rule_config(cfg)
        assert rule is None and any("ballots" in e for e in errors)


class TestCheck:
    def test_nom_rule_exits_zero(self, tmp_path, capsys):
        assert main(["check", write_config(tmp_path, QUOTA_NOM)]) == 0
        out = capsys.readouterr().out
        assert "nom (direct scan): yes" in out
        assert "nom (veto test):   yes" in out
        assert "nom (family test): yes" in out

    def test_manipulable_rule_exits_one_with_witness(self, tmp_path, capsys):
        assert main(["check", write_config(tmp_path, MEDIAN_BAD)]) == 1
        out = capsys.readouterr().out
        assert "nom (direct scan): no" in out
        assert "worst_case" in out

    def test_malformed_config_exits_two(self, tmp_path, capsys):
        cfg = dict(MEDIAN_NOM, alpha=[2, 0])
        assert main(["check", write_config(tmp_path, cfg)]) == 2
        assert "nondecreasing" in capsys.readouterr().err

    def test_budget_exceeded_exits_three(self, tmp_path, capsys):
        assert main(["check", write_config(tmp_path, MEDIAN_NOM),
                     "--budget-profiles", "4"]) == 3
        assert "budget" in capsys.readouterr().err

    def test_structured_report(self, tmp_path, capsys):
        assert main(["check", write_config(tmp_path, MEDIAN_NOM),
                     "--format", "structured", "--axioms", "anonymity"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["verdicts"]["nom_brute"] is True
        assert report["verdicts"]["nom_veto"] is True
        assert report["verdicts"]["family_predicate"]["nom"] is True
        assert report["verdicts"]["axioms"]["anonymity"] is True
        assert report["discrepancy"] is False
        assert report["rule"] == MEDIAN_NOM


class TestOptionSetCommand:
    def test_median_agreement(self, tmp_path, capsys):
        cfg = {"family": "median", "n": 3, "space": {"kind": "linear", "m": 3},
               "alpha": [1, 1]}
        assert main(["option-set", write_config(tmp_path, cfg),
                     "--agent", "0", "--top", "0"]) == 0
        out = capsys.readouterr().out
        assert "{0, 1}" in out and "agreement:   yes" in out

    def test_status_quo_brute_only(self, tmp_path, capsys):
        cfg = {"family": "status_quo", "n": 2, "space": {"kind": "linear", "m": 3},
               "anchor": 0}
        assert main(["option-set", write_config(tmp_path, cfg),
                     "--agent", "1", "--top", "2"]) == 0
        out = capsys.readouterr().out
        assert "{0, 2}" in out and "no closed form" in out

    def test_committee_brute_only_structured(self, tmp_path, capsys):
        cfg = {"family": "committees", "n": 3, "space": {"kind": "subsets", "K": 2},
               "committees": [["110", "101", "011"], ["110", "101", "011"]]}
        assert main(["option-set", write_config(tmp_path, cfg),
                     "--agent", "0", "--top", "1", "--format", "structured"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["closed"] is None and report["note"]
        assert report["brute"] == [0, 1, 2, 3]

    def test_agent_out_of_range(self, tmp_path, capsys):
        assert main(["option-set", write_config(tmp_path, MEDIAN_NOM),
                     "--agent", "7", "--top", "0"]) == 2


class TestVetoCommand:
    def test_status_quo(self, tmp_path, capsys):
        cfg = {"family": "status_quo", "n": 2, "space": {"kind": "linear", "m": 3},
               "anchor": 0}
        assert main(["veto", write_config(tmp_path, cfg)]) == 0
        out = capsys.readouterr().out
        assert "V={1, 2}" in out and "SV={1, 2}" in out
        assert "every veto strong (NOM test): yes" in out

    def test_closed_agreement_shown(self, tmp_path, capsys):
        assert main(["veto", write_config(tmp_path, MEDIAN_BAD)]) == 0
        assert "closed form agrees: yes" in capsys.readouterr().out


class TestWitnessCommand:
    def test_counts_exact_with_cap(self, tmp_path, capsys):
        path = write_config(tmp_path, MEDIAN_BAD)
        assert main(["witness", path, "--cap", "1", "--format", "structured"]) == 1
        capped = json.loads(capsys.readouterr().out)
        assert main(["witness", path, "--cap", "-1", "--format", "structured"]) == 1
        full = json.loads(capsys.readouterr().out)
        assert capped["counts"] == full["counts"]
        assert capped["total"] == full["total"] == sum(full["counts"].values())
        assert len(capped["items"]) <= len(full["items"])

    def test_nom_rule_empty(self, tmp_path, capsys):
        assert main(["witness", write_config(tmp_path, QUOTA_NOM)]) == 0
        assert "0 total" in capsys.readouterr().out


class TestValidateCommand:
    def test_ok(self, tmp_path, capsys):
        assert main(["validate", write_config(tmp_path, QUOTA_NOM)]) == 0
        assert "ok" in capsys.readouterr().out

    def test_field_path_in_error(self, tmp_path, capsys):
        cfg = dict(QUOTA_NOM, quota=[0, 2])
        assert main(["validate", write_config(tmp_path, cfg)]) == 2
        assert "quota[0]" in capsys.readouterr().err


class TestSweepCommand:
    def test_median_rows(self, tmp_path):
        out = tmp_path / "sweep.csv"
        assert main(["sweep", "--family", "median", "--n", "3", "--m", "3",
                     "--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert lines[0].startswith("family,")
        assert len(lines) == 1 + 6 + 1  # header, six ballot vectors, trailer
        assert lines[-1] == "# rules=6 discrepancies=0"

    def test_quota_nom_set(self, tmp_path):
        out = tmp_path / "sweep.csv"
        assert main(["sweep", "--family", "quota", "--n", "3", "--objects", "2",
                     "--out", str(out)]) == 0
        rows = [l.split(",") for l in out.read_text().splitlines()[1:-1]]
        nom_rows = [r[3] for r in rows if r[6] == "yes"]
        assert nom_rows == ["2|2"]

    def test_byte_identical_reruns(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        args = ["sweep", "--family", "table", "--n", "2", "--m", "3",
                "--samples", "40", "--seed", "5"]
        assert main(args + ["--out", str(a)]) == 0
        assert main(args + ["--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_exhaustive_tables(self, tmp_path):
        out = tmp_path / "tables.csv"
        assert main(["sweep", "--family", "table", "--n", "2", "--m", "2",
                     "--exhaustive", "--out", str(out)]) == 0
        assert out.read_text().splitlines()[-1] == "# rules=16 discrepancies=0"

    def test_missing_size_flag(self, capsys):
        assert main(["sweep", "--family", "median", "--n", "3"]) == 2
