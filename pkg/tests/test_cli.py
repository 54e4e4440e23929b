"""Command-line behavior: exit codes, JSON output, spec round-trips."""

from __future__ import annotations

import json

import pytest

from eggert.cli import main
from eggert.specio import (
    SpecError,
    parse_algebra_spec,
    parse_any_spec,
    parse_semigroup_spec,
)

SPEC_5_6 = {
    "kind": "quotient",
    "of": {
        "kind": "subalgebra",
        "of": {
            "kind": "truncated_poly",
            "p": 2,
            "vars": 1,
            "degree": 24,
            "commutative": True,
        },
        "generators": ["x^4", "x^5"],
    },
    "relators": [[[13, 1], [14, 1]]],
}

SPEC_5_6_SEMIGROUP = {
    "kind": "contracted",
    "semigroup": {
        "kind": "numerical",
        "generators": [4, 5],
        "bound": 24,
        "relations": [{"identify": [13, 14]}],
    },
    "p": 2,
}


def write_spec(tmp_path, payload):
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


class TestSpecParsing:
    def test_semigroup_roundtrip(self):
        raw = {
            "kind": "numerical",
            "generators": [4, 5],
            "bound": 24,
            "relations": [{"identify": [13, 14]}, {"collapse": 20}],
        }
        spec = parse_semigroup_spec(raw)
        again = parse_semigroup_spec(spec.to_json())
        assert spec == again

    def test_algebra_roundtrip(self):
        spec = parse_algebra_spec(SPEC_5_6)
        assert parse_algebra_spec(spec.to_json()) == spec

    def test_composite_semigroup_builds(self):
        raw = {
            "kind": "product",
            "left": {"kind": "cyclic", "bound": 5},
            "right": {"kind": "group_with_zero", "order": 2},
        }
        spec = parse_semigroup_spec(raw)
        s = spec.build()
        assert s.size == 11
        assert parse_semigroup_spec(spec.to_json()) == spec

    def test_rees_spec(self):
        raw = {
            "kind": "rees",
            "of": {"kind": "cyclic", "bound": 6},
            "ideal": [4, 5, 6],
        }
        s = parse_semigroup_spec(raw).build()
        assert s.size == 4

    def test_pointer_paths_in_errors(self):
        with pytest.raises(SpecError) as err:
            parse_semigroup_spec(
                {"kind": "numerical", "generators": [4, "x"], "bound": 5}
            )
        assert "/generators/1" in str(err.value)
        with pytest.raises(SpecError) as err:
            parse_algebra_spec(
                {"kind": "quotient", "of": SPEC_5_6["of"], "relators": [[[13]]]}
            )
        assert "/relators/0/0" in str(err.value)

    def test_unknown_kind(self):
        with pytest.raises(SpecError) as err:
            parse_any_spec({"kind": "banana"})
        assert "/kind" in str(err.value)

    def test_contracted_builds(self):
        alg = parse_algebra_spec(SPEC_5_6_SEMIGROUP).build()
        assert alg.dim == 12


class TestVerifyPaperCommand:
    def test_default_run_passes(self, capsys):
        assert main(["verify-paper"]) == 0
        out = capsys.readouterr().out
        assert "PASS" in out and "FAIL" not in out
        assert "note:" in out  # the 5.6 discrepancy stays visible

    def test_json_output(self, capsys):
        assert main(["verify-paper", "--json", "--only", "5.7a"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["all_passed"] is True
        assert doc["results"][0]["id"] == "5.7a"
        assert doc["results"][0]["computed"] == {"dim": 10, "image_dim": 5, "deficit": 0}
        assert "wall_time_s" in doc and "config_hash" in doc

    def test_only_unknown_id(self, capsys):
        assert main(["verify-paper", "--only", "9.9"]) == 2


class TestSearchCommand:
    def test_single_record_no_relation(self, capsys):
        code = main(
            ["search", "--gens", "2,3", "--bound-max", "10", "--scheme", "none", "--exponent", "2"]
        )
        assert code == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 2  # one record plus the summary
        record = json.loads(lines[0])
        assert record["deficit"] == -1
        summary = json.loads(lines[1])["summary"]
        assert summary["total"] == 1 and summary["max_deficit"] == -1

    def test_identify_sweep_includes_13(self, capsys):
        code = main(
            ["search", "--gens", "4,5", "--bound-max", "30", "--exponent", "2", "--scheme", "identify"]
        )
        assert code == 0
        lines = capsys.readouterr().out.strip().splitlines()
        records = [json.loads(line) for line in lines[:-1]]
        zero_13 = [
            r
            for r in records
            if r["deficit"] == 0 and r["provenance"]["param"] == 13
        ]
        assert zero_13

    def test_workers_byte_identical(self, capsys):
        argv_base = [
            "search",
            "--gens",
            "pairs:5",
            "--bound-min",
            "4",
            "--bound-max",
            "18",
            "--exponent",
            "2",
            "--scheme",
            "identify,none",
        ]
        assert main(argv_base + ["--workers", "1"]) == 0
        first = capsys.readouterr().out
        assert main(argv_base + ["--workers", "4"]) == 0
        second = capsys.readouterr().out
        assert first == second
        summary = json.loads(first.strip().splitlines()[-1])["summary"]
        assert summary["max_deficit"] <= 0

    def test_bad_gens(self, capsys):
        assert main(["search", "--gens", "0,5", "--bound-max", "10"]) == 2

    def test_bad_bounds(self, capsys):
        assert (
            main(["search", "--gens", "2,3", "--bound-max", "5", "--bound-min", "9"]) == 2
        )

    def test_bad_scheme(self, capsys):
        assert (
            main(["search", "--gens", "2,3", "--bound-max", "5", "--scheme", "zigzag"]) == 2
        )

    def test_top_limits_lines(self, capsys):
        code = main(
            ["search", "--gens", "2,3", "--bound-min", "4", "--bound-max", "20",
             "--exponent", "2", "--scheme", "identify", "--top", "3"]
        )
        assert code == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 4  # three records plus summary
        summary = json.loads(lines[-1])["summary"]
        assert summary["total"] > 3

    def test_fail_on_positive_not_triggered(self, capsys):
        code = main(
            ["search", "--gens", "2,3", "--bound-max", "12", "--exponent", "2",
             "--scheme", "all", "--fail-on-positive"]
        )
        assert code == 0


class TestReportCommand:
    def test_algebra_spec_report(self, tmp_path, capsys):
        path = write_spec(tmp_path, SPEC_5_6)
        assert main(["report", "--spec", path, "--exponent", "2"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report == {
            "deficit": 0,
            "dim": 12,
            "image_dim": 6,
            "method": "frobenius-linear",
            "ratio": [6, 12],
        }

    def test_contracted_spec_matches_quotient_route(self, tmp_path, capsys):
        path = write_spec(tmp_path, SPEC_5_6_SEMIGROUP)
        assert main(["report", "--spec", path, "--exponent", "2"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert (report["dim"], report["image_dim"], report["deficit"]) == (12, 6, 0)

    def test_semigroup_spec_report(self, tmp_path, capsys):
        path = write_spec(
            tmp_path,
            {
                "kind": "numerical",
                "generators": [2, 5],
                "bound": 14,
                "relations": [{"identify": [11, 12]}],
            },
        )
        assert main(["report", "--spec", path, "--exponent", "2"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["method"] == "semigroup-exact"
        assert (report["dim"], report["image_dim"], report["deficit"]) == (10, 5, 0)

    def test_dump_spec_roundtrip(self, tmp_path, capsys):
        path = write_spec(tmp_path, SPEC_5_6)
        assert main(["report", "--spec", path, "--dump-spec"]) == 0
        dumped = json.loads(capsys.readouterr().out)
        assert parse_any_spec(dumped) == parse_any_spec(SPEC_5_6)

    def test_missing_file(self, capsys):
        assert main(["report", "--spec", "/nonexistent/spec.json"]) == 66

    def test_malformed_json(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        assert main(["report", "--spec", str(path)]) == 65

    def test_schema_violation_pointer(self, tmp_path, capsys):
        path = write_spec(
            tmp_path, {"kind": "numerical", "generators": [], "bound": 5}
        )
        assert main(["report", "--spec", path]) == 65
        assert "/generators" in capsys.readouterr().err


class TestIdentityCommand:
    def test_pass(self, capsys):
        assert main(["identity", "--n", "3", "--p", "5"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out == {"n": 3, "p": 5, "identity_holds": True}

    def test_char_too_small(self, capsys):
        assert main(["identity", "--n", "5", "--p", "3"]) == 2
        assert "CharTooSmall" in capsys.readouterr().err

    def test_not_prime(self, capsys):
        assert main(["identity", "--n", "2", "--p", "6"]) == 2
        assert "NotPrime" in capsys.readouterr().err


class TestProbeCommand:
    def test_v_mode_default_subspace(self, tmp_path, capsys):
        spec = {"kind": "truncated_poly", "p": 2, "vars": 1, "degree": 6, "commutative": True}
        path = write_spec(tmp_path, spec)
        assert main(["probe", "--spec", path, "--question", "v", "--exponent", "2"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["hypothesis_holds"] is True
        assert report["bound_holds"] is True

    def test_w_mode_with_subspace(self, tmp_path, capsys):
        spec = {"kind": "truncated_poly", "p": 2, "vars": 1, "degree": 6, "commutative": True}
        path = write_spec(tmp_path, spec)
        code = main(
            ["probe", "--spec", path, "--question", "w", "--exponent", "2",
             "--subspace", "x^2"]
        )
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        assert report["hypothesis_holds"] is True and report["bound_holds"] is True

    def test_u_requires_m(self, tmp_path, capsys):
        spec = {"kind": "truncated_poly", "p": 2, "vars": 1, "degree": 6, "commutative": True}
        path = write_spec(tmp_path, spec)
        assert main(["probe", "--spec", path, "--question", "u"]) == 2

    def test_semigroup_spec_rejected(self, tmp_path, capsys):
        path = write_spec(tmp_path, {"kind": "cyclic", "bound": 5})
        assert main(["probe", "--spec", path, "--question", "v"]) == 2

    def test_unknown_label(self, tmp_path, capsys):
        spec = {"kind": "truncated_poly", "p": 2, "vars": 1, "degree": 4, "commutative": True}
        path = write_spec(tmp_path, spec)
        code = main(
            ["probe", "--spec", path, "--question", "v", "--subspace", "x^99"]
        )
        assert code == 65


class TestUsageErrors:
    def test_no_command(self):
        assert main([]) == 2

    def test_unknown_flag(self):
        assert main(["identity", "--n", "3", "--p", "5", "--bogus"]) == 2
