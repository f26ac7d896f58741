"""Command-line interface: golden outputs, JSON payloads, exit codes."""

import json

from noncross.cli import main
from noncross.verify import SUITES, VerifyReport


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse exits for --version and usage errors
        code = exc.code or 0
    out, err = capsys.readouterr()
    return code, out, err


class TestEnumerate:
    def test_text(self, capsys):
        code, out, err = run(capsys, "enumerate", "3")
        assert code == 0 and err == ""
        assert out.splitlines() == [
            "3: 1 | 2 | 3",
            "3: 1 | 2 3",
            "3: 1 2 | 3",
            "3: 1 2 3",
            "3: 1 3 | 2",
        ]

    def test_count(self, capsys):
        code, out, _ = run(capsys, "enumerate", "8", "--count")
        assert code == 0 and out.strip() == "1430"

    def test_json_matches_text(self, capsys):
        _, text_out, _ = run(capsys, "enumerate", "3")
        code, json_out, _ = run(capsys, "enumerate", "3", "--json")
        data = json.loads(json_out)
        assert code == 0
        assert data["n"] == 3 and data["count"] == 5
        from noncross import NoncrossingPartition

        rebuilt = [
            str(NoncrossingPartition(3, blocks)) for blocks in data["partitions"]
        ]
        assert rebuilt == text_out.splitlines()

    def test_negative_size_is_a_usage_error(self, capsys):
        code, out, err = run(capsys, "enumerate", "-3")
        assert code == 2 and out == "" and "error:" in err


class TestUnaryCommands:
    def test_kreweras(self, capsys):
        code, out, _ = run(capsys, "kreweras", "4: 1 | 2 | 3 4")
        assert code == 0 and out.strip() == "4: 1 2 4 | 3"

    def test_kreweras_relative(self, capsys):
        code, out, _ = run(
            capsys, "kreweras", "4: 1 | 2 | 3 4", "--relative", "4: 1 | 2 3 4"
        )
        assert code == 0 and out.strip() == "4: 1 | 2 4 | 3"

    def test_kreweras_json(self, capsys):
        code, out, _ = run(capsys, "kreweras", "--json", "3: 1 2 | 3")
        assert json.loads(out) == {"n": 3, "blocks": [[1], [2, 3]]}

    def test_power_and_root(self, capsys):
        code, out, _ = run(capsys, "power", "3: 1 2 | 3", "2")
        assert out.strip() == "6: 1 2 3 4 | 5 6"
        code, out, _ = run(capsys, "root", "6: 1 2 3 4 | 5 6", "2")
        assert out.strip() == "3: 1 2 | 3"

    def test_root_without_a_root_is_undefined_not_an_error(self, capsys):
        code, out, _ = run(capsys, "root", "4: 1 2 3 | 4", "2")
        assert code == 0 and out.strip() == "undefined"
        code, out, _ = run(capsys, "root", "--json", "4: 1 2 3 | 4", "2")
        assert code == 0 and json.loads(out) is None

    def test_malformed_partition_is_a_usage_error(self, capsys):
        code, out, err = run(capsys, "kreweras", "3: 1 4 | 2")
        assert code == 2 and "error:" in err


class TestComposeShuffle:
    def test_compose(self, capsys):
        code, out, _ = run(capsys, "compose", "3: 1 2 | 3", "3: 1 | 2 3")
        assert code == 0 and out.strip() == "3: 1 2 3"

    def test_compose_undefined(self, capsys):
        code, out, _ = run(capsys, "compose", "3: 1 | 2 3", "3: 1 2 | 3")
        assert code == 0 and out.strip() == "undefined"
        code, out, _ = run(capsys, "compose", "--json", "3: 1 | 2 3", "3: 1 2 | 3")
        assert code == 0 and json.loads(out) is None

    def test_shuffle_worked_example(self, capsys):
        code, out, _ = run(
            capsys, "shuffle", "--period", "3", "6: 1 5 6 | 2 4 | 3", "3: 1 | 2 3"
        )
        assert code == 0 and out.strip() == "9: 1 7 8 | 2 5 | 3 | 4 | 6 9"

    def test_shuffle_json_accepts_json_input(self, capsys):
        code, out, _ = run(
            capsys,
            "shuffle",
            "--period",
            "3",
            "--json",
            '{"n": 3, "blocks": [[1, 2], [3]]}',
            "3: 1 | 2 3",
        )
        assert code == 0
        assert json.loads(out) == {"n": 6, "blocks": [[1, 3], [2], [4, 6], [5]]}

    def test_admissible(self, capsys):
        code, out, _ = run(capsys, "admissible", "--period", "3", "3: 1 2 | 3", "3: 1 | 2 3")
        assert code == 0 and out.strip() == "true"
        code, out, _ = run(capsys, "admissible", "--period", "3", "3: 1 | 2 3", "3: 1 2 | 3")
        assert code == 0 and out.strip() == "false"


class TestBijection:
    def test_tuple_to_kpreserving_and_back(self, capsys):
        code, out, _ = run(
            capsys, "bijection", "--from", "tuple", "--to", "kpreserving",
            "3: 1 2 | 3", "3: 1 | 2 3",
        )
        assert code == 0 and out.strip() == "6: 1 3 | 2 | 4 6 | 5"
        code, out, _ = run(
            capsys, "bijection", "--from", "kpreserving", "--to", "tuple",
            "--parts", "2", "6: 1 3 | 2 | 4 6 | 5",
        )
        assert out.splitlines() == ["3: 1 2 | 3", "3: 1 | 2 3"]

    def test_tuple_to_multichain(self, capsys):
        code, out, _ = run(
            capsys, "bijection", "--from", "tuple", "--to", "multichain",
            "3: 1 2 | 3", "3: 1 | 2 3",
        )
        assert out.splitlines() == ["3: 1 2 | 3", "3: 1 2 3"]

    def test_tuple_to_complete_appends_a_factor(self, capsys):
        code, out, _ = run(
            capsys, "bijection", "--from", "tuple", "--to", "complete",
            "3: 1 2 | 3", "3: 1 | 2 3",
        )
        assert out.splitlines() == ["3: 1 2 | 3", "3: 1 | 2 3", "3: 1 | 2 | 3"]

    def test_round_trip_through_completing(self, capsys):
        code, out, _ = run(
            capsys, "bijection", "--from", "tuple", "--to", "completing",
            "3: 1 2 | 3", "3: 1 | 2 3",
        )
        comp = out.strip()
        assert comp == "9: 1 4 | 2 | 3 | 5 8 | 6 | 7 | 9"
        code, out, _ = run(
            capsys, "bijection", "--from", "completing", "--to", "tuple",
            "--parts", "2", comp,
        )
        assert out.splitlines() == ["3: 1 2 | 3", "3: 1 | 2 3"]

    def test_inadmissible_input_is_a_usage_error(self, capsys):
        code, out, err = run(
            capsys, "bijection", "--from", "tuple", "--to", "kpreserving",
            "3: 1 | 2 3", "3: 1 2 | 3",
        )
        assert code == 2 and "error:" in err


class TestNumericCommands:
    def test_moebius_full_interval(self, capsys):
        code, out, _ = run(capsys, "moebius", "--lattice", "ncp", "--n", "4")
        assert code == 0 and out.strip() == "-5"

    def test_moebius_interval_table(self, capsys):
        code, out, _ = run(capsys, "moebius", "--lattice", "ncp", "--n", "3", "--all")
        lines = out.splitlines()
        assert len(lines) == 12  # one line per interval of NCP(3)
        assert lines[0] == "[3: 1 | 2 | 3 ; 3: 1 | 2 | 3] -> 1"
        assert "[3: 1 | 2 | 3 ; 3: 1 2 3] -> 2" in lines

    def test_moebius_integers_is_the_classical_function(self, capsys):
        code, out, _ = run(capsys, "moebius", "--lattice", "integers", "--bound", "12")
        got = dict(line.split(" -> ") for line in out.splitlines())
        assert got["6"] == "1" and got["4"] == "0" and got["7"] == "-1"

    def test_moebius_json(self, capsys):
        code, out, _ = run(capsys, "moebius", "--json", "--lattice", "ncp", "--n", "3")
        assert json.loads(out) == {"numerator": 2, "denominator": 1}

    def test_cumulants_from_moments(self, capsys):
        code, out, _ = run(capsys, "cumulants", "1", "1", "1", "1")
        assert out.splitlines() == ["1", "0", "0", "0"]

    def test_moments_from_cumulants(self, capsys):
        code, out, _ = run(capsys, "moments", "0", "1", "0", "0")
        assert out.splitlines() == ["0", "1", "0", "2"]

    def test_rational_io(self, capsys):
        code, out, _ = run(capsys, "cumulants", "1", "1/2")
        assert out.splitlines() == ["1", "-1/2"]
        code, out, _ = run(capsys, "cumulants", "--json", "1", "5/2")
        assert json.loads(out) == [
            {"numerator": 1, "denominator": 1},
            {"numerator": 3, "denominator": 2},
        ]

    def test_round_trip_through_the_cli(self, capsys):
        _, moments, _ = run(capsys, "moments", "1/3", "2", "-1", "4")
        back_args = ["cumulants"] + moments.split()
        _, kappa, _ = run(capsys, *back_args)
        assert kappa.splitlines() == ["1/3", "2", "-1", "4"]


class TestSimplicial:
    def test_all_checks_pass(self, capsys):
        code, out, _ = run(capsys, "simplicial", "--instance", "ncp", "--n", "3", "--check", "all")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 6
        assert all(line.startswith("PASS") for line in lines)

    def test_integer_instance(self, capsys):
        code, out, _ = run(
            capsys, "simplicial", "--instance", "integers", "--bound", "12",
            "--check", "decalage",
        )
        assert code == 0
        assert all(line.startswith("PASS") for line in out.splitlines())

    def test_json_reports(self, capsys):
        code, out, _ = run(
            capsys, "simplicial", "--instance", "ncp", "--n", "2", "--check", "identities", "--json"
        )
        data = json.loads(out)
        assert isinstance(data, list) and all(r["passed"] for r in data)


class TestVerify:
    def test_pass_is_exit_zero(self, capsys):
        code, out, _ = run(capsys, "verify", "enumeration", "--n", "4")
        assert code == 0
        assert out.splitlines()[-1].endswith("0 failed")

    def test_list(self, capsys):
        code, out, _ = run(capsys, "verify", "--list")
        assert code == 0 and "partial-monoid" in out.split()

    def test_unknown_suite_is_a_usage_error(self, capsys):
        code, out, err = run(capsys, "verify", "no-such-suite")
        assert code == 2 and "no-such-suite" in err

    def test_failure_is_exit_one(self, capsys):
        def synthetic():
            return [
                VerifyReport(
                    suite="synthetic", law="always fails", params={},
                    checked=1, counterexample="constructed for the exit-code test",
                )
            ]

        SUITES["synthetic"] = synthetic
        try:
            code, out, _ = run(capsys, "verify", "synthetic")
        finally:
            del SUITES["synthetic"]
        assert code == 1
        assert "FAIL" in out and "1 failed" in out

    def test_json_reports(self, capsys):
        code, out, _ = run(capsys, "verify", "enumeration", "--n", "4", "--json")
        data = json.loads(out)
        assert isinstance(data, list) and all(r["passed"] for r in data)
        assert {r["suite"] for r in data} == {"enumeration"}


class TestTopLevel:
    def test_version(self, capsys):
        code, out, _ = run(capsys, "--version")
        assert code == 0 and out.strip() == "noncross 0.1.0"

    def test_unknown_command(self, capsys):
        code, out, err = run(capsys, "nosuchcmd")
        assert code == 2 and "invalid choice" in err

    def test_no_command_prints_usage(self, capsys):
        code, out, err = run(capsys)
        assert code == 2
        assert "usage:" in (out + err)
