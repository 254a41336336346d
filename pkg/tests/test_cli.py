import json
from importlib import resources

import jsonschema
import pytest
from click.testing import CliRunner

from verlab.cli import main


@pytest.fixture(scope="module")
def schema():
    path = resources.files("verlab.data").joinpath("cli_schema.json")
    return json.loads(path.read_text())


def invoke(*args):
    return CliRunner().invoke(main, list(args))


def payload(result):
    return json.loads(result.output)


class TestFuseCommand:
    def test_documented_example(self):
        res = invoke("verp", "fuse", "-p", "5", "-a", "1", "-b", "3", "--json")
        assert res.exit_code == 0
        assert payload(res)["result"] == [{"L": 2, "mult": 1}]

    def test_text_mode(self):
        res = invoke("verp", "fuse", "-p", "5", "-a", "1", "-b", "3", "--text")
        assert res.exit_code == 0
        assert "L" in res.output


class TestPadicCommands:
    def test_finite(self):
        res = invoke("padic", "finite", "--top", "2")
        assert res.exit_code == 0
        assert payload(res)["result"] == {"dimplus": -2}

    def test_extend_ver8(self):
        res = invoke(
            "padic", "extend", "-p", "2", "--nlen", "4", "--dimv", "-2",
            "--dimvdual", "-2",
        )
        assert res.exit_code == 0
        assert payload(res)["result"] == {"dimplus_e": -5, "dimplus_e_dual": -1}

    def test_pow_and_recover_roundtrip(self):
        res = invoke("padic", "pow", "-p", "2", "--exp", "-6", "--prec", "31")
        coeffs = payload(res)["result"]["coeffs"]
        res2 = invoke("padic", "recover", "-p", "2", "--series", json.dumps(coeffs))
        out = payload(res2)["result"]
        assert out["exponent"]["signed_int"] == -6
        assert out["dimplus"]["signed_int"] == 6

    def test_prec_env_override(self):
        res = CliRunner().invoke(
            main,
            ["padic", "pow", "-p", "2", "--exp", "1"],
            env={"VERLAB_PREC": "10"},
        )
        assert payload(res)["result"]["truncation"] == 10


class TestErrors:
    def test_domain_error_exit_1(self):
        res = invoke("verp", "fuse", "-p", "5", "-a", "9", "-b", "0")
        assert res.exit_code == 1
        err = payload(res)["error"]
        assert err["name"] == "IndexOutOfRange"

    def test_usage_error_exit_2(self):
        res = invoke("verp", "fuse", "-p", "5")
        assert res.exit_code == 2

    def test_help_exit_0(self):
        res = invoke("--help")
        assert res.exit_code == 0
        assert "Usage" in res.output


class TestSchemaAndDeterminism:
    COMMANDS = [
        ["char", "weyl", "-m", "3"],
        ["char", "simple", "-p", "2", "-m", "3"],
        ["char", "tilt", "-p", "3", "-m", "5"],
        ["char", "mul", "--a", '{"1": 1}', "--b", '{"2": 1, "0": 1}'],
        ["char", "decompose", "--char", '{"2": 1, "0": 2}', "--basis", "weyl"],
        ["tilt", "fuse-decompose", "-p", "3", "-a", "1", "-b", "1"],
        ["verp", "fuse", "-p", "7", "-a", "2", "-b", "2"],
        ["verp", "oracle", "-p", "5", "-a", "1", "-b", "3", "-c", "2"],
        ["verp", "fpdim", "-p", "5", "-a", "1"],
        ["verp", "gd", "-p", "5", "-a", "1", "--nmax", "10"],
        ["verpn", "digits", "-p", "3", "-n", "2", "-i", "5"],
        ["verpn", "product", "-p", "3", "-n", "2", "--digits", "1,2"],
        ["verpn", "embed", "-p", "3", "-n", "1", "-i", "1"],
        ["verpn", "oddline", "-p", "3", "-n", "2"],
        ["verpn", "sympower", "-p", "3", "-n", "2", "-i", "4", "-k", "2"],
        ["padic", "pow", "-p", "3", "--exp", "-1", "--prec", "8"],
        ["padic", "finite", "--top", "2"],
        ["padic", "extend", "-p", "2", "--nlen", "4", "--dimv", "-2", "--dimvdual", "-2"],
        ["padic", "palindrome", "-p", "3", "--series", "[1, 1, 1]"],
        ["sgd", "estimate", "--provider", "binomial", "--m", "2", "--nmax", "256"],
        ["sgd", "diagnose", "--provider", "constant", "--nmax", "256"],
        ["verp", "fuse", "-p", "5", "-a", "9", "-b", "0"],  # error payload
    ]

    def test_payloads_validate(self, schema):
        for args in self.COMMANDS:
            res = invoke(*args)
            jsonschema.validate(payload(res), schema)

    def test_byte_identical_reruns(self):
        for args in self.COMMANDS:
            assert invoke(*args).output == invoke(*args).output


class TestSgdCommands:
    def test_estimate(self):
        res = invoke("sgd", "estimate", "--provider", "binomial", "--m", "3",
                     "--nmax", "4096")
        out = payload(res)["result"]
        assert out["classification"] == "polynomial"
        assert abs(out["final"] - 3.0) < 0.1

    def test_diagnose_missing_provider_arg(self):
        res = invoke("sgd", "estimate", "--provider", "binomial")
        assert res.exit_code == 2

    def test_csv(self, tmp_path):
        path = tmp_path / "rows.csv"
        path.write_text("n,length\n" + "\n".join(f"{n},1" for n in range(300)))
        res = invoke("sgd", "estimate", "--provider", "csv", "--csv", str(path),
                     "--nmax", "256")
        assert payload(res)["result"]["classification"] == "polynomial"
