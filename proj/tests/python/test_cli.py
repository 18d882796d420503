"""End-to-end checks of the command-line tool: exit codes, JSON schemas."""

import json
import os
import pathlib
import subprocess

import pytest

CLI = os.environ.get("SPLITSYS_CLI")
SCHEMAS = pathlib.Path(__file__).resolve().parents[2] / "schemas"

pytestmark = pytest.mark.skipif(CLI is None, reason="SPLITSYS_CLI not set")


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], input=stdin, capture_output=True,
                          text=True)


def gen(family, *args):
    out = run("gen", family, *args)
    assert out.returncode == 0, out.stderr
    return out.stdout


def matches_schema(value, schema):
    """Validator for the schema subset the repo commits to
    (type/enum/required/properties/items/oneOf)."""
    if "oneOf" in schema:
        return sum(1 for s in schema["oneOf"] if matches_schema(value, s)) == 1
    if "enum" in schema:
        return value in schema["enum"]
    if "type" in schema:
        expected = {"object": dict, "array": list, "string": str,
                    "boolean": bool, "null": type(None)}.get(schema["type"])
        if schema["type"] == "integer":
            if not isinstance(value, int) or isinstance(value, bool):
                return False
        elif schema["type"] == "number":
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                return False
        elif not isinstance(value, expected):
            return False
    for key in schema.get("required", []):
        if key not in value:
            return False
    for key, sub in schema.get("properties", {}).items():
        if key in value and not matches_schema(value[key], sub):
            return False
    if "items" in schema and isinstance(value, list):
        return all(matches_schema(item, schema["items"]) for item in value)
    return True


def validated(output, schema_name):
    schema = json.loads((SCHEMAS / schema_name).read_text())
    value = json.loads(output)
    assert matches_schema(value, schema), f"{schema_name}: {output}"
    return value


def test_gen_and_check_injective_exit_codes(tmp_path):
    net = tmp_path / "net.txt"
    net.write_text(gen("network5"))
    assert run("check", "injective", str(net)).returncode == 0

    tree = tmp_path / "tree.txt"
    tree.write_text(gen("tree5"))
    bad = run("check", "injective", str(tree))
    assert bad.returncode == 1
    assert "not injective" in bad.stdout
    assert "collision" in bad.stdout


def test_methods_agree_on_every_family(tmp_path):
    families = [("trivial", ["--n", "5"]), ("small-splits", ["--n", "6"]),
                ("max-circular", ["--n", "7"]), ("half-grid", ["--n", "6"]),
                ("id8-witness", []), ("network5", []), ("k33-pairs", []),
                ("nonconsec-pairs", ["--n", "6"]),
                ("random", ["--n", "6", "--seed", "3", "--p", "0.4"])]
    for family, args in families:
        f = tmp_path / f"{family}.txt"
        f.write_text(gen(family, *args))
        dicing = run("check", "injective", "--method", "dicing", str(f))
        brute = run("check", "injective", "--method", "bruteforce", str(f))
        assert dicing.returncode == brute.returncode, family


def test_dim_and_stdin():
    out = run("dim", "-", stdin=gen("id8-witness"))
    assert out.returncode == 0
    assert out.stdout.strip() == "3"


def test_search_json_report():
    out = run("search", "id", "--n", "6", "--json")
    assert out.returncode == 0
    report = validated(out.stdout, "search-report.schema.json")
    assert report["value"] == 3
    assert report["quantity"] == "ID"
    assert report["method"] == "exhaustive"
    assert report["nodes_explored"] > 0


def test_every_json_verb_validates(tmp_path):
    net = tmp_path / "net.txt"
    net.write_text(gen("network5"))
    tree = tmp_path / "tree.txt"
    tree.write_text(gen("tree5"))

    validated(run("check", "injective", "--json", str(net)).stdout,
              "check-result.schema.json")
    validated(run("check", "injective", "--json", str(tree)).stdout,
              "check-result.schema.json")
    validated(run("check", "injective", "--method", "bruteforce", "--json",
                  str(tree)).stdout, "check-result.schema.json")
    validated(run("check", "rooted-injective", "--root", "1", "--json",
                  str(net)).stdout, "check-result.schema.json")
    validated(run("dim", "--json", str(net)).stdout, "dim-result.schema.json")
    validated(run("median", str(net), "--triple", "1,2,3", "--json").stdout,
              "median-result.schema.json")
    validated(run("buneman", str(net), "--json").stdout,
              "buneman-summary.schema.json")
    for quantity, n in [("id", "4"), ("id2", "9"), ("idr", "5")]:
        validated(run("search", quantity, "--n", n, "--json").stdout,
                  "search-report.schema.json")
    validated(run("scan", "bijective", "--n", "3", "--json").stdout,
              "scan-result.schema.json")


def test_rooted_check():
    out = run("check", "rooted-injective", "--root", "r", "-",
              stdin=gen("half-grid", "--n", "7"))
    assert out.returncode == 0
    out = run("check", "rooted-injective", "--root", "1", "-",
              stdin=gen("tree5"))
    assert out.returncode == 1


def test_dice_checks():
    assert run("check", "dice6", "-", stdin=gen("k33-pairs")).returncode == 1
    assert run("check", "dice5", "-", stdin=gen("path-pairs")).returncode == 1
    assert run("check", "dice4", "-",
               stdin=gen("max-circular", "--n", "6")).returncode == 0


def test_buneman_dot(tmp_path):
    dot = tmp_path / "g.dot"
    f = tmp_path / "net.txt"
    f.write_text(gen("network5"))
    out = run("buneman", str(f), "--dot", str(dot), "--json")
    assert out.returncode == 0
    summary = json.loads(out.stdout)
    assert summary["vertices"] == 16
    assert dot.read_text().startswith("graph buneman {")


def test_median_verb(tmp_path):
    f = tmp_path / "net.txt"
    f.write_text(gen("network5"))
    out = run("median", str(f), "--triple", "1,2,3", "--json")
    assert out.returncode == 0
    med = json.loads(out.stdout)
    assert med["triple"] == ["1", "2", "3"]
    assert len(med["assignments"]) == 10


def test_scan_verb():
    out = run("scan", "bijective", "--n", "4", "--json")
    assert out.returncode == 0
    result = json.loads(out.stdout)
    assert result["examined"] == 8
    assert len(result["found"]) == 3


def test_usage_and_resource_exit_codes(tmp_path):
    assert run("frobnicate").returncode == 2
    assert run("check", "injective", "/nonexistent/path").returncode == 2
    assert run("gen", "no-such-family").returncode == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("ground: 1,2,3\n1,2|2,3\n")
    parse = run("check", "injective", str(bad))
    assert parse.returncode == 2
    assert "both sides" in parse.stderr
    f = tmp_path / "mc6.txt"
    f.write_text(gen("max-circular", "--n", "6"))
    assert run("buneman", str(f), "--budget", "4").returncode == 3


def test_round_trip_via_cli(tmp_path):
    text = gen("max-circular", "--n", "6")
    f = tmp_path / "mc.txt"
    f.write_text(text)
    # parse + print is byte-identical for generated output
    dim_out = run("dim", str(f))
    assert dim_out.returncode == 0
    assert dim_out.stdout.strip() == "3"
    assert run("check", "injective", str(f)).returncode == 0
