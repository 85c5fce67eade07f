"""Reports, serialization round-trips, CLI behavior, cache."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from semicoh.cache import cache_get, cache_key, cache_put
from semicoh.engines import build_table
from semicoh.fixtures import fixture_by_name, fixture_suite
from semicoh.groups import GroupSpec
from semicoh.iojson import (
    group_to_json_dict,
    parse_group_document,
    parse_table,
    render_table,
)
from semicoh.report import compare_report, render_report_json, render_report_markdown

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = Path(__file__).resolve().parent / "golden" / "z5_z6_compare.json"


def run_cli(*args, env_extra=None):
    import os

    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "semicoh.cli", *args],
        capture_output=True,
        text=True,
        cwd=ROOT,
        env=env,
    )


def test_parse_group_document_roundtrip():
    for fixture in fixture_suite():
        if not fixture.valid:
            continue
        doc = json.dumps(group_to_json_dict(fixture.spec))
        spec = parse_group_document(doc)
        assert spec.phi == fixture.spec.phi
        assert (spec.n, spec.m) == (fixture.spec.n, fixture.spec.m)


def test_parse_group_document_big_integers_as_strings():
    doc = json.dumps({"n": 1, "m": 2, "phi": [["-1"]]})
    spec = parse_group_document(doc)
    assert spec.phi.data == ((-1,),)


def test_parse_group_document_field_errors():
    from semicoh.errors import SpecInputError

    with pytest.raises(SpecInputError) as err:
        parse_group_document(json.dumps({"n": 2, "m": 2, "phi": [[1, 0]]}))
    assert "phi" in str(err.value)
    with pytest.raises(SpecInputError) as err:
        parse_group_document("{not json")
    assert "line" in str(err.value)


def test_table_roundtrip():
    for engine in ("oracle", "formula-published", "formula-corrected"):
        table = build_table(fixture_by_name("p3").spec, 5, engine)
        assert parse_table(render_table(table)) == table


def test_report_deterministic():
    spec = fixture_by_name("p3").spec
    a = render_report_json(compare_report(spec, 6))
    b = render_report_json(compare_report(spec, 6))
    assert a == b


def test_flagship_golden_report():
    spec = fixture_by_name("z5_z6").spec
    text = render_report_json(compare_report(spec, 12))
    assert text == GOLDEN.read_text(encoding="utf-8")


def test_report_never_masks_disagreement():
    spec = fixture_by_name("z5_z6").spec
    report = compare_report(spec, 8)
    listed = {(r["degree"], r["prime"]) for r in report["torsion"]}
    # every mismatching cell appears with all engine values
    from semicoh.oracle import e2_table
    from semicoh.torsion import assemble_p_torsion

    oracle = e2_table(spec, 8)
    for l in range(9):
        for p in spec.primes:
            o = oracle.groups[l].p_multiplicity(p)
            pub = assemble_p_torsion(spec, p, l, "published")
            cor = assemble_p_torsion(spec, p, l, "corrected")
            if pub != o or cor != o:
                assert (l, p) in listed
    for row in report["torsion"]:
        assert set(row) >= {
            "degree", "prime", "published", "corrected",
            "corrected_alt_cutoff", "oracle",
        }


def test_fixture_suite_compare_completes_and_ranks_agree():
    for fixture in fixture_suite():
        if not fixture.valid:
            continue
        spec = fixture.spec
        report = compare_report(spec, spec.n + 3)
        assert report["ranks"]["all_agree"], fixture.name
        md = render_report_markdown(report)
        assert "Erratum notes" in md


def test_cli_analyze_oracle_json(tmp_path):
    result = run_cli(
        "analyze", "--engine", "oracle", "--format", "json", "--no-cache",
        "fixtures/dinfty.json",
    )
    assert result.returncode == 0, result.stderr
    doc = json.loads(result.stdout)
    assert doc["groups"][2]["torsion"] == [2, 2]


def test_cli_analyze_both_engines_md():
    result = run_cli(
        "analyze", "--max-degree", "8", "--engine", "both", "--no-cache",
        "fixtures/z5_z6.json",
    )
    assert result.returncode == 0, result.stderr
    assert "formula-published" in result.stdout
    assert "formula-corrected" in result.stdout
    assert "oracle" in result.stdout


def test_cli_analyze_csv():
    result = run_cli(
        "analyze", "--format", "csv", "--max-degree", "4", "--no-cache",
        "fixtures/p3.json",
    )
    assert result.returncode == 0, result.stderr
    header = result.stdout.splitlines()[0]
    assert header.startswith("degree,")
    assert "oracle_theta3" in header


def test_cli_validation_exit_code():
    result = run_cli("analyze", "fixtures/m4_reject.json")
    assert result.returncode == 2
    assert "square" in result.stderr.lower() or "2^2" in result.stderr


def test_cli_internal_invariant_exit_code():
    # the order-6 planar action has non-integral orbit coefficients; a direct
    # formula-engine analyze surfaces that as an internal invariant violation
    result = run_cli(
        "analyze", "--engine", "formula", "--variant", "corrected", "--no-cache",
        "fixtures/p6.json",
    )
    assert result.returncode == 3
    assert "not an integer" in result.stderr


def test_cli_dimension_exit_code(tmp_path):
    doc = {"n": 25, "m": 2, "phi": [[1 if i == j else 0 for j in range(25)] for i in range(25)]}
    path = tmp_path / "big.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    result = run_cli("analyze", "--engine", "oracle", "--no-cache", str(path))
    assert result.returncode == 4


def test_cli_compare_and_subcommands():
    for cmd in (
        ["compare", "--max-degree", "6", "--format", "json", "--no-cache"],
        ["rank", "--format", "json", "--no-cache"],
        ["rst", "--format", "json"],
        ["isotropy", "--format", "json"],
        ["census", "--format", "json"],
    ):
        result = run_cli(*cmd, "fixtures/z5_z6.json")
        assert result.returncode == 0, (cmd, result.stderr)
        json.loads(result.stdout)


def test_cli_compare_prime_filter():
    result = run_cli(
        "compare", "--max-degree", "6", "--prime", "3", "--format", "json",
        "--no-cache", "fixtures/z5_z6.json",
    )
    assert result.returncode == 0
    doc = json.loads(result.stdout)
    assert doc["torsion"]
    assert all(row["prime"] == 3 for row in doc["torsion"])


def test_cli_determinism():
    args = ("compare", "--max-degree", "8", "--format", "json", "--no-cache",
            "fixtures/z5_z6.json")
    a = run_cli(*args)
    b = run_cli(*args)
    assert a.stdout == b.stdout


def test_cli_fixtures_listing():
    result = run_cli("fixtures")
    assert result.returncode == 0
    for name in ("dinfty", "z5_z6", "m4_reject"):
        assert name in result.stdout


def test_cache_roundtrip(tmp_path, monkeypatch):
    monkeypatch.setenv("SEMICOH_CACHE_DIR", str(tmp_path))
    spec = fixture_by_name("p3").spec
    table = build_table(spec, 5, "oracle")
    key = cache_key(spec, "oracle", 5)
    cache_put(key, render_table(table))
    hit = cache_get(key)
    assert hit is not None
    assert parse_table(hit) == table
    # a different degree is a different key
    assert cache_get(cache_key(spec, "oracle", 6)) is None


def test_cli_cache_hit_equals_recompute(tmp_path):
    env = {"SEMICOH_CACHE_DIR": str(tmp_path)}
    args = ("analyze", "--engine", "oracle", "--format", "json", "--max-degree", "6",
            "fixtures/p3.json")
    cold = run_cli(*args, env_extra=env)
    warm = run_cli(*args, env_extra=env)
    fresh = run_cli(*args, "--no-cache", env_extra=env)
    assert cold.returncode == warm.returncode == fresh.returncode == 0
    assert cold.stdout == warm.stdout == fresh.stdout
    assert list(Path(tmp_path).glob("*.json"))
