"""End-to-end command line tests through main(argv)."""

import json

import pytest

from galcert.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert err == ""
    return code, json.loads(out)


def test_document_envelope(capsys):
    code, doc = run_json(capsys, "classes", "--group", "S3")
    assert code == 0
    assert list(doc.keys()) == ["schema", "kind", "config", "result"]
    assert doc["schema"] == "galcert/1"
    assert doc["kind"] == "classes"
    assert doc["config"]["group"] == "S3"
    assert doc["result"]["count"] == 3


def test_classes_tsv_golden(capsys):
    code, out, err = run(capsys, "classes", "--group", "Z/4", "--format", "tsv")
    assert code == 0
    assert out == (
        "label\trepresentative\tsize\telement_order\trational\n"
        "1A\t()\t1\t1\ttrue\n"
        "2A\t(1 3)(2 4)\t1\t2\ttrue\n"
        "4A\t(1 2 3 4)\t1\t4\tfalse\n"
        "4B\t(1 4 3 2)\t1\t4\tfalse\n"
    )


def test_rational_classes_filters(capsys):
    code, doc = run_json(capsys, "rational-classes", "--group", "Z/4")
    assert code == 0
    labels = [row["label"] for row in doc["result"]["classes"]]
    assert labels == ["1A", "2A"]
    assert all(row["rational"] for row in doc["result"]["classes"])


def test_generator_spec_classes(capsys):
    code, doc = run_json(
        capsys, "classes", "--group", "gens:(1 2),(1 2 3)", "--degree", "3"
    )
    assert code == 0
    assert doc["result"]["count"] == 3
    assert doc["result"]["order"] == 6


def test_certify_s4_positive(capsys):
    code, doc = run_json(
        capsys, "certify", "--group", "S4", "--classes", "2A,3A,4A"
    )
    assert code == 0
    res = doc["result"]
    assert res["verdict"] == "positive"
    assert res["rigid"] is True
    assert res["count"] == 1
    assert res["rational_flags"] == [True, True, True]
    assert res["centre_trivial"] is True
    assert len(res["witness"]) == 3
    assert res["orbits"] == [res["witness"]]


def test_certify_negative_is_exit_zero(capsys):
    # S4 with vector (2B,2B,2B): double transpositions land in V4, no generation
    code, doc = run_json(
        capsys, "certify", "--group", "S4", "--classes", "2B,2B,2B"
    )
    assert code == 0
    assert doc["result"]["verdict"] == "negative"
    assert doc["result"]["count"] == 0
    assert doc["result"]["witness"] is None


def test_rigid_tsv_key_value(capsys):
    code, out, err = run(
        capsys, "rigid", "--group", "S4", "--classes", "2A,3A,4A",
        "--format", "tsv",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "key\tvalue"
    table = dict(line.split("\t") for line in lines[1:])
    assert table["rigid"] == "true"
    assert table["count"] == "1"


def test_nielsen_tsv_entry_columns(capsys):
    code, out, err = run(
        capsys, "nielsen", "--group", "S3", "--classes", "2A,2A,3A",
        "--format", "tsv",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "index\tentry_1\tentry_2\tentry_3"
    assert len(lines) == 2  # rigid vector, one orbit
    assert lines[1].startswith("0\t")


def test_braid_orbits_shapes(capsys):
    code, doc = run_json(capsys, "braid-orbits", "--group", "S3", "--r", "3")
    assert code == 0
    res = doc["result"]
    assert res["tuple_count"] == sum(o["size"] for o in res["orbits"])
    for orbit in res["orbits"]:
        assert len(orbit["class_multiset"]) == 3
        assert len(orbit["representative"]) == 3

    code, out, err = run(
        capsys, "braid-orbits", "--group", "S3", "--r", "3", "--format", "tsv"
    )
    assert out.splitlines()[0] == "orbit\tsize\tclass_multiset\trepresentative"


def test_monodromy_realized(capsys):
    code, doc = run_json(
        capsys, "monodromy", "--datum", "4;3,1;2,1,1",
        "--target", "full_symmetric",
    )
    assert code == 0
    res = doc["result"]
    assert res["status"] == "realized"
    assert res["parity_ok"] is True
    assert res["genus"] == 0
    assert res["group_order"] == 24
    assert len(res["witness"]) == 3


def test_monodromy_parity_none_exits_zero(capsys):
    code, doc = run_json(capsys, "monodromy", "--datum", "2,1,1;4;4")
    assert code == 0
    assert doc["result"]["status"] == "none"
    assert doc["result"]["parity_ok"] is False
    assert doc["result"]["witness"] is None


def test_bogomolov_fields(capsys):
    code, doc = run_json(capsys, "bogomolov", "--group", "Q8")
    assert code == 0
    res = doc["result"]
    assert list(res.keys()) == [
        "group", "order", "h2_invariants", "b0_invariants",
        "bicyclic_count", "elapsed_ms",
    ]
    assert res["order"] == 8
    assert res["h2_invariants"] == []
    assert res["b0_invariants"] == []
    assert res["bicyclic_count"] == 5
    assert res["elapsed_ms"] is None


def test_bogomolov_timings_opt_in(capsys):
    code, doc = run_json(capsys, "bogomolov", "--group", "Z/2xZ/2", "--timings")
    assert code == 0
    assert isinstance(doc["result"]["elapsed_ms"], int)
    assert doc["result"]["h2_invariants"] == [2]


def test_noether_single_rational(capsys):
    code, doc = run_json(capsys, "noether-cyclic", "5")
    assert code == 0
    res = doc["result"]
    assert res["plans"] is True
    assert res["lenstra_verdict"] == "rational"
    assert res["witnesses"][0]["prime"] == 5
    assert res["witnesses"][0]["conductor"] == 4


def test_noether_eight_not_rational(capsys):
    code, doc = run_json(capsys, "noether-cyclic", "8")
    assert code == 0
    res = doc["result"]
    assert res["plans"] is False
    assert res["lenstra_verdict"] == "not_rational"
    assert res["witnesses"] == []


def test_noether_unknown_exits_two(capsys):
    code, doc = run_json(capsys, "noether-cyclic", "47")
    assert code == 2
    assert doc["result"]["lenstra_verdict"] == "unknown"
    assert any("budget" in r for r in doc["result"]["reasons"])


def test_noether_sweep_tsv(capsys):
    code, out, err = run(
        capsys, "noether-cyclic", "--sweep", "1:12", "--format", "tsv"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n\tplans\tlenstra"
    assert len(lines) == 13
    assert lines[8] == "8\tfalse\tnot_rational"
    assert lines[12] == "12\ttrue\trational"


def test_noether_requires_one_mode(capsys):
    code, out, err = run(capsys, "noether-cyclic")
    assert code == 1
    assert err.startswith("error: ")
    code, out, err = run(capsys, "noether-cyclic", "5", "--sweep", "1:3")
    assert code == 1


def test_bad_group_is_input_error(capsys):
    code, out, err = run(capsys, "classes", "--group", "F99")
    assert code == 1
    assert err.startswith("error: ")
    assert out == ""


def test_bad_class_label_is_input_error(capsys):
    code, out, err = run(capsys, "nielsen", "--group", "S3", "--classes", "9Z")
    assert code == 1
    assert "9Z" in err


def test_budget_overflow_exits_two(capsys):
    code, out, err = run(capsys, "bogomolov", "--group", "S5")
    assert code == 2
    assert "limit" in err


def test_seedless_is_accepted(capsys):
    code, doc = run_json(capsys, "noether-cyclic", "5", "--seedless")
    assert code == 0


def test_seedless_rejects_timings(capsys):
    code, out, err = run(
        capsys, "bogomolov", "--group", "Q8", "--seedless", "--timings"
    )
    assert code == 1
    assert "--seedless" in err


def test_seedless_rejects_a_value(capsys):
    with pytest.raises(SystemExit):
        main(["classes", "--group", "S3", "--seedless=yes"])
    capsys.readouterr()


def test_output_stable_across_runs_and_threads(capsys):
    outputs = set()
    for argv in (
        ["certify", "--group", "S4", "--classes", "2A,3A,4A"],
        ["certify", "--group", "S4", "--classes", "2A,3A,4A"],
        ["certify", "--group", "S4", "--classes", "2A,3A,4A", "--threads", "4"],
    ):
        code, out, err = run(capsys, *argv)
        assert code == 0
        outputs.add(out)
    assert len(outputs) == 1


def test_figures_written(tmp_path, capsys):
    braid = tmp_path / "braid.png"
    code, out, err = run(
        capsys, "braid-orbits", "--group", "S3", "--r", "3",
        "--figure", str(braid),
    )
    assert code == 0
    assert braid.stat().st_size > 0

    sweep = tmp_path / "sweep.png"
    code, out, err = run(
        capsys, "noether-cyclic", "--sweep", "1:10", "--figure", str(sweep)
    )
    assert code == 0
    assert sweep.stat().st_size > 0
