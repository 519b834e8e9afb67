import json

from pispec.cli import main


def run(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_order(capsys):
    code, out, _ = run(capsys, "order", "A5")
    assert code == 0 and out.strip() == "60"


def test_order_alias_resolution(capsys):
    code, out, _ = run(capsys, "order", "L2(4)")
    assert code == 0 and out.strip() == "60"


def test_order_bad_name(capsys):
    code, out, err = run(capsys, "order", "L2(6)")
    assert code == 2 and out == "" and "prime power" in err


def test_order_not_simple(capsys):
    code, _, err = run(capsys, "order", "L2(3)")
    assert code == 2 and "not a simple group" in err


def test_usage_error(capsys):
    assert main(["no-such-command"]) == 1
    capsys.readouterr()


def test_spectrum(capsys):
    code, out, _ = run(capsys, "spectrum", "Sz(32)", "--bound", "41")
    assert code == 0 and out.strip() == "2^10 * 5^2 * 31 * 41"


def test_spectrum_cofactor(capsys):
    code, out, _ = run(capsys, "spectrum", "L2(7)", "--bound", "3")
    assert code == 0 and "cofactor 7" in out


def test_enumerate_dedup_modes(capsys):
    code, out_classes, _ = run(
        capsys, "enumerate", "--max-prime", "5", "--format", "json", "--dedup", "classes"
    )
    assert code == 0
    classes = {json.loads(line)["name"] for line in out_classes.splitlines()}
    assert classes == {"A5", "A6", "U4(2)"}

    code, out_names, _ = run(
        capsys, "enumerate", "--max-prime", "5", "--format", "json", "--dedup", "names"
    )
    assert code == 0
    names = {json.loads(line)["name"] for line in out_names.splitlines()}
    assert {"A5", "L2(4)", "L2(5)", "S4(3)"} <= names
    assert len(names) == 7


def test_enumerate_explicit_primes(capsys):
    code, out, _ = run(capsys, "enumerate", "--primes", "2,3", "--format", "json")
    assert code == 0 and out == ""


def test_enumerate_out_file(tmp_path, capsys):
    path = tmp_path / "census.json"
    code, out, _ = run(
        capsys, "enumerate", "--max-prime", "5", "--format", "json", "--out", str(path)
    )
    assert code == 0 and out == ""
    assert len(path.read_text().splitlines()) == 3


def test_sp_command(capsys):
    code, out, _ = run(capsys, "sp", "107", "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert record["generic"] and record["count"] == 3
    assert set(record["members"]) == {"L2(107)", "A107", "A108"}


def test_sp_rejects_composite(capsys):
    code, _, err = run(capsys, "sp", "10")
    assert code == 1 and "not prime" in err
