import json
import subprocess
import sys

import pytest

from conftest import FIXTURES, modular
from quasisym.cli import main
from quasisym.core import format_table, parse_table
from quasisym.groups import cyclic
from quasisym.linear import CensusReport


@pytest.fixture
def table_file(tmp_path):
    def write(t, name="t.txt"):
        path = tmp_path / name
        path.write_text(format_table(t))
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check(capsys, table_file):
    code, out, _ = run(capsys, "check", table_file(cyclic(4)))
    assert code == 0 and "order 4" in out


def test_check_not_latin(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2\n0 1\n0 1\n")
    code, out, err = run(capsys, "check", str(path))
    assert code == 1 and out == ""
    assert "NotLatinSquare" in err and "column 0" in err
    assert len(err.strip().splitlines()) == 1


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "check", str(tmp_path / "nope.txt"))
    assert code == 1 and err


def test_usage_errors(capsys, table_file):
    with pytest.raises(SystemExit) as exc:
        main(["parastrophe", table_file(cyclic(3)), "--sigma", "q"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    code, _, _ = run(capsys, "decompose", table_file(cyclic(3)), "--zero", "5")
    assert code == 2


def test_parastrophe_s_twice(capsys, table_file, tmp_path):
    t = modular(5, lambda x, y: 2 * x + y + 3)
    src = table_file(t)
    code, once, _ = run(capsys, "parastrophe", src, "--sigma", "s")
    assert code == 0
    mid = tmp_path / "mid.txt"
    mid.write_text(once)
    code, twice, _ = run(capsys, "parastrophe", str(mid), "--sigma", "s")
    assert code == 0
    assert parse_table(twice) == t
    assert twice.split() == format_table(t).split()


def test_sym(capsys, table_file):
    code, out, _ = run(capsys, "sym", table_file(modular(7, lambda x, y: 5 * x + 3 * y)), "--format", "json")
    assert code == 0
    assert json.loads(out) == {"symmetry_group": ["id", "sl", "sr"], "class": "strictly-semi-symmetric"}


def test_classify_z2(capsys, table_file):
    code, out, _ = run(capsys, "classify", table_file(cyclic(2)))
    assert code == 0 and out.splitlines()[0] == "totally-symmetric"
    code, out, _ = run(capsys, "classify", table_file(cyclic(2)), "--format", "json")
    data = json.loads(out)
    assert data["class"] == "totally-symmetric" and data["zero_independent"] is True


def test_classify_not_group_isotope(capsys):
    code, _, err = run(capsys, "classify", str(FIXTURES / "order5_not_group_isotope.txt"))
    assert code == 1 and "NotGroupIsotope" in err


def test_decompose(capsys, table_file):
    code, out, _ = run(capsys, "decompose", table_file(modular(7, lambda x, y: 3 * x + 5 * y + 1)), "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert (data["a"], data["zero"], data["order"]) == (1, 0, 7)
    assert data["alpha"] == [3 * x % 7 for x in range(7)]
    assert data["beta"] == [5 * x % 7 for x in range(7)]
    assert data["group_table"] == cyclic(7).tolist()


def test_census_json(capsys):
    code, out, _ = run(capsys, "census", "--prime", "7", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["counts"] == {"cs": 6, "ls": 6, "rs": 6, "ts": 1, "ss": 2, "as": 20}
    assert data["total"] == 41 and data["k"] == 2
    assert CensusReport.from_dict(data).to_json() == out
    assert out == (FIXTURES / "census_p7.json").read_text()


def test_census_csv_and_table(capsys):
    code, out, _ = run(capsys, "census", "--prime", "5", "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "class,alpha,beta,d"
    code, out, _ = run(capsys, "census", "--prime", "5")
    assert code == 0 and "19 linear isotopes" in out


def test_census_not_prime(capsys):
    code, out, err = run(capsys, "census", "--prime", "9")
    assert code == 1 and "NotPrime" in err and out == ""


def test_small_census(capsys):
    code, out, _ = run(capsys, "small-census", "--order", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["total"] == 5 and data["latin_squares"] == 12
    assert data["representatives"]["ts"] == [[2, 2, 0], [2, 2, 1]]
    assert CensusReport.from_dict(data).to_json() == out


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--modulus", "6", "--validate", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["validated"] is True and data["count"] == 5


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--max-order", "5", "--samples", "10", "--seed", "3")
    assert code == 0 and "0 failures" in out


def test_module_entry_point(tmp_path):
    path = tmp_path / "z2.txt"
    path.write_text("2\n0 1\n1 0\n")
    res = subprocess.run([sys.executable, "-m", "quasisym", "classify", str(path)], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("totally-symmetric")
