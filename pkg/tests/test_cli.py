"""Command dispatch, CSV shapes, and byte stability."""

import pytest

from tausworthe.cli import dispatch
from tausworthe.params import entry_for, write_params_file


def run(capsys, argv):
    code = dispatch(argv)
    out = capsys.readouterr().out
    return code, out


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        dispatch(["tvalue", "--no-such-flag"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        dispatch([])


def test_verify_table_structural_pass(capsys):
    code, out = run(capsys, ["verify-table"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("# tausworthe")
    assert lines[2] == "m,check,expected,actual,pass"
    body = lines[3:]
    assert len(body) == 23 * 9  # nine structural checks per entry
    assert all(ln.endswith(",true") for ln in body)


def test_tvalue_matches_bundled_profile(capsys):
    code, out = run(capsys, ["tvalue", "--m", "10"])
    assert code == 0
    rows = [ln.split(",") for ln in out.splitlines() if ln and not ln.startswith("#")]
    header, *body = rows
    assert header == ["m", "s", "t", "l", "gap"]
    t_by_s = {int(r[1]): r[2] for r in body if r[0] == "10"}
    expected = entry_for(10).expected_t
    for s in range(2, 21):
        assert int(t_by_s[s]) == expected[s]
    assert body[-1][0] == "delta" and body[-1][1] == "2"


def test_tvalue_from_params_file(tmp_path, capsys):
    path = tmp_path / "p.txt"
    write_params_file(path, entry_for(11).params)
    code, out = run(capsys, ["tvalue", "--params-file", str(path), "--smax", "4"])
    assert code == 0
    assert f"# parameters file:{path}" in out
    assert "11,2,0," in out


def test_generate_formats_and_stability(capsys):
    code, hex_out = run(capsys, ["generate", "--m", "10", "--count", "8"])
    assert code == 0
    code, hex_again = run(capsys, ["generate", "--m", "10", "--count", "8"])
    assert hex_out == hex_again  # byte-stable
    words = [ln for ln in hex_out.splitlines() if not ln.startswith("#")]
    assert len(words) == 8 and all(w.startswith("0x") and len(w) == 10 for w in words)

    code, bin_out = run(capsys, ["generate", "--m", "10", "--count", "2", "--format", "binary"])
    bits = [ln for ln in bin_out.splitlines() if not ln.startswith("#")]
    assert all(len(b) == 32 and set(b) <= {"0", "1"} for b in bits)

    code, dec_out = run(capsys, ["generate", "--m", "10", "--count", "2", "--format", "dec"])
    vals = [float(ln) for ln in dec_out.splitlines() if not ln.startswith("#")]
    assert all(0.0 <= v < 1.0 for v in vals)


def test_search_ranked_output(capsys):
    code, out = run(capsys, ["search", "--m", "10", "--top", "5"])
    assert code == 0
    lines = [ln for ln in out.splitlines() if not ln.startswith("#")]
    assert lines[0] == "rank,path,p,q,sigma," + ",".join(
        f"t{s}" for s in range(3, 11)
    ) + ",delta"
    assert len(lines) == 6
    first = lines[1].split(",")
    assert first[0] == "1"
    assert len(first[1]) == 10  # path bits
    assert len(first[2]) == 11 and len(first[3]) == 10  # coefficient strings


def test_search_census_output(capsys):
    code, out = run(capsys, ["search", "--m", "10", "--census"])
    assert code == 0
    lines = [ln for ln in out.splitlines() if not ln.startswith("#")]
    assert lines[0] == "mode,t3,count"
    modes = {ln.split(",")[0] for ln in lines[1:]}
    assert modes == {"steps13", "primitive"}


def test_search_no_survivors_exit_1(capsys):
    code = dispatch(["search", "--m", "2", "--w", "32"])
    capsys.readouterr()
    assert code == 1  # every sigma is below the word size


def test_experiment_gauss_csv(capsys):
    code, out = run(
        capsys,
        ["experiment", "gauss", "--m", "10", "--replicates", "3", "--seed", "7"],
    )
    assert code == 0
    assert "# seed 7" in out
    lines = [ln for ln in out.splitlines() if not ln.startswith("#")]
    assert lines[0] == "replicate,ex1,ex2,ex1x2"
    assert len(lines) == 3 + 3  # rows plus summary block
    code, again = run(
        capsys,
        ["experiment", "gauss", "--m", "10", "--replicates", "3", "--seed", "7"],
    )
    assert out == again


def test_experiment_pump_csv(capsys):
    code, out = run(
        capsys,
        ["experiment", "pump", "--m", "12", "--replicates", "2", "--source", "iid"],
    )
    assert code == 0
    lines = [ln for ln in out.splitlines() if not ln.startswith("#")]
    assert lines[0].startswith("replicate,lambda1,") and lines[0].endswith(",beta")
    assert "param,variance" in lines
    assert len([ln for ln in lines if ln.startswith("lambda")]) == 10
