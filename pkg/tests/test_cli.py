import pytest

from folded_rs import cli, decoder
from folded_rs.frs import FoldedWord, canonical_params, encode
from folded_rs.poly import Poly

PARAMS = "13 2 3 12 2\n"


@pytest.fixture
def files(tmp_path):
    p = tmp_path / "params.txt"
    p.write_text(PARAMS)
    return tmp_path, p


def _run(capsys, argv):
    code = cli.main(argv)
    return code, capsys.readouterr()


def test_encode_examples(capsys, files):
    _, p = files
    code, out = _run(capsys, ["encode", "--params", str(p), "--message", "0"])
    assert code == 0 and out.out == "0 0 0\n" * 4
    code, out = _run(capsys, ["encode", "--params", str(p), "--message", "0 1"])
    assert code == 0
    assert out.out.splitlines()[0] == "1 2 4"


def test_encode_too_long(capsys, files):
    _, p = files
    code, out = _run(capsys, ["encode", "--params", str(p), "--message", "1 2 3"])
    assert code == 1 and "coefficients" in out.err


def test_decode_noiseless(capsys, files):
    tmp, p = files
    w = tmp / "w.txt"
    w.write_text(encode(canonical_params(), Poly(canonical_params().field, [3, 4])).to_text())
    code, out = _run(capsys, ["decode", "--params", str(p), "--k", "1", "--word", str(w)])
    assert code == 0
    assert "list_size: 1" in out.out and "list[1]: 3 4" in out.out
    assert "radius: 5/12" in out.out


def test_decode_split_word_with_radius(capsys, files):
    tmp, p = files
    w = tmp / "w.txt"
    # symbols 1-2 from f=0, symbols 3-4 from f=X
    P = canonical_params()
    a, b = encode(P, Poly.zero(P.field)), encode(P, Poly.x(P.field))
    w.write_text(FoldedWord(a.symbols[:2] + b.symbols[2:]).to_text())
    code, out = _run(capsys, ["decode", "--params", str(p), "--k", "2", "--word", str(w), "--radius", "5/8"])
    assert code == 0
    assert "list_size: 2" in out.out
    assert "not guaranteed" in out.out


def test_decode_bad_k(capsys, files):
    tmp, p = files
    w = tmp / "w.txt"
    w.write_text("0 0 0\n" * 4)
    code, _ = _run(capsys, ["decode", "--params", str(p), "--k", "4", "--word", str(w)])
    assert code == 1


def test_decode_malformed_word(capsys, files):
    tmp, p = files
    w = tmp / "w.txt"
    w.write_text("0 0\n")
    code, out = _run(capsys, ["decode", "--params", str(p), "--k", "2", "--word", str(w)])
    assert code == 1 and "line" in out.err


def test_decode_limit_exit(capsys, files):
    tmp, p = files
    w = tmp / "w.txt"
    w.write_text("0 0 0\n" * 4)
    code, _ = _run(capsys, ["decode", "--params", str(p), "--k", "1", "--word", str(w),
                            "--strategy", "exhaustive", "--limit", "0"])
    assert code == 3


def test_corrupt(capsys, files):
    tmp, p = files
    w = tmp / "w.txt"
    w.write_text("0 0 0\n" * 4)
    code, out = _run(capsys, ["corrupt", "--params", str(p), "--word", str(w), "--errors", "2", "--seed", "3"])
    assert code == 0
    rows = out.out.splitlines()
    assert sum(r != "0 0 0" for r in rows) == 2


def test_experiment_no_trials(capsys, tmp_path):
    cfg = tmp_path / "e.cfg"
    cfg.write_text("q=13\nm=3\nn=12\nmsg_len=2\nk=2\n")
    code, out = _run(capsys, ["experiment", str(cfg)])
    assert code == 0
    assert out.out == "trial,errors,subspace_dim,list_size,oracle_list_size,deficit_sum,bound_radius_num,bound_radius_den,pass\n"


def test_experiment_rows_and_summary(capsys, tmp_path):
    cfg = tmp_path / "e.cfg"
    cfg.write_text("q=13\nm=3\nn=12\nmsg_len=2\nk=2\ntrials=5\nerrors=1\n")
    code, out = _run(capsys, ["experiment", str(cfg), "--seed", "4"])
    rows = out.out.splitlines()
    assert code == 0 and len(rows) == 7
    assert rows[-1].startswith("summary,") and rows[-1].endswith(",1")


def test_experiment_bad_config(capsys, tmp_path):
    cfg = tmp_path / "e.cfg"
    cfg.write_text("q=13\nm=3\nbogus=1\n")
    code, out = _run(capsys, ["experiment", str(cfg)])
    assert code == 1 and "line 3" in out.err


def test_experiment_failure_exit(capsys, tmp_path, monkeypatch):
    real = decoder.decode

    def broken(*a, **kw):
        out = real(*a, **kw)
        out.list = []
        return out

    monkeypatch.setattr(decoder, "decode", broken)
    cfg = tmp_path / "e.cfg"
    cfg.write_text("q=13\nm=3\nn=12\nmsg_len=2\nk=2\ntrials=3\nerrors=0\n")
    code, out = _run(capsys, ["experiment", str(cfg)])
    assert code == 2
    assert out.out.splitlines()[-1].endswith(",0")


def test_bounds(capsys):
    code, out = _run(capsys, ["bounds", "--k", "2", "--m", "3", "--R", "1/6", "--csv"])
    assert code == 0
    header, row = out.out.splitlines()
    cells = dict(zip(header.split(","), row.split(",")))
    assert cells["radius"] == "1/2" and cells["frs_list_bound"] == "2" and cells["johnson"] == "johnson"


def test_bounds_needs_m_and_r(capsys):
    code, _ = _run(capsys, ["bounds", "--k", "2", "--m", "3"])
    assert code == 1


def test_usage_error(capsys):
    code, _ = _run(capsys, ["nonsense"])
    assert code == 1


def test_missing_file(capsys, tmp_path):
    code, out = _run(capsys, ["encode", "--params", str(tmp_path / "nope"), "--message", "0"])
    assert code == 1 and "cannot read" in out.err
