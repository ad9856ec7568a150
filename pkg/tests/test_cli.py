import pytest

from bandsep import formats
from bandsep.cli import main
from bandsep.graph import complete_binary_tree, cycle, path
from bandsep.tdecomp import validate_tree_decomposition


def write(tmp_path, name, g):
    p = tmp_path / name
    p.write_text(formats.write_gr(g))
    return str(p)


def test_gen_then_exact_bandwidth(tmp_path, capsys):
    out = str(tmp_path / "g.gr")
    assert main(["gen", "grid", "--k", "3", "-o", out]) == 0
    capsys.readouterr()
    assert main(["exact", "bw", "-g", out]) == 0
    assert capsys.readouterr().out.strip() == "3"
    assert main(["exact", "tw", "-g", out]) == 0
    assert capsys.readouterr().out.strip() == "3"


def test_gen_is_deterministic(tmp_path):
    a, b = str(tmp_path / "a.gr"), str(tmp_path / "b.gr")
    for target in (a, b):
        assert main(["gen", "random_bounded_degree", "--n", "30", "--degree", "3", "--seed", "5", "-o", target]) == 0
    assert open(a, "rb").read() == open(b, "rb").read()


def test_order_on_cycle_falls_back(tmp_path):
    g = write(tmp_path, "c.gr", cycle(100))
    out, cert = str(tmp_path / "o.txt"), str(tmp_path / "cert.txt")
    assert main(["order", "-g", g, "-o", out, "--cert", cert]) == 0
    assert formats.parse_ordering(open(out).read(), 100).order == tuple(range(100))
    assert "fallback: true" in open(cert).read()


def test_order_on_binary_tree(tmp_path):
    g = write(tmp_path, "t.gr", complete_binary_tree(9))
    out, cert = str(tmp_path / "o.txt"), str(tmp_path / "cert.txt")
    assert main(["order", "-g", g, "--scap", "1", "--provider", "centroid", "-o", out, "--cert", cert]) == 0
    text = open(cert).read()
    assert "fallback: false" in text and "b: 6" in text


def test_treedecomp_writes_valid_file(tmp_path):
    g = path(30)
    gp = write(tmp_path, "p.gr", g)
    out = str(tmp_path / "p.td")
    assert main(["treedecomp", "-g", gp, "--eps", "1/4", "-o", out]) == 0
    assert validate_tree_decomposition(g, formats.parse_td(open(out).read(), g))


def test_separate_and_expansion(tmp_path, capsys):
    gp = write(tmp_path, "p.gr", path(9))
    assert main(["separate", "-g", gp, "--method", "bfs"]) == 0
    assert "S: [5]" in capsys.readouterr().out
    assert main(["separate", "-g", gp, "--method", "expansion", "--eps", "1/2"]) == 0
    assert main(["separate", "-g", gp, "--method", "expansion"]) == 2
    assert main(["expansion", "-g", gp, "--eps", "1/4"]) == 0
    assert "non-expanding set" in capsys.readouterr().out


def test_report_is_byte_stable(tmp_path):
    gp = write(tmp_path, "g.gr", cycle(9))
    a, b = str(tmp_path / "a.txt"), str(tmp_path / "b.txt")
    assert main(["report", "-g", gp, "--full-exact", "-o", a]) == 0
    assert main(["report", "-g", gp, "--full-exact", "-o", b]) == 0
    assert open(a, "rb").read() == open(b, "rb").read()


def test_exit_codes(tmp_path, capsys):
    big = write(tmp_path, "big.gr", path(40))
    assert main(["exact", "tw", "-g", big]) == 3
    assert main(["report", "-g", big, "--full-exact"]) == 3
    small = write(tmp_path, "s.gr", path(5))
    assert main(["exact", "bdd", "-g", small]) == 2
    bad = tmp_path / "bad.gr"
    bad.write_text("p tw 2 1\n1 5\n")
    assert main(["exact", "bw", "-g", str(bad)]) == 2
    assert main(["exact", "bw", "-g", str(tmp_path / "missing.gr")]) == 2
    with pytest.raises(SystemExit) as err:
        main(["exact", "bdd", "-g", small, "--eps", "0.5"])
    assert err.value.code == 2
    assert main(["order", "-g", write(tmp_path, "t.gr", complete_binary_tree(9)), "--scap", "1", "--provider", "exact"]) == 3  # exact finder refuses large parts


def test_selftest_small(capsys):
    assert main(["selftest", "--n-max", "6", "--samples", "20"]) == 0
    out = capsys.readouterr().out
    assert "violations" in out and "evaluated" in out
