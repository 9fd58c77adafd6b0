"""Text-format round trips, DOT export, and the CLI surface."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from posat import Digraph, SetFamily, catalog, from_cover_relations
from posat.cli import main
from posat.errors import ParseError
from posat.io import (
    digraph_dot,
    family_dot,
    format_digraph,
    format_family,
    format_poset,
    parse_digraph,
    parse_family,
    parse_poset,
    parse_poset_spec,
    poset_dot,
)


def cover_sets(max_p=6):
    return st.integers(2, max_p).flatmap(
        lambda p: st.tuples(
            st.just(p),
            st.sets(
                st.tuples(st.integers(0, p - 1), st.integers(0, p - 1)).filter(
                    lambda e: e[0] < e[1]
                ),
                max_size=p * 2,
            ),
        )
    )


# -- round trips --------------------------------------------------------------

@given(cover_sets())
def test_poset_roundtrip(pc):
    p, covers = pc
    P = from_cover_relations(p, sorted(covers))
    assert parse_poset(format_poset(P)).up == P.up


@given(st.integers(1, 6), st.data())
def test_family_roundtrip(n, data):
    members = data.draw(st.sets(st.integers(0, (1 << n) - 1), min_size=1))
    F = SetFamily.of(n, members)
    assert parse_family(format_family(F)) == F


@given(st.integers(1, 6), st.data())
def test_digraph_roundtrip(n, data):
    edges = data.draw(
        st.sets(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
                lambda e: e[0] != e[1]
            )
        )
    )
    D = Digraph.of(n, edges)
    assert parse_digraph(format_digraph(D)).edges == D.edges


def test_comments_and_blank_lines_ignored():
    F = parse_family("# header\nn=3\n\n{1,3}  # a member\n{}\n")
    assert F == SetFamily.of(3, [0, 0b101])


def test_poset_name_line():
    assert parse_poset("name=wedge:3\n").size == 5
    assert parse_poset_spec("diamond").name == "diamond"
    with pytest.raises(ParseError):
        parse_poset("name=wedge:x\n")
    with pytest.raises(ParseError):
        parse_poset("name=diamond\nelements=2\n")


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_family("")
    with pytest.raises(ParseError):
        parse_family("n=2\n{3}\n")
    with pytest.raises(ParseError):
        parse_poset("elements=2\n1 << 2\n")
    with pytest.raises(ParseError):
        parse_digraph("vertices=2\n1 - 2\n")


def test_dot_outputs_are_wellformed():
    assert poset_dot(catalog("diamond")).startswith("digraph")
    assert 'label="{1,2}"' in family_dot(SetFamily.of(2, [0b11, 0b01]))
    assert "v1 -> v2" in digraph_dot(Digraph.of(2, [(0, 1)]))


# -- CLI ----------------------------------------------------------------------

def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_cli_check_saturated_verdicts(tmp_path, capsys):
    sat = write(tmp_path, "sat.txt", "n=3\n{}\n{1}\n{1,2}\n{1,2,3}\n")
    assert main(["check-saturated", "--family", sat, "--poset", "name=antichain:2"]) == 0
    assert "saturated=true" in capsys.readouterr().out
    unsat = write(tmp_path, "unsat.txt", "n=3\n{}\n{1,2,3}\n")
    assert main(["check-saturated", "--family", unsat, "--poset", "name=antichain:2"]) == 1
    assert "addable=" in capsys.readouterr().out


def test_cli_satstar_exact(tmp_path, capsys):
    assert main(["satstar", "--n", "3", "--poset", "name=fork"]) == 0
    out = capsys.readouterr().out
    assert "lower=4 kind=exhaustive" in out
    assert "upper=4" in out and "exact=true" in out and "witness:" in out


def test_cli_satstar_bounds(capsys):
    assert main(["satstar", "--n", "4", "--poset", "name=X", "--bounds"]) == 0
    out = capsys.readouterr().out
    assert "kind=double_legs" in out and "lower=10" in out and "exact=false" in out


def test_cli_construct_roundtrips(tmp_path, capsys):
    out_file = str(tmp_path / "fam.txt")
    assert main(["construct", "--name", "x-upper", "--n", "5", "--out", out_file]) == 0
    F = parse_family((tmp_path / "fam.txt").read_text())
    assert len(F) == 12
    assert main(["construct", "--name", "wedge", "--n", "6"]) == 2  # missing --l
    assert main(["construct", "--name", "unique-pairs", "--n", "9"]) == 0


def test_cli_blowup(tmp_path, capsys):
    fam = write(tmp_path, "f.txt", "n=2\n{1}\n{2}\n")
    assert main(["blowup", "--family", fam, "--i", "1"]) == 0
    out = capsys.readouterr().out
    assert "n=3" in out and "{1,3}" in out and "{2}" in out


def test_cli_digraph_actions(tmp_path, capsys):
    fam = write(tmp_path, "f.txt", "n=2\n{1}\n{2}\n")
    assert main(["digraph", "aux", "--family", fam]) == 0
    assert "vertices=2" in capsys.readouterr().out
    good = write(tmp_path, "d.txt", "vertices=3\n1 -> 2\n2 -> 3\n")
    assert main(["digraph", "tc-check", "--digraph", good]) == 0
    assert "transitive_cycle=none" in capsys.readouterr().out
    bad = write(tmp_path, "tc.txt", "vertices=3\n1 -> 2\n2 -> 3\n1 -> 3\n")
    assert main(["digraph", "tc-check", "--digraph", bad]) == 1
    assert "transitive_cycle=1,2,3" in capsys.readouterr().out
    cyc = write(tmp_path, "cyc.txt", "vertices=3\n1 -> 2\n2 -> 3\n3 -> 1\n")
    assert main(["digraph", "contract", "--digraph", cyc, "--cycle", "1,2,3"]) == 0
    assert "vertices=1" in capsys.readouterr().out
    assert main(["digraph", "turan", "--n", "4"]) == 0
    assert main(["digraph", "brute-max", "--n", "3"]) == 0
    assert "max_edges=4" in capsys.readouterr().out


def test_cli_legs_and_dual(capsys):
    assert main(["legs", "--poset", "name=X"]) == 0
    assert "legs=1,2 hip=3" in capsys.readouterr().out
    assert main(["legs", "--poset", "name=diamond"]) == 1
    capsys.readouterr()
    assert main(["dual", "--poset", "name=Yinv"]) == 0
    assert main(["dot", "--poset", "name=fork"]) == 0
    out = capsys.readouterr().out
    assert "elements=4" in out


def test_cli_export_dot(tmp_path, capsys):
    assert main(["export-dot", "--poset", "name=diamond"]) == 0
    assert "digraph" in capsys.readouterr().out
    fam = write(tmp_path, "f.txt", "n=2\n{1}\n{1,2}\n")
    assert main(["export-dot", "--family", fam]) == 0
    d = write(tmp_path, "d.txt", "vertices=2\n1 -> 2\n")
    assert main(["export-dot", "--digraph", d]) == 0


def test_cli_error_exit_codes(tmp_path):
    bad = write(tmp_path, "bad.txt", "nonsense\n")
    assert main(["check-saturated", "--family", bad, "--poset", "name=X"]) == 3
    assert main(["legs", "--poset", str(tmp_path / "missing.txt")]) == 3
    assert main(["digraph", "brute-max", "--n", "9"]) == 4
    assert main(["satstar", "--n", "3", "--poset", "name=chain:1"]) == 2


def test_cli_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["satstar", "--poset", "name=X"])  # missing --n
    assert exc.value.code == 2
    capsys.readouterr()


def test_cli_time_limit_env(monkeypatch, capsys):
    monkeypatch.setenv("POSAT_TIME_LIMIT_SECS", "0.000001")
    assert main(["satstar", "--n", "4", "--poset", "name=N"]) == 4
    out = capsys.readouterr().out
    assert "exact=false" in out
