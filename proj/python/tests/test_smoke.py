"""Smoke tests for the Python bindings."""

import pytest

import minseq


def test_parse_and_render_roundtrip():
    s = minseq.parse_sequent("~(P & Q), (P | ~Q) & (Q | ~P)")
    assert str(s) == "~P | ~Q, (P | ~Q) & (Q | ~P)"
    assert str(minseq.parse_sequent(str(s))) == str(s)
    assert len(s) == 2


def test_validity_and_minimality():
    assert minseq.is_valid(minseq.parse_sequent("P | ~P"))
    assert not minseq.is_valid(minseq.parse_sequent("P | Q"))
    assert minseq.is_minimal(minseq.parse_sequent("P, ~P"))
    assert not minseq.is_minimal(minseq.parse_sequent("P, ~P, Q"))
    core = minseq.minimize(minseq.parse_sequent("P, ~P, Q"))
    assert str(core) == "P, ~P"


def test_prove_and_check():
    s = minseq.parse_sequent("(P & Q) | (~Q | ~P)")
    mp = minseq.parse_system("mp")
    d = minseq.prove(s)
    assert str(d.conclusion) == str(s)
    assert minseq.check(mp, d) == []


def test_elaborate_between_systems():
    gs1p = minseq.parse_system("gs1p")
    mp = minseq.parse_system("mp")
    assert minseq.contains(gs1p, mp)
    assert not minseq.contains(mp, gs1p)
    d = minseq.prove(minseq.parse_sequent("(P & Q) | (~Q | ~P)"))
    e = minseq.elaborate(d, gs1p)
    assert minseq.check(gs1p, e) == []
    assert str(e.conclusion) == "P & Q | ~Q | ~P"


def test_search_refutes_the_blended_witness():
    mp_minus = minseq.parse_system("mp-")
    goal = minseq.parse_sequent("((P & Q) | (~Q & P)) | ~P")
    assert minseq.is_valid(goal)
    out = minseq.search(mp_minus, goal)
    assert out["status"] == "underivable"
    assert out["definitive"]
    assert out["derivation"] is None


def test_parse_errors_raise():
    with pytest.raises(RuntimeError):
        minseq.parse_sequent("P | | Q")


def test_closure_and_presets():
    pp = minseq.preset("pp")
    assert str(pp) == "pp"
    assert minseq.closure_rules(pp) == "tensor,with,wedge,plus,par,c"
    assert minseq.contains(pp, minseq.parse_system("mp"))
