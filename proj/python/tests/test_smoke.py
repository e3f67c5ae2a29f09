from pathlib import Path

import pytest

import rtcproof

ROOT = Path(__file__).resolve().parents[2]
TRANS = "(rtc u v. p(u, v))(x, y), (rtc u v. p(u, v))(y, w) |- (rtc u v. p(u, v))(x, w)"


def corpus(name):
    return (ROOT / "corpus" / name).read_text()


def test_check_transitivity():
    r = rtcproof.check(corpus("transitivity.tcp"))
    assert r["verdict"] == "accepted"
    assert r["cycles"] == 1
    assert r["normal"]


def test_check_reports_witness():
    r = rtcproof.check(corpus("bad_no_progress.tcp"))
    assert r["verdict"] == "rejected"
    assert r["period"] == "0 -1-> 0"


def test_prove_round_trips():
    r = rtcproof.prove(TRANS)
    assert r["kind"] == "proved"
    again = rtcproof.check(r["proof"])
    assert again["verdict"] == "accepted"
    assert rtcproof.prove(TRANS)["proof"] == r["proof"]


def test_prove_with_theory():
    theory = (ROOT / "theories" / "step.tc").read_text()
    r = rtcproof.prove("p(0), (rtc x y. s(x) = y)(0, n) |- p(n)", theory=theory)
    assert r["kind"] == "proved"
    assert "TheoryAxiom" in r["proof"]


def test_refute():
    r = rtcproof.refute("|- (rtc x y. E(x, y))(a, b)")
    assert r["size"] == 2
    assert r["valuation"] == {"a": 0, "b": 1}
    assert rtcproof.refute("|- (rtc x y. E(x, y))(a, a)") is None
    assert rtcproof.prove("(rtc x y. p(x,y))(a,a) |- ")["kind"] == "refuted"


def test_translations():
    out = rtcproof.translate_beta("(rtc w u. s(w) = u)(m, n)")
    assert out.startswith("m = n \\/ (exists z. exists c. beta(c, 0, m)")
    assert "rtc" not in out
    cyc = rtcproof.translate_induction(corpus("ind_trans.tcp"))
    assert "RtcInd" not in cyc
    assert rtcproof.check(cyc, normal=True)["verdict"] == "accepted"


def test_render_and_errors():
    assert rtcproof.render(corpus("transitivity.tcp")).startswith("digraph")
    assert rtcproof.normalize_sequent("q(b), p(a) |- ") == rtcproof.normalize_sequent("p(a), q(b) |-")
    with pytest.raises(rtcproof.RtcError):
        rtcproof.normalize_formula("p(x) /\\")
    with pytest.raises(ValueError):
        rtcproof.translate_beta("p(x)", mode="nope")
