import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ws1.proofs import (
    CheckError, ProofTree, check, daemon, finite_as_infinite, is_analytic,
    node, parse_proof, prefix_leq, proof_from_json, proof_to_json, script_of,
    truncate,
)
from ws1.rules import RuleError, RuleId, premises_of, rid
from ws1.syntax import (
    BOT, TOP, Bang, Bot, Quest, Seqr, Sequent, Signature, parse_formula,
    parse_sequent,
)

SIG = Signature({"p": 1, "r": 0})


def seq(text):
    return parse_sequent(text, SIG)


def F(text):
    return parse_formula(text, SIG)


def test_p1_has_no_premises():
    assert premises_of(rid("P1"), seq("|- 1, bot, top")) == []


def test_ptensor_premises():
    c = seq("|- bot * 1, top")
    assert premises_of(rid("Ptensor"), c) == [seq("|- bot, 1, top"), seq("|- 1, bot, top")]


def test_ptopminus_rejects_long_tail():
    with pytest.raises(RuleError):
        premises_of(rid("Ptopminus"), seq("|- top, bot, top"))


def test_checked_simple_proof():
    # |- bot \ (top + top), picking the left branch
    c = seq("|- bot \\ (top + top)")
    p = parse_proof("(Plhd (Pbotplus (Pplus1 (Ptop))))", c, SIG)
    check(p)
    assert is_analytic(p)


def test_ptop_wrong_conclusion():
    p = node(rid("Ptop"), seq("|- bot"))
    with pytest.raises(CheckError):
        check(p)


def test_check_reports_path():
    c = seq("|- bot \\ (top + top)")
    good = parse_proof("(Plhd (Pbotplus (Pplus2 (Ptop))))", c, SIG)
    bad = ProofTree(
        good.rule, good.conclusion,
        (ProofTree(rid("Pplus1"), good.children[0].conclusion, good.children[0].children),),
    )
    with pytest.raises(CheckError) as e:
        check(bad)
    assert e.value.path == (0,)


def test_analytic_rejects_cut():
    m = F("bot")
    c = Sequent(frozenset(), (), (m,))
    inner = parse_proof("(Peps)", c, SIG)
    p = node(
        rid("Pcut", 1, 0, m), c,
        node(rid("Peps"), seq("|- bot, top")),
        node(rid("Peps"), seq("|- bot")),
    )
    check(p, allow_daemon=True)
    assert not is_analytic(p)
    assert is_analytic(inner)


def test_analytic_ma_discipline():
    c = parse_sequent("a b ; |- top", SIG)
    # least pair is (a, b), least fresh name z0
    ok = premises_of(rid("Pma", "a", "b", "z0"), c)
    p_ok = node(rid("Pma", "a", "b", "z0"), c, daemon(ok[0]), daemon(ok[1]))
    check(p_ok, allow_daemon=True)
    assert is_analytic(p_ok)
    bad = premises_of(rid("Pma", "b", "a", "z0"), c)
    p_bad = node(rid("Pma", "b", "a", "z0"), c, daemon(bad[0]), daemon(bad[1]))
    check(p_bad, allow_daemon=True)
    assert not is_analytic(p_bad)


def test_pneq_needs_reflexive_distinction():
    assert premises_of(rid("Pneq"), parse_sequent("x ; x != x |- top", SIG)) == []
    with pytest.raises(RuleError):
        premises_of(rid("Pneq"), parse_sequent("x y ; x != y |- top", SIG))


def test_truncate_bottom_and_monotone():
    c = seq("|- bot \\ (top + top)")
    p = parse_proof("(Plhd (Pbotplus (Pplus1 (Ptop))))", c, SIG)
    inf = finite_as_infinite(p)
    t0 = truncate(inf, 0)
    assert t0.rule.tag == "Peps" and t0.conclusion == c
    for k in range(4):
        assert prefix_leq(truncate(inf, k), truncate(inf, k + 1))
    assert truncate(inf, 4) == p


def test_script_roundtrip():
    c = seq("|- bot \\ (top + top)")
    p = parse_proof("(Plhd (Pbotplus (Pplus2 (Ptop))))", c, SIG)
    assert parse_proof(script_of(p), c, SIG) == p
    assert proof_from_json(proof_to_json(p), SIG) == p


# ---------------------------------------------------------------------------
# checker soundness: wherever premises_of succeeds, the rebuilt node re-checks

_SEQUENTS = [
    "|- 1, bot, top",
    "|- bot * 1, top",
    "|- bot \\ (top + top)",
    "|- top / (bot & bot)",
    "|- top, bot",
    "|- bot, top",
    "|- bot, bot, top",
    "|- bot, top, top, top",
    "|- top, bot, bot, 0",
    "|- !(bot / bot), top \\ ?top",
    "|- ?(top / bot), 1",
    "x ; |- p(x), top",
    "x y ; x != y |- ~p(x), bot",
    "x ; |- ex y. ~p(y), top",
    "|- all x. p(x)",
    "|- bot, bot * bot",
    "|- r, top \\ ~r",
]

_RULES = [
    rid("P1"), rid("Ptop"), rid("Poslash"), rid("Plhd"), rid("Ptensor"),
    rid("Ppar1"), rid("Ppar2"), rid("Pwith"), rid("Pplus1"), rid("Pplus2"),
    rid("Ptopminus"), rid("Pbotplus"), rid("Patneg"), rid("Patpos"),
    rid("Pbang"), rid("Pque"), rid("Pforall"),
    rid("Pbotminus"), rid("Pbotpar"), rid("Pbotoslash"),
    rid("Ptopplus"), rid("Ptoptensor"), rid("Ptoplhd"),
    rid("Pid"), rid("Pana"), rid("Pidoslash"),
    rid("Psymneg", 1), rid("Psympos", 1), rid("Pwkpos", 1),
    rid("P1t_add", 1), rid("P0t_add", 1),
    rid("Ptensort_merge", 1), rid("Ppart_merge", 1),
    rid("Pplust", 1, 1), rid("Pderbang", 0), rid("Pderbang", 1),
    rid("Pconbang", 0), rid("Pderque", 0), rid("Pconque", 0),
    rid("Pmul", 1, 0), rid("Plolli", 1), rid("Pwkneg", 1, BOT),
    rid("P1t_del", 1), rid("P0t_del", 1),
]


@given(st.sampled_from(_SEQUENTS), st.sampled_from(_RULES))
@settings(max_examples=400)
def test_rebuild_nodes_recheck_prop(stext, rule):
    c = seq(stext)
    try:
        prems = premises_of(rule, c)
    except RuleError:
        return
    p = node(rule, c, *[daemon(q) for q in prems])
    check(p, allow_daemon=True)


# prefix order is a partial order with Peps as bottom


def _variants():
    c = seq("|- bot \\ (top + top)")
    full1 = parse_proof("(Plhd (Pbotplus (Pplus1 (Ptop))))", c, SIG)
    full2 = parse_proof("(Plhd (Pbotplus (Pplus2 (Ptop))))", c, SIG)
    cut1 = truncate(full1, 2)
    cut2 = truncate(full1, 1)
    return [daemon(c), cut2, cut1, full1, full2]


@given(st.sampled_from(_variants()), st.sampled_from(_variants()), st.sampled_from(_variants()))
@settings(max_examples=100)
def test_prefix_partial_order(a, b, c):
    assert prefix_leq(a, a)
    if prefix_leq(a, b) and prefix_leq(b, a):
        assert a == b
    if prefix_leq(a, b) and prefix_leq(b, c):
        assert prefix_leq(a, c)


def test_peps_is_bottom():
    for p in _variants():
        assert prefix_leq(daemon(p.conclusion), p)
