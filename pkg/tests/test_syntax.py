import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ws1.syntax import (
    BOT, ONE, TOP, ZERO,
    Atom, Bang, Bot, Exists, Forall, Par, Plus, PolarityError, Quest, Seq,
    Seqr, Sequent, Signature, SyntaxError_, Tensor, Top, Var, With,
    dual, free_vars, parse_formula, parse_sequent, show, subst,
    theta_is_lean,
)

SIG = Signature({"p": 1, "q": 2, "r": 0})


def roundtrip(text):
    return parse_formula(text, SIG)


def test_boolean_output_game_formula():
    f = roundtrip("bot \\ (top + top)")
    assert f == Seqr(BOT, Plus(TOP, TOP))


def test_polarity_violation():
    with pytest.raises(PolarityError):
        roundtrip("1 * top")


def test_units_and_precedence():
    assert roundtrip("1") == ONE
    assert roundtrip("0") == ZERO
    # / binds tighter than *, * tighter than &
    f = roundtrip("bot / bot * bot & 1")
    assert f == With(Tensor(Seq(BOT, BOT), BOT), ONE)


def test_left_associativity():
    f = roundtrip("bot * bot * bot")
    assert f == Tensor(Tensor(BOT, BOT), BOT)


def test_quantifiers_scope_loosely():
    f = roundtrip("all x. bot * p(x)")
    assert f == Forall("x", Tensor(BOT, Atom("p", (Var("x"),), False)))


def test_atoms_and_equality():
    a = roundtrip("~q(x, y)")
    assert a == Atom("q", (Var("x"), Var("y")), True)
    assert roundtrip("x = y") == Atom("=", (Var("x"), Var("y")), False)
    assert roundtrip("x != y") == Atom("=", (Var("x"), Var("y")), True)
    assert roundtrip("r") == Atom("r", (), False)
    assert roundtrip("~r") == Atom("r", (), True)


def test_dual_table():
    assert dual(ONE) == ZERO
    assert dual(roundtrip("bot \\ (top + top)")) == roundtrip("top / (bot & bot)")
    assert dual(roundtrip("all x. p(x)")) == roundtrip("ex x. ~p(x)")
    assert dual(Bang(BOT)) == Quest(TOP)


def test_unknown_predicate_and_arity():
    with pytest.raises(SyntaxError_):
        roundtrip("s(x)")
    with pytest.raises(SyntaxError_):
        roundtrip("p(x, y)")


def test_sequent_parsing():
    s = parse_sequent("x y ; ~q(x,y), x != y |- p(x), top / p(y)", SIG)
    assert s.vars == frozenset({"x", "y"})
    assert len(s.theta) == 2
    assert len(s.gamma) == 2
    with pytest.raises(SyntaxError_):
        parse_sequent("x ; p(x) |- top", SIG)  # negative atom in Theta
    with pytest.raises(SyntaxError_):
        parse_sequent("|- p(x)", SIG)  # undeclared free variable


def test_theta_leanness():
    s = parse_sequent("x y ; x != y |- top", SIG)
    assert theta_is_lean(s.vars, s.theta)
    s2 = parse_sequent("x y ; |- top", SIG)
    assert not theta_is_lean(s2.vars, s2.theta)
    s3 = parse_sequent("x ; x != x |- top", SIG)
    assert not theta_is_lean(s3.vars, s3.theta)
    s4 = parse_sequent("x ; |- top", SIG)
    assert theta_is_lean(s4.vars, s4.theta)


def test_substitution_capture_avoidance():
    f = roundtrip("ex y. ~q(x, y)")
    g = subst(f, "x", Var("y"))
    assert g != roundtrip("ex y. ~q(y, y)")
    assert free_vars(g) == frozenset({"y"})


# ---------------------------------------------------------------------------
# property tests

_neg_leaves = [ONE, BOT, Atom("p", (Var("x"),), False), Atom("r", (), False)]
_pos_leaves = [ZERO, TOP, Atom("q", (Var("x"), Var("y")), True), Atom("r", (), True)]


def _formulas(depth):
    if depth == 0:
        return st.sampled_from(_neg_leaves + _pos_leaves)
    sub = _formulas(depth - 1)

    def combine(pair):
        import ws1.syntax as s

        op, (l, r) = pair
        try:
            return {
                "*": s.Tensor, "%": s.Par, "&": s.With, "+": s.Plus,
                "/": s.Seq, "\\": s.Seqr,
            }[op](l, r)
        except PolarityError:
            return l

    return st.one_of(
        st.sampled_from(_neg_leaves + _pos_leaves),
        st.tuples(st.sampled_from("*%&+/\\"), st.tuples(sub, sub)).map(combine),
        sub.map(lambda f: Bang(f) if f.polarity() == "-" else Quest(f)),
        sub.map(lambda f: Forall("x", f) if f.polarity() == "-" else Exists("x", f)),
    )


@given(_formulas(3))
@settings(max_examples=200)
def test_dual_is_involutive(f):
    assert dual(dual(f)) == f


@given(_formulas(3))
@settings(max_examples=200)
def test_dual_flips_polarity(f):
    assert dual(f).polarity() != f.polarity()


@given(_formulas(4))
@settings(max_examples=200)
def test_print_parse_roundtrip(f):
    assert parse_formula(show(f), SIG) == f
