"""The WS1 rule catalog: every core and non-core rule as a named, parameterized
tag, with `premises_of` computing the unique premise list a rule demands at a
given conclusion (or failing with a machine-readable reason).

Positions (`at`) index into the conclusion's formula list, 0-based.  Rules
whose statement keeps a nonempty prefix untouched require `at >= 1`; the
dereliction/contraction rules also apply at the head.  The invertible
double-line rules appear as two tags each (`..._add` / `..._del`,
`..._merge` / `..._split`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ws1.syntax import (
    BOT, NEG, ONE, POS, TOP, ZERO,
    Atom, Bang, Bot, Exists, Forall, Formula, One, Par, Plus, Quest, Seq,
    Seqr, Sequent, Term, Top, Tensor, Var, With, Zero,
    dual, formula_has_functions, fresh_var, show, subst, term_vars,
    theta_is_lean,
)


class RuleError(ValueError):
    """Rule not applicable at the given conclusion."""


@dataclass(frozen=True)
class RuleId:
    """A rule tag with its parameters (positions, terms, formulas, variables)."""

    tag: str
    params: tuple = ()

    def __str__(self) -> str:
        if not self.params:
            return self.tag
        return f"{self.tag}({', '.join(_show_param(p) for p in self.params)})"


def _show_param(p) -> str:
    if isinstance(p, Formula):
        return "{" + show(p) + "}"
    if isinstance(p, (Var,)):
        return p.name
    return str(p)


CORE_TAGS = frozenset(
    {
        "P1", "Ptop", "Poslash", "Plhd", "Ptensor", "Ppar1", "Ppar2",
        "Pwith", "Pplus1", "Pplus2", "Ptopminus", "Pbotplus", "Patneg",
        "Patpos", "Pbang", "Pque", "Pexists", "Pforall",
        "Pbotminus", "Pbotpar", "Pbotoslash", "Ptopplus", "Ptoptensor",
        "Ptoplhd", "Pma", "Pneq",
    }
)

NONCORE_TAGS = frozenset(
    {
        "Pid", "Pcut", "Pcut0", "Pmul", "Pidoslash", "Plolli", "Pana",
        "Psymneg", "Psympos", "Pwkneg", "Pwkpos",
        "P1t_add", "P1t_del", "P0t_add", "P0t_del",
        "Ptensort_merge", "Ptensort_split", "Ppart_merge", "Ppart_split",
        "Pplust", "Pwitht", "Pderbang", "Pconbang", "Pderque", "Pconque",
        "Pforallt", "Pexistst",
    }
)

DAEMON_TAG = "Peps"

ARITY = {
    "P1": 0, "Ptop": 0, "Pneq": 0, "Pid": 0, "Peps": 0,
    "Ptensor": 2, "Pwith": 2, "Pma": 2, "Pcut": 2, "Pcut0": 2,
    "Pmul": 2, "Plolli": 2,
}


def arity(rule: RuleId) -> int:
    return ARITY.get(rule.tag, 1)


def is_core(rule: RuleId) -> bool:
    return rule.tag in CORE_TAGS


# ---------------------------------------------------------------------------
# constructors (convenience)


def rid(tag: str, *params) -> RuleId:
    return RuleId(tag, tuple(params))


# ---------------------------------------------------------------------------
# premises


def premises_of(rule: RuleId, concl: Sequent) -> list[Sequent]:
    """The unique premise list `rule` demands at `concl`.

    Raises RuleError when the rule does not apply (shape or side-condition
    failure), with a reason suitable for error reporting.
    """
    fn = _DISPATCH.get(rule.tag)
    if fn is None:
        raise RuleError(f"unknown rule tag {rule.tag!r}")
    return fn(rule, concl)


def _fail(msg: str):
    raise RuleError(msg)


def _need_params(rule: RuleId, n: int) -> tuple:
    if len(rule.params) != n:
        _fail(f"{rule.tag} takes {n} parameter(s), got {len(rule.params)}")
    return rule.params


def _at_in_tail(rule: RuleId, concl: Sequent, width: int = 1, lo: int = 1) -> int:
    at = rule.params[0]
    if not isinstance(at, int) or at < lo or at + width > len(concl.gamma) + (1 if width == 0 else 0):
        _fail(f"{rule.tag}: position {at!r} out of range")
    if width and at + width > len(concl.gamma):
        _fail(f"{rule.tag}: position {at} out of range")
    return at


def _replace(s: Sequent, at: int, *fs: Formula, width: int = 1) -> Sequent:
    gamma = s.gamma[:at] + tuple(fs) + s.gamma[at + width:]
    return s.with_gamma(gamma)


# --- core introduction ------------------------------------------------------


def _p1(rule: RuleId, c: Sequent) -> list[Sequent]:
    if not isinstance(c.head, One):
        _fail("P1 concludes only sequents headed by 1")
    return []


def _ptop(rule: RuleId, c: Sequent) -> list[Sequent]:
    if c.gamma != (TOP,):
        _fail("Ptop concludes exactly |- top")
    return []


def _poslash(rule: RuleId, c: Sequent) -> list[Sequent]:
    match c.head:
        case Seq(a, n):
            return [c.with_gamma((a, n) + c.tail)]
    _fail("Poslash needs a /-headed sequent")


def _plhd(rule: RuleId, c: Sequent) -> list[Sequent]:
    match c.head:
        case Seqr(a, p):
            return [c.with_gamma((a, p) + c.tail)]
    _fail("Plhd needs a \\-headed sequent")


def _ptensor(rule: RuleId, c: Sequent) -> list[Sequent]:
    match c.head:
        case Tensor(m, n):
            return [c.with_gamma((m, n) + c.tail), c.with_gamma((n, m) + c.tail)]
    _fail("Ptensor needs a *-headed sequent")


def _ppar(i: int) -> Callable[[RuleId, Sequent], list[Sequent]]:
    def go(rule: RuleId, c: Sequent) -> list[Sequent]:
        match c.head:
            case Par(p, q):
                pair = (p, q) if i == 1 else (q, p)
                return [c.with_gamma(pair + c.tail)]
        _fail(f"Ppar{i} needs a %-headed sequent")

    return go


def _pwith(rule: RuleId, c: Sequent) -> list[Sequent]:
    match c.head:
        case With(m, n):
            return [c.with_gamma((m,) + c.tail), c.with_gamma((n,) + c.tail)]
    _fail("Pwith needs a &-headed sequent")


def _pplus(i: int) -> Callable[[RuleId, Sequent], list[Sequent]]:
    def go(rule: RuleId, c: Sequent) -> list[Sequent]:
        match c.head:
            case Plus(p, q):
                return [c.with_gamma(((p, q)[i - 1],) + c.tail)]
        _fail(f"Pplus{i} needs a +-headed sequent")

    return go


def _ptopminus(rule: RuleId, c: Sequent) -> list[Sequent]:
    if len(c.gamma) == 2 and isinstance(c.head, Top) and c.gamma[1].polarity() == NEG:
        return [c.with_gamma((c.gamma[1],))]
    _fail("Ptopminus concludes |- top, N with exactly one negative tail formula")


def _pbotplus(rule: RuleId, c: Sequent) -> list[Sequent]:
    if len(c.gamma) == 2 and isinstance(c.head, Bot) and c.gamma[1].polarity() == POS:
        return [c.with_gamma((c.gamma[1],))]
    _fail("Pbotplus concludes |- bot, P with exactly one positive tail formula")


def _patneg(rule: RuleId, c: Sequent) -> list[Sequent]:
    match c.head:
        case Atom(_, _, False) as a:
            theta = c.theta + (Atom(a.pred, a.args, True),)
            return [Sequent(c.vars, theta, (BOT,) + c.tail)]
    _fail("Patneg needs a negative atom at the head")


def _patpos(rule: RuleId, c: Sequent) -> list[Sequent]:
    match c.head:
        case Atom(_, _, True) as a:
            if a not in c.theta:
                _fail(f"Patpos needs {show(a)} declared in Theta")
            return [c.with_gamma((TOP,) + c.tail)]
    _fail("Patpos needs a positive atom at the head")


def _pbang(rule: RuleId, c: Sequent) -> list[Sequent]:
    match c.head:
        case Bang(n):
            return [c.with_gamma((n, c.head) + c.tail)]
    _fail("Pbang needs a !-headed sequent")


def _pque(rule: RuleId, c: Sequent) -> list[Sequent]:
    match c.head:
        case Quest(p):
            return [c.with_gamma((p, c.head) + c.tail)]
    _fail("Pque needs a ?-headed sequent")


def _pexists(rule: RuleId, c: Sequent) -> list[Sequent]:
    (s,) = _need_params(rule, 1)
    match c.head:
        case Exists(x, p):
            if not term_vars(s) <= c.vars:
                _fail(f"Pexists: term {s} has free variables outside X")
            return [c.with_gamma((subst(p, x, s),) + c.tail)]
    _fail("Pexists needs an ex-headed sequent")


def _pforall(rule: RuleId, c: Sequent) -> list[Sequent]:
    match c.head:
        case Forall(x, n):
            if x in c.vars:
                x2 = fresh_var(set(c.vars))
                n = subst(n, x, Var(x2))
                x = x2
            return [Sequent(c.vars | {x}, c.theta, (n,) + c.tail)]
    _fail("Pforall needs an all-headed sequent")


# --- core elimination -------------------------------------------------------


def _pbotminus(rule: RuleId, c: Sequent) -> list[Sequent]:
    if len(c.gamma) >= 2 and isinstance(c.head, Bot) and c.gamma[1].polarity() == NEG:
        return [c.with_gamma((c.head,) + c.gamma[2:])]
    _fail("Pbotminus concludes |- bot, N, Gamma")


def _pbotpar(rule: RuleId, c: Sequent) -> list[Sequent]:
    if (
        len(c.gamma) >= 3
        and isinstance(c.head, Bot)
        and c.gamma[1].polarity() == POS
        and c.gamma[2].polarity() == POS
    ):
        return [c.with_gamma((c.head, Par(c.gamma[1], c.gamma[2])) + c.gamma[3:])]
    _fail("Pbotpar concludes |- bot, P, Q, Gamma")


def _pbotoslash(rule: RuleId, c: Sequent) -> list[Sequent]:
    if (
        len(c.gamma) >= 3
        and isinstance(c.head, Bot)
        and c.gamma[1].polarity() == POS
        and c.gamma[2].polarity() == NEG
    ):
        return [c.with_gamma((c.head, Seq(c.gamma[1], c.gamma[2])) + c.gamma[3:])]
    _fail("Pbotoslash concludes |- bot, P, N, Gamma")


def _ptopplus(rule: RuleId, c: Sequent) -> list[Sequent]:
    if len(c.gamma) >= 2 and isinstance(c.head, Top) and c.gamma[1].polarity() == POS:
        return [c.with_gamma((c.head,) + c.gamma[2:])]
    _fail("Ptopplus concludes |- top, P, Gamma")


def _ptoptensor(rule: RuleId, c: Sequent) -> list[Sequent]:
    if (
        len(c.gamma) >= 3
        and isinstance(c.head, Top)
        and c.gamma[1].polarity() == NEG
        and c.gamma[2].polarity() == NEG
    ):
        return [c.with_gamma((c.head, Tensor(c.gamma[1], c.gamma[2])) + c.gamma[3:])]
    _fail("Ptoptensor concludes |- top, M, N, Gamma")


def _ptoplhd(rule: RuleId, c: Sequent) -> list[Sequent]:
    if (
        len(c.gamma) >= 3
        and isinstance(c.head, Top)
        and c.gamma[1].polarity() == NEG
        and c.gamma[2].polarity() == POS
    ):
        return [c.with_gamma((c.head, Seqr(c.gamma[1], c.gamma[2])) + c.gamma[3:])]
    _fail("Ptoplhd concludes |- top, N, P, Gamma")


# --- core equality ----------------------------------------------------------


def _pma(rule: RuleId, c: Sequent) -> list[Sequent]:
    x, y, z = _need_params(rule, 3)
    if x not in c.vars or y not in c.vars or x == y:
        _fail("Pma needs two distinct variables from X")
    if z in c.vars:
        _fail(f"Pma: {z!r} is not fresh")
    from ws1.syntax import sequent_subst

    merged = sequent_subst(c, x, y, z)
    neq = Atom("=", (Var(x), Var(y)), True)
    split = Sequent(c.vars, c.theta + (neq,), c.gamma)
    return [merged, split]


def _pneq(rule: RuleId, c: Sequent) -> list[Sequent]:
    for a in c.theta:
        if a.pred == "=" and a.positive and a.args[0] == a.args[1]:
            return []
    _fail("Pneq needs some t != t in Theta")


# --- non-core ----------------------------------------------------------------


def _pid(rule: RuleId, c: Sequent) -> list[Sequent]:
    if len(c.gamma) == 2 and c.gamma[0].polarity() == NEG and c.gamma[1] == dual(c.gamma[0]):
        return []
    _fail("Pid concludes |- N, N^perp")


def _pcut(rule: RuleId, c: Sequent) -> list[Sequent]:
    at, dlen, n = _need_params(rule, 3)
    if not (isinstance(at, int) and isinstance(dlen, int)) or at < 1 or dlen < 0:
        _fail("Pcut: bad split")
    if at + dlen > len(c.gamma):
        _fail("Pcut: split out of range")
    if not isinstance(n, Formula) or n.polarity() != NEG:
        _fail("Pcut: cut formula must be negative")
    delta = c.gamma[at:at + dlen]
    if any(f.polarity() != POS for f in delta):
        _fail("Pcut: Delta must be positive")
    left = c.with_gamma(c.gamma[:at] + (dual(n),) + c.gamma[at + dlen:])
    right = c.with_gamma((n,) + delta)
    return [left, right]


def _pcut0(rule: RuleId, c: Sequent) -> list[Sequent]:
    (n,) = _need_params(rule, 1)
    if len(c.gamma) != 1 or c.head.polarity() != POS:
        _fail("Pcut0 concludes |- Q with Q positive")
    if not isinstance(n, Formula) or n.polarity() != NEG:
        _fail("Pcut0: cut formula must be negative")
    return [c.with_gamma((dual(n),)), c.with_gamma((n, c.head))]


def _pmul(rule: RuleId, c: Sequent) -> list[Sequent]:
    at, dlen = _need_params(rule, 2)
    if not isinstance(at, int) or at < 1 or at >= len(c.gamma):
        _fail("Pmul: position out of range")
    if c.gamma[0].polarity() != NEG or c.gamma[at].polarity() != NEG:
        _fail("Pmul: head formulas must be negative")
    rest = c.gamma[at + 1:]
    if not isinstance(dlen, int) or dlen < 0 or dlen > len(rest):
        _fail("Pmul: bad Delta split")
    if any(f.polarity() != POS for f in rest):
        _fail("Pmul: tail after N must be positive")
    left = c.with_gamma(c.gamma[:at] + rest[:dlen])
    right = c.with_gamma((c.gamma[at],) + rest[dlen:])
    return [left, right]


def _pidoslash(rule: RuleId, c: Sequent) -> list[Sequent]:
    if len(c.gamma) < 3:
        _fail("Pidoslash concludes |- M, N, M^perp \\ Q, Delta")
    m, n, mq = c.gamma[0], c.gamma[1], c.gamma[2]
    match mq:
        case Seqr(mp, q) if m.polarity() == NEG and n.polarity() == NEG and mp == dual(m):
            delta = c.gamma[3:]
            if any(f.polarity() != POS for f in delta):
                _fail("Pidoslash: Delta must be positive")
            return [c.with_gamma((n, q) + delta)]
    _fail("Pidoslash concludes |- M, N, M^perp \\ Q, Delta")


def _plolli(rule: RuleId, c: Sequent) -> list[Sequent]:
    (at,) = _need_params(rule, 1)
    if not isinstance(at, int) or at < 1 or at >= len(c.gamma):
        _fail("Plolli: position out of range")
    match c.gamma[at]:
        case Seq(p, n) if p.polarity() == POS:
            delta = c.gamma[at + 1:]
            if any(f.polarity() != POS for f in delta):
                _fail("Plolli: Delta must be positive")
            if c.gamma[0].polarity() != NEG:
                _fail("Plolli: head must be negative")
            return [
                c.with_gamma(c.gamma[:at] + (p,)),
                c.with_gamma((n,) + delta),
            ]
    _fail("Plolli needs P / N at the given position")


def _pana(rule: RuleId, c: Sequent) -> list[Sequent]:
    if len(c.gamma) == 2 and isinstance(c.head, Bang) and c.gamma[1].polarity() == POS:
        m = c.head.body
        r = c.gamma[1]
        return [c.with_gamma((m, dual(r), r))]
    _fail("Pana concludes |- !M, N^perp")


def _psym(pol: str) -> Callable[[RuleId, Sequent], list[Sequent]]:
    def go(rule: RuleId, c: Sequent) -> list[Sequent]:
        at = _at_in_tail(rule, c, width=2)
        a, b = c.gamma[at], c.gamma[at + 1]
        if a.polarity() != pol or b.polarity() != pol:
            _fail(f"Psym: both formulas must be {'negative' if pol == NEG else 'positive'}")
        return [_replace(c, at, b, a, width=2)]

    return go


def _pwkneg(rule: RuleId, c: Sequent) -> list[Sequent]:
    at, m = _need_params(rule, 2)
    if not isinstance(at, int) or at < 1 or at > len(c.gamma):
        _fail("Pwkneg: position out of range")
    if not isinstance(m, Formula) or m.polarity() != NEG:
        _fail("Pwkneg: dropped formula must be negative")
    return [c.with_gamma(c.gamma[:at] + (m,) + c.gamma[at:])]


def _pwkpos(rule: RuleId, c: Sequent) -> list[Sequent]:
    at = _at_in_tail(rule, c)
    if c.gamma[at].polarity() != POS:
        _fail("Pwkpos: weakened formula must be positive")
    return [_replace(c, at)]


def _punit(cls, tag_add: str):
    def add(rule: RuleId, c: Sequent) -> list[Sequent]:
        at = _at_in_tail(rule, c)
        if not isinstance(c.gamma[at], cls):
            _fail(f"{tag_add}: expected the unit at position {at}")
        return [_replace(c, at)]

    def delete(rule: RuleId, c: Sequent) -> list[Sequent]:
        at = rule.params[0]
        if not isinstance(at, int) or at < 1 or at > len(c.gamma):
            _fail("unit insertion out of range")
        unit = ONE if cls is One else ZERO
        return [c.with_gamma(c.gamma[:at] + (unit,) + c.gamma[at:])]

    return add, delete


_p1t_add, _p1t_del = _punit(One, "P1t_add")
_p0t_add, _p0t_del = _punit(Zero, "P0t_add")


def _ptensort_merge(rule: RuleId, c: Sequent) -> list[Sequent]:
    at = _at_in_tail(rule, c)
    match c.gamma[at]:
        case Tensor(m, n):
            return [_replace(c, at, m, n)]
    _fail("Ptensort_merge: expected a * formula")


def _ptensort_split(rule: RuleId, c: Sequent) -> list[Sequent]:
    at = _at_in_tail(rule, c, width=2)
    m, n = c.gamma[at], c.gamma[at + 1]
    if m.polarity() != NEG or n.polarity() != NEG:
        _fail("Ptensort_split: need two negative formulas")
    return [_replace(c, at, Tensor(m, n), width=2)]


def _ppart_merge(rule: RuleId, c: Sequent) -> list[Sequent]:
    at = _at_in_tail(rule, c)
    match c.gamma[at]:
        case Par(p, q):
            return [_replace(c, at, p, q)]
    _fail("Ppart_merge: expected a % formula")


def _ppart_split(rule: RuleId, c: Sequent) -> list[Sequent]:
    at = _at_in_tail(rule, c, width=2)
    p, q = c.gamma[at], c.gamma[at + 1]
    if p.polarity() != POS or q.polarity() != POS:
        _fail("Ppart_split: need two positive formulas")
    return [_replace(c, at, Par(p, q), width=2)]


def _pplust(rule: RuleId, c: Sequent) -> list[Sequent]:
    at, i = _need_params(rule, 2)
    _at_in_tail(RuleId(rule.tag, (at,)), c)
    match c.gamma[at]:
        case Plus(p, q) if i in (1, 2):
            return [_replace(c, at, (p, q)[i - 1])]
    _fail("Pplust: expected a + formula and branch 1 or 2")


def _pwitht(rule: RuleId, c: Sequent) -> list[Sequent]:
    at, i, other = _need_params(rule, 3)
    _at_in_tail(RuleId(rule.tag, (at,)), c)
    if i not in (1, 2) or not isinstance(other, Formula) or other.polarity() != NEG:
        _fail("Pwitht: need branch 1 or 2 and a negative partner formula")
    mine = c.gamma[at]
    if mine.polarity() != NEG:
        _fail("Pwitht: selected formula must be negative")
    conj = With(mine, other) if i == 1 else With(other, mine)
    return [_replace(c, at, conj)]


def _pderbang(rule: RuleId, c: Sequent) -> list[Sequent]:
    at = _at_in_tail(rule, c, lo=0)
    if c.gamma[at].polarity() != NEG:
        _fail("Pderbang: formula must be negative")
    return [_replace(c, at, Bang(c.gamma[at]))]


def _pconbang(rule: RuleId, c: Sequent) -> list[Sequent]:
    at = _at_in_tail(rule, c, width=2, lo=0)
    a, b = c.gamma[at], c.gamma[at + 1]
    if not isinstance(a, Bang) or a != b:
        _fail("Pconbang: need two adjacent equal ! formulas")
    return [_replace(c, at, a, width=2)]


def _pderque(rule: RuleId, c: Sequent) -> list[Sequent]:
    at = _at_in_tail(rule, c, lo=0)
    match c.gamma[at]:
        case Quest(p):
            return [_replace(c, at, p)]
    _fail("Pderque: expected a ? formula")


def _pconque(rule: RuleId, c: Sequent) -> list[Sequent]:
    at = _at_in_tail(rule, c, lo=0)
    match c.gamma[at]:
        case Quest(_) as qp:
            return [_replace(c, at, qp, qp)]
    _fail("Pconque: expected a ? formula")


def _pforallt(rule: RuleId, c: Sequent) -> list[Sequent]:
    at, s, orig = _need_params(rule, 3)
    _at_in_tail(RuleId(rule.tag, (at,)), c)
    match orig:
        case Forall(x, n):
            if not term_vars(s) <= c.vars:
                _fail("Pforallt: term has free variables outside X")
            if subst(n, x, s) != c.gamma[at]:
                _fail("Pforallt: instantiated formula does not match the conclusion")
            return [_replace(c, at, orig)]
    _fail("Pforallt: third parameter must be the all-formula of the premise")


def _pexistst(rule: RuleId, c: Sequent) -> list[Sequent]:
    at, s = _need_params(rule, 2)
    _at_in_tail(RuleId(rule.tag, (at,)), c)
    match c.gamma[at]:
        case Exists(x, p):
            if not term_vars(s) <= c.vars:
                _fail("Pexistst: term has free variables outside X")
            return [_replace(c, at, subst(p, x, s))]
    _fail("Pexistst: expected an ex formula")


_DISPATCH: dict[str, Callable[[RuleId, Sequent], list[Sequent]]] = {
    "P1": _p1, "Ptop": _ptop, "Poslash": _poslash, "Plhd": _plhd,
    "Ptensor": _ptensor, "Ppar1": _ppar(1), "Ppar2": _ppar(2),
    "Pwith": _pwith, "Pplus1": _pplus(1), "Pplus2": _pplus(2),
    "Ptopminus": _ptopminus, "Pbotplus": _pbotplus,
    "Patneg": _patneg, "Patpos": _patpos, "Pbang": _pbang, "Pque": _pque,
    "Pexists": _pexists, "Pforall": _pforall,
    "Pbotminus": _pbotminus, "Pbotpar": _pbotpar, "Pbotoslash": _pbotoslash,
    "Ptopplus": _ptopplus, "Ptoptensor": _ptoptensor, "Ptoplhd": _ptoplhd,
    "Pma": _pma, "Pneq": _pneq,
    "Pid": _pid, "Pcut": _pcut, "Pcut0": _pcut0, "Pmul": _pmul,
    "Pidoslash": _pidoslash, "Plolli": _plolli, "Pana": _pana,
    "Psymneg": _psym(NEG), "Psympos": _psym(POS),
    "Pwkneg": _pwkneg, "Pwkpos": _pwkpos,
    "P1t_add": _p1t_add, "P1t_del": _p1t_del,
    "P0t_add": _p0t_add, "P0t_del": _p0t_del,
    "Ptensort_merge": _ptensort_merge, "Ptensort_split": _ptensort_split,
    "Ppart_merge": _ppart_merge, "Ppart_split": _ppart_split,
    "Pplust": _pplust, "Pwitht": _pwitht,
    "Pderbang": _pderbang, "Pconbang": _pconbang,
    "Pderque": _pderque, "Pconque": _pconque,
    "Pforallt": _pforallt, "Pexistst": _pexistst,
}


def known_tags() -> frozenset[str]:
    return frozenset(_DISPATCH)


# ---------------------------------------------------------------------------
# analytic discipline helpers


def least_unmatched_pair(vars_: frozenset[str], theta) -> tuple[str, str] | None:
    """Least (x, y), lexicographically with x < y, not declared distinct."""
    declared = set()
    for a in theta:
        if a.pred == "=" and a.positive:
            s, t = str(a.args[0]), str(a.args[1])
            declared.add((s, t))
            declared.add((t, s))
    for x in sorted(vars_):
        for y in sorted(vars_):
            if x < y and (x, y) not in declared:
                return (x, y)
    return None


def theta_has_reflexive_distinction(theta) -> bool:
    return any(a.pred == "=" and a.positive and a.args[0] == a.args[1] for a in theta)


def analytic_ma_params(c: Sequent) -> tuple[str, str, str] | None:
    """The unique Pma instance the analytic discipline allows at c, if any."""
    if theta_has_reflexive_distinction(c.theta):
        return None
    pair = least_unmatched_pair(c.vars, c.theta)
    if pair is None:
        return None
    return (pair[0], pair[1], fresh_var(set(c.vars)))
