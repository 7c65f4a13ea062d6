"""Polarized first-order syntax: terms, formulas, sequents, duality, parsing.

Formulas carry their polarity structurally: each constructor checks the
polarity of its operands, so ill-polarized formulas cannot be built.
The ASCII surface grammar is

    units     1 0 top bot
    atoms     p(x,y)   ~p(x,y)   s = t   s != t
    prefix    !N  ?P   all x. N   ex x. P
    infix     /  (left merge)   \\  (right merge)     [tightest]
              *  (tensor)       %  (par)
              &  (with)         +  (plus)             [loosest]

with all binary operators left-associative.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator

NEG = "-"
POS = "+"


class SyntaxError_(ValueError):
    """Lexical or grammatical error in formula/sequent text."""


class PolarityError(ValueError):
    """Operator applied to operands of the wrong polarity."""


# ---------------------------------------------------------------------------
# terms


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Fun:
    name: str
    args: tuple[Term, ...]

    def __str__(self) -> str:
        if not self.args:
            return f"{self.name}()"
        return f"{self.name}({', '.join(map(str, self.args))})"


Term = Var | Fun


def term_vars(t: Term) -> frozenset[str]:
    if isinstance(t, Var):
        return frozenset({t.name})
    out: frozenset[str] = frozenset()
    for a in t.args:
        out |= term_vars(a)
    return out


def term_subst(t: Term, mapping: dict[str, Term]) -> Term:
    if isinstance(t, Var):
        return mapping.get(t.name, t)
    return Fun(t.name, tuple(term_subst(a, mapping) for a in t.args))


def has_function_symbols(t: Term) -> bool:
    return isinstance(t, Fun)


# ---------------------------------------------------------------------------
# signature


@dataclass(frozen=True)
class Signature:
    """Predicate pairs (name used for both an atom and its complement) and
    function symbols, each with an arity.  `=` (arity 2) is always present;
    its complement is written `!=`."""

    predicates: dict[str, int] = field(default_factory=dict)
    functions: dict[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.predicates.setdefault("=", 2)

    def pred_arity(self, name: str) -> int:
        if name not in self.predicates:
            raise SyntaxError_(f"unknown predicate {name!r}")
        return self.predicates[name]

    def fun_arity(self, name: str) -> int:
        if name not in self.functions:
            raise SyntaxError_(f"unknown function symbol {name!r}")
        return self.functions[name]


# ---------------------------------------------------------------------------
# formulas


@dataclass(frozen=True)
class Formula:
    def polarity(self) -> str:
        raise NotImplementedError

    def __str__(self) -> str:
        return show(self)


@dataclass(frozen=True)
class One(Formula):
    def polarity(self) -> str:
        return NEG


@dataclass(frozen=True)
class Zero(Formula):
    def polarity(self) -> str:
        return POS


@dataclass(frozen=True)
class Bot(Formula):
    def polarity(self) -> str:
        return NEG


@dataclass(frozen=True)
class Top(Formula):
    def polarity(self) -> str:
        return POS


@dataclass(frozen=True)
class Atom(Formula):
    """`positive=False` is the negative atom p(s...), `positive=True` its
    complement ~p(s...).  Equality is the pair `=` / `!=`."""

    pred: str
    args: tuple[Term, ...]
    positive: bool

    def polarity(self) -> str:
        return POS if self.positive else NEG


@dataclass(frozen=True)
class Tensor(Formula):
    left: Formula
    right: Formula

    def __post_init__(self) -> None:
        _need(self.left, NEG, "*")
        _need(self.right, NEG, "*")

    def polarity(self) -> str:
        return NEG


@dataclass(frozen=True)
class Par(Formula):
    left: Formula
    right: Formula

    def __post_init__(self) -> None:
        _need(self.left, POS, "%")
        _need(self.right, POS, "%")

    def polarity(self) -> str:
        return POS


@dataclass(frozen=True)
class With(Formula):
    left: Formula
    right: Formula

    def __post_init__(self) -> None:
        _need(self.left, NEG, "&")
        _need(self.right, NEG, "&")

    def polarity(self) -> str:
        return NEG


@dataclass(frozen=True)
class Plus(Formula):
    left: Formula
    right: Formula

    def __post_init__(self) -> None:
        _need(self.left, POS, "+")
        _need(self.right, POS, "+")

    def polarity(self) -> str:
        return POS


@dataclass(frozen=True)
class Seq(Formula):
    """Left merge A / N: first move in A, right operand negative."""

    left: Formula
    right: Formula

    def __post_init__(self) -> None:
        _need(self.right, NEG, "/")

    def polarity(self) -> str:
        return self.left.polarity()


@dataclass(frozen=True)
class Seqr(Formula):
    """Right merge A \\ P: first move in A, right operand positive."""

    left: Formula
    right: Formula

    def __post_init__(self) -> None:
        _need(self.right, POS, "\\")

    def polarity(self) -> str:
        return self.left.polarity()


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula

    def __post_init__(self) -> None:
        _need(self.body, NEG, "all")

    def polarity(self) -> str:
        return NEG


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula

    def __post_init__(self) -> None:
        _need(self.body, POS, "ex")

    def polarity(self) -> str:
        return POS


@dataclass(frozen=True)
class Bang(Formula):
    body: Formula

    def __post_init__(self) -> None:
        _need(self.body, NEG, "!")

    def polarity(self) -> str:
        return NEG


@dataclass(frozen=True)
class Quest(Formula):
    body: Formula

    def __post_init__(self) -> None:
        _need(self.body, POS, "?")

    def polarity(self) -> str:
        return POS


def _need(f: Formula, pol: str, op: str) -> None:
    if f.polarity() != pol:
        want = "negative" if pol == NEG else "positive"
        raise PolarityError(f"operand of {op!r} must be {want}: {f}")


ONE = One()
ZERO = Zero()
BOT = Bot()
TOP = Top()


def dual(f: Formula) -> Formula:
    """Involutive negation: swap every unit, atom and connective for its dual."""
    match f:
        case One():
            return ZERO
        case Zero():
            return ONE
        case Bot():
            return TOP
        case Top():
            return BOT
        case Atom(p, args, pos):
            return Atom(p, args, not pos)
        case Tensor(l, r):
            return Par(dual(l), dual(r))
        case Par(l, r):
            return Tensor(dual(l), dual(r))
        case With(l, r):
            return Plus(dual(l), dual(r))
        case Plus(l, r):
            return With(dual(l), dual(r))
        case Seq(l, r):
            return Seqr(dual(l), dual(r))
        case Seqr(l, r):
            return Seq(dual(l), dual(r))
        case Forall(x, b):
            return Exists(x, dual(b))
        case Exists(x, b):
            return Forall(x, dual(b))
        case Bang(b):
            return Quest(dual(b))
        case Quest(b):
            return Bang(dual(b))
    raise TypeError(f"not a formula: {f!r}")


def free_vars(f: Formula) -> frozenset[str]:
    match f:
        case Atom(_, args, _):
            out: frozenset[str] = frozenset()
            for t in args:
                out |= term_vars(t)
            return out
        case Tensor(l, r) | Par(l, r) | With(l, r) | Plus(l, r) | Seq(l, r) | Seqr(l, r):
            return free_vars(l) | free_vars(r)
        case Forall(x, b) | Exists(x, b):
            return free_vars(b) - {x}
        case Bang(b) | Quest(b):
            return free_vars(b)
    return frozenset()


def formula_size(f: Formula) -> int:
    match f:
        case Tensor(l, r) | Par(l, r) | With(l, r) | Plus(l, r) | Seq(l, r) | Seqr(l, r):
            return 1 + formula_size(l) + formula_size(r)
        case Forall(_, b) | Exists(_, b) | Bang(b) | Quest(b):
            return 1 + formula_size(b)
    return 1


def mentions_exponential(f: Formula) -> bool:
    match f:
        case Bang(_) | Quest(_):
            return True
        case Tensor(l, r) | Par(l, r) | With(l, r) | Plus(l, r) | Seq(l, r) | Seqr(l, r):
            return mentions_exponential(l) or mentions_exponential(r)
        case Forall(_, b) | Exists(_, b):
            return mentions_exponential(b)
    return False


def formula_has_functions(f: Formula) -> bool:
    match f:
        case Atom(_, args, _):
            return any(has_function_symbols(t) for t in args)
        case Tensor(l, r) | Par(l, r) | With(l, r) | Plus(l, r) | Seq(l, r) | Seqr(l, r):
            return formula_has_functions(l) or formula_has_functions(r)
        case Forall(_, b) | Exists(_, b) | Bang(b) | Quest(b):
            return formula_has_functions(b)
    return False


def subst(f: Formula, var: str, t: Term) -> Formula:
    """Capture-avoiding substitution of t for var in f."""
    return _subst(f, {var: t})


def _subst(f: Formula, mapping: dict[str, Term]) -> Formula:
    mapping = {v: t for v, t in mapping.items() if t != Var(v)}
    if not mapping:
        return f
    match f:
        case Atom(p, args, pos):
            return Atom(p, tuple(term_subst(a, mapping) for a in args), pos)
        case Tensor(l, r):
            return Tensor(_subst(l, mapping), _subst(r, mapping))
        case Par(l, r):
            return Par(_subst(l, mapping), _subst(r, mapping))
        case With(l, r):
            return With(_subst(l, mapping), _subst(r, mapping))
        case Plus(l, r):
            return Plus(_subst(l, mapping), _subst(r, mapping))
        case Seq(l, r):
            return Seq(_subst(l, mapping), _subst(r, mapping))
        case Seqr(l, r):
            return Seqr(_subst(l, mapping), _subst(r, mapping))
        case Forall(x, b) | Exists(x, b):
            fvb = free_vars(b)
            inner = {v: t for v, t in mapping.items() if v != x and v in fvb}
            if any(x in term_vars(t) for t in inner.values()):
                avoid = set(fvb) | {x}
                for t in inner.values():
                    avoid |= term_vars(t)
                x2 = fresh_var(avoid)
                b = _subst(b, {x: Var(x2)})
                x = x2
            b2 = _subst(b, inner)
            return Forall(x, b2) if isinstance(f, Forall) else Exists(x, b2)
        case Bang(b):
            return Bang(_subst(b, mapping))
        case Quest(b):
            return Quest(_subst(b, mapping))
    return f


def _free_of(f: Formula, names: set[str]) -> set[str]:
    return set(free_vars(f)) & names


def fresh_var(avoid: set[str] | frozenset[str]) -> str:
    """Least name of the form z0, z1, ... not in avoid."""
    i = 0
    while f"z{i}" in avoid:
        i += 1
    return f"z{i}"


# ---------------------------------------------------------------------------
# sequents


@dataclass(frozen=True)
class Sequent:
    """X ; Theta |- Gamma with FV(Theta, Gamma) included in X and Gamma nonempty.

    Theta is a set of positive atomic formulas, kept as a sorted tuple so that
    equal sequents compare equal."""

    vars: frozenset[str]
    theta: tuple[Atom, ...]
    gamma: tuple[Formula, ...]

    def __post_init__(self) -> None:
        if not self.gamma:
            raise SyntaxError_("sequent needs a nonempty formula list")
        object.__setattr__(self, "theta", canonical_theta(self.theta))
        fv: frozenset[str] = frozenset()
        for a in self.theta:
            if not a.positive:
                raise SyntaxError_(f"Theta admits only positive atoms: {a}")
            fv |= free_vars(a)
        for g in self.gamma:
            fv |= free_vars(g)
        if not fv <= self.vars:
            raise SyntaxError_(f"free variables {sorted(fv - self.vars)} not declared")

    @property
    def head(self) -> Formula:
        return self.gamma[0]

    @property
    def tail(self) -> tuple[Formula, ...]:
        return self.gamma[1:]

    def with_gamma(self, gamma: tuple[Formula, ...]) -> Sequent:
        return Sequent(self.vars, self.theta, gamma)

    def __str__(self) -> str:
        xs = " ".join(sorted(self.vars))
        th = ", ".join(show(a) for a in self.theta)
        gs = ", ".join(show(g) for g in self.gamma)
        return f"{xs} ; {th} |- {gs}".strip()


def canonical_theta(theta) -> tuple[Atom, ...]:
    return tuple(sorted(set(theta), key=lambda a: (a.pred, tuple(map(str, a.args)))))


def theta_is_lean(vars_: frozenset[str], theta: tuple[Atom, ...]) -> bool:
    """Lean: declares x != y for all distinct pairs and never x != x."""
    neq = {(str(a.args[0]), str(a.args[1])) for a in theta if a.pred == "=" and a.positive}
    for x, y in list(neq):
        if x == y:
            return False
    for x in vars_:
        for y in vars_:
            if x != y and (x, y) not in neq and (y, x) not in neq:
                return False
    return True


def sequent_subst(s: Sequent, x: str, y: str, z: str) -> Sequent:
    """(X ; Theta |- Gamma)[z/x, z/y]: merge x and y into the fresh name z."""
    m: dict[str, Term] = {x: Var(z), y: Var(z)}
    theta = tuple(_subst(a, m) for a in s.theta)
    gamma = tuple(_subst(g, m) for g in s.gamma)
    return Sequent((s.vars - {x, y}) | {z}, theta, gamma)  # type: ignore[arg-type]


def sequent_has_functions(s: Sequent) -> bool:
    return any(formula_has_functions(a) for a in s.theta) or any(
        formula_has_functions(g) for g in s.gamma
    )


def sequent_has_exponentials(s: Sequent) -> bool:
    return any(mentions_exponential(g) for g in s.gamma)


def sequent_size(s: Sequent) -> int:
    return sum(formula_size(g) for g in s.gamma)


# ---------------------------------------------------------------------------
# printing

_TIER_WITH = 1  # & +
_TIER_TENS = 2  # * %
_TIER_MERGE = 3  # / \


def _tier(f: Formula) -> int:
    match f:
        case With(_, _) | Plus(_, _):
            return _TIER_WITH
        case Tensor(_, _) | Par(_, _):
            return _TIER_TENS
        case Seq(_, _) | Seqr(_, _):
            return _TIER_MERGE
        case Forall(_, _) | Exists(_, _):
            return 0
    return 9


_OPS = {Tensor: "*", Par: "%", With: "&", Plus: "+", Seq: "/", Seqr: "\\"}


def show(f: Formula) -> str:
    """Print with minimal parentheses; parse(show(f)) == f."""
    match f:
        case One():
            return "1"
        case Zero():
            return "0"
        case Bot():
            return "bot"
        case Top():
            return "top"
        case Atom("=", (a, b), pos):
            return f"{a} != {b}" if pos else f"{a} = {b}"
        case Atom(p, args, pos):
            mark = "~" if pos else ""
            if not args:
                return f"{mark}{p}"
            return f"{mark}{p}({', '.join(map(str, args))})"
        case Forall(x, b):
            return f"all {x}. {show(b)}"
        case Exists(x, b):
            return f"ex {x}. {show(b)}"
        case Bang(b):
            return f"!{_paren(b, 9, left=False)}"
        case Quest(b):
            return f"?{_paren(b, 9, left=False)}"
        case Tensor(l, r) | Par(l, r) | With(l, r) | Plus(l, r) | Seq(l, r) | Seqr(l, r):
            op = _OPS[type(f)]
            t = _tier(f)
            return f"{_paren(l, t, left=True)} {op} {_paren(r, t, left=False)}"
    raise TypeError(f"not a formula: {f!r}")


def _paren(f: Formula, parent_tier: int, left: bool) -> str:
    t = _tier(f)
    s = show(f)
    if t == 9:
        return s
    if t == 0 or t < parent_tier or (t == parent_tier and not left):
        return f"({s})"
    # same tier on the left: distinct operators still associate left, but
    # parenthesize for readability when the operators differ
    return s


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(
    r"\s*(?:(?P<lpar>\()|(?P<rpar>\))|(?P<neq>!=)|(?P<eq>=)|(?P<op>[*%&+/\\])"
    r"|(?P<bang>!)|(?P<quest>\?)|(?P<tilde>~)|(?P<dot>\.)|(?P<comma>,)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9']*)|(?P<num>[10])|(?P<turnstile>\|-)|(?P<semi>;))"
)


def _tokens(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            rest = text[pos:].strip()
            if not rest:
                break
            raise SyntaxError_(f"cannot tokenize at {rest[:20]!r}")
        pos = m.end()
        kind = m.lastgroup
        assert kind is not None
        out.append((kind, m.group(kind)))
    return out


class _P:
    def __init__(self, toks: list[tuple[str, str]], sig: Signature):
        self.toks = toks
        self.i = 0
        self.sig = sig

    def peek(self) -> tuple[str, str] | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def next(self) -> tuple[str, str]:
        t = self.peek()
        if t is None:
            raise SyntaxError_("unexpected end of input")
        self.i += 1
        return t

    def expect(self, kind: str) -> str:
        k, v = self.next()
        if k != kind:
            raise SyntaxError_(f"expected {kind}, got {v!r}")
        return v

    # formulas -------------------------------------------------------------
    def formula(self) -> Formula:
        return self.level(_TIER_WITH)

    def level(self, tier: int) -> Formula:
        ops = {_TIER_WITH: "&+", _TIER_TENS: "*%", _TIER_MERGE: "/\\"}[tier]
        f = self.unary() if tier == _TIER_MERGE else self.level(tier + 1)
        while True:
            t = self.peek()
            if t is None or t[0] != "op" or t[1] not in ops:
                return f
            op = self.next()[1]
            g = self.unary() if tier == _TIER_MERGE else self.level(tier + 1)
            f = {"*": Tensor, "%": Par, "&": With, "+": Plus, "/": Seq, "\\": Seqr}[op](f, g)

    def unary(self) -> Formula:
        t = self.peek()
        if t is None:
            raise SyntaxError_("unexpected end of input")
        kind, val = t
        if kind == "bang":
            self.next()
            return Bang(self.unary())
        if kind == "quest":
            self.next()
            return Quest(self.unary())
        if kind == "name" and val in ("all", "ex"):
            self.next()
            x = self.expect("name")
            self.expect("dot")
            body = self.formula()
            return Forall(x, body) if val == "all" else Exists(x, body)
        return self.atomic()

    def atomic(self) -> Formula:
        kind, val = self.next()
        if kind == "num":
            return ONE if val == "1" else ZERO
        if kind == "lpar":
            f = self.formula()
            self.expect("rpar")
            return f
        if kind == "tilde":
            name = self.expect("name")
            args = self.maybe_args()
            self.check_pred(name, len(args))
            return Atom(name, args, positive=True)
        if kind == "name":
            if val == "top":
                return TOP
            if val == "bot":
                return BOT
            # a term followed by =/!= is an equality atom; otherwise val is a
            # predicate (with optional argument list)
            nxt = self.peek()
            if nxt is not None and nxt[0] == "lpar" and val in self.sig.functions:
                left: Term = self.term_after_name(val)
                return self.equality(left)
            if nxt is not None and nxt[0] in ("eq", "neq"):
                return self.equality(Var(val))
            args = self.maybe_args()
            self.check_pred(val, len(args))
            return Atom(val, args, positive=False)
        raise SyntaxError_(f"unexpected token {val!r}")

    def equality(self, left: Term) -> Formula:
        kind, _ = self.next()
        if kind not in ("eq", "neq"):
            raise SyntaxError_("expected = or !=")
        right = self.term()
        return Atom("=", (left, right), positive=(kind == "neq"))

    def maybe_args(self) -> tuple[Term, ...]:
        if self.peek() is not None and self.peek()[0] == "lpar":  # type: ignore[index]
            self.next()
            args = [self.term()]
            while self.peek() is not None and self.peek()[0] == "comma":  # type: ignore[index]
                self.next()
                args.append(self.term())
            self.expect("rpar")
            return tuple(args)
        return ()

    def check_pred(self, name: str, n: int) -> None:
        if name in self.sig.predicates:
            if self.sig.predicates[name] != n:
                raise SyntaxError_(f"predicate {name!r} expects {self.sig.predicates[name]} arguments")
        else:
            raise SyntaxError_(f"unknown predicate {name!r}")

    # terms ----------------------------------------------------------------
    def term(self) -> Term:
        name = self.expect("name")
        return self.term_after_name(name)

    def term_after_name(self, name: str) -> Term:
        if self.peek() is not None and self.peek()[0] == "lpar" and name in self.sig.functions:  # type: ignore[index]
            self.next()
            args = [self.term()]
            while self.peek() is not None and self.peek()[0] == "comma":  # type: ignore[index]
                self.next()
                args.append(self.term())
            self.expect("rpar")
            if self.sig.functions[name] != len(args):
                raise SyntaxError_(f"function {name!r} expects {self.sig.functions[name]} arguments")
            return Fun(name, tuple(args))
        return Var(name)


def parse_formula(text: str, sig: Signature) -> Formula:
    p = _P(_tokens(text), sig)
    f = p.formula()
    if p.peek() is not None:
        raise SyntaxError_(f"trailing input at {p.peek()[1]!r}")  # type: ignore[index]
    return f


def parse_term(text: str, sig: Signature) -> Term:
    p = _P(_tokens(text), sig)
    t = p.term()
    if p.peek() is not None:
        raise SyntaxError_(f"trailing input at {p.peek()[1]!r}")  # type: ignore[index]
    return t


def parse_sequent(text: str, sig: Signature) -> Sequent:
    """`x y ; ~p(x,y), x != y |- F1, F2` — variable block and Theta optional."""
    if "|-" not in text:
        raise SyntaxError_("sequent needs |-")
    left, right = text.split("|-", 1)
    vars_: frozenset[str] = frozenset()
    theta: list[Atom] = []
    if ";" in left:
        vtext, ttext = left.split(";", 1)
        vars_ = frozenset(vtext.split())
        ttext = ttext.strip()
        if ttext:
            for part in _split_commas(ttext):
                a = parse_formula(part, sig)
                if not isinstance(a, Atom) or not a.positive:
                    raise SyntaxError_(f"Theta admits only positive atoms: {part.strip()!r}")
                theta.append(a)
    elif left.strip():
        raise SyntaxError_("variable block requires a ';' before Theta")
    gamma = [parse_formula(part, sig) for part in _split_commas(right)]
    return Sequent(vars_, tuple(theta), tuple(gamma))


def _split_commas(text: str) -> Iterator[str]:
    depth = 0
    start = 0
    for i, c in enumerate(text):
        if c == "(":
            depth += 1
        elif c == ")":
            depth -= 1
        elif c == "," and depth == 0:
            yield text[start:i]
            start = i + 1
    yield text[start:]


def signature_of_text(*texts: str) -> Signature:
    """Infer a signature from atoms mentioned in formula/sequent text.

    Names prefixed with ~ or applied to argument lists are predicates; every
    name directly left of = / != is a variable.  Functions are not inferred.
    """
    preds: dict[str, int] = {"=": 2}
    pat = re.compile(r"(~?)([A-Za-z_][A-Za-z_0-9']*)\s*(\(([^()]*)\))?")
    reserved = {"all", "ex", "top", "bot"}
    for text in texts:
        body = text.split("|-", 1)
        chunks = [text] if len(body) == 1 else [body[0].split(";", 1)[-1], body[1]]
        for chunk in chunks:
            for m in pat.finditer(chunk):
                tilde, name, parens, args = m.group(1), m.group(2), m.group(3), m.group(4)
                if name in reserved:
                    continue
                after = chunk[m.end():].lstrip()
                if after.startswith("=") or after.startswith("!="):
                    continue
                before = chunk[: m.start()].rstrip()
                if before.endswith("all") or before.endswith("ex"):
                    continue
                if parens:
                    preds[name] = len([a for a in args.split(",") if a.strip()])
                elif tilde or _looks_propositional(chunk, m.start(), m.end()):
                    preds.setdefault(name, 0)
    return Signature(preds, {})


def _looks_propositional(chunk: str, start: int, end: int) -> bool:
    # a bare name in formula position (not followed by '.') is a 0-ary atom
    after = chunk[end:].lstrip()
    return not after.startswith(".")
