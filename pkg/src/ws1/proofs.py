"""Proof trees, the checker, the analytic discipline, paraproofs and
on-demand infinitary proofs with depth truncation.

A ProofTree stores the conclusion at every node; `check` revalidates each node
against `premises_of`, so a tree built from a script is trustworthy only after
checking.  Paraproofs are trees that may use the daemon rule Peps anywhere;
they are ordered by the prefix relation with Peps as bottom.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterator

from ws1.rules import (
    DAEMON_TAG, RuleError, RuleId, analytic_ma_params, arity, is_core,
    premises_of, rid,
)
from ws1.syntax import (
    Formula, Fun, Sequent, Signature, SyntaxError_, Term, Var,
    parse_formula, parse_term, show, theta_is_lean,
)

PROOF_FORMAT_VERSION = 1


class CheckError(ValueError):
    """Raised by `check`, carrying the failing path and reason."""

    def __init__(self, path: tuple[int, ...], reason: str):
        self.path = path
        self.reason = reason
        where = "root" if not path else "/".join(map(str, path))
        super().__init__(f"at {where}: {reason}")


@dataclass(frozen=True)
class ProofTree:
    rule: RuleId
    conclusion: Sequent
    children: tuple["ProofTree", ...] = ()

    def __str__(self) -> str:
        return script_of(self)

    def nodes(self) -> Iterator["ProofTree"]:
        yield self
        for c in self.children:
            yield from c.nodes()

    def depth(self) -> int:
        if not self.children:
            return 1
        return 1 + max(c.depth() for c in self.children)


@dataclass(frozen=True)
class CheckedProof:
    """A ProofTree that passed `check`.  Obtain via `check` only."""

    tree: ProofTree

    @property
    def conclusion(self) -> Sequent:
        return self.tree.conclusion


def daemon(concl: Sequent) -> ProofTree:
    return ProofTree(rid(DAEMON_TAG), concl)


def node(rule: RuleId, concl: Sequent, *children: ProofTree) -> ProofTree:
    return ProofTree(rule, concl, tuple(children))


def build(rule: RuleId, concl: Sequent, *children_builders) -> ProofTree:
    """Construct a node, deriving nothing: children must already carry the
    premise conclusions (validated later by `check`)."""
    return ProofTree(rule, concl, tuple(children_builders))


def check(p: ProofTree, allow_daemon: bool = False) -> CheckedProof:
    """Validate every node; returns the tree tagged checked.

    Reports the first failing node with its path (child indices from the
    root) and the reason.
    """
    _check_at(p, (), allow_daemon)
    return CheckedProof(p)


def _check_at(p: ProofTree, path: tuple[int, ...], allow_daemon: bool) -> None:
    if p.rule.tag == DAEMON_TAG:
        if not allow_daemon:
            raise CheckError(path, "daemon rule Peps is only legal in paraproofs")
        if p.children:
            raise CheckError(path, "Peps takes no premises")
        return
    try:
        premises = premises_of(p.rule, p.conclusion)
    except RuleError as e:
        raise CheckError(path, str(e)) from None
    if len(premises) != len(p.children):
        raise CheckError(
            path, f"{p.rule} needs {len(premises)} premise(s), got {len(p.children)}"
        )
    for i, (want, child) in enumerate(zip(premises, p.children)):
        if child.conclusion != want:
            raise CheckError(
                path + (i,),
                f"premise mismatch: expected {want}, got {child.conclusion}",
            )
        _check_at(child, path + (i,), allow_daemon)


def is_analytic(p: ProofTree | CheckedProof) -> bool:
    """Core rules only; non-equality rules conclude lean-Theta sequents only;
    every Pma instance picks the least unmatched pair and least fresh name."""
    if isinstance(p, CheckedProof):
        p = p.tree
    for n in p.nodes():
        tag = n.rule.tag
        if tag == DAEMON_TAG:
            continue
        if not is_core(n.rule):
            return False
        if tag == "Pma":
            want = analytic_ma_params(n.conclusion)
            if want is None or n.rule.params != want:
                return False
        elif tag != "Pneq":
            if not theta_is_lean(n.conclusion.vars, n.conclusion.theta):
                return False
    return True


# ---------------------------------------------------------------------------
# prefix order on paraproofs


def prefix_leq(p: ProofTree, q: ProofTree) -> bool:
    """p is obtained from q by replacing subtrees with Peps."""
    if p.rule.tag == DAEMON_TAG:
        return p.conclusion == q.conclusion
    if p.rule != q.rule or p.conclusion != q.conclusion:
        return False
    if len(p.children) != len(q.children):
        return False
    return all(prefix_leq(a, b) for a, b in zip(p.children, q.children))


# ---------------------------------------------------------------------------
# infinitary proofs


class InfiniteProof:
    """A corecursive analytic proof: the root rule and conclusion are given,
    children are produced on demand and cached."""

    def __init__(
        self,
        rule: RuleId,
        conclusion: Sequent,
        make_children: Callable[[], tuple["InfiniteProof", ...]],
    ):
        self.rule = rule
        self.conclusion = conclusion
        self._make = make_children
        self._children: tuple[InfiniteProof, ...] | None = None

    @property
    def children(self) -> tuple["InfiniteProof", ...]:
        if self._children is None:
            self._children = self._make()
        return self._children


def finite_as_infinite(p: ProofTree) -> InfiniteProof:
    return InfiniteProof(
        p.rule, p.conclusion, lambda: tuple(finite_as_infinite(c) for c in p.children)
    )


def truncate(p: InfiniteProof | ProofTree, k: int) -> ProofTree:
    """Replace all nodes at depth k by Peps; truncations form a prefix chain."""
    if k <= 0:
        return daemon(p.conclusion)
    children = tuple(truncate(c, k - 1) for c in p.children)
    return ProofTree(p.rule, p.conclusion, children)


# ---------------------------------------------------------------------------
# proof scripts (parenthesized prefix form) and JSON

_PARAM_KINDS: dict[str, tuple[str, ...]] = {
    # rule tag -> parameter kinds, in order: v(ariable) t(erm) f(ormula) i(nt)
    "Pexists": ("t",),
    "Pma": ("v", "v", "v"),
    "Pcut": ("i", "i", "f"),
    "Pcut0": ("f",),
    "Pmul": ("i", "i"),
    "Plolli": ("i",),
    "Psymneg": ("i",), "Psympos": ("i",),
    "Pwkneg": ("i", "f"), "Pwkpos": ("i",),
    "P1t_add": ("i",), "P1t_del": ("i",), "P0t_add": ("i",), "P0t_del": ("i",),
    "Ptensort_merge": ("i",), "Ptensort_split": ("i",),
    "Ppart_merge": ("i",), "Ppart_split": ("i",),
    "Pplust": ("i", "i"), "Pwitht": ("i", "i", "f"),
    "Pderbang": ("i",), "Pconbang": ("i",), "Pderque": ("i",), "Pconque": ("i",),
    "Pforallt": ("i", "t", "f"), "Pexistst": ("i", "t"),
}


def script_of(p: ProofTree) -> str:
    parts = [p.rule.tag]
    for kind, param in zip(_PARAM_KINDS.get(p.rule.tag, ()), p.rule.params):
        if kind == "f":
            parts.append("{" + show(param) + "}")
        else:
            parts.append(str(param))
    parts.extend(script_of(c) for c in p.children)
    return "(" + " ".join(parts) + ")"


def parse_proof(text: str, conclusion: Sequent, sig: Signature) -> ProofTree:
    """Parse the prefix script and annotate each node with its conclusion,
    derived from `conclusion` via `premises_of` (daemon nodes allowed)."""
    toks = _script_tokens(text)
    tree, rest = _parse_script(toks, 0, conclusion, sig)
    if rest != len(toks):
        raise SyntaxError_("trailing input after proof script")
    return tree


def _script_tokens(text: str) -> list[str]:
    out: list[str] = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "()":
            out.append(c)
            i += 1
        elif c == "{":
            j = text.index("}", i)
            out.append(text[i : j + 1])
            i = j + 1
        else:
            j = i
            while j < len(text) and not text[j].isspace() and text[j] not in "(){}":
                j += 1
            out.append(text[i:j])
            i = j
    return out


def _parse_script(
    toks: list[str], i: int, concl: Sequent, sig: Signature
) -> tuple[ProofTree, int]:
    if i >= len(toks) or toks[i] != "(":
        raise SyntaxError_("expected '(' in proof script")
    i += 1
    tag = toks[i]
    i += 1
    params: list = []
    for kind in _PARAM_KINDS.get(tag, ()):
        tok = toks[i]
        i += 1
        if kind == "i":
            params.append(int(tok))
        elif kind == "v":
            params.append(tok)
        elif kind == "t":
            params.append(parse_term(tok, sig))
        elif kind == "f":
            if not tok.startswith("{"):
                raise SyntaxError_(f"expected {{formula}} in {tag}")
            params.append(parse_formula(tok[1:-1], sig))
    rule = RuleId(tag, tuple(params))
    if tag == DAEMON_TAG:
        if toks[i] != ")":
            raise SyntaxError_("Peps takes no premises")
        return daemon(concl), i + 1
    try:
        premises = premises_of(rule, concl)
    except RuleError as e:
        raise SyntaxError_(f"{rule} does not apply at {concl}: {e}") from None
    children = []
    for want in premises:
        child, i = _parse_script(toks, i, want, sig)
        children.append(child)
    if toks[i] != ")":
        raise SyntaxError_(f"expected ')' closing {tag}")
    return ProofTree(rule, concl, tuple(children)), i + 1


def proof_to_json(p: ProofTree) -> dict:
    def go(n: ProofTree) -> dict:
        params = []
        for kind, param in zip(_PARAM_KINDS.get(n.rule.tag, ()), n.rule.params):
            params.append(show(param) if kind == "f" else str(param) if kind == "t" else param)
        return {
            "rule": n.rule.tag,
            "params": params,
            "children": [go(c) for c in n.children],
        }

    return {
        "version": PROOF_FORMAT_VERSION,
        "conclusion": str(p.conclusion),
        "proof": go(p),
    }


def proof_from_json(data: dict, sig: Signature) -> ProofTree:
    if data.get("version") != PROOF_FORMAT_VERSION:
        raise SyntaxError_(f"unsupported proof format version {data.get('version')!r}")
    from ws1.syntax import parse_sequent

    concl = parse_sequent(data["conclusion"], sig)

    def script(nd: dict) -> str:
        parts = [nd["rule"]]
        for kind, param in zip(_PARAM_KINDS.get(nd["rule"], ()), nd["params"]):
            parts.append("{" + param + "}" if kind == "f" else str(param))
        parts.extend(script(c) for c in nd["children"])
        return "(" + " ".join(parts) + ")"

    return parse_proof(script(data["proof"]), concl, sig)
