"""Workbench for the polarized first-order logic WS1.

Subpackages: syntax and proof checking (syntax, rules, proofs), the games
engine (games, strategies, combinators), finite first-order models (models),
denotational semantics (semantics), normalization by reification (reify),
and tooling (corpus, oracles, translate, cli).
"""

from ws1.syntax import (
    Atom,
    Bang,
    Bot,
    Exists,
    Forall,
    Formula,
    Fun,
    One,
    Par,
    Plus,
    Quest,
    Seq,
    Seqr,
    Sequent,
    Signature,
    Tensor,
    Term,
    Top,
    Var,
    With,
    Zero,
    dual,
    parse_formula,
    parse_sequent,
    show,
)

__all__ = [
    "Atom", "Bang", "Bot", "Exists", "Forall", "Formula", "Fun", "One",
    "Par", "Plus", "Quest", "Seq", "Seqr", "Sequent", "Signature", "Tensor",
    "Term", "Top", "Var", "With", "Zero", "dual", "parse_formula",
    "parse_sequent", "show",
]
