"""Games as on-demand forests.

Every game object here is a *negative* game described by a hashable tree:

    ("o",)                 one Opponent move q
    ("i",)                 no moves
    ("tens", l, r)         interleaving, only O switches        moves (L m) (R m)
    ("with", l, r)         disjoint union                       moves (inl m) (inr m)
    ("seq", l, r)          interleaving starting in l           moves (hd m) (tl m)
    ("hom", a, b)          a -o b, i.e. b <| dual(a)            moves (hd b-move) (tl a-move)
    ("bang", x)            countably many copies opened in order  moves (cp i m)
    ("iprod", ((k,g),..))  set-indexed product                  moves (el k m)

A *real* game is a pair (obj, start): a positive game is the dual of its
object, which has the same plays with all labels flipped, so legality never
depends on `start`.  The player on turn after an alternating play s is
determined by parity: for start O it is O iff len(s) is even.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

O, P = "O", "P"

Move = object  # nested tuples and the string "q"
Play = tuple

Q = "q"


# ---------------------------------------------------------------------------
# object constructors

OBJ_O = ("o",)
OBJ_I = ("i",)


def tens(l, r):
    return ("tens", l, r)


def with_(l, r):
    return ("with", l, r)


def seq(l, r):
    return ("seq", l, r)


def hom(a, b):
    return ("hom", a, b)


def bang(x):
    return ("bang", x)


def iprod(parts):
    """parts: iterable of (key, obj); keys are sorted for canonical identity."""
    return ("iprod", tuple(sorted(parts, key=lambda kv: str(kv[0]))))


def iprod_parts(obj) -> dict:
    assert obj[0] == "iprod"
    return dict(obj[1])


def show_obj(obj) -> str:
    match obj[0]:
        case "o":
            return "o"
        case "i":
            return "I"
        case "tens":
            return f"({show_obj(obj[1])} x {show_obj(obj[2])})"
        case "with":
            return f"({show_obj(obj[1])} & {show_obj(obj[2])})"
        case "seq":
            return f"({show_obj(obj[1])} / {show_obj(obj[2])})"
        case "hom":
            return f"({show_obj(obj[1])} -o {show_obj(obj[2])})"
        case "bang":
            return f"!{show_obj(obj[1])}"
        case "iprod":
            inner = ", ".join(f"{k}: {show_obj(g)}" for k, g in obj[1])
            return "{" + inner + "}"
    raise ValueError(f"bad obj {obj!r}")


# ---------------------------------------------------------------------------
# legality and move enumeration


def _restrict(play: Play, tag: str) -> Play:
    return tuple(m[1] for m in play if isinstance(m, tuple) and m[0] == tag)


def _restrict_cp(play: Play, i: int) -> Play:
    return tuple(m[2] for m in play if m[0] == "cp" and m[1] == i)


def _opened_copies(play: Play) -> int:
    top = -1
    for m in play:
        if m[1] > top:
            top = m[1]
    return top + 1


@lru_cache(maxsize=1 << 20)
def moves(obj, play: Play) -> tuple:
    """Legal one-move extensions of the legal play `play`, sorted canonically.

    The returned moves all belong to the player on turn; parity bookkeeping
    ensures components alternate and only the switching player switches.
    """
    mover = len(play) % 2
    kind = obj[0]
    if kind == "o":
        return (Q,) if play == () else ()
    if kind == "i":
        return ()
    if kind == "tens":
        out = []
        lp, rp = _restrict(play, "L"), _restrict(play, "R")
        if len(lp) % 2 == mover:
            out += [("L", m) for m in moves(obj[1], lp)]
        if len(rp) % 2 == mover:
            out += [("R", m) for m in moves(obj[2], rp)]
        return tuple(sorted(out, key=move_key))
    if kind == "with":
        if play == ():
            out = [("inl", m) for m in moves(obj[1], ())]
            out += [("inr", m) for m in moves(obj[2], ())]
            return tuple(sorted(out, key=move_key))
        tag = play[0][0]
        sub = obj[1] if tag == "inl" else obj[2]
        return tuple((tag, m) for m in moves(sub, _restrict(play, tag)))
    if kind == "seq":
        lp, tp = _restrict(play, "hd"), _restrict(play, "tl")
        out = []
        if len(lp) % 2 == mover:
            out += [("hd", m) for m in moves(obj[1], lp)]
        if play != () and len(tp) % 2 == mover:
            out += [("tl", m) for m in moves(obj[2], tp)]
        return tuple(sorted(out, key=move_key))
    if kind == "hom":
        bp, ap = _restrict(play, "hd"), _restrict(play, "tl")
        out = []
        if len(bp) % 2 == mover:
            out += [("hd", m) for m in moves(obj[2], bp)]
        if play != () and len(ap) % 2 != mover:  # the hom domain is flipped
            out += [("tl", m) for m in moves(obj[1], ap)]
        return tuple(sorted(out, key=move_key))
    if kind == "bang":
        out = []
        opened = _opened_copies(play)
        for i in range(opened + 1):
            sp = _restrict_cp(play, i)
            if len(sp) % 2 == mover:
                out += [("cp", i, m) for m in moves(obj[1], sp)]
        return tuple(sorted(out, key=move_key))
    if kind == "iprod":
        if play == ():
            out = []
            for k, g in obj[1]:
                out += [("el", k, m) for m in moves(g, ())]
            return tuple(sorted(out, key=move_key))
        k0 = play[0][1]
        g0 = dict(obj[1])[k0]
        return tuple(("el", k0, m) for m in moves(g0, tuple(m[2] for m in play)))
    raise ValueError(f"bad obj {obj!r}")


def move_key(m):
    """Canonical ordering of moves so enumerations are bit-stable."""
    if m == Q:
        return ("q",)
    tag = m[0]
    if tag == "cp":
        return ("cp", m[1]) + move_key(m[2])
    if tag == "el":
        return ("el", str(m[1])) + move_key(m[2])
    return (tag,) + move_key(m[1])


def is_legal(obj, play: Play) -> bool:
    for i, m in enumerate(play):
        if m not in moves(obj, play[:i]):
            return False
    return True


def mover_at(start: str, position: int) -> str:
    if start == O:
        return O if position % 2 == 0 else P
    return P if position % 2 == 0 else O


def flatten_move(m) -> list:
    """Linearize a nested move into a path list for JSON traces."""
    if m == Q:
        return ["q"]
    if m[0] == "cp":
        return ["cp", m[1]] + flatten_move(m[2])
    if m[0] == "el":
        return ["el", m[1]] + flatten_move(m[2])
    return [m[0]] + flatten_move(m[1])


def unflatten_move(path: list):
    head = path[0]
    if head == "q":
        return Q
    if head in ("cp", "el"):
        return (head, path[1], unflatten_move(path[2:]))
    return (head, unflatten_move(path[1:]))


@dataclass(frozen=True)
class Game:
    """A real game: object plus starting player."""

    obj: tuple
    start: str

    def next_moves(self, play: Play) -> tuple:
        return moves(self.obj, play)

    def is_legal(self, play: Play) -> bool:
        return is_legal(self.obj, play)

    def mover(self, play: Play) -> str:
        return mover_at(self.start, len(play))

    def plays_to(self, n: int) -> list[Play]:
        """All legal plays of length <= n, in a stable order."""
        out: list[Play] = [()]
        frontier: list[Play] = [()]
        for _ in range(n):
            nxt: list[Play] = []
            for s in frontier:
                for m in moves(self.obj, s):
                    nxt.append(s + (m,))
            out.extend(nxt)
            frontier = nxt
            if not frontier:
                break
        return out
