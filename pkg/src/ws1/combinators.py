"""The strategy-combinator algebra over negative game objects.

A Morph from A to B is a deterministic strategy on hom(A, B).  The algebra
provides copycat, relabeling isomorphisms (pasc, psym, sym, units, dec, dist,
lfe, abs, the exponential unfolding), pairing and projections, currying,
parallel actions of tensor / left merge / hom, interaction composition with
hiding, and anamorphisms into the final coalgebras carried by ! and !x!.

Composition materializes nothing: each answer is computed by extending a
cached interaction sequence move by move, with a fuel bound on hidden
chatter.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ws1.games import (
    Game, O, OBJ_I, OBJ_O, P, Play, Q, bang, hom, iprod, iprod_parts, moves,
    seq, show_obj, tens, with_,
)
from ws1.strategies import Strategy

DEFAULT_FUEL = 10_000


class ShapeError(ValueError):
    pass


class FuelExhausted(RuntimeError):
    """Hidden interaction exceeded the fuel bound; reported, never truncated."""


def _shape(cond: bool, msg: str) -> None:
    if not cond:
        raise ShapeError(msg)


class Morph:
    """A strategy on hom(dom, cod); subclasses implement _respond."""

    def __init__(self, dom, cod, name: str = ""):
        self.dom = dom
        self.cod = cod
        self.name = name
        self._cache: dict[Play, object] = {}

    @property
    def homobj(self):
        return hom(self.dom, self.cod)

    def respond(self, play: Play):
        if play in self._cache:
            return self._cache[play]
        m = self._respond(play)
        self._cache[play] = m
        return m

    def _respond(self, play: Play):
        raise NotImplementedError

    def as_strategy(self) -> Strategy:
        return Strategy(Game(self.homobj, O), self.respond, name=self.name)

    def then(self, other: "Morph") -> "Morph":
        return compose(self, other)

    def __repr__(self) -> str:
        nm = self.name or type(self).__name__
        return f"<{nm}: {show_obj(self.dom)} -> {show_obj(self.cod)}>"


def _split(play: Play) -> tuple[Play, Play]:
    cod_part = tuple(m[1] for m in play if m[0] == "hd")
    dom_part = tuple(m[1] for m in play if m[0] == "tl")
    return cod_part, dom_part


class EmptyMorph(Morph):
    """Never responds; total when the codomain has no opening move (af, t)."""

    def _respond(self, play: Play):
        return None


class RelabelMorph(Morph):
    """Copycat through a translation of codomain plays into domain plays."""

    def __init__(self, dom, cod, translate: Callable[[Play], Play], name: str = ""):
        super().__init__(dom, cod, name)
        self.translate = translate

    def _respond(self, play: Play):
        cp, dp = _split(play)
        last = play[-1]
        if last[0] == "hd":
            want = self.translate(cp)
            if len(want) != len(dp) + 1 or want[: len(dp)] != dp:
                return None
            return ("tl", want[-1])
        for c in moves(self.cod, cp):
            if self.translate(cp + (c,)) == dp:
                return ("hd", c)
        return None


def relabel_moves(dom, cod, move_fn: Callable, name: str = "") -> RelabelMorph:
    return RelabelMorph(dom, cod, lambda cp: tuple(move_fn(m) for m in cp), name=name)


@dataclass
class Iso:
    """A pair of mutually inverse relabeling morphs."""

    fwd: Morph
    bwd: Morph

    @property
    def dom(self):
        return self.fwd.dom

    @property
    def cod(self):
        return self.fwd.cod

    def inv(self) -> "Iso":
        return Iso(self.bwd, self.fwd)


def _iso(dom, cod, c2d, d2c, name: str, movewise: bool = True) -> Iso:
    if movewise:
        f = relabel_moves(dom, cod, c2d, name=name)
        b = relabel_moves(cod, dom, d2c, name=name + "_inv")
    else:
        f = RelabelMorph(dom, cod, c2d, name=name)
        b = RelabelMorph(cod, dom, d2c, name=name + "_inv")
    return Iso(f, b)


def copycat(a) -> Morph:
    return RelabelMorph(a, a, lambda cp: cp, name="copycat")


# ---------------------------------------------------------------------------
# structural isomorphisms (context-free move relabelings unless noted)


def iso_sym(a, b) -> Iso:
    def swap(m):
        return ("R", m[1]) if m[0] == "L" else ("L", m[1])

    return _iso(tens(a, b), tens(b, a), swap, swap, "sym")


def iso_assoc(a, b, c) -> Iso:
    def c2d(m):
        match m:
            case ("L", x):
                return ("L", ("L", x))
            case ("R", ("L", x)):
                return ("L", ("R", x))
            case ("R", ("R", x)):
                return ("R", x)

    def d2c(m):
        match m:
            case ("L", ("L", x)):
                return ("L", x)
            case ("L", ("R", x)):
                return ("R", ("L", x))
            case ("R", x):
                return ("R", ("R", x))

    return _iso(tens(tens(a, b), c), tens(a, tens(b, c)), c2d, d2c, "assoc")


def iso_lunit(a) -> Iso:
    return _iso(tens(OBJ_I, a), a, lambda m: ("R", m), lambda m: m[1], "lunit")


def iso_runit(a) -> Iso:
    return _iso(tens(a, OBJ_I), a, lambda m: ("L", m), lambda m: m[1], "runit")


def iso_unit_seq(a) -> Iso:
    return _iso(seq(a, OBJ_I), a, lambda m: ("hd", m), lambda m: m[1], "unit_seq")


def iso_unit_hom(a) -> Iso:
    return _iso(hom(OBJ_I, a), a, lambda m: ("hd", m), lambda m: m[1], "unit_hom")


def iso_with_sym(a, b) -> Iso:
    def swap(m):
        return ("inr", m[1]) if m[0] == "inl" else ("inl", m[1])

    return _iso(with_(a, b), with_(b, a), swap, swap, "with_sym")


def iso_with_assoc(a, b, c) -> Iso:
    def c2d(m):
        match m:
            case ("inl", x):
                return ("inl", ("inl", x))
            case ("inr", ("inl", x)):
                return ("inl", ("inr", x))
            case ("inr", ("inr", x)):
                return ("inr", x)

    def d2c(m):
        match m:
            case ("inl", ("inl", x)):
                return ("inl", x)
            case ("inl", ("inr", x)):
                return ("inr", ("inl", x))
            case ("inr", x):
                return ("inr", ("inr", x))

    return _iso(with_(with_(a, b), c), with_(a, with_(b, c)), c2d, d2c, "with_assoc")


def iso_with_unit(a) -> Iso:
    """a = a & I."""
    return _iso(a, with_(a, OBJ_I), lambda m: m[1], lambda m: ("inl", m), "with_unit")


def iso_pasc(a, b, c) -> Iso:
    def c2d(m):
        match m:
            case ("hd", ("hd", x)):
                return ("hd", x)
            case ("hd", ("tl", x)):
                return ("tl", ("L", x))
            case ("tl", x):
                return ("tl", ("R", x))

    def d2c(m):
        match m:
            case ("hd", x):
                return ("hd", ("hd", x))
            case ("tl", ("L", x)):
                return ("hd", ("tl", x))
            case ("tl", ("R", x)):
                return ("tl", x)

    return _iso(seq(a, tens(b, c)), seq(seq(a, b), c), c2d, d2c, "pasc")


def iso_pasc_hom(a, b, c) -> Iso:
    def c2d(m):
        match m:
            case ("hd", ("hd", x)):
                return ("hd", x)
            case ("hd", ("tl", x)):
                return ("tl", ("R", x))
            case ("tl", x):
                return ("tl", ("L", x))

    def d2c(m):
        match m:
            case ("hd", x):
                return ("hd", ("hd", x))
            case ("tl", ("R", x)):
                return ("hd", ("tl", x))
            case ("tl", ("L", x)):
                return ("tl", x)

    return _iso(hom(tens(a, b), c), hom(a, hom(b, c)), c2d, d2c, "pasc_hom")


def iso_psym(a, b, c) -> Iso:
    def c2d(m):
        match m:
            case ("hd", ("hd", x)):
                return ("hd", ("hd", x))
            case ("hd", ("tl", x)):
                return ("tl", x)
            case ("tl", x):
                return ("hd", ("tl", x))

    return _iso(seq(seq(a, b), c), seq(seq(a, c), b), c2d, c2d, "psym")


def iso_psym_hom(a, b, c) -> Iso:
    """c -o (b -o a) = b -o (c -o a)."""

    def c2d(m):
        match m:
            case ("hd", ("hd", x)):
                return ("hd", ("hd", x))
            case ("hd", ("tl", x)):
                return ("tl", x)
            case ("tl", x):
                return ("hd", ("tl", x))

    return _iso(hom(c, hom(b, a)), hom(b, hom(c, a)), c2d, c2d, "psym_hom")


def iso_dec(a, b) -> Iso:
    def c2d(m):
        match m:
            case ("inl", ("hd", x)):
                return ("L", x)
            case ("inl", ("tl", x)):
                return ("R", x)
            case ("inr", ("hd", x)):
                return ("R", x)
            case ("inr", ("tl", x)):
                return ("L", x)

    def d2c_play(dp: Play) -> Play:
        if not dp:
            return ()
        side = "inl" if dp[0][0] == "L" else "inr"
        first = "L" if side == "inl" else "R"

        def mv(m):
            return (side, ("hd", m[1]) if m[0] == first else ("tl", m[1]))

        return tuple(mv(m) for m in dp)

    f = relabel_moves(tens(a, b), with_(seq(a, b), seq(b, a)), c2d, name="dec")
    g = RelabelMorph(with_(seq(a, b), seq(b, a)), tens(a, b), d2c_play, name="dec_inv")
    return Iso(f, g)


def iso_dist(a, b, c) -> Iso:
    """(a & b) / c = (a / c) & (b / c)."""

    def c2d(m):
        side, inner = m
        tag = "inl" if side == "inl" else "inr"
        match inner:
            case ("hd", x):
                return ("hd", (tag, x))
            case ("tl", x):
                return ("tl", x)

    def d2c_play(dp: Play) -> Play:
        if not dp:
            return ()
        side = dp[0][1][0]

        def mv(m):
            match m:
                case ("hd", (_, x)):
                    return (side, ("hd", x))
                case ("tl", x):
                    return (side, ("tl", x))

        return tuple(mv(m) for m in dp)

    f = relabel_moves(seq(with_(a, b), c), with_(seq(a, c), seq(b, c)), c2d, name="dist")
    g = RelabelMorph(with_(seq(a, c), seq(b, c)), seq(with_(a, b), c), d2c_play, name="dist_inv")
    return Iso(f, g)


def iso_dist_hom(c, a, b) -> Iso:
    """c -o (a & b) = (c -o a) & (c -o b)."""

    def c2d(m):
        side, inner = m
        tag = "inl" if side == "inl" else "inr"
        match inner:
            case ("hd", x):
                return ("hd", (tag, x))
            case ("tl", x):
                return ("tl", x)

    def d2c_play(dp: Play) -> Play:
        if not dp:
            return ()
        side = dp[0][1][0]

        def mv(m):
            match m:
                case ("hd", (_, x)):
                    return (side, ("hd", x))
                case ("tl", x):
                    return (side, ("tl", x))

        return tuple(mv(m) for m in dp)

    f = relabel_moves(hom(c, with_(a, b)), with_(hom(c, a), hom(c, b)), c2d, name="dist_hom")
    g = RelabelMorph(with_(hom(c, a), hom(c, b)), hom(c, with_(a, b)), d2c_play, name="dist_hom_inv")
    return Iso(f, g)


def iso_dist_iprod(parts, c) -> Iso:
    """(prod_k a_k) / c = prod_k (a_k / c)."""
    dom = seq(iprod(parts), c)
    cod = iprod([(k, seq(g, c)) for k, g in parts])

    def c2d(m):
        _, k, inner = m
        match inner:
            case ("hd", x):
                return ("hd", ("el", k, x))
            case ("tl", x):
                return ("tl", x)

    def d2c_play(dp: Play) -> Play:
        if not dp:
            return ()
        k = dp[0][1][1]

        def mv(m):
            match m:
                case ("hd", (_, _, x)):
                    return ("el", k, ("hd", x))
                case ("tl", x):
                    return ("el", k, ("tl", x))

        return tuple(mv(m) for m in dp)

    f = relabel_moves(dom, cod, c2d, name="dist_prod")
    g = RelabelMorph(cod, dom, d2c_play, name="dist_prod_inv")
    return Iso(f, g)


def iso_dist_iprod_hom(c, parts) -> Iso:
    """c -o prod_k a_k = prod_k (c -o a_k)."""
    dom = hom(c, iprod(parts))
    cod = iprod([(k, hom(c, g)) for k, g in parts])

    def c2d(m):
        _, k, inner = m
        match inner:
            case ("hd", x):
                return ("hd", ("el", k, x))
            case ("tl", x):
                return ("tl", x)

    def d2c_play(dp: Play) -> Play:
        if not dp:
            return ()
        k = dp[0][1][1]

        def mv(m):
            match m:
                case ("hd", (_, _, x)):
                    return ("el", k, ("hd", x))
                case ("tl", x):
                    return ("el", k, ("tl", x))

        return tuple(mv(m) for m in dp)

    f = relabel_moves(dom, cod, c2d, name="dist_prod_hom")
    g = RelabelMorph(cod, dom, d2c_play, name="dist_prod_hom_inv")
    return Iso(f, g)


def iso_lfe(a, b) -> Iso:
    """(b -o o) / a = (a -o b) -o o: linear functional extensionality."""

    def c2d(m):
        match m:
            case ("hd", x):
                return ("hd", ("hd", x))
            case ("tl", ("hd", x)):
                return ("hd", ("tl", x))
            case ("tl", ("tl", x)):
                return ("tl", x)

    def d2c(m):
        match m:
            case ("hd", ("hd", x)):
                return ("hd", x)
            case ("hd", ("tl", x)):
                return ("tl", ("hd", x))
            case ("tl", x):
                return ("tl", ("tl", x))

    return _iso(seq(hom(b, OBJ_O), a), hom(hom(a, b), OBJ_O), c2d, d2c, "lfe")


def iso_abs(a) -> Iso:
    """o / a = o: the tail after an opened o is unreachable."""
    return _iso(seq(OBJ_O, a), OBJ_O, lambda m: ("hd", m), lambda m: m[1], "abs")


def iso_alpha(n) -> Iso:
    """!n = n / !n: peel the first copy."""

    def c2d(m):
        match m:
            case ("hd", x):
                return ("cp", 0, x)
            case ("tl", ("cp", i, x)):
                return ("cp", i + 1, x)

    def d2c(m):
        _, i, x = m
        return ("hd", x) if i == 0 else ("tl", ("cp", i - 1, x))

    return _iso(bang(n), seq(n, bang(n)), c2d, d2c, "alpha")


def iso_bang_pair(a, b) -> Iso:
    """!a x !b = (a & b) / (!a x !b): the final-coalgebra structure on !a x !b."""
    z = tens(bang(a), bang(b))

    def c2d_play(cp: Play) -> Play:
        if not cp:
            return ()
        side = cp[0][1][0]  # first move is ("hd", ("inl"|"inr", m))
        sl = 1 if side == "inl" else 0
        sr = 1 - sl

        def mv(m):
            match m:
                case ("hd", ("inl", x)):
                    return ("L", ("cp", 0, x))
                case ("hd", ("inr", x)):
                    return ("R", ("cp", 0, x))
                case ("tl", ("L", ("cp", i, x))):
                    return ("L", ("cp", i + sl, x))
                case ("tl", ("R", ("cp", i, x))):
                    return ("R", ("cp", i + sr, x))

        return tuple(mv(m) for m in cp)

    def d2c_play(dp: Play) -> Play:
        if not dp:
            return ()
        side = "inl" if dp[0][0] == "L" else "inr"
        sl = 1 if side == "inl" else 0
        sr = 1 - sl

        def mv(m):
            match m:
                case ("L", ("cp", 0, x)) if side == "inl":
                    return ("hd", ("inl", x))
                case ("R", ("cp", 0, x)) if side == "inr":
                    return ("hd", ("inr", x))
                case ("L", ("cp", i, x)):
                    return ("tl", ("L", ("cp", i - sl, x)))
                case ("R", ("cp", i, x)):
                    return ("tl", ("R", ("cp", i - sr, x)))

        return tuple(mv(m) for m in dp)

    f = RelabelMorph(z, seq(with_(a, b), z), c2d_play, name="bang_pair")
    g = RelabelMorph(seq(with_(a, b), z), z, d2c_play, name="bang_pair_inv")
    return Iso(f, g)


def iso_bang_prod(a, b) -> Iso:
    """!(a & b) = !a x !b, matching copies in order of first use."""
    dom = bang(with_(a, b))
    cod = tens(bang(a), bang(b))

    def c2d_play(cp: Play) -> Play:
        assign: dict[tuple, int] = {}
        out = []
        for m in cp:
            side = "inl" if m[0] == "L" else "inr"
            _, (_, i, x) = m
            key = (side, i)
            if key not in assign:
                assign[key] = len(assign)
            out.append(("cp", assign[key], (side, x)))
        return tuple(out)

    def d2c_play(dp: Play) -> Play:
        assign: dict[int, tuple] = {}
        counts = {"inl": 0, "inr": 0}
        out = []
        for _, i, (side, x) in dp:
            if i not in assign:
                assign[i] = (side, counts[side])
                counts[side] += 1
            side0, j = assign[i]
            tag = "L" if side0 == "inl" else "R"
            out.append((tag, ("cp", j, x)))
        return tuple(out)

    f = RelabelMorph(dom, cod, c2d_play, name="bang_prod")
    g = RelabelMorph(cod, dom, d2c_play, name="bang_prod_inv")
    return Iso(f, g)


# ---------------------------------------------------------------------------
# non-iso relabelings


def wk(a, b) -> Morph:
    """a x b -> a / b: the inclusion of left-merge plays into tensor plays."""

    def c2d(m):
        return ("L", m[1]) if m[0] == "hd" else ("R", m[1])

    return relabel_moves(tens(a, b), seq(a, b), c2d, name="wk")


def der(n) -> Morph:
    """!n -> n: copycat into copy 0."""
    return relabel_moves(bang(n), n, lambda m: ("cp", 0, m), name="der")


def af(a) -> Morph:
    """The unique map a -> I."""
    return EmptyMorph(a, OBJ_I, name="af")


def iso_dist0_seq(c) -> Iso:
    return Iso(EmptyMorph(seq(OBJ_I, c), OBJ_I, "dist0"),
               EmptyMorph(OBJ_I, seq(OBJ_I, c), "dist0_inv"))


def iso_dist0_hom(a) -> Iso:
    return Iso(EmptyMorph(hom(a, OBJ_I), OBJ_I, "dist0_hom"),
               EmptyMorph(OBJ_I, hom(a, OBJ_I), "dist0_hom_inv"))


def proj(parts_obj, key) -> Morph:
    """Projection out of a with/iprod object."""
    if parts_obj[0] == "with":
        tag = "inl" if key == 1 else "inr"
        sub = parts_obj[1] if key == 1 else parts_obj[2]
        return relabel_moves(parts_obj, sub, lambda m: (tag, m), name=f"pi{key}")
    _shape(parts_obj[0] == "iprod", f"proj: not a product {show_obj(parts_obj)}")
    sub = iprod_parts(parts_obj)[key]
    return relabel_moves(parts_obj, sub, lambda m: ("el", key, m), name=f"pi[{key}]")


# ---------------------------------------------------------------------------
# pairing


class PairMorph(Morph):
    """<f, g, ...>: C -> product; the opening move commits the component."""

    def __init__(self, dom, cod, children: dict, name: str = "pair"):
        super().__init__(dom, cod, name)
        self.children = children
        self.kind = cod[0]
        _shape(self.kind in ("with", "iprod"), f"pair into {show_obj(cod)}")

    def _key_of(self, cod_move):
        return cod_move[0] if self.kind == "with" else cod_move[1]

    def _strip(self, cod_move):
        return cod_move[1] if self.kind == "with" else cod_move[2]

    def _wrap(self, key, m):
        return (key, m) if self.kind == "with" else ("el", key, m)

    def _respond(self, play: Play):
        cp, _ = _split(play)
        if not cp:
            return None
        key = self._key_of(cp[0])
        child = self.children.get(key)
        if child is None:
            return None
        view = tuple(
            ("hd", self._strip(m[1])) if m[0] == "hd" else m for m in play
        )
        ans = child.respond(view)
        if ans is None:
            return None
        if ans[0] == "hd":
            return ("hd", self._wrap(key, ans[1]))
        return ans


def pair(f: Morph, g: Morph) -> Morph:
    _shape(f.dom == g.dom, "pair: domains differ")
    return PairMorph(f.dom, with_(f.cod, g.cod), {"inl": f, "inr": g})


def pair_indexed(dom, children: dict) -> Morph:
    cod = iprod([(k, m.cod) for k, m in children.items()])
    for k, m in children.items():
        _shape(m.dom == dom, "pair_indexed: domains differ")
    return PairMorph(dom, cod, dict(children))


# ---------------------------------------------------------------------------
# currying and transports


class TransportMorph(Morph):
    """A morph conjugated by a bijective retagging of its hom game."""

    def __init__(self, inner: Morph, dom, cod, enc, dec, name: str = ""):
        super().__init__(dom, cod, name or f"T[{inner.name}]")
        self.inner = inner
        self.enc = enc
        self.dec = dec

    def _respond(self, play: Play):
        ans = self.inner.respond(tuple(self.enc(m) for m in play))
        return None if ans is None else self.dec(ans)


def lam(f: Morph) -> Morph:
    """curry: (A x B -> C) to (A -> (B -o C))."""
    _shape(f.dom[0] == "tens", f"lam: domain is not a tensor: {show_obj(f.dom)}")
    a, b = f.dom[1], f.dom[2]
    c = f.cod

    def enc(m):
        match m:
            case ("hd", ("hd", x)):
                return ("hd", x)
            case ("hd", ("tl", x)):
                return ("tl", ("R", x))
            case ("tl", x):
                return ("tl", ("L", x))

    def dec(m):
        match m:
            case ("hd", x):
                return ("hd", ("hd", x))
            case ("tl", ("R", x)):
                return ("hd", ("tl", x))
            case ("tl", ("L", x)):
                return ("tl", x)

    return TransportMorph(f, a, hom(b, c), enc, dec, name="lam")


def unlam(f: Morph) -> Morph:
    """uncurry: (A -> (B -o C)) to (A x B -> C)."""
    _shape(f.cod[0] == "hom", f"unlam: codomain is not a hom: {show_obj(f.cod)}")
    a = f.dom
    b, c = f.cod[1], f.cod[2]

    def enc(m):
        match m:
            case ("hd", x):
                return ("hd", ("hd", x))
            case ("tl", ("R", x)):
                return ("hd", ("tl", x))
            case ("tl", ("L", x)):
                return ("tl", x)

    def dec(m):
        match m:
            case ("hd", ("hd", x)):
                return ("hd", x)
            case ("hd", ("tl", x)):
                return ("tl", ("R", x))
            case ("tl", x):
                return ("tl", ("L", x))

    return TransportMorph(f, tens(a, b), c, enc, dec, name="unlam")


def lam_i(f: Morph) -> Morph:
    """name: (A -> B) to (I -> (A -o B))."""

    def enc(m):
        match m:
            case ("hd", ("hd", x)):
                return ("hd", x)
            case ("hd", ("tl", x)):
                return ("tl", x)
        raise ShapeError("lam_i: move in the empty domain")

    def dec(m):
        return ("hd", m)

    return TransportMorph(f, OBJ_I, hom(f.dom, f.cod), enc, dec, name="lam_i")


def unlam_i(f: Morph) -> Morph:
    """unname: (I -> (A -o B)) to (A -> B)."""
    _shape(f.dom == OBJ_I and f.cod[0] == "hom", "unlam_i: need I -> (A -o B)")
    a, b = f.cod[1], f.cod[2]

    def enc(m):
        return ("hd", m)

    def dec(m):
        _shape(m[0] == "hd", "unlam_i: inner morph played in the empty domain")
        return m[1]

    return TransportMorph(f, a, b, enc, dec, name="unlam_i")


def app(a, b) -> Morph:
    """(a -o b) x a -> b."""
    return unlam(copycat(hom(a, b)))


# ---------------------------------------------------------------------------
# parallel actions


class WireMorph(Morph):
    """Routes each visible move to one of two child morphs."""

    def __init__(self, dom, cod, kids, route, unroute, name="wire"):
        super().__init__(dom, cod, name)
        self.kids = kids
        self.route = route
        self.unroute = unroute

    def _respond(self, play: Play):
        views: list[list] = [[] for _ in self.kids]
        for m in play:
            i, hm = self.route(m)
            views[i].append(hm)
        target, _ = self.route(play[-1])
        ans = self.kids[target].respond(tuple(views[target]))
        if ans is None:
            return None
        return self.unroute(target, ans)


def tensor_action(f: Morph, g: Morph) -> Morph:
    dom = tens(f.dom, g.dom)
    cod = tens(f.cod, g.cod)

    def route(m):
        side, (tag, x) = m
        i = 0 if tag == "L" else 1
        return i, (side, x)

    def unroute(i, hm):
        side, x = hm
        tag = "L" if i == 0 else "R"
        return (side, (tag, x))

    return WireMorph(dom, cod, [f, g], route, unroute, name="tensor_action")


def seq_action(f: Morph, g: Morph) -> Morph:
    """f / g with f strict: acts headwise and tailwise."""
    dom = seq(f.dom, g.dom)
    cod = seq(f.cod, g.cod)

    def route(m):
        side, (tag, x) = m
        i = 0 if tag == "hd" else 1
        return i, (side, x)

    def unroute(i, hm):
        side, x = hm
        tag = "hd" if i == 0 else "tl"
        return (side, (tag, x))

    return WireMorph(dom, cod, [f, g], route, unroute, name="seq_action")


def hom_action(f: Morph, g: Morph) -> Morph:
    """(f -o g): hom(f.cod, g.dom) -> hom(f.dom, g.cod), contravariant in f."""
    dom = hom(f.cod, g.dom)
    cod = hom(f.dom, g.cod)

    def route(m):
        match m:
            case ("hd", ("hd", x)):  # g's codomain
                return 1, ("hd", x)
            case ("hd", ("tl", x)):  # f's domain (contravariant: f's dom side)
                return 0, ("tl", x)
            case ("tl", ("hd", x)):  # g's domain
                return 1, ("tl", x)
            case ("tl", ("tl", x)):  # f's codomain
                return 0, ("hd", x)
        raise ShapeError(f"hom_action: bad move {m!r}")

    def unroute(i, hm):
        side, x = hm
        if i == 1:
            return ("hd", ("hd", x)) if side == "hd" else ("tl", ("hd", x))
        return ("hd", ("tl", x)) if side == "tl" else ("tl", ("tl", x))

    return WireMorph(dom, cod, [f, g], route, unroute, name="hom_action")


# ---------------------------------------------------------------------------
# composition


class ComposeMorph(Morph):
    """Parallel composition plus hiding, computed move by move on demand."""

    def __init__(self, f: Morph, g: Morph, fuel: int = DEFAULT_FUEL):
        _shape(f.cod == g.dom, f"compose: {show_obj(f.cod)} vs {show_obj(g.dom)}")
        super().__init__(f.dom, g.cod, name=f"({f.name};{g.name})")
        self.f = f
        self.g = g
        self.fuel = fuel
        # visible play (after P answers) -> (f's view, g's view)
        self._views: dict[Play, tuple[Play, Play]] = {(): ((), ())}

    def _ensure(self, play: Play) -> tuple[Play, Play]:
        if play in self._views:
            return self._views[play]
        # play ends with our own P answer: recompute it from the prefix
        ans = self.respond(play[:-1])
        if ans != play[-1] or play not in self._views:
            raise ShapeError("compose: probed an unreachable play")
        return self._views[play]

    def _respond(self, play: Play):
        fview, gview = self._ensure(play[:-1])
        last = play[-1]
        if last[0] == "hd":  # a codomain move: g must answer
            gview = gview + (("hd", last[1]),)
            turn = "g"
        else:  # a domain move: f must answer
            fview = fview + (("tl", last[1]),)
            turn = "f"
        for _ in range(self.fuel):
            if turn == "f":
                ans = self.f.respond(fview)
                if ans is None:
                    return None
                fview = fview + (ans,)
                if ans[0] == "tl":  # visible in the domain
                    out = ("tl", ans[1])
                    self._views[play + (out,)] = (fview, gview)
                    return out
                gview = gview + (("tl", ans[1]),)
                turn = "g"
            else:
                ans = self.g.respond(gview)
                if ans is None:
                    return None
                gview = gview + (ans,)
                if ans[0] == "hd":  # visible in the codomain
                    out = ("hd", ans[1])
                    self._views[play + (out,)] = (fview, gview)
                    return out
                fview = fview + (("hd", ans[1]),)
                turn = "f"
        raise FuelExhausted(f"hidden interaction exceeded {self.fuel} moves")


def compose(f: Morph, g: Morph, fuel: int = DEFAULT_FUEL) -> Morph:
    """g after f: the morph f then g (diagrammatic order)."""
    return ComposeMorph(f, g, fuel=fuel)


def compose_all(*ms: Morph) -> Morph:
    out = ms[0]
    for m in ms[1:]:
        out = compose(out, m)
    return out


class FnMorph(Morph):
    """A morph from an explicit response function on its hom game."""

    def __init__(self, dom, cod, fn, name="fn"):
        super().__init__(dom, cod, name)
        self._fn = fn

    def _respond(self, play: Play):
        return self._fn(play)


class LazyMorph(Morph):
    def __init__(self, dom, cod, thunk, name="lazy"):
        super().__init__(dom, cod, name)
        self._thunk = thunk
        self._forced: Morph | None = None

    def force(self) -> Morph:
        if self._forced is None:
            self._forced = self._thunk()
        return self._forced

    def _respond(self, play: Play):
        return self.force().respond(play)


# ---------------------------------------------------------------------------
# anamorphisms


def anamorphism(f: Morph) -> Morph:
    """f : M -> N / M gives the unique map into the final coalgebra !N."""
    _shape(f.cod[0] == "seq" and f.cod[2] == f.dom,
           f"anamorphism: need M -> N / M, got {show_obj(f.cod)}")
    n = f.cod[1]
    return coalg_ana(f, iso_alpha(n), bang(n))


def coalg_ana(f: Morph, unfold: Iso, z) -> Morph:
    """f : M -> W / M and unfold : Z = W / Z give the unique M -> Z with
    unfold . ana = (id / ana) . f, built lazily."""
    w = f.cod[1]
    holder: list[Morph] = []
    lazy = LazyMorph(f.dom, z, lambda: holder[0], name="ana_rec")
    mid = seq_action(copycat(w), lazy)
    out = compose(compose(f, mid), unfold.bwd)
    out.name = "ana"
    holder.append(out)
    return out


def delta(a) -> Morph:
    """!a -> !a x !a: the comonoid comultiplication (contraction)."""
    al = iso_alpha(a).fwd
    f = compose(pair(al, al), iso_dist(a, a, bang(a)).bwd)
    return coalg_ana(f, iso_bang_pair(a, a), tens(bang(a), bang(a)))


def bang_action(f: Morph) -> Morph:
    """!f : !A -> !B."""
    g = compose(iso_alpha(f.dom).fwd, seq_action(f, copycat(bang(f.dom))))
    return anamorphism(g)


def promote(f: Morph) -> Morph:
    """f : !M -> N gives the comonoid morphism !M -> !N."""
    _shape(f.dom[0] == "bang", "promote: domain must be a !")
    step = compose_all(delta(f.dom[1]), tensor_action(f, copycat(f.dom)), wk(f.cod, f.dom))
    return anamorphism(step)
