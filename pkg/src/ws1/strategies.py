"""Deterministic strategies as next-move oracles, with bounded-depth views:
trace sets, n-totality, equality to depth n, and depth bounds.

A strategy answers on plays after which it is Player's turn; its trace set is
the usual even-prefix-closed set of plays.  All the depth-indexed predicates
follow the convention that `n` bounds the length of the plays inspected, so
the empty strategy on the one-move game is 0-total but not 1-total.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from ws1.games import Game, Move, O, P, Play, move_key


class IllegalResponse(RuntimeError):
    pass


@dataclass
class Strategy:
    game: Game
    _respond: Callable[[Play], Move | None]
    name: str = ""
    _cache: dict = field(default_factory=dict, repr=False)

    def respond(self, play: Play) -> Move | None:
        """The strategy's move after `play` (Player to move), or None."""
        if play in self._cache:
            return self._cache[play]
        m = self._respond(play)
        if m is not None and m not in self.game.next_moves(play):
            raise IllegalResponse(f"{self.name or 'strategy'} answered illegal {m!r} after {play!r}")
        self._cache[play] = m
        return m

    # -- derived views ------------------------------------------------------

    def traces(self, n: int) -> frozenset[Play]:
        """Plays of the trace set of length <= n (even-length plays, plus the
        responses they end with)."""
        out: set[Play] = set()
        start_plays: list[Play] = []
        if self.game.start == O:
            out.add(())
            start_plays.append(())
        else:
            r = self.respond(())
            if r is not None and n >= 1:
                out.add((r,))
                start_plays.append((r,))
        frontier = start_plays
        while frontier:
            nxt: list[Play] = []
            for s in frontier:
                for o_move in self.game.next_moves(s):
                    so = s + (o_move,)
                    if len(so) + 1 > n:
                        continue
                    r = self.respond(so)
                    if r is None:
                        continue
                    t = so + (r,)
                    if t not in out:
                        out.add(t)
                        nxt.append(t)
            frontier = nxt
        return frozenset(out)

    def is_total_to(self, n: int) -> bool:
        """Responds to every Opponent extension of reachable plays, for all
        extended plays of length <= n."""
        if self.game.start == P:
            if n >= 1 and self.respond(()) is None:
                return False
            r = self.respond(())
            frontier = [(r,)] if r is not None else []
        else:
            frontier = [()]
        seen = set(frontier)
        while frontier:
            nxt = []
            for s in frontier:
                for o_move in self.game.next_moves(s):
                    so = s + (o_move,)
                    if len(so) > n:
                        continue
                    r = self.respond(so)
                    if r is None:
                        return False
                    t = so + (r,)
                    if t not in seen:
                        seen.add(t)
                        nxt.append(t)
            frontier = nxt
        return True

    def eq_to(self, other: "Strategy", n: int) -> bool:
        """Trace sets agree on plays of length <= n."""
        return self.traces(n) == other.traces(n)

    def sub_to(self, other: "Strategy", n: int) -> bool:
        return self.traces(n) <= other.traces(n)

    def depth_bound(self, cap: int) -> int | None:
        """Length of the longest play in the trace set, or None if a play
        longer than cap exists."""
        best = 0
        if self.game.start == P:
            r = self.respond(())
            frontier = [(r,)] if r is not None else []
            best = 1 if frontier else 0
        else:
            frontier = [()]
        while frontier:
            nxt = []
            for s in frontier:
                for o_move in self.game.next_moves(s):
                    so = s + (o_move,)
                    r = self.respond(so)
                    if r is None:
                        continue
                    t = so + (r,)
                    if len(t) > cap:
                        return None
                    best = max(best, len(t))
                    nxt.append(t)
            frontier = nxt
        return best


def strategy_from_table(game: Game, table: dict[Play, Move], name: str = "") -> Strategy:
    return Strategy(game, lambda s: table.get(s), name=name)


def enumerate_total_strategies(game: Game, depth_cap: int = 64) -> list[Strategy]:
    """All total strategies on a finite game, by exhaustive choice of a
    response at every reachable Opponent-ended position.

    The game must be finite (no exponentials); raises RuntimeError past
    depth_cap as a safeguard.
    """
    tables: list[dict[Play, Move]] = [{}]
    if game.start == P:
        first = game.next_moves(())
        if not first:
            return []
        tables = [{(): m} for m in first]
        frontiers = [[(m,)] for m in first]
    else:
        frontiers = [[()]]
    done: list[dict[Play, Move]] = []
    work = list(zip(tables, frontiers))
    while work:
        table, frontier = work.pop()
        if not frontier:
            done.append(table)
            continue
        s = frontier[0]
        rest = frontier[1:]
        if len(s) > depth_cap:
            raise RuntimeError("enumerate_total_strategies: depth cap exceeded")
        o_moves = game.next_moves(s)
        if not o_moves:
            work.append((table, rest))
            continue
        # extend the table with a response for every O-move at s, in all ways
        combos: list[tuple[dict, list]] = [(dict(table), list(rest))]
        dead = False
        for o_move in o_moves:
            so = s + (o_move,)
            replies = game.next_moves(so)
            if not replies:
                dead = True  # this candidate reaches a position with no reply
                break
            new_combos = []
            for tbl, fr in combos:
                for r in replies:
                    t2 = dict(tbl)
                    t2[so] = r
                    new_combos.append((t2, fr + [so + (r,)]))
            combos = new_combos
        if not dead:
            work.extend(combos)
    out = [strategy_from_table(game, t, name="enum") for t in done]
    # distinct tables can induce the same trace set only if they differ on
    # unreachable positions, which the construction never creates
    return out
