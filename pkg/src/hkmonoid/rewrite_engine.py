"""Words over Hecke-Kiselman generators and the reduction system for cycles.

A word is a tuple of generator indices in ``{1, ..., n}``; the empty tuple
is the identity.  For the oriented cycle on ``n`` vertices the monoid
``C_n`` has a confluent, deglex-compatible rewriting system consisting of
five families of reductions (squares, far commutations, block commutations,
and two parametric absorption families).  Every element of ``C_n`` is
represented by a unique reduced word, computed by :func:`normal_form`.

For an arbitrary oriented graph only the defining relations are available;
:func:`equal_in_hk` is a bounded bidirectional search that can certify
equality of two words (never inequality).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

Word = tuple[int, ...]


class WordSyntaxError(ValueError):
    """Raised when a word description cannot be parsed."""


class Redex(NamedTuple):
    """A single applicable reduction: replace ``w[start:end]`` by ``repl``."""

    family: int
    start: int
    end: int
    repl: Word


def parse_word(text: str, n: int | None = None) -> Word:
    """Parse a word from whitespace-separated tokens.

    Tokens are ``x<k>`` or bare integers ``k``.  The empty string and the
    single token ``1`` both denote the identity.  If ``n`` is given, indices
    are checked against the rank.
    """
    tokens = text.split()
    if not tokens or tokens == ["1"]:
        return ()
    letters = []
    for tok in tokens:
        body = tok[1:] if tok[0] in "xX" else tok
        if not body.isdigit():
            raise WordSyntaxError(f"bad generator token {tok!r}")
        k = int(body)
        if k < 1 or (n is not None and k > n):
            raise WordSyntaxError(f"generator index {k} out of range 1..{n}")
        letters.append(k)
    return tuple(letters)


def format_word(w: Word) -> str:
    """Render a word as space-separated ``x<k>`` tokens; identity is ``1``."""
    return " ".join(f"x{k}" for k in w) if w else "1"


def deglex_less(u: Word, v: Word) -> bool:
    """Degree-lexicographic order: first by length, then lex with x1 < x2 < ..."""
    return (len(u), u) < (len(v), v)


class CycleSystem:
    """The reduction system of the Hecke-Kiselman monoid of an oriented n-cycle.

    The five rule families, each strictly deglex-decreasing:

    1. ``x_i x_i -> x_i``
    2. ``x_j x_i -> x_i x_j``            for ``1 < j-i < n-1``
    3. ``x_n x_1...x_i x_j -> x_j x_n x_1...x_i``  for ``i+1 < j < n-1``
    4. ``x_i u x_i -> x_i u``            for nonempty ``u`` avoiding ``x_i``
       and ``x_{i-1}`` (index n when i = 1)
    5. ``x_i v x_i -> v x_i``            for nonempty ``v`` avoiding ``x_i``
       and ``x_{i+1}`` (index 1 when i = n)

    Families 4 and 5 are parametric; matching scans for the shortest factor
    at each start position (the interior is forced to end at the next
    occurrence of the boundary letter).
    """

    __slots__ = ("n",)

    def __init__(self, n: int):
        if n < 3:
            raise ValueError(f"cycle length must be >= 3, got {n}")
        self.n = n

    def __repr__(self) -> str:
        return f"CycleSystem({self.n})"

    def check_rank(self, w: Word) -> None:
        if any(k < 1 or k > self.n for k in w):
            raise WordSyntaxError(f"word {w} not over rank {self.n}")

    def find_redex(self, w: Word) -> Optional[Redex]:
        """Leftmost-starting applicable reduction, ties broken by family number."""
        n = self.n
        L = len(w)
        for p in range(L - 1):
            a = w[p]
            b = w[p + 1]
            if a == b:
                return Redex(1, p, p + 2, (a,))
            d = a - b
            if 1 < d < n - 1:
                return Redex(2, p, p + 2, (b, a))
            if a == n and b == 1:
                # maximal run x_1 x_2 ... x_i after x_n, then a jump letter x_j
                i = 1
                while p + i + 1 < L and w[p + i + 1] == i + 1:
                    i += 1
                q = p + i + 1
                if q < L:
                    j = w[q]
                    if i + 1 < j < n - 1:
                        return Redex(3, p, q + 1, (j, n, *range(1, i + 1)))
            # families 4/5: interior runs to the next occurrence of a
            q = -1
            for t in range(p + 2, L):
                if w[t] == a:
                    q = t
                    break
            if q >= 0:
                seg = w[p + 1 : q]
                if (a - 1 if a > 1 else n) not in seg:
                    return Redex(4, p, q + 1, w[p:q])
                if (a + 1 if a < n else 1) not in seg:
                    return Redex(5, p, q + 1, w[p + 1 : q + 1])
        return None

    def all_redexes(self, w: Word) -> list[Redex]:
        """Every applicable reduction, ordered by (position, family)."""
        n = self.n
        L = len(w)
        out = []
        for p in range(L - 1):
            a = w[p]
            b = w[p + 1]
            if a == b:
                out.append(Redex(1, p, p + 2, (a,)))
            else:
                d = a - b
                if 1 < d < n - 1:
                    out.append(Redex(2, p, p + 2, (b, a)))
                elif a == n and b == 1:
                    i = 1
                    while p + i + 1 < L and w[p + i + 1] == i + 1:
                        i += 1
                    q = p + i + 1
                    if q < L:
                        j = w[q]
                        if i + 1 < j < n - 1:
                            out.append(Redex(3, p, q + 1, (j, n, *range(1, i + 1))))
                q = -1
                for t in range(p + 2, L):
                    if w[t] == a:
                        q = t
                        break
                if q >= 0:
                    seg = w[p + 1 : q]
                    if (a - 1 if a > 1 else n) not in seg:
                        out.append(Redex(4, p, q + 1, w[p:q]))
                    if (a + 1 if a < n else 1) not in seg:
                        out.append(Redex(5, p, q + 1, w[p + 1 : q + 1]))
        return out

    @staticmethod
    def apply(w: Word, r: Redex) -> Word:
        return w[: r.start] + r.repl + w[r.end :]

    def normal_form(self, w: Word) -> Word:
        """Unique reduced word equal to ``w`` in the cycle monoid."""
        while True:
            r = self.find_redex(w)
            if r is None:
                return w
            w2 = self.apply(w, r)
            assert deglex_less(w2, w), (w, r, w2)
            w = w2

    def normal_form_random(self, w: Word, rng) -> Word:
        """Normalize by repeatedly applying a randomly chosen redex."""
        while True:
            rs = self.all_redexes(w)
            if not rs:
                return w
            r = rs[rng.randrange(len(rs))]
            w2 = self.apply(w, r)
            assert deglex_less(w2, w), (w, r, w2)
            w = w2

    def is_reduced(self, w: Word) -> bool:
        return self.find_redex(w) is None


def find_redex(w: Word, sys: CycleSystem) -> Optional[Redex]:
    return sys.find_redex(w)


def normal_form(w: Word, sys: CycleSystem) -> Word:
    return sys.normal_form(w)


def is_reduced(w: Word, sys: CycleSystem) -> bool:
    return sys.is_reduced(w)


def all_words(n: int, length: int) -> Iterator[Word]:
    """All words of exactly the given length over rank n, in lex order."""
    if length == 0:
        yield ()
        return
    for prefix in all_words(n, length - 1):
        for g in range(1, n + 1):
            yield prefix + (g,)


def generic_relations(g) -> list[tuple[Word, Word]]:
    """Defining relation pairs of the Hecke-Kiselman monoid of a graph.

    Returns, over vertex indices ``1..n`` in the graph's vertex order:
    the idempotent pairs ``(x_i x_i, x_i)``, a commutation pair for every
    non-adjacent ``{i, j}``, and the two absorption pairs
    ``(x_i x_j x_i, x_i x_j)``, ``(x_j x_i x_j, x_i x_j)`` per arrow i -> j.
    """
    idx = {v: k + 1 for k, v in enumerate(g.vertices)}
    n = len(g.vertices)
    arrows = {(idx[u], idx[v]) for (u, v) in g.arrows}
    rels: list[tuple[Word, Word]] = [((i, i), (i,)) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i, j) not in arrows and (j, i) not in arrows:
                rels.append(((i, j), (j, i)))
    for (i, j) in sorted(arrows):
        rels.append(((i, j, i), (i, j)))
        rels.append(((j, i, j), (i, j)))
    return rels


@dataclass(frozen=True)
class EqualityVerdict:
    """Outcome of a bounded equality search: Equal with a trace, or Unknown.

    ``trace`` is a chain of words from ``u`` to ``v`` in which consecutive
    entries differ by one two-way application of a defining relation.
    """

    equal: bool
    trace: tuple[Word, ...] | None = None

    def __bool__(self) -> bool:
        return self.equal


UNKNOWN = EqualityVerdict(False, None)


def _rewrite_steps(w: Word, sides: list[tuple[Word, Word]], cap: int) -> Iterator[Word]:
    """One-step two-way relation applications of ``w`` within the length cap."""
    L = len(w)
    for pat, rep in sides:
        lp = len(pat)
        if L - lp + len(rep) > cap:
            continue
        for p in range(L - lp + 1):
            if w[p : p + lp] == pat:
                yield w[:p] + rep + w[p + lp :]


def equal_in_hk(
    u: Word, v: Word, g, step_cap: int = 20000, length_cap: int = 0
) -> EqualityVerdict:
    """Bounded bidirectional closure search for equality in a HK monoid.

    Expands the relation closure from both words, never keeping a word
    longer than ``length_cap`` (default: max input length + 4), and stops
    after ``step_cap`` expansions.  Returns Equal with a verifiable trace
    if the frontiers meet, otherwise Unknown.  Inequality is never asserted.
    """
    if step_cap <= 0 or length_cap < 0:
        raise ValueError("caps must be positive")
    if not length_cap:
        length_cap = max(len(u), len(v)) + 4
    if u == v:
        return EqualityVerdict(True, (u,))
    rels = generic_relations(g)
    sides = [(l, r) for (l, r) in rels] + [(r, l) for (l, r) in rels]
    # parents[side][word] = predecessor on that side's search tree
    parents: tuple[dict, dict] = ({u: None}, {v: None})
    frontiers: list[list[Word]] = [[u], [v]]
    expansions = 0
    while frontiers[0] and frontiers[1] and expansions < step_cap:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        own, other = parents[side], parents[1 - side]
        new_frontier: list[Word] = []
        for w in frontiers[side]:
            expansions += 1
            for w2 in _rewrite_steps(w, sides, length_cap):
                if w2 in own:
                    continue
                own[w2] = w
                if w2 in other:
                    return EqualityVerdict(True, _join_trace(w2, parents, u))
                new_frontier.append(w2)
            if expansions >= step_cap:
                break
        frontiers[side] = new_frontier
    return UNKNOWN


def _join_trace(meet: Word, parents: tuple[dict, dict], u: Word) -> tuple[Word, ...]:
    half: list[list[Word]] = [[], []]
    for side in (0, 1):
        w = meet
        while w is not None:
            half[side].append(w)
            w = parents[side][w]
    left, right = half
    left.reverse()
    trace = left + right[1:]
    if trace[0] != u:
        trace.reverse()
    return tuple(trace)


def is_relation_step(a: Word, b: Word, g) -> bool:
    """Whether words a, b differ by one two-way defining-relation application."""
    if a == b:
        return True
    cap = max(len(a), len(b))
    return b in set(_rewrite_steps(a, [p for r in generic_relations(g) for p in (r, (r[1], r[0]))], cap))
