"""Canonical labeling and isomorphism testing for small graphs.

The canonical key of a graph is the lexicographically smallest graph6
text over all vertex relabelings.  Because every graph6 text for a fixed
``n`` has the same length and the byte values grow monotonically with
the underlying 6-bit groups, minimizing the text is the same as
minimizing the packed upper-triangle bit string.

The search is an exact branch and bound over vertex orderings: vertices
are placed one position at a time, and a partial ordering is abandoned
as soon as the column bits it has committed to exceed the best complete
ordering found so far.  Two prunings keep worst cases (complete graphs,
stars, unions with many isolated vertices) tame:

- candidates at each position are tried in increasing column order, so
  the first descent is greedy and yields a strong incumbent;
- a candidate is skipped when an already-tried candidate at the same
  position is its twin (identical neighborhoods outside the pair), since
  swapping twins is an automorphism fixing everything already placed.

Both prunings only discard orderings whose bit string provably cannot
beat the incumbent, so the result is the true minimum.
"""

from __future__ import annotations

from .graphs import Graph, _g6_from_bits, from_graph6

# Keys of graphs this small are memoized; larger graphs (census
# enumeration, opt-in n=9 work) would mostly miss and only bloat memory.
_MEMO_MAX_N = 7

_memo: dict[tuple[int, ...], str] = {}


def clear_cache() -> None:
    """Drop memoized canonical keys (results are unaffected)."""
    _memo.clear()


def _min_cols(n: int, rows: tuple[int, ...]) -> list[int]:
    """Per-position column bits of the minimal ordering.

    ``cols[d-1]`` holds the d bits x(0,d)..x(d-1,d) of the relabeled
    upper triangle, most significant bit first.
    """
    # twin[v]: bitmask of vertices whose neighborhoods match v's outside
    # the pair; transposing such a pair is an automorphism.
    twin = [0] * n
    for u in range(n):
        ru = rows[u]
        for w in range(u + 1, n):
            if ru & ~(1 << w) == rows[w] & ~(1 << u):
                twin[u] |= 1 << w
                twin[w] |= 1 << u

    best: list[int] | None = None
    order = [0] * n
    cols = [0] * n  # cols[d] is the column committed when filling position d

    def place(depth: int, unplaced: int) -> None:
        nonlocal best
        cand = []
        mask = unplaced
        while mask:
            low = mask & -mask
            v = low.bit_length() - 1
            mask ^= low
            rv = rows[v]
            col = 0
            for i in range(depth):
                col = (col << 1) | (rv >> order[i] & 1)
            cand.append((col, v))
        cand.sort()
        tried = 0
        for col, v in cand:
            if twin[v] & tried:
                continue
            tried |= 1 << v
            if best is not None:
                # Lexicographic check of the committed prefix against the
                # incumbent; a greater prefix can never win, and later
                # candidates only have larger columns.
                cols[depth] = col
                verdict = 0
                for i in range(1, depth + 1):
                    if cols[i] != best[i]:
                        verdict = cols[i] - best[i]
                        break
                if verdict > 0:
                    break
            else:
                cols[depth] = col
            order[depth] = v
            if depth + 1 == n:
                if best is None or cols < best:
                    best = cols.copy()
            else:
                place(depth + 1, unplaced ^ (1 << v))

    place(0, (1 << n) - 1)
    assert best is not None
    return best[1:]


def _key_for_rows(n: int, rows: tuple[int, ...]) -> str:
    if n == 1:
        return "@"  # chr(63 + 1), no data bytes
    if n <= _MEMO_MAX_N:
        cached = _memo.get(rows)
        if cached is not None:
            return cached
    cols = _min_cols(n, rows)
    bits = 0
    for i, col in enumerate(cols, start=1):
        bits = (bits << i) | col
    key = _g6_from_bits(n, bits)
    if n <= _MEMO_MAX_N:
        _memo[rows] = key
    return key


def canonical_key(g: Graph) -> str:
    """Relabeling-invariant identity: the minimum graph6 text of ``g``."""
    return _key_for_rows(g.n, g.rows)


def canonical_graph(g: Graph) -> Graph:
    """The canonically labeled representative of ``g``'s class."""
    return from_graph6(canonical_key(g))


def is_isomorphic(a: Graph, b: Graph) -> bool:
    """True iff some vertex bijection maps ``a`` onto ``b`` exactly."""
    if a.n != b.n or a.edge_count != b.edge_count:
        return False
    if sorted(r.bit_count() for r in a.rows) != sorted(r.bit_count() for r in b.rows):
        return False
    return canonical_key(a) == canonical_key(b)
