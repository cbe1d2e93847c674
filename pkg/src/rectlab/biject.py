"""Insertion bijections between permutations and rectangulations.

This module implements the forward insertion algorithms (weak and strong),
the three posets attached to a rectangulation, linear-extension machinery,
fibers, canonical representatives, and the flip graph on strong classes.

Conventions
-----------
- Permutations are insertion orders: reading ``pi`` left to right gives the
  order in which rectangles (identified by their NW-SE labels) are inserted.
- The *staircase* of a partial insertion is the monotone boundary separating
  the already-inserted region (lower-left) from the free region; its peaks
  are the top-right corners of boundary rectangles.  Two virtual sentinel
  rectangles bound it: label ``0`` for the left wall of the box and ``n+1``
  for the bottom wall.
- Inserting rectangle ``j`` between consecutive peaks ``a < j < b`` places
  its bottom-left corner at the valley between them.  Its top edge aligns
  with the top of ``a`` exactly when all labels strictly between ``a`` and
  ``j`` are already inserted (consuming peak ``a``); symmetrically its right
  edge aligns with the right edge of ``b`` when all labels between ``j`` and
  ``b`` are inserted (consuming peak ``b``).
- The weak algorithm works on the n x n grid (non-aligned edges snap to the
  grid lines ``j-1`` / ``j``), producing the diagonal representative.  The
  strong algorithm places non-aligned edges strictly inside the neighbouring
  rectangle's side (midpoint coordinates over exact rationals, normalized to
  compact integers at the end).
"""

from __future__ import annotations

import bisect
import functools
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .perm import Permutation
from .rect import (
    Rect,
    Rectangulation,
    _closure_masks,
    from_rects,
    is_diagonal,
    swne_labeling,
)


class _Staircase:
    """Peak bookkeeping shared by the forward algorithms and walk encoding."""

    __slots__ = ("n", "labels", "inserted")

    def __init__(self, n: int):
        self.n = n
        self.labels = [0, n + 1]
        self.inserted = {0, n + 1}

    def insert(self, j: int) -> tuple[int, int, int, int, bool, bool]:
        """Insert label ``j``; returns (a, b, valley_index, n_valleys,
        top_aligned, right_aligned) describing the state *before* insertion.
        """
        labels = self.labels
        idx = bisect.bisect_left(labels, j)
        a, b = labels[idx - 1], labels[idx]
        valley_index = idx - 1
        n_valleys = len(labels) - 1
        top = all(k in self.inserted for k in range(a + 1, j))
        right = all(k in self.inserted for k in range(j + 1, b))
        if right:
            del labels[idx]
        if top:
            del labels[idx - 1]
            idx -= 1
        labels.insert(idx, j)
        self.inserted.add(j)
        assert all(
            y - x >= 2 for x, y in zip(labels, labels[1:])
        ), "staircase invariant violated: consecutive peak labels differ by < 2"
        return a, b, valley_index, n_valleys, top, right


def gamma_w(pi: Permutation) -> Rectangulation:
    """Weak forward insertion: the diagonal representative on the n x n grid.

    >>> [q.box for q in gamma_w(Permutation((1, 2, 3))).rects]
    [(0, 0, 1, 3), (1, 0, 2, 3), (2, 0, 3, 3)]
    """
    n = pi.n
    st = _Staircase(n)
    corner = {0: (0, 0), n + 1: (n, n)}  # peak label -> top-right corner
    boxes: dict[int, tuple[int, int, int, int]] = {}
    for j in pi:
        a, b, _, _, top, right = st.insert(j)
        xr_a, yt_a = corner[a]
        xr_b, yt_b = corner[b]
        x1, y2 = xr_a, yt_b  # valley = bottom-left corner
        y1 = yt_a if top else j - 1
        x2 = xr_b if right else j
        corner[j] = (x2, y1)
        boxes[j] = (x1, y1, x2, y2)
    result = Rectangulation(Rect(j, *boxes[j]) for j in range(1, n + 1))
    assert is_diagonal(result), "weak insertion must yield a diagonal drawing"
    return result


def gamma_s(pi: Permutation) -> Rectangulation:
    """Strong forward insertion: non-aligned edges attach strictly inside the
    neighbouring side; exact rational coordinates, compacted to integers."""
    n = pi.n
    zero, one = Fraction(0), Fraction(1)
    st = _Staircase(n)
    # Full geometry per label, sentinels included (virtual boundary strips).
    geo: dict[int, tuple[Fraction, Fraction, Fraction, Fraction]] = {
        0: (-one, zero, zero, one),  # left wall: right side x=0, spans all y
        n + 1: (zero, one, one, one + 1),  # bottom wall: top side y=1
    }
    for j in pi:
        a, b, _, _, top, right = st.insert(j)
        xr_a, yt_a = geo[a][2], geo[a][1]
        xr_b, yt_b = geo[b][2], geo[b][1]
        x1, y2 = xr_a, yt_b  # valley
        if top:
            y1 = yt_a
        else:
            yb_a = geo[a][3]
            y1 = (yt_a + min(yb_a, y2)) / 2  # strictly inside a's right side
        if right:
            x2 = xr_b
        else:
            xl_b = geo[b][0]
            x2 = (max(xl_b, x1) + xr_b) / 2  # strictly inside b's top side
        geo[j] = (x1, y1, x2, y2)
    xs = sorted({v for j in range(1, n + 1) for v in (geo[j][0], geo[j][2])})
    ys = sorted({v for j in range(1, n + 1) for v in (geo[j][1], geo[j][3])})
    xi = {v: i for i, v in enumerate(xs)}
    yi = {v: i for i, v in enumerate(ys)}
    return Rectangulation(
        Rect(j, xi[geo[j][0]], yi[geo[j][1]], xi[geo[j][2]], yi[geo[j][3]])
        for j in range(1, n + 1)
    )


# ---------------------------------------------------------------------------
# Posets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Poset:
    """A partial order on labels 1..n, stored as an irredundant cover set."""

    n: int
    covers: frozenset[tuple[int, int]]
    kind: str = "generic"

    @functools.cached_property
    def _reach(self) -> tuple[int, ...]:
        return tuple(
            _closure_masks(self.n, [(i - 1, j - 1) for i, j in self.covers])
        )

    def less(self, i: int, j: int) -> bool:
        """Strictly below: ``i < j`` in the partial order."""
        return bool(self._reach[i - 1] >> (j - 1) & 1)

    @functools.cached_property
    def _pred_masks(self) -> tuple[int, ...]:
        pred = [0] * self.n
        for i in range(self.n):
            m = self._reach[i]
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                pred[j] |= 1 << i
        return tuple(pred)


def _poset_from_relations(
    n: int, pairs: set[tuple[int, int]], kind: str
) -> Poset:
    reach = _closure_masks(n, [(i - 1, j - 1) for i, j in pairs])
    for i in range(n):
        if reach[i] >> i & 1:
            raise ValueError("relation is cyclic; not a partial order")
    covers = {
        (i + 1, j + 1)
        for i in range(n)
        for j in _bits(reach[i])
        if not any(reach[k] >> j & 1 for k in _bits(reach[i]) if k != j)
    }
    return Poset(n, frozenset(covers), kind)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        b = (mask & -mask).bit_length() - 1
        mask &= mask - 1
        yield b


def _adjacency_pairs(r: Rectangulation) -> set[tuple[int, int]]:
    """Direct blocking pairs: (a, b) when a is left of b or below b, touching."""
    pairs = set()
    for p in r.rects:
        for q in r.rects:
            if p.label == q.label:
                continue
            if p.x2 == q.x1 and max(p.y1, q.y1) < min(p.y2, q.y2):
                pairs.add((p.label, q.label))  # a left of b
            if p.y1 == q.y2 and max(p.x1, q.x1) < min(p.x2, q.x2):
                pairs.add((p.label, q.label))  # a below b
    return pairs


def adjacency_poset(r: Rectangulation) -> Poset:
    """Transitive closure of the blocking relation (left-of / below contact)."""
    return _poset_from_relations(r.n, _adjacency_pairs(r), "adjacency")


def diagonal_representative(r: Rectangulation) -> Rectangulation:
    """The diagonal drawing of the weak class of ``r`` on the n x n grid."""
    return gamma_w(leftmost_extension(adjacency_poset(r)))


def weak_poset(r: Rectangulation) -> Poset:
    """Adjacency poset of the diagonal representative of ``r``'s weak class."""
    d = r if is_diagonal(r) else diagonal_representative(r)
    return _poset_from_relations(d.n, _adjacency_pairs(d), "weak")


def strong_poset(r: Rectangulation) -> Poset:
    """Blocking relations plus the two non-touching same-segment relations.

    On a vertical segment, a right-side rectangle precedes every left-side
    rectangle ending strictly above it; on a horizontal segment, an
    above-side rectangle precedes every below-side rectangle starting
    strictly to its right.
    """
    pairs = _adjacency_pairs(r)
    for s in r.segments:
        if s.orientation == "v":
            for lb in s.side_a:  # right side of r_lb on the segment
                for ra in s.side_b:  # left side of r_ra on the segment
                    if r.rect(lb).y2 < r.rect(ra).y1:
                        pairs.add((ra, lb))
        else:
            for ab in s.side_a:  # bottom side of r_ab on the segment
                for bl in s.side_b:  # top side of r_bl on the segment
                    if r.rect(bl).x1 > r.rect(ab).x2:
                        pairs.add((ab, bl))
    return _poset_from_relations(r.n, pairs, "strong")


# ---------------------------------------------------------------------------
# Linear extensions
# ---------------------------------------------------------------------------


def linear_extensions(p: Poset) -> Iterator[Permutation]:
    """All linear extensions, in lexicographic order of one-line notation."""
    pred = p._pred_masks
    n = p.n
    out: list[int] = []

    def rec(placed: int) -> Iterator[Permutation]:
        if len(out) == n:
            yield Permutation(tuple(out))
            return
        for j in range(n):
            if placed >> j & 1:
                continue
            if pred[j] & ~placed:
                continue
            out.append(j + 1)
            yield from rec(placed | 1 << j)
            out.pop()

    return rec(0)


def count_linear_extensions(p: Poset) -> int:
    """Number of linear extensions (downset dynamic programming)."""
    pred = p._pred_masks
    n = p.n
    full = (1 << n) - 1

    @functools.lru_cache(maxsize=None)
    def rec(placed: int) -> int:
        if placed == full:
            return 1
        total = 0
        for j in range(n):
            if not placed >> j & 1 and not pred[j] & ~placed:
                total += rec(placed | 1 << j)
        return total

    result = rec(0)
    rec.cache_clear()
    return result


def leftmost_extension(p: Poset) -> Permutation:
    """Greedy smallest-available extension: the unique Bruhat-minimal one."""
    pred = p._pred_masks
    n = p.n
    placed = 0
    out = []
    for _ in range(n):
        j = next(
            j for j in range(n) if not placed >> j & 1 and not pred[j] & ~placed
        )
        out.append(j + 1)
        placed |= 1 << j
    return Permutation(tuple(out))


def rightmost_extension(p: Poset) -> Permutation:
    """Greedy largest-available extension: the unique Bruhat-maximal one."""
    pred = p._pred_masks
    n = p.n
    placed = 0
    out = []
    for _ in range(n):
        j = next(
            j
            for j in range(n - 1, -1, -1)
            if not placed >> j & 1 and not pred[j] & ~placed
        )
        out.append(j + 1)
        placed |= 1 << j
    return Permutation(tuple(out))


# ---------------------------------------------------------------------------
# Fibers and representatives
# ---------------------------------------------------------------------------


def fiber_w(r: Rectangulation) -> list[Permutation]:
    """All permutations mapping to ``r``'s weak class (lexicographic order)."""
    return list(linear_extensions(weak_poset(r)))


def fiber_s(r: Rectangulation) -> list[Permutation]:
    """All permutations mapping to ``r``'s strong class (lexicographic order)."""
    return list(linear_extensions(strong_poset(r)))


def baxter_representative(r: Rectangulation) -> Permutation:
    """The unique Baxter permutation in the weak fiber: read the diagonal
    representative's labels in SW-NE order."""
    d = r if is_diagonal(r) else diagonal_representative(r)
    return Permutation(swne_labeling(d))


def reflect_swne(r: Rectangulation) -> Rectangulation:
    """Reflect across the SW-NE diagonal (an involution on strong classes)."""
    w, h = r.width, r.height
    return from_rects(
        (h - q.y2, w - q.x2, h - q.y1, w - q.x1) for q in r.rects
    )


# ---------------------------------------------------------------------------
# Flip graph on strong classes
# ---------------------------------------------------------------------------


def _swap_positions(pi: Permutation, i: int) -> Permutation:
    vals = list(pi)
    vals[i], vals[i + 1] = vals[i + 1], vals[i]
    return Permutation(tuple(vals))


def _union_is_rect(r: Rectangulation, j: int, k: int) -> bool:
    a, b = r.rect(j), r.rect(k)
    if a.x1 == b.x1 and a.x2 == b.x2 and (a.y2 == b.y1 or b.y2 == a.y1):
        return True
    if a.y1 == b.y1 and a.y2 == b.y2 and (a.x2 == b.x1 or b.x2 == a.x1):
        return True
    return False


def _flip_kind(
    r: Rectangulation, r2: Rectangulation, j: int, k: int
) -> str:
    from .rect import weak_key

    if weak_key(r) == weak_key(r2):
        return "wall_slide"
    if _union_is_rect(r, j, k) and _union_is_rect(r2, j, k):
        return "simple"
    return "pivot"


def flips(r: Rectangulation) -> list[tuple[str, Rectangulation]]:
    """All flip moves from ``r``'s strong class: pairs (kind, neighbour).

    Neighbours are exactly the classes reachable by swapping two adjacent
    entries in some permutation of the strong fiber; kinds distinguish wall
    slides (weak class unchanged), simple flips (the two swapped rectangles
    form a rectangle together before and after), and pivoting flips.
    """
    from .rect import strong_key

    base = strong_key(r)
    found: dict[tuple[int, ...], tuple[str, Rectangulation]] = {}
    for pi in linear_extensions(strong_poset(r)):
        for i in range(r.n - 1):
            sigma = _swap_positions(pi, i)
            r2 = gamma_s(sigma)
            key = strong_key(r2)
            if key == base or tuple(key) in found:
                continue
            canon = gamma_s(key)
            j, k = pi[i], pi[i + 1]
            found[tuple(key)] = (_flip_kind(r, canon, j, k), canon)
    return [found[key] for key in sorted(found)]


@dataclass(frozen=True)
class FlipGraph:
    """Quotient cover graph: vertices are canonical strong-class keys."""

    n: int
    vertices: tuple[Permutation, ...]
    edges: tuple[tuple[Permutation, Permutation], ...]

    def neighbors(self, v: Permutation) -> list[Permutation]:
        out = [b for a, b in self.edges if a == v]
        out += [a for a, b in self.edges if b == v]
        return sorted(out)

    def to_dot(self) -> str:
        lines = ["graph quotient {"]
        for v in self.vertices:
            lines.append('  "%s";' % v.one_line())
        for a, b in self.edges:
            lines.append('  "%s" -- "%s";' % (a.one_line(), b.one_line()))
        lines.append("}")
        return "\n".join(lines) + "\n"


def _default_max_n() -> int:
    try:
        return int(os.environ.get("RECTLAB_MAX_N", "6"))
    except ValueError:
        return 6


def quotient_cover_graph(n: int, max_n: int | None = None) -> FlipGraph:
    """Brute-force flip graph over all strong classes of size ``n``.

    For every permutation and every adjacent transposition whose images
    differ, an edge joins the two canonical keys.  Guarded by ``max_n``
    (default: the RECTLAB_MAX_N environment variable, else 6).
    """
    from .perm import all_permutations
    from .rect import strong_key

    bound = max_n if max_n is not None else _default_max_n()
    if n > bound:
        raise ValueError(
            "size %d exceeds the configured bound %d (raise RECTLAB_MAX_N)"
            % (n, bound)
        )
    key_of: dict[Permutation, Permutation] = {}
    for pi in all_permutations(n):
        key_of[pi] = strong_key(gamma_s(pi))
    vertices = sorted(set(key_of.values()))
    edges = set()
    for pi, k1 in key_of.items():
        for i in range(n - 1):
            k2 = key_of[_swap_positions(pi, i)]
            if k1 != k2:
                edges.add((min(k1, k2), max(k1, k2)))
    return FlipGraph(n, tuple(vertices), tuple(sorted(edges)))


# ---------------------------------------------------------------------------
# Geometric backward algorithms (independent cross-checks for the fibers)
# ---------------------------------------------------------------------------


def _fiber_weak_geometric(r: Rectangulation) -> set[Permutation]:
    """Enumerate the weak fiber by reverse deletion on the diagonal drawing:
    a rectangle is removable when no remaining rectangle blocks it (nothing
    it is left of or below remains)."""
    d = r if is_diagonal(r) else diagonal_representative(r)
    pairs = _adjacency_pairs(d)
    succ = {j: {b for a, b in pairs if a == j} for j in range(1, d.n + 1)}
    out: set[Permutation] = set()
    order: list[int] = []

    def rec(remaining: frozenset[int]) -> None:
        if not remaining:
            out.add(Permutation(tuple(reversed(order))))
            return
        for j in sorted(remaining):
            if succ[j] & remaining:
                continue
            order.append(j)
            rec(remaining - {j})
            order.pop()

    rec(frozenset(range(1, d.n + 1)))
    return out


def _strong_available(
    r: Rectangulation, remaining: frozenset[int]
) -> list[int]:
    """Labels deletable next in the strong backward algorithm.

    The remaining rectangles form a staircase region; a rectangle is
    available when its top and right sides lie on the staircase boundary,
    its top-left corner continues a horizontal wall (or sits on the previous
    peak), and its bottom-right corner continues a vertical wall (or the
    next peak sits on the supporting rectangle's top side).
    """
    W, H = r.width, r.height
    INF = H  # empty column: boundary at the bottom of the box
    top = [INF] * W
    for j in remaining:
        q = r.rect(j)
        for x in range(q.x1, q.x2):
            top[x] = min(top[x], q.y1)
    avail = []
    for j in sorted(remaining):
        q = r.rect(j)
        if any(top[x] != q.y1 for x in range(q.x1, q.x2)):
            continue  # top side not exposed
        if q.x2 < W and top[q.x2] < q.y2:
            continue  # right side not exposed
        # top-left corner
        if q.x1 > 0:
            left = next(
                (
                    r.rect(k)
                    for k in remaining
                    if r.rect(k).x2 == q.x1
                    and r.rect(k).y1 <= q.y1 < r.rect(k).y2
                ),
                None,
            )
            if left is None:
                continue
            if left.y1 != q.y1 and top[q.x1 - 1] != left.y1:
                continue
        # bottom-right corner
        if q.y2 < H:
            below = next(
                (
                    r.rect(k)
                    for k in remaining
                    if r.rect(k).y1 == q.y2 and r.rect(k).x1 < q.x2 <= r.rect(k).x2
                ),
                None,
            )
            if below is None:
                continue
            if below.x2 != q.x2:
                x_next = next(
                    (x for x in range(q.x2, W) if top[x] != q.y2), W
                )
                if x_next > below.x2:
                    continue
        avail.append(j)
    return avail


def _fiber_strong_geometric(r: Rectangulation) -> set[Permutation]:
    """Enumerate the strong fiber by reverse deletion with the geometric
    availability rules (independent of the poset route)."""
    out: set[Permutation] = set()
    order: list[int] = []

    def rec(remaining: frozenset[int]) -> None:
        if not remaining:
            out.add(Permutation(tuple(reversed(order))))
            return
        for j in _strong_available(r, remaining):
            order.append(j)
            rec(remaining - {j})
            order.pop()

    rec(frozenset(range(1, r.n + 1)))
    return out
