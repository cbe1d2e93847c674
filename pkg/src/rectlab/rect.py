"""Rectangulation geometry: segments, labelings, windmills, guillotine cuts.

Conventions
-----------
- Coordinates are non-negative integers; ``y`` increases **downward**, so
  "above" means smaller ``y``.  A rectangle is stored as
  ``(label, x1, y1, x2, y2)`` with ``x1 < x2`` (left/right) and ``y1 < y2``
  (top/bottom).
- A rectangulation of size ``n`` tiles the box ``[0, width] x [0, height]``
  with ``n`` rectangles whose interiors are disjoint.  It must be *generic*:
  no point where four rectangles meet.
- :func:`from_rects` normalizes coordinates to be *compact* (every internal
  grid line hosts part of a wall), but the constructor accepts any integer
  embedding: the diagonal representative produced by the forward weak
  algorithm lives on the n x n grid, which is generally not compact.
  Canonical equality of classes is defined via :func:`strong_key` (strong)
  and :func:`weak_key` (weak), never via raw coordinates.
- Labels ``1..n`` are the NW-SE labeling: ``i < j`` iff rectangle ``i`` is
  left of or above rectangle ``j`` (in the transitive wall-sharing sense).
- A *segment* is a maximal straight interval of internal walls.  A valid
  rectangulation of size ``n`` has exactly ``n - 1`` segments.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence


class RectangulationError(ValueError):
    """Base class for invalid rectangulation input."""


class OverlapError(RectangulationError):
    """Two rectangles have intersecting interiors."""


class GapError(RectangulationError):
    """The union of the rectangles leaves an internal hole."""


class NonRectangularUnionError(RectangulationError):
    """The union of the rectangles is not a full box."""


class NonGenericError(RectangulationError):
    """Four rectangles meet in a point (a crossing joint)."""


@dataclass(frozen=True, order=True)
class Rect:
    """An axis-aligned rectangle with its NW-SE label."""

    label: int
    x1: int
    y1: int
    x2: int
    y2: int

    def __post_init__(self) -> None:
        for v in (self.label, self.x1, self.y1, self.x2, self.y2):
            if not isinstance(v, int):
                raise RectangulationError("rectangle fields must be integers: %r" % (self,))
        if not (self.x1 < self.x2 and self.y1 < self.y2):
            raise RectangulationError(
                "degenerate rectangle %r (need x1 < x2 and y1 < y2)" % (self,)
            )

    @property
    def box(self) -> tuple[int, int, int, int]:
        return (self.x1, self.y1, self.x2, self.y2)


@dataclass(frozen=True)
class Segment:
    """A maximal internal wall interval.

    ``orientation`` is ``"v"`` (vertical, at ``x = line``, spanning
    ``lo <= y <= hi``) or ``"h"`` (horizontal, at ``y = line``, spanning
    ``lo <= x <= hi``).  ``side_a`` lists the labels of rectangles whose
    sides lie on the segment on the left (vertical) / above (horizontal)
    side; ``side_b`` the right / below side.  Both are ordered along the
    segment.
    """

    orientation: str
    line: int
    lo: int
    hi: int
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]

    @property
    def endpoints(self) -> tuple[tuple[int, int], tuple[int, int]]:
        if self.orientation == "v":
            return ((self.line, self.lo), (self.line, self.hi))
        return ((self.lo, self.line), (self.hi, self.line))


def _closure_masks(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    """Transitive closure as bitmasks: bit ``j`` of ``reach[i]`` iff i -> j."""
    succ = [0] * n
    for i, j in edges:
        succ[i] |= 1 << j
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = succ[i]
            extra = 0
            m = acc
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                extra |= succ[j]
            new = acc | extra
            if new != acc:
                succ[i] = new
                changed = True
    return succ


class Rectangulation:
    """An immutable generic rectangulation with eagerly derived structure.

    Construct via :func:`from_rects` (raw boxes, relabeled and normalized) or
    :func:`from_json`; the constructor itself requires already-normalized,
    NW-SE-labeled rectangles and revalidates every invariant.
    """

    __slots__ = (
        "rects",
        "width",
        "height",
        "segments",
        "joints",
        "_left_reach",
        "_above_reach",
    )

    def __init__(self, rects: Iterable[Rect], _check_labels: bool = True):
        rect_list = sorted(rects, key=lambda r: r.label)
        if not rect_list:
            raise RectangulationError("a rectangulation has at least one rectangle")
        n = len(rect_list)
        if [r.label for r in rect_list] != list(range(1, n + 1)):
            raise RectangulationError(
                "labels must be exactly 1..%d, got %r" % (n, [r.label for r in rect_list])
            )
        width = max(r.x2 for r in rect_list)
        height = max(r.y2 for r in rect_list)
        if min(r.x1 for r in rect_list) != 0 or min(r.y1 for r in rect_list) != 0:
            raise RectangulationError("coordinates must start at 0 (not normalized)")
        object.__setattr__(self, "rects", tuple(rect_list))
        object.__setattr__(self, "width", width)
        object.__setattr__(self, "height", height)
        self._validate_tiling()
        segments, joints = self._derive_segments()
        object.__setattr__(self, "segments", segments)
        object.__setattr__(self, "joints", joints)
        if len(segments) != n - 1:
            raise RectangulationError(
                "expected %d segments, found %d" % (n - 1, len(segments))
            )
        left, above = self._derive_orders()
        object.__setattr__(self, "_left_reach", left)
        object.__setattr__(self, "_above_reach", above)
        if _check_labels:
            got = nwse_labeling(self)
            if got != tuple(range(1, n + 1)):
                raise RectangulationError(
                    "labels are not the NW-SE labeling (expected order %r)" % (got,)
                )

    # -- invariant machinery -------------------------------------------------

    def _validate_tiling(self) -> None:
        # Validate coverage on the compacted image: ordering of coordinates is
        # all that matters, and it keeps the cell grid at most (2n)^2.
        xs = sorted({v for r in self.rects for v in (r.x1, r.x2)})
        ys = sorted({v for r in self.rects for v in (r.y1, r.y2)})
        xi = {v: i for i, v in enumerate(xs)}
        yi = {v: i for i, v in enumerate(ys)}
        cw, ch = len(xs) - 1, len(ys) - 1
        cover = [[0] * cw for _ in range(ch)]
        for r in self.rects:
            for y in range(yi[r.y1], yi[r.y2]):
                row = cover[y]
                for x in range(xi[r.x1], xi[r.x2]):
                    row[x] += 1
        over = [(x, y) for y in range(ch) for x in range(cw) if cover[y][x] > 1]
        if over:
            x, y = over[0]
            raise OverlapError(
                "rectangle interiors overlap near (%d, %d)" % (xs[x], ys[y])
            )
        missing = {(x, y) for y in range(ch) for x in range(cw) if cover[y][x] == 0}
        if missing:
            boundary = any(
                x == 0 or y == 0 or x == cw - 1 or y == ch - 1 for x, y in missing
            )
            x, y = sorted(missing)[0]
            if boundary:
                raise NonRectangularUnionError(
                    "union of rectangles is not a box (uncovered near (%d, %d))"
                    % (xs[x], ys[y])
                )
            raise GapError("hole inside the tiling near (%d, %d)" % (xs[x], ys[y]))
        corner_count: dict[tuple[int, int], int] = {}
        for r in self.rects:
            for p in ((r.x1, r.y1), (r.x2, r.y1), (r.x1, r.y2), (r.x2, r.y2)):
                corner_count[p] = corner_count.get(p, 0) + 1
        for (x, y), c in corner_count.items():
            if 0 < x < self.width and 0 < y < self.height and c != 2:
                if c == 4:
                    raise NonGenericError(
                        "four rectangles meet at %r (non-generic crossing)" % ((x, y),)
                    )
                raise RectangulationError(
                    "malformed joint at %r (%d rectangle corners)" % ((x, y), c)
                )

    def _derive_segments(self) -> tuple[tuple[Segment, ...], dict[tuple[int, int], str]]:
        segments: list[Segment] = []
        # Vertical walls per internal x line (only lines hosting sides).
        v_lines = sorted(
            {r.x2 for r in self.rects if r.x2 < self.width}
            | {r.x1 for r in self.rects if r.x1 > 0}
        )
        for line in v_lines:
            lefts = sorted(
                (r for r in self.rects if r.x2 == line), key=lambda r: r.y1
            )
            rights = sorted(
                (r for r in self.rects if r.x1 == line), key=lambda r: r.y1
            )
            runs_a = _merge_runs((r.y1, r.y2) for r in lefts)
            runs_b = _merge_runs((r.y1, r.y2) for r in rights)
            if runs_a != runs_b:
                raise RectangulationError("wall mismatch on vertical line x=%d" % line)
            for lo, hi in runs_a:
                side_a = tuple(r.label for r in lefts if lo <= r.y1 and r.y2 <= hi)
                side_b = tuple(r.label for r in rights if lo <= r.y1 and r.y2 <= hi)
                segments.append(Segment("v", line, lo, hi, side_a, side_b))
        # Horizontal walls per internal y line.
        h_lines = sorted(
            {r.y2 for r in self.rects if r.y2 < self.height}
            | {r.y1 for r in self.rects if r.y1 > 0}
        )
        for line in h_lines:
            aboves = sorted(
                (r for r in self.rects if r.y2 == line), key=lambda r: r.x1
            )
            belows = sorted(
                (r for r in self.rects if r.y1 == line), key=lambda r: r.x1
            )
            runs_a = _merge_runs((r.x1, r.x2) for r in aboves)
            runs_b = _merge_runs((r.x1, r.x2) for r in belows)
            if runs_a != runs_b:
                raise RectangulationError("wall mismatch on horizontal line y=%d" % line)
            for lo, hi in runs_a:
                side_a = tuple(r.label for r in aboves if lo <= r.x1 and r.x2 <= hi)
                side_b = tuple(r.label for r in belows if lo <= r.x1 and r.x2 <= hi)
                segments.append(Segment("h", line, lo, hi, side_a, side_b))
        joints: dict[tuple[int, int], str] = {}
        for r in self.rects:
            for p in ((r.x1, r.y1), (r.x2, r.y1), (r.x1, r.y2), (r.x2, r.y2)):
                x, y = p
                if not (0 < x < self.width and 0 < y < self.height):
                    continue
                if p in joints:
                    continue
                mates = [
                    s
                    for s in self.rects
                    if p in ((s.x1, s.y1), (s.x2, s.y1), (s.x1, s.y2), (s.x2, s.y2))
                ]
                if all(s.x1 == x for s in mates):
                    joints[p] = "right"
                elif all(s.x2 == x for s in mates):
                    joints[p] = "left"
                elif all(s.y1 == y for s in mates):
                    joints[p] = "down"
                else:
                    joints[p] = "up"
        return tuple(segments), joints

    def _derive_orders(self) -> tuple[list[int], list[int]]:
        n = len(self.rects)
        left_edges = []
        above_edges = []
        for s in self.segments:
            if s.orientation == "v":
                left_edges.extend(
                    (i - 1, j - 1) for i in s.side_a for j in s.side_b
                )
            else:
                above_edges.extend(
                    (i - 1, j - 1) for i in s.side_a for j in s.side_b
                )
        return _closure_masks(n, left_edges), _closure_masks(n, above_edges)

    # -- basic relations -----------------------------------------------------

    def left_of(self, i: int, j: int) -> bool:
        """Rectangle ``i`` left of ``j`` via a chain of shared vertical walls."""
        return bool(self._left_reach[i - 1] >> (j - 1) & 1)

    def above(self, i: int, j: int) -> bool:
        """Rectangle ``i`` above ``j`` via a chain of shared horizontal walls."""
        return bool(self._above_reach[i - 1] >> (j - 1) & 1)

    def rect(self, label: int) -> Rect:
        return self.rects[label - 1]

    @property
    def n(self) -> int:
        return len(self.rects)

    # -- equality ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Rectangulation):
            return NotImplemented
        return self.rects == other.rects

    def __hash__(self) -> int:
        return hash(self.rects)

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return "Rectangulation(n=%d, %dx%d)" % (self.n, self.width, self.height)


def _merge_runs(intervals: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Merge abutting/overlapping intervals into maximal runs."""
    out: list[list[int]] = []
    for lo, hi in sorted(intervals):
        if out and lo <= out[-1][1]:
            out[-1][1] = max(out[-1][1], hi)
        else:
            out.append([lo, hi])
    return tuple((a, b) for a, b in out)


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def from_rects(boxes: Iterable[Sequence[int | Fraction]]) -> Rectangulation:
    """Build a rectangulation from raw ``(x1, y1, x2, y2)`` boxes.

    Coordinates may be ints or exact :class:`~fractions.Fraction` values
    (floats are rejected: compaction relies on exact comparisons).  Input
    labels (if any) are ignored: coordinates are compacted to 0-based
    integers, and labels are assigned by the NW-SE order.  Raises a specific
    :class:`RectangulationError` subclass when the input does not tile a box
    generically.
    """
    raw = []
    for b in boxes:
        vals = tuple(b.box if isinstance(b, Rect) else b)
        if len(vals) != 4:
            raise RectangulationError("expected 4 coordinates per box, got %r" % (vals,))
        for v in vals:
            if isinstance(v, bool) or not isinstance(v, (int, Fraction)):
                raise RectangulationError(
                    "coordinates must be ints or Fractions, got %r" % (v,)
                )
        raw.append(vals)
    if not raw:
        raise RectangulationError("a rectangulation has at least one rectangle")
    xs = sorted({v for b in raw for v in (b[0], b[2])})
    ys = sorted({v for b in raw for v in (b[1], b[3])})
    xmap = {v: i for i, v in enumerate(xs)}
    ymap = {v: i for i, v in enumerate(ys)}
    compact = sorted(
        (xmap[b[0]], ymap[b[1]], xmap[b[2]], ymap[b[3]]) for b in raw
    )
    provisional = Rectangulation(
        (Rect(i + 1, *b) for i, b in enumerate(compact)), _check_labels=False
    )
    order = nwse_labeling(provisional)
    rects = [
        Rect(rank + 1, *provisional.rect(lbl).box) for rank, lbl in enumerate(order)
    ]
    return Rectangulation(rects)


def nwse_labeling(r: Rectangulation) -> tuple[int, ...]:
    """Labels in NW-SE reading order: ``i`` before ``j`` iff left-of or above.

    For a valid rectangulation this is ``(1, 2, .., n)`` by the labeling
    invariant.
    """
    n = r.n
    return tuple(
        sorted(
            range(1, n + 1),
            key=_total_order_key(r, flip_above=False),
        )
    )


def swne_labeling(r: Rectangulation) -> tuple[int, ...]:
    """Labels in SW-NE (anti-diagonal) reading order.

    ``i`` before ``j`` iff ``i`` left of ``j`` or ``j`` above ``i``.
    """
    n = r.n
    return tuple(
        sorted(
            range(1, n + 1),
            key=_total_order_key(r, flip_above=True),
        )
    )


def _total_order_key(r: Rectangulation, flip_above: bool):
    import functools

    def cmp(i: int, j: int) -> int:
        if i == j:
            return 0
        li, lj = r.left_of(i, j), r.left_of(j, i)
        ai, aj = r.above(i, j), r.above(j, i)
        if flip_above:
            ai, aj = aj, ai
        before = li or ai
        after = lj or aj
        if before and not after:
            return -1
        if after and not before:
            return 1
        raise RectangulationError(
            "rectangles %d and %d are not comparable by exactly one relation" % (i, j)
        )

    return functools.cmp_to_key(cmp)


def from_json(text: str) -> Rectangulation:
    """Parse the JSON interchange form and revalidate all invariants."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RectangulationError(
            "invalid JSON at line %d column %d: %s" % (exc.lineno, exc.colno, exc.msg)
        ) from None
    if not isinstance(data, dict) or "rects" not in data:
        raise RectangulationError('JSON must be an object with a "rects" array')
    rects = []
    for i, obj in enumerate(data["rects"]):
        try:
            rects.append(
                Rect(
                    int(obj["label"]),
                    int(obj["x1"]),
                    int(obj["y1"]),
                    int(obj["x2"]),
                    int(obj["y2"]),
                )
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise RectangulationError("bad rectangle #%d: %s" % (i + 1, exc)) from None
    r = Rectangulation(rects)
    if "n" in data and int(data["n"]) != r.n:
        raise RectangulationError(
            'field "n" (%s) disagrees with the number of rectangles (%d)'
            % (data["n"], r.n)
        )
    return r


def to_json(r: Rectangulation) -> str:
    """Serialize to the JSON interchange form (deterministic bytes)."""
    return json.dumps(
        {
            "n": r.n,
            "rects": [
                {"label": q.label, "x1": q.x1, "y1": q.y1, "x2": q.x2, "y2": q.y2}
                for q in r.rects
            ],
        },
        separators=(", ", ": "),
    )


# ---------------------------------------------------------------------------
# Structure predicates
# ---------------------------------------------------------------------------


def is_diagonal(r: Rectangulation) -> bool:
    """True iff drawn on the n x n grid with rectangle ``j`` meeting cell ``j``
    of the main (NW-SE) diagonal."""
    n = r.n
    if r.width != n or r.height != n:
        return False
    return all(
        q.x1 <= q.label - 1 and q.x2 >= q.label and q.y1 <= q.label - 1 and q.y2 >= q.label
        for q in r.rects
    )


def segment_joint_counts(r: Rectangulation) -> list[tuple[int, int]]:
    """Per segment: how many perpendicular segments end strictly inside it,
    split by side (side_a count, side_b count).

    For a vertical segment, ``side_a`` counts horizontal segments arriving
    from the left, ``side_b`` from the right; for a horizontal segment,
    arrivals from above and from below.
    """
    counts = []
    for s in r.segments:
        a = b = 0
        for t in r.segments:
            if t.orientation == s.orientation:
                continue
            # t's endpoints: (line, lo/hi) in t's own orientation.
            if s.orientation == "v":
                # horizontal t at y=t.line spanning x in [lo, hi]
                if s.lo < t.line < s.hi:
                    if t.hi == s.line:
                        a += 1
                    if t.lo == s.line:
                        b += 1
            else:
                # vertical t at x=t.line spanning y in [lo, hi]
                if s.lo < t.line < s.hi:
                    if t.hi == s.line:
                        a += 1
                    if t.lo == s.line:
                        b += 1
        counts.append((a, b))
    return counts


def multiplicity(r: Rectangulation) -> int:
    """Number of strong classes refining this weak class: the product over
    segments of C(a+b, a) with (a, b) the per-side joint counts.

    The value depends only on the weak class of ``r``.
    """
    out = 1
    for a, b in segment_joint_counts(r):
        out *= math.comb(a + b, a)
    return out


def count_two_sided_segments(r: Rectangulation) -> int:
    """Segments with at least one perpendicular arrival on each side."""
    return sum(1 for a, b in segment_joint_counts(r) if a > 0 and b > 0)


def is_one_sided(r: Rectangulation) -> bool:
    """True iff every segment has all its perpendicular arrivals on one side."""
    return all(a == 0 or b == 0 for a, b in segment_joint_counts(r))


def has_z_wall(r: Rectangulation) -> bool:
    """True iff some vertical segment carries a left-side rectangle whose
    bottom corner lies strictly above a right-side rectangle's top corner,
    both corners strictly inside the segment."""
    for s in r.segments:
        if s.orientation != "v":
            continue
        left_bottoms = [
            r.rect(i).y2 for i in s.side_a if s.lo < r.rect(i).y2 < s.hi
        ]
        right_tops = [
            r.rect(j).y1 for j in s.side_b if s.lo < r.rect(j).y1 < s.hi
        ]
        if left_bottoms and right_tops and min(left_bottoms) < max(right_tops):
            return True
    return False


# ---------------------------------------------------------------------------
# Guillotine structure
# ---------------------------------------------------------------------------


def guillotine_tree(r: Rectangulation):
    """Cut decomposition, or ``None`` when the rectangulation is not guillotine.

    Tree nodes are ``("leaf", label)`` or ``(orientation, coordinate,
    first_subtree, second_subtree)`` with orientation ``"v"``/``"h"``; the cut
    chosen at each node is the leftmost vertical full cut, else the topmost
    horizontal one (any full cut of a guillotine rectangulation works, the
    choice just fixes a deterministic tree).
    """

    def solve(labels: tuple[int, ...], box: tuple[int, int, int, int]):
        if len(labels) == 1:
            return ("leaf", labels[0])
        x1, y1, x2, y2 = box
        group = [r.rect(i) for i in labels]
        for x in sorted({q.x2 for q in group if q.x2 < x2}):
            if all(not (q.x1 < x < q.x2) for q in group):
                first = tuple(q.label for q in group if q.x2 <= x)
                second = tuple(q.label for q in group if q.x1 >= x)
                a = solve(first, (x1, y1, x, y2))
                if a is None:
                    return None
                b = solve(second, (x, y1, x2, y2))
                if b is None:
                    return None
                return ("v", x, a, b)
        for y in sorted({q.y2 for q in group if q.y2 < y2}):
            if all(not (q.y1 < y < q.y2) for q in group):
                first = tuple(q.label for q in group if q.y2 <= y)
                second = tuple(q.label for q in group if q.y1 >= y)
                a = solve(first, (x1, y1, x2, y))
                if a is None:
                    return None
                b = solve(second, (x1, y, x2, y2))
                if b is None:
                    return None
                return ("h", y, a, b)
        return None

    return solve(tuple(range(1, r.n + 1)), (0, 0, r.width, r.height))


def is_guillotine(r: Rectangulation) -> bool:
    """True iff the rectangulation can be fully decomposed by straight cuts."""
    return guillotine_tree(r) is not None


@dataclass(frozen=True)
class Windmill:
    """Four segments whose ends spiral around a central region.

    ``chirality`` is ``"cw"`` when the top horizontal wall's right end lies
    strictly inside the right vertical wall (and so on around the cycle);
    ``"ccw"`` is the mirror image.
    """

    chirality: str
    top: Segment
    right: Segment
    bottom: Segment
    left: Segment


def find_windmills(r: Rectangulation) -> list[Windmill]:
    """All windmills, each reported once with a fixed role assignment."""
    horizontals = [s for s in r.segments if s.orientation == "h"]
    verticals = [s for s in r.segments if s.orientation == "v"]

    def inside(coord: int, seg: Segment) -> bool:
        return seg.lo < coord < seg.hi

    out = []
    for h1 in horizontals:
        for v1 in verticals:
            # cw: h1's right end inside v1 / ccw: h1's left end inside v1
            cw_hook = v1.line == h1.hi and inside(h1.line, v1)
            ccw_hook = v1.line == h1.lo and inside(h1.line, v1)
            if not (cw_hook or ccw_hook):
                continue
            for h2 in horizontals:
                if h2.line != v1.hi or not inside(v1.line, h2):
                    continue  # v1's bottom end must be inside h2
                for v2 in verticals:
                    if cw_hook:
                        if v2.line != h2.lo or not inside(h2.line, v2):
                            continue  # h2's left end inside v2
                    else:
                        if v2.line != h2.hi or not inside(h2.line, v2):
                            continue  # h2's right end inside v2
                    if h1.line != v2.lo or not inside(v2.line, h1):
                        continue  # v2's top end must be inside h1
                    out.append(
                        Windmill(
                            "cw" if cw_hook else "ccw",
                            top=h1,
                            right=v1 if cw_hook else v2,
                            bottom=h2,
                            left=v2 if cw_hook else v1,
                        )
                    )
    return out


# ---------------------------------------------------------------------------
# Canonical keys (delegate to the algorithms module)
# ---------------------------------------------------------------------------


def weak_key(r: Rectangulation):
    """The canonical permutation of the weak class (leftmost extension of the
    weak poset); two rectangulations are weakly equivalent iff keys agree."""
    from . import biject

    return biject.leftmost_extension(biject.weak_poset(r))


def strong_key(r: Rectangulation):
    """The canonical permutation of the strong class (leftmost extension of
    the strong poset); strong equivalence iff keys agree."""
    from . import biject

    return biject.leftmost_extension(biject.strong_poset(r))


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


def render(r: Rectangulation, fmt: str = "ascii") -> str:
    """Deterministic drawing of the rectangulation (``"ascii"`` or ``"svg"``)."""
    if fmt == "ascii":
        return _render_ascii(r)
    if fmt == "svg":
        return _render_svg(r)
    raise ValueError("unsupported render format %r (use 'ascii' or 'svg')" % (fmt,))


_CELL_W = 4
_CELL_H = 2


def _render_ascii(r: Rectangulation) -> str:
    rows = r.height * _CELL_H + 1
    cols = r.width * _CELL_W + 1
    grid = [[" "] * cols for _ in range(rows)]

    def hline(y: int, x1: int, x2: int) -> None:
        gy = y * _CELL_H
        for gx in range(x1 * _CELL_W, x2 * _CELL_W + 1):
            grid[gy][gx] = "-"

    def vline(x: int, y1: int, y2: int) -> None:
        gx = x * _CELL_W
        for gy in range(y1 * _CELL_H, y2 * _CELL_H + 1):
            grid[gy][gx] = "|"

    for q in r.rects:
        hline(q.y1, q.x1, q.x2)
        hline(q.y2, q.x1, q.x2)
        vline(q.x1, q.y1, q.y2)
        vline(q.x2, q.y1, q.y2)
    for q in r.rects:
        for y in (q.y1, q.y2):
            for x in (q.x1, q.x2):
                grid[y * _CELL_H][x * _CELL_W] = "+"
    for q in r.rects:
        text = str(q.label)
        gy = (q.y1 + q.y2) * _CELL_H // 2
        gx = (q.x1 + q.x2) * _CELL_W // 2 - len(text) // 2
        for i, ch in enumerate(text):
            grid[gy][gx + i] = ch
    return "\n".join("".join(row).rstrip() for row in grid) + "\n"


_SVG_UNIT = 40
_SVG_STROKE = 2


def _render_svg(r: Rectangulation) -> str:
    w = r.width * _SVG_UNIT
    h = r.height * _SVG_UNIT
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
        'viewBox="0 0 %d %d">' % (w, h, w, h)
    ]
    for q in r.rects:
        parts.append(
            '<rect x="%d" y="%d" width="%d" height="%d" fill="white" '
            'stroke="black" stroke-width="%d"/>'
            % (
                q.x1 * _SVG_UNIT,
                q.y1 * _SVG_UNIT,
                (q.x2 - q.x1) * _SVG_UNIT,
                (q.y2 - q.y1) * _SVG_UNIT,
                _SVG_STROKE,
            )
        )
    for q in r.rects:
        parts.append(
            '<text x="%d" y="%d" text-anchor="middle" dominant-baseline="central" '
            'font-family="sans-serif" font-size="16">%d</text>'
            % (
                (q.x1 + q.x2) * _SVG_UNIT // 2,
                (q.y1 + q.y2) * _SVG_UNIT // 2,
                q.label,
            )
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
