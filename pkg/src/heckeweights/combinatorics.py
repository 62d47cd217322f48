"""Partitions, double partitions, standard tableaux and box statistics.

Conventions fixed here (and relied on everywhere else for reproducibility):

* a partition is a tuple of weakly decreasing nonnegative integers; the
  canonical form has no trailing zeros;
* ``partitions(n)`` lists partitions in reverse lexicographic order;
* ``double_partitions(n)`` lists pairs (alpha, beta) with |alpha| descending,
  each component in ``partitions`` order;
* a tableau stores the map entry -> box, where a box is ``(component, row,
  column)`` with 1-based row/column and component 0 (first) or 1 (second);
* the canonical order on tableaux of one shape is lexicographic on the
  tuple of boxes for entries 1, 2, ..., n.
"""

from __future__ import annotations

from dataclasses import dataclass

Partition = tuple


def trim(parts) -> Partition:
    """Canonical form: drop trailing zeros."""
    parts = tuple(parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def pad(parts, length: int) -> Partition:
    parts = trim(parts)
    if len(parts) > length:
        raise ValueError(f"partition {parts} has more than {length} parts")
    return parts + (0,) * (length - len(parts))


def partitions(n: int, max_part: int | None = None) -> list:
    """All partitions of n in reverse lexicographic order."""
    if n == 0:
        return [()]
    if max_part is None or max_part > n:
        max_part = n
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


def double_partitions(n: int) -> list:
    """All ordered pairs (alpha, beta) with |alpha| + |beta| = n."""
    out = []
    for a in range(n, -1, -1):
        for alpha in partitions(a):
            for beta in partitions(n - a):
                out.append((alpha, beta))
    return out


def n_stat(alpha) -> int:
    """sum over rows of (row index - 1) * part."""
    return sum(i * part for i, part in enumerate(trim(alpha)))


def addable_corners(alpha) -> list:
    """1-based (row, col) positions where a box may be added."""
    alpha = trim(alpha)
    corners = []
    for r in range(1, len(alpha) + 2):
        here = alpha[r - 1] if r <= len(alpha) else 0
        above = alpha[r - 2] if r >= 2 else None
        if above is None or above > here:
            corners.append((r, here + 1))
    return corners


def removable_corners(alpha) -> list:
    alpha = trim(alpha)
    corners = []
    for r in range(1, len(alpha) + 1):
        below = alpha[r] if r < len(alpha) else 0
        if alpha[r - 1] > below:
            corners.append((r, alpha[r - 1]))
    return corners


def add_box(alpha, row: int) -> Partition:
    alpha = trim(alpha)
    parts = list(alpha) + [0] * (row - len(alpha))
    parts[row - 1] += 1
    return trim(parts)


def one_box_successors(shape) -> list:
    """All double partitions obtained from shape by adding one box."""
    alpha, beta = shape
    out = [(add_box(alpha, r), trim(beta)) for r, _ in addable_corners(alpha)]
    out += [(trim(alpha), add_box(beta, r)) for r, _ in addable_corners(beta)]
    return out


def embed_double(shape, m: int, r1: int) -> Partition:
    """The partition [m+alpha_1, ..., m+alpha_r1, beta_1, ...] obtained by
    gluing alpha to the right of an r1 x m rectangle and beta below it."""
    alpha, beta = trim(shape[0]), trim(shape[1])
    if len(alpha) > r1:
        raise ValueError(f"alpha = {alpha} has more than r1 = {r1} rows")
    if alpha and alpha[0] > m:
        raise ValueError(f"alpha = {alpha} is wider than m = {m}")
    return tuple(m + a for a in pad(alpha, r1)) + beta


# -- tableaux ----------------------------------------------------------------

@dataclass(frozen=True)
class DoubleTableau:
    """A standard filling of a double partition; entry k sits in
    ``boxes[k-1]`` = (component, row, column)."""

    shape: tuple
    boxes: tuple

    @property
    def size(self) -> int:
        return len(self.boxes)

    def box(self, entry: int):
        if not 1 <= entry <= self.size:
            raise ValueError(f"entry {entry} out of range 1..{self.size}")
        return self.boxes[entry - 1]


@dataclass(frozen=True)
class BoxStat:
    component: int
    content: int
    row: int


def standard_tableaux(shape) -> list:
    """All standard tableaux of the double partition, canonically ordered."""
    alpha, beta = trim(shape[0]), trim(shape[1])
    n = sum(alpha) + sum(beta)
    target = (alpha, beta)
    out = []

    def grow(k, cur, boxes):
        if k > n:
            out.append(DoubleTableau(shape=(alpha, beta), boxes=tuple(boxes)))
            return
        for comp in (0, 1):
            goal = target[comp]
            rows = cur[comp]
            for r in range(1, len(goal) + 1):
                filled = rows[r - 1]
                if filled >= goal[r - 1]:
                    continue
                if r > 1 and rows[r - 2] <= filled:
                    continue
                rows[r - 1] += 1
                boxes.append((comp, r, filled + 1))
                grow(k + 1, cur, boxes)
                boxes.pop()
                rows[r - 1] -= 1

    grow(1, ([0] * len(alpha), [0] * len(beta)), [])
    out.sort(key=lambda t: t.boxes)
    return out


def box_stat(t: DoubleTableau, entry: int) -> BoxStat:
    comp, row, col = t.box(entry)
    return BoxStat(component=comp, content=col - row, row=row)


def apply_transposition(t: DoubleTableau, i: int):
    """Swap entries i and i+1 if the result is standard, else None.

    The swap breaks standardness exactly when the two boxes share a row or
    a column of the same component (in which case they are adjacent).
    """
    if not 1 <= i <= t.size - 1:
        raise ValueError(f"index {i} out of range 1..{t.size - 1}")
    b1, b2 = t.boxes[i - 1], t.boxes[i]
    if b1[0] == b2[0] and (b1[1] == b2[1] or b1[2] == b2[2]):
        return None
    boxes = list(t.boxes)
    boxes[i - 1], boxes[i] = b2, b1
    return DoubleTableau(shape=t.shape, boxes=tuple(boxes))


def axial_parameter(t: DoubleTableau, i: int, point):
    """The scalar x(t, i) driving the seminormal action of the i-th
    generator on the basis vector of t.

    Within one component it is q to the content difference of the boxes of
    i+1 and i.  Across components the content difference is corrected by
    -1/Q (first to second) or -Q (second to first); at Q = -q^(r1+m) this
    reduces to the plain content-difference rule inside the glued diagram.
    """
    s1, s2 = box_stat(t, i), box_stat(t, i + 1)
    base = point.q ** (s2.content - s1.content)
    if s1.component == s2.component:
        return base
    if s1.component == 0:
        return -base / point.Q
    return -point.Q * base


def mu_content(box, m: int, r1: int) -> int:
    """Content of a double-partition box inside the glued diagram
    embed_double(shape, m, r1): alpha boxes shift right by m, beta boxes
    shift down by r1."""
    comp, row, col = box
    if comp == 0:
        return (col + m) - row
    return col - (row + r1)


# -- text encoding (CLI) -----------------------------------------------------

def partition_str(alpha) -> str:
    return "[" + ",".join(str(p) for p in trim(alpha)) + "]"


def shape_str(shape) -> str:
    return partition_str(shape[0]) + "|" + partition_str(shape[1])


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"bad partition {text!r}: expected [a,b,...]")
    inner = text[1:-1].strip()
    parts = tuple(int(p) for p in inner.split(",")) if inner else ()
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"bad partition {text!r}: parts must decrease")
    if parts and parts[-1] < 0:
        raise ValueError(f"bad partition {text!r}: negative part")
    return trim(parts)


def parse_shape(text: str):
    if "|" not in text:
        raise ValueError(f"bad shape {text!r}: expected alpha|beta")
    a, b = text.split("|", 1)
    return (parse_partition(a), parse_partition(b))
