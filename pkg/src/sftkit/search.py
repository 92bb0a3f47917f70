"""Finite constraint systems built from forbidden-pattern occurrences.

A *window* is a finite list of cells.  Every occurrence of a forbidden pattern
that lies fully inside the window becomes a constraint: a tuple of
``(cell index, symbol)`` pairs that must not all hold at once.  Cells are
assigned in index order with symbols ascending; a constraint is checked as
soon as its last cell is assigned.

Two pieces of state compression keep this tractable:

* the *frontier* of position ``k`` is the set of already-assigned cells that
  share a constraint with some cell ``>= k``.  What happens after ``k`` depends
  only on the frontier values, so dead ends are cached per frontier key;
* counting runs forward over frontier keys instead of enumerating leaves.

Neither changes results: enumeration order is the plain lexicographic
backtracking order.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import product as cartesian
from typing import Iterable, Iterator, Sequence

from .errors import ResourceLimitError
from .groups import Element, GroupContext
from .presentations import ResolvedPattern

Constraint = tuple[tuple[int, int], ...]


def window_constraints(
    ctx: GroupContext, cells: Sequence[Element], patterns: Iterable[ResolvedPattern]
) -> list[Constraint]:
    """All occurrences of consistent patterns fully inside ``cells``."""
    index = {g: i for i, g in enumerate(cells)}
    out = set()
    for q in patterns:
        if q.support is None:
            continue
        h0 = q.support[0][0]
        h0_inv = ctx.inverse(h0)
        for x in cells:
            g = ctx.multiply(x, h0_inv)
            occ = []
            for h, v in q.support:
                i = index.get(ctx.multiply(g, h))
                if i is None:
                    break
                occ.append((i, v))
            else:
                out.add(tuple(sorted(occ)))
    return sorted(out)


def torus_cells(dimension: int, n: int) -> list[tuple[int, ...]]:
    return list(cartesian(range(n), repeat=dimension))


def box_cells(dimension: int, n: int) -> list[tuple[int, ...]]:
    return list(cartesian(range(n), repeat=dimension))


def reduce_mod(support: Iterable[tuple[tuple[int, ...], int]], n: int) -> dict[tuple[int, ...], int] | None:
    """Reduce a grid support coordinate-wise mod ``n``; ``None`` if two cells collide with different symbols."""
    out: dict[tuple[int, ...], int] = {}
    for h, v in support:
        key = tuple(x % n for x in h)
        if out.setdefault(key, v) != v:
            return None
    return out


def torus_constraints(dimension: int, n: int, patterns: Iterable[ResolvedPattern]) -> list[Constraint]:
    """Occurrences of the patterns at every position of the torus (Z/nZ)^d."""
    cells = torus_cells(dimension, n)
    index = {g: i for i, g in enumerate(cells)}
    out = set()
    for q in patterns:
        if q.support is None:
            continue
        red = reduce_mod(q.support, n)
        if red is None:
            # the reduced pattern cannot match anywhere
            continue
        for g in cells:
            occ = sorted(
                (index[tuple((a + b) % n for a, b in zip(g, h))], v) for h, v in red.items()
            )
            out.add(tuple(occ))
    return sorted(out)


class ConstraintSystem:
    """Cells ``0..n-1`` with per-cell domains and forbidden-occurrence constraints."""

    def __init__(self, domains: Sequence[Sequence[int]], constraints: Iterable[Constraint]):
        self.domains = [tuple(sorted(d)) for d in domains]
        n = self.n = len(self.domains)
        self.constraints = list(constraints)

        last_use = [-1] * n
        self.by_last: list[dict[int, list[tuple[tuple[int, int], ...]]]] = [defaultdict(list) for _ in range(n)]
        for c in self.constraints:
            k, vk = c[-1]
            self.by_last[k][vk].append(c[:-1])
            for i, _ in c:
                last_use[i] = max(last_use[i], k)

        # frontier[k]: cells i < k sharing a constraint with a cell >= k
        self.frontier: list[tuple[int, ...]] = []
        cur: list[int] = []
        for k in range(n + 1):
            cur = [i for i in cur if last_use[i] >= k]
            self.frontier.append(tuple(cur))
            if k < n and last_use[k] > k:
                cur.append(k)

    def _violates(self, k: int, v: int, assign: list) -> bool:
        for rest in self.by_last[k].get(v, ()):
            if all(assign[i] == val for i, val in rest):
                return True
        return False

    def solutions(self) -> Iterator[tuple[int, ...]]:
        """All satisfying assignments, lexicographic in (cell order, symbol order)."""
        n = self.n
        if n == 0:
            yield ()
            return
        if any(not d for d in self.domains):
            return
        assign: list = [None] * n
        pos = [0] * n
        found = [False] * n
        keys: list = [None] * n
        dead: set = set()
        k = 0
        while k >= 0:
            dom = self.domains[k]
            if pos[k] < len(dom):
                v = dom[pos[k]]
                pos[k] += 1
                assign[k] = v
                if self._violates(k, v, assign):
                    continue
                if k + 1 == n:
                    found[k] = True
                    yield tuple(assign)
                    continue
                key = (k + 1, tuple(assign[i] for i in self.frontier[k + 1]))
                if key in dead:
                    continue
                k += 1
                keys[k] = key
                pos[k] = 0
                found[k] = False
            else:
                if k > 0:
                    if found[k]:
                        found[k - 1] = True
                    else:
                        dead.add(keys[k])
                k -= 1

    def first(self) -> tuple[int, ...] | None:
        return next(self.solutions(), None)

    def count(self, max_states: int | None = None) -> int:
        """Number of satisfying assignments, by forward propagation over frontier keys."""
        states: dict[tuple, int] = {(): 1}
        for k in range(self.n):
            old_front = self.frontier[k]
            where = {cell: j for j, cell in enumerate(old_front)}
            checks = {
                v: [tuple((where[i], val) for i, val in rest) for rest in rests]
                for v, rests in self.by_last[k].items()
            }
            new_sel = [where.get(i, -1) for i in self.frontier[k + 1]]
            new: dict[tuple, int] = defaultdict(int)
            for key, cnt in states.items():
                for v in self.domains[k]:
                    if any(all(key[j] == val for j, val in rest) for rest in checks.get(v, ())):
                        continue
                    nkey = tuple(v if j < 0 else key[j] for j in new_sel)
                    new[nkey] += cnt
            if max_states is not None and len(new) > max_states:
                raise ResourceLimitError(f"frontier states at cell {k}", len(new), max_states)
            states = new
            if not states:
                return 0
        return sum(states.values())
