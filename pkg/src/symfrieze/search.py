"""Exhaustive search for friezes with positive integer entries.

Seeds are straight two-column zig-zags with entries 1..bound; a seed
survives when integer-only propagation keeps every cell a positive
integer and closes up after a full period.  Almost all seeds die within
a column or two, so the search stays cheap well past bound 30.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .frieze import FriezeGrid, dihedral_images, propagate_from_zigzag, translate
from .scalars import RATIONAL

__all__ = ["SearchConfig", "enumerate_friezes", "dihedral_orbits"]

_DEDUP_MODES = ("none", "translation", "dihedral")


@dataclass(frozen=True)
class SearchConfig:
    """Width to search, cap on seed entries, and deduplication mode.

    dedup "none" keeps one grid per surviving seed, each anchored at
    its own seed columns; "translation" collapses column translates;
    "dihedral" also collapses mirror images.
    """

    width: int
    bound: int
    dedup: str = "none"

    def __post_init__(self):
        if self.width < 1:
            raise ValueError("width must be positive")
        if self.bound < 1:
            raise ValueError("bound must be positive")
        if self.dedup not in _DEDUP_MODES:
            raise ValueError(f"dedup must be one of {_DEDUP_MODES}")


def _closes_positive(seed: Sequence[int], width: int) -> bool:
    # pure-int propagation with early abort; mirrors propagate_from_zigzag
    w = width
    n = w + 5
    whites, blacks = seed[:w], seed[w:]
    col1 = [0] * w
    col2 = [0] * w
    for o in range(w):
        if (1 - o) % 2 != 0:
            col1[o], col2[o] = whites[o], blacks[o]
        else:
            col1[o], col2[o] = blacks[o], whites[o]
    prev, cur = col1, col2
    for x in range(3, 2 * n + 3):
        nxt = []
        for o in range(w):
            above = cur[o - 1] if o else 1
            below = cur[o + 1] if o < w - 1 else 1
            lhs = cur[o] * cur[o] if (x - 1 - o) % 2 == 0 else cur[o]
            q, r = divmod(lhs + above * below, prev[o])
            if r or q <= 0:
                return False
            nxt.append(q)
        prev, cur = cur, nxt
    return prev == col1 and cur == col2


def _grid_key(grid: FriezeGrid) -> Tuple:
    n2 = 2 * grid.period
    return tuple(
        grid.get(x - o, x + o) for x in range(n2) for o in range(grid.width)
    )


def enumerate_friezes(config: SearchConfig) -> List[FriezeGrid]:
    """All positive integer friezes within the seed bound.

    Seeds run in lexicographic order and each surviving seed yields a
    grid anchored at columns (1, 2); deduplicated output keeps the
    first representative of every class.  Re-running with a larger
    bound returns a superset.
    """
    w = config.width
    out: List[FriezeGrid] = []
    seen: set = set()
    for seed in itertools.product(range(1, config.bound + 1), repeat=2 * w):
        if not _closes_positive(seed, w):
            continue
        grid = propagate_from_zigzag(seed, w, RATIONAL)
        if config.dedup == "none":
            out.append(grid)
            continue
        if config.dedup == "translation":
            images = (translate(grid, t) for t in range(grid.period))
        else:
            images = dihedral_images(grid)
        canon = min(_grid_key(im) for im in images)
        if canon in seen:
            continue
        seen.add(canon)
        out.append(grid)
    return out


def dihedral_orbits(
    friezes: Iterable[FriezeGrid], n: Optional[int] = None
) -> List[List[FriezeGrid]]:
    """Partition friezes by translation and mirror symmetry.

    All inputs must share one width; `n`, when given, must equal their
    period (the orbits are classes of that dihedral group's action).
    Classes come back sorted by their canonical key, least first, and
    each class lists its members in the same order, so classes[i][0]
    is the canonical representative present in the input.
    """
    grids = list(friezes)
    if not grids:
        return []
    width = grids[0].width
    for g in grids:
        if g.width != width:
            raise ValueError(f"width mismatch: {g.width} != {width}")
    period = grids[0].period
    if n is not None and n != period:
        raise ValueError(f"dihedral order {n} does not match period {period}")
    buckets: Dict[Tuple, List[FriezeGrid]] = {}
    for g in grids:
        canon = min(_grid_key(im) for im in dihedral_images(g))
        buckets.setdefault(canon, []).append(g)
    return [
        sorted(members, key=_grid_key) for _, members in sorted(buckets.items())
    ]
