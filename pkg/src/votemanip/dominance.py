"""Comparing sets of possible outcomes from one voter's point of view.

A voter with ranking R weighs one outcome set X against another Y in one
of three ways:

* ``weak``: every member of X is ranked at least as high as every member
  of Y (with "at least as high" meaning strictly above or identical);
* ``opt``: an optimist compares the best members of X and Y;
* ``pes``: a pessimist compares the worst members.

The strict variant additionally requires some member of X strictly above
some member of Y; for ``opt``/``pes`` this reduces to a strict comparison
of the best/worst members.  Note that ``weak`` is not reflexive on
non-singleton sets: {a, b} never weakly dominates itself, because b is not
at least as high as a.
"""

from __future__ import annotations

from typing import Collection

from .core import Ranking

KINDS = ("weak", "opt", "pes")


def _check(kind: str, xs: Collection[int], ys: Collection[int]) -> None:
    if kind not in KINDS:
        raise ValueError(f"unknown dominance kind {kind!r}, expected one of {KINDS}")
    if not xs or not ys:
        raise ValueError("dominance is only defined for nonempty outcome sets")


def dominates_nonstrict(
    kind: str, xs: Collection[int], ys: Collection[int], ranking: Ranking
) -> bool:
    """True if xs is at least as good as ys for a voter with ``ranking``."""
    _check(kind, xs, ys)
    pos = ranking.position
    if kind == "weak":
        return all(x == y or pos[x] < pos[y] for x in xs for y in ys)
    if kind == "opt":
        return pos[ranking.best_of(xs)] <= pos[ranking.best_of(ys)]
    return pos[ranking.worst_of(xs)] <= pos[ranking.worst_of(ys)]


def dominates_strict(
    kind: str, xs: Collection[int], ys: Collection[int], ranking: Ranking
) -> bool:
    """True if xs is strictly better than ys for a voter with ``ranking``."""
    _check(kind, xs, ys)
    pos = ranking.position
    if kind == "weak":
        found_strict = False
        for x in xs:
            px = pos[x]
            for y in ys:
                if x == y:
                    continue
                if px >= pos[y]:
                    return False
                found_strict = True
        return found_strict
    if kind == "opt":
        return pos[ranking.best_of(xs)] < pos[ranking.best_of(ys)]
    return pos[ranking.worst_of(xs)] < pos[ranking.worst_of(ys)]
