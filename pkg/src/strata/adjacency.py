"""Splitting calculus on zero orders and the induced refinement order.

A split replaces one zero of order k by 2, 3 or 4 new points whose orders
sum to k.  Two-part splits of an even order must produce two even parts;
three- and four-part splits carry no parity constraint.  Simple poles
(order -1) may appear among the parts but can never themselves be split.
Iterating splits refines signatures and orders the partitions of 4g - 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import (
    BadSum,
    GenusMismatch,
    IndexOutOfRange,
    InvalidMove,
    InvalidSignature,
    ParityViolation,
)
from .signatures import StratumSignature


@dataclass(frozen=True)
class SplitMove:
    source_index: int
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))


@dataclass(frozen=True)
class GroupingSpec:
    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(self.left))
        object.__setattr__(self, "right", tuple(self.right))


def _check_move(order: int, parts: tuple[int, ...]) -> None:
    if order < 1:
        raise InvalidMove("only zeros of positive order can be split, not %d" % order)
    if not 2 <= len(parts) <= 4:
        raise InvalidMove("a split produces 2, 3 or 4 parts, got %d" % len(parts))
    if any(p == 0 or p < -1 for p in parts):
        raise InvalidMove("parts must be -1 or positive, got %r" % (parts,))
    if sum(parts) != order:
        raise BadSum("parts %r sum to %d, expected %d" % (parts, sum(parts), order))
    if len(parts) == 2 and order % 2 == 0 and parts[0] % 2 != 0:
        raise ParityViolation(
            "an even order splits in two only into even parts, got %r" % (parts,)
        )


def apply_split(s: StratumSignature, move: SplitMove) -> StratumSignature:
    if not 0 <= move.source_index < s.n:
        raise IndexOutOfRange("source index %d out of range" % move.source_index)
    _check_move(s.orders[move.source_index], move.parts)
    orders = list(s.orders)
    orders[move.source_index : move.source_index + 1] = list(move.parts)
    return StratumSignature(s.genus, tuple(orders))


def _part_multisets(total: int, count: int, lo: int) -> Iterator[tuple[int, ...]]:
    # non-decreasing tuples of valid orders (no zeros, >= lo) with the given sum
    if count == 1:
        if total >= lo and total != 0:
            yield (total,)
        return
    for v in range(lo, total + count):
        if v == 0:
            continue
        for rest in _part_multisets(total - v, count - 1, v):
            yield (v,) + rest


def legal_splits(order: int, include_poles: bool = True) -> list[tuple[int, ...]]:
    """All part multisets a zero of the given order can split into."""
    if order < 1:
        return []
    lo = -1 if include_poles else 1
    out: list[tuple[int, ...]] = []
    for count in (2, 3, 4):
        for parts in _part_multisets(order, count, lo):
            if count == 2 and order % 2 == 0 and parts[0] % 2 != 0:
                continue
            out.append(parts)
    return out


def poset_successors(
    s: StratumSignature, include_poles: bool = True
) -> set[StratumSignature]:
    """Signatures obtained from ``s`` by exactly one split, as a set."""
    out: set[StratumSignature] = set()
    seen_orders: set[int] = set()
    for idx, order in enumerate(s.orders):
        if order in seen_orders:
            continue
        seen_orders.add(order)
        for parts in legal_splits(order, include_poles=include_poles):
            out.add(apply_split(s, SplitMove(idx, parts)))
    return out


def is_adjacent(higher: StratumSignature, lower: StratumSignature) -> bool:
    """Whether ``higher`` refines ``lower`` through some sequence of splits."""
    if higher.genus != lower.genus:
        raise GenusMismatch(
            "genus %d vs %d" % (higher.genus, lower.genus)
        )
    target = higher.orders
    if lower.orders == target:
        return True
    if lower.n >= len(target):
        return False
    seen = {lower.orders}
    frontier = [lower]
    while frontier:
        fresh: list[StratumSignature] = []
        for state in frontier:
            for nxt in poset_successors(state):
                if len(nxt.orders) > len(target) or nxt.orders in seen:
                    continue
                if nxt.orders == target:
                    return True
                seen.add(nxt.orders)
                fresh.append(nxt)
        frontier = fresh
    return False


def check_grouping(s: StratumSignature, grp: GroupingSpec) -> bool:
    """Whether the two groups balance and collide to a valid signature."""
    indices = grp.left + grp.right
    if any(i < 0 or i >= s.n for i in indices):
        raise IndexOutOfRange("grouping index out of range for %r" % (s,))
    if len(set(indices)) != len(indices):
        raise IndexOutOfRange("grouping indices must be disjoint")
    left_sum = sum(s.orders[i] for i in grp.left)
    right_sum = sum(s.orders[i] for i in grp.right)
    if left_sum != right_sum:
        return False
    drop = set(indices)
    orders = [k for i, k in enumerate(s.orders) if i not in drop]
    orders.extend((left_sum, right_sum))
    try:
        StratumSignature(s.genus, tuple(orders))
    except InvalidSignature:
        return False
    return True
