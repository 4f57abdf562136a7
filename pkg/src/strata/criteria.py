"""Integer bounds and hypothesis predicates for kernel generation.

All bounds are evaluated in exact integer arithmetic; the ceilinged square
root never goes through floating point, since an off-by-one here silently
changes which strata the generation results cover.
"""

from __future__ import annotations

import math

from .errors import OutOfRange
from .signatures import StratumSignature


def _ceil_sqrt(x: int) -> int:
    s = math.isqrt(x)
    return s if s * s == x else s + 1


def point_bound(g: int, extra: int) -> int:
    """Least n with n(n-3)/2 >= 2g + extra - 2.

    Equivalently ceil((3 + sqrt(9 + 8(2g + extra - 2))) / 2): the fewest
    vertices a loopless simple graph needs to reach genus g with ``extra``
    faces.
    """
    if g < 2:
        raise OutOfRange("point bound needs genus >= 2, got %d" % g)
    if extra < 0:
        raise OutOfRange("face/class count must be non-negative")
    s = _ceil_sqrt(9 + 8 * (2 * g + extra - 2))
    return (s + 4) // 2


def a_min(g: int, b: int) -> int:
    """Size the leading weight class must reach, given b remaining points.

    For b = 0 the bound is evaluated with one face, the minimum a 2-cell
    decomposition can have.
    """
    if b < 0:
        raise OutOfRange("b must be non-negative")
    return point_bound(g, max(b, 1))


def gen2_cascade_ok(g: int, b_list: list[int]) -> bool:
    """Whether every secondary class size meets its cascaded bound."""
    for i, b_i in enumerate(b_list):
        tail = sum(b_list[i + 1 :])
        if b_i < point_bound(g, tail):
            return False
    return True


def _split_orders(s: StratumSignature) -> tuple[int, list[int]]:
    ones = s.orders.count(1)
    rest = [k for k in s.orders if k != 1]
    return ones, rest


def _has_even_pair(rest: list[int]) -> tuple[bool, str]:
    if not rest:
        return False, "no higher-order zeros to pair"
    if any(k < 0 or k % 2 != 0 for k in rest):
        return False, "higher orders must all be positive and even"
    if len(rest) == len(set(rest)):
        return False, "no two higher orders are equal"
    return True, "even pair present"


def hy2_verdict(s: StratumSignature) -> tuple[bool, str]:
    ones, rest = _split_orders(s)
    if ones % 2 != 0:
        return False, "count of simple zeros is odd"
    if ones < s.genus + 5:
        return False, "need at least g+5 simple zeros, have %d" % ones
    ok, why = _has_even_pair(rest)
    return ok, why


def main_theorem_verdict(s: StratumSignature) -> tuple[bool, str]:
    ones, rest = _split_orders(s)
    ok, why = _has_even_pair(rest)
    if not ok:
        return False, why
    threshold = max([s.genus + 5] + rest)
    if ones <= threshold:
        return False, "need more than %d simple zeros, have %d" % (threshold, ones)
    return True, "all clauses hold"


def null_prop_verdict(s: StratumSignature) -> tuple[bool, str]:
    if s.genus <= 2:
        return False, "needs genus greater than 2"
    ones, rest = _split_orders(s)
    ok, why = _has_even_pair(rest)
    if not ok:
        return False, why
    threshold = max([s.genus + 4] + rest)
    if ones <= threshold:
        return False, "need more than %d simple zeros, have %d" % (threshold, ones)
    return True, "all clauses hold"


def satisfies_hy2(s: StratumSignature) -> bool:
    return hy2_verdict(s)[0]


def satisfies_main_theorem(s: StratumSignature) -> bool:
    return main_theorem_verdict(s)[0]


def satisfies_null_prop(s: StratumSignature) -> bool:
    return null_prop_verdict(s)[0]
