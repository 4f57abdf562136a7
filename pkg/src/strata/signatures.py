"""Stratum signatures and their intrinsic classification data.

A signature is a genus together with the multiset of zero and pole orders of
a half-translation structure: every order is -1 (a simple pole) or a positive
integer, and the orders sum to 4g - 4.  On top of the raw data this module
computes the complex dimension, recognises the four exceptional empty
signatures, counts connected components, and performs the branched
double-cover construction that carries genus-0 signatures to hyperelliptic
ones.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import EmptyStratum, InvalidSignature, InvalidSpec

# The four exceptional signatures whose strata contain no half-translation
# structure at all.  Orders stored descending, matching the canonical form.
EMPTY_SIGNATURES = frozenset(
    {
        (1, ()),
        (1, (1, -1)),
        (2, (3, 1)),
        (2, (4,)),
    }
)

REASON_EMPTY = "MSV-exception"
REASON_FAMILY = ("Lanneau-family-1", "Lanneau-family-2", "Lanneau-family-3")
REASON_G2 = "Lanneau-g2-special"
REASON_LOW_GENUS = "genus-le-1"
REASON_C1 = "c1-theorem"
REASON_DEFAULT = "one-component-default"

_G2_TWO_COMPONENT = frozenset({(3, 3, -1, -1), (6, -1, -1)})


@dataclass(frozen=True)
class StratumSignature:
    """Genus plus the multiset of orders, stored descending."""

    genus: int
    orders: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(sorted(self.orders, reverse=True)))
        failed = []
        if not isinstance(self.genus, int) or self.genus < 0:
            failed.append("genus")
        if any(not isinstance(k, int) or k == 0 or k < -1 for k in self.orders):
            failed.append("entries")
        if "genus" not in failed and sum(self.orders) != 4 * self.genus - 4:
            failed.append("sum")
        if failed:
            raise InvalidSignature(
                "invalid signature (genus=%r, orders=%r): failed %s"
                % (self.genus, tuple(self.orders), ", ".join(failed)),
                failed=tuple(failed),
            )

    @property
    def n(self) -> int:
        return len(self.orders)

    def to_json_dict(self) -> dict:
        return {"genus": self.genus, "orders": list(self.orders)}

    @staticmethod
    def from_json_dict(data: dict) -> "StratumSignature":
        if not isinstance(data, dict) or "genus" not in data or "orders" not in data:
            raise InvalidSignature(
                "signature JSON needs 'genus' and 'orders'", failed=("fields",)
            )
        return StratumSignature(data["genus"], tuple(data["orders"]))

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "StratumSignature":
        return StratumSignature.from_json_dict(json.loads(text))


@dataclass(frozen=True)
class ConnectivityReport:
    component_count: int
    is_empty: bool
    reason: str


@dataclass(frozen=True)
class DoubleCoverSpec:
    """Branched double cover data: a genus-0 base and the ramified indices."""

    base: StratumSignature
    ramified_indices: frozenset[int]
    target_genus: int

    def __post_init__(self):
        object.__setattr__(self, "ramified_indices", frozenset(self.ramified_indices))


def is_empty(s: StratumSignature) -> bool:
    return (s.genus, s.orders) in EMPTY_SIGNATURES


def dimension(s: StratumSignature) -> int:
    """Complex dimension 2g - 2 + n of a non-empty stratum."""
    if is_empty(s):
        raise EmptyStratum("stratum %r is empty" % (s,))
    return 2 * s.genus - 2 + s.n


def _two_component_reason(s: StratumSignature) -> str | None:
    g = s.genus
    if g == 2:
        return REASON_G2 if s.orders in _G2_TWO_COMPONENT else None
    if g < 3:
        return None
    key = s.orders
    # family 1: one zero of order 4(g-k)-6 and one of order 4k+2
    for k in range(0, g - 1):  # g - k >= 2
        if key == tuple(sorted((4 * (g - k) - 6, 4 * k + 2), reverse=True)):
            return REASON_FAMILY[0]
    # family 2: a pair of zeros of order 2(g-k)-3 and one of order 4k+2
    for k in range(0, g):  # g - k >= 1
        cand = tuple(sorted((2 * (g - k) - 3, 2 * (g - k) - 3, 4 * k + 2), reverse=True))
        if key == cand:
            return REASON_FAMILY[1]
    # family 3: pairs of orders 2(g-k)-3 and 2k+1
    for k in range(0, g - 1):  # g - k >= 2
        a, b = 2 * (g - k) - 3, 2 * k + 1
        if key == tuple(sorted((a, a, b, b), reverse=True)):
            return REASON_FAMILY[2]
    return None


def classify_connectivity(s: StratumSignature) -> ConnectivityReport:
    """Total classification, reporting empty signatures instead of raising."""
    if is_empty(s):
        return ConnectivityReport(0, True, REASON_EMPTY)
    reason = _two_component_reason(s)
    if reason is not None:
        return ConnectivityReport(2, False, reason)
    if s.genus <= 1:
        return ConnectivityReport(1, False, REASON_LOW_GENUS)
    if s.orders.count(1) >= s.genus:
        return ConnectivityReport(1, False, REASON_C1)
    return ConnectivityReport(1, False, REASON_DEFAULT)


def connectivity(s: StratumSignature) -> ConnectivityReport:
    if is_empty(s):
        raise EmptyStratum("stratum %r is empty" % (s,))
    return classify_connectivity(s)


def double_cover(spec: DoubleCoverSpec) -> tuple[StratumSignature, bool]:
    """Orders of the double cover branched over the chosen points.

    A ramified point of order k lifts to a single point of order 2k + 2
    (dropped when that is 0, i.e. a ramified simple pole smooths out); an
    unramified point lifts to two copies of itself.  The second return value
    is True when every order upstairs is even, in which case the cover could
    be the square of an abelian differential rather than a genuine
    half-translation structure.
    """
    base, g = spec.base, spec.target_genus
    if base.genus != 0:
        raise InvalidSpec("double cover base must have genus 0, got %d" % base.genus)
    if sum(base.orders) != -4:
        raise InvalidSpec("double cover base orders must sum to -4")
    idx = spec.ramified_indices
    if any(i < 0 or i >= base.n for i in idx):
        raise InvalidSpec("ramified index out of range")
    if len(idx) != 2 * g + 2:
        raise InvalidSpec(
            "need exactly %d ramified indices for target genus %d, got %d"
            % (2 * g + 2, g, len(idx))
        )
    orders: list[int] = []
    for i, k in enumerate(base.orders):
        if i in idx:
            lifted = 2 * k + 2
            if lifted != 0:
                orders.append(lifted)
        else:
            orders.extend((k, k))
    cover = StratumSignature(g, tuple(orders))
    maybe_abelian = all(k % 2 == 0 for k in cover.orders)
    return cover, maybe_abelian
