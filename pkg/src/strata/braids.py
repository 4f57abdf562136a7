"""Braid words on weighted marked surfaces and their homology shadow.

A word is a finite sequence of generator letters over a marked surface:
``rho(i, r)`` moves point i around the r-th homology direction, ``sigma``
exchanges two points of equal weight, ``kappa`` loops one point around a
higher-indexed one, and ``puncture_loop`` circles an unweighted puncture.
The module computes the two tractable quotients of a word — its permutation
image and its weighted homology image — certifies the standard kernel factor
shapes, and factors kernel words into certified pieces by peeling points off
the surface one at a time.

Word equality in the full surface braid group is out of scope: factorization
output is asserted in the (permutation, homology) quotient, with each
rewriting step an identity of the underlying group.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .criteria import a_min
from .errors import (
    IndexOutOfRange,
    InvalidLetter,
    InvalidSurface,
    NoOtherWeights,
    NotInKernel,
    PreconditionUnmet,
)

RHO = "rho"
SIGMA = "sigma"
KAPPA = "kappa"
PUNCTURE = "kappa_puncture"

TRANSPOSITION = "transposition"
SQUARE_TRANSPOSITION = "square_transposition"
NULL_RHO = "null_rho"
I_COMMUTATOR = "i_commutator"
UNCERTIFIED = "uncertified"

# JSON key used for the second index of each letter kind
_SECOND_KEY = {RHO: "r", SIGMA: "j", KAPPA: "j", PUNCTURE: "l"}


@dataclass(frozen=True)
class MarkedSurface:
    """Genus-g surface carrying weighted marked points and extra punctures.

    ``stratum_mode`` additionally pins the weights to a partition of 4g - 4,
    which the factorization algorithm requires.
    """

    genus: int
    weights: tuple[int, ...]
    punctures: int = 0
    stratum_mode: bool = False

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        if self.genus < 0:
            raise InvalidSurface("genus must be non-negative")
        if self.punctures < 0:
            raise InvalidSurface("puncture count must be non-negative")
        if any(w == 0 or w < -1 for w in self.weights):
            raise InvalidSurface("weights must be -1 or positive")
        if self.stratum_mode and sum(self.weights) != 4 * self.genus - 4:
            raise InvalidSurface(
                "stratum mode requires weights summing to %d, got %d"
                % (4 * self.genus - 4, sum(self.weights))
            )

    @property
    def n(self) -> int:
        return len(self.weights)

    def to_json_dict(self) -> dict:
        return {
            "genus": self.genus,
            "weights": list(self.weights),
            "punctures": self.punctures,
            "stratum_mode": self.stratum_mode,
        }

    @staticmethod
    def from_json_dict(data: dict) -> "MarkedSurface":
        return MarkedSurface(
            data["genus"],
            tuple(data["weights"]),
            data.get("punctures", 0),
            data.get("stratum_mode", False),
        )


@dataclass(frozen=True)
class Letter:
    """One generator letter.  ``second`` is the homology direction for rho
    letters, the partner point for sigma/kappa, and the puncture index for
    puncture loops."""

    kind: str
    i: int
    second: int
    exp: int = 1

    def inverse(self) -> "Letter":
        return Letter(self.kind, self.i, self.second, -self.exp)

    def same_core(self, other: "Letter") -> bool:
        return (
            self.kind == other.kind
            and self.i == other.i
            and self.second == other.second
        )

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "i": self.i,
            _SECOND_KEY[self.kind]: self.second,
            "exp": self.exp,
        }

    @staticmethod
    def from_json_dict(data: dict) -> "Letter":
        kind = data["kind"]
        if kind not in _SECOND_KEY:
            raise InvalidLetter("unknown letter kind %r" % kind)
        return Letter(kind, data["i"], data[_SECOND_KEY[kind]], data.get("exp", 1))


def rho(i: int, r: int, exp: int = 1) -> Letter:
    return Letter(RHO, i, r, exp)


def sigma(i: int, j: int, exp: int = 1) -> Letter:
    return Letter(SIGMA, i, j, exp)


def kappa(i: int, j: int, exp: int = 1) -> Letter:
    return Letter(KAPPA, i, j, exp)


def puncture_loop(i: int, l: int, exp: int = 1) -> Letter:
    return Letter(PUNCTURE, i, l, exp)


def _validate_letter(lt: Letter, surf: MarkedSurface) -> None:
    n, g, m = surf.n, surf.genus, surf.punctures
    if lt.exp not in (1, -1):
        raise InvalidLetter("letter exponent must be +-1, got %r" % (lt.exp,))
    if not 1 <= lt.i <= n:
        raise InvalidLetter("point index %d out of range 1..%d" % (lt.i, n))
    if lt.kind == RHO:
        if not 1 <= lt.second <= 2 * g:
            raise InvalidLetter(
                "homology direction %d out of range 1..%d" % (lt.second, 2 * g)
            )
    elif lt.kind == SIGMA:
        if not lt.i < lt.second <= n:
            raise InvalidLetter("sigma needs i < j <= n, got (%d, %d)" % (lt.i, lt.second))
        if surf.weights[lt.i - 1] != surf.weights[lt.second - 1]:
            raise InvalidLetter(
                "sigma exchanges equal weights only: %d vs %d"
                % (surf.weights[lt.i - 1], surf.weights[lt.second - 1])
            )
    elif lt.kind == KAPPA:
        if not lt.i < lt.second <= n:
            raise InvalidLetter("kappa needs i < j <= n, got (%d, %d)" % (lt.i, lt.second))
    elif lt.kind == PUNCTURE:
        if not 1 <= lt.second <= m:
            raise InvalidLetter("puncture index %d out of range 1..%d" % (lt.second, m))
    else:
        raise InvalidLetter("unknown letter kind %r" % (lt.kind,))


@dataclass(frozen=True)
class BraidWord:
    surface: MarkedSurface
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for lt in self.letters:
            _validate_letter(lt, self.surface)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.surface != other.surface:
            raise InvalidSurface("cannot concatenate words over different surfaces")
        return BraidWord(self.surface, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(
            self.surface, tuple(lt.inverse() for lt in reversed(self.letters))
        )

    def to_json_dict(self) -> dict:
        return {
            "surface": self.surface.to_json_dict(),
            "letters": [lt.to_json_dict() for lt in self.letters],
        }

    @staticmethod
    def from_json_dict(data: dict) -> "BraidWord":
        surf = MarkedSurface.from_json_dict(data["surface"])
        return BraidWord(
            surf, tuple(Letter.from_json_dict(d) for d in data.get("letters", []))
        )


def _reduce_letters(letters: Sequence[Letter]) -> list[Letter]:
    stack: list[Letter] = []
    for lt in letters:
        if stack and stack[-1].same_core(lt) and stack[-1].exp == -lt.exp:
            stack.pop()
        else:
            stack.append(lt)
    return stack


def free_reduce(w: BraidWord) -> BraidWord:
    """Cancel adjacent inverse pairs until none remain."""
    return BraidWord(w.surface, tuple(_reduce_letters(w.letters)))


def permutation_image(w: BraidWord) -> tuple[int, ...]:
    """Image in the symmetric group; entry k-1 is where point k ends up.

    Letters act left to right; only sigma letters move points.
    """
    perm = list(range(1, w.surface.n + 1))
    for lt in w.letters:
        if lt.kind != SIGMA:
            continue
        a, b = lt.i, lt.second
        perm = [b if v == a else a if v == b else v for v in perm]
    return tuple(perm)


def abel_jacobi(w: BraidWord) -> tuple[int, ...]:
    """Weighted homology image in Z^{2g}.

    Each rho letter adds its point's weight (signed by the exponent) to the
    coordinate of its direction; all other letters bound disks and vanish.
    """
    coords = [0] * (2 * w.surface.genus)
    weights = w.surface.weights
    for lt in w.letters:
        if lt.kind == RHO:
            coords[lt.second - 1] += lt.exp * weights[lt.i - 1]
    return tuple(coords)


def in_kernel(w: BraidWord) -> bool:
    return not any(abel_jacobi(w))


def certify_null_rho(w: BraidWord) -> tuple[bool, int | None]:
    """Whether every letter circles one fixed direction with balanced weight.

    Returns (True, r) on success; the empty word is vacuously balanced for
    any direction and reports r = None.
    """
    if not w.letters:
        return True, None
    directions = set()
    total = 0
    for lt in w.letters:
        if lt.kind != RHO:
            return False, None
        directions.add(lt.second)
        total += lt.exp * w.surface.weights[lt.i - 1]
    if len(directions) != 1 or total != 0:
        return False, None
    return True, directions.pop()


def certify_i_commutator(w: BraidWord, i: int) -> bool:
    """Whether the word moves only point i along a homologically trivial path
    in the surface punctured at points i+1..n.

    The fundamental group of that punctured surface abelianizes with one
    relation identifying the sum of all puncture loops with a product of
    commutators, so the path is a commutator exactly when every direction
    count vanishes and the puncture-loop counts share one common value.
    """
    n = w.surface.n
    if not 1 <= i <= n:
        raise IndexOutOfRange("point index %d out of range 1..%d" % (i, n))
    rho_sums = [0] * (2 * w.surface.genus)
    kappa_sums = {l: 0 for l in range(i + 1, n + 1)}
    for lt in w.letters:
        if lt.kind == RHO and lt.i == i:
            rho_sums[lt.second - 1] += lt.exp
        elif lt.kind == KAPPA and lt.i == i:
            kappa_sums[lt.second] += lt.exp
        else:
            return False
    if any(rho_sums):
        return False
    return len(set(kappa_sums.values())) <= 1


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    # returns (g, x, y) with g = ax + by >= 0
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def minimal_d(weights: Sequence[int], l: int) -> tuple[int, tuple[int, ...]]:
    """Smallest d > 0 such that d copies of weight l balance the others.

    Returns (d, coeffs) where coeffs[l] = d and sum(coeffs[i] * weights[i])
    is 0: the witness of the integer relation.  d equals G / gcd(G, w_l)
    with G the gcd of the remaining weights.
    """
    weights = tuple(weights)
    if not 0 <= l < len(weights):
        raise IndexOutOfRange("weight index %d out of range" % l)
    if len(weights) < 2:
        raise NoOtherWeights("need at least one other weight to balance against")
    others = [(idx, w) for idx, w in enumerate(weights) if idx != l]
    g = 0
    witness = [0] * len(weights)
    for idx, w in others:
        g, x, y = _egcd(g, w)
        for k in range(len(witness)):
            witness[k] *= x
        witness[idx] = y
    target = weights[l]
    d = g // _egcd(g, target)[0]
    scale = -(d * target) // g
    coeffs = [scale * c for c in witness]
    coeffs[l] = d
    assert sum(c * w for c, w in zip(coeffs, weights)) == 0
    return d, tuple(coeffs)


def factor_by_permutation(z: BraidWord) -> tuple[BraidWord, BraidWord]:
    """Split z = y * x with y a product of exchanges realizing z's permutation
    and x the permutation-trivial remainder y^-1 z, freely reduced."""
    perm = permutation_image(z)
    letters: list[Letter] = []
    seen: set[int] = set()
    for start in range(1, z.surface.n + 1):
        if start in seen or perm[start - 1] == start:
            seen.add(start)
            continue
        cycle = [start]
        cur = perm[start - 1]
        while cur != start:
            cycle.append(cur)
            cur = perm[cur - 1]
        seen.update(cycle)
        anchor = cycle[0]
        for other in cycle[1:]:
            letters.append(sigma(min(anchor, other), max(anchor, other)))
    y = BraidWord(z.surface, tuple(letters))
    assert permutation_image(y) == perm
    x = free_reduce(y.inverse() * z)
    return y, x


@dataclass(frozen=True)
class FactorCertificate:
    """A factor together with the shape it was certified as.

    ``param`` is the direction r for null_rho factors and the moving point i
    for i_commutator factors.
    """

    tag: str
    word: BraidWord
    param: int | None = None

    def verify(self) -> bool:
        if self.tag == TRANSPOSITION:
            return len(self.word) == 1 and self.word.letters[0].kind == SIGMA
        if self.tag == SQUARE_TRANSPOSITION:
            return len(self.word) == 1 and self.word.letters[0].kind in (KAPPA, PUNCTURE)
        if self.tag == NULL_RHO:
            ok, r = certify_null_rho(self.word)
            return ok and (r is None or r == self.param)
        if self.tag == I_COMMUTATOR:
            return self.param is not None and certify_i_commutator(self.word, self.param)
        return False

    def to_json_dict(self) -> dict:
        return {
            "tag": self.tag,
            "param": self.param,
            "letters": [lt.to_json_dict() for lt in self.word.letters],
        }


def _weight_runs(weights: tuple[int, ...]) -> list[tuple[int, int]]:
    runs: list[tuple[int, int]] = []
    for w in weights:
        if runs and runs[-1][0] == w:
            runs[-1] = (w, runs[-1][1] + 1)
        else:
            runs.append((w, 1))
    return runs


def _peel_stage(
    surf: MarkedSurface, c: int, moving: list[Letter]
) -> tuple[list[FactorCertificate], list[Letter]]:
    """Certify the letters moving point c and return the balancing debt.

    The moving subword equals, in the free group on its letters, a commutator
    (the sorting discrepancy) followed by one run per direction and the
    puncture loops in their original order.  Each run is completed to a
    balanced block by borrowing lower points, and the inverse of what was
    borrowed is handed back to the remaining word.
    """
    rhos = [lt for lt in moving if lt.kind == RHO]
    kappas = [lt for lt in moving if lt.kind == KAPPA]
    sorted_word = sorted(rhos, key=lambda lt: lt.second) + kappas
    certs: list[FactorCertificate] = []
    h_inv = _reduce_letters(list(moving) + [lt.inverse() for lt in reversed(sorted_word)])
    if h_inv:
        certs.append(FactorCertificate(I_COMMUTATOR, BraidWord(surf, tuple(h_inv)), c))
    d, coeffs = minimal_d(surf.weights[:c], c - 1)
    balance_debt: list[Letter] = []
    for r in range(1, 2 * surf.genus + 1):
        e = sum(lt.exp for lt in rhos if lt.second == r)
        if e == 0:
            continue
        # kernel membership of the whole word forces d | e
        assert e % d == 0, "net winding must be a multiple of the balance step"
        q = e // d
        block = [rho(c, r, 1 if e > 0 else -1)] * abs(e)
        for idx in range(c - 1):
            cnt = q * coeffs[idx]
            if cnt == 0:
                continue
            sign = 1 if cnt > 0 else -1
            block.extend([rho(idx + 1, r, sign)] * abs(cnt))
            balance_debt.extend([rho(idx + 1, r, -sign)] * abs(cnt))
        certs.append(FactorCertificate(NULL_RHO, BraidWord(surf, tuple(block)), r))
    for lt in kappas:
        certs.append(FactorCertificate(SQUARE_TRANSPOSITION, BraidWord(surf, (lt,))))
    return certs, balance_debt


def factorize_kernel_word(z: BraidWord) -> list[FactorCertificate]:
    """Write a kernel word as certified factors, peeling one point per stage.

    The concatenation of the returned factors matches the input in the
    (permutation, homology) quotient, and every factor carries a verified
    certificate.  Exchange letters are emitted in their original relative
    order, which pins the permutation image; all other factor shapes are
    permutation-trivial.  Requires a stratum-mode surface without ambient
    punctures whose leading weight class meets the size bound a_min(g, b).
    """
    surf = z.surface
    if surf.punctures:
        raise PreconditionUnmet("factorization needs a surface without punctures")
    if not surf.stratum_mode:
        raise PreconditionUnmet("factorization needs a stratum-mode surface")
    if surf.genus < 2:
        raise PreconditionUnmet("factorization needs genus at least 2")
    runs = _weight_runs(surf.weights)
    if len({w for w, _ in runs}) != len(runs):
        raise PreconditionUnmet("weight classes must be contiguous")
    a = runs[0][1]
    b = surf.n - a
    need = a_min(surf.genus, b)
    if a < need:
        raise PreconditionUnmet(
            "leading class has %d points, bound requires %d" % (a, need)
        )
    if not in_kernel(z):
        raise NotInKernel("word has nonzero homology image %r" % (abel_jacobi(z),))

    y, x = factor_by_permutation(z)
    certs = [
        FactorCertificate(TRANSPOSITION, BraidWord(surf, (lt,))) for lt in y.letters
    ]
    current: list[Letter] = []
    for lt in x.letters:
        if lt.kind == SIGMA:
            # permutation-exact: these keep their relative order and multiply
            # to the identity, everything else emitted is permutation-trivial
            certs.append(FactorCertificate(TRANSPOSITION, BraidWord(surf, (lt,))))
        else:
            current.append(lt)

    for c in range(surf.n, a, -1):
        moving = [lt for lt in current if lt.i == c and lt.kind in (RHO, KAPPA)]
        staying = [lt for lt in current if not (lt.i == c and lt.kind in (RHO, KAPPA))]
        if moving:
            stage_certs, balance_debt = _peel_stage(surf, c, moving)
            certs.extend(stage_certs)
            current = balance_debt + staying
        else:
            current = staying

    for r in range(1, 2 * surf.genus + 1):
        group = [lt for lt in current if lt.kind == RHO and lt.second == r]
        if group:
            certs.append(FactorCertificate(NULL_RHO, BraidWord(surf, tuple(group)), r))
    for lt in current:
        if lt.kind == KAPPA:
            certs.append(FactorCertificate(SQUARE_TRANSPOSITION, BraidWord(surf, (lt,))))

    for cert in certs:
        assert cert.verify(), "internal error: emitted an uncertifiable factor"
    return certs


def concatenate_factors(
    surf: MarkedSurface, certs: Sequence[FactorCertificate]
) -> BraidWord:
    word = BraidWord(surf)
    for cert in certs:
        word = word * cert.word
    return word
