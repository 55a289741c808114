"""The integral quandle ring Z[Q] and powers of its augmentation ideal.

Elements of the augmentation ideal are written in the basis
``e_i = a_i - a_0`` (i = 1..n-1), so the ideal itself is Z^(n-1) and each
power is a sublattice of it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .lattice import Lattice, QuotientReport, full_lattice, lattice_from_generators, quotient_invariants
from .quandle import IndexOutOfRange, Quandle


class RingError(ValueError):
    pass


class QuandleMismatch(RingError):
    pass


class NotAugmentationZero(RingError):
    pass


class InvalidK(RingError):
    pass


class Mode(str, Enum):
    RIGHT = "right"
    TWO_SIDED = "two_sided"

    @classmethod
    def parse(cls, value) -> "Mode":
        if isinstance(value, cls):
            return value
        return cls(str(value).replace("-", "_"))


@dataclass(frozen=True)
class RingElement:
    quandle: Quandle
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.quandle.order:
            raise RingError(f"{len(self.coeffs)} coefficients for a quandle of order {self.quandle.order}")

    @classmethod
    def basis(cls, q: Quandle, i: int) -> "RingElement":
        if not 0 <= i < q.order:
            raise IndexOutOfRange(f"element index {i} outside 0..{q.order - 1}")
        return cls(q, tuple(int(k == i) for k in range(q.order)))

    @classmethod
    def zero(cls, q: Quandle) -> "RingElement":
        return cls(q, (0,) * q.order)

    def _same(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        if other.quandle is not self.quandle and other.quandle.cayley != self.quandle.cayley:
            raise QuandleMismatch("ring elements over different quandles")
        return other

    def __add__(self, other):
        if self._same(other) is NotImplemented:
            return NotImplemented
        return RingElement(self.quandle, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if self._same(other) is NotImplemented:
            return NotImplemented
        return RingElement(self.quandle, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return RingElement(self.quandle, tuple(-a for a in self.coeffs))

    def __rmul__(self, scalar: int):
        if not isinstance(scalar, int):
            return NotImplemented
        return RingElement(self.quandle, tuple(scalar * a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        return multiply(self, other)


def multiply(x: RingElement, y: RingElement) -> RingElement:
    """Bilinear extension of the quandle operation."""
    x._same(y)
    q = x.quandle
    out = [0] * q.order
    for i, xi in enumerate(x.coeffs):
        if not xi:
            continue
        row = q.cayley[i]
        for j, yj in enumerate(y.coeffs):
            if yj:
                out[row[j]] += xi * yj
    return RingElement(q, tuple(out))


def augmentation(x: RingElement) -> int:
    return sum(x.coeffs)


@dataclass(frozen=True)
class EVector:
    """Coordinates on ``e_1..e_{n-1}``; ``coords[0]`` is the e_1 coefficient."""

    quandle: Quandle
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.quandle.order - 1:
            raise RingError(f"{len(self.coords)} e-coordinates for a quandle of order {self.quandle.order}")

    def __str__(self):
        return format_evector(self.coords)


def to_ebasis(x: RingElement) -> EVector:
    if augmentation(x):
        raise NotAugmentationZero(f"augmentation is {augmentation(x)}, not 0")
    return EVector(x.quandle, x.coeffs[1:])


def from_ebasis(v: EVector) -> RingElement:
    return RingElement(v.quandle, (-sum(v.coords),) + tuple(v.coords))


def e(q: Quandle, i: int) -> RingElement:
    """The ring element ``a_i - a_0``."""
    if not 1 <= i < q.order:
        raise IndexOutOfRange(f"e-index {i} outside 1..{q.order - 1}")
    return RingElement.basis(q, i) - RingElement.basis(q, 0)


def ebasis_product(q: Quandle, i: int, j: int) -> EVector:
    """``e_i . e_j`` in e-coordinates."""
    return to_ebasis(multiply(e(q, i), e(q, j)))


def ebasis_table(q: Quandle) -> list[list[tuple[int, ...]]]:
    """``table[i-1][j-1]`` holds the coordinates of ``e_i . e_j``."""
    n = q.order
    return [[ebasis_product(q, i, j).coords for j in range(1, n)] for i in range(1, n)]


def _products(q: Quandle, coords: Sequence[int], mode: Mode):
    u = from_ebasis(EVector(q, tuple(coords)))
    for j in range(1, q.order):
        ej = e(q, j)
        yield to_ebasis(multiply(u, ej)).coords
        if mode is Mode.TWO_SIDED:
            yield to_ebasis(multiply(ej, u)).coords


def next_power(q: Quandle, prev: Lattice, mode=Mode.RIGHT) -> Lattice:
    """The lattice spanned by products of ``prev``'s basis with every e_j."""
    mode = Mode.parse(mode)
    gens = [g for u in prev.basis for g in _products(q, u, mode)]
    return lattice_from_generators(q.order - 1, gens)


def delta_tower(q: Quandle, k_max: int, mode=Mode.RIGHT) -> list[Lattice]:
    """``[Delta^1, ..., Delta^k_max]`` built incrementally."""
    if k_max < 1:
        raise InvalidK(f"k must be >= 1, got {k_max}")
    mode = Mode.parse(mode)
    tower = [full_lattice(q.order - 1)]
    while len(tower) < k_max:
        tower.append(next_power(q, tower[-1], mode))
    return tower


def delta_power(q: Quandle, k: int, mode=Mode.RIGHT) -> Lattice:
    return delta_tower(q, k, mode)[-1]


def delta_quotient(q: Quandle, k: int, mode=Mode.RIGHT) -> QuotientReport:
    """Structure of ``Delta^k / Delta^(k+1)``."""
    tower = delta_tower(q, k + 1, mode)
    return quotient_invariants(tower[k - 1], tower[k])


# --- text form of e-vectors ----------------------------------------------

def format_evector(coords: Sequence[int], symbol: str = "e") -> str:
    """``(1, -1, 0, 0, 0, 0, -1)`` -> ``"e1 - e2 - e7"``."""
    terms = []
    for idx, c in enumerate(coords, start=1):
        if not c:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else "+"
        terms.append((sign, f"{mag}{symbol}{idx}"))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, t in terms[1:]:
        out += f" {sign} {t}"
    return out


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*([a-z])_?(\d+)")


def parse_evector(text: str, dim: int, symbol: str = "e") -> tuple[int, ...]:
    """Inverse of :func:`format_evector`; accepts ``e_1`` or ``e1`` spellings."""
    coords = [0] * dim
    s = text.replace(" ", "").replace("−", "-")
    if s == "0":
        return tuple(coords)
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.group(3) != symbol:
            raise ValueError(f"cannot parse {text!r} at position {pos}")
        sign = -1 if m.group(1) == "-" else 1
        mag = int(m.group(2)) if m.group(2) else 1
        idx = int(m.group(4))
        if not 1 <= idx <= dim:
            raise ValueError(f"index {idx} out of range in {text!r}")
        coords[idx - 1] += sign * mag
        pos = m.end()
    return tuple(coords)
