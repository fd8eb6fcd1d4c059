"""Points of the hypercube Q_n = {+1, -1}^n and sets of them.

A point is stored as a Python int holding one bit per coordinate, with
bit = 1 meaning sign +1.  Coordinate 0 is the most significant bit, so for
a fixed dimension the lexicographic order on sign strings (with '+' before
'-') is the *descending* order of the packed integers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Sequence

MAX_DIM = 128
CUBE_ENUM_LIMIT = 25
LEVEL_ENUM_LIMIT = 10**7


class GuardExceeded(RuntimeError):
    """Raised when an input would exceed one of the desk-scale guards."""


class DimensionMismatch(ValueError):
    pass


def _check_dim(n: int) -> None:
    if not 1 <= n <= MAX_DIM:
        raise GuardExceeded(f"ambient dimension {n} outside 1..{MAX_DIM} (MAX_DIM guard)")


@dataclass(frozen=True, slots=True)
class CubePoint:
    n: int
    bits: int

    def __post_init__(self) -> None:
        _check_dim(self.n)
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits {self.bits:#x} do not fit in {self.n} coordinates")

    @classmethod
    def from_signs(cls, signs: Sequence[int]) -> CubePoint:
        bits = 0
        for s in signs:
            if s not in (1, -1):
                raise ValueError(f"sign entries must be +1 or -1, got {s!r}")
            bits = (bits << 1) | (s == 1)
        return cls(len(signs), bits)

    @classmethod
    def from_string(cls, text: str, *, binary: bool = False) -> CubePoint:
        """Parse '++-+' (or '1101' when ``binary``)."""
        plus, minus = ("1", "0") if binary else ("+", "-")
        text = text.strip()
        if not text or any(c not in (plus, minus) for c in text):
            raise ValueError(f"cannot parse point {text!r}")
        return cls(len(text), int(text.replace(plus, "1").replace(minus, "0"), 2))

    @classmethod
    def ones(cls, n: int) -> CubePoint:
        return cls(n, (1 << n) - 1)

    @classmethod
    def minus_ones(cls, n: int) -> CubePoint:
        return cls(n, 0)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(1 if (self.bits >> (self.n - 1 - i)) & 1 else -1 for i in range(self.n))

    def to_string(self, *, binary: bool = False) -> str:
        s = format(self.bits, f"0{self.n}b")
        return s if binary else s.replace("1", "+").replace("0", "-")

    def __str__(self) -> str:
        return self.to_string()

    def __neg__(self) -> CubePoint:
        return negate(self)


def hamming_distance(x: CubePoint, y: CubePoint) -> int:
    if x.n != y.n:
        raise DimensionMismatch(f"dimension mismatch: {x.n} vs {y.n}")
    return (x.bits ^ y.bits).bit_count()


def inner_product(x: CubePoint, y: CubePoint) -> int:
    return x.n - 2 * hamming_distance(x, y)


def weight(x: CubePoint) -> int:
    """Number of +1 coordinates."""
    return x.bits.bit_count()


def negate(x: CubePoint) -> CubePoint:
    return CubePoint(x.n, x.bits ^ ((1 << x.n) - 1))


def concat(x: CubePoint, y: CubePoint) -> CubePoint:
    n = x.n + y.n
    if n > MAX_DIM:
        raise GuardExceeded(f"concat dimension {n} exceeds MAX_DIM={MAX_DIM}")
    return CubePoint(n, (x.bits << y.n) | y.bits)


class PointSet:
    """Ordered, duplicate-free points sharing one ambient dimension."""

    __slots__ = ("n", "points", "_index")

    def __init__(self, points: Iterable[CubePoint], n: int | None = None):
        pts = tuple(points)
        if n is None:
            if not pts:
                raise ValueError("empty PointSet needs an explicit ambient dimension")
            n = pts[0].n
        index: dict[int, int] = {}
        for i, p in enumerate(pts):
            if p.n != n:
                raise DimensionMismatch(f"point {p} has dimension {p.n}, expected {n}")
            if p.bits in index:
                raise ValueError(f"duplicate point {p} in PointSet")
            index[p.bits] = i
        self.n = n
        self.points = pts
        self._index = index

    @classmethod
    def from_strings(cls, lines: Iterable[str], *, binary: bool = False) -> PointSet:
        return cls(CubePoint.from_string(s, binary=binary) for s in lines)

    @classmethod
    def from_bits(cls, n: int, bits: Iterable[int]) -> PointSet:
        return cls((CubePoint(n, b) for b in bits), n)

    @property
    def bits(self) -> list[int]:
        return [p.bits for p in self.points]

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[CubePoint]:
        return iter(self.points)

    def __getitem__(self, i: int) -> CubePoint:
        return self.points[i]

    def __contains__(self, p: object) -> bool:
        return isinstance(p, CubePoint) and p.n == self.n and p.bits in self._index

    def contains_bits(self, b: int) -> bool:
        return b in self._index

    def index(self, p: CubePoint) -> int:
        return self._index[p.bits]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PointSet) and self.n == other.n and self.points == other.points

    def __hash__(self) -> int:
        return hash((self.n, self.points))

    def same_set(self, other: PointSet) -> bool:
        return self.n == other.n and set(self._index) == set(other._index)

    def __neg__(self) -> PointSet:
        return PointSet((negate(p) for p in self.points), self.n)

    def union(self, other: PointSet) -> PointSet:
        """Points of ``self`` followed by the new points of ``other``."""
        if other.n != self.n:
            raise DimensionMismatch(f"dimension mismatch: {self.n} vs {other.n}")
        extra = [p for p in other if p.bits not in self._index]
        return PointSet(self.points + tuple(extra), self.n)

    def to_text(self, *, binary: bool = False) -> str:
        return "".join(p.to_string(binary=binary) + "\n" for p in self.points)

    def __repr__(self) -> str:
        body = ", ".join(str(p) for p in self.points[:6])
        more = ", ..." if len(self.points) > 6 else ""
        return f"PointSet(n={self.n}, [{body}{more}], size={len(self)})"


def set_product(a: PointSet, b: PointSet) -> PointSet:
    """All concatenations (x, y), x in ``a`` (outer loop), y in ``b``."""
    n = a.n + b.n
    if n > MAX_DIM:
        raise GuardExceeded(f"product dimension {n} exceeds MAX_DIM={MAX_DIM}")
    return PointSet.from_bits(n, ((x << b.n) | y for x in a.bits for y in b.bits))


def pad(a: PointSet, suffix: CubePoint | None = None, m: int = 0) -> PointSet:
    """A x {suffix}; ``suffix`` defaults to the all-ones vector of length ``m``."""
    if suffix is None:
        if m == 0:
            return a
        suffix = CubePoint.ones(m)
    return set_product(a, PointSet([suffix]))


def iter_cube_bits(n: int) -> Iterator[int]:
    """Packed points of Q_n in lexicographic order ('+' < '-')."""
    _check_dim(n)
    return iter(range((1 << n) - 1, -1, -1))


def iter_level_bits(n: int, level: int) -> Iterator[int]:
    """Packed points of weight ``level`` in lexicographic order."""
    _check_dim(n)
    if not 0 <= level <= n:
        raise ValueError(f"level {level} outside 0..{n}")
    for plus in itertools.combinations(range(n), level):
        b = 0
        for i in plus:
            b |= 1 << (n - 1 - i)
        yield b


def enumerate_cube(n: int) -> PointSet:
    if n > CUBE_ENUM_LIMIT:
        raise GuardExceeded(f"enumerate_cube({n}) exceeds CUBE_ENUM_LIMIT={CUBE_ENUM_LIMIT}")
    return PointSet.from_bits(n, iter_cube_bits(n))


def enumerate_level(n: int, level: int) -> PointSet:
    if comb(n, level) > LEVEL_ENUM_LIMIT:
        raise GuardExceeded(
            f"level set L_{level}^{n} has {comb(n, level)} points, over LEVEL_ENUM_LIMIT={LEVEL_ENUM_LIMIT}"
        )
    return PointSet.from_bits(n, iter_level_bits(n, level))


def diameter(a: PointSet) -> int:
    if not len(a):
        raise ValueError("diameter of an empty set is undefined")
    bits = a.bits
    best = 0
    for i, x in enumerate(bits):
        for y in bits[i + 1 :]:
            d = (x ^ y).bit_count()
            if d > best:
                best = d
    return best


def hamming_ball(center: CubePoint, radius: int) -> PointSet:
    """Points within ``radius`` of ``center``, ordered by distance then lexicographically."""
    n = center.n
    out = []
    for k in range(radius + 1):
        for flips in itertools.combinations(range(n), k):
            mask = 0
            for i in flips:
                mask |= 1 << (n - 1 - i)
            out.append(center.bits ^ mask)
    return PointSet.from_bits(n, out)


@dataclass(frozen=True)
class Ambient:
    """Host space for facet sweeps: the full cube Q_n or a level set L_level^n."""

    n: int
    level: int | None = None

    def __post_init__(self) -> None:
        _check_dim(self.n)
        if self.level is not None and not 0 <= self.level <= self.n:
            raise ValueError(f"level {self.level} outside 0..{self.n}")

    @classmethod
    def cube(cls, n: int) -> Ambient:
        return cls(n)

    @classmethod
    def level_set(cls, n: int, level: int) -> Ambient:
        return cls(n, level)

    @classmethod
    def parse(cls, text: str) -> Ambient:
        """Parse 'q7' (Q_7) or 'l8,4' (points of Q_8 with four +1 entries)."""
        t = text.strip().lower()
        try:
            if t.startswith("q"):
                return cls(int(t[1:]))
            if t.startswith("l"):
                n, level = t[1:].split(",")
                return cls(int(n), int(level))
        except ValueError:
            pass
        raise ValueError(f"cannot parse ambient {text!r}; expected qN or lN,L")

    @property
    def size(self) -> int:
        return 1 << self.n if self.level is None else comb(self.n, self.level)

    def check_guard(self) -> None:
        if self.level is None:
            if self.n > CUBE_ENUM_LIMIT:
                raise GuardExceeded(f"sweep over Q_{self.n} exceeds CUBE_ENUM_LIMIT={CUBE_ENUM_LIMIT}")
        elif self.size > LEVEL_ENUM_LIMIT:
            raise GuardExceeded(f"sweep over {self} ({self.size} points) exceeds LEVEL_ENUM_LIMIT")

    def iter_bits(self) -> Iterator[int]:
        if self.level is None:
            return iter_cube_bits(self.n)
        return iter_level_bits(self.n, self.level)

    def contains(self, p: CubePoint) -> bool:
        return p.n == self.n and (self.level is None or weight(p) == self.level)

    def points(self) -> PointSet:
        return enumerate_cube(self.n) if self.level is None else enumerate_level(self.n, self.level)

    def to_json(self) -> str:
        return f"q{self.n}" if self.level is None else f"l{self.n},{self.level}"

    def __str__(self) -> str:
        return f"Q_{self.n}" if self.level is None else f"L_{self.level}^{self.n}"
