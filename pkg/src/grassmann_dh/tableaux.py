"""Partitions and standard Young tableaux counts."""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator

from .errors import CapExceededError, InputError

DEFAULT_SYT_CAP = 12


class Partition:
    """Weakly decreasing tuple of nonnegative integers.

    Trailing zeros are accepted but stripped, so ``Partition((2, 1, 0))`` and
    ``Partition((2, 1))`` compare and hash equal.  Use :meth:`padded` to get a
    fixed-length vector back.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 0:
                raise InputError(f"partition parts must be nonnegative integers: {parts!r}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise InputError(f"partition {parts!r} is not weakly decreasing")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        self.parts = parts

    @classmethod
    def parse(cls, text: str) -> "Partition":
        try:
            return cls(int(x) for x in text.split(",") if x.strip())
        except ValueError:
            raise InputError(f"cannot parse partition {text!r}") from None

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self == Partition(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition({self.parts!r})"

    def padded(self, length: int) -> tuple[int, ...]:
        if length < len(self.parts):
            raise InputError(f"{self!r} has more than {length} nonzero parts")
        return self.parts + (0,) * (length - len(self.parts))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(sum(1 for p in self.parts if p > j) for j in range(self.parts[0]))

    def hook_lengths(self) -> list[int]:
        conj = self.conjugate().parts
        return [
            (row - j - 1) + (conj[j] - i - 1) + 1
            for i, row in enumerate(self.parts)
            for j in range(row)
        ]


def partitions(size: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``size`` in reverse lexicographic order."""
    if size < 0:
        return
    limit = size if max_parts is None else max_parts
    top = size if max_part is None else max_part

    def rec(remaining, largest, length):
        if remaining == 0:
            yield ()
            return
        if length == limit:
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first, length + 1):
                yield (first,) + rest

    for parts in rec(size, top, 0):
        yield Partition(parts)


def _as_partition(shape) -> Partition:
    return shape if isinstance(shape, Partition) else Partition(shape)


def hook_count(shape) -> int:
    """Number of standard Young tableaux of ``shape`` by the hook length formula."""
    shape = _as_partition(shape)
    denom = 1
    for h in shape.hook_lengths():
        denom *= h
    count, rem = divmod(factorial(shape.size), denom)
    assert rem == 0
    return count


def syt_enumerate(shape, cap: int = DEFAULT_SYT_CAP) -> int:
    """Count standard Young tableaux by placing 1, 2, ... one box at a time.

    Independent of :func:`hook_count`; refuses shapes above ``cap`` boxes.
    """
    shape = _as_partition(shape)
    if shape.size > cap:
        raise CapExceededError(f"shape {shape.parts} has {shape.size} boxes, enumeration cap is {cap}")
    rows = shape.parts
    filled = [0] * len(rows)

    def place(remaining):
        if remaining == 0:
            return 1
        total = 0
        for i, length in enumerate(rows):
            # the next number goes at the end of row i if that cell is addable
            if filled[i] < length and (i == 0 or filled[i - 1] > filled[i]):
                filled[i] += 1
                total += place(remaining - 1)
                filled[i] -= 1
        return total

    return place(shape.size)


def c0(k: int, n: int) -> Fraction:
    """(k(n-k))! * prod_{i=1..k} (i-1)!/(n-k+i-1)!: the SYT count of the k x (n-k) rectangle."""
    if not (isinstance(k, int) and isinstance(n, int)) or not 1 <= k < n:
        raise InputError(f"need integers 1 <= k < n, got k={k!r}, n={n!r}")
    value = Fraction(factorial(k * (n - k)))
    for i in range(1, k + 1):
        value *= Fraction(factorial(i - 1), factorial(n - k + i - 1))
    return value


def rect_plus(k: int, w: int, chi) -> Partition:
    """The k-part shape (w, ..., w) + chi."""
    if k < 1 or w < 0:
        raise InputError(f"need k >= 1 and w >= 0, got k={k}, w={w}")
    parts = tuple(chi.parts if isinstance(chi, Partition) else chi)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if len(parts) > k:
        raise InputError(f"{parts!r} has more than {k} nonzero parts")
    parts = parts + (0,) * (k - len(parts))
    return Partition(w + p for p in parts)
