"""Compositions of n and seaweed pairs (x|y)."""

from bisect import bisect_left
from dataclasses import dataclass
from functools import cached_property
from itertools import accumulate
from typing import Iterable, List, Tuple

from .errors import EmptyComposition, MalformedInput, OutOfRange, SumMismatch

_DIGITS = "0123456789"


@dataclass(frozen=True)
class Composition:
    """Ordered positive parts summing to n.

    Zero parts are dropped by `from_parts`; constructing directly with a
    non-positive part is an error.
    """
    parts: Tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise EmptyComposition("composition has no nonzero parts")
        if any(part < 1 for part in self.parts):
            raise ValueError(f"parts must be positive: {self.parts}")

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Composition":
        """Build a composition, dropping zero parts."""
        kept = tuple(int(p) for p in parts if int(p) != 0)
        return cls(kept)

    @property
    def n(self) -> int:
        return self.prefix_sums[-1]

    @cached_property
    def prefix_sums(self) -> Tuple[int, ...]:
        """Strictly increasing partial sums, ending at n."""
        return tuple(accumulate(self.parts))

    @property
    def starts(self) -> Tuple[int, ...]:
        """Offset s of every block, so block k covers s+1..s+a_k."""
        return (0,) + self.prefix_sums[:-1]

    def block_of(self, v: int) -> int:
        """Return the 1-based block containing vertex v."""
        if not 1 <= v <= self.n:
            raise OutOfRange("v", v, 1, self.n)
        return bisect_left(self.prefix_sums, v) + 1

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class SeaweedPair:
    """Two compositions of the same n naming the seaweed p(top|bottom)."""
    top: Composition
    bottom: Composition

    def __post_init__(self):
        if self.top.n != self.bottom.n:
            raise SumMismatch(
                f"top sums to {self.top.n} but bottom sums to {self.bottom.n}"
            )

    @classmethod
    def of(cls, top: Iterable[int], bottom: Iterable[int]) -> "SeaweedPair":
        """Shorthand: SeaweedPair.of((5, 2, 2), (2, 4, 3))."""
        return cls(Composition.from_parts(top), Composition.from_parts(bottom))

    @property
    def n(self) -> int:
        return self.top.n

    def __str__(self) -> str:
        return render_pair(self)


def _side_error(text: str, start: int) -> EmptyComposition:
    return EmptyComposition("all parts are zero on one side", text, start)


def parse_pair(text: str) -> SeaweedPair:
    """Parse `INT ("," INT)* "|" INT ("," INT)*` into a normalized pair.

    Whitespace around numbers and separators is ignored. Errors carry the
    column of the first offending character.
    """
    sides: List[List[int]] = [[]]
    side_starts = [0]
    bar_position = None
    pos = 0
    expect_number = True
    length = len(text)

    while pos < length:
        char = text[pos]
        if char.isspace():
            pos += 1
            continue
        if expect_number:
            if char not in _DIGITS:
                raise MalformedInput(f"expected a non-negative integer, got {char!r}", text, pos)
            end = pos
            while end < length and text[end] in _DIGITS:
                end += 1
            sides[-1].append(int(text[pos:end]))
            pos = end
            expect_number = False
            continue
        if char == ",":
            expect_number = True
        elif char == "|" and bar_position is None:
            bar_position = pos
            sides.append([])
            side_starts.append(pos + 1)
            expect_number = True
        else:
            raise MalformedInput(f"unexpected {char!r}", text, pos)
        pos += 1

    if expect_number:
        raise MalformedInput("expected a non-negative integer at end of input", text, length)
    if bar_position is None:
        raise MalformedInput("missing '|' between the two compositions", text, length)

    top_parts, bottom_parts = sides
    if not any(top_parts):
        raise _side_error(text, side_starts[0])
    if not any(bottom_parts):
        raise _side_error(text, side_starts[1])

    top = Composition.from_parts(top_parts)
    bottom = Composition.from_parts(bottom_parts)
    if top.n != bottom.n:
        raise SumMismatch(
            f"top sums to {top.n} but bottom sums to {bottom.n}", text, bar_position
        )
    return SeaweedPair(top, bottom)


def render_pair(pair: SeaweedPair) -> str:
    """Canonical text form `a1,...,am|b1,...,bt`."""
    return f"{pair.top}|{pair.bottom}"


def odd_part_count(pair: SeaweedPair) -> int:
    """Number of odd parts among both compositions, with multiplicity."""
    return sum(1 for p in pair.top.parts + pair.bottom.parts if p % 2)


def swap(pair: SeaweedPair) -> SeaweedPair:
    """(x|y) -> (y|x)."""
    return SeaweedPair(pair.bottom, pair.top)


def split_points(pair: SeaweedPair) -> List[Tuple[int, int, int]]:
    """Common block boundaries strictly inside 1..n.

    Returns:
        (r, r', s) triples where the first r top parts and the first r'
        bottom parts both sum to s < n.
    """
    bottom_index = {s: k for k, s in enumerate(pair.bottom.prefix_sums, start=1)}
    points = []
    for r, s in enumerate(pair.top.prefix_sums[:-1], start=1):
        if s in bottom_index:
            points.append((r, bottom_index[s], s))
    return points


def split_pair(pair: SeaweedPair, s: int) -> Tuple[SeaweedPair, SeaweedPair]:
    """Split at a common boundary s into the prefix and suffix pairs."""
    for r, r_bottom, boundary in split_points(pair):
        if boundary == s:
            head = SeaweedPair(Composition(pair.top.parts[:r]),
                               Composition(pair.bottom.parts[:r_bottom]))
            tail = SeaweedPair(Composition(pair.top.parts[r:]),
                               Composition(pair.bottom.parts[r_bottom:]))
            return head, tail
    raise OutOfRange("s", s, 1, pair.n - 1)


# Named seaweeds

def whole(n: int) -> SeaweedPair:
    """sl(n) itself, p(n|n)."""
    return SeaweedPair.of((n,), (n,))


def cartan(n: int) -> SeaweedPair:
    """Traceless diagonal matrices, p(1,...,1|1,...,1)."""
    return SeaweedPair.of((1,) * n, (1,) * n)


def borel(n: int) -> SeaweedPair:
    """Upper triangular matrices, p(1,...,1|n)."""
    return SeaweedPair.of((1,) * n, (n,))


def maximal_parabolic(a: int, n: int) -> SeaweedPair:
    """p(a, n-a|n)."""
    if not 1 <= a < n:
        raise OutOfRange("a", a, 1, n - 1)
    return SeaweedPair.of((a, n - a), (n,))


def panyushev_odd(n: int) -> SeaweedPair:
    """p(2,...,2,1|1,2,...,2) for odd n."""
    if n < 1 or n % 2 == 0:
        raise OutOfRange("n", n, 1)
    twos = (2,) * (n // 2)
    return SeaweedPair.of(twos + (1,), (1,) + twos)


def panyushev_even(n: int) -> SeaweedPair:
    """p(1,2,...,2,1|2,...,2) for even n."""
    if n < 2 or n % 2:
        raise OutOfRange("n", n, 2)
    return SeaweedPair.of((1,) + (2,) * (n // 2 - 1) + (1,), (2,) * (n // 2))
