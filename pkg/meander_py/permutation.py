"""Top/bottom involutions of the modified meander and the meander permutation."""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .composition import SeaweedPair
from .meander import Meander, build_meander

Cycle = Tuple[int, ...]


def top_map(m: Meander, i: int) -> int:
    """t(i): the top-arc partner of i, or i itself on a top loop."""
    return m.top_partner(i) or i


def bottom_map(m: Meander, i: int) -> int:
    """b(i): the bottom-arc partner of i, or i itself on a bottom loop."""
    return m.bottom_partner(i) or i


def canonical_cycle(cycle: Sequence[int]) -> Cycle:
    """Rotate a cycle so that its smallest vertex comes first."""
    start = cycle.index(min(cycle))
    return tuple(cycle[start:]) + tuple(cycle[:start])


def cycles_of(images: Sequence[int]) -> Tuple[Cycle, ...]:
    """Disjoint cycles of a permutation given as 1-based images.

    `images[i - 1]` is the image of i. Cycles are listed by their smallest
    element, fixed points included.
    """
    n = len(images)
    seen = [False] * (n + 1)
    cycles = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cycle = []
        current = start
        while not seen[current]:
            seen[current] = True
            cycle.append(current)
            current = images[current - 1]
        cycles.append(tuple(cycle))
    return tuple(cycles)


@dataclass(frozen=True)
class MeanderPermutation:
    """sigma = t o b on {1..n}, stored as an image tuple."""
    n: int
    sigma: Tuple[int, ...]
    cycle_decomposition: Tuple[Cycle, ...]

    @classmethod
    def from_images(cls, images: Sequence[int]) -> "MeanderPermutation":
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        return cls(len(images), images, cycles_of(images))

    def __call__(self, i: int) -> int:
        return self.sigma[i - 1]

    def inverse(self) -> "MeanderPermutation":
        images = [0] * self.n
        for i, image in enumerate(self.sigma, start=1):
            images[image - 1] = i
        return MeanderPermutation.from_images(images)

    def __str__(self) -> str:
        return format_cycles(self)


def meander_permutation(pair: SeaweedPair) -> MeanderPermutation:
    """sigma(i) = t(b(i)) on the modified meander of `pair`."""
    m = build_meander(pair, modified=True)
    return MeanderPermutation.from_images(
        top_map(m, bottom_map(m, i)) for i in range(1, m.n + 1)
    )


def is_full_cycle(perm: MeanderPermutation) -> bool:
    """True when sigma is a single n-cycle."""
    return len(perm.cycle_decomposition) == 1


def cycle_type(perm: MeanderPermutation) -> Tuple[int, ...]:
    """Cycle lengths in decreasing order, fixed points included."""
    return tuple(sorted((len(c) for c in perm.cycle_decomposition), reverse=True))


def format_cycles(perm: MeanderPermutation, verbose: bool = False) -> str:
    """Disjoint-cycle notation such as `(1,4)(2,5)(3,7,8,9,6)`.

    Fixed points are printed as `(k)` only when `verbose` is set; the
    identity prints as `()` otherwise.
    """
    shown = [c for c in perm.cycle_decomposition if verbose or len(c) > 1]
    if not shown:
        return "()"
    return "".join("(" + ",".join(str(v) for v in c) + ")" for c in shown)


def addition_map(shift: int, n: int) -> MeanderPermutation:
    """i -> i + shift mod n with representatives in 1..n."""
    return MeanderPermutation.from_images((i - 1 + shift) % n + 1 for i in range(1, n + 1))


def path_cycle(m: Meander, path: Sequence[int]) -> Cycle:
    """The sigma-cycle carried by a path component of the meander.

    Walking the path v1, v2, ... from an end whose arc lies below the line,
    sigma visits every other vertex outward and the rest on the way back.
    From an end whose arc lies above, the cycle runs the other way round.
    """
    path = list(path)
    if len(path) == 1:
        return (path[0],)
    outward: List[int] = path[0::2] + path[1::2][::-1]
    if m.bottom_partner(path[0]) != path[1]:
        outward = outward[:1] + outward[:0:-1]
    return canonical_cycle(outward)
