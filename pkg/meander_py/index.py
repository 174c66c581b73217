"""Index of seaweed subalgebras of sl(n) and the Frobenius classifications."""

import logging
from dataclasses import dataclass, field
from enum import Enum
from math import gcd
from typing import Any, Dict, List, Optional

from .composition import (
    Composition, SeaweedPair, odd_part_count, panyushev_even, panyushev_odd,
    render_pair,
)
from .errors import OutOfRange
from .meander import build_meander, component_census

logger = logging.getLogger(__name__)


class Method(str, Enum):
    MEANDER = "meander"
    CLOSED_FORM = "closed_form"
    ORACLE = "oracle"


class FamilyKind(str, Enum):
    MAXIMAL_PARABOLIC = "maximal_parabolic"
    OPPOSITE_MAXIMAL = "opposite_maximal"
    SUBMAXIMAL_PARABOLIC = "submaximal_parabolic"
    PANYUSHEV_ODD = "panyushev_odd"
    PANYUSHEV_EVEN = "panyushev_even"
    OTHER = "other"


# Most specific first.
FAMILY_PRECEDENCE = (
    FamilyKind.PANYUSHEV_ODD,
    FamilyKind.PANYUSHEV_EVEN,
    FamilyKind.SUBMAXIMAL_PARABOLIC,
    FamilyKind.MAXIMAL_PARABOLIC,
    FamilyKind.OPPOSITE_MAXIMAL,
)


@dataclass(frozen=True)
class IndexReport:
    """sl-index of a seaweed and where the number came from."""
    pair: SeaweedPair
    components: Optional[int]
    cycles: Optional[int]
    index_sl: int
    frobenius: bool
    method: Method = Method.MEANDER

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pair": render_pair(self.pair),
            "components": self.components,
            "cycles": self.cycles,
            "index_sl": self.index_sl,
            "frobenius": self.frobenius,
            "method": self.method.value,
        }


@dataclass(frozen=True)
class FamilyTag:
    """Family shape of a pair with the integers that define it."""
    kind: FamilyKind
    parameters: Dict[str, int] = field(default_factory=dict)

    def __str__(self) -> str:
        if not self.parameters:
            return self.kind.value
        params = ",".join(f"{k}={v}" for k, v in self.parameters.items())
        return f"{self.kind.value}({params})"


class ViolationKind(str, Enum):
    ODD_COUNT = "odd_count"
    EQUAL_PARTIAL_SUMS = "equal_partial_sums"


@dataclass(frozen=True)
class Violation:
    """A failed necessary condition for Frobenius."""
    kind: ViolationKind
    value: int

    def __str__(self) -> str:
        if self.kind is ViolationKind.ODD_COUNT:
            return f"OddCount!=2 (count {self.value})"
        return f"EqualPartialSums(r={self.value})"


def dk_index(pair: SeaweedPair) -> IndexReport:
    """Components plus closed cycles of M(x|y), minus one."""
    census = component_census(build_meander(pair))
    components = census.component_count
    cycles = census.cycle_count
    index_sl = components + cycles - 1
    return IndexReport(pair, components, cycles, index_sl, index_sl == 0, Method.MEANDER)


def is_frobenius(pair: SeaweedPair) -> bool:
    return dk_index(pair).index_sl == 0


def necessary_conditions(pair: SeaweedPair) -> List[Violation]:
    """Every violated necessary condition for p(x|y) to be Frobenius.

    Checks that exactly two parts are odd, and that no r < min(m, t) has
    the first r parts of both sides summing to the same s < n.
    """
    violations = []
    odd = odd_part_count(pair)
    if odd != 2:
        violations.append(Violation(ViolationKind.ODD_COUNT, odd))
    for r, (s, t) in enumerate(zip(pair.top.prefix_sums, pair.bottom.prefix_sums), start=1):
        if s == t and s < pair.n:
            violations.append(Violation(ViolationKind.EQUAL_PARTIAL_SUMS, r))
    return violations


def _is_panyushev_odd(pair: SeaweedPair) -> bool:
    return pair.n % 2 == 1 and pair == panyushev_odd(pair.n)


def _is_panyushev_even(pair: SeaweedPair) -> bool:
    return pair.n % 2 == 0 and pair == panyushev_even(pair.n)


def family_tag(pair: SeaweedPair, kind: FamilyKind) -> Optional[FamilyTag]:
    """Tag `pair` as `kind` if it has that family's shape, else None."""
    top, bottom, n = pair.top.parts, pair.bottom.parts, pair.n
    if kind is FamilyKind.PANYUSHEV_ODD and _is_panyushev_odd(pair):
        return FamilyTag(kind, {"n": n})
    if kind is FamilyKind.PANYUSHEV_EVEN and _is_panyushev_even(pair):
        return FamilyTag(kind, {"n": n})
    if kind is FamilyKind.SUBMAXIMAL_PARABOLIC and len(top) == 3 and len(bottom) == 1:
        a, b, c = top
        return FamilyTag(kind, {"a": a, "b": b, "c": c, "n": n})
    if kind is FamilyKind.MAXIMAL_PARABOLIC and len(top) == 2 and len(bottom) == 1:
        a, b = top
        return FamilyTag(kind, {"a": a, "b": b, "n": n})
    if kind is FamilyKind.OPPOSITE_MAXIMAL and len(top) == 2 and len(bottom) == 2:
        a, b = top
        c, d = bottom
        return FamilyTag(kind, {"a": a, "b": b, "c": c, "d": d})
    if kind is FamilyKind.OTHER:
        return FamilyTag(kind)
    return None


def classify_family(pair: SeaweedPair) -> FamilyTag:
    """Most specific family shape matching `pair`, `other` if none does."""
    for kind in FAMILY_PRECEDENCE:
        tag = family_tag(pair, kind)
        if tag is not None:
            return tag
    return FamilyTag(FamilyKind.OTHER)


def closed_form_frobenius(tag: FamilyTag) -> Optional[bool]:
    """Frobenius verdict from the family's gcd criterion.

    Returns None (unknown) for `other`; callers fall back to dk_index.
    """
    p = tag.parameters
    if tag.kind is FamilyKind.MAXIMAL_PARABOLIC:
        return gcd(p["a"], p["n"]) == 1
    if tag.kind is FamilyKind.OPPOSITE_MAXIMAL:
        n = p["a"] + p["b"]
        return gcd(abs(p["a"] - p["c"]), n) == 1
    if tag.kind is FamilyKind.SUBMAXIMAL_PARABOLIC:
        return gcd(p["a"] + p["b"], p["b"] + p["c"]) == 1
    if tag.kind in (FamilyKind.PANYUSHEV_ODD, FamilyKind.PANYUSHEV_EVEN):
        return True
    return None


def closed_form_report(pair: SeaweedPair) -> Optional[IndexReport]:
    """IndexReport from closed forms alone, when the family admits one.

    Only the maximal parabolics have a closed-form index; the other families
    only know Frobenius-or-not, which pins the index when it is zero.
    """
    tag = classify_family(pair)
    if tag.kind is FamilyKind.MAXIMAL_PARABOLIC:
        index = elashvili_index(tag.parameters["a"], tag.parameters["n"])
    elif closed_form_frobenius(tag):
        index = 0
    else:
        return None
    return IndexReport(pair, None, None, index, index == 0, Method.CLOSED_FORM)


def elashvili_index(a: int, n: int) -> int:
    """Index gcd(a, n) - 1 of the maximal parabolic p(a, n-a|n)."""
    if not 1 <= a < n:
        raise OutOfRange("a", a, 1, n - 1)
    return gcd(a, n) - 1


def borel_index(n: int) -> int:
    """Measured sl-index of the Borel p(1,...,1|n): ceil(n/2) - 1."""
    return (n + 1) // 2 - 1


def borel_index_as_stated(n: int) -> int:
    """floor((n+1)/2), the Borel index in its commonly printed form.

    This is the gl count, one larger than borel_index.
    """
    return (n + 1) // 2


def inflate_submaximal(a: int, b: int, c: int, d: int, d1: int) -> SeaweedPair:
    """Thread a cycle of width d through the path of M(a,b,c|a+b+c).

    The cycle puts d vertices in every interval of the path, d1 beyond each
    end of the path and d2 = d - d1 in the middle block, giving
    (a + 2*d1 + (a-1)*d, b + 2*d2 + (b-1)*d, c + 2*d1 + (c-1)*d | n').
    Both a+b and b+c of the result are multiples of d + 1.
    """
    for name, value in (("a", a), ("b", b), ("c", c)):
        if value < 1:
            raise OutOfRange(name, value, 1)
    if d < 0:
        raise OutOfRange("d", d, 0)
    if not 0 <= d1 <= d:
        raise OutOfRange("d1", d1, 0, d)
    d2 = d - d1
    top = (a + 2 * d1 + (a - 1) * d, b + 2 * d2 + (b - 1) * d, c + 2 * d1 + (c - 1) * d)
    return SeaweedPair(Composition(top), Composition((sum(top),)))


def four_part_counterexamples(n: int) -> List[SeaweedPair]:
    """Pairs (a1,a2,a3,a4|n) where gcd(a1+a2+a3, a2+a3+a4) == 1 mispredicts Frobenius.

    The three-part criterion has no direct four-part analogue; this lists
    the witnesses of that for one n.
    """
    found = []
    for a1 in range(1, n - 2):
        for a2 in range(1, n - a1 - 1):
            for a3 in range(1, n - a1 - a2):
                a4 = n - a1 - a2 - a3
                pair = SeaweedPair.of((a1, a2, a3, a4), (n,))
                guess = gcd(a1 + a2 + a3, a2 + a3 + a4) == 1
                if guess != is_frobenius(pair):
                    found.append(pair)
    logger.debug("four-part sweep n=%d: %d mispredictions", n, len(found))
    return found
