"""Exhaustive sweeps over seaweed pairs and the family theorem checks."""

import csv
import json
import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from multiprocessing import Pool
from typing import Dict, Iterable, Iterator, List, Optional, TextIO, Tuple

from .composition import (
    Composition, SeaweedPair, maximal_parabolic, panyushev_even, panyushev_odd,
    render_pair,
)
from .errors import OutOfRange, TheoremViolation
from .index import (
    FamilyKind, FamilyTag, classify_family, closed_form_frobenius, dk_index,
    family_tag, necessary_conditions,
)
from .meander import build_meander, component_census

logger = logging.getLogger(__name__)

CSV_COLUMNS = ("top", "bottom", "n", "components", "cycles", "index_sl",
               "frobenius", "family", "closed_form", "agree")

FAMILY_KINDS = (
    FamilyKind.MAXIMAL_PARABOLIC,
    FamilyKind.OPPOSITE_MAXIMAL,
    FamilyKind.SUBMAXIMAL_PARABOLIC,
    FamilyKind.PANYUSHEV_ODD,
    FamilyKind.PANYUSHEV_EVEN,
)


class Predicate(str, Enum):
    ALL = "all"
    FROBENIUS = "frobenius"
    NECESSARY_PASS = "necessary_pass"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"
    SUMMARY = "summary"


@dataclass(frozen=True)
class SweepSpec:
    """What to sweep and how to report it."""
    n_min: int
    n_max: int
    shape: Optional[FamilyKind] = None
    predicate: Predicate = Predicate.ALL
    output: OutputFormat = OutputFormat.SUMMARY
    workers: int = 1

    def __post_init__(self):
        if self.n_min < 1:
            raise OutOfRange("n_min", self.n_min, 1)
        if self.n_max < self.n_min:
            raise OutOfRange("n_max", self.n_max, self.n_min)


@dataclass(frozen=True)
class SweepRow:
    pair: SeaweedPair
    components: int
    cycles: int
    index_sl: int
    frobenius: bool
    family: FamilyTag
    closed_form: Optional[bool]
    agree: bool

    def to_record(self) -> Dict[str, object]:
        return {
            "top": str(self.pair.top),
            "bottom": str(self.pair.bottom),
            "n": self.pair.n,
            "components": self.components,
            "cycles": self.cycles,
            "index_sl": self.index_sl,
            "frobenius": self.frobenius,
            "family": self.family.kind.value,
            "closed_form": self.closed_form,
            "agree": self.agree,
        }


@dataclass
class SweepSummary:
    n: int
    pairs: int = 0
    frobenius_count: int = 0
    violations: int = 0


@dataclass
class SweepResult:
    rows: List[SweepRow] = field(default_factory=list)
    summaries: List[SweepSummary] = field(default_factory=list)


def enumerate_compositions(n: int) -> Iterator[Tuple[int, ...]]:
    """All 2^(n-1) compositions of n, lexicographic in their part lists."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in enumerate_compositions(n - first):
            yield (first,) + rest


def enumerate_pairs(n: int) -> Iterator[SeaweedPair]:
    """Every ordered pair of compositions of n, top side major."""
    if n < 1:
        raise OutOfRange("n", n, 1)
    bottoms = [Composition(parts) for parts in enumerate_compositions(n)]
    for top in enumerate_compositions(n):
        top_composition = Composition(top)
        for bottom in bottoms:
            yield SeaweedPair(top_composition, bottom)


def random_pairs(count: int, n_min: int, n_max: int, seed: int = 0) -> List[SeaweedPair]:
    """Seeded random pairs with n_min <= n <= n_max."""
    rng = random.Random(seed)
    pairs = []
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        pairs.append(SeaweedPair(_random_composition(rng, n), _random_composition(rng, n)))
    return pairs


def _random_composition(rng: random.Random, n: int) -> Composition:
    cuts = sorted(c for c in range(1, n) if rng.random() < 0.5)
    bounds = [0] + cuts + [n]
    return Composition(tuple(b - a for a, b in zip(bounds, bounds[1:])))


def family_pairs(kind: FamilyKind, n: int) -> Iterator[SeaweedPair]:
    """Pairs of size n having the shape of `kind`, in canonical order."""
    if kind is FamilyKind.MAXIMAL_PARABOLIC:
        for a in range(1, n):
            yield maximal_parabolic(a, n)
    elif kind is FamilyKind.OPPOSITE_MAXIMAL:
        for a in range(1, n):
            for c in range(1, n):
                yield SeaweedPair.of((a, n - a), (c, n - c))
    elif kind is FamilyKind.SUBMAXIMAL_PARABOLIC:
        for a in range(1, n - 1):
            for b in range(1, n - a):
                yield SeaweedPair.of((a, b, n - a - b), (n,))
    elif kind is FamilyKind.PANYUSHEV_ODD:
        if n % 2:
            yield panyushev_odd(n)
    elif kind is FamilyKind.PANYUSHEV_EVEN:
        if n % 2 == 0 and n >= 2:
            yield panyushev_even(n)
    else:
        for pair in enumerate_pairs(n):
            if classify_family(pair).kind is FamilyKind.OTHER:
                yield pair


def sweep_row(pair: SeaweedPair) -> SweepRow:
    report = dk_index(pair)
    tag = classify_family(pair)
    verdict = closed_form_frobenius(tag)
    return SweepRow(
        pair=pair,
        components=report.components,
        cycles=report.cycles,
        index_sl=report.index_sl,
        frobenius=report.frobenius,
        family=tag,
        closed_form=verdict,
        agree=verdict is None or verdict == report.frobenius,
    )


def _keep(row: SweepRow, predicate: Predicate) -> bool:
    if predicate is Predicate.FROBENIUS:
        return row.frobenius
    if predicate is Predicate.NECESSARY_PASS:
        return not necessary_conditions(row.pair)
    return True


def _rows_for_top(task) -> List[SweepRow]:
    top, n, predicate = task
    rows = []
    top_composition = Composition(top)
    for bottom in enumerate_compositions(n):
        row = sweep_row(SeaweedPair(top_composition, Composition(bottom)))
        if _keep(row, predicate):
            rows.append(row)
    return rows


def _checked(chunks: Iterable[List[SweepRow]]) -> Iterator[SweepRow]:
    for chunk in chunks:
        for row in chunk:
            if not row.agree:
                raise TheoremViolation(render_pair(row.pair), row.family.kind.value,
                                       row.closed_form, row.frobenius)
            yield row


def iter_rows(spec: SweepSpec, n: int) -> Iterator[SweepRow]:
    """Rows for one n in canonical order, raising on a theorem violation."""
    if spec.shape is not None:
        rows = (row for row in map(sweep_row, family_pairs(spec.shape, n))
                if _keep(row, spec.predicate))
        yield from _checked([row] for row in rows)
        return
    tasks = ((top, n, spec.predicate) for top in enumerate_compositions(n))
    if spec.workers > 1:
        # imap returns chunks in task order, so the merged rows stay canonical.
        with Pool(spec.workers) as pool:
            yield from _checked(pool.imap(_rows_for_top, tasks, chunksize=4))
    else:
        yield from _checked(map(_rows_for_top, tasks))


def run_sweep(spec: SweepSpec) -> SweepResult:
    """Sweep every n from spec.n_min to spec.n_max.

    Rows are kept for csv/json output; summary output only counts, so the
    pairs stream through without being stored.
    """
    result = SweepResult()
    keep_rows = spec.output is not OutputFormat.SUMMARY
    for n in range(spec.n_min, spec.n_max + 1):
        summary = SweepSummary(n)
        for row in iter_rows(spec, n):
            summary.pairs += 1
            summary.frobenius_count += row.frobenius
            if keep_rows:
                result.rows.append(row)
        logger.info("n=%d pairs=%d frobenius=%d", n, summary.pairs, summary.frobenius_count)
        result.summaries.append(summary)
    return result


def write_rows(result: SweepResult, output: OutputFormat, stream: TextIO) -> None:
    """Write a sweep as csv, a json array, or per-n summary lines."""
    if output is OutputFormat.CSV:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in result.rows:
            record = row.to_record()
            writer.writerow([_csv_cell(record[column]) for column in CSV_COLUMNS])
    elif output is OutputFormat.JSON:
        json.dump([row.to_record() for row in result.rows], stream, indent=2)
        stream.write("\n")
    else:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(("n", "pairs", "frobenius_count", "violations"))
        for summary in result.summaries:
            writer.writerow((summary.n, summary.pairs, summary.frobenius_count, summary.violations))


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def verify_families(max_n: int, min_n: int = 1,
                    kinds: Iterable[FamilyKind] = FAMILY_KINDS) -> Dict[FamilyKind, int]:
    """Check each family's closed form against the meander for n <= max_n.

    Every pair of a family's shape is checked with that family's own
    criterion, so overlapping shapes (such as (1,1|2)) count for both.
    The Panyushev families must also be the path 1, 2, ..., n.

    Returns:
        Number of pairs checked per family

    Raises:
        TheoremViolation: on the first disagreement
    """
    counts = {}
    for kind in kinds:
        checked = 0
        for n in range(min_n, max_n + 1):
            for pair in family_pairs(kind, n):
                tag = family_tag(pair, kind)
                expected = closed_form_frobenius(tag)
                report = dk_index(pair)
                if expected != report.frobenius:
                    raise TheoremViolation(render_pair(pair), kind.value, expected, report.frobenius)
                if n > 1 and kind in (FamilyKind.PANYUSHEV_ODD, FamilyKind.PANYUSHEV_EVEN):
                    census = component_census(build_meander(pair))
                    if census.paths != (tuple(range(1, n + 1)),):
                        raise TheoremViolation(render_pair(pair), kind.value, expected, False)
                checked += 1
        logger.info("%s: %d pairs OK", kind.value, checked)
        counts[kind] = checked
    return counts
