"""Aggregate labeled verbal complexes into distributions and matrices.

All aggregates are mergeable (pointwise count addition) so shards can be
processed independently and combined. Frequencies are kept as exact
fractions; fixed_point renders them reproducibly for output.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Iterator, TextIO

from .labels import Language, collapse_display, display_order

DIRECTIONS = ("en-de", "de-en")


def fixed_point(value: Fraction, decimals: int = 6) -> str:
    """Render a fraction with a fixed number of decimals, no float round-trip."""
    scale = 10**decimals
    scaled = round(value * scale)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    return f"{sign}{scaled // scale}.{scaled % scale:0{decimals}d}"


@dataclass(frozen=True)
class LabelFilter:
    """Row filter over mood/voice/finiteness, as lowercase value sets.

    A None field accepts every value, except that imperatives are
    excluded unless asked for (they carry no tense contrast).
    """

    moods: frozenset[str] | None = None
    voices: frozenset[str] | None = None
    finiteness: frozenset[str] | None = None
    include_imperative: bool = False

    def accepts(self, mood: str, voice: str, finiteness: str) -> bool:
        if self.moods is not None:
            if mood not in self.moods:
                return False
        elif mood == "imperative" and not self.include_imperative:
            return False
        if self.voices is not None and voice not in self.voices:
            return False
        if self.finiteness is not None and finiteness not in self.finiteness:
            return False
        return True

    def describe(self) -> str:
        parts = []
        if self.moods is not None:
            parts.append("mood=" + "|".join(sorted(self.moods)))
        elif not self.include_imperative:
            parts.append("mood!=imperative")
        if self.voices is not None:
            parts.append("voice=" + "|".join(sorted(self.voices)))
        if self.finiteness is not None:
            parts.append("finiteness=" + "|".join(sorted(self.finiteness)))
        return ",".join(parts) or "none"


def _languages_for(direction: str) -> tuple[Language, Language]:
    if direction not in DIRECTIONS:
        raise ValueError(f"unknown direction {direction!r}; expected one of {DIRECTIONS}")
    if direction == "en-de":
        return Language.EN, Language.DE
    return Language.DE, Language.EN


@dataclass
class CorrespondenceMatrix:
    """Counts of (source label, target label) pairs with fixed axis orders."""

    direction: str = "en-de"
    collapse_konjunktiv: bool = False
    corpus_id: str = ""
    counts: Counter = field(default_factory=Counter)

    @property
    def source_language(self) -> Language:
        return _languages_for(self.direction)[0]

    @property
    def target_language(self) -> Language:
        return _languages_for(self.direction)[1]

    @property
    def row_labels(self) -> tuple[str, ...]:
        return display_order(self.source_language, self.collapse_konjunktiv)

    @property
    def column_labels(self) -> tuple[str, ...]:
        return display_order(self.target_language, self.collapse_konjunktiv)

    def _normalize(self, language: Language, label: str) -> str:
        if self.collapse_konjunktiv:
            label = collapse_display(label)
        valid = display_order(language, self.collapse_konjunktiv)
        if label not in valid:
            raise ValueError(
                f"unknown {language.value} label {label!r}; valid labels: "
                + ", ".join(valid)
            )
        return label

    def add(self, source_label: str, target_label: str, n: int = 1) -> None:
        row = self._normalize(self.source_language, source_label)
        col = self._normalize(self.target_language, target_label)
        self.counts[(row, col)] += n

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def row_total(self, row: str) -> int:
        return sum(n for (r, _), n in self.counts.items() if r == row)

    def row_frequency(self, row: str, column: str) -> Fraction:
        total = self.row_total(row)
        if total == 0:
            return Fraction(0)
        return Fraction(self.counts.get((row, column), 0), total)

    def row_frequencies(self, row: str) -> dict[str, Fraction]:
        return {col: self.row_frequency(row, col) for col in self.column_labels}

    def merge(self, other: "CorrespondenceMatrix") -> "CorrespondenceMatrix":
        if (
            other.direction != self.direction
            or other.collapse_konjunktiv != self.collapse_konjunktiv
        ):
            raise ValueError("cannot merge matrices with different label spaces")
        merged = replace(self, counts=self.counts + other.counts)
        if other.corpus_id and other.corpus_id != self.corpus_id:
            merged.corpus_id = "+".join(
                p for p in (self.corpus_id, other.corpus_id) if p
            )
        return merged

    def count_rows(self) -> Iterator[tuple[str, list[int]]]:
        for row in self.row_labels:
            yield row, [self.counts.get((row, col), 0) for col in self.column_labels]

    def write_csv(self, sink: TextIO, emit: str = "freq", decimals: int = 6) -> None:
        """CSV matrix: one line per source label, columns per target label."""
        sink.write("label," + ",".join(self.column_labels) + "\n")
        for row, counts in self.count_rows():
            if emit == "count":
                cells = [str(n) for n in counts]
            else:
                total = sum(counts)
                cells = [
                    fixed_point(Fraction(n, total), decimals) if total else
                    fixed_point(Fraction(0), decimals)
                    for n in counts
                ]
            sink.write(row + "," + ",".join(cells) + "\n")

    def write_plot_data(
        self, sink: TextIO, rows: Iterable[str] | None = None, decimals: int = 6
    ) -> None:
        """Figure-style table: target labels down, one series column per row."""
        selected = list(rows) if rows is not None else list(self.row_labels)
        for row in selected:
            self._normalize(self.source_language, row)
        sink.write("label," + ",".join(selected) + "\n")
        for col in self.column_labels:
            cells = [
                fixed_point(self.row_frequency(row, col), decimals)
                for row in selected
            ]
            sink.write(col + "," + ",".join(cells) + "\n")

    def to_json_dict(self, decimals: int = 6) -> dict:
        rows = list(self.count_rows())
        return {
            "kind": "correspondence_matrix",
            "direction": self.direction,
            "corpus_id": self.corpus_id,
            "collapse_konjunktiv": self.collapse_konjunktiv,
            "row_labels": list(self.row_labels),
            "column_labels": list(self.column_labels),
            "counts": [counts for _, counts in rows],
            "row_freq": [
                [
                    fixed_point(Fraction(n, total), decimals) if total else
                    fixed_point(Fraction(0), decimals)
                    for n in counts
                ]
                for counts, total in ((c, sum(c)) for _, c in rows)
            ],
            "row_freq_exact": [
                [
                    f"{n}/{total}" if total else "0/1"
                    for n in counts
                ]
                for counts, total in ((c, sum(c)) for _, c in rows)
            ],
            "row_totals": {row: sum(counts) for row, counts in rows},
            "total": self.total,
        }


@dataclass
class TenseDistribution:
    """Per-label counts for one language under a row filter."""

    language: Language
    corpus_id: str = ""
    label_filter: LabelFilter = field(default_factory=LabelFilter)
    collapse_konjunktiv: bool = False
    counts: Counter = field(default_factory=Counter)

    @property
    def labels(self) -> tuple[str, ...]:
        return display_order(self.language, self.collapse_konjunktiv)

    def _normalize(self, label: str) -> str:
        if self.collapse_konjunktiv:
            label = collapse_display(label)
        valid = display_order(self.language, self.collapse_konjunktiv)
        if label not in valid:
            raise ValueError(
                f"unknown {self.language.value} label {label!r}; valid labels: "
                + ", ".join(valid)
            )
        return label

    def add(self, label: str, n: int = 1) -> None:
        self.counts[self._normalize(label)] += n

    def add_row(self, label: str, mood: str, voice: str, finiteness: str) -> bool:
        """Filtered add; returns whether the row was counted."""
        if not self.label_filter.accepts(mood, voice, finiteness):
            return False
        self.add(label)
        return True

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def frequency(self, label: str) -> Fraction:
        if self.total == 0:
            return Fraction(0)
        return Fraction(self.counts.get(label, 0), self.total)

    def merge(self, other: "TenseDistribution") -> "TenseDistribution":
        if (
            other.language != self.language
            or other.collapse_konjunktiv != self.collapse_konjunktiv
            or other.label_filter != self.label_filter
        ):
            raise ValueError("cannot merge distributions with different label spaces")
        merged = replace(self, counts=self.counts + other.counts)
        if other.corpus_id and other.corpus_id != self.corpus_id:
            merged.corpus_id = "+".join(
                p for p in (self.corpus_id, other.corpus_id) if p
            )
        return merged

    def write_csv(self, sink: TextIO, emit: str = "freq", decimals: int = 6) -> None:
        series = self.corpus_id or "freq"
        sink.write(f"label,{series}\n")
        for label in self.labels:
            if emit == "count":
                cell = str(self.counts.get(label, 0))
            else:
                cell = fixed_point(self.frequency(label), decimals)
            sink.write(f"{label},{cell}\n")

    def to_json_dict(self, decimals: int = 6) -> dict:
        return {
            "kind": "tense_distribution",
            "language": self.language.value,
            "corpus_id": self.corpus_id,
            "filter": self.label_filter.describe(),
            "collapse_konjunktiv": self.collapse_konjunktiv,
            "labels": list(self.labels),
            "counts": [self.counts.get(label, 0) for label in self.labels],
            "freq": [
                fixed_point(self.frequency(label), decimals) for label in self.labels
            ],
            "freq_exact": [
                f"{self.counts.get(label, 0)}/{self.total}" if self.total else "0/1"
                for label in self.labels
            ],
            "total": self.total,
        }


def write_distribution_table(
    distributions: list[TenseDistribution], sink: TextIO, decimals: int = 6
) -> None:
    """Figure-style table: labels down, one series column per distribution."""
    if not distributions:
        return
    first = distributions[0]
    for dist in distributions[1:]:
        if dist.language != first.language or dist.collapse_konjunktiv != first.collapse_konjunktiv:
            raise ValueError("distribution series must share one label space")
    names = [d.corpus_id or f"series{i}" for i, d in enumerate(distributions, 1)]
    sink.write("label," + ",".join(names) + "\n")
    for label in first.labels:
        cells = [fixed_point(d.frequency(label), decimals) for d in distributions]
        sink.write(label + "," + ",".join(cells) + "\n")


def finiteness_ratio(values: Iterable[str]) -> tuple[int, int, Fraction]:
    """(non-finite count, total, ratio) over finiteness column values."""
    non_finite = 0
    total = 0
    for value in values:
        total += 1
        if value != "finite":
            non_finite += 1
    if total == 0:
        return 0, 0, Fraction(0)
    return non_finite, total, Fraction(non_finite, total)


def lemma_tense_profile(
    records: Iterable[tuple[str, str, str]],
    lemma: str,
    voice: str | None = None,
) -> Counter:
    """Tense-label counts for one main-verb lemma.

    Records are (main verb lemma, display label, voice) triples.
    """
    profile: Counter = Counter()
    for record_lemma, label, record_voice in records:
        if record_lemma != lemma:
            continue
        if voice is not None and record_voice != voice:
            continue
        profile[label] += 1
    return profile
