"""Corpus report: correspondence tables, distributions, reference comparison.

Aggregates a word-aligned parallel corpus end to end, writes delimited
tables plus rendered figures into a directory, and checks the qualitative
regularities that large News/Europarl/Crawl corpora exhibit. Bundled
reference measurements from those corpora are compared cell by cell
within a configurable tolerance.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator

from .corpus_io import AlignmentSet, Diagnostics, Sentence
from .labels import Language
from .pair_extractor import pair_vcs
from .pipeline import label_sentence
from .stats import (
    CorrespondenceMatrix,
    LabelFilter,
    TenseDistribution,
    fixed_point,
)

DEFAULT_TOLERANCE = Fraction(1, 50)

_REFERENCE: dict | None = None


def load_reference_values() -> dict:
    global _REFERENCE
    if _REFERENCE is None:
        source = resources.files("tmvkit.data").joinpath("reference_values.json")
        _REFERENCE = json.loads(source.read_text(encoding="utf-8"))
    return _REFERENCE


@dataclass(frozen=True)
class ComparisonCell:
    dataset: str
    row: str
    column: str
    ours: Fraction
    reference: float

    @property
    def delta(self) -> float:
        return float(self.ours) - self.reference

    def within(self, tolerance: Fraction) -> bool:
        return abs(self.delta) <= float(tolerance) + 1e-12


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool | None
    detail: str

    @property
    def status(self) -> str:
        if self.passed is None:
            return "SKIP"
        return "PASS" if self.passed else "FAIL"


@dataclass
class CorpusAggregates:
    matrix: CorrespondenceMatrix
    collapsed: CorrespondenceMatrix
    de_distribution: TenseDistribution
    en_finiteness: Counter = field(default_factory=Counter)
    de_finiteness: Counter = field(default_factory=Counter)
    sentence_pairs: int = 0
    en_vc_count: int = 0
    de_vc_count: int = 0


@dataclass
class ReportResult:
    aggregates: CorpusAggregates
    checks: list[CheckResult] = field(default_factory=list)
    comparisons: list[ComparisonCell] = field(default_factory=list)
    files: list[Path] = field(default_factory=list)
    tolerance: Fraction = DEFAULT_TOLERANCE

    def summary_lines(self) -> list[str]:
        agg = self.aggregates
        lines = [
            f"sentence pairs: {agg.sentence_pairs}",
            f"verbal complexes: en {agg.en_vc_count}, de {agg.de_vc_count}",
            f"paired complexes: {agg.matrix.total}",
        ]
        for check in self.checks:
            lines.append(f"{check.status} {check.name}: {check.detail}")
        if self.comparisons:
            inside = sum(1 for c in self.comparisons if c.within(self.tolerance))
            lines.append(
                f"reference comparison: {inside}/{len(self.comparisons)} cells "
                f"within {fixed_point(self.tolerance, 2)}"
            )
        lines.extend(f"wrote {path}" for path in self.files)
        return lines


def iter_parallel(
    en_sentences: Iterable[Sentence],
    de_sentences: Iterable[Sentence],
    alignments: Iterable[AlignmentSet],
    diagnostics: Diagnostics | None = None,
) -> Iterator[tuple[Sentence, Sentence, AlignmentSet]]:
    """Zip the three streams, flagging a length mismatch instead of hiding it."""
    en_iter = iter(en_sentences)
    de_iter = iter(de_sentences)
    al_iter = iter(alignments)
    sentinel = object()
    while True:
        en = next(en_iter, sentinel)
        de = next(de_iter, sentinel)
        al = next(al_iter, sentinel)
        present = [x is not sentinel for x in (en, de, al)]
        if not any(present):
            return
        if not all(present):
            if diagnostics is not None:
                names = [
                    name
                    for name, here in zip(("en", "de", "alignment"), present)
                    if not here
                ]
                diagnostics.error(
                    "parallel streams differ in length; exhausted: "
                    + ", ".join(names)
                )
            return
        yield en, de, al  # type: ignore[misc]


def aggregate_corpus(
    en_sentences: Iterable[Sentence],
    de_sentences: Iterable[Sentence],
    alignments: Iterable[AlignmentSet],
    scheme: str = "chain",
    mode: str = "greedy",
    corpus_id: str = "corpus",
    lexicon=None,
    modal_preterite: str = "present",
    require_main_alignment: bool = False,
    diagnostics: Diagnostics | None = None,
) -> CorpusAggregates:
    agg = CorpusAggregates(
        matrix=CorrespondenceMatrix(direction="en-de", corpus_id=corpus_id),
        collapsed=CorrespondenceMatrix(
            direction="en-de", collapse_konjunktiv=True, corpus_id=corpus_id
        ),
        de_distribution=TenseDistribution(
            language=Language.DE,
            corpus_id=corpus_id,
            label_filter=LabelFilter(
                moods=frozenset({"indicative"}),
                voices=frozenset({"active"}),
                finiteness=frozenset({"finite"}),
            ),
        ),
    )
    for en_s, de_s, alignment in iter_parallel(
        en_sentences, de_sentences, alignments, diagnostics
    ):
        en_labeled = label_sentence(en_s, scheme, modal_preterite=modal_preterite)
        de_labeled = label_sentence(de_s, scheme, lexicon=lexicon)
        agg.sentence_pairs += 1
        agg.en_vc_count += len(en_labeled)
        agg.de_vc_count += len(de_labeled)
        for _, label in en_labeled:
            agg.en_finiteness[label.finiteness.value] += 1
        for _, label in de_labeled:
            agg.de_finiteness[label.finiteness.value] += 1
            agg.de_distribution.add_row(
                label.display,
                label.mood.value,
                label.voice.value,
                label.finiteness.value,
            )
        result = pair_vcs(
            en_s,
            de_s,
            [vc for vc, _ in en_labeled],
            [vc for vc, _ in de_labeled],
            alignment,
            mode=mode,
            require_main_alignment=require_main_alignment,
            diagnostics=diagnostics,
        )
        en_by_members = {vc.members: label for vc, label in en_labeled}
        de_by_members = {vc.members: label for vc, label in de_labeled}
        for pair in result.pairs:
            en_label = en_by_members[pair.source.members]
            de_label = de_by_members[pair.target.members]
            agg.matrix.add(en_label.display, de_label.display)
            agg.collapsed.add(en_label.display, de_label.display)
    return agg


def konjunktiv_share(
    collapsed: CorrespondenceMatrix, row: str
) -> tuple[Fraction, Fraction] | None:
    """Split of a row's Konjunktiv mass between Konjunktiv I and II."""
    k1 = collapsed.counts.get((row, "Konjunktiv I"), 0)
    k2 = collapsed.counts.get((row, "Konjunktiv II"), 0)
    mass = k1 + k2
    if mass == 0:
        return None
    return Fraction(k1, mass), Fraction(k2, mass)


def _argmax_column(matrix: CorrespondenceMatrix, row: str) -> str | None:
    if matrix.row_total(row) == 0:
        return None
    return max(
        matrix.column_labels, key=lambda col: matrix.counts.get((row, col), 0)
    )


def qualitative_checks(agg: CorpusAggregates) -> list[CheckResult]:
    checks = []

    top = _argmax_column(agg.collapsed, "presPerf")
    if top is None:
        checks.append(
            CheckResult(
                "perfekt-dominates-present-perfect", None, "no presPerf pairs"
            )
        )
    else:
        checks.append(
            CheckResult(
                "perfekt-dominates-present-perfect",
                top == "Perfekt",
                f"most frequent correspondent of presPerf is {top}",
            )
        )

    cond_rows = [
        row
        for row in ("condI", "condIProg", "condII", "condIIProg")
        if agg.collapsed.row_total(row) > 0
    ]
    if not cond_rows:
        checks.append(
            CheckResult(
                "konjunktiv2-dominates-conditionals", None, "no conditional pairs"
            )
        )
    else:
        tops = {row: _argmax_column(agg.collapsed, row) for row in cond_rows}
        ok = all(top == "Konjunktiv II" for top in tops.values())
        detail = "; ".join(f"{row}->{top}" for row, top in tops.items())
        checks.append(
            CheckResult("konjunktiv2-dominates-conditionals", ok, detail)
        )

    en_total = sum(agg.en_finiteness.values())
    de_total = sum(agg.de_finiteness.values())
    en_nf = en_total - agg.en_finiteness.get("finite", 0)
    de_nf = de_total - agg.de_finiteness.get("finite", 0)
    en_ratio = Fraction(en_nf, en_total) if en_total else Fraction(0)
    de_ratio = Fraction(de_nf, de_total) if de_total else Fraction(0)
    if en_total == 0 or de_total == 0:
        checks.append(
            CheckResult(
                "more-nonfinite-complexes-in-english", None, "a side has no complexes"
            )
        )
    else:
        checks.append(
            CheckResult(
                "more-nonfinite-complexes-in-english",
                en_ratio > de_ratio,
                f"en {en_nf}/{en_total}={fixed_point(en_ratio, 3)} vs "
                f"de {de_nf}/{de_total}={fixed_point(de_ratio, 3)}",
            )
        )

    if agg.de_distribution.total == 0:
        checks.append(
            CheckResult(
                "praesens-most-frequent-german-tense",
                None,
                "no German VCs pass the indicative active finite filter",
            )
        )
    else:
        top_label = max(
            agg.de_distribution.labels,
            key=lambda label: agg.de_distribution.counts.get(label, 0),
        )
        checks.append(
            CheckResult(
                "praesens-most-frequent-german-tense",
                top_label == "Präsens",
                f"most frequent indicative active tense is {top_label}",
            )
        )
    return checks


def compare_to_reference(agg: CorpusAggregates) -> list[ComparisonCell]:
    reference = load_reference_values()
    cells: list[ComparisonCell] = []

    def matrix_cells(dataset_key: str, matrix: CorrespondenceMatrix) -> None:
        dataset = reference[dataset_key]
        name = f"{dataset_key}[{dataset.get('corpus_id', '')}]"
        for row, values in dataset["rows"].items():
            if matrix.row_total(row) == 0:
                continue
            for column, ref_value in zip(dataset["columns"], values):
                if column not in matrix.column_labels:
                    continue
                cells.append(
                    ComparisonCell(
                        name, row, column, matrix.row_frequency(row, column),
                        float(ref_value),
                    )
                )

    matrix_cells("presperf_correspondence", agg.matrix)
    matrix_cells("overall_correspondence", agg.collapsed)
    matrix_cells("conditional_correspondence", agg.collapsed)

    konj = reference["konjunktiv_share"]
    for row, values in konj["rows"].items():
        share = konjunktiv_share(agg.collapsed, row)
        if share is None:
            continue
        for column, ref_value, ours in zip(konj["columns"], values, share):
            cells.append(
                ComparisonCell(
                    f"konjunktiv_share[{konj['corpus_id']}]",
                    row,
                    column,
                    ours,
                    float(ref_value),
                )
            )

    dist_ref = reference["german_tense_distribution"]
    if agg.de_distribution.total > 0:
        for series, values in dist_ref["series"].items():
            for label, ref_value in zip(dist_ref["labels"], values):
                cells.append(
                    ComparisonCell(
                        f"german_tense_distribution[{series}]",
                        label,
                        series,
                        agg.de_distribution.frequency(label),
                        float(ref_value),
                    )
                )

    ratio_ref = reference["nonfinite_ratio"]
    for language, counts in (("en", agg.en_finiteness), ("de", agg.de_finiteness)):
        total = sum(counts.values())
        if total == 0:
            continue
        non_finite = total - counts.get("finite", 0)
        ours = Fraction(non_finite, total)
        for series, values in ratio_ref.items():
            cells.append(
                ComparisonCell(
                    f"nonfinite_ratio[{series}]", language, "non_finite",
                    ours, float(values[language]),
                )
            )
    return cells


def _write_konjunktiv_share_csv(agg: CorpusAggregates, path: Path) -> None:
    with open(path, "w", encoding="utf-8") as sink:
        sink.write("label,Konjunktiv I,Konjunktiv II\n")
        for row in agg.collapsed.row_labels:
            share = konjunktiv_share(agg.collapsed, row)
            if share is None:
                continue
            sink.write(
                f"{row},{fixed_point(share[0])},{fixed_point(share[1])}\n"
            )


def _write_nonfinite_csv(agg: CorpusAggregates, path: Path) -> None:
    with open(path, "w", encoding="utf-8") as sink:
        sink.write("language,non_finite,total,ratio\n")
        for language, counts in (
            ("en", agg.en_finiteness),
            ("de", agg.de_finiteness),
        ):
            total = sum(counts.values())
            non_finite = total - counts.get("finite", 0)
            ratio = Fraction(non_finite, total) if total else Fraction(0)
            sink.write(f"{language},{non_finite},{total},{fixed_point(ratio)}\n")


def _render_figures(agg: CorpusAggregates, out_dir: Path) -> list[Path]:
    from . import figures

    written = []
    matrix = agg.matrix
    series = {}
    for row in ("presPerf", "presPerfProg"):
        if matrix.row_total(row):
            series[row] = [
                float(matrix.row_frequency(row, col)) for col in matrix.column_labels
            ]
    if series:
        written.append(
            figures.grouped_bar_figure(
                matrix.column_labels,
                series,
                out_dir / "presperf_correspondence.png",
                log_scale=True,
            )
        )

    collapsed = agg.collapsed
    rows_with_data = [r for r in collapsed.row_labels if collapsed.row_total(r)]
    if rows_with_data:
        segments = {
            col: [
                float(collapsed.row_frequency(row, col)) for row in rows_with_data
            ]
            for col in collapsed.column_labels
        }
        written.append(
            figures.stacked_bar_figure(
                rows_with_data,
                segments,
                out_dir / "overall_correspondence.png",
            )
        )

    cond_rows = [
        r
        for r in ("condI", "condIProg", "condII", "condIIProg")
        if collapsed.row_total(r)
    ]
    if cond_rows:
        segments = {
            col: [float(collapsed.row_frequency(row, col)) for row in cond_rows]
            for col in collapsed.column_labels
        }
        written.append(
            figures.stacked_bar_figure(
                cond_rows,
                segments,
                out_dir / "conditional_correspondence.png",
            )
        )

    dist = agg.de_distribution
    if dist.total:
        written.append(
            figures.grouped_bar_figure(
                dist.labels,
                {dist.corpus_id or "corpus": [
                    float(dist.frequency(label)) for label in dist.labels
                ]},
                out_dir / "german_tense_distribution.png",
                log_scale=True,
            )
        )
    return written


def run_report(
    en_sentences: Iterable[Sentence],
    de_sentences: Iterable[Sentence],
    alignments: Iterable[AlignmentSet],
    out_dir: str | Path,
    scheme: str = "chain",
    mode: str = "greedy",
    corpus_id: str = "corpus",
    render_figures: bool = True,
    lexicon=None,
    modal_preterite: str = "present",
    require_main_alignment: bool = False,
    tolerance: Fraction = DEFAULT_TOLERANCE,
    diagnostics: Diagnostics | None = None,
) -> ReportResult:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    agg = aggregate_corpus(
        en_sentences,
        de_sentences,
        alignments,
        scheme=scheme,
        mode=mode,
        corpus_id=corpus_id,
        lexicon=lexicon,
        modal_preterite=modal_preterite,
        require_main_alignment=require_main_alignment,
        diagnostics=diagnostics,
    )
    result = ReportResult(aggregates=agg, tolerance=tolerance)

    matrix_csv = out_dir / "correspondence_matrix.csv"
    with open(matrix_csv, "w", encoding="utf-8") as sink:
        agg.matrix.write_csv(sink, emit="freq")
    result.files.append(matrix_csv)

    counts_csv = out_dir / "correspondence_counts.csv"
    with open(counts_csv, "w", encoding="utf-8") as sink:
        agg.matrix.write_csv(sink, emit="count")
    result.files.append(counts_csv)

    collapsed_csv = out_dir / "overall_correspondence.csv"
    with open(collapsed_csv, "w", encoding="utf-8") as sink:
        agg.collapsed.write_csv(sink, emit="freq")
    result.files.append(collapsed_csv)

    presperf_csv = out_dir / "presperf_correspondence.csv"
    with open(presperf_csv, "w", encoding="utf-8") as sink:
        agg.matrix.write_plot_data(sink, rows=("presPerf", "presPerfProg"))
    result.files.append(presperf_csv)

    cond_csv = out_dir / "conditional_correspondence.csv"
    with open(cond_csv, "w", encoding="utf-8") as sink:
        agg.collapsed.write_plot_data(
            sink, rows=("condI", "condIProg", "condII", "condIIProg")
        )
    result.files.append(cond_csv)

    konj_csv = out_dir / "konjunktiv_share.csv"
    _write_konjunktiv_share_csv(agg, konj_csv)
    result.files.append(konj_csv)

    dist_csv = out_dir / "german_tense_distribution.csv"
    with open(dist_csv, "w", encoding="utf-8") as sink:
        agg.de_distribution.write_csv(sink)
    result.files.append(dist_csv)

    nonfinite_csv = out_dir / "nonfinite_ratio.csv"
    _write_nonfinite_csv(agg, nonfinite_csv)
    result.files.append(nonfinite_csv)

    result.checks = qualitative_checks(agg)
    result.comparisons = compare_to_reference(agg)

    comparison_csv = out_dir / "reference_comparison.csv"
    with open(comparison_csv, "w", encoding="utf-8") as sink:
        sink.write("dataset,row,column,ours,reference,delta,within_tolerance\n")
        for cell in result.comparisons:
            sink.write(
                ",".join(
                    (
                        cell.dataset,
                        cell.row,
                        cell.column,
                        fixed_point(cell.ours),
                        f"{cell.reference:.6f}",
                        f"{cell.delta:+.6f}",
                        "1" if cell.within(tolerance) else "0",
                    )
                )
                + "\n"
            )
    result.files.append(comparison_csv)

    checks_txt = out_dir / "qualitative_checks.txt"
    with open(checks_txt, "w", encoding="utf-8") as sink:
        for check in result.checks:
            sink.write(f"{check.status} {check.name}: {check.detail}\n")
    result.files.append(checks_txt)

    if render_figures:
        result.files.extend(_render_figures(agg, out_dir))
    return result
