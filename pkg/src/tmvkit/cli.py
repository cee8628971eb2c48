"""Command line: annotate, pair and summarize dependency-parsed corpora.

Output ordering is canonical (input order) regardless of the number of
worker processes, so repeated runs and different --jobs settings produce
byte-identical files. Diagnostics go to stderr and never into output.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import replace
from fractions import Fraction
from multiprocessing import Pool
from pathlib import Path
from typing import IO, Iterable, Iterator

from .corpus_io import (
    ANNOTATION_COLUMNS,
    INDEXINGS,
    LAYOUTS,
    Diagnostics,
    parse_alignment,
    parse_conll,
    read_tsv_rows,
    write_annotated,
)
from .features import (
    CONDITIONAL_MARKERS,
    TemporalLexicon,
    default_temporal_lexicon,
    extract_context_features,
    write_features,
)
from .labels import Language
from .pair_extractor import PAIR_MODES
from .pipeline import PAIR_COLUMNS, annotation_rows, label_sentence, pair_rows, pair_sentence
from .reference import explain, rules_dump
from .reports import run_report
from .stats import (
    DIRECTIONS,
    CorrespondenceMatrix,
    LabelFilter,
    TenseDistribution,
    lemma_tense_profile,
)
from .tmv_de import MorphFallbackLexicon
from .vc_builder import SCHEMES

logger = logging.getLogger("tmvkit")

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_USAGE = 2

LEXICON_DIR_ENV = "TMVKIT_LEXICON_DIR"


def _env_lexicon_path(filename: str) -> str | None:
    directory = os.environ.get(LEXICON_DIR_ENV)
    if not directory:
        return None
    candidate = Path(directory) / filename
    return str(candidate) if candidate.is_file() else None


def _open_input(path: str) -> IO[str]:
    if path == "-":
        return sys.stdin
    return open(path, encoding="utf-8")


def _open_output(path: str) -> IO[str]:
    if path == "-":
        return sys.stdout
    return open(path, "w", encoding="utf-8", newline="\n")


def _close(handle: IO[str]) -> None:
    if handle not in (sys.stdin, sys.stdout):
        handle.close()


def _iter_blocks(stream: Iterable[str]) -> Iterator[str]:
    """Sentence blocks of a CoNLL stream, blank-line separated."""
    buffer: list[str] = []
    for line in stream:
        if line.strip() == "":
            if buffer:
                yield "".join(buffer)
                buffer = []
        else:
            buffer.append(line)
    if buffer:
        yield "".join(buffer)


def _drain(part: Diagnostics, main: Diagnostics) -> None:
    if not main.quiet:
        for message in part.errors:
            logger.error(message)
        for message in part.warnings:
            logger.warning(message)
    main.merge(part)


# Worker state lives in module globals so Pool can fork cheaply; every
# entry is set by the initializer before imap hands out work.
_WORKER: dict = {}


def _init_annotate(language: str, layout: str, scheme: str,
                   modal_preterite: str, lexicon_path: str | None) -> None:
    _WORKER.clear()
    _WORKER["language"] = Language(language)
    _WORKER["layout"] = layout
    _WORKER["scheme"] = scheme
    _WORKER["modal_preterite"] = modal_preterite
    _WORKER["lexicon"] = (
        MorphFallbackLexicon.from_path(lexicon_path) if lexicon_path else None
    )


def _annotate_block(item: tuple[int, str]) -> tuple[str | None, list, Diagnostics]:
    ordinal, block = item
    diag = Diagnostics(quiet=True)
    sentences = list(
        parse_conll(
            block.splitlines(),
            _WORKER["language"],
            layout=_WORKER["layout"],
            diagnostics=diag,
        )
    )
    if not sentences:
        return None, [], diag
    sentence = sentences[0]
    if "sent_id" not in block:
        sentence = replace(sentence, id=f"s:{ordinal}")
    labeled = label_sentence(
        sentence,
        scheme=_WORKER["scheme"],
        lexicon=_WORKER["lexicon"],
        modal_preterite=_WORKER["modal_preterite"],
    )
    return sentence.id, annotation_rows(sentence, labeled), diag


def _init_pairs(layout: str, scheme: str, mode: str, indexing: str,
                require_main: bool, modal_preterite: str,
                lexicon_path: str | None) -> None:
    _WORKER.clear()
    _WORKER["layout"] = layout
    _WORKER["scheme"] = scheme
    _WORKER["mode"] = mode
    _WORKER["indexing"] = indexing
    _WORKER["require_main"] = require_main
    _WORKER["modal_preterite"] = modal_preterite
    _WORKER["lexicon"] = (
        MorphFallbackLexicon.from_path(lexicon_path) if lexicon_path else None
    )


def _pair_block(item: tuple[int, str, str, str]) -> tuple[list, Diagnostics]:
    ordinal, en_block, de_block, align_line = item
    diag = Diagnostics(quiet=True)
    en_sentences = list(
        parse_conll(en_block.splitlines(), Language.EN,
                    layout=_WORKER["layout"], diagnostics=diag)
    )
    de_sentences = list(
        parse_conll(de_block.splitlines(), Language.DE,
                    layout=_WORKER["layout"], diagnostics=diag)
    )
    alignments = list(
        parse_alignment([align_line], indexing=_WORKER["indexing"],
                        diagnostics=diag)
    )
    if not en_sentences or not de_sentences or not alignments:
        diag.error(f"pair {ordinal}: a side failed to parse, skipping")
        return [], diag
    en_sentence = en_sentences[0]
    de_sentence = de_sentences[0]
    if "sent_id" not in en_block:
        en_sentence = replace(en_sentence, id=f"s:{ordinal}")
    if "sent_id" not in de_block:
        de_sentence = replace(de_sentence, id=f"s:{ordinal}")
    alignment = replace(alignments[0], id=str(ordinal))
    _, labeled = pair_sentence(
        en_sentence,
        de_sentence,
        alignment,
        scheme=_WORKER["scheme"],
        mode=_WORKER["mode"],
        require_main_alignment=_WORKER["require_main"],
        lexicon=_WORKER["lexicon"],
        modal_preterite=_WORKER["modal_preterite"],
        diagnostics=diag,
    )
    return pair_rows(en_sentence, de_sentence, labeled), diag


def _map_ordered(worker, items, jobs: int, initializer, initargs):
    """imap with worker processes, or the same loop in-process for jobs=1."""
    if jobs <= 1:
        initializer(*initargs)
        for item in items:
            yield worker(item)
        return
    with Pool(jobs, initializer=initializer, initargs=initargs) as pool:
        yield from pool.imap(worker, items, chunksize=16)


def _comma_set(value: str | None) -> frozenset[str] | None:
    if value is None:
        return None
    return frozenset(part.strip() for part in value.split(",") if part.strip())


def _apply_config(args: argparse.Namespace, argv: list[str]) -> None:
    """Fill settings from a key=value file; explicit flags keep priority."""
    if not getattr(args, "config", None):
        return
    explicit = set()
    for token in argv:
        if token.startswith("--"):
            explicit.add(token[2:].split("=", 1)[0].replace("-", "_"))
    with open(args.config, encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(
                    f"{args.config}: line {line_no}: expected key=value, got {line!r}"
                )
            key, value = (part.strip() for part in line.split("=", 1))
            key = key.replace("-", "_")
            if key in explicit or not hasattr(args, key):
                continue
            current = getattr(args, key)
            if isinstance(current, bool):
                setattr(args, key, value.lower() in ("1", "true", "yes", "on"))
            elif isinstance(current, int):
                setattr(args, key, int(value))
            elif isinstance(current, float):
                setattr(args, key, float(value))
            else:
                setattr(args, key, value)


def _finish(diag: Diagnostics) -> int:
    summary = diag.summary()
    if summary:
        print(summary, file=sys.stderr)
    return EXIT_INPUT if diag.errors else EXIT_OK


def _cmd_annotate(args: argparse.Namespace) -> int:
    diag = Diagnostics()
    lexicon_path = args.lexicon or _env_lexicon_path("aux_lexicon.tsv")
    stream = _open_input(args.input)
    sink = _open_output(args.output)
    try:
        items = ((i, block) for i, block in enumerate(_iter_blocks(stream), 1))
        results = _map_ordered(
            _annotate_block,
            items,
            args.jobs,
            _init_annotate,
            (args.lang, args.layout, args.scheme, args.modal_preterite,
             lexicon_path),
        )

        def rows_by_sentence():
            for sentence_id, rows, part in results:
                _drain(part, diag)
                if sentence_id is not None:
                    yield sentence_id, rows

        write_annotated(rows_by_sentence(), sink)
    finally:
        _close(stream)
        _close(sink)
    return _finish(diag)


def _cmd_pairs(args: argparse.Namespace) -> int:
    diag = Diagnostics()
    lexicon_path = args.lexicon or _env_lexicon_path("aux_lexicon.tsv")
    en_stream = _open_input(args.en)
    de_stream = _open_input(args.de)
    align_stream = _open_input(args.alignment)
    sink = _open_output(args.output)
    try:
        align_lines = (line for line in align_stream)

        def items():
            ordinal = 0
            en_blocks = _iter_blocks(en_stream)
            de_blocks = _iter_blocks(de_stream)
            sentinel = object()
            while True:
                en = next(en_blocks, sentinel)
                de = next(de_blocks, sentinel)
                al = next(align_lines, sentinel)
                present = [x is not sentinel for x in (en, de, al)]
                if not any(present):
                    return
                ordinal += 1
                if not all(present):
                    missing = [
                        name
                        for name, here in zip(("en", "de", "alignment"), present)
                        if not here
                    ]
                    diag.error(
                        f"pair {ordinal}: parallel inputs differ in length; "
                        "exhausted: " + ", ".join(missing)
                    )
                    return
                yield ordinal, en, de, al

        results = _map_ordered(
            _pair_block,
            items(),
            args.jobs,
            _init_pairs,
            (args.layout, args.scheme, args.mode, args.indexing,
             args.require_main_alignment, args.modal_preterite, lexicon_path),
        )
        sink.write("#columns\t" + "\t".join(PAIR_COLUMNS) + "\n")
        pair_count = 0
        sentence_count = 0
        for rows, part in results:
            _drain(part, diag)
            sentence_count += 1
            for row in rows:
                pair_count += 1
                sink.write("\t".join(row) + "\n")
        sink.write(f"#sentence_pairs\t{sentence_count}\n")
        sink.write(f"#vc_pairs\t{pair_count}\n")
    finally:
        _close(en_stream)
        _close(de_stream)
        _close(align_stream)
        _close(sink)
    return _finish(diag)


def _cmd_stats(args: argparse.Namespace) -> int:
    matrix = CorrespondenceMatrix(
        direction=args.direction,
        collapse_konjunktiv=args.collapse_konjunktiv,
        corpus_id=args.corpus_id,
    )
    en_moods = _comma_set(args.en_mood)
    de_moods = _comma_set(args.de_mood)
    en_voices = _comma_set(args.en_voice)
    de_voices = _comma_set(args.de_voice)
    stream = _open_input(args.input)
    try:
        for row in read_tsv_rows(stream, columns=PAIR_COLUMNS):
            if en_moods is not None and row.get("en_mood") not in en_moods:
                continue
            if de_moods is not None and row.get("de_mood") not in de_moods:
                continue
            if en_voices is not None and row.get("en_voice") not in en_voices:
                continue
            if de_voices is not None and row.get("de_voice") not in de_voices:
                continue
            if args.direction == "en-de":
                matrix.add(row["en_label"], row["de_label"])
            else:
                matrix.add(row["de_label"], row["en_label"])
    finally:
        _close(stream)

    sink = _open_output(args.output)
    try:
        if args.emit == "json":
            json.dump(matrix.to_json_dict(), sink, ensure_ascii=False, indent=2)
            sink.write("\n")
        elif args.emit == "plot-data":
            rows = None
            if args.rows:
                rows = [part.strip() for part in args.rows.split(",") if part.strip()]
            matrix.write_plot_data(sink, rows=rows)
        else:
            matrix.write_csv(sink, emit="count" if args.counts else "freq")
    finally:
        _close(sink)
    return EXIT_OK


def _cmd_dist(args: argparse.Namespace) -> int:
    label_filter = LabelFilter(
        moods=_comma_set(args.mood),
        voices=_comma_set(args.voice),
        finiteness=_comma_set(args.finiteness),
        include_imperative=args.include_imperative,
    )
    dist = TenseDistribution(
        language=Language(args.lang),
        corpus_id=args.corpus_id,
        label_filter=label_filter,
        collapse_konjunktiv=args.collapse_konjunktiv,
    )
    stream = _open_input(args.input)
    try:
        for row in read_tsv_rows(stream, columns=ANNOTATION_COLUMNS):
            dist.add_row(
                row["tense_label"], row["mood"], row["voice"], row["finiteness"]
            )
    finally:
        _close(stream)

    sink = _open_output(args.output)
    try:
        if args.emit == "json":
            json.dump(dist.to_json_dict(), sink, ensure_ascii=False, indent=2)
            sink.write("\n")
        else:
            dist.write_csv(sink, emit="count" if args.counts else "freq")
    finally:
        _close(sink)
    return EXIT_OK


def _cmd_lemma_profile(args: argparse.Namespace) -> int:
    stream = _open_input(args.input)
    try:
        records = (
            (row["main_verb_lemma"], row["tense_label"], row["voice"])
            for row in read_tsv_rows(stream, columns=ANNOTATION_COLUMNS)
        )
        profile = lemma_tense_profile(records, args.lemma, voice=args.voice)
    finally:
        _close(stream)

    sink = _open_output(args.output)
    try:
        if args.emit == "json":
            json.dump(
                {
                    "lemma": args.lemma,
                    "voice": args.voice,
                    "counts": dict(
                        sorted(profile.items(), key=lambda kv: (-kv[1], kv[0]))
                    ),
                },
                sink,
                ensure_ascii=False,
                indent=2,
            )
            sink.write("\n")
        else:
            sink.write("label\tcount\n")
            for label, count in sorted(
                profile.items(), key=lambda kv: (-kv[1], kv[0])
            ):
                sink.write(f"{label}\t{count}\n")
    finally:
        _close(sink)
    return EXIT_OK


def _cmd_features(args: argparse.Namespace) -> int:
    diag = Diagnostics()
    language = Language(args.lang)
    lexicon_path = args.lexicon or _env_lexicon_path("aux_lexicon.tsv")
    lexicon = (
        MorphFallbackLexicon.from_path(lexicon_path) if lexicon_path else None
    )
    temporal_path = args.temporal_lexicon or _env_lexicon_path("temporal_terms.tsv")
    temporal = (
        TemporalLexicon.from_path(temporal_path)
        if temporal_path
        else default_temporal_lexicon()
    )
    markers = CONDITIONAL_MARKERS
    if args.conditional_markers:
        markers = frozenset(
            part.strip().lower()
            for part in args.conditional_markers.split(",")
            if part.strip()
        )

    stream = _open_input(args.input)
    records = []
    try:
        for sentence in parse_conll(
            stream, language, layout=args.layout, diagnostics=diag
        ):
            labeled = label_sentence(
                sentence,
                scheme=args.scheme,
                lexicon=lexicon,
                modal_preterite=args.modal_preterite,
            )
            vcs = [vc for vc, _ in labeled]
            for vc, label in labeled:
                records.append(
                    extract_context_features(
                        sentence,
                        vc,
                        label,
                        temporal_lexicon=temporal,
                        all_vcs=vcs,
                        conditional_markers=markers,
                    )
                )
    finally:
        _close(stream)

    sink = _open_output(args.output)
    try:
        if args.emit == "json":
            json.dump(
                [record.as_dict() for record in records],
                sink,
                ensure_ascii=False,
                indent=2,
            )
            sink.write("\n")
        else:
            write_features(records, sink)
    finally:
        _close(sink)
    return _finish(diag)


def _cmd_explain(args: argparse.Namespace) -> int:
    try:
        print(explain(args.label))
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def _cmd_rules_dump(args: argparse.Namespace) -> int:
    print(rules_dump())
    return EXIT_OK


def _cmd_report(args: argparse.Namespace) -> int:
    diag = Diagnostics()
    lexicon_path = args.lexicon or _env_lexicon_path("aux_lexicon.tsv")
    lexicon = (
        MorphFallbackLexicon.from_path(lexicon_path) if lexicon_path else None
    )
    en_stream = _open_input(args.en)
    de_stream = _open_input(args.de)
    align_stream = _open_input(args.alignment)
    try:
        result = run_report(
            parse_conll(en_stream, Language.EN, layout=args.layout,
                        diagnostics=diag),
            parse_conll(de_stream, Language.DE, layout=args.layout,
                        diagnostics=diag),
            parse_alignment(align_stream, indexing=args.indexing,
                            diagnostics=diag),
            args.out,
            scheme=args.scheme,
            mode=args.mode,
            corpus_id=args.corpus_id,
            render_figures=not args.no_figures,
            lexicon=lexicon,
            modal_preterite=args.modal_preterite,
            require_main_alignment=args.require_main_alignment,
            tolerance=Fraction(args.tolerance).limit_denominator(10**9),
            diagnostics=diag,
        )
    finally:
        _close(en_stream)
        _close(de_stream)
        _close(align_stream)
    for line in result.summary_lines():
        print(line)
    return _finish(diag)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="key=value settings file; flags win")
    parser.add_argument("--output", "-o", default="-", help="output path, - for stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tmvkit",
        description=(
            "Annotate dependency-parsed English/German text with "
            "tense/mood/voice, pair verbal complexes across aligned "
            "translations, and summarize correspondences."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    annotate = sub.add_parser(
        "annotate", help="label verbal complexes in a CoNLL file"
    )
    annotate.add_argument("input", help="CoNLL file, - for stdin")
    annotate.add_argument("--lang", required=True, choices=["en", "de"])
    annotate.add_argument("--scheme", default="chain", choices=list(SCHEMES))
    annotate.add_argument("--layout", default="conllu", choices=list(LAYOUTS))
    annotate.add_argument(
        "--modal-preterite", default="present", choices=["present", "past"],
        help="tense bucket for could/might/should",
    )
    annotate.add_argument("--lexicon", help="morphology fallback lexicon TSV")
    annotate.add_argument("--jobs", type=int, default=1)
    _add_common(annotate)
    annotate.set_defaults(func=_cmd_annotate)

    pairs = sub.add_parser(
        "pairs", help="pair verbal complexes across aligned sentences"
    )
    pairs.add_argument("--en", required=True, help="English CoNLL file")
    pairs.add_argument("--de", required=True, help="German CoNLL file")
    pairs.add_argument("--alignment", required=True, help="word alignment file")
    pairs.add_argument("--indexing", default="zero_based", choices=list(INDEXINGS))
    pairs.add_argument("--scheme", default="chain", choices=list(SCHEMES))
    pairs.add_argument("--layout", default="conllu", choices=list(LAYOUTS))
    pairs.add_argument("--mode", default="greedy", choices=list(PAIR_MODES))
    pairs.add_argument("--require-main-alignment", action="store_true")
    pairs.add_argument(
        "--modal-preterite", default="present", choices=["present", "past"]
    )
    pairs.add_argument("--lexicon", help="morphology fallback lexicon TSV")
    pairs.add_argument("--jobs", type=int, default=1)
    _add_common(pairs)
    pairs.set_defaults(func=_cmd_pairs)

    stats = sub.add_parser("stats", help="correspondence matrix from a pair dump")
    stats.add_argument("input", help="pair TSV, - for stdin")
    stats.add_argument("--direction", default="en-de", choices=list(DIRECTIONS))
    stats.add_argument(
        "--emit", default="csv", choices=["csv", "json", "plot-data"]
    )
    stats.add_argument("--counts", action="store_true", help="emit raw counts")
    stats.add_argument("--collapse-konjunktiv", action="store_true")
    stats.add_argument("--rows", help="comma list of source labels for plot-data")
    stats.add_argument("--corpus-id", default="")
    stats.add_argument("--en-mood", help="comma list filter on the English side")
    stats.add_argument("--de-mood", help="comma list filter on the German side")
    stats.add_argument("--en-voice", help="comma list filter on the English side")
    stats.add_argument("--de-voice", help="comma list filter on the German side")
    _add_common(stats)
    stats.set_defaults(func=_cmd_stats)

    dist = sub.add_parser("dist", help="tense distribution from annotated VCs")
    dist.add_argument("input", help="annotated TSV, - for stdin")
    dist.add_argument("--lang", required=True, choices=["en", "de"])
    dist.add_argument("--mood", help="comma list, e.g. indicative")
    dist.add_argument("--voice", help="comma list, e.g. active")
    dist.add_argument("--finiteness", help="comma list, e.g. finite")
    dist.add_argument("--include-imperative", action="store_true")
    dist.add_argument("--collapse-konjunktiv", action="store_true")
    dist.add_argument("--emit", default="csv", choices=["csv", "json"])
    dist.add_argument("--counts", action="store_true")
    dist.add_argument("--corpus-id", default="")
    _add_common(dist)
    dist.set_defaults(func=_cmd_dist)

    profile = sub.add_parser(
        "lemma-profile", help="tense counts for one main verb lemma"
    )
    profile.add_argument("input", help="annotated TSV, - for stdin")
    profile.add_argument("--lemma", required=True)
    profile.add_argument("--voice", choices=["active", "passive"])
    profile.add_argument("--emit", default="tsv", choices=["tsv", "json"])
    _add_common(profile)
    profile.set_defaults(func=_cmd_lemma_profile)

    features = sub.add_parser(
        "features", help="contextual features per verbal complex"
    )
    features.add_argument("input", help="CoNLL file, - for stdin")
    features.add_argument("--lang", required=True, choices=["en", "de"])
    features.add_argument("--scheme", default="chain", choices=list(SCHEMES))
    features.add_argument("--layout", default="conllu", choices=list(LAYOUTS))
    features.add_argument(
        "--modal-preterite", default="present", choices=["present", "past"]
    )
    features.add_argument("--lexicon", help="morphology fallback lexicon TSV")
    features.add_argument("--temporal-lexicon", help="temporal terms file")
    features.add_argument(
        "--conditional-markers", help="comma list replacing the default markers"
    )
    features.add_argument("--emit", default="tsv", choices=["tsv", "json"])
    _add_common(features)
    features.set_defaults(func=_cmd_features)

    explain_cmd = sub.add_parser("explain", help="reference card for a tense label")
    explain_cmd.add_argument("label")
    explain_cmd.set_defaults(func=_cmd_explain)

    rules = sub.add_parser("rules-dump", help="list all classification patterns")
    rules.set_defaults(func=_cmd_rules_dump)

    report = sub.add_parser(
        "report",
        help="full corpus report with tables, figures and reference comparison",
    )
    report.add_argument("--en", required=True, help="English CoNLL file")
    report.add_argument("--de", required=True, help="German CoNLL file")
    report.add_argument("--alignment", required=True, help="word alignment file")
    report.add_argument("--out", required=True, help="output directory")
    report.add_argument("--indexing", default="zero_based", choices=list(INDEXINGS))
    report.add_argument("--scheme", default="chain", choices=list(SCHEMES))
    report.add_argument("--layout", default="conllu", choices=list(LAYOUTS))
    report.add_argument("--mode", default="greedy", choices=list(PAIR_MODES))
    report.add_argument("--require-main-alignment", action="store_true")
    report.add_argument(
        "--modal-preterite", default="present", choices=["present", "past"]
    )
    report.add_argument("--lexicon", help="morphology fallback lexicon TSV")
    report.add_argument("--corpus-id", default="corpus")
    report.add_argument("--no-figures", action="store_true")
    report.add_argument(
        "--tolerance", type=float, default=0.02,
        help="allowed deviation from bundled reference values",
    )
    report.add_argument("--config", help="key=value settings file; flags win")
    report.set_defaults(func=_cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    logging.basicConfig(
        level=logging.WARNING, format="%(levelname)s %(message)s", stream=sys.stderr
    )
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args, list(argv))
    except (OSError, ValueError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"{exc.filename}: no such file", file=sys.stderr)
        return EXIT_INPUT
    except (OSError, ValueError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
