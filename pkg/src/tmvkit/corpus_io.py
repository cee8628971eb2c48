"""Readers and writers for dependency-parsed corpora and word alignments.

Two tab-separated column layouts are supported and must be declared
explicitly (no sniffing):

  conllu   10 columns: INDEX FORM LEMMA UPOS XPOS FEATS HEAD DEPREL DEPS MISC
  conll09  12+ columns: ID FORM LEMMA PLEMMA POS PPOS FEAT PFEAT HEAD PHEAD
           DEPREL PDEPREL ...; predicted columns fill in wherever the gold
           column is "_".

Alignments use the one-pair-per-token "i-j" line format, zero based by
default.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator, Mapping

from .labels import Language

log = logging.getLogger(__name__)

LAYOUTS = ("conllu", "conll09")
INDEXINGS = ("zero_based", "one_based")

# Feature values that identify tense/mood in keyless (conll09-style) FEATS.
_BARE_TENSE = {"pres": "pres", "present": "pres", "past": "past", "pret": "past"}
_BARE_MOOD = {"ind": "ind", "indicative": "ind", "subj": "subj", "sub": "subj",
              "konj": "subj", "subjunctive": "subj", "imp": "imp", "imperative": "imp"}
_BARE_VERBFORM = {"fin": "fin", "inf": "inf", "part": "part", "pp": "part",
                  "ger": "ger", "izu": "inf"}
_BARE_NUMBER = {"sg": "sg", "sing": "sg", "pl": "pl", "plur": "pl"}

_KEY_ALIASES = {"tense": "Tense", "mood": "Mood", "verbform": "VerbForm",
                "number": "Number", "person": "Person", "case": "Case",
                "gender": "Gender", "degree": "Degree"}


class CorpusFormatError(Exception):
    """Unrecoverable input problem (bad layout name, unreadable stream)."""


@dataclass
class Diagnostics:
    """Collects parse and pipeline problems; nothing is dropped silently."""

    errors: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    counts: Counter = field(default_factory=Counter)
    quiet: bool = False

    def error(self, message: str, kind: str = "error") -> None:
        self.errors.append(message)
        self.counts[kind] += 1
        if not self.quiet:
            log.error(message)

    def warning(self, message: str, kind: str = "warning") -> None:
        self.warnings.append(message)
        self.counts[kind] += 1
        if not self.quiet:
            log.warning(message)

    def merge(self, other: "Diagnostics") -> None:
        self.errors.extend(other.errors)
        self.warnings.extend(other.warnings)
        self.counts.update(other.counts)

    def summary(self) -> str:
        parts = [f"{k}={v}" for k, v in sorted(self.counts.items())]
        return ", ".join(parts) if parts else "no problems"


@dataclass(frozen=True)
class Token:
    """One token of a dependency-parsed sentence. Indices are 1-based."""

    index: int
    form: str
    lemma: str
    pos: str
    head: int
    deprel: str
    morph: Mapping[str, str] = field(default_factory=dict)
    upos: str = ""

    def feature(self, key: str) -> str | None:
        return self.morph.get(key)


@dataclass(frozen=True)
class Sentence:
    id: str
    language: Language
    tokens: tuple[Token, ...] = ()

    def __len__(self) -> int:
        return len(self.tokens)

    def token(self, index: int) -> Token:
        if not 1 <= index <= len(self.tokens):
            raise IndexError(f"token index {index} outside sentence {self.id}")
        return self.tokens[index - 1]

    def children(self, index: int) -> list[Token]:
        return [t for t in self.tokens if t.head == index]


@dataclass(frozen=True)
class AlignmentSet:
    """Word alignment links for one sentence pair, 1-based on both sides."""

    id: str
    links: frozenset[tuple[int, int]] = frozenset()

    def __len__(self) -> int:
        return len(self.links)


def parse_feats(feats: str) -> dict[str, str]:
    """Parse a FEATS column into a normalized key->value mapping.

    Handles key=value items and keyless value lists ("3|sg|pres|ind"); for
    keyless items only the vocabularies relevant to classification are
    recognized (tense, mood, verb form, number).
    """
    out: dict[str, str] = {}
    if not feats or feats == "_":
        return out
    for item in feats.split("|"):
        item = item.strip()
        if not item:
            continue
        if "=" in item:
            key, _, value = item.partition("=")
            key = _KEY_ALIASES.get(key.strip().lower(), key.strip())
            value = value.strip()
            if key == "Tense":
                value = _BARE_TENSE.get(value.lower(), value.lower())
            elif key == "Mood":
                value = _BARE_MOOD.get(value.lower(), value.lower())
            elif key == "VerbForm":
                value = _BARE_VERBFORM.get(value.lower(), value.lower())
            out[key] = value
        else:
            low = item.lower()
            if low in _BARE_TENSE:
                out["Tense"] = _BARE_TENSE[low]
            elif low in _BARE_MOOD:
                out["Mood"] = _BARE_MOOD[low]
            elif low in _BARE_VERBFORM:
                out["VerbForm"] = _BARE_VERBFORM[low]
            elif low in _BARE_NUMBER:
                out["Number"] = _BARE_NUMBER[low]
    return out


def format_feats(morph: Mapping[str, str]) -> str:
    if not morph:
        return "_"
    return "|".join(f"{k}={morph[k]}" for k in sorted(morph))


def _unescape(column: str) -> str:
    return "" if column == "_" else column


def _escape(value: str) -> str:
    return value if value else "_"


def _pick(gold: str, predicted: str) -> str:
    return gold if gold != "_" else predicted


def _parse_token_line(columns: list[str], layout: str, line_no: int) -> Token:
    if layout == "conllu":
        if len(columns) != 10:
            raise ValueError(f"line {line_no}: expected 10 columns, got {len(columns)}")
        raw_index, form, lemma, upos, xpos, feats, head, deprel = columns[:8]
    else:
        if len(columns) < 12:
            raise ValueError(
                f"line {line_no}: expected at least 12 columns, got {len(columns)}")
        raw_index = columns[0]
        form = columns[1]
        lemma = _pick(columns[2], columns[3])
        xpos = _pick(columns[4], columns[5])
        upos = "_"
        feats = _pick(columns[6], columns[7])
        head = _pick(columns[8], columns[9])
        deprel = _pick(columns[10], columns[11])
    try:
        index = int(raw_index)
    except ValueError:
        raise ValueError(f"line {line_no}: non-integer token index {raw_index!r}")
    try:
        head_index = int(head) if head != "_" else 0
    except ValueError:
        raise ValueError(f"line {line_no}: non-integer head {head!r}")
    upos_value = _unescape(upos)
    xpos_value = _unescape(xpos)
    return Token(
        index=index,
        form=_unescape(form),
        lemma=_unescape(lemma),
        pos=xpos_value if xpos_value else upos_value,
        head=head_index,
        deprel=_unescape(deprel),
        morph=parse_feats(feats),
        upos=upos_value,
    )


def _validate(tokens: list[Token], sent_id: str, first_line: int,
              diag: Diagnostics) -> bool:
    n = len(tokens)
    for pos, token in enumerate(tokens, start=1):
        if token.index != pos:
            diag.error(
                f"line {first_line}: sentence {sent_id} has non-contiguous "
                f"token indices (saw {token.index} at position {pos})",
                kind="bad-indices")
            return False
        if not 0 <= token.head <= n:
            diag.error(
                f"line {first_line}: sentence {sent_id} head {token.head} "
                f"outside 0..{n}", kind="bad-head")
            return False
    roots = [t.index for t in tokens if t.head == 0]
    if len(roots) > 1:
        diag.warning(
            f"sentence {sent_id}: multiple roots {roots}, keeping all",
            kind="multiple-roots")
    # Cycle check: every token must reach 0 through the head chain.
    for token in tokens:
        seen = set()
        current = token.index
        while current != 0:
            if current in seen:
                diag.error(
                    f"sentence {sent_id}: cyclic head chain at token "
                    f"{token.index}, sentence skipped", kind="cyclic")
                return False
            seen.add(current)
            current = tokens[current - 1].head
    return True


def parse_conll(stream: IO[str] | Iterable[str], language: Language | str,
                layout: str = "conllu", doc_id: str = "s",
                diagnostics: Diagnostics | None = None) -> Iterator[Sentence]:
    """Stream sentences out of a CoNLL-style file.

    Malformed token lines reject the enclosing sentence (with the offending
    line number reported); cyclic or otherwise inconsistent sentences are
    skipped with a diagnostic and parsing continues. Sentence ids come from
    "# sent_id = ..." comments when present, else "{doc_id}:{n}".
    """
    if layout not in LAYOUTS:
        raise CorpusFormatError(f"unknown layout {layout!r}; expected one of {LAYOUTS}")
    language = Language(language)
    diag = diagnostics if diagnostics is not None else Diagnostics()

    tokens: list[Token] = []
    ordinal = 0
    sent_id: str | None = None
    first_line = 0
    block_broken = False

    def flush() -> Sentence | None:
        nonlocal tokens, sent_id, block_broken, ordinal
        result = None
        if tokens and not block_broken:
            ordinal += 1
            this_id = sent_id if sent_id else f"{doc_id}:{ordinal}"
            if _validate(tokens, this_id, first_line, diag):
                result = Sentence(id=this_id, language=language, tokens=tuple(tokens))
        elif tokens and block_broken:
            ordinal += 1
        tokens = []
        sent_id = None
        block_broken = False
        return result

    for line_no, raw in enumerate(stream, start=1):
        line = raw.rstrip("\n").rstrip("\r")
        if not line.strip():
            sentence = flush()
            if sentence is not None:
                yield sentence
            continue
        if line.startswith("#"):
            body = line.lstrip("#").strip()
            if body.startswith("sent_id"):
                _, _, value = body.partition("=")
                if value.strip():
                    sent_id = value.strip()
            continue
        columns = line.split("\t")
        if len(columns) == 1:
            columns = line.split()
        if layout == "conllu" and ("-" in columns[0] or "." in columns[0]):
            continue  # multiword ranges and empty nodes carry no parse
        if not tokens:
            first_line = line_no
        try:
            tokens.append(_parse_token_line(columns, layout, line_no))
        except ValueError as exc:
            diag.error(str(exc), kind="malformed-line")
            block_broken = True
    sentence = flush()
    if sentence is not None:
        yield sentence


def write_conll(sentences: Iterable[Sentence], sink: IO[str],
                layout: str = "conllu") -> int:
    """Serialize sentences back to CoNLL text; returns the sentence count."""
    if layout not in LAYOUTS:
        raise CorpusFormatError(f"unknown layout {layout!r}; expected one of {LAYOUTS}")
    count = 0
    for sentence in sentences:
        sink.write(f"# sent_id = {sentence.id}\n")
        for t in sentence.tokens:
            feats = format_feats(t.morph)
            if layout == "conllu":
                row = (str(t.index), _escape(t.form), _escape(t.lemma),
                       _escape(t.upos), _escape(t.pos), feats,
                       str(t.head), _escape(t.deprel), "_", "_")
            else:
                row = (str(t.index), _escape(t.form), _escape(t.lemma), "_",
                       _escape(t.pos), "_", feats, "_", str(t.head), "_",
                       _escape(t.deprel), "_")
            sink.write("\t".join(row) + "\n")
        sink.write("\n")
        count += 1
    return count


def parse_alignment(stream: IO[str] | Iterable[str], indexing: str = "zero_based",
                    diagnostics: Diagnostics | None = None) -> Iterator[AlignmentSet]:
    """Stream alignment sets, one per input line, converted to 1-based.

    Tokens that do not match "int-int" are skipped with a per-line error;
    duplicate links collapse. Range validation happens later, at pairing
    time, when the sentence lengths are known.
    """
    if indexing not in INDEXINGS:
        raise CorpusFormatError(
            f"unknown indexing {indexing!r}; expected one of {INDEXINGS}")
    diag = diagnostics if diagnostics is not None else Diagnostics()
    offset = 1 if indexing == "zero_based" else 0
    for line_no, raw in enumerate(stream, start=1):
        links: set[tuple[int, int]] = set()
        for item in raw.split():
            src, sep, tgt = item.partition("-")
            if not sep:
                diag.error(f"line {line_no}: bad alignment token {item!r}",
                           kind="bad-link")
                continue
            try:
                i, j = int(src), int(tgt)
            except ValueError:
                diag.error(f"line {line_no}: bad alignment token {item!r}",
                           kind="bad-link")
                continue
            links.add((i + offset, j + offset))
        yield AlignmentSet(id=str(line_no), links=frozenset(links))


ANNOTATION_COLUMNS = (
    "sentence_id", "vc_token_indices", "main_verb_form", "main_verb_lemma",
    "tense_label", "mood", "voice", "finiteness", "progressive",
)


@dataclass
class AnnotationSummary:
    sentences: int = 0
    vcs: int = 0


def write_annotated(rows_by_sentence: Iterable[tuple[str, list[tuple[str, ...]]]],
                    sink: IO[str]) -> AnnotationSummary:
    """Write annotated-VC rows grouped by sentence.

    Takes (sentence_id, rows) groups in corpus order so that sentences with
    zero VCs still count in the trailing metadata. Metadata lines start with
    '#'; readers skip them.
    """
    summary = AnnotationSummary()
    sink.write("#columns\t" + "\t".join(ANNOTATION_COLUMNS) + "\n")
    for _sentence_id, rows in rows_by_sentence:
        summary.sentences += 1
        for row in rows:
            if len(row) != len(ANNOTATION_COLUMNS):
                raise ValueError(
                    f"annotation row has {len(row)} fields, "
                    f"expected {len(ANNOTATION_COLUMNS)}")
            sink.write("\t".join(row) + "\n")
            summary.vcs += 1
    sink.write(f"#sentences\t{summary.sentences}\n")
    sink.write(f"#vcs\t{summary.vcs}\n")
    return summary


def read_tsv_rows(stream: IO[str] | Iterable[str],
                  columns: tuple[str, ...] | None = None) -> Iterator[dict[str, str]]:
    """Read rows from an annotated or pair dump TSV, honoring #columns."""
    header: tuple[str, ...] | None = columns
    for raw in stream:
        line = raw.rstrip("\n")
        if not line:
            continue
        if line.startswith("#"):
            parts = line.split("\t")
            if parts[0] == "#columns":
                header = tuple(parts[1:])
            continue
        if header is None:
            raise CorpusFormatError("TSV stream has no #columns header")
        values = line.split("\t")
        if len(values) != len(header):
            raise CorpusFormatError(
                f"TSV row has {len(values)} fields, expected {len(header)}")
        yield dict(zip(header, values))
