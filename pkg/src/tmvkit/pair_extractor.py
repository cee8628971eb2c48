"""Pair verbal complexes across aligned parallel sentences.

A candidate pair scores the number of word-alignment links that land
inside both complexes. Greedy mode picks the heaviest candidates first;
exhaustive mode searches all one-to-one matchings for small sentences.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .corpus_io import AlignmentSet, Diagnostics, Sentence
from .vc_builder import VerbalComplex

PAIR_MODES = ("greedy", "exhaustive")

# Exhaustive search enumerates permutations; beyond this many complexes
# per side it falls back to greedy.
EXHAUSTIVE_LIMIT = 8


@dataclass(frozen=True)
class VCPair:
    source: VerbalComplex
    target: VerbalComplex
    link_count: int
    main_verb_aligned: bool


@dataclass
class PairResult:
    pairs: list[VCPair] = field(default_factory=list)
    unpaired_source: list[VerbalComplex] = field(default_factory=list)
    unpaired_target: list[VerbalComplex] = field(default_factory=list)
    dropped_links: int = 0


def _usable_links(
    alignment: AlignmentSet,
    source: Sentence,
    target: Sentence,
    diagnostics: Diagnostics | None,
) -> tuple[frozenset[tuple[int, int]], int]:
    links = set()
    dropped = 0
    for i, j in alignment.links:
        if 1 <= i <= len(source.tokens) and 1 <= j <= len(target.tokens):
            links.add((i, j))
        else:
            dropped += 1
            if diagnostics is not None:
                diagnostics.warning(
                    f"alignment {alignment.id}: link {i}-{j} outside "
                    f"{len(source.tokens)}x{len(target.tokens)} sentence pair"
                )
    return frozenset(links), dropped


def _link_count(
    src: VerbalComplex, tgt: VerbalComplex, links: frozenset[tuple[int, int]]
) -> int:
    tgt_members = set(tgt.members)
    return sum(1 for i, j in links if i in src.members and j in tgt_members)


def _candidates(
    source_vcs: list[VerbalComplex],
    target_vcs: list[VerbalComplex],
    links: frozenset[tuple[int, int]],
    require_main_alignment: bool,
) -> list[VCPair]:
    out = []
    for src in source_vcs:
        for tgt in target_vcs:
            count = _link_count(src, tgt, links)
            if count == 0:
                continue
            main_aligned = (src.main_index, tgt.main_index) in links
            if require_main_alignment and not main_aligned:
                continue
            out.append(VCPair(src, tgt, count, main_aligned))
    return out


def _greedy(candidates: list[VCPair]) -> list[VCPair]:
    ordered = sorted(
        candidates,
        key=lambda p: (
            -p.link_count,
            not p.main_verb_aligned,
            p.source.leftmost,
            p.target.leftmost,
        ),
    )
    taken_src: set[tuple[int, ...]] = set()
    taken_tgt: set[tuple[int, ...]] = set()
    chosen = []
    for pair in ordered:
        if pair.source.members in taken_src or pair.target.members in taken_tgt:
            continue
        taken_src.add(pair.source.members)
        taken_tgt.add(pair.target.members)
        chosen.append(pair)
    return chosen


def _exhaustive(
    source_vcs: list[VerbalComplex],
    target_vcs: list[VerbalComplex],
    candidates: list[VCPair],
) -> list[VCPair]:
    by_key = {(p.source.members, p.target.members): p for p in candidates}
    small, large = source_vcs, target_vcs
    swapped = False
    if len(small) > len(large):
        small, large = large, small
        swapped = True

    best: list[VCPair] | None = None
    best_score = (-1, -1)
    slots = list(range(len(large))) + [-1] * len(small)
    for assignment in set(itertools.permutations(slots, len(small))):
        pairs = []
        for s_idx, l_idx in enumerate(assignment):
            if l_idx < 0:
                continue
            if swapped:
                key = (large[l_idx].members, small[s_idx].members)
            else:
                key = (small[s_idx].members, large[l_idx].members)
            pair = by_key.get(key)
            if pair is not None:
                pairs.append(pair)
        score = (
            sum(p.link_count for p in pairs),
            sum(p.main_verb_aligned for p in pairs),
        )
        if score > best_score:
            best_score = score
            best = pairs
    chosen = best or []
    chosen.sort(key=lambda p: (p.source.leftmost, p.target.leftmost))
    return chosen


def pair_vcs(
    source_sentence: Sentence,
    target_sentence: Sentence,
    source_vcs: list[VerbalComplex],
    target_vcs: list[VerbalComplex],
    alignment: AlignmentSet,
    mode: str = "greedy",
    require_main_alignment: bool = False,
    diagnostics: Diagnostics | None = None,
) -> PairResult:
    """Match complexes one-to-one by shared alignment links.

    Links pointing outside either sentence are dropped and counted.
    Exhaustive mode maximizes the total link count, then the number of
    pairs whose main verbs are directly aligned; it falls back to greedy
    when either side has more than EXHAUSTIVE_LIMIT complexes.
    """
    if mode not in PAIR_MODES:
        raise ValueError(f"unknown pairing mode {mode!r}; expected one of {PAIR_MODES}")
    links, dropped = _usable_links(
        alignment, source_sentence, target_sentence, diagnostics
    )
    candidates = _candidates(source_vcs, target_vcs, links, require_main_alignment)
    if mode == "exhaustive" and (
        len(source_vcs) <= EXHAUSTIVE_LIMIT and len(target_vcs) <= EXHAUSTIVE_LIMIT
    ):
        chosen = _exhaustive(source_vcs, target_vcs, candidates)
    else:
        chosen = _greedy(candidates)
    chosen.sort(key=lambda p: (p.source.leftmost, p.target.leftmost))

    paired_src = {p.source.members for p in chosen}
    paired_tgt = {p.target.members for p in chosen}
    result = PairResult(pairs=chosen, dropped_links=dropped)
    result.unpaired_source = [v for v in source_vcs if v.members not in paired_src]
    result.unpaired_target = [v for v in target_vcs if v.members not in paired_tgt]
    return result
