"""Shared builders for hand-written dependency trees."""

from __future__ import annotations

from tmvkit.corpus_io import AlignmentSet, Sentence, Token, parse_feats
from tmvkit.labels import Language


def tok(index: int, form: str, lemma: str, pos: str, head: int,
        deprel: str, feats: str = "") -> Token:
    return Token(index=index, form=form, lemma=lemma, pos=pos,
                 head=head, deprel=deprel, morph=parse_feats(feats))


def sent(sid: str, language: str, *specs) -> Sentence:
    """Build a Sentence from (form, lemma, pos, head, deprel[, feats]) tuples.

    Token indices are assigned from position, starting at 1.
    """
    tokens = []
    for i, spec in enumerate(specs, 1):
        form, lemma, pos, head, deprel = spec[:5]
        feats = spec[5] if len(spec) > 5 else ""
        tokens.append(tok(i, form, lemma, pos, head, deprel, feats))
    return Sentence(id=sid, language=Language(language), tokens=tuple(tokens))


def en(sid: str, *specs) -> Sentence:
    return sent(sid, "en", *specs)


def de(sid: str, *specs) -> Sentence:
    return sent(sid, "de", *specs)


def align(sid: str, pairs: str) -> AlignmentSet:
    """Build an AlignmentSet from 1-based "i-j i-j ..." text."""
    links = set()
    for item in pairs.split():
        i, _, j = item.partition("-")
        links.add((int(i), int(j)))
    return AlignmentSet(id=sid, links=frozenset(links))
