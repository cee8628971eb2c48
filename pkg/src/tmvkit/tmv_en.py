"""Tense/mood/voice classification for English verbal complexes.

The finite chain decomposes into layers: a tense-bearing head (finite verb
or modal), an optional perfect layer (have + participle), an optional
progressive layer (be + VBG) and an optional passive layer (be/get +
participle over the lexical verb). The sixteen finite combinations plus the
non-finite forms cover the whole label space.
"""

from __future__ import annotations

from .corpus_io import Sentence, Token
from .labels import EnglishTense, Finiteness, Language, Mood, TMVLabel, Voice
from .vc_builder import VerbalComplex, finiteness_of, is_particle

FUTURE_MODALS = {"will", "shall"}
CONDITIONAL_MODALS = {"would"}
PRETERITE_MODALS = {"could", "might", "should"}

# Contracted and clipped modal forms the lemmatizer may leave unresolved.
_FORM_LEMMA = {
    "'ll": "will", "ll": "will", "wo": "will", "'d": "would",
    "ca": "can", "sha": "shall", "'s": "be", "'re": "be", "'m": "be",
    "'ve": "have",
}

_COMPOSE = {
    ("present", False, False): EnglishTense.PRESENT_SIMPLE,
    ("present", False, True): EnglishTense.PRESENT_PROGRESSIVE,
    ("present", True, False): EnglishTense.PRESENT_PERFECT,
    ("present", True, True): EnglishTense.PRESENT_PERFECT_PROGRESSIVE,
    ("past", False, False): EnglishTense.PAST_SIMPLE,
    ("past", False, True): EnglishTense.PAST_PROGRESSIVE,
    ("past", True, False): EnglishTense.PAST_PERFECT,
    ("past", True, True): EnglishTense.PAST_PERFECT_PROGRESSIVE,
    ("future", False, False): EnglishTense.FUTURE_I,
    ("future", False, True): EnglishTense.FUTURE_I_PROGRESSIVE,
    ("future", True, False): EnglishTense.FUTURE_II,
    ("future", True, True): EnglishTense.FUTURE_II_PROGRESSIVE,
    ("conditional", False, False): EnglishTense.CONDITIONAL_I,
    ("conditional", False, True): EnglishTense.CONDITIONAL_I_PROGRESSIVE,
    ("conditional", True, False): EnglishTense.CONDITIONAL_II,
    ("conditional", True, True): EnglishTense.CONDITIONAL_II_PROGRESSIVE,
}

_NONFINITE_TENSE = {
    Finiteness.GERUND: EnglishTense.GERUND,
    Finiteness.TO_INFINITIVE: EnglishTense.TO_INFINITIVE,
    Finiteness.BARE_INFINITIVE: EnglishTense.BARE_INFINITIVE,
    Finiteness.PARTICIPLE: EnglishTense.BARE_INFINITIVE,
}


def en_lemma(token: Token) -> str:
    lemma = token.lemma.lower()
    if lemma and lemma != token.form.lower():
        return lemma
    form = token.form.lower()
    if form in _FORM_LEMMA:
        return _FORM_LEMMA[form]
    return lemma if lemma else form


def _modal_base(lemma: str, modal_preterite: str) -> str:
    if lemma in FUTURE_MODALS:
        return "future"
    if lemma in CONDITIONAL_MODALS:
        return "conditional"
    if modal_preterite == "past" and lemma in PRETERITE_MODALS:
        return "past"
    return "present"


def _is_going_to(verbs: list[Token], particles: list[Token], start: int) -> bool:
    """True when verbs[start] is finite "be" heading go+to+infinitive."""
    if start + 2 > len(verbs) - 1:
        return False
    head, going, target = verbs[start], verbs[start + 1], verbs[start + 2]
    if en_lemma(head) != "be":
        return False
    if en_lemma(going) != "go" or going.pos != "VBG":
        return False
    between = [p for p in particles
               if going.index < p.index < target.index and p.form.lower() == "to"]
    return bool(between)


def classify_en(vc: VerbalComplex, sentence: Sentence,
                modal_preterite: str = "present") -> TMVLabel:
    """Label one English verbal complex.

    `modal_preterite` switches could/might/should between a present base
    (default) and a past base. "would" always selects the conditional.
    """
    tokens = vc.tokens(sentence)
    verbs = [t for t in tokens if not is_particle(t)]
    particles = [t for t in tokens if is_particle(t)]
    finiteness = finiteness_of(vc, sentence)
    notes: list[str] = list(vc.notes)
    imperative = "imperative" in vc.notes

    carried = None
    if vc.carried_finite is not None:
        carried = sentence.token(vc.carried_finite)

    if finiteness is Finiteness.FINITE or carried is not None:
        anchor = vc.finite_token(sentence) if finiteness is Finiteness.FINITE else carried
        assert anchor is not None
        walk = list(verbs)
        if carried is not None:
            walk = [carried] + walk
        elif walk and walk[0].index != anchor.index:
            walk.sort(key=lambda t: 0 if t.index == anchor.index else 1)
            notes.append("reordered-chain")

        base = "present"
        i = 0
        head = walk[0]
        lemma = en_lemma(head)
        if head.pos == "MD":
            base = _modal_base(lemma, modal_preterite)
            i = 1
        elif _is_going_to(walk, particles, 0):
            base = "future"
            i = 2
        elif head.pos in ("VBZ", "VBP"):
            base = "present"
            i = 0
        elif head.pos == "VBD":
            base = "past"
            i = 0
        elif imperative:
            base = "present"
            i = 0
        else:
            notes.append("unrecognized-head")

        perfect = progressive = passive = False
        while i < len(walk) - 1:
            current, following = walk[i], walk[i + 1]
            lemma = en_lemma(current)
            if lemma == "have" and following.pos == "VBN":
                perfect = True
            elif lemma == "be" and following.pos == "VBG":
                if _is_going_to(walk, particles, i):
                    base = "future"
                    i += 1
                else:
                    progressive = True
            elif lemma in ("be", "get") and following.pos == "VBN":
                passive = True
            elif lemma == "do" and following.pos in ("VB", "VBP", "VBZ", "VBD"):
                pass  # do-support adds no layer
            else:
                notes.append("unrecognized-chain")
            i += 1

        tense = _COMPOSE[(base, perfect, progressive)]
        mood = Mood.IMPERATIVE if imperative else Mood.INDICATIVE
        return TMVLabel(
            language=Language.EN,
            tense=tense,
            mood=mood,
            voice=Voice.PASSIVE if passive else Voice.ACTIVE,
            finiteness=Finiteness.FINITE,
            progressive=progressive,
            notes=tuple(notes),
        )

    # Non-finite: layer flags fold into voice/progressive, the finiteness
    # category itself is the tense label.
    progressive = passive = False
    i = 0
    while i < len(verbs) - 1:
        current, following = verbs[i], verbs[i + 1]
        lemma = en_lemma(current)
        if lemma == "have" and following.pos == "VBN":
            pass  # perfect has no slot on non-finite labels
        elif lemma == "be" and following.pos == "VBG":
            progressive = True
        elif lemma in ("be", "get") and following.pos == "VBN":
            passive = True
        else:
            notes.append("unrecognized-chain")
        i += 1
    if finiteness is Finiteness.PARTICIPLE:
        # A bare participle clause is the passive participle form.
        passive = True
    return TMVLabel(
        language=Language.EN,
        tense=_NONFINITE_TENSE[finiteness],
        mood=Mood.INDICATIVE,
        voice=Voice.PASSIVE if passive else Voice.ACTIVE,
        finiteness=finiteness,
        progressive=progressive,
        notes=tuple(notes),
    )
