"""German tense/mood/voice classification and the morph fallback lexicon."""

from __future__ import annotations

import io

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tmvkit.labels import (
    SUBJUNCTIVE_TENSES,
    Finiteness,
    GermanTense,
    Mood,
    Voice,
)
from tmvkit.pipeline import label_sentence
from tmvkit.tmv_de import (
    MorphFallbackLexicon,
    default_lexicon,
    finite_tense_mood,
    sein_perfect_lemmas,
)

from conftest import de, tok


def only(result):
    assert len(result) == 1
    return result[0]


def labeled(*specs, lexicon=None):
    sentence = de("s", *specs)
    return only(label_sentence(sentence, lexicon=lexicon))


def test_simple_present():
    _, label = labeled(
        ("Ich", "ich", "PPER", 2, "SB"),
        ("lese", "lesen", "VVFIN", 0, "ROOT", "1|Sg|Pres|Ind"),
    )
    assert label.display == "Präsens"
    assert label.mood is Mood.INDICATIVE
    assert label.voice is Voice.ACTIVE


def test_simple_past():
    _, label = labeled(
        ("Ich", "ich", "PPER", 2, "SB"),
        ("las", "lesen", "VVFIN", 0, "ROOT", "1|Sg|Past|Ind"),
    )
    assert label.display == "Präteritum"


@pytest.mark.parametrize(
    "feats,display",
    [
        ("1|Sg|Pres|Ind", "Perfekt"),
        ("1|Sg|Past|Ind", "Pluperfekt"),
        ("1|Sg|Pres|Subj", "Konj I past"),
        ("1|Sg|Past|Subj", "Konj II past"),
    ],
)
def test_haben_participle_shifts_by_reading(feats, display):
    _, label = labeled(
        ("Ich", "ich", "PPER", 2, "SB"),
        ("habe", "haben", "VAFIN", 0, "ROOT", feats),
        ("gelesen", "lesen", "VVPP", 2, "OC"),
    )
    assert label.display == display


@pytest.mark.parametrize(
    "feats,display",
    [
        ("3|Sg|Pres|Ind", "Futur I"),
        ("3|Sg|Pres|Subj", "Konj I pres"),
        ("3|Sg|Past|Subj", "Konj II pres"),
    ],
)
def test_werden_infinitive_future_family(feats, display):
    _, label = labeled(
        ("Er", "er", "PPER", 2, "SB"),
        ("wird", "werden", "VAFIN", 0, "ROOT", feats),
        ("lesen", "lesen", "VVINF", 2, "OC"),
    )
    assert label.display == display
    assert label.voice is Voice.ACTIVE


def test_werden_past_indicative_noted_as_ill_formed():
    _, label = labeled(
        ("Er", "er", "PPER", 2, "SB"),
        ("wurde", "werden", "VAFIN", 0, "ROOT", "3|Sg|Past|Ind"),
        ("lesen", "lesen", "VVINF", 2, "OC"),
    )
    assert label.display == "Futur I"
    assert "unrecognized-chain" in label.notes


def test_futur_ii():
    _, label = labeled(
        ("Er", "er", "PPER", 2, "SB"),
        ("wird", "werden", "VAFIN", 0, "ROOT", "3|Sg|Pres|Ind"),
        ("gelesen", "lesen", "VVPP", 4, "OC"),
        ("haben", "haben", "VAINF", 2, "OC"),
    )
    assert label.display == "Futur II"
    assert label.voice is Voice.ACTIVE


def test_futur_ii_passive():
    _, label = labeled(
        ("Es", "es", "PPER", 2, "SB"),
        ("wird", "werden", "VAFIN", 0, "ROOT", "3|Sg|Pres|Ind"),
        ("gelesen", "lesen", "VVPP", 4, "OC"),
        ("worden", "werden", "VAPP", 5, "OC"),
        ("sein", "sein", "VAINF", 2, "OC"),
    )
    assert label.display == "Futur II"
    assert label.voice is Voice.PASSIVE


def test_werden_participle_is_present_passive():
    _, label = labeled(
        ("Es", "es", "PPER", 2, "SB"),
        ("wird", "werden", "VAFIN", 0, "ROOT", "3|Sg|Pres|Ind"),
        ("gestohlen", "stehlen", "VVPP", 2, "OC"),
    )
    assert label.display == "Präsens"
    assert label.voice is Voice.PASSIVE


def test_worden_perfect_passive():
    _, label = labeled(
        ("Es", "es", "PPER", 2, "SB"),
        ("ist", "sein", "VAFIN", 0, "ROOT", "3|Sg|Pres|Ind"),
        ("gestohlen", "stehlen", "VVPP", 4, "OC"),
        ("worden", "werden", "VAPP", 2, "OC"),
    )
    assert label.display == "Perfekt"
    assert label.voice is Voice.PASSIVE


def test_sein_perfect_for_movement_verbs():
    _, label = labeled(
        ("Er", "er", "PPER", 2, "SB"),
        ("ist", "sein", "VAFIN", 0, "ROOT", "3|Sg|Pres|Ind"),
        ("gekommen", "kommen", "VVPP", 2, "OC"),
    )
    assert label.display == "Perfekt"
    assert label.voice is Voice.ACTIVE


def test_statal_passive_for_transitive_participles():
    _, label = labeled(
        ("Die", "die", "ART", 2, "NK"),
        ("Tür", "tür", "NN", 3, "SB"),
        ("ist", "sein", "VAFIN", 0, "ROOT", "3|Sg|Pres|Ind"),
        ("geöffnet", "öffnen", "VVPP", 3, "OC"),
    )
    assert label.display == "Präsens"
    assert label.voice is Voice.PASSIVE
    assert "statal-passive" in label.notes


def test_modal_simple_and_perfect():
    _, simple = labeled(
        ("Er", "er", "PPER", 2, "SB"),
        ("muss", "müssen", "VMFIN", 0, "ROOT", "3|Sg|Pres|Ind"),
        ("lesen", "lesen", "VVINF", 2, "OC"),
    )
    assert simple.display == "Präsens"

    _, perfect = labeled(
        ("Er", "er", "PPER", 2, "SB"),
        ("muss", "müssen", "VMFIN", 0, "ROOT", "3|Sg|Pres|Ind"),
        ("gelesen", "lesen", "VVPP", 4, "OC"),
        ("haben", "haben", "VAINF", 2, "OC"),
    )
    assert perfect.display == "Perfekt"


def test_modal_passive():
    _, label = labeled(
        ("Es", "es", "PPER", 2, "SB"),
        ("muss", "müssen", "VMFIN", 0, "ROOT", "3|Sg|Pres|Ind"),
        ("gelesen", "lesen", "VVPP", 4, "OC"),
        ("werden", "werden", "VAINF", 2, "OC"),
    )
    assert label.display == "Präsens"
    assert label.voice is Voice.PASSIVE


def test_modal_konjunktiv():
    _, label = labeled(
        ("Er", "er", "PPER", 2, "SB"),
        ("müsste", "müssen", "VMFIN", 0, "ROOT", "3|Sg|Past|Subj"),
        ("lesen", "lesen", "VVINF", 2, "OC"),
    )
    assert label.display == "Konj II pres"
    assert label.mood is Mood.SUBJUNCTIVE


def test_bare_subjunctive_haben():
    _, label = labeled(
        ("Ich", "ich", "PPER", 2, "SB"),
        ("hätte", "haben", "VAFIN", 0, "ROOT", "1|Sg|Past|Subj"),
        ("gern", "gern", "ADV", 2, "MO"),
    )
    assert label.display == "Konj II pres"


def test_imperative():
    _, label = labeled(
        ("Öffne", "öffnen", "VVIMP", 0, "ROOT"),
        ("die", "die", "ART", 3, "NK"),
        ("Tür", "tür", "NN", 1, "OA"),
    )
    assert label.display == "Präsens"
    assert label.mood is Mood.IMPERATIVE


def test_auxiliary_imperative():
    _, label = labeled(
        ("Sei", "sein", "VAIMP", 0, "ROOT"),
        ("ruhig", "ruhig", "ADJD", 1, "PD"),
    )
    assert label.display == "Präsens"
    assert label.mood is Mood.IMPERATIVE


def test_nonfinite_infinitive_label():
    _, label = labeled(
        ("zu", "zu", "PTKZU", 2, "PM"),
        ("lesen", "lesen", "VVINF", 0, "ROOT"),
    )
    assert label.display == "Infinitive"
    assert label.finiteness is Finiteness.TO_INFINITIVE
    assert not label.progressive


def test_lexicon_fallback_without_morph():
    _, label = labeled(
        ("Er", "er", "PPER", 2, "SB"),
        ("wird", "werden", "VAFIN", 0, "ROOT"),
        ("kommen", "kommen", "VVINF", 2, "OC"),
    )
    assert label.display == "Futur I"
    assert "no-morph" not in label.notes


def test_default_reading_when_nothing_known():
    _, label = labeled(
        ("Er", "er", "PPER", 2, "SB"),
        ("xyzzt", "xyzzen", "VVFIN", 0, "ROOT"),
    )
    assert label.display == "Präsens"
    assert "no-morph" in label.notes


def test_no_progressive_ever():
    sentences = [
        [("Ich", "ich", "PPER", 2, "SB"),
         ("lese", "lesen", "VVFIN", 0, "ROOT", "1|Sg|Pres|Ind")],
        [("Ich", "ich", "PPER", 2, "SB"),
         ("habe", "haben", "VAFIN", 0, "ROOT", "1|Sg|Pres|Ind"),
         ("gelesen", "lesen", "VVPP", 2, "OC")],
    ]
    for specs in sentences:
        _, label = labeled(*specs)
        assert label.progressive is False


def test_subjunctive_tenses_and_mood_imply_each_other():
    combos = [
        ("1|Sg|Pres|Ind", False),
        ("1|Sg|Past|Ind", False),
        ("1|Sg|Pres|Subj", True),
        ("1|Sg|Past|Subj", True),
    ]
    for feats, expect_subj in combos:
        _, label = labeled(
            ("Ich", "ich", "PPER", 2, "SB"),
            ("lese", "lesen", "VVFIN", 0, "ROOT", feats),
        )
        assert (label.mood is Mood.SUBJUNCTIVE) == expect_subj
        assert (label.tense in SUBJUNCTIVE_TENSES) == expect_subj


# ---------------------------------------------------------------------------
# Lexicon mechanics.


def test_lexicon_from_stream_and_lookup():
    text = (
        "# comment\n"
        "de\twird\tVAFIN\tpres\tind\n"
        "de\twürde\tVAFIN\tpast\tsubj\n"
        "de\tlese\tVVFIN\tpres\tind\n"
        "de\tlese\tVVFIN\tpres\tsubj\n"
    )
    lex = MorphFallbackLexicon.from_stream(io.StringIO(text))
    assert lex.lookup("de", "wird", "VAFIN") == frozenset({("pres", "ind")})
    assert lex.lookup("de", "Lese", "VVFIN") == frozenset(
        {("pres", "ind"), ("pres", "subj")}
    )
    assert lex.preferred_reading("de", "lese", "VVFIN") == ("pres", "ind")
    assert lex.preferred_reading("de", "fehlt", "VVFIN") is None


def test_lexicon_pos_fallback():
    lex = MorphFallbackLexicon.from_rows([("de", "wird", "VAFIN", "pres", "ind")])
    assert lex.lookup("de", "wird", "AUX") == frozenset({("pres", "ind")})


def test_lexicon_rejects_short_lines():
    with pytest.raises(ValueError) as err:
        MorphFallbackLexicon.from_stream(io.StringIO("de\twird\tVAFIN\tpres\n"))
    assert "line 1" in str(err.value)
    assert "expected 5 columns" in str(err.value)


def test_finite_tense_mood_layers():
    lex = MorphFallbackLexicon.from_rows(
        [
            ("de", "werde", "VAFIN", "pres", "ind"),
            ("de", "werde", "VAFIN", "pres", "subj"),
        ]
    )
    notes: list[str] = []
    # Morph wins outright.
    token = tok(1, "werde", "werden", "VAFIN", 0, "ROOT", "1|Sg|Past|Subj")
    assert finite_tense_mood(token, lex, notes) == ("past", "subj")
    # Tense without mood reads as indicative.
    token = tok(1, "werde", "werden", "VAFIN", 0, "ROOT", "Tense=pres")
    assert finite_tense_mood(token, lex, notes) == ("pres", "ind")
    # Ambiguous lexicon entry: indicative ranks first.
    token = tok(1, "werde", "werden", "VAFIN", 0, "ROOT")
    assert finite_tense_mood(token, lex, notes) == ("pres", "ind")
    # Morph pins the mood, lexicon supplies the tense for that mood.
    token = tok(1, "werde", "werden", "VAFIN", 0, "ROOT", "Mood=subj")
    assert finite_tense_mood(token, lex, notes) == ("pres", "subj")
    assert notes == []
    # Nothing known anywhere: default with a note.
    token = tok(1, "qqq", "qqq", "VVFIN", 0, "ROOT")
    assert finite_tense_mood(token, lex, notes) == ("pres", "ind")
    assert notes == ["no-morph"]
    # Imperative morph mood normalizes to indicative.
    notes.clear()
    token = tok(1, "öffne", "öffnen", "VVIMP", 0, "ROOT", "Tense=pres|Mood=imp")
    assert finite_tense_mood(token, lex, notes) == ("pres", "ind")


def test_bundled_lexicon_and_sein_perfect_list():
    lex = default_lexicon()
    assert lex.preferred_reading("de", "wird", "VAFIN") == ("pres", "ind")
    assert lex.preferred_reading("de", "hätten", "VAFIN") == ("past", "subj")
    lemmas = sein_perfect_lemmas()
    assert "kommen" in lemmas
    assert "zurücktreten" in lemmas
    assert "sein" in lemmas
    assert "öffnen" not in lemmas


@given(
    st.sampled_from(["pres", "past"]),
    st.sampled_from(["ind", "subj"]),
    st.sampled_from(["simple", "perfect", "future"]),
)
def test_mood_always_matches_label_family(tense, mood, shape):
    feats = f"Tense={tense}|Mood={mood}"
    if shape == "simple":
        specs = [
            ("Ich", "ich", "PPER", 2, "SB"),
            ("lese", "lesen", "VVFIN", 0, "ROOT", feats),
        ]
    elif shape == "perfect":
        specs = [
            ("Ich", "ich", "PPER", 2, "SB"),
            ("habe", "haben", "VAFIN", 0, "ROOT", feats),
            ("gelesen", "lesen", "VVPP", 2, "OC"),
        ]
    else:
        specs = [
            ("Ich", "ich", "PPER", 2, "SB"),
            ("werde", "werden", "VAFIN", 0, "ROOT", feats),
            ("lesen", "lesen", "VVINF", 2, "OC"),
        ]
    _, label = labeled(*specs)
    assert (label.mood is Mood.SUBJUNCTIVE) == (mood == "subj")
    assert isinstance(label.tense, GermanTense)
