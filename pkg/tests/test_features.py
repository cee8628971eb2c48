"""Context feature extraction: subjects, temporal words, clause markers."""

from __future__ import annotations

import io

import pytest

from tmvkit.features import (
    FEATURE_COLUMNS,
    TemporalLexicon,
    default_temporal_lexicon,
    extract_context_features,
    write_features,
)
from tmvkit.pipeline import label_sentence
from tmvkit.vc_builder import extract_vcs

from conftest import de, en


def features_for(sentence, which=0, **kwargs):
    pairs = label_sentence(sentence)
    vcs = [vc for vc, _ in pairs]
    vc, label = pairs[which]
    return extract_context_features(sentence, vc, label, all_vcs=vcs, **kwargs)


def test_temporal_adverb_with_direction():
    s = de(
        "s", ("Ich", "ich", "PPER", 2, "SB", "1|Sg"),
        ("komme", "kommen", "VVFIN", 0, "ROOT", "1|Sg|Pres|Ind"),
        ("morgen", "morgen", "ADV", 2, "MO"),
    )
    record = features_for(s)
    assert record.tense_label == "Präsens"
    assert record.subject_lemma == "ich"
    assert record.subject_number == "sg"
    assert record.conditional is False
    assert len(record.temporal) == 1
    expression = record.temporal[0]
    assert expression.lemma == "morgen"
    assert expression.relation == "adverb"
    assert expression.position == 3
    assert expression.direction == "future"
    assert expression.render() == "morgen:adverb:3"


def test_temporal_noun_behind_preposition():
    s = en(
        "s", ("I", "i", "PRP", 2, "SBJ"),
        ("slept", "sleep", "VBD", 0, "ROOT"),
        ("on", "on", "IN", 2, "ADV"),
        ("Monday", "monday", "NNP", 3, "PMOD"),
    )
    record = features_for(s)
    assert len(record.temporal) == 1
    assert record.temporal[0].relation == "on"


def test_modal_may_is_not_the_month():
    s = en(
        "s", ("It", "it", "PRP", 2, "SBJ"),
        ("may", "may", "MD", 0, "ROOT"),
        ("rain", "rain", "VB", 2, "VC"),
        ("in", "in", "IN", 3, "ADV"),
        ("May", "may", "NNP", 4, "PMOD"),
    )
    record = features_for(s)
    assert record.tense_label == "pres"
    # Only the NNP mention matches the lexicon; the modal is a VC member.
    assert [t.position for t in record.temporal] == [5]


def test_temporal_belongs_to_nearest_dominating_complex():
    # "I said yesterday that I will come tomorrow": each temporal word
    # stays with its own clause.
    s = en(
        "s", ("I", "i", "PRP", 2, "SBJ"),
        ("said", "say", "VBD", 0, "ROOT"),
        ("yesterday", "yesterday", "RB", 2, "ADV"),
        ("that", "that", "IN", 2, "OBJ"),
        ("I", "i", "PRP", 6, "SBJ"),
        ("will", "will", "MD", 4, "SUB"),
        ("come", "come", "VB", 6, "VC"),
        ("tomorrow", "tomorrow", "RB", 7, "ADV"),
    )
    outer = features_for(s, which=0)
    inner = features_for(s, which=1)
    assert [t.lemma for t in outer.temporal] == ["yesterday"]
    assert [t.lemma for t in inner.temporal] == ["tomorrow"]
    assert outer.temporal[0].direction == "past"
    assert inner.temporal[0].direction == "future"


def test_conditional_marker_wenn():
    s = de(
        "s", ("Wenn", "wenn", "KOUS", 3, "CP"),
        ("er", "er", "PPER", 3, "SB"),
        ("kommt", "kommen", "VVFIN", 0, "ROOT", "3|Sg|Pres|Ind"),
    )
    record = features_for(s)
    assert record.conditional is True


def test_conditional_if_belongs_to_its_clause():
    # Marker hangs inside the subordinate subtree: the main clause is clean.
    s = en(
        "s", ("If", "if", "IN", 3, "SUB"),
        ("it", "it", "PRP", 3, "SBJ"),
        ("rains", "rain", "VBZ", 4, "SUB"),
        ("stay", "stay", "VB", 0, "ROOT"),
        ("home", "home", "RB", 4, "ADV"),
    )
    pairs = label_sentence(s)
    assert len(pairs) == 2
    rains = next(i for i, (vc, _) in enumerate(pairs) if 3 in vc.members)
    other = 1 - rains
    assert features_for(s, which=rains).conditional is True
    assert features_for(s, which=other).conditional is False


def test_conditional_marker_heading_the_clause_verb():
    # Marker-as-head parse: the marker governs the clause verb directly
    # and its own head walk lands in the main clause, so both complexes
    # count as part of the conditional construction.
    s = en(
        "s", ("If", "if", "IN", 4, "SUB"),
        ("it", "it", "PRP", 3, "SBJ"),
        ("rains", "rain", "VBZ", 1, "SUB"),
        ("stay", "stay", "VB", 0, "ROOT"),
        ("home", "home", "RB", 4, "ADV"),
    )
    pairs = label_sentence(s)
    assert len(pairs) == 2
    for which in range(2):
        assert features_for(s, which=which).conditional is True


def test_subject_with_determiner_and_plural():
    s = en(
        "s", ("The", "the", "DT", 2, "NMOD"),
        ("dogs", "dog", "NNS", 3, "SBJ"),
        ("bark", "bark", "VBP", 0, "ROOT"),
    )
    record = features_for(s)
    assert record.subject_lemma == "dog"
    assert record.subject_determiner == "The"
    assert record.subject_number == "pl"


def test_missing_subject_leaves_fields_empty():
    s = en("s", ("Run", "run", "VB", 0, "ROOT"))
    record = features_for(s)
    assert record.subject_lemma is None
    assert record.subject_determiner is None
    assert record.subject_number is None


def test_vc_pattern_joins_member_pos():
    s = en(
        "s", ("I", "i", "PRP", 2, "SBJ"),
        ("have", "have", "VBP", 0, "ROOT"),
        ("read", "read", "VBN", 2, "VC"),
    )
    record = features_for(s)
    assert record.vc_pattern == "VBP-VBN"
    assert record.main_verb_lemma == "read"
    assert record.vc_indices == (2, 3)


def test_as_dict_round_trips_fields():
    s = de(
        "s", ("Ich", "ich", "PPER", 2, "SB", "1|Sg"),
        ("komme", "kommen", "VVFIN", 0, "ROOT", "1|Sg|Pres|Ind"),
        ("morgen", "morgen", "ADV", 2, "MO"),
    )
    data = features_for(s).as_dict()
    assert data["tense_label"] == "Präsens"
    assert data["temporal"][0]["direction"] == "future"
    assert data["conditional"] is False


def test_custom_temporal_lexicon():
    lexicon = TemporalLexicon({"heuer": "neutral"})
    assert "heuer" in lexicon
    assert "HEUER" in lexicon
    assert lexicon.direction("heuer") == "neutral"
    assert lexicon.direction("morgen") is None
    assert len(lexicon) == 1

    s = de(
        "s", ("Ich", "ich", "PPER", 2, "SB"),
        ("komme", "kommen", "VVFIN", 0, "ROOT", "1|Sg|Pres|Ind"),
        ("heuer", "heuer", "ADV", 2, "MO"),
    )
    record = features_for(s, temporal_lexicon=lexicon)
    assert [t.lemma for t in record.temporal] == ["heuer"]


def test_temporal_lexicon_rejects_bad_direction():
    with pytest.raises(ValueError) as err:
        TemporalLexicon({"soon": "later"})
    assert "later" in str(err.value)


def test_temporal_lexicon_from_stream_defaults_neutral():
    lexicon = TemporalLexicon.from_stream(
        ["# header", "", "gestern\tpast", "montag"]
    )
    assert lexicon.direction("gestern") == "past"
    assert lexicon.direction("montag") == "neutral"


def test_default_lexicon_contents():
    lexicon = default_temporal_lexicon()
    assert lexicon.direction("morgen") == "future"
    assert lexicon.direction("gestern") == "past"
    assert lexicon.direction("tomorrow") == "future"
    assert lexicon.direction("may") == "neutral"


def test_write_features_fills_blanks():
    s = en("s", ("Run", "run", "VB", 0, "ROOT"))
    record = features_for(s)
    sink = io.StringIO()
    write_features([record], sink)
    lines = sink.getvalue().splitlines()
    assert lines[0] == "#columns\t" + "\t".join(FEATURE_COLUMNS)
    fields = lines[1].split("\t")
    assert len(fields) == len(FEATURE_COLUMNS)
    assert fields[FEATURE_COLUMNS.index("subject_lemma")] == "_"
    assert fields[FEATURE_COLUMNS.index("temporal_expressions")] == "_"
    assert fields[FEATURE_COLUMNS.index("conditional")] == "0"


def test_without_all_vcs_domination_is_local():
    s = en(
        "s", ("I", "i", "PRP", 2, "SBJ"),
        ("sleep", "sleep", "VBP", 0, "ROOT"),
        ("today", "today", "RB", 2, "ADV"),
    )
    vc = extract_vcs(s)[0]
    _, label = label_sentence(s)[0]
    record = extract_context_features(s, vc, label)
    assert [t.lemma for t in record.temporal] == ["today"]
