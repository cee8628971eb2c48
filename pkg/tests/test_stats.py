"""Distributions, correspondence matrices and exact-fraction rendering."""

from __future__ import annotations

import io
import json
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tmvkit.labels import Language, display_order
from tmvkit.stats import (
    CorrespondenceMatrix,
    LabelFilter,
    TenseDistribution,
    finiteness_ratio,
    fixed_point,
    lemma_tense_profile,
    write_distribution_table,
)


def test_fixed_point_basic():
    assert fixed_point(Fraction(1, 3)) == "0.333333"
    assert fixed_point(Fraction(2, 3)) == "0.666667"
    assert fixed_point(Fraction(1, 2), 2) == "0.50"
    assert fixed_point(Fraction(0)) == "0.000000"
    assert fixed_point(Fraction(5, 4), 2) == "1.25"
    assert fixed_point(Fraction(-1, 8), 3) == "-0.125"


def test_fixed_point_banker_rounding_on_exact_halves():
    assert fixed_point(Fraction(25, 1000), 2) == "0.02"
    assert fixed_point(Fraction(35, 1000), 2) == "0.04"
    assert fixed_point(Fraction(5, 1000), 2) == "0.00"
    assert fixed_point(Fraction(15, 1000), 2) == "0.02"


@given(st.fractions(min_value=0, max_value=1), st.integers(min_value=1, max_value=9))
def test_fixed_point_width_and_bounds(value, decimals):
    text = fixed_point(value, decimals)
    whole, _, frac = text.partition(".")
    assert len(frac) == decimals
    reconstructed = Fraction(int(whole) * 10**decimals + int(frac), 10**decimals)
    assert abs(reconstructed - value) <= Fraction(1, 2 * 10**decimals)


def test_label_filter_defaults_exclude_imperative():
    f = LabelFilter()
    assert f.accepts("indicative", "active", "finite")
    assert f.accepts("subjunctive", "passive", "finite")
    assert not f.accepts("imperative", "active", "finite")
    assert LabelFilter(include_imperative=True).accepts("imperative", "active", "finite")


def test_label_filter_explicit_moods_override_imperative_default():
    f = LabelFilter(moods=frozenset({"imperative"}))
    assert f.accepts("imperative", "active", "finite")
    assert not f.accepts("indicative", "active", "finite")


def test_label_filter_voice_and_finiteness():
    f = LabelFilter(voices=frozenset({"active"}), finiteness=frozenset({"finite"}))
    assert f.accepts("indicative", "active", "finite")
    assert not f.accepts("indicative", "passive", "finite")
    assert not f.accepts("indicative", "active", "gerund")


def test_label_filter_describe():
    assert LabelFilter().describe() == "mood!=imperative"
    assert LabelFilter(include_imperative=True).describe() == "none"
    described = LabelFilter(
        moods=frozenset({"indicative"}), voices=frozenset({"active"})
    ).describe()
    assert "mood=indicative" in described
    assert "voice=active" in described


def test_matrix_axes_follow_direction():
    en_de = CorrespondenceMatrix(direction="en-de")
    assert en_de.source_language is Language.EN
    assert en_de.row_labels == display_order(Language.EN, False)
    assert en_de.column_labels == display_order(Language.DE, False)
    de_en = CorrespondenceMatrix(direction="de-en")
    assert de_en.row_labels == display_order(Language.DE, False)
    with pytest.raises(ValueError):
        CorrespondenceMatrix(direction="en-fr").row_labels


def test_matrix_add_and_row_frequencies():
    m = CorrespondenceMatrix(direction="en-de")
    m.add("pres", "Präsens", 3)
    m.add("pres", "Perfekt")
    m.add("past", "Präteritum")
    assert m.total == 5
    assert m.row_total("pres") == 4
    assert m.row_frequency("pres", "Präsens") == Fraction(3, 4)
    assert m.row_frequency("pres", "Perfekt") == Fraction(1, 4)
    assert m.row_frequency("futureI", "Präsens") == Fraction(0)
    freqs = m.row_frequencies("pres")
    assert sum(freqs.values()) == 1


def test_matrix_rejects_unknown_labels_with_valid_list():
    m = CorrespondenceMatrix(direction="en-de")
    with pytest.raises(ValueError) as err:
        m.add("presentish", "Präsens")
    message = str(err.value)
    assert "presentish" in message
    assert "pres" in message
    with pytest.raises(ValueError):
        m.add("pres", "Aorist")


def test_matrix_collapse_konjunktiv():
    m = CorrespondenceMatrix(direction="en-de", collapse_konjunktiv=True)
    m.add("condII", "Konj II past")
    m.add("condII", "Konjunktiv II")
    assert m.counts[("condII", "Konjunktiv II")] == 2
    assert "Konj II past" not in m.column_labels
    assert "Konjunktiv II" in m.column_labels


def test_matrix_merge_adds_counts_and_joins_ids():
    a = CorrespondenceMatrix(direction="en-de", corpus_id="europarl")
    a.add("pres", "Präsens", 2)
    b = CorrespondenceMatrix(direction="en-de", corpus_id="opensubs")
    b.add("pres", "Präsens", 1)
    b.add("past", "Perfekt", 4)
    merged = a.merge(b)
    assert merged.counts[("pres", "Präsens")] == 3
    assert merged.counts[("past", "Perfekt")] == 4
    assert merged.corpus_id == "europarl+opensubs"
    assert a.counts[("pres", "Präsens")] == 2


def test_matrix_merge_rejects_other_label_space():
    a = CorrespondenceMatrix(direction="en-de")
    b = CorrespondenceMatrix(direction="de-en")
    with pytest.raises(ValueError):
        a.merge(b)
    c = CorrespondenceMatrix(direction="en-de", collapse_konjunktiv=True)
    with pytest.raises(ValueError):
        a.merge(c)


def test_matrix_csv_count_and_freq():
    m = CorrespondenceMatrix(direction="en-de")
    m.add("pres", "Präsens", 3)
    m.add("pres", "Perfekt", 1)
    counts = io.StringIO()
    m.write_csv(counts, emit="count")
    lines = counts.getvalue().splitlines()
    assert lines[0].startswith("label,Präsens,")
    pres_row = next(line for line in lines if line.startswith("pres,"))
    cells = pres_row.split(",")[1:]
    assert cells[m.column_labels.index("Präsens")] == "3"

    freqs = io.StringIO()
    m.write_csv(freqs, emit="freq")
    pres_row = next(
        line for line in freqs.getvalue().splitlines() if line.startswith("pres,")
    )
    cells = pres_row.split(",")[1:]
    assert cells[m.column_labels.index("Präsens")] == "0.750000"
    assert cells[m.column_labels.index("Perfekt")] == "0.250000"


def test_matrix_plot_data_orientation():
    m = CorrespondenceMatrix(direction="en-de")
    m.add("pres", "Präsens", 1)
    m.add("past", "Präteritum", 1)
    sink = io.StringIO()
    m.write_plot_data(sink, rows=["pres", "past"])
    lines = sink.getvalue().splitlines()
    assert lines[0] == "label,pres,past"
    assert len(lines) == 1 + len(m.column_labels)
    praesens = next(line for line in lines if line.startswith("Präsens,"))
    assert praesens.split(",")[1] == "1.000000"
    with pytest.raises(ValueError):
        m.write_plot_data(io.StringIO(), rows=["nope"])


def test_matrix_json_shape():
    m = CorrespondenceMatrix(direction="en-de", corpus_id="x")
    m.add("pres", "Präsens", 1)
    m.add("pres", "Perfekt", 3)
    data = m.to_json_dict()
    assert data["kind"] == "correspondence_matrix"
    assert data["direction"] == "en-de"
    row = data["row_labels"].index("pres")
    col = data["column_labels"].index("Perfekt")
    assert data["counts"][row][col] == 3
    assert data["row_freq"][row][col] == "0.750000"
    assert data["row_freq_exact"][row][col] == "3/4"
    assert data["row_totals"]["pres"] == 4
    assert data["total"] == 4
    json.dumps(data)


def test_distribution_counts_and_filtering():
    d = TenseDistribution(language=Language.DE)
    assert d.add_row("Präsens", "indicative", "active", "finite")
    assert not d.add_row("Präsens", "imperative", "active", "finite")
    assert d.total == 1
    assert d.frequency("Präsens") == Fraction(1)
    assert d.frequency("Perfekt") == Fraction(0)

    narrow = TenseDistribution(
        language=Language.DE,
        label_filter=LabelFilter(
            moods=frozenset({"indicative"}),
            voices=frozenset({"active"}),
            finiteness=frozenset({"finite"}),
        ),
    )
    assert not narrow.add_row("Präsens", "indicative", "passive", "finite")
    assert not narrow.add_row("Konj II pres", "subjunctive", "active", "finite")
    assert narrow.add_row("Präsens", "indicative", "active", "finite")
    assert narrow.total == 1


def test_distribution_rejects_unknown_label():
    d = TenseDistribution(language=Language.EN)
    with pytest.raises(ValueError) as err:
        d.add("Präsens")
    assert "unknown en label" in str(err.value)


def test_distribution_merge_requires_same_space():
    a = TenseDistribution(language=Language.DE, corpus_id="one")
    a.add("Präsens", 2)
    b = TenseDistribution(language=Language.DE, corpus_id="two")
    b.add("Perfekt", 3)
    merged = a.merge(b)
    assert merged.counts["Präsens"] == 2
    assert merged.counts["Perfekt"] == 3
    assert merged.corpus_id == "one+two"

    other_language = TenseDistribution(language=Language.EN)
    with pytest.raises(ValueError):
        a.merge(other_language)
    other_filter = TenseDistribution(
        language=Language.DE, label_filter=LabelFilter(include_imperative=True)
    )
    with pytest.raises(ValueError):
        a.merge(other_filter)


def test_distribution_csv_and_json():
    d = TenseDistribution(language=Language.DE, corpus_id="mini")
    d.add("Präsens", 3)
    d.add("Perfekt", 1)
    sink = io.StringIO()
    d.write_csv(sink)
    lines = sink.getvalue().splitlines()
    assert lines[0] == "label,mini"
    assert "Präsens,0.750000" in lines
    assert "Perfekt,0.250000" in lines

    counts = io.StringIO()
    d.write_csv(counts, emit="count")
    assert "Präsens,3" in counts.getvalue().splitlines()

    data = d.to_json_dict()
    assert data["kind"] == "tense_distribution"
    idx = data["labels"].index("Präsens")
    assert data["counts"][idx] == 3
    assert data["freq"][idx] == "0.750000"
    assert data["freq_exact"][idx] == "3/4"
    assert data["total"] == 4


def test_distribution_table_multi_series():
    a = TenseDistribution(language=Language.DE, corpus_id="alpha")
    a.add("Präsens", 1)
    b = TenseDistribution(language=Language.DE, corpus_id="beta")
    b.add("Perfekt", 1)
    sink = io.StringIO()
    write_distribution_table([a, b], sink)
    lines = sink.getvalue().splitlines()
    assert lines[0] == "label,alpha,beta"
    praesens = next(line for line in lines if line.startswith("Präsens,"))
    assert praesens == "Präsens,1.000000,0.000000"

    mixed = TenseDistribution(language=Language.EN)
    with pytest.raises(ValueError):
        write_distribution_table([a, mixed], io.StringIO())
    write_distribution_table([], io.StringIO())


def test_row_frequencies_sum_to_one_exactly():
    m = CorrespondenceMatrix(direction="de-en")
    m.add("Präsens", "pres", 7)
    m.add("Präsens", "futureI", 3)
    m.add("Präsens", "presProg", 11)
    assert sum(m.row_frequencies("Präsens").values()) == Fraction(1)


def test_finiteness_ratio():
    values = ["finite", "finite", "gerund", "to_infinitive"]
    non_finite, total, ratio = finiteness_ratio(values)
    assert (non_finite, total) == (2, 4)
    assert ratio == Fraction(1, 2)
    assert finiteness_ratio([]) == (0, 0, Fraction(0))


def test_lemma_tense_profile():
    records = [
        ("lesen", "Präsens", "active"),
        ("lesen", "Präsens", "active"),
        ("lesen", "Perfekt", "active"),
        ("lesen", "Präsens", "passive"),
        ("gehen", "Präsens", "active"),
    ]
    profile = lemma_tense_profile(records, "lesen")
    assert profile == Counter({"Präsens": 3, "Perfekt": 1})
    active_only = lemma_tense_profile(records, "lesen", voice="active")
    assert active_only == Counter({"Präsens": 2, "Perfekt": 1})
    assert lemma_tense_profile(records, "schlafen") == Counter()


_DE_LABELS = list(display_order(Language.DE, False))


@st.composite
def _distributions(draw):
    d = TenseDistribution(language=Language.DE, corpus_id=draw(st.sampled_from("abc")))
    for label in draw(st.lists(st.sampled_from(_DE_LABELS), max_size=12)):
        d.add(label)
    return d


@given(_distributions(), _distributions(), _distributions())
def test_merge_is_associative_and_commutative(x, y, z):
    left = x.merge(y).merge(z)
    right = x.merge(y.merge(z))
    assert left.counts == right.counts
    assert x.merge(y).counts == y.merge(x).counts
    empty = TenseDistribution(language=Language.DE)
    assert x.merge(empty).counts == x.counts
    assert empty.merge(x).counts == x.counts
    assert x.merge(empty).total == x.total


@given(_distributions())
def test_frequencies_sum_to_one_or_zero(d):
    total = sum(d.frequency(label) for label in d.labels)
    assert total == (Fraction(1) if d.total else Fraction(0))
