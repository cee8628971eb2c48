"""Built-in reference data: form correspondences, tense uses, rule listing.

`explain` answers "what does this label mean and what does it translate
to"; `rules_dump` lists every chain pattern the classifiers know.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Use:
    """One reading of a tense, with example sentences per language.

    A language that realizes the reading with a different tense gets a
    redirect note instead of an example.
    """

    name: str
    de_example: str | None = None
    en_example: str | None = None
    de_redirect: str | None = None
    en_redirect: str | None = None


@dataclass(frozen=True)
class UseGroup:
    de_name: str
    en_name: str
    uses: tuple[Use, ...]


USE_GROUPS: tuple[UseGroup, ...] = (
    UseGroup("Präsens", "present tense", (
        Use("non-past",
            de_example="Ich schlafe von 12 bis 7.",
            en_example="I sleep from midnight to seven."),
        Use("futurate",
            de_example="Morgen weiß ich das.",
            en_redirect="future tense (I will know that tomorrow.)"),
    )),
    UseGroup("Präteritum", "simple past", (
        Use("past time",
            de_example="Ich schlief den ganzen Tag.",
            en_example="I slept the whole day."),
    )),
    UseGroup("Futur I", "future tense", (
        Use("future time",
            de_example="Ich werde schlafen.",
            en_example="I will sleep. I am going to sleep."),
    )),
    UseGroup("Perfekt", "present perfect", (
        Use("resultative",
            de_example="Jemand hat mein Auto gestohlen.",
            en_example="Someone has stolen my car."),
        Use("existential",
            de_example="Ich habe (schon mal) Tennis gespielt.",
            en_example="I have played tennis."),
        Use("hot news",
            de_example="Kanzler Schröder ist zurückgetreten.",
            en_example="Chancellor Schröder has resigned."),
        Use("universal",
            de_redirect="Präsens (Ich lebe hier seit 2 Jahren.)",
            en_example="I have lived here for two years."),
        Use("narrative",
            de_example="Ich bin gestern im Theater gewesen.",
            en_redirect="past tense (I was in theater yesterday.)"),
    )),
    UseGroup("Futur II", "future perfect", (
        Use("future results",
            de_example="Ich werde das bis morgen erledigt haben.",
            en_example="I will have done this by tomorrow."),
    )),
    UseGroup("Pluperfekt", "past perfect", (
        Use("pre-past",
            de_example="Ich hatte geschlafen.",
            en_example="I had slept."),
    )),
)

# Form correspondences: (en display, de display, en schema, de schema).
# A None on the English side marks a German form without a direct English
# counterpart.
FORM_CORRESPONDENCES: tuple[tuple[str | None, str, str | None, str], ...] = (
    ("pres", "Präsens", "(I) read", "(Ich) lese"),
    ("presProg", "Präsens", "(I) am reading", "(Ich) lese"),
    ("presPerf", "Perfekt", "(I) have read", "(Ich) habe gelesen"),
    ("presPerfProg", "Perfekt", "(I) have been reading", "(Ich) habe gelesen"),
    ("futureI", "Futur I", "(I) will read / (I) am going to read",
     "(Ich) werde lesen"),
    ("futureIProg", "Futur I",
     "(I) will be reading / (I) am going to be reading", "(Ich) werde lesen"),
    ("futureII", "Futur II", "(I) will have read", "(Ich) werde gelesen haben"),
    ("futureIIProg", "Futur II", "(I) will have been reading",
     "(Ich) werde gelesen haben"),
    ("past", "Präteritum", "(I) read", "(Ich) las"),
    ("pastProg", "Präteritum", "(I) was reading", "(Ich) las"),
    ("pastPerf", "Pluperfekt", "(I) had read", "(Ich) hatte gelesen"),
    ("pastPerfProg", "Pluperfekt", "(I) had been reading", "(Ich) hatte gelesen"),
    ("condI", "Konj II pres", "(I) would read", "(Ich) würde lesen"),
    ("condIProg", "Konj II pres", "(I) would be reading", "(Ich) würde lesen"),
    ("condII", "Konj II past", "(I) would have read", "(Ich) hätte gelesen"),
    ("condIIProg", "Konj II past", "(I) would have been reading",
     "(Ich) hätte gelesen"),
    (None, "Konj I pres", None, "(Er) lese / (Er) werde lesen"),
    (None, "Konj I past", None, "(Er) habe gelesen"),
)

# Query aliases: lowercased key -> (kind, canonical name). Group aliases
# point into USE_GROUPS, label aliases into FORM_CORRESPONDENCES.
_GROUP_BY_DE = {g.de_name.lower(): g for g in USE_GROUPS}
_GROUP_BY_EN = {g.en_name.lower(): g for g in USE_GROUPS}

_LABEL_TO_GROUP = {
    "pres": "Präsens", "presprog": "Präsens",
    "presperf": "Perfekt", "presperfprog": "Perfekt",
    "past": "Präteritum", "pastprog": "Präteritum",
    "pastperf": "Pluperfekt", "pastperfprog": "Pluperfekt",
    "futurei": "Futur I", "futureiprog": "Futur I",
    "futureii": "Futur II", "futureiiprog": "Futur II",
    "präsens": "Präsens", "praesens": "Präsens",
    "präteritum": "Präteritum", "praeteritum": "Präteritum",
    "perfekt": "Perfekt", "pluperfekt": "Pluperfekt",
    "plusquamperfekt": "Pluperfekt", "futur i": "Futur I",
    "futur ii": "Futur II",
    "presentsimple": "Präsens", "presentprogressive": "Präsens",
    "presentperfect": "Perfekt", "presentperfectprogressive": "Perfekt",
    "pastsimple": "Präteritum", "pastprogressive": "Präteritum",
    "pastperfect": "Pluperfekt", "pastperfectprogressive": "Pluperfekt",
}

_LABEL_ALIASES = {
    "condi": "condI", "condiprog": "condIProg", "condii": "condII",
    "condiiprog": "condIIProg",
    "conditionali": "condI", "conditionaliprogressive": "condIProg",
    "conditionalii": "condII", "conditionaliiprogressive": "condIIProg",
    "konj i pres": "Konj I pres", "konj i past": "Konj I past",
    "konj ii pres": "Konj II pres", "konj ii past": "Konj II past",
    "konjunktivi_present": "Konj I pres", "konjunktivi_past": "Konj I past",
    "konjunktivii_present": "Konj II pres", "konjunktivii_past": "Konj II past",
    "konjunktiv i": "Konj I pres", "konjunktiv ii": "Konj II pres",
}


def valid_explain_keys() -> list[str]:
    keys = []
    for group in USE_GROUPS:
        keys.append(group.de_name)
        keys.append(group.en_name)
    for en, de, _, _ in FORM_CORRESPONDENCES:
        if en and en not in keys:
            keys.append(en)
        if de not in keys:
            keys.append(de)
    return keys


def _correspondence_lines(names: set[str]) -> list[str]:
    lines = []
    for en, de, en_schema, de_schema in FORM_CORRESPONDENCES:
        if (en and en in names) or de in names:
            left = f"{en} [{en_schema}]" if en else "(no English counterpart)"
            lines.append(f"  {left}  <->  {de} [{de_schema}]")
    return lines


def explain(query: str) -> str:
    """Reference text for a tense label or a tense group name.

    Raises ValueError for unknown labels, listing the valid ones.
    """
    normalized = query.strip().lower()
    group = _GROUP_BY_DE.get(normalized) or _GROUP_BY_EN.get(normalized)
    display: str | None = None
    if group is None and normalized in _LABEL_TO_GROUP:
        group = _GROUP_BY_DE[_LABEL_TO_GROUP[normalized].lower()]
        display = query.strip()
    if group is None and normalized in _LABEL_ALIASES:
        display = _LABEL_ALIASES[normalized]
    corr_names = {normalized, query.strip()}
    if display:
        corr_names.add(display)
    if group:
        corr_names.update({group.de_name, group.en_name})
        for en, de, _, _ in FORM_CORRESPONDENCES:
            if de == group.de_name and en:
                corr_names.add(en)

    corr = _correspondence_lines(corr_names)
    if group is None and not corr:
        valid = ", ".join(valid_explain_keys())
        raise ValueError(f"unknown label {query!r}; valid labels: {valid}")

    lines = []
    if group is not None:
        german_side = normalized in _GROUP_BY_DE or (
            display is None and normalized in _LABEL_TO_GROUP
            and normalized not in {"pres", "presprog", "presperf",
                                   "presperfprog", "past", "pastprog",
                                   "pastperf", "pastperfprog", "futurei",
                                   "futureiprog", "futureii", "futureiiprog",
                                   "presentsimple", "presentprogressive",
                                   "presentperfect",
                                   "presentperfectprogressive", "pastsimple",
                                   "pastprogressive", "pastperfect",
                                   "pastperfectprogressive"})
        lines.append(f"{group.de_name} / {group.en_name}")
        lines.append("uses:")
        for use in group.uses:
            if german_side:
                if use.de_example:
                    lines.append(f"  {use.name}: {use.de_example}")
                elif use.de_redirect:
                    lines.append(f"  {use.name}: -> {use.de_redirect}")
            else:
                if use.en_example:
                    lines.append(f"  {use.name}: {use.en_example}")
                elif use.en_redirect:
                    lines.append(f"  {use.name}: -> {use.en_redirect}")
    if corr:
        lines.append("form correspondences:")
        lines.extend(corr)
    return "\n".join(lines)


# Schematic chain patterns per label, mirrored by the classifier tests.
EN_RULE_ROWS: tuple[tuple[str, str, str], ...] = (
    ("V[VBZ|VBP]", "(I) read", "pres"),
    ("be[fin,pres] + V[VBG]", "(I) am reading", "presProg"),
    ("have[VBZ|VBP] + V[VBN]", "(I) have read", "presPerf"),
    ("have[VBZ|VBP] + been + V[VBG]", "(I) have been reading", "presPerfProg"),
    ("V[VBD]", "(I) read", "past"),
    ("be[VBD] + V[VBG]", "(I) was reading", "pastProg"),
    ("have[VBD] + V[VBN]", "(I) had read", "pastPerf"),
    ("have[VBD] + been + V[VBG]", "(I) had been reading", "pastPerfProg"),
    ("will|shall + V[VB]", "(I) will read", "futureI"),
    ("be[fin] + going + to + V[VB]", "(I) am going to read", "futureI"),
    ("will|shall + be + V[VBG]", "(I) will be reading", "futureIProg"),
    ("will|shall + have + V[VBN]", "(I) will have read", "futureII"),
    ("will|shall + have + been + V[VBG]", "(I) will have been reading",
     "futureIIProg"),
    ("would + V[VB]", "(I) would read", "condI"),
    ("would + be + V[VBG]", "(I) would be reading", "condIProg"),
    ("would + have + V[VBN]", "(I) would have read", "condII"),
    ("would + have + been + V[VBG]", "(I) would have been reading",
     "condIIProg"),
    ("other modal + V[VB]", "(I) may read", "pres (modal keeps a present base)"),
    ("do[fin] + V[VB]", "(I) do not read", "pres/past (do-support, no layer)"),
    ("be|get + V[VBN] over the main verb", "(it) is read",
     "voice=passive on any of the above"),
    ("V[VBG] chain head, no finite", "reading the book", "gerund"),
    ("to + V[VB], no finite", "to read the book", "toInfinitive"),
    ("V[VB] chain head, no finite", "(see him) read", "bareInfinitive"),
    ("V[VBN] chain head, no finite", "(the car) stolen yesterday",
     "bareInfinitive, voice=passive"),
)

DE_RULE_ROWS: tuple[tuple[str, str, str], ...] = (
    ("V[fin, pres ind]", "(ich) lese", "Präsens"),
    ("V[fin, past ind]", "(ich) las", "Präteritum"),
    ("V[fin, pres subj]", "(er) lese", "Konj I pres"),
    ("V[fin, past subj]", "(er) läse / (ich) hätte", "Konj II pres"),
    ("haben|sein[pres ind] + V[PP]", "(ich) habe gelesen", "Perfekt"),
    ("haben|sein[past ind] + V[PP]", "(ich) hatte gelesen", "Pluperfekt"),
    ("haben|sein[pres subj] + V[PP]", "(er) habe gelesen", "Konj I past"),
    ("haben|sein[past subj] + V[PP]", "(ich) hätte gelesen", "Konj II past"),
    ("werden[pres ind] + V[INF]", "(ich) werde lesen", "Futur I"),
    ("werden[pres subj] + V[INF]", "(er) werde lesen", "Konj I pres"),
    ("werden[past subj] + V[INF]", "(ich) würde lesen", "Konj II pres"),
    ("werden[fin] + V[PP] + haben|sein[INF]", "(ich) werde gelesen haben",
     "Futur II (Konjunktiv readings shift to Konj past)"),
    ("modal[fin] + V[INF]", "(wir) könnten verlangsamen",
     "tense/mood of the modal (here Konj II pres)"),
    ("modal[fin] + V[PP] + haben|sein[INF]", "(er) muss gelesen haben",
     "perfect shift of the modal's tense/mood"),
    ("werden[fin] + V[PP]", "(es) wird gelesen",
     "voice=passive, tense of werden"),
    ("werden[fin] + V[PP] + werden[INF]", "(es) wird gelesen werden",
     "voice=passive, Futur I"),
    ("haben|sein[fin] + V[PP] + worden", "(es) ist gelesen worden",
     "voice=passive, perfect shift"),
    ("werden[fin] + V[PP] + worden + sein[INF]",
     "(es) wird gelesen worden sein", "voice=passive, Futur II"),
    ("sein[fin] + V[PP], lemma takes sein", "(er) ist gekommen",
     "Perfekt/Pluperfekt (composed past)"),
    ("sein[fin] + V[PP], other lemma", "(die Tür) ist geöffnet",
     "voice=passive with statal-passive note, tense of sein"),
    ("zu + V[INF] or V[VVIZU], no finite", "(ohne) zu lesen", "Infinitive"),
    ("V[INF|PP] chain, no finite", "gelesen worden",
     "Infinitive (voice=passive when worden/werden present)"),
)


def rules_dump() -> str:
    lines = ["English chain patterns", "=" * 22]
    width = max(len(p) for p, _, _ in EN_RULE_ROWS)
    for pattern, example, label in EN_RULE_ROWS:
        lines.append(f"{pattern.ljust(width)}  {label:<42}  e.g. {example}")
    lines.append("")
    lines.append("German chain patterns")
    lines.append("=" * 21)
    width = max(len(p) for p, _, _ in DE_RULE_ROWS)
    for pattern, example, label in DE_RULE_ROWS:
        lines.append(f"{pattern.ljust(width)}  {label:<48}  e.g. {example}")
    return "\n".join(lines)
