"""Verbal complex extraction from dependency parses.

Two deprel schemes are supported:

  chain  verb-group chains through {VC, OC, PRD-on-verbs} plus infinitival
         particles (to/zu, also via IM/PM links); OC is only traversed below
         auxiliaries and modals, so control verbs keep their infinitive
         complements in a separate complex.
  ud     a lexical verb head plus its aux/aux:pass dependents, copulas, and
         a "to"/"zu" mark particle; nonverbal predicates with a copula yield
         a complex made of the copula and its auxiliaries.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .corpus_io import Sentence, Token
from .labels import Finiteness, Language

SCHEMES = ("chain", "ud")

EN_FINITE_POS = {"VBZ", "VBP", "VBD", "MD"}
DE_FINITE_POS = {"VVFIN", "VAFIN", "VMFIN"}
IMPERATIVE_POS = {"VVIMP", "VAIMP"}
EN_VERB_POS = {"VB", "VBD", "VBG", "VBN", "VBP", "VBZ", "MD"}
DE_VERB_POS = {
    "VVFIN", "VVIMP", "VVINF", "VVIZU", "VVPP",
    "VAFIN", "VAIMP", "VAINF", "VAPP",
    "VMFIN", "VMINF", "VMPP",
}
DE_PARTICIPLE_POS = {"VVPP", "VAPP", "VMPP"}
DE_INFINITIVE_POS = {"VVINF", "VAINF", "VMINF", "VVIZU"}
DE_AUX_POS = {"VAFIN", "VAIMP", "VAINF", "VAPP", "VMFIN", "VMINF", "VMPP"}
PARTICLE_POS = {"TO", "PTKZU"}
PARTICLE_FORMS = {"to", "zu"}

CHAIN_DEPRELS = {"VC", "OC"}
PARTICLE_CHILD_DEPRELS = {"PM", "IM", "MARK", "mark"}
UD_AUX_DEPRELS = {"aux", "aux:pass"}
SUBJECT_DEPRELS = {"SBJ", "SB", "sb", "nsubj", "nsubj:pass", "csubj", "csubj:pass"}

DE_AUX_LEMMAS = {"haben", "sein", "werden"}
DE_MODAL_LEMMAS = {"können", "müssen", "dürfen", "sollen",
                   "wollen", "mögen"}


def is_verb(token: Token) -> bool:
    return (token.pos in EN_VERB_POS or token.pos in DE_VERB_POS
            or token.pos in IMPERATIVE_POS
            or (token.upos in ("VERB", "AUX") and token.pos not in PARTICLE_POS))


def is_particle(token: Token) -> bool:
    if token.pos in PARTICLE_POS:
        return True
    return (token.form.lower() in PARTICLE_FORMS
            and (token.upos == "PART" or token.deprel in PARTICLE_CHILD_DEPRELS))


def is_finite_token(token: Token) -> bool:
    if token.pos in EN_FINITE_POS or token.pos in DE_FINITE_POS:
        return True
    if token.pos in IMPERATIVE_POS:
        return True
    return token.morph.get("VerbForm") == "fin"


def is_participle_token(token: Token) -> bool:
    if token.pos in DE_PARTICIPLE_POS or token.pos == "VBN":
        return True
    return token.morph.get("VerbForm") == "part"


def is_infinitive_token(token: Token) -> bool:
    if token.pos in DE_INFINITIVE_POS or token.pos == "VB":
        return True
    return token.morph.get("VerbForm") == "inf"


def is_aux_like(token: Token) -> bool:
    """Auxiliary or modal in the German sense (POS- and lemma-based)."""
    if token.pos in DE_AUX_POS:
        return True
    lemma = token.lemma.lower() or token.form.lower()
    return lemma in DE_AUX_LEMMAS or lemma in DE_MODAL_LEMMAS


@dataclass(frozen=True)
class VerbalComplex:
    """One verbal complex: member token indices in surface order.

    `carried_finite` points at a finite verb outside the members whose
    tense context this complex inherits (coordination under a shared
    auxiliary). `depths` mirrors `members` with chain depths, root = 0.
    """

    sentence_id: str
    language: Language
    members: tuple[int, ...]
    main_index: int
    finite_index: int | None = None
    carried_finite: int | None = None
    depths: tuple[int, ...] = ()
    notes: tuple[str, ...] = field(default_factory=tuple)

    def tokens(self, sentence: Sentence) -> list[Token]:
        return [sentence.token(i) for i in self.members]

    def main_token(self, sentence: Sentence) -> Token:
        return sentence.token(self.main_index)

    def finite_token(self, sentence: Sentence) -> Token | None:
        return sentence.token(self.finite_index) if self.finite_index else None

    @property
    def leftmost(self) -> int:
        return self.members[0]


def _chain_link(parent: Token, child: Token, language: Language) -> bool:
    deprel = child.deprel
    if deprel == "VC" and (is_verb(child) or is_particle(child)):
        return True
    if deprel == "OC" and is_verb(child):
        # Only auxiliaries and modals chain through OC; a full verb with an
        # OC dependent governs a separate clause.
        return is_aux_like(parent)
    if deprel == "PRD" and is_verb(child):
        return True
    if deprel in PARTICLE_CHILD_DEPRELS and is_particle(child):
        return True
    if deprel == "IM" and is_verb(child) and is_particle(parent):
        return True
    return False


def _walk_chain(sentence: Sentence, root: Token, language: Language,
                claimed: set[int]) -> tuple[list[int], dict[int, int]]:
    members = [root.index]
    depths = {root.index: 0}
    stack = [root]
    while stack:
        current = stack.pop()
        for child in sentence.children(current.index):
            if child.index in depths or child.index in claimed:
                continue
            if _chain_link(current, child, language):
                depths[child.index] = depths[current.index] + 1
                members.append(child.index)
                stack.append(child)
    return members, depths


def _extract_chain(sentence: Sentence) -> list[VerbalComplex]:
    language = sentence.language
    claimed: set[int] = set()
    complexes: list[VerbalComplex] = []
    for token in sentence.tokens:
        if token.index in claimed:
            continue
        verbal = is_verb(token)
        particle_root = (is_particle(token)
                         and any(child.deprel == "IM" and is_verb(child)
                                 for child in sentence.children(token.index)))
        if not verbal and not particle_root:
            continue
        head = sentence.token(token.head) if token.head else None
        if head is not None and _chain_link(head, token, language):
            continue  # pulled into a chain from above
        members, depths = _walk_chain(sentence, token, language, claimed)
        claimed.update(members)
        complexes.append(_finish(sentence, members, depths))
    complexes.sort(key=lambda vc: vc.leftmost)
    return complexes


def _extract_ud(sentence: Sentence) -> list[VerbalComplex]:
    dep_groups: dict[int, list[Token]] = {}
    for token in sentence.tokens:
        if token.deprel in UD_AUX_DEPRELS or (token.deprel == "cop" and is_verb(token)):
            dep_groups.setdefault(token.head, []).append(token)

    claimed: set[int] = set()
    complexes: list[VerbalComplex] = []

    def mark_particles(head_index: int) -> list[Token]:
        return [child for child in sentence.children(head_index)
                if child.deprel == "mark" and is_particle(child)]

    for token in sentence.tokens:
        if token.index in claimed:
            continue
        if not is_verb(token):
            continue
        if token.deprel in UD_AUX_DEPRELS or token.deprel == "cop":
            continue
        group = dep_groups.get(token.index, [])
        members = [token] + group + mark_particles(token.index)
        indices = sorted(t.index for t in members)
        depths = {i: (0 if i == token.index else 1) for i in indices}
        claimed.update(indices)
        complexes.append(_finish(sentence, indices, depths, main=token.index))

    # Copular predicates with a nonverbal head: the verbal material alone
    # forms the complex, the copula acts as its lexical center.
    for head_index, group in dep_groups.items():
        indices = sorted(t.index for t in group if t.index not in claimed)
        if not indices:
            continue
        head = sentence.token(head_index) if 1 <= head_index <= len(sentence) else None
        if head is not None and is_verb(head):
            continue
        if head is not None:
            for particle in mark_particles(head_index):
                if particle.index not in claimed:
                    indices.append(particle.index)
            indices.sort()
        cops = [i for i in indices if sentence.token(i).deprel == "cop"]
        main = cops[0] if cops else indices[-1]
        depths = {i: (0 if i == main else 1) for i in indices}
        claimed.update(indices)
        complexes.append(_finish(sentence, indices, depths, main=main))

    complexes.sort(key=lambda vc: vc.leftmost)
    return complexes


def _finish(sentence: Sentence, indices: list[int], depths: dict[int, int],
            main: int | None = None) -> VerbalComplex:
    ordered = sorted(indices)
    tokens = [sentence.token(i) for i in ordered]
    notes: list[str] = []

    if main is None:
        verbs = [(depths[t.index], t.index) for t in tokens if not is_particle(t)]
        if not verbs:
            verbs = [(depths[t.index], t.index) for t in tokens]
        # Unique lexical (non-aux, non-modal) verb wins; otherwise the
        # deepest chain element does.
        lexical = [t.index for t in tokens
                   if not is_particle(t) and not is_aux_like(t) and t.pos != "MD"]
        if len(lexical) == 1:
            main = lexical[0]
        else:
            main = max(verbs)[1]

    finite_candidates = sorted(
        (depths[t.index], t.index) for t in tokens if is_finite_token(t))
    finite: int | None = finite_candidates[0][1] if finite_candidates else None
    if len(finite_candidates) > 1:
        notes.append("multiple-finite")

    if finite is None:
        imp = _imperative_member(sentence, tokens)
        if imp is not None:
            finite = imp
            notes.append("imperative")
    else:
        token = sentence.token(finite)
        if token.morph.get("Mood") == "imp" or token.pos in IMPERATIVE_POS:
            notes.append("imperative")

    return VerbalComplex(
        sentence_id=sentence.id,
        language=sentence.language,
        members=tuple(ordered),
        main_index=main,
        finite_index=finite,
        depths=tuple(depths[i] for i in ordered),
        notes=tuple(notes),
    )


def _imperative_member(sentence: Sentence, tokens: list[Token]) -> int | None:
    """Subjectless verb-first heuristic for base-form imperatives."""
    root = tokens[0]
    if sentence.language is Language.EN and root.pos != "VB":
        return None
    if sentence.language is Language.DE and root.pos not in IMPERATIVE_POS:
        return None
    if root.index != 1:
        return None
    has_subject = any(child.deprel in SUBJECT_DEPRELS
                      for child in sentence.children(root.index))
    return None if has_subject else root.index


def _merge_going_to(sentence: Sentence,
                    complexes: list[VerbalComplex]) -> list[VerbalComplex]:
    """Fold "be going to" + infinitive into a single future-marking complex.

    Fires only on the literal pattern: finite "be", main lemma "go" as VBG,
    and a to-infinitive complex hanging off the going-complex.
    """
    if sentence.language is not Language.EN:
        return complexes
    by_leftmost = {vc.leftmost: vc for vc in complexes}
    result = list(complexes)
    for vc in complexes:
        if vc not in result:
            continue
        if vc.finite_index is None:
            continue
        finite = sentence.token(vc.finite_index)
        main = sentence.token(vc.main_index)
        if (finite.lemma.lower() or finite.form.lower()) != "be":
            continue
        if (main.lemma.lower() or main.form.lower()) != "go" or main.pos != "VBG":
            continue
        for other in result:
            if other is vc:
                continue
            root_index = other.members[other.depths.index(0)]
            root = sentence.token(root_index)
            if root.head not in vc.members:
                continue
            if finiteness_of(other, sentence) is not Finiteness.TO_INFINITIVE:
                continue
            merged_members = tuple(sorted(vc.members + other.members))
            depth_map = dict(zip(vc.members, vc.depths))
            bump = max(vc.depths) + 1
            for i, d in zip(other.members, other.depths):
                depth_map[i] = d + bump
            result.remove(other)
            idx = result.index(vc)
            result[idx] = VerbalComplex(
                sentence_id=vc.sentence_id,
                language=vc.language,
                members=merged_members,
                main_index=other.main_index,
                finite_index=vc.finite_index,
                depths=tuple(depth_map[i] for i in merged_members),
                notes=vc.notes + ("going-to",),
            )
            by_leftmost.pop(other.leftmost, None)
            break
    result.sort(key=lambda v: v.leftmost)
    return result


_COORD_DEPRELS = {"COORD", "CONJ", "CD", "CJ", "conj"}


def _carry_coordination(sentence: Sentence,
                        complexes: list[VerbalComplex]) -> list[VerbalComplex]:
    """Let a finite-less coordinated complex inherit the shared auxiliary.

    "has come and gone": the second conjunct forms its own complex; it gets
    carried_finite pointing at "has" plus a carried-context note.
    """
    finite_of: dict[int, int] = {}
    for vc in complexes:
        if vc.finite_index is not None:
            for member in vc.members:
                finite_of[member] = vc.finite_index
    result = []
    for vc in complexes:
        if vc.finite_index is not None:
            result.append(vc)
            continue
        root_index = vc.members[vc.depths.index(0)]
        token = sentence.token(root_index)
        carried: int | None = None
        steps = 0
        while token.deprel in _COORD_DEPRELS and token.head and steps < 10:
            parent = sentence.token(token.head)
            if parent.index in finite_of:
                carried = finite_of[parent.index]
                break
            token = parent
            steps += 1
        if carried is not None:
            vc = VerbalComplex(
                sentence_id=vc.sentence_id, language=vc.language,
                members=vc.members, main_index=vc.main_index,
                finite_index=None, carried_finite=carried,
                depths=vc.depths, notes=vc.notes + ("carried-context",))
        result.append(vc)
    return result


def extract_vcs(sentence: Sentence, scheme: str = "chain") -> list[VerbalComplex]:
    """All verbal complexes of a sentence, sorted by leftmost member.

    Members partition the sentence's verbal tokens: no token belongs to two
    complexes. A sentence without verbs yields an empty list.
    """
    if scheme not in SCHEMES:
        raise ValueError(f"unknown scheme {scheme!r}; expected one of {SCHEMES}")
    complexes = _extract_chain(sentence) if scheme == "chain" else _extract_ud(sentence)
    complexes = _merge_going_to(sentence, complexes)
    complexes = _carry_coordination(sentence, complexes)
    return complexes


def finiteness_of(vc: VerbalComplex, sentence: Sentence) -> Finiteness:
    """Finiteness category of a complex.

    Finite wins whenever a finite member exists. Non-finite complexes split
    on the to/zu particle, the chain root's form (gerund for English VBG
    roots, bare infinitives), and default to participle.
    """
    if vc.finite_index is not None:
        return Finiteness.FINITE
    tokens = vc.tokens(sentence)
    root = tokens[vc.depths.index(0)] if vc.depths else tokens[0]
    if any(is_particle(t) for t in tokens):
        return Finiteness.TO_INFINITIVE
    if any(t.pos == "VVIZU" for t in tokens):
        return Finiteness.TO_INFINITIVE
    if vc.language is Language.EN:
        if root.pos == "VBG":
            return Finiteness.GERUND
        if root.pos == "VB" or root.morph.get("VerbForm") == "inf":
            return Finiteness.BARE_INFINITIVE
        return Finiteness.PARTICIPLE
    if root.pos in DE_INFINITIVE_POS or root.morph.get("VerbForm") == "inf":
        return Finiteness.BARE_INFINITIVE
    return Finiteness.PARTICIPLE
