"""Gazetteer entity matching and mention counting.

Matching is dictionary-based: every entity carries a list of aliases, each
alias is a token sequence, and the matcher walks a document left to right
taking the longest alias match at each position. Matched tokens are
consumed, so "New Zealand" never also yields "Zealand".

Case rules differ by kind. Countries, companies and other non-person kinds
match case-insensitively ("IBM", "Ibm", "ibm" all hit IBM). Person aliases
are case-sensitive on the initial letter of every name token, so "Drucker"
matches but the verb "porter" does not hit Michael Porter.

Gazetteer file format: a JSON array of objects with keys "canonical",
"kind" and "aliases" (list of strings). The canonical name always counts
as an alias of itself.
"""

from __future__ import annotations

import difflib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Union

from .corpus import CorpusLayout, read_document
from .errors import DataError, UnknownNameError
from .series import MODE_DOC_COUNT, TrendSeries, Value
from .tokenization import segment_tokens

PERSON = "person"

_END = "\x00"  # terminal marker inside trie nodes; never a token


def _fold(token: str) -> str:
    return token.lower()


def _person_form(token: str) -> str:
    # keep the first letter's case, fold the rest
    return token[:1] + token[1:].lower()


@dataclass(frozen=True)
class Entity:
    canonical: str
    kind: str
    aliases: tuple[str, ...]


@dataclass(frozen=True)
class Mention:
    canonical: str
    start: int  # token offset
    length: int  # tokens consumed


class Gazetteer:
    """Alias tries plus the entity table they were compiled from."""

    def __init__(self, entities: Iterable[Entity]):
        self.entities: dict[str, Entity] = {}
        self._folded_trie: dict = {}
        self._person_trie: dict = {}
        self._lenient: dict[str, str] = {}  # case-folded alias -> canonical
        for entity in entities:
            self._add(entity)
        if not self.entities:
            raise DataError("gazetteer has no entities")

    def _add(self, entity: Entity) -> None:
        if entity.canonical not in entity.aliases:
            entity = Entity(
                entity.canonical, entity.kind, (entity.canonical,) + entity.aliases
            )
        existing = self.entities.get(entity.canonical)
        if existing is not None:
            if existing.kind != entity.kind:
                raise DataError(
                    f"entity {entity.canonical!r} declared with two kinds: "
                    f"{existing.kind!r} and {entity.kind!r}"
                )
            merged = existing.aliases + tuple(
                a for a in entity.aliases if a not in existing.aliases
            )
            entity = Entity(entity.canonical, entity.kind, merged)
        self.entities[entity.canonical] = entity

        trie = self._person_trie if entity.kind == PERSON else self._folded_trie
        norm = _person_form if entity.kind == PERSON else _fold
        for alias in entity.aliases:
            tokens = segment_tokens(alias)
            if not tokens:
                raise DataError(f"alias {alias!r} of {entity.canonical!r} has no tokens")
            node = trie
            for tok in tokens:
                node = node.setdefault(norm(tok), {})
            prior = node.get(_END)
            if prior is not None and prior != entity.canonical:
                raise DataError(
                    f"alias {alias!r} is claimed by both {prior!r} and "
                    f"{entity.canonical!r}"
                )
            node[_END] = entity.canonical
            folded_key = " ".join(t.lower() for t in tokens)
            self._lenient.setdefault(folded_key, entity.canonical)

    # -- document matching ------------------------------------------------

    def _longest(self, trie: dict, norm, tokens: list[str], i: int) -> tuple[int, str | None]:
        node = trie
        best_len, best = 0, None
        j = i
        while j < len(tokens):
            key = norm(tokens[j])
            node = node.get(key)
            if node is None:
                break
            j += 1
            if _END in node:
                best_len, best = j - i, node[_END]
        return best_len, best

    def match_tokens(self, tokens: list[str]) -> list[Mention]:
        """All mentions in a case-preserving token sequence, left to right."""
        mentions: list[Mention] = []
        i = 0
        n = len(tokens)
        while i < n:
            flen, fhit = self._longest(self._folded_trie, _fold, tokens, i)
            plen, phit = self._longest(self._person_trie, _person_form, tokens, i)
            length = max(flen, plen)
            if length == 0:
                i += 1
                continue
            if flen == length and fhit is not None:
                mentions.append(Mention(fhit, i, length))
            if plen == length and phit is not None:
                mentions.append(Mention(phit, i, length))
            i += length
        return mentions

    def match(self, text: str) -> list[Mention]:
        return self.match_tokens(segment_tokens(text))

    # -- name resolution for queries --------------------------------------

    def resolve(self, name: str) -> str:
        """Map a user-supplied name or alias to its canonical form.

        Query resolution is deliberately laxer than document matching:
        any alias matches case-insensitively here, so a CLI user can type
        "peter drucker". Unknown names raise with close-match suggestions.
        """
        if name in self.entities:
            return name
        folded_key = " ".join(t.lower() for t in segment_tokens(name))
        hit = self._lenient.get(folded_key)
        if hit is not None:
            return hit
        pool = list(self.entities) + [
            a for e in self.entities.values() for a in e.aliases if a not in self.entities
        ]
        close = difflib.get_close_matches(name, pool, n=6, cutoff=0.6)
        candidates: list[str] = []
        for c in close:
            canon = c if c in self.entities else self._lenient.get(
                " ".join(t.lower() for t in segment_tokens(c)), c
            )
            if canon not in candidates:
                candidates.append(canon)
        raise UnknownNameError("entity", name, candidates)

    def kind_of(self, canonical: str) -> str:
        entity = self.entities.get(canonical)
        if entity is None:
            raise UnknownNameError("entity", canonical, [])
        return entity.kind

    def kinds(self) -> list[str]:
        return sorted({e.kind for e in self.entities.values()})

    def canonicals(self, kind: str | None = None) -> list[str]:
        if kind is not None and kind not in self.kinds():
            raise DataError(
                f"unknown entity kind {kind!r}; available: {', '.join(self.kinds())}"
            )
        return sorted(
            c for c, e in self.entities.items() if kind is None or e.kind == kind
        )


def load_gazetteer(paths: Iterable[str | Path]) -> Gazetteer:
    """Build one gazetteer from one or more JSON files, merging aliases."""
    entities: list[Entity] = []
    count = 0
    for path in paths:
        count += 1
        path = Path(path)
        try:
            raw = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise DataError(f"{path}: not valid JSON: {exc}") from exc
        if not isinstance(raw, list):
            raise DataError(f"{path}: expected a JSON array of entities")
        for item in raw:
            if not isinstance(item, dict) or "canonical" not in item or "kind" not in item:
                raise DataError(f"{path}: entity entries need canonical and kind keys")
            aliases = item.get("aliases", [])
            if not isinstance(aliases, list) or not all(isinstance(a, str) for a in aliases):
                raise DataError(f"{path}: aliases of {item['canonical']!r} must be strings")
            entities.append(
                Entity(str(item["canonical"]), str(item["kind"]), tuple(aliases))
            )
    if count == 0:
        raise DataError("no gazetteer files given")
    return Gazetteer(entities)


def match_entities(doc, gazetteer: Gazetteer) -> set[str]:
    """Canonical names present in a document (or raw text)."""
    body = doc.body if hasattr(doc, "body") else str(doc)
    return {m.canonical for m in gazetteer.match(body)}


# -- groups ----------------------------------------------------------------


@dataclass(frozen=True)
class GroupDefinition:
    name: str
    members: tuple[str, ...]
    regions: dict[str, tuple[str, ...]] = field(default_factory=dict)

    def __post_init__(self):
        if not self.members:
            raise DataError(f"group {self.name!r} has no members")
        if len(set(self.members)) != len(self.members):
            dupes = sorted({m for m in self.members if self.members.count(m) > 1})
            raise DataError(f"group {self.name!r} lists members twice: {', '.join(dupes)}")
        member_set = set(self.members)
        seen: dict[str, str] = {}
        for region, members in self.regions.items():
            for m in members:
                if m not in member_set:
                    raise DataError(
                        f"group {self.name!r}: region {region!r} lists {m!r}, "
                        f"which is not a member"
                    )
                if m in seen:
                    raise DataError(
                        f"group {self.name!r}: {m!r} is in regions {seen[m]!r} "
                        f"and {region!r}; regions must not overlap"
                    )
                seen[m] = region

    def unassigned(self) -> tuple[str, ...]:
        """Members not claimed by any region."""
        claimed = {m for members in self.regions.values() for m in members}
        return tuple(m for m in self.members if m not in claimed)


def load_group(path: str | Path) -> GroupDefinition:
    """Load a group JSON file: {name, members: [...], regions: {name: [...]}}."""
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DataError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(raw, dict) or "name" not in raw or "members" not in raw:
        raise DataError(f"{path}: expected an object with name and members")
    regions_raw = raw.get("regions", {})
    if not isinstance(regions_raw, dict):
        raise DataError(f"{path}: regions must be an object of name -> member list")
    return GroupDefinition(
        name=str(raw["name"]),
        members=tuple(str(m) for m in raw["members"]),
        regions={str(k): tuple(str(m) for m in v) for k, v in regions_raw.items()},
    )


# -- mention index ----------------------------------------------------------


class MentionIndex:
    """Per-entity, per-year sorted lists of the documents mentioning it.

    Doc lists stay sorted so pairwise co-mention counts reduce to a merge
    intersection. Years with no documents at all are outside coverage and
    surface as null in every derived series; a covered year with no
    mentions is a real 0.
    """

    def __init__(self, gazetteer: Gazetteer):
        self.gazetteer = gazetteer
        self._docs: dict[str, dict[int, list[str]]] = {}
        self.year_doc_counts: dict[int, int] = {}

    @classmethod
    def build(cls, layout: CorpusLayout, gazetteer: Gazetteer) -> "MentionIndex":
        index = cls(gazetteer)
        for entry in layout.entries:
            index.year_doc_counts[entry.year] = index.year_doc_counts.get(entry.year, 0) + 1
            body = read_document(layout, entry)
            seen = {m.canonical for m in gazetteer.match(body)}
            for canonical in seen:
                index._docs.setdefault(canonical, {}).setdefault(entry.year, []).append(
                    entry.doc_id
                )
        for per_year in index._docs.values():
            for docs in per_year.values():
                docs.sort()
        return index

    def coverage(self) -> tuple[int, int]:
        if not self.year_doc_counts:
            raise DataError("corpus is empty; no years covered")
        years = sorted(self.year_doc_counts)
        return years[0], years[-1]

    def doc_ids(self, canonical: str, year: int) -> list[str]:
        return self._docs.get(canonical, {}).get(year, [])

    def mention_doc_count(self, canonical: str, year: int) -> int:
        return len(self.doc_ids(canonical, year))

    def comention_doc_count(self, a: str, b: str, year: int) -> int:
        if a == b:
            return self.mention_doc_count(a, year)
        return _sorted_intersection_size(self.doc_ids(a, year), self.doc_ids(b, year))

    def total_mentions(self, canonical: str, start: int, end: int) -> int:
        per_year = self._docs.get(canonical, {})
        return sum(len(v) for y, v in per_year.items() if start <= y <= end)


def _sorted_intersection_size(xs: list[str], ys: list[str]) -> int:
    i = j = n = 0
    while i < len(xs) and j < len(ys):
        if xs[i] == ys[j]:
            n += 1
            i += 1
            j += 1
        elif xs[i] < ys[j]:
            i += 1
        else:
            j += 1
    return n


MentionSource = Union[MentionIndex, CorpusLayout]


def _as_mention_index(source: MentionSource, gazetteer: Gazetteer) -> MentionIndex:
    if isinstance(source, MentionIndex):
        return source
    return MentionIndex.build(source, gazetteer)


def _year_range(index: MentionIndex, start: int | None, end: int | None) -> tuple[int, int]:
    if start is None or end is None:
        cov_start, cov_end = index.coverage()  # raises on an empty corpus
        start = cov_start if start is None else start
        end = cov_end if end is None else end
    if start > end:
        raise DataError(f"year range is backwards: {start} > {end}")
    return start, end


def _count_series(
    index: MentionIndex, label: str, start: int, end: int, count_for_year
) -> TrendSeries:
    values: list[Value] = [
        count_for_year(y) if y in index.year_doc_counts else None
        for y in range(start, end + 1)
    ]
    return TrendSeries(label, start, end, values, MODE_DOC_COUNT)


def entity_trend(
    source: MentionSource,
    gazetteer: Gazetteer,
    name: str,
    start: int | None = None,
    end: int | None = None,
) -> TrendSeries:
    """Documents per year mentioning the entity (by any alias)."""
    index = _as_mention_index(source, gazetteer)
    canonical = gazetteer.resolve(name)
    start, end = _year_range(index, start, end)
    return _count_series(
        index, canonical, start, end, lambda y: index.mention_doc_count(canonical, y)
    )


def comention_trend(
    source: MentionSource,
    gazetteer: Gazetteer,
    name_a: str,
    name_b: str,
    start: int | None = None,
    end: int | None = None,
) -> TrendSeries:
    """Documents per year mentioning both entities."""
    index = _as_mention_index(source, gazetteer)
    a = gazetteer.resolve(name_a)
    b = gazetteer.resolve(name_b)
    start, end = _year_range(index, start, end)
    return _count_series(
        index, f"{a} & {b}", start, end, lambda y: index.comention_doc_count(a, b, y)
    )


def group_comention(
    source: MentionSource,
    gazetteer: Gazetteer,
    group: GroupDefinition,
    anchor: str,
    start: int | None = None,
    end: int | None = None,
    region: str | None = None,
) -> TrendSeries:
    """Summed anchor-with-member co-mention counts per year.

    A document co-mentioning the anchor with k members contributes k, not
    1, so region series add up exactly to the whole-group series when the
    regions partition the member list. The anchor must lie outside the
    selected member set: anchor-with-anchor documents would skew the sum.
    An anchor that belongs to the group but not to the queried region is
    fine (the classic query anchors a member country against the other
    regions of its own group).
    """
    index = _as_mention_index(source, gazetteer)
    anchor_canonical = gazetteer.resolve(anchor)
    if region is not None:
        if region not in group.regions:
            raise UnknownNameError(
                "region",
                region,
                difflib.get_close_matches(region, list(group.regions), n=6, cutoff=0.4),
            )
        members = group.regions[region]
        label = f"{anchor_canonical} & {group.name}/{region}"
    else:
        members = group.members
        label = f"{anchor_canonical} & {group.name}"
    member_canonicals = [gazetteer.resolve(m) for m in members]
    if anchor_canonical in member_canonicals:
        where = f"region {region!r} of group {group.name!r}" if region else f"group {group.name!r}"
        raise DataError(
            f"anchor {anchor_canonical!r} is itself a member of {where}; "
            f"self-co-mention would distort the sum"
        )
    start, end = _year_range(index, start, end)
    return _count_series(
        index,
        label,
        start,
        end,
        lambda y: sum(index.comention_doc_count(anchor_canonical, m, y) for m in member_canonicals),
    )
