"""Loading and validation of the linguistic resources.

Four JSON files feed the lemmatizer: the PoS-clustered lemma dictionary,
the marker inventories, the verb suffix/root tables and (optionally) the
narrow-to-basic PoS projection. Every string is NFC-normalized on load and
every marker/suffix list is re-sorted longest-first.
"""
from __future__ import annotations

import enum
import json
import unicodedata
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Mapping

DATA_DIR = Path(__file__).parent / "data"
DEFAULT_DICTIONARY = DATA_DIR / "dictionary.json"
DEFAULT_MARKERS = DATA_DIR / "markers.json"
DEFAULT_VERBS = DATA_DIR / "verbs.json"
DEFAULT_PROJECTION = DATA_DIR / "projection.json"


class ResourceError(Exception):
    """Base class for resource loading failures."""

    def __init__(self, path, location, message):
        self.path = str(path)
        self.location = location
        self.message = message
        where = f"{self.path}:{location}" if location else self.path
        super().__init__(f"{where}: {message}")


class MalformedResource(ResourceError):
    pass


class ConflictingEntry(ResourceError):
    pass


class EmptyMarker(ResourceError):
    pass


class PosClass(enum.Enum):
    NOUN = "Noun"
    PRONOUN = "Pronoun"
    VERB = "Verb"
    ADJECTIVE = "Adjective"
    ADVERB = "Adverb"
    POSTPOSITION = "Postposition"
    CONJUNCTION = "Conjunction"
    INTERJECTION = "Interjection"
    OTHER = "Other"

    @classmethod
    def from_name(cls, name: str) -> PosClass | None:
        """Case-insensitive lookup by value; returns None when unknown."""
        return _POS_BY_LOWER.get(name.strip().lower())


_POS_BY_LOWER = {p.value.lower(): p for p in PosClass}


class MarkerCategory(enum.Enum):
    PLURAL = "PM"
    CASE = "CM"
    DETERMINER = "DM"
    EMPHASIS = "EM"
    DEGREE = "DgM"


# file key <-> category
MARKER_KEYS = {
    "plural": MarkerCategory.PLURAL,
    "case": MarkerCategory.CASE,
    "determiner": MarkerCategory.DETERMINER,
    "emphasis": MarkerCategory.EMPHASIS,
    "degree": MarkerCategory.DEGREE,
}

# dictionary cluster key <-> PoS, in file order
CLUSTER_KEYS = {
    "nouns": PosClass.NOUN,
    "pronouns": PosClass.PRONOUN,
    "verbs": PosClass.VERB,
    "adverbs": PosClass.ADVERB,
    "adjectives": PosClass.ADJECTIVE,
    "postpositions": PosClass.POSTPOSITION,
}
LEMMATIZED_CLASSES = tuple(CLUSTER_KEYS.values())


def nfc(text: str) -> str:
    return unicodedata.normalize("NFC", text)


def sort_markers(markers) -> tuple[str, ...]:
    """Deduplicate and order markers longest-first, ties lexicographically."""
    return tuple(sorted(set(markers), key=lambda m: (-len(m), m)))


@dataclass(frozen=True)
class MarkerSet:
    markers: Mapping[MarkerCategory, tuple[str, ...]]

    def __post_init__(self):
        fixed = {cat: sort_markers(nfc(m) for m in ms) for cat, ms in self.markers.items()}
        object.__setattr__(self, "markers", MappingProxyType(fixed))

    def __getitem__(self, category: MarkerCategory) -> tuple[str, ...]:
        return self.markers[category]

    def to_json(self) -> dict:
        return {key: list(self.markers[cat]) for key, cat in MARKER_KEYS.items()}


@dataclass(frozen=True)
class LemmaDictionary:
    clusters: Mapping[PosClass, Mapping[str, str]]

    def __post_init__(self):
        fixed = {pos: MappingProxyType(dict(self.clusters.get(pos, {})))
                 for pos in LEMMATIZED_CLASSES}
        object.__setattr__(self, "clusters", MappingProxyType(fixed))

    def cluster(self, pos: PosClass) -> Mapping[str, str]:
        return self.clusters.get(pos, MappingProxyType({}))

    def __len__(self):
        return sum(len(c) for c in self.clusters.values())

    def to_json(self) -> dict:
        return {key: dict(self.clusters[pos]) for key, pos in CLUSTER_KEYS.items()}

    def closure_violations(self) -> list[tuple[PosClass, str, str]]:
        """Pairs whose lemma is not itself an identity entry of the same cluster.

        A dictionary without violations is a fixed point: lemmatizing any
        lemma with its own PoS returns it unchanged.
        """
        bad = []
        for pos, cluster in self.clusters.items():
            for word, lemma in cluster.items():
                if cluster.get(lemma) != lemma:
                    bad.append((pos, word, lemma))
        return bad


@dataclass(frozen=True)
class VerbResources:
    suffixes: tuple[str, ...]
    root_lemma: Mapping[str, str]

    def __post_init__(self):
        object.__setattr__(self, "suffixes", sort_markers(nfc(s) for s in self.suffixes))
        object.__setattr__(self, "root_lemma", MappingProxyType(
            {nfc(k): nfc(v) for k, v in self.root_lemma.items()}))

    def to_json(self) -> dict:
        return {"suffixes": list(self.suffixes), "root_lemma": dict(self.root_lemma)}


@dataclass(frozen=True)
class PosProjection:
    narrow_to_basic: Mapping[str, PosClass]
    default_class: PosClass = PosClass.OTHER

    def __post_init__(self):
        object.__setattr__(self, "narrow_to_basic", MappingProxyType(dict(self.narrow_to_basic)))

    def to_json(self) -> dict:
        return {tag: pos.value for tag, pos in self.narrow_to_basic.items()}


def project_pos(narrow_tag: str, projection: PosProjection) -> PosClass:
    """Map a narrow tag to its basic class; unknown tags get the default class."""
    return projection.narrow_to_basic.get(narrow_tag.strip(), projection.default_class)


def resolve_tag(tag: str, projection: PosProjection) -> PosClass | None:
    """Accept a basic class name or a narrow tag; None if neither is known."""
    pos = PosClass.from_name(tag)
    if pos is not None:
        return pos
    return projection.narrow_to_basic.get(tag.strip())


@dataclass(frozen=True)
class ResourceBundle:
    markers: MarkerSet
    dictionary: LemmaDictionary
    verbs: VerbResources
    projection: PosProjection = field(default_factory=lambda: PosProjection({}))


# -- parsing -----------------------------------------------------------------

class _Pairs(list):
    """A JSON object kept as its key/value pairs so duplicate keys stay visible."""


def _read_json(path):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise MalformedResource(path, f"byte {exc.start}", "file is not valid UTF-8") from exc

    try:
        return json.loads(text, object_pairs_hook=_Pairs)
    except json.JSONDecodeError as exc:
        raise MalformedResource(path, f"{exc.lineno}:{exc.colno}", exc.msg) from exc


def _expect_object(value, path, location):
    if not isinstance(value, _Pairs):
        raise MalformedResource(path, location, "expected a JSON object")
    return value


def _string_map(pairs, path, location, what):
    """Build an NFC string->string map, rejecting empties and conflicts."""
    out: dict[str, str] = {}
    for key, value in _expect_object(pairs, path, location):
        loc = f"{location}.{key}" if location else key
        if not isinstance(value, str):
            raise MalformedResource(path, loc, f"{what} value must be a string")
        key, value = nfc(key), nfc(value)
        if not key or not value:
            raise MalformedResource(path, loc, f"empty {what} entry")
        if key in out and out[key] != value:
            raise ConflictingEntry(path, loc, f"{key!r} maps to both {out[key]!r} and {value!r}")
        out[key] = value
    return out


def _marker_list(value, path, location):
    if not isinstance(value, list) or isinstance(value, _Pairs):
        raise MalformedResource(path, location, "expected a list of strings")
    out = []
    for i, m in enumerate(value):
        if not isinstance(m, str):
            raise MalformedResource(path, f"{location}[{i}]", "marker must be a string")
        m = nfc(m)
        if not m:
            raise EmptyMarker(path, f"{location}[{i}]", "empty marker string")
        out.append(m)
    return out


def load_dictionary(path) -> LemmaDictionary:
    data = _expect_object(_read_json(path), path, "")
    clusters = {}
    for key, value in data:
        if key not in CLUSTER_KEYS:
            raise MalformedResource(path, key, f"unknown cluster {key!r}; expected one of {sorted(CLUSTER_KEYS)}")
        pos = CLUSTER_KEYS[key]
        merged = clusters.setdefault(pos, {})
        for word, lemma in _string_map(value, path, key, "dictionary").items():
            if word in merged and merged[word] != lemma:
                raise ConflictingEntry(path, f"{key}.{word}", f"{word!r} maps to both {merged[word]!r} and {lemma!r}")
            merged[word] = lemma
    return LemmaDictionary(clusters)


def load_markers(path) -> MarkerSet:
    data = _expect_object(_read_json(path), path, "")
    found = {}
    for key, value in data:
        if key not in MARKER_KEYS:
            raise MalformedResource(path, key, f"unknown marker category {key!r}")
        found[MARKER_KEYS[key]] = _marker_list(value, path, key)
    for key, cat in MARKER_KEYS.items():
        if not found.get(cat):
            raise MalformedResource(path, key, "marker category missing or empty")
    return MarkerSet(found)


def load_verbs(path) -> VerbResources:
    data = dict(_expect_object(_read_json(path), path, ""))
    extra = set(data) - {"suffixes", "root_lemma"}
    if extra:
        raise MalformedResource(path, sorted(extra)[0], "unexpected key")
    if "suffixes" not in data or "root_lemma" not in data:
        raise MalformedResource(path, "", "verb file needs 'suffixes' and 'root_lemma'")
    suffixes = _marker_list(data["suffixes"], path, "suffixes")
    roots = _string_map(data["root_lemma"], path, "root_lemma", "root_lemma")
    return VerbResources(tuple(suffixes), roots)


def load_projection(path) -> PosProjection:
    mapping = {}
    for tag, name in _string_map(_read_json(path), path, "", "projection").items():
        pos = PosClass.from_name(name)
        if pos is None:
            raise MalformedResource(path, tag, f"{name!r} is not a PoS class")
        mapping[tag] = pos
    return PosProjection(mapping)


def load_resources(dictionary_path=DEFAULT_DICTIONARY, markers_path=DEFAULT_MARKERS,
                   verb_path=DEFAULT_VERBS, projection_path=None) -> ResourceBundle:
    """Load all four resources. Without a projection file the bundled one is used."""
    return ResourceBundle(
        markers=load_markers(markers_path),
        dictionary=load_dictionary(dictionary_path),
        verbs=load_verbs(verb_path),
        projection=load_projection(projection_path or DEFAULT_PROJECTION),
    )


def save_json(obj, path) -> None:
    """Write a resource's ``to_json()`` form in the same format the loaders read."""
    Path(path).write_text(json.dumps(obj, ensure_ascii=False, indent=2) + "\n", encoding="utf-8")
