"""Text cleanup and term extraction: markup stripping, tokenization,
stopword removal, and stemming.

All functions are pure; a document flows through
strip_markup -> tokenize -> remove_stopwords -> stem -> bigram emission,
which is what :func:`preprocess_document` composes.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .porter import stem

__all__ = [
    "RawDocument",
    "PreprocessConfig",
    "TermList",
    "strip_markup",
    "tokenize",
    "remove_stopwords",
    "stem",
    "preprocess_document",
    "load_stopwords",
    "default_stopwords",
]

_TAG_RE = re.compile(r"<[^>]*>")
_ENTITY_RE = re.compile(r"&(amp|lt|gt|quot|#[0-9]+);", re.IGNORECASE)
_NAMED_ENTITIES = {"amp": "&", "lt": "<", "gt": ">", "quot": '"'}
_TERM_RE = re.compile(r"[a-z0-9]+")


def _decode_entity(match: re.Match) -> str:
    name = match.group(1)
    if name.startswith("#"):
        try:
            return chr(int(name[1:]))
        except (ValueError, OverflowError):
            return match.group(0)
    return _NAMED_ENTITIES[name.lower()]


def strip_markup(text: str) -> str:
    """Replace every ``<...>`` tag span with a single space and decode the
    entities &amp; &lt; &gt; &quot; &#NN;.

    A ``<`` that is never closed is kept as a literal character.
    """
    return _ENTITY_RE.sub(_decode_entity, _TAG_RE.sub(" ", text))


@dataclass(frozen=True)
class RawDocument:
    """One input document; id must be unique within a corpus."""

    id: str
    content: str

    def __post_init__(self):
        if not self.id:
            raise ValueError("document id must be non-empty")


def default_stopwords() -> frozenset[str]:
    """The stopword list shipped with the package (~170 English terms)."""
    text = resources.files("fuzzydocs.data").joinpath("stopwords_en.txt").read_text("utf-8")
    return _parse_stopwords(text.splitlines())


def load_stopwords(path: str | Path) -> frozenset[str]:
    """Read a stopword file: one term per line, ``#`` comments, blank lines ignored."""
    with open(path, encoding="utf-8") as f:
        return _parse_stopwords(f)


def _parse_stopwords(lines: Iterable[str]) -> frozenset[str]:
    terms = set()
    for line in lines:
        term = line.split("#", 1)[0].strip().lower()
        if term:
            terms.add(term)
    return frozenset(terms)


@dataclass(frozen=True)
class PreprocessConfig:
    """Knobs for the preprocessing pipeline.

    ``bigrams`` additionally emits ``t1_t2`` phrase tokens for adjacent
    surviving terms, after the unigrams.
    """

    strip_markup: bool = True
    stopwords: frozenset[str] = field(default_factory=default_stopwords)
    stemming: bool = True
    bigrams: bool = False

    def __post_init__(self):
        for w in self.stopwords:
            if w != w.lower() or not w or any(ch.isspace() for ch in w):
                raise ValueError(f"invalid stopword: {w!r}")


@dataclass(frozen=True)
class TermList:
    """Ordered preprocessed terms of one document."""

    doc_id: str
    terms: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.terms)


def _split_terms(text: str) -> list[str]:
    # maximal [a-z0-9] runs after Unicode-aware lowercasing; anything
    # else (hyphens included) is a separator
    return _TERM_RE.findall(text.lower())


def _bigram_tokens(terms: Sequence[str]) -> list[str]:
    return [f"{a}_{b}" for a, b in zip(terms, terms[1:])]


def tokenize(text: str, config: PreprocessConfig | None = None) -> list[str]:
    """Lowercase and split into terms; with ``config.bigrams``, phrase tokens
    over stopword-surviving adjacent pairs are appended after the unigrams.
    """
    terms = _split_terms(text)
    if config is not None and config.bigrams:
        return terms + _bigram_tokens(remove_stopwords(terms, config.stopwords))
    return terms


def remove_stopwords(terms: Sequence[str], stopwords: frozenset[str]) -> list[str]:
    """Keep, in order, the terms not in the stopword set."""
    return [t for t in terms if t not in stopwords]


def preprocess_document(doc: RawDocument, config: PreprocessConfig | None = None) -> TermList:
    """Run the full pipeline on one document.

    Stage order: markup strip, tokenize, stopword removal, stemming,
    bigram emission. Stemming runs after stopword removal so inflected
    forms are filtered by their surface form, and bigrams pair the final
    content roots.
    """
    if config is None:
        config = PreprocessConfig()
    text = strip_markup(doc.content) if config.strip_markup else doc.content
    terms = remove_stopwords(_split_terms(text), config.stopwords)
    if config.stemming:
        terms = [stem(t) for t in terms]
    if config.bigrams:
        terms = terms + _bigram_tokens(terms)
    return TermList(doc.id, tuple(terms))
