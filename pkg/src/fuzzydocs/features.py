"""Bag-of-words counting, normalized word frequencies, labeled corpus
profiles, discriminative feature selection, and document vectorization.

A word frequency (WF) is ``count / total * 10000`` -- occurrences per ten
thousand terms, kept as a real number throughout.
"""

from __future__ import annotations

import json
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from pathlib import Path

from .preprocess import TermList

__all__ = [
    "WF_SCALE",
    "BagOfWords",
    "LabeledProfile",
    "DocumentVector",
    "count_terms",
    "word_frequency",
    "build_profile",
    "select_features",
    "vectorize",
    "save_feature_set",
    "load_feature_set",
    "save_profile",
    "load_profile",
]

WF_SCALE = 10000.0

# A feature set is an ordered list of unique terms; the order defines the
# vector dimensions.
FeatureSet = list[str]


@dataclass(frozen=True)
class BagOfWords:
    """Term counts of one document plus its total term count."""

    doc_id: str
    counts: dict[str, int]
    total: int


@dataclass(frozen=True)
class LabeledProfile:
    """Corpus-level WF per term for one known document category."""

    label: str
    wf: dict[str, float]


@dataclass(frozen=True)
class DocumentVector:
    """WF values of one document over a feature set, in feature order."""

    doc_id: str
    values: tuple[float, ...]


def count_terms(terms: TermList) -> BagOfWords:
    return BagOfWords(terms.doc_id, dict(Counter(terms.terms)), len(terms.terms))


def word_frequency(count: int, total: int) -> float:
    """Occurrences per 10000 terms, unrounded."""
    if total <= 0:
        raise ValueError("empty document")
    return count / total * WF_SCALE


def build_profile(label: str, docs: Iterable[TermList]) -> LabeledProfile:
    """Pool term counts over a labeled sample corpus and normalize once.

    Pooling is corpus-level: one WF per term from the summed counts over
    the summed document lengths, not an average of per-document WFs.
    """
    pooled: Counter[str] = Counter()
    total = 0
    for doc in docs:
        pooled.update(doc.terms)
        total += len(doc.terms)
    if total == 0:
        raise ValueError("empty corpus")
    wf = {t: word_frequency(pooled[t], total) for t in sorted(pooled)}
    return LabeledProfile(label, wf)


def select_features(
    profiles: Sequence[LabeledProfile],
    top_k: int = 50,
    min_ratio: float = 2.0,
    min_wf: float = 5.0,
) -> FeatureSet:
    """Pick the terms whose WF differs most between labeled profiles.

    Each term is scored by ``max(wf) / (min(wf) + 1)`` over the profiles,
    a term missing from a profile counting as WF 0; the +1 keeps terms
    absent from one label finitely ranked. Terms with score >= min_ratio
    and best-label WF >= min_wf qualify; the top_k qualifiers are returned
    in descending score order, ties broken lexicographically.
    """
    if len(profiles) < 2:
        raise ValueError("need at least two labeled profiles")
    if top_k < 1:
        raise ValueError("top_k must be positive")
    scored = [(term, ratio) for term, ratio in score_terms(profiles) if ratio >= min_ratio]
    selected = [term for term, ratio in scored
                if max(p.wf.get(term, 0.0) for p in profiles) >= min_wf]
    if not selected:
        raise ValueError("no discriminative features")
    return selected[:top_k]


def score_terms(profiles: Sequence[LabeledProfile]) -> list[tuple[str, float]]:
    """Discrimination ratio of every term seen in any profile, sorted by
    descending ratio (ties lexicographic)."""
    universe = sorted({t for p in profiles for t in p.wf})
    scored = []
    for term in universe:
        wfs = [p.wf.get(term, 0.0) for p in profiles]
        scored.append((term, max(wfs) / (min(wfs) + 1.0)))
    scored.sort(key=lambda tr: (-tr[1], tr[0]))
    return scored


def vectorize(bow: BagOfWords, features: Sequence[str]) -> DocumentVector:
    """WF of each feature in the document, zero where absent."""
    if bow.total <= 0:
        raise ValueError("empty document")
    values = tuple(word_frequency(bow.counts.get(t, 0), bow.total) for t in features)
    return DocumentVector(bow.doc_id, values)


def save_feature_set(features: Sequence[str], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        json.dump(list(features), f, ensure_ascii=False, indent=2)
        f.write("\n")


def load_feature_set(path: str | Path) -> FeatureSet:
    with open(path, encoding="utf-8") as f:
        features = json.load(f)
    if (
        not isinstance(features, list)
        or not features
        or not all(isinstance(t, str) and t for t in features)
        or len(set(features)) != len(features)
    ):
        raise ValueError(f"invalid feature set file: {path}")
    return features


def save_profile(profile: LabeledProfile, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        json.dump({"label": profile.label, "wf": profile.wf}, f, ensure_ascii=False, indent=2)
        f.write("\n")


def load_profile(path: str | Path) -> LabeledProfile:
    with open(path, encoding="utf-8") as f:
        raw = json.load(f)
    try:
        label = raw["label"]
        wf = {str(t): float(v) for t, v in raw["wf"].items()}
    except (TypeError, KeyError) as exc:
        raise ValueError(f"invalid profile file: {path}") from exc
    if not isinstance(label, str) or not label:
        raise ValueError(f"invalid profile file: {path}")
    return LabeledProfile(label, wf)
