"""Fuzzy c-means over document feature matrices.

The engine alternates the weighted-mean center update

    v_j = sum_i u_ji^m x_i / sum_i u_ji^m

with the inverse-distance membership update

    u_ji = 1 / sum_k (d_ji / d_ki)^(2/(m-1))

and stops when the largest entrywise membership change drops below
epsilon. The objective it descends is

    J_m = sum_i sum_j u_ji^m ||x_i - v_j||^2.

All reductions are evaluated in fixed document-index order (einsum
without optimization), so repeated runs are bit-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

__all__ = [
    "FeatureMatrix",
    "FcmParams",
    "FcmResult",
    "validate_partition",
    "init_partition",
    "update_centers",
    "pairwise_distances",
    "update_memberships",
    "objective",
    "run_fcm",
    "harden",
    "save_result",
    "load_result",
]

PARTITION_COLUMN_TOL = 1e-9
WF_MAX = 10000.0


@dataclass(frozen=True, eq=False)
class FeatureMatrix:
    """n documents as rows of WF values over m features."""

    doc_ids: tuple[str, ...]
    data: np.ndarray  # n x m float64

    def __post_init__(self):
        object.__setattr__(self, "doc_ids", tuple(self.doc_ids))
        data = np.asarray(self.data, dtype=float)
        if data.ndim != 2 or data.shape[0] < 1 or data.shape[1] < 1:
            raise ValueError("feature matrix must be 2-d and non-empty")
        if len(self.doc_ids) != data.shape[0]:
            raise ValueError("doc_ids length must match the number of rows")
        if len(set(self.doc_ids)) != len(self.doc_ids):
            raise ValueError("doc_ids must be unique")
        if not np.all(np.isfinite(data)) or data.min() < 0 or data.max() > WF_MAX:
            raise ValueError(f"feature values must lie in [0, {WF_MAX:g}]")
        object.__setattr__(self, "data", data)

    @property
    def n_docs(self) -> int:
        return self.data.shape[0]

    @property
    def n_features(self) -> int:
        return self.data.shape[1]


@dataclass(frozen=True)
class FcmParams:
    """Clustering parameters.

    fuzzifier is the membership exponent m and must be > 1 (at m = 1 the
    membership update degenerates to the hard assignment rule, which this
    engine does not implement). init, when given, is an explicit c x n
    starting partition; otherwise each column of the starting partition is
    drawn uniformly from the probability simplex using the seed.
    """

    c: int
    fuzzifier: float = 2.0
    epsilon: float = 1e-3
    max_iters: int = 100
    init: np.ndarray | None = None
    seed: int = 0

    def __post_init__(self):
        if self.c < 1:
            raise ValueError("cluster count must be >= 1")
        if not self.fuzzifier > 1.0:
            raise ValueError("fuzzifier must be > 1")
        if not 0.0 < self.epsilon < 1.0:
            raise ValueError("epsilon must lie in (0, 1)")
        if self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")


@dataclass(frozen=True, eq=False)
class FcmResult:
    """Final state plus per-iteration history of one engine run."""

    partition: np.ndarray  # c x n
    centers: np.ndarray  # c x m
    iterations: int
    objective_history: tuple[float, ...]
    max_change_history: tuple[float, ...]
    converged: bool
    trace: tuple[dict, ...] | None = None


def validate_partition(u: np.ndarray, n: int | None = None, c: int | None = None) -> np.ndarray:
    """Check membership range and column stochasticity; returns float64 copy."""
    u = np.asarray(u, dtype=float)
    if u.ndim != 2:
        raise ValueError("invalid partition: not a 2-d matrix")
    if c is not None and u.shape[0] != c:
        raise ValueError(f"invalid partition: expected {c} rows, got {u.shape[0]}")
    if n is not None and u.shape[1] != n:
        raise ValueError(f"invalid partition: expected {n} columns, got {u.shape[1]}")
    if not np.all(np.isfinite(u)) or u.min() < 0.0 or u.max() > 1.0:
        raise ValueError("invalid partition: memberships must lie in [0, 1]")
    col_sums = np.einsum("cn->n", u)
    if np.max(np.abs(col_sums - 1.0)) > PARTITION_COLUMN_TOL:
        raise ValueError("invalid partition: columns must sum to 1")
    return u


def init_partition(
    n: int,
    c: int,
    init: np.ndarray | None = None,
    seed: int = 0,
) -> np.ndarray:
    """Explicit starting partition (validated) or a seeded random one with
    each column uniform on the simplex."""
    if not 1 <= c <= n:
        raise ValueError(f"cluster count must lie in [1, {n}]")
    if init is not None:
        return validate_partition(init, n=n, c=c)
    rng = np.random.default_rng(seed)
    u = rng.exponential(scale=1.0, size=(c, n))
    return u / np.einsum("cn->n", u)


def update_centers(u: np.ndarray, x: np.ndarray, fuzzifier: float) -> np.ndarray:
    """Fuzzily weighted document means, one row per cluster."""
    w = u**fuzzifier
    weight_sums = np.einsum("cn->c", w)
    if np.any(weight_sums == 0.0):
        raise ValueError("empty cluster")
    return np.einsum("cn,nm->cm", w, x) / weight_sums[:, None]


def pairwise_distances(x: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Euclidean distance of every document to every center, c x n."""
    diff = x[None, :, :] - v[:, None, :]
    return np.sqrt(np.einsum("cnm,cnm->cn", diff, diff))


def update_memberships(d: np.ndarray, fuzzifier: float) -> np.ndarray:
    """Inverse-distance memberships; a zero-distance document becomes a
    one-hot column on the first such cluster."""
    c, n = d.shape
    u = np.zeros((c, n))
    zero = d == 0.0
    singular = zero.any(axis=0)
    if np.any(singular):
        cols = np.flatnonzero(singular)
        u[np.argmax(zero[:, cols], axis=0), cols] = 1.0
    regular = ~singular
    if np.any(regular):
        dr = d[:, regular]
        ratios = (dr[:, None, :] / dr[None, :, :]) ** (2.0 / (fuzzifier - 1.0))
        u[:, regular] = 1.0 / np.einsum("jkn->jn", ratios)
    return u


def objective(x: np.ndarray, u: np.ndarray, v: np.ndarray, fuzzifier: float) -> float:
    """J_m: fuzzily weighted sum of squared document-center distances."""
    diff = x[None, :, :] - v[:, None, :]
    sq = np.einsum("cnm,cnm->cn", diff, diff)
    return float(np.einsum("cn,cn->", u**fuzzifier, sq))


def run_fcm(x: FeatureMatrix, params: FcmParams, record_trace: bool = False) -> FcmResult:
    """Iterate centers -> distances -> memberships from the starting
    partition until the max membership change drops below epsilon or
    max_iters is hit. Deterministic for a given matrix and params.
    """
    n = x.n_docs
    if params.c > n:
        raise ValueError(f"cluster count must lie in [1, {n}]")
    u = init_partition(n, params.c, params.init, params.seed)
    data = x.data
    objective_history: list[float] = []
    max_change_history: list[float] = []
    trace: list[dict] = []
    converged = False
    iterations = 0
    v = None
    for iterations in range(1, params.max_iters + 1):
        v = update_centers(u, data, params.fuzzifier)
        d = pairwise_distances(data, v)
        u_next = update_memberships(d, params.fuzzifier)
        jm = objective(data, u_next, v, params.fuzzifier)
        change = float(np.max(np.abs(u_next - u)))
        objective_history.append(jm)
        max_change_history.append(change)
        u = u_next
        if record_trace:
            trace.append(
                {
                    "iteration": iterations,
                    "centers": v.tolist(),
                    "memberships": u.tolist(),
                    "objective": jm,
                    "max_change": change,
                }
            )
        if change < params.epsilon:
            converged = True
            break
    return FcmResult(
        partition=u,
        centers=v,
        iterations=iterations,
        objective_history=tuple(objective_history),
        max_change_history=tuple(max_change_history),
        converged=converged,
        trace=tuple(trace) if record_trace else None,
    )


def harden(u: np.ndarray) -> np.ndarray:
    """Crisp assignment: per-column argmax, ties to the lowest cluster index."""
    u = np.asarray(u)
    return np.argmax(u, axis=0)


def save_result(
    result: FcmResult,
    doc_ids: tuple[str, ...] | list[str],
    features: list[str],
    path: str | Path,
) -> None:
    """Write a result file; floats keep their shortest round-trip form."""
    payload = {
        "doc_ids": list(doc_ids),
        "features": list(features),
        "memberships": result.partition.tolist(),
        "centers": result.centers.tolist(),
        "iterations": result.iterations,
        "converged": result.converged,
        "objective_history": list(result.objective_history),
    }
    if result.trace is not None:
        payload["trace"] = list(result.trace)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        json.dump(payload, f, ensure_ascii=False, indent=2)
        f.write("\n")


def load_result(path: str | Path) -> dict:
    with open(path, encoding="utf-8") as f:
        raw = json.load(f)
    required = {"doc_ids", "features", "memberships", "centers", "iterations",
                "converged", "objective_history"}
    missing = required - raw.keys()
    if missing:
        raise ValueError(f"invalid result file {path}: missing {sorted(missing)}")
    raw["memberships"] = np.asarray(raw["memberships"], dtype=float)
    raw["centers"] = np.asarray(raw["centers"], dtype=float)
    return raw
