"""Finite probability distributions, classical channels, and entropic functionals.

Conventions used everywhere in this package:

* all entropic quantities are in bits (log base 2),
* ``0 * log 0 = 0`` by continuity,
* probability vectors must be nonnegative and sum to 1 within ``PROB_ATOL``;
  inputs inside that tolerance are renormalized, anything else is rejected.

Distances are reported as the full 1-norm ``sum |p - q|``, which lives in
``[0, 2]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "PROB_ATOL",
    "ValidationError",
    "Distribution",
    "ClassicalChannel",
    "JointDistribution",
    "shannon_entropy",
    "binary_entropy",
    "mutual_information",
    "conditional_entropy",
    "kl_divergence",
    "tv_distance",
    "eta_bar",
]

PROB_ATOL = 1e-9


class ValidationError(ValueError):
    """An input violates a domain invariant (normalization, shape, positivity)."""


def _clean_probs(values, atol: float = PROB_ATOL) -> np.ndarray:
    arr = np.asarray(values, dtype=float)
    if arr.size == 0:
        raise ValidationError("empty probability array")
    if not np.all(np.isfinite(arr)):
        raise ValidationError("non-finite probability entries")
    if arr.min() < -atol:
        raise ValidationError(f"negative probability {arr.min():.3e}")
    total = arr.sum()
    if abs(total - 1.0) > atol:
        raise ValidationError(f"probabilities sum to {total!r}, not 1")
    arr = np.clip(arr, 0.0, None)
    return arr / arr.sum()


@dataclass(frozen=True)
class Distribution:
    """Probability vector over a finite alphabet."""

    probs: np.ndarray
    alphabet_size: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "probs", _clean_probs(self.probs))
        object.__setattr__(self, "alphabet_size", int(self.probs.size))

    def __len__(self) -> int:
        return self.alphabet_size


@dataclass(frozen=True)
class ClassicalChannel:
    """Row-stochastic conditional probability matrix ``N(y|x)``."""

    matrix: np.ndarray

    def __post_init__(self):
        mat = np.asarray(self.matrix, dtype=float)
        if mat.ndim != 2:
            raise ValidationError("channel matrix must be 2-dimensional")
        rows = []
        for i, row in enumerate(mat):
            try:
                rows.append(_clean_probs(row))
            except ValidationError as exc:
                raise ValidationError(f"row {i}: {exc}") from exc
        object.__setattr__(self, "matrix", np.array(rows))

    @property
    def x_size(self) -> int:
        return self.matrix.shape[0]

    @property
    def y_size(self) -> int:
        return self.matrix.shape[1]

    def compose(self, second: "ClassicalChannel") -> "ClassicalChannel":
        """Markov composition: feed this channel's output into ``second``."""
        if second.x_size != self.y_size:
            raise ValidationError("composition dimensions do not match")
        return ClassicalChannel(self.matrix @ second.matrix)

    def joint(self, p: Distribution | np.ndarray) -> "JointDistribution":
        """Joint law of ``(X, Y)`` when ``X ~ p`` is fed through the channel."""
        p = p if isinstance(p, Distribution) else Distribution(p)
        if len(p) != self.x_size:
            raise ValidationError("input distribution size mismatch")
        return JointDistribution(p.probs[:, None] * self.matrix)

    def to_json_dict(self) -> dict:
        return {
            "kind": "classical",
            "input_size": self.x_size,
            "output_size": self.y_size,
            "matrix": self.matrix.tolist(),
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "ClassicalChannel":
        mat = np.asarray(obj["matrix"], dtype=float)
        if mat.shape != (int(obj["input_size"]), int(obj["output_size"])):
            raise ValidationError("matrix shape disagrees with declared sizes")
        return cls(mat)

    @classmethod
    def bsc(cls, p: float) -> "ClassicalChannel":
        return cls(np.array([[1 - p, p], [p, 1 - p]]))

    @classmethod
    def bec(cls, e: float) -> "ClassicalChannel":
        return cls(np.array([[1 - e, e, 0.0], [0.0, e, 1 - e]]))

    @classmethod
    def identity(cls, d: int) -> "ClassicalChannel":
        return cls(np.eye(d))

    @classmethod
    def constant(cls, d_in: int, d_out: int, y0: int = 0) -> "ClassicalChannel":
        mat = np.zeros((d_in, d_out))
        mat[:, y0] = 1.0
        return cls(mat)


@dataclass(frozen=True)
class JointDistribution:
    """Joint probability array over a product of finite alphabets."""

    table: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.table, dtype=float)
        if arr.ndim < 2:
            raise ValidationError("joint distribution needs at least two axes")
        flat = _clean_probs(arr.ravel())
        object.__setattr__(self, "table", flat.reshape(arr.shape))

    def marginal(self, axis: int) -> Distribution:
        axes = tuple(i for i in range(self.table.ndim) if i != axis)
        return Distribution(self.table.sum(axis=axes))


def _entropy_bits(probs: np.ndarray) -> float:
    p = probs[probs > 0]
    return float(-(p * np.log2(p)).sum())


def shannon_entropy(p: Distribution | np.ndarray) -> float:
    """``H(p) = -sum p_i log2 p_i`` in bits."""
    p = p if isinstance(p, Distribution) else Distribution(p)
    return _entropy_bits(p.probs)


def binary_entropy(p: float) -> float:
    if p <= 0.0 or p >= 1.0:
        return 0.0
    return float(-p * math.log2(p) - (1 - p) * math.log2(1 - p))


def mutual_information(j: JointDistribution | np.ndarray) -> float:
    """``I(X;Y) = H(X) + H(Y) - H(XY)``, first axis against the rest."""
    j = j if isinstance(j, JointDistribution) else JointDistribution(j)
    hx = _entropy_bits(j.table.sum(axis=tuple(range(1, j.table.ndim))))
    hy = _entropy_bits(j.table.sum(axis=0).ravel())
    hxy = _entropy_bits(j.table.ravel())
    return hx + hy - hxy


def conditional_entropy(j: JointDistribution | np.ndarray) -> float:
    """``H(Y|X) = H(XY) - H(X)`` with ``X`` on the first axis."""
    j = j if isinstance(j, JointDistribution) else JointDistribution(j)
    hx = _entropy_bits(j.table.sum(axis=tuple(range(1, j.table.ndim))))
    hxy = _entropy_bits(j.table.ravel())
    return hxy - hx


def kl_divergence(q: Distribution | np.ndarray, p: Distribution | np.ndarray) -> float:
    """``D(q || p)`` in bits; ``inf`` when ``supp(q)`` is not inside ``supp(p)``."""
    q = q if isinstance(q, Distribution) else Distribution(q)
    p = p if isinstance(p, Distribution) else Distribution(p)
    if len(q) != len(p):
        raise ValidationError("alphabet size mismatch")
    qv, pv = q.probs, p.probs
    mask = qv > 0
    if np.any(pv[mask] == 0):
        return math.inf
    return float((qv[mask] * np.log2(qv[mask] / pv[mask])).sum())


def tv_distance(p: Distribution | np.ndarray, q: Distribution | np.ndarray) -> float:
    """1-norm distance ``sum |p - q|`` (twice the total-variation distance)."""
    p = p if isinstance(p, Distribution) else Distribution(p)
    q = q if isinstance(q, Distribution) else Distribution(q)
    if len(p) != len(q):
        raise ValidationError("alphabet size mismatch")
    return float(np.abs(p.probs - q.probs).sum())


def eta_bar(x: float) -> float:
    """``eta(min(x, 1/e))`` with ``eta(x) = -x log2 x``; continuity modulus term."""
    x = min(x, 1.0 / math.e)
    if x <= 0.0:
        return 0.0
    return -x * math.log2(x)
