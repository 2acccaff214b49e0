"""Method of types: type enumeration, class sizes, typical sets, joint-type sampling.

A type is the frequency vector of a length-``n`` string over a finite
alphabet.  Enumeration order is ascending lexicographic on the count vectors;
every serialized type index in this package refers to that order.

Multinomial type-class sizes are computed exactly with big integers up to
``EXACT_FACTORIAL_MAX_N`` and with log-gamma beyond (relative error well
under 1e-9 there).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .classical import ClassicalChannel, Distribution, ValidationError
from .rng import generator

__all__ = [
    "TypeVector",
    "JointType",
    "EXACT_FACTORIAL_MAX_N",
    "enumerate_types",
    "log_type_class_size",
    "log2_multinomial",
    "iid_type_probability",
    "typical_mass",
    "sample_joint_type",
    "type_of_string",
]

EXACT_FACTORIAL_MAX_N = 300


@dataclass(frozen=True)
class TypeVector:
    """Symbol frequency vector of a length-``n`` string."""

    counts: tuple
    n: int = field(init=False)

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        if any(c < 0 for c in counts):
            raise ValidationError("negative count in type vector")
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "n", sum(counts))

    @property
    def d(self) -> int:
        return len(self.counts)

    def empirical(self) -> Distribution:
        if self.n == 0:
            raise ValidationError("empty string has no empirical distribution")
        return Distribution(np.asarray(self.counts, dtype=float) / self.n)


@dataclass(frozen=True)
class JointType:
    """Frequency array of a string over a product alphabet (2 or 3 factors)."""

    counts: np.ndarray
    n: int = field(init=False)

    def __post_init__(self):
        arr = np.asarray(self.counts, dtype=np.int64)
        if arr.ndim < 2:
            raise ValidationError("joint type needs at least two axes")
        if arr.min() < 0:
            raise ValidationError("negative count in joint type")
        object.__setattr__(self, "counts", arr)
        object.__setattr__(self, "n", int(arr.sum()))

    def marginal(self, axis: int) -> TypeVector:
        axes = tuple(i for i in range(self.counts.ndim) if i != axis)
        return TypeVector(tuple(self.counts.sum(axis=axes).tolist()))

    def pair_marginal(self, axis_a: int, axis_b: int) -> "JointType":
        axes = tuple(i for i in range(self.counts.ndim) if i not in (axis_a, axis_b))
        return JointType(self.counts.sum(axis=axes))

    def flat(self) -> TypeVector:
        return TypeVector(tuple(self.counts.ravel().tolist()))


def enumerate_types(n: int, d: int) -> list[TypeVector]:
    """All count vectors of length ``d`` summing to ``n``, ascending lex order."""
    if d < 1:
        raise ValidationError("alphabet size must be at least 1")
    if n < 0:
        raise ValidationError("block length must be nonnegative")
    out: list[TypeVector] = []

    def rec(prefix: list, remaining: int, slots: int):
        if slots == 1:
            out.append(TypeVector(tuple(prefix + [remaining])))
            return
        for c in range(remaining + 1):
            rec(prefix + [c], remaining - c, slots - 1)

    rec([], n, d)
    return out


def log2_multinomial(n: int, counts) -> float:
    """``log2 (n! / prod counts_i!)``, exact below the big-integer crossover."""
    counts = [int(c) for c in counts]
    if n <= EXACT_FACTORIAL_MAX_N:
        value = math.factorial(n)
        for c in counts:
            value //= math.factorial(c)
        return math.log2(value)
    lg = math.lgamma(n + 1) - sum(math.lgamma(c + 1) for c in counts)
    return lg / math.log(2.0)


def log_type_class_size(t: TypeVector | JointType) -> float:
    """log2 of the number of strings with type ``t``."""
    if isinstance(t, JointType):
        return log2_multinomial(t.n, t.counts.ravel().tolist())
    return log2_multinomial(t.n, t.counts)


def iid_type_probability(p: Distribution | np.ndarray, t: TypeVector) -> float:
    """Probability mass that ``n`` i.i.d. draws from ``p`` land in type class ``t``."""
    p = p if isinstance(p, Distribution) else Distribution(p)
    if len(p) != t.d:
        raise ValidationError("dimension mismatch between distribution and type")
    log2p = 0.0
    for c, prob in zip(t.counts, p.probs):
        if c == 0:
            continue
        if prob == 0.0:
            return 0.0
        log2p += c * math.log2(prob)
    return float(2.0 ** (log_type_class_size(t) + log2p))


def typical_mass(p: Distribution | np.ndarray, n: int, delta: float) -> float:
    """Exact i.i.d. mass of types with ``||t/n - p||_1 <= delta``."""
    if delta <= 0:
        raise ValidationError("delta must be positive")
    p = p if isinstance(p, Distribution) else Distribution(p)
    total = 0.0
    for t in enumerate_types(n, len(p)):
        dist = float(np.abs(np.asarray(t.counts) / n - p.probs).sum())
        if dist <= delta + 1e-12:
            total += iid_type_probability(p, t)
    return min(total, 1.0)


def type_of_string(x: np.ndarray, d: int) -> TypeVector:
    counts = np.bincount(np.asarray(x, dtype=np.int64), minlength=d)
    return TypeVector(tuple(counts.tolist()))


def sample_joint_type(s: TypeVector, channel: ClassicalChannel, seed: int) -> JointType:
    """Draw a joint input/output type for a string of type ``s`` pushed through a channel.

    Each input symbol's row of outputs is an independent multinomial with
    ``s_x`` trials and probabilities ``N(.|x)``, so the draw has exactly the
    law ``Pr[t] = prod_x s_x! prod_y N(y|x)^{t_xy} / t_xy!`` on joint types
    whose input marginal is ``s``.
    """
    if s.d != channel.x_size:
        raise ValidationError("input type incompatible with channel")
    rng = generator(seed)
    rows = [rng.multinomial(c, channel.matrix[x]) for x, c in enumerate(s.counts)]
    return JointType(np.stack(rows))
