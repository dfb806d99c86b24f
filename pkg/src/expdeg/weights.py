"""Hilbert-Mumford weights for one-parameter subgroups of the expansion torus.

A one-parameter subgroup is an integer vector ``s = (s_1, ..., s_n)`` in
tau-coordinates, padded with ``s_0 = s_{n+1} = 0``.  Everything here is
integer arithmetic: the half-integer middle term of the weight recipe is
evaluated after a sign split, so no fractions ever appear.

When a limit does not exist the weight is ``INFINITY`` (such subgroups
never destabilize).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .errors import InvalidPosition, LengthMismatch, NoLimit
from .expansion import AVector, avector_from_set

INFINITY = math.inf

OnePS = tuple[int, ...]


@dataclass(frozen=True)
class Smooth:
    """Point on a unique component; ``level`` is 0 (source side) or an element of I."""

    level: int


@dataclass(frozen=True)
class Corner:
    """Point on the intersection of the components ``lower`` and ``upper``."""

    lower: int
    upper: int


Kind = Union[Smooth, Corner]


@dataclass(frozen=True)
class PointPosition:
    a: AVector
    kind: Kind
    edge: Optional[str] = None

    def __post_init__(self):
        allowed = (0, *self.a.labels)
        k = self.kind
        if isinstance(k, Smooth):
            if k.level not in allowed:
                raise InvalidPosition(f"level {k.level} not in {allowed}")
        elif isinstance(k, Corner):
            if k.upper not in self.a.labels or k.lower not in allowed:
                raise InvalidPosition(f"corner {k} not made of components in {allowed}")
            if allowed.index(k.upper) != allowed.index(k.lower) + 1:
                raise InvalidPosition(f"corner {k} is not a consecutive pair in {allowed}")
        else:
            raise InvalidPosition(f"unknown position kind {k!r}")

    @property
    def is_smooth(self) -> bool:
        return isinstance(self.kind, Smooth)

    @property
    def ordinal(self) -> int:
        """Level index ``0..r`` of a smooth point (lower level for a corner)."""
        k = self.kind
        return self.a.level_ordinal(k.level if isinstance(k, Smooth) else k.lower)


@dataclass(frozen=True)
class LimitOutcome:
    exists: bool
    J: Optional[frozenset] = None
    landing: Optional[PointPosition] = None


def _padded(s: Sequence[int], n: int) -> tuple[int, ...]:
    s = tuple(int(x) for x in s)
    if len(s) != n:
        raise LengthMismatch(f"expected {n} exponents, got {len(s)}")
    return (0, *s, 0)


def tau_to_sigma(s: Sequence[int]) -> tuple[int, ...]:
    """Exponents of ``sigma_1, ..., sigma_{n+1}``: ``w_i = s_i - s_{i-1}``."""
    p = (0, *s, 0)
    return tuple(p[i] - p[i - 1] for i in range(1, len(p)))


def sigma_to_tau(w: Sequence[int]) -> tuple[int, ...]:
    if sum(w) != 0:
        raise ValueError("sigma exponents must sum to zero")
    return tuple(int(x) for x in np.cumsum(w)[:-1])


def limit_exists(index_set: Iterable[int], s: Sequence[int]) -> bool:
    I = frozenset(index_set)
    p = _padded(s, len(s))
    return all(p[i - 1] <= p[i] for i in range(1, len(p)) if i not in I)


def _successor(x: int, pool: Iterable[int]) -> int:
    return min(y for y in pool if y > x)


def _predecessor(x: int, pool: Iterable[int]) -> int:
    return max(y for y in pool if y < x)


def limit(p: PointPosition, s: Sequence[int]) -> LimitOutcome:
    """Flow ``p`` to ``tau -> 0`` under the subgroup ``s``.

    Raises ``NoLimit`` when the base point has no limit, i.e. when
    ``s_{i-1} > s_i`` for some ``i`` outside the index set.
    """
    a = p.a
    n = a.n
    I = a.index_set
    ps = _padded(s, n)
    for i in range(1, n + 2):
        if i not in I and ps[i - 1] > ps[i]:
            raise NoLimit(f"s_{i - 1} > s_{i} with {i} not in I")
    J = frozenset(I | {i for i in range(1, n + 2) if ps[i - 1] < ps[i]})
    aJ = avector_from_set(n, J)
    J0 = J | {0}
    kind = p.kind
    if isinstance(kind, Corner):
        j = kind.upper
        landing = Corner(_predecessor(j, J0), j)
    else:
        i = kind.level
        j = _successor(i, I | {n + 2})
        run = range(i, j)
        if all(ps[k] != 0 for k in run):
            top = next((k for k in run if ps[k] > 0), j)
            landing = Corner(_predecessor(top, J0), top)
        else:
            landing = Smooth(next(k for k in run if ps[k] == 0))
    return LimitOutcome(True, J, PointPosition(aJ, landing, p.edge))


def point_weight(p: PointPosition, s: Sequence[int]) -> Union[int, float]:
    """Weight of the linearized fibre at the limit of ``p``; ``INFINITY`` if none."""
    a = p.a
    n = a.n
    I = a.index_set
    ps = _padded(s, n)
    if not limit_exists(I, s):
        return INFINITY
    kind = p.kind
    if isinstance(kind, Corner):
        lo = hi = kind.upper
    else:
        i = kind.level
        j = _successor(i, I | {n + 2})
        run = range(i, j)
        if all(ps[k] != 0 for k in run):
            lo = hi = next((k for k in run if ps[k] > 0), j)
        else:
            lo = next(k for k in run if ps[k] == 0)
            hi = next((k for k in run if k > lo and ps[k] != 0), j)
    total = 0
    for k in range(1, n + 1):
        if k < lo:
            total += -k * ps[k]
        elif k >= hi:
            total += (n + 1 - k) * ps[k]
    return total


def point_weight_coefficients(p: PointPosition) -> tuple[np.ndarray, np.ndarray]:
    """Per-coordinate slopes of ``point_weight`` on ``s_k > 0`` and ``s_k < 0``.

    ``point_weight(p, s) == pos @ max(s, 0) + neg @ min(s, 0)`` wherever
    the limit exists.
    """
    a = p.a
    n = a.n
    k = np.arange(1, n + 1)
    kind = p.kind
    if isinstance(kind, Corner):
        lo = hi = kind.upper
    else:
        lo = kind.level
        hi = _successor(lo, a.index_set | {n + 2})
    pos = np.where(k < lo, -k, n + 1 - k)
    neg = np.where(k < hi, -k, n + 1 - k)
    return pos.astype(np.int64), neg.astype(np.int64)


# --- the level recipe ------------------------------------------------------


def omega_level(a: AVector, i: int, k: int, s_k: int) -> int:
    """Weight contribution of coordinate ``k`` for one point on level ``i``.

    The middle range carries ``((n+1)/2 - k) s_k + (n+1)/2 |s_k|``; it is
    evaluated doubled and halved, which is exact because the doubled
    value is always even.
    """
    n = a.n
    if not 0 <= i <= a.r:
        raise ValueError(f"level {i} outside 0..{a.r}")
    if k < a[i]:
        return -k * s_k
    if k < a[i + 1]:
        twice = (n + 1 - 2 * k) * s_k + (n + 1) * abs(s_k)
        return twice // 2
    return (n + 1 - k) * s_k


def omega_k(a: AVector, v: Sequence[int], k: int, s_k: int) -> int:
    return sum(vi * omega_level(a, i, k, s_k) for i, vi in enumerate(v))


def omega(a: AVector, v: Sequence[int], s: Sequence[int]) -> int:
    """Combinatorial weight of a smooth-support cycle with numerical support ``v``."""
    if len(v) != a.r + 1:
        raise LengthMismatch(f"support has {len(v)} entries, need {a.r + 1}")
    if len(s) != a.n:
        raise LengthMismatch(f"expected {a.n} exponents, got {len(s)}")
    return sum(omega_k(a, v, k, s[k - 1]) for k in range(1, a.n + 1))


def level_of(a: AVector, k: int) -> int:
    """The unique ``j`` with ``a_j <= k < a_{j+1}``."""
    e = a.entries
    for j in range(a.r + 1):
        if e[j] <= k < e[j + 1]:
            return j
    raise ValueError(f"k={k} outside 1..{a.n}")


def omega_closed_form(a: AVector, b: Sequence[int], k: int, s_k: int) -> int:
    """Closed form of ``omega_k(v_b, s)`` for a padded tuple ``b`` over the same ``(n, r)``."""
    entries = b.entries if isinstance(b, AVector) else tuple(b)
    if len(entries) != a.r + 2:
        raise LengthMismatch("a and b must have the same length")
    n = a.n
    j = level_of(a, k)
    if s_k >= 0:
        return -abs(s_k) * ((k + 1 - entries[j + 1]) * (n + 1) - k)
    return abs(s_k) * ((k + 1 - entries[j]) * (n + 1) - k)


def omega_config(c, s: Sequence[int]) -> Union[int, float]:
    """Combinatorial weight of a configuration: multiplicity-weighted point weights."""
    total = 0
    for pt in c.points:
        w = point_weight(pt.position, s)
        if w == INFINITY:
            return INFINITY
        total += pt.mult * w
    return total


# --- vectorised helpers for box sweeps ------------------------------------


def one_ps_box(n: int, S: int) -> np.ndarray:
    """All integer vectors in ``[-S, S]^n`` as rows of an ``int64`` array."""
    axis = np.arange(-S, S + 1, dtype=np.int64)
    grids = np.meshgrid(*([axis] * n), indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1)


def limit_mask(index_set: Iterable[int], s_rows: np.ndarray) -> np.ndarray:
    """Rows of ``s_rows`` along which the limit exists."""
    I = frozenset(index_set)
    m, n = s_rows.shape
    zeros = np.zeros((m, 1), dtype=s_rows.dtype)
    padded = np.hstack([zeros, s_rows, zeros])
    ok = np.ones(m, dtype=bool)
    for i in range(1, n + 2):
        if i not in I:
            ok &= padded[:, i - 1] <= padded[:, i]
    return ok
