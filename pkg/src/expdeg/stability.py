"""GIT and Li-Wu stability of configurations.

The decision procedure is the cycle-level criterion: a cycle over the
index tuple ``a`` is stable iff it has smooth support and its numerical
support equals ``canonical_support(a)``.  Unstable cycles come with an
explicit destabilizing subgroup whose weight is recomputed before it is
returned.  ``oracle_scan`` is an independent brute-force check over a box
of subgroups.
"""

from __future__ import annotations

import enum
import functools
import itertools
import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .configuration import Configuration, numerical_support
from .errors import IsStable, NoLimit, NotBipartite, NotLWStable
from .expansion import AVector, all_btuples, avector_from_support, canonical_support, partial_sums
from .graph import is_bipartitely_oriented
from .weights import (
    INFINITY,
    OnePS,
    limit_exists,
    limit_mask,
    omega_config,
    one_ps_box,
    point_weight_coefficients,
)

log = logging.getLogger(__name__)

MAX_DOUBLINGS = 64


def default_ell(n: int) -> int:
    """Smallest integer power of the linearization beating the bounded weight."""
    return 2 * n * n + 1


def default_box(n: int) -> int:
    return n + 1


class Status(enum.Enum):
    STABLE = "stable"
    UNSTABLE = "unstable"


@dataclass(frozen=True)
class StabilityVerdict:
    status: Status
    ell_threshold: int
    witness: Optional[OnePS] = None
    witness_weight: Optional[int] = None

    @property
    def stable(self) -> bool:
        return self.status is Status.STABLE


@dataclass(frozen=True)
class WeightEnvelope:
    """Interval known to contain the full weight for the ``ell``-th power."""

    center: int
    radius: int

    @property
    def lower(self) -> int:
        return self.center - self.radius

    @property
    def upper(self) -> int:
        return self.center + self.radius

    @property
    def sign_determined(self) -> bool:
        return self.lower > 0 or self.upper < 0


def weight_envelope(c: Configuration, s: Sequence[int], ell: Optional[int] = None) -> WeightEnvelope:
    ell = default_ell(c.n) if ell is None else ell
    w = omega_config(c, s)
    if w == INFINITY:
        raise NoLimit("no limit along this subgroup")
    return WeightEnvelope(ell * w, 2 * c.n * c.n * sum(abs(x) for x in s))


# --- destabilizing subgroups -------------------------------------------------


def _ramp(a: AVector, v: Sequence[int], d: int) -> list[int]:
    """Destabilizing subgroup from the proof of the stability criterion.

    With ``b`` the padded tuple of ``v``, look at the first index ``m``
    where ``a_m != b_m``.  If ``a_m > b_m`` the large entry ``d`` sits at
    ``a_m - 1`` on top of an ascending ramp; otherwise ``-d`` sits at
    ``a_m`` below a descending ramp.
    """
    n = a.n
    b = partial_sums(v)
    m = next(i for i in range(1, a.r + 1) if a[i] != b[i])
    s = [0] * (n + 1)  # 1-based
    if a[m] > b[m]:
        lo, hi = a[m - 1], a[m]
        for step, k in enumerate(range(lo, hi - 1)):
            s[k] = step
        s[hi - 1] = d
    else:
        lo, hi = a[m], a[m + 1]
        s[lo] = -d
        for t in range(1, hi - lo):
            s[hi - t] = -t
    return s[1:]


def _corner_support(c: Configuration) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two smooth supports bounding the weight of a cycle with corner points."""
    a = c.a
    v1 = [0] * (a.r + 1)
    v2 = [0] * (a.r + 1)
    corners = [p.position.ordinal for p in c.points if not p.position.is_smooth]
    jmin = min(corners)
    for p in c.points:
        i = p.position.ordinal
        v1[i] += p.mult
        if not p.position.is_smooth and i == jmin:
            v2[i + 1] += p.mult
        else:
            v2[i] += p.mult
    return tuple(v1), tuple(v2)


def _target_support(c: Configuration) -> tuple[int, ...]:
    va = canonical_support(c.a)
    if c.has_smooth_support:
        v = numerical_support(c)
        if v == va:
            raise IsStable("configuration is stable")
        return v
    v1, v2 = _corner_support(c)
    return v1 if v1 != va else v2


def destabilizing_witness(c: Configuration, ell: Optional[int] = None) -> OnePS:
    """Explicit subgroup with an existing limit and negative weight.

    The magnitude ``d`` starts at 1 and doubles until the combinatorial
    weight is negative and, for ``ell > 2 n^2``, the whole envelope
    ``ell * omega +- 2 n^2 |s|`` lies below zero.
    """
    if c.a is None:
        raise IsStable("generic-fibre configurations are stable")
    ell = default_ell(c.n) if ell is None else ell
    bound = 2 * c.n * c.n
    v = _target_support(c)
    d = 1
    for _ in range(MAX_DOUBLINGS):
        s = tuple(_ramp(c.a, v, d))
        if limit_exists(c.index_set, s):
            w = omega_config(c, s)
            if w < 0 and (ell <= bound or ell * w + bound * sum(map(abs, s)) < 0):
                return s
        d *= 2
    raise RuntimeError("witness search did not terminate")  # unreachable by dominance


def git_stable(c: Configuration, ell: Optional[int] = None) -> StabilityVerdict:
    if not is_bipartitely_oriented(c.graph):
        raise NotBipartite("stability needs a bipartitely oriented dual graph")
    ell = default_ell(c.n) if ell is None else ell
    if ell <= 2 * c.n * c.n:
        log.warning("ell=%d does not exceed 2n^2=%d; verdicts assume it does", ell, 2 * c.n**2)
    a = c.a
    if a is None:
        return StabilityVerdict(Status.STABLE, ell)
    if c.has_smooth_support and numerical_support(c) == canonical_support(a):
        return StabilityVerdict(Status.STABLE, ell)
    s = destabilizing_witness(c, ell)
    return StabilityVerdict(Status.UNSTABLE, ell, s, omega_config(c, s))


def lw_stable(c: Configuration) -> bool:
    """Smooth support and every inserted level carries a point."""
    if c.a is None:
        return True
    if not c.has_smooth_support:
        return False
    occupied = {p.position.ordinal for p in c.points}
    return all(i in occupied for i in range(1, c.a.r))


# --- brute-force oracle ------------------------------------------------------


@dataclass(frozen=True)
class OracleResult:
    stable: bool
    semistable: bool
    min_weight: Optional[int] = None
    argmin: Optional[OnePS] = None
    checked: int = 0


@functools.lru_cache(maxsize=32)
def _box(n: int, S: int) -> np.ndarray:
    rows = one_ps_box(n, S)
    rows = rows[np.any(rows != 0, axis=1)]
    rows.setflags(write=False)
    return rows


def oracle_scan(c: Configuration, S: Optional[int] = None) -> OracleResult:
    """Evaluate the combinatorial weight on every nonzero subgroup in ``[-S, S]^n``."""
    n = c.n
    S = default_box(n) if S is None else S
    if S < 1:
        raise ValueError("box radius must be at least 1")
    if c.a is None:
        return OracleResult(True, True)
    rows = _box(n, S)
    rows = rows[limit_mask(c.index_set, rows)]
    if len(rows) == 0:
        return OracleResult(True, True)
    pos = np.zeros(n, dtype=np.int64)
    neg = np.zeros(n, dtype=np.int64)
    for p in c.points:
        pp, pn = point_weight_coefficients(p.position)
        pos += p.mult * pp
        neg += p.mult * pn
    w = np.clip(rows, 0, None) @ pos + np.clip(rows, None, 0) @ neg
    i = int(np.argmin(w))
    lo = int(w[i])
    return OracleResult(lo > 0, lo >= 0, lo, tuple(int(x) for x in rows[i]), len(rows))


def oracle_stable(c: Configuration, S: Optional[int] = None) -> bool:
    return oracle_scan(c, S).stable


# --- index-tuple lemmas ------------------------------------------------------


def _forcing_holds(a: AVector, b: Sequence[int], strict: bool = False) -> bool:
    n = a.n
    for j in range(a.r + 1):
        for k in range(a[j], a[j + 1]):
            first = (k + 1 - b[j + 1]) * (n + 1) - k
            second = (k + 1 - b[j]) * (n + 1) - k
            if strict:
                if not (first < 0 and second > 0):
                    return False
            elif not (first <= 0 and second >= 0):
                return False
    return True


@functools.lru_cache(maxsize=64)
def _btuple_array(n: int, r: int) -> np.ndarray:
    """``all_btuples(n, r)`` as an array, one padded tuple per row."""
    flat = itertools.chain.from_iterable(itertools.combinations_with_replacement(range(1, n + 2), r))
    inner = np.fromiter(flat, dtype=np.int64).reshape(-1, r)
    m = len(inner)
    rows = np.hstack([np.ones((m, 1), np.int64), inner, np.full((m, 1), n + 1, np.int64)])
    rows.setflags(write=False)
    return rows


def _forcing_mask(a: AVector, rows: np.ndarray, strict: bool = False) -> np.ndarray:
    """Vectorised ``_forcing_holds`` over the rows of ``rows``."""
    n = a.n
    pairs = [(j, k) for j in range(a.r + 1) for k in range(a[j], a[j + 1])]
    J = np.array([j for j, _ in pairs])
    K = np.array([k for _, k in pairs])
    first = (K + 1 - rows[:, J + 1]) * (n + 1) - K
    second = (K + 1 - rows[:, J]) * (n + 1) - K
    if strict:
        return ((first < 0) & (second > 0)).all(axis=1)
    return ((first <= 0) & (second >= 0)).all(axis=1)


def forcing_survivors(a: AVector) -> list[tuple[int, ...]]:
    """Every padded tuple ``b`` satisfying both inequality families for ``a``."""
    rows = _btuple_array(a.n, a.r)
    return [tuple(int(x) for x in b) for b in rows[_forcing_mask(a, rows)]]


def verify_forcing_lemma(n: int, r: int, a) -> bool:
    """Check that ``a`` is the only tuple passing both families, strictly."""
    if not isinstance(a, AVector):
        a = AVector(n, tuple(a))
    if a.n != n or a.r != r:
        raise ValueError("a does not match (n, r)")
    own = np.array([a.entries], dtype=np.int64)
    return forcing_survivors(a) == [a.entries] and bool(_forcing_mask(a, own, strict=True)[0])


def canonical_stabilizing_index(n: int, m: int, v: Sequence[int]) -> AVector:
    """The unique index tuple over ``n`` making a Li-Wu stable support ``v`` GIT stable."""
    v = tuple(v)
    if len(v) != m + 2:
        raise ValueError(f"support over X[{m}]_0 needs {m + 2} entries")
    if sum(v) != n or any(x < 0 for x in v):
        raise ValueError(f"{v} is not a degree-{n} support")
    if any(x == 0 for x in v[1:-1]):
        raise NotLWStable(f"{v} leaves an inserted level empty")
    return avector_from_support(n, v)
