"""Exhaustive and randomized cross-checks used by ``verify`` and the demos."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .configuration import ConfigPoint, Configuration, enumerate_configurations, numerical_support
from .expansion import all_avectors, all_btuples, avector_from_set, canonical_support
from .quotient import stabilizer
from .stability import default_box, git_stable, lw_stable, oracle_scan, verify_forcing_lemma
from .weights import PointPosition, Smooth, limit_exists, omega_closed_form, omega_config, omega_level


@dataclass
class SweepReport:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {"checked": self.checked, "failures": [str(f) for f in self.failures[:10]], "ok": self.ok}


def forcing_sweep(n: int) -> SweepReport:
    rep = SweepReport("forcing")
    for a in all_avectors(n):
        rep.checked += 1
        if not verify_forcing_lemma(n, a.r, a):
            rep.failures.append(a.entries)
    return rep


def closed_form_sweep(n: int, smax: int = 5) -> SweepReport:
    rep = SweepReport("closed_form")
    for a in all_avectors(n):
        for b in all_btuples(n, a.r):
            v = [b[i + 1] - b[i] for i in range(a.r + 1)]
            for k in range(1, n + 1):
                for sk in range(-smax, smax + 1):
                    rep.checked += 1
                    recipe = sum(vi * omega_level(a, i, k, sk) for i, vi in enumerate(v))
                    if recipe != omega_closed_form(a, b, k, sk):
                        rep.failures.append((a.entries, b, k, sk))
    return rep


def theorem_sweep(n: int, box: Optional[int] = None, corners: bool = True) -> SweepReport:
    """Decision procedure against the brute-force box for every cycle over one edge.

    Smooth-support cycles must be stable exactly at the canonical support,
    with no strictly semistable ones; cycles with a corner point must be
    unstable with a witness of negative weight along which the limit exists.
    """
    rep = SweepReport("theorem")
    box = default_box(n) if box is None else box
    for a in all_avectors(n):
        for c in enumerate_configurations(n, a.index_set, "smooth"):
            rep.checked += 1
            verdict = git_stable(c).stable
            o = oracle_scan(c, box)
            expected = numerical_support(c) == canonical_support(a)
            if not (verdict == expected == o.stable) or o.semistable != o.stable:
                rep.failures.append(("smooth", a.entries, numerical_support(c)))
        if not corners:
            continue
        for c in enumerate_configurations(n, a.index_set, "corner"):
            rep.checked += 1
            v = git_stable(c)
            s = v.witness
            if v.stable or not limit_exists(c.index_set, s) or omega_config(c, s) >= 0:
                rep.failures.append(("corner", a.entries, c.points))
    return rep


def lw_sweep(n: int) -> SweepReport:
    rep = SweepReport("git_in_lw")
    for a in all_avectors(n):
        for c in enumerate_configurations(n, a.index_set, "all"):
            rep.checked += 1
            if git_stable(c).stable and not lw_stable(c):
                rep.failures.append((a.entries, c.points))
    return rep


def random_reduced_configuration(n: int, rng: random.Random, fmax: int = 3) -> Configuration:
    """Reduced smooth-support cycle with random levels and small fiber coordinates."""
    I = frozenset(i for i in range(1, n + 2) if rng.random() < 0.5) or frozenset({rng.randint(1, n + 1)})
    a = avector_from_set(n, I)
    labels = (0, *a.labels)
    pts = []
    for _ in range(n):
        lvl = rng.choice(labels)
        pos = PointPosition(a, Smooth(lvl), "D")
        fiber = None
        if 0 < a.level_ordinal(lvl) < a.r:
            fiber = Fraction(rng.choice([x for x in range(-fmax, fmax + 1) if x]))
        pts.append(ConfigPoint(pos, 1, rng.choice(["x", "y"]), fiber))
    return Configuration(n, I, tuple(pts))


def stabilizer_sweep(count: int, seed: int = 0, nmax: int = 4) -> SweepReport:
    """Infinite stabilizer exactly when Li-Wu stability fails."""
    rep = SweepReport("stabilizer")
    rng = random.Random(seed)
    for _ in range(count):
        c = random_reduced_configuration(rng.randint(1, nmax), rng)
        rep.checked += 1
        if stabilizer(c).finite != lw_stable(c):
            rep.failures.append(c)
    return rep
