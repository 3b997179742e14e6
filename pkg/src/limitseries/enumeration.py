"""Exhaustive generators, brute-force oracles and verification sweeps."""
from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from .construction import build_optimal_triple
from .errors import BudgetExceeded, InvalidRange, NotConnected
from .sequences import VanishingPair, is_connected, ramification_sum
from .triples import AdmissibleTriple, check_admissible, dimension_unchecked

DEFAULT_BUDGET = 8


def default_budget() -> int:
    """Sweep budget on ``d``: ``$LLS_BUDGET`` if set, else 8."""
    value = os.environ.get("LLS_BUDGET")
    return int(value) if value else DEFAULT_BUDGET


def _check_range(r, d):
    if not (isinstance(r, int) and isinstance(d, int)) or r < 0 or d < 0 or r > d:
        raise InvalidRange(r, d)


def enumerate_pairs(r: int, d: int) -> Iterator[VanishingPair]:
    """All pairs for ``(r, d)`` in lexicographic order of ``(aY, aZ)``."""
    _check_range(r, d)
    subsets = list(itertools.combinations(range(d + 1), r + 1))
    for aY in subsets:
        for aZ in subsets:
            if all(aY[i] + aZ[r - i] >= d for i in range(r + 1)):
                yield VanishingPair(r, d, aY, aZ)


def _endpoints(pair: VanishingPair) -> tuple[int, int, int, int]:
    """C6-forced ``(betaY_0, betaY_d, betaZ_0, betaZ_d)``."""
    r1 = pair.r + 1
    return r1, int(pair.aZ[0] == 0), int(pair.aY[0] == 0), r1


def enumerate_triples(pair: VanishingPair) -> Iterator[AdmissibleTriple]:
    """Every admissible triple of ``pair`` exactly once.

    Order is lexicographic in ``(betaY_1..betaY_d, betaZ_0..betaZ_{d-1},
    eps)``.  The search fixes the C6 endpoints, then walks ``betaY`` down and
    ``betaZ`` up under the bounds ``betaY_j <= bY_j`` and ``betaZ_j <= bZ_j``,
    and finally picks each ``eps_j`` independently.
    """
    r, d = pair.r, pair.d
    r1 = r + 1
    y0, yd, z0, zd = _endpoints(pair)
    if d == 0:
        t = AdmissibleTriple((y0,), (z0,), ())
        if y0 == yd and z0 == zd and not check_admissible(pair, t):
            yield t
        return
    bY, bZ = pair.b
    eps_allowed = [(0, 1) if pair.in_aY(j) and pair.in_aZ(d - j) else (0,) for j in range(d)]

    y = [0] * (d + 1)
    z = [0] * (d + 1)
    y[0], y[d], z[0], z[d] = y0, yd, z0, zd

    def eps_options(j):
        opts = []
        for e in eps_allowed[j]:
            if (
                bY[j + 1] >= y[j] - e >= y[j + 1]
                and bZ[j - 1] >= z[j] - e >= z[j - 1]
                and y[j] + z[j] - e >= r1
            ):
                opts.append(e)
        return opts

    def fill_z(j):
        if j == d:
            per_j = []
            for jj in range(1, d):
                opts = eps_options(jj)
                if not opts:
                    return
                per_j.append(opts)
            ty, tz = tuple(y), tuple(z)
            for eps in itertools.product(*per_j):
                yield AdmissibleTriple(ty, tz, eps)
            return
        lo = max(z[j - 1], r1 - y[j])
        hi = min(bZ[j], zd, r1 - y[j + 1])
        for v in range(lo, hi + 1):
            z[j] = v
            yield from fill_z(j + 1)

    def fill_y(j):
        if j == d:
            yield from fill_z(1)
            return
        hi = min(y[j - 1], bY[j])
        if j == 1:
            hi = min(hi, r1 - z0)
        for v in range(y[d], hi + 1):
            y[j] = v
            yield from fill_y(j + 1)

    yield from fill_y(1)


def _triple_key(t: AdmissibleTriple):
    return (t.betaY[1:], t.betaZ[:-1], t.eps)


def enumerate_triples_naive(pair: VanishingPair, *, full_box: bool = False, chunk: int = 1 << 20) -> list[AdmissibleTriple]:
    """Brute-force filter of a box of candidate triples, vectorized.

    Candidates range over ``[0, r+1]`` for every ``beta`` entry and ``{0, 1}``
    for every ``eps`` entry; conditions C1-C6 are evaluated independently of
    :func:`check_admissible`.  With ``full_box=False`` the four endpoint
    entries are pinned to the only values C6 allows, which shrinks the box by
    ``(r+2)**4`` without changing the surviving set.
    """
    r, d = pair.r, pair.d
    r1 = r + 1
    bY = np.array(pair.b.bY)
    bZ = np.array(pair.b.bZ)
    y0, yd, z0, zd = _endpoints(pair)
    beta_radix = r + 2

    # column layout: betaY_0..d, betaZ_0..d, eps_1..eps_{d-1}
    radices = [beta_radix] * (2 * d + 2) + [2] * max(d - 1, 0)
    pinned = {} if full_box else {0: y0, d: yd, d + 1: z0, 2 * d + 1: zd}
    free = [c for c in range(len(radices)) if c not in pinned]
    total = int(np.prod([radices[c] for c in free], dtype=np.int64)) if free else 1

    eps_ok = np.array([0] + [int(pair.in_aY(j) and pair.in_aZ(d - j)) for j in range(1, d)] + [0])
    found = []
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        cols = np.empty((len(radices), idx.size), dtype=np.int64)
        for c, v in pinned.items():
            cols[c] = v
        rest = idx.copy()
        for c in reversed(free):
            cols[c] = rest % radices[c]
            rest //= radices[c]
        Y = cols[: d + 1]
        Z = cols[d + 1 : 2 * d + 2]
        E = np.zeros((d + 1, idx.size), dtype=np.int64)
        if d > 1:
            E[1:d] = cols[2 * d + 2 :]

        ok = (Y[0] == r1) & (Z[d] == r1) & (Y[d] == yd) & (Z[0] == z0)
        for j in range(1, d):
            e = E[j]
            ok &= (e == 0) | (eps_ok[j] == 1)
            ok &= (bY[j + 1] >= Y[j] - e) & (Y[j] - e >= Y[j + 1])
            ok &= (bZ[j - 1] >= Z[j] - e) & (Z[j] - e >= Z[j - 1])
            ok &= Y[j] + Z[j] - e >= r1
            ok &= (Y[j + 1] + Z[j] <= r1) & (Y[j] + Z[j - 1] <= r1)
        for k in np.flatnonzero(ok):
            found.append(
                AdmissibleTriple(
                    tuple(int(v) for v in Y[:, k]),
                    tuple(int(v) for v in Z[:, k]),
                    tuple(int(v) for v in E[1:d, k]),
                )
            )
    found.sort(key=_triple_key)
    return found


def max_dimension(pair: VanishingPair) -> tuple[int, AdmissibleTriple]:
    """Largest stratum dimension over all admissible triples, first argmax."""
    best, arg = None, None
    for t in enumerate_triples(pair):
        value = dimension_unchecked(pair, t)
        if best is None or value > best:
            best, arg = value, t
    return best, arg


def count_maximizers(pair: VanishingPair) -> int:
    best, _ = max_dimension(pair)
    return sum(1 for t in enumerate_triples(pair) if dimension_unchecked(pair, t) == best)


@dataclass
class SweepReport:
    """Outcome of an exhaustive sweep over all pairs of one ``(r, d)``.

    Reports over disjoint pair lists of the same ``(r, d)`` combine with
    :meth:`merge`; merging is associative and keeps record order.
    """

    r: int
    d: int
    pairs_checked: int = 0
    triples_checked: int = 0
    connected_pairs: int = 0
    violations: list[dict] = field(default_factory=list)
    equivalence_failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.equivalence_failures

    def merge(self, other: "SweepReport") -> "SweepReport":
        if (self.r, self.d) != (other.r, other.d):
            raise ValueError("cannot merge reports for different (r, d)")
        return SweepReport(
            self.r,
            self.d,
            self.pairs_checked + other.pairs_checked,
            self.triples_checked + other.triples_checked,
            self.connected_pairs + other.connected_pairs,
            self.violations + other.violations,
            self.equivalence_failures + other.equivalence_failures,
        )

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "d": self.d,
            "pairsChecked": self.pairs_checked,
            "triplesChecked": self.triples_checked,
            "connectedPairs": self.connected_pairs,
            "violations": self.violations,
            "equivalenceFailures": self.equivalence_failures,
            "verified": self.ok,
        }

    CSV_FIELDS = (
        "kind", "r", "d", "pairsChecked", "triplesChecked", "connectedPairs",
        "violations", "equivalenceFailures", "record",
    )

    def csv_rows(self) -> list[dict]:
        """Summary row, then one row per counterexample with its JSON record."""
        import json

        rows = [{
            "kind": "summary", "r": self.r, "d": self.d,
            "pairsChecked": self.pairs_checked, "triplesChecked": self.triples_checked,
            "connectedPairs": self.connected_pairs,
            "violations": len(self.violations),
            "equivalenceFailures": len(self.equivalence_failures), "record": "",
        }]
        for kind, records in (("violation", self.violations), ("equivalence", self.equivalence_failures)):
            for rec in records:
                rows.append({"kind": kind, "r": self.r, "d": self.d, "record": json.dumps(rec, sort_keys=True)})
        return rows


def _sweep_one(args) -> SweepReport:
    pair, bound, equivalence = args
    rep = SweepReport(pair.r, pair.d, pairs_checked=1)
    sigma = ramification_sum(pair)
    best, arg = None, None
    for t in enumerate_triples(pair):
        rep.triples_checked += 1
        value = dimension_unchecked(pair, t)
        if bound and value > sigma:
            rep.violations.append({"pair": pair.to_dict(), "triple": t.to_dict(), "lhs": value, "rhs": sigma})
        if best is None or value > best:
            best, arg = value, t
    if not equivalence:
        return rep
    connected = is_connected(pair)
    rep.connected_pairs = int(connected)
    record = {"pair": pair.to_dict(), "maxDimension": best, "sigma": sigma, "connected": connected}
    if (best == sigma) != connected:
        rep.equivalence_failures.append({**record, "reason": "max dimension = sigma disagrees with connectedness"})
    if connected:
        try:
            built = build_optimal_triple(pair)
        except NotConnected:
            built = None
        if built is None or check_admissible(pair, built):
            rep.equivalence_failures.append({**record, "reason": "constructed triple is not admissible"})
        elif dimension_unchecked(pair, built) != best:
            rep.equivalence_failures.append({
                **record,
                "reason": "constructed triple does not reach the maximum",
                "triple": built.to_dict(),
                "constructedDimension": dimension_unchecked(pair, built),
            })
    return rep


def sweep(
    r: int,
    d: int,
    *,
    bound: bool = True,
    equivalence: bool = True,
    budget: int | None = None,
    workers: int = 1,
    progress: Callable[[int, VanishingPair], None] | None = None,
) -> SweepReport:
    """Run the upper-bound and/or equivalence checks over every pair.

    ``workers > 1`` fans the per-pair work out to a process pool; records are
    still merged in pair enumeration order.
    """
    _check_range(r, d)
    budget = default_budget() if budget is None else budget
    if d > budget:
        raise BudgetExceeded(d, budget)
    pairs = list(enumerate_pairs(r, d))
    jobs = [(p, bound, equivalence) for p in pairs]
    report = SweepReport(r, d)
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(_sweep_one, jobs, chunksize=max(1, len(jobs) // (4 * workers)))
            for n, part in enumerate(results):
                report = report.merge(part)
                if progress:
                    progress(n, pairs[n])
    else:
        for n, job in enumerate(jobs):
            report = report.merge(_sweep_one(job))
            if progress:
                progress(n, pairs[n])
    return report


def verify_upper_bound(r: int, d: int, **kwargs) -> SweepReport:
    """Check ``dimension <= ramification_sum`` for every admissible triple."""
    return sweep(r, d, bound=True, equivalence=False, **kwargs)


def verify_equivalence(r: int, d: int, **kwargs) -> SweepReport:
    """Check ``max dimension == ramification_sum`` exactly for connected pairs.

    Connected pairs must also have their constructed triple admissible and
    attaining the brute-force maximum.
    """
    return sweep(r, d, bound=False, equivalence=True, **kwargs)
