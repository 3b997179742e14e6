"""Admissible triples ``(betaY, betaZ, eps)`` and the stratum dimension.

For a fixed pair the fiber of the forgetful map over an EH limit linear
series is stratified by triples satisfying conditions C1-C6.  Each stratum
has dimension :func:`dimension`.  :func:`sync_map` re-indexes the ``j``-sum
by the ``i`` indices of the pair so it can be compared term by term with the
ramification sum.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import NotAdmissible, TripleLengthMismatch
from .sequences import VanishingPair, connected_via


@dataclass(frozen=True)
class AdmissibleTriple:
    """Candidate stratum data.

    ``betaY`` and ``betaZ`` hold indices ``0..d``; ``eps`` holds ``eps_1 ..
    eps_{d-1}`` so ``eps[j - 1]`` is ``eps_j``.  Use :meth:`e` for the
    one-based lookup.  Admissibility is relative to a pair and is checked by
    :func:`check_admissible`, not on construction.
    """

    betaY: tuple[int, ...]
    betaZ: tuple[int, ...]
    eps: tuple[int, ...] = ()

    def __post_init__(self):
        for name in ("betaY", "betaZ", "eps"):
            object.__setattr__(self, name, tuple(int(v) for v in getattr(self, name)))

    def e(self, j: int) -> int:
        return self.eps[j - 1]

    def to_dict(self) -> dict:
        return {"betaY": list(self.betaY), "betaZ": list(self.betaZ), "eps": list(self.eps)}

    @classmethod
    def from_dict(cls, data: dict) -> "AdmissibleTriple":
        return cls(tuple(data["betaY"]), tuple(data["betaZ"]), tuple(data.get("eps", ())))


class Violation(NamedTuple):
    cond: str
    j: int

    def to_dict(self) -> dict:
        return {"cond": self.cond, "j": self.j}


def _check_lengths(pair: VanishingPair, triple: AdmissibleTriple):
    d = pair.d
    for name, want in (("betaY", d + 1), ("betaZ", d + 1), ("eps", max(d - 1, 0))):
        got = len(getattr(triple, name))
        if got != want:
            raise TripleLengthMismatch(name, want, got)


def check_admissible(pair: VanishingPair, triple: AdmissibleTriple) -> list[Violation]:
    """All violated conditions, ordered by condition then ``j``.

    An empty list means the triple is admissible with respect to ``pair``.
    C6 violations are reported at ``j = 0`` or ``j = d``, the endpoint
    whose value is wrong.
    """
    _check_lengths(pair, triple)
    r, d = pair.r, pair.d
    bY, bZ = pair.b
    y, z, e = triple.betaY, triple.betaZ, triple.e
    inner = range(1, d)
    out: list[Violation] = []

    for j in inner:
        if e(j) not in (0, 1) or (e(j) == 1 and not (pair.in_aY(j) and pair.in_aZ(d - j))):
            out.append(Violation("C1", j))
    for j in inner:
        if not bY[j + 1] >= y[j] - e(j) >= y[j + 1]:
            out.append(Violation("C2", j))
    for j in inner:
        if not bZ[j - 1] >= z[j] - e(j) >= z[j - 1]:
            out.append(Violation("C3", j))
    for j in inner:
        if y[j] + z[j] - e(j) < r + 1:
            out.append(Violation("C4", j))
    for j in inner:
        if r + 1 < y[j + 1] + z[j] or r + 1 < y[j] + z[j - 1]:
            out.append(Violation("C5", j))

    c6_bad = []
    if y[0] != r + 1 or z[0] != (1 if pair.aY[0] == 0 else 0):
        c6_bad.append(0)
    if z[d] != r + 1 or y[d] != (1 if pair.aZ[0] == 0 else 0):
        c6_bad.append(d)
    out.extend(Violation("C6", j) for j in sorted(set(c6_bad)))
    return out


def is_admissible(pair: VanishingPair, triple: AdmissibleTriple) -> bool:
    return not check_admissible(pair, triple)


def _require_admissible(pair, triple):
    bad = check_admissible(pair, triple)
    if bad:
        raise NotAdmissible(bad)


def dimension_unchecked(pair: VanishingPair, triple: AdmissibleTriple) -> int:
    """The dimension formula evaluated without the admissibility check."""
    r1 = pair.r + 1
    bY, bZ = pair.b
    y, z = triple.betaY, triple.betaZ
    total = 0
    for j in range(1, pair.d):
        e = triple.eps[j - 1]
        total += (
            (y[j] - y[j + 1]) * (bY[j + 1] - y[j] + e)
            + (z[j] - z[j - 1]) * (bZ[j - 1] - z[j] + e)
            + (r1 - y[j + 1] - z[j - 1]) * (y[j] + z[j] - e - r1)
        )
    return total


def dimension(pair: VanishingPair, triple: AdmissibleTriple) -> int:
    """Dimension of the stratum indexed by an admissible triple.

    >>> from limitseries.sequences import validate_pair
    >>> p = validate_pair(1, 2, [1, 2], [1, 2])
    >>> dimension(p, AdmissibleTriple((2, 2, 0), (0, 2, 2), (1,)))
    2
    """
    _require_admissible(pair, triple)
    return dimension_unchecked(pair, triple)


@dataclass(frozen=True)
class SyncData:
    """Index synchronization ``psi`` on ``[iLow, iHigh]``.

    ``psi[i]`` is ``(j1, j2)``; by construction either ``j1 == j2`` (a
    diagonal index, collected in ``Jdiag``) or ``j1 == j2 - 1`` (collected by
    ``j2`` in ``Joff``).
    """

    iLow: int
    iHigh: int
    psi: dict[int, tuple[int, int]] = field(default_factory=dict)
    Jdiag: frozenset[int] = frozenset()
    Joff: frozenset[int] = frozenset()

    @property
    def domain(self) -> range:
        return range(self.iLow, self.iHigh + 1)

    def diag_preimage(self, j: int) -> list[int]:
        return [i for i, v in self.psi.items() if v == (j, j)]

    def off_preimage(self, j: int) -> list[int]:
        return [i for i, v in self.psi.items() if v == (j - 1, j)]


def sync_map(pair: VanishingPair, triple: AdmissibleTriple) -> SyncData:
    _require_admissible(pair, triple)
    r, d = pair.r, pair.d
    y, z = triple.betaY, triple.betaZ
    lo, hi = z[0], r - y[d]
    psi: dict[int, tuple[int, int]] = {}
    for i in range(lo, hi + 1):
        j1 = next(j for j in range(d) if r + 1 - y[j] <= i <= r - y[j + 1])
        j2 = next(j for j in range(1, d + 1) if z[j - 1] <= i <= z[j] - 1)
        psi[i] = (j1, j2)
    jdiag = frozenset(j1 for j1, j2 in psi.values() if j1 == j2)
    joff = frozenset(j2 for j1, j2 in psi.values() if j1 == j2 - 1)
    return SyncData(lo, hi, psi, jdiag, joff)


def dimension_via_sync(pair: VanishingPair, triple: AdmissibleTriple) -> int:
    """The dimension formula re-summed over the synchronized ``i`` indices."""
    sync = sync_map(pair, triple)
    r1 = pair.r + 1
    bY, bZ = pair.b
    y, z = triple.betaY, triple.betaZ
    total = 0
    for i, (j1, j2) in sync.psi.items():
        if j1 == j2:
            j = j1
            total += bY[j + 1] + bZ[j - 1] + triple.e(j) - r1
        else:
            j = j2
            total += (bY[j] + z[j - 1] - r1) + (bZ[j - 1] + y[j] - r1)
    return total


def equality_conditions(pair: VanishingPair, triple: AdmissibleTriple) -> tuple[bool, bool]:
    """Return ``(no_off_diagonal, diagonal_connected)``.

    The first flag says no ``i`` maps to an off-diagonal ``(j - 1, j)``; the
    second that every ``i`` mapped to ``(j, j)`` is connected via ``j`` with
    ``eps_j = 1``.  Both hold exactly when the stratum dimension equals the
    ramification sum.
    """
    sync = sync_map(pair, triple)
    no_off = not sync.Joff
    diag_ok = all(
        triple.e(j1) == 1 and connected_via(pair, i, j1)
        for i, (j1, j2) in sync.psi.items()
        if j1 == j2
    )
    return no_off, diag_ok

