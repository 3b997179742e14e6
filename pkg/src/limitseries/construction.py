"""Optimal triple for a connected pair.

For a connected pair, take at each ``i`` the greatest ``j`` through which the
pair is connected.  These greatest witnesses are nondecreasing in ``i``; the
distinct interior values ``j_1 < ... < j_s`` cut ``[1, d]`` into blocks, and
on each block ``betaY`` is the number of indices whose witness reaches the
block's right end.  The resulting triple has stratum dimension equal to the
ramification sum.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotConnected, NotConnectedAt
from .sequences import VanishingPair, connected_at, disconnected_indices
from .triples import AdmissibleTriple


def greatest_witness(pair: VanishingPair, i: int) -> int:
    witnesses = connected_at(pair, i).witnesses
    if not witnesses:
        raise NotConnectedAt(i)
    return max(witnesses)


@dataclass(frozen=True)
class ConstructionTrace:
    """Intermediate data of the construction.

    ``frakJ[i]`` is the greatest witness at ``i``; ``J`` lists the interior
    values ``j_1 < ... < j_s``; ``I[k]`` is ``{i : frakJ[i] >= j_k}`` for
    ``k = 0..s+1`` with ``j_0 = 0`` and ``j_{s+1} = d``.
    """

    r: int
    d: int
    frakJ: tuple[int, ...]
    Jhat: frozenset[int]
    J: tuple[int, ...]
    I: tuple[frozenset[int], ...]

    @property
    def s(self) -> int:
        return len(self.J)

    @property
    def breakpoints(self) -> tuple[int, ...]:
        """``(j_0, j_1, ..., j_s, j_{s+1})``."""
        return (0, *self.J, self.d)

    @property
    def Isizes(self) -> list[int]:
        return [len(block) for block in self.I]

    def to_dict(self) -> dict:
        return {"frakJ": list(self.frakJ), "J": list(self.J), "Isizes": self.Isizes}


def build_trace(pair: VanishingPair) -> ConstructionTrace:
    bad = disconnected_indices(pair)
    if bad:
        raise NotConnected(bad)
    frak = tuple(greatest_witness(pair, i) for i in range(pair.r + 1))
    jhat = frozenset(frak)
    inner = tuple(sorted(jhat - {0, pair.d}))
    cuts = (0, *inner, pair.d)
    blocks = tuple(frozenset(i for i, w in enumerate(frak) if w >= jk) for jk in cuts)
    return ConstructionTrace(pair.r, pair.d, frak, jhat, inner, blocks)


def build_optimal_triple(pair: VanishingPair, trace: ConstructionTrace | None = None) -> AdmissibleTriple:
    """Admissible triple whose stratum dimension equals the ramification sum.

    Raises :class:`~limitseries.errors.NotConnected` for a disconnected pair,
    for which no such triple exists.
    """
    if trace is None:
        trace = build_trace(pair)
    r1, d = pair.r + 1, pair.d
    cuts = trace.breakpoints
    sizes = trace.Isizes
    betaY = [0] * (d + 1)
    betaZ = [0] * (d + 1)
    betaY[0] = betaZ[d] = r1
    k = 1
    for j in range(1, d + 1):
        while j > cuts[k]:
            k += 1
        betaY[j] = sizes[k]
        betaZ[j - 1] = r1 - sizes[k]
    inner = set(trace.J)
    eps = [1 if j in inner else 0 for j in range(1, d)]
    return AdmissibleTriple(tuple(betaY), tuple(betaZ), tuple(eps))
