"""Vanishing-sequence pairs at the node of a two-component curve.

A pair ``(aY, aZ)`` of strictly increasing sequences of length ``r + 1`` in
``[0, d]`` is an Eisenbud-Harris limit ``g^r_d`` datum when
``aY[i] + aZ[r - i] >= d`` for every ``i``.  This module validates such pairs,
derives the counting sequences ``bY``/``bZ`` and decides connectedness.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import (
    A3Violation,
    IndexOutOfRange,
    InvalidPairError,
    LengthMismatch,
    NotStrictlyIncreasing,
    OutOfRange,
)

MAX_DEGREE = 10**6


@dataclass(frozen=True)
class VanishingPair:
    """Validated pair of vanishing sequences.

    Construct through :func:`validate_pair` or directly; both run the same
    checks.
    """

    r: int
    d: int
    aY: tuple[int, ...]
    aZ: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "aY", tuple(int(a) for a in self.aY))
        object.__setattr__(self, "aZ", tuple(int(a) for a in self.aZ))
        _check(self.r, self.d, self.aY, self.aZ)

    @cached_property
    def _aY_set(self) -> frozenset[int]:
        return frozenset(self.aY)

    @cached_property
    def _aZ_set(self) -> frozenset[int]:
        return frozenset(self.aZ)

    @cached_property
    def b(self) -> "BSequences":
        """Cached :func:`b_sequences` of this pair."""
        return b_sequences(self)

    def in_aY(self, j: int) -> bool:
        return j in self._aY_set

    def in_aZ(self, j: int) -> bool:
        return j in self._aZ_set

    def excess(self, i: int) -> int:
        """``aY[i] + aZ[r - i] - d``, the (A3) slack at index ``i``."""
        return self.aY[i] + self.aZ[self.r - i] - self.d

    def to_dict(self) -> dict:
        return {"r": self.r, "d": self.d, "aY": list(self.aY), "aZ": list(self.aZ)}

    @classmethod
    def from_dict(cls, data: dict) -> "VanishingPair":
        try:
            return validate_pair(data["r"], data["d"], data["aY"], data["aZ"])
        except KeyError as exc:
            raise InvalidPairError(f"missing field {exc.args[0]!r} in pair object") from None

    def __str__(self):
        return f"(r={self.r}, d={self.d}, aY={list(self.aY)}, aZ={list(self.aZ)})"


def _check(r, d, aY, aZ):
    if not isinstance(r, int) or not isinstance(d, int) or r < 0 or d < 0:
        raise InvalidPairError(f"r and d must be nonnegative integers, got r={r!r}, d={d!r}")
    if d > MAX_DEGREE:
        raise InvalidPairError(f"d={d} exceeds the supported maximum {MAX_DEGREE}")
    for side, seq in (("aY", aY), ("aZ", aZ)):
        if len(seq) != r + 1:
            raise LengthMismatch(side, r + 1, len(seq))
    for side, seq in (("aY", aY), ("aZ", aZ)):
        for k, a in enumerate(seq):
            if a < 0 or a > d:
                raise OutOfRange(side, k)
            if k > 0 and a <= seq[k - 1]:
                raise NotStrictlyIncreasing(side, k)
    for i in range(r + 1):
        if aY[i] + aZ[r - i] < d:
            raise A3Violation(i)


def validate_pair(r: int, d: int, aY: Iterable[int], aZ: Iterable[int]) -> VanishingPair:
    """Check (A1)-(A3) and return the pair.

    >>> validate_pair(1, 2, [1, 2], [1, 2])
    VanishingPair(r=1, d=2, aY=(1, 2), aZ=(1, 2))
    >>> validate_pair(1, 2, [0, 1], [0, 1])
    Traceback (most recent call last):
    ...
    limitseries.errors.A3Violation: A3Violation(i=0)
    """
    return VanishingPair(r, d, tuple(aY), tuple(aZ))


class BSequences(NamedTuple):
    bY: tuple[int, ...]
    bZ: tuple[int, ...]


def b_sequences(pair: VanishingPair) -> BSequences:
    """``bY[j] = #{i : aY[i] >= j}`` and ``bZ[j] = #{i : aZ[i] >= d - j}``."""
    d = pair.d
    bY = tuple(sum(1 for a in pair.aY if a >= j) for j in range(d + 1))
    bZ = tuple(sum(1 for a in pair.aZ if a >= d - j) for j in range(d + 1))
    return BSequences(bY, bZ)


def ramification_sum(pair: VanishingPair) -> int:
    return sum(pair.excess(i) for i in range(pair.r + 1))


def is_refined(pair: VanishingPair) -> bool:
    return all(pair.excess(i) == 0 for i in range(pair.r + 1))


class ConnectivityWitness(NamedTuple):
    i: int
    witnesses: tuple[int, ...]

    def __bool__(self):
        return bool(self.witnesses)


def connected_via(pair: VanishingPair, i: int, j: int) -> bool:
    """Whether the pair is connected at ``i`` via ``j``.

    Requires ``d - aZ[r-i] <= j <= aY[i]``, every integer of ``[j, aY[i]]``
    in ``aY`` and every integer of ``[d - j, aZ[r-i]]`` in ``aZ``.
    """
    if not 0 <= i <= pair.r:
        raise IndexOutOfRange(i, pair.r)
    top_y = pair.aY[i]
    top_z = pair.aZ[pair.r - i]
    if not (pair.d - top_z <= j <= top_y) or not 0 <= j <= pair.d:
        return False
    return all(pair.in_aY(k) for k in range(j, top_y + 1)) and all(
        pair.in_aZ(k) for k in range(pair.d - j, top_z + 1)
    )


def connected_at(pair: VanishingPair, i: int) -> ConnectivityWitness:
    """Every ``j`` through which the pair is connected at ``i``, ascending."""
    if not 0 <= i <= pair.r:
        raise IndexOutOfRange(i, pair.r)
    lo = max(0, pair.d - pair.aZ[pair.r - i])
    hi = min(pair.d, pair.aY[i])
    return ConnectivityWitness(i, tuple(j for j in range(lo, hi + 1) if connected_via(pair, i, j)))


def is_connected(pair: VanishingPair) -> bool:
    return all(connected_at(pair, i) for i in range(pair.r + 1))


def disconnected_indices(pair: VanishingPair) -> list[int]:
    return [i for i in range(pair.r + 1) if not connected_at(pair, i)]
