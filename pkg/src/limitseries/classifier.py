"""Moduli counts and the open-subset verdict for a crude stratum."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from enum import Enum

from .enumeration import max_dimension
from .errors import PolicyError
from .sequences import VanishingPair, is_connected, is_refined, ramification_sum


class NonemptyPolicy(str, Enum):
    """How to decide whether the EH stratum of a pair is nonempty.

    There is no general criterion at arbitrary genus, so the caller picks one:

    * ``assume-nonempty``: trust the caller, always nonempty.
    * ``assume-empty``: always empty, so the verdict is never positive.
    * ``genus-zero``: valid only for ``g = 0``, where every pair is realized.
    * ``rho-heuristic``: nonempty iff the EH dimension ``rho - sigma`` is
      nonnegative.  A heuristic, reported as such.
    """

    ASSUME_NONEMPTY = "assume-nonempty"
    ASSUME_EMPTY = "assume-empty"
    GENUS_ZERO = "genus-zero"
    RHO_HEURISTIC = "rho-heuristic"

    @property
    def heuristic(self) -> bool:
        return self is NonemptyPolicy.RHO_HEURISTIC


DEFAULT_POLICY = NonemptyPolicy.RHO_HEURISTIC


def brill_noether(r: int, d: int, g: int) -> int:
    """``(r + 1)(d - r) - r g``; may be negative."""
    return (r + 1) * (d - r) - r * g


def eh_stratum_dimension(pair: VanishingPair, g: int) -> int:
    return brill_noether(pair.r, pair.d, g) - ramification_sum(pair)


@dataclass(frozen=True)
class StratumReport:
    rho: int
    sigma: int
    ehDim: int
    fiberMax: int
    total: int
    connected: bool
    refined: bool
    nonemptyPolicy: str
    nonempty: bool
    openSubset: bool

    def to_dict(self) -> dict:
        return asdict(self)


def _nonempty(policy: NonemptyPolicy, g: int, eh_dim: int) -> bool:
    if policy is NonemptyPolicy.ASSUME_NONEMPTY:
        return True
    if policy is NonemptyPolicy.ASSUME_EMPTY:
        return False
    if policy is NonemptyPolicy.GENUS_ZERO:
        if g != 0:
            raise PolicyError(f"policy genus-zero requires g = 0, got g = {g}")
        return True
    return eh_dim >= 0


def classify(pair: VanishingPair, g: int, policy: NonemptyPolicy | str = DEFAULT_POLICY) -> StratumReport:
    """Full numerical picture of the stratum of ``pair`` at genus ``g``.

    ``openSubset`` is true exactly when the stratum is nonempty (as decided
    by ``policy``) and the pair is connected; ``fiberMax`` comes from the
    exhaustive search over admissible triples.
    """
    if g < 0:
        raise PolicyError(f"genus must be nonnegative, got {g}")
    policy = NonemptyPolicy(policy)
    rho = brill_noether(pair.r, pair.d, g)
    sigma = ramification_sum(pair)
    eh = rho - sigma
    fiber, _ = max_dimension(pair)
    connected = is_connected(pair)
    nonempty = _nonempty(policy, g, eh)
    return StratumReport(
        rho=rho,
        sigma=sigma,
        ehDim=eh,
        fiberMax=fiber,
        total=eh + fiber,
        connected=connected,
        refined=is_refined(pair),
        nonemptyPolicy=policy.value,
        nonempty=nonempty,
        openSubset=nonempty and connected,
    )
