"""Admissible triples, the stratum dimension, and the index synchronization.

The dimension is computed twice: directly from the formula and as a sum over
indices routed through the synchronization map.  The two always agree.
"""
from limitseries import (
    AdmissibleTriple,
    check_admissible,
    dimension,
    dimension_via_sync,
    enumerate_triples,
    equality_conditions,
    ramification_sum,
    sync_map,
    validate_pair,
)

pair = validate_pair(1, 2, [1, 2], [1, 2])
sigma = ramification_sum(pair)

for t in enumerate_triples(pair):
    s = sync_map(pair, t)
    D = dimension(pair, t)
    assert D == dimension_via_sync(pair, t)
    print(f"{t.betaY} {t.betaZ} eps={t.eps}  D={D}/{sigma}  psi={s.psi}  equality={equality_conditions(pair, t)}")

# check_admissible lists every failed condition instead of stopping at the first.
bad = AdmissibleTriple((2, 2, 0), (1, 2, 2), (1,))
print("violations:", [v.to_dict() for v in check_admissible(pair, bad)])
