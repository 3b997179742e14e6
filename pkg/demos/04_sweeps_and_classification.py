"""Exhaustive sweeps and the moduli-level classification.

A sweep walks every pair at fixed (r, d) and every admissible triple,
checking the upper bound and, for each pair, whether the bound is attained
exactly when the pair is connected.
"""
import json

from limitseries import classify, enumerate_pairs, sweep

for d in range(5):
    for r in range(min(d, 3) + 1):
        rep = sweep(r, d)
        print(f"r={r} d={d} pairs={rep.pairs_checked} triples={rep.triples_checked} "
              f"connected={rep.connected_pairs} ok={rep.ok}")

# Classify every pair for rational pencils of degree 3.
for pair in enumerate_pairs(1, 3):
    rep = classify(pair, 0, "genus-zero")
    print(pair, json.dumps(rep.to_dict()))
