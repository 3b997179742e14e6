"""Building a triple that attains the ramification sum.

For a connected pair the greatest witnesses determine a block decomposition
of the indices, and the block sizes fix the triple.  The result is compared
with a brute-force maximum over all admissible triples.
"""
from limitseries import build_optimal_triple, build_trace, dimension, enumerate_pairs, is_connected, max_dimension

for pair in enumerate_pairs(2, 4):
    if not is_connected(pair):
        continue
    trace = build_trace(pair)
    t = build_optimal_triple(pair, trace)
    best, _ = max_dimension(pair)
    print(f"{pair}  trace={trace.to_dict()}  D={dimension(pair, t)}  brute max={best}")
    assert dimension(pair, t) == best
