"""Vanishing pairs, b-sequences and connectedness.

Run with ``python3 demos/01_connectedness.py``.
"""
from limitseries import connected_at, disconnected_indices, is_refined, ramification_sum, validate_pair

# A pair of vanishing sequences for a degree-2 pencil (r = 1).
pair = validate_pair(1, 2, [1, 2], [1, 2])
print(pair)
print("b-sequences:", pair.b)
print("ramification sum:", ramification_sum(pair), "refined:", is_refined(pair))

# Each index i has a set of witnesses j; for this pair both indices share j = 1.
for i in range(pair.r + 1):
    print(f"  i={i} witnesses={connected_at(pair, i).witnesses}")

# With r = 0 and both orders at the top, no witness exists.
lone = validate_pair(0, 2, [2], [2])
print(lone, "disconnected at", disconnected_indices(lone))

# Invalid input is rejected with a typed error.
try:
    validate_pair(1, 2, [0, 1], [0, 1])
except ValueError as exc:
    print("rejected:", exc)
