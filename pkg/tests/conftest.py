from hypothesis import strategies as st

from limitseries import VanishingPair, enumerate_pairs

# (r, d) grid covered by the exhaustive checks: d <= 6, r <= min(3, d)
DESK_RANGE = [(r, d) for d in range(7) for r in range(min(3, d) + 1)]


def all_pairs(max_d=6, max_r=3):
    for d in range(max_d + 1):
        for r in range(min(max_r, d) + 1):
            yield from enumerate_pairs(r, d)


@st.composite
def pairs(draw, max_d=14, max_r=6):
    """Random valid pair; aZ is lifted to meet (A3) while staying increasing."""
    d = draw(st.integers(0, max_d))
    r = draw(st.integers(0, min(max_r, d)))
    aY = sorted(draw(st.lists(st.integers(0, d), min_size=r + 1, max_size=r + 1, unique=True)))
    aZ = sorted(draw(st.lists(st.integers(0, d), min_size=r + 1, max_size=r + 1, unique=True)))
    for k in range(r + 1):
        floor = d - aY[r - k]
        aZ[k] = max(aZ[k], floor, aZ[k - 1] + 1 if k else 0)
    return VanishingPair(r, d, aY, aZ)


ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
