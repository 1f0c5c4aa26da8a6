from hypothesis import strategies as st

from perfcodes import normalize


@st.composite
def residue_sets(draw, max_n=40, min_n=1, min_size=0):
    n = draw(st.integers(min_n, max_n))
    elems = draw(st.lists(st.integers(0, n - 1), min_size=min(min_size, n), unique=True))
    return normalize(n, elems)


@st.composite
def inverse_closed_sets(draw, max_n=40, min_n=3):
    """Connection sets: inverse-closed, without 0."""
    n = draw(st.integers(min_n, max_n))
    reps = draw(st.lists(st.integers(1, n // 2), unique=True))
    return normalize(n, [x for r in reps for x in (r, n - r)])
