from hypothesis import strategies as st

from ratgauge.simplicial import SimplicialComplex

simplex_sets = st.lists(
    st.sets(st.integers(0, 7), min_size=1, max_size=4), min_size=1, max_size=7
)


@st.composite
def complexes(draw):
    return SimplicialComplex(tuple(tuple(sorted(s)) for s in draw(simplex_sets)))
