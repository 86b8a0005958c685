from hypothesis import strategies as st

from gsp4_local_zeta.algebra import NVARS, LaurentPoly, VarId, var


C, A, B, R, U, T, X, Y = (var(v) for v in VarId)

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)
nonzero_fractions = small_fractions.filter(lambda f: f != 0)

exponent_vectors = st.tuples(*[st.integers(min_value=-2, max_value=2)] * NVARS)

small_polys = st.dictionaries(exponent_vectors, nonzero_fractions, max_size=6).map(LaurentPoly)

bindings = st.fixed_dictionaries({v: nonzero_fractions for v in VarId})
