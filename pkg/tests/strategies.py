from __future__ import annotations

from hypothesis import strategies as st

from app.algebra.multivector import Multivector
from app.algebra.signature import Algebra, Signature, make_algebra

# Small integers keep every product exact in binary floating point.
small_ints = st.integers(min_value=-3, max_value=3).map(float)
real_coefficients = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False, allow_infinity=False)


def signatures(max_dims: int = 5) -> st.SearchStrategy[Signature]:
    return (
        st.tuples(st.integers(0, max_dims), st.integers(0, max_dims), st.integers(0, 2))
        .filter(lambda pqr: 1 <= sum(pqr) <= max_dims)
        .map(lambda pqr: Signature(*pqr))
    )


def multivectors(algebra: Algebra, coefficients=small_ints, max_terms: int = 6) -> st.SearchStrategy[Multivector]:
    return st.dictionaries(
        st.integers(0, algebra.size - 1), coefficients, max_size=max_terms
    ).map(lambda terms: Multivector(algebra, terms))


def vectors(algebra: Algebra, coefficients=small_ints) -> st.SearchStrategy[Multivector]:
    return st.lists(coefficients, min_size=algebra.dims, max_size=algebra.dims).map(
        lambda coefs: Multivector.vector(algebra, coefs)
    )


def grade_elements(algebra: Algebra, grade: int, coefficients=small_ints) -> st.SearchStrategy[Multivector]:
    blades = algebra.blades(grade)
    return st.lists(coefficients, min_size=len(blades), max_size=len(blades)).map(
        lambda coefs: Multivector(algebra, dict(zip(blades, coefs)))
    )


@st.composite
def algebra_and_multivectors(draw, count: int = 3, max_dims: int = 5):
    algebra = make_algebra(draw(signatures(max_dims)))
    return (algebra, *(draw(multivectors(algebra)) for _ in range(count)))
