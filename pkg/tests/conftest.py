from fractions import Fraction

from hypothesis import strategies as st

from pentadyn.cyclo import Cyclo, QuadReal


def small_fractions(max_den=12, bound=6):
    return st.builds(lambda p, q: Fraction(p, q),
                     st.integers(-bound * max_den, bound * max_den), st.integers(1, max_den))


def cyclo5():
    return st.lists(small_fractions(), min_size=4, max_size=4).map(lambda c: Cyclo(5, c))


def unit_coordinate(max_den=40):
    """Elements of Q(omega) in [0, 1) with small denominators."""
    return st.builds(lambda a, b, m: QuadReal(Fraction(a, m), Fraction(b, m)).frac(),
                     st.integers(-200, 200), st.integers(-200, 200), st.integers(1, max_den))
