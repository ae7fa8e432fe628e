from cubalg.poincare import poincare_series, series_product


def test_single_generator():
    assert poincare_series((2,), 7) == [1, 0, 1, 0, 1, 0, 1, 0]


def test_two_generators_alpha():
    # Z[alpha1, alpha3], |alpha1| = 2, |alpha3| = 6
    ps = poincare_series((2, 6), 12)
    assert ps == [1, 0, 1, 0, 1, 0, 2, 0, 2, 0, 2, 0, 3]


def test_product_is_union_of_generators():
    a = poincare_series((2,), 10)
    b = poincare_series((6,), 10)
    assert series_product(a, b, 10) == poincare_series((2, 6), 10)


def test_weights_with_multiplicity():
    ps = poincare_series((2, 2), 4)
    assert ps == [1, 0, 2, 0, 3]
