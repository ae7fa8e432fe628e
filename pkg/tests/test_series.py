import pytest

from cubalg.poly import Ring
from cubalg.series import TruncatedSeries


@pytest.fixture
def R():
    return Ring(("c", "z"), (2, 0))


def zs(R, order=6):
    return TruncatedSeries(R.gen("z"), ("z",), order)


def test_truncation(R):
    z = zs(R, 3)
    p = (1 + z) ** 5
    assert p.coefficient("z", 3) == R.const(10)
    assert p.coefficient("z", 4).is_zero()


def test_unit_inverse(R):
    z = zs(R)
    f = 1 - R.gen("c") * z
    g = f.unit_inverse()
    assert (f * g - 1).poly.is_zero()
    assert g.coefficient("z", 3) == R.gen("c") ** 3


def test_unit_inverse_needs_unit(R):
    z = zs(R)
    with pytest.raises(Exception):
        (2 * z).unit_inverse()


def test_functional_inverse(R):
    z = zs(R)
    f = z + R.gen("c") * z * z
    g = f.functional_inverse("z")
    assert (f.substitute({"z": g}) - z).poly.is_zero()
    assert (g.substitute({"z": f}) - z).poly.is_zero()


def test_substitute_multivariate(R):
    R2 = R.extend(("w",), (0,))
    f = TruncatedSeries(R2.gen("z") * R2.gen("w"), ("z", "w"), 4)
    z = TruncatedSeries(R2.gen("z"), ("z", "w"), 4)
    sq = f.substitute({"z": z, "w": z})
    assert sq.coefficient("z", 2) == R2.one()


def test_coefficient_extraction(R):
    z = zs(R)
    f = 2 * z + 3 * z ** 2
    assert f.coefficient("z", 1) == R.const(2)
    assert f.coefficient("z", 2) == R.const(3)
    assert f.coefficient("z", 5).is_zero()
