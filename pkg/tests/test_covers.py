import pytest

from cubalg.covers import (cech_weighted_projective, cover_fiber,
                           descent_assemble, tmf_mu_page)


def test_cusp_fiber_p2():
    fib = cover_fiber((0, 0, 0, 0, 0), 2)
    assert fib.rank == 8
    assert fib.field == "F2"
    assert set(fib.basis_text()) == {
        "1", "s", "s^2", "s^3", "t", "s*t", "s^2*t", "s^3*t"}


def test_cusp_fiber_p3():
    fib = cover_fiber((0, 0, 0, 0, 0), 3)
    assert fib.rank == 3
    assert set(fib.basis_text()) == {"1", "r", "r^2"}


@pytest.mark.parametrize("coeffs", [(1, 0, 1, 0, 0), (0, 1, 0, 1, 1),
                                    (1, 2, 3, 4, 5)])
@pytest.mark.parametrize("field", ["Q", "F5"])
def test_noncuspidal_fiber_rank8(coeffs, field):
    assert cover_fiber(coeffs, 2, field).rank == 8


def test_off_prime_not_invertible():
    with pytest.raises(ValueError):
        cover_fiber((0, 0, 0, 0, 0), 2, "F3")
    with pytest.raises(ValueError):
        cover_fiber((0, 0, 0, 0, 0), 5)


def test_cech_p13():
    page = cech_weighted_projective((1, 3), range(-6, 7))
    assert page.h0_ranks[0] == 1 and page.h0[0] == ["1"]
    assert page.h0_ranks[6] == 3                 # x1^6, x1^3 x2, x2^2
    assert page.h1_ranks[-1] == 0                # no lattice points
    assert page.h1_ranks[-4] == 1
    assert page.h1[-4] == ["x1^-1*x2^-1"]
    for j in range(0, 7):
        assert page.h1_ranks[j] == 0


def test_descent_pi_table():
    page = cech_weighted_projective((1, 3), range(-8, 8),
                                    gen_names=("alpha1", "alpha3"))
    table = descent_assemble(page, range(0, 13))
    ranks = [table[d]["rank"] for d in range(13)]
    assert ranks == [1, 0, 1, 0, 1, 0, 2, 0, 2, 0, 2, 0, 3]
    neg = descent_assemble(page, range(-12, 0))
    assert all(neg[d]["rank"] == 0 for d in range(-8, 0))
    assert neg[-9]["rank"] == 1
    assert neg[-9]["generators"] == [("h1", "alpha1^-1*alpha3^-1")]


def test_cech_p46_gap():
    page = cech_weighted_projective((4, 6), range(-14, 2))
    table = descent_assemble(page, range(-24, 1))
    for d in range(-20, 0):
        assert table[d]["rank"] == 0
    assert table[-21]["rank"] == 1


def test_tmf_mu_specialized_matches_p13():
    out = tmf_mu_page((-40, 8), 3, specialize_p13=True, validate_h0=True)
    page = cech_weighted_projective((1, 3), range(-20, 5))
    for w in range(-40, 9):
        if w % 2 == 0:
            assert out["h0"][w] == page.h0_ranks[w // 2]
            assert out["h1"][w] == page.h1_ranks[w // 2]
    assert out["h0_validated"]


def test_tmf_mu_full_ring_generators():
    out = tmf_mu_page((-70, 12), 8)
    for w in range(0, 13):
        assert out["h1"].get(w, 0) == 0
    gens = out["h1_generators"]
    assert gens[-32] == ["c4^-1*delta^-1"]
    assert set(gens[-64]) == {"c4^-2*delta^-2", "c4^-5*delta^-1"}
    assert "module generators" in out["h1_meaning"] \
        or "generators" in out["h1_meaning"]


def test_tmf_mu_window_needs_cutoff():
    with pytest.raises(ValueError):
        tmf_mu_page((0, 100), 1)
