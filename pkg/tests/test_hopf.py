import pytest

from cubalg.hopf import (builtin_algebroid, invariants_h0,
                         ku_cp2_involution, synthesize_weierstrass_algebroid)


@pytest.fixture(scope="module")
def W():
    return builtin_algebroid("weierstrass")


def test_synthesized_structure_maps(W):
    assert W.eta_r["a1"].text() == "2*s + a1"
    assert W.delta["r"].text() == "r@2 + r@1"
    assert W.delta["s"].text() == "s@2 + s@1"
    assert W.delta["t"].text() == "t@2 + t@1 + s@1*r@2"
    assert W.chi_gamma["t"].text() == "-1*t + r*s"
    assert W.chi_gamma["r"].text() == "-1*r"


@pytest.mark.parametrize("name", ["weierstrass", "mqd", "z2_group"])
def test_all_axioms(name):
    H = builtin_algebroid(name)
    checks = H.verify()
    assert all(checks.values()), checks


def test_synthesis_is_deterministic():
    a = synthesize_weierstrass_algebroid()
    b = synthesize_weierstrass_algebroid()
    assert all(a.delta[n] == b.delta[n] for n in a.gamma_names)


def test_chi_is_involution(W):
    for n in W.gamma_names:
        assert W.chi(W.chi_gamma[n]) == W.gamma.gen(n)


def test_h0_weierstrass(W):
    inv = invariants_h0(W, range(0, 13))
    ranks = {j: len(inv[j]) for j in inv}
    # modular forms: 1, 0, 0, 0, c4, 0, c6, 0, c4^2, 0, c4 c6, 0, rank 2
    assert [ranks[j] for j in range(13)] == \
        [1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 2]
    texts12 = [p.text() for p in inv[12]]
    assert len(texts12) == 2


def test_h0_mqd():
    H = builtin_algebroid("mqd")
    inv = invariants_h0(H, range(0, 5))
    # invariants form the polynomial ring on b^2 - 4c (weight 4 = 2j)
    assert [len(inv[j]) for j in range(5)] == [1, 0, 1, 0, 1]
    assert inv[2][0].text() == "-4*c + b^2"


def test_ku_cp2_involution():
    out = ku_cp2_involution()
    assert out["matrix"] == [[-1, 0], [1, 1]]
    assert out["involution"]
    assert out["is_swap"]
    assert out["swap_matrix"] == [[0, 1], [1, 0]]
