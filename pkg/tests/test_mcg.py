import pytest

from lspacecert.curves import (
    canonical_sign,
    homology_class,
    intersection_number,
    is_isotopic,
    oriented_class,
)
from lspacecert.errors import GenusTooSmall, NegativePower
from lspacecert.mcg import (
    TwistWord,
    alexander_polynomial,
    apply_word,
    beta_gn,
    homology_action,
    monodromy_phi,
    monodromy_psi,
    standard_curve_system,
    symplectic_form,
    torus_knot_alexander,
)
from lspacecert.poly import LaurentPoly

from conftest import random_curve, random_twist_word
from oracles import seifert_torus_alexander


# ---------------------------------------------------------------------------
# the standard system

@pytest.mark.parametrize("g", [2, 3, 4, 5])
def test_system_chain_pattern(g):
    system = standard_curve_system(g)
    chain = system.chain()
    assert len(chain) == 2 * g
    for i, x in enumerate(chain):
        for j, y in enumerate(chain):
            want = 1 if abs(i - j) == 1 else 0
            assert intersection_number(x, y) == want


@pytest.mark.parametrize("g", [2, 3, 4, 5])
def test_system_c_pattern(g):
    system = standard_curve_system(g)
    c = system.c
    assert intersection_number(c, system.betas[-1]) == 2
    assert intersection_number(c, system.alphas[-2]) == 2
    assert intersection_number(c, system.alphas[-1]) == 0
    for x in system.alphas[:-2] + system.betas[:-1]:
        assert intersection_number(c, x) == 0
    assert homology_class(c) == tuple([0] * (2 * g))


def test_genus_too_small():
    with pytest.raises(GenusTooSmall):
        standard_curve_system(1)


# ---------------------------------------------------------------------------
# monodromies

def test_phi_word_order():
    word = monodromy_phi(2, 0)
    system = standard_curve_system(2)
    expect = [system.betas[1], system.betas[0], system.alphas[1], system.alphas[0]]
    assert [c for c, _ in word.factors] == expect
    assert all(p == 1 for _, p in word.factors)


def test_phi_outermost_factor_is_twisted():
    word = monodromy_phi(2, 3)
    outer, _ = word.factors[0]
    assert is_isotopic(outer, beta_gn(2, 3))


@pytest.mark.parametrize("g", [2, 3, 4])
def test_phi_has_2g_factors_and_splits_as_twist_then_psi(g):
    n = 2
    phi = monodromy_phi(g, n)
    psi = monodromy_psi(g)
    assert len(phi) == 2 * g
    assert len(psi) == 2 * g - 1
    recombined = TwistWord(((beta_gn(g, n), 1),)) * psi
    assert recombined == phi


def test_beta_gn_examples():
    assert is_isotopic(beta_gn(2, 0), standard_curve_system(2).betas[-1])
    assert intersection_number(beta_gn(2, 1), standard_curve_system(2).alphas[0]) == 4
    assert intersection_number(beta_gn(2, 5), standard_curve_system(2).alphas[1]) == 1
    with pytest.raises(NegativePower):
        beta_gn(2, -1)
    with pytest.raises(GenusTooSmall):
        beta_gn(1, 1)


@pytest.mark.parametrize("g", [2, 3, 4, 5])
def test_psi_image_meets_beta_g_once(g):
    system = standard_curve_system(g)
    bg = system.betas[-1]
    assert intersection_number(bg, apply_word(monodromy_psi(g), bg)) == 1


def test_apply_empty_word_is_identity():
    b2 = standard_curve_system(2).betas[-1]
    assert apply_word(TwistWord(()), b2) is b2


def test_psi_image_of_beta_g_reduces_to_two_factors():
    # all other factors act trivially here, at the level of curves
    for g in (2, 3, 4):
        system = standard_curve_system(g)
        bg = system.betas[-1]
        two = TwistWord(((system.betas[-2], 1), (system.alphas[-1], 1)))
        assert is_isotopic(
            apply_word(monodromy_psi(g), bg), apply_word(two, bg)
        )


@pytest.mark.parametrize("g,n", [(3, 1), (3, 2), (4, 1)])
def test_psi_on_twisted_curve_reduces_up_to_a_translation_fixing_it(g, n):
    # The low-index beta twists do move the three-factor image for g >= 3
    # (their cores meet the inserted strands parallel to a_{g-1}), but the
    # full image is exactly that image translated by those twists, and the
    # translation fixes B[g,n].  Every rank against B[g,n] therefore agrees
    # with the three-factor computation.
    system = standard_curve_system(g)
    bn = beta_gn(g, n)
    short = apply_word(
        TwistWord(
            (
                (system.betas[g - 2], 1),
                (system.alphas[g - 1], 1),
                (system.alphas[g - 2], 1),
            )
        ),
        bn,
    )
    w = TwistWord(tuple((b, 1) for b in reversed(system.betas[: g - 2])))
    full = apply_word(monodromy_psi(g), bn)
    assert is_isotopic(apply_word(w, bn), bn)
    assert is_isotopic(full, apply_word(w, short))
    assert intersection_number(full, bn) == intersection_number(short, bn)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_twisted_pair_rank_meets_engine_bound(n):
    bn = beta_gn(2, n)
    image = apply_word(monodromy_psi(2), bn)
    assert intersection_number(image, bn) >= 16 * n * n - 3


# ---------------------------------------------------------------------------
# homology action

def test_twist_about_c_acts_trivially_on_homology():
    system = standard_curve_system(2)
    act = homology_action(TwistWord(((system.c, 1),)))
    n = 4
    assert act.entries == tuple(
        tuple(1 if r == s else 0 for s in range(n)) for r in range(n)
    )


def test_homological_monodromy_independent_of_n():
    base = homology_action(monodromy_phi(2, 0)).entries
    for n in (1, 2, 5):
        assert homology_action(monodromy_phi(2, n)).entries == base


def test_action_is_symplectic_randomized(rng):
    # construction re-checks M^T J M = J; just build random words
    for g in (2, 3):
        for _ in range(15):
            homology_action(random_twist_word(rng, g))


def test_action_matches_kernel_on_curves(rng):
    for g in (2, 3):
        for _ in range(15):
            w = random_twist_word(rng, g, max_len=3)
            x = random_curve(rng, g, max_len=2)
            lhs = homology_class(apply_word(w, x))
            rhs = canonical_sign(
                homology_action(w).apply(oriented_class(x.word, 2 * g))
            )
            assert lhs == rhs


def test_symplectic_form_is_the_chain_form():
    j = symplectic_form(2)
    assert j == (
        (0, 1, 0, 0),
        (-1, 0, 1, 0),
        (0, -1, 0, 1),
        (0, 0, -1, 0),
    )


# ---------------------------------------------------------------------------
# Alexander polynomials

def test_alexander_genus_two_verbatim():
    poly = alexander_polynomial(monodromy_phi(2, 0))
    assert str(poly) == "t^4 - t^3 + t^2 - t + 1"


@pytest.mark.parametrize("g", [2, 3, 4])
def test_alexander_independent_of_n_and_matches_seifert_oracle(g):
    polys = {alexander_polynomial(monodromy_phi(g, n)) for n in range(6)}
    assert len(polys) == 1
    poly = polys.pop()
    assert poly == LaurentPoly.from_dict(seifert_torus_alexander(g))
    assert poly == torus_knot_alexander(g)
    assert abs(poly(1)) == 1
    assert poly.is_palindromic()
    assert len(poly.coeffs) == 2 * g + 1


def test_alexander_coefficients_alternate():
    poly = alexander_polynomial(monodromy_phi(3, 2))
    coeffs = [c for _, c in sorted(poly.coeffs)]
    assert coeffs == [(-1) ** e for e in range(7)]
