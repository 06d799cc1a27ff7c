"""The standard curve system, twisted monodromies, and homological actions.

The chain curves a_1, b_1, ..., a_g, b_g cross their cut arcs once each,
so they are the single-letter words in the arc-dual basis.  The extra
curve c bounds a neighborhood of a_g and b_{g-1}, which makes its word
the commutator of those two letters.  Every pinned property of the
system (the chain intersection pattern, the four crossings of c, its
null homology) is recomputed at construction time and any mismatch
aborts with AnchorViolation.
"""
from dataclasses import dataclass
from functools import lru_cache

from .curves import (
    Curve,
    algebraic_intersection_number,
    dehn_twist,
    homology_class,
    intersection_number,
    oriented_class,
)
from .errors import AnchorViolation, GenusTooSmall, NegativePower
from .poly import LaurentPoly, charpoly
from .surface import standard_surface


def _c_word(g):
    """Crossing word of the boundary of a neighborhood of a_g and b_{g-1}."""
    ag, bg1 = 2 * g - 1, 2 * g - 2
    return (ag, bg1, -ag, -bg1)


@dataclass(frozen=True)
class StandardCurveSystem:
    """The chain curves and the nullhomologous curve c on genus g."""

    surface: object
    alphas: tuple
    betas: tuple
    c: Curve

    @property
    def genus(self):
        return self.surface.genus

    def chain(self):
        """The 2g chain curves in order a_1, b_1, a_2, ..., b_g."""
        out = []
        for a, b in zip(self.alphas, self.betas):
            out.extend((a, b))
        return tuple(out)

    def named(self):
        pairs = [(f"a{i + 1}", a) for i, a in enumerate(self.alphas)]
        pairs += [(f"b{i + 1}", b) for i, b in enumerate(self.betas)]
        pairs.append(("c", self.c))
        return pairs


def _require(fact, expected, got):
    if expected != got:
        raise AnchorViolation(fact, expected, got)


@lru_cache(maxsize=None)
def standard_curve_system(g):
    """Build and validate the standard system on the genus-g surface."""
    if g < 2:
        raise GenusTooSmall(f"genus {g} < 2; the curve c needs a_g and b_{{g-1}}")
    surface = standard_surface(g)
    alphas = tuple(Curve(surface, (2 * i - 1,)) for i in range(1, g + 1))
    betas = tuple(Curve(surface, (2 * i,)) for i in range(1, g + 1))
    c = Curve(surface, _c_word(g))
    system = StandardCurveSystem(surface, alphas, betas, c)

    chain = system.chain()
    for i, x in enumerate(chain):
        for j in range(i + 1, 2 * g):
            want = 1 if j == i + 1 else 0
            _require(f"iota(chain_{i + 1}, chain_{j + 1})", want,
                     intersection_number(x, chain[j]))
    for name, x in system.named()[:-1]:
        want = 2 if name in (f"b{g}", f"a{g - 1}") else 0
        _require(f"iota(c, {name})", want, intersection_number(c, x))
    _require("homology(c)", tuple([0] * (2 * g)), homology_class(c))
    return system


@dataclass(frozen=True)
class TwistWord:
    """An ordered product of twist powers, outermost factor first."""

    factors: tuple

    def __post_init__(self):
        cleaned = tuple((c, p) for c, p in self.factors if p != 0)
        surfaces = {c.surface for c, _ in cleaned}
        if len(surfaces) > 1:
            raise ValueError("twist word mixes curves from different surfaces")
        object.__setattr__(self, "factors", cleaned)

    def __mul__(self, other):
        return TwistWord(self.factors + other.factors)

    def __len__(self):
        return len(self.factors)


def beta_gn(g, n):
    """The twisted curve obtained from b_g by n positive twists about c."""
    if n < 0:
        raise NegativePower(f"twist count n = {n} must be nonnegative")
    system = standard_curve_system(g)
    return dehn_twist(system.betas[-1], system.c, n)


def monodromy_phi(g, n):
    """The 2g-factor monodromy of the n-twisted fibred knot."""
    if n < 0:
        raise NegativePower(f"twist count n = {n} must be nonnegative")
    system = standard_curve_system(g)
    factors = [(beta_gn(g, n), 1)]
    factors += [(b, 1) for b in reversed(system.betas[:-1])]
    factors += [(a, 1) for a in reversed(system.alphas)]
    return TwistWord(tuple(factors))


def monodromy_psi(g):
    """The base monodromy: phi with the outermost twisted factor removed."""
    system = standard_curve_system(g)
    factors = [(b, 1) for b in reversed(system.betas[:-1])]
    factors += [(a, 1) for a in reversed(system.alphas)]
    return TwistWord(tuple(factors))


def apply_word(word, curve):
    """Image of a curve under a twist word, innermost factor first.

    Factors disjoint from the running curve act trivially and are skipped
    inside dehn_twist, so the common case of a word touching only part of
    the surface stays cheap.
    """
    out = curve
    for about, power in reversed(word.factors):
        out = dehn_twist(out, about, power)
    return out


# ---------------------------------------------------------------------------
# homology

@lru_cache(maxsize=None)
def symplectic_form(g):
    """Intersection pairing of the chain basis classes.

    Consecutive chain curves cross once positively with the stored
    orientations; the matrix is validated against the kernel's signed
    counts so the homological and word-level conventions cannot drift
    apart.
    """
    n = 2 * g
    j = [[0] * n for _ in range(n)]
    for k in range(n - 1):
        j[k][k + 1] = 1
        j[k + 1][k] = -1
    chain = standard_curve_system(g).chain()
    for r in range(n):
        for s in range(n):
            got = algebraic_intersection_number(chain[r], chain[s])
            if got != j[r][s]:
                raise AnchorViolation(f"pairing(chain_{r + 1}, chain_{s + 1})",
                                      j[r][s], got)
    return tuple(tuple(row) for row in j)


@dataclass(frozen=True)
class SymplecticMatrix:
    """Integer matrix preserving the chain pairing."""

    genus: int
    entries: tuple

    def __post_init__(self):
        j = symplectic_form(self.genus)
        m = self.entries
        n = 2 * self.genus
        jm = _mat_mul(j, m)
        mtjm = _mat_mul(_transpose(m), jm)
        if mtjm != j:
            raise ValueError("matrix does not preserve the intersection pairing")

    def __matmul__(self, other):
        return SymplecticMatrix(self.genus, _mat_mul(self.entries, other.entries))

    def apply(self, vector):
        return tuple(
            sum(row[k] * vector[k] for k in range(len(vector)))
            for row in self.entries
        )


def _transpose(m):
    return tuple(tuple(row[i] for row in m) for i in range(len(m)))


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _transvection(g, curve, power):
    """Action of a twist power on first homology: x -> x + power <x, c> c."""
    n = 2 * g
    j = symplectic_form(g)
    gamma = oriented_class(curve.word, n)
    jg = [sum(j[r][s] * gamma[s] for s in range(n)) for r in range(n)]
    entries = tuple(
        tuple((1 if r == s else 0) + power * gamma[r] * jg[s] for s in range(n))
        for r in range(n)
    )
    return SymplecticMatrix(g, entries)


def homology_action(word):
    """Product of the factor transvections, in word order."""
    if not word.factors:
        raise ValueError("empty twist word has no surface attached")
    g = word.factors[0][0].surface.genus
    out = _identity_matrix(g)
    for curve, power in word.factors:
        out = out @ _transvection(g, curve, power)
    return out


def _identity_matrix(g):
    n = 2 * g
    return SymplecticMatrix(
        g, tuple(tuple(1 if r == s else 0 for s in range(n)) for r in range(n))
    )


def alexander_polynomial(word):
    """det(t I - M) of the homological action, top coefficient +1.

    For the monodromy of a fibred knot this is its Alexander polynomial,
    normalized to lowest exponent zero and monic top term.
    """
    action = homology_action(word)
    poly = charpoly([list(row) for row in action.entries])
    poly = poly.shifted(-poly.min_exp)
    if poly.coeffs[-1][1] < 0:
        poly = poly.negated()
    return poly


def torus_knot_alexander(g):
    """t^{2g} - t^{2g-1} + ... + 1, the (2, 2g+1) torus knot polynomial."""
    return LaurentPoly.from_dict({e: (-1) ** e for e in range(0, 2 * g + 1)})
