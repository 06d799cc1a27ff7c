"""Exact simple closed curves on the cut-open surface.

A curve is stored as a reduced cyclic word of signed arc crossings.  Since
the complement of the cut system is a disk, the crossing word determines
the free homotopy class, and for embedded curves free homotopy classes
and isotopy classes agree.  Cyclic reduction therefore is normalization:
a cancelling adjacent pair x x^-1 is exactly an innermost return bigon
against a cut arc, and the reduced word is the shortest representative.

Intersection numbers, crossing signs and twist surgery are computed on
the dual tree of the cut system in the universal cover.  Vertices of the
tree are lifts of the disk, the 4g edge germs at each vertex appear in
the cyclic order given by the surface's ``boundary_order``, and a curve
lifts to a family of bi-infinite geodesics (axes).  Two lifts cross if
and only if they leave a common vertex on opposite sides, which turns
minimal-position intersection counts into finite walks along periodic
words.  No reduction order ever has to be chosen; the counts returned
are minimal by construction, which is the bigon criterion in this model.
"""
from functools import cmp_to_key

from .errors import Inessential, NotSimple, SurfaceMismatch

_WALK_MARGIN = 8  # two distinct periodic rays must disagree within p+q steps


# ---------------------------------------------------------------------------
# words

def reduce_cyclic(word):
    """Freely and cyclically reduce a crossing word."""
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    while len(out) >= 2 and out[0] == -out[-1]:
        out.pop()
        out.pop(0)
    return tuple(out)


def inverse_word(word):
    return tuple(-x for x in reversed(word))


def rotate_word(word, k):
    k %= len(word)
    return word[k:] + word[:k]


def canonical_form(word):
    """Least rotation of the word or of its inverse, as unoriented curves."""
    if not word:
        return ()
    best = min(rotate_word(word, k) for k in range(len(word)))
    inv = inverse_word(word)
    best_inv = min(rotate_word(inv, k) for k in range(len(inv)))
    return min(best, best_inv)


def is_primitive(word):
    """True unless the cyclic word is a proper power."""
    n = len(word)
    for d in range(1, n):
        if n % d == 0 and word == rotate_word(word, d):
            return False
    return True


# ---------------------------------------------------------------------------
# walks in the dual tree

def _ray_side(surface, line, phase, ray, cap):
    """Side on which a ray leaves a bi-infinite geodesic.

    ``line`` is the cyclic word of the geodesic, ``phase`` the position of
    the shared start vertex (between letters phase-1 and phase), and
    ``ray(r)`` the r-th letter of the departing ray.  The ray may coast
    along the line in either direction before branching off.  Returns
    (side, followed) where side is +1 when the departing germ lies in the
    counterclockwise arc from the line's forward germ to its backward
    germ, and followed counts forward steps shared with the line.
    """
    pos = surface._pos
    n = len(surface.boundary_order)
    p = len(line)
    first = ray(0)
    if first == line[phase % p]:
        r = 1
        while ray(r) == line[(phase + r) % p]:
            r += 1
            if r > cap:
                raise RuntimeError("ray follows line beyond the periodicity bound")
        i = phase + r
        f, b, t = line[i % p], -line[(i - 1) % p], ray(r)
        followed = r
    elif first == -line[(phase - 1) % p]:
        r = 1
        while ray(r) == -line[(phase - 1 - r) % p]:
            r += 1
            if r > cap:
                raise RuntimeError("ray follows line beyond the periodicity bound")
        i = phase - r
        f, b, t = line[i % p], -line[(i - 1) % p], ray(r)
        followed = 0
    else:
        f, b, t = line[phase % p], -line[(phase - 1) % p], first
        followed = 0
    df = (pos[t] - pos[f]) % n
    db = (pos[b] - pos[f]) % n
    side = 1 if 0 < df < db else -1
    return side, followed


class _Crossing:
    """One lift of ``other`` crossing the reference axis.

    m is the first axis vertex the lift passes through, j the phase of
    ``other`` at that vertex, k the number of forward axis edges shared,
    aligned whether the lift traverses them in the axis direction, and
    eps the crossing sign (+1 when the lift's forward end departs on the
    positive side of the axis).
    """

    __slots__ = ("m", "j", "k", "aligned", "eps")

    def __init__(self, m, j, k, aligned, eps):
        self.m = m
        self.j = j
        self.k = k
        self.aligned = aligned
        self.eps = eps


def _crossings(surface, a, b):
    """All lifts of b crossing the axis of a, one per period of a.

    Both words must be reduced, cyclically reduced and non-conjugate as
    unoriented curves.  A lift is anchored at the first axis vertex it
    meets, so each geometric crossing is listed exactly once.
    """
    p, q = len(a), len(b)
    cap = p + q + _WALK_MARGIN
    out = []
    for m in range(p):
        back = -a[(m - 1) % p]
        for j in range(q):
            if back == b[j] or back == -b[(j - 1) % q]:
                continue  # lift also passes the previous axis vertex
            side_fwd, fol_fwd = _ray_side(
                surface, a, m, lambda r, j=j: b[(j + r) % q], cap
            )
            side_back, fol_back = _ray_side(
                surface, a, m, lambda r, j=j: -b[(j - 1 - r) % q], cap
            )
            if side_fwd == side_back:
                continue
            aligned = b[j] == a[m % p]
            k = fol_fwd if aligned else fol_back
            out.append(_Crossing(m, j, k, aligned, side_fwd))
    return out


def _phase_at(x, t, q):
    """Phase of a crossing lift at axis vertex t inside its interval."""
    steps = t - x.m
    return (x.j + steps) % q if x.aligned else (x.j - steps) % q


def _crossing_order(surface, a, b):
    """Crossing lifts of b along the axis of a, in traversal order.

    Lifts met on disjoint vertex intervals are ordered by their anchors.
    When intervals share a vertex the lifts pass through a common disk;
    there the earlier crossing is the one whose lift sits on the side of
    the other that the axis arrives from.
    """
    xs = _crossings(surface, a, b)
    if len(xs) <= 1:
        return xs
    p, q = len(a), len(b)
    cap = p + q + _WALK_MARGIN

    def earlier(x2, x1):
        # True when the axis meets x2's lift before x1's.
        t = max(x1.m, x2.m)
        p1 = _phase_at(x1, t, q)
        p2 = _phase_at(x2, t, q)
        side_l2, _ = _ray_side(surface, b, p1, lambda r: b[(p2 + r) % q], 2 * q + cap)
        side_from, _ = _ray_side(
            surface, b, p1, lambda r: -a[(t - 1 - r) % p], 2 * q + cap
        )
        return side_l2 == side_from

    def cmp(x1, x2):
        if max(x1.m, x2.m) <= min(x1.m + x1.k, x2.m + x2.k):
            return 1 if earlier(x2, x1) else -1
        return -1 if x1.m < x2.m else 1

    return sorted(xs, key=cmp_to_key(cmp))


# ---------------------------------------------------------------------------
# simplicity

def _has_self_crossing(surface, word):
    p = len(word)
    cap = 2 * p + _WALK_MARGIN
    for m in range(p):
        back = -word[(m - 1) % p]
        for j in range(p):
            if j == m:
                continue
            if back == word[j] or back == -word[(j - 1) % p]:
                continue
            s1, _ = _ray_side(surface, word, m, lambda r, j=j: word[(j + r) % p], cap)
            s2, _ = _ray_side(
                surface, word, m, lambda r, j=j: -word[(j - 1 - r) % p], cap
            )
            if s1 != s2:
                return True
    return False


def validate_simple(word, surface):
    """Whether a raw crossing word yields an embedded essential curve.

    The word is reduced first; the empty (inessential) class is flagged
    as not simple.  A proper power never embeds, and otherwise the class
    embeds exactly when no two of its lifts cross.
    """
    word = tuple(word)
    for x in word:
        if not isinstance(x, int) or x == 0 or abs(x) > surface.arc_count:
            raise ValueError(f"letter {x!r} does not name an arc of the surface")
    reduced = reduce_cyclic(word)
    if not reduced:
        return False
    if not is_primitive(reduced):
        return False
    return not _has_self_crossing(surface, reduced)


# ---------------------------------------------------------------------------
# curves

class Curve:
    """An essential simple closed curve in normalized position.

    Instances are immutable and compared as unoriented curves, that is
    up to rotation and reversal of the crossing word.  Use ``normalize``
    to build one from a raw word.
    """

    __slots__ = ("surface", "word", "_canon", "_hash")

    def __init__(self, surface, word):
        normalized = _validate_word(surface, tuple(word))
        object.__setattr__(self, "surface", surface)
        object.__setattr__(self, "word", normalized)
        object.__setattr__(self, "_canon", canonical_form(normalized))
        object.__setattr__(self, "_hash", hash((surface.genus, self._canon)))

    def __setattr__(self, name, value):
        raise AttributeError("Curve is immutable")

    def __eq__(self, other):
        if not isinstance(other, Curve):
            return NotImplemented
        return self.surface == other.surface and self._canon == other._canon

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.word)

    def __repr__(self):
        return f"Curve({self.tokens()!r}, genus={self.surface.genus})"

    def tokens(self):
        """Plain text form, e.g. ``'e3+ e2+ e3- e2-'``."""
        names = self.surface.cut_arcs
        return " ".join(
            f"{names[abs(x) - 1]}{'+' if x > 0 else '-'}" for x in self.word
        )


def _validate_word(surface, word):
    for x in word:
        if not isinstance(x, int) or x == 0 or abs(x) > surface.arc_count:
            raise ValueError(f"letter {x!r} does not name an arc of the surface")
    reduced = reduce_cyclic(word)
    if not reduced:
        raise Inessential("word reduces to a contractible loop")
    if not is_primitive(reduced):
        raise NotSimple("word is a proper power")
    if _has_self_crossing(surface, reduced):
        raise NotSimple("chord diagram admits no disjoint realization")
    if canonical_form(reduced) == canonical_form(surface.boundary_word()):
        raise Inessential("word is parallel to the boundary")
    return reduced


def normalize(word, surface):
    """Normalize a raw cyclic crossing word to a Curve.

    Reduction removes every return bigon against the cut arcs, and the
    result is the unique shortest word in the isotopy class, up to
    rotation and reversal.  Idempotent on already normalized words.
    """
    if isinstance(word, str):
        word = parse_tokens(word, surface)
    return Curve(surface, word)


def parse_tokens(text, surface):
    """Inverse of Curve.tokens, accepting names like ``e3-``."""
    index = {name: k + 1 for k, name in enumerate(surface.cut_arcs)}
    word = []
    for tok in text.split():
        if len(tok) < 2 or tok[-1] not in "+-":
            raise ValueError(f"bad crossing token {tok!r}")
        name, sign = tok[:-1], 1 if tok[-1] == "+" else -1
        if name not in index:
            raise ValueError(f"unknown arc {name!r}")
        word.append(sign * index[name])
    return tuple(word)


def _fast_curve(surface, word):
    """Trusted constructor for words already known to be embedded.

    Twist surgery outputs are homeomorphic images of embedded curves, so
    the expensive simplicity re-check is skipped; reduction still runs.
    """
    curve = Curve.__new__(Curve)
    reduced = reduce_cyclic(tuple(word))
    object.__setattr__(curve, "surface", surface)
    object.__setattr__(curve, "word", reduced)
    object.__setattr__(curve, "_canon", canonical_form(reduced))
    object.__setattr__(curve, "_hash", hash((surface.genus, curve._canon)))
    return curve


def _check_same_surface(a, b):
    if a.surface != b.surface:
        raise SurfaceMismatch("curves live on different surfaces")


def is_isotopic(a, b):
    """Whether two normalized curves are isotopic (as unoriented curves)."""
    _check_same_surface(a, b)
    return a._canon == b._canon


def intersection_number(a, b):
    """Geometric intersection number of two normalized curves.

    Symmetric, and zero on isotopic pairs since a curve can be isotoped
    off itself.
    """
    _check_same_surface(a, b)
    if a._canon == b._canon:
        return 0
    return len(_crossings(a.surface, a.word, b.word))


def algebraic_intersection_number(a, b):
    """Signed count of crossings of b through a, for the stored orientations."""
    _check_same_surface(a, b)
    if a._canon == b._canon:
        return 0
    return sum(x.eps for x in _crossings(a.surface, a.word, b.word))


def dehn_twist(target, about, power=1):
    """The twist of ``target`` about ``about``, normalized.

    The image is computed by one surgery pass: the crossings of the pair
    are enumerated in their order along the target, and at each one the
    target is rerouted along |power| parallel copies of the twisting
    curve, in the direction given by the crossing sign and the sign of
    ``power``.  A single pass inserts all copies, so the word grows
    linearly in |power|.
    """
    _check_same_surface(target, about)
    if power == 0 or is_isotopic(target, about):
        return target
    surface = target.surface
    d, c = target.word, about.word
    q = len(c)
    xs = _crossing_order(surface, d, c)
    if not xs:
        return target
    inserts = {}
    slot = xs[0].m
    for x in xs:
        slot = max(slot, x.m)
        assert slot <= x.m + x.k, "crossing order inconsistent with intervals"
        phase = _phase_at(x, slot, q)
        loop = rotate_word(c, phase)
        e = x.eps * power
        piece = loop * e if e > 0 else inverse_word(loop) * (-e)
        inserts.setdefault(slot, []).append(piece)
    word = []
    for i in range(len(d)):
        for piece in inserts.get(i, ()):
            word.extend(piece)
        word.append(d[i])
    return _fast_curve(surface, word)


def homology_class(a):
    """Class of a curve in the arc-dual basis, with a canonical sign.

    Coordinate k is the signed number of crossings of arc k+1.  Curves
    are unoriented, so the vector is only defined up to a global sign;
    the first nonzero coordinate is reported positive.
    """
    coords = [0] * a.surface.arc_count
    for x in a.word:
        coords[abs(x) - 1] += 1 if x > 0 else -1
    return canonical_sign(tuple(coords))


def oriented_class(word, arc_count):
    """Signed crossing vector for the stored orientation of a word."""
    coords = [0] * arc_count
    for x in word:
        coords[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(coords)


def canonical_sign(vector):
    """Flip the sign, if needed, so the first nonzero entry is positive."""
    for v in vector:
        if v > 0:
            return tuple(vector)
        if v < 0:
            return tuple(-x for x in vector)
    return tuple(vector)
