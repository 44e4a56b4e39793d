"""Reference manifolds and randomized bundle generators.

Small catalogue used by the self-check command and the test suite:
a point, a 4-dimensional string manifold, an 8-dimensional string
manifold with unit p_2 integral, and its non-string variant.
"""

from __future__ import annotations

from fractions import Fraction

from .cohomology import ManifoldSpec, RingSpec, TangentData
from .equivariant import IsotypicBundle, IsotypicComponent, RealEquivariantBundle
from .scalars import GaussianRational

POINT_RING = RingSpec((), 0, {(): 1})


def point_manifold():
    """Zero-dimensional manifold; the integral of 1 is 1."""
    return ManifoldSpec(POINT_RING, TangentData((), 0))


def string_4fold():
    """4-manifold with one degree-4 generator v, unit integral, p_1 = 0."""
    ring = RingSpec((("v", 4),), 4, {(1,): 1})
    return ManifoldSpec(ring, TangentData((ring.zero(),), 4))


def string_8fold(p2_integral=1):
    """8-manifold with generators a (degree 4) and b (degree 8),
    p_1 = 0 and p_2 = b with the given integral of b."""
    ring = RingSpec(
        (("a", 4), ("b", 8)),
        8,
        {(2, 0): 0, (0, 1): Fraction(p2_integral)},
    )
    tangent = TangentData((ring.zero(), ring.generator("b")), 8)
    return ManifoldSpec(ring, tangent)


def nonstring_8fold(p1_squared_integral=1, p2_integral=1):
    """Like string_8fold but with p_1 = a nonzero."""
    ring = RingSpec(
        (("a", 4), ("b", 8)),
        8,
        {(2, 0): Fraction(p1_squared_integral), (0, 1): Fraction(p2_integral)},
    )
    tangent = TangentData((ring.generator("a"), ring.generator("b")), 8)
    return ManifoldSpec(ring, tangent)


def all_fixture_manifolds():
    return {
        "point": point_manifold(),
        "string-4": string_4fold(),
        "string-8": string_8fold(),
        "nonstring-8": nonstring_8fold(),
    }


def random_real_bundle(rng, ring=None, max_pairs=2, max_rank=2,
                       conjugate_pairs=True):
    """Random real equivariant bundle with Gaussian-integer weights and
    rational Chern data, exact enough for the doubling identity to hold on
    the nose.

    With ``conjugate_pairs`` the opposite-weight component carries the
    conjugate-bundle Chern classes c_j -> (-1)^j c_j, as a genuine
    complexification would.
    """
    ring = ring or POINT_RING

    def random_class(degree):
        terms = {}
        for mono in ring.monomials_of_degree(degree):
            num = rng.randint(-3, 3)
            if num:
                terms[mono] = Fraction(num, rng.randint(1, 3))
        return ring.element(terms) if terms else ring.zero()

    n_pairs = rng.randint(1, max_pairs)
    comps = []
    used = set()
    while len(comps) < 2 * n_pairs:
        w = GaussianRational(rng.randint(-4, 4), rng.randint(-4, 4))
        if w == 0 or complex(w) in used:
            continue
        used.add(complex(w))
        used.add(complex(-w))
        rank = rng.randint(1, max_rank)
        chern = tuple(random_class(2 * j) for j in range(1, rank + 1))
        if conjugate_pairs:
            conj_chern = tuple(
                ((-1) ** j) * c for j, c in enumerate(chern, start=1)
            )
        else:
            conj_chern = tuple(random_class(2 * j) for j in range(1, rank + 1))
        comps.append(IsotypicComponent(w, rank, chern))
        comps.append(IsotypicComponent(-w, rank, conj_chern))
    return RealEquivariantBundle(IsotypicBundle(tuple(comps)))
