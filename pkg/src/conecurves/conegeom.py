"""The cone over an embedded base variety and its vertex resolution.

A ConeSpace is the projective cone over the base G/P, embedded by the
ample weight with degree vector ell on the Picard generators, with an
extra vertex linear space coming from an n-dimensional summand V.  Its
resolution is the projective bundle P((V (x) O) + L) over the base, a
P^n-bundle of the same dimension dim(G/P) + n, with exceptional divisor
E the trivial P^(n-1)-bundle.

A curve class on the resolution is recorded as a TildeClass: the
pushforward class beta on the base (coordinates on the Picard
generators) plus the relative degree, its pairing with the relative
tangent bundle of the bundle projection.  All derived intersection
numbers flow from the single identity

    e = (relative_degree - n * l) / (n + 1),      l = <beta, ell>,

the intersection with E; a class exists only when that quotient is an
integer.  The degree of the pushforward to the cone is l + e.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, InternalError
from .parabolic import ParabolicData, validate_ample
from .rootsys import Weight


@dataclass(frozen=True)
class ConeSpace:
    """Cone data: base parabolic, embedding degrees, vertex summand dimension."""

    parabolic: ParabolicData
    ell: tuple[int, ...]
    vertex_dim: int

    def __post_init__(self) -> None:
        if self.vertex_dim < 1:
            raise InputError(
                "vertex_dim must be >= 1; with no vertex summand the space is the base variety itself"
            )
        if len(self.ell) != len(self.parabolic.alpha_p):
            raise InputError(
                f"ell has {len(self.ell)} entries, expected {len(self.parabolic.alpha_p)} (one per marked node)"
            )
        if any(l < 1 for l in self.ell):
            raise InputError(f"ell = {self.ell}: embedding degrees must all be >= 1")

    @property
    def dim_x(self) -> int:
        """Dimension of the cone (equals the dimension of its resolution)."""
        return self.parabolic.dim_gp + self.vertex_dim


@dataclass(frozen=True)
class TildeClass:
    """A curve class on the resolution: base class plus relative degree."""

    beta: tuple[int, ...]
    relative_degree: int


def build_cone(p: ParabolicData, lam: Weight, vertex_dim: int) -> ConeSpace:
    """Validate an ample weight on the parabolic facet and build the cone."""
    return ConeSpace(p, validate_ample(p, lam), vertex_dim)


def cone_from_ell(p: ParabolicData, ell, vertex_dim: int) -> ConeSpace:
    """Build the cone directly from a degree vector on the Picard generators."""
    return ConeSpace(p, tuple(ell), vertex_dim)


def _check_beta(cone: ConeSpace, beta: tuple[int, ...]) -> None:
    if len(beta) != len(cone.ell):
        raise InputError(f"beta has {len(beta)} entries, expected {len(cone.ell)}")


def base_degree(cone: ConeSpace, beta: tuple[int, ...]) -> int:
    """Degree <beta, ell> of a base class in the embedding."""
    _check_beta(cone, beta)
    return sum(b * l for b, l in zip(beta, cone.ell))


def has_lines(cone: ConeSpace) -> bool:
    """Whether the embedded base contains a degree-1 rational curve.

    True exactly when some embedding degree is 1, i.e. the dual class
    of a minimally-marked node has degree 1.
    """
    return min(cone.ell) == 1


def lemma_equiv_check(cone: ConeSpace) -> bool:
    """Verify that the no-lines condition coincides with all degrees >= 2.

    Returns the equivalence (not has_lines) == (all ell >= 2), with both
    sides computed independently; this must hold for every cone.
    """
    return (not has_lines(cone)) == all(l >= 2 for l in cone.ell)


def e_intersection(cone: ConeSpace, t: TildeClass) -> int:
    """Intersection of the class with the exceptional divisor.

    e = (relative_degree - n*l) / (n+1).  Non-divisibility means no such
    curve class exists on the resolution and raises InputError.
    """
    n = cone.vertex_dim
    l = base_degree(cone, t.beta)
    num = t.relative_degree - n * l
    if num % (n + 1):
        raise InputError(
            f"no class with relative degree {t.relative_degree} over a base class of degree {l}: "
            f"{num} is not divisible by {n + 1}"
        )
    return num // (n + 1)


def pushforward_degree(cone: ConeSpace, t: TildeClass) -> int:
    """Total degree of the image curve on the cone: base degree plus e."""
    return base_degree(cone, t.beta) + e_intersection(cone, t)


def is_nonempty(cone: ConeSpace, t: TildeClass) -> bool:
    """Whether the space of maps P^1 -> resolution in this class is nonempty.

    Needs beta effective (all coordinates >= 0) and, writing d for the
    relative degree and l for the base degree: d = -l or d >= l when the
    vertex summand is a line (n = 1), and d >= -l when n >= 2.
    Equivalently the section twist x = (d + l)/(n + 1) satisfies x >= 0,
    refined for n = 1 to x = 0 or x >= l.
    """
    e_intersection(cone, t)  # class must exist at all
    if any(b < 0 for b in t.beta):
        return False
    n = cone.vertex_dim
    d = t.relative_degree
    l = base_degree(cone, t.beta)
    if n == 1:
        return d == -l or d >= l
    return d >= -l


def fiber_dim(cone: ConeSpace, t: TildeClass) -> int:
    """Dimension of the space of sections over a fixed base map.

    Sections of P((V (x) O) + O(l)) over P^1 with relative degree d are
    surjections onto O(x) with x = (d + l)/(n + 1), modulo scalars.  If
    x < l every section lies in the exceptional divisor and the space
    has dimension n*x + n - 1; otherwise it has dimension d + n.
    """
    if not is_nonempty(cone, t):
        raise InputError("empty class: no sections over the base map")
    n = cone.vertex_dim
    d = t.relative_degree
    l = base_degree(cone, t.beta)
    x = (d + l) // (n + 1)
    if x < l:
        return n * x + n - 1
    return d + n


def chern_degree_tilde(cone: ConeSpace, t: TildeClass) -> int:
    """Anticanonical degree of the class on the resolution.

    Equals <beta, chern_degrees> + relative_degree: the tangent bundle
    splits the base tangent degree off the relative one.
    """
    _check_beta(cone, t.beta)
    e_intersection(cone, t)  # class must exist
    return sum(b * c for b, c in zip(t.beta, cone.parabolic.chern_degrees)) + t.relative_degree


def dim_mor_tilde(cone: ConeSpace, t: TildeClass) -> int:
    """Dimension of the (irreducible) space of maps P^1 -> resolution.

    With d the relative degree, l the base degree and e the exceptional
    intersection:

        d >= n*l (e >= 0):  chern_degree + dim_x
        d <  n*l (e <  0):  chern_degree + dim_x - e - 1

    The same number must arise as <beta, chern> + dim(G/P) + fiber_dim
    (base map space plus section space); the two routes are compared on
    every call and a mismatch raises InternalError.
    """
    if not is_nonempty(cone, t):
        raise InputError("empty class: the morphism space has no dimension")
    n = cone.vertex_dim
    l = base_degree(cone, t.beta)
    e = e_intersection(cone, t)
    chern = chern_degree_tilde(cone, t)
    if t.relative_degree >= n * l:
        dim = chern + cone.dim_x
    else:
        dim = chern + cone.dim_x - e - 1
    base_route = (
        sum(b * c for b, c in zip(t.beta, cone.parabolic.chern_degrees))
        + cone.parabolic.dim_gp
        + fiber_dim(cone, t)
    )
    if dim != base_route:
        raise InternalError(f"dimension routes disagree: {dim} != {base_route} for {t}")
    return dim
