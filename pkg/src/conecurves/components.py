"""Classification of the irreducible components of curve spaces on the cone.

For a total degree d, the components of the space of degree-d rational
curves on the cone are indexed by effective base classes.  When the
embedded base contains lines (some embedding degree is 1) every curve
deforms off the vertex and the index set is ne(d), the effective
classes of degree exactly d.  Without lines the vertex multiplicity
d - d' of a curve is a deformation invariant and the index set is the
disjoint union of ne(d') over 0 <= d' <= d.  In both regimes the
component dimension is

    <beta, chern - ell> + (n + 1) * d + dim_x,

which is cross-checked on every descriptor against the morphism-space
dimension of the lifted class on the resolution.
"""

from __future__ import annotations

from dataclasses import dataclass

from .conegeom import (
    ConeSpace,
    TildeClass,
    base_degree,
    dim_mor_tilde,
    e_intersection,
    has_lines,
    is_nonempty,
)
from .errors import InputError, InternalError
from .rootsys import grade_key


@dataclass(frozen=True)
class EffectiveClass:
    """An effective base curve class: nonnegative coordinates on the Picard generators."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(c < 0 for c in self.coeffs):
            raise InputError(f"effective class must have nonnegative coordinates, got {self.coeffs}")


@dataclass(frozen=True)
class ComponentDescriptor:
    """One irreducible component: base class, degrees, vertex multiplicity, dimension."""

    beta: EffectiveClass
    alpha_prime: int
    vertex_multiplicity: int
    tilde: TildeClass
    dimension: int


@dataclass(frozen=True)
class ComponentReport:
    """The classified component list for one cone and total degree."""

    cone: ConeSpace
    total_degree: int
    case: str  # "lines" | "no_lines"
    components: tuple[ComponentDescriptor, ...]
    equidimensional: bool


@dataclass(frozen=True)
class EquidimReport:
    """Equidimensionality, computed directly, next to the closed-form criterion.

    closed_form is the degree-independent criterion chern == 2*ell in
    the lines case and chern == ell in the no-lines case; agree records
    whether it matches the direct computation at this degree.
    """

    equidimensional: bool
    closed_form: bool
    agree: bool
    case: str
    dimensions: tuple[int, ...]


def ne(cone: ConeSpace, degree: int) -> list[EffectiveClass]:
    """Effective base classes of embedding degree exactly `degree`.

    All nonnegative integer vectors v with <v, ell> = degree, ordered by
    ascending coordinate sum and then by decreasing leading coordinates.
    ne(0) = {0}.
    """
    if degree < 0:
        raise InputError(f"degree must be >= 0, got {degree}")
    sols = sorted(_weighted_solutions(cone.ell, degree), key=grade_key)
    return [EffectiveClass(v) for v in sols]


def _weighted_solutions(weights: tuple[int, ...], target: int):
    if not weights:
        if target == 0:
            yield ()
        return
    head = weights[0]
    rest = weights[1:]
    for k in range(target // head + 1):
        for tail in _weighted_solutions(rest, target - k * head):
            yield (k, *tail)


def total_degree(cone: ConeSpace, beta: EffectiveClass) -> int:
    """Embedding degree <beta, ell> of an effective base class."""
    return base_degree(cone, beta.coeffs)


def classify(cone: ConeSpace, degree: int) -> ComponentReport:
    """Classify the irreducible components of the degree-`degree` curve space.

    Each descriptor carries the lift of its generic curve to the
    resolution: relative degree (n+1)*multiplicity + n*d', so the
    exceptional intersection equals the vertex multiplicity.  Every lift
    is checked to be nonempty and to reproduce the stated dimension via
    the morphism-space formula on the resolution.
    """
    if degree < 0:
        raise InputError(f"degree must be >= 0, got {degree}")
    lines = has_lines(cone)
    if lines:
        strata = [(degree, 0)]
    else:
        strata = [(dp, degree - dp) for dp in range(degree, -1, -1)]
    n = cone.vertex_dim
    chern = cone.parabolic.chern_degrees
    descriptors: list[ComponentDescriptor] = []
    for alpha_prime, mult in strata:
        for beta in ne(cone, alpha_prime):
            tilde = TildeClass(beta.coeffs, (n + 1) * mult + n * alpha_prime)
            if e_intersection(cone, tilde) != mult or not is_nonempty(cone, tilde):
                raise InternalError(f"constructed lift {tilde} is not a valid nonempty class")
            dim = (
                sum(b * (c - l) for b, c, l in zip(beta.coeffs, chern, cone.ell))
                + (n + 1) * degree
                + cone.dim_x
            )
            if dim != dim_mor_tilde(cone, tilde):
                raise InternalError(
                    f"component dimension {dim} disagrees with the lifted morphism space for {tilde}"
                )
            descriptors.append(ComponentDescriptor(beta, alpha_prime, mult, tilde, dim))
    dims = {d.dimension for d in descriptors}
    return ComponentReport(
        cone,
        degree,
        "lines" if lines else "no_lines",
        tuple(descriptors),
        len(dims) <= 1,
    )


def count_components(cone: ConeSpace, degree: int) -> int:
    """Number of irreducible components, from the index-set cardinalities alone."""
    if degree < 0:
        raise InputError(f"degree must be >= 0, got {degree}")
    if has_lines(cone):
        return len(ne(cone, degree))
    return sum(len(ne(cone, dp)) for dp in range(degree + 1))


def is_equidimensional(cone: ConeSpace, degree: int) -> EquidimReport:
    """Whether all components at this degree share one dimension, with diagnostics.

    The answer is computed directly from the classified dimensions; the
    closed-form criterion (chern == 2*ell with lines, chern == ell
    without) is reported alongside, never substituted for the
    computation.
    """
    report = classify(cone, degree)
    chern = cone.parabolic.chern_degrees
    if report.case == "lines":
        closed_form = all(c == 2 * l for c, l in zip(chern, cone.ell))
    else:
        closed_form = all(c == l for c, l in zip(chern, cone.ell))
    dims = tuple(d.dimension for d in report.components)
    return EquidimReport(
        report.equidimensional,
        closed_form,
        report.equidimensional == closed_form,
        report.case,
        dims,
    )
