"""Exact root-system kernel for the simple Lie types A through G.

Conventions, fixed package-wide:

* Bourbaki numbering of the simple roots.  Node labels per series::

      A_n   1 - 2 - ... - n
      B_n   1 - 2 - ... - (n-1) = n     double bond, alpha_n short
      C_n   1 - 2 - ... - (n-1) = n     double bond, alpha_n long
      D_n   1 - ... - (n-2) - (n-1)     with n also attached to n-2
      E_n   1 - 3 - 4 - 5 - 6 [- 7 [- 8]],  2 attached to 4
      F_4   1 - 2 = 3 - 4               double bond, alpha_3 and alpha_4 short
      G_2   1 = 2                       triple bond, alpha_1 short

* A root is a tuple of integer coefficients on the simple roots.
* A weight is a tuple of integer coefficients on the fundamental
  weights, i.e. the tuple of values <alpha_i^vee, weight>.
* cartan[i][j] = <alpha_i^vee, alpha_j>.  The Cartan matrix is the only
  bridge between the two coordinate systems.
* Simple-root indices in the public API are 1-based, matching the
  Bourbaki node labels above.

Everything is exact integer arithmetic; nothing here is floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm, gcd

from .errors import InputError, InternalError

Root = tuple[int, ...]
Weight = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

SERIES = "ABCDEFG"

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "E": 6, "F": 4, "G": 2}
_MAX_RANK = {"E": 8, "F": 4, "G": 2}

# Hard cap on generated positive roots; E8 has 120, the largest supported.
_MAX_ROOTS = 240
_MAX_HEIGHT = 64


@dataclass(frozen=True)
class CartanType:
    """A simple type: series letter plus rank, e.g. CartanType("A", 3)."""

    series: str
    rank: int

    def __post_init__(self) -> None:
        if self.series not in SERIES:
            raise InputError(f"unknown series {self.series!r}; expected one of {SERIES}")
        lo = _MIN_RANK[self.series]
        hi = _MAX_RANK.get(self.series)
        if self.rank < lo:
            raise InputError(f"rank {self.rank} too small for series {self.series} (minimum {lo})")
        if hi is not None and self.rank > hi:
            raise InputError(f"rank {self.rank} invalid for series {self.series} (maximum {hi})")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        """Parse strings like "A3" or "e6" (case-insensitive letter + decimal rank)."""
        s = text.strip()
        if len(s) < 2:
            raise InputError(f"cannot parse Cartan type {text!r}; expected e.g. 'A3'")
        series = s[0].upper()
        if series not in SERIES:
            raise InputError(f"unknown series {s[0]!r} in {text!r}; expected one of {SERIES}")
        try:
            rank = int(s[1:])
        except ValueError:
            raise InputError(f"cannot parse rank in {text!r}") from None
        return cls(series, rank)

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


@dataclass(frozen=True)
class RootSystem:
    """Cartan data of a simple type, with all derived tables precomputed.

    positive_roots are sorted by height (coordinate sum) and, within a
    height, by decreasing leading coefficients; the first `rank` entries
    are therefore the simple roots themselves.  symmetrizer is the
    minimal positive integer vector d with diag(d) * cartan symmetric.
    """

    cartan_type: CartanType
    cartan: Matrix
    positive_roots: tuple[Root, ...]
    symmetrizer: tuple[int, ...]

    @property
    def rank(self) -> int:
        return self.cartan_type.rank


def grade_key(vec: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Sort key for the package-wide ordering of integer vectors.

    Ascending coordinate sum; within a sum, larger leading coordinates
    first.  E.g. (1,0) < (0,1) < (2,0) < (1,1) < (0,2).
    """
    return (sum(vec), tuple(-c for c in vec))


def cartan_matrix(ctype: CartanType) -> Matrix:
    """Cartan matrix in Bourbaki numbering, C[i][j] = <alpha_i^vee, alpha_j>."""
    n = ctype.rank
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i: int, j: int, cij: int = -1, cji: int = -1) -> None:
        # 1-based node labels; cij sits in row i.
        C[i - 1][j - 1] = cij
        C[j - 1][i - 1] = cji

    s = ctype.series
    if s == "A":
        for i in range(1, n):
            bond(i, i + 1)
    elif s == "B":
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 1, n, -1, -2)
    elif s == "C":
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 1, n, -2, -1)
    elif s == "D":
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 2, n)
    elif s == "E":
        for i, j in ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)):
            if j <= n:
                bond(i, j)
        bond(2, 4)
    elif s == "F":
        bond(1, 2)
        bond(2, 3, -1, -2)
        bond(3, 4)
    elif s == "G":
        bond(1, 2, -3, -1)
    return tuple(tuple(row) for row in C)


def _validate_cartan(C: Matrix) -> None:
    n = len(C)
    for i in range(n):
        if len(C[i]) != n:
            raise InternalError("Cartan matrix is not square")
        if C[i][i] != 2:
            raise InternalError(f"Cartan diagonal entry C[{i + 1}][{i + 1}] = {C[i][i]} != 2")
        for j in range(n):
            if i == j:
                continue
            if C[i][j] > 0:
                raise InternalError(f"positive off-diagonal Cartan entry C[{i + 1}][{j + 1}]")
            if (C[i][j] == 0) != (C[j][i] == 0):
                raise InternalError(f"Cartan zero pattern not symmetric at ({i + 1},{j + 1})")


def _symmetrizer(C: Matrix) -> tuple[int, ...]:
    """Minimal positive integers d with d_i * C[i][j] = d_j * C[j][i]."""
    n = len(C)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and C[i][j] != 0 and d[j] is None:
                d[j] = d[i] * C[i][j] / C[j][i]
                stack.append(j)
    if any(v is None for v in d):
        raise InternalError("Dynkin diagram is disconnected; not a simple type")
    vals = [v for v in d if v is not None]
    for i in range(n):
        for j in range(n):
            if vals[i] * C[i][j] != vals[j] * C[j][i]:
                raise InternalError("Cartan matrix is not symmetrizable")
    if any(v <= 0 for v in vals):
        raise InternalError("symmetrizer is not positive; invalid Cartan data")
    scale = lcm(*(v.denominator for v in vals))
    ints = [int(v * scale) for v in vals]
    g = gcd(*ints)
    return tuple(v // g for v in ints)


def _generate_positive_roots(C: Matrix) -> tuple[Root, ...]:
    """All positive roots by root-string closure from the simple roots.

    For a known root g and simple root alpha_i, let p be the number of
    consecutive steps g - alpha_i, g - 2 alpha_i, ... that stay roots;
    then g + alpha_i is a root iff p - <alpha_i^vee, g> > 0.  Working
    upward by height, every root is reached.
    """
    n = len(C)
    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots: set[Root] = set(simples)
    frontier: list[Root] = list(simples)
    height = 1
    while frontier:
        height += 1
        if height > _MAX_HEIGHT:
            raise InternalError("root generation did not terminate; invalid Cartan data")
        grown: list[Root] = []
        for g in frontier:
            for i in range(n):
                p = 0
                down = list(g)
                down[i] -= 1
                while tuple(down) in roots:
                    p += 1
                    down[i] -= 1
                pairing = sum(C[i][j] * g[j] for j in range(n))
                if p - pairing > 0:
                    up = tuple(c + (1 if j == i else 0) for j, c in enumerate(g))
                    if up not in roots:
                        roots.add(up)
                        grown.append(up)
        if len(roots) > _MAX_ROOTS:
            raise InternalError("too many positive roots generated; invalid Cartan data")
        frontier = grown
    return tuple(sorted(roots, key=grade_key))


def build_root_system(ctype: CartanType) -> RootSystem:
    """Construct the full root system of a simple type."""
    C = cartan_matrix(ctype)
    _validate_cartan(C)
    sym = _symmetrizer(C)
    roots = _generate_positive_roots(C)
    return RootSystem(ctype, C, roots, sym)


def pair(rs: RootSystem, i: int, root: Root) -> int:
    """Pairing <alpha_i^vee, root> of the i-th simple coroot (1-based) with a root."""
    if not 1 <= i <= rs.rank:
        raise InputError(f"simple-root index {i} out of range 1..{rs.rank}")
    if len(root) != rs.rank:
        raise InputError(f"root has {len(root)} coordinates, expected {rs.rank}")
    row = rs.cartan[i - 1]
    return sum(row[j] * root[j] for j in range(rs.rank))


def rho(rs: RootSystem) -> Weight:
    """Half the sum of the positive roots, as a weight: all fundamental coordinates 1."""
    return (1,) * rs.rank


def highest_root(rs: RootSystem) -> Root:
    """The unique positive root that dominates all others coordinatewise."""
    theta = max(rs.positive_roots, key=grade_key)
    for g in rs.positive_roots:
        if any(a < b for a, b in zip(theta, g)):
            raise InternalError("no coordinatewise-maximal positive root found")
    return theta


def weyl_dim(rs: RootSystem, lam: Weight) -> int:
    """Dimension of the irreducible representation with dominant highest weight lam.

    Product over positive roots of (lam + rho, gamma) / (rho, gamma),
    evaluated with the symmetrized form (alpha_i, alpha_j) =
    d_i * C[i][j], so (mu, gamma) = sum_j gamma_j * d_j * mu_j for a
    weight mu.  Numerator and denominator are accumulated as exact
    integers and divided once.
    """
    if len(lam) != rs.rank:
        raise InputError(f"weight has {len(lam)} coordinates, expected {rs.rank}")
    if any(c < 0 for c in lam):
        raise InputError(f"weight {lam} is not dominant")
    d = rs.symmetrizer
    num = 1
    den = 1
    for gamma in rs.positive_roots:
        num *= sum(g * di * (li + 1) for g, di, li in zip(gamma, d, lam))
        den *= sum(g * di for g, di in zip(gamma, d))
    if num % den:
        raise InternalError("Weyl dimension product is not an integer")
    return num // den
