"""Standard parabolic subgroups and the geometry of the base variety G/P.

A parabolic is specified by its set of marked simple roots alpha_p (the
nodes crossed in the marked Dynkin diagram): these are exactly the
simple roots whose negative root space is excluded from p.  The marked
set indexes the Picard lattice of G/P.  The nilradical consists of the
positive roots whose support meets the marked set; its size is
dim(G/P), and pairing the i-th marked coroot with the sum of nilradical
roots gives the degree c_i of the anticanonical class on the dual curve
class (the Fano index data of G/P).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .rootsys import Root, RootSystem, Weight, pair


@dataclass(frozen=True)
class ParabolicData:
    """A marked Dynkin diagram and the derived base-variety data.

    alpha_p is the sorted tuple of marked node labels (1-based);
    chern_degrees is aligned with alpha_p.
    """

    rs: RootSystem
    alpha_p: tuple[int, ...]
    nilradical: tuple[Root, ...]
    chern_degrees: tuple[int, ...]
    dim_gp: int


def build_parabolic(rs: RootSystem, alpha_p) -> ParabolicData:
    """Build parabolic data from a set of 1-based marked node labels."""
    marked = tuple(sorted(set(alpha_p)))
    if not marked:
        raise InputError("alpha(p) must be nonempty: the base variety must have positive dimension")
    for i in marked:
        if not 1 <= i <= rs.rank:
            raise InputError(f"parabolic index {i} out of range 1..{rs.rank}")
    nil = tuple(g for g in rs.positive_roots if any(g[i - 1] for i in marked))
    chern = tuple(sum(pair(rs, i, g) for g in nil) for i in marked)
    return ParabolicData(rs, marked, nil, chern, len(nil))


def kappa(p: ParabolicData) -> Weight:
    """The weight pairing to 2 with every marked coroot and 0 with the rest.

    For the full flag variety (all nodes marked) this is 2*rho.  It is
    the sum of anticanonical classes of the Picard factors and enters
    the lines/no-lines dichotomy; the per-node anticanonical degrees of
    G/P itself are chern_degrees, which exceed 2 in general.
    """
    return tuple(2 if i in p.alpha_p else 0 for i in range(1, p.rs.rank + 1))


def minimal_ample(p: ParabolicData) -> Weight:
    """The smallest ample weight on the base: 1 on every marked node, 0 elsewhere."""
    return tuple(1 if i in p.alpha_p else 0 for i in range(1, p.rs.rank + 1))


def validate_ample(p: ParabolicData, lam: Weight) -> tuple[int, ...]:
    """Check that lam is ample and supported on the facet of the parabolic.

    Requires coordinate >= 1 on every marked node and = 0 off the marked
    set.  Returns the restriction of lam to alpha_p (the degree vector
    of the embedding on the Picard generators).
    """
    if len(lam) != p.rs.rank:
        raise InputError(f"lambda has {len(lam)} coordinates, expected {p.rs.rank}")
    marked = set(p.alpha_p)
    for i in range(1, p.rs.rank + 1):
        v = lam[i - 1]
        if i in marked and v < 1:
            raise InputError(f"lambda[{i}] = {v}: coordinates on alpha(p) must be >= 1 for an ample class")
        if i not in marked and v != 0:
            raise InputError(f"lambda[{i}] = {v}: coordinates off alpha(p) must be 0")
    return tuple(lam[i - 1] for i in p.alpha_p)


def parse_alpha_p(text: str) -> tuple[int, ...]:
    """Parse comma-separated 1-based node labels, e.g. "2" or "1,3"."""
    s = text.strip()
    if not s:
        raise InputError("empty parabolic index list")
    out = []
    for part in s.split(","):
        try:
            out.append(int(part))
        except ValueError:
            raise InputError(f"bad parabolic index {part.strip()!r}") from None
    return tuple(out)


def parse_lambda(text: str, rank: int) -> Weight:
    """Parse comma-separated full-rank weight coordinates, e.g. "1,0,2"."""
    parts = text.strip().split(",")
    coords = []
    for part in parts:
        try:
            coords.append(int(part))
        except ValueError:
            raise InputError(f"bad lambda coordinate {part.strip()!r}") from None
    if len(coords) != rank:
        raise InputError(f"lambda has {len(coords)} coordinates, expected {rank}")
    return tuple(coords)
