"""Polynomial section model for spinors and the induced map on sections.

Sections are V-valued polynomials of degree < s in one abstract variable x;
the differential of the moment map acts on them pointwise-polynomially and is
assembled into an exact matrix whose kernel decides injectivity.  Outputs are
algebra-valued polynomials of degree <= 2s-2, stored with 2s-1 coefficient
slots, so no truncation ever occurs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lie import SymplecticRep
from .matrix import ExactMatrix, ShapeError, mat_rank_kernel
from .moment import MomentContext, moment_differential, moment_map
from .rings import MultiPoly

_X = "x"


class SectionSpace:
    """Spinor sections of bounded degree for a fixed representation."""

    def __init__(self, rep: SymplecticRep, degree_bound: int):
        if degree_bound < 1:
            raise ValueError("degree bound must be >= 1")
        self.rep = rep
        self.degree_bound = degree_bound
        self.dim = rep.dimV * degree_bound
        self.ctx = MomentContext(rep)

    def section_polys(self, coords):
        """Coordinate vector -> list of dimV polynomials in x."""
        if len(coords) != self.dim:
            raise ShapeError("section coordinate length mismatch")
        m = self.rep.dimV
        polys = []
        for j in range(m):
            terms = {}
            for k in range(self.degree_bound):
                c = coords[k * m + j]
                if c:
                    terms[(k,)] = c
            polys.append(MultiPoly((_X,), terms))
        return polys

    def coords_from_polys(self, polys):
        """Inverse of section_polys; rejects degrees >= the bound."""
        if len(polys) != self.rep.dimV:
            raise ShapeError("wrong number of component polynomials")
        m = self.rep.dimV
        out = [0] * self.dim
        for j, p in enumerate(polys):
            p = p if isinstance(p, MultiPoly) else MultiPoly.const(p)
            if p.degree_in(_X) >= self.degree_bound:
                raise ShapeError("section degree exceeds the bound")
            for k, c in p.coeffs_in(_X).items():
                out[k * m + j] = c.constant_value()
        return tuple(out)

    def evaluate(self, coords, x0):
        """Evaluate a section at a rational point, yielding a spinor vector."""
        polys = self.section_polys(coords)
        return tuple(p.substitute({_X: x0}).constant_value() for p in polys)


@dataclass(frozen=True)
class PetriMatrix:
    space: SectionSpace
    base_psi: tuple
    matrix: ExactMatrix


def petri_matrix(space: SectionSpace, psi) -> PetriMatrix:
    """Matrix of psidot -> (x -> dmu at psi(x) of psidot(x)) on section spaces.

    Rows are indexed by (output degree, algebra basis index) with degree
    major; columns by the section basis e_j x^k, degree major as well.
    """
    psi = tuple(psi)
    psi_polys = space.section_polys(psi)
    s = space.degree_bound
    dim_g = space.rep.algebra.dim
    m = space.rep.dimV
    out_slots = 2 * s - 1
    cols = []
    for k in range(s):
        for j in range(m):
            dot = [MultiPoly.const(0)] * m
            dot[j] = MultiPoly((_X,), {(k,): 1})
            d = moment_differential(space.ctx, psi_polys, dot)
            col = [0] * (out_slots * dim_g)
            for i, poly in enumerate(d):
                p = poly if isinstance(poly, MultiPoly) else MultiPoly.const(poly)
                for deg, cpoly in p.coeffs_in(_X).items():
                    if deg >= out_slots:
                        raise ShapeError("output degree exceeded 2s-2")
                    col[deg * dim_g + i] = cpoly.constant_value()
            cols.append(col)
    return PetriMatrix(space, psi, ExactMatrix(cols).transpose())


def petri_kernel(space: SectionSpace, psi):
    """Exact kernel basis of the section-level differential at psi; empty
    means the map is injective."""
    _, kernel = mat_rank_kernel(petri_matrix(space, psi).matrix)
    return kernel


def petri_apply_pointwise(space: SectionSpace, psi, psidot, x0):
    """Evaluate sections first, then take dmu at the point (test oracle)."""
    p = space.evaluate(psi, x0)
    pd = space.evaluate(psidot, x0)
    return moment_differential(space.ctx, p, pd)


def dual_pair_slots(rep: SymplecticRep):
    """The (W, W*) coordinate ranges of a representation consisting of one
    dual-pair summand."""
    if len(rep.summands) != 1 or rep.summands[0].kind != "dual-pair":
        raise ValueError("representation is not of dual-pair type")
    s = rep.summands[0]
    return range(s.lo, s.mid), range(s.mid, s.hi)


def scale_dual_pair(rep: SymplecticRep, psi, t, dual_exponent: int = -1):
    """(u, delta) -> (t u, t^e delta) with e = -1 for the moment-invariant
    scaling action."""
    if t == 0:
        raise ValueError("scaling parameter must be nonzero")
    w, ws = dual_pair_slots(rep)
    out = list(psi)
    tf = Fraction(t)
    te = tf ** dual_exponent
    for i in w:
        out[i] = psi[i] * tf
    for i in ws:
        out[i] = psi[i] * te
    return out


def scalar_action_invariance(rep: SymplecticRep, psi, t, dual_exponent: int = -1) -> bool:
    """Check mu(t u, t^e delta) == mu(u, delta) exactly; with the genuine
    action (e = -1) this always passes, which is exactly why the section-level
    map acquires the kernel direction (u, -delta)."""
    ctx = MomentContext(rep)
    scaled = scale_dual_pair(rep, psi, t, dual_exponent)
    return moment_map(ctx, scaled) == moment_map(ctx, psi)


def dual_pair_kernel_direction(rep: SymplecticRep, space: SectionSpace, psi):
    """Section coordinates of (u, -delta) for a dual-pair spinor section."""
    w, ws = dual_pair_slots(rep)
    m = rep.dimV
    out = list(psi)
    for k in range(space.degree_bound):
        for i in ws:
            out[k * m + i] = -out[k * m + i]
    return tuple(out)
