"""Moment map of a symplectic representation, its differential, the
equivariance identity, and the rank-one Gaiotto Higgs field with its
characteristic (Hitchin) invariants.

The moment map is characterized by B(mu(psi), xi) = omega(rho(xi) psi, psi)
with B the trace form of the ambient matrix realization.  For the standard
representation of sp(2n) this normalization makes mu(psi) literally equal to
the matrix of v -> omega(v, psi) psi; no extra scalar is needed (checked in
the tests by an independent tensor computation).
"""

from __future__ import annotations

import math
from fractions import Fraction

from .lie import SymplecticRep
from .matrix import ExactMatrix, char_poly, inverse
from .rings import Dual


class InvalidContextError(ValueError):
    """The invariant-form Gram matrix is singular."""


class MomentContext:
    """Precomputed data for evaluating the moment map of one representation.

    Each coordinate of mu is a quadratic form psi -> (psi^T Z_k psi)/q with an
    integer matrix Z_k and common denominator q, obtained by solving against
    the Gram matrix of B once.  ``b_scale`` rescales B (the map rescales
    inversely; equivariance is unaffected).
    """

    def __init__(self, rep: SymplecticRep, b_scale=1):
        if b_scale == 0:
            raise InvalidContextError("B-scale must be nonzero")
        self.rep = rep
        gram = rep.algebra.trace_gram().scale(b_scale)
        self.gram_B = gram
        try:
            ginv = inverse(gram)
        except ValueError as exc:
            raise InvalidContextError("Gram matrix of B is singular") from exc
        D = rep.algebra.dim
        # rhs_j(psi) = omega(rho(X_j) psi, psi) = psi^T A_j psi, A_j = rho_j^T Omega
        A = [R.transpose() * rep.omega for R in rep.rho]
        qs = []
        for k in range(D):
            rows = []
            for r in range(rep.dimV):
                row = []
                for c in range(rep.dimV):
                    acc = Fraction(0)
                    for j in range(D):
                        g = ginv.entries[k][j]
                        if g:
                            acc += Fraction(g) * Fraction(A[j].entries[r][c])
                    row.append(acc)
                rows.append(row)
            qs.append(rows)
        q = 1
        for rows in qs:
            for row in rows:
                for x in row:
                    q = q * x.denominator // math.gcd(q, x.denominator)
        self._q_inv = Fraction(1, q)
        self._Z = [
            ExactMatrix([[int(x * q) for x in row] for row in rows]) for rows in qs
        ]

    # -- evaluation -----------------------------------------------------

    def quadratic_coords(self, psi, psidot=None):
        """Coordinates of mu(psi), or of the symmetric bilinear evaluation
        when a second argument is given (used only by tests as an oracle)."""
        other = psi if psidot is None else psidot
        out = []
        for Z in self._Z:
            w = Z.apply(other)
            acc = 0
            started = False
            for a, b in zip(psi, w):
                if _iszero(a) or _iszero(b):
                    continue
                term = a * b
                acc = term if not started else acc + term
                started = True
            if psidot is None:
                out.append(acc * self._q_inv)
            else:
                wr = Z.apply(psi)
                acc2 = 0
                for a, b in zip(other, wr):
                    if _iszero(a) or _iszero(b):
                        continue
                    acc2 = acc2 + a * b
                out.append((acc + acc2) * self._q_inv)
        return tuple(out)


def _iszero(x):
    if isinstance(x, (int, Fraction)):
        return x == 0
    if isinstance(x, Dual):
        return _iszero(x.re) and _iszero(x.eps)
    return x.is_zero


def moment_map(ctx: MomentContext, psi):
    """Coordinates of mu(psi) in the algebra basis, for psi over any
    commutative coefficient ring (rationals, polynomials, duals)."""
    if len(psi) != ctx.rep.dimV:
        raise ValueError("spinor has wrong length")
    return ctx.quadratic_coords(psi)


def moment_matrix(ctx: MomentContext, psi) -> ExactMatrix:
    """mu(psi) expanded as an ambient algebra matrix."""
    return ctx.rep.algebra.from_coordinates(moment_map(ctx, psi))


def moment_differential(ctx: MomentContext, psi, psidot):
    """Coordinates of the derivative of mu at psi in direction psidot,
    computed over the dual numbers R[eps]/(eps^2): the eps-linear part of
    mu(psi + eps psidot)."""
    if len(psi) != ctx.rep.dimV or len(psidot) != ctx.rep.dimV:
        raise ValueError("spinor has wrong length")
    duals = [Dual(a, b) for a, b in zip(psi, psidot)]
    coords = ctx.quadratic_coords(duals)
    return tuple(c.eps if isinstance(c, Dual) else c * 0 for c in coords)


def equivariance_check(ctx: MomentContext, psi, xi_coords):
    """Exactness of dmu_psi(rho(xi) psi) = [xi, mu(psi)].

    Returns (passed, residual matrix); the residual is identically zero for
    every genuine symplectic representation.
    """
    rep = ctx.rep
    rho_xi = rep.rho_of(xi_coords)
    psidot = rho_xi.apply(psi)
    lhs = rep.algebra.from_coordinates(moment_differential(ctx, psi, psidot))
    xi_mat = rep.algebra.from_coordinates(xi_coords)
    mu_mat = rep.algebra.from_coordinates(moment_map(ctx, psi))
    rhs = xi_mat * mu_mat - mu_mat * xi_mat
    residual = lhs - rhs
    return residual.is_zero, residual


def gaiotto_field(omega: ExactMatrix, psi) -> ExactMatrix:
    """Matrix of v -> omega(v, psi) psi, the rank-one square-zero Higgs field
    attached to a spinor of the standard symplectic space."""
    if omega.rows != len(psi):
        raise ValueError("spinor has wrong length")
    w = omega.apply(psi)  # omega(e_j, psi) = (Omega psi)_j
    return ExactMatrix([[psi[i] * w[j] for j in range(len(psi))] for i in range(len(psi))])


def hitchin_invariants(Phi: ExactMatrix):
    """All characteristic coefficients of the Higgs field, ascending from
    lambda^0.  Membership in the nilpotent cone is the vanishing of every
    non-leading coefficient; for sp the odd ones vanish identically anyway."""
    return char_poly(Phi)


def is_nilpotent_cone_member(Phi: ExactMatrix) -> bool:
    cs = hitchin_invariants(Phi)
    return all(_iszero(c) if not isinstance(c, (int, Fraction)) else c == 0 for c in cs[:-1])
