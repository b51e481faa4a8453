"""Formal-disc constructions: symplectic basis completion over truncated
power series, the pole-modification family h_t = I + t z^{-m} N, and the
exact gluing identities for the modified spinor and its rank-one Higgs field.

The modification family is exactly Laurent-polynomial, so the whole gluing
suite runs with zero truncation error; truncation appears only in the basis
completion, whose output is certified mod z^prec.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .matrix import ExactMatrix, in_sp, rank, standard_omega
from .moment import gaiotto_field
from .rings import LaurentPoly, MultiPoly

_Z = "z"
_T = "t"


class PrimitivityError(ValueError):
    """The series vector vanishes at z = 0."""


def poly_mod(p: MultiPoly, prec: int) -> MultiPoly:
    """Truncate a polynomial in z below z^prec."""
    if _Z not in p.vars:
        return p
    i = p.vars.index(_Z)
    return MultiPoly(p.vars, {e: c for e, c in p.terms.items() if e[i] < prec})


def series_inverse(p: MultiPoly, prec: int) -> MultiPoly:
    """Inverse of a unit of Q[[z]]/(z^prec); the constant term must be nonzero."""
    coeffs = {k: c.constant_value() for k, c in p.coeffs_in(_Z).items()}
    u0 = coeffs.get(0, Fraction(0))
    if u0 == 0:
        raise ValueError("series has no constant term; not a unit")
    inv = {0: Fraction(1) / u0}
    for k in range(1, prec):
        s = Fraction(0)
        for j in range(1, k + 1):
            if j in coeffs and (k - j) in inv:
                s += coeffs[j] * inv[k - j]
        inv[k] = -s / u0
    return MultiPoly((_Z,), {(k,): c for k, c in inv.items() if c != 0})


@dataclass(frozen=True)
class TruncatedSeriesVector:
    """Vector of polynomials in z, with identities asserted mod z^precision."""

    entries: tuple
    precision: int

    def __post_init__(self):
        if self.precision < 1:
            raise ValueError("precision must be >= 1")
        object.__setattr__(
            self,
            "entries",
            tuple(e if isinstance(e, MultiPoly) else MultiPoly.const(e) for e in self.entries),
        )

    @property
    def dim(self) -> int:
        return len(self.entries)

    def constant_terms(self):
        return tuple(p.coeff({_Z: 0}) for p in self.entries)

    @property
    def is_primitive(self) -> bool:
        return any(c != 0 for c in self.constant_terms())


def _omega_pair(omega: ExactMatrix, a, b, prec: int) -> MultiPoly:
    w = omega.apply(b)
    acc = MultiPoly.const(0)
    for x, y in zip(a, w):
        if (isinstance(y, int) and y == 0) or x.is_zero:
            continue
        acc = acc + x * y
    return poly_mod(acc, prec)


def symplectic_complete(v: TruncatedSeriesVector, prec: int | None = None) -> ExactMatrix:
    """Complete a primitive series vector to a symplectic basis mod z^prec.

    Returns S with first column v and S^T Omega S = Omega mod z^prec in the
    interleaved frame; any valid completion is acceptable, the postconditions
    are what get checked.
    """
    prec = v.precision if prec is None else prec
    if prec < 1:
        raise ValueError("precision must be >= 1")
    if not v.is_primitive:
        raise PrimitivityError("vector vanishes at z = 0")
    dim = v.dim
    if dim % 2:
        raise ValueError("ambient dimension must be even")
    omega = standard_omega(dim // 2)

    remaining = []
    for j in range(dim):
        e = [MultiPoly.const(1 if i == j else 0) for i in range(dim)]
        remaining.append(e)
    pairs = []
    current = [poly_mod(p, prec) for p in v.entries]
    while True:
        partner = None
        for w in remaining:
            pairing = _omega_pair(omega, current, w, prec)
            if pairing.coeff({_Z: 0}) != 0:
                partner = w
                break
        if partner is None:
            raise ValueError("no unit pairing partner; form degenerate mod z")
        inv = series_inverse(_omega_pair(omega, current, partner, prec), prec)
        wnorm = [poly_mod(p * inv, prec) for p in partner]
        pairs.append((current, wnorm))
        if 2 * len(pairs) == dim:
            break
        projected = []
        for x in remaining:
            cx_w = _omega_pair(omega, x, wnorm, prec)
            cx_v = _omega_pair(omega, x, current, prec)
            proj = [
                poly_mod(xp - cx_w * vp + cx_v * wp, prec)
                for xp, vp, wp in zip(x, current, wnorm)
            ]
            projected.append(proj)
        # keep a subset whose constant terms are independent
        chosen = []
        const_rows = []
        for p in projected:
            row = [q.coeff({_Z: 0}) for q in p]
            cand = ExactMatrix(const_rows + [row], cols=dim)
            if rank(cand) == len(const_rows) + 1:
                chosen.append(p)
                const_rows.append(row)
            if len(chosen) == dim - 2 * len(pairs):
                break
        if len(chosen) != dim - 2 * len(pairs):
            raise ValueError("projection lost rank mod z")
        remaining = chosen
        current = remaining.pop(0)
    cols = []
    for a, b in pairs:
        cols.append(a)
        cols.append(b)
    S = ExactMatrix(cols, cols=dim).transpose()
    assert verify_completion(S, prec), "completion postcondition failed"
    return S


def verify_completion(S: ExactMatrix, prec: int) -> bool:
    """S^T Omega S = Omega mod z^prec, and S invertible over the truncated ring."""
    n2 = S.rows
    omega = standard_omega(n2 // 2)
    prod = (S.transpose() * omega * S - omega).map_entries(lambda p: poly_mod(_as_zpoly(p), prec))
    if not prod.is_zero:
        return False
    const = ExactMatrix(
        [[_as_zpoly(x).coeff({_Z: 0}) for x in row] for row in S.entries]
    )
    return rank(const) == n2


def _as_zpoly(x) -> MultiPoly:
    return x if isinstance(x, MultiPoly) else MultiPoly.const(x)


# -- the pole-modification family -----------------------------------------


def smoothing_nilpotent(n: int) -> ExactMatrix:
    """N with N e1 = f1 and everything else killed, in the interleaved frame.
    Lies in sp(2n) and squares to zero."""
    rows = [[0] * (2 * n) for _ in range(2 * n)]
    rows[1][0] = 1
    N = ExactMatrix(rows)
    assert (N * N).is_zero and in_sp(N)
    return N


@dataclass(frozen=True)
class HeckeFamily:
    n: int
    m: int
    N: ExactMatrix
    h_t: ExactMatrix      # over Laurent-in-z, polynomial-in-t coefficients
    h_inv: ExactMatrix    # I - t z^{-m} N, verified inverse

    def omega_laurent(self) -> ExactMatrix:
        return standard_omega(self.n).map_entries(lambda x: LaurentPoly.const(_Z, x))

    def at_t_zero(self) -> ExactMatrix:
        return self.h_t.map_entries(lambda p: p.substitute_coeff_var(_T, 0))


def _family_matrix(N: ExactMatrix, m: int, sign: int) -> ExactMatrix:
    t = MultiPoly.var(_T)
    dim = N.rows
    rows = []
    for i in range(dim):
        row = []
        for j in range(dim):
            coeffs = {}
            if i == j:
                coeffs[0] = MultiPoly.const(1)
            nij = N.entries[i][j]
            if nij:
                coeffs[-m] = coeffs.get(-m, MultiPoly.const(0)) + sign * nij * t
            row.append(LaurentPoly(_Z, coeffs))
        rows.append(row)
    return ExactMatrix(rows)


def hecke_family(n: int, m: int, nilpotent: ExactMatrix | None = None) -> HeckeFamily:
    """Build h_t = I + t z^{-m} N and verify, with zero residual and no
    truncation, that it is symplectic and that I - t z^{-m} N inverts it."""
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    N = smoothing_nilpotent(n) if nilpotent is None else nilpotent
    if not (N * N).is_zero:
        raise ValueError("modification matrix must square to zero")
    h_t = _family_matrix(N, m, +1)
    h_inv = _family_matrix(N, m, -1)
    fam = HeckeFamily(n, m, N, h_t, h_inv)
    ident = ExactMatrix.identity(2 * n).map_entries(lambda x: LaurentPoly.const(_Z, x))
    assert fam.h_t * fam.h_inv == ident
    return fam


def verify_symplectic_family(fam: HeckeFamily) -> bool:
    """The exact Laurent-polynomial identity h_t^T Omega h_t = Omega."""
    omega = fam.omega_laurent()
    return fam.h_t.transpose() * omega * fam.h_t == omega


@dataclass(frozen=True)
class GlueReport:
    spinor_regular: bool
    spinor_nonzero_at_origin: bool
    higgs_glues: bool
    higgs_regular: bool

    @property
    def passed(self) -> bool:
        return (
            self.spinor_regular
            and self.spinor_nonzero_at_origin
            and self.higgs_glues
            and self.higgs_regular
        )


def _lz(x) -> LaurentPoly:
    return x if isinstance(x, LaurentPoly) else LaurentPoly(_Z, {0: x})


def modified_spinor(fam: HeckeFamily):
    """The disc-side spinor z^m e1 and its image under h_t."""
    psi_u = [
        LaurentPoly(_Z, {fam.m: MultiPoly.const(1)}) if i == 0 else LaurentPoly(_Z, {})
        for i in range(2 * fam.n)
    ]
    return psi_u, [_lz(x) for x in fam.h_t.apply(psi_u)]


def glue_check(n: int, m: int, nilpotent: ExactMatrix | None = None) -> GlueReport:
    """Disc-side consistency of the modification: the modified spinor is
    regular, does not vanish at the origin once t != 0, and conjugating the
    punctured-disc Higgs field matches the Higgs field of the modified
    spinor as an exact Laurent identity."""
    fam = hecke_family(n, m, nilpotent=nilpotent)
    omega = fam.omega_laurent()
    psi_u, psi_d = modified_spinor(fam)

    regular = all(p.is_zero or p.is_regular for p in psi_d)
    at_zero = [p.coefficient(0) for p in psi_d]  # entries are polynomials in t
    nonzero_at_origin = any(not c.is_zero for c in at_zero)

    phi_u = gaiotto_field(omega, psi_u).map_entries(_lz)
    phi_d = gaiotto_field(omega, psi_d).map_entries(_lz)
    glues = fam.h_t * phi_u * fam.h_inv == phi_d
    phi_regular = all(x.is_zero or x.is_regular for row in phi_d.entries for x in row)
    return GlueReport(regular, nonzero_at_origin, glues, phi_regular)
