"""Exact matrices over the coefficient tower, with rank/kernel/solve over a
field, a division-free characteristic polynomial, and deterministic random
symplectic matrices built from transvections.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .rings import FracElem, LaurentPoly, MultiPoly, UnsupportedRingError, _is_rat


class ShapeError(ValueError):
    """Dimension mismatch in a matrix operation."""


def _is_zero_entry(x) -> bool:
    if isinstance(x, (int, Fraction)):
        return x == 0
    return x.is_zero


class ExactMatrix:
    """Immutable rectangular matrix with entries in any exact ring of this
    package (int/Fraction, MultiPoly, FracElem, LaurentPoly, Dual).
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols: int | None = None):
        rows = tuple(tuple(r) for r in entries)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ShapeError("ragged rows")
        ncols = len(rows[0]) if rows else (cols or 0)
        if rows and cols is not None and cols != ncols:
            raise ShapeError("explicit column count disagrees with rows")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, *a):
        raise AttributeError("ExactMatrix is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, r: int, c: int) -> "ExactMatrix":
        return cls([[0] * c for _ in range(r)], cols=c)

    @classmethod
    def diag(cls, values) -> "ExactMatrix":
        vals = list(values)
        n = len(vals)
        return cls([[vals[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def column(cls, vec) -> "ExactMatrix":
        return cls([[v] for v in vec])

    @classmethod
    def from_blocks(cls, blocks) -> "ExactMatrix":
        """Assemble from a 2D grid of ExactMatrix blocks."""
        out = []
        width = sum(b.cols for b in blocks[0])
        for brow in blocks:
            h = brow[0].rows
            if any(b.rows != h for b in brow):
                raise ShapeError("inconsistent block heights")
            if sum(b.cols for b in brow) != width:
                raise ShapeError("inconsistent block widths")
            for i in range(h):
                out.append([x for b in brow for x in b.entries[i]])
        return cls(out, cols=width)

    # -- access ----------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def col(self, j):
        return tuple(r[j] for r in self.entries)

    def submatrix(self, rows, cols) -> "ExactMatrix":
        cols = list(cols)
        return ExactMatrix(
            [[self.entries[i][j] for j in cols] for i in rows], cols=len(cols)
        )

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("addition shape mismatch")
        return ExactMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            cols=self.cols,
        )

    def __sub__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("subtraction shape mismatch")
        return ExactMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            cols=self.cols,
        )

    def __neg__(self):
        return ExactMatrix([[-x for x in r] for r in self.entries], cols=self.cols)

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows:
                raise ShapeError("multiplication shape mismatch")
            if other.rows:
                ocols = list(zip(*other.entries))
            else:
                ocols = [()] * other.cols
            out = []
            for r in self.entries:
                orow = []
                for c in ocols:
                    acc = 0
                    for a, b in zip(r, c):
                        if _is_zero_entry(a) or _is_zero_entry(b):
                            continue
                        acc = acc + a * b if not (isinstance(acc, int) and acc == 0) else a * b
                    orow.append(acc)
                out.append(orow)
            return ExactMatrix(out, cols=other.cols)
        return NotImplemented

    def scale(self, c) -> "ExactMatrix":
        return ExactMatrix([[c * x for x in r] for r in self.entries], cols=self.cols)

    def apply(self, vec):
        """Matrix-vector product, returning a tuple."""
        if len(vec) != self.cols:
            raise ShapeError("matrix-vector shape mismatch")
        out = []
        for r in self.entries:
            acc = 0
            for a, b in zip(r, vec):
                if _is_zero_entry(a) or _is_zero_entry(b):
                    continue
                acc = acc + a * b if not (isinstance(acc, int) and acc == 0) else a * b
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "ExactMatrix":
        if self.rows == 0:
            return ExactMatrix([() for _ in range(self.cols)], cols=0)
        return ExactMatrix(list(zip(*self.entries)), cols=self.rows)

    def map_entries(self, fn) -> "ExactMatrix":
        return ExactMatrix([[fn(x) for x in r] for r in self.entries], cols=self.cols)

    @property
    def is_zero(self) -> bool:
        return all(_is_zero_entry(x) for r in self.entries for x in r)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return all(
            a == b for r1, r2 in zip(self.entries, other.entries) for a, b in zip(r1, r2)
        )

    def __hash__(self):
        return hash((self.rows, self.cols))

    def __repr__(self):
        return "ExactMatrix([\n" + "\n".join(
            "  [" + ", ".join(repr(x) for x in r) + "]," for r in self.entries
        ) + "\n])"


# -- field promotion for elimination ------------------------------------


def _as_field(x):
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Fraction):
        return x
    if isinstance(x, MultiPoly):
        return FracElem(x)
    if isinstance(x, FracElem):
        return x
    raise UnsupportedRingError(
        f"entries of type {type(x).__name__} do not form a supported field"
    )


def _field_rows(M: ExactMatrix):
    rows = [[_as_field(x) for x in r] for r in M.entries]
    # if any entry is a polynomial fraction, promote everything to FracElem
    if any(isinstance(x, FracElem) for r in rows for x in r):
        rows = [[x if isinstance(x, FracElem) else FracElem(x) for x in r] for r in rows]
    return rows


def _rref(rows, ncols):
    """In-place reduced row echelon form; returns pivot column list."""
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(rows)):
            if not _is_zero_entry(rows[i][c]):
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not _is_zero_entry(rows[i][c]):
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def mat_rank_kernel(M: ExactMatrix):
    """Exact rank and kernel basis of a matrix over Q or a fraction field.

    Returns ``(rank, kernel_basis)`` where each kernel vector v satisfies
    M.apply(v) == 0 and rank + len(kernel_basis) == M.cols.
    """
    rows = _field_rows(M)
    pivots = _rref(rows, M.cols)
    rank = len(pivots)
    free = [c for c in range(M.cols) if c not in pivots]
    one = (
        Fraction(1)
        if not rows or not rows[0] or isinstance(rows[0][0], Fraction)
        else FracElem(1)
    )
    zero = one - one
    kernel = []
    for fc in free:
        v = [zero] * M.cols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        kernel.append(tuple(v))
    return rank, kernel


def rank(M: ExactMatrix) -> int:
    """Rank only; uses integer fraction-free elimination when possible."""
    if all(_is_rat(x) for r in M.entries for x in r):
        return _rank_bareiss(M.entries)
    rows = _field_rows(M)
    return len(_rref(rows, M.cols))


def _rank_bareiss(entries) -> int:
    # clear denominators row by row, then fraction-free elimination over Z
    rows = []
    for r in entries:
        den = 1
        for x in r:
            if isinstance(x, Fraction):
                den = den * x.denominator // math.gcd(den, x.denominator)
        rows.append([int(x * den) if isinstance(x, Fraction) else x * den for x in r])
    m, n = len(rows), len(rows[0]) if rows else 0
    rk = 0
    prev = 1
    for c in range(n):
        pr = None
        for i in range(rk, m):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[rk], rows[pr] = rows[pr], rows[rk]
        piv = rows[rk][c]
        for i in range(rk + 1, m):
            for j in range(c + 1, n):
                rows[i][j] = (piv * rows[i][j] - rows[i][c] * rows[rk][j]) // prev
            rows[i][c] = 0
        prev = piv
        rk += 1
        if rk == m:
            break
    return rk


def solve_linear(M: ExactMatrix, b):
    """Solve M x = b exactly; returns a solution tuple or None if inconsistent.

    When the system is underdetermined, free variables are set to zero.
    """
    if len(b) != M.rows:
        raise ShapeError("right-hand side length mismatch")
    rows = _field_rows(M)
    aug = [row + [_as_field(x)] for row, x in zip(rows, b)]
    # promote the whole augmented system to FracElem if anything polynomial appears
    if any(isinstance(x, FracElem) for r in aug for x in r):
        aug = [[x if isinstance(x, FracElem) else FracElem(x) for x in r] for r in aug]
    pivots = _rref(aug, M.cols)
    for r in range(len(aug)):
        lead_zero = all(_is_zero_entry(aug[r][c]) for c in range(M.cols))
        if lead_zero and not _is_zero_entry(aug[r][M.cols]):
            return None
    one = Fraction(1) if not aug or isinstance(aug[0][0], Fraction) else FracElem(1)
    zero = one - one
    x = [zero] * M.cols
    for r, pc in enumerate(pivots):
        x[pc] = aug[r][M.cols]
    return tuple(x)


def inverse(M: ExactMatrix) -> ExactMatrix:
    """Exact inverse of a square matrix over Q or a fraction field."""
    if not M.is_square:
        raise ShapeError("inverse needs a square matrix")
    n = M.rows
    rows = _field_rows(M)
    if any(isinstance(x, FracElem) for r in rows for x in r):
        aug_id = [[FracElem(1 if i == j else 0) for j in range(n)] for i in range(n)]
    else:
        aug_id = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    aug = [r + ai for r, ai in zip(rows, aug_id)]
    pivots = _rref(aug, n)
    if len(pivots) != n:
        raise ValueError("matrix is singular")
    return ExactMatrix([r[n:] for r in aug])


def char_poly(M: ExactMatrix):
    """Coefficients of det(lambda*I - M) from lambda^0 up to lambda^dim.

    Division-free (Berkowitz), so it works over any commutative coefficient
    ring, including polynomial and Laurent rings.
    """
    if not M.is_square:
        raise ShapeError("characteristic polynomial needs a square matrix")
    n = M.rows
    if n == 0:
        return [1]
    A = M.entries
    V = [1, -A[0][0]]  # descending coefficients for the leading 1x1 block
    for r in range(2, n + 1):
        a = A[r - 1][r - 1]
        R = [A[r - 1][j] for j in range(r - 1)]
        C = [A[i][r - 1] for i in range(r - 1)]
        c = [1, -a]
        w = C
        for _ in range(r - 1):
            acc = 0
            for ri, wi in zip(R, w):
                if _is_zero_entry(ri) or _is_zero_entry(wi):
                    continue
                acc = acc + ri * wi if not (isinstance(acc, int) and acc == 0) else ri * wi
            c.append(-acc)
            w = [
                _sum_entries(A[i][j] * w[j] for j in range(r - 1))
                for i in range(r - 1)
            ]
        V = _toeplitz_apply(c, V)
    return list(reversed(V))


def _sum_entries(items):
    acc = 0
    first = True
    for x in items:
        acc = x if first else acc + x
        first = False
    return acc if not first else 0


def _toeplitz_apply(c, V):
    # lower-triangular Toeplitz product: out[i] = sum_j c[i-j] * V[j]
    out = []
    for i in range(len(V) + 1):
        acc = 0
        started = False
        for j in range(len(V)):
            k = i - j
            if 0 <= k < len(c):
                term = c[k] * V[j]
                acc = term if not started else acc + term
                started = True
        out.append(acc if started else 0)
    return out


# -- symplectic structure ------------------------------------------------


def standard_omega(n: int) -> ExactMatrix:
    """Standard symplectic form in the interleaved frame (e1,f1,...,en,fn):
    block-diagonal copies of [[0,1],[-1,0]].
    """
    m = [[0] * (2 * n) for _ in range(2 * n)]
    for k in range(n):
        m[2 * k][2 * k + 1] = 1
        m[2 * k + 1][2 * k] = -1
    return ExactMatrix(m)


def is_symplectic(M: ExactMatrix, omega: ExactMatrix | None = None) -> bool:
    if not M.is_square or M.rows % 2:
        return False
    if omega is None:
        omega = standard_omega(M.rows // 2)
    return M.transpose() * omega * M == omega


def in_sp(X: ExactMatrix, omega: ExactMatrix | None = None) -> bool:
    """Lie algebra membership: X^T Omega + Omega X = 0."""
    if omega is None:
        omega = standard_omega(X.rows // 2)
    return (X.transpose() * omega + omega * X).is_zero


def transvection(v, c, omega: ExactMatrix) -> ExactMatrix:
    """Symplectic transvection x -> x + c*omega(x,v)*v, i.e. I - c v v^T Omega.

    Exactly symplectic for every vector v and scalar c because v v^T Omega
    squares to zero (omega(v,v) = 0).
    """
    n = omega.rows
    wv = omega.apply(v)  # column Omega*v; then (v v^T Omega)_{ij} = -v_i (Omega v)_j
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            e = (1 if i == j else 0) + c * v[i] * wv[j]
            row.append(e)
        rows.append(row)
    return ExactMatrix(rows)


def random_symplectic(n: int, seed: int) -> ExactMatrix:
    """Deterministic random element of Sp(2n, Q) with exact entries.

    Built as a product of symplectic transvections (equivalently, exponentials
    of rank-one nilpotents in sp), with small integer/rational parameters.
    The defining identity M^T Omega M = Omega is asserted before returning.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    omega = standard_omega(n)
    M = ExactMatrix.identity(2 * n)
    for _ in range(rng.randint(3, 6)):
        v = [rng.randint(-2, 2) for _ in range(2 * n)]
        if all(x == 0 for x in v):
            v[rng.randrange(2 * n)] = 1
        c = rng.choice([1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2)])
        M = M * transvection(v, c, omega)
    assert M.transpose() * omega * M == omega
    return M


def random_symplectic_laurent(n: int, seed: int, var: str = "z") -> ExactMatrix:
    """Random symplectic matrix over the Laurent ring Q[var, var^-1].

    Product of transvections whose scalar parameter is c*var^k; each factor is
    exactly symplectic for the standard form, hence so is the product.
    """
    rng = random.Random(seed)
    omega = standard_omega(n)
    dim = 2 * n
    M = ExactMatrix([[LaurentPoly.const(var, 1 if i == j else 0) for j in range(dim)]
                     for i in range(dim)])
    omega_l = omega.map_entries(lambda x: LaurentPoly.const(var, x))
    for _ in range(rng.randint(2, 4)):
        v = [LaurentPoly.const(var, rng.randint(-2, 2)) for _ in range(dim)]
        if all(x.is_zero for x in v):
            v[rng.randrange(dim)] = LaurentPoly.const(var, 1)
        c = LaurentPoly.term(var, rng.randint(-2, 2), rng.choice([1, -1, 2]))
        M = M * transvection(v, c, omega_l)
    assert M.transpose() * omega_l * M == omega_l
    return M
