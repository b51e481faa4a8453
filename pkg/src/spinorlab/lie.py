"""Matrix Lie algebras with exact structure constants, symplectic
representations with declared summand decompositions, commutant and
intertwiner computations, and the multiplicity-freeness test.

Decompositions are declared by constructors and verified, not discovered:
the verification surface checks invariance and certifies irreducibility
through commutant dimensions instead of running a full Meataxe.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .matrix import ExactMatrix, inverse, mat_rank_kernel, standard_omega
from .rings import _is_rat


def _flatten(M: ExactMatrix):
    return tuple(x for r in M.entries for x in r)


class MatrixLieAlgebra:
    """A Lie algebra given by a linearly independent list of ambient square
    matrices, closed under the bracket.  Structure constants are computed and
    the closure identity [X_i, X_j] = sum_k c^k_ij X_k is verified exactly at
    construction.
    """

    def __init__(self, basis, name: str = ""):
        basis = tuple(basis)
        if not basis:
            raise ValueError("empty basis")
        d = basis[0].rows
        if any(not b.is_square or b.rows != d for b in basis):
            raise ValueError("basis matrices must be square of equal size")
        self.name = name
        self.basis = basis
        self.ambient_dim = d
        self.dim = len(basis)
        flat = ExactMatrix([_flatten(b) for b in basis]).transpose()  # d^2 x D
        rk, _ = mat_rank_kernel(flat)
        if rk != self.dim:
            raise ValueError("basis matrices are linearly dependent")
        self._coord_solver = _CoordinateSolver(flat)
        self.structure_constants = self._compute_structure_constants()

    def _compute_structure_constants(self):
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for i in range(self.dim):
            Xi = self.basis[i]
            for j in range(i + 1, self.dim):
                Xj = self.basis[j]
                br = Xi * Xj - Xj * Xi
                coords = self._coord_solver.coords(_flatten(br))
                if coords is None:
                    raise ValueError("basis is not closed under the bracket")
                cs = {k: c for k, c in enumerate(coords) if c != 0}
                if cs:
                    table[(i, j)] = cs
                    table[(j, i)] = {k: -c for k, c in cs.items()}
        return table

    def bracket_coords(self, i: int, j: int) -> dict:
        """Sparse coordinates of [X_i, X_j] in the basis."""
        return self.structure_constants.get((i, j), {})

    def coordinates_of(self, M: ExactMatrix):
        """Coordinates of an ambient matrix in the basis, or None."""
        return self._coord_solver.coords(_flatten(M))

    def from_coordinates(self, coords) -> ExactMatrix:
        acc = ExactMatrix.zeros(self.ambient_dim, self.ambient_dim)
        for c, X in zip(coords, self.basis):
            if not (_is_rat(c) and c == 0):
                acc = acc + X.scale(c)
        return acc

    def trace_gram(self) -> ExactMatrix:
        """Gram matrix of the trace form B(X,Y) = tr(XY) on the basis."""
        d = self.ambient_dim

        def tr(A, B):
            return sum(A.entries[i][j] * B.entries[j][i] for i in range(d) for j in range(d))

        return ExactMatrix([[tr(a, b) for b in self.basis] for a in self.basis])


class _CoordinateSolver:
    """Solves flat*c = y repeatedly for a fixed full-column-rank flat matrix,
    by inverting a row-selected square block once."""

    def __init__(self, flat: ExactMatrix):
        self.flat = flat
        rows = []
        sel = []
        r = 0
        # greedily pick rows that increase the rank
        for i in range(flat.rows):
            cand = rows + [flat.entries[i]]
            rk, _ = mat_rank_kernel(ExactMatrix(cand))
            if rk > r:
                rows.append(flat.entries[i])
                sel.append(i)
                r = rk
                if r == flat.cols:
                    break
        if r != flat.cols:
            raise ValueError("matrix does not have full column rank")
        self.sel = sel
        self.block_inv = inverse(ExactMatrix(rows))

    def coords(self, y):
        ysel = [y[i] for i in self.sel]
        c = self.block_inv.apply(ysel)
        # verify on the full system; None signals y outside the span
        if self.flat.apply(c) != tuple(y):
            return None
        return c


@dataclass(frozen=True)
class Summand:
    """Declared indecomposable symplectic summand.

    ``kind`` is "irreducible" for an irreducible symplectic summand or
    "dual-pair" for a summand of shape W + W*, in which case ``mid`` separates
    the two isotropic halves.
    """

    kind: str
    lo: int
    hi: int
    mid: int | None = None

    def constituents(self, tag: str):
        if self.kind == "irreducible":
            return [(tag, (self.lo, self.hi))]
        return [(f"{tag}.W", (self.lo, self.mid)), (f"{tag}.W*", (self.mid, self.hi))]


@dataclass(frozen=True)
class CheckReport:
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    def failed_names(self):
        return [name for name, ok in self.checks if not ok]


class SymplecticRep:
    """A symplectic representation rho: g -> sp(V, omega) with a declared
    decomposition into indecomposable symplectic summands."""

    def __init__(self, algebra: MatrixLieAlgebra, omega: ExactMatrix, rho, summands, name: str = ""):
        self.algebra = algebra
        self.omega = omega
        self.rho = tuple(rho)
        self.summands = tuple(summands)
        self.name = name
        self.dimV = omega.rows
        if len(self.rho) != algebra.dim:
            raise ValueError("need one image per basis element")
        spans = sorted(
            [(s.lo, s.hi) for s in self.summands]
        )
        covered = [x for lo, hi in spans for x in range(lo, hi)]
        if covered != list(range(self.dimV)):
            raise ValueError("summands must partition the coordinate range")

    def constituents(self):
        out = []
        for i, s in enumerate(self.summands):
            out.extend(s.constituents(f"summand{i}"))
        return out

    def rho_of(self, coords) -> ExactMatrix:
        """Image of the algebra element with the given basis coordinates."""
        acc = ExactMatrix.zeros(self.dimV, self.dimV)
        for c, R in zip(coords, self.rho):
            if not (_is_rat(c) and c == 0):
                acc = acc + R.scale(c)
        return acc


def verify_symplectic_rep(rep: SymplecticRep) -> CheckReport:
    """Run every structural check; failures become report entries, not errors."""
    checks = []
    omega = rep.omega
    checks.append(("omega antisymmetric", omega.transpose() == omega.scale(-1)))
    rk, _ = mat_rank_kernel(omega)
    checks.append(("omega invertible", rk == rep.dimV))

    for i, R in enumerate(rep.rho):
        ok = (R.transpose() * omega + omega * R).is_zero
        checks.append((f"sp-membership rho(X{i})", ok))

    alg = rep.algebra
    hom_ok, hom_name = True, "homomorphism on all basis pairs"
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            lhs = rep.rho_of([alg.bracket_coords(i, j).get(k, 0) for k in range(alg.dim)])
            rhs = rep.rho[i] * rep.rho[j] - rep.rho[j] * rep.rho[i]
            if lhs != rhs:
                hom_ok, hom_name = False, f"homomorphism fails on (X{i}, X{j})"
                break
        if not hom_ok:
            break
    checks.append((hom_name, hom_ok))

    for tag, (lo, hi) in rep.constituents():
        inv_ok = all(
            _entry_zero(R.entries[r][c])
            for R in rep.rho
            for c in range(lo, hi)
            for r in list(range(0, lo)) + list(range(hi, rep.dimV))
        )
        checks.append((f"invariance of {tag}", inv_ok))

    for i, s in enumerate(rep.summands):
        if s.kind == "irreducible":
            sub = omega.submatrix(range(s.lo, s.hi), range(s.lo, s.hi))
            rk, _ = mat_rank_kernel(sub)
            checks.append((f"omega nondegenerate on summand{i}", rk == s.hi - s.lo))
        else:
            w_iso = omega.submatrix(range(s.lo, s.mid), range(s.lo, s.mid)).is_zero
            ws_iso = omega.submatrix(range(s.mid, s.hi), range(s.mid, s.hi)).is_zero
            checks.append((f"W isotropic in summand{i}", w_iso))
            checks.append((f"W* isotropic in summand{i}", ws_iso))
    return CheckReport(tuple(checks))


def _entry_zero(x):
    return x == 0 if _is_rat(x) else x.is_zero


def _iterative_kernel(maps):
    """Basis of the joint kernel of a list of linear maps (as ExactMatrix),
    refined one map at a time to keep eliminations small."""
    if not maps:
        return []
    ncols = maps[0].cols
    basis = None  # None means the full space
    for M in maps:
        if basis is None:
            _, ker = mat_rank_kernel(M)
            basis = [list(v) for v in ker]
        else:
            if not basis:
                return []
            B = ExactMatrix(basis).transpose()
            _, ker = mat_rank_kernel(M * B)
            basis = [list(B.apply(v)) for v in ker]
    return [tuple(v) for v in (basis or [])]


def commutant(rep: SymplecticRep, block: tuple[int, int] | None = None):
    """Basis of End_g(V) (or of the endomorphisms of a coordinate block),
    computed as the joint kernel of A -> A rho(X_i) - rho(X_i) A."""
    lo, hi = block if block is not None else (0, rep.dimV)
    m = hi - lo
    maps = []
    for R in rep.rho:
        sub = R.submatrix(range(lo, hi), range(lo, hi))
        rows = []
        for r in range(m):
            for c in range(m):
                row = [0] * (m * m)
                for q in range(m):
                    row[r * m + q] += sub.entries[q][c]
                    row[q * m + c] -= sub.entries[r][q]
                rows.append(row)
        maps.append(ExactMatrix(rows))
    ker = _iterative_kernel(maps)
    return [ExactMatrix([v[r * m : (r + 1) * m] for r in range(m)]) for v in ker]


def hom_space(rep: SymplecticRep, a: int, b: int) -> int:
    """Dimension of the intertwiner space Hom_g between two declared
    constituents (dual-pair summands contribute W and W* separately)."""
    cons = rep.constituents()
    if not (0 <= a < len(cons) and 0 <= b < len(cons)):
        raise IndexError("constituent index out of range")
    (la, ha), (lb, hb) = cons[a][1], cons[b][1]
    na, nb = ha - la, hb - lb
    maps = []
    for R in rep.rho:
        Ra = R.submatrix(range(la, ha), range(la, ha))
        Rb = R.submatrix(range(lb, hb), range(lb, hb))
        rows = []
        # unknown T (nb x na): T Ra - Rb T = 0
        for r in range(nb):
            for c in range(na):
                row = [0] * (nb * na)
                for q in range(na):
                    row[r * na + q] += Ra.entries[q][c]
                for p in range(nb):
                    row[p * na + c] -= Rb.entries[r][p]
                rows.append(row)
        maps.append(ExactMatrix(rows))
    return len(_iterative_kernel(maps))


@dataclass(frozen=True)
class SaturationVerdict:
    status: str  # "TRUE", "FALSE", or "INCONCLUSIVE"
    witnesses: tuple = ()

    def __bool__(self):
        return self.status == "TRUE"


def almost_saturated_check(rep: SymplecticRep) -> SaturationVerdict:
    """Multiplicity-freeness test for the declared decomposition.

    TRUE iff all constituents in distinct summands have zero intertwiner
    space and each dual-pair summand has Hom(W, W*) = 0.  Declared
    irreducibility is certified first via commutant dimension one on each
    constituent block; a failed certificate aborts with INCONCLUSIVE.
    """
    report = verify_symplectic_rep(rep)
    if not report.passed:
        raise ValueError(f"representation fails verification: {report.failed_names()}")

    cons = rep.constituents()
    for tag, span in cons:
        if len(commutant(rep, block=span)) != 1:
            return SaturationVerdict("INCONCLUSIVE", ((tag, "commutant dimension > 1"),))

    summand_of = []
    for i, s in enumerate(rep.summands):
        summand_of.extend([i] * len(s.constituents("x")))

    witnesses = []
    for a in range(len(cons)):
        for b in range(a + 1, len(cons)):
            if summand_of[a] == summand_of[b]:
                continue
            if hom_space(rep, a, b) != 0:
                witnesses.append((cons[a][0], cons[b][0]))
    for i, s in enumerate(rep.summands):
        if s.kind == "dual-pair":
            idx = [k for k, so in enumerate(summand_of) if so == i]
            if hom_space(rep, idx[0], idx[1]) != 0:
                witnesses.append((cons[idx[0]][0], cons[idx[1]][0]))
    if witnesses:
        return SaturationVerdict("FALSE", tuple(witnesses))
    return SaturationVerdict("TRUE")


# -- constructors -----------------------------------------------------------


@lru_cache(maxsize=None)
def sp_algebra(n: int) -> MatrixLieAlgebra:
    """sp(2n) in the interleaved frame: X = Omega^{-1} S for S symmetric."""
    omega = standard_omega(n)
    neg_omega = omega.scale(-1)  # Omega^{-1} = -Omega in this frame
    dim = 2 * n
    basis = []
    for i in range(dim):
        for j in range(i, dim):
            S = [[0] * dim for _ in range(dim)]
            S[i][j] += 1
            S[j][i] += 1 if i != j else 0
            if i == j:
                S[i][j] = 1
            basis.append(neg_omega * ExactMatrix(S))
    return MatrixLieAlgebra(basis, name=f"sp{2*n}")


@lru_cache(maxsize=None)
def sp_standard(n: int) -> SymplecticRep:
    """Standard representation of sp(2n) on its defining symplectic space."""
    if not 1 <= n <= 4:
        raise ValueError("supported range is 1 <= n <= 4")
    alg = sp_algebra(n)
    return SymplecticRep(
        alg,
        standard_omega(n),
        alg.basis,
        [Summand("irreducible", 0, 2 * n)],
        name=f"sp{2*n}-standard",
    )


@lru_cache(maxsize=None)
def sl2_algebra() -> MatrixLieAlgebra:
    e = ExactMatrix([[0, 1], [0, 0]])
    h = ExactMatrix([[1, 0], [0, -1]])
    f = ExactMatrix([[0, 0], [1, 0]])
    return MatrixLieAlgebra([e, h, f], name="sl2")


@lru_cache(maxsize=None)
def sl2_w_plus_wdual() -> SymplecticRep:
    """sl2 acting on W + W* (W the standard module), with the duality
    pairing as symplectic form; coordinates are (u1, u2, delta1, delta2)."""
    alg = sl2_algebra()
    rho = []
    for X in alg.basis:
        Xt = X.transpose()
        rho.append(
            ExactMatrix.from_blocks(
                [[X, ExactMatrix.zeros(2, 2)], [ExactMatrix.zeros(2, 2), Xt.scale(-1)]]
            )
        )
    I2 = ExactMatrix.identity(2)
    omega = ExactMatrix.from_blocks([[ExactMatrix.zeros(2, 2), I2], [I2.scale(-1), ExactMatrix.zeros(2, 2)]])
    return SymplecticRep(
        alg, omega, rho, [Summand("dual-pair", 0, 4, mid=2)], name="sl2-W+W*"
    )


@lru_cache(maxsize=None)
def sl2_standard() -> SymplecticRep:
    """sl2 on its standard 2-dimensional module, viewed inside sp(2)."""
    alg = sl2_algebra()
    return SymplecticRep(
        alg, standard_omega(1), alg.basis, [Summand("irreducible", 0, 2)],
        name="sl2-standard",
    )


@lru_cache(maxsize=None)
def sl2_sym_cube() -> SymplecticRep:
    """sl2 on the third symmetric power of the standard module: a
    4-dimensional irreducible symplectic representation.  The invariant
    form is computed (and certified unique up to scale) at construction."""
    alg = sl2_algebra()
    rho = [_sym_cube_action(X) for X in alg.basis]

    # solve rho(X)^T W + W rho(X) = 0, W antisymmetric, over 16 unknowns
    rows = []
    for R in rho:
        for r in range(4):
            for c in range(4):
                row = [0] * 16
                for q in range(4):
                    row[q * 4 + c] += R.entries[q][r]  # (R^T W)_{rc} = sum_q R_{qr} W_{qc}
                    row[r * 4 + q] += R.entries[q][c]  # (W R)_{rc}  = sum_q W_{rq} R_{qc}
                rows.append(row)
    for r in range(4):
        for c in range(4):
            row = [0] * 16
            row[r * 4 + c] += 1
            row[c * 4 + r] += 1
            rows.append(row)
    _, ker = mat_rank_kernel(ExactMatrix(rows))
    assert len(ker) == 1, "invariant form should be unique up to scale"
    v = ker[0]
    scale = 1
    for x in v:
        scale = scale * Fraction(x).denominator
    v = [Fraction(x) * scale for x in v]
    omega = ExactMatrix([[v[r * 4 + c] for c in range(4)] for r in range(4)])
    if omega.entries[0][3] < 0:
        omega = omega.scale(-1)
    return SymplecticRep(
        alg, omega, rho, [Summand("irreducible", 0, 4)], name="sl2-Sym3"
    )


def _sym_cube_action(X: ExactMatrix) -> ExactMatrix:
    # basis monomials x^(3-k) y^k, k = 0..3; X acts by derivation with
    # X.x = X00 x + X10 y and X.y = X01 x + X11 y
    a, b = X.entries[0][0], X.entries[0][1]
    c, d = X.entries[1][0], X.entries[1][1]
    cols = []
    for k in range(4):
        img = {}
        # (3-k) copies of x: replace one x by X.x
        if 3 - k > 0:
            img[k] = img.get(k, 0) + (3 - k) * a       # x -> a x
            img[k + 1] = img.get(k + 1, 0) + (3 - k) * c  # x -> c y
        if k > 0:
            img[k - 1] = img.get(k - 1, 0) + k * b     # y -> b x
            img[k] = img.get(k, 0) + k * d             # y -> d y
        cols.append([img.get(r, 0) for r in range(4)])
    return ExactMatrix([[cols[j][i] for j in range(4)] for i in range(4)])


def trivial_rep(algebra: MatrixLieAlgebra, n: int = 1) -> SymplecticRep:
    """rho = 0 on a standard symplectic space of half-dimension n."""
    z = ExactMatrix.zeros(2 * n, 2 * n)
    return SymplecticRep(
        algebra, standard_omega(n), [z] * algebra.dim,
        [Summand("irreducible", 0, 2 * n)], name="trivial",
    )


def direct_sum(r1: SymplecticRep, r2: SymplecticRep) -> SymplecticRep:
    """Direct sum of two representations of the same algebra."""
    if r1.algebra is not r2.algebra and r1.algebra.basis != r2.algebra.basis:
        raise ValueError("direct sum needs a common algebra")
    z12 = ExactMatrix.zeros(r1.dimV, r2.dimV)
    z21 = ExactMatrix.zeros(r2.dimV, r1.dimV)
    rho = [
        ExactMatrix.from_blocks([[A, z12], [z21, B]]) for A, B in zip(r1.rho, r2.rho)
    ]
    omega = ExactMatrix.from_blocks([[r1.omega, z12], [z21, r2.omega]])
    off = r1.dimV
    summands = list(r1.summands) + [
        Summand(s.kind, s.lo + off, s.hi + off, None if s.mid is None else s.mid + off)
        for s in r2.summands
    ]
    return SymplecticRep(r1.algebra, omega, rho, summands, name=f"{r1.name}+{r2.name}")


def conjugate_rep(rep: SymplecticRep, g: ExactMatrix) -> SymplecticRep:
    """Change of basis by an invertible g; summand structure collapses to a
    single declared block since coordinate spans are not preserved."""
    ginv = inverse(g)
    rho = [g * R * ginv for R in rep.rho]
    omega = ginv.transpose() * rep.omega * ginv
    return SymplecticRep(
        rep.algebra, omega, rho, [Summand("irreducible", 0, rep.dimV)],
        name=f"{rep.name}-conjugated",
    )


# -- line-oriented text serialization ---------------------------------------


def _fmt_frac(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _fmt_matrix(M: ExactMatrix) -> str:
    return " ".join(_fmt_frac(x) for r in M.entries for x in r)


def _parse_matrix(tokens, n: int) -> ExactMatrix:
    vals = [Fraction(t) for t in tokens]
    if len(vals) != n * n:
        raise ValueError("wrong entry count for matrix")
    return ExactMatrix([vals[i * n : (i + 1) * n] for i in range(n)])


def rep_to_text(rep: SymplecticRep) -> str:
    """Line-oriented text form: header, algebra basis, omega, rho images,
    and summand declarations, with all entries as rationals."""
    lines = [f"spinorlab-rep 1 {rep.name or 'unnamed'}"]
    lines.append(f"algebra {rep.algebra.dim} {rep.algebra.ambient_dim}")
    for X in rep.algebra.basis:
        lines.append("X " + _fmt_matrix(X))
    lines.append(f"dimV {rep.dimV}")
    lines.append("omega " + _fmt_matrix(rep.omega))
    for R in rep.rho:
        lines.append("rho " + _fmt_matrix(R))
    for s in rep.summands:
        if s.kind == "irreducible":
            lines.append(f"summand irr {s.lo} {s.hi}")
        else:
            lines.append(f"summand dual {s.lo} {s.mid} {s.hi}")
    return "\n".join(lines) + "\n"


def rep_from_text(text: str) -> SymplecticRep:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    head = lines[0].split()
    if head[:2] != ["spinorlab-rep", "1"]:
        raise ValueError("unrecognized representation format")
    name = head[2] if len(head) > 2 else ""
    _, dim_s, amb_s = lines[1].split()
    dim, amb = int(dim_s), int(amb_s)
    idx = 2
    basis = []
    for _ in range(dim):
        tag, *toks = lines[idx].split()
        if tag != "X":
            raise ValueError(f"expected basis line, got {tag!r}")
        basis.append(_parse_matrix(toks, amb))
        idx += 1
    algebra = MatrixLieAlgebra(basis)
    dimv = int(lines[idx].split()[1])
    idx += 1
    tag, *toks = lines[idx].split()
    if tag != "omega":
        raise ValueError(f"expected omega line, got {tag!r}")
    omega = _parse_matrix(toks, dimv)
    idx += 1
    rho = []
    for _ in range(dim):
        tag, *toks = lines[idx].split()
        if tag != "rho":
            raise ValueError(f"expected rho line, got {tag!r}")
        rho.append(_parse_matrix(toks, dimv))
        idx += 1
    summands = []
    for ln in lines[idx:]:
        parts = ln.split()
        if parts[0] != "summand":
            raise ValueError(f"unexpected line: {ln}")
        if parts[1] == "irr":
            summands.append(Summand("irreducible", int(parts[2]), int(parts[3])))
        else:
            summands.append(
                Summand("dual-pair", int(parts[2]), int(parts[4]), mid=int(parts[3]))
            )
    return SymplecticRep(algebra, omega, rho, summands, name=name)
