"""Finite-dimensional two-term Cech models: hypercohomology of the total
complex, Euler characteristics, the five-term exact sequence, and the
machine-checked diagram chase showing that injectivity of the degree-1 map on
"global sections" forces injectivity on first hypercohomology.

Index convention: in A^pq the first index is the complex degree, the second
the Cech degree, so cech differentials go A^p0 -> A^p1 and the complex
differential goes A^0q -> A^1q.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .matrix import ExactMatrix, mat_rank_kernel, rank


class InvalidModelError(ValueError):
    """The commuting-square invariant fails."""


def _hstack(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    if A.rows != B.rows:
        raise ValueError("hstack needs equal row counts")
    return ExactMatrix(
        [list(r1) + list(r2) for r1, r2 in zip(A.entries, B.entries)],
        cols=A.cols + B.cols,
    )


def _vstack(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    if A.cols != B.cols:
        raise ValueError("vstack needs equal column counts")
    return ExactMatrix(list(A.entries) + list(B.entries), cols=A.cols)


@dataclass(frozen=True)
class TwoTermCechModel:
    cech_d0: ExactMatrix  # A00 -> A01
    cech_d1: ExactMatrix  # A10 -> A11
    diff_a0: ExactMatrix  # A00 -> A10
    diff_a1: ExactMatrix  # A01 -> A11

    @property
    def dims(self):
        return (
            self.cech_d0.cols,
            self.cech_d0.rows,
            self.cech_d1.cols,
            self.cech_d1.rows,
        )

    @property
    def commutes(self) -> bool:
        return self.diff_a1 * self.cech_d0 == self.cech_d1 * self.diff_a0

    def total_d0(self) -> ExactMatrix:
        """D0: A00 -> A01 + A10, x -> (d0 x, a0 x)."""
        return _vstack(self.cech_d0, self.diff_a0)

    def total_d1(self) -> ExactMatrix:
        """D1: A01 + A10 -> A11, (y, z) -> a1 y - d1 z."""
        return _hstack(self.diff_a1, -self.cech_d1)

    def validate(self):
        a00, a01, a10, a11 = self.dims
        if self.diff_a0.cols != a00 or self.diff_a1.cols != a01 or self.diff_a1.rows != a11:
            raise InvalidModelError("map shapes are inconsistent")
        if not self.commutes:
            raise InvalidModelError("square does not commute")
        if not (self.total_d1() * self.total_d0()).is_zero:
            raise InvalidModelError("total complex fails D1 D0 = 0")


def hypercohomology(model: TwoTermCechModel):
    """Dimensions (h0, h1, h2) of the total-complex cohomology."""
    model.validate()
    a00, a01, a10, a11 = model.dims
    r0 = rank(model.total_d0())
    r1 = rank(model.total_d1())
    h0 = a00 - r0
    h1 = (a01 + a10) - r1 - r0
    h2 = a11 - r1
    return h0, h1, h2


def euler_char(model: TwoTermCechModel) -> int:
    """Alternating sum of hypercohomology dimensions; computed independently
    from the cochain dimensions and asserted equal."""
    h0, h1, h2 = hypercohomology(model)
    a00, a01, a10, a11 = model.dims
    from_dims = (a00 - a01) - (a10 - a11)
    from_cohomology = h0 - h1 + h2
    assert from_cohomology == from_dims, "Euler characteristic formulas disagree"
    return from_cohomology


@dataclass(frozen=True)
class ComplexMorphism:
    """Morphism of two-term models that is the identity on the degree-0 part
    (the models share A00, A01 and the Cech differential between them)."""

    source: TwoTermCechModel
    target: TwoTermCechModel
    phi1_0: ExactMatrix  # A10_src -> A10_tgt
    phi1_1: ExactMatrix  # A11_src -> A11_tgt

    def validate(self):
        self.source.validate()
        self.target.validate()
        if self.source.cech_d0 != self.target.cech_d0:
            raise InvalidModelError("degree-0 parts are not shared")
        if self.phi1_0 * self.source.diff_a0 != self.target.diff_a0:
            raise InvalidModelError("phi does not intertwine a0")
        if self.phi1_1 * self.source.diff_a1 != self.target.diff_a1:
            raise InvalidModelError("phi does not intertwine a1")
        if self.target.cech_d1 * self.phi1_0 != self.phi1_1 * self.source.cech_d1:
            raise InvalidModelError("phi does not intertwine the Cech differential")


def _preimage_dim(K: ExactMatrix, T: ExactMatrix, B: ExactMatrix) -> int:
    """dim { c : T K c in col(B) } = cols(K) + rank(B) - rank([T K | B])."""
    stacked = _hstack(T * K, B)
    return K.cols + rank(B) - rank(stacked)


@dataclass(frozen=True)
class ChaseVerdict:
    hypothesis: bool     # degree-1 map injective on ker(cech_d1) of the source
    conclusion: bool     # induced map on H^1 injective
    h1_source: int
    h1_target: int

    @property
    def implication_holds(self) -> bool:
        return (not self.hypothesis) or self.conclusion


def j_injectivity_experiment(morphism: ComplexMorphism) -> ChaseVerdict:
    """Record (H) and (C) for one morphism; the diagram chase claims H => C."""
    morphism.validate()
    src, tgt = morphism.source, morphism.target
    a00, a01, a10s, _ = src.dims

    _, sheaf_kernel = mat_rank_kernel(src.cech_d1)
    if sheaf_kernel:
        K = ExactMatrix([list(v) for v in sheaf_kernel]).transpose()
        hypothesis = rank(morphism.phi1_0 * K) == K.cols
    else:
        hypothesis = True

    _, k1 = mat_rank_kernel(src.total_d1())
    h1s = len(k1) - rank(src.total_d0())
    h1t_ = hypercohomology(tgt)[1]
    if not k1:
        return ChaseVerdict(hypothesis, True, 0, h1t_)
    K1 = ExactMatrix([list(v) for v in k1]).transpose()
    # block-diagonal map on A01 + A10
    T = ExactMatrix.from_blocks(
        [
            [ExactMatrix.identity(a01), ExactMatrix.zeros(a01, a10s)],
            [ExactMatrix.zeros(morphism.phi1_0.rows, a01), morphism.phi1_0],
        ]
    )
    pre = _preimage_dim(K1, T, tgt.total_d0())
    induced_kernel = pre - rank(src.total_d0())
    return ChaseVerdict(hypothesis, induced_kernel == 0, h1s, h1t_)


# -- five-term exact sequence --------------------------------------------


@dataclass(frozen=True)
class QuotientSpace:
    """Subquotient span(Z)/span(B) of an ambient coordinate space; Z columns
    are independent and span(B) is contained in span(Z)."""

    Z: ExactMatrix
    B: ExactMatrix

    @property
    def dim(self) -> int:
        return self.Z.cols - rank(self.B)


def _induced_rank(T: ExactMatrix, dom: QuotientSpace, cod: QuotientSpace) -> int:
    stacked = _hstack(T * dom.Z, cod.B)
    return rank(stacked) - rank(cod.B)


def _maps_into(T: ExactMatrix, dom: QuotientSpace, cod: QuotientSpace) -> bool:
    """Every T-image of a dom generator lies in span(Z_cod)."""
    both = _hstack(cod.Z, T * dom.Z)
    return rank(both) == rank(cod.Z)


def _composite_zero(Tg, Tf, dom: QuotientSpace, end: QuotientSpace) -> bool:
    stacked = _hstack(Tg * (Tf * dom.Z), end.B)
    return rank(stacked) == rank(end.B)


@dataclass(frozen=True)
class FiveTermData:
    spaces: tuple       # five QuotientSpace nodes
    maps: tuple         # four ambient matrices


@dataclass(frozen=True)
class ExactnessReport:
    nodes: tuple  # (name, composite_zero, rank_in, rank_out, dim, exact)

    @property
    def all_exact(self) -> bool:
        return all(n[-1] for n in self.nodes)


def five_term_data(model: TwoTermCechModel) -> FiveTermData:
    """H0(A0) -> H0(A1) -> H1_total -> H1(A0) -> H1(A1) with sheaf cohomology
    read off the Cech differentials."""
    model.validate()
    a00, a01, a10, a11 = model.dims

    def kernel_space(M):
        _, k = mat_rank_kernel(M)
        if k:
            Z = ExactMatrix([list(v) for v in k]).transpose()
        else:
            Z = ExactMatrix.zeros(M.cols, 0)
        return QuotientSpace(Z, ExactMatrix.zeros(M.cols, 0))

    n1 = kernel_space(model.cech_d0)
    n2 = kernel_space(model.cech_d1)
    _, k1 = mat_rank_kernel(model.total_d1())
    Z3 = (
        ExactMatrix([list(v) for v in k1]).transpose()
        if k1
        else ExactMatrix.zeros(a01 + a10, 0)
    )
    n3 = QuotientSpace(Z3, model.total_d0())
    n4 = QuotientSpace(ExactMatrix.identity(a01), model.cech_d0)
    n5 = QuotientSpace(ExactMatrix.identity(a11), model.cech_d1)

    f1 = model.diff_a0
    f2 = _vstack(ExactMatrix.zeros(a01, a10), ExactMatrix.identity(a10))
    f3 = _hstack(ExactMatrix.identity(a01), ExactMatrix.zeros(a01, a10))
    f4 = model.diff_a1
    return FiveTermData((n1, n2, n3, n4, n5), (f1, f2, f3, f4))


def check_five_term(data: FiveTermData) -> ExactnessReport:
    names = ("H0(A1)", "H1_total", "H1(A0)")
    spaces, maps = data.spaces, data.maps
    nodes = []
    for k, name in enumerate(names):
        dom, mid, cod = spaces[k], spaces[k + 1], spaces[k + 2]
        Tf, Tg = maps[k], maps[k + 1]
        ok_into = _maps_into(Tf, dom, mid) and _maps_into(Tg, mid, cod)
        cz = _composite_zero(Tg, Tf, dom, cod)
        rin = _induced_rank(Tf, dom, mid)
        rout = _induced_rank(Tg, mid, cod)
        exact = ok_into and cz and (rin + rout == mid.dim)
        nodes.append((name, cz, rin, rout, mid.dim, exact))
    return ExactnessReport(tuple(nodes))


def les_segment(model: TwoTermCechModel) -> ExactnessReport:
    """Exactness of the five-term segment at its three interior nodes."""
    return check_five_term(five_term_data(model))


# -- random generation ------------------------------------------------------


def _rand_matrix(rng, rows, cols, lo=-3, hi=3):
    return ExactMatrix(
        [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)], cols=cols
    )


def _rand_injective(rng, rows, cols):
    if cols == 0:
        return ExactMatrix.zeros(rows, 0)
    while True:
        M = _rand_matrix(rng, rows, cols)
        if rank(M) == cols:
            return M


def _rand_invertible(rng, n):
    return _rand_injective(rng, n, n)


def _extend_to_basis(rng, M):
    """Columns completing an injective matrix to a basis of its row space."""
    n, k = M.rows, M.cols
    cols = [list(c) for c in zip(*M.entries)] if k else []
    extra = []
    while len(cols) + len(extra) < n:
        v = [rng.randint(-3, 3) for _ in range(n)]
        cand = ExactMatrix(cols + extra + [v]).transpose()
        if rank(cand) == len(cols) + len(extra) + 1:
            extra.append(v)
    return ExactMatrix(extra).transpose() if extra else ExactMatrix.zeros(n, 0)


def random_model(rng: random.Random, max_dim: int = 6) -> TwoTermCechModel:
    """Uniform-ish commuting square built per the injective-d0 recipe:
    a1 is forced on im(d0) by the square and random on a complement."""
    a00 = rng.randint(0, max_dim - 1)
    a01 = a00 + rng.randint(0, max(1, max_dim - a00))
    a10 = rng.randint(0, max_dim)
    a11 = rng.randint(0, max_dim)
    d0 = _rand_injective(rng, a01, a00)
    a0 = _rand_matrix(rng, a10, a00)
    d1 = _rand_matrix(rng, a11, a10)
    C = _extend_to_basis(rng, d0)
    P = _hstack(d0, C)
    forced = d1 * a0  # a11 x a00
    R = _rand_matrix(rng, a11, C.cols)
    vals = _hstack(forced, R)
    from .matrix import inverse

    a1 = vals * inverse(P) if a01 else ExactMatrix.zeros(a11, 0)
    model = TwoTermCechModel(d0, d1, a0, a1)
    model.validate()
    return model


def random_morphism(rng: random.Random, max_dim: int = 5, ensure_hypothesis: bool = True) -> ComplexMorphism:
    """Random commuting-square morphism.  With ``ensure_hypothesis`` the
    degree-1 component is an inclusion followed by an automorphism, hence
    injective, so the chase hypothesis holds; otherwise it is the zero map,
    which fails the hypothesis whenever the source has sheaf sections."""
    src = random_model(rng, max_dim)
    a00, a01, a10s, a11s = src.dims
    if ensure_hypothesis:
        a10t = a10s + rng.randint(0, 2)
        a11t = a11s + rng.randint(0, 2)
        P = _rand_invertible(rng, a10t)
        incl = ExactMatrix(
            [[1 if i == j else 0 for j in range(a10s)] for i in range(a10t)]
        )
        phi10 = P * incl
        phi11 = _rand_matrix(rng, a11t, a11s)
        C2 = _extend_to_basis(rng, phi10)
        Q = _hstack(phi10, C2)
        forced = phi11 * src.cech_d1
        R2 = _rand_matrix(rng, a11t, C2.cols)
        vals = _hstack(forced, R2)
        from .matrix import inverse

        d1t = vals * inverse(Q) if a10t else ExactMatrix.zeros(a11t, 0)
        tgt = TwoTermCechModel(src.cech_d0, d1t, phi10 * src.diff_a0, phi11 * src.diff_a1)
    else:
        phi10 = ExactMatrix.zeros(a10s, a10s)
        phi11 = ExactMatrix.zeros(a11s, a11s)
        tgt = TwoTermCechModel(
            src.cech_d0,
            _rand_matrix(rng, a11s, a10s),
            ExactMatrix.zeros(a10s, a00),
            ExactMatrix.zeros(a11s, a01),
        )
    morphism = ComplexMorphism(src, tgt, phi10, phi11)
    morphism.validate()
    return morphism
