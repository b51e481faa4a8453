"""Representation structure tests: verification surface, commutants,
intertwiners, and the multiplicity-freeness check."""

import random

import pytest

from spinorlab.lie import (
    MatrixLieAlgebra,
    Summand,
    SymplecticRep,
    almost_saturated_check,
    commutant,
    conjugate_rep,
    direct_sum,
    hom_space,
    rep_from_text,
    rep_to_text,
    sl2_algebra,
    sl2_standard,
    sl2_sym_cube,
    sl2_w_plus_wdual,
    sp_algebra,
    sp_standard,
    trivial_rep,
    verify_symplectic_rep,
)
from spinorlab.matrix import ExactMatrix, random_symplectic


class TestAlgebra:
    def test_sl2_structure_constants(self):
        alg = sl2_algebra()
        # [e, f] = h, [h, e] = 2e, [h, f] = -2f with basis order (e, h, f)
        assert alg.bracket_coords(0, 2) == {1: 1}
        assert alg.bracket_coords(1, 0) == {0: 2}
        assert alg.bracket_coords(1, 2) == {2: -2}

    def test_sp_dimension(self):
        for n in (1, 2, 3):
            assert sp_algebra(n).dim == n * (2 * n + 1)

    def test_closure_violation_rejected(self):
        # e and f alone do not close: [e,f] = h is outside the span
        e = ExactMatrix([[0, 1], [0, 0]])
        f = ExactMatrix([[0, 0], [1, 0]])
        with pytest.raises(ValueError):
            MatrixLieAlgebra([e, f])

    def test_dependent_basis_rejected(self):
        e = ExactMatrix([[0, 1], [0, 0]])
        with pytest.raises(ValueError):
            MatrixLieAlgebra([e, e.scale(2)])

    def test_trace_gram_nondegenerate(self):
        from spinorlab.matrix import mat_rank_kernel

        for alg in (sl2_algebra(), sp_algebra(2)):
            g = alg.trace_gram()
            assert mat_rank_kernel(g)[0] == alg.dim


class TestVerify:
    def test_sp4_standard_passes(self):
        report = verify_symplectic_rep(sp_standard(2))
        assert report.passed

    def test_sl2_dual_pair_passes_with_isotropy(self):
        report = verify_symplectic_rep(sl2_w_plus_wdual())
        assert report.passed
        names = [n for n, _ in report.checks]
        assert any("W isotropic" in n for n in names)
        assert any("W* isotropic" in n for n in names)

    def test_sym_cube_passes(self):
        assert verify_symplectic_rep(sl2_sym_cube()).passed

    def test_corrupted_rho_fails_sp_membership(self):
        rep = sp_standard(1)
        bad = [list(r) for r in rep.rho[0].entries]
        bad[0][0] = bad[0][0] + 1
        corrupted = SymplecticRep(
            rep.algebra, rep.omega, [ExactMatrix(bad)] + list(rep.rho[1:]), rep.summands
        )
        report = verify_symplectic_rep(corrupted)
        assert not report.passed
        assert any("sp-membership rho(X0)" in n for n in report.failed_names())

    def test_homomorphism_random_pairs(self):
        rng = random.Random(2)
        for rep in (sp_standard(2), sl2_w_plus_wdual(), sl2_sym_cube()):
            alg = rep.algebra
            for _ in range(50):
                xi = [rng.randint(-3, 3) for _ in range(alg.dim)]
                eta = [rng.randint(-3, 3) for _ in range(alg.dim)]
                X = alg.from_coordinates(xi)
                Y = alg.from_coordinates(eta)
                bracket = X * Y - Y * X
                coords = alg.coordinates_of(bracket)
                assert coords is not None
                lhs = rep.rho_of(coords)
                rx, ry = rep.rho_of(xi), rep.rho_of(eta)
                assert lhs == rx * ry - ry * rx


class TestCommutant:
    def test_sp4_standard_is_scalars(self):
        basis = commutant(sp_standard(2))
        assert len(basis) == 1

    def test_w_plus_wdual_dimension_four(self):
        # W is self-dual as an sl2-module, so End_g(W + W*) has dimension 4
        assert len(commutant(sl2_w_plus_wdual())) == 4

    def test_trivial_rep_full_endomorphisms(self):
        rep = trivial_rep(sp_algebra(1), n=1)
        assert len(commutant(rep)) == 4

    def test_contains_identity(self):
        for rep in (sp_standard(1), sl2_sym_cube()):
            basis = commutant(rep)
            # identity must lie in the span: check by solving
            from spinorlab.matrix import mat_rank_kernel

            cols = [[x for r in b.entries for x in r] for b in basis]
            ident = [x for r in ExactMatrix.identity(rep.dimV).entries for x in r]
            with_id = ExactMatrix(cols + [ident]).transpose()
            without = ExactMatrix(cols).transpose()
            assert mat_rank_kernel(with_id)[0] == mat_rank_kernel(without)[0]

    def test_dimension_invariant_under_conjugation(self):
        for seed in (3, 8):
            g = random_symplectic(2, seed)
            rep = sp_standard(2)
            conj = conjugate_rep(rep, g)
            assert len(commutant(conj)) == len(commutant(rep))


class TestHomSpace:
    def test_two_copies_identity_intertwiner(self):
        rep = direct_sum(sp_standard(1), sp_standard(1))
        assert hom_space(rep, 0, 1) >= 1

    def test_standard_vs_trivial_zero(self):
        rep = direct_sum(sp_standard(2), trivial_rep(sp_algebra(2), n=1))
        assert hom_space(rep, 0, 1) == 0

    def test_w_self_dual(self):
        rep = sl2_w_plus_wdual()
        assert hom_space(rep, 0, 1) == 1

    def test_index_error(self):
        with pytest.raises(IndexError):
            hom_space(sp_standard(1), 0, 5)


class TestAlmostSaturated:
    def test_sp_standard_true(self):
        for n in (1, 2, 3):
            assert almost_saturated_check(sp_standard(n)).status == "TRUE"

    def test_w_plus_wdual_false_with_witness(self):
        verdict = almost_saturated_check(sl2_w_plus_wdual())
        assert verdict.status == "FALSE"
        assert any("W" in a and "W*" in b for a, b in verdict.witnesses)

    def test_two_copies_false(self):
        rep = direct_sum(sp_standard(1), sp_standard(1))
        verdict = almost_saturated_check(rep)
        assert verdict.status == "FALSE"
        assert verdict.witnesses

    def test_sym_cube_plus_standard_true(self):
        # two non-isomorphic irreducible symplectic sl2-modules
        rep = direct_sum(sl2_standard(), sl2_sym_cube())
        assert almost_saturated_check(rep).status == "TRUE"

    def test_dual_pair_in_sum_still_false(self):
        rep = direct_sum(sl2_w_plus_wdual(), sl2_sym_cube())
        assert almost_saturated_check(rep).status == "FALSE"

    def test_inconclusive_on_misdeclared_block(self):
        base = sl2_w_plus_wdual()
        misdeclared = SymplecticRep(
            base.algebra, base.omega, base.rho, [Summand("irreducible", 0, 4)]
        )
        verdict = almost_saturated_check(misdeclared)
        assert verdict.status == "INCONCLUSIVE"

    def test_verdict_invariant_under_summand_order(self):
        x = direct_sum(sl2_w_plus_wdual(), sl2_sym_cube())
        y = direct_sum(sl2_sym_cube(), sl2_w_plus_wdual())
        assert almost_saturated_check(x).status == almost_saturated_check(y).status
        a = direct_sum(sl2_standard(), sl2_sym_cube())
        b = direct_sum(sl2_sym_cube(), sl2_standard())
        assert almost_saturated_check(a).status == almost_saturated_check(b).status == "TRUE"


class TestSerialization:
    def test_round_trip(self):
        for rep in (sp_standard(2), sl2_w_plus_wdual(), sl2_sym_cube()):
            text = rep_to_text(rep)
            back = rep_from_text(text)
            assert back.dimV == rep.dimV
            assert back.omega == rep.omega
            assert list(back.rho) == list(rep.rho)
            assert back.summands == rep.summands
            assert list(back.algebra.basis) == list(rep.algebra.basis)
            assert rep_to_text(back) == text

    def test_bad_header_rejected(self):
        with pytest.raises(ValueError):
            rep_from_text("not-a-rep 9\n")
