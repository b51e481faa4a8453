"""Seeded verification suites over every module, with deterministic,
machine-readable reports.

Per-trial randomness is derived from the master seed through a splittable
counter mix (trial i uses seed XOR splitmix64(i)), so each trial is
independently reproducible and the report body is a pure function of
(config, seed).
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import bbflow, cech, cocycle, hecke, petri, rrdim
from .lie import sl2_sym_cube, sl2_w_plus_wdual, sp_standard
from .matrix import ExactMatrix, random_symplectic, standard_omega
from .moment import (
    MomentContext,
    equivariance_check,
    gaiotto_field,
    is_nilpotent_cone_member,
)
from .rings import FracElem, LaurentPoly, MultiPoly

SCHEMA_VERSION = 1

SUITE_NAMES = (
    "moment-equivariance",
    "gaiotto",
    "petri",
    "cech",
    "hecke",
    "cocycle",
    "bbflow",
    "dims",
    "stability-scan",
    "all",
)

WORKER_ENV = "SPINORLAB_WORKERS"


class ConfigError(ValueError):
    """Unknown suite or out-of-range parameter."""


@dataclass(frozen=True)
class SuiteConfig:
    suite: str
    n: int = 2
    g: int = 2
    m: int = 1
    s: int = 2
    prec: int = 4
    trials: int = 100
    seed: int = 0

    def __post_init__(self):
        if self.suite not in SUITE_NAMES:
            raise ConfigError(f"unknown suite {self.suite!r}; known: {', '.join(SUITE_NAMES)}")
        if not 1 <= self.n <= 4:
            raise ConfigError("n must be in 1..4")
        if self.g < 2:
            raise ConfigError("g must be >= 2")
        if self.m < 1:
            raise ConfigError("m must be >= 1")
        if not 1 <= self.s <= 4:
            raise ConfigError("s must be in 1..4")
        if self.prec < 1:
            raise ConfigError("prec must be >= 1")
        if not 1 <= self.trials <= 10_000:
            raise ConfigError("trials must be in 1..10000")
        if not 0 <= self.seed < 2 ** 64:
            raise ConfigError("seed must fit in 64 bits")


@dataclass
class SuiteReport:
    suite: str
    config: dict
    passed: int
    failed: int
    failures: list
    wall_time: float

    def to_json_dict(self) -> dict:
        """Determinism contract: wall_time and timestamps stay out of the body."""
        return {
            "schema_version": SCHEMA_VERSION,
            "suite": self.suite,
            "config": self.config,
            "passed": self.passed,
            "failed": self.failed,
            "failures": [{"case": c, "residual": r} for c, r in self.failures],
        }


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & 0xFFFFFFFFFFFFFFFF
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & 0xFFFFFFFFFFFFFFFF
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & 0xFFFFFFFFFFFFFFFF
    return z ^ (z >> 31)


def trial_seed(master: int, i: int) -> int:
    return (master ^ splitmix64(i)) & 0xFFFFFFFFFFFFFFFF


def _rng(cfg: SuiteConfig, i: int) -> random.Random:
    return random.Random(trial_seed(cfg.seed, i))


def _rand_rational(rng, bound=6):
    return Fraction(rng.randint(-bound, bound), rng.choice([1, 1, 2, 3]))


# -- individual suites -------------------------------------------------------


def _moment_equivariance_cases(cfg: SuiteConfig):
    reps = [sp_standard(cfg.n), sl2_w_plus_wdual(), sl2_sym_cube()]
    cases = []
    counter = 0
    for rep in reps:
        ctx = MomentContext(rep)
        for i in range(cfg.trials):
            idx = counter
            counter += 1

            def case(rep=rep, ctx=ctx, idx=idx, i=i):
                rng = _rng(cfg, idx)
                psi = [_rand_rational(rng) for _ in range(rep.dimV)]
                xi = [rng.randint(-3, 3) for _ in range(rep.algebra.dim)]
                ok, _ = equivariance_check(ctx, psi, xi)
                return (
                    f"{rep.name}/t{i:04d}",
                    ok,
                    "" if ok else "nonzero equivariance residual",
                )

            cases.append(case)
    return cases


def _gaiotto_cases(cfg: SuiteConfig):
    cases = []
    for i in range(cfg.trials):

        def case(i=i):
            rng = _rng(cfg, i)
            n = 1 + (i % cfg.n)
            omega = standard_omega(n)
            psi = [_rand_rational(rng) for _ in range(2 * n)]
            Phi = gaiotto_field(omega, psi)
            sq = (Phi * Phi).is_zero
            sp_mem = (Phi.transpose() * omega + omega * Phi).is_zero
            nilp = is_nilpotent_cone_member(Phi)
            ok = sq and sp_mem and nilp
            return (
                f"gaiotto/n{n}/t{i:04d}",
                ok,
                "" if ok else f"square_zero={sq} sp={sp_mem} nilpotent_cone={nilp}",
            )

        cases.append(case)
    return cases


def _petri_cases(cfg: SuiteConfig):
    std_space = petri.SectionSpace(sp_standard(cfg.n), cfg.s)
    dual_rep = sl2_w_plus_wdual()
    dual_space = petri.SectionSpace(dual_rep, cfg.s)
    cases = []
    for i in range(cfg.trials):
        if i % 2 == 0:

            def case(i=i, space=std_space):
                rng = _rng(cfg, i)
                coords = [_rand_rational(rng, 4) for _ in range(space.dim)]
                if not any(coords):
                    coords[0] = Fraction(1)
                kernel = petri.petri_kernel(space, coords)
                ok = kernel == []
                return (
                    f"standard-injective/t{i:04d}",
                    ok,
                    "" if ok else f"kernel dimension {len(kernel)}",
                )

        else:

            def case(i=i, space=dual_space, rep=dual_rep):
                rng = _rng(cfg, i)
                m = rep.dimV
                while True:
                    coords = [_rand_rational(rng, 4) for _ in range(space.dim)]
                    u_part = [coords[k * m + j] for k in range(space.degree_bound) for j in (0, 1)]
                    d_part = [coords[k * m + j] for k in range(space.degree_bound) for j in (2, 3)]
                    if any(u_part) and any(d_part):
                        break
                direction = petri.dual_pair_kernel_direction(rep, space, coords)
                pm = petri.petri_matrix(space, coords)
                in_kernel = all(x == 0 for x in pm.matrix.apply(direction))
                t = _rand_rational(rng, 4)
                while t == 0:
                    t = _rand_rational(rng, 4)
                point = [_rand_rational(rng) for _ in range(m)]
                inv = petri.scalar_action_invariance(rep, point, t)
                ok = in_kernel and inv
                return (
                    f"dual-pair-kernel/t{i:04d}",
                    ok,
                    "" if ok else f"direction_in_kernel={in_kernel} scaling_invariant={inv}",
                )

        cases.append(case)
    return cases


def _cech_cases(cfg: SuiteConfig):
    cases = []
    for i in range(cfg.trials):

        def model_case(i=i):
            rng = _rng(cfg, 2 * i)
            model = cech.random_model(rng)
            try:
                cech.euler_char(model)
            except AssertionError:
                return (f"euler/t{i:04d}", False, "formula disagreement")
            report = cech.les_segment(model)
            ok = report.all_exact
            return (
                f"model/t{i:04d}",
                ok,
                "" if ok else f"inexact nodes {[n[0] for n in report.nodes if not n[-1]]}",
            )

        def chase_case(i=i):
            rng = _rng(cfg, 2 * i + 1)
            morphism = cech.random_morphism(rng, ensure_hypothesis=True)
            v = cech.j_injectivity_experiment(morphism)
            ok = v.implication_holds and v.hypothesis
            return (
                f"chase/t{i:04d}",
                ok,
                "" if ok else f"H={v.hypothesis} C={v.conclusion}",
            )

        cases.append(model_case)
        cases.append(chase_case)
    return cases


def _hecke_cases(cfg: SuiteConfig):
    cases = []

    def literal_case():
        fam = hecke.hecke_family(1, 1)
        _, psi_d = hecke.modified_spinor(fam)
        t = MultiPoly.var("t")
        ok = (
            psi_d[0] == LaurentPoly("z", {1: MultiPoly.const(1)})
            and psi_d[1] == LaurentPoly("z", {0: t})
        )
        return ("modified-spinor/literal-image-n1-m1", ok, "" if ok else "image mismatch")

    cases.append(literal_case)
    for n in (1, 2, 3):
        for m in (1, 2, 3):

            def family_case(n=n, m=m):
                fam = hecke.hecke_family(n, m)
                ok = hecke.verify_symplectic_family(fam)
                ident = ExactMatrix.identity(2 * n).map_entries(
                    lambda x: LaurentPoly.const("z", x)
                )
                ok = ok and fam.h_t * fam.h_inv == ident and fam.at_t_zero() == ident
                return (f"family/n{n}/m{m}", ok, "" if ok else "family identity failed")

            def glue_case(n=n, m=m):
                report = hecke.glue_check(n, m)
                ok = report.passed
                return (
                    f"glue/n{n}/m{m}",
                    ok,
                    "" if ok else f"regular={report.spinor_regular} nonzero={report.spinor_nonzero_at_origin} "
                    f"glues={report.higgs_glues} higgs_regular={report.higgs_regular}",
                )

            cases.append(family_case)
            cases.append(glue_case)

    if (cfg.n, cfg.m) not in [(a, b) for a in (1, 2, 3) for b in (1, 2, 3)]:

        def config_point_case():
            report = hecke.glue_check(cfg.n, cfg.m)
            return (
                f"glue/n{cfg.n}/m{cfg.m}",
                report.passed,
                "" if report.passed else "glue check failed at the configured point",
            )

        cases.append(config_point_case)

    def completion_case():
        rng = _rng(cfg, 0)
        z = MultiPoly.var("z")
        entries = []
        for i in range(2 * cfg.n):
            p = MultiPoly.const(rng.randint(-3, 3))
            for k in range(1, cfg.prec):
                p = p + rng.randint(-2, 2) * z ** k
            entries.append(p)
        if all(e.coeff({"z": 0}) == 0 for e in entries):
            entries[0] = entries[0] + 1
        v = hecke.TruncatedSeriesVector(tuple(entries), precision=cfg.prec)
        S = hecke.symplectic_complete(v)
        ok = hecke.verify_completion(S, cfg.prec)
        return (f"completion/n{cfg.n}/prec{cfg.prec}", ok, "" if ok else "postcondition failed")

    cases.append(completion_case)
    return cases


def _cocycle_cases(cfg: SuiteConfig):
    n = max(2, cfg.n)
    cases = []
    for i in range(cfg.trials):

        def case(i=i, n=n):
            rng = _rng(cfg, i)
            seed = rng.randint(0, 2 ** 32 - 1)
            c = cocycle.fresh_symbol_cocycle(n, seed=seed)
            zero = cocycle.verify_form_preservation(c).is_zero
            perturbed = cocycle.perturb_gamma(c, slot=rng.randrange(2 * n - 2))
            nonzero = not cocycle.verify_form_preservation(perturbed).is_zero
            u = random_symplectic(n - 1, seed)
            l = Fraction(rng.choice([1, 2, 3, -1, -2]), rng.choice([1, 2]))
            d = tuple(Fraction(rng.randint(-4, 4)) for _ in range(2 * n - 2))
            a = Fraction(rng.randint(-4, 4))
            res = cocycle.necessity_solve(n, l, u, d, a)
            want = cocycle.theta_dual(d, u, FracElem(l), cocycle.middle_theta(n))
            necessity_ok = res.unique and [FracElem(x) for x in res.gamma] == [
                FracElem(0) + w for w in want
            ]
            ok = zero and nonzero and necessity_ok
            return (
                f"cocycle/n{n}/t{i:04d}",
                ok,
                "" if ok else f"residual_zero={zero} perturbation_detected={nonzero} necessity={necessity_ok}",
            )

        cases.append(case)
    return cases


def _bbflow_cases(cfg: SuiteConfig):
    n = cfg.n
    cases = []
    for i in range(cfg.trials):

        def case(i=i, n=n):
            rng = _rng(cfg, i)
            scale = _rand_rational(rng, 5)
            if scale == 0:
                scale = Fraction(1)
            model = bbflow.graded_model(n, bbflow.strictly_filtered_phi(n, scale))
            lim = bbflow.bb_limit(model)
            limit_ok = lim is not None and lim == bbflow.strictly_filtered_phi(n, scale)
            a = _rand_rational(rng, 9)
            while a == 0:
                a = _rand_rational(rng, 9)
            weight_ok = bbflow.fixed_point_scale_check(model, a)
            torus_ok = bbflow.torus_preserves_form(model)
            conv_ok = bbflow.lambda_s_conversion_check(model)
            generic = ExactMatrix(
                [[rng.randint(1, 3) for _ in range(2 * n)] for _ in range(2 * n)]
            )
            no_limit_ok = bbflow.bb_limit(bbflow.graded_model(n, generic)) is None
            ok = limit_ok and weight_ok and torus_ok and conv_ok and no_limit_ok
            return (
                f"bbflow/n{n}/t{i:04d}",
                ok,
                "" if ok else f"limit={limit_ok} weight2={weight_ok} torus={torus_ok} "
                f"conversion={conv_ok} generic_absent={no_limit_ok}",
            )

        cases.append(case)
    return cases


def _dims_cases(cfg: SuiteConfig):
    cases = []

    def point_case():
        rec = rrdim.pair_euler_identity(cfg.n, cfg.g)
        ok = rec.ok
        return (
            f"pair-euler/n{cfg.n}/g{cfg.g}: chi={rec.chi_pair} expected={rec.expected}",
            ok,
            "" if ok else f"chi_pair={rec.chi_pair} expected={rec.expected}",
        )

    cases.append(point_case)
    if cfg.n >= 2:

        def ydim_case():
            rec, expected, ok = rrdim.y_dimension_identity(cfg.n, cfg.g)
            return (
                f"y-dim/n{cfg.n}/g{cfg.g}: {rec.moduli_term}+{rec.extension_term}+{rec.torsor_term}"
                f"={rec.total} expected={expected}",
                ok,
                "" if ok else f"total={rec.total} expected={expected}",
            )

        cases.append(ydim_case)

    def range_case():
        bad = [
            (n, g)
            for n in range(1, 21)
            for g in range(2, 21)
            if not rrdim.pair_euler_identity(n, g).ok
        ]
        bad += [
            (n, g)
            for n in range(2, 21)
            for g in range(2, 21)
            if not rrdim.y_dimension_identity(n, g)[2]
        ]
        return ("numeric-range/n<=20/g<=20", not bad, "" if not bad else f"failures at {bad[:5]}")

    def symbolic_case():
        ok = rrdim.pair_euler_identity_symbolic().is_zero and rrdim.y_dimension_symbolic().is_zero
        return ("symbolic-zero-polynomials", ok, "" if ok else "nonzero polynomial")

    cases.append(range_case)
    cases.append(symbolic_case)
    return cases


def _stability_cases(cfg: SuiteConfig):
    def scan_case():
        checked, bad = rrdim.stability_scan(genus_range=range(2, cfg.g + 5))
        return (
            f"stability-scan/{checked}-cases",
            not bad,
            "" if not bad else f"counterexamples {bad[:3]}",
        )

    return [scan_case]


_SUITE_BUILDERS = {
    "moment-equivariance": _moment_equivariance_cases,
    "gaiotto": _gaiotto_cases,
    "petri": _petri_cases,
    "cech": _cech_cases,
    "hecke": _hecke_cases,
    "cocycle": _cocycle_cases,
    "bbflow": _bbflow_cases,
    "dims": _dims_cases,
    "stability-scan": _stability_cases,
}


def _worker_count() -> int:
    raw = os.environ.get(WORKER_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_suite(config: SuiteConfig) -> SuiteReport:
    """Execute the named suite; deterministic in (config, seed).  Trials may
    run on several workers, but results are assembled in trial order."""
    start = time.monotonic()
    if config.suite == "all":
        names = [s for s in SUITE_NAMES if s != "all"]
        case_fns = []
        for name in names:
            for fn in _SUITE_BUILDERS[name](config):
                case_fns.append((name, fn))
    else:
        case_fns = [(config.suite, fn) for fn in _SUITE_BUILDERS[config.suite](config)]

    workers = _worker_count()
    thunks = [fn for _, fn in case_fns]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(lambda f: f(), thunks))
    else:
        results = [f() for f in thunks]

    failures = []
    passed = 0
    for (name, _), (case_id, ok, desc) in zip(case_fns, results):
        full_id = case_id if config.suite != "all" else f"{name}/{case_id}"
        if ok:
            passed += 1
        else:
            failures.append((full_id, desc))
    return SuiteReport(
        suite=config.suite,
        config=asdict(config),
        passed=passed,
        failed=len(failures),
        failures=failures,
        wall_time=time.monotonic() - start,
    )
