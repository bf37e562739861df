"""Check registry behind the verification CLI and the acceptance suite.

Every check is an exact identity (or an explicit numeric bound in the
``specfun`` suite) evaluated at one configuration (m, n).  Checks carry a
human-readable identity string, return pass/fail/skip plus a witness on
failure, and never raise: unexpected exceptions are reported as failures.
"""

from __future__ import annotations

import dataclasses
import json
import math
import random
import time
from fractions import Fraction

from . import linalg
from .algebra import (R2, Signature, SuperPolynomial, angular_L, bessel,
                      bessel_modified, dim_P, euler, laplacian, monomial_keys,
                      monomials_up_to, random_polynomial)
from .bipoly import pairing_power
from .fock import (bf_mono_pair, bf_product, bf_product_shift_oracle, gram,
                   gram_nullspace, gram_rank, kernel, kernel_pair,
                   pi_complex_apply, rho_apply, rho_lowering, rho_raising)
from .harmonics import (dim_harmonic, fischer_decompose, generalized_basis,
                        harmonic_basis, harmonic_dim_nullspace)
from .integral import (berezin, gamma_closed_form, gamma_engine, integrate_w,
                       radial_integral, sphere_moment, w_form, DivergenceError)
from .liealg import TKK, k_center_dimension, k_closes, tkk_for
from .quotient import (graded_dim_F, ideal_member, is_normal_form,
                       normal_form_keys, reduce_poly, reduce_with_quotient)
from .scalars import HALF, I, ONE, PiScalar, QQi
from .schrodinger import (WElement, abs_X, RadialPower, diffop_on_w, euler_w,
                          lowest_vector, make_w, pi_apply, radial_expand)
from .sbtransform import (SBTransform, b_series_coeff, b_series_truncation,
                          exp_z0_truncation)
from . import specfun
from .algebra import theta2

ALL_SUITES = ("algebra", "quotient", "harmonics", "liealg", "schrodinger",
              "integral", "fock", "sb", "specfun")


@dataclasses.dataclass
class RunConfig:
    m: int
    n: int
    max_degree: int = 3
    suites: tuple[str, ...] = ALL_SUITES
    seed: int = 0
    out: str | None = None
    fmt: str = "text"

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("m must be at least 2")
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        bad = [s for s in self.suites if s not in ALL_SUITES]
        if bad:
            raise ValueError(f"unknown suites: {bad}")

    @property
    def M(self) -> int:
        return self.m - 2 * self.n


@dataclasses.dataclass
class CheckResult:
    suite: str
    name: str
    identity: str
    status: str  # pass | fail | skip
    detail: str = ""
    seconds: float = 0.0


class Context:
    """Shared per-configuration caches used across suites."""

    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        self.sig = Signature(cfg.m, cfg.n)
        self.sig_z = Signature(cfg.m, cfg.n, varset="z")
        self.rng = random.Random(cfg.seed)
        self._tkk = None
        self._sb = None
        self._bf_tables: dict[int, tuple] = {}

    def bf_table(self, max_degree: int):
        """All pairings of monomials of degree <= max_degree, as a sparse dict."""
        cached = self._bf_tables.get(max_degree)
        if cached is not None:
            return cached
        keys = monomials_up_to(self.sig_z, max_degree)
        table = {}
        for ka in keys:
            for kb in keys:
                v = bf_mono_pair(self.sig_z, ka, kb)
                if not v.is_zero():
                    table[(ka, kb)] = v
        self._bf_tables[max_degree] = (keys, table)
        return keys, table

    @property
    def tkk(self) -> TKK:
        if self._tkk is None:
            self._tkk = tkk_for(self.sig)
        return self._tkk

    @property
    def sb(self) -> SBTransform:
        if self._sb is None:
            self._sb = SBTransform(self.sig, self.sig_z)
        return self._sb

    def w_monomials(self, max_deg: int) -> list[WElement]:
        return [make_w(SuperPolynomial.monomial(self.sig, key), 2)
                for d in range(max_deg + 1)
                for key in normal_form_keys(self.sig, d)]

    def fock_monomials(self, max_deg: int) -> list[SuperPolynomial]:
        return [SuperPolynomial.monomial(self.sig_z, key)
                for d in range(max_deg + 1)
                for key in normal_form_keys(self.sig_z, d)]

    def sample_polys(self, degree: int, count: int, sig=None) -> list[SuperPolynomial]:
        sig = sig or self.sig
        fixed = [SuperPolynomial.one(sig),
                 SuperPolynomial.variable(sig, 0),
                 SuperPolynomial.variable(sig, 1) + SuperPolynomial.variable(sig, 0).scale(I)]
        if sig.n:
            fixed.append(SuperPolynomial.variable(sig, sig.m)
                         * SuperPolynomial.variable(sig, sig.m + 1)
                         + SuperPolynomial.variable(sig, 1))
        sampled = [random_polynomial(sig, degree, self.rng) for _ in range(count)]
        return fixed + sampled


def run_check(suite: str, name: str, identity: str, fn) -> CheckResult:
    start = time.perf_counter()
    try:
        out = fn()
    except Exception as exc:  # fatal errors become failed checks
        return CheckResult(suite, name, identity, "fail",
                           f"{type(exc).__name__}: {exc}",
                           time.perf_counter() - start)
    dt = time.perf_counter() - start
    if out is None or out is True:
        return CheckResult(suite, name, identity, "pass", "", dt)
    if out is False:
        return CheckResult(suite, name, identity, "fail", "", dt)
    ok, detail = out
    return CheckResult(suite, name, identity, "pass" if ok else "fail", detail, dt)


def skip(suite: str, name: str, identity: str, reason: str) -> CheckResult:
    return CheckResult(suite, name, identity, "skip", reason)


# ---------------------------------------------------------------------------
# algebra suite
# ---------------------------------------------------------------------------


def check_sl2_triple(ctx: Context, max_degree: int = 5):
    sig = ctx.sig
    r2 = R2(sig)
    M = sig.M
    for d in range(max_degree + 1):
        for key in monomial_keys(sig, d):
            p = SuperPolynomial.monomial(sig, key)
            dp = laplacian(p)
            if laplacian(r2 * p) - r2 * dp != euler(p).scale(4) + p.scale(2 * M):
                return False, f"[Delta,R^2] fails on {p}"
            ep = euler(p)
            if laplacian(ep) - euler(dp) != dp.scale(2):
                return False, f"[Delta,E] fails on {p}"
            if r2 * ep - euler(r2 * p) != (r2 * p).scale(-2):
                return False, f"[R^2,E] fails on {p}"
    return True, f"checked all monomials of degree <= {max_degree}"


def check_bessel_tangential(ctx: Context, max_degree: int = 4):
    sig = ctx.sig
    lam = QQi(2 - sig.M)
    r2 = R2(sig)
    for d in range(max_degree - 1):
        for key in monomial_keys(sig, d):
            q = SuperPolynomial.monomial(sig, key)
            for k in range(sig.nvars):
                if not ideal_member(bessel(lam, k, r2 * q)):
                    return False, f"B_(2-M)(x_{k}) leaks on R^2*{q}"
    # a counterexample must exist one parameter off
    lam_bad = QQi(3 - sig.M)
    for d in range(4):
        for key in monomial_keys(sig, d):
            q = SuperPolynomial.monomial(sig, key)
            for k in range(sig.nvars):
                if not ideal_member(bessel(lam_bad, k, r2 * q)):
                    return True, f"witness at lambda=3-M: k={k}, q={q}"
    return False, "no counterexample found at lambda = 3-M"


def check_bessel_product_rule(ctx: Context, max_degree: int = 3):
    sig = ctx.sig
    lam = QQi(2 - sig.M)
    monos = monomials_up_to(sig, max_degree)
    nv = sig.nvars
    cache = []
    for key in monos:
        p = SuperPolynomial.monomial(sig, key)
        cache.append((p, euler(p), laplacian(p), [p.d_lower(r) for r in range(nv)]))
    for (phi, ephi, lphi, dphi) in cache:
        pphi = phi.parity()
        for (psi, epsi, lpsi, dpsi) in cache:
            prod = phi * psi
            lprod = laplacian(prod)
            # the index-independent cross term
            cross = SuperPolynomial.zero(sig)
            for r, s, b in sig.beta_inv_pairs:
                sr = -1 if (pphi and sig.parity(r)) else 1
                cross = cross + (dphi[r] * dpsi[s]).scale(b * sr)
            for i in range(nv):
                si = -1 if (sig.parity(i) and pphi) else 1
                bphi = dphi[i].scale(-lam) + euler(dphi[i]).scale(2) - lphi.mul_var(i)
                bpsi = dpsi[i].scale(-lam) + euler(dpsi[i]).scale(2) - lpsi.mul_var(i)
                rhs = bphi * psi + (phi * bpsi).scale(si) \
                    + (ephi * dpsi[i]).scale(2 * si) \
                    + (dphi[i] * epsi).scale(2) \
                    - cross.mul_var(i).scale(2)
                dprod = prod.d_lower(i)
                lhs = dprod.scale(-lam) + euler(dprod).scale(2) - lprod.mul_var(i)
                if lhs != rhs:
                    return False, f"product rule fails: i={i}, phi={phi}, psi={psi}"
    return True, f"all monomial pairs of degree <= {max_degree}"


def check_bessel_supercommute(ctx: Context, max_degree: int = 3):
    sig = ctx.sig
    for d in range(max_degree + 1):
        for key in monomial_keys(sig, d):
            p = SuperPolynomial.monomial(sig, key)
            for i in range(sig.nvars):
                bi = bessel_modified(i, p)
                for j in range(i, sig.nvars):
                    s = -1 if (sig.parity(i) and sig.parity(j)) else 1
                    lhs = bessel_modified(j, bi)
                    rhs = bessel_modified(i, bessel_modified(j, p)).scale(s)
                    if lhs != rhs.scale(1):
                        return False, f"supercommutativity fails at ({i},{j}) on {p}"
    return True, ""


def check_bessel_commutator(ctx: Context, max_degree: int = 4):
    sig = ctx.sig
    lam = QQi(2 - sig.M)
    M = sig.M
    for d in range(max_degree + 1):
        for key in monomial_keys(sig, d):
            p = SuperPolynomial.monomial(sig, key)
            for i in range(sig.nvars):
                for j in range(sig.nvars):
                    s = -1 if (sig.parity(i) and sig.parity(j)) else 1
                    lhs = bessel(lam, i, p.mul_var(j)) - bessel(lam, i, p).mul_var(j).scale(s)
                    if i == j and sig.parity(i) == 0:
                        lij = SuperPolynomial.zero(sig)
                    else:
                        lij = angular_L(i, j, p)
                    rhs = (p.scale(M - 2) + euler(p).scale(2)).scale(sig.beta[i][j]) \
                        - lij.scale(2)
                    if lhs != rhs:
                        return False, f"commutator fails at ({i},{j}) on {p}"
    return True, ""


def check_angular_commutes(ctx: Context, max_degree: int = 4):
    sig = ctx.sig
    r2 = R2(sig)
    pairs = [(i, j) for i in range(sig.nvars) for j in range(sig.nvars)
             if i != j or sig.parity(i)]
    for d in range(max_degree + 1):
        for key in monomial_keys(sig, d):
            p = SuperPolynomial.monomial(sig, key)
            for (i, j) in pairs:
                lp = angular_L(i, j, p)
                if angular_L(i, j, r2 * p) != r2 * lp:
                    return False, f"[L_{i}{j}, R^2] fails on {p}"
                if angular_L(i, j, euler(p)) != euler(lp):
                    return False, f"[L_{i}{j}, E] fails on {p}"
                if angular_L(i, j, laplacian(p)) != laplacian(lp):
                    return False, f"[L_{i}{j}, Delta] fails on {p}"
    return True, ""


def check_serialization(ctx: Context):
    polys = ctx.sample_polys(3, 6)
    for p in polys:
        if str(p) != str(SuperPolynomial(p.sig, dict(p.terms))):
            return False, "nondeterministic rendering"
    canon = str(R2(ctx.sig))
    if "*" not in canon:
        return False, canon
    return True, ""


def suite_algebra(ctx: Context):
    d = min(ctx.cfg.max_degree + 2, 5)
    yield run_check("algebra", "sl2-triple",
                    "[Delta,R^2]=4E+2M, [Delta,E]=2Delta, [R^2,E]=-2R^2",
                    lambda: check_sl2_triple(ctx, d))
    yield run_check("algebra", "bessel-tangentiality",
                    "B_(2-M) preserves <R^2>; B_(3-M) does not",
                    lambda: check_bessel_tangential(ctx, min(ctx.cfg.max_degree + 1, 4)))
    yield run_check("algebra", "bessel-product-rule",
                    "six-term expansion of B(x_i)(phi psi)",
                    lambda: check_bessel_product_rule(ctx, min(ctx.cfg.max_degree, 3)))
    yield run_check("algebra", "bessel-supercommutativity",
                    "B(x_i)B(x_j) = (-1)^{|i||j|} B(x_j)B(x_i)",
                    lambda: check_bessel_supercommute(ctx, min(ctx.cfg.max_degree, 3)))
    yield run_check("algebra", "bessel-commutator",
                    "[B(x_i), x_j] = beta_ij(M-2+2E) - 2L_ij",
                    lambda: check_bessel_commutator(ctx, min(ctx.cfg.max_degree, 3)))
    yield run_check("algebra", "angular-commutant",
                    "L_ij commutes with R^2, E, Delta",
                    lambda: check_angular_commutes(ctx, min(ctx.cfg.max_degree + 1, 4)))
    yield run_check("algebra", "serialization-deterministic",
                    "rendering is deterministic", lambda: check_serialization(ctx))


# ---------------------------------------------------------------------------
# quotient suite
# ---------------------------------------------------------------------------


def check_reduce_ring(ctx: Context, samples: int = 30):
    sig = ctx.sig
    z0 = SuperPolynomial.variable(sig, 0)
    from .algebra import r2_small
    if reduce_poly(z0 * z0) != r2_small(sig):
        return False, "x0^2 does not reduce to r^2"
    if not reduce_poly(R2(sig)).is_zero():
        return False, "R^2 does not reduce to zero"
    for p in ctx.sample_polys(4, samples):
        nf, q = reduce_with_quotient(p)
        if not is_normal_form(nf) or nf + R2(sig) * q != p:
            return False, f"division identity fails on {p}"
        if reduce_poly(nf) != nf:
            return False, f"reduction not idempotent on {p}"
        for p2 in ctx.sample_polys(3, 2):
            if reduce_poly(p * p2) != reduce_poly(reduce_poly(p) * reduce_poly(p2)):
                return False, "reduction is not multiplicative mod the ideal"
    if not ideal_member(R2(sig) * SuperPolynomial.variable(sig, 1)):
        return False, "membership fails on an obvious multiple"
    if ideal_member(SuperPolynomial.variable(sig, 1)):
        return False, "membership accepts a non-member"
    return True, ""


def check_dimension_chain(ctx: Context, max_degree: int = 5):
    sig, sig_z = ctx.sig, ctx.sig_z
    for k in range(max_degree + 1):
        fd = graded_dim_F(k, sig_z)
        closed = dim_P(sig.m - 1, sig.n, k) + dim_P(sig.m - 1, sig.n, k - 1)
        null = harmonic_dim_nullspace(k, sig)
        formula = dim_harmonic(k, sig)
        if not fd.count == closed == null == formula:
            return False, f"k={k}: count={fd.count} closed={closed} " \
                          f"nullspace={null} formula={formula}"
    return True, f"F_k = P_k + P_(k-1) = H_k for k <= {max_degree}"


def suite_quotient(ctx: Context):
    yield run_check("quotient", "normal-form-ring",
                    "x0^2 -> r^2 rewriting is an idempotent ring reduction",
                    lambda: check_reduce_ring(ctx))
    yield run_check("quotient", "dimension-chain",
                    "dim F_k = dim P_k(m-1|2n) + dim P_(k-1)(m-1|2n) = dim H_k(m|2n)",
                    lambda: check_dimension_chain(ctx, min(ctx.cfg.max_degree + 2, 5)))


# ---------------------------------------------------------------------------
# harmonics suite
# ---------------------------------------------------------------------------


def check_dim_formulas_grid(m_max: int = 7, n_max: int = 2, k_max: int = 6):
    for m in range(2, m_max + 1):
        for n in range(n_max + 1):
            sig = Signature(m, n)
            for k in range(k_max + 1):
                dim_harmonic(k, sig)  # raises if the two closed forms disagree
    return True, f"m <= {m_max}, n <= {n_max}, k <= {k_max}"


def check_harmonic_basis_sizes(ctx: Context, max_degree: int = 4):
    sig = ctx.sig
    for k in range(max_degree + 1):
        basis = harmonic_basis(k, sig)
        if len(basis) != dim_harmonic(k, sig):
            return False, f"k={k}: basis {len(basis)} != formula {dim_harmonic(k, sig)}"
        for h in basis:
            if not laplacian(h).is_zero():
                return False, f"non-harmonic basis vector at k={k}"
            if euler(h) != h.scale(k):
                return False, f"non-homogeneous basis vector at k={k}"
    return True, ""


def check_fischer(ctx: Context, max_degree: int = 4):
    sig = ctx.sig
    M = sig.M
    exceptional = M <= 0 and M % 2 == 0
    if exceptional:
        try:
            fischer_decompose(SuperPolynomial.variable(sig, 1))
        except ValueError:
            return True, "exceptional M: decomposition correctly refused"
        return False, "decomposition did not refuse exceptional M"
    for d in range(max_degree + 1):
        total = sum(dim_harmonic(d - 2 * j, sig) for j in range(d // 2 + 1))
        if total != dim_P(sig.m, sig.n, d):
            return False, f"dimension sum fails at degree {d}"
    for p in ctx.sample_polys(3, 6):
        for d, comp in p.homogeneous_components().items():
            parts = fischer_decompose(comp)  # raises if reconstruction fails
            for _, h in parts:
                if not laplacian(h).is_zero():
                    return False, f"non-harmonic component at degree {d}"
    return True, ""


def check_generalized(ctx: Context, k: int = 3):
    sig = ctx.sig
    gsh = generalized_basis(k, sig)
    hb = harmonic_basis(k, sig)
    dom = {key: r for r, key in enumerate(monomial_keys(sig, k))}
    cols = [{dom[kk]: c for kk, c in g.terms.items()} for g in gsh]
    for h in hb:
        target = {dom[kk]: c for kk, c in h.terms.items()}
        if linalg.solve_columns(cols, target) is None:
            return False, "harmonics not contained in generalized harmonics"
    M = sig.M
    if M <= 0 and M % 2 == 0:
        if len(gsh) <= len(hb):
            return False, "exceptional case: generalized space not strictly larger"
        return True, f"exceptional M: dim GSH_{k}={len(gsh)} > dim H_{k}={len(hb)}"
    return True, f"dim GSH_{k}={len(gsh)}, dim H_{k}={len(hb)}"


def suite_harmonics(ctx: Context):
    yield run_check("harmonics", "dimension-formulas",
                    "dim P_k - dim P_(k-2) = dim P_k(m-1) + dim P_(k-1)(m-1)",
                    lambda: check_dim_formulas_grid())
    yield run_check("harmonics", "nullspace-basis",
                    "harmonic basis = exact kernel of Delta on P_k",
                    lambda: check_harmonic_basis_sizes(ctx, min(ctx.cfg.max_degree + 1, 4)))
    yield run_check("harmonics", "fischer-decomposition",
                    "p = sum_j R^(2j) h_(k-2j) with harmonic components",
                    lambda: check_fischer(ctx, min(ctx.cfg.max_degree + 1, 5)))
    yield run_check("harmonics", "generalized-harmonics",
                    "ker(Delta R^2 Delta) contains ker(Delta); strictly larger iff M in -2N",
                    lambda: check_generalized(ctx))


# ---------------------------------------------------------------------------
# liealg suite
# ---------------------------------------------------------------------------


def check_jordan(ctx: Context, triples: int = 80):
    tkk = ctx.tkk
    J = tkk.jordan
    sig = ctx.sig
    nv = sig.nvars
    e0 = [ONE] + [QQi(0)] * (nv - 1)
    if J.multiply(e0, e0) != e0:
        return False, "unit is not idempotent"
    for i in range(nv):
        a = [QQi(0)] * nv
        a[i] = ONE
        if J.multiply(e0, a) != a or J.multiply(a, e0) != a:
            return False, f"unit fails on e_{i}"
    for i in range(nv):
        for j in range(nv):
            ei = J.basis_product(i, j)
            ej = J.basis_product(j, i)
            s = QQi(-1 if (sig.parity(i) and sig.parity(j)) else 1)
            if ei != [v * s for v in ej]:
                return False, f"supercommutativity fails at ({i},{j})"
    # Jordan identity on sampled basis triples, as a matrix identity
    from .liealg import _graded_comm

    def lmat(vec):
        out = [[QQi(0)] * nv for _ in range(nv)]
        for l, v in enumerate(vec):
            if v:
                m = J.left_mult_matrix(l)
                for r in range(nv):
                    for c in range(nv):
                        if m[r][c]:
                            out[r][c] = out[r][c] + v * m[r][c]
        return out

    rng = ctx.rng
    for _ in range(triples):
        x, y, z = (rng.randrange(nv) for _ in range(3))
        px, py, pz = (sig.parity(t) for t in (x, y, z))
        acc = [[QQi(0)] * nv for _ in range(nv)]
        for (a, b, c, pa, pb, pc) in ((x, y, z, px, py, pz),
                                      (y, z, x, py, pz, px),
                                      (z, x, y, pz, px, py)):
            comm = _graded_comm(J.left_mult_matrix(a), lmat(J.basis_product(b, c)),
                                pa, (pb + pc) & 1)
            sgn = QQi(-1 if (pa and pc) else 1)
            for r in range(nv):
                for cc in range(nv):
                    if comm[r][cc]:
                        acc[r][cc] = acc[r][cc] + sgn * comm[r][cc]
        if any(any(v for v in row) for row in acc):
            return False, f"Jordan identity fails on basis triple ({x},{y},{z})"
    return True, ""


def check_tkk_axioms(ctx: Context, full_jacobi_limit: int = 36):
    tkk = ctx.tkk
    dim = tkk.dim
    for a in range(dim):
        X = tkk.basis_element(a)
        for b in range(dim):
            Y = tkk.basis_element(b)
            s = -1 if (tkk.parity(a) and tkk.parity(b)) else 1
            if tkk.bracket(X, Y) != tkk.bracket(Y, X).scale(-s):
                return False, f"antisymmetry fails at ({a},{b})"
    if dim <= full_jacobi_limit:
        triples = [(a, b, c) for a in range(dim) for b in range(dim) for c in range(dim)]
    else:
        rng = ctx.rng
        triples = [(rng.randrange(dim), rng.randrange(dim), rng.randrange(dim))
                   for _ in range(2000)]
    for (a, b, c) in triples:
        X, Y, Z = (tkk.basis_element(t) for t in (a, b, c))
        s = -1 if (tkk.parity(a) and tkk.parity(b)) else 1
        lhs = tkk.bracket(X, tkk.bracket(Y, Z))
        rhs = tkk.bracket(tkk.bracket(X, Y), Z) \
            + tkk.bracket(Y, tkk.bracket(X, Z)).scale(s)
        if lhs != rhs:
            return False, f"Jacobi fails at ({a},{b},{c})"
    mode = "all" if dim <= full_jacobi_limit else "sampled"
    return True, f"antisymmetry on all pairs; Jacobi on {mode} triples"


def check_cayley(ctx: Context):
    tkk = ctx.tkk
    nv = ctx.sig.nvars
    for l in range(nv):
        if tkk.cayley(tkk.minus(l)) != tkk.minus(l, QQi(1, 0, 4)) + tkk.L(l, I) + tkk.plus(l):
            return False, f"closed form fails on minus e_{l}"
        if tkk.cayley(tkk.L(l)) != tkk.minus(l, I * QQi(1, 0, 4)) + tkk.plus(l, -I):
            return False, f"closed form fails on L_{l}"
        if tkk.cayley(tkk.plus(l)) != tkk.minus(l, QQi(1, 0, 4)) + tkk.L(l, -I) + tkk.plus(l):
            return False, f"closed form fails on plus e_{l}"
    for (i, j) in tkk.inn_pairs:
        if tkk.cayley(tkk.inn(i, j)) != tkk.inn(i, j):
            return False, f"inner derivation not fixed: ({i},{j})"
    for a in range(tkk.dim):
        X = tkk.basis_element(a)
        for b in range(tkk.dim):
            Y = tkk.basis_element(b)
            if tkk.cayley(tkk.bracket(X, Y)) != tkk.bracket(tkk.cayley(X), tkk.cayley(Y)):
                return False, f"bracket preservation fails at ({a},{b})"
    # image of the compact-side subalgebra lands in the structure algebra
    from .liealg import k_basis
    for x in k_basis(tkk):
        cx = tkk.cayley(x)
        if cx.part("minus") or cx.part("plus"):
            return False, "image of (a, I, -a) has nonzero odd grade"
    return True, "closed forms, bracket preservation, and c(k) in istr"


def check_realization(ctx: Context, max_degree: int = 2, pair_limit: int = 900):
    tkk = ctx.tkk
    bsig = tkk.big_signature
    polys = [SuperPolynomial.monomial(bsig, key)
             for key in monomials_up_to(bsig, max_degree)]
    ops = {a: tkk.realize(tkk.basis_element(a)) for a in range(tkk.dim)}
    pairs = [(a, b) for a in range(tkk.dim) for b in range(tkk.dim)]
    if len(pairs) > pair_limit:
        rng = ctx.rng
        pairs = [tuple(rng.sample(range(tkk.dim), 1) * 2) for _ in range(0)] or \
            [(rng.randrange(tkk.dim), rng.randrange(tkk.dim)) for _ in range(pair_limit)]
    for (a, b) in pairs:
        br = tkk.realize(tkk.bracket(tkk.basis_element(a), tkk.basis_element(b)))
        s = -1 if (tkk.parity(a) and tkk.parity(b)) else 1
        for p in polys:
            lhs = ops[a](ops[b](p)) - ops[b](ops[a](p)).scale(s)
            if lhs != br(p):
                return False, f"homomorphism fails at pair ({a},{b})"
    return True, f"{len(pairs)} basis pairs on monomials of degree <= {max_degree}"


def check_osp_matrices(ctx: Context):
    tkk = ctx.tkk
    bsig = tkk.big_signature
    bb = bsig.beta
    nv = bsig.nvars
    for a in range(tkk.dim):
        mat = tkk.osp_matrix(tkk.basis_element(a))
        pX = tkk.parity(a)
        for u in range(nv):
            su = QQi(-1 if (bsig.parity(u) and pX) else 1)
            for v in range(nv):
                lhs = QQi(0)
                for r in range(nv):
                    if mat[r][u]:
                        lhs = lhs + mat[r][u] * bb[r][v]
                rhs = QQi(0)
                for r in range(nv):
                    if mat[r][v]:
                        rhs = rhs + bb[u][r] * mat[r][v]
                if not (lhs + su * rhs).is_zero():
                    return False, f"metric not preserved by basis element {a}"
    return True, ""


def check_k_subalgebra(ctx: Context):
    tkk = ctx.tkk
    if not k_closes(tkk):
        return False, "k does not close under the bracket"
    cd = k_center_dimension(tkk)
    if cd != 1:
        return False, f"center of k has dimension {cd}, expected 1"
    return True, "k closes; one-dimensional center"


def check_struct_export(ctx: Context):
    tkk = ctx.tkk
    a = tkk.structure_constants_json()
    b = tkk.structure_constants_json()
    if a != b:
        return False, "export not deterministic"
    json.loads(a)
    return True, f"{len(a)} bytes"


def suite_liealg(ctx: Context):
    yield run_check("liealg", "jordan-product",
                    "unit, supercommutativity of the spin-factor product",
                    lambda: check_jordan(ctx))
    yield run_check("liealg", "tkk-axioms",
                    "graded antisymmetry and graded Jacobi identity",
                    lambda: check_tkk_axioms(ctx))
    yield run_check("liealg", "cayley",
                    "c(a,0,0)=(a/4,iL_a,a); c(0,L_a+I,0)=(ia/4,I,-ia); "
                    "c(0,0,a)=(a/4,-iL_a,a); c[X,Y]=[cX,cY]",
                    lambda: check_cayley(ctx))
    yield run_check("liealg", "differential-realization",
                    "[D(X),D(Y)] = D([X,Y]) on low-degree polynomials",
                    lambda: check_realization(ctx))
    yield run_check("liealg", "matrix-model",
                    "<Xu,v> + (-1)^{|u||X|}<u,Xv> = 0 for the block metric",
                    lambda: check_osp_matrices(ctx))
    yield run_check("liealg", "k-subalgebra",
                    "closure of {(x,I,-x)} and its one-dimensional center",
                    lambda: check_k_subalgebra(ctx))
    yield run_check("liealg", "structure-constants-export",
                    "JSON export is valid and deterministic",
                    lambda: check_struct_export(ctx))


# ---------------------------------------------------------------------------
# schrodinger suite
# ---------------------------------------------------------------------------


def check_pi_examples(ctx: Context):
    sig = ctx.sig
    tkk = ctx.tkk
    M = sig.M
    v0 = lowest_vector(sig)
    x0 = SuperPolynomial.variable(sig, 0)
    if pi_apply(tkk.minus(0), v0).poly != x0.scale(-2 * I):
        return False, "multiplication case fails on the lowest vector"
    want = SuperPolynomial.constant(sig, QQi(2 - M, 0, 2)) + x0.scale(2)
    if pi_apply(tkk.L(0), v0).poly != want:
        return False, "Euler case fails on the lowest vector"
    for k in range(1, sig.nvars):
        if pi_apply(tkk.plus(k), v0).poly != SuperPolynomial.variable(sig, k).scale(-2 * I):
            return False, f"Bessel case fails at k={k}"
    e4 = make_w(SuperPolynomial.one(sig), 4)
    got = diffop_on_w(("bessel_mod", 0), e4).scale(HALF)
    if got.poly != x0.scale(8) + SuperPolynomial.constant(sig, 4 - 2 * M):
        return False, "halved Bessel operator on the rate-4 vector"
    if diffop_on_w(("E",), v0).poly != x0.scale(-2):
        return False, "Euler operator on the lowest vector"
    return True, ""


def check_pi_representation(ctx: Context, max_degree: int = 2):
    sig = ctx.sig
    tkk = ctx.tkk
    fs = ctx.w_monomials(max_degree)
    for a in range(tkk.dim):
        X = tkk.basis_element(a)
        Xfs = [pi_apply(X, f) for f in fs]
        for b in range(a, tkk.dim):
            Y = tkk.basis_element(b)
            Z = tkk.bracket(X, Y)
            s = QQi(-1 if (tkk.parity(a) and tkk.parity(b)) else 1)
            for f, Xf in zip(fs, Xfs):
                lhs = pi_apply(X, pi_apply(Y, f)).poly \
                    - pi_apply(Y, Xf).poly.scale(s)
                if reduce_poly(lhs) != pi_apply(Z, f).poly:
                    return False, f"pairs ({a},{b}) on {f.poly}"
    return True, f"all basis pairs on monomial vectors of degree <= {max_degree}"


def check_representative_independence(ctx: Context, samples: int = 15):
    sig = ctx.sig
    descriptors = [("E",), ("Delta",), ("L", 0, 1), ("L", 1, 2),
                   ("bessel_mod", 0), ("bessel_mod", 1)]
    if sig.n:
        descriptors += [("L", sig.m, sig.m + sig.n), ("bessel_mod", sig.m)]
    for q in ctx.sample_polys(3, samples):
        for p in ctx.sample_polys(2, 3):
            base = make_w(q, 2)
            shifted = make_w(q + R2(sig) * p, 2)
            for d in descriptors:
                if diffop_on_w(d, base) != diffop_on_w(d, shifted):
                    return False, f"{d} depends on the representative"
    return True, ""


def check_radial(ctx: Context):
    sig = ctx.sig
    if sig.n == 0:
        x0 = SuperPolynomial.variable(sig, 0)
        sq = radial_expand(x0, [x0 * x0, x0.scale(2), SuperPolynomial.constant(sig, 2)])
        if sq != x0 * x0:
            return False, "polynomial table expansion"
        return True, "no odd variables; square expansion only"
    th = SuperPolynomial.variable(sig, sig.m) * SuperPolynomial.variable(sig, sig.m + 1)
    if radial_expand(th, [1] * (2 * sig.n + 1)) != SuperPolynomial.one(sig) + th:
        return False, "exponential-table expansion of a nilpotent"
    x0 = SuperPolynomial.variable(sig, 0)
    f = x0 + th
    table = [x0 * x0, x0.scale(2), SuperPolynomial.constant(sig, 2)] + [0] * (2 * sig.n)
    if radial_expand(f, table) != f * f:
        return False, "square-table expansion"
    aX = abs_X(sig)
    want = RadialPower.u_power(sig, 2) + \
        RadialPower.from_odd_poly(theta2(sig).scale(Fraction(1, 2)))
    if aX * aX != want:
        return False, "the radial square root does not square back"
    return True, ""


def suite_schrodinger(ctx: Context):
    yield run_check("schrodinger", "action-table",
                    "multiplication/Euler/Bessel values on the lowest vector",
                    lambda: check_pi_examples(ctx))
    yield run_check("schrodinger", "representation-property",
                    "[pi(X),pi(Y)] = pi([X,Y]) on low-degree vectors",
                    lambda: check_pi_representation(ctx, 2))
    yield run_check("schrodinger", "representative-independence",
                    "tangential operators ignore R^2 shifts of the representative",
                    lambda: check_representative_independence(ctx))
    yield run_check("schrodinger", "radial-superfunctions",
                    "terminating Taylor composition; |X|^2 = (x0^2+r^2)/2",
                    lambda: check_radial(ctx))


# ---------------------------------------------------------------------------
# integral suite
# ---------------------------------------------------------------------------


def check_normalization(ctx: Context):
    sig = ctx.sig
    one = SuperPolynomial.one(sig)
    if integrate_w((one, 4)) != QQi(1):
        return False, "normalized integral of the squared lowest vector is not 1"
    engine = gamma_engine(sig)
    closed = gamma_closed_form(sig.m, sig.n)
    expected_ratio = PiScalar.of(QQi(2 ** sig.n))
    ratio = engine / closed
    if ratio != expected_ratio:
        return False, f"engine gamma {engine} vs closed form {closed}: ratio {ratio}"
    detail = f"gamma = {engine}"
    if sig.n:
        detail += f" = 2^{sig.n} x closed form {closed}"
    if (sig.m, sig.n) == (4, 0):
        if engine != PiScalar.of(QQi(1, 0, 4), 2):
            return False, f"(4,0) gamma is {engine}, expected pi/4"
        detail = "gamma = pi/4 (engine and closed form)"
    return True, detail


def check_integral_well_defined(ctx: Context, samples: int = 20):
    sig = ctx.sig
    for q in ctx.sample_polys(3, samples):
        a = integrate_w((q, 4))
        for p in ctx.sample_polys(3, 2):
            if integrate_w((q + R2(sig) * p, 4)) != a:
                return False, f"value moved under R^2 shift of {q}"
    return True, ""


def check_euler_vanishing(ctx: Context, samples: int = 20):
    sig = ctx.sig
    M = sig.M
    rate = Fraction(4)
    for q in ctx.sample_polys(3, samples):
        if integrate_w((euler_w(q, rate) + q.scale(M - 2), rate)) != QQi(0):
            return False, f"(E + M - 2) integral fails on {q}"
    return True, ""


def check_pi_skew(ctx: Context, max_degree: int = 2):
    sig = ctx.sig
    tkk = ctx.tkk
    fs = ctx.w_monomials(max_degree)
    for a in range(tkk.dim):
        X = tkk.basis_element(a)
        pX = tkk.parity(a)
        Xfs = [pi_apply(X, f) for f in fs]
        for f, Xf in zip(fs, Xfs):
            sgn = QQi(-1 if (pX and f.poly.parity()) else 1)
            for g, Xg in zip(fs, Xfs):
                if w_form(Xf, g) + sgn * w_form(f, Xg) != QQi(0):
                    return False, f"{tkk.basis_label(a)} on ({f.poly}, {g.poly})"
    return True, f"every basis element on vectors of degree <= {max_degree}"


def check_form_superhermitian(ctx: Context, max_degree: int = 2):
    fs = ctx.w_monomials(max_degree)
    for f in fs:
        pf = f.poly.parity()
        for g in fs:
            s = QQi(-1 if (pf and g.poly.parity()) else 1)
            if w_form(f, g) != s * w_form(g, f).conjugate():
                return False, f"({f.poly}, {g.poly})"
    v0 = lowest_vector(ctx.sig)
    if w_form(v0, v0) != QQi(1):
        return False, "lowest vector does not have unit norm"
    return True, ""


def check_integral_primitives(ctx: Context):
    from .scalars import gamma_half
    sig = ctx.sig
    area = PiScalar.of(2) * PiScalar.of(1, sig.m - 1) / gamma_half(sig.m - 1)
    if sphere_moment((0,) * (sig.m - 1), sig.m) != area:
        return False, "sphere area mismatch"
    if radial_integral(1, Fraction(4)) != Fraction(1, 16):
        return False, "radial integral (1, 4)"
    if radial_integral(0, Fraction(4)) != Fraction(1, 4):
        return False, "radial integral (0, 4)"
    try:
        radial_integral(-1, Fraction(4))
        return False, "negative power did not raise"
    except DivergenceError:
        pass
    if sig.n:
        # the canonical top monomial integrates to +1
        top = SuperPolynomial.one(sig)
        for i in reversed(range(sig.m, sig.nvars)):
            top = top.mul_var(i)
        if berezin(top) != SuperPolynomial.one(sig):
            return False, "Berezin of the canonical top monomial"
        if not berezin(SuperPolynomial.one(sig)).is_zero():
            return False, "Berezin of 1 should vanish"
        if sig.n == 1:
            lone = SuperPolynomial.variable(sig, sig.m + 1)
            if not berezin(lone).is_zero():
                return False, "Berezin below top degree should vanish"
    moment = sphere_moment((1,) + (0,) * (sig.m - 2), sig.m)
    if not moment.is_zero():
        return False, "odd moment should vanish"
    return True, ""


def suite_integral(ctx: Context):
    gate = ctx.cfg.M >= 4
    checks = [
        ("normalization", "integral of exp(-4|X|) is 1; gamma matches the closed form "
                          "up to the arbitrated 2^n factor", check_normalization),
        ("well-defined", "value is invariant under adding R^2 p", check_integral_well_defined),
        ("euler-vanishing", "integral of (E + M - 2) f vanishes", check_euler_vanishing),
        ("pi-skew-supersymmetry",
         "<pi(X)f, g> = -(-1)^{|X||f|} <f, pi(X)g>", check_pi_skew),
        ("superhermitian", "<f,g> = (-1)^{|f||g|} conj <g,f>", check_form_superhermitian),
        ("primitives", "sphere moments, radial integrals, Berezin values",
         check_integral_primitives),
    ]
    for name, ident, fn in checks:
        if not gate:
            yield skip("integral", name, ident, f"requires M >= 4, have M = {ctx.cfg.M}")
        else:
            yield run_check("integral", name, ident, lambda fn=fn: fn(ctx))


# ---------------------------------------------------------------------------
# fock suite
# ---------------------------------------------------------------------------


def check_bf_products(ctx: Context, max_degree: int = 4):
    sig = ctx.sig_z
    M = sig.M
    z0 = SuperPolynomial.variable(sig, 0)
    if bf_product(SuperPolynomial.one(sig), SuperPolynomial.one(sig)) != QQi(1):
        return False, "<1,1> != 1"
    if bf_product(z0, z0) != QQi(M - 2):
        return False, "<z0,z0> != M-2"
    if sig.n:
        zm = SuperPolynomial.variable(sig, sig.m)
        zmn = SuperPolynomial.variable(sig, sig.m + sig.n)
        if bf_product(zm, zmn) != QQi(2 - M) or bf_product(zmn, zm) != QQi(M - 2):
            return False, "odd-block values"
    keys, table = ctx.bf_table(max_degree)
    deg = {k: sum(k[0]) + len(k[1]) for k in keys}
    par = {k: len(k[1]) & 1 for k in keys}
    # orthogonality and superhermitianity from the table
    for (ka, kb), v in table.items():
        if deg[ka] != deg[kb]:
            return False, f"orthogonality fails at ({ka},{kb})"
        s = -1 if (par[ka] and par[kb]) else 1
        w = table.get((kb, ka), QQi(0))
        if v != QQi(s) * w.conjugate():
            return False, f"superhermitianity fails at ({ka},{kb})"
    # sesquilinearity on seeded combinations
    polys = ctx.sample_polys(2, 4, sig)
    for p in polys[:3]:
        for q in polys[:3]:
            a, b = QQi(1, 1, 2), QQi(0, -1)
            lhs = bf_product(p.scale(a), q.scale(b))
            if lhs != a * b.conjugate() * bf_product(p, q):
                return False, "sesquilinearity fails"
    # shift identity from the table
    for ka in keys:
        if deg[ka] > max_degree - 1:
            continue
        pa = SuperPolynomial.monomial(sig, ka)
        for i in range(sig.nvars):
            zia = pa.mul_var(i)
            if zia.is_zero():
                continue
            (zkey, zc), = zia.terms.items()
            for kb in keys:
                if deg[kb] != deg[ka] + 1:
                    continue
                lhs = zc * table.get((zkey, kb), QQi(0))
                rhs = QQi(0)
                for bkey, bc in bessel_modified(i, SuperPolynomial.monomial(sig, kb)).terms.items():
                    rhs = rhs + bc * table.get((ka, bkey), QQi(0))
                s = QQi(-1 if (sig.parity(i) and par[ka]) else 1)
                if lhs != s * rhs:
                    return False, f"shift identity fails: i={i}, p={ka}, q={kb}"
    return True, f"table over all monomial pairs of degree <= {max_degree}"


def check_bf_l_adjoint(ctx: Context, max_degree: int = 4):
    """Adjointness of the angular operators against the product, via sparse
    contractions of the pairing table: the condition <L p, q> = sign <p, L q>
    for all monomials p, q is a pair of scatter sums over nonzero pairings."""
    sig = ctx.sig_z
    keys, table = ctx.bf_table(max_degree)
    par = {k: len(k[1]) & 1 for k in keys}

    index_pairs = [(i, j) for i in range(sig.nvars) for j in range(i, sig.nvars)
                   if i != j or sig.parity(i)]
    for (i, j) in index_pairs:
        # pre[r] = pairs (p, c) with the monomial r appearing in L(p) with coefficient c
        pre: dict = {}
        for ka in keys:
            img = angular_L(i, j, SuperPolynomial.monomial(sig, ka))
            for r, c in img.terms.items():
                pre.setdefault(r, []).append((ka, c))
        eps = (sig.parity(i) + sig.parity(j)) & 1
        zero_side = i == 0
        lhs: dict = {}
        rhs: dict = {}
        for (r, q), g in table.items():
            for (p, c) in pre.get(r, ()):
                cur = lhs.get((p, q), QQi(0)) + c * g
                if cur.is_zero():
                    lhs.pop((p, q), None)
                else:
                    lhs[(p, q)] = cur
        for (p, s_), g in table.items():
            for (q, c) in pre.get(s_, ()):
                cur = rhs.get((p, q), QQi(0)) + c.conjugate() * g
                if cur.is_zero():
                    rhs.pop((p, q), None)
                else:
                    rhs[(p, q)] = cur
        for key in set(lhs) | set(rhs):
            p, q = key
            s = QQi(-1 if (eps and par[p]) else 1)
            if zero_side:
                ok = lhs.get(key, QQi(0)) == s * rhs.get(key, QQi(0))
            else:
                ok = lhs.get(key, QQi(0)) == -s * rhs.get(key, QQi(0))
            if not ok:
                return False, f"adjointness fails at L({i},{j}) on {key}"
    return True, f"all angular index pairs on monomials of degree <= {max_degree}"


def check_bf_oracle(ctx: Context, max_degree: int = 3):
    sig = ctx.sig_z
    polys = ctx.sample_polys(max_degree, 8, sig)
    for p in polys:
        for q in polys:
            if bf_product(p, q) != bf_product_shift_oracle(p, q):
                return False, f"routes disagree on ({p}, {q})"
    return True, ""


def check_bf_ideal(ctx: Context, max_degree: int = 2):
    sig = ctx.sig_z
    r2 = R2(sig)
    for p in ctx.sample_polys(max_degree, 6, sig):
        for q in ctx.sample_polys(max_degree + 2, 4, sig):
            if bf_product(r2 * p, q) != QQi(0) or bf_product(q, r2 * p) != QQi(0):
                return False, f"ideal not annihilated on ({p}, {q})"
    return True, ""


def check_kernel(ctx: Context, max_degree: int = 4):
    sig = ctx.sig_z
    if (sig.M - 2) <= 0 and (sig.M - 2) % 2 == 0:
        bad_degree = 2 - sig.M // 2  # first degree whose coefficient divides by zero
        try:
            kernel(bad_degree, sig)
        except ValueError:
            return True, f"degenerate M-2: kernel refused at degree {bad_degree}"
        return False, f"kernel did not refuse degree {bad_degree}"
    sigw = Signature(sig.m, sig.n, varset="w")
    for k in range(max_degree + 1):
        kern = kernel(k, sig, sigw)
        for key in normal_form_keys(sig, k):
            p = SuperPolynomial.monomial(sig, key)
            got = reduce_poly(kernel_pair(p, kern))
            want = reduce_poly(SuperPolynomial(sigw, dict(p.terms)))
            if got != want:
                return False, f"reproducing property fails at k={k} on {p}"
    return True, f"<p, K^k(.,w)> = p(w) mod R^2_w for k <= {max_degree}"


def check_gram(ctx: Context, max_degree: int = 3):
    sig = ctx.sig_z
    degenerate = (sig.M - 2) <= 0 and (sig.M - 2) % 2 == 0
    if not degenerate:
        for k in range(max_degree + 1):
            r = gram_rank(k, sig)
            d = graded_dim_F(k, sig).count
            if r != d:
                return False, f"rank {r} != dim {d} at degree {k}"
        return True, f"full rank on F_k for k <= {max_degree}"
    k = 2 - sig.M // 2
    r = gram_rank(k, sig)
    d = graded_dim_F(k, sig).count
    if r >= d:
        return False, f"expected singular Gram at degree {k}"
    nulls = gram_nullspace(k, sig)
    if not nulls:
        return False, "no null vector found"
    v = nulls[0]
    for key in normal_form_keys(sig, k):
        if bf_product(SuperPolynomial.monomial(sig, key), v) != QQi(0):
            return False, "claimed null vector is not null"
    for h in harmonic_basis(k, sig)[:3]:
        hr = reduce_poly(h)
        for key in normal_form_keys(sig, k):
            if bf_product(SuperPolynomial.monomial(sig, key), hr) != QQi(0):
                return False, "harmonic reduction is not in the radical"
    return True, f"degree {k}: rank {r} < dim {d}, certified null vector"


def _rho_columns(ctx: Context, max_degree: int):
    tkk = ctx.tkk
    keys = [key for d in range(max_degree + 1)
            for key in normal_form_keys(ctx.sig_z, d)]
    cols = {}
    for a in range(tkk.dim):
        X = tkk.basis_element(a)
        cols[a] = {key: rho_apply(X, SuperPolynomial.monomial(ctx.sig_z, key)).terms
                   for key in keys}
    return keys, cols


def check_rho_composition(ctx: Context, max_degree: int = 3):
    tkk = ctx.tkk
    fs = ctx.fock_monomials(max_degree)
    for a in range(tkk.dim):
        X = tkk.basis_element(a)
        cX = tkk.cayley(X)
        for p in fs:
            if rho_apply(X, p) != pi_complex_apply(cX, p):
                return False, f"{tkk.basis_label(a)} on {p}"
    return True, f"rho agrees with the Cayley twist on F_<= {max_degree}"


def check_rho_representation(ctx: Context, max_degree: int = 3):
    tkk = ctx.tkk
    keys3 = [key for d in range(max_degree + 1)
             for key in normal_form_keys(ctx.sig_z, d)]
    _, cols = _rho_columns(ctx, max_degree + 1)

    def apply_cols(colmap, vec: dict) -> dict:
        out: dict = {}
        for key, c in vec.items():
            img = colmap.get(key)
            if img is None:
                raise KeyError(f"column {key} missing")
            for k2, v in img.items():
                s = out.get(k2, QQi(0)) + c * v
                if s.is_zero():
                    out.pop(k2, None)
                else:
                    out[k2] = s
        return out

    for a in range(tkk.dim):
        for b in range(a, tkk.dim):
            Z = tkk.bracket(tkk.basis_element(a), tkk.basis_element(b))
            s = QQi(-1 if (tkk.parity(a) and tkk.parity(b)) else 1)
            for key in keys3:
                vec = {key: QQi(1)}
                lhs = apply_cols(cols[a], apply_cols(cols[b], vec))
                rhs2 = apply_cols(cols[b], apply_cols(cols[a], vec))
                for k2, v in rhs2.items():
                    cur = lhs.get(k2, QQi(0)) - s * v
                    if cur.is_zero():
                        lhs.pop(k2, None)
                    else:
                        lhs[k2] = cur
                want: dict = {}
                for cidx, cc in Z.coeffs.items():
                    for k2, v in cols[cidx][key].items():
                        cur = want.get(k2, QQi(0)) + cc * v
                        if cur.is_zero():
                            want.pop(k2, None)
                        else:
                            want[k2] = cur
                if lhs != want:
                    return False, f"commutator fails at ({a},{b}) on {key}"
    return True, f"all basis pairs on F_<= {max_degree}"


def check_rho_ladders(ctx: Context, kmax: int = 5):
    tkk = ctx.tkk
    sig = ctx.sig_z
    M = sig.M
    z0 = SuperPolynomial.variable(sig, 0)
    lower = rho_lowering(tkk)
    raiser = rho_raising(tkk)
    for k in range(kmax + 1):
        zk = reduce_poly(z0 ** k)
        want_low = reduce_poly((z0 ** (k - 1)).scale(I * QQi(k * (M + k - 3)))
                               if k else SuperPolynomial.zero(sig))
        if rho_apply(lower, zk) != want_low:
            return False, f"lowering value fails at k={k}"
        if rho_apply(raiser, zk) != reduce_poly((z0 ** (k + 1)).scale(I)):
            return False, f"raising value fails at k={k}"
    return True, f"ladder action on powers of z0 up to {kmax}"


def check_rho_skew(ctx: Context, max_degree: int = 3):
    """Skew-supersymmetry of the Fock action via sparse contractions of the
    pairing table against the action columns, equivalent to checking every
    pair of normal-form basis vectors of F up to the given degree."""
    tkk = ctx.tkk
    keys = [key for d in range(max_degree + 1)
            for key in normal_form_keys(ctx.sig_z, d)]
    keyset = set(keys)
    par = {k: len(k[1]) & 1 for k in keys}
    _, table = ctx.bf_table(max_degree + 1)
    for a in range(tkk.dim):
        X = tkk.basis_element(a)
        pX = tkk.parity(a)
        pre: dict = {}
        for key in keys:
            img = rho_apply(X, SuperPolynomial.monomial(ctx.sig_z, key))
            for r, c in img.terms.items():
                pre.setdefault(r, []).append((key, c))
        resid: dict = {}
        for (r, q), g in table.items():
            if q in keyset:
                for (p, c) in pre.get(r, ()):
                    cur = resid.get((p, q), QQi(0)) + c * g
                    if cur.is_zero():
                        resid.pop((p, q), None)
                    else:
                        resid[(p, q)] = cur
        for (p, s_), g in table.items():
            if p in keyset:
                for (q, c) in pre.get(s_, ()):
                    sgn = QQi(-1 if (pX and par[p]) else 1)
                    cur = resid.get((p, q), QQi(0)) + sgn * c.conjugate() * g
                    if cur.is_zero():
                        resid.pop((p, q), None)
                    else:
                        resid[(p, q)] = cur
        if resid:
            p, q = next(iter(resid))
            return False, f"{tkk.basis_label(a)} on ({p},{q})"
    return True, f"every basis element on F_<= {max_degree}"


def suite_fock(ctx: Context):
    d = min(ctx.cfg.max_degree + 1, 4)
    yield run_check("fock", "bessel-fischer-product",
                    "<z0,z0>=M-2; orthogonality, superhermitianity, shift identity",
                    lambda: check_bf_products(ctx, d))
    yield run_check("fock", "l-adjointness",
                    "<L_ij p, q> = -(-1)^{(|i|+|j|)|p|} <p, L_ij q>",
                    lambda: check_bf_l_adjoint(ctx, min(ctx.cfg.max_degree, 3)))
    yield run_check("fock", "dual-route",
                    "word substitution agrees with the shift-identity recursion",
                    lambda: check_bf_oracle(ctx, min(ctx.cfg.max_degree, 3)))
    yield run_check("fock", "ideal-annihilation",
                    "<R^2 p, q> = 0 = <p, R^2 q>",
                    lambda: check_bf_ideal(ctx))
    yield run_check("fock", "reproducing-kernel",
                    "<p, K^k(.,w)> = p(w) mod R^2_w",
                    lambda: check_kernel(ctx, d))
    yield run_check("fock", "gram-rank",
                    "Gram matrices have full rank iff M-2 avoids -2N",
                    lambda: check_gram(ctx, min(ctx.cfg.max_degree, 3)))
    yield run_check("fock", "cayley-composition",
                    "rho(X) = pi_C(c(X)) as operators on the Fock space",
                    lambda: check_rho_composition(ctx, ctx.cfg.max_degree))
    yield run_check("fock", "rho-representation",
                    "[rho(X),rho(Y)] = rho([X,Y]) on F_<=3",
                    lambda: check_rho_representation(ctx, ctx.cfg.max_degree))
    yield run_check("fock", "rho-ladders",
                    "lowering acts by i k(M+k-3) on powers of z0; raising by i z0",
                    lambda: check_rho_ladders(ctx))
    yield run_check("fock", "rho-skew-supersymmetry",
                    "<rho(X)p, q> = -(-1)^{|X||p|} <p, rho(X)q>",
                    lambda: check_rho_skew(ctx, ctx.cfg.max_degree))


# ---------------------------------------------------------------------------
# sb suite
# ---------------------------------------------------------------------------


def check_b_series(ctx: Context, lmax: int = 8):
    M = ctx.sig.M
    for alpha in range(3):
        for l in range(1, lmax + 1):
            lhs = l * b_series_coeff(M, alpha, l)
            rhs = b_series_coeff(M, alpha + 1, l - 1)
            if lhs != rhs:
                return False, f"derivative relation fails at alpha={alpha}, l={l}"
    return True, "termwise derivative shifts the series index"


def check_b0_identities(ctx: Context, max_degree: int = 6):
    sig, sigz = ctx.sig, ctx.sig_z
    L = max_degree + 1
    b0 = b_series_truncation(sig, sigz, 0, L)
    b1 = b_series_truncation(sig, sigz, 1, L)

    def cmp(lhs, rhs, label):
        for dd in range(max_degree + 1):
            if lhs.right_degree_part(dd) != rhs.right_degree_part(dd):
                return f"{label} fails at degree {dd}"
        return None

    for k in range(1, sig.nvars):
        err = cmp(b0.d_lower_right(k), b1.mul_var_left(k).scale(2),
                  f"z-derivative (k={k})")
        if err:
            return False, err
    err = cmp(b0.d_lower_right(0), b1.mul_var_left(0).scale(-2), "z-derivative (k=0)")
    if err:
        return False, err
    err = cmp(b0.euler_right(), pairing_power(sig, sigz, 1) * b1, "Euler contraction")
    if err:
        return False, err
    # the eigenfunction identity holds modulo the R^2 ideal of the inert slot:
    # the second-order part of the Bessel operator contracts two variables of
    # one alphabet into R^2 of the other, which every consumer kills
    for i in range(sig.nvars):
        err = cmp(b0.bessel_mod_right(i).reduce_left(),
                  b0.mul_var_left(i).scale(4).reduce_left(),
                  f"Bessel eigenfunction (z side, i={i})")
        if err:
            return False, err
        err = cmp(b0.bessel_mod_left(i).reduce_right(),
                  b0.mul_var_right(i).scale(4).reduce_right(),
                  f"Bessel eigenfunction (x side, i={i})")
        if err:
            return False, err
    return True, f"series identities to degree {max_degree}"


def check_exp_identities(ctx: Context, max_degree: int = 6):
    sigz = ctx.sig_z
    M = sigz.M
    L = max_degree + 2
    e = exp_z0_truncation(sigz, L)
    z0 = SuperPolynomial.variable(sigz, 0)
    lhs = bessel_modified(0, e)
    rhs = e.scale(2 - M) + z0 * e
    for d in range(max_degree + 1):
        if lhs.degree_part(d) != rhs.degree_part(d):
            return False, f"index-0 case fails at degree {d}"
    for k in range(1, sigz.nvars):
        lhs = bessel_modified(k, e)
        rhs = SuperPolynomial.variable(sigz, k) * e
        for d in range(max_degree + 1):
            if lhs.degree_part(d) != rhs.degree_part(d):
                return False, f"index-{k} case fails at degree {d}"
    return True, f"action on the exponential series to degree {max_degree}"


def check_sb_lowest(ctx: Context):
    got = ctx.sb.sb(lowest_vector(ctx.sig))
    if got != SuperPolynomial.one(ctx.sig_z):
        return False, f"transform of the lowest vector is {got}"
    return True, ""


def check_intertwining(ctx: Context, max_degree: int = 2, word_samples: int = 12):
    tkk = ctx.tkk
    fs = ctx.w_monomials(max_degree)
    for a in range(tkk.dim):
        X = tkk.basis_element(a)
        for f in fs:
            diff = ctx.sb.check_intertwine(X, f)
            if not diff.is_zero():
                return False, f"{tkk.basis_label(a)} on {f.poly}: residue {diff}"
    # literal action words of length <= 2 applied to the lowest vector
    rng = random.Random(ctx.cfg.seed + 1)
    v0 = lowest_vector(ctx.sig)
    for _ in range(word_samples):
        f = v0
        for _ in range(rng.randrange(3)):
            f = pi_apply(tkk.basis_element(rng.randrange(tkk.dim)), f)
        X = tkk.basis_element(rng.randrange(tkk.dim))
        diff = ctx.sb.check_intertwine(X, f)
        if not diff.is_zero():
            return False, f"{tkk.basis_label(X)} on a sampled word vector"
    return True, f"every basis element against vectors of degree <= {max_degree}, " \
                 f"plus {word_samples} sampled word vectors"


def inverse_depth(M: int, cap: int) -> int:
    """Largest degree (at most cap) at which the inverse pairing is defined."""
    from .scalars import poch
    d = 0
    while d < cap:
        if poch(Fraction(M, 2) - 1, d + 1) == 0:
            break
        d += 1
    return d


def check_intertwining_inverse(ctx: Context, max_degree: int = 3):
    tkk = ctx.tkk
    depth = inverse_depth(ctx.cfg.M, max_degree + 1)
    usable = min(max_degree, depth - 1)
    if usable < 0:
        return True, "inverse pairing undefined beyond degree 0; nothing to test"
    fs = ctx.fock_monomials(usable)
    for a in range(tkk.dim):
        X = tkk.basis_element(a)
        for p in fs:
            diff = ctx.sb.check_intertwine_inverse(X, p)
            if not diff.is_zero():
                return False, f"{tkk.basis_label(a)} on {p}: residue {diff}"
    return True, f"every basis element on F_<= {usable}"


def check_unitarity(ctx: Context, max_degree: int = 2):
    fs = ctx.w_monomials(max_degree)
    imgs = [ctx.sb.sb(f) for f in fs]
    for f, sf in zip(fs, imgs):
        for g, sg in zip(fs, imgs):
            if bf_product(sf, sg) != w_form(f, g):
                return False, f"forms differ on ({f.poly}, {g.poly})"
    return True, f"pairs over the degree <= {max_degree} spanning set"


def check_round_trips(ctx: Context, max_degree: int = 3):
    sb = ctx.sb
    for f in ctx.w_monomials(max_degree):
        if sb.sb_inverse(sb.sb(f)).poly != f.poly:
            return False, f"W-side round trip fails on {f.poly}"
    for p in ctx.fock_monomials(max_degree):
        if sb.sb(sb.sb_inverse(p)) != reduce_poly(p):
            return False, f"Fock-side round trip fails on {p}"
    return True, f"both round trips on degree <= {max_degree}"


def check_hermite(ctx: Context, max_degree: int = 2):
    sb = ctx.sb
    sig, sigz = ctx.sig, ctx.sig_z
    M = sig.M
    H0, _ = sb.hermite(((0,) * sig.m, ()))
    if H0 != SuperPolynomial.one(sig):
        return False, "order zero"
    e0 = ((1,) + (0,) * (sig.m - 1), ())
    He0, _ = sb.hermite(e0)
    if He0 != SuperPolynomial.variable(sig, 0).scale(8) + \
            SuperPolynomial.constant(sig, 4 - 2 * M):
        return False, "unit exponent on x0"
    for k in range(1, sig.nvars):
        key = ((0,) * sig.m, (k,)) if k >= sig.m else \
            (tuple(1 if t == k else 0 for t in range(sig.m)), ())
        Hk, _ = sb.hermite(key)
        if Hk != SuperPolynomial.variable(sig, k).scale(8):
            return False, f"unit exponent on x{k}"
    odd_seen = False
    for d in range(max_degree + 1):
        for key in monomial_keys(sig, d):
            H, h = sb.hermite(key)  # raises if the two routes disagree
            got = sb.sb(h)
            want = reduce_poly(SuperPolynomial.monomial(sigz, key, QQi(2 ** d)))
            if got != want:
                return False, f"monomial image fails on {key}"
            if key[1]:
                odd_seen = True
    if ctx.sig.n and not odd_seen:
        return False, "no odd exponent was exercised"
    return True, f"dual routes and monomial images for all |alpha| <= {max_degree}"


def check_sb_span(ctx: Context, max_degree: int = 3):
    sig_z = ctx.sig_z
    ranks = {}
    vecs_by_deg: dict[int, list[dict]] = {}
    for f in ctx.w_monomials(max_degree):
        img = ctx.sb.sb(f)
        for d, comp in img.homogeneous_components().items():
            vecs_by_deg.setdefault(d, []).append(dict(comp.terms))
    for d, vecs in sorted(vecs_by_deg.items()):
        cols = {key: i for i, key in enumerate(normal_form_keys(sig_z, d))}
        rows = [{cols[k]: v for k, v in vec.items()} for vec in vecs]
        ranks[d] = linalg.rank(rows, len(cols))
    for d in range(max_degree + 1):
        dim_fd = graded_dim_F(d, sig_z).count
        r = ranks.get(d, 0)
        if r > dim_fd:
            return False, f"degree {d}: rank {r} exceeds dim F_{d}"
        if d <= 2 and r != dim_fd:
            return False, f"degree {d}: rank {r} < dim F_{d} = {dim_fd}"
    return True, f"image ranks {dict(sorted(ranks.items()))}"


def suite_sb(ctx: Context):
    forward = ctx.cfg.M >= 4
    series_defined = not ((ctx.cfg.M - 2) <= 0 and (ctx.cfg.M - 2) % 2 == 0)
    if series_defined:
        yield run_check("sb", "series-coefficients",
                        "termwise derivative of the kernel series shifts its order",
                        lambda: check_b_series(ctx))
        yield run_check("sb", "kernel-series-identities",
                        "derivative/Euler identities for the kernel series; "
                        "Bessel eigenfunction property modulo the inert-slot ideal",
                        lambda: check_b0_identities(ctx, 6 if ctx.sig.nvars <= 7 else 4))
    else:
        reason = f"kernel series undefined: M - 2 = {ctx.cfg.M - 2} lies in -2N"
        yield skip("sb", "series-coefficients",
                   "termwise derivative of the kernel series shifts its order", reason)
        yield skip("sb", "kernel-series-identities",
                   "derivative/Euler identities for the kernel series", reason)
    yield run_check("sb", "exponential-identities",
                    "Bessel action on exp(-z0), degreewise",
                    lambda: check_exp_identities(ctx))
    fchecks = [
        ("lowest-vector", "transform of exp(-2|X|) is 1", check_sb_lowest, ()),
        ("intertwining", "SB(pi(X) f) = rho(X) SB(f)", check_intertwining,
         (min(ctx.cfg.max_degree, 2),)),
        ("unitarity", "<SB f, SB g> equals <f, g>", check_unitarity,
         (min(ctx.cfg.max_degree, 2),)),
        ("round-trips", "inverse composes to the identity both ways",
         check_round_trips, (ctx.cfg.max_degree,)),
        ("hermite", "dual-route Hermite polynomials map to monomials",
         check_hermite, (min(ctx.cfg.max_degree, 2),)),
        ("image-span", "transform images fill the graded Fock slices",
         check_sb_span, (ctx.cfg.max_degree,)),
    ]
    for name, ident, fn, args in fchecks:
        if not forward:
            yield skip("sb", name, ident, f"forward transform needs M >= 4, have {ctx.cfg.M}")
        else:
            yield run_check("sb", name, ident, lambda fn=fn, args=args: fn(ctx, *args))
    yield run_check("sb", "intertwining-inverse",
                    "pi(X) SBinv = SBinv rho(X) on the degrees where the "
                    "inverse pairing is defined",
                    lambda: check_intertwining_inverse(ctx, ctx.cfg.max_degree))


# ---------------------------------------------------------------------------
# specfun suite
# ---------------------------------------------------------------------------


def check_k_exponential():
    for t in (0.5, 1.0, 2.0):
        got = specfun.ktilde(-0.5, t).value
        want = math.sqrt(math.pi) / 2 * math.exp(-t)
        if abs(got - want) > 1e-12:
            return False, f"t={t}: |{got} - {want}|"
    return True, "half-integer K-value matches the pure exponential"


def check_i_halfinteger():
    for t in (0.5, 1.0, 3.0):
        got = specfun.itilde(0.5, t).value
        want = 2 * math.sinh(t) / (t * math.sqrt(math.pi))
        if abs(got - want) > 1e-12:
            return False, f"t={t}"
    vals = [specfun.itilde(0.0, 0.5 * k).value for k in range(1, 11)]
    if not all(a < b for a, b in zip(vals, vals[1:])):
        return False, "series not monotone on (0,5)"
    return True, ""


def check_laguerre(M: int):
    mu = M - 3
    for t in (0.8, 1.6):
        got = specfun.laguerre_lambda(0, mu, -1.0, t).value
        want = math.sqrt(math.pi) / 2 * math.exp(-t) / math.gamma(mu / 2 + 1)
        if abs(got - want) > 1e-10:
            return False, f"order-zero value at t={t}"
    x0, y0 = 0.7, 1.1
    r = specfun.laguerre_lambda(0, mu, -1.0, 2 * x0).value \
        / specfun.laguerre_lambda(0, mu, -1.0, 2 * y0).value
    if abs(r - math.exp(-2 * (x0 - y0))) > 1e-10:
        return False, "generator ratio is not exponential"
    s, t = 0.1, 1.3
    total = sum(specfun.laguerre_lambda(j, mu, -1.0, t).value * s ** j for j in range(12))
    direct = specfun.g2(mu, -1.0, complex(s), t).real
    if abs(total - direct) > 1e-10:
        return False, "generating-function reconstruction"
    return True, ""


def check_truncation_consistency():
    for t in (0.5, 1.0, 2.0):
        if abs(specfun.itilde(0.5, t, 40).value - specfun.itilde(0.5, t, 60).value) > 1e-12:
            return False, f"I-series unstable at t={t}"
        if abs(specfun.ktilde(0.5, t, 40).value - specfun.ktilde(0.5, t, 60).value) > 1e-12:
            return False, f"K-series unstable at t={t}"
    return True, ""


def suite_specfun(ctx: Context):
    yield run_check("specfun", "k-exponential",
                    "Ktilde(-1/2, t) = sqrt(pi)/2 exp(-t) to 1e-12",
                    check_k_exponential)
    yield run_check("specfun", "i-halfinteger",
                    "Itilde(1/2, t) = 2 sinh(t)/(t sqrt(pi)); monotone growth",
                    check_i_halfinteger)
    yield run_check("specfun", "laguerre-generator",
                    "order-zero Laguerre value is proportional to exp(-t) to 1e-10",
                    lambda: check_laguerre(ctx.cfg.M))
    yield run_check("specfun", "truncation",
                    "series values agree at truncation 40 and 60",
                    check_truncation_consistency)


# ---------------------------------------------------------------------------
# driver
# ---------------------------------------------------------------------------

SUITE_RUNNERS = {
    "algebra": suite_algebra,
    "quotient": suite_quotient,
    "harmonics": suite_harmonics,
    "liealg": suite_liealg,
    "schrodinger": suite_schrodinger,
    "integral": suite_integral,
    "fock": suite_fock,
    "sb": suite_sb,
    "specfun": suite_specfun,
}


def run_suite(cfg: RunConfig) -> list[CheckResult]:
    ctx = Context(cfg)
    results: list[CheckResult] = []
    for suite in cfg.suites:
        results.extend(SUITE_RUNNERS[suite](ctx))
    return results


def report_json(cfg: RunConfig, results: list[CheckResult]) -> str:
    payload = {
        "config": {"m": cfg.m, "n": cfg.n, "max_degree": cfg.max_degree,
                   "seed": cfg.seed, "suites": list(cfg.suites)},
        "checks": [{
            "suite": r.suite,
            "name": r.name,
            "identity": r.identity,
            "status": r.status,
            "witness": r.detail,
            "seconds": round(r.seconds, 4),
        } for r in results],
        "failures": sum(1 for r in results if r.status == "fail"),
    }
    return json.dumps(payload, indent=1, sort_keys=True)


def report_text(cfg: RunConfig, results: list[CheckResult]) -> str:
    lines = [f"configuration m={cfg.m} n={cfg.n} (M={cfg.M}) "
             f"max_degree={cfg.max_degree} seed={cfg.seed}"]
    for r in results:
        mark = {"pass": "PASS", "fail": "FAIL", "skip": "SKIP"}[r.status]
        lines.append(f"[{mark}] {r.suite}/{r.name}  ({r.seconds:.2f}s)")
        lines.append(f"       {r.identity}")
        if r.detail:
            lines.append(f"       {r.detail}")
    nfail = sum(1 for r in results if r.status == "fail")
    nskip = sum(1 for r in results if r.status == "skip")
    lines.append(f"{len(results)} checks, {nfail} failures, {nskip} skipped")
    return "\n".join(lines)
