"""Acceptance gate: thirteen zero-tolerance criteria, one printed verdict
line per criterion.  Every check is exact cyclotomic arithmetic; there is
no numerical tolerance anywhere."""

import itertools
import random
import time

from weilcanon.cyclinalg import cmat_eq, cmat_mul, cmat_scale
from weilcanon.cyclotomic import CycNum, gauss_sum, sigma
from weilcanon.fplinear import FpMatrix
from weilcanon.heisenberg import commutant_dimension, pi_matrix
from weilcanon.coherence import (conclude_idempotent, parallel_relations,
                                 path_lengths)
from weilcanon.kernels import (associativity_c1_check, averaging_F,
                               multiplicativity_check, normalization_A,
                               operator_of_kernel, sp_invariance_check)
from weilcanon.symplectic import (SymplecticSpace, enumerate_lagrangians,
                                  enumerate_oriented, lagrangian_count,
                                  sp_enumerate, sp_random, transverse)
from weilcanon.weil import (canonical_space_dimension, dft_check,
                            kernel_convolution_check)


def verdict(number: int, name: str, ok: bool) -> None:
    print(f"ACCEPTANCE {number:02d} [{'PASS' if ok else 'FAIL'}] {name}")
    assert ok, f"acceptance criterion {number} failed: {name}"


def generic_locus(ctx):
    ident = FpMatrix.identity(ctx.space.p, 2 * ctx.space.n)
    return [g for g in sp_enumerate(ctx.space)
            if (g.matrix - ident).det() != 0]


def test_criterion_01_gauss_sum_identities():
    start = time.monotonic()
    ok = True
    for p in (3, 5, 7, 11):
        g = gauss_sum(p)
        ok &= g * g == CycNum.rational(p, sigma(p, (-1) % p) * p)
        ok &= g * g.conjugate() == CycNum.rational(p, p)
    ok &= time.monotonic() - start < 1.0
    verdict(1, "Gauss-sum identities G^2 = sigma(-1) p and G conj(G) = p",
            ok)


def test_criterion_02_lagrangian_counts():
    start = time.monotonic()
    expected = {(3, 1): 4, (5, 1): 6, (7, 1): 8, (11, 1): 12, (3, 2): 40}
    ok = True
    for (p, n), count in expected.items():
        space = SymplecticSpace(p, n)
        ok &= lagrangian_count(p, n) == count
        ok &= len(enumerate_lagrangians(space)) == count
        ok &= len(enumerate_oriented(space)) == (p - 1) * count
    ok &= time.monotonic() - start < 10.0
    verdict(2, "Lagrangian counts 4/6/8/12 (n=1) and 40 (3,2), oriented "
               "(p-1) times those", ok)


def test_criterion_03_kernel_multiplicativity(ctx31, ctx51, ctx32):
    ok = True
    olags31 = enumerate_oriented(ctx31.space)
    for trip in itertools.product(olags31, repeat=3):
        ok &= multiplicativity_check(ctx31.system, *trip)[0]
    rng = random.Random(0)
    olags51 = enumerate_oriented(ctx51.space)
    for _ in range(500):
        trip = (rng.choice(olags51), rng.choice(olags51),
                rng.choice(olags51))
        ok &= multiplicativity_check(ctx51.system, *trip)[0]
    rng = random.Random(0)
    olags32 = enumerate_oriented(ctx32.space)
    for _ in range(100):
        trip = (rng.choice(olags32), rng.choice(olags32),
                rng.choice(olags32))
        ok &= multiplicativity_check(ctx32.system, *trip)[0]
    verdict(3, "kernel multiplicativity: 512 exhaustive (3,1), 500 seeded "
               "(5,1), 100 seeded (3,2)", ok)


def test_criterion_04_associativity_c_equals_1(ctx31, ctx51):
    ok = True
    subset = enumerate_oriented(ctx31.space)[:4]
    for quad in itertools.product(subset, repeat=4):
        ok &= associativity_c1_check(ctx31.system, *quad)
    rng = random.Random(0)
    olags51 = enumerate_oriented(ctx51.space)
    for _ in range(200):
        quad = tuple(rng.choice(olags51) for _ in range(4))
        ok &= associativity_c1_check(ctx51.system, *quad)
    verdict(4, "associativity scalar c = 1: 256 quadruples (3,1) plus 200 "
               "seeded (5,1)", ok)


def test_criterion_05_operator_formula(ctx31, ctx32):
    ok = True
    olags = enumerate_oriented(ctx31.space)
    for Mo in olags:
        for Lo in olags:
            if not transverse(Mo, Lo):
                continue
            T = operator_of_kernel(ctx31.system.kernel(Mo, Lo))
            ok &= cmat_eq(T, cmat_scale(normalization_A(Mo, Lo),
                                        averaging_F(Mo, Lo)))
    rng = random.Random(0)
    olags32 = enumerate_oriented(ctx32.space)
    done = 0
    while done < 20:
        Mo, Lo = rng.choice(olags32), rng.choice(olags32)
        if not transverse(Mo, Lo):
            continue
        T = operator_of_kernel(ctx32.system.kernel(Mo, Lo))
        ok &= cmat_eq(T, cmat_scale(normalization_A(Mo, Lo),
                                    averaging_F(Mo, Lo)))
        done += 1
    verdict(5, "T = A F on all transverse pairs (3,1) and sampled pairs "
               "(3,2)", ok)


def test_criterion_06_intertwining(ctx31):
    ok = True
    olags = enumerate_oriented(ctx31.space)
    elements = list(ctx31.heis.elements())
    for Mo in olags:
        for Lo in olags:
            T = ctx31.system.operator(Mo, Lo)
            for h in elements:
                ok &= cmat_eq(cmat_mul(T, pi_matrix(Lo, h)),
                              cmat_mul(pi_matrix(Mo, h), T))
    verdict(6, "intertwining T pi_L(h) = pi_M(h) T for all h, all pairs "
               "(3,1)", ok)


def test_criterion_07_commutant_dimension(ctx31, ctx51, ctx32):
    ok = True
    for ctx in (ctx31, ctx51, ctx32):
        for Lo in enumerate_oriented(ctx.space):
            ok &= commutant_dimension(Lo) == 1
    verdict(7, "Stone-von Neumann: commutant dimension 1 for every model "
               "at (3,1), (5,1), (3,2)", ok)


def test_criterion_08_weil_linearity(ctx31, ctx51, ctx32):
    ok = True
    for ctx in (ctx31, ctx51):
        group = sp_enumerate(ctx.space)
        rhos = {g: ctx.rho(g) for g in group}
        for g in group:
            for h in group:
                ok &= cmat_eq(cmat_mul(rhos[g], rhos[h]), rhos[g * h])
    rng = random.Random(0)
    for _ in range(200):
        g = sp_random(ctx32.space, rng)
        h = sp_random(ctx32.space, rng)
        ok &= cmat_eq(cmat_mul(ctx32.rho(g), ctx32.rho(h)), ctx32.rho(g * h))
    ok &= canonical_space_dimension(ctx31) == 3
    ok &= canonical_space_dimension(ctx51) == 5
    verdict(8, "rho(g) rho(h) = rho(gh): 576 pairs Sp(2,3), 14400 pairs "
               "Sp(2,5), 200 seeded Sp(4,3); dim H(V) = p^n", ok)


def test_criterion_09_character_identity(ctx31, ctx51):
    ok = True
    for ctx in (ctx31, ctx51):
        p, n = ctx.space.p, ctx.space.n
        ident = FpMatrix.identity(p, 2 * n)
        for g in generic_locus(ctx):
            pred = sigma(p, (-1) ** n * (g.matrix - ident).det() % p)
            ok &= pred in (1, -1)
            ok &= ctx.trace_character(g) == CycNum.rational(p, pred)
    verdict(9, "trace(rho(g)) = sigma((-1)^n det(g - I)) on the full "
               "generic locus of Sp(2,3) and Sp(2,5)", ok)


def test_criterion_10_invariant_kernel(ctx31):
    ok = True
    for g in generic_locus(ctx31):
        K = ctx31.invariant_kernel_trace(g)
        for v in ctx31.space.vectors():
            ok &= K[v] == ctx31.invariant_kernel_closed(g, v)
    for g in sp_enumerate(ctx31.space):
        ok &= ctx31.reconstruction_check(g)
    rng = random.Random(0)
    group = sp_enumerate(ctx31.space)
    for _ in range(100):
        ok &= kernel_convolution_check(ctx31, rng.choice(group),
                                       rng.choice(group))
    verdict(10, "invariant kernel: closed Cayley formula = trace kernel on "
                "the generic locus, reconstruction for all 24 g, 100 "
                "seeded convolution pairs", ok)


def test_criterion_11_dft(ctx31, ctx51):
    ok = True
    for ctx in (ctx31, ctx51):
        p = ctx.space.p
        for b in (1, 2):
            result = dft_check(ctx, FpMatrix.from_rows(p, [[b]]))
            ok &= result["ok"]
            ok &= result["modulus_ok"]
    verdict(11, "DFT: rho(w) = gamma [psi(B(x, y))] with |gamma|^2 = 1/p "
                "for B = 1, 2 at p = 3, 5", ok)


def test_criterion_12_coherence():
    start = time.monotonic()
    ok = parallel_relations(4) == {(2, 3)}
    ok &= conclude_idempotent(parallel_relations(4), True) == "C=id"
    for strands in (4, 5, 6):
        lens = path_lengths(strands)
        diffs = {b - a for a in lens for b in lens if b > a}
        gcd = 0
        for d in diffs:
            gcd = __import__("math").gcd(gcd, d)
        ok &= gcd == 1
        ok &= conclude_idempotent(parallel_relations(strands), True) == "C=id"
    ok &= time.monotonic() - start < 1.0
    verdict(12, "coherence shadow: pentagon relations {(2,3)}, C = id, gcd "
                "of differences 1 for 4, 5, 6 strands", ok)


def test_criterion_13_sp_invariance(ctx31):
    ok = True
    olags = enumerate_oriented(ctx31.space)
    for g in sp_enumerate(ctx31.space):
        for Mo in olags:
            for Lo in olags:
                ok &= sp_invariance_check(ctx31.system, g, Mo, Lo)[0]
    verdict(13, "kernel Sp-invariance for all g in Sp(2,3) x all oriented "
                "pairs", ok)
