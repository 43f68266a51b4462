//! Random inputs and independent oracles for the property suites.
#![allow(dead_code)]

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use skewcyclic::codes::{code_from_reduced, ConvCode};
use skewcyclic::linalg::PolyMatrix;
use skewcyclic::ring::{Automorphism, RingContext, RingElement};
use skewcyclic::skew::{principal_generator, SkewContext, SkewPoly};
use skewcyclic::{Fe, Gf, Poly};

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// (p, m, n) contexts used by the ring-level suites; all have p ∤ n.
pub const RING_PARAMS: &[(u32, u32, usize)] =
    &[(2, 2, 3), (2, 2, 5), (2, 1, 7), (3, 1, 4), (2, 1, 15), (3, 2, 8), (2, 3, 7), (5, 1, 6)];

/// Contexts small enough for skew and code suites.
pub const SKEW_PARAMS: &[(u32, u32, usize)] = &[(2, 2, 3), (2, 2, 5), (2, 1, 7), (3, 1, 4), (2, 1, 5), (2, 2, 1)];

pub fn fe(f: &Gf, r: &mut TestRng) -> Fe {
    Fe(r.gen_range(0..f.q()))
}

pub fn nonzero_fe(f: &Gf, r: &mut TestRng) -> Fe {
    Fe(r.gen_range(1..f.q()))
}

pub fn field_poly(f: &Gf, deg: usize, r: &mut TestRng) -> Poly {
    Poly::from_coeffs((0..=deg).map(|_| fe(f, r)).collect())
}

/// A polynomial of degree ≤ `deg`, zero with probability about 1/4.
pub fn sparse_poly(f: &Gf, deg: usize, r: &mut TestRng) -> Poly {
    if r.gen_bool(0.25) {
        return Poly::zero();
    }
    field_poly(f, r.gen_range(0..=deg), r)
}

pub fn ring_el(ring: &RingContext, r: &mut TestRng) -> RingElement {
    let f = ring.field();
    ring.element((0..ring.n()).map(|_| fe(f, r)).collect()).unwrap()
}

/// A ring element supported on a random subset of components.
pub fn ring_el_sparse(ring: &RingContext, r: &mut TestRng) -> RingElement {
    let a = ring_el(ring, r);
    (0..ring.r())
        .filter(|_| r.gen_bool(0.5))
        .fold(ring.zero(), |acc, k| ring.add(&acc, &ring.project(&a, k)))
}

pub fn unit(ring: &RingContext, r: &mut TestRng) -> RingElement {
    loop {
        let a = ring_el(ring, r);
        if ring.is_unit(&a) {
            return a;
        }
    }
}

pub fn skew_ctx(params: (u32, u32, usize), r: &mut TestRng) -> Arc<SkewContext> {
    let ring = crate::common::ring(params.0, params.1, params.2);
    let autos = Automorphism::enumerate(&ring);
    let sigma = autos.choose(r).unwrap().clone();
    SkewContext::new(&ring, sigma).unwrap()
}

pub fn any_skew_ctx(r: &mut TestRng) -> Arc<SkewContext> {
    let p = *SKEW_PARAMS.choose(r).unwrap();
    skew_ctx(p, r)
}

pub fn skew_poly(ctx: &Arc<SkewContext>, deg: usize, r: &mut TestRng) -> SkewPoly {
    let d = r.gen_range(0..=deg);
    SkewPoly::from_coeffs(ctx, (0..=d).map(|_| ring_el(ctx.ring(), r)).collect())
}

/// Coefficients with random component support, so generated ideals are
/// proper more often.
pub fn skew_poly_sparse(ctx: &Arc<SkewContext>, deg: usize, r: &mut TestRng) -> SkewPoly {
    let d = r.gen_range(0..=deg);
    SkewPoly::from_coeffs(ctx, (0..=d).map(|_| ring_el_sparse(ctx.ring(), r)).collect())
}

pub fn nonzero_skew_poly(ctx: &Arc<SkewContext>, deg: usize, r: &mut TestRng) -> SkewPoly {
    loop {
        let f = skew_poly_sparse(ctx, deg, r);
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn family(ctx: &Arc<SkewContext>, r: &mut TestRng) -> Vec<SkewPoly> {
    let len = r.gen_range(1..=3);
    (0..len).map(|_| nonzero_skew_poly(ctx, 2, r)).collect()
}

/// A unit of A[z; σ]: a product of unit constants and factors 1 - z^μ a e_l
/// with σ^μ(e_l) ≠ e_l, whose square term vanishes.
pub fn skew_unit(ctx: &Arc<SkewContext>, r: &mut TestRng) -> (SkewPoly, SkewPoly) {
    let ring = ctx.ring();
    let c = unit(ring, r);
    let mut u = SkewPoly::constant(ctx, c.clone());
    let mut u_inv = SkewPoly::constant(ctx, ring.unit_inverse(&c).unwrap());
    for _ in 0..r.gen_range(0..3) {
        let mu = r.gen_range(1..=3usize);
        let moved: Vec<usize> = (0..ring.r()).filter(|&l| ctx.perm_pow(mu as i64, l) != l).collect();
        let Some(&l) = moved.choose(r) else { continue };
        let a = ring.project(&ring_el(ring, r), l);
        let t = SkewPoly::monomial(ctx, mu, a);
        let one = SkewPoly::one(ctx);
        u = one.sub(&t).unwrap().mul(&u).unwrap();
        u_inv = u_inv.mul(&one.add(&t).unwrap()).unwrap();
    }
    (u, u_inv)
}

/// A code from a random family whose ideal is principal and delay-free.
pub fn random_code(ctx: &Arc<SkewContext>, r: &mut TestRng) -> ConvCode {
    loop {
        let fs = family(ctx, r);
        let out = principal_generator(&fs).unwrap();
        if out.is_principal && out.is_delay_free {
            return code_from_reduced(out.generator.unwrap());
        }
    }
}

pub fn random_matrix(f: &Arc<Gf>, rows: usize, cols: usize, deg: usize, r: &mut TestRng) -> PolyMatrix {
    let entries = (0..rows).map(|_| (0..cols).map(|_| sparse_poly(f, deg, r)).collect()).collect();
    PolyMatrix::from_rows(f, entries).unwrap()
}

/// Rank-deficient matrices appear when a random row combination is appended.
pub fn random_matrix_with_deps(f: &Arc<Gf>, r: &mut TestRng) -> PolyMatrix {
    let rows = r.gen_range(1..=6);
    let cols = r.gen_range(1..=6);
    let mut m = random_matrix(f, rows, cols, 4, r);
    if r.gen_bool(0.4) && rows < 6 {
        let comb = random_matrix(f, 1, rows, 1, r);
        m = m.vstack(&comb.mul(&m).unwrap()).unwrap();
    }
    m
}

/// Applies a random sequence of unimodular row operations.
pub fn unimodular_rows(m: &PolyMatrix, r: &mut TestRng) -> PolyMatrix {
    let f = m.field_arc().clone();
    let mut rows = m.row_vecs();
    let k = rows.len();
    if k == 0 {
        return m.clone();
    }
    for _ in 0..r.gen_range(1..8) {
        match r.gen_range(0..3) {
            0 => rows.swap(r.gen_range(0..k), r.gen_range(0..k)),
            1 => {
                let c = nonzero_fe(&f, r);
                let i = r.gen_range(0..k);
                rows[i] = rows[i].iter().map(|e| e.scale(c, &f)).collect();
            }
            _ if k > 1 => {
                let i = r.gen_range(0..k);
                let j = (i + r.gen_range(1..k)) % k;
                let p = field_poly(&f, 2, r);
                let add: Vec<Poly> = rows[j].iter().map(|e| e.mul(&p, &f)).collect();
                rows[i] = rows[i].iter().zip(&add).map(|(a, b)| a.add(b, &f)).collect();
            }
            _ => {}
        }
    }
    PolyMatrix::from_rows(&f, rows).unwrap()
}

/// Rank over F(z) by fraction-free elimination with cross multiplication.
pub fn rank_oracle(m: &PolyMatrix) -> usize {
    let f = m.field();
    let mut rows = m.row_vecs();
    let mut rank = 0;
    for c in 0..m.cols() {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let piv = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            let a = row[c].clone();
            if a.is_zero() {
                continue;
            }
            for j in 0..row.len() {
                row[j] = row[j].mul(&piv[c], f).sub(&piv[j].mul(&a, f), f);
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant of a square matrix by Bareiss elimination.
pub fn det_oracle(m: &PolyMatrix) -> Poly {
    let f = m.field();
    let n = m.rows();
    assert_eq!(n, m.cols());
    if n == 0 {
        return Poly::one();
    }
    let mut a = m.row_vecs();
    let mut prev = Poly::one();
    let mut negate = false;
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else { return Poly::zero() };
        if p != k {
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k], f).sub(&a[i][k].mul(&a[k][j], f), f);
                a[i][j] = num.div_exact(&prev, f).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.neg(f)
    } else {
        d
    }
}

/// Largest degree among the k×k minors of a k×n matrix.
pub fn max_minor_degree(m: &PolyMatrix) -> Option<usize> {
    use itertools::Itertools;
    (0..m.cols())
        .combinations(m.rows())
        .filter_map(|cols| det_oracle(&m.select_cols(&cols)).degree())
        .max()
}

pub fn skew_eq(a: &SkewPoly, b: &SkewPoly) -> bool {
    a.coeffs() == b.coeffs()
}
