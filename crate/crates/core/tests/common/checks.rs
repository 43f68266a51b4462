//! Seeded property checks shared by the proptest suites and the acceptance
//! runner. Each returns `Err` with a description on the first violation.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::seq::SliceRandom;

use skewcyclic::circulant::{classical_circulant, p_sigma, poly_to_vec, sigma_circulant, sigma_circulant_expanded, vec_to_poly};
use skewcyclic::codes::{
    classify, code_from_generator, control_polynomial, dual_code, forney_degree, free_distance, ConvCode,
};
use skewcyclic::linalg::{
    hermite_form, is_basic, is_minimal, module_equal, rank, right_kernel_basis, smith_form, PolyMatrix,
};
use skewcyclic::ring::Automorphism;
use skewcyclic::skew::{is_reduced, principal_generator, SkewContext, SkewPoly};
use skewcyclic::{Fe, Gf, Poly};

use super::gen::*;

pub type Check = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const FIELD_PARAMS: &[(u32, u32)] = &[(2, 1), (3, 1), (2, 2), (3, 2), (2, 4), (5, 2), (2, 8), (7, 1), (3, 3)];

pub fn field_axioms(seed: u64) -> Check {
    let mut r = rng(seed);
    let (p, m) = *FIELD_PARAMS.choose(&mut r).unwrap();
    let f = Gf::new(p, m, None).map_err(|e| e.to_string())?;
    let (a, b, c) = (fe(&f, &mut r), fe(&f, &mut r), fe(&f, &mut r));
    ensure!(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)), "additive associativity in GF({p}^{m})");
    ensure!(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)), "multiplicative associativity in GF({p}^{m})");
    ensure!(f.mul(a, b) == f.mul(b, a) && f.add(a, b) == f.add(b, a), "commutativity");
    ensure!(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)), "distributivity");
    ensure!(f.add(a, f.neg(a)).is_zero() && f.sub(a, b) == f.add(a, f.neg(b)), "negation");
    ensure!(f.from_enc(a.enc()) == Some(a), "encoding round trip");
    ensure!(f.from_coeffs(&f.coeffs(a)) == Some(a), "coefficient round trip");
    let frob = (0..m).fold(a, |x, _| f.frobenius(x));
    ensure!(frob == a, "Frobenius has order dividing m");
    if !a.is_zero() {
        let inv = f.inv(a).map_err(|e| e.to_string())?;
        ensure!(f.mul(a, inv) == Fe::ONE, "a·a⁻¹ = 1");
        ensure!(f.pow(a, (f.q() - 1) as i64) == Ok(Fe::ONE), "a^(q-1) = 1");
    } else {
        ensure!(f.inv(a).is_err(), "zero has no inverse");
    }
    Ok(())
}

pub fn crt_round_trip(seed: u64) -> Check {
    let mut r = rng(seed);
    let (p, m, n) = *RING_PARAMS.choose(&mut r).unwrap();
    let ring = super::ring(p, m, n);
    let (a, b) = (ring_el(&ring, &mut r), ring_el(&ring, &mut r));
    let (fa, fb) = (ring.crt_forward(&a), ring.crt_forward(&b));
    ensure!(ring.crt_inverse(&fa).map_err(|e| e.to_string())? == a, "crt_inverse ∘ crt_forward = id");
    let sum = ring.crt_forward(&ring.add(&a, &b));
    let prod = ring.crt_forward(&ring.mul(&a, &b));
    for k in 0..ring.r() {
        let f = ring.field();
        ensure!(sum[k] == fa[k].add(&fb[k], f), "crt_forward additive in component {k}");
        ensure!(prod[k] == ring.comp_mul(k, &fa[k], &fb[k]), "crt_forward multiplicative in component {k}");
    }
    Ok(())
}

/// Exhaustive over components of every ring in the parameter list.
pub fn idempotent_laws() -> Check {
    for &(p, m, n) in RING_PARAMS {
        let ring = super::ring(p, m, n);
        let mut sum = ring.zero();
        for i in 0..ring.r() {
            let ei = ring.idempotent(i);
            sum = ring.add(&sum, ei);
            for j in 0..ring.r() {
                let prod = ring.mul(ei, ring.idempotent(j));
                let expect = if i == j { ei.clone() } else { ring.zero() };
                ensure!(prod == expect, "e_{i}·e_{j} for ({p},{m},{n})");
            }
        }
        ensure!(sum == ring.one(), "Σ e_k = 1 for ({p},{m},{n})");
    }
    Ok(())
}

pub fn automorphism_laws(seed: u64) -> Check {
    let mut r = rng(seed);
    let (p, m, n) = *SKEW_PARAMS.choose(&mut r).unwrap();
    let ring = super::ring(p, m, n);
    let autos = Automorphism::enumerate(&ring);
    let s = autos.choose(&mut r).unwrap();
    let t = autos.choose(&mut r).unwrap();
    let (a, b) = (ring_el(&ring, &mut r), ring_el(&ring, &mut r));
    ensure!(s.apply(&ring.mul(&a, &b)) == ring.mul(&s.apply(&a), &s.apply(&b)), "σ multiplicative");
    ensure!(s.apply(&ring.add(&a, &b)) == ring.add(&s.apply(&a), &s.apply(&b)), "σ additive");
    for k in 0..ring.r() {
        ensure!(s.apply(ring.idempotent(k)) == *ring.idempotent(s.perm()[k]), "σ permutes idempotents");
    }
    let st = s.compose(t);
    ensure!(st.apply(&a) == s.apply(&t.apply(&a)), "compose is σ∘τ");
    ensure!(s.sigma_hat().sigma_hat() == *s, "σ̂̂ = σ");
    ensure!(st.sigma_hat() == t.sigma_hat().compose(&s.sigma_hat()), "hat reverses composition");
    ensure!(s.inverse().compose(s).is_identity(), "σ⁻¹σ = id");
    ensure!(s.power(s.order() as i64).is_identity(), "σ^ord = id");
    Ok(())
}

pub fn skew_ring_laws(seed: u64) -> Check {
    let mut r = rng(seed);
    let ctx = any_skew_ctx(&mut r);
    let ring = ctx.ring().clone();
    let (f, g, h) = (skew_poly(&ctx, 3, &mut r), skew_poly(&ctx, 3, &mut r), skew_poly(&ctx, 3, &mut r));
    let mul = |a: &SkewPoly, b: &SkewPoly| a.mul(b).unwrap();
    let add = |a: &SkewPoly, b: &SkewPoly| a.add(b).unwrap();
    ensure!(mul(&mul(&f, &g), &h) == mul(&f, &mul(&g, &h)), "associativity");
    ensure!(mul(&f, &add(&g, &h)) == add(&mul(&f, &g), &mul(&f, &h)), "left distributivity");
    ensure!(mul(&add(&f, &g), &h) == add(&mul(&f, &h), &mul(&g, &h)), "right distributivity");
    let one = SkewPoly::one(&ctx);
    ensure!(mul(&one, &f) == f && mul(&f, &one) == f, "two-sided identity");
    let z = SkewPoly::z(&ctx);
    let lambda = SkewPoly::constant(&ctx, ring.constant(nonzero_fe(ring.field(), &mut r)));
    ensure!(mul(&lambda, &z) == mul(&z, &lambda), "λ·z = z·λ");
    let a = ring_el(&ring, &mut r);
    let lhs = mul(&SkewPoly::constant(&ctx, a.clone()), &z);
    let rhs = mul(&z, &SkewPoly::constant(&ctx, ctx.sigma().apply(&a)));
    ensure!(lhs == rhs, "a·z = z·σ(a)");
    let parts = (0..ring.r()).fold(SkewPoly::zero(&ctx), |acc, k| add(&acc, &f.component(k)));
    ensure!(parts == f, "components sum back");
    Ok(())
}

/// a·z = z·σ(a) on the basis 1, x, …, x^{n-1}, for every σ of every small context.
pub fn exchange_law_on_basis() -> Check {
    for &(p, m, n) in SKEW_PARAMS {
        let ring = super::ring(p, m, n);
        for s in Automorphism::enumerate(&ring) {
            let ctx = SkewContext::new(&ring, s).unwrap();
            let z = SkewPoly::z(&ctx);
            for i in 0..n {
                let a = ring.x_pow(i);
                let lhs = SkewPoly::constant(&ctx, a.clone()).mul(&z).unwrap();
                let rhs = z.mul(&SkewPoly::constant(&ctx, ctx.sigma().apply(&a))).unwrap();
                ensure!(lhs == rhs, "exchange law fails for x^{i} in ({p},{m},{n})");
            }
        }
    }
    Ok(())
}

pub fn anti_isomorphisms(seed: u64) -> Check {
    let mut r = rng(seed);
    let ctx = any_skew_ctx(&mut r);
    let (f, g) = (skew_poly(&ctx, 3, &mut r), skew_poly(&ctx, 3, &mut r));
    let fg = f.mul(&g).unwrap();
    ensure!(fg.tilde() == g.tilde().mul(&f.tilde()).unwrap(), "tilde reverses products");
    ensure!(fg.hat() == g.hat().mul(&f.hat()).unwrap(), "hat reverses products");
    ensure!(f.tilde().tilde() == f, "tilde is involutive");
    ensure!(f.hat().hat() == f, "hat is involutive");
    Ok(())
}

pub fn annihilation_and_rules(seed: u64) -> Check {
    let mut r = rng(seed);
    let ctx = any_skew_ctx(&mut r);
    let ring = ctx.ring();
    let g = nonzero_skew_poly(&ctx, 3, &mut r);
    let pi = SkewPoly::constant(&ctx, ring.from_poly(&g.pi().unwrap()));
    ensure!(pi.mul(&g).unwrap().is_zero(), "π_(g)·g = 0");
    let u = skew_poly(&ctx, 2, &mut r);
    for k in g.support() {
        let gk = g.component(k);
        let ugk = u.mul(&gk).unwrap();
        if ugk.is_zero() {
            continue;
        }
        let (a, b) = (ugk.leading_monomial().unwrap(), gk.leading_monomial().unwrap());
        ensure!(a.component == b.component && a.zpow >= b.zpow, "LM(u·g^(k)) = z^α·LM(g^(k))");
    }
    Ok(())
}

fn row_module(fs: &[SkewPoly]) -> PolyMatrix {
    let ctx = fs[0].ctx();
    fs.iter().fold(PolyMatrix::zeros(ctx.ring().field_arc(), 0, ctx.ring().n()), |m, f| {
        m.vstack(&sigma_circulant(f)).unwrap()
    })
}

/// The ideal of {f_i} equals that of {e_k f_i}, and the reduced generator is
/// unique under unit premultiplication.
pub fn ideal_uniqueness(seed: u64) -> Check {
    let mut r = rng(seed);
    let ctx = any_skew_ctx(&mut r);
    let ring = ctx.ring();
    let fs = family(&ctx, &mut r);
    let split: Vec<SkewPoly> = fs
        .iter()
        .flat_map(|f| (0..ring.r()).map(move |k| f.left_mul_ring(ring.idempotent(k))))
        .filter(|f| !f.is_zero())
        .collect();
    ensure!(module_equal(&row_module(&fs), &row_module(&split)).unwrap(), "⟨f_i⟩ = ⟨e_k f_i⟩");
    let base = principal_generator(&fs).unwrap();
    let other = principal_generator(&split).unwrap();
    ensure!(base.reduced_family == other.reduced_family, "reduced families agree after splitting");
    let moved: Vec<SkewPoly> = fs.iter().map(|f| skew_unit(&ctx, &mut r).0.mul(f).unwrap()).collect();
    let out = principal_generator(&moved).unwrap();
    ensure!(out.reduced_family == base.reduced_family, "reduced family invariant under units");
    ensure!(out.is_principal == base.is_principal && out.is_delay_free == base.is_delay_free, "flags invariant");
    if let Some(g) = base.generator {
        ensure!(is_reduced(&g), "generator is reduced");
        let (u, u_inv) = skew_unit(&ctx, &mut r);
        ensure!(u.mul(&u_inv).unwrap() == SkewPoly::one(&ctx), "constructed unit has its inverse");
        let again = principal_generator(&[u.mul(&g).unwrap()]).unwrap();
        ensure!(again.generator == Some(g), "generator of ⟨u·g⟩ equals g");
    }
    Ok(())
}

pub fn msigma_homomorphism(seed: u64) -> Check {
    let mut r = rng(seed);
    let ctx = any_skew_ctx(&mut r);
    let (g, h) = (skew_poly(&ctx, 2, &mut r), skew_poly(&ctx, 2, &mut r));
    let (mg, mh) = (sigma_circulant(&g), sigma_circulant(&h));
    ensure!(sigma_circulant(&g.add(&h).unwrap()) == mg.add(&mh).unwrap(), "M^σ additive");
    ensure!(sigma_circulant(&h.mul(&g).unwrap()) == mh.mul(&mg).unwrap(), "M^σ multiplicative");
    ensure!(vec_to_poly(&ctx, mg.row(0)).unwrap() == g, "row 0 recovers g");
    ensure!(sigma_circulant_expanded(&g) == mg, "expanded form agrees");
    let v = poly_to_vec(&skew_poly(&ctx, 2, &mut r));
    let row = PolyMatrix::from_rows(ctx.ring().field_arc(), vec![v.clone()]).unwrap();
    let image = row.mul(&mg).unwrap();
    let pv = vec_to_poly(&ctx, &v).unwrap();
    ensure!(vec_to_poly(&ctx, image.row(0)).unwrap() == pv.mul(&g).unwrap(), "𝔭(v·M^σ(g)) = 𝔭(v)·g");
    // saturation: f = h·g, Q = M^σ(h), and 𝔭(row₀ Q)·g = f
    let f = h.mul(&g).unwrap();
    ensure!(vec_to_poly(&ctx, mh.row(0)).unwrap().mul(&g).unwrap() == f, "saturation read-back");
    // kernel transfer on a left-kernel vector and on the random vector
    let left = right_kernel_basis(&mg.transpose());
    for j in 0..left.cols() {
        let w = left.column(j);
        let mw = sigma_circulant(&vec_to_poly(&ctx, &w).unwrap());
        let wm = PolyMatrix::from_rows(ctx.ring().field_arc(), vec![w]).unwrap().mul(&mg).unwrap();
        ensure!(wm.is_zero() && mw.mul(&mg).unwrap().is_zero(), "kernel transfer for a kernel vector");
    }
    ensure!(image.is_zero() == sigma_circulant(&pv).mul(&mg).unwrap().is_zero(), "kernel transfer both ways");
    Ok(())
}

/// A constant matrix commutes with the shift S iff it is a classical circulant.
pub fn shift_commutation(seed: u64) -> Check {
    let mut r = rng(seed);
    let (p, m, n) = *SKEW_PARAMS.choose(&mut r).unwrap();
    let ring = super::ring(p, m, n);
    let f = ring.field_arc().clone();
    let s = classical_circulant(&ring, &ring.x_pow(1));
    let circ = classical_circulant(&ring, &ring_el(&ring, &mut r));
    ensure!(circ.mul(&s).unwrap() == s.mul(&circ).unwrap(), "M_g commutes with S");
    let rows: Vec<Vec<Fe>> = (0..n).map(|_| (0..n).map(|_| fe(&f, &mut r)).collect()).collect();
    let mm = PolyMatrix::from_constants(&f, &rows).unwrap();
    let commutes = mm.mul(&s).unwrap() == s.mul(&mm).unwrap();
    let first = ring.element(rows[0].clone()).unwrap();
    ensure!(commutes == (mm == classical_circulant(&ring, &first)), "commutation characterizes circulants");
    Ok(())
}

/// Transpose law and P_σ laws for every automorphism of the n = 3 and n = 5
/// contexts over GF(4).
pub fn transpose_law_all(seed: u64) -> Check {
    let mut r = rng(seed);
    for ring in [super::n3(), super::n5()] {
        let autos = Automorphism::enumerate(&ring);
        let t = autos.choose(&mut r).unwrap().clone();
        for s in &autos {
            let ctx = SkewContext::new(&ring, s.clone()).unwrap();
            let g = skew_poly(&ctx, 2, &mut r);
            ensure!(sigma_circulant(&g).transpose() == sigma_circulant(&g.hat()), "transpose law for {s:?}");
            let ps = p_sigma(s);
            ensure!(ps.transpose() == p_sigma(&s.sigma_hat()), "P_σᵀ = P_σ̂ for {s:?}");
            ensure!(p_sigma(&s.compose(&t)) == p_sigma(&t).mul(&ps).unwrap(), "P_(στ) = P_τ P_σ");
            let a = ring_el(&ring, &mut r);
            let lhs = classical_circulant(&ring, &a).mul(&ps).unwrap();
            let rhs = ps.mul(&classical_circulant(&ring, &s.apply(&a))).unwrap();
            ensure!(lhs == rhs, "P_σ⁻¹ M_a P_σ = M_σ(a) for {s:?}");
        }
    }
    Ok(())
}

pub fn rank_theorem(seed: u64) -> Check {
    let mut r = rng(seed);
    let ctx = any_skew_ctx(&mut r);
    let out = principal_generator(&family(&ctx, &mut r)).unwrap();
    let mut reduced = out.reduced_family.clone();
    reduced.extend(out.generator);
    for g in reduced.iter().filter(|g| !g.is_zero()) {
        let kappa = g.pi().unwrap().degree().unwrap();
        let m = sigma_circulant(g);
        ensure!(rank(&m) == kappa, "rank M^σ(g) = deg π_(g) for {g:?}");
        ensure!(rank(&m.take_rows(kappa)) == kappa, "first κ rows independent for {g:?}");
    }
    Ok(())
}

fn small_field(r: &mut TestRng) -> Arc<Gf> {
    let (p, m) = *[(2, 1), (3, 1), (2, 2)].choose(r).unwrap();
    Arc::new(Gf::new(p, m, None).unwrap())
}

pub fn smith_and_kernel(seed: u64) -> Check {
    let mut r = rng(seed);
    let f = small_field(&mut r);
    let m = random_matrix_with_deps(&f, &mut r);
    let sd = smith_form(&m);
    ensure!(sd.verify(&m), "U·M·V = D with unimodular U, V");
    let rk = rank_oracle(&m);
    ensure!(sd.rank() == rk && rank(&m) == rk, "rank agrees with elimination oracle");
    let d = sd.invariant_factors();
    for w in d.windows(2) {
        ensure!(w[1].rem(&w[0], &f).is_zero(), "divisibility chain");
    }
    let k = right_kernel_basis(&m);
    ensure!(k.cols() == m.cols() - rk, "kernel has cols - rank columns");
    if k.cols() > 0 {
        ensure!(m.mul(&k).unwrap().is_zero(), "M·K = 0");
        ensure!(rank(&k) == k.cols() && is_basic(&k.transpose()), "kernel basis is basic");
    }
    Ok(())
}

pub fn hermite_canonical(seed: u64) -> Check {
    let mut r = rng(seed);
    let f = small_field(&mut r);
    let m = random_matrix_with_deps(&f, &mut r);
    let um = unimodular_rows(&m, &mut r);
    let h = hermite_form(&m);
    ensure!(h == hermite_form(&um), "Hermite form invariant under unimodular row operations");
    ensure!(hermite_form(&h) == h, "Hermite form is idempotent");
    ensure!(module_equal(&m, &um).unwrap(), "module_equal under unimodular transforms");
    Ok(())
}

fn code_ctx(r: &mut TestRng) -> Arc<SkewContext> {
    let p = *[(2, 2, 3), (2, 2, 5), (2, 1, 7), (3, 1, 4), (2, 1, 5)].choose(r).unwrap();
    skew_ctx(p, r)
}

fn random_basic_code(r: &mut TestRng, ctx: &Arc<SkewContext>) -> ConvCode {
    loop {
        let c = random_code(ctx, r);
        if c.is_code {
            return c;
        }
    }
}

pub fn reverse_annihilation(seed: u64) -> Check {
    let mut r = rng(seed);
    let ctx = code_ctx(&mut r);
    let code = random_basic_code(&mut r, &ctx);
    let rep = control_polynomial(&code).map_err(|e| e.to_string())?;
    let (g, h) = (&code.generator, &rep.control_poly);
    ensure!(is_reduced(g) && is_reduced(&h.hat()), "g and ĥ reduced");
    ensure!(g.mul(h).unwrap().is_zero(), "g·h = 0");
    ensure!(h.mul(g).unwrap().is_zero(), "h·g = 0");
    ensure!(rep.control_matrix.mul(&sigma_circulant(g)).unwrap().is_zero(), "M^σ(h)·M^σ(g) = 0");
    Ok(())
}

pub fn code_structure(seed: u64) -> Check {
    let mut r = rng(seed);
    let ctx = code_ctx(&mut r);
    let code = random_basic_code(&mut r, &ctx);
    let min = &code.minimal_generator_matrix;
    ensure!(is_minimal(min).unwrap(), "minimal generator matrix is minimal");
    ensure!(module_equal(min, &code.generator_matrix).unwrap(), "minimal matrix spans the code");
    ensure!(forney_degree(min) == code.complexity, "row-degree sum equals complexity");
    ensure!(max_minor_degree(&code.generator_matrix).unwrap_or(0) == code.complexity, "complexity = max minor degree");
    let dual = dual_code(&code).map_err(|e| e.to_string())?;
    ensure!(dual.kappa + code.kappa == code.n(), "dimensions add up to n");
    if dual.kappa > 0 {
        let back = dual_code(&dual).map_err(|e| e.to_string())?;
        ensure!(module_equal(&back.generator_matrix, &code.generator_matrix).unwrap(), "dual of dual");
    }
    Ok(())
}

/// For σ = id and a constant generator, the dual support is the set of
/// components where g vanishes, as for classical cyclic codes.
pub fn classical_cyclic(seed: u64) -> Check {
    let mut r = rng(seed);
    let (p, m, n) = *[(2, 2, 3), (2, 2, 5), (2, 1, 7), (3, 1, 4), (2, 1, 15)].choose(&mut r).unwrap();
    let ring = super::ring(p, m, n);
    let ctx = SkewContext::new(&ring, Automorphism::identity(&ring)).unwrap();
    let a = ring_el_sparse(&ring, &mut r);
    if a.is_zero() {
        return Ok(());
    }
    let code = code_from_generator(&ctx, &[SkewPoly::constant(&ctx, a.clone())]).map_err(|e| e.to_string())?;
    let f = ring.field();
    let gcd = skewcyclic::Poly::gcd(&a.to_poly(), ring.x_n_minus_1(), f);
    ensure!(code.kappa == n - gcd.degree().unwrap(), "κ = n - deg gcd(g, x^n - 1)");
    ensure!(code.complexity == 0, "constant generators give block codes");
    let rep = control_polynomial(&code).map_err(|e| e.to_string())?;
    let check: Poly = ring.x_n_minus_1().div_exact(&gcd, f).unwrap();
    let zero_set: BTreeSet<usize> = (0..ring.r()).filter(|&k| !ring.support(&a).contains(&k)).collect();
    let h_support: BTreeSet<usize> = rep.control_poly.support().into_iter().collect();
    ensure!(h_support == zero_set, "control support is where g vanishes");
    let by_division: BTreeSet<usize> = ring.support(&ring.from_poly(&check)).into_iter().collect();
    ensure!(h_support == by_division, "control support matches (x^n - 1)/gcd");
    Ok(())
}

pub fn free_distance_sanity(seed: u64) -> Check {
    let mut r = rng(seed);
    let p = *[(2, 1, 3), (2, 1, 5), (2, 1, 7), (2, 2, 3)].choose(&mut r).unwrap();
    let ctx = skew_ctx(p, &mut r);
    let code = random_basic_code(&mut r, &ctx);
    if code.kappa == 0 || code.complexity > 8 {
        return Ok(());
    }
    let d = free_distance(&code).map_err(|e| e.to_string())?;
    let q = ctx.ring().field().q() as usize;
    let k = code.kappa;
    // message degree bound keeping the enumeration near 2^12
    let deg = (0..=6).rev().find(|d| (d + 1) * k * q.trailing_zeros() as usize <= 12).unwrap_or(0);
    let brute = super::brute_min_weight(&code.minimal_generator_matrix, deg) as u64;
    ensure!(d >= 1 && d <= brute, "d_free {d} exceeds bounded brute force {brute}");
    Ok(())
}

fn fixing_autos(ring: &Arc<skewcyclic::ring::RingContext>) -> Vec<Automorphism> {
    Automorphism::enumerate(ring).into_iter().filter(|s| s.fixes_all_components()).collect()
}

/// One random ideal per σ fixing all components, over GF(4) with n = 3 and 5.
pub fn block_classifier(seed: u64) -> Check {
    let mut r = rng(seed);
    for ring in [super::n3(), super::n5()] {
        for s in fixing_autos(&ring) {
            let ctx = SkewContext::new(&ring, s.clone()).unwrap();
            let code = random_basic_code(&mut r, &ctx);
            ensure!(code.complexity == 0, "σ = {s:?} gave complexity {}", code.complexity);
            ensure!(classify(&code).is_block && classify(&code).sigma_forces_block, "classification for {s:?}");
        }
    }
    Ok(())
}

pub fn fixing_auto_count() -> usize {
    fixing_autos(&super::n5()).len()
}

/// `count` random ideals for every σ of (GF(4), 5) fixing all components.
pub fn block_classifier_n5(seed: u64, count: usize) -> std::result::Result<usize, String> {
    let mut r = rng(seed);
    let ring = super::n5();
    let mut checked = 0;
    for s in fixing_autos(&ring) {
        let ctx = SkewContext::new(&ring, s.clone()).unwrap();
        for _ in 0..count {
            let code = random_basic_code(&mut r, &ctx);
            ensure!(code.complexity == 0, "σ = {s:?} gave complexity {}", code.complexity);
            checked += 1;
        }
    }
    Ok(checked)
}

pub fn random_premultiplied(seed: u64, fs: &[SkewPoly]) -> Vec<SkewPoly> {
    let mut r = rng(seed);
    let ctx = fs[0].ctx().clone();
    fs.iter().map(|f| skew_unit(&ctx, &mut r).0.mul(f).unwrap()).collect()
}
