//! σ-cyclic convolutional codes: generator and minimal matrices, complexity,
//! control polynomials, duals, free distance and classification.

mod distance;

use std::sync::Arc;

use crate::circulant::{sigma_circulant, vec_to_poly};
use crate::error::{Error, Result};
use crate::linalg::{is_basic, module_equal, right_kernel_basis, PolyMatrix};
use crate::poly::Poly;
use crate::skew::{is_reduced, principal_generator, SkewContext, SkewPoly};

pub use distance::{
    free_distance, free_distance_with_bound, heller_bound, heller_imax, DEFAULT_IMAX, DEFAULT_STATE_BOUND,
};

#[derive(Clone, Debug)]
pub struct ConvCode {
    pub ctx: Arc<SkewContext>,
    /// Reduced, normalized generator of the left ideal.
    pub generator: SkewPoly,
    /// Dimension κ = deg π_(g).
    pub kappa: usize,
    /// First κ rows of M^σ(g).
    pub generator_matrix: PolyMatrix,
    pub minimal_generator_matrix: PolyMatrix,
    pub complexity: usize,
    /// Whether M^σ(g) is basic, i.e. the module is a direct summand.
    pub is_code: bool,
}

impl ConvCode {
    pub fn n(&self) -> usize {
        self.ctx.ring().n()
    }

    /// Largest row degree of the minimal generator matrix.
    pub fn memory(&self) -> usize {
        (0..self.minimal_generator_matrix.rows())
            .filter_map(|i| self.minimal_generator_matrix.row_degree(i))
            .max()
            .unwrap_or(0)
    }
}

#[derive(Clone, Debug)]
pub struct DualityReport {
    /// h over σ with C = ker M^σ(h).
    pub control_poly: SkewPoly,
    /// h' over σ̂ generating the dual.
    pub dual_generator: SkewPoly,
    /// g' = ĝ over σ̂, a control polynomial of the dual.
    pub dual_control: SkewPoly,
    pub control_matrix: PolyMatrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub is_block: bool,
    pub sigma_forces_block: bool,
}

#[derive(Clone, Debug)]
pub struct CyclicModule {
    pub generator: SkewPoly,
    pub module_matrix: PolyMatrix,
    pub is_code: bool,
}

/// Builds the code generated by the left ideal ⟨fs⟩.
pub fn code_from_generator(ctx: &Arc<SkewContext>, fs: &[SkewPoly]) -> Result<ConvCode> {
    if fs.iter().any(|f| !f.ctx().same(ctx)) {
        return Err(Error::ContextMismatch);
    }
    let out = principal_generator(fs)?;
    if !out.is_principal {
        return Err(Error::NotPrincipal);
    }
    if !out.is_delay_free {
        return Err(Error::NotDelayFree);
    }
    Ok(code_from_reduced(out.generator.expect("principal")))
}

fn kappa_of(g: &SkewPoly) -> usize {
    g.pi().ok().and_then(|p| p.degree()).unwrap_or(0)
}

/// Stacks the first deg π_k rows of M^σ(g^{(k)}) over k ∈ T_g.
fn minimal_rows(g: &SkewPoly) -> PolyMatrix {
    let ring = g.ring();
    let mut m = PolyMatrix::zeros(ring.field_arc(), 0, ring.n());
    for k in g.support() {
        let rows = sigma_circulant(&g.component(k)).take_rows(ring.factor_degree(k));
        m = m.vstack(&rows).expect("same width");
    }
    m
}

/// Builds the code data from an already reduced generator.
pub fn code_from_reduced(g: SkewPoly) -> ConvCode {
    let ctx = g.ctx().clone();
    let ring = ctx.ring().clone();
    let kappa = kappa_of(&g);
    let full = sigma_circulant(&g);
    let is_code = is_basic(&full);
    let complexity = g
        .support()
        .into_iter()
        .map(|k| ring.factor_degree(k) * g.component(k).deg_z().unwrap_or(0))
        .sum();
    let minimal = minimal_rows(&g);
    debug_assert!(!is_code || forney_degree(&minimal) == complexity);
    ConvCode {
        ctx,
        generator: g,
        kappa,
        generator_matrix: full.take_rows(kappa),
        minimal_generator_matrix: minimal,
        complexity,
        is_code,
    }
}

/// Sum of row degrees.
pub fn forney_degree(m: &PolyMatrix) -> usize {
    (0..m.rows()).filter_map(|i| m.row_degree(i)).sum()
}

pub fn minimal_generator_matrix(code: &ConvCode) -> Result<PolyMatrix> {
    if !code.is_code {
        return Err(Error::NotACode);
    }
    Ok(code.minimal_generator_matrix.clone())
}

/// Computes the control polynomial h (C = ker M^σ(h)) and the dual generator h'.
pub fn control_polynomial(code: &ConvCode) -> Result<DualityReport> {
    if !code.is_code {
        return Err(Error::NotACode);
    }
    let ctx = &code.ctx;
    let hat_ctx = ctx.hat_context();
    let g = &code.generator;
    let mg = sigma_circulant(g);
    let kernel = right_kernel_basis(&mg);
    let fs: Vec<SkewPoly> =
        (0..kernel.cols()).map(|j| vec_to_poly(&hat_ctx, &kernel.column(j))).collect::<Result<_>>()?;
    let h_prime = if fs.is_empty() {
        SkewPoly::zero(&hat_ctx)
    } else {
        let out = principal_generator(&fs)?;
        if !out.is_principal {
            return Err(Error::InternalNotPrincipal);
        }
        out.generator.expect("principal")
    };
    let h = h_prime.hat().with_context(ctx)?;
    debug_assert!(h_prime.hat().ctx().same(ctx));
    let g_prime = g.hat();
    let mh = sigma_circulant(&h);
    assert!(g.mul(&h)?.is_zero(), "g·h must vanish");
    assert!(mg.mul(&mh)?.is_zero() && mh.mul(&mg)?.is_zero(), "M^σ(g) and M^σ(h) must annihilate");
    let left_kernel = right_kernel_basis(&mh.transpose()).transpose();
    assert!(module_equal(&left_kernel, &mg)?, "ker M^σ(h) must equal im M^σ(g)");
    Ok(DualityReport { control_poly: h, dual_generator: h_prime, dual_control: g_prime, control_matrix: mh })
}

/// The dual code, a σ̂-cyclic code generated by h'.
pub fn dual_code(code: &ConvCode) -> Result<ConvCode> {
    let report = control_polynomial(code)?;
    let dual = code_from_reduced(report.dual_generator);
    debug_assert_eq!(dual.kappa + code.kappa, code.n());
    Ok(dual)
}

/// Whether M^σ(g) is basic, for a reduced g.
pub fn is_basic_poly_test(g: &SkewPoly) -> Result<bool> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !is_reduced(g) {
        return Err(Error::NotReduced);
    }
    Ok(is_basic(&sigma_circulant(g)))
}

pub fn classify(code: &ConvCode) -> Classification {
    Classification { is_block: code.complexity == 0, sigma_forces_block: code.ctx.sigma().fixes_all_components() }
}

/// The module 𝔳(⟨𝔭(v)⟩): first κ rows of M^σ of the reduced generator.
pub fn smallest_cyclic_module(ctx: &Arc<SkewContext>, v: &[Poly]) -> Result<CyclicModule> {
    let f = vec_to_poly(ctx, v)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = principal_generator(&[f])?.generator.expect("a single generator spans a principal ideal");
    let full = sigma_circulant(&g);
    Ok(CyclicModule { module_matrix: full.take_rows(kappa_of(&g)), is_code: is_basic(&full), generator: g })
}
