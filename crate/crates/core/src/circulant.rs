//! The bridge between `F[z]^n` and `A[z; σ]`: the maps 𝔭/𝔳, circulants,
//! the automorphism matrix P_σ and σ-circulants.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::galois::Fe;
use crate::linalg::PolyMatrix;
use crate::poly::Poly;
use crate::ring::{Automorphism, RingContext, RingElement};
use crate::skew::{SkewContext, SkewPoly};

/// 𝔳: entry i collects the x^i coefficients of all z-coefficients.
pub fn poly_to_vec(f: &SkewPoly) -> Vec<Poly> {
    let n = f.ring().n();
    (0..n).map(|i| Poly::from_coeffs(f.coeffs().iter().map(|c| c.coeff(i)).collect())).collect()
}

/// 𝔭: the inverse of [`poly_to_vec`].
pub fn vec_to_poly(ctx: &Arc<SkewContext>, v: &[Poly]) -> Result<SkewPoly> {
    let n = ctx.ring().n();
    if v.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: v.len() });
    }
    let deg = v.iter().filter_map(|p| p.degree()).max();
    let coeffs = match deg {
        None => Vec::new(),
        Some(d) => (0..=d).map(|nu| RingElement(v.iter().map(|p| p.coeff(nu)).collect())).collect(),
    };
    Ok(SkewPoly::from_coeffs(ctx, coeffs))
}

fn constant_rows(ring: &RingContext, rows: impl Iterator<Item = RingElement>) -> PolyMatrix {
    let rows: Vec<Vec<Fe>> = rows.map(|r| r.coeffs().to_vec()).collect();
    PolyMatrix::from_constants(ring.field_arc(), &rows).expect("square")
}

/// M_a, with row i equal to 𝔳(x^i·a).
pub fn classical_circulant(ring: &RingContext, a: &RingElement) -> PolyMatrix {
    constant_rows(ring, (0..ring.n()).map(|i| ring.mul(&ring.x_pow(i), a)))
}

/// P_σ, with row i equal to 𝔳(σ(x^i)).
pub fn p_sigma(sigma: &Automorphism) -> PolyMatrix {
    constant_rows(sigma.ring(), sigma.power_images().iter().cloned())
}

/// M^σ(g), with row i equal to 𝔳(x^i·g).
pub fn sigma_circulant(g: &SkewPoly) -> PolyMatrix {
    let ring = g.ring();
    let rows = (0..ring.n()).map(|i| poly_to_vec(&g.left_mul_ring(&ring.x_pow(i)))).collect();
    PolyMatrix::from_rows(ring.field_arc(), rows).expect("square")
}

/// M^σ(g) computed as Σ_ν z^ν·P_σ^ν·M_{g_ν}.
pub fn sigma_circulant_expanded(g: &SkewPoly) -> PolyMatrix {
    let ring = g.ring();
    let n = ring.n();
    let p = p_sigma(g.ctx().sigma());
    let mut acc = PolyMatrix::zeros(ring.field_arc(), n, n);
    let mut p_pow = PolyMatrix::identity(ring.field_arc(), n);
    for (nu, c) in g.coeffs().iter().enumerate() {
        let term = p_pow.mul(&classical_circulant(ring, c)).expect("square");
        acc = acc.add(&term.scale(&Poly::monomial(Fe::ONE, nu))).expect("square");
        p_pow = p_pow.mul(&p).expect("square");
    }
    acc
}

/// 𝔪(v) = 𝔳(x·𝔭(v)).
pub fn sigma_shift(ctx: &Arc<SkewContext>, v: &[Poly]) -> Result<Vec<Poly>> {
    let f = vec_to_poly(ctx, v)?;
    Ok(poly_to_vec(&f.left_mul_ring(&ctx.ring().x_pow(1))))
}
