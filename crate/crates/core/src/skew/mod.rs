//! The skew polynomial ring `R = A[z; σ]` with `a·z = z·σ(a)`.

mod reduce;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::{Automorphism, RingContext, RingElement};

pub use reduce::{
    is_reduced, is_reduced_family, normalize, principal_generator, reduce_family, ReductionOutcome,
};

/// A ring `A` together with an automorphism σ.
pub struct SkewContext {
    ring: Arc<RingContext>,
    sigma: Automorphism,
    // σ^0, σ^1, …, σ^{order-1}
    powers: Vec<Automorphism>,
}

impl fmt::Debug for SkewContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewContext(n={}, sigma={:?})", self.ring.n(), self.sigma)
    }
}

impl SkewContext {
    pub fn new(ring: &Arc<RingContext>, sigma: Automorphism) -> Result<Arc<SkewContext>> {
        if **sigma.ring() != **ring {
            return Err(Error::ContextMismatch);
        }
        let mut powers = vec![Automorphism::identity(ring)];
        for _ in 1..sigma.order() {
            let next = sigma.compose(powers.last().unwrap());
            powers.push(next);
        }
        Ok(Arc::new(SkewContext { ring: ring.clone(), sigma, powers }))
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn sigma(&self) -> &Automorphism {
        &self.sigma
    }

    /// σ^k for any integer k.
    pub fn sigma_pow(&self, k: i64) -> &Automorphism {
        &self.powers[k.rem_euclid(self.powers.len() as i64) as usize]
    }

    /// σ^k(a)
    pub fn apply_pow(&self, k: i64, a: &RingElement) -> RingElement {
        self.sigma_pow(k).apply(a)
    }

    /// τ^k(idx), where σ^k(e_idx) = e_{τ^k(idx)}.
    pub fn perm_pow(&self, k: i64, idx: usize) -> usize {
        self.sigma_pow(k).perm()[idx]
    }

    pub fn same(&self, other: &SkewContext) -> bool {
        std::ptr::eq(self, other) || (*self.ring == *other.ring && self.sigma == other.sigma)
    }

    /// The context over σ^{-1}.
    pub fn inverse_context(&self) -> Arc<SkewContext> {
        SkewContext::new(&self.ring, self.sigma.inverse()).expect("same ring")
    }

    /// The context over σ̂.
    pub fn hat_context(&self) -> Arc<SkewContext> {
        SkewContext::new(&self.ring, self.sigma.sigma_hat()).expect("same ring")
    }
}

/// A left monomial z^μ e_k. The derived order compares μ first, then k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub zpow: usize,
    pub component: usize,
}

impl Monomial {
    /// Whether this monomial right-divides a term `z^ν c` with `c` in component l.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.zpow <= other.zpow && self.component == other.component
    }
}

/// `Σ z^ν g_ν` with coefficients in `A`, trailing zeros trimmed.
#[derive(Clone)]
pub struct SkewPoly {
    ctx: Arc<SkewContext>,
    coeffs: Vec<RingElement>,
}

impl PartialEq for SkewPoly {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.same(&other.ctx) && self.coeffs == other.coeffs
    }
}

impl Eq for SkewPoly {}

impl fmt::Debug for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<Vec<u32>> = self.coeffs.iter().map(|a| a.coeffs().iter().map(|c| c.0).collect()).collect();
        write!(f, "SkewPoly{c:?}")
    }
}

impl SkewPoly {
    pub fn from_coeffs(ctx: &Arc<SkewContext>, mut coeffs: Vec<RingElement>) -> SkewPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SkewPoly { ctx: ctx.clone(), coeffs }
    }

    pub fn zero(ctx: &Arc<SkewContext>) -> SkewPoly {
        SkewPoly { ctx: ctx.clone(), coeffs: Vec::new() }
    }

    pub fn one(ctx: &Arc<SkewContext>) -> SkewPoly {
        SkewPoly::constant(ctx, ctx.ring.one())
    }

    pub fn constant(ctx: &Arc<SkewContext>, a: RingElement) -> SkewPoly {
        SkewPoly::from_coeffs(ctx, vec![a])
    }

    /// z^ν·a
    pub fn monomial(ctx: &Arc<SkewContext>, nu: usize, a: RingElement) -> SkewPoly {
        let mut v = vec![ctx.ring.zero(); nu];
        v.push(a);
        SkewPoly::from_coeffs(ctx, v)
    }

    pub fn z(ctx: &Arc<SkewContext>) -> SkewPoly {
        SkewPoly::monomial(ctx, 1, ctx.ring.one())
    }

    pub fn ctx(&self) -> &Arc<SkewContext> {
        &self.ctx
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ctx.ring
    }

    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    /// Coefficient of z^ν (zero beyond the degree).
    pub fn coeff(&self, nu: usize) -> RingElement {
        self.coeffs.get(nu).cloned().unwrap_or_else(|| self.ctx.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg_z(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Reinterprets the same coefficients over another context on the same ring.
    pub fn with_context(&self, ctx: &Arc<SkewContext>) -> Result<SkewPoly> {
        if *ctx.ring != *self.ctx.ring {
            return Err(Error::ContextMismatch);
        }
        Ok(SkewPoly { ctx: ctx.clone(), coeffs: self.coeffs.clone() })
    }

    fn check(&self, o: &SkewPoly) -> Result<()> {
        if self.ctx.same(&o.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    fn zip_with(&self, o: &SkewPoly, op: impl Fn(&RingElement, &RingElement) -> RingElement) -> SkewPoly {
        let len = self.coeffs.len().max(o.coeffs.len());
        let v = (0..len).map(|i| op(&self.coeff(i), &o.coeff(i))).collect();
        SkewPoly::from_coeffs(&self.ctx, v)
    }

    pub fn add(&self, o: &SkewPoly) -> Result<SkewPoly> {
        self.check(o)?;
        Ok(self.zip_with(o, |a, b| self.ctx.ring.add(a, b)))
    }

    pub fn sub(&self, o: &SkewPoly) -> Result<SkewPoly> {
        self.check(o)?;
        Ok(self.zip_with(o, |a, b| self.ctx.ring.sub(a, b)))
    }

    pub fn neg(&self) -> SkewPoly {
        let v = self.coeffs.iter().map(|a| self.ctx.ring.neg(a)).collect();
        SkewPoly::from_coeffs(&self.ctx, v)
    }

    /// (Σ z^ν g_ν)(Σ z^μ h_μ) = Σ z^{ν+μ} σ^μ(g_ν) h_μ
    pub fn mul(&self, o: &SkewPoly) -> Result<SkewPoly> {
        self.check(o)?;
        Ok(self.mul_unchecked(o))
    }

    pub(crate) fn mul_unchecked(&self, o: &SkewPoly) -> SkewPoly {
        let ring = &self.ctx.ring;
        if self.is_zero() || o.is_zero() {
            return SkewPoly::zero(&self.ctx);
        }
        let mut v = vec![ring.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (mu, h) in o.coeffs.iter().enumerate() {
            if h.is_zero() {
                continue;
            }
            let s = self.ctx.sigma_pow(mu as i64);
            for (nu, g) in self.coeffs.iter().enumerate() {
                if !g.is_zero() {
                    let t = ring.mul(&s.apply(g), h);
                    v[nu + mu] = ring.add(&v[nu + mu], &t);
                }
            }
        }
        SkewPoly::from_coeffs(&self.ctx, v)
    }

    /// a·f for a ∈ A.
    pub fn left_mul_ring(&self, a: &RingElement) -> SkewPoly {
        let ring = &self.ctx.ring;
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(nu, c)| ring.mul(&self.ctx.apply_pow(nu as i64, a), c))
            .collect();
        SkewPoly::from_coeffs(&self.ctx, v)
    }

    /// f·a for a ∈ A.
    pub fn right_mul_ring(&self, a: &RingElement) -> SkewPoly {
        let ring = &self.ctx.ring;
        let v = self.coeffs.iter().map(|c| ring.mul(c, a)).collect();
        SkewPoly::from_coeffs(&self.ctx, v)
    }

    /// f^{(k)} = e_k·f
    pub fn component(&self, k: usize) -> SkewPoly {
        let ring = &self.ctx.ring;
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(nu, c)| ring.project(c, self.ctx.perm_pow(nu as i64, k)))
            .collect();
        SkewPoly::from_coeffs(&self.ctx, v)
    }

    /// T_f = {k : e_k f ≠ 0}
    pub fn support(&self) -> Vec<usize> {
        (0..self.ctx.ring.r()).filter(|&k| !self.component(k).is_zero()).collect()
    }

    /// All nonzero terms z^μ e_k f_μ, in increasing monomial order.
    pub fn terms(&self) -> Vec<(Monomial, RingElement)> {
        let ring = &self.ctx.ring;
        let mut out = Vec::new();
        for (mu, c) in self.coeffs.iter().enumerate() {
            for k in ring.support(c) {
                out.push((Monomial { zpow: mu, component: k }, ring.project(c, k)));
            }
        }
        out
    }

    pub fn leading_term(&self) -> Result<(Monomial, RingElement)> {
        let (mu, c) = self.coeffs.iter().enumerate().next_back().ok_or(Error::ZeroPolynomial)?;
        let ring = &self.ctx.ring;
        let k = *ring.support(c).last().expect("trimmed leading coefficient is nonzero");
        Ok((Monomial { zpow: mu, component: k }, ring.project(c, k)))
    }

    pub fn leading_monomial(&self) -> Result<Monomial> {
        Ok(self.leading_term()?.0)
    }

    /// For f in a single component e_k·R, returns k.
    pub fn home_component(&self) -> Result<usize> {
        let lm = self.leading_monomial()?;
        Ok(self.ctx.perm_pow(-(lm.zpow as i64), lm.component))
    }

    /// g̃ = Σ z^ν σ^{-ν}(g_ν), an element of A[z; σ^{-1}].
    pub fn tilde(&self) -> SkewPoly {
        let ctx = self.ctx.inverse_context();
        let v = self.coeffs.iter().enumerate().map(|(nu, c)| self.ctx.apply_pow(-(nu as i64), c)).collect();
        SkewPoly::from_coeffs(&ctx, v)
    }

    /// ĝ = Σ z^ν σ̂^ν(θ(g_ν)), an element of A[z; σ̂].
    pub fn hat(&self) -> SkewPoly {
        let ctx = self.ctx.hat_context();
        let ring = &self.ctx.ring;
        let v = self.coeffs.iter().enumerate().map(|(nu, c)| ctx.apply_pow(nu as i64, &ring.theta(c))).collect();
        SkewPoly::from_coeffs(&ctx, v)
    }

    /// π_(g) = Π_{k ∈ T_g} π_k
    pub fn pi(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let ring = &self.ctx.ring;
        Ok(self.support().iter().fold(Poly::one(), |acc, &k| acc.mul(ring.factor(k), ring.field())))
    }

    /// Whether T_g = T_{g_0}.
    pub fn delay_free_witness(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g0 = SkewPoly::constant(&self.ctx, self.coeff(0));
        Ok(self.support() == g0.support())
    }
}

/// The elementary-operation coefficient: given a divisor leading term z^μ b
/// and a target term z^ν c in the same component with μ ≤ ν, returns
/// (ν-μ, a) with z^{ν-μ}·a·z^μ b = z^ν c, namely a = σ^{-μ}(c·b^{-1}).
pub fn division_witness(
    ctx: &SkewContext,
    divisor: (Monomial, &RingElement),
    target: (Monomial, &RingElement),
) -> Option<(usize, RingElement)> {
    let (dm, b) = divisor;
    let (tm, c) = target;
    if !dm.divides(&tm) {
        return None;
    }
    let ring = &ctx.ring;
    let l = tm.component;
    let binv = ring.comp_inv(l, &ring.residue(b, l)).ok()?;
    let prod = ring.comp_mul(l, &ring.residue(c, l), &binv);
    let a = ctx.apply_pow(-(dm.zpow as i64), &ring.lift(&prod, l));
    Some((tm.zpow - dm.zpow, a))
}
