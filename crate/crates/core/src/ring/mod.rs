//! The cyclic ring `A = F[x]/(x^n - 1)` with `gcd(n, p) = 1`.
//!
//! `x^n - 1` is factored into distinct monic irreducibles `π_0, …, π_{r-1}`,
//! ordered by degree and then by encoded coefficient tuple. Component `k`
//! is the field `K_k = F[x]/(π_k)`; residues in `K_k` are [`Poly`] values of
//! degree below `deg π_k`. Component indices are 0-based.

mod auto;
mod factor;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::galois::{Fe, Gf};
use crate::poly::Poly;

pub use auto::{is_automorphism_image, Automorphism};

/// An element of `A`, stored as exactly `n` coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement(pub(crate) Vec<Fe>);

impl RingElement {
    pub fn coeffs(&self) -> &[Fe] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> Fe {
        self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_coeffs(self.0.clone())
    }
}

#[derive(Debug)]
pub struct RingContext {
    field: Arc<Gf>,
    n: usize,
    xn1: Poly,
    factors: Vec<Poly>,
    idempotents: Vec<RingElement>,
}

impl PartialEq for RingContext {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && *self.field == *other.field
    }
}

impl Eq for RingContext {}

impl RingContext {
    pub fn new(field: Arc<Gf>, n: usize) -> Result<Arc<RingContext>> {
        if n == 0 {
            return Err(Error::InvalidParameters("n must be positive".into()));
        }
        if n.is_multiple_of(field.p() as usize) {
            return Err(Error::CharDividesN { p: field.p(), n });
        }
        let f = &*field;
        let xn1 = Poly::monomial(Fe::ONE, n).sub(&Poly::one(), f);
        let factors = factor::factor_squarefree(&xn1, f);
        let idempotents = factors
            .iter()
            .map(|pk| {
                let cof = xn1.div_exact(pk, f).expect("factor divides");
                let inv = cof.inv_mod(pk, f).expect("coprime cofactor");
                let e = cof.mul(&inv, f).rem(&xn1, f);
                let mut v = e.into_coeffs();
                v.resize(n, Fe::ZERO);
                RingElement(v)
            })
            .collect();
        Ok(Arc::new(RingContext { field, n, xn1, factors, idempotents }))
    }

    pub fn field(&self) -> &Gf {
        &self.field
    }

    pub fn field_arc(&self) -> &Arc<Gf> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of components r.
    pub fn r(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[Poly] {
        &self.factors
    }

    pub fn factor(&self, k: usize) -> &Poly {
        &self.factors[k]
    }

    pub fn factor_degree(&self, k: usize) -> usize {
        self.factors[k].degree().expect("nonconstant factor")
    }

    pub fn idempotents(&self) -> &[RingElement] {
        &self.idempotents
    }

    pub fn idempotent(&self, k: usize) -> &RingElement {
        &self.idempotents[k]
    }

    pub fn x_n_minus_1(&self) -> &Poly {
        &self.xn1
    }

    // ---- construction ----

    pub fn zero(&self) -> RingElement {
        RingElement(vec![Fe::ZERO; self.n])
    }

    pub fn one(&self) -> RingElement {
        self.constant(Fe::ONE)
    }

    pub fn constant(&self, c: Fe) -> RingElement {
        let mut v = vec![Fe::ZERO; self.n];
        v[0] = c;
        RingElement(v)
    }

    /// c·x^i, with i taken mod n.
    pub fn monomial(&self, c: Fe, i: usize) -> RingElement {
        let mut v = vec![Fe::ZERO; self.n];
        v[i % self.n] = c;
        RingElement(v)
    }

    pub fn x_pow(&self, i: usize) -> RingElement {
        self.monomial(Fe::ONE, i)
    }

    pub fn element(&self, coeffs: Vec<Fe>) -> Result<RingElement> {
        if coeffs.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: coeffs.len() });
        }
        if coeffs.iter().any(|c| c.0 >= self.field.q()) {
            return Err(Error::InvalidParameters("field element out of range".into()));
        }
        Ok(RingElement(coeffs))
    }

    /// Reduces an arbitrary polynomial mod x^n - 1.
    pub fn from_poly(&self, p: &Poly) -> RingElement {
        let mut v = vec![Fe::ZERO; self.n];
        for (i, &c) in p.coeffs().iter().enumerate() {
            v[i % self.n] = self.field.add(v[i % self.n], c);
        }
        RingElement(v)
    }

    // ---- arithmetic ----

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        RingElement(a.0.iter().zip(&b.0).map(|(&x, &y)| self.field.add(x, y)).collect())
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        RingElement(a.0.iter().zip(&b.0).map(|(&x, &y)| self.field.sub(x, y)).collect())
    }

    pub fn neg(&self, a: &RingElement) -> RingElement {
        RingElement(a.0.iter().map(|&x| self.field.neg(x)).collect())
    }

    pub fn scale(&self, a: &RingElement, c: Fe) -> RingElement {
        RingElement(a.0.iter().map(|&x| self.field.mul(x, c)).collect())
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let f = &*self.field;
        let n = self.n;
        let mut v = vec![Fe::ZERO; n];
        for (i, &x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                if !y.is_zero() {
                    let k = (i + j) % n;
                    v[k] = f.add(v[k], f.mul(x, y));
                }
            }
        }
        RingElement(v)
    }

    pub fn pow(&self, a: &RingElement, e: u64) -> RingElement {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// θ(a) = a(x^{n-1}).
    pub fn theta(&self, a: &RingElement) -> RingElement {
        let n = self.n;
        RingElement((0..n).map(|i| a.0[(n - i) % n]).collect())
    }

    // ---- components ----

    /// ρ_k(a) = a mod π_k.
    pub fn residue(&self, a: &RingElement, k: usize) -> Poly {
        a.to_poly().rem(&self.factors[k], &self.field)
    }

    pub fn crt_forward(&self, a: &RingElement) -> Vec<Poly> {
        let p = a.to_poly();
        self.factors.iter().map(|pk| p.rem(pk, &self.field)).collect()
    }

    pub fn crt_inverse(&self, residues: &[Poly]) -> Result<RingElement> {
        if residues.len() != self.r() {
            return Err(Error::LengthMismatch { expected: self.r(), got: residues.len() });
        }
        let mut acc = self.zero();
        for (k, res) in residues.iter().enumerate() {
            if res.degree().is_some_and(|d| d >= self.factor_degree(k)) {
                return Err(Error::DegreeOutOfRange(k));
            }
            if !res.is_zero() {
                acc = self.add(&acc, &self.mul(&self.from_poly(res), &self.idempotents[k]));
            }
        }
        Ok(acc)
    }

    /// The element of `e_k·A` whose k-th residue is `res`.
    pub fn lift(&self, res: &Poly, k: usize) -> RingElement {
        self.mul(&self.from_poly(res), &self.idempotents[k])
    }

    /// e_k·a
    pub fn project(&self, a: &RingElement, k: usize) -> RingElement {
        self.mul(a, &self.idempotents[k])
    }

    /// Components on which `a` is nonzero.
    pub fn support(&self, a: &RingElement) -> Vec<usize> {
        (0..self.r()).filter(|&k| !self.residue(a, k).is_zero()).collect()
    }

    pub fn is_unit(&self, a: &RingElement) -> bool {
        self.support(a).len() == self.r()
    }

    pub fn unit_inverse(&self, a: &RingElement) -> Result<RingElement> {
        let inv = self
            .crt_forward(a)
            .iter()
            .enumerate()
            .map(|(k, res)| self.comp_inv(k, res))
            .collect::<Result<Vec<_>>>()?;
        self.crt_inverse(&inv)
    }

    pub fn comp_mul(&self, k: usize, a: &Poly, b: &Poly) -> Poly {
        a.mul_mod(b, &self.factors[k], &self.field)
    }

    pub fn comp_inv(&self, k: usize, a: &Poly) -> Result<Poly> {
        a.inv_mod(&self.factors[k], &self.field).ok_or(Error::NotAUnit)
    }

    /// a ↦ a^q in K_k.
    pub fn comp_frobenius(&self, k: usize, a: &Poly) -> Poly {
        a.pow_mod(self.field.q() as u64, &self.factors[k], &self.field)
    }

    /// All elements of K_k in increasing encoding order, where a residue
    /// `Σ c_i x^i` is encoded as `Σ enc(c_i)·q^i`.
    pub fn comp_elements(&self, k: usize) -> impl Iterator<Item = Poly> + '_ {
        let d = self.factor_degree(k);
        let q = self.field.q() as u64;
        (0..q.pow(d as u32)).map(move |mut idx| {
            let mut v = Vec::with_capacity(d);
            for _ in 0..d {
                v.push(Fe((idx % q) as u32));
                idx /= q;
            }
            Poly::from_coeffs(v)
        })
    }

    /// Evaluates a polynomial over F at a point of K_k.
    pub fn comp_eval(&self, k: usize, poly: &Poly, y: &Poly) -> Poly {
        poly.coeffs().iter().rev().fold(Poly::zero(), |acc, &c| {
            self.comp_mul(k, &acc, y).add(&Poly::constant(c), &self.field)
        })
    }
}
