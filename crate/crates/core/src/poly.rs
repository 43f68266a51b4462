//! Dense univariate polynomials over a [`Gf`], low-to-high, trailing zeros trimmed.

use crate::galois::{Fe, Gf};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly(Vec<Fe>);

impl Poly {
    pub fn zero() -> Poly {
        Poly(Vec::new())
    }

    pub fn one() -> Poly {
        Poly(vec![Fe::ONE])
    }

    pub fn x() -> Poly {
        Poly(vec![Fe::ZERO, Fe::ONE])
    }

    pub fn constant(c: Fe) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    /// c·x^k
    pub fn monomial(c: Fe, k: usize) -> Poly {
        let mut v = vec![Fe::ZERO; k + 1];
        v[k] = c;
        Poly::from_coeffs(v)
    }

    pub fn from_coeffs(mut v: Vec<Fe>) -> Poly {
        while v.last() == Some(&Fe::ZERO) {
            v.pop();
        }
        Poly(v)
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.0
    }

    pub fn into_coeffs(self) -> Vec<Fe> {
        self.0
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Fe {
        self.0.get(i).copied().unwrap_or(Fe::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lc(&self) -> Fe {
        self.0.last().copied().unwrap_or(Fe::ZERO)
    }

    pub fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    pub fn add(&self, o: &Poly, f: &Gf) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly::from_coeffs((0..n).map(|i| f.add(self.coeff(i), o.coeff(i))).collect())
    }

    pub fn sub(&self, o: &Poly, f: &Gf) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly::from_coeffs((0..n).map(|i| f.sub(self.coeff(i), o.coeff(i))).collect())
    }

    pub fn neg(&self, f: &Gf) -> Poly {
        Poly(self.0.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn scale(&self, c: Fe, f: &Gf) -> Poly {
        Poly::from_coeffs(self.0.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Multiplies by x^k.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Fe::ZERO; k];
        v.extend_from_slice(&self.0);
        Poly(v)
    }

    pub fn mul(&self, o: &Poly, f: &Gf) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Fe::ZERO; self.0.len() + o.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in o.0.iter().enumerate() {
                v[i + j] = f.add(v[i + j], f.mul(a, b));
            }
        }
        Poly::from_coeffs(v)
    }

    /// Quotient and remainder. Panics on a zero divisor.
    pub fn divrem(&self, d: &Poly, f: &Gf) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = f.inv(d.lc()).expect("nonzero leading coefficient");
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Fe::ZERO; r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = r[k];
            if c.is_zero() {
                continue;
            }
            let t = f.mul(c, inv);
            quot[k - dd] = t;
            for (i, &b) in d.0.iter().enumerate() {
                let idx = k - dd + i;
                r[idx] = f.sub(r[idx], f.mul(t, b));
            }
        }
        r.truncate(dd);
        (Poly::from_coeffs(quot), Poly::from_coeffs(r))
    }

    pub fn rem(&self, d: &Poly, f: &Gf) -> Poly {
        self.divrem(d, f).1
    }

    pub fn div_exact(&self, d: &Poly, f: &Gf) -> Option<Poly> {
        let (q, r) = self.divrem(d, f);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self, f: &Gf) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(f.inv(self.lc()).expect("nonzero"), f)
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(a: &Poly, b: &Poly, f: &Gf) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(&b, f);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    /// Returns (g, s, t) with s·a + t·b = g, g monic.
    pub fn ext_gcd(a: &Poly, b: &Poly, f: &Gf) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1, f);
            let s2 = s0.sub(&q.mul(&s1, f), f);
            let t2 = t0.sub(&q.mul(&t1, f), f);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let c = f.inv(r0.lc()).expect("nonzero");
        (r0.scale(c, f), s0.scale(c, f), t0.scale(c, f))
    }

    /// Inverse modulo m, if it exists.
    pub fn inv_mod(&self, m: &Poly, f: &Gf) -> Option<Poly> {
        let (g, s, _) = Poly::ext_gcd(&self.rem(m, f), m, f);
        (g == Poly::one()).then(|| s.rem(m, f))
    }

    pub fn mul_mod(&self, o: &Poly, m: &Poly, f: &Gf) -> Poly {
        self.mul(o, f).rem(m, f)
    }

    pub fn pow_mod(&self, mut e: u64, m: &Poly, f: &Gf) -> Poly {
        let mut base = self.rem(m, f);
        let mut acc = Poly::one().rem(m, f);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m, f);
            }
            base = base.mul_mod(&base, m, f);
            e >>= 1;
        }
        acc
    }

    pub fn pow(&self, e: u32, f: &Gf) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| acc.mul(self, f))
    }

    pub fn eval(&self, x: Fe, f: &Gf) -> Fe {
        self.0.iter().rev().fold(Fe::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Encoded coefficient tuple, used for canonical ordering.
    pub fn key(&self) -> Vec<u32> {
        self.0.iter().map(|c| c.0).collect()
    }
}
