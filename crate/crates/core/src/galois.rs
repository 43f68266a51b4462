//! Prime-power finite fields GF(p^m).
//!
//! Elements are identified with their integer encoding `enc = Σ c_i p^i`,
//! where `c_i` are the coordinates in the basis `1, t, …, t^{m-1}` and `t`
//! is the residue of the modulus variable.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Poly;

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u64 = 1 << 16;

/// A field element, stored as its integer encoding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    pub fn enc(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The field GF(p^m) together with lookup tables for multiplication.
#[derive(Clone)]
pub struct Gf {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    // exp has length 2(q-1) so that log sums need no reduction
    exp: Vec<u32>,
    log: Vec<u32>,
    gen_is_t: bool,
}

impl fmt::Debug for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Gf")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for Gf {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for Gf {}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut k: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= k {
        if k.is_multiple_of(d) {
            out.push(d);
            while k.is_multiple_of(d) {
                k /= d;
            }
        }
        d += 1;
    }
    if k > 1 {
        out.push(k);
    }
    out
}

impl Gf {
    /// Builds GF(p^m). Without a modulus, the lexicographically smallest
    /// monic irreducible (compared on the low-to-high coefficient tuple) is used.
    pub fn new(p: u32, m: u32, modulus: Option<&[u32]>) -> Result<Gf> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::DegreeMismatch { expected: 0, got: modulus.map(|c| c.to_vec()).unwrap_or_default() });
        }
        let q = (p as u64).checked_pow(m).filter(|&q| q <= MAX_FIELD_SIZE);
        let q = match q {
            Some(q) => q as u32,
            None => return Err(Error::FieldTooLarge((p as u64).saturating_pow(m))),
        };
        let prime = Gf::prime(p);
        let modulus = match modulus {
            Some(c) => {
                let ok = c.len() == m as usize + 1 && c[m as usize] == 1 && c.iter().all(|&v| v < p);
                if !ok {
                    return Err(Error::DegreeMismatch { expected: m, got: c.to_vec() });
                }
                let f = Poly::from_coeffs(c.iter().map(|&v| Fe(v)).collect());
                if !prime.is_irreducible(&f) {
                    return Err(Error::ReducibleModulus(p));
                }
                c.to_vec()
            }
            None => prime.smallest_irreducible(m as usize),
        };
        Ok(Gf::with_tables(p, m, q, modulus))
    }

    /// GF(p) with modulus `t`.
    fn prime(p: u32) -> Gf {
        Gf::with_tables(p, 1, p, vec![0, 1])
    }

    fn with_tables(p: u32, m: u32, q: u32, modulus: Vec<u32>) -> Gf {
        let mut gf = Gf { p, m, q, modulus, exp: Vec::new(), log: Vec::new(), gen_is_t: false };
        let order = q - 1;
        // t first, so that printed powers of `a` match the basis generator when possible
        let t = if m > 1 { p } else { 1 };
        let candidates: Vec<u32> = std::iter::once(t).chain((1..q).filter(|&c| c != t)).collect();
        let factors = prime_factors(order);
        let slow_pow = |gf: &Gf, a: u32, mut e: u32| {
            let (mut base, mut acc) = (a, 1u32);
            while e > 0 {
                if e & 1 == 1 {
                    acc = gf.slow_mul(acc, base);
                }
                base = gf.slow_mul(base, base);
                e >>= 1;
            }
            acc
        };
        let g = candidates
            .into_iter()
            .find(|&g| factors.iter().all(|&r| slow_pow(&gf, g, order / r) != 1))
            .expect("multiplicative group is cyclic");
        gf.gen_is_t = g == t && m > 1;
        let mut exp = Vec::with_capacity(2 * order as usize);
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u32;
        for i in 0..order {
            exp.push(cur);
            log[cur as usize] = i;
            cur = gf.slow_mul(cur, g);
        }
        exp.extend_from_within(..);
        gf.exp = exp;
        gf.log = log;
        gf
    }

    fn digits(&self, mut a: u32) -> Vec<u32> {
        let mut d = vec![0; self.m as usize];
        for slot in d.iter_mut() {
            *slot = a % self.p;
            a /= self.p;
        }
        d
    }

    fn undigits(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let (p, m) = (self.p as u64, self.m as usize);
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * m];
        for i in 0..m {
            for j in 0..m {
                prod[i + j] = (prod[i + j] + da[i] as u64 * db[j] as u64) % p;
            }
        }
        for k in (m..2 * m).rev() {
            let c = prod[k];
            if c != 0 {
                for i in 0..m {
                    let sub = c * self.modulus[i] as u64 % p;
                    prod[k - m + i] = (prod[k - m + i] + p - sub) % p;
                }
                prod[k] = 0;
            }
        }
        let d: Vec<u32> = prod[..m].iter().map(|&v| v as u32).collect();
        self.undigits(&d)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Field size q = p^m.
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Modulus coefficients, low-to-high, length m+1.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Whether `t` generates the multiplicative group.
    pub fn generator_is_t(&self) -> bool {
        self.gen_is_t
    }

    /// The residue `t` of the modulus variable (equals 0 for m = 1).
    pub fn t(&self) -> Fe {
        if self.m > 1 {
            Fe(self.p)
        } else {
            Fe(0)
        }
    }

    pub fn from_enc(&self, enc: u32) -> Option<Fe> {
        (enc < self.q).then_some(Fe(enc))
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Option<Fe> {
        if coeffs.len() != self.m as usize || coeffs.iter().any(|&c| c >= self.p) {
            return None;
        }
        Some(Fe(self.undigits(coeffs)))
    }

    /// Coordinates in the basis 1, t, …, t^{m-1}.
    pub fn coeffs(&self, a: Fe) -> Vec<u32> {
        self.digits(a.0)
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, k: i64) -> Fe {
        Fe(k.rem_euclid(self.p as i64) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.q).map(Fe)
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        if self.p == 2 {
            return Fe(a.0 ^ b.0);
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
        while x > 0 || y > 0 {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place = place.wrapping_mul(self.p);
        }
        Fe(out)
    }

    pub fn neg(&self, a: Fe) -> Fe {
        if self.p == 2 {
            return a;
        }
        let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
        while x > 0 {
            out += ((self.p - x % self.p) % self.p) * place;
            x /= self.p;
            place = place.wrapping_mul(self.p);
        }
        Fe(out)
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe::ZERO;
        }
        Fe(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let order = self.q - 1;
        Ok(Fe(self.exp[((order - self.log[a.0 as usize]) % order) as usize]))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// a^k; negative exponents invert first.
    pub fn pow(&self, a: Fe, k: i64) -> Result<Fe> {
        if a.0 == 0 {
            return match k {
                0 => Ok(Fe::ONE),
                k if k > 0 => Ok(Fe::ZERO),
                _ => Err(Error::DivisionByZero),
            };
        }
        let order = (self.q - 1) as i64;
        let e = (self.log[a.0 as usize] as i64 * k.rem_euclid(order)).rem_euclid(order);
        Ok(Fe(self.exp[e as usize]))
    }

    /// a ↦ a^p.
    pub fn frobenius(&self, a: Fe) -> Fe {
        self.pow(a, self.p as i64).expect("nonnegative exponent")
    }

    /// The primitive element behind the log tables; equals `t` when `t` is primitive.
    pub fn generator(&self) -> Fe {
        Fe(self.exp[1])
    }

    /// Discrete log of a nonzero element with respect to [`Gf::generator`].
    pub fn log(&self, a: Fe) -> Option<u32> {
        (a.0 != 0).then(|| self.log[a.0 as usize])
    }

    /// Discrete log of a nonzero element with respect to `t`, if `t` is primitive.
    pub fn log_t(&self, a: Fe) -> Option<u32> {
        (self.gen_is_t && a.0 != 0).then(|| self.log[a.0 as usize])
    }

    /// Rabin's test for a polynomial over this field (intended for prime fields).
    pub(crate) fn is_irreducible(&self, f: &Poly) -> bool {
        let d = match f.degree() {
            Some(d) if d >= 1 => d,
            _ => return false,
        };
        if d == 1 {
            return true;
        }
        let x = Poly::x();
        let q = self.q as u64;
        // x^{q^k} mod f
        let frob_pow = |k: usize| {
            let mut r = x.clone();
            for _ in 0..k {
                r = r.pow_mod(q, f, self);
            }
            r
        };
        if frob_pow(d).sub(&x, self).rem(f, self) != Poly::zero() {
            return false;
        }
        prime_factors(d as u32).into_iter().all(|r| {
            let h = frob_pow(d / r as usize).sub(&x, self);
            Poly::gcd(&h, f, self).degree() == Some(0)
        })
    }

    fn smallest_irreducible(&self, m: usize) -> Vec<u32> {
        let p = self.p;
        let total = (p as u64).pow(m as u32);
        for idx in 0..total {
            // c_0 is the most significant position in lex order
            let mut coeffs = vec![0u32; m + 1];
            let mut rest = idx;
            for i in (0..m).rev() {
                coeffs[i] = (rest % p as u64) as u32;
                rest /= p as u64;
            }
            coeffs[m] = 1;
            let f = Poly::from_coeffs(coeffs.iter().map(|&v| Fe(v)).collect());
            let has_root = m > 1 && self.elements().any(|c| f.eval(c, self).is_zero());
            if !has_root && self.is_irreducible(&f) {
                return coeffs;
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }
}
