//! F-algebra automorphisms of `A`.

use std::fmt;
use std::sync::Arc;

use itertools::Itertools;

use super::{RingContext, RingElement};
use crate::error::{Error, Result};
use crate::fmat;
use crate::poly::Poly;

/// An automorphism σ of `A`, determined by σ(x).
#[derive(Clone)]
pub struct Automorphism {
    ring: Arc<RingContext>,
    // powers[i] = σ(x^i) = σ(x)^i, i.e. row i of P_σ
    powers: Vec<RingElement>,
    perm: Vec<usize>,
    order: usize,
}

impl PartialEq for Automorphism {
    fn eq(&self, other: &Self) -> bool {
        *self.ring == *other.ring && self.image_of_x() == other.image_of_x()
    }
}

impl Eq for Automorphism {}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<u32> = self.image_of_x().coeffs().iter().map(|c| c.0).collect();
        write!(f, "Automorphism(x -> {c:?})")
    }
}

/// True iff `a^n = 1` and `1, a, …, a^{n-1}` are F-linearly independent.
pub fn is_automorphism_image(ring: &RingContext, a: &RingElement) -> bool {
    if ring.pow(a, ring.n() as u64) != ring.one() {
        return false;
    }
    let rows: Vec<Vec<_>> = powers_of(ring, a).into_iter().map(|p| p.coeffs().to_vec()).collect();
    fmat::rank(&rows, ring.field()) == ring.n()
}

fn powers_of(ring: &RingContext, a: &RingElement) -> Vec<RingElement> {
    let mut out = Vec::with_capacity(ring.n());
    let mut cur = ring.one();
    for _ in 0..ring.n() {
        out.push(cur.clone());
        cur = ring.mul(&cur, a);
    }
    out
}

impl Automorphism {
    pub fn identity(ring: &Arc<RingContext>) -> Automorphism {
        Automorphism::build(ring, ring.x_pow(1))
    }

    pub fn from_image(ring: &Arc<RingContext>, image: RingElement) -> Result<Automorphism> {
        if image.len() != ring.n() {
            return Err(Error::LengthMismatch { expected: ring.n(), got: image.len() });
        }
        if !is_automorphism_image(ring, &image) {
            return Err(Error::NotAnAutomorphism);
        }
        Ok(Automorphism::build(ring, image))
    }

    fn build(ring: &Arc<RingContext>, image: RingElement) -> Automorphism {
        let powers = powers_of(ring, &image);
        let mut sigma = Automorphism { ring: ring.clone(), powers, perm: Vec::new(), order: 0 };
        sigma.perm = (0..ring.r())
            .map(|k| {
                let img = sigma.apply(ring.idempotent(k));
                ring.idempotents().iter().position(|e| *e == img).expect("automorphisms permute primitive idempotents")
            })
            .collect();
        let x = ring.x_pow(1);
        let mut cur = sigma.apply(&x);
        let mut order = 1;
        while cur != x {
            cur = sigma.apply(&cur);
            order += 1;
        }
        sigma.order = order;
        sigma
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn image_of_x(&self) -> &RingElement {
        &self.powers[1 % self.ring.n()]
    }

    /// σ(x^i) for i < n, the rows of P_σ.
    pub fn power_images(&self) -> &[RingElement] {
        &self.powers
    }

    /// The permutation τ with σ(e_k) = e_{τ(k)}.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_identity(&self) -> bool {
        *self.image_of_x() == self.ring.x_pow(1)
    }

    pub fn fixes_all_components(&self) -> bool {
        self.perm.iter().enumerate().all(|(k, &t)| k == t)
    }

    pub fn apply(&self, a: &RingElement) -> RingElement {
        let ring = &*self.ring;
        let f = ring.field();
        let mut acc = vec![crate::galois::Fe::ZERO; ring.n()];
        for (i, &c) in a.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, &v) in acc.iter_mut().zip(self.powers[i].coeffs()) {
                *slot = f.add(*slot, f.mul(c, v));
            }
        }
        RingElement(acc)
    }

    /// self ∘ other
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism::build(&self.ring, self.apply(other.image_of_x()))
    }

    pub fn power(&self, k: i64) -> Automorphism {
        let e = k.rem_euclid(self.order as i64) as usize;
        let mut img = self.ring.x_pow(1);
        for _ in 0..e {
            img = self.apply(&img);
        }
        Automorphism::build(&self.ring, img)
    }

    pub fn inverse(&self) -> Automorphism {
        self.power(self.order as i64 - 1)
    }

    /// σ̂ = θ∘σ^{-1}∘θ
    pub fn sigma_hat(&self) -> Automorphism {
        let ring = &self.ring;
        let inv = self.inverse();
        let img = ring.theta(&inv.apply(&ring.theta(&ring.x_pow(1))));
        Automorphism::build(ring, img)
    }

    /// All automorphisms of `A`: for every permutation of components within
    /// equal-degree classes and every Frobenius twist per component.
    pub fn enumerate(ring: &Arc<RingContext>) -> Vec<Automorphism> {
        let r = ring.r();
        // roots[k][j]: roots of π_k inside K_j, for deg π_k = deg π_j
        let mut roots = vec![vec![Vec::new(); r]; r];
        for k in 0..r {
            for j in 0..r {
                if ring.factor_degree(k) == ring.factor_degree(j) {
                    roots[k][j] = conjugate_roots(ring, k, j);
                }
            }
        }
        let classes: Vec<Vec<usize>> = (0..r)
            .chunk_by(|&k| ring.factor_degree(k))
            .into_iter()
            .map(|(_, g)| g.collect())
            .collect();
        let class_perms: Vec<Vec<Vec<usize>>> =
            classes.iter().map(|c| c.iter().copied().permutations(c.len()).collect()).collect();
        let twists: Vec<Vec<usize>> =
            (0..r).map(|k| (0..ring.factor_degree(k)).collect::<Vec<_>>()).multi_cartesian_product().collect();
        let mut out = Vec::new();
        for choice in class_perms.iter().multi_cartesian_product() {
            let mut tau = vec![0; r];
            for (class, perm) in classes.iter().zip(&choice) {
                for (&k, &t) in class.iter().zip(perm.iter()) {
                    tau[k] = t;
                }
            }
            for twist in &twists {
                let mut residues = vec![Poly::zero(); r];
                for k in 0..r {
                    residues[tau[k]] = roots[k][tau[k]][twist[k]].clone();
                }
                let img = ring.crt_inverse(&residues).expect("residues are reduced");
                out.push(Automorphism::build(ring, img));
            }
        }
        out
    }
}

/// Roots of π_k in K_j: the smallest-encoded root followed by its Frobenius
/// conjugates.
fn conjugate_roots(ring: &RingContext, k: usize, j: usize) -> Vec<Poly> {
    let pk = ring.factor(k);
    let first = ring
        .comp_elements(j)
        .find(|y| ring.comp_eval(j, pk, y).is_zero())
        .expect("equal-degree components are isomorphic");
    let mut out = vec![first];
    for _ in 1..ring.factor_degree(k) {
        let next = ring.comp_frobenius(j, out.last().unwrap());
        out.push(next);
    }
    out
}
