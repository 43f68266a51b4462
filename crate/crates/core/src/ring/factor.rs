//! Deterministic factorization of squarefree polynomials over a finite field.

use crate::galois::{Fe, Gf};
use crate::poly::Poly;

/// Monic irreducible factors of a squarefree monic `f`, sorted by degree and
/// then by encoded coefficient tuple.
pub(crate) fn factor_squarefree(f: &Poly, gf: &Gf) -> Vec<Poly> {
    let mut out = Vec::new();
    for (d, g) in distinct_degree(f, gf) {
        out.extend(equal_degree(&g, d, gf));
    }
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.key().cmp(&b.key())));
    out
}

/// Splits `f` into products of irreducibles of a common degree d, via
/// gcd(x^{q^d} - x, ·).
fn distinct_degree(f: &Poly, gf: &Gf) -> Vec<(usize, Poly)> {
    let q = gf.q() as u64;
    let x = Poly::x();
    let mut rest = f.monic(gf);
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut d = 0;
    while rest.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(q, &rest, gf);
        let g = Poly::gcd(&h.sub(&x, gf), &rest, gf);
        if g.degree().unwrap_or(0) > 0 {
            rest = rest.div_exact(&g, gf).expect("gcd divides");
            h = h.rem(&rest, gf);
            out.push((d, g));
        }
    }
    if let Some(dr) = rest.degree().filter(|&dr| dr > 0) {
        out.push((dr, rest));
    }
    out
}

/// Splits a product of distinct degree-d irreducibles. For t = x, x^2, …
/// the trace Tr(t) = t + t^q + … + t^{q^{d-1}} reduces to a constant in each
/// factor, so gcd(g, Tr(t) - c) over c ∈ F separates factors whose traces
/// differ. The traces of a basis separate any two distinct factors.
fn equal_degree(g: &Poly, d: usize, gf: &Gf) -> Vec<Poly> {
    let total = g.degree().unwrap_or(0);
    let mut pieces = vec![g.monic(gf)];
    let q = gf.q() as u64;
    let mut i = 1;
    while pieces.iter().any(|p| p.degree() != Some(d)) {
        assert!(i < total.max(2), "trace splitting exhausted");
        let mut next = Vec::new();
        for piece in pieces {
            if piece.degree() == Some(d) {
                next.push(piece);
                continue;
            }
            let t = Poly::monomial(Fe::ONE, i).rem(&piece, gf);
            let mut tr = Poly::zero();
            let mut cur = t;
            for _ in 0..d {
                tr = tr.add(&cur, gf);
                cur = cur.pow_mod(q, &piece, gf);
            }
            for c in gf.elements() {
                let h = Poly::gcd(&tr.sub(&Poly::constant(c), gf), &piece, gf);
                if h.degree().unwrap_or(0) > 0 {
                    next.push(h);
                }
            }
        }
        pieces = next;
        i += 1;
    }
    pieces
}
