//! Hermite and Smith normal forms over the Euclidean domain F[z].

use super::PolyMatrix;
use crate::poly::Poly;

/// U·M·V = D with U, V unimodular; `u_inv`, `v_inv` are their inverses.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: PolyMatrix,
    pub d: PolyMatrix,
    pub v: PolyMatrix,
    pub u_inv: PolyMatrix,
    pub v_inv: PolyMatrix,
}

impl SmithDecomposition {
    /// Nonzero diagonal entries, monic, each dividing the next.
    pub fn invariant_factors(&self) -> Vec<Poly> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d.get(i, i).clone()).filter(|p| !p.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }

    /// Checks U·M·V = D, U·U⁻¹ = I, V·V⁻¹ = I and the divisibility chain.
    pub fn verify(&self, m: &PolyMatrix) -> bool {
        let f = m.field_arc();
        let umv = self.u.mul(m).and_then(|x| x.mul(&self.v)).expect("conformable");
        let uu = self.u.mul(&self.u_inv).expect("square");
        let vv = self.v.mul(&self.v_inv).expect("square");
        let diag_ok = (0..self.d.rows()).all(|i| (0..self.d.cols()).all(|j| i == j || self.d.get(i, j).is_zero()));
        let inv = self.invariant_factors();
        let chain_ok = inv.windows(2).all(|w| w[1].rem(&w[0], f).is_zero())
            && inv.iter().all(|p| p.lc() == crate::galois::Fe::ONE);
        // zero diagonal entries come last
        let k = inv.len();
        let tail_ok = (k..self.d.rows().min(self.d.cols())).all(|i| self.d.get(i, i).is_zero());
        umv == self.d
            && uu == PolyMatrix::identity(f, m.rows())
            && vv == PolyMatrix::identity(f, m.cols())
            && diag_ok
            && chain_ok
            && tail_ok
    }
}

struct Work {
    a: PolyMatrix,
    u: PolyMatrix,
    u_inv: PolyMatrix,
    v: PolyMatrix,
    v_inv: PolyMatrix,
}

impl Work {
    fn f(&self) -> &crate::galois::Gf {
        self.a.field()
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for m in [&mut self.a, &mut self.u] {
            for c in 0..m.cols() {
                let t = m.get(i, c).clone();
                m.set(i, c, m.get(j, c).clone());
                m.set(j, c, t);
            }
        }
        let m = &mut self.u_inv;
        for r in 0..m.rows() {
            let t = m.get(r, i).clone();
            m.set(r, i, m.get(r, j).clone());
            m.set(r, j, t);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for m in [&mut self.a, &mut self.v] {
            for r in 0..m.rows() {
                let t = m.get(r, i).clone();
                m.set(r, i, m.get(r, j).clone());
                m.set(r, j, t);
            }
        }
        let m = &mut self.v_inv;
        for c in 0..m.cols() {
            let t = m.get(i, c).clone();
            m.set(i, c, m.get(j, c).clone());
            m.set(j, c, t);
        }
    }

    /// row_i ← row_i + q·row_t
    fn add_row(&mut self, i: usize, t: usize, q: &Poly) {
        let f = self.a.field_arc().clone();
        for m in [&mut self.a, &mut self.u] {
            for c in 0..m.cols() {
                let v = m.get(i, c).add(&m.get(t, c).mul(q, &f), &f);
                m.set(i, c, v);
            }
        }
        // U⁻¹ ← U⁻¹·(I - q e_i e_tᵀ): column t -= q·column i
        let m = &mut self.u_inv;
        for r in 0..m.rows() {
            let v = m.get(r, t).sub(&m.get(r, i).mul(q, &f), &f);
            m.set(r, t, v);
        }
    }

    /// col_j ← col_j + q·col_t
    fn add_col(&mut self, j: usize, t: usize, q: &Poly) {
        let f = self.a.field_arc().clone();
        for m in [&mut self.a, &mut self.v] {
            for r in 0..m.rows() {
                let v = m.get(r, j).add(&m.get(r, t).mul(q, &f), &f);
                m.set(r, j, v);
            }
        }
        // V⁻¹ ← (I - q e_t e_jᵀ)·V⁻¹: row t -= q·row j
        let m = &mut self.v_inv;
        for c in 0..m.cols() {
            let v = m.get(t, c).sub(&m.get(j, c).mul(q, &f), &f);
            m.set(t, c, v);
        }
    }

    fn scale_row(&mut self, i: usize, c: crate::galois::Fe) {
        let f = self.a.field_arc().clone();
        let cinv = f.inv(c).expect("nonzero");
        for m in [&mut self.a, &mut self.u] {
            for col in 0..m.cols() {
                let v = m.get(i, col).scale(c, &f);
                m.set(i, col, v);
            }
        }
        let m = &mut self.u_inv;
        for r in 0..m.rows() {
            let v = m.get(r, i).scale(cinv, &f);
            m.set(r, i, v);
        }
    }
}

/// Least-degree nonzero entry in the lower-right block starting at (t, t);
/// ties go to the smallest row, then column.
fn min_entry(a: &PolyMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            if let Some(d) = a.get(i, j).degree() {
                if best.is_none_or(|(bd, _, _)| d < bd) {
                    best = Some((d, i, j));
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

pub fn smith_form(m: &PolyMatrix) -> SmithDecomposition {
    let fa = m.field_arc().clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work {
        a: m.clone(),
        u: PolyMatrix::identity(&fa, rows),
        u_inv: PolyMatrix::identity(&fa, rows),
        v: PolyMatrix::identity(&fa, cols),
        v_inv: PolyMatrix::identity(&fa, cols),
    };
    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = min_entry(&w.a, t) else { break };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            let pivot = w.a.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..rows {
                if w.a.get(i, t).is_zero() {
                    continue;
                }
                let (q, r) = w.a.get(i, t).divrem(&pivot, w.f());
                w.add_row(i, t, &q.neg(w.f()));
                clean &= r.is_zero();
            }
            for j in t + 1..cols {
                if w.a.get(t, j).is_zero() {
                    continue;
                }
                let (q, r) = w.a.get(t, j).divrem(&pivot, w.f());
                w.add_col(j, t, &q.neg(w.f()));
                clean &= r.is_zero();
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !w.a.get(i, j).rem(&pivot, w.f()).is_zero()));
            match bad {
                Some(i) => w.add_row(t, i, &Poly::one()),
                None => break,
            }
        }
        let c = w.a.get(t, t).lc();
        if c.is_zero() {
            break;
        }
        let cinv = fa.inv(c).expect("nonzero");
        w.scale_row(t, cinv);
    }
    let s = SmithDecomposition { u: w.u, d: w.a, v: w.v, u_inv: w.u_inv, v_inv: w.v_inv };
    debug_assert!(s.verify(m), "Smith decomposition failed verification");
    s
}

/// Row-style Hermite form: echelon, monic pivots, entries above each pivot
/// of lower degree than the pivot. Zero rows are dropped.
pub fn hermite_form(m: &PolyMatrix) -> PolyMatrix {
    let fa = m.field_arc().clone();
    let f = &*fa;
    let mut rows = m.row_vecs();
    let cols = m.cols();
    let mut r = 0;
    let sub_mul = |target: &mut Vec<Poly>, src: &[Poly], q: &Poly| {
        for (t, s) in target.iter_mut().zip(src) {
            *t = t.sub(&s.mul(q, f), f);
        }
    };
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        loop {
            let piv = (r..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by_key(|&i| (rows[i][c].degree(), i));
            let Some(piv) = piv else { break };
            rows.swap(r, piv);
            let mut done = true;
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].divrem(&rows[r][c], f).0;
                let src = rows[r].clone();
                sub_mul(&mut rows[i], &src, &q);
                done &= rows[i][c].is_zero();
            }
            if done {
                break;
            }
        }
        if rows.get(r).is_none_or(|row| row[c].is_zero()) {
            continue;
        }
        let inv = f.inv(rows[r][c].lc()).expect("nonzero");
        for e in rows[r].iter_mut() {
            *e = e.scale(inv, f);
        }
        for i in 0..r {
            let q = rows[i][c].divrem(&rows[r][c], f).0;
            if !q.is_zero() {
                let src = rows[r].clone();
                sub_mul(&mut rows[i], &src, &q);
            }
        }
        r += 1;
    }
    rows.truncate(r);
    let mut out = PolyMatrix::from_rows(&fa, rows).expect("rectangular");
    out.cols = cols;
    out
}
