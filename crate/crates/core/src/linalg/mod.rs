//! Matrices over `F[z]`: Hermite and Smith forms and module predicates.

mod normal;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fmat;
use crate::galois::{Fe, Gf};
use crate::poly::Poly;

pub use normal::{hermite_form, smith_form, SmithDecomposition};

/// A dense matrix of polynomials in z.
#[derive(Clone)]
pub struct PolyMatrix {
    field: Arc<Gf>,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PartialEq for PolyMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}

impl Eq for PolyMatrix {}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<Vec<u32>> = self.row(i).iter().map(|p| p.key()).collect();
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

impl PolyMatrix {
    pub fn zeros(field: &Arc<Gf>, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix { field: field.clone(), rows, cols, entries: vec![Poly::zero(); rows * cols] }
    }

    pub fn identity(field: &Arc<Gf>, n: usize) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Poly::one());
        }
        m
    }

    pub fn from_rows(field: &Arc<Gf>, rows: Vec<Vec<Poly>>) -> Result<PolyMatrix> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let nrows = rows.len();
        Ok(PolyMatrix { field: field.clone(), rows: nrows, cols, entries: rows.into_iter().flatten().collect() })
    }

    /// A matrix with constant entries.
    pub fn from_constants(field: &Arc<Gf>, rows: &[Vec<Fe>]) -> Result<PolyMatrix> {
        PolyMatrix::from_rows(field, rows.iter().map(|r| r.iter().map(|&c| Poly::constant(c)).collect()).collect())
    }

    pub fn field(&self) -> &Gf {
        &self.field
    }

    pub fn field_arc(&self) -> &Arc<Gf> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Poly>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Poly> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }

    /// Largest entry degree, None for the zero matrix.
    pub fn degree(&self) -> Option<usize> {
        self.entries.iter().filter_map(|p| p.degree()).max()
    }

    pub fn row_degree(&self, i: usize) -> Option<usize> {
        self.row(i).iter().filter_map(|p| p.degree()).max()
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = PolyMatrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != o.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let f = &*self.field;
        let mut out = PolyMatrix::zeros(&self.field, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).add(&a.mul(b, f), f);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, o: &PolyMatrix) -> Result<PolyMatrix> {
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return Err(Error::DimensionMismatch("addition".into()));
        }
        let f = &*self.field;
        let entries = self.entries.iter().zip(&o.entries).map(|(a, b)| a.add(b, f)).collect();
        Ok(PolyMatrix { field: self.field.clone(), rows: self.rows, cols: self.cols, entries })
    }

    /// Multiplies every entry by a polynomial.
    pub fn scale(&self, p: &Poly) -> PolyMatrix {
        let f = &*self.field;
        let entries = self.entries.iter().map(|a| a.mul(p, f)).collect();
        PolyMatrix { field: self.field.clone(), rows: self.rows, cols: self.cols, entries }
    }

    pub fn vstack(&self, o: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != o.cols {
            return Err(Error::DimensionMismatch(format!("stacking {} and {} columns", self.cols, o.cols)));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&o.entries);
        Ok(PolyMatrix { field: self.field.clone(), rows: self.rows + o.rows, cols: self.cols, entries })
    }

    /// The first `k` rows.
    pub fn take_rows(&self, k: usize) -> PolyMatrix {
        let k = k.min(self.rows);
        PolyMatrix {
            field: self.field.clone(),
            rows: k,
            cols: self.cols,
            entries: self.entries[..k * self.cols].to_vec(),
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> PolyMatrix {
        let rows = idx.iter().map(|&i| self.row(i).to_vec()).collect();
        let mut m = PolyMatrix::from_rows(&self.field, rows).expect("equal widths");
        m.cols = self.cols;
        m
    }

    pub fn select_cols(&self, idx: &[usize]) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(&self.field, self.rows, idx.len());
        for i in 0..self.rows {
            for (jj, &j) in idx.iter().enumerate() {
                m.set(i, jj, self.get(i, j).clone());
            }
        }
        m
    }

    /// Leading row-coefficient matrix: row i holds the z^{d_i} coefficients,
    /// d_i the degree of row i.
    pub fn leading_row_coefficients(&self) -> Vec<Vec<Fe>> {
        (0..self.rows)
            .map(|i| match self.row_degree(i) {
                Some(d) => self.row(i).iter().map(|p| p.coeff(d)).collect(),
                None => vec![Fe::ZERO; self.cols],
            })
            .collect()
    }

    /// Rows sorted by their encoded coefficient tuples.
    pub fn sorted_rows(&self) -> Vec<Vec<Vec<u32>>> {
        let mut rows: Vec<Vec<Vec<u32>>> =
            (0..self.rows).map(|i| self.row(i).iter().map(|p| p.key()).collect()).collect();
        rows.sort();
        rows
    }
}

pub fn rank(m: &PolyMatrix) -> usize {
    smith_form(m).rank()
}

/// Columns form a basis of {w : M·w = 0}.
pub fn right_kernel_basis(m: &PolyMatrix) -> PolyMatrix {
    let s = smith_form(m);
    let r = s.rank();
    s.v.select_cols(&(r..m.cols()).collect::<Vec<_>>())
}

/// Smith form [[I, 0], [0, 0]].
pub fn is_basic(m: &PolyMatrix) -> bool {
    smith_form(m).invariant_factors().iter().all(|d| *d == Poly::one())
}

/// Whether the leading row-coefficient matrix has full rank over F.
pub fn is_minimal(m: &PolyMatrix) -> Result<bool> {
    if rank(m) != m.rows() {
        return Err(Error::NotFullRowRank);
    }
    Ok(fmat::rank(&m.leading_row_coefficients(), m.field()) == m.rows())
}

pub fn module_equal(a: &PolyMatrix, b: &PolyMatrix) -> Result<bool> {
    if a.cols() != b.cols() {
        return Err(Error::DimensionMismatch(format!("{} vs {} columns", a.cols(), b.cols())));
    }
    Ok(hermite_form(a) == hermite_form(b))
}

/// Whether the row module of `a` contains the rows of `b`.
pub fn module_contains(a: &PolyMatrix, b: &PolyMatrix) -> Result<bool> {
    let stacked = a.vstack(b)?;
    Ok(hermite_form(&stacked) == hermite_form(a))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModuleClass {
    pub delay_free: bool,
    pub non_catastrophic: bool,
    pub direct_summand: bool,
}

pub fn module_classify(m: &PolyMatrix) -> ModuleClass {
    let d = smith_form(m).invariant_factors();
    ModuleClass {
        delay_free: d.iter().all(|p| !p.coeff(0).is_zero()),
        non_catastrophic: d.iter().all(|p| p.coeffs().iter().filter(|c| !c.is_zero()).count() == 1),
        direct_summand: d.iter().all(|p| *p == Poly::one()),
    }
}
