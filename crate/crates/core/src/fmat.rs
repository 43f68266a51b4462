//! Small dense matrices over a field.

use crate::galois::{Fe, Gf};

/// Rank by Gaussian elimination.
pub fn rank(rows: &[Vec<Fe>], f: &Gf) -> usize {
    let mut m: Vec<Vec<Fe>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let inv = f.inv(m[r][c]).expect("nonzero pivot");
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let t = f.mul(m[i][c], inv);
                for j in c..cols {
                    let v = f.mul(t, m[r][j]);
                    m[i][j] = f.sub(m[i][j], v);
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Inverse of a square matrix, if it is nonsingular.
pub fn inverse(rows: &[Vec<Fe>], f: &Gf) -> Option<Vec<Vec<Fe>>> {
    let n = rows.len();
    let mut m: Vec<Vec<Fe>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Fe::ONE } else { Fe::ZERO }));
            row
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, piv);
        let inv = f.inv(m[c][c]).ok()?;
        for v in m[c].iter_mut() {
            *v = f.mul(*v, inv);
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let t = m[i][c];
                for j in 0..2 * n {
                    let v = f.mul(t, m[c][j]);
                    m[i][j] = f.sub(m[i][j], v);
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}
