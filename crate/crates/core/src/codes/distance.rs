//! Free distance by a shortest-path search on the encoder state graph, and
//! the Heller upper bound.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigUint;

use super::ConvCode;
use crate::error::{Error, Result};
use crate::galois::{Fe, Gf};

pub const DEFAULT_STATE_BOUND: u128 = 1_000_000;
pub const DEFAULT_IMAX: u32 = 20;

/// Horizon for the Heller bound, overridable through `SKEWCYCLIC_IMAX`.
pub fn heller_imax() -> u32 {
    std::env::var("SKEWCYCLIC_IMAX").ok().and_then(|s| s.parse().ok()).filter(|&i| i >= 1).unwrap_or(DEFAULT_IMAX)
}

pub fn free_distance(code: &ConvCode) -> Result<u64> {
    free_distance_with_bound(code, DEFAULT_STATE_BOUND)
}

fn decode(mut idx: u64, q: u64, len: usize) -> Vec<Fe> {
    (0..len)
        .map(|_| {
            let d = idx % q;
            idx /= q;
            Fe(d as u32)
        })
        .collect()
}

fn weight(v: &[Fe]) -> u64 {
    v.iter().filter(|c| !c.is_zero()).count() as u64
}

fn axpy(f: &Gf, acc: &mut [Fe], c: Fe, row: &[Fe]) {
    if c.is_zero() {
        return;
    }
    for (a, &r) in acc.iter_mut().zip(row) {
        *a = f.add(*a, f.mul(c, r));
    }
}

/// Minimum Hamming weight of a nonzero codeword u(z)·G(z), searched on the
/// controller canonical realization of the minimal generator matrix G.
pub fn free_distance_with_bound(code: &ConvCode, bound: u128) -> Result<u64> {
    if !code.is_code {
        return Err(Error::NotACode);
    }
    let g = &code.minimal_generator_matrix;
    let (k, n) = (g.rows(), g.cols());
    if k == 0 {
        return Err(Error::InvalidParameters("free distance of the zero code".into()));
    }
    let f = g.field();
    let q = f.q() as u64;
    let nu: Vec<usize> = (0..k).map(|i| g.row_degree(i).unwrap_or(0)).collect();
    let delta: usize = nu.iter().sum();
    let states = (q as u128).checked_pow(delta as u32).unwrap_or(u128::MAX);
    let inputs = (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if states.saturating_mul(inputs) > bound.saturating_mul(q as u128) || states > bound {
        return Err(Error::StateSpaceTooLarge { states, bound });
    }
    let (states, inputs) = (states as u64, inputs as u64);
    // coeff[i][j] = z^j coefficient vector of row i
    let coeff: Vec<Vec<Vec<Fe>>> =
        (0..k).map(|i| (0..=nu[i]).map(|j| g.row(i).iter().map(|p| p.coeff(j)).collect()).collect()).collect();
    let input_out: Vec<Vec<Fe>> = (0..inputs)
        .map(|u| {
            let u = decode(u, q, k);
            let mut acc = vec![Fe::ZERO; n];
            for i in 0..k {
                axpy(f, &mut acc, u[i], &coeff[i][0]);
            }
            acc
        })
        .collect();
    if delta == 0 {
        return Ok((1..inputs).map(|u| weight(&input_out[u as usize])).min().expect("k >= 1"));
    }
    // slot layout: row i owns ν_i consecutive digits, most recent input first
    let offsets: Vec<usize> = nu.iter().scan(0, |acc, &d| Some(std::mem::replace(acc, *acc + d))).collect();
    let state_out: Vec<Vec<Fe>> = (0..states)
        .map(|s| {
            let mem = decode(s, q, delta);
            let mut acc = vec![Fe::ZERO; n];
            for i in 0..k {
                for j in 1..=nu[i] {
                    axpy(f, &mut acc, mem[offsets[i] + j - 1], &coeff[i][j]);
                }
            }
            acc
        })
        .collect();
    let pow: Vec<u64> = (0..delta).map(|e| q.pow(e as u32)).collect();
    let next_state = |s: u64, u: u64| -> u64 {
        let mem = decode(s, q, delta);
        let ui = decode(u, q, k);
        let mut out = 0;
        for i in 0..k {
            for j in 0..nu[i] {
                let v = if j == 0 { ui[i] } else { mem[offsets[i] + j - 1] };
                out += v.0 as u64 * pow[offsets[i] + j];
            }
        }
        out
    };
    let edge_weight = |s: u64, u: u64| -> u64 {
        let mut v = state_out[s as usize].clone();
        for (a, &b) in v.iter_mut().zip(&input_out[u as usize]) {
            *a = f.add(*a, b);
        }
        weight(&v)
    };
    let mut best = u64::MAX;
    let mut dist = vec![u64::MAX; states as usize];
    let mut heap = BinaryHeap::new();
    for u in 1..inputs {
        let (t, w) = (next_state(0, u), edge_weight(0, u));
        if t == 0 {
            best = best.min(w);
        } else if w < dist[t as usize] {
            dist[t as usize] = w;
            heap.push(Reverse((w, t)));
        }
    }
    while let Some(Reverse((d, s))) = heap.pop() {
        if d >= best {
            break;
        }
        if d > dist[s as usize] {
            continue;
        }
        for u in 0..inputs {
            let (t, w) = (next_state(s, u), d + edge_weight(s, u));
            if t == 0 {
                best = best.min(w);
            } else if w < dist[t as usize] {
                dist[t as usize] = w;
                heap.push(Reverse((w, t)));
            }
        }
    }
    Ok(best)
}

/// min over i = 1..=i_max of ⌊ n(m+i) q^{k(m+i)-δ-1} (q-1) / (q^{k(m+i)-δ} - 1) ⌋.
pub fn heller_bound(n: u64, k: u64, delta: u64, m: u64, q: u64, i_max: u32) -> Result<u64> {
    if i_max == 0 || q < 2 || k == 0 {
        return Err(Error::InvalidParameters("need i_max >= 1, q >= 2, k >= 1".into()));
    }
    let mut best: Option<BigUint> = None;
    for i in 1..=i_max as u64 {
        let e = k * (m + i);
        if e <= delta {
            return Err(Error::InvalidParameters(format!("k(m+i) = {e} does not exceed delta = {delta}")));
        }
        let e = (e - delta) as u32;
        let qb = BigUint::from(q);
        let num = BigUint::from(n * (m + i)) * qb.pow(e - 1) * BigUint::from(q - 1);
        let den = qb.pow(e) - 1u32;
        let v = num / den;
        if best.as_ref().is_none_or(|b| v < *b) {
            best = Some(v);
        }
    }
    let best = best.expect("i_max >= 1");
    u64::try_from(best).map_err(|_| Error::InvalidParameters("bound overflows u64".into()))
}
