//! Left reduction of families in `A[z; σ]` and the principal-generator algorithm.

use std::sync::Arc;

use super::{division_witness, Monomial, SkewContext, SkewPoly};
use crate::circulant::sigma_circulant;
use crate::error::{Error, Result};
use crate::linalg::{module_classify, PolyMatrix};

#[derive(Clone, Debug)]
pub struct ReductionOutcome {
    /// Nonzero, normalized members, each inside one component, sorted by component.
    pub reduced_family: Vec<SkewPoly>,
    pub is_principal: bool,
    /// From the Smith form of the row module spanned by x^i·f.
    pub is_delay_free: bool,
    /// T_g = T_{g_0} for the computed generator.
    pub delay_free_witness: bool,
    pub generator: Option<SkewPoly>,
}

fn same_context(fs: &[SkewPoly]) -> Result<()> {
    match fs.split_first() {
        Some((first, rest)) if rest.iter().any(|f| !f.ctx.same(&first.ctx)) => Err(Error::ContextMismatch),
        _ => Ok(()),
    }
}

/// f ← f - z^gap·a·d
fn elementary(f: &SkewPoly, gap: usize, a: crate::ring::RingElement, d: &SkewPoly) -> SkewPoly {
    let m = SkewPoly::monomial(&f.ctx, gap, a);
    f.sub(&m.mul_unchecked(d)).expect("same context")
}

fn lms(fs: &[SkewPoly]) -> Vec<Option<Monomial>> {
    fs.iter().map(|f| f.leading_monomial().ok()).collect()
}

/// Applies elementary operations until no member has a term right divisible
/// by another member's leading monomial. The generated left ideal is unchanged.
pub fn reduce_family(fs: &[SkewPoly]) -> Result<Vec<SkewPoly>> {
    same_context(fs)?;
    let mut fam = fs.to_vec();
    // leading terms first
    loop {
        let lm = lms(&fam);
        let divisor_of = |k: usize| {
            let t = lm[k]?;
            (0..fam.len()).find(|&j| j != k && lm[j].is_some_and(|m| m.divides(&t)))
        };
        let target = (0..fam.len())
            .filter_map(|k| divisor_of(k).map(|j| (lm[k].unwrap(), k, j)))
            .max_by_key(|&(m, k, _)| (m, k));
        let Some((_, k, j)) = target else { break };
        let (dm, b) = fam[j].leading_term()?;
        let (tm, c) = fam[k].leading_term()?;
        let (gap, a) = division_witness(&fam[k].ctx, (dm, &b), (tm, &c)).expect("divisible");
        fam[k] = elementary(&fam[k], gap, a, &fam[j]);
    }
    // then the lower terms; leading monomials no longer change
    let lm = lms(&fam);
    for k in 0..fam.len() {
        loop {
            let hit = fam[k].terms().into_iter().rev().find_map(|(m, c)| {
                (0..fam.len()).find(|&j| j != k && lm[j].is_some_and(|d| d.divides(&m))).map(|j| (m, c, j))
            });
            let Some((m, c, j)) = hit else { break };
            let (dm, b) = fam[j].leading_term()?;
            let (gap, a) = division_witness(&fam[k].ctx, (dm, &b), (m, &c)).expect("divisible");
            fam[k] = elementary(&fam[k], gap, a, &fam[j]);
        }
    }
    Ok(fam)
}

/// True iff no nonzero term of any member is right divisible by the leading
/// monomial of another member.
pub fn is_reduced_family(fs: &[SkewPoly]) -> bool {
    let lm = lms(fs);
    fs.iter().enumerate().all(|(k, f)| {
        f.terms().iter().all(|(m, _)| !(0..fs.len()).any(|j| j != k && lm[j].is_some_and(|d| d.divides(m))))
    })
}

/// A polynomial is reduced when the family of its components is.
pub fn is_reduced(g: &SkewPoly) -> bool {
    let comps: Vec<SkewPoly> = (0..g.ring().r()).map(|k| g.component(k)).collect();
    is_reduced_family(&comps)
}

/// a·g for the unit a making every component's leading z-coefficient a
/// primitive idempotent.
pub fn normalize(g: &SkewPoly) -> SkewPoly {
    let ctx = &g.ctx;
    let ring = ctx.ring();
    let mut a = ring.zero();
    for k in 0..ring.r() {
        let gk = g.component(k);
        let factor = match gk.leading_term() {
            Ok((m, c)) => {
                let l = m.component;
                let inv = ring.comp_inv(l, &ring.residue(&c, l)).expect("nonzero residue");
                ctx.apply_pow(-(m.zpow as i64), &ring.lift(&inv, l))
            }
            Err(_) => ring.idempotent(k).clone(),
        };
        a = ring.add(&a, &factor);
    }
    g.left_mul_ring(&a)
}

fn row_module(ctx: &Arc<SkewContext>, fs: &[SkewPoly]) -> PolyMatrix {
    let n = ctx.ring().n();
    let mut m = PolyMatrix::zeros(ctx.ring().field_arc(), 0, n);
    for f in fs {
        m = m.vstack(&sigma_circulant(f)).expect("same width");
    }
    m
}

/// Reduces the components of `fs`, decides principality and returns the
/// unique reduced normalized generator when the ideal is principal.
pub fn principal_generator(fs: &[SkewPoly]) -> Result<ReductionOutcome> {
    let first = fs.first().ok_or(Error::EmptyInput)?;
    same_context(fs)?;
    let ctx = first.ctx.clone();
    let r = ctx.ring().r();
    let family: Vec<SkewPoly> =
        fs.iter().flat_map(|f| (0..r).map(move |k| f.component(k))).filter(|f| !f.is_zero()).collect();
    let mut reduced: Vec<(usize, Monomial, SkewPoly)> = reduce_family(&family)?
        .into_iter()
        .filter(|f| !f.is_zero())
        .map(|f| {
            let g = normalize(&f);
            (g.home_component().expect("nonzero"), g.leading_monomial().expect("nonzero"), g)
        })
        .collect();
    reduced.sort_by_key(|(k, m, _)| (*k, *m));
    let is_principal = reduced.windows(2).all(|w| w[0].0 != w[1].0);
    let reduced_family: Vec<SkewPoly> = reduced.into_iter().map(|(_, _, g)| g).collect();
    let generator = is_principal.then(|| {
        reduced_family.iter().fold(SkewPoly::zero(&ctx), |acc, g| acc.add(g).expect("same context"))
    });
    let delay_free_witness = match &generator {
        Some(g) if g.is_zero() => true,
        Some(g) => g.delay_free_witness()?,
        None => false,
    };
    let is_delay_free = module_classify(&row_module(&ctx, fs)).delay_free;
    Ok(ReductionOutcome { reduced_family, is_principal, is_delay_free, delay_free_witness, generator })
}
