//! Choosing the working field GF(p^k) for a job.
//!
//! The smallest admissible `k` is the order of `p` modulo `r` (so that a
//! primitive `r`-th root of unity exists). When a nonzero central character
//! is given, `k` is raised through multiples of that minimum until the
//! classification polynomial splits, or the field would exceed
//! [`AUTO_FIELD_LIMIT`]. Literals are read as residues; auto-selection only
//! accepts prime-field literals because their meaning must not depend on `k`.

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{AlgebraParams, Planck};
use crate::field::{
    is_prime, make_field, min_ext_degree, parse_residues, roots_with_multiplicity, FieldError,
    FieldElem,
};
use crate::reps::classification_polynomial;

/// Largest field order tried by automatic degree selection.
pub const AUTO_FIELD_LIMIT: u64 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SetupError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Resource(String),
}

/// User-level description of the algebra and central character.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SetupSpec {
    pub p: u64,
    pub r: u32,
    pub t: i64,
    pub c: Vec<String>,
    pub a: Option<String>,
    pub b: Option<String>,
    pub ext_degree: Option<u32>,
}

#[derive(Clone, Debug)]
pub struct Setup {
    pub params: AlgebraParams,
    pub a: FieldElem,
    pub b: FieldElem,
    /// For a nonzero central character: whether the classification
    /// polynomial splits over the chosen field.
    pub splits: Option<bool>,
}

/// Trailing zero residues do not leave the prime field.
fn residues_beyond_prime(lit: &[i64]) -> bool {
    lit.iter().skip(1).any(|&v| v != 0)
}

pub fn resolve(spec: &SetupSpec) -> Result<Setup, SetupError> {
    let input = |m: String| SetupError::Input(m);
    if !is_prime(spec.p) {
        return Err(input(format!("p = {} is not prime", spec.p)));
    }
    if spec.r == 0 || (spec.r as u64).is_multiple_of(spec.p) {
        return Err(input(format!("r = {} must be positive and prime to p", spec.r)));
    }
    let t = Planck::from_int(spec.t).map_err(|e| input(e.to_string()))?;
    if spec.c.len() != spec.r as usize - 1 {
        return Err(input(format!(
            "expected {} values of c, got {}",
            spec.r - 1,
            spec.c.len()
        )));
    }
    let literals: Vec<&str> = spec
        .c
        .iter()
        .map(String::as_str)
        .chain(spec.a.as_deref())
        .chain(spec.b.as_deref())
        .collect();
    let mut residues = Vec::with_capacity(literals.len());
    for l in &literals {
        residues.push(parse_residues(l).map_err(|e| input(e.to_string()))?);
    }
    let k0 = min_ext_degree(spec.p, spec.r as u64).map_err(|e| input(e.to_string()))?;
    let build = |k: u32| -> Result<Setup, SetupError> {
        let ctx = make_field(spec.p, k).map_err(|e| match e {
            FieldError::TooLarge { .. } => SetupError::Resource(e.to_string()),
            other => input(other.to_string()),
        })?;
        let ctx = Arc::new(ctx);
        let parse = |l: &str| ctx.parse(l).map_err(|e| input(e.to_string()));
        let c = spec.c.iter().map(|l| parse(l)).collect::<Result<Vec<_>, _>>()?;
        let a = spec.a.as_deref().map(parse).transpose()?.unwrap_or(ctx.zero());
        let b = spec.b.as_deref().map(parse).transpose()?.unwrap_or(ctx.zero());
        let params = AlgebraParams::new(ctx, spec.r, t, c).map_err(|e| input(e.to_string()))?;
        let splits = (!(a.is_zero() && b.is_zero())).then(|| {
            let poly = classification_polynomial(&params, a, b);
            let found: usize = roots_with_multiplicity(params.ctx(), &poly)
                .expect("classification polynomial is monic")
                .iter()
                .map(|(_, m)| m)
                .sum();
            found == poly.len() - 1
        });
        Ok(Setup {
            params,
            a,
            b,
            splits,
        })
    };

    if let Some(k) = spec.ext_degree {
        if k == 0 {
            return Err(input("--ext-degree must be positive".into()));
        }
        if k % k0 != 0 {
            return Err(SetupError::Resource(format!(
                "GF({}^{k}) has no element of order {}; k must be a multiple of {k0}",
                spec.p, spec.r
            )));
        }
        return build(k);
    }
    if residues.iter().any(|r| residues_beyond_prime(r)) {
        return Err(input(
            "literals with more than one residue need an explicit --ext-degree".into(),
        ));
    }
    let first = build(k0)?;
    if first.splits != Some(false) {
        return Ok(first);
    }
    let mut best = first;
    let mut best_roots = root_count(&best);
    let mut n = 2;
    while let Some(q) = (spec.p as u128).checked_pow(k0 * n) {
        if q > AUTO_FIELD_LIMIT as u128 {
            break;
        }
        let cand = build(k0 * n)?;
        if cand.splits == Some(true) {
            return Ok(cand);
        }
        let roots = root_count(&cand);
        if roots > best_roots {
            best = cand;
            best_roots = roots;
        }
        n += 1;
    }
    Ok(best)
}

fn root_count(s: &Setup) -> usize {
    let poly = classification_polynomial(&s.params, s.a, s.b);
    roots_with_multiplicity(s.params.ctx(), &poly)
        .map(|r| r.len())
        .unwrap_or(0)
}
