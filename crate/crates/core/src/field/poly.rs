//! Univariate polynomials over GF(p^k), coefficients constant term first.
//!
//! Root finding is an exhaustive scan of the field with Horner evaluation:
//! O(p^k * deg) field operations. That is the intended algorithm at the
//! field sizes this crate targets (a few thousand elements).

use super::{FieldCtx, FieldElem, FieldError};

fn trimmed(f: &[FieldElem]) -> &[FieldElem] {
    let mut n = f.len();
    while n > 0 && f[n - 1].is_zero() {
        n -= 1;
    }
    &f[..n]
}

pub fn poly_eval(ctx: &FieldCtx, f: &[FieldElem], z: FieldElem) -> FieldElem {
    f.iter()
        .rev()
        .fold(ctx.zero(), |acc, &c| ctx.add(ctx.mul(acc, z), c))
}

pub fn poly_mul(ctx: &FieldCtx, f: &[FieldElem], g: &[FieldElem]) -> Vec<FieldElem> {
    let (f, g) = (trimmed(f), trimmed(g));
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![ctx.zero(); f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = ctx.add(out[i + j], ctx.mul(a, b));
        }
    }
    out
}

/// Every root of `f` lying in the field, without multiplicity, in canonical
/// order.
pub fn poly_roots(ctx: &FieldCtx, f: &[FieldElem]) -> Result<Vec<FieldElem>, FieldError> {
    let f = trimmed(f);
    if f.is_empty() {
        return Err(FieldError::ZeroPolynomial);
    }
    Ok(ctx
        .elements()
        .filter(|&z| poly_eval(ctx, f, z).is_zero())
        .collect())
}

/// Divide by `(z - root)`; returns quotient and remainder.
fn deflate(ctx: &FieldCtx, f: &[FieldElem], root: FieldElem) -> (Vec<FieldElem>, FieldElem) {
    if f.is_empty() {
        return (Vec::new(), ctx.zero());
    }
    let mut quotient = vec![ctx.zero(); f.len() - 1];
    let mut carry = ctx.zero();
    for i in (0..f.len()).rev() {
        let value = ctx.add(f[i], ctx.mul(carry, root));
        if i == 0 {
            return (quotient, value);
        }
        quotient[i - 1] = value;
        carry = value;
    }
    unreachable!()
}

/// Multiplicity of `root` as a root of the nonzero polynomial `f`
/// (0 if it is not a root).
pub fn root_multiplicity(ctx: &FieldCtx, f: &[FieldElem], root: FieldElem) -> usize {
    let mut cur = trimmed(f).to_vec();
    let mut mult = 0;
    while !cur.is_empty() {
        let (q, rem) = deflate(ctx, &cur, root);
        if !rem.is_zero() {
            break;
        }
        mult += 1;
        cur = q;
    }
    mult
}

/// Roots paired with their multiplicities, in canonical order.
pub fn roots_with_multiplicity(
    ctx: &FieldCtx,
    f: &[FieldElem],
) -> Result<Vec<(FieldElem, usize)>, FieldError> {
    let roots = poly_roots(ctx, f)?;
    Ok(roots
        .into_iter()
        .map(|z| (z, root_multiplicity(ctx, f, z)))
        .collect())
}
