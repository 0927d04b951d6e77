//! Irreducibility by spinning.
//!
//! Any nonzero submodule is `s`- and `h`-stable, so it contains a joint
//! eigenvector of `s` and `h` whenever both act diagonalizably with their
//! eigenvalues in the field. Spinning every such eigenvector (one per line)
//! under `x`, `y`, `s` therefore decides irreducibility. When that
//! enumeration is unavailable the enveloping algebra is spanned instead and
//! compared against `n^2` (absolute irreducibility).

use crate::field::{roots_with_multiplicity, FieldCtx, FieldElem};
use crate::linalg::{nullspace, Matrix, Subspace};

use super::Representation;

/// Largest number of projective points enumerated inside one joint
/// eigenspace before giving up on the spinning method.
const MAX_SEEDS: usize = 1 << 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    /// A proper nonzero invariant subspace, as a list of spanning vectors.
    Reducible(Vec<Vec<FieldElem>>),
    /// Decided by the enveloping-algebra dimension; no witness subspace.
    ReducibleByDimension { enveloping_dim: usize },
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible)
    }
}

pub fn is_irreducible(rep: &Representation) -> bool {
    irreducibility(rep).is_irreducible()
}

pub fn irreducibility(rep: &Representation) -> Irreducibility {
    let n = rep.dim();
    if n == 0 {
        return Irreducibility::Reducible(Vec::new());
    }
    if n == 1 {
        return Irreducibility::Irreducible;
    }
    let Some(seeds) = joint_eigen_seeds(rep) else {
        let d = enveloping_dimension(rep);
        return if d == n * n {
            Irreducibility::Irreducible
        } else {
            Irreducibility::ReducibleByDimension { enveloping_dim: d }
        };
    };
    for seed in seeds {
        let span = spin(rep, &seed);
        if !span.is_full() {
            return Irreducibility::Reducible(span.basis().to_vec());
        }
    }
    Irreducibility::Irreducible
}

/// The smallest subspace containing `v` and stable under `x`, `y`, `s`.
pub fn spin(rep: &Representation, v: &[FieldElem]) -> Subspace {
    let ctx = rep.ctx();
    let mut span = Subspace::new(rep.dim());
    let mut queue = Vec::new();
    if span.insert(ctx, v) {
        queue.push(v.to_vec());
    }
    while let Some(w) = queue.pop() {
        for g in [rep.x(), rep.y(), rep.s()] {
            let image = g.mul_vec(ctx, &w);
            if span.insert(ctx, &image) {
                queue.push(image);
            }
        }
        if span.is_full() {
            break;
        }
    }
    span
}

/// Dimension of the algebra of matrices generated by `x`, `y`, `s`.
pub fn enveloping_dimension(rep: &Representation) -> usize {
    let ctx = rep.ctx();
    let n = rep.dim();
    let mut span = Subspace::new(n * n);
    let id = Matrix::identity(ctx, n);
    let mut queue = Vec::new();
    if span.insert(ctx, id.entries()) {
        queue.push(id);
    }
    while let Some(m) = queue.pop() {
        for g in [rep.x(), rep.y(), rep.s()] {
            let image = g.mul(ctx, &m);
            if span.insert(ctx, image.entries()) {
                queue.push(image);
            }
        }
        if span.is_full() {
            break;
        }
    }
    span.dim()
}

/// One vector per line in every joint eigenspace of `s` and `h`, or `None`
/// if either fails to diagonalize over the field or a joint eigenspace is
/// too large to enumerate.
fn joint_eigen_seeds(rep: &Representation) -> Option<Vec<Vec<FieldElem>>> {
    let ctx = rep.ctx();
    let params = rep.params();
    let n = rep.dim();
    let h = rep.h_matrix();
    let mut seeds = Vec::new();
    let mut covered = 0;
    for m in 0..params.r() as i64 {
        let shifted = rep
            .s()
            .sub(ctx, &Matrix::scalar(ctx, n, params.eps_pow(m)));
        let eigen = nullspace(ctx, &shifted);
        if eigen.is_empty() {
            continue;
        }
        covered += eigen.len();
        let restricted = h.restrict(ctx, &eigen)?;
        let d = eigen.len();
        let poly = crate::linalg::charpoly(ctx, &restricted);
        let roots = roots_with_multiplicity(ctx, &poly).ok()?;
        if roots.iter().map(|(_, k)| k).sum::<usize>() != d {
            return None;
        }
        let mut found = 0;
        for (lambda, _) in roots {
            let local = restricted.sub(ctx, &Matrix::scalar(ctx, d, lambda));
            let kernel = nullspace(ctx, &local);
            found += kernel.len();
            let ambient: Vec<Vec<FieldElem>> = kernel
                .iter()
                .map(|coords| combine(ctx, &eigen, coords))
                .collect();
            seeds.extend(projective_points(ctx, &ambient)?);
        }
        if found != d {
            return None;
        }
    }
    (covered == n).then_some(seeds)
}

fn combine(ctx: &FieldCtx, basis: &[Vec<FieldElem>], coords: &[FieldElem]) -> Vec<FieldElem> {
    let mut out = vec![ctx.zero(); basis[0].len()];
    for (b, &c) in basis.iter().zip(coords) {
        if c.is_zero() {
            continue;
        }
        for (o, &e) in out.iter_mut().zip(b) {
            *o = ctx.add(*o, ctx.mul(c, e));
        }
    }
    out
}

/// One representative of every line in the span of `basis`, normalized so
/// the first nonzero coordinate is one.
fn projective_points(ctx: &FieldCtx, basis: &[Vec<FieldElem>]) -> Option<Vec<Vec<FieldElem>>> {
    let d = basis.len();
    if d == 1 {
        return Some(basis.to_vec());
    }
    let q = ctx.order() as usize;
    let mut count = 0usize;
    for lead in 0..d {
        count = count.checked_add(q.checked_pow((d - lead - 1) as u32)?)?;
    }
    if count > MAX_SEEDS {
        return None;
    }
    let elems: Vec<FieldElem> = ctx.elements().collect();
    let mut out = Vec::with_capacity(count);
    for lead in 0..d {
        let free = d - lead - 1;
        for mut idx in 0..q.pow(free as u32) {
            let mut coords = vec![ctx.zero(); d];
            coords[lead] = ctx.one();
            for c in coords.iter_mut().skip(lead + 1) {
                *c = elems[idx % q];
                idx /= q;
            }
            out.push(combine(ctx, basis, &coords));
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{AlgebraParams, Planck};
    use crate::field::make_field;
    use crate::reps::{build_w, direct_sum, w_truncation};
    use std::sync::Arc;

    fn params() -> AlgebraParams {
        let ctx = Arc::new(make_field(3, 2).unwrap());
        AlgebraParams::new(ctx.clone(), 2, Planck::One, vec![ctx.one()]).unwrap()
    }

    #[test]
    fn w_modules_are_simple() {
        let p = params();
        for m in 0..2 {
            let w = build_w(&p, m);
            assert!(is_irreducible(&w));
            assert_eq!(enveloping_dimension(&w), w.dim() * w.dim());
        }
    }

    #[test]
    fn sums_and_long_truncations_are_not() {
        let p = params();
        let w0 = build_w(&p, 0);
        let w1 = build_w(&p, 1);
        let sum = direct_sum(&[&w0, &w1]).unwrap();
        match irreducibility(&sum) {
            Irreducibility::Reducible(span) => assert!(!span.is_empty() && span.len() < 6),
            other => panic!("expected a witness, got {other:?}"),
        }
        let long = w_truncation(&p, 1, 6);
        assert!(!is_irreducible(&long));
        assert!(enveloping_dimension(&long) < 36);
    }
}
