use crate::algebra::Planck;
use crate::linalg::{is_invertible, nullspace, Matrix};

use super::{RepError, RepKind, Representation};

/// Isomorphism test from the labels: V's agree on `(a, b)` and on `beta`
/// (modulo the prime field when t = 1), W's on `m`. Unlabeled inputs fall
/// back to [`isomorphic_by_intertwiner`].
pub fn isomorphic(r1: &Representation, r2: &Representation) -> Result<bool, RepError> {
    if r1.params() != r2.params() {
        return Err(RepError::MismatchedParams);
    }
    if r1.dim() != r2.dim() {
        return Ok(false);
    }
    let ctx = r1.ctx();
    Ok(match (r1.kind(), r2.kind()) {
        (
            RepKind::V { beta: b1, a: a1, b: c1 },
            RepKind::V { beta: b2, a: a2, b: c2 },
        ) => {
            let diff = ctx.sub(*b1, *b2);
            a1 == a2
                && c1 == c2
                && match r1.params().t() {
                    Planck::One => ctx.is_in_prime_field(diff),
                    Planck::Zero => diff.is_zero(),
                }
        }
        (RepKind::W { m: m1 }, RepKind::W { m: m2 }) => m1 == m2,
        (RepKind::V { .. }, RepKind::W { .. }) | (RepKind::W { .. }, RepKind::V { .. }) => false,
        _ => isomorphic_by_intertwiner(r1, r2)?,
    })
}

/// Basis of `Hom(r1, r2)`: matrices `M` (of size `dim r2 x dim r1`) with
/// `M g_1 = g_2 M` for `g = x, y, s`.
pub fn intertwiners(r1: &Representation, r2: &Representation) -> Result<Vec<Matrix>, RepError> {
    if r1.params() != r2.params() {
        return Err(RepError::MismatchedParams);
    }
    let ctx = r1.ctx();
    let (n1, n2) = (r1.dim(), r2.dim());
    let unknowns = n1 * n2;
    let var = |row: usize, col: usize| row * n1 + col;
    let mut system = Matrix::zeros(3 * unknowns, unknowns);
    let gens = [(r1.x(), r2.x()), (r1.y(), r2.y()), (r1.s(), r2.s())];
    for (g, (g1, g2)) in gens.iter().enumerate() {
        for row in 0..n2 {
            for col in 0..n1 {
                let eq = g * unknowns + row * n1 + col;
                // (M g1)[row][col] - (g2 M)[row][col]
                for k in 0..n1 {
                    let v = g1.get(k, col);
                    if !v.is_zero() {
                        let cur = system.get(eq, var(row, k));
                        system.set(eq, var(row, k), ctx.add(cur, v));
                    }
                }
                for k in 0..n2 {
                    let v = g2.get(row, k);
                    if !v.is_zero() {
                        let cur = system.get(eq, var(k, col));
                        system.set(eq, var(k, col), ctx.sub(cur, v));
                    }
                }
            }
        }
    }
    Ok(nullspace(ctx, &system)
        .into_iter()
        .map(|v| Matrix::from_rows(v.chunks(n1.max(1)).map(<[_]>::to_vec).collect()).expect("rectangular"))
        .collect())
}

/// Isomorphism witnessed by an invertible intertwiner. Each basis element of
/// the Hom space is tried, then their sum; this is exact when one side is
/// absolutely irreducible, where Hom is at most one-dimensional.
pub fn isomorphic_by_intertwiner(r1: &Representation, r2: &Representation) -> Result<bool, RepError> {
    if r1.dim() != r2.dim() {
        return Ok(false);
    }
    let ctx = r1.ctx();
    let basis = intertwiners(r1, r2)?;
    if basis.iter().any(|m| is_invertible(ctx, m)) {
        return Ok(true);
    }
    let Some(first) = basis.first() else {
        return Ok(false);
    };
    let sum = basis[1..].iter().fold(first.clone(), |acc, m| acc.add(ctx, m));
    Ok(is_invertible(ctx, &sum))
}
