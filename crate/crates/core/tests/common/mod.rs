//! Shared fixtures and oracles for the integration tests.
//!
//! Oracles recompute quantities straight from their definitions with plain
//! field operations, without calling the library's derived helpers.
#![allow(dead_code)]

use std::sync::Arc;

use cherednik::{make_field, AlgebraParams, FieldCtx, FieldElem, Planck};
use rand::Rng;

pub fn field(p: u64, k: u32) -> Arc<FieldCtx> {
    Arc::new(make_field(p, k).expect("valid field"))
}

pub fn planck(t: u32) -> Planck {
    if t == 0 {
        Planck::Zero
    } else {
        Planck::One
    }
}

pub fn params(ctx: &Arc<FieldCtx>, r: u32, t: u32, c: &[FieldElem]) -> AlgebraParams {
    AlgebraParams::new(ctx.clone(), r, planck(t), c.to_vec()).expect("valid parameters")
}

pub fn params_from_literals(p: u64, k: u32, r: u32, t: u32, c: &[&str]) -> AlgebraParams {
    let ctx = field(p, k);
    let c: Vec<FieldElem> = c.iter().map(|l| ctx.parse(l).unwrap()).collect();
    params(&ctx, r, t, &c)
}

pub fn random_elem<R: Rng>(ctx: &FieldCtx, rng: &mut R) -> FieldElem {
    let coeffs: Vec<i64> = (0..ctx.k()).map(|_| rng.gen_range(0..ctx.p()) as i64).collect();
    ctx.from_coeffs(&coeffs).unwrap()
}

pub fn random_nonzero<R: Rng>(ctx: &FieldCtx, rng: &mut R) -> FieldElem {
    loop {
        let e = random_elem(ctx, rng);
        if !e.is_zero() {
            return e;
        }
    }
}

pub fn random_params<R: Rng>(ctx: &Arc<FieldCtx>, r: u32, t: u32, rng: &mut R) -> AlgebraParams {
    let c: Vec<FieldElem> = (1..r).map(|_| random_elem(ctx, rng)).collect();
    params(ctx, r, t, &c)
}

/// `a^n` by repeated multiplication, `n` any integer.
pub fn naive_pow(ctx: &FieldCtx, a: FieldElem, n: i64) -> FieldElem {
    let base = if n < 0 { ctx.inv(a).unwrap() } else { a };
    (0..n.unsigned_abs()).fold(ctx.one(), |acc, _| ctx.mul(acc, base))
}

/// `A_m = sum_j c_j (1 - eps^{-j})^{-1} eps^{mj}`.
pub fn oracle_weight(p: &AlgebraParams, m: i64) -> FieldElem {
    let ctx = p.ctx();
    let eps = p.epsilon();
    let mut acc = ctx.zero();
    for j in 1..p.r() as i64 {
        let denom = ctx.sub(ctx.one(), naive_pow(ctx, eps, -j));
        let term = ctx.mul(
            ctx.mul(p.c()[(j - 1) as usize], ctx.inv(denom).unwrap()),
            naive_pow(ctx, eps, m * j),
        );
        acc = ctx.add(acc, term);
    }
    acc
}

fn n_of(p: &AlgebraParams) -> usize {
    match p.t() {
        Planck::One => (p.p() * p.r()) as usize,
        Planck::Zero => p.r() as usize,
    }
}

/// `mu_0..mu_{N-1}` of the V family.
pub fn oracle_mu_v(p: &AlgebraParams, beta: FieldElem) -> Vec<FieldElem> {
    let ctx = p.ctx();
    (0..n_of(p) as i64)
        .map(|i| {
            let mut v = ctx.add(beta, oracle_weight(p, -i));
            if p.t() == Planck::One {
                v = ctx.add(v, ctx.from_int(i));
            }
            v
        })
        .collect()
}

/// `prod_i mu_i`, the value of `ab` forced by `beta`.
pub fn oracle_ab(p: &AlgebraParams, beta: FieldElem) -> FieldElem {
    let ctx = p.ctx();
    oracle_mu_v(p, beta)
        .into_iter()
        .fold(ctx.one(), |acc, m| ctx.mul(acc, m))
}

/// `sum_j c_j eps^{nj}`.
pub fn oracle_reflection(p: &AlgebraParams, n: i64) -> FieldElem {
    let ctx = p.ctx();
    (1..p.r() as i64).fold(ctx.zero(), |acc, j| {
        ctx.add(
            acc,
            ctx.mul(p.c()[(j - 1) as usize], naive_pow(ctx, p.epsilon(), n * j)),
        )
    })
}

/// W-family `mu_0..mu_len` from the recursion.
pub fn oracle_w_mu(p: &AlgebraParams, m: u32, len: usize) -> Vec<FieldElem> {
    let ctx = p.ctx();
    let t = if p.t() == Planck::One { ctx.one() } else { ctx.zero() };
    let mut out = vec![ctx.zero()];
    for k in 0..len as i64 {
        let prev = *out.last().unwrap();
        out.push(ctx.sub(ctx.add(prev, t), oracle_reflection(p, m as i64 - k)));
    }
    out
}

/// Dimension of `W_m`: first `k >= 1` with `mu_k = 0`.
pub fn oracle_w_dim(p: &AlgebraParams, m: u32) -> usize {
    let n = n_of(p);
    let mu = oracle_w_mu(p, m, n);
    (1..=n).find(|&k| mu[k].is_zero()).expect("mu_N vanishes")
}

/// The closed-form condition `t D = sum_{i<D} sum_j c_j eps^{(m-i)j}`.
pub fn satisfies_d_equation(p: &AlgebraParams, m: u32, d: usize) -> bool {
    let ctx = p.ctx();
    let t = if p.t() == Planck::One { ctx.one() } else { ctx.zero() };
    let lhs = ctx.mul(t, ctx.from_int(d as i64));
    let rhs = (0..d as i64).fold(ctx.zero(), |acc, i| ctx.add(acc, oracle_reflection(p, m as i64 - i)));
    lhs == rhs
}

/// Smallest element of `beta + F_p`.
pub fn orbit_min(ctx: &FieldCtx, beta: FieldElem) -> FieldElem {
    (0..ctx.p() as i64)
        .map(|i| ctx.add(beta, ctx.from_int(i)))
        .min()
        .unwrap()
}
