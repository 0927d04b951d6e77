use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::field::{FieldCtx, FieldElem};

use super::AlgebraError;

/// The deformation parameter. Any nonzero value is equivalent to `One`
/// after rescaling the `c_j`, so only these two cases exist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Planck {
    Zero,
    One,
}

impl Planck {
    pub fn from_int(t: i64) -> Result<Planck, AlgebraError> {
        match t {
            0 => Ok(Planck::Zero),
            1 => Ok(Planck::One),
            other => Err(AlgebraError::UnsupportedPlanck(other)),
        }
    }

    pub fn as_int(self) -> u32 {
        match self {
            Planck::Zero => 0,
            Planck::One => 1,
        }
    }
}

impl fmt::Display for Planck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_int())
    }
}

/// Everything defining H_{t,c}: the field, `r`, `t`, `c_1..c_{r-1}` and the
/// chosen primitive `r`-th root of unity `epsilon`.
#[derive(Clone)]
pub struct AlgebraParams {
    ctx: Arc<FieldCtx>,
    r: u32,
    t: Planck,
    c: Vec<FieldElem>,
    epsilon: FieldElem,
    eps_powers: Vec<FieldElem>,
    /// h_coeff[j] = c_j (1 - eps^{-j})^{-1}, index 0 unused.
    h_coeff: Vec<FieldElem>,
    fingerprint: u64,
}

impl fmt::Debug for AlgebraParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AlgebraParams")
            .field("p", &self.p())
            .field("k", &self.ctx.k())
            .field("r", &self.r)
            .field("t", &self.t)
            .field("c", &self.c.iter().map(|&e| self.ctx.format(e)).collect::<Vec<_>>())
            .field("epsilon", &self.ctx.format(self.epsilon))
            .finish()
    }
}

impl PartialEq for AlgebraParams {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint
            && *self.ctx == *other.ctx
            && self.r == other.r
            && self.t == other.t
            && self.c == other.c
            && self.epsilon == other.epsilon
    }
}

impl AlgebraParams {
    /// Parameters using the canonical epsilon: the lexicographically smallest
    /// element of order `r` in the field.
    pub fn new(
        ctx: Arc<FieldCtx>,
        r: u32,
        t: Planck,
        c: Vec<FieldElem>,
    ) -> Result<AlgebraParams, AlgebraError> {
        check_r(&ctx, r)?;
        let epsilon = ctx.primitive_root_of_unity(r)?;
        AlgebraParams::with_epsilon(ctx, r, t, c, epsilon)
    }

    pub fn with_epsilon(
        ctx: Arc<FieldCtx>,
        r: u32,
        t: Planck,
        c: Vec<FieldElem>,
        epsilon: FieldElem,
    ) -> Result<AlgebraParams, AlgebraError> {
        check_r(&ctx, r)?;
        if c.len() != r as usize - 1 {
            return Err(AlgebraError::WrongParameterCount {
                expected: r as usize - 1,
                got: c.len(),
            });
        }
        if c.iter().any(|e| e.index() >= ctx.order()) || epsilon.index() >= ctx.order() {
            return Err(AlgebraError::ForeignElement);
        }
        if ctx.multiplicative_order(epsilon) != Some(r) {
            return Err(AlgebraError::BadEpsilon);
        }
        let eps_powers: Vec<FieldElem> = (0..r).map(|i| ctx.pow(epsilon, i as u64)).collect();
        let mut h_coeff = vec![ctx.zero(); r as usize];
        for j in 1..r as usize {
            let eps_inv_j = eps_powers[(r as usize - j) % r as usize];
            let denom = ctx.sub(ctx.one(), eps_inv_j);
            h_coeff[j] = ctx.mul(c[j - 1], ctx.inv(denom).expect("eps^-j != 1 for 0 < j < r"));
        }
        let mut hasher = DefaultHasher::new();
        (ctx.p(), ctx.k(), ctx.modulus(), r, t, &c, epsilon).hash(&mut hasher);
        Ok(AlgebraParams {
            ctx,
            r,
            t,
            c,
            epsilon,
            eps_powers,
            h_coeff,
            fingerprint: hasher.finish(),
        })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn ctx_arc(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn p(&self) -> u32 {
        self.ctx.p()
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn t(&self) -> Planck {
        self.t
    }

    pub fn t_elem(&self) -> FieldElem {
        match self.t {
            Planck::Zero => self.ctx.zero(),
            Planck::One => self.ctx.one(),
        }
    }

    /// `c_1..c_{r-1}`.
    pub fn c(&self) -> &[FieldElem] {
        &self.c
    }

    /// `c_j` for `1 <= j < r`.
    pub fn c_j(&self, j: usize) -> FieldElem {
        self.c[j - 1]
    }

    pub fn epsilon(&self) -> FieldElem {
        self.epsilon
    }

    pub fn pr(&self) -> u32 {
        self.p() * self.r
    }

    /// Length of the V-family basis: `pr` for t = 1 and `r` for t = 0.
    pub fn generic_dim(&self) -> u32 {
        match self.t {
            Planck::One => self.pr(),
            Planck::Zero => self.r,
        }
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// `epsilon^n` for any integer `n`.
    pub fn eps_pow(&self, n: i64) -> FieldElem {
        self.eps_powers[n.rem_euclid(self.r as i64) as usize]
    }

    /// The coefficient `c_j (1 - eps^{-j})^{-1}` of `s^j` in `xy - h`.
    pub fn h_coefficient(&self, j: usize) -> FieldElem {
        self.h_coeff[j]
    }

    /// `A_m = sum_j c_j (1 - eps^{-j})^{-1} eps^{mj}`.
    pub fn weight_constant(&self, m: i64) -> FieldElem {
        let ctx = &self.ctx;
        ctx.sum((1..self.r as usize).map(|j| ctx.mul(self.h_coeff[j], self.eps_pow(m * j as i64))))
    }

    /// `sum_j c_j eps^{nj}`: the eigenvalue of `sum_j c_j s^j` on an
    /// `s`-eigenvector with eigenvalue `eps^n`.
    pub fn reflection_sum(&self, n: i64) -> FieldElem {
        let ctx = &self.ctx;
        ctx.sum((1..self.r as usize).map(|j| ctx.mul(self.c[j - 1], self.eps_pow(n * j as i64))))
    }
}

fn check_r(ctx: &FieldCtx, r: u32) -> Result<(), AlgebraError> {
    if r == 0 || crate::field::gcd_u64(ctx.p() as u64, r as u64) != 1 {
        return Err(AlgebraError::NotCoprime { p: ctx.p(), r });
    }
    Ok(())
}
