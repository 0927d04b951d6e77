//! Explicit irreducible representations of H_{t,c} and the tools to check,
//! compare and classify them.
//!
//! Two families exist for each `t`:
//!
//! * `V_{beta,a,b}`: `x^N`, `y^N` act by scalars `a`, `b` not both zero, where
//!   `N = pr` for t = 1 and `N = r` for t = 0. The basis is `v_0..v_{N-1}`
//!   with `s v_i = eps^{-i} v_i`.
//! * `W_m`: `x`, `y` nilpotent, `y v_0 = 0`, `s v_i = eps^{m-i} v_i`.
//!
//! In every matrix, column `i` is the image of `v_i`.

mod classify;
pub mod export;
mod irreducible;
mod iso;
mod spectrum;
mod verify;

use thiserror::Error;

use crate::algebra::{AlgebraError, AlgebraParams, Planck};
use crate::field::{FieldCtx, FieldElem, FieldError};
use crate::linalg::Matrix;

pub use classify::{
    beta_candidates, classification_polynomial, classification_value, classify_all,
    BetaCandidates, ClassEntry, ClassificationReport,
};
pub use irreducible::{enveloping_dimension, irreducibility, is_irreducible, spin, Irreducibility};
pub use iso::{intertwiners, isomorphic, isomorphic_by_intertwiner};
pub use spectrum::{h_spectrum, Spectrum};
pub use verify::{verify_relations, RelationCheck, RelationReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("a = b = 0: this central character belongs to the W family")]
    ZeroCentralCharacter,
    #[error("beta does not satisfy the classification equation (residual {residual})")]
    NotARoot { residual: String },
    #[error("the {0:?} construction needs its corner scalar to be nonzero")]
    BranchUnavailable(VBranch),
    #[error("representations belong to algebras with different parameters")]
    MismatchedParams,
    #[error("h does not split over the working field")]
    SpectrumNotSplit,
    #[error("matrices are not square of a common size")]
    BadShape,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Which of the two explicit constructions of `V_{beta,a,b}` to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VBranch {
    /// `x` is the cyclic shift with `a` in the corner; needs `a != 0`.
    XCyclic,
    /// `y` is the cyclic shift with `b` in the corner; needs `b != 0`.
    YCyclic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepKind {
    V {
        beta: FieldElem,
        a: FieldElem,
        b: FieldElem,
    },
    W {
        m: u32,
    },
    /// Matrices supplied directly, e.g. direct sums built in tests.
    Unlabeled,
}

/// A finite-dimensional representation given by the matrices of `x`, `y`,
/// `s`, together with its classification label.
#[derive(Clone, Debug)]
pub struct Representation {
    params: AlgebraParams,
    kind: RepKind,
    mu: Vec<FieldElem>,
    x: Matrix,
    y: Matrix,
    s: Matrix,
}

impl Representation {
    /// Wrap arbitrary matrices. They need not satisfy the relations; see
    /// [`verify_relations`].
    pub fn from_matrices(
        params: AlgebraParams,
        x: Matrix,
        y: Matrix,
        s: Matrix,
    ) -> Result<Representation, RepError> {
        Representation::labeled(params, RepKind::Unlabeled, Vec::new(), x, y, s)
    }

    pub fn labeled(
        params: AlgebraParams,
        kind: RepKind,
        mu: Vec<FieldElem>,
        x: Matrix,
        y: Matrix,
        s: Matrix,
    ) -> Result<Representation, RepError> {
        let n = x.rows();
        if [&x, &y, &s]
            .iter()
            .any(|m| m.rows() != n || m.cols() != n)
        {
            return Err(RepError::BadShape);
        }
        Ok(Representation {
            params,
            kind,
            mu,
            x,
            y,
            s,
        })
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.params.ctx()
    }

    pub fn kind(&self) -> &RepKind {
        &self.kind
    }

    pub fn dim(&self) -> usize {
        self.x.rows()
    }

    /// `mu_0..mu_{dim-1}`; `y v_i = mu_i v_{i-1}` in the V (x-cyclic) and W
    /// bases. Empty for unlabeled representations.
    pub fn mu(&self) -> &[FieldElem] {
        &self.mu
    }

    pub fn x(&self) -> &Matrix {
        &self.x
    }

    pub fn y(&self) -> &Matrix {
        &self.y
    }

    pub fn s(&self) -> &Matrix {
        &self.s
    }

    /// Human-readable label: `V[beta=..]` or `W_m`.
    pub fn label(&self) -> String {
        match &self.kind {
            RepKind::V { beta, .. } => format!("V[beta={}]", self.ctx().format(*beta)),
            RepKind::W { m } => format!("W_{m}"),
            RepKind::Unlabeled => "unlabeled".to_string(),
        }
    }

    /// Matrix of `s^j`.
    pub fn s_power(&self, j: u32) -> Matrix {
        self.s.pow(self.ctx(), j as u64)
    }

    /// Matrix of `h = xy - sum_j c_j (1 - eps^{-j})^{-1} s^j`.
    pub fn h_matrix(&self) -> Matrix {
        let ctx = self.ctx();
        let mut h = self.x.mul(ctx, &self.y);
        let mut s_pow = Matrix::identity(ctx, self.dim());
        for j in 1..self.params.r() {
            s_pow = s_pow.mul(ctx, &self.s);
            let coeff = self.params.h_coefficient(j as usize);
            h = h.sub(ctx, &s_pow.scale(ctx, coeff));
        }
        h
    }

    /// Replace one entry of the `y` matrix; used to inject faults.
    pub fn with_y_entry(mut self, row: usize, col: usize, value: FieldElem) -> Representation {
        self.y.set(row, col, value);
        self
    }
}

/// `mu_i` for the V family, `i = 0..N-1`:
/// `beta + i + A_{-i}` for t = 1 and `beta + A_{-i}` for t = 0.
pub fn mu_sequence_v(params: &AlgebraParams, beta: FieldElem) -> Vec<FieldElem> {
    let ctx = params.ctx();
    let n = params.generic_dim() as i64;
    (0..n)
        .map(|i| {
            let base = ctx.add(beta, params.weight_constant(-i));
            match params.t() {
                Planck::One => ctx.add(base, ctx.from_int(i)),
                Planck::Zero => base,
            }
        })
        .collect()
}

/// `mu_0..mu_len` of the W-family recursion for the label `m`:
/// `mu_0 = 0`, `mu_{k+1} = mu_k + t - sum_j c_j eps^{(m-k)j}`.
pub fn w_mu_sequence(params: &AlgebraParams, m: u32, len: usize) -> Vec<FieldElem> {
    let ctx = params.ctx();
    let mut out = Vec::with_capacity(len + 1);
    let mut cur = ctx.zero();
    out.push(cur);
    for k in 0..len as i64 {
        let step = ctx.sub(params.t_elem(), params.reflection_sum(m as i64 - k));
        cur = ctx.add(cur, step);
        out.push(cur);
    }
    out
}

/// Dimension of `W_m`: the smallest `k >= 1` with `mu_k = 0`. Always at most
/// `N` because `mu_N` vanishes identically.
pub fn w_dimension(params: &AlgebraParams, m: u32) -> usize {
    let n = params.generic_dim() as usize;
    let mu = w_mu_sequence(params, m, n);
    (1..=n)
        .find(|&k| mu[k].is_zero())
        .expect("mu_N = 0 for every m and c")
}

/// The same dimension read off the closed form: the smallest `D >= 1` with
/// `t D = sum_{i<D} sum_j c_j eps^{(m-i)j}` in the field.
pub fn w_dimension_from_partial_sums(params: &AlgebraParams, m: u32) -> Option<usize> {
    let ctx = params.ctx();
    let n = params.generic_dim() as usize;
    (1..=n).find(|&d| {
        let lhs = ctx.mul(params.t_elem(), ctx.from_int(d as i64));
        let rhs = ctx.sum((0..d as i64).map(|i| params.reflection_sum(m as i64 - i)));
        lhs == rhs
    })
}

/// `W_m`.
pub fn build_w(params: &AlgebraParams, m: u32) -> Representation {
    let m = m % params.r();
    let d = w_dimension(params, m);
    assert_eq!(
        Some(d),
        w_dimension_from_partial_sums(params, m),
        "recursion and partial-sum forms of the W dimension disagree"
    );
    let mut rep = w_truncation(params, m, d);
    rep.kind = RepKind::W { m };
    rep
}

/// The W-shaped matrices of an arbitrary size `dim`: `x` the truncated shift,
/// `y` the down-shift weighted by the recursion's `mu_i` (zeros retained),
/// `s = diag(eps^{m-i})`. For `dim` equal to the W dimension this is `W_m`;
/// for larger `dim` it is reducible.
pub fn w_truncation(params: &AlgebraParams, m: u32, dim: usize) -> Representation {
    let ctx = params.ctx();
    let mu = w_mu_sequence(params, m, dim.saturating_sub(1));
    let mut x = Matrix::zeros(dim, dim);
    let mut y = Matrix::zeros(dim, dim);
    for i in 0..dim.saturating_sub(1) {
        x.set(i + 1, i, ctx.one());
        y.set(i, i + 1, mu[i + 1]);
    }
    let s = Matrix::diagonal(
        &(0..dim as i64)
            .map(|i| params.eps_pow(m as i64 - i))
            .collect::<Vec<_>>(),
    );
    let mu = mu.into_iter().take(dim).collect();
    Representation {
        params: params.clone(),
        kind: RepKind::Unlabeled,
        mu,
        x,
        y,
        s,
    }
}

/// `V_{beta,a,b}` using the x-cyclic construction when `a != 0` and the
/// y-cyclic one otherwise.
pub fn build_v(
    params: &AlgebraParams,
    beta: FieldElem,
    a: FieldElem,
    b: FieldElem,
) -> Result<Representation, RepError> {
    let branch = if a.is_zero() {
        VBranch::YCyclic
    } else {
        VBranch::XCyclic
    };
    build_v_with_branch(params, beta, a, b, branch)
}

pub fn build_v_with_branch(
    params: &AlgebraParams,
    beta: FieldElem,
    a: FieldElem,
    b: FieldElem,
    branch: VBranch,
) -> Result<Representation, RepError> {
    let ctx = params.ctx();
    if a.is_zero() && b.is_zero() {
        return Err(RepError::ZeroCentralCharacter);
    }
    let mu = mu_sequence_v(params, beta);
    let n = mu.len();
    // prod_{i=1}^{N} mu_i with mu_N = mu_0
    let prod = ctx.product(mu.iter().copied());
    let residual = ctx.sub(prod, ctx.mul(a, b));
    if !residual.is_zero() {
        return Err(RepError::NotARoot {
            residual: ctx.format(residual),
        });
    }
    let mut x = Matrix::zeros(n, n);
    let mut y = Matrix::zeros(n, n);
    match branch {
        VBranch::XCyclic => {
            let a_inv = ctx.inv(a).map_err(|_| RepError::BranchUnavailable(branch))?;
            for i in 0..n - 1 {
                x.set(i + 1, i, ctx.one());
                y.set(i, i + 1, mu[i + 1]);
            }
            x.set(0, n - 1, a);
            y.set(n - 1, 0, ctx.add(y.get(n - 1, 0), ctx.mul(a_inv, mu[0])));
        }
        VBranch::YCyclic => {
            let b_inv = ctx.inv(b).map_err(|_| RepError::BranchUnavailable(branch))?;
            for i in 0..n - 1 {
                x.set(i + 1, i, mu[i + 1]);
                y.set(i, i + 1, ctx.one());
            }
            x.set(0, n - 1, ctx.add(x.get(0, n - 1), ctx.mul(b_inv, mu[0])));
            y.set(n - 1, 0, b);
        }
    }
    let s = Matrix::diagonal(&(0..n as i64).map(|i| params.eps_pow(-i)).collect::<Vec<_>>());
    Ok(Representation {
        params: params.clone(),
        kind: RepKind::V { beta, a, b },
        mu,
        x,
        y,
        s,
    })
}

/// Direct sum of representations of the same algebra.
pub fn direct_sum(reps: &[&Representation]) -> Result<Representation, RepError> {
    let first = reps.first().ok_or(RepError::BadShape)?;
    if reps.iter().any(|r| r.params != first.params) {
        return Err(RepError::MismatchedParams);
    }
    let block = |f: fn(&Representation) -> &Matrix| {
        Matrix::block_diagonal(&reps.iter().map(|r| f(r)).collect::<Vec<_>>())
    };
    Representation::from_matrices(
        first.params.clone(),
        block(Representation::x),
        block(Representation::y),
        block(Representation::s),
    )
}
