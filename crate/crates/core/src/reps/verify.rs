use serde::Serialize;

use crate::algebra::Planck;
use crate::linalg::Matrix;

use super::{RepKind, Representation};

/// Outcome of one defining relation, checked as a matrix identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub passed: bool,
    /// First `(row, col)` where the two sides differ.
    pub first_failure: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&RelationCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&RelationCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub const REL_S_ORDER: &str = "s^r = 1";
pub const REL_SX: &str = "s x = eps^-1 x s";
pub const REL_SY: &str = "s y = eps y s";
pub const REL_YX: &str = "[y,x] = t - sum c_j s^j";

fn check(name: impl Into<String>, lhs: &Matrix, rhs: &Matrix) -> RelationCheck {
    let first_failure = lhs
        .entries()
        .iter()
        .zip(rhs.entries())
        .position(|(a, b)| a != b)
        .map(|i| (i / lhs.cols(), i % lhs.cols()));
    RelationCheck {
        name: name.into(),
        passed: first_failure.is_none(),
        first_failure,
    }
}

/// Check the defining relations of the algebra on the matrices, then the
/// conditions implied by the representation's label: the central character
/// `x^N = a`, `y^N = b` (and `h = beta` for t = 0) on V, and nilpotency plus
/// the lowest-weight vector on W.
pub fn verify_relations(rep: &Representation) -> RelationReport {
    let params = rep.params();
    let ctx = rep.ctx();
    let n = rep.dim();
    let (x, y, s) = (rep.x(), rep.y(), rep.s());
    let id = Matrix::identity(ctx, n);
    let eps = params.epsilon();
    let eps_inv = ctx.inv(eps).expect("epsilon is a unit");

    let mut checks = vec![
        check(REL_S_ORDER, &rep.s_power(params.r()), &id),
        check(REL_SX, &s.mul(ctx, x), &x.mul(ctx, s).scale(ctx, eps_inv)),
        check(REL_SY, &s.mul(ctx, y), &y.mul(ctx, s).scale(ctx, eps)),
    ];
    let mut reflection = Matrix::zeros(n, n);
    let mut s_pow = id.clone();
    for j in 1..params.r() as usize {
        s_pow = s_pow.mul(ctx, s);
        reflection = reflection.add(ctx, &s_pow.scale(ctx, params.c_j(j)));
    }
    let rhs = id.scale(ctx, params.t_elem()).sub(ctx, &reflection);
    let commutator = y.mul(ctx, x).sub(ctx, &x.mul(ctx, y));
    checks.push(check(REL_YX, &commutator, &rhs));

    let big_n = params.generic_dim() as u64;
    match rep.kind() {
        RepKind::V { beta, a, b } => {
            checks.push(check("x^N = a", &x.pow(ctx, big_n), &id.scale(ctx, *a)));
            checks.push(check("y^N = b", &y.pow(ctx, big_n), &id.scale(ctx, *b)));
            if params.t() == Planck::Zero {
                checks.push(check("h = beta", &rep.h_matrix(), &id.scale(ctx, *beta)));
            }
        }
        RepKind::W { m } => {
            let zero = Matrix::zeros(n, n);
            checks.push(check("x^N = 0", &x.pow(ctx, big_n), &zero));
            checks.push(check("y^N = 0", &y.pow(ctx, big_n), &zero));
            if n > 0 {
                let mut v0 = Matrix::zeros(n, 1);
                v0.set(0, 0, ctx.one());
                checks.push(check("y v_0 = 0", &y.mul(ctx, &v0), &Matrix::zeros(n, 1)));
                checks.push(check(
                    "s v_0 = eps^m v_0",
                    &s.mul(ctx, &v0),
                    &v0.scale(ctx, params.eps_pow(*m as i64)),
                ));
            }
        }
        RepKind::Unlabeled => {}
    }
    RelationReport { checks }
}
