//! Irreducible representations of rank-1 rational Cherednik algebras
//! H_{t,c} over finite fields of characteristic p.
//!
//! The crate is organised bottom-up:
//!
//! * [`field`]: exact GF(p^k) arithmetic, roots of unity, root finding;
//! * [`linalg`]: dense exact matrices (rank, kernels, determinants,
//!   characteristic polynomials);
//! * [`algebra`]: PBW normal forms `x^i y^j s^l` and multiplication in H_{t,c};
//! * [`reps`]: the explicit V and W families, relation checks, spectra,
//!   irreducibility, isomorphism and full classification;
//! * [`setup`]: choosing a working field from user-level literals;
//! * [`cli`]: the command-line front end behind the `cherednik` binary.

pub mod algebra;
pub mod cli;
pub mod field;
pub mod linalg;
pub mod reps;
pub mod setup;

pub use algebra::{AlgebraElem, AlgebraParams, Monomial, PbwAlgebra, Planck};
pub use field::{make_field, min_ext_degree, FieldCtx, FieldElem};
pub use linalg::Matrix;
pub use reps::{classify_all, ClassificationReport, RepKind, Representation};
