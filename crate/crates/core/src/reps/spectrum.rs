use std::collections::BTreeMap;

use crate::field::{roots_with_multiplicity, FieldElem};
use crate::linalg::{charpoly, determinant, Matrix};

use super::{RepError, Representation};

/// Eigenvalues of `h` with algebraic multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    pub eigenvalues: BTreeMap<FieldElem, usize>,
}

impl Spectrum {
    pub fn total(&self) -> usize {
        self.eigenvalues.values().sum()
    }

    pub fn multiplicity(&self, lambda: FieldElem) -> usize {
        self.eigenvalues.get(&lambda).copied().unwrap_or(0)
    }
}

/// Spectrum of `h` on the representation. Triangular `h` is read off its
/// diagonal; otherwise the characteristic polynomial is factored, and every
/// eigenvalue is confirmed by `det(h - lambda) = 0`.
pub fn h_spectrum(rep: &Representation) -> Result<Spectrum, RepError> {
    let ctx = rep.ctx();
    let h = rep.h_matrix();
    let n = rep.dim();
    let mut eigenvalues = BTreeMap::new();
    if h.is_upper_triangular() {
        for lambda in h.diagonal_entries() {
            *eigenvalues.entry(lambda).or_insert(0) += 1;
        }
    } else {
        let poly = charpoly(ctx, &h);
        for (lambda, mult) in roots_with_multiplicity(ctx, &poly)? {
            eigenvalues.insert(lambda, mult);
        }
    }
    let spectrum = Spectrum { eigenvalues };
    if spectrum.total() != n {
        return Err(RepError::SpectrumNotSplit);
    }
    for &lambda in spectrum.eigenvalues.keys() {
        let shifted = h.sub(ctx, &Matrix::scalar(ctx, n, lambda));
        assert!(
            determinant(ctx, &shifted).is_zero(),
            "eigenvalue of h fails the determinant check"
        );
    }
    Ok(spectrum)
}
