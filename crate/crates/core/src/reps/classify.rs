use crate::algebra::{AlgebraParams, Planck};
use crate::field::{poly_mul, roots_with_multiplicity, FieldElem};

use super::{
    build_v, build_w, irreducibility, isomorphic, verify_relations, Irreducibility, RelationReport,
    RepError, Representation,
};

/// `prod_m g(z + A_m) - ab`, constant term first, where `g(z) = z^p - z`
/// for t = 1 and `g(z) = z` for t = 0. Its roots are the admissible `beta`.
pub fn classification_polynomial(
    params: &AlgebraParams,
    a: FieldElem,
    b: FieldElem,
) -> Vec<FieldElem> {
    let ctx = params.ctx();
    let p = params.p() as usize;
    let mut acc = vec![ctx.one()];
    for m in 0..params.r() as i64 {
        let shift = params.weight_constant(m);
        let factor = match params.t() {
            Planck::One => {
                // z^p - z + (A^p - A)
                let mut f = vec![ctx.zero(); p + 1];
                f[0] = ctx.artin_schreier(shift);
                f[1] = ctx.neg(ctx.one());
                f[p] = ctx.add(f[p], ctx.one());
                f
            }
            Planck::Zero => vec![shift, ctx.one()],
        };
        acc = poly_mul(ctx, &acc, &factor);
    }
    acc[0] = ctx.sub(acc[0], ctx.mul(a, b));
    acc
}

/// `prod_m g(beta + A_m)`, the value `ab` must take.
pub fn classification_value(params: &AlgebraParams, beta: FieldElem) -> FieldElem {
    let ctx = params.ctx();
    ctx.product((0..params.r() as i64).map(|m| {
        let z = ctx.add(beta, params.weight_constant(m));
        match params.t() {
            Planck::One => ctx.artin_schreier(z),
            Planck::Zero => z,
        }
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaCandidates {
    /// Roots of the classification polynomial with multiplicities.
    pub roots: Vec<(FieldElem, usize)>,
    /// One `beta` per isomorphism class: for t = 1 the smallest element of
    /// each coset `beta + F_p`, for t = 0 the roots themselves.
    pub representatives: Vec<FieldElem>,
    pub degree: usize,
    /// Whether the polynomial splits over the working field, i.e. whether
    /// every class defined over its algebraic closure was found.
    pub complete: bool,
}

impl BetaCandidates {
    pub fn multiplicity(&self, beta: FieldElem) -> usize {
        self.roots
            .iter()
            .find(|(z, _)| *z == beta)
            .map_or(0, |&(_, k)| k)
    }
}

pub fn beta_candidates(
    params: &AlgebraParams,
    a: FieldElem,
    b: FieldElem,
) -> Result<BetaCandidates, RepError> {
    if a.is_zero() && b.is_zero() {
        return Err(RepError::ZeroCentralCharacter);
    }
    let ctx = params.ctx();
    let poly = classification_polynomial(params, a, b);
    let degree = poly.len() - 1;
    let roots = roots_with_multiplicity(ctx, &poly)?;
    let complete = roots.iter().map(|(_, k)| k).sum::<usize>() == degree;
    let mut representatives: Vec<FieldElem> = roots
        .iter()
        .map(|&(z, _)| match params.t() {
            Planck::One => (0..params.p() as i64)
                .map(|i| ctx.add(z, ctx.from_int(i)))
                .min()
                .expect("p > 0"),
            Planck::Zero => z,
        })
        .collect();
    representatives.sort();
    representatives.dedup();
    Ok(BetaCandidates {
        roots,
        representatives,
        degree,
        complete,
    })
}

#[derive(Clone, Debug)]
pub struct ClassEntry {
    pub label: String,
    pub rep: Representation,
    pub relations: RelationReport,
    pub irreducible: bool,
    /// Multiplicity of `beta` as a root of the classification polynomial.
    pub root_multiplicity: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub params: AlgebraParams,
    pub a: FieldElem,
    pub b: FieldElem,
    pub classes: Vec<ClassEntry>,
    pub beta_representatives: Vec<FieldElem>,
    pub complete: bool,
}

impl ClassificationReport {
    pub fn all_verified(&self) -> bool {
        self.classes
            .iter()
            .all(|c| c.irreducible && c.relations.all_passed())
    }
}

/// Every irreducible representation with central character `(a, b)` defined
/// over the working field, one per isomorphism class, each verified.
pub fn classify_all(
    params: &AlgebraParams,
    a: FieldElem,
    b: FieldElem,
) -> Result<ClassificationReport, RepError> {
    let mut classes: Vec<ClassEntry> = Vec::new();
    let (beta_representatives, complete) = if a.is_zero() && b.is_zero() {
        for m in 0..params.r() {
            let rep = build_w(params, m);
            let mut duplicate = false;
            for c in &classes {
                if isomorphic(&c.rep, &rep)? {
                    duplicate = true;
                    break;
                }
            }
            if !duplicate {
                classes.push(entry(rep, None));
            }
        }
        (Vec::new(), true)
    } else {
        let cands = beta_candidates(params, a, b)?;
        for &beta in &cands.representatives {
            let rep = build_v(params, beta, a, b)?;
            classes.push(entry(rep, Some(cands.multiplicity(beta))));
        }
        (cands.representatives, cands.complete)
    };
    Ok(ClassificationReport {
        params: params.clone(),
        a,
        b,
        classes,
        beta_representatives,
        complete,
    })
}

fn entry(rep: Representation, root_multiplicity: Option<usize>) -> ClassEntry {
    let relations = verify_relations(&rep);
    let irreducible = matches!(irreducibility(&rep), Irreducibility::Irreducible);
    ClassEntry {
        label: rep.label(),
        rep,
        relations,
        irreducible,
        root_multiplicity,
    }
}
