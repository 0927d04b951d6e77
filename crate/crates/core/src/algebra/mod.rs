//! Elements of H_{t,c} in PBW normal form and their multiplication.
//!
//! The algebra is generated by `x`, `y`, `s` subject to
//!
//! ```text
//! s^r = 1,   s x = eps^{-1} x s,   s y = eps y s,   y x - x y = t - sum_j c_j s^j
//! ```
//!
//! Every element is stored as a combination of monomials `x^i y^j s^l` with
//! `0 <= l < r`. Products are brought back to that form by commuting `s`
//! to the right (a scalar twist) and by pushing each `y` of the left factor
//! through the power of `x` it meets, using
//!
//! ```text
//! y x^a = x^a y + x^{a-1} phi_a(s),   phi_a(s) = sum_k g_k (sum_{u<a} eps^{-ku}) s^k
//! ```
//!
//! where `g(s) = t - sum_j c_j s^j`. The `y`s are processed innermost
//! (rightmost) first. One use of that identity on one PBW term counts as one
//! rule application in [`RewriteStats`].
//!
//! The ordering of terms is lexicographic in `(i, j, l)`; no monomial order
//! is intrinsic to the algebra, this one just fixes the canonical printout.

mod params;
mod text;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::field::{FieldCtx, FieldElem, FieldError};

pub use params::{AlgebraParams, Planck};
pub use text::ParseError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("t must be 0 or 1 (got {0}); any nonzero t reduces to t = 1 by rescaling the c_j")]
    UnsupportedPlanck(i64),
    #[error("r = {r} must be positive and coprime to p = {p}")]
    NotCoprime { p: u32, r: u32 },
    #[error("expected {expected} parameters c_1..c_(r-1), got {got}")]
    WrongParameterCount { expected: usize, got: usize },
    #[error("epsilon is not a primitive r-th root of unity")]
    BadEpsilon,
    #[error("parameter is not an element of the working field")]
    ForeignElement,
    #[error("operands belong to algebras with different parameters")]
    MismatchedParams,
    #[error("product degree {degree} exceeds the configured bound {bound}")]
    DegreeBound { degree: u32, bound: u32 },
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// The PBW monomial `x^i y^j s^l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub i: u32,
    pub j: u32,
    pub l: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { i: 0, j: 0, l: 0 };

    pub fn new(i: u32, j: u32, l: u32) -> Monomial {
        Monomial { i, j, l }
    }

    /// Degree in `x` and `y`; `s` has degree zero.
    pub fn degree(&self) -> u32 {
        self.i + self.j
    }
}

/// A finite combination of PBW monomials with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElem {
    terms: BTreeMap<Monomial, FieldElem>,
    origin: u64,
}

impl AlgebraElem {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, FieldElem)> + '_ {
        self.terms.iter().map(|(&m, &c)| (m, c))
    }

    pub fn coefficient(&self, m: Monomial) -> Option<FieldElem> {
        self.terms.get(&m).copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest `i + j` over the terms; zero for scalars and for zero.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }
}

/// Counters reported by [`PbwAlgebra::multiply_counted`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RewriteStats {
    /// Uses of `y x^a -> x^a y + x^{a-1} phi_a(s)` on a single term.
    pub yx_rule_applications: u64,
}

/// The generators, used to report centrality witnesses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    X,
    Y,
    S,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::X => "x",
            Generator::Y => "y",
            Generator::S => "s",
        })
    }
}

/// Result of a centrality check: `witness` holds the first generator whose
/// commutator with the element is nonzero, together with that commutator.
#[derive(Clone, Debug)]
pub struct CentralityCheck {
    pub central: bool,
    pub witness: Option<(Generator, AlgebraElem)>,
}

/// Default bound on `i + j` for any product, as a multiple of `pr`.
pub const DEFAULT_DEGREE_FACTOR: u32 = 4;

/// The algebra H_{t,c}: parameters plus precomputed structure constants.
#[derive(Clone, Debug)]
pub struct PbwAlgebra {
    params: AlgebraParams,
    degree_bound: u32,
    /// g_k: coefficient of s^k in t - sum_j c_j s^j.
    g: Vec<FieldElem>,
    /// geo[k][n] = sum_{u<n} eps^{-ku} for n < r; the full period sums to 0
    /// for k != 0 and to r for k = 0.
    geo: Vec<Vec<FieldElem>>,
}

impl PbwAlgebra {
    pub fn new(params: AlgebraParams) -> PbwAlgebra {
        let bound = DEFAULT_DEGREE_FACTOR * params.pr();
        PbwAlgebra::with_degree_bound(params, bound)
    }

    pub fn with_degree_bound(params: AlgebraParams, degree_bound: u32) -> PbwAlgebra {
        let ctx = params.ctx();
        let r = params.r() as usize;
        let mut g = vec![ctx.zero(); r];
        g[0] = params.t_elem();
        for (j, gj) in g.iter_mut().enumerate().skip(1) {
            *gj = ctx.neg(params.c_j(j));
        }
        let geo = (0..r)
            .map(|k| {
                let mut acc = ctx.zero();
                let mut out = Vec::with_capacity(r + 1);
                for u in 0..=r {
                    out.push(acc);
                    acc = ctx.add(acc, params.eps_pow(-((k * u) as i64)));
                }
                out
            })
            .collect();
        PbwAlgebra {
            params,
            degree_bound,
            g,
            geo,
        }
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.params.ctx()
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    fn wrap(&self, terms: BTreeMap<Monomial, FieldElem>) -> AlgebraElem {
        AlgebraElem {
            terms,
            origin: self.params.fingerprint(),
        }
    }

    pub fn zero(&self) -> AlgebraElem {
        self.wrap(BTreeMap::new())
    }

    pub fn scalar(&self, c: FieldElem) -> AlgebraElem {
        self.monomial(Monomial::ONE, c)
    }

    pub fn one(&self) -> AlgebraElem {
        self.scalar(self.ctx().one())
    }

    /// `c x^i y^j s^l`, with `l` reduced mod r.
    pub fn monomial(&self, m: Monomial, c: FieldElem) -> AlgebraElem {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            let m = Monomial {
                l: m.l % self.params.r(),
                ..m
            };
            terms.insert(m, c);
        }
        self.wrap(terms)
    }

    pub fn x(&self) -> AlgebraElem {
        self.monomial(Monomial::new(1, 0, 0), self.ctx().one())
    }

    pub fn y(&self) -> AlgebraElem {
        self.monomial(Monomial::new(0, 1, 0), self.ctx().one())
    }

    pub fn s(&self) -> AlgebraElem {
        self.monomial(Monomial::new(0, 0, 1), self.ctx().one())
    }

    pub fn generator(&self, g: Generator) -> AlgebraElem {
        match g {
            Generator::X => self.x(),
            Generator::Y => self.y(),
            Generator::S => self.s(),
        }
    }

    fn check_origin(&self, e: &AlgebraElem) -> Result<(), AlgebraError> {
        if e.origin != self.params.fingerprint() {
            return Err(AlgebraError::MismatchedParams);
        }
        Ok(())
    }

    fn accumulate(&self, terms: &mut BTreeMap<Monomial, FieldElem>, m: Monomial, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        let ctx = self.ctx();
        let entry = terms.entry(m).or_insert(FieldElem::ZERO);
        *entry = ctx.add(*entry, c);
        if entry.is_zero() {
            terms.remove(&m);
        }
    }

    pub fn add(&self, a: &AlgebraElem, b: &AlgebraElem) -> Result<AlgebraElem, AlgebraError> {
        self.check_origin(a)?;
        self.check_origin(b)?;
        let mut terms = a.terms.clone();
        for (&m, &c) in &b.terms {
            self.accumulate(&mut terms, m, c);
        }
        Ok(self.wrap(terms))
    }

    pub fn scale(&self, a: &AlgebraElem, c: FieldElem) -> Result<AlgebraElem, AlgebraError> {
        self.check_origin(a)?;
        let ctx = self.ctx();
        let terms = a
            .terms
            .iter()
            .map(|(&m, &v)| (m, ctx.mul(v, c)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        Ok(self.wrap(terms))
    }

    pub fn neg(&self, a: &AlgebraElem) -> Result<AlgebraElem, AlgebraError> {
        self.scale(a, self.ctx().from_int(-1))
    }

    pub fn sub(&self, a: &AlgebraElem, b: &AlgebraElem) -> Result<AlgebraElem, AlgebraError> {
        self.add(a, &self.neg(b)?)
    }

    /// Normal form of the product `a b`.
    pub fn multiply(&self, a: &AlgebraElem, b: &AlgebraElem) -> Result<AlgebraElem, AlgebraError> {
        self.multiply_counted(a, b).map(|(e, _)| e)
    }

    /// [`PbwAlgebra::multiply`] together with rewriting counters.
    pub fn multiply_counted(
        &self,
        a: &AlgebraElem,
        b: &AlgebraElem,
    ) -> Result<(AlgebraElem, RewriteStats), AlgebraError> {
        self.check_origin(a)?;
        self.check_origin(b)?;
        let degree = a.degree() + b.degree();
        if degree > self.degree_bound {
            return Err(AlgebraError::DegreeBound {
                degree,
                bound: self.degree_bound,
            });
        }
        let ctx = self.ctx();
        let r = self.params.r();
        let mut stats = RewriteStats::default();
        let mut cache: HashMap<(u32, u32), Vec<(Monomial, FieldElem)>> = HashMap::new();
        let mut out = BTreeMap::new();
        for (&m1, &c1) in &a.terms {
            for (&m2, &c2) in &b.terms {
                // x^i1 y^j1 s^l1 x^i2 y^j2 s^l2
                //   = eps^{l1 (j2 - i2)} x^i1 (y^j1 x^i2) y^j2 s^{l1 + l2}
                let twist = self
                    .params
                    .eps_pow(m1.l as i64 * (m2.j as i64 - m2.i as i64));
                let coeff = ctx.mul(ctx.mul(c1, c2), twist);
                let inner = cache
                    .entry((m1.j, m2.i))
                    .or_insert_with(|| self.y_power_times_x_power(m1.j, m2.i, &mut stats));
                for &(mid, mc) in inner.iter() {
                    // s^c y^j2 = eps^{c j2} y^j2 s^c
                    let tw = self.params.eps_pow(mid.l as i64 * m2.j as i64);
                    let m = Monomial {
                        i: m1.i + mid.i,
                        j: mid.j + m2.j,
                        l: (mid.l + m1.l + m2.l) % r,
                    };
                    self.accumulate(&mut out, m, ctx.mul(coeff, ctx.mul(mc, tw)));
                }
            }
        }
        Ok((self.wrap(out), stats))
    }

    /// Normal form of `y^j x^i`.
    fn y_power_times_x_power(
        &self,
        j: u32,
        i: u32,
        stats: &mut RewriteStats,
    ) -> Vec<(Monomial, FieldElem)> {
        let ctx = self.ctx();
        let r = self.params.r() as usize;
        let mut cur: BTreeMap<Monomial, FieldElem> = BTreeMap::new();
        cur.insert(Monomial::new(i, 0, 0), ctx.one());
        for _ in 0..j {
            let mut next = BTreeMap::new();
            for (&m, &c) in &cur {
                self.accumulate(&mut next, Monomial { j: m.j + 1, ..m }, c);
                if m.i == 0 {
                    continue;
                }
                stats.yx_rule_applications += 1;
                let a = m.i as usize;
                for k in 0..r {
                    let geo = self.geo[k][a % r];
                    let geo = if k == 0 {
                        // the k = 0 sum is just a (mod p)
                        ctx.from_int(a as i64)
                    } else {
                        geo
                    };
                    let phi = ctx.mul(self.g[k], geo);
                    if phi.is_zero() {
                        continue;
                    }
                    // x^{a-1} s^k y^b s^l = eps^{k b} x^{a-1} y^b s^{k+l}
                    let tw = self.params.eps_pow((k as i64) * m.j as i64);
                    let target = Monomial {
                        i: m.i - 1,
                        j: m.j,
                        l: ((k as u32) + m.l) % r as u32,
                    };
                    self.accumulate(&mut next, target, ctx.mul(ctx.mul(c, phi), tw));
                }
            }
            cur = next;
        }
        cur.into_iter().collect()
    }

    pub fn pow(&self, a: &AlgebraElem, e: u32) -> Result<AlgebraElem, AlgebraError> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.multiply(&acc, a)?;
        }
        Ok(acc)
    }

    /// `ab - ba`.
    pub fn commutator(&self, a: &AlgebraElem, b: &AlgebraElem) -> Result<AlgebraElem, AlgebraError> {
        let ab = self.multiply(a, b)?;
        let ba = self.multiply(b, a)?;
        self.sub(&ab, &ba)
    }

    /// `h = xy - sum_j c_j (1 - eps^{-j})^{-1} s^j`.
    pub fn element_h(&self) -> AlgebraElem {
        let ctx = self.ctx();
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::new(1, 1, 0), ctx.one());
        for j in 1..self.params.r() {
            let coeff = ctx.neg(self.params.h_coefficient(j as usize));
            self.accumulate(&mut terms, Monomial::new(0, 0, j), coeff);
        }
        self.wrap(terms)
    }

    /// Central iff it commutes with each of `x`, `y`, `s`.
    pub fn check_central(&self, e: &AlgebraElem) -> Result<CentralityCheck, AlgebraError> {
        for g in [Generator::X, Generator::Y, Generator::S] {
            let comm = self.commutator(e, &self.generator(g))?;
            if !comm.is_zero() {
                return Ok(CentralityCheck {
                    central: false,
                    witness: Some((g, comm)),
                });
            }
        }
        Ok(CentralityCheck {
            central: true,
            witness: None,
        })
    }

    /// `A_m`, see [`AlgebraParams::weight_constant`].
    pub fn weight_constant(&self, m: i64) -> FieldElem {
        self.params.weight_constant(m)
    }

    pub fn format(&self, e: &AlgebraElem) -> String {
        text::format_elem(self, e)
    }

    pub fn parse(&self, s: &str) -> Result<AlgebraElem, ParseError> {
        text::parse_elem(self, s)
    }
}
