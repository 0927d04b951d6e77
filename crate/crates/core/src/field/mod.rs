//! Exact arithmetic in GF(p) and GF(p^k).
//!
//! A [`FieldCtx`] fixes the ambient field: the prime `p`, the degree `k`, and
//! a monic irreducible modulus over F_p. Elements are small `Copy` handles
//! ([`FieldElem`]) that only make sense together with the context that
//! produced them; all arithmetic goes through the context.
//!
//! Internally an element is the integer whose base-`p` digits are its
//! coefficient vector with the *constant* coefficient as the most significant
//! digit. This makes the integer order of handles coincide with the
//! lexicographic (constant-term-first) order of coefficient vectors, which is
//! the canonical order used everywhere in the crate. Multiplication, inversion
//! and addition use discrete-log and Zech-log tables built once per field.

mod poly;
pub(crate) mod prime_poly;

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

pub use poly::{poly_eval, poly_mul, poly_roots, root_multiplicity, roots_with_multiplicity};

/// Largest field order for which tables are built.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

const NO_LOG: u32 = u32::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("GF({p}^{k}) is larger than the supported maximum of {max} elements")]
    TooLarge { p: u64, k: u32, max: u64 },
    #[error("r = {r} is not coprime to p = {p}")]
    NotCoprime { p: u64, r: u64 },
    #[error("inversion of zero")]
    DivisionByZero,
    #[error("GF({p}^{k}) contains no element of multiplicative order {r}")]
    NoRootOfUnity { p: u32, k: u32, r: u32 },
    #[error("the zero polynomial has every element as a root")]
    ZeroPolynomial,
    #[error("invalid field element literal {literal:?}: {reason}")]
    BadLiteral { literal: String, reason: String },
    #[error("modulus {modulus:?} is not monic irreducible of degree {k} over F_{p}")]
    BadModulus { p: u32, k: u32, modulus: Vec<u32> },
}

/// An element of some [`FieldCtx`].
///
/// The derived order is the lexicographic order of coefficient vectors,
/// constant term compared first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Position of the element in the canonical enumeration of the field.
    pub fn index(self) -> u32 {
        self.0
    }
}

/// Serializable description of a field: `{"p": .., "k": .., "modulus": [..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub k: u32,
    /// Monic modulus, constant term first (`k + 1` entries).
    pub modulus: Vec<u32>,
}

pub struct FieldCtx {
    p: u32,
    k: u32,
    q: u32,
    /// p^(k-1): the weight of the constant coefficient.
    lead_weight: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn checked_order(p: u64, k: u32) -> Result<u32, FieldError> {
    let mut q: u64 = 1;
    for _ in 0..k {
        q = q.saturating_mul(p);
        if q > MAX_FIELD_ORDER {
            return Err(FieldError::TooLarge {
                p,
                k,
                max: MAX_FIELD_ORDER,
            });
        }
    }
    Ok(q as u32)
}

/// Build GF(p^k) with the lexicographically smallest monic irreducible
/// modulus of degree `k` (coefficients compared constant term first).
pub fn make_field(p: u64, k: u32) -> Result<FieldCtx, FieldError> {
    if !is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    if k == 0 {
        return Err(FieldError::ZeroDegree);
    }
    let q = checked_order(p, k)?;
    // Candidate n encodes (c_0, .., c_{k-1}) with c_0 as the most significant
    // digit, so counting upwards walks the lexicographic order.
    for n in 0..q as u64 {
        let mut coeffs = digits_constant_first(n, p, k);
        coeffs.push(1);
        if prime_poly::is_irreducible(&coeffs, p) {
            let modulus: Vec<u32> = coeffs.iter().map(|&c| c as u32).collect();
            return FieldCtx::with_modulus(p as u32, &modulus);
        }
    }
    unreachable!("every degree has a monic irreducible polynomial over F_p")
}

fn digits_constant_first(mut n: u64, p: u64, k: u32) -> Vec<u64> {
    let mut digits = vec![0u64; k as usize];
    for i in (0..k as usize).rev() {
        digits[i] = n % p;
        n /= p;
    }
    digits
}

/// Smallest `k >= 1` with `r | p^k - 1`, i.e. the degree of the smallest
/// extension of F_p containing a primitive `r`-th root of unity.
pub fn min_ext_degree(p: u64, r: u64) -> Result<u32, FieldError> {
    if r == 0 || gcd_u64(p, r) != 1 {
        return Err(FieldError::NotCoprime { p, r });
    }
    let target = 1 % r;
    let base = p % r;
    let mut acc = base;
    let mut k = 1;
    while acc != target {
        acc = acc * base % r;
        k += 1;
    }
    Ok(k)
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl FieldCtx {
    /// Build the field F_p[z]/(modulus). The modulus must be monic and
    /// irreducible; it is given constant term first.
    pub fn with_modulus(p: u32, modulus: &[u32]) -> Result<FieldCtx, FieldError> {
        if !is_prime(p as u64) {
            return Err(FieldError::NotPrime(p as u64));
        }
        if modulus.len() < 2 {
            return Err(FieldError::ZeroDegree);
        }
        let k = (modulus.len() - 1) as u32;
        let bad = || FieldError::BadModulus {
            p,
            k,
            modulus: modulus.to_vec(),
        };
        let wide: Vec<u64> = modulus.iter().map(|&c| c as u64).collect();
        if wide.iter().any(|&c| c >= p as u64)
            || wide[k as usize] != 1
            || !prime_poly::is_irreducible(&wide, p as u64)
        {
            return Err(bad());
        }
        let q = checked_order(p as u64, k)?;
        let lead_weight = q / p;
        let mut ctx = FieldCtx {
            p,
            k,
            q,
            lead_weight,
            modulus: modulus.to_vec(),
            exp: Vec::new(),
            log: Vec::new(),
            zech: Vec::new(),
        };
        ctx.build_tables();
        Ok(ctx)
    }

    pub fn from_descriptor(desc: &FieldDescriptor) -> Result<FieldCtx, FieldError> {
        if desc.modulus.len() != desc.k as usize + 1 {
            return Err(FieldError::BadModulus {
                p: desc.p,
                k: desc.k,
                modulus: desc.modulus.clone(),
            });
        }
        FieldCtx::with_modulus(desc.p, &desc.modulus)
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.p,
            k: self.k,
            modulus: self.modulus.clone(),
        }
    }

    fn slow_mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let p = self.p as u64;
        let m: Vec<u64> = self.modulus.iter().map(|&c| c as u64).collect();
        prime_poly::rem(&prime_poly::mul(a, b, p), &m, p)
    }

    fn poly_of_index(&self, idx: u32) -> Vec<u64> {
        let mut v = digits_constant_first(idx as u64, self.p as u64, self.k);
        prime_poly::trim(&mut v);
        v
    }

    fn index_of_poly(&self, f: &[u64]) -> u32 {
        let p = self.p as u64;
        let mut idx: u64 = 0;
        for i in 0..self.k as usize {
            idx = idx * p + f.get(i).copied().unwrap_or(0);
        }
        idx as u32
    }

    fn slow_pow(&self, base: &[u64], mut e: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut b = base.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.slow_mul(&acc, &b);
            }
            b = self.slow_mul(&b, &b);
            e >>= 1;
        }
        acc
    }

    fn build_tables(&mut self) {
        let q = self.q;
        let group = (q - 1) as u64;
        let primes = prime_poly::prime_divisors(group);
        let one_idx = self.lead_weight;
        let generator = (1..q)
            .map(|idx| self.poly_of_index(idx))
            .find(|g| {
                primes
                    .iter()
                    .all(|&l| self.index_of_poly(&self.slow_pow(g, group / l)) != one_idx)
            })
            .expect("the multiplicative group of a finite field is cyclic");

        let mut exp = vec![0u32; (q - 1) as usize];
        let mut log = vec![NO_LOG; q as usize];
        let mut cur = vec![1u64];
        for (e, slot) in exp.iter_mut().enumerate() {
            let idx = self.index_of_poly(&cur);
            *slot = idx;
            log[idx as usize] = e as u32;
            cur = self.slow_mul(&cur, &generator);
        }
        // zech[n] = log(1 + g^n)
        let w = self.lead_weight;
        let p = self.p;
        let zech = exp
            .iter()
            .map(|&v| {
                let c0 = v / w;
                let bumped = v - c0 * w + ((c0 + 1) % p) * w;
                if bumped == 0 {
                    NO_LOG
                } else {
                    log[bumped as usize]
                }
            })
            .collect();
        self.exp = exp;
        self.log = log;
        self.zech = zech;
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of elements, p^k.
    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem(0)
    }

    pub fn one(&self) -> FieldElem {
        FieldElem(self.lead_weight)
    }

    /// The class of `z` in F_p[z]/(modulus).
    pub fn generator(&self) -> FieldElem {
        self.from_coeffs(&[0, 1]).unwrap_or_else(|_| self.zero())
    }

    /// Image of an integer under the map Z -> F_p -> GF(p^k).
    pub fn from_int(&self, n: i64) -> FieldElem {
        let r = n.rem_euclid(self.p as i64) as u32;
        FieldElem(r * self.lead_weight)
    }

    /// Element with the given residues (little-endian in the generator);
    /// missing trailing coefficients are zero.
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Result<FieldElem, FieldError> {
        if coeffs.len() > self.k as usize {
            return Err(FieldError::BadLiteral {
                literal: format!("{coeffs:?}"),
                reason: format!("more than k = {} residues", self.k),
            });
        }
        let p = self.p as i64;
        let mut idx: u64 = 0;
        for i in 0..self.k as usize {
            let c = coeffs.get(i).copied().unwrap_or(0).rem_euclid(p);
            idx = idx * self.p as u64 + c as u64;
        }
        Ok(FieldElem(idx as u32))
    }

    /// Coefficient vector of length `k`, constant term first.
    pub fn coeffs(&self, e: FieldElem) -> Vec<u32> {
        digits_constant_first(e.0 as u64, self.p as u64, self.k)
            .into_iter()
            .map(|d| d as u32)
            .collect()
    }

    /// Element literal: comma-separated residues, little-endian in the
    /// generator, always exactly `k` of them (`"2,1"` is `2 + g`).
    pub fn format(&self, e: FieldElem) -> String {
        self.coeffs(e)
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parse an element literal. Accepts between 1 and `k` residues; each may
    /// be any integer and is reduced mod p.
    pub fn parse(&self, literal: &str) -> Result<FieldElem, FieldError> {
        let residues = parse_residues(literal)?;
        self.from_coeffs(&residues).map_err(|_| FieldError::BadLiteral {
            literal: literal.to_string(),
            reason: format!("more than k = {} residues", self.k),
        })
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.q).map(FieldElem)
    }

    pub fn is_in_prime_field(&self, e: FieldElem) -> bool {
        e.0.is_multiple_of(self.lead_weight)
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 {
            return b;
        }
        if b.0 == 0 {
            return a;
        }
        let n = self.q - 1;
        let la = self.log[a.0 as usize];
        let lb = self.log[b.0 as usize];
        let d = if lb >= la { lb - la } else { lb + n - la };
        let z = self.zech[d as usize];
        if z == NO_LOG {
            FieldElem(0)
        } else {
            FieldElem(self.exp[((la as u64 + z as u64) % n as u64) as usize])
        }
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        if a.0 == 0 || self.p == 2 {
            return a;
        }
        let n = self.q - 1;
        let l = self.log[a.0 as usize];
        FieldElem(self.exp[((l + n / 2) % n) as usize])
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem(0);
        }
        let n = (self.q - 1) as u64;
        let s = self.log[a.0 as usize] as u64 + self.log[b.0 as usize] as u64;
        FieldElem(self.exp[(s % n) as usize])
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem, FieldError> {
        if a.0 == 0 {
            return Err(FieldError::DivisionByZero);
        }
        let n = self.q - 1;
        let l = self.log[a.0 as usize];
        Ok(FieldElem(self.exp[((n - l) % n) as usize]))
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        if e == 0 {
            return self.one();
        }
        if a.0 == 0 {
            return FieldElem(0);
        }
        let n = (self.q - 1) as u128;
        let l = self.log[a.0 as usize] as u128 * (e as u128 % n) % n;
        FieldElem(self.exp[l as usize])
    }

    /// Integer power allowing negative exponents on nonzero bases.
    pub fn pow_signed(&self, a: FieldElem, e: i64) -> Result<FieldElem, FieldError> {
        if e >= 0 {
            Ok(self.pow(a, e as u64))
        } else {
            Ok(self.pow(self.inv(a)?, e.unsigned_abs()))
        }
    }

    pub fn sum<I: IntoIterator<Item = FieldElem>>(&self, it: I) -> FieldElem {
        it.into_iter().fold(self.zero(), |acc, x| self.add(acc, x))
    }

    pub fn product<I: IntoIterator<Item = FieldElem>>(&self, it: I) -> FieldElem {
        it.into_iter().fold(self.one(), |acc, x| self.mul(acc, x))
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FieldElem) -> Option<u32> {
        if a.0 == 0 {
            return None;
        }
        let n = self.q - 1;
        let l = self.log[a.0 as usize];
        Some(n / gcd_u64(l as u64, n as u64) as u32)
    }

    /// Artin-Schreier map f(z) = z^p - z.
    pub fn artin_schreier(&self, z: FieldElem) -> FieldElem {
        self.sub(self.pow(z, self.p as u64), z)
    }

    /// The lexicographically smallest element of multiplicative order
    /// exactly `r`.
    pub fn primitive_root_of_unity(&self, r: u32) -> Result<FieldElem, FieldError> {
        let none = FieldError::NoRootOfUnity {
            p: self.p,
            k: self.k,
            r,
        };
        if r == 0 || !(self.q - 1).is_multiple_of(r) {
            return Err(none);
        }
        self.elements()
            .find(|&e| self.multiplicative_order(e) == Some(r))
            .ok_or(none)
    }
}

/// Free-function form of [`FieldCtx::primitive_root_of_unity`].
pub fn primitive_root_of_unity(ctx: &FieldCtx, r: u32) -> Result<FieldElem, FieldError> {
    ctx.primitive_root_of_unity(r)
}

/// Split an element literal into integer residues without reducing them.
pub fn parse_residues(literal: &str) -> Result<Vec<i64>, FieldError> {
    let bad = |reason: &str| FieldError::BadLiteral {
        literal: literal.to_string(),
        reason: reason.to_string(),
    };
    let trimmed = literal.trim();
    if trimmed.is_empty() {
        return Err(bad("empty literal"));
    }
    trimmed
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| bad("residues must be integers"))
        })
        .collect()
}
