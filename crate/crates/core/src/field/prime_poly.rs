//! Dense polynomials over the prime field F_p, used only to pick and check
//! the defining modulus of an extension field.
//!
//! Coefficients are stored constant term first and kept trimmed (no trailing
//! zeros); the zero polynomial is the empty vector.

pub(crate) type PrimePoly = Vec<u64>;

pub(crate) fn trim(f: &mut PrimePoly) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

pub(crate) fn degree(f: &[u64]) -> Option<usize> {
    if f.is_empty() {
        None
    } else {
        Some(f.len() - 1)
    }
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a % p, p - 2, p)
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

pub(crate) fn sub(f: &[u64], g: &[u64], p: u64) -> PrimePoly {
    let n = f.len().max(g.len());
    let mut out: PrimePoly = (0..n)
        .map(|i| {
            let a = f.get(i).copied().unwrap_or(0);
            let b = g.get(i).copied().unwrap_or(0);
            (a + p - b) % p
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn mul(f: &[u64], g: &[u64], p: u64) -> PrimePoly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = (out[i + j] + a * b) % p;
        }
    }
    trim(&mut out);
    out
}

/// Remainder of `f` modulo a nonzero `g`.
pub(crate) fn rem(f: &[u64], g: &[u64], p: u64) -> PrimePoly {
    let dg = degree(g).expect("division by the zero polynomial");
    let lead_inv = inv_mod(g[dg], p);
    let mut r: PrimePoly = f.to_vec();
    trim(&mut r);
    while let Some(dr) = degree(&r) {
        if dr < dg {
            break;
        }
        let factor = r[dr] * lead_inv % p;
        let shift = dr - dg;
        for (i, &gc) in g.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - factor * gc % p) % p;
        }
        trim(&mut r);
    }
    r
}

pub(crate) fn gcd(f: &[u64], g: &[u64], p: u64) -> PrimePoly {
    let mut a = f.to_vec();
    let mut b = g.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn mul_mod(f: &[u64], g: &[u64], modulus: &[u64], p: u64) -> PrimePoly {
    rem(&mul(f, g, p), modulus, p)
}

fn pow_poly_mod(base: &[u64], mut exp: u64, modulus: &[u64], p: u64) -> PrimePoly {
    let mut acc: PrimePoly = rem(&[1], modulus, p);
    let mut b = rem(base, modulus, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(&acc, &b, modulus, p);
        }
        b = mul_mod(&b, &b, modulus, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's irreducibility test for a monic polynomial of degree `k >= 1`.
///
/// `f` is irreducible iff `z^(p^k) = z mod f` and
/// `gcd(z^(p^(k/l)) - z, f) = 1` for every prime `l | k`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let Some(k) = degree(f) else { return false };
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    let z: PrimePoly = vec![0, 1];
    // frob[i] = z^(p^i) mod f
    let mut frob = Vec::with_capacity(k + 1);
    frob.push(rem(&z, f, p));
    for i in 1..=k {
        let next = pow_poly_mod(&frob[i - 1], p, f, p);
        frob.push(next);
    }
    if !sub(&frob[k], &z, p).is_empty() {
        return false;
    }
    for l in prime_divisors(k as u64) {
        let e = k / l as usize;
        let diff = sub(&frob[e], &z, p);
        let g = gcd(f, &diff, p);
        if degree(&g) != Some(0) {
            return false;
        }
    }
    true
}
