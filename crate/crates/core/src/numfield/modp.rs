//! Dense polynomials over the prime field `𝔽_p`, coefficients as `u64`
//! residues, lowest degree first.

use alloc::vec;
use alloc::vec::Vec;

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// `a mod m` for monic `m`.
fn rem_monic(mut a: Vec<u64>, m: &[u64], p: u64) -> Vec<u64> {
    let dm = m.len() - 1;
    debug_assert_eq!(m[dm], 1);
    trim(&mut a);
    while a.len() > dm {
        let top = a.len() - 1;
        let c = a[top];
        let shift = top - dm;
        for (i, &mc) in m.iter().enumerate() {
            a[shift + i] = sub_mod(a[shift + i], mul_mod(c, mc, p), p);
        }
        trim(&mut a);
    }
    a
}

fn mul_rem(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = add_mod(out[i + j], mul_mod(x, y, p), p);
        }
    }
    rem_monic(out, m, p)
}

/// `x^e mod (m, p)` by square-and-multiply.
pub(crate) fn x_pow_mod(e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = rem_monic(vec![1], m, p);
    let mut base = rem_monic(vec![0, 1], m, p);
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_rem(&acc, &base, m, p);
        }
        e >>= 1;
        if e > 0 {
            base = mul_rem(&base, &base, m, p);
        }
    }
    acc
}

fn make_monic(mut a: Vec<u64>, p: u64) -> Vec<u64> {
    trim(&mut a);
    if let Some(&lc) = a.last() {
        let inv = inv_mod(lc, p);
        for c in a.iter_mut() {
            *c = mul_mod(*c, inv, p);
        }
    }
    a
}

/// Monic gcd over `𝔽_p`; empty for `gcd(0, 0)`.
pub(crate) fn gcd(a: Vec<u64>, b: Vec<u64>, p: u64) -> Vec<u64> {
    let mut a = make_monic(a, p);
    let mut b = make_monic(b, p);
    while !b.is_empty() {
        let r = rem_monic(a, &b, p);
        a = b;
        b = make_monic(r, p);
    }
    a
}

/// Degree of `gcd(x^p − x, f mod p)`: the number of distinct roots of `f`
/// in `𝔽_p`. `f` is monic with residues reduced mod `p`.
pub(crate) fn distinct_root_count(f: &[u64], p: u64) -> usize {
    let mut xp = x_pow_mod(p, f, p);
    if xp.len() < 2 {
        xp.resize(2, 0);
    }
    xp[1] = sub_mod(xp[1], 1, p);
    trim(&mut xp);
    if xp.is_empty() {
        // f divides x^p − x.
        return f.len() - 1;
    }
    gcd(f.to_vec(), xp, p).len().saturating_sub(1)
}

/// Legendre symbol `(a / p)` for odd prime `p`, as `-1`, `0`, or `1`.
pub(crate) fn legendre(a: u64, p: u64) -> i8 {
    match pow_mod(a % p, (p - 1) / 2, p) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}
