//! Dense univariate polynomials with integer coefficients, and the Sturm
//! machinery used to certify sign conditions on `[0, ∞)`.
//!
//! Remainder sequences are computed as primitive pseudo-remainder sequences
//! so that coefficients stay integral and content is stripped at each step.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial `Σ coeffs[i]·x^i` with no trailing zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Scales rational coefficients by the positive lcm of their
    /// denominators. The result has the same roots and the same sign
    /// everywhere as the rational polynomial.
    pub fn from_rationals(coeffs: &[BigRational]) -> Self {
        let lcm = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        Self::new(
            coeffs
                .iter()
                .map(|c| c.numer() * (&lcm / c.denom()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content, keeping the sign of every value.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|v| v / &c).collect())
    }

    fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    /// Exact value at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    /// Sign of the value at `x = p/q` without forming a rational: evaluates
    /// the homogenized form `Σ c_i p^i q^(n−i)`, which has the same sign
    /// because `q > 0`.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        let Some(n) = self.degree() else {
            return Ordering::Equal;
        };
        let (p, q) = (x.numer(), x.denom());
        let mut acc = self.coeffs[n].clone();
        let mut qpow = q.clone();
        for c in self.coeffs[..n].iter().rev() {
            acc = acc * p + c * &qpow;
            qpow *= q;
        }
        acc.sign_ord()
    }

    /// Sign as `x → +∞`.
    pub fn sign_at_infinity(&self) -> Ordering {
        self.leading().map_or(Ordering::Equal, |c| c.sign_ord())
    }

    /// Pseudo-remainder: `lc(d)^(deg self − deg d + 1)·self = q·d + r`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo-division by zero polynomial");
        let Some(mut rd) = self.degree() else {
            return Self::zero();
        };
        if rd < dd {
            return self.clone();
        }
        let lc = d.leading().unwrap().clone();
        let mut r = self.coeffs.clone();
        let mut steps = 0usize;
        let total = rd - dd + 1;
        loop {
            let top = r[rd].clone();
            let shift = rd - dd;
            for c in r.iter_mut() {
                *c *= &lc;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[shift + i] -= &top * dc;
            }
            steps += 1;
            debug_assert!(r[rd].is_zero());
            r.truncate(rd);
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
            match r.len().checked_sub(1) {
                Some(deg) if deg >= dd => rd = deg,
                _ => break,
            }
        }
        // Missing steps (degree dropped by more than one) still count toward
        // the lc power in the definition.
        let mut r = Self::new(r);
        for _ in steps..total {
            r = Self::new(r.coeffs.into_iter().map(|c| c * &lc).collect());
        }
        r
    }

    /// Exact quotient `self / d` over ℤ, or `None` if `d` does not divide
    /// `self` with integral quotient.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        let Some(n) = self.degree() else {
            return Some(Self::zero());
        };
        if n < dd {
            return None;
        }
        let lc = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let (t, rem) = r[k + dd].div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] -= &t * dc;
            }
            q[k] = t;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(q))
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        if a.sign_at_infinity() == Ordering::Less {
            a = a.neg();
        }
        a
    }

    /// `self / gcd(self, self')`: same roots, all simple.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative());
        self.primitive_part()
            .div_exact(&g)
            .expect("gcd must divide the primitive part")
    }

    /// Exclusive upper bound on the absolute value of every root
    /// (Cauchy): `1 + max |c_i / c_n|`.
    pub fn root_bound(&self) -> BigRational {
        let lc = self.leading().expect("root bound of zero polynomial").abs();
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero);
        BigRational::one() + BigRational::new(max, lc)
    }
}

trait SignOrd {
    fn sign_ord(&self) -> Ordering;
}

impl SignOrd for BigInt {
    fn sign_ord(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

/// Sturm sequence `p, p', −rem(p, p'), …` with positive rescalings.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Self {
        assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
        let mut chain = vec![p.primitive_part()];
        let mut next = p.derivative().primitive_part();
        while !next.is_zero() {
            let prev = chain.last().unwrap();
            let lc_sign = next.sign_at_infinity();
            let delta = prev.degree().unwrap() - next.degree().unwrap();
            // prem = lc^(δ+1)·rem; recover the sign of −rem.
            let mut r = prev.pseudo_rem(&next).neg();
            if lc_sign == Ordering::Less && delta % 2 == 0 {
                r = r.neg();
            }
            chain.push(next);
            next = r.primitive_part();
        }
        Self { chain }
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    fn variations<I: Iterator<Item = Ordering>>(signs: I) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for s in signs.filter(|&s| s != Ordering::Equal) {
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_infinity(&self) -> usize {
        Self::variations(self.chain.iter().map(IntPoly::sign_at_infinity))
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count_roots(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }

    /// Number of distinct roots in `(0, ∞)`.
    pub fn count_positive_roots(&self) -> usize {
        self.variations_at(&BigRational::zero()) - self.variations_at_infinity()
    }

    fn first(&self) -> &IntPoly {
        &self.chain[0]
    }

    /// Isolates every positive root of the chain's base polynomial into a
    /// disjoint open interval `(l, r)` containing exactly one root, sorted
    /// ascending. Endpoints are never roots except possibly `l = 0`.
    pub fn isolate_positive_roots(&self) -> Vec<(BigRational, BigRational)> {
        let base = self.first();
        if base.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let hi = base.root_bound();
        let lo = BigRational::zero();
        let mut out = Vec::new();
        let mut stack = vec![(lo.clone(), hi.clone(), self.count_roots(&lo, &hi))];
        while let Some((l, r, count)) = stack.pop() {
            match count {
                0 => {}
                1 => out.push((l, r)),
                _ => {
                    let mid = self.split_point(&l, &r);
                    let left = self.count_roots(&l, &mid);
                    stack.push((mid.clone(), r, count - left));
                    stack.push((l, mid, left));
                }
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// Given an isolating interval `(l, r)` for a single root `x`, returns a
    /// non-root point in `(l, x)`.
    pub fn point_left_of_root(&self, l: &BigRational, r: &BigRational) -> BigRational {
        let mut r = r.clone();
        loop {
            let mid = self.split_point(l, &r);
            if self.count_roots(l, &mid) == 0 {
                return mid;
            }
            r = mid;
        }
    }

    /// A point strictly inside `(l, r)` that is not a root: the midpoint
    /// unless it happens to be one, then nearby dyadic-free fractions.
    fn split_point(&self, l: &BigRational, r: &BigRational) -> BigRational {
        let width = r - l;
        let base = self.first();
        let mut den = 2i64;
        loop {
            for num in 1..den {
                if num.gcd(&den) != 1 {
                    continue;
                }
                let t = l + &width * BigRational::new(num.into(), den.into());
                if base.sign_at(&t) != Ordering::Equal {
                    return t;
                }
            }
            den += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn sign_at_rational_points() {
        // (2x - 1)(x - 3)
        let p = IntPoly::from_i64s(&[3, -7, 2]);
        assert_eq!(p.sign_at(&q(1, 2)), Ordering::Equal);
        assert_eq!(p.sign_at(&q(1, 3)), Ordering::Greater);
        assert_eq!(p.sign_at(&q(5, 2)), Ordering::Less);
        assert_eq!(p.sign_at(&q(-7, 3)), Ordering::Greater);
        for x in [q(1, 3), q(5, 2), q(-7, 3), q(17, 5)] {
            assert_eq!(p.sign_at(&x), p.eval(&x).cmp(&BigRational::zero()));
        }
    }

    #[test]
    fn pseudo_remainder_identity() {
        let a = IntPoly::from_i64s(&[1, 0, 3, 0, 2]);
        let d = IntPoly::from_i64s(&[-1, 3]);
        let r = a.pseudo_rem(&d);
        // r is constant: 3^4·a(1/3)
        let expected = a.eval(&q(1, 3)) * BigRational::from_integer(BigInt::from(3).pow(4u32));
        assert_eq!(BigRational::from_integer(r.coeffs()[0].clone()), expected);
    }

    #[test]
    fn squarefree_part_strips_repeated_roots() {
        // (x - 1)^2 (x + 2)
        let p = IntPoly::from_i64s(&[2, -3, 0, 1]);
        let sf = p.squarefree_part();
        assert_eq!(sf, IntPoly::from_i64s(&[-2, 1, 1]));
    }

    #[test]
    fn sturm_counts_roots() {
        // (x-1)(x-2)(x-3)(x+5)
        let p = IntPoly::from_i64s(&[-30, 49, -19, -1, 1]);
        let s = SturmChain::new(&p);
        assert_eq!(s.count_positive_roots(), 3);
        assert_eq!(s.count_roots(&q(3, 2), &q(5, 2)), 1);
        assert_eq!(s.count_roots(&q(-10, 1), &q(10, 1)), 4);
        let iso = s.isolate_positive_roots();
        assert_eq!(iso.len(), 3);
        for ((l, r), root) in iso.iter().zip([1, 2, 3]) {
            let root = q(root, 1);
            assert!(l < &root && &root < r);
        }
    }

    #[test]
    fn isolation_avoids_roots_at_midpoints() {
        // Roots at exactly the first bisection points of (0, 7).
        // x(2x-7)(4x-7) has positive roots 7/2 and 7/4; bound is 1 + 49/8.
        let p = IntPoly::from_i64s(&[0, 49, -42, 8]);
        let s = SturmChain::new(&p.squarefree_part());
        let iso = s.isolate_positive_roots();
        assert_eq!(iso.len(), 2);
        for (l, r) in &iso {
            assert_ne!(p.sign_at(r), Ordering::Equal);
            assert!(l.is_zero() || p.sign_at(l) != Ordering::Equal);
        }
    }

    #[test]
    fn no_positive_roots() {
        let p = IntPoly::from_i64s(&[1, 0, 1]);
        assert_eq!(SturmChain::new(&p).count_positive_roots(), 0);
        let p = IntPoly::from_i64s(&[5, 3]);
        assert_eq!(SturmChain::new(&p).count_positive_roots(), 0);
    }

    proptest::proptest! {
        // Products of linear factors with known integer roots.
        #[test]
        fn sturm_count_matches_constructed_roots(roots in proptest::collection::btree_set(-12i64..12, 1..6)) {
            let mut p = IntPoly::from_i64s(&[1]);
            for &r in &roots {
                let mut next = vec![BigInt::zero(); p.coeffs().len() + 1];
                for (i, c) in p.coeffs().iter().enumerate() {
                    next[i + 1] += c;
                    next[i] -= c * BigInt::from(r);
                }
                p = IntPoly::new(next);
            }
            let s = SturmChain::new(&p);
            let positive = roots.iter().filter(|&&r| r > 0).count();
            proptest::prop_assert_eq!(s.count_positive_roots(), positive);
            proptest::prop_assert_eq!(s.isolate_positive_roots().len(), positive);
        }
    }
}
