//! The constraint matrix against a direct Gaussian-rational expansion of
//! `Σ_k a_k (1+y²)^(d−k) Re{(1−iy)^k}`.

use nonsplit_core::admissible::ConstraintSystem;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `(re, im)` with rational parts.
fn gauss_mul(a: &(BigRational, BigRational), b: &(BigRational, BigRational)) -> (BigRational, BigRational) {
    (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
}

fn direct(a: &[BigRational], y: &BigRational) -> BigRational {
    let d = a.len();
    let one_plus = BigRational::one() + y * y;
    let base = (BigRational::one(), -y.clone());
    let mut total = BigRational::zero();
    for (idx, ak) in a.iter().enumerate() {
        let k = idx + 1;
        let mut z = (BigRational::one(), BigRational::zero());
        for _ in 0..k {
            z = gauss_mul(&z, &base);
        }
        let mut w = BigRational::one();
        for _ in 0..d - k {
            w *= &one_plus;
        }
        total += ak * w * z.0;
    }
    total
}

fn via_matrix(a: &[BigRational], y: &BigRational) -> BigRational {
    let c = ConstraintSystem::build(a.len()).evaluate(a);
    let u = y * y;
    c.iter().rev().fold(BigRational::zero(), |acc, cj| acc * &u + cj)
}

#[test]
fn small_degrees_match_hand_expansion() {
    // d = 2: C_0 = a_1 + a_2, C_2 = a_1 − a_2.
    let m = ConstraintSystem::build(2);
    assert_eq!(m.row(0), &[BigInt::from(1), BigInt::from(1)]);
    assert_eq!(m.row(1), &[BigInt::from(1), BigInt::from(-1)]);
    let m = ConstraintSystem::build(3);
    assert_eq!(m.row(1), &[BigInt::from(2), BigInt::from(0), BigInt::from(-3)]);
    assert_eq!(m.row(2), &[BigInt::from(1), BigInt::from(-1), BigInt::from(0)]);
}

#[test]
fn identity_at_fixed_points() {
    for d in 1..=12 {
        let a: Vec<BigRational> = (1..=d as i64).map(|k| q(k * k - 3 * k + 7, k + 1)).collect();
        for y in [q(0, 1), q(1, 1), q(-2, 3), q(17, 5), q(1, 1000)] {
            assert_eq!(via_matrix(&a, &y), direct(&a, &y), "d={d} y={y}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]
    #[test]
    fn identity_at_random_points(
        d in 1usize..=10,
        nums in proptest::collection::vec((-50i64..50, 1i64..20), 10),
        y in (-1000i64..1000, 1i64..100),
    ) {
        let a: Vec<BigRational> = nums[..d].iter().map(|&(n, m)| q(n, m)).collect();
        let y = q(y.0, y.1);
        prop_assert_eq!(via_matrix(&a, &y), direct(&a, &y));
    }
}
