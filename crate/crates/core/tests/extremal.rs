//! Extremal polynomials: known low degrees, exact vanishing of the interior
//! constraints, agreement of the square and simplex solvers, and monotone
//! optimum.

use nonsplit_core::admissible::{
    generate_extremal, generate_extremal_with, solve_lp, solve_square_system, verify_admissible,
    ConstraintSystem, SolveMethod,
};
use nonsplit_core::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn low_degrees() {
    let expected = [
        vec![q(1, 1)],
        vec![q(1, 1), q(1, 1)],
        vec![q(1, 1), q(1, 1), q(2, 3)],
        vec![q(1, 1), q(1, 1), q(4, 5), q(2, 5)],
    ];
    for (i, want) in expected.iter().enumerate() {
        let got = generate_extremal(i + 1).unwrap();
        assert_eq!(got.polynomial.coeffs(), want.as_slice());
        assert!(got.certificate.is_admissible());
    }
    assert_eq!(solve_lp(4).unwrap().objective, q(16, 5));
}

#[test]
fn solvers_agree_and_constraints_vanish() {
    let mut last = BigRational::zero();
    for d in 2..=40 {
        let square = solve_square_system(d).unwrap();
        let lp = solve_lp(d).unwrap();
        assert_eq!(square, lp.values, "solvers disagree at d={d}");
        let mut a = vec![q(1, 1)];
        a.extend(square);
        assert!(a.iter().all(|x| !x.is_negative()), "negative coefficient at d={d}");
        let c = ConstraintSystem::build(d).evaluate(&a);
        assert!(c[1..].iter().all(Zero::is_zero), "nonzero interior constraint at d={d}");
        let p1: BigRational = a.iter().sum();
        assert_eq!(c[0], p1);
        assert_eq!(lp.objective, p1);
        assert!(p1 >= last, "P_d(1) decreased at d={d}");
        last = p1;
    }
}

#[test]
fn every_extremal_polynomial_certifies_on_fast_path() {
    for d in 1..=30 {
        let p = generate_extremal(d).unwrap();
        let cert = verify_admissible(&p.polynomial).unwrap();
        assert!(cert.is_admissible());
        assert_eq!(cert.method.as_str(), "all-constraints-nonnegative");
    }
}

#[test]
fn degree_cap_and_zero_degree() {
    assert!(matches!(
        generate_extremal_with(11, SolveMethod::Both, 10),
        Err(Error::DegreeOutOfRange { .. })
    ));
    assert!(generate_extremal(0).is_err());
}

#[test]
fn single_solver_paths_match() {
    let sq = generate_extremal_with(7, SolveMethod::Square, 200).unwrap();
    let lp = generate_extremal_with(7, SolveMethod::Lp, 200).unwrap();
    assert_eq!(sq.polynomial, lp.polynomial);
}
