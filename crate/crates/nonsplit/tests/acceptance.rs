//! Acceptance criteria 1 to 9, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the lines are always printed. Exponent
//! maximizations are shared between criteria 2, 3 and 4 through one cache.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use nonsplit::cli::TABLE_GRID;
use nonsplit::report::bound_report_with;
use nonsplit::table::{format_four_a, format_lambda};
use nonsplit_core::admissible::{
    constraint_polynomial, evaluate_constraint_polynomial, generate_extremal, solve_lp,
    solve_square_system, verify_admissible, AdmissiblePolynomial, ConstraintSystem, Verdict,
};
use nonsplit_core::bounds::{BaseFieldParams, BoundConfig};
use nonsplit_core::exponent::{li_lower_bound, maximize_a, quadratic_lower_bound, ExponentResult};
use nonsplit_core::numfield::{
    classify_prime, distinct_roots_mod_p, least_nonsplit, IntPolynomial, PrimeClassification,
    Variant,
};
use nonsplit_core::real::Precision;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `(n, d) -> A(n, P_d)` computed on demand.
struct Cache {
    polys: BTreeMap<usize, AdmissiblePolynomial>,
    results: BTreeMap<(u64, usize), ExponentResult>,
    prec: Precision,
}

impl Cache {
    fn new() -> Self {
        let polys = [1usize, 100]
            .into_iter()
            .map(|d| (d, generate_extremal(d).expect("P_d").polynomial))
            .collect();
        Self {
            polys,
            results: BTreeMap::new(),
            prec: Precision::DEFAULT,
        }
    }

    fn get(&mut self, n: u64, d: usize) -> ExponentResult {
        if let Some(r) = self.results.get(&(n, d)) {
            return r.clone();
        }
        let r = maximize_a(n, &self.polys[&d], self.prec)
            .unwrap_or_else(|e| panic!("A({n}, P_{d}): {e}"));
        self.results.insert((n, d), r.clone());
        r
    }
}

/// Reference values: n, 4A(n,P_100), λ(n,P_100), 4A(n,P_1), λ(n,P_1).
const TABLE: [(u64, &str, &str, &str, &str); 18] = [
    (2, "2.444", "21.68", "1.493", "1.678"),
    (3, "2.734", "17.63", "1.827", "1.189"),
    (4, "2.904", "15.50", "2.039", ".9613"),
    (5, "3.021", "14.11", "2.193", ".8244"),
    (6, "3.108", "13.10", "2.311", ".7310"),
    (7, "3.176", "12.33", "2.406", ".6624"),
    (8, "3.231", "11.70", "2.485", ".6094"),
    (9, "3.277", "11.19", "2.553", ".5669"),
    (10, "3.316", "10.75", "2.611", ".5318"),
    (20, "3.530", "8.340", "2.951", ".3554"),
    (50, "3.720", "6.043", "3.293", ".2147"),
    (100, "3.814", "4.763", "3.483", ".1486"),
    (200, "3.878", "3.764", "3.625", ".1035"),
    (500, "3.931", "2.764", "3.757", ".0646"),
    (1000, "3.956", "2.191", "3.826", ".0454"),
    (2000, "3.971", "1.737", "3.876", ".0319"),
    (5000, "3.984", "1.279", "3.921", ".0201"),
    (10000, "3.990", "1.015", "3.944", ".0142"),
];

/// Distance in units of the last printed digit of `printed`.
fn ulps_apart(printed: &str, computed: &str) -> f64 {
    let decimals = printed.split('.').nth(1).map_or(0, str::len);
    let unit = 10f64.powi(-(decimals as i32));
    let a: f64 = printed.parse().unwrap();
    let b: f64 = computed.parse().unwrap();
    ((a - b) / unit).abs()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let expected: [Vec<BigRational>; 4] = [
        vec![q(1, 1)],
        vec![q(1, 1), q(1, 1)],
        vec![q(1, 1), q(1, 1), q(2, 3)],
        vec![q(1, 1), q(1, 1), q(4, 5), q(2, 5)],
    ];
    for (i, want) in expected.iter().enumerate() {
        let got = generate_extremal(i + 1).map_err(|e| e.to_string())?;
        if got.polynomial.coeffs() != want.as_slice() {
            return Err(format!("P_{} = {:?}", i + 1, got.polynomial.coeffs()));
        }
    }
    let t = start.elapsed();
    if t > Duration::from_secs(1) {
        return Err(format!("took {t:?}"));
    }
    Ok(format!("P_1..P_4 exact in {t:?}"))
}

fn criterion_2(cache: &mut Cache) -> Outcome {
    let start = Instant::now();
    let mut exact = 0;
    let mut off_by_one = Vec::new();
    let mut misses = Vec::new();
    for &(n, a100, l100, a1, l1) in &TABLE {
        for (d, four_a, lambda) in [(100, a100, l100), (1, a1, l1)] {
            let r = cache.get(n, d);
            for (printed, computed) in [(four_a, format_four_a(&r)), (lambda, format_lambda(&r))] {
                let u = ulps_apart(printed, &computed);
                if u < 1e-9 {
                    exact += 1;
                } else if u <= 1.0 + 1e-9 {
                    off_by_one.push(format!("n={n} d={d} {printed}->{computed}"));
                } else {
                    misses.push(format!("n={n} d={d}: printed {printed}, computed {computed}"));
                }
            }
        }
    }
    if !misses.is_empty() {
        return Err(misses.join("; "));
    }
    let detail = if off_by_one.is_empty() {
        String::new()
    } else {
        format!(", last digit off by one: {}", off_by_one.join(", "))
    };
    Ok(format!("{exact}/72 printed values exact{detail} ({:.0?})", start.elapsed()))
}

fn criterion_3(cache: &mut Cache) -> Outcome {
    let start = Instant::now();
    let mut prev: Option<(f64, f64)> = None;
    for n in 2..=100u64 {
        let lo = cache.get(n, 1).four_a_f64();
        let hi = cache.get(n, 100).four_a_f64();
        if hi <= lo {
            return Err(format!("n={n}: d=100 {hi} not above d=1 {lo}"));
        }
        if let Some((plo, phi)) = prev {
            if lo <= plo || hi <= phi {
                return Err(format!("n={n}: series not strictly increasing"));
            }
        }
        prev = Some((lo, hi));
    }
    Ok(format!("n in [2,100]: dominance and monotonicity hold ({:.0?})", start.elapsed()))
}

fn criterion_4(cache: &mut Cache) -> Outcome {
    let prec = Precision::DEFAULT;
    let quadratic = AdmissiblePolynomial::quadratic();
    for &n in &TABLE_GRID {
        let aq = maximize_a(n, &quadratic, prec).map_err(|e| e.to_string())?;
        let qb = quadratic_lower_bound(n, prec);
        if aq.a < qb.bound {
            return Err(format!("A({n}, x+x^2) below 1 - 2n^(-2/3)"));
        }
        if aq.a < qb.chain_value {
            return Err(format!("A({n}, x+x^2) below a(cbrt(6/n))"));
        }
        let a1 = cache.get(n, 1);
        if a1.a < li_lower_bound(n, prec) {
            return Err(format!("A({n}, P_1) below 1 - sqrt(2/(n-1))"));
        }
    }
    Ok("both closed-form bounds hold on the 18-point grid at 256 bits".into())
}

/// `Σ_k a_k (1+y²)^(d−k) Re{(1−iy)^k}` with exact Gaussian rationals.
fn direct_expansion(a: &[BigRational], y: &BigRational) -> BigRational {
    let d = a.len();
    let one_plus = BigRational::one() + y * y;
    let mut total = BigRational::zero();
    let mut z = (BigRational::one(), BigRational::zero());
    for (idx, ak) in a.iter().enumerate() {
        // z = (1 − iy)^(idx+1)
        z = (&z.0 + &z.1 * y, &z.1 - &z.0 * y);
        let w = (0..d - idx - 1).fold(BigRational::one(), |acc, _| acc * &one_plus);
        total += ak * w * &z.0;
    }
    total
}

fn random_rational(rng: &mut ChaCha8Rng, bound: i64) -> BigRational {
    q(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    for d in 2..=100usize {
        let square = solve_square_system(d).map_err(|e| e.to_string())?;
        let lp = solve_lp(d).map_err(|e| e.to_string())?;
        if square != lp.values {
            return Err(format!("d={d}: LP and square solutions differ"));
        }
        let mut coeffs = vec![BigRational::one()];
        coeffs.extend(square);
        let c = ConstraintSystem::build(d).evaluate(&coeffs);
        if let Some(j) = (1..d).find(|&j| !c[j].is_zero()) {
            return Err(format!("d={d}: C_{} = {} != 0", 2 * j, c[j]));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let d = rng.gen_range(1..=10usize);
        let a: Vec<BigRational> = (0..d).map(|_| random_rational(&mut rng, 50)).collect();
        let y = random_rational(&mut rng, 20);
        let c = ConstraintSystem::build(d).evaluate(&a);
        let via_matrix = evaluate_constraint_polynomial(&c, &(&y * &y));
        if via_matrix != direct_expansion(&a, &y) {
            return Err(format!("expansion identity fails at d={d}, y={y}"));
        }
    }
    Ok(format!(
        "d=2..100 constraints vanish, solvers identical; 100 random points agree ({:.0?})",
        start.elapsed()
    ))
}

fn check_rejection(p: &AdmissiblePolynomial) -> Result<(), String> {
    let cert = verify_admissible(p).map_err(|e| e.to_string())?;
    if cert.verdict != Verdict::NotAdmissible {
        return Err(format!("accepted {:?}", p.coeffs()));
    }
    let u0 = cert.witness.ok_or("rejection without witness")?;
    let value = evaluate_constraint_polynomial(&constraint_polynomial(p), &u0);
    if u0.is_negative() || !value.is_negative() {
        return Err(format!("invalid witness u0 = {u0}, Q(u0) = {value}"));
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    let mut extremal = Vec::new();
    for d in 1..=100 {
        let p = generate_extremal(d).map_err(|e| e.to_string())?.polynomial;
        if !verify_admissible(&p).map_err(|e| e.to_string())?.is_admissible() {
            return Err(format!("P_{d} rejected"));
        }
        extremal.push(p);
    }
    check_rejection(&AdmissiblePolynomial::new(vec![q(1, 1), q(3, 2)]).unwrap())?;

    // Adding δx² to P_d lowers the top constraint coefficient by δ.
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..100 {
        let d = rng.gen_range(2..=100usize);
        let delta = q(rng.gen_range(1..=1000), rng.gen_range(1..=1000));
        let mut coeffs = extremal[d - 1].coeffs().to_vec();
        coeffs[1] += &delta;
        let p = AdmissiblePolynomial::new(coeffs).unwrap();
        check_rejection(&p).map_err(|e| format!("d={d}, delta={delta}: {e}"))?;
    }
    Ok("P_1..P_100 accepted; x + 3/2 x^2 and 100 perturbed P_d rejected with exact witnesses".into())
}

fn squarefree(d: i64) -> bool {
    let m = d.unsigned_abs();
    (2..).take_while(|k| k * k <= m).all(|k| m % (k * k) != 0)
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|k| k * k <= p).all(|k| p % k != 0)
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

fn brute_roots(c: &[i64], p: u64) -> usize {
    (0..p)
        .filter(|&x| {
            let v = c.iter().rev().fold(0i128, |acc, &a| {
                (acc * x as i128 + a as i128).rem_euclid(p as i128)
            });
            v == 0
        })
        .count()
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let primes: Vec<u64> = (3..=1000).filter(|&p| is_prime(p)).collect();
    let mut checked = 0usize;
    for d in -500i64..=500 {
        // d = 1 gives the reducible x² − 1, which is not a field.
        if d == 0 || d == 1 || !squarefree(d) {
            continue;
        }
        let f = IntPolynomial::from_i64s(&[-d, 0, 1]).map_err(|e| format!("d={d}: {e}"))?;
        for &p in &primes {
            if (2 * d).rem_euclid(p as i64) == 0 {
                continue;
            }
            let euler = pow_mod(d.rem_euclid(p as i64) as u64, (p - 1) / 2, p) == 1;
            let split = classify_prime(&f, p).map_err(|e| e.to_string())?
                == PrimeClassification::SplitsCompletely;
            if euler != split {
                return Err(format!("d={d}, p={p}"));
            }
            checked += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let small: Vec<u64> = (2..=97).filter(|&p| is_prime(p)).collect();
    let mut polys = 0;
    while polys < 200 {
        let deg = rng.gen_range(2..=5usize);
        let mut c: Vec<i64> = (0..deg).map(|_| rng.gen_range(-30..=30)).collect();
        c.push(1);
        let Ok(f) = IntPolynomial::from_i64s(&c) else { continue };
        polys += 1;
        for &p in &small {
            if distinct_roots_mod_p(&f, p) != brute_roots(&c, p) {
                return Err(format!("root count differs for {f} mod {p}"));
            }
        }
    }
    let t = start.elapsed();
    if t > Duration::from_secs(60) {
        return Err(format!("took {t:?}"));
    }
    Ok(format!("{checked} Euler checks and 200 random gcd root counts agree ({t:.0?})"))
}

/// Least prime at which the quadratic `c` fails to split completely, by
/// counting roots mod p. Primes dividing `disc` are ramified for these fields.
fn brute_least_nonsplit(c: &[i64], disc: i64, unramified: bool) -> u64 {
    (2..)
        .filter(|&p| is_prime(p))
        .find(|&p| {
            if disc.rem_euclid(p as i64) == 0 {
                !unramified
            } else {
                brute_roots(c, p) < 2
            }
        })
        .unwrap()
}

fn criterion_8() -> Outcome {
    let cases: [(&[i64], i64, Variant, u64); 3] = [
        (&[1, 0, 1], -4, Variant::AnyNonSplit, 2),
        (&[1, 0, 1], -4, Variant::UnramifiedNonSplit, 3),
        (&[-1, -1, 1], 5, Variant::AnyNonSplit, 2),
    ];
    let mut shown = Vec::new();
    for (c, disc, variant, want) in cases {
        let f = IntPolynomial::from_i64s(c).unwrap();
        let got = least_nonsplit(&f, variant, 1000).map_err(|e| e.to_string())?.least_prime;
        let brute = brute_least_nonsplit(c, disc, variant == Variant::UnramifiedNonSplit);
        if got != want || brute != want {
            return Err(format!("{f} ({}): got {got}, brute force {brute}, expected {want}", variant.as_str()));
        }
        shown.push(format!("{f} {} -> {got}", variant.as_str()));
    }
    Ok(shown.join(", "))
}

fn criterion_9(cache: &mut Cache) -> Outcome {
    let r = cache.get(5, 100);
    let p100 = generate_extremal(100).unwrap().polynomial;
    let report = bound_report_with(
        &BaseFieldParams::RATIONALS,
        1.0,
        &p100,
        &r,
        &BoundConfig { epsilon: 0.0, ..BoundConfig::default() },
        Precision::DEFAULT,
    )
    .map_err(|e| e.to_string())?;
    if format_four_a(&r) != "3.021" {
        return Err(format!("4A(5,P_100) = {}", format_four_a(&r)));
    }
    let denom = 1.0 / report.outputs.exponent.value.as_f64().unwrap();
    if (denom - 12.08).abs() > 0.01 {
        return Err(format!("exponent 1/{denom:.3}"));
    }
    if !report.notes.iter().any(|n| n.contains("1/8.7") && n.contains("12.08")) {
        return Err("discrepancy note missing".into());
    }
    let json = report.to_json();
    let flags_everywhere = json["outputs"]
        .as_object()
        .unwrap()
        .values()
        .all(|v| v.get("rigorous").is_some_and(|f| f.is_boolean()));
    if !flags_everywhere || json["outputs"]["log_C_F_scale"]["rigorous"] != false {
        return Err("rigor flags incomplete".into());
    }
    Ok(format!(
        "exponent 1/{denom:.2} from 4A(5,P_100) = 3.021, 1/8.7 discrepancy noted, C_F scale flagged non-rigorous"
    ))
}

fn main() -> ExitCode {
    let mut cache = Cache::new();
    let mut all_pass = true;
    let mut report = |n: u32, f: &mut dyn FnMut() -> Outcome| {
        let line = match catch_unwind(AssertUnwindSafe(f)) {
            Ok(Ok(msg)) => format!("criterion {n}: PASS {msg}"),
            Ok(Err(msg)) => {
                all_pass = false;
                format!("criterion {n}: FAIL {msg}")
            }
            Err(_) => {
                all_pass = false;
                format!("criterion {n}: FAIL (panicked)")
            }
        };
        println!("{line}");
    };
    report(1, &mut criterion_1);
    report(2, &mut || criterion_2(&mut cache));
    report(3, &mut || criterion_3(&mut cache));
    report(4, &mut || criterion_4(&mut cache));
    report(5, &mut criterion_5);
    report(6, &mut criterion_6);
    report(7, &mut criterion_7);
    report(8, &mut criterion_8);
    report(9, &mut || criterion_9(&mut cache));
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
