use bernoulli_kdv::exact_algebra::rational::{frac, int, parse_pq, to_pq};
use bernoulli_kdv::exact_algebra::{BigRational, DensePoly, TruncatedSeries};
use bernoulli_kdv::kdv::{build_densities, canonicalize, DiffPoly};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn small_poly() -> impl Strategy<Value = DensePoly> {
    prop::collection::vec(-50i64..50, 0..12).prop_map(|c| DensePoly::from_ints(&c))
}

fn unit_series(order: usize) -> impl Strategy<Value = TruncatedSeries<BigRational>> {
    (
        prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]),
        prop::collection::vec((-9i64..9, 1i64..5), order),
    )
        .prop_map(move |(c0, rest)| {
            let mut coeffs = vec![int(c0)];
            coeffs.extend(rest.into_iter().map(|(p, q)| frac(p, q)));
            TruncatedSeries::new(coeffs, order)
        })
}

proptest! {
    #[test]
    fn definite_integral_is_linear(p in small_poly(), q in small_poly(), a in -5i64..5, b in -5i64..5) {
        let (a, b) = (int(a), int(b));
        let lhs = (&p + &q).definite_integral(&a, &b);
        prop_assert_eq!(lhs, p.definite_integral(&a, &b) + q.definite_integral(&a, &b));
    }

    #[test]
    fn series_division_round_trip(a in unit_series(32), b in unit_series(32)) {
        let back = a.mul(&b).divide(&b).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn pq_round_trip(p in any::<i64>(), q in 1i64..i64::MAX) {
        let r = frac(p, q);
        prop_assert_eq!(parse_pq(&to_pq(&r)).unwrap(), r);
    }
}

#[test]
fn rational_addition_matches_cross_multiplication() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let (a, c): (i64, i64) = (rng.gen(), rng.gen());
        let b = rng.gen_range(1..=i64::MAX);
        let d = rng.gen_range(1..=i64::MAX);
        let sum = frac(a, b) + frac(c, d);
        // (a d + c b) / (b d), compared by cross multiplication without reduction
        let num = BigInt::from(a) * d + BigInt::from(c) * b;
        let den = BigInt::from(b) * d;
        assert_eq!(sum.numer() * &den, num * sum.denom());
        assert!(sum.denom() > &BigInt::from(0));
        let g = num_integer::Integer::gcd(sum.numer(), sum.denom());
        assert!(g == BigInt::from(1) || sum.numer() == &BigInt::from(0));
    }
}

/// Random monomial exponent vector of exact weight `w` (`u_k` weighs `k + 2`).
fn random_monomial(rng: &mut StdRng, w: u32) -> Vec<u32> {
    let mut e = vec![0u32; w as usize];
    let mut left = w;
    while left > 0 {
        let choices: Vec<u32> = (0..=left - 2).filter(|&k| left - (k + 2) != 1).collect();
        let k = choices[rng.gen_range(0..choices.len())];
        e[k as usize] += 1;
        left -= k + 2;
    }
    e
}

fn random_homogeneous(rng: &mut StdRng, w: u32) -> DiffPoly {
    let mut p = DiffPoly::zero();
    for _ in 0..rng.gen_range(1..5) {
        let c = frac(rng.gen_range(-20..=20), rng.gen_range(1..=6));
        p.add_term(random_monomial(rng, w), c);
    }
    p
}

#[test]
fn euler_operator_annihilates_total_derivatives() {
    let mut rng = StdRng::seed_from_u64(7);
    for i in 0..100 {
        let w = 2 + (i % 12) as u32 + if i % 12 == 0 { 1 } else { 0 };
        let q = random_homogeneous(&mut rng, w.min(13));
        let dq = q.total_x_derivative();
        assert!(dq.euler_operator().is_zero(), "q = {q}");
    }
}

#[test]
fn canonical_density_is_unique_modulo_total_derivatives() {
    let mut rng = StdRng::seed_from_u64(11);
    for d in build_densities(5).unwrap() {
        for _ in 0..5 {
            let q = random_homogeneous(&mut rng, d.weight() - 1);
            let shifted = d.density.add(&q.total_x_derivative());
            assert_eq!(canonicalize(&shifted), d.density, "m = {}", d.m);
        }
    }
}
