#![allow(dead_code)]

use defsum::arith::{int, rat};
use defsum::syntax::parse_ore;
use defsum::{BasisSpec, BigRat, InputOperator, OreOp, Poly, RatFun, Var};
use rand::Rng;

/// Operator in `k` from the relaxed text form.
pub fn kop(s: &str) -> OreOp {
    parse_ore(s, Var::K).unwrap_or_else(|e| panic!("{s:?}: {e}"))
}

/// Rational function in `k` from text.
pub fn kfun(s: &str) -> RatFun {
    let op = kop(s);
    match op.order() {
        None => RatFun::zero(),
        Some(0) if op.low() == Some(0) => op.coeff(0).unwrap().clone(),
        _ => panic!("{s:?} is not a coefficient"),
    }
}

pub fn random_poly(rng: &mut impl Rng, degree: usize, bound: i64) -> Poly {
    Poly::from_coeffs((0..=degree).map(|_| int(rng.gen_range(-bound..=bound))).collect())
}

pub fn random_rational_poly(rng: &mut impl Rng, degree: usize) -> Poly {
    Poly::from_coeffs(
        (0..=degree)
            .map(|_| {
                if rng.gen_bool(0.3) {
                    BigRat::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=6).into())
                } else {
                    int(rng.gen_range(-4..=4))
                }
            })
            .collect(),
    )
}

/// Nonzero operator in `n` with polynomial coefficients.
pub fn random_input(rng: &mut impl Rng, max_order: i64, degree: usize, rational: bool) -> InputOperator {
    loop {
        let order = rng.gen_range(0..=max_order);
        let terms = (0..=order).map(|e| {
            let d = rng.gen_range(0..=degree);
            let p = if rational { random_rational_poly(rng, d) } else { random_poly(rng, d, 3) };
            (e, RatFun::from_poly(p))
        });
        let op = OreOp::from_terms(Var::N, terms.collect::<Vec<_>>());
        if let Ok(l) = InputOperator::new(op) {
            return l;
        }
    }
}

pub fn random_spec(rng: &mut impl Rng, m: usize, max_a: u32) -> BasisSpec {
    let a = (0..m).map(|_| rng.gen_range(1..=max_a)).collect();
    let b = (0..m)
        .map(|_| if rng.gen_bool(0.2) { rat(rng.gen_range(-3..=3), 2) } else { int(rng.gen_range(-2..=2)) })
        .collect();
    BasisSpec::new(a, b).unwrap()
}

/// Operator in `k` with random polynomial coefficients of degree at most
/// `degree` and exponents in `low..=high`.
pub fn random_k_op(rng: &mut impl Rng, low: i64, high: i64, degree: usize) -> OreOp {
    loop {
        let terms: Vec<_> = (low..=high).map(|e| (e, RatFun::from_poly(random_poly(rng, degree, 3)))).collect();
        let op = OreOp::from_terms(Var::K, terms);
        if op.order() == Some(high) {
            return op;
        }
    }
}

pub fn factorial(n: u64) -> BigRat {
    (1..=n).fold(int(1), |acc, i| acc * int(i as i64))
}

pub fn fibonacci(n: usize) -> BigRat {
    let (mut a, mut b) = (int(0), int(1));
    for _ in 0..n {
        let c = &a + &b;
        a = b;
        b = c;
    }
    a
}
