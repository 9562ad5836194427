mod common;

use common::*;
use defsum::arith::{int, solve_linear_system};
use defsum::basis::{basis_poly, check_compatibility, expand_in_basis};
use defsum::oracle::{interlace, msection};
use defsum::syntax::{parse_ore, to_text};
use defsum::{gcrd, parse_operator, BasisSpec, BigRat, ExpansionTable, OreOp, Poly, RatFun, Reducer, Sequence, Var};
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-6i64..=6, 0..5).prop_map(|c| Poly::from_ints(&c))
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfun() -> impl Strategy<Value = RatFun> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| RatFun::new(n, d).unwrap())
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn poly_division(a in poly(), b in nonzero_poly()) {
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a.clone());
        prop_assert!(r.is_zero() || r.degree() < b.degree());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn poly_gcd_divides(a in nonzero_poly(), b in nonzero_poly(), g in nonzero_poly()) {
        let (x, y) = (&a * &g, &b * &g);
        let d = x.gcd(&y);
        prop_assert!(d.divides(&x) && d.divides(&y));
        prop_assert!(g.divides(&d));
        prop_assert_eq!(d.lead().cloned(), Some(int(1)));
    }

    #[test]
    fn ratfun_canonical(n in poly(), d in nonzero_poly(), g in nonzero_poly()) {
        let f = RatFun::new(n.clone(), d.clone()).unwrap();
        prop_assert_eq!(&RatFun::new(&n * &g, &d * &g).unwrap(), &f);
        prop_assert_eq!(f.den().lead().cloned(), Some(int(1)));
        prop_assert!(f.num().gcd(f.den()).is_one());
    }

    #[test]
    fn ratfun_field_axioms(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        if !b.is_zero() {
            prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a);
        }
    }

    #[test]
    fn solver_multiplies_back(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a: Vec<Vec<RatFun>> = (0..5)
            .map(|_| (0..5).map(|_| RatFun::from_poly(random_poly(&mut r, 2, 4))).collect())
            .collect();
        let rhs: Vec<RatFun> = (0..5).map(|_| RatFun::from_poly(random_poly(&mut r, 1, 4))).collect();
        if let Ok(x) = solve_linear_system(&a, &rhs) {
            for (row, b) in a.iter().zip(&rhs) {
                let lhs = RatFun::sum(&row.iter().zip(&x).map(|(p, q)| p * q).collect::<Vec<_>>());
                prop_assert_eq!(&lhs, b);
            }
        }
    }

    #[test]
    fn shift_commutes_past_coefficients(c in ratfun(), s in -3i64..=3) {
        let e = OreOp::monomial(Var::K, RatFun::one(), s);
        let lhs = e.try_mul(&OreOp::constant(Var::K, c.clone())).unwrap();
        prop_assert_eq!(lhs, OreOp::monomial(Var::K, c.shift_by(s), s));
    }

    #[test]
    fn ore_ring_axioms(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b, c) = (random_k_op(&mut r, -1, 2, 2), random_k_op(&mut r, 0, 1, 2), random_k_op(&mut r, -1, 1, 1));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&b + &c) * &a, &(&b * &a) + &(&c * &a));
    }

    #[test]
    fn right_division(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (ha, hb) = (r.gen_range(0..=4), r.gen_range(0..=2));
        let a = random_k_op(&mut r, 0, ha, 2);
        let b = random_k_op(&mut r, 0, hb, 2);
        let (q, rem) = a.rdivrem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &rem, a);
        prop_assert!(rem.is_zero() || rem.order() < b.order());
    }

    #[test]
    fn gcrd_recovers_common_factor(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_k_op(&mut r, 0, 1, 1).monic();
        let (ha, hb) = (r.gen_range(0..=2), r.gen_range(0..=2));
        let a = &random_k_op(&mut r, 0, ha, 1) * &g;
        let b = &random_k_op(&mut r, 0, hb, 1) * &g;
        let d = gcrd(&[a.clone(), b.clone()]).unwrap();
        prop_assert!(a.right_divisible_by(&d).unwrap());
        prop_assert!(b.right_divisible_by(&d).unwrap());
        prop_assert!(d.right_divisible_by(&g).unwrap());
        prop_assert!(d.leading_coeff().unwrap().is_one());
    }

    #[test]
    fn basis_axioms(seed in any::<u64>(), m in 1usize..=3) {
        let spec = random_spec(&mut rng(seed), m, 3);
        for n in 0..=30 {
            let p = basis_poly(&spec, n);
            prop_assert_eq!(p.degree(), Some(n));
            let mut unit = vec![int(0); n + 1];
            unit[n] = int(1);
            prop_assert_eq!(expand_in_basis(&spec, &p), unit);
        }
    }

    #[test]
    fn expand_round_trip(seed in any::<u64>(), m in 1usize..=3) {
        let mut r = rng(seed);
        let spec = random_spec(&mut r, m, 3);
        let degree = r.gen_range(0..=8);
        let p = random_rational_poly(&mut r, degree);
        let c = expand_in_basis(&spec, &p);
        let back = c.iter().enumerate().fold(Poly::zero(), |acc, (i, ci)| &acc + &basis_poly(&spec, i).scale(ci));
        prop_assert_eq!(back, p);
    }

    #[test]
    fn expansion_tables_match_basis(seed in any::<u64>(), m in 1usize..=2) {
        let spec = random_spec(&mut rng(seed), m, 3);
        let table = ExpansionTable::compute(&spec).unwrap();
        let report = check_compatibility(&table, 12).unwrap();
        prop_assert!(report.passed(), "{:?}", report.first_failure());
    }

    #[test]
    fn operator_matrix_is_multiplicative_at_m1(seed in any::<u64>()) {
        let mut r = rng(seed);
        let spec = random_spec(&mut r, 1, 3);
        let reducer = Reducer::new(&spec).unwrap();
        let l1 = random_input(&mut r, 2, 2, false);
        let l2 = random_input(&mut r, 2, 2, true);
        let prod = defsum::InputOperator::new(l1.op() * l2.op()).unwrap();
        let lhs = reducer.full_matrix(&prod);
        prop_assert_eq!(lhs, reducer.full_matrix(&l1).mul(&reducer.full_matrix(&l2)));
    }

    #[test]
    fn sections_interlace(values in prop::collection::vec(-50i64..50, 0..40), m in 1usize..=4) {
        let c = Sequence::from_ints(&values);
        let parts: Vec<Sequence> = (0..m).map(|j| msection(&c, m, j).unwrap()).collect();
        prop_assert_eq!(interlace(&parts), c.clone());
        for (j, p) in parts.iter().enumerate() {
            for (k, v) in p.values().iter().enumerate() {
                prop_assert_eq!(Some(v.clone()), c.get((m * k + j) as i64));
            }
        }
    }

    #[test]
    fn print_parse_round_trip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let l = random_input(&mut r, 3, 3, true);
        let text = to_text(l.op());
        prop_assert_eq!(&parse_operator(&text).unwrap(), &l);
        let den = &random_poly(&mut r, 1, 3) + &Poly::var().pow(2);
        let k = random_k_op(&mut r, -2, 2, 2).scale(&RatFun::new(Poly::one(), den).unwrap());
        prop_assert_eq!(parse_ore(&to_text(&k), Var::K).unwrap(), k);
    }
}

#[test]
fn unit_perturbation_changes_sum() {
    let spec = BasisSpec::from_ints(&[1], &[0]).unwrap();
    let kernel = defsum::KernelSpec::new(spec);
    let h = Sequence::from_ints(&[1, 2, 3]);
    let bumped = h.perturbed(1, &BigRat::from_integer(1.into()));
    let a = defsum::oracle::eval_sum(&kernel, &h, 2, None).unwrap();
    let b = defsum::oracle::eval_sum(&kernel, &bumped, 2, None).unwrap();
    assert!(!(a - b).is_zero());
}
