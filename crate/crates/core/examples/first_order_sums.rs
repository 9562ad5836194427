//! Single-binomial sums sum_k h(k) C(n, k) for a few classical recurrences.
use defsum::arith::int;
use defsum::{parse_operator, reduce_first_column, unroll, verify_solution, BasisSpec, BigRat, KernelSpec};

fn main() {
    let basis = BasisSpec::from_ints(&[1], &[0]).unwrap();
    let kernel = KernelSpec::new(basis.clone());
    let cases: [(&str, &str, Vec<BigRat>); 4] = [
        ("3^n", "E - 3", vec![int(1)]),
        ("Fibonacci", "E^2 - E - 1", vec![int(0), int(1)]),
        ("n!", "E - (n+1)", vec![int(1), int(0)]),
        ("n+1", "E^2 - 2*E + 1", vec![int(1), int(1)]),
    ];
    for (name, text, initial) in cases {
        let l = parse_operator(text).unwrap();
        let r = reduce_first_column(&l, &basis).unwrap();
        let h = unroll(&r.lprime, &initial, 12).unwrap();
        let report = verify_solution(&l, &kernel, &h, 10, None).unwrap();
        let y: Vec<String> = report.y.iter().take(8).map(ToString::to_string).collect();
        println!("{name:>9}: L' = {:<28} y = {} ...  ok = {}", r.lprime.to_string(), y.join(", "), report.passed());
    }
}
