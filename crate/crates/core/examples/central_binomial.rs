//! C(2n, n) = sum_k C(n, k)^2: reduce, unroll and verify.
use defsum::arith::int;
use defsum::{parse_operator, reduce_first_column, unroll, verify_solution, BasisSpec, KernelSpec};

fn main() {
    let l = parse_operator("(n+1)*E - 2*(2*n+1)").unwrap();
    let basis = BasisSpec::from_ints(&[1, 1], &[0, 0]).unwrap();
    let r = reduce_first_column(&l, &basis).unwrap();
    println!("L  = {}", l.op());
    println!("L' = {}", r.lprime);

    let kernel = KernelSpec::new(basis);
    let nmax = 12;
    let len = kernel.required_prefix(nmax + l.order() as u64).unwrap();
    let h = unroll(&r.lprime, &[int(1)], len - 1).unwrap();
    let report = verify_solution(&l, &kernel, &h, nmax, None).unwrap();
    let y: Vec<String> = report.y.iter().map(ToString::to_string).collect();
    println!("y = {}", y.join(", "));
    println!("L y = 0 for n <= {nmax}: {}", report.passed());
}
