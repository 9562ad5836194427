//! A second-order recurrence reduced over C(n,k)^2, including the sections of L'.
use defsum::{parse_operator, reduce_first_column, BasisSpec};

fn main() {
    let l = parse_operator(
        "4*(2*n+3)^2*(4*n+3)*E^2 - 2*(4*n+5)*(20*n^2+50*n+27)*E + 9*(4*n+7)*(n+1)^2",
    )
    .unwrap();
    let basis = BasisSpec::from_ints(&[1, 1], &[0, 0]).unwrap();
    let r = reduce_first_column(&l, &basis).unwrap();
    for (i, c) in r.column.iter().enumerate() {
        println!("L[{i},0] = {c}");
    }
    println!("L' = {}", r.lprime);
    println!("primitive: {}", r.lprime_primitive());
}
