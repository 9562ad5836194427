//! The operator matrix of L for a bandwidth-2 basis, and its multiplicativity.
use defsum::{parse_operator, BasisSpec, Reducer};

fn main() {
    let spec = BasisSpec::from_ints(&[1, 1], &[0, 0]).unwrap();
    let reducer = Reducer::new(&spec).unwrap();
    println!("[E] =");
    for row in reducer.re().rows() {
        println!("  {}", row.iter().map(ToString::to_string).collect::<Vec<_>>().join(" | "));
    }
    let l1 = parse_operator("E - n").unwrap();
    let l2 = parse_operator("(n+1)*E + 2").unwrap();
    let l12 = parse_operator(&format!("{}", l1.op().try_mul(l2.op()).unwrap())).unwrap();
    let direct = reducer.full_matrix(&l12);
    let product = reducer.full_matrix(&l1).mul(&reducer.full_matrix(&l2));
    for (i, row) in direct.rows().iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            println!("L1 L2 [{i},{j}] = {c}");
        }
    }
    println!("[L1 L2] = [L1][L2]: {}", direct == product);
}
