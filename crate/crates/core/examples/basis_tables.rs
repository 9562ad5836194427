//! Shift and multiplication tables of a two-factor binomial basis.
use defsum::basis::check_compatibility;
use defsum::{BasisSpec, ExpansionTable};

fn main() {
    let spec = BasisSpec::from_ints(&[1, 2], &[0, 1]).unwrap();
    let table = ExpansionTable::compute(&spec).unwrap();
    println!("basis C(n,k) C(2n+1,k), bandwidth {}", spec.bandwidth());
    for (j, row) in table.shift().iter().enumerate() {
        for (i, alpha) in row.iter().enumerate() {
            println!("  alpha[{j}][{i}] = {}", alpha.display_with("k"));
        }
    }
    for (j, (diag, up)) in table.x().iter().enumerate() {
        println!("  x P_{j}: diag {}, up {}", diag.display_with("k"), up.display_with("k"));
    }
    let report = check_compatibility(&table, 20).unwrap();
    println!("tables agree with the basis up to n = 20: {}", report.passed());
}
