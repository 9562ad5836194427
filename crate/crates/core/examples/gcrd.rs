//! Greatest common right divisor of operators sharing a right factor.
use defsum::syntax::parse_ore;
use defsum::{gcrd, Var};

fn main() {
    let g = parse_ore("E - (k+1)", Var::K).unwrap();
    let a = parse_ore("E + k", Var::K).unwrap().try_mul(&g).unwrap();
    let b = parse_ore("k*E^2 - 1", Var::K).unwrap().try_mul(&g).unwrap();
    println!("A = {a}");
    println!("B = {b}");
    println!("gcrd(A, B) = {}", gcrd(&[a.clone(), b]).unwrap());
    let c = parse_ore("E - 2", Var::K).unwrap();
    println!("gcrd(A, E - 2) = {}", gcrd(&[a, c]).unwrap());
}
