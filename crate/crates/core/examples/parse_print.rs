//! Reading operators from text and printing them as text, LaTeX and JSON.
use defsum::syntax::{parse_ore, to_json, to_latex, to_text};
use defsum::{parse_operator, Var};

fn main() {
    for text in ["(n+1)*E - 2*(2*n+1)", "E^2 - E - 1", "n^(2)*E - 1/2*n + 3/4"] {
        let l = parse_operator(text).unwrap();
        println!("{text:<24} -> {}", to_text(l.op()));
    }
    let lp = parse_ore("E - (k+1)/(2*(2*k+1))", Var::K).unwrap();
    println!("text:  {}", to_text(&lp));
    println!("latex: {}", to_latex(&lp));
    println!("json:  {}", to_json(&lp));
    for bad in ["2n + 1", "E^(-1)", "(n+1"] {
        println!("{bad:<8} -> {}", parse_operator(bad).unwrap_err());
    }
}
