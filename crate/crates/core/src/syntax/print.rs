use serde_json::{json, Value};

use crate::arith::{is_sum, rat_string, split_fraction, Poly, RatFun};
use crate::ore::OreOp;

fn e_power(e: i64) -> Option<String> {
    match e {
        0 => None,
        1 => Some("E".into()),
        e if e > 1 => Some(format!("E^{e}")),
        e => Some(format!("E^({e})")),
    }
}

/// One term without its sign, plus whether it is negative.
fn term_text(e: i64, c: &RatFun, var: &str) -> (bool, String) {
    let (neg, numer, denom) = split_fraction(c, var);
    let ep = e_power(e);
    if c.is_polynomial() && denom.is_some() {
        // keep polynomial coefficients inside the input grammar: `1/2*(n+1)`
        let (content, prim) = c.num().primitive_part();
        let content = if neg { -content } else { content };
        let ptext = prim.display_with(var).to_string();
        let mut coeff = content.to_string();
        if !prim.is_one() {
            coeff = if is_sum(&ptext) { format!("{coeff}*({ptext})") } else { format!("{coeff}*{ptext}") };
        }
        if let Some(p) = ep {
            coeff = format!("{coeff}*{p}");
        }
        return (neg, coeff);
    }
    let coeff = match (&denom, &ep) {
        (None, Some(_)) if numer == "1" => String::new(),
        (None, _) if is_sum(&numer) && (ep.is_some() || neg) => format!("({numer})"),
        (None, _) => numer,
        (Some(d), _) => format!("{numer}/{d}"),
    };
    let text = match (coeff.is_empty(), ep) {
        (_, None) => coeff,
        (true, Some(p)) => p,
        (false, Some(p)) => format!("{coeff}*{p}"),
    };
    (neg, text)
}

/// Plain text in descending powers of `E`, readable back by the relaxed parser.
pub fn to_text(op: &OreOp) -> String {
    let var = op.var().name();
    let mut out = String::new();
    for (i, (e, c)) in op.terms().rev().enumerate() {
        let (neg, t) = term_text(e, c, var);
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&t);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn poly_json(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(|c| Value::String(rat_string(c))).collect())
}

/// Coefficient as `{"num": [...], "den": [...]}` with ascending rational
/// coefficients in `p/q` form.
pub fn ratfun_json(c: &RatFun) -> Value {
    json!({ "num": poly_json(c.num()), "den": poly_json(c.den()) })
}

/// Structured form: the variable, the text rendering, and one entry per
/// nonzero term in descending powers of `E`.
pub fn to_json(op: &OreOp) -> Value {
    let terms: Vec<Value> = op
        .terms()
        .rev()
        .map(|(e, c)| {
            let mut v = ratfun_json(c);
            v["exp"] = json!(e);
            v
        })
        .collect();
    json!({ "var": op.var().name(), "text": to_text(op), "terms": terms })
}

fn latex_product(s: &str) -> String {
    s.replace('*', " ")
}

/// LaTeX-like rendering with `\frac` coefficients and `E^{e}` powers.
pub fn to_latex(op: &OreOp) -> String {
    let var = op.var().name();
    let mut out = String::new();
    for (i, (e, c)) in op.terms().rev().enumerate() {
        let (neg, numer, denom) = split_fraction(c, var);
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let coeff = match denom {
            Some(d) => {
                let strip = |s: &str| {
                    let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
                    latex_product(s)
                };
                format!("\\frac{{{}}}{{{}}}", strip(&numer), strip(&d))
            }
            None if e != 0 && numer == "1" => String::new(),
            None if (e != 0 || neg) && is_sum(&numer) => format!("({})", latex_product(&numer)),
            None => latex_product(&numer),
        };
        out.push_str(&coeff);
        match e {
            0 => {}
            1 => out.push_str(if coeff.is_empty() { "E" } else { " E" }),
            e => {
                if !coeff.is_empty() {
                    out.push(' ');
                }
                out.push_str(&format!("E^{{{e}}}"));
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::ore::Var;

    fn k_op(terms: Vec<(i64, RatFun)>) -> OreOp {
        OreOp::from_terms(Var::K, terms)
    }

    #[test]
    fn text_forms() {
        let c = RatFun::new(Poly::from_ints(&[-1, -1]), Poly::from_ints(&[2, 4])).unwrap();
        let l = k_op(vec![(1, RatFun::one()), (0, c)]);
        assert_eq!(to_text(&l), "E - (k+1)/(2*(2*k+1))");
        assert_eq!(to_latex(&l), "E - \\frac{k+1}{2 (2 k+1)}");
        let m = k_op(vec![(-1, RatFun::var()), (0, RatFun::var())]);
        assert_eq!(to_text(&m), "k + k*E^(-1)");
        let p = OreOp::from_terms(
            Var::N,
            [(1, RatFun::from_poly(Poly::from_ints(&[1, 1]))), (0, RatFun::from_int(-2))],
        );
        assert_eq!(to_text(&p), "(n+1)*E - 2");
        assert_eq!(to_latex(&p), "(n+1) E - 2");
        assert_eq!(to_text(&OreOp::zero(Var::K)), "0");
        let q = OreOp::from_terms(Var::K, [(1, RatFun::one()), (0, RatFun::from_poly(Poly::from_ints(&[-1, -1])))]);
        assert_eq!(to_text(&q), "E - (k+1)");
        assert_eq!(to_text(&-q), "-E + k+1");
        let half = OreOp::from_terms(Var::N, [(1, RatFun::from_poly(Poly::from_coeffs(vec![rat(1, 2), rat(1, 2)])))]);
        assert_eq!(to_text(&half), "1/2*(n+1)*E");
        assert_eq!(to_text(&-half), "-1/2*(n+1)*E");
        assert_eq!(to_text(&OreOp::constant(Var::N, RatFun::constant(rat(-3, 4)))), "-3/4");
        assert_eq!(to_text(&k_op(vec![(2, RatFun::from_int(-1))])), "-E^2");
    }

    #[test]
    fn json_form() {
        let l = k_op(vec![(1, RatFun::one()), (0, RatFun::from_int(-2))]);
        let v = to_json(&l);
        assert_eq!(v["var"], "k");
        assert_eq!(v["terms"][0]["exp"], 1);
        assert_eq!(v["terms"][1]["num"][0], "-2/1");
        assert_eq!(v["terms"][1]["den"][0], "1/1");
    }
}
