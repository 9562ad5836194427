//! Reading and writing operators.

mod parse;
mod print;

pub use parse::{parse_operator, parse_ore, parse_poly, ParseError};
pub use print::{ratfun_json, to_json, to_latex, to_text};

/// Output style for operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Text,
    Latex,
}

impl Style {
    pub fn render(self, op: &crate::ore::OreOp) -> String {
        match self {
            Style::Text => to_text(op),
            Style::Latex => to_latex(op),
        }
    }
}
