//! Reduction of `L y = 0` to a recurrence for the summand sequence `h`.
//!
//! The substitution `E -> [RE]`, `x -> [RX]`, `1 -> I_m` maps an operator
//! with polynomial coefficients to an `m x m` matrix of recurrence
//! operators in `k`. Entry `(r, j)` carries the contribution of the `j`-th
//! `m`-section of the basis coefficients to the `r`-th section of the
//! result. Sums `y_n = sum_k prod_i C(a_i n + b_i, k) h_k` only live in
//! section 0, so only the first column matters, and `L y = 0` exactly when
//! every entry of that column annihilates `h`.

use std::fmt;

use crate::arith::{BigRat, RatFun};
use crate::basis::{BasisError, BasisSpec, ExpansionTable};
use crate::ore::{gcrd, OreError, OreOp, Var};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReduceError {
    #[error("input operator is zero")]
    ZeroOperator,
    #[error("input operator must be in n, got {0}")]
    WrongVariable(Var),
    #[error("coefficient of E^{exponent} is not a polynomial; clear denominators first")]
    RationalCoefficient { exponent: i64 },
    #[error("input operator has a negative power E^{low}")]
    NegativeExponent { low: i64 },
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error(transparent)]
    Ore(#[from] OreError),
}

/// `L = sum_j p_j(n) E^j` with polynomial `p_j` and `j >= 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct InputOperator(OreOp);

impl InputOperator {
    pub fn new(op: OreOp) -> Result<Self, ReduceError> {
        if op.var() != Var::N {
            return Err(ReduceError::WrongVariable(op.var()));
        }
        if op.is_zero() {
            return Err(ReduceError::ZeroOperator);
        }
        if let Some((exponent, _)) = op.terms().find(|(_, c)| !c.is_polynomial()) {
            return Err(ReduceError::RationalCoefficient { exponent });
        }
        if let Some(low) = op.low().filter(|&l| l < 0) {
            return Err(ReduceError::NegativeExponent { low });
        }
        Ok(InputOperator(op))
    }

    pub fn op(&self) -> &OreOp {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.order().expect("nonzero") as usize
    }

    /// Evaluates `(L y)_n = sum_j p_j(n) y_{n+j}`.
    pub fn apply_at(&self, y: &[BigRat], n: usize) -> Option<BigRat> {
        self.0.terms().try_fold(BigRat::from_integer(0.into()), |acc, (j, c)| {
            let v = y.get(n + j as usize)?;
            Some(acc + c.num().eval(&BigRat::from_integer(n.into())) * v)
        })
    }
}

impl fmt::Debug for InputOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "InputOperator({})", self.0)
    }
}

impl fmt::Display for InputOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A square matrix of recurrence operators in `k`.
#[derive(Clone, PartialEq, Eq)]
pub struct OpMatrix {
    m: usize,
    entries: Vec<Vec<OreOp>>,
}

impl OpMatrix {
    pub fn zero(m: usize) -> Self {
        OpMatrix { m, entries: vec![vec![OreOp::zero(Var::K); m]; m] }
    }

    pub fn identity(m: usize) -> Self {
        let mut out = Self::zero(m);
        for i in 0..m {
            out.entries[i][i] = OreOp::one(Var::K);
        }
        out
    }

    pub fn from_entries(entries: Vec<Vec<OreOp>>) -> Self {
        let m = entries.len();
        assert!(entries.iter().all(|row| row.len() == m), "operator matrix must be square");
        OpMatrix { m, entries }
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn get(&self, r: usize, c: usize) -> &OreOp {
        &self.entries[r][c]
    }

    pub fn rows(&self) -> &[Vec<OreOp>] {
        &self.entries
    }

    pub fn column(&self, c: usize) -> Vec<OreOp> {
        self.entries.iter().map(|row| row[c].clone()).collect()
    }

    pub fn mul(&self, rhs: &OpMatrix) -> OpMatrix {
        let m = self.m;
        let entries = (0..m)
            .map(|r| {
                (0..m)
                    .map(|c| {
                        OreOp::sum_of_products(Var::K, (0..m).map(|t| (&self.entries[r][t], &rhs.entries[t][c])))
                    })
                    .collect()
            })
            .collect();
        OpMatrix { m, entries }
    }

    pub fn add(&self, rhs: &OpMatrix) -> OpMatrix {
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        OpMatrix { m: self.m, entries }
    }

    pub fn scale(&self, c: &RatFun) -> OpMatrix {
        let entries = self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| e.scale(c)).collect())
            .collect();
        OpMatrix { m: self.m, entries }
    }

    /// Matrix times a column vector of operators.
    pub fn mul_vec(&self, v: &[OreOp]) -> Vec<OreOp> {
        self.entries
            .iter()
            .map(|row| {
                OreOp::sum_of_products(Var::K, row.iter().zip(v))
            })
            .collect()
    }
}

impl fmt::Debug for OpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.entries.iter()).finish()
    }
}

/// `[RE]`: entry `(r, j)` is `sum alpha_{k+s, j, i} E^s` over the table
/// entries `i` of section `j` with `s = (r + i - j) / m` integral.
pub fn build_re(table: &ExpansionTable) -> OpMatrix {
    let m = table.spec().m();
    let mut out = OpMatrix::zero(m);
    for (j, row) in table.shift().iter().enumerate() {
        for (i, alpha) in row.iter().enumerate() {
            if alpha.is_zero() {
                continue;
            }
            let num = j as i64 - i as i64;
            let r = num.rem_euclid(m as i64);
            let s = (r - num) / m as i64;
            let term = OreOp::monomial(Var::K, alpha.shift_by(s), s);
            let entry = &mut out.entries[r as usize][j];
            *entry = &*entry + &term;
        }
    }
    out
}

/// `[RX]`: `(k - b_{j+1})/a_{j+1}` on the diagonal, `(k+1)/a_{j+1}` just
/// below it, and `(k/a_m) E^{-1}` in the top-right corner.
pub fn build_rx(spec: &BasisSpec) -> OpMatrix {
    let m = spec.m();
    let mut out = OpMatrix::zero(m);
    for (j, (diag, up)) in crate::basis::x_expansion(spec).into_iter().enumerate() {
        let add = |e: &mut OreOp, t: OreOp| *e = &*e + &t;
        add(&mut out.entries[j][j], OreOp::constant(Var::K, diag));
        // the P_{mk+j+1} term lands in section j+1, or in section 0 one step down
        let r = (j + 1) % m;
        let s = if j + 1 == m { -1 } else { 0 };
        add(&mut out.entries[r][j], OreOp::monomial(Var::K, up.shift_by(s), s));
    }
    out
}

/// Shift and multiplication matrices of a basis, ready for substitution.
#[derive(Clone, Debug)]
pub struct Reducer {
    table: ExpansionTable,
    re: OpMatrix,
    rx: OpMatrix,
}

/// Output of the first-column reduction.
#[derive(Clone, Debug)]
pub struct ReductionResult {
    /// Monic gcrd of the column entries, or zero when the column vanishes.
    pub lprime: OreOp,
    /// `L_{r,0}` for `r = 0..m`.
    pub column: Vec<OreOp>,
    /// Power of `E_k` applied on the left of each column entry before the gcrd.
    pub shifts: Vec<i64>,
    pub table: ExpansionTable,
}

impl ReductionResult {
    /// True when every column entry vanishes, so any `h` gives a solution.
    pub fn is_degenerate(&self) -> bool {
        self.lprime.is_zero()
    }

    /// `L'` with denominators cleared and integer content removed.
    pub fn lprime_primitive(&self) -> OreOp {
        primitive_form(&self.lprime)
    }
}

impl Reducer {
    pub fn new(spec: &BasisSpec) -> Result<Self, ReduceError> {
        let table = ExpansionTable::compute(spec)?;
        let re = build_re(&table);
        let rx = build_rx(spec);
        Ok(Reducer { table, re, rx })
    }

    pub fn table(&self) -> &ExpansionTable {
        &self.table
    }

    pub fn re(&self) -> &OpMatrix {
        &self.re
    }

    pub fn rx(&self) -> &OpMatrix {
        &self.rx
    }

    pub fn m(&self) -> usize {
        self.re.dim()
    }

    /// `p([RX]) w` by Horner's rule on matrix-vector products.
    fn poly_at_rx(&self, p: &crate::arith::Poly, w: &[OreOp]) -> Vec<OreOp> {
        let mut acc = vec![OreOp::zero(Var::K); w.len()];
        for c in p.coeffs().iter().rev() {
            acc = self.rx.mul_vec(&acc);
            let c = RatFun::constant(c.clone());
            for (a, wi) in acc.iter_mut().zip(w) {
                *a = &*a + &wi.scale(&c);
            }
        }
        acc
    }

    /// `[RL] e_1`, folding right to left.
    pub fn column(&self, l: &InputOperator) -> Vec<OreOp> {
        let m = self.m();
        let mut basis_vec = vec![OreOp::zero(Var::K); m];
        basis_vec[0] = OreOp::one(Var::K);
        let mut result = vec![OreOp::zero(Var::K); m];
        let mut power = basis_vec;
        let mut current = 0i64;
        for (j, c) in l.op().terms() {
            while current < j {
                power = self.re.mul_vec(&power);
                current += 1;
            }
            let contrib = self.poly_at_rx(c.num(), &power);
            for (acc, t) in result.iter_mut().zip(contrib) {
                *acc = &*acc + &t;
            }
        }
        result
    }

    pub fn reduce(&self, l: &InputOperator) -> Result<ReductionResult, ReduceError> {
        let column = self.column(l);
        let shifts = column.iter().map(|op| op.clear_negative_with_shift().1).collect();
        let lprime = gcrd(&column)?;
        Ok(ReductionResult { lprime, column, shifts, table: self.table.clone() })
    }

    /// The full matrix `[RL] = sum_j p_j([RX]) [RE]^j`.
    pub fn full_matrix(&self, l: &InputOperator) -> OpMatrix {
        let m = self.m();
        let mut result = OpMatrix::zero(m);
        let mut power = OpMatrix::identity(m);
        let mut current = 0i64;
        for (j, c) in l.op().terms() {
            while current < j {
                power = self.re.mul(&power);
                current += 1;
            }
            let mut acc = OpMatrix::zero(m);
            for coef in c.num().coeffs().iter().rev() {
                acc = self.rx.mul(&acc).add(&power.scale(&RatFun::constant(coef.clone())));
            }
            result = result.add(&acc);
        }
        result
    }
}

/// Runs the whole reduction for one operator and basis.
pub fn reduce_first_column(l: &InputOperator, spec: &BasisSpec) -> Result<ReductionResult, ReduceError> {
    Reducer::new(spec)?.reduce(l)
}

pub fn reduce_full_matrix(l: &InputOperator, spec: &BasisSpec) -> Result<OpMatrix, ReduceError> {
    Ok(Reducer::new(spec)?.full_matrix(l))
}

/// Left-multiplies by the common denominator and removes the integer
/// content, giving coprime integer polynomial coefficients with a
/// positive leading coefficient.
pub fn primitive_form(op: &OreOp) -> OreOp {
    use crate::arith::Poly;
    if op.is_zero() {
        return op.clone();
    }
    let den = op.terms().fold(Poly::one(), |acc, (_, c)| {
        let g = acc.gcd(c.den());
        &acc * &c.den().exact_div(&g).expect("gcd divides")
    });
    let cleared: Vec<(i64, Poly)> = op
        .terms()
        .map(|(e, c)| (e, c.num() * &den.exact_div(c.den()).expect("lcm is a multiple")))
        .collect();
    let all = cleared
        .iter()
        .flat_map(|(_, p)| p.coeffs().iter().cloned())
        .collect::<Vec<_>>();
    // content of the concatenated coefficients, signed by the leading one
    let (mut content, _) = Poly::from_coeffs(all).primitive_part();
    content = num_traits::Signed::abs(&content);
    if cleared.last().and_then(|(_, p)| p.lead()).is_some_and(num_traits::Signed::is_negative) {
        content = -content;
    }
    let inv = content.recip();
    OreOp::from_terms(op.var(), cleared.into_iter().map(|(e, p)| (e, RatFun::from_poly(p.scale(&inv)))))
}
