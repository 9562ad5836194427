//! Laurent recurrence operators `sum_i a_i(v) E^i` over `Q(v)`, with the
//! commutation rule `E a(v) = a(v+1) E`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::{ArithError, BigRat, RatFun};
use crate::oracle::Sequence;

/// The name of the operator's variable. `N` is the input-side variable
/// (also written `x`), `K` the summation index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    N,
    K,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::N => "n",
            Var::K => "k",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OreError {
    #[error("variable mismatch: {0} vs {1}")]
    VarMismatch(Var, Var),
    #[error("division by the zero operator")]
    ZeroDivisor,
    #[error("operator has negative exponent E^{low}; clear it first")]
    NegativeExponent { low: i64 },
    #[error("coefficient of E^{exponent} has a pole at {point}")]
    Pole { exponent: i64, point: i64 },
    #[error("sequence value at index {index} is not available")]
    MissingValue { index: i64 },
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// A skew Laurent polynomial with coefficients on the left.
///
/// Zero coefficients are never stored; the zero operator has no terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OreOp {
    var: Var,
    terms: BTreeMap<i64, RatFun>,
}

impl OreOp {
    pub fn zero(var: Var) -> Self {
        OreOp { var, terms: BTreeMap::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, RatFun::one())
    }

    /// The shift `E`.
    pub fn shift(var: Var) -> Self {
        Self::monomial(var, RatFun::one(), 1)
    }

    pub fn constant(var: Var, c: RatFun) -> Self {
        Self::monomial(var, c, 0)
    }

    /// `c(v) E^exp`
    pub fn monomial(var: Var, c: RatFun, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        OreOp { var, terms }
    }

    pub fn from_terms(var: Var, terms: impl IntoIterator<Item = (i64, RatFun)>) -> Self {
        let mut op = OreOp::zero(var);
        for (e, c) in terms {
            op.add_term(e, &c);
        }
        op
    }

    fn add_term(&mut self, exp: i64, c: &RatFun) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(old) => {
                let sum = &*old + c;
                if sum.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(exp, c.clone());
            }
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Same operator, renamed variable.
    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    /// Terms in ascending order of exponent.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &RatFun)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> Option<&RatFun> {
        self.terms.get(&exp)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(RatFun::is_one)
    }

    /// Highest exponent; `None` for the zero operator.
    pub fn order(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent; `None` for the zero operator.
    pub fn low(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// `order - low`, the number of shifts spanned.
    pub fn span(&self) -> Option<i64> {
        Some(self.order()? - self.low()?)
    }

    pub fn leading_coeff(&self) -> Option<&RatFun> {
        self.terms.values().next_back()
    }

    pub fn has_polynomial_coeffs(&self) -> bool {
        self.terms.values().all(RatFun::is_polynomial)
    }

    fn check_var(&self, other: &OreOp) -> Result<(), OreError> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(OreError::VarMismatch(self.var, other.var))
        }
    }

    pub fn try_add(&self, other: &OreOp) -> Result<OreOp, OreError> {
        self.check_var(other)?;
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &OreOp) -> Result<OreOp, OreError> {
        self.try_add(&-other)
    }

    /// Left multiplication by a function: `c(v) * self`.
    pub fn scale(&self, c: &RatFun) -> OreOp {
        if c.is_zero() {
            return OreOp::zero(self.var);
        }
        OreOp {
            var: self.var,
            terms: self.terms.iter().map(|(&e, a)| (e, c * a)).collect(),
        }
    }

    pub fn try_mul(&self, other: &OreOp) -> Result<OreOp, OreError> {
        self.check_var(other)?;
        Ok(OreOp::sum_of_products(self.var, [(self, other)]))
    }

    /// `sum_t a_t * b_t`, with all contributions to one power of `E`
    /// added over a common denominator.
    pub fn sum_of_products<'a>(var: Var, pairs: impl IntoIterator<Item = (&'a OreOp, &'a OreOp)>) -> OreOp {
        let mut parts: BTreeMap<i64, Vec<RatFun>> = BTreeMap::new();
        for (a, b) in pairs {
            assert!(a.var == var && b.var == var, "operators in different variables");
            for (&i, x) in &a.terms {
                for (&j, y) in &b.terms {
                    parts.entry(i + j).or_default().push(x * &y.shift_by(i));
                }
            }
        }
        let terms = parts
            .into_iter()
            .map(|(e, cs)| (e, RatFun::sum(&cs)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        OreOp { var, terms }
    }

    /// `E^s * self`.
    pub fn left_shift(&self, s: i64) -> OreOp {
        OreOp {
            var: self.var,
            terms: self.terms.iter().map(|(&e, a)| (e + s, a.shift_by(s))).collect(),
        }
    }

    /// Left-multiplies by `E^s` with `s = max(0, -low)`; returns the
    /// operator and `s`.
    pub fn clear_negative_with_shift(&self) -> (OreOp, i64) {
        match self.low() {
            Some(low) if low < 0 => (self.left_shift(-low), -low),
            _ => (self.clone(), 0),
        }
    }

    pub fn clear_negative(&self) -> OreOp {
        self.clear_negative_with_shift().0
    }

    /// Normalizes the leading coefficient to 1 by left division.
    pub fn monic(&self) -> OreOp {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("stored coefficients are nonzero")),
        }
    }

    /// `(sum_i a_i(at) c_{at+i})`.
    pub fn apply(&self, c: &Sequence, at: i64) -> Result<BigRat, OreError> {
        let mut acc = BigRat::from_integer(0.into());
        for (&i, a) in &self.terms {
            let index = at + i;
            let value = c.get(index).ok_or(OreError::MissingValue { index })?;
            let coef = a
                .eval_int(at)
                .map_err(|_| OreError::Pole { exponent: i, point: at })?;
            acc += coef * value;
        }
        Ok(acc)
    }

    /// Right division: `self = q * divisor + r` with `ord r < ord divisor`.
    pub fn rdivrem(&self, divisor: &OreOp) -> Result<(OreOp, OreOp), OreError> {
        self.check_var(divisor)?;
        let dord = divisor.order().ok_or(OreError::ZeroDivisor)?;
        for op in [self, divisor] {
            if let Some(low) = op.low().filter(|&l| l < 0) {
                return Err(OreError::NegativeExponent { low });
            }
        }
        let dlead = divisor.leading_coeff().expect("nonzero divisor");
        let mut quot = OreOp::zero(self.var);
        let mut rem = self.clone();
        while let Some(rord) = rem.order().filter(|&o| o >= dord) {
            let s = rord - dord;
            let c = rem
                .leading_coeff()
                .expect("nonzero")
                .checked_div(&dlead.shift_by(s))?;
            let t = OreOp::monomial(self.var, c, s);
            rem = rem.try_sub(&t.try_mul(divisor)?)?;
            quot.add_term(s, t.coeff(s).expect("nonzero"));
        }
        Ok((quot, rem))
    }

    /// Right-divisibility test: `self = q * divisor` for some `q`.
    pub fn right_divisible_by(&self, divisor: &OreOp) -> Result<bool, OreError> {
        Ok(self.rdivrem(divisor)?.1.is_zero())
    }
}

/// Monic greatest common right divisor of two operators with `low >= 0`.
fn gcrd_pair(a: &OreOp, b: &OreOp) -> Result<OreOp, OreError> {
    let mut a = a.monic();
    let mut b = b.monic();
    while !b.is_zero() {
        let (_, r) = a.rdivrem(&b)?;
        a = b;
        b = r.monic();
    }
    Ok(a)
}

/// Greatest common right divisor of a list of operators.
///
/// Zero operators are skipped and operators with negative exponents are
/// first cleared by a power of `E` on the left. Returns the zero operator
/// when every input is zero, and the unit `1` as soon as an intermediate
/// result reaches order 0.
pub fn gcrd(ops: &[OreOp]) -> Result<OreOp, OreError> {
    let var = match ops.first() {
        Some(op) => op.var,
        None => return Ok(OreOp::zero(Var::K)),
    };
    let mut acc: Option<OreOp> = None;
    for op in ops {
        if op.var != var {
            return Err(OreError::VarMismatch(var, op.var));
        }
        if op.is_zero() {
            continue;
        }
        let op = op.clear_negative();
        let g = match acc {
            None => op.monic(),
            Some(prev) => gcrd_pair(&prev, &op)?,
        };
        if g.order() == Some(0) {
            return Ok(OreOp::one(var));
        }
        acc = Some(g);
    }
    Ok(acc.unwrap_or_else(|| OreOp::zero(var)))
}

impl fmt::Debug for OreOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OreOp[{}]({})", self.var, crate::syntax::to_text(self))
    }
}

impl fmt::Display for OreOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::syntax::to_text(self))
    }
}

impl Add for &OreOp {
    type Output = OreOp;
    fn add(self, rhs: &OreOp) -> OreOp {
        self.try_add(rhs).expect("operator variables must agree")
    }
}

impl Sub for &OreOp {
    type Output = OreOp;
    fn sub(self, rhs: &OreOp) -> OreOp {
        self.try_sub(rhs).expect("operator variables must agree")
    }
}

impl Mul for &OreOp {
    type Output = OreOp;
    fn mul(self, rhs: &OreOp) -> OreOp {
        self.try_mul(rhs).expect("operator variables must agree")
    }
}

impl Neg for &OreOp {
    type Output = OreOp;
    fn neg(self) -> OreOp {
        OreOp {
            var: self.var,
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

crate::arith::forward_owned!(OreOp, Add add, Sub sub, Mul mul);

impl Neg for OreOp {
    type Output = OreOp;
    fn neg(self) -> OreOp {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, Poly};

    fn var_k() -> RatFun {
        RatFun::var()
    }

    fn lin(a: i64, b: i64) -> RatFun {
        RatFun::from_poly(Poly::from_ints(&[b, a]))
    }

    fn c(v: i64) -> OreOp {
        OreOp::constant(Var::K, RatFun::from_int(v))
    }

    fn e() -> OreOp {
        OreOp::shift(Var::K)
    }

    #[test]
    fn add_neg_scale() {
        let a = &e() + &c(1);
        assert_eq!(&a + &c(-1), e());
        assert!((&a + &(-&a)).is_zero());
        let scaled = (&e() - &c(1)).scale(&lin(1, 1));
        let expected = OreOp::from_terms(Var::K, [(1, lin(1, 1)), (0, lin(-1, -1))]);
        assert_eq!(scaled, expected);
        assert_eq!(
            e().try_add(&OreOp::shift(Var::N)),
            Err(OreError::VarMismatch(Var::K, Var::N))
        );
    }

    #[test]
    fn commutation() {
        let n = OreOp::constant(Var::K, var_k());
        assert_eq!(&e() * &n, OreOp::monomial(Var::K, lin(1, 1), 1));
        let p = &(&e() - &c(1)) * &(&e() + &c(1));
        assert_eq!(p, &(&e() * &e()) - &c(1));
    }

    #[test]
    fn apply_to_sequences() {
        let ones = Sequence::from_fn(10, |_| int(1));
        assert_eq!((&e() + &c(1)).apply(&ones, 5).unwrap(), int(2));
        assert_eq!(OreOp::zero(Var::K).apply(&ones, 3).unwrap(), int(0));
        let inv = OreOp::monomial(Var::K, RatFun::one(), -1);
        // reads below zero are 0
        assert_eq!(inv.apply(&ones, 0).unwrap(), int(0));
        let pole = OreOp::constant(Var::K, RatFun::new(Poly::one(), Poly::var()).unwrap());
        assert_eq!(pole.apply(&ones, 0), Err(OreError::Pole { exponent: 0, point: 0 }));
    }

    #[test]
    fn clear_negative_shifts_left() {
        // n (E^-1 + 1) -> (n+1) + (n+1) E
        let op = OreOp::from_terms(Var::K, [(-1, var_k()), (0, var_k())]);
        let (cleared, s) = op.clear_negative_with_shift();
        assert_eq!(s, 1);
        assert_eq!(cleared, OreOp::from_terms(Var::K, [(0, lin(1, 1)), (1, lin(1, 1))]));
        let plain = &e() - &c(1);
        assert_eq!(plain.clear_negative(), plain);
    }

    #[test]
    fn right_division() {
        let a = &(&e() * &e()) - &c(1);
        let b = &e() - &c(1);
        let (q, r) = a.rdivrem(&b).unwrap();
        assert_eq!(q, &e() + &c(1));
        assert!(r.is_zero());
        assert_eq!(b.rdivrem(&b).unwrap(), (c(1), OreOp::zero(Var::K)));
        assert_eq!(a.rdivrem(&c(1)).unwrap(), (a.clone(), OreOp::zero(Var::K)));
        assert_eq!(a.rdivrem(&OreOp::zero(Var::K)), Err(OreError::ZeroDivisor));
    }

    #[test]
    fn gcrd_of_scaled_copies() {
        let base = (&e() - &c(1)).scale(&lin(1, 1));
        let other = base.scale(&RatFun::from_int(3));
        assert_eq!(gcrd(&[base.clone(), other]).unwrap(), &e() - &c(1));
        assert_eq!(gcrd(&[base.clone(), base.clone()]).unwrap(), base.monic());
        assert!(gcrd(&[OreOp::zero(Var::K)]).unwrap().is_zero());
        // coprime: E - 1 and E - 2 give the unit
        assert!(gcrd(&[&e() - &c(1), &e() - &c(2)]).unwrap().is_one());
    }
}
