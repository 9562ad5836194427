//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ArithError, BigRat, RatFun};

/// A dense polynomial `c_0 + c_1 v + ... + c_d v^d`.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    /// The indeterminate `v`.
    pub fn var() -> Self {
        Poly { coeffs: vec![BigRat::zero(), BigRat::one()] }
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `v + c`
    pub fn linear(slope: BigRat, intercept: BigRat) -> Self {
        Self::from_coeffs(vec![intercept, slope])
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigRat::from_integer(c.into())).collect())
    }

    /// `c v^d`
    pub fn monomial(c: BigRat, d: usize) -> Self {
        let mut coeffs = vec![BigRat::zero(); d];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigRat {
        self.coeffs.get(d).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&BigRat> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigRat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            None => Poly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly), ArithError> {
        let dd = divisor.degree().ok_or(ArithError::DivisionByZero)?;
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&nd| nd >= dd) else {
            return Ok((Poly::zero(), self.clone()));
        };
        let mut quot = vec![BigRat::zero(); nd - dd + 1];
        for shift in (0..=nd - dd).rev() {
            let c = &rem[shift + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &c * dc;
            }
            quot[shift] = c;
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly, ArithError> {
        let dd = divisor.degree().ok_or(ArithError::DivisionByZero)?;
        if dd == 0 {
            return Ok(self.scale(&divisor.coeffs[0].recip()));
        }
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        // a primitive divisor leaves an integral quotient (Gauss's lemma)
        let (dn, mut rem) = self.scaled_integers();
        let (content, prim) = divisor.primitive_part();
        let b: Vec<BigInt> = prim.coeffs.iter().map(|c| c.numer().clone()).collect();
        let lb = &b[dd];
        if rem.len() <= dd {
            return Err(ArithError::NotDivisible);
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + dd];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lb);
            if !r.is_zero() {
                return Err(ArithError::NotDivisible);
            }
            for (i, x) in b.iter().enumerate() {
                rem[shift + i] -= &c * x;
            }
            quot[shift] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(ArithError::NotDivisible);
        }
        let scale = BigRat::new(content.denom().clone(), dn * content.numer());
        Ok(Poly::from_coeffs(quot.into_iter().map(|q| BigRat::from_integer(q) * &scale).collect()))
    }

    pub fn divides(&self, other: &Poly) -> bool {
        matches!(other.div_rem(self), Ok((_, r)) if r.is_zero())
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Poly::one();
        }
        // primitive remainder sequence over Z
        let mut a = self.integer_primitive();
        let mut b = other.integer_primitive();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while b.len() > 1 {
            let r = pseudo_remainder(&a, &b);
            a = b;
            b = r;
        }
        if b.is_empty() {
            Poly::from_coeffs(a.into_iter().map(BigRat::from_integer).collect()).monic()
        } else {
            Poly::one()
        }
    }

    /// `(d, n)` with `self = n / d` and `n` integral.
    fn scaled_integers(&self) -> (BigInt, Vec<BigInt>) {
        let d = self.coeffs.iter().fold(BigInt::one(), |acc, c| if c.denom().is_one() { acc } else { acc.lcm(c.denom()) });
        let n = self
            .coeffs
            .iter()
            .map(|c| if c.denom() == &d { c.numer().clone() } else { c.numer() * (&d / c.denom()) })
            .collect();
        (d, n)
    }

    fn integer_primitive(&self) -> Vec<BigInt> {
        let (_, prim) = self.primitive_part();
        prim.coeffs.into_iter().map(|c| c.numer().clone()).collect()
    }

    pub fn eval(&self, at: &BigRat) -> BigRat {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRat::zero(), |acc, c| acc * at + c)
    }

    /// Substitutes a rational function for the variable.
    pub fn eval_ratfun(&self, at: &RatFun) -> RatFun {
        self.coeffs.iter().rev().fold(RatFun::zero(), |acc, c| {
            &(&acc * at) + &RatFun::constant(c.clone())
        })
    }

    /// `p(v) -> p(v + by)`, by Horner's rule in the shifted variable.
    pub fn shift(&self, by: &BigRat) -> Poly {
        if by.is_zero() || self.is_constant() {
            return self.clone();
        }
        let step = Poly::linear(BigRat::one(), by.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * &step) + &Poly::constant(c.clone()))
    }

    pub fn derivative(&self) -> Poly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRat::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Splits `self = content * primitive` where `primitive` has coprime
    /// integer coefficients and a positive leading coefficient.
    pub fn primitive_part(&self) -> (BigRat, Poly) {
        if self.is_zero() {
            return (BigRat::zero(), Poly::zero());
        }
        let (d, n) = self.scaled_integers();
        let mut g = n.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if n.last().is_some_and(Signed::is_negative) {
            g = -g;
        }
        let prim = Poly { coeffs: n.into_iter().map(|c| BigRat::from_integer(c / &g)).collect() };
        (BigRat::new(g, d), prim)
    }

    /// Renders with the given variable name, e.g. `2*k^2-k+1/2`.
    pub fn display_with<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, var }
    }
}

struct PolyDisplay<'a> {
    poly: &'a Poly,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            first = false;
            let abs = c.abs();
            match d {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    f.write_str(self.var)?;
                    if d > 1 {
                        write!(f, "^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.display_with("v"))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs(
            (0..n)
                .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) | (None, Some(a)) => a.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        // schoolbook product over Z, normalizing each coefficient once
        let (da, a) = self.scaled_integers();
        let (db, b) = rhs.scaled_integers();
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        let d = da * db;
        if d.is_one() {
            return Poly { coeffs: out.into_iter().map(BigRat::from_integer).collect() };
        }
        Poly::from_coeffs(out.into_iter().map(|c| BigRat::new(c, d.clone())).collect())
    }
}

/// Primitive part of the pseudo-remainder of `a` by `b` (both nonzero,
/// `deg a >= deg b`), with trailing zeros removed.
fn pseudo_remainder(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let lb = b.last().expect("nonzero divisor");
    let mut r = a.to_vec();
    while r.len() >= b.len() {
        let lr = r.pop().expect("nonempty");
        let shift = r.len() + 1 - b.len();
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (i, c) in b[..b.len() - 1].iter().enumerate() {
            r[shift + i] -= &lr * c;
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    let g = r.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for x in r.iter_mut() {
            *x /= &g;
        }
    }
    r
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(Poly, Add add, Sub sub, Mul mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRat {
        BigRat::new(n.into(), d.into())
    }

    #[test]
    fn gcd_of_common_factor() {
        let a = Poly::from_ints(&[-1, 0, 1]);
        let b = Poly::from_ints(&[1, 1]);
        assert_eq!(a.gcd(&b), Poly::from_ints(&[1, 1]));
        assert_eq!(Poly::zero().gcd(&Poly::zero()), Poly::zero());
        assert_eq!(Poly::from_ints(&[0, 3]).gcd(&Poly::zero()), Poly::var());
    }

    #[test]
    fn divrem_forced_by_degree() {
        let (q, r) = Poly::from_ints(&[1, 0, 1]).div_rem(&Poly::var()).unwrap();
        assert_eq!(q, Poly::var());
        assert_eq!(r, Poly::one());
        assert_eq!(Poly::one().div_rem(&Poly::zero()), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn eval_and_shift() {
        assert_eq!(Poly::from_ints(&[0, 0, 1]).eval(&r(3, 1)), r(9, 1));
        assert_eq!(Poly::zero().eval(&r(7, 3)), r(0, 1));
        // (v+1)^2 shifted by 2 is (v+3)^2
        let p = Poly::from_ints(&[1, 2, 1]);
        assert_eq!(p.shift(&r(2, 1)), Poly::from_ints(&[9, 6, 1]));
        assert_eq!(p.shift(&r(2, 1)).shift(&r(-2, 1)), p);
    }

    #[test]
    fn primitive_part_clears_denominators() {
        let p = Poly::from_coeffs(vec![r(-1, 4), r(-1, 2)]);
        let (c, prim) = p.primitive_part();
        assert_eq!(c, r(-1, 4));
        assert_eq!(prim, Poly::from_ints(&[1, 2]));
    }

    #[test]
    fn display() {
        let p = Poly::from_coeffs(vec![r(1, 2), r(-1, 1), r(0, 1), r(2, 1)]);
        assert_eq!(p.display_with("k").to_string(), "2*k^3-k+1/2");
        assert_eq!(Poly::from_ints(&[0, -1]).display_with("n").to_string(), "-n");
    }
}
