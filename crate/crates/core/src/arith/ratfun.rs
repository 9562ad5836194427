//! Reduced rational functions in one variable.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::forward_owned;
use super::{ArithError, BigRat, Poly};

/// `num / den` with `gcd(num, den) = 1` and `den` monic.
///
/// The representation is canonical, so `==` is equality of functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
            }
        };
        let lc_inv = den.lead().expect("nonzero denominator").recip();
        if lc_inv.is_one() {
            RatFun { num, den }
        } else {
            RatFun { num: num.scale(&lc_inv), den: den.scale(&lc_inv) }
        }
    }

    pub fn zero() -> Self {
        RatFun { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn var() -> Self {
        Self::from_poly(Poly::var())
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRat::from_integer(c.into()))
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun { num: p, den: Poly::one() }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    /// Sum of numerator and denominator degrees; used as a size measure
    /// when choosing pivots.
    pub fn weight(&self) -> usize {
        self.num.degree().unwrap_or(0) + self.den.degree().unwrap_or(0)
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFun) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::reduce(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFun { num: self.num.scale(c), den: self.den.clone() }
    }

    /// `f(v) -> f(v + by)`.
    pub fn shift_by(&self, by: i64) -> Self {
        if by == 0 || self.is_constant() {
            return self.clone();
        }
        let by = BigRat::from_integer(by.into());
        // An integer shift keeps numerator and denominator coprime and monic.
        RatFun { num: self.num.shift(&by), den: self.den.shift(&by) }
    }

    /// Value at a point; a vanishing denominator is reported as a pole.
    pub fn eval(&self, at: &BigRat) -> Result<BigRat, ArithError> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(ArithError::Pole { at: at.clone() });
        }
        Ok(self.num.eval(at) / d)
    }

    pub fn eval_int(&self, at: i64) -> Result<BigRat, ArithError> {
        self.eval(&BigRat::from_integer(at.into()))
    }

    /// Sum over a common denominator, reduced once at the end.
    pub fn sum<'a>(items: impl IntoIterator<Item = &'a RatFun>) -> RatFun {
        let items: Vec<&RatFun> = items.into_iter().filter(|f| !f.is_zero()).collect();
        match items.len() {
            0 => return RatFun::zero(),
            1 => return items[0].clone(),
            2 => return items[0] + items[1],
            _ => {}
        }
        let mut lcm = Poly::one();
        for f in &items {
            if f.den.is_one() || f.den == lcm {
                continue;
            }
            let g = lcm.gcd(&f.den);
            lcm = &lcm * &f.den.exact_div(&g).expect("gcd divides");
        }
        let mut num = Poly::zero();
        for f in &items {
            let scaled = if f.den == lcm { f.num.clone() } else { &f.num * &lcm.exact_div(&f.den).expect("lcm") };
            num = &num + &scaled;
        }
        RatFun::reduce(num, lcm)
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFun { num: self.num.pow(e), den: self.den.pow(e) }
    }

    pub fn display_with<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        RatFunDisplay { f: self, var }
    }
}

/// Renders `num/den` with integer primitive parts, e.g. `-(k+1)/(2*(2*k+1))`.
struct RatFunDisplay<'a> {
    f: &'a RatFun,
    var: &'a str,
}

impl fmt::Display for RatFunDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (sign, numer, denom) = split_fraction(self.f, self.var);
        if sign {
            f.write_str("-")?;
        }
        match denom {
            None => f.write_str(&numer),
            Some(d) => write!(f, "{numer}/{d}"),
        }
    }
}

/// Splits a rational function into (negative?, numerator text, denominator
/// text) with the numerator parenthesized when it is a sum.
pub(crate) fn split_fraction(f: &RatFun, var: &str) -> (bool, String, Option<String>) {
    if f.is_zero() {
        return (false, "0".into(), None);
    }
    let (cn, pn) = f.num.primitive_part();
    let (cd, pd) = f.den.primitive_part();
    let c = cn / cd;
    let neg = c < BigRat::zero();
    let c = if neg { -c } else { c };
    let cnum = BigRat::from_integer(c.numer().clone());
    let cden = BigRat::from_integer(c.denom().clone());

    let numer = product_text(&cnum, &pn, var);
    if pd.is_one() && cden.is_one() {
        return (neg, numer, None);
    }
    let numer = if is_sum(&numer) { format!("({numer})") } else { numer };
    let denom = product_text(&cden, &pd, var);
    let denom = if is_atom(&denom) { denom } else { format!("({denom})") };
    (neg, numer, Some(denom))
}

/// `c * p` with `c` a positive integer and `p` primitive.
fn product_text(c: &BigRat, p: &Poly, var: &str) -> String {
    let ptext = p.display_with(var).to_string();
    if p.is_one() {
        return c.to_string();
    }
    if c.is_one() {
        return ptext;
    }
    if is_sum(&ptext) {
        format!("{c}*({ptext})")
    } else {
        format!("{c}*{ptext}")
    }
}

/// True when `s` has a top-level `+` or binary `-`.
pub(crate) fn is_sum(s: &str) -> bool {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && i > 0 => return true,
            _ => {}
        }
    }
    false
}

fn is_atom(s: &str) -> bool {
    s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({})", self.display_with("v"))
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFun::reduce(&self.num + &rhs.num, self.den.clone());
        }
        // only factors of gcd(den1, den2) can cancel
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            if num.is_zero() {
                return RatFun::zero();
            }
            return RatFun { num, den: &self.den * &rhs.den };
        }
        let d1 = self.den.exact_div(&g).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &d2) + &(&rhs.num * &d1);
        if num.is_zero() {
            return RatFun::zero();
        }
        let h = num.gcd(&g);
        if h.is_one() {
            return RatFun { num, den: &d1 * &rhs.den };
        }
        let num = num.exact_div(&h).expect("gcd divides");
        let den = &d1 * &rhs.den.exact_div(&h).expect("gcd divides");
        let lc_inv = den.lead().expect("nonzero").recip();
        RatFun { num: num.scale(&lc_inv), den: den.scale(&lc_inv) }
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return RatFun::from_poly(&self.num * &rhs.num);
        }
        // Cross-cancel before multiplying to keep degrees down.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g1).expect("gcd divides");
        let n2 = rhs.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let lc_inv = den.lead().expect("nonzero").recip();
        RatFun { num: num.scale(&lc_inv), den: den.scale(&lc_inv) }
    }
}

forward_owned!(RatFun, Add add, Sub sub, Mul mul);

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl Zero for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
}

impl One for RatFun {
    fn one() -> Self {
        RatFun::one()
    }
}

impl From<Poly> for RatFun {
    fn from(p: Poly) -> Self {
        RatFun::from_poly(p)
    }
}

impl From<BigRat> for RatFun {
    fn from(c: BigRat) -> Self {
        RatFun::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(a: i64, b: i64) -> Poly {
        Poly::from_ints(&[b, a])
    }

    #[test]
    fn normalizes_common_factor() {
        let f = RatFun::new(lin(2, 2), lin(4, 4)).unwrap();
        assert_eq!(f, RatFun::constant(BigRat::new(1.into(), 2.into())));
        assert!(RatFun::new(Poly::one(), Poly::zero()).is_err());
    }

    #[test]
    fn shift_substitutes() {
        let f = RatFun::new(Poly::var(), lin(1, 1)).unwrap();
        let g = RatFun::new(lin(1, 1), lin(1, 2)).unwrap();
        assert_eq!(f.shift_by(1), g);
        assert_eq!(f.shift_by(3).shift_by(-3), f);
    }

    #[test]
    fn eval_at_pole_is_error() {
        let f = RatFun::new(lin(131, -64), Poly::from_ints(&[0, 12])).unwrap();
        assert_eq!(f.eval_int(2).unwrap(), BigRat::new(33.into(), 4.into()));
        assert_eq!(f.eval_int(0), Err(ArithError::Pole { at: BigRat::zero() }));
    }

    #[test]
    fn display_clears_denominators() {
        // -(k+1)/(2(2k+1))
        let f = RatFun::new(-lin(1, 1), Poly::from_ints(&[2, 4])).unwrap();
        assert_eq!(f.display_with("k").to_string(), "-(k+1)/(2*(2*k+1))");
        let g = RatFun::new(Poly::from_ints(&[0, 1]), Poly::from_ints(&[1, 1])).unwrap();
        assert_eq!(g.display_with("k").to_string(), "k/(k+1)");
        let h = RatFun::new(Poly::from_ints(&[3]), Poly::from_ints(&[0, 2])).unwrap();
        assert_eq!(h.display_with("k").to_string(), "3/(2*k)");
        let c = RatFun::constant(BigRat::new((-3).into(), 4.into()));
        assert_eq!(c.display_with("k").to_string(), "-3/4");
    }
}
