//! Product binomial-coefficient bases and their shift/multiplication tables.
//!
//! For `m` pairs `(a_i, b_i)` the basis element of index `n = m k + j`
//! (`0 <= j < m`) is
//!
//! ```text
//! P_{mk+j}(x) = prod_{i <= j} C(a_i x + b_i, k+1) * prod_{i > j} C(a_i x + b_i, k)
//! ```
//!
//! The basis is `(mA, 0)`-compatible with the shift `E`, `A = max a_i`, so
//! `P_{mk+j}(x+1)` is a combination of `P_{mk+j}, ..., P_{mk+j-mA}` whose
//! coefficients are rational functions of `k`. [`ExpansionTable`] holds those
//! coefficients together with the two-term action of multiplication by `x`.

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::arith::{int, ArithError, BigRat, Poly, RatFun};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BasisError {
    #[error("a basis needs at least one factor")]
    Empty,
    #[error("a has {a} entries but b has {b}")]
    LengthMismatch { a: usize, b: usize },
    #[error("a_{index} must be a positive integer")]
    NonPositiveA { index: usize },
    #[error("kmax = {kmax} is below the shift bandwidth {bandwidth}")]
    WindowTooSmall { kmax: usize, bandwidth: usize },
    #[error("expansion system for section {j}: {source}")]
    Expansion { j: usize, source: ArithError },
}

/// The parameters `(a, b)` of a product binomial-coefficient basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisSpec {
    a: Vec<u32>,
    b: Vec<BigRat>,
}

impl BasisSpec {
    pub fn new(a: Vec<u32>, b: Vec<BigRat>) -> Result<Self, BasisError> {
        if a.is_empty() {
            return Err(BasisError::Empty);
        }
        if a.len() != b.len() {
            return Err(BasisError::LengthMismatch { a: a.len(), b: b.len() });
        }
        if let Some(index) = a.iter().position(|&ai| ai == 0) {
            return Err(BasisError::NonPositiveA { index: index + 1 });
        }
        Ok(BasisSpec { a, b })
    }

    /// Convenience constructor for integer `b`.
    pub fn from_ints(a: &[u32], b: &[i64]) -> Result<Self, BasisError> {
        Self::new(a.to_vec(), b.iter().map(|&x| int(x)).collect())
    }

    pub fn m(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[u32] {
        &self.a
    }

    pub fn b(&self) -> &[BigRat] {
        &self.b
    }

    /// `A = max a_i`.
    pub fn max_a(&self) -> usize {
        *self.a.iter().max().expect("nonempty") as usize
    }

    /// `mA`, the number of lower basis elements reached by the shift.
    pub fn bandwidth(&self) -> usize {
        self.m() * self.max_a()
    }
}

/// `C(a x + b, count)` as a polynomial in `x`.
pub fn binomial_poly(a: u32, b: &BigRat, count: usize) -> Poly {
    let mut p = Poly::one();
    for s in 0..count {
        let s = int(s as i64);
        let denom = (&s + BigRat::one()).recip();
        p = &p * &Poly::linear(int(a.into()) * &denom, (b - &s) * &denom);
    }
    p
}

/// The basis polynomial `P_n(x)`.
pub fn basis_poly(spec: &BasisSpec, n: usize) -> Poly {
    let m = spec.m();
    let (k, j) = (n / m, n % m);
    spec.a
        .iter()
        .zip(&spec.b)
        .enumerate()
        .fold(Poly::one(), |acc, (f, (&a, b))| {
            let count = if f < j { k + 1 } else { k };
            &acc * &binomial_poly(a, b, count)
        })
}

/// Coefficients `c_0..c_d` with `p = sum c_n P_n`, by leading-term elimination.
pub fn expand_in_basis(spec: &BasisSpec, p: &Poly) -> Vec<BigRat> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    let mut rest = p.clone();
    let mut out = vec![BigRat::zero(); deg + 1];
    for d in (0..=deg).rev() {
        let c = rest.coeff(d);
        if c.is_zero() {
            continue;
        }
        let pd = basis_poly(spec, d);
        let c = c / pd.lead().expect("deg P_d = d");
        rest = &rest - &pd.scale(&c);
        out[d] = c;
    }
    out
}

/// Polynomial in `x` with coefficients in `Q(k)`, ascending.
type XPoly = Vec<RatFun>;

fn xpoly_mul_linear(p: &XPoly, slope: &RatFun, intercept: &RatFun) -> XPoly {
    let mut out = vec![RatFun::zero(); p.len() + 1];
    for (d, c) in p.iter().enumerate() {
        out[d] = &out[d] + &(c * intercept);
        out[d + 1] = &out[d + 1] + &(c * slope);
    }
    out
}

/// `b - k - c` as a rational function of `k`.
fn offset_intercept(b: &BigRat, c: i64) -> RatFun {
    RatFun::from_poly(Poly::linear(-BigRat::one(), b - int(c)))
}

/// `k + c` as a rational function of `k`.
fn k_plus(c: i64) -> RatFun {
    RatFun::from_poly(Poly::linear(BigRat::one(), int(c)))
}

/// `P_{mk+j-i}(x) / P_{mk+j-mA}(x)` for symbolic `k`, as a polynomial in `x`.
///
/// Each factor `C(ax+b, k+o) / C(ax+b, k+g)` telescopes to
/// `prod_{c=g}^{o-1} (ax + b - k - c) / (k + c + 1)`.
fn lower_ratio(spec: &BasisSpec, j: usize, i: usize) -> XPoly {
    let m = spec.m() as i64;
    let big_a = spec.max_a() as i64;
    let t = j as i64 - i as i64;
    let (q, r) = (t.div_euclid(m), t.rem_euclid(m));
    let mut p: XPoly = vec![RatFun::one()];
    for (f, (&a, b)) in spec.a.iter().zip(&spec.b).enumerate() {
        let f = f as i64;
        let top = q + i64::from(f < r);
        let base = -big_a + i64::from(f < j as i64);
        for c in base..top {
            let inv = k_plus(c + 1).inv().expect("k + c + 1 is nonzero");
            let slope = inv.scale(&int(a.into()));
            let intercept = &offset_intercept(b, c) * &inv;
            p = xpoly_mul_linear(&p, &slope, &intercept);
        }
    }
    p
}

/// `P_{mk+j}(x+1) / P_{mk+j-mA}(x)` for symbolic `k`.
///
/// Per factor, `a(x+1) + b - s = ax + b - (s - a)` turns the shifted
/// numerator into `prod_{u=-a}^{K-1-a} (ax+b-u)`; cancelling against the
/// `K - A` lower factors leaves `u in [-a, -1]` and `u in [K-A, K-1-a]`.
fn shifted_ratio(spec: &BasisSpec, j: usize) -> XPoly {
    let big_a = spec.max_a() as i64;
    let mut p: XPoly = vec![RatFun::one()];
    for (f, (&a, b)) in spec.a.iter().zip(&spec.b).enumerate() {
        let a_i = i64::from(a);
        let delta = i64::from(f < j);
        let slope = RatFun::constant(int(a_i));
        for u in -a_i..0 {
            p = xpoly_mul_linear(&p, &slope, &RatFun::constant(b - int(u)));
        }
        for w in (delta - big_a)..=(delta - 1 - a_i) {
            p = xpoly_mul_linear(&p, &slope, &offset_intercept(b, w));
        }
        // K'! / K! with K = k + delta, K' = K - A
        for c in 1..=big_a {
            let inv = k_plus(delta - big_a + c).inv().expect("nonzero");
            p = p.iter().map(|e| e * &inv).collect();
        }
    }
    p
}

/// Shift coefficients for section `j`: entry `i` is the coefficient of
/// `P_{mk+j-i}` in `P_{mk+j}(x+1)`, for `i = 0..=mA`.
///
/// The defining identity is divided through by `P_{mk+j-mA}` and the
/// coefficients of `x^0..x^{mA}` are equated. Column `i` of that system has
/// degree `mA - i` in `x`, so it is triangular and solved from the top
/// power down.
pub fn shift_expansion_section(spec: &BasisSpec, j: usize) -> Result<Vec<RatFun>, BasisError> {
    let (matrix, rhs) = expansion_system(spec, j);
    let bw = spec.bandwidth();
    let mut alpha: Vec<RatFun> = Vec::with_capacity(bw + 1);
    for i in 0..=bw {
        let row = &matrix[bw - i];
        let mut acc = rhs[bw - i].clone();
        for (prev, a) in alpha.iter().enumerate() {
            if !a.is_zero() && !row[prev].is_zero() {
                acc = &acc - &(&row[prev] * a);
            }
        }
        let a = acc
            .checked_div(&row[i])
            .map_err(|_| BasisError::Expansion { j, source: ArithError::Singular { stage: i } })?;
        alpha.push(a);
    }
    Ok(alpha)
}

/// The coefficient system of a section, rows indexed by the power of `x`.
pub fn expansion_system(spec: &BasisSpec, j: usize) -> (Vec<Vec<RatFun>>, Vec<RatFun>) {
    let bw = spec.bandwidth();
    let columns: Vec<XPoly> = (0..=bw).map(|i| lower_ratio(spec, j, i)).collect();
    let rhs_poly = shifted_ratio(spec, j);
    let coef = |p: &XPoly, d: usize| p.get(d).cloned().unwrap_or_else(RatFun::zero);
    let matrix = (0..=bw).map(|d| columns.iter().map(|col| coef(col, d)).collect()).collect();
    let rhs = (0..=bw).map(|d| coef(&rhs_poly, d)).collect();
    (matrix, rhs)
}

/// Shift coefficients for every section `j = 0..m`.
pub fn shift_expansion(spec: &BasisSpec) -> Result<Vec<Vec<RatFun>>, BasisError> {
    (0..spec.m()).map(|j| shift_expansion_section(spec, j)).collect()
}

/// Multiplication-by-`x` coefficients `((k - b_{j+1})/a_{j+1}, (k+1)/a_{j+1})`
/// of `P_{mk+j}` and `P_{mk+j+1}` in `x P_{mk+j}`.
pub fn x_expansion(spec: &BasisSpec) -> Vec<(RatFun, RatFun)> {
    spec.a
        .iter()
        .zip(&spec.b)
        .map(|(&a, b)| {
            let inv_a = int(a.into()).recip();
            let diag = RatFun::from_poly(Poly::linear(inv_a.clone(), -b * &inv_a));
            let up = RatFun::from_poly(Poly::linear(inv_a.clone(), inv_a));
            (diag, up)
        })
        .collect()
}

/// Shift and multiplication tables of a basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionTable {
    spec: BasisSpec,
    shift: Vec<Vec<RatFun>>,
    x: Vec<(RatFun, RatFun)>,
}

impl ExpansionTable {
    pub fn compute(spec: &BasisSpec) -> Result<Self, BasisError> {
        Ok(ExpansionTable { spec: spec.clone(), shift: shift_expansion(spec)?, x: x_expansion(spec) })
    }

    /// Assembles a table from precomputed parts; used to exercise the
    /// compatibility check on tables that did not come from [`Self::compute`].
    pub fn from_parts(spec: BasisSpec, shift: Vec<Vec<RatFun>>, x: Vec<(RatFun, RatFun)>) -> Self {
        ExpansionTable { spec, shift, x }
    }

    pub fn spec(&self) -> &BasisSpec {
        &self.spec
    }

    /// `shift()[j][i]` is the coefficient of `P_{mk+j-i}` in `P_{mk+j}(x+1)`.
    pub fn shift(&self) -> &[Vec<RatFun>] {
        &self.shift
    }

    pub fn x(&self) -> &[(RatFun, RatFun)] {
        &self.x
    }

    pub fn to_json(&self) -> Value {
        let rf = |f: &RatFun| Value::String(f.display_with("k").to_string());
        json!({
            "m": self.spec.m(),
            "a": self.spec.a,
            "b": self.spec.b.iter().map(crate::arith::rat_string).collect::<Vec<_>>(),
            "E": self.shift.iter().map(|row| row.iter().map(rf).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "X": self.x.iter().map(|(d, u)| json!([rf(d), rf(u)])).collect::<Vec<_>>(),
        })
    }
}

/// One line of a compatibility report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatRow {
    pub n: usize,
    /// `deg P_n(x+1) = n`
    pub degree_ok: bool,
    /// `P_{n-mA}(x)` divides `P_n(x+1)`
    pub divides: bool,
    /// The table instantiated at `k = n div m` reproduces `P_n(x+1)`.
    pub expansion_ok: bool,
}

impl CompatRow {
    pub fn passed(&self) -> bool {
        self.degree_ok && self.divides && self.expansion_ok
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatReport {
    pub rows: Vec<CompatRow>,
}

impl CompatReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(CompatRow::passed)
    }

    pub fn first_failure(&self) -> Option<&CompatRow> {
        self.rows.iter().find(|r| !r.passed())
    }
}

/// `sum_i table[j][i](k0) P_{m k0 + j - i}(x)`.
pub fn instantiate_shift(table: &ExpansionTable, k0: usize, j: usize) -> Result<Poly, ArithError> {
    let spec = table.spec();
    let n = spec.m() * k0 + j;
    let k0 = int(k0 as i64);
    let mut acc = Poly::zero();
    for (i, alpha) in table.shift[j].iter().enumerate() {
        if alpha.is_zero() || i > n {
            continue;
        }
        let c = alpha.eval(&k0)?;
        acc = &acc + &basis_poly(spec, n - i).scale(&c);
    }
    Ok(acc)
}

/// Exact check of the compatibility conditions for `n = mA..=kmax`.
pub fn check_compatibility(table: &ExpansionTable, kmax: usize) -> Result<CompatReport, BasisError> {
    let spec = table.spec();
    let bw = spec.bandwidth();
    if kmax < bw {
        return Err(BasisError::WindowTooSmall { kmax, bandwidth: bw });
    }
    let one = BigRat::one();
    let rows = (bw..=kmax)
        .map(|n| {
            let shifted = basis_poly(spec, n).shift(&one);
            let lower = basis_poly(spec, n - bw);
            let expansion_ok = instantiate_shift(table, n / spec.m(), n % spec.m())
                .is_ok_and(|p| p == shifted);
            CompatRow {
                n,
                degree_ok: shifted.degree() == Some(n),
                divides: lower.divides(&shifted),
                expansion_ok,
            }
        })
        .collect();
    Ok(CompatReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn spec(a: &[u32], b: &[i64]) -> BasisSpec {
        BasisSpec::from_ints(a, b).unwrap()
    }

    #[test]
    fn back_substitution_matches_elimination() {
        for s in [spec(&[1, 1], &[0, 0]), spec(&[2, 3], &[-1, 4]), spec(&[3, 1, 2], &[1, 0, -2])] {
            for j in 0..s.m() {
                let (a, rhs) = expansion_system(&s, j);
                let general = crate::arith::solve_linear_system(&a, &rhs).unwrap();
                assert_eq!(shift_expansion_section(&s, j).unwrap(), general);
            }
        }
    }

    fn frac(num: &[i64], den: &[i64]) -> RatFun {
        RatFun::new(Poly::from_ints(num), Poly::from_ints(den)).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert_eq!(BasisSpec::from_ints(&[], &[]), Err(BasisError::Empty));
        assert_eq!(
            BasisSpec::from_ints(&[1, 2], &[0]),
            Err(BasisError::LengthMismatch { a: 2, b: 1 })
        );
        assert_eq!(BasisSpec::from_ints(&[1, 0], &[0, 0]), Err(BasisError::NonPositiveA { index: 2 }));
        let s = spec(&[2, 3], &[-1, 4]);
        assert_eq!((s.m(), s.max_a(), s.bandwidth()), (2, 3, 6));
    }

    #[test]
    fn basis_polynomials() {
        let sq = spec(&[1, 1], &[0, 0]);
        assert_eq!(basis_poly(&sq, 0), Poly::one());
        assert_eq!(basis_poly(&sq, 2), Poly::from_ints(&[0, 0, 1]));
        // C(2x,2) C(3x,1) = x(2x-1) 3x
        let p = basis_poly(&spec(&[2, 3], &[0, 0]), 3);
        assert_eq!(p, Poly::from_ints(&[0, 0, -3, 6]));
        assert!(basis_poly(&spec(&[2, 3], &[0, 0]), 2).divides(&p));
    }

    #[test]
    fn expansion_in_basis() {
        let sq = spec(&[1, 1], &[0, 0]);
        assert_eq!(expand_in_basis(&sq, &Poly::from_ints(&[0, 0, 1])), vec![int(0), int(0), int(1)]);
        // x P_2 = 2 P_3 + P_2
        let xp2 = &Poly::var() * &basis_poly(&sq, 2);
        assert_eq!(expand_in_basis(&sq, &xp2), vec![int(0), int(0), int(1), int(2)]);
        let s = spec(&[2, 3], &[-1, 4]);
        let mut unit = vec![int(0); 6];
        unit[5] = int(1);
        assert_eq!(expand_in_basis(&s, &basis_poly(&s, 5)), unit);
        assert!(expand_in_basis(&s, &Poly::zero()).is_empty());
    }

    #[test]
    fn squared_binomial_shift_table() {
        let sq = spec(&[1, 1], &[0, 0]);
        let t = shift_expansion(&sq).unwrap();
        assert_eq!(t[0], vec![RatFun::one(), RatFun::from_int(2), RatFun::one()]);
        assert_eq!(t[1], vec![RatFun::one(), frac(&[1, 2], &[1, 1]), frac(&[0, 1], &[1, 1])]);
    }

    #[test]
    fn single_factor_is_vandermonde() {
        for a in 1..=4u32 {
            for b in [-2, 0, 3] {
                let t = shift_expansion(&spec(&[a], &[b])).unwrap();
                let mut binom = int(1);
                for i in 0..=a as i64 {
                    assert_eq!(t[0][i as usize], RatFun::constant(binom.clone()), "a={a} b={b} i={i}");
                    binom = binom * int(a as i64 - i) / int(i + 1);
                }
            }
        }
    }

    #[test]
    fn x_table() {
        let s = spec(&[2, 3], &[-1, 4]);
        let x = x_expansion(&s);
        assert_eq!(x[0], (frac(&[1, 1], &[2]), frac(&[1, 1], &[2])));
        assert_eq!(x[1], (frac(&[-4, 1], &[3]), frac(&[1, 1], &[3])));
        let q = BasisSpec::new(vec![2], vec![rat(1, 2)]).unwrap();
        assert_eq!(x_expansion(&q)[0].0, frac(&[-1, 2], &[4]));
    }

    #[test]
    fn compatibility_and_negative_control() {
        let s = spec(&[1, 1], &[0, 0]);
        let table = ExpansionTable::compute(&s).unwrap();
        assert!(check_compatibility(&table, 12).unwrap().passed());
        let mut shift = table.shift().to_vec();
        shift[1][1] = &shift[1][1] + &RatFun::one();
        let bad = ExpansionTable::from_parts(s.clone(), shift, table.x().to_vec());
        let report = check_compatibility(&bad, 12).unwrap();
        assert!(!report.passed());
        assert!(report.rows.iter().all(|r| r.degree_ok && r.divides));
        assert!(check_compatibility(&table, 1).is_err());
    }
}
