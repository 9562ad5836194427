//! Gaussian elimination over the rational function field.

use super::{ArithError, RatFun};

/// Solves `a * x = rhs` for square nonsingular `a`.
///
/// Pivots on the lowest-weight nonzero entry of each column.
pub fn solve_linear_system(a: &[Vec<RatFun>], rhs: &[RatFun]) -> Result<Vec<RatFun>, ArithError> {
    let n = a.len();
    if rhs.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(ArithError::Shape { rows: n, cols: a.first().map_or(0, Vec::len), rhs: rhs.len() });
    }
    let mut m: Vec<Vec<RatFun>> = a
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n)
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].weight())
            .ok_or(ArithError::Singular { stage: col })?;
        m.swap(col, pivot);
        let inv = m[col][col].inv()?;
        let prow: Vec<RatFun> = m[col].iter().map(|e| e * &inv).collect();
        for (r, row) in m.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (e, p) in row.iter_mut().zip(&prow).skip(col) {
                if !p.is_zero() {
                    *e = &*e - &(&factor * p);
                }
            }
        }
        m[col] = prow;
    }
    Ok(m.into_iter().map(|mut row| row.pop().expect("augmented column")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{BigRat, Poly};

    fn lin(a: i64, b: i64) -> Poly {
        Poly::from_ints(&[b, a])
    }

    fn frac(n: Poly, d: Poly) -> RatFun {
        RatFun::new(n, d).unwrap()
    }

    #[test]
    fn triangular_system_from_the_squared_binomial_basis() {
        // u - v + w = 0; v/k + w = (k+1)/k; w = k/(k+1)
        let one = RatFun::one();
        let zero = RatFun::zero();
        let k = Poly::var();
        let a = vec![
            vec![one.clone(), -one.clone(), one.clone()],
            vec![zero.clone(), frac(Poly::one(), k.clone()), one.clone()],
            vec![zero.clone(), zero.clone(), one.clone()],
        ];
        let rhs = vec![zero, frac(lin(1, 1), k.clone()), frac(k.clone(), lin(1, 1))];
        let x = solve_linear_system(&a, &rhs).unwrap();
        assert_eq!(x[0], one);
        assert_eq!(x[1], frac(lin(2, 1), lin(1, 1)));
        assert_eq!(x[2], frac(k, lin(1, 1)));
    }

    #[test]
    fn identity_returns_rhs() {
        let n = 4;
        let a: Vec<Vec<RatFun>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { RatFun::one() } else { RatFun::zero() }).collect())
            .collect();
        let rhs: Vec<RatFun> = (0..n as i64).map(|i| frac(lin(1, i), lin(1, i + 7))).collect();
        assert_eq!(solve_linear_system(&a, &rhs).unwrap(), rhs);
    }

    #[test]
    fn singular_reports_stage() {
        let r = RatFun::constant(BigRat::from_integer(2.into()));
        let a = vec![vec![r.clone(), r.clone()], vec![r.clone(), r.clone()]];
        let rhs = vec![RatFun::one(), RatFun::one()];
        assert_eq!(solve_linear_system(&a, &rhs), Err(ArithError::Singular { stage: 1 }));
    }
}
