//! Exact numerical checks that do not go through the reduction: unrolling a
//! recurrence, evaluating the terminating sums `y_n = sum_k F(n,k) h_k`,
//! and confirming `L y = 0` on a window.

use num_traits::{One, Signed, Zero};

use crate::arith::{int, BigRat};
use crate::basis::BasisSpec;
use crate::ore::{OreError, OreOp};
use crate::reducer::InputOperator;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("recurrence violated at k = {k}: residual {residual}")]
    Inconsistent { k: i64, residual: BigRat },
    #[error("leading coefficient vanishes at k = {k}; h_{index} must be supplied as an initial value")]
    Underdetermined { k: i64, index: i64 },
    #[error("leading coefficient has a pole at k = {k}")]
    LeadingPole { k: i64 },
    #[error("cannot unroll the zero operator")]
    ZeroOperator,
    #[error("sum is non-terminating; a truncation bound is required")]
    MissingTruncation,
    #[error("sequence has {len} terms but h_{index} is needed")]
    SequenceTooShort { len: usize, index: usize },
    #[error("section index {j} out of range for m = {m}")]
    SectionIndex { m: usize, j: usize },
    #[error(transparent)]
    Ore(#[from] OreError),
}

/// A finite prefix of a sequence indexed from 0; negative indices read as 0.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Sequence {
    values: Vec<BigRat>,
}

impl Sequence {
    pub fn new(values: Vec<BigRat>) -> Self {
        Sequence { values }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Sequence { values: values.iter().map(|&v| int(v)).collect() }
    }

    pub fn from_fn(len: usize, f: impl FnMut(usize) -> BigRat) -> Self {
        Sequence { values: (0..len).map(f).collect() }
    }

    /// `None` past the end of the stored prefix.
    pub fn get(&self, index: i64) -> Option<BigRat> {
        if index < 0 {
            return Some(BigRat::zero());
        }
        self.values.get(index as usize).cloned()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[BigRat] {
        &self.values
    }

    pub fn push(&mut self, v: BigRat) {
        self.values.push(v);
    }

    /// Copy with `values[index] += delta`.
    pub fn perturbed(&self, index: usize, delta: &BigRat) -> Sequence {
        let mut out = self.clone();
        out.values[index] += delta;
        out
    }
}

/// Kernel `F(n, k) = prod_i C(a_i n + b_i, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelSpec {
    pub spec: BasisSpec,
}

impl KernelSpec {
    pub fn new(spec: BasisSpec) -> Self {
        KernelSpec { spec }
    }

    /// Largest `k` with `F(n, k)` possibly nonzero: `min(a_i n + b_i)` over
    /// the factors with `b_i` a nonnegative integer.
    pub fn termination_bound(&self, n: u64) -> Option<u64> {
        self.spec
            .a()
            .iter()
            .zip(self.spec.b())
            .filter(|(_, b)| b.is_integer() && !b.is_negative())
            .map(|(&a, b)| u64::from(a) * n + u64::try_from(b.to_integer()).expect("nonnegative"))
            .min()
    }

    pub fn is_terminating(&self) -> bool {
        self.termination_bound(0).is_some()
    }

    pub fn value(&self, n: u64, k: u64) -> BigRat {
        self.spec
            .a()
            .iter()
            .zip(self.spec.b())
            .map(|(&a, b)| binomial(&(int(i64::from(a)) * int(n as i64) + b), k))
            .fold(BigRat::one(), |acc, c| acc * c)
    }

    /// Number of `h` terms needed to evaluate `y_0..=y_nmax`.
    pub fn required_prefix(&self, nmax: u64) -> Option<usize> {
        self.termination_bound(nmax).map(|b| b as usize + 1)
    }
}

/// `C(y, k) = y (y-1) ... (y-k+1) / k!` for rational `y`.
pub fn binomial(y: &BigRat, k: u64) -> BigRat {
    let mut acc = BigRat::one();
    for s in 0..k {
        let s = int(s as i64);
        acc = acc * (y - &s) / (s + BigRat::one());
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// Terms `h_0..=h_upto` with `lp h = 0` at every `k >= 0`.
///
/// `initial` fixes the leading terms; every equation whose highest index is
/// already fixed is checked instead of solved. Where the leading coefficient
/// vanishes the equation is likewise a constraint, and the next term must be
/// part of `initial`.
pub fn unroll(lp: &OreOp, initial: &[BigRat], upto: usize) -> Result<Sequence, OracleError> {
    let order = lp.order().ok_or(OracleError::ZeroOperator)?;
    let lead = lp.leading_coeff().expect("nonzero");
    let mut seq = Sequence::new(initial.to_vec());
    let mut k: i64 = 0;
    loop {
        let target = k + order;
        let fixed = target < seq.len() as i64;
        if !fixed && target > upto as i64 {
            break;
        }
        let lead_val = if fixed {
            None
        } else {
            Some(lead.eval_int(k).map_err(|_| OracleError::LeadingPole { k })?)
        };
        if let Some(lead_val) = lead_val.filter(|v| !v.is_zero()) {
            // solve for h_target with the leading term treated as unknown
            let mut probe = seq.clone();
            probe.push(BigRat::zero());
            let rest = lp.apply(&probe, k)?;
            seq.push(-rest / lead_val);
        } else {
            let residual = lp.apply(&seq_with_placeholder(&seq, target), k)?;
            if !residual.is_zero() {
                return Err(OracleError::Inconsistent { k, residual });
            }
            if !fixed {
                return Err(OracleError::Underdetermined { k, index: target });
            }
        }
        k += 1;
    }
    seq.values.truncate(upto + 1);
    Ok(seq)
}

/// Pads with zeros through `target` so the lower part of an equation can be
/// evaluated when the leading coefficient vanishes.
fn seq_with_placeholder(seq: &Sequence, target: i64) -> Sequence {
    let mut s = seq.clone();
    while (s.len() as i64) <= target {
        s.push(BigRat::zero());
    }
    s
}

/// `y_n = sum_k F(n, k) h_k`, exactly.
///
/// The sum stops at the termination bound or at `truncation`, whichever is
/// smaller; a non-terminating kernel needs `truncation`.
pub fn eval_sum(kernel: &KernelSpec, h: &Sequence, n: u64, truncation: Option<u64>) -> Result<BigRat, OracleError> {
    let upper = match (kernel.termination_bound(n), truncation) {
        (Some(b), Some(t)) => b.min(t),
        (Some(b), None) => b,
        (None, Some(t)) => t,
        (None, None) => return Err(OracleError::MissingTruncation),
    };
    let mut acc = BigRat::zero();
    for k in 0..=upper {
        let hk = h.get(k as i64).ok_or(OracleError::SequenceTooShort { len: h.len(), index: k as usize })?;
        if hk.is_zero() {
            continue;
        }
        acc += kernel.value(n, k) * hk;
    }
    Ok(acc)
}

/// Result of checking `L y = 0` for `n = 0..=nmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    /// `y_0..=y_{nmax + ord L}`
    pub y: Vec<BigRat>,
    /// `(L y)_n` for each checked `n`.
    pub residuals: Vec<BigRat>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.residuals.iter().all(Zero::is_zero)
    }

    pub fn first_failure(&self) -> Option<usize> {
        self.residuals.iter().position(|r| !r.is_zero())
    }
}

pub fn verify_solution(
    l: &InputOperator,
    kernel: &KernelSpec,
    h: &Sequence,
    nmax: u64,
    truncation: Option<u64>,
) -> Result<VerifyReport, OracleError> {
    let top = nmax + l.order() as u64;
    let y = (0..=top)
        .map(|n| eval_sum(kernel, h, n, truncation))
        .collect::<Result<Vec<_>, _>>()?;
    let residuals = (0..=nmax as usize)
        .map(|n| l.apply_at(&y, n).expect("y covers n + ord L"))
        .collect();
    Ok(VerifyReport { y, residuals })
}

/// `(s_j^m c)_k = c_{mk+j}`.
pub fn msection(c: &Sequence, m: usize, j: usize) -> Result<Sequence, OracleError> {
    if m == 0 || j >= m {
        return Err(OracleError::SectionIndex { m, j });
    }
    Ok(Sequence::new(c.values.iter().skip(j).step_by(m).cloned().collect()))
}

/// `c_k = parts[k mod m]_{k div m}`, up to the first missing value.
pub fn interlace(parts: &[Sequence]) -> Sequence {
    let m = parts.len();
    let mut out = Vec::new();
    if m == 0 {
        return Sequence::new(out);
    }
    for k in 0.. {
        match parts[k % m].values.get(k / m) {
            Some(v) => out.push(v.clone()),
            None => break,
        }
    }
    Sequence::new(out)
}
