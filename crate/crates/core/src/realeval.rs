//! Evaluation of the infinite products as functions on (0, 1).
//!
//! Truncated series are never used here: each product is evaluated factor
//! by factor until a factor differs from 1 by less than 1e-15, which makes
//! these values independent of any series truncation. This is the backing
//! for the divergence check closing the character inequality chain.

use crate::error::{Error, Result};

/// Convergence cutoff: factors within this distance of 1 stop the product.
pub const FACTOR_CUTOFF: f64 = 1e-15;

/// Largest admissible evaluation point.
pub const Q_MAX: f64 = 0.99;

/// The infinite products needed by the inequality chain.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RealProduct {
    /// `∏_{n>=1} (1 - q^n)` (the eta product without its prefactor).
    EtaProduct,
    /// `∏_{n>=from} (1 - q^n)^{-1}`.
    InverseTail { from: u32 },
    /// `∏_{n>=0} (1 + q^{n+1/2})`.
    HalfOddPlus,
    /// `∏_{n>=0} (1 - q^{n+1/2})`.
    HalfOddMinus,
    /// `∏_{n>=1} (1 + q^n)`.
    IntegerPlus,
}

impl RealProduct {
    /// Evaluate at a point of (0, Q_MAX]. Factors are `1 ± q^e` with `e`
    /// marching up until the factor is within [`FACTOR_CUTOFF`] of 1.
    pub fn eval(&self, q: f64) -> Result<f64> {
        if !(q > 0.0 && q <= Q_MAX) {
            return Err(Error::Input(format!(
                "evaluation point {q} outside (0, {Q_MAX}]"
            )));
        }
        let (start, step, sign, invert): (f64, f64, f64, bool) = match self {
            RealProduct::EtaProduct => (1.0, 1.0, -1.0, false),
            RealProduct::InverseTail { from } => (f64::from(*from), 1.0, -1.0, true),
            RealProduct::HalfOddPlus => (0.5, 1.0, 1.0, false),
            RealProduct::HalfOddMinus => (0.5, 1.0, -1.0, false),
            RealProduct::IntegerPlus => (1.0, 1.0, 1.0, false),
        };
        let mut acc = 1.0f64;
        let mut e = start;
        loop {
            let term = sign * q.powf(e);
            if term.abs() < FACTOR_CUTOFF {
                break;
            }
            acc *= 1.0 + term;
            e += step;
        }
        Ok(if invert { acc.recip() } else { acc })
    }
}

/// One evaluated point of the divergence check.
#[derive(Clone, Debug, serde::Serialize)]
pub struct RatioPoint {
    pub q: f64,
    pub value: f64,
}

/// Report of the divergence check for the ratio lower bound
/// `r(q) = (3·2^47)^{-1} ∏(1+q^{n+1/2})^{-1} ∏_{n>=2}(1-q^n)^{-1}`.
#[derive(Clone, Debug, serde::Serialize)]
pub struct RatioReport {
    pub points: Vec<RatioPoint>,
    pub strictly_increasing: bool,
    /// `r(last)/r(first)` over the sorted grid.
    pub growth_factor: f64,
}

/// The ratio lower bound at one point.
pub fn ratio_lower_bound(q: f64) -> Result<f64> {
    let scale = 1.0 / (3.0 * (2f64).powi(47));
    let a = RealProduct::HalfOddPlus.eval(q)?;
    let b = RealProduct::InverseTail { from: 2 }.eval(q)?;
    Ok(scale * b / a)
}

/// Evaluate the ratio bound on a grid, sorted ascending, and report
/// whether it increases strictly along the grid. The bound diverging as
/// q -> 1 is what forces every frame subalgebra to be simple.
pub fn ratio_divergence_check(grid: &[f64]) -> Result<RatioReport> {
    if grid.is_empty() {
        return Err(Error::Input("empty evaluation grid".into()));
    }
    let mut qs = grid.to_vec();
    qs.sort_by(|a, b| a.partial_cmp(b).expect("grid points must be comparable"));
    let mut points = Vec::with_capacity(qs.len());
    for q in qs {
        points.push(RatioPoint { q, value: ratio_lower_bound(q)? });
    }
    let strictly_increasing = points.windows(2).all(|w| w[1].value > w[0].value);
    let growth_factor = points.last().unwrap().value / points.first().unwrap().value;
    Ok(RatioReport { points, strictly_increasing, growth_factor })
}

/// Comparison of the tensor-factor bound against its comparison function
/// at one point, in log scale: `ln g` together with the strictly positive
/// margin `ln f - ln g`.
#[derive(Clone, Copy, Debug, serde::Serialize)]
pub struct FBoundComparison {
    /// `ln g(q)` for `g = q^{-1} 2^{-47} P_+^{47} ∏_{n>=2}(1-q^n)^{-1}`.
    pub ln_lower: f64,
    /// `ln f(q) - ln g(q) = 47·ln(1 + P_-/P_+) > 0`, computed in isolation
    /// so it stays representable even where it is far below the ulp of
    /// `ln g`.
    pub margin: f64,
}

/// Evaluate `f(q) = q^{-1} 2^{-47} (P_+ + P_-)^{47} ∏_{n>=2}(1-q^n)^{-1}`
/// against `g(q) = q^{-1} 2^{-47} P_+^{47} ∏_{n>=2}(1-q^n)^{-1}`, where
/// `P_± = ∏(1 ± q^{n+1/2})`. The 47th powers overflow f64 near q = 1, so
/// everything is done in log scale; `f > g` holds on (0,1) because `P_-`
/// is strictly positive there, and the margin field carries the exact
/// amount.
pub fn f_bound_comparison(q: f64) -> Result<FBoundComparison> {
    if !(q > 0.0 && q <= Q_MAX) {
        return Err(Error::Input(format!("evaluation point {q} outside (0, {Q_MAX}]")));
    }
    let mut ln_plus = 0.0f64;
    let mut ln_minus = 0.0f64;
    let mut e = 0.5f64;
    while q.powf(e) >= FACTOR_CUTOFF {
        ln_plus += q.powf(e).ln_1p();
        ln_minus += (-q.powf(e)).ln_1p();
        e += 1.0;
    }
    let mut ln_tail = 0.0f64;
    let mut n = 2.0f64;
    while q.powf(n) >= FACTOR_CUTOFF {
        ln_tail -= (-q.powf(n)).ln_1p();
        n += 1.0;
    }
    let ln_lower = -q.ln() - 47.0 * (2.0f64).ln() + 47.0 * ln_plus + ln_tail;
    let margin = 47.0 * (ln_minus - ln_plus).exp().ln_1p();
    Ok(FBoundComparison { ln_lower, margin })
}
