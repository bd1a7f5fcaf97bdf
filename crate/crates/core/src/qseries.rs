//! Exact truncated q-expansions with exponents in (1/48)·Z.
//!
//! Exponents are stored as integer multiples of `q^{1/48}`, which houses
//! every exponent this crate needs (-1/48, 1/24, 1/16, 1/8, 1/2 and the
//! integers) on one lattice so that series from different sources can be
//! combined without rescaling. Coefficients are arbitrary-precision
//! rationals; a coefficient equal to zero is never stored.
//!
//! A series knows its truncation index: coefficients above it are unknown,
//! not zero. Arithmetic propagates truncation pessimistically, so a result
//! is only ever claimed on exponents where it is fully determined.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Exponent denominator of the lattice: exponents are `index / UNIT`.
pub const UNIT: i64 = 48;

/// A truncated formal series with exponents in (1/48)·Z and exact rational
/// coefficients. Coefficients with index above `trunc` are unknown.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSeries {
    coeffs: BTreeMap<i64, BigRational>,
    trunc: i64,
}

impl QSeries {
    /// The zero series, known through `trunc`.
    pub fn zero(trunc: i64) -> Self {
        QSeries { coeffs: BTreeMap::new(), trunc }
    }

    /// The constant series 1, known through `trunc`.
    pub fn one(trunc: i64) -> Self {
        QSeries::monomial(0, BigRational::one(), trunc)
    }

    /// A single term `c · q^(index/48)`, known through `trunc`.
    pub fn monomial(index: i64, c: BigRational, trunc: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() && index <= trunc {
            coeffs.insert(index, c);
        }
        QSeries { coeffs, trunc }
    }

    /// Build from explicit `(index, coefficient)` terms.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(trunc: i64, terms: I) -> Self {
        let mut s = QSeries::zero(trunc);
        for (i, c) in terms {
            s.add_term(i, c);
        }
        s
    }

    /// Truncation index: the largest exponent index with a known
    /// coefficient.
    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    /// Leading exponent index, if any term is known.
    pub fn leading(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// The coefficient at an exponent index. Panics if the index lies above
    /// the truncation, where the coefficient is unknown.
    pub fn coeff(&self, index: i64) -> BigRational {
        assert!(
            index <= self.trunc,
            "coefficient at index {index} is beyond the truncation {}",
            self.trunc
        );
        self.coeffs.get(&index).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Coefficient at an integer power of q.
    pub fn coeff_q(&self, power: i64) -> BigRational {
        self.coeff(power * UNIT)
    }

    /// Known `(index, coefficient)` terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, index: i64, c: BigRational) {
        if index > self.trunc || c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(index).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&index);
        }
    }

    /// Drop knowledge above `trunc` (no-op if already tighter).
    pub fn truncated(&self, trunc: i64) -> QSeries {
        let coeffs = self.coeffs.range(..=trunc).map(|(&i, c)| (i, c.clone())).collect();
        QSeries { coeffs, trunc: trunc.min(self.trunc) }
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let trunc = self.trunc.min(other.trunc);
        let mut out = self.truncated(trunc);
        for (i, c) in other.coeffs.range(..=trunc) {
            out.add_term(*i, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> QSeries {
        if c.is_zero() {
            return QSeries::zero(self.trunc);
        }
        QSeries {
            coeffs: self.coeffs.iter().map(|(&i, v)| (i, v * c)).collect(),
            trunc: self.trunc,
        }
    }

    /// Multiply by `q^(index/48)`, shifting all exponents and the
    /// truncation.
    pub fn shift(&self, index: i64) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|(&i, v)| (i + index, v.clone())).collect(),
            trunc: self.trunc + index,
        }
    }

    /// Product. The result is known through
    /// `min(trunc_a + lead_b, trunc_b + lead_a)`: beyond that, unknown
    /// coefficients of one factor could reach the exponent.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        fn lead_or_past(s: &QSeries) -> i64 {
            s.leading().unwrap_or(s.trunc() + 1)
        }
        let trunc = (self.trunc + lead_or_past(other)).min(other.trunc + lead_or_past(self));
        let mut out = QSeries::zero(trunc);
        for (&i, a) in &self.coeffs {
            for (&j, b) in &other.coeffs {
                if i + j > trunc {
                    break;
                }
                out.add_term(i + j, a * b);
            }
        }
        out
    }

    /// Integer power by repeated squaring. `pow(0)` is the constant 1 known
    /// through the base truncation.
    pub fn pow(&self, mut k: u32) -> QSeries {
        let mut base = self.clone();
        let mut acc = QSeries::one(self.trunc);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplicative inverse. Requires a known leading term; the result is
    /// known through `trunc - 2·lead`.
    pub fn recip(&self) -> Result<QSeries> {
        let lead = self.leading().ok_or_else(|| {
            Error::Domain("reciprocal of a series with no known nonzero term".into())
        })?;
        let lc = self.coeff(lead);
        // Normalize to 1 + Σ_{j>0} a_j q^{j/48} and run the standard
        // coefficient recurrence b_k = -Σ_{0<j<=k} a_j b_{k-j}.
        let order = self.trunc - lead;
        let a = self.shift(-lead).scale(&lc.recip());
        let mut b: BTreeMap<i64, BigRational> = BTreeMap::new();
        b.insert(0, BigRational::one());
        for k in 1..=order {
            let mut acc = BigRational::zero();
            for (j, aj) in a.coeffs.range(1..=k) {
                if let Some(bv) = b.get(&(k - j)) {
                    acc += aj * bv;
                }
            }
            if !acc.is_zero() {
                b.insert(k, -acc);
            }
        }
        let inv = QSeries { coeffs: b, trunc: order };
        Ok(inv.shift(-lead).scale(&lc.recip()).truncated(self.trunc - 2 * lead))
    }

    /// True when every known coefficient of `self` is at most the matching
    /// coefficient of `other`, compared through the smaller truncation.
    /// Missing coefficients count as zero.
    pub fn coeffwise_leq(&self, other: &QSeries) -> bool {
        let trunc = self.trunc.min(other.trunc);
        let zero = BigRational::zero();
        let mut indices: Vec<i64> = self.coeffs.range(..=trunc).map(|(&i, _)| i).collect();
        indices.extend(other.coeffs.range(..=trunc).map(|(&i, _)| i));
        indices.sort_unstable();
        indices.dedup();
        indices.into_iter().all(|i| {
            let a = self.coeffs.get(&i).unwrap_or(&zero);
            let b = other.coeffs.get(&i).unwrap_or(&zero);
            a <= b
        })
    }

    /// True when every known coefficient is a non-negative integer.
    pub fn is_nonnegative_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer() && !c.is_negative())
    }

    /// Assert that the series is known at least through the given index.
    pub fn assert_known_through(&self, index: i64) -> Result<()> {
        if self.trunc < index {
            return Err(Error::Domain(format!(
                "series known only through index {}, need {index}",
                self.trunc
            )));
        }
        Ok(())
    }

    /// Render an exponent index as an exact fraction in lowest terms.
    pub fn format_exponent(index: i64) -> String {
        let g = num_integer::gcd(index.unsigned_abs() as i64, UNIT).max(1);
        let (num, den) = (index / g, UNIT / g);
        if den == 1 {
            format!("{num}")
        } else {
            format!("{num}/{den}")
        }
    }

    /// CSV rows `exponent,coefficient`, exponents as exact fractions.
    ///
    /// When every known term lies on one integer-step lattice `c + Z`
    /// (true for all the named expansions), rows walk that lattice from
    /// the leading exponent to the truncation, zeros included; otherwise
    /// only the nonzero terms are emitted.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("exponent,coefficient\n");
        match self.leading() {
            Some(lead)
                if self
                    .coeffs
                    .keys()
                    .all(|&i| (i - lead).rem_euclid(UNIT) == 0) =>
            {
                let mut i = lead;
                while i <= self.trunc {
                    let _ = writeln!(out, "{},{}", QSeries::format_exponent(i), self.coeff(i));
                    i += UNIT;
                }
            }
            _ => {
                for (i, c) in self.terms() {
                    let _ = writeln!(out, "{},{}", QSeries::format_exponent(i), c);
                }
            }
        }
        out
    }

    /// Parse the CSV format back into a series; the truncation is the
    /// largest exponent present.
    pub fn from_csv(text: &str) -> Result<QSeries> {
        let mut terms: Vec<(i64, BigRational)> = Vec::new();
        let mut max_idx = i64::MIN;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line == "exponent,coefficient" {
                continue;
            }
            let (e, c) = line.split_once(',').ok_or_else(|| {
                Error::Input(format!("series CSV line {} has no comma", lineno + 1))
            })?;
            let parse_rational = |s: &str| -> Result<BigRational> {
                let s = s.trim();
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s, "1"),
                };
                let num: BigInt = num
                    .parse()
                    .map_err(|_| Error::Input(format!("bad rational {s:?}")))?;
                let den: BigInt = den
                    .parse()
                    .map_err(|_| Error::Input(format!("bad rational {s:?}")))?;
                Ok(BigRational::new(num, den))
            };
            let exponent = parse_rational(e)?;
            let scaled = exponent * BigRational::from_integer(UNIT.into());
            if !scaled.is_integer() {
                return Err(Error::Input(format!(
                    "exponent {e} is not a multiple of 1/{UNIT}"
                )));
            }
            let idx: i64 = scaled
                .to_integer()
                .try_into()
                .map_err(|_| Error::Input(format!("exponent {e} out of range")))?;
            max_idx = max_idx.max(idx);
            terms.push((idx, parse_rational(c)?));
        }
        if terms.is_empty() {
            return Err(Error::Input("series CSV contains no rows".into()));
        }
        Ok(QSeries::from_terms(max_idx, terms))
    }

    /// JSON export `{unit, truncation, terms: [[index, num, den], ...]}`.
    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            unit: UNIT,
            truncation: self.trunc,
            terms: self
                .terms()
                .map(|(i, c)| {
                    (i, c.numer().to_str_radix(10), c.denom().to_str_radix(10))
                })
                .collect(),
        }
    }
}

/// Serializable series export format.
#[derive(Serialize)]
pub struct SeriesJson {
    pub unit: i64,
    pub truncation: i64,
    pub terms: Vec<(i64, String, String)>,
}

/// Convenience: an exact rational from an integer pair.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geometric(order: i64) -> QSeries {
        // Σ_{n>=0} q^n through the given integer order.
        QSeries::from_terms(order * UNIT, (0..=order).map(|n| (n * UNIT, BigRational::one())))
    }

    #[test]
    fn add_and_mul_identities() {
        let a = QSeries::from_terms(200, [(-48, ratio(1, 1)), (0, ratio(3, 2)), (96, ratio(-7, 1))]);
        assert_eq!(a.add(&QSeries::zero(200)), a);
        assert_eq!(a.mul(&QSeries::one(400)), a);
    }

    #[test]
    fn one_minus_q_times_geometric_is_one() {
        let n = 20i64;
        let one_minus_q =
            QSeries::from_terms(n * UNIT, [(0, ratio(1, 1)), (UNIT, ratio(-1, 1))]);
        let product = one_minus_q.mul(&geometric(n));
        assert_eq!(product.coeff(0), BigRational::one());
        for k in 1..=n - 1 {
            assert!(product.coeff(k * UNIT).is_zero(), "q^{k}");
        }
    }

    #[test]
    fn recip_of_geometric_factor() {
        let n = 24i64;
        let one_minus_q =
            QSeries::from_terms(n * UNIT, [(0, ratio(1, 1)), (UNIT, ratio(-1, 1))]);
        let r = one_minus_q.recip().unwrap();
        for k in 0..=n - 1 {
            assert_eq!(r.coeff(k * UNIT), BigRational::one(), "q^{k}");
        }
        let check = r.mul(&one_minus_q);
        assert_eq!(check.coeff(0), BigRational::one());
        for k in 1..=n - 2 {
            assert!(check.coeff(k * UNIT).is_zero());
        }
    }

    #[test]
    fn recip_requires_a_leading_term() {
        assert!(QSeries::zero(100).recip().is_err());
    }

    #[test]
    fn recip_handles_negative_leading_exponent() {
        // a = q^{-1}(1 - q), recip = q(1 + q + q^2 + ...).
        let a = QSeries::from_terms(10 * UNIT, [(-UNIT, ratio(1, 1)), (0, ratio(-1, 1))]);
        let r = a.recip().unwrap();
        assert_eq!(r.leading(), Some(UNIT));
        assert_eq!(r.coeff(2 * UNIT), BigRational::one());
    }

    #[test]
    fn mul_truncation_is_pessimistic() {
        // a known through q^2, leading q^1: a*a is known through q^3 only.
        let a = QSeries::from_terms(2 * UNIT, [(UNIT, ratio(1, 1))]);
        let sq = a.mul(&a);
        assert_eq!(sq.trunc(), 3 * UNIT);
    }

    #[test]
    fn coeffwise_leq_on_half_lattice() {
        let a = QSeries::from_terms(100, [(24, ratio(1, 1))]);
        let b = QSeries::from_terms(100, [(24, ratio(1, 1)), (48, ratio(5, 1))]);
        assert!(a.coeffwise_leq(&b));
        assert!(!b.coeffwise_leq(&a));
        assert!(a.coeffwise_leq(&a));
    }

    #[test]
    fn exponent_formatting() {
        assert_eq!(QSeries::format_exponent(-1), "-1/48");
        assert_eq!(QSeries::format_exponent(2), "1/24");
        assert_eq!(QSeries::format_exponent(24), "1/2");
        assert_eq!(QSeries::format_exponent(96), "2");
        assert_eq!(QSeries::format_exponent(0), "0");
    }

    #[test]
    fn csv_round_trip_preserves_terms() {
        let s = QSeries::from_terms(
            5 * UNIT,
            [(-UNIT, ratio(1, 1)), (0, ratio(-3, 7)), (2 * UNIT, ratio(21493760, 1))],
        );
        let back = QSeries::from_csv(&s.to_csv()).unwrap();
        for (i, c) in s.terms() {
            assert_eq!(&back.coeff(i), c);
        }
        // Dense output walks the integer lattice, zeros included.
        let csv = s.to_csv();
        assert!(csv.contains("\n0,-3/7\n"));
        assert!(csv.contains("\n1,0\n"));
    }
}
