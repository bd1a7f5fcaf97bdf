//! Weight distributions, the MacWilliams transform, and coset weight data.
//!
//! Counts are arbitrary-precision integers throughout; there is no floating
//! point anywhere in this module. Small codes are enumerated directly in
//! Gray-code order. For a large code with a small dual, coset counts come
//! from the dual side via the Krawtchouk transform
//!
//! ```text
//!   A_w(γ + C) = 2^(dim - n) · Σ_v K_w(v; n) · Σ_{u in C^⊥, |u| = v} (-1)^{<γ,u>}
//! ```
//!
//! which reduces to the classical MacWilliams identity at γ = 0.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::word::BinaryWord;

/// Enumeration cap: codes with more than `2^ENUM_CAP_DIM` words are not
/// enumerated directly.
pub const ENUM_CAP_DIM: u32 = 28;

/// Cap on the syndrome space walked by the coset-leader search.
pub const SYNDROME_CAP_DIM: u32 = 20;

/// Counts `A_0..A_n` of words by Hamming weight, for a code or a coset.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightDistribution {
    length: u32,
    counts: Vec<BigUint>,
}

impl WeightDistribution {
    /// Build from explicit counts; `counts.len()` must be `length + 1`.
    pub fn from_counts(length: u32, counts: Vec<BigUint>) -> Result<Self> {
        if counts.len() != length as usize + 1 {
            return Err(Error::Input(format!(
                "expected {} counts for length {length}, got {}",
                length + 1,
                counts.len()
            )));
        }
        Ok(WeightDistribution { length, counts })
    }

    /// Exact weight counts of a code by direct enumeration.
    /// Dimension is capped at [`ENUM_CAP_DIM`]; above it, use
    /// [`WeightDistribution::macwilliams`] on the dual distribution.
    pub fn of_code(code: &LinearCode) -> Result<Self> {
        if code.dim() > ENUM_CAP_DIM {
            return Err(Error::Capacity(format!(
                "weight enumeration over 2^{} codewords exceeds the 2^{ENUM_CAP_DIM} cap; \
                 enumerate the dual and apply the MacWilliams transform instead",
                code.dim()
            )));
        }
        let mut counts = vec![BigUint::zero(); code.length() as usize + 1];
        for w in code.codewords() {
            counts[w.weight() as usize] += 1u32;
        }
        WeightDistribution::from_counts(code.length(), counts)
    }

    /// Exact weight counts of the coset `shift + code`. Enumerates the code
    /// directly when `dim <= ENUM_CAP_DIM`; otherwise, when the dual is
    /// small, uses the Krawtchouk transform over the dual with the signs
    /// `(-1)^{<shift,u>}`.
    pub fn of_coset(code: &LinearCode, shift: &BinaryWord) -> Result<Self> {
        if shift.len() != code.length() {
            return Err(Error::Input(format!(
                "coset shift length {} does not match code length {}",
                shift.len(),
                code.length()
            )));
        }
        let n = code.length();
        if code.dim() <= ENUM_CAP_DIM {
            let mut counts = vec![BigUint::zero(); n as usize + 1];
            for w in code.codewords() {
                counts[(w ^ *shift).weight() as usize] += 1u32;
            }
            return WeightDistribution::from_counts(n, counts);
        }
        let codim = n - code.dim();
        if codim > ENUM_CAP_DIM {
            return Err(Error::Capacity(format!(
                "coset enumeration needs dim <= {ENUM_CAP_DIM} or codim <= {ENUM_CAP_DIM}; \
                 this code has dim {} and codim {codim}",
                code.dim()
            )));
        }
        // Signed dual weight profile: delta_v = sum over dual words of
        // weight v of (-1)^{<shift,u>}.
        let dual = code.dual();
        let mut delta = vec![BigInt::zero(); n as usize + 1];
        for u in dual.codewords() {
            let v = u.weight() as usize;
            if shift.dot(&u) == 0 {
                delta[v] += 1;
            } else {
                delta[v] -= 1;
            }
        }
        let binom = BinomialTable::new(n);
        let scale = BigInt::one() << codim;
        let mut counts = Vec::with_capacity(n as usize + 1);
        for w in 0..=n {
            let mut acc = BigInt::zero();
            for v in 0..=n {
                if !delta[v as usize].is_zero() {
                    acc += &delta[v as usize] * binom.krawtchouk(w, v);
                }
            }
            let (q, r) = num_integer::div_rem(acc, scale.clone());
            if !r.is_zero() || q.is_negative() {
                return Err(Error::Inconsistency(
                    "coset transform produced a non-integer or negative count".into(),
                ));
            }
            counts.push(q.to_biguint().expect("checked non-negative"));
        }
        WeightDistribution::from_counts(n, counts)
    }

    /// MacWilliams transform: the weight distribution of the dual of a code
    /// with this distribution and the given dimension,
    /// `A'_w = 2^{-dim} Σ_j A_j K_w(j; n)`.
    ///
    /// Rejects inputs whose transform is not a non-negative integer vector;
    /// such a distribution cannot belong to a linear code.
    pub fn macwilliams(&self, dim: u32) -> Result<WeightDistribution> {
        let n = self.length;
        let binom = BinomialTable::new(n);
        let scale = BigInt::one() << dim;
        let mut counts = Vec::with_capacity(n as usize + 1);
        for w in 0..=n {
            let mut acc = BigInt::zero();
            for j in 0..=n {
                let aj = &self.counts[j as usize];
                if !aj.is_zero() {
                    acc += BigInt::from_biguint(Sign::Plus, aj.clone()) * binom.krawtchouk(w, j);
                }
            }
            let (q, r) = num_integer::div_rem(acc, scale.clone());
            if !r.is_zero() || q.is_negative() {
                return Err(Error::Inconsistency(format!(
                    "MacWilliams transform is not a valid distribution at weight {w}; \
                     the input cannot be the weight distribution of a [{}x{dim}] code",
                    self.length
                )));
            }
            counts.push(q.to_biguint().expect("checked non-negative"));
        }
        WeightDistribution::from_counts(n, counts)
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    /// Count at one weight.
    pub fn count(&self, w: u32) -> &BigUint {
        &self.counts[w as usize]
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// Total number of words, `Σ_w A_w`.
    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Smallest weight with a nonzero count, if any.
    pub fn min_weight(&self) -> Option<u32> {
        (0..=self.length).find(|&w| !self.counts[w as usize].is_zero())
    }

    /// Smallest nonzero weight with a nonzero count, if any.
    pub fn min_nonzero_weight(&self) -> Option<u32> {
        (1..=self.length).find(|&w| !self.counts[w as usize].is_zero())
    }

    /// The weights with nonzero counts, as `(weight, count)` pairs.
    pub fn support(&self) -> impl Iterator<Item = (u32, &BigUint)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| (w as u32, c))
    }
}

/// Pascal triangle with exact entries, plus Krawtchouk values built from it.
pub struct BinomialTable {
    n: u32,
    rows: Vec<Vec<BigInt>>,
}

impl BinomialTable {
    pub fn new(n: u32) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n as usize + 1);
        for i in 0..=n as usize {
            let mut row = vec![BigInt::one(); i + 1];
            for k in 1..i {
                row[k] = &rows[i - 1][k - 1] + &rows[i - 1][k];
            }
            rows.push(row);
        }
        BinomialTable { n, rows }
    }

    /// `C(m, k)`, zero outside the triangle.
    pub fn choose(&self, m: u32, k: u32) -> BigInt {
        if k > m || m > self.n {
            BigInt::zero()
        } else {
            self.rows[m as usize][k as usize].clone()
        }
    }

    /// Binary Krawtchouk polynomial value
    /// `K_w(j; n) = Σ_i (-1)^i C(j, i) C(n - j, w - i)`.
    pub fn krawtchouk(&self, w: u32, j: u32) -> BigInt {
        let n = self.n;
        let mut acc = BigInt::zero();
        for i in 0..=w.min(j) {
            if w - i > n - j {
                continue;
            }
            let term = self.choose(j, i) * self.choose(n - j, w - i);
            if i % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }
}

/// Minimum weight over the coset `shift + code` (the coset leader weight).
/// Zero exactly when `shift` lies in the code.
///
/// Runs a breadth-first search over the syndrome graph when the syndrome
/// space is at most `2^SYNDROME_CAP_DIM`; otherwise falls back to direct
/// enumeration of the code when that side is small.
pub fn coset_min_weight(code: &LinearCode, shift: &BinaryWord) -> Result<u32> {
    if shift.len() != code.length() {
        return Err(Error::Input(format!(
            "coset shift length {} does not match code length {}",
            shift.len(),
            code.length()
        )));
    }
    let n = code.length();
    let codim = n - code.dim();
    if codim <= SYNDROME_CAP_DIM {
        let table = coset_leader_weights(code)?;
        let dual_basis: Vec<BinaryWord> = code.dual().basis().to_vec();
        return Ok(table[syndrome_index(&dual_basis, shift)] as u32);
    }
    if code.dim() <= ENUM_CAP_DIM {
        let best = code
            .codewords()
            .map(|c| (c ^ *shift).weight())
            .min()
            .expect("a code always contains the zero word");
        return Ok(best);
    }
    Err(Error::Capacity(format!(
        "coset leader search needs codim <= {SYNDROME_CAP_DIM} or dim <= {ENUM_CAP_DIM}; \
         this code has dim {} and codim {codim}",
        code.dim()
    )))
}

/// Coset leader weights for every syndrome, indexed by the syndrome bits
/// against the dual RREF basis. Entry 0 belongs to the code itself.
pub fn coset_leader_weights(code: &LinearCode) -> Result<Vec<u8>> {
    let n = code.length();
    let codim = n - code.dim();
    if codim > SYNDROME_CAP_DIM {
        return Err(Error::Capacity(format!(
            "syndrome space 2^{codim} exceeds the 2^{SYNDROME_CAP_DIM} cap"
        )));
    }
    let dual_basis: Vec<BinaryWord> = code.dual().basis().to_vec();
    let columns: Vec<usize> = (0..n)
        .map(|i| syndrome_index(&dual_basis, &BinaryWord::unit(n, i)))
        .collect();
    let size = 1usize << codim;
    let mut dist = vec![u8::MAX; size];
    let mut frontier = vec![0usize];
    dist[0] = 0;
    let mut depth = 0u8;
    while !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for &s in &frontier {
            for &c in &columns {
                let t = s ^ c;
                if dist[t] == u8::MAX {
                    dist[t] = depth;
                    next.push(t);
                }
            }
        }
        frontier = next;
    }
    Ok(dist)
}

/// Syndrome of a word against an ordered family of parity checks, packed
/// little-endian: bit `i` is the inner product with `checks[i]`.
pub fn syndrome_index(checks: &[BinaryWord], w: &BinaryWord) -> usize {
    let mut s = 0usize;
    for (i, c) in checks.iter().enumerate() {
        s |= (c.dot(w) as usize) << i;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::hamming8;

    fn w(s: &str) -> BinaryWord {
        BinaryWord::parse(s).unwrap()
    }

    #[test]
    fn zero_code_distribution() {
        let d = WeightDistribution::of_code(&LinearCode::zero(5)).unwrap();
        assert_eq!(d.count(0), &BigUint::one());
        assert_eq!(d.total(), BigUint::one());
    }

    #[test]
    fn hamming8_distribution_by_enumeration() {
        let d = WeightDistribution::of_code(&hamming8()).unwrap();
        let expect = [(0u32, 1u32), (4, 14), (8, 1)];
        for (wt, c) in expect {
            assert_eq!(d.count(wt), &BigUint::from(c), "weight {wt}");
        }
        assert_eq!(d.total(), BigUint::from(16u32));
    }

    #[test]
    fn macwilliams_fixes_the_self_dual_repetition_code() {
        // {00, 11} is self-dual in F_2^2.
        let counts = vec![BigUint::one(), BigUint::zero(), BigUint::one()];
        let d = WeightDistribution::from_counts(2, counts).unwrap();
        assert_eq!(d.macwilliams(1).unwrap(), d);
    }

    #[test]
    fn macwilliams_fixes_hamming8() {
        let d = WeightDistribution::of_code(&hamming8()).unwrap();
        assert_eq!(d.macwilliams(4).unwrap(), d);
    }

    #[test]
    fn macwilliams_rejects_invalid_distribution() {
        // {A_1 = 2} has no zero word, so it is not a code distribution; the
        // transform goes negative at weight 2.
        let counts = vec![BigUint::zero(), BigUint::from(2u32), BigUint::zero()];
        let d = WeightDistribution::from_counts(2, counts).unwrap();
        assert!(matches!(d.macwilliams(1), Err(Error::Inconsistency(_))));
    }

    #[test]
    fn coset_distribution_of_hamming8_unit_shift() {
        // Oracle: direct enumeration of the 16 coset words.
        let h = hamming8();
        let nu1 = BinaryWord::unit(8, 0);
        let d = WeightDistribution::of_coset(&h, &nu1).unwrap();
        let mut direct = vec![0u32; 9];
        for c in h.codewords() {
            direct[(c ^ nu1).weight() as usize] += 1;
        }
        for wt in 0..=8u32 {
            assert_eq!(d.count(wt), &BigUint::from(direct[wt as usize]), "weight {wt}");
        }
        assert_eq!(direct, [0, 1, 0, 7, 0, 7, 0, 1, 0]);
    }

    #[test]
    fn coset_transform_route_agrees_with_enumeration() {
        // Random-ish small code checked through both routes by forcing the
        // transform path via a shim: transform needs dim > cap, so instead
        // compare the transform formula against enumeration directly.
        let code = LinearCode::from_rows(
            10,
            &[w("1101001000"), w("0110100100"), w("0011010010"), w("0001101001")],
        )
        .unwrap();
        let shift = w("1000000001");
        let direct = WeightDistribution::of_coset(&code, &shift).unwrap();
        let transformed = coset_by_dual_transform(&code, &shift);
        assert_eq!(direct, transformed);
    }

    /// Independent implementation of the dual-side coset transform, used as
    /// the cross-check oracle above.
    fn coset_by_dual_transform(code: &LinearCode, shift: &BinaryWord) -> WeightDistribution {
        let n = code.length();
        let dual = code.dual();
        let mut delta = vec![BigInt::zero(); n as usize + 1];
        for u in dual.codewords() {
            if shift.dot(&u) == 0 {
                delta[u.weight() as usize] += 1;
            } else {
                delta[u.weight() as usize] -= 1;
            }
        }
        let binom = BinomialTable::new(n);
        let scale = BigInt::one() << (n - code.dim());
        let counts: Vec<BigUint> = (0..=n)
            .map(|wt| {
                let mut acc = BigInt::zero();
                for v in 0..=n {
                    acc += &delta[v as usize] * binom.krawtchouk(wt, v);
                }
                (acc / &scale).to_biguint().unwrap()
            })
            .collect();
        WeightDistribution::from_counts(n, counts).unwrap()
    }

    #[test]
    fn coset_min_weight_basics() {
        let h = hamming8();
        for c in h.codewords() {
            assert_eq!(coset_min_weight(&h, &c).unwrap(), 0);
        }
        assert_eq!(coset_min_weight(&h, &BinaryWord::unit(8, 0)).unwrap(), 1);
        // Weight-2 shifts are distance 2 from the code (minimum distance 4).
        assert_eq!(coset_min_weight(&h, &w("11000000")).unwrap(), 2);
    }

    #[test]
    fn coset_min_weight_falls_back_to_enumeration_for_wide_codes() {
        // dim 3, codim 45: the syndrome table is out of reach but the
        // code side enumerates.
        let rows = [
            BinaryWord::parse("111000000000000000000000000000000000000000000111").unwrap(),
            BinaryWord::parse("000111000000000000000000000000000000000000000111").unwrap(),
            BinaryWord::parse("000000111000000000000000000000000000000000000111").unwrap(),
        ];
        let code = LinearCode::from_rows(48, &rows).unwrap();
        let shift = BinaryWord::unit(48, 47);
        assert_eq!(coset_min_weight(&code, &shift).unwrap(), 1);
        assert_eq!(coset_min_weight(&code, &rows[0]).unwrap(), 0);
    }

    #[test]
    fn enumeration_cap_directs_to_macwilliams() {
        let big = crate::catalog::moonshine_c();
        let err = WeightDistribution::of_code(&big).unwrap_err();
        match err {
            Error::Capacity(msg) => assert!(msg.contains("MacWilliams")),
            other => panic!("expected capacity error, got {other:?}"),
        }
    }

    #[test]
    fn coset_of_a_codeword_is_the_code_distribution() {
        let h = hamming8();
        let d = WeightDistribution::of_code(&h).unwrap();
        for c in h.codewords() {
            assert_eq!(WeightDistribution::of_coset(&h, &c).unwrap(), d);
        }
    }

    #[test]
    fn krawtchouk_row_sum_is_power_of_two() {
        // Σ_w K_w(j; n) = 2^n δ_{j,0} evaluated at j = 0 gives Σ_w C(n,w).
        let t = BinomialTable::new(12);
        let total: BigInt = (0..=12).map(|wt| t.krawtchouk(wt, 0)).sum();
        assert_eq!(total, BigInt::from(4096));
    }
}
