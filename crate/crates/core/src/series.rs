//! Named q-expansions: Dedekind eta, Jacobi thetas, the Eisenstein series
//! E4, the J-function by two independent routes, Ising characters, code-VOA
//! and induced-module characters, and the series entering the character
//! inequality chain.
//!
//! Everything returns a [`QSeries`] on the (1/48)-lattice, exact through
//! the requested integer order. The J-function is assembled both as
//! `θ_{D24+}/η^24 - 1128` and as `E4^3/η^24 - 744`; the two expansions must
//! agree exactly, and [`j_function`] fails with an inconsistency error if
//! they ever differ.

use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::One;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::modules::{ModuleLabel, ModuleSystem};
use crate::qseries::{ratio, QSeries, UNIT};
use crate::weights::WeightDistribution;
use crate::word::BinaryWord;

fn big(u: &num_bigint::BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from_biguint(Sign::Plus, u.clone()))
}

/// Product of factors `1 + c·q^(idx/48)` for the given `(idx, c)` stream,
/// consumed while `idx <= trunc`.
fn product<I: Iterator<Item = (i64, BigRational)>>(trunc: i64, factors: I) -> QSeries {
    let mut acc = QSeries::one(trunc);
    for (idx, c) in factors {
        if idx > trunc {
            break;
        }
        let factor = QSeries::from_terms(trunc, [(0, BigRational::one()), (idx, c)]);
        acc = acc.mul(&factor).truncated(trunc);
    }
    acc
}

/// `∏_{n>=from} (1 - q^n)` through the truncation index.
fn prod_one_minus_qn(trunc: i64, from: i64) -> QSeries {
    product(trunc, (from..).map(|n| (n * UNIT, ratio(-1, 1))))
}

/// `∏_{n>=from} (1 + q^n)`.
fn prod_one_plus_qn(trunc: i64, from: i64) -> QSeries {
    product(trunc, (from..).map(|n| (n * UNIT, ratio(1, 1))))
}

/// `∏_{n>=0} (1 ± q^(n+1/2))`.
fn prod_half_odd(trunc: i64, sign: i64) -> QSeries {
    product(trunc, (0..).map(|n| (n * UNIT + UNIT / 2, ratio(sign, 1))))
}

/// Dedekind eta: `η(q) = q^{1/24} ∏_{n>=1} (1 - q^n)`, exact through
/// `q^order`.
pub fn eta(order: i64) -> QSeries {
    let trunc = order * UNIT;
    prod_one_minus_qn(trunc, 1).shift(2).truncated(trunc)
}

/// The three Jacobi theta nullwerte `(θ2, θ3, θ4)`:
/// `θ2 = Σ q^((k+1/2)^2/2)`, `θ3 = Σ q^(k^2/2)`, `θ4 = Σ (-1)^k q^(k^2/2)`,
/// summed over all integers `k`. All exponents are multiples of 1/8.
pub fn jacobi_thetas(order: i64) -> (QSeries, QSeries, QSeries) {
    let trunc = order * UNIT;
    let mut t2 = QSeries::zero(trunc);
    let mut t3 = QSeries::from_terms(trunc, [(0, ratio(1, 1))]);
    let mut t4 = t3.clone();
    for k in 1i64.. {
        // k^2/2 in lattice units.
        let idx = 24 * k * k;
        let odd_idx = 6 * (2 * k - 1) * (2 * k - 1);
        let mut progress = false;
        if idx <= trunc {
            let term = QSeries::monomial(idx, ratio(2, 1), trunc);
            t3 = t3.add(&term);
            t4 = t4.add(&QSeries::monomial(idx, ratio(if k % 2 == 0 { 2 } else { -2 }, 1), trunc));
            progress = true;
        }
        if odd_idx <= trunc {
            // (k-1/2)^2/2 for k and 1-k together give coefficient 2.
            t2 = t2.add(&QSeries::monomial(odd_idx, ratio(2, 1), trunc));
            progress = true;
        }
        if !progress {
            break;
        }
    }
    (t2, t3, t4)
}

/// Theta series of the even unimodular 24-dimensional lattice built from
/// the D24 root lattice and a spinor glue vector:
/// `(θ2^24 + θ3^24 + θ4^24)/2`. Constant term 1, and 1104 norm-2 vectors.
pub fn theta_d24plus(order: i64) -> QSeries {
    let trunc = order * UNIT;
    let (t2, t3, t4) = jacobi_thetas(order + 1);
    let sum = t2.pow(24).add(&t3.pow(24)).add(&t4.pow(24));
    sum.scale(&ratio(1, 2)).truncated(trunc)
}

/// Eisenstein series `E4 = 1 + 240 Σ σ3(n) q^n`.
pub fn eisenstein_e4(order: i64) -> QSeries {
    let trunc = order * UNIT;
    let mut terms = vec![(0i64, BigRational::one())];
    for n in 1..=order {
        let sigma3: i64 = (1..=n).filter(|d| n % d == 0).map(|d| d * d * d).sum();
        terms.push((n * UNIT, ratio(240 * sigma3, 1)));
    }
    QSeries::from_terms(trunc, terms)
}

/// J by the lattice route: `θ_{D24+}/η^24 - 1128`.
pub fn j_route_theta(order: i64) -> Result<QSeries> {
    let trunc = order * UNIT;
    let pad = order + 3;
    let num = theta_d24plus(pad);
    let den = eta(pad).pow(24);
    let j = num.mul(&den.recip()?).sub(&QSeries::monomial(0, ratio(1128, 1), pad * UNIT));
    j.assert_known_through(trunc)?;
    Ok(j.truncated(trunc))
}

/// J by the Eisenstein route: `E4^3/η^24 - 744`.
pub fn j_route_eisenstein(order: i64) -> Result<QSeries> {
    let trunc = order * UNIT;
    let pad = order + 3;
    let num = eisenstein_e4(pad).pow(3);
    let den = eta(pad).pow(24);
    let j = num.mul(&den.recip()?).sub(&QSeries::monomial(0, ratio(744, 1), pad * UNIT));
    j.assert_known_through(trunc)?;
    Ok(j.truncated(trunc))
}

/// The J-function, computed by both routes. The routes must agree exactly;
/// a mismatch is an internal inconsistency and fails loudly.
pub fn j_function(order: i64) -> Result<QSeries> {
    let a = j_route_theta(order)?;
    let b = j_route_eisenstein(order)?;
    if a != b {
        return Err(Error::Inconsistency(
            "the two J-function routes disagree; the series kernel is broken".into(),
        ));
    }
    Ok(a)
}

/// Highest weight of an Ising (c = 1/2) module slot.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IsingWeight {
    /// h = 0.
    Zero,
    /// h = 1/2.
    Half,
    /// h = 1/16.
    Sixteenth,
}

/// Ising character `ch L(1/2, h)`:
///
/// * h = 0:    `q^{-1/48} (∏(1+q^{n+1/2}) + ∏(1-q^{n+1/2})) / 2`
/// * h = 1/2:  `q^{-1/48} (∏(1+q^{n+1/2}) - ∏(1-q^{n+1/2})) / 2`
/// * h = 1/16: `q^{1/24} ∏_{n>=1}(1+q^n)`
pub fn ising_char(h: IsingWeight, order: i64) -> QSeries {
    let trunc = order * UNIT;
    let padded = trunc + UNIT;
    match h {
        IsingWeight::Zero | IsingWeight::Half => {
            let plus = prod_half_odd(padded, 1);
            let minus = prod_half_odd(padded, -1);
            let combined = match h {
                IsingWeight::Zero => plus.add(&minus),
                _ => plus.sub(&minus),
            };
            combined.scale(&ratio(1, 2)).shift(-1).truncated(trunc)
        }
        IsingWeight::Sixteenth => prod_one_plus_qn(padded, 1).shift(2).truncated(trunc),
    }
}

/// Power tables `base^0 .. base^max`.
fn power_table(base: &QSeries, max: u32, trunc: i64) -> Vec<QSeries> {
    let mut table = Vec::with_capacity(max as usize + 1);
    table.push(QSeries::one(trunc));
    for k in 1..=max {
        let next = table[k as usize - 1].mul(base);
        table.push(next);
    }
    table
}

/// The untwisted sector profile `Σ_w A_w · ch_0^{n-w} · ch_{1/2}^w` for a
/// weight distribution on `n` slots.
fn untwisted_profile(dist: &WeightDistribution, order: i64) -> QSeries {
    let n = dist.length();
    let trunc = order * UNIT;
    // ch_0 has leading exponent -1/48, so an n-fold product loses up to
    // n-1 lattice units of truncation; pad accordingly.
    let pad = trunc + n as i64 + 2 * UNIT;
    let ch0 = ising_char(IsingWeight::Zero, pad / UNIT + 1);
    let chh = ising_char(IsingWeight::Half, pad / UNIT + 1);
    let p0 = power_table(&ch0, n, pad);
    let ph = power_table(&chh, n, pad);
    let mut acc = QSeries::zero(pad);
    for (w, count) in dist.support() {
        let term = p0[(n - w) as usize].mul(&ph[w as usize]).scale(&big(count));
        acc = acc.add(&term);
    }
    acc.truncated(trunc)
}

/// Character of the code VOA attached to a weight distribution:
/// `Σ_w A_w · ch_0^{n-w} · ch_{1/2}^w`.
pub fn code_voa_character(dist: &WeightDistribution, order: i64) -> Result<QSeries> {
    let s = untwisted_profile(dist, order);
    s.assert_known_through(order * UNIT)?;
    Ok(s)
}

/// Character of the irreducible module with the given label:
///
/// ```text
///   2^(dim C_β - |β|/2) · ch_{1/16}^{|β|} · Σ_w B_w ch_0^{(n-|β|)-w} ch_{1/2}^w
/// ```
///
/// with `B` the weight distribution of the gamma coset projected away from
/// the tau-word support. Before the formula is used on any system other
/// than the Hamming one, the Hamming oracle gate (formula against direct
/// summand enumeration on all 32 integral/half-integral-weight labels)
/// must pass; the gate runs once per process and is cached.
pub fn induced_module_character(
    sys: &ModuleSystem,
    label: &ModuleLabel,
    order: i64,
) -> Result<QSeries> {
    if sys.code().length() != 8 {
        hamming_induction_gate()?;
    }
    induced_character_formula(sys, label, order)
}

fn induced_character_formula(
    sys: &ModuleSystem,
    label: &ModuleLabel,
    order: i64,
) -> Result<QSeries> {
    let trunc = order * UNIT;
    let beta_weight = label.beta().weight();
    let mult = sys.sector_multiplicity(label)?;
    let coset = sys.sector_coset_distribution(label)?;
    let profile = untwisted_profile(&coset, order + 1);
    let ch16 = ising_char(IsingWeight::Sixteenth, order + 2);
    let twisted = ch16.pow(beta_weight);
    let out = twisted.mul(&profile).scale(&big(&mult));
    out.assert_known_through(trunc)?;
    Ok(out.truncated(trunc))
}

/// Independent route for the induced-module character: enumerate a
/// transversal of the maximal self-orthogonal subcode `H_β` inside `C` and
/// sum the frame-module characters slot by slot. No multiplicity formula
/// and no coset distribution enter; multiplicities emerge from repeated
/// summands. Capped at `2^16` summands.
pub fn induced_module_character_by_summands(
    sys: &ModuleSystem,
    label: &ModuleLabel,
    order: i64,
) -> Result<QSeries> {
    let trunc = order * UNIT;
    let beta = label.beta();
    let n = sys.code().length();
    // H_β embedded on the tau support, then a transversal of it in C.
    let cbeta = crate::structure::support_restricted_dual(sys.dual(), &beta)?;
    let h = crate::structure::max_self_orthogonal_subcode(&cbeta);
    let steps = sys.code().dim() - h.dim();
    if steps > 16 {
        return Err(Error::Capacity(format!(
            "direct summand enumeration over 2^{steps} cosets exceeds the 2^16 cap"
        )));
    }
    let mut reps_basis: Vec<BinaryWord> = Vec::new();
    let mut span = h.clone();
    for row in sys.code().basis() {
        if !span.reduce(*row).is_zero() {
            reps_basis.push(*row);
            span = LinearCode::from_rows(n, &[span.basis(), &[*row]].concat())?;
        }
    }
    let transversal = LinearCode::from_rows(n, &reps_basis)?;
    let gamma = sys.gamma_representative(label.gamma_class());
    let pad = order + 2;
    let ch0 = ising_char(IsingWeight::Zero, pad);
    let chh = ising_char(IsingWeight::Half, pad);
    let ch16 = ising_char(IsingWeight::Sixteenth, pad);
    let mut acc = QSeries::zero(pad * UNIT);
    for delta in transversal.codewords() {
        let mut summand = QSeries::one(pad * UNIT);
        for i in 0..n {
            let factor = if beta.bit(i) {
                &ch16
            } else if gamma.bit(i) ^ delta.bit(i) {
                &chh
            } else {
                &ch0
            };
            summand = summand.mul(factor);
        }
        acc = acc.add(&summand);
    }
    acc.assert_known_through(trunc)?;
    Ok(acc.truncated(trunc))
}

/// Once-per-process oracle gate: on the Hamming system, the closed formula
/// and the direct summand sum must agree exactly for every label of
/// integral or half-integral weight (tau-word 0 or all-ones).
pub fn hamming_induction_gate() -> Result<()> {
    static GATE: OnceLock<std::result::Result<(), Error>> = OnceLock::new();
    GATE.get_or_init(|| {
        let sys = ModuleSystem::hamming8();
        let order = 6;
        for beta in [BinaryWord::zero(8), BinaryWord::ones(8)] {
            for class in 0..16u32 {
                let label = sys.label_from_class(&beta, class)?;
                let formula = induced_character_formula(&sys, &label, order)?;
                let direct = induced_module_character_by_summands(&sys, &label, order)?;
                if formula != direct {
                    return Err(Error::Inconsistency(format!(
                        "induced-character formula disagrees with direct enumeration \
                         on the Hamming label ({beta}, {class})"
                    )));
                }
            }
        }
        Ok(())
    })
    .clone()
}

/// Sum of all sector characters, one per tau-word, each taken on an
/// admissible projected coset: integral lowest weight, at least 2 for
/// nonzero tau-words (no vacuum competitors and no weight-1 states).
///
/// The sector character depends on the gamma class only through its
/// projected coset, and for the length-48 system each nonzero tau-word
/// admits exactly one coset passing the constraint, so this sum is
/// independent of which admissible class represents it. It reproduces the
/// J-function exactly; together with the additive-assignment obstruction
/// (see the search module) this pins where the holomorphic decomposition
/// lives.
pub fn sector_character_sum(sys: &ModuleSystem, order: i64) -> Result<QSeries> {
    use num_rational::Rational64;
    let classes = 1u32 << sys.class_bits();
    let mut total = QSeries::zero(order * UNIT);
    for beta in sys.dual().codewords() {
        let label = if beta.is_zero() {
            sys.vacuum()
        } else {
            let mut chosen = None;
            for class in 0..classes {
                let label = sys.label_from_class(&beta, class)?;
                let lw = sys.lowest_weight(&label)?;
                if lw.is_integer() && lw >= Rational64::from_integer(2) {
                    chosen = Some(label);
                    break;
                }
            }
            chosen.ok_or_else(|| {
                Error::Inconsistency(format!("tau-word {beta} has no admissible coset"))
            })?
        };
        total = total.add(&induced_module_character(sys, &label, order)?);
    }
    Ok(total)
}

/// The two length-48 fermionic products of the inequality chain:
/// `NS = q^{-1} ∏_{n>=0}(1+q^{n+1/2})^48` and
/// `R = q^{-1} ∏_{n>=1}(1+q^n)^48`.
pub fn fermionic_products(order: i64) -> (QSeries, QSeries) {
    let trunc = order * UNIT;
    let pad = trunc + 2 * UNIT;
    let ns = prod_half_odd(pad, 1).pow(48).shift(-UNIT).truncated(trunc);
    let r = prod_one_plus_qn(pad, 1).pow(48).shift(-UNIT).truncated(trunc);
    (ns, r)
}

/// The tensor-factor lower bound on the character of a frame subalgebra:
///
/// ```text
///   f = q^{-1} 2^{-47} (∏(1+q^{n+1/2}) + ∏(1-q^{n+1/2}))^47 ∏_{n>=2}(1-q^n)^{-1}
/// ```
pub fn f_bound(order: i64) -> Result<QSeries> {
    let trunc = order * UNIT;
    let pad = trunc + 2 * UNIT;
    let sym = prod_half_odd(pad, 1).add(&prod_half_odd(pad, -1));
    let tail = prod_one_minus_qn(pad, 2).recip()?;
    let f = sym
        .pow(47)
        .mul(&tail)
        .scale(&BigRational::new(BigInt::one(), BigInt::one() << 47))
        .shift(-UNIT);
    f.assert_known_through(trunc)?;
    Ok(f.truncated(trunc))
}

/// The comparison series `q^{-1} 2^{-47} ∏(1+q^{n+1/2})^47 ∏_{n>=2}(1-q^n)^{-1}`
/// that bounds [`f_bound`] from below as a function on (0,1).
///
/// The bound holds pointwise on (0,1) but NOT coefficientwise: at `q^{-1/2}`
/// this series has coefficient `47/2^47` while `f` has 0, and at `q^0` it
/// has `1081/2^47` against 0. See the inequality suite for the pointwise
/// verification.
pub fn f_bound_paper_lower(order: i64) -> Result<QSeries> {
    let trunc = order * UNIT;
    let pad = trunc + 2 * UNIT;
    let tail = prod_one_minus_qn(pad, 2).recip()?;
    let g = prod_half_odd(pad, 1)
        .pow(47)
        .mul(&tail)
        .scale(&BigRational::new(BigInt::one(), BigInt::one() << 47))
        .shift(-UNIT);
    g.assert_known_through(trunc)?;
    Ok(g.truncated(trunc))
}
