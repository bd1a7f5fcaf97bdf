//! Irreducible-module labels for a code VOA and their fusion group.
//!
//! For an even binary code `C` of length `n`, the irreducible modules of
//! the associated code VOA are labelled by pairs `(β, γ)`: a tau-word
//! `β ∈ C^⊥` recording which tensor slots carry the twisted Ising module,
//! and a class `γ` modulo `C`. Two pairs label isomorphic modules exactly
//! when the tau-words agree and the gamma classes agree, provided every
//! maximal self-orthogonal subcode `H_β` of
//! `C_β = {α ∈ C | supp α ⊆ supp β}` satisfies `(H_β)^{⊥_β} = H_β`
//! (equivalently `dim H_β = |β|/2`); label creation checks this and
//! rejects tau-words where the absorption fails.
//!
//! Gamma classes are stored as syndromes against a fixed ordered generator
//! family of `C^⊥`, making label equality O(1). Fusion is the coordinatewise
//! GF(2) sum on both components, so the labels form an elementary abelian
//! 2-group and every module is a simple current.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigUint;
use num_rational::Rational64;
use num_traits::One;

use crate::catalog;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::structure::{max_self_orthogonal_subcode, support_restricted_dual};
use crate::weights::{coset_leader_weights, syndrome_index, WeightDistribution};
use crate::word::BinaryWord;

/// A tau-word: the binary word marking the tensor slots of twisted type.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct TauWord(pub BinaryWord);

/// Slot weights of an untwisted/twisted frame decomposition: each entry is
/// 0, 1/2 or 1/16.
pub fn tau_word(h: &[Rational64]) -> Result<TauWord> {
    let zero = Rational64::new(0, 1);
    let half = Rational64::new(1, 2);
    let sixteenth = Rational64::new(1, 16);
    if h.len() > 64 {
        return Err(Error::Input(format!("{} slots exceed the 64-slot cap", h.len())));
    }
    let mut bits = 0u64;
    for (i, &v) in h.iter().enumerate() {
        if v == sixteenth {
            bits |= 1u64 << i;
        } else if v != zero && v != half {
            return Err(Error::Input(format!(
                "slot {i} has weight {v}, expected 0, 1/2 or 1/16"
            )));
        }
    }
    Ok(TauWord(BinaryWord::from_bits(h.len() as u32, bits)))
}

/// An irreducible-module label `(β, γ mod C)`, with the gamma class held as
/// a packed syndrome. Labels are only comparable within one
/// [`ModuleSystem`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ModuleLabel {
    beta: BinaryWord,
    gamma_class: u32,
}

impl ModuleLabel {
    pub fn beta(&self) -> BinaryWord {
        self.beta
    }

    /// The gamma class as syndrome bits against the system's generator
    /// family of `C^⊥`.
    pub fn gamma_class(&self) -> u32 {
        self.gamma_class
    }

    pub fn tau(&self) -> TauWord {
        TauWord(self.beta)
    }

    /// Vacuum label `(0, 0)`.
    pub fn is_vacuum(&self) -> bool {
        self.beta.is_zero() && self.gamma_class == 0
    }
}

/// Per-tau-word data derived once and cached.
pub(crate) struct BetaData {
    /// Dimension of `C_β`.
    pub cbeta_dim: u32,
    /// Dimension of a maximal self-orthogonal subcode of `C_β`.
    pub h_dim: u32,
    /// `C` projected to the complement of `supp β`.
    pub proj: LinearCode,
    /// RREF basis of the dual of `proj` (parity checks for its cosets).
    pub proj_checks: Vec<BinaryWord>,
    /// Coset leader weight per syndrome of `proj`.
    pub leader: Vec<u8>,
}

/// The label calculus of a code VOA over an even code `C`.
pub struct ModuleSystem {
    code: LinearCode,
    dual: LinearCode,
    /// Ordered generator family of the dual defining gamma syndromes.
    dual_gens: Vec<BinaryWord>,
    /// Words `u_j` with `<u_j, dual_gens[i]> = δ_ij`; gamma representatives
    /// are sums of these.
    gamma_reps: Vec<BinaryWord>,
    beta_cache: Mutex<HashMap<BinaryWord, Arc<BetaData>>>,
}

impl ModuleSystem {
    /// Build the system for an even code, with gamma syndromes taken
    /// against the given ordered generator family of the dual (must be a
    /// basis of the dual). The codimension of `C` is capped at 20.
    pub fn with_dual_generators(code: LinearCode, dual_gens: Vec<BinaryWord>) -> Result<Self> {
        if !code.is_even() {
            return Err(Error::Input("module labels need an even code".into()));
        }
        let dual = code.dual();
        let t = dual.dim();
        if t > 20 {
            return Err(Error::Capacity(format!(
                "gamma class space 2^{t} exceeds the 2^20 cap"
            )));
        }
        let spanned = LinearCode::from_rows(code.length(), &dual_gens)?;
        if spanned != dual || dual_gens.len() != t as usize {
            return Err(Error::Input(
                "syndrome generators must be a basis of the dual code".into(),
            ));
        }
        let gamma_reps = pairing_dual_basis(&dual_gens, code.length())?;
        Ok(ModuleSystem {
            code,
            dual,
            dual_gens,
            gamma_reps,
            beta_cache: Mutex::new(HashMap::new()),
        })
    }

    /// Build the system with the dual's canonical RREF basis as the
    /// syndrome generators.
    pub fn new(code: LinearCode) -> Result<Self> {
        let dual_gens = code.dual().basis().to_vec();
        ModuleSystem::with_dual_generators(code, dual_gens)
    }

    /// The label system of the length-48 moonshine code pair, syndromes
    /// against the fixed generator rows of `D`.
    pub fn moonshine() -> Self {
        ModuleSystem::with_dual_generators(
            catalog::moonshine_c(),
            catalog::moonshine_d_rows().to_vec(),
        )
        .expect("the moonshine pair is a valid module system")
    }

    /// The label system of the Hamming code VOA, syndromes against the
    /// fixed generator rows of H8.
    pub fn hamming8() -> Self {
        ModuleSystem::with_dual_generators(
            catalog::hamming8(),
            catalog::hamming8_rows().to_vec(),
        )
        .expect("the Hamming code is a valid module system")
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn dual(&self) -> &LinearCode {
        &self.dual
    }

    pub fn dual_generators(&self) -> &[BinaryWord] {
        &self.dual_gens
    }

    /// Number of gamma syndrome bits (= codim of `C`).
    pub fn class_bits(&self) -> u32 {
        self.dual.dim()
    }

    /// The gamma syndrome of a word: bit `i` is `<gamma, dual_gens[i]>`.
    /// Constant on classes mod `C` because the generators lie in `C^⊥`.
    pub fn gamma_syndrome(&self, gamma: &BinaryWord) -> Result<u32> {
        if gamma.len() != self.code.length() {
            return Err(Error::Input(format!(
                "gamma length {} does not match code length {}",
                gamma.len(),
                self.code.length()
            )));
        }
        Ok(syndrome_index(&self.dual_gens, gamma) as u32)
    }

    /// A canonical representative of the gamma class with the given
    /// syndrome bits.
    pub fn gamma_representative(&self, class: u32) -> BinaryWord {
        let mut w = BinaryWord::zero(self.code.length());
        for (j, rep) in self.gamma_reps.iter().enumerate() {
            if (class >> j) & 1 == 1 {
                w = w ^ *rep;
            }
        }
        w
    }

    /// Canonical label for the pair `(beta, gamma)`. `beta` must lie in
    /// `C^⊥` and must admit a self-dual maximal self-orthogonal subcode of
    /// `C_β` (true for every tau-word of the moonshine system and for the
    /// integral/half-integral-weight Hamming labels).
    pub fn label(&self, beta: &BinaryWord, gamma: &BinaryWord) -> Result<ModuleLabel> {
        let class = self.gamma_syndrome(gamma)?;
        self.label_from_class(beta, class)
    }

    /// Label from a tau-word and explicit syndrome bits.
    pub fn label_from_class(&self, beta: &BinaryWord, class: u32) -> Result<ModuleLabel> {
        if !self.dual.contains(beta)? {
            return Err(Error::Input(format!(
                "tau-word {beta} does not lie in the dual code"
            )));
        }
        if class >= 1u32 << self.class_bits() {
            return Err(Error::Input(format!(
                "gamma class {class} out of range for {} syndrome bits",
                self.class_bits()
            )));
        }
        let data = self.beta_data(beta)?;
        if data.h_dim != beta.weight() / 2 {
            return Err(Error::Input(format!(
                "tau-word {beta} has no self-dual maximal self-orthogonal subcode \
                 (dim {} over support size {}), so gamma syndromes do not \
                 canonicalize its labels",
                data.h_dim,
                beta.weight()
            )));
        }
        Ok(ModuleLabel { beta: *beta, gamma_class: class })
    }

    /// Equivalence of labels: equal tau-words and equal gamma classes.
    pub fn is_equivalent(&self, a: &ModuleLabel, b: &ModuleLabel) -> bool {
        a == b
    }

    /// Fusion product: coordinatewise GF(2) sum of tau-words and gamma
    /// classes. Labels form an elementary abelian 2-group under this
    /// product, so every module is a simple current.
    pub fn fuse(&self, a: &ModuleLabel, b: &ModuleLabel) -> ModuleLabel {
        ModuleLabel { beta: a.beta ^ b.beta, gamma_class: a.gamma_class ^ b.gamma_class }
    }

    /// The vacuum label.
    pub fn vacuum(&self) -> ModuleLabel {
        ModuleLabel { beta: BinaryWord::zero(self.code.length()), gamma_class: 0 }
    }

    /// Number of inequivalent labels, `|C^⊥| · |F_2^n / C| = 2^(2·codim)`.
    pub fn census(&self) -> BigUint {
        label_census(&self.code)
    }

    /// All labels, tau-words in code order and classes ascending.
    pub fn all_labels(&self) -> impl Iterator<Item = ModuleLabel> + '_ {
        self.dual.codewords().flat_map(move |beta| {
            (0..1u32 << self.class_bits())
                .map(move |class| ModuleLabel { beta, gamma_class: class })
        })
    }

    /// Lowest conformal weight of the module with the given label:
    /// `|β|/16 + (1/2) · min_weight(p(γ) + p(C))` with `p` the projection
    /// onto the complement of `supp β`.
    pub fn lowest_weight(&self, label: &ModuleLabel) -> Result<Rational64> {
        let data = self.beta_data(&label.beta)?;
        let gamma = self.gamma_representative(label.gamma_class);
        let projected = gamma.project(&label.beta.complement());
        let syn = syndrome_index(&data.proj_checks, &projected);
        let leader = data.leader[syn] as i64;
        Ok(Rational64::new(label.beta.weight() as i64, 16) + Rational64::new(leader, 2))
    }

    /// Multiplicity of each distinct frame-module isotype inside the
    /// induced module: `2^(dim C_β − |β|/2)`.
    pub fn sector_multiplicity(&self, label: &ModuleLabel) -> Result<BigUint> {
        let data = self.beta_data(&label.beta)?;
        Ok(BigUint::one() << (data.cbeta_dim - data.h_dim))
    }

    /// Weight distribution of the gamma coset projected away from the
    /// tau-word support: the untwisted-slot profile of the sector.
    pub fn sector_coset_distribution(&self, label: &ModuleLabel) -> Result<WeightDistribution> {
        let data = self.beta_data(&label.beta)?;
        let gamma = self.gamma_representative(label.gamma_class);
        let projected = gamma.project(&label.beta.complement());
        WeightDistribution::of_coset(&data.proj, &projected)
    }

    /// The class of the coordinate automorphism attached to a word: its
    /// syndrome against the RREF basis of `C`, packed as a word of length
    /// `dim C`. Two words induce the same automorphism exactly when they
    /// differ by an element of `C^⊥`, i.e. when their syndromes agree; the
    /// class is trivial exactly on `C^⊥`.
    pub fn coordinate_automorphism_class(&self, beta: &BinaryWord) -> Result<BinaryWord> {
        if beta.len() != self.code.length() {
            return Err(Error::Input(format!(
                "word length {} does not match code length {}",
                beta.len(),
                self.code.length()
            )));
        }
        let mut bits = 0u64;
        for (i, row) in self.code.basis().iter().enumerate() {
            bits |= (row.dot(beta) as u64) << i;
        }
        Ok(BinaryWord::from_bits(self.code.dim(), bits))
    }

    /// Fusion table over a chosen label set as CSV rows
    /// `beta1,class1,beta2,class2,beta3,class3`. The full label grid of
    /// the length-48 system has 16384^2 pairs, so the caller picks the
    /// slice worth printing (generators, a subgroup, the Hamming labels).
    pub fn fusion_table_csv(&self, labels: &[ModuleLabel]) -> String {
        use std::fmt::Write as _;
        let mut out = String::from("beta1,class1,beta2,class2,beta3,class3\n");
        for a in labels {
            for b in labels {
                let c = self.fuse(a, b);
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    a.beta, a.gamma_class, b.beta, b.gamma_class, c.beta, c.gamma_class
                );
            }
        }
        out
    }

    /// Cached structural data for one tau-word.
    pub(crate) fn beta_data(&self, beta: &BinaryWord) -> Result<Arc<BetaData>> {
        if let Some(hit) = self.beta_cache.lock().unwrap().get(beta) {
            return Ok(hit.clone());
        }
        if !self.dual.contains(beta)? {
            return Err(Error::Input(format!(
                "tau-word {beta} does not lie in the dual code"
            )));
        }
        let cbeta = support_restricted_dual(&self.dual, beta)?;
        let h = max_self_orthogonal_subcode(&cbeta);
        let proj = self.code.project(&beta.complement());
        let proj_checks = proj.dual().basis().to_vec();
        let leader = coset_leader_weights(&proj)?;
        let data = Arc::new(BetaData {
            cbeta_dim: cbeta.dim(),
            h_dim: h.dim(),
            proj,
            proj_checks,
            leader,
        });
        self.beta_cache.lock().unwrap().insert(*beta, data.clone());
        Ok(data)
    }
}

/// The label-grid size of a code VOA over any linear code:
/// `|C^⊥| · |F_2^n / C| = 2^(2·(n - dim C))`. For codes where every dual
/// word admits a self-dual maximal self-orthogonal subcode on its support
/// this equals the number of inequivalent irreducible modules.
pub fn label_census(code: &LinearCode) -> BigUint {
    BigUint::one() << (2 * (code.length() - code.dim()))
}

/// Solve for words `u_j` with `<u_j, gens[i]> = delta_ij`. Exists exactly
/// when the generators are linearly independent.
///
/// Gauss-Jordan on the generator matrix `G` with row-operation tracking
/// gives `R = E·G` where row `l` of `R` has a lone 1 at its pivot column
/// `p_l` among all pivot columns. The syndrome of `unit(p_l)` against the
/// original generators is column `p_l` of `G = E^{-1}R`, which is column
/// `l` of `E^{-1}`; hence `u_j = Σ_l E[l][j] · unit(p_l)` has syndrome
/// `E^{-1}·(E e_j) = e_j`.
fn pairing_dual_basis(gens: &[BinaryWord], length: u32) -> Result<Vec<BinaryWord>> {
    let t = gens.len();
    // rows[l] = (current word, coefficient mask over the original gens).
    let mut rows: Vec<(BinaryWord, u64)> =
        gens.iter().enumerate().map(|(i, g)| (*g, 1u64 << i)).collect();
    let mut pivots: Vec<u32> = Vec::with_capacity(t);
    for r in 0..t {
        let pivot_row = (r..t)
            .find(|&i| !rows[i].0.is_zero())
            .ok_or_else(|| Error::Input("syndrome generators are dependent".into()))?;
        rows.swap(r, pivot_row);
        let p = rows[r].0.bits().trailing_zeros();
        pivots.push(p);
        for i in 0..t {
            if i != r && rows[i].0.bit(p) {
                let (w, c) = rows[r];
                rows[i].0 = rows[i].0 ^ w;
                rows[i].1 ^= c;
            }
        }
    }
    let mut out = Vec::with_capacity(t);
    for j in 0..t {
        let mut w = BinaryWord::zero(length);
        for (l, &(_, coeff)) in rows.iter().enumerate() {
            if (coeff >> j) & 1 == 1 {
                w = w ^ BinaryWord::unit(length, pivots[l]);
            }
        }
        out.push(w);
    }
    Ok(out)
}
