//! Search for holomorphic gamma-class assignments.
//!
//! A candidate decomposition of a holomorphic framed VOA over the
//! length-48 code pair picks, for every tau-word `δ` of the \[48,7\] code,
//! one gamma class `φ(δ)`, additively: the graph `{(δ, φ(δ))}` must be a
//! subgroup of the label group projecting isomorphically onto the tau-word
//! side. The search space is the set of group homomorphisms
//! `φ: F_2^7 -> F_2^7`, fixed by the images of the seven generators.
//!
//! Pruning, applied before any series work: every nonzero `δ` must get a
//! sector of integral lowest weight at least 2 (no vacuum competitors, no
//! weight-1 states). Surviving assignments are accepted when the summed
//! sector characters reproduce the J-function through the requested
//! order. Pruned sector data and sector characters are cached per
//! `(tau-word, projected-coset)` pair, so verifying one assignment costs a
//! table lookup per tau-word.
//!
//! For the length-48 pair this space is provably empty, and the search
//! proves it rather than timing out: whenever the walk exhausts the space
//! with no solution, the per-tau-word admissibility sets (which are affine
//! in the syndrome coordinates) are fed to a linear solver that extracts
//! an unsatisfiability certificate: a family of tau-words whose parity
//! constraints sum, over every additive assignment, to an odd total. One
//! such family consists of seven weight-24 words; summing the sector
//! characters over per-tau-word admissible cosets nevertheless reproduces
//! J exactly (the `characters` suite checks this), so the obstruction
//! concerns only the additivity of the class assignment, not the sector
//! spectra.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use num_rational::Rational64;
use serde::Serialize;

use crate::error::Result;
use crate::modules::ModuleSystem;
use crate::qseries::{QSeries, UNIT};
use crate::series::{induced_module_character, j_function};
use crate::weights::syndrome_index;
use crate::word::BinaryWord;

/// Search parameters.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Total characters must match J through `q^max_order` (at most 8).
    pub max_order: i64,
    /// Wall-clock budget; exceeding it returns a partial result.
    pub budget: Duration,
    /// At most this many assignments are stored (all are still counted).
    pub store_limit: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_order: 4,
            budget: Duration::from_secs(600),
            store_limit: 1000,
        }
    }
}

/// One generator image: the gamma syndrome assigned to a generator row.
#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
pub struct GeneratorImage {
    /// Index into the fixed generator row order of the dual code.
    pub generator_index: usize,
    /// Gamma class syndrome bits of the image.
    pub gamma_syndrome_bits: u32,
}

/// A full assignment: images of all seven generators, in generator order.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Assignment {
    pub images: Vec<GeneratorImage>,
}

impl Assignment {
    /// The homomorphism on the whole tau-word group: class image of the
    /// word with the given generator-coefficient mask.
    pub fn image_of_mask(&self, mask: u32) -> u32 {
        let mut acc = 0u32;
        for (i, img) in self.images.iter().enumerate() {
            if (mask >> i) & 1 == 1 {
                acc ^= img.gamma_syndrome_bits;
            }
        }
        acc
    }
}

/// Search outcome.
#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    /// Stored assignments (up to the configured limit), in discovery order.
    pub assignments: Vec<Assignment>,
    /// Total number of assignments found, stored or not.
    pub total_found: u64,
    /// False when the budget ran out before the space was exhausted.
    pub complete: bool,
    /// Number of distinct total characters among all found assignments.
    pub distinct_characters: usize,
    /// Nodes visited in the pruned depth-first walk.
    pub nodes_visited: u64,
    /// When the space was exhausted empty: a proof that no additive
    /// assignment satisfies the sector constraints, if one was found.
    pub obstruction: Option<Obstruction>,
}

/// One parity constraint of an unsatisfiability certificate: any assignment
/// must give `<φ(tau_word), check_word> = required_parity` for the sector
/// of `tau_word` to have integral lowest weight >= 2.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ObstructionTerm {
    pub tau_word: String,
    pub check_word: String,
    pub required_parity: u8,
}

/// Proof that the additive search space is empty.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub enum Obstruction {
    /// Some tau-word admits no gamma class at all.
    EmptySector { tau_word: String },
    /// A family of parity constraints whose functionals cancel for every
    /// additive assignment while the required parities sum to 1.
    ParityCertificate { terms: Vec<ObstructionTerm> },
}

struct SectorTables {
    /// For each tau-word mask (over the reordered generators): the word.
    words: Vec<BinaryWord>,
    /// Admissible gamma classes per tau-word mask, one bit per class.
    admissible: Vec<u128>,
    /// Projected-coset id per (tau-word mask, class).
    coset_id: Vec<Vec<u8>>,
    /// Sector characters per (tau-word mask, coset id), computed lazily.
    chars: HashMap<(u32, u8), QSeries>,
}

/// Search for all structurally admissible homomorphisms whose total
/// character matches J through `q^max_order`.
///
/// The generator exploration order is fixed (heaviest tau-words first) so
/// runs are reproducible; the result set has set semantics and assignments
/// are reported in that canonical discovery order. Symmetric solutions are
/// all reported; none is canonical.
pub fn assignment_search(sys: &ModuleSystem, config: &SearchConfig) -> Result<SearchReport> {
    let start = Instant::now();
    let t = sys.class_bits();
    assert!(t <= 7, "the search is sized for the seven-generator system");
    let classes = 1u32 << t;
    let gen_count = t as usize;

    // Reorder generators heaviest-first, stable on the original index.
    let original = sys.dual_generators().to_vec();
    let mut order: Vec<usize> = (0..gen_count).collect();
    order.sort_by_key(|&i| std::cmp::Reverse((original[i].weight(), std::cmp::Reverse(i))));
    let gens: Vec<BinaryWord> = order.iter().map(|&i| original[i]).collect();

    // Tau-words and admissibility per generator mask.
    let mask_count = 1usize << gen_count;
    let mut words = vec![BinaryWord::zero(sys.code().length()); mask_count];
    for mask in 1..mask_count {
        let low = mask.trailing_zeros() as usize;
        words[mask] = words[mask & (mask - 1)] ^ gens[low];
    }
    let mut admissible = vec![0u128; mask_count];
    let mut coset_id = vec![vec![0u8; classes as usize]; mask_count];
    for mask in 1..mask_count {
        let beta = words[mask];
        let data = sys.beta_data(&beta)?;
        let mut adm = 0u128;
        for class in 0..classes {
            let gamma = sys.gamma_representative(class);
            let projected = gamma.project(&beta.complement());
            let syn = syndrome_index(&data.proj_checks, &projected);
            coset_id[mask][class as usize] = syn as u8;
            let leader = data.leader[syn] as i64;
            let lowest = Rational64::new(beta.weight() as i64, 16) + Rational64::new(leader, 2);
            if lowest.is_integer() && lowest >= Rational64::from_integer(2) {
                adm |= 1u128 << class;
            }
        }
        admissible[mask] = adm;
    }

    let mut tables = SectorTables { words, admissible, coset_id, chars: HashMap::new() };
    let target = j_function(config.max_order)?;

    let mut state = DfsState {
        sys,
        config,
        start,
        target,
        images: vec![0u32; gen_count],
        phis: vec![0u32; mask_count],
        report: SearchReport {
            assignments: Vec::new(),
            total_found: 0,
            complete: true,
            distinct_characters: 0,
            nodes_visited: 0,
            obstruction: None,
        },
        signatures: HashMap::new(),
        order,
    };
    dfs(&mut state, &mut tables, 0, classes)?;
    state.report.distinct_characters =
        state.signatures.values().filter(|ok| **ok).count();
    if state.report.complete && state.report.total_found == 0 {
        state.report.obstruction =
            structural_obstruction(sys, &tables.words, &tables.admissible, t);
    }
    Ok(state.report)
}

/// Try to prove that no additive assignment satisfies the per-tau-word
/// admissibility sets. Works whenever each admissible set is affine in the
/// syndrome coordinates (true for the length-48 system): each set
/// contributes linear parity constraints on the assignment, and Gaussian
/// elimination with combination tracking either solves the system (no
/// certificate; the emptiness came from the character match) or returns
/// the inconsistent family.
fn structural_obstruction(
    sys: &ModuleSystem,
    words: &[BinaryWord],
    admissible: &[u128],
    t: u32,
) -> Option<Obstruction> {
    let classes: u32 = 1 << t;
    // Constraint rows: (functional bits over the t*t unknown matrix
    // entries, rhs, tau-word mask, check word).
    let mut rows: Vec<(u64, u8, usize, BinaryWord)> = Vec::new();
    for (mask, &adm) in admissible.iter().enumerate().skip(1) {
        if adm == 0 {
            return Some(Obstruction::EmptySector { tau_word: words[mask].to_string() });
        }
        let s0 = adm.trailing_zeros();
        // The set translated to the origin must be a subspace.
        let members: Vec<u32> = (0..classes).filter(|c| adm >> c & 1 == 1).collect();
        let mut translated = 0u128;
        for &c in &members {
            translated |= 1 << (c ^ s0);
        }
        let is_subspace = members
            .iter()
            .all(|&a| members.iter().all(|&b| translated >> (a ^ b) & 1 == 1));
        if !is_subspace {
            return None;
        }
        // Parity checks of the translated subspace, as words of length t.
        let basis: Vec<BinaryWord> = members
            .iter()
            .map(|&c| BinaryWord::from_bits(t, (c ^ s0) as u64))
            .collect();
        let span = crate::code::LinearCode::from_rows(t, &basis).ok()?;
        for check in span.dual().basis() {
            let u = check.bits() as u32;
            let rhs = ((u & s0).count_ones() & 1) as u8;
            // Functional over the t*t unknowns P[j][i] = <phi(g_j), d_i>:
            // the constraint reads sum_{j,i} mask_j u_i P[j][i] = rhs.
            let mut bits = 0u64;
            for i in 0..t {
                for j in 0..t {
                    if (u >> i) & 1 == 1 && (mask >> j) & 1 == 1 {
                        bits |= 1 << (i * t + j);
                    }
                }
            }
            // The check word in the ambient space: the syndrome functional
            // u pairs gamma against the original generator rows.
            let mut check_word = BinaryWord::zero(sys.code().length());
            for (i, g) in sys.dual_generators().iter().enumerate() {
                if (u >> i) & 1 == 1 {
                    check_word = check_word ^ *g;
                }
            }
            rows.push((bits, rhs, mask, check_word));
        }
    }
    // Eliminate with combination tracking.
    let mut piv: Vec<Option<(u64, u8, Vec<u64>)>> = vec![None; 64];
    let comb_words = rows.len().div_ceil(64);
    for (idx, &(bits, rhs, _, _)) in rows.iter().enumerate() {
        let mut b = bits;
        let mut r = rhs;
        let mut comb = vec![0u64; comb_words];
        comb[idx / 64] = 1 << (idx % 64);
        while b != 0 {
            let lead = 63 - b.leading_zeros() as usize;
            match &piv[lead] {
                Some((pb, pr, pc)) => {
                    b ^= pb;
                    r ^= pr;
                    for (c, p) in comb.iter_mut().zip(pc) {
                        *c ^= p;
                    }
                }
                None => {
                    piv[lead] = Some((b, r, comb.clone()));
                    b = 0;
                    r = 0;
                }
            }
        }
        if r != 0 {
            let terms: Vec<ObstructionTerm> = rows
                .iter()
                .enumerate()
                .filter(|(k, _)| comb[k / 64] >> (k % 64) & 1 == 1)
                .map(|(_, &(_, rhs, mask, check))| ObstructionTerm {
                    tau_word: words[mask].to_string(),
                    check_word: check.to_string(),
                    required_parity: rhs,
                })
                .collect();
            return Some(Obstruction::ParityCertificate { terms });
        }
    }
    None
}

/// Re-verify a parity certificate independently of how it was found: the
/// constraint functionals must cancel for every additive assignment (the
/// sum of `lambda(check) ⊗ lambda(tau)` tensors vanishes) while the
/// required parities sum to 1, and each term must be a genuine consequence
/// of the sector admissibility sets.
pub fn verify_obstruction(sys: &ModuleSystem, obstruction: &Obstruction) -> Result<bool> {
    match obstruction {
        Obstruction::EmptySector { tau_word } => {
            let beta = BinaryWord::parse(tau_word)?;
            for class in 0..1u32 << sys.class_bits() {
                let label = sys.label_from_class(&beta, class)?;
                let lw = sys.lowest_weight(&label)?;
                if lw.is_integer() && lw >= Rational64::from_integer(2) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Obstruction::ParityCertificate { terms } => {
            let t = sys.class_bits() as usize;
            let gens = sys.dual_generators();
            let lambda = |w: &BinaryWord| -> Result<u32> {
                for mask in 0..1u32 << t {
                    let mut acc = BinaryWord::zero(w.len());
                    for (i, g) in gens.iter().enumerate() {
                        if (mask >> i) & 1 == 1 {
                            acc = acc ^ *g;
                        }
                    }
                    if acc == *w {
                        return Ok(mask);
                    }
                }
                Err(crate::error::Error::Input(format!(
                    "certificate word {w} is not in the dual code"
                )))
            };
            let mut tensor = vec![0u8; t * t];
            let mut rhs_sum = 0u8;
            for term in terms {
                let tau = BinaryWord::parse(&term.tau_word)?;
                let check = BinaryWord::parse(&term.check_word)?;
                let lt = lambda(&tau)?;
                let lc = lambda(&check)?;
                for i in 0..t {
                    for j in 0..t {
                        if (lc >> i) & 1 == 1 && (lt >> j) & 1 == 1 {
                            tensor[i * t + j] ^= 1;
                        }
                    }
                }
                rhs_sum ^= term.required_parity;
                // The parity really is forced: every admissible class of
                // this tau-word satisfies it.
                for class in 0..1u32 << t {
                    let label = sys.label_from_class(&tau, class)?;
                    let lw = sys.lowest_weight(&label)?;
                    if lw.is_integer() && lw >= Rational64::from_integer(2) {
                        let gamma = sys.gamma_representative(class);
                        if gamma.dot(&check) != term.required_parity {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(tensor.iter().all(|&b| b == 0) && rhs_sum == 1)
        }
    }
}

struct DfsState<'a> {
    sys: &'a ModuleSystem,
    config: &'a SearchConfig,
    start: Instant,
    target: QSeries,
    /// Image class per reordered generator.
    images: Vec<u32>,
    /// Image class per generator mask (partial, valid below the frontier).
    phis: Vec<u32>,
    report: SearchReport,
    /// Signature (coset id per mask) -> whether its character matches J.
    signatures: HashMap<Vec<u8>, bool>,
    /// Reordered generator index -> original generator index.
    order: Vec<usize>,
}

fn dfs(
    state: &mut DfsState<'_>,
    tables: &mut SectorTables,
    depth: usize,
    classes: u32,
) -> Result<()> {
    if !state.report.complete {
        return Ok(());
    }
    if state.start.elapsed() > state.config.budget {
        state.report.complete = false;
        return Ok(());
    }
    let gen_count = state.images.len();
    if depth == gen_count {
        return accept_leaf(state, tables);
    }
    let new_bit = 1usize << depth;
    'candidates: for class in 0..classes {
        state.report.nodes_visited += 1;
        // Every subgroup element involving the new generator must stay
        // admissible.
        for prev in 0..new_bit {
            let mask = prev | new_bit;
            let phi = state.phis[prev] ^ class;
            if tables.admissible[mask] & (1u128 << phi) == 0 {
                continue 'candidates;
            }
        }
        for prev in 0..new_bit {
            state.phis[prev | new_bit] = state.phis[prev] ^ class;
        }
        state.images[depth] = class;
        dfs(state, tables, depth + 1, classes)?;
        if !state.report.complete {
            return Ok(());
        }
    }
    Ok(())
}

fn accept_leaf(state: &mut DfsState<'_>, tables: &mut SectorTables) -> Result<()> {
    let mask_count = state.phis.len();
    let signature: Vec<u8> = (0..mask_count)
        .map(|mask| tables.coset_id[mask][state.phis[mask] as usize])
        .collect();
    let matches = match state.signatures.get(&signature) {
        Some(&cached) => cached,
        None => {
            let total = total_character(state, tables)?;
            let ok = character_matches(&total, &state.target, state.config.max_order);
            state.signatures.insert(signature, ok);
            ok
        }
    };
    if !matches {
        return Ok(());
    }
    state.report.total_found += 1;
    if state.report.assignments.len() < state.config.store_limit {
        // Report images against the original generator order.
        let mut images: Vec<GeneratorImage> = state
            .images
            .iter()
            .enumerate()
            .map(|(reordered, &class)| GeneratorImage {
                generator_index: state.order[reordered],
                gamma_syndrome_bits: class,
            })
            .collect();
        images.sort_by_key(|img| img.generator_index);
        state.report.assignments.push(Assignment { images });
    }
    Ok(())
}

fn total_character(state: &mut DfsState<'_>, tables: &mut SectorTables) -> Result<QSeries> {
    let order = state.config.max_order;
    let mut total = QSeries::zero(order * UNIT);
    for mask in 0..state.phis.len() {
        let coset = tables.coset_id[mask][state.phis[mask] as usize];
        let key = (mask as u32, coset);
        if !tables.chars.contains_key(&key) {
            let beta = tables.words[mask];
            let class = state.phis[mask];
            let label = state.sys.label_from_class(&beta, class)?;
            let ch = induced_module_character(state.sys, &label, order)?;
            tables.chars.insert(key, ch);
        }
        total = total.add(&tables.chars[&key]);
    }
    Ok(total)
}

/// Coefficientwise equality from `q^{-1}` through `q^order` on the whole
/// lattice.
fn character_matches(total: &QSeries, target: &QSeries, order: i64) -> bool {
    let lo = -UNIT;
    let hi = order * UNIT;
    (lo..=hi).all(|idx| total.coeff(idx) == target.coeff(idx))
}
