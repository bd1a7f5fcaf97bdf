//! Structure theory on codes: support-restricted subcodes of a dual,
//! maximal self-orthogonal subcodes, and weight-4 generation.

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::word::BinaryWord;

/// The words of `dual(d)` supported inside `supp(beta)`, returned as a code
/// of the ambient length. Computed as the dual of the projection of `d`
/// onto `supp(beta)`, re-embedded: for `supp(x) ⊆ supp(beta)`,
/// `x ⊥ d` holds iff the restriction of `x` is orthogonal to the
/// restriction of every row of `d`.
///
/// `beta` must itself lie in `d`.
pub fn support_restricted_dual(d: &LinearCode, beta: &BinaryWord) -> Result<LinearCode> {
    if !d.contains(beta)? {
        return Err(Error::Input(format!(
            "support word {beta} does not lie in the given code"
        )));
    }
    Ok(d.project(beta).dual().embed(beta))
}

/// A maximal self-orthogonal subcode of `code`: a subcode `H` with
/// `x · y = 0` for all `x, y` in `H` (including `x = x`), not extendable
/// inside `code`.
///
/// Because the dot product restricted to an even code is alternating, every
/// maximal self-orthogonal subcode has the same dimension, so the greedy
/// sweep below always reaches it. Deterministic tie-break: at each step the
/// candidate space (words of `code` orthogonal to themselves and to the
/// current basis) is brought to RREF and its first basis row outside the
/// current span is adopted.
pub fn max_self_orthogonal_subcode(code: &LinearCode) -> LinearCode {
    let n = code.length();
    let mut h = LinearCode::zero(n);
    loop {
        let candidates = self_orthogonal_candidates(code, &h);
        let next = candidates.basis().iter().find(|r| !h.reduce(**r).is_zero());
        match next {
            Some(&row) => {
                h = LinearCode::from_rows(n, &[h.basis(), &[row]].concat())
                    .expect("rows share the code length");
            }
            None => return h,
        }
    }
}

/// Subspace of `code` consisting of even-weight words orthogonal to every
/// row of `h`. Solved on the coefficient space of `code`, no enumeration.
fn self_orthogonal_candidates(code: &LinearCode, h: &LinearCode) -> LinearCode {
    let k = code.dim();
    let n = code.length();
    // Constraint matrix over the k basis coefficients: one row for even
    // weight (weight parity is linear over GF(2)), one per basis row of h.
    let mut constraints: Vec<u64> = Vec::with_capacity(h.dim() as usize + 1);
    let parity_row: u64 = code
        .basis()
        .iter()
        .enumerate()
        .fold(0, |acc, (i, b)| acc | (((b.weight() as u64) & 1) << i));
    constraints.push(parity_row);
    for hr in h.basis() {
        let row: u64 = code
            .basis()
            .iter()
            .enumerate()
            .fold(0, |acc, (i, b)| acc | ((b.dot(hr) as u64) << i));
        constraints.push(row);
    }
    let kernel = LinearCode::from_rows(
        k,
        &constraints.iter().map(|&bits| BinaryWord::from_bits(k, bits)).collect::<Vec<_>>(),
    )
    .expect("constraint rows share length k")
    .dual();
    // Map coefficient vectors back to codewords.
    let rows: Vec<BinaryWord> = kernel
        .basis()
        .iter()
        .map(|coeff| {
            coeff
                .support()
                .fold(BinaryWord::zero(n), |acc, i| acc ^ code.basis()[i as usize])
        })
        .collect();
    LinearCode::from_rows(n, &rows).expect("codewords share the ambient length")
}

/// All weight-4 codewords, found by scanning the `C(n, 4)` weight-4 words
/// of the ambient space with a membership test. No dimension cap; the scan
/// is at most `C(64, 4) = 635376` tests.
pub fn weight4_words(code: &LinearCode) -> Vec<BinaryWord> {
    let n = code.length();
    let mut out = Vec::new();
    if n < 4 {
        return out;
    }
    for a in 0..n - 3 {
        for b in a + 1..n - 2 {
            for c in b + 1..n - 1 {
                for d in c + 1..n {
                    let w = BinaryWord::from_support(n, &[a, b, c, d]);
                    if code.reduce(w).is_zero() {
                        out.push(w);
                    }
                }
            }
        }
    }
    out
}

/// True when the weight-4 codewords span the whole code.
pub fn generated_by_weight4(code: &LinearCode) -> bool {
    let span = LinearCode::from_rows(code.length(), &weight4_words(code))
        .expect("weight-4 words share the ambient length");
    span == *code
}
