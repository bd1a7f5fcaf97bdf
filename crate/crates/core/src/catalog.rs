//! The named codes: the Hamming code H8, Reed-Muller codes, and the
//! length-48 frame code pair (D, C) of the moonshine module.
//!
//! `D` is the \[48,7\] code spanned by the three 16-coordinate block words
//! together with four triplicated Reed-Muller rows; `C = D^⊥` is the
//! \[48,41\] even code whose weight-4 words generate it. These two codes
//! label the irreducible modules of the associated code VOA.

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::word::BinaryWord;

/// Generator rows of the Hamming \[8,4,4\] code, in the fixed order used for
/// module-label syndromes.
pub fn hamming8_rows() -> [BinaryWord; 4] {
    ["11111111", "11110000", "11001100", "10101010"]
        .map(|s| BinaryWord::parse(s).expect("valid row"))
}

/// The self-dual Hamming \[8,4,4\] code.
pub fn hamming8() -> LinearCode {
    LinearCode::from_rows(8, &hamming8_rows()).expect("rows share length 8")
}

/// Generator rows of the \[48,7\] frame code `D`, in the fixed order used for
/// module-label syndromes: the three block words first, then the four
/// triplicated rows.
pub fn moonshine_d_rows() -> [BinaryWord; 7] {
    [
        "111111111111111100000000000000000000000000000000",
        "000000000000000011111111111111110000000000000000",
        "000000000000000000000000000000001111111111111111",
        "000000001111111100000000111111110000000011111111",
        "000011110000111100001111000011110000111100001111",
        "001100110011001100110011001100110011001100110011",
        "010101010101010101010101010101010101010101010101",
    ]
    .map(|s| BinaryWord::parse(s).expect("valid row"))
}

/// The \[48,7\] frame code `D` (tau-words of the module labels).
pub fn moonshine_d() -> LinearCode {
    LinearCode::from_rows(48, &moonshine_d_rows()).expect("rows share length 48")
}

/// The \[48,41\] frame code `C = D^⊥`.
pub fn moonshine_c() -> LinearCode {
    moonshine_d().dual()
}

/// The Reed-Muller code RM(r, m): evaluations of Boolean monomials of
/// degree at most `r` on all `2^m` points. Point `i` assigns variable `x_k`
/// the value of bit `k` of `i`, so the dimension is `Σ_{j<=r} C(m, j)` and
/// `RM(r, m)^⊥ = RM(m-r-1, m)` holds exactly, not just up to equivalence.
pub fn reed_muller(r: u32, m: u32) -> Result<LinearCode> {
    if r > m || m > 6 {
        return Err(Error::Input(format!(
            "Reed-Muller parameters need 0 <= r <= m <= 6, got r={r}, m={m}"
        )));
    }
    let n = 1u32 << m;
    let mut rows = Vec::new();
    // One row per monomial, i.e. per variable subset of size <= r.
    for subset in 0u32..(1 << m) {
        if subset.count_ones() > r {
            continue;
        }
        let mut bits = 0u64;
        for point in 0..n {
            if point & subset == subset {
                bits |= 1u64 << point;
            }
        }
        rows.push(BinaryWord::from_bits(n, bits));
    }
    LinearCode::from_rows(n, &rows)
}
