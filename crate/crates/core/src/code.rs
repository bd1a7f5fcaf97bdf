//! Binary linear codes in canonical reduced row-echelon form.
//!
//! A [`LinearCode`] is stored as its RREF basis with pivot columns in
//! increasing order, pivots cleared from all other rows. The RREF basis of
//! a subspace is unique, so two codes are equal exactly when their stored
//! bases are identical. All arithmetic is exact GF(2) bit arithmetic on
//! packed words.

use std::fmt;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::word::BinaryWord;

/// A binary linear code of length at most 64, held in canonical RREF.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearCode {
    length: u32,
    /// RREF rows, sorted by pivot column. Unique per subspace.
    basis: Vec<BinaryWord>,
}

impl LinearCode {
    /// The zero code `{0}` of the given length.
    pub fn zero(length: u32) -> Self {
        assert!(length <= 64);
        LinearCode { length, basis: Vec::new() }
    }

    /// The full space `F_2^n`.
    pub fn full(length: u32) -> Self {
        let basis = (0..length).map(|i| BinaryWord::unit(length, i)).collect();
        LinearCode { length, basis }
    }

    /// Span of the given rows, brought to canonical RREF. Dependent and
    /// duplicate rows collapse. All rows must share one length.
    pub fn from_rows(length: u32, rows: &[BinaryWord]) -> Result<Self> {
        if length > 64 {
            return Err(Error::Input(format!("code length {length} exceeds 64")));
        }
        let mut code = LinearCode::zero(length);
        for row in rows {
            if row.len() != length {
                return Err(Error::Input(format!(
                    "mixed lengths: expected {length}, found row of length {}",
                    row.len()
                )));
            }
            code.insert(*row);
        }
        Ok(code)
    }

    /// Insert a row into the RREF basis, keeping it canonical.
    fn insert(&mut self, row: BinaryWord) {
        // Full reduction zeroes the entry at every existing pivot, so the
        // new row's pivot sits at a free column and the reduced property
        // is preserved below.
        let w = self.reduce(row);
        if w.is_zero() {
            return;
        }
        let pivot = w.bits().trailing_zeros();
        // Clear the new pivot from existing rows, then place the row so
        // that pivot columns stay in increasing order.
        for r in &mut self.basis {
            if r.bit(pivot) {
                *r = *r ^ w;
            }
        }
        let pos = self
            .basis
            .iter()
            .position(|r| r.bits().trailing_zeros() > pivot)
            .unwrap_or(self.basis.len());
        self.basis.insert(pos, w);
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    pub fn dim(&self) -> u32 {
        self.basis.len() as u32
    }

    /// Number of codewords as `2^dim`, exact for dim <= 63.
    pub fn size(&self) -> u64 {
        1u64 << self.dim()
    }

    /// The canonical RREF basis rows.
    pub fn basis(&self) -> &[BinaryWord] {
        &self.basis
    }

    /// Reduce a word against the basis. The result is zero exactly when the
    /// word lies in the code. Panics on length mismatch.
    pub fn reduce(&self, mut w: BinaryWord) -> BinaryWord {
        assert_eq!(w.len(), self.length, "reduce: word length mismatch");
        for r in &self.basis {
            let pivot = r.bits().trailing_zeros();
            if w.bit(pivot) {
                w = w ^ *r;
            }
        }
        w
    }

    /// Membership test. Length mismatch is an input error.
    pub fn contains(&self, w: &BinaryWord) -> Result<bool> {
        if w.len() != self.length {
            return Err(Error::Input(format!(
                "membership test: word length {} does not match code length {}",
                w.len(),
                self.length
            )));
        }
        Ok(self.reduce(*w).is_zero())
    }

    /// The dual code `{x | x·c = 0 for all c}`. Always has dimension
    /// `length - dim`, and `dual(dual(C)) = C`.
    pub fn dual(&self) -> LinearCode {
        let n = self.length;
        let pivots: Vec<u32> = self.basis.iter().map(|r| r.bits().trailing_zeros()).collect();
        let mut is_pivot = vec![false; n as usize];
        for &p in &pivots {
            is_pivot[p as usize] = true;
        }
        let mut rows = Vec::with_capacity((n - self.dim()) as usize);
        for f in 0..n {
            if is_pivot[f as usize] {
                continue;
            }
            // Kernel vector: 1 at the free column, and at pivot p the entry
            // of the corresponding RREF row at column f.
            let mut bits = 1u64 << f;
            for (r, &p) in self.basis.iter().zip(&pivots) {
                if r.bit(f) {
                    bits |= 1u64 << p;
                }
            }
            rows.push(BinaryWord::from_bits(n, bits));
        }
        LinearCode::from_rows(n, &rows).expect("kernel rows share the code length")
    }

    /// Iterate over all `2^dim` codewords in Gray-code order (the zero word
    /// comes first). Deterministic for a given basis.
    pub fn codewords(&self) -> Codewords<'_> {
        assert!(self.dim() < 64, "cannot enumerate 2^64 codewords");
        Codewords { code: self, index: 0, current: BinaryWord::zero(self.length) }
    }

    /// True when every pair of codewords is orthogonal, including each word
    /// with itself. Checked on the basis, which suffices by bilinearity.
    pub fn is_self_orthogonal(&self) -> bool {
        self.basis.iter().enumerate().all(|(i, a)| {
            a.weight() % 2 == 0 && self.basis[i + 1..].iter().all(|b| a.dot(b) == 0)
        })
    }

    /// True when every codeword has even weight (checked on the basis;
    /// weight parity is additive over GF(2)).
    pub fn is_even(&self) -> bool {
        self.basis.iter().all(|r| r.weight() % 2 == 0)
    }

    /// True when every codeword of `self` lies in `other`.
    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        self.length == other.length
            && self.basis.iter().all(|r| other.reduce(*r).is_zero())
    }

    /// Minimum nonzero weight by direct enumeration. `dim` is capped at 28.
    pub fn min_nonzero_weight(&self) -> Result<u32> {
        if self.dim() > 28 {
            return Err(Error::Capacity(format!(
                "min-weight enumeration over 2^{} codewords exceeds the 2^28 cap",
                self.dim()
            )));
        }
        let mut best = u32::MAX;
        for w in self.codewords().skip(1) {
            best = best.min(w.weight());
        }
        if best == u32::MAX {
            Err(Error::Input("zero code has no nonzero codeword".into()))
        } else {
            Ok(best)
        }
    }

    /// Image of the code under restriction to the support of `mask`, as a
    /// code of length `mask.weight()`.
    pub fn project(&self, mask: &BinaryWord) -> LinearCode {
        let rows: Vec<BinaryWord> = self.basis.iter().map(|r| r.project(mask)).collect();
        LinearCode::from_rows(mask.weight(), &rows).expect("projected rows share one length")
    }

    /// Scatter a code of length `mask.weight()` onto the support of `mask`
    /// inside the ambient length `mask.len()`.
    pub fn embed(&self, mask: &BinaryWord) -> LinearCode {
        assert_eq!(self.length, mask.weight());
        let rows: Vec<BinaryWord> = self.basis.iter().map(|r| r.embed(mask)).collect();
        LinearCode::from_rows(mask.len(), &rows).expect("embedded rows share one length")
    }

    /// Write in the shared ASCII format: one codeword (basis row) per line
    /// as `0`/`1` characters.
    pub fn write_ascii<W: Write>(&self, out: &mut W) -> std::io::Result<()> {
        writeln!(out, "# binary linear code: length {} dimension {}", self.length, self.dim())?;
        for r in &self.basis {
            writeln!(out, "{r}")?;
        }
        Ok(())
    }

    /// Read the ASCII format: one row of `0`/`1` per line, `#` comments and
    /// blank lines ignored, all rows of equal length. The result is the
    /// span of the rows.
    pub fn read_ascii<R: BufRead>(input: R) -> Result<LinearCode> {
        let mut rows: Vec<BinaryWord> = Vec::new();
        for line in input.lines() {
            let line = line.map_err(|e| Error::Input(format!("read error: {e}")))?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            rows.push(BinaryWord::parse(line)?);
        }
        match rows.first() {
            None => Err(Error::Input("code file contains no rows".into())),
            Some(first) => LinearCode::from_rows(first.len(), &rows),
        }
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearCode[{},{}]{{", self.length, self.dim())?;
        for (i, r) in self.basis.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("}")
    }
}

/// Gray-code iterator over all codewords.
pub struct Codewords<'a> {
    code: &'a LinearCode,
    index: u64,
    current: BinaryWord,
}

impl Iterator for Codewords<'_> {
    type Item = BinaryWord;

    fn next(&mut self) -> Option<BinaryWord> {
        if self.index >= self.code.size() {
            return None;
        }
        if self.index > 0 {
            let flip = self.index.trailing_zeros() as usize;
            self.current = self.current ^ self.code.basis[flip];
        }
        self.index += 1;
        Some(self.current)
    }
}
