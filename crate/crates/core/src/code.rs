//! Binary cyclic codes as ideals of `GF(2)[x]/(x^n - 1)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2poly::Gf2Poly;

/// Enumeration guard: at most `2^20` codewords.
pub const DEFAULT_MAX_DIM: usize = 20;

/// A binary word. Coordinate `i` (0-based) is the coefficient of `x^i`; the text form
/// lists coordinate 1 first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Codeword {
    len: usize,
    words: Vec<u64>,
}

impl Codeword {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut w = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            w.set(i, b);
        }
        w
    }

    /// The coefficient word of `poly`, which must have degree below `len`.
    pub fn from_poly(poly: &Gf2Poly, len: usize) -> Result<Self> {
        if let Some(d) = poly.degree().filter(|&d| d >= len) {
            return Err(Error::LengthMismatch {
                expected: len,
                found: d + 1,
            });
        }
        let mut w = Self::zeros(len);
        for e in poly.exponents() {
            w.set(e, true);
        }
        Ok(w)
    }

    pub fn to_poly(&self) -> Gf2Poly {
        Gf2Poly::from_words(self.words.clone())
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if bit {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// 0-based coordinates holding a 1, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                (w != 0).then(|| {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    i * 64 + b
                })
            })
        })
    }

    /// Right cyclic shift by `k`: the bit at `i` moves to `(i + k) mod n`.
    pub fn cyclic_shift(&self, k: usize) -> Self {
        let mut out = Self::zeros(self.len);
        if self.len == 0 {
            return out;
        }
        for i in self.support() {
            out.set((i + k) % self.len, true);
        }
        out
    }

    pub fn xor(&self, other: &Self) -> Result<Self> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                found: other.len,
            });
        }
        Ok(Self {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a ^ b)
                .collect(),
        })
    }

    fn xor_assign(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Codeword({self})")
    }
}

impl FromStr for Codeword {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::WordParse {
                    text: s.to_string(),
                    reason: format!("unexpected character {other:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_bits(&bits))
    }
}

/// A binary cyclic code of length `n` with generator polynomial `g | x^n - 1`.
///
/// Membership is divisibility by `g`. The residues `x^i mod g` are tabulated once, so the
/// remainder of any word is the XOR of the residues over its support.
#[derive(Clone)]
pub struct CyclicCode {
    length: usize,
    generator: Gf2Poly,
    check: Gf2Poly,
    width: usize,
    residues: Vec<u64>,
}

impl CyclicCode {
    pub fn new(length: usize, generator: Gf2Poly) -> Result<Self> {
        if length == 0 {
            return Err(Error::ZeroLength);
        }
        let modulus = Gf2Poly::xn_plus_one(length);
        let (check, remainder) = modulus.divmod(&generator)?;
        if !remainder.is_zero() {
            return Err(Error::NotADivisor {
                n: length,
                generator: generator.to_string(),
                remainder: remainder.to_string(),
            });
        }

        let deg = generator.degree().expect("nonzero generator");
        let width = deg.div_ceil(64);
        let mut residues = vec![0u64; length * width];
        if width > 0 {
            let g = generator.words();
            let mut r = vec![0u64; width];
            r[0] = 1;
            for i in 0..length {
                residues[i * width..(i + 1) * width].copy_from_slice(&r);
                // r <- x * r mod g
                let mut carry = 0;
                for w in r.iter_mut() {
                    let next = *w >> 63;
                    *w = (*w << 1) | carry;
                    carry = next;
                }
                let top = if deg.is_multiple_of(64) {
                    carry == 1
                } else {
                    (r[deg / 64] >> (deg % 64)) & 1 == 1
                };
                if top {
                    for (w, gw) in r.iter_mut().zip(g) {
                        *w ^= gw;
                    }
                    if !deg.is_multiple_of(64) {
                        r[deg / 64] &= !(1u64 << (deg % 64));
                    }
                }
            }
        }

        Ok(Self {
            length,
            generator,
            check,
            width,
            residues,
        })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn generator(&self) -> &Gf2Poly {
        &self.generator
    }

    /// `h` with `g * h = x^n + 1`.
    pub fn check_polynomial(&self) -> &Gf2Poly {
        &self.check
    }

    pub fn dimension(&self) -> usize {
        self.length - self.generator.degree().expect("nonzero generator")
    }

    pub fn contains(&self, w: &Codeword) -> Result<bool> {
        if w.len() != self.length {
            return Err(Error::LengthMismatch {
                expected: self.length,
                found: w.len(),
            });
        }
        Ok(self.support_in_code(w.support()))
    }

    /// True iff the word with the given (0-based, in-range) support lies in the code.
    pub fn support_in_code<I: IntoIterator<Item = usize>>(&self, support: I) -> bool {
        match self.width {
            0 => true,
            1 => {
                support
                    .into_iter()
                    .fold(0u64, |acc, i| acc ^ self.residues[i])
                    == 0
            }
            w => {
                let mut acc = vec![0u64; w];
                for i in support {
                    for (a, r) in acc.iter_mut().zip(&self.residues[i * w..(i + 1) * w]) {
                        *a ^= r;
                    }
                }
                acc.iter().all(|&a| a == 0)
            }
        }
    }

    /// The coefficient word of `g` shifted by `0..k`.
    pub fn generator_rows(&self) -> Vec<Codeword> {
        if self.dimension() == 0 {
            return Vec::new();
        }
        let g = Codeword::from_poly(&self.generator, self.length).expect("deg g < n");
        (0..self.dimension()).map(|s| g.cyclic_shift(s)).collect()
    }

    /// Supports of the generator rows, for the hot automorphism loop.
    pub fn generator_row_supports(&self) -> Vec<Vec<usize>> {
        let base: Vec<usize> = self.generator.exponents().collect();
        (0..self.dimension())
            .map(|s| base.iter().map(|&e| (e + s) % self.length).collect())
            .collect()
    }

    /// All `2^k` codewords in Gray-code order, starting with zero.
    pub fn enumerate_codewords(&self, max_dim: usize) -> Result<CodewordIter> {
        let k = self.dimension();
        if k > max_dim {
            return Err(Error::DimensionTooLarge {
                dimension: k,
                limit: max_dim,
            });
        }
        Ok(CodewordIter {
            rows: self.generator_rows(),
            current: Codeword::zeros(self.length),
            index: 0,
            total: 1u64 << k,
        })
    }

    pub fn weight_distribution(&self, max_dim: usize) -> Result<BTreeMap<usize, u64>> {
        let mut hist = BTreeMap::new();
        for w in self.enumerate_codewords(max_dim)? {
            *hist.entry(w.weight()).or_default() += 1;
        }
        Ok(hist)
    }
}

impl fmt::Debug for CyclicCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CyclicCode[{},{}]({})",
            self.length,
            self.dimension(),
            self.generator
        )
    }
}

pub struct CodewordIter {
    rows: Vec<Codeword>,
    current: Codeword,
    index: u64,
    total: u64,
}

impl Iterator for CodewordIter {
    type Item = Codeword;

    fn next(&mut self) -> Option<Codeword> {
        if self.index == self.total {
            return None;
        }
        if self.index > 0 {
            let row = self.index.trailing_zeros() as usize;
            self.current.xor_assign(&self.rows[row]);
        }
        self.index += 1;
        Some(self.current.clone())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.index) as usize;
        (left, Some(left))
    }
}

/// Arrangement of a flat word as a `rows x cols` matrix (all indices 1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixLayout {
    /// Row `a` holds the consecutive block of coordinates `(a-1)*cols + 1 ..= a*cols`.
    BlockRows { rows: usize, cols: usize },
    /// Entry `(a, b)` is coordinate `a + (b-1)*rows`; row `a` is a residue class mod `rows`.
    /// With two rows this is the odd/even interleaving.
    ResidueRows { rows: usize, cols: usize },
}

impl MatrixLayout {
    pub fn rows(&self) -> usize {
        match *self {
            Self::BlockRows { rows, .. } | Self::ResidueRows { rows, .. } => rows,
        }
    }

    pub fn cols(&self) -> usize {
        match *self {
            Self::BlockRows { cols, .. } | Self::ResidueRows { cols, .. } => cols,
        }
    }

    pub fn len(&self) -> usize {
        self.rows() * self.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Flat coordinate of entry `(row, col)`.
    #[inline]
    pub fn coordinate(&self, row: usize, col: usize) -> usize {
        debug_assert!((1..=self.rows()).contains(&row) && (1..=self.cols()).contains(&col));
        match *self {
            Self::BlockRows { cols, .. } => (row - 1) * cols + col,
            Self::ResidueRows { rows, .. } => row + (col - 1) * rows,
        }
    }

    /// Entry `(row, col)` holding a flat coordinate.
    #[inline]
    pub fn position(&self, coordinate: usize) -> (usize, usize) {
        let j = coordinate - 1;
        match *self {
            Self::BlockRows { cols, .. } => (j / cols + 1, j % cols + 1),
            Self::ResidueRows { rows, .. } => (j % rows + 1, j / rows + 1),
        }
    }

    fn check(&self, len: usize) -> Result<()> {
        if self.len() != len {
            return Err(Error::LayoutMismatch {
                rows: self.rows(),
                cols: self.cols(),
                len,
            });
        }
        Ok(())
    }

    pub fn to_matrix(&self, w: &Codeword) -> Result<Vec<Codeword>> {
        self.check(w.len())?;
        let mut out = vec![Codeword::zeros(self.cols()); self.rows()];
        for j in w.support() {
            let (a, b) = self.position(j + 1);
            out[a - 1].set(b - 1, true);
        }
        Ok(out)
    }

    pub fn from_matrix(&self, rows: &[Codeword]) -> Result<Codeword> {
        if rows.len() != self.rows() || rows.iter().any(|r| r.len() != self.cols()) {
            return Err(Error::LayoutMismatch {
                rows: self.rows(),
                cols: self.cols(),
                len: rows.iter().map(Codeword::len).sum(),
            });
        }
        let mut w = Codeword::zeros(self.len());
        for (a, row) in rows.iter().enumerate() {
            for b in row.support() {
                w.set(self.coordinate(a + 1, b + 1) - 1, true);
            }
        }
        Ok(w)
    }
}
