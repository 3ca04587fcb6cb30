//! Generator matrices: the quaternary one, its binary concatenation, and a
//! brute-force minimum-weight oracle over the binary row span.
//!
//! Coordinate `j` of the code is codeline `L_j` with ordered basis `(p1, p2)`,
//! its two smallest points. Row `i` holds `bit_i(p1) + w * bit_i(p2)`. The
//! codeword of a dual vector `v` then has symbol `(v.p1) + w (v.p2)` at `j`,
//! which vanishes exactly when `L_j` lies in `v^perp`.

use std::fmt::Write as _;

use crate::code::AdditiveLineCode;
use crate::error::{Error, Result};

/// Default row limit for [`brute_force_min_weight`].
pub const DEFAULT_ORACLE_ROWS: usize = 20;

/// An element `u + w v` of GF(4), with `w^2 = w + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gf4 {
    Zero,
    One,
    /// w
    Omega,
    /// w^2 = 1 + w
    OmegaSq,
}

impl Gf4 {
    pub fn from_bits(u: bool, v: bool) -> Gf4 {
        match (u, v) {
            (false, false) => Gf4::Zero,
            (true, false) => Gf4::One,
            (false, true) => Gf4::Omega,
            (true, true) => Gf4::OmegaSq,
        }
    }

    pub fn bits(self) -> (bool, bool) {
        match self {
            Gf4::Zero => (false, false),
            Gf4::One => (true, false),
            Gf4::Omega => (false, true),
            Gf4::OmegaSq => (true, true),
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Gf4::Zero => '0',
            Gf4::One => '1',
            Gf4::Omega => 'w',
            Gf4::OmegaSq => 'W',
        }
    }

    pub fn from_symbol(c: char) -> Option<Gf4> {
        Some(match c {
            '0' => Gf4::Zero,
            '1' => Gf4::One,
            'w' => Gf4::Omega,
            'W' => Gf4::OmegaSq,
            _ => return None,
        })
    }

    pub fn is_zero(self) -> bool {
        self == Gf4::Zero
    }
}

impl std::ops::Add for Gf4 {
    type Output = Gf4;
    fn add(self, rhs: Gf4) -> Gf4 {
        let (a, b) = self.bits();
        let (c, d) = rhs.bits();
        Gf4::from_bits(a ^ c, b ^ d)
    }
}

/// Row-major `rows x cols` matrix over GF(4).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf4Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Gf4>,
}

impl Gf4Matrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Gf4 {
        self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Gf4] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// The F_2-combination of rows selected by the bits of `v`.
    pub fn codeword(&self, v: u32) -> Vec<Gf4> {
        let mut word = vec![Gf4::Zero; self.cols];
        for r in (0..self.rows).filter(|r| v >> r & 1 == 1) {
            for (w, &x) in word.iter_mut().zip(self.row(r)) {
                *w = *w + x;
            }
        }
        word
    }

    /// One matrix row per text line, symbols `0 1 w W` separated by spaces.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|x| x.symbol().to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

pub fn quaternary_generator_matrix(code: &AdditiveLineCode) -> Gf4Matrix {
    let rows = code.dim() as usize;
    let coords: Vec<_> = code.coordinates().collect();
    let cols = coords.len();
    let mut data = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        data.extend(coords.iter().map(|line| {
            let (p1, p2) = line.basis();
            Gf4::from_bits(p1.mask() >> i & 1 == 1, p2.mask() >> i & 1 == 1)
        }));
    }
    Gf4Matrix { rows, cols, data }
}

/// Row-major binary matrix with rows packed into 64-bit words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64);
        BinaryMatrix {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn from_rows(rows: &[Vec<bool>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = BinaryMatrix::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged binary matrix");
            for (c, &b) in row.iter().enumerate() {
                m.set(r, c, b);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, bit: bool) {
        let w = &mut self.data[r * self.words + c / 64];
        if bit {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    pub fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.words..(r + 1) * self.words]
    }

    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.rows * (self.cols + 1));
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.push(if self.get(r, c) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }
}

/// Expands every GF(4) symbol `u + w v` into the binary triple `(u, v, u ^ v)`.
pub fn concatenate(gen: &Gf4Matrix) -> BinaryMatrix {
    let mut m = BinaryMatrix::zeros(gen.rows(), 3 * gen.cols());
    for r in 0..gen.rows() {
        for (j, x) in gen.row(r).iter().enumerate() {
            let (u, v) = x.bits();
            m.set(r, 3 * j, u);
            m.set(r, 3 * j + 1, v);
            m.set(r, 3 * j + 2, u ^ v);
        }
    }
    m
}

pub fn concatenated_binary_generator(code: &AdditiveLineCode) -> BinaryMatrix {
    concatenate(&quaternary_generator_matrix(code))
}

/// Minimum Hamming weight over all `2^rows - 1` nonzero row combinations.
///
/// Combinations are visited in Gray-code order, so each step costs one
/// row XOR plus a popcount. A result of 0 means the rows are dependent.
pub fn brute_force_min_weight(gen: &BinaryMatrix, row_limit: usize) -> Result<u64> {
    if gen.rows() > row_limit || gen.rows() >= 64 {
        return Err(Error::OracleRefused {
            rows: gen.rows(),
            limit: row_limit,
        });
    }
    if gen.rows() == 0 {
        return Err(Error::EmptyCode);
    }
    let mut cur = vec![0u64; gen.words];
    let mut best = u64::MAX;
    for i in 1u64..(1 << gen.rows()) {
        let r = i.trailing_zeros() as usize;
        let mut weight = 0u64;
        for (c, &x) in cur.iter_mut().zip(gen.row_words(r)) {
            *c ^= x;
            weight += c.count_ones() as u64;
        }
        best = best.min(weight);
    }
    Ok(best)
}

/// `weight,count` lines with a header, for plotting and external tools.
pub fn weights_csv(dist: &crate::code::WeightDistribution) -> String {
    let mut out = String::from("weight,count\n");
    for (w, c) in dist.counts() {
        writeln!(out, "{w},{c}").unwrap();
    }
    out
}
