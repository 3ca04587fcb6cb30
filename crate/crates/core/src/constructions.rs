//! Explicit line multisets: all lines, spreads, partial spreads whose holes
//! form a Fano plane, 3-covers, and the two-weight variant family.

use std::collections::{BTreeMap, BTreeSet};

use crate::code::AdditiveLineCode;
use crate::error::{Error, Result};
use crate::geometry::{
    enumerate_lines, enumerate_points, fano_subplane, line_through, point_count, Line, Point,
};

pub const MAX_ALL_LINES_DIM: u32 = 12;
pub const MAX_SPREAD_DIM: u32 = 12;
pub const MAX_COVER_DIM: u32 = 11;
pub const VARIANT_M_RANGE: std::ops::RangeInclusive<u32> = 2..=5;

fn dim_in(l: u32, min: u32, max: u32) -> Result<()> {
    if l < min || l > max {
        return Err(Error::DimensionOutOfRange { l, min, max });
    }
    Ok(())
}

fn require_odd(l: u32) -> Result<()> {
    if l.is_multiple_of(2) {
        return Err(Error::WrongParity { l, expected: "odd" });
    }
    Ok(())
}

/// Every line of PG(l-1, 2) once.
pub fn all_lines_code(l: u32) -> Result<AdditiveLineCode> {
    dim_in(l, 3, MAX_ALL_LINES_DIM)?;
    AdditiveLineCode::from_lines(l, enumerate_lines(l)?)
}

/// Multiplication by `w` on F_4^{l/2}, one coordinate pair `(u, v)` at bits
/// `(2i, 2i+1)`: `(u, v) -> (v, u ^ v)`.
fn omega(p: u32, l: u32) -> u32 {
    (0..l / 2).fold(0, |acc, i| {
        let u = p >> (2 * i) & 1;
        let v = p >> (2 * i + 1) & 1;
        acc | v << (2 * i) | (u ^ v) << (2 * i + 1)
    })
}

/// The Desarguesian line spread `{p, w p, w^2 p}` of PG(l-1, 2), `l` even.
pub fn spread_lines(l: u32) -> Result<Vec<Line>> {
    dim_in(l, 2, MAX_SPREAD_DIM)?;
    if l % 2 == 1 {
        return Err(Error::WrongParity {
            l,
            expected: "even",
        });
    }
    let mut lines = Vec::with_capacity(point_count(l) as usize / 3);
    for p in 1..=point_count(l) {
        let q = omega(p, l);
        // w^2 p = p ^ w p; keep each orbit once, at its smallest element
        if p < q && p < (p ^ q) {
            lines.push(line_through(Point::new(p, l)?, Point::new(q, l)?)?);
        }
    }
    Ok(lines)
}

/// A 1-cover: the spread of PG(l-1, 2) as a code.
pub fn spread_code(l: u32) -> Result<AdditiveLineCode> {
    dim_in(l, 4, MAX_SPREAD_DIM)?;
    AdditiveLineCode::from_lines(l, spread_lines(l)?)
}

/// Irreducible polynomial of each degree, with the leading term included.
const FIELD_POLYNOMIALS: [(u32, u32); 11] = [
    (2, 0b111),       // x^2 + x + 1
    (3, 0b1011),      // x^3 + x + 1
    (4, 0b1_0011),    // x^4 + x + 1
    (5, 0b10_0101),   // x^5 + x^2 + 1
    (6, 0b100_0011),  // x^6 + x + 1
    (7, 0b1000_0011), // x^7 + x + 1
    (8, 0x11D),       // x^8 + x^4 + x^3 + x^2 + 1
    (9, 0x211),       // x^9 + x^4 + 1
    (10, 0x409),      // x^10 + x^3 + 1
    (11, 0x805),      // x^11 + x^2 + 1
    (12, 0x1053),     // x^12 + x^6 + x^4 + x + 1
];

pub fn field_polynomial(dim: u32) -> Option<u32> {
    FIELD_POLYNOMIALS
        .iter()
        .find(|&&(d, _)| d == dim)
        .map(|&(_, p)| p)
}

/// Rank over F_2 of a set of vectors packed in `u32`s.
pub(crate) fn gf2_rank(vectors: &[u32]) -> u32 {
    let mut basis = [0u32; 32];
    let mut rank = 0;
    for &v in vectors {
        let mut x = v;
        while x != 0 {
            let top = 31 - x.leading_zeros() as usize;
            if basis[top] == 0 {
                basis[top] = x;
                rank += 1;
                break;
            }
            x ^= basis[top];
        }
    }
    rank
}

/// A linear map `sigma` of F_2^dim such that both `sigma` and
/// `x -> x ^ sigma(x)` are bijections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompleteMapping {
    dim: u32,
    columns: Vec<u32>,
}

impl CompleteMapping {
    /// `columns[i]` is the image of the `i`-th unit vector.
    pub fn from_columns(dim: u32, columns: Vec<u32>) -> Result<Self> {
        if columns.len() != dim as usize || dim == 0 || dim > 31 {
            return Err(Error::NotCompleteMapping("need one column per coordinate"));
        }
        if columns.iter().any(|&c| c >> dim != 0) {
            return Err(Error::NotCompleteMapping("column outside the space"));
        }
        if gf2_rank(&columns) != dim {
            return Err(Error::NotCompleteMapping("sigma is singular"));
        }
        let shifted: Vec<u32> = columns
            .iter()
            .enumerate()
            .map(|(i, &c)| c ^ (1 << i))
            .collect();
        if gf2_rank(&shifted) != dim {
            return Err(Error::NotCompleteMapping("x + sigma(x) is singular"));
        }
        Ok(CompleteMapping { dim, columns })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn columns(&self) -> &[u32] {
        &self.columns
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.columns
            .iter()
            .enumerate()
            .filter(|&(i, _)| x >> i & 1 == 1)
            .fold(0, |acc, (_, &c)| acc ^ c)
    }
}

/// Multiplication by the class of `x` in F_2[x] / (f), for the fixed `f` of degree `dim`.
pub fn complete_mapping(dim: u32) -> Result<CompleteMapping> {
    let poly = field_polynomial(dim).ok_or(Error::ParameterOutOfRange {
        name: "dim",
        value: dim as u64,
        min: 2,
        max: 12,
    })?;
    let columns = (0..dim)
        .map(|i| {
            let y = 1u32 << (i + 1);
            if y >> dim & 1 == 1 {
                y ^ poly
            } else {
                y
            }
        })
        .collect();
    CompleteMapping::from_columns(dim, columns)
}

/// Pairwise disjoint lines together with the points they miss.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialSpread {
    dim: u32,
    lines: Vec<Line>,
    holes: BTreeSet<Point>,
}

impl PartialSpread {
    pub fn new(dim: u32, mut lines: Vec<Line>) -> Result<Self> {
        let mut owner: BTreeMap<Point, Line> = BTreeMap::new();
        for line in &lines {
            if line.min_dim() > dim {
                return Err(Error::PointOutOfRange {
                    mask: line.masks()[2],
                    l: dim,
                });
            }
            for p in line.points() {
                if let Some(prev) = owner.insert(p, *line) {
                    return Err(Error::OverlappingLines(prev.to_string(), line.to_string()));
                }
            }
        }
        let holes = enumerate_points(dim)?
            .into_iter()
            .filter(|p| !owner.contains_key(p))
            .collect();
        lines.sort_unstable();
        Ok(PartialSpread { dim, lines, holes })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn holes(&self) -> &BTreeSet<Point> {
        &self.holes
    }
}

/// Lines partitioning the points of F_2^l outside F_2^{l-2}, the two top
/// coordinates carrying the labels 01, 10, 11.
fn layer_lines(l: u32, sigma: &CompleteMapping) -> Result<Vec<Line>> {
    let low = l - 2;
    let e1 = 1u32 << low;
    let e2 = 1u32 << (low + 1);
    (0..1u32 << low)
        .map(|v| {
            let s = sigma.apply(v);
            line_through(Point::new(v | e1, l)?, Point::new(s | e2, l)?)
        })
        .collect()
}

/// Partial spread of PG(l-1, 2), `l` odd, whose holes are exactly the points
/// `1..=7` of the canonical Fano subplane.
///
/// Peels off two coordinates at a time: the points outside `F_2^{l-2}` are
/// partitioned by lines built from a complete mapping, and the recursion
/// continues inside `F_2^{l-2}` down to `F_2^3`.
pub fn partial_spread_outside_fano(l: u32) -> Result<PartialSpread> {
    dim_in(l, 3, MAX_COVER_DIM)?;
    require_odd(l)?;
    let mut lines = Vec::new();
    let mut layer = l;
    while layer > 3 {
        lines.extend(layer_lines(layer, &complete_mapping(layer - 2)?)?);
        layer -= 2;
    }
    PartialSpread::new(l, lines)
}

/// A 3-cover of PG(l-1, 2), `l` odd: the partial spread around the Fano
/// plane `E` with multiplicity 3, plus the seven lines of `E`.
pub fn three_cover_code(l: u32) -> Result<AdditiveLineCode> {
    let spread = partial_spread_outside_fano(l)?;
    let fano = fano_subplane(l)?;
    AdditiveLineCode::new(
        l,
        spread
            .lines()
            .iter()
            .map(|&ln| (ln, 3))
            .chain(fano.lines().iter().map(|&ln| (ln, 1))),
    )
}

fn check_variant_m(m: u32) -> Result<()> {
    if !VARIANT_M_RANGE.contains(&m) {
        return Err(Error::ParameterOutOfRange {
            name: "m",
            value: m as u64,
            min: *VARIANT_M_RANGE.start() as u64,
            max: *VARIANT_M_RANGE.end() as u64,
        });
    }
    Ok(())
}

/// Two-weight code in PG(2m, 2): the partial spread around `E` plus the
/// three lexicographically smallest lines of `E`.
pub fn variant_code(m: u32) -> Result<AdditiveLineCode> {
    check_variant_m(m)?;
    let e = fano_subplane(2 * m + 1)?;
    let [a, b, c, ..] = *e.lines();
    variant_code_with(m, [a, b, c])
}

/// As [`variant_code`] with an explicit choice of three distinct lines of `E`.
pub fn variant_code_with(m: u32, fano_lines: [Line; 3]) -> Result<AdditiveLineCode> {
    check_variant_m(m)?;
    let l = 2 * m + 1;
    let e = fano_subplane(l)?;
    for ln in &fano_lines {
        if !e.lines().contains(ln) {
            return Err(Error::InvalidFanoChoice(format!(
                "{ln} is not a line of the Fano plane"
            )));
        }
    }
    if fano_lines[0] == fano_lines[1]
        || fano_lines[0] == fano_lines[2]
        || fano_lines[1] == fano_lines[2]
    {
        return Err(Error::InvalidFanoChoice(
            "the three Fano lines must be distinct".into(),
        ));
    }
    let spread = partial_spread_outside_fano(l)?;
    AdditiveLineCode::from_lines(l, spread.lines().iter().copied().chain(fano_lines))
}

/// Multiplicity-weighted number of codelines through each point.
pub fn cover_multiplicity(code: &AdditiveLineCode) -> BTreeMap<Point, u64> {
    let mut counts = vec![0u64; 1 << code.dim()];
    for &(line, m) in code.lines() {
        for p in line.masks() {
            counts[p as usize] += m as u64;
        }
    }
    counts
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(p, c)| (Point::new(p as u32, code.dim()).unwrap(), c))
        .collect()
}

/// Whether every point lies on exactly `m` codelines.
pub fn is_m_cover(code: &AdditiveLineCode, m: u64) -> bool {
    cover_multiplicity(code).values().all(|&c| c == m)
}
