//! The additive code attached to a multiset of lines.
//!
//! A nonzero dual vector `v` of F_2^l selects one nonzero codeword (up to the
//! F_2-structure of the code). Its weight is the number of codelines not
//! contained in the hyperplane `v^perp`, counted with multiplicity. So the
//! whole weight enumerator is the table of hyperplane loads.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::format_k;
use crate::error::{Error, Result};
use crate::geometry::{for_each_hyperplane_containing, point_count, Hyperplane, Line, MAX_DIM};

/// A multiset of lines in PG(l-1, 2); `l = 2k`.
///
/// Lines are kept sorted and deduplicated, so two codes with the same
/// multiset compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditiveLineCode {
    dim: u32,
    lines: Vec<(Line, u32)>,
}

impl AdditiveLineCode {
    pub fn new(dim: u32, lines: impl IntoIterator<Item = (Line, u32)>) -> Result<Self> {
        if !(2..=MAX_DIM).contains(&dim) {
            return Err(Error::DimensionOutOfRange {
                l: dim,
                min: 2,
                max: MAX_DIM,
            });
        }
        let mut merged: BTreeMap<Line, u32> = BTreeMap::new();
        for (line, mult) in lines {
            if mult == 0 {
                return Err(Error::ZeroMultiplicity {
                    line: line.to_string(),
                });
            }
            if line.min_dim() > dim {
                return Err(Error::PointOutOfRange {
                    mask: line.masks()[2],
                    l: dim,
                });
            }
            *merged.entry(line).or_default() += mult;
        }
        if merged.is_empty() {
            return Err(Error::EmptyCode);
        }
        Ok(AdditiveLineCode {
            dim,
            lines: merged.into_iter().collect(),
        })
    }

    /// Every line with multiplicity one.
    pub fn from_lines(dim: u32, lines: impl IntoIterator<Item = Line>) -> Result<Self> {
        Self::new(dim, lines.into_iter().map(|l| (l, 1)))
    }

    /// Ambient vector-space dimension `l`, which is also `2k`.
    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn two_k(&self) -> u32 {
        self.dim
    }

    /// Distinct codelines with their multiplicities, in canonical order.
    pub fn lines(&self) -> &[(Line, u32)] {
        &self.lines
    }

    /// Code length: total multiplicity.
    pub fn len(&self) -> u64 {
        self.lines.iter().map(|&(_, m)| m as u64).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// Codelines in coordinate order, each repeated by its multiplicity.
    pub fn coordinates(&self) -> impl Iterator<Item = &Line> + '_ {
        self.lines
            .iter()
            .flat_map(|(l, m)| std::iter::repeat_n(l, *m as usize))
    }

    /// Juxtaposition of the two generator matrices: the multiset union.
    pub fn sum(&self, other: &AdditiveLineCode) -> Result<AdditiveLineCode> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        AdditiveLineCode::new(
            self.dim,
            self.lines.iter().chain(other.lines.iter()).copied(),
        )
    }

    /// The sum of `copies` copies of this code.
    pub fn repeated(&self, copies: u32) -> Result<AdditiveLineCode> {
        if copies == 0 {
            return Err(Error::EmptyCode);
        }
        AdditiveLineCode::new(self.dim, self.lines.iter().map(|&(l, m)| (l, m * copies)))
    }

    /// Multiplicity-weighted number of codelines inside `h`.
    pub fn inside(&self, h: Hyperplane) -> u64 {
        self.lines
            .iter()
            .filter(|(l, _)| h.contains_line(l))
            .map(|&(_, m)| m as u64)
            .sum()
    }
}

/// Free-function form of [`AdditiveLineCode::sum`].
pub fn sum_code(c1: &AdditiveLineCode, c2: &AdditiveLineCode) -> Result<AdditiveLineCode> {
    c1.sum(c2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CodeParameters {
    pub n: u64,
    pub two_k: u32,
    pub d: u64,
    pub s: u64,
}

impl CodeParameters {
    pub fn new(n: u64, two_k: u32, d: u64) -> Self {
        CodeParameters {
            n,
            two_k,
            d,
            s: n - d,
        }
    }

    /// Parameters of the concatenated binary code `[3n, 2k, 2d]`.
    pub fn concatenated(&self) -> (u64, u32, u64) {
        (3 * self.n, self.two_k, 2 * self.d)
    }
}

impl fmt::Display for CodeParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]_4", self.n, format_k(self.two_k), self.d)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HyperplaneProfile {
    pub dual_mask: u32,
    pub inside: u64,
    pub outside: u64,
}

pub fn hyperplane_profile(code: &AdditiveLineCode, h: Hyperplane) -> HyperplaneProfile {
    let inside = code.inside(h);
    HyperplaneProfile {
        dual_mask: h.dual_mask(),
        inside,
        outside: code.len() - inside,
    }
}

/// Number of hyperplanes (nonzero dual vectors) having each codeword weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct WeightDistribution(BTreeMap<u64, u64>);

impl WeightDistribution {
    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.0
    }

    pub fn weights(&self) -> BTreeSet<u64> {
        self.0.keys().copied().collect()
    }

    pub fn min_weight(&self) -> u64 {
        *self.0.keys().next().expect("at least one hyperplane")
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }
}

/// How hyperplane loads are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// For each hyperplane, test every distinct codeline.
    Scan,
    /// For each codeline, bump the counters of the `2^{l-2} - 1` hyperplanes through it.
    Dual,
    /// `Dual` once the code has at least `dual_threshold` distinct lines, else `Scan`.
    Auto { dual_threshold: usize },
}

impl Default for Strategy {
    fn default() -> Self {
        Strategy::Auto { dual_threshold: 16 }
    }
}

/// The load `inside(h)` for every hyperplane, indexed by dual mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperplaneLoads {
    dim: u32,
    n: u64,
    // index 0 is unused and held at n
    inside: Vec<u64>,
}

const DUAL_CHUNK: usize = 512;

impl HyperplaneLoads {
    pub fn compute(code: &AdditiveLineCode, strategy: Strategy) -> Self {
        let dim = code.dim;
        let size = 1usize << dim;
        let n = code.len();
        let use_dual = match strategy {
            Strategy::Scan => false,
            Strategy::Dual => true,
            Strategy::Auto { dual_threshold } => code.lines.len() >= dual_threshold,
        };
        let mut inside = if use_dual {
            code.lines
                .par_chunks(DUAL_CHUNK)
                .map(|chunk| {
                    let mut acc = vec![0u64; size];
                    for &(line, m) in chunk {
                        for_each_hyperplane_containing(&line, dim, |h| acc[h as usize] += m as u64);
                    }
                    acc
                })
                .reduce(
                    || vec![0u64; size],
                    |mut a, b| {
                        a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                        a
                    },
                )
        } else {
            (0..size as u32)
                .into_par_iter()
                .map(|h| {
                    if h == 0 {
                        0
                    } else {
                        code.inside(Hyperplane::new(h, dim).unwrap())
                    }
                })
                .collect()
        };
        inside[0] = n;
        HyperplaneLoads { dim, n, inside }
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn profile(&self, h: Hyperplane) -> HyperplaneProfile {
        let inside = self.inside[h.dual_mask() as usize];
        HyperplaneProfile {
            dual_mask: h.dual_mask(),
            inside,
            outside: self.n - inside,
        }
    }

    pub fn profiles(&self) -> impl Iterator<Item = HyperplaneProfile> + '_ {
        (1..=point_count(self.dim)).map(move |h| {
            let inside = self.inside[h as usize];
            HyperplaneProfile {
                dual_mask: h,
                inside,
                outside: self.n - inside,
            }
        })
    }

    pub fn max_inside(&self) -> u64 {
        self.inside[1..].iter().copied().max().unwrap_or(0)
    }

    pub fn parameters(&self) -> CodeParameters {
        CodeParameters::new(self.n, self.dim, self.n - self.max_inside())
    }

    pub fn weight_distribution(&self) -> WeightDistribution {
        let mut hist = BTreeMap::new();
        for &inside in &self.inside[1..] {
            *hist.entry(self.n - inside).or_insert(0u64) += 1;
        }
        WeightDistribution(hist)
    }
}

/// Exact `(n, 2k, d, s)` by full enumeration of hyperplanes.
///
/// `d` may be 0 when the codelines lie in a common hyperplane.
pub fn code_parameters(code: &AdditiveLineCode, strategy: Strategy) -> CodeParameters {
    HyperplaneLoads::compute(code, strategy).parameters()
}

pub fn weight_distribution(code: &AdditiveLineCode, strategy: Strategy) -> WeightDistribution {
    HyperplaneLoads::compute(code, strategy).weight_distribution()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::enumerate_lines;

    fn line(a: u32, b: u32, c: u32) -> Line {
        Line::from_triple(a, b, c).unwrap()
    }

    const BOTH: [Strategy; 2] = [Strategy::Scan, Strategy::Dual];

    #[test]
    fn construction_validates() {
        assert_eq!(AdditiveLineCode::new(3, []), Err(Error::EmptyCode));
        assert!(matches!(
            AdditiveLineCode::new(3, [(line(1, 2, 3), 0)]),
            Err(Error::ZeroMultiplicity { .. })
        ));
        assert!(AdditiveLineCode::from_lines(3, [line(1, 8, 9)]).is_err());
        let c = AdditiveLineCode::new(3, [(line(1, 2, 3), 2), (line(1, 2, 3), 1)]).unwrap();
        assert_eq!(c.lines(), &[(line(1, 2, 3), 3)]);
        assert_eq!(c.len(), 3);
    }

    #[test]
    fn single_line_profile() {
        let c = AdditiveLineCode::from_lines(3, [line(1, 2, 3)]).unwrap();
        let p = hyperplane_profile(&c, Hyperplane::new(1, 3).unwrap());
        assert_eq!((p.inside, p.outside), (0, 1));
        let p = hyperplane_profile(&c, Hyperplane::new(4, 3).unwrap());
        assert_eq!((p.inside, p.outside), (1, 0));
        // the line lies in a hyperplane, so the code is degenerate
        assert_eq!(code_parameters(&c, Strategy::Scan).d, 0);
    }

    #[test]
    fn fano_all_lines() {
        let c = AdditiveLineCode::from_lines(3, enumerate_lines(3).unwrap()).unwrap();
        for s in BOTH {
            let loads = HyperplaneLoads::compute(&c, s);
            assert!(loads.profiles().all(|p| p.inside == 1 && p.outside == 6));
            assert_eq!(
                loads.parameters(),
                CodeParameters {
                    n: 7,
                    two_k: 3,
                    d: 6,
                    s: 1
                }
            );
            assert_eq!(
                loads.weight_distribution().counts(),
                &BTreeMap::from([(6, 7)])
            );
        }
    }

    /// Frozen by an independent scan: every hyperplane of PG(3,2) holds 7 lines.
    #[test]
    fn all_lines_pg32() {
        let c = AdditiveLineCode::from_lines(4, enumerate_lines(4).unwrap()).unwrap();
        for s in BOTH {
            assert_eq!(
                code_parameters(&c, s),
                CodeParameters {
                    n: 35,
                    two_k: 4,
                    d: 28,
                    s: 7
                }
            );
        }
    }

    #[test]
    fn sum_adds_lengths_and_checks_dims() {
        let a = AdditiveLineCode::from_lines(4, [line(1, 2, 3)]).unwrap();
        let b = AdditiveLineCode::from_lines(4, [line(4, 8, 12), line(1, 2, 3)]).unwrap();
        let s = sum_code(&a, &b).unwrap();
        assert_eq!(s.len(), a.len() + b.len());
        assert_eq!(s.lines()[0], (line(1, 2, 3), 2));
        let c = AdditiveLineCode::from_lines(5, [line(1, 2, 3)]).unwrap();
        assert_eq!(
            a.sum(&c),
            Err(Error::DimensionMismatch { left: 4, right: 5 })
        );
        assert_eq!(a.repeated(3).unwrap().len(), 3);
    }

    #[test]
    fn parameters_display() {
        assert_eq!(CodeParameters::new(31, 5, 24).to_string(), "[31,2.5,24]_4");
        assert_eq!(CodeParameters::new(31, 5, 24).s, 7);
        assert_eq!(CodeParameters::new(31, 5, 24).concatenated(), (93, 5, 48));
    }
}
