//! Points, lines and hyperplanes of the binary projective space PG(l-1, 2).
//!
//! A point is a nonzero vector of F_2^l stored as a bit mask, bit `i` being
//! the `i`-th coordinate. Hyperplanes are stored by their dual vector: a
//! point `p` lies in the hyperplane `h` iff `p AND h` has even parity.
//! A line is the set `{a, b, a XOR b}` of three distinct points, kept as a
//! numerically sorted triple.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest ambient dimension accepted anywhere in the crate.
pub const MAX_DIM: u32 = 24;

#[inline]
fn parity(x: u32) -> bool {
    x.count_ones() & 1 == 1
}

fn check_dim(l: u32, min: u32) -> Result<()> {
    if l < min || l > MAX_DIM {
        return Err(Error::DimensionOutOfRange {
            l,
            min,
            max: MAX_DIM,
        });
    }
    Ok(())
}

/// Number of nonzero vectors of F_2^l, i.e. points (and hyperplanes) of PG(l-1, 2).
#[inline]
pub fn point_count(l: u32) -> u32 {
    (1u32 << l) - 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(u32);

impl Point {
    pub fn new(mask: u32, l: u32) -> Result<Self> {
        if mask == 0 || l > MAX_DIM || mask >> l != 0 {
            return Err(Error::PointOutOfRange { mask, l });
        }
        Ok(Point(mask))
    }

    #[inline]
    pub fn mask(self) -> u32 {
        self.0
    }

    /// Smallest ambient dimension in which this point exists.
    pub fn min_dim(self) -> u32 {
        32 - self.0.leading_zeros()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Hyperplane(u32);

impl Hyperplane {
    pub fn new(dual_mask: u32, l: u32) -> Result<Self> {
        if dual_mask == 0 || l > MAX_DIM || dual_mask >> l != 0 {
            return Err(Error::PointOutOfRange { mask: dual_mask, l });
        }
        Ok(Hyperplane(dual_mask))
    }

    #[inline]
    pub fn dual_mask(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn contains_point(self, p: Point) -> bool {
        !parity(p.0 & self.0)
    }

    #[inline]
    pub fn contains_line(self, line: &Line) -> bool {
        line_in_hyperplane(line, self)
    }
}

/// A line of PG(l-1, 2) in canonical form `a < b < c`, `c = a XOR b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Line([u32; 3]);

impl Line {
    /// The line through two distinct points.
    pub fn through(a: Point, b: Point) -> Result<Self> {
        line_through(a, b)
    }

    /// Accept a triple only if it is already canonical.
    pub fn from_triple(a: u32, b: u32, c: u32) -> Result<Self> {
        if a == 0 || !(a < b && b < c) || a ^ b != c {
            return Err(Error::NotALine(a, b, c));
        }
        Ok(Line([a, b, c]))
    }

    #[inline]
    pub fn masks(&self) -> [u32; 3] {
        self.0
    }

    pub fn points(&self) -> [Point; 3] {
        self.0.map(Point)
    }

    /// The two smallest points, used as the ordered F_2-basis of the line.
    #[inline]
    pub fn basis(&self) -> (Point, Point) {
        (Point(self.0[0]), Point(self.0[1]))
    }

    #[inline]
    pub fn contains(&self, p: Point) -> bool {
        self.0.contains(&p.0)
    }

    pub fn is_disjoint(&self, other: &Line) -> bool {
        self.0.iter().all(|p| !other.0.contains(p))
    }

    /// Smallest ambient dimension in which this line exists.
    pub fn min_dim(&self) -> u32 {
        Point(self.0[2]).min_dim()
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{}}}", self.0[0], self.0[1], self.0[2])
    }
}

pub fn enumerate_points(l: u32) -> Result<Vec<Point>> {
    check_dim(l, 1)?;
    Ok((1..=point_count(l)).map(Point).collect())
}

pub fn line_through(a: Point, b: Point) -> Result<Line> {
    if a.0 == 0 || b.0 == 0 || a == b {
        return Err(Error::DegenerateLine { a: a.0, b: b.0 });
    }
    let mut t = [a.0, b.0, a.0 ^ b.0];
    t.sort_unstable();
    Ok(Line(t))
}

/// Number of lines of PG(l-1, 2): (2^l - 1)(2^l - 2) / 6.
pub fn line_count(l: u32) -> Result<u64> {
    check_dim(l, 2)?;
    let q = 1u64 << l;
    Ok((q - 1) * (q - 2) / 6)
}

/// All lines of PG(l-1, 2) in lexicographic order.
pub fn enumerate_lines(l: u32) -> Result<Vec<Line>> {
    let count = line_count(l)? as usize;
    let top = point_count(l);
    let mut lines = Vec::with_capacity(count);
    for a in 1..=top {
        for b in a + 1..=top {
            let c = a ^ b;
            if c > b {
                lines.push(Line([a, b, c]));
            }
        }
    }
    debug_assert_eq!(lines.len(), count);
    Ok(lines)
}

/// Both generators orthogonal to the dual vector; the third point follows.
#[inline]
pub fn line_in_hyperplane(line: &Line, h: Hyperplane) -> bool {
    !parity(line.0[0] & h.0) && !parity(line.0[1] & h.0)
}

/// Basis of the annihilator of span{a, b} in F_2^l, which has dimension l - 2.
fn annihilator_basis(line: &Line, l: u32) -> Vec<u32> {
    // Reduce {a, b} so that each row owns a pivot bit absent from the other.
    let mut r1 = line.0[0];
    let mut r2 = line.0[1];
    let p1 = 31 - r1.leading_zeros();
    if r2 >> p1 & 1 == 1 {
        r2 ^= r1;
    }
    let p2 = 31 - r2.leading_zeros();
    if r1 >> p2 & 1 == 1 {
        r1 ^= r2;
    }
    (0..l)
        .filter(|&j| j != p1 && j != p2)
        .map(|j| {
            let mut h = 1u32 << j;
            if r1 >> j & 1 == 1 {
                h |= 1 << p1;
            }
            if r2 >> j & 1 == 1 {
                h |= 1 << p2;
            }
            h
        })
        .collect()
}

/// Calls `f` once for every hyperplane containing `line`, in Gray-code order.
pub fn for_each_hyperplane_containing(line: &Line, l: u32, mut f: impl FnMut(u32)) {
    let basis = annihilator_basis(line, l);
    let mut cur = 0u32;
    for i in 1u32..(1 << basis.len()) {
        cur ^= basis[i.trailing_zeros() as usize];
        f(cur);
    }
}

/// The 2^{l-2} - 1 hyperplanes through `line`, sorted by dual mask.
pub fn hyperplanes_containing_line(line: &Line, l: u32) -> Result<Vec<Hyperplane>> {
    check_dim(l, 2)?;
    if line.min_dim() > l {
        return Err(Error::PointOutOfRange { mask: line.0[2], l });
    }
    let mut out = Vec::with_capacity((1usize << (l - 2)) - 1);
    for_each_hyperplane_containing(line, l, |h| out.push(Hyperplane(h)));
    out.sort_unstable();
    Ok(out)
}

/// A Fano subplane PG(2, 2) embedded in a larger space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanoPlane {
    points: [Point; 7],
    lines: [Line; 7],
}

impl FanoPlane {
    pub fn points(&self) -> &[Point; 7] {
        &self.points
    }

    pub fn lines(&self) -> &[Line; 7] {
        &self.lines
    }

    pub fn contains_point(&self, p: Point) -> bool {
        self.points.contains(&p)
    }

    /// True iff every point of the plane lies in `h`.
    pub fn is_contained_in(&self, h: Hyperplane) -> bool {
        self.points.iter().all(|&p| h.contains_point(p))
    }
}

/// The Fano plane spanned by the three lowest coordinate vectors: masks 1..=7.
pub fn fano_subplane(l: u32) -> Result<FanoPlane> {
    check_dim(l, 3)?;
    let points = std::array::from_fn(|i| Point(i as u32 + 1));
    let lines: [Line; 7] = enumerate_lines(3)?
        .try_into()
        .expect("PG(2,2) has seven lines");
    Ok(FanoPlane { points, lines })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(a: u32, b: u32, c: u32) -> Line {
        Line::from_triple(a, b, c).unwrap()
    }

    #[test]
    fn points_in_order() {
        let m = |v: Vec<Point>| v.into_iter().map(Point::mask).collect::<Vec<_>>();
        assert_eq!(m(enumerate_points(1).unwrap()), vec![1]);
        assert_eq!(m(enumerate_points(3).unwrap()), vec![1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(enumerate_points(5).unwrap().len(), 31);
        assert!(enumerate_points(0).is_err());
    }

    #[test]
    fn line_through_examples() {
        let p = |m| Point::new(m, 4).unwrap();
        assert_eq!(line_through(p(1), p(2)).unwrap(), line(1, 2, 3));
        assert_eq!(line_through(p(3), p(5)).unwrap(), line(3, 5, 6));
        assert_eq!(line_through(p(5), p(3)).unwrap(), line(3, 5, 6));
        assert_eq!(
            line_through(p(2), p(2)),
            Err(Error::DegenerateLine { a: 2, b: 2 })
        );
        assert!(Point::new(0, 3).is_err());
        assert!(Point::new(8, 3).is_err());
    }

    #[test]
    fn triple_validation() {
        assert!(Line::from_triple(1, 2, 4).is_err());
        assert!(Line::from_triple(2, 1, 3).is_err());
        assert!(Line::from_triple(0, 3, 3).is_err());
        assert!(Line::from_triple(3, 5, 6).is_ok());
    }

    #[test]
    fn line_counts() {
        assert_eq!(line_count(3).unwrap(), 7);
        assert_eq!(line_count(4).unwrap(), 35);
        assert_eq!(line_count(6).unwrap(), 651);
        assert_eq!(line_count(6).unwrap(), 21 * 31);
        assert!(line_count(1).is_err());
        assert_eq!(enumerate_lines(3).unwrap().len(), 7);
        assert_eq!(enumerate_lines(4).unwrap().len(), 35);
        assert_eq!(enumerate_lines(5).unwrap().len(), 155);
    }

    #[test]
    fn double_counting() {
        for l in 2..=12u32 {
            let q = 1u64 << l;
            assert_eq!(3 * line_count(l).unwrap(), (q - 1) * (q / 2 - 1), "l={l}");
        }
    }

    #[test]
    fn incidence_examples() {
        let l = line(1, 2, 3);
        let h = |m| Hyperplane::new(m, 3).unwrap();
        assert!(line_in_hyperplane(&l, h(4)));
        assert!(!line_in_hyperplane(&l, h(1)));
        assert!(!line_in_hyperplane(&l, h(3)));
    }

    #[test]
    fn lines_per_point_and_hyperplane() {
        for l in 2..=8u32 {
            let lines = enumerate_lines(l).unwrap();
            for p in enumerate_points(l).unwrap() {
                let through = lines.iter().filter(|ln| ln.contains(p)).count() as u32;
                assert_eq!(through, (1 << (l - 1)) - 1);
            }
            for hm in 1..=point_count(l) {
                let h = Hyperplane(hm);
                let pts = enumerate_points(l)
                    .unwrap()
                    .into_iter()
                    .filter(|&p| h.contains_point(p))
                    .count() as u32;
                assert_eq!(pts, (1 << (l - 1)) - 1);
                if l >= 3 {
                    let inside = lines.iter().filter(|ln| h.contains_line(ln)).count() as u64;
                    assert_eq!(inside, line_count(l - 1).unwrap());
                }
            }
        }
    }

    #[test]
    fn hyperplanes_through_line_match_scan() {
        assert_eq!(
            hyperplanes_containing_line(&line(1, 2, 3), 3).unwrap(),
            vec![Hyperplane(4)]
        );
        for l in 2..=8u32 {
            for ln in enumerate_lines(l).unwrap() {
                let fast = hyperplanes_containing_line(&ln, l).unwrap();
                let slow: Vec<_> = (1..=point_count(l))
                    .map(Hyperplane)
                    .filter(|&h| ln.points().iter().all(|&p| h.contains_point(p)))
                    .collect();
                assert_eq!(fast.len(), (1usize << (l - 2)) - 1);
                assert_eq!(fast, slow, "l={l} line={ln}");
            }
        }
    }

    #[test]
    fn line_outside_dimension_rejected() {
        assert!(hyperplanes_containing_line(&line(1, 8, 9), 3).is_err());
    }

    #[test]
    fn fano_invariants() {
        assert!(fano_subplane(2).is_err());
        for l in [3, 5, 7] {
            let e = fano_subplane(l).unwrap();
            let masks: Vec<u32> = e.points().iter().map(|p| p.mask()).collect();
            assert_eq!(masks, (1..=7).collect::<Vec<_>>());
            for ln in e.lines() {
                assert!(ln.points().iter().all(|&p| e.contains_point(p)));
            }
            for (i, &a) in e.points().iter().enumerate() {
                for &b in &e.points()[i + 1..] {
                    let n = e
                        .lines()
                        .iter()
                        .filter(|ln| ln.contains(a) && ln.contains(b))
                        .count();
                    assert_eq!(n, 1);
                }
            }
        }
        assert_eq!(
            fano_subplane(3).unwrap().lines().to_vec(),
            enumerate_lines(3).unwrap()
        );
    }
}
