//! Dancing-links exact cover search, used as an independent check on the
//! layered partial-spread construction.

use std::collections::BTreeSet;

use crate::constructions::PartialSpread;
use crate::error::{Error, Result};
use crate::geometry::{enumerate_lines, enumerate_points, Point};

/// Largest ambient dimension for [`exact_cover_partial_spread`].
pub const DEFAULT_EXACT_COVER_LIMIT: u32 = 7;

/// Knuth's Algorithm X on a toroidal doubly linked node array.
///
/// Node 0 is the root, nodes `1..=items` are column headers, the rest are
/// option entries.
#[derive(Debug, Clone)]
pub struct DancingLinks {
    left: Vec<usize>,
    right: Vec<usize>,
    up: Vec<usize>,
    down: Vec<usize>,
    column: Vec<usize>,
    option: Vec<usize>,
    size: Vec<usize>,
    options: usize,
}

impl DancingLinks {
    pub fn new(items: usize) -> Self {
        let n = items + 1;
        let mut dl = DancingLinks {
            left: (0..n).map(|i| (i + n - 1) % n).collect(),
            right: (0..n).map(|i| (i + 1) % n).collect(),
            up: (0..n).collect(),
            down: (0..n).collect(),
            column: (0..n).collect(),
            option: vec![usize::MAX; n],
            size: vec![0; n],
            options: 0,
        };
        dl.size[0] = usize::MAX;
        dl
    }

    /// Adds an option covering the given items (0-based); returns its index.
    pub fn add_option(&mut self, items: &[usize]) -> usize {
        let id = self.options;
        self.options += 1;
        let mut first: Option<usize> = None;
        for &item in items {
            let c = item + 1;
            assert!(c < self.size.len(), "item {item} out of range");
            let node = self.left.len();
            let last = self.up[c];
            self.up.push(last);
            self.down.push(c);
            self.down[last] = node;
            self.up[c] = node;
            self.column.push(c);
            self.option.push(id);
            self.size[c] += 1;
            match first {
                None => {
                    self.left.push(node);
                    self.right.push(node);
                    first = Some(node);
                }
                Some(f) => {
                    let tail = self.left[f];
                    self.left.push(tail);
                    self.right.push(f);
                    self.right[tail] = node;
                    self.left[f] = node;
                }
            }
        }
        id
    }

    fn cover(&mut self, c: usize) {
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = r;
        self.left[r] = l;
        let mut i = self.down[c];
        while i != c {
            let mut j = self.right[i];
            while j != i {
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = d;
                self.up[d] = u;
                self.size[self.column[j]] -= 1;
                j = self.right[j];
            }
            i = self.down[i];
        }
    }

    fn uncover(&mut self, c: usize) {
        let mut i = self.up[c];
        while i != c {
            let mut j = self.left[i];
            while j != i {
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = j;
                self.up[d] = j;
                self.size[self.column[j]] += 1;
                j = self.left[j];
            }
            i = self.up[i];
        }
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = c;
        self.left[r] = c;
    }

    /// Column with the fewest remaining options, lowest index on ties.
    fn choose(&self) -> Option<usize> {
        let mut best = None;
        let mut best_size = usize::MAX;
        let mut c = self.right[0];
        while c != 0 {
            if self.size[c] < best_size {
                best = Some(c);
                best_size = self.size[c];
            }
            c = self.right[c];
        }
        best
    }

    fn search(&mut self, partial: &mut Vec<usize>) -> bool {
        let Some(c) = self.choose() else {
            return true;
        };
        if self.size[c] == 0 {
            return false;
        }
        self.cover(c);
        let mut r = self.down[c];
        while r != c {
            partial.push(self.option[r]);
            let mut j = self.right[r];
            while j != r {
                self.cover(self.column[j]);
                j = self.right[j];
            }
            if self.search(partial) {
                return true;
            }
            let mut j = self.left[r];
            while j != r {
                self.uncover(self.column[j]);
                j = self.left[j];
            }
            partial.pop();
            r = self.down[r];
        }
        self.uncover(c);
        false
    }

    /// First exact cover found, as option indices in selection order.
    ///
    /// Leaves the structure in a partially covered state when it succeeds.
    pub fn solve_first(&mut self) -> Option<Vec<usize>> {
        let mut partial = Vec::new();
        self.search(&mut partial).then_some(partial)
    }
}

/// Searches for lines that avoid `holes` and cover every other point of
/// PG(l-1, 2) exactly once. `Ok(None)` when no such partial spread exists.
pub fn exact_cover_partial_spread(l: u32, holes: &[Point]) -> Result<Option<PartialSpread>> {
    exact_cover_partial_spread_with_limit(l, holes, DEFAULT_EXACT_COVER_LIMIT)
}

pub fn exact_cover_partial_spread_with_limit(
    l: u32,
    holes: &[Point],
    limit: u32,
) -> Result<Option<PartialSpread>> {
    if !(2..=limit).contains(&l) {
        return Err(Error::DimensionOutOfRange {
            l,
            min: 2,
            max: limit,
        });
    }
    let hole_set: BTreeSet<u32> = holes
        .iter()
        .map(|p| Point::new(p.mask(), l).map(Point::mask))
        .collect::<Result<_>>()?;
    let targets: Vec<u32> = enumerate_points(l)?
        .into_iter()
        .map(Point::mask)
        .filter(|p| !hole_set.contains(p))
        .collect();
    let mut index = vec![usize::MAX; 1 << l];
    for (i, &p) in targets.iter().enumerate() {
        index[p as usize] = i;
    }
    let candidates: Vec<_> = enumerate_lines(l)?
        .into_iter()
        .filter(|ln| ln.masks().iter().all(|p| !hole_set.contains(p)))
        .collect();
    let mut dl = DancingLinks::new(targets.len());
    for ln in &candidates {
        let items = ln.masks().map(|p| index[p as usize]);
        dl.add_option(&items);
    }
    match dl.solve_first() {
        None => Ok(None),
        Some(chosen) => {
            let lines = chosen.into_iter().map(|i| candidates[i]).collect();
            PartialSpread::new(l, lines).map(Some)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::fano_subplane;

    #[test]
    fn small_exact_cover() {
        // Knuth's example: the unique solution is options {0, 3, 4}
        let mut dl = DancingLinks::new(7);
        dl.add_option(&[2, 4, 5]);
        dl.add_option(&[0, 3, 6]);
        dl.add_option(&[1, 2, 5]);
        dl.add_option(&[0, 3]);
        dl.add_option(&[1, 6]);
        dl.add_option(&[3, 4, 6]);
        let mut sol = dl.solve_first().unwrap();
        sol.sort_unstable();
        assert_eq!(sol, vec![0, 3, 4]);
    }

    #[test]
    fn infeasible_exact_cover() {
        let mut dl = DancingLinks::new(3);
        dl.add_option(&[0, 1]);
        dl.add_option(&[1, 2]);
        assert_eq!(dl.solve_first(), None);
    }

    #[test]
    fn fano_holes_l5() {
        let e = fano_subplane(5).unwrap();
        let ps = exact_cover_partial_spread(5, e.points()).unwrap().unwrap();
        assert_eq!(ps.lines().len(), 8);
        assert_eq!(
            ps.holes().iter().copied().collect::<Vec<_>>(),
            e.points().to_vec()
        );
    }

    #[test]
    fn whole_plane_as_holes() {
        let pts: Vec<Point> = enumerate_points(3).unwrap();
        let ps = exact_cover_partial_spread(3, &pts).unwrap().unwrap();
        assert!(ps.lines().is_empty());
        assert_eq!(ps.holes().len(), 7);
    }

    #[test]
    fn spread_of_pg32_found() {
        let ps = exact_cover_partial_spread(4, &[]).unwrap().unwrap();
        assert_eq!(ps.lines().len(), 5);
        assert!(ps.holes().is_empty());
    }

    #[test]
    fn non_fano_holes_l5() {
        let holes: Vec<Point> = [1, 2, 3, 4, 5, 6, 8]
            .iter()
            .map(|&m| Point::new(m, 5).unwrap())
            .collect();
        // outcome is data; any returned spread must respect the hole set
        if let Some(ps) = exact_cover_partial_spread(5, &holes).unwrap() {
            assert_eq!(ps.holes().iter().copied().collect::<Vec<_>>(), holes);
            assert_eq!(ps.lines().len(), 8);
        }
    }

    #[test]
    fn limit_enforced() {
        assert!(exact_cover_partial_spread(9, &[]).is_err());
        assert!(
            exact_cover_partial_spread_with_limit(5, &[Point::new(40, 6).unwrap()], 7).is_err()
        );
    }
}
