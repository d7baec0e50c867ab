//! Matching functions between ordered finite sets.
//!
//! A [`RelationInstance`] holds a relation `y ⤳ x` between `X = {0,…,nx-1}`
//! and `Y = {0,…,ny-1}`, each totally ordered by index.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationInstance {
    nx: usize,
    ny: usize,
    // rel[x][y] is y ⤳ x
    rel: Vec<Vec<bool>>,
}

impl RelationInstance {
    pub fn new(nx: usize, ny: usize) -> Self {
        Self {
            nx,
            ny,
            rel: vec![vec![false; ny]; nx],
        }
    }

    /// Builds the instance from a predicate `rel(y, x)`.
    pub fn from_fn(nx: usize, ny: usize, mut rel: impl FnMut(usize, usize) -> bool) -> Self {
        Self {
            nx,
            ny,
            rel: (0..nx).map(|x| (0..ny).map(|y| rel(y, x)).collect()).collect(),
        }
    }

    pub fn from_edges(nx: usize, ny: usize, edges: &[(usize, usize)]) -> Self {
        let mut r = Self::new(nx, ny);
        for &(y, x) in edges {
            r.set(y, x, true);
        }
        r
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    /// `y ⤳ x`.
    pub fn related(&self, y: usize, x: usize) -> bool {
        self.rel[x][y]
    }

    pub fn set(&mut self, y: usize, x: usize, value: bool) {
        self.rel[x][y] = value;
    }

    pub fn edge_count(&self) -> usize {
        self.rel.iter().flatten().filter(|&&b| b).count()
    }

    /// The instance on the given sub-lists of `X` and `Y`, reindexed in the
    /// order the lists are given.
    pub fn restrict(&self, xs: &[usize], ys: &[usize]) -> Self {
        Self::from_fn(xs.len(), ys.len(), |y, x| self.related(ys[y], xs[x]))
    }

    /// `{y : y ⤳ x}` for some `x` in `xs`.
    pub fn neighbourhood(&self, xs: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut seen = vec![false; self.ny];
        for x in xs {
            for (y, s) in seen.iter_mut().enumerate() {
                *s |= self.rel[x][y];
            }
        }
        (0..self.ny).filter(|&y| seen[y]).collect()
    }
}

/// A partial injective map `f: X → Y` with `f(x) ⤳ x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    /// `map[x]` is `f(x)` when `x` is in the domain.
    pub map: Vec<Option<usize>>,
    /// `X` minus the domain, increasing.
    pub domain_complement: Vec<usize>,
    /// `Y` minus the range, increasing.
    pub range_complement: Vec<usize>,
}

impl Matching {
    fn from_map(map: Vec<Option<usize>>, ny: usize) -> Self {
        let mut used = vec![false; ny];
        for y in map.iter().flatten() {
            used[*y] = true;
        }
        Self {
            domain_complement: (0..map.len()).filter(|&x| map[x].is_none()).collect(),
            range_complement: (0..ny).filter(|&y| !used[y]).collect(),
            map,
        }
    }

    pub fn size(&self) -> usize {
        self.map.iter().flatten().count()
    }

    /// Whether the domain is all of `X`.
    pub fn is_total(&self) -> bool {
        self.domain_complement.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.map
            .iter()
            .enumerate()
            .filter_map(|(x, y)| y.map(|y| (x, y)))
    }

    pub fn is_valid_for(&self, r: &RelationInstance) -> bool {
        let mut used = vec![false; r.ny()];
        self.map.len() == r.nx()
            && self.pairs().all(|(x, y)| {
                let fresh = !used[y];
                used[y] = true;
                fresh && r.related(y, x)
            })
    }
}

pub fn is_traversable(r: &RelationInstance) -> bool {
    for x1 in 0..r.nx() {
        for x2 in 0..x1 {
            for y1 in 0..r.ny() {
                if !r.related(y1, x1) || r.related(y1, x2) {
                    continue;
                }
                if (0..y1).any(|y2| r.related(y2, x1) && r.related(y2, x2)) {
                    return false;
                }
            }
        }
    }
    true
}

/// The greedy best matching: from the largest `x` down, take the minimal
/// unused `y` with `y ⤳ x`.
pub fn best_matching(r: &RelationInstance) -> Matching {
    let mut used = vec![false; r.ny()];
    let mut map = vec![None; r.nx()];
    for x in (0..r.nx()).rev() {
        if let Some(y) = (0..r.ny()).find(|&y| !used[y] && r.related(y, x)) {
            used[y] = true;
            map[x] = Some(y);
        }
    }
    Matching::from_map(map, r.ny())
}

/// A maximum matching by augmenting paths.
pub fn max_matching(r: &RelationInstance) -> Matching {
    fn augment(
        r: &RelationInstance,
        x: usize,
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for y in 0..r.ny() {
            if r.related(y, x) && !seen[y] {
                seen[y] = true;
                if owner[y].map_or(true, |x2| augment(r, x2, seen, owner)) {
                    owner[y] = Some(x);
                    return true;
                }
            }
        }
        false
    }

    let mut owner = vec![None; r.ny()];
    for x in 0..r.nx() {
        let mut seen = vec![false; r.ny()];
        augment(r, x, &mut seen, &mut owner);
    }
    let mut map = vec![None; r.nx()];
    for (y, x) in owner.iter().enumerate() {
        if let Some(x) = x {
            map[*x] = Some(y);
        }
    }
    Matching::from_map(map, r.ny())
}

pub fn max_matching_size(r: &RelationInstance) -> usize {
    max_matching(r).size()
}

pub const DEFAULT_HALL_CAP: usize = 20;

/// Hall's condition `|N(A)| ≥ |A|` over every subset `A ⊆ X`.
pub fn hall_check(r: &RelationInstance, cap: usize) -> Result<bool> {
    if r.nx() > cap {
        return Err(Error::CapExceeded {
            what: "hall_check |X|",
            size: r.nx(),
            cap,
        });
    }
    if r.ny() > 64 {
        return Ok((1u64..1 << r.nx()).all(|mask| {
            let a: Vec<usize> = (0..r.nx()).filter(|x| mask >> x & 1 == 1).collect();
            r.neighbourhood(a.iter().copied()).len() >= a.len()
        }));
    }
    let nbr: Vec<u64> = (0..r.nx())
        .map(|x| (0..r.ny()).filter(|&y| r.related(y, x)).fold(0, |acc, y| acc | 1 << y))
        .collect();
    Ok((1u64..1 << r.nx()).all(|mask| {
        let n = (0..r.nx())
            .filter(|x| mask >> x & 1 == 1)
            .fold(0u64, |acc, x| acc | nbr[x]);
        n.count_ones() >= mask.count_ones()
    }))
}
