//! Brute-force twins for differential testing.
//!
//! Nothing here calls into the criteria or matching code paths; only the core
//! types are shared.

use std::collections::{HashSet, VecDeque};

use rand::Rng;

use crate::error::{Error, Result};
use crate::line::Line;
use crate::matching::RelationInstance;
use crate::multisegment::{Multisegment, RigidMultisegment};
use crate::segment::Segment;

pub const ENV_CAP: &str = "MULTISEG_ORACLE_CAP";

/// Hard size limits for the exponential oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCaps {
    /// `|X|` for [`brute_matching_exists`].
    pub matching: usize,
    /// Segments per line for [`ui_order_leq`].
    pub ui_order: usize,
    /// `|X|` for Hall's subset enumeration.
    pub hall: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        Self {
            matching: 10,
            ui_order: 6,
            hall: crate::matching::DEFAULT_HALL_CAP,
        }
    }
}

impl OracleCaps {
    /// Defaults, with every cap replaced by `MULTISEG_ORACLE_CAP` when set.
    pub fn from_env() -> Self {
        Self::env_cap().map_or_else(Self::default, Self::uniform)
    }

    pub fn env_cap() -> Option<usize> {
        std::env::var(ENV_CAP).ok().and_then(|v| v.trim().parse().ok())
    }

    pub fn uniform(cap: usize) -> Self {
        Self {
            matching: cap,
            ui_order: cap,
            hall: cap,
        }
    }
}

/// Whether an injective `f: X → Y` with `f(x) ⤳ x` exists, by backtracking.
pub fn brute_matching_exists(r: &RelationInstance, cap: usize) -> Result<bool> {
    if r.nx() > cap {
        return Err(Error::CapExceeded {
            what: "brute matching |X|",
            size: r.nx(),
            cap,
        });
    }
    Ok(injection_exists(r.nx(), r.ny(), &|y, x| r.related(y, x)))
}

fn injection_exists(nx: usize, ny: usize, rel: &dyn Fn(usize, usize) -> bool) -> bool {
    fn go(x: usize, nx: usize, ny: usize, used: &mut [bool], rel: &dyn Fn(usize, usize) -> bool) -> bool {
        if x == nx {
            return true;
        }
        for y in 0..ny {
            if !used[y] && rel(y, x) {
                used[y] = true;
                if go(x + 1, nx, ny, used, rel) {
                    return true;
                }
                used[y] = false;
            }
        }
        false
    }
    nx <= ny && go(0, nx, ny, &mut vec![false; ny], rel)
}

/// `RC(Δ, m)` from the direct definition: `X̃ = {i : Δ_i ≺ Δ}`,
/// `Ỹ = {i : ◁Δ_i ≺ Δ}`, and `j ⤳ i` iff `Δ_i ≺ Δ_j`.
pub fn rc_seg_direct(delta: Segment, m: &RigidMultisegment) -> bool {
    let segs = m.segments();
    let x: Vec<Segment> = segs.iter().copied().filter(|s| s.precedes(&delta)).collect();
    let y: Vec<Segment> = segs
        .iter()
        .copied()
        .filter(|s| s.shift_left().precedes(&delta))
        .collect();
    injection_exists(x.len(), y.len(), &|j, i| x[i].precedes(&y[j]))
}

/// Whether `a` is reachable from `b` by replacing linked pairs with their
/// union and intersection, line by line.
pub fn ui_order_leq(a: &Multisegment, b: &Multisegment, cap: usize) -> Result<bool> {
    let lines: std::collections::BTreeSet<&Line> = a.lines().chain(b.lines()).collect();
    for line in lines {
        if !ui_order_leq_rigid(&a.part_or_empty(line), &b.part_or_empty(line), cap)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn ui_order_leq_rigid(a: &RigidMultisegment, b: &RigidMultisegment, cap: usize) -> Result<bool> {
    if a.support_points() != b.support_points() {
        return Ok(false);
    }
    if b.len() > cap {
        return Err(Error::CapExceeded {
            what: "union-intersection search, segments per line",
            size: b.len(),
            cap,
        });
    }
    let mut seen = HashSet::from([b.clone()]);
    let mut queue = VecDeque::from([b.clone()]);
    while let Some(cur) = queue.pop_front() {
        if &cur == a {
            return Ok(true);
        }
        let segs = cur.segments();
        for i in 0..segs.len() {
            for j in i + 1..segs.len() {
                let (s, t) = (segs[i], segs[j]);
                if !s.linked(&t) {
                    continue;
                }
                let mut next = cur.clone();
                next.remove(&s)?;
                next.remove(&t)?;
                next.push(Segment::new(s.begin().min(t.begin()), s.end().max(t.end()))?);
                let (lo, hi) = (s.begin().max(t.begin()), s.end().min(t.end()));
                if lo <= hi {
                    next.push(Segment::new(lo, hi)?);
                }
                if next.len() >= a.len() && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(false)
}

/// Every segment with coordinates in `[0, max_coord]`, by `(b, e)`.
pub fn all_segments(max_coord: i64) -> Vec<Segment> {
    (0..=max_coord)
        .flat_map(|b| (b..=max_coord).map(move |e| Segment::new(b, e).expect("b <= e")))
        .collect()
}

/// Every rigid multisegment with coordinates in `[0, max_coord]` and at most
/// `max_segments` segments, each once, by size then lexicographically.
pub fn enumerate_multisegments(max_coord: i64, max_segments: usize) -> Vec<RigidMultisegment> {
    let segs = all_segments(max_coord);
    let mut out = Vec::new();
    for k in 0..=max_segments {
        multisets(&segs, k, 0, &mut Vec::new(), &mut out);
    }
    out
}

fn multisets(
    segs: &[Segment],
    k: usize,
    from: usize,
    cur: &mut Vec<Segment>,
    out: &mut Vec<RigidMultisegment>,
) {
    if cur.len() == k {
        out.push(cur.iter().copied().collect());
        return;
    }
    for i in from..segs.len() {
        cur.push(segs[i]);
        multisets(segs, k, i, cur, out);
        cur.pop();
    }
}

/// `C(n + k − 1, k)` summed over `k ≤ max_segments`, with `n` the number of
/// segments on `max_coord + 1` points.
pub fn multisegment_count(max_coord: i64, max_segments: usize) -> u64 {
    let p = (max_coord + 1) as u64;
    let n = p * (p + 1) / 2;
    (0..=max_segments as u64)
        .map(|k| (1..=k).fold(1u64, |acc, i| acc * (n + i - 1) / i))
        .sum()
}

/// A random rigid multisegment with up to `max_segments` segments in
/// `[0, max_coord]`.
pub fn random_multisegment(rng: &mut impl Rng, max_coord: i64, max_segments: usize) -> RigidMultisegment {
    let k = rng.gen_range(0..=max_segments);
    (0..k)
        .map(|_| {
            let b = rng.gen_range(0..=max_coord);
            let e = rng.gen_range(b..=max_coord);
            Segment::new(b, e).expect("b <= e")
        })
        .collect()
}

/// A random traversable relation: each `x` relates to an interval of `Y`
/// whose upper end does not grow with `x`.
pub fn random_traversable(rng: &mut impl Rng, max_x: usize, max_y: usize) -> RelationInstance {
    let (nx, ny) = (rng.gen_range(0..=max_x), rng.gen_range(0..=max_y));
    let mut r = RelationInstance::new(nx, ny);
    if ny == 0 {
        return r;
    }
    let mut hi = ny - 1;
    for x in 0..nx {
        if rng.gen_bool(0.4) {
            hi = rng.gen_range(0..=hi);
        }
        if rng.gen_bool(0.15) {
            continue;
        }
        let lo = rng.gen_range(0..=hi);
        for y in lo..=hi {
            r.set(y, x, true);
        }
    }
    r
}
