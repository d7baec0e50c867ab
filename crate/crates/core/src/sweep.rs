//! Differential suites over enumerated and random instances.
//!
//! Each suite checks identities between independent computations and tallies
//! mismatches. The CLI `sweep` command and the acceptance tests both run them.

use std::collections::HashSet;
use std::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::criteria::{
    cosocle_ladder_times, irreducible_ladder_times, irreducible_seg_times_involution_rigid,
    irreducible_seg_times_rigid, is_ladder, is_saturated_by_blocks, is_saturated_by_multiplicity,
    is_speh, lc_pair, lc_seg, lc_seg_speh, nc_condition, rc_seg, rc_seg_speh,
    rho_extraction_rigid, cusp_socle_rigid, socle_ladder_times, socle_seg_times_rigid,
    speh_reducibility, sufficient_irreducible, CuspInstance, LcInstance, PairVariant,
};
use crate::error::{Error, Result};
use crate::grammar::parse;
use crate::involution::transpose;
use crate::line::Rational;
use crate::matching::{
    best_matching, hall_check, is_traversable, max_matching_size, Matching, RelationInstance,
};
use crate::multisegment::RigidMultisegment;
use crate::oracle::{
    all_segments, brute_matching_exists, enumerate_multisegments, random_multisegment,
    random_traversable, rc_seg_direct, ui_order_leq_rigid, OracleCaps,
};
use crate::segment::Segment;
use crate::unitary::{tadic_product, BElement, SpehParam};

const EXAMPLES_KEPT: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Involution,
    SegPairs,
    SegCriteria,
    Matching,
    Cusp,
    Ladder,
    Speh,
    CosocleIdentity,
    Unitary,
    Dominance,
    Named,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Involution,
        Suite::SegPairs,
        Suite::SegCriteria,
        Suite::Matching,
        Suite::Cusp,
        Suite::Ladder,
        Suite::Speh,
        Suite::CosocleIdentity,
        Suite::Unitary,
        Suite::Dominance,
        Suite::Named,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Involution => "involution",
            Suite::SegPairs => "seg-pairs",
            Suite::SegCriteria => "seg-criteria",
            Suite::Matching => "matching",
            Suite::Cusp => "cusp",
            Suite::Ladder => "ladder",
            Suite::Speh => "speh",
            Suite::CosocleIdentity => "cosocle-identity",
            Suite::Unitary => "unitary",
            Suite::Dominance => "dominance",
            Suite::Named => "named",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }

    /// The bounds the acceptance run uses.
    pub fn default_bounds(self) -> Bounds {
        let b = |max_coord, max_segs, random| Bounds {
            max_coord,
            max_segs,
            random,
            ..Bounds::default()
        };
        match self {
            Suite::Involution => b(4, 3, 10_000),
            Suite::SegPairs => b(5, 1, 0),
            Suite::SegCriteria => b(5, 4, 0),
            Suite::Matching => b(5, 4, 10_000),
            Suite::Cusp => b(4, 4, 0),
            Suite::Ladder => b(4, 3, 0),
            Suite::Speh => b(4, 4, 0),
            Suite::CosocleIdentity => b(4, 4, 0),
            Suite::Unitary => b(4, 4, 0),
            Suite::Dominance => Bounds {
                caps: OracleCaps {
                    ui_order: OracleCaps::env_cap().unwrap_or(8),
                    ..OracleCaps::from_env()
                },
                ..b(5, 4, 0)
            },
            Suite::Named => b(0, 0, 0),
        }
    }

    pub fn run(self, bounds: &Bounds) -> Result<SuiteReport> {
        let tally = match self {
            Suite::Involution => involution(bounds),
            Suite::SegPairs => seg_pairs(bounds),
            Suite::SegCriteria => seg_criteria(bounds),
            Suite::Matching => matching(bounds),
            Suite::Cusp => cusp(bounds),
            Suite::Ladder => ladder(bounds),
            Suite::Speh => speh(bounds)?,
            Suite::CosocleIdentity => cosocle_identity(bounds)?,
            Suite::Unitary => unitary(bounds)?,
            Suite::Dominance => dominance(bounds)?,
            Suite::Named => named()?,
        };
        Ok(SuiteReport {
            suite: self,
            instances: tally.instances,
            mismatches: tally.mismatches,
            skipped: tally.skipped,
            examples: tally.examples,
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Enumeration bounds. `max_coord` and `max_segs` bound the exhaustive part;
/// `random` counts extra random instances drawn from `seed`. Suites built on
/// Speh parameters read `max_coord` as the bound on `n` and `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_coord: i64,
    pub max_segs: usize,
    pub random: usize,
    pub seed: u64,
    pub caps: OracleCaps,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            max_coord: 4,
            max_segs: 3,
            random: 0,
            seed: 0x5eed,
            caps: OracleCaps::from_env(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub instances: u64,
    pub mismatches: u64,
    /// Instances beyond an oracle cap.
    pub skipped: u64,
    /// The first few mismatches, described.
    pub examples: Vec<String>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.mismatches == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.ok() { "OK" } else { "FAIL" };
        write!(
            f,
            "{status}, {} instances, {} mismatches",
            self.instances, self.mismatches
        )?;
        if self.skipped > 0 {
            write!(f, ", {} skipped over cap", self.skipped)?;
        }
        for e in &self.examples {
            write!(f, "\n  {e}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Default)]
struct Tally {
    instances: u64,
    mismatches: u64,
    skipped: u64,
    examples: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        if !ok {
            self.mismatches += 1;
            if self.examples.len() < EXAMPLES_KEPT {
                self.examples.push(describe());
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.instances += other.instances;
        self.mismatches += other.mismatches;
        self.skipped += other.skipped;
        for e in other.examples {
            if self.examples.len() < EXAMPLES_KEPT {
                self.examples.push(e);
            }
        }
        self
    }
}

fn over<T: Sync>(items: &[T], f: impl Fn(&T, &mut Tally) + Sync) -> Tally {
    items
        .par_iter()
        .fold(Tally::default, |mut t, item| {
            t.instances += 1;
            f(item, &mut t);
            t
        })
        .reduce(Tally::default, Tally::merge)
}

fn pairs<A: Clone, B: Clone>(xs: &[A], ys: &[B]) -> Vec<(A, B)> {
    xs.iter()
        .flat_map(|a| ys.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}

fn involution(b: &Bounds) -> Tally {
    let mut items = enumerate_multisegments(b.max_coord, b.max_segs);
    let mut rng = rand::rngs::StdRng::seed_from_u64(b.seed);
    items.extend((0..b.random).map(|_| random_multisegment(&mut rng, 9, 8)));
    over(&items, |m, t| {
        let mt = transpose(m);
        t.check(transpose(&mt) == *m, || format!("{m}: (m^t)^t = {}", transpose(&mt)));
        t.check(transpose(&m.dual()) == mt.dual(), || format!("{m}: duality fails"));
        t.check(mt.support_points() == m.support_points(), || {
            format!("{m}: support of m^t = {mt} differs")
        });
    })
}

fn seg_pairs(b: &Bounds) -> Tally {
    let segs = all_segments(b.max_coord);
    over(&pairs(&segs, &segs), |(d, e), t| {
        let got = irreducible_seg_times_rigid(*d, &RigidMultisegment::single(*e));
        t.check(got == !d.linked(e), || format!("{d} x {e}: irreducible = {got}"));
    })
}

fn seg_instances(b: &Bounds) -> Vec<(Segment, RigidMultisegment)> {
    pairs(
        &all_segments(b.max_coord),
        &enumerate_multisegments(b.max_coord, b.max_segs),
    )
}

fn seg_criteria(b: &Bounds) -> Tally {
    over(&seg_instances(b), |(d, m), t| {
        let by_matching = irreducible_seg_times_rigid(*d, m);
        let by_involution = irreducible_seg_times_involution_rigid(*d, &transpose(m));
        t.check(by_matching == by_involution, || {
            format!("Z({d}) x Z({m}): LC and RC say {by_matching}, involution says {by_involution}")
        });
        let (rc, direct) = (rc_seg(*d, m), rc_seg_direct(*d, m));
        t.check(rc == direct, || format!("RC({d}, {m}): dual {rc}, direct {direct}"));
    })
}

fn matching(b: &Bounds) -> Tally {
    let mut rels: Vec<RelationInstance> = seg_instances(b)
        .into_par_iter()
        .map(|(d, m)| LcInstance::new(d, &m).relation())
        .collect();
    let mut rng = rand::rngs::StdRng::seed_from_u64(b.seed);
    for _ in 0..b.random {
        let mut r = random_traversable(&mut rng, 8, 8);
        let extra: Vec<bool> = (0..r.nx()).map(|_| rng.gen_bool(0.3)).collect();
        r = with_dominating_top(&r, &extra);
        rels.push(r);
    }
    let caps = b.caps;
    over(&rels, |r, t| {
        t.check(is_traversable(r), || format!("not traversable: {r:?}"));
        let best = best_matching(r).size();
        let max = max_matching_size(r);
        t.check(best == max, || format!("best {best} vs maximum {max} on {r:?}"));
        match hall_check(r, caps.hall) {
            Ok(h) => t.check(h == (max == r.nx()), || format!("Hall {h} vs maximum {max} on {r:?}")),
            Err(_) => t.skipped += 1,
        }
        match brute_matching_exists(r, caps.matching) {
            Ok(e) => t.check(e == (max == r.nx()), || format!("brute {e} vs maximum {max} on {r:?}")),
            Err(_) => t.skipped += 1,
        }
        t.check(staging_holds(r), || format!("staging fails on {r:?}"));
        t.check(restriction_holds(r), || format!("restriction fails on {r:?}"));
        if r.ny() > 0 {
            let top = r.ny() - 1;
            if (0..r.nx()).all(|x| (0..top).all(|y| !r.related(y, x) || r.related(top, x))) {
                t.check(add_one_holds(r), || format!("add-one fails on {r:?}"));
            }
        }
    })
}

/// `r` with a new maximal `y₀` related to every `x` that has a neighbour,
/// and to the `x` flagged in `extra`.
fn with_dominating_top(r: &RelationInstance, extra: &[bool]) -> RelationInstance {
    let ny = r.ny();
    RelationInstance::from_fn(r.nx(), ny + 1, |y, x| {
        if y == ny {
            extra[x] || (0..ny).any(|y| r.related(y, x))
        } else {
            r.related(y, x)
        }
    })
}

fn staging_holds(r: &RelationInstance) -> bool {
    let f = best_matching(r);
    let all_y: Vec<usize> = (0..r.ny()).collect();
    (0..r.nx()).all(|x0| {
        let a: Vec<usize> = (x0 + 1..r.nx()).collect();
        let rest: Vec<usize> = (0..=x0).collect();
        let g = best_matching(&r.restrict(&a, &all_y));
        let c: Vec<usize> = g.range_complement.clone();
        let h = best_matching(&r.restrict(&rest, &c));
        a.iter().enumerate().all(|(i, &x)| g.map[i] == f.map[x])
            && rest
                .iter()
                .enumerate()
                .all(|(i, &x)| h.map[i].map(|y| c[y]) == f.map[x])
    })
}

fn restriction_holds(r: &RelationInstance) -> bool {
    let f = best_matching(r);
    let a: Vec<usize> = (0..r.nx()).filter(|&x| (0..r.ny()).any(|y| r.related(y, x))).collect();
    let b: Vec<usize> = (0..r.ny()).filter(|&y| (0..r.nx()).any(|x| r.related(y, x))).collect();
    let g = best_matching(&r.restrict(&a, &b));
    let mut lifted = vec![None; r.nx()];
    for (i, &x) in a.iter().enumerate() {
        lifted[x] = g.map[i].map(|y| b[y]);
    }
    lifted == f.map
}

/// Removing the maximal `y₀` from `r`, assuming it dominates every other `y`.
fn add_one_holds(r: &RelationInstance) -> bool {
    let top = r.ny() - 1;
    let xs: Vec<usize> = (0..r.nx()).collect();
    let ys: Vec<usize> = (0..top).collect();
    let f_prime: Matching = best_matching(r);
    let f = best_matching(&r.restrict(&xs, &ys));
    let (a, a_prime) = (f.range_complement.len(), f_prime.range_complement.len());
    if !(a <= a_prime && a_prime <= a + 1) {
        return false;
    }
    let dominated: Vec<usize> = xs.iter().copied().filter(|&x| r.related(top, x)).collect();
    let domain: Vec<usize> = xs.iter().copied().filter(|&x| f.map[x].is_some()).collect();
    if (a_prime == a + 1) != (domain == dominated) {
        return false;
    }
    if a_prime == a + 1 {
        let mut c = f.range_complement.clone();
        c.push(top);
        return f_prime.map == f.map && f_prime.range_complement == c;
    }
    true
}

fn cusp(b: &Bounds) -> Tally {
    let items = pairs(
        &enumerate_multisegments(b.max_coord, b.max_segs),
        &(-1..=b.max_coord + 1).collect::<Vec<_>>(),
    );
    over(&items, |(m, rho), t| {
        let (a, rest) = rho_extraction_rigid(m, *rho);
        let back = cusp_socle_rigid(*rho, a, &rest);
        t.check(back == *m, || format!("rho={rho}, {m}: extracted ({a}, {rest}), rebuilt {back}"));
        // Y → X in the reverse direction: every y is matched iff nothing is extracted
        let inst = CuspInstance::new(*rho, m);
        let s = &inst.segments;
        let inverse = RelationInstance::from_fn(inst.y.len(), inst.x.len(), |i, j| {
            s[inst.y[j]].precedes(&s[inst.x[i]])
        });
        let reduced = max_matching_size(&inverse) == inst.y.len();
        t.check((a == 0) == reduced, || format!("rho={rho}, {m}: a = {a} but reduced = {reduced}"));
    })
}

fn ladder_instances(b: &Bounds) -> Vec<(RigidMultisegment, RigidMultisegment)> {
    let all = enumerate_multisegments(b.max_coord, b.max_segs);
    let ladders: Vec<_> = all.iter().filter(|m| is_ladder(m)).cloned().collect();
    pairs(&ladders, &all)
}

fn ladder(b: &Bounds) -> Tally {
    over(&ladder_instances(b), |(m, n), t| {
        let sum = m.sum(n);
        let lc = lc_pair(m, n, PairVariant::Base);
        let lc_rev = lc_pair(n, m, PairVariant::Base);
        let soc = socle_ladder_times(m, n).expect("m is a ladder");
        let cos = cosocle_ladder_times(m, n).expect("m is a ladder");
        t.check(lc == (soc == sum), || format!("LC({m}, {n}) = {lc} but socle is {soc}"));
        t.check(lc_rev == (cos == sum), || format!("LC({n}, {m}) = {lc_rev} but cosocle is {cos}"));
        let prime = lc_pair(m, n, PairVariant::Prime);
        t.check(lc == prime, || format!("LC({m}, {n}) = {lc} but LC' = {prime}"));
        let irr = irreducible_ladder_times(m, n).expect("m is a ladder");
        t.check(irr == (soc == sum && cos == sum), || {
            format!("Z({m}) x Z({n}): irreducible = {irr}, socle {soc}, cosocle {cos}")
        });
        if is_ladder(n) {
            let nc = nc_condition(m, n, false).expect("ladders");
            let nc_strict = nc_condition(m, n, true).expect("ladders");
            t.check(nc == nc_strict && nc == !lc, || {
                format!("({m}, {n}): NC {nc}, NC' {nc_strict}, LC {lc}")
            });
        }
    })
}

fn speh(b: &Bounds) -> Result<Tally> {
    let all = enumerate_multisegments(b.max_coord, b.max_segs);
    let spehs: Vec<_> = all.iter().filter(|m| is_speh(m)).cloned().collect();
    let mut tally = over(&pairs(&all_segments(b.max_coord), &spehs), |(d, m), t| {
        t.check(lc_seg_speh(*d, m) == Ok(lc_seg(*d, m)), || format!("LC({d}, {m}) shortcut"));
        t.check(rc_seg_speh(*d, m) == Ok(rc_seg(*d, m)), || format!("RC({d}, {m}) shortcut"));
    });
    tally = tally.merge(over(&all, |m, t| {
        let (a, c) = (is_saturated_by_multiplicity(m), is_saturated_by_blocks(m));
        t.check(a == c, || format!("{m}: saturated by multiplicity {a}, by blocks {c}"));
    }));

    let bound = b.max_coord.max(1) as usize;
    let mut shapes = Vec::new();
    for n in 1..=bound {
        for d in 1..=bound {
            shapes.push(SpehParam::new(n, d, Default::default(), 0)?.segments());
        }
    }
    let offsets: Vec<i64> = (-4..=4).collect();
    let mut items = Vec::new();
    for p in &shapes {
        for q in &shapes {
            for c in &offsets {
                items.push((p.clone(), q.shift(*c)));
            }
        }
    }
    Ok(tally.merge(over(&items, |(p, q), t| {
        let red = speh_reducibility(p, q).expect("Speh inputs");
        let irr = irreducible_ladder_times(p, q).expect("ladders");
        t.check(red == !irr, || format!("Z({p}) x Z({q}): condition says reducible = {red}, ladder criterion irreducible = {irr}"));
    })))
}

/// For `π = sp_{k,d}`: the Zelevinsky arguments `(A, B)` of
/// `πν^{1/2} × πν^{-1/2}`, the Langlands parameter of its cosocle, and the
/// expected `m_{k−1,d} + m_{k+1,d}`, all on the common line.
pub fn shifted_speh_cosocle(
    k: usize,
    d: usize,
) -> Result<(RigidMultisegment, RigidMultisegment, RigidMultisegment, RigidMultisegment)> {
    let half = Rational::new(1, 2);
    let a = SpehParam::centered(k, d, "", half)?;
    let b = SpehParam::centered(k, d, "", -half)?;
    let hi = SpehParam::centered(k + 1, d, "", Rational::zero())?;
    let mut expected = hi.segments();
    if k > 1 {
        let lo = SpehParam::centered(k - 1, d, "", Rational::zero())?;
        debug_assert_eq!(lo.line, hi.line);
        expected = expected.sum(&lo.segments());
    }
    if a.line != b.line || a.line != hi.line {
        return Err(Error::InvalidParameter(format!("lines differ for k={k}, d={d}")));
    }
    let (za, zb) = (transpose(&a.segments()), transpose(&b.segments()));
    let cos = transpose(&cosocle_ladder_times(&za, &zb)?);
    Ok((za, zb, cos, expected))
}

fn cosocle_identity(b: &Bounds) -> Result<Tally> {
    let bound = b.max_coord.max(1) as usize;
    let mut t = Tally::default();
    for k in 1..=bound {
        for d in 1..=bound {
            t.instances += 1;
            let (_, _, got, expected) = shifted_speh_cosocle(k, d)?;
            t.check(got == expected, || format!("k={k}, d={d}: cosocle L({got}), expected L({expected})"));
        }
    }
    Ok(t)
}

fn unitary(b: &Bounds) -> Result<Tally> {
    let bound = b.max_coord.max(1) as usize;
    let mut rigid = Vec::new();
    for n in 1..=bound {
        for d in 1..=bound {
            rigid.push(SpehParam::centered(n, d, "", Rational::zero())?);
        }
    }
    let mut t = over(&pairs(&rigid, &rigid), |(p, q), t| {
        let els = [BElement::Rigid(p.clone()), BElement::Rigid(q.clone())];
        let irr = tadic_product(&els).map(|r| r.1);
        t.check(irr == Ok(true), || format!("{p} x {q}: {irr:?}"));
    });
    // distinct multisets of at most two elements give distinct parameters
    let mut seen = HashSet::new();
    for (i, p) in rigid.iter().enumerate() {
        for q in &rigid[i..] {
            t.instances += 1;
            let (param, _) = tadic_product(&[BElement::Rigid(p.clone()), BElement::Rigid(q.clone())])?;
            t.check(seen.insert(param.m.clone()), || format!("{p} x {q} collides"));
        }
    }
    Ok(t)
}

/// `(socle, m + n)` pairs in Zelevinsky form from the segment, ladder and
/// shifted-Speh computations.
fn socle_pairs(b: &Bounds) -> Result<Vec<(RigidMultisegment, RigidMultisegment)>> {
    let seg: HashSet<_> = seg_instances(b)
        .into_par_iter()
        .map(|(d, m)| {
            let soc = transpose(&socle_seg_times_rigid(d, &transpose(&m)));
            (soc, m.with(d))
        })
        .collect();
    let ladder_bounds = Bounds {
        max_coord: b.max_coord.min(4),
        max_segs: b.max_segs.min(3),
        ..*b
    };
    let ladder: HashSet<_> = ladder_instances(&ladder_bounds)
        .into_par_iter()
        .map(|(m, n)| {
            let soc = socle_ladder_times(&m, &n).expect("m is a ladder");
            (soc, m.sum(&n))
        })
        .collect();
    let mut out: HashSet<_> = seg.into_iter().chain(ladder).collect();
    for k in 1..=4 {
        for d in 1..=4 {
            let (za, zb, cos, _) = shifted_speh_cosocle(k, d)?;
            out.insert((transpose(&cos), za.sum(&zb)));
        }
    }
    let mut out: Vec<_> = out.into_iter().collect();
    out.sort();
    Ok(out)
}

fn dominance(b: &Bounds) -> Result<Tally> {
    let cap = b.caps.ui_order;
    Ok(over(&socle_pairs(b)?, |(soc, sum), t| match ui_order_leq_rigid(soc, sum, cap) {
        Ok(ok) => t.check(ok, || format!("socle {soc} not below {sum}")),
        Err(_) => t.skipped += 1,
    }))
}

fn named() -> Result<Tally> {
    let mut t = Tally::default();
    let leclerc = parse("[3,4]+[1,3]+[2,2]+[0,1]")?.as_rigid().map(|(_, r)| r.clone());
    let leclerc = leclerc.ok_or(Error::EmptyInput)?;
    t.instances += 1;
    t.check(!is_ladder(&leclerc), || format!("{leclerc} classified as a ladder"));

    let m = parse("[0,0]+[0,0]+[1,1]")?;
    let n = parse("[0,0]+[1,1]+[1,1]")?;
    let (mr, nr) = (m.part_or_empty(&Default::default()), n.part_or_empty(&Default::default()));
    t.instances += 1;
    t.check(lc_pair(&mr, &nr, PairVariant::Base), || format!("LC({m}, {n}) fails"));
    t.check(sufficient_irreducible(&m, &n).is_none(), || {
        format!("sufficient conditions decide Z({m}) x Z({n})")
    });
    Ok(t)
}
