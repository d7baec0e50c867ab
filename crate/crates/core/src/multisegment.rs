//! Rigid (single-line) multisegments and general multisegments as sums of
//! rigid parts over distinct lines.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::line::Line;
use crate::segment::Segment;

/// Filters used to form truncations `m_P`.
///
/// Point variants compare a segment endpoint with a point `x`; segment
/// variants compare in the lexicographic `≤_e` / `≤_b` orders. The family is
/// closed under [`Truncation::negate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Truncation {
    EndAtMost(i64),
    EndAbove(i64),
    BeginAtLeast(i64),
    BeginBelow(i64),
    ByEnd(Bound, Segment),
    ByBegin(Bound, Segment),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Less,
    AtMost,
    AtLeast,
    Greater,
}

impl Bound {
    fn accepts(self, ord: std::cmp::Ordering) -> bool {
        use std::cmp::Ordering::*;
        match self {
            Bound::Less => ord == Less,
            Bound::AtMost => ord != Greater,
            Bound::AtLeast => ord != Less,
            Bound::Greater => ord == Greater,
        }
    }

    fn negate(self) -> Self {
        match self {
            Bound::Less => Bound::AtLeast,
            Bound::AtMost => Bound::Greater,
            Bound::AtLeast => Bound::Less,
            Bound::Greater => Bound::AtMost,
        }
    }
}

impl Truncation {
    pub fn holds(&self, s: &Segment) -> bool {
        match *self {
            Truncation::EndAtMost(x) => s.end() <= x,
            Truncation::EndAbove(x) => s.end() > x,
            Truncation::BeginAtLeast(x) => s.begin() >= x,
            Truncation::BeginBelow(x) => s.begin() < x,
            Truncation::ByEnd(bound, d) => bound.accepts(s.cmp_e(&d)),
            Truncation::ByBegin(bound, d) => bound.accepts(s.cmp_b(&d)),
        }
    }

    pub fn negate(&self) -> Self {
        match *self {
            Truncation::EndAtMost(x) => Truncation::EndAbove(x),
            Truncation::EndAbove(x) => Truncation::EndAtMost(x),
            Truncation::BeginAtLeast(x) => Truncation::BeginBelow(x),
            Truncation::BeginBelow(x) => Truncation::BeginAtLeast(x),
            Truncation::ByEnd(b, d) => Truncation::ByEnd(b.negate(), d),
            Truncation::ByBegin(b, d) => Truncation::ByBegin(b.negate(), d),
        }
    }
}

/// A finite multiset of segments on one line.
///
/// Segments are kept in right-aligned order: `e` descending, then `b`
/// descending. Equal segments are adjacent and indistinguishable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RigidMultisegment {
    segments: Vec<Segment>,
}

fn right_aligned_cmp(a: &Segment, b: &Segment) -> std::cmp::Ordering {
    b.cmp_e(a)
}

impl RigidMultisegment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(s: Segment) -> Self {
        Self { segments: vec![s] }
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    /// The right-aligned form `Δ_1 ≥_e … ≥_e Δ_N`.
    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Segment> {
        self.segments.iter()
    }

    /// The left-aligned form `Δ_1 ≥_b … ≥_b Δ_N`.
    pub fn left_aligned(&self) -> Vec<Segment> {
        let mut v = self.segments.clone();
        v.sort_by(|a, b| b.cmp_b(a));
        v
    }

    pub fn aligned_form(&self, side: Side) -> Vec<Segment> {
        match side {
            Side::Right => self.segments.clone(),
            Side::Left => self.left_aligned(),
        }
    }

    pub fn push(&mut self, s: Segment) {
        let pos = self
            .segments
            .partition_point(|x| right_aligned_cmp(x, &s) != std::cmp::Ordering::Greater);
        self.segments.insert(pos, s);
    }

    pub fn with(mut self, s: Segment) -> Self {
        self.push(s);
        self
    }

    /// Removes one copy of `s`.
    pub fn remove(&mut self, s: &Segment) -> Result<()> {
        match self.segments.iter().position(|x| x == s) {
            Some(i) => {
                self.segments.remove(i);
                Ok(())
            }
            None => Err(Error::AbsentSegment(*s)),
        }
    }

    pub fn without(mut self, s: &Segment) -> Result<Self> {
        self.remove(s)?;
        Ok(self)
    }

    pub fn multiplicity(&self, s: &Segment) -> usize {
        self.segments.iter().filter(|x| *x == s).count()
    }

    pub fn contains(&self, s: &Segment) -> bool {
        self.segments.contains(s)
    }

    /// Sub-multiset test.
    pub fn includes(&self, other: &RigidMultisegment) -> bool {
        self.difference(other).is_ok()
    }

    /// Multiset difference; every segment of `other` must be present.
    pub fn difference(&self, other: &RigidMultisegment) -> Result<Self> {
        let mut out = self.clone();
        for s in other.iter() {
            out.remove(s)?;
        }
        Ok(out)
    }

    pub fn sum(&self, other: &RigidMultisegment) -> Self {
        let mut segments = Vec::with_capacity(self.len() + other.len());
        segments.extend_from_slice(&self.segments);
        segments.extend_from_slice(&other.segments);
        segments.sort_by(right_aligned_cmp);
        Self { segments }
    }

    pub fn filter(&self, mut keep: impl FnMut(&Segment) -> bool) -> Self {
        Self {
            segments: self.segments.iter().copied().filter(|s| keep(s)).collect(),
        }
    }

    /// `m_P`: the segments satisfying `pred`.
    pub fn truncate(&self, pred: Truncation) -> Self {
        self.filter(|s| pred.holds(s))
    }

    pub fn shift(&self, by: i64) -> Self {
        Self {
            segments: self.segments.iter().map(|s| s.shift(by)).collect(),
        }
    }

    pub fn dual(&self) -> Self {
        self.iter().map(Segment::dual).collect()
    }

    /// Every point of every segment, with multiplicity, sorted.
    pub fn support_points(&self) -> Vec<i64> {
        let mut pts: Vec<i64> = self.iter().flat_map(Segment::points).collect();
        pts.sort_unstable();
        pts
    }

    /// The support as a set, sorted.
    pub fn support(&self) -> Vec<i64> {
        let mut pts = self.support_points();
        pts.dedup();
        pts
    }

    pub fn point_count(&self) -> usize {
        self.iter().map(Segment::len).sum()
    }

    /// `b(m)`.
    pub fn begin(&self) -> Option<i64> {
        self.iter().map(Segment::begin).min()
    }

    /// `e(m)`.
    pub fn end(&self) -> Option<i64> {
        self.segments.first().map(Segment::end)
    }

    /// `Δ_max(m)` in the `≤_e` order.
    pub fn max_e(&self) -> Option<Segment> {
        self.segments.first().copied()
    }

    /// `Δ_min(m)` in the `≤_e` order.
    pub fn min_e(&self) -> Option<Segment> {
        self.segments.last().copied()
    }

    /// The `≥_b`-maximal segment.
    pub fn max_b(&self) -> Option<Segment> {
        self.iter().copied().max_by(|a, b| a.cmp_b(b))
    }

    pub fn is_totally_unlinked(&self) -> bool {
        let s = &self.segments;
        (0..s.len()).all(|i| (i + 1..s.len()).all(|j| !s[i].linked(&s[j])))
    }
}

impl FromIterator<Segment> for RigidMultisegment {
    fn from_iter<I: IntoIterator<Item = Segment>>(iter: I) -> Self {
        let mut segments: Vec<Segment> = iter.into_iter().collect();
        segments.sort_by(right_aligned_cmp);
        Self { segments }
    }
}

impl<'a> IntoIterator for &'a RigidMultisegment {
    type Item = &'a Segment;
    type IntoIter = std::slice::Iter<'a, Segment>;

    fn into_iter(self) -> Self::IntoIter {
        self.segments.iter()
    }
}

impl fmt::Display for RigidMultisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        for (i, s) in self.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
}

/// A multisegment: rigid parts over distinct lines, never storing an empty part.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Multisegment {
    parts: BTreeMap<Line, RigidMultisegment>,
}

impl Multisegment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_rigid(line: Line, rigid: RigidMultisegment) -> Self {
        let mut m = Self::new();
        m.insert_part(line, rigid);
        m
    }

    /// A rigid multisegment on the default line.
    pub fn on_default(rigid: RigidMultisegment) -> Self {
        Self::from_rigid(Line::default(), rigid)
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn segment_count(&self) -> usize {
        self.parts.values().map(RigidMultisegment::len).sum()
    }

    pub fn parts(&self) -> impl Iterator<Item = (&Line, &RigidMultisegment)> {
        self.parts.iter()
    }

    pub fn lines(&self) -> impl Iterator<Item = &Line> {
        self.parts.keys()
    }

    pub fn part(&self, line: &Line) -> Option<&RigidMultisegment> {
        self.parts.get(line)
    }

    /// The part on `line`, empty when absent.
    pub fn part_or_empty(&self, line: &Line) -> RigidMultisegment {
        self.parts.get(line).cloned().unwrap_or_default()
    }

    /// Adds `rigid` to the part on `line`.
    pub fn insert_part(&mut self, line: Line, rigid: RigidMultisegment) {
        if rigid.is_empty() {
            return;
        }
        let merged = match self.parts.remove(&line) {
            Some(existing) => existing.sum(&rigid),
            None => rigid,
        };
        self.parts.insert(line, merged);
    }

    /// Replaces the part on `line`.
    pub fn set_part(&mut self, line: Line, rigid: RigidMultisegment) {
        if rigid.is_empty() {
            self.parts.remove(&line);
        } else {
            self.parts.insert(line, rigid);
        }
    }

    pub fn with_part(mut self, line: Line, rigid: RigidMultisegment) -> Self {
        self.set_part(line, rigid);
        self
    }

    pub fn push(&mut self, line: &Line, s: Segment) {
        self.parts.entry(line.clone()).or_default().push(s);
    }

    pub fn sum(&self, other: &Multisegment) -> Self {
        let mut out = self.clone();
        for (line, rigid) in other.parts() {
            out.insert_part(line.clone(), rigid.clone());
        }
        out
    }

    /// Applies a rigid transformation to every part.
    pub fn map_parts(&self, mut f: impl FnMut(&Line, &RigidMultisegment) -> RigidMultisegment) -> Self {
        let mut out = Self::new();
        for (line, rigid) in self.parts() {
            out.set_part(line.clone(), f(line, rigid));
        }
        out
    }

    pub fn dual(&self) -> Self {
        let mut out = Self::new();
        for (line, rigid) in self.parts() {
            out.insert_part(line.dual(), rigid.dual());
        }
        out
    }

    /// Every point with multiplicity, as `(line, coordinate)`, sorted.
    pub fn support_points(&self) -> Vec<(Line, i64)> {
        self.parts()
            .flat_map(|(line, rigid)| {
                rigid
                    .support_points()
                    .into_iter()
                    .map(move |x| (line.clone(), x))
            })
            .collect()
    }

    pub fn is_totally_unlinked(&self) -> bool {
        self.parts.values().all(RigidMultisegment::is_totally_unlinked)
    }

    /// The single rigid part if all segments live on one line.
    pub fn as_rigid(&self) -> Option<(&Line, &RigidMultisegment)> {
        let mut it = self.parts();
        match (it.next(), it.next()) {
            (Some(p), None) => Some(p),
            _ => None,
        }
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::grammar::write_multisegment(f, self)
    }
}

/// Which classification a multisegment parameterizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Zelevinsky,
    Langlands,
}

/// `Z(m)` or `L(m)`. Equality compares the underlying irreducible class.
#[derive(Debug, Clone)]
pub struct Param {
    pub kind: Kind,
    pub m: Multisegment,
}

impl Param {
    pub fn zelevinsky(m: Multisegment) -> Self {
        Self {
            kind: Kind::Zelevinsky,
            m,
        }
    }

    pub fn langlands(m: Multisegment) -> Self {
        Self {
            kind: Kind::Langlands,
            m,
        }
    }
}

impl PartialEq for Param {
    fn eq(&self, other: &Self) -> bool {
        if self.kind == other.kind {
            self.m == other.m
        } else {
            self.to_zelevinsky().m == other.to_zelevinsky().m
        }
    }
}

impl Eq for Param {}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            Kind::Zelevinsky => "Z",
            Kind::Langlands => "L",
        };
        write!(f, "{tag}({})", self.m)
    }
}
