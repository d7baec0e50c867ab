//! Segments `[b,e]` of consecutive integer points on one cuspidal line.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A nonempty integer interval `[b,e]`.
///
/// The derived `Ord` compares `(b, e)` lexicographically, which is exactly the
/// `≤_b` order. Use [`Segment::cmp_e`] for the `≤_e` order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    b: i64,
    e: i64,
}

impl Segment {
    pub fn new(b: i64, e: i64) -> Result<Self> {
        if b > e {
            return Err(Error::ReversedSegment { b, e });
        }
        Ok(Self { b, e })
    }

    /// Like [`Segment::new`] but yields `None` for the empty interval `e < b`.
    pub fn try_new(b: i64, e: i64) -> Option<Self> {
        (b <= e).then_some(Self { b, e })
    }

    pub fn point(x: i64) -> Self {
        Self { b: x, e: x }
    }

    pub fn begin(&self) -> i64 {
        self.b
    }

    pub fn end(&self) -> i64 {
        self.e
    }

    pub fn len(&self) -> usize {
        (self.e - self.b + 1) as usize
    }

    pub fn is_point(&self) -> bool {
        self.b == self.e
    }

    pub fn contains_point(&self, x: i64) -> bool {
        self.b <= x && x <= self.e
    }

    pub fn contains(&self, other: &Segment) -> bool {
        self.b <= other.b && other.e <= self.e
    }

    pub fn points(&self) -> impl Iterator<Item = i64> {
        self.b..=self.e
    }

    /// `◁Δ = [b-1, e-1]`.
    pub fn shift_left(&self) -> Self {
        self.shift(-1)
    }

    pub fn shift(&self, by: i64) -> Self {
        Self {
            b: self.b + by,
            e: self.e + by,
        }
    }

    /// `Δ⁻ = [b, e-1]`, `None` when that is empty.
    pub fn trim_end(&self) -> Option<Self> {
        Self::try_new(self.b, self.e - 1)
    }

    /// `⁻Δ = [b+1, e]`, `None` when that is empty.
    pub fn trim_begin(&self) -> Option<Self> {
        Self::try_new(self.b + 1, self.e)
    }

    /// `Δ⁺ = [b, e+1]`.
    pub fn extend_end(&self) -> Self {
        Self {
            b: self.b,
            e: self.e + 1,
        }
    }

    /// `⁺Δ = [b-1, e]`.
    pub fn extend_begin(&self) -> Self {
        Self {
            b: self.b - 1,
            e: self.e,
        }
    }

    /// `Δ^∨ = [-e, -b]`.
    pub fn dual(&self) -> Self {
        Self {
            b: -self.e,
            e: -self.b,
        }
    }

    /// `self ≺ other`: linked, and `other` starts strictly later.
    pub fn precedes(&self, other: &Segment) -> bool {
        self.b < other.b && self.e < other.e && other.b <= self.e + 1
    }

    pub fn linked(&self, other: &Segment) -> bool {
        self.precedes(other) || other.precedes(self)
    }

    /// Linked and disjoint.
    pub fn juxtaposed(&self, other: &Segment) -> bool {
        self.e + 1 == other.b || other.e + 1 == self.b
    }

    /// Union of two segments whose union is connected.
    pub fn union(&self, other: &Segment) -> Option<Self> {
        if other.b > self.e + 1 || self.b > other.e + 1 {
            return None;
        }
        Some(Self {
            b: self.b.min(other.b),
            e: self.e.max(other.e),
        })
    }

    pub fn intersection(&self, other: &Segment) -> Option<Self> {
        Self::try_new(self.b.max(other.b), self.e.min(other.e))
    }

    /// The `≤_b` order: begin first, then end.
    pub fn cmp_b(&self, other: &Segment) -> Ordering {
        (self.b, self.e).cmp(&(other.b, other.e))
    }

    /// The `≤_e` order: end first, then begin.
    pub fn cmp_e(&self, other: &Segment) -> Ordering {
        (self.e, self.b).cmp(&(other.e, other.b))
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.b, self.e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(b: i64, e: i64) -> Segment {
        Segment::new(b, e).unwrap()
    }

    #[test]
    fn precedes_examples() {
        assert!(seg(0, 1).precedes(&seg(1, 2)));
        assert!(!seg(0, 2).precedes(&seg(1, 1)));
        assert!(!seg(0, 0).precedes(&seg(2, 3)));
        assert!(seg(0, 0).precedes(&seg(1, 1)));
        assert!(!seg(1, 1).precedes(&seg(0, 0)));
    }

    #[test]
    fn linked_and_juxtaposed() {
        assert!(seg(0, 0).linked(&seg(1, 1)));
        assert!(seg(0, 0).juxtaposed(&seg(1, 1)));
        assert!(seg(0, 2).linked(&seg(1, 3)));
        assert!(!seg(0, 2).juxtaposed(&seg(1, 3)));
        assert!(!seg(0, 1).linked(&seg(0, 1)));
        // juxtaposition never holds for overlapping or distant pairs
        assert!(!seg(0, 1).juxtaposed(&seg(3, 4)));
    }

    #[test]
    fn lexicographic_orders() {
        assert_eq!(seg(1, 1).cmp_e(&seg(0, 1)), Ordering::Greater);
        assert_eq!(seg(1, 1).cmp_b(&seg(0, 1)), Ordering::Greater);
        assert_eq!(seg(0, 2).cmp_e(&seg(5, 5)), Ordering::Less);
        assert_eq!(seg(0, 2).cmp_b(&seg(5, 5)), Ordering::Less);
        assert_eq!(seg(0, 2).cmp(&seg(0, 3)), seg(0, 2).cmp_b(&seg(0, 3)));
    }

    #[test]
    fn reversed_segment_rejected() {
        assert_eq!(
            Segment::new(3, 1),
            Err(Error::ReversedSegment { b: 3, e: 1 })
        );
    }

    #[test]
    fn shift_operators() {
        let d = seg(2, 4);
        assert_eq!(d.shift_left(), seg(1, 3));
        assert_eq!(d.trim_end(), Some(seg(2, 3)));
        assert_eq!(d.trim_begin(), Some(seg(3, 4)));
        assert_eq!(d.extend_end(), seg(2, 5));
        assert_eq!(d.extend_begin(), seg(1, 4));
        assert_eq!(d.dual(), seg(-4, -2));
        assert_eq!(seg(3, 3).trim_end(), None);
        assert_eq!(seg(3, 3).trim_begin(), None);
    }

    #[test]
    fn at_most_one_direction_of_precedence() {
        for b1 in -2..4 {
            for e1 in b1..4 {
                for b2 in -2..4 {
                    for e2 in b2..4 {
                        let (x, y) = (seg(b1, e1), seg(b2, e2));
                        assert!(!(x.precedes(&y) && y.precedes(&x)));
                        // definition check: union connected, no containment
                        let by_def = x.union(&y).is_some() && !x.contains(&y) && !y.contains(&x);
                        assert_eq!(x.linked(&y), by_def, "{x} {y}");
                        if x.juxtaposed(&y) {
                            assert!(x.linked(&y) && x.intersection(&y).is_none());
                        }
                    }
                }
            }
        }
    }
}
