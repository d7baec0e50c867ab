//! Products `Z(Δ) × σ` with a single segment.

use crate::error::{Error, Result};
use crate::involution::transpose;
use crate::line::Line;
use crate::matching::{best_matching, max_matching_size, Matching, RelationInstance};
use crate::multisegment::{Multisegment, Param, RigidMultisegment, Truncation};
use crate::segment::Segment;

/// The matching problem behind `LC(Δ, m)`.
///
/// Indices refer to `segments`, the right-aligned form of `m`. `x` lists
/// `X = {i : Δ ≺ Δ_i}` in increasing `≤_X` order and `y` lists
/// `Y = {i : ◁Δ ≺ Δ_i}` in increasing `≤_Y` order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcInstance {
    pub delta: Segment,
    pub segments: Vec<Segment>,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

impl LcInstance {
    /// Default orders: `X` by `≥_b` descending, `Y` by end descending,
    /// remaining ties by index.
    pub fn new(delta: Segment, m: &RigidMultisegment) -> Self {
        let segments = m.segments().to_vec();
        let mut x: Vec<usize> = (0..segments.len())
            .filter(|&i| delta.precedes(&segments[i]))
            .collect();
        x.sort_by(|&a, &b| segments[b].cmp_b(&segments[a]));
        let y = (0..segments.len())
            .filter(|&i| delta.shift_left().precedes(&segments[i]))
            .collect();
        Self {
            delta,
            segments,
            x,
            y,
        }
    }

    /// The same sets under caller-chosen orders, which must satisfy
    /// `i₁ ≤_X i₂ ⟹ Δ_{i₁} ≥_b Δ_{i₂}` and `j₁ ≤_Y j₂ ⟹ e(Δ_{j₁}) ≥ e(Δ_{j₂})`.
    pub fn with_orders(&self, x: Vec<usize>, y: Vec<usize>) -> Result<Self> {
        let same_set = |a: &[usize], b: &[usize]| {
            let (mut a, mut b) = (a.to_vec(), b.to_vec());
            a.sort_unstable();
            b.sort_unstable();
            a == b
        };
        if !same_set(&x, &self.x) || !same_set(&y, &self.y) {
            return Err(Error::InvalidParameter("order is not a permutation".into()));
        }
        let s = &self.segments;
        let x_ok = x.windows(2).all(|w| s[w[0]].cmp_b(&s[w[1]]).is_ge());
        let y_ok = y.windows(2).all(|w| s[w[0]].end() >= s[w[1]].end());
        if !(x_ok && y_ok) {
            return Err(Error::InvalidParameter("order is not admissible".into()));
        }
        Ok(Self { x, y, ..self.clone() })
    }

    pub fn relation(&self) -> RelationInstance {
        let s = &self.segments;
        RelationInstance::from_fn(self.x.len(), self.y.len(), |j, i| {
            s[self.y[j]].precedes(&s[self.x[i]])
        })
    }

    pub fn best_matching(&self) -> Matching {
        best_matching(&self.relation())
    }

    /// Matched pairs `(Δ_x, Δ_y)` of a matching on this instance.
    pub fn matched_segments(&self, f: &Matching) -> Vec<(Segment, Segment)> {
        f.pairs()
            .map(|(x, y)| (self.segments[self.x[x]], self.segments[self.y[y]]))
            .collect()
    }
}

/// `LC(Δ, m)`: a matching function `X_{Δ;m} → Y_{Δ;m}` exists.
pub fn lc_seg(delta: Segment, m: &RigidMultisegment) -> bool {
    lc_seg_witness(delta, m).1.is_total()
}

/// The instance and best matching deciding [`lc_seg`].
pub fn lc_seg_witness(delta: Segment, m: &RigidMultisegment) -> (LcInstance, Matching) {
    let inst = LcInstance::new(delta, m);
    let f = inst.best_matching();
    debug_assert_eq!(
        f.size(),
        max_matching_size(&inst.relation()),
        "LC instance must be traversable"
    );
    (inst, f)
}

/// `RC(Δ, m)`, computed as `LC(Δ^∨, m^∨)`.
pub fn rc_seg(delta: Segment, m: &RigidMultisegment) -> bool {
    lc_seg(delta.dual(), &m.dual())
}

/// Irreducibility of `Z(Δ) × Z(m)` for `Δ` on `line`.
pub fn irreducible_seg_times(line: &Line, delta: Segment, m: &Multisegment) -> bool {
    let part = m.part_or_empty(line);
    irreducible_seg_times_rigid(delta, &part)
}

pub fn irreducible_seg_times_rigid(delta: Segment, m: &RigidMultisegment) -> bool {
    lc_seg(delta, m) && rc_seg(delta, m)
}

/// `(m₁^t + Δ)^t + m_{>_e e(Δ)}` with `m₁ = m_{≤_e e(Δ)}`: the Langlands
/// parameter of `soc(Z(Δ) × L(m))`.
pub fn socle_seg_times_rigid(delta: Segment, m: &RigidMultisegment) -> RigidMultisegment {
    let m1 = m.truncate(Truncation::EndAtMost(delta.end()));
    let hi = m.truncate(Truncation::EndAbove(delta.end()));
    transpose(&transpose(&m1).with(delta)).sum(&hi)
}

/// `soc(Z(Δ) × σ)` as a Langlands parameter.
pub fn socle_seg_times(line: &Line, delta: Segment, sigma: &Param) -> Param {
    let m = sigma.to_langlands().m;
    let part = socle_seg_times_rigid(delta, &m.part_or_empty(line));
    Param::langlands(m.with_part(line.clone(), part))
}

fn involution_identity(delta: Segment, m: &RigidMultisegment) -> bool {
    transpose(&transpose(m).with(delta)) == m.sum(&transpose(&RigidMultisegment::single(delta)))
}

/// Irreducibility of `Z(Δ) × L(m)` via the two involution identities.
pub fn irreducible_seg_times_involution_rigid(delta: Segment, m: &RigidMultisegment) -> bool {
    let m1 = m.truncate(Truncation::EndAtMost(delta.end()));
    let m2 = m.truncate(Truncation::BeginAtLeast(delta.begin()));
    involution_identity(delta, &m1) && involution_identity(delta, &m2)
}

pub fn irreducible_seg_times_involution(line: &Line, delta: Segment, sigma: &Param) -> bool {
    let m = sigma.to_langlands().m;
    irreducible_seg_times_involution_rigid(delta, &m.part_or_empty(line))
}

/// The unique `m` with `L(n) = soc(Z(Δ) × L(m))`, if any.
pub fn left_divide_rigid(n: &RigidMultisegment, delta: Segment) -> Option<RigidMultisegment> {
    let low = transpose(&n.truncate(Truncation::EndAtMost(delta.end())));
    let rest = low.without(&delta).ok()?;
    Some(transpose(&rest).sum(&n.truncate(Truncation::EndAbove(delta.end()))))
}

/// `σ` with `π = soc(Z(Δ) × σ)`, in Langlands form, if it exists.
pub fn left_divide_by_segment(pi: &Param, line: &Line, delta: Segment) -> Option<Param> {
    let n = pi.to_langlands().m;
    let part = left_divide_rigid(&n.part_or_empty(line), delta)?;
    Some(Param::langlands(n.with_part(line.clone(), part)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::parse_rigid;
    use crate::matching::is_traversable;
    use proptest::prelude::*;

    fn seg(b: i64, e: i64) -> Segment {
        Segment::new(b, e).unwrap()
    }

    fn r(text: &str) -> RigidMultisegment {
        parse_rigid(text).unwrap().1
    }

    #[test]
    fn lc_examples() {
        assert!(!lc_seg(seg(0, 0), &r("[1,1]")));
        assert!(lc_seg(seg(1, 1), &r("[0,0]")));
        assert!(lc_seg(seg(0, 1), &r("[1,1]")));
    }

    #[test]
    fn rc_examples() {
        assert!(!rc_seg(seg(1, 1), &r("[0,0]")));
        assert!(rc_seg(seg(0, 0), &r("[1,1]")));
        assert!(rc_seg(seg(0, 1), &r("[0,1]")));
    }

    #[test]
    fn irreducible_examples() {
        let d = Line::default();
        let m = |t: &str| Multisegment::on_default(r(t));
        assert!(!irreducible_seg_times(&d, seg(0, 0), &m("[1,1]")));
        assert!(irreducible_seg_times(&d, seg(0, 1), &m("[0,1]")));
        assert!(irreducible_seg_times(&d, seg(0, 2), &m("[1,1]")));
        assert!(irreducible_seg_times(&Line::labelled("x"), seg(0, 0), &m("[1,1]")));
    }

    #[test]
    fn socle_examples() {
        assert_eq!(socle_seg_times_rigid(seg(0, 1), &r("[1,1]")), r("[0,0]+[1,1]+[1,1]"));
        assert_eq!(socle_seg_times_rigid(seg(0, 1), &r("0")), r("[0,0]+[1,1]"));
        let a = Line::labelled("a");
        let sigma = Param::langlands(Multisegment::from_rigid(Line::labelled("b"), r("[0,0]")));
        let s = socle_seg_times(&a, seg(0, 1), &sigma);
        assert_eq!(s.m.part_or_empty(&a), r("[0,0]+[1,1]"));
        assert_eq!(s.m.part_or_empty(&Line::labelled("b")), r("[0,0]"));
    }

    #[test]
    fn involution_criterion_examples() {
        assert!(!irreducible_seg_times_involution_rigid(seg(0, 0), &r("[1,1]")));
        assert!(irreducible_seg_times_involution_rigid(seg(3, 5), &r("0")));
        let m = r("[0,1]");
        assert_eq!(
            irreducible_seg_times_involution_rigid(seg(0, 1), &transpose(&m)),
            irreducible_seg_times_rigid(seg(0, 1), &m)
        );
    }

    #[test]
    fn divide_examples() {
        assert_eq!(left_divide_rigid(&r("[0,0]+[1,1]"), seg(0, 1)), Some(r("0")));
        assert_eq!(left_divide_rigid(&r("[0,0]"), seg(0, 1)), None);
    }

    #[test]
    fn custom_orders_validated() {
        let inst = LcInstance::new(seg(0, 0), &r("[1,1]+[1,2]+[0,0]"));
        assert_eq!(inst.x.len(), 2);
        let mut bad = inst.x.clone();
        bad.reverse();
        assert!(inst.with_orders(bad, inst.y.clone()).is_err());
        assert!(inst.with_orders(vec![], inst.y.clone()).is_err());
    }

    fn arb_rigid() -> impl Strategy<Value = RigidMultisegment> {
        prop::collection::vec((0i64..6, 0i64..4), 0..6)
            .prop_map(|v| v.into_iter().map(|(b, l)| seg(b, b + l)).collect())
    }

    fn arb_seg() -> impl Strategy<Value = Segment> {
        (0i64..6, 0i64..4).prop_map(|(b, l)| seg(b, b + l))
    }

    proptest! {
        #[test]
        fn lc_relation_is_traversable(d in arb_seg(), m in arb_rigid()) {
            prop_assert!(is_traversable(&LcInstance::new(d, &m).relation()));
        }

        #[test]
        fn divide_inverts_socle(d in arb_seg(), m in arb_rigid()) {
            let s = socle_seg_times_rigid(d, &m);
            prop_assert_eq!(left_divide_rigid(&s, d), Some(m.clone()));
            prop_assert_eq!(s.support_points(), m.clone().with(d).support_points());
            if let Some(q) = left_divide_rigid(&m, d) {
                prop_assert_eq!(socle_seg_times_rigid(d, &q), m);
            }
        }

        #[test]
        fn admissible_reorderings_agree(d in arb_seg(), m in arb_rigid(), seed in any::<u64>()) {
            use rand::{seq::SliceRandom, SeedableRng};
            let inst = LcInstance::new(d, &m);
            let base = inst.best_matching().is_total();
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            // shuffle Y inside blocks of equal end
            let mut y = inst.y.clone();
            let mut start = 0;
            while start < y.len() {
                let e = inst.segments[y[start]].end();
                let len = y[start..].iter().take_while(|&&j| inst.segments[j].end() == e).count();
                y[start..start + len].shuffle(&mut rng);
                start += len;
            }
            let alt = inst.with_orders(inst.x.clone(), y).unwrap();
            prop_assert!(is_traversable(&alt.relation()));
            prop_assert_eq!(alt.best_matching().is_total(), base);
        }
    }
}
