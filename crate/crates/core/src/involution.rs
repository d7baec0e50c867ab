//! The Mœglin–Waldspurger algorithm and the involution `m ↦ m^t`.

use crate::error::{Error, Result};
use crate::multisegment::{Kind, Multisegment, Param, RigidMultisegment};
use crate::segment::Segment;

/// One step of the MW algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MwStep {
    /// `n⁻`.
    pub remainder: RigidMultisegment,
    /// `Δ_max(n^t) = [e(Δ'_{j_k}), e(n)]`.
    pub extracted: Segment,
    /// `j_0 < … < j_k` into the right-aligned form.
    pub touched: Vec<usize>,
}

pub fn mw_step(n: &RigidMultisegment) -> Result<MwStep> {
    let segs = n.segments();
    if segs.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut touched = vec![0];
    let mut prev = segs[0];
    for (j, s) in segs.iter().enumerate().skip(1) {
        if s.end() == prev.end() - 1 && s.begin() < prev.begin() {
            touched.push(j);
            prev = *s;
        }
    }
    let extracted = Segment::new(prev.end(), segs[0].end())?;
    let mut t = touched.iter().peekable();
    let remainder = segs
        .iter()
        .enumerate()
        .filter_map(|(j, s)| {
            if t.peek() == Some(&&j) {
                t.next();
                s.trim_end()
            } else {
                Some(*s)
            }
        })
        .collect();
    Ok(MwStep {
        remainder,
        extracted,
        touched,
    })
}

/// `m^t` for a rigid multisegment.
pub fn transpose(m: &RigidMultisegment) -> RigidMultisegment {
    let mut out = Vec::new();
    let mut n = m.clone();
    while !n.is_empty() {
        let step = mw_step(&n).expect("nonempty");
        out.push(step.extracted);
        n = step.remainder;
    }
    out.into_iter().collect()
}

pub fn mw_involution(m: &Multisegment) -> Multisegment {
    m.map_parts(|_, rigid| transpose(rigid))
}

impl Param {
    pub fn to_zelevinsky(&self) -> Param {
        match self.kind {
            Kind::Zelevinsky => self.clone(),
            Kind::Langlands => Param::zelevinsky(mw_involution(&self.m)),
        }
    }

    pub fn to_langlands(&self) -> Param {
        match self.kind {
            Kind::Langlands => self.clone(),
            Kind::Zelevinsky => Param::langlands(mw_involution(&self.m)),
        }
    }
}

pub fn to_zelevinsky(p: &Param) -> Param {
    p.to_zelevinsky()
}

pub fn to_langlands(p: &Param) -> Param {
    p.to_langlands()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::parse;
    use crate::line::Line;
    use proptest::prelude::*;

    fn seg(b: i64, e: i64) -> Segment {
        Segment::new(b, e).unwrap()
    }

    fn rigid(v: &[(i64, i64)]) -> RigidMultisegment {
        v.iter().map(|&(b, e)| seg(b, e)).collect()
    }

    #[test]
    fn step_examples() {
        let s = mw_step(&rigid(&[(0, 0), (1, 1)])).unwrap();
        assert_eq!(s.extracted, seg(0, 1));
        assert!(s.remainder.is_empty());
        assert_eq!(s.touched, vec![0, 1]);

        let s = mw_step(&rigid(&[(0, 1)])).unwrap();
        assert_eq!((s.extracted, s.remainder), (seg(1, 1), rigid(&[(0, 0)])));

        let s = mw_step(&rigid(&[(1, 1), (0, 1)])).unwrap();
        assert_eq!((s.extracted, s.remainder), (seg(1, 1), rigid(&[(0, 1)])));
        assert_eq!(mw_step(&RigidMultisegment::new()), Err(Error::EmptyInput));
    }

    #[test]
    fn involution_examples() {
        assert_eq!(transpose(&rigid(&[(0, 1)])), rigid(&[(0, 0), (1, 1)]));
        let m = rigid(&[(0, 1), (1, 2)]);
        assert_eq!(transpose(&m), m);
        assert!(mw_involution(&Multisegment::new()).is_empty());
        // a 2x2 block of points has two columns
        assert_eq!(
            transpose(&rigid(&[(0, 0), (0, 0), (1, 1), (1, 1)])),
            rigid(&[(0, 1), (0, 1)])
        );
        assert_eq!(
            transpose(&rigid(&[(0, 0), (1, 1), (1, 1), (2, 2)])),
            rigid(&[(0, 2), (1, 1)])
        );
    }

    #[test]
    fn param_conversion() {
        let l = Param::langlands(parse("[0,1]").unwrap());
        let z = l.to_zelevinsky();
        assert_eq!(z.kind, Kind::Zelevinsky);
        assert_eq!(z.m, parse("[0,0]+[1,1]").unwrap());
        assert_eq!(z, l);
        assert_eq!(z.to_langlands().m, l.m);
        let e = Param::zelevinsky(Multisegment::new()).to_langlands();
        assert!(e.m.is_empty() && e.kind == Kind::Langlands);
        let p = parse("[1,1]").unwrap();
        assert_eq!(Param::zelevinsky(p.clone()).to_langlands().m, p);
        assert_ne!(Param::zelevinsky(parse("[0,1]").unwrap()), l);
    }

    #[test]
    fn chain_simplification_matches_precedes() {
        let all: Vec<Segment> = (-2..3).flat_map(|b| (b..3).map(move |e| seg(b, e))).collect();
        for p in &all {
            for s in &all {
                if s.end() == p.end() - 1 {
                    assert_eq!(s.precedes(p), s.begin() < p.begin());
                }
            }
        }
    }

    fn arb_rigid() -> impl Strategy<Value = RigidMultisegment> {
        prop::collection::vec((0i64..10, 0i64..5), 0..9)
            .prop_map(|v| v.into_iter().map(|(b, l)| seg(b, b + l)).collect())
    }

    proptest! {
        #[test]
        fn involutive_and_conserving(m in arb_rigid()) {
            let t = transpose(&m);
            prop_assert_eq!(transpose(&t), m.clone());
            prop_assert_eq!(t.support_points(), m.support_points());
            prop_assert_eq!(transpose(&m.dual()), t.dual());
        }

        #[test]
        fn step_conserves_points(m in arb_rigid().prop_filter("nonempty", |m| !m.is_empty())) {
            let s = mw_step(&m).unwrap();
            prop_assert_eq!(s.remainder.point_count() + s.extracted.len(), m.point_count());
            prop_assert_eq!(s.extracted.end(), m.end().unwrap());
        }

        #[test]
        fn multi_line_is_per_line(a in arb_rigid(), b in arb_rigid()) {
            let line = Line::labelled("x");
            let m = Multisegment::on_default(a.clone()).sum(&Multisegment::from_rigid(line.clone(), b.clone()));
            let t = mw_involution(&m);
            prop_assert_eq!(t.part_or_empty(&Line::default()), transpose(&a));
            prop_assert_eq!(t.part_or_empty(&line), transpose(&b));
        }
    }
}
