//! Products with powers of a single cuspidal point `ρ`.

use crate::line::Line;
use crate::matching::{best_matching, Matching, RelationInstance};
use crate::multisegment::{Multisegment, RigidMultisegment};
use crate::segment::Segment;

/// The best matching between `X_{ρ;m} = {b(Δ_i) = ρ+1}` and
/// `Y_{ρ;m} = {b(Δ_i) = ρ}`, with `j ⤳ i` iff `Δ_j ≺ Δ_i`.
///
/// Indices are positions in the left-aligned form, so containment decreases
/// along both `X` and `Y`.
#[derive(Debug, Clone)]
pub struct CuspInstance {
    pub segments: Vec<Segment>,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub matching: Matching,
}

impl CuspInstance {
    pub fn new(rho: i64, m: &RigidMultisegment) -> Self {
        let segments = m.left_aligned();
        let pick = |b: i64| -> Vec<usize> {
            (0..segments.len())
                .filter(|&i| segments[i].begin() == b)
                .collect()
        };
        let (x, y) = (pick(rho + 1), pick(rho));
        let rel = RelationInstance::from_fn(x.len(), y.len(), |j, i| {
            segments[y[j]].precedes(&segments[x[i]])
        });
        let matching = best_matching(&rel);
        Self {
            segments,
            x,
            y,
            matching,
        }
    }
}

/// Zelevinsky parameter of `soc(ρ^{×a} × Z(m))`.
pub fn cusp_socle_rigid(rho: i64, a: usize, m: &RigidMultisegment) -> RigidMultisegment {
    let inst = CuspInstance::new(rho, m);
    let free = &inst.matching.domain_complement;
    let mut out = inst.segments.clone();
    for &l in free.iter().take(a) {
        let i = inst.x[l];
        out[i] = out[i].extend_begin();
    }
    let mut out: RigidMultisegment = out.into_iter().collect();
    for _ in free.len()..a {
        out.push(Segment::point(rho));
    }
    out
}

pub fn cusp_socle(line: &Line, rho: i64, a: usize, m: &Multisegment) -> Multisegment {
    let part = cusp_socle_rigid(rho, a, &m.part_or_empty(line));
    m.clone().with_part(line.clone(), part)
}

/// The largest `a` with `Z(m) ↪ ρ^{×a} × σ`, and the Zelevinsky parameter of
/// that `σ`.
pub fn rho_extraction_rigid(m: &RigidMultisegment, rho: i64) -> (usize, RigidMultisegment) {
    let inst = CuspInstance::new(rho, m);
    let free = &inst.matching.range_complement;
    let mut out: Vec<Option<Segment>> = inst.segments.iter().copied().map(Some).collect();
    for &l in free {
        let i = inst.y[l];
        out[i] = inst.segments[i].trim_begin();
    }
    (free.len(), out.into_iter().flatten().collect())
}

pub fn rho_extraction(line: &Line, m: &Multisegment, rho: i64) -> (usize, Multisegment) {
    let (a, rest) = rho_extraction_rigid(&m.part_or_empty(line), rho);
    (a, m.clone().with_part(line.clone(), rest))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::parse_rigid;
    use proptest::prelude::*;

    fn r(text: &str) -> RigidMultisegment {
        parse_rigid(text).unwrap().1
    }

    #[test]
    fn socle_examples() {
        assert_eq!(cusp_socle_rigid(0, 1, &r("[1,2]")), r("[0,2]"));
        assert_eq!(cusp_socle_rigid(0, 1, &r("[0,1]+[1,2]")), r("[0,0]+[0,1]+[1,2]"));
        assert_eq!(cusp_socle_rigid(5, 0, &r("[0,1]+[1,2]")), r("[0,1]+[1,2]"));
        assert_eq!(cusp_socle_rigid(0, 3, &r("[1,2]")), r("[0,2]+[0,0]+[0,0]"));
    }

    #[test]
    fn extraction_examples() {
        assert_eq!(rho_extraction_rigid(&r("[0,1]+[1,2]"), 1), (1, r("[0,1]+[2,2]")));
        assert_eq!(rho_extraction_rigid(&r("[0,1]"), 1), (0, r("[0,1]")));
        assert_eq!(rho_extraction_rigid(&r("[3,3]"), 3), (1, r("0")));
    }

    #[test]
    fn other_lines_untouched() {
        let a = Line::labelled("a");
        let m = Multisegment::on_default(r("[0,0]")).sum(&Multisegment::from_rigid(a.clone(), r("[0,0]")));
        let (k, rest) = rho_extraction(&a, &m, 0);
        assert_eq!(k, 1);
        assert_eq!(rest, Multisegment::on_default(r("[0,0]")));
    }

    proptest! {
        #[test]
        fn extraction_then_socle_round_trips(
            v in prop::collection::vec((0i64..5, 0i64..3), 0..5),
            rho in -1i64..6,
        ) {
            let m: RigidMultisegment = v.into_iter().map(|(b, l)| Segment::new(b, b + l).unwrap()).collect();
            let (a, rest) = rho_extraction_rigid(&m, rho);
            prop_assert_eq!(cusp_socle_rigid(rho, a, &rest), m);
        }
    }
}
