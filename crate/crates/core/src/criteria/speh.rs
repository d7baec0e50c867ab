//! Speh multisegments and saturation.

use crate::error::{Error, Result};
use crate::multisegment::{Multisegment, RigidMultisegment};
use crate::segment::Segment;

use super::ladder::is_speh;

/// A Speh multisegment in aligned form `Δ_1, …, Δ_N` with `Δ_{i+1} = ◁Δ_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpehShape {
    pub top: Segment,
    pub bottom: Segment,
}

impl SpehShape {
    pub fn of(m: &RigidMultisegment) -> Result<Self> {
        if !is_speh(m) {
            return Err(Error::NotSpeh(m.to_string()));
        }
        let form = m.left_aligned();
        Ok(Self {
            top: form[0],
            bottom: form[form.len() - 1],
        })
    }

    /// `supp = [b(Δ_N), e(Δ_1)]`.
    pub fn support(&self) -> Segment {
        Segment::new(self.bottom.begin(), self.top.end()).expect("Speh support is an interval")
    }
}

/// The failure condition for `LI(Z(p), Z(q))` between two Speh multisegments.
pub fn speh_left_obstruction(p: &SpehShape, q: &SpehShape) -> bool {
    p.support().precedes(&q.support())
        && p.top.begin() < q.top.begin()
        && p.top.end() < q.top.end()
        && p.bottom.begin() < q.bottom.begin()
        && p.bottom.end() < q.bottom.end()
}

/// Whether `Z(p) × Z(q)` is reducible for Speh multisegments on one line.
pub fn speh_reducibility(p: &RigidMultisegment, q: &RigidMultisegment) -> Result<bool> {
    let (p, q) = (SpehShape::of(p)?, SpehShape::of(q)?);
    Ok(speh_left_obstruction(&p, &q) || speh_left_obstruction(&q, &p))
}

/// `LC(Δ, m)` for Speh `m`: `Δ ⊀ Δ_N`.
pub fn lc_seg_speh(delta: Segment, m: &RigidMultisegment) -> Result<bool> {
    Ok(!delta.precedes(&SpehShape::of(m)?.bottom))
}

/// `RC(Δ, m)` for Speh `m`: `Δ_1 ⊀ Δ`.
pub fn rc_seg_speh(delta: Segment, m: &RigidMultisegment) -> Result<bool> {
    Ok(!SpehShape::of(m)?.top.precedes(&delta))
}

/// Maximal runs of consecutive support points.
pub fn support_components(m: &RigidMultisegment) -> Vec<Segment> {
    let mut out: Vec<Segment> = Vec::new();
    for x in m.support() {
        match out.last_mut() {
            Some(last) if last.end() + 1 == x => *last = last.extend_end(),
            _ => out.push(Segment::point(x)),
        }
    }
    out
}

/// Every `Δ ⊆ supp` with `◁Δ ⊆ supp` has the multiplicity of `◁Δ`.
pub fn is_saturated_by_multiplicity(m: &RigidMultisegment) -> bool {
    support_components(m).iter().all(|c| {
        (c.begin() + 1..=c.end()).all(|b| {
            (b..=c.end()).all(|e| {
                let d = Segment::new(b, e).expect("b ≤ e");
                m.multiplicity(&d) == m.multiplicity(&d.shift_left())
            })
        })
    })
}

/// `m` splits into Speh blocks each spanning a whole support component.
pub fn is_saturated_by_blocks(m: &RigidMultisegment) -> bool {
    let mut rest = m.clone();
    for c in support_components(m) {
        while let Some(start) = rest
            .iter()
            .copied()
            .find(|s| c.contains(s) && s.end() == c.end())
        {
            let mut s = start;
            loop {
                if rest.remove(&s).is_err() {
                    return false;
                }
                if s.begin() == c.begin() {
                    break;
                }
                s = s.shift_left();
            }
        }
    }
    rest.is_empty()
}

pub fn is_saturated_rigid(m: &RigidMultisegment) -> bool {
    let by_mult = is_saturated_by_multiplicity(m);
    debug_assert_eq!(by_mult, is_saturated_by_blocks(m), "saturation checks disagree on {m}");
    by_mult
}

pub fn is_saturated(m: &Multisegment) -> bool {
    m.parts().all(|(_, rigid)| is_saturated_rigid(rigid))
}
