//! Socle and irreducibility criteria.
//!
//! Every rigid function works on one line; the multi-line wrappers split by
//! line and conjoin, since products across distinct lines are irreducible.

pub mod cusp;
pub mod ladder;
pub mod segment;
pub mod speh;

pub use cusp::{cusp_socle, cusp_socle_rigid, rho_extraction, rho_extraction_rigid, CuspInstance};
pub use ladder::{
    cosocle_ladder_times, irreducible_ladder_times, is_ladder, is_speh, lc_pair, lc_pair_witness,
    nc_condition, nc_witness, socle_ladder_times, socle_ladder_times_traced, LadderStep,
    PairInstance, PairVariant,
};
pub use segment::{
    irreducible_seg_times, irreducible_seg_times_involution, irreducible_seg_times_involution_rigid,
    irreducible_seg_times_rigid, lc_seg, lc_seg_witness, left_divide_by_segment, left_divide_rigid,
    rc_seg, socle_seg_times, socle_seg_times_rigid, LcInstance,
};
pub use speh::{
    is_saturated, is_saturated_by_blocks, is_saturated_by_multiplicity, is_saturated_rigid,
    lc_seg_speh, rc_seg_speh, speh_reducibility, support_components, SpehShape,
};

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::involution::transpose;
use crate::line::Line;
use crate::multisegment::{Multisegment, RigidMultisegment};

fn line_pairs<'a>(
    m: &'a Multisegment,
    n: &'a Multisegment,
) -> impl Iterator<Item = (&'a Line, RigidMultisegment, RigidMultisegment)> + 'a {
    let lines: BTreeSet<&Line> = m.lines().chain(n.lines()).collect();
    lines
        .into_iter()
        .map(|l| (l, m.part_or_empty(l), n.part_or_empty(l)))
}

fn no_juxtaposition(m: &RigidMultisegment, n: &RigidMultisegment) -> bool {
    m.iter().all(|a| n.iter().all(|b| !a.juxtaposed(b)))
}

/// One-sided test for irreducibility of `Z(m) × Z(n)` on one line.
pub fn sufficient_irreducible_rigid(m: &RigidMultisegment, n: &RigidMultisegment) -> bool {
    let all = |xs: &RigidMultisegment, f: &dyn Fn(&crate::Segment) -> bool| xs.iter().all(f);
    let left = all(m, &|d| lc_seg(*d, n)) || all(n, &|d| rc_seg(*d, m));
    let right = all(m, &|d| rc_seg(*d, n)) || all(n, &|d| lc_seg(*d, m));
    // Z(m) × L(n^t) with no juxtaposed pair, in either order
    left && right || no_juxtaposition(m, &transpose(n)) || no_juxtaposition(n, &transpose(m))
}

/// `Some(true)` when a sufficient condition certifies that `Z(m) × Z(n)` is
/// irreducible, `None` otherwise. Never returns `Some(false)`.
pub fn sufficient_irreducible(m: &Multisegment, n: &Multisegment) -> Option<bool> {
    line_pairs(m, n)
        .all(|(_, a, b)| sufficient_irreducible_rigid(&a, &b))
        .then_some(true)
}

/// Irreducibility of `Z(m) × Z(n)` for totally unlinked `n`: every segment
/// of `n` satisfies `LC` and `RC` against `m`.
pub fn gentimesany(m: &Multisegment, n: &Multisegment) -> Result<bool> {
    if !n.is_totally_unlinked() {
        return Err(Error::InvalidParameter(format!("{n} is not totally unlinked")));
    }
    Ok(line_pairs(m, n).all(|(_, a, b)| gentimesany_rigid(&a, &b)))
}

fn gentimesany_rigid(m: &RigidMultisegment, n: &RigidMultisegment) -> bool {
    n.iter().all(|d| irreducible_seg_times_rigid(*d, m))
}

/// Which criterion decided an irreducibility query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Trivial,
    Segment,
    Ladder,
    TotallyUnlinked,
    Sufficient,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Trivial => "trivial",
            Method::Segment => "segment",
            Method::Ladder => "ladder",
            Method::TotallyUnlinked => "totally-unlinked",
            Method::Sufficient => "sufficient",
        }
    }
}

/// Irreducibility of `Z(m) × Z(n)` on one line, with the deciding criterion.
pub fn irreducible_rigid(m: &RigidMultisegment, n: &RigidMultisegment) -> Result<(bool, Method)> {
    if m.is_empty() || n.is_empty() {
        return Ok((true, Method::Trivial));
    }
    if let [d] = m.segments() {
        return Ok((irreducible_seg_times_rigid(*d, n), Method::Segment));
    }
    if let [d] = n.segments() {
        return Ok((irreducible_seg_times_rigid(*d, m), Method::Segment));
    }
    if is_ladder(m) {
        return Ok((irreducible_ladder_times(m, n)?, Method::Ladder));
    }
    if is_ladder(n) {
        return Ok((irreducible_ladder_times(n, m)?, Method::Ladder));
    }
    if n.is_totally_unlinked() {
        return Ok((gentimesany_rigid(m, n), Method::TotallyUnlinked));
    }
    if m.is_totally_unlinked() {
        return Ok((gentimesany_rigid(n, m), Method::TotallyUnlinked));
    }
    if sufficient_irreducible_rigid(m, n) {
        return Ok((true, Method::Sufficient));
    }
    Err(Error::Unsupported(format!(
        "no irreducibility criterion for Z({m}) x Z({n}): neither side is a segment, ladder or totally unlinked"
    )))
}

/// Irreducibility of `Z(m) × Z(n)`; errors with [`Error::Unsupported`] when
/// some line falls outside every implemented class.
pub fn irreducible(m: &Multisegment, n: &Multisegment) -> Result<bool> {
    irreducible_explained(m, n).map(|(b, _)| b)
}

/// [`irreducible`] with the per-line criteria used.
pub fn irreducible_explained(
    m: &Multisegment,
    n: &Multisegment,
) -> Result<(bool, Vec<(Line, Method)>)> {
    let mut methods = Vec::new();
    let mut verdict = true;
    for (line, a, b) in line_pairs(m, n) {
        let (v, method) = irreducible_rigid(&a, &b)?;
        verdict &= v;
        methods.push((line.clone(), method));
    }
    Ok((verdict, methods))
}

/// `soc(Z(m) × Z(n))` line by line; every part of `m` must be a ladder.
pub fn socle_ladder(m: &Multisegment, n: &Multisegment) -> Result<Multisegment> {
    let mut out = Multisegment::new();
    for (line, a, b) in line_pairs(m, n) {
        out.set_part(line.clone(), socle_ladder_times(&a, &b)?);
    }
    Ok(out)
}

/// `cos(Z(m) × Z(n))` line by line; every part of `m` must be a ladder.
pub fn cosocle_ladder(m: &Multisegment, n: &Multisegment) -> Result<Multisegment> {
    let mut out = Multisegment::new();
    for (line, a, b) in line_pairs(m, n) {
        out.set_part(line.clone(), cosocle_ladder_times(&a, &b)?);
    }
    Ok(out)
}

/// `LC(m, n)` on every line.
pub fn lc_pair_multi(m: &Multisegment, n: &Multisegment, variant: PairVariant) -> bool {
    line_pairs(m, n).all(|(_, a, b)| lc_pair(&a, &b, variant))
}

/// Irreducibility of `Z(m_1) × … × Z(m_k)` on one line, where all but at most
/// one factor is a ladder; decided pairwise.
pub fn products_of_ladders_irreducible(ms: &[RigidMultisegment]) -> Result<bool> {
    let others = ms.iter().filter(|m| !is_ladder(m)).count();
    if others > 1 {
        return Err(Error::Unsupported(
            "more than one factor is not a ladder".into(),
        ));
    }
    for i in 0..ms.len() {
        for j in i + 1..ms.len() {
            let (a, b) = if is_ladder(&ms[i]) { (&ms[i], &ms[j]) } else { (&ms[j], &ms[i]) };
            if !irreducible_ladder_times(a, b)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::{parse, parse_rigid};

    fn r(text: &str) -> RigidMultisegment {
        parse_rigid(text).unwrap().1
    }

    #[test]
    fn sufficient_examples() {
        let (m, n) = (parse("[0,0]+[0,0]+[1,1]").unwrap(), parse("[0,0]+[1,1]+[1,1]").unwrap());
        assert_eq!(sufficient_irreducible(&m, &n), None);
        assert_eq!(
            sufficient_irreducible(&parse("[0,2]").unwrap(), &parse("[1,3]").unwrap()),
            None
        );
        assert_eq!(
            sufficient_irreducible(&parse("[0,1]").unwrap(), &parse("[5,6]+[0,1]").unwrap()),
            Some(true)
        );
    }

    #[test]
    fn gentimesany_examples() {
        let m = parse("[0,1]+[1,2]").unwrap();
        assert_eq!(gentimesany(&m, &parse("[5,5]+[5,5]").unwrap()), Ok(true));
        assert_eq!(gentimesany(&m, &parse("[2,3]").unwrap()), Ok(false));
        assert!(gentimesany(&m, &parse("[0,0]+[1,1]").unwrap()).is_err());
    }

    #[test]
    fn dispatcher_examples() {
        let p = |t: &str| parse(t).unwrap();
        assert_eq!(irreducible(&p("[0,0]"), &p("[1,1]")), Ok(false));
        assert_eq!(irreducible(&p("0"), &p("[1,1]")), Ok(true));
        let (m, n) = (p("[0,0]+[0,0]+[1,1]"), p("[0,0]+[1,1]+[1,1]"));
        assert!(matches!(irreducible(&m, &n), Err(Error::Unsupported(_))));
        let (_, methods) = irreducible_explained(&p("[0,1]+[1,2]"), &p("[3,3]+[3,3]")).unwrap();
        assert_eq!(methods, vec![(Line::default(), Method::Ladder)]);
        let (_, methods) =
            irreducible_explained(&p("[0,2]+[1,1]"), &p("[0,0]+[0,0]")).unwrap();
        assert_eq!(methods, vec![(Line::default(), Method::TotallyUnlinked)]);
    }

    #[test]
    fn ladder_products() {
        assert_eq!(products_of_ladders_irreducible(&[r("[0,1]")]), Ok(true));
        assert_eq!(
            products_of_ladders_irreducible(&[r("[0,1]"), r("[5,6]+[4,5]"), r("[9,9]")]),
            Ok(true)
        );
        assert_eq!(
            products_of_ladders_irreducible(&[r("[0,0]"), r("[5,5]"), r("[1,1]")]),
            Ok(false)
        );
        assert!(products_of_ladders_irreducible(&[r("[0,2]+[1,1]"), r("[0,2]+[1,1]")]).is_err());
        assert_eq!(
            products_of_ladders_irreducible(&[r("[0,2]+[1,1]"), r("[7,7]")]),
            Ok(true)
        );
    }
}
