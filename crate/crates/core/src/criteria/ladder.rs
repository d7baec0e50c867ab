//! Ladders: the pair condition `LC(m, n)`, the socle recursion and `NC`.

use crate::error::{Error, Result};
use crate::involution::transpose;
use crate::matching::{max_matching, Matching, RelationInstance};
use crate::multisegment::{Bound, RigidMultisegment, Truncation};
use crate::segment::Segment;

/// Strictly decreasing begins and ends in the aligned form. The empty
/// multisegment counts as a ladder.
pub fn is_ladder(m: &RigidMultisegment) -> bool {
    m.left_aligned()
        .windows(2)
        .all(|w| w[0].begin() > w[1].begin() && w[0].end() > w[1].end())
}

/// A nonempty ladder with `Δ_{i+1} = ◁Δ_i`.
pub fn is_speh(m: &RigidMultisegment) -> bool {
    !m.is_empty()
        && m
            .left_aligned()
            .windows(2)
            .all(|w| w[1] == w[0].shift_left())
}

pub(crate) fn require_ladder(m: &RigidMultisegment) -> Result<()> {
    if is_ladder(m) {
        Ok(())
    } else {
        Err(Error::NotLadder(m.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairVariant {
    /// `⤳`
    Base,
    /// `⤳′`: additionally `i₁ ≤ i₂ + 1`.
    Prime,
    /// `⤳″`: additionally `i₁ ≤ i₂ + 1` and `j₂ ≤ j₁ + 1`.
    DoublePrime,
}

/// The matching problem behind `LC(m, n)`. Both sides are indexed by their
/// left-aligned forms.
#[derive(Debug, Clone)]
pub struct PairInstance {
    pub m: Vec<Segment>,
    pub n: Vec<Segment>,
    /// `X = {(i,j) : Δ_i ≺ Δ'_j}`
    pub x: Vec<(usize, usize)>,
    /// `Y = {(i,j) : ◁Δ_i ≺ Δ'_j}`
    pub y: Vec<(usize, usize)>,
    pub variant: PairVariant,
}

impl PairInstance {
    pub fn new(m: &RigidMultisegment, n: &RigidMultisegment, variant: PairVariant) -> Self {
        let (m, n) = (m.left_aligned(), n.left_aligned());
        let pairs = |shift: i64| -> Vec<(usize, usize)> {
            let mut v = Vec::new();
            for (i, a) in m.iter().enumerate() {
                for (j, b) in n.iter().enumerate() {
                    if a.shift(shift).precedes(b) {
                        v.push((i, j));
                    }
                }
            }
            v
        };
        let (x, y) = (pairs(0), pairs(-1));
        Self {
            m,
            n,
            x,
            y,
            variant,
        }
    }

    /// `(i₂,j₂) ⤳ (i₁,j₁)` under the chosen variant.
    pub fn related(&self, (i2, j2): (usize, usize), (i1, j1): (usize, usize)) -> bool {
        let base = (i1 == i2 && self.n[j2].precedes(&self.n[j1]))
            || (j1 == j2 && self.m[i1].precedes(&self.m[i2]));
        match self.variant {
            PairVariant::Base => base,
            PairVariant::Prime => base && i1 <= i2 + 1,
            PairVariant::DoublePrime => base && i1 <= i2 + 1 && j2 <= j1 + 1,
        }
    }

    pub fn relation(&self) -> RelationInstance {
        RelationInstance::from_fn(self.x.len(), self.y.len(), |y, x| {
            self.related(self.y[y], self.x[x])
        })
    }

    pub fn in_x(&self, p: (usize, usize)) -> bool {
        self.x.contains(&p)
    }

    pub fn in_y(&self, p: (usize, usize)) -> bool {
        self.y.contains(&p)
    }
}

/// `LC(m, n)` (or a primed variant): a matching function `X_{m;n} → Y_{m;n}`.
pub fn lc_pair(m: &RigidMultisegment, n: &RigidMultisegment, variant: PairVariant) -> bool {
    lc_pair_witness(m, n, variant).1.is_total()
}

/// The instance and a maximum matching deciding [`lc_pair`].
pub fn lc_pair_witness(
    m: &RigidMultisegment,
    n: &RigidMultisegment,
    variant: PairVariant,
) -> (PairInstance, Matching) {
    let inst = PairInstance::new(m, n, variant);
    let f = max_matching(&inst.relation());
    (inst, f)
}

/// One level of the socle recursion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LadderStep {
    pub delta: Segment,
    /// `n_{>_e e(Δ)}` where `n = x^t`.
    pub high: RigidMultisegment,
    /// `n'_{≥_e Δ}` where `n' = (n_{≤_e e(Δ)})^t`.
    pub top: RigidMultisegment,
    /// `n'_{<_e Δ}`, the argument of the inner call.
    pub low: RigidMultisegment,
    /// The Zelevinsky parameter returned at this level.
    pub result: RigidMultisegment,
}

/// Zelevinsky parameter of `soc(Z(m) × Z(x))` for a ladder `m`.
pub fn socle_ladder_times(m: &RigidMultisegment, x: &RigidMultisegment) -> Result<RigidMultisegment> {
    socz(m, x, &mut None)
}

/// [`socle_ladder_times`] together with the recursion levels, outermost first.
pub fn socle_ladder_times_traced(
    m: &RigidMultisegment,
    x: &RigidMultisegment,
) -> Result<(RigidMultisegment, Vec<LadderStep>)> {
    let mut trace = Some(Vec::new());
    let out = socz(m, x, &mut trace)?;
    let mut trace = trace.unwrap_or_default();
    trace.reverse();
    Ok((out, trace))
}

fn socz(
    m: &RigidMultisegment,
    x: &RigidMultisegment,
    trace: &mut Option<Vec<LadderStep>>,
) -> Result<RigidMultisegment> {
    let Some(delta) = m.max_b() else {
        return Ok(x.clone());
    };
    require_ladder(m)?;
    let n = transpose(x);
    let high = n.truncate(Truncation::EndAbove(delta.end()));
    let np = transpose(&n.truncate(Truncation::EndAtMost(delta.end())));
    let top = np.truncate(Truncation::ByEnd(Bound::AtLeast, delta));
    let low = np.truncate(Truncation::ByEnd(Bound::Less, delta));
    let inner = socz(&m.clone().without(&delta)?, &low, trace)?;
    let langlands = high.sum(&transpose(&inner.sum(&top).with(delta)));
    let result = transpose(&langlands);
    if let Some(t) = trace {
        t.push(LadderStep {
            delta,
            high,
            top,
            low,
            result: result.clone(),
        });
    }
    Ok(result)
}

/// Zelevinsky parameter of `cos(Z(m) × Z(x))` for a ladder `m`, by duality.
pub fn cosocle_ladder_times(m: &RigidMultisegment, x: &RigidMultisegment) -> Result<RigidMultisegment> {
    Ok(socle_ladder_times(&m.dual(), &x.dual())?.dual())
}

/// Irreducibility of `Z(m) × Z(n)` for a ladder `m`: `LC(m,n)` and `LC(n,m)`.
pub fn irreducible_ladder_times(m: &RigidMultisegment, n: &RigidMultisegment) -> Result<bool> {
    require_ladder(m)?;
    Ok(lc_pair(m, n, PairVariant::Base) && lc_pair(n, m, PairVariant::Base))
}

/// `NC(m, n)`, or `NC′(m, n)` when `strict`, for two ladders.
pub fn nc_condition(m: &RigidMultisegment, n: &RigidMultisegment, strict: bool) -> Result<bool> {
    require_ladder(m)?;
    require_ladder(n)?;
    Ok(nc_witness(m, n, strict).is_some())
}

/// A triple `(i, j, k)` witnessing `NC` (0-based indices).
pub fn nc_witness(m: &RigidMultisegment, n: &RigidMultisegment, strict: bool) -> Option<(usize, usize, usize)> {
    let inst = PairInstance::new(m, n, PairVariant::Base);
    let in_x = |i: usize, j: usize| inst.in_x((i, j));
    let in_y = |i: isize, j: usize| i >= 0 && inst.in_y((i as usize, j));
    for i in 0..inst.m.len() {
        for j in 0..inst.n.len() {
            if in_y(i as isize - 1, j) {
                continue;
            }
            let mut k = 0;
            while in_x(i + k, j + k) {
                let closes = !in_y((i + k) as isize, j + k + 1);
                let chain_ok = !strict
                    || (0..k).all(|l| in_y((i + l) as isize, j + l + 1) && !in_x(i + l, j + l + 1));
                if closes && chain_ok {
                    return Some((i, j, k));
                }
                k += 1;
            }
        }
    }
    None
}
