//! Speh parameters `m_{n,d}`, the building blocks `B_rigid` and `B`, and the
//! Tadić product map.

use std::fmt;

use num_traits::Zero;

use crate::criteria::speh_reducibility;
use crate::error::{Error, Result};
use crate::line::{Line, Rational};
use crate::multisegment::{Multisegment, Param, RigidMultisegment};
use crate::segment::Segment;

/// `m_{n,d}`: `n` segments of length `d`, each the left shift of the one
/// above, with top segment ending at `center`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpehParam {
    pub n: usize,
    pub d: usize,
    pub line: Line,
    pub center: i64,
}

impl SpehParam {
    pub fn new(n: usize, d: usize, line: Line, center: i64) -> Result<Self> {
        if n == 0 || d == 0 {
            return Err(Error::InvalidParameter(format!(
                "Speh parameter needs n, d >= 1, got n={n}, d={d}"
            )));
        }
        Ok(Self { n, d, line, center })
    }

    /// The symmetric placement on base line `label`, twisted by `twist`: the
    /// points of `m_{n,d}` are centred on `twist`.
    pub fn centered(n: usize, d: usize, label: &str, twist: Rational) -> Result<Self> {
        let top = Rational::new((n + d) as i64, 2) - 1 + twist;
        let (line, center) = Line::labelled(label).twist(top);
        Self::new(n, d, line, center)
    }

    /// `Δ_i = [center − d + 2 − i, center + 1 − i]` for `i = 1..n`.
    pub fn segments(&self) -> RigidMultisegment {
        let d = self.d as i64;
        (1..=self.n as i64)
            .map(|i| Segment::new(self.center - d + 2 - i, self.center + 1 - i).expect("d >= 1"))
            .collect()
    }

    /// The same ladder moved by a real exponent.
    pub fn twisted(&self, by: Rational) -> Self {
        let (line, shift) = self.line.twist(by);
        Self {
            line,
            center: self.center + shift,
            ..self.clone()
        }
    }
}

impl fmt::Display for SpehParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m({},{})@{}", self.n, self.d, self.center)?;
        if !self.line.is_default() {
            write!(f, " on {}", self.line)?;
        }
        Ok(())
    }
}

pub fn speh_multisegment(p: &SpehParam) -> Multisegment {
    Multisegment::from_rigid(p.line.clone(), p.segments())
}

/// An element of `B`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BElement {
    Rigid(SpehParam),
    /// `σν^α × σν^{−α}` with `0 < α < 1/2`.
    Complementary(SpehParam, Rational),
}

impl BElement {
    /// The Speh constituents, each on its own line.
    pub fn constituents(&self) -> Result<Vec<SpehParam>> {
        match self {
            BElement::Rigid(p) => Ok(vec![p.clone()]),
            BElement::Complementary(p, alpha) => {
                if *alpha <= Rational::zero() || *alpha >= Rational::new(1, 2) {
                    return Err(Error::InvalidExponent(alpha.to_string()));
                }
                Ok(vec![p.twisted(*alpha), p.twisted(-*alpha)])
            }
        }
    }
}

/// `sp = L(m)` summed over the constituents.
pub fn b_element_param(el: &BElement) -> Result<Param> {
    let m = el
        .constituents()?
        .iter()
        .fold(Multisegment::new(), |acc, p| acc.sum(&speh_multisegment(p)));
    Ok(Param::langlands(m))
}

/// The product `τ_1 × … × τ_s` as a Langlands parameter, with its
/// irreducibility decided by pairwise Speh checks on each line.
pub fn tadic_product(elements: &[BElement]) -> Result<(Param, bool)> {
    let mut parts = Vec::new();
    for el in elements {
        parts.extend(el.constituents()?);
    }
    let m = parts
        .iter()
        .fold(Multisegment::new(), |acc, p| acc.sum(&speh_multisegment(p)));
    let mut irreducible = true;
    'outer: for (i, p) in parts.iter().enumerate() {
        for q in &parts[i + 1..] {
            if p.line == q.line && speh_reducibility(&p.segments(), &q.segments())? {
                irreducible = false;
                break 'outer;
            }
        }
    }
    Ok((Param::langlands(m), irreducible))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::parse;

    fn half() -> Rational {
        Rational::new(1, 2)
    }

    #[test]
    fn multisegment_examples() {
        let p = SpehParam::centered(2, 2, "", Rational::zero()).unwrap();
        assert_eq!(p.center, 1);
        assert_eq!(speh_multisegment(&p), parse("[0,1]+[-1,0]").unwrap());
        let p = SpehParam::new(3, 1, Line::default(), 1).unwrap();
        assert_eq!(speh_multisegment(&p), parse("[1,1]+[0,0]+[-1,-1]").unwrap());
        let p = SpehParam::centered(1, 1, "", Rational::zero()).unwrap();
        assert_eq!(speh_multisegment(&p), parse("[0,0]").unwrap());
        assert!(SpehParam::new(0, 1, Line::default(), 0).is_err());
    }

    #[test]
    fn odd_sizes_sit_on_the_half_line() {
        let p = SpehParam::centered(2, 1, "", Rational::zero()).unwrap();
        assert_eq!(p.line.offset(), half());
        assert_eq!(p.segments().to_string(), "[0,0]+[-1,-1]");
    }

    #[test]
    fn complementary_offsets() {
        let p = SpehParam::centered(1, 1, "", Rational::zero()).unwrap();
        let q = Rational::new(1, 4);
        let got = b_element_param(&BElement::Complementary(p.clone(), q)).unwrap();
        let expected = parse("line(,1/4):[0,0];line(,3/4):[-1,-1]").unwrap();
        assert_eq!(got, Param::langlands(expected));
        for bad in [Rational::zero(), half(), Rational::new(3, 4), Rational::new(-1, 4)] {
            assert!(matches!(
                b_element_param(&BElement::Complementary(p.clone(), bad)),
                Err(Error::InvalidExponent(_))
            ));
        }
    }

    #[test]
    fn product_examples() {
        let p = SpehParam::centered(2, 2, "", Rational::zero()).unwrap();
        let (param, irr) = tadic_product(&[BElement::Rigid(p.clone()), BElement::Rigid(p)]).unwrap();
        assert!(irr);
        assert_eq!(param.m, parse("[0,1]+[0,1]+[-1,0]+[-1,0]").unwrap());

        let (param, irr) = tadic_product(&[]).unwrap();
        assert!(irr && param.m.is_empty());

        // adjacent points violate the symmetric anchoring, and the check sees it
        let a = SpehParam::new(1, 1, Line::default(), 0).unwrap();
        let b = SpehParam::new(1, 1, Line::default(), 1).unwrap();
        assert!(!tadic_product(&[BElement::Rigid(a.clone()), BElement::Rigid(b.clone())]).unwrap().1);
        assert!(!tadic_product(&[BElement::Rigid(b), BElement::Rigid(a)]).unwrap().1);
    }

    #[test]
    fn complementary_pairs_do_not_interact_with_themselves() {
        let p = SpehParam::centered(2, 3, "", Rational::zero()).unwrap();
        let el = BElement::Complementary(p.clone(), Rational::new(1, 3));
        let (_, irr) = tadic_product(&[el, BElement::Rigid(p)]).unwrap();
        assert!(irr);
    }
}
