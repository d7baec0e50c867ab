use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

const DUAL_SUFFIX: &str = "^∨";

/// A cuspidal line: an opaque base label plus a twist offset in `[0,1)`.
///
/// Segments on distinct lines never interact.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Line {
    label: String,
    offset: Rational,
}

impl Line {
    pub fn new(label: impl Into<String>, offset: Rational) -> Result<Self> {
        if offset < Rational::zero() || offset >= Rational::one() {
            return Err(Error::InvalidOffset(offset.to_string()));
        }
        Ok(Self {
            label: label.into(),
            offset,
        })
    }

    pub fn labelled(label: impl Into<String>) -> Self {
        Self {
            label: label.into(),
            offset: Rational::zero(),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn offset(&self) -> Rational {
        self.offset
    }

    pub fn is_default(&self) -> bool {
        self.label.is_empty() && self.offset.is_zero()
    }

    /// The line of the contragredient. Involutive.
    pub fn dual(&self) -> Self {
        let label = match self.label.strip_suffix(DUAL_SUFFIX) {
            Some(base) => base.to_string(),
            None => format!("{}{}", self.label, DUAL_SUFFIX),
        };
        let offset = if self.offset.is_zero() {
            self.offset
        } else {
            Rational::one() - self.offset
        };
        Self { label, offset }
    }

    /// Twist by a real exponent: returns the line holding `point + by` and the
    /// integer coordinate shift applied to points of `self`.
    pub fn twist(&self, by: Rational) -> (Self, i64) {
        let total = self.offset + by;
        let whole = total.floor();
        (
            Self {
                label: self.label.clone(),
                offset: total - whole,
            },
            whole.to_integer(),
        )
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.offset.is_zero() {
            write!(f, "line({})", self.label)
        } else {
            write!(
                f,
                "line({},{}/{})",
                self.label,
                self.offset.numer(),
                self.offset.denom()
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn offsets_are_reduced_and_bounded() {
        let a = Line::new("a", Rational::new(2, 4)).unwrap();
        let b = Line::new("a", Rational::new(1, 2)).unwrap();
        assert_eq!(a, b);
        assert!(Line::new("a", Rational::new(1, 1)).is_err());
        assert!(Line::new("a", Rational::new(-1, 3)).is_err());
    }

    #[test]
    fn dual_is_involutive() {
        for line in [
            Line::default(),
            Line::labelled("rho"),
            Line::new("x", Rational::new(1, 3)).unwrap(),
        ] {
            assert_ne!(line.dual(), line);
            assert_eq!(line.dual().dual(), line);
        }
        assert_eq!(
            Line::new("x", Rational::new(1, 3)).unwrap().dual().offset(),
            Rational::new(2, 3)
        );
    }

    #[test]
    fn twist_carries_integer_part() {
        let base = Line::new("", Rational::new(1, 2)).unwrap();
        let (up, shift) = base.twist(Rational::new(3, 4));
        assert_eq!(up.offset(), Rational::new(1, 4));
        assert_eq!(shift, 1);
        let (down, shift) = Line::default().twist(Rational::new(-1, 4));
        assert_eq!(down.offset(), Rational::new(3, 4));
        assert_eq!(shift, -1);
    }
}
