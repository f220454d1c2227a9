use core::{fmt, str::FromStr};

use num_rational::Ratio;

/// Exact non-negative fraction, always kept in lowest terms.
///
/// Formats as `num/den` even when the denominator is 1, so `2` prints as `2/1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(Ratio<u64>);

impl Rational {
    /// Builds `num/den` reduced to lowest terms.
    ///
    /// Panics if `den` is zero.
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(Ratio::new(num, den))
    }

    pub fn from_integer(n: u64) -> Self {
        Rational(Ratio::from_integer(n))
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    pub fn recip(&self) -> Self {
        assert!(self.numer() != 0, "reciprocal of zero");
        Rational(self.0.recip())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("expected a fraction of the form num/den with den > 0")]
pub struct ParseRationalError;

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num: u64 = num.parse().map_err(|_| ParseRationalError)?;
        let den: u64 = den.parse().map_err(|_| ParseRationalError)?;
        if den == 0 {
            return Err(ParseRationalError);
        }
        Ok(Rational::new(num, den))
    }
}
