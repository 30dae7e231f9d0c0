//! Closed-form Frobenius numbers.
//!
//! Two formulas live here: Sylvester's classical two-generator formula
//! `g(a, b) = ab - a - b`, and the three-generator formula for primitive
//! Pythagorean triples,
//!
//! ```text
//! A(m, n) = (m - 1)(m^2 - n^2) + (m - 1)(2mn) - (m^2 + n^2)
//!         = m(m^2 + 2mn - n^2 - 2m - 2n).
//! ```
//!
//! Both are exact over checked 128-bit integers.

use num_integer::Integer;

use crate::checked;
use crate::domain::TripleParams;
use crate::error::{Error, Result};

/// A Frobenius number. Always at least -1: the value -1 means every
/// nonnegative integer is representable (some generator equals 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FrobeniusValue(i128);

impl FrobeniusValue {
    pub(crate) fn new(value: i128) -> Self {
        assert!(value >= -1, "Frobenius number {value} below -1");
        FrobeniusValue(value)
    }

    pub fn value(self) -> i128 {
        self.0
    }

    /// True when every nonnegative integer is representable.
    pub fn all_representable(self) -> bool {
        self.0 == -1
    }
}

impl std::fmt::Display for FrobeniusValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Frobenius number of two coprime positive generators:
/// `g(a, b) = ab - a - b`. When either generator is 1 the formula yields
/// -1, matching the convention for fully representable sets.
pub fn sylvester_frobenius(a: i128, b: i128) -> Result<FrobeniusValue> {
    if a < 1 {
        return Err(Error::NonPositive(a));
    }
    if b < 1 {
        return Err(Error::NonPositive(b));
    }
    let gcd = a.gcd(&b);
    if gcd != 1 {
        return Err(Error::NotCoprime { a, b, gcd });
    }
    let g = checked::sub(checked::sub(checked::mul(a, b)?, a)?, b)?;
    Ok(FrobeniusValue::new(g))
}

/// Frobenius number of the primitive Pythagorean triple generated by
/// `params`, using the factored form `m(m^2 + 2mn - n^2 - 2m - 2n)`.
///
/// The result is positive for every valid parameter pair (the smallest
/// case, `(m, n) = (2, 1)`, already gives 2).
pub fn pythagorean_frobenius(params: TripleParams) -> Result<FrobeniusValue> {
    let (m, n) = (params.m(), params.n());
    let m_sq = checked::mul(m, m)?;
    let n_sq = checked::mul(n, n)?;
    let two_mn = checked::mul(2, checked::mul(m, n)?)?;
    let mut inner = checked::add(m_sq, two_mn)?;
    inner = checked::sub(inner, n_sq)?;
    inner = checked::sub(inner, checked::mul(2, m)?)?;
    inner = checked::sub(inner, checked::mul(2, n)?)?;
    let a = checked::mul(m, inner)?;
    Ok(FrobeniusValue::new(a))
}
