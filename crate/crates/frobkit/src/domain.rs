//! Validated domain types shared by all other modules.
//!
//! Every type here is immutable after construction and enforces its
//! invariants in the constructor, so downstream code can rely on them
//! without re-checking. All arithmetic is checked 128-bit.

use num_integer::Integer;

use crate::checked;
use crate::error::{Error, Result};

/// Generator pair `(m, n)` of a primitive Pythagorean triple.
///
/// Invariants: `m > n >= 1`, `gcd(m, n) = 1`, and `m`, `n` have opposite
/// parity. These are exactly the conditions under which
/// `(m^2 - n^2, 2mn, m^2 + n^2)` is primitive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TripleParams {
    m: i128,
    n: i128,
}

impl TripleParams {
    /// Validates `(m, n)`. Checks run in a fixed order so every invalid
    /// pair maps to exactly one error: positivity, coprimality, parity,
    /// ordering.
    pub fn new(m: i128, n: i128) -> Result<Self> {
        if m < 1 {
            return Err(Error::NonPositive(m));
        }
        if n < 1 {
            return Err(Error::NonPositive(n));
        }
        let gcd = m.gcd(&n);
        if gcd != 1 {
            return Err(Error::NotCoprime { a: m, b: n, gcd });
        }
        if m % 2 == n % 2 {
            return Err(Error::SameParity { m, n });
        }
        if m <= n {
            return Err(Error::OrderViolation { m, n });
        }
        Ok(TripleParams { m, n })
    }

    pub fn m(self) -> i128 {
        self.m
    }

    pub fn n(self) -> i128 {
        self.n
    }

    /// The primitive Pythagorean triple generated by this pair.
    pub fn triple(self) -> Result<PythTriple> {
        PythTriple::from_params(self)
    }
}

/// A primitive Pythagorean triple `(m^2 - n^2, 2mn, m^2 + n^2)`.
///
/// The legs are coprime (the odd leg and hypotenuse are odd, the even leg
/// is even), which makes the three values a gcd-1 generator set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PythTriple {
    p: i128,
    q: i128,
    r: i128,
}

impl PythTriple {
    pub fn from_params(params: TripleParams) -> Result<Self> {
        let (m, n) = (params.m(), params.n());
        let m_sq = checked::mul(m, m)?;
        let n_sq = checked::mul(n, n)?;
        let p = checked::sub(m_sq, n_sq)?;
        let q = checked::mul(2, checked::mul(m, n)?)?;
        let r = checked::add(m_sq, n_sq)?;
        debug_assert_eq!(p.gcd(&q), 1);
        Ok(PythTriple { p, q, r })
    }

    /// The odd leg `m^2 - n^2`.
    pub fn odd_leg(self) -> i128 {
        self.p
    }

    /// The even leg `2mn`.
    pub fn even_leg(self) -> i128 {
        self.q
    }

    /// The hypotenuse `m^2 + n^2`.
    pub fn hypotenuse(self) -> i128 {
        self.r
    }

    /// The three generators in canonical `(odd leg, even leg, hypotenuse)`
    /// order, the order representation coefficients refer to.
    pub fn generators(self) -> [i128; 3] {
        [self.p, self.q, self.r]
    }

    /// The triple as a sorted generator set for the oracle algorithms.
    pub fn generator_set(self) -> GeneratorSet {
        GeneratorSet::new(&self.generators())
            .expect("a primitive triple is always a valid generator set")
    }
}

/// General gcd-1 generator tuple, stored strictly increasing with
/// duplicates removed.
///
/// A generator equal to 1 is accepted; the Frobenius number of such a set
/// is -1 by convention (everything is representable).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSet {
    gens: Vec<i128>,
}

impl GeneratorSet {
    pub fn new(values: &[i128]) -> Result<Self> {
        if let Some(&bad) = values.iter().find(|&&v| v < 1) {
            return Err(Error::NonPositive(bad));
        }
        let mut gens = values.to_vec();
        gens.sort_unstable();
        gens.dedup();
        if gens.len() < 2 {
            return Err(Error::TooFewGenerators(gens.len()));
        }
        let gcd = gens.iter().fold(0i128, |acc, &v| acc.gcd(&v));
        if gcd != 1 {
            return Err(Error::GcdNotOne(gcd));
        }
        Ok(GeneratorSet { gens })
    }

    pub fn gens(&self) -> &[i128] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        false // at least two generators by construction
    }

    pub fn smallest(&self) -> i128 {
        self.gens[0]
    }

    pub fn contains(&self, value: i128) -> bool {
        self.gens.binary_search(&value).is_ok()
    }

    pub fn contains_one(&self) -> bool {
        self.gens[0] == 1
    }
}

/// Nonnegative coefficient vector witnessing that `target` is a
/// combination of `generators` (same length, same order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    coeffs: Vec<i128>,
    generators: Vec<i128>,
    target: i128,
}

impl Representation {
    /// Construction re-verifies the invariants: coefficients nonnegative
    /// and dot product equal to `target`. A violation is a library bug.
    pub(crate) fn new(coeffs: Vec<i128>, generators: Vec<i128>, target: i128) -> Result<Self> {
        assert_eq!(coeffs.len(), generators.len());
        assert!(
            coeffs.iter().all(|&c| c >= 0),
            "representation coefficients must be nonnegative, got {coeffs:?}"
        );
        let mut dot = 0i128;
        for (&c, &g) in coeffs.iter().zip(&generators) {
            dot = checked::add(dot, checked::mul(c, g)?)?;
        }
        assert_eq!(
            dot, target,
            "representation {coeffs:?} over {generators:?} sums to {dot}, expected {target}"
        );
        Ok(Representation {
            coeffs,
            generators,
            target,
        })
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn generators(&self) -> &[i128] {
        &self.generators
    }

    pub fn target(&self) -> i128 {
        self.target
    }
}

/// Outcome of the lemma's interval search for a given offset `b`: the
/// smallest `y >= 0` whose interval `[(b + yn)/m, ym/n]` contains an
/// integer, together with `x`, the smallest such integer.
///
/// When `y = 0` both `x` and `b` vanish.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaWitness {
    x: i128,
    y: i128,
    b: i128,
}

impl LemmaWitness {
    pub(crate) fn new(x: i128, y: i128, b: i128) -> Self {
        LemmaWitness { x, y, b }
    }

    pub fn x(self) -> i128 {
        self.x
    }

    pub fn y(self) -> i128 {
        self.y
    }

    pub fn b(self) -> i128 {
        self.b
    }
}
