//! Explicit representations above the Frobenius number.
//!
//! For a triple with parameters `(m, n)` and generators
//! `p = m^2 - n^2`, `q = 2mn`, `r = m^2 + n^2`, every target `N` above the
//! Frobenius number decomposes in three steps:
//!
//! 1. Solve `a*p - b*q = N` with `b >= 0` and `a` minimal.
//! 2. Find the smallest `y >= 0` such that the interval
//!    `[(b + yn)/m, ym/n]` contains an integer `x`.
//! 3. Read off the coefficients
//!    `(a - ym - xn, xm - yn - b, ym - xn)`, which the interval bounds
//!    and the minimality of `a` make nonnegative.
//!
//! The algebraic identity behind step 3 holds for any `(x, y)`:
//! `(a - ym - xn) p + (xm - yn - b) q + (ym - xn) r = a*p - b*q`.

use num_integer::Integer;

use crate::checked;
use crate::closed_forms::pythagorean_frobenius;
use crate::domain::{LemmaWitness, Representation, TripleParams};
use crate::error::{Error, Result};
use crate::oracle::{Budget, find_representation_dp};

/// Solution of `a * (m^2 - n^2) - b * (2mn) = target` with `a >= 1`,
/// `b >= 0`, and `a` minimal. Minimality of `a` keeps `b` below
/// `m^2 - n^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiophantinePair {
    a: i128,
    b: i128,
}

impl DiophantinePair {
    pub fn a(self) -> i128 {
        self.a
    }

    pub fn b(self) -> i128 {
        self.b
    }
}

/// Every intermediate step of one constructed representation, kept for
/// inspection and verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionTrace {
    pair: DiophantinePair,
    witness: LemmaWitness,
    representation: Representation,
}

impl ConstructionTrace {
    pub fn pair(&self) -> DiophantinePair {
        self.pair
    }

    pub fn witness(&self) -> LemmaWitness {
        self.witness
    }

    pub fn representation(&self) -> &Representation {
        &self.representation
    }

    pub fn into_representation(self) -> Representation {
        self.representation
    }
}

/// Modular inverse by the extended Euclidean algorithm. The caller
/// guarantees the inputs are coprime.
fn mod_inverse(value: i128, modulus: i128) -> Result<i128> {
    debug_assert!(modulus >= 1);
    let (mut r0, mut r1) = (value.rem_euclid(modulus), modulus);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let quotient = r0 / r1;
        let r2 = checked::sub(r0, checked::mul(quotient, r1)?)?;
        let s2 = checked::sub(s0, checked::mul(quotient, s1)?)?;
        (r0, r1) = (r1, r2);
        (s0, s1) = (s1, s2);
    }
    debug_assert_eq!(r0, 1, "inverse requires coprime inputs");
    Ok(s0.rem_euclid(modulus))
}

/// Solves `a * (m^2 - n^2) - b * (2mn) = target` for the minimal `a`
/// that keeps `b` nonnegative. Requires `target >= 1`.
pub fn solve_diophantine(target: i128, params: TripleParams) -> Result<DiophantinePair> {
    if target < 1 {
        return Err(Error::NonPositive(target));
    }
    let triple = params.triple()?;
    let p = triple.odd_leg();
    let q = triple.even_leg();
    let inv = mod_inverse(p, q)?;
    // smallest nonnegative a with a * p congruent to target mod q
    let mut a = checked::mul(target.rem_euclid(q), inv)?.rem_euclid(q);
    let mut ap = checked::mul(a, p)?;
    if ap < target {
        let deficit = checked::sub(target, ap)?;
        let step = checked::mul(p, q)?;
        let jumps = Integer::div_ceil(&deficit, &step);
        a = checked::add(a, checked::mul(jumps, q)?)?;
        ap = checked::mul(a, p)?;
    }
    let b = checked::sub(ap, target)? / q;
    debug_assert_eq!((ap - target) % q, 0);
    debug_assert!(a >= 1 && b >= 0 && b < p);
    Ok(DiophantinePair { a, b })
}

/// Finds the smallest `y >= 0` whose interval `[(b + yn)/m, ym/n]`
/// contains an integer, and returns that `y` with the smallest such
/// integer `x`. Requires `b >= 0`; the search always terminates because
/// the interval length grows linearly in `y`.
pub fn lemma_interval_search(b: i128, params: TripleParams) -> Result<LemmaWitness> {
    assert!(b >= 0, "interval search needs a nonnegative offset, got {b}");
    let (m, n) = (params.m(), params.n());
    let p = params.triple()?.odd_leg();
    // the interval has length >= 1 once y reaches n(b + m) / (m^2 - n^2)
    let y_bound = Integer::div_ceil(&checked::mul(n, checked::add(b, m)?)?, &p);
    for y in 0..=y_bound {
        let lo = Integer::div_ceil(&checked::add(b, checked::mul(y, n)?)?, &m);
        let hi = Integer::div_floor(&checked::mul(y, m)?, &n);
        if lo <= hi {
            return Ok(LemmaWitness::new(lo, y, b));
        }
    }
    unreachable!("interval at the bound has length at least 1");
}

/// Checks the interval witness inequality
/// `(ym + xn)(m^2 - n^2) <= A + (m^2 - n^2) + b * 2mn`
/// where `A` is the triple's Frobenius number. It holds for every witness
/// produced by [`lemma_interval_search`], with equality exactly at the
/// tightest cases.
pub fn lemma_bound_holds(witness: LemmaWitness, params: TripleParams) -> Result<bool> {
    let (m, n) = (params.m(), params.n());
    let triple = params.triple()?;
    let frobenius = pythagorean_frobenius(params)?;
    let weighted = checked::add(
        checked::mul(witness.y(), m)?,
        checked::mul(witness.x(), n)?,
    )?;
    let lhs = checked::mul(weighted, triple.odd_leg())?;
    let rhs = checked::add(
        checked::add(frobenius.value(), triple.odd_leg())?,
        checked::mul(witness.b(), triple.even_leg())?,
    )?;
    Ok(lhs <= rhs)
}

/// Builds the full trace for a target above the Frobenius number:
/// Diophantine pair, interval witness, and the resulting representation
/// over the canonical `(odd leg, even leg, hypotenuse)` order.
pub fn construction_trace(target: i128, params: TripleParams) -> Result<ConstructionTrace> {
    let frobenius = pythagorean_frobenius(params)?.value();
    if target <= frobenius {
        return Err(Error::TargetNotAboveFrobenius { target, frobenius });
    }
    let pair = solve_diophantine(target, params)?;
    let witness = lemma_interval_search(pair.b(), params)?;
    let triple = params.triple()?;
    let (m, n) = (params.m(), params.n());
    let ym = checked::mul(witness.y(), m)?;
    let xn = checked::mul(witness.x(), n)?;
    let xm = checked::mul(witness.x(), m)?;
    let yn = checked::mul(witness.y(), n)?;
    let c_odd = checked::sub(pair.a(), checked::add(ym, xn)?)?;
    let c_even = checked::sub(checked::sub(xm, yn)?, pair.b())?;
    let c_hyp = checked::sub(ym, xn)?;
    let representation = Representation::new(
        vec![c_odd, c_even, c_hyp],
        triple.generators().to_vec(),
        target,
    )?;
    Ok(ConstructionTrace {
        pair,
        witness,
        representation,
    })
}

/// The constructed representation alone. Fails with
/// [`Error::TargetNotAboveFrobenius`] when the closed-form method does not
/// apply; use [`represent_any`] to fall back to search in that range.
pub fn construct_representation(target: i128, params: TripleParams) -> Result<Representation> {
    construction_trace(target, params).map(ConstructionTrace::into_representation)
}

/// Representation of an arbitrary integer over the triple's generators,
/// in canonical `(odd leg, even leg, hypotenuse)` order. Targets above
/// the Frobenius number use the closed-form construction; the finitely
/// many targets at or below it fall back to a budgeted table search.
/// Returns `None` exactly when the target is a gap (or negative).
pub fn represent_any(
    target: i128,
    params: TripleParams,
    budget: Budget,
) -> Result<Option<Representation>> {
    if target < 0 {
        return Ok(None);
    }
    let frobenius = pythagorean_frobenius(params)?.value();
    if target > frobenius {
        return construct_representation(target, params).map(Some);
    }
    let triple = params.triple()?;
    let set = triple.generator_set();
    let Some(sorted) = find_representation_dp(target, &set, budget)? else {
        return Ok(None);
    };
    // re-align coefficients from the set's sorted order to canonical order
    let canonical = triple.generators();
    let mut coeffs = [0i128; 3];
    for (&c, &g) in sorted.coeffs().iter().zip(sorted.generators()) {
        let slot = canonical
            .iter()
            .position(|&v| v == g)
            .expect("the sorted set holds exactly the canonical generators");
        coeffs[slot] = c;
    }
    Representation::new(coeffs.to_vec(), canonical.to_vec(), target).map(Some)
}
