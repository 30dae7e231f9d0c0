//! Brute-force numerical semigroup oracles.
//!
//! Everything in this module computes from first principles with dynamic
//! programming or shortest-path relaxation, independently of the closed
//! forms, so the two sides can cross-validate each other. Table sizes are
//! capped by an explicit [`Budget`]; blowing the cap is an error, never a
//! silent truncation.

use num_integer::Integer;

use crate::checked;
use crate::closed_forms::FrobeniusValue;
use crate::domain::{GeneratorSet, Representation};
use crate::error::{Error, Result};

/// Cap on the number of table entries a single oracle table may hold.
///
/// The unit is entries, not bytes: a reachability table costs one byte per
/// entry, a denumerant table sixteen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    max_entries: u64,
}

impl Budget {
    /// Default cap, 2^26 entries. Large enough for every generator set
    /// with values in the millions, small enough to fail fast on runaway
    /// inputs.
    pub const DEFAULT_MAX_ENTRIES: u64 = 1 << 26;

    pub fn new(max_entries: u64) -> Self {
        Budget { max_entries }
    }

    pub fn max_entries(self) -> u64 {
        self.max_entries
    }

    fn charge(self, entries: u128) -> Result<usize> {
        if entries > u128::from(self.max_entries) {
            return Err(Error::BudgetExceeded {
                needed: entries,
                cap: u128::from(self.max_entries),
            });
        }
        usize::try_from(entries).map_err(|_| Error::Overflow)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_MAX_ENTRIES)
    }
}

/// Reachability table for `0..=limit`: entry `v` is true when `v` is a
/// nonnegative integer combination of the generators.
fn reach_table(limit: i128, gens: &[i128], budget: Budget) -> Result<Vec<bool>> {
    debug_assert!(limit >= 0);
    let len = budget.charge(limit as u128 + 1)?;
    let mut table = vec![false; len];
    table[0] = true;
    for &g in gens {
        if g > limit {
            continue;
        }
        let g = g as usize;
        for v in g..len {
            if table[v - g] {
                table[v] = true;
            }
        }
    }
    Ok(table)
}

/// Starting point for the certified scan. A coprime pair inside the set
/// gives a guaranteed bound via Sylvester's formula; otherwise the product
/// of the two smallest generators is a heuristic seed that the certificate
/// loop grows as needed.
fn initial_scan_bound(gens: &[i128]) -> Result<i128> {
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            if a.gcd(&b) == 1 {
                return checked::sub(checked::sub(checked::mul(a, b)?, a)?, b);
            }
        }
    }
    checked::mul(gens[0], gens[1])
}

/// Largest unrepresentable value, found by scanning a reachability table
/// and certifying the answer: the scan is only trusted once the smallest
/// generator's worth of consecutive values above the candidate are all
/// representable, which proves everything beyond is representable too.
/// If the certificate fails, the scan window doubles and the search
/// repeats.
fn certified_scan(set: &GeneratorSet, budget: Budget) -> Result<i128> {
    if set.contains_one() {
        return Ok(-1);
    }
    let gens = set.gens();
    let smallest = set.smallest();
    let mut bound = initial_scan_bound(gens)?;
    loop {
        let limit = checked::add(bound, smallest)?;
        let table = reach_table(limit, gens, budget)?;
        let frobenius = (0..table.len())
            .rev()
            .find(|&v| !table[v])
            .expect("1 is unrepresentable whenever the smallest generator exceeds 1")
            as i128;
        if frobenius <= bound {
            return Ok(frobenius);
        }
        bound = checked::mul(bound, 2)?;
    }
}

/// Whether `n` is a nonnegative integer combination of the generators,
/// decided by dynamic programming.
pub fn is_representable_dp(n: i128, set: &GeneratorSet, budget: Budget) -> Result<bool> {
    if n < 0 {
        return Ok(false);
    }
    let table = reach_table(n, set.gens(), budget)?;
    Ok(table[n as usize])
}

/// Frobenius number by certified table scan. Returns -1 when a generator
/// equals 1.
pub fn frobenius_dp(set: &GeneratorSet, budget: Budget) -> Result<FrobeniusValue> {
    certified_scan(set, budget).map(FrobeniusValue::new)
}

/// A representation of `n` found by dynamic programming, or `None` when
/// `n` is not representable. The walk-back picks the smallest usable
/// generator at each step, so results are deterministic.
pub fn find_representation_dp(
    n: i128,
    set: &GeneratorSet,
    budget: Budget,
) -> Result<Option<Representation>> {
    if n < 0 {
        return Ok(None);
    }
    let gens = set.gens();
    let table = reach_table(n, gens, budget)?;
    if !table[n as usize] {
        return Ok(None);
    }
    let mut coeffs = vec![0i128; gens.len()];
    let mut v = n as usize;
    while v > 0 {
        let (i, g) = gens
            .iter()
            .enumerate()
            .find(|&(_, &g)| (g as usize) <= v && table[v - g as usize])
            .expect("every representable value above zero steps down through a generator");
        coeffs[i] += 1;
        v -= *g as usize;
    }
    Ok(Some(Representation::new(coeffs, gens.to_vec(), n)?))
}

/// The smallest representable value in each residue class.
///
/// `values()[r]` is the least representable integer congruent to `r`
/// modulo `modulus`; its largest element determines the Frobenius number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperySet {
    modulus: i128,
    values: Vec<i128>,
}

impl AperySet {
    pub fn modulus(&self) -> i128 {
        self.modulus
    }

    /// One value per residue class, indexed by residue.
    pub fn values(&self) -> &[i128] {
        &self.values
    }

    /// The Frobenius number equals the largest class minimum minus the
    /// modulus: everything above it lands in some class at or past that
    /// class's minimum.
    pub fn frobenius(&self) -> FrobeniusValue {
        let max = self
            .values
            .iter()
            .copied()
            .max()
            .expect("modulus is at least 1, so there is at least one class");
        FrobeniusValue::new(max - self.modulus)
    }
}

/// Apery set of the generators with respect to `modulus`, which must be
/// one of the generators.
pub fn apery_set(set: &GeneratorSet, modulus: i128, budget: Budget) -> Result<AperySet> {
    if !set.contains(modulus) {
        return Err(Error::ModulusNotGenerator(modulus));
    }
    let frobenius = certified_scan(set, budget)?;
    let limit = checked::add(frobenius, modulus)?;
    let classes = budget.charge(modulus as u128)?;
    let table = reach_table(limit, set.gens(), budget)?;
    let mut values = vec![-1i128; classes];
    let mut missing = classes;
    for (v, &reachable) in table.iter().enumerate() {
        if !reachable {
            continue;
        }
        let r = v % classes;
        if values[r] < 0 {
            values[r] = v as i128;
            missing -= 1;
            if missing == 0 {
                break;
            }
        }
    }
    debug_assert_eq!(missing, 0, "every residue class has a representable member");
    Ok(AperySet { modulus, values })
}

/// Frobenius number via shortest paths on residue classes of the smallest
/// generator: relax `class -> (class + g) mod smallest` edges to a fixed
/// point, then take the largest class minimum minus the smallest
/// generator. Entirely independent of the table scan.
pub fn frobenius_round_robin(set: &GeneratorSet, budget: Budget) -> Result<FrobeniusValue> {
    let smallest = set.smallest();
    if smallest == 1 {
        return Ok(FrobeniusValue::new(-1));
    }
    let classes = budget.charge(smallest as u128)?;
    let mut min_by_class = vec![i128::MAX; classes];
    min_by_class[0] = 0;
    let rest = &set.gens()[1..];
    loop {
        let mut changed = false;
        for r in 0..classes {
            let base = min_by_class[r];
            if base == i128::MAX {
                continue;
            }
            for &g in rest {
                let candidate = checked::add(base, g)?;
                let class = (candidate % smallest) as usize;
                if candidate < min_by_class[class] {
                    min_by_class[class] = candidate;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let max = min_by_class
        .iter()
        .copied()
        .max()
        .expect("at least one residue class");
    assert!(
        max < i128::MAX,
        "gcd-1 generators reach every residue class of the smallest generator"
    );
    Ok(FrobeniusValue::new(max - smallest))
}

/// Number of distinct representations of `n` (the denumerant), counted by
/// dynamic programming over coefficient vectors.
pub fn denumerant(n: i128, set: &GeneratorSet, budget: Budget) -> Result<u128> {
    if n < 0 {
        return Ok(0);
    }
    let len = budget.charge(n as u128 + 1)?;
    let mut ways = vec![0u128; len];
    ways[0] = 1;
    for &g in set.gens() {
        if g > n {
            continue;
        }
        let g = g as usize;
        for v in g..len {
            let add = ways[v - g];
            ways[v] = ways[v].checked_add(add).ok_or(Error::Overflow)?;
        }
    }
    Ok(ways[n as usize])
}

/// All unrepresentable nonnegative integers, in increasing order. Empty
/// when a generator equals 1.
pub fn gaps(set: &GeneratorSet, budget: Budget) -> Result<Vec<i128>> {
    let frobenius = certified_scan(set, budget)?;
    if frobenius < 0 {
        return Ok(Vec::new());
    }
    let table = reach_table(frobenius, set.gens(), budget)?;
    Ok((0..table.len())
        .filter(|&v| !table[v])
        .map(|v| v as i128)
        .collect())
}
