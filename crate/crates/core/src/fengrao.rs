//! Generalized Feng-Rao distances `δʳ(m)` and Feng-Rao numbers `E(S, r)`.

use std::fmt;

use itertools::Itertools;

use crate::amenable::{shadow_representatives, Configuration};
use crate::divisors::raw_divisors;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use crate::Int;

/// Default limit on the number of subsets the exhaustive search may visit.
pub const DEFAULT_BRUTE_FORCE_CAP: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Generic,
    IntervalFormula,
    BruteForce,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Generic => "generic",
            Method::IntervalFormula => "interval",
            Method::BruteForce => "brute",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FengRaoResult {
    /// Minimal generators of the semigroup.
    pub generators: Vec<Int>,
    pub m: Int,
    pub r: usize,
    /// `δʳ(m)`.
    pub delta: Int,
    /// `E(S, r) = δʳ(m) - (m + 1 - 2g)`.
    pub e_number: Int,
    pub method: Method,
    /// An optimal configuration, lexicographically first among those examined.
    pub witness: Option<Configuration>,
}

fn check_args(s: &NumericalSemigroup, m: Int, r: usize) -> Result<()> {
    if r == 0 {
        return Err(Error::InvalidInput("r must be at least 1".into()));
    }
    if !s.contains(m) {
        return Err(Error::NotElement(m));
    }
    let min = 2 * s.conductor() - 1;
    if m < min {
        return Err(Error::BaseTooSmall { m, min });
    }
    Ok(())
}

/// Counts `#D(M)` for configurations inside a fixed window `[0, limit]`,
/// caching each `D(x)`.
struct DivisorCounter<'a> {
    s: &'a NumericalSemigroup,
    cache: Vec<Option<Vec<Int>>>,
    stamp: Vec<u32>,
    generation: u32,
}

impl<'a> DivisorCounter<'a> {
    fn new(s: &'a NumericalSemigroup, limit: Int) -> Self {
        let n = limit as usize + 1;
        Self {
            s,
            cache: vec![None; n],
            stamp: vec![0; n],
            generation: 0,
        }
    }

    fn count(&mut self, config: &[Int]) -> usize {
        self.generation += 1;
        let mut total = 0;
        for &x in config {
            let s = self.s;
            let divs = self.cache[x as usize].get_or_insert_with(|| raw_divisors(s, x));
            for &d in divs.iter() {
                let slot = &mut self.stamp[d as usize];
                if *slot != self.generation {
                    *slot = self.generation;
                    total += 1;
                }
            }
        }
        total
    }
}

/// `δʳ(m)` for `m >= 2c - 1`: the minimum of `#D(M)` over one amenable set
/// per shadow.
pub fn feng_rao_distance(s: &NumericalSemigroup, m: Int, r: usize) -> Result<FengRaoResult> {
    check_args(s, m, r)?;
    let mut counter = DivisorCounter::new(s, m + s.rho(r));
    let mut best: Option<(usize, Configuration)> = None;
    for config in shadow_representatives(s, m, r)? {
        let n = counter.count(config.elements());
        if best.as_ref().is_none_or(|(b, _)| n < *b) {
            best = Some((n, config));
        }
    }
    let (delta, witness) = best.expect("the interval [m, m+r) is always amenable");
    Ok(result(
        s,
        m,
        r,
        delta as Int,
        Method::Generic,
        Some(witness),
    ))
}

/// `E(S, r)`, evaluated at the smallest base where the asymptotic identity
/// `δʳ(m) = m + 1 - 2g + E(S, r)` holds.
pub fn feng_rao_number(s: &NumericalSemigroup, r: usize) -> Result<FengRaoResult> {
    feng_rao_distance(s, s.asymptotic_base(), r)
}

/// `δʳ(m)` by exhaustive search over every `r`-subset of `S ∩ [m, m + ρ_r]`
/// containing `m`, with no amenability filter.
///
/// Fails with [`Error::SearchSpaceTooLarge`] when the number of subsets
/// exceeds `cap`.
pub fn brute_force_distance(
    s: &NumericalSemigroup,
    m: Int,
    r: usize,
    cap: u64,
) -> Result<FengRaoResult> {
    check_args(s, m, r)?;
    let top = m + s.rho(r);
    let candidates: Vec<Int> = (m + 1..=top).filter(|&x| s.contains(x)).collect();
    let size = binomial(candidates.len() as u128, (r - 1) as u128);
    if size > cap as u128 {
        return Err(Error::SearchSpaceTooLarge { size, cap });
    }
    let mut counter = DivisorCounter::new(s, top);
    let mut best: Option<(usize, Vec<Int>)> = None;
    let mut config = Vec::with_capacity(r);
    for rest in candidates.iter().copied().combinations(r - 1) {
        config.clear();
        config.push(m);
        config.extend(rest);
        let n = counter.count(&config);
        if best.as_ref().is_none_or(|(b, _)| n < *b) {
            best = Some((n, config.clone()));
        }
    }
    let (delta, elems) = best.expect("r-1 <= number of candidates");
    let witness = Configuration::with_base(s, m, elems)?;
    Ok(result(
        s,
        m,
        r,
        delta as Int,
        Method::BruteForce,
        Some(witness),
    ))
}

pub(crate) fn result(
    s: &NumericalSemigroup,
    m: Int,
    r: usize,
    delta: Int,
    method: Method,
    witness: Option<Configuration>,
) -> FengRaoResult {
    FengRaoResult {
        generators: s.minimal_generators().to_vec(),
        m,
        r,
        delta,
        e_number: delta - (m + 1 - 2 * s.genus()),
        method,
        witness,
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul(n - i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}
