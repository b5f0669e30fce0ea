//! Configurations, grounds, shadows and amenable sets.
//!
//! A configuration `M ⊂ S ∩ [m, ∞)` is amenable when it contains `m` and
//! every divisor of an element of `M` that is still `>= m` belongs to `M`.
//! It suffices to check this for differences with minimal generators, which
//! is what [`is_amenable`] does. Among the optimal configurations for
//! `δʳ(m)` there is always an amenable one, so the search in
//! [`crate::fengrao`] only visits amenable sets, and only one per shadow.

use std::collections::HashSet;
use std::fmt;

#[cfg(test)]
use crate::divisors;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use crate::Int;

/// A finite, strictly increasing set of semigroup elements `>= base`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    base: Int,
    elements: Vec<Int>,
}

impl Configuration {
    /// Configuration whose base is its smallest element.
    pub fn new(s: &NumericalSemigroup, elements: Vec<Int>) -> Result<Self> {
        let base = *elements.first().ok_or_else(|| {
            Error::InvalidInput("empty configuration needs an explicit base".into())
        })?;
        Self::with_base(s, base, elements)
    }

    pub fn with_base(s: &NumericalSemigroup, base: Int, elements: Vec<Int>) -> Result<Self> {
        if !elements.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "configuration {elements:?} is not strictly increasing"
            )));
        }
        if let Some(&x) = elements.first() {
            if x < base {
                return Err(Error::InvalidInput(format!("{x} is below the base {base}")));
            }
        }
        if let Some(&x) = elements.iter().find(|&&x| !s.contains(x)) {
            return Err(Error::NotElement(x));
        }
        Ok(Self { base, elements })
    }

    /// The `(S, m, 0)`-amenable set.
    pub fn empty(base: Int) -> Self {
        Self {
            base,
            elements: Vec::new(),
        }
    }

    pub(crate) fn from_parts(base: Int, elements: Vec<Int>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elements.first().is_none_or(|&x| x >= base));
        Self { base, elements }
    }

    pub fn base(&self) -> Int {
        self.base
    }

    pub fn elements(&self) -> &[Int] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Int> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: Int) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn max(&self) -> Option<Int> {
        self.elements.last().copied()
    }

    /// Elements relative to the base.
    pub fn offsets(&self) -> Vec<Int> {
        self.elements.iter().map(|&x| x - self.base).collect()
    }

    /// `M + delta`, based at `base + delta`. Callers must make sure the
    /// translated elements are still in the semigroup.
    pub fn translated(&self, delta: Int) -> Self {
        Self {
            base: self.base + delta,
            elements: self.elements.iter().map(|&x| x + delta).collect(),
        }
    }

    /// `M ∖ {max M}`.
    pub fn without_max(&self) -> Self {
        let mut elements = self.elements.clone();
        elements.pop();
        Self {
            base: self.base,
            elements,
        }
    }

    /// `M ∖ {x}`, keeping the base.
    pub fn without(&self, x: Int) -> Self {
        Self {
            base: self.base,
            elements: self.elements.iter().copied().filter(|&e| e != x).collect(),
        }
    }

    /// `{base - 1} ∪ M`, based at `base - 1`.
    pub fn prepend_base(&self) -> Self {
        let base = self.base - 1;
        let mut elements = Vec::with_capacity(self.elements.len() + 1);
        elements.push(base);
        elements.extend_from_slice(&self.elements);
        Self { base, elements }
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// The interval `[m, m + n_e)` where `n_e` is the largest minimal generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ground {
    pub base: Int,
    pub width: Int,
}

impl Ground {
    /// Exclusive upper end.
    pub fn end(&self) -> Int {
        self.base + self.width
    }

    pub fn contains(&self, x: Int) -> bool {
        (self.base..self.end()).contains(&x)
    }
}

/// The part of a configuration lying in its ground.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shadow {
    base: Int,
    elements: Vec<Int>,
}

impl Shadow {
    pub fn elements(&self) -> &[Int] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn offsets(&self) -> Vec<Int> {
        self.elements.iter().map(|&x| x - self.base).collect()
    }

    pub fn to_configuration(&self) -> Configuration {
        Configuration::from_parts(self.base, self.elements.clone())
    }
}

fn check_base(s: &NumericalSemigroup, m: Int) -> Result<()> {
    let min = 2 * s.conductor() - 1;
    if m < min {
        return Err(Error::BaseTooSmall { m, min });
    }
    if !s.contains(m) {
        return Err(Error::NotElement(m));
    }
    Ok(())
}

pub fn ground(s: &NumericalSemigroup, m: Int) -> Result<Ground> {
    check_base(s, m)?;
    Ok(Ground {
        base: m,
        width: s.largest_generator(),
    })
}

pub fn shadow(s: &NumericalSemigroup, config: &Configuration) -> Shadow {
    let end = config.base + s.largest_generator();
    Shadow {
        base: config.base,
        elements: config
            .elements
            .iter()
            .copied()
            .take_while(|&x| x < end)
            .collect(),
    }
}

/// Generator criterion: `m ∈ M`, and for every `x ∈ M` and minimal generator
/// `n` with `x - n >= m`, also `x - n ∈ M`. The empty configuration is
/// amenable by convention.
///
/// Meaningful for bases `m >= 2c - 1`.
pub fn is_amenable(s: &NumericalSemigroup, config: &Configuration) -> bool {
    if config.is_empty() {
        return true;
    }
    let m = config.base;
    config.contains(m)
        && config.elements.iter().all(|&x| {
            s.minimal_generators()
                .iter()
                .all(|&n| x - n < m || config.contains(x - n))
        })
}

/// All `(S, m, r)`-amenable sets in lexicographic order.
pub fn enumerate_amenable(s: &NumericalSemigroup, m: Int, r: usize) -> Result<AmenableSets<'_>> {
    check_base(s, m)?;
    Ok(AmenableSets {
        walker: Walker::new(s, m, r),
    })
}

/// One `(S, m, r)`-amenable set per distinct shadow, the lexicographically
/// first one found for each.
pub fn shadow_representatives(
    s: &NumericalSemigroup,
    m: Int,
    r: usize,
) -> Result<ShadowRepresentatives<'_>> {
    check_base(s, m)?;
    Ok(ShadowRepresentatives {
        walker: Walker::new(s, m, r),
        ground_end: m + s.largest_generator(),
        seen: HashSet::new(),
    })
}

pub struct AmenableSets<'a> {
    walker: Walker<'a>,
}

impl Iterator for AmenableSets<'_> {
    type Item = Configuration;

    fn next(&mut self) -> Option<Configuration> {
        let m = self.walker.m;
        self.walker
            .advance(|_| true)
            .map(|e| Configuration::from_parts(m, e.to_vec()))
    }
}

pub struct ShadowRepresentatives<'a> {
    walker: Walker<'a>,
    ground_end: Int,
    seen: HashSet<Vec<Int>>,
}

fn shadow_key(elems: &[Int], m: Int, ground_end: Int) -> Vec<Int> {
    elems
        .iter()
        .take_while(|&&x| x < ground_end)
        .map(|&x| x - m)
        .collect()
}

impl Iterator for ShadowRepresentatives<'_> {
    type Item = Configuration;

    fn next(&mut self) -> Option<Configuration> {
        let m = self.walker.m;
        let end = self.ground_end;
        loop {
            let seen = &self.seen;
            // Once a prefix has left the ground its shadow is final.
            let elems = self.walker.advance(|p| {
                p.last().is_none_or(|&x| x < end) || !seen.contains(&shadow_key(p, m, end))
            })?;
            let key = shadow_key(elems, m, end);
            if !self.seen.contains(&key) {
                let config = Configuration::from_parts(m, elems.to_vec());
                self.seen.insert(key);
                return Some(config);
            }
        }
    }
}

/// Depth-first search over sorted extensions, pruned by `m_i <= m + ρ_i`,
/// `m_{i+1} - m_i <= ρ_2` and the generator criterion.
struct Walker<'a> {
    s: &'a NumericalSemigroup,
    m: Int,
    r: usize,
    elems: Vec<Int>,
    // next candidate to try at each depth
    cursor: Vec<Int>,
    // membership of m + offset in `elems`, offsets 0..=ρ_r
    member: Vec<bool>,
    started: bool,
    done: bool,
}

impl<'a> Walker<'a> {
    fn new(s: &'a NumericalSemigroup, m: Int, r: usize) -> Self {
        let span = if r == 0 { 0 } else { s.rho(r) as usize };
        Self {
            s,
            m,
            r,
            elems: Vec::with_capacity(r),
            cursor: vec![0; r + 1],
            member: vec![false; span + 1],
            started: false,
            done: false,
        }
    }

    fn push(&mut self, x: Int) {
        self.member[(x - self.m) as usize] = true;
        self.elems.push(x);
    }

    fn pop(&mut self) {
        if let Some(x) = self.elems.pop() {
            self.member[(x - self.m) as usize] = false;
        }
    }

    fn admissible(&self, x: Int) -> bool {
        self.s.contains(x)
            && self
                .s
                .minimal_generators()
                .iter()
                .all(|&n| x - n < self.m || self.member[(x - n - self.m) as usize])
    }

    /// Next complete set. `descend` is asked about every proper prefix of
    /// length >= 2 before its subtree is explored.
    fn advance<F: FnMut(&[Int]) -> bool>(&mut self, mut descend: F) -> Option<&[Int]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.r == 0 {
                self.done = true;
                return Some(&self.elems);
            }
            self.push(self.m);
            if self.r == 1 {
                self.done = true;
                return Some(&self.elems);
            }
            self.cursor[1] = self.m + 1;
        } else if self.elems.len() == self.r {
            self.pop();
        }

        let rho2 = self.s.rho(2);
        loop {
            let d = self.elems.len();
            if d == 0 {
                self.done = true;
                return None;
            }
            let last = self.elems[d - 1];
            let hi = (last + rho2).min(self.m + self.s.rho(d + 1));
            let mut x = self.cursor[d];
            while x <= hi && !self.admissible(x) {
                x += 1;
            }
            if x > hi {
                self.pop();
                continue;
            }
            self.cursor[d] = x + 1;
            self.push(x);
            if self.elems.len() == self.r {
                return Some(&self.elems);
            }
            if descend(&self.elems) {
                self.cursor[d + 1] = x + 1;
            } else {
                self.pop();
            }
        }
    }
}

#[cfg(test)]
/// Full definition: `D(x) ∩ [m, ∞) ⊆ M` for every `x ∈ M`.
pub(crate) fn is_divisor_closed(s: &NumericalSemigroup, config: &Configuration) -> bool {
    let m = config.base;
    config.is_empty()
        || (config.contains(m)
            && config.elements.iter().all(|&x| {
                divisors::raw_divisors(s, x)
                    .into_iter()
                    .filter(|&d| d >= m)
                    .all(|d| config.contains(d))
            }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::divisors::nu;
    use itertools::Itertools;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn sg(g: &[Int]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    fn nu_of(s: &NumericalSemigroup, c: &Configuration) -> usize {
        nu(s, c.elements()).unwrap()
    }

    /// Every r-subset of S ∩ [m, m + ρ_r] containing m that satisfies the
    /// full divisor-closure definition, in lexicographic order.
    fn oracle_amenable(s: &NumericalSemigroup, m: Int, r: usize) -> Vec<Configuration> {
        if r == 0 {
            return vec![Configuration::empty(m)];
        }
        let cands: Vec<Int> = (m + 1..=m + s.rho(r)).filter(|&x| s.contains(x)).collect();
        cands
            .into_iter()
            .combinations(r - 1)
            .map(|rest| {
                let mut e = vec![m];
                e.extend(rest);
                Configuration::from_parts(m, e)
            })
            .filter(|c| is_divisor_closed(s, c))
            .collect()
    }

    fn fig3_set() -> (NumericalSemigroup, Configuration) {
        let s = sg(&[19, 20, 21, 22, 23]);
        let d = divisors::divisors_of_set(&s, &[235, 199, 247, 229]).unwrap();
        let elems = d.at_least(189).to_vec();
        (s.clone(), Configuration::with_base(&s, 189, elems).unwrap())
    }

    #[test]
    fn grounds() {
        let s = sg(&[19, 20, 21, 22, 23]);
        let g = ground(&s, 189).unwrap();
        assert_eq!((g.base, g.end()), (189, 212));
        let n = sg(&[1]);
        let g = ground(&n, 0).unwrap();
        assert_eq!((g.base, g.end()), (0, 1));
        let s = sg(&[9, 13, 15]);
        let g = ground(&s, 95).unwrap();
        assert_eq!((g.base, g.end()), (95, 110));
        assert_eq!(ground(&s, 94), Err(Error::BaseTooSmall { m: 94, min: 95 }));
    }

    #[test]
    fn figure_shadow() {
        let (s, m) = fig3_set();
        assert!(is_amenable(&s, &m));
        assert!(is_divisor_closed(&s, &m));
        let mut expected: Vec<Int> = (189..=197).collect();
        expected.push(199);
        expected.extend(201..=210);
        assert_eq!(shadow(&s, &m).elements(), expected.as_slice());
        let sh = shadow(&s, &m).to_configuration();
        assert!(is_amenable(&s, &sh));
        assert_eq!(shadow(&s, &sh).elements(), sh.elements());
    }

    #[test]
    fn amenable_examples() {
        let s = sg(&[5, 6, 7]);
        let m = 2 * s.conductor() - 1;
        assert!(is_amenable(&s, &Configuration::new(&s, vec![m]).unwrap()));
        for r in 1..12 {
            let c = Configuration::new(&s, (m..m + r).collect()).unwrap();
            assert!(is_amenable(&s, &c));
        }
        let ne = s.largest_generator();
        let c = Configuration::new(&s, vec![m, m + ne]).unwrap();
        assert!(!is_amenable(&s, &c));
        assert!(!is_divisor_closed(&s, &c));
        assert!(is_amenable(&s, &Configuration::empty(m)));
        let missing_base = Configuration::with_base(&s, m, vec![m + 1]).unwrap();
        assert!(!is_amenable(&s, &missing_base));
    }

    #[test]
    fn four_five_pairs() {
        let s = sg(&[4, 5]);
        let m = 23;
        let all: Vec<Vec<Int>> = enumerate_amenable(&s, m, 2)
            .unwrap()
            .map(Configuration::into_elements)
            .collect();
        // every offset up to rho_2 = 4 passes the generator criterion at this base
        assert_eq!(
            all,
            vec![vec![23, 24], vec![23, 25], vec![23, 26], vec![23, 27]]
        );
        let one: Vec<_> = enumerate_amenable(&s, m, 1).unwrap().collect();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].elements(), &[m]);
        let zero: Vec<_> = enumerate_amenable(&s, m, 0).unwrap().collect();
        assert_eq!(zero, vec![Configuration::empty(m)]);
        assert!(matches!(
            enumerate_amenable(&s, 22, 2),
            Err(Error::BaseTooSmall { .. })
        ));
    }

    #[test]
    fn enumeration_matches_oracle() {
        for s in corpus::semigroups()
            .into_iter()
            .filter(|s| s.multiplicity() <= 9)
        {
            let m = s.asymptotic_base();
            for r in 0..=5 {
                let fast: Vec<_> = enumerate_amenable(&s, m, r).unwrap().collect();
                let slow = oracle_amenable(&s, m, r);
                assert_eq!(fast, slow, "{s} r={r}");
                for c in &fast {
                    assert!(is_amenable(&s, c));
                    for (i, &x) in c.elements().iter().enumerate() {
                        assert!(x <= m + s.rho(i + 1));
                        if i > 0 {
                            assert!(x - c.elements()[i - 1] <= s.rho(2));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn representatives_cover_shadows() {
        for s in corpus::semigroups()
            .into_iter()
            .filter(|s| s.multiplicity() <= 10)
        {
            let m = s.asymptotic_base();
            for r in 1..=6 {
                let all: Vec<_> = enumerate_amenable(&s, m, r).unwrap().collect();
                let reps: Vec<_> = shadow_representatives(&s, m, r).unwrap().collect();
                assert!(reps.len() <= all.len());
                // first in lexicographic order for each shadow
                let mut seen = HashSet::new();
                let expected: Vec<_> = all
                    .iter()
                    .filter(|c| seen.insert(shadow(&s, c)))
                    .cloned()
                    .collect();
                assert_eq!(reps, expected, "{s} r={r}");
                let best_all = all.iter().map(|c| nu_of(&s, c)).min();
                let best_rep = reps.iter().map(|c| nu_of(&s, c)).min();
                assert_eq!(best_all, best_rep);
            }
        }
    }

    #[test]
    fn shadow_decomposition_and_monotonicity() {
        for s in corpus::semigroups()
            .into_iter()
            .filter(|s| s.multiplicity() <= 8)
        {
            let m = s.asymptotic_base();
            for r in 1..=6 {
                let all: Vec<_> = enumerate_amenable(&s, m, r).unwrap().collect();
                let info: Vec<(Shadow, usize)> = all
                    .iter()
                    .map(|c| {
                        let l = shadow(&s, c);
                        let dm = divisors::divisors_of_set(&s, c.elements()).unwrap();
                        let dl = divisors::divisors_of_set(&s, l.elements()).unwrap();
                        // D(M) = (M ∖ L) ∪ D(L), disjoint
                        let outside: Vec<Int> = c
                            .elements()
                            .iter()
                            .copied()
                            .filter(|x| !l.elements().contains(x))
                            .collect();
                        assert!(outside.iter().all(|&x| !dl.contains(x)));
                        let mut union = dl.elements().to_vec();
                        union.extend(&outside);
                        union.sort_unstable();
                        assert_eq!(union.as_slice(), dm.elements(), "{s} {c}");
                        (l, dm.len())
                    })
                    .collect();
                for (lm, nm) in &info {
                    for (ln, nn) in &info {
                        if lm.elements().iter().all(|x| ln.elements().contains(x)) {
                            assert!(nm <= nn);
                        }
                    }
                }
            }
        }
    }

    fn random_amenable(
        rng: &mut StdRng,
        s: &NumericalSemigroup,
        m: Int,
        r: usize,
    ) -> Configuration {
        // random walk through the search tree
        let mut elems = vec![m];
        while elems.len() < r {
            let last = *elems.last().unwrap();
            let i = elems.len() + 1;
            let hi = (last + s.rho(2)).min(m + s.rho(i));
            let opts: Vec<Int> = (last + 1..=hi)
                .filter(|&x| {
                    s.minimal_generators()
                        .iter()
                        .all(|&n| x - n < m || elems.contains(&(x - n)))
                })
                .collect();
            if opts.is_empty() {
                break;
            }
            elems.push(opts[rng.gen_range(0..opts.len())]);
        }
        Configuration::from_parts(m, elems)
    }

    #[test]
    fn closure_properties_on_random_sets() {
        let mut rng = StdRng::seed_from_u64(7);
        let corpus = corpus::semigroups();
        for _ in 0..500 {
            let s = &corpus[rng.gen_range(1..corpus.len())];
            let m = s.asymptotic_base() + rng.gen_range(0..4);
            let r = rng.gen_range(1..10);
            let c = random_amenable(&mut rng, s, m, r);
            assert!(is_amenable(s, &c));
            assert!(is_divisor_closed(s, &c));
            assert!(is_amenable(s, &c.translated(1)), "push right {c}");
            if m >= 2 * s.conductor() {
                assert!(is_amenable(s, &c.translated(-1)), "push left {c}");
            }
            let shifted = c.translated(1);
            assert!(is_amenable(s, &shifted.prepend_base()), "prepend {c}");
            if c.len() > 1 {
                assert!(is_amenable(s, &c.without_max()), "drop max {c}");
            }
            assert!(is_amenable(s, &shadow(s, &c).to_configuration()));
        }
    }
}
