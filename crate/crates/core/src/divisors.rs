//! Divisor sets `D(x) = S ∩ (x - S)` and their unions over configurations.

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use crate::Int;

/// A sorted, duplicate-free set of semigroup elements together with the
/// elements it was computed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorSet {
    elements: Vec<Int>,
    source: Vec<Int>,
}

impl DivisorSet {
    pub(crate) fn from_sorted(elements: Vec<Int>, source: Vec<Int>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Self { elements, source }
    }

    pub fn elements(&self) -> &[Int] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Int> {
        self.elements
    }

    /// The element or configuration these are the divisors of.
    pub fn source(&self) -> &[Int] {
        &self.source
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

    pub fn iter(&self) -> impl Iterator<Item = Int> + '_ {
        self.elements.iter().copied()
    }

    /// Members that are `>= x`.
    pub fn at_least(&self, x: Int) -> &[Int] {
        let i = self.elements.partition_point(|&e| e < x);
        &self.elements[i..]
    }

    pub fn is_subset(&self, other: &DivisorSet) -> bool {
        self.elements.iter().all(|&e| other.contains(e))
    }
}

/// `D(x)` for `x ∈ S`.
pub fn divisors(s: &NumericalSemigroup, x: Int) -> Result<DivisorSet> {
    if !s.contains(x) {
        return Err(Error::NotElement(x));
    }
    Ok(DivisorSet::from_sorted(raw_divisors(s, x), vec![x]))
}

/// Unchecked `D(x)`; `x` must be an element.
pub(crate) fn raw_divisors(s: &NumericalSemigroup, x: Int) -> Vec<Int> {
    s.elements_up_to(x)
        .into_iter()
        .filter(|&e| s.contains(x - e))
        .collect()
}

/// `D(m_1, ..., m_r)`, the union of the divisor sets of the given elements.
pub fn divisors_of_set(s: &NumericalSemigroup, config: &[Int]) -> Result<DivisorSet> {
    if let Some(&bad) = config.iter().find(|&&x| !s.contains(x)) {
        return Err(Error::NotElement(bad));
    }
    let mut acc: Vec<Int> = Vec::new();
    for &x in config {
        // D(x) ⊆ acc already when x is itself a divisor of something seen.
        if acc.binary_search(&x).is_ok() {
            continue;
        }
        acc = merge_union(&acc, &raw_divisors(s, x));
    }
    Ok(DivisorSet::from_sorted(acc, config.to_vec()))
}

/// `#D(m_1, ..., m_r)`.
pub fn nu(s: &NumericalSemigroup, config: &[Int]) -> Result<usize> {
    divisors_of_set(s, config).map(|d| d.len())
}

/// `D(y) ∩ [x, ∞)` computed as `(y - S) ∩ [x, ∞)`, valid for `c <= x <= y`.
pub fn divisors_above(s: &NumericalSemigroup, y: Int, x: Int) -> Result<DivisorSet> {
    if !s.contains(y) {
        return Err(Error::NotElement(y));
    }
    if x < s.conductor() || x > y {
        return Err(Error::InvalidRange(format!(
            "need c = {} <= x = {x} <= y = {y}",
            s.conductor()
        )));
    }
    let elements = s
        .elements_up_to(y - x)
        .into_iter()
        .rev()
        .map(|e| y - e)
        .collect();
    Ok(DivisorSet::from_sorted(elements, vec![y]))
}

pub(crate) fn merge_union(a: &[Int], b: &[Int]) -> Vec<Int> {
    let mut out = Vec::with_capacity(a.len().max(b.len()));
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use proptest::prelude::*;

    fn sg(g: &[Int]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    /// Double loop straight from the definition.
    fn brute_divisors(s: &NumericalSemigroup, x: Int) -> Vec<Int> {
        (0..=x)
            .filter(|&a| (0..=x).any(|b| a + b == x && s.contains(a) && s.contains(b)))
            .collect()
    }

    #[test]
    fn divisors_of_sixty() {
        let s = sg(&[9, 13, 15]);
        let d = divisors(&s, 60).unwrap();
        assert_eq!(
            d.elements(),
            &[0, 9, 15, 18, 24, 27, 30, 33, 36, 42, 45, 51, 60]
        );
        assert_eq!(nu(&s, &[60]).unwrap(), 13);
        assert_eq!(divisors(&s, 9).unwrap().elements(), &[0, 9]);
        assert_eq!(divisors(&s, 0).unwrap().elements(), &[0]);
        assert_eq!(nu(&s, &[95]).unwrap(), 48);
        assert_eq!(divisors(&s, 47), Err(Error::NotElement(47)));
        assert_eq!(divisors_of_set(&s, &[60]).unwrap().elements(), d.elements());
    }

    #[test]
    fn amenable_figure_divisors() {
        let s = sg(&[19, 20, 21, 22, 23]);
        let d = divisors_of_set(&s, &[235, 199, 247, 229]).unwrap();
        let mut expected: Vec<Int> = (189..=197).collect();
        expected.push(199);
        expected.extend(201..=210);
        expected.extend(212..=216);
        expected.extend(224..=229);
        expected.push(235);
        expected.push(247);
        assert_eq!(d.at_least(189), expected.as_slice());
    }

    #[test]
    fn consecutive_pair_count() {
        // |D(m, m+1)| = |D(m)| + ceil((a+b-1)/b) for <4,5> at m = 2c-1.
        let s = sg(&[4, 5]);
        let m = 2 * s.conductor() - 1;
        assert_eq!(m, 23);
        assert_eq!(nu(&s, &[m]).unwrap(), 12);
        assert_eq!(nu(&s, &[m, m + 1]).unwrap(), 12 + 4);
    }

    #[test]
    fn divisors_above_cases() {
        let s = sg(&[9, 13, 15]);
        assert_eq!(divisors_above(&s, 60, 48).unwrap().elements(), &[51, 60]);
        assert_eq!(divisors_above(&s, 60, 60).unwrap().elements(), &[60]);
        assert!(matches!(
            divisors_above(&s, 60, 47),
            Err(Error::InvalidRange(_))
        ));
        assert!(matches!(
            divisors_above(&s, 60, 61),
            Err(Error::InvalidRange(_))
        ));
        assert_eq!(divisors_above(&s, 47, 47), Err(Error::NotElement(47)));
    }

    #[test]
    fn corpus_matches_definition() {
        for s in corpus::semigroups() {
            let limit = 2 * s.conductor() + 2 * s.largest_generator();
            for x in (0..=limit).filter(|&x| s.contains(x)) {
                let d = divisors(&s, x).unwrap();
                assert_eq!(d.elements(), brute_divisors(&s, x).as_slice(), "{s} x={x}");
                assert!(d.iter().all(|a| d.contains(x - a)));
                if x >= 2 * s.conductor() - 1 {
                    assert_eq!(d.len() as Int, x + 1 - 2 * s.genus());
                }
            }
        }
    }

    #[test]
    fn divisor_closure() {
        let s = sg(&[5, 7, 9]);
        for x in (0..60).filter(|&x| s.contains(x)) {
            let d = divisors(&s, x).unwrap();
            for e in d.iter() {
                assert!(divisors(&s, e).unwrap().is_subset(&d));
            }
        }
    }

    fn sample() -> impl Strategy<Value = (usize, Int, Int)> {
        (0..corpus::GENERATORS.len(), 0..200 as Int, 0..200 as Int)
    }

    proptest! {
        #[test]
        fn above_agrees_with_filter((idx, dx, dy) in sample()) {
            let s = sg(corpus::GENERATORS[idx]);
            let x = s.conductor() + dx;
            let y = x + dy;
            let fast = divisors_above(&s, y, x).unwrap();
            let slow = divisors(&s, y).unwrap();
            prop_assert_eq!(fast.elements(), slow.at_least(x));
        }

        #[test]
        fn union_is_monotone(
            idx in 0..corpus::GENERATORS.len(),
            xs in proptest::collection::vec(0..120 as Int, 1..6),
            extra in 0..120 as Int,
        ) {
            let s = sg(corpus::GENERATORS[idx]);
            let small: Vec<Int> = xs.into_iter().filter(|&x| s.contains(x)).collect();
            let mut big = small.clone();
            if s.contains(extra) {
                big.push(extra);
            }
            let d_small = divisors_of_set(&s, &small).unwrap();
            let d_big = divisors_of_set(&s, &big).unwrap();
            prop_assert!(d_small.is_subset(&d_big));
            let mut naive: Vec<Int> = small.iter().flat_map(|&x| brute_divisors(&s, x)).collect();
            naive.sort_unstable();
            naive.dedup();
            prop_assert_eq!(d_small.elements(), naive.as_slice());
        }
    }
}
