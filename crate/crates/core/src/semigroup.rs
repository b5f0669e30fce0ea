//! Canonical numerical semigroups: minimal generators, conductor, genus, gaps.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use crate::error::{Error, Result};
use crate::Int;

/// Largest generator accepted at construction.
pub const MAX_GENERATOR: Int = 1 << 31;

/// Upper bound on the multiplicity and on the conductor. Both size tables
/// that are built eagerly.
pub const MAX_TABLE_SIZE: Int = 50_000_000;

/// A numerical semigroup in canonical form.
///
/// Membership below the conductor is answered from a table built at
/// construction; everything at or above the conductor is an element.
#[derive(Clone)]
pub struct NumericalSemigroup {
    generators: Vec<Int>,
    conductor: Int,
    gaps: Vec<Int>,
    small_elements: Vec<Int>,
    // member[i] for 0 <= i < conductor
    member: Vec<bool>,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`, minimalizing the generator set.
    pub fn from_generators(gens: &[Int]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::InvalidInput("empty generator list".into()));
        }
        if let Some(&bad) = gens.iter().find(|&&g| g <= 0 || g > MAX_GENERATOR) {
            return Err(Error::InvalidInput(format!(
                "generator {bad} outside 1..={MAX_GENERATOR}"
            )));
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();

        let d = sorted.iter().fold(0, |acc, &g| gcd(acc, g));
        if d != 1 {
            return Err(Error::NotNumerical {
                gens: sorted,
                gcd: d,
            });
        }

        let multiplicity = sorted[0];
        if multiplicity > MAX_TABLE_SIZE {
            return Err(Error::InvalidInput(format!(
                "multiplicity {multiplicity} exceeds {MAX_TABLE_SIZE}"
            )));
        }
        let apery = apery_set(multiplicity, &sorted[1..]);
        let conductor = apery.iter().max().copied().unwrap_or(0) - multiplicity + 1;
        if conductor > MAX_TABLE_SIZE {
            return Err(Error::InvalidInput(format!(
                "conductor {conductor} exceeds {MAX_TABLE_SIZE}"
            )));
        }

        let member: Vec<bool> = (0..conductor)
            .map(|x| x >= apery[(x % multiplicity) as usize])
            .collect();
        let gaps = (0..conductor).filter(|&x| !member[x as usize]).collect();
        let mut small_elements: Vec<Int> = (0..conductor).filter(|&x| member[x as usize]).collect();
        small_elements.push(conductor);

        let mut s = Self {
            generators: Vec::new(),
            conductor,
            gaps,
            small_elements,
            member,
        };
        s.generators = sorted
            .iter()
            .copied()
            .filter(|&g| !s.is_decomposable(g))
            .collect();
        Ok(s)
    }

    /// `g = x + y` with `x, y` non-zero elements.
    fn is_decomposable(&self, g: Int) -> bool {
        let mut x = self.multiplicity();
        while 2 * x <= g {
            if self.contains(x) && self.contains(g - x) {
                return true;
            }
            x += 1;
        }
        false
    }

    pub fn minimal_generators(&self) -> &[Int] {
        &self.generators
    }

    pub fn multiplicity(&self) -> Int {
        self.generators.first().copied().unwrap_or(1)
    }

    /// Largest minimal generator, `n_e`.
    pub fn largest_generator(&self) -> Int {
        self.generators.last().copied().unwrap_or(1)
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn conductor(&self) -> Int {
        self.conductor
    }

    /// `c - 1`; `-1` for the semigroup of all non-negative integers.
    pub fn frobenius(&self) -> Int {
        self.conductor - 1
    }

    pub fn genus(&self) -> Int {
        self.gaps.len() as Int
    }

    pub fn gaps(&self) -> &[Int] {
        &self.gaps
    }

    /// Elements below the conductor, followed by the conductor itself.
    pub fn small_elements(&self) -> &[Int] {
        &self.small_elements
    }

    /// Smallest base for which the asymptotic Feng-Rao identity holds:
    /// `2c - 1`, or `0` when `S` is all of the non-negative integers.
    pub fn asymptotic_base(&self) -> Int {
        (2 * self.conductor - 1).max(0)
    }

    pub fn contains(&self, n: Int) -> bool {
        if n < 0 {
            false
        } else if n >= self.conductor {
            true
        } else {
            self.member[n as usize]
        }
    }

    /// The `i`-th smallest element, 1-based (`rho(1) == 0`).
    ///
    /// # Panics
    ///
    /// Panics when `i == 0`.
    pub fn rho(&self, i: usize) -> Int {
        assert!(i >= 1, "rho is 1-based");
        let n = self.small_elements.len();
        if i <= n {
            self.small_elements[i - 1]
        } else {
            self.conductor + (i - n) as Int
        }
    }

    /// `S_x`: the elements not larger than `x`, ascending.
    pub fn elements_up_to(&self, x: Int) -> Vec<Int> {
        if x < 0 {
            return Vec::new();
        }
        let below: Vec<Int> = self
            .small_elements
            .iter()
            .copied()
            .take_while(|&e| e <= x && e < self.conductor)
            .collect();
        let mut out = below;
        if x >= self.conductor {
            out.extend(self.conductor..=x);
        }
        out
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for NumericalSemigroup {}

impl std::hash::Hash for NumericalSemigroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.generators.hash(state);
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NumericalSemigroup")
            .field("generators", &self.generators)
            .field("conductor", &self.conductor)
            .field("genus", &self.genus())
            .finish()
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

fn gcd(mut a: Int, mut b: Int) -> Int {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// Least element of `S` in each residue class modulo `multiplicity`,
/// via shortest paths on the residue graph.
fn apery_set(multiplicity: Int, others: &[Int]) -> Vec<Int> {
    let n = multiplicity as usize;
    let mut dist = vec![Int::MAX; n];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0, 0usize)));
    while let Some(Reverse((d, v))) = heap.pop() {
        if d > dist[v] {
            continue;
        }
        for &g in others {
            let w = (v + (g % multiplicity) as usize) % n;
            let nd = d + g;
            if nd < dist[w] {
                dist[w] = nd;
                heap.push(Reverse((nd, w)));
            }
        }
    }
    dist
}
