//! A fixed collection of small numerical semigroups used for cross-checks.

use crate::semigroup::NumericalSemigroup;
use crate::Int;

/// Generator lists, multiplicity at most 13, ordered by multiplicity.
pub const GENERATORS: &[&[Int]] = &[
    &[1],
    &[2, 3],
    &[2, 7],
    &[3, 4],
    &[3, 5],
    &[3, 4, 5],
    &[3, 7, 11],
    &[4, 5],
    &[4, 6, 9],
    &[4, 7],
    &[4, 5, 6],
    &[5, 6, 7],
    &[5, 7, 9],
    &[5, 8],
    &[5, 6, 7, 8, 9],
    &[6, 7, 8],
    &[6, 9, 13],
    &[7, 8, 9, 10],
    &[7, 9, 11],
    &[8, 9],
    &[8, 11, 13],
    &[9, 13, 15],
    &[9, 10, 11, 12, 13],
    &[10, 11],
    &[11, 12, 13],
    &[12, 13, 14, 15],
    &[13, 14, 15],
];

pub fn semigroups() -> Vec<NumericalSemigroup> {
    GENERATORS
        .iter()
        .map(|g| NumericalSemigroup::from_generators(g).expect("corpus generators are valid"))
        .collect()
}
