//! Divisor sets, generalized Feng-Rao distances and Feng-Rao numbers of
//! numerical semigroups.
//!
//! The generic route ([`feng_rao_distance`], [`feng_rao_number`]) works for any
//! numerical semigroup by searching amenable configurations, one per shadow.
//! Semigroups generated by an interval `<a, a+1, ..., a+b>` additionally get a
//! closed form ([`interval::interval_feng_rao_number`]). An exhaustive search
//! ([`brute_force_distance`]) serves as the independent oracle for both.
//!
//! ```
//! use fengrao_core::{feng_rao_number, NumericalSemigroup};
//!
//! let s = NumericalSemigroup::from_generators(&[4, 5]).unwrap();
//! assert_eq!(feng_rao_number(&s, 2).unwrap().e_number, 4);
//! ```

pub mod amenable;
pub mod corpus;
pub mod divisors;
pub mod error;
pub mod fengrao;
pub mod interval;
pub mod semigroup;

/// Integer type used for every semigroup element, offset and count.
pub type Int = i64;

pub use amenable::{
    enumerate_amenable, ground, is_amenable, shadow, shadow_representatives, Configuration, Ground,
    Shadow,
};
pub use divisors::{divisors, divisors_above, divisors_of_set, nu, DivisorSet};
pub use error::{Error, Result};
pub use fengrao::{
    brute_force_distance, feng_rao_distance, feng_rao_number, FengRaoResult, Method,
    DEFAULT_BRUTE_FORCE_CAP,
};
pub use interval::{HDecomposition, IntervalSemigroup, WagonPivot};
pub use semigroup::NumericalSemigroup;
