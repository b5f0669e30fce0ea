//! Semigroups generated by an interval, `S = <a, a+1, ..., a+b>` with `0 < b < a`.
//!
//! Membership, divisor counts of shadows and the Feng-Rao numbers all have
//! closed forms here. Most of them reduce to sums of the shape
//! `Σ_{j=1..x} ⌈(y - j)/b⌉`, see [`ceil_sum`].
//!
//! Throughout, `m >= 2c - 1` and the ground is `[m, m + a + b)`.

use crate::amenable::{is_amenable, Configuration};
use crate::divisors::{divisors_above, DivisorSet};
use crate::error::{Error, Result};
use crate::fengrao::{self, FengRaoResult, Method};
use crate::semigroup::{NumericalSemigroup, MAX_GENERATOR};
use crate::Int;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalSemigroup {
    a: Int,
    b: Int,
    semigroup: NumericalSemigroup,
}

fn check_params(a: Int, b: Int) -> Result<()> {
    if !(0 < b && b < a) {
        return Err(Error::InvalidParams(format!(
            "need 0 < b < a, got a = {a}, b = {b}"
        )));
    }
    if a + b > MAX_GENERATOR {
        return Err(Error::InvalidParams(format!(
            "a + b = {} is too large",
            a + b
        )));
    }
    Ok(())
}

impl IntervalSemigroup {
    pub fn new(a: Int, b: Int) -> Result<Self> {
        check_params(a, b)?;
        let gens: Vec<Int> = (a..=a + b).collect();
        let semigroup = NumericalSemigroup::from_generators(&gens)?;
        debug_assert_eq!(semigroup.minimal_generators(), gens.as_slice());
        Ok(Self { a, b, semigroup })
    }

    /// `Some` when the minimal generators of `s` are consecutive integers
    /// (and there are at least two of them).
    pub fn detect(s: &NumericalSemigroup) -> Option<Self> {
        let gens = s.minimal_generators();
        if gens.len() < 2 || !gens.windows(2).all(|w| w[1] == w[0] + 1) {
            return None;
        }
        Some(Self {
            a: gens[0],
            b: gens.len() as Int - 1,
            semigroup: s.clone(),
        })
    }

    pub fn a(&self) -> Int {
        self.a
    }

    pub fn b(&self) -> Int {
        self.b
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn asymptotic_base(&self) -> Int {
        self.semigroup.asymptotic_base()
    }

    fn check_base(&self, m: Int) -> Result<()> {
        let min = 2 * self.semigroup.conductor() - 1;
        if m < min {
            return Err(Error::BaseTooSmall { m, min });
        }
        Ok(())
    }

    /// `E(S, r)` from the closed form, packaged like the generic result.
    pub fn feng_rao_number(&self, r: usize) -> Result<FengRaoResult> {
        let e = interval_feng_rao_number(self.a, self.b, r as Int)?;
        let m = self.asymptotic_base();
        let g = self.semigroup.genus();
        let delta = m + 1 - 2 * g + e;
        Ok(fengrao::result(
            &self.semigroup,
            m,
            r,
            delta,
            Method::IntervalFormula,
            None,
        ))
    }

    /// `#D(m, m+i_1, ..., m+i_t)` for an amenable shadow given by its offsets
    /// `0 = i_0 < i_1 < ... < i_t < a + b`, without enumerating divisors.
    pub fn shadow_divisor_count(&self, m: Int, offsets: &[Int]) -> Result<Int> {
        self.check_base(m)?;
        let (a, b) = (self.a, self.b);
        if offsets.first() != Some(&0) {
            return Err(Error::InvalidParams("offsets must start at 0".into()));
        }
        if !offsets.windows(2).all(|w| w[0] < w[1]) || *offsets.last().unwrap() >= a + b {
            return Err(Error::InvalidParams(format!(
                "offsets {offsets:?} must be strictly increasing and below a + b = {}",
                a + b
            )));
        }
        let amenable = offsets
            .iter()
            .all(|&i| (a..=a + b).all(|n| i - n < 0 || offsets.binary_search(&(i - n)).is_ok()));
        if !amenable {
            return Err(Error::NotAmenable(offsets.iter().map(|&i| m + i).collect()));
        }
        let base = m + 1 - 2 * interval_genus(a, b);
        let last = *offsets.last().unwrap();
        if last == 0 {
            return Ok(base);
        }
        let gains = ceil_sum(last, a + b, b)?;
        let mut losses = 0;
        for w in offsets.windows(2) {
            let d = w[1] - w[0];
            losses += ceil_sum(d, d, b)?;
        }
        Ok(base + gains - losses)
    }

    /// `D(m, m + qa + j) ∖ D(m)` as the union of two explicit families.
    pub fn extra_divisors(&self, m: Int, q: Int, j: Int) -> Result<DivisorSet> {
        self.check_base(m)?;
        let (a, b) = (self.a, self.b);
        if q < 0 || !(0..a).contains(&j) {
            return Err(Error::InvalidParams(format!(
                "need q >= 0 and 0 <= j < a, got q = {q}, j = {j}"
            )));
        }
        let mut out = Vec::new();
        for r in 0..a {
            // k ranges over [lo, r/b)
            let lo = if r < a - j {
                ceil_div(r + j - q * b, b)
            } else {
                ceil_div(r + j - (a + b) - q * b, b)
            };
            let hi = ceil_div(r, b) - 1;
            out.extend((lo..=hi).map(|k| m - (k * a + r)));
        }
        out.sort_unstable();
        Ok(DivisorSet::from_sorted(out, vec![m, m + q * a + j]))
    }

    /// The explicit ordered `(S, m, r)`-amenable set: the divisors of
    /// `m + (h-1)(a+b)` above `m`, `k` further columns of height `h`, and the
    /// lowest `j` elements of the next column.
    pub fn ordered_amenable_set(&self, m: Int, r: usize) -> Result<Configuration> {
        self.check_base(m)?;
        let (a, b) = (self.a, self.b);
        let HDecomposition { h, k, j, .. } = h_decompose(r as Int, b)?;
        let last_col = b * (h - 1) + k + 1;
        if last_col >= a + b - 1 {
            return Err(Error::NoOrderedAmenable { a, b, r: r as Int });
        }
        let top = m + (h - 1) * (a + b);
        let mut elems = divisors_above(&self.semigroup, top, m)?.into_elements();
        for v in (h - 1) * b + 1..=(h - 1) * b + k {
            elems.extend((0..h).map(|u| m + u * a + v));
        }
        elems.extend((0..j).map(|u| m + u * a + last_col));
        elems.sort_unstable();
        elems.dedup();
        debug_assert_eq!(elems.len(), r);
        Configuration::with_base(&self.semigroup, m, elems)
    }

    /// Same set as [`Self::ordered_amenable_set`], reached by removing pivots
    /// one at a time from `D(m + h(a+b)) ∩ [m, ∞)`.
    ///
    /// Needs `hb < a` as well, so that the starting set is itself ordered with
    /// `1 + h + b·h(h+1)/2` elements.
    pub fn ordered_amenable_by_pivot_removal(&self, m: Int, r: usize) -> Result<Configuration> {
        self.check_base(m)?;
        let (a, b) = (self.a, self.b);
        let HDecomposition { h, k, .. } = h_decompose(r as Int, b)?;
        if b * (h - 1) + k + 1 >= a + b - 1 || h * b >= a {
            return Err(Error::NoOrderedAmenable { a, b, r: r as Int });
        }
        let top = m + h * (a + b);
        let elems = divisors_above(&self.semigroup, top, m)?.into_elements();
        let mut config = Configuration::with_base(&self.semigroup, m, elems)?;
        while config.len() > r {
            let pivot = wagon_pivot(a, b, &config)?.pivot;
            config = config.without(pivot);
        }
        Ok(config)
    }

    /// Amenable, with shadow `{m, ..., m+t}` for some `t < a + b - 1`, and
    /// `P + a` (`P` the pivot) is the only element whose addition keeps the
    /// set amenable without enlarging the shadow.
    pub fn is_ordered_amenable(&self, config: &Configuration) -> bool {
        let (a, b) = (self.a, self.b);
        let m = config.base();
        let Some(max) = config.max() else {
            return false;
        };
        if !is_amenable(&self.semigroup, config) {
            return false;
        }
        let ground_end = m + a + b;
        let in_ground = config
            .elements()
            .iter()
            .take_while(|&&x| x < ground_end)
            .count() as Int;
        let is_interval = config.elements()[..in_ground as usize]
            .iter()
            .enumerate()
            .all(|(i, &x)| x == m + i as Int);
        if !is_interval || in_ground > a + b - 1 {
            return false;
        }
        let Ok(WagonPivot { pivot, .. }) = wagon_pivot(a, b, config) else {
            return false;
        };
        // an addition z needs z - n in M or below m for every generator n
        (ground_end..=max + a + b)
            .filter(|&z| !config.contains(z))
            .filter(|&z| (a..=a + b).all(|n| z - n < m || config.contains(z - n)))
            .all(|z| z == pivot + a)
    }
}

/// `(h, k, j)` with `r = h + b·h(h-1)/2 + k·h + j`, `-1 <= k <= b-1`, `0 < j <= h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HDecomposition {
    pub r: Int,
    pub h: Int,
    pub k: Int,
    pub j: Int,
}

/// Rightmost occupied column of a configuration and its distinguished element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WagonPivot {
    /// `j0`: the largest residue of `x - (m + b)` modulo `a` over the configuration.
    pub column: Int,
    pub wagon: Vec<Int>,
    pub pivot: Int,
}

/// Ceiling of `p / q` for `q > 0`, exact for negative numerators.
pub fn ceil_div(p: Int, q: Int) -> Int {
    debug_assert!(q > 0);
    -(-p).div_euclid(q)
}

/// `n ∈ <a, ..., a+b>`: writing `n = ka + r` with `0 <= r < a`, iff `r <= kb`.
pub fn interval_contains(a: Int, b: Int, n: Int) -> Result<bool> {
    check_params(a, b)?;
    if n < 0 {
        return Ok(false);
    }
    Ok(n % a <= (n / a) * b)
}

/// Genus of `<a, ..., a+b>`: residue `r` has `⌈r/b⌉` gaps.
pub fn interval_genus(a: Int, b: Int) -> Int {
    (1..a).map(|r| ceil_div(r, b)).sum()
}

/// `Σ_{j=1..x} ⌈(y - j)/b⌉` in closed form.
pub fn ceil_sum(x: Int, y: Int, b: Int) -> Result<Int> {
    if x < 1 || y < 1 || b < 1 {
        return Err(Error::InvalidParams(format!(
            "ceil_sum needs positive arguments, got x = {x}, y = {y}, b = {b}"
        )));
    }
    let (c, r) = (y.div_euclid(b), y.rem_euclid(b));
    let k = (x - r).div_euclid(b);
    let tri = b * k * (k + 1) / 2;
    Ok(if r != 0 {
        x * (c - k) + (k + 1) * (r - 1) + tri
    } else {
        (x + 1) * (c - k) + tri - c
    })
}

/// Splits `r` as `h + b·h(h-1)/2 + k·h + j`.
pub fn h_decompose(r: Int, b: Int) -> Result<HDecomposition> {
    if r < 1 || b < 1 {
        return Err(Error::InvalidParams(format!(
            "need r >= 1 and b >= 1, got r = {r}, b = {b}"
        )));
    }
    let start = |q: Int| q + b * q * (q - 1) / 2;
    let mut h = 1;
    while start(h + 1) <= r {
        h += 1;
    }
    let s = r - start(h);
    let (k, j) = if s == 0 {
        (-1, h)
    } else {
        ((s - 1) / h, s - (s - 1) / h * h)
    };
    Ok(HDecomposition { r, h, k, j })
}

/// `Σ_{i=1..n} ⌈(a - i)/b⌉`, zero for `n = 0`.
fn column_sum(a: Int, b: Int, n: Int) -> Result<Int> {
    if n == 0 {
        Ok(0)
    } else {
        ceil_sum(n, a, b)
    }
}

/// Closed form for `E(r, <a, ..., a+b>)`.
pub fn interval_feng_rao_number(a: Int, b: Int, r: Int) -> Result<Int> {
    check_params(a, b)?;
    let HDecomposition { h, k, .. } = h_decompose(r, b)?;
    let cols = b * (h - 1) + k + 1;
    let sum = if cols + 1 < a + b {
        column_sum(a, b, cols)?
    } else {
        column_sum(a, b, a + b - 1)?
    };
    Ok(r - 1 + sum)
}

/// First `r` whose ordered shadow `{m, ..., m + b(h-1)+k+1}` covers `[m, m+a)`.
/// From there on the column sum has reached the genus.
pub fn ground_fill_threshold(a: Int, b: Int) -> Result<Int> {
    check_params(a, b)?;
    let mut r = 1;
    loop {
        let HDecomposition { h, k, .. } = h_decompose(r, b)?;
        if b * (h - 1) + k + 2 >= a {
            return Ok(r);
        }
        r += 1;
    }
}

/// Whether `E(r, S) = ρ_r` is predicted: `r ∈ {bσ(p)+1, ..., bσ(p)+p+1}` for
/// some `p >= 0` with `σ(p) = p(p+1)/2`, or `r` at or past
/// [`ground_fill_threshold`].
pub fn rho_equality_predicted(a: Int, b: Int, r: Int) -> Result<bool> {
    let r0 = ground_fill_threshold(a, b)?;
    if r >= r0 {
        return Ok(true);
    }
    let mut p = 0;
    loop {
        let lo = b * p * (p + 1) / 2 + 1;
        if lo > r {
            return Ok(false);
        }
        if r <= lo + p {
            return Ok(true);
        }
        p += 1;
    }
}

/// Wagon and pivot of a non-empty configuration based at `m`.
///
/// Columns are residues of `x - (m + b)` modulo `a`, taken over the elements
/// `>= m + b`. When there are none, the pivot is the maximum.
pub fn wagon_pivot(a: Int, b: Int, config: &Configuration) -> Result<WagonPivot> {
    let Some(max) = config.max() else {
        return Err(Error::InvalidInput(
            "wagon of an empty configuration".into(),
        ));
    };
    let m = config.base();
    let col = |x: Int| (x - (m + b)).rem_euclid(a);
    // columns are read from m + b onwards; below that only the maximum matters
    let start = config.elements().partition_point(|&x| x < m + b);
    let upper = if max < m + b {
        config.elements()
    } else {
        &config.elements()[start..]
    };
    let column = upper.iter().map(|&x| col(x)).max().unwrap();
    let wagon: Vec<Int> = upper
        .iter()
        .copied()
        .filter(|&x| col(x) == column)
        .collect();
    let pivot = *wagon.last().unwrap();
    Ok(WagonPivot {
        column,
        wagon,
        pivot,
    })
}
