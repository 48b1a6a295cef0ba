//! Exact tables of `p_A(0..N)` as arbitrary-precision integers, computed by
//! two independent algorithms:
//!
//! - [`compute_table_euler`]: the generating-product accumulation, one
//!   in-place prefix pass per part
//! - [`compute_table_recursion`]: induction on `n` through the identity
//!   `n*p_A(n) = sum_{j<=n} sigma_A(j) * p_A(n-j)` with `sigma_A(j)` the sum
//!   of divisors of `j` lying in `A`; the division by `n` must be exact,
//!   which doubles as a built-in self-check
//!
//! plus a small exhaustive-enumeration oracle and the distinct-parts table
//! used for the classical odd-parts identity.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::residue::ResidueClassSet;
use crate::{Error, Result};

/// Hard cap for [`brute_force_count`]; enumeration above this is pointless.
pub const BRUTE_FORCE_MAX: u64 = 60;

/// Exact values `p_A(0..=limit)`. `values[0] = 1` by convention; an interior
/// zero means that `n` has no representation as a sum of elements of `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionTable {
    set: ResidueClassSet,
    values: Vec<BigUint>,
}

impl PartitionTable {
    pub fn set(&self) -> &ResidueClassSet {
        &self.set
    }

    /// Largest tabulated index `N`.
    pub fn limit(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    pub fn value(&self, n: u64) -> &BigUint {
        &self.values[n as usize]
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    /// `log p_A(n)`, or `None` when `p_A(n) = 0`.
    pub fn log_value(&self, n: u64) -> Option<f64> {
        let v = self.value(n);
        if v.is_zero() {
            None
        } else {
            Some(log_value(v))
        }
    }

    /// Exhaustively re-checks `n*p_A(n) = sum_j sigma_A(j)*p_A(n-j)` at every
    /// index. Quadratic; meant for verification runs, not construction.
    pub fn recursion_identity_holds(&self) -> bool {
        let sigma = sigma_table(&self.set, self.limit());
        for n in 1..=self.limit() as usize {
            let mut rhs = BigUint::zero();
            for j in 1..=n {
                rhs += &self.values[n - j] * sigma[j];
            }
            if rhs != &self.values[n] * n as u64 {
                return false;
            }
        }
        true
    }
}

/// Builds the table by the generating-product pass: starting from the
/// indicator of `n = 0`, each part `a` folds in `values[n] += values[n-a]`
/// for `n = a..=limit`, ascending.
pub fn compute_table_euler(set: &ResidueClassSet, limit: u64) -> PartitionTable {
    let n = limit as usize;
    let mut values = vec![BigUint::zero(); n + 1];
    values[0] = BigUint::one();
    for a in set.elements_up_to(limit) {
        let a = a as usize;
        for i in a..=n {
            let (lo, hi) = values.split_at_mut(i);
            hi[0] += &lo[i - a];
        }
    }
    PartitionTable {
        set: set.clone(),
        values,
    }
}

/// Builds the table by induction on `n`:
/// `p_A(n) = (sum_{j=1}^{n} sigma_A(j) * p_A(n-j)) / n`.
///
/// The division is exact whenever the implementation is correct, so a
/// nonzero remainder panics rather than producing a silently wrong table.
pub fn compute_table_recursion(set: &ResidueClassSet, limit: u64) -> PartitionTable {
    let sigma = sigma_table(set, limit);
    let mut values = Vec::with_capacity(limit as usize + 1);
    values.push(BigUint::one());
    for n in 1..=limit as usize {
        let mut acc = BigUint::zero();
        for j in 1..=n {
            acc += &values[n - j] * sigma[j];
        }
        let rem = &acc % n as u64;
        assert!(
            rem.is_zero(),
            "recursion identity violated at n = {n}: {acc} is not divisible by {n}"
        );
        values.push(acc / n as u64);
    }
    PartitionTable {
        set: set.clone(),
        values,
    }
}

/// Sum of the divisors of `j` that lie in `A`. Requires `j >= 1`.
pub fn sigma_a(set: &ResidueClassSet, j: u64) -> u64 {
    assert!(j >= 1, "divisor sums are defined for positive integers only");
    let mut total = 0u64;
    let mut d = 1u64;
    while d * d <= j {
        if j % d == 0 {
            if set.contains(d) {
                total += d;
            }
            let other = j / d;
            if other != d && set.contains(other) {
                total += other;
            }
        }
        d += 1;
    }
    Ok(total)
}

/// `sigma_A(j)` for all `j <= limit` by a harmonic sieve over the elements
/// of `A`; index 0 is unused and set to 0.
pub fn sigma_table(set: &ResidueClassSet, limit: u64) -> Vec<u64> {
    let n = limit as usize;
    let mut sigma = vec![0u64; n + 1];
    for a in set.elements_up_to(limit) {
        let a = a as usize;
        for j in (a..=n).step_by(a) {
            sigma[j] += a as u64;
        }
    }
    sigma
}

/// `q(0..=limit)`: partitions into distinct parts, by the bounded-use
/// accumulation (each part `1..=limit` usable at most once).
pub fn distinct_parts_table(limit: u64) -> Vec<BigUint> {
    let n = limit as usize;
    let mut values = vec![BigUint::zero(); n + 1];
    values[0] = BigUint::one();
    for part in 1..=n {
        // Descending so each part is used at most once.
        for i in (part..=n).rev() {
            let (lo, hi) = values.split_at_mut(i);
            hi[0] += &lo[i - part];
        }
    }
    values
}

/// `p_A(n)` by exhaustive enumeration of nonincreasing part sequences.
/// Test oracle only; rejects `n` above [`BRUTE_FORCE_MAX`].
pub fn brute_force_count(set: &ResidueClassSet, n: u64) -> Result<u64> {
    if n > BRUTE_FORCE_MAX {
        return Err(Error::BruteForceLimit {
            n,
            max: BRUTE_FORCE_MAX,
        });
    }
    fn count(set: &ResidueClassSet, remaining: u64, max_part: u64) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut total = 0;
        for a in set.elements_up_to(remaining.min(max_part)) {
            total += count(set, remaining - a, a);
        }
        total
    }
    Ok(count(set, n, n))
}

/// Natural log of a positive big integer with relative error far below
/// `2^-50`: the top 53 bits give the mantissa, the discarded bit count
/// contributes `shift * ln 2`.
pub fn log_value(p: &BigUint) -> f64 {
    assert!(!p.is_zero(), "log of zero is undefined; skip non-representable n");
    let bits = p.bits();
    if bits <= 53 {
        return p.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 53;
    let top = (p >> shift).to_f64().expect("53-bit mantissa fits in f64");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}
