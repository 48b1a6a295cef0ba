//! Exact computation of restricted partition functions `p_A(n)` where the
//! part set `A` is a union of congruence classes modulo `m`, together with
//! the asymptotic constants governing `log p_A(n)` and numeric checks for
//! the exponential-sum estimates behind them.
//!
//! - [`residue`]: the part set `A` (modulus, residue classes, gcd condition,
//!   representability threshold)
//! - [`table`]: exact big-integer tables of `p_A(0..N)` by two independent
//!   algorithms, plus small enumeration oracles
//! - [`asymptotics`]: the constants `c0 = pi*sqrt(2l/3m)` and
//!   `c1 = sqrt(1+theta)*c0`, envelope fits, and log-ratio grids
//! - [`lemmas`]: truncated evaluation of the exponential sums and the
//!   inequalities used by the induction arguments
//! - [`verify`]: the aggregated property suite behind `partitions verify`

pub mod asymptotics;
pub mod lemmas;
pub mod residue;
pub mod table;
pub mod verify;

pub use asymptotics::AsymptoticConstants;
pub use residue::ResidueClassSet;
pub use table::PartitionTable;

/// Errors for set construction and the precondition checks of the numeric
/// operations. Contract violations that can only come from a coding bug
/// (not from data) panic instead.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("modulus must be at least 1")]
    InvalidModulus,
    #[error("residues must be strictly increasing and lie in [1, {modulus}]: {detail}")]
    InvalidResidues { modulus: u64, detail: String },
    #[error("gcd(r_1, ..., r_l, m) = {gcd} != 1, so p_A(n) vanishes on infinitely many n")]
    GcdConditionViolated { gcd: u64 },
    #[error("exhaustive enumeration is limited to n <= {max}, got n = {n}")]
    BruteForceLimit { n: u64, max: u64 },
    #[error("k_max = {k_max} is below the truncation requirement {required} for this (n, c1)")]
    TruncationTooShort { k_max: u64, required: u64 },
    #[error("n = {n} is below 2*N0 = {min}")]
    BelowTailRange { n: u64, min: u64 },
    #[error("epsilon must lie in (0, 1/2), got {0}")]
    EpsilonRange(f64),
    #[error("theta must be greater than -1, got {0}")]
    ThetaRange(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
