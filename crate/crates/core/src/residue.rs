//! The part set `A`: all positive integers congruent to one of
//! `r_1 < r_2 < ... < r_l` modulo `m`, residues taken in `[1, m]`.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A union of congruence classes modulo `m`. Immutable after construction;
/// every operation is pure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueClassSet {
    #[serde(rename = "m")]
    modulus: u64,
    #[serde(rename = "r")]
    residues: Vec<u64>,
}

impl ResidueClassSet {
    /// Builds a set from `m` and the residue list, which must be strictly
    /// increasing with every entry in `[1, m]`.
    pub fn new(modulus: u64, residues: Vec<u64>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidModulus);
        }
        if residues.is_empty() {
            return Err(Error::InvalidResidues {
                modulus,
                detail: "residue list is empty".into(),
            });
        }
        for window in residues.windows(2) {
            if window[0] >= window[1] {
                return Err(Error::InvalidResidues {
                    modulus,
                    detail: format!(
                        "entries must be strictly increasing, found {} before {}",
                        window[0], window[1]
                    ),
                });
            }
        }
        for &r in &residues {
            if r == 0 || r > modulus {
                return Err(Error::InvalidResidues {
                    modulus,
                    detail: format!("residue {r} is outside [1, {modulus}]"),
                });
            }
        }
        Ok(Self { modulus, residues })
    }

    /// Parses the JSON descriptor `{"m": M, "r": [r1, r2, ...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: Self = serde_json::from_str(text).map_err(|e| Error::InvalidResidues {
            modulus: 0,
            detail: format!("bad JSON descriptor: {e}"),
        })?;
        Self::new(raw.modulus, raw.residues)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    /// Number of congruence classes, `l`.
    pub fn class_count(&self) -> u64 {
        self.residues.len() as u64
    }

    /// Smallest element of `A` (the smallest residue).
    pub fn min_element(&self) -> u64 {
        self.residues[0]
    }

    /// Compact descriptor used in reports, e.g. `m=5 r=2,3`.
    pub fn describe(&self) -> String {
        let rs: Vec<String> = self.residues.iter().map(|r| r.to_string()).collect();
        format!("m={} r={}", self.modulus, rs.join(","))
    }

    /// Membership test: `a` is in `A` iff `a mod m`, with representative in
    /// `[1, m]`, is one of the residues. Requires `a >= 1`.
    pub fn contains(&self, a: u64) -> bool {
        assert!(a >= 1, "membership is defined for positive integers only");
        let mut rep = a % self.modulus;
        if rep == 0 {
            rep = self.modulus;
        }
        self.residues.binary_search(&rep).is_ok()
    }

    /// All elements of `A` up to `limit` inclusive, ascending.
    pub fn elements_up_to(&self, limit: u64) -> Vec<u64> {
        let mut out = Vec::new();
        for &r in &self.residues {
            let mut a = r;
            while a <= limit {
                out.push(a);
                a += self.modulus;
            }
        }
        out.sort_unstable();
        out
    }

    /// gcd of all elements of `A`, which equals `gcd(r_1, ..., r_l, m)`.
    pub fn set_gcd(&self) -> u64 {
        let mut g = self.modulus;
        for &r in &self.residues {
            g = gcd(g, r);
        }
        g
    }

    /// Whether `gcd(r_1, ..., r_l, m) = 1`; exactly the sets for which
    /// `p_A(n) >= 1` for all sufficiently large `n`.
    pub fn gcd_condition(&self) -> bool {
        self.set_gcd() == 1
    }

    /// The smallest `N0 >= 0` such that every `n >= N0` has at least one
    /// partition into parts from `A` (with the empty partition of 0).
    ///
    /// The scan bound is the square of the largest element in the shortest
    /// ascending prefix of `A` whose gcd is 1: by Schur's bound the
    /// Frobenius number of that coprime prefix is below its largest
    /// element squared, so the last gap of `A` is inside the scanned range.
    pub fn representability_threshold(&self) -> Result<u64> {
        let g = self.set_gcd();
        if g != 1 {
            return Err(Error::GcdConditionViolated { gcd: g });
        }

        let mut prefix_gcd = 0u64;
        let mut s_max = 0u64;
        'outer: for block in 1u64.. {
            for a in self.elements_up_to(block * self.modulus) {
                if a <= s_max {
                    continue;
                }
                prefix_gcd = gcd(prefix_gcd, a);
                s_max = a;
                if prefix_gcd == 1 {
                    break 'outer;
                }
            }
        }

        let bound = (s_max * s_max) as usize;
        let mut reachable = vec![false; bound + 1];
        reachable[0] = true;
        for a in self.elements_up_to(bound as u64) {
            let a = a as usize;
            for n in a..=bound {
                if reachable[n - a] {
                    reachable[n] = true;
                }
            }
        }
        let last_gap = (0..=bound).rev().find(|&n| !reachable[n]);
        Ok(match last_gap {
            Some(n) => n as u64 + 1,
            None => 0,
        })
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(m: u64, rs: &[u64]) -> ResidueClassSet {
        ResidueClassSet::new(m, rs.to_vec()).unwrap()
    }

    #[test]
    fn construction_rejects_bad_residues() {
        assert!(matches!(
            ResidueClassSet::new(0, vec![1]),
            Err(Error::InvalidModulus)
        ));
        assert!(ResidueClassSet::new(4, vec![]).is_err());
        assert!(ResidueClassSet::new(4, vec![2, 2]).is_err());
        assert!(ResidueClassSet::new(4, vec![3, 1]).is_err());
        assert!(ResidueClassSet::new(4, vec![0, 1]).is_err());
        assert!(ResidueClassSet::new(4, vec![1, 5]).is_err());
        assert!(ResidueClassSet::new(4, vec![1, 4]).is_ok());
    }

    #[test]
    fn membership_uses_representatives_in_one_to_m() {
        assert!(set(2, &[1]).contains(7));
        assert!(!set(3, &[1]).contains(6)); // 6 has representative 3 mod 3
        assert!(set(3, &[3]).contains(6));
        assert!(set(4, &[1, 2]).contains(10));
        assert!(!set(4, &[1, 2]).contains(8));
    }

    #[test]
    #[should_panic(expected = "positive integers")]
    fn membership_rejects_zero() {
        set(2, &[1]).contains(0);
    }

    #[test]
    fn elements_up_to_lists_the_set() {
        assert_eq!(set(4, &[1, 2]).elements_up_to(10), vec![1, 2, 5, 6, 9, 10]);
        assert_eq!(set(2, &[1]).elements_up_to(5), vec![1, 3, 5]);
        assert!(set(2, &[1]).elements_up_to(0).is_empty());
    }

    #[test]
    fn elements_match_membership_filter() {
        for (m, rs) in [(1, vec![1]), (4, vec![1, 2]), (6, vec![2, 3, 5]), (5, vec![5])] {
            let s = set(m, &rs);
            let listed = s.elements_up_to(200);
            let filtered: Vec<u64> = (1..=200).filter(|&a| s.contains(a)).collect();
            assert_eq!(listed, filtered, "mismatch for {}", s.describe());
            let expected_len: u64 = rs
                .iter()
                .filter(|&&r| r <= 200)
                .map(|&r| (200 - r) / m + 1)
                .sum();
            assert_eq!(listed.len() as u64, expected_len);
        }
    }

    #[test]
    fn membership_is_periodic() {
        let s = set(6, &[2, 3]);
        for a in 1..=120 {
            assert_eq!(s.contains(a), s.contains(a + 6));
        }
    }

    #[test]
    fn gcd_condition_examples() {
        assert!(set(2, &[1]).gcd_condition());
        assert!(!set(4, &[2]).gcd_condition());
        assert!(set(6, &[2, 3]).gcd_condition());
        assert_eq!(set(4, &[2]).set_gcd(), 2);
        assert_eq!(set(6, &[2, 4]).set_gcd(), 2);
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(set(1, &[1]).representability_threshold().unwrap(), 0);
        assert_eq!(set(2, &[1]).representability_threshold().unwrap(), 0);
        // Parts {2,3,7,8,...}: n = 1 is the only gap.
        assert_eq!(set(5, &[2, 3]).representability_threshold().unwrap(), 2);
    }

    #[test]
    fn threshold_requires_gcd_condition() {
        let err = set(4, &[2]).representability_threshold().unwrap_err();
        assert!(matches!(err, Error::GcdConditionViolated { gcd: 2 }));
    }

    #[test]
    fn threshold_matches_table_scan() {
        // Independent check against the exact table: p_A(N0 - 1) = 0 when
        // N0 >= 1 and p_A(n) >= 1 for a long run of n >= N0.
        use num_traits::Zero;
        for (m, rs) in [(5, vec![2, 3]), (6, vec![2, 3]), (7, vec![3, 5]), (2, vec![1])] {
            let s = set(m, &rs);
            let n0 = s.representability_threshold().unwrap();
            let table = crate::table::compute_table_euler(&s, n0 + 400);
            if n0 >= 1 {
                assert!(table.value(n0 - 1).is_zero(), "{}: gap before N0", s.describe());
            }
            for n in n0..=n0 + 400 {
                assert!(!table.value(n).is_zero(), "{}: zero at n={n} >= N0={n0}", s.describe());
            }
        }
    }

    #[test]
    fn json_descriptor_round_trip() {
        let s = ResidueClassSet::from_json(r#"{"m": 5, "r": [2, 3]}"#).unwrap();
        assert_eq!(s.modulus(), 5);
        assert_eq!(s.residues(), &[2, 3]);
        assert!(ResidueClassSet::from_json(r#"{"m": 5, "r": [3, 2]}"#).is_err());
    }
}
