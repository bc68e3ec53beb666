//! Exhaustive generation of permutations, signed permutations, derangements
//! and Stirling permutations, with the run/peak/plateau statistics used as
//! brute-force oracles for the recurrence and grammar routes.

mod generate;
mod objects;
mod stats;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use generate::{cardinality, distribution, generate, ObjectStream};
pub use objects::{cycle_canonical, dual_map, CombObject, CycleForm, Permutation, SignedPermutation, StirlingWord};
pub use stats::{alternating_runs, signed_altrun, stat};

/// Default cap on the number of objects a single enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_BUDGET)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("enumerating {class} of size {n} needs {count} objects, budget is {budget}")]
    SizeLimit { class: ObjectClass, n: usize, count: String, budget: u64 },
    #[error("statistic `{stat}` does not apply to {kind}")]
    StatClassMismatch { stat: Statistic, kind: &'static str },
    #[error("`{0}` is not a Stirling permutation")]
    InvalidStirlingWord(String),
    #[error("`{0}` is not a permutation")]
    InvalidPermutation(String),
    #[error("`{0}` is not a signed permutation")]
    InvalidSignedPermutation(String),
    #[error("class {0} requires n >= 1")]
    EmptyClass(ObjectClass),
    #[error("unknown {what} `{name}`")]
    Unknown { what: &'static str, name: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObjectClass {
    Perm,
    Signed,
    SignedHat,
    Derangement,
    Stirling,
    DualStirling,
}

impl ObjectClass {
    pub const ALL: [ObjectClass; 6] = [
        ObjectClass::Perm,
        ObjectClass::Signed,
        ObjectClass::SignedHat,
        ObjectClass::Derangement,
        ObjectClass::Stirling,
        ObjectClass::DualStirling,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ObjectClass::Perm => "perm",
            ObjectClass::Signed => "signed",
            ObjectClass::SignedHat => "signed_hat",
            ObjectClass::Derangement => "derangement",
            ObjectClass::Stirling => "stirling",
            ObjectClass::DualStirling => "dual_stirling",
        }
    }
}

impl fmt::Display for ObjectClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ObjectClass {
    type Err = EnumError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ObjectClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| EnumError::Unknown { what: "class", name: s.to_string() })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistic {
    /// Alternating runs.
    Altrun,
    /// Up-down runs: alternating runs after prepending 0.
    Udrun,
    Des,
    /// Length of the longest alternating subsequence.
    As,
    DesB,
    AltrunB,
    /// Cycle runs, summed over the canonical cycles.
    Crun,
    Cyc,
    Fix,
    Cpk,
    Cdasc,
    Cddes,
    /// Ascent-plateaus.
    Ap,
    /// Left ascent-plateaus.
    La,
    /// Flag ascent-plateaus.
    Fap,
}

impl Statistic {
    pub const ALL: [Statistic; 15] = [
        Statistic::Altrun,
        Statistic::Udrun,
        Statistic::Des,
        Statistic::As,
        Statistic::DesB,
        Statistic::AltrunB,
        Statistic::Crun,
        Statistic::Cyc,
        Statistic::Fix,
        Statistic::Cpk,
        Statistic::Cdasc,
        Statistic::Cddes,
        Statistic::Ap,
        Statistic::La,
        Statistic::Fap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Altrun => "altrun",
            Statistic::Udrun => "udrun",
            Statistic::Des => "des",
            Statistic::As => "as",
            Statistic::DesB => "des_B",
            Statistic::AltrunB => "altrun_B",
            Statistic::Crun => "crun",
            Statistic::Cyc => "cyc",
            Statistic::Fix => "fix",
            Statistic::Cpk => "cpk",
            Statistic::Cdasc => "cdasc",
            Statistic::Cddes => "cddes",
            Statistic::Ap => "ap",
            Statistic::La => "la",
            Statistic::Fap => "fap",
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = EnumError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Statistic::ALL
            .into_iter()
            .find(|st| st.name() == s || st.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| EnumError::Unknown { what: "statistic", name: s.to_string() })
    }
}
