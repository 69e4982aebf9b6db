//! Run configuration and grid validation.

use std::collections::BTreeSet;

use curvesym_core::CurveParams;
use thiserror::Error;

use crate::report::Format;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, clap::ValueEnum)]
pub enum Suite {
    Identities,
    SymbolicOracle,
    Rho,
    AlphaGamma,
    Hh,
    Chudnovsky,
    Regularity,
    Section5,
    Bh,
    All,
}

impl Suite {
    /// Every concrete suite, in execution order.
    pub const CONCRETE: [Suite; 9] = [
        Suite::Identities,
        Suite::SymbolicOracle,
        Suite::Rho,
        Suite::AlphaGamma,
        Suite::Hh,
        Suite::Chudnovsky,
        Suite::Regularity,
        Suite::Section5,
        Suite::Bh,
    ];
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConfigError {
    #[error("the parameter grid is empty (give at least one value for --q and --m)")]
    EmptyGrid,
    #[error("no (q, m) pair in the grid satisfies gcd(2q+1, m) = 1")]
    NoValidPairs,
    #[error("--n-max must be at least 2 (got {0})")]
    NMaxTooSmall(u32),
    #[error("no suites selected")]
    NoSuites,
    #[error("--rho-cap must be positive")]
    ZeroRhoCap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub q_list: Vec<u32>,
    pub m_list: Vec<u32>,
    pub n_max: u32,
    pub suites: BTreeSet<Suite>,
    pub format: Format,
    /// Enables the saturation cross-check when `all` is selected.
    pub oracle: bool,
    pub rho_cap: u32,
}

/// A `(q, m)` pair rejected by the standing coprimality hypothesis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvalidPair {
    pub q: u32,
    pub m: u32,
    pub reason: String,
}

impl RunConfig {
    pub fn new(q_list: Vec<u32>, m_list: Vec<u32>) -> Self {
        RunConfig {
            q_list,
            m_list,
            n_max: 6,
            suites: [Suite::All].into(),
            format: Format::Json,
            oracle: false,
            rho_cap: 64,
        }
    }

    /// Concrete suites to run. `all` expands to everything, with the
    /// saturation cross-check only in oracle mode; naming
    /// `symbolic-oracle` explicitly always runs it.
    pub fn selected_suites(&self) -> Vec<Suite> {
        let all = self.suites.contains(&Suite::All);
        Suite::CONCRETE
            .into_iter()
            .filter(|s| {
                if *s == Suite::SymbolicOracle {
                    self.suites.contains(s) || (all && self.oracle)
                } else {
                    all || self.suites.contains(s)
                }
            })
            .collect()
    }

    /// Valid pairs in lexicographic order, plus the rejected ones.
    pub fn grid(&self) -> (Vec<CurveParams>, Vec<InvalidPair>) {
        let mut valid = BTreeSet::new();
        let mut invalid = Vec::new();
        let qs: BTreeSet<u32> = self.q_list.iter().copied().collect();
        let ms: BTreeSet<u32> = self.m_list.iter().copied().collect();
        for &q in &qs {
            for &m in &ms {
                match CurveParams::new(q, m) {
                    Ok(p) => {
                        valid.insert(p);
                    }
                    Err(e) => invalid.push(InvalidPair {
                        q,
                        m,
                        reason: e.to_string(),
                    }),
                }
            }
        }
        (valid.into_iter().collect(), invalid)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.q_list.is_empty() || self.m_list.is_empty() {
            return Err(ConfigError::EmptyGrid);
        }
        if self.n_max < 2 {
            return Err(ConfigError::NMaxTooSmall(self.n_max));
        }
        if self.rho_cap == 0 {
            return Err(ConfigError::ZeroRhoCap);
        }
        if self.selected_suites().is_empty() {
            return Err(ConfigError::NoSuites);
        }
        if self.grid().0.is_empty() {
            return Err(ConfigError::NoValidPairs);
        }
        Ok(())
    }
}
