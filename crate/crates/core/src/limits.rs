//! Resource caps for the exponential algorithms, plus the worker count.

use crate::error::{Cap, Error, Result};

/// Environment variables read by [`Limits::from_env`].
pub const ENV_SUBSET_CAP: &str = "CHROMSYM_SUBSET_CAP";
pub const ENV_LATTICE_CAP: &str = "CHROMSYM_LATTICE_CAP";
pub const ENV_ORACLE_BUDGET: &str = "CHROMSYM_ORACLE_BUDGET";
pub const ENV_WORKERS: &str = "CHROMSYM_WORKERS";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum `|E|` for the edge-subset expansion (2^|E| subsets).
    pub subset_edges: usize,
    /// Maximum vertex count for contraction lattices.
    pub lattice_vertices: usize,
    /// Maximum `k^n` for the coloring oracle.
    pub oracle_budget: u128,
    /// Worker threads for subset enumeration and matrix rows; `None` uses
    /// the global rayon pool.
    pub workers: Option<usize>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            subset_edges: 24,
            lattice_vertices: 10,
            oracle_budget: 100_000_000,
            workers: None,
        }
    }
}

impl Limits {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = Some(workers);
        self
    }

    /// Defaults overridden by any of the `CHROMSYM_*` variables that are set.
    /// Unparsable or zero values are rejected.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Some(v) = read_env(ENV_SUBSET_CAP)? {
            limits.subset_edges = v as usize;
        }
        if let Some(v) = read_env(ENV_LATTICE_CAP)? {
            limits.lattice_vertices = v as usize;
        }
        if let Some(v) = read_env(ENV_ORACLE_BUDGET)? {
            limits.oracle_budget = v;
        }
        if let Some(v) = read_env(ENV_WORKERS)? {
            limits.workers = Some(v as usize);
        }
        Ok(limits)
    }

    pub(crate) fn check(cap: Cap, requested: u128, limit: u128) -> Result<()> {
        if requested > limit {
            Err(Error::CapExceeded { cap, requested, limit })
        } else {
            Ok(())
        }
    }

    /// Runs `op` on a pool with the configured worker count.
    pub(crate) fn install<R: Send>(&self, op: impl FnOnce() -> R + Send) -> R {
        match self.workers {
            None => op(),
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .expect("thread pool")
                .install(op),
        }
    }
}

fn read_env(name: &str) -> Result<Option<u128>> {
    match std::env::var(name) {
        Err(_) => Ok(None),
        Ok(raw) => match raw.trim().parse::<u128>() {
            Ok(v) if v > 0 => Ok(Some(v)),
            _ => Err(Error::Parse(format!("{name}={raw:?} must be a positive integer"))),
        },
    }
}
