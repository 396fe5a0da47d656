//! Model parameters for the replicated-store network.
//!
//! A system is described by the number of servers `N`, the per-server
//! duplication bandwidth `lambda`, the server failure rate `mu`, the maximum
//! number of copies per file `d_max`, the law of the initial load and the
//! simulation horizon.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Law of the initial number of files per server (or of the total).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum InitialLoad {
    /// A fixed total number of files; each is placed on a uniform random
    /// subset of `d_max` distinct servers.
    FixedTotal(u64),
    /// Each server `i` contributes an i.i.d. number of files `A_i`; each such
    /// file is stored on `i` plus `d_max - 1` distinct uniform other servers.
    PerServerLaw(LoadLaw),
}

/// Per-server i.i.d. load laws (all supported laws have finite second moment).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum LoadLaw {
    Constant(u64),
    Poisson(f64),
}

impl LoadLaw {
    /// Mean of the law (the average load `beta`).
    pub fn mean(&self) -> f64 {
        match self {
            LoadLaw::Constant(b) => *b as f64,
            LoadLaw::Poisson(b) => *b,
        }
    }
}

/// What a duplication does when the chosen target already holds the file.
///
/// `AvoidHolders` draws the target uniformly among servers that do not hold
/// the file, so a copy is always effective. `UniformMerge` draws uniformly
/// among all other servers and silently merges if the target is already a
/// holder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CollisionMode {
    AvoidHolders,
    UniformMerge,
}

impl Default for CollisionMode {
    fn default() -> Self {
        CollisionMode::AvoidHolders
    }
}

/// All constants of one model instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SystemParams {
    /// Number of servers `N`.
    pub n_servers: usize,
    /// Per-server duplication rate (>= 0).
    pub lambda: f64,
    /// Per-server failure rate (> 0).
    pub mu: f64,
    /// Maximum number of copies per file (>= 1).
    pub d_max: usize,
    pub initial_load: InitialLoad,
    /// Simulation horizon (> 0).
    pub horizon: f64,
    pub seed: u64,
    #[serde(default)]
    pub collision_mode: CollisionMode,
    /// Number of intervals of the uniform output grid.
    #[serde(default = "default_output_points")]
    pub output_points: usize,
}

fn default_output_points() -> usize {
    200
}

impl SystemParams {
    pub fn new(
        n_servers: usize,
        lambda: f64,
        mu: f64,
        d_max: usize,
        initial_load: InitialLoad,
        horizon: f64,
        seed: u64,
    ) -> Self {
        SystemParams {
            n_servers,
            lambda,
            mu,
            d_max,
            initial_load,
            horizon,
            seed,
            collision_mode: CollisionMode::default(),
            output_points: default_output_points(),
        }
    }

    /// The ratio `rho = lambda / mu`.
    pub fn rho(&self) -> f64 {
        self.lambda / self.mu
    }

    pub fn validate(&self) -> Result<()> {
        if self.d_max < 1 {
            return Err(Error::invalid("d_max must be >= 1"));
        }
        if self.n_servers < self.d_max {
            return Err(Error::invalid(format!(
                "n_servers ({}) must be >= d_max ({}): initial placement needs d distinct servers",
                self.n_servers, self.d_max
            )));
        }
        if !(self.lambda >= 0.0) {
            return Err(Error::invalid("lambda must be >= 0"));
        }
        if !(self.mu > 0.0) {
            return Err(Error::invalid("mu must be > 0"));
        }
        if !(self.horizon > 0.0) {
            return Err(Error::invalid("horizon must be > 0"));
        }
        if self.output_points == 0 {
            return Err(Error::invalid("output_points must be >= 1"));
        }
        match &self.initial_load {
            InitialLoad::FixedTotal(_) => {}
            InitialLoad::PerServerLaw(LoadLaw::Poisson(b)) => {
                if !(*b >= 0.0) {
                    return Err(Error::invalid("Poisson load parameter must be >= 0"));
                }
            }
            InitialLoad::PerServerLaw(LoadLaw::Constant(_)) => {}
        }
        Ok(())
    }

    /// Uniform output grid `0, h, 2h, ..., horizon` with `output_points`
    /// intervals.
    pub fn output_grid(&self) -> Vec<f64> {
        let n = self.output_points;
        (0..=n)
            .map(|m| self.horizon * m as f64 / n as f64)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base() -> SystemParams {
        SystemParams::new(10, 1.0, 1.0, 2, InitialLoad::FixedTotal(5), 1.0, 42)
    }

    #[test]
    fn accepts_valid_params() {
        assert!(base().validate().is_ok());
    }

    #[test]
    fn rejects_fewer_servers_than_copies() {
        let mut p = base();
        p.n_servers = 1;
        assert!(p.validate().is_err());
    }

    #[test]
    fn rejects_bad_rates() {
        let mut p = base();
        p.lambda = -1.0;
        assert!(p.validate().is_err());
        let mut p = base();
        p.mu = 0.0;
        assert!(p.validate().is_err());
        let mut p = base();
        p.horizon = 0.0;
        assert!(p.validate().is_err());
        let mut p = base();
        p.initial_load = InitialLoad::PerServerLaw(LoadLaw::Poisson(-2.0));
        assert!(p.validate().is_err());
    }

    #[test]
    fn output_grid_spans_horizon() {
        let g = base().output_grid();
        assert_eq!(g.len(), 201);
        assert_eq!(g[0], 0.0);
        assert_eq!(*g.last().unwrap(), 1.0);
    }
}
