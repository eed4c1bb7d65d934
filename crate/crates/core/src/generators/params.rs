use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn check_probability(name: &str, p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!("{name} = {p} is not in [0, 1]")))
    }
}

/// Node-selection mix of the static generator.
///
/// `e1` is the probability that the source of an edge is drawn uniformly
/// (otherwise by out-degree preference); `e2` the probability that the target
/// is drawn among nodes with in-degree zero (otherwise by in-degree
/// preference).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SdgParams {
    pub e1: f64,
    pub e2: f64,
}

impl SdgParams {
    pub fn new(e1: f64, e2: f64) -> Result<Self> {
        let p = SdgParams { e1, e2 };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        check_probability("e1", self.e1)?;
        check_probability("e2", self.e2)
    }
}

/// Defaults that work without tuning: `e1 = 0.45`, `e2 = N/E - 0.05`
/// clamped to `[0, 1]`.
pub fn sdg_default_params(n_nodes: usize, n_edges: usize) -> SdgParams {
    SdgParams {
        e1: 0.45,
        e2: default_e2(n_nodes, n_edges),
    }
}

fn default_e2(n_nodes: usize, n_edges: usize) -> f64 {
    if n_edges == 0 {
        return 1.0;
    }
    (n_nodes as f64 / n_edges as f64 - 0.05).clamp(0.0, 1.0)
}

/// Parameters of the evolving generator. With probability `alpha` an edge
/// runs from any node into a new node, with probability `beta` from a new
/// node to any node, and otherwise between any two nodes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SedgeParams {
    pub alpha: f64,
    pub beta: f64,
    pub e1: f64,
    pub e2: f64,
}

impl SedgeParams {
    pub fn new(alpha: f64, beta: f64, e1: f64, e2: f64) -> Result<Self> {
        let p = SedgeParams { alpha, beta, e1, e2 };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        check_probability("alpha", self.alpha)?;
        check_probability("beta", self.beta)?;
        check_probability("e1", self.e1)?;
        check_probability("e2", self.e2)?;
        if self.alpha + self.beta > 1.0 + 1e-12 {
            return Err(Error::InvalidParams(format!(
                "alpha + beta = {} exceeds 1",
                self.alpha + self.beta
            )));
        }
        Ok(())
    }

    pub fn node_mix(&self) -> SdgParams {
        SdgParams {
            e1: self.e1,
            e2: self.e2,
        }
    }
}

/// Untuned evolution defaults: `alpha = 0.5`, `beta = 0.4`, `e1 = 0.45`,
/// `e2 = N/E - 0.05` where `N`, `E` are the sizes of the grown graph.
pub fn sedge_default_params(n_nodes: usize, n_edges: usize) -> SedgeParams {
    SedgeParams {
        alpha: 0.5,
        beta: 0.4,
        e1: 0.45,
        e2: default_e2(n_nodes, n_edges),
    }
}

/// Directed scale-free growth model.
///
/// Each step, with probability `alpha` a new node gets an edge to an existing
/// node chosen by in-degree + `delta_in`; with probability `beta` an edge is
/// added between existing nodes (source by out-degree + `delta_out`, target by
/// in-degree + `delta_in`); with probability `gamma` a new node gets an edge
/// from an existing node chosen by out-degree + `delta_out`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BollobasParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta_in: f64,
    pub delta_out: f64,
}

impl BollobasParams {
    pub fn new(alpha: f64, beta: f64, gamma: f64, delta_in: f64, delta_out: f64) -> Result<Self> {
        let p = BollobasParams {
            alpha,
            beta,
            gamma,
            delta_in,
            delta_out,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        check_probability("alpha", self.alpha)?;
        check_probability("beta", self.beta)?;
        check_probability("gamma", self.gamma)?;
        let sum = self.alpha + self.beta + self.gamma;
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidParams(format!(
                "alpha + beta + gamma = {sum}, expected 1"
            )));
        }
        if !(self.delta_in >= 0.0 && self.delta_out >= 0.0) {
            return Err(Error::InvalidParams(format!(
                "offsets must be nonnegative (delta_in = {}, delta_out = {})",
                self.delta_in, self.delta_out
            )));
        }
        Ok(())
    }
}
