use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::SdgParams;

/// Closed-form degree laws of the static generator.
///
/// With `c1 = 1 - e1` and `c2 = 1 - e2`, the in-degree tail decays as
/// `k^-(1 + c2)/c2` and the out-degree tail as
/// `(k + ((1 - c1)/c1) E/N)^-(1 + c1)/c1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TheoreticalExponents {
    pub in_exponent: f64,
    pub out_exponent: f64,
    pub out_offset: f64,
}

pub fn theoretical_exponents(params: SdgParams, n_nodes: usize, n_edges: usize) -> Result<TheoreticalExponents> {
    params.validate()?;
    if params.e1 >= 1.0 || params.e2 >= 1.0 {
        return Err(Error::InvalidParams(format!(
            "exponents need e1 < 1 and e2 < 1 (got e1 = {}, e2 = {})",
            params.e1, params.e2
        )));
    }
    if n_nodes == 0 {
        return Err(Error::InvalidParams("n_nodes must be positive".into()));
    }
    let c1 = 1.0 - params.e1;
    let c2 = 1.0 - params.e2;
    Ok(TheoreticalExponents {
        in_exponent: (1.0 + c2) / c2,
        out_exponent: (1.0 + c1) / c1,
        out_offset: (1.0 - c1) / c1 * (n_edges as f64 / n_nodes as f64),
    })
}
