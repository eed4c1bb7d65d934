//! Random digraph generators.
//!
//! All generators take an explicit [`RandomStream`](crate::rng::RandomStream);
//! the same inputs and seed always give the same graph. Proposals that would
//! create a self-loop or a parallel edge are rejected and redrawn, with a
//! pooled allowance of 100 rejections per requested edge before the run
//! fails with [`Error::ResamplingCap`](crate::Error::ResamplingCap).

mod bollobas;
mod params;
mod sampling;
mod sdg;

pub use bollobas::{bollobas_generate, bollobas_grow};
pub use params::{sdg_default_params, sedge_default_params, BollobasParams, SdgParams, SedgeParams};
pub use sampling::{sample_node, SampleMode};
pub use sdg::{sdg, sedge};
