//! Log canonical thresholds, from a single point up to the whole surface.

mod cluster;
mod config;
mod expected;
mod surface;

use serde::Serializer;
use thiserror::Error;

pub use cluster::{
    local_lct, newton_lct_oracle, special_local_lct, Cluster, ClusterError, ClusterItem, LocalBound, Unibranch,
    UnsupportedSingularity,
};
pub use config::{config_lct, Constraint, LctReport, Mode, Witness};
pub(crate) use config::synthesize_points;
pub use expected::{expected_cubic_lct, expected_lct1};
pub use surface::{surface_lct, surface_lct1};

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LctError {
    #[error(transparent)]
    Cluster(#[from] ClusterError),
    #[error("unknown mode {0}; expected default-snc or pessimistic")]
    UnknownMode(String),
    #[error("component {0} has nonnegative self-intersection and no point data; pessimistic mode needs explicit geometry")]
    GeometryRequired(String),
    #[error("smooth surface: no -2-curves, the smooth-surface values apply")]
    Smooth,
    #[error("no anticanonical divisor found")]
    NoDivisor,
    #[error("{sigma} is not a singularity type of degree {degree}")]
    Inadmissible { degree: u32, sigma: String },
    #[error("{0}: degree-2 input needs its refinement marks")]
    MissingRefinement(String),
}

/// Reduced `p/q`, or `p` for integers.
pub fn format_ratio(r: &Rational) -> String {
    r.to_string()
}

pub(crate) fn ratio_str<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_ratio(r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_format() {
        assert_eq!(format_ratio(&Rational::new(2, 8)), "1/4");
        assert_eq!(format_ratio(&Rational::new(3, 3)), "1");
    }
}
