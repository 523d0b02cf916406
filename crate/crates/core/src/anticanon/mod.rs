//! Effective anticanonical divisors on negative curves and their dual graphs.

mod adjunction;
mod config;
mod enumerate;
mod classification;
mod graph;
mod propagate;
mod reduce;
mod special;

pub use adjunction::{adjunction_config, AdjunctionError};
pub use config::{ComponentView, ConfigError, DivisorConfig, Extra, MAX_COEFFICIENT};
pub use enumerate::{brute_force_anticanonical, enumerate_anticanonical};
pub use graph::{dual_graph, graph_canonical, graph_iso, CanonicalGraph, DualGraph, Edge, Vertex};
pub use propagate::{
    builtin_tables, degree_one_seeds, excluded_graph, p1_step, p2_step, propagate_tables, table_rows,
    PropagationError, PropagationTables, Stratum, TableRow,
};
pub use reduce::{reduce_to_negative_support, reduce_with_steps, ReduceError, ReductionStep};
pub use special::{special_configs, SpecialShape};
