//! Approximate maximum edge 2-coloring.
//!
//! An edge 2-coloring assigns colors to edges so that no vertex sees more
//! than two distinct colors; the goal is to use as many colors as possible.
//! The crate normalizes a graph through color-count preserving rewrites,
//! colors the normalized graph with the matching-based algorithm and lifts
//! the coloring back, then certifies the result against an upper bound.

pub mod coloring;
pub mod graph;
pub mod matching;
pub mod normalize;
pub mod oracle;

pub use coloring::{
    basic_algorithm, check_feasible, extract_character_graph, lift_coloring,
    make_cycle_free, make_pendant_colors_unique, solve, upper_bound, Certificate, CharacterGraph,
    ColoringError, EdgeColoring,
};
pub use graph::{parse_graph, serialize_graph, Graph, GraphError};
pub use matching::{is_perfect, maximum_matching, Matching};
pub use normalize::{normalize, NormalizeError, NormalizeStats, RewriteLog, RewriteStep, Strategy};
pub use oracle::{exact_matching_bruteforce, exact_opt, OracleError};
