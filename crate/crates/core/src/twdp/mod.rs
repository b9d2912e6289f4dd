//! Tree decompositions and the (c, d) dynamic program.

mod decomposition;
mod dp;
mod nice;

pub use decomposition::{
    build_tree_decomposition, occurrence_counts, parse_td, serialize_td, validate_decomposition,
    TdVerdict, TreeDecomposition,
};
pub use dp::{
    dp_feasible, dp_feasible_with, dp_witness, dp_witness_with, DpOptions, DpState, DpTables,
    StateCodec, DEFAULT_MAX_STATES,
};
pub use nice::{make_nice, NiceNode, NiceTreeDecomposition, NodeKind};
