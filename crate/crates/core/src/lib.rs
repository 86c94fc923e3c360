//! Reachability in temporal graphs: journeys and pivots, bidirectional paths
//! and spanners, exact spanning-tree and bi-spanner search, and the gadget
//! generators tying those problems to SAT and Set Cover.

pub mod bipath;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod format;
pub mod graph;
pub mod reach;
pub mod reductions;

pub use bipath::{
    build_bispanner, compute_bipaths, compute_bipaths_ordered, extend_triplet,
    is_bidirectionally_connected, BiPath, BipathRun, Triplet, TripletSet, Via, WorklistOrder,
};
pub use error::{Error, Result};
pub use exact::{
    critical_bispanner_edges, min_bispanner_bruteforce, spanning_trees, tst_bruteforce, tst_simple,
    MinBispanner, SearchLimits, SpanningTreeResult,
};
pub use format::{parse_temporal_graph, serialize_temporal_graph, to_dot, to_dot_named};
pub use graph::{Edge, GraphClass, Label, Setting, TemporalGraph, Time, Vertex};
pub use reach::{
    earliest_arrival, find_pivots, is_temporally_connected, Arrival, ArrivalMap, Journey, Pivot,
};
