//! NP-hardness gadgets with brute-force oracles for both sides of each
//! equivalence.

mod meta;
mod sat;
mod setcover;

pub use meta::{GadgetKind, GadgetMeta, RawLabel, Renormalization};
pub use sat::{
    sat_bruteforce, sat_gadget_raw_edges, sat_gadget_vertex, sat_renormalization,
    sat_to_tst_gadget, verify_tst_reduction, CnfFormula, Literal, SatVertex, TstReductionCheck,
};
pub use setcover::{
    setcover_bruteforce, setcover_gadget_vertex, setcover_to_kbs_gadget, verify_kbs_reduction,
    Cover, CoverVertex, KbsReductionCheck, SetCoverInstance,
};
