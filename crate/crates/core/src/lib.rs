//! Exact counting of graph-pattern quantities.
//!
//! The crate centres on edge-injective homomorphisms: vertex maps from a
//! pattern `H` into a host `G` that send distinct pattern edges to distinct
//! host edges. Around the polynomial-time counter for patterns of bounded
//! weak vertex-cover number ([`eihom`]) it provides:
//!
//! * brute-force reference counters ([`oracles`]) that every fast path is
//!   checked against,
//! * exact rational arithmetic, interpolation and GF(2) elimination
//!   ([`numeric`]),
//! * an edge-coloured Holant framework with matchgates ([`holant`]),
//! * perfect-matching counting in 3-regular line graphs and its
//!   collar-based converse ([`line_matchings`]),
//! * executable reduction pipelines whose counting identities can be
//!   checked end to end ([`reductions`], [`verify`]).
//!
//! All counts are arbitrary-precision integers; nothing is ever rounded.

pub mod eihom;
pub mod error;
pub mod graph;
pub mod holant;
pub mod line_matchings;
pub mod numeric;
pub mod oracles;
pub mod par;
pub mod partition;
pub mod patterns;
pub mod reductions;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{CoverMode, Graph, Quotient};
pub use oracles::Caps;
pub use partition::Partition;
pub use patterns::{make_pattern, Pattern, PatternKind};

/// Exact nonnegative count.
pub type Count = num_bigint::BigUint;
