//! DP-coloring (correspondence coloring) of plane graphs.
//!
//! The crate provides:
//!
//! - [`plane_graph`]: combinatorial embeddings via rotation systems, face
//!   tracing, separating cycles, and the vertex/face classifications the
//!   discharging arguments rely on;
//! - [`cover`]: list assignments, matching assignments, covers, M-colorings,
//!   edge straightening, and vertex identification;
//! - [`solver`]: exact M-coloring search, precoloring extension, and
//!   adversarial DP-chromatic numbers for tiny graphs;
//! - [`patterns`]: detection of the forbidden configurations used as
//!   hypothesis filters;
//! - [`discharge`]: an exact quarter-unit charge ledger implementing the
//!   MRA/MRB/MRC rule systems with conservation and verdict checks;
//! - [`gen`] and [`campaign`]: instance generators and stress campaigns.
//!
//! With the default `parallel` feature, campaigns and adversarial
//! enumeration fan out over rayon; without it everything runs sequentially
//! behind the same API.

pub mod campaign;
pub mod cover;
pub mod discharge;
pub mod exec;
pub mod gen;
pub mod graph;
pub mod oracle;
pub mod patterns;
pub mod plane_graph;
pub mod solver;

pub use cover::{ListAssignment, MColoring, MatchingAssignment};
pub use graph::SimpleGraph;
pub use plane_graph::{Classification, PlaneGraph};

/// The theorems whose hypotheses and rule systems the crate encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    MrThree,
    Mra,
    Mrb,
    Mrc,
    Ll,
}

impl TheoremId {
    pub fn name(self) -> &'static str {
        match self {
            TheoremId::MrThree => "MRTHREE",
            TheoremId::Mra => "MRA",
            TheoremId::Mrb => "MRB",
            TheoremId::Mrc => "MRC",
            TheoremId::Ll => "LL",
        }
    }

    pub fn parse(s: &str) -> Option<TheoremId> {
        match s.to_ascii_uppercase().as_str() {
            "MRTHREE" => Some(TheoremId::MrThree),
            "MRA" => Some(TheoremId::Mra),
            "MRB" => Some(TheoremId::Mrb),
            "MRC" => Some(TheoremId::Mrc),
            "LL" => Some(TheoremId::Ll),
            _ => None,
        }
    }

    /// Maximum precolored cycle length in the extension statement.
    pub fn cycle_bound(self) -> Option<usize> {
        match self {
            TheoremId::Mra | TheoremId::Mrb | TheoremId::Ll => Some(6),
            TheoremId::Mrc => Some(7),
            TheoremId::MrThree => None,
        }
    }

    /// Whether the extension statement also admits a single-vertex S.
    pub fn allows_single_vertex(self) -> bool {
        matches!(self, TheoremId::Mra | TheoremId::Ll)
    }
}

impl std::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}
