//! Constructive 3-sun systems.
//!
//! A 3-sun `(a, b, c; d, e, f)` is a triangle `(a, b, c)` with pendant edges
//! `{a, d}`, `{b, e}`, `{c, f}`. This crate decomposes `K_m` and
//! `K_m \ K_n` into 3-suns and embeds any 3-sun system of order `n` into one
//! of every admissible order `m >= 7n/5 + 1`. Every result is checked as an
//! exact edge partition before it is returned.

pub mod certificate;
pub mod cli;
pub mod design;
pub mod error;
pub mod lemmas;
pub mod oracle;
pub mod planner;
pub mod verify;

pub use certificate::Certificate;
pub use design::{Edge, HoleGraph, Sun, Vertex};
pub use error::{Error, Result};
pub use lemmas::{LemmaKind, LemmaOutput};
pub use oracle::{brute_force_decompose, SearchOutcome};
pub use planner::{build_plan, construct_3ss, decompose_hole, embed, Plan};
pub use verify::{verify_partition, Decomposition, VerificationReport};
