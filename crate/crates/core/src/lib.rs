//! Exact enumeration of the permutation representations of braid groups and
//! of their commutator subgroups into symmetric groups `S_r`.
//!
//! The engine decomposes the representation-shift graph over `S_r` into
//! cycles, extends them level by level up the tower of commutator subgroups
//! `K_3 ⊂ K_4 ⊂ ... ⊂ K_n`, lifts representations to the braid groups `B_n`,
//! and derives transitive-representation and subgroup-index censuses. The
//! published reference tables for small degrees ship as embedded fixtures so
//! every count can be re-verified bit for bit (`golden::verify_golden`, or
//! `braidrep verify-paper` on the command line).

pub mod census;
pub mod cli;
pub mod error;
pub mod golden;
pub mod json;
pub mod perm;
pub mod shift;
pub mod tower;

pub use error::{Error, Result};
pub use perm::{Degree, Perm, Rank, R_MAX};
pub use shift::{CycleKind, CycleSet, ShiftCycle, Vertex};
pub use tower::{BraidClass, BraidRep, TowerClass, TowerRep};
