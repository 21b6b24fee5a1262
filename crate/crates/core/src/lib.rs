//! Combinatorial models behind bases of type A affine Lie algebra
//! representations.
//!
//! The crate covers four layers that are tied together by exact, checkable
//! identities:
//!
//! * [`partitions`]: Young diagrams, charged Maya diagrams, basic paths and the
//!   level-one weight and energy formulas.
//! * [`multisegments`]: segment multisets indexing orbits of nilpotent
//!   representations of the infinite and cyclic quivers, and the greedy
//!   decomposition of a multiset into an ordered tuple of Maya diagrams.
//! * [`fock`] and [`paths`]: the level-one Fock representation of the
//!   `A_infinity` algebra, and the arbitrary-level path model (energy,
//!   weights, lifts, n-reduction, highest lifts).
//! * [`quiverlab`]: explicit quiver representations over the rationals, used
//!   to check moment-map vanishing, nilpotency and the stability criterion on
//!   actual matrices.
//!
//! The [`cli`] module is the front end used by the `quiverpaths` binary; the
//! `examples/` directory of this crate shows each capability in isolation.

pub mod assignment;
pub mod cli;
mod error;
pub mod fock;
pub mod linalg;
pub mod multisegments;
pub mod partitions;
pub mod paths;
pub mod quiverlab;
mod rank;
pub mod verify;

pub use error::{Error, Result};
pub use fock::FockVector;
pub use multisegments::{Decomposition, MayaTuple, RowMultiset, Segment, SegmentMultiset};
pub use partitions::{AffineWeight, BasicPath, ChargedMaya, DimVector, YoungDiagram};
pub use paths::{HighestWeight, LevelPath};
pub use quiverlab::{MomentValue, QuiverRep};
pub use rank::{QuiverType, Rank};
