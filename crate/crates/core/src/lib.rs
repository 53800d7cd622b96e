//! Exact Lie-theoretic classification machinery for totally geodesic
//! singular orbits of cohomogeneity-one isometric actions, together with a
//! numerical differential-geometry verifier for the concrete model orbits.
//!
//! The crate is organized bottom-up:
//!
//! - [`lie`]: exact root-system, weight and character arithmetic
//!   (Freudenthal recursion, Weyl dimension formula, invariant extraction,
//!   and an independent alternating-sum decomposition oracle).
//! - [`catalog`]: data-file-backed catalogs of named representations,
//!   transitive sphere actions, subgroup embeddings and restriction rules.
//! - [`homog`]: homogeneous spaces, isotropy characters, Euler-positivity
//!   and the rank-one symmetric space catalog.
//! - [`triple`]: admissible triples and the totally-geodesic decision
//!   criteria (dimension bound, kernel, Euler, Frankel).
//! - [`cross`]: the per-family classification of slice representations over
//!   the rank-one symmetric spaces, reproducing the exceptional table.
//! - [`wallach`]: the positive-curvature pipeline over Wallach's list for
//!   compact non-semisimple groups.
//! - [`geom`]: numerical verification on explicitly embedded model
//!   manifolds (second fundamental forms, Killing-norm profiles, shape
//!   operators).

pub mod catalog;
pub mod cross;
pub mod error;
pub mod geom;
pub mod homog;
pub mod lie;
pub mod report;
pub mod triple;
pub mod wallach;
