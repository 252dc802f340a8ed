//! Algebraic workbench for the digraph degree-diameter problem.
//!
//! The crate builds dense regular digraphs from algebra — groupoid Cayley
//! digraphs, cyclic difference digraphs and their generalization, covering
//! groups inside wreath products — and checks the structural claims those
//! constructions come with.  See the `book/` guide for a narrative tour.

pub mod builtins;
pub mod cdd;
pub mod cover;
pub mod digraph;
pub mod groupoid;
pub mod io;
pub mod iso;
pub mod perm;
pub mod search;
pub mod verify;

mod guide;

pub use digraph::{Digraph, DigraphError, Factorization};
pub use perm::{Permutation, PermError, SemiDirectPerm};
