//! Exact invariants of torus fibrations over cover nerves: integer linear
//! algebra, GL(n, Z) representations, twisted cohomology, transition-data
//! cocycles and Chern obstruction classes, plus floating-point checks of
//! explicit attaching maps.

pub mod affine;
pub mod cocycles;
pub mod constructions;
pub mod datasets;
pub mod document;
pub mod linalg;
pub mod twisted;
