//! Exact combinatorics of reflexive polytopes and the K3 and Calabi-Yau
//! hypersurfaces they define.

pub mod lattice;
pub mod polytope;
pub mod symmetry;
pub mod fan;
pub mod invariants;
pub mod families;
pub mod ks;
pub mod store;
