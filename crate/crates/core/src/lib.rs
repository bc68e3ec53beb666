//! Exact construction and cross-verification of alternating-run polynomial
//! families: recurrence triangles, Chen-grammar derivatives, brute-force
//! permutation statistics, gamma and semi-gamma expansions, and truncated
//! exponential generating functions.

pub mod algebra;
pub mod enumerate;
pub mod export;
pub mod families;
pub mod gamma;
pub mod grammar;
pub mod series;
pub mod triangle;
pub mod verify;
