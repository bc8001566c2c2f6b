//! Exact reconstruction of the strain structure of twelve-variant
//! monoclinic-I martensite: compatibility and distance tables, symmetry
//! groups, the facet structure of the five-dimensional strain polytope, and
//! the hierarchy of T3 configurations, all in exact arithmetic.

pub mod algebraic;
pub mod interval;
pub mod linalg;
pub mod plane;
pub mod polytope;
pub mod poly;
pub mod rat;
pub mod report;
pub mod strain;
pub mod symmetry;
pub mod t3;
pub mod variants;
pub mod ring;
pub mod unipoly;
