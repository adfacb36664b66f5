//! Duadic negacyclic codes over the non-chain ring `F_q[u]/<f(u)>`, their
//! Gray images over `F_q`, and the duality and distance checks used to
//! classify them.

pub mod arith;
pub mod code;
pub mod cosets;
pub mod distance;
pub mod duadic;
mod error;
pub mod gf;
pub mod matrix;
pub mod negacyclic;
pub mod poly;
pub mod ring;
pub mod tables;

pub use code::{classify_duality, CrtCode, DualityFlags, GrayMatrix, LinearCode, Monomial};
pub use cosets::{cyclotomic_cosets, find_splittings, CosetTable, SplitKind, Splitting};
pub use distance::{min_distance, weight_distribution, Budget, DistanceReport, Method};
pub use duadic::{
    code_from_idempotent, count_inequivalent, extend_code, family_idempotent, solve_gamma, Base,
    ExtendedCode, FamilyKind, RingCode, TypeIIQuintet, TypeIPair,
};
pub use error::{Error, Result};
pub use gf::{Elem, Extension, Field};
pub use negacyclic::{bch_bound, DefiningSet, Negacyclic};
pub use poly::Poly;
pub use ring::{RingElement, RingN, RingPoly, RingSpec};
pub use tables::{run_row, table, CodeKind, RowManifest, RowReport};
