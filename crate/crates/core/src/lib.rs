//! Phase structure of quantum double models built from small finite groups.
//!
//! The crate provides exact finite-group arithmetic, anyon enumeration for
//! the double of a group, condensable algebras of derived phases selected by
//! a subgroup pair (M, N), anyon-tunneling maps across domain walls, and the
//! legality analysis of measurement-induced transitions between derived
//! phases (overlap matrices, transition graphs, schedules, and a brute-force
//! conditional-unitary oracle).

pub mod anyon;
pub mod chartab;
pub mod condense;
pub mod error;
pub mod floquet;
pub mod group;
pub mod subgroup;
pub mod tunnel;

pub use anyon::{anyons, chi_anyon, decompose, Anyon, DoubleClassFunction, KMap};
pub use chartab::{character_table, character_table_seeded, CharacterTable};
pub use condense::{condensable_algebra, enumerate_phase_specs_all, CondensableAlgebra, PhaseSpec};
pub use error::{Error, Result};
pub use group::{FiniteGroup, GroupSpec, ORDER_CAP_DEFAULT};
pub use subgroup::{
    are_isomorphic, cosets, double_cosets, normal_subgroups_in, subgroups, CosetDecomposition,
    CosetSide, QuotientGroup, Subgroup,
};
