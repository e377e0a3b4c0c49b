//! Boolean involutions in the Bruhat order on involutions of the symmetric
//! and hyperoctahedral groups.
//!
//! An involution `w` is *Boolean* when its principal order ideal `B(w)` in the
//! Bruhat order restricted to involutions is a Boolean lattice. This crate
//! decides Booleanness through several independent criteria (pattern
//! avoidance, long-crossing pairs, repeat-free `S`-expressions and direct
//! lattice certification), builds the ideals themselves, realises the
//! bijection with restricted Motzkin paths and counts Boolean involutions
//! exactly by brute force, by linear recurrence and by generating function.
//!
//! All public indices are 1-based, matching one-line notation.

pub mod boolean;
pub mod bruhat;
pub mod counting;
pub mod enumerate;
pub mod error;
pub mod motzkin;
pub mod pattern;
pub mod perm;
pub mod series;
pub mod sexpr;
pub mod signed;
pub mod verify;

pub use boolean::{
    boolean_sexpr_builder, connected_components, is_boolean, is_boolean_by, long_crossing_pairs,
    restrict, BooleanVerdict, ComponentPartition, Method,
};
pub use bruhat::{bruhat_leq, ideal, is_boolean_lattice, IdealPoset};
pub use error::{Error, Result};
pub use motzkin::{psi, psi_inverse, MotzkinPath, Step};
pub use pattern::{Occurrence, Pattern, SignedPattern};
pub use perm::{Involution, Permutation};
pub use sexpr::{
    apply_underline, eval_sexpr, rank_profile, reduced_sexpr, RankProfile, SExpression,
};
pub use signed::{SignedInvolution, SignedPermutation};
