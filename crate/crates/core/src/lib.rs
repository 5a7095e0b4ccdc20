//! Subgroups of the rank-two abelian group `Z_m x Z_n`.
//!
//! * [`subgroups`] enumerates every subgroup through its 5-tuple
//!   `(a, b, c, d, ell)`, lists its elements and classifies it.
//! * [`counting`] evaluates the closed-form counts: all subgroups, by order,
//!   by isomorphism type, cyclic ones, and prime-power special cases.
//! * [`oracle`] enumerates subgroups by brute force and cross-checks both.
//! * [`arith`] is the exact integer kernel underneath.
//! * [`render`] formats results for the `goursat` command-line tool.

pub mod arith;
pub mod counting;
mod error;
pub mod oracle;
pub mod render;
pub mod subgroups;

pub use counting::{
    build_table, count_by_order, count_by_order_prime_power, count_by_type, count_cyclic,
    count_cyclic_by_order, count_total, count_total_fast, count_total_prime_power, SubgroupTable,
    TypeKey,
};
pub use error::{Error, MembershipError, Result};
pub use oracle::{brute_subgroups, classify, cross_check, OracleReport};
pub use subgroups::{
    describe, enumerate_tuples, find_tuple, materialize, offset_form, ElementSet, GoursatTuple,
    InvariantPair, SubgroupDescriptor,
};
