//! Exact power-sum expansions of Schur Q-functions, spin characters of the
//! symmetric groups, and sranks of strict and skew shifted shapes.
//!
//! Everything is computed over arbitrary-precision rationals; nothing is
//! ever rounded.

pub mod bar_moves;
pub mod bar_tableaux;
pub mod characters;
pub mod cli;
pub mod error;
pub mod partitions;
pub mod ppoly;
pub mod qfunctions;
pub mod srank;
pub mod strip_tableaux;
pub mod verify;

pub use bar_moves::{bar_weight, index_sets, remove_bar, BarMove, BarType, IndexSets};
pub use bar_tableaux::{enumerate_tableaux, render_filling, tableau_weight, BarTableau, Filling};
pub use characters::character;
pub use error::{Error, Result};
pub use partitions::{
    enumerate_odd, enumerate_strict, parity_stats, parse_shape, z_factor, OddPartition,
    ParityStats, Partition, Shape, SkewShape, StrictPartition,
};
pub use ppoly::{PPoly, Rational};
pub use qfunctions::{
    pfaffian, q_function, q_k, q_morris, q_pf, q_recur, q_skew_pf, q_two, Route, SkewSymMatrix,
};
pub use srank::{
    apply_exchange, kappa, min_bars_bruteforce, place_zeros, row_type, srank_skew,
    srank_straight, Configuration, RowType,
};
pub use strip_tableaux::{classify_skew, q_skew_strips, ShiftedCell, StripKind, StripStep};
