//! Combinatorial Kontsevich integral of sliced tangle words, its
//! representation-side counterpart and a ribbon-category evaluator.

use thiserror::Error;

use crate::weightsys::WsError;

pub mod associator;
pub mod horizontal;
pub mod invariants;
pub mod planner;
pub mod repside;
pub mod ribbon;
pub mod skeleton;
pub mod word;
pub mod zside;

pub use associator::{Associator, MAX_ASSOCIATOR_DEGREE};
pub use invariants::{build_associator, lg_invariant, long_knot, vassiliev_defect, ws_of_z, wz_series};
pub use repside::{wz_eval, WzValue};
pub use ribbon::{rt_invariant, RibbonData, RibbonError};
pub use skeleton::{diagram_of_singular, framings, word_kinds};
pub use word::{parse_word, Event, Gen, Sign, TangleWord};
pub use zside::{z_eval, ZValue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KontsevichError {
    #[error("syntax: {0}")]
    Syntax(String),
    #[error("boundary mismatch: {0}")]
    Boundary(String),
    #[error("expected a closed word")]
    NotClosed,
    #[error("order {0} exceeds the supported maximum {1}")]
    OrderTooHigh(usize, usize),
    #[error("associator equations inconsistent at degree {0}")]
    AssociatorUnsolvable(usize),
    #[error("expected a knot, got {0} components")]
    NotKnot(usize),
    #[error("resolutions need even framings, got {0:?}")]
    OddFraming(Vec<i64>),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("weight system: {0}")]
    Weight(WsError),
}
