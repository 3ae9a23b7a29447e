//! Exact and floating evaluation of the monic three-term recurrence.

pub mod eval;
pub mod family;
pub mod zeros;

pub use eval::{
    eval_sequence, ratio_sequence, ratios, reconstruct_product, sequence, value, EvalPoint, Ratios,
    SequenceEval, Values,
};
pub use family::Family;
pub use zeros::find_zeros;
