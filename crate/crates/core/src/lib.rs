#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod asymptotics;
pub mod error;
pub mod numerics;
pub mod recurrence;
pub mod verify;

pub use error::{Error, Result};
