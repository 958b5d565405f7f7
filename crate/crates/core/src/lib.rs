//! Generalized knot groups G_n(K) and their finite quotients.

pub mod diagram;
pub mod error;
pub mod fingroups;
pub mod harness;
pub mod homsearch;
pub mod presentation;
pub mod snf;
pub mod talex;
pub mod words;

pub use error::{Error, Result};
