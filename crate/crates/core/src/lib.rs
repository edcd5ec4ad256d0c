//! Exact symbolic analysis of Wanas solitons on three-dimensional Lorentzian Lie groups.

pub mod exactalg;
pub mod liealg;
pub mod geometry;
pub mod soliton;
pub mod catalog;
pub mod verify;
pub mod cli;
