//! External formats and the command-line interface.

pub mod certificate;
pub mod cli;
pub mod dimacs;
pub mod graph6;
