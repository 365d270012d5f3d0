pub mod analysis;
pub mod braid;
pub mod classify;
pub mod cli;
pub mod io;
pub mod laurent;
pub mod linalg;
pub mod rep;
pub mod scalar;
