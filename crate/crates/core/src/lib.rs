pub mod bounds;
pub mod diagram;
pub mod error;
pub mod harness;
mod map;
pub mod notation;
pub mod rewrite;
pub mod twist;
