//! Std companion to `patwilf-core`: thread-parallel enumeration, a shared
//! memo table and its on-disk cache, the statistic registry, JSON/CSV output
//! formats, and the `patwilf` command line.

pub mod cache;
pub mod cli;
mod error;
pub mod formats;
pub mod parallel;
pub mod registry;

pub use error::Error;
pub use parallel::SharedMemo;
pub use patwilf_core as core;
pub use registry::StatRegistry;
