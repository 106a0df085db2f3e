//! Command-line front end for the natural-language table search engine.
//!
//! The interesting work happens in `nlq-core`; this crate reads schema and
//! data files, keeps a loaded [`session::Session`], renders result sets, and
//! exposes the `nlq` binary with its `query`, `repl`, `explain` and `demo`
//! commands.

pub mod demo;
pub mod render;
pub mod session;
pub mod trace;
