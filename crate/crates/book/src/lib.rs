//! Runs the Rust listings of the guide in `book/` as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}

#[doc = include_str!("../../../book/src/cliques.md")]
pub mod cliques {}

#[doc = include_str!("../../../book/src/randic.md")]
pub mod randic {}

#[doc = include_str!("../../../book/src/identities.md")]
pub mod identities {}

#[doc = include_str!("../../../book/src/scanning.md")]
pub mod scanning {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
