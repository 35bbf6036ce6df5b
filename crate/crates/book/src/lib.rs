//! The guide in `book/` is plain mdbook, which cannot compile listings that
//! depend on this workspace. Each chapter is included here as the docs of an
//! empty module instead, so `cargo test --doc` runs every listing.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/posets.md")]
pub mod posets {}
#[doc = include_str!("../../../book/src/intervals.md")]
pub mod intervals {}
#[doc = include_str!("../../../book/src/reversal.md")]
pub mod reversal {}
#[doc = include_str!("../../../book/src/realizers.md")]
pub mod realizers {}
#[doc = include_str!("../../../book/src/dimension.md")]
pub mod dimension {}
#[doc = include_str!("../../../book/src/instances.md")]
pub mod instances {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
