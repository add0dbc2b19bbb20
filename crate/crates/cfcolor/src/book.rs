//! The guide chapters from `book/src`, included as doc items so that
//! `cargo test --doc` compiles and runs every code snippet in the book.
//! `mdbook build book` renders the same files; this module keeps the two in
//! sync.

#[doc = include_str!("../../../book/src/coloring.md")]
pub mod coloring {}

#[doc = include_str!("../../../book/src/exact.md")]
pub mod exact {}

#[doc = include_str!("../../../book/src/clique_width.md")]
pub mod clique_width {}

#[doc = include_str!("../../../book/src/classes.md")]
pub mod classes {}

#[doc = include_str!("../../../book/src/geometric.md")]
pub mod geometric {}

#[doc = include_str!("../../../book/src/lower_bounds.md")]
pub mod lower_bounds {}
