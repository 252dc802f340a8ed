//! Long-form guide, shared with the rendered book in `book/`.  Each
//! chapter's code blocks compile and run as doc-tests, so the book can't
//! drift from the library.

#[doc = include_str!("../../../book/src/permutations.md")]
pub mod permutations {}

#[doc = include_str!("../../../book/src/digraphs.md")]
pub mod digraphs {}

#[doc = include_str!("../../../book/src/groupoids.md")]
pub mod groupoids {}

#[doc = include_str!("../../../book/src/difference-digraphs.md")]
pub mod difference_digraphs {}

#[doc = include_str!("../../../book/src/covering-groups.md")]
pub mod covering_groups {}

#[doc = include_str!("../../../book/src/searching.md")]
pub mod searching {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
