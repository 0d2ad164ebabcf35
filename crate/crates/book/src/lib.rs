//! The guide's chapters, compiled so their snippets run as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}

#[doc = include_str!("../../../book/src/images.md")]
pub mod images {}

#[doc = include_str!("../../../book/src/composite.md")]
pub mod composite {}

#[doc = include_str!("../../../book/src/spacings.md")]
pub mod spacings {}

#[doc = include_str!("../../../book/src/correlations.md")]
pub mod correlations {}

#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}
