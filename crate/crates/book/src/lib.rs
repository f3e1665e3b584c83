//! Code listings from the guide in `book/`, compiled as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/arithmetic.md")]
pub mod arithmetic {}

#[doc = include_str!("../../../book/src/matrix-rings.md")]
pub mod matrix_rings {}

#[doc = include_str!("../../../book/src/inverses.md")]
pub mod inverses {}

#[doc = include_str!("../../../book/src/transfer.md")]
pub mod transfer {}

#[doc = include_str!("../../../book/src/oracles.md")]
pub mod oracles {}

#[doc = include_str!("../../../book/src/spectra.md")]
pub mod spectra {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
