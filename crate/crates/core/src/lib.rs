pub mod error;
pub mod exact;
pub use error::{Error, Result};
pub mod lattice;
pub mod arrangement;
pub mod geometry;
pub mod seshadri;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/exact.md")]
    mod exact {}
    #[doc = include_str!("../../../book/src/surfaces.md")]
    mod surfaces {}
    #[doc = include_str!("../../../book/src/arrangements.md")]
    mod arrangements {}
    #[doc = include_str!("../../../book/src/geometry.md")]
    mod geometry {}
    #[doc = include_str!("../../../book/src/seshadri.md")]
    mod seshadri {}
}
