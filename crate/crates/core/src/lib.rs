//! Linear complementary dual (LCD) codes over the prime fields GF(2), GF(3),
//! GF(5) and GF(7).
//!
//! A linear code `C` is LCD when `C ∩ C^⊥ = {0}`; equivalently its Gram
//! matrix `G G^T` is invertible. This crate provides exact linear algebra
//! over small prime fields, a [`LinearCode`] type with duality, hull and
//! distance computations, the explicit code families of [`constructions`],
//! classical [`bounds`], an exhaustive [`search`] for the largest distance
//! of an LCD code with given length and dimension, and a [`verify`] module
//! that checks a catalog of published claims against all of the above.
//!
//! ```
//! use lcd_codes::{constructions, Prime};
//!
//! let rep = constructions::repetition(4, Prime::THREE)?;
//! assert!(rep.is_lcd());
//! assert_eq!(rep.min_distance()?, 4);
//! # Ok::<(), lcd_codes::Error>(())
//! ```

pub mod bounds;
pub mod claims;
pub mod code;
pub mod constructions;
pub mod error;
pub mod field;
pub mod matrix;
pub mod search;
pub mod verify;

pub use code::{error_capability, CodeMetrics, LinearCode};
pub use error::{Error, Result};
pub use field::{FpElement, Prime};
pub use matrix::{MatGF, Rref};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/fields.md")]
    mod fields {}
    #[doc = include_str!("../../../book/src/matrices.md")]
    mod matrices {}
    #[doc = include_str!("../../../book/src/codes.md")]
    mod codes {}
    #[doc = include_str!("../../../book/src/lcd.md")]
    mod lcd {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
    #[doc = include_str!("../../../book/src/search.md")]
    mod search {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
