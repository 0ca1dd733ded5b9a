//! Exact combinatorics of the higher Verlinde categories `Ver_{p^n}`.
//!
//! * [`charring`]: SL2 characters as Laurent polynomials and basis changes
//!   between Weyl, simple and tilting characters.
//! * [`sl2tilt`]: tensor ideals, tensor products and Hom dimensions of SL2
//!   tilting modules.
//! * [`cyclo`]: evaluation of characters at prime-power roots of unity.
//! * [`versl2`]: simples, projectives, Cartan matrix and fusion rules of
//!   `Ver_{p^n}`.
//! * [`rootdatum`]: root systems, alcoves and the tensor ideals `I_n`, `J_n`
//!   for simply-connected semisimple groups.
//! * [`principal`]: restriction of characters along a principal SL2.
//! * [`cli`]: the `verpn` command-line front end.

pub mod charring;
pub mod cli;
pub mod cyclo;
pub mod error;
pub mod prime;
pub mod principal;
pub mod rootdatum;
pub mod sl2tilt;
pub mod versl2;

pub use error::{Error, Result};
pub use prime::Prime;
