//! Kronecker and Cartesian products of graphs, restricted integer lattices,
//! exact closed-walk counting and the spectral distributions behind the counts.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] builds finite and implicit (neighbour-function) graphs, their
//!   products, restricted lattices, finite balls and the explicit affine
//!   isomorphisms between lattice domains and Kronecker products.
//! * [`walks`] counts closed walks exactly with big integers and provides the
//!   closed-form oracles for every named lattice.
//! * [`spectral`] represents spectral distributions at the moment level,
//!   including classical and Mellin convolutions and path spectra.
//! * [`elliptic`], [`quadrature`] and [`density`] evaluate the elliptic-integral
//!   density closed forms and check them against numerical convolution.
//! * [`verify`] bundles the batch verification suites used by the [`cli`].

pub mod cli;
pub mod combinatorics;
pub mod density;
pub mod elliptic;
pub mod error;
pub mod format;
pub mod graph;
pub mod quadrature;
pub mod spectral;
pub mod verify;
pub mod walks;

pub use error::{Error, Result};
