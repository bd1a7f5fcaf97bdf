//! Exact computational algebra for the length-48 Virasoro frame: the
//! GF(2) code pair behind the moonshine module's frame decomposition, the
//! module labels and fusion group of the associated code VOA, the
//! q-series identities its character theory rests on, and the Hamming
//! weight-2 algebra with its three frames.
//!
//! Everything is exact: GF(2) words are packed bit masks, weight counts
//! are big integers, series coefficients are big rationals on the
//! (1/48)-exponent lattice, and the algebra fragment works over exact
//! rationals. Floating point appears only in [`realeval`], which treats
//! the infinite products as functions on (0,1) for the divergence check,
//! independently of any truncation.
//!
//! The main entry points:
//!
//! * [`word::BinaryWord`], [`code::LinearCode`]: the GF(2) engine.
//! * [`catalog`]: H8, Reed-Muller codes, and the \[48,7\]/\[48,41\] pair.
//! * [`weights`]: exact weight enumerators, MacWilliams, coset leaders.
//! * [`modules::ModuleSystem`]: labels `(β, γ)`, fusion, lowest weights.
//! * [`series`]: eta, thetas, the J-function by two routes, Ising and
//!   module characters, and the inequality-chain series.
//! * [`griess::HammingGriess`]: the 22-dimensional weight-2 algebra.
//! * [`search`]: the holomorphic gamma-assignment search.

pub mod catalog;
pub mod code;
pub mod defaults;
pub mod error;
pub mod griess;
pub mod modules;
pub mod qseries;
pub mod realeval;
pub mod search;
pub mod series;
pub mod structure;
pub mod weights;
pub mod word;

pub use code::LinearCode;
pub use error::{Error, Result};
pub use modules::{ModuleLabel, ModuleSystem, TauWord};
pub use qseries::QSeries;
pub use weights::WeightDistribution;
pub use word::BinaryWord;
