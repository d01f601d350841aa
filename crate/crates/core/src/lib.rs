//! Spherical conjugacy classes in simple algebraic groups.
//!
//! The crate has three layers:
//!
//! * exact combinatorics — root systems ([`rootsys`]), Weyl-group element
//!   arithmetic, involution searches and Bruhat order ([`weyl`]);
//! * an infinitesimal dimension oracle — Chevalley-basis Lie algebras with
//!   integer structure constants and ad-rank computations over prime fields
//!   ([`chevalley`]);
//! * the classification itself — machine-readable class tables with
//!   Weyl-level certification ([`catalog`]) and concrete verification inside
//!   classical matrix groups over small prime fields ([`matgrp`]).
//!
//! Everything is exact: integer lattice arithmetic, or arithmetic mod p.

pub mod catalog;
pub mod chevalley;
mod error;
pub mod linalg;
pub mod matgrp;
pub mod rootsys;
pub mod weyl;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Integer matrices acting on root-lattice coordinates.
pub type IntMatrix = linalg::Matrix<i64>;
/// Matrices over a prime field, entries reduced into `0..p`.
pub type FpMatrix = linalg::Matrix<u64>;
