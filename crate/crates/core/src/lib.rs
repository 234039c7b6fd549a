//! Diagonal automorphisms of smooth hypersurfaces.
//!
//! A degree-`d` form `F` in `N` variables is preserved (up to a scalar) by
//! the diagonal maps `x_j -> zeta^{k_j} x_j` whose exponent vector pairs to
//! the same residue with every monomial of `F`. This crate computes that
//! group exactly from the monomial support, decides smoothness of the
//! `F_I = sum x_a^{d-1} x_{i_a}` family, lists every achievable
//! automorphism order for a given `(d, N)` and builds explicit witnesses.
//!
//! Modules, bottom up:
//!
//! - [`abelian`]: Smith normal form, finite abelian groups, factoring.
//! - [`polyforms`]: supports, `F_I` forms and simple types `K_a` / `T_b`.
//! - [`diagact`]: diagonal automorphisms and symmetry groups of supports.
//! - [`classify`]: achievable orders, witnesses, the cubic fourfold scan.
//! - [`oracle`]: slow independent checks used by the test suites.
//! - [`cli`]: the `hypersym` command line front end.

pub mod abelian;
pub mod classify;
pub mod cli;
pub mod diagact;
pub mod oracle;
pub mod polyforms;

/// Arbitrary-precision integer matrix.
pub type BigIntMatrix = abelian::Matrix<num_bigint::BigInt>;
