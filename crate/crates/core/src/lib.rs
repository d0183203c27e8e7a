//! Möbius functions of reducible-subgroup order ideals in finite linear
//! groups, and the alternating sums and Euler characteristics they equal.
//!
//! The crate is organised bottom-up:
//!
//! * [`gfq`]: arithmetic in GF(q).
//! * [`linalg`]: matrices, subspaces, invariant-subspace lattices.
//! * [`group`]: explicit matrix groups, subgroups, stabilizers, intervals, actions.
//! * [`poset`]: finite posets, Möbius functions, crosscuts.
//! * [`complex`]: simplicial complexes and Euler characteristics.
//! * [`theory`]: stabilizer families, the ideal `I(G,H)`, and the identities
//!   relating `μ` on its completion to alternating sums and `χ̃(Δ1)`, `χ̃(Δ2)`.
//!
//! ```
//! use std::sync::Arc;
//! use mobius_lattice::gfq::FqField;
//! use mobius_lattice::group::{general_linear_generators, GroupSet, DEFAULT_ORDER_CAP};
//! use mobius_lattice::linalg::Matrix;
//! use mobius_lattice::theory::{Caps, Verifier};
//!
//! let f = Arc::new(FqField::of_order(3)?);
//! let g = GroupSet::closure(&f, 2, &general_linear_generators(&f, 2), DEFAULT_ORDER_CAP)?;
//! let h = g.subgroup_from_matrices(&[Matrix::diagonal(&f, &[2, 1])])?;
//! let report = Verifier::new(&g, Caps::default())?.verify_pair(&h)?;
//! assert!(report.passed());
//! assert_eq!(report.mu_hat, 0);
//! # Ok::<(), mobius_lattice::Error>(())
//! ```

pub mod complex;
pub mod error;
pub mod gfq;
pub mod group;
pub mod linalg;
pub mod poset;
pub mod theory;

pub use error::{Error, Result};
