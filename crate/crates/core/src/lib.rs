//! Exact-arithmetic kernel for level-`l` (multigraded) combinatorial Hopf algebras.
//!
//! The central objects are functions in commuting variables `x_j^(c)` indexed by a
//! position `j` and a color `c < l`, graded by vectors of naturals of length `l`.
//! The crate provides:
//!
//! - [`comb`]: the underlying combinatorics — `l`-partite numbers, vector
//!   compositions and partitions, refinement orders, descent/color statistics,
//!   colored permutations, shuffles and quasi-shuffles, Lyndon tests, and the
//!   peak factorizations.
//! - [`qsym`]: multigraded quasisymmetric functions (monomial, fundamental,
//!   power, and eta bases) with product, coproduct, antipode, and the embedding
//!   of multigraded symmetric functions.
//! - [`nsym`]: the dual algebra of multigraded noncommutative symmetric
//!   functions (complete, power, and Upsilon bases).
//! - [`functionals`]: graded linear functionals represented degreewise by dual
//!   elements, with convolution, inversion, and the zeta/nu/chi family.
//! - [`subalg`]: the k-odd and k-even subalgebras and ideals, with basis
//!   enumeration, membership tests, and Hilbert series.
//! - [`theta`]: maps induced by functionals, in particular the k-analogues of
//!   the descents-to-peaks transform and peak functions.
//! - [`posets`]: multigraded and colored posets with flag enumeration and the
//!   quasisymmetric generating functions attached to them.
//! - [`fqsym`]: free quasisymmetric functions on colored permutations.
//! - [`json`]: the JSON wire format used by the CLI.
//!
//! All arithmetic is exact: coefficients are arbitrary-precision rationals.

pub mod coef;
pub mod comb;
pub mod error;
pub mod fqsym;
pub mod functionals;
pub mod json;
pub mod nsym;
pub mod posets;
pub mod qsym;
pub mod subalg;
pub mod theta;

pub use coef::Coef;
pub use comb::{ColoredPermutation, ExtVec, LPartite, Order, VectorComposition, VectorPartition};
pub use error::Error;
pub use fqsym::{FQSymElem, FQSymTensor};
pub use functionals::GradedFunctional;
pub use nsym::{NSymBasis, NSymElem};
pub use qsym::{QSymBasis, QSymElem};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
