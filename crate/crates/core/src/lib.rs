//! Exact symbolic combinatorics of parabolic induction for p-adic reductive
//! groups.
//!
//! The library works with a purely combinatorial model of a connected
//! reductive group over a finite extension `F` of `Q_p`: a reduced relative
//! root system with per-root dimension weights, the finite Weyl group with
//! its double-coset representatives, and the character lattice spanned by the
//! simple roots.  On top of that it computes
//!
//! * the orbit combinatorics of `P\G/Q` (closure order, orbit dimensions,
//!   heights) and the symbolic graded pieces of the filtration on derived
//!   coinvariants of a parabolically induced representation,
//! * the character calculus (`alpha_w`, `rho`, `delta_w`, the `⋆`-action) in
//!   formal and concrete (mod `p-1`) modes,
//! * Jordan–Hölder lattices of principal series and signed coefficient
//!   complexes with exactness decided by exact rational linear algebra,
//! * closed-form derived coinvariants of principal series and generalized
//!   Steinberg representations, and
//! * decision procedures predicting Ext groups between parabolically induced
//!   representations.
//!
//! Everything is exact: roots and Weyl actions are integer lattice data,
//! weights and matrices use [`Rational`] arithmetic.  All claims that admit a
//! brute-force restatement are re-checked by the certificate suites in
//! [`verify`].

pub mod character;
pub mod coinv;
pub mod error;
pub mod ext;
pub mod geom;
pub mod lattice;
pub mod linalg;
pub mod report;
pub mod root_datum;
pub mod scalar;
pub mod subset;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use root_datum::{Root, RootDatum};
pub use subset::Subset;
pub use weyl::{Elt, WeylGroup};

/// The exact scalar used by all concrete computations.
pub type Rational = num_rational::Ratio<i64>;

/// Weights with [`Rational`] coordinates on the simple-root basis.
pub type Weight = character::Weight<Rational>;

/// Exact matrices over [`Rational`].
pub type QMat = linalg::Mat<Rational>;
