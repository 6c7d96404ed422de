//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("Cartan matrix does not generate a finite root system ({0})")]
    NonFiniteCartan(String),

    #[error(
        "dimension weights are not Weyl-invariant: simple roots a{} and a{} lie \
         in the same orbit but carry weights {da} and {db}",
        a + 1, b + 1
    )]
    WeylVariantWeights { a: usize, b: usize, da: u64, db: u64 },

    #[error("invalid datum spec: {0}")]
    InvalidSpec(String),

    #[error("root system too large for this build (more than {0} positive roots)")]
    TooLarge(usize),

    #[error("subset index a{} exceeds the datum rank {rank}", index + 1)]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("subset {0} is not contained in {1}")]
    SubsetNotContained(String, String),

    #[error("Weyl element is not a minimal double-coset representative for the given (I, K)")]
    NotDistinguished,

    #[error("character modes differ between operands")]
    ModeMismatch,

    #[error("concrete character mode requires an odd prime p in the datum")]
    MissingPrime,

    #[error("no symbol action declared for symbol `{0}`")]
    UndeclaredSymbolAction(String),

    #[error("declared symbol action violates the defining relations: {0}")]
    InvalidSymbolAction(String),

    #[error("lattice modules have different ambient parabolic subsets")]
    AmbientMismatch,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("certificate failed: {0}")]
    CertificateFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
