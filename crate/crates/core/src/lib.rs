//! Exact computations for pointed Hopf algebras with a triangular
//! decomposition over an abelian group: diagonal braidings, Nichols
//! algebras, braided doubles, their normal forms and classical limits.
//!
//! All arithmetic is exact, over Q(ζ_N)(t_1, ..., t_m).

pub mod scalars;
pub mod linalg;
pub mod braiding;
pub mod nichols;
pub mod double;
pub mod normalform;
pub mod limit;
pub mod catalog;
pub mod io;

#[cfg(test)]
mod proptests;

pub use braiding::{classify, is_twist_equivalent, ClassificationReport, ClassifyOptions, DiagonalBraiding, Realization};
pub use catalog::{catalog_build, CatalogError};
pub use double::{build_presentation, validate, DoubleData, DoubleError, DoublePresentation};
pub use io::{parse_input, IoError};
pub use limit::{check_specializable, classical_limit, integral_presentation, verify_sl2_triples, LimitError};
pub use nichols::{hilbert_dims, nichols_analysis, NicholsError};
pub use normalform::{verify_hopf, DoubleAlgebra, NormalFormElement, VerificationReport};
pub use scalars::{Field, FieldSpec, Scalar, ScalarError};

/// Any error raised by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Braiding(#[from] braiding::BraidingError),
    #[error(transparent)]
    Nichols(#[from] NicholsError),
    #[error(transparent)]
    Double(#[from] DoubleError),
    #[error(transparent)]
    Limit(#[from] LimitError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Io(#[from] IoError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Environment variable holding the worker count for parallel blocks.
pub const THREADS_VAR: &str = "QTRI_THREADS";

/// Sizes the global rayon pool from `QTRI_THREADS`; unset or 0 leaves the
/// default of one worker per available core. Returns the pool size.
pub fn init_threads() -> usize {
    let n = std::env::var(THREADS_VAR).ok().and_then(|s| s.trim().parse::<usize>().ok()).unwrap_or(0);
    if n > 0 {
        // a pool that is already built keeps its size
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    rayon::current_num_threads()
}
