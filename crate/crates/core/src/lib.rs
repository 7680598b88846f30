//! Exact spectra of invariant Markov semigroup generators on the classical
//! sphere `S^{N-1}`, the half-liberated sphere `S^{N-1}_*` and the free
//! sphere `S^{N-1}_+`.
//!
//! Everything spectral is computed in exact rational arithmetic: the
//! normalized eigen-polynomials `q_s`, the moments of `u11`, Haar-state
//! moments via Weingarten calculus, the eigenvalues `λ_s` of a generator
//! given by a Lévy pair `(b, ν)`, and eigenspace multiplicities. Floating
//! point only appears in heat-semigroup values and spectral-dimension
//! estimates.

pub mod combinat;
pub mod error;
pub mod families;
pub mod haar;
pub mod levy;
pub mod linalg;
pub mod measures;
pub mod numeric;
pub mod ratpoly;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use families::{Family, SphereKind};
pub use ratpoly::{Poly, Rational};
pub use haar::{Pairing, Variant, Word};
pub use levy::{Generator, LevyPair};
pub use measures::LevyMeasure;
pub use spectral::{SpectralDimension, Spectrum, SpectrumEntry};
