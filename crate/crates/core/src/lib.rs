//! Half-quantum groups u_q^+ at a root of unity, presented as admissible
//! quotients of the path algebra of a Cayley quiver.
//!
//! Module map:
//!
//! - [`cyclotomic`]: exact scalars in Q(ζ_n) and modular specializations.
//! - [`cartan`]: symmetric Cartan matrices, positive roots, Smith normal form.
//! - [`quiver`]: Cayley quivers of (Z/nZ)^t, separated quivers, graph classifier.
//! - [`algebra`]: path-algebra elements and the graded quotient engine.
//! - [`hopf`]: comultiplication, counit, crossed tensor square and its flip automorphism.
//! - [`fourier`]: the transform between the K/E presentation and the path algebra.
//! - [`reptype`]: representation-type assembly with machine-checked evidence.

pub mod algebra;
pub mod cartan;
pub mod cyclotomic;
pub mod error;
pub mod fourier;
pub mod hopf;
pub mod linalg;
pub mod quiver;
pub mod reptype;

pub use algebra::{AlgebraElement, GradedQuotient, IdealGenerators, LinComb, Presentation};
pub use cartan::{CartanMatrix, RootSystemData};
pub use cyclotomic::{CyclotomicField, Field, PrimeField};
pub use error::{Error, Result, ScalarError};
pub use quiver::{Path, Quiver};
