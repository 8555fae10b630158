//! Exact computer algebra for noncommutative Hamiltonians.
//!
//! The crate implements the cyclic-word Lie bialgebra `h[V]` over a finite
//! dimensional Z/2-graded symplectic space, the deformed Chevalley-Eilenberg
//! DGLAs `Λ_{γ,ν}[V] → Λ_γ[V] → h_{≥2}[V]`, Maurer-Cartan theory with
//! characteristic classes, and the obstruction theory for lifting cyclic
//! A∞ structures to quantum A∞ structures. Everything is computed over the
//! rationals at a finite truncation; there is no floating point anywhere.
//!
//! Module map:
//!
//! * [`graded`]: parities, symplectic spaces, cyclic words and Hamiltonians.
//! * [`bialgebra`]: the necklace bracket and cobracket plus the axiom suite.
//! * [`ce`]: tensors of the symmetric algebra, the differentials `δ`, `Δ`,
//!   `d = γδ + Δ`, the Leibniz bracket, projections and the filtration.
//! * [`linalg`]: exact sparse linear algebra over enumerated bases.
//! * [`mc`]: Maurer-Cartan residuals, gauge action, `ch(x)` and the homotopy
//!   identities in the Chevalley-Eilenberg complex of the DGLA.
//! * [`obstruction`]: cyclic Hochschild cohomology, obstruction classes,
//!   lifting, extension spaces and the Künneth cross-check.
//! * [`kontsevich`]: the one-dimensional family of cyclic A∞ structures.
//! * [`cli`]: expression grammar, reports and command dispatch.

pub mod bialgebra;
pub mod ce;
pub mod chain;
pub mod cli;
pub mod error;
pub mod graded;
pub mod kontsevich;
pub mod linalg;
pub mod mc;
pub mod obstruction;
pub mod par;
pub mod rational;

pub use error::{Error, Result};
pub use graded::{CyclicWord, Hamiltonian, Parity, SymplecticSpace};
pub use rational::Q;
