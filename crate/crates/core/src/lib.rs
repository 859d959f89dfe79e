//! Exact computational realization of the finite-group side of the
//! wreath-product McKay correspondence.
//!
//! Everything here is computed over exact cyclotomic scalars: no floating
//! point enters any verification path. The crate builds the finite subgroups
//! of SL₂(ℂ) as explicit matrix groups, computes their character tables,
//! derives the affine ADE Cartan data attached to the virtual character
//! ξ = 2γ₀ − π, develops the character theory of the wreath products
//! Γₙ = Γ≀Sₙ, and verifies the identity between the virtual character
//! λ(ℂ^{kn}) of Γₙ and the lifted character η_n(λ(π)), together with the
//! Fock-space algebra and the invariant-ring generator lemma that accompany
//! these structures.
//!
//! Module map:
//!
//! - [`exactnum`] — arbitrary-precision rationals and exact arithmetic in
//!   cyclotomic fields ℚ(ζ_N)
//! - [`linalg`] — exact dense linear algebra over cyclotomic scalars
//!   (determinants, row reduction, characteristic polynomials)
//! - [`grouplib`] — the catalog of finite SL₂(ℂ) subgroups, conjugacy
//!   classes, and character tables
//! - [`mckay`] — ξ, the Cartan matrix A, the weighted bilinear form on
//!   R(Γ), affine ADE type recognition
//! - [`wreath`] — conjugacy types of Γₙ, the characters η_n/ε_n, induction,
//!   wreath irreducible characters, and the weighted Gram matrix
//! - [`exterior`] — the Γₙ action on ℂ^{kn} and the alternating-sum virtual
//!   character λ(ℂ^{kn})
//! - [`fock`] — the graded space ⊕ₙ R(Γₙ) in its power-sum polynomial
//!   model: Hopf structure, Heisenberg operators, Adams operations
//! - [`invariants`] — degree-truncated verification that the Γₙ-invariant
//!   polynomials are generated by power-sum lifts of Γ-invariants

pub mod exactnum;
pub mod exterior;
pub mod fock;
pub mod grouplib;
pub mod invariants;
pub mod linalg;
pub mod mckay;
pub mod wreath;

pub use exactnum::{Cyclotomic, Rational};
