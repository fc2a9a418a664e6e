//! Exact-arithmetic invariants of projective varieties and explicit bounds
//! on the torsion of their divisor class groups modulo algebraic equivalence.
//!
//! Given homogeneous generators of X in P^r, the crate computes Hilbert
//! series, Hilbert polynomials, dimension/codimension/degree, Gotzmann
//! decompositions, and evaluates every closed-form torsion bound together
//! with the sharper chain obtained by substituting exactly computed
//! quantities. The `verify` module re-checks the inequality chains behind
//! those bounds over parameter grids with directed rounding, so every
//! "holds" is a machine certificate.

pub mod bounds;
pub mod dyadic;
pub mod gotzmann;
pub mod groebner;
pub mod hilbert;
pub mod poly;
pub mod tower;
pub mod verify;

pub use bounds::{BoundReport, ClosedFormBounds, PipelineOptions, SharpenedChain};
pub use dyadic::{Dir, Dyadic, RealBound};
pub use gotzmann::{GotzmannDecomposition, HoaBoundInput};
pub use groebner::{GroebnerBasis, MonomialIdealGens, ReductionBudget, Smoothness};
pub use hilbert::{HilbertPolynomial, HilbertSeriesNumerator, VarietyInvariants};
pub use poly::{IdealPresentation, Monomial, MonomialOrder, Polynomial};
pub use tower::{TowerCmp, TowerContext, TowerNumber};
