//! Exact computer algebra for anyonic vector spaces and the braided Hopf
//! algebras built on them.
//!
//! Everything is computed symbolically over the cyclotomic field `Q(zeta_n)`;
//! no floating point enters any algebraic kernel. The modules build on each
//! other bottom-up:
//!
//! * [`scalar`] - the field `Q(zeta_n)` as `Q[x]/(Phi_n)` with exact rational
//!   coefficients.
//! * [`anyon`] - `Z_n`-graded vector spaces, the group action and the
//!   braiding, including the quasitriangular R-matrix route.
//! * [`algebra`] - finitely presented graded algebras with braided swap and
//!   power rules, normalised by a terminating rewriting system.
//! * [`hopf`] - the braided Hopf structure (coproduct, counit, antipode) on a
//!   presentation with primitive generators, and its axiom verifier.
//! * [`qla`] - quantum Lie algebras: bracket tables, the side-condition
//!   checks, and the enveloping-algebra presentation.
//! * [`homology`] - the braided exterior algebra and the graded
//!   Chevalley-Eilenberg-type complex with exact homology dimensions.
//! * [`hp`] - periodic tables assembled from homology dimensions by parity.
//! * [`presets`] - the built-in example families, by name.

pub mod algebra;
pub mod anyon;
pub mod homology;
pub mod hopf;
pub mod hp;
pub(crate) mod linalg;
pub mod presets;
pub mod qla;
pub mod scalar;

pub use algebra::{AlgElement, PowerRule, Presentation, Strategy, SwapRule, Word};
pub use anyon::{AnyonObject, DegreedGenerator, FocusParams};
pub use homology::{BoundaryMatrix, ChainSpace, HomologyTable, WedgeMonomial};
pub use hopf::{HopfAxiomReport, HopfData, TensorSquareElement};
pub use hp::{assemble_hp, focusing_predicate, HpTable};
pub use presets::{preset, PresetDef, PresetKind};
pub use qla::{Character, Envelope, QuantumLieAlgebra};
pub use scalar::{Cyclo, CycloCtx};
