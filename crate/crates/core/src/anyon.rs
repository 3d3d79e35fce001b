//! Anyonic vector spaces: `Z_n`-graded spaces with the braiding induced by
//! the standard quasitriangular structure on the group algebra of `Z_n`.
//!
//! A homogeneous basis vector `v` of degree `|v|` transforms under the grading
//! group generator as `g . v = zeta^{|v|} v`, and two homogeneous vectors
//! braid as `psi(v (x) w) = zeta^{|v||w|} w (x) v`. [`braid_from_r`] computes
//! the same braiding through the R-matrix `R = (1/n) sum_{a,b} zeta^{-ab}
//! g^a (x) g^b`, summing all `n^2` terms exactly; it exists as an independent
//! cross-check of [`braid_pair`].
//!
//! The focused case `n = 2 m^2` with all degrees divisible by `m` is the one
//! where the braiding is a symmetry (`psi^2 = id`); [`psi_squared_is_identity`]
//! reports a witness degree pair when that fails.

use crate::scalar::{Cyclo, CycloCtx};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnyonError {
    #[error("focus parameter m must be at least 2")]
    FocusTooSmall,
    #[error("focus parameters require n = 2*m^2, got n = {n}, m = {m}")]
    FocusMismatch { n: u32, m: u32 },
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
}

/// A named homogeneous basis vector with its `Z_n` degree (already reduced
/// mod n).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreedGenerator {
    name: String,
    degree: u32,
}

impl DegreedGenerator {
    pub fn new(name: impl Into<String>, degree: u32, n: u32) -> Self {
        DegreedGenerator {
            name: name.into(),
            degree: degree % n,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }
}

/// A finite-dimensional `Z_n`-graded vector space given by a homogeneous
/// basis with unique names.
#[derive(Clone, Debug, PartialEq)]
pub struct AnyonObject {
    ctx: CycloCtx,
    basis: Vec<DegreedGenerator>,
}

impl AnyonObject {
    pub fn new(ctx: CycloCtx, basis: Vec<DegreedGenerator>) -> Result<Self, AnyonError> {
        let mut seen = BTreeSet::new();
        for g in &basis {
            debug_assert!(g.degree < ctx.n());
            if !seen.insert(g.name.clone()) {
                return Err(AnyonError::DuplicateName(g.name.clone()));
            }
        }
        Ok(AnyonObject { ctx, basis })
    }

    pub fn ctx(&self) -> &CycloCtx {
        &self.ctx
    }

    pub fn basis(&self) -> &[DegreedGenerator] {
        &self.basis
    }

    pub fn degrees(&self) -> BTreeSet<u32> {
        self.basis.iter().map(|g| g.degree).collect()
    }
}

/// The focused grading parameters: `n = 2 m^2` with `m > 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FocusParams {
    n: u32,
    m: u32,
}

impl FocusParams {
    pub fn new(n: u32, m: u32) -> Result<Self, AnyonError> {
        if m < 2 {
            return Err(AnyonError::FocusTooSmall);
        }
        if n != 2 * m * m {
            return Err(AnyonError::FocusMismatch { n, m });
        }
        Ok(FocusParams { n, m })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }
}

/// Action of the grading group element `g^a` on a homogeneous vector:
/// `g^a . v = zeta^{a |v|} v`.
pub fn group_action(ctx: &CycloCtx, a: i64, v: &DegreedGenerator) -> (Cyclo, DegreedGenerator) {
    (ctx.root(a * v.degree as i64), v.clone())
}

/// The braiding coefficient `zeta^{d1 d2}` for a pair of degrees.
pub fn braid_coefficient(ctx: &CycloCtx, d1: u32, d2: u32) -> Cyclo {
    let e = (d1 as u64 * d2 as u64) % ctx.n() as u64;
    ctx.root(e as i64)
}

/// The braiding on a pair of homogeneous vectors:
/// `psi(v (x) w) = zeta^{|v||w|} (w (x) v)`.
pub fn braid_pair(
    ctx: &CycloCtx,
    v: &DegreedGenerator,
    w: &DegreedGenerator,
) -> (Cyclo, (DegreedGenerator, DegreedGenerator)) {
    (
        braid_coefficient(ctx, v.degree, w.degree),
        (w.clone(), v.clone()),
    )
}

/// The braiding computed through the quasitriangular structure: flip composed
/// with the action of `R = (1/n) sum_{a,b} zeta^{-ab} g^a (x) g^b`, i.e.
/// `psi(v (x) w) = (1/n) sum_{a,b} zeta^{-ab} (g^b . w) (x) (g^a . v)`.
///
/// The double sum is evaluated exactly, collecting the `n^2` root-power
/// exponents before a single reduction; no analytic simplification of the sum
/// is used, which keeps this an independent route to [`braid_pair`].
pub fn braid_from_r(
    ctx: &CycloCtx,
    v: &DegreedGenerator,
    w: &DegreedGenerator,
) -> (Cyclo, (DegreedGenerator, DegreedGenerator)) {
    let n = ctx.n() as i64;
    let mut counts = vec![0i64; ctx.n() as usize];
    for a in 0..n {
        for b in 0..n {
            let e = (a * v.degree as i64 + b * w.degree as i64 - a * b).rem_euclid(n);
            counts[e as usize] += 1;
        }
    }
    let mut acc = ctx.zero();
    for (e, count) in counts.iter().enumerate() {
        if *count != 0 {
            let term = ctx.scale(
                &ctx.root(e as i64),
                &num_rational::BigRational::from_integer(num_bigint::BigInt::from(*count)),
            );
            acc = ctx.add(&acc, &term);
        }
    }
    let n_inv = num_rational::BigRational::new(
        num_bigint::BigInt::from(1),
        num_bigint::BigInt::from(ctx.n()),
    );
    (ctx.scale(&acc, &n_inv), (w.clone(), v.clone()))
}

/// Whether every basis degree of `obj` is a multiple of the focus parameter
/// `m`.
pub fn is_focused(obj: &AnyonObject, fp: &FocusParams) -> bool {
    assert_eq!(obj.ctx.n(), fp.n, "object and focus parameters disagree on n");
    obj.basis.iter().all(|g| g.degree % fp.m == 0)
}

/// Result of checking `psi^2 = id` on all degree pairs of two objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiSquaredCheck {
    pub holds: bool,
    /// First degree pair (in sorted order) where `zeta^{2 d1 d2} != 1`.
    pub witness: Option<(u32, u32)>,
}

/// Check that the braiding squares to the identity on `A (x) B`, i.e.
/// `zeta^{2 d1 d2} = 1` for every degree pair `(d1, d2)` of the two bases.
pub fn psi_squared_is_identity(ctx: &CycloCtx, a: &AnyonObject, b: &AnyonObject) -> PsiSquaredCheck {
    let one = ctx.one();
    for d1 in a.degrees() {
        for d2 in b.degrees() {
            let e = (2 * d1 as u64 * d2 as u64) % ctx.n() as u64;
            if ctx.root(e as i64) != one {
                return PsiSquaredCheck {
                    holds: false,
                    witness: Some((d1, d2)),
                };
            }
        }
    }
    PsiSquaredCheck {
        holds: true,
        witness: None,
    }
}
