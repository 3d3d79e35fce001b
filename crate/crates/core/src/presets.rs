//! Built-in example families, usable by name.
//!
//! Fixed presets at `n = 18` (`m = 3`):
//!
//! * `z18-free` - generators x, y, z of degrees 3, 9, 15; pairs anticommute,
//!   squares are free.
//! * `z18-nilpotent` - the same with `x^2 = y^2 = z^2 = 0`.
//! * `z18-nonabelian` - the quantum Lie algebra on x, a, y, b, z, c of
//!   degrees 3, 6, 9, 0, 15, 12 with `[x,x] = a`, `[y,y] = b`, `[z,z] = c`.
//! * `z18-abelian` - the quantum Lie algebra on x, y, z with zero bracket.
//!
//! Parametric families for any odd `m > 1` at `n = 2 m^2`, written
//! `z2m2-free(m)`, `z2m2-nilpotent(m)`, `z2m2-nonabelian(m)` and
//! `z2m2-abelian(m)`: generators `x_i` in degrees `i m` for odd
//! `i = 1, 3, ..., 2m - 1`, the nonabelian one interleaving `a_i` in degrees
//! `2 i m` with `[x_i, x_i] = a_i`.
//!
//! Each quantum-Lie preset is paired with the algebra preset its enveloping
//! algebra reproduces: `z18-nonabelian` with `z18-free`, `z18-abelian` with
//! `z18-nilpotent`, and likewise for the parametric families.

use crate::algebra::{Presentation, PresentationError};
use crate::anyon::{AnyonError, AnyonObject, DegreedGenerator, FocusParams};
use crate::hopf::HopfData;
use crate::qla::{QlaError, QuantumLieAlgebra};
use crate::scalar::{CycloCtx, ScalarError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PresetError {
    #[error("unknown preset `{0}`")]
    Unknown(String),
    #[error("preset `{name}`: {reason}")]
    BadParameter { name: String, reason: String },
}

/// Whether a preset describes an algebra presentation directly or a quantum
/// Lie algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PresetKind {
    Hopf,
    Qla,
}

/// Plain data describing one preset; conversion methods build the actual
/// objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresetDef {
    name: String,
    kind: PresetKind,
    n: u32,
    m: u32,
    generators: Vec<(String, u32)>,
    nilpotent: Vec<String>,
    /// `((left, right), [(target, integer coefficient)])`.
    brackets: Vec<((String, String), Vec<(String, i64)>)>,
    paired: Option<String>,
}

/// The fixed preset names; the parametric families additionally accept
/// `z2m2-free(m)`, `z2m2-nilpotent(m)`, `z2m2-nonabelian(m)` and
/// `z2m2-abelian(m)` for odd `m > 1`.
pub const FIXED_PRESETS: [&str; 4] = [
    "z18-free",
    "z18-nilpotent",
    "z18-nonabelian",
    "z18-abelian",
];

/// Look up a preset by name.
pub fn preset(name: &str) -> Result<PresetDef, PresetError> {
    match name {
        "z18-free" => Ok(z18_algebra("z18-free", false)),
        "z18-nilpotent" => Ok(z18_algebra("z18-nilpotent", true)),
        "z18-nonabelian" => Ok(z18_nonabelian()),
        "z18-abelian" => Ok(z18_abelian()),
        _ => parametric(name),
    }
}

fn z18_generators() -> Vec<(String, u32)> {
    vec![
        ("x".to_string(), 3),
        ("y".to_string(), 9),
        ("z".to_string(), 15),
    ]
}

fn z18_algebra(name: &str, nilpotent: bool) -> PresetDef {
    PresetDef {
        name: name.to_string(),
        kind: PresetKind::Hopf,
        n: 18,
        m: 3,
        generators: z18_generators(),
        nilpotent: if nilpotent {
            vec!["x".into(), "y".into(), "z".into()]
        } else {
            Vec::new()
        },
        brackets: Vec::new(),
        paired: None,
    }
}

fn z18_nonabelian() -> PresetDef {
    PresetDef {
        name: "z18-nonabelian".to_string(),
        kind: PresetKind::Qla,
        n: 18,
        m: 3,
        generators: vec![
            ("x".to_string(), 3),
            ("a".to_string(), 6),
            ("y".to_string(), 9),
            ("b".to_string(), 0),
            ("z".to_string(), 15),
            ("c".to_string(), 12),
        ],
        nilpotent: Vec::new(),
        brackets: vec![
            (("x".into(), "x".into()), vec![("a".into(), 1)]),
            (("y".into(), "y".into()), vec![("b".into(), 1)]),
            (("z".into(), "z".into()), vec![("c".into(), 1)]),
        ],
        paired: Some("z18-free".to_string()),
    }
}

fn z18_abelian() -> PresetDef {
    PresetDef {
        name: "z18-abelian".to_string(),
        kind: PresetKind::Qla,
        n: 18,
        m: 3,
        generators: z18_generators(),
        nilpotent: Vec::new(),
        brackets: Vec::new(),
        paired: Some("z18-nilpotent".to_string()),
    }
}

/// Parse `z2m2-<variant>(<m>)`.
fn parametric(name: &str) -> Result<PresetDef, PresetError> {
    let unknown = || PresetError::Unknown(name.to_string());
    let rest = name.strip_prefix("z2m2-").ok_or_else(unknown)?;
    let open = rest.find('(').ok_or_else(unknown)?;
    let variant = &rest[..open];
    let arg = rest[open..]
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(unknown)?;
    if !matches!(variant, "free" | "nilpotent" | "nonabelian" | "abelian") {
        return Err(unknown());
    }
    let m: u32 = arg.parse().map_err(|_| PresetError::BadParameter {
        name: name.to_string(),
        reason: format!("`{arg}` is not a positive integer"),
    })?;
    if m < 2 || m % 2 == 0 {
        return Err(PresetError::BadParameter {
            name: name.to_string(),
            reason: format!("m = {m}; these families need an odd m greater than 1"),
        });
    }
    let n = 2 * m * m;
    let odd_range = (1..2 * m).step_by(2);
    let mut generators = Vec::new();
    let mut nilpotent = Vec::new();
    let mut brackets = Vec::new();
    for i in odd_range {
        let x = format!("x{i}");
        generators.push((x.clone(), i * m));
        match variant {
            "nilpotent" => nilpotent.push(x),
            "nonabelian" => {
                let a = format!("a{i}");
                generators.push((a.clone(), 2 * i * m % n));
                brackets.push(((x.clone(), x), vec![(a, 1)]));
            }
            _ => {}
        }
    }
    let (kind, paired) = match variant {
        "free" | "nilpotent" => (PresetKind::Hopf, None),
        "nonabelian" => (PresetKind::Qla, Some(format!("z2m2-free({m})"))),
        _ => (PresetKind::Qla, Some(format!("z2m2-nilpotent({m})"))),
    };
    Ok(PresetDef {
        name: name.to_string(),
        kind,
        n,
        m,
        generators,
        nilpotent,
        brackets,
        paired,
    })
}

impl PresetDef {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> PresetKind {
        self.kind
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn generators(&self) -> &[(String, u32)] {
        &self.generators
    }

    pub fn nilpotent(&self) -> &[String] {
        &self.nilpotent
    }

    pub fn brackets(&self) -> &[((String, String), Vec<(String, i64)>)] {
        &self.brackets
    }

    /// The algebra preset this quantum-Lie preset envelopes to, if any.
    pub fn paired_preset(&self) -> Option<&str> {
        self.paired.as_deref()
    }

    pub fn context(&self) -> Result<CycloCtx, ScalarError> {
        CycloCtx::new(self.n)
    }

    pub fn focus(&self) -> Result<FocusParams, AnyonError> {
        FocusParams::new(self.n, self.m)
    }

    fn degreed_generators(&self) -> Vec<DegreedGenerator> {
        self.generators
            .iter()
            .map(|(name, degree)| DegreedGenerator::new(name.clone(), *degree, self.n))
            .collect()
    }

    /// The generators as a graded vector space (for braiding checks).
    pub fn anyon_object(&self) -> Result<AnyonObject, AnyonError> {
        let ctx = self.context().expect("preset moduli are valid");
        AnyonObject::new(ctx, self.degreed_generators())
    }

    /// The presented algebra, for presets of kind [`PresetKind::Hopf`].
    pub fn presentation(&self) -> Option<Result<Presentation, PresentationError>> {
        matches!(self.kind, PresetKind::Hopf).then(|| {
            let ctx = self.context().expect("preset moduli are valid");
            let nilpotent: Vec<&str> = self.nilpotent.iter().map(String::as_str).collect();
            Presentation::braided_commutative(ctx, self.degreed_generators(), &nilpotent)
        })
    }

    /// The algebra with its braided Hopf structure, for presets of kind
    /// [`PresetKind::Hopf`].
    pub fn hopf(&self) -> Option<Result<HopfData, PresentationError>> {
        self.presentation()
            .map(|p| p.map(HopfData::primitive))
    }

    /// The quantum Lie algebra, for presets of kind [`PresetKind::Qla`].
    pub fn quantum_lie(&self) -> Option<Result<QuantumLieAlgebra, QlaError>> {
        matches!(self.kind, PresetKind::Qla).then(|| {
            let ctx = self.context().expect("preset moduli are valid");
            let entries: Vec<((&str, &str), Vec<(&str, crate::scalar::Cyclo)>)> = self
                .brackets
                .iter()
                .map(|((l, r), value)| {
                    (
                        (l.as_str(), r.as_str()),
                        value
                            .iter()
                            .map(|(t, c)| (t.as_str(), ctx.from_int(*c)))
                            .collect(),
                    )
                })
                .collect();
            QuantumLieAlgebra::new(
                ctx.clone(),
                Some(self.focus().expect("preset moduli are valid")),
                self.degreed_generators(),
                &entries,
            )
        })
    }
}
