//! The TOML configuration schema and its validation.
//!
//! A config describes either a presented algebra (`mode = "hopf"`) or a
//! quantum Lie algebra (`mode = "qla"`):
//!
//! ```toml
//! n = 18
//! m = 3            # optional focus parameter; requires n = 2*m^2
//! mode = "qla"     # optional; inferred from the fields present
//!
//! [[generators]]
//! name = "x"
//! degree = 3
//!
//! [[brackets]]     # qla mode: [left, right] = sum of result terms
//! left = "x"
//! right = "x"
//! result = [{ gen = "a", coeff = "1" }]
//!
//! [relations]      # hopf mode: generators whose square is zero
//! nilpotent = ["x"]
//!
//! [character]      # qla mode: a functional vanishing on brackets
//! b = "1/2"
//! ```
//!
//! Scalar literals use the syntax of [`CycloCtx::parse`]: sums of `p`,
//! `p/q`, `z^k` and `p/q*z^k`. Parsing validates the whole file and reports
//! every problem it finds, each tagged with the field that carries it.

use anyonic_core::presets::{PresetDef, PresetKind};
use anyonic_core::qla::{QlaError, QuantumLieAlgebra};
use anyonic_core::scalar::ScalarError;
use anyonic_core::{
    Character, Cyclo, CycloCtx, DegreedGenerator, FocusParams, HopfData, Presentation,
};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Hopf,
    Qla,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Hopf => write!(f, "hopf"),
            Mode::Qla => write!(f, "qla"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketTerm {
    pub gen: String,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketSpec {
    pub left: String,
    pub right: String,
    pub result: Vec<BracketTerm>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Relations {
    #[serde(default)]
    pub nilpotent: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub n: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
    #[serde(default)]
    pub generators: Vec<GeneratorSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub brackets: Vec<BracketSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relations: Option<Relations>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub character: Option<BTreeMap<String, String>>,
}

/// One validation problem, tagged with the config field that carries it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigIssue {
    pub field: String,
    pub message: String,
}

impl fmt::Display for ConfigIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

#[derive(Debug)]
pub enum ConfigError {
    /// TOML-level failure; the message carries line/column.
    Syntax(String),
    /// Schema-level failures, all of them.
    Invalid(Vec<ConfigIssue>),
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::Syntax(message) => write!(f, "config syntax: {message}"),
            ConfigError::Invalid(issues) => {
                writeln!(f, "invalid config:")?;
                for issue in issues {
                    writeln!(f, "  {issue}")?;
                }
                Ok(())
            }
        }
    }
}

impl std::error::Error for ConfigError {}

/// Parse and fully validate a config file.
pub fn parse_config(text: &str) -> Result<Config, ConfigError> {
    let config: Config =
        toml::from_str(text).map_err(|e| ConfigError::Syntax(e.to_string()))?;
    let issues = config.validate();
    if issues.is_empty() {
        Ok(config)
    } else {
        Err(ConfigError::Invalid(issues))
    }
}

impl Config {
    /// The declared mode, or the one the fields imply: brackets or a
    /// character make it a quantum Lie algebra, otherwise it is an algebra.
    pub fn effective_mode(&self) -> Mode {
        self.mode.unwrap_or({
            if !self.brackets.is_empty() || self.character.is_some() {
                Mode::Qla
            } else {
                Mode::Hopf
            }
        })
    }

    /// Every schema violation in the file, tagged by field.
    pub fn validate(&self) -> Vec<ConfigIssue> {
        let mut issues = Vec::new();
        if self.n < 2 {
            issues.push(ConfigIssue {
                field: "n".into(),
                message: format!("n must be at least 2, got {}", self.n),
            });
            return issues;
        }
        let ctx = CycloCtx::new(self.n).expect("n >= 2 is a valid modulus");
        let mut push = |field: String, message: String| issues.push(ConfigIssue { field, message });

        if let Some(m) = self.m {
            if let Err(e) = FocusParams::new(self.n, m) {
                push("m".into(), e.to_string());
            }
        }

        let mut degrees: BTreeMap<&str, u32> = BTreeMap::new();
        for (idx, g) in self.generators.iter().enumerate() {
            if degrees.insert(&g.name, g.degree % self.n).is_some() {
                push(
                    format!("generators[{idx}].name"),
                    format!("duplicate generator `{}`", g.name),
                );
            }
        }

        let mode = self.effective_mode();
        if mode == Mode::Hopf {
            if !self.brackets.is_empty() {
                push("brackets".into(), "brackets require mode = \"qla\"".into());
            }
            if self.character.is_some() {
                push("character".into(), "a character requires mode = \"qla\"".into());
            }
        } else if self.relations.is_some() {
            push(
                "relations".into(),
                "nilpotent relations require mode = \"hopf\"; in qla mode the \
                 enveloping algebra derives its own relations"
                    .into(),
            );
        }

        let mut seen_pairs: BTreeSet<(&str, &str)> = BTreeSet::new();
        for (idx, b) in self.brackets.iter().enumerate() {
            let mut pair_degree = None;
            for (side, name) in [("left", &b.left), ("right", &b.right)] {
                match degrees.get(name.as_str()) {
                    None => push(
                        format!("brackets[{idx}].{side}"),
                        format!("unknown generator `{name}`"),
                    ),
                    Some(d) => {
                        pair_degree = match pair_degree {
                            None => Some(*d),
                            Some(p) => Some((p + d) % self.n),
                        }
                    }
                }
            }
            if !seen_pairs.insert((&b.left, &b.right)) {
                push(
                    format!("brackets[{idx}]"),
                    format!("duplicate bracket [{}, {}]", b.left, b.right),
                );
            }
            for (tidx, term) in b.result.iter().enumerate() {
                match degrees.get(term.gen.as_str()) {
                    None => push(
                        format!("brackets[{idx}].result[{tidx}].gen"),
                        format!("unknown generator `{}`", term.gen),
                    ),
                    Some(d) => {
                        // A bracket is degree-additive: [u, v] lives in
                        // degree |u| + |v|.
                        if let Some(expected) = pair_degree.filter(|e| e != d) {
                            push(
                                format!("brackets[{idx}].result[{tidx}].gen"),
                                format!(
                                    "degree additivity violated: `{}` has degree {d}, \
                                     but [{}, {}] has degree {expected}",
                                    term.gen, b.left, b.right
                                ),
                            );
                        }
                    }
                }
                if let Err(e) = ctx.parse(&term.coeff) {
                    push(
                        format!("brackets[{idx}].result[{tidx}].coeff"),
                        format!("malformed scalar literal `{}`: {e}", term.coeff),
                    );
                }
            }
        }

        if let Some(relations) = &self.relations {
            for (idx, name) in relations.nilpotent.iter().enumerate() {
                if !degrees.contains_key(name.as_str()) {
                    push(
                        format!("relations.nilpotent[{idx}]"),
                        format!("unknown generator `{name}`"),
                    );
                }
            }
        }

        if let Some(character) = &self.character {
            for (name, literal) in character {
                match degrees.get(name.as_str()) {
                    None => push(
                        format!("character.{name}"),
                        format!("unknown generator `{name}`"),
                    ),
                    Some(d) if *d != 0 => push(
                        format!("character.{name}"),
                        format!("a character is supported on degree 0 only; `{name}` has degree {d}"),
                    ),
                    Some(_) => {}
                }
                if let Err(e) = ctx.parse(literal) {
                    push(
                        format!("character.{name}"),
                        format!("malformed scalar literal `{literal}`: {e}"),
                    );
                }
            }
        }

        issues
    }

    pub fn context(&self) -> CycloCtx {
        CycloCtx::new(self.n).expect("validated config")
    }

    pub fn focus(&self) -> Option<FocusParams> {
        self.m
            .map(|m| FocusParams::new(self.n, m).expect("validated config"))
    }

    pub fn degreed_generators(&self) -> Vec<DegreedGenerator> {
        self.generators
            .iter()
            .map(|g| DegreedGenerator::new(g.name.clone(), g.degree, self.n))
            .collect()
    }

    /// The presented algebra. Only meaningful in hopf mode.
    pub fn presentation(&self) -> anyhow::Result<Presentation> {
        let nilpotent: Vec<&str> = self
            .relations
            .iter()
            .flat_map(|r| r.nilpotent.iter().map(String::as_str))
            .collect();
        Ok(Presentation::braided_commutative(
            self.context(),
            self.degreed_generators(),
            &nilpotent,
        )?)
    }

    pub fn hopf(&self) -> anyhow::Result<HopfData> {
        Ok(HopfData::primitive(self.presentation()?))
    }

    /// The quantum Lie algebra. Only meaningful in qla mode.
    pub fn quantum_lie(&self) -> Result<QuantumLieAlgebra, QlaError> {
        let ctx = self.context();
        let parsed: Vec<((&str, &str), Vec<(&str, Cyclo)>)> = self
            .brackets
            .iter()
            .map(|b| {
                (
                    (b.left.as_str(), b.right.as_str()),
                    b.result
                        .iter()
                        .map(|t| {
                            (
                                t.gen.as_str(),
                                ctx.parse(&t.coeff).expect("validated config"),
                            )
                        })
                        .collect(),
                )
            })
            .collect();
        QuantumLieAlgebra::new(ctx, self.focus(), self.degreed_generators(), &parsed)
    }

    /// The character declared in the config, or the zero character.
    pub fn character_for(&self, qla: &QuantumLieAlgebra) -> Result<Character, QlaError> {
        let Some(map) = &self.character else {
            return Ok(Character::zero(qla));
        };
        let ctx = qla.ctx();
        let parsed: Vec<(&str, Cyclo)> = map
            .iter()
            .map(|(name, literal)| -> Result<_, ScalarError> {
                Ok((name.as_str(), ctx.parse(literal)?))
            })
            .collect::<Result<_, _>>()
            .expect("validated config");
        Character::new(qla, &parsed)
    }

    /// The equivalent config for a built-in preset.
    pub fn from_preset(def: &PresetDef) -> Config {
        Config {
            n: def.n(),
            m: Some(def.m()),
            mode: Some(match def.kind() {
                PresetKind::Hopf => Mode::Hopf,
                PresetKind::Qla => Mode::Qla,
            }),
            generators: def
                .generators()
                .iter()
                .map(|(name, degree)| GeneratorSpec {
                    name: name.clone(),
                    degree: *degree,
                })
                .collect(),
            brackets: def
                .brackets()
                .iter()
                .map(|((left, right), result)| BracketSpec {
                    left: left.clone(),
                    right: right.clone(),
                    result: result
                        .iter()
                        .map(|(gen, coeff)| BracketTerm {
                            gen: gen.clone(),
                            coeff: coeff.to_string(),
                        })
                        .collect(),
                })
                .collect(),
            relations: if def.nilpotent().is_empty() {
                None
            } else {
                Some(Relations {
                    nilpotent: def.nilpotent().to_vec(),
                })
            },
            character: None,
        }
    }

    /// Canonical serialization; the digest and the round-trip test use this.
    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }
}
