//! One function per CLI task, each producing a [`Report`].
//!
//! Failed checks are part of a report (the process then exits 1); malformed
//! or mode-mismatched input aborts with an error instead (exit 2).

use crate::config::{Config, Mode};
use crate::report::Report;
use anyhow::{bail, Context};
use anyonic_core::anyon::{braid_coefficient, braid_from_r, braid_pair, is_focused};
use anyonic_core::homology::{boundary, homology_dims, HomologyError, HomologyTable};
use anyonic_core::hp::{assemble_hp, focusing_predicate};
use anyonic_core::qla::{EnvelopeError, QuantumLieAlgebra};
use anyonic_core::{Character, Cyclo, DegreedGenerator, HopfData, PowerRule, Presentation};
use std::collections::BTreeMap;

/// A fully validated unit of work: the object description, the input digest
/// that goes in the report, and the character file, if one was given.
pub struct Job {
    pub config: Config,
    pub digest: String,
    pub delta_file: Option<BTreeMap<String, String>>,
}

impl Job {
    fn quantum_lie(&self) -> anyhow::Result<QuantumLieAlgebra> {
        if self.config.effective_mode() != Mode::Qla {
            bail!(
                "this task needs a quantum Lie algebra; the input is a plain \
                 algebra (mode = \"hopf\")"
            );
        }
        self.config
            .quantum_lie()
            .context("building the quantum Lie algebra")
    }

    /// The character to twist with: the `--delta` file if given, else the
    /// one in the config, else zero. Returns any precedence warning.
    fn resolve_delta(
        &self,
        qla: &QuantumLieAlgebra,
    ) -> anyhow::Result<(Character, Option<String>)> {
        match &self.delta_file {
            Some(map) => {
                let ctx = qla.ctx();
                let mut parsed: Vec<(&str, Cyclo)> = Vec::new();
                for (name, literal) in map {
                    let value = ctx
                        .parse(literal)
                        .with_context(|| format!("character value for `{name}`"))?;
                    parsed.push((name, value));
                }
                let delta = Character::new(qla, &parsed).context("invalid character")?;
                let warning = self.config.character.is_some().then(|| {
                    "the --delta file overrides the character in the config".to_string()
                });
                Ok((delta, warning))
            }
            None => Ok((
                self.config
                    .character_for(qla)
                    .context("invalid character in the config")?,
                None,
            )),
        }
    }

    fn require_focus(&self) -> anyhow::Result<u32> {
        self.config
            .m
            .ok_or_else(|| anyhow::anyhow!("this task needs the focus parameter m in the input"))
    }
}

fn render_coeff(c: &Cyclo) -> String {
    let rendered = c.to_string();
    if rendered.contains(['+', '-', ' ']) {
        format!("({rendered})")
    } else {
        rendered
    }
}

/// Both braiding routes, involutivity, and (when `m` is given) the focus
/// check, over the degrees the input declares.
pub fn check_braiding(job: &Job) -> anyhow::Result<Report> {
    let mut report = Report::new("check-braiding", job.digest.clone());
    let config = &job.config;
    let ctx = config.context();
    let object = anyonic_core::AnyonObject::new(ctx.clone(), config.degreed_generators())
        .context("building the graded space")?;
    let degrees: Vec<u32> = object.degrees().into_iter().collect();

    let mut route_witness = None;
    for &d1 in &degrees {
        for &d2 in &degrees {
            let v = DegreedGenerator::new("v", d1, config.n);
            let w = DegreedGenerator::new("w", d2, config.n);
            if braid_from_r(&ctx, &v, &w) != braid_pair(&ctx, &v, &w) {
                route_witness = Some(format!("({d1}, {d2})"));
            }
        }
    }
    report.check("braid-route-consistency", route_witness.is_none(), route_witness);

    let involutive = anyonic_core::anyon::psi_squared_is_identity(&ctx, &object, &object);
    report.check(
        "braiding-involutive",
        involutive.holds,
        involutive.witness.map(|(d1, d2)| format!("({d1}, {d2})")),
    );

    match config.focus() {
        Some(fp) => {
            let unfocused = config
                .generators
                .iter()
                .find(|g| (g.degree % config.n) % fp.m() != 0);
            report.check(
                "focused-degrees",
                unfocused.is_none(),
                unfocused.map(|g| format!("{} (degree {})", g.name, g.degree % config.n)),
            );
            debug_assert_eq!(unfocused.is_none(), is_focused(&object, &fp));
        }
        None => report.warn("no focus parameter m given; focused-degrees not checked"),
    }

    let rows = degrees
        .iter()
        .flat_map(|&d1| {
            let ctx = &ctx;
            degrees.iter().map(move |&d2| {
                vec![
                    d1.to_string(),
                    d2.to_string(),
                    braid_coefficient(ctx, d1, d2).to_string(),
                ]
            })
        })
        .collect();
    report.table("braid coefficients", &["|v|", "|w|", "coefficient"], rows);
    Ok(report)
}

fn hopf_input(job: &Job, report: &mut Report) -> anyhow::Result<Option<HopfData>> {
    match job.config.effective_mode() {
        Mode::Hopf => Ok(Some(job.config.hopf()?)),
        Mode::Qla => {
            report.warn(
                "input is a quantum Lie algebra; axioms are checked on its \
                 enveloping algebra",
            );
            let qla = job.quantum_lie()?;
            match qla.enveloping_presentation() {
                Ok(envelope) => Ok(Some(HopfData::primitive(envelope.presentation().clone()))),
                Err(error) => {
                    report_envelope_error(report, &error);
                    Ok(None)
                }
            }
        }
    }
}

/// Turn an enveloping-construction failure into failed checks: the input
/// parsed fine, the mathematics refused.
fn report_envelope_error(report: &mut Report, error: &EnvelopeError) {
    match error {
        EnvelopeError::ValidationFailed { check, witness } => {
            report.check(check, false, Some(witness.clone()));
        }
        EnvelopeError::BraidingNotInvolutive { left, right } => {
            report.check(
                "braiding-involutive",
                false,
                Some(format!("({left}, {right})")),
            );
        }
        EnvelopeError::LinearCollapse { name } => {
            report.check("no-linear-collapse", false, Some(name.clone()));
        }
    }
}

/// The six axiom families, preceded by a confluence check of the rewriting
/// system they rely on.
pub fn hopf_axioms(job: &Job, max_len: usize) -> anyhow::Result<Report> {
    let mut report = Report::new("hopf-axioms", job.digest.clone());
    let Some(hopf) = hopf_input(job, &mut report)? else {
        return Ok(report);
    };
    let presentation = hopf.presentation();

    let confluence = presentation.confluence_check(3);
    report.check(
        "confluence",
        confluence.confluent,
        confluence
            .failures
            .first()
            .map(|f| presentation.render_word(&f.word)),
    );

    for check in hopf.verify_axioms(max_len).checks {
        report.check(check.name, check.pass, check.witness);
    }

    let basis = presentation.basis_up_to(max_len);
    let mut by_len = BTreeMap::new();
    for word in &basis {
        *by_len.entry(word.len()).or_insert(0usize) += 1;
    }
    report.table(
        "basis words by length",
        &["length", "count"],
        by_len
            .iter()
            .map(|(len, count)| vec![len.to_string(), count.to_string()])
            .collect(),
    );
    Ok(report)
}

fn render_bracket_value(qla: &QuantumLieAlgebra, value: &BTreeMap<usize, Cyclo>) -> String {
    if value.is_empty() {
        return "0".to_string();
    }
    value
        .iter()
        .map(|(idx, c)| {
            let name = qla.basis()[*idx].name();
            if *c == qla.ctx().one() {
                name.to_string()
            } else {
                format!("{}*{}", render_coeff(c), name)
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// The quantum Lie side conditions, kernel annihilation, nested brackets,
/// and (if declared) the character.
pub fn qla_check(job: &Job) -> anyhow::Result<Report> {
    let mut report = Report::new("qla-check", job.digest.clone());
    let qla = job.quantum_lie()?;

    let validation = qla.validate();
    for check in validation.checks {
        report.check(check.name, check.pass, check.witness);
    }
    for note in validation.notes {
        report.warn(note);
    }

    let kernel = qla.check_bracket_kills_kernel();
    report.check("kernel-annihilation", kernel.pass, kernel.witness.clone());
    report.warn(kernel.note.clone());

    let (nested_pass, nested_witness) = qla.check_nested_brackets();
    report.check("nested-brackets", nested_pass, nested_witness);

    if job.config.character.is_some() || job.delta_file.is_some() {
        let character = job.resolve_delta(&qla);
        match character {
            Ok((_, warning)) => {
                report.check("character-valid", true, None);
                if let Some(warning) = warning {
                    report.warn(warning);
                }
            }
            Err(error) => report.check("character-valid", false, Some(format!("{error:#}"))),
        }
    }

    report.table(
        "kernel of (id - braiding)",
        &["quantity", "value"],
        vec![
            vec!["kernel dimension".into(), kernel.kernel_dim.to_string()],
            vec![
                "diagonal kernel vectors".into(),
                kernel.diagonal_dim.to_string(),
            ],
        ],
    );
    report.table(
        "brackets",
        &["left", "right", "value"],
        qla.bracket_pairs()
            .map(|((i, j), value)| {
                vec![
                    qla.basis()[*i].name().to_string(),
                    qla.basis()[*j].name().to_string(),
                    render_bracket_value(&qla, value),
                ]
            })
            .collect(),
    );
    Ok(report)
}

fn render_power_rule(p: &Presentation, rule: &PowerRule) -> String {
    match rule {
        PowerRule::None => "free".to_string(),
        PowerRule::Nilpotent => "square = 0".to_string(),
        PowerRule::Reduce(e) => format!("square = {}", p.render_element(e)),
    }
}

/// Construct the enveloping algebra and describe the resulting presentation.
pub fn envelope(job: &Job) -> anyhow::Result<Report> {
    let mut report = Report::new("envelope", job.digest.clone());
    let qla = job.quantum_lie()?;

    let envelope = match qla.enveloping_presentation() {
        Ok(envelope) => envelope,
        Err(error) => {
            report_envelope_error(&mut report, &error);
            return Ok(report);
        }
    };
    // Construction re-ran the side conditions and the involutivity check.
    report.check("qla-valid", true, None);
    report.check("braiding-involutive", true, None);

    let presentation = envelope.presentation();
    let confluence = presentation.confluence_check(3);
    report.check(
        "confluence",
        confluence.confluent,
        confluence
            .failures
            .first()
            .map(|f| presentation.render_word(&f.word)),
    );

    report.table(
        "generators",
        &["name", "degree", "square rule"],
        presentation
            .generators()
            .iter()
            .enumerate()
            .map(|(idx, g)| {
                vec![
                    g.name().to_string(),
                    g.degree().to_string(),
                    render_power_rule(presentation, presentation.power_rule(idx)),
                ]
            })
            .collect(),
    );
    report.table(
        "eliminated generators",
        &["name", "defined from", "definition"],
        envelope
            .eliminations()
            .iter()
            .map(|e| {
                vec![
                    e.name.clone(),
                    e.source.clone(),
                    presentation.render_element(&e.definition),
                ]
            })
            .collect(),
    );
    Ok(report)
}

/// Shared by `homology` and `hp`: compute the table, mapping a `d^2 != 0`
/// discovery to a failed check rather than an error.
fn homology_table(
    job: &Job,
    report: &mut Report,
    max_i: usize,
) -> anyhow::Result<Option<(QuantumLieAlgebra, Character, HomologyTable)>> {
    job.require_focus()?;
    let qla = job.quantum_lie()?;
    let (delta, warning) = job.resolve_delta(&qla)?;
    if let Some(warning) = warning {
        report.warn(warning);
    }
    match homology_dims(&qla, &delta, max_i) {
        Ok(table) => {
            report.check("d-squared", true, None);
            Ok(Some((qla, delta, table)))
        }
        Err(HomologyError::BoundaryNotSquaringToZero { i, witness }) => {
            report.check("d-squared", false, Some(format!("i = {i}, monomial {witness}")));
            Ok(None)
        }
        Err(error) => Err(error.into()),
    }
}

/// Homology dimensions per homological degree and grading block.
pub fn homology(job: &Job, max_i: usize) -> anyhow::Result<Report> {
    let mut report = Report::new("homology", job.digest.clone());
    let Some((qla, delta, table)) = homology_table(job, &mut report, max_i)? else {
        return Ok(report);
    };

    let mut degree_preserving = true;
    let mut witness = None;
    for i in 0..=max_i + 1 {
        let matrix = boundary(&qla, &delta, i)?;
        if !matrix.degree_preserving() {
            degree_preserving = false;
            witness.get_or_insert(format!("d_{i}"));
        }
    }
    report.check("boundary-degree-preserving", degree_preserving, witness);

    report.table(
        "homology dimensions",
        &["i", "degree", "dim"],
        table
            .entries()
            .map(|((i, degree), dim)| {
                vec![i.to_string(), degree.to_string(), dim.to_string()]
            })
            .collect(),
    );
    report.table(
        "totals",
        &["i", "total dim"],
        (0..=max_i)
            .map(|i| vec![i.to_string(), table.total(i).to_string()])
            .collect(),
    );
    report.warn(
        "the complex includes the ground field in homological degree 0 via \
         d_1(v) = delta(v)*1; with the zero character, H_0 is the ground field",
    );
    Ok(report)
}

/// Truncated periodic tables of both parities, with the focusing pattern.
pub fn hp(job: &Job, max_i: usize) -> anyhow::Result<Report> {
    let mut report = Report::new("hp", job.digest.clone());
    let m = job.require_focus()?;
    let Some((_, _, table)) = homology_table(job, &mut report, max_i)? else {
        return Ok(report);
    };

    for parity in [0u8, 1] {
        let hp = assemble_hp(&table, parity, max_i);
        report.check(
            &format!("hp{parity}-focused"),
            focusing_predicate(&hp, m),
            Some(format!("degrees {:?}", hp.degrees())),
        );
        let mut rows: Vec<Vec<String>> = hp
            .per_degree()
            .iter()
            .map(|(degree, total)| vec![degree.to_string(), total.to_string()])
            .collect();
        rows.push(vec!["all".into(), hp.total().to_string()]);
        report.table(&format!("HP{parity} (i <= {max_i})"), &["degree", "total dim"], rows);
    }
    report.warn(
        "periodic totals are truncations of an infinite direct sum; they \
         grow with --max-i",
    );
    Ok(report)
}
