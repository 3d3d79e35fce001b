//! Quantum Lie algebras: a finite graded basis, a braided bracket table,
//! the side-condition checks, and the enveloping-algebra presentation.
//!
//! A quantum Lie algebra here is the data `(g, psi, [,])` of a graded basis
//! with the anyonic braiding and a bilinear bracket stored on basis pairs.
//! The checks implemented are the ones with computational content at this
//! level of generality:
//!
//! * degree additivity of the bracket,
//! * the braiding on `g (x) g` squares to the identity (for focused data),
//! * the bracket annihilates `ker(id - psi)`,
//! * all nested brackets vanish, which makes both sides of every braided
//!   Jacobi identity zero.
//!
//! The enveloping algebra is the tensor algebra modulo
//! `v (x) w - zeta^{|v||w|} w (x) v - [v, w]`, realised as a rewriting
//! presentation. Basis elements defined by a diagonal bracket (such as
//! `a = [x, x] = 2 x^2`) are eliminated and their definitions recorded.

use crate::algebra::{AlgElement, Presentation, PowerRule, SwapRule, Word};
use crate::anyon::{braid_coefficient, DegreedGenerator, FocusParams};
use crate::linalg;
use crate::scalar::{Cyclo, CycloCtx};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QlaError {
    #[error("duplicate basis name `{0}`")]
    DuplicateName(String),
    #[error("unknown basis name `{0}` in bracket table")]
    UnknownName(String),
    #[error("bracket pair [{left}, {right}] defined twice")]
    DuplicatePair { left: String, right: String },
    #[error("focus parameters are for modulus {fp_n} but the context has modulus {ctx_n}")]
    FocusModulusMismatch { fp_n: u32, ctx_n: u32 },
    #[error("character must assign one value per basis element")]
    CharacterLength,
    #[error("character is nonzero on `{0}`, which has nonzero degree")]
    CharacterSupport(String),
    #[error("character does not vanish on [{left}, {right}]")]
    CharacterBracket { left: String, right: String },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnvelopeError {
    #[error("validation check `{check}` failed ({witness}); the enveloping presentation is only defined for valid data")]
    ValidationFailed { check: String, witness: String },
    #[error("the braiding does not square to the identity on ({left}, {right}); the quotient relation is not a rewrite rule with +-1 coefficient")]
    BraidingNotInvolutive { left: String, right: String },
    #[error("relation for `{name}` collapses it linearly: zeta^{{|{name}|^2}} = 1 forces [{name}, {name}] = 0, but the bracket is nonzero")]
    LinearCollapse { name: String },
}

/// A linear functional on the basis, vanishing on brackets and supported in
/// degree zero. Used to twist homology coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    values: Vec<Cyclo>,
}

impl Character {
    /// The zero character (the counit restricted to the basis).
    pub fn zero(qla: &QuantumLieAlgebra) -> Self {
        Character {
            values: vec![qla.ctx.zero(); qla.basis.len()],
        }
    }

    /// Validated construction from named values. Unnamed basis elements get
    /// zero. Rejects support outside degree 0 and values that fail to kill
    /// the bracket image.
    pub fn new(qla: &QuantumLieAlgebra, named: &[(&str, Cyclo)]) -> Result<Self, QlaError> {
        let ctx = &qla.ctx;
        let mut values = vec![ctx.zero(); qla.basis.len()];
        for (name, value) in named {
            let idx = qla
                .index_of(name)
                .ok_or_else(|| QlaError::UnknownName(name.to_string()))?;
            values[idx] = value.clone();
        }
        for (idx, value) in values.iter().enumerate() {
            if !value.is_zero() && qla.basis[idx].degree() != 0 {
                return Err(QlaError::CharacterSupport(qla.basis[idx].name().into()));
            }
        }
        for ((i, j), entry) in &qla.bracket {
            let mut acc = ctx.zero();
            for (t, c) in entry {
                acc = ctx.add(&acc, &ctx.mul(c, &values[*t]));
            }
            if !acc.is_zero() {
                return Err(QlaError::CharacterBracket {
                    left: qla.basis[*i].name().into(),
                    right: qla.basis[*j].name().into(),
                });
            }
        }
        Ok(Character { values })
    }

    /// Unvalidated construction, for exercising failure paths (an invalid
    /// character breaks `d^2 = 0`). Prefer [`Character::new`].
    pub fn from_raw_values(values: Vec<Cyclo>) -> Self {
        Character { values }
    }

    pub fn value(&self, idx: usize) -> &Cyclo {
        &self.values[idx]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Cyclo::is_zero)
    }
}

/// One named check of [`QuantumLieAlgebra::validate`] and friends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QlaCheck {
    pub name: &'static str,
    pub pass: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QlaReport {
    pub checks: Vec<QlaCheck>,
    pub notes: Vec<String>,
}

impl QlaReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Result of the `ker(id - psi)` annihilation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelCheck {
    pub pass: bool,
    /// First kernel vector not annihilated, rendered.
    pub witness: Option<String>,
    pub kernel_dim: usize,
    /// How many kernel vectors are plain diagonal tensors `v (x) v`.
    pub diagonal_dim: usize,
    /// Human-readable description of the kernel composition.
    pub note: String,
}

/// A generator eliminated from the enveloping presentation, with the
/// definition that replaces it.
#[derive(Clone, Debug, PartialEq)]
pub struct Elimination {
    /// Index into the original basis.
    pub original_index: usize,
    pub name: String,
    /// The generator whose diagonal bracket defines this one.
    pub source: String,
    /// The defining element in the enveloping presentation, e.g. `2 x^2`.
    pub definition: AlgElement,
}

/// The enveloping-algebra presentation together with the record of
/// eliminated generators.
#[derive(Clone, Debug, PartialEq)]
pub struct Envelope {
    presentation: Presentation,
    eliminations: Vec<Elimination>,
    /// Original basis index -> generator index in the presentation, for the
    /// surviving generators.
    kept: Vec<(usize, u32)>,
}

impl Envelope {
    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn eliminations(&self) -> &[Elimination] {
        &self.eliminations
    }

    /// The image of an original basis element in the presentation: the
    /// generator itself if kept, its recorded definition if eliminated.
    pub fn image_of_basis(&self, original_index: usize) -> AlgElement {
        if let Some(&(_, new)) = self.kept.iter().find(|(old, _)| *old == original_index) {
            return self
                .presentation
                .element_from_word(Word::single(new));
        }
        self.eliminations
            .iter()
            .find(|e| e.original_index == original_index)
            .map(|e| e.definition.clone())
            .expect("every basis index is either kept or eliminated")
    }
}

/// A finite-dimensional quantum Lie algebra: graded basis plus bracket table.
#[derive(Clone, Debug, PartialEq)]
pub struct QuantumLieAlgebra {
    ctx: CycloCtx,
    fp: Option<FocusParams>,
    basis: Vec<DegreedGenerator>,
    bracket: BTreeMap<(usize, usize), BTreeMap<usize, Cyclo>>,
}

impl QuantumLieAlgebra {
    /// Construct from named bracket entries; each entry is
    /// `((left, right), [(target, coeff), ...])`. Zero entries may simply be
    /// omitted. Name resolution is validated here; mathematical conditions
    /// are reported by [`QuantumLieAlgebra::validate`].
    pub fn new(
        ctx: CycloCtx,
        fp: Option<FocusParams>,
        basis: Vec<DegreedGenerator>,
        entries: &[((&str, &str), Vec<(&str, Cyclo)>)],
    ) -> Result<Self, QlaError> {
        if let Some(fp) = &fp {
            if fp.n() != ctx.n() {
                return Err(QlaError::FocusModulusMismatch {
                    fp_n: fp.n(),
                    ctx_n: ctx.n(),
                });
            }
        }
        let mut names = BTreeMap::new();
        for (idx, g) in basis.iter().enumerate() {
            if names.insert(g.name().to_string(), idx).is_some() {
                return Err(QlaError::DuplicateName(g.name().into()));
            }
        }
        let resolve = |name: &str| -> Result<usize, QlaError> {
            names
                .get(name)
                .copied()
                .ok_or_else(|| QlaError::UnknownName(name.into()))
        };
        let mut bracket = BTreeMap::new();
        for ((left, right), value) in entries {
            let key = (resolve(left)?, resolve(right)?);
            let mut entry: BTreeMap<usize, Cyclo> = BTreeMap::new();
            for (target, coeff) in value {
                let t = resolve(target)?;
                let merged = match entry.get(&t) {
                    Some(old) => ctx.add(old, coeff),
                    None => coeff.clone(),
                };
                if merged.is_zero() {
                    entry.remove(&t);
                } else {
                    entry.insert(t, merged);
                }
            }
            if entry.is_empty() {
                continue;
            }
            if bracket.insert(key, entry).is_some() {
                return Err(QlaError::DuplicatePair {
                    left: (*left).into(),
                    right: (*right).into(),
                });
            }
        }
        Ok(QuantumLieAlgebra {
            ctx,
            fp,
            basis,
            bracket,
        })
    }

    pub fn ctx(&self) -> &CycloCtx {
        &self.ctx
    }

    pub fn focus(&self) -> Option<&FocusParams> {
        self.fp.as_ref()
    }

    pub fn basis(&self) -> &[DegreedGenerator] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|g| g.name() == name)
    }

    /// The stored bracket entry for a basis pair, if nonzero.
    pub fn bracket_entry(&self, left: usize, right: usize) -> Option<&BTreeMap<usize, Cyclo>> {
        self.bracket.get(&(left, right))
    }

    pub fn bracket_pairs(
        &self,
    ) -> impl Iterator<Item = (&(usize, usize), &BTreeMap<usize, Cyclo>)> {
        self.bracket.iter()
    }

    /// Bracket of a basis element against a linear combination (left slot
    /// fixed).
    fn bracket_left(&self, left: usize, right: &BTreeMap<usize, Cyclo>) -> BTreeMap<usize, Cyclo> {
        let mut out: BTreeMap<usize, Cyclo> = BTreeMap::new();
        for (r, c) in right {
            if let Some(entry) = self.bracket.get(&(left, *r)) {
                for (t, ct) in entry {
                    let merged = match out.get(t) {
                        Some(old) => self.ctx.add(old, &self.ctx.mul(c, ct)),
                        None => self.ctx.mul(c, ct),
                    };
                    if merged.is_zero() {
                        out.remove(t);
                    } else {
                        out.insert(*t, merged);
                    }
                }
            }
        }
        out
    }

    fn render_combination(&self, v: &BTreeMap<usize, Cyclo>) -> String {
        if v.is_empty() {
            return "0".to_string();
        }
        v.iter()
            .map(|(t, c)| format!("{}*{}", c, self.basis[*t].name()))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    fn render_pair(&self, i: usize, j: usize) -> String {
        format!("[{}, {}]", self.basis[i].name(), self.basis[j].name())
    }

    /// Degree additivity plus (for focused data) the focus and involutivity
    /// of the braiding on `g (x) g`.
    pub fn validate(&self) -> QlaReport {
        let n = self.ctx.n();
        let mut checks = Vec::new();
        let mut notes = Vec::new();

        let mut degree = QlaCheck {
            name: "degree-additivity",
            pass: true,
            witness: None,
        };
        'outer: for ((i, j), entry) in &self.bracket {
            let expected = (self.basis[*i].degree() + self.basis[*j].degree()) % n;
            for t in entry.keys() {
                if self.basis[*t].degree() != expected {
                    degree.pass = false;
                    degree.witness = Some(format!(
                        "{} = {} has degree {}, expected {}",
                        self.render_pair(*i, *j),
                        self.render_combination(entry),
                        self.basis[*t].degree(),
                        expected,
                    ));
                    break 'outer;
                }
            }
        }
        checks.push(degree);

        if let Some(fp) = &self.fp {
            let mut focused = QlaCheck {
                name: "focused-degrees",
                pass: true,
                witness: None,
            };
            for g in &self.basis {
                if g.degree() % fp.m() != 0 {
                    focused.pass = false;
                    focused.witness = Some(format!(
                        "{} has degree {}, not a multiple of {}",
                        g.name(),
                        g.degree(),
                        fp.m()
                    ));
                    break;
                }
            }
            checks.push(focused);

            let mut involutive = QlaCheck {
                name: "braiding-involutive",
                pass: true,
                witness: None,
            };
            'pairs: for (i, gi) in self.basis.iter().enumerate() {
                for gj in &self.basis[i..] {
                    let e = 2 * u64::from(gi.degree()) * u64::from(gj.degree()) % u64::from(n);
                    if self.ctx.root(e as i64) != self.ctx.one() {
                        involutive.pass = false;
                        involutive.witness = Some(format!(
                            "psi^2 on {} (x) {} multiplies by zeta^{}",
                            gi.name(),
                            gj.name(),
                            e
                        ));
                        break 'pairs;
                    }
                }
            }
            checks.push(involutive);
        } else {
            notes.push(
                "no focus parameters given; focused-degrees and braiding-involutive not checked"
                    .to_string(),
            );
        }

        QlaReport { checks, notes }
    }

    /// The braiding on `g (x) g` as a dense matrix in the basis
    /// `v_i (x) v_j -> column i*dim + j`.
    pub fn braiding_matrix(&self) -> Vec<Vec<Cyclo>> {
        let k = self.basis.len();
        let ctx = &self.ctx;
        let mut m = vec![vec![ctx.zero(); k * k]; k * k];
        for i in 0..k {
            for j in 0..k {
                let coeff =
                    braid_coefficient(ctx, self.basis[i].degree(), self.basis[j].degree());
                m[j * k + i][i * k + j] = coeff;
            }
        }
        m
    }

    /// A basis of `ker(id - psi)` on `g (x) g`, as coordinate vectors in the
    /// `v_i (x) v_j` basis.
    pub fn kernel_id_minus_psi(&self) -> Vec<Vec<Cyclo>> {
        let k = self.basis.len();
        let ctx = &self.ctx;
        let psi = self.braiding_matrix();
        let mut id_minus = psi;
        for (r, row) in id_minus.iter_mut().enumerate() {
            for (c, entry) in row.iter_mut().enumerate() {
                let id_entry = if r == c { ctx.one() } else { ctx.zero() };
                *entry = ctx.sub(&id_entry, entry);
            }
        }
        linalg::nullspace(ctx, id_minus, k * k)
    }

    /// Render a vector on `g (x) g` like `x (x) y + y (x) x`.
    pub fn render_tensor_vector(&self, v: &[Cyclo]) -> String {
        let k = self.basis.len();
        let mut parts = Vec::new();
        for (pos, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (i, j) = (pos / k, pos % k);
            let pair = format!("{} (x) {}", self.basis[i].name(), self.basis[j].name());
            if *c == self.ctx.one() {
                parts.push(pair);
            } else {
                parts.push(format!("{c}*{pair}"));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }

    /// The bracket as a linear map `g (x) g -> g` applied to a coordinate
    /// vector.
    pub fn bracket_of_vector(&self, v: &[Cyclo]) -> Vec<Cyclo> {
        let k = self.basis.len();
        let ctx = &self.ctx;
        let mut out = vec![ctx.zero(); k];
        for (pos, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (i, j) = (pos / k, pos % k);
            if let Some(entry) = self.bracket.get(&(i, j)) {
                for (t, ct) in entry {
                    out[*t] = ctx.add(&out[*t], &ctx.mul(c, ct));
                }
            }
        }
        out
    }

    /// Check that the bracket annihilates every spanning vector of
    /// `ker(id - psi)`, and describe what that kernel contains.
    pub fn check_bracket_kills_kernel(&self) -> KernelCheck {
        let kernel = self.kernel_id_minus_psi();
        let k = self.basis.len();
        let diagonal_dim = (0..k)
            .filter(|&i| {
                let d = u64::from(self.basis[i].degree());
                let e = d * d % u64::from(self.ctx.n());
                self.ctx.root(e as i64) == self.ctx.one()
            })
            .count();
        let mut pass = true;
        let mut witness = None;
        for v in &kernel {
            let image = self.bracket_of_vector(v);
            if !image.iter().all(Cyclo::is_zero) {
                pass = false;
                witness = Some(self.render_tensor_vector(v));
                break;
            }
        }
        let note = format!(
            "ker(id - psi) has dimension {}: {} diagonal tensor(s) v (x) v plus {} symmetric \
             combination(s) of distinct basis elements; the bracket must vanish on all of them, \
             not only on the diagonal ones",
            kernel.len(),
            diagonal_dim,
            kernel.len() - diagonal_dim,
        );
        KernelCheck {
            pass,
            witness,
            kernel_dim: kernel.len(),
            diagonal_dim,
            note,
        }
    }

    /// True iff `[u, [v, w]] = 0` and `[[u, v], w] = 0` for all basis
    /// triples. When this holds, both sides of every braided Jacobi identity
    /// are zero.
    pub fn check_nested_brackets(&self) -> (bool, Option<String>) {
        let k = self.basis.len();
        for u in 0..k {
            for v in 0..k {
                for w in 0..k {
                    let inner: BTreeMap<usize, Cyclo> = self
                        .bracket
                        .get(&(v, w))
                        .cloned()
                        .unwrap_or_default();
                    if !self.bracket_left(u, &inner).is_empty() {
                        return (
                            false,
                            Some(format!(
                                "[{}, [{}, {}]]",
                                self.basis[u].name(),
                                self.basis[v].name(),
                                self.basis[w].name()
                            )),
                        );
                    }
                    // [[u, v], w]: expand the outer bracket on each target of
                    // [u, v].
                    let left_inner: BTreeMap<usize, Cyclo> = self
                        .bracket
                        .get(&(u, v))
                        .cloned()
                        .unwrap_or_default();
                    for (t, c) in &left_inner {
                        if let Some(entry) = self.bracket.get(&(*t, w)) {
                            let nonzero = entry.values().any(|ct| !self.ctx.mul(c, ct).is_zero());
                            if nonzero {
                                return (
                                    false,
                                    Some(format!(
                                        "[[{}, {}], {}]",
                                        self.basis[u].name(),
                                        self.basis[v].name(),
                                        self.basis[w].name()
                                    )),
                                );
                            }
                        }
                    }
                }
            }
        }
        (true, None)
    }

    /// Build the enveloping-algebra presentation: the tensor algebra modulo
    /// `v (x) w - zeta^{|v||w|} w (x) v - [v, w]`.
    ///
    /// Basis elements defined by a single-term diagonal bracket (such as
    /// `a = [x, x]`, giving `a = 2 x^2` in the quotient) are eliminated when
    /// they are otherwise inert; the definitions are recorded on the returned
    /// [`Envelope`]. Diagonal relations that cannot be eliminated become
    /// power rules.
    pub fn enveloping_presentation(&self) -> Result<Envelope, EnvelopeError> {
        let ctx = &self.ctx;
        let report = self.validate();
        if let Some(failed) = report.checks.iter().find(|c| !c.pass) {
            return Err(EnvelopeError::ValidationFailed {
                check: failed.name.to_string(),
                witness: failed.witness.clone().unwrap_or_default(),
            });
        }
        let k = self.basis.len();
        // The quotient relation orients words only when the swap coefficient
        // is +-1, i.e. when the braiding is involutive on the pair.
        for i in 0..k {
            for j in i..k {
                let e = 2 * u64::from(self.basis[i].degree()) * u64::from(self.basis[j].degree())
                    % u64::from(ctx.n());
                if ctx.root(e as i64) != ctx.one() {
                    return Err(EnvelopeError::BraidingNotInvolutive {
                        left: self.basis[i].name().into(),
                        right: self.basis[j].name().into(),
                    });
                }
            }
        }

        let self_coeff = |i: usize| {
            let d = u64::from(self.basis[i].degree());
            ctx.root((d * d % u64::from(ctx.n())) as i64)
        };
        let appears_off_definition = |target: usize, def_pair: (usize, usize)| {
            self.bracket
                .iter()
                .any(|(pair, entry)| *pair != def_pair && entry.contains_key(&target))
        };
        let bracket_inert = |target: usize| {
            self.bracket
                .keys()
                .all(|(l, r)| *l != target && *r != target)
        };

        // Decide which generators are eliminated: e is eliminated when some
        // diagonal bracket [g, g] = c*e (single term, g with anticommuting
        // self-braiding) defines it, and e itself carries no further
        // structure: it heads no bracket and appears in no other bracket
        // value. The relation then reads 2 g^2 = c e, i.e. e = (2/c) g^2, a
        // definition rather than a rewrite rule. The inertness conditions
        // also guarantee that e is not the source of another elimination and
        // that no two diagonals share a target.
        let mut eliminated: BTreeMap<usize, (usize, Cyclo)> = BTreeMap::new(); // target -> (source g, c)
        for i in 0..k {
            let Some(entry) = self.bracket.get(&(i, i)) else {
                continue;
            };
            if self_coeff(i) == ctx.one() {
                // g^2 - g^2 = [g, g]: a nonzero bracket collapses a basis
                // element of g to zero in U(g).
                return Err(EnvelopeError::LinearCollapse {
                    name: self.basis[i].name().into(),
                });
            }
            if entry.len() != 1 {
                continue;
            }
            let (&target, coeff) = entry.iter().next().unwrap();
            if target == i || !bracket_inert(target) || appears_off_definition(target, (i, i)) {
                continue;
            }
            debug_assert_eq!(self_coeff(target), ctx.one());
            eliminated.insert(target, (i, coeff.clone()));
        }

        let kept_old: Vec<usize> = (0..k).filter(|i| !eliminated.contains_key(i)).collect();
        let new_index: BTreeMap<usize, u32> = kept_old
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new as u32))
            .collect();

        let generators: Vec<DegreedGenerator> = kept_old
            .iter()
            .map(|&i| self.basis[i].clone())
            .collect();

        // Map a bracket value into the new presentation. Eliminated targets
        // cannot occur here: they are bracket-inert and appear in no other
        // bracket value by construction.
        let map_value = |entry: &BTreeMap<usize, Cyclo>| -> AlgElement {
            AlgElement::from_terms(
                entry.iter().map(|(t, c)| {
                    let new = new_index
                        .get(t)
                        .expect("eliminated generators appear in no surviving bracket value");
                    (Word::single(*new), c.clone())
                }),
                ctx,
            )
        };

        let half = ctx
            .inv(&ctx.from_int(2))
            .expect("2 is invertible in characteristic zero");
        let presentation = Presentation::from_rules(
            ctx.clone(),
            generators,
            |j, i| {
                let (oj, oi) = (kept_old[j], kept_old[i]);
                let coeff =
                    braid_coefficient(ctx, self.basis[oj].degree(), self.basis[oi].degree());
                let lower = self
                    .bracket
                    .get(&(oj, oi))
                    .map(&map_value)
                    .unwrap_or_else(AlgElement::zero);
                SwapRule { coeff, lower }
            },
            |g| {
                let old = kept_old[g];
                let diagonal = self.bracket.get(&(old, old));
                match diagonal {
                    Some(entry) => {
                        if entry.len() == 1 {
                            let target = *entry.keys().next().unwrap();
                            if eliminated.contains_key(&target) {
                                // The diagonal relation became the definition
                                // of the eliminated generator; g^2 is free.
                                return PowerRule::None;
                            }
                        }
                        // 2 g^2 = [g, g] as a rewrite rule.
                        PowerRule::Reduce(map_value(entry).scale(&half, ctx))
                    }
                    None => {
                        if self_coeff(old) == ctx.one() {
                            PowerRule::None
                        } else {
                            // 2 g^2 = 0.
                            PowerRule::Nilpotent
                        }
                    }
                }
            },
        )
        .expect("enveloping rules are well-formed by construction");

        let mut eliminations = Vec::new();
        for (&target, (source, coeff)) in &eliminated {
            // [g, g] = c e and 2 g^2 = c e give e = (2/c) g^2.
            let two_over_c = ctx
                .div(&ctx.from_int(2), coeff)
                .expect("stored bracket coefficients are nonzero");
            let g_new = new_index[source];
            let definition = AlgElement::from_terms(
                [(Word::from_indices(vec![g_new, g_new]), two_over_c)],
                ctx,
            );
            eliminations.push(Elimination {
                original_index: target,
                name: self.basis[target].name().into(),
                source: self.basis[*source].name().into(),
                definition,
            });
        }

        Ok(Envelope {
            presentation,
            eliminations,
            kept: kept_old
                .iter()
                .map(|&old| (old, new_index[&old]))
                .collect(),
        })
    }
}
