//! Braided Hopf structure on a presented algebra with primitive generators.
//!
//! The coproduct is fixed on generators by `delta(g) = 1 (x) g + g (x) 1`,
//! the counit by `eps(g) = 0` and the antipode by `S(g) = -g`, all extended
//! to words through the *braided* tensor-square product
//!
//! ```text
//! (a (x) b) (c (x) d) = zeta^{|b||c|} (ac (x) bd)
//! ```
//!
//! and to linear combinations linearly. On a pair of homogeneous factors the
//! antipode obeys `S(vw) = zeta^{|v||w|} S(w) S(v)`.
//!
//! None of the Hopf axioms are assumed to hold for an arbitrary presentation:
//! [`HopfData::verify_axioms`] checks six axiom families on all basis words
//! up to a length bound and reports the first counterexample of each family.

use crate::algebra::{AlgElement, Presentation, Word};
use crate::anyon::braid_coefficient;
use crate::scalar::{Cyclo, CycloCtx};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HopfError {
    #[error("generator `{0}` is not primitive; only primitive generators are supported")]
    NonPrimitive(String),
    #[error("expected one primitive flag per generator")]
    FlagCountMismatch,
}

/// A finite linear combination of two-fold tensors of words.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TensorSquareElement {
    terms: BTreeMap<(Word, Word), Cyclo>,
}

impl TensorSquareElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(
        terms: impl IntoIterator<Item = ((Word, Word), Cyclo)>,
        ctx: &CycloCtx,
    ) -> Self {
        let mut out = Self::default();
        for (k, c) in terms {
            out.insert(k, c, ctx);
        }
        out
    }

    fn insert(&mut self, key: (Word, Word), coeff: Cyclo, ctx: &CycloCtx) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = ctx.add(o.get(), &coeff);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Cyclo)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

type TensorCube = BTreeMap<(Word, Word, Word), Cyclo>;

fn cube_insert(cube: &mut TensorCube, key: (Word, Word, Word), coeff: Cyclo, ctx: &CycloCtx) {
    if coeff.is_zero() {
        return;
    }
    match cube.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let sum = ctx.add(o.get(), &coeff);
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

/// One axiom family of [`HopfData::verify_axioms`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub pass: bool,
    /// Rendering of the first counterexample, when the family fails.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl HopfAxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// A presented algebra together with its braided Hopf structure data.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfData {
    presentation: Presentation,
    primitives: Vec<bool>,
}

impl HopfData {
    /// The standard structure: every generator primitive.
    pub fn primitive(presentation: Presentation) -> Self {
        let primitives = vec![true; presentation.generators().len()];
        HopfData {
            presentation,
            primitives,
        }
    }

    /// Construct with explicit flags. Non-primitive generators have no
    /// defined coproduct here, so any `false` flag is rejected.
    pub fn with_primitives(
        presentation: Presentation,
        primitives: Vec<bool>,
    ) -> Result<Self, HopfError> {
        if primitives.len() != presentation.generators().len() {
            return Err(HopfError::FlagCountMismatch);
        }
        if let Some(pos) = primitives.iter().position(|p| !p) {
            return Err(HopfError::NonPrimitive(
                presentation.generators()[pos].name().to_string(),
            ));
        }
        Ok(HopfData {
            presentation,
            primitives,
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn primitives(&self) -> &[bool] {
        &self.primitives
    }

    fn ctx(&self) -> &CycloCtx {
        self.presentation.ctx()
    }

    pub fn t2_one(&self) -> TensorSquareElement {
        TensorSquareElement::from_terms(
            [((Word::empty(), Word::empty()), self.ctx().one())],
            self.ctx(),
        )
    }

    /// The braided product on the tensor square, with both components
    /// normalised in the presented algebra.
    pub fn t2_multiply(
        &self,
        x: &TensorSquareElement,
        y: &TensorSquareElement,
    ) -> TensorSquareElement {
        let p = &self.presentation;
        let ctx = self.ctx();
        let mut out = TensorSquareElement::default();
        for ((a, b), ca) in x.terms() {
            for ((c, d), cb) in y.terms() {
                let braid = braid_coefficient(ctx, p.word_degree(b), p.word_degree(c));
                let coeff = ctx.mul(&ctx.mul(ca, cb), &braid);
                let left = p.normal_form([(a.concat(c), ctx.one())]);
                let right = p.normal_form([(b.concat(d), ctx.one())]);
                for (wl, cl) in left.terms() {
                    for (wr, cr) in right.terms() {
                        out.insert(
                            (wl.clone(), wr.clone()),
                            ctx.mul(&coeff, &ctx.mul(cl, cr)),
                            ctx,
                        );
                    }
                }
            }
        }
        out
    }

    /// Coproduct of a word: the braided product of `1 (x) g + g (x) 1` over
    /// its letters.
    pub fn coproduct_word(&self, w: &Word) -> TensorSquareElement {
        let ctx = self.ctx();
        let mut acc = self.t2_one();
        for &g in w.indices() {
            let letter = TensorSquareElement::from_terms(
                [
                    ((Word::empty(), Word::single(g)), ctx.one()),
                    ((Word::single(g), Word::empty()), ctx.one()),
                ],
                ctx,
            );
            acc = self.t2_multiply(&acc, &letter);
        }
        acc
    }

    /// Linear extension of the coproduct.
    pub fn coproduct(&self, e: &AlgElement) -> TensorSquareElement {
        let ctx = self.ctx();
        let mut out = TensorSquareElement::default();
        for (w, c) in e.terms() {
            for (k, ck) in self.coproduct_word(w).terms() {
                out.insert(k.clone(), ctx.mul(c, ck), ctx);
            }
        }
        out
    }

    /// Counit: the coefficient of the empty word.
    pub fn counit(&self, e: &AlgElement) -> Cyclo {
        e.coeff(&Word::empty())
            .cloned()
            .unwrap_or_else(|| self.ctx().zero())
    }

    /// Antipode on a word, by the braided anti-multiplicative recursion
    /// `S(g u) = zeta^{|g||u|} S(u) S(g)` with `S(g) = -g`.
    pub fn antipode_word(&self, w: &Word) -> AlgElement {
        self.antipode_slice(w.indices())
    }

    fn antipode_slice(&self, idx: &[u32]) -> AlgElement {
        let p = &self.presentation;
        let ctx = self.ctx();
        if idx.is_empty() {
            return p.one();
        }
        let g = idx[0];
        let rest = &idx[1..];
        let dg = p.generators()[g as usize].degree();
        let drest = p.word_degree(&Word::from_indices(rest.to_vec()));
        let coeff = braid_coefficient(ctx, dg, drest);
        let s_rest = self.antipode_slice(rest);
        let s_g = AlgElement::from_terms([(Word::single(g), ctx.from_int(-1))], ctx);
        p.multiply(&s_rest, &s_g).scale(&coeff, ctx)
    }

    /// Linear extension of the antipode.
    pub fn antipode(&self, e: &AlgElement) -> AlgElement {
        let ctx = self.ctx();
        let mut out = AlgElement::zero();
        for (w, c) in e.terms() {
            out = out.add(&self.antipode_word(w).scale(c, ctx), ctx);
        }
        out
    }

    /// Render a tensor-square element for reports and witnesses.
    pub fn render_t2(&self, x: &TensorSquareElement) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        let p = &self.presentation;
        let mut out = String::new();
        for (idx, ((a, b), c)) in x.terms().enumerate() {
            let s = c.to_string();
            let (negative, mag) = match s.strip_prefix('-') {
                Some(rest) if c.coeffs().iter().filter(|x| !num_traits::Zero::is_zero(*x)).count() == 1 => {
                    (true, rest.to_string())
                }
                _ => (false, s),
            };
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let pair = format!("{} (x) {}", p.render_word(a), p.render_word(b));
            if mag == "1" {
                out.push_str(&pair);
            } else if mag.contains(' ') {
                out.push_str(&format!("({mag})*{pair}"));
            } else {
                out.push_str(&format!("{mag}*{pair}"));
            }
        }
        out
    }

    /// Verify six Hopf axiom families on all basis words (and pairs of basis
    /// words, for the multiplicativity axioms) up to `max_len`:
    ///
    /// 1. coassociativity,
    /// 2. the counit laws,
    /// 3. the coproduct is an algebra map into the braided tensor square,
    /// 4. the counit is an algebra map,
    /// 5. the antipode laws `m(S (x) id)delta = eta eps = m(id (x) S)delta`,
    /// 6. degree preservation of coproduct and antipode.
    ///
    /// Each family reports its first counterexample.
    pub fn verify_axioms(&self, max_len: usize) -> HopfAxiomReport {
        let p = &self.presentation;
        let ctx = self.ctx();
        let basis = p.basis_up_to(max_len);

        let mut coassoc = AxiomCheck {
            name: "coassociativity",
            pass: true,
            witness: None,
        };
        let mut counit_laws = AxiomCheck {
            name: "counit-laws",
            pass: true,
            witness: None,
        };
        let mut antipode_laws = AxiomCheck {
            name: "antipode-laws",
            pass: true,
            witness: None,
        };
        let mut degrees = AxiomCheck {
            name: "degree-preservation",
            pass: true,
            witness: None,
        };

        for w in &basis {
            let d = self.coproduct_word(w);

            if coassoc.pass {
                let mut lhs = TensorCube::new();
                let mut rhs = TensorCube::new();
                for ((u, v), c) in d.terms() {
                    for ((u1, u2), cu) in self.coproduct_word(u).terms() {
                        cube_insert(
                            &mut lhs,
                            (u1.clone(), u2.clone(), v.clone()),
                            ctx.mul(c, cu),
                            ctx,
                        );
                    }
                    for ((v1, v2), cv) in self.coproduct_word(v).terms() {
                        cube_insert(
                            &mut rhs,
                            (u.clone(), v1.clone(), v2.clone()),
                            ctx.mul(c, cv),
                            ctx,
                        );
                    }
                }
                if lhs != rhs {
                    coassoc.pass = false;
                    coassoc.witness = Some(p.render_word(w));
                }
            }

            if counit_laws.pass {
                let mut left = AlgElement::zero();
                let mut right = AlgElement::zero();
                for ((u, v), c) in d.terms() {
                    let eps_u = if u.is_empty() { c.clone() } else { ctx.zero() };
                    left = left.add(
                        &AlgElement::from_terms([(v.clone(), eps_u)], ctx),
                        ctx,
                    );
                    let eps_v = if v.is_empty() { c.clone() } else { ctx.zero() };
                    right = right.add(
                        &AlgElement::from_terms([(u.clone(), eps_v)], ctx),
                        ctx,
                    );
                }
                let id = p.element_from_word(w.clone());
                if left != id || right != id {
                    counit_laws.pass = false;
                    counit_laws.witness = Some(p.render_word(w));
                }
            }

            if antipode_laws.pass {
                let mut left = AlgElement::zero();
                let mut right = AlgElement::zero();
                for ((u, v), c) in d.terms() {
                    let su_v = p
                        .multiply(&self.antipode_word(u), &p.element_from_word(v.clone()))
                        .scale(c, ctx);
                    left = left.add(&su_v, ctx);
                    let u_sv = p
                        .multiply(&p.element_from_word(u.clone()), &self.antipode_word(v))
                        .scale(c, ctx);
                    right = right.add(&u_sv, ctx);
                }
                let eps = self.counit(&p.element_from_word(w.clone()));
                let target = p.one().scale(&eps, ctx);
                if left != target || right != target {
                    antipode_laws.pass = false;
                    antipode_laws.witness = Some(p.render_word(w));
                }
            }

            if degrees.pass {
                let dw = p.word_degree(w);
                let n = ctx.n();
                let coproduct_ok = d.terms().all(|((u, v), _)| {
                    (p.word_degree(u) + p.word_degree(v)) % n == dw
                });
                let antipode_ok = self
                    .antipode_word(w)
                    .terms()
                    .all(|(word, _)| p.word_degree(word) == dw);
                if !coproduct_ok || !antipode_ok {
                    degrees.pass = false;
                    degrees.witness = Some(p.render_word(w));
                }
            }
        }

        let mut coproduct_map = AxiomCheck {
            name: "coproduct-algebra-map",
            pass: true,
            witness: None,
        };
        let mut counit_map = AxiomCheck {
            name: "counit-algebra-map",
            pass: true,
            witness: None,
        };
        'pairs: for a in &basis {
            for b in &basis {
                if a.len() + b.len() > max_len {
                    continue;
                }
                let product = p.normal_form([(a.concat(b), ctx.one())]);
                if coproduct_map.pass {
                    let lhs = self.coproduct(&product);
                    let rhs = self.t2_multiply(&self.coproduct_word(a), &self.coproduct_word(b));
                    if lhs != rhs {
                        coproduct_map.pass = false;
                        coproduct_map.witness =
                            Some(format!("({}, {})", p.render_word(a), p.render_word(b)));
                    }
                }
                if counit_map.pass {
                    let lhs = self.counit(&product);
                    let eps_a = if a.is_empty() { ctx.one() } else { ctx.zero() };
                    let eps_b = if b.is_empty() { ctx.one() } else { ctx.zero() };
                    let rhs = ctx.mul(&eps_a, &eps_b);
                    if lhs != rhs {
                        counit_map.pass = false;
                        counit_map.witness =
                            Some(format!("({}, {})", p.render_word(a), p.render_word(b)));
                    }
                }
                if !coproduct_map.pass && !counit_map.pass {
                    break 'pairs;
                }
            }
        }

        HopfAxiomReport {
            checks: vec![
                coassoc,
                counit_laws,
                coproduct_map,
                counit_map,
                antipode_laws,
                degrees,
            ],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anyon::DegreedGenerator;

    fn ctx18() -> CycloCtx {
        CycloCtx::new(18).unwrap()
    }

    fn xyz_generators() -> Vec<DegreedGenerator> {
        vec![
            DegreedGenerator::new("x", 3, 18),
            DegreedGenerator::new("y", 9, 18),
            DegreedGenerator::new("z", 15, 18),
        ]
    }

    fn free_hopf() -> HopfData {
        HopfData::primitive(
            Presentation::braided_commutative(ctx18(), xyz_generators(), &[]).unwrap(),
        )
    }

    fn nilpotent_hopf() -> HopfData {
        HopfData::primitive(
            Presentation::braided_commutative(ctx18(), xyz_generators(), &["x", "y", "z"])
                .unwrap(),
        )
    }

    #[test]
    fn generator_coproduct_is_primitive() {
        let h = free_hopf();
        let ctx = h.ctx().clone();
        let x = Word::single(0);
        let expected = TensorSquareElement::from_terms(
            [
                ((Word::empty(), x.clone()), ctx.one()),
                ((x.clone(), Word::empty()), ctx.one()),
            ],
            &ctx,
        );
        assert_eq!(h.coproduct_word(&x), expected);
    }

    #[test]
    fn coproduct_of_xy_has_the_four_braided_terms() {
        let h = nilpotent_hopf();
        let p = h.presentation();
        let ctx = p.ctx().clone();
        let xy = p.word_from_names(&["x", "y"]).unwrap();
        let x = Word::single(0);
        let y = Word::single(1);
        // The cross term y (x) x picks up the braiding sign
        // zeta^{|x||y|} = zeta^27 = -1.
        let expected = TensorSquareElement::from_terms(
            [
                ((Word::empty(), xy.clone()), ctx.one()),
                ((y.clone(), x.clone()), ctx.from_int(-1)),
                ((x.clone(), y.clone()), ctx.one()),
                ((xy.clone(), Word::empty()), ctx.one()),
            ],
            &ctx,
        );
        assert_eq!(h.coproduct_word(&xy), expected);
    }

    #[test]
    fn square_of_a_generator_is_primitive_in_the_free_algebra() {
        let h = free_hopf();
        let p = h.presentation();
        let ctx = p.ctx().clone();
        let xx = p.word_from_names(&["x", "x"]).unwrap();
        // The cross terms cancel: x (x) x appears with 1 + zeta^9 = 0.
        let expected = TensorSquareElement::from_terms(
            [
                ((Word::empty(), xx.clone()), ctx.one()),
                ((xx.clone(), Word::empty()), ctx.one()),
            ],
            &ctx,
        );
        assert_eq!(h.coproduct_word(&xx), expected);
    }

    #[test]
    fn counit_reads_the_constant_coefficient() {
        let h = free_hopf();
        let p = h.presentation();
        let ctx = p.ctx().clone();
        let e = AlgElement::from_terms(
            [
                (Word::empty(), ctx.from_int(2)),
                (Word::single(0), ctx.root(5)),
            ],
            &ctx,
        );
        assert_eq!(h.counit(&e), ctx.from_int(2));
        assert_eq!(h.counit(&AlgElement::zero()), ctx.zero());
    }

    #[test]
    fn antipode_on_words() {
        let h = nilpotent_hopf();
        let p = h.presentation();
        let ctx = p.ctx().clone();
        // S(x) = -x.
        let x = Word::single(0);
        assert_eq!(
            h.antipode_word(&x),
            AlgElement::from_terms([(x.clone(), ctx.from_int(-1))], &ctx)
        );
        // S(xy) = zeta^{27} S(y) S(x) = -(yx) = +xy after normalisation.
        let xy = p.word_from_names(&["x", "y"]).unwrap();
        assert_eq!(
            h.antipode_word(&xy),
            AlgElement::from_terms([(xy.clone(), ctx.one())], &ctx)
        );
        assert_eq!(h.antipode_word(&Word::empty()), p.one());
    }

    /// Closed form of the braided anti-multiplicative recursion: on a word
    /// `g_1 ... g_k`,
    /// `S(w) = (-1)^k zeta^{sum_{p<q} |g_p||g_q|} g_k ... g_1` (normalised).
    #[test]
    fn antipode_matches_reversal_closed_form() {
        for h in [free_hopf(), nilpotent_hopf()] {
            let p = h.presentation();
            let ctx = p.ctx().clone();
            for w in p.basis_up_to(4) {
                let idx = w.indices();
                let mut exponent: u64 = 0;
                for q in 1..idx.len() {
                    for pp in 0..q {
                        let dp = p.generators()[idx[pp] as usize].degree() as u64;
                        let dq = p.generators()[idx[q] as usize].degree() as u64;
                        exponent += dp * dq;
                    }
                }
                let mut sign = ctx.root(exponent as i64 % 18);
                if idx.len() % 2 == 1 {
                    sign = ctx.neg(&sign);
                }
                let reversed = Word::from_indices(idx.iter().rev().copied().collect());
                let expected = p.normal_form([(reversed, sign)]);
                assert_eq!(h.antipode_word(&w), expected, "word {}", p.render_word(&w));
            }
        }
    }

    #[test]
    fn antipode_squares_to_identity_on_basis_words() {
        for h in [free_hopf(), nilpotent_hopf()] {
            let p = h.presentation();
            for w in p.basis_up_to(4) {
                let twice = h.antipode(&h.antipode_word(&w));
                assert_eq!(twice, p.element_from_word(w.clone()));
            }
        }
    }

    #[test]
    fn antipode_law_collapses_xy_to_zero() {
        let h = nilpotent_hopf();
        let p = h.presentation();
        let ctx = p.ctx().clone();
        let xy = p.word_from_names(&["x", "y"]).unwrap();
        let mut acc = AlgElement::zero();
        for ((u, v), c) in h.coproduct_word(&xy).terms() {
            let term = p
                .multiply(&h.antipode_word(u), &p.element_from_word(v.clone()))
                .scale(c, &ctx);
            acc = acc.add(&term, &ctx);
        }
        assert!(acc.is_zero());
    }

    #[test]
    fn axioms_hold_for_both_xyz_presentations() {
        for h in [free_hopf(), nilpotent_hopf()] {
            let report = h.verify_axioms(3);
            assert!(
                report.all_pass(),
                "failing checks: {:?}",
                report
                    .checks
                    .iter()
                    .filter(|c| !c.pass)
                    .collect::<Vec<_>>()
            );
            assert_eq!(report.checks.len(), 6);
        }
    }

    #[test]
    fn empty_presentation_satisfies_all_axioms() {
        let p = Presentation::braided_commutative(ctx18(), Vec::new(), &[]).unwrap();
        let h = HopfData::primitive(p);
        assert!(h.verify_axioms(4).all_pass());
    }

    /// A deliberately corrupted presentation: x and y commute with
    /// coefficient +1 even though the braiding demands -1. The coproduct is
    /// then not an algebra map, first seen on the (y, x) product.
    #[test]
    fn corrupted_swap_coefficient_breaks_the_coproduct_axiom() {
        let ctx = ctx18();
        let gens = vec![
            DegreedGenerator::new("x", 3, 18),
            DegreedGenerator::new("y", 9, 18),
        ];
        let p = Presentation::from_rules(
            ctx.clone(),
            gens,
            |_, _| crate::algebra::SwapRule {
                coeff: ctx.one(),
                lower: AlgElement::zero(),
            },
            |_| crate::algebra::PowerRule::None,
        )
        .unwrap();
        assert!(p.confluence_check(3).confluent, "the rules are consistent");
        let h = HopfData::primitive(p);
        let report = h.verify_axioms(2);
        assert!(!report.all_pass());
        let coproduct_map = report
            .checks
            .iter()
            .find(|c| c.name == "coproduct-algebra-map")
            .unwrap();
        assert!(!coproduct_map.pass);
        assert_eq!(coproduct_map.witness.as_deref(), Some("(y, x)"));
    }

    #[test]
    fn non_primitive_flags_are_rejected() {
        let p = Presentation::braided_commutative(ctx18(), xyz_generators(), &[]).unwrap();
        let err = HopfData::with_primitives(p.clone(), vec![true, false, true]);
        assert_eq!(err.unwrap_err(), HopfError::NonPrimitive("y".into()));
        let err = HopfData::with_primitives(p, vec![true]);
        assert_eq!(err.unwrap_err(), HopfError::FlagCountMismatch);
    }

    /// The braiding on the tensor square of the focused presentations also
    /// squares to the identity: all word degrees are multiples of 3, so
    /// zeta^{2 d1 d2} = 1 throughout.
    #[test]
    fn braiding_squares_to_identity_on_tensor_square_degrees() {
        let h = free_hopf();
        let p = h.presentation();
        let ctx = p.ctx();
        for a in p.basis_up_to(3) {
            for b in p.basis_up_to(3) {
                let e = 2 * p.word_degree(&a) as u64 * p.word_degree(&b) as u64 % 18;
                assert_eq!(ctx.root(e as i64), ctx.one());
            }
        }
    }
}
