//! End-to-end acceptance suite.
//!
//! Each criterion is one test that prints a single pass/FAIL line, so
//! `cargo test --test acceptance -- --nocapture --test-threads=1` reads as a
//! checklist. Every value asserted here is exact; nothing is sampled from
//! the code under test.

use anyonic_core::algebra::Strategy;
use anyonic_core::anyon::{
    braid_coefficient, braid_from_r, braid_pair, is_focused, psi_squared_is_identity,
};
use anyonic_core::homology::{boundary, d_squared_check, homology_dims};
use anyonic_core::hp::{assemble_hp, focusing_predicate};
use anyonic_core::presets::{preset, FIXED_PRESETS};
use anyonic_core::qla::Character;
use anyonic_core::scalar::cyclotomic_polynomial;
use anyonic_core::{
    AlgElement, AnyonObject, CycloCtx, DegreedGenerator, FocusParams, Presentation, Word,
};
use num_traits::ToPrimitive;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::BTreeSet;
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};

/// Run one criterion body, printing exactly one line for it.
fn criterion(label: &str, body: impl FnOnce()) {
    let outcome = catch_unwind(AssertUnwindSafe(body));
    match &outcome {
        Ok(()) => println!("criterion {label}: pass"),
        Err(_) => println!("criterion {label}: FAIL"),
    }
    if let Err(payload) = outcome {
        resume_unwind(payload);
    }
}

/// All words of length `1..=max_len` over the first `gens` generators.
fn all_words(gens: u32, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for g in 0..gens {
                let mut v = w.indices().to_vec();
                v.push(g);
                next.push(Word::from_indices(v));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

#[test]
fn criterion_01_braiding_squares_to_identity_on_focused_degrees() {
    criterion("01 focused braiding is involutive", || {
        let ctx = CycloCtx::new(18).unwrap();
        let fp = FocusParams::new(18, 3).unwrap();
        let one = ctx.one();

        let mut pairs = 0;
        for d1 in (0..18).step_by(3) {
            for d2 in (0..18).step_by(3) {
                let c = braid_coefficient(&ctx, d1, d2);
                assert_eq!(ctx.mul(&c, &c), one, "pair ({d1}, {d2})");
                pairs += 1;
            }
        }
        assert_eq!(pairs, 36);

        let focused = AnyonObject::new(
            ctx.clone(),
            (0..6)
                .map(|k| DegreedGenerator::new(format!("v{k}"), 3 * k, 18))
                .collect(),
        )
        .unwrap();
        assert!(is_focused(&focused, &fp));
        assert!(psi_squared_is_identity(&ctx, &focused, &focused).holds);

        // Degree 1 sits outside the focused family and breaks involutivity.
        let sharp = AnyonObject::new(ctx.clone(), vec![DegreedGenerator::new("u", 1, 18)]).unwrap();
        let check = psi_squared_is_identity(&ctx, &sharp, &sharp);
        assert!(!check.holds);
        assert_eq!(check.witness, Some((1, 1)));
        let c = braid_coefficient(&ctx, 1, 1);
        assert_ne!(ctx.mul(&c, &c), one);
    });
}

#[test]
fn criterion_02_r_matrix_route_matches_direct_braiding() {
    criterion("02 R-matrix route equals direct braiding", || {
        for n in [2u32, 8, 18] {
            let ctx = CycloCtx::new(n).unwrap();
            for d1 in 0..n {
                for d2 in 0..n {
                    let v = DegreedGenerator::new("v", d1, n);
                    let w = DegreedGenerator::new("w", d2, n);
                    assert_eq!(
                        braid_from_r(&ctx, &v, &w),
                        braid_pair(&ctx, &v, &w),
                        "n = {n}, degrees ({d1}, {d2})"
                    );
                }
            }
        }
    });
}

#[test]
fn criterion_03_hopf_axioms_hold_and_coproduct_expands_as_expected() {
    criterion("03 Hopf axiom families and coproduct expansion", || {
        for name in ["z18-nilpotent", "z18-free"] {
            let hopf = preset(name).unwrap().hopf().unwrap().unwrap();
            let report = hopf.verify_axioms(4);
            assert_eq!(report.checks.len(), 6, "{name}");
            for check in &report.checks {
                assert!(
                    check.pass,
                    "{name}: {} failed with witness {:?}",
                    check.name, check.witness
                );
            }

            // Delta(x y) = 1 (x) xy + x (x) y - y (x) x + xy (x) 1.
            let p = hopf.presentation();
            let ctx = p.ctx();
            let xy = p.word_from_names(&["x", "y"]).unwrap();
            let x = p.word_from_names(&["x"]).unwrap();
            let y = p.word_from_names(&["y"]).unwrap();
            let product = AlgElement::from_terms([(xy.clone(), ctx.one())], ctx);
            let image = hopf.coproduct(&product);
            let expected = [
                ((Word::empty(), xy.clone()), ctx.one()),
                ((x.clone(), y.clone()), ctx.one()),
                ((y.clone(), x.clone()), ctx.from_int(-1)),
                ((xy.clone(), Word::empty()), ctx.one()),
            ];
            assert_eq!(image.term_count(), 4, "{name}");
            for (pair, coeff) in expected {
                let found = image
                    .terms()
                    .find(|(p2, _)| **p2 == pair)
                    .map(|(_, c)| c.clone());
                assert_eq!(found, Some(coeff), "{name}: term {pair:?}");
            }
        }
    });
}

#[test]
fn criterion_04_enveloping_algebras_reproduce_their_paired_presets() {
    criterion("04 enveloping algebras match paired presets", || {
        let ctx = CycloCtx::new(18).unwrap();

        let nonabelian = preset("z18-nonabelian").unwrap();
        let envelope = nonabelian
            .quantum_lie()
            .unwrap()
            .unwrap()
            .enveloping_presentation()
            .unwrap();
        let free = preset(nonabelian.paired_preset().unwrap())
            .unwrap()
            .presentation()
            .unwrap()
            .unwrap();
        assert_eq!(*envelope.presentation(), free);
        let rendered: Vec<String> = envelope
            .eliminations()
            .iter()
            .map(|e| {
                format!(
                    "{} = {}",
                    e.name,
                    envelope.presentation().render_element(&e.definition)
                )
            })
            .collect();
        assert_eq!(rendered, ["a = 2*x^2", "b = 2*y^2", "c = 2*z^2"]);

        let abelian = preset("z18-abelian").unwrap();
        let envelope2 = abelian
            .quantum_lie()
            .unwrap()
            .unwrap()
            .enveloping_presentation()
            .unwrap();
        let nilpotent = preset(abelian.paired_preset().unwrap())
            .unwrap()
            .presentation()
            .unwrap()
            .unwrap();
        assert_eq!(*envelope2.presentation(), nilpotent);
        assert!(envelope2.eliminations().is_empty());

        // Both routes normalise every short word identically.
        for w in all_words(3, 4) {
            let lhs = envelope
                .presentation()
                .normal_form([(w.clone(), ctx.one())]);
            let rhs = free.normal_form([(w.clone(), ctx.one())]);
            assert_eq!(lhs, rhs, "word {w:?}");
            let lhs = envelope2
                .presentation()
                .normal_form([(w.clone(), ctx.one())]);
            let rhs = nilpotent.normal_form([(w.clone(), ctx.one())]);
            assert_eq!(lhs, rhs, "word {w:?}");
        }
    });
}

#[test]
fn criterion_05_quantum_lie_side_conditions() {
    criterion("05 quantum Lie side conditions", || {
        let qla = preset("z18-nonabelian")
            .unwrap()
            .quantum_lie()
            .unwrap()
            .unwrap();

        let report = qla.validate();
        let names: Vec<&str> = report.checks.iter().map(|c| c.name).collect();
        assert_eq!(
            names,
            ["degree-additivity", "focused-degrees", "braiding-involutive"]
        );
        assert!(report.all_pass(), "{report:?}");

        let kernel = qla.check_bracket_kills_kernel();
        assert!(kernel.pass, "witness {:?}", kernel.witness);
        assert_eq!(kernel.kernel_dim, 18);

        let (nested_pass, witness) = qla.check_nested_brackets();
        assert!(nested_pass, "witness {witness:?}");
    });
}

#[test]
fn criterion_06_boundary_squares_to_zero() {
    criterion("06 d^2 = 0 through degree six", || {
        for name in ["z18-nonabelian", "z18-abelian"] {
            let qla = preset(name).unwrap().quantum_lie().unwrap().unwrap();
            let delta = Character::zero(&qla);
            let check = d_squared_check(&qla, &delta, 6).unwrap();
            assert!(check.pass, "{name}: {:?}", check.first_failure);
        }
    });
}

#[test]
fn criterion_07_abelian_homology_dimensions_and_graded_support() {
    criterion("07 abelian homology dimensions", || {
        let qla = preset("z18-abelian").unwrap().quantum_lie().unwrap().unwrap();
        let delta = Character::zero(&qla);
        let table = homology_dims(&qla, &delta, 6).unwrap();
        for i in 0..=7 {
            assert!(boundary(&qla, &delta, i).unwrap().is_zero(), "d_{i}");
        }
        for i in 0..=6 {
            assert_eq!(table.total(i), (i + 2) * (i + 1) / 2, "H_{i}");
            for (degree, dim) in table.graded(i) {
                assert!(dim > 0);
                assert_eq!(degree % 3, 0, "H_{i} degree {degree}");
                assert_eq!(
                    (degree / 3) % 2,
                    (i % 2) as u32,
                    "H_{i} degree {degree} has the wrong parity"
                );
            }
        }
    });
}

#[test]
fn criterion_08_periodic_tables_focus_and_grow() {
    criterion("08 periodic tables focus by parity and grow", || {
        let qla = preset("z18-abelian").unwrap().quantum_lie().unwrap().unwrap();
        let delta = Character::zero(&qla);
        let table = homology_dims(&qla, &delta, 12).unwrap();
        for parity in [0u8, 1] {
            let small = assemble_hp(&table, parity, 6);
            let large = assemble_hp(&table, parity, 12);
            assert!(focusing_predicate(&small, 3), "parity {parity}");
            assert!(focusing_predicate(&large, 3), "parity {parity}");
            let expected: Vec<u32> = if parity == 0 {
                vec![0, 6, 12]
            } else {
                vec![3, 9, 15]
            };
            assert_eq!(small.degrees(), expected, "parity {parity}");
            assert_eq!(large.degrees(), expected, "parity {parity}");
            for (degree, count) in small.per_degree() {
                assert!(
                    large.per_degree()[degree] > *count,
                    "parity {parity} degree {degree} must grow with the cutoff"
                );
            }
        }
    });
}

#[test]
fn criterion_09_scalar_kernel_against_float_oracle() {
    criterion("09 scalar kernel matches float oracle", || {
        // Coefficients of Phi_n against the numeric product of
        // (x - e^{2 pi i k / n}) over the primitive residues k.
        fn gcd(a: u32, b: u32) -> u32 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        for n in 1..=100u32 {
            let exact = cyclotomic_polynomial(n);
            let residues: Vec<u32> = (0..n).filter(|k| gcd(*k, n) == 1).collect();
            // Multiplying factors in ascending-angle order clusters the
            // roots of every partial product on an arc, which makes its
            // coefficients blow up binomially and ruins the precision of
            // the final cancellation. A golden-ratio stride through the
            // same factors keeps each prefix spread around the circle.
            let count = residues.len() as u32;
            let mut stride = ((count as f64 / 1.618_033_988_7).round() as u32).max(1);
            while gcd(stride, count) != 1 {
                stride += 1;
            }
            let mut poly = vec![(1.0f64, 0.0f64)];
            for t in 0..count {
                let k = residues[((t * stride) % count) as usize];
                let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
                let root = (theta.cos(), theta.sin());
                let mut next = vec![(0.0, 0.0); poly.len() + 1];
                for (j, c) in poly.iter().enumerate() {
                    next[j + 1].0 += c.0;
                    next[j + 1].1 += c.1;
                    next[j].0 -= c.0 * root.0 - c.1 * root.1;
                    next[j].1 -= c.0 * root.1 + c.1 * root.0;
                }
                poly = next;
            }
            assert_eq!(poly.len(), exact.len(), "n = {n}");
            for (j, c) in exact.iter().enumerate() {
                let value = c.to_f64().unwrap();
                assert!(
                    (poly[j].0 - value).abs() < 1e-6 && poly[j].1.abs() < 1e-6,
                    "n = {n}, coefficient {j}: exact {value}, float {:?}",
                    poly[j]
                );
            }
        }

        // Field axioms on pseudorandom triples.
        let ctx = CycloCtx::new(18).unwrap();
        let mut rng = StdRng::seed_from_u64(0xA11CE);
        let mut random_element = |rng: &mut StdRng| {
            let mut acc = ctx.zero();
            for _ in 0..rng.random_range(1..=3) {
                let numer = rng.random_range(-5i64..=5);
                let power = rng.random_range(0..18i64);
                acc = ctx.add(&acc, &ctx.scale(&ctx.root(power), &num_rational::BigRational::new(
                    numer.into(),
                    rng.random_range(1i64..=4).into(),
                )));
            }
            acc
        };
        for _ in 0..1000 {
            let a = random_element(&mut rng);
            let b = random_element(&mut rng);
            let c = random_element(&mut rng);
            assert_eq!(ctx.mul(&ctx.mul(&a, &b), &c), ctx.mul(&a, &ctx.mul(&b, &c)));
            assert_eq!(ctx.add(&ctx.add(&a, &b), &c), ctx.add(&a, &ctx.add(&b, &c)));
            assert_eq!(
                ctx.mul(&a, &ctx.add(&b, &c)),
                ctx.add(&ctx.mul(&a, &b), &ctx.mul(&a, &c))
            );
            assert!(ctx.add(&a, &ctx.neg(&a)).is_zero());
            if !a.is_zero() {
                assert_eq!(ctx.mul(&a, &ctx.inv(&a).unwrap()), ctx.one());
            }
        }
    });
}

#[test]
fn criterion_10_confluence_and_rewrite_order_independence() {
    criterion("10 confluence and rewrite-order independence", || {
        // Overlap checks across every built-in family, parametric ones at
        // m = 5, and the enveloping presentations of the bracket presets.
        let mut presentations: Vec<(String, Presentation)> = Vec::new();
        for name in FIXED_PRESETS
            .iter()
            .copied()
            .chain(["z2m2-free(5)", "z2m2-nilpotent(5)", "z2m2-nonabelian(5)", "z2m2-abelian(5)"])
        {
            let def = preset(name).unwrap();
            let p = match def.presentation() {
                Some(p) => p.unwrap(),
                None => def
                    .quantum_lie()
                    .unwrap()
                    .unwrap()
                    .enveloping_presentation()
                    .unwrap()
                    .presentation()
                    .clone(),
            };
            presentations.push((name.to_string(), p));
        }
        for (name, p) in &presentations {
            let report = p.confluence_check(3);
            assert!(report.confluent, "{name}: {:?}", report.failures);
        }

        // Strategy independence on pseudorandom words.
        let mut rng = StdRng::seed_from_u64(7);
        for name in ["z18-free", "z18-nilpotent"] {
            let p = preset(name).unwrap().presentation().unwrap().unwrap();
            let one = p.ctx().one();
            for _ in 0..500 {
                let len = rng.random_range(1..=5);
                let w = Word::from_indices((0..len).map(|_| rng.random_range(0..3)).collect());
                let reference = p.normal_form([(w.clone(), one.clone())]);
                for strategy in [
                    Strategy::Leftmost,
                    Strategy::Rightmost,
                    Strategy::Seeded(rng.random()),
                ] {
                    assert_eq!(
                        p.normal_form_with([(w.clone(), one.clone())], strategy),
                        reference,
                        "{name}: word {w:?} under {strategy:?}"
                    );
                }
            }

            // Exhaustive oracle: enumerate every rewrite path from every
            // length-3 word and demand a unique terminal element.
            for w in all_words(3, 3) {
                if w.len() != 3 {
                    continue;
                }
                let outcomes = all_rewrite_outcomes(&p, &w);
                let reference = p.render_element(&p.normal_form([(w.clone(), one.clone())]));
                assert_eq!(
                    outcomes,
                    BTreeSet::from([reference]),
                    "{name}: word {w:?}"
                );
            }
        }
    });
}

/// Every terminal (redex-free) element reachable from `start` by single-step
/// rewrites at arbitrary positions, rendered canonically.
fn all_rewrite_outcomes(p: &Presentation, start: &Word) -> BTreeSet<String> {
    let ctx = p.ctx();
    let mut seen = BTreeSet::new();
    let mut normals = BTreeSet::new();
    let mut queue = vec![AlgElement::from_terms([(start.clone(), ctx.one())], ctx)];
    while let Some(element) = queue.pop() {
        if !seen.insert(p.render_element(&element)) {
            continue;
        }
        let mut reducible = false;
        for (w, c) in element.terms() {
            for t in p.redex_positions(w) {
                reducible = true;
                let replaced = p.rewrite_at(w, t).expect("redex position");
                let mut next =
                    element.sub(&AlgElement::from_terms([(w.clone(), c.clone())], ctx), ctx);
                for (rw, rc) in replaced {
                    next = next.add(
                        &AlgElement::from_terms([(rw, ctx.mul(&rc, c))], ctx),
                        ctx,
                    );
                }
                queue.push(next);
            }
        }
        if !reducible {
            normals.insert(p.render_element(&element));
        }
    }
    normals
}
