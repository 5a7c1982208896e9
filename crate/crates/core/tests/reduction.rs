//! Checkers and constructions against the independent evaluators in
//! `common`.

mod common;

use bihomega_core::algebra::AlgebraInstance;
use bihomega_core::checkers::check_instance;
use bihomega_core::constructions::{ConstructOptions, ConstructionError, CONSTRUCTIONS};
use bihomega_core::forge::{brute_force_rb_search, corpus, SearchConfig};
use bihomega_core::linalg::int;
use bihomega_core::report::CheckConfig;
use common::*;

fn corpus_and_perturbations() -> Vec<(String, AlgebraInstance)> {
    let mut out = Vec::new();
    for e in corpus() {
        for (k, p) in perturbations(&e.instance).into_iter().enumerate() {
            out.push((format!("{}+{k}", e.name), p));
        }
        out.push((e.name, e.instance));
    }
    out
}

#[test]
fn verdicts_and_witnesses_match_the_oracle() {
    let cfg = CheckConfig::with_max_witnesses(usize::MAX);
    for (name, a) in corpus_and_perturbations() {
        let g = Alg::of(&a);
        let v = check_instance(&a, &cfg).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(v.passed(), bihom_passes(&g, a.kind()), "{name}");
        for r in &v.reports {
            assert_eq!(r.witnesses.len(), r.violations, "{name} {}", r.axiom);
            for w in &r.witnesses {
                assert_ne!(w.lhs, w.rhs, "{name} {}", r.axiom);
                assert!(witness_reproduces(&g, a.kind(), &r.axiom, w), "{name} {} {w:?}", r.axiom);
            }
        }
    }
}

#[test]
fn identity_maps_reduce_to_the_classical_identities() {
    let cfg = CheckConfig::fast();
    let mut seen = 0;
    for (name, a) in corpus_and_perturbations() {
        if !a.has_identity_maps() {
            continue;
        }
        let g = Alg::of(&a);
        let v = check_instance(&a, &cfg).unwrap();
        assert_eq!(v.passed(), classical_passes(&g, a.kind()), "{name}");
        seen += 1;
    }
    assert!(seen > 1000, "only {seen} instances");
}

#[test]
fn constructions_match_classical_formulas() {
    let opts = ConstructOptions::default();
    let mut compared = 0;
    for e in corpus() {
        let a = &e.instance;
        if !a.has_identity_maps() {
            continue;
        }
        let g = Alg::of(a);
        for name in CONSTRUCTIONS.iter().filter(|n| construction_input(n).contains(&a.kind())) {
            let families = if needs_rb(name) {
                let mut all = Vec::new();
                for w in [0, 1, -1] {
                    let mut cfg = SearchConfig::with_weight(int(w));
                    cfg.target = Some(8);
                    all.extend(brute_force_rb_search(a, &cfg).unwrap());
                }
                all.into_iter().map(Some).collect()
            } else {
                vec![None]
            };
            for r in &families {
                let out = match run_construction(name, a, r.as_ref(), &opts) {
                    Ok(out) => out,
                    Err(ConstructionError::NonzeroWeight { .. } | ConstructionError::NonCommutativeOmega { .. }) => continue,
                    Err(err) => panic!("{} {name}: {err}", e.name),
                };
                assert_eq!(Alg::of(&out.instance).ops, classical_construction(name, &g, r.as_ref()), "{} {name}", e.name);
                compared += 1;
            }
        }
    }
    assert!(compared > 100, "only {compared} comparisons");
}

#[test]
fn identity_twist_is_a_fixpoint() {
    use bihomega_core::algebra::LinearFamily;
    use bihomega_core::constructions::yau_twist;
    for e in corpus() {
        let a = &e.instance;
        let id = LinearFamily::identity(a.omega().clone(), a.dim());
        let out = yau_twist(a, &id, &id, &ConstructOptions::default()).unwrap();
        let g = Alg::of(a);
        assert_eq!(Alg::of(&out.instance).ops, g.ops, "{}", e.name);
        assert_eq!(out.instance.p(), a.p());
        assert_eq!(out.instance.q(), a.q());
    }
}
