mod common;

use common::{all_correspondences, random_models, Reference};
use unaware::trace::{Step, StepStatus};
use unaware::{
    core_unawareness, enumerate_events, fixtures, know, trace_revised_chain, trace_standard_chain,
    unaware, DerivationTrace, OperatorKind, Relation, Verdict,
};

/// The verdict that the step values alone imply.
fn expected_verdict(steps: &[Step]) -> Verdict {
    let first = steps[0].value;
    if first.is_empty() {
        return Verdict::TriviallyConsistent;
    }
    for (i, w) in steps.windows(2).enumerate() {
        if !w[1].relation.holds(w[0].value, w[1].value) {
            return Verdict::BrokenAt { step: i + 2 };
        }
    }
    let last = steps.last().unwrap().value;
    if last.is_empty() {
        Verdict::Contradiction
    } else {
        assert_eq!(last, first);
        Verdict::Preserved
    }
}

fn statuses_consistent(t: &DerivationTrace) {
    assert_eq!(t.steps.len(), 5);
    for w in t.steps.windows(2) {
        let ok = w[1].relation.holds(w[0].value, w[1].value);
        assert_eq!(w[1].status.holds(), ok);
        if !ok {
            assert_eq!(w[1].status, StepStatus::Violated);
        }
    }
    assert_eq!(t.verdict, expected_verdict(&t.steps));
}

#[test]
fn revised_chain_never_contradicts() {
    for m in all_correspondences(3).chain(random_models(3000, 8, 606)) {
        let t = trace_revised_chain(&m);
        statuses_consistent(&t);
        assert_ne!(t.verdict, Verdict::Contradiction);
        // The chain starts and ends on the core set.
        let core = core_unawareness(&m);
        assert_eq!(t.steps[0].value, core);
        assert_eq!(t.steps[4].value, core);
        assert_eq!(t.steps[3].value, core);
    }
}

#[test]
fn revised_chain_breaks_exactly_when_an_aware_state_sees_known_core() {
    for m in all_correspondences(3).chain(random_models(3000, 8, 17)) {
        let core = core_unawareness(&m);
        let t = trace_revised_chain(&m);
        if core.is_empty() {
            assert_eq!(t.verdict, Verdict::TriviallyConsistent);
            continue;
        }
        let known = know(&m, OperatorKind::Revised, core).unwrap();
        let leaks = m
            .images()
            .iter()
            .any(|p| !p.is_empty() && !p.intersection(known).is_empty());
        let expected = if leaks {
            Verdict::BrokenAt { step: 4 }
        } else {
            Verdict::Preserved
        };
        assert_eq!(t.verdict, expected, "{m:?}");
    }
}

#[test]
fn fixed_point_core_is_preserved_throughout() {
    let mut seen = 0;
    for m in all_correspondences(3).chain(random_models(3000, 8, 23)) {
        let core = core_unawareness(&m);
        if core.is_empty() || unaware(&m, OperatorKind::Revised, core).unwrap().0 != core {
            continue;
        }
        seen += 1;
        let t = trace_revised_chain(&m);
        assert_eq!(t.verdict, Verdict::Preserved, "{m:?}");
        assert!(t.values().all(|v| v == core));
    }
    assert!(seen > 100);
}

#[test]
fn revised_step_values_come_from_the_operators() {
    for m in random_models(1000, 7, 31) {
        let r = Reference::new(&m, true);
        let t = trace_revised_chain(&m);
        let core = r.core();
        let v: Vec<u64> = t.values().map(|e| e.bits()).collect();
        assert_eq!(
            v,
            [
                core,
                r.u(core),
                r.nk(r.nk(r.u(r.full()))),
                r.nk(r.full()),
                core
            ]
        );
        assert_eq!(t.event, None);
    }
}

#[test]
fn standard_chain_matches_reference() {
    for m in random_models(300, 6, 47) {
        let r = Reference::new(&m, false);
        for e in enumerate_events(m.space()).unwrap() {
            let t = trace_standard_chain(&m, e).unwrap();
            statuses_consistent(&t);
            let ue = r.u(e.bits());
            let v: Vec<u64> = t.values().map(|x| x.bits()).collect();
            assert_eq!(v, [ue, r.u(ue), r.nk(r.nk(ue)), r.nk(r.full()), 0]);
            let rel: Vec<Relation> = t.steps[1..].iter().map(|s| s.relation).collect();
            assert_eq!(
                rel,
                [
                    Relation::Subset,
                    Relation::Subset,
                    Relation::Equal,
                    Relation::Equal
                ]
            );
            assert_eq!(t.event, Some(e));
        }
    }
}

#[test]
fn standard_chain_on_premise_models_is_trivial() {
    // Whenever the three premises hold the chain can only start empty.
    for m in all_correspondences(3) {
        let premises_hold = [
            unaware::PropertyId::Necessitation,
            unaware::PropertyId::KuIntrospection,
            unaware::PropertyId::AuIntrospectionAll,
        ]
        .iter()
        .all(|&p| {
            unaware::check_property(&m, OperatorKind::Standard, p, unaware::Budget::Exhaustive)
                .unwrap()
                .holds
        });
        if premises_hold {
            for e in enumerate_events(m.space()).unwrap() {
                let t = trace_standard_chain(&m, e).unwrap();
                assert_eq!(t.verdict, Verdict::TriviallyConsistent);
            }
        }
    }
}

#[test]
fn standard_chain_rejects_foreign_events() {
    let m = fixtures::three_state();
    assert!(trace_standard_chain(&m, unaware::Event::empty(4)).is_err());
}

#[test]
fn all_empty_model_keeps_everything() {
    let m = fixtures::all_empty(4);
    let t = trace_revised_chain(&m);
    assert_eq!(t.verdict, Verdict::Preserved);
    assert!(t.values().all(|v| v.is_full()));
}

#[test]
fn no_empty_image_means_trivial_revised_chain() {
    let t = trace_revised_chain(&fixtures::three_state());
    assert!(t.values().all(|v| v.is_empty()));
    assert_eq!(t.verdict, Verdict::TriviallyConsistent);
}
