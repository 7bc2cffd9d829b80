use trialgebra::sampling::DEFAULT_SEED;
use trialgebra::suite::{axiom_report, AxiomTheory, RandomSweep};

fn random(count: usize) -> Option<RandomSweep> {
    Some(RandomSweep {
        count,
        seed: DEFAULT_SEED,
    })
}

#[test]
fn trias_exhaustive_and_random() {
    let r = axiom_report(AxiomTheory::Trias, 7, random(10_000));
    assert!(r.passed, "{r:?}");
    assert_eq!(r.random.unwrap().triples, 10_000);
}

#[test]
fn tridend_exhaustive_and_random() {
    let r = axiom_report(AxiomTheory::Tridend, 6, random(10_000));
    assert!(r.passed, "{r:?}");
}

#[test]
fn tricub_exhaustive_and_random() {
    let r = axiom_report(AxiomTheory::Tricub, 7, random(10_000));
    assert!(r.passed, "{r:?}");
}

#[test]
fn qsym_and_solomon() {
    for t in [AxiomTheory::Qsym, AxiomTheory::Solomon] {
        let r = axiom_report(t, 6, random(2_000));
        assert!(r.passed, "{r:?}");
    }
}

#[test]
fn printed_solomon_products_are_reported() {
    let r = axiom_report(AxiomTheory::Solomon, 5, None);
    let printed = r.printed_variant.unwrap();
    assert!(!printed.passed());
    assert!(r.passed);
}

#[test]
fn same_seed_is_reproducible() {
    let a = axiom_report(
        AxiomTheory::Trias,
        3,
        Some(RandomSweep { count: 50, seed: 1 }),
    );
    let b = axiom_report(
        AxiomTheory::Trias,
        3,
        Some(RandomSweep { count: 50, seed: 1 }),
    );
    assert_eq!(a.random, b.random);
}
