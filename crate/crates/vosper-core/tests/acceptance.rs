//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line. Run with `cargo test -p vosper-core --test acceptance`
//! (add `-- --nocapture` to see the lines for passing criteria too).

use vosper_core::classify::{
    classify_superconnected_cayley, classify_vosperian_cayley, coprogression_growth_holds,
    SuperconnVia, VosperianCondition,
};
use vosper_core::connectivity::{
    connectivity_profile, is_superconnected, is_vosperian, isoperimetric_connectivity,
    vertex_connectivity,
};
use vosper_core::digraph::Digraph;
use vosper_core::group::small_group_catalog;
use vosper_core::oracle::{superconnected_by_definition, vosperian_by_definition, OracleBudget};
use vosper_core::suites::{
    bounds_suite, duality_suite, exercise_kappa2_suite, lemma1_suite, lemma4_suite, lemma5_suite,
    lemma_ap_suite, thm4_suite, thm6_suite, thm7_suite, SuiteReport,
};
use vosper_core::symmetry::is_irreducible;
use vosper_core::FiniteGroup;

const SEED: u64 = 42;

fn report_criterion(number: usize, title: &str, report: &SuiteReport) {
    let status = if report.passed { "PASS" } else { "FAIL" };
    println!(
        "criterion {number:2} [{title}]: {status} ({} instances, {} violations, {} findings)",
        report.instances,
        report.violations.len(),
        report.findings.len()
    );
    for finding in report.findings.iter().take(8) {
        println!("    finding: {finding}");
    }
    if report.findings.len() > 8 {
        println!("    ... and {} more findings", report.findings.len() - 8);
    }
    assert!(
        report.passed,
        "criterion {number} failed; first violations: {:?}",
        &report.violations[..report.violations.len().min(5)]
    );
}

fn pass_line(number: usize, title: &str, passed: bool, detail: &str) {
    let status = if passed { "PASS" } else { "FAIL" };
    println!("criterion {number:2} [{title}]: {status} ({detail})");
    assert!(passed, "criterion {number} failed: {detail}");
}

#[test]
fn criterion_01_vosperian_characterization_agreement() {
    report_criterion(1, "vosperian agreement, order <= 10", &thm6_suite());
}

#[test]
fn criterion_02_superconnected_characterization_agreement() {
    report_criterion(2, "superconnected agreement, order <= 10", &thm7_suite());
}

#[test]
fn criterion_03_arc_transitive_characterization() {
    report_criterion(3, "arc-transitive range check, order <= 12", &thm4_suite());
}

#[test]
fn criterion_04_duality() {
    report_criterion(4, "kappa_k and fragment duality", &duality_suite(SEED));
}

#[test]
fn criterion_05_connectivity_bounds() {
    report_criterion(5, "transitive connectivity bounds", &bounds_suite(SEED));
}

#[test]
fn criterion_06_twin_structure() {
    report_criterion(6, "twins vs. periodicity", &lemma1_suite());
    report_criterion(6, "twin-class divisibility", &lemma5_suite(SEED));
}

#[test]
fn criterion_07_product_growth() {
    report_criterion(7, "forced full products", &lemma4_suite(SEED));
    report_criterion(7, "progression rigidity", &lemma_ap_suite(SEED));
}

#[test]
fn criterion_08_coprogression_growth_equation() {
    // Every coprogression witness emitted by either classifier over the
    // order <= 10 corpus satisfies |{1,r} S~| = |S| + 2.
    let mut witnesses = 0usize;
    let mut violations = Vec::new();
    for g in small_group_catalog(10).unwrap() {
        let n = g.order();
        let elements: Vec<usize> = (0..n).filter(|&x| x != g.identity()).collect();
        for mask in 1u64..(1 << elements.len()) {
            let s = g.subset(
                elements
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &x)| x),
            );
            if !g.is_generating(&s) {
                continue;
            }
            let mut ratios = Vec::new();
            let verdict = classify_vosperian_cayley(&g, &s).unwrap();
            if verdict.condition == VosperianCondition::CondIII {
                ratios.push(verdict.coprogression_witness.unwrap().ratio);
            }
            if g.is_aperiodic(&s) {
                let sc = classify_superconnected_cayley(&g, &s).unwrap();
                if sc.via == SuperconnVia::Coprogression {
                    ratios.push(sc.witness.unwrap().ratio);
                }
            }
            for ratio in ratios {
                witnesses += 1;
                if s.len() + 4 <= n && !coprogression_growth_holds(&g, &s, ratio) {
                    violations.push(format!("Cay({},{s}) ratio {ratio}", g.label()));
                }
            }
        }
    }
    pass_line(
        8,
        "coprogression growth equation",
        violations.is_empty() && witnesses > 0,
        &format!("{witnesses} witnesses, {} violations", violations.len()),
    );
}

#[test]
fn criterion_09_algorithm_equivalence() {
    report_criterion(
        9,
        "fast deciders vs. brute force, n <= 10",
        &exercise_kappa2_suite(SEED),
    );
}

#[test]
fn criterion_10_named_instance_regressions() {
    let budget = OracleBudget::default();

    // Directed 5-cycle.
    let z5 = FiniteGroup::cyclic(5).unwrap();
    let c5 = Digraph::cayley(&z5, &z5.subset([1])).unwrap();
    let p = connectivity_profile(&c5).unwrap();
    assert_eq!(
        (p.kappa, p.kappa2, p.vosperian, p.superconnected),
        (1, Some(1), false, true)
    );
    assert_eq!(vosperian_by_definition(&c5, budget).unwrap(), p.vosperian);
    assert_eq!(
        superconnected_by_definition(&c5, budget).unwrap(),
        p.superconnected
    );

    // Complete digraph on five vertices.
    let k5 = Digraph::cayley(&z5, &z5.subset([1, 2, 3, 4])).unwrap();
    let p = connectivity_profile(&k5).unwrap();
    assert_eq!((p.kappa, p.kappa2, p.vosperian), (4, None, true));
    assert!(vosperian_by_definition(&k5, budget).unwrap());

    // The 3-step circulant on seven vertices.
    let z7 = FiniteGroup::cyclic(7).unwrap();
    let s7 = z7.subset([1, 2, 3]);
    let d7 = Digraph::cayley(&z7, &s7).unwrap();
    let p = connectivity_profile(&d7).unwrap();
    assert_eq!(
        (p.kappa, p.kappa2, p.vosperian, p.superconnected),
        (3, Some(3), false, true)
    );
    let verdict = classify_vosperian_cayley(&z7, &s7).unwrap();
    assert_eq!(verdict.condition, VosperianCondition::CondIII);
    let sc = classify_superconnected_cayley(&z7, &s7).unwrap();
    assert_eq!(sc.via, SuperconnVia::Coprogression);
    assert!(!vosperian_by_definition(&d7, budget).unwrap());
    assert!(superconnected_by_definition(&d7, budget).unwrap());

    // Symmetric 4-cycle: reducible (0 and 2 are twins) and superconnected.
    // Vosperianity: with |V| = d + 2 the only qualifying cutsets are
    // {1,3} = Γ(0) and {0,2} = Γ(1), each leaving two singleton components,
    // so the cutset definition, the kappa_2 route (not 2-separable) and the
    // algebraic classifier all return vosperian here.
    let z4 = FiniteGroup::cyclic(4).unwrap();
    let s4 = z4.subset([1, 3]);
    let d4 = Digraph::cayley(&z4, &s4).unwrap();
    assert!(!is_irreducible(&d4));
    let p = connectivity_profile(&d4).unwrap();
    assert!(p.superconnected);
    let by_definition = vosperian_by_definition(&d4, budget).unwrap();
    assert_eq!(p.vosperian, by_definition);
    assert_eq!(
        classify_vosperian_cayley(&z4, &s4).unwrap().vosperian,
        by_definition
    );
    assert!(by_definition);
    assert!(superconnected_by_definition(&d4, budget).unwrap());

    // Cross-checks shared by all four instances.
    for d in [&c5, &k5, &d7, &d4] {
        match isoperimetric_connectivity(d, 1).unwrap() {
            Some(kappa1) => assert_eq!(kappa1, vertex_connectivity(d)),
            // No 1-separation means no cutset: the minimum defaults to n - 1.
            None => assert_eq!(vertex_connectivity(d), d.vertex_count() - 1),
        }
        assert_eq!(
            is_vosperian(d).unwrap(),
            vosperian_by_definition(d, budget).unwrap()
        );
        assert_eq!(
            is_superconnected(d).unwrap(),
            superconnected_by_definition(d, budget).unwrap()
        );
    }

    pass_line(
        10,
        "named-instance regressions",
        true,
        "4 instances re-confirmed by oracles",
    );
}
