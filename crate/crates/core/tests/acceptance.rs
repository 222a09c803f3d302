//! Acceptance suite: one test per structural criterion, each printing a
//! PASS/FAIL line.  All checks are exact; the default desk-scale suite is
//! every valid m = 3 instance with a_i <= 5.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::sync::OnceLock;

use rees_aci::caps::Caps;
use rees_aci::exponent::{ExponentVec, Layout};
use rees_aci::groebner::{
    buchberger, is_groebner, orient_all, reduced_basis, reduced_basis_of,
};
use rees_aci::homology::{betti_table, taylor_betti};
use rees_aci::instance::Instance;
use rees_aci::monomial::MonomialIdeal;
use rees_aci::order::TermOrder;
use rees_aci::report::{AnalysisReport, Checks};
use rees_aci::suite::{default_desk_suite, run_suite, SuiteOutcome, SuiteSpec};

fn suite_outcome() -> &'static SuiteOutcome {
    static OUTCOME: OnceLock<SuiteOutcome> = OnceLock::new();
    OUTCOME.get_or_init(|| {
        let spec = SuiteSpec { instances: default_desk_suite(), ..Default::default() };
        run_suite(&spec, 1, &Checks::default(), &Caps::default())
    })
}

fn reports() -> impl Iterator<Item = &'static AnalysisReport> {
    suite_outcome().reports.iter().map(|o| {
        o.report
            .as_ref()
            .unwrap_or_else(|| panic!("suite instance failed validation: {:?}", o.validation_error))
    })
}

fn report_for(a: &[u64], b: &[u64]) -> &'static AnalysisReport {
    reports()
        .find(|r| r.instance.a == a && r.instance.b == b)
        .expect("named instance missing from default suite")
}

fn claim_ok(report: &AnalysisReport, name: &str) -> Option<bool> {
    report.claims.iter().find(|c| c.name == name).and_then(|c| c.ok)
}

/// Count instances where the named claim holds; panic (with context) on any
/// instance where it ran and failed.
fn assert_claim_everywhere(name: &str) -> usize {
    let mut checked = 0;
    for r in reports() {
        match claim_ok(r, name) {
            Some(true) => checked += 1,
            Some(false) => panic!(
                "claim {name} failed on a={:?}, b={:?}",
                r.instance.a, r.instance.b
            ),
            None => {}
        }
    }
    assert!(checked > 0, "claim {name} never ran");
    checked
}

fn announce(criterion: &str, detail: String) {
    println!("acceptance {criterion}: PASS — {detail}");
}

#[test]
fn criterion_01_oracle_equivalence() {
    let with_structured =
        reports().filter(|r| r.instance.b.iter().sum::<u64>() <= *r.instance.a.iter().min().unwrap());
    let expected = with_structured.count();
    let equal = assert_claim_everywhere("oracle-equivalence");
    let groebner = assert_claim_everywhere("structured-groebner");
    assert_eq!(equal, expected, "every |b| <= min(a) instance is cross-checked");
    assert_eq!(groebner, expected);
    announce(
        "criterion 1 (oracle equivalence)",
        format!("structured basis equals elimination oracle on {equal} instances"),
    );
}

#[test]
fn criterion_02_basis_shape() {
    let mut count = 0;
    for r in reports() {
        assert!(
            r.basis.shape_ok,
            "basis shape violated on a={:?}, b={:?}",
            r.instance.a,
            r.instance.b
        );
        count += 1;
    }
    assert_claim_everywhere("basis-shape");
    announce(
        "criterion 2 (basis shape)",
        format!("linear family + W-power profile on all {count} instances"),
    );
}

#[test]
fn criterion_03_minimality_criterion() {
    let checked = assert_claim_everywhere("minimality-criterion");
    let not_minimal = report_for(&[3, 3, 3], &[0, 1, 1]);
    assert_eq!(not_minimal.basis.minimal, Some(false));
    assert_eq!(not_minimal.basis.minimal_predicted, Some(false));
    let minimal = report_for(&[3, 3, 3], &[1, 1, 1]);
    assert_eq!(minimal.basis.minimal, Some(true));
    assert_eq!(minimal.basis.minimal_predicted, Some(true));
    announce(
        "criterion 3 (minimality iff sorted b_{m-2} > 0)",
        format!("direct test agrees with the predicate on {checked} instances"),
    );
}

#[test]
fn criterion_04_filtration() {
    let groebner = assert_claim_everywhere("filtration-groebner");
    let extended = assert_claim_everywhere("filtration-colons-extended");
    assert_eq!(groebner, extended);
    // the computed per-step depths realize the induction bound as well
    assert_claim_everywhere("filtration-depth-bound");
    let total_steps: usize =
        reports().map(|r| r.filtration.as_ref().map(|f| f.steps.len()).unwrap_or(0)).sum();
    announce(
        "criterion 4 (filtration)",
        format!("{total_steps} steps across {groebner} instances, all Gröbner with extended colons"),
    );
}

#[test]
fn criterion_05_symmetric_algebra_depth() {
    let checked = assert_claim_everywhere("symmetric-algebra-cm");
    for r in reports() {
        let h = r.homology.as_ref().expect("homology ran");
        let expected = r.instance.m as i64 + 1;
        assert_eq!(h.depth_sym, expected);
        assert_eq!(h.dim_sym, expected);
    }
    announce(
        "criterion 5 (symmetric algebra)",
        format!("depth = dim = m + 1 on {checked} instances"),
    );
}

#[test]
fn criterion_06_main_theorem_acm() {
    let checked = assert_claim_everywhere("initial-ideal-acm");
    for r in reports() {
        let h = r.homology.as_ref().expect("homology ran");
        assert!(h.depth_ini_l >= r.instance.m as i64);
        assert_eq!(h.dim_ini_l, r.instance.m as i64 + 1);
        assert!(h.acm);
    }
    announce(
        "criterion 6 (almost Cohen-Macaulay)",
        format!("depth >= m and dim = m + 1 on {checked} instances"),
    );
}

#[test]
fn criterion_07_saturation_bound_and_sharpness() {
    let equi = reports().filter(|r| r.instance.equi_generated).count();
    let checked = assert_claim_everywhere("saturation-bound");
    assert_eq!(checked, equi, "every equi-generated instance is checked");
    // the saturation identity itself holds on every instance
    assert_claim_everywhere("saturation-identity");
    // sharpness on the named example: the colon first reaches the ideal at 2
    let named = report_for(&[3, 3, 3], &[1, 1, 1]);
    assert_eq!(named.numbers.saturation_exponent_bound, Some(2));
    assert_eq!(named.numbers.saturation_exponent_observed, Some(2));
    announce(
        "criterion 7 (saturation bound, sharp example)",
        format!("colon chain reaches the ideal at the bound on {checked} equi instances; named sharpness holds"),
    );
}

#[test]
fn criterion_08_relation_type_and_reduction_number() {
    let mut rel_checked = 0;
    let mut red_checked = 0;
    for r in reports() {
        if !(r.instance.equi_generated && r.instance.b_gcd == 1) {
            continue;
        }
        let bsum: u64 = r.instance.b.iter().sum();
        assert_eq!(
            claim_ok(r, "relation-type"),
            Some(true),
            "relation type off on a={:?}, b={:?}",
            r.instance.a,
            r.instance.b
        );
        assert_eq!(r.numbers.rel_type, Some(bsum));
        assert_eq!(r.basis.max_xtilde_degree, bsum);
        rel_checked += 1;
        if bsum <= 4 {
            assert_eq!(claim_ok(r, "reduction-number"), Some(true));
            assert_eq!(r.numbers.reduction_number, Some(bsum - 1));
            red_checked += 1;
        }
    }
    assert!(rel_checked > 0 && red_checked > 0);
    announce(
        "criterion 8 (relation type / reduction number)",
        format!("relType = |b| on {rel_checked} instances, red = |b| - 1 on {red_checked} with |b| <= 4"),
    );
}

#[test]
fn criterion_09_fiber_and_elimination_equation() {
    let mut checked = 0;
    for r in reports() {
        if !(r.instance.equi_generated && r.instance.b_gcd == 1) {
            continue;
        }
        assert_eq!(claim_ok(r, "fiber-principal"), Some(true));
        assert_eq!(claim_ok(r, "elimination-equation"), Some(true));
        let bsum: u64 = r.instance.b.iter().sum();
        assert_eq!(r.numbers.fiber_dim, Some(r.instance.m as u64));
        assert_eq!(r.numbers.fiber_regularity, Some(bsum - 1));
        checked += 1;
    }
    assert!(checked > 0);
    announce(
        "criterion 9 (principal fiber)",
        format!("toric fiber ideal = <W^|b| - X^b> with dim m, reg |b| - 1 on {checked} instances"),
    );
}

#[test]
fn criterion_10_multiplicity() {
    let named = report_for(&[3, 3, 3], &[1, 1, 1]);
    assert_eq!(named.numbers.multiplicity_computed, Some(13));
    assert_eq!(named.numbers.multiplicity_formula, Some(13));
    let mut checked = 0;
    let mut flagged = 0;
    for r in reports() {
        if !(r.instance.equi_generated && r.instance.b_gcd == 1) {
            continue;
        }
        match claim_ok(r, "multiplicity-formula") {
            Some(true) => checked += 1,
            Some(false) => flagged += 1,
            None => {}
        }
    }
    // the grading reproduces the formula on the whole suite; discrepancies
    // would be flagged rather than failed, but none occur
    assert_eq!(flagged, 0, "flagged multiplicity discrepancies");
    assert!(checked > 0);
    announce(
        "criterion 10 (multiplicity)",
        format!("e = 1 + |b| + ... + |b|^(m-1) on {checked} instances; named value 13"),
    );
}

#[test]
fn suite_reports_no_failures_or_caps() {
    let outcome = suite_outcome();
    assert_eq!(outcome.summary.claim_failures, 0, "{:?}", outcome.summary.failures);
    assert_eq!(outcome.summary.validation_errors, 0);
    assert_eq!(outcome.summary.capped, 0);
    assert_eq!(outcome.summary.flagged, 0);
    assert_eq!(outcome.exit_code(), 0);
    announce(
        "summary",
        format!("{} instances, all claims verified, no caps", outcome.summary.instances),
    );
}

/// Deterministic generator for criterion 11's randomized trials.
struct Lcg(u64);
impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 33
    }
    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

#[test]
fn criterion_11_engine_self_consistency() {
    let caps = Caps::default();
    let mut rng = Lcg(0x5eed_cafe);

    // (a) Betti table equals the Taylor oracle on random monomial ideals
    let mut betti_trials = 0;
    while betti_trials < 200 {
        let nvars = 2 + rng.below(3) as usize;
        let layout = Layout::t_block(nvars);
        let ngens = 1 + rng.below(6) as usize;
        let gens: Vec<ExponentVec> = (0..ngens)
            .map(|_| {
                let exps: Vec<u64> = (0..nvars).map(|_| rng.below(4)).collect();
                ExponentVec::new(layout, exps).unwrap()
            })
            .filter(|g| !g.is_one())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let ideal = MonomialIdeal::new(layout, gens);
        let fast = betti_table(&ideal, &caps).unwrap();
        let oracle = taylor_betti(&ideal, &caps).unwrap();
        assert_eq!(fast, oracle, "betti mismatch for {:?}", ideal.gens());
        betti_trials += 1;
    }

    // and on every initial ideal the suite touches, within the oracle cap
    let mut suite_betti = 0;
    for r in reports() {
        let inst = Instance::new(r.instance.a.clone(), r.instance.b.clone(), false).unwrap();
        let basis = rees_aci::groebner::defining_ideal_oracle(&inst, &caps).unwrap();
        for ideal in [
            rees_aci::homology::initial_ideal(basis.members()),
            rees_aci::homology::initial_ideal(&rees_aci::families::linear_family(&inst).binomials()),
        ] {
            if ideal.num_gens() > caps.max_taylor_generators {
                continue;
            }
            assert_eq!(
                betti_table(&ideal, &caps).unwrap(),
                taylor_betti(&ideal, &caps).unwrap(),
                "betti/taylor mismatch on a={:?}, b={:?}",
                r.instance.a,
                r.instance.b
            );
            suite_betti += 1;
        }
    }

    // (b) reduced bases are invariant under generator permutation and
    // (c) Buchberger output always passes the S-pair criterion
    let suite = default_desk_suite();
    for trial in 0..200 {
        let pick = &suite[rng.below(suite.len() as u64) as usize];
        let inst = Instance::new(pick.a.clone(), pick.b.clone(), false).unwrap();
        let order = inst.order();
        let mut gens = orient_all(&inst.graph_generators(), &TermOrder::rees_lex(inst.ext_layout()));
        // shuffle
        for i in (1..gens.len()).rev() {
            gens.swap(i, rng.below(i as u64 + 1) as usize);
        }
        let ext_order = TermOrder::rees_lex(inst.ext_layout());
        let gb = buchberger(&gens, &ext_order, &caps).unwrap();
        assert!(is_groebner(gb.members(), &ext_order).ok, "trial {trial}");
        let shuffled = reduced_basis(&gb);
        let straight = reduced_basis_of(&inst.graph_generators(), &ext_order, &caps).unwrap();
        assert_eq!(shuffled.members(), straight.members(), "trial {trial}");
        let _ = order;
    }
    announce(
        "criterion 11 (engine self-consistency)",
        format!(
            "betti == taylor on {betti_trials} random ideals + {suite_betti} suite initial ideals; 200 permutation/Buchberger trials"
        ),
    );
}
