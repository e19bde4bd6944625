use proptest::prelude::*;
use sextic_core::invariants::CoveringKind;
use sextic_forge::acceptance::{character_data, field_and_forms};
use sextic_forge::config::{parse_covering, parse_rational};
use sextic_forge::suites::{check_fixture, field_axioms, format_decomposition, reference_fixtures, rng, TableFixture};
use sextic_forge::{run_classification, tables_with, RunConfig};

fn cfg(groups: &[CoveringKind], t: &[&str]) -> RunConfig {
    RunConfig {
        groups: groups.to_vec(),
        t_samples: t.iter().map(|s| parse_rational(s).unwrap()).collect(),
        ..RunConfig::default()
    }
}

#[test]
fn t_on_a_degenerate_locus_is_rerouted() {
    let report = run_classification(&cfg(&[CoveringKind::Cyclic(2)], &["1", "-1"])).unwrap();
    assert!(report.passed, "{:?}", report.failures());
    let routed: Vec<_> = report.rows.iter().filter(|r| r.routed_from.as_deref() == Some("C2/3/generic")).collect();
    assert_eq!(routed.len(), 2);
    assert!(routed.iter().all(|r| r.key == "C2/3/limit" && r.rank == 6 && r.t.is_none()));
    assert!(report.degenerate.is_empty());
}

#[test]
fn excluded_t_is_listed_not_failed() {
    let report = run_classification(&cfg(&[CoveringKind::Cyclic(2)], &["0"])).unwrap();
    assert!(report.passed);
    let keys: Vec<&str> = report.degenerate.iter().map(|d| d.key.as_str()).collect();
    assert_eq!(keys, ["C2/3/generic", "C2/3/both-L3"]);
    // t = 0 sends the quadratic family to its limit
    assert!(report.rows.iter().any(|r| r.key == "C2/2/limit" && r.routed_from.as_deref() == Some("C2/2/generic")));
}

#[test]
fn report_is_byte_identical_across_runs_and_thread_counts() {
    let mut a = cfg(&[CoveringKind::Cyclic(3), CoveringKind::Cyclic(2)], &["2", "5/2"]);
    a.jobs = 1;
    let mut b = a.clone();
    b.jobs = 3;
    let ja = run_classification(&a).unwrap().to_json().unwrap();
    let jb = run_classification(&b).unwrap().to_json().unwrap();
    assert_eq!(ja, jb);
    assert!(ja.contains("\"key\": \"C3/4/alt\""));
}

#[test]
fn rows_carry_the_reported_fields() {
    let mut c = cfg(&[CoveringKind::Dihedral(2)], &["3"]);
    c.case = Some("case1".into());
    let report = run_classification(&c).unwrap();
    let row = report.row("D2/5/case1", Some("3")).unwrap();
    assert_eq!((row.group.as_str(), row.deg_g, row.rank), ("D2", 5, 7));
    assert_eq!((row.deg_q, row.deg_f), (10, 6));
    assert_eq!(row.label, "generally_ramified");
    assert!(row.witness.is_some());
    assert_eq!(row.pluecker.len(), 3);
    assert_eq!(row.z_orbits.len(), 4);
    let v: serde_json::Value = serde_json::from_str(&report.to_json().unwrap()).unwrap();
    let r = &v["rows"][0];
    for field in ["group", "deg_g", "block", "case", "t", "pluecker", "Q", "F", "rank", "label", "checks"] {
        assert!(!r[field].is_null() || field == "t", "missing {field}");
    }
}

#[test]
fn bad_selections_are_bad_input() {
    let mut c = cfg(&[CoveringKind::Cyclic(2)], &["2"]);
    c.deg = Some(9);
    assert_eq!(run_classification(&c).unwrap_err().exit_code(), 3);
    let mut c = cfg(&[CoveringKind::Cyclic(2)], &["2"]);
    c.case = Some("case7".into());
    assert_eq!(run_classification(&c).unwrap_err().exit_code(), 3);
    assert_eq!(run_classification(&cfg(&[], &["2"])).unwrap_err().exit_code(), 3);
    assert!(parse_covering("C5").is_err());
    assert!(parse_covering("C6").is_err());
    assert!(parse_rational("1/0").is_err());
    assert!(parse_rational("two").is_err());
}

#[test]
fn sweep_restricted_to_one_degree() {
    let mut c = cfg(&[CoveringKind::Octa], &["2"]);
    c.deg = Some(27);
    let report = run_classification(&c).unwrap();
    assert!(report.rows.is_empty());
    assert_eq!(report.sweeps[0].degrees.len(), 1);
    assert_eq!(report.sweeps[0].degrees[0].outcome, "common_factor");
}

#[test]
fn built_tables_pass_the_fixture_check() {
    for fx in reference_fixtures() {
        assert!(check_fixture(&fx).is_empty(), "{}", fx.group);
        let back: TableFixture = serde_json::from_str(&serde_json::to_string(&fx).unwrap()).unwrap();
        assert_eq!(back, fx);
    }
}

#[test]
fn corrupted_tables_name_the_broken_law() {
    let mut fx = reference_fixtures().into_iter().find(|f| f.group == "BinDihedral_2").unwrap();
    fx.table[1][2][0] = "-1".into();
    assert!(check_fixture(&fx).contains(&"orthonormality".to_string()));
    let c = character_data(&tables_with(&[fx]));
    assert!(!c.passed);
    assert!(c.detail.contains("orthonormality"), "{}", c.detail);

    let mut fx = reference_fixtures().into_iter().find(|f| f.group == "BinTetra").unwrap();
    fx.dims[0] = 2;
    let broken = check_fixture(&fx);
    assert!(broken.contains(&"sum_of_squared_dims".to_string()) && broken.contains(&"degree_column".to_string()));
    fx.table.pop();
    assert_eq!(check_fixture(&fx), ["class_count"]);
    fx.table[0][0] = vec!["x".into()];
    assert_eq!(check_fixture(&fx).len(), 1);
}

#[test]
fn decomposition_rendering() {
    let labels: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
    assert_eq!(format_decomposition(&labels, &[0, 1, 3]), "b + 3c");
    assert_eq!(format_decomposition(&labels, &[0, 0, 0]), "0");
}

#[test]
fn first_criterion_passes_for_other_seeds() {
    assert!(field_and_forms(7).passed);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn field_suite_holds_for_any_seed(seed in any::<u64>()) {
        prop_assert!(field_axioms(&mut rng(seed), 10).passed());
    }

    #[test]
    fn rationals_roundtrip(p in -500i64..500, q in 1i64..500) {
        let r = parse_rational(&format!("{p}/{q}")).unwrap();
        prop_assert_eq!(parse_rational(&r.to_string()).unwrap(), r);
    }
}
