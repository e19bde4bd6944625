//! The classification run and its JSON report.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use sextic_core::fano::orbit_classify;
use sextic_core::lifts::{catalogue, FamilySpec};
use sextic_core::linalg::Matrix;
use sextic_core::pipeline::{analyze, degree_sweep, prepare, resolve, sweep_degree, twists_for, FamilyReport, PreparedFamily, SweepOutcome};
use sextic_core::CycloNum;

use crate::config::RunConfig;
use crate::error::{bad, ForgeError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockInfo {
    /// Degree of the entries of g.
    pub n: usize,
    pub k: usize,
    pub character: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub key: String,
    pub group: String,
    pub deg_g: usize,
    pub case: String,
    /// The requested case when t fell on another case's locus.
    pub routed_from: Option<String>,
    pub t: Option<String>,
    pub block: BlockInfo,
    pub plane: Vec<Vec<String>>,
    pub pluecker: BTreeMap<String, String>,
    pub det: String,
    #[serde(rename = "Q")]
    pub q: String,
    #[serde(rename = "F")]
    pub f: String,
    pub deg_q: usize,
    pub deg_f: usize,
    pub rank: usize,
    /// Σ λᵢ cᵢ ≡ 0 when the curve spans only a hyperplane.
    pub hyperplane: Option<Vec<String>>,
    pub q5_section: Option<String>,
    pub label: String,
    pub expected: String,
    pub witness: Option<String>,
    pub z_orbits: Vec<String>,
    pub checks: BTreeMap<String, bool>,
    pub passed: bool,
}

/// A (family, t) pair that could not be evaluated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub key: String,
    pub t: Option<String>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepEntry {
    pub deg_g: usize,
    pub outcome: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupSweep {
    pub group: String,
    pub degrees: Vec<SweepEntry>,
    pub accepted: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyFreedom {
    pub key: String,
    pub expected: String,
    pub freedoms: usize,
}

/// Parameter count over the families in the run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Audit {
    pub families: Vec<FamilyFreedom>,
    pub dimension: usize,
    pub exceptional_dimension: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub groups: Vec<String>,
    pub t_samples: Vec<String>,
    pub z_samples: Vec<String>,
    pub rows: Vec<Row>,
    /// t values on a locus no case handles.
    pub degenerate: Vec<Skipped>,
    /// Analyses that raised instead of producing a row.
    pub errors: Vec<Skipped>,
    pub sweeps: Vec<GroupSweep>,
    pub audit: Audit,
    pub passed: bool,
}

impl ClassificationReport {
    pub fn failures(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .rows
            .iter()
            .filter(|r| !r.passed)
            .map(|r| {
                let bad: Vec<&str> = r.checks.iter().filter(|(_, &v)| !v).map(|(k, _)| k.as_str()).collect();
                format!("{} t={}: {}", r.key, r.t.as_deref().unwrap_or("-"), bad.join(", "))
            })
            .collect();
        out.extend(self.errors.iter().map(|e| format!("{} t={}: {}", e.key, e.t.as_deref().unwrap_or("-"), e.reason)));
        out
    }

    pub fn to_json(&self) -> Result<String, ForgeError> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn row(&self, key: &str, t: Option<&str>) -> Option<&Row> {
        self.rows.iter().find(|r| r.key == key && r.t.as_deref() == t)
    }
}

fn strings(v: &[CycloNum]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn matrix_strings(m: &Matrix<CycloNum>) -> Vec<Vec<String>> {
    m.iter().map(|r| strings(r)).collect()
}

pub fn row_from_report(pf: &PreparedFamily, rep: &FamilyReport, z: &[CycloNum], routed_from: Option<String>) -> Row {
    let spec = &pf.spec;
    let mut checks: BTreeMap<String, bool> = rep.checks.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    let z_orbits: Vec<String> = z
        .iter()
        .map(|v| rep.curve.eval(v).map_or("zero", |p| orbit_classify(&p).token()).to_string())
        .collect();
    checks.insert("z_samples_on_V5".into(), z_orbits.iter().all(|o| o != "off_V5"));
    let passed = checks.values().all(|&b| b);
    Row {
        key: spec.key(),
        group: spec.covering.token(),
        deg_g: spec.deg,
        case: spec.case.to_string(),
        routed_from,
        t: rep.t.as_ref().map(ToString::to_string),
        block: BlockInfo {
            n: pf.block.n,
            k: pf.block.k(),
            character: pf.twist.group.irrep_labels[pf.block.irrep].clone(),
        },
        plane: matrix_strings(&rep.m),
        pluecker: rep.pluecker.iter().map(|((i, j), v)| (format!("p{i}{j}"), v.to_string())).collect(),
        det: rep.det.to_string(),
        q: rep.q_display.clone(),
        f: rep.f_display.clone(),
        deg_q: rep.q.degree(),
        deg_f: rep.f.degree(),
        rank: rep.rank,
        hyperplane: rep.kernel.as_deref().map(strings),
        q5_section: rep.q5.as_ref().map(|(d, rest)| format!("{} | unsplit degree {rest}", d.display(&[]))),
        label: rep.label.token().to_string(),
        expected: spec.expected.token().to_string(),
        witness: rep.verdict.witness.as_ref().map(|_| rep.verdict.detail.clone()),
        z_orbits,
        checks,
        passed,
    }
}

fn selected(cfg: &RunConfig, spec: &FamilySpec) -> bool {
    cfg.groups.contains(&spec.covering) && cfg.deg.is_none_or(|d| d == spec.deg)
}

struct Task {
    family: usize,
    t: Option<CycloNum>,
    routed_from: Option<String>,
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool, ForgeError> {
    rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| bad(format!("thread pool: {e}")))
}

pub fn run_classification(cfg: &RunConfig) -> Result<ClassificationReport, ForgeError> {
    if cfg.groups.is_empty() {
        return Err(bad("no groups selected"));
    }
    let specs: Vec<FamilySpec> = catalogue().into_iter().filter(|s| selected(cfg, s)).collect();
    if let Some(case) = &cfg.case {
        if !specs.iter().any(|s| s.case == case) {
            return Err(bad(format!("no family has case `{case}` for the selection")));
        }
    }
    if let Some(d) = cfg.deg {
        let in_range = cfg.groups.iter().any(|k| (k.degree()..=3 * k.degree() / 2).contains(&d));
        if !in_range {
            return Err(bad(format!("degree {d} is outside d..=3d/2 for every selected group")));
        }
    }
    let pool = pool(cfg.jobs)?;
    pool.install(|| build_report(cfg, specs))
}

fn build_report(cfg: &RunConfig, specs: Vec<FamilySpec>) -> Result<ClassificationReport, ForgeError> {
    let prepared: Vec<PreparedFamily> = specs.into_par_iter().map(prepare).collect::<Result<_, _>>()?;
    let t_values = cfg.t_values();
    let z_values = cfg.z_values();

    let mut tasks = Vec::new();
    let mut degenerate = Vec::new();
    for (i, pf) in prepared.iter().enumerate() {
        let spec = &pf.spec;
        if cfg.case.as_deref().is_some_and(|c| c != spec.case) {
            continue;
        }
        if !spec.plane.uses_t() {
            tasks.push(Task { family: i, t: None, routed_from: None });
            continue;
        }
        for t in &t_values {
            match resolve(&prepared, spec, t) {
                Ok(target) => {
                    let family = prepared.iter().position(|p| std::ptr::eq(p, target)).expect("resolved into the list");
                    let routed = family != i;
                    let t = target.spec.plane.uses_t().then(|| t.clone());
                    tasks.push(Task { family, t, routed_from: routed.then(|| spec.key()) });
                }
                Err(e) => degenerate.push(Skipped { key: spec.key(), t: Some(t.to_string()), reason: e.to_string() }),
            }
        }
    }

    let outcomes: Vec<Result<Row, Skipped>> = tasks
        .par_iter()
        .map(|task| {
            let pf = &prepared[task.family];
            analyze(pf, task.t.as_ref())
                .map(|rep| row_from_report(pf, &rep, &z_values, task.routed_from.clone()))
                .map_err(|e| Skipped { key: pf.spec.key(), t: task.t.as_ref().map(ToString::to_string), reason: e.to_string() })
        })
        .collect();
    let mut rows = Vec::new();
    let mut errors = Vec::new();
    for o in outcomes {
        match o {
            Ok(r) => rows.push(r),
            Err(s) => errors.push(s),
        }
    }

    let sweeps: Vec<GroupSweep> = cfg
        .groups
        .par_iter()
        .map(|&kind| {
            let degrees = match cfg.deg {
                None => degree_sweep(kind)?,
                Some(k) if (kind.degree()..=3 * kind.degree() / 2).contains(&k) => {
                    vec![(k, sweep_degree(kind, &twists_for(kind)?, k)?)]
                }
                Some(_) => vec![],
            };
            Ok(GroupSweep {
                group: kind.token(),
                accepted: degrees.iter().filter(|(_, o)| *o == SweepOutcome::Candidate).map(|(k, _)| *k).collect(),
                degrees: degrees.into_iter().map(|(k, o)| SweepEntry { deg_g: k, outcome: o.token().to_string() }).collect(),
            })
        })
        .collect::<Result<_, ForgeError>>()?;

    let families: Vec<FamilyFreedom> = prepared
        .iter()
        .map(|pf| FamilyFreedom {
            key: pf.spec.key(),
            expected: pf.spec.expected.token().to_string(),
            freedoms: pf.spec.freedoms(),
        })
        .collect();
    let dim_of = |pred: &dyn Fn(&FamilyFreedom) -> bool| families.iter().filter(|f| pred(f)).map(|f| f.freedoms).max().unwrap_or(0);
    let audit = Audit {
        dimension: dim_of(&|f| f.expected != "ruled_out"),
        exceptional_dimension: dim_of(&|f| f.expected == "exceptional_transversal"),
        families,
    };

    let passed = errors.is_empty() && rows.iter().all(|r| r.passed);
    Ok(ClassificationReport {
        groups: cfg.groups.iter().map(|k| k.token()).collect(),
        t_samples: cfg.t_samples.iter().map(ToString::to_string).collect(),
        z_samples: cfg.z_samples.iter().map(ToString::to_string).collect(),
        rows,
        degenerate,
        errors,
        sweeps,
        audit,
        passed,
    })
}
