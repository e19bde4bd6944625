//! End-to-end analysis of one family at one parameter value, and the sweep
//! over candidate degrees of each covering.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::exactfield::CycloNum;
use crate::fano::{
    descend, f1_compose, family_classify, leading_value, linear_fullness, phi_image, q5_intersection, CurveP6,
    FamilyLabel, FanoError, Verdict,
};
use crate::invariants::{klein_covering, CoveringKind, Form, KleinCovering, Point};
use crate::lifts::{
    assemble_block, block_multiplicity, candidate_points, catalogue, check_block, det_terms, divisor_atoms, divisor_f,
    divisor_q, free_line_membership, pencil_planes, select_plane, verify_eigen_relation, BlockCheck, Divisor, Expected, FamilySpec,
    FormMatrix, GaloisLift, IsotypicBlock, LiftError, PlaneRule, Twist,
};
use crate::linalg::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Lift(#[from] LiftError),
    #[error(transparent)]
    Fano(#[from] FanoError),
    #[error("unknown family {0}")]
    UnknownFamily(String),
}

/// A family with its twist, block and block checks, reusable across t.
#[derive(Debug, Clone)]
pub struct PreparedFamily {
    pub spec: FamilySpec,
    pub twist: Twist,
    pub block: IsotypicBlock,
    pub block_check: BlockCheck,
    pub cov: KleinCovering,
}

pub fn prepare(spec: FamilySpec) -> Result<PreparedFamily, AnalysisError> {
    let twist = spec.twist()?;
    let block = spec.block(&twist)?;
    let block_check = check_block(&twist, &block)?;
    let cov = klein_covering(spec.covering).map_err(|e| LiftError::BadBlock(e.to_string()))?;
    Ok(PreparedFamily { spec, twist, block, block_check, cov })
}

#[derive(Debug, Clone, PartialEq)]
pub struct FamilyReport {
    pub key: String,
    pub t: Option<CycloNum>,
    pub m: Matrix<CycloNum>,
    pub pluecker: BTreeMap<(usize, usize), CycloNum>,
    pub forms: FormMatrix,
    pub det: Form,
    pub q: Divisor,
    pub f: Divisor,
    pub q_display: String,
    pub f_display: String,
    pub curve: CurveP6,
    pub rank: usize,
    pub kernel: Option<Vec<CycloNum>>,
    pub q5: Option<(Divisor, usize)>,
    pub verdict: Verdict,
    pub label: FamilyLabel,
    pub checks: BTreeMap<&'static str, bool>,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.checks.values().all(|&b| b)
    }

    pub fn failed_checks(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|(_, &v)| !v).map(|(k, _)| *k).collect()
    }
}

/// Run every check on the family at t (ignored when the plane does not
/// depend on t).
///
/// A pencil rule leaves a one-parameter choice of plane; the first direction
/// whose curve is a full sextic is taken as the generic member.
pub fn analyze(pf: &PreparedFamily, t: Option<&CycloNum>) -> Result<FamilyReport, AnalysisError> {
    let spec = &pf.spec;
    let t = if spec.plane.uses_t() {
        Some(t.ok_or_else(|| LiftError::Degenerate(format!("{} needs t", spec.key())))?)
    } else {
        None
    };
    let pairs = pf.block.pairs();
    let planes = match &spec.plane {
        PlaneRule::Pencil { pre, at } => pencil_planes(pre, at, &pairs, t)?.into_iter().map(|(_, m)| m).collect(),
        rule => vec![select_plane(rule, &pairs, t)?],
    };
    let mut first = None;
    for m in planes {
        let report = analyze_plane(pf, t, m)?;
        if report.rank == 7 && report.checks["(F,F)_4=0"] {
            return Ok(report);
        }
        first.get_or_insert(report);
    }
    Ok(first.expect("at least one plane"))
}

fn analyze_plane(pf: &PreparedFamily, t: Option<&CycloNum>, m: Matrix<CycloNum>) -> Result<FamilyReport, AnalysisError> {
    let spec = &pf.spec;
    let pairs = pf.block.pairs();
    let lift = GaloisLift::new(pf.block.clone(), m)?;
    let g = &lift.forms;
    let (k, d) = (lift.degree(), pf.cov.degree);
    let mut checks = BTreeMap::new();

    checks.insert("eigen_relation", verify_eigen_relation(&pf.twist, g).is_ok());
    checks.insert("block_multiplicity", pf.block_check.multiplicity == pf.block_check.k);
    checks.insert("block_projection_oracle", pf.block_check.matches_projection);
    checks.insert("block_no_common_factor", pf.block_check.common_factor_degree == 0);

    let terms = det_terms(&pairs);
    let det = g.det();
    let cauchy_binet = terms
        .iter()
        .fold(Form::zero(det.degree()), |acc, (ij, dij)| acc.plus(&dij.scale(&lift.pluecker[ij])));
    checks.insert("cauchy_binet", cauchy_binet == det);
    if !spec.det_display.is_empty() {
        let shown: BTreeMap<(usize, usize), Form> = spec.det_display.iter().cloned().collect();
        checks.insert("det_display", shown == terms);
    }

    let tp = t.map(|v| Point::finite(v.clone()));
    let cands = candidate_points(spec.covering, tp.as_ref());
    let q = divisor_q(g, &cands)?;
    let f7 = f1_compose(g);
    let f = divisor_f(&f7, &cands, k, d)?;
    checks.insert("deg_Q=2k", q.degree() == 2 * k);
    checks.insert("deg_F=6(k-d)", f.degree() == 6 * (k - d));
    checks.insert("F<=Q", f.leq(&q));
    checks.insert(
        "supp_F_on_free_lines",
        f.points.iter().all(|(p, _)| free_line_membership(&leading_value(g, p)).is_some()),
    );
    checks.insert("d<=k<=3d/2", d <= k && 2 * k <= 3 * d);

    let curve = descend(&f7, &pf.cov, &f)?;
    let ff4 = curve.fourth_transvectant_vanishes();
    checks.insert("(F,F)_4=0", ff4);
    let (rank, kernel) = linear_fullness(&curve);
    let z_points: Vec<Point> = cands.iter().map(|p| phi_image(&pf.cov, p)).fold(Vec::new(), |mut acc, z| {
        if !acc.contains(&z) {
            acc.push(z);
        }
        acc
    });
    let q5 = q5_intersection(&curve, &z_points).ok();

    let verdict = family_classify(g, &pf.cov, &q, &f);
    let label = if rank < 7 || !ff4 { FamilyLabel::NotSextic } else { verdict.label };
    let expected_ok = match spec.expected {
        Expected::GenerallyRamified => label == FamilyLabel::GenerallyRamified && rank == 7,
        Expected::ExceptionalTransversal => label == FamilyLabel::ExceptionalTransversal && rank == 7,
        Expected::RuledOut => rank == 6,
    };
    checks.insert("expected_label", expected_ok);

    let atoms = divisor_atoms(spec.covering, tp.as_ref());
    Ok(FamilyReport {
        key: spec.key(),
        t: t.cloned(),
        m: lift.m.clone(),
        pluecker: lift.pluecker.clone(),
        forms: g.clone(),
        det,
        q_display: q.display(&atoms),
        f_display: f.display(&atoms),
        q,
        f,
        curve,
        rank,
        kernel,
        q5,
        verdict,
        label,
        checks,
    })
}

/// Resolve the case that handles t for a (covering, degree, case) key.
pub fn resolve<'a>(families: &'a [PreparedFamily], spec: &FamilySpec, t: &CycloNum) -> Result<&'a PreparedFamily, AnalysisError> {
    let case = spec.route(t)?.unwrap_or(spec.case);
    families
        .iter()
        .find(|f| f.spec.covering == spec.covering && f.spec.deg == spec.deg && f.spec.case == case)
        .ok_or_else(|| AnalysisError::UnknownFamily(format!("{}/{}/{case}", spec.covering.token(), spec.deg)))
}

/// Why a candidate degree survives or not.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SweepOutcome {
    Candidate,
    /// No one-dimensional isotypic piece at all.
    Parity,
    BlockTooSmall,
    CommonFactor,
    /// Fails the ramification count for the covering.
    RamificationCount,
}

impl SweepOutcome {
    pub fn token(&self) -> &'static str {
        match self {
            SweepOutcome::Candidate => "candidate",
            SweepOutcome::Parity => "parity",
            SweepOutcome::BlockTooSmall => "block_too_small",
            SweepOutcome::CommonFactor => "common_factor",
            SweepOutcome::RamificationCount => "ramification_count",
        }
    }
}

/// Least degree of ℱ and least deg 𝒬 − deg ℱ a lift over the covering
/// needs, from counting ramification at the branch points.
pub fn ramification_bounds(kind: CoveringKind) -> (usize, usize) {
    match kind {
        CoveringKind::Cyclic(4) => (2, 0),
        CoveringKind::Dihedral(3) => (0, 8),
        CoveringKind::Dihedral(4) => (6, 4),
        CoveringKind::Tetra => (6, 8),
        CoveringKind::Octa => (6, 20),
        _ => (0, 0),
    }
}

/// Every φ₂ used by the catalogue for the covering.
pub fn twists_for(kind: CoveringKind) -> Result<Vec<Twist>, AnalysisError> {
    let mut seen = Vec::new();
    let mut out = Vec::new();
    for spec in catalogue().into_iter().filter(|s| s.covering == kind) {
        if !seen.contains(&spec.twist_images) {
            seen.push(spec.twist_images.clone());
            out.push(spec.twist()?);
        }
    }
    Ok(out)
}

pub fn sweep_degree(kind: CoveringKind, twists: &[Twist], k: usize) -> Result<SweepOutcome, AnalysisError> {
    let d = kind.degree();
    let (fmin, gap) = ramification_bounds(kind);
    let fdeg = 6 * (k - d);
    if fdeg < fmin || 2 * k < fdeg + gap {
        return Ok(SweepOutcome::RamificationCount);
    }
    let mut any = false;
    let mut big = Vec::new();
    for tw in twists {
        for irrep in tw.group.linear_irreps() {
            let m = block_multiplicity(tw, k, irrep)?;
            any |= m > 0;
            if m >= 2 {
                big.push((tw, irrep));
            }
        }
    }
    if !any {
        return Ok(SweepOutcome::Parity);
    }
    if big.is_empty() {
        return Ok(SweepOutcome::BlockTooSmall);
    }
    for (tw, irrep) in big {
        match assemble_block(tw, k, irrep) {
            Ok(_) => return Ok(SweepOutcome::Candidate),
            Err(LiftError::CommonFactor { .. }) => {}
            Err(e) => return Err(e.into()),
        }
    }
    Ok(SweepOutcome::CommonFactor)
}

/// Outcome for every k with d ≤ k ≤ 3d/2.
pub fn degree_sweep(kind: CoveringKind) -> Result<Vec<(usize, SweepOutcome)>, AnalysisError> {
    let twists = twists_for(kind)?;
    let d = kind.degree();
    (d..=3 * d / 2).map(|k| Ok((k, sweep_degree(kind, &twists, k)?))).collect()
}

/// Coverings in report order.
pub fn coverings() -> [CoveringKind; 8] {
    [
        CoveringKind::Cyclic(2),
        CoveringKind::Cyclic(3),
        CoveringKind::Cyclic(4),
        CoveringKind::Dihedral(2),
        CoveringKind::Dihedral(3),
        CoveringKind::Dihedral(4),
        CoveringKind::Tetra,
        CoveringKind::Octa,
    ]
}

/// Default parameter samples 2, 3, 5/2, 7/3.
pub fn default_t_samples() -> Vec<CycloNum> {
    [(2, 1), (3, 1), (5, 2), (7, 3)].iter().map(|&(n, d)| CycloNum::from_ratio(n, d)).collect()
}
