//! Reproduction harness: recompute every tensor from the bracket table,
//! compare with the catalog, check each theorem case symbolically and
//! classify parameter grids against the theorem predicates.
//!
//! Solitonhood is always decided from recomputed tensors; catalog tensors
//! are only ever the right-hand side of a comparison.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{predicate_eval, Catalog, ClaimedTensors, GroupId, TheoremCase};
use crate::exactalg::{Polynomial, Rational, VarId};
use crate::geometry::{Operator3, Pipeline};
use crate::liealg::{
    evaluate_spec, jacobi_residual, sample_variety, sample_variety_with, validate_assignment, LieAlgebraSpec, ParameterAssignment,
    PAIRS,
};
use crate::soliton::{check_claimed_solution, soliton_decide, ClaimCheck, SolitonKind, SolitonVerdict};

pub const REPORT_VERSION: u32 = 1;

/// Points used when a comparison has to fall back to sampling the variety.
const VARIETY_SAMPLE_CAP: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Item {
    Connection,
    Torsion,
    ATensor,
    Abar,
    Ric,
    Wan,
    WanTilde,
    TheoremCase,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Match,
    /// Differs as polynomials but agrees modulo the algebra's equations.
    MatchOnVariety,
    Mismatch,
}

/// Why a comparison was accepted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum Certificate {
    Identity,
    /// Equal after rewriting η² to 1.
    EtaReduction,
    /// Difference reduced to zero by these relations.
    Reduction { relations: Vec<Polynomial> },
    /// Difference vanished at every sampled point of the variety.
    Sampled { points: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscrepancyReport {
    pub group: String,
    pub item: Item,
    /// 1-based indices.
    pub location: Vec<usize>,
    pub computed: Polynomial,
    pub claimed: Polynomial,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub holds: bool,
}

/// Compares polynomials modulo the equation constraints of one algebra.
struct Comparator<'a> {
    spec: &'a LieAlgebraSpec,
    eta: bool,
    relations: Vec<Polynomial>,
    samples: std::sync::OnceLock<Vec<ParameterAssignment>>,
}

fn eta_relation() -> Polynomial {
    &Polynomial::var(VarId::Eta).pow(2) - &Polynomial::one()
}

impl<'a> Comparator<'a> {
    fn new(spec: &'a LieAlgebraSpec) -> Self {
        let eta_rel = eta_relation();
        let eta = spec.equations().any(|p| *p == eta_rel);
        let relations = spec.equations().filter(|p| **p != eta_rel).cloned().collect();
        Comparator { spec, eta, relations, samples: std::sync::OnceLock::new() }
    }

    fn samples(&self) -> &[ParameterAssignment] {
        self.samples.get_or_init(|| sample_variety(self.spec, &GridSpec::default().ladder_with_zero(), VARIETY_SAMPLE_CAP))
    }

    fn compare(&self, computed: &Polynomial, claimed: &Polynomial) -> (Verdict, Option<Certificate>) {
        let mut diff = computed - claimed;
        if diff.is_zero() {
            return (Verdict::Match, Some(Certificate::Identity));
        }
        if self.eta {
            diff = diff.reduce(&eta_relation(), VarId::Eta).expect("eta^2 - 1 is a binomial in eta");
            if diff.is_zero() {
                return (Verdict::Match, Some(Certificate::EtaReduction));
            }
        }
        let mut used = Vec::new();
        for rel in &self.relations {
            for v in rel.variables() {
                if let Ok(q) = diff.reduce(rel, v) {
                    if q != diff {
                        used.push(rel.clone());
                    }
                    diff = q;
                    break;
                }
            }
        }
        if diff.is_zero() {
            return (Verdict::MatchOnVariety, Some(Certificate::Reduction { relations: used }));
        }
        if !self.relations.is_empty() {
            let pts = self.samples();
            if !pts.is_empty() && pts.iter().all(|s| matches!(diff.eval(s.values()), Ok(v) if v.is_zero())) {
                return (Verdict::MatchOnVariety, Some(Certificate::Sampled { points: pts.len() }));
            }
        }
        (Verdict::Mismatch, None)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Reproduction {
    pub entries: Vec<DiscrepancyReport>,
    pub identities: Vec<IdentityCheck>,
}

impl Reproduction {
    pub fn count(&self, v: Verdict) -> usize {
        self.entries.iter().filter(|e| e.verdict == v).count()
    }
}

/// Compares the pipeline for `spec` against `claimed`. Torsion and the
/// A-tensor are compared only for index pairs `i < j`, the ones printed.
pub fn reproduce_spec(label: &str, spec: &LieAlgebraSpec, claimed: &ClaimedTensors) -> Reproduction {
    let pipe = Pipeline::canonical(spec);
    let cmp = Comparator::new(spec);
    let mut entries = Vec::new();
    let mut push = |item: Item, location: Vec<usize>, computed: &Polynomial, claimed: &Polynomial| {
        let (verdict, certificate) = cmp.compare(computed, claimed);
        entries.push(DiscrepancyReport {
            group: label.to_string(),
            item,
            location: location.iter().map(|i| i + 1).collect(),
            computed: computed.clone(),
            claimed: claimed.clone(),
            verdict,
            certificate,
        });
    };

    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                push(Item::Connection, vec![i, j, k], &pipe.connection.gamma[i][j][k], &claimed.connection.gamma[i][j][k]);
            }
        }
    }
    for (i, j) in PAIRS {
        for k in 0..3 {
            push(Item::Torsion, vec![i, j, k], &pipe.torsion.t[i][j][k], &claimed.torsion.t[i][j][k]);
        }
    }
    for (i, j) in PAIRS {
        for k in 0..3 {
            for l in 0..3 {
                push(Item::ATensor, vec![i, j, k, l], &pipe.a_tensor.k[i][j][k][l], &claimed.a_tensor.k[i][j][k][l]);
            }
        }
    }
    let matrices: [(Item, &Operator3, &Operator3); 4] = [
        (Item::Abar, &pipe.abar, &claimed.abar),
        (Item::Ric, &pipe.ric, &claimed.ric),
        (Item::Wan, &pipe.wan, &claimed.wan),
        (Item::WanTilde, &pipe.wan_tilde, &claimed.wan_tilde),
    ];
    for (item, computed, claimed) in matrices {
        for i in 0..3 {
            for j in 0..3 {
                push(item, vec![i, j], &computed.m[i][j], &claimed.m[i][j]);
            }
        }
    }

    let mut identities = Vec::new();
    if claimed.wan == claimed.wan_tilde {
        identities.push(IdentityCheck { identity: "wan_tilde = wan".to_string(), holds: pipe.wan == pipe.wan_tilde });
    }
    Reproduction { entries, identities }
}

pub fn reproduce_group(catalog: &Catalog, id: GroupId) -> Reproduction {
    reproduce_spec(id.name(), &catalog.get_group(id).spec, catalog.claimed_tensors(id))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JacobiCheck {
    /// `[e1,[e2,e3]] + [e2,[e3,e1]] + [e3,[e1,e2]]`.
    pub residual: Vec<Polynomial>,
    /// The weakest verdict over the three coordinates.
    pub verdict: Verdict,
    pub certificates: Vec<Option<Certificate>>,
}

/// The Jacobi identity, modulo the algebra's equation constraints.
pub fn check_jacobi(spec: &LieAlgebraSpec) -> JacobiCheck {
    let cmp = Comparator::new(spec);
    let residual = jacobi_residual(spec);
    let results: Vec<(Verdict, Option<Certificate>)> =
        residual.iter().map(|p| cmp.compare(p, &Polynomial::zero())).collect();
    let verdict = if results.iter().any(|r| r.0 == Verdict::Mismatch) {
        Verdict::Mismatch
    } else if results.iter().any(|r| r.0 == Verdict::MatchOnVariety) {
        Verdict::MatchOnVariety
    } else {
        Verdict::Match
    };
    JacobiCheck {
        residual: residual.to_vec(),
        verdict,
        certificates: results.into_iter().map(|r| r.1).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    pub ladder: Vec<Rational>,
    /// Variables absent from the map include zero.
    pub include_zero: BTreeMap<VarId, bool>,
    /// Extra values appended to the ladder when a grid has fewer than
    /// `min_points` valid points.
    pub densify: Vec<Rational>,
    pub min_points: usize,
    pub cap: usize,
}

fn rationals(v: &[(i64, i64)]) -> Vec<Rational> {
    v.iter().map(|&(n, d)| Rational::new(n, d)).collect()
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            ladder: rationals(&[(-2, 1), (-1, 1), (-1, 2), (1, 2), (1, 1), (2, 1), (3, 1)]),
            include_zero: BTreeMap::new(),
            densify: rationals(&[(-3, 1), (-3, 2), (-1, 3), (1, 3), (3, 2), (5, 2), (4, 1)]),
            min_points: 200,
            cap: 5000,
        }
    }
}

impl GridSpec {
    pub fn with_ladder(ladder: Vec<Rational>) -> Self {
        GridSpec { ladder, ..GridSpec::default() }
    }

    fn ladder_with_zero(&self) -> Vec<Rational> {
        let mut v = self.ladder.clone();
        v.push(Rational::zero());
        v.sort();
        v.dedup();
        v
    }

    fn values(&self, base: &[Rational], v: VarId) -> Vec<Rational> {
        let mut out = base.to_vec();
        if self.include_zero.get(&v).copied().unwrap_or(true) {
            out.push(Rational::zero());
        }
        out.sort();
        out.dedup();
        out
    }

    /// Valid points for `spec`, sorted; densified once if too few.
    pub fn points(&self, spec: &LieAlgebraSpec) -> Vec<ParameterAssignment> {
        let pts = sample_variety_with(spec, &|v| self.values(&self.ladder, v), self.cap);
        if pts.len() >= self.min_points || self.densify.is_empty() {
            return pts;
        }
        let mut wide = self.ladder.clone();
        wide.extend(self.densify.iter().cloned());
        sample_variety_with(spec, &|v| self.values(&wide, v), self.cap)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointResult {
    pub sigma: ParameterAssignment,
    pub computed: Option<SolitonVerdict>,
    pub expected: Option<SolitonVerdict>,
    pub agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub group: GroupId,
    pub kind: SolitonKind,
    pub total: usize,
    pub agree: usize,
    pub disagree: usize,
    /// Outcome name to number of points, from the computed verdicts.
    pub outcomes: BTreeMap<String, usize>,
    /// Points per sign of η, for algebras that have it.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub eta_branches: BTreeMap<String, usize>,
    pub points: Vec<PointResult>,
}

fn classify_point(catalog: &Catalog, id: GroupId, kind: SolitonKind, sigma: &ParameterAssignment) -> PointResult {
    let spec = &catalog.get_group(id).spec;
    let fail = |e: String| PointResult {
        sigma: sigma.clone(),
        computed: None,
        expected: None,
        agree: false,
        error: Some(e),
    };
    let numeric = match validate_assignment(spec, sigma) {
        Ok(v) if v.is_empty() => match evaluate_spec(spec, sigma) {
            Ok(s) => s,
            Err(e) => return fail(e.to_string()),
        },
        Ok(v) => return fail(crate::liealg::LieError::InvalidAssignment(v).to_string()),
        Err(e) => return fail(e.to_string()),
    };
    let computed = match soliton_decide(&numeric, kind, &Pipeline::canonical(&numeric)) {
        Ok(v) => v,
        Err(e) => return fail(e.to_string()),
    };
    match predicate_eval(catalog.theorem_claim(id, kind), sigma) {
        Ok(expected) => PointResult {
            sigma: sigma.clone(),
            agree: computed.agrees_with(&expected),
            computed: Some(computed),
            expected: Some(expected),
            error: None,
        },
        Err(e) => PointResult { computed: Some(computed), ..fail(e.to_string()) },
    }
}

pub fn classify_grid(catalog: &Catalog, id: GroupId, kind: SolitonKind, grid: &GridSpec) -> ClassificationReport {
    let pts = grid.points(&catalog.get_group(id).spec);
    let points: Vec<PointResult> = pts.par_iter().map(|s| classify_point(catalog, id, kind, s)).collect();
    let agree = points.iter().filter(|p| p.agree).count();
    let mut outcomes = BTreeMap::new();
    for p in &points {
        let key = p.computed.as_ref().map_or("error", |v| v.outcome());
        *outcomes.entry(key.to_string()).or_insert(0) += 1;
    }
    let mut eta_branches = BTreeMap::new();
    for p in &points {
        if let Some(eta) = p.sigma.get(VarId::Eta) {
            *eta_branches.entry(format!("eta={eta}")).or_insert(0) += 1;
        }
    }
    ClassificationReport {
        group: id,
        kind,
        total: points.len(),
        agree,
        disagree: points.len() - agree,
        outcomes,
        eta_branches,
        points,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseCheck {
    pub group: GroupId,
    pub kind: SolitonKind,
    pub label: String,
    pub same_as_first: bool,
    pub conditions: String,
    pub c: Option<Polynomial>,
    #[serde(rename = "D")]
    pub d: Vec<Vec<Polynomial>>,
    /// The case's conditions contradict a standing constraint.
    pub vacuous: bool,
    /// Standing constraints assumed on top of the case's own conditions.
    pub inherited: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub passed: bool,
    pub check: ClaimCheck,
}

pub fn check_case(catalog: &Catalog, id: GroupId, kind: SolitonKind, case: &TheoremCase, ladder: &[Rational]) -> CaseCheck {
    let spec = &catalog.get_group(id).spec;
    let claim = catalog.theorem_claim(id, kind);
    let c = case.c.clone().unwrap_or_else(|| Polynomial::var(VarId::C));
    let check = check_claimed_solution(spec, kind, &case.family, &c, &case.d, ladder);
    let lint = catalog.lint(id, kind, &case.label);
    CaseCheck {
        group: id,
        kind,
        label: case.label.clone(),
        same_as_first: claim.same_as_first,
        conditions: case.conditions_text(),
        c: case.c.clone(),
        d: case.d.m.iter().map(|r| r.to_vec()).collect(),
        vacuous: lint.is_some_and(|l| l.vacuous) || check.vacuous,
        inherited: lint.map(|l| l.inherited.clone()).unwrap_or_default(),
        note: case.note.clone(),
        passed: check.passed,
        check,
    }
}

/// Printed differences between the two kinds' statements of what is
/// otherwise the same case.
fn surface_notes(catalog: &Catalog, id: GroupId) -> Vec<String> {
    let first = catalog.theorem_claim(id, SolitonKind::First);
    let second = catalog.theorem_claim(id, SolitonKind::Second);
    if second.same_as_first {
        return Vec::new();
    }
    let mut notes = Vec::new();
    for a in first.cases() {
        let Some(b) = second.cases().iter().find(|b| b.label == a.label && b.family == a.family && b.c == a.c)
        else {
            continue;
        };
        for i in 0..3 {
            for j in 0..3 {
                if a.d.m[i][j] != b.d.m[i][j] {
                    notes.push(format!(
                        "{id} case ({}): D entry ({},{}) printed as {} for the first kind and {} for the second kind",
                        a.label,
                        i + 1,
                        j + 1,
                        a.d.m[i][j],
                        b.d.m[i][j]
                    ));
                }
            }
        }
    }
    notes
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupReport {
    pub group: GroupId,
    pub unimodular: bool,
    pub matched: usize,
    pub matched_on_variety: usize,
    pub mismatched: usize,
    pub reproduction: Vec<DiscrepancyReport>,
    pub identities: Vec<IdentityCheck>,
    pub theorem_cases: Vec<CaseCheck>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub groups: usize,
    pub entries_compared: usize,
    pub matched: usize,
    pub matched_on_variety: usize,
    pub mismatched: usize,
    pub identities_failed: usize,
    pub theorem_cases: usize,
    pub theorem_cases_passed: usize,
    pub vacuous_cases: usize,
    pub grid_points: usize,
    pub grid_agree: usize,
    pub grid_disagree: usize,
    pub all_pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub version: u32,
    pub catalog_version: u32,
    pub catalog_checksum: String,
    pub ladder: Vec<Rational>,
    pub groups: Vec<GroupReport>,
    pub classifications: Vec<ClassificationReport>,
    pub summary: Summary,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.summary.all_pass {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for g in &self.groups {
            let cases = g.theorem_cases.len();
            let passed = g.theorem_cases.iter().filter(|c| c.passed).count();
            let _ = writeln!(
                out,
                "{}: {} entries matched, {} on the variety, {} mismatched; theorem cases {passed}/{cases} pass",
                g.group,
                g.matched,
                g.matched_on_variety,
                g.mismatched
            );
            for e in g.reproduction.iter().filter(|e| e.verdict == Verdict::Mismatch) {
                let loc: Vec<String> = e.location.iter().map(|i| i.to_string()).collect();
                let _ = writeln!(
                    out,
                    "  MISMATCH {:?} ({}): computed {} , claimed {}",
                    e.item,
                    loc.join(","),
                    e.computed,
                    e.claimed
                );
            }
            for i in &g.identities {
                let _ = writeln!(out, "  {}: {}", i.identity, if i.holds { "holds" } else { "FAILS" });
            }
            for c in &g.theorem_cases {
                let label = if c.label.is_empty() { String::new() } else { format!(" ({})", c.label) };
                let mut flags = Vec::new();
                if c.vacuous {
                    flags.push("vacuous".to_string());
                }
                if c.same_as_first {
                    flags.push("same as first kind".to_string());
                }
                let flags = if flags.is_empty() { String::new() } else { format!(" [{}]", flags.join(", ")) };
                let _ = writeln!(
                    out,
                    "  {} kind{label}: {}{flags}",
                    c.kind,
                    if c.passed { "pass" } else { "FAIL" }
                );
            }
            for n in &g.notes {
                let _ = writeln!(out, "  note: {n}");
            }
        }
        for c in &self.classifications {
            let outcomes: Vec<String> = c.outcomes.iter().map(|(k, v)| format!("{k} {v}")).collect();
            let branches: String = c.eta_branches.iter().map(|(k, v)| format!("; {k}: {v} points")).collect();
            let _ = writeln!(
                out,
                "grid {} {} kind: {}/{} agree ({}{branches})",
                c.group,
                c.kind,
                c.agree,
                c.total,
                outcomes.join(", ")
            );
            for p in c.points.iter().filter(|p| !p.agree).take(10) {
                let show = |v: &Option<SolitonVerdict>| v.as_ref().map_or("error".to_string(), |v| v.outcome().to_string());
                let _ = writeln!(
                    out,
                    "  DISAGREE at {}: computed {}, expected {}{}",
                    p.sigma,
                    show(&p.computed),
                    show(&p.expected),
                    p.error.as_ref().map(|e| format!(" ({e})")).unwrap_or_default()
                );
            }
        }
        let s = &self.summary;
        let displays =
            if s.mismatched == 0 && s.identities_failed == 0 { "all displays matched".to_string() } else {
                format!("{} display entries mismatched", s.mismatched + s.identities_failed)
            };
        let cases = if s.theorem_cases_passed == s.theorem_cases {
            "all theorem cases pass".to_string()
        } else {
            format!("{} of {} theorem cases fail", s.theorem_cases - s.theorem_cases_passed, s.theorem_cases)
        };
        let _ = writeln!(out, "{} groups, {displays}, {cases}", s.groups);
        let _ = writeln!(out, "grid points: {} agree, {} disagree", s.grid_agree, s.grid_disagree);
        out
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub groups: Vec<GroupId>,
    pub grid: GridSpec,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { groups: GroupId::ALL.to_vec(), grid: GridSpec::default() }
    }
}

pub fn verify_group(catalog: &Catalog, id: GroupId, grid: &GridSpec) -> GroupReport {
    let rep = reproduce_group(catalog, id);
    let ladder = grid.ladder_with_zero();
    let mut theorem_cases = Vec::new();
    for kind in SolitonKind::BOTH {
        for case in catalog.theorem_claim(id, kind).cases() {
            theorem_cases.push(check_case(catalog, id, kind, case, &ladder));
        }
    }
    GroupReport {
        group: id,
        unimodular: id.unimodular(),
        matched: rep.count(Verdict::Match),
        matched_on_variety: rep.count(Verdict::MatchOnVariety),
        mismatched: rep.count(Verdict::Mismatch),
        reproduction: rep.entries,
        identities: rep.identities,
        theorem_cases,
        notes: surface_notes(catalog, id),
    }
}

pub fn verify_paper(catalog: &Catalog, opts: &VerifyOptions) -> Report {
    let mut ids = opts.groups.clone();
    ids.sort();
    ids.dedup();
    let groups: Vec<GroupReport> = ids.par_iter().map(|&id| verify_group(catalog, id, &opts.grid)).collect();
    let classifications: Vec<ClassificationReport> = ids
        .iter()
        .flat_map(|&id| SolitonKind::BOTH.map(|k| (id, k)))
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&(id, kind)| classify_grid(catalog, id, kind, &opts.grid))
        .collect();

    let sum = |f: &dyn Fn(&GroupReport) -> usize| groups.iter().map(f).sum::<usize>();
    let matched = sum(&|g| g.matched);
    let matched_on_variety = sum(&|g| g.matched_on_variety);
    let mismatched = sum(&|g| g.mismatched);
    let identities_failed = sum(&|g| g.identities.iter().filter(|i| !i.holds).count());
    let theorem_cases = sum(&|g| g.theorem_cases.len());
    let theorem_cases_passed = sum(&|g| g.theorem_cases.iter().filter(|c| c.passed).count());
    let vacuous_cases = sum(&|g| g.theorem_cases.iter().filter(|c| c.vacuous).count());
    let grid_points = classifications.iter().map(|c| c.total).sum();
    let grid_agree = classifications.iter().map(|c| c.agree).sum();
    let grid_disagree = classifications.iter().map(|c| c.disagree).sum();
    let all_pass =
        mismatched == 0 && identities_failed == 0 && theorem_cases_passed == theorem_cases && grid_disagree == 0;
    let summary = Summary {
        groups: groups.len(),
        entries_compared: matched + matched_on_variety + mismatched,
        matched,
        matched_on_variety,
        mismatched,
        identities_failed,
        theorem_cases,
        theorem_cases_passed,
        vacuous_cases,
        grid_points,
        grid_agree,
        grid_disagree,
        all_pass,
    };
    Report {
        version: REPORT_VERSION,
        catalog_version: catalog.version,
        catalog_checksum: catalog.checksum.clone(),
        ladder: opts.grid.ladder.clone(),
        groups,
        classifications,
        summary,
    }
}
