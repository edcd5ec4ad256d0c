//! The seven Lorentzian Lie groups and everything printed about them, loaded
//! from a versioned JSON file.
//!
//! Claimed tensors are stored exactly as printed (after shorthand expansion)
//! and are never used as inputs to any computation; they only serve as the
//! reference that recomputed values are compared against.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::exactalg::{ExactError, Polynomial, Rational, VarId};
use crate::geometry::{ConnectionCoeffs, Operator3, TorsionComponents, TrilinearComponents};
use crate::liealg::{zero_vec, Constraint, LieAlgebraSpec, LieError, ParameterAssignment, SpecFile, PAIRS};
use crate::soliton::{Family, SolitonKind, SolitonVerdict};

pub const CATALOG_VERSION: u32 = 1;
pub const CATALOG_ENV: &str = "WANAS_CATALOG";

const EMBEDDED: &str = include_str!("../data/catalog.json");

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("cannot read catalog {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed catalog: {0}")]
    Json(#[from] serde_json::Error),
    #[error("catalog version {0} is not supported (expected {CATALOG_VERSION})")]
    Version(u32),
    #[error("catalog checksum mismatch: file says {recorded}, contents hash to {computed}")]
    Checksum { recorded: String, computed: String },
    #[error("{group} {field}: {source}")]
    Entry { group: String, field: String, source: LieError },
    #[error("{group} {field}: {message}")]
    Shape { group: String, field: String, message: String },
    #[error("catalog lists {0} twice")]
    DuplicateGroup(GroupId),
    #[error("catalog has no entry for {0}")]
    MissingGroup(GroupId),
    #[error("unknown group {0:?}; expected g1 .. g7")]
    UnknownGroup(String),
    #[error("{group} {kind} kind: point {sigma} matches cases {labels:?}")]
    AmbiguousCase { group: GroupId, kind: SolitonKind, sigma: String, labels: Vec<String> },
    #[error("cannot evaluate claim at {sigma}: {source}")]
    Evaluation { sigma: String, source: ExactError },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GroupId {
    G1,
    G2,
    G3,
    G4,
    G5,
    G6,
    G7,
}

impl GroupId {
    pub const ALL: [GroupId; 7] =
        [GroupId::G1, GroupId::G2, GroupId::G3, GroupId::G4, GroupId::G5, GroupId::G6, GroupId::G7];

    pub fn unimodular(self) -> bool {
        matches!(self, GroupId::G1 | GroupId::G2 | GroupId::G3 | GroupId::G4)
    }

    pub fn name(self) -> &'static str {
        match self {
            GroupId::G1 => "G1",
            GroupId::G2 => "G2",
            GroupId::G3 => "G3",
            GroupId::G4 => "G4",
            GroupId::G5 => "G5",
            GroupId::G6 => "G6",
            GroupId::G7 => "G7",
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupId {
    type Err = CatalogError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GroupId::ALL
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| CatalogError::UnknownGroup(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupEntry {
    pub id: GroupId,
    pub spec: LieAlgebraSpec,
    /// Shorthand name to its expansion in the base variables.
    pub shorthands: BTreeMap<String, Polynomial>,
}

/// As printed. Torsion and the A-tensor are given for `i < j` only; the
/// remaining slots are filled by antisymmetry in the first two arguments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimedTensors {
    pub connection: ConnectionCoeffs,
    pub torsion: TorsionComponents,
    pub a_tensor: TrilinearComponents,
    pub abar: Operator3,
    pub ric: Operator3,
    pub wan: Operator3,
    pub wan_tilde: Operator3,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremCase {
    /// Roman numeral as printed; empty for single-case theorems.
    pub label: String,
    pub family: Family,
    /// `None` when any `c` works; `d` is then written in terms of the variable `c`.
    pub c: Option<Polynomial>,
    pub d: Operator3,
    pub note: Option<String>,
}

impl TheoremCase {
    pub fn any_c(&self) -> bool {
        self.c.is_none()
    }

    /// `σ` satisfies every condition of this case.
    pub fn matches(&self, sigma: &ParameterAssignment) -> Result<bool, ExactError> {
        let vals = sigma.values();
        for (v, p) in &self.family.substitutions {
            let lhs = vals.get(v).ok_or(ExactError::MissingVariable(*v))?;
            if *lhs != p.eval(vals)? {
                return Ok(false);
            }
        }
        for con in &self.family.constraints {
            let z = con.polynomial().eval(vals)?.is_zero();
            let holds = match con {
                Constraint::Equation(_) => z,
                Constraint::NonVanishing(_) => !z,
            };
            if !holds {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn conditions_text(&self) -> String {
        let mut parts: Vec<String> =
            self.family.substitutions.iter().map(|(v, p)| format!("{v} = {p}")).collect();
        parts.extend(self.family.constraints.iter().map(|c| c.to_string()));
        if parts.is_empty() {
            "always".to_string()
        } else {
            parts.join(", ")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimBody {
    NoSoliton,
    Cases(Vec<TheoremCase>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremClaim {
    pub group: GroupId,
    pub kind: SolitonKind,
    /// This kind is stated only through the remark that it coincides
    /// with the first kind; `body` is then a copy of the first-kind claim.
    pub same_as_first: bool,
    pub body: ClaimBody,
}

impl TheoremClaim {
    pub fn cases(&self) -> &[TheoremCase] {
        match &self.body {
            ClaimBody::NoSoliton => &[],
            ClaimBody::Cases(c) => c,
        }
    }
}

/// How a theorem case relates to its group's standing constraints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseLint {
    pub group: GroupId,
    pub kind: SolitonKind,
    pub label: String,
    /// A standing non-vanishing condition becomes `0 != 0` under the case's
    /// substitutions, so no valid point satisfies the case.
    pub vacuous: bool,
    /// Standing constraints that the case's own conditions do not imply;
    /// they are assumed in addition to the case.
    pub inherited: Vec<String>,
}

#[derive(Debug, Clone)]
struct GroupRecord {
    entry: GroupEntry,
    claimed: ClaimedTensors,
    first: TheoremClaim,
    second: TheoremClaim,
}

#[derive(Debug, Clone)]
pub struct Catalog {
    pub version: u32,
    pub checksum: String,
    records: Vec<GroupRecord>,
    lints: Vec<CaseLint>,
}

/// Hex SHA-256 of the compact serialization of `groups` (object keys sorted).
pub fn compute_checksum(groups: &Value) -> String {
    let canonical = serde_json::to_string(groups).expect("json value serializes");
    format!("{:x}", Sha256::digest(canonical.as_bytes()))
}

/// Rewrites the `checksum` field of a raw catalog document to match its
/// contents. Used when editing catalog data by hand.
pub fn reseal(doc: &mut Value) {
    let sum = compute_checksum(&doc["groups"]);
    doc["checksum"] = Value::String(sum);
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CatalogFile {
    version: u32,
    checksum: String,
    groups: Vec<GroupFile>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupFile {
    id: GroupId,
    unimodular: bool,
    spec: SpecFile,
    #[serde(default)]
    shorthands: BTreeMap<String, String>,
    claimed: ClaimedFile,
    theorems: TheoremsFile,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ClaimedFile {
    connection: BTreeMap<String, [String; 3]>,
    torsion: BTreeMap<String, [String; 3]>,
    a_tensor: BTreeMap<String, [String; 3]>,
    abar: [[String; 3]; 3],
    ric: [[String; 3]; 3],
    wan: [[String; 3]; 3],
    wan_tilde: [[String; 3]; 3],
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TheoremsFile {
    first: ClaimFile,
    second: ClaimFile,
}

#[derive(Deserialize)]
#[serde(tag = "claim", rename_all = "snake_case", deny_unknown_fields)]
enum ClaimFile {
    NoSoliton,
    SameAsFirst,
    Cases { cases: Vec<CaseFile> },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CaseFile {
    label: String,
    #[serde(default)]
    substitutions: BTreeMap<String, String>,
    #[serde(default)]
    equations: Vec<String>,
    #[serde(default)]
    nonzero: Vec<String>,
    c: Option<String>,
    #[serde(default)]
    any_c: bool,
    d: [[String; 3]; 3],
    note: Option<String>,
}

struct Ctx<'a> {
    group: GroupId,
    shorthands: &'a BTreeMap<String, Polynomial>,
}

impl Ctx<'_> {
    fn poly(&self, field: &str, s: &str) -> Result<Polynomial, CatalogError> {
        let resolve = |name: &str| self.shorthands.get(name).cloned();
        Polynomial::parse_with(s, &resolve).map_err(|e| self.err(field, LieError::Exact(e)))
    }

    fn err(&self, field: &str, source: LieError) -> CatalogError {
        CatalogError::Entry { group: self.group.to_string(), field: field.to_string(), source }
    }

    fn shape(&self, field: &str, message: impl Into<String>) -> CatalogError {
        CatalogError::Shape { group: self.group.to_string(), field: field.to_string(), message: message.into() }
    }

    fn matrix(&self, field: &str, rows: &[[String; 3]; 3]) -> Result<Operator3, CatalogError> {
        let mut m = Operator3::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.m[i][j] = self.poly(&format!("{field}[{}][{}]", i + 1, j + 1), &rows[i][j])?;
            }
        }
        Ok(m)
    }

    fn vector(&self, field: &str, key: &str, v: &[String; 3]) -> Result<[Polynomial; 3], CatalogError> {
        let mut out = zero_vec();
        for k in 0..3 {
            out[k] = self.poly(&format!("{field}.{key}[{}]", k + 1), &v[k])?;
        }
        Ok(out)
    }
}

fn parse_key(key: &str, len: usize) -> Option<Vec<usize>> {
    let idx: Vec<usize> = key.chars().map(|ch| ch.to_digit(10).map(|d| d as usize)).collect::<Option<_>>()?;
    (idx.len() == len && idx.iter().all(|&d| (1..=3).contains(&d))).then(|| idx.iter().map(|d| d - 1).collect())
}

fn expected_keys(len: usize, ordered_pair: bool) -> Vec<String> {
    let mut keys = Vec::new();
    let firsts: Vec<(usize, usize)> =
        if ordered_pair { PAIRS.to_vec() } else { (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).collect() };
    for (i, j) in firsts {
        if len == 2 {
            keys.push(format!("{}{}", i + 1, j + 1));
        } else {
            for k in 0..3 {
                keys.push(format!("{}{}{}", i + 1, j + 1, k + 1));
            }
        }
    }
    keys
}

fn check_keys<T>(ctx: &Ctx, field: &str, map: &BTreeMap<String, T>, expected: &[String]) -> Result<(), CatalogError> {
    let have: Vec<&String> = map.keys().collect();
    let mut want: Vec<&String> = expected.iter().collect();
    want.sort();
    if have != want {
        return Err(ctx.shape(field, format!("expected keys {want:?}, found {have:?}")));
    }
    Ok(())
}

fn build_claimed(ctx: &Ctx, f: &ClaimedFile) -> Result<ClaimedTensors, CatalogError> {
    check_keys(ctx, "connection", &f.connection, &expected_keys(2, false))?;
    check_keys(ctx, "torsion", &f.torsion, &expected_keys(2, true))?;
    check_keys(ctx, "a_tensor", &f.a_tensor, &expected_keys(3, true))?;

    let mut connection = ConnectionCoeffs { gamma: std::array::from_fn(|_| std::array::from_fn(|_| zero_vec())) };
    for (key, v) in &f.connection {
        let idx = parse_key(key, 2).expect("checked");
        connection.gamma[idx[0]][idx[1]] = ctx.vector("connection", key, v)?;
    }
    let mut torsion = TorsionComponents { t: connection.gamma.clone().map(|r| r.map(|_| zero_vec())) };
    for (key, v) in &f.torsion {
        let idx = parse_key(key, 2).expect("checked");
        let vec = ctx.vector("torsion", key, v)?;
        torsion.t[idx[1]][idx[0]] = vec.clone().map(|p| -p);
        torsion.t[idx[0]][idx[1]] = vec;
    }
    let mut a_tensor = TrilinearComponents {
        k: std::array::from_fn(|_| std::array::from_fn(|_| std::array::from_fn(|_| zero_vec()))),
    };
    for (key, v) in &f.a_tensor {
        let idx = parse_key(key, 3).expect("checked");
        let vec = ctx.vector("a_tensor", key, v)?;
        a_tensor.k[idx[1]][idx[0]][idx[2]] = vec.clone().map(|p| -p);
        a_tensor.k[idx[0]][idx[1]][idx[2]] = vec;
    }
    Ok(ClaimedTensors {
        connection,
        torsion,
        a_tensor,
        abar: ctx.matrix("abar", &f.abar)?,
        ric: ctx.matrix("ric", &f.ric)?,
        wan: ctx.matrix("wan", &f.wan)?,
        wan_tilde: ctx.matrix("wan_tilde", &f.wan_tilde)?,
    })
}

fn build_case(ctx: &Ctx, field: &str, f: &CaseFile) -> Result<TheoremCase, CatalogError> {
    let field = format!("{field}.case[{}]", f.label);
    let mut substitutions = BTreeMap::new();
    for (name, s) in &f.substitutions {
        let v = VarId::from_name(name)
            .filter(|v| *v != VarId::C)
            .ok_or_else(|| ctx.shape(&field, format!("cannot substitute for {name:?}")))?;
        substitutions.insert(v, ctx.poly(&field, s)?);
    }
    let mut constraints = Vec::new();
    for s in &f.equations {
        constraints.push(Constraint::Equation(ctx.poly(&field, s)?));
    }
    for s in &f.nonzero {
        constraints.push(Constraint::NonVanishing(ctx.poly(&field, s)?));
    }
    let c = match (&f.c, f.any_c) {
        (Some(s), false) => Some(ctx.poly(&field, s)?),
        (None, true) => None,
        _ => return Err(ctx.shape(&field, "exactly one of `c` and `any_c: true` is required")),
    };
    let d = ctx.matrix(&format!("{field}.d"), &f.d)?;
    if c.is_some() && d.m.iter().flatten().any(|p| p.degree_in(VarId::C) > 0) {
        return Err(ctx.shape(&field, "d mentions c although c is fixed"));
    }
    Ok(TheoremCase { label: f.label.clone(), family: Family { substitutions, constraints }, c, d, note: f.note.clone() })
}

fn build_claim(
    ctx: &Ctx,
    kind: SolitonKind,
    f: &ClaimFile,
    first: Option<&TheoremClaim>,
) -> Result<TheoremClaim, CatalogError> {
    let field = format!("theorems.{}", kind.name());
    let (same_as_first, body) = match f {
        ClaimFile::NoSoliton => (false, ClaimBody::NoSoliton),
        ClaimFile::Cases { cases } => {
            let mut out = Vec::new();
            for case in cases {
                out.push(build_case(ctx, &field, case)?);
            }
            (false, ClaimBody::Cases(out))
        }
        ClaimFile::SameAsFirst => match first {
            Some(first) => (true, first.body.clone()),
            None => return Err(ctx.shape(&field, "the first kind cannot refer to itself")),
        },
    };
    Ok(TheoremClaim { group: ctx.group, kind, same_as_first, body })
}

/// `p` and `q` differ by a nonzero constant factor.
fn proportional(p: &Polynomial, q: &Polynomial) -> bool {
    let (Some((mp, cp)), Some((mq, cq))) = (p.terms().next_back(), q.terms().next_back()) else {
        return false;
    };
    if mp != mq {
        return false;
    }
    let ratio = cq.checked_div(cp).expect("nonzero leading coefficient");
    &p.scale(&ratio) == q
}

fn lint_case(spec: &LieAlgebraSpec, claim: &TheoremClaim, case: &TheoremCase) -> CaseLint {
    let subs = &case.family.substitutions;
    let own: Vec<(bool, Polynomial)> = case
        .family
        .constraints
        .iter()
        .map(|c| (matches!(c, Constraint::Equation(_)), c.polynomial().substitute(subs)))
        .collect();
    let mut vacuous = false;
    let mut inherited = Vec::new();
    for con in &spec.constraints {
        let p = con.polynomial().substitute(subs);
        let implied = match con {
            Constraint::NonVanishing(_) => {
                if p.is_zero() {
                    vacuous = true;
                    true
                } else {
                    p.is_constant() || own.iter().any(|(eq, q)| !eq && proportional(&p, q))
                }
            }
            Constraint::Equation(_) => p.is_zero() || own.iter().any(|(eq, q)| *eq && proportional(&p, q)),
        };
        if !implied {
            inherited.push(con.to_string());
        }
    }
    CaseLint { group: claim.group, kind: claim.kind, label: case.label.clone(), vacuous, inherited }
}

impl Catalog {
    pub fn embedded() -> Result<Catalog, CatalogError> {
        Catalog::parse(EMBEDDED)
    }

    /// The file named by `WANAS_CATALOG` if set, otherwise the embedded copy.
    pub fn load() -> Result<Catalog, CatalogError> {
        match std::env::var_os(CATALOG_ENV) {
            Some(path) if !path.is_empty() => Catalog::from_path(Path::new(&path)),
            _ => Catalog::embedded(),
        }
    }

    pub fn from_path(path: &Path) -> Result<Catalog, CatalogError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| CatalogError::Io { path: path.display().to_string(), source })?;
        Catalog::parse(&text)
    }

    pub fn embedded_text() -> &'static str {
        EMBEDDED
    }

    pub fn parse(text: &str) -> Result<Catalog, CatalogError> {
        let raw: Value = serde_json::from_str(text)?;
        let computed = compute_checksum(raw.get("groups").unwrap_or(&Value::Null));
        let file: CatalogFile = serde_json::from_value(raw)?;
        if file.version != CATALOG_VERSION {
            return Err(CatalogError::Version(file.version));
        }
        if file.checksum != computed {
            return Err(CatalogError::Checksum { recorded: file.checksum, computed });
        }

        let mut records: Vec<GroupRecord> = Vec::new();
        for g in &file.groups {
            if records.iter().any(|r| r.entry.id == g.id) {
                return Err(CatalogError::DuplicateGroup(g.id));
            }
            let no_shorthands = BTreeMap::new();
            let base = Ctx { group: g.id, shorthands: &no_shorthands };
            if g.unimodular != g.id.unimodular() {
                return Err(base.shape("unimodular", "flag disagrees with the group id"));
            }
            let mut shorthands = BTreeMap::new();
            for (name, s) in &g.shorthands {
                if VarId::from_name(name).is_some() {
                    return Err(base.shape("shorthands", format!("{name:?} shadows a variable")));
                }
                shorthands.insert(name.clone(), base.poly(&format!("shorthands.{name}"), s)?);
            }
            let ctx = Ctx { group: g.id, shorthands: &shorthands };
            let resolve = |name: &str| shorthands.get(name).cloned();
            let spec = g.spec.to_spec(&resolve).map_err(|e| ctx.err("spec", e))?;
            let claimed = build_claimed(&ctx, &g.claimed)?;
            let first = build_claim(&ctx, SolitonKind::First, &g.theorems.first, None)?;
            let second = build_claim(&ctx, SolitonKind::Second, &g.theorems.second, Some(&first))?;
            records.push(GroupRecord {
                entry: GroupEntry { id: g.id, spec, shorthands: shorthands.clone() },
                claimed,
                first,
                second,
            });
        }
        for id in GroupId::ALL {
            if !records.iter().any(|r| r.entry.id == id) {
                return Err(CatalogError::MissingGroup(id));
            }
        }
        records.sort_by_key(|r| r.entry.id);

        let mut lints = Vec::new();
        for r in &records {
            for claim in [&r.first, &r.second] {
                for case in claim.cases() {
                    lints.push(lint_case(&r.entry.spec, claim, case));
                }
            }
        }
        Ok(Catalog { version: file.version, checksum: file.checksum, records, lints })
    }

    fn record(&self, id: GroupId) -> &GroupRecord {
        self.records.iter().find(|r| r.entry.id == id).expect("all groups present after load")
    }

    pub fn get_group(&self, id: GroupId) -> &GroupEntry {
        &self.record(id).entry
    }

    pub fn claimed_tensors(&self, id: GroupId) -> &ClaimedTensors {
        &self.record(id).claimed
    }

    pub fn theorem_claim(&self, id: GroupId, kind: SolitonKind) -> &TheoremClaim {
        let r = self.record(id);
        match kind {
            SolitonKind::First => &r.first,
            SolitonKind::Second => &r.second,
        }
    }

    pub fn lints(&self) -> &[CaseLint] {
        &self.lints
    }

    pub fn lint(&self, id: GroupId, kind: SolitonKind, label: &str) -> Option<&CaseLint> {
        self.lints.iter().find(|l| l.group == id && l.kind == kind && l.label == label)
    }
}

/// The verdict the theorem predicts at `σ`. Assumes `σ` already satisfies the
/// group's standing constraints.
pub fn predicate_eval(claim: &TheoremClaim, sigma: &ParameterAssignment) -> Result<SolitonVerdict, CatalogError> {
    let eval_err = |source| CatalogError::Evaluation { sigma: sigma.to_string(), source };
    let cases = match &claim.body {
        ClaimBody::NoSoliton => return Ok(SolitonVerdict::NoSoliton { witness: Vec::new() }),
        ClaimBody::Cases(cases) => cases,
    };
    let mut hits = Vec::new();
    for case in cases {
        if case.matches(sigma).map_err(eval_err)? {
            hits.push(case);
        }
    }
    match hits.as_slice() {
        [] => Ok(SolitonVerdict::NoSoliton { witness: Vec::new() }),
        [case] => {
            let vals = sigma.values();
            let eval_matrix = |m: &Operator3| -> Result<[[Rational; 3]; 3], CatalogError> {
                let mut out: [[Rational; 3]; 3] = Default::default();
                for i in 0..3 {
                    for j in 0..3 {
                        out[i][j] = m.m[i][j].eval(vals).map_err(eval_err)?;
                    }
                }
                Ok(out)
            };
            match &case.c {
                Some(c) => {
                    Ok(SolitonVerdict::Soliton { c: c.eval(vals).map_err(eval_err)?, d: eval_matrix(&case.d)? })
                }
                None => {
                    // D(c) = Wan - c·Id, so Wan = D(c) + c·Id, which no longer involves c.
                    let wan = case.d.add(&Operator3::identity().scale(&Polynomial::var(VarId::C)));
                    Ok(SolitonVerdict::SolitonAnyC { wan: eval_matrix(&wan)? })
                }
            }
        }
        many => Err(CatalogError::AmbiguousCase {
            group: claim.group,
            kind: claim.kind,
            sigma: sigma.to_string(),
            labels: many.iter().map(|c| c.label.clone()).collect(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn catalog() -> Catalog {
        Catalog::embedded().unwrap()
    }

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn at(s: &str) -> ParameterAssignment {
        ParameterAssignment::parse(s).unwrap()
    }

    #[test]
    fn embedded_catalog_loads() {
        let cat = catalog();
        assert_eq!(cat.version, 1);
        for id in GroupId::ALL {
            assert_eq!(cat.get_group(id).id, id);
        }
    }

    #[test]
    fn group_ids_parse_case_insensitively() {
        assert_eq!("g4".parse::<GroupId>().unwrap(), GroupId::G4);
        assert_eq!(" G7".parse::<GroupId>().unwrap(), GroupId::G7);
        assert!("g8".parse::<GroupId>().is_err());
        assert!(GroupId::G4.unimodular() && !GroupId::G5.unimodular());
    }

    #[test]
    fn standing_constraints() {
        let cat = catalog();
        let cons = |id| cat.get_group(id).spec.constraints.clone();
        assert_eq!(cons(GroupId::G1), vec![Constraint::NonVanishing(p("alpha"))]);
        assert_eq!(cons(GroupId::G2), vec![Constraint::NonVanishing(p("gamma"))]);
        assert_eq!(cons(GroupId::G4), vec![Constraint::Equation(p("eta^2 - 1"))]);
        assert_eq!(
            cons(GroupId::G7),
            vec![Constraint::NonVanishing(p("alpha + delta")), Constraint::Equation(p("alpha*gamma"))]
        );
        assert_eq!(cat.get_group(GroupId::G2).spec.constants.get(0, 1, 1), &p("gamma"));
        assert_eq!(cat.get_group(GroupId::G2).spec.constants.get(0, 1, 2), &p("-beta"));
    }

    #[test]
    fn shorthands_expand() {
        let cat = catalog();
        let g3 = &cat.get_group(GroupId::G3).shorthands;
        assert_eq!(&g3["a2"] - &g3["a1"], p("gamma"));
        assert_eq!(&g3["a3"] - &g3["a1"], p("beta"));
        assert_eq!(g3["a1"], p("1/2*alpha - 1/2*beta - 1/2*gamma"));
        let g4 = &cat.get_group(GroupId::G4).shorthands;
        assert_eq!(g4["b2"], p("alpha/2 - eta"));
        assert_eq!(
            cat.claimed_tensors(GroupId::G4).abar.m[0][0],
            p("2*(alpha/2 + eta - beta)*(2*eta - beta) + 1")
        );
    }

    #[test]
    fn claimed_entries_are_verbatim() {
        let cat = catalog();
        assert_eq!(cat.claimed_tensors(GroupId::G2).connection.gamma[1][0], [p("0"), p("-gamma"), p("0")]);
        assert_eq!(cat.claimed_tensors(GroupId::G7).ric.m[2][0], p("-(gamma*alpha + delta*gamma/2)"));
        assert_eq!(cat.claimed_tensors(GroupId::G7).connection.gamma[0][0], [p("0"), p("alpha"), p("0")]);
        let t = &cat.claimed_tensors(GroupId::G1).torsion;
        assert_eq!(t.t[2][0], [p("-alpha"), p("-beta/2"), p("0")]);
        for id in [GroupId::G3, GroupId::G5] {
            let c = cat.claimed_tensors(id);
            assert_eq!(c.wan, c.wan_tilde);
        }
    }

    #[test]
    fn theorem_claims() {
        let cat = catalog();
        assert_eq!(cat.theorem_claim(GroupId::G1, SolitonKind::First).body, ClaimBody::NoSoliton);
        let g3 = cat.theorem_claim(GroupId::G3, SolitonKind::First);
        assert_eq!(g3.cases().len(), 7);
        let v = &g3.cases()[4];
        assert_eq!(v.label, "v");
        assert_eq!(v.c, Some(p("-2*beta^2")));
        assert_eq!(v.d, Operator3::diag([p("0"), p("2*beta^2"), p("2*beta^2")]));
        let g3b = cat.theorem_claim(GroupId::G3, SolitonKind::Second);
        assert!(g3b.same_as_first && g3b.body == g3.body);
        let g6 = cat.theorem_claim(GroupId::G6, SolitonKind::Second);
        assert_eq!(g6.cases()[1].c, Some(p("-(alpha^2 + delta^2)")));
    }

    #[test]
    fn predicate_examples() {
        let cat = catalog();
        let g2 = cat.theorem_claim(GroupId::G2, SolitonKind::First);
        let want = SolitonVerdict::Soliton {
            c: Rational::from_int(-8),
            d: [
                [0, 0, 0].map(Rational::from_int),
                [0, 4, 0].map(Rational::from_int),
                [0, 0, 8].map(Rational::from_int),
            ],
        };
        assert_eq!(predicate_eval(g2, &at("alpha=0,beta=0,gamma=2")).unwrap(), want);
        assert_eq!(predicate_eval(g2, &at("alpha=1,beta=0,gamma=2")).unwrap().outcome(), "no_soliton");
        let g1 = cat.theorem_claim(GroupId::G1, SolitonKind::First);
        assert_eq!(predicate_eval(g1, &at("alpha=1,beta=3")).unwrap().outcome(), "no_soliton");
        let g3 = cat.theorem_claim(GroupId::G3, SolitonKind::First);
        match predicate_eval(g3, &at("alpha=0,beta=0,gamma=0")).unwrap() {
            SolitonVerdict::SolitonAnyC { wan } => assert!(wan.iter().flatten().all(Rational::is_zero)),
            other => panic!("{other:?}"),
        }
        let g4 = cat.theorem_claim(GroupId::G4, SolitonKind::First);
        match predicate_eval(g4, &at("alpha=0,beta=-1,eta=-1")).unwrap() {
            SolitonVerdict::Soliton { c, d } => {
                assert_eq!(c, Rational::from_int(-1));
                assert_eq!(d[1][2], Rational::from_int(-1));
                assert_eq!(d[2][1], Rational::from_int(1));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn ambiguous_claims_are_reported() {
        let cat = catalog();
        let mut claim = cat.theorem_claim(GroupId::G2, SolitonKind::First).clone();
        if let ClaimBody::Cases(cases) = &mut claim.body {
            let mut dup = cases[0].clone();
            dup.label = "dup".into();
            cases.push(dup);
        }
        let err = predicate_eval(&claim, &at("alpha=0,beta=0,gamma=1")).unwrap_err();
        assert!(matches!(err, CatalogError::AmbiguousCase { ref labels, .. } if labels.len() == 2));
    }

    #[test]
    fn case_lints() {
        let cat = catalog();
        let g6 = cat.lint(GroupId::G6, SolitonKind::First, "iii").unwrap();
        assert!(g6.vacuous);
        for l in cat.lints() {
            if l.group == GroupId::G6 && l.label == "iii" {
                continue;
            }
            assert!(!l.vacuous, "{l:?}");
        }
        let g2 = cat.lint(GroupId::G2, SolitonKind::First, "").unwrap();
        assert!(g2.inherited.is_empty());
        let g7 = cat.lint(GroupId::G7, SolitonKind::Second, "").unwrap();
        assert!(g7.inherited.is_empty());
        let g5 = cat.lint(GroupId::G5, SolitonKind::First, "").unwrap();
        assert_eq!(g5.inherited.len(), 2);
    }

    #[test]
    fn checksum_is_enforced() {
        let mut doc: Value = serde_json::from_str(Catalog::embedded_text()).unwrap();
        doc["groups"][0]["claimed"]["wan"][0][0] = Value::String("alpha".into());
        let text = serde_json::to_string(&doc).unwrap();
        assert!(matches!(Catalog::parse(&text), Err(CatalogError::Checksum { .. })));
        reseal(&mut doc);
        let cat = Catalog::parse(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(cat.claimed_tensors(GroupId::G1).wan.m[0][0], p("alpha"));
    }

    #[test]
    fn malformed_entries_are_rejected() {
        let mut doc: Value = serde_json::from_str(Catalog::embedded_text()).unwrap();
        doc["groups"][2]["claimed"]["torsion"].as_object_mut().unwrap().remove("13");
        reseal(&mut doc);
        assert!(matches!(Catalog::parse(&doc.to_string()), Err(CatalogError::Shape { .. })));

        let mut doc: Value = serde_json::from_str(Catalog::embedded_text()).unwrap();
        doc["groups"][0]["claimed"]["ric"][0][0] = Value::String("alpha +".into());
        reseal(&mut doc);
        assert!(matches!(Catalog::parse(&doc.to_string()), Err(CatalogError::Entry { .. })));
    }
}
