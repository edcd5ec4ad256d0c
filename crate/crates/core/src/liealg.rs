//! Three-dimensional metric Lie algebras with polynomial structure constants.
//!
//! The basis is fixed and ordered `(e1, e2, e3)`. Indices are 0-based in code
//! and 1-based in every printed or serialized form.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::{ExactError, Polynomial, Rational, VarId};

/// Vector in the basis `(e1, e2, e3)` with polynomial coordinates.
pub type Vec3 = [Polynomial; 3];

pub fn zero_vec() -> Vec3 {
    std::array::from_fn(|_| Polynomial::zero())
}

pub fn basis_vec(i: usize) -> Vec3 {
    std::array::from_fn(|k| if k == i { Polynomial::one() } else { Polynomial::zero() })
}

/// Index pairs `(i, j)` with `i < j`, in the order (1,2), (1,3), (2,3).
pub const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("structure constants are not antisymmetric at ({i},{j},{k})")]
    NotAntisymmetric { i: usize, j: usize, k: usize },
    #[error("signature entries must be +1 or -1")]
    InvalidSignature,
    #[error("bad bracket key {0:?}; expected one of \"12\", \"13\", \"23\"")]
    BadBracketKey(String),
    #[error("the soliton constant c cannot appear in {0}")]
    ReservedVariable(&'static str),
    #[error("variable {0} does not occur in this algebra")]
    UnexpectedVariable(VarId),
    #[error("assignment violates constraints: {}", join_violations(.0))]
    InvalidAssignment(Vec<Violation>),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

/// Diagonal metric `g(e_i, e_j) = eps[i] δ_ij`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "[i8; 3]", into = "[i8; 3]")]
pub struct MetricSignature([i8; 3]);

impl MetricSignature {
    /// `(+, +, -)`: e3 timelike.
    pub const LORENTZIAN: MetricSignature = MetricSignature([1, 1, -1]);

    pub fn new(eps: [i8; 3]) -> Result<Self, LieError> {
        if eps.iter().all(|e| *e == 1 || *e == -1) {
            Ok(MetricSignature(eps))
        } else {
            Err(LieError::InvalidSignature)
        }
    }

    pub fn eps(&self, i: usize) -> i64 {
        self.0[i] as i64
    }

    pub fn eps_rational(&self, i: usize) -> Rational {
        Rational::from_int(self.eps(i))
    }

    pub fn entries(&self) -> [i8; 3] {
        self.0
    }
}

impl Default for MetricSignature {
    fn default() -> Self {
        MetricSignature::LORENTZIAN
    }
}

impl TryFrom<[i8; 3]> for MetricSignature {
    type Error = LieError;
    fn try_from(eps: [i8; 3]) -> Result<Self, LieError> {
        MetricSignature::new(eps)
    }
}

impl From<MetricSignature> for [i8; 3] {
    fn from(s: MetricSignature) -> Self {
        s.0
    }
}

/// `[e_i, e_j] = Σ_k c[i][j][k] e_k`, antisymmetric in `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    c: [[Vec3; 3]; 3],
}

impl StructureConstants {
    /// Builds the full table from the three brackets `[e1,e2]`, `[e1,e3]`,
    /// `[e2,e3]`; antisymmetry holds by construction.
    pub fn from_brackets(b12: Vec3, b13: Vec3, b23: Vec3) -> Self {
        let mut c: [[Vec3; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| zero_vec()));
        for ((i, j), b) in PAIRS.into_iter().zip([b12, b13, b23]) {
            c[j][i] = std::array::from_fn(|k| -&b[k]);
            c[i][j] = b;
        }
        StructureConstants { c }
    }

    /// Accepts a full table, rejecting it unless it is antisymmetric.
    pub fn from_table(c: [[Vec3; 3]; 3]) -> Result<Self, LieError> {
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    if c[i][j][k] != -&c[j][i][k] {
                        return Err(LieError::NotAntisymmetric { i: i + 1, j: j + 1, k: k + 1 });
                    }
                }
            }
        }
        Ok(StructureConstants { c })
    }

    pub fn abelian() -> Self {
        StructureConstants::from_brackets(zero_vec(), zero_vec(), zero_vec())
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Polynomial {
        &self.c[i][j][k]
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vec3 {
        &self.c[i][j]
    }

    pub fn is_antisymmetric(&self) -> bool {
        StructureConstants::from_table(self.c.clone()).is_ok()
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        StructureConstants {
            c: std::array::from_fn(|i| std::array::from_fn(|j| std::array::from_fn(|k| f(&self.c[i][j][k])))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Constraint {
    /// `p = 0`
    Equation(Polynomial),
    /// `p ≠ 0`
    #[serde(rename = "nonzero")]
    NonVanishing(Polynomial),
}

impl Constraint {
    pub fn polynomial(&self) -> &Polynomial {
        match self {
            Constraint::Equation(p) | Constraint::NonVanishing(p) => p,
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::Equation(p) => write!(f, "{p} = 0"),
            Constraint::NonVanishing(p) => write!(f, "{p} != 0"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Constraint { constraint: String, value: Rational },
    EtaNotSign { value: Rational },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Constraint { constraint, value } => {
                write!(f, "{constraint} violated (value {value})")
            }
            Violation::EtaNotSign { value } => write!(f, "eta must be 1 or -1, got {value}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebraSpec {
    pub constants: StructureConstants,
    pub signature: MetricSignature,
    pub constraints: Vec<Constraint>,
}

impl LieAlgebraSpec {
    pub fn new(
        constants: StructureConstants,
        signature: MetricSignature,
        constraints: Vec<Constraint>,
    ) -> Result<Self, LieError> {
        let spec = LieAlgebraSpec { constants, signature, constraints };
        if spec.constraints.iter().any(|c| c.polynomial().variables().contains(&VarId::C)) {
            return Err(LieError::ReservedVariable("constraints"));
        }
        if spec.constant_variables().contains(&VarId::C) {
            return Err(LieError::ReservedVariable("structure constants"));
        }
        Ok(spec)
    }

    pub fn abelian() -> Self {
        LieAlgebraSpec {
            constants: StructureConstants::abelian(),
            signature: MetricSignature::LORENTZIAN,
            constraints: Vec::new(),
        }
    }

    fn constant_variables(&self) -> BTreeSet<VarId> {
        let mut vars = BTreeSet::new();
        for (i, j) in PAIRS {
            for k in 0..3 {
                vars.extend(self.constants.get(i, j, k).variables());
            }
        }
        vars
    }

    /// Every parameter occurring in the brackets or constraints.
    pub fn parameters(&self) -> BTreeSet<VarId> {
        let mut vars = self.constant_variables();
        for c in &self.constraints {
            vars.extend(c.polynomial().variables());
        }
        vars
    }

    pub fn equations(&self) -> impl Iterator<Item = &Polynomial> {
        self.constraints.iter().filter_map(|c| match c {
            Constraint::Equation(p) => Some(p),
            Constraint::NonVanishing(_) => None,
        })
    }

    pub fn is_numeric(&self) -> bool {
        self.constant_variables().is_empty()
    }

    pub fn map_constants(&self, f: impl Fn(&Polynomial) -> Polynomial) -> LieAlgebraSpec {
        LieAlgebraSpec {
            constants: self.constants.map(f),
            signature: self.signature,
            constraints: self.constraints.clone(),
        }
    }
}

/// Exact values for the parameters of one algebra. Never assigns `c`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ParameterAssignment {
    values: BTreeMap<VarId, Rational>,
}

impl ParameterAssignment {
    pub fn new(values: BTreeMap<VarId, Rational>) -> Result<Self, LieError> {
        if values.contains_key(&VarId::C) {
            return Err(LieError::ReservedVariable("a parameter assignment"));
        }
        Ok(ParameterAssignment { values })
    }

    pub fn from_pairs<I: IntoIterator<Item = (VarId, Rational)>>(pairs: I) -> Result<Self, LieError> {
        ParameterAssignment::new(pairs.into_iter().collect())
    }

    pub fn values(&self) -> &BTreeMap<VarId, Rational> {
        &self.values
    }

    pub fn get(&self, v: VarId) -> Option<&Rational> {
        self.values.get(&v)
    }

    /// Parses `name=p/q,name=p/q`. Decimals are rejected.
    pub fn parse(s: &str) -> Result<Self, LieError> {
        let mut values = BTreeMap::new();
        for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let (name, value) = item
                .split_once('=')
                .ok_or_else(|| ExactError::Parse(format!("expected name=value, got {item:?}")))?;
            let var: VarId = name.parse()?;
            let value: Rational = value.parse()?;
            if values.insert(var, value).is_some() {
                return Err(ExactError::Parse(format!("{var} assigned twice")).into());
            }
        }
        ParameterAssignment::new(values)
    }
}

impl fmt::Display for ParameterAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|(v, r)| format!("{v}={r}")).collect();
        f.write_str(&parts.join(","))
    }
}

impl Serialize for ParameterAssignment {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(self.values.len()))?;
        for (v, r) in &self.values {
            map.serialize_entry(v.name(), r)?;
        }
        map.end()
    }
}

/// Bilinear extension of the structure constants.
pub fn bracket(spec: &LieAlgebraSpec, x: &Vec3, y: &Vec3) -> Vec3 {
    bracket_with(&spec.constants, x, y)
}

pub(crate) fn bracket_with(c: &StructureConstants, x: &Vec3, y: &Vec3) -> Vec3 {
    let mut out = zero_vec();
    for i in 0..3 {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..3 {
            if y[j].is_zero() || i == j {
                continue;
            }
            let xy = &x[i] * &y[j];
            for (k, slot) in out.iter_mut().enumerate() {
                let ck = c.get(i, j, k);
                if !ck.is_zero() {
                    *slot = &*slot + &(&xy * ck);
                }
            }
        }
    }
    out
}

/// `[e1,[e2,e3]] + [e2,[e3,e1]] + [e3,[e1,e2]]`.
pub fn jacobi_residual(spec: &LieAlgebraSpec) -> Vec3 {
    let e: [Vec3; 3] = std::array::from_fn(basis_vec);
    let mut total = zero_vec();
    for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        let inner = bracket(spec, &e[b], &e[c]);
        let outer = bracket(spec, &e[a], &inner);
        total = std::array::from_fn(|k| &total[k] + &outer[k]);
    }
    total
}

/// Empty result means the assignment is valid for `spec`.
pub fn validate_assignment(
    spec: &LieAlgebraSpec,
    sigma: &ParameterAssignment,
) -> Result<Vec<Violation>, LieError> {
    let params = spec.parameters();
    for v in params.iter() {
        if !sigma.values.contains_key(v) {
            return Err(ExactError::MissingVariable(*v).into());
        }
    }
    if let Some(extra) = sigma.values.keys().find(|v| !params.contains(v)) {
        return Err(LieError::UnexpectedVariable(*extra));
    }
    let mut violations = Vec::new();
    if let Some(eta) = sigma.get(VarId::Eta) {
        if *eta != Rational::one() && *eta != Rational::from_int(-1) {
            violations.push(Violation::EtaNotSign { value: eta.clone() });
        }
    }
    for c in &spec.constraints {
        let value = c.polynomial().eval(&sigma.values)?;
        let ok = match c {
            Constraint::Equation(_) => value.is_zero(),
            Constraint::NonVanishing(_) => !value.is_zero(),
        };
        if !ok {
            violations.push(Violation::Constraint { constraint: c.to_string(), value });
        }
    }
    Ok(violations)
}

/// Substitutes a valid assignment, producing an algebra with constant
/// structure constants and no constraints.
pub fn evaluate_spec(spec: &LieAlgebraSpec, sigma: &ParameterAssignment) -> Result<LieAlgebraSpec, LieError> {
    let violations = validate_assignment(spec, sigma)?;
    if !violations.is_empty() {
        return Err(LieError::InvalidAssignment(violations));
    }
    let mut out = spec.map_constants(|p| p.substitute_values(&sigma.values));
    out.constraints.clear();
    Ok(out)
}

/// Deterministic sample of valid parameter points.
///
/// Parameters range over `ladder` (η over {1, -1}). When the algebra has an
/// equation constraint other than η² = 1, every variable that occurs
/// linearly in it is in turn solved for from the others; combinations where
/// its coefficient vanishes either leave it free (if the equation already
/// holds) or are skipped. Points failing any constraint are dropped. The
/// result is sorted and, if longer than `cap`, thinned with a fixed stride.
pub fn sample_variety(spec: &LieAlgebraSpec, ladder: &[Rational], cap: usize) -> Vec<ParameterAssignment> {
    sample_variety_with(spec, &|_| ladder.to_vec(), cap)
}

/// [`sample_variety`] with a separate value list per variable (η is always
/// {1, -1}).
pub fn sample_variety_with(
    spec: &LieAlgebraSpec,
    values_of: &dyn Fn(VarId) -> Vec<Rational>,
    cap: usize,
) -> Vec<ParameterAssignment> {
    let params: Vec<VarId> = spec.parameters().into_iter().collect();
    let domain = |v: VarId| -> Vec<Rational> {
        if v == VarId::Eta {
            vec![Rational::one(), Rational::from_int(-1)]
        } else {
            values_of(v)
        }
    };
    let equation = spec.equations().find(|p| {
        p.variables().iter().any(|&v| v != VarId::Eta && p.degree_in(v) == 1)
    });

    let mut found: BTreeSet<ParameterAssignment> = BTreeSet::new();
    let mut accept = |values: BTreeMap<VarId, Rational>| {
        if let Ok(sigma) = ParameterAssignment::new(values) {
            if matches!(validate_assignment(spec, &sigma), Ok(v) if v.is_empty()) {
                found.insert(sigma);
            }
        }
    };

    match equation {
        None => {
            for values in product(&params, &domain) {
                accept(values);
            }
        }
        Some(eq) => {
            let solvable: Vec<VarId> = eq
                .variables()
                .into_iter()
                .filter(|&v| v != VarId::Eta && eq.degree_in(v) == 1)
                .collect();
            for target in solvable {
                let others: Vec<VarId> = params.iter().copied().filter(|&v| v != target).collect();
                let lin = eq.coefficient_of(target, 1);
                let rest = eq.coefficient_of(target, 0);
                for values in product(&others, &domain) {
                    let (Ok(a), Ok(b)) = (lin.eval(&values), rest.eval(&values)) else {
                        continue;
                    };
                    if !a.is_zero() {
                        let mut v = values.clone();
                        v.insert(target, -(&b / &a));
                        accept(v);
                    } else if b.is_zero() {
                        for x in domain(target) {
                            let mut v = values.clone();
                            v.insert(target, x);
                            accept(v);
                        }
                    }
                }
            }
        }
    }

    let all: Vec<ParameterAssignment> = found.into_iter().collect();
    if all.len() <= cap || cap == 0 {
        return all;
    }
    let n = all.len();
    (0..cap).map(|i| all[i * n / cap].clone()).collect()
}

fn product(vars: &[VarId], domain: &dyn Fn(VarId) -> Vec<Rational>) -> Vec<BTreeMap<VarId, Rational>> {
    let mut out = vec![BTreeMap::new()];
    for &v in vars {
        let values = domain(v);
        out = out
            .into_iter()
            .flat_map(|partial| {
                values.iter().map(move |x| {
                    let mut next = partial.clone();
                    next.insert(v, x.clone());
                    next
                })
            })
            .collect();
    }
    out
}

/// Serialized form used by `--spec-file` and inside the catalog.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    /// Keys "12", "13", "23"; values are the three coordinates of the bracket.
    pub brackets: BTreeMap<String, [String; 3]>,
    #[serde(default)]
    pub signature: MetricSignature,
    #[serde(default)]
    pub constraints: Vec<ConstraintFile>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum ConstraintFile {
    Equation(String),
    Nonzero(String),
}

impl SpecFile {
    pub fn to_spec(&self, resolve: &dyn Fn(&str) -> Option<Polynomial>) -> Result<LieAlgebraSpec, LieError> {
        let mut brackets: [Vec3; 3] = std::array::from_fn(|_| zero_vec());
        for (key, coords) in &self.brackets {
            let slot = match key.as_str() {
                "12" => 0,
                "13" => 1,
                "23" => 2,
                _ => return Err(LieError::BadBracketKey(key.clone())),
            };
            for (k, s) in coords.iter().enumerate() {
                brackets[slot][k] = Polynomial::parse_with(s, resolve)?;
            }
        }
        let [b12, b13, b23] = brackets;
        let constraints = self
            .constraints
            .iter()
            .map(|c| {
                Ok(match c {
                    ConstraintFile::Equation(s) => Constraint::Equation(Polynomial::parse_with(s, resolve)?),
                    ConstraintFile::Nonzero(s) => Constraint::NonVanishing(Polynomial::parse_with(s, resolve)?),
                })
            })
            .collect::<Result<Vec<_>, LieError>>()?;
        LieAlgebraSpec::new(StructureConstants::from_brackets(b12, b13, b23), self.signature, constraints)
    }

    pub fn from_spec(spec: &LieAlgebraSpec) -> SpecFile {
        let brackets = PAIRS
            .iter()
            .map(|&(i, j)| {
                let key = format!("{}{}", i + 1, j + 1);
                let coords = std::array::from_fn(|k| spec.constants.get(i, j, k).to_string());
                (key, coords)
            })
            .collect();
        let constraints = spec
            .constraints
            .iter()
            .map(|c| match c {
                Constraint::Equation(p) => ConstraintFile::Equation(p.to_string()),
                Constraint::NonVanishing(p) => ConstraintFile::Nonzero(p.to_string()),
            })
            .collect();
        SpecFile { brackets, signature: spec.signature, constraints }
    }
}
