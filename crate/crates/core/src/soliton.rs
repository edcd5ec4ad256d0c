//! Deciding `Wan = c·Id + D` with `D` a derivation.
//!
//! Fixing the operator forces `D = Wan - c·Id`, so the only unknown is `c`.
//! The derivation condition on `D` then reads `Res(Wan) + c·[e_i, e_j] = 0`
//! for each pair `i < j`: nine equations, each affine in `c`. At a rational
//! point their coefficients are rational, so any real solution is rational
//! and the decision is exact over ℚ.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::exactalg::{Polynomial, Rational, VarId};
use crate::geometry::{Components, Operator3, Pipeline};
use crate::liealg::{bracket, basis_vec, sample_variety, Constraint, LieAlgebraSpec, PAIRS, Vec3};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolitonKind {
    /// Uses `Wan`.
    First,
    /// Uses the form-symmetrized `W̃an`.
    Second,
}

impl SolitonKind {
    pub const BOTH: [SolitonKind; 2] = [SolitonKind::First, SolitonKind::Second];

    pub fn name(self) -> &'static str {
        match self {
            SolitonKind::First => "first",
            SolitonKind::Second => "second",
        }
    }

    pub fn operator(self, pipe: &Pipeline) -> &Operator3 {
        match self {
            SolitonKind::First => &pipe.wan,
            SolitonKind::Second => &pipe.wan_tilde,
        }
    }
}

impl fmt::Display for SolitonKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `res[p]` is `D[e_i,e_j] - [De_i,e_j] - [e_i,De_j]` for the `p`-th pair of [`PAIRS`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationResidual {
    pub res: [Vec3; 3],
}

impl DerivationResidual {
    pub fn is_zero(&self) -> bool {
        self.res.iter().flatten().all(Polynomial::is_zero)
    }

    /// `(pair label, coordinate, value)` in a fixed order.
    pub fn components(&self) -> impl Iterator<Item = (String, usize, &Polynomial)> {
        PAIRS.iter().zip(&self.res).flat_map(|(&(i, j), v)| {
            v.iter().enumerate().map(move |(k, p)| (format!("{}{}", i + 1, j + 1), k, p))
        })
    }
}

pub fn derivation_residual(d: &Operator3, spec: &LieAlgebraSpec) -> DerivationResidual {
    DerivationResidual {
        res: PAIRS.map(|(i, j)| {
            let (ei, ej) = (basis_vec(i), basis_vec(j));
            let lhs = d.apply(&bracket(spec, &ei, &ej));
            let r1 = bracket(spec, &d.apply(&ei), &ej);
            let r2 = bracket(spec, &ei, &d.apply(&ej));
            std::array::from_fn(|k| &(&lhs[k] - &r1[k]) - &r2[k])
        }),
    }
}

/// `coef·c + constant = 0` at one residual slot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AffineEquation {
    pub pair: String,
    pub coordinate: usize,
    pub coef: Rational,
    pub constant: Rational,
}

impl AffineEquation {
    pub fn as_polynomial(&self) -> Polynomial {
        &Polynomial::var(VarId::C).scale(&self.coef) + &Polynomial::constant(self.constant.clone())
    }
}

impl fmt::Display for AffineEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = 0  (pair {}, e{})", self.as_polynomial(), self.pair, self.coordinate + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolitonVerdict {
    /// The equations in `witness` have no common solution `c`.
    NoSoliton { witness: Vec<AffineEquation> },
    Soliton { c: Rational, d: [[Rational; 3]; 3] },
    /// Every `c` works, with `D(c) = wan - c·Id`.
    SolitonAnyC { wan: [[Rational; 3]; 3] },
}

impl SolitonVerdict {
    pub fn outcome(&self) -> &'static str {
        match self {
            SolitonVerdict::NoSoliton { .. } => "no_soliton",
            SolitonVerdict::Soliton { .. } => "soliton",
            SolitonVerdict::SolitonAnyC { .. } => "soliton_any_c",
        }
    }

    /// Same outcome, `c` and `D`; witnesses are not compared.
    pub fn agrees_with(&self, other: &SolitonVerdict) -> bool {
        match (self, other) {
            (SolitonVerdict::NoSoliton { .. }, SolitonVerdict::NoSoliton { .. }) => true,
            (SolitonVerdict::Soliton { c: c1, d: d1 }, SolitonVerdict::Soliton { c: c2, d: d2 }) => {
                c1 == c2 && d1 == d2
            }
            (SolitonVerdict::SolitonAnyC { wan: w1 }, SolitonVerdict::SolitonAnyC { wan: w2 }) => w1 == w2,
            _ => false,
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            SolitonVerdict::NoSoliton { witness } => {
                let mut s = String::from("no soliton: the equations\n");
                for w in witness {
                    s.push_str(&format!("  {w}\n"));
                }
                s.push_str("have no common solution c\n");
                s
            }
            SolitonVerdict::Soliton { c, d } => {
                format!("soliton with c = {c}\nD =\n{}", render_rational_matrix(d))
            }
            SolitonVerdict::SolitonAnyC { wan } => format!(
                "soliton for every c, with D(c) = Wan - c*Id where Wan =\n{}",
                render_rational_matrix(wan)
            ),
        }
    }
}

fn matrix_strings(m: &[[Rational; 3]; 3]) -> Vec<Vec<String>> {
    m.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
}

fn render_rational_matrix(m: &[[Rational; 3]; 3]) -> String {
    let cells = matrix_strings(m);
    let w = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    cells
        .iter()
        .map(|r| format!("[ {} ]\n", r.iter().map(|c| format!("{c:>w$}")).collect::<Vec<_>>().join("  ")))
        .collect()
}

impl Serialize for SolitonVerdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            outcome: &'a str,
            c: Option<String>,
            #[serde(rename = "D")]
            d: Option<Vec<Vec<String>>>,
            #[serde(skip_serializing_if = "Option::is_none")]
            wan: Option<Vec<Vec<String>>>,
            witness: Vec<String>,
        }
        let repr = match self {
            SolitonVerdict::NoSoliton { witness } => Repr {
                outcome: self.outcome(),
                c: None,
                d: None,
                wan: None,
                witness: witness.iter().map(|w| format!("{} = 0", w.as_polynomial())).collect(),
            },
            SolitonVerdict::Soliton { c, d } => Repr {
                outcome: self.outcome(),
                c: Some(c.to_string()),
                d: Some(matrix_strings(d)),
                wan: None,
                witness: Vec::new(),
            },
            SolitonVerdict::SolitonAnyC { wan } => {
                let d: Vec<Vec<String>> = (0..3)
                    .map(|i| {
                        (0..3)
                            .map(|j| {
                                let mut p = Polynomial::constant(wan[i][j].clone());
                                if i == j {
                                    p = &p - &Polynomial::var(VarId::C);
                                }
                                p.to_string()
                            })
                            .collect()
                    })
                    .collect();
                Repr { outcome: self.outcome(), c: None, d: Some(d), wan: Some(matrix_strings(wan)), witness: Vec::new() }
            }
        };
        repr.serialize(serializer)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolitonError {
    #[error("the algebra still has symbolic structure constants")]
    NotNumeric,
    #[error("the operator has non-constant entries")]
    OperatorNotNumeric,
}

/// The nine residuals of `D = wan - c·Id`, affine in `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualSystem {
    pub equations: Vec<Polynomial>,
}

impl ResidualSystem {
    pub fn is_affine_in_c(&self) -> bool {
        self.equations.iter().all(|p| p.degree_in(VarId::C) <= 1)
    }

    pub fn is_identically_zero(&self) -> bool {
        self.equations.iter().all(Polynomial::is_zero)
    }
}

pub fn residual_system(spec: &LieAlgebraSpec, wan: &Operator3) -> ResidualSystem {
    let d = wan.sub(&Operator3::identity().scale(&Polynomial::var(VarId::C)));
    let res = derivation_residual(&d, spec);
    ResidualSystem { equations: res.res.iter().flatten().cloned().collect() }
}

/// Decides solitonhood for a numeric algebra from the selected operator.
pub fn soliton_decide(spec: &LieAlgebraSpec, kind: SolitonKind, pipe: &Pipeline) -> Result<SolitonVerdict, SolitonError> {
    decide_operator(spec, kind.operator(pipe))
}

pub fn decide_operator(spec: &LieAlgebraSpec, wan: &Operator3) -> Result<SolitonVerdict, SolitonError> {
    if !spec.is_numeric() {
        return Err(SolitonError::NotNumeric);
    }
    let wan_q = wan.as_rational().ok_or(SolitonError::OperatorNotNumeric)?;
    let d = wan.sub(&Operator3::identity().scale(&Polynomial::var(VarId::C)));
    let res = derivation_residual(&d, spec);
    let equations: Vec<AffineEquation> = res
        .components()
        .map(|(pair, coordinate, p)| AffineEquation {
            pair,
            coordinate,
            coef: p.coefficient_of(VarId::C, 1).as_constant().expect("numeric"),
            constant: p.coefficient_of(VarId::C, 0).as_constant().expect("numeric"),
        })
        .collect();

    if let Some(bad) = equations.iter().find(|e| e.coef.is_zero() && !e.constant.is_zero()) {
        return Ok(SolitonVerdict::NoSoliton { witness: vec![bad.clone()] });
    }
    let Some(pivot) = equations.iter().find(|e| !e.coef.is_zero()) else {
        return Ok(SolitonVerdict::SolitonAnyC { wan: wan_q });
    };
    let c = -(&pivot.constant / &pivot.coef);
    if let Some(bad) = equations.iter().find(|e| !(&(&e.coef * &c) + &e.constant).is_zero()) {
        return Ok(SolitonVerdict::NoSoliton { witness: vec![pivot.clone(), bad.clone()] });
    }
    let d: [[Rational; 3]; 3] =
        std::array::from_fn(|i| std::array::from_fn(|j| if i == j { &wan_q[i][j] - &c } else { wan_q[i][j].clone() }));
    Ok(SolitonVerdict::Soliton { c, d })
}

/// Parameter family of a theorem case: explicit substitutions plus further
/// equations and non-vanishing conditions.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Family {
    pub substitutions: BTreeMap<VarId, Polynomial>,
    pub constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailingIdentity {
    pub identity: String,
    pub residual: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckMethod {
    /// Identities hold as polynomials after substitution.
    Exact,
    /// Needed reduction by the remaining binomial relations or η² = 1.
    Reduced,
    /// Held at every sampled point of the family.
    Sampled { points: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchCheck {
    pub substitutions: BTreeMap<String, Polynomial>,
    pub relations: Vec<Polynomial>,
    /// The family's conditions cannot hold together (some non-vanishing
    /// condition becomes `0 != 0`); the identities are still checked.
    pub vacuous: bool,
    pub method: Option<CheckMethod>,
    pub failures: Vec<FailingIdentity>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimCheck {
    pub passed: bool,
    pub vacuous: bool,
    pub branches: Vec<BranchCheck>,
}

#[derive(Debug, Clone)]
struct Branch {
    subs: BTreeMap<VarId, Polynomial>,
    equations: Vec<Polynomial>,
    nonzero: Vec<Polynomial>,
}

impl Branch {
    fn bind(&mut self, v: VarId, image: Polynomial) {
        let one: BTreeMap<VarId, Polynomial> = [(v, image.clone())].into();
        for p in self.subs.values_mut() {
            *p = p.substitute(&one);
        }
        self.subs.insert(v, image);
        for p in self.equations.iter_mut().chain(self.nonzero.iter_mut()) {
            *p = p.substitute(&one);
        }
    }
}

/// `a·v + rest` with `a` a nonzero constant and `v` absent from `rest`.
fn linear_solve(p: &Polynomial) -> Option<(VarId, Polynomial)> {
    p.variables().into_iter().filter(|&v| v != VarId::Eta && v != VarId::C).find_map(|v| {
        if p.degree_in(v) != 1 {
            return None;
        }
        let a = p.coefficient_of(v, 1).as_constant()?;
        let rest = p.coefficient_of(v, 0);
        Some((v, rest.scale(&(-a.recip().ok()?))))
    })
}

/// `u² - v²` with single-variable `u`, `v` (up to an overall constant).
fn difference_of_squares(p: &Polynomial) -> Option<(VarId, VarId)> {
    if p.len() != 2 {
        return None;
    }
    let terms: Vec<_> = p.terms().collect();
    if (terms[0].1 + terms[1].1).is_zero() {
        let square_of = |m: &crate::exactalg::Monomial| {
            let vars: Vec<(VarId, u16)> = m.vars().collect();
            (vars.len() == 1 && vars[0].1 == 2).then(|| vars[0].0)
        };
        let u = square_of(terms[0].0)?;
        let v = square_of(terms[1].0)?;
        return Some((u.min(v), u.max(v)));
    }
    None
}

fn resolve_branches(start: Branch) -> Vec<Branch> {
    let mut done = Vec::new();
    let mut todo = vec![start];
    while let Some(mut b) = todo.pop() {
        b.equations.retain(|p| !p.is_zero());
        let mut progressed = false;
        for idx in 0..b.equations.len() {
            let eq = b.equations[idx].clone();
            if let Some((v, image)) = linear_solve(&eq) {
                b.equations.remove(idx);
                b.bind(v, image);
                todo.push(b.clone());
                progressed = true;
                break;
            }
            if let Some((u, v)) = difference_of_squares(&eq) {
                b.equations.remove(idx);
                for sign in [1, -1] {
                    let mut nb = b.clone();
                    nb.bind(u, Polynomial::var(v).scale(&Rational::from_int(sign)));
                    todo.push(nb);
                }
                progressed = true;
                break;
            }
        }
        if !progressed {
            done.push(b);
        }
    }
    done.sort_by_key(|b| format!("{:?}", b.subs));
    done
}

fn reduce_fully(p: &Polynomial, relations: &[Polynomial]) -> Polynomial {
    let mut out = p.clone();
    if out.degree_in(VarId::Eta) >= 2 {
        let eta_rel = &Polynomial::var(VarId::Eta).pow(2) - &Polynomial::one();
        out = out.reduce(&eta_rel, VarId::Eta).expect("binomial");
    }
    for rel in relations {
        for v in rel.variables() {
            if let Ok(q) = out.reduce(rel, v) {
                out = q;
                break;
            }
        }
    }
    out
}

/// Checks `Wan = c·Id + d` and that `d` is a derivation, over every point of
/// the family. Equations that are linear with a constant coefficient become
/// substitutions, `u² = v²` splits into `u = ±v`, and whatever remains is
/// used for binomial reduction; identities that still do not vanish are
/// evaluated at sampled points of the family.
pub fn check_claimed_solution(
    spec: &LieAlgebraSpec,
    kind: SolitonKind,
    family: &Family,
    c: &Polynomial,
    d: &Operator3,
    ladder: &[Rational],
) -> ClaimCheck {
    let mut start = Branch { subs: BTreeMap::new(), equations: Vec::new(), nonzero: Vec::new() };
    for (v, p) in &family.substitutions {
        start.bind(*v, p.clone());
    }
    for con in family.constraints.iter().chain(&spec.constraints) {
        let p = con.polynomial().substitute(&start.subs);
        match con {
            Constraint::Equation(_) => start.equations.push(p),
            Constraint::NonVanishing(_) => start.nonzero.push(p),
        }
    }

    let branches: Vec<BranchCheck> = resolve_branches(start)
        .into_iter()
        .map(|b| check_branch(spec, kind, &b, c, d, ladder))
        .collect();
    let vacuous = branches.iter().all(|b| b.vacuous);
    let passed = branches.iter().all(|b| b.failures.is_empty());
    ClaimCheck { passed, vacuous, branches }
}

fn check_branch(
    spec: &LieAlgebraSpec,
    kind: SolitonKind,
    b: &Branch,
    c: &Polynomial,
    d: &Operator3,
    ladder: &[Rational],
) -> BranchCheck {
    let sub_spec = {
        let mut s = spec.map_constants(|p| p.substitute(&b.subs));
        s.constraints = b
            .equations
            .iter()
            .map(|p| Constraint::Equation(p.clone()))
            .chain(b.nonzero.iter().map(|p| Constraint::NonVanishing(p.clone())))
            .collect();
        s
    };
    let c = c.substitute(&b.subs);
    let d = d.map(&|p| p.substitute(&b.subs));
    let pipe = Pipeline::canonical(&sub_spec);
    let wan = kind.operator(&pipe);

    let mut identities: Vec<(String, Polynomial)> = Vec::new();
    let expected = d.add(&Operator3::identity().scale(&c));
    for i in 0..3 {
        for j in 0..3 {
            identities.push((format!("Wan[{}][{}] = c*Id + D", i + 1, j + 1), &wan.m[i][j] - &expected.m[i][j]));
        }
    }
    for (pair, k, p) in derivation_residual(&d, &sub_spec).components() {
        identities.push((format!("derivation residual pair {pair}, e{}", k + 1), p.clone()));
    }

    let vacuous = b.nonzero.iter().any(Polynomial::is_zero);
    let exact = identities.iter().all(|(_, p)| p.is_zero());
    let reduced: Vec<(String, Polynomial)> =
        identities.iter().map(|(n, p)| (n.clone(), reduce_fully(p, &b.equations))).collect();

    let (method, failures) = if exact {
        (Some(CheckMethod::Exact), Vec::new())
    } else if reduced.iter().all(|(_, p)| p.is_zero()) {
        (Some(CheckMethod::Reduced), Vec::new())
    } else if vacuous {
        (None, failures_of(&reduced))
    } else {
        let points = sample_variety(&sub_spec, ladder, 500);
        let failing: Vec<FailingIdentity> = reduced
            .iter()
            .filter(|(_, p)| {
                points.iter().any(|pt| !matches!(p.eval(pt.values()), Ok(v) if v.is_zero()))
            })
            .map(|(n, p)| FailingIdentity { identity: n.clone(), residual: p.clone() })
            .collect();
        if points.is_empty() {
            (None, failures_of(&reduced))
        } else if failing.is_empty() {
            (Some(CheckMethod::Sampled { points: points.len() }), failing)
        } else {
            (None, failing)
        }
    };

    BranchCheck {
        substitutions: b.subs.iter().map(|(v, p)| (v.name().to_string(), p.clone())).collect(),
        relations: b.equations.clone(),
        vacuous,
        method,
        failures,
    }
}

fn failures_of(identities: &[(String, Polynomial)]) -> Vec<FailingIdentity> {
    identities
        .iter()
        .filter(|(_, p)| !p.is_zero())
        .map(|(n, p)| FailingIdentity { identity: n.clone(), residual: p.clone() })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{evaluate_spec, MetricSignature, ParameterAssignment, StructureConstants};

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn spec(b: [[&str; 3]; 3], constraints: Vec<Constraint>) -> LieAlgebraSpec {
        let [b12, b13, b23] = b.map(|r| r.map(p));
        LieAlgebraSpec::new(StructureConstants::from_brackets(b12, b13, b23), MetricSignature::LORENTZIAN, constraints)
            .unwrap()
    }

    fn g1() -> LieAlgebraSpec {
        spec([["alpha", "0", "-beta"], ["-alpha", "-beta", "0"], ["beta", "alpha", "alpha"]], vec![])
    }

    fn g2() -> LieAlgebraSpec {
        spec(
            [["0", "gamma", "-beta"], ["0", "-beta", "-gamma"], ["alpha", "0", "0"]],
            vec![Constraint::NonVanishing(p("gamma"))],
        )
    }

    fn ladder() -> Vec<Rational> {
        [-2, -1, 0, 1, 2].map(q).to_vec()
    }

    fn at(s: &LieAlgebraSpec, a: &str) -> LieAlgebraSpec {
        evaluate_spec(s, &ParameterAssignment::parse(a).unwrap()).unwrap()
    }

    #[test]
    fn residual_examples() {
        let abelian = LieAlgebraSpec::abelian();
        assert!(derivation_residual(&Operator3::diag([p("alpha"), p("1"), p("2")]), &abelian).is_zero());
        let g2n = at(&g2(), "alpha=0,beta=0,gamma=1");
        assert!(derivation_residual(&Operator3::diag([p("0"), p("1"), p("2")]), &g2n).is_zero());
        let r = derivation_residual(&Operator3::diag([p("1"), p("0"), p("0")]), &g2n);
        assert_eq!(r.res[0], [p("0"), p("-1"), p("0")]);
    }

    #[test]
    fn decide_examples() {
        let g2n = at(&g2(), "alpha=0,beta=0,gamma=1");
        let v = soliton_decide(&g2n, SolitonKind::First, &Pipeline::canonical(&g2n)).unwrap();
        assert_eq!(v, SolitonVerdict::Soliton { c: q(-2), d: [[q(0), q(0), q(0)], [q(0), q(1), q(0)], [q(0), q(0), q(2)]] });

        let g1n = at(&g1(), "alpha=1,beta=1");
        let v = soliton_decide(&g1n, SolitonKind::First, &Pipeline::canonical(&g1n)).unwrap();
        assert!(matches!(v, SolitonVerdict::NoSoliton { ref witness } if !witness.is_empty()));

        let ab = LieAlgebraSpec::abelian();
        let v = soliton_decide(&ab, SolitonKind::First, &Pipeline::canonical(&ab)).unwrap();
        assert!(matches!(v, SolitonVerdict::SolitonAnyC { .. }));
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["D"][0][0], "-c");
    }

    #[test]
    fn decide_rejects_symbolic() {
        assert_eq!(soliton_decide(&g1(), SolitonKind::First, &Pipeline::canonical(&g1())), Err(SolitonError::NotNumeric));
    }

    #[test]
    fn residual_system_is_affine() {
        let pipe = Pipeline::canonical(&g2());
        let sys = residual_system(&g2(), &pipe.wan);
        assert_eq!(sys.equations.len(), 9);
        assert!(sys.is_affine_in_c());
        let ab = LieAlgebraSpec::abelian();
        assert!(residual_system(&ab, &Pipeline::canonical(&ab).wan).is_identically_zero());
    }

    #[test]
    fn claimed_solution_g2() {
        let fam = Family {
            substitutions: [(VarId::Alpha, p("0")), (VarId::Beta, p("0"))].into(),
            constraints: vec![],
        };
        let good = Operator3::diag([p("0"), p("gamma^2"), p("2*gamma^2")]);
        let chk = check_claimed_solution(&g2(), SolitonKind::First, &fam, &p("-2*gamma^2"), &good, &ladder());
        assert!(chk.passed, "{chk:?}");
        let bad = Operator3::diag([p("0"), p("gamma"), p("2*gamma")]);
        let chk = check_claimed_solution(&g2(), SolitonKind::First, &fam, &p("-2*gamma^2"), &bad, &ladder());
        assert!(!chk.passed);
    }

    #[test]
    fn difference_of_squares_splits() {
        let fam = Family {
            substitutions: BTreeMap::new(),
            constraints: vec![Constraint::Equation(p("alpha^2 - beta^2"))],
        };
        let mut start = Branch { subs: BTreeMap::new(), equations: vec![], nonzero: vec![] };
        for c in &fam.constraints {
            start.equations.push(c.polynomial().clone());
        }
        let branches = resolve_branches(start);
        assert_eq!(branches.len(), 2);
        let images: Vec<String> = branches.iter().map(|b| b.subs[&VarId::Alpha].to_string()).collect();
        assert!(images.contains(&"beta".to_string()) && images.contains(&"-beta".to_string()));
    }

    #[test]
    fn difference_of_squares_needs_two_squares() {
        assert_eq!(difference_of_squares(&p("eta^2 - 1")), None);
        assert_eq!(difference_of_squares(&p("alpha*beta - gamma^2")), None);
        assert_eq!(difference_of_squares(&p("beta^2 - alpha^2")), Some((VarId::Alpha, VarId::Beta)));
    }
}
