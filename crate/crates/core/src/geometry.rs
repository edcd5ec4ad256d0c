//! Left-invariant tensor calculus on a 3-dimensional metric Lie algebra.
//!
//! Every tensor is a constant table over the fixed basis. Matrix convention
//! for [`Operator3`]: row `i` holds the coordinates of the image of `e_i`,
//! i.e. `D(e_i) = Σ_j m[i][j] e_j`. This is the transpose of the usual
//! column convention and matches how the operators are displayed.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::exactalg::{ExactError, Polynomial, Rational, VarId};
use crate::liealg::{zero_vec, LieAlgebraSpec, MetricSignature, StructureConstants, Vec3};

/// `t[i][j]` is a vector; used for connections, torsion and `∇J`.
pub type Table3 = [[Vec3; 3]; 3];
/// `t[i][j][k]` is a vector; used for curvature-like (X, Y, Z) ↦ vector tensors.
pub type Table4 = [[[Vec3; 3]; 3]; 3];

fn arr3<T>(f: impl FnMut(usize) -> T) -> [T; 3] {
    std::array::from_fn(f)
}

fn zero_table3() -> Table3 {
    arr3(|_| arr3(|_| zero_vec()))
}

fn half() -> Rational {
    Rational::new(1, 2)
}

/// Access to every scalar entry of a component table, for comparison,
/// evaluation and reduction without caring about its shape.
pub trait Components: Sized {
    /// `(index tuple, entry)` in lexicographic index order; indices are 0-based.
    fn entries(&self) -> Vec<(Vec<usize>, &Polynomial)>;
    fn map(&self, f: &dyn Fn(&Polynomial) -> Polynomial) -> Self;

    fn is_zero(&self) -> bool {
        self.entries().iter().all(|(_, p)| p.is_zero())
    }

    fn substitute_values(&self, values: &BTreeMap<VarId, Rational>) -> Self {
        self.map(&|p| p.substitute_values(values))
    }

    fn reduce(&self, relation: &Polynomial, leading: VarId) -> Result<Self, ExactError> {
        let mut err = None;
        let cell = std::cell::RefCell::new(&mut err);
        let out = self.map(&|p| match p.reduce(relation, leading) {
            Ok(q) => q,
            Err(e) => {
                **cell.borrow_mut() = Some(e);
                Polynomial::zero()
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(out),
        }
    }
}

macro_rules! table_newtype {
    ($(#[$meta:meta])* $name:ident, $field:ident, $ty:ty, $depth:tt) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq)]
        pub struct $name {
            pub $field: $ty,
        }

        impl Components for $name {
            fn entries(&self) -> Vec<(Vec<usize>, &Polynomial)> {
                table_newtype!(@entries self.$field, $depth)
            }
            fn map(&self, f: &dyn Fn(&Polynomial) -> Polynomial) -> Self {
                $name { $field: table_newtype!(@map self.$field, f, $depth) }
            }
        }
    };
    (@entries $t:expr, 3) => {{
        let mut out = Vec::with_capacity(27);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    out.push((vec![i, j, k], &$t[i][j][k]));
                }
            }
        }
        out
    }};
    (@entries $t:expr, 4) => {{
        let mut out = Vec::with_capacity(81);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        out.push((vec![i, j, k, l], &$t[i][j][k][l]));
                    }
                }
            }
        }
        out
    }};
    (@entries $t:expr, 2) => {{
        let mut out = Vec::with_capacity(9);
        for i in 0..3 {
            for j in 0..3 {
                out.push((vec![i, j], &$t[i][j]));
            }
        }
        out
    }};
    (@map $t:expr, $f:ident, 2) => {
        arr3(|i| arr3(|j| $f(&$t[i][j])))
    };
    (@map $t:expr, $f:ident, 3) => {
        arr3(|i| arr3(|j| arr3(|k| $f(&$t[i][j][k]))))
    };
    (@map $t:expr, $f:ident, 4) => {
        arr3(|i| arr3(|j| arr3(|k| arr3(|l| $f(&$t[i][j][k][l])))))
    };
}

table_newtype!(
    /// `∇_{e_i} e_j = Σ_k gamma[i][j][k] e_k`.
    ConnectionCoeffs, gamma, Table3, 3
);
table_newtype!(
    /// `T(e_i, e_j) = Σ_k t[i][j][k] e_k`.
    TorsionComponents, t, Table3, 3
);
table_newtype!(
    /// `R(e_i, e_j) e_k = Σ_l r[i][j][k][l] e_l`.
    CurvatureComponents, r, Table4, 4
);
table_newtype!(
    /// Generic `(X, Y, Z) ↦ vector` tensor, `K(e_i, e_j) e_k = Σ_l k[i][j][k][l] e_l`.
    TrilinearComponents, k, Table4, 4
);
table_newtype!(
    /// `s[i][k] = form(e_i, e_k)`.
    BilinearForm, s, [[Polynomial; 3]; 3], 2
);
table_newtype!(
    /// Row `i` is the image of `e_i`.
    Operator3, m, [[Polynomial; 3]; 3], 2
);

impl Operator3 {
    pub fn zero() -> Self {
        Operator3 { m: arr3(|_| arr3(|_| Polynomial::zero())) }
    }

    pub fn identity() -> Self {
        Operator3::diag([Polynomial::one(), Polynomial::one(), Polynomial::one()])
    }

    pub fn diag(d: [Polynomial; 3]) -> Self {
        let mut out = Operator3::zero();
        for (i, p) in d.into_iter().enumerate() {
            out.m[i][i] = p;
        }
        out
    }

    pub fn from_rows(m: [[Polynomial; 3]; 3]) -> Self {
        Operator3 { m }
    }

    /// Image of `v = Σ v_i e_i`.
    pub fn apply(&self, v: &Vec3) -> Vec3 {
        let mut out = zero_vec();
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate() {
                *slot = &*slot + &(vi * &self.m[i][j]);
            }
        }
        out
    }

    pub fn sub(&self, other: &Operator3) -> Operator3 {
        Operator3 { m: arr3(|i| arr3(|j| &self.m[i][j] - &other.m[i][j])) }
    }

    pub fn add(&self, other: &Operator3) -> Operator3 {
        Operator3 { m: arr3(|i| arr3(|j| &self.m[i][j] + &other.m[i][j])) }
    }

    pub fn scale(&self, c: &Polynomial) -> Operator3 {
        Operator3 { m: arr3(|i| arr3(|j| &self.m[i][j] * c)) }
    }

    /// Constant entries, if every entry is a constant polynomial.
    pub fn as_rational(&self) -> Option<[[Rational; 3]; 3]> {
        let mut out: [[Rational; 3]; 3] = Default::default();
        for i in 0..3 {
            for j in 0..3 {
                out[i][j] = self.m[i][j].as_constant()?;
            }
        }
        Some(out)
    }
}

/// Metric-compatible `J` with `J² = Id`, stored in the row convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductStructure {
    pub j: Operator3,
}

impl ProductStructure {
    /// `J e1 = e1, J e2 = e2, J e3 = -e3`.
    pub fn standard() -> Self {
        ProductStructure { j: Operator3::diag([Polynomial::one(), Polynomial::one(), Polynomial::int(-1)]) }
    }

    /// Accepts `j` only if `J² = Id` and `g(Je_i, Je_k) = g(e_i, e_k)`.
    pub fn new(j: Operator3, sig: MetricSignature) -> Option<Self> {
        for i in 0..3 {
            let ji = j.apply(&basis(i));
            let jji = j.apply(&ji);
            if jji != basis(i) {
                return None;
            }
            for k in 0..3 {
                let jk = j.apply(&basis(k));
                let g: Polynomial = (0..3)
                    .map(|l| (&ji[l] * &jk[l]).scale(&sig.eps_rational(l)))
                    .sum();
                let expected = if i == k { Polynomial::int(sig.eps(i)) } else { Polynomial::zero() };
                if g != expected {
                    return None;
                }
            }
        }
        Some(ProductStructure { j })
    }
}

fn basis(i: usize) -> Vec3 {
    crate::liealg::basis_vec(i)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConnectionKind {
    Canonical,
    LeviCivita,
}

/// Koszul formula for a left-invariant metric with diagonal signature:
/// `Γ[i][j][k] = ½(c[i][j][k] - ε_i ε_k c[j][k][i] + ε_j ε_k c[k][i][j])`.
pub fn levi_civita(spec: &LieAlgebraSpec) -> ConnectionCoeffs {
    let c = &spec.constants;
    let sig = spec.signature;
    ConnectionCoeffs {
        gamma: arr3(|i| {
            arr3(|j| {
                arr3(|k| {
                    let a = c.get(i, j, k).clone();
                    let b = c.get(j, k, i).scale(&Rational::from_int(sig.eps(i) * sig.eps(k)));
                    let d = c.get(k, i, j).scale(&Rational::from_int(sig.eps(j) * sig.eps(k)));
                    (&(&a - &b) + &d).scale(&half())
                })
            })
        }),
    }
}

/// `(∇_{e_i} J) e_j = ∇_{e_i}(J e_j) - J(∇_{e_i} e_j)`, as `out[i][j][k]`.
pub fn nabla_j(conn: &ConnectionCoeffs, j: &ProductStructure) -> Table3 {
    let g = &conn.gamma;
    let jm = &j.j.m;
    let mut out = zero_table3();
    for i in 0..3 {
        for a in 0..3 {
            for k in 0..3 {
                let mut acc = Polynomial::zero();
                for l in 0..3 {
                    if !jm[a][l].is_zero() {
                        acc = &acc + &(&jm[a][l] * &g[i][l][k]);
                    }
                    if !jm[l][k].is_zero() {
                        acc = &acc - &(&g[i][a][l] * &jm[l][k]);
                    }
                }
                out[i][a][k] = acc;
            }
        }
    }
    out
}

/// `∇⁰_X Y = ∇_X Y - ½ (∇_X J) J Y` starting from `base`.
pub fn canonical_from(base: &ConnectionCoeffs, j: &ProductStructure) -> ConnectionCoeffs {
    let nj = nabla_j(base, j);
    let jm = &j.j.m;
    ConnectionCoeffs {
        gamma: arr3(|i| {
            arr3(|a| {
                arr3(|k| {
                    let mut corr = Polynomial::zero();
                    for l in 0..3 {
                        if !jm[a][l].is_zero() {
                            corr = &corr + &(&jm[a][l] * &nj[i][l][k]);
                        }
                    }
                    &base.gamma[i][a][k] - &corr.scale(&half())
                })
            })
        }),
    }
}

pub fn canonical_connection(spec: &LieAlgebraSpec, j: &ProductStructure) -> ConnectionCoeffs {
    canonical_from(&levi_civita(spec), j)
}

/// `T[i][j][k] = Γ[i][j][k] - Γ[j][i][k] - c[i][j][k]`.
pub fn torsion(conn: &ConnectionCoeffs, spec: &LieAlgebraSpec) -> TorsionComponents {
    let g = &conn.gamma;
    TorsionComponents {
        t: arr3(|i| arr3(|j| arr3(|k| &(&g[i][j][k] - &g[j][i][k]) - spec.constants.get(i, j, k)))),
    }
}

/// `R(X,Y)Z = ∇_X ∇_Y Z - ∇_Y ∇_X Z - ∇_{[X,Y]} Z` on basis vectors.
pub fn curvature(conn: &ConnectionCoeffs, spec: &LieAlgebraSpec) -> CurvatureComponents {
    let g = &conn.gamma;
    let c: &StructureConstants = &spec.constants;
    CurvatureComponents {
        r: arr3(|i| {
            arr3(|j| {
                arr3(|k| {
                    arr3(|l| {
                        let mut acc = Polynomial::zero();
                        for m in 0..3 {
                            acc = &acc + &(&g[j][k][m] * &g[i][m][l]);
                            acc = &acc - &(&g[i][k][m] * &g[j][m][l]);
                            acc = &acc - &(c.get(i, j, m) * &g[m][k][l]);
                        }
                        acc
                    })
                })
            })
        }),
    }
}

/// `A(X,Y)Z = T(T(X,Y), Z)`.
pub fn a_tensor(t: &TorsionComponents) -> TrilinearComponents {
    let t = &t.t;
    TrilinearComponents {
        k: arr3(|i| {
            arr3(|j| {
                arr3(|k| {
                    arr3(|l| {
                        (0..3)
                            .filter(|&m| !t[i][j][m].is_zero())
                            .map(|m| &t[i][j][m] * &t[m][k][l])
                            .sum()
                    })
                })
            })
        }),
    }
}

/// `W = R - A`.
pub fn wanas_tensor(r: &CurvatureComponents, a: &TrilinearComponents) -> TrilinearComponents {
    TrilinearComponents { k: arr3(|i| arr3(|j| arr3(|k| arr3(|l| &r.r[i][j][k][l] - &a.k[i][j][k][l])))) }
}

impl From<CurvatureComponents> for TrilinearComponents {
    fn from(r: CurvatureComponents) -> Self {
        TrilinearComponents { k: r.r }
    }
}

/// `s(X, Z) = Σ_j -ε_j g(K(X, e_j) Z, e_j)`, evaluated term by term with the
/// metric.
pub fn contract(k: &TrilinearComponents, sig: MetricSignature) -> BilinearForm {
    BilinearForm {
        s: arr3(|i| {
            arr3(|kk| {
                let mut acc = Polynomial::zero();
                for j in 0..3 {
                    let g_val = k.k[i][j][kk][j].scale(&sig.eps_rational(j));
                    acc = &acc + &g_val.scale(&(-sig.eps_rational(j)));
                }
                acc
            })
        }),
    }
}

/// `-Σ_j K[i][j][k][j]`, equal to [`contract`] for any diagonal ±1 signature.
pub fn contract_shortcut(k: &TrilinearComponents) -> BilinearForm {
    BilinearForm { s: arr3(|i| arr3(|kk| -(0..3).map(|j| k.k[i][j][kk][j].clone()).sum::<Polynomial>())) }
}

/// Raises the second index: `m[i][j] = s[i][j] ε_j`.
pub fn operator_from_form(s: &BilinearForm, sig: MetricSignature) -> Operator3 {
    Operator3 { m: arr3(|i| arr3(|j| s.s[i][j].scale(&sig.eps_rational(j)))) }
}

/// Lowers: `s[i][j] = m[i][j] ε_j`.
pub fn form_from_operator(m: &Operator3, sig: MetricSignature) -> BilinearForm {
    BilinearForm { s: arr3(|i| arr3(|j| m.m[i][j].scale(&sig.eps_rational(j)))) }
}

/// Symmetrizes the associated bilinear form, not the matrix.
pub fn symmetrize_operator(m: &Operator3, sig: MetricSignature) -> Operator3 {
    let s = form_from_operator(m, sig);
    let sym = BilinearForm { s: arr3(|i| arr3(|j| (&s.s[i][j] + &s.s[j][i]).scale(&half()))) };
    operator_from_form(&sym, sig)
}

/// `Wan = Ric - Ā`.
pub fn wan_operator(ric: &Operator3, abar: &Operator3) -> Operator3 {
    ric.sub(abar)
}

/// Everything computed from one bracket table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pipeline {
    pub connection: ConnectionCoeffs,
    pub torsion: TorsionComponents,
    pub curvature: CurvatureComponents,
    pub a_tensor: TrilinearComponents,
    pub wanas: TrilinearComponents,
    pub ric: Operator3,
    pub abar: Operator3,
    pub wan: Operator3,
    pub wan_tilde: Operator3,
}

impl Pipeline {
    pub fn compute(spec: &LieAlgebraSpec, j: &ProductStructure, kind: ConnectionKind) -> Pipeline {
        let sig = spec.signature;
        let connection = match kind {
            ConnectionKind::Canonical => canonical_connection(spec, j),
            ConnectionKind::LeviCivita => levi_civita(spec),
        };
        let torsion = torsion(&connection, spec);
        let curvature = curvature(&connection, spec);
        let a = a_tensor(&torsion);
        let wanas = wanas_tensor(&curvature, &a);
        let ric = operator_from_form(&contract(&curvature.clone().into(), sig), sig);
        let abar = operator_from_form(&contract(&a, sig), sig);
        let wan = wan_operator(&ric, &abar);
        let wan_tilde = symmetrize_operator(&wan, sig);
        Pipeline { connection, torsion, curvature, a_tensor: a, wanas, ric, abar, wan, wan_tilde }
    }

    pub fn canonical(spec: &LieAlgebraSpec) -> Pipeline {
        Pipeline::compute(spec, &ProductStructure::standard(), ConnectionKind::Canonical)
    }
}

/// `alpha*e1 - (beta + 1)*e3`; `0` for the zero vector.
pub fn render_vector(v: &Vec3) -> String {
    let mut out = String::new();
    for (k, p) in v.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let mut coef = p.clone();
        let negative = p.len() == 1 && p.terms().next().is_some_and(|(_, c)| c.is_negative());
        if negative {
            coef = -coef;
        }
        let body = if coef == Polynomial::one() {
            format!("e{}", k + 1)
        } else if coef.len() == 1 {
            format!("{coef}*e{}", k + 1)
        } else {
            format!("({coef})*e{}", k + 1)
        };
        match (out.is_empty(), negative) {
            (true, true) => out.push_str(&format!("-{body}")),
            (true, false) => out.push_str(&body),
            (false, true) => out.push_str(&format!(" - {body}")),
            (false, false) => out.push_str(&format!(" + {body}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn render_connection_text(conn: &ConnectionCoeffs) -> String {
    render_table3("nabla_e{i} e{j}", &conn.gamma)
}

pub fn render_torsion_text(t: &TorsionComponents) -> String {
    let mut out = String::new();
    for (i, j) in crate::liealg::PAIRS {
        writeln!(out, "T(e{}, e{}) = {}", i + 1, j + 1, render_vector(&t.t[i][j])).unwrap();
    }
    out
}

fn render_table3(pattern: &str, t: &Table3) -> String {
    let mut out = String::new();
    for i in 0..3 {
        for j in 0..3 {
            let label = pattern.replace("{i}", &(i + 1).to_string()).replace("{j}", &(j + 1).to_string());
            writeln!(out, "{label} = {}", render_vector(&t[i][j])).unwrap();
        }
    }
    out
}

/// Nonzero entries `K(e_i, e_j) e_k = ...` for `i < j`.
pub fn render_trilinear_text(name: &str, k: &TrilinearComponents) -> String {
    let mut out = String::new();
    for (i, j) in crate::liealg::PAIRS {
        for kk in 0..3 {
            writeln!(out, "{name}(e{}, e{}) e{} = {}", i + 1, j + 1, kk + 1, render_vector(&k.k[i][j][kk])).unwrap();
        }
    }
    out
}

/// Column-aligned rows.
pub fn render_matrix_text(m: &Operator3) -> String {
    let cells: Vec<Vec<String>> = m.m.iter().map(|row| row.iter().map(|p| p.to_string()).collect()).collect();
    let widths: Vec<usize> = (0..3).map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(1)).collect();
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        writeln!(out, "[ {} ]", line.join("  ")).unwrap();
    }
    out
}

pub fn matrix_json(m: &Operator3) -> serde_json::Value {
    serde_json::Value::Array(
        m.m.iter()
            .map(|row| serde_json::Value::Array(row.iter().map(|p| p.to_string().into()).collect()))
            .collect(),
    )
}

/// `{"e1": {"e1": [..3 coords..], ...}, ...}`.
pub fn table3_json(t: &Table3) -> serde_json::Value {
    let mut outer = serde_json::Map::new();
    for i in 0..3 {
        let mut inner = serde_json::Map::new();
        for j in 0..3 {
            inner.insert(
                format!("e{}", j + 1),
                serde_json::Value::Array(t[i][j].iter().map(|p| p.to_string().into()).collect()),
            );
        }
        outer.insert(format!("e{}", i + 1), inner.into());
    }
    outer.into()
}

pub fn table4_json(t: &Table4) -> serde_json::Value {
    serde_json::Value::Array(t.iter().map(table3_json).collect())
}
