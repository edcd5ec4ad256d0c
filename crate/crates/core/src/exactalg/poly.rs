use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{parse, ExactError, Rational};

/// The closed variable universe. Declaration order is the monomial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarId {
    Alpha,
    Beta,
    Gamma,
    Delta,
    Eta,
    C,
}

pub const NUM_VARS: usize = 6;

impl VarId {
    pub const ALL: [VarId; NUM_VARS] = [
        VarId::Alpha,
        VarId::Beta,
        VarId::Gamma,
        VarId::Delta,
        VarId::Eta,
        VarId::C,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            VarId::Alpha => "alpha",
            VarId::Beta => "beta",
            VarId::Gamma => "gamma",
            VarId::Delta => "delta",
            VarId::Eta => "eta",
            VarId::C => "c",
        }
    }

    /// Accepts the ASCII names and the Greek letters.
    pub fn from_name(s: &str) -> Option<VarId> {
        Some(match s {
            "alpha" | "α" => VarId::Alpha,
            "beta" | "β" => VarId::Beta,
            "gamma" | "γ" => VarId::Gamma,
            "delta" | "δ" => VarId::Delta,
            "eta" | "η" => VarId::Eta,
            "c" => VarId::C,
            _ => return None,
        })
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for VarId {
    type Err = ExactError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        VarId::from_name(s.trim()).ok_or_else(|| ExactError::UnknownSymbol(s.trim().to_string()))
    }
}

/// Exponent vector over [`VarId::ALL`]. Ordered graded-lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u16; NUM_VARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: VarId) -> Self {
        let mut m = Monomial::default();
        m.0[v.index()] = 1;
        m
    }

    pub fn exponent(&self, v: VarId) -> u16 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (o, e) in out.0.iter_mut().zip(other.0) {
            *o += e;
        }
        out
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0).all(|(&a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut out = *other;
        for (o, e) in out.0.iter_mut().zip(self.0) {
            *o -= e;
        }
        out
    }

    fn with_exponent(&self, v: VarId, e: u16) -> Monomial {
        let mut out = *self;
        out.0[v.index()] = e;
        out
    }

    pub fn vars(&self) -> impl Iterator<Item = (VarId, u16)> + '_ {
        VarId::ALL
            .iter()
            .map(|&v| (v, self.0[v.index()]))
            .filter(|&(_, e)| e > 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (v, e) in self.vars() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Sparse polynomial over ℚ in the fixed variable universe. Zero
/// coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Polynomial::constant(Rational::from_int(n))
    }

    pub fn var(v: VarId) -> Self {
        Polynomial::term(Rational::one(), Monomial::var(v))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, v: VarId) -> u16 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn variables(&self) -> BTreeSet<VarId> {
        self.terms
            .keys()
            .flat_map(|m| m.vars().map(|(v, _)| v).collect::<Vec<_>>())
            .collect()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant()
            .then(|| self.coefficient(&Monomial::one()))
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coefficient_of(&self, v: VarId, k: u16) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            if m.exponent(v) == k {
                out.add_term(m.with_exponent(v, 0), c.clone());
            }
        }
        out
    }

    /// Exact evaluation. Every variable occurring in `self` must be assigned.
    pub fn eval(&self, assignment: &BTreeMap<VarId, Rational>) -> Result<Rational, ExactError> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for (v, e) in m.vars() {
                let x = assignment.get(&v).ok_or(ExactError::MissingVariable(v))?;
                value = &value * &x.pow(e as u32);
            }
            total = &total + &value;
        }
        Ok(total)
    }

    /// Replaces each listed variable by its image; unlisted variables stay.
    pub fn substitute(&self, images: &BTreeMap<VarId, Polynomial>) -> Polynomial {
        if images.is_empty() {
            return self.clone();
        }
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut kept = Monomial::one();
            let mut product = Polynomial::constant(c.clone());
            for (v, e) in m.vars() {
                match images.get(&v) {
                    Some(img) => product = &product * &img.pow(e as u32),
                    None => kept = kept.mul(&Monomial::var(v).with_exponent(v, e)),
                }
            }
            for (pm, pc) in product.terms {
                out.add_term(pm.mul(&kept), pc);
            }
        }
        out
    }

    /// Substitutes exact values for the listed variables.
    pub fn substitute_values(&self, values: &BTreeMap<VarId, Rational>) -> Polynomial {
        let images = values
            .iter()
            .map(|(v, r)| (*v, Polynomial::constant(r.clone())))
            .collect();
        self.substitute(&images)
    }

    /// Reduces `self` modulo a monomial or binomial relation.
    ///
    /// The relation's leading term is the term in which `leading` has the
    /// highest exponent; every term of `self` divisible by it is rewritten
    /// using `relation = 0` until none remains. The other term (if any) must
    /// have a strictly lower exponent of `leading`, which guarantees
    /// termination.
    pub fn reduce(&self, relation: &Polynomial, leading: VarId) -> Result<Polynomial, ExactError> {
        let (lead_mono, lead_coef, tail) = relation.split_leading(leading)?;
        let mut current = self.clone();
        loop {
            let hit = current
                .terms
                .iter()
                .rev()
                .find(|(m, _)| lead_mono.divides(m))
                .map(|(m, c)| (*m, c.clone()));
            let Some((m, c)) = hit else {
                return Ok(current);
            };
            current.terms.remove(&m);
            let cofactor = lead_mono.quotient_of(&m);
            if let Some((tail_mono, tail_coef)) = &tail {
                // lead_coef*L + tail_coef*T = 0  =>  L = -(tail_coef/lead_coef) T
                let k = -(&(&c * tail_coef) / &lead_coef);
                current.add_term(tail_mono.mul(&cofactor), k);
            }
        }
    }

    fn split_leading(
        &self,
        leading: VarId,
    ) -> Result<(Monomial, Rational, Option<(Monomial, Rational)>), ExactError> {
        let unsupported = || ExactError::UnsupportedRelation(self.to_string());
        if self.terms.is_empty() || self.terms.len() > 2 {
            return Err(unsupported());
        }
        let mut entries: Vec<_> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        entries.sort_by(|a, b| {
            b.0.exponent(leading)
                .cmp(&a.0.exponent(leading))
                .then_with(|| b.0.cmp(&a.0))
        });
        let (lm, lc) = entries.remove(0);
        if lm.exponent(leading) == 0 {
            return Err(unsupported());
        }
        let tail = entries.pop();
        if let Some((tm, _)) = &tail {
            if tm.exponent(leading) >= lm.exponent(leading) {
                return Err(unsupported());
            }
        }
        Ok((lm, lc, tail))
    }

    /// Canonical textual form, highest monomial first.
    pub fn render(&self) -> String {
        self.to_string()
    }

    pub fn parse_with(
        s: &str,
        resolve: &dyn Fn(&str) -> Option<Polynomial>,
    ) -> Result<Polynomial, ExactError> {
        parse::parse_polynomial(s, resolve)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl FromStr for Polynomial {
    type Err = ExactError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse_polynomial(s, &|_| None)
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<Rational> for Polynomial {
    fn from(r: Rational) -> Self {
        Polynomial::constant(r)
    }
}

impl From<VarId> for Polynomial {
    fn from(v: VarId) -> Self {
        Polynomial::var(v)
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                $trait::$method(&self, rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |acc, p| &acc + &p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn add_examples() {
        assert!((p("alpha") + p("-alpha")).is_zero());
        assert_eq!((p("alpha*beta") + p("beta^2")).to_string(), "alpha*beta + beta^2");
        assert_eq!(p("alpha^2 + c") + p("alpha^2"), p("2*alpha^2 + c"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p("beta - 2*eta") * p("beta + 2*eta"), p("beta^2 - 4*eta^2"));
        assert!((Polynomial::zero() * p("alpha^3 + c")).is_zero());
        assert_eq!(
            (p("alpha - beta") * p("alpha - beta")).to_string(),
            "alpha^2 - 2*alpha*beta + beta^2"
        );
    }

    #[test]
    fn eval_examples() {
        let sigma = BTreeMap::from([(VarId::Gamma, r(1, 1))]);
        assert_eq!(p("2*gamma^2").eval(&sigma).unwrap(), r(2, 1));
        assert_eq!(Polynomial::zero().eval(&BTreeMap::new()).unwrap(), r(0, 1));
        let sigma = BTreeMap::from([(VarId::Alpha, r(1, 2)), (VarId::Beta, r(1, 2))]);
        assert_eq!(p("alpha^2 + beta^2").eval(&sigma).unwrap(), r(1, 2));
    }

    #[test]
    fn eval_missing_variable() {
        let err = p("alpha*beta")
            .eval(&BTreeMap::from([(VarId::Alpha, r(1, 1))]))
            .unwrap_err();
        assert_eq!(err, ExactError::MissingVariable(VarId::Beta));
    }

    #[test]
    fn substitute_examples() {
        let one = BTreeMap::from([(VarId::Eta, Polynomial::one())]);
        assert_eq!(p("eta^2").substitute(&one), Polynomial::one());
        let a3 = p("1/2*(alpha + beta - gamma)");
        let g0 = BTreeMap::from([(VarId::Gamma, Polynomial::zero())]);
        assert_eq!(a3.substitute(&g0), p("1/2*alpha + 1/2*beta"));
        let g2b = BTreeMap::from([(VarId::Gamma, p("2*beta"))]);
        assert_eq!(p("alpha*gamma").substitute(&g2b), p("2*alpha*beta"));
    }

    #[test]
    fn reduce_examples() {
        let eta_sq = p("eta^2 - 1");
        assert_eq!(p("eta^2").reduce(&eta_sq, VarId::Eta).unwrap(), Polynomial::one());
        let g6 = p("alpha*gamma - beta*delta");
        assert!(g6.reduce(&g6, VarId::Alpha).unwrap().is_zero());
        assert_eq!(
            p("eta^3*beta").reduce(&eta_sq, VarId::Eta).unwrap(),
            p("eta*beta")
        );
    }

    #[test]
    fn reduce_rejects_non_binomials() {
        let err = p("alpha").reduce(&p("alpha + beta + 1"), VarId::Alpha).unwrap_err();
        assert!(matches!(err, ExactError::UnsupportedRelation(_)));
        let err = p("alpha").reduce(&p("beta - 1"), VarId::Alpha).unwrap_err();
        assert!(matches!(err, ExactError::UnsupportedRelation(_)));
        let err = p("alpha").reduce(&p("alpha*beta - alpha*beta^2"), VarId::Alpha).unwrap_err();
        assert!(matches!(err, ExactError::UnsupportedRelation(_)));
    }

    #[test]
    fn reduce_by_monomial_relation() {
        let g7 = p("alpha*gamma");
        assert_eq!(
            p("alpha^2*gamma + beta").reduce(&g7, VarId::Alpha).unwrap(),
            p("beta")
        );
    }

    #[test]
    fn render_order() {
        assert_eq!(p("c - 3/2*alpha^2*beta").to_string(), "-3/2*alpha^2*beta + c");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(p("-1 + alpha").to_string(), "alpha - 1");
    }

    #[test]
    fn degree_queries() {
        let q = p("alpha^2*c + beta - 3");
        assert_eq!(q.degree(), Some(3));
        assert_eq!(q.degree_in(VarId::C), 1);
        assert_eq!(q.coefficient_of(VarId::C, 1), p("alpha^2"));
        assert_eq!(q.coefficient_of(VarId::C, 0), p("beta - 3"));
        assert_eq!(Polynomial::zero().degree(), None);
    }
}
