//! Sparse integer polynomials and systems of polynomial constraints.
//!
//! Text format, one constraint per line:
//!
//! ```text
//! X1 + X3 - 2*Y1 - Y2 = 0
//! X1*X4 - X2*X3 - 1 = 0
//! X1 >= 0
//! ```
//!
//! Terms are ordered by descending degree, then by unknown index. A coefficient
//! of ±1 is omitted except on the constant term; repeated factors are written
//! out (`X1*X1`).

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::json::int_to_json;

/// A product of unknowns, stored as sorted unknown indices with repetition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<usize>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(mut factors: Vec<usize>) -> Self {
        factors.sort_unstable();
        Monomial(factors)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn factors(&self) -> &[usize] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut f = self.0.clone();
        f.extend_from_slice(&other.0);
        Monomial::new(f)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Integer-coefficient polynomial; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c.into());
        p
    }

    pub fn var(i: usize) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial(vec![i]), BigInt::one());
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn unknowns(&self) -> BTreeSet<usize> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().copied())
            .collect()
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn eval(&self, values: &[BigInt]) -> BigInt {
        self.terms
            .iter()
            .map(|(m, c)| m.0.iter().fold(c.clone(), |acc, &i| acc * &values[i]))
            .sum()
    }

    /// Replaces unknown `i` by `images[i]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let term = m.0.iter().fold(Polynomial::constant(c.clone()), |acc, &i| {
                acc.mul(&images[i])
            });
            out = out.add(&term);
        }
        out
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let factors: Vec<&str> = m.0.iter().map(|&i| names[i].as_str()).collect();
            if factors.is_empty() {
                let _ = write!(s, "{mag}");
            } else if mag.is_one() {
                s.push_str(&factors.join("*"));
            } else {
                let _ = write!(s, "{mag}*{}", factors.join("*"));
            }
        }
        s
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("no value for unknown `{0}`")]
    MissingUnknown(String),
    #[error("unknown index {0} is not declared")]
    Undeclared(usize),
}

/// Equations `p = 0` over named integer unknowns, some constrained `≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialSystem {
    unknowns: Vec<String>,
    equations: Vec<Polynomial>,
    nonneg: BTreeSet<usize>,
}

impl PolynomialSystem {
    pub fn new(
        unknowns: Vec<String>,
        equations: Vec<Polynomial>,
        nonneg: BTreeSet<usize>,
    ) -> Result<Self, PolyError> {
        let n = unknowns.len();
        let used = equations
            .iter()
            .flat_map(Polynomial::unknowns)
            .chain(nonneg.iter().copied());
        for i in used {
            if i >= n {
                return Err(PolyError::Undeclared(i));
            }
        }
        Ok(PolynomialSystem {
            unknowns,
            equations,
            nonneg,
        })
    }

    pub fn unknowns(&self) -> &[String] {
        &self.unknowns
    }

    pub fn equations(&self) -> &[Polynomial] {
        &self.equations
    }

    pub fn nonneg(&self) -> &BTreeSet<usize> {
        &self.nonneg
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.unknowns.iter().position(|u| u == name)
    }

    /// Values in unknown order; every unknown must be assigned.
    pub fn values(&self, assignment: &BTreeMap<String, BigInt>) -> Result<Vec<BigInt>, PolyError> {
        self.unknowns
            .iter()
            .map(|u| {
                assignment
                    .get(u)
                    .cloned()
                    .ok_or_else(|| PolyError::MissingUnknown(u.clone()))
            })
            .collect()
    }

    pub fn is_satisfied_by(&self, values: &[BigInt]) -> bool {
        self.nonneg.iter().all(|&i| !values[i].is_negative())
            && self.equations.iter().all(|p| p.eval(values).is_zero())
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for p in &self.equations {
            let _ = writeln!(s, "{} = 0", p.render(&self.unknowns));
        }
        for &i in &self.nonneg {
            let _ = writeln!(s, "{} >= 0", self.unknowns[i]);
        }
        s
    }

    pub fn to_json(&self) -> Value {
        let equations: Vec<Value> = self
            .equations
            .iter()
            .map(|p| {
                let terms: Vec<Value> = p
                    .terms()
                    .map(|(m, c)| {
                        let names: Vec<&str> =
                            m.0.iter().map(|&i| self.unknowns[i].as_str()).collect();
                        json!({ "coeff": int_to_json(c), "monomial": names })
                    })
                    .collect();
                json!({ "text": p.render(&self.unknowns), "terms": terms })
            })
            .collect();
        let nonneg: Vec<&str> = self
            .nonneg
            .iter()
            .map(|&i| self.unknowns[i].as_str())
            .collect();
        json!({
            "unknowns": self.unknowns,
            "equations": equations,
            "nonneg": nonneg,
        })
    }
}

/// Checks every equation and sign constraint under a total assignment.
pub fn eval_poly_system(
    ps: &PolynomialSystem,
    assignment: &BTreeMap<String, BigInt>,
) -> Result<bool, PolyError> {
    Ok(ps.is_satisfied_by(&ps.values(assignment)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: &[&str]) -> Vec<String> {
        n.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn renders_in_canonical_order() {
        let x = |i| Polynomial::var(i);
        let p = x(0)
            .mul(&x(3))
            .sub(&x(1).mul(&x(2)))
            .sub(&Polynomial::constant(1));
        assert_eq!(
            p.render(&names(&["X1", "X2", "X3", "X4"])),
            "X1*X4 - X2*X3 - 1"
        );
        let q = Polynomial::constant(-3)
            .add(&x(1).mul(&x(1)))
            .sub(&x(0))
            .add(&x(0))
            .sub(&x(1))
            .sub(&x(1));
        assert_eq!(q.render(&names(&["a", "b"])), "b*b - 2*b - 3");
        assert_eq!(Polynomial::zero().render(&[]), "0");
        assert_eq!(Polynomial::constant(-2).render(&[]), "-2");
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = Polynomial::var(0).sub(&Polynomial::var(0));
        assert!(p.is_zero());
        assert_eq!(p.degree(), 0);
    }

    #[test]
    fn substitution_and_eval_agree() {
        // p(x, y) = x*y - 2, x := y + 1
        let p = Polynomial::var(0)
            .mul(&Polynomial::var(1))
            .sub(&Polynomial::constant(2));
        let images = [
            Polynomial::var(1).add(&Polynomial::constant(1)),
            Polynomial::var(1),
        ];
        let q = p.substitute(&images);
        for y in -5i64..5 {
            let direct = p.eval(&[BigInt::from(y + 1), BigInt::from(y)]);
            assert_eq!(q.eval(&[BigInt::from(0), BigInt::from(y)]), direct);
        }
    }

    #[test]
    fn system_rejects_undeclared_unknowns() {
        let err = PolynomialSystem::new(names(&["x"]), vec![Polynomial::var(1)], BTreeSet::new());
        assert_eq!(err, Err(PolyError::Undeclared(1)));
    }

    #[test]
    fn missing_assignment_is_an_error() {
        let ps = PolynomialSystem::new(
            names(&["x", "y"]),
            vec![Polynomial::var(1)],
            BTreeSet::new(),
        )
        .unwrap();
        let mut asg = BTreeMap::new();
        asg.insert("x".to_string(), BigInt::from(1));
        assert_eq!(
            eval_poly_system(&ps, &asg),
            Err(PolyError::MissingUnknown("y".into()))
        );
    }
}
