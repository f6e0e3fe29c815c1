//! Truncated sparse power series with arbitrary-precision integer
//! coefficients.
//!
//! Two exponent signatures are supported: [`ExponentVector`] over `a, b, c, d`
//! (graded by total degree) and [`SignedTriple`] over `r, s, q` (graded by the
//! power of `q`). Terms are kept in lexicographic order of the exponent tuple,
//! which is also the order of the JSON form.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::SeriesError;
use crate::partition::{ExponentVector, SignedTriple};

/// Exponent signature of a series.
pub trait Exponent: Copy + Ord + Hash + Debug + std::ops::Add<Output = Self> {
    /// Value of the `"vars"` field in JSON.
    const VARS: u8;

    fn zero() -> Self;

    /// Grading used for truncation.
    fn degree(&self) -> u32;

    fn scaled(&self, t: u32) -> Self;

    fn to_json(&self) -> Vec<i64>;

    fn from_json(values: &[i64]) -> Result<Self, SeriesError>;
}

impl Exponent for ExponentVector {
    const VARS: u8 = 4;

    fn zero() -> Self {
        ExponentVector::ZERO
    }

    fn degree(&self) -> u32 {
        self.total()
    }

    fn scaled(&self, t: u32) -> Self {
        ExponentVector::scaled(self, t)
    }

    fn to_json(&self) -> Vec<i64> {
        self.to_array().iter().map(|&x| i64::from(x)).collect()
    }

    fn from_json(values: &[i64]) -> Result<Self, SeriesError> {
        let v: Vec<u32> = values
            .iter()
            .map(|&x| u32::try_from(x).map_err(|_| SeriesError::Json(format!("bad exponent {x}"))))
            .collect::<Result<_, _>>()?;
        match v[..] {
            [ea, eb, ec, ed] => Ok(ExponentVector::new(ea, eb, ec, ed)),
            _ => Err(SeriesError::Json(format!(
                "expected 4 exponents, got {}",
                values.len()
            ))),
        }
    }
}

impl Exponent for SignedTriple {
    const VARS: u8 = 3;

    fn zero() -> Self {
        SignedTriple::ZERO
    }

    fn degree(&self) -> u32 {
        self.eq
    }

    fn scaled(&self, t: u32) -> Self {
        SignedTriple::scaled(self, t)
    }

    fn to_json(&self) -> Vec<i64> {
        vec![self.er, self.es, i64::from(self.eq)]
    }

    fn from_json(values: &[i64]) -> Result<Self, SeriesError> {
        match values[..] {
            [er, es, eq] => {
                let eq = u32::try_from(eq)
                    .map_err(|_| SeriesError::Json(format!("bad q exponent {eq}")))?;
                Ok(SignedTriple::new(er, es, eq))
            }
            _ => Err(SeriesError::Json(format!(
                "expected 3 exponents, got {}",
                values.len()
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Series<E: Exponent> {
    truncation: u32,
    terms: BTreeMap<E, BigInt>,
}

pub type Series4 = Series<ExponentVector>;
pub type Series3 = Series<SignedTriple>;

/// Outcome of [`Series::equals`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison<E> {
    pub equal: bool,
    pub first_difference: Option<E>,
}

impl<E: Exponent> Series<E> {
    pub fn zero(truncation: u32) -> Self {
        Series {
            truncation,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(truncation: u32) -> Self {
        Series::monomial(truncation, E::zero(), BigInt::one())
    }

    /// `coeff · x^e`, or zero if `e` lies beyond the truncation.
    pub fn monomial(truncation: u32, e: E, coeff: BigInt) -> Self {
        let mut s = Series::zero(truncation);
        s.add_term(e, coeff);
        s
    }

    /// Builds a series from arbitrary terms, summing repeats and dropping
    /// zeros and terms beyond the truncation.
    pub fn from_terms(truncation: u32, terms: impl IntoIterator<Item = (E, BigInt)>) -> Self {
        let mut s = Series::zero(truncation);
        for (e, c) in terms {
            s.add_term(e, c);
        }
        s
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&E, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &E) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub(crate) fn add_term(&mut self, e: E, coeff: BigInt) {
        if e.degree() > self.truncation || coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    fn check_same(&self, other: &Self) -> Result<(), SeriesError> {
        if self.truncation != other.truncation {
            return Err(SeriesError::TruncationMismatch {
                left: self.truncation,
                right: other.truncation,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Series {
            truncation: self.truncation,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_same(other)?;
        let n = self.truncation;
        let mut rhs: Vec<(&E, &BigInt)> = other.terms.iter().collect();
        rhs.sort_by_key(|(e, _)| e.degree());
        let mut acc: HashMap<E, BigInt> = HashMap::new();
        for (ea, ca) in &self.terms {
            let room = n - ea.degree();
            for (eb, cb) in rhs.iter().take_while(|(e, _)| e.degree() <= room) {
                *acc.entry(*ea + **eb).or_default() += ca * *cb;
            }
        }
        Ok(Series::from_terms(n, acc))
    }

    /// Drops every term of degree above `m` (`m` at most the current bound).
    pub fn truncate(&self, m: u32) -> Self {
        let m = m.min(self.truncation);
        Series {
            truncation: m,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() <= m)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// `self · x^e`, truncated.
    fn shifted(&self, by: E) -> impl Iterator<Item = (E, &BigInt)> + '_ {
        let room = self.truncation;
        self.terms
            .iter()
            .map(move |(e, c)| (*e + by, c))
            .filter(move |(e, _)| e.degree() <= room)
    }

    /// Equality with the lexicographically smallest differing exponent.
    pub fn equals(&self, other: &Self) -> Result<Comparison<E>, SeriesError> {
        self.check_same(other)?;
        let first_difference = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .filter(|e| self.terms.get(e) != other.terms.get(e))
            .min()
            .copied();
        Ok(Comparison {
            equal: first_difference.is_none(),
            first_difference,
        })
    }

    /// Applies `f` to every exponent, combining collisions.
    pub fn map_exponents<F: Exponent>(&self, truncation: u32, f: impl Fn(&E) -> F) -> Series<F> {
        Series::from_terms(
            truncation,
            self.terms.iter().map(|(e, c)| (f(e), c.clone())),
        )
    }

    /// Multiplies by one product factor.
    pub fn apply_factor(&self, factor: &FactorSpec<E>) -> Self {
        let m = factor.monomial;
        match factor.kind {
            FactorKind::PlusNum => {
                let mut out = self.clone();
                for (e, c) in self.shifted(m) {
                    out.add_term(e, c.clone());
                }
                out
            }
            FactorKind::MinusNum => {
                let mut out = self.clone();
                for (e, c) in self.shifted(m) {
                    out.add_term(e, -c);
                }
                out
            }
            FactorKind::Denom => self.divide_by_one_minus(m),
        }
    }

    /// `B = A / (1 - m)` via `B = A + m·B`, filled in by increasing degree.
    fn divide_by_one_minus(&self, m: E) -> Self {
        let n = self.truncation as usize;
        let step = m.degree() as usize;
        let mut layers: Vec<BTreeMap<E, BigInt>> = vec![BTreeMap::new(); n + 1];
        for (e, c) in &self.terms {
            layers[e.degree() as usize].insert(*e, c.clone());
        }
        for d in step..=n {
            let (lower, upper) = layers.split_at_mut(d);
            for (e, c) in &lower[d - step] {
                let slot = upper[0].entry(*e + m).or_default();
                *slot += c;
            }
            upper[0].retain(|_, c| !c.is_zero());
        }
        Series {
            truncation: self.truncation,
            terms: layers.into_iter().flatten().collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let doc = SeriesJson {
            vars: E::VARS,
            truncation: self.truncation,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    e: e.to_json(),
                    c: c.to_string(),
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("series JSON is always serializable")
    }

    /// Parses the canonical form; terms must be strictly increasing.
    pub fn from_json(text: &str) -> Result<Self, SeriesError> {
        let doc: SeriesJson =
            serde_json::from_str(text).map_err(|e| SeriesError::Json(e.to_string()))?;
        if doc.vars != E::VARS {
            return Err(SeriesError::VarsMismatch {
                expected: E::VARS,
                found: doc.vars,
            });
        }
        let mut terms = BTreeMap::new();
        let mut previous: Option<E> = None;
        for term in doc.terms {
            let e = E::from_json(&term.e)?;
            if previous.is_some_and(|p| p >= e) {
                return Err(SeriesError::NonCanonicalOrder);
            }
            previous = Some(e);
            let c: BigInt = term
                .c
                .parse()
                .map_err(|_| SeriesError::Json(format!("bad coefficient {:?}", term.c)))?;
            if c.is_zero() {
                return Err(SeriesError::ZeroCoefficient);
            }
            if e.degree() > doc.truncation {
                return Err(SeriesError::DegreeExceedsTruncation {
                    degree: e.degree(),
                    truncation: doc.truncation,
                });
            }
            terms.insert(e, c);
        }
        Ok(Series {
            truncation: doc.truncation,
            terms,
        })
    }
}

impl Series4 {
    /// Image under `a ↦ rsq, b ↦ r⁻¹sq, c ↦ rs⁻¹q, d ↦ r⁻¹s⁻¹q`.
    pub fn specialize(&self) -> Series3 {
        self.map_exponents(self.truncation, ExponentVector::specialize)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SeriesJson {
    vars: u8,
    truncation: u32,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    e: Vec<i64>,
    c: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FactorKind {
    /// `(1 + m)`
    PlusNum,
    /// `(1 - m)`
    MinusNum,
    /// `1 / (1 - m)`
    Denom,
}

/// One factor of an infinite product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactorSpec<E> {
    kind: FactorKind,
    monomial: E,
}

impl<E: Exponent> FactorSpec<E> {
    pub fn new(kind: FactorKind, monomial: E) -> Result<Self, SeriesError> {
        if monomial.degree() == 0 {
            return Err(SeriesError::ZeroDegreeMonomial);
        }
        Ok(FactorSpec { kind, monomial })
    }

    pub fn plus(monomial: E) -> Result<Self, SeriesError> {
        FactorSpec::new(FactorKind::PlusNum, monomial)
    }

    pub fn minus(monomial: E) -> Result<Self, SeriesError> {
        FactorSpec::new(FactorKind::MinusNum, monomial)
    }

    pub fn denom(monomial: E) -> Result<Self, SeriesError> {
        FactorSpec::new(FactorKind::Denom, monomial)
    }

    pub fn kind(&self) -> FactorKind {
        self.kind
    }

    pub fn monomial(&self) -> E {
        self.monomial
    }
}

/// `one(n)` with every factor applied.
pub fn expand_product<E: Exponent>(factors: &[FactorSpec<E>], truncation: u32) -> Series<E> {
    factors
        .iter()
        .fold(Series::one(truncation), |acc, f| acc.apply_factor(f))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(a: u32, b: u32, c: u32, d: u32) -> ExponentVector {
        ExponentVector::new(a, b, c, d)
    }

    type Term = ((u32, u32, u32, u32), i64);

    fn s4(n: u32, terms: &[Term]) -> Series4 {
        Series::from_terms(
            n,
            terms
                .iter()
                .map(|&((a, b, c, d), k)| (ev(a, b, c, d), BigInt::from(k))),
        )
    }

    #[test]
    fn one_and_coefficient() {
        let one = Series4::one(0);
        assert_eq!(one.len(), 1);
        assert_eq!(one.coefficient(&ExponentVector::ZERO), BigInt::from(1));
        let one5 = Series4::one(5);
        assert_eq!(one5.truncation(), 5);
        assert_eq!(one5.coefficient(&ev(1, 0, 0, 0)), BigInt::from(0));
    }

    #[test]
    fn add_sub_identities() {
        let two = Series4::one(3).add(&Series4::one(3)).unwrap();
        assert_eq!(two, s4(3, &[((0, 0, 0, 0), 2)]));
        let a = s4(3, &[((1, 0, 0, 0), 4), ((0, 1, 1, 0), -2)]);
        assert!(a.sub(&a).unwrap().is_zero());
        assert_eq!(a.add(&Series4::zero(3)).unwrap(), a);
        assert_eq!(
            a.add(&Series4::one(4)),
            Err(SeriesError::TruncationMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn mul_examples() {
        let a = s4(5, &[((1, 0, 0, 0), 3), ((0, 0, 2, 1), 1)]);
        assert_eq!(Series4::one(5).mul(&a).unwrap(), a);
        let x = s4(2, &[((1, 0, 0, 0), 1)]);
        let y = s4(2, &[((0, 1, 0, 0), 1)]);
        assert_eq!(x.mul(&y).unwrap(), s4(2, &[((1, 1, 0, 0), 1)]));
        let x1 = x.truncate(1);
        let y1 = y.truncate(1);
        assert!(x1.mul(&y1).unwrap().is_zero());
        assert!(x.mul(&y1).is_err());
    }

    #[test]
    fn factor_examples() {
        let ab = ev(1, 1, 0, 0);
        let geo2 = Series4::one(2).apply_factor(&FactorSpec::denom(ab).unwrap());
        assert_eq!(geo2, s4(2, &[((0, 0, 0, 0), 1), ((1, 1, 0, 0), 1)]));
        let plus = Series4::one(2).apply_factor(&FactorSpec::plus(ev(1, 0, 0, 0)).unwrap());
        assert_eq!(plus, s4(2, &[((0, 0, 0, 0), 1), ((1, 0, 0, 0), 1)]));
        let geo4 = Series4::one(4).apply_factor(&FactorSpec::denom(ab).unwrap());
        assert_eq!(
            geo4,
            s4(
                4,
                &[((0, 0, 0, 0), 1), ((1, 1, 0, 0), 1), ((2, 2, 0, 0), 1)]
            )
        );
        assert_eq!(
            FactorSpec::denom(ExponentVector::ZERO),
            Err(SeriesError::ZeroDegreeMonomial)
        );
        assert_eq!(
            FactorSpec::plus(SignedTriple::new(2, 0, 0)),
            Err(SeriesError::ZeroDegreeMonomial)
        );
    }

    #[test]
    fn denominator_against_repeated_multiplication() {
        // 1/(1-m) truncated equals the explicit geometric sum
        let m = ev(1, 0, 1, 0);
        let base = s4(
            9,
            &[((0, 0, 0, 0), 1), ((1, 1, 0, 0), -3), ((0, 0, 0, 1), 2)],
        );
        let geometric = Series::from_terms(9, (0..=4).map(|t| (m.scaled(t), BigInt::from(1))));
        assert_eq!(
            base.apply_factor(&FactorSpec::denom(m).unwrap()),
            base.mul(&geometric).unwrap()
        );
    }

    #[test]
    fn empty_product_is_one() {
        assert_eq!(expand_product::<ExponentVector>(&[], 7), Series4::one(7));
    }

    #[test]
    fn equals_reports_first_difference() {
        let a = s4(3, &[((1, 0, 0, 0), 1), ((2, 0, 0, 0), 1)]);
        assert_eq!(
            a.equals(&a).unwrap(),
            Comparison {
                equal: true,
                first_difference: None
            }
        );
        let one_a = s4(3, &[((0, 0, 0, 0), 1), ((1, 0, 0, 0), 1)]);
        let one_b = s4(3, &[((0, 0, 0, 0), 1), ((0, 1, 0, 0), 1)]);
        let cmp = one_a.equals(&one_b).unwrap();
        assert!(!cmp.equal);
        // lexicographic order on (ea, eb, ec, ed) puts b before a
        assert_eq!(cmp.first_difference, Some(ev(0, 1, 0, 0)));
        assert!(one_a.equals(&one_a.truncate(2)).is_err());
    }

    #[test]
    fn specialize_examples() {
        assert_eq!(Series4::one(4).specialize(), Series3::one(4));
        let a = s4(1, &[((1, 0, 0, 0), 1)]);
        assert_eq!(
            a.specialize(),
            Series3::monomial(1, SignedTriple::new(1, 1, 1), BigInt::from(1))
        );
        // b·c and a·d share the image q^2
        let bc_ad = s4(2, &[((0, 1, 1, 0), 1), ((1, 0, 0, 1), 2)]);
        assert_eq!(
            bc_ad.specialize(),
            Series3::monomial(2, SignedTriple::new(0, 0, 2), BigInt::from(3))
        );
    }

    #[test]
    fn json_canonical_form() {
        assert_eq!(
            Series4::one(2).to_json(),
            r#"{"vars":4,"truncation":2,"terms":[{"e":[0,0,0,0],"c":"1"}]}"#
        );
        let s3 = Series3::from_terms(
            3,
            [
                (SignedTriple::new(-1, 1, 3), BigInt::from(-7)),
                (SignedTriple::ZERO, BigInt::from(1)),
            ],
        );
        assert_eq!(
            s3.to_json(),
            r#"{"vars":3,"truncation":3,"terms":[{"e":[-1,1,3],"c":"-7"},{"e":[0,0,0],"c":"1"}]}"#
        );
        assert_eq!(Series3::from_json(&s3.to_json()).unwrap(), s3);
    }

    #[test]
    fn json_rejects_bad_input() {
        let unsorted = r#"{"vars":4,"truncation":2,"terms":[{"e":[1,0,0,0],"c":"1"},{"e":[0,0,0,0],"c":"1"}]}"#;
        assert_eq!(
            Series4::from_json(unsorted),
            Err(SeriesError::NonCanonicalOrder)
        );
        let dup = r#"{"vars":4,"truncation":2,"terms":[{"e":[0,0,0,0],"c":"1"},{"e":[0,0,0,0],"c":"1"}]}"#;
        assert_eq!(Series4::from_json(dup), Err(SeriesError::NonCanonicalOrder));
        let zero = r#"{"vars":4,"truncation":2,"terms":[{"e":[0,0,0,0],"c":"0"}]}"#;
        assert_eq!(Series4::from_json(zero), Err(SeriesError::ZeroCoefficient));
        let deep = r#"{"vars":4,"truncation":1,"terms":[{"e":[1,1,0,0],"c":"1"}]}"#;
        assert!(matches!(
            Series4::from_json(deep),
            Err(SeriesError::DegreeExceedsTruncation { .. })
        ));
        assert!(matches!(
            Series3::from_json(&Series4::one(1).to_json()),
            Err(SeriesError::VarsMismatch { .. })
        ));
        assert!(matches!(Series4::from_json("{"), Err(SeriesError::Json(_))));
        let big = r#"{"vars":4,"truncation":1,"terms":[{"e":[0,0,0,0],"c":"123456789012345678901234567890"}]}"#;
        assert_eq!(Series4::from_json(big).unwrap().to_json(), big);
    }
}
