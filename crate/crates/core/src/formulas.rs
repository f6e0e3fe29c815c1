//! Generating functions by brute force, and the factor lists of the product
//! formulas they are compared against.
//!
//! Every factor list is finite: a factor is emitted only when its monomial
//! has degree at most the truncation, since higher factors are the identity
//! modulo the truncation.

use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::blocks::{block_weight, rectangle_weight, type3_weight, Block, BlockKind};
use crate::enumerate::{enumerate_distinct, enumerate_partitions, enumerate_restricted};
use crate::partition::{ExponentVector, Partition, SignedTriple};
use crate::restriction::RestrictionSpec;
use crate::series::{expand_product, Exponent, FactorKind, FactorSpec, Series, Series3, Series4};

pub type Factor4 = FactorSpec<ExponentVector>;
pub type Factor3 = FactorSpec<SignedTriple>;

fn sum_weights(n: u32, classes: impl Fn(u32) -> Vec<Partition>) -> Series4 {
    Series::from_terms(
        n,
        (0..=n)
            .flat_map(classes)
            .map(|p| (p.statistics(), BigInt::one())),
    )
}

/// `Σ w(λ)` over all partitions with `|λ| <= n`.
pub fn brute_phi(n: u32) -> Series4 {
    sum_weights(n, |m| enumerate_partitions(m).collect())
}

/// `Σ w(λ)` over partitions into distinct parts.
pub fn brute_psi(n: u32) -> Series4 {
    sum_weights(n, |m| enumerate_distinct(m).collect())
}

/// `Σ w(λ)` over `Par(i, k; R, ρ)`.
pub fn brute_phi_restricted(spec: &RestrictionSpec, n: u32) -> Series4 {
    sum_weights(n, |m| enumerate_restricted(spec, m).collect())
}

/// `Σ r^θ(λ) s^θ(λ') q^|λ|`, with `θ` counted directly on λ and its conjugate.
pub fn brute_andrews(n: u32) -> Series3 {
    Series::from_terms(
        n,
        (0..=n).flat_map(enumerate_partitions).map(|p| {
            let e = SignedTriple::new(
                i64::from(p.odd_part_count()),
                i64::from(p.conjugate().odd_part_count()),
                p.size(),
            );
            (e, BigInt::one())
        }),
    )
}

fn gated<E: Exponent>(n: u32, kind: FactorKind, monomial: E) -> Option<FactorSpec<E>> {
    if monomial.degree() > n {
        return None;
    }
    FactorSpec::new(kind, monomial).ok()
}

fn ev(a: u32, b: u32, c: u32, d: u32) -> ExponentVector {
    ExponentVector::new(a, b, c, d)
}

/// `j = 1..=n`; every family at index `j` has degree at least `j`.
fn indices(n: u32) -> impl Iterator<Item = u32> {
    1..=n.max(1)
}

pub fn theorem1_factors(n: u32) -> Vec<Factor4> {
    use FactorKind::*;
    indices(n)
        .flat_map(|j| {
            [
                (PlusNum, ev(j, j - 1, j - 1, j - 1)),
                (PlusNum, ev(j, j, j, j - 1)),
                (Denom, ev(j, j, j, j)),
                (Denom, ev(j, j, j - 1, j - 1)),
                (Denom, ev(j, j - 1, j, j - 1)),
            ]
        })
        .filter_map(|(kind, m)| gated(n, kind, m))
        .collect()
}

pub fn corollary1_factors(n: u32) -> Vec<Factor4> {
    use FactorKind::*;
    indices(n)
        .flat_map(|j| {
            [
                (PlusNum, ev(j, j - 1, j - 1, j - 1)),
                (PlusNum, ev(j, j, j, j - 1)),
                (Denom, ev(j, j, j - 1, j - 1)),
            ]
        })
        .filter_map(|(kind, m)| gated(n, kind, m))
        .collect()
}

/// The Type I families `1/(1 - a^j b^j c^j d^j)` and
/// `1/(1 - a^j b^(j-1) c^j d^(j-1))` that separate `Φ` from `Ψ`.
pub fn even_multiplicity_factors(n: u32) -> Vec<Factor4> {
    indices(n)
        .flat_map(|j| [ev(j, j, j, j), ev(j, j - 1, j, j - 1)])
        .filter_map(|m| gated(n, FactorKind::Denom, m))
        .collect()
}

/// Factors of the `r, s, q` product, gated on the power of `q`.
pub fn andrews_factors(n: u32) -> Vec<Factor3> {
    use FactorKind::*;
    indices(n)
        .flat_map(|j| {
            [
                (PlusNum, SignedTriple::new(1, 1, 2 * j - 1)),
                (Denom, SignedTriple::new(0, 0, 4 * j)),
                (Denom, SignedTriple::new(2, 0, 4 * j - 2)),
                (Denom, SignedTriple::new(0, 2, 4 * j - 2)),
            ]
        })
        .filter_map(|(kind, m)| gated(n, kind, m))
        .collect()
}

fn halves(len: u32) -> (u32, u32) {
    (len.div_ceil(2), len / 2)
}

/// `S` and `T` transcribed from the printed statement, including its index
/// ranges and exponent placement.
pub fn theorem2_paper_factors(spec: &RestrictionSpec, n: u32) -> Vec<Factor4> {
    use FactorKind::*;
    let (i, k) = (spec.residue(), spec.modulus());
    let mut out: Vec<Factor4> = indices(n)
        .flat_map(|j| {
            let (long_hi, long_lo) = halves((j + 1) * k + i);
            let (hi, lo) = halves(j * k + i);
            [
                (PlusNum, ev(long_hi, long_lo, hi, lo)),
                (Denom, ev(hi, lo, hi, lo)),
                (Denom, ev(j * k, (j - 1) * k, j * k, (j - 1) * k)),
            ]
        })
        .filter_map(|(kind, m)| gated(n, kind, m))
        .collect();
    out.extend(spec.domain_up_to(n).into_iter().filter_map(|(r, bound)| {
        let (hi, lo) = halves(r);
        let half = bound / 2;
        gated(n, MinusNum, ev(hi * half, lo * half, hi * half, lo * half))
    }));
    out
}

/// Weight of `rows` equal rows of length `len` starting at an odd level,
/// counted cell by cell.
fn equal_rows_weight(len: u32, rows: u32) -> ExponentVector {
    rectangle_weight(1, rows, 1, len)
}

/// `T` factors `(1 - w)` where `w` is the weight of `ρ(r)` rows of length `r`.
pub fn t_factors(spec: &RestrictionSpec, n: u32) -> Vec<Factor4> {
    spec.domain_up_to(n)
        .into_iter()
        .filter_map(|(r, bound)| gated(n, FactorKind::MinusNum, equal_rows_weight(r, bound)))
        .collect()
}

/// `T⁻¹`: the generating function of the removed multiplicity groups.
pub fn t_inverse_factors(spec: &RestrictionSpec, n: u32) -> Vec<Factor4> {
    spec.domain_up_to(n)
        .into_iter()
        .filter_map(|(r, bound)| gated(n, FactorKind::Denom, equal_rows_weight(r, bound)))
        .collect()
}

/// Product assembled from block weights: Type I blocks `(L, L)` for every
/// class length, Type II blocks `(L, L-k)` above the smallest length, the
/// boundary block `(i, 0)`, width-`2k` Type III rectangles of every odd
/// height, and the `T` factors.
pub fn theorem2_derived_factors(spec: &RestrictionSpec, n: u32) -> Vec<Factor4> {
    use FactorKind::*;
    let (i, k) = (spec.residue(), spec.modulus());
    let block =
        |top, bottom, kind| block_weight(&Block::new(top, bottom, kind).expect("valid block"));
    let mut out = Vec::new();
    // every monomial below has degree >= its top length, so lengths <= n suffice
    for len in spec.class_parts(n) {
        out.extend(gated(n, Denom, block(len, len, BlockKind::I)));
        if len > i {
            out.extend(gated(n, PlusNum, block(len, len - k, BlockKind::II)));
        }
    }
    out.extend(gated(n, PlusNum, block(i, 0, BlockKind::II)));
    for height in (1..=n).step_by(2) {
        let w = type3_weight(height, k).expect("odd height");
        out.extend(gated(n, Denom, w));
    }
    out.extend(t_factors(spec, n));
    out
}

/// Identity to check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormulaId {
    Theorem1,
    Corollary1,
    Andrews,
    Theorem2Paper(RestrictionSpec),
    Theorem2Derived(RestrictionSpec),
}

impl FormulaId {
    /// `name` is one of `theorem1`, `corollary1`, `andrews`,
    /// `theorem2-paper`, `theorem2-derived`; the last two need a spec.
    pub fn from_parts(name: &str, spec: Option<RestrictionSpec>) -> Result<Self, String> {
        match (name, spec) {
            ("theorem1", None) => Ok(FormulaId::Theorem1),
            ("corollary1", None) => Ok(FormulaId::Corollary1),
            ("andrews", None) => Ok(FormulaId::Andrews),
            ("theorem2-paper", Some(s)) => Ok(FormulaId::Theorem2Paper(s)),
            ("theorem2-derived", Some(s)) => Ok(FormulaId::Theorem2Derived(s)),
            ("theorem2-paper" | "theorem2-derived", None) => Err(format!("{name} requires --spec")),
            ("theorem1" | "corollary1" | "andrews", Some(_)) => {
                Err(format!("{name} does not take --spec"))
            }
            _ => Err(format!("unknown formula {name:?}")),
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaId::Theorem1 => f.write_str("theorem1"),
            FormulaId::Corollary1 => f.write_str("corollary1"),
            FormulaId::Andrews => f.write_str("andrews"),
            FormulaId::Theorem2Paper(s) => write!(f, "theorem2-paper[{s}]"),
            FormulaId::Theorem2Derived(s) => write!(f, "theorem2-derived[{s}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FirstDiff {
    pub e: Vec<i64>,
    /// Coefficient in the product expansion.
    pub lhs: String,
    /// Coefficient in the brute-force sum.
    pub rhs: String,
}

/// Result of comparing a product expansion with its brute-force oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub formula: String,
    pub degree: u32,
    pub pass: bool,
    pub first_diff: Option<FirstDiff>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report JSON is always serializable")
    }

    /// Deterministic one-line summary (no timing).
    pub fn to_text(&self) -> String {
        let mut line = format!(
            "formula={} degree={} pass={}",
            self.formula, self.degree, self.pass
        );
        if let Some(d) = &self.first_diff {
            let e: Vec<String> = d.e.iter().map(i64::to_string).collect();
            line.push_str(&format!(
                " first_diff=[{}] lhs={} rhs={}",
                e.join(","),
                d.lhs,
                d.rhs
            ));
        }
        line
    }
}

fn compare<E: Exponent>(lhs: &Series<E>, rhs: &Series<E>) -> (bool, Option<FirstDiff>) {
    let cmp = lhs.equals(rhs).expect("same truncation");
    let diff = cmp.first_difference.map(|e| FirstDiff {
        e: e.to_json(),
        lhs: lhs.coefficient(&e).to_string(),
        rhs: rhs.coefficient(&e).to_string(),
    });
    (cmp.equal, diff)
}

/// Product factors for `id` at truncation `n` (four-variable identities).
pub fn factors_for(id: &FormulaId, n: u32) -> Option<Vec<Factor4>> {
    match id {
        FormulaId::Theorem1 => Some(theorem1_factors(n)),
        FormulaId::Corollary1 => Some(corollary1_factors(n)),
        FormulaId::Andrews => None,
        FormulaId::Theorem2Paper(s) => Some(theorem2_paper_factors(s, n)),
        FormulaId::Theorem2Derived(s) => Some(theorem2_derived_factors(s, n)),
    }
}

/// Brute-force side of a four-variable identity.
pub fn oracle_for(id: &FormulaId, n: u32) -> Option<Series4> {
    match id {
        FormulaId::Theorem1 => Some(brute_phi(n)),
        FormulaId::Corollary1 => Some(brute_psi(n)),
        FormulaId::Andrews => None,
        FormulaId::Theorem2Paper(s) | FormulaId::Theorem2Derived(s) => {
            Some(brute_phi_restricted(s, n))
        }
    }
}

pub fn verify(id: &FormulaId, n: u32) -> Report {
    let start = Instant::now();
    let (pass, first_diff) = match id {
        FormulaId::Andrews => compare(&expand_product(&andrews_factors(n), n), &brute_andrews(n)),
        _ => {
            let factors = factors_for(id, n).expect("four-variable identity");
            let oracle = oracle_for(id, n).expect("four-variable identity");
            compare(&expand_product(&factors, n), &oracle)
        }
    };
    Report {
        formula: id.to_string(),
        degree: n,
        pass,
        first_diff,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// The three series of the `r, s, q` identity.
#[derive(Debug, Clone)]
pub struct AndrewsCheck {
    pub product: Series3,
    pub brute: Series3,
    pub specialized: Series3,
}

impl AndrewsCheck {
    pub fn run(n: u32) -> Self {
        AndrewsCheck {
            product: expand_product(&andrews_factors(n), n),
            brute: brute_andrews(n),
            specialized: brute_phi(n).specialize(),
        }
    }

    pub fn product_matches_brute(&self) -> bool {
        self.product == self.brute
    }

    pub fn specialized_matches_brute(&self) -> bool {
        self.specialized == self.brute
    }

    pub fn pass(&self) -> bool {
        self.product_matches_brute() && self.specialized_matches_brute()
    }
}
