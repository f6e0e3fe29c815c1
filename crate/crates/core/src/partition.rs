//! Integer partitions, their Young diagrams and the four cell statistics.
//!
//! A cell in row `r`, column `c` (both 1-based) is labelled `a`, `b`, `c` or
//! `d` by the parities of `r` and `c`. The exponent vector of a partition
//! counts each label over the whole diagram.

use std::fmt;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;

/// A weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validates `values` and wraps them.
    pub fn new(values: Vec<u32>) -> Result<Self, ParseError> {
        if values.contains(&0) {
            return Err(ParseError::NonPositivePart);
        }
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(ParseError::NotWeaklyDecreasing);
        }
        Ok(Partition(values))
    }

    /// Accepts signed input so that zero and negative parts are reported as
    /// such rather than as conversion failures.
    pub fn from_signed(values: &[i64]) -> Result<Self, ParseError> {
        let parts = values
            .iter()
            .map(|&v| {
                if v <= 0 {
                    Err(ParseError::NonPositivePart)
                } else {
                    u32::try_from(v).map_err(|_| ParseError::PartTooLarge(v.to_string()))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }

    /// Sorts arbitrary positive parts into partition order.
    pub(crate) fn from_unsorted(mut values: Vec<u32>) -> Self {
        values.retain(|&v| v > 0);
        values.sort_unstable_by(|a, b| b.cmp(a));
        Partition(values)
    }

    pub(crate) fn from_sorted_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(values.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(values.iter().all(|&v| v > 0));
        Partition(values)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part at 1-based row `row`, or 0 past the end.
    pub fn row(&self, row: usize) -> u32 {
        if row == 0 {
            return 0;
        }
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    /// Transpose of the diagram: `λ'_j = #{m : λ_m >= j}`.
    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0) as usize;
        let mut columns = vec![0u32; width];
        for &part in &self.0 {
            for col in columns.iter_mut().take(part as usize) {
                *col += 1;
            }
        }
        Partition(columns)
    }

    /// `θ(λ)`: the number of odd parts.
    pub fn odd_part_count(&self) -> u32 {
        self.0.iter().filter(|&&p| p % 2 == 1).count() as u32
    }

    /// `(α, β, γ, δ)` from the ceil/floor halves of odd- and even-indexed rows.
    pub fn statistics(&self) -> ExponentVector {
        let mut e = ExponentVector::ZERO;
        for (idx, &part) in self.0.iter().enumerate() {
            let (hi, lo) = (part.div_ceil(2), part / 2);
            if idx % 2 == 0 {
                e.ea += hi;
                e.eb += lo;
            } else {
                e.ec += hi;
                e.ed += lo;
            }
        }
        e
    }

    /// Number of times `value` occurs as a part.
    pub fn multiplicity(&self, value: u32) -> usize {
        self.0.iter().filter(|&&p| p == value).count()
    }

    /// `(value, multiplicity)` pairs in decreasing order of value.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &part in &self.0 {
            match out.last_mut() {
                Some((v, m)) if *v == part => *m += 1,
                _ => out.push((part, 1)),
            }
        }
        out
    }

    /// Row pairs `(λ_{2m-1}, λ_{2m})` with a zero appended to an odd-length
    /// partition.
    pub(crate) fn row_pairs(&self) -> Vec<(u32, u32)> {
        self.0
            .chunks(2)
            .map(|pair| (pair[0], pair.get(1).copied().unwrap_or(0)))
            .collect()
    }

    /// Membership in the gap class: after zero padding every odd-level part
    /// exceeds the next part by at most `k`.
    pub fn in_gap_class(&self, k: u32) -> bool {
        self.row_pairs()
            .iter()
            .all(|&(top, bottom)| top - bottom <= k)
    }

    /// Whether all parts share one residue modulo `k`.
    pub fn residue_mod(&self, k: u32) -> Option<Option<u32>> {
        let mut residues = self.0.iter().map(|&p| p % k);
        match residues.next() {
            None => Some(None),
            Some(first) => residues.all(|r| r == first).then_some(Some(first)),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, part) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = ParseError;

    /// Comma-separated decimal parts; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let values = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<i64>()
                    .map_err(|_| ParseError::BadInteger(tok.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::from_signed(&values)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let values = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(values).map_err(serde::de::Error::custom)
    }
}

/// Label of a diagram cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellLabel {
    A,
    B,
    C,
    D,
}

impl fmt::Display for CellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CellLabel::A => "a",
            CellLabel::B => "b",
            CellLabel::C => "c",
            CellLabel::D => "d",
        })
    }
}

/// Label of the cell at 1-based `(row, col)`.
pub fn cell_label(row: u32, col: u32) -> CellLabel {
    match (row % 2 == 1, col % 2 == 1) {
        (true, true) => CellLabel::A,
        (true, false) => CellLabel::B,
        (false, true) => CellLabel::C,
        (false, false) => CellLabel::D,
    }
}

/// Exponents of a monomial `a^ea b^eb c^ec d^ed`.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct ExponentVector {
    pub ea: u32,
    pub eb: u32,
    pub ec: u32,
    pub ed: u32,
}

impl ExponentVector {
    pub const ZERO: ExponentVector = ExponentVector::new(0, 0, 0, 0);

    pub const fn new(ea: u32, eb: u32, ec: u32, ed: u32) -> Self {
        ExponentVector { ea, eb, ec, ed }
    }

    pub fn total(&self) -> u32 {
        self.ea + self.eb + self.ec + self.ed
    }

    pub fn scaled(&self, t: u32) -> Self {
        ExponentVector::new(self.ea * t, self.eb * t, self.ec * t, self.ed * t)
    }

    /// Exchanges the `b` and `c` exponents (the effect of conjugation).
    pub fn swap_bc(&self) -> Self {
        ExponentVector::new(self.ea, self.ec, self.eb, self.ed)
    }

    pub fn bump(&mut self, label: CellLabel) {
        match label {
            CellLabel::A => self.ea += 1,
            CellLabel::B => self.eb += 1,
            CellLabel::C => self.ec += 1,
            CellLabel::D => self.ed += 1,
        }
    }

    /// Image under `a ↦ rsq, b ↦ r⁻¹sq, c ↦ rs⁻¹q, d ↦ r⁻¹s⁻¹q`.
    pub fn specialize(&self) -> SignedTriple {
        let (a, b, c, d) = (
            i64::from(self.ea),
            i64::from(self.eb),
            i64::from(self.ec),
            i64::from(self.ed),
        );
        SignedTriple::new(a - b + c - d, a + b - c - d, self.total())
    }

    pub fn to_array(&self) -> [u32; 4] {
        [self.ea, self.eb, self.ec, self.ed]
    }
}

impl Add for ExponentVector {
    type Output = ExponentVector;

    fn add(self, rhs: Self) -> Self {
        ExponentVector::new(
            self.ea + rhs.ea,
            self.eb + rhs.eb,
            self.ec + rhs.ec,
            self.ed + rhs.ed,
        )
    }
}

impl AddAssign for ExponentVector {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

/// Exponents of `r^er s^es q^eq`; `r` and `s` may carry negative powers.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct SignedTriple {
    pub er: i64,
    pub es: i64,
    pub eq: u32,
}

impl SignedTriple {
    pub const ZERO: SignedTriple = SignedTriple::new(0, 0, 0);

    pub const fn new(er: i64, es: i64, eq: u32) -> Self {
        SignedTriple { er, es, eq }
    }

    pub fn scaled(&self, t: u32) -> Self {
        SignedTriple::new(self.er * i64::from(t), self.es * i64::from(t), self.eq * t)
    }
}

impl Add for SignedTriple {
    type Output = SignedTriple;

    fn add(self, rhs: Self) -> Self {
        SignedTriple::new(self.er + rhs.er, self.es + rhs.es, self.eq + rhs.eq)
    }
}
