//! Block decompositions of gap-class partitions and the two
//! weight-preserving bijections built on them.
//!
//! Rows are paired from the top, `(λ1, λ2), (λ3, λ4), …`, with a zero row
//! appended when the number of parts is odd. The top row of every pair sits
//! at an odd level, so a block's weight depends only on its two lengths.
//!
//! * `bijection_f` strips width-`2k` rectangles of odd height from the gaps
//!   at odd levels, leaving a partition whose pairs differ by less than `2k`.
//! * `bijection_g` splits each part's multiplicity into a remainder below
//!   `ρ(r)` and a multiple of `ρ(r)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{BlockError, ParseError};
use crate::partition::{cell_label, ExponentVector, Partition};
use crate::restriction::RestrictionSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BlockKind {
    /// Two equal rows.
    I,
    /// Top row longer than the bottom row.
    II,
}

impl fmt::Display for BlockKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BlockKind::I => "I",
            BlockKind::II => "II",
        })
    }
}

/// A pair of rows of height two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Block {
    top: u32,
    bottom: u32,
    kind: BlockKind,
}

impl Block {
    pub fn new(top: u32, bottom: u32, kind: BlockKind) -> Result<Self, BlockError> {
        let ok = match kind {
            BlockKind::I => top == bottom && top >= 1,
            BlockKind::II => top > bottom,
        };
        if !ok {
            return Err(BlockError::InvalidBlock { top, bottom });
        }
        Ok(Block { top, bottom, kind })
    }

    /// Classifies a row pair.
    pub fn from_rows(top: u32, bottom: u32) -> Result<Self, BlockError> {
        let kind = if top == bottom {
            BlockKind::I
        } else {
            BlockKind::II
        };
        Block::new(top, bottom, kind)
    }

    pub fn top(&self) -> u32 {
        self.top
    }

    pub fn bottom(&self) -> u32 {
        self.bottom
    }

    pub fn kind(&self) -> BlockKind {
        self.kind
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {},{}", self.kind, self.top, self.bottom)
    }
}

/// Weight of a block whose top row sits at an odd level.
pub fn block_weight(block: &Block) -> ExponentVector {
    let (t, b) = (block.top, block.bottom);
    ExponentVector::new(t.div_ceil(2), t / 2, b.div_ceil(2), b / 2)
}

/// Label counts of a `height × width` rectangle whose top-left cell is at
/// 1-based `(first_row, first_col)`.
pub fn rectangle_weight(first_row: u32, height: u32, first_col: u32, width: u32) -> ExponentVector {
    let mut e = ExponentVector::ZERO;
    for row in first_row..first_row + height {
        for col in first_col..first_col + width {
            e.bump(cell_label(row, col));
        }
    }
    e
}

/// Cell count of a width-`2k`, odd-height rectangle starting at row 1 and
/// column 1.
pub fn type3_weight(height: u32, k: u32) -> Result<ExponentVector, BlockError> {
    type3_weight_at(height, k, 0)
}

/// As [`type3_weight`], with the rectangle shifted right by `offset` columns.
pub fn type3_weight_at(height: u32, k: u32, offset: u32) -> Result<ExponentVector, BlockError> {
    if height.is_multiple_of(2) {
        return Err(BlockError::InvalidHeight(height));
    }
    if k == 0 {
        return Err(BlockError::ZeroGap);
    }
    Ok(rectangle_weight(1, height, offset + 1, 2 * k))
}

/// Blocks in stacking order, top to bottom.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockDecomposition {
    blocks: Vec<Block>,
    gap: u32,
}

impl BlockDecomposition {
    /// Checks stackability, gap bounds and Type II uniqueness.
    pub fn new(blocks: Vec<Block>, gap: u32) -> Result<Self, BlockError> {
        if gap == 0 {
            return Err(BlockError::ZeroGap);
        }
        let mut tops = std::collections::BTreeSet::new();
        for block in blocks.iter().filter(|b| b.kind == BlockKind::II) {
            if !tops.insert(block.top) {
                return Err(BlockError::DuplicateTypeII(block.top));
            }
            if block.top - block.bottom > gap {
                return Err(BlockError::InvalidBlock {
                    top: block.top,
                    bottom: block.bottom,
                });
            }
        }
        for (idx, block) in blocks.iter().enumerate() {
            if block.bottom == 0 && idx + 1 != blocks.len() {
                return Err(BlockError::NotStackable(idx));
            }
            if let Some(next) = blocks.get(idx + 1) {
                if block.bottom < next.top {
                    return Err(BlockError::NotStackable(idx));
                }
            }
        }
        Ok(BlockDecomposition { blocks, gap })
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn gap(&self) -> u32 {
        self.gap
    }

    pub fn weight(&self) -> ExponentVector {
        self.blocks
            .iter()
            .fold(ExponentVector::ZERO, |acc, b| acc + block_weight(b))
    }
}

impl fmt::Display for BlockDecomposition {
    /// One block per line, e.g. `II 6,5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in &self.blocks {
            writeln!(f, "{block}")?;
        }
        Ok(())
    }
}

pub fn decompose(p: &Partition, k: u32) -> Result<BlockDecomposition, BlockError> {
    if k == 0 {
        return Err(BlockError::ZeroGap);
    }
    if !p.in_gap_class(k) {
        return Err(BlockError::NotInGapClass(k));
    }
    let blocks = p
        .row_pairs()
        .into_iter()
        .map(|(top, bottom)| Block::from_rows(top, bottom))
        .collect::<Result<Vec<_>, _>>()?;
    BlockDecomposition::new(blocks, k)
}

pub fn recompose(d: &BlockDecomposition) -> Partition {
    let rows = d
        .blocks
        .iter()
        .flat_map(|b| [b.top, b.bottom])
        .collect::<Vec<_>>();
    Partition::from_unsorted(rows)
}

/// Removed width-`2k` rectangles, keyed by (odd) height.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct StripRecord {
    removed: BTreeMap<u32, u32>,
}

impl StripRecord {
    pub fn new(removed: BTreeMap<u32, u32>) -> Result<Self, BlockError> {
        if let Some(&h) = removed.keys().find(|&&h| h % 2 == 0) {
            return Err(BlockError::InvalidHeight(h));
        }
        Ok(StripRecord {
            removed: removed.into_iter().filter(|&(_, c)| c > 0).collect(),
        })
    }

    pub fn empty() -> Self {
        StripRecord::default()
    }

    pub fn is_empty(&self) -> bool {
        self.removed.is_empty()
    }

    /// `(height, count)` pairs, ascending by height.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.removed.iter().map(|(&h, &c)| (h, c))
    }

    pub fn count(&self, height: u32) -> u32 {
        self.removed.get(&height).copied().unwrap_or(0)
    }

    pub fn max_height(&self) -> u32 {
        self.removed.keys().next_back().copied().unwrap_or(0)
    }

    /// Total weight of the removed rectangles.
    pub fn weight(&self, k: u32) -> Result<ExponentVector, BlockError> {
        self.entries()
            .try_fold(ExponentVector::ZERO, |acc, (h, c)| {
                Ok(acc + type3_weight(h, k)?.scaled(c))
            })
    }

    /// For `k = 1`: the partition ν whose parts are the heights of the
    /// removed columns (two columns per rectangle).
    pub fn to_nu(&self) -> Partition {
        let parts = self
            .entries()
            .flat_map(|(h, c)| std::iter::repeat_n(h, 2 * c as usize))
            .collect();
        Partition::from_unsorted(parts)
    }

    /// Inverse of [`StripRecord::to_nu`]: ν must have odd parts, each
    /// repeated an even number of times.
    pub fn from_nu(nu: &Partition) -> Result<Self, BlockError> {
        let mut removed = BTreeMap::new();
        for (value, mult) in nu.multiplicities() {
            if value % 2 == 0 {
                return Err(BlockError::InvalidNu {
                    part: value,
                    reason: "height must be odd".into(),
                });
            }
            if mult % 2 != 0 {
                return Err(BlockError::InvalidNu {
                    part: value,
                    reason: "must occur an even number of times".into(),
                });
            }
            removed.insert(value, (mult / 2) as u32);
        }
        StripRecord::new(removed)
    }
}

impl fmt::Display for StripRecord {
    /// One line per height, e.g. `h3 x2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (h, c) in self.entries() {
            writeln!(f, "h{h} x{c}")?;
        }
        Ok(())
    }
}

impl FromStr for StripRecord {
    type Err = ParseError;

    /// `"height:count,…"`; the empty string is the empty record.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut removed = BTreeMap::new();
        if !s.is_empty() {
            for entry in s.split(',') {
                let (h, c) = entry.split_once(':').ok_or_else(|| {
                    ParseError::BadRecord(format!("expected h:count, got {entry:?}"))
                })?;
                let parse = |t: &str| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|_| ParseError::BadRecord(format!("invalid number {t:?}")))
                };
                let (h, c) = (parse(h)?, parse(c)?);
                if h == 0 || removed.insert(h, c).is_some() {
                    return Err(ParseError::BadRecord(format!("bad or repeated height {h}")));
                }
            }
        }
        StripRecord::new(removed).map_err(|e| ParseError::BadRecord(e.to_string()))
    }
}

/// Whether no pair of `p` (zero padded) differs by `2k` or more.
pub fn is_stripped(p: &Partition, k: u32) -> bool {
    p.row_pairs()
        .iter()
        .all(|&(top, bottom)| top - bottom < 2 * k)
}

fn check_residue(p: &Partition, k: u32) -> Result<(), BlockError> {
    if k == 0 {
        return Err(BlockError::ZeroGap);
    }
    p.residue_mod(k)
        .map(|_| ())
        .ok_or(BlockError::ResidueViolation(k))
}

/// `λ ↦ (μ, rec)`: at row pair `m` with gap `G`, removes `⌊⌊G/k⌋/2⌋`
/// width-`2k` rectangles of height `2m-1`.
pub fn bijection_f(p: &Partition, k: u32) -> Result<(Partition, StripRecord), BlockError> {
    check_residue(p, k)?;
    let counts: Vec<u32> = p
        .row_pairs()
        .iter()
        .map(|&(top, bottom)| (top - bottom) / k / 2)
        .collect();
    let mu = shift_rows(p, &counts, k, false);
    let removed = counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(m, &c)| (2 * m as u32 + 1, c))
        .collect();
    Ok((mu, StripRecord { removed }))
}

/// Reinserts the rectangles of `rec` into `mu`.
pub fn bijection_f_inverse(
    mu: &Partition,
    rec: &StripRecord,
    k: u32,
) -> Result<Partition, BlockError> {
    check_residue(mu, k)?;
    if let Some((h, _)) = rec.entries().find(|&(h, _)| h % 2 == 0) {
        return Err(BlockError::InvalidHeight(h));
    }
    if !is_stripped(mu, k) {
        return Err(BlockError::NotStripped(k));
    }
    let pairs = (mu.len().max(rec.max_height() as usize)).div_ceil(2);
    let counts: Vec<u32> = (0..pairs as u32).map(|m| rec.count(2 * m + 1)).collect();
    let lambda = shift_rows(mu, &counts, k, true);
    check_residue(&lambda, k)?;
    Ok(lambda)
}

/// Adds (or removes) `2k · counts[m]` cells to each of the rows `1..=2m+1`.
fn shift_rows(p: &Partition, counts: &[u32], k: u32, insert: bool) -> Partition {
    let rows = p.len().max(2 * counts.len());
    let mut suffix = vec![0u32; counts.len() + 1];
    for m in (0..counts.len()).rev() {
        suffix[m] = suffix[m + 1] + counts[m];
    }
    let parts = (1..=rows)
        .map(|r| {
            // pair m (0-based) covers rows 1..=2m+1
            let delta = 2 * k * suffix.get(r / 2).copied().unwrap_or(0);
            let row = p.row(r);
            if insert {
                row + delta
            } else {
                row - delta
            }
        })
        .collect();
    Partition::from_unsorted(parts)
}

/// `λ ↦ (μ, ν)`: for each `r` in the domain of `ρ` with multiplicity `m`,
/// ν takes `ρ(r)·⌊m/ρ(r)⌋` copies and μ keeps `m mod ρ(r)`.
pub fn bijection_g(
    p: &Partition,
    spec: &RestrictionSpec,
) -> Result<(Partition, Partition), BlockError> {
    let mut mu = Vec::new();
    let mut nu = Vec::new();
    for (value, mult) in p.multiplicities() {
        if !spec.admits(value) {
            return Err(BlockError::PartOutsideClass {
                part: value,
                residue: spec.residue(),
                modulus: spec.modulus(),
            });
        }
        let kept = match spec.bound(value) {
            Some(b) => mult % b as usize,
            None => mult,
        };
        mu.extend(std::iter::repeat_n(value, kept));
        nu.extend(std::iter::repeat_n(value, mult - kept));
    }
    Ok((
        Partition::from_sorted_unchecked(mu),
        Partition::from_sorted_unchecked(nu),
    ))
}

pub fn bijection_g_inverse(
    mu: &Partition,
    nu: &Partition,
    spec: &RestrictionSpec,
) -> Result<Partition, BlockError> {
    if !spec.contains(mu) {
        return Err(BlockError::NotRestricted(spec.to_string()));
    }
    for (value, mult) in nu.multiplicities() {
        let bound = spec.bound(value).ok_or_else(|| BlockError::InvalidNu {
            part: value,
            reason: "not in the domain of rho".into(),
        })?;
        if mult % bound as usize != 0 {
            return Err(BlockError::InvalidNu {
                part: value,
                reason: format!("multiplicity {mult} is not a multiple of {bound}"),
            });
        }
    }
    let merged = mu.parts().iter().chain(nu.parts()).copied().collect();
    Ok(Partition::from_unsorted(merged))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn blk(top: u32, bottom: u32) -> Block {
        Block::from_rows(top, bottom).unwrap()
    }

    fn ev(a: u32, b: u32, c: u32, d: u32) -> ExponentVector {
        ExponentVector::new(a, b, c, d)
    }

    #[test]
    fn decompose_examples() {
        let d = decompose(&p("9,9,6,5,5,5,5,5,2,1,1"), 1).unwrap();
        let expected = [
            (9, 9, BlockKind::I),
            (6, 5, BlockKind::II),
            (5, 5, BlockKind::I),
            (5, 5, BlockKind::I),
            (2, 1, BlockKind::II),
            (1, 0, BlockKind::II),
        ];
        let got: Vec<_> = d
            .blocks()
            .iter()
            .map(|b| (b.top(), b.bottom(), b.kind()))
            .collect();
        assert_eq!(got, expected);
        assert!(decompose(&p(""), 1).unwrap().blocks().is_empty());
        let d = decompose(&p("3,3,3,1"), 2).unwrap();
        assert_eq!(d.blocks(), &[blk(3, 3), blk(3, 1)]);
        assert_eq!(
            decompose(&p("14,11,11,6,3,3,3,1"), 1),
            Err(BlockError::NotInGapClass(1))
        );
    }

    #[test]
    fn recompose_examples() {
        let fig1 = p("9,9,6,5,5,5,5,5,2,1,1");
        assert_eq!(recompose(&decompose(&fig1, 1).unwrap()), fig1);
        assert_eq!(
            recompose(&BlockDecomposition::new(vec![], 1).unwrap()),
            p("")
        );
        let two = BlockDecomposition::new(vec![blk(5, 5), blk(5, 5)], 1).unwrap();
        assert_eq!(recompose(&two), p("5,5,5,5"));
    }

    #[test]
    fn recompose_rejects_bad_sequences() {
        assert_eq!(
            BlockDecomposition::new(vec![blk(3, 2), blk(5, 5)], 1),
            Err(BlockError::NotStackable(0))
        );
        assert_eq!(
            BlockDecomposition::new(vec![blk(3, 2), blk(3, 2)], 1),
            Err(BlockError::DuplicateTypeII(3))
        );
        assert_eq!(
            BlockDecomposition::new(vec![blk(1, 0), blk(1, 1)], 1),
            Err(BlockError::NotStackable(0))
        );
        assert!(BlockDecomposition::new(vec![blk(5, 3)], 1).is_err());
        assert!(Block::new(3, 2, BlockKind::I).is_err());
        assert!(Block::new(2, 2, BlockKind::II).is_err());
        assert!(Block::new(0, 0, BlockKind::I).is_err());
    }

    #[test]
    fn block_weights() {
        assert_eq!(block_weight(&blk(4, 4)), ev(2, 2, 2, 2));
        assert_eq!(block_weight(&blk(3, 2)), ev(2, 1, 1, 1));
        assert_eq!(block_weight(&blk(1, 0)), ev(1, 0, 0, 0));
    }

    #[test]
    fn type3_examples() {
        assert_eq!(type3_weight(1, 1).unwrap(), ev(1, 1, 0, 0));
        assert_eq!(type3_weight(3, 1).unwrap(), ev(2, 2, 1, 1));
        assert_eq!(type3_weight(1, 2).unwrap(), ev(2, 2, 0, 0));
        assert_eq!(type3_weight(2, 1), Err(BlockError::InvalidHeight(2)));
        assert_eq!(type3_weight(0, 1), Err(BlockError::InvalidHeight(0)));
        assert_eq!(type3_weight(1, 0), Err(BlockError::ZeroGap));
    }

    #[test]
    fn figure_two() {
        let lambda = p("14,11,11,6,3,3,3,1");
        let (mu, rec) = bijection_f(&lambda, 1).unwrap();
        assert_eq!(mu, p("6,5,5,4,1,1,1,1"));
        assert_eq!(rec.entries().collect::<Vec<_>>(), [(1, 1), (3, 2), (7, 1)]);
        assert_eq!(rec.to_nu(), p("7,7,3,3,3,3,1,1"));
        assert_eq!(rec.to_string(), "h1 x1\nh3 x2\nh7 x1\n");
        assert_eq!(bijection_f_inverse(&mu, &rec, 1).unwrap(), lambda);
    }

    #[test]
    fn f_strips_as_many_rectangles_as_possible() {
        // gap 4 leaves room for two width-2 rectangles
        let (mu, rec) = bijection_f(&p("5,1"), 1).unwrap();
        assert_eq!(mu, p("1,1"));
        assert_eq!(rec.entries().collect::<Vec<_>>(), [(1, 2)]);
        assert_eq!(bijection_f_inverse(&mu, &rec, 1).unwrap(), p("5,1"));

        let gap_class = p("9,9,6,5,5,5,5,5,2,1,1");
        assert_eq!(
            bijection_f(&gap_class, 1).unwrap(),
            (gap_class.clone(), StripRecord::empty())
        );
        assert_eq!(
            bijection_f_inverse(&gap_class, &StripRecord::empty(), 1).unwrap(),
            gap_class
        );
    }

    #[test]
    fn f_can_empty_rows() {
        let (mu, rec) = bijection_f(&p("2,2,2"), 1).unwrap();
        assert_eq!(mu, p(""));
        assert_eq!(rec.entries().collect::<Vec<_>>(), [(3, 1)]);
        assert_eq!(bijection_f_inverse(&mu, &rec, 1).unwrap(), p("2,2,2"));
    }

    #[test]
    fn f_with_larger_gap() {
        // parts ≡ 1 mod 2: (9,1) has gap 8 = 4·2, two width-4 rectangles
        let (mu, rec) = bijection_f(&p("9,1"), 2).unwrap();
        assert_eq!(mu, p("1,1"));
        assert_eq!(rec.count(1), 2);
        // a lone last row of length k + i cannot be stripped further
        let (mu, rec) = bijection_f(&p("3"), 2).unwrap();
        assert_eq!(mu, p("3"));
        assert!(rec.is_empty());
        assert_eq!(
            bijection_f(&p("3,2"), 2),
            Err(BlockError::ResidueViolation(2))
        );
    }

    #[test]
    fn f_inverse_validation() {
        let rec: StripRecord = "1:1".parse().unwrap();
        assert_eq!(
            bijection_f_inverse(&p("3,1"), &rec, 1),
            Err(BlockError::NotStripped(1))
        );
        assert!("2:1".parse::<StripRecord>().is_err());
        assert!("1:1,1:2".parse::<StripRecord>().is_err());
        // new rows of length 2k break the residue of an odd-residue μ
        let rec: StripRecord = "3:1".parse().unwrap();
        assert_eq!(
            bijection_f_inverse(&p("1"), &rec, 2),
            Err(BlockError::ResidueViolation(2))
        );
    }

    #[test]
    fn nu_round_trip() {
        let rec: StripRecord = "1:1,3:2,7:1".parse().unwrap();
        assert_eq!(StripRecord::from_nu(&rec.to_nu()).unwrap(), rec);
        assert!(StripRecord::from_nu(&p("2,2")).is_err());
        assert!(StripRecord::from_nu(&p("3,3,3")).is_err());
    }

    #[test]
    fn g_examples() {
        let distinct: RestrictionSpec = "1/1;all:2".parse().unwrap();
        let (mu, nu) = bijection_g(&p("3,2,2,1,1,1"), &distinct).unwrap();
        assert_eq!((mu.clone(), nu.clone()), (p("3,1"), p("2,2,1,1")));
        assert_eq!(
            bijection_g_inverse(&mu, &nu, &distinct).unwrap(),
            p("3,2,2,1,1,1")
        );

        let (mu, nu) = bijection_g(&p("6,4,1"), &distinct).unwrap();
        assert_eq!((mu.clone(), nu.clone()), (p("6,4,1"), p("")));
        assert_eq!(
            bijection_g_inverse(&mu, &nu, &distinct).unwrap(),
            p("6,4,1")
        );

        let spec: RestrictionSpec = "1/2;5:4".parse().unwrap();
        let (mu, nu) = bijection_g(&p("5,5,5,5,5,1"), &spec).unwrap();
        assert_eq!((mu.clone(), nu.clone()), (p("5,1"), p("5,5,5,5")));
        assert_eq!(
            bijection_g_inverse(&mu, &nu, &spec).unwrap(),
            p("5,5,5,5,5,1")
        );
    }

    #[test]
    fn g_validation() {
        let spec: RestrictionSpec = "1/2;5:4".parse().unwrap();
        assert!(matches!(
            bijection_g(&p("4,1"), &spec),
            Err(BlockError::PartOutsideClass { part: 4, .. })
        ));
        assert!(matches!(
            bijection_g_inverse(&p("5,5,5,5"), &p(""), &spec),
            Err(BlockError::NotRestricted(_))
        ));
        assert!(matches!(
            bijection_g_inverse(&p("1"), &p("5,5"), &spec),
            Err(BlockError::InvalidNu { part: 5, .. })
        ));
        assert!(matches!(
            bijection_g_inverse(&p("1"), &p("3,3,3,3"), &spec),
            Err(BlockError::InvalidNu { part: 3, .. })
        ));
    }

    #[test]
    fn display_forms() {
        let d = decompose(&p("6,5,5,5"), 1).unwrap();
        assert_eq!(d.to_string(), "II 6,5\nI 5,5\n");
    }
}
