//! Oracles shared by the integration tests. None of them call into the
//! code paths they are used to check.
#![allow(dead_code)]

use fourparam::{cell_label, ExponentVector, Partition};

/// Label counts over every cell of the diagram.
pub fn cell_count_statistics(p: &Partition) -> ExponentVector {
    let mut e = ExponentVector::ZERO;
    for (r, &len) in p.parts().iter().enumerate() {
        for c in 1..=len {
            e.bump(cell_label(r as u32 + 1, c));
        }
    }
    e
}

/// Label counts of `rows` rows of the given lengths, the first at 1-based
/// row `first_row`, each starting at column `first_col`.
pub fn cell_count_rows(first_row: u32, first_col: u32, lengths: &[u32]) -> ExponentVector {
    let mut e = ExponentVector::ZERO;
    for (idx, &len) in lengths.iter().enumerate() {
        for c in first_col..first_col + len {
            e.bump(cell_label(first_row + idx as u32, c));
        }
    }
    e
}

/// `p(0..=n)` from the coefficients of `∏ 1/(1 - q^j)`.
pub fn euler_product_counts(n: usize) -> Vec<u64> {
    let mut coeffs = vec![0u64; n + 1];
    coeffs[0] = 1;
    for j in 1..=n {
        for m in j..=n {
            coeffs[m] += coeffs[m - j];
        }
    }
    coeffs
}

/// `p(0..=n)` from the pentagonal-number recurrence.
pub fn pentagonal_counts(n: usize) -> Vec<i64> {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n as i64 {
        let mut total = 0i64;
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > m {
                break;
            }
            let sign = if j % 2 == 1 { 1 } else { -1 };
            total += sign * p[(m - g1) as usize];
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= m {
                total += sign * p[(m - g2) as usize];
            }
        }
        p[m as usize] = total;
    }
    p
}

/// Number of partitions of `0..=n` into odd parts, from `∏ 1/(1 - q^(2j-1))`.
pub fn odd_part_counts(n: usize) -> Vec<u64> {
    let mut coeffs = vec![0u64; n + 1];
    coeffs[0] = 1;
    for j in (1..=n).step_by(2) {
        for m in j..=n {
            coeffs[m] += coeffs[m - j];
        }
    }
    coeffs
}

/// All partitions of `n` by plain recursion, in no particular order.
pub fn naive_partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
