//! Text forms shared by the CLI and its tests.

use crate::partition::{ExponentVector, Partition, SignedTriple};
use crate::series::{Exponent, Series};

/// Monomial display: variables in order, caret exponents, exponent 1 and
/// unit factors omitted, `1` for the empty monomial.
pub trait Monomial {
    fn monomial(&self) -> String;
}

fn join_powers<T: PartialEq + Default + ToString + Copy>(vars: &[(&str, T)], one: T) -> String {
    let parts: Vec<String> = vars
        .iter()
        .filter(|(_, e)| *e != T::default())
        .map(|(v, e)| {
            if *e == one {
                (*v).to_string()
            } else {
                format!("{v}^{}", e.to_string())
            }
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}

impl Monomial for ExponentVector {
    fn monomial(&self) -> String {
        join_powers(
            &[
                ("a", self.ea),
                ("b", self.eb),
                ("c", self.ec),
                ("d", self.ed),
            ],
            1,
        )
    }
}

impl Monomial for SignedTriple {
    fn monomial(&self) -> String {
        join_powers(
            &[("r", self.er), ("s", self.es), ("q", i64::from(self.eq))],
            1,
        )
    }
}

/// One `coefficient<TAB>monomial` line per term, in canonical order, after a
/// `truncation N` header.
pub fn series_text<E: Exponent + Monomial>(s: &Series<E>) -> String {
    let mut out = format!("truncation {}\n", s.truncation());
    for (e, c) in s.terms() {
        out.push_str(&format!("{c}\t{}\n", e.monomial()));
    }
    out
}

/// `alpha=… beta=… gamma=… delta=… theta=… theta'=… n=… w=…`
pub fn stats_line(p: &Partition) -> String {
    let e = p.statistics();
    format!(
        "alpha={} beta={} gamma={} delta={} theta={} theta'={} n={} w={}",
        e.ea,
        e.eb,
        e.ec,
        e.ed,
        p.odd_part_count(),
        p.conjugate().odd_part_count(),
        p.size(),
        e.monomial()
    )
}
