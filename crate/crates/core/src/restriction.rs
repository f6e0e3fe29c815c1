//! Restricted partition classes `Par(i, k; R, ρ)`: parts congruent to `i`
//! modulo `k`, where each part value `r` in the domain of `ρ` occurs fewer
//! than `ρ(r)` times.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RestrictionSpec {
    residue: u32,
    modulus: u32,
    rho: BTreeMap<u32, u32>,
    uniform: Option<u32>,
}

impl RestrictionSpec {
    /// Residue `i` is normalized to `1..=k`.
    pub fn new(residue: u32, modulus: u32) -> Result<Self, ParseError> {
        if modulus == 0 {
            return Err(ParseError::BadSpec("modulus must be positive".into()));
        }
        if residue == 0 || residue > modulus {
            return Err(ParseError::BadSpec(format!(
                "residue must lie in 1..={modulus}, got {residue}"
            )));
        }
        Ok(RestrictionSpec {
            residue,
            modulus,
            rho: BTreeMap::new(),
            uniform: None,
        })
    }

    /// Adds `ρ(part) = bound`.
    pub fn with_bound(mut self, part: u32, bound: u32) -> Result<Self, ParseError> {
        if part == 0 || !self.admits(part) {
            return Err(ParseError::BadSpec(format!(
                "{part} is not congruent to {} mod {}",
                self.residue, self.modulus
            )));
        }
        check_bound(bound)?;
        if self.rho.insert(part, bound).is_some() {
            return Err(ParseError::BadSpec(format!("duplicate bound for {part}")));
        }
        Ok(self)
    }

    /// Bounds every part of the class by `bound`; explicit entries take
    /// precedence.
    pub fn with_uniform(mut self, bound: u32) -> Result<Self, ParseError> {
        check_bound(bound)?;
        self.uniform = Some(bound);
        Ok(self)
    }

    pub fn residue(&self) -> u32 {
        self.residue
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn explicit_bounds(&self) -> &BTreeMap<u32, u32> {
        &self.rho
    }

    pub fn uniform_bound(&self) -> Option<u32> {
        self.uniform
    }

    /// Whether `part` lies in the congruence class.
    pub fn admits(&self, part: u32) -> bool {
        part > 0 && part % self.modulus == self.residue % self.modulus
    }

    /// `ρ(part)`, or `None` when `part` is outside the domain.
    pub fn bound(&self, part: u32) -> Option<u32> {
        if !self.admits(part) {
            return None;
        }
        self.rho.get(&part).copied().or(self.uniform)
    }

    /// Domain of `ρ` intersected with `1..=max_part`, ascending.
    pub fn domain_up_to(&self, max_part: u32) -> Vec<(u32, u32)> {
        match self.uniform {
            Some(_) => self
                .class_parts(max_part)
                .filter_map(|r| self.bound(r).map(|b| (r, b)))
                .collect(),
            None => self
                .rho
                .iter()
                .filter(|(&r, _)| r <= max_part)
                .map(|(&r, &b)| (r, b))
                .collect(),
        }
    }

    /// Part values `i, i+k, i+2k, …` up to `max_part`.
    pub fn class_parts(&self, max_part: u32) -> impl Iterator<Item = u32> {
        (self.residue..=max_part).step_by(self.modulus as usize)
    }

    /// Membership of `p` in `Par(i, k; R, ρ)`.
    pub fn contains(&self, p: &Partition) -> bool {
        p.multiplicities().iter().all(|&(value, mult)| {
            self.admits(value) && self.bound(value).is_none_or(|b| mult < b as usize)
        })
    }

    /// Same class without the multiplicity restriction.
    pub fn unrestricted(&self) -> RestrictionSpec {
        RestrictionSpec {
            residue: self.residue,
            modulus: self.modulus,
            rho: BTreeMap::new(),
            uniform: None,
        }
    }

    pub fn is_unrestricted(&self) -> bool {
        self.rho.is_empty() && self.uniform.is_none()
    }
}

fn check_bound(bound: u32) -> Result<(), ParseError> {
    if bound < 2 || !bound.is_multiple_of(2) {
        return Err(ParseError::BadSpec(format!(
            "bounds must be even and at least 2, got {bound}"
        )));
    }
    Ok(())
}

impl fmt::Display for RestrictionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.residue, self.modulus)?;
        if !self.rho.is_empty() {
            f.write_str(";")?;
            for (idx, (r, b)) in self.rho.iter().enumerate() {
                if idx > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{r}:{b}")?;
            }
        }
        if let Some(b) = self.uniform {
            write!(f, ";all:{b}")?;
        }
        Ok(())
    }
}

impl FromStr for RestrictionSpec {
    type Err = ParseError;

    /// `"i/k"`, then optional `";r1:rho1,r2:rho2"`, then optional `";all:rho"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut segments = s.trim().split(';');
        let head = segments.next().unwrap_or_default();
        let (i, k) = head
            .split_once('/')
            .ok_or_else(|| ParseError::BadSpec(format!("expected i/k, got {head:?}")))?;
        let mut spec = RestrictionSpec::new(parse_num(i)?, parse_num(k)?)?;
        let mut seen_uniform = false;
        for segment in segments {
            let segment = segment.trim();
            if let Some(bound) = segment.strip_prefix("all:") {
                if seen_uniform {
                    return Err(ParseError::BadSpec("repeated all: segment".into()));
                }
                seen_uniform = true;
                spec = spec.with_uniform(parse_num(bound)?)?;
                continue;
            }
            if seen_uniform {
                return Err(ParseError::BadSpec("all: must be the last segment".into()));
            }
            for entry in segment.split(',') {
                let (r, b) = entry
                    .split_once(':')
                    .ok_or_else(|| ParseError::BadSpec(format!("expected r:rho, got {entry:?}")))?;
                spec = spec.with_bound(parse_num(r)?, parse_num(b)?)?;
            }
        }
        Ok(spec)
    }
}

fn parse_num(s: &str) -> Result<u32, ParseError> {
    let s = s.trim();
    s.parse::<u32>()
        .map_err(|_| ParseError::BadSpec(format!("invalid number {s:?}")))
}
