//! Characters of `G = (Z/2)^l` and representation-indexed combinatorics.
//!
//! Every real irreducible representation of an elementary abelian 2-group is
//! one-dimensional and given by a character `g -> (-1)^{v.g}` for a bit-vector
//! `v`. The nontrivial ones form the index set `J` used by every ring in this
//! crate; `J` is ordered by ascending bit-vector value.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{Map, Value};

use crate::error::{Error, Result};

/// Largest group rank accepted anywhere in the crate.
pub const MAX_RANK: u32 = 16;
/// Largest total dimension accepted by [`fixed_summands`].
pub const MAX_SUMMAND_DIM: u32 = 64;
/// Largest result size accepted by [`fixed_summands`].
pub const MAX_SUMMAND_COUNT: u64 = 1_000_000;

/// A nontrivial character of `(Z/2)^l`, stored as its nonzero bit-vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Character {
    rank: u32,
    bits: u32,
}

pub(crate) fn check_rank(l: u32) -> Result<()> {
    if l == 0 || l > MAX_RANK {
        return Err(Error::InvalidParameter(format!(
            "group rank l must satisfy 1 <= l <= {MAX_RANK}, got {l}"
        )));
    }
    Ok(())
}

impl Character {
    pub fn new(rank: u32, bits: u32) -> Result<Self> {
        check_rank(rank)?;
        if bits == 0 {
            return Err(Error::InvalidParameter(
                "the trivial character is not an element of J".into(),
            ));
        }
        if bits >> rank != 0 {
            return Err(Error::InvalidParameter(format!(
                "bit-vector {bits:#b} does not fit in rank {rank}"
            )));
        }
        Ok(Character { rank, bits })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Real dimension; always one for this family of groups.
    pub fn dim(&self) -> u32 {
        1
    }

    /// Value of the character on the group element encoded by `g`.
    pub fn eval(&self, g: u32) -> i8 {
        if (self.bits & g).count_ones().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Canonical label `c<bits>`, most significant bit first.
    pub fn label(&self) -> String {
        format!("c{:0width$b}", self.bits, width = self.rank as usize)
    }

    /// Parse a label, inferring the rank from the number of digits.
    pub fn parse_label(s: &str) -> Result<Self> {
        let digits = s
            .strip_prefix('c')
            .filter(|d| !d.is_empty() && d.bytes().all(|b| b == b'0' || b == b'1'))
            .ok_or_else(|| Error::UnknownCharacter(s.to_string()))?;
        let rank = digits.len() as u32;
        if rank > MAX_RANK {
            return Err(Error::UnknownCharacter(s.to_string()));
        }
        let bits = u32::from_str_radix(digits, 2).map_err(|_| Error::UnknownCharacter(s.into()))?;
        Character::new(rank, bits).map_err(|_| Error::UnknownCharacter(s.to_string()))
    }

    /// Parse a label and require it to belong to rank `l`.
    pub fn parse_for_rank(s: &str, l: u32) -> Result<Self> {
        let c = Self::parse_label(s)?;
        if c.rank != l {
            return Err(Error::UnknownCharacter(format!("{s} (group rank is {l})")));
        }
        Ok(c)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for Character {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Character::parse_label(s)
    }
}

/// The set `J` in canonical order.
pub fn enumerate_characters(l: u32) -> Result<Vec<Character>> {
    check_rank(l)?;
    Ok((1..(1u32 << l)).map(|bits| Character { rank: l, bits }).collect())
}

/// A (possibly virtual) representation as a multiplicity vector over
/// `{trivial} ∪ J`. Zero multiplicities are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ReprVector {
    trivial: i64,
    mults: BTreeMap<Character, i64>,
}

impl ReprVector {
    pub fn new(trivial: i64, mults: impl IntoIterator<Item = (Character, i64)>) -> Self {
        let mut v = ReprVector {
            trivial,
            mults: BTreeMap::new(),
        };
        for (c, m) in mults {
            *v.mults.entry(c).or_insert(0) += m;
        }
        v.mults.retain(|_, m| *m != 0);
        v
    }

    pub fn trivial_mult(&self) -> i64 {
        self.trivial
    }

    /// `ν_V(W)`, the number of copies of `v` in this representation.
    pub fn multiplicity(&self, v: &Character) -> i64 {
        self.mults.get(v).copied().unwrap_or(0)
    }

    pub fn mults(&self) -> &BTreeMap<Character, i64> {
        &self.mults
    }

    /// Total (virtual) dimension `|W|`.
    pub fn dim(&self) -> i64 {
        self.trivial + self.mults.values().sum::<i64>()
    }

    /// Dimension of the fixed subspace `|W^G|`.
    pub fn fixed_dim(&self) -> i64 {
        self.trivial
    }

    /// True when no multiplicity is negative.
    pub fn is_honest(&self) -> bool {
        self.trivial >= 0 && self.mults.values().all(|m| *m >= 0)
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        if self.trivial != 0 {
            map.insert("trivial".into(), Value::from(self.trivial));
        }
        for (c, m) in &self.mults {
            map.insert(c.label(), Value::from(*m));
        }
        Value::Object(map)
    }

    pub fn from_json(value: &Value, l: u32) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Json("representation must be a JSON object".into()))?;
        let mut trivial = 0;
        let mut mults = Vec::new();
        for (k, v) in obj {
            let m = v
                .as_i64()
                .ok_or_else(|| Error::Json(format!("multiplicity of `{k}` is not an integer")))?;
            if k == "trivial" {
                trivial = m;
            } else {
                mults.push((Character::parse_for_rank(k, l)?, m));
            }
        }
        Ok(ReprVector::new(trivial, mults))
    }
}

impl fmt::Display for ReprVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.trivial != 0 {
            parts.push(format!("trivial:{}", self.trivial));
        }
        parts.extend(self.mults.iter().map(|(c, m)| format!("{c}:{m}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// `R = 1 ⊕ ⊕_{V∈J} V`.
pub fn regular_representation(l: u32) -> Result<ReprVector> {
    let chars = enumerate_characters(l)?;
    Ok(ReprVector::new(1, chars.into_iter().map(|c| (c, 1))))
}

/// `C(n + k - 1, k - 1)`, the number of weak compositions of `n` into `k`
/// parts, saturating at `u128::MAX`.
pub fn weak_composition_count(n: u64, parts: u64) -> u128 {
    if parts == 0 {
        return u128::from(n == 0);
    }
    // C(n + parts - 1, min(n, parts - 1)) by the multiplicative formula.
    let top = n as u128 + parts as u128 - 1;
    let k = (n as u128).min(parts as u128 - 1);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (top - i) / (i + 1) stays integral at each step.
        acc = match acc.checked_mul(top - i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// All honest representations of total dimension `n`, one per isomorphism
/// class, in descending lexicographic order of `(trivial, c_1, c_2, ...)`.
pub fn fixed_summands(n: u32, l: u32) -> Result<Vec<ReprVector>> {
    check_rank(l)?;
    let parts = 1u64 << l;
    let count = weak_composition_count(n as u64, parts);
    if n > MAX_SUMMAND_DIM || count > MAX_SUMMAND_COUNT as u128 {
        return Err(Error::EnumerationTooLarge {
            count: if count == u128::MAX {
                "more than 2^128".into()
            } else {
                count.to_string()
            },
            limit: MAX_SUMMAND_COUNT,
        });
    }
    let chars = enumerate_characters(l)?;
    let mut out = Vec::with_capacity(count as usize);
    let mut slots = vec![0i64; parts as usize];
    compositions(n as i64, 0, &mut slots, &mut |s| {
        out.push(ReprVector::new(s[0], chars.iter().copied().zip(s[1..].iter().copied())));
    });
    Ok(out)
}

fn compositions(rest: i64, pos: usize, slots: &mut [i64], emit: &mut impl FnMut(&[i64])) {
    if pos + 1 == slots.len() {
        slots[pos] = rest;
        emit(slots);
        return;
    }
    for v in (0..=rest).rev() {
        slots[pos] = v;
        compositions(rest - v, pos + 1, slots, emit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(l: u32) -> Vec<String> {
        enumerate_characters(l).unwrap().iter().map(|c| c.label()).collect()
    }

    #[test]
    fn characters_small_ranks() {
        assert_eq!(labels(1), ["c1"]);
        assert_eq!(labels(2), ["c01", "c10", "c11"]);
        assert_eq!(labels(3).len(), 7);
        for l in 1..=10 {
            assert_eq!(enumerate_characters(l).unwrap().len(), (1 << l) - 1);
        }
    }

    #[test]
    fn rank_bounds() {
        assert!(matches!(enumerate_characters(0), Err(Error::InvalidParameter(_))));
        assert!(matches!(enumerate_characters(17), Err(Error::InvalidParameter(_))));
        assert!(enumerate_characters(16).is_ok());
    }

    #[test]
    fn label_round_trip_and_eval() {
        for c in enumerate_characters(3).unwrap() {
            assert_eq!(Character::parse_label(&c.label()).unwrap(), c);
            assert_eq!(c.eval(0), 1);
        }
        let c = Character::parse_label("c10").unwrap();
        assert_eq!(c.eval(0b10), -1);
        assert_eq!(c.eval(0b01), 1);
        assert!(Character::parse_label("c00").is_err());
        assert!(Character::parse_label("d1").is_err());
        assert!(Character::parse_for_rank("c1", 2).is_err());
    }

    #[test]
    fn regular_rep() {
        let r = regular_representation(1).unwrap();
        assert_eq!(r.to_json().to_string(), r#"{"trivial":1,"c1":1}"#);
        assert_eq!(r.dim(), 2);
        let r = regular_representation(2).unwrap();
        assert_eq!(
            r.to_json().to_string(),
            r#"{"trivial":1,"c01":1,"c10":1,"c11":1}"#
        );
        for l in 1..=6 {
            let r = regular_representation(l).unwrap();
            assert_eq!(r.dim(), 1 << l);
            assert_eq!(r.fixed_dim(), 1);
        }
    }

    #[test]
    fn summands_examples() {
        let s = fixed_summands(2, 1).unwrap();
        let js: Vec<_> = s.iter().map(|r| r.to_json().to_string()).collect();
        assert_eq!(js, [r#"{"trivial":2}"#, r#"{"trivial":1,"c1":1}"#, r#"{"c1":2}"#]);
        assert_eq!(fixed_summands(0, 3).unwrap(), vec![ReprVector::default()]);
        assert_eq!(fixed_summands(3, 2).unwrap().len(), 20);
    }

    #[test]
    fn summands_too_large() {
        assert!(matches!(fixed_summands(65, 1), Err(Error::EnumerationTooLarge { .. })));
        assert!(matches!(fixed_summands(64, 16), Err(Error::EnumerationTooLarge { .. })));
    }

    #[test]
    fn summands_distinct_and_valid() {
        let s = fixed_summands(4, 2).unwrap();
        let set: std::collections::HashSet<_> = s.iter().cloned().collect();
        assert_eq!(set.len(), s.len());
        assert!(s.iter().all(|r| r.is_honest() && r.dim() == 4));
    }

    #[test]
    fn repr_json_round_trip() {
        let c = Character::parse_label("c10").unwrap();
        let v = ReprVector::new(-1, [(c, 3)]);
        assert_eq!(ReprVector::from_json(&v.to_json(), 2).unwrap(), v);
        assert!(!v.is_honest());
        assert_eq!(v.dim(), 2);
    }
}
