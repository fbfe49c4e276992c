//! The coefficient ring `MO_* = F_2[x_i : i ≠ 2^k - 1]`, kept purely formal.

use crate::error::{Error, Result};

pub const MAX_GENERATOR_DEGREE: u32 = 256;
pub const MAX_HILBERT_DEGREE: u32 = 64;

/// True for the degrees carrying a polynomial generator: `i >= 2` and
/// `i + 1` not a power of two.
pub fn is_admissible(i: u32) -> bool {
    i >= 2 && !(i + 1).is_power_of_two()
}

pub fn generator_name(i: u32) -> String {
    format!("x{i}")
}

pub fn generator_degrees_up_to(n: u32) -> Result<Vec<u32>> {
    if n > MAX_GENERATOR_DEGREE {
        return Err(Error::BoundExceeded(format!(
            "generator degree bound must be at most {MAX_GENERATOR_DEGREE}, got {n}"
        )));
    }
    Ok((2..=n).filter(|&i| is_admissible(i)).collect())
}

/// `dim_{F_2} MO_n`: partitions of `n` into admissible parts.
pub fn hilbert_dimension(n: u32) -> Result<u64> {
    if n > MAX_HILBERT_DEGREE {
        return Err(Error::BoundExceeded(format!(
            "Hilbert function is available up to degree {MAX_HILBERT_DEGREE}, got {n}"
        )));
    }
    Ok(hilbert_series(n)[n as usize])
}

/// Coefficients `dim MO_0, ..., dim MO_n`.
pub fn hilbert_series(n: u32) -> Vec<u64> {
    let n = n as usize;
    let mut ways = vec![0u64; n + 1];
    ways[0] = 1;
    for part in (2..=n as u32).filter(|&i| is_admissible(i)) {
        let part = part as usize;
        for total in part..=n {
            ways[total] += ways[total - part];
        }
    }
    ways
}

/// A table of the generators `x_i` up to a maximal degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoGeneratorTable {
    pub max_degree: u32,
    pub generator_degrees: Vec<u32>,
}

impl MoGeneratorTable {
    pub fn new(max_degree: u32) -> Result<Self> {
        Ok(MoGeneratorTable {
            max_degree,
            generator_degrees: generator_degrees_up_to(max_degree)?,
        })
    }
}
