//! JS-partitions: `p`-regular partitions with exactly one normal node.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mullineux::is_mullineux_fixed;
use crate::partition::{enumerate_partitions, Partition, PrimeParam};

/// `(a_1^{b_1}, ..., a_h^{b_h})` with `a_1 > ... > a_h >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExponentForm {
    pub pairs: Vec<(usize, usize)>,
}

impl ExponentForm {
    pub fn of(lambda: &Partition) -> Self {
        ExponentForm {
            pairs: lambda.exponent_form(),
        }
    }

    pub fn to_partition(&self) -> Result<Partition> {
        Partition::from_exponents(&self.pairs)
    }

    /// The suffix `(a_j^{b_j}, ..., a_h^{b_h})`, 0-based `j`.
    pub fn suffix(&self, j: usize) -> ExponentForm {
        ExponentForm {
            pairs: self.pairs[j..].to_vec(),
        }
    }
}

/// JS test by the congruence `a_i - a_{i+1} + b_i + b_{i+1} ≡ 0 (mod p)`
/// on consecutive exponent pairs.
pub fn is_js_arith(lambda: &Partition, p: PrimeParam) -> Result<bool> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    lambda.require_regular(p)?;
    let m = p.modulus();
    Ok(lambda
        .exponent_form()
        .windows(2)
        .all(|w| (w[0].0 - w[1].0 + w[0].1 + w[1].1) % m == 0))
}

/// All `p`-regular JS-partitions of `n`, descending lexicographic, optionally
/// only the Mullineux-fixed ones.
pub fn enumerate_js(n: usize, p: PrimeParam, mullineux_fixed_only: bool) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }
    for lambda in enumerate_partitions(n, p, true) {
        if !is_js_arith(&lambda, p)? {
            continue;
        }
        if mullineux_fixed_only && !is_mullineux_fixed(&lambda, p)? {
            continue;
        }
        out.push(lambda);
    }
    Ok(out)
}
