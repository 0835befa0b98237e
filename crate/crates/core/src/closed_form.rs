//! Known closed forms for Mullineux images of one- and two-row partitions.

use crate::partition::{Partition, PrimeParam};

/// `(n)^M = ((a+1)^b, a^{p-1-b})` where `n = a(p-1) + b`, `0 <= b < p-1`.
pub fn one_row_image(n: usize, p: PrimeParam) -> Partition {
    let q = p.modulus() - 1;
    let (a, b) = (n / q, n % q);
    Partition::from_exponents(&[(a + 1, b), (a, q - b)]).expect("closed form is a partition")
}

/// `(n-i, i)^M = ((a+1)^b, a^{4-b}, 1^i)` at `p = 5`, where `n - i = 4a + b`,
/// `0 <= b <= 3`.
///
/// Valid once `n >= 12`; for `i >= 1` it breaks down on smaller `n`
/// (e.g. `(1,1)^M = (2)`). `None` when `(n-i, i)` is not a partition.
pub fn two_row_image_p5(n: usize, i: usize) -> Option<Partition> {
    if i > 4 || 2 * i > n {
        return None;
    }
    let (a, b) = ((n - i) / 4, (n - i) % 4);
    Partition::from_exponents(&[(a + 1, b), (a, 4 - b), (1, i)]).ok()
}

/// `(n-i, i)`.
pub fn two_row(n: usize, i: usize) -> Partition {
    Partition::new([n - i, i].into_iter().filter(|&x| x > 0).collect()).expect("n - i >= i")
}

/// Which `(n, i)` the two-row closed form is checked on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwoRowRange {
    /// Every `0 <= i <= 4` with `2i <= n`.
    AllSizes,
    /// `i = 0` for every `n`, `i >= 1` only from `n >= 12` on.
    FromTwelve,
}

impl TwoRowRange {
    pub fn includes(self, n: usize, i: usize) -> bool {
        if i > 4 || 2 * i > n {
            return false;
        }
        match self {
            TwoRowRange::AllSizes => true,
            TwoRowRange::FromTwelve => i == 0 || n >= 12,
        }
    }
}
