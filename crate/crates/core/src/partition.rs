//! Integer partitions, nodes, residues and the prime parameter.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An odd prime `p >= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct PrimeParam(u32);

impl PrimeParam {
    pub fn new(p: u32) -> Result<Self> {
        let prime = p >= 2
            && (2..)
                .take_while(|d| d * d <= p)
                .all(|d| !p.is_multiple_of(d));
        if !prime || p == 2 {
            return Err(Error::OddPrimeRequired(p));
        }
        Ok(PrimeParam(p))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub(crate) fn modulus(self) -> usize {
        self.0 as usize
    }

    /// `-i mod p`.
    pub fn negate(self, residue: u32) -> u32 {
        (self.0 - residue % self.0) % self.0
    }
}

impl TryFrom<u32> for PrimeParam {
    type Error = Error;

    fn try_from(p: u32) -> Result<Self> {
        PrimeParam::new(p)
    }
}

impl From<PrimeParam> for u32 {
    fn from(p: PrimeParam) -> u32 {
        p.0
    }
}

impl fmt::Display for PrimeParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A cell of a Young diagram, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Node { row, col }
    }

    /// Residue `(col - row) mod p`.
    pub fn residue(self, p: PrimeParam) -> u32 {
        let p = p.get() as i64;
        (self.col as i64 - self.row as i64).rem_euclid(p) as u32
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Number of cells of each residue, `(b_0, ..., b_{p-1})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ResidueContent {
    pub counts: Vec<usize>,
}

/// A partition: weakly decreasing positive parts.
///
/// Ordering is lexicographic on the parts, which is the usual
/// lexicographic order on partitions of the same size.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::NonPositivePart);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// Builds a partition from `(value, multiplicity)` pairs, dropping zero values.
    pub fn from_exponents(pairs: &[(usize, usize)]) -> Result<Self> {
        let parts = pairs
            .iter()
            .filter(|(value, _)| *value > 0)
            .flat_map(|&(value, mult)| std::iter::repeat_n(value, mult))
            .collect();
        Partition::new(parts)
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && !parts.contains(&0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn height(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `k` (1-based), zero beyond the height.
    pub fn part(&self, k: usize) -> usize {
        if k == 0 {
            return 0;
        }
        self.parts.get(k - 1).copied().unwrap_or(0)
    }

    pub fn contains_node(&self, node: Node) -> bool {
        self.part(node.row) >= node.col
    }

    /// `(value, multiplicity)` pairs with strictly decreasing values.
    pub fn exponent_form(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &part in &self.parts {
            match out.last_mut() {
                Some((value, mult)) if *value == part => *mult += 1,
                _ => out.push((part, 1)),
            }
        }
        out
    }

    /// True iff no part occurs `p` or more times.
    pub fn is_p_regular(&self, p: PrimeParam) -> bool {
        self.exponent_form()
            .iter()
            .all(|&(_, mult)| mult < p.modulus())
    }

    pub(crate) fn require_regular(&self, p: PrimeParam) -> Result<()> {
        if self.is_p_regular(p) {
            Ok(())
        } else {
            Err(Error::NotRegular {
                partition: self.to_string(),
                p: p.get(),
            })
        }
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&part| part >= j).count())
            .collect();
        Partition { parts }
    }

    /// Removable nodes, top to bottom.
    pub fn removable_nodes(&self) -> Vec<Node> {
        let h = self.height();
        (1..=h)
            .filter(|&r| self.part(r) > self.part(r + 1))
            .map(|r| Node::new(r, self.part(r)))
            .collect()
    }

    /// Addable nodes, top to bottom.
    pub fn addable_nodes(&self) -> Vec<Node> {
        let h = self.height();
        (1..=h + 1)
            .filter(|&r| r == 1 || self.part(r) < self.part(r - 1))
            .map(|r| Node::new(r, self.part(r) + 1))
            .collect()
    }

    /// The partition with `node` removed, if `node` is removable.
    pub fn remove_node(&self, node: Node) -> Option<Partition> {
        if node.row == 0 || node.row > self.height() {
            return None;
        }
        if self.part(node.row) != node.col || self.part(node.row + 1) >= node.col {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[node.row - 1] -= 1;
        if parts[node.row - 1] == 0 {
            parts.pop();
        }
        Some(Partition { parts })
    }

    /// The partition with `node` added, if `node` is addable.
    pub fn add_node(&self, node: Node) -> Option<Partition> {
        if node.row == 0 || node.row > self.height() + 1 {
            return None;
        }
        if self.part(node.row) + 1 != node.col {
            return None;
        }
        if node.row > 1 && self.part(node.row - 1) < node.col {
            return None;
        }
        let mut parts = self.parts.clone();
        if node.row > parts.len() {
            parts.push(1);
        } else {
            parts[node.row - 1] += 1;
        }
        Some(Partition { parts })
    }

    /// All cells, row by row.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Node::new(r + 1, c)))
    }

    pub fn residue_content(&self, p: PrimeParam) -> ResidueContent {
        let mut counts = vec![0; p.modulus()];
        for node in self.nodes() {
            counts[node.residue(p) as usize] += 1;
        }
        ResidueContent { counts }
    }

    /// Number of standard Young tableaux of this shape (hook length formula).
    pub fn specht_dimension(&self) -> Result<BigUint> {
        if self.is_empty() {
            return Err(Error::EmptyPartition);
        }
        let conj = self.conjugate();
        let mut numerator = BigUint::from(1u32);
        for k in 2..=self.size() {
            numerator *= k;
        }
        let mut hooks = BigUint::from(1u32);
        for node in self.nodes() {
            let arm = self.part(node.row) - node.col;
            let leg = conj.part(node.col) - node.row;
            hooks *= arm + leg + 1;
        }
        Ok(numerator / hooks)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("[]");
        }
        let mut first = true;
        for part in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

/// Parses `"8,2"`, `"4^3,1^2"` or `"[]"`. Surrounding parentheses are allowed.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let malformed = |reason: &str| Error::Malformed {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let mut body = text.trim();
    if let Some(inner) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
        body = inner.trim();
    }
    if body.is_empty() || body == "[]" {
        return Ok(Partition::empty());
    }

    let mut parts = Vec::new();
    for token in body.split(',') {
        let token = token.trim();
        let (value, mult) = match token.split_once('^') {
            Some((v, m)) => (v.trim(), Some(m.trim())),
            None => (token, None),
        };
        if value.starts_with('-') {
            return Err(Error::NonPositivePart);
        }
        let value: usize = value
            .parse()
            .map_err(|_| malformed(&format!("`{token}` is not a part")))?;
        if value == 0 {
            return Err(Error::NonPositivePart);
        }
        let mult: usize = match mult {
            None => 1,
            Some(m) => match m.parse() {
                Ok(k) if k >= 1 => k,
                _ => return Err(malformed(&format!("bad exponent in `{token}`"))),
            },
        };
        parts.extend(std::iter::repeat_n(value, mult));
    }
    Partition::new(parts)
}

/// Partitions of `n` in descending lexicographic order.
#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Partitions {
    pub fn new(n: usize) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        Partitions { next: Some(first) }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // Successor: lower the last part above 1 and refill greedily.
        if let Some(k) = current.iter().rposition(|&x| x > 1) {
            let mut succ = current[..k].to_vec();
            let cap = current[k] - 1;
            succ.push(cap);
            // trailing ones plus the unit taken from position k
            let mut rest = current.len() - k;
            while rest > 0 {
                let take = rest.min(cap);
                succ.push(take);
                rest -= take;
            }
            self.next = Some(succ);
        }
        Some(Partition::from_parts_unchecked(current))
    }
}

/// Every partition of `n`, optionally only the `p`-regular ones.
pub fn enumerate_partitions(
    n: usize,
    p: PrimeParam,
    regular_only: bool,
) -> impl Iterator<Item = Partition> {
    Partitions::new(n).filter(move |lambda| !regular_only || lambda.is_p_regular(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn p(v: u32) -> PrimeParam {
        PrimeParam::new(v).unwrap()
    }

    #[test]
    fn parses_plain_and_exponent_forms() {
        assert_eq!(part("8,2").parts(), &[8, 2]);
        assert_eq!(part("4^3,1^2").parts(), &[4, 4, 4, 1, 1]);
        assert_eq!(part("(5, 3,3)").parts(), &[5, 3, 3]);
        assert!(part("[]").is_empty());
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            parse_partition("2,3"),
            Err(Error::NotWeaklyDecreasing(vec![2, 3]))
        );
        assert_eq!(parse_partition("3,0"), Err(Error::NonPositivePart));
        assert_eq!(parse_partition("3,-1"), Err(Error::NonPositivePart));
        assert!(matches!(
            parse_partition("3,x"),
            Err(Error::Malformed { .. })
        ));
        assert!(matches!(
            parse_partition("3^0"),
            Err(Error::Malformed { .. })
        ));
        assert!(matches!(
            parse_partition("3,,1"),
            Err(Error::Malformed { .. })
        ));
    }

    #[test]
    fn prime_parameter() {
        assert!(PrimeParam::new(3).is_ok());
        assert!(PrimeParam::new(5).is_ok());
        assert_eq!(PrimeParam::new(2), Err(Error::OddPrimeRequired(2)));
        assert_eq!(PrimeParam::new(9), Err(Error::OddPrimeRequired(9)));
        assert_eq!(PrimeParam::new(1), Err(Error::OddPrimeRequired(1)));
        assert_eq!(p(5).negate(0), 0);
        assert_eq!(p(5).negate(2), 3);
    }

    #[test]
    fn regularity() {
        assert!(!part("1^5").is_p_regular(p(5)));
        assert!(part("2^4,1").is_p_regular(p(5)));
        assert!(Partition::empty().is_p_regular(p(5)));
    }

    #[test]
    fn conjugation() {
        assert_eq!(part("3,2").conjugate(), part("2,2,1"));
        assert_eq!(part("4").conjugate(), part("1,1,1,1"));
        let lambda = part("5,3,3,1");
        assert_eq!(lambda.conjugate().conjugate(), lambda);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn residues_match_the_two_row_diagram() {
        // cells of (n-3,2) at p = 5: (1,2) -> 1, (2,1) -> 4, addable (3,1) -> 3
        assert_eq!(Node::new(1, 2).residue(p(5)), 1);
        assert_eq!(Node::new(2, 1).residue(p(5)), 4);
        assert_eq!(Node::new(3, 1).residue(p(5)), 3);
    }

    #[test]
    fn content() {
        assert_eq!(
            part("2,2").residue_content(p(5)).counts,
            vec![2, 1, 0, 0, 1]
        );
        assert_eq!(part("6").residue_content(p(5)).counts, vec![2, 1, 1, 1, 1]);
        assert_eq!(
            Partition::empty().residue_content(p(3)).counts,
            vec![0, 0, 0]
        );
    }

    #[test]
    fn enumeration() {
        let four: Vec<_> = enumerate_partitions(4, p(5), false).collect();
        let expected: Vec<_> = ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]
            .iter()
            .map(|s| part(s))
            .collect();
        assert_eq!(four, expected);

        let five_all: Vec<_> = enumerate_partitions(5, p(5), false).collect();
        let five_reg: Vec<_> = enumerate_partitions(5, p(5), true).collect();
        assert_eq!(five_all.len(), 7);
        assert_eq!(five_reg.len(), 6);
        assert!(!five_reg.contains(&part("1^5")));

        let zero: Vec<_> = enumerate_partitions(0, p(3), true).collect();
        assert_eq!(zero, vec![Partition::empty()]);
    }

    #[test]
    fn specht_dimensions() {
        assert_eq!(part("6").specht_dimension().unwrap(), BigUint::from(1u32));
        assert_eq!(part("2,1").specht_dimension().unwrap(), BigUint::from(2u32));
        assert_eq!(part("2,2").specht_dimension().unwrap(), BigUint::from(2u32));
        assert_eq!(
            Partition::empty().specht_dimension(),
            Err(Error::EmptyPartition)
        );
    }

    #[test]
    fn node_surgery() {
        let lambda = part("3,1");
        assert_eq!(
            lambda.removable_nodes(),
            vec![Node::new(1, 3), Node::new(2, 1)]
        );
        assert_eq!(
            lambda.addable_nodes(),
            vec![Node::new(1, 4), Node::new(2, 2), Node::new(3, 1)]
        );
        assert_eq!(lambda.remove_node(Node::new(2, 1)), Some(part("3")));
        assert_eq!(lambda.remove_node(Node::new(1, 2)), None);
        assert_eq!(lambda.add_node(Node::new(3, 1)), Some(part("3,1,1")));
        assert_eq!(lambda.add_node(Node::new(2, 3)), None);
        assert_eq!(Partition::empty().addable_nodes(), vec![Node::new(1, 1)]);
    }

    #[test]
    fn display() {
        assert_eq!(part("4^2,1").to_string(), "4,4,1");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert_eq!(part("4^2,1").exponent_form(), vec![(4, 2), (1, 1)]);
    }
}
