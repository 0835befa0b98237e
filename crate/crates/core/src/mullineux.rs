//! The Mullineux involution on `p`-regular partitions.
//!
//! Two independent algorithms:
//!
//! * [`mullineux`] peels good nodes off with `ẽ_i` down to the empty
//!   partition and rebuilds with `f̃_{-i}` in reverse, i.e.
//!   `M(λ) = f̃_{-i}(M(ẽ_i λ))`.
//! * [`mullineux_via_symbol`] computes the Mullineux symbol by successive
//!   `p`-rim removal, transforms each column `(a, r)` into
//!   `(a, a - r + [p ∤ a])` and reattaches rims from the inside out.

use std::collections::HashMap;
use std::sync::RwLock;

use serde::{Deserialize, Serialize};

use crate::branching::{classify_nodes_with, tilde_e_with, tilde_f_with, Orientation};
use crate::error::{Error, Result};
use crate::partition::{Node, Partition, PrimeParam};

/// Which residue the recursion peels when several have `ε_i > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ResidueChoice {
    #[default]
    Smallest,
    Largest,
}

/// One column of a Mullineux symbol: `size` nodes removed, `rows` rows met.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymbolColumn {
    pub size: usize,
    pub rows: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MullineuxSymbol {
    pub columns: Vec<SymbolColumn>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MullineuxTrace {
    /// Residues of the good nodes removed, outermost first.
    Residues(Vec<u32>),
    Symbol(MullineuxSymbol),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MullineuxResult {
    pub image: Partition,
    pub trace: MullineuxTrace,
}

/// `λ^M` via the good-node recursion, under the calibrated orientation.
pub fn mullineux(lambda: &Partition, p: PrimeParam) -> Result<MullineuxResult> {
    mullineux_with(lambda, p, Orientation::CALIBRATED, ResidueChoice::Smallest)
}

pub fn mullineux_with(
    lambda: &Partition,
    p: PrimeParam,
    orientation: Orientation,
    choice: ResidueChoice,
) -> Result<MullineuxResult> {
    lambda.require_regular(p)?;
    let mut residues = Vec::with_capacity(lambda.size());
    let mut current = lambda.clone();
    while !current.is_empty() {
        let eps = classify_nodes_with(&current, p, orientation).epsilon;
        let mut candidates = (0..eps.len() as u32).filter(|&i| eps[i as usize] > 0);
        let picked = match choice {
            ResidueChoice::Smallest => candidates.next(),
            ResidueChoice::Largest => candidates.next_back(),
        };
        // Some residue always has a normal node (Σφ = Σε + 1 rules out the
        // reverse), but a wrong orientation may still strand us.
        let next =
            picked.and_then(|i| tilde_e_with(&current, i, p, orientation).map(|child| (i, child)));
        let Some((i, child)) = next else {
            return Err(Error::InternalInconsistency(format!(
                "no good node on {current} at p = {p}"
            )));
        };
        residues.push(i);
        current = child;
    }

    let mut image = Partition::empty();
    for &i in residues.iter().rev() {
        let dual = p.negate(i);
        image =
            tilde_f_with(&image, dual, p, orientation).ok_or_else(|| Error::RecursionStuck {
                partition: image.to_string(),
                residue: dual,
            })?;
    }
    Ok(MullineuxResult {
        image,
        trace: MullineuxTrace::Residues(residues),
    })
}

/// Memoized recursion keyed by `(partition, p)`, calibrated orientation only.
/// Safe to share between threads.
#[derive(Debug, Default)]
pub struct MullineuxCache {
    map: RwLock<HashMap<(Partition, u32), Partition>>,
}

impl MullineuxCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn image(&self, lambda: &Partition, p: PrimeParam) -> Result<Partition> {
        lambda.require_regular(p)?;
        self.image_inner(lambda, p)
    }

    fn image_inner(&self, lambda: &Partition, p: PrimeParam) -> Result<Partition> {
        if lambda.is_empty() {
            return Ok(Partition::empty());
        }
        let key = (lambda.clone(), p.get());
        if let Some(hit) = self.map.read().expect("cache poisoned").get(&key) {
            return Ok(hit.clone());
        }
        let orientation = Orientation::CALIBRATED;
        let eps = classify_nodes_with(lambda, p, orientation).epsilon;
        let i = (0..eps.len() as u32)
            .find(|&i| eps[i as usize] > 0)
            .ok_or_else(|| Error::InternalInconsistency(format!("no normal node on {lambda}")))?;
        let child = tilde_e_with(lambda, i, p, orientation)
            .ok_or_else(|| Error::InternalInconsistency(format!("ẽ_{i} failed on {lambda}")))?;
        let child_image = self.image_inner(&child, p)?;
        let dual = p.negate(i);
        let image = tilde_f_with(&child_image, dual, p, orientation).ok_or_else(|| {
            Error::RecursionStuck {
                partition: child_image.to_string(),
                residue: dual,
            }
        })?;
        self.map
            .write()
            .expect("cache poisoned")
            .entry(key)
            .or_insert_with(|| image.clone());
        Ok(image)
    }
}

/// Rim nodes from the top-right corner down to `(h, 1)`.
fn rim(lambda: &Partition) -> Vec<Node> {
    let h = lambda.height();
    (1..=h)
        .flat_map(|r| {
            let low = lambda.part(r + 1).max(1);
            (low..=lambda.part(r)).rev().map(move |c| Node::new(r, c))
        })
        .collect()
}

/// The `p`-rim: segments of `p` rim nodes, each starting on the row after the
/// previous one ended, until the last row is reached.
pub fn p_rim(lambda: &Partition, p: PrimeParam) -> Vec<Node> {
    let h = lambda.height();
    let rim = rim(lambda);
    let mut out = Vec::new();
    let mut start = 0;
    while start < rim.len() {
        let end = (start + p.modulus()).min(rim.len());
        out.extend_from_slice(&rim[start..end]);
        let last_row = rim[end - 1].row;
        if end == rim.len() || last_row == h {
            break;
        }
        start = match rim[end..].iter().position(|node| node.row == last_row + 1) {
            Some(offset) => end + offset,
            None => break,
        };
    }
    out
}

fn remove_nodes(lambda: &Partition, nodes: &[Node]) -> Option<Partition> {
    let mut parts = lambda.parts().to_vec();
    for node in nodes {
        parts[node.row - 1] -= 1;
    }
    while parts.last() == Some(&0) {
        parts.pop();
    }
    Partition::new(parts).ok()
}

fn peel_p_rim(lambda: &Partition, p: PrimeParam) -> (SymbolColumn, Partition) {
    let rim = p_rim(lambda, p);
    let column = SymbolColumn {
        size: rim.len(),
        rows: lambda.height(),
    };
    let inner = remove_nodes(lambda, &rim).expect("p-rim removal leaves a partition");
    (column, inner)
}

pub fn mullineux_symbol(lambda: &Partition, p: PrimeParam) -> Result<MullineuxSymbol> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    lambda.require_regular(p)?;
    let mut columns = Vec::new();
    let mut current = lambda.clone();
    while !current.is_empty() {
        let (column, inner) = peel_p_rim(&current, p);
        columns.push(column);
        current = inner;
    }
    Ok(MullineuxSymbol { columns })
}

/// The `p`-regular partition with `rows` rows whose `p`-rim has `size` nodes
/// and leaves `inner` behind.
fn attach_p_rim(inner: &Partition, size: usize, rows: usize, p: PrimeParam) -> Result<Partition> {
    let target = inner.size() + size;
    let mut found: Vec<Partition> = Vec::new();
    let mut parts = Vec::with_capacity(rows);
    search_rim_attachments(inner, rows, target, 1, &mut parts, &mut |cand| {
        let cand = Partition::from_parts_unchecked(cand.to_vec());
        if cand.is_p_regular(p) {
            let (column, rest) = peel_p_rim(&cand, p);
            if column.size == size && rest == *inner {
                found.push(cand);
            }
        }
    });
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        _ => Err(Error::Reconstruction {
            inner: inner.to_string(),
            size,
            rows,
            p: p.get(),
        }),
    }
}

/// Enumerates `λ ⊇ inner` with exactly `rows` rows and size `target` such that
/// `λ / inner` lies in the rim of `λ` (`λ_{r+1} <= inner_r + 1`).
fn search_rim_attachments(
    inner: &Partition,
    rows: usize,
    target: usize,
    row: usize,
    parts: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    let used: usize = parts.iter().sum();
    if row > rows {
        if used == target {
            emit(parts);
        }
        return;
    }
    let remaining_rows = rows - row;
    let low = inner.part(row).max(1);
    let mut high = target.saturating_sub(used + remaining_rows);
    if row > 1 {
        high = high.min(parts[row - 2]).min(inner.part(row - 1) + 1);
    }
    for value in low..=high {
        parts.push(value);
        search_rim_attachments(inner, rows, target, row + 1, parts, emit);
        parts.pop();
    }
}

/// `λ^M` through the Mullineux symbol. Independent of the node combinatorics.
pub fn mullineux_via_symbol(lambda: &Partition, p: PrimeParam) -> Result<MullineuxResult> {
    lambda.require_regular(p)?;
    if lambda.is_empty() {
        return Ok(MullineuxResult {
            image: Partition::empty(),
            trace: MullineuxTrace::Symbol(MullineuxSymbol {
                columns: Vec::new(),
            }),
        });
    }
    let symbol = mullineux_symbol(lambda, p)?;
    let mut image = Partition::empty();
    for column in symbol.columns.iter().rev() {
        let correction = usize::from(column.size % p.modulus() != 0);
        let rows = column.size + correction - column.rows;
        image = attach_p_rim(&image, column.size, rows, p)?;
    }
    Ok(MullineuxResult {
        image,
        trace: MullineuxTrace::Symbol(symbol),
    })
}

pub fn is_mullineux_fixed(lambda: &Partition, p: PrimeParam) -> Result<bool> {
    Ok(mullineux(lambda, p)?.image == *lambda)
}

/// The lexicographically larger of `λ` and `λ^M`.
pub fn canonical_label(lambda: &Partition, p: PrimeParam) -> Result<Partition> {
    let image = mullineux(lambda, p)?.image;
    Ok(std::cmp::max(image, lambda.clone()))
}
