//! Normal and conormal nodes, the tallies `ε_i`/`φ_i`, and the operators
//! `ẽ_i`/`f̃_i`.
//!
//! For a residue `i` the *signature* lists the addable and removable
//! `i`-nodes in scan order. Every addable node immediately followed (after
//! earlier cancellations) by a removable node cancels with it. The surviving
//! removable nodes are *normal*, the surviving addable nodes *conormal*.
//!
//! With [`Orientation::TopDown`] a removable node is cancelled by an addable
//! node above it, so normal nodes sit above conormal ones. This is the
//! orientation fixed by calibration (see [`crate::calibration`]);
//! [`Orientation::BottomUp`] is kept for that experiment.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Node, Partition, PrimeParam};

/// Scan order used when reducing a signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientation {
    TopDown,
    BottomUp,
}

impl Orientation {
    /// The orientation every published result uses.
    pub const CALIBRATED: Orientation = Orientation::TopDown;

    pub const ALL: [Orientation; 2] = [Orientation::TopDown, Orientation::BottomUp];

    pub fn flipped(self) -> Orientation {
        match self {
            Orientation::TopDown => Orientation::BottomUp,
            Orientation::BottomUp => Orientation::TopDown,
        }
    }
}

impl Default for Orientation {
    fn default() -> Self {
        Orientation::CALIBRATED
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NodeKind {
    Addable,
    Removable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignatureEntry {
    pub node: Node,
    pub kind: NodeKind,
}

/// The unreduced `i`-signature of `lambda` in scan order.
pub fn signature(
    lambda: &Partition,
    residue: u32,
    p: PrimeParam,
    orientation: Orientation,
) -> Vec<SignatureEntry> {
    let addable = lambda
        .addable_nodes()
        .into_iter()
        .map(|node| SignatureEntry {
            node,
            kind: NodeKind::Addable,
        });
    let removable = lambda
        .removable_nodes()
        .into_iter()
        .map(|node| SignatureEntry {
            node,
            kind: NodeKind::Removable,
        });
    let mut word: Vec<_> = addable
        .chain(removable)
        .filter(|e| e.node.residue(p) == residue)
        .collect();
    // A row never holds an addable and a removable node of the same residue.
    word.sort_by_key(|e| e.node.row);
    if orientation == Orientation::BottomUp {
        word.reverse();
    }
    word
}

/// Cancels adjacent (addable, removable) pairs until none remain.
pub fn reduce_signature(word: &[SignatureEntry]) -> Vec<SignatureEntry> {
    let mut stack: Vec<SignatureEntry> = Vec::with_capacity(word.len());
    for &entry in word {
        match stack.last() {
            Some(top) if top.kind == NodeKind::Addable && entry.kind == NodeKind::Removable => {
                stack.pop();
            }
            _ => stack.push(entry),
        }
    }
    stack
}

/// Addable, removable, normal and conormal nodes of a partition, per residue.
/// Every node list is ordered top to bottom.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeClassification {
    pub p: PrimeParam,
    pub addable: Vec<Vec<Node>>,
    pub removable: Vec<Vec<Node>>,
    pub normal: Vec<Vec<Node>>,
    pub conormal: Vec<Vec<Node>>,
    pub epsilon: Vec<usize>,
    pub phi: Vec<usize>,
}

impl NodeClassification {
    pub fn epsilon_total(&self) -> usize {
        self.epsilon.iter().sum()
    }

    pub fn phi_total(&self) -> usize {
        self.phi.iter().sum()
    }

    /// Residues `i` with `ε_i > 0`, ascending.
    pub fn normal_residues(&self) -> Vec<u32> {
        (0..self.epsilon.len() as u32)
            .filter(|&i| self.epsilon[i as usize] > 0)
            .collect()
    }
}

pub fn classify_nodes(lambda: &Partition, p: PrimeParam) -> NodeClassification {
    classify_nodes_with(lambda, p, Orientation::CALIBRATED)
}

pub fn classify_nodes_with(
    lambda: &Partition,
    p: PrimeParam,
    orientation: Orientation,
) -> NodeClassification {
    let m = p.modulus();
    let mut out = NodeClassification {
        p,
        addable: vec![Vec::new(); m],
        removable: vec![Vec::new(); m],
        normal: vec![Vec::new(); m],
        conormal: vec![Vec::new(); m],
        epsilon: vec![0; m],
        phi: vec![0; m],
    };
    for node in lambda.addable_nodes() {
        out.addable[node.residue(p) as usize].push(node);
    }
    for node in lambda.removable_nodes() {
        out.removable[node.residue(p) as usize].push(node);
    }
    for i in 0..m {
        let reduced = reduce_signature(&signature(lambda, i as u32, p, orientation));
        for entry in reduced {
            match entry.kind {
                NodeKind::Removable => out.normal[i].push(entry.node),
                NodeKind::Addable => out.conormal[i].push(entry.node),
            }
        }
        out.normal[i].sort();
        out.conormal[i].sort();
        out.epsilon[i] = out.normal[i].len();
        out.phi[i] = out.conormal[i].len();
    }
    out
}

/// `ε_i(λ)`.
pub fn epsilon(lambda: &Partition, residue: u32, p: PrimeParam) -> usize {
    reduce_signature(&signature(lambda, residue, p, Orientation::CALIBRATED))
        .iter()
        .filter(|e| e.kind == NodeKind::Removable)
        .count()
}

/// `φ_i(λ)`.
pub fn phi(lambda: &Partition, residue: u32, p: PrimeParam) -> usize {
    reduce_signature(&signature(lambda, residue, p, Orientation::CALIBRATED))
        .iter()
        .filter(|e| e.kind == NodeKind::Addable)
        .count()
}

/// Removes the bottom normal node of residue `i`; `None` when `ε_i(λ) = 0`.
///
/// Meant for `p`-regular input; the node combinatorics itself is defined for
/// every partition, so this does not check regularity.
pub fn tilde_e(lambda: &Partition, residue: u32, p: PrimeParam) -> Option<Partition> {
    tilde_e_with(lambda, residue, p, Orientation::CALIBRATED)
}

pub fn tilde_e_with(
    lambda: &Partition,
    residue: u32,
    p: PrimeParam,
    orientation: Orientation,
) -> Option<Partition> {
    let bottom = reduce_signature(&signature(lambda, residue, p, orientation))
        .into_iter()
        .filter(|e| e.kind == NodeKind::Removable)
        .map(|e| e.node)
        .max_by_key(|node| node.row)?;
    lambda.remove_node(bottom)
}

/// Adds the top conormal node of residue `i`; `None` when `φ_i(λ) = 0`.
pub fn tilde_f(lambda: &Partition, residue: u32, p: PrimeParam) -> Option<Partition> {
    tilde_f_with(lambda, residue, p, Orientation::CALIBRATED)
}

pub fn tilde_f_with(
    lambda: &Partition,
    residue: u32,
    p: PrimeParam,
    orientation: Orientation,
) -> Option<Partition> {
    let top = reduce_signature(&signature(lambda, residue, p, orientation))
        .into_iter()
        .filter(|e| e.kind == NodeKind::Addable)
        .map(|e| e.node)
        .min_by_key(|node| node.row)?;
    lambda.add_node(top)
}

/// `ẽ_i^r(λ)`; `r = 0` returns `λ`.
pub fn tilde_e_pow(lambda: &Partition, residue: u32, r: usize, p: PrimeParam) -> Option<Partition> {
    (0..r).try_fold(lambda.clone(), |acc, _| tilde_e(&acc, residue, p))
}

/// `f̃_i^r(λ)`; `r = 0` returns `λ`.
pub fn tilde_f_pow(lambda: &Partition, residue: u32, r: usize, p: PrimeParam) -> Option<Partition> {
    (0..r).try_fold(lambda.clone(), |acc, _| tilde_f(&acc, residue, p))
}

/// `Σ_i ε_i(λ)`, the dimension of the endomorphism ring of the restriction.
pub fn restriction_end_dim(lambda: &Partition, p: PrimeParam) -> usize {
    classify_nodes(lambda, p).epsilon_total()
}

/// `Σ_i φ_i(λ)`, the dimension of the endomorphism ring of the induction.
pub fn induction_end_dim(lambda: &Partition, p: PrimeParam) -> usize {
    classify_nodes(lambda, p).phi_total()
}

/// Lower bound for the endomorphism dimension over `Σ_{n-2,2}`:
/// `Σ_i ε_i(ε_i - 1) + Σ_{j: ε_j > 0} Σ_{i ≠ j} ε_i(ẽ_j λ)`.
pub fn l13_lower_bound(lambda: &Partition, p: PrimeParam) -> usize {
    let nodes = classify_nodes(lambda, p);
    let diagonal: usize = nodes.epsilon.iter().map(|&e| e * e.saturating_sub(1)).sum();
    let off_diagonal: usize = nodes
        .normal_residues()
        .into_iter()
        .filter_map(|j| tilde_e(lambda, j, p).map(|child| (j, child)))
        .map(|(j, child)| {
            let child_eps = classify_nodes(&child, p).epsilon;
            child_eps
                .iter()
                .enumerate()
                .filter(|&(i, _)| i as u32 != j)
                .map(|(_, &e)| e)
                .sum::<usize>()
        })
        .sum();
    diagonal + off_diagonal
}

/// True iff `λ` has exactly one normal node.
pub fn is_js(lambda: &Partition, p: PrimeParam) -> Result<bool> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    lambda.require_regular(p)?;
    Ok(restriction_end_dim(lambda, p) == 1)
}
