//! Irreducible representations of the alternating group and the decision
//! procedure for irreducible tensor products at `p = 5`.
//!
//! A `p`-regular `λ` with `λ ≠ λ^M` restricts irreducibly to `A_n`, and
//! `λ`, `λ^M` give the same module; it is stored under its
//! [`canonical_label`]. A Mullineux-fixed `λ` splits into `E^λ_+ ⊕ E^λ_-`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::branching::is_js;
use crate::error::{Error, Result};
use crate::mullineux::mullineux;
use crate::partition::{enumerate_partitions, Node, Partition, PrimeParam};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl std::str::FromStr for Sign {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            other => Err(format!("sign must be + or -, got `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LabelKind {
    /// `E^λ = E^{λ^M}`; `canonical` is the larger of the pair.
    NonSplit {
        canonical: Partition,
        dual: Partition,
    },
    /// `E^λ_±` with `λ = λ^M`.
    Split { lambda: Partition, sign: Sign },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AnIrreducible {
    pub kind: LabelKind,
    pub n: usize,
    pub p: PrimeParam,
}

impl AnIrreducible {
    pub fn is_split(&self) -> bool {
        matches!(self.kind, LabelKind::Split { .. })
    }

    /// Whether `mu` names this module (either member of a non-split pair).
    pub fn names(&self, mu: &Partition) -> bool {
        match &self.kind {
            LabelKind::NonSplit { canonical, dual } => canonical == mu || dual == mu,
            LabelKind::Split { lambda, .. } => lambda == mu,
        }
    }
}

impl fmt::Display for AnIrreducible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            LabelKind::NonSplit { canonical, .. } => write!(f, "E^({canonical})"),
            LabelKind::Split { lambda, sign } => write!(f, "E^({lambda})_{sign}"),
        }
    }
}

/// Builds a canonical label. `sign` must be given exactly when `λ = λ^M`.
pub fn make_label(lambda: &Partition, sign: Option<Sign>, p: PrimeParam) -> Result<AnIrreducible> {
    let image = mullineux(lambda, p)?.image;
    let fixed = image == *lambda;
    let kind = match (fixed, sign) {
        (true, Some(sign)) => LabelKind::Split {
            lambda: lambda.clone(),
            sign,
        },
        (true, None) => return Err(Error::SignRequired(lambda.to_string())),
        (false, Some(_)) => return Err(Error::SignOnNonFixed(lambda.to_string())),
        (false, None) => {
            let (canonical, dual) = if *lambda > image {
                (lambda.clone(), image)
            } else {
                (image, lambda.clone())
            };
            LabelKind::NonSplit { canonical, dual }
        }
    };
    Ok(AnIrreducible {
        kind,
        n: lambda.size(),
        p,
    })
}

/// Every irreducible label of `A_n` in characteristic `p`: one per non-split
/// pair and two per Mullineux-fixed partition.
pub fn all_labels(n: usize, p: PrimeParam) -> Result<Vec<AnIrreducible>> {
    let mut out = Vec::new();
    for lambda in enumerate_partitions(n, p, true) {
        let image = mullineux(&lambda, p)?.image;
        if image == lambda {
            out.push(make_label(&lambda, Some(Sign::Plus), p)?);
            out.push(make_label(&lambda, Some(Sign::Minus), p)?);
        } else if lambda > image {
            out.push(make_label(&lambda, None, p)?);
        }
    }
    Ok(out)
}

/// Trivial/sign pair for non-split labels; `n <= 4` for split ones.
pub fn is_dimension_one(label: &AnIrreducible) -> bool {
    match &label.kind {
        LabelKind::NonSplit { .. } => label.names(&Partition::row(label.n)),
        LabelKind::Split { .. } => label.n <= 4,
    }
}

/// Removes the top removable node and adds the bottom addable node.
///
/// The top removable node sits at the end of the first block of equal parts,
/// so when `λ_1 = λ_2` it is not in the first row.
pub fn nu_of(lambda: &Partition) -> Result<Partition> {
    let top = *lambda
        .removable_nodes()
        .first()
        .ok_or(Error::EmptyPartition)?;
    let inconsistency = || Error::InternalInconsistency(format!("node surgery on {lambda}"));
    let removed = lambda.remove_node(top).ok_or_else(inconsistency)?;
    // (h+1, 1), unless the removal emptied the last row (λ = (1^h))
    let bottom = Node::new(removed.height() + 1, 1);
    removed.add_node(bottom).ok_or_else(inconsistency)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReasonCode {
    BothNonSplit,
    DoubleSplit,
    NDivisibleByP,
    SplitNotJs,
    PartnerNotNaturalLabel,
}

impl fmt::Display for ReasonCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReasonCode::BothNonSplit => "BothNonSplit",
            ReasonCode::DoubleSplit => "DoubleSplit",
            ReasonCode::NDivisibleByP => "NDivisibleByP",
            ReasonCode::SplitNotJs => "SplitNotJS",
            ReasonCode::PartnerNotNaturalLabel => "PartnerNotNaturalLabel",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ClassificationOutcome {
    Irreducible { nu: Partition },
    NotIrreducible { reason: ReasonCode },
}

impl ClassificationOutcome {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, ClassificationOutcome::Irreducible { .. })
    }
}

/// Decides whether `d1 ⊗ d2` is irreducible for `A_n` in characteristic 5.
///
/// Both labels must belong to the same `(n, p)`, `p` must be 5, and neither
/// may be 1-dimensional.
pub fn classify_tensor(d1: &AnIrreducible, d2: &AnIrreducible) -> Result<ClassificationOutcome> {
    if d1.n != d2.n || d1.p != d2.p {
        return Err(Error::LabelMismatch {
            n1: d1.n,
            p1: d1.p.get(),
            n2: d2.n,
            p2: d2.p.get(),
        });
    }
    let p = d1.p;
    if p.get() != 5 {
        return Err(Error::UnsupportedCharacteristic(p.get()));
    }
    for label in [d1, d2] {
        if is_dimension_one(label) {
            return Err(Error::DimensionOneFactor(label.to_string()));
        }
    }

    let (split, other) = match (&d1.kind, &d2.kind) {
        (LabelKind::NonSplit { .. }, LabelKind::NonSplit { .. }) => {
            return Ok(not_irreducible(ReasonCode::BothNonSplit));
        }
        (LabelKind::Split { .. }, LabelKind::Split { .. }) => {
            return Ok(not_irreducible(ReasonCode::DoubleSplit));
        }
        (LabelKind::Split { lambda, .. }, _) => (lambda, d2),
        (_, LabelKind::Split { lambda, .. }) => (lambda, d1),
    };

    let n = d1.n;
    if n.is_multiple_of(p.modulus()) {
        return Ok(not_irreducible(ReasonCode::NDivisibleByP));
    }
    if !is_js(split, p)? {
        return Ok(not_irreducible(ReasonCode::SplitNotJs));
    }
    let natural = Partition::new(vec![n - 1, 1])?;
    if !other.names(&natural) {
        return Ok(not_irreducible(ReasonCode::PartnerNotNaturalLabel));
    }

    let nu = nu_of(split)?;
    if !nu.is_p_regular(p) || mullineux(&nu, p)?.image == nu {
        return Err(Error::InternalInconsistency(format!(
            "{nu} is not a non-split label for n = {n}"
        )));
    }
    Ok(ClassificationOutcome::Irreducible { nu })
}

fn not_irreducible(reason: ReasonCode) -> ClassificationOutcome {
    ClassificationOutcome::NotIrreducible { reason }
}
