//! Exhaustive machine checks of the partition-level lemmas.
//!
//! Every check sweeps a finite range of `n` and primes. A sweep is split into
//! `(n, p)` units which run in parallel and merge associatively; reports are
//! deterministic apart from `elapsed_ms`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::an::nu_of;
use crate::branching::{
    classify_nodes_with, tilde_e_with, tilde_f_with, NodeClassification, Orientation,
};
use crate::closed_form::{one_row_image, two_row, two_row_image_p5, TwoRowRange};
use crate::error::{Error, Result};
use crate::js::is_js_arith;
use crate::mullineux::{mullineux_via_symbol, mullineux_with, ResidueChoice};
use crate::partition::{enumerate_partitions, Partition, Partitions, PrimeParam};

#[allow(clippy::upper_case_acronyms)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CheckId {
    L52,
    L47,
    L12,
    L17,
    L23,
    L29,
    L18,
    L20A,
    JSEQ,
    MULLX,
    NUWF,
    CLOSED,
}

impl CheckId {
    pub const ALL: [CheckId; 12] = [
        CheckId::L52,
        CheckId::L47,
        CheckId::L12,
        CheckId::L17,
        CheckId::L23,
        CheckId::L29,
        CheckId::L18,
        CheckId::L20A,
        CheckId::JSEQ,
        CheckId::MULLX,
        CheckId::NUWF,
        CheckId::CLOSED,
    ];

    pub fn description(self) -> &'static str {
        match self {
            CheckId::L52 => "every partition has one more conormal than normal node",
            CheckId::L47 => "f̃_i(ẽ_i λ) = λ with ε_i down by one and φ_i up by one",
            CheckId::L12 => {
                "removing a j-node keeps normal i-nodes normal and conormal i-nodes conormal, i ≠ j"
            }
            CheckId::L17 => "ε_i(λ) = ε_-i(λ^M), φ_i(λ) = φ_-i(λ^M), (ẽ_i λ)^M = ẽ_-i(λ^M)",
            CheckId::L23 => {
                "Mullineux-fixed JS λ has n ≡ h(λ)² mod p, and h(λ) ≥ 4 at p = 5, n ≥ 5"
            }
            CheckId::L29 => "ε-structure of ẽ_0 λ and ẽ_i ẽ_0 λ for fixed JS λ at p = 5",
            CheckId::L18 => "fixed λ with two normal nodes of distinct residues has no JS ẽ-child",
            CheckId::L20A => "Σ ε_i(ε_i - 3 + m) ≥ 2 (≥ 3 if fixed) when Σ ε ≥ 3",
            CheckId::JSEQ => "Σ ε = 1 iff the exponent-form congruences hold",
            CheckId::MULLX => {
                "good-node recursion = symbol oracle, involutive, = conjugate for p > n"
            }
            CheckId::NUWF => "ν from a fixed JS λ is a 5-regular non-fixed partition of n",
            CheckId::CLOSED => "closed forms for (n)^M and (n-i,i)^M",
        }
    }

    /// The default sweep `(n_min, n_max, primes)`.
    pub fn default_check(self) -> LemmaCheck {
        let (n_min, n_max, primes): (usize, usize, &[u32]) = match self {
            CheckId::L52 => (0, 18, &[3, 5, 7]),
            CheckId::L47 => (0, 14, &[5]),
            CheckId::L12 => (1, 12, &[3, 5, 7]),
            CheckId::L17 => (0, 16, &[3, 5]),
            CheckId::L23 => (1, 30, &[3, 5, 7]),
            CheckId::L29 => (5, 30, &[5]),
            CheckId::L18 => (4, 16, &[3, 5, 7]),
            CheckId::L20A => (1, 16, &[5]),
            CheckId::JSEQ => (1, 20, &[3, 5, 7]),
            CheckId::MULLX => (0, 18, &[3, 5, 7]),
            CheckId::NUWF => (5, 30, &[5]),
            CheckId::CLOSED => (1, 30, &[3, 5, 7]),
        };
        LemmaCheck {
            id: self,
            n_min,
            n_max,
            primes: primes.to_vec(),
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for CheckId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        CheckId::ALL
            .into_iter()
            .find(|id| id.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown check `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaCheck {
    pub id: CheckId,
    pub n_min: usize,
    pub n_max: usize,
    pub primes: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Counterexample {
    pub n: usize,
    pub p: u32,
    pub inputs: Vec<Partition>,
    pub observed: String,
    pub expected: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub id: CheckId,
    pub n_min: usize,
    pub n_max: usize,
    pub primes: Vec<u32>,
    pub instances: u64,
    pub counterexamples: Vec<Counterexample>,
    /// Counterexamples dropped beyond the cap.
    pub truncated: usize,
    /// Tallies of recorded side observations, e.g. which residue occurs.
    pub observations: BTreeMap<String, u64>,
    pub pass: bool,
    pub elapsed_ms: u64,
}

impl LemmaReport {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunOptions {
    pub orientation: Orientation,
    /// Counterexamples kept per check.
    pub cap: usize,
    /// Largest admissible `n_max`.
    pub ceiling: usize,
    pub two_row_range: TwoRowRange,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            orientation: Orientation::CALIBRATED,
            cap: 25,
            ceiling: 40,
            two_row_range: TwoRowRange::FromTwelve,
        }
    }
}

/// Accumulated result of one or more sweep units.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub instances: u64,
    pub counterexamples: Vec<Counterexample>,
    pub observations: BTreeMap<String, u64>,
}

impl Tally {
    pub fn merge(mut self, other: Tally) -> Tally {
        self.instances += other.instances;
        self.counterexamples.extend(other.counterexamples);
        for (key, count) in other.observations {
            *self.observations.entry(key).or_default() += count;
        }
        self
    }

    fn observe(&mut self, key: impl Into<String>) {
        *self.observations.entry(key.into()).or_default() += 1;
    }

    fn fail(
        &mut self,
        n: usize,
        p: PrimeParam,
        inputs: &[&Partition],
        observed: String,
        expected: &str,
    ) {
        self.counterexamples.push(Counterexample {
            n,
            p: p.get(),
            inputs: inputs.iter().map(|&x| x.clone()).collect(),
            observed,
            expected: expected.to_string(),
        });
    }
}

/// Operations under a fixed prime and orientation.
struct Ctx {
    p: PrimeParam,
    orientation: Orientation,
}

impl Ctx {
    fn classify(&self, lambda: &Partition) -> NodeClassification {
        classify_nodes_with(lambda, self.p, self.orientation)
    }

    fn e(&self, lambda: &Partition, i: u32) -> Option<Partition> {
        tilde_e_with(lambda, i, self.p, self.orientation)
    }

    fn f(&self, lambda: &Partition, i: u32) -> Option<Partition> {
        tilde_f_with(lambda, i, self.p, self.orientation)
    }

    fn neg(&self, i: u32) -> u32 {
        self.p.negate(i)
    }

    fn mull(&self, lambda: &Partition) -> std::result::Result<Partition, String> {
        mullineux_with(lambda, self.p, self.orientation, ResidueChoice::Smallest)
            .map(|r| r.image)
            .map_err(|e| e.to_string())
    }

    fn is_fixed(&self, lambda: &Partition) -> bool {
        self.mull(lambda).is_ok_and(|m| m == *lambda)
    }

    fn is_js(&self, lambda: &Partition) -> bool {
        !lambda.is_empty() && self.classify(lambda).epsilon_total() == 1
    }

    fn regular(&self, n: usize) -> impl Iterator<Item = Partition> {
        enumerate_partitions(n, self.p, true)
    }
}

fn show<T: fmt::Display>(r: &std::result::Result<T, String>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn show_opt(r: &Option<Partition>) -> String {
    r.as_ref()
        .map_or_else(|| "absent".to_string(), Partition::to_string)
}

/// Runs one `(n, p)` unit of a check.
pub fn sweep_unit(id: CheckId, n: usize, p: PrimeParam, opts: &RunOptions) -> Tally {
    let ctx = Ctx {
        p,
        orientation: opts.orientation,
    };
    let mut t = Tally::default();
    match id {
        CheckId::L52 => {
            for lambda in Partitions::new(n) {
                t.instances += 1;
                let c = ctx.classify(&lambda);
                if c.phi_total() != c.epsilon_total() + 1 {
                    let observed = format!("Σφ = {}, Σε = {}", c.phi_total(), c.epsilon_total());
                    t.fail(n, p, &[&lambda], observed, "Σφ = Σε + 1");
                }
            }
        }
        CheckId::L47 => {
            for lambda in ctx.regular(n) {
                let c = ctx.classify(&lambda);
                for i in c.normal_residues() {
                    t.instances += 1;
                    let Some(nu) = ctx.e(&lambda, i) else {
                        t.fail(
                            n,
                            p,
                            &[&lambda],
                            format!("ẽ_{i} absent"),
                            "ẽ_i defined when ε_i > 0",
                        );
                        continue;
                    };
                    let back = ctx.f(&nu, i);
                    let cn = ctx.classify(&nu);
                    let ok = back.as_ref() == Some(&lambda)
                        && cn.epsilon[i as usize] + 1 == c.epsilon[i as usize]
                        && cn.phi[i as usize] == c.phi[i as usize] + 1;
                    if !ok {
                        let observed = format!(
                            "i = {i}: f̃_i(ẽ_i λ) = {}, ε_i {} -> {}, φ_i {} -> {}",
                            show_opt(&back),
                            c.epsilon[i as usize],
                            cn.epsilon[i as usize],
                            c.phi[i as usize],
                            cn.phi[i as usize]
                        );
                        t.fail(
                            n,
                            p,
                            &[&lambda, &nu],
                            observed,
                            "f̃_i(ẽ_i λ) = λ, ε_i - 1, φ_i + 1",
                        );
                    }
                }
            }
        }
        CheckId::L12 => {
            for beta in Partitions::new(n) {
                let cb = ctx.classify(&beta);
                for node in beta.removable_nodes() {
                    let j = node.residue(p);
                    let alpha = beta.remove_node(node).expect("removable node");
                    let ca = ctx.classify(&alpha);
                    for i in (0..p.get()).filter(|&i| i != j) {
                        t.instances += 1;
                        let iu = i as usize;
                        let normal_kept = cb.normal[iu].iter().all(|x| ca.normal[iu].contains(x));
                        let conormal_kept =
                            ca.conormal[iu].iter().all(|x| cb.conormal[iu].contains(x));
                        if !(normal_kept && conormal_kept) {
                            let observed = format!(
                                "i = {i}, j = {j}: normal {:?} vs {:?}, conormal {:?} vs {:?}",
                                cb.normal[iu], ca.normal[iu], ca.conormal[iu], cb.conormal[iu]
                            );
                            t.fail(n, p, &[&beta, &alpha], observed, "normal ⊆, conormal ⊆");
                        }
                    }
                }
            }
        }
        CheckId::L17 => {
            for lambda in ctx.regular(n) {
                t.instances += 1;
                let image = match ctx.mull(&lambda) {
                    Ok(m) => m,
                    Err(e) => {
                        t.fail(n, p, &[&lambda], e, "λ^M defined");
                        continue;
                    }
                };
                let cl = ctx.classify(&lambda);
                let cm = ctx.classify(&image);
                for i in 0..p.get() {
                    let (iu, ju) = (i as usize, ctx.neg(i) as usize);
                    if cl.epsilon[iu] != cm.epsilon[ju] || cl.phi[iu] != cm.phi[ju] {
                        let observed = format!(
                            "i = {i}: ε {} vs {}, φ {} vs {}",
                            cl.epsilon[iu], cm.epsilon[ju], cl.phi[iu], cm.phi[ju]
                        );
                        t.fail(
                            n,
                            p,
                            &[&lambda, &image],
                            observed,
                            "ε_i(λ) = ε_-i(λ^M), φ_i(λ) = φ_-i(λ^M)",
                        );
                    }
                    if cl.epsilon[iu] > 0 {
                        let lhs = ctx.e(&lambda, i).map(|child| ctx.mull(&child));
                        let rhs = ctx.e(&image, ctx.neg(i));
                        let agree = matches!((&lhs, &rhs), (Some(Ok(a)), Some(b)) if a == b);
                        if !agree {
                            let observed = format!(
                                "i = {i}: (ẽ_i λ)^M = {}, ẽ_-i(λ^M) = {}",
                                lhs.as_ref().map_or_else(|| "absent".into(), show),
                                show_opt(&rhs)
                            );
                            t.fail(n, p, &[&lambda, &image], observed, "(ẽ_i λ)^M = ẽ_-i(λ^M)");
                        }
                    }
                }
            }
        }
        CheckId::L23 => {
            if n == 0 {
                return t;
            }
            for lambda in ctx.regular(n) {
                if !ctx.is_js(&lambda) || !ctx.is_fixed(&lambda) {
                    continue;
                }
                t.instances += 1;
                let h = lambda.height();
                let m = p.modulus();
                if n % m != (h * h) % m {
                    t.fail(
                        n,
                        p,
                        &[&lambda],
                        format!("n = {n}, h = {h}"),
                        "n ≡ h² mod p",
                    );
                }
                if p.get() == 5 && n >= 5 && h < 4 {
                    t.fail(n, p, &[&lambda], format!("h = {h}"), "h ≥ 4");
                }
            }
        }
        CheckId::L29 => {
            if p.get() != 5 || n < 5 {
                return t;
            }
            for lambda in ctx.regular(n) {
                if !ctx.is_js(&lambda) || !ctx.is_fixed(&lambda) {
                    continue;
                }
                t.instances += 1;
                if let Err(observed) = check_l29(&ctx, &lambda, &mut t) {
                    t.fail(
                        n,
                        p,
                        &[&lambda],
                        observed,
                        "unique normal residue 0; layers {i,-i} then {-i,2i}; commuting ẽ_±i",
                    );
                }
            }
        }
        CheckId::L18 => {
            for lambda in ctx.regular(n) {
                let c = ctx.classify(&lambda);
                let residues = c.normal_residues();
                if c.epsilon_total() != 2 || residues.len() != 2 || !ctx.is_fixed(&lambda) {
                    continue;
                }
                t.instances += 1;
                for i in residues {
                    let child = ctx.e(&lambda, i);
                    if child.as_ref().is_none_or(|nu| ctx.is_js(nu)) {
                        let observed = format!("ẽ_{i} λ = {} is JS or absent", show_opt(&child));
                        t.fail(n, p, &[&lambda], observed, "both ẽ-children non-JS");
                    }
                }
            }
        }
        CheckId::L20A => {
            for lambda in ctx.regular(n) {
                let c = ctx.classify(&lambda);
                if c.epsilon_total() < 3 {
                    continue;
                }
                t.instances += 1;
                let m = c.normal_residues().len() as i64;
                let s: i64 = c
                    .epsilon
                    .iter()
                    .map(|&e| e as i64 * (e as i64 - 3 + m))
                    .sum();
                if s < 2 {
                    t.fail(n, p, &[&lambda], format!("S = {s}"), "S ≥ 2");
                } else if s < 3 && ctx.is_fixed(&lambda) {
                    t.fail(
                        n,
                        p,
                        &[&lambda],
                        format!("S = {s}, λ = λ^M"),
                        "S ≥ 3 for fixed λ",
                    );
                }
            }
        }
        CheckId::JSEQ => {
            for lambda in ctx.regular(n).filter(|l| !l.is_empty()) {
                t.instances += 1;
                let arith = is_js_arith(&lambda, p).expect("regular nonempty");
                let signature = ctx.is_js(&lambda);
                if arith != signature {
                    let observed = format!("congruence {arith}, Σε = 1 {signature}");
                    t.fail(n, p, &[&lambda], observed, "characterizations agree");
                }
            }
        }
        CheckId::MULLX => {
            for lambda in ctx.regular(n) {
                t.instances += 1;
                let rec = ctx.mull(&lambda);
                let sym = mullineux_via_symbol(&lambda, p)
                    .map(|r| r.image)
                    .map_err(|e| e.to_string());
                let mut problems = Vec::new();
                match (&rec, &sym) {
                    (Ok(a), Ok(b)) => {
                        if a != b {
                            problems.push(format!("recursion {a} ≠ symbol {b}"));
                        }
                        if a.size() != n || !a.is_p_regular(p) {
                            problems.push(format!("image {a} has wrong size or is singular"));
                        }
                        let back = ctx.mull(a);
                        if back.as_ref() != Ok(&lambda) {
                            problems.push(format!("(λ^M)^M = {}", show(&back)));
                        }
                        if p.modulus() > n && *a != lambda.conjugate() {
                            problems.push(format!("p > n but λ^M = {a} ≠ λ'"));
                        }
                    }
                    _ => problems.push(format!("recursion {}, symbol {}", show(&rec), show(&sym))),
                }
                if !problems.is_empty() {
                    t.fail(
                        n,
                        p,
                        &[&lambda],
                        problems.join("; "),
                        "recursion = symbol, involutive, conjugate when p > n",
                    );
                }
            }
        }
        CheckId::NUWF => {
            if p.get() != 5 || n < 5 || n.is_multiple_of(5) {
                return t;
            }
            for lambda in ctx.regular(n) {
                if !ctx.is_js(&lambda) || !ctx.is_fixed(&lambda) {
                    continue;
                }
                t.instances += 1;
                if lambda.part(1) == lambda.part(2) {
                    t.observe("lambda1_eq_lambda2");
                }
                match nu_of(&lambda) {
                    Ok(nu) => {
                        let ok = nu.size() == n && nu.is_p_regular(p) && !ctx.is_fixed(&nu);
                        if !ok {
                            t.fail(
                                n,
                                p,
                                &[&lambda, &nu],
                                format!("ν = {nu}"),
                                "5-regular, |ν| = n, ν ≠ ν^M",
                            );
                        }
                    }
                    Err(e) => t.fail(n, p, &[&lambda], e.to_string(), "ν is a partition"),
                }
            }
        }
        CheckId::CLOSED => {
            if n == 0 {
                return t;
            }
            t.instances += 1;
            let row = Partition::row(n);
            let got = ctx.mull(&row);
            let want = one_row_image(n, p);
            if got.as_ref() != Ok(&want) {
                t.fail(n, p, &[&row], show(&got), &want.to_string());
            }
            if p.get() == 5 {
                for i in (0..=4).filter(|&i| opts.two_row_range.includes(n, i)) {
                    t.instances += 1;
                    let lambda = two_row(n, i);
                    let want = two_row_image_p5(n, i).expect("in range");
                    let got = ctx.mull(&lambda);
                    if got.as_ref() != Ok(&want) {
                        t.fail(n, p, &[&lambda], show(&got), &want.to_string());
                    }
                }
            }
        }
    }
    t
}

fn check_l29(ctx: &Ctx, lambda: &Partition, t: &mut Tally) -> std::result::Result<(), String> {
    let c = ctx.classify(lambda);
    if c.normal_residues() != [0] {
        return Err(format!("normal residues {:?}", c.normal_residues()));
    }
    let first = ctx.e(lambda, 0).ok_or("ẽ_0 absent")?;
    // i is the residue of the top removable node of ẽ_0 λ
    let top = *first.removable_nodes().first().ok_or("ẽ_0 λ empty")?;
    let i = top.residue(ctx.p);
    let minus_i = ctx.neg(i);
    t.observe(format!("i={i}"));
    if i != 1 && i != 4 {
        return Err(format!("top removable residue of ẽ_0 λ = {first} is {i}"));
    }
    let support = |x: &Partition| -> BTreeSet<(u32, usize)> {
        let eps = ctx.classify(x).epsilon;
        (0..eps.len() as u32)
            .filter(|&r| eps[r as usize] > 0)
            .map(|r| (r, eps[r as usize]))
            .collect()
    };
    let layer1 = support(&first);
    if layer1 != BTreeSet::from([(i, 1), (minus_i, 1)]) {
        return Err(format!("ε(ẽ_0 λ) support {layer1:?} with i = {i}"));
    }
    let second = ctx.e(&first, i).ok_or("ẽ_i ẽ_0 λ absent")?;
    let two_i = (2 * i) % ctx.p.get();
    let layer2 = support(&second);
    if layer2 != BTreeSet::from([(minus_i, 1), (two_i, 1)]) {
        return Err(format!("ε(ẽ_i ẽ_0 λ) support {layer2:?} with i = {i}"));
    }
    let one_way = ctx.e(&second, minus_i);
    let other_way = ctx.e(&first, minus_i).and_then(|x| ctx.e(&x, i));
    if one_way.is_none() || one_way != other_way {
        return Err(format!(
            "ẽ_-i ẽ_i ẽ_0 λ = {}, ẽ_i ẽ_-i ẽ_0 λ = {}",
            show_opt(&one_way),
            show_opt(&other_way)
        ));
    }
    Ok(())
}

fn validate(check: &LemmaCheck, opts: &RunOptions) -> Result<Vec<PrimeParam>> {
    if check.n_max > opts.ceiling {
        return Err(Error::SweepTooLarge {
            n_max: check.n_max,
            ceiling: opts.ceiling,
        });
    }
    check.primes.iter().map(|&p| PrimeParam::new(p)).collect()
}

/// Untruncated tally of a whole check.
pub fn run_tally(check: &LemmaCheck, opts: &RunOptions) -> Result<Tally> {
    let primes = validate(check, opts)?;
    let units: Vec<(usize, PrimeParam)> = (check.n_min..=check.n_max)
        .flat_map(|n| primes.iter().map(move |&p| (n, p)))
        .collect();
    let tallies: Vec<Tally> = units
        .par_iter()
        .map(|&(n, p)| sweep_unit(check.id, n, p, opts))
        .collect();
    Ok(tallies.into_iter().fold(Tally::default(), Tally::merge))
}

fn finish(
    check: &LemmaCheck,
    opts: &RunOptions,
    mut tally: Tally,
    started: Instant,
) -> LemmaReport {
    tally.counterexamples.sort();
    let pass = tally.counterexamples.is_empty();
    let truncated = tally.counterexamples.len().saturating_sub(opts.cap);
    tally.counterexamples.truncate(opts.cap);
    LemmaReport {
        id: check.id,
        n_min: check.n_min,
        n_max: check.n_max,
        primes: check.primes.clone(),
        instances: tally.instances,
        counterexamples: tally.counterexamples,
        truncated,
        observations: tally.observations,
        pass,
        elapsed_ms: started.elapsed().as_millis() as u64,
    }
}

pub fn run_check(check: &LemmaCheck, opts: &RunOptions) -> Result<LemmaReport> {
    let started = Instant::now();
    let tally = run_tally(check, opts)?;
    Ok(finish(check, opts, tally, started))
}

/// Runs a check as `shards` contiguous `n`-ranges and merges them.
pub fn run_check_sharded(
    check: &LemmaCheck,
    opts: &RunOptions,
    shards: usize,
) -> Result<LemmaReport> {
    let started = Instant::now();
    validate(check, opts)?;
    let shards = shards.max(1);
    let len = (check.n_max + 1).saturating_sub(check.n_min);
    let width = len.div_ceil(shards).max(1);
    let mut tally = Tally::default();
    let mut lo = check.n_min;
    while lo <= check.n_max {
        let hi = (lo + width - 1).min(check.n_max);
        let part = LemmaCheck {
            n_min: lo,
            n_max: hi,
            ..check.clone()
        };
        tally = tally.merge(run_tally(&part, opts)?);
        lo = hi + 1;
    }
    Ok(finish(check, opts, tally, started))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// Replaces every check's `n_max` when set.
    pub max_n: Option<usize>,
    pub checks: Vec<CheckId>,
    pub options: RunOptions,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: None,
            checks: CheckId::ALL.to_vec(),
            options: RunOptions::default(),
        }
    }
}

impl VerifyConfig {
    pub fn sweep_for(&self, id: CheckId) -> LemmaCheck {
        let mut check = id.default_check();
        if let Some(max_n) = self.max_n {
            check.n_max = max_n;
        }
        check
    }

    pub fn sweeps(&self) -> Vec<LemmaCheck> {
        self.checks.iter().map(|&id| self.sweep_for(id)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub reports: Vec<LemmaReport>,
    /// The calibration gate failed and the remaining checks did not run.
    pub aborted: bool,
}

impl SuiteOutcome {
    pub fn all_pass(&self) -> bool {
        !self.aborted && self.reports.iter().all(|r| r.pass)
    }

    /// 0 when everything passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }
}

/// Runs the calibration gate (MULLX, CLOSED), then every other selected
/// check in parallel. Reports come back in [`CheckId::ALL`] order.
pub fn run_all(config: &VerifyConfig) -> Result<SuiteOutcome> {
    let sweeps = config.sweeps();
    for check in &sweeps {
        validate(check, &config.options)?;
    }
    let gate_ids = [CheckId::MULLX, CheckId::CLOSED];
    let gate_reports = gate_ids
        .iter()
        .map(|&id| run_check(&config.sweep_for(id), &config.options))
        .collect::<Result<Vec<_>>>()?;
    if gate_reports.iter().any(|r| !r.pass) {
        return Ok(SuiteOutcome {
            reports: gate_reports,
            aborted: true,
        });
    }

    let mut reports = sweeps
        .par_iter()
        .filter(|check| !gate_ids.contains(&check.id))
        .map(|check| run_check(check, &config.options))
        .collect::<Result<Vec<_>>>()?;
    reports.extend(
        gate_reports
            .into_iter()
            .filter(|r| config.checks.contains(&r.id)),
    );
    reports.sort_by_key(|r| r.id);
    Ok(SuiteOutcome {
        reports,
        aborted: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(id: CheckId, n_max: usize) -> LemmaCheck {
        LemmaCheck {
            n_max,
            ..id.default_check()
        }
    }

    #[test]
    fn ids_round_trip_through_strings() {
        for id in CheckId::ALL {
            assert_eq!(id.to_string().parse::<CheckId>().unwrap(), id);
        }
        assert_eq!("l20a".parse::<CheckId>().unwrap(), CheckId::L20A);
        assert!("L99".parse::<CheckId>().is_err());
    }

    #[test]
    fn sweep_ceiling_is_enforced() {
        let opts = RunOptions::default();
        let err = run_check(&small(CheckId::L52, 41), &opts).unwrap_err();
        assert_eq!(
            err,
            Error::SweepTooLarge {
                n_max: 41,
                ceiling: 40
            }
        );
    }

    #[test]
    fn bad_prime_in_sweep() {
        let check = LemmaCheck {
            primes: vec![4],
            ..small(CheckId::L52, 3)
        };
        assert_eq!(
            run_check(&check, &RunOptions::default()).unwrap_err(),
            Error::OddPrimeRequired(4)
        );
    }

    #[test]
    fn counterexamples_are_capped() {
        let opts = RunOptions {
            orientation: Orientation::BottomUp,
            cap: 3,
            ..RunOptions::default()
        };
        let report = run_check(&small(CheckId::MULLX, 10), &opts).unwrap();
        assert!(!report.pass);
        assert_eq!(report.counterexamples.len(), 3);
        assert!(report.truncated > 0);
    }

    #[test]
    fn small_sweeps_pass() {
        let opts = RunOptions::default();
        for id in CheckId::ALL {
            let report = run_check(&small(id, 9), &opts).unwrap();
            assert!(report.pass, "{id}: {:?}", report.counterexamples);
        }
    }
}
