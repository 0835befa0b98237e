use modrep::branching::{
    classify_nodes, classify_nodes_with, reduce_signature, signature, tilde_e, tilde_f, NodeKind,
    Orientation, SignatureEntry,
};
use modrep::partition::{enumerate_partitions, Partitions, PrimeParam};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn primes() -> Vec<PrimeParam> {
    [3, 5, 7]
        .into_iter()
        .map(|p| PrimeParam::new(p).unwrap())
        .collect()
}

/// Cancels (addable, removable) neighbours in a random order.
fn reduce_randomly(word: &[SignatureEntry], rng: &mut StdRng) -> Vec<SignatureEntry> {
    let mut word = word.to_vec();
    loop {
        let pairs: Vec<usize> = (0..word.len().saturating_sub(1))
            .filter(|&k| {
                word[k].kind == NodeKind::Addable && word[k + 1].kind == NodeKind::Removable
            })
            .collect();
        let Some(&k) = pairs.choose(rng) else {
            return word;
        };
        word.drain(k..k + 2);
    }
}

#[test]
fn bracket_reduction_is_confluent() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for p in [3, 5].map(|p| PrimeParam::new(p).unwrap()) {
        for n in 0..=12 {
            for lambda in Partitions::new(n) {
                for orientation in Orientation::ALL {
                    for i in 0..p.get() {
                        let word = signature(&lambda, i, p, orientation);
                        let reduced = reduce_signature(&word);
                        for _ in 0..3 {
                            assert_eq!(reduce_randomly(&word, &mut rng), reduced, "{lambda} i={i}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn normal_nodes_lie_above_conormal_nodes() {
    for p in primes() {
        for n in 0..=12 {
            for lambda in Partitions::new(n) {
                let c = classify_nodes(&lambda, p);
                for i in 0..p.get() as usize {
                    assert!(c.normal[i].iter().all(|x| c.removable[i].contains(x)));
                    assert!(c.conormal[i].iter().all(|x| c.addable[i].contains(x)));
                    if let (Some(low), Some(high)) = (c.normal[i].last(), c.conormal[i].first()) {
                        assert!(low.row < high.row, "{lambda} residue {i}");
                    }
                }
            }
        }
    }
}

#[test]
fn conormal_excess_holds_in_either_orientation() {
    for p in primes() {
        for n in 0..=10 {
            for lambda in Partitions::new(n) {
                for orientation in Orientation::ALL {
                    let c = classify_nodes_with(&lambda, p, orientation);
                    assert_eq!(c.phi_total(), c.epsilon_total() + 1);
                }
            }
        }
    }
}

#[test]
fn removing_a_node_keeps_other_residues_normal() {
    for p in primes() {
        for n in 1..=12 {
            for beta in Partitions::new(n) {
                let cb = classify_nodes(&beta, p);
                for node in beta.removable_nodes() {
                    let j = node.residue(p) as usize;
                    let alpha = beta.remove_node(node).unwrap();
                    let ca = classify_nodes(&alpha, p);
                    for i in (0..p.get() as usize).filter(|&i| i != j) {
                        assert!(cb.normal[i].iter().all(|x| ca.normal[i].contains(x)));
                        assert!(ca.conormal[i].iter().all(|x| cb.conormal[i].contains(x)));
                    }
                }
            }
        }
    }
}

#[test]
fn crystal_operators_preserve_regularity_and_size() {
    for p in primes() {
        for n in 0..=14 {
            for lambda in enumerate_partitions(n, p, true) {
                let c = classify_nodes(&lambda, p);
                for i in 0..p.get() {
                    match tilde_e(&lambda, i, p) {
                        Some(down) => {
                            assert!(c.epsilon[i as usize] > 0);
                            assert_eq!(down.size() + 1, n);
                            assert!(down.is_p_regular(p), "ẽ_{i}({lambda}) = {down}");
                        }
                        None => assert_eq!(c.epsilon[i as usize], 0),
                    }
                    match tilde_f(&lambda, i, p) {
                        Some(up) => {
                            assert_eq!(up.size(), n + 1);
                            assert!(up.is_p_regular(p), "f̃_{i}({lambda}) = {up}");
                            assert_eq!(tilde_e(&up, i, p), Some(lambda.clone()));
                        }
                        None => assert_eq!(c.phi[i as usize], 0),
                    }
                }
            }
        }
    }
}
