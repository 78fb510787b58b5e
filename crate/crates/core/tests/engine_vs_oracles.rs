use std::collections::BTreeSet;

use argchange_core::oracle::{brute_force_admissible, brute_force_extensions};
use argchange_core::semantics::{admissible_sets, characteristic, status, ArgumentStatus};
use argchange_core::{extensions, Framework, SemanticsKind};
use proptest::prelude::*;

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

fn build(n: usize, matrix: &[bool]) -> Framework {
    let ns = names(n);
    let attacks: Vec<(String, String)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| matrix[i * n + j])
        .map(|(i, j)| (ns[i].clone(), ns[j].clone()))
        .collect();
    Framework::new(&ns, attacks).unwrap()
}

fn frameworks(max: usize) -> impl Strategy<Value = Framework> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.3), n * n).prop_map(move |m| build(n, &m))
    })
}

/// Nodes reachable from `a` by walks of each exact length up to `2n`.
fn walk_parities(f: &Framework, a: &str) -> (BTreeSet<String>, BTreeSet<String>) {
    let n = f.len();
    let mut frontier: BTreeSet<String> = [a.to_string()].into();
    let (mut odd, mut even) = (BTreeSet::new(), BTreeSet::new());
    for len in 1..=2 * n {
        let mut next = BTreeSet::new();
        for x in &frontier {
            for y in f.arguments() {
                if f.has_attack(x, y.as_str()).unwrap() {
                    next.insert(y.to_string());
                }
            }
        }
        if len % 2 == 1 {
            odd.extend(next.iter().cloned());
        } else {
            even.extend(next.iter().cloned());
        }
        frontier = next;
    }
    (odd, even)
}

/// Lengths of all simple cycles, each found once from its smallest node.
fn cycle_lengths(f: &Framework) -> Vec<usize> {
    fn extend(f: &Framework, path: &mut Vec<usize>, out: &mut Vec<usize>) {
        let start = path[0];
        let last = *path.last().unwrap();
        if f.attacks_idx(last, start) {
            out.push(path.len());
        }
        for next in start + 1..f.len() {
            if !path.contains(&next) && f.attacks_idx(last, next) {
                path.push(next);
                extend(f, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..f.len() {
        extend(f, &mut vec![s], &mut out);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn extensions_match_brute_force(f in frameworks(9)) {
        for k in SemanticsKind::ALL {
            prop_assert_eq!(extensions(&f, k), brute_force_extensions(&f, k).unwrap());
        }
        prop_assert_eq!(admissible_sets(&f), brute_force_admissible(&f).unwrap());
    }

    #[test]
    fn indirect_relations_match_walk_enumeration(f in frameworks(6)) {
        for a in f.arguments() {
            let (odd, even) = walk_parities(&f, a.as_str());
            for b in f.arguments() {
                prop_assert_eq!(f.indirectly_attacks(a.as_str(), b.as_str()).unwrap(), odd.contains(b.as_str()));
                prop_assert_eq!(f.indirectly_defends(a.as_str(), b.as_str()).unwrap(), even.contains(b.as_str()));
            }
            let controversial = odd.intersection(&even).next().is_some();
            prop_assert_eq!(f.is_controversial(a.as_str()).unwrap(), controversial);
        }
    }

    #[test]
    fn cycle_tests_match_enumeration(f in frameworks(7)) {
        let lengths = cycle_lengths(&f);
        prop_assert_eq!(f.has_cycle(), !lengths.is_empty());
        prop_assert_eq!(f.has_odd_cycle(), lengths.iter().any(|l| l % 2 == 1));
        prop_assert_eq!(f.has_even_cycle(), lengths.iter().any(|l| l % 2 == 0));
        prop_assert_eq!(f.simple_cycles().len(), lengths.len());
    }

    #[test]
    fn pairwise_scans(f in frameworks(6)) {
        let all: Vec<(String, String)> = f.attacks_named().into_iter().map(|(s, t)| (s.to_string(), t.to_string())).collect();
        for a in f.arguments() {
            let scan: BTreeSet<String> = all.iter().filter(|(_, t)| t == a.as_str()).map(|(s, _)| s.clone()).collect();
            let got: BTreeSet<String> = f.attackers(a.as_str()).unwrap().iter().map(|x| x.to_string()).collect();
            prop_assert_eq!(got, scan);
        }
        let targets: BTreeSet<&str> = all.iter().map(|(_, t)| t.as_str()).collect();
        let unattacked: BTreeSet<&str> = f.arguments().iter().map(|a| a.as_str()).filter(|a| !targets.contains(a)).collect();
        let got = f.unattacked();
        prop_assert_eq!(got.iter().map(|a| a.as_str()).collect::<BTreeSet<_>>(), unattacked);
    }

    #[test]
    fn grounded_is_one_extension_and_contains_unattacked(f in frameworks(8)) {
        let g = extensions(&f, SemanticsKind::Grounded);
        prop_assert_eq!(g.len(), 1);
        prop_assert!(f.unattacked().is_subset(g.iter().next().unwrap()));
        for a in f.arguments() {
            let st = status(&f, a.as_str(), SemanticsKind::Grounded).unwrap();
            prop_assert_ne!(st, ArgumentStatus::CredulouslyOnlyAccepted);
        }
    }
}

#[test]
fn characteristic_of_reference_framework() {
    let f = Framework::new(
        ["A", "B", "C", "D", "F"],
        [("A", "B"), ("B", "A"), ("B", "C"), ("C", "D"), ("D", "F"), ("F", "C")],
    )
    .unwrap();
    let empty: [&str; 0] = [];
    assert!(characteristic(&f, empty).unwrap().is_empty());
    let got: Vec<String> = characteristic(&f, ["B"]).unwrap().iter().map(|a| a.to_string()).collect();
    assert_eq!(got, ["B", "D"]);
}
