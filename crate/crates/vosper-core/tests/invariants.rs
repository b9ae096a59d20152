//! Cross-module invariants checked over an enumerated small-group corpus
//! and a few fixed digraphs. These complement the per-module unit tests
//! and the quantified suites: everything here re-derives the claimed
//! property from scratch instead of calling back into the code under test.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use vosper_core::classify::{classify_vosperian_cayley, VosperianCondition};
use vosper_core::connectivity::{
    connectivity_profile, is_superconnected, is_vosperian, isoperimetric_connectivity, k_fragments,
    vertex_connectivity,
};
use vosper_core::digraph::Digraph;
use vosper_core::group::{small_group_catalog, FiniteGroup};
use vosper_core::{BitSet, GroupSubset, Sign};

fn generating_corpus(max_order: usize) -> Vec<(FiniteGroup, GroupSubset)> {
    let mut items = Vec::new();
    for g in small_group_catalog(max_order).unwrap() {
        let n = g.order();
        let elements: Vec<usize> = (0..n).filter(|&x| x != g.identity()).collect();
        for mask in 1u64..(1 << elements.len()) {
            let s = g.subset(
                elements
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &x)| x),
            );
            if g.is_generating(&s) {
                items.push((g.clone(), s));
            }
        }
    }
    items
}

fn random_regular(rng: &mut ChaCha8Rng, n: usize, degree: usize) -> Option<Digraph> {
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for _ in 0..degree {
        let mut perm: Vec<usize> = (0..n).collect();
        for _ in 0..100 {
            perm.shuffle(rng);
            if perm.iter().enumerate().all(|(i, &p)| i != p) {
                break;
            }
        }
        for (u, &v) in perm.iter().enumerate() {
            if u == v || arcs.contains(&(u, v)) {
                return None;
            }
            arcs.push((u, v));
        }
    }
    let d = Digraph::from_edge_list(n, &arcs).ok()?;
    d.is_strongly_connected().then_some(d)
}

#[test]
fn vosperian_implies_superconnected_and_is_reverse_symmetric() {
    let mut instances: Vec<Digraph> = generating_corpus(8)
        .iter()
        .map(|(g, s)| Digraph::cayley(g, s).unwrap())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut found = 0;
    while found < 60 {
        let n = rng.gen_range(4..=9);
        let degree = rng.gen_range(1..=3.min(n - 2));
        if let Some(d) = random_regular(&mut rng, n, degree) {
            instances.push(d);
            found += 1;
        }
    }
    for d in &instances {
        let vosperian = is_vosperian(d).unwrap();
        if vosperian {
            assert!(
                is_superconnected(d).unwrap(),
                "{d:?} vosperian but not superconnected"
            );
        }
        assert_eq!(
            vosperian,
            is_vosperian(&d.reverse()).unwrap(),
            "{d:?}: vosperianity differs on the reverse"
        );
    }
}

#[test]
fn profile_orderings_hold_on_the_corpus() {
    for (g, s) in generating_corpus(6) {
        let d = Digraph::cayley(&g, &s).unwrap();
        let p = connectivity_profile(&d).unwrap();
        let n = d.vertex_count();
        assert!(
            p.kappa <= p.degree || p.kappa == n - 1,
            "{d:?}: kappa {} exceeds degree {} without the no-cutset convention",
            p.kappa,
            p.degree
        );
        if let Some(k2) = p.kappa2 {
            assert!(p.kappa <= k2, "{d:?}: kappa exceeds kappa_2");
        }
        if p.vosperian {
            assert!(p.superconnected);
        }
        if let Some(f) = &p.witness_fragment {
            assert_eq!(f.boundary.len(), p.kappa2.unwrap());
        }
        if let Some(t) = &p.witness_cutset {
            assert!(!p.superconnected);
            assert!(t.len() <= p.degree);
            assert!(!d.is_strongly_connected_within(&t.complement()));
        }
    }
}

#[test]
fn fragments_are_genuine_separations() {
    let z9 = FiniteGroup::cyclic(9).unwrap();
    let z10 = FiniteGroup::cyclic(10).unwrap();
    let instances = [
        Digraph::cayley(&z9, &z9.subset([1])).unwrap(),
        Digraph::cayley(&z9, &z9.subset([1, 2])).unwrap(),
        Digraph::cayley(&z10, &z10.subset([1, 5])).unwrap(),
        Digraph::cayley(&z10, &z10.subset([2, 3])).unwrap(),
    ];
    for d in &instances {
        let n = d.vertex_count();
        for k in 1..=2 {
            let Some(kappa_k) = isoperimetric_connectivity(d, k).unwrap() else {
                continue;
            };
            for sign in [Sign::Positive, Sign::Negative] {
                let graph = match sign {
                    Sign::Positive => d.clone(),
                    Sign::Negative => d.reverse(),
                };
                let fragments = k_fragments(d, k, sign).unwrap();
                assert!(!fragments.is_empty());
                for f in &fragments {
                    assert_eq!(f.grade, k);
                    assert_eq!(f.sign, sign);
                    assert_eq!(f.boundary.len(), kappa_k);
                    assert!(f.vertices.len() >= k && f.exterior.len() >= k);
                    // The three parts tile the vertex set.
                    let mut union = f.vertices.union(&f.boundary).union(&f.exterior);
                    assert_eq!(union.len(), n);
                    union = f.vertices.intersection(&f.boundary);
                    assert!(union.is_empty());
                    // No arc may leave the fragment for its exterior.
                    for v in f.vertices.iter() {
                        assert!(graph.successors(v).is_disjoint(&f.exterior));
                    }
                    assert_eq!(graph.boundary(&f.vertices), f.boundary);
                    assert_eq!(graph.exterior(&f.vertices), f.exterior);
                }
            }
        }
    }
}

#[test]
fn emitted_subgroup_witnesses_reverify_from_scratch() {
    // Recompute the union-of-cosets inequality with plain loops, without
    // going through the classifier's own helpers.
    let mut checked = 0;
    for (g, s) in generating_corpus(8) {
        let verdict = classify_vosperian_cayley(&g, &s).unwrap();
        let Some(w) = &verdict.subgroup_witness else {
            continue;
        };
        checked += 1;
        let n = g.order();
        let h: Vec<usize> = w.subgroup.to_vec();
        assert!(h.len() >= 2);
        assert!(h.contains(&g.identity()));
        for &x in &h {
            assert!(h.contains(&g.inverse(x)));
            for &y in &h {
                assert!(h.contains(&g.mul(x, y)), "witness subgroup not closed");
            }
        }
        let mut s_tilde: Vec<usize> = s.to_vec();
        s_tilde.push(g.identity());
        let mut union: Vec<usize> = Vec::new();
        for &x in &h {
            let (left, right) = (g.mul(w.element, x), g.mul(x, w.element));
            let coset_elt = match verdict.condition {
                VosperianCondition::CondI => right,
                VosperianCondition::CondII => left,
                _ => unreachable!("subgroup witness implies a coset-union condition"),
            };
            for value in [x, coset_elt] {
                if !union.contains(&value) {
                    union.push(value);
                }
            }
        }
        let mut product: Vec<usize> = Vec::new();
        for &p in &union {
            for &t in &s_tilde {
                let value = match verdict.condition {
                    VosperianCondition::CondI => g.mul(p, t),
                    VosperianCondition::CondII => g.mul(t, p),
                    _ => unreachable!(),
                };
                if !product.contains(&value) {
                    product.push(value);
                }
            }
        }
        assert!(
            product.len() <= (n - 2).min(union.len() + s.len()),
            "Cay({},{s}): witness inequality fails on recomputation",
            g.label()
        );
    }
    assert!(
        checked > 0,
        "corpus must exercise the coset-union conditions"
    );
}

#[test]
fn fragment_enumeration_is_complete() {
    // Re-enumerate fragments with set-level operations and compare with
    // the production scan, which works on raw machine words.
    let z7 = FiniteGroup::cyclic(7).unwrap();
    let z8 = FiniteGroup::cyclic(8).unwrap();
    let instances = [
        Digraph::cayley(&z7, &z7.subset([1])).unwrap(),
        Digraph::cayley(&z7, &z7.subset([1, 2])).unwrap(),
        Digraph::cayley(&z8, &z8.subset([1, 4])).unwrap(),
        Digraph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 0)])
            .unwrap(),
    ];
    for d in &instances {
        let n = d.vertex_count();
        for k in 1..=2 {
            let Some(kappa_k) = isoperimetric_connectivity(d, k).unwrap() else {
                assert!(matches!(
                    k_fragments(d, k, Sign::Positive),
                    Err(vosper_core::connectivity::ConnectivityError::NotSeparable { .. })
                ));
                continue;
            };
            let mut expected: Vec<Vec<usize>> = Vec::new();
            for mask in 1u64..(1 << n) {
                let x = BitSet::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1));
                if x.len() >= k && d.exterior(&x).len() >= k && d.boundary(&x).len() == kappa_k {
                    expected.push(x.to_vec());
                }
            }
            let mut got: Vec<Vec<usize>> = k_fragments(d, k, Sign::Positive)
                .unwrap()
                .iter()
                .map(|f| f.vertices.to_vec())
                .collect();
            expected.sort();
            got.sort();
            assert_eq!(got, expected, "{d:?} k={k}");
        }
    }
}

#[test]
fn flow_connectivity_matches_definition_on_fixed_cases() {
    // kappa by flows against a direct reading of the definition: smallest
    // T whose removal leaves a non-strongly-connected remainder.
    let z6 = FiniteGroup::cyclic(6).unwrap();
    let d4 = FiniteGroup::dihedral(4).unwrap();
    let instances = [
        Digraph::cayley(&z6, &z6.subset([1, 3])).unwrap(),
        Digraph::cayley(&z6, &z6.subset([2, 3])).unwrap(),
        Digraph::cayley(&d4, &d4.subset([1, 4])).unwrap(),
        Digraph::from_edge_list(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 0)]).unwrap(),
    ];
    for d in &instances {
        let n = d.vertex_count();
        let mut smallest = n - 1;
        for mask in 0u64..(1 << n) {
            let t = BitSet::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1));
            let rest = t.complement();
            if t.len() < smallest && rest.len() >= 2 && !d.is_strongly_connected_within(&rest) {
                smallest = t.len();
            }
        }
        assert_eq!(vertex_connectivity(d), smallest, "{d:?}");
    }
}
