//! Vertex connectivity, isoperimetric connectivities, fragments and atoms,
//! and the vosperianity/superconnectivity deciders.
//!
//! `κ` is the least size of a cutset, with `min(∅) = |V| - 1` when no cutset
//! exists. `κ_k` is the least boundary size over sets `X` with
//! `min(|X|, |∇(X)|) >= k`. A regular strongly connected digraph is
//! vosperian exactly when it is not 2-separable or `κ_2 >= d + 1`, and
//! superconnected when every cutset of size at most `d` is the full
//! successor or predecessor set of a single vertex.

use crate::bitset::{BitSet, VertexSet};
use crate::digraph::{degree_profile, Digraph, Fragment, Sign};
use crate::flow::min_vertex_cut;
use serde::Serialize;
use std::collections::HashSet;
use std::ops::ControlFlow;
use thiserror::Error;

/// Largest vertex count handled by single-word exhaustive subset scans.
pub const EXHAUSTIVE_KAPPA_CAP: usize = 20;
/// Largest vertex count for full fragment enumeration.
pub const FRAGMENT_ENUM_CAP: usize = 26;
/// Most candidate sets a superconnectivity scan will enumerate.
const CUTSET_CANDIDATE_BUDGET: u128 = 100_000_000;
/// Most (source, sink) tuple pairs the flow fallback for κ_k will try.
const FLOW_PAIR_BUDGET: u128 = 5_000_000;
/// Most fragments an enumeration will collect before giving up.
const FRAGMENT_COUNT_BUDGET: usize = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConnectivityError {
    #[error("operation requires a regular digraph")]
    NotRegular,
    #[error("operation requires a strongly connected digraph")]
    NotStronglyConnected,
    #[error("separation grade k must be at least 1")]
    BadGrade,
    #[error("digraph is not {k}-separable")]
    NotSeparable { k: usize },
    #[error("instance too large for this operation: {what}")]
    TooLarge { what: String },
}

/// Lexicographic enumeration of all size-`k` subsets of `0..n`.
/// The callback may stop the scan early by breaking.
fn each_combination<B>(
    n: usize,
    k: usize,
    f: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if k > n {
        return ControlFlow::Continue(());
    }
    let mut combo: Vec<usize> = (0..k).collect();
    loop {
        f(&combo)?;
        // Advance the rightmost index that still has room.
        let mut i = k;
        loop {
            if i == 0 {
                return ControlFlow::Continue(());
            }
            i -= 1;
            if combo[i] != i + n - k {
                break;
            }
        }
        combo[i] += 1;
        for j in i + 1..k {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return acc;
        }
    }
    acc
}

/// Minimum cutset cardinality, `|V| - 1` when no cutset exists. Computed as
/// the least over ordered non-adjacent pairs of the minimum vertex cut
/// between them.
pub fn vertex_connectivity(d: &Digraph) -> usize {
    let n = d.vertex_count();
    if n <= 1 {
        return n.saturating_sub(1);
    }
    let mut best = n - 1;
    for x in 0..n {
        for y in 0..n {
            if x == y || d.has_arc(x, y) {
                continue;
            }
            if best == 0 {
                return 0;
            }
            if let Some(cut) = min_vertex_cut(d, &[x], &[y], best) {
                best = best.min(cut);
            }
        }
    }
    best
}

/// Exhaustive κ_k over all subsets; single-word masks, so `n <= 64`.
/// Returns the minimum and one witness mask.
fn kappa_k_exhaustive(d: &Digraph, k: usize) -> Option<(usize, u64)> {
    let n = d.vertex_count();
    debug_assert!(n <= 64 && n > 0);
    let succ: Vec<u64> = (0..n).map(|v| d.successors(v).word0()).collect();
    let full: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let mut best: Option<(usize, u64)> = None;
    for x in 1..full {
        if (x.count_ones() as usize) < k {
            continue;
        }
        let mut nbr = 0u64;
        let mut rest = x;
        while rest != 0 {
            nbr |= succ[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        let exterior = full & !(x | nbr);
        if (exterior.count_ones() as usize) < k {
            continue;
        }
        let cut = (nbr & !x).count_ones() as usize;
        if best.is_none_or(|(b, _)| cut < b) {
            best = Some((cut, x));
        }
    }
    best
}

/// κ_k via minimum vertex cuts between merged k-subsets, for digraphs too
/// large to scan exhaustively.
fn kappa_k_by_flows(d: &Digraph, k: usize) -> Result<Option<usize>, ConnectivityError> {
    let n = d.vertex_count();
    let pairs = binomial(n, k).saturating_mul(binomial(n, k));
    if pairs > FLOW_PAIR_BUDGET {
        return Err(ConnectivityError::TooLarge {
            what: format!("kappa_{k} on {n} vertices needs {pairs} cut computations"),
        });
    }
    let mut best: Option<usize> = None;
    let _ = each_combination::<()>(n, k, &mut |xs| {
        let xs = xs.to_vec();
        each_combination::<()>(n, k, &mut |ys| {
            if ys.iter().any(|y| xs.contains(y)) {
                return ControlFlow::Continue(());
            }
            let cutoff = best.unwrap_or(n);
            if let Some(cut) = min_vertex_cut(d, &xs, ys, cutoff) {
                if best.is_none_or(|b| cut < b) {
                    best = Some(cut);
                }
            }
            ControlFlow::Continue(())
        })
    });
    Ok(best)
}

/// κ_k: the minimum boundary size over k-separations, `None` when the
/// digraph is not k-separable.
pub fn isoperimetric_connectivity(
    d: &Digraph,
    k: usize,
) -> Result<Option<usize>, ConnectivityError> {
    if k < 1 {
        return Err(ConnectivityError::BadGrade);
    }
    let n = d.vertex_count();
    if n == 0 {
        return Ok(None);
    }
    if n <= EXHAUSTIVE_KAPPA_CAP {
        Ok(kappa_k_exhaustive(d, k).map(|(cut, _)| cut))
    } else {
        kappa_k_by_flows(d, k)
    }
}

fn fragment_from_mask(d: &Digraph, mask: u64, k: usize, sign: Sign) -> Fragment {
    let x = BitSet::from_word(d.vertex_count(), mask);
    Fragment {
        boundary: d.boundary(&x),
        exterior: d.exterior(&x),
        vertices: x,
        grade: k,
        sign,
    }
}

/// All k-fragments: subsets achieving `κ_k` among the k-separations.
/// Negative fragments are the fragments of the reverse digraph. Sorted by
/// (cardinality, canonical set order).
pub fn k_fragments(d: &Digraph, k: usize, sign: Sign) -> Result<Vec<Fragment>, ConnectivityError> {
    if k < 1 {
        return Err(ConnectivityError::BadGrade);
    }
    let reversed;
    let graph = match sign {
        Sign::Positive => d,
        Sign::Negative => {
            reversed = d.reverse();
            &reversed
        }
    };
    let n = graph.vertex_count();
    if n > FRAGMENT_ENUM_CAP {
        return Err(ConnectivityError::TooLarge {
            what: format!("fragment enumeration on {n} > {FRAGMENT_ENUM_CAP} vertices"),
        });
    }
    if n == 0 {
        return Err(ConnectivityError::NotSeparable { k });
    }
    let (kappa, _) = kappa_k_exhaustive(graph, k).ok_or(ConnectivityError::NotSeparable { k })?;

    let succ: Vec<u64> = (0..n).map(|v| graph.successors(v).word0()).collect();
    let full: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let mut fragments = Vec::new();
    for x in 1..full {
        if (x.count_ones() as usize) < k {
            continue;
        }
        let mut nbr = 0u64;
        let mut rest = x;
        while rest != 0 {
            nbr |= succ[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        let exterior = full & !(x | nbr);
        if (exterior.count_ones() as usize) < k {
            continue;
        }
        if (nbr & !x).count_ones() as usize == kappa {
            if fragments.len() >= FRAGMENT_COUNT_BUDGET {
                return Err(ConnectivityError::TooLarge {
                    what: format!("more than {FRAGMENT_COUNT_BUDGET} fragments"),
                });
            }
            fragments.push(fragment_from_mask(graph, x, k, sign));
        }
    }
    fragments.sort_by(|a, b| (a.vertices.len(), &a.vertices).cmp(&(b.vertices.len(), &b.vertices)));
    Ok(fragments)
}

/// The k-fragments of minimum cardinality.
pub fn k_atoms(d: &Digraph, k: usize, sign: Sign) -> Result<Vec<Fragment>, ConnectivityError> {
    let fragments = k_fragments(d, k, sign)?;
    let min_size = fragments[0].vertices.len();
    Ok(fragments
        .into_iter()
        .take_while(|f| f.vertices.len() == min_size)
        .collect())
}

fn require_regular_strongly_connected(d: &Digraph) -> Result<usize, ConnectivityError> {
    let profile = degree_profile(d);
    let degree = profile.degree.ok_or(ConnectivityError::NotRegular)?;
    if !d.is_strongly_connected() {
        return Err(ConnectivityError::NotStronglyConnected);
    }
    Ok(degree)
}

/// Vosperianity through the isoperimetric route: not 2-separable, or
/// `κ_2 >= d + 1`. Input must be regular and strongly connected.
pub fn is_vosperian(d: &Digraph) -> Result<bool, ConnectivityError> {
    let degree = require_regular_strongly_connected(d)?;
    Ok(match isoperimetric_connectivity(d, 2)? {
        None => true,
        Some(kappa2) => kappa2 > degree,
    })
}

/// First non-trivial cutset of size at most `d` in (size, lexicographic)
/// order, or `None` when the digraph is superconnected. Candidate sets are
/// enumerated directly and tested with a strong-connectivity check; a
/// cutset is trivial when it equals `Γ(x)` or `Γ⁻(x)` for some vertex.
pub fn superconnectivity_violation(d: &Digraph) -> Result<Option<VertexSet>, ConnectivityError> {
    let degree = require_regular_strongly_connected(d)?;
    let n = d.vertex_count();
    let candidates: u128 = (0..=degree).map(|s| binomial(n, s)).sum();
    if candidates > CUTSET_CANDIDATE_BUDGET {
        return Err(ConnectivityError::TooLarge {
            what: format!("superconnectivity scan over {candidates} candidate cutsets"),
        });
    }
    let trivial: HashSet<BitSet> = (0..n)
        .flat_map(|x| [d.successors(x).clone(), d.predecessors(x).clone()])
        .collect();
    for size in 0..=degree {
        let hit = each_combination(n, size, &mut |combo| {
            let t = BitSet::from_indices(n, combo.iter().copied());
            let rest = t.complement();
            if rest.len() <= 1 || d.is_strongly_connected_within(&rest) {
                return ControlFlow::Continue(());
            }
            if trivial.contains(&t) {
                return ControlFlow::Continue(());
            }
            ControlFlow::Break(t)
        });
        if let ControlFlow::Break(witness) = hit {
            return Ok(Some(witness));
        }
    }
    Ok(None)
}

/// True when every cutset of size at most `d` consists of all successors or
/// all predecessors of a single vertex.
pub fn is_superconnected(d: &Digraph) -> Result<bool, ConnectivityError> {
    Ok(superconnectivity_violation(d)?.is_none())
}

/// Summary of the connectivity analysis of one regular strongly connected
/// digraph, with re-checkable witnesses.
#[derive(Clone, Debug, Serialize)]
pub struct ConnectivityProfile {
    pub kappa: usize,
    pub kappa2: Option<usize>,
    pub degree: usize,
    pub vosperian: bool,
    pub superconnected: bool,
    pub witness_fragment: Option<Fragment>,
    pub witness_cutset: Option<VertexSet>,
}

/// One 2-fragment achieving κ_2, produced without full enumeration when the
/// digraph is too large for it.
fn two_fragment_witness(d: &Digraph) -> Result<Option<Fragment>, ConnectivityError> {
    let n = d.vertex_count();
    if n <= FRAGMENT_ENUM_CAP {
        return match k_fragments(d, 2, Sign::Positive) {
            Ok(fragments) => Ok(fragments.into_iter().next()),
            Err(ConnectivityError::NotSeparable { .. }) => Ok(None),
            Err(e) => Err(e),
        };
    }
    let Some(kappa2) = isoperimetric_connectivity(d, 2)? else {
        return Ok(None);
    };
    // Recover a witness from any optimal merged-pair cut: the source side of
    // the residual network is a 2-fragment.
    let mut found = None;
    let _ = each_combination::<()>(n, 2, &mut |xs| {
        let xs = xs.to_vec();
        each_combination::<()>(n, 2, &mut |ys| {
            if ys.iter().any(|y| xs.contains(y)) {
                return ControlFlow::Continue(());
            }
            if let Some((cut, side)) = crate::flow::min_vertex_cut_with_source_side(d, &xs, ys) {
                if cut == kappa2 {
                    let x = BitSet::from_indices(n, side);
                    found = Some(Fragment {
                        boundary: d.boundary(&x),
                        exterior: d.exterior(&x),
                        vertices: x,
                        grade: 2,
                        sign: Sign::Positive,
                    });
                    return ControlFlow::Break(());
                }
            }
            ControlFlow::Continue(())
        })
    });
    Ok(found)
}

/// Full profile: κ, κ_2, the two deciders, and witnesses.
pub fn connectivity_profile(d: &Digraph) -> Result<ConnectivityProfile, ConnectivityError> {
    let degree = require_regular_strongly_connected(d)?;
    let kappa = vertex_connectivity(d);
    let kappa2 = isoperimetric_connectivity(d, 2)?;
    let vosperian = kappa2.is_none_or(|k2| k2 > degree);
    let witness_cutset = superconnectivity_violation(d)?;
    let witness_fragment = if kappa2.is_some() {
        two_fragment_witness(d)?
    } else {
        None
    };
    Ok(ConnectivityProfile {
        kappa,
        kappa2,
        degree,
        vosperian,
        superconnected: witness_cutset.is_none(),
        witness_fragment,
        witness_cutset,
    })
}
