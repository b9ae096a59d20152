//! Automorphism search, vertex- and arc-transitivity, twin classes and
//! blocks of imprimitivity.
//!
//! The search is plain backtracking over vertex images with iterated
//! degree-refinement for the initial candidate sets and arc-consistency
//! filtering during descent. Full enumeration is capped at 16 vertices;
//! the transitivity tests only ever ask existence questions, so they stay
//! cheap even when the full group would be enormous.

use crate::bitset::{BitSet, VertexSet};
use crate::digraph::Digraph;
use serde::Serialize;
use std::collections::HashMap;
use thiserror::Error;

/// Vertex-count cap for automorphism search.
pub const AUTOMORPHISM_CAP: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymmetryError {
    #[error("automorphism search capped at {cap} vertices, digraph has {n}")]
    TooLarge { n: usize, cap: usize },
    #[error("arc-transitivity is undefined on an arcless digraph")]
    NoArcs,
}

/// A set of automorphisms; `complete` marks the full group as opposed to
/// whatever a partial search produced.
#[derive(Clone, Debug, Serialize)]
pub struct AutomorphismSet {
    pub perms: Vec<Vec<usize>>,
    pub complete: bool,
}

struct Search {
    n: usize,
    succ: Vec<u64>,
    pred: Vec<u64>,
    colors: Vec<u64>,
}

impl Search {
    fn new(d: &Digraph) -> Result<Self, SymmetryError> {
        let n = d.vertex_count();
        if n > AUTOMORPHISM_CAP {
            return Err(SymmetryError::TooLarge {
                n,
                cap: AUTOMORPHISM_CAP,
            });
        }
        let succ: Vec<u64> = (0..n).map(|v| d.successors(v).word0()).collect();
        let pred: Vec<u64> = (0..n).map(|v| d.predecessors(v).word0()).collect();
        let mut search = Search {
            n,
            succ,
            pred,
            colors: Vec::new(),
        };
        search.colors = search.refine_colors();
        Ok(search)
    }

    /// Iterated degree refinement: vertices keep splitting by the multiset
    /// of neighbor colors until stable. Images must share a color.
    fn refine_colors(&self) -> Vec<u64> {
        let n = self.n;
        let mut color: Vec<usize> = (0..n)
            .map(|v| {
                let key = (self.succ[v].count_ones(), self.pred[v].count_ones());
                key.0 as usize * (n + 1) + key.1 as usize
            })
            .collect();
        loop {
            let mut signature: Vec<(usize, Vec<usize>, Vec<usize>)> = Vec::with_capacity(n);
            for v in 0..n {
                let mut out: Vec<usize> = bits(self.succ[v]).map(|w| color[w]).collect();
                let mut inn: Vec<usize> = bits(self.pred[v]).map(|w| color[w]).collect();
                out.sort_unstable();
                inn.sort_unstable();
                signature.push((color[v], out, inn));
            }
            let mut ids: HashMap<&(usize, Vec<usize>, Vec<usize>), usize> = HashMap::new();
            let mut next: Vec<usize> = Vec::with_capacity(n);
            for sig in &signature {
                let fresh = ids.len();
                next.push(*ids.entry(sig).or_insert(fresh));
            }
            if next == color {
                break;
            }
            color = next;
        }
        // Same-color candidate mask per vertex.
        (0..n)
            .map(|v| {
                let mut mask = 0u64;
                for w in 0..n {
                    if color[w] == color[v] {
                        mask |= 1 << w;
                    }
                }
                mask
            })
            .collect()
    }

    /// Backtracking over images. `image[v] = usize::MAX` means unassigned;
    /// `emit` receives each completed automorphism and says whether to keep
    /// searching.
    fn run(&self, seeds: &[(usize, usize)], emit: &mut impl FnMut(&[usize]) -> bool) -> bool {
        let n = self.n;
        let mut candidates: Vec<u64> = self.colors.clone();
        let mut image = vec![usize::MAX; n];
        for &(v, w) in seeds {
            if candidates[v] & (1 << w) == 0 {
                return true;
            }
            if !assign(self, &mut candidates, v, w) {
                return true;
            }
            image[v] = w;
        }
        return descend(self, &mut candidates, &mut image, emit);

        #[allow(clippy::needless_range_loop)]
        fn assign(s: &Search, candidates: &mut [u64], v: usize, w: usize) -> bool {
            // Arc consistency: u must map into/outside the neighborhoods of
            // w exactly as it relates to v.
            for u in 0..s.n {
                if u == v {
                    candidates[u] = 1 << w;
                    continue;
                }
                candidates[u] &= !(1 << w);
                if s.succ[v] >> u & 1 == 1 {
                    candidates[u] &= s.succ[w];
                } else {
                    candidates[u] &= !s.succ[w];
                }
                if s.pred[v] >> u & 1 == 1 {
                    candidates[u] &= s.pred[w];
                } else {
                    candidates[u] &= !s.pred[w];
                }
                if candidates[u] == 0 {
                    return false;
                }
            }
            candidates[v] = 1 << w;
            true
        }

        fn descend(
            s: &Search,
            candidates: &mut Vec<u64>,
            image: &mut Vec<usize>,
            emit: &mut impl FnMut(&[usize]) -> bool,
        ) -> bool {
            // Most-constrained unassigned vertex.
            let pick = (0..s.n)
                .filter(|&v| image[v] == usize::MAX)
                .min_by_key(|&v| candidates[v].count_ones());
            let Some(v) = pick else {
                return emit(image);
            };
            for w in bits(candidates[v]) {
                let saved = candidates.clone();
                if assign(s, candidates, v, w) {
                    image[v] = w;
                    if !descend(s, candidates, image, emit) {
                        return false;
                    }
                    image[v] = usize::MAX;
                }
                *candidates = saved;
            }
            true
        }
    }

    fn find_with(&self, seeds: &[(usize, usize)]) -> Option<Vec<usize>> {
        let mut found = None;
        self.run(seeds, &mut |image| {
            found = Some(image.to_vec());
            false
        });
        found
    }
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

/// The full automorphism group, sorted lexicographically.
pub fn automorphisms(d: &Digraph) -> Result<AutomorphismSet, SymmetryError> {
    let search = Search::new(d)?;
    let mut perms = Vec::new();
    search.run(&[], &mut |image| {
        perms.push(image.to_vec());
        true
    });
    perms.sort();
    Ok(AutomorphismSet {
        perms,
        complete: true,
    })
}

/// True when some automorphism maps any chosen vertex to every other; by
/// group closure it is enough to move a single root everywhere.
pub fn is_vertex_transitive(d: &Digraph) -> Result<bool, SymmetryError> {
    let n = d.vertex_count();
    if n <= 1 {
        return Ok(true);
    }
    let deg0 = (d.successors(0).len(), d.predecessors(0).len());
    if (1..n).any(|v| (d.successors(v).len(), d.predecessors(v).len()) != deg0) {
        return Ok(false);
    }
    let search = Search::new(d)?;
    Ok((1..n).all(|w| search.find_with(&[(0, w)]).is_some()))
}

/// True when some automorphism maps any chosen arc to every other arc.
/// On a vertex-transitive digraph only the arcs leaving one root need to be
/// reached; otherwise every arc is tested against a fixed one.
pub fn is_arc_transitive(d: &Digraph) -> Result<bool, SymmetryError> {
    let Some((x0, y0)) = d.arcs().next() else {
        return Err(SymmetryError::NoArcs);
    };
    let search = Search::new(d)?;
    if is_vertex_transitive(d)? {
        return Ok(d
            .successors(x0)
            .iter()
            .all(|w| search.find_with(&[(x0, x0), (y0, w)]).is_some()));
    }
    for (u, v) in d.arcs() {
        if search.find_with(&[(x0, u), (y0, v)]).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The partition of the vertices into twin classes (equal successor sets).
#[derive(Clone, Debug, Serialize)]
pub struct TwinPartition {
    pub classes: Vec<VertexSet>,
}

impl TwinPartition {
    pub fn all_singletons(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }
}

/// Classes of the relation "same successor set", in canonical order.
pub fn twin_classes(d: &Digraph) -> TwinPartition {
    let n = d.vertex_count();
    let mut by_succ: HashMap<&VertexSet, VertexSet> = HashMap::new();
    for v in 0..n {
        by_succ
            .entry(d.successors(v))
            .or_insert_with(|| BitSet::empty(n))
            .insert(v);
    }
    let mut classes: Vec<VertexSet> = by_succ.into_values().collect();
    classes.sort();
    TwinPartition { classes }
}

/// No twin pair and no anti-twin pair: twin classes of the digraph and of
/// its reverse are all singletons.
pub fn is_irreducible(d: &Digraph) -> bool {
    twin_classes(d).all_singletons() && twin_classes(&d.reverse()).all_singletons()
}

/// Blocks of imprimitivity containing `v`: the trivial blocks plus, for each
/// other vertex `w`, the minimal block containing `{v, w}` obtained by
/// closing the pair under the automorphism group.
pub fn blocks_containing(d: &Digraph, v: usize) -> Result<Vec<VertexSet>, SymmetryError> {
    let n = d.vertex_count();
    let auts = automorphisms(d)?;
    let mut blocks: Vec<VertexSet> = vec![BitSet::singleton(n, v), BitSet::full(n)];
    for w in 0..n {
        if w == v {
            continue;
        }
        let block = minimal_block(n, &auts.perms, v, w);
        if !blocks.contains(&block) {
            blocks.push(block);
        }
    }
    blocks.sort();
    Ok(blocks)
}

/// Union-find closure of the seed pair under every permutation.
fn minimal_block(n: usize, perms: &[Vec<usize>], v: usize, w: usize) -> VertexSet {
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut queue = vec![(v, w)];
    let (rv, rw) = (root(&mut parent, v), root(&mut parent, w));
    parent[rw] = rv;
    while let Some((a, b)) = queue.pop() {
        for p in perms {
            let (x, y) = (root(&mut parent, p[a]), root(&mut parent, p[b]));
            if x != y {
                parent[y] = x;
                queue.push((p[a], p[b]));
            }
        }
    }
    let class = root(&mut parent, v);
    BitSet::from_indices(n, (0..n).filter(|&x| root(&mut parent, x) == class))
}
