//! Loop-free digraphs with the boundary/exterior calculus and
//! strong-connectivity primitives.
//!
//! For a vertex set `X`, the boundary is `Γ(X) \ X` and the exterior is
//! everything reachable in zero steps from neither: `V \ (X ∪ Γ(X))`.
//! `{X, ∂(X), ∇(X)}` always partitions the vertex set and no arc leaves
//! `X` toward `∇(X)`.

use crate::bitset::{BitSet, GroupSubset, VertexSet};
use crate::group::FiniteGroup;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DigraphError {
    #[error("loop arc ({0}, {0}) not allowed")]
    LoopArc(usize),
    #[error("arc ({u}, {v}) out of range for {n} vertices")]
    ArcOutOfRange { u: usize, v: usize, n: usize },
    #[error("the connection set of a Cayley digraph must not contain the identity")]
    IdentityInConnectionSet,
    #[error("edge list parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Direction tag for fragments and atoms: positive fragments live on the
/// digraph itself, negative ones on its reverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
}

/// A vertex set achieving the k-th isoperimetric minimum, together with its
/// boundary, exterior and separation grade.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fragment {
    pub vertices: VertexSet,
    pub boundary: VertexSet,
    pub exterior: VertexSet,
    pub grade: usize,
    pub sign: Sign,
}

/// A finite directed graph without loops, with successor and predecessor
/// adjacency kept in lockstep.
#[derive(Clone)]
pub struct Digraph {
    n: usize,
    succ: Vec<BitSet>,
    pred: Vec<BitSet>,
    label: String,
}

/// Structural equality: same vertex count and arcs; labels are display
/// metadata only.
impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.succ == other.succ
    }
}

impl Eq for Digraph {}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Digraph({}, n={}, m={})",
            self.label,
            self.n,
            self.arc_count()
        )
    }
}

impl Digraph {
    /// Builds a digraph from explicit arcs; duplicates collapse, loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, arcs: &[(usize, usize)]) -> Result<Self, DigraphError> {
        let mut succ = vec![BitSet::empty(n); n];
        let mut pred = vec![BitSet::empty(n); n];
        for &(u, v) in arcs {
            if u >= n || v >= n {
                return Err(DigraphError::ArcOutOfRange { u, v, n });
            }
            if u == v {
                return Err(DigraphError::LoopArc(u));
            }
            succ[u].insert(v);
            pred[v].insert(u);
        }
        let m = succ.iter().map(BitSet::len).sum::<usize>();
        Ok(Digraph {
            n,
            succ,
            pred,
            label: format!("digraph(n={n},m={m})"),
        })
    }

    /// `Cay(G, S)`: arcs `x -> xs` for every `s` in `S`. The identity is
    /// rejected because it would create loops.
    pub fn cayley(g: &FiniteGroup, s: &GroupSubset) -> Result<Self, DigraphError> {
        if s.contains(g.identity()) {
            return Err(DigraphError::IdentityInConnectionSet);
        }
        let n = g.order();
        let mut succ = vec![BitSet::empty(n); n];
        let mut pred = vec![BitSet::empty(n); n];
        for (x, out) in succ.iter_mut().enumerate() {
            for t in s.iter() {
                let y = g.mul(x, t);
                out.insert(y);
                pred[y].insert(x);
            }
        }
        Ok(Digraph {
            n,
            succ,
            pred,
            label: format!("Cay({},{})", g.label(), s),
        })
    }

    /// Parses the edge-list text format: a first line `n m`, then `m` lines
    /// `u v`; `#` starts a comment, blank lines are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Self, DigraphError> {
        let mut data_lines = text.lines().enumerate().filter_map(|(i, raw)| {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                None
            } else {
                Some((i + 1, line))
            }
        });

        let (line_no, header) = data_lines.next().ok_or(DigraphError::Parse {
            line: 0,
            msg: "missing 'n m' header".into(),
        })?;
        let parse_pair = |line: usize, s: &str| -> Result<(usize, usize), DigraphError> {
            let mut it = s.split_whitespace();
            let bad = |msg: &str| DigraphError::Parse {
                line,
                msg: msg.into(),
            };
            let a = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| bad("expected two integers"))?;
            let b = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| bad("expected two integers"))?;
            if it.next().is_some() {
                return Err(bad("trailing tokens"));
            }
            Ok((a, b))
        };

        let (n, m) = parse_pair(line_no, header)?;
        let mut arcs = Vec::with_capacity(m);
        for _ in 0..m {
            let (line_no, line) = data_lines.next().ok_or(DigraphError::Parse {
                line: line_no,
                msg: format!("expected {m} arc lines"),
            })?;
            arcs.push(parse_pair(line_no, line)?);
        }
        if let Some((line, _)) = data_lines.next() {
            return Err(DigraphError::Parse {
                line,
                msg: "unexpected extra data line".into(),
            });
        }
        Self::from_edge_list(n, &arcs)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.succ.iter().map(BitSet::len).sum()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }

    /// Successor set `Γ(v)`.
    pub fn successors(&self, v: usize) -> &VertexSet {
        &self.succ[v]
    }

    /// Predecessor set `Γ⁻(v)`.
    pub fn predecessors(&self, v: usize) -> &VertexSet {
        &self.pred[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.succ[u].contains(v)
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.succ[u].iter().map(move |v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        BitSet::full(self.n)
    }

    /// The reverse digraph: every arc flipped.
    pub fn reverse(&self) -> Digraph {
        Digraph {
            n: self.n,
            succ: self.pred.clone(),
            pred: self.succ.clone(),
            label: format!("reverse({})", self.label),
        }
    }

    /// `Γ(X)`: all successors of members of `X`.
    pub fn out_neighborhood(&self, x: &VertexSet) -> VertexSet {
        let mut out = BitSet::empty(self.n);
        for v in x.iter() {
            out.union_with(&self.succ[v]);
        }
        out
    }

    /// Boundary `∂(X) = Γ(X) \ X`.
    pub fn boundary(&self, x: &VertexSet) -> VertexSet {
        self.out_neighborhood(x).difference(x)
    }

    /// Exterior `∇(X) = V \ (X ∪ Γ(X))`.
    pub fn exterior(&self, x: &VertexSet) -> VertexSet {
        self.out_neighborhood(x).union(x).complement()
    }

    /// Strong connectivity of the subdigraph induced by `within`; sets of
    /// size at most one count as strongly connected.
    pub fn is_strongly_connected_within(&self, within: &VertexSet) -> bool {
        let k = within.len();
        if k <= 1 {
            return true;
        }
        let root = within.min_index().expect("nonempty");
        self.reach_within(root, within, false).len() == k
            && self.reach_within(root, within, true).len() == k
    }

    /// Strong connectivity of the whole digraph.
    pub fn is_strongly_connected(&self) -> bool {
        self.is_strongly_connected_within(&self.vertex_set())
    }

    fn reach_within(&self, root: usize, within: &VertexSet, backward: bool) -> VertexSet {
        let adj = if backward { &self.pred } else { &self.succ };
        let mut seen = BitSet::empty(self.n);
        seen.insert(root);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for w in adj[v].intersection(within).iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Partition of `within` into maximal strongly connected subsets,
    /// in canonical set order.
    pub fn strongly_connected_components(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut state = TarjanState {
            digraph: self,
            within,
            index: 0,
            indices: vec![usize::MAX; self.n],
            lowlink: vec![0; self.n],
            on_stack: BitSet::empty(self.n),
            stack: Vec::new(),
            components: Vec::new(),
        };
        for v in within.iter() {
            if state.indices[v] == usize::MAX {
                state.connect(v);
            }
        }
        let mut components = state.components;
        components.sort();
        components
    }
}

struct TarjanState<'a> {
    digraph: &'a Digraph,
    within: &'a VertexSet,
    index: usize,
    indices: Vec<usize>,
    lowlink: Vec<usize>,
    on_stack: BitSet,
    stack: Vec<usize>,
    components: Vec<VertexSet>,
}

impl TarjanState<'_> {
    fn connect(&mut self, v: usize) {
        self.indices[v] = self.index;
        self.lowlink[v] = self.index;
        self.index += 1;
        self.stack.push(v);
        self.on_stack.insert(v);

        let neighbors = self.digraph.succ[v].intersection(self.within);
        for w in neighbors.iter() {
            if self.indices[w] == usize::MAX {
                self.connect(w);
                self.lowlink[v] = self.lowlink[v].min(self.lowlink[w]);
            } else if self.on_stack.contains(w) {
                self.lowlink[v] = self.lowlink[v].min(self.indices[w]);
            }
        }

        if self.lowlink[v] == self.indices[v] {
            let mut comp = BitSet::empty(self.digraph.n);
            loop {
                let w = self.stack.pop().expect("tarjan stack");
                self.on_stack.remove(w);
                comp.insert(w);
                if w == v {
                    break;
                }
            }
            self.components.push(comp);
        }
    }
}

/// Regularity report: `degree` is the common in/out degree when `regular`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub regular: bool,
    pub degree: Option<usize>,
}

/// A digraph is regular when every out-degree and every in-degree equals
/// the same value.
pub fn degree_profile(d: &Digraph) -> DegreeProfile {
    let n = d.vertex_count();
    if n == 0 {
        return DegreeProfile {
            regular: true,
            degree: Some(0),
        };
    }
    let degree = d.successors(0).len();
    let regular =
        (0..n).all(|v| d.successors(v).len() == degree && d.predecessors(v).len() == degree);
    DegreeProfile {
        regular,
        degree: regular.then_some(degree),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::parse_group_spec;
    use proptest::prelude::*;

    fn circuit(n: usize) -> Digraph {
        let arcs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Digraph::from_edge_list(n, &arcs).unwrap()
    }

    fn complete(n: usize) -> Digraph {
        let mut arcs = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    arcs.push((u, v));
                }
            }
        }
        Digraph::from_edge_list(n, &arcs).unwrap()
    }

    #[test]
    fn edge_list_construction() {
        let d = Digraph::from_edge_list(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(d.arc_count(), 2);
        assert_eq!(d, d.reverse());

        let tri = Digraph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(tri.is_strongly_connected());

        assert_eq!(
            Digraph::from_edge_list(1, &[(0, 0)]).unwrap_err(),
            DigraphError::LoopArc(0)
        );
        assert!(matches!(
            Digraph::from_edge_list(2, &[(0, 5)]),
            Err(DigraphError::ArcOutOfRange { .. })
        ));
    }

    #[test]
    fn cayley_construction() {
        let z5 = parse_group_spec("Z5").unwrap();
        let c5 = Digraph::cayley(&z5, &z5.subset([1])).unwrap();
        assert_eq!(c5, circuit(5));

        let z4 = parse_group_spec("Z4").unwrap();
        let k4 = Digraph::cayley(&z4, &z4.subset([1, 2, 3])).unwrap();
        assert_eq!(k4, complete(4));

        let sym = Digraph::cayley(&z4, &z4.subset([1, 3])).unwrap();
        for i in 0..4 {
            let mut expected = vec![(i + 1) % 4, (i + 3) % 4];
            expected.sort_unstable();
            assert_eq!(sym.successors(i).to_vec(), expected);
        }
        assert_eq!(sym, sym.reverse());

        assert_eq!(
            Digraph::cayley(&z4, &z4.subset([0, 1])).unwrap_err(),
            DigraphError::IdentityInConnectionSet
        );
    }

    #[test]
    fn reverse_swaps_orientation() {
        let tri = Digraph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let rev = tri.reverse();
        assert!(rev.has_arc(1, 0) && rev.has_arc(2, 1) && rev.has_arc(0, 2));
        assert_eq!(rev.reverse().successors(0), tri.successors(0));
    }

    #[test]
    fn boundary_and_exterior_examples() {
        let c5 = circuit(5);
        assert!(c5.boundary(&BitSet::empty(5)).is_empty());
        let x = BitSet::from_indices(5, [0, 1]);
        assert_eq!(c5.boundary(&x).to_vec(), vec![2]);
        assert_eq!(c5.exterior(&x).to_vec(), vec![3, 4]);
        assert!(c5.boundary(&c5.vertex_set()).is_empty());
        assert_eq!(c5.exterior(&BitSet::empty(5)), c5.vertex_set());
        let k4 = complete(4);
        assert!(k4.exterior(&BitSet::from_indices(4, [2])).is_empty());
    }

    #[test]
    fn strong_connectivity_examples() {
        let tri = Digraph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(tri.is_strongly_connected());

        let c5 = circuit(5);
        let without0 = BitSet::from_indices(5, [1, 2, 3, 4]);
        assert!(!c5.is_strongly_connected_within(&without0));
        assert!(c5.is_strongly_connected_within(&BitSet::empty(5)));
        assert!(c5.is_strongly_connected_within(&BitSet::from_indices(5, [3])));
    }

    #[test]
    fn scc_examples() {
        let c5 = circuit(5);
        let comps = c5.strongly_connected_components(&BitSet::from_indices(5, [1, 2, 3, 4]));
        assert_eq!(comps.len(), 4);
        assert!(comps.iter().all(|c| c.len() == 1));

        let tri = Digraph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(
            tri.strongly_connected_components(&tri.vertex_set()).len(),
            1
        );

        let two_cycles = Digraph::from_edge_list(4, &[(0, 1), (1, 0), (2, 3), (3, 2)]).unwrap();
        let comps = two_cycles.strongly_connected_components(&two_cycles.vertex_set());
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn degree_profiles() {
        let z7 = parse_group_spec("Z7").unwrap();
        let d = Digraph::cayley(&z7, &z7.subset([1, 2, 3])).unwrap();
        assert_eq!(
            degree_profile(&d),
            DegreeProfile {
                regular: true,
                degree: Some(3)
            }
        );

        let star = Digraph::from_edge_list(3, &[(0, 1), (0, 2)]).unwrap();
        assert!(!degree_profile(&star).regular);

        assert_eq!(degree_profile(&complete(4)).degree, Some(3));
    }

    #[test]
    fn edge_list_parsing() {
        let d = Digraph::parse_edge_list("# a triangle\n3 3\n0 1\n1 2 # back\n\n2 0\n").unwrap();
        assert!(d.is_strongly_connected());
        assert!(Digraph::parse_edge_list("").is_err());
        assert!(Digraph::parse_edge_list("2 1\n").is_err());
        assert!(Digraph::parse_edge_list("2 1\n0 1\n1 0").is_err());
        assert!(Digraph::parse_edge_list("2 1\n0 x").is_err());
        assert!(Digraph::parse_edge_list("1 1\n0 0").is_err());
    }

    prop_compose! {
        fn arbitrary_digraph()(n in 1usize..10, seed in any::<u64>()) -> Digraph {
            let mut arcs = Vec::new();
            let mut state = seed;
            for u in 0..n {
                for v in 0..n {
                    if u != v {
                        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        if state >> 60 < 5 {
                            arcs.push((u, v));
                        }
                    }
                }
            }
            Digraph::from_edge_list(n, &arcs).unwrap()
        }
    }

    proptest! {
        #[test]
        fn partition_and_no_forward_arc(d in arbitrary_digraph(), bits in any::<u64>()) {
            let n = d.vertex_count();
            let x = BitSet::from_word(n, bits);
            let b = d.boundary(&x);
            let e = d.exterior(&x);
            prop_assert!(x.is_disjoint(&b) && x.is_disjoint(&e) && b.is_disjoint(&e));
            prop_assert_eq!(x.len() + b.len() + e.len(), n);
            for v in x.iter() {
                prop_assert!(d.successors(v).is_disjoint(&e), "arc from X into the exterior");
            }
            // Boundary duality inclusion on the reverse digraph.
            prop_assert!(d.reverse().boundary(&e).is_subset_of(&b));
        }

        #[test]
        fn k_separation_duality(d in arbitrary_digraph(), bits in any::<u64>(), k in 1usize..3) {
            let n = d.vertex_count();
            let x = BitSet::from_word(n, bits);
            let e = d.exterior(&x);
            let forward = x.len().min(e.len()) >= k;
            let rev = d.reverse();
            let backward = e.len().min(rev.exterior(&e).len()) >= k;
            if forward {
                prop_assert!(backward, "exterior must induce a k-separation on the reverse");
            }
        }

        #[test]
        fn scc_partition_properties(d in arbitrary_digraph(), bits in any::<u64>()) {
            let n = d.vertex_count();
            let within = BitSet::from_word(n, bits);
            let comps = d.strongly_connected_components(&within);
            let mut union = BitSet::empty(n);
            for c in &comps {
                prop_assert!(!c.is_empty());
                prop_assert!(union.is_disjoint(c));
                union.union_with(c);
                prop_assert!(d.is_strongly_connected_within(c));
            }
            prop_assert_eq!(union, within.clone());
            prop_assert_eq!(comps.len() <= 1, d.is_strongly_connected_within(&within));
        }

        #[test]
        fn edge_list_text_round_trips(d in arbitrary_digraph()) {
            let mut text = format!("{} {}\n", d.vertex_count(), d.arc_count());
            for (u, v) in d.arcs() {
                text.push_str(&format!("{u} {v}\n"));
            }
            let parsed = Digraph::parse_edge_list(&text).unwrap();
            prop_assert_eq!(parsed, d);
        }

        #[test]
        fn cayley_left_translations_are_automorphisms(
            spec in prop::sample::select(vec!["Z2xZ3", "Z8", "D4", "Q8", "Dic3"]),
            bits in 1u64..4096,
        ) {
            let g = parse_group_spec(spec).unwrap();
            let s = BitSet::from_word(g.order(), bits & !1);
            prop_assume!(!s.is_empty());
            let d = Digraph::cayley(&g, &s).unwrap();
            for a in 0..g.order() {
                for (u, v) in d.arcs() {
                    prop_assert!(d.has_arc(g.mul(a, u), g.mul(a, v)));
                }
            }
        }
    }
}
