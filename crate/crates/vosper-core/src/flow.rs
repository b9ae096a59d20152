//! Unit-capacity max flow on the vertex-split network, used to compute
//! minimum vertex cuts.

use crate::digraph::Digraph;

const INF: u32 = u32::MAX / 2;

struct Edge {
    to: usize,
    cap: u32,
}

/// Residual network with paired forward/backward edges.
struct Network {
    adj: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network {
            adj: vec![Vec::new(); nodes],
            edges: Vec::new(),
        }
    }

    fn add_edge(&mut self, from: usize, to: usize, cap: u32) {
        self.adj[from].push(self.edges.len());
        self.edges.push(Edge { to, cap });
        self.adj[to].push(self.edges.len());
        self.edges.push(Edge { to: from, cap: 0 });
    }

    /// Edmonds-Karp, stopping early once `cutoff` units have been pushed.
    fn max_flow(&mut self, source: usize, sink: usize, cutoff: u32) -> u32 {
        let mut flow = 0;
        let mut parent_edge = vec![usize::MAX; self.adj.len()];
        while flow < cutoff {
            parent_edge.fill(usize::MAX);
            let mut queue = std::collections::VecDeque::from([source]);
            'bfs: while let Some(v) = queue.pop_front() {
                for &e in &self.adj[v] {
                    let to = self.edges[e].to;
                    if self.edges[e].cap > 0 && parent_edge[to] == usize::MAX && to != source {
                        parent_edge[to] = e;
                        if to == sink {
                            break 'bfs;
                        }
                        queue.push_back(to);
                    }
                }
            }
            if parent_edge[sink] == usize::MAX {
                break;
            }
            let mut bottleneck = INF;
            let mut v = sink;
            while v != source {
                let e = parent_edge[v];
                bottleneck = bottleneck.min(self.edges[e].cap);
                v = self.edges[e ^ 1].to;
            }
            let mut v = sink;
            while v != source {
                let e = parent_edge[v];
                self.edges[e].cap -= bottleneck;
                self.edges[e ^ 1].cap += bottleneck;
                v = self.edges[e ^ 1].to;
            }
            flow += bottleneck;
        }
        flow
    }
}

/// Minimum number of vertices outside `sources ∪ sinks` whose removal cuts
/// every directed path from the sources to the sinks. Returns `None` when
/// no vertex cut exists because an arc runs directly between the two sides.
/// Values of `cutoff` or above are reported as `cutoff`.
pub(crate) fn min_vertex_cut(
    d: &Digraph,
    sources: &[usize],
    sinks: &[usize],
    cutoff: usize,
) -> Option<usize> {
    for &s in sources {
        for &t in sinks {
            if s == t || d.has_arc(s, t) {
                return None;
            }
        }
    }
    if cutoff == 0 {
        return Some(0);
    }
    let n = d.vertex_count();
    // Node v splits into v (in) and v + n (out); the two extra nodes are the
    // super source and super sink.
    let source = 2 * n;
    let sink = 2 * n + 1;
    let mut net = Network::new(2 * n + 2);
    for v in 0..n {
        let internal = !sources.contains(&v) && !sinks.contains(&v);
        net.add_edge(v, v + n, if internal { 1 } else { INF });
    }
    for (u, v) in d.arcs() {
        net.add_edge(u + n, v, INF);
    }
    for &s in sources {
        net.add_edge(source, s, INF);
    }
    for &t in sinks {
        net.add_edge(t + n, sink, INF);
    }
    Some(net.max_flow(source, sink, cutoff as u32) as usize)
}

/// Like [`min_vertex_cut`], but also returns the source side of an optimal
/// cut: the original vertices whose out-node stays reachable in the residual
/// network. The boundary of that set is a minimum cut.
pub(crate) fn min_vertex_cut_with_source_side(
    d: &Digraph,
    sources: &[usize],
    sinks: &[usize],
) -> Option<(usize, Vec<usize>)> {
    for &s in sources {
        for &t in sinks {
            if s == t || d.has_arc(s, t) {
                return None;
            }
        }
    }
    let n = d.vertex_count();
    let source = 2 * n;
    let sink = 2 * n + 1;
    let mut net = Network::new(2 * n + 2);
    for v in 0..n {
        let internal = !sources.contains(&v) && !sinks.contains(&v);
        net.add_edge(v, v + n, if internal { 1 } else { INF });
    }
    for (u, v) in d.arcs() {
        net.add_edge(u + n, v, INF);
    }
    for &s in sources {
        net.add_edge(source, s, INF);
    }
    for &t in sinks {
        net.add_edge(t + n, sink, INF);
    }
    let flow = net.max_flow(source, sink, INF);

    let mut reachable = vec![false; 2 * n + 2];
    reachable[source] = true;
    let mut stack = vec![source];
    while let Some(v) = stack.pop() {
        for &e in &net.adj[v] {
            let to = net.edges[e].to;
            if net.edges[e].cap > 0 && !reachable[to] {
                reachable[to] = true;
                stack.push(to);
            }
        }
    }
    let side: Vec<usize> = (0..n).filter(|&v| reachable[v + n]).collect();
    Some((flow as usize, side))
}
