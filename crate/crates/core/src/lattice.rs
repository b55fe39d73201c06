//! Hasse diagrams of finite distributive lattices.
//!
//! A diagram is a digraph with an arc `(u, v)` whenever `v ≺ u`, i.e. arcs
//! run from a covering element down to the element it covers. Rank 0 is the
//! minimum. For a filter lattice `F(P)` ordered by reverse inclusion the
//! minimum is the full ground set, the maximum is `∅`, and
//! `rank(Y) = |P| - |Y|`.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;
use crate::poset::Poset;

/// Largest filter count [`filter_lattice`] will build.
pub const MAX_LATTICE_VERTICES: usize = 1 << 21;

/// Largest diagram [`iso_check`] accepts.
pub const MAX_ISO_VERTICES: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum VertexLabel {
    /// Filter members by poset position.
    Filter(BitSet),
    Synthetic(usize),
}

#[derive(Debug, Clone)]
pub struct LatticeDiagram {
    labels: Vec<VertexLabel>,
    /// `down[u]`: the vertices `u` covers, sorted.
    down: Vec<Vec<usize>>,
    /// `up[v]`: the vertices covering `v`, sorted.
    up: Vec<Vec<usize>>,
    rank: Vec<usize>,
    n_source: Option<usize>,
    bottom: usize,
    top: usize,
}

/// The interval `[bottom, top]` of a host diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    pub bottom: usize,
    pub top: usize,
}

/// Per-vertex down-sets (`v ≤ u` iff `v ∈ down_set(u)`), self included.
#[derive(Debug, Clone)]
pub struct Reachability {
    down: Vec<BitSet>,
}

impl Reachability {
    pub fn leq(&self, v: usize, u: usize) -> bool {
        self.down[u].contains(v)
    }

    pub fn down_set(&self, u: usize) -> &BitSet {
        &self.down[u]
    }
}

impl LatticeDiagram {
    fn from_arcs(
        labels: Vec<VertexLabel>,
        arcs: &[(usize, usize)],
        n_source: Option<usize>,
    ) -> Result<Self> {
        let n = labels.len();
        let mut down = vec![Vec::new(); n];
        let mut up = vec![Vec::new(); n];
        for &(u, v) in arcs {
            down[u].push(v);
            up[v].push(u);
        }
        for l in down.iter_mut().chain(up.iter_mut()) {
            l.sort_unstable();
            l.dedup();
        }
        let mins: Vec<usize> = (0..n).filter(|&v| down[v].is_empty()).collect();
        let maxs: Vec<usize> = (0..n).filter(|&v| up[v].is_empty()).collect();
        let (&[bottom], &[top]) = (&mins[..], &maxs[..]) else {
            return Err(Error::InvalidLattice(format!(
                "{} minimal and {} maximal vertices",
                mins.len(),
                maxs.len()
            )));
        };
        // Ranks by breadth-first layering from the minimum; a graded
        // diagram puts every arc between consecutive layers.
        let mut rank = vec![usize::MAX; n];
        rank[bottom] = 0;
        let mut queue = VecDeque::from([bottom]);
        while let Some(v) = queue.pop_front() {
            for &u in &up[v] {
                if rank[u] == usize::MAX {
                    rank[u] = rank[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        if rank.contains(&usize::MAX) {
            return Err(Error::InvalidLattice("disconnected diagram".into()));
        }
        if let Some(&(u, v)) = arcs.iter().find(|&&(u, v)| rank[u] != rank[v] + 1) {
            return Err(Error::InvalidLattice(format!(
                "not graded: arc {u} -> {v} spans ranks {} -> {}",
                rank[u], rank[v]
            )));
        }
        Ok(Self {
            labels,
            down,
            up,
            rank,
            n_source,
            bottom,
            top,
        })
    }

    /// Diagram of an order given as a `≤` oracle on `0..n`; covers are
    /// recovered by transitive reduction.
    pub fn from_order(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut below: Vec<BitSet> = vec![BitSet::with_capacity(n); n];
        let mut above: Vec<BitSet> = vec![BitSet::with_capacity(n); n];
        for u in 0..n {
            for v in 0..n {
                if u != v && leq(v, u) {
                    if leq(u, v) {
                        return Err(Error::InvalidLattice(format!(
                            "{u} and {v} are mutually below each other"
                        )));
                    }
                    below[u].insert(v);
                    above[v].insert(u);
                }
            }
        }
        let mut arcs = Vec::new();
        for u in 0..n {
            for v in below[u].iter() {
                if below[u].is_disjoint(&above[v]) {
                    arcs.push((u, v));
                }
            }
        }
        let labels = (0..n).map(VertexLabel::Synthetic).collect();
        Self::from_arcs(labels, &arcs, None)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, v: usize) -> &VertexLabel {
        &self.labels[v]
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn height(&self) -> usize {
        self.rank[self.top]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn n_source(&self) -> Option<usize> {
        self.n_source
    }

    /// Vertices covered by `u`.
    pub fn down(&self, u: usize) -> &[usize] {
        &self.down[u]
    }

    /// Vertices covering `v`.
    pub fn up(&self, v: usize) -> &[usize] {
        &self.up[v]
    }

    pub fn indegree(&self, v: usize) -> usize {
        self.up[v].len()
    }

    pub fn outdegree(&self, v: usize) -> usize {
        self.down[v].len()
    }

    pub fn arc_count(&self) -> usize {
        self.down.iter().map(Vec::len).sum()
    }

    /// Arcs `(u, v)` with `v ≺ u`, ordered by `u` then `v`.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.down
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().map(move |&v| (u, v)))
    }

    /// Position of the vertex labelled by this filter, if any.
    pub fn vertex_of(&self, filter: &BitSet) -> Option<usize> {
        self.labels
            .iter()
            .position(|l| matches!(l, VertexLabel::Filter(f) if f == filter))
    }

    pub fn reachability(&self) -> Reachability {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| self.rank[v]);
        let mut down = vec![BitSet::with_capacity(n); n];
        for &u in &order {
            let mut d = BitSet::with_capacity(n);
            d.insert(u);
            for &v in &self.down[u] {
                d.union_with(&down[v]);
            }
            down[u] = d;
        }
        Reachability { down }
    }

    /// Same vertices with every arc reversed; ranks are mirrored.
    pub fn order_dual(&self) -> LatticeDiagram {
        let arcs: Vec<_> = self.arcs().map(|(u, v)| (v, u)).collect();
        Self::from_arcs(self.labels.clone(), &arcs, self.n_source)
            .expect("dual of a graded diagram is graded")
    }

    pub fn underlying_graph(&self) -> UndirectedGraph {
        UndirectedGraph::from_edges(self.len(), self.arcs())
    }

    /// DOT digraph; node ids follow vertex order, labels are filter bit
    /// strings or synthetic ids, and `rank` is a node attribute.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        writeln!(s, "digraph {name} {{").unwrap();
        for v in 0..self.len() {
            let label = match &self.labels[v] {
                VertexLabel::Filter(f) => f.to_bit_string(self.n_source.unwrap_or(0)),
                VertexLabel::Synthetic(id) => format!("s{id}"),
            };
            writeln!(s, "  v{v} [label=\"{label}\", rank={}];", self.rank[v]).unwrap();
        }
        for (u, v) in self.arcs() {
            writeln!(s, "  v{u} -> v{v};").unwrap();
        }
        s.push_str("}\n");
        s
    }
}

/// The filter lattice `F(P)`, vertices in canonical filter order.
pub fn filter_lattice(p: &Poset) -> Result<LatticeDiagram> {
    let filters = p.enumerate_filters()?;
    if filters.len() > MAX_LATTICE_VERTICES {
        return Err(Error::Capacity {
            what: "filter lattice",
            size: filters.len(),
            limit: MAX_LATTICE_VERTICES,
        });
    }
    let index: HashMap<&BitSet, usize> = filters
        .iter()
        .enumerate()
        .map(|(i, f)| (f.members(), i))
        .collect();
    let n = p.len();
    let mut arcs = Vec::new();
    for (u, f) in filters.iter().enumerate() {
        for e in 0..n {
            if f.members().contains(e) {
                continue;
            }
            let mut g = f.members().clone();
            g.insert(e);
            if let Some(&v) = index.get(&g) {
                arcs.push((u, v));
            }
        }
    }
    let labels = filters
        .into_iter()
        .map(|f| VertexLabel::Filter(f.into_members()))
        .collect();
    let lat = LatticeDiagram::from_arcs(labels, &arcs, Some(n))?;
    debug_assert!((0..lat.len()).all(|v| match &lat.labels[v] {
        VertexLabel::Filter(f) => lat.rank[v] == n - f.len(),
        VertexLabel::Synthetic(_) => false,
    }));
    Ok(lat)
}

impl Interval {
    /// `[bottom, top]`; fails unless `bottom ≤ top`.
    pub fn new(host: &LatticeDiagram, bottom: usize, top: usize) -> Result<Self> {
        Self::with_reachability(&host.reachability(), bottom, top)
    }

    pub fn with_reachability(reach: &Reachability, bottom: usize, top: usize) -> Result<Self> {
        if !reach.leq(bottom, top) {
            return Err(Error::NotAnInterval { bottom, top });
        }
        Ok(Self { bottom, top })
    }

    pub fn whole(host: &LatticeDiagram) -> Self {
        Self {
            bottom: host.bottom,
            top: host.top,
        }
    }

    /// `{v : bottom ≤ v ≤ top}` in increasing vertex order.
    pub fn vertices(&self, reach: &Reachability) -> Vec<usize> {
        reach
            .down_set(self.top)
            .iter()
            .filter(|&v| reach.leq(self.bottom, v))
            .collect()
    }

    /// The interval as a diagram of its own, labels inherited.
    pub fn sublattice(&self, host: &LatticeDiagram) -> LatticeDiagram {
        let reach = host.reachability();
        let verts = self.vertices(&reach);
        let pos: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let arcs: Vec<_> = host
            .arcs()
            .filter_map(|(u, v)| Some((*pos.get(&u)?, *pos.get(&v)?)))
            .collect();
        let labels = verts.iter().map(|&v| host.labels[v].clone()).collect();
        LatticeDiagram::from_arcs(labels, &arcs, host.n_source)
            .expect("an interval of a graded lattice is a graded lattice")
    }
}

/// Whether every maximal chain of `host` meets `k`.
///
/// Maximal chains are the top-to-bottom paths of the diagram, so `k` is a
/// cutting iff no such path survives deleting its vertices.
pub fn is_cutting(host: &LatticeDiagram, k: &Interval) -> bool {
    let reach = host.reachability();
    let in_k = |v: usize| reach.leq(k.bottom, v) && reach.leq(v, k.top);
    if in_k(host.top) || in_k(host.bottom) {
        return true;
    }
    let mut seen = vec![false; host.len()];
    let mut stack = vec![host.top];
    seen[host.top] = true;
    while let Some(u) = stack.pop() {
        if u == host.bottom {
            return false;
        }
        for &v in &host.down[u] {
            if !seen[v] && !in_k(v) {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    true
}

/// `L ⊞ K`: the host with the cutting `K` doubled.
///
/// Vertex `i < |L|` is the host's vertex `i`; vertex `|L| + j` is the copy
/// of the `j`-th vertex of `K` (in increasing host order). The copy sits
/// just below `K`: for `x, y ∈ K` and `z ∈ L`,
/// `z ≤ y'` iff `z ∉ K` and `z ≤ y`; `x' ≤ z` iff `x ≤ z`; `x' ≤ y'` iff `x ≤ y`.
pub fn convex_expansion(host: &LatticeDiagram, k: &Interval) -> Result<LatticeDiagram> {
    if !is_cutting(host, k) {
        return Err(Error::NotACutting {
            bottom: k.bottom,
            top: k.top,
        });
    }
    let reach = host.reachability();
    let kv = k.vertices(&reach);
    let n = host.len();
    let in_k = |v: usize| reach.leq(k.bottom, v) && reach.leq(v, k.top);
    let leq = |a: usize, b: usize| match (a < n, b < n) {
        (true, true) => reach.leq(a, b),
        (false, true) => reach.leq(kv[a - n], b),
        (true, false) => !in_k(a) && reach.leq(a, kv[b - n]),
        (false, false) => reach.leq(kv[a - n], kv[b - n]),
    };
    LatticeDiagram::from_order(n + kv.len(), leq)
}

/// Whether a rank-preserving digraph isomorphism exists.
pub fn iso_check(a: &LatticeDiagram, b: &LatticeDiagram) -> Result<bool> {
    for l in [a, b] {
        if l.len() > MAX_ISO_VERTICES {
            return Err(Error::Capacity {
                what: "diagram for isomorphism check",
                size: l.len(),
                limit: MAX_ISO_VERTICES,
            });
        }
    }
    if a.len() != b.len() || a.arc_count() != b.arc_count() {
        return Ok(false);
    }
    let sig = |l: &LatticeDiagram, v: usize| (l.rank[v], l.indegree(v), l.outdegree(v));
    let mut sa: Vec<_> = (0..a.len()).map(|v| sig(a, v)).collect();
    let mut sb: Vec<_> = (0..b.len()).map(|v| sig(b, v)).collect();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(false);
    }
    // Breadth-first from the top: every later vertex has an earlier upper
    // neighbour whose image pins down the candidates.
    let mut order = Vec::with_capacity(a.len());
    let mut parent = vec![usize::MAX; a.len()];
    let mut seen = vec![false; a.len()];
    seen[a.top] = true;
    let mut queue = VecDeque::from([a.top]);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &v in &a.down[u] {
            if !seen[v] {
                seen[v] = true;
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    let mut search = IsoSearch {
        a,
        b,
        order: &order,
        parent: &parent,
        map: vec![usize::MAX; a.len()],
        used: vec![false; b.len()],
    };
    Ok(search.extend(0))
}

struct IsoSearch<'a> {
    a: &'a LatticeDiagram,
    b: &'a LatticeDiagram,
    order: &'a [usize],
    parent: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl IsoSearch<'_> {
    fn extend(&mut self, i: usize) -> bool {
        let Some(&v) = self.order.get(i) else {
            return true;
        };
        let candidates: Vec<usize> = if self.parent[v] == usize::MAX {
            vec![self.b.top]
        } else {
            self.b.down[self.map[self.parent[v]]].clone()
        };
        for w in candidates {
            if self.used[w] || !self.compatible(v, w) {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if self.extend(i + 1) {
                return true;
            }
            self.used[w] = false;
            self.map[v] = usize::MAX;
        }
        false
    }

    fn compatible(&self, v: usize, w: usize) -> bool {
        let (a, b) = (self.a, self.b);
        if a.rank[v] != b.rank[w]
            || a.indegree(v) != b.indegree(w)
            || a.outdegree(v) != b.outdegree(w)
        {
            return false;
        }
        let ok_up = a.up[v]
            .iter()
            .all(|&u| self.map[u] == usize::MAX || b.up[w].binary_search(&self.map[u]).is_ok());
        let ok_down = a.down[v]
            .iter()
            .all(|&u| self.map[u] == usize::MAX || b.down[w].binary_search(&self.map[u]).is_ok());
        ok_up && ok_down
    }
}
