//! The prime-sum graph of an ideal and the structural tests run on it.
//!
//! Vertices are prime indices `1..=s`. Vertex sets reuse [`VarSet`], which
//! caps graphs at 64 vertices.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::ideal::SquarefreeIdeal;
use crate::varset::VarSet;

/// Simple undirected graph on `1..=s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VarSet>,
}

/// Gluing data for a concatenation: `left ∪ right` is every vertex,
/// `left ∩ right = {vertex}`, and all pairs across the two sides (other than
/// the shared vertex) are edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConcatSplit {
    pub vertex: usize,
    pub left: VarSet,
    pub right: VarSet,
}

impl Graph {
    pub fn empty(s: usize) -> Self {
        assert!(s <= 64, "graphs are limited to 64 vertices");
        Graph {
            adj: vec![VarSet::empty(); s],
        }
    }

    pub fn complete(s: usize) -> Self {
        let mut g = Graph::empty(s);
        for (i, j) in (1..=s).tuple_combinations() {
            g.add_edge(i, j);
        }
        g
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(s: usize, edges: I) -> Self {
        let mut g = Graph::empty(s);
        for (i, j) in edges {
            g.add_edge(i, j);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VarSet {
        VarSet::full(self.vertex_count())
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        let s = self.vertex_count();
        assert!(
            i != j && (1..=s).contains(&i) && (1..=s).contains(&j),
            "bad edge {{{i},{j}}}"
        );
        self.adj[i - 1].insert(j);
        self.adj[j - 1].insert(i);
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj.get(i.wrapping_sub(1)).is_some_and(|a| a.contains(j))
    }

    pub fn neighbors(&self, i: usize) -> VarSet {
        self.adj[i - 1]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i - 1].len()
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.vertex_count())
            .flat_map(|i| self.neighbors(i).iter().filter(move |&j| j > i).map(move |j| (i, j)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        Graph {
            adj: (1..=self.vertex_count())
                .map(|i| all - self.adj[i - 1] - VarSet::singleton(i))
                .collect(),
        }
    }

    /// Connected components of the subgraph induced on `within`, ordered by
    /// their smallest vertex.
    pub fn components(&self, within: VarSet) -> Vec<VarSet> {
        let mut left = within;
        let mut out = Vec::new();
        while let Some(start) = left.min() {
            let mut comp = VarSet::singleton(start);
            let mut frontier = comp;
            while let Some(v) = frontier.min() {
                frontier.remove(v);
                let fresh = (self.adj[v - 1] & within) - comp;
                comp = comp | fresh;
                frontier = frontier | fresh;
            }
            left = left - comp;
            out.push(comp);
        }
        out
    }

    /// A split into two nonempty blocks joined by every cross pair, if one
    /// exists. The first block is the complement component containing vertex 1.
    pub fn join_split(&self) -> Option<(VarSet, VarSet)> {
        if self.vertex_count() < 2 {
            return None;
        }
        let comps = self.complement().components(self.vertices());
        (comps.len() > 1).then(|| (comps[0], self.vertices() - comps[0]))
    }

    /// Vertices whose neighbours are pairwise adjacent.
    pub fn good_vertices(&self) -> VarSet {
        let mut good = VarSet::empty();
        for i in 1..=self.vertex_count() {
            let nb = self.neighbors(i);
            if nb
                .iter()
                .all(|j| (nb - VarSet::singleton(j)).is_subset(self.neighbors(j)))
            {
                good.insert(i);
            }
        }
        good
    }

    /// Order `v_1..v_s` such that the complement's edges are exactly the
    /// consecutive pairs. Of the two orientations, the one whose position
    /// vector (position of vertex 1, of vertex 2, ...) is smaller wins.
    pub fn complement_spanning_path(&self) -> Option<Vec<usize>> {
        let s = self.vertex_count();
        if s < 2 {
            return None;
        }
        let co = self.complement();
        if co.edge_count() != s - 1 || (1..=s).any(|i| co.degree(i) > 2) {
            return None;
        }
        if co.components(co.vertices()).len() != 1 {
            return None;
        }
        let start = (1..=s).find(|&i| co.degree(i) == 1)?;
        let mut order = vec![start];
        let mut prev = 0usize;
        let mut cur = start;
        while let Some(next) = co.neighbors(cur).iter().find(|&x| x != prev) {
            order.push(next);
            prev = cur;
            cur = next;
        }
        let reversed: Vec<usize> = order.iter().rev().copied().collect();
        let positions = |ord: &[usize]| {
            let mut pos = vec![0usize; s];
            for (k, &v) in ord.iter().enumerate() {
                pos[v - 1] = k;
            }
            pos
        };
        if positions(&reversed) < positions(&order) {
            Some(reversed)
        } else {
            Some(order)
        }
    }

    /// Every concatenation split, by increasing shared vertex.
    ///
    /// For a cut vertex `v` of the complement, the left block is the
    /// complement component (after deleting `v`) with the smallest vertex,
    /// plus `v`; the right block is everything else plus `v`.
    pub fn concatenation_splits(&self) -> Vec<ConcatSplit> {
        let s = self.vertex_count();
        if s < 3 {
            return Vec::new();
        }
        let co = self.complement();
        let all = self.vertices();
        (1..=s)
            .filter_map(|v| {
                let without = all - VarSet::singleton(v);
                let comps = co.components(without);
                (comps.len() > 1).then(|| {
                    let vs = VarSet::singleton(v);
                    ConcatSplit {
                        vertex: v,
                        left: comps[0] | vs,
                        right: (without - comps[0]) | vs,
                    }
                })
            })
            .collect()
    }

    /// The split with the least shared vertex.
    pub fn concatenation_split(&self) -> Option<ConcatSplit> {
        self.concatenation_splits().into_iter().next()
    }

    /// Checks that `(vertex, left, right)` is a valid concatenation split.
    pub fn is_concatenation(&self, split: &ConcatSplit) -> bool {
        let v = VarSet::singleton(split.vertex);
        if split.left | split.right != self.vertices() || split.left & split.right != v {
            return false;
        }
        if split.left.len() < 2 || split.right.len() < 2 {
            return false;
        }
        let right = split.right - v;
        (split.left - v).iter().all(|a| right.is_subset(self.neighbors(a)))
    }

    /// Concatenation of `first` on `1..=r` and `second` on `r..=r+t-1`
    /// (its vertex `k` becomes `r + k - 1`), glued in `r`.
    pub fn concatenate(first: &Graph, second: &Graph) -> Graph {
        let r = first.vertex_count();
        let t = second.vertex_count();
        assert!(r >= 2 && t >= 2, "both parts need at least two vertices");
        let s = r + t - 1;
        let mut g = Graph::empty(s);
        for (i, j) in first.edges() {
            g.add_edge(i, j);
        }
        for (i, j) in second.edges() {
            g.add_edge(i + r - 1, j + r - 1);
        }
        for i in 1..r {
            for j in r + 1..=s {
                g.add_edge(i, j);
            }
        }
        g
    }

    /// Subgraph induced on `keep`, relabeled `1..=|keep|` in increasing order.
    pub fn induced(&self, keep: VarSet) -> Graph {
        let verts = keep.to_vec();
        let mut g = Graph::empty(verts.len());
        for (a, b) in (0..verts.len()).tuple_combinations() {
            if self.has_edge(verts[a], verts[b]) {
                g.add_edge(a + 1, b + 1);
            }
        }
        g
    }
}

/// Graph on the primes with `{i,j}` an edge iff `P_i + P_j` is the support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeSumGraph {
    graph: Graph,
    support: VarSet,
    deficits: BTreeMap<(usize, usize), VarSet>,
}

#[derive(Serialize)]
struct DeficitEntry {
    pair: (usize, usize),
    missing: VarSet,
}

impl Serialize for PrimeSumGraph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let deficits: Vec<DeficitEntry> = self
            .deficits
            .iter()
            .map(|(&pair, &missing)| DeficitEntry { pair, missing })
            .collect();
        let mut st = serializer.serialize_struct("PrimeSumGraph", 3)?;
        st.serialize_field("vertices", &self.vertex_count())?;
        st.serialize_field("edges", &self.graph.edges())?;
        st.serialize_field("deficits", &deficits)?;
        st.end()
    }
}

impl PrimeSumGraph {
    pub fn build(ideal: &SquarefreeIdeal) -> Self {
        let s = ideal.s();
        let support = ideal.support();
        let mut graph = Graph::empty(s);
        let mut deficits = BTreeMap::new();
        for (i, j) in (1..=s).tuple_combinations() {
            let union = ideal.primes()[i - 1] | ideal.primes()[j - 1];
            let missing = support - union;
            if missing.is_empty() {
                graph.add_edge(i, j);
            } else {
                deficits.insert((i, j), missing);
            }
        }
        PrimeSumGraph {
            graph,
            support,
            deficits,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn support(&self) -> VarSet {
        self.support
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.graph.edges()
    }

    /// Variables of the support missing from `P_i + P_j`; `None` on edges.
    pub fn deficit(&self, i: usize, j: usize) -> Option<VarSet> {
        self.deficits.get(&(i.min(j), i.max(j))).copied()
    }

    pub fn deficits(&self) -> &BTreeMap<(usize, usize), VarSet> {
        &self.deficits
    }

    /// Smallest deficit size; the `q` of the support-reduced ideal.
    pub fn min_deficit(&self) -> Option<usize> {
        self.deficits.values().map(|d| d.len()).min()
    }

    pub fn join_split(&self) -> Option<(VarSet, VarSet)> {
        self.graph.join_split()
    }

    pub fn good_vertices(&self) -> VarSet {
        self.graph.good_vertices()
    }

    pub fn complement_spanning_path(&self) -> Option<Vec<usize>> {
        self.graph.complement_spanning_path()
    }

    pub fn concatenation_split(&self) -> Option<ConcatSplit> {
        self.graph.concatenation_split()
    }

    /// DOT rendering; with `show_deficits`, non-edges appear dashed and
    /// labeled by their missing variables.
    pub fn to_dot(&self, show_deficits: bool) -> String {
        let mut out = String::from("graph prime_sum {\n");
        for v in 1..=self.vertex_count() {
            let _ = writeln!(out, "  {v};");
        }
        for (i, j) in self.edges() {
            let _ = writeln!(out, "  {i} -- {j};");
        }
        if show_deficits {
            for (&(i, j), missing) in &self.deficits {
                let _ = writeln!(out, "  {i} -- {j} [style=dashed, label=\"{missing}\"];");
            }
        }
        out.push_str("}\n");
        out
    }
}
