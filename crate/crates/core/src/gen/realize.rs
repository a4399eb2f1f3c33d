//! Ideals with a prescribed prime-sum graph.
//!
//! Each non-edge `{i,j}` gets a private block of variables left out of
//! exactly `P_i` and `P_j`, so `P_i + P_j` misses that block and nothing
//! else. A vertex with a single non-neighbour `j` would otherwise give
//! `P_j ⊆ P_i`; it gets one more variable left out of its own prime only.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ideal::SquarefreeIdeal;
use crate::varset::{VarSet, MAX_VARS};

/// Realizes `graph` with every deficit of size `q`.
pub fn realize_graph(graph: &Graph, q: usize) -> Result<SquarefreeIdeal> {
    if q == 0 {
        return Err(Error::UnrealizableGraph("deficit size must be at least 1".into()));
    }
    let co = graph.complement();
    let blocks = co.edges().into_iter().map(|e| (e, q)).collect();
    realize_with_blocks(graph, &blocks)
}

/// Realizes `graph` with a chosen block size for each non-edge.
pub fn realize_with_blocks(graph: &Graph, blocks: &BTreeMap<(usize, usize), usize>) -> Result<SquarefreeIdeal> {
    let s = graph.vertex_count();
    if s < 3 {
        // With one or two primes every pair sums to the support.
        return Err(Error::UnrealizableGraph(format!("need at least 3 vertices, got {s}")));
    }
    let co = graph.complement();
    if let Some(v) = (1..=s).find(|&v| co.degree(v) == 0) {
        return Err(Error::UnrealizableGraph(format!(
            "vertex {v} is adjacent to every other vertex"
        )));
    }
    let non_edges = co.edges();
    if blocks.len() != non_edges.len() || non_edges.iter().any(|e| blocks.get(e).copied().unwrap_or(0) == 0) {
        return Err(Error::UnrealizableGraph(
            "every non-edge needs a positive block size".into(),
        ));
    }
    let padded: Vec<usize> = (1..=s).filter(|&v| co.degree(v) == 1).collect();
    let n: usize = blocks.values().sum::<usize>() + padded.len();
    if n > MAX_VARS {
        return Err(Error::UnrealizableGraph(format!(
            "needs {n} variables, limit is {MAX_VARS}"
        )));
    }
    let mut excluded = vec![VarSet::empty(); s];
    let mut next = 1usize;
    for &(i, j) in &non_edges {
        let block = VarSet::range(next, next + blocks[&(i, j)] - 1);
        next += blocks[&(i, j)];
        excluded[i - 1] = excluded[i - 1] | block;
        excluded[j - 1] = excluded[j - 1] | block;
    }
    for v in padded {
        excluded[v - 1].insert(next);
        next += 1;
    }
    let full = VarSet::full(n);
    let primes = excluded.iter().map(|&e| full - e).collect();
    SquarefreeIdeal::new(n, primes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::PrimeSumGraph;

    #[test]
    fn single_edge_triangle_shape() {
        let g = Graph::from_edges(3, [(2, 3)]);
        let i = realize_graph(&g, 2).unwrap();
        assert_eq!(i.s(), 3);
        assert_eq!(i.n(), 6);
        let pg = PrimeSumGraph::build(&i);
        assert_eq!(pg.graph(), &g);
        assert_eq!(i.profile().q, Some(2));
        assert_eq!(i.profile().bigsize, 2);
        assert_eq!(realize_graph(&g, 1).unwrap().n(), 4);
    }

    #[test]
    fn complete_graph_is_rejected() {
        assert!(matches!(
            realize_graph(&Graph::complete(3), 1),
            Err(Error::UnrealizableGraph(_))
        ));
        assert!(matches!(
            realize_graph(&Graph::complete(1), 1),
            Err(Error::UnrealizableGraph(_))
        ));
        assert!(matches!(
            realize_graph(&Graph::empty(2), 1),
            Err(Error::UnrealizableGraph(_))
        ));
        assert!(matches!(
            realize_graph(&Graph::empty(3), 0),
            Err(Error::UnrealizableGraph(_))
        ));
    }

    #[test]
    fn path_complement_gets_padding() {
        // Complement path 1-2-5-4-3, as in the five-prime worked example.
        let g = Graph::from_edges(5, [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (3, 5)]);
        let i = realize_graph(&g, 2).unwrap();
        assert_eq!(i.n(), 10);
        assert_eq!(PrimeSumGraph::build(&i).graph(), &g);
    }
}
