//! Shared graph fixtures for unit tests.

use crate::graph::{BipartiteGraph, VertexId};

pub(crate) fn vids<const N: usize>(ids: [u32; N]) -> Vec<VertexId> {
    ids.into_iter().map(VertexId).collect()
}

fn edges<const N: usize>(pairs: [(u32, u32); N]) -> Vec<(VertexId, VertexId)> {
    pairs
        .into_iter()
        .map(|(u, v)| (VertexId(u), VertexId(v)))
        .collect()
}

/// Butterfly: two triangles sharing the 3-4 edge; stars at 3 and 4.
pub(crate) fn butterfly() -> BipartiteGraph {
    BipartiteGraph::new(
        vids([1, 2, 4]),
        vids([3, 5, 6]),
        edges([(1, 3), (1, 5), (2, 3), (2, 6), (3, 4), (4, 5), (4, 6)]),
    )
    .unwrap()
}

/// Path 1-2-3-4-5 with odd vertices in P1.
pub(crate) fn path5() -> BipartiteGraph {
    BipartiteGraph::new(
        vids([1, 3, 5]),
        vids([2, 4]),
        edges([(1, 2), (2, 3), (3, 4), (4, 5)]),
    )
    .unwrap()
}

/// Two fans over a shared apex: remote sets of 2 and 3 intersect in {7} only.
pub(crate) fn two_fan() -> BipartiteGraph {
    BipartiteGraph::new(
        vids([1, 2, 3]),
        vids([4, 5, 6, 7]),
        edges([
            (1, 4),
            (1, 5),
            (1, 6),
            (1, 7),
            (2, 4),
            (3, 4),
            (2, 6),
            (3, 5),
        ]),
    )
    .unwrap()
}

/// K_{a,b} with P1 = 1..=a and P2 = a+1..=a+b.
pub(crate) fn complete_bipartite(a: u32, b: u32) -> BipartiteGraph {
    let p1: Vec<VertexId> = (1..=a).map(VertexId).collect();
    let p2: Vec<VertexId> = (a + 1..=a + b).map(VertexId).collect();
    let mut e = Vec::new();
    for u in 1..=a {
        for v in a + 1..=a + b {
            e.push((VertexId(u), VertexId(v)));
        }
    }
    BipartiteGraph::new(p1, p2, e).unwrap()
}

/// Crown graph: K_{k,k} minus the perfect matching i <-> k+i.
pub(crate) fn crown(k: u32) -> BipartiteGraph {
    let p1: Vec<VertexId> = (1..=k).map(VertexId).collect();
    let p2: Vec<VertexId> = (k + 1..=2 * k).map(VertexId).collect();
    let mut e = Vec::new();
    for u in 1..=k {
        for v in 1..=k {
            if u != v {
                e.push((VertexId(u), VertexId(k + v)));
            }
        }
    }
    BipartiteGraph::new(p1, p2, e).unwrap()
}
