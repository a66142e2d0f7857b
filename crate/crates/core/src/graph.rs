//! Two-colorable (bipartite) graph values and the derived queries the
//! extraction machinery is built on: opposite remote sets, star vertices,
//! and pure vertex deletion.
//!
//! Graphs are immutable after construction. Deletion returns a new graph
//! value, so intermediate states of an extraction can be kept around and
//! replayed. Vertex ids are stable: deleting vertices never renumbers the
//! survivors, so results always name the original network nodes.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sets;

/// Identifier of a network node / graph vertex.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for VertexId {
    fn from(id: u32) -> Self {
        VertexId(id)
    }
}

/// One side of the bipartition.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Partition {
    P1,
    P2,
}

impl Partition {
    pub fn other(self) -> Partition {
        match self {
            Partition::P1 => Partition::P2,
            Partition::P2 => Partition::P1,
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Partition::P1 => write!(f, "P1"),
            Partition::P2 => write!(f, "P2"),
        }
    }
}

/// A two-colorable graph with an explicit bipartition.
///
/// Every edge joins the two partitions; adjacency is symmetric, loop-free
/// and duplicate-free. All queries are pure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BipartiteGraph {
    p1: Vec<VertexId>,
    p2: Vec<VertexId>,
    adj: BTreeMap<VertexId, Vec<VertexId>>,
}

impl BipartiteGraph {
    /// Build a validated graph from the two vertex lists and a cross edge list.
    pub fn new<I, J, E>(p1: I, p2: J, edges: E) -> Result<Self>
    where
        I: IntoIterator<Item = VertexId>,
        J: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut p1: Vec<VertexId> = p1.into_iter().collect();
        let mut p2: Vec<VertexId> = p2.into_iter().collect();
        p1.sort_unstable();
        p2.sort_unstable();
        for w in p1.windows(2).chain(p2.windows(2)) {
            if w[0] == w[1] {
                return Err(Error::DuplicateVertex(w[0]));
            }
        }
        if let Some(&v) = sets::intersect(&p1, &p2).first() {
            return Err(Error::DuplicateVertex(v));
        }

        let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for &v in p1.iter().chain(p2.iter()) {
            adj.insert(v, Vec::new());
        }
        for (u, v) in edges {
            let u_in_p1 = sets::contains(&p1, &u);
            let u_in_p2 = sets::contains(&p2, &u);
            if !u_in_p1 && !u_in_p2 {
                return Err(Error::UnknownEndpoint(u));
            }
            let v_in_p1 = sets::contains(&p1, &v);
            let v_in_p2 = sets::contains(&p2, &v);
            if !v_in_p1 && !v_in_p2 {
                return Err(Error::UnknownEndpoint(v));
            }
            if u_in_p1 == v_in_p1 {
                return Err(Error::IntraPartitionEdge(u, v));
            }
            adj.get_mut(&u).expect("endpoint checked").push(v);
            adj.get_mut(&v).expect("endpoint checked").push(u);
        }
        for list in adj.values_mut() {
            list.sort_unstable();
            list.dedup();
        }
        Ok(BipartiteGraph { p1, p2, adj })
    }

    pub fn p1(&self) -> &[VertexId] {
        &self.p1
    }

    pub fn p2(&self) -> &[VertexId] {
        &self.p2
    }

    /// Vertices of the given partition, sorted by id.
    pub fn partition(&self, p: Partition) -> &[VertexId] {
        match p {
            Partition::P1 => &self.p1,
            Partition::P2 => &self.p2,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.p1.len() + self.p2.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(Vec::len).sum::<usize>() / 2
    }

    /// All edges as (p1 endpoint, p2 endpoint), lexicographically sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for &u in &self.p1 {
            for &v in &self.adj[&u] {
                out.push((u, v));
            }
        }
        out
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn partition_of(&self, v: VertexId) -> Result<Partition> {
        if sets::contains(&self.p1, &v) {
            Ok(Partition::P1)
        } else if sets::contains(&self.p2, &v) {
            Ok(Partition::P2)
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    /// Neighbors of `v`, sorted by id.
    pub fn neighbors(&self, v: VertexId) -> Result<&[VertexId]> {
        self.adj
            .get(&v)
            .map(Vec::as_slice)
            .ok_or(Error::UnknownVertex(v))
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        Ok(self.neighbors(v)?.len())
    }

    /// True iff `u` and `v` are distinct and non-adjacent.
    pub fn is_remote(&self, u: VertexId, v: VertexId) -> Result<bool> {
        let nu = self.neighbors(u)?;
        if !self.contains(v) {
            return Err(Error::UnknownVertex(v));
        }
        Ok(u != v && !sets::contains(nu, &v))
    }

    /// Vertices of the opposite partition that are not adjacent to `v`.
    pub fn opposite_remote_set(&self, v: VertexId) -> Result<Vec<VertexId>> {
        let opposite = self.partition(self.partition_of(v)?.other());
        Ok(sets::difference(opposite, &self.adj[&v]))
    }

    /// Union of the opposite remote sets over a one-partition family.
    /// Empty families yield the empty set.
    pub fn remote_union(&self, family: &[VertexId]) -> Result<Vec<VertexId>> {
        self.family_partition(family)?;
        let mut out = Vec::new();
        for &v in family {
            out = sets::union(&out, &self.opposite_remote_set(v)?);
        }
        Ok(out)
    }

    /// Intersection of the opposite remote sets over a one-partition family.
    /// The intersection over an empty family is defined as the empty set.
    pub fn remote_intersection(&self, family: &[VertexId]) -> Result<Vec<VertexId>> {
        self.family_partition(family)?;
        let Some((&first, rest)) = family.split_first() else {
            return Ok(Vec::new());
        };
        let mut out = self.opposite_remote_set(first)?;
        for &v in rest {
            out = sets::intersect(&out, &self.opposite_remote_set(v)?);
        }
        Ok(out)
    }

    /// True iff `v` is adjacent to the entire opposite partition.
    pub fn is_star(&self, v: VertexId) -> Result<bool> {
        let opposite = self.partition(self.partition_of(v)?.other());
        Ok(self.adj[&v].len() == opposite.len())
    }

    /// Vertices of partition `p` adjacent to every vertex of the other one.
    pub fn star_vertices(&self, p: Partition) -> Vec<VertexId> {
        let opposite_len = self.partition(p.other()).len();
        self.partition(p)
            .iter()
            .copied()
            .filter(|v| self.adj[v].len() == opposite_len)
            .collect()
    }

    pub fn has_star(&self, p: Partition) -> bool {
        let opposite_len = self.partition(p.other()).len();
        self.partition(p).iter().any(|v| self.adj[v].len() == opposite_len)
    }

    /// Vertices of partition `p` that are not star vertices.
    pub fn non_star_vertices(&self, p: Partition) -> Vec<VertexId> {
        let opposite_len = self.partition(p.other()).len();
        self.partition(p)
            .iter()
            .copied()
            .filter(|v| self.adj[v].len() != opposite_len)
            .collect()
    }

    /// The induced subgraph on the complement of `remove`. Pure: `self` is
    /// left untouched.
    pub fn delete_vertices(&self, remove: &[VertexId]) -> Result<BipartiteGraph> {
        for &v in remove {
            if !self.contains(v) {
                return Err(Error::UnknownVertex(v));
            }
        }
        let mut gone: Vec<VertexId> = remove.to_vec();
        gone.sort_unstable();
        gone.dedup();

        let p1 = sets::difference(&self.p1, &gone);
        let p2 = sets::difference(&self.p2, &gone);
        let mut adj = BTreeMap::new();
        for &v in p1.iter().chain(p2.iter()) {
            adj.insert(v, sets::difference(&self.adj[&v], &gone));
        }
        Ok(BipartiteGraph { p1, p2, adj })
    }

    /// True iff the graph has a single connected component.
    pub fn is_connected(&self) -> Result<bool> {
        if self.vertex_count() == 0 {
            return Err(Error::EmptyGraph);
        }
        let start = *self.p1.first().unwrap_or_else(|| &self.p2[0]);
        Ok(reachable_count(start, &self.adj) == self.vertex_count())
    }

    /// Partition shared by all family members: `None` for the empty family,
    /// `MixedPartition` when members span both sides.
    pub(crate) fn family_partition(&self, family: &[VertexId]) -> Result<Option<Partition>> {
        let mut found = None;
        for &v in family {
            let p = self.partition_of(v)?;
            match found {
                None => found = Some(p),
                Some(q) if q != p => return Err(Error::MixedPartition),
                _ => {}
            }
        }
        Ok(found)
    }
}

/// An undirected, loop-free graph without a partition structure; the raw
/// Internet-inspired topologies that bipartite subgraphs get carved from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneralGraph {
    vertices: Vec<VertexId>,
    adj: BTreeMap<VertexId, Vec<VertexId>>,
}

impl GeneralGraph {
    pub fn new<I, E>(vertices: I, edges: E) -> Result<Self>
    where
        I: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut vertices: Vec<VertexId> = vertices.into_iter().collect();
        vertices.sort_unstable();
        for w in vertices.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateVertex(w[0]));
            }
        }
        let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for &v in &vertices {
            adj.insert(v, Vec::new());
        }
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !adj.contains_key(&u) {
                return Err(Error::UnknownEndpoint(u));
            }
            if !adj.contains_key(&v) {
                return Err(Error::UnknownEndpoint(v));
            }
            adj.get_mut(&u).expect("endpoint checked").push(v);
            adj.get_mut(&v).expect("endpoint checked").push(u);
        }
        for list in adj.values_mut() {
            list.sort_unstable();
            list.dedup();
        }
        Ok(GeneralGraph { vertices, adj })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: VertexId) -> Result<&[VertexId]> {
        self.adj
            .get(&v)
            .map(Vec::as_slice)
            .ok_or(Error::UnknownVertex(v))
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        Ok(self.neighbors(v)?.len())
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.get(&u).is_some_and(|n| sets::contains(n, &v))
    }

    /// All edges as (lower id, higher id), lexicographically sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (&u, nbrs) in &self.adj {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> Result<bool> {
        let Some(&start) = self.vertices.first() else {
            return Err(Error::EmptyGraph);
        };
        Ok(reachable_count(start, &self.adj) == self.vertex_count())
    }

    /// The induced subgraph on `keep`.
    pub fn induced_subgraph(&self, keep: &[VertexId]) -> Result<GeneralGraph> {
        let mut kept: Vec<VertexId> = keep.to_vec();
        kept.sort_unstable();
        kept.dedup();
        for &v in &kept {
            if !self.adj.contains_key(&v) {
                return Err(Error::UnknownVertex(v));
            }
        }
        let mut adj = BTreeMap::new();
        for &v in &kept {
            adj.insert(v, sets::intersect(&self.adj[&v], &kept));
        }
        Ok(GeneralGraph { vertices: kept, adj })
    }
}

fn reachable_count(start: VertexId, adj: &BTreeMap<VertexId, Vec<VertexId>>) -> usize {
    let mut seen = std::collections::BTreeSet::new();
    let mut stack = vec![start];
    seen.insert(start);
    while let Some(v) = stack.pop() {
        for &w in &adj[&v] {
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::*;

    #[test]
    fn builds_butterfly() {
        let g = butterfly();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 7);
        assert_eq!(g.star_vertices(Partition::P1), vec![VertexId(4)]);
        assert_eq!(g.star_vertices(Partition::P2), vec![VertexId(3)]);
    }

    #[test]
    fn builds_single_edge() {
        let g = BipartiteGraph::new(
            vids([1]),
            vids([2]),
            [(VertexId(1), VertexId(2))],
        )
        .unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert!(g.is_connected().unwrap());
    }

    #[test]
    fn rejects_intra_partition_edge() {
        let err = BipartiteGraph::new(vids([1, 2]), vids([3]), [(VertexId(1), VertexId(2))])
            .unwrap_err();
        assert!(matches!(err, Error::IntraPartitionEdge(VertexId(1), VertexId(2))));
    }

    #[test]
    fn rejects_duplicates_and_unknown_endpoints() {
        let err =
            BipartiteGraph::new(vids([1, 1]), vids([2]), []).unwrap_err();
        assert!(matches!(err, Error::DuplicateVertex(VertexId(1))));
        let err =
            BipartiteGraph::new(vids([1]), vids([1]), []).unwrap_err();
        assert!(matches!(err, Error::DuplicateVertex(VertexId(1))));
        let err = BipartiteGraph::new(vids([1]), vids([2]), [(VertexId(1), VertexId(9))])
            .unwrap_err();
        assert!(matches!(err, Error::UnknownEndpoint(VertexId(9))));
    }

    #[test]
    fn remote_pairs_on_butterfly() {
        let g = butterfly();
        assert!(g.is_remote(VertexId(1), VertexId(6)).unwrap());
        assert!(!g.is_remote(VertexId(1), VertexId(3)).unwrap());
        assert!(!g.is_remote(VertexId(1), VertexId(1)).unwrap());
        assert!(matches!(
            g.is_remote(VertexId(1), VertexId(42)),
            Err(Error::UnknownVertex(VertexId(42)))
        ));
    }

    #[test]
    fn opposite_remote_sets() {
        let g = butterfly();
        assert_eq!(g.opposite_remote_set(VertexId(1)).unwrap(), vids([6]));
        assert_eq!(g.opposite_remote_set(VertexId(4)).unwrap(), vids([]));

        let k33 = complete_bipartite(3, 3);
        for &v in k33.p1() {
            assert!(k33.opposite_remote_set(v).unwrap().is_empty());
        }

        let p5 = path5();
        assert_eq!(p5.opposite_remote_set(VertexId(1)).unwrap(), vids([4]));
    }

    #[test]
    fn remote_union_and_intersection() {
        let g = butterfly();
        let fam = vids([1, 2]);
        assert_eq!(g.remote_union(&fam).unwrap(), vids([5, 6]));
        assert_eq!(g.remote_intersection(&fam).unwrap(), vids([]));

        let tf = two_fan();
        assert_eq!(tf.remote_intersection(&vids([2, 3])).unwrap(), vids([7]));

        // single-element family reduces to the plain remote set
        assert_eq!(
            g.remote_union(&vids([1])).unwrap(),
            g.opposite_remote_set(VertexId(1)).unwrap()
        );
        assert_eq!(
            g.remote_intersection(&vids([1])).unwrap(),
            g.opposite_remote_set(VertexId(1)).unwrap()
        );

        // empty family: union and intersection both empty by definition
        assert_eq!(g.remote_union(&[]).unwrap(), vids([]));
        assert_eq!(g.remote_intersection(&[]).unwrap(), vids([]));

        assert!(matches!(
            g.remote_union(&vids([1, 3])),
            Err(Error::MixedPartition)
        ));
    }

    #[test]
    fn star_vertices_examples() {
        let k = complete_bipartite(4, 2);
        assert_eq!(k.star_vertices(Partition::P1).len(), 4);
        assert_eq!(k.star_vertices(Partition::P2).len(), 2);

        let p5 = path5();
        assert_eq!(p5.star_vertices(Partition::P2), vids([]));
        assert_eq!(p5.star_vertices(Partition::P1), vids([3]));
    }

    #[test]
    fn delete_vertices_is_pure() {
        let p5 = path5();
        let p4 = p5.delete_vertices(&vids([5])).unwrap();
        assert_eq!(p4.vertex_count(), 4);
        assert_eq!(p4.edge_count(), 3);
        assert!(p4.is_connected().unwrap());
        // original untouched
        assert_eq!(p5.vertex_count(), 5);

        assert_eq!(p5.delete_vertices(&[]).unwrap(), p5);

        let b = butterfly().delete_vertices(&vids([3])).unwrap();
        assert_eq!(b.degree(VertexId(1)).unwrap(), 1);
        assert_eq!(b.degree(VertexId(2)).unwrap(), 1);

        assert!(matches!(
            p5.delete_vertices(&vids([9])),
            Err(Error::UnknownVertex(VertexId(9)))
        ));
    }

    #[test]
    fn connectivity() {
        assert!(path5().is_connected().unwrap());
        assert!(butterfly().is_connected().unwrap());
        let disjoint = BipartiteGraph::new(
            vids([1, 3]),
            vids([2, 4]),
            [(VertexId(1), VertexId(2)), (VertexId(3), VertexId(4))],
        )
        .unwrap();
        assert!(!disjoint.is_connected().unwrap());
        let empty = BipartiteGraph::new(vids([]), vids([]), []).unwrap();
        assert!(matches!(empty.is_connected(), Err(Error::EmptyGraph)));
    }

    #[test]
    fn remote_set_complements_neighborhood() {
        let g = two_fan();
        for &v in g.p1().iter().chain(g.p2()) {
            let opp = g.partition(g.partition_of(v).unwrap().other());
            let remote = g.opposite_remote_set(v).unwrap();
            assert_eq!(remote.len() + g.degree(v).unwrap(), opp.len());
            // star iff remote set empty
            assert_eq!(g.is_star(v).unwrap(), remote.is_empty());
        }
    }

    #[test]
    fn stars_never_appear_in_remote_sets() {
        for g in [butterfly(), two_fan(), complete_bipartite(3, 4)] {
            let stars2 = g.star_vertices(Partition::P2);
            for &v in g.p1() {
                let remote = g.opposite_remote_set(v).unwrap();
                for &s in &stars2 {
                    assert!(!sets::contains(&remote, &s));
                }
            }
        }
    }

    #[test]
    fn general_graph_basics() {
        let g = GeneralGraph::new(
            vids([0, 1, 2, 3, 4]),
            [
                (VertexId(0), VertexId(1)),
                (VertexId(1), VertexId(2)),
                (VertexId(2), VertexId(3)),
                (VertexId(3), VertexId(4)),
                (VertexId(4), VertexId(0)),
            ],
        )
        .unwrap();
        assert_eq!(g.edge_count(), 5);
        assert!(g.is_connected().unwrap());
        assert!(g.has_edge(VertexId(4), VertexId(0)));

        let sub = g.induced_subgraph(&vids([0, 1, 2])).unwrap();
        assert_eq!(sub.edge_count(), 2);

        assert!(matches!(
            GeneralGraph::new(vids([0]), [(VertexId(0), VertexId(0))]),
            Err(Error::SelfLoop(VertexId(0)))
        ));
    }
}
