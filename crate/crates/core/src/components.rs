//! Weakly connected components.

use crate::graph::{Topology, VertexId};
use crate::union_find::UnionFind;

/// Partition of the vertex set into weakly connected components.
///
/// Components are ordered by descending size, ties broken by the smallest
/// vertex they contain. Vertices inside a component are sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    components: Vec<Vec<VertexId>>,
    component_of: Vec<usize>,
}

impl ComponentPartition {
    pub fn components(&self) -> &[Vec<VertexId>] {
        &self.components
    }

    pub fn component_of(&self, v: VertexId) -> usize {
        self.component_of[v.index()]
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// The largest component, or `None` for an empty graph.
    pub fn largest(&self) -> Option<&[VertexId]> {
        self.components.first().map(Vec::as_slice)
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.components.iter().map(Vec::len).collect()
    }

    pub fn singleton_count(&self) -> usize {
        self.components.iter().filter(|c| c.len() == 1).count()
    }
}

/// Components of the undirected projection of `g` (edge direction ignored).
pub fn weakly_connected_components<G: Topology + ?Sized>(g: &G) -> ComponentPartition {
    let n = g.vertex_count();
    let mut uf = UnionFind::new(n);
    for (u, v) in g.edge_pairs() {
        uf.union(u.index(), v.index());
    }

    // Vertices are visited in ascending order, so each list is born sorted and
    // its first element is the smallest member.
    let mut slot_of_root = vec![usize::MAX; n];
    let mut components: Vec<Vec<VertexId>> = Vec::new();
    for i in 0..n {
        let root = uf.find(i);
        if slot_of_root[root] == usize::MAX {
            slot_of_root[root] = components.len();
            components.push(Vec::new());
        }
        components[slot_of_root[root]].push(VertexId::new(i));
    }
    components.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));

    let mut component_of = vec![0; n];
    for (idx, comp) in components.iter().enumerate() {
        for v in comp {
            component_of[v.index()] = idx;
        }
    }
    ComponentPartition {
        components,
        component_of,
    }
}
