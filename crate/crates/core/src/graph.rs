//! Loopless multigraphs with stable edge identities.
//!
//! Parallel edges are first-class: every edge carries a dense id `0..m` in
//! insertion order and all colorings are keyed by that id, never by the
//! endpoint pair. Values are immutable; the `with_*` / `without_*` methods
//! return new graphs.

use std::fmt;

use crate::error::{Error, Result};

/// A loopless multigraph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    incident: Vec<Vec<usize>>,
}

/// An induced subgraph together with the maps back to its parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Multigraph,
    /// `vertex_map[i]` is the parent vertex of local vertex `i`.
    pub vertex_map: Vec<usize>,
    /// `edge_map[j]` is the parent edge id of local edge `j`.
    pub edge_map: Vec<usize>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut incident = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::LoopRequested { vertex: u });
            }
            incident[u].push(id);
            incident[v].push(id);
        }
        Ok(Self { n, edges, incident })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            incident: vec![Vec::new(); n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, edge: usize) -> Result<(usize, usize)> {
        self.edges.get(edge).copied().ok_or(Error::EdgeOutOfRange {
            edge,
            m: self.edges.len(),
        })
    }

    /// Edge ids incident to `v`, in increasing order.
    pub fn incident_edges(&self, v: usize) -> Result<&[usize]> {
        self.check_vertex(v)?;
        Ok(&self.incident[v])
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.incident[v].len())
    }

    pub(crate) fn degrees(&self) -> Vec<usize> {
        self.incident.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.incident.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Number of parallel edges joining `u` and `v`.
    pub fn edge_multiplicity(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.incident[u]
            .iter()
            .filter(|&&e| other_end(self.edges[e], u) == v)
            .count())
    }

    /// Maximum number of parallel edges over all vertex pairs; 0 when edgeless.
    pub fn multiplicity(&self) -> usize {
        self.multiplicity_matrix()
            .iter()
            .flat_map(|row| row.iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// Symmetric `n x n` matrix of edge multiplicities.
    pub fn multiplicity_matrix(&self) -> Vec<Vec<usize>> {
        let mut mat = vec![vec![0; self.n]; self.n];
        for &(u, v) in &self.edges {
            mat[u][v] += 1;
            mat[v][u] += 1;
        }
        mat
    }

    fn membership(&self, w: &[usize]) -> Result<Vec<bool>> {
        let mut inside = vec![false; self.n];
        for &v in w {
            self.check_vertex(v)?;
            inside[v] = true;
        }
        Ok(inside)
    }

    /// Number of edges with both ends in `w`.
    pub fn edges_within(&self, w: &[usize]) -> Result<usize> {
        let inside = self.membership(w)?;
        Ok(self.edges.iter().filter(|&&(u, v)| inside[u] && inside[v]).count())
    }

    pub fn induced_subgraph(&self, w: &[usize]) -> Result<Subgraph> {
        let inside = self.membership(w)?;
        let vertex_map: Vec<usize> = (0..self.n).filter(|&v| inside[v]).collect();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertex_map.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        let mut edge_map = Vec::new();
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            if inside[u] && inside[v] {
                edges.push((local[u], local[v]));
                edge_map.push(id);
            }
        }
        let graph = Multigraph::new(vertex_map.len(), edges)?;
        Ok(Subgraph {
            graph,
            vertex_map,
            edge_map,
        })
    }

    /// Edge ids with exactly one end in `w`.
    pub fn boundary_edges(&self, w: &[usize]) -> Result<Vec<usize>> {
        let inside = self.membership(w)?;
        Ok(self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| inside[u] != inside[v])
            .map(|(id, _)| id)
            .collect())
    }

    /// Edge ids joining a vertex of `x` to a vertex of `y`. The sets must be disjoint.
    pub fn edges_between(&self, x: &[usize], y: &[usize]) -> Result<Vec<usize>> {
        let in_x = self.membership(x)?;
        let in_y = self.membership(y)?;
        if let Some(v) = (0..self.n).find(|&v| in_x[v] && in_y[v]) {
            return Err(Error::OverlappingSets { vertex: v });
        }
        Ok(self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| (in_x[u] && in_y[v]) || (in_x[v] && in_y[u]))
            .map(|(id, _)| id)
            .collect())
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Multigraph> {
        let mut edges = self.edges.clone();
        edges.push((u, v));
        Multigraph::new(self.n, edges)
    }

    pub fn with_isolated_vertices(&self, count: usize) -> Multigraph {
        let mut g = self.clone();
        g.n += count;
        g.incident.resize(g.n, Vec::new());
        g
    }

    /// The graph with edge `edge` removed; later ids shift down by one.
    pub fn without_edge(&self, edge: usize) -> Result<Multigraph> {
        self.endpoints(edge)?;
        let mut edges = self.edges.clone();
        edges.remove(edge);
        Multigraph::new(self.n, edges)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Multigraph::new(self.n + other.n, edges).expect("union of valid graphs is valid")
    }
}

pub(crate) fn other_end((a, b): (usize, usize), v: usize) -> usize {
    if a == v {
        b
    } else {
        a
    }
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Multigraph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{fat_cycle, fixture};

    fn t2_pendant() -> Multigraph {
        fixture("T2")
            .unwrap()
            .with_isolated_vertices(1)
            .with_edge(0, 3)
            .unwrap()
    }

    #[test]
    fn degrees() {
        let t2 = fixture("T2").unwrap();
        assert_eq!(t2.degree(0).unwrap(), 4);
        let c5 = fixture("C5").unwrap();
        assert!((0..5).all(|v| c5.degree(v).unwrap() == 2));
        assert_eq!(Multigraph::empty(1).degree(0).unwrap(), 0);
        assert!(matches!(c5.degree(5), Err(Error::VertexOutOfRange { vertex: 5, n: 5 })));
    }

    #[test]
    fn max_degree_and_multiplicity() {
        let t2 = fixture("T2").unwrap();
        assert_eq!(t2.max_degree(), 4);
        assert_eq!(t2.multiplicity(), 2);
        assert_eq!(fat_cycle(5, 4).unwrap().max_degree(), 8);
        assert_eq!(Multigraph::empty(3).max_degree(), 0);
        assert_eq!(Multigraph::empty(3).multiplicity(), 0);
        assert_eq!(fixture("C5").unwrap().multiplicity(), 1);
        assert_eq!(Multigraph::empty(0).max_degree(), 0);
    }

    #[test]
    fn induced() {
        let g = t2_pendant();
        let sub = g.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(sub.graph, fixture("T2").unwrap());
        assert_eq!(sub.edge_map, vec![0, 1, 2, 3, 4, 5]);

        let c5 = fixture("C5").unwrap();
        let all: Vec<usize> = (0..5).collect();
        let whole = c5.induced_subgraph(&all).unwrap();
        assert_eq!(whole.graph, c5);
        assert_eq!(whole.vertex_map, all);

        let path = c5.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(path.graph.edge_count(), 2);
        assert_eq!(path.graph.max_degree(), 2);

        assert!(c5.induced_subgraph(&[0, 7]).is_err());
    }

    #[test]
    fn boundary() {
        let g = t2_pendant();
        assert_eq!(g.boundary_edges(&[0, 1, 2]).unwrap(), vec![6]);
        assert!(g.boundary_edges(&[0, 1, 2, 3]).unwrap().is_empty());
        let c5 = fixture("C5").unwrap();
        assert_eq!(c5.boundary_edges(&[0]).unwrap(), c5.incident_edges(0).unwrap());
        assert_eq!(c5.boundary_edges(&[0]).unwrap().len(), 2);
    }

    #[test]
    fn between() {
        let t2 = fixture("T2").unwrap();
        let e = t2.edges_between(&[0], &[1]).unwrap();
        assert_eq!(e.len(), 2);
        assert!(e.iter().all(|&id| {
            let (a, b) = t2.endpoints(id).unwrap();
            (a.min(b), a.max(b)) == (0, 1)
        }));

        let k3 = fixture("K3").unwrap();
        let two = k3.disjoint_union(&k3);
        assert!(two.edges_between(&[0, 1, 2], &[3, 4, 5]).unwrap().is_empty());

        let c5 = fixture("C5").unwrap();
        let ids = c5.edges_between(&[0, 1], &[2, 4]).unwrap();
        let pairs: Vec<_> = ids.iter().map(|&id| c5.endpoints(id).unwrap()).collect();
        assert_eq!(pairs, vec![(1, 2), (4, 0)]);

        assert!(matches!(
            c5.edges_between(&[0, 1], &[1, 2]),
            Err(Error::OverlappingSets { vertex: 1 })
        ));
    }

    #[test]
    fn rejects_loops_and_bad_vertices() {
        assert!(matches!(
            Multigraph::new(2, vec![(1, 1)]),
            Err(Error::LoopRequested { vertex: 1 })
        ));
        assert!(Multigraph::new(2, vec![(0, 2)]).is_err());
    }

    #[test]
    fn edge_removal_shifts_ids() {
        let t2 = fixture("T2").unwrap();
        let g = t2.without_edge(0).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.edges(), &t2.edges()[1..]);
    }
}
