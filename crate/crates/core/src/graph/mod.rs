//! Simple undirected graphs and the constructions used throughout the crate.

mod edge_list;
mod family;
mod ops;

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

pub use edge_list::{parse_edge_list, write_edge_list};
pub use family::{random_regular, random_tree, Family, FamilySpec};
pub use ops::{cartesian_product, cone, disjoint_union, join, subdivision};

/// A simple undirected graph on the vertices `0..n`.
///
/// Edges are stored normalized as `(u, v)` with `u < v`, so the edge set
/// iterates in a canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    /// Builds a graph from vertex pairs, collapsing duplicates.
    pub fn from_edge_list<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in pairs {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        if u >= self.n || v >= self.n {
            return Err(Error::VertexOutOfRange { u, v, n: self.n });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(self.edges.insert((u.min(v), u.max(v))))
    }

    /// Unchecked insertion for generators that produce valid pairs by construction.
    pub(crate) fn push_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.edges.insert((u.min(v), u.max(v)));
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Sorted neighbour lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Maximum degree Δ(G); 0 for the edgeless and the null graph.
    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Component label of every vertex, labels assigned in order of first vertex.
    pub fn components(&self) -> Vec<usize> {
        let adj = self.adjacency();
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Two-colouring by breadth-first search.
    pub fn is_bipartite(&self) -> bool {
        let adj = self.adjacency();
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for &w in &adj[u] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() + 1 == self.n && self.is_connected()
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let adj = self.adjacency();
        bfs(&adj, source)
    }
}

pub(crate) fn bfs(adj: &[Vec<usize>], source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &w in &adj[u] {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}
