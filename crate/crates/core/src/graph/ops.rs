//! Structural combinators. All of them relabel the second operand by
//! shifting its vertices past the first.

use super::Graph;

/// Disjoint union plus every edge between the two vertex sets.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.order();
    let mut g = disjoint_union(g1, g2);
    for u in 0..n1 {
        for v in 0..g2.order() {
            g.push_edge(u, n1 + v);
        }
    }
    g
}

/// Join with a single apex vertex, which receives label `g.order()`.
pub fn cone(g: &Graph) -> Graph {
    join(g, &Graph::empty(1))
}

pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.order();
    let mut g = Graph::empty(n1 + g2.order());
    g.edges.extend(g1.edges());
    g.edges.extend(g2.edges().map(|(u, v)| (u + n1, v + n1)));
    g
}

/// Inserts a new vertex on every edge. The `i`-th edge in canonical order
/// gets vertex `n + i`.
pub fn subdivision(g: &Graph) -> Graph {
    let n = g.order();
    let mut s = Graph::empty(n + g.edge_count());
    for (i, (u, v)) in g.edges().enumerate() {
        s.push_edge(u, n + i);
        s.push_edge(v, n + i);
    }
    s
}

/// Cartesian product; vertex `(a, b)` is labeled `a * |V(g2)| + b`.
pub fn cartesian_product(g1: &Graph, g2: &Graph) -> Graph {
    let (n1, n2) = (g1.order(), g2.order());
    let mut g = Graph::empty(n1 * n2);
    for (a, a2) in g1.edges() {
        for b in 0..n2 {
            g.push_edge(a * n2 + b, a2 * n2 + b);
        }
    }
    for a in 0..n1 {
        for (b, b2) in g2.edges() {
            g.push_edge(a * n2 + b, a * n2 + b2);
        }
    }
    g
}
