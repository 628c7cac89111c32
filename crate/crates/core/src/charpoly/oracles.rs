//! Combinatorial quantities that cross-check the determinant route.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::{laplacian_matrix, Coefficients};
use crate::error::{Error, Result};
use crate::graph::{bfs, Graph};

/// Largest edge count accepted by [`forest_sum_oracle`].
pub const FOREST_EDGE_GUARD: usize = 24;
/// Largest edge count accepted by [`matching_counts`].
pub const MATCHING_EDGE_GUARD: usize = 64;

/// Union-find without path compression so unions can be rolled back.
struct RollbackDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<usize>,
}

impl RollbackDsu {
    fn new(n: usize) -> Self {
        RollbackDsu {
            parent: (0..n).collect(),
            size: vec![1; n],
            history: Vec::new(),
        }
    }

    fn find(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.history.push(b);
        true
    }

    fn rollback(&mut self) {
        let b = self.history.pop().expect("rollback without union");
        let a = self.parent[b];
        self.size[a] -= self.size[b];
        self.parent[b] = b;
    }

    fn product_of_component_sizes(&self) -> u128 {
        (0..self.parent.len())
            .filter(|&v| self.parent[v] == v)
            .map(|v| self.size[v] as u128)
            .product()
    }
}

/// Spanning-forest expansion of the Laplacian coefficients:
/// `c(G, k) = Σ p(F)` over spanning forests `F` with `n − k` edges, where
/// `p(F)` multiplies the vertex counts of the components of `F` (isolated
/// vertices contribute 1).
pub fn forest_sum_oracle(g: &Graph) -> Result<Coefficients> {
    let m = g.edge_count();
    if m > FOREST_EDGE_GUARD {
        return Err(Error::GuardExceeded {
            what: "forest enumeration edge count",
            limit: FOREST_EDGE_GUARD,
            actual: m,
        });
    }
    let n = g.order();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut sums = vec![0u128; n + 1];
    let mut dsu = RollbackDsu::new(n);

    fn walk(
        idx: usize,
        taken: usize,
        edges: &[(usize, usize)],
        dsu: &mut RollbackDsu,
        sums: &mut [u128],
    ) {
        if idx == edges.len() {
            sums[taken] += dsu.product_of_component_sizes();
            return;
        }
        let (u, v) = edges[idx];
        if dsu.union(u, v) {
            walk(idx + 1, taken + 1, edges, dsu, sums);
            dsu.rollback();
        }
        walk(idx + 1, taken, edges, dsu, sums);
    }
    walk(0, 0, &edges, &mut dsu, &mut sums);

    // sums[e] collects forests with e edges, which belong to k = n − e.
    let mut coeffs = vec![BigUint::zero(); n + 1];
    for (e, s) in sums.into_iter().enumerate() {
        coeffs[n - e] = s.into();
    }
    Ok(Coefficients::new(coeffs))
}

/// Number of `k`-matchings for `k = 0..=⌊n/2⌋`, by the recursion
/// `m(G, k) = m(G − e, k) + m(G − u − v, k − 1)` memoized on the remaining
/// edge set.
pub fn matching_counts(g: &Graph) -> Result<Vec<BigUint>> {
    let m = g.edge_count();
    if m > MATCHING_EDGE_GUARD {
        return Err(Error::GuardExceeded {
            what: "matching recursion edge count",
            limit: MATCHING_EDGE_GUARD,
            actual: m,
        });
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut incident = vec![0u64; g.order()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u] |= 1 << i;
        incident[v] |= 1 << i;
    }

    fn count(
        mask: u64,
        edges: &[(usize, usize)],
        incident: &[u64],
        memo: &mut HashMap<u64, Vec<BigUint>>,
    ) -> Vec<BigUint> {
        if mask == 0 {
            return vec![BigUint::one()];
        }
        if let Some(hit) = memo.get(&mask) {
            return hit.clone();
        }
        let e = mask.trailing_zeros() as usize;
        let (u, v) = edges[e];
        let mut without = count(mask & !(1 << e), edges, incident, memo);
        let with = count(mask & !incident[u] & !incident[v], edges, incident, memo);
        if without.len() < with.len() + 1 {
            without.resize(with.len() + 1, BigUint::zero());
        }
        for (k, c) in with.into_iter().enumerate() {
            without[k + 1] += c;
        }
        memo.insert(mask, without.clone());
        without
    }

    let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let mut result = count(full, &edges, &incident, &mut HashMap::new());
    result.resize(g.order() / 2 + 1, BigUint::zero());
    Ok(result)
}

/// Number of spanning trees: the determinant of L(G) with its last row and
/// column removed, by fraction-free Bareiss elimination.
pub fn spanning_tree_count(g: &Graph) -> BigUint {
    let n = g.order();
    if n <= 1 {
        return BigUint::one();
    }
    let l = laplacian_matrix(g);
    let size = n - 1;
    let mut a: Vec<Vec<BigInt>> = (0..size).map(|i| l.row(i)[..size].to_vec()).collect();
    let det = bareiss_determinant(&mut a);
    det.to_biguint().expect("a Laplacian minor is nonnegative")
}

/// Determinant by Bareiss elimination with row pivoting; consumes `a`.
pub(crate) fn bareiss_determinant(a: &mut [Vec<BigInt>]) -> BigInt {
    let size = a.len();
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..size {
        if a[k][k].is_zero() {
            match (k + 1..size).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if size == 0 {
        return BigInt::one();
    }
    sign * a[size - 1][size - 1].clone()
}

/// Sum of shortest-path distances over unordered vertex pairs.
pub fn wiener_index(g: &Graph) -> Result<u64> {
    if g.order() > 0 && !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let adj = g.adjacency();
    let total: usize = (0..g.order())
        .map(|s| {
            bfs(&adj, s)
                .into_iter()
                .map(|d| d.expect("connected"))
                .sum::<usize>()
        })
        .sum();
    Ok(total as u64 / 2)
}
