//! Named graph families.

use alloc::vec::Vec;

use super::{Graph, GraphError};

/// The `n`-cube on `2^n` vertices; `1 <= n <= 20`.
pub fn hypercube(n: u32) -> Result<Graph, GraphError> {
    if !(1..=20).contains(&n) {
        return Err(GraphError::InvalidParameter("hypercube needs 1 <= n <= 20"));
    }
    let size = 1usize << n;
    let edges = (0..size).flat_map(|u| {
        (0..n)
            .map(move |bit| (u, u ^ (1 << bit)))
            .filter(|&(u, v)| u < v)
    });
    Graph::from_edges(size, edges)
}

/// The `k`-subsets of an `n`-set, in lexicographic order.
fn subsets(n: u32, k: u32) -> Vec<u32> {
    (0u32..1 << n).filter(|m| m.count_ones() == k).collect()
}

/// Johnson graph: `k`-subsets of `{0..n}` meeting in `k - 1` points.
pub fn johnson(n: u32, k: u32) -> Result<Graph, GraphError> {
    if n > 20 || k == 0 || k >= n {
        return Err(GraphError::InvalidParameter("johnson needs 1 <= k < n <= 20"));
    }
    let sets = subsets(n, k);
    Ok(Graph::from_fn(sets.len(), |u, v| {
        (sets[u] & sets[v]).count_ones() == k - 1
    }))
}

/// Kneser graph: `k`-subsets of `{0..n}`, adjacent when disjoint.
pub fn kneser(n: u32, k: u32) -> Result<Graph, GraphError> {
    if n > 20 || k == 0 || 2 * k > n {
        return Err(GraphError::InvalidParameter("kneser needs 1 <= k <= n/2, n <= 20"));
    }
    let sets = subsets(n, k);
    Ok(Graph::from_fn(sets.len(), |u, v| sets[u] & sets[v] == 0))
}

pub fn petersen() -> Graph {
    kneser(5, 2).expect("valid parameters")
}

/// Apex 0, upper ring 1..=5, lower ring 6..=10, apex 11.
pub fn icosahedron() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        let up = 1 + i;
        let low = 6 + i;
        edges.push((0, up));
        edges.push((11, low));
        edges.push((up, 1 + (i + 1) % 5));
        edges.push((low, 6 + (i + 1) % 5));
        edges.push((up, low));
        edges.push((up, 6 + (i + 1) % 5));
    }
    Graph::from_edges(12, edges).expect("valid edges")
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter("cycle needs n >= 3"));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidParameter("complete needs n >= 1"));
    }
    Ok(Graph::from_fn(n, |_, _| true))
}

/// `parts` independent sets of size `size`, all cross pairs adjacent.
pub fn complete_multipartite(parts: usize, size: usize) -> Result<Graph, GraphError> {
    if parts < 2 || size == 0 {
        return Err(GraphError::InvalidParameter("complete multipartite needs parts >= 2, size >= 1"));
    }
    Ok(Graph::from_fn(parts * size, |u, v| u / size != v / size))
}

/// `(u, v) ~ (u', v')` iff `u = u'` or `u ~ u'`, and `v = v'` or `v ~ v'`,
/// and the pairs differ. Vertex `(u, v)` gets index `u * |h| + v`.
pub fn strong_product(g: &Graph, h: &Graph) -> Graph {
    let m = h.order();
    Graph::from_fn(g.order() * m, |x, y| {
        let (u, v) = (x / m, x % m);
        let (u2, v2) = (y / m, y % m);
        (u == u2 || g.has_edge(u, u2)) && (v == v2 || h.has_edge(v, v2))
    })
}

/// The strong product with `K_s`.
pub fn clique_extension(g: &Graph, s: usize) -> Result<Graph, GraphError> {
    if s == 0 {
        return Err(GraphError::InvalidParameter("clique extension needs s >= 1"));
    }
    Ok(strong_product(g, &complete(s)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(hypercube(4).unwrap().edge_count(), 32);
        assert_eq!(kneser(7, 2).unwrap().order(), 21);
        assert_eq!(icosahedron().edge_count(), 30);
        assert!((0..12).all(|v| icosahedron().degree(v) == 5));
        assert_eq!(johnson(6, 3).unwrap().order(), 20);
    }

    #[test]
    fn products() {
        let k2 = complete(2).unwrap();
        assert_eq!(strong_product(&k2, &k2), complete(4).unwrap());
        let p = petersen();
        assert_eq!(clique_extension(&p, 1).unwrap(), p);
        assert_eq!(clique_extension(&p, 2).unwrap().order(), 20);
    }

    #[test]
    fn parameter_errors() {
        assert!(hypercube(0).is_err());
        assert!(johnson(3, 3).is_err());
        assert!(kneser(3, 2).is_err());
        assert!(cycle(2).is_err());
        assert!(complete(0).is_err());
        assert!(clique_extension(&petersen(), 0).is_err());
    }
}
