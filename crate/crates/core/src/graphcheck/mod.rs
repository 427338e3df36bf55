//! Explicit graphs and their certification as distance-regular graphs.
//!
//! Distances are exact BFS layers; no floating point enters
//! certification. The dense eigensolver in [`linalg`] exists only as an
//! oracle for spectral cross-checks.

mod edgelist;
pub mod generators;
pub mod linalg;
mod structure;

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

pub use edgelist::{format_edge_list, parse_edge_list};
pub use structure::{
    adjacency_spectrum, antipodal_check, clique_scan, delsarte_clique_size, delta_subgraph,
    distance_partition_quotient, geodesic, local_graph, reduced_graph, terwilliger_scan,
    AntipodalCheck, DelsarteSize, Quotient, TerwilligerScan,
};

use crate::arrays::IntersectionArray;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {v} out of range for {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("operation needs a non-complete graph")]
    CompleteGraph,
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("{count} shortest paths join {x} and {y}")]
    NonUniqueGeodesic { x: usize, y: usize, count: u64 },
    #[error("graph is not distance-regular")]
    NotDistanceRegular,
    #[error("distance partition from {0} is not equitable")]
    NotEquitable(usize),
    #[error("requires c_i = 1 for 1 <= i <= {0}")]
    NeedsUniqueGeodesics(usize),
    #[error("graph has {n} vertices, above the dense limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: alloc::string::String },
}

/// A finite simple undirected graph with sorted neighbour lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
}

impl Graph {
    /// Builds a graph on `0..n`. Repeated edges collapse; loops are errors.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { v: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    /// Builds a graph from a symmetric adjacency predicate.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adj = vec![Vec::new(); n];
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    adj[u].push(v as u32);
                    adj[v].push(u as u32);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { adj }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .map(|&v| v as usize)
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// BFS distances from `source`; `u32::MAX` marks unreachable vertices.
    pub fn distances(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.order()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                let w = w as usize;
                if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.distances(0).iter().all(|&d| d != u32::MAX)
    }

    pub fn distance_partition(&self, source: usize) -> DistancePartition {
        let dist = self.distances(source);
        let depth = dist.iter().filter(|&&d| d != u32::MAX).max().copied().unwrap_or(0);
        let mut layers = vec![Vec::new(); depth as usize + 1];
        for (v, &d) in dist.iter().enumerate() {
            if d != u32::MAX {
                layers[d as usize].push(v);
            }
        }
        DistancePartition {
            source,
            layers,
            dist,
        }
    }

    /// Induced subgraph; vertex `i` of the result is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![u32::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i as u32;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut list: Vec<u32> = self.adj[v]
                    .iter()
                    .map(|&w| index[w as usize])
                    .filter(|&i| i != u32::MAX)
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        Graph { adj }
    }

    /// Row-major dense adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let n = self.order();
        let mut m = vec![0.0; n * n];
        for (u, v) in self.edges() {
            m[u * n + v] = 1.0;
            m[v * n + u] = 1.0;
        }
        m
    }
}

/// Layers `Gamma_0(x), ..., Gamma_e(x)` of a BFS from `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistancePartition {
    pub source: usize,
    pub layers: Vec<Vec<usize>>,
    pub dist: Vec<u32>,
}

impl DistancePartition {
    pub fn eccentricity(&self) -> usize {
        self.layers.len() - 1
    }

    /// Neighbours of `y` in layers `i-1`, `i` and `i+1`, where `i` is the
    /// layer of `y`.
    pub fn counts(&self, g: &Graph, y: usize) -> (u32, u32, u32) {
        let i = self.dist[y];
        let (mut c, mut a, mut b) = (0, 0, 0);
        for &w in g.neighbors(y) {
            let j = self.dist[w as usize];
            if j + 1 == i {
                c += 1;
            } else if j == i {
                a += 1;
            } else {
                b += 1;
            }
        }
        (c, a, b)
    }
}

/// Which count disagreed during certification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum MismatchKind {
    C,
    A,
    B,
    Eccentricity,
}

/// A pair `(x, y)` at distance `i` where a count differs from the one seen
/// at the reference vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CertWitness {
    pub x: usize,
    pub y: usize,
    pub distance: usize,
    pub kind: MismatchKind,
    pub expected: u32,
    pub found: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certification {
    pub array: Option<IntersectionArray>,
    pub witness: Option<CertWitness>,
}

impl Certification {
    pub fn is_drg(&self) -> bool {
        self.array.is_some()
    }

    pub fn array(&self) -> Result<&IntersectionArray, GraphError> {
        self.array.as_ref().ok_or(GraphError::NotDistanceRegular)
    }
}

/// Intersection numbers `(c_i, a_i, b_i)` read off vertex 0, for
/// `0 <= i <= e` with `e` its eccentricity. Each layer is represented by
/// its first vertex.
pub fn reference_numbers(g: &Graph) -> Result<Vec<(u32, u32, u32)>, GraphError> {
    if g.order() == 0 {
        return Err(GraphError::Empty);
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let p = g.distance_partition(0);
    Ok(p.layers.iter().map(|layer| p.counts(g, layer[0])).collect())
}

/// Compares every pair `(x, y)` against `reference`. Certification of a
/// graph is the conjunction over all `x`, so callers may split sources
/// across threads.
pub fn check_source(g: &Graph, x: usize, reference: &[(u32, u32, u32)]) -> Option<CertWitness> {
    let p = g.distance_partition(x);
    if p.eccentricity() + 1 != reference.len() {
        return Some(CertWitness {
            x,
            y: x,
            distance: 0,
            kind: MismatchKind::Eccentricity,
            expected: reference.len() as u32 - 1,
            found: p.eccentricity() as u32,
        });
    }
    for (i, layer) in p.layers.iter().enumerate() {
        let (ec, ea, eb) = reference[i];
        for &y in layer {
            let (c, a, b) = p.counts(g, y);
            let bad = if c != ec {
                Some((MismatchKind::C, ec, c))
            } else if a != ea {
                Some((MismatchKind::A, ea, a))
            } else if b != eb {
                Some((MismatchKind::B, eb, b))
            } else {
                None
            };
            if let Some((kind, expected, found)) = bad {
                return Some(CertWitness {
                    x,
                    y,
                    distance: i,
                    kind,
                    expected,
                    found,
                });
            }
        }
    }
    None
}

/// Builds the array from the reference numbers once every source agrees.
pub fn assemble(
    reference: &[(u32, u32, u32)],
    witness: Option<CertWitness>,
) -> Result<Certification, GraphError> {
    if let Some(w) = witness {
        return Ok(Certification {
            array: None,
            witness: Some(w),
        });
    }
    let d = reference.len() - 1;
    if d == 0 {
        return Err(GraphError::Empty);
    }
    let b = (0..d).map(|i| reference[i].2).collect();
    let c = (1..=d).map(|i| reference[i].0).collect();
    let array = IntersectionArray::new(b, c).map_err(|_| GraphError::NotDistanceRegular)?;
    Ok(Certification {
        array: Some(array),
        witness: None,
    })
}

/// Exhaustive distance-regularity test over all ordered pairs.
pub fn certify(g: &Graph) -> Result<Certification, GraphError> {
    let reference = reference_numbers(g)?;
    let witness = (0..g.order()).find_map(|x| check_source(g, x, &reference));
    assemble(&reference, witness)
}

#[cfg(test)]
mod tests {
    use super::generators::*;
    use super::*;
    use alloc::string::ToString;

    fn cert(g: &Graph) -> alloc::string::String {
        certify(g).unwrap().array.unwrap().to_string()
    }

    #[test]
    fn certifies_generators() {
        assert_eq!(cert(&hypercube(4).unwrap()), "{4,3,2,1;1,2,3,4}");
        assert_eq!(cert(&petersen()), "{3,2;1,1}");
        assert_eq!(cert(&johnson(7, 3).unwrap()), "{12,6,2;1,4,9}");
        assert_eq!(cert(&icosahedron()), "{5,2,1;1,2,5}");
        assert_eq!(cert(&cycle(5).unwrap()), "{2,1;1,1}");
        assert_eq!(cert(&cycle(6).unwrap()), "{2,1,1;1,1,2}");
        assert_eq!(cert(&complete(4).unwrap()), "{3;1}");
        assert_eq!(cert(&complete_multipartite(3, 2).unwrap()), "{4,1;1,4}");
        assert_eq!(johnson(7, 3).unwrap().order(), 35);
    }

    #[test]
    fn broken_hypercube_has_witness() {
        let q4 = hypercube(4).unwrap();
        let edges: Vec<_> = q4.edges().skip(1).collect();
        let g = Graph::from_edges(16, edges).unwrap();
        let c = certify(&g).unwrap();
        assert!(!c.is_drg());
        let w = c.witness.unwrap();
        assert_ne!(w.expected, w.found);
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(certify(&g), Err(GraphError::Disconnected));
    }

    #[test]
    fn from_edges_validation() {
        assert_eq!(Graph::from_edges(2, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { v: 2, n: 2 })
        ));
        let g = Graph::from_edges(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn partition_layers() {
        let p = petersen().distance_partition(0);
        assert_eq!(p.layers.iter().map(Vec::len).collect::<Vec<_>>(), [1, 3, 6]);
        let g = petersen();
        for layer in &p.layers[1..] {
            for &y in layer {
                for &w in g.neighbors(y) {
                    assert!(p.dist[w as usize].abs_diff(p.dist[y]) <= 1);
                }
            }
        }
    }
}
