use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::linalg::{group_eigenvalues, jacobi_eigenvalues};
use super::{Certification, Graph, GraphError};
use crate::rational::Rational;
use crate::spectral::{integer_value, Spectrum, TridiagonalMatrix};

/// Largest graph handed to the dense eigensolver.
pub const DENSE_LIMIT: usize = 4096;

fn common_neighbors(g: &Graph, x: usize, y: usize) -> Vec<usize> {
    let (a, b) = (g.neighbors(x), g.neighbors(y));
    let (mut i, mut j, mut out) = (0, 0, Vec::new());
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                out.push(a[i] as usize);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TerwilligerScan {
    pub is_terwilliger: bool,
    /// Common size of `Gamma(x) ∩ Gamma(y)` over distance-2 pairs, if constant.
    pub mu: Option<usize>,
    /// First distance-2 pair whose common neighbours are not a clique.
    pub non_clique_pair: Option<(usize, usize)>,
    /// Found by direct search for an induced 4-cycle.
    pub has_quadrangle: bool,
}

/// Checks every distance-2 pair for a clique of common neighbours of a
/// fixed size.
pub fn terwilliger_scan(g: &Graph) -> Result<TerwilligerScan, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let n = g.order();
    let mut mu: Option<Option<usize>> = None;
    let mut non_clique_pair = None;
    for x in 0..n {
        let dist = g.distances(x);
        for y in x + 1..n {
            if dist[y] != 2 {
                continue;
            }
            let common = common_neighbors(g, x, y);
            mu = match mu {
                None => Some(Some(common.len())),
                Some(Some(m)) if m == common.len() => Some(Some(m)),
                _ => Some(None),
            };
            if non_clique_pair.is_none() {
                let clique = common
                    .iter()
                    .enumerate()
                    .all(|(i, &u)| common[i + 1..].iter().all(|&w| g.has_edge(u, w)));
                if !clique {
                    non_clique_pair = Some((x, y));
                }
            }
        }
    }
    let Some(mu) = mu else {
        return Err(GraphError::CompleteGraph);
    };
    Ok(TerwilligerScan {
        is_terwilliger: mu.is_some() && non_clique_pair.is_none(),
        mu,
        non_clique_pair,
        has_quadrangle: has_induced_quadrangle(g),
    })
}

/// Searches paths `a - b - c - d - a` with both diagonals absent.
fn has_induced_quadrangle(g: &Graph) -> bool {
    for (a, b) in g.edges().flat_map(|(u, v)| [(u, v), (v, u)]) {
        for &c in g.neighbors(b) {
            let c = c as usize;
            if c == a || g.has_edge(a, c) {
                continue;
            }
            for &d in g.neighbors(c) {
                let d = d as usize;
                if d != b && g.has_edge(d, a) && !g.has_edge(b, d) {
                    return true;
                }
            }
        }
    }
    false
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct AntipodalCheck {
    pub is_antipodal: bool,
    /// Size of each antipodal class.
    pub r: Option<usize>,
}

/// Tests whether "equal or at distance D" is an equivalence relation.
pub fn antipodal_check(g: &Graph, cert: &Certification) -> Result<AntipodalCheck, GraphError> {
    let d = cert.array()?.diameter() as u32;
    let n = g.order();
    let class = |x: usize| -> Vec<usize> {
        let dist = g.distances(x);
        (0..n).filter(|&y| dist[y] == 0 || dist[y] == d).collect()
    };
    if d < 2 {
        return Ok(AntipodalCheck {
            is_antipodal: false,
            r: None,
        });
    }
    let mut r = None;
    for x in 0..n {
        let cx = class(x);
        if cx.iter().any(|&y| class(y) != cx) {
            return Ok(AntipodalCheck {
                is_antipodal: false,
                r: None,
            });
        }
        r = Some(cx.len());
    }
    Ok(AntipodalCheck {
        is_antipodal: true,
        r,
    })
}

/// Subgraph induced on the neighbours of `x`.
pub fn local_graph(g: &Graph, x: usize) -> Graph {
    let verts: Vec<usize> = g.neighbors(x).iter().map(|&v| v as usize).collect();
    g.induced_subgraph(&verts)
}

/// Identifies vertices with equal closed neighbourhoods. Classes are
/// numbered by their smallest member.
pub fn reduced_graph(g: &Graph) -> Graph {
    let mut classes: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    let mut label = vec![0; g.order()];
    for x in 0..g.order() {
        let mut closed = g.neighbors(x).to_vec();
        closed.push(x as u32);
        closed.sort_unstable();
        let next = classes.len();
        label[x] = *classes.entry(closed).or_insert(next);
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v)| (label[u], label[v]))
        .filter(|(a, b)| a != b)
        .collect();
    Graph::from_edges(classes.len(), edges).expect("labels in range")
}

/// The unique shortest path from `x` to `y`, both endpoints included.
pub fn geodesic(g: &Graph, x: usize, y: usize) -> Result<Vec<usize>, GraphError> {
    let n = g.order();
    for v in [x, y] {
        if v >= n {
            return Err(GraphError::VertexOutOfRange { v, n });
        }
    }
    let p = g.distance_partition(x);
    if p.dist[y] == u32::MAX {
        return Err(GraphError::Disconnected);
    }
    let mut count = vec![0u64; n];
    count[x] = 1;
    for layer in &p.layers[1..] {
        for &v in layer {
            count[v] = g
                .neighbors(v)
                .iter()
                .filter(|&&w| p.dist[w as usize] + 1 == p.dist[v])
                .map(|&w| count[w as usize])
                .fold(0u64, u64::saturating_add);
        }
    }
    if count[y] != 1 {
        return Err(GraphError::NonUniqueGeodesic {
            x,
            y,
            count: count[y],
        });
    }
    let mut path = vec![y];
    let mut cur = y;
    while cur != x {
        cur = g
            .neighbors(cur)
            .iter()
            .map(|&w| w as usize)
            .find(|&w| p.dist[w] + 1 == p.dist[cur])
            .expect("predecessor exists");
        path.push(cur);
    }
    path.reverse();
    Ok(path)
}

/// Union of the geodesics from `u` to the component of `v` inside the
/// layer `Gamma_s(u)`, `s = d(u, v)`, as an induced subgraph. Returns the
/// subgraph and its vertices in increasing order.
pub fn delta_subgraph(
    g: &Graph,
    cert: &Certification,
    u: usize,
    v: usize,
) -> Result<(Graph, Vec<usize>), GraphError> {
    let arr = cert.array()?;
    let p = g.distance_partition(u);
    let s = p.dist[v] as usize;
    if s == 0 || (1..=s).any(|i| arr.c(i) != 1) {
        return Err(GraphError::NeedsUniqueGeodesics(s));
    }
    let layer = &p.layers[s];
    let mut in_comp = vec![false; g.order()];
    in_comp[v] = true;
    let mut stack = vec![v];
    while let Some(x) = stack.pop() {
        for &w in g.neighbors(x) {
            let w = w as usize;
            if p.dist[w] as usize == s && !in_comp[w] {
                in_comp[w] = true;
                stack.push(w);
            }
        }
    }
    let mut keep = vec![false; g.order()];
    for &x in layer.iter().filter(|&&x| in_comp[x]) {
        for w in geodesic(g, u, x)? {
            keep[w] = true;
        }
    }
    let verts: Vec<usize> = (0..g.order()).filter(|&w| keep[w]).collect();
    Ok((g.induced_subgraph(&verts), verts))
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Quotient {
    /// `(c_i, a_i, b_i)` per layer.
    pub rows: Vec<(u32, u32, u32)>,
    pub eigenvalues: Vec<f64>,
    /// Every quotient eigenvalue appears in the adjacency spectrum.
    pub contained_in_spectrum: bool,
}

/// Quotient matrix of the distance partition from `x`, with its
/// eigenvalues checked against the dense adjacency spectrum.
pub fn distance_partition_quotient(g: &Graph, x: usize, tol: f64) -> Result<Quotient, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let p = g.distance_partition(x);
    let mut rows = Vec::with_capacity(p.layers.len());
    for layer in &p.layers {
        let first = p.counts(g, layer[0]);
        if layer.iter().any(|&y| p.counts(g, y) != first) {
            return Err(GraphError::NotEquitable(x));
        }
        rows.push(first);
    }
    let m = rows.len();
    let diag = rows.iter().map(|r| r.1 as f64).collect();
    let upper = rows[..m - 1].iter().map(|r| r.2 as f64).collect();
    let lower = rows[1..].iter().map(|r| r.0 as f64).collect();
    let eigenvalues = TridiagonalMatrix::new(diag, upper, lower)
        .and_then(|t| t.eigenvalues(1e-12))
        .map_err(|_| GraphError::NotEquitable(x))?;
    let spectrum = adjacency_spectrum(g, tol)?;
    let contained_in_spectrum = eigenvalues
        .iter()
        .all(|&e| spectrum.iter().any(|&(s, _)| (s - e).abs() <= tol));
    Ok(Quotient {
        rows,
        eigenvalues,
        contained_in_spectrum,
    })
}

/// Distinct adjacency eigenvalues with multiplicities, descending.
pub fn adjacency_spectrum(g: &Graph, tol: f64) -> Result<Vec<(f64, usize)>, GraphError> {
    let n = g.order();
    if n > DENSE_LIMIT {
        return Err(GraphError::TooLarge {
            n,
            limit: DENSE_LIMIT,
        });
    }
    Ok(group_eigenvalues(&jacobi_eigenvalues(&g.adjacency_matrix(), n), tol))
}

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum DelsarteSize {
    Exact(Rational),
    Irrational(f64),
}

impl DelsarteSize {
    pub fn value(&self) -> f64 {
        match self {
            DelsarteSize::Exact(r) => r.to_f64(),
            DelsarteSize::Irrational(x) => *x,
        }
    }
}

/// `1 - k / theta_min`, exact when the smallest eigenvalue is an integer.
pub fn delsarte_clique_size(k: u32, spectrum: &Spectrum, int_tol: f64) -> DelsarteSize {
    let theta = spectrum.theta_min();
    match integer_value(theta, int_tol).and_then(|t| {
        Rational::new(t as i128 - k as i128, t as i128)
    }) {
        Some(r) => DelsarteSize::Exact(r),
        None => DelsarteSize::Irrational(1.0 - k as f64 / theta),
    }
}

/// Clique number by branch and bound over candidate sets.
pub fn clique_scan(g: &Graph) -> usize {
    fn extend(g: &Graph, size: usize, cand: &[usize], best: &mut usize) {
        if cand.is_empty() {
            *best = (*best).max(size);
            return;
        }
        for (i, &v) in cand.iter().enumerate() {
            if size + cand.len() - i <= *best {
                return;
            }
            let next: Vec<usize> = cand[i + 1..]
                .iter()
                .copied()
                .filter(|&w| g.has_edge(v, w))
                .collect();
            extend(g, size + 1, &next, best);
        }
    }
    let all: Vec<usize> = (0..g.order()).collect();
    let mut best = 0;
    extend(g, 0, &all, &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::super::generators::*;
    use super::super::certify;
    use super::*;
    use crate::arrays::IntersectionArray;
    use crate::spectral::{spectrum, Tolerances};
    use alloc::string::ToString;

    #[test]
    fn terwilliger_examples() {
        let ico = terwilliger_scan(&icosahedron()).unwrap();
        assert!(ico.is_terwilliger && !ico.has_quadrangle);
        assert_eq!(ico.mu, Some(2));
        let q = terwilliger_scan(&hypercube(3).unwrap()).unwrap();
        assert!(!q.is_terwilliger && q.has_quadrangle);
        let p = terwilliger_scan(&petersen()).unwrap();
        assert!(p.is_terwilliger && !p.has_quadrangle);
        assert_eq!(terwilliger_scan(&complete(4).unwrap()), Err(GraphError::CompleteGraph));
    }

    #[test]
    fn antipodal() {
        let q3 = hypercube(3).unwrap();
        let a = antipodal_check(&q3, &certify(&q3).unwrap()).unwrap();
        assert_eq!(a, AntipodalCheck { is_antipodal: true, r: Some(2) });
        let p = petersen();
        assert!(!antipodal_check(&p, &certify(&p).unwrap()).unwrap().is_antipodal);
        let ico = icosahedron();
        assert_eq!(antipodal_check(&ico, &certify(&ico).unwrap()).unwrap().r, Some(2));
    }

    #[test]
    fn local_and_reduced() {
        assert_eq!(certify(&local_graph(&icosahedron(), 0)).unwrap().array.unwrap().to_string(), "{2,1;1,1}");
        let p = petersen();
        assert_eq!(reduced_graph(&clique_extension(&p, 3).unwrap()), p);
        assert_eq!(reduced_graph(&p), p);
    }

    #[test]
    fn geodesics() {
        let p = petersen();
        let path = geodesic(&p, 0, 9).unwrap();
        assert_eq!(path.len() as u32 - 1, p.distances(0)[9]);
        assert!(path.windows(2).all(|w| p.has_edge(w[0], w[1])));
        let q3 = hypercube(3).unwrap();
        assert!(matches!(geodesic(&q3, 0, 3), Err(GraphError::NonUniqueGeodesic { count: 2, .. })));
    }

    #[test]
    fn delta_on_petersen() {
        let p = petersen();
        let cert = certify(&p).unwrap();
        let v = p.neighbors(0)[0] as usize;
        let (d, verts) = delta_subgraph(&p, &cert, 0, v).unwrap();
        assert_eq!(verts.len(), 2);
        assert_eq!(d.edge_count(), 1);
        let q3 = hypercube(3).unwrap();
        let far = (1..8).find(|&y| q3.distances(0)[y] == 2).unwrap();
        assert!(delta_subgraph(&q3, &certify(&q3).unwrap(), 0, far).is_err());
    }

    #[test]
    fn quotient_and_spectrum() {
        let p = petersen();
        let q = distance_partition_quotient(&p, 0, 1e-6).unwrap();
        assert_eq!(q.rows, vec![(0, 0, 3), (1, 0, 2), (1, 2, 0)]);
        assert!(q.contained_in_spectrum);
        let spec = adjacency_spectrum(&p, 1e-6).unwrap();
        assert_eq!(spec.iter().map(|s| s.1).collect::<Vec<_>>(), [1, 5, 4]);
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(distance_partition_quotient(&g, 1, 1e-6), Err(GraphError::NotEquitable(1)));
    }

    #[test]
    fn delsarte_and_cliques() {
        let arr = IntersectionArray::parse("{3,2;1,1}").unwrap();
        let s = spectrum(&arr, &Tolerances::default()).unwrap();
        assert_eq!(delsarte_clique_size(3, &s, 1e-8), DelsarteSize::Exact(Rational::new(5, 2).unwrap()));
        assert_eq!(clique_scan(&petersen()), 2);
        assert_eq!(clique_scan(&icosahedron()), 3);
        assert_eq!(clique_scan(&johnson(7, 3).unwrap()), 5);
        let ico = IntersectionArray::parse("{5,2,1;1,2,5}").unwrap();
        let s = spectrum(&ico, &Tolerances::default()).unwrap();
        assert!(matches!(delsarte_clique_size(5, &s, 1e-8), DelsarteSize::Irrational(_)));
    }
}
