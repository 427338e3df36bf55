//! Regenerates the edge-list fixtures under `crates/core/fixtures`.
//!
//! ```text
//! cargo run -p drg --example make_fixtures
//! ```
//!
//! Each graph is certified before it is written.

use std::collections::BTreeSet;
use std::path::Path;

use drg_core::graphcheck::{certify, format_edge_list, Graph};

fn pairs7() -> Vec<(u8, u8)> {
    (0..7).flat_map(|a| (a + 1..7).map(move |b| (a, b))).collect()
}

fn disjoint(p: (u8, u8), q: (u8, u8)) -> bool {
    p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1
}

/// Basis of the null space of `rows` over GF(3).
fn nullspace_mod3(mut rows: Vec<Vec<u8>>, n: usize) -> Vec<Vec<u8>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = if rows[r][col] == 1 { 1 } else { 2 };
        for x in rows[r].iter_mut() {
            *x = *x * inv % 3;
        }
        for i in 0..rows.len() {
            let f = rows[i][col];
            if i != r && f != 0 {
                for j in 0..n {
                    rows[i][j] = (rows[i][j] + 3 * 3 - f * rows[r][j] % 3) % 3;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut x = vec![0u8; n];
            x[free] = 1;
            for (i, &c) in pivots.iter().enumerate() {
                x[c] = (3 - rows[i][free]) % 3;
            }
            x
        })
        .collect()
}

/// Triple cover of the Kneser graph K(7,2) by a GF(3) voltage vanishing
/// on every triangle.
fn conway_smith() -> Graph {
    let v = pairs7();
    let edges: Vec<(usize, usize)> = (0..v.len())
        .flat_map(|i| (i + 1..v.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| disjoint(v[i], v[j]))
        .collect();
    let eidx = |i: usize, j: usize| edges.iter().position(|&e| e == (i, j)).unwrap();
    let mut rows = Vec::new();
    for a in 0..v.len() {
        for b in a + 1..v.len() {
            for c in b + 1..v.len() {
                if disjoint(v[a], v[b]) && disjoint(v[b], v[c]) && disjoint(v[a], v[c]) {
                    let mut row = vec![0u8; edges.len()];
                    row[eidx(a, b)] = 1;
                    row[eidx(b, c)] = 1;
                    row[eidx(a, c)] = 2;
                    rows.push(row);
                }
            }
        }
    }
    let expected = "{10,6,4,1;1,2,6,10}";
    for volt in nullspace_mod3(rows, edges.len()) {
        let cover = edges.iter().zip(&volt).flat_map(|(&(i, j), &x)| {
            (0..3).map(move |g| (3 * i + g, 3 * j + (g + x as usize) % 3))
        });
        let g = Graph::from_edges(3 * v.len(), cover).unwrap();
        if !g.is_connected() {
            continue;
        }
        if let Ok(c) = certify(&g) {
            if c.array.as_ref().map(|a| a.to_string()).as_deref() == Some(expected) {
                return g;
            }
        }
    }
    panic!("no voltage gives {expected}");
}

const INF: u8 = 25;

/// GF(25) as GF(5)[r] with r^2 = 2; element `a + b r` is `a + 5 b`.
fn gf_mul(x: u8, y: u8) -> u8 {
    let (a, b, c, d) = (x % 5, x / 5, y % 5, y / 5);
    (a * c + 2 * b * d) % 5 + 5 * ((a * d + b * c) % 5)
}

fn gf_add(x: u8, y: u8) -> u8 {
    (x % 5 + y % 5) % 5 + 5 * ((x / 5 + y / 5) % 5)
}

fn gf_inv(x: u8) -> u8 {
    (1..25).find(|&y| gf_mul(x, y) == 1).unwrap()
}

fn mobius([a, b, c, d]: [u8; 4], z: u8) -> u8 {
    if z == INF {
        return if c == 0 { INF } else { gf_mul(a, gf_inv(c)) };
    }
    let num = gf_add(gf_mul(a, z), b);
    let den = gf_add(gf_mul(c, z), d);
    if den == 0 {
        INF
    } else {
        gf_mul(num, gf_inv(den))
    }
}

/// Orbit of the Baer subline PG(1,5) under PSL(2,25); disjoint sublines
/// are adjacent.
fn doro() -> Graph {
    let squares: BTreeSet<u8> = (1..25).map(|x| gf_mul(x, x)).collect();
    let minus_one = 4;
    let mut gens = vec![[1, 1, 0, 1], [0, minus_one, 1, 0]];
    gens.extend(squares.iter().map(|&s| [s, 0, 0, 1]));
    let base: BTreeSet<u8> = [INF, 0, 1, 2, 3, 4].into();
    let mut orbit = BTreeSet::from([base.clone()]);
    let mut frontier = vec![base];
    while let Some(s) = frontier.pop() {
        for g in &gens {
            let t: BTreeSet<u8> = s.iter().map(|&z| mobius(*g, z)).collect();
            if orbit.insert(t.clone()) {
                frontier.push(t);
            }
        }
    }
    let orbit: Vec<_> = orbit.into_iter().collect();
    Graph::from_fn(orbit.len(), |i, j| orbit[i].is_disjoint(&orbit[j]))
}

/// Flags of the quadrangle of duads and synthemes of a 6-set; flags
/// sharing exactly one element are adjacent.
fn gq22_flags() -> Graph {
    let duads: Vec<(u8, u8)> = (0..6).flat_map(|a| (a + 1..6).map(move |b| (a, b))).collect();
    let mut synthemes = Vec::new();
    for (i, &p) in duads.iter().enumerate() {
        for (j, &q) in duads.iter().enumerate().skip(i + 1) {
            for &r in &duads[j + 1..] {
                if disjoint(p, q) && disjoint(q, r) && disjoint(p, r) {
                    synthemes.push([p, q, r]);
                }
            }
        }
    }
    let duads = &duads;
    let flags: Vec<(usize, usize)> = synthemes
        .iter()
        .enumerate()
        .flat_map(|(l, s)| s.iter().map(move |p| (duads.iter().position(|d| d == p).unwrap(), l)))
        .collect();
    Graph::from_fn(flags.len(), |i, j| {
        (flags[i].0 == flags[j].0) != (flags[i].1 == flags[j].1)
    })
}

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures");
    std::fs::create_dir_all(&dir).unwrap();
    for (name, g) in [
        ("conway-smith", conway_smith()),
        ("doro", doro()),
        ("gq22-flags", gq22_flags()),
    ] {
        let array = certify(&g).unwrap().array.expect("distance-regular");
        let header = format!("# {name}: {} vertices, {array}\n", g.order());
        std::fs::write(dir.join(format!("{name}.edges")), header + &format_edge_list(&g)).unwrap();
        println!("{name}: {} vertices, {array}", g.order());
    }
}
