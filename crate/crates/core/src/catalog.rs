//! Named graphs and complexes, plus a seeded random complex generator.
//!
//! Graph names: `C_n`, `K_n`, `P_n`, `star_n`, `wheel_n`, `octahedron`,
//! `icosahedron`, `cross_polytope_d`, `figure8`, `bouquet_k`,
//! `dunce_hat_8`. Complex names: `point`, `interval`, `c3_boundary`,
//! `k3_simplex`, `figure1`, `figure8`, `bouquet_k`, `dunce_hat_8`, and any
//! graph name (read as its Whitney complex).

use rand::Rng;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::functor::phi;
use crate::graph::Graph;
use crate::Label;

/// Facets of the 8-vertex dunce hat: every edge lies in at least two
/// triangles, the complex is contractible but has no free face.
pub const DUNCE_HAT_8: [[Label; 3]; 17] = [
    [1, 2, 4],
    [1, 2, 6],
    [1, 2, 8],
    [1, 3, 5],
    [1, 3, 7],
    [1, 3, 8],
    [1, 4, 6],
    [1, 5, 7],
    [2, 3, 5],
    [2, 3, 6],
    [2, 3, 7],
    [2, 4, 7],
    [2, 5, 8],
    [3, 6, 8],
    [4, 5, 7],
    [4, 5, 8],
    [4, 6, 8],
];

pub const GRAPH_NAMES: &[&str] = &[
    "C_n",
    "K_n",
    "P_n",
    "star_n",
    "wheel_n",
    "octahedron",
    "icosahedron",
    "cross_polytope_d",
    "figure8",
    "bouquet_k",
    "dunce_hat_8",
];

pub const COMPLEX_NAMES: &[&str] =
    &["point", "interval", "c3_boundary", "k3_simplex", "figure1", "figure8", "bouquet_k", "dunce_hat_8"];

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
}

/// `K_{1,n}`: vertex 0 joined to `1..=n`.
pub fn star(n: usize) -> Graph {
    Graph::from_edges(n + 1, (1..=n).map(|i| (0, i))).expect("valid star")
}

/// Hub 0 joined to the cycle `1..=n`.
pub fn wheel(n: usize) -> Graph {
    let rim = (0..n).map(|i| (1 + i, 1 + (i + 1) % n));
    Graph::from_edges(n + 1, rim.chain((1..=n).map(|i| (0, i)))).expect("valid wheel")
}

/// The zero-sphere: two isolated vertices.
pub fn zero_sphere() -> Graph {
    Graph::new(2)
}

/// Join of `d + 1` copies of the zero-sphere, a `d`-sphere for `d ≥ 0`.
pub fn cross_polytope(d: usize) -> Graph {
    (0..d).fold(zero_sphere(), |acc, _| acc.zykov_join(&zero_sphere()))
}

pub fn octahedron() -> Graph {
    cross_polytope(2)
}

pub fn icosahedron() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        let (u, v) = (1 + i, 1 + (i + 1) % 5);
        let (l, m) = (6 + i, 6 + (i + 1) % 5);
        edges.extend([(0, u), (u, v), (l, m), (l, 11), (u, l), (u, m)]);
    }
    Graph::from_edges(12, edges).expect("valid icosahedron")
}

/// `k` squares glued at one point; the point is vertex 0.
pub fn bouquet_graph(k: usize) -> Graph {
    let mut edges = Vec::new();
    for j in 0..k {
        let (a, b, c) = (1 + 3 * j, 2 + 3 * j, 3 + 3 * j);
        edges.extend([(0, a), (a, b), (b, c), (c, 0)]);
    }
    Graph::from_edges(3 * k + 1, edges).expect("valid bouquet")
}

pub fn figure8_graph() -> Graph {
    bouquet_graph(2)
}

/// One-dimensional complex of `k` squares sharing vertex 1.
pub fn bouquet_complex(k: usize) -> Complex {
    let mut facets = Vec::new();
    for j in 0..k as Label {
        let (a, b, c) = (2 + 3 * j, 3 + 3 * j, 4 + 3 * j);
        facets.extend([[1, a], [a, b], [b, c], [c, 1]]);
    }
    Complex::from_facets(facets).expect("valid bouquet")
}

/// Two squares `1234` and `4567` sharing the point 4.
pub fn figure8_complex() -> Complex {
    Complex::from_facets([[1, 2], [2, 3], [3, 4], [4, 1], [4, 5], [5, 6], [6, 7], [7, 4]]).expect("valid figure 8")
}

pub fn dunce_hat_complex() -> Complex {
    Complex::from_facets(DUNCE_HAT_8).expect("valid dunce hat")
}

fn parse_suffix(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?.parse().ok()
}

/// Looks up a graph by name.
pub fn graph(name: &str) -> Result<Graph> {
    let unknown = || Error::InvalidInput(format!("unknown catalog graph '{name}'"));
    let sized = |prefix: &str, min: usize| -> Result<Option<usize>> {
        match parse_suffix(name, prefix) {
            Some(n) if n < min => Err(Error::InvalidInput(format!("{name}: parameter must be at least {min}"))),
            other => Ok(other),
        }
    };
    if let Some(n) = sized("C_", 3)? {
        return Ok(cycle(n));
    }
    if let Some(n) = sized("K_", 1)? {
        return Ok(Graph::complete(n));
    }
    if let Some(n) = sized("P_", 1)? {
        return Ok(path(n));
    }
    if let Some(n) = sized("star_", 1)? {
        return Ok(star(n));
    }
    if let Some(n) = sized("wheel_", 3)? {
        return Ok(wheel(n));
    }
    if let Some(d) = sized("cross_polytope_", 0)? {
        return Ok(cross_polytope(d));
    }
    if let Some(k) = sized("bouquet_", 1)? {
        return Ok(bouquet_graph(k));
    }
    match name {
        "octahedron" => Ok(octahedron()),
        "icosahedron" => Ok(icosahedron()),
        "figure8" => Ok(figure8_graph()),
        // the 8-vertex dunce hat is not a clique complex, so its graph is
        // the Barycentric refinement graph
        "dunce_hat_8" => Ok(phi(&dunce_hat_complex()).graph),
        _ => Err(unknown()),
    }
}

/// Looks up a complex by name; graph names give Whitney complexes.
pub fn complex(name: &str) -> Result<Complex> {
    let from = |facets: &[&[Label]]| Complex::from_facets(facets.iter().map(|f| f.iter().copied()));
    match name {
        "point" => from(&[&[1]]),
        "interval" => from(&[&[1, 2], &[2, 3]]),
        "c3_boundary" => from(&[&[1, 2], &[2, 3], &[3, 1]]),
        "k3_simplex" => from(&[&[1, 2, 3]]),
        "figure1" => from(&[&[1, 2], &[2, 3], &[3, 4], &[4, 1], &[4, 5]]),
        "figure8" => Ok(figure8_complex()),
        "dunce_hat_8" => Ok(dunce_hat_complex()),
        _ => {
            if let Some(k) = parse_suffix(name, "bouquet_") {
                if k >= 1 {
                    return Ok(bouquet_complex(k));
                }
            }
            let g = graph(name).map_err(|_| Error::InvalidInput(format!("unknown catalog complex '{name}'")))?;
            Complex::whitney(&g.with_labels(g.labels().iter().map(|l| l + 1).collect())?)
        }
    }
}

/// The named complexes used by the test suites.
pub fn standard_complexes() -> Vec<(String, Complex)> {
    let names = [
        "point",
        "interval",
        "c3_boundary",
        "k3_simplex",
        "figure1",
        "figure8",
        "bouquet_2",
        "bouquet_3",
        "bouquet_4",
        "dunce_hat_8",
        "C_4",
        "C_5",
        "K_4",
        "P_4",
        "star_4",
        "wheel_5",
        "octahedron",
        "icosahedron",
        "cross_polytope_1",
    ];
    names.iter().map(|&n| (n.to_string(), complex(n).expect("catalog entry"))).collect()
}

/// The named graphs used by the test suites.
pub fn standard_graphs() -> Vec<(String, Graph)> {
    let names = [
        "C_4",
        "C_5",
        "C_6",
        "C_7",
        "K_1",
        "K_3",
        "K_5",
        "P_5",
        "star_5",
        "wheel_6",
        "octahedron",
        "icosahedron",
        "cross_polytope_3",
        "figure8",
        "bouquet_3",
    ];
    names.iter().map(|&n| (n.to_string(), graph(n).expect("catalog entry"))).collect()
}

/// A random complex on at most `max_vertices` base points: the downward
/// closure of `1..=4` random facets of dimension at most `max_dim`.
pub fn random_complex<R: Rng + ?Sized>(rng: &mut R, max_vertices: usize, max_dim: usize) -> Complex {
    let n = rng.gen_range(1..=max_vertices.max(1)) as Label;
    let count = rng.gen_range(1..=4);
    let facets: Vec<Vec<Label>> = (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=(max_dim + 1).min(n as usize));
            let mut f: Vec<Label> = Vec::with_capacity(size);
            while f.len() < size {
                let v = rng.gen_range(1..=n);
                if !f.contains(&v) {
                    f.push(v);
                }
            }
            f
        })
        .collect();
    Complex::from_facets(facets).expect("non-empty random facets")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_sizes() {
        assert_eq!(graph("C_6").unwrap().edge_count(), 6);
        assert_eq!(graph("wheel_6").unwrap().n(), 7);
        assert_eq!(graph("star_4").unwrap().edge_count(), 4);
        let ico = icosahedron();
        assert_eq!(ico.edge_count(), 30);
        assert!((0..12).all(|i| ico.degree(i) == 5));
        assert_eq!(octahedron().edge_count(), 12);
        assert_eq!(cross_polytope(4).n(), 10);
        assert!(graph("C_2").is_err());
        assert!(graph("nope").is_err());
    }

    #[test]
    fn bouquet_counts() {
        for (k, f0, f1) in [(2, 7, 8), (3, 10, 12), (4, 13, 16)] {
            let g = bouquet_complex(k);
            assert_eq!(g.f_vector().0, vec![f0, f1]);
            let w = Complex::whitney(&bouquet_graph(k)).unwrap();
            assert_eq!(w.f_vector().0, vec![f0, f1]);
        }
        assert_eq!(figure8_complex().f_vector().0, vec![7, 8]);
    }

    #[test]
    fn dunce_hat_shape() {
        let d = dunce_hat_complex();
        assert_eq!(d.f_vector().0, vec![8, 24, 17]);
        assert_eq!(d.euler_characteristic(), 1);
        let triangles: Vec<_> = d.sets().iter().filter(|s| s.len() == 3).collect();
        for e in d.sets().iter().filter(|s| s.len() == 2) {
            assert!(triangles.iter().filter(|t| e.is_subset(t)).count() >= 2, "free edge {e}");
        }
    }

    #[test]
    fn whitney_names() {
        assert_eq!(complex("octahedron").unwrap().f_vector().0, vec![6, 12, 8]);
        assert_eq!(complex("K_3").unwrap(), complex("k3_simplex").unwrap());
        assert_eq!(complex("C_3").unwrap(), complex("k3_simplex").unwrap());
    }

    #[test]
    fn random_complexes_are_bounded() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = random_complex(&mut rng, 10, 3);
            assert!(g.vertices().len() <= 10);
            assert!(g.dim().unwrap() <= 3);
        }
    }
}
