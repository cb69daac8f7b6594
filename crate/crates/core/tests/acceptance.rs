//! One PASS/FAIL line per acceptance criterion. Run with
//! `cargo test -p congraph --test acceptance -- --nocapture`.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::{Duration, Instant};

use congraph::canon::{automorphism_group, AUTOMORPHISM_LIMIT};
use congraph::capacity::{
    capacity_report, capacity_ring_check, independence_number, lovasz_umbrella, phi_capacity_1d, shannon_lower,
    spectrum_product_check, unimodularity_check,
};
use congraph::catalog;
use congraph::homotopy::moves::Move;
use congraph::homotopy::reduce::legal_moves;
use congraph::homotopy::trace::{HomotopyTrace, TraceBuilder};
use congraph::homotopy::traces::{barycentric_trace, product_extension_trace, psi_to_phi_trace};
use congraph::homotopy::{is_contractible_subgraph, sphere_dimension};
use congraph::invariants::homology::{betti, graph_betti};
use congraph::invariants::{gauss_bonnet_check, graph_euler, graph_f_vector, poincare_hopf};
use congraph::reconstruct::{complex_automorphism_order, reconstruct_complex, zero_dim_vertices, Reconstruction};
use congraph::{phi, psi, Complex, Error, Graph, Label, Labeling, Rational, Scalar};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_complexes(seed: u64, count: usize, max_vertices: usize, max_dim: usize) -> Vec<Complex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| catalog::random_complex(&mut rng, max_vertices, max_dim)).collect()
}

/// The reconstructed complex in the original vertex names: each recovered
/// point is a graph vertex whose set under `labeling` is a singleton.
fn through_labeling(r: &Reconstruction, labeling: &Labeling) -> Complex {
    r.complex.relabel(|v| labeling.set(v as usize).vertices()[0]).unwrap()
}

fn reconstruction() -> Outcome {
    let start = Instant::now();
    let mut complexes: Vec<(String, Complex)> = catalog::standard_complexes();
    for (k, g) in random_complexes(1, 200, 10, 3).into_iter().enumerate() {
        complexes.push((format!("random#{k}"), g));
    }
    for (name, g) in &complexes {
        for (side, cg) in [("psi", psi(g)), ("phi", phi(g))] {
            let r = reconstruct_complex(&cg.graph).map_err(|e| format!("{name} via {side}: {e}"))?;
            let back = through_labeling(&r, &cg.labeling);
            check(&back == g, || format!("{name} via {side}: got {back:?}"))?;
        }
    }
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("{} complexes, both functors, {:.1?}", complexes.len(), elapsed))
}

fn degree_lemma() -> Outcome {
    let mut complexes: Vec<(String, Complex)> = catalog::standard_complexes();
    for (k, g) in random_complexes(1, 200, 10, 3).into_iter().enumerate() {
        complexes.push((format!("random#{k}"), g));
    }
    let mut mismatches = Vec::new();
    for (name, g) in &complexes {
        let truth: Vec<Label> = (0..g.len()).filter(|&i| g.sets()[i].len() == 1).map(|i| i as Label).collect();
        if zero_dim_vertices(&psi(g).graph) != truth {
            mismatches.push(name.clone());
        }
    }
    check(mismatches.is_empty(), || format!("mismatches on {mismatches:?}"))?;
    Ok(format!("{} connection graphs, 0 mismatches", complexes.len()))
}

/// Complexes where `|Aut(φ(G))| > |Aut(G)|`. `φ(G)` is the comparability
/// graph of the face poset and forgets its direction, so an order-reversing
/// symmetry of the poset (cycles: points to edges; simplex and its boundary:
/// points to facets) doubles the group. The octahedron has no such symmetry
/// since its dual is the cube.
const PHI_AUTOMORPHISM_EXCEPTIONS: &[(&str, u64, u64)] = &[
    ("c3_boundary", 6, 12),
    ("k3_simplex", 6, 12),
    ("C_4", 8, 16),
    ("C_5", 10, 20),
    ("K_4", 24, 48),
    ("cross_polytope_1", 8, 16),
];

fn automorphisms() -> Outcome {
    let mut checked = 0;
    let mut phi_mismatch: Vec<(String, u64, u64)> = Vec::new();
    for (name, g) in catalog::standard_complexes() {
        if g.len() > AUTOMORPHISM_LIMIT {
            continue;
        }
        checked += 1;
        let own: u64 = complex_automorphism_order(&g, AUTOMORPHISM_LIMIT).map_err(|e| e.to_string())?.try_into().unwrap();
        let of = |a: &Graph| -> Result<u64, String> {
            Ok(automorphism_group(a, AUTOMORPHISM_LIMIT).map_err(|e| e.to_string())?.order.try_into().unwrap())
        };
        let on_psi = of(&psi(&g).graph)?;
        let on_phi = of(&phi(&g).graph)?;
        check(on_psi == own, || format!("{name}: |Aut(G)| = {own}, |Aut(psi)| = {on_psi}"))?;
        if on_phi != own {
            phi_mismatch.push((name, own, on_phi));
        }
    }
    let expected: Vec<(String, u64, u64)> =
        PHI_AUTOMORPHISM_EXCEPTIONS.iter().map(|&(n, a, b)| (n.to_string(), a, b)).collect();
    check(phi_mismatch == expected, || format!("unexpected phi mismatches {phi_mismatch:?}"))?;
    if phi_mismatch.is_empty() {
        Ok(format!("{checked} complexes"))
    } else {
        // ψ side holds everywhere; the φ side is false for self-dual face posets
        Err(format!("{checked} complexes; psi side holds; phi side differs on {phi_mismatch:?} (|Aut(G)|, |Aut(phi)|)"))
    }
}

fn psi_to_phi() -> Outcome {
    let mut lens = Vec::new();
    for name in ["point", "interval", "c3_boundary", "k3_simplex", "figure8"] {
        let g = catalog::complex(name).unwrap().barycentric_refine().unwrap();
        let trace = psi_to_phi_trace(&g).map_err(|e| format!("{name}: {e}"))?;
        let replay = trace.replay().map_err(|e| format!("{name}: {e}"))?;
        let chi = g.euler_characteristic();
        check(replay.euler == Some(chi), || format!("{name}: chi {:?} vs {chi}", replay.euler))?;
        let target = phi(&g).graph;
        check(trace.end.n() == target.n() && trace.end.edge_count() == target.edge_count(), || {
            format!("{name}: trace does not end at phi(G)")
        })?;
        lens.push(format!("{name}:{}", trace.len()));
    }
    let c3 = catalog::complex("c3_boundary").unwrap();
    match psi_to_phi_trace(&c3) {
        Err(Error::IntersectionNotContractible { .. }) => {}
        other => return Err(format!("plain C_3 boundary gave {:?}", other.map(|t| t.len()))),
    }
    Ok(format!("moves {}; plain C_3 boundary rejected", lens.join(" ")))
}

fn euler_gem() -> Outcome {
    let mut cases: Vec<(String, Graph, i32)> = (4..=8).map(|n| (format!("C_{n}"), catalog::cycle(n), 1)).collect();
    cases.push(("octahedron".into(), catalog::octahedron(), 2));
    cases.push(("icosahedron".into(), catalog::icosahedron(), 2));
    for d in 1..=4 {
        cases.push((format!("cross_polytope_{d}"), catalog::cross_polytope(d), d as i32));
    }
    for (name, g, d) in &cases {
        let dim = sphere_dimension(g);
        check(dim == Some(*d), || format!("{name}: sphere dimension {dim:?}"))?;
        let chi = graph_euler(g).map_err(|e| e.to_string())?;
        check(chi == 1 + (-1i64).pow(*d as u32), || format!("{name}: chi {chi}"))?;
    }
    let f = graph_f_vector(&catalog::cross_polytope(4)).map_err(|e| e.to_string())?;
    check(f.0 == vec![10, 40, 80, 80, 32], || format!("cross_polytope_4 f-vector {:?}", f.0))?;
    Ok(format!("{} spheres; cross_polytope_4 f = (10,40,80,80,32)", cases.len()))
}

fn known_numerics() -> Outcome {
    let start = Instant::now();
    let c3 = catalog::complex("c3_boundary").unwrap();
    let e = |g: &Graph| graph_euler(g).map_err(|e| e.to_string());
    check(e(&phi(&c3).graph)? == 0, || "chi(phi(C_3))".into())?;
    check(e(&psi(&c3).graph)? == 1, || "chi(psi(C_3))".into())?;
    let f8 = catalog::figure8_complex();
    check(f8.euler_characteristic() == -1, || "figure-8 chi".into())?;
    let b = betti(&f8).map_err(|e| e.to_string())?;
    check(b == vec![1, 2], || format!("figure-8 betti {b:?}"))?;
    let oct = catalog::complex("octahedron").unwrap();
    let b = graph_betti(&psi(&oct).graph).map_err(|e| e.to_string())?;
    check(b == vec![1, 0, 0, 1], || format!("psi(octahedron) betti {b:?}"))?;
    let bary = oct.barycentric_refine().unwrap();
    let b = graph_betti(&psi(&bary).graph).map_err(|e| e.to_string())?;
    check(b == vec![1, 0, 1], || format!("psi(barycentric octahedron) betti {b:?}"))?;
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(120), || format!("took {elapsed:?}"))?;
    Ok(format!("all exact, {elapsed:.1?}"))
}

fn capacity() -> Outcome {
    for (name, g) in catalog::standard_complexes() {
        let i = independence_number(&psi(&g).graph).map_err(|e| format!("{name}: {e}"))?;
        check(i.size == g.f0(), || format!("{name}: i(psi) = {} but f0 = {}", i.size, g.f0()))?;
        let u = lovasz_umbrella::<Rational>(&g);
        check(u.orthogonal && u.bound == Rational::from_int(g.f0() as i64), || format!("{name}: umbrella {}", u.bound))?;
    }
    for (name, theta) in [("figure1", 5), ("figure8", 7)] {
        let r = capacity_report(&catalog::complex(name).unwrap(), 1, false).map_err(|e| e.to_string())?;
        check(r.certified_theta == Some(theta), || format!("{name}: certified {:?}", r.certified_theta))?;
    }
    let mut table = Vec::new();
    for (k, expect) in [(2, (8, 7)), (3, (12, 10)), (4, (16, 13))] {
        let g = catalog::bouquet_complex(k);
        let on_phi = independence_number(&phi(&g).graph).map_err(|e| e.to_string())?.size;
        let asserted = phi_capacity_1d(&g).map_err(|e| e.to_string())?.value;
        let on_psi = capacity_report(&g, 1, false).map_err(|e| e.to_string())?.certified_theta;
        check(on_phi == asserted && (on_phi, on_psi) == (expect.0, Some(expect.1)), || {
            format!("bouquet {k}: phi {on_phi}, psi {on_psi:?}")
        })?;
        table.push(format!("{on_phi}/{}", expect.1));
    }
    Ok(format!("all catalog complexes; bouquets {}", table.join(", ")))
}

fn capacity_ring() -> Outcome {
    let pool = random_complexes(7, 40, 5, 2);
    for pair in pool.chunks(2) {
        let r = capacity_ring_check(&pair[0], &pair[1]).map_err(|e| e.to_string())?;
        check(r.holds, || format!("{r:?} on {:?} and {:?}", pair[0], pair[1]))?;
    }
    let mut squares = 0;
    let small = catalog::standard_complexes().into_iter().map(|(_, g)| g).chain(random_complexes(8, 30, 5, 2));
    for g in small.filter(|g| g.len() <= 12) {
        let b = shannon_lower(&psi(&g).graph, 2).map_err(|e| e.to_string())?;
        check(b.independence == g.f0() * g.f0(), || format!("i(psi^2) = {} on {g:?}", b.independence))?;
        squares += 1;
    }
    Ok(format!("20 random pairs; {squares} squares"))
}

fn connection_laplacian() -> Outcome {
    for g in random_complexes(11, 100, 6, 3) {
        let r = unimodularity_check(&g).map_err(|e| e.to_string())?;
        check(r.holds, || format!("{r:?} on {g:?}"))?;
    }
    let c = |n: &str| catalog::complex(n).unwrap();
    let mut worst: f64 = 0.0;
    for (a, b) in [("interval", "interval"), ("c3_boundary", "interval"), ("figure1", "point")] {
        let r = spectrum_product_check(&c(a), &c(b), 1e-9).map_err(|e| e.to_string())?;
        check(r.holds, || format!("{a} x {b}: {r:?}"))?;
        worst = worst.max(r.max_deviation);
    }
    Ok(format!("100 random complexes; 3 products, max deviation {worst:.1e}"))
}

fn invariants_along(trace: &HomotopyTrace, what: &str) -> Result<(), String> {
    let replay = trace.replay().map_err(|e| format!("{what}: {e}"))?;
    let first = graph_betti(&replay.states[0]).map_err(|e| e.to_string())?;
    for (k, s) in replay.states.iter().enumerate() {
        let b = graph_betti(s).map_err(|e| e.to_string())?;
        check(b == first, || format!("{what}: betti {b:?} at state {k}, started {first:?}"))?;
    }
    check(replay.euler.is_some(), || format!("{what}: euler not tracked"))
}

fn homotopy_invariance() -> Outcome {
    let mut traces = 0;
    for (name, g) in catalog::standard_graphs() {
        let mut t = TraceBuilder::new(g.clone());
        for (i, j) in g.edges().take(3).collect::<Vec<_>>() {
            let e = t.current().fresh_label();
            t.push(Move::EdgeRefine { a: g.label(i), b: g.label(j), e }).map_err(|e| format!("{name}: {e}"))?;
        }
        invariants_along(&t.finish(), &format!("{name} refinements"))?;
        traces += 1;
    }
    for name in ["C_4", "C_5", "K_3", "P_4", "wheel_5", "figure8"] {
        let g = catalog::graph(name).unwrap();
        let b = barycentric_trace(&g).map_err(|e| format!("{name}: {e}"))?;
        invariants_along(&b.trace, &format!("{name} barycentric"))?;
        traces += 1;
    }
    let instances: [(Graph, Vec<Label>, Graph); 3] = [
        (catalog::cycle(4), vec![0], Graph::complete(2)),
        (catalog::path(3), vec![0, 1], catalog::path(3)),
        (catalog::cycle(5), vec![1, 2], catalog::star(3)),
    ];
    for (a, attach, b) in &instances {
        check(is_contractible_subgraph(a, attach), || "attaching set".into())?;
        let t = product_extension_trace(a, attach, b).map_err(|e| format!("product extension: {e}"))?;
        invariants_along(&t, "product extension")?;
        traces += 1;
    }
    Ok(format!("{traces} traces, chi and betti constant; 3 product extensions certified"))
}

fn gauss_bonnet_poincare_hopf() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut graphs = catalog::standard_graphs();
    graphs.extend(catalog::GRAPH_NAMES.iter().filter_map(|n| catalog::graph(n).ok().map(|g| (n.to_string(), g))));
    let mut checked = BTreeMap::new();
    for (name, g) in graphs {
        if checked.contains_key(&name) {
            continue;
        }
        check(gauss_bonnet_check::<Rational>(&g).map_err(|e| e.to_string())?, || format!("{name}: Gauss-Bonnet"))?;
        let mut f: Vec<i64> = (0..g.n() as i64).collect();
        for _ in 0..20 {
            f.shuffle(&mut rng);
            let p = poincare_hopf(&g, &f).map_err(|e| e.to_string())?;
            check(p.holds(), || format!("{name}: Poincare-Hopf sum {} vs {}", p.sum, p.euler))?;
        }
        checked.insert(name, ());
    }
    Ok(format!("{} graphs x 20 functions", checked.len()))
}

fn without_secondary() -> Outcome {
    // this binary links only the core library
    let c6 = catalog::cycle(6);
    let moves = legal_moves(&c6, 3);
    check(!moves.iter().any(|m| matches!(m, Move::Contract { .. })), || "C_6 has a Contract".into())?;
    Ok("core suites need no UI build".into())
}

/// Writes past the test harness capture so the lines show in a plain run.
fn report(line: String) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}").and_then(|_| out.flush());
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("reconstruction", reconstruction),
        ("degree lemma", degree_lemma),
        ("automorphism corollary", automorphisms),
        ("psi to phi traces", psi_to_phi),
        ("Euler gem", euler_gem),
        ("numerics", known_numerics),
        ("capacity certificates", capacity),
        ("capacity ring", capacity_ring),
        ("connection Laplacian", connection_laplacian),
        ("homotopy invariance", homotopy_invariance),
        ("Gauss-Bonnet / Poincare-Hopf", gauss_bonnet_poincare_hopf),
        ("suites without UI", without_secondary),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        let start = Instant::now();
        match run() {
            Ok(detail) => report(format!("PASS {name}: {detail} [{:.1?}]", start.elapsed())),
            Err(why) => {
                report(format!("FAIL {name}: {why} [{:.1?}]", start.elapsed()));
                failed.push(name);
            }
        }
    }
    // the φ side of the automorphism criterion is false; its exact shape is pinned above
    assert_eq!(failed, vec!["automorphism corollary"]);
}
