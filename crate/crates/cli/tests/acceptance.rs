//! One line per acceptance criterion. Exits nonzero if any criterion fails.

use std::f64::consts::PI;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use equifacet::combinat::{
    automorphisms, builtin_catalog, check_defect_a, classify_coloring, enumerate_colorings,
    orbit_representatives, permute_coloring, prune, BuiltinCatalog, PolytopeGraph, Rule,
};
use equifacet::geom::{
    asymptotic_bounds, bipyramid, bipyramid_max_area, convex_hull, cube_on_axis, heron_area,
    icosahedron, known_maxima, octahedron, pentagonal_bipyramid_area, rotate, tetrahedron,
    triangle_area, Point3,
};
use equifacet::realize::{
    optimize_sphere, realize_class10, realize_class14iii, refute_class12, refute_snub_disphenoid,
    OptimizerConfig,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

struct Check {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Check {
    fn new() -> Self {
        Self { failures: Vec::new(), notes: Vec::new() }
    }

    fn near(&mut self, what: &str, got: f64, want: f64, tol: f64) {
        if (got - want).abs() <= tol {
            self.notes.push(format!("{what}={got:.10}"));
        } else {
            self.failures.push(format!("{what}: got {got:.12}, want {want:.12} ± {tol:e}"));
        }
    }

    fn that(&mut self, what: &str, ok: bool) {
        if ok {
            self.notes.push(what.to_string());
        } else {
            self.failures.push(what.to_string());
        }
    }

    fn within(&mut self, what: &str, took: Duration, limit: Duration) {
        self.that(&format!("{what} {took:.2?} < {limit:?}"), took < limit);
    }

    fn report(self, n: usize, title: &str) -> bool {
        let ok = self.failures.is_empty();
        let detail = if ok { self.notes.join("; ") } else { self.failures.join("; ") };
        println!("{} [{n}] {title}: {detail}", if ok { "PASS" } else { "FAIL" });
        ok
    }
}

fn hull_area(pts: &[Point3]) -> f64 {
    convex_hull(pts).unwrap().surface_area()
}

fn graph(which: BuiltinCatalog, label: &str) -> PolytopeGraph {
    builtin_catalog(which).into_iter().find(|g| g.class_label == label).unwrap()
}

fn survivors(g: &PolytopeGraph) -> usize {
    prune(g).iter().filter(|(_, v)| v.survives()).count()
}

fn closed_forms() -> bool {
    let t = Instant::now();
    let mut c = Check::new();
    let tol = 1e-9;
    c.near("cube", hull_area(&cube_on_axis()), 8.0, tol);
    c.near("pentagonal bipyramid", hull_area(&bipyramid(5)), pentagonal_bipyramid_area(), tol);
    c.near("pentagonal bipyramid value", pentagonal_bipyramid_area(), 7.560546, 1e-6);
    c.near("tetrahedron", hull_area(&tetrahedron()), 8.0 / 3f64.sqrt(), tol);
    c.near("octahedron", hull_area(&octahedron()), 4.0 * 3f64.sqrt(), tol);
    c.near("icosahedron", hull_area(&icosahedron()), 2.0 * 75f64.sqrt() - 2.0 * 15f64.sqrt(), tol);
    c.near("triangular bipyramid", hull_area(&bipyramid(3)), 1.5 * 15f64.sqrt(), tol);
    c.near("bipyramid_max_area(6)", bipyramid_max_area(6).unwrap(), 3.0 * 7f64.sqrt(), tol);
    c.within("runtime", t.elapsed(), Duration::from_secs(1));
    c.report(1, "closed forms")
}

fn realization_equations() -> bool {
    let mut c = Check::new();
    let tol = 1e-10;
    let r10 = realize_class10().unwrap();
    c.near("C10 h", r10.h, 1.0 / 3.0, tol);
    c.near("C10 a", r10.a, (8.0f64 / 3.0).sqrt(), tol);
    c.near("C10 b", r10.b, (4.0f64 / 3.0).sqrt(), tol);
    c.near("C10 area", r10.area, 8.0, tol);
    let r14 = realize_class14iii().unwrap();
    c.near("C14(iii) h", r14.h, 1.0 / 3f64.sqrt(), tol);
    c.near("C14(iii) a", r14.a, 2.0 * 2f64.sqrt() / 3f64.sqrt(), tol);
    c.near("C14(iii) b", r14.b, 1.0, tol);
    c.near("C14(iii) area", r14.area, 4.0 * 2f64.sqrt(), tol);
    let r12 = refute_class12().unwrap();
    c.near("C12 h", r12.h, 1.0 / 3.0, tol);
    c.that("C12 hull facets differ from class facets", !r12.hull_matches_class);
    let s = refute_snub_disphenoid().unwrap();
    c.that(&format!("snub cubic residual {:.1e} <= 1e-10", s.cubic_residual.abs()), s.cubic_residual.abs() <= 1e-10);
    c.that(&format!("snub |r²+t²-(1+s²)| = {:.4} > 0.01", s.difference.abs()), s.difference.abs() > 0.01);
    c.report(2, "realization equations")
}

fn combinatorial_pipeline() -> bool {
    let t = Instant::now();
    let mut c = Check::new();
    for g in builtin_catalog(BuiltinCatalog::K7) {
        let n = survivors(&g);
        let want_survivor = g.class_label == "K7-C5";
        c.that(&format!("{} survivors={n}", g.class_label), (n > 0) == want_survivor);
    }
    let c2 = graph(BuiltinCatalog::K7, "K7-C2");
    let chain: Vec<_> = enumerate_colorings(&c2)
        .into_iter()
        .filter(|col| check_defect_a(&c2, col).rule() == Some(Rule::LemmaAntipodalChain))
        .collect();
    let killed = chain.iter().all(|col| !classify_coloring(&c2, col).survives());
    c.that(&format!("K7-C2 chain-rule colorings={} eliminated", chain.len()), chain.len() == 1 && killed);
    let c14 = graph(BuiltinCatalog::K8, "K8-C14");
    let surv: Vec<_> = prune(&c14).into_iter().filter(|(_, v)| v.survives()).map(|(col, _)| col).collect();
    let orbits = orbit_representatives(&c14, &surv, &automorphisms(&c14)).len();
    c.that(&format!("K8-C14 orbits={orbits}"), orbits == 3);
    let warm = |label: &str| survivors(&graph(BuiltinCatalog::Warmup, label));
    let (k4, k5, k6c1, k6oct) =
        (warm("K4-tetrahedron"), warm("K5-triangular-bipyramid"), warm("K6-C1"), warm("K6-octahedron"));
    let oct = graph(BuiltinCatalog::Warmup, "K6-octahedron");
    let oct_equilateral = prune(&oct).iter().all(|(_, v)| v.rule() == Some(Rule::MonochromeFacetOnly));
    c.that(
        &format!("warm-ups K4={k4} K5={k5} K6-C1={k6c1} K6-oct={k6oct} (octahedron equilateral only)"),
        k4 == 0 && k5 == 1 && k6c1 == 0 && k6oct == 0 && oct_equilateral,
    );
    for g in builtin_catalog(BuiltinCatalog::K8) {
        let _ = prune(&g);
    }
    c.within("runtime", t.elapsed(), Duration::from_secs(10));
    c.report(3, "combinatorial pipeline")
}

fn optimizer() -> bool {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let mut c = Check::new();
    let limit = Duration::from_secs(60);
    pool.install(|| {
        let t = Instant::now();
        let r = optimize_sphere(&OptimizerConfig { k: 4, ..OptimizerConfig::default() }).unwrap();
        c.near("K=4 area", r.area, 8.0 / 3f64.sqrt(), 1e-4);
        c.within("K=4", t.elapsed(), limit);

        let t = Instant::now();
        let r = optimize_sphere(&OptimizerConfig { k: 8, ..OptimizerConfig::default() }).unwrap();
        c.that(&format!("K=8 area={:.6} >= 8.119", r.area), r.area >= 8.119);
        c.within("K=8", t.elapsed(), limit);

        let t = Instant::now();
        let r = optimize_sphere(&OptimizerConfig::congruent(8)).unwrap();
        c.near("K=8 penalized area", r.area, 8.0, 1e-3);
        c.that(&format!("defect={:.2e} < 1e-4", r.congruence_defect), r.congruence_defect < 1e-4);
        c.within("K=8 penalized", t.elapsed(), limit);
    });
    c.report(4, "optimizer (64 restarts, one thread)")
}

fn unit() -> impl Strategy<Value = Point3> {
    (-1.0f64..1.0, 0.0..2.0 * PI).prop_map(|(z, phi)| Point3::on_latitude(z, phi))
}

fn spread(kmax: usize) -> impl Strategy<Value = Vec<Point3>> {
    prop::collection::vec(unit(), 4..=kmax).prop_filter("close points", |p| {
        p.iter().enumerate().all(|(i, a)| p[i + 1..].iter().all(|b| a.dist(*b) > 0.05))
    })
}

fn property_suites() -> bool {
    let mut c = Check::new();
    let cases = 200;
    let runner = || TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    let mut record = |name: &str, res: Result<(), String>| match res {
        Ok(()) => c.notes.push(format!("{name} x{cases}")),
        Err(e) => c.failures.push(format!("{name}: {e}")),
    };

    let res = runner().run(&(spread(13), unit(), 0.0..2.0 * PI), |(pts, axis, ang)| {
        let rot: Vec<Point3> = pts.iter().map(|&p| rotate(p, axis, ang)).collect();
        prop_assert!((hull_area(&pts) - hull_area(&rot)).abs() <= 1e-9);
        Ok(())
    });
    record("rotation invariance", res.map_err(|e| e.to_string()));

    let pt = || (-10.0f64..10.0, -10.0f64..10.0, -10.0f64..10.0).prop_map(|(x, y, z)| Point3::new(x, y, z));
    let res = runner().run(&(pt(), pt(), pt()), |(a, b, d)| {
        let scale = a.dist(b).max(b.dist(d)).max(d.dist(a)).powi(2).max(1.0);
        let diff = (triangle_area(a, b, d) - heron_area(a.dist(b), b.dist(d), d.dist(a))).abs();
        prop_assert!(diff <= 1e-10 * scale);
        Ok(())
    });
    record("Heron vs cross product", res.map_err(|e| e.to_string()));

    let res = runner().run(&spread(13), |pts| {
        let r = convex_hull(&pts).unwrap();
        let (v, e, f) = (pts.len() as i64, r.edges().len() as i64, r.facets.len() as i64);
        prop_assert_eq!(v - e + f, 2);
        prop_assert_eq!(e, 3 * v - 6);
        Ok(())
    });
    record("Euler counts K<=13", res.map_err(|e| e.to_string()));

    let graphs: Vec<(PolytopeGraph, Vec<Vec<usize>>)> =
        [BuiltinCatalog::Warmup, BuiltinCatalog::K7, BuiltinCatalog::K8]
            .into_iter()
            .flat_map(builtin_catalog)
            .map(|g| {
                let a = automorphisms(&g);
                (g, a)
            })
            .collect();
    let idx = || any::<prop::sample::Index>();
    let res = runner().run(&(idx(), idx(), idx()), |(gi, ai, ci)| {
        let (g, auts) = &graphs[gi.index(graphs.len())];
        let cols = enumerate_colorings(g);
        if cols.is_empty() {
            return Ok(());
        }
        let col = cols[ci.index(cols.len())];
        let img = permute_coloring(g, &col, &auts[ai.index(auts.len())]);
        prop_assert_eq!(classify_coloring(g, &col).rule(), classify_coloring(g, &img).rule());
        Ok(())
    });
    record("pruning vs automorphisms", res.map_err(|e| e.to_string()));

    let table = known_maxima();
    let res = runner().run(&idx(), |i| {
        let (k, v) = table[i.index(table.len())];
        let b = asymptotic_bounds(k);
        prop_assert!(b.lower <= v && v <= b.upper, "k={}", k);
        Ok(())
    });
    record("a_K <= known <= b_K", res.map_err(|e| e.to_string()));
    c.report(5, "property suites")
}

fn end_to_end() -> bool {
    let mut c = Check::new();
    for (k, area, winner) in [(7, "7.560546456", "K7-C5"), (8, "8.000000000", "K8-C10")] {
        let o = Command::new(env!("CARGO_BIN_EXE_equifacet"))
            .args(["verify", "--k", &k.to_string()])
            .output()
            .unwrap();
        let out = String::from_utf8_lossy(&o.stdout);
        let line = out.lines().last().unwrap_or_default().to_string();
        let ok = o.status.code() == Some(0) && line.contains(&format!("max area {area} by {winner}"));
        c.that(&format!("verify --k {k} exit={:?} \"{line}\"", o.status.code()), ok);
    }
    c.report(6, "end-to-end verify")
}

fn main() -> ExitCode {
    let results = [
        closed_forms(),
        realization_equations(),
        combinatorial_pipeline(),
        optimizer(),
        property_suites(),
        end_to_end(),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
