use std::collections::BTreeMap;

use equifacet::combinat::{
    automorphisms, builtin_catalog, check_defect_a, deduce_antipodal_pairs, enumerate_colorings,
    find_colored_two_paths, orbit_representatives, prune, BuiltinCatalog, Color, EdgeColoring,
    EliminationVerdict, PolytopeGraph, Rule,
};

fn graph(which: BuiltinCatalog, label: &str) -> PolytopeGraph {
    builtin_catalog(which)
        .into_iter()
        .find(|g| g.class_label == label)
        .unwrap_or_else(|| panic!("missing {label}"))
}

fn coloring_from_red(g: &PolytopeGraph, red: &[(usize, usize)]) -> EdgeColoring {
    let mask = red.iter().fold(0u64, |m, &(u, v)| m | 1 << g.edge_id(u, v).unwrap());
    EdgeColoring::new(mask)
}

fn survivors(g: &PolytopeGraph) -> Vec<EdgeColoring> {
    prune(g).into_iter().filter(|(_, v)| v.survives()).map(|(c, _)| c).collect()
}

fn rule_counts(g: &PolytopeGraph) -> BTreeMap<Option<Rule>, usize> {
    let mut out = BTreeMap::new();
    for (_, v) in prune(g) {
        *out.entry(v.rule()).or_default() += 1;
    }
    out
}

#[test]
fn degree_sequences_match_checksums() {
    let k7 = builtin_catalog(BuiltinCatalog::K7);
    let seqs: Vec<Vec<usize>> = k7.iter().map(|g| g.degree_sequence()).collect();
    assert_eq!(seqs[0], vec![5, 3, 5, 3, 5, 3, 6]);
    assert_eq!(seqs[1], vec![6, 3, 4, 4, 4, 3, 6]);
    assert_eq!(seqs[2], vec![5, 4, 3, 5, 4, 3, 6]);
    assert_eq!(seqs[3], vec![5, 5, 4, 4, 4, 5, 3]);
    let mut bipyramid = seqs[4].clone();
    bipyramid.sort_unstable();
    assert_eq!(bipyramid, vec![4, 4, 4, 4, 4, 5, 5]);
    let c10 = graph(BuiltinCatalog::K8, "K8-C10");
    assert_eq!(c10.degree_sequence(), vec![5, 5, 5, 3, 5, 5, 3, 5]);
}

#[test]
fn warmup_tetrahedron_forces_regular() {
    let g = graph(BuiltinCatalog::Warmup, "K4-tetrahedron");
    let counts = rule_counts(&g);
    assert_eq!(counts, BTreeMap::from([(Some(Rule::PropertyL), 3)]));
}

#[test]
fn warmup_triangular_bipyramid_keeps_blue_apexes() {
    let g = graph(BuiltinCatalog::Warmup, "K5-triangular-bipyramid");
    let s = survivors(&g);
    assert_eq!(s.len(), 1);
    // apexes are the degree-3 vertices; all their edges are blue
    for v in (0..5).filter(|&v| g.degree(v) == 3) {
        assert_eq!(s[0].count_at(&g, v, Color::Red), 0);
    }
    assert_eq!(s[0].red_edges(&g), vec![(0, 1), (0, 2), (1, 2)]);
}

#[test]
fn warmup_six_vertices() {
    let c1 = graph(BuiltinCatalog::Warmup, "K6-C1");
    assert!(survivors(&c1).is_empty());
    let oct = graph(BuiltinCatalog::Warmup, "K6-octahedron");
    let counts = rule_counts(&oct);
    // every isosceles pattern collapses to equal lengths: the regular octahedron
    assert_eq!(counts, BTreeMap::from([(Some(Rule::MonochromeFacetOnly), 9)]));
}

#[test]
fn octahedron_red_four_cycle() {
    let oct = graph(BuiltinCatalog::Warmup, "K6-octahedron");
    let ring = coloring_from_red(&oct, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
    assert!(enumerate_colorings(&oct).contains(&ring));
    assert_eq!(deduce_antipodal_pairs(&oct, &ring), vec![(4, 5)]);
    assert_eq!(find_colored_two_paths(&oct, &ring, 0, 2, Color::Red), vec![1, 3]);
    assert_eq!(find_colored_two_paths(&oct, &ring, 4, 5, Color::Blue), vec![0, 1, 2, 3]);
}

#[test]
fn octahedron_two_red_paths() {
    let oct = graph(BuiltinCatalog::Warmup, "K6-octahedron");
    let found = enumerate_colorings(&oct).into_iter().find(|c| {
        let red = c.red_edges(&oct);
        red.len() == 4 && (0..6).filter(|&v| c.count_at(&oct, v, Color::Red) == 2).count() == 2
    });
    let c = found.expect("a coloring made of two red two-paths");
    assert!(!deduce_antipodal_pairs(&oct, &c).is_empty());
    assert!(matches!(
        equifacet::combinat::classify_coloring(&oct, &c),
        EliminationVerdict::Eliminated { rule: Rule::MonochromeFacetOnly, .. }
    ));
}

#[test]
fn seven_vertices_leave_only_the_pentagonal_bipyramid() {
    for g in builtin_catalog(BuiltinCatalog::K7) {
        let s = survivors(&g);
        if g.class_label == "K7-C5" {
            assert_eq!(s.len(), 1);
            // the two apexes carry only blue edges
            for v in (0..7).filter(|&v| g.degree(v) == 5) {
                assert_eq!(s[0].count_at(&g, v, Color::Red), 0);
            }
        } else {
            assert!(s.is_empty(), "{} has survivors", g.class_label);
        }
    }
}

#[test]
fn seven_vertex_class_two_near_survivor_dies_by_chain() {
    let g = graph(BuiltinCatalog::K7, "K7-C2");
    let chain: Vec<EdgeColoring> = enumerate_colorings(&g)
        .into_iter()
        .filter(|c| check_defect_a(&g, c).rule() == Some(Rule::LemmaAntipodalChain))
        .collect();
    // red path through the five rim vertices plus the edge joining the two degree-6 vertices
    let drawn = coloring_from_red(&g, &[(1, 2), (2, 3), (3, 4), (4, 5), (0, 6)]);
    assert_eq!(chain, vec![drawn]);
    assert!(deduce_antipodal_pairs(&g, &drawn).contains(&(0, 6)));
    assert!(!survivors(&g).contains(&drawn));
}

#[test]
fn seven_vertex_defect_a_classes() {
    for label in ["K7-C1", "K7-C3", "K7-C4"] {
        let g = graph(BuiltinCatalog::K7, label);
        for c in enumerate_colorings(&g) {
            let rule = check_defect_a(&g, &c).rule();
            assert!(
                matches!(rule, Some(Rule::DefectA | Rule::LemmaAntipodalChain)),
                "{label} mask {}",
                c.mask
            );
        }
    }
}

#[test]
fn eight_vertex_survivors() {
    let expected: BTreeMap<&str, (usize, usize)> = BTreeMap::from([
        ("K8-C1", (1, 1)),
        ("K8-C8", (1, 1)),
        ("K8-C10", (1, 1)),
        ("K8-C12", (1, 1)),
        ("K8-C13", (3, 2)),
        ("K8-C14", (4, 3)),
    ]);
    for g in builtin_catalog(BuiltinCatalog::K8) {
        let s = survivors(&g);
        let orbits = orbit_representatives(&g, &s, &automorphisms(&g)).len();
        let want = expected.get(g.class_label.as_str()).copied().unwrap_or((0, 0));
        assert_eq!((s.len(), orbits), want, "{}", g.class_label);
    }
}

#[test]
fn class_ten_drawn_coloring_survives() {
    let g = graph(BuiltinCatalog::K8, "K8-C10");
    let c = coloring_from_red(&g, &[(0, 2), (0, 4), (1, 5), (1, 7), (2, 4), (5, 7)]);
    assert_eq!(survivors(&g), vec![c]);
}

#[test]
fn class_eight_has_two_antipodal_pairs() {
    let g = graph(BuiltinCatalog::K8, "K8-C8");
    let c = coloring_from_red(&g, &[(0, 6), (1, 5), (2, 4), (0, 2), (0, 4), (4, 6)]);
    assert_eq!(survivors(&g), vec![c]);
    // E with H, and D with A
    assert_eq!(deduce_antipodal_pairs(&g, &c), vec![(0, 5), (1, 4)]);
}

#[test]
fn class_fourteen_survivors_and_group() {
    let g = graph(BuiltinCatalog::K8, "K8-C14");
    assert_eq!(automorphisms(&g).len(), 8);
    let s = survivors(&g);
    for red in [
        [(0, 3), (1, 2), (1, 7), (3, 5), (4, 7), (5, 6)],
        [(0, 1), (0, 4), (2, 3), (2, 6), (4, 5), (6, 7)],
        [(0, 2), (0, 4), (1, 7), (2, 6), (3, 5), (4, 6)],
    ] {
        assert!(s.contains(&coloring_from_red(&g, &red)));
    }
    let counts = rule_counts(&g);
    let forced = counts.get(&Some(Rule::MonochromeFacetOnly)).copied().unwrap_or(0);
    assert!(forced > 0);
}

#[test]
fn class_one_three_blue_paths_match_brute_force() {
    let g = graph(BuiltinCatalog::K8, "K8-C1");
    let mut seen = 0;
    for c in enumerate_colorings(&g) {
        for u in 0..8 {
            for v in u + 1..8 {
                let brute: Vec<usize> = (0..8)
                    .filter(|&w| {
                        w != u
                            && w != v
                            && c.color(&g, u, w) == Some(Color::Blue)
                            && c.color(&g, w, v) == Some(Color::Blue)
                    })
                    .collect();
                let found = find_colored_two_paths(&g, &c, u, v, Color::Blue);
                assert_eq!(found, brute);
                if found.len() == 3 {
                    seen += 1;
                }
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn adjacent_without_common_neighbor_has_no_paths() {
    let g = graph(BuiltinCatalog::K8, "K8-C10");
    let c = enumerate_colorings(&g)[0];
    for &(u, v) in g.edges() {
        if g.common_neighbors(u, v).is_empty() {
            assert!(find_colored_two_paths(&g, &c, u, v, Color::Red).is_empty());
        }
    }
}
