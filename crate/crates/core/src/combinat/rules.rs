use serde::{Deserialize, Serialize};

use super::{enumerate_colorings, two_path_census, Color, EdgeColoring, PolytopeGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rule {
    /// A degree-3 vertex with non-monochrome incident edges.
    PropertyL,
    /// An antipodal pair joined by an edge of color X, one endpoint of which
    /// carries a second X edge.
    DefectA,
    /// An antipodal pair joined by an edge of color X while some vertex
    /// carries two X edges.
    LemmaAntipodalChain,
    /// Equal edge lengths are forced and some vertex has degree at least 6,
    /// so its angle defect would be non-positive.
    DefectBAngleDefect,
    /// Alternating coplanar link forces equal lengths, with a vertex of degree at least 6.
    DefectCContradiction,
    /// Equal lengths are forced: the facets would be equilateral, not a
    /// proper isosceles pattern.
    MonochromeFacetOnly,
}

impl std::fmt::Display for Rule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Rule::PropertyL => "PropertyL",
            Rule::DefectA => "DefectA",
            Rule::LemmaAntipodalChain => "Lemma-antipodal-chain",
            Rule::DefectBAngleDefect => "DefectB+AngleDefect",
            Rule::DefectCContradiction => "DefectC-contradiction",
            Rule::MonochromeFacetOnly => "MonochromeFacetOnly",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum EliminationVerdict {
    Eliminated { rule: Rule, witness: Vec<usize> },
    /// Not ruled out combinatorially. Carries the vertex pairs forced to be antipodal.
    Survives { antipodal_pairs: Vec<(usize, usize)> },
}

impl EliminationVerdict {
    pub fn survives(&self) -> bool {
        matches!(self, EliminationVerdict::Survives { .. })
    }

    pub fn rule(&self) -> Option<Rule> {
        match self {
            EliminationVerdict::Eliminated { rule, .. } => Some(*rule),
            EliminationVerdict::Survives { .. } => None,
        }
    }

    fn eliminated(rule: Rule, witness: Vec<usize>) -> Self {
        EliminationVerdict::Eliminated { rule, witness }
    }
}

fn survives(g: &PolytopeGraph, c: &EdgeColoring) -> EliminationVerdict {
    EliminationVerdict::Survives { antipodal_pairs: deduce_antipodal_pairs(g, c) }
}

/// Pairs joined by at least three two-paths with the same ordered color pattern.
pub fn deduce_antipodal_pairs(g: &PolytopeGraph, c: &EdgeColoring) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..g.k() {
        for v in u + 1..g.k() {
            if two_path_census(g, c, u, v).max_identical() >= 3 {
                out.push((u, v));
            }
        }
    }
    out
}

fn degree_three_mixed(g: &PolytopeGraph, c: &EdgeColoring, v: usize) -> bool {
    g.degree(v) == 3 && !c.count_at(g, v, Color::Red).is_multiple_of(3)
}

pub fn check_property_l(g: &PolytopeGraph, c: &EdgeColoring) -> EliminationVerdict {
    match (0..g.k()).find(|&v| degree_three_mixed(g, c, v)) {
        Some(v) => EliminationVerdict::eliminated(Rule::PropertyL, vec![v]),
        None => survives(g, c),
    }
}

fn is_antipodal(g: &PolytopeGraph, c: &EdgeColoring, u: usize, v: usize) -> bool {
    two_path_census(g, c, u, v).max_identical() >= 3
}

/// Another edge of color `x` at `u` or `v`, besides `uv` itself.
fn second_edge_at_pair(
    g: &PolytopeGraph,
    c: &EdgeColoring,
    u: usize,
    v: usize,
    x: Color,
) -> Option<usize> {
    [u, v].into_iter().find_map(|end| {
        g.neighbors(end)
            .iter()
            .copied()
            .find(|&w| w != u && w != v && c.color(g, end, w) == Some(x))
    })
}

fn vertex_with_two(g: &PolytopeGraph, c: &EdgeColoring, x: Color) -> Option<usize> {
    (0..g.k()).find(|&w| c.count_at(g, w, x) >= 2)
}

/// Antipodal pairs that are also edges: a diameter is longer than every
/// other chord, so no second edge may share its color.
pub fn check_defect_a(g: &PolytopeGraph, c: &EdgeColoring) -> EliminationVerdict {
    for (u, v) in deduce_antipodal_pairs(g, c) {
        let Some(x) = c.color(g, u, v) else { continue };
        if let Some(w) = second_edge_at_pair(g, c, u, v, x) {
            return EliminationVerdict::eliminated(Rule::DefectA, vec![u, v, w]);
        }
        if let Some(w) = vertex_with_two(g, c, x) {
            return EliminationVerdict::eliminated(Rule::LemmaAntipodalChain, vec![u, v, w]);
        }
    }
    survives(g, c)
}

fn defect_b_pattern(g: &PolytopeGraph, c: &EdgeColoring, u: usize, v: usize) -> bool {
    let census = two_path_census(g, c, u, v);
    [Color::Red, Color::Blue].into_iter().any(|x| {
        census.monochrome(x).len() >= 3 && !census.monochrome(x.other()).is_empty()
    })
}

fn high_degree_vertex(g: &PolytopeGraph) -> Option<usize> {
    (0..g.k()).find(|&z| g.degree(z) >= 6)
}

fn forced_equal(g: &PolytopeGraph, u: usize, v: usize, with_angle: Rule) -> EliminationVerdict {
    match high_degree_vertex(g) {
        Some(z) => EliminationVerdict::eliminated(with_angle, vec![u, v, z]),
        None => EliminationVerdict::eliminated(Rule::MonochromeFacetOnly, vec![u, v]),
    }
}

/// Three monochrome two-paths of one color and one of the other force `a = b`.
pub fn check_defect_b(g: &PolytopeGraph, c: &EdgeColoring) -> EliminationVerdict {
    for u in 0..g.k() {
        for v in u + 1..g.k() {
            if defect_b_pattern(g, c, u, v) {
                return forced_equal(g, u, v, Rule::DefectBAngleDefect);
            }
        }
    }
    survives(g, c)
}

fn defect_c_pattern(g: &PolytopeGraph, c: &EdgeColoring, u: usize, v: usize) -> bool {
    let census = two_path_census(g, c, u, v);
    if census.red_red.len() != 2 || census.blue_blue.len() != 2 {
        return false;
    }
    let colors: Vec<Color> = g
        .rotation(u)
        .into_iter()
        .filter_map(|w| {
            if census.red_red.contains(&w) {
                Some(Color::Red)
            } else if census.blue_blue.contains(&w) {
                Some(Color::Blue)
            } else {
                None
            }
        })
        .collect();
    colors.windows(2).all(|p| p[0] != p[1])
}

/// Two red and two blue monochrome two-paths whose midpoints alternate
/// around `u` force `a = b`.
pub fn check_defect_c(g: &PolytopeGraph, c: &EdgeColoring) -> EliminationVerdict {
    for u in 0..g.k() {
        for v in u + 1..g.k() {
            if defect_c_pattern(g, c, u, v) {
                return forced_equal(g, u, v, Rule::DefectCContradiction);
            }
        }
    }
    survives(g, c)
}

/// Runs the rules in order: property L, defect A with the antipodal chain,
/// defect B, defect C.
pub fn classify_coloring(g: &PolytopeGraph, c: &EdgeColoring) -> EliminationVerdict {
    for check in [check_property_l, check_defect_a, check_defect_b, check_defect_c] {
        let verdict = check(g, c);
        if !verdict.survives() {
            return verdict;
        }
    }
    survives(g, c)
}

pub fn prune(g: &PolytopeGraph) -> Vec<(EdgeColoring, EliminationVerdict)> {
    enumerate_colorings(g)
        .into_iter()
        .map(|c| {
            let v = classify_coloring(g, &c);
            (c, v)
        })
        .collect()
}

/// Re-checks that the witness of an elimination really instantiates its rule.
pub fn verify_witness(g: &PolytopeGraph, c: &EdgeColoring, verdict: &EliminationVerdict) -> bool {
    let EliminationVerdict::Eliminated { rule, witness } = verdict else {
        return true;
    };
    if witness.iter().any(|&w| w >= g.k()) {
        return false;
    }
    let pair_edge_color = |u: usize, v: usize| {
        if is_antipodal(g, c, u, v) {
            c.color(g, u, v)
        } else {
            None
        }
    };
    match (rule, witness.as_slice()) {
        (Rule::PropertyL, &[v]) => degree_three_mixed(g, c, v),
        (Rule::DefectA, &[u, v, w]) => pair_edge_color(u, v).is_some_and(|x| {
            w != u
                && w != v
                && (c.color(g, u, w) == Some(x) || c.color(g, v, w) == Some(x))
        }),
        (Rule::LemmaAntipodalChain, &[u, v, w]) => {
            pair_edge_color(u, v).is_some_and(|x| c.count_at(g, w, x) >= 2)
        }
        (Rule::DefectBAngleDefect, &[u, v, z]) => defect_b_pattern(g, c, u, v) && g.degree(z) >= 6,
        (Rule::DefectCContradiction, &[u, v, z]) => {
            defect_c_pattern(g, c, u, v) && g.degree(z) >= 6
        }
        (Rule::MonochromeFacetOnly, &[u, v]) => {
            (defect_b_pattern(g, c, u, v) || defect_c_pattern(g, c, u, v))
                && high_degree_vertex(g).is_none()
        }
        _ => false,
    }
}
