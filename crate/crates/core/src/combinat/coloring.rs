use serde::{Deserialize, Serialize};

use super::PolytopeGraph;

/// Red marks the base of an isosceles facet (length `a`), blue its legs (length `b`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

/// Red/blue assignment to the edges of a graph, bit `i` set iff edge `i` is red.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeColoring {
    pub mask: u64,
}

impl EdgeColoring {
    pub fn new(mask: u64) -> Self {
        Self { mask }
    }

    pub fn edge_color(&self, edge: usize) -> Color {
        if self.mask >> edge & 1 == 1 {
            Color::Red
        } else {
            Color::Blue
        }
    }

    /// Color of edge `uv`, `None` if the vertices are not adjacent.
    pub fn color(&self, g: &PolytopeGraph, u: usize, v: usize) -> Option<Color> {
        g.edge_id(u, v).map(|e| self.edge_color(e))
    }

    pub fn red_edges(&self, g: &PolytopeGraph) -> Vec<(usize, usize)> {
        g.edges()
            .iter()
            .enumerate()
            .filter(|(i, _)| self.mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect()
    }

    /// Every facet has exactly one red and two blue edges.
    pub fn is_facet_isosceles(&self, g: &PolytopeGraph) -> bool {
        g.facet_edges()
            .iter()
            .all(|f| f.iter().filter(|&&e| self.mask >> e & 1 == 1).count() == 1)
    }

    pub fn count_at(&self, g: &PolytopeGraph, v: usize, color: Color) -> usize {
        g.neighbors(v)
            .iter()
            .filter(|&&w| self.color(g, v, w) == Some(color))
            .count()
    }
}

/// All facet-isosceles colorings in ascending mask order.
pub fn enumerate_colorings(g: &PolytopeGraph) -> Vec<EdgeColoring> {
    let facet_edges = g.facet_edges();
    let m = g.edges().len();
    // Facets become decidable once their largest edge id is assigned.
    let mut closing: Vec<Vec<[usize; 3]>> = vec![Vec::new(); m];
    for f in &facet_edges {
        closing[*f.iter().max().unwrap()].push(*f);
    }
    let mut touching: Vec<Vec<[usize; 3]>> = vec![Vec::new(); m];
    for f in &facet_edges {
        for &e in f {
            touching[e].push(*f);
        }
    }
    let mut out = Vec::new();
    extend(0, 0, m, &closing, &touching, &mut out);
    out.sort_unstable();
    out
}

fn extend(
    edge: usize,
    mask: u64,
    m: usize,
    closing: &[Vec<[usize; 3]>],
    touching: &[Vec<[usize; 3]>],
    out: &mut Vec<EdgeColoring>,
) {
    if edge == m {
        out.push(EdgeColoring::new(mask));
        return;
    }
    let reds = |mask: u64, f: &[usize; 3]| f.iter().filter(|&&e| mask >> e & 1 == 1).count();
    for red in [false, true] {
        let next = if red { mask | 1 << edge } else { mask };
        if red && touching[edge].iter().any(|f| reds(next, f) > 1) {
            continue;
        }
        if closing[edge].iter().any(|f| reds(next, f) != 1) {
            continue;
        }
        extend(edge + 1, next, m, closing, touching, out);
    }
}

/// Midpoints `w` of the paths `u–w–v` whose two edges both have `color`.
pub fn find_colored_two_paths(
    g: &PolytopeGraph,
    c: &EdgeColoring,
    u: usize,
    v: usize,
    color: Color,
) -> Vec<usize> {
    g.common_neighbors(u, v)
        .into_iter()
        .filter(|&w| c.color(g, u, w) == Some(color) && c.color(g, w, v) == Some(color))
        .collect()
}

/// Two-paths between a pair of vertices, bucketed by the ordered colors of
/// their first and second edge.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TwoPathCensus {
    pub red_red: Vec<usize>,
    pub red_blue: Vec<usize>,
    pub blue_red: Vec<usize>,
    pub blue_blue: Vec<usize>,
}

impl TwoPathCensus {
    pub fn buckets(&self) -> [&Vec<usize>; 4] {
        [&self.red_red, &self.red_blue, &self.blue_red, &self.blue_blue]
    }

    /// Largest number of identically colored two-paths.
    pub fn max_identical(&self) -> usize {
        self.buckets().iter().map(|b| b.len()).max().unwrap()
    }

    pub fn monochrome(&self, color: Color) -> &Vec<usize> {
        match color {
            Color::Red => &self.red_red,
            Color::Blue => &self.blue_blue,
        }
    }
}

pub fn two_path_census(g: &PolytopeGraph, c: &EdgeColoring, u: usize, v: usize) -> TwoPathCensus {
    let mut census = TwoPathCensus::default();
    for w in g.common_neighbors(u, v) {
        let first = c.color(g, u, w).unwrap();
        let second = c.color(g, w, v).unwrap();
        let bucket = match (first, second) {
            (Color::Red, Color::Red) => &mut census.red_red,
            (Color::Red, Color::Blue) => &mut census.red_blue,
            (Color::Blue, Color::Red) => &mut census.blue_red,
            (Color::Blue, Color::Blue) => &mut census.blue_blue,
        };
        bucket.push(w);
    }
    census
}
