use serde::{Deserialize, Serialize};

use super::{Point3, Realization, EPS_SHAPE};

/// Area of triangle `abc` from the cross product. Collinear input gives 0.
pub fn triangle_area(a: Point3, b: Point3, c: Point3) -> f64 {
    0.5 * (b - a).cross(c - a).norm()
}

/// Area from side lengths, using the numerically stable ordering of Heron's formula.
pub fn heron_area(x: f64, y: f64, z: f64) -> f64 {
    let mut s = [x, y, z];
    s.sort_by(|p, q| q.total_cmp(p));
    let [a, b, c] = s;
    let prod = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
    0.25 * prod.max(0.0).sqrt()
}

pub fn surface_area(r: &Realization) -> f64 {
    r.facets
        .iter()
        .map(|f| triangle_area(r.points[f[0]], r.points[f[1]], r.points[f[2]]))
        .sum()
}

/// Edge lengths of one facet, sorted ascending.
pub fn facet_edge_lengths(r: &Realization, facet: [usize; 3]) -> [f64; 3] {
    let p = |i: usize| r.points[facet[i]];
    let mut l = [p(0).dist(p(1)), p(1).dist(p(2)), p(2).dist(p(0))];
    l.sort_by(f64::total_cmp);
    l
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ShapeKind {
    Equilateral,
    Isosceles { leg: f64, base: f64 },
    Scalene,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FacetShape {
    pub kind: ShapeKind,
    pub lengths: [f64; 3],
}

impl FacetShape {
    pub fn from_lengths(lengths: [f64; 3]) -> Self {
        let mut l = lengths;
        l.sort_by(f64::total_cmp);
        let low = l[1] - l[0] <= EPS_SHAPE;
        let high = l[2] - l[1] <= EPS_SHAPE;
        let kind = match (low, high) {
            (true, true) => ShapeKind::Equilateral,
            (true, false) => ShapeKind::Isosceles { leg: l[0], base: l[2] },
            (false, true) => ShapeKind::Isosceles { leg: l[2], base: l[0] },
            (false, false) => ShapeKind::Scalene,
        };
        Self { kind, lengths: l }
    }

    pub fn is_isosceles_or_equilateral(&self) -> bool {
        !matches!(self.kind, ShapeKind::Scalene)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FacetClassification {
    pub shapes: Vec<FacetShape>,
    /// All sorted edge triples agree within the shape tolerance.
    pub congruent: bool,
    /// Largest spread of any sorted edge-length slot across facets.
    pub defect: f64,
    /// Congruent isosceles or equilateral facets with every vertex on the unit sphere.
    pub equifacetal: bool,
}

pub fn classify_facets(r: &Realization) -> FacetClassification {
    let shapes: Vec<FacetShape> = r
        .facets
        .iter()
        .map(|&f| FacetShape::from_lengths(facet_edge_lengths(r, f)))
        .collect();
    let defect = congruence_defect(r);
    let congruent = defect <= EPS_SHAPE;
    let equifacetal = congruent
        && shapes.iter().all(FacetShape::is_isosceles_or_equilateral)
        && r.all_spherical();
    FacetClassification { shapes, congruent, defect, equifacetal }
}

fn triples(r: &Realization) -> Vec<[f64; 3]> {
    r.facets.iter().map(|&f| facet_edge_lengths(r, f)).collect()
}

/// Max over the three sorted slots of (largest − smallest) across facets.
/// Zero exactly when all facets are congruent.
pub fn congruence_defect(r: &Realization) -> f64 {
    let t = triples(r);
    (0..3)
        .map(|i| {
            let (lo, hi) = t.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| {
                (lo.min(x[i]), hi.max(x[i]))
            });
            if t.is_empty() {
                0.0
            } else {
                hi - lo
            }
        })
        .fold(0.0, f64::max)
}

/// Sum over the three sorted slots of the population variance across facets.
pub fn edge_triple_variance(r: &Realization) -> f64 {
    let t = triples(r);
    if t.is_empty() {
        return 0.0;
    }
    let n = t.len() as f64;
    (0..3)
        .map(|i| {
            let mean = t.iter().map(|x| x[i]).sum::<f64>() / n;
            t.iter().map(|x| (x[i] - mean).powi(2)).sum::<f64>() / n
        })
        .sum()
}
