//! Small-scale 3D geometry: points, convex hulls of a few dozen points,
//! facet measurements and the closed forms for known maximizers.

mod closed_form;
mod hull;
mod measure;

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

pub use closed_form::{
    asymptotic_bounds, bipyramid, bipyramid_max_area, cube_on_axis, icosahedron, known_maxima,
    octahedron, pentagonal_bipyramid_area, regular_polygon_on_equator, tetrahedron,
    AsymptoticBounds,
};
pub use hull::{convex_hull, planar_faces};
pub use measure::{
    classify_facets, congruence_defect, edge_triple_variance, facet_edge_lengths, heron_area,
    surface_area, triangle_area, FacetClassification, FacetShape, ShapeKind,
};

/// Input validation tolerance for points tagged as spherical.
pub const EPS_SPHERE: f64 = 1e-12;
/// Facet shape classification tolerance.
pub const EPS_SHAPE: f64 = 1e-8;
/// Distinctness / coplanarity tolerance.
pub const EPS_DIST: f64 = 1e-9;

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("convex hull needs at least 4 points, got {0}")]
    TooFewPoints(usize),
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    pub const ORIGIN: Point3 = Point3 { x: 0.0, y: 0.0, z: 0.0 };

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    /// Point on the unit sphere with polar angle `theta` (from +z) and azimuth `phi`.
    pub fn spherical(theta: f64, phi: f64) -> Self {
        Self::new(theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos())
    }

    /// Point on the latitude circle `z = h` of the unit sphere at azimuth `phi`.
    pub fn on_latitude(h: f64, phi: f64) -> Self {
        let r = (1.0 - h * h).max(0.0).sqrt();
        Self::new(r * phi.cos(), r * phi.sin(), h)
    }

    pub fn dot(self, o: Point3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Point3) -> Point3 {
        Point3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn dist(self, o: Point3) -> f64 {
        (self - o).norm()
    }

    /// Unit vector in the same direction. Zero stays zero.
    pub fn normalized(self) -> Point3 {
        let n = self.norm();
        if n == 0.0 {
            self
        } else {
            self * (1.0 / n)
        }
    }

    pub fn is_spherical(self) -> bool {
        (self.norm_squared() - 1.0).abs() <= EPS_SPHERE
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

impl From<[f64; 3]> for Point3 {
    fn from(a: [f64; 3]) -> Self {
        Point3::new(a[0], a[1], a[2])
    }
}

impl Add for Point3 {
    type Output = Point3;
    fn add(self, o: Point3) -> Point3 {
        Point3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Point3 {
    type Output = Point3;
    fn sub(self, o: Point3) -> Point3 {
        Point3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Point3 {
    type Output = Point3;
    fn neg(self) -> Point3 {
        Point3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Point3 {
    type Output = Point3;
    fn mul(self, s: f64) -> Point3 {
        Point3::new(self.x * s, self.y * s, self.z * s)
    }
}

pub fn centroid(points: &[Point3]) -> Point3 {
    let sum = points.iter().fold(Point3::ORIGIN, |acc, &p| acc + p);
    sum * (1.0 / points.len().max(1) as f64)
}

/// A labeled point set together with a triangulation of its boundary.
///
/// Facets are vertex-index triples oriented so that the right-hand normal
/// points away from the centroid of the vertices.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Realization {
    pub points: Vec<Point3>,
    pub facets: Vec<[usize; 3]>,
}

impl Realization {
    pub fn new(points: Vec<Point3>, facets: Vec<[usize; 3]>) -> Self {
        Self { points, facets }
    }

    /// Same as [`Realization::new`], with each facet flipped if needed so its
    /// normal points away from the centroid.
    pub fn oriented(points: Vec<Point3>, facets: &[[usize; 3]]) -> Self {
        let c = centroid(&points);
        let facets = facets
            .iter()
            .map(|&f| {
                let (a, b, d) = (points[f[0]], points[f[1]], points[f[2]]);
                if (b - a).cross(d - a).dot(a + b + d - c * 3.0) < 0.0 {
                    [f[0], f[2], f[1]]
                } else {
                    f
                }
            })
            .collect();
        Self { points, facets }
    }

    pub fn k(&self) -> usize {
        self.points.len()
    }

    pub fn surface_area(&self) -> f64 {
        surface_area(self)
    }

    pub fn all_spherical(&self) -> bool {
        self.points.iter().all(|p| p.is_spherical())
    }

    /// Smallest pairwise distance, `f64::INFINITY` for fewer than two points.
    pub fn min_pairwise_distance(&self) -> f64 {
        let mut best = f64::INFINITY;
        for (i, p) in self.points.iter().enumerate() {
            for q in &self.points[i + 1..] {
                best = best.min(p.dist(*q));
            }
        }
        best
    }

    pub fn points_distinct(&self) -> bool {
        self.min_pairwise_distance() > EPS_DIST
    }

    /// Sorted, deduplicated undirected edge list of the facet triangulation.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = self
            .facets
            .iter()
            .flat_map(|f| [(f[0], f[1]), (f[1], f[2]), (f[2], f[0])])
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        edges
    }

    /// Facets as sorted index triples, sorted. Useful for comparing against
    /// a combinatorial facet list irrespective of orientation.
    pub fn canonical_facets(&self) -> Vec<[usize; 3]> {
        canonical_facets(&self.facets)
    }

    /// Largest signed distance of any vertex above any facet plane (positive
    /// means some vertex lies outside a facet, i.e. the triangulation is not
    /// the boundary of a convex body). Degenerate facets yield `INFINITY`.
    pub fn max_support_violation(&self) -> f64 {
        let mut worst = f64::NEG_INFINITY;
        for f in &self.facets {
            let (a, b, c) = (self.points[f[0]], self.points[f[1]], self.points[f[2]]);
            let n = (b - a).cross(c - a);
            let len = n.norm();
            if len < EPS_DIST {
                return f64::INFINITY;
            }
            let n = n * (1.0 / len);
            for (i, p) in self.points.iter().enumerate() {
                if f.contains(&i) {
                    continue;
                }
                worst = worst.max(n.dot(*p - a));
            }
        }
        worst
    }

    /// Every facet plane weakly supports the point set: the facets bound a
    /// convex body, with coplanar neighbouring facets allowed.
    pub fn is_convex_triangulation(&self) -> bool {
        self.max_support_violation() <= EPS_DIST
    }

    /// Every facet plane strictly supports the point set: no other vertex lies
    /// on any facet plane, so the triangulation is the genuine face lattice of
    /// a simplicial polytope.
    pub fn is_strictly_convex_triangulation(&self) -> bool {
        self.max_support_violation() < -EPS_DIST
    }

    /// Pairs of facets sharing an edge whose planes coincide.
    pub fn coplanar_adjacent_facets(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.facets.len() {
            for j in i + 1..self.facets.len() {
                let (fi, fj) = (self.facets[i], self.facets[j]);
                let shared = fi.iter().filter(|v| fj.contains(v)).count();
                if shared != 2 {
                    continue;
                }
                let apex = *fj.iter().find(|v| !fi.contains(v)).unwrap();
                let (a, b, c) = (self.points[fi[0]], self.points[fi[1]], self.points[fi[2]]);
                let n = (b - a).cross(c - a).normalized();
                if n.dot(self.points[apex] - a).abs() <= EPS_DIST {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Sorted multiset of edge lengths.
    pub fn sorted_edge_lengths(&self) -> Vec<f64> {
        let mut lens: Vec<f64> = self
            .edges()
            .into_iter()
            .map(|(a, b)| self.points[a].dist(self.points[b]))
            .collect();
        lens.sort_by(f64::total_cmp);
        lens
    }
}

pub fn canonical_facets(facets: &[[usize; 3]]) -> Vec<[usize; 3]> {
    let mut out: Vec<[usize; 3]> = facets
        .iter()
        .map(|f| {
            let mut s = *f;
            s.sort_unstable();
            s
        })
        .collect();
    out.sort_unstable();
    out
}

/// Rotation about a unit axis by `angle` (Rodrigues).
pub fn rotate(p: Point3, axis: Point3, angle: f64) -> Point3 {
    let k = axis.normalized();
    let (s, c) = angle.sin_cos();
    p * c + k.cross(p) * s + k * (k.dot(p) * (1.0 - c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_preserves_norm_and_axis() {
        let axis = Point3::new(1.0, 2.0, -0.5);
        let p = Point3::new(0.3, -0.7, 0.2);
        let q = rotate(p, axis, 1.234);
        assert!((p.norm() - q.norm()).abs() < 1e-15);
        let fixed = rotate(axis, axis, 0.9);
        assert!(fixed.dist(axis) < 1e-14);
    }

    #[test]
    fn latitude_points_are_spherical() {
        for i in 0..20 {
            let h = -0.95 + 0.1 * i as f64;
            assert!(Point3::on_latitude(h, 0.37 * i as f64).is_spherical());
        }
    }

    #[test]
    fn square_pyramid_has_coplanar_base_pair() {
        let pts = vec![
            Point3::new(1.0, 0.0, 0.0),
            Point3::new(0.0, 1.0, 0.0),
            Point3::new(-1.0, 0.0, 0.0),
            Point3::new(0.0, -1.0, 0.0),
            Point3::new(0.0, 0.0, 1.0),
        ];
        let r = convex_hull(&pts).unwrap();
        assert_eq!(r.coplanar_adjacent_facets().len(), 1);
        assert!(r.is_convex_triangulation());
        assert!(!r.is_strictly_convex_triangulation());
    }
}
