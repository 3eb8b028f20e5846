use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{GeomError, Point3};

/// Surface area of the bipyramid over a regular `n`-gon inscribed in the
/// equator with apexes at the poles.
pub fn bipyramid_max_area(n: usize) -> Result<f64, GeomError> {
    if n < 3 {
        return Err(GeomError::InvalidArgument(format!("bipyramid needs n >= 3, got {n}")));
    }
    let t = PI / n as f64;
    Ok(2.0 * n as f64 * t.sin() * (1.0 + t.cos().powi(2)).sqrt())
}

/// `(5/4)·sqrt(50 − 6·sqrt 5)`, the area of the pentagonal bipyramid.
pub fn pentagonal_bipyramid_area() -> f64 {
    1.25 * (50.0 - 6.0 * 5f64.sqrt()).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticBounds {
    pub lower: f64,
    pub upper: f64,
}

/// First-order estimates of the largest inscribed surface area with `k`
/// vertices, from the Delone and Dirichlet-Voronoi constants in the plane.
pub fn asymptotic_bounds(k: usize) -> AsymptoticBounds {
    let k = k as f64;
    let s3 = 3f64.sqrt();
    AsymptoticBounds {
        lower: 4.0 * PI * (1.0 - 2.0 * PI / (s3 * k)),
        upper: 4.0 * PI * (1.0 - 10.0 * PI / (9.0 * s3 * k)),
    }
}

/// Best known inscribed surface areas, `(k, value)`.
pub fn known_maxima() -> Vec<(usize, f64)> {
    vec![
        (4, 8.0 / 3f64.sqrt()),
        (5, 1.5 * 15f64.sqrt()),
        (6, 4.0 * 3f64.sqrt()),
        (7, pentagonal_bipyramid_area()),
        (8, 8.0),
        (12, 2.0 * 75f64.sqrt() - 2.0 * 15f64.sqrt()),
    ]
}

pub fn regular_polygon_on_equator(n: usize) -> Vec<Point3> {
    (0..n)
        .map(|i| {
            let phi = 2.0 * PI * i as f64 / n as f64;
            Point3::new(phi.cos(), phi.sin(), 0.0)
        })
        .collect()
}

/// Poles followed by a regular `n`-gon in the equator.
pub fn bipyramid(n: usize) -> Vec<Point3> {
    let mut pts = vec![Point3::new(0.0, 0.0, 1.0), Point3::new(0.0, 0.0, -1.0)];
    pts.extend(regular_polygon_on_equator(n));
    pts
}

/// Regular tetrahedron with one vertex at the north pole.
pub fn tetrahedron() -> Vec<Point3> {
    let s = (8.0f64 / 9.0).sqrt();
    let mut pts: Vec<Point3> = (0..3)
        .map(|i| {
            let phi = 2.0 * PI * i as f64 / 3.0;
            Point3::new(s * phi.cos(), s * phi.sin(), -1.0 / 3.0)
        })
        .collect();
    pts.push(Point3::new(0.0, 0.0, 1.0));
    pts
}

pub fn octahedron() -> Vec<Point3> {
    vec![
        Point3::new(1.0, 0.0, 0.0),
        Point3::new(-1.0, 0.0, 0.0),
        Point3::new(0.0, 1.0, 0.0),
        Point3::new(0.0, -1.0, 0.0),
        Point3::new(0.0, 0.0, 1.0),
        Point3::new(0.0, 0.0, -1.0),
    ]
}

pub fn icosahedron() -> Vec<Point3> {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let mut pts = Vec::with_capacity(12);
    for s1 in [1.0, -1.0] {
        for s2 in [phi, -phi] {
            pts.push(Point3::new(0.0, s1, s2));
            pts.push(Point3::new(s1, s2, 0.0));
            pts.push(Point3::new(s2, 0.0, s1));
        }
    }
    pts.into_iter().map(Point3::normalized).collect()
}

/// Inscribed cube standing on a body diagonal: the poles plus two
/// equilateral triangles at heights ±1/3, twisted by π/3 against each other.
pub fn cube_on_axis() -> Vec<Point3> {
    let (s8, s2, s6) = (8f64.sqrt() / 3.0, 2f64.sqrt() / 3.0, 6f64.sqrt() / 3.0);
    let t = 1.0 / 3.0;
    vec![
        Point3::new(0.0, 0.0, 1.0),
        Point3::new(0.0, 0.0, -1.0),
        Point3::new(s8, 0.0, t),
        Point3::new(-s2, s6, t),
        Point3::new(-s2, -s6, t),
        Point3::new(s2, s6, -t),
        Point3::new(-s8, 0.0, -t),
        Point3::new(s2, -s6, -t),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bipyramid_rejects_small_n() {
        assert!(bipyramid_max_area(2).is_err());
        assert!(bipyramid_max_area(3).is_ok());
    }

    #[test]
    fn bounds_approach_full_sphere() {
        let b = asymptotic_bounds(1_000_000_000);
        assert!((b.lower - 4.0 * PI).abs() < 1e-7);
        assert!((b.upper - 4.0 * PI).abs() < 1e-7);
    }

    #[test]
    fn fixed_point_sets_are_spherical() {
        for set in [tetrahedron(), octahedron(), icosahedron(), cube_on_axis(), bipyramid(7)] {
            assert!(set.iter().all(|p| p.is_spherical()));
        }
    }
}
