use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{find_root, Polynomial, RealizeError};
use crate::combinat::{builtin_catalog, BuiltinCatalog, PolytopeGraph};
use crate::geom::{convex_hull, planar_faces, Point3, Realization, EPS_DIST};

/// A solved parametric family: latitude `h`, red length `a`, blue length `b`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassRealization {
    pub class_label: String,
    pub h: f64,
    pub a: f64,
    pub b: f64,
    pub realization: Realization,
    pub area: f64,
}

impl ClassRealization {
    fn new(class_label: &str, h: f64, a: f64, b: f64, points: Vec<Point3>, g: &PolytopeGraph) -> Self {
        let realization = Realization::oriented(points, g.facets());
        let area = realization.surface_area();
        Self { class_label: class_label.to_string(), h, a, b, realization, area }
    }
}

pub(crate) fn catalog_graph(which: BuiltinCatalog, label: &str) -> PolytopeGraph {
    builtin_catalog(which)
        .into_iter()
        .find(|g| g.class_label == label)
        .expect("class present in the shipped catalog")
}

fn coplanar(p: [Point3; 4]) -> bool {
    let n = (p[1] - p[0]).cross(p[2] - p[0]).normalized();
    n.dot(p[3] - p[0]).abs() <= EPS_DIST
}

/// `B = e₃`, `G = −e₃`, triangle `E, C, A` at height `h` and triangle
/// `D, H, F` at `−h`, rotated by π/3. Catalog order `E D C B A H G F`.
pub fn class10_points(h: f64) -> Vec<Point3> {
    let deg = |d: f64| d * PI / 180.0;
    vec![
        Point3::on_latitude(h, deg(0.0)),
        Point3::on_latitude(-h, deg(60.0)),
        Point3::on_latitude(h, deg(120.0)),
        Point3::new(0.0, 0.0, 1.0),
        Point3::on_latitude(h, deg(240.0)),
        Point3::on_latitude(-h, deg(180.0)),
        Point3::new(0.0, 0.0, -1.0),
        Point3::on_latitude(-h, deg(300.0)),
    ]
}

/// `2(1 − h) = 1 + 3h²`, i.e. `3h² + 2h − 1 = (1 + h)(3h − 1)`.
pub fn class10_equation() -> Polynomial {
    Polynomial::new(vec![-1.0, 2.0, 3.0])
}

pub fn realize_class10() -> Result<ClassRealization, RealizeError> {
    let h = find_root(&class10_equation(), 0.0, 1.0, 1e-14)?;
    let a = (3.0 * (1.0 - h * h)).sqrt();
    let b = (2.0 * (1.0 - h)).sqrt();
    let g = catalog_graph(BuiltinCatalog::K8, "K8-C10");
    Ok(ClassRealization::new("K8-C10", h, a, b, class10_points(h), &g))
}

/// Labelled points `p₁ … p₈` of the third Class 14 coloring at latitude `h`.
pub fn class14iii_labelled(h: f64) -> [Point3; 8] {
    let r = (1.0 - h * h).sqrt();
    let s = (1.0 + 3.0 * h * h).sqrt();
    let (y, z) = (2.0 * h / s, ((1.0 - h * h) / (1.0 + 3.0 * h * h)).sqrt());
    [
        Point3::new(0.0, y, -z),
        Point3::new(0.0, r, h),
        Point3::new(0.0, -r, h),
        Point3::new(0.0, -y, -z),
        Point3::new(y, 0.0, z),
        Point3::new(r, 0.0, -h),
        Point3::new(-r, 0.0, -h),
        Point3::new(-y, 0.0, z),
    ]
}

/// Catalog vertex `i` of Class 14 sits at `p[CLASS14III_LABELS[i]]` (0-based).
const CLASS14III_LABELS: [usize; 8] = [0, 1, 4, 5, 3, 2, 7, 6];

pub fn class14iii_points(h: f64) -> Vec<Point3> {
    let p = class14iii_labelled(h);
    CLASS14III_LABELS.iter().map(|&j| p[j]).collect()
}

/// `(1 − h²)(1 + 3h²) − (1 + h²) = h² − 3h⁴`.
pub fn class14iii_equation() -> Polynomial {
    Polynomial::new(vec![0.0, 0.0, 1.0, 0.0, -3.0])
}

/// Solves for `h* = 1/√3`, then measures `a = 2R(h*)` and `b = |p₁p₂|` on
/// the built points.
pub fn realize_class14iii() -> Result<ClassRealization, RealizeError> {
    let h = find_root(&class14iii_equation(), 0.3, 1.0, 1e-14)?;
    let p = class14iii_labelled(h);
    let a = 2.0 * (1.0 - h * h).sqrt();
    let b = p[0].dist(p[1]);
    let g = catalog_graph(BuiltinCatalog::K8, "K8-C14");
    Ok(ClassRealization::new("K8-C14(iii)", h, a, b, class14iii_points(h), &g))
}

/// Diameters `AC` and `EG`, `A, C, D, F` on the equator with `E` at the pole.
pub fn class14i_points() -> Vec<Point3> {
    let c = 3f64.sqrt() / 2.0;
    vec![
        Point3::new(0.0, 0.0, 1.0),
        Point3::new(-0.5, c, 0.0),
        Point3::new(-1.0, 0.0, 0.0),
        Point3::new(0.0, -c, 0.5),
        Point3::new(1.0, 0.0, 0.0),
        Point3::new(0.0, -c, -0.5),
        Point3::new(0.0, 0.0, -1.0),
        Point3::new(0.5, c, 0.0),
    ]
}

pub fn realize_class14i() -> ClassRealization {
    let g = catalog_graph(BuiltinCatalog::K8, "K8-C14");
    ClassRealization::new("K8-C14(i)", 0.0, 1.0, 2f64.sqrt(), class14i_points(), &g)
}

/// Bipyramid over a regular ring in the equator, apexes at the poles, with
/// vertex labels taken from `g`. Fails if `g` is not a bipyramid graph.
pub fn realize_bipyramid(g: &PolytopeGraph) -> Result<ClassRealization, RealizeError> {
    let k = g.k();
    let n = k - 2;
    let apexes: Vec<usize> = (0..k).filter(|&v| g.degree(v) == n).collect();
    let pair = apexes
        .iter()
        .flat_map(|&u| apexes.iter().map(move |&v| (u, v)))
        .find(|&(u, v)| u < v && !g.adjacent(u, v));
    let Some((top, bottom)) = pair else {
        return Err(RealizeError::NotABipyramid(g.class_label.clone()));
    };
    let ring = g.rotation(top);
    if ring.len() != n || ring.contains(&bottom) {
        return Err(RealizeError::NotABipyramid(g.class_label.clone()));
    }
    let mut points = vec![Point3::ORIGIN; k];
    points[top] = Point3::new(0.0, 0.0, 1.0);
    points[bottom] = Point3::new(0.0, 0.0, -1.0);
    for (i, &v) in ring.iter().enumerate() {
        points[v] = Point3::on_latitude(0.0, 2.0 * PI * i as f64 / n as f64);
    }
    let a = 2.0 * (PI / n as f64).sin();
    Ok(ClassRealization::new(&g.class_label, 0.0, a, 2f64.sqrt(), points, g))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Class12Refutation {
    pub h: f64,
    pub a: f64,
    pub b: f64,
    pub a2_plus_b2: f64,
    /// The second root of the quadratic, and whether it lies in `(−1, 1)`.
    pub other_root: f64,
    pub other_root_feasible: bool,
    pub hull_facets: Vec<[usize; 3]>,
    pub class_facets: Vec<[usize; 3]>,
    pub hull_matches_class: bool,
    /// Every class facet plane supports the points, allowing coplanar neighbours.
    pub class_facets_weakly_supported: bool,
    pub hull_planar_faces: usize,
}

/// `(1 + h)(1 − 3h) = 1 − 2h − 3h²`.
pub fn class12_equation() -> Polynomial {
    Polynomial::new(vec![1.0, -2.0, -3.0])
}

pub fn refute_class12() -> Result<Class12Refutation, RealizeError> {
    let eq = class12_equation();
    let h = find_root(&eq, 0.0, 1.0, 1e-14)?;
    let c = eq.coeffs();
    let other_root = c[0] / (c[2] * h);
    let a = (3.0 * (1.0 - h * h)).sqrt();
    let b = (2.0 * (1.0 - h)).sqrt();
    let g = catalog_graph(BuiltinCatalog::K8, "K8-C12");
    let points = class10_points(h);
    let hull = convex_hull(&points)?;
    let class = Realization::oriented(points.clone(), g.facets());
    Ok(Class12Refutation {
        h,
        a,
        b,
        a2_plus_b2: a * a + b * b,
        other_root,
        other_root_feasible: other_root > -1.0 && other_root < 1.0,
        hull_facets: hull.canonical_facets(),
        class_facets: class.canonical_facets(),
        hull_matches_class: hull.canonical_facets() == class.canonical_facets(),
        class_facets_weakly_supported: class.is_convex_triangulation(),
        hull_planar_faces: planar_faces(&points)?.len(),
    })
}

/// `B = e₃`, equilateral `E, C, A` at height `h`, `D = −A`, `H = −E`, and
/// `G`, `F` the mirror images of `C`, `B` in the plane through `O, A, E`.
pub fn class8_points(h: f64) -> Vec<Point3> {
    let deg = |d: f64| d * PI / 180.0;
    let e = Point3::on_latitude(h, deg(0.0));
    let c = Point3::on_latitude(h, deg(120.0));
    let a = Point3::on_latitude(h, deg(240.0));
    let top = Point3::new(0.0, 0.0, 1.0);
    let n = a.cross(e).normalized();
    let mirror = |p: Point3| p - n * (2.0 * p.dot(n));
    vec![e, -a, c, top, a, -e, mirror(c), mirror(top)]
}

/// Red edges of the surviving Class 8 coloring.
const CLASS8_RED: [(usize, usize); 6] = [(0, 2), (0, 4), (0, 6), (1, 5), (2, 4), (4, 6)];

/// Largest deviation of an edge length from its forced value `a(h)` (red)
/// or `b(h)` (blue).
pub fn class8_residual(h: f64) -> f64 {
    let g = catalog_graph(BuiltinCatalog::K8, "K8-C8");
    class8_residual_on(&g, h)
}

fn class8_residual_on(g: &PolytopeGraph, h: f64) -> f64 {
    let p = class8_points(h);
    let a = (3.0 * (1.0 - h * h)).sqrt();
    let b = (2.0 * (1.0 - h)).sqrt();
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let target = if CLASS8_RED.contains(&(u, v)) { a } else { b };
            (p[u].dist(p[v]) - target).abs()
        })
        .fold(0.0, f64::max)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Class8Refutation {
    pub samples: usize,
    pub tolerance: f64,
    /// Grid points whose residual is within tolerance.
    pub near_feasible: Vec<f64>,
    /// Smallest residual among grid points farther than 0.01 from both
    /// `1/3` and `−1`.
    pub min_residual_elsewhere: f64,
    /// Smallest `residual / (1 + h)` for grid points within 0.01 of `−1`.
    /// Bounded away from zero, so the residual only vanishes in the limit
    /// `h → −1` where `E, C, A` collapse onto the south pole.
    pub collapse_ratio: f64,
    pub residual_at_one_third: f64,
    pub coplanar_abef: bool,
    pub coplanar_cdgh: bool,
    pub strictly_convex_at_one_third: bool,
}

/// Grid search over `h ∈ (−1, 1)`. The only zero of the residual is
/// `h = 1/3`, where `A, B, E, F` and `C, D, G, H` become coplanar and the
/// facet structure degenerates. It also tends to zero like `1 + h` at the
/// excluded endpoint `h = −1`.
pub fn refute_class8(samples: usize) -> Class8Refutation {
    let g = catalog_graph(BuiltinCatalog::K8, "K8-C8");
    let tolerance = 1e-3;
    let mut near_feasible = Vec::new();
    let mut min_residual_elsewhere = f64::INFINITY;
    let mut collapse_ratio = f64::INFINITY;
    for i in 0..samples {
        let h = -1.0 + 2.0 * (i as f64 + 0.5) / samples as f64;
        let r = class8_residual_on(&g, h);
        if r <= tolerance {
            near_feasible.push(h);
        }
        if h + 1.0 <= 0.01 {
            collapse_ratio = collapse_ratio.min(r / (1.0 + h));
        } else if (h - 1.0 / 3.0).abs() > 0.01 {
            min_residual_elsewhere = min_residual_elsewhere.min(r);
        }
    }
    let h = 1.0 / 3.0;
    let p = class8_points(h);
    let at = Realization::oriented(p.clone(), g.facets());
    Class8Refutation {
        samples,
        tolerance,
        near_feasible,
        min_residual_elsewhere,
        collapse_ratio,
        residual_at_one_third: class8_residual_on(&g, h),
        coplanar_abef: coplanar([p[4], p[3], p[0], p[7]]),
        coplanar_cdgh: coplanar([p[2], p[1], p[6], p[5]]),
        strictly_convex_at_one_third: at.is_strictly_convex_triangulation(),
    }
}

/// Catalog vertex `i` of Class 14 sits at `cube_on_axis()[CLASS14II_CUBE[i]]`.
const CLASS14II_CUBE: [usize; 8] = [0, 5, 2, 4, 6, 7, 1, 3];
const CLASS14II_RED: [(usize, usize); 6] = [(0, 1), (0, 4), (2, 3), (2, 6), (4, 5), (6, 7)];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Class14iiRefutation {
    pub a: f64,
    pub b: f64,
    pub a2_plus_b2: f64,
    pub class_facets: usize,
    pub hull_planar_faces: usize,
    /// Class edges that are not edges of any planar hull face.
    pub edges_inside_faces: Vec<(usize, usize)>,
    pub collapsed: bool,
}

/// The forced box with diameters `AC`, `EG` and `a² + b² = 4`: its hull has
/// fewer planar faces than the class has facets, so class edges run through
/// face interiors.
pub fn refute_class14ii() -> Result<Class14iiRefutation, RealizeError> {
    let g = catalog_graph(BuiltinCatalog::K8, "K8-C14");
    let cube = crate::geom::cube_on_axis();
    let points: Vec<Point3> = CLASS14II_CUBE.iter().map(|&j| cube[j]).collect();
    let (ru, rv) = CLASS14II_RED[0];
    let a = points[ru].dist(points[rv]);
    let &(bu, bv) = g.edges().iter().find(|e| !CLASS14II_RED.contains(e)).unwrap();
    let b = points[bu].dist(points[bv]);
    let faces = planar_faces(&points)?;
    let on_boundary = |u: usize, v: usize| {
        faces.iter().any(|f| {
            (0..f.len()).any(|i| {
                let (x, y) = (f[i], f[(i + 1) % f.len()]);
                (x, y) == (u, v) || (y, x) == (u, v)
            })
        })
    };
    let edges_inside_faces: Vec<(usize, usize)> =
        g.edges().iter().copied().filter(|&(u, v)| !on_boundary(u, v)).collect();
    Ok(Class14iiRefutation {
        a,
        b,
        a2_plus_b2: a * a + b * b,
        class_facets: g.facets().len(),
        hull_planar_faces: faces.len(),
        collapsed: faces.len() < g.facets().len(),
        edges_inside_faces,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SnubRefutation {
    pub q: f64,
    pub cubic_residual: f64,
    pub r: f64,
    pub s: f64,
    pub t: f64,
    pub radius_sq_inner: f64,
    pub radius_sq_outer: f64,
    pub difference: f64,
    pub points: Vec<Point3>,
}

/// `2x³ + 11x² + 4x − 1`.
pub fn snub_cubic() -> Polynomial {
    Polynomial::new(vec![-1.0, 4.0, 11.0, 2.0])
}

pub fn refute_snub_disphenoid() -> Result<SnubRefutation, RealizeError> {
    let cubic = snub_cubic();
    let q = find_root(&cubic, 0.0, 1.0, 1e-14)?;
    let (r, s, t) = (q.sqrt(), ((1.0 - q) / (2.0 * q)).sqrt(), (2.0 - 2.0 * q).sqrt());
    let points = vec![
        Point3::new(t, r, 0.0),
        Point3::new(-t, r, 0.0),
        Point3::new(0.0, -r, t),
        Point3::new(0.0, -r, -t),
        Point3::new(1.0, -s, 0.0),
        Point3::new(-1.0, -s, 0.0),
        Point3::new(0.0, s, 1.0),
        Point3::new(0.0, s, -1.0),
    ];
    let (inner, outer) = (r * r + t * t, 1.0 + s * s);
    Ok(SnubRefutation {
        q,
        cubic_residual: cubic.eval(q),
        r,
        s,
        t,
        radius_sq_inner: inner,
        radius_sq_outer: outer,
        difference: inner - outer,
        points,
    })
}
