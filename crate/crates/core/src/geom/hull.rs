use std::collections::HashMap;

use super::{centroid, GeomError, Point3, Realization, EPS_DIST};

#[derive(Clone, Copy)]
struct Plane {
    normal: Point3,
    offset: f64,
}

impl Plane {
    fn through(a: Point3, b: Point3, c: Point3) -> Option<Plane> {
        let n = (b - a).cross(c - a);
        let len = n.norm();
        if len < EPS_DIST * EPS_DIST {
            return None;
        }
        let normal = n * (1.0 / len);
        Some(Plane { normal, offset: normal.dot(a) })
    }

    fn signed_distance(&self, p: Point3) -> f64 {
        self.normal.dot(p) - self.offset
    }
}

fn face_plane(points: &[Point3], f: [usize; 3]) -> Option<Plane> {
    Plane::through(points[f[0]], points[f[1]], points[f[2]])
}

/// Pick four affinely independent points to seed the hull.
fn initial_simplex(points: &[Point3]) -> Result<[usize; 4], GeomError> {
    let p0 = points[0];
    let i1 = (1..points.len())
        .max_by(|&a, &b| p0.dist(points[a]).total_cmp(&p0.dist(points[b])))
        .unwrap();
    if p0.dist(points[i1]) <= EPS_DIST {
        return Err(GeomError::DegenerateInput("all points coincide"));
    }
    let dir = (points[i1] - p0).normalized();
    let line_dist = |p: Point3| (p - p0).cross(dir).norm();
    let i2 = (0..points.len())
        .max_by(|&a, &b| line_dist(points[a]).total_cmp(&line_dist(points[b])))
        .unwrap();
    if line_dist(points[i2]) <= EPS_DIST {
        return Err(GeomError::DegenerateInput("all points collinear"));
    }
    let plane = Plane::through(p0, points[i1], points[i2])
        .ok_or(GeomError::DegenerateInput("all points collinear"))?;
    let i3 = (0..points.len())
        .max_by(|&a, &b| {
            plane
                .signed_distance(points[a])
                .abs()
                .total_cmp(&plane.signed_distance(points[b]).abs())
        })
        .unwrap();
    if plane.signed_distance(points[i3]).abs() <= EPS_DIST {
        return Err(GeomError::DegenerateInput("all points coplanar"));
    }
    Ok([0, i1, i2, i3])
}

/// Incremental hull as an outward-oriented triangle list, before coplanar
/// faces are merged. Points on the boundary are kept as vertices.
fn incremental_faces(points: &[Point3]) -> Result<Vec<[usize; 3]>, GeomError> {
    let seed = initial_simplex(points)?;
    let inside = centroid(&seed.iter().map(|&i| points[i]).collect::<Vec<_>>());
    let orient = |f: [usize; 3]| -> [usize; 3] {
        match face_plane(points, f) {
            Some(pl) if pl.signed_distance(inside) > 0.0 => [f[0], f[2], f[1]],
            _ => f,
        }
    };
    let [a, b, c, d] = seed;
    let mut faces: Vec<[usize; 3]> =
        vec![orient([a, b, c]), orient([a, b, d]), orient([a, c, d]), orient([b, c, d])];
    let mut used: Vec<usize> = seed.to_vec();

    for p in 0..points.len() {
        if seed.contains(&p) {
            continue;
        }
        let q = points[p];
        if used.iter().any(|&u| points[u].dist(q) <= EPS_DIST) {
            continue;
        }
        let dists: Vec<f64> = faces
            .iter()
            .map(|&f| face_plane(points, f).map_or(0.0, |pl| pl.signed_distance(q)))
            .collect();
        if !dists.iter().any(|&s| s > EPS_DIST) && !dists.iter().any(|&s| s.abs() <= EPS_DIST) {
            continue;
        }
        // Coplanar faces are treated as visible so boundary points become vertices.
        let visible: Vec<bool> = dists.iter().map(|&s| s >= -EPS_DIST).collect();
        let mut directed: HashMap<(usize, usize), ()> = HashMap::new();
        for (f, &v) in faces.iter().zip(&visible) {
            if v {
                for e in [(f[0], f[1]), (f[1], f[2]), (f[2], f[0])] {
                    directed.insert(e, ());
                }
            }
        }
        let mut horizon: Vec<(usize, usize)> = directed
            .keys()
            .filter(|&&(u, v)| !directed.contains_key(&(v, u)))
            .copied()
            .collect();
        horizon.sort_unstable();
        let mut next: Vec<[usize; 3]> = faces
            .iter()
            .zip(&visible)
            .filter(|(_, &v)| !v)
            .map(|(f, _)| *f)
            .collect();
        for (u, v) in horizon {
            let tri = [u, v, p];
            // A horizon edge collinear with the new point would make a sliver.
            if face_plane(points, tri).is_some() {
                next.push(tri);
            }
        }
        faces = next;
        used.push(p);
    }
    check_closed(&faces)?;
    Ok(faces)
}

fn check_closed(faces: &[[usize; 3]]) -> Result<(), GeomError> {
    let mut count: HashMap<(usize, usize), usize> = HashMap::new();
    for f in faces {
        for (u, v) in [(f[0], f[1]), (f[1], f[2]), (f[2], f[0])] {
            *count.entry((u, v)).or_default() += 1;
        }
    }
    let ok = count
        .iter()
        .all(|(&(u, v), &n)| n == 1 && count.get(&(v, u)) == Some(&1));
    if ok {
        Ok(())
    } else {
        Err(GeomError::DegenerateInput("hull boundary is not a closed surface"))
    }
}

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut r = i;
    while parent[r] != r {
        r = parent[r];
    }
    let mut j = i;
    while parent[j] != r {
        let up = parent[j];
        parent[j] = r;
        j = up;
    }
    r
}

/// Planar faces of the hull as vertex cycles, counterclockwise seen from
/// outside. Collinear boundary vertices are dropped.
pub fn planar_faces(points: &[Point3]) -> Result<Vec<Vec<usize>>, GeomError> {
    if points.len() < 4 {
        return Err(GeomError::TooFewPoints(points.len()));
    }
    let faces = incremental_faces(points)?;
    let planes: Vec<Plane> = faces
        .iter()
        .map(|&f| face_plane(points, f).expect("hull faces are non-degenerate"))
        .collect();
    let mut edge_owner: HashMap<(usize, usize), usize> = HashMap::new();
    for (i, f) in faces.iter().enumerate() {
        for e in [(f[0], f[1]), (f[1], f[2]), (f[2], f[0])] {
            edge_owner.insert(e, i);
        }
    }
    let mut parent: Vec<usize> = (0..faces.len()).collect();
    for (i, f) in faces.iter().enumerate() {
        for (u, v) in [(f[0], f[1]), (f[1], f[2]), (f[2], f[0])] {
            let j = edge_owner[&(v, u)];
            let apex = faces[j].iter().copied().find(|&w| w != u && w != v).unwrap();
            let coplanar = planes[i].signed_distance(points[apex]).abs() <= EPS_DIST
                && planes[i].normal.dot(planes[j].normal) > 0.0;
            if coplanar {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot: HashMap<usize, usize> = HashMap::new();
    for i in 0..faces.len() {
        let r = find(&mut parent, i);
        let g = *slot.entry(r).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[g].push(i);
    }

    let mut polygons = Vec::with_capacity(groups.len());
    for group in groups {
        let mut directed: HashMap<(usize, usize), ()> = HashMap::new();
        for &i in &group {
            let f = faces[i];
            for e in [(f[0], f[1]), (f[1], f[2]), (f[2], f[0])] {
                directed.insert(e, ());
            }
        }
        let mut succ: HashMap<usize, usize> = HashMap::new();
        for &(u, v) in directed.keys() {
            if !directed.contains_key(&(v, u)) {
                succ.insert(u, v);
            }
        }
        let start = *succ.keys().min().unwrap();
        let mut cycle = vec![start];
        let mut cur = succ[&start];
        while cur != start {
            if cycle.len() > succ.len() {
                return Err(GeomError::DegenerateInput("planar face boundary is not a cycle"));
            }
            cycle.push(cur);
            cur = succ[&cur];
        }
        let normal = planes[group[0]].normal;
        polygons.push(drop_collinear(points, cycle, normal));
    }
    polygons.sort();
    Ok(polygons)
}

fn drop_collinear(points: &[Point3], cycle: Vec<usize>, normal: Point3) -> Vec<usize> {
    let n = cycle.len();
    let keep: Vec<usize> = (0..n)
        .filter(|&i| {
            let prev = points[cycle[(i + n - 1) % n]];
            let cur = points[cycle[i]];
            let next = points[cycle[(i + 1) % n]];
            normal.dot((cur - prev).cross(next - cur)) > EPS_DIST * EPS_DIST
        })
        .map(|i| cycle[i])
        .collect();
    let lowest = keep.iter().enumerate().min_by_key(|(_, &v)| v).map_or(0, |(i, _)| i);
    let mut rotated = keep[lowest..].to_vec();
    rotated.extend_from_slice(&keep[..lowest]);
    rotated
}

/// Convex hull of the points, with every planar face fanned into triangles
/// from its lowest-index vertex. Facets are oriented outward.
pub fn convex_hull(points: &[Point3]) -> Result<Realization, GeomError> {
    let polygons = planar_faces(points)?;
    let mut facets = Vec::new();
    for poly in polygons {
        for w in 1..poly.len() - 1 {
            facets.push([poly[0], poly[w], poly[w + 1]]);
        }
    }
    let c = centroid(points);
    for f in facets.iter_mut() {
        let (a, b, d) = (points[f[0]], points[f[1]], points[f[2]]);
        let n = (b - a).cross(d - a);
        let mid = centroid(&[a, b, d]);
        if n.dot(mid - c) < 0.0 {
            f.swap(1, 2);
        }
    }
    Ok(Realization::new(points.to_vec(), facets))
}
