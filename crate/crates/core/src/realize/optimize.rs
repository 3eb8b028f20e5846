use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::RealizeError;
use crate::combinat::PolytopeGraph;
use crate::geom::{congruence_defect, convex_hull, edge_triple_variance, Point3, Realization};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptimizerConfig {
    pub k: usize,
    pub restarts: usize,
    /// Single-point moves per restart.
    pub iters: usize,
    pub step_start: f64,
    pub step_end: f64,
    pub seed: u64,
    /// Weight of the facet-congruence penalty; 0 maximizes plain area.
    pub penalty: f64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self {
            k: 8,
            restarts: 64,
            iters: 4000,
            step_start: 0.3,
            step_end: 1e-4,
            seed: 0,
            penalty: 0.0,
        }
    }
}

impl OptimizerConfig {
    /// Budget for the penalized search. The defect of the result tracks the
    /// final step size, hence the longer schedule and the smaller floor.
    pub fn congruent(k: usize) -> Self {
        Self { k, iters: 10_000, step_end: 1e-6, penalty: 1e4, ..Self::default() }
    }

    pub fn validate(&self) -> Result<(), RealizeError> {
        let bad = |m: &str| Err(RealizeError::InvalidConfig(m.to_string()));
        if self.k < 4 {
            return bad("k must be at least 4");
        }
        if self.restarts == 0 {
            return bad("restarts must be at least 1");
        }
        if self.iters == 0 {
            return bad("iters must be at least 1");
        }
        if !(self.step_start > 0.0 && self.step_end > 0.0 && self.step_end <= self.step_start) {
            return bad("step schedule needs 0 < step_end <= step_start");
        }
        if !(self.penalty >= 0.0 && self.penalty.is_finite()) {
            return bad("penalty must be finite and non-negative");
        }
        Ok(())
    }

    fn step(&self, it: usize) -> f64 {
        if self.iters == 1 {
            return self.step_start;
        }
        let t = it as f64 / (self.iters - 1) as f64;
        self.step_start * (self.step_end / self.step_start).powf(t)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptimizeResult {
    pub realization: Realization,
    pub area: f64,
    pub objective: f64,
    pub congruence_defect: f64,
    pub restart: usize,
}

/// Hull area minus `penalty` times the variance of sorted facet edge
/// triples. `None` for degenerate configurations.
pub fn objective(points: &[Point3], penalty: f64) -> Option<(f64, f64)> {
    let hull = convex_hull(points).ok()?;
    let area = hull.surface_area();
    let value = if penalty > 0.0 {
        area - penalty * edge_triple_variance(&hull)
    } else {
        area
    };
    Some((area, value))
}

fn random_unit(rng: &mut ChaCha8Rng) -> Point3 {
    let z: f64 = rng.random_range(-1.0..1.0);
    let phi: f64 = rng.random_range(0.0..2.0 * PI);
    let r = (1.0 - z * z).sqrt();
    Point3::new(r * phi.cos(), r * phi.sin(), z)
}

/// Moves `p` along a uniformly random tangent direction by `step`, back onto the sphere.
fn perturb(p: Point3, step: f64, rng: &mut ChaCha8Rng) -> Point3 {
    loop {
        let d = random_unit(rng);
        let tangent = d - p * d.dot(p);
        let len = tangent.norm();
        if len > 1e-6 {
            return (p + tangent * (step / len)).normalized();
        }
    }
}

fn restart_rng(seed: u64, restart: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(restart as u64);
    rng
}

/// Derivative-free local search from one random start. Accepts a move only
/// if it strictly improves `score`.
fn climb<F>(cfg: &OptimizerConfig, restart: usize, score: F) -> (Vec<Point3>, f64)
where
    F: Fn(&[Point3]) -> Option<f64>,
{
    let mut rng = restart_rng(cfg.seed, restart);
    let (mut points, mut best) = loop {
        let pts: Vec<Point3> = (0..cfg.k).map(|_| random_unit(&mut rng)).collect();
        if let Some(v) = score(&pts) {
            break (pts, v);
        }
    };
    for it in 0..cfg.iters {
        let step = cfg.step(it);
        let i = rng.random_range(0..cfg.k);
        let old = points[i];
        points[i] = perturb(old, step, &mut rng);
        match score(&points) {
            Some(v) if v > best => best = v,
            _ => points[i] = old,
        }
    }
    (points, best)
}

/// Multi-restart maximization of hull area (optionally penalized) over `k`
/// points on the unit sphere. Restarts run in parallel, each with its own
/// RNG stream, so the result depends only on the config.
pub fn optimize_sphere(cfg: &OptimizerConfig) -> Result<OptimizeResult, RealizeError> {
    cfg.validate()?;
    let runs: Vec<(usize, Vec<Point3>, f64)> = (0..cfg.restarts)
        .into_par_iter()
        .map(|r| {
            let (pts, v) = climb(cfg, r, |p| objective(p, cfg.penalty).map(|(_, v)| v));
            (r, pts, v)
        })
        .collect();
    let (restart, points, value) = runs
        .into_iter()
        .reduce(|best, cur| if cur.2 > best.2 { cur } else { best })
        .expect("at least one restart");
    let realization = convex_hull(&points)?;
    Ok(OptimizeResult {
        area: realization.surface_area(),
        objective: value,
        congruence_defect: congruence_defect(&realization),
        realization,
        restart,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StructureProbe {
    pub class_label: String,
    /// Smallest facet-congruence defect found among strictly convex configurations.
    pub best_defect: f64,
    pub best_support_margin: f64,
    pub realization: Option<Realization>,
}

/// Searches for points on the sphere whose triangulation by `g`'s facets is
/// strictly convex with congruent facets. A defect that stays away from 0
/// is evidence, not proof, that no such realization exists.
pub fn probe_fixed_structure(g: &PolytopeGraph, cfg: &OptimizerConfig, margin: f64) -> StructureProbe {
    let cfg = OptimizerConfig { k: g.k(), ..cfg.clone() };
    let score = |pts: &[Point3]| {
        let r = Realization::oriented(pts.to_vec(), g.facets());
        let violation = r.max_support_violation() + margin;
        if !violation.is_finite() {
            return None;
        }
        Some(-edge_triple_variance(&r) - 10.0 * violation.max(0.0))
    };
    let mut best: Option<(f64, f64, Realization)> = None;
    for restart in 0..cfg.restarts {
        let (pts, _) = climb(&cfg, restart, score);
        let r = Realization::oriented(pts, g.facets());
        let support = r.max_support_violation();
        if support > -margin {
            continue;
        }
        let defect = congruence_defect(&r);
        if best.as_ref().is_none_or(|b| defect < b.0) {
            best = Some((defect, support, r));
        }
    }
    match best {
        Some((best_defect, support, r)) => StructureProbe {
            class_label: g.class_label.clone(),
            best_defect,
            best_support_margin: -support,
            realization: Some(r),
        },
        None => StructureProbe {
            class_label: g.class_label.clone(),
            best_defect: f64::INFINITY,
            best_support_margin: 0.0,
            realization: None,
        },
    }
}
