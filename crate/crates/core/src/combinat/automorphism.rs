use super::{EdgeColoring, PolytopeGraph};

/// All permutations `p` of the vertices with `uv` an edge iff `p[u]p[v]` is.
/// Backtracking over degree-compatible images.
pub fn automorphisms(g: &PolytopeGraph) -> Vec<Vec<usize>> {
    let k = g.k();
    let mut out = Vec::new();
    let mut image = vec![usize::MAX; k];
    let mut taken = vec![false; k];
    search(g, 0, &mut image, &mut taken, &mut out);
    out
}

fn search(
    g: &PolytopeGraph,
    v: usize,
    image: &mut Vec<usize>,
    taken: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    if v == g.k() {
        out.push(image.clone());
        return;
    }
    for t in 0..g.k() {
        if taken[t] || g.degree(t) != g.degree(v) {
            continue;
        }
        let consistent = (0..v).all(|u| g.adjacent(u, v) == g.adjacent(image[u], t));
        if !consistent {
            continue;
        }
        image[v] = t;
        taken[t] = true;
        search(g, v + 1, image, taken, out);
        taken[t] = false;
    }
    image[v] = usize::MAX;
}

/// Image of a coloring under a vertex permutation that is an automorphism.
pub fn permute_coloring(g: &PolytopeGraph, c: &EdgeColoring, perm: &[usize]) -> EdgeColoring {
    let mut mask = 0u64;
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if c.mask >> i & 1 == 1 {
            let j = g.edge_id(perm[u], perm[v]).expect("permutation is an automorphism");
            mask |= 1 << j;
        }
    }
    EdgeColoring::new(mask)
}

/// Smallest-mask representative of each orbit, sorted, one per orbit.
pub fn orbit_representatives(
    g: &PolytopeGraph,
    colorings: &[EdgeColoring],
    autos: &[Vec<usize>],
) -> Vec<EdgeColoring> {
    let mut reps: Vec<EdgeColoring> = colorings
        .iter()
        .map(|c| autos.iter().map(|p| permute_coloring(g, c, p)).min().unwrap_or(*c))
        .collect();
    reps.sort_unstable();
    reps.dedup();
    reps
}
