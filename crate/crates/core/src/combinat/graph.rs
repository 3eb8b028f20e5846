use std::collections::HashMap;

use super::CombinatError;

/// Graph and facet list of one combinatorial type of simplicial polytope.
#[derive(Debug, Clone, PartialEq)]
pub struct PolytopeGraph {
    pub class_label: String,
    pub name: Option<String>,
    k: usize,
    edges: Vec<(usize, usize)>,
    facets: Vec<[usize; 3]>,
    adjacency: Vec<Vec<usize>>,
    edge_index: HashMap<(usize, usize), usize>,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

impl PolytopeGraph {
    /// Builds and validates a graph. Edge order is kept: edge `i` is bit `i`
    /// of every coloring mask.
    pub fn new(
        class_label: impl Into<String>,
        k: usize,
        edges: Vec<(usize, usize)>,
        facets: Vec<[usize; 3]>,
    ) -> Result<Self, CombinatError> {
        let class_label = class_label.into();
        let fail = |message: String| CombinatError::InvariantViolation {
            label: class_label.clone(),
            message,
        };
        if k < 4 {
            return Err(fail(format!("need at least 4 vertices, got {k}")));
        }
        if k > 64 {
            return Err(fail(format!("at most 64 vertices supported, got {k}")));
        }
        if edges.len() != 3 * k - 6 {
            return Err(fail(format!("expected {} edges, found {}", 3 * k - 6, edges.len())));
        }
        if facets.len() != 2 * k - 4 {
            return Err(fail(format!("expected {} facets, found {}", 2 * k - 4, facets.len())));
        }
        let mut edge_index = HashMap::new();
        let mut adjacency = vec![Vec::new(); k];
        let mut norm_edges = Vec::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= k || v >= k || u == v {
                return Err(fail(format!("invalid edge ({u}, {v})")));
            }
            if edge_index.insert(key(u, v), i).is_some() {
                return Err(fail(format!("duplicate edge ({u}, {v})")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            norm_edges.push(key(u, v));
        }
        for a in adjacency.iter_mut() {
            a.sort_unstable();
        }
        let mut per_edge = vec![0usize; edges.len()];
        for f in &facets {
            if f.iter().any(|&x| x >= k) || f[0] == f[1] || f[1] == f[2] || f[0] == f[2] {
                return Err(fail(format!("invalid facet {f:?}")));
            }
            for (u, v) in [(f[0], f[1]), (f[1], f[2]), (f[0], f[2])] {
                match edge_index.get(&key(u, v)) {
                    Some(&i) => per_edge[i] += 1,
                    None => return Err(fail(format!("facet {f:?} uses missing edge ({u}, {v})"))),
                }
            }
        }
        if let Some(i) = per_edge.iter().position(|&n| n != 2) {
            let (u, v) = norm_edges[i];
            return Err(fail(format!("edge ({u}, {v}) lies in {} facets", per_edge[i])));
        }
        let degree_sum: usize = adjacency.iter().map(Vec::len).sum();
        if degree_sum != 2 * edges.len() {
            return Err(fail(format!("degree sum {degree_sum} != 2|E|")));
        }
        Ok(Self {
            class_label,
            name: None,
            k,
            edges: norm_edges,
            facets,
            adjacency,
            edge_index,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn facets(&self) -> &[[usize; 3]] {
        &self.facets
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.k).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.k).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_index.get(&key(u, v)).copied()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.edge_index.contains_key(&key(u, v))
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> Vec<usize> {
        self.adjacency[u]
            .iter()
            .copied()
            .filter(|w| *w != v && self.adjacency[v].binary_search(w).is_ok())
            .collect()
    }

    /// Edge ids of each facet.
    pub fn facet_edges(&self) -> Vec<[usize; 3]> {
        self.facets
            .iter()
            .map(|f| {
                [
                    self.edge_index[&key(f[0], f[1])],
                    self.edge_index[&key(f[1], f[2])],
                    self.edge_index[&key(f[0], f[2])],
                ]
            })
            .collect()
    }

    /// Neighbors of `u` in cyclic order around it, read off the facets.
    /// Starts at the smallest neighbor; direction follows its smaller successor.
    pub fn rotation(&self, u: usize) -> Vec<usize> {
        let mut next: HashMap<usize, Vec<usize>> = HashMap::new();
        for f in self.facets.iter().filter(|f| f.contains(&u)) {
            let others: Vec<usize> = f.iter().copied().filter(|&x| x != u).collect();
            next.entry(others[0]).or_default().push(others[1]);
            next.entry(others[1]).or_default().push(others[0]);
        }
        let nb = &self.adjacency[u];
        let Some(&first) = nb.first() else {
            return Vec::new();
        };
        let mut order = vec![first];
        while order.len() < nb.len() {
            let cur = *order.last().unwrap();
            let cand = next
                .get(&cur)
                .into_iter()
                .flatten()
                .copied()
                .filter(|x| !order.contains(x))
                .min();
            match cand {
                Some(c) => order.push(c),
                None => break,
            }
        }
        order
    }

    pub fn with_name(mut self, name: Option<String>) -> Self {
        self.name = name;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn octahedron() -> PolytopeGraph {
        let facets = vec![
            [0, 2, 4], [2, 1, 4], [1, 3, 4], [3, 0, 4],
            [0, 2, 5], [2, 1, 5], [1, 3, 5], [3, 0, 5],
        ];
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                if !(u == 0 && v == 1 || u == 2 && v == 3 || u == 4 && v == 5) {
                    edges.push((u, v));
                }
            }
        }
        PolytopeGraph::new("oct", 6, edges, facets).unwrap()
    }

    #[test]
    fn rotation_is_a_cycle() {
        let g = octahedron();
        let r = g.rotation(4);
        assert_eq!(r.len(), 4);
        for i in 0..4 {
            assert!(g.adjacent(r[i], r[(i + 1) % 4]));
        }
    }

    #[test]
    fn rejects_bad_counts() {
        let g = octahedron();
        let mut edges = g.edges().to_vec();
        edges.pop();
        assert!(PolytopeGraph::new("x", 6, edges, g.facets().to_vec()).is_err());
    }

    #[test]
    fn common_neighbors_of_opposite_vertices() {
        let g = octahedron();
        assert_eq!(g.common_neighbors(4, 5), vec![0, 1, 2, 3]);
        assert_eq!(g.common_neighbors(0, 2), vec![4, 5]);
    }
}
