//! Reference example data, transcribed once with the original 1-based
//! labels `x_1, x_2, ...` and shifted to 0-based ids here.

use crate::graph::Graph;
use crate::VertexSet;

/// 1-based labels to a 0-based vertex set.
fn x(labels: &[usize]) -> VertexSet {
    labels.iter().map(|&l| l - 1).collect()
}

fn graph_1based(n: usize, edges: &[(usize, usize)]) -> Graph {
    let shifted: Vec<_> = edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    Graph::from_edge_list(n, &shifted).expect("fixture graph is valid")
}

/// The six-vertex chordal example graph.
pub fn chordal_example_graph() -> Graph {
    graph_1based(6, &[(1, 2), (1, 3), (1, 5), (2, 3), (2, 5), (3, 4), (5, 6)])
}

/// `A = {x_1}` for [`chordal_example_graph`].
pub fn chordal_example_seed() -> VertexSet {
    x(&[1])
}

/// `Supp_2({x_1}, G)` for [`chordal_example_graph`].
pub fn chordal_example_supp() -> Vec<VertexSet> {
    vec![x(&[2, 3]), x(&[2, 5]), x(&[3, 4]), x(&[3, 5]), x(&[5, 6])]
}

/// Facets of `Σ_2({x_1}, G)` for [`chordal_example_graph`], in the reference order.
pub fn chordal_example_facets() -> Vec<VertexSet> {
    vec![
        x(&[4, 5, 6]),
        x(&[3, 4, 6]),
        x(&[2, 5, 6]),
        x(&[2, 4, 6]),
        x(&[2, 3, 4]),
    ]
}

/// The eight-vertex gap-free graph whose `Σ_3` is shellable but not vertex
/// decomposable.
pub fn gap_free_example_graph() -> Graph {
    graph_1based(
        8,
        &[
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 6),
            (2, 8),
            (3, 6),
            (3, 8),
            (4, 7),
            (5, 7),
            (6, 7),
            (7, 8),
        ],
    )
}

/// The elimination sequence `e_1, ..., e_20` of `(Con_3(G))^c` for [`gap_free_example_graph`].
pub fn gap_free_example_elimination() -> Vec<VertexSet> {
    [
        [1, 2],
        [1, 3],
        [1, 4],
        [1, 5],
        [2, 6],
        [2, 8],
        [3, 6],
        [3, 8],
        [4, 6],
        [4, 7],
        [4, 8],
        [5, 6],
        [5, 7],
        [6, 7],
        [6, 8],
        [1, 7],
        [2, 7],
        [2, 3],
        [2, 4],
        [3, 4],
    ]
    .iter()
    .map(|e| x(e))
    .collect()
}

/// The 26-facet shelling order of `Σ_3(G)` for [`gap_free_example_graph`].
pub fn gap_free_example_shelling() -> Vec<VertexSet> {
    [
        [4, 5, 6, 7, 8],
        [3, 5, 6, 7, 8],
        [2, 5, 6, 7, 8],
        [3, 4, 6, 7, 8],
        [2, 4, 6, 7, 8],
        [2, 3, 6, 7, 8],
        [3, 4, 5, 7, 8],
        [2, 4, 5, 7, 8],
        [1, 4, 5, 7, 8],
        [2, 3, 5, 6, 8],
        [2, 3, 4, 6, 8],
        [1, 3, 4, 5, 8],
        [1, 2, 4, 5, 8],
        [1, 2, 3, 5, 8],
        [1, 2, 3, 6, 8],
        [1, 2, 3, 4, 8],
        [3, 4, 5, 6, 7],
        [2, 4, 5, 6, 7],
        [1, 3, 4, 5, 7],
        [1, 2, 4, 5, 7],
        [1, 2, 3, 5, 6],
        [1, 3, 4, 5, 6],
        [1, 4, 5, 6, 7],
        [1, 2, 4, 5, 6],
        [1, 2, 3, 4, 6],
        [1, 2, 3, 4, 5],
    ]
    .iter()
    .map(|f| x(f))
    .collect()
}

/// The drawn unicyclic graph for `r = 3`: a 5-cycle with leaves on `x_1, x_3, x_5`.
pub fn unicyclic3_graph() -> Graph {
    graph_1based(
        8,
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 6), (3, 7), (5, 8)],
    )
}

/// The drawn unicyclic graph for `r = 4`: a 6-cycle with leaves on `x_1, x_3, x_5`.
pub fn unicyclic4_graph() -> Graph {
    graph_1based(
        9,
        &[
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 1),
            (1, 7),
            (3, 8),
            (5, 9),
        ],
    )
}

/// Vertex id of `(x_i, y_j)` (1-based) in `P_n × P_m`.
pub fn grid_vertex(i: usize, j: usize, m: usize) -> usize {
    (i - 1) * m + (j - 1)
}

/// Two connected `r`-sets of the ladder `P_n × P_2` forming an induced
/// matching of `Con_r`, valid for `n ≥ r + 1`.
pub fn ladder_gap(n: usize, r: usize) -> (VertexSet, VertexSet) {
    let s = r / 2;
    let mut e1: VertexSet = (n - s + 1..=n)
        .flat_map(|i| [1, 2].map(|j| grid_vertex(i, j, 2)))
        .collect();
    let mut e2: VertexSet = (1..=s)
        .flat_map(|i| [1, 2].map(|j| grid_vertex(i, j, 2)))
        .collect();
    if r % 2 == 1 {
        e1.insert(grid_vertex(n - s, 1, 2));
        e2.insert(grid_vertex(s + 1, 2, 2));
    }
    (e1, e2)
}

/// The two-vertex shedding sequence through the middle rung of `P_n × P_2`.
pub fn ladder_shedding_order(n: usize) -> Vec<usize> {
    let mid = if n % 2 == 0 { n / 2 } else { n / 2 + 1 };
    vec![grid_vertex(mid, 1, 2), grid_vertex(mid, 2, 2)]
}

/// The middle row of `P_n × P_3` from the centre outwards, alternating sides.
pub fn grid3_shedding_order(n: usize) -> Vec<usize> {
    let m = n / 2;
    let mut rows = Vec::with_capacity(n);
    if n % 2 == 0 {
        for k in 0..m {
            rows.push(m - k);
            rows.push(m + 1 + k);
        }
    } else {
        rows.push(m + 1);
        for k in 0..m {
            rows.push(m - k);
            rows.push(m + 2 + k);
        }
    }
    rows.into_iter().map(|i| grid_vertex(i, 2, 3)).collect()
}

/// The six-vertex, ten-triangle triangulation of the real projective plane.
pub fn projective_plane_facets() -> Vec<VertexSet> {
    [
        [1, 2, 3],
        [1, 3, 4],
        [1, 4, 5],
        [1, 5, 6],
        [1, 6, 2],
        [2, 3, 5],
        [3, 4, 6],
        [4, 5, 2],
        [5, 6, 3],
        [6, 2, 4],
    ]
    .iter()
    .map(|f| x(f))
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_plane_is_a_closed_surface() {
        let facets = projective_plane_facets();
        for pair in VertexSet::full(6).k_subsets(2) {
            let containing = facets.iter().filter(|f| pair.is_subset(**f)).count();
            assert_eq!(containing, 2, "edge {pair}");
        }
        // Euler characteristic 6 - 15 + 10 = 1.
        assert_eq!(facets.len(), 10);
    }

    #[test]
    fn orderings_cover_the_middle_row() {
        assert_eq!(
            grid3_shedding_order(4),
            [2, 3, 1, 4].map(|i| grid_vertex(i, 2, 3)).to_vec()
        );
        assert_eq!(
            grid3_shedding_order(5),
            [3, 2, 4, 1, 5].map(|i| grid_vertex(i, 2, 3)).to_vec()
        );
        assert_eq!(ladder_shedding_order(4), vec![2, 3]);
        assert_eq!(ladder_shedding_order(5), vec![4, 5]);
    }

    #[test]
    fn ladder_gap_sizes() {
        for r in 2..7 {
            let (a, b) = ladder_gap(r + 1, r);
            assert_eq!((a.len(), b.len()), (r, r));
            assert!(a.is_disjoint(b));
        }
    }
}
