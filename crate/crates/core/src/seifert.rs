//! Homology bases, crossing symbols and generalized Seifert matrices of a
//! decorated spine.
//!
//! The spine embeds in its C-complex with all vertices to the right of all
//! edges; with that picture fixed, the linking number of a push-off of one
//! circuit with another is a sum of local crossing symbols of directed
//! edges, each readable from the decoration alone.

use crate::ccomplex::DecoratedSpine;

/// An edge of the spine together with a direction of travel.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DirectedEdge {
    pub edge: usize,
    /// `true`: traversed from lower to upper vertex.
    pub up: bool,
}

/// A closed walk in the spine, as a cyclic sequence of directed edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedCircuit(pub Vec<DirectedEdge>);

/// The family of generalized Seifert matrices of a spine: one `g x g`
/// integer matrix per sign tuple in `{-1, +1}^mu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertFamily {
    pub mu: usize,
    pub rank: usize,
    pub basis: Vec<OrientedCircuit>,
    /// Indexed by [`eps_index`], i.e. lexicographically with `-1 < +1`.
    pub matrices: Vec<Vec<Vec<i64>>>,
    /// Whether every two colors share at least one clasp.
    pub pairwise_clasped: bool,
}

/// Sign tuple for a family index, lexicographic with `-1 < +1` and the last
/// color varying fastest.
pub fn eps_tuple(index: usize, mu: usize) -> Vec<i8> {
    (0..mu)
        .map(|i| if index >> (mu - 1 - i) & 1 == 1 { 1 } else { -1 })
        .collect()
}

pub fn eps_index(eps: &[i8]) -> usize {
    eps.iter()
        .fold(0usize, |acc, &e| (acc << 1) | usize::from(e > 0))
}

/// A homology basis of the spine: a circuit per non-tree edge of a
/// deterministic spanning tree (breadth-first from vertex 0, tree edges
/// chosen by smallest edge index), each oriented so the non-tree edge is
/// traversed upward and closed by the unique tree path back.
pub fn homology_basis(spine: &DecoratedSpine) -> Vec<OrientedCircuit> {
    let v = spine.vertex_count();
    let mut adjacency = vec![Vec::new(); v];
    for (i, e) in spine.edges.iter().enumerate() {
        adjacency[e.lower].push(i);
        adjacency[e.upper].push(i);
    }

    let mut parent: Vec<Option<(usize, usize)>> = vec![None; v]; // (vertex, edge)
    let mut depth = vec![0usize; v];
    let mut visited = vec![false; v];
    let mut in_tree = vec![false; spine.edges.len()];
    visited[0] = true;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for &ei in &adjacency[u] {
            let e = &spine.edges[ei];
            let w = if e.lower == u { e.upper } else { e.lower };
            if !visited[w] {
                visited[w] = true;
                in_tree[ei] = true;
                parent[w] = Some((u, ei));
                depth[w] = depth[u] + 1;
                queue.push_back(w);
            }
        }
    }
    debug_assert!(visited.iter().all(|&x| x), "spine must be connected");

    let step = |walk: &mut Vec<DirectedEdge>, from: usize, edge: usize| -> usize {
        let e = &spine.edges[edge];
        walk.push(DirectedEdge {
            edge,
            up: e.lower == from,
        });
        if e.lower == from {
            e.upper
        } else {
            e.lower
        }
    };

    let mut basis = Vec::new();
    for (ei, e) in spine.edges.iter().enumerate() {
        if in_tree[ei] {
            continue;
        }
        let mut walk = vec![DirectedEdge { edge: ei, up: true }];
        // tree path from e.upper back to e.lower, via the common ancestor
        let (mut a, mut b) = (e.upper, e.lower);
        let mut down: Vec<(usize, usize)> = Vec::new(); // (child, edge) on b's side
        while a != b {
            if depth[a] >= depth[b] {
                let (pa, ea) = parent[a].expect("non-root vertex has a parent");
                step(&mut walk, a, ea);
                a = pa;
            } else {
                let (pb, eb) = parent[b].expect("non-root vertex has a parent");
                down.push((b, eb));
                b = pb;
            }
        }
        let mut at = a;
        for &(child, edge) in down.iter().rev() {
            at = step(&mut walk, at, edge);
            debug_assert_eq!(at, child);
        }
        debug_assert_eq!(at, e.lower);
        basis.push(OrientedCircuit(walk));
    }
    basis
}

/// The signed number of crossings of `beta` over the `eps` push-off of
/// `alpha`, in the fixed planar picture of the spine.
///
/// Both edges are first normalized to their upward orientation (each
/// reversal negates the symbol). The four endpoint marks are ordered
/// vertically by vertex index, a tie between a push-off mark and a plain
/// mark at the same vertex broken by the push-off sign at that vertex's
/// color (`+1` lands above, `-1` below). Non-alternating marks contribute 0.
/// For distinct edges only `alpha < beta` in the left-to-right edge order
/// can be nonzero, since only then does `beta` cross over the push-off; a
/// single edge contributes through the handedness table of its push-offs.
pub fn crossing_symbol(
    spine: &DecoratedSpine,
    alpha: DirectedEdge,
    beta: DirectedEdge,
    eps: &[i8],
) -> i64 {
    debug_assert_eq!(eps.len(), spine.mu);
    let mut sign = 1i64;
    if !alpha.up {
        sign = -sign;
    }
    if !beta.up {
        sign = -sign;
    }
    let ea = &spine.edges[alpha.edge];
    let eb = &spine.edges[beta.edge];

    // marks (vertex, tier): push-off marks sit at tier 0 or 2 around the
    // plain marks at tier 1
    let push_tier = |v: usize| if eps[spine.colors[v]] > 0 { 2u8 } else { 0u8 };
    let u1 = (ea.lower, push_tier(ea.lower));
    let u2 = (ea.upper, push_tier(ea.upper));
    let v1 = (eb.lower, 1u8);
    let v2 = (eb.upper, 1u8);

    let ascending = v1 < u1 && u1 < v2 && v2 < u2; // v1 < u1 < v2 < u2
    let descending = u1 < v1 && v1 < u2 && u2 < v2; // u1 < v1 < u2 < v2

    if alpha.edge == beta.edge {
        // push-off of a single band or finger: the marks alternate only when
        // the push-off sign agrees at both endpoints, and then a left-handed
        // edge crosses once at eps = +1, a right-handed one at eps = -1
        return if ea.sign < 0 && ascending {
            sign
        } else if ea.sign > 0 && descending {
            -sign
        } else {
            0
        };
    }
    if alpha.edge > beta.edge {
        return 0;
    }
    if ascending {
        sign
    } else if descending {
        -sign
    } else {
        0
    }
}

/// Linking number of the `eps` push-off of `gamma` with `delta`: the sum of
/// crossing symbols over all ordered pairs of directed edges.
pub fn linking(
    spine: &DecoratedSpine,
    gamma: &OrientedCircuit,
    delta: &OrientedCircuit,
    eps: &[i8],
) -> i64 {
    let mut total = 0;
    for &a in &gamma.0 {
        for &b in &delta.0 {
            total += crossing_symbol(spine, a, b, eps);
        }
    }
    total
}

/// Computes the full family of generalized Seifert matrices with respect to
/// the deterministic homology basis: `A[eps][i][j] = lk(gamma_i^eps, gamma_j)`.
pub fn seifert_family(spine: &DecoratedSpine) -> SeifertFamily {
    let basis = homology_basis(spine);
    let g = basis.len();
    let mu = spine.mu;
    let mut matrices = Vec::with_capacity(1 << mu);
    for index in 0..1usize << mu {
        let eps = eps_tuple(index, mu);
        let matrix = (0..g)
            .map(|i| {
                (0..g)
                    .map(|j| linking(spine, &basis[i], &basis[j], &eps))
                    .collect()
            })
            .collect();
        matrices.push(matrix);
    }

    let mut clasped = vec![vec![false; mu]; mu];
    for (i, e) in spine.edges.iter().enumerate() {
        if spine.is_clasp(i) {
            let (a, b) = (spine.colors[e.lower], spine.colors[e.upper]);
            clasped[a][b] = true;
            clasped[b][a] = true;
        }
    }
    let pairwise_clasped =
        (0..mu).all(|a| (a + 1..mu).all(|b| clasped[a][b]));

    SeifertFamily {
        mu,
        rank: g,
        basis,
        matrices,
        pairwise_clasped,
    }
}

/// The sign of the C-complex: the product of the signs of all clasps
/// (empty product `+1`).
pub fn complex_sign(spine: &DecoratedSpine) -> i8 {
    let mut sign = 1i8;
    for (i, e) in spine.edges.iter().enumerate() {
        if spine.is_clasp(i) {
            sign *= e.sign;
        }
    }
    sign
}

/// Euler characteristic of the union of all surfaces except color
/// `excluded`: `V - E` of the subgraph induced on the other colors.
pub fn chi_excluding(spine: &DecoratedSpine, excluded: usize) -> i64 {
    debug_assert!(excluded < spine.mu);
    let keep: Vec<bool> = spine.colors.iter().map(|&c| c != excluded).collect();
    let v = keep.iter().filter(|&&k| k).count() as i64;
    let e = spine
        .edges
        .iter()
        .filter(|e| keep[e.lower] && keep[e.upper])
        .count() as i64;
    v - e
}

pub fn transpose(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    (0..cols)
        .map(|j| (0..rows).map(|i| m[i][j]).collect())
        .collect()
}
