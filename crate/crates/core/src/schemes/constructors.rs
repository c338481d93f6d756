//! Built-in schemes and graphs.

use super::{AssociationScheme, Graph, RelationTable, SchemeError};

/// The 2-subsets `{i, j}` of `{1, ..., n}` with `i < j`, in lexicographic order.
pub fn johnson_points(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
}

/// Index of the 2-subset `{i, j}` (1-based, any order) in [`johnson_points`].
pub fn johnson_index(n: usize, i: usize, j: usize) -> usize {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    assert!(1 <= a && a < b && b <= n, "not a 2-subset of 1..={n}");
    // pairs starting below a, then the offset inside the block starting at a
    (1..a).map(|k| n - k).sum::<usize>() + (b - a - 1)
}

fn meet(a: (usize, usize), b: (usize, usize)) -> usize {
    [a.0, a.1].iter().filter(|v| **v == b.0 || **v == b.1).count()
}

/// The Johnson scheme J(n, 2): relation 1 for pairs meeting in one point, 2 for disjoint pairs.
pub fn johnson(n: usize) -> Result<AssociationScheme, SchemeError> {
    if n < 4 {
        return Err(SchemeError::OrderTooSmall { given: n, minimum: 4 });
    }
    let pts = johnson_points(n);
    let m = pts.len();
    let entries = (0..m * m).map(|k| 2 - meet(pts[k / m], pts[k % m])).collect();
    AssociationScheme::validate(RelationTable::new(m, 3, entries)?)
}

/// The graph of J(n, 2): 2-subsets adjacent when they share one point.
pub fn johnson_graph(n: usize) -> Result<Graph, SchemeError> {
    if n < 4 {
        return Err(SchemeError::OrderTooSmall { given: n, minimum: 4 });
    }
    let pts = johnson_points(n);
    Ok(Graph::from_fn(pts.len(), |x, y| meet(pts[x], pts[y]) == 1))
}

/// The three switching sets of K_8 edges that produce the Chang graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChangSwitching {
    /// A perfect matching 4K_2.
    Matching,
    /// An 8-cycle.
    Octagon,
    /// A triangle and a disjoint pentagon.
    TriangleAndPentagon,
}

impl ChangSwitching {
    pub const ALL: [ChangSwitching; 3] =
        [ChangSwitching::Matching, ChangSwitching::Octagon, ChangSwitching::TriangleAndPentagon];

    /// Edges of K_8 on `{1, ..., 8}`.
    pub fn edges(self) -> Vec<(usize, usize)> {
        match self {
            ChangSwitching::Matching => vec![(1, 2), (3, 4), (5, 6), (7, 8)],
            ChangSwitching::Octagon => (1..=8).map(|i| (i, i % 8 + 1)).collect(),
            ChangSwitching::TriangleAndPentagon => {
                vec![(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (6, 7), (7, 8), (4, 8)]
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ChangSwitching::Matching => "4K2",
            ChangSwitching::Octagon => "C8",
            ChangSwitching::TriangleAndPentagon => "C3+C5",
        }
    }

    /// The J(8,2) graph switched on the vertices named by [`ChangSwitching::edges`].
    pub fn graph(self) -> Graph {
        let j8 = johnson_graph(8).expect("n = 8 is in range");
        let subset: Vec<usize> = self.edges().into_iter().map(|(i, j)| johnson_index(8, i, j)).collect();
        j8.seidel_switch(&subset).expect("switching set lies inside J(8,2)")
    }
}

/// The three Chang graphs, in the order of [`ChangSwitching::ALL`].
pub fn chang_graphs() -> [Graph; 3] {
    ChangSwitching::ALL.map(ChangSwitching::graph)
}

/// The 4×4 rook's graph K_4 □ K_4, vertex `4a + b` for cell `(a, b)`.
pub fn rook4() -> Graph {
    Graph::from_fn(16, |x, y| (x / 4 == y / 4) != (x % 4 == y % 4))
}

/// The Shrikhande graph: Cayley graph of Z_4 × Z_4 with connection set ±(1,0), ±(0,1), ±(1,1).
pub fn shrikhande() -> Graph {
    let conn = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)];
    Graph::from_fn(16, |x, y| {
        let d = ((x / 4 + 4 - y / 4) % 4, (x % 4 + 4 - y % 4) % 4);
        conn.contains(&d)
    })
}

/// The cycle C_n.
pub fn cycle(n: usize) -> Graph {
    Graph::from_fn(n, |x, y| (x + 1) % n == y || (y + 1) % n == x)
}
