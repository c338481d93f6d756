use serde::{Deserialize, Serialize};

use super::{AssociationScheme, RelationTable, SchemeError};

/// A simple undirected graph stored as a dense adjacency matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<bool>,
}

/// Parameters `(v, k, λ, μ)` of a strongly regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SrgParameters {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl std::fmt::Display for SrgParameters {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{},{})", self.v, self.k, self.lambda, self.mu)
    }
}

impl Graph {
    /// Checks symmetry and the zero diagonal.
    pub fn from_adjacency(order: usize, adj: Vec<bool>) -> Result<Self, SchemeError> {
        if adj.len() != order * order {
            return Err(SchemeError::MalformedGraph(format!(
                "expected {} adjacency entries, found {}",
                order * order,
                adj.len()
            )));
        }
        for i in 0..order {
            if adj[i * order + i] {
                return Err(SchemeError::MalformedGraph(format!("loop at vertex {i}")));
            }
            for j in 0..i {
                if adj[i * order + j] != adj[j * order + i] {
                    return Err(SchemeError::MalformedGraph(format!("asymmetric pair ({j},{i})")));
                }
            }
        }
        Ok(Graph { order, adj })
    }

    pub fn from_edges(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, SchemeError> {
        let mut adj = vec![false; order * order];
        for (a, b) in edges {
            if a >= order || b >= order || a == b {
                return Err(SchemeError::MalformedGraph(format!("bad edge ({a},{b})")));
            }
            adj[a * order + b] = true;
            adj[b * order + a] = true;
        }
        Ok(Graph { order, adj })
    }

    /// Graph on `0..order` with `x ~ y` whenever `adjacent(x, y)` holds for `x != y`.
    pub fn from_fn(order: usize, adjacent: impl Fn(usize, usize) -> bool) -> Self {
        let mut adj = vec![false; order * order];
        for x in 0..order {
            for y in 0..x {
                let a = adjacent(x, y);
                adj[x * order + y] = a;
                adj[y * order + x] = a;
            }
        }
        Graph { order, adj }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn adjacent(&self, x: usize, y: usize) -> bool {
        self.adj[x * self.order + y]
    }

    pub fn degree(&self, x: usize) -> usize {
        (0..self.order).filter(|&y| self.adjacent(x, y)).count()
    }

    pub fn common_neighbours(&self, x: usize, y: usize) -> usize {
        (0..self.order).filter(|&z| self.adjacent(x, z) && self.adjacent(y, z)).count()
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.order, |x, y| !self.adjacent(x, y))
    }

    /// Complements adjacency between `subset` and its complement.
    pub fn seidel_switch(&self, subset: &[usize]) -> Result<Graph, SchemeError> {
        let mut inside = vec![false; self.order];
        for &v in subset {
            if v >= self.order {
                return Err(SchemeError::PointOutOfRange { point: v, order: self.order });
            }
            inside[v] = true;
        }
        Ok(Graph::from_fn(self.order, |x, y| self.adjacent(x, y) ^ (inside[x] != inside[y])))
    }

    /// Brute-force check of strong regularity over all vertex pairs.
    pub fn srg_parameters(&self) -> Result<SrgParameters, SchemeError> {
        let n = self.order;
        let not_srg = |pair: (usize, usize), reason: String| Err(SchemeError::NotStronglyRegular { pair, reason });
        if n < 2 {
            return not_srg((0, 0), "fewer than two vertices".into());
        }
        let k = self.degree(0);
        if let Some(x) = (1..n).find(|&x| self.degree(x) != k) {
            return not_srg((0, x), format!("degrees {} and {} differ", k, self.degree(x)));
        }
        let mut lambda = None;
        let mut mu = None;
        for x in 0..n {
            for y in x + 1..n {
                let c = self.common_neighbours(x, y);
                let slot = if self.adjacent(x, y) { &mut lambda } else { &mut mu };
                match *slot {
                    None => *slot = Some((c, (x, y))),
                    Some((c0, w)) if c0 != c => {
                        return not_srg(
                            (x, y),
                            format!("{c} common neighbours here but {c0} at ({},{})", w.0, w.1),
                        );
                    }
                    _ => {}
                }
            }
        }
        match (lambda, mu) {
            (Some((lambda, _)), Some((mu, _))) => Ok(SrgParameters { v: n, k, lambda, mu }),
            _ => not_srg((0, 0), "complete or empty graph".into()),
        }
    }

    /// Relation 0 is equality, 1 adjacency, 2 non-adjacency.
    pub fn relation_table(&self) -> RelationTable {
        let n = self.order;
        let entries = (0..n * n)
            .map(|k| {
                let (x, y) = (k / n, k % n);
                if x == y {
                    0
                } else if self.adjacent(x, y) {
                    1
                } else {
                    2
                }
            })
            .collect();
        RelationTable::new(n, 3, entries).expect("graph tables are well formed once both relations occur")
    }
}

/// The rank-3 symmetric scheme of a strongly regular graph.
pub fn scheme_from_srg(g: &Graph) -> Result<(AssociationScheme, SrgParameters), SchemeError> {
    let params = g.srg_parameters()?;
    let scheme = AssociationScheme::validate(g.relation_table())?;
    Ok((scheme, params))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn pentagon() {
        let (s, p) = scheme_from_srg(&cycle(5)).unwrap();
        assert_eq!(p, SrgParameters { v: 5, k: 2, lambda: 0, mu: 1 });
        assert_eq!(s.valencies(), &[1, 2, 2]);
    }

    #[test]
    fn path_is_not_srg() {
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(matches!(scheme_from_srg(&path), Err(SchemeError::NotStronglyRegular { .. })));
    }

    #[test]
    fn complete_graph_rejected() {
        let k4 = Graph::from_fn(4, |_, _| true);
        assert!(matches!(k4.srg_parameters(), Err(SchemeError::NotStronglyRegular { .. })));
    }

    #[test]
    fn switching_trivial_subsets() {
        let g = cycle(6);
        assert_eq!(g.seidel_switch(&[]).unwrap(), g);
        assert_eq!(g.seidel_switch(&[0, 1, 2, 3, 4, 5]).unwrap(), g);
        let h = g.seidel_switch(&[0, 3]).unwrap();
        assert_eq!(h.seidel_switch(&[0, 3]).unwrap(), g);
        assert!(g.seidel_switch(&[9]).is_err());
    }

    #[test]
    fn malformed_adjacency() {
        assert!(Graph::from_adjacency(2, vec![false, true, false, false]).is_err());
        assert!(Graph::from_adjacency(2, vec![true, false, false, false]).is_err());
    }
}
