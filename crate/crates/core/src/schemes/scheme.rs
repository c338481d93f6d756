use crate::exactlin::IntMatrix;

use super::{RelationTable, SchemeError};

/// A validated association scheme with its intersection numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociationScheme {
    table: RelationTable,
    dual: Vec<usize>,
    /// `p[(s * r + t) * r + u]` = p_{st}^u.
    p: Vec<u64>,
    valencies: Vec<u64>,
    symmetric: bool,
    commutative: bool,
}

impl AssociationScheme {
    /// Checks transpose closure and the constancy of every `|xs ∩ ty|` over
    /// pairs `(x, y)` in relation `u`.
    pub fn validate(table: RelationTable) -> Result<Self, SchemeError> {
        let n = table.order();
        let r = table.rank();

        let mut dual = vec![usize::MAX; r];
        for x in 0..n {
            for y in 0..n {
                let s = table.get(x, y);
                let t = table.get(y, x);
                if dual[s] == usize::MAX {
                    dual[s] = t;
                } else if dual[s] != t {
                    return Err(SchemeError::NotTransposeClosed(s));
                }
            }
        }
        // a relation whose transpose is spread over several relations was caught above;
        // the map must also be an involution
        for s in 0..r {
            if dual[dual[s]] != s {
                return Err(SchemeError::NotTransposeClosed(s));
            }
        }

        let mut p = vec![u64::MAX; r * r * r];
        let mut witness = vec![(0usize, 0usize); r];
        let mut counts = vec![0u64; r * r];
        for x in 0..n {
            let row_x = table.row(x);
            for y in 0..n {
                let u = table.get(x, y);
                counts.iter_mut().for_each(|c| *c = 0);
                for z in 0..n {
                    counts[row_x[z] * r + table.get(z, y)] += 1;
                }
                let first_time = p[u] == u64::MAX;
                if first_time {
                    witness[u] = (x, y);
                }
                for s in 0..r {
                    for t in 0..r {
                        let slot = &mut p[(s * r + t) * r + u];
                        let c = counts[s * r + t];
                        if first_time {
                            *slot = c;
                        } else if *slot != c {
                            return Err(SchemeError::InconsistentIntersectionNumber {
                                s,
                                t,
                                u,
                                first: witness[u],
                                second: (x, y),
                                values: (*slot, c),
                            });
                        }
                    }
                }
            }
        }

        let valencies = (0..r).map(|s| p[(s * r + dual[s]) * r]).collect();
        let symmetric = (0..r).all(|s| dual[s] == s);
        let commutative = (0..r)
            .all(|s| (0..r).all(|t| (0..r).all(|u| p[(s * r + t) * r + u] == p[(t * r + s) * r + u])));
        Ok(AssociationScheme { table, dual, p, valencies, symmetric, commutative })
    }

    pub fn table(&self) -> &RelationTable {
        &self.table
    }

    /// |X|
    pub fn order(&self) -> usize {
        self.table.order()
    }

    /// |S|
    pub fn rank(&self) -> usize {
        self.table.rank()
    }

    /// The index `s*` of the transposed relation.
    pub fn dual(&self, s: usize) -> usize {
        self.dual[s]
    }

    pub fn dual_map(&self) -> &[usize] {
        &self.dual
    }

    /// Intersection number p_{st}^u.
    pub fn p(&self, s: usize, t: usize, u: usize) -> u64 {
        let r = self.rank();
        self.p[(s * r + t) * r + u]
    }

    pub fn valency(&self, s: usize) -> u64 {
        self.valencies[s]
    }

    pub fn valencies(&self) -> &[u64] {
        &self.valencies
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    /// The relation between two points.
    pub fn relation(&self, x: usize, y: usize) -> usize {
        self.table.get(x, y)
    }

    /// 0/1 adjacency matrix of relation `s`.
    pub fn adjacency(&self, s: usize) -> IntMatrix {
        let n = self.order();
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|x| (0..n).map(|y| i64::from(self.table.get(x, y) == s)).collect())
            .collect();
        IntMatrix::from_rows(&rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_point_scheme() {
        let s = AssociationScheme::validate(RelationTable::new(1, 1, vec![0]).unwrap()).unwrap();
        assert_eq!((s.order(), s.rank()), (1, 1));
        assert_eq!(s.valencies(), &[1]);
        assert!(s.is_symmetric() && s.is_commutative());
    }

    #[test]
    fn directed_triangle_is_nonsymmetric() {
        let t = RelationTable::from_rows(&[vec![0, 1, 2], vec![2, 0, 1], vec![1, 2, 0]]).unwrap();
        let s = AssociationScheme::validate(t).unwrap();
        assert!(!s.is_symmetric());
        assert!(s.is_commutative());
        assert_eq!(s.dual(1), 2);
        assert_eq!(s.valencies(), &[1, 1, 1]);
    }

    #[test]
    fn transpose_closure_failure() {
        // relation 1 holds (0,1) and (0,2) but its transposes land in relations 1 and 2
        let t = RelationTable::from_rows(&[vec![0, 1, 1], vec![1, 0, 2], vec![2, 2, 0]]).unwrap();
        assert!(matches!(AssociationScheme::validate(t), Err(SchemeError::NotTransposeClosed(_))));
    }
}
