use super::SchemeError;

/// An `n × n` table of relation indices; index 0 is the identity relation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RelationTable {
    order: usize,
    rank: usize,
    entries: Vec<usize>,
}

impl RelationTable {
    /// Checks the table invariants: 0 exactly on the diagonal, every index below
    /// `rank`, and every index used at least once.
    pub fn new(order: usize, rank: usize, entries: Vec<usize>) -> Result<Self, SchemeError> {
        let malformed = |msg: String| Err(SchemeError::MalformedTable(msg));
        if order == 0 || rank == 0 {
            return malformed("order and rank must be positive".into());
        }
        if entries.len() != order * order {
            return malformed(format!("expected {} entries, found {}", order * order, entries.len()));
        }
        let mut used = vec![false; rank];
        for i in 0..order {
            for j in 0..order {
                let e = entries[i * order + j];
                if e >= rank {
                    return malformed(format!("entry ({i},{j}) = {e} is not below the rank {rank}"));
                }
                if (e == 0) != (i == j) {
                    return malformed(format!("relation 0 must be exactly the diagonal; violated at ({i},{j})"));
                }
                used[e] = true;
            }
        }
        if let Some(s) = used.iter().position(|u| !u) {
            return malformed(format!("relation {s} does not occur"));
        }
        Ok(RelationTable { order, rank, entries })
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, SchemeError> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(SchemeError::MalformedTable("table is not square".into()));
        }
        let rank = rows.iter().flatten().copied().max().map_or(0, |m| m + 1);
        Self::new(order, rank, rows.concat())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.entries[x * self.order + y]
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.entries[x * self.order..(x + 1) * self.order]
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Relabels points: the new point `i` is the old point `perm[i]`.
    pub fn permute_points(&self, perm: &[usize]) -> Result<Self, SchemeError> {
        let n = self.order;
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(SchemeError::MalformedTable("not a permutation of the points".into()));
        }
        let entries = (0..n * n).map(|k| self.get(perm[k / n], perm[k % n])).collect();
        Ok(RelationTable { order: n, rank: self.rank, entries })
    }
}
