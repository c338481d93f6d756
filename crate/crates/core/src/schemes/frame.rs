use crate::exactlin::IntMatrix;

use super::{AssociationScheme, SchemeError};

/// A base point `x` with the partition `X = ⋃ xs` and the dual idempotents `E*_s`.
#[derive(Debug, Clone)]
pub struct SubconstituentFrame<'a> {
    scheme: &'a AssociationScheme,
    base: usize,
    /// `cells[s]` = xs, ascending.
    cells: Vec<Vec<usize>>,
    /// For each point `y`, the relation of `(x, y)`.
    cell_of: Vec<usize>,
}

impl<'a> SubconstituentFrame<'a> {
    pub fn new(scheme: &'a AssociationScheme, base: usize) -> Result<Self, SchemeError> {
        let n = scheme.order();
        if base >= n {
            return Err(SchemeError::PointOutOfRange { point: base, order: n });
        }
        let cell_of: Vec<usize> = (0..n).map(|y| scheme.relation(base, y)).collect();
        let mut cells = vec![Vec::new(); scheme.rank()];
        for (y, &s) in cell_of.iter().enumerate() {
            cells[s].push(y);
        }
        Ok(SubconstituentFrame { scheme, base, cells, cell_of })
    }

    pub fn scheme(&self) -> &'a AssociationScheme {
        self.scheme
    }

    pub fn base_point(&self) -> usize {
        self.base
    }

    pub fn order(&self) -> usize {
        self.scheme.order()
    }

    pub fn rank(&self) -> usize {
        self.scheme.rank()
    }

    /// The cell xs.
    pub fn cell(&self, s: usize) -> &[usize] {
        &self.cells[s]
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    /// Index `s` with `y ∈ xs`.
    pub fn cell_of(&self, y: usize) -> usize {
        self.cell_of[y]
    }

    /// The diagonal 0/1 matrix projecting onto xs.
    pub fn dual_idempotent(&self, s: usize) -> IntMatrix {
        let n = self.order();
        let mut m = IntMatrix::zeros(n, n);
        for &y in &self.cells[s] {
            m.set(y, y, 1.into());
        }
        m
    }

    /// The `|xs| × |xt|` submatrix of σ_u with rows in xs and columns in xt.
    pub fn subconstituent_block(&self, s: usize, t: usize, u: usize) -> IntMatrix {
        let rows: Vec<Vec<i64>> = self.cells[s]
            .iter()
            .map(|&y| self.cells[t].iter().map(|&z| i64::from(self.scheme.relation(y, z) == u)).collect())
            .collect();
        if rows.is_empty() {
            return IntMatrix::zeros(0, self.cells[t].len());
        }
        IntMatrix::from_rows(&rows)
    }
}
