//! Corner algebras `E*_s A E*_s`.

use serde::Serialize;

use crate::exactlin::Fp;
use crate::schemes::SubconstituentFrame;

use super::closure::AlgebraBasis;
use super::field::{MatrixField, ModularField};
use super::radical::radical_of_span;

/// The subalgebra `E*_s A E*_s`, with identity `E*_s`.
pub fn corner_algebra<F: MatrixField>(a: &AlgebraBasis<F>, frame: &SubconstituentFrame<'_>, s: usize) -> AlgebraBasis<F> {
    let f = a.field();
    let diag: Vec<(usize, usize)> = frame.cell(s).iter().map(|&y| (y, y)).collect();
    let e = f.from_entries(&diag);
    AlgebraBasis::span(f.clone(), a.elements().iter().map(|b| f.mul(&f.mul(&e, b), &e)))
}

/// Residues of the corner elements restricted to the `xs × xs` block.
fn block_residues<F: ModularField>(corner: &AlgebraBasis<F>, cell: &[usize]) -> Vec<Vec<u32>> {
    let n = corner.order();
    corner
        .elements()
        .iter()
        .map(|v| {
            let r = corner.field().residues(v);
            let r = &r;
            cell.iter().flat_map(|&y| cell.iter().map(move |&z| r[y * n + z])).collect::<Vec<u32>>()
        })
        .collect()
}

/// Radical dimension of a corner, computed on its faithful `|xs| × |xs|` block.
pub fn corner_radical_dim<F: ModularField>(corner: &AlgebraBasis<F>, cell: &[usize]) -> usize {
    let fp = Fp::new(corner.field().prime());
    radical_of_span(fp, cell.len(), &block_residues(corner, cell)).len()
}

/// Behaviour of `Z = E*_s J E*_s` (`J` all ones) inside a corner algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AllOnesCorner {
    pub in_corner: bool,
    /// `span{Z}` is a two-sided ideal of the corner.
    pub one_dimensional_ideal: bool,
    /// `Z² = n_s Z`.
    pub square_law: bool,
    pub nilpotent: bool,
}

impl AllOnesCorner {
    /// The ideal is nilpotent exactly when the characteristic divides the valency.
    pub fn consistent(&self, char_divides_valency: bool) -> bool {
        self.in_corner && self.one_dimensional_ideal && self.square_law && self.nilpotent == char_divides_valency
    }
}

pub fn all_ones_corner<F: MatrixField>(corner: &AlgebraBasis<F>, cell: &[usize]) -> AllOnesCorner {
    let f = corner.field();
    let ones: Vec<(usize, usize)> = cell.iter().flat_map(|&y| cell.iter().map(move |&z| (y, z))).collect();
    let z = f.from_entries(&ones);
    let line = AlgebraBasis::span(f.clone(), [z.clone()]);
    let in_corner = corner.contains(&z);
    let one_dimensional_ideal = corner
        .elements()
        .iter()
        .all(|b| line.contains(&f.mul(b, &z)) && line.contains(&f.mul(&z, b)));
    let z2 = f.mul(&z, &z);
    // n_s Z as a repeated sum keeps this generic over the field
    let ns_z = (0..cell.len()).fold(f.zero(), |acc, _| f.add(&acc, &z));
    AllOnesCorner { in_corner, one_dimensional_ideal, square_law: z2 == ns_z, nilpotent: f.is_zero(&z2) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Prime;
    use crate::schemes::johnson;
    use crate::talgebra::{close_over_field, generators, BinaryMatrices, PrimeMatrices, RationalMatrices};

    #[test]
    fn corners_of_johnson6() {
        let s = johnson(6).unwrap();
        let frame = SubconstituentFrame::new(&s, 0).unwrap();
        let g = generators(&frame);
        let a = close_over_field(&g, RationalMatrices::new(15));
        let c0 = corner_algebra(&a, &frame, 0);
        assert_eq!(c0.dim(), 1);
        assert!(c0.contains(&RationalMatrices::new(15).from_entries(&[(0, 0)])));
        for s in 0..3 {
            let c = corner_algebra(&a, &frame, s);
            assert!(c.is_closed());
            let check = all_ones_corner(&c, frame.cell(s));
            assert!(check.consistent(false));
        }

        let a2 = close_over_field(&g, BinaryMatrices::new(15));
        let c1 = corner_algebra(&a2, &frame, 1);
        // n_1 = 8 is even, so the all-ones corner ideal is nilpotent and the corner is not semisimple
        assert!(all_ones_corner(&c1, frame.cell(1)).consistent(true));
        assert!(corner_radical_dim(&c1, frame.cell(1)) > 0);
        let a5 = close_over_field(&g, PrimeMatrices::new(15, Prime::new(5).unwrap()));
        for s in 0..3 {
            let c = corner_algebra(&a5, &frame, s);
            assert_eq!(corner_radical_dim(&c, frame.cell(s)), 0);
        }
    }
}
