//! Structural statements about `KT(x)` checked on concrete frames.
//!
//! A failure here means the implementation is wrong: each statement is a
//! theorem about every association scheme.

use serde::Serialize;

use crate::exactlin::{trace_form_rank, Domain, IntMatrix, IntegerLattice, Prime};
use crate::schemes::SubconstituentFrame;

use super::generators::GeneratorSet;
use super::integral::close_over_integers;
use super::report::{dimension_report_with, PrimeReport, ReportOptions};
use super::TAlgebraError;

/// Semisimplicity of `KT(x)` against that of its corners.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CornerImplication {
    pub p: u32,
    pub semisimple: bool,
    pub corners_semisimple: Vec<bool>,
    /// Every corner is semisimple but `KT(x)` is not.
    pub converse_fails: bool,
}

/// Semisimple `KT(x)` forces semisimple corners; the converse is only recorded.
pub fn corner_implication(point: usize, report: &PrimeReport) -> Result<CornerImplication, TAlgebraError> {
    assert!(!report.corners.is_empty(), "the prime report was computed without corners");
    let semisimple = report.semisimple.expect("corners imply radicals");
    let corners_semisimple: Vec<bool> = report.corners.iter().map(|c| c.semisimple).collect();
    let all = corners_semisimple.iter().all(|&b| b);
    if semisimple && !all {
        return Err(TAlgebraError::ImplicationViolated { p: report.p, point });
    }
    Ok(CornerImplication { p: report.p, semisimple, corners_semisimple, converse_fails: all && !semisimple })
}

fn single_prime(frame: &SubconstituentFrame<'_>, p: Prime) -> Result<PrimeReport, TAlgebraError> {
    let opts = ReportOptions { corners: true, ..ReportOptions::default() };
    let mut r = dimension_report_with(frame, &[p], &opts)?;
    Ok(r.primes.remove(0))
}

pub fn check_corner_implication(frame: &SubconstituentFrame<'_>, p: Prime) -> Result<CornerImplication, TAlgebraError> {
    corner_implication(frame.base_point(), &single_prime(frame, p)?)
}

/// If `p` divides some valency, `KT(x)` must not be semisimple. Returns
/// whether the hypothesis applied.
pub fn valency_criterion(valencies: &[u64], point: usize, report: &PrimeReport) -> Result<bool, TAlgebraError> {
    let p = Prime::new(report.p).expect("reports carry primes");
    let semisimple = report.semisimple.expect("the prime report was computed without radicals");
    match valencies.iter().position(|&n| p.divides(n)) {
        Some(s) if semisimple => Err(TAlgebraError::CriterionViolated { p: report.p, s, point }),
        Some(_) => Ok(true),
        None => Ok(false),
    }
}

pub fn check_valency_criterion(frame: &SubconstituentFrame<'_>, p: Prime) -> Result<bool, TAlgebraError> {
    valency_criterion(frame.scheme().valencies(), frame.base_point(), &single_prime(frame, p)?)
}

/// The all-ones corner ideal behaves as described for every corner of the report.
pub fn all_ones_corners(valencies: &[u64], point: usize, report: &PrimeReport) -> Result<(), TAlgebraError> {
    let p = Prime::new(report.p).expect("reports carry primes");
    for c in &report.corners {
        if !c.all_ones.consistent(p.divides(valencies[c.s])) {
            return Err(TAlgebraError::AllOnesCornerFailed { s: c.s, p: report.p, point });
        }
    }
    Ok(())
}

/// Every block `σ^{st}_u` has row sums `p_{t u*}^s` and column sums `p_{s u}^t`.
/// Returns the number of blocks checked.
pub fn check_tactical_configurations(frame: &SubconstituentFrame<'_>) -> Result<usize, TAlgebraError> {
    let scheme = frame.scheme();
    let r = frame.rank();
    let mut checked = 0;
    for s in 0..r {
        for t in 0..r {
            for u in 0..r {
                let block = frame.subconstituent_block(s, t, u);
                let row_sum = scheme.p(t, scheme.dual(u), s);
                let col_sum = scheme.p(s, u, t);
                let rows_ok = (0..block.rows()).all(|i| block.row(i).iter().sum::<crate::exactlin::Int>() == row_sum.into());
                let cols_ok = (0..block.cols()).all(|j| {
                    (0..block.rows()).map(|i| block.get(i, j).clone()).sum::<crate::exactlin::Int>() == col_sum.into()
                });
                if !(rows_ok && cols_ok) {
                    return Err(TAlgebraError::NotTactical { s, t, u, point: frame.base_point() });
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// Characteristic-zero semisimplicity evidence for `QT(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CharZeroCheck {
    pub dim: usize,
    /// `ZT(x)` is closed under transposition.
    pub transpose_closed: bool,
    /// Rank of the trace form `Tr(b_i b_j)` over `Q`.
    pub trace_form_rank: usize,
}

impl CharZeroCheck {
    pub fn passed(&self) -> bool {
        self.transpose_closed && self.trace_form_rank == self.dim
    }
}

pub fn char_zero_check(gens: &GeneratorSet) -> CharZeroCheck {
    char_zero_check_lattice(&close_over_integers(gens), gens.order())
}

/// [`char_zero_check`] on an already computed `ZT(x)` of `n × n` matrices.
pub fn char_zero_check_lattice(zt: &IntegerLattice, n: usize) -> CharZeroCheck {
    let basis: Vec<IntMatrix> = zt.basis().iter().map(|r| IntMatrix::unflatten(n, r)).collect();
    let transpose_closed = basis.iter().all(|b| zt.contains(&b.transpose().flatten()));
    let trace_form_rank = trace_form_rank(&basis, Domain::Rationals).expect("Q is a field");
    CharZeroCheck { dim: zt.rank(), transpose_closed, trace_form_rank }
}
