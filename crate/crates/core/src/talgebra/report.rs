//! Per-point dimension reports and their aggregation into tables.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::exactlin::{snf_divisors, DivisorReport, Prime};
use crate::schemes::{AssociationScheme, SubconstituentFrame};

use super::checks::{char_zero_check_lattice, CharZeroCheck};
use super::closure::{close_over_field, AlgebraBasis};
use super::corners::{all_ones_corner, corner_algebra, corner_radical_dim, AllOnesCorner};
use super::field::{BinaryMatrices, ModularField, PrimeMatrices};
use super::generators::{generators, GeneratorSet};
use super::integral::close_over_integers;
use super::radical::{jacobson_radical, verify_radical, RadicalVerification};
use super::TAlgebraError;

/// What to compute beyond dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    /// Jacobson radicals of `F_p T(x)`; without them only dimensions are reported.
    pub radicals: bool,
    /// Corner algebras `E*_s KT(x) E*_s` and their radicals.
    pub corners: bool,
    /// Run the ideal/nilpotency/quotient checks on every radical.
    pub verify_radicals: bool,
    /// Transpose closure and trace-form rank of `ZT(x)`, the evidence for
    /// semisimplicity in characteristic 0.
    pub char_zero: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { radicals: true, corners: true, verify_radicals: false, char_zero: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CornerReport {
    pub s: usize,
    pub dim: usize,
    pub radical_dim: usize,
    pub semisimple: bool,
    pub all_ones: AllOnesCorner,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeReport {
    pub p: u32,
    pub dim: usize,
    /// `None` when radicals were not requested.
    pub radical_dim: Option<usize>,
    pub semisimple: Option<bool>,
    /// Empty unless corners and radicals were requested.
    pub corners: Vec<CornerReport>,
    pub radical_check: Option<RadicalVerification>,
}

/// Dimensions of `T(x)` over `Q` and the requested prime fields.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TAlgebraReport {
    pub scheme: String,
    /// 0-based point index.
    pub point: usize,
    pub dim_q: usize,
    pub generator_count: usize,
    pub divisors: DivisorReport,
    pub char_zero: Option<CharZeroCheck>,
    pub primes: Vec<PrimeReport>,
}

impl TAlgebraReport {
    pub fn prime(&self, p: u32) -> Option<&PrimeReport> {
        self.primes.iter().find(|r| r.p == p)
    }

    /// Dimension in characteristic `c` (0 for `Q`).
    pub fn dim(&self, c: u32) -> Option<usize> {
        if c == 0 {
            Some(self.dim_q)
        } else {
            self.prime(c).map(|r| r.dim)
        }
    }
}

fn analyze<F: ModularField>(
    frame: &SubconstituentFrame<'_>,
    gens: &GeneratorSet,
    field: F,
    opts: &ReportOptions,
) -> PrimeReport {
    let p = field.prime();
    let a: AlgebraBasis<F> = close_over_field(gens, field);
    if !opts.radicals {
        return PrimeReport { p: p.get(), dim: a.dim(), radical_dim: None, semisimple: None, corners: Vec::new(), radical_check: None };
    }
    let j = jacobson_radical(&a);
    let corners = if opts.corners {
        (0..frame.rank())
            .map(|s| {
                let c = corner_algebra(&a, frame, s);
                let radical_dim = corner_radical_dim(&c, frame.cell(s));
                CornerReport {
                    s,
                    dim: c.dim(),
                    radical_dim,
                    semisimple: radical_dim == 0,
                    all_ones: all_ones_corner(&c, frame.cell(s)),
                }
            })
            .collect()
    } else {
        Vec::new()
    };
    let radical_check = opts.verify_radicals.then(|| verify_radical(&a, &j));
    PrimeReport {
        p: p.get(),
        dim: a.dim(),
        radical_dim: Some(j.dim()),
        semisimple: Some(j.is_zero()),
        corners,
        radical_check,
    }
}

/// Computes `ZT(x)` and its divisors, then each `F_p T(x)` by direct closure,
/// cross-checking the three routes to `dim F_p T(x)`.
pub fn dimension_report_with(
    frame: &SubconstituentFrame<'_>,
    primes: &[Prime],
    opts: &ReportOptions,
) -> Result<TAlgebraReport, TAlgebraError> {
    let gens = generators(frame);
    let zt = close_over_integers(&gens);
    let divisors = snf_divisors(&zt.basis_matrix());
    let n = frame.order();
    let mut reports = Vec::with_capacity(primes.len());
    for &p in primes {
        let report = if p.get() == 2 {
            analyze(frame, &gens, BinaryMatrices::new(n), opts)
        } else {
            analyze(frame, &gens, PrimeMatrices::new(n, p), opts)
        };
        let lattice = zt.rank_mod_p(p);
        let by_divisors = divisors.dim_mod_p(p);
        if lattice != report.dim || by_divisors != report.dim {
            return Err(TAlgebraError::OracleMismatch {
                p: p.get(),
                lattice,
                closure: report.dim,
                divisors: by_divisors,
            });
        }
        reports.push(report);
    }
    Ok(TAlgebraReport {
        scheme: String::new(),
        point: frame.base_point(),
        dim_q: zt.rank(),
        generator_count: gens.len(),
        divisors,
        char_zero: opts.char_zero.then(|| char_zero_check_lattice(&zt, n)),
        primes: reports,
    })
}

pub fn dimension_report(frame: &SubconstituentFrame<'_>, primes: &[Prime]) -> Result<TAlgebraReport, TAlgebraError> {
    dimension_report_with(frame, primes, &ReportOptions::default())
}

/// A scheme and the points to report on.
#[derive(Debug, Clone)]
pub struct SchemeJob<'a> {
    pub name: String,
    pub scheme: &'a AssociationScheme,
    /// 0-based point indices.
    pub points: Vec<usize>,
}

impl<'a> SchemeJob<'a> {
    pub fn all_points(name: impl Into<String>, scheme: &'a AssociationScheme) -> Self {
        SchemeJob { name: name.into(), scheme, points: (0..scheme.order()).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchemeTable {
    pub scheme: String,
    pub reports: Vec<TAlgebraReport>,
    /// Distinct per-point dimensions, keyed by characteristic (0 for `Q`).
    pub distinct: BTreeMap<u32, BTreeSet<usize>>,
}

impl SchemeTable {
    pub fn distinct_dims(&self, c: u32) -> Vec<usize> {
        self.distinct.get(&c).map(|s| s.iter().copied().collect()).unwrap_or_default()
    }
}

/// Reports for every `(scheme, point)`, computed in parallel on the current
/// rayon pool and returned in job and point order.
pub fn table_report(
    jobs: &[SchemeJob<'_>],
    primes: &[Prime],
    opts: &ReportOptions,
) -> Result<Vec<SchemeTable>, TAlgebraError> {
    let tasks: Vec<(usize, usize)> =
        jobs.iter().enumerate().flat_map(|(j, job)| job.points.iter().map(move |&x| (j, x))).collect();
    let results: Vec<TAlgebraReport> = tasks
        .par_iter()
        .map(|&(j, x)| {
            let frame = SubconstituentFrame::new(jobs[j].scheme, x).expect("job points are in range");
            let mut r = dimension_report_with(&frame, primes, opts)?;
            r.scheme = jobs[j].name.clone();
            Ok(r)
        })
        .collect::<Result<_, TAlgebraError>>()?;
    let mut results = results.into_iter();
    Ok(jobs
        .iter()
        .map(|job| {
            let reports: Vec<TAlgebraReport> = results.by_ref().take(job.points.len()).collect();
            let mut distinct: BTreeMap<u32, BTreeSet<usize>> = BTreeMap::new();
            for r in &reports {
                distinct.entry(0).or_default().insert(r.dim_q);
                for pr in &r.primes {
                    distinct.entry(pr.p).or_default().insert(pr.dim);
                }
            }
            SchemeTable { scheme: job.name.clone(), reports, distinct }
        })
        .collect())
}
