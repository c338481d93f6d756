//! Smith normal form invariant factors.

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::integer::{from_int, Checked, Coeff, Int};
use super::lattice::with_fallback;
use super::{IntMatrix, Prime};

/// Elementary divisors `e_1 | e_2 | ... | e_r` of a lattice inside its saturation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorReport {
    #[serde(with = "int_list")]
    divisors: Vec<Int>,
}

mod int_list {
    use super::Int;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Int], s: S) -> Result<S::Ok, S::Error> {
        let text: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        text.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Int>, D::Error> {
        let text: Vec<String> = Vec::deserialize(d)?;
        text.iter().map(|x| x.parse::<Int>().map_err(serde::de::Error::custom)).collect()
    }
}

impl DivisorReport {
    /// Builds a report, checking positivity and the divisibility chain.
    pub fn new(divisors: Vec<Int>) -> Self {
        for w in divisors.windows(2) {
            assert!((&w[1] % &w[0]).is_nil(), "divisibility chain violated: {} does not divide {}", w[0], w[1]);
        }
        assert!(divisors.iter().all(|d| d.is_positive()), "elementary divisors must be positive");
        DivisorReport { divisors }
    }

    pub fn rank(&self) -> usize {
        self.divisors.len()
    }

    pub fn divisors(&self) -> &[Int] {
        &self.divisors
    }

    /// `∏ e_i`, the index of the lattice in its saturation.
    pub fn index(&self) -> Int {
        self.divisors.iter().product()
    }

    /// Number of divisors divisible by `p`.
    pub fn count_divisible(&self, p: Prime) -> usize {
        let pz = Int::from(p.get());
        self.divisors.iter().filter(|d| (*d % &pz).is_nil()).count()
    }

    /// `|{i : p ∤ e_i}|`, the dimension of the reduction modulo `p`.
    pub fn dim_mod_p(&self, p: Prime) -> usize {
        self.rank() - self.count_divisible(p)
    }

    /// Divisors other than 1, for compact display.
    pub fn nontrivial(&self) -> Vec<Int> {
        self.divisors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

/// Nonzero invariant factors of an integer matrix.
pub fn snf_divisors(m: &IntMatrix) -> DivisorReport {
    let rows = m.row_vecs();
    let divisors = with_fallback(|| invariant_factors::<i64>(&rows), || invariant_factors::<Int>(&rows));
    DivisorReport::new(divisors)
}

fn invariant_factors<C: Coeff>(rows: &[Vec<Int>]) -> Checked<Vec<Int>> {
    let mut a: Vec<Vec<C>> = rows
        .iter()
        .map(|r| r.iter().map(from_int).collect::<Checked<Vec<C>>>())
        .collect::<Checked<_>>()?;
    a.retain(|r| r.iter().any(|x| !x.is_nil()));
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let abs = |x: &C| -> Checked<C> { if x.is_neg() { x.negate() } else { Ok(x.clone()) } };
    for t in 0..nrows.min(ncols) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize, C)> = None;
            for (i, row) in a.iter().enumerate().skip(t) {
                for (j, x) in row.iter().enumerate().skip(t) {
                    if x.is_nil() {
                        continue;
                    }
                    let ax = abs(x)?;
                    let smaller = match &best {
                        None => true,
                        Some((_, _, b)) => ax.minus(b)?.is_neg(),
                    };
                    if smaller {
                        best = Some((i, j, ax));
                    }
                }
            }
            let Some((pi, pj, _)) = best else {
                return finish(diag);
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let pivot = a[t][t].clone();
            let mut dirty = false;
            for i in t + 1..nrows {
                if a[i][t].is_nil() {
                    continue;
                }
                let q = a[i][t].fdiv(&pivot)?;
                let (head, tail) = a.split_at_mut(i);
                let prow = &head[t];
                for (x, y) in tail[0].iter_mut().zip(prow).skip(t) {
                    if !y.is_nil() {
                        *x = x.minus(&q.times(y)?)?;
                    }
                }
                dirty |= !a[i][t].is_nil();
            }
            for j in t + 1..ncols {
                if a[t][j].is_nil() {
                    continue;
                }
                let q = a[t][j].fdiv(&pivot)?;
                for row in a.iter_mut().skip(t) {
                    if !row[t].is_nil() {
                        let d = q.times(&row[t])?;
                        row[j] = row[j].minus(&d)?;
                    }
                }
                dirty |= !a[t][j].is_nil();
            }
            if dirty {
                continue;
            }
            // pivot must divide the whole trailing block
            let mut offender = None;
            'scan: for (i, row) in a.iter().enumerate().skip(t + 1) {
                for x in row.iter().skip(t + 1) {
                    if !x.fmod(&abs(&pivot)?)?.is_nil() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    let (head, tail) = a.split_at_mut(i);
                    for (x, y) in head[t].iter_mut().zip(&tail[0]).skip(t) {
                        *x = x.plus(y)?;
                    }
                }
                None => {
                    diag.push(abs(&pivot)?.to_int());
                    break;
                }
            }
        }
    }
    finish(diag)
}

fn finish(mut diag: Vec<Int>) -> Checked<Vec<Int>> {
    diag.sort();
    Ok(diag)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn diagonal_and_row() {
        let d = snf_divisors(&IntMatrix::from_rows(&[[2, 0], [0, 6]]));
        assert_eq!(d.divisors(), ints(&[2, 6]).as_slice());
        let r = snf_divisors(&IntMatrix::from_rows(&[[2, 4]]));
        assert_eq!(r.divisors(), ints(&[2]).as_slice());
        assert_eq!(r.index(), Int::from(2));
    }

    #[test]
    fn chain_is_enforced() {
        // diag(4, 6) has invariant factors (2, 12)
        let d = snf_divisors(&IntMatrix::from_rows(&[[4, 0], [0, 6]]));
        assert_eq!(d.divisors(), ints(&[2, 12]).as_slice());
        let p2 = Prime::new(2).unwrap();
        let p3 = Prime::new(3).unwrap();
        assert_eq!(d.dim_mod_p(p2), 0);
        assert_eq!(d.dim_mod_p(p3), 1);
    }

    #[test]
    fn zero_and_rank_deficient() {
        assert_eq!(snf_divisors(&IntMatrix::zeros(3, 3)).rank(), 0);
        let d = snf_divisors(&IntMatrix::from_rows(&[[1, 2, 3], [2, 4, 6], [1, 1, 1]]));
        assert_eq!(d.divisors(), ints(&[1, 1]).as_slice());
    }
}
