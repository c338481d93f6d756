//! The integral structure of `T(x)` for J(n, 2).

use serde::Serialize;

use crate::exactlin::{snf_divisors, DivisorReport, Int, IntMatrix, IntegerLattice};
use crate::schemes::{johnson, johnson_index, johnson_points, SubconstituentFrame};

use super::generators::{generators, GeneratorSet};
use super::integral::{close_over_integers, generator_lattice};
use super::TAlgebraError;

/// The 0/1 matrix exchanging `{a, i}` and `{b, i}` for every `i ∉ {a, b}`,
/// where `{a, b}` is the base point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JohnsonM {
    n: usize,
    base: (usize, usize),
    matrix: IntMatrix,
}

impl JohnsonM {
    /// `base` is a 2-subset of `{1, ..., n}`.
    pub fn new(n: usize, base: (usize, usize)) -> Self {
        let (a, b) = base;
        let size = n * (n - 1) / 2;
        let mut matrix = IntMatrix::zeros(size, size);
        for i in (1..=n).filter(|&i| i != a && i != b) {
            let (y, z) = (johnson_index(n, a, i), johnson_index(n, b, i));
            matrix.set(y, z, Int::from(1));
            matrix.set(z, y, Int::from(1));
        }
        JohnsonM { n, base, matrix }
    }

    /// `M` for a point index of J(n, 2).
    pub fn at_point(n: usize, point: usize) -> Self {
        JohnsonM::new(n, johnson_points(n)[point])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn base(&self) -> (usize, usize) {
        self.base
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }
}

/// A generator `E*_i σ_j E*_k` as `(i, j, k)`.
pub type Triple = (usize, usize, usize);

/// Which generator products leave `ZT'`, and the divisors of `ZT`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JohnsonProducts {
    pub n: usize,
    /// Ordered pairs of generator triples whose product is not in `ZT'`.
    pub exceptional: Vec<(Triple, Triple)>,
    pub dim_q: usize,
    pub divisors: DivisorReport,
}

const S11: (usize, usize, usize) = (1, 1, 1);
const S12: (usize, usize, usize) = (1, 2, 1);
const S10: (usize, usize, usize) = (1, 0, 1);

fn gen(gens: &GeneratorSet, t: (usize, usize, usize)) -> IntMatrix {
    gens.get(t).expect("the generator is nonzero for n >= 5").matrix(gens.order())
}

/// `c_0 A_0 + c_1 A_1 + ... + c_M M` with integer coefficients.
fn combo(terms: &[(i64, &IntMatrix)]) -> IntMatrix {
    let size = terms[0].1.rows();
    terms.iter().fold(IntMatrix::zeros(size, size), |acc, (c, m)| acc.add(&m.scale(&Int::from(*c))))
}

/// Checks the four displayed product identities for `E*_1 σ_j E*_1`, that
/// every generator product lies in `ZT' + Z(n-4)M`, and the descriptions of
/// `ZT` and of its saturation.
pub fn verify_johnson_products(n: usize) -> Result<JohnsonProducts, TAlgebraError> {
    let fail = |which: &str| TAlgebraError::IdentityFailed { which: which.to_string(), n };
    let scheme = johnson(n).map_err(|_| fail("n >= 5"))?;
    if n < 5 {
        return Err(fail("n >= 5"));
    }
    let frame = SubconstituentFrame::new(&scheme, 0).expect("point 0 exists");
    let gens = generators(&frame);
    let m = JohnsonM::at_point(n, 0);
    let m = m.matrix();
    let (s10, s11, s12) = (gen(&gens, S10), gen(&gens, S11), gen(&gens, S12));
    let k = n as i64 - 4;

    let identities: [(&str, IntMatrix, IntMatrix); 4] = [
        ("(E1 s1 E1)^2", s11.mul(&s11), combo(&[(n as i64 - 2, &s10), (k, &s11), (2, &s12), (-k, m)])),
        ("(E1 s1 E1)(E1 s2 E1)", s11.mul(&s12), combo(&[(1, &s11), (k, &s12), (k, m)])),
        ("(E1 s2 E1)(E1 s1 E1)", s12.mul(&s11), combo(&[(1, &s11), (k, &s12), (k, m)])),
        ("(E1 s2 E1)^2", s12.mul(&s12), combo(&[(n as i64 - 3, &s10), (k, &s11), (-k, m)])),
    ];
    for (which, lhs, rhs) in &identities {
        if lhs != rhs {
            return Err(fail(which));
        }
    }

    let zt_prime = generator_lattice(&gens);
    let lattice_plus = |scale: i64| {
        let extra = IntegerLattice::from_generators(m.rows() * m.cols(), &[m.scale(&Int::from(scale)).flatten()]);
        zt_prime.join(&extra)
    };
    let with_m = lattice_plus(k);
    let mut exceptional = Vec::new();
    for g in gens.generators() {
        for h in gens.generators() {
            let prod = g.matrix(gens.order()).mul(&h.matrix(gens.order())).flatten();
            if !zt_prime.contains(&prod) {
                if !with_m.contains(&prod) {
                    return Err(fail("every generator product lies in ZT' + Z(n-4)M"));
                }
                exceptional.push((g.triple, h.triple));
            }
        }
    }
    // Besides the four displayed products, the ones passing through the
    // second cell, (E1 s_j E2)(E2 s_j' E1), also pick up a multiple of M.
    let mut expected = Vec::new();
    for j in 1..=2 {
        for k2 in 1..=2 {
            for j2 in 1..=2 {
                expected.push(((1, j, k2), (k2, j2, 1)));
            }
        }
    }
    expected.sort();
    if exceptional != expected {
        return Err(fail("the products leaving ZT' are exactly (E1 s_j Ek)(Ek s_j' E1)"));
    }

    let zt = close_over_integers(&gens);
    if zt != lattice_plus(k) {
        return Err(fail("ZT = ZT' + Z(n-4)M"));
    }
    if zt.saturation() != lattice_plus(1) {
        return Err(fail("saturation = ZT' + ZM"));
    }
    let divisors = snf_divisors(&zt.basis_matrix());
    Ok(JohnsonProducts { n, exceptional, dim_q: zt.rank(), divisors })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m_is_a_symmetric_involution_on_the_first_cell() {
        let m = JohnsonM::at_point(7, 0);
        let mm = m.matrix().mul(m.matrix());
        assert_eq!(m.matrix().transpose(), *m.matrix());
        let s = johnson(7).unwrap();
        let f = SubconstituentFrame::new(&s, 0).unwrap();
        assert_eq!(mm, f.dual_idempotent(1));
        // {1,3} <-> {2,3}
        assert_eq!(*m.matrix().get(johnson_index(7, 1, 3), johnson_index(7, 2, 3)), Int::from(1));
    }

    #[test]
    fn johnson8_products() {
        let r = verify_johnson_products(8).unwrap();
        assert_eq!(r.exceptional.len(), 8);
        assert_eq!(r.dim_q, 16);
        assert_eq!(r.divisors.nontrivial(), vec![Int::from(4)]);
        assert_eq!(r.divisors.rank(), 16);
    }

    #[test]
    fn johnson5_is_saturated() {
        let r = verify_johnson_products(5).unwrap();
        assert!(r.divisors.nontrivial().is_empty());
        assert_eq!(r.dim_q, 15);
    }
}
