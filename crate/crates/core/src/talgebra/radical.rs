//! Jacobson radicals of matrix algebras over prime fields.
//!
//! With `â` the lift of `a ∈ M_n(F_p)` to entries in `0..p`, let
//! `g_i(a) = (Tr(â^{p^i}) mod p^{i+1}) / p^i`. Starting from `I_{-1} = A`, put
//! `I_i = {a ∈ I_{i-1} : g_i(ab) = 0 for all b ∈ A}`. Each `g_i` is linear on
//! `I_{i-1}`, so every step is a kernel computation, and `I_l = Rad(A)` for
//! the largest `l` with `p^l ≤ n`.

use serde::Serialize;

use crate::exactlin::{Echelon, Fp, FpEchelon, FpMatrix};

use super::closure::AlgebraBasis;
use super::field::{MatrixField, ModularField, PrimeMatrices};

/// `n × n` residue matrix product modulo `m`.
fn mul_mod(a: &[u64], b: &[u64], n: usize, m: u64) -> Vec<u64> {
    let mut out = vec![0u64; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] = (out[i * n + j] + x * b[k * n + j]) % m;
            }
        }
    }
    out
}

/// `Tr(c^e) mod m` for a lifted matrix `c`.
fn trace_power(c: &[u32], n: usize, e: u64, m: u64) -> u64 {
    let mut base: Vec<u64> = c.iter().map(|&x| u64::from(x) % m).collect();
    let mut acc: Option<Vec<u64>> = None;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = Some(match acc {
                None => base.clone(),
                Some(a) => mul_mod(&a, &base, n, m),
            });
        }
        e >>= 1;
        if e > 0 {
            base = mul_mod(&base, &base, n, m);
        }
    }
    let acc = acc.expect("exponent is positive");
    (0..n).map(|i| acc[i * n + i]).sum::<u64>() % m
}

/// `Tr(ab)` over `F_p` without forming the product.
fn trace_of_product(fp: &Fp, a: &[u32], b: &[u32], n: usize) -> u32 {
    let mut t = 0u64;
    for i in 0..n {
        for k in 0..n {
            t += u64::from(a[i * n + k]) * u64::from(b[k * n + i]);
        }
    }
    fp.reduce(t)
}

/// Radical of the algebra spanned by `basis` (row-major `n × n` residue
/// matrices over `fp`), as a basis of residue matrices.
pub fn radical_of_span(fp: Fp, n: usize, basis: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let p = u64::from(fp.modulus());
    let mut levels = 0u32;
    while p.pow(levels + 1) <= n as u64 {
        levels += 1;
    }
    let mut ideal: Vec<Vec<u32>> = basis.to_vec();
    for i in 0..=levels {
        if ideal.is_empty() {
            break;
        }
        let pi = p.pow(i);
        let modulus = pi * p;
        let gram: Vec<Vec<u32>> = ideal
            .iter()
            .map(|a| {
                basis
                    .iter()
                    .map(|b| {
                        if i == 0 {
                            return trace_of_product(&fp, a, b, n);
                        }
                        let mut c = vec![0u32; n * n];
                        crate::exactlin::mul_into(&fp, n, n, n, a, b, &mut c);
                        let t = trace_power(&c, n, pi, modulus);
                        assert_eq!(t % pi, 0, "trace congruence failed; the input is not an algebra");
                        fp.reduce(t / pi)
                    })
                    .collect()
            })
            .collect();
        let kernel = FpMatrix::from_rows(fp, basis.len(), &gram).left_kernel();
        ideal = kernel
            .iter()
            .map(|y| {
                let mut v = vec![0u32; n * n];
                for (coef, a) in y.iter().zip(&ideal) {
                    if *coef == 0 {
                        continue;
                    }
                    for (dst, &x) in v.iter_mut().zip(a) {
                        *dst = fp.add(*dst, fp.mul(*coef, x));
                    }
                }
                v
            })
            .collect();
    }
    ideal
}

fn residues_of<F: ModularField>(a: &AlgebraBasis<F>) -> Vec<Vec<u32>> {
    a.elements().iter().map(|v| a.field().residues(v)).collect()
}

/// The Jacobson radical of an algebra over a prime field.
pub fn jacobson_radical<F: ModularField>(a: &AlgebraBasis<F>) -> AlgebraBasis<F> {
    let f = a.field();
    let fp = Fp::new(f.prime());
    let rad = radical_of_span(fp, f.order(), &residues_of(a));
    AlgebraBasis::span(f.clone(), rad.iter().map(|r| f.from_residues(r)))
}

pub fn is_semisimple<F: ModularField>(a: &AlgebraBasis<F>) -> bool {
    jacobson_radical(a).is_zero()
}

/// Outcome of the independent checks on a computed radical `J ⊆ A`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadicalVerification {
    pub radical_dim: usize,
    /// `AJ ⊆ J` and `JA ⊆ J`.
    pub two_sided_ideal: bool,
    /// The least `l` with `J^l = 0`, if found within `dim J + 1` steps.
    pub nilpotency_index: Option<usize>,
    /// Each basis element and a few fixed combinations are nilpotent matrices.
    pub elementwise_nilpotent: bool,
    /// Dimension of the radical of `A/J`, computed on its regular representation.
    pub quotient_radical_dim: usize,
}

impl RadicalVerification {
    pub fn passed(&self) -> bool {
        self.two_sided_ideal
            && self.nilpotency_index.is_some()
            && self.elementwise_nilpotent
            && self.quotient_radical_dim == 0
    }
}

fn is_nilpotent_matrix(f: &PrimeMatrices, m: &[u32]) -> bool {
    // a nilpotent n × n matrix satisfies m^n = 0; square until the exponent reaches n
    let mut power = m.to_vec();
    let mut e = 1;
    while e < f.order() {
        power = f.mul(&power, &power);
        e *= 2;
    }
    f.is_zero(&power)
}

/// Runs the ideal, nilpotency, elementwise and quotient checks on `j ⊆ a`.
pub fn verify_radical<F: ModularField>(a: &AlgebraBasis<F>, j: &AlgebraBasis<F>) -> RadicalVerification {
    let n = a.order();
    let f = PrimeMatrices::new(n, a.field().prime());
    let fp = f.fp();
    let a_res = residues_of(a);
    let j_res = residues_of(j);
    let j_span = AlgebraBasis::span(f, j_res.iter().cloned());

    let two_sided_ideal = j_res.len() == j_span.dim()
        && j_res.iter().all(|x| a.contains(&a.field().from_residues(x)))
        && a_res
            .iter()
            .all(|x| j_res.iter().all(|y| j_span.contains(&f.mul(x, y)) && j_span.contains(&f.mul(y, x))));

    // powers J^k = span of products of k elements of J
    let mut nilpotency_index = None;
    let mut power: Vec<Vec<u32>> = j_res.clone();
    for k in 1..=j_res.len() + 1 {
        if power.is_empty() {
            nilpotency_index = Some(k);
            break;
        }
        let next = AlgebraBasis::span(f, power.iter().flat_map(|x| j_res.iter().map(move |y| f.mul(x, y))));
        power = next.elements().to_vec();
    }
    if j_res.is_empty() {
        nilpotency_index = Some(1);
    }

    let mut samples = j_res.clone();
    if !j_res.is_empty() {
        let sum = j_res.iter().skip(1).fold(j_res[0].clone(), |acc, x| f.add(&acc, x));
        let alternating = j_res.iter().enumerate().fold(f.zero(), |acc, (k, x)| {
            let coef = (k as u32 % (fp.modulus() - 1).max(1)) + 1;
            f.add(&acc, &x.iter().map(|&e| fp.mul(e, coef % fp.modulus())).collect())
        });
        samples.push(sum);
        samples.push(alternating);
    }
    let elementwise_nilpotent = samples.iter().all(|m| is_nilpotent_matrix(&f, m));

    let quotient_radical_dim = quotient_radical(fp, n, &a_res, &j_res);
    RadicalVerification {
        radical_dim: j_res.len(),
        two_sided_ideal,
        nilpotency_index,
        elementwise_nilpotent,
        quotient_radical_dim,
    }
}

/// Radical dimension of `A/J` via the left regular representation of the quotient.
fn quotient_radical(fp: Fp, n: usize, a: &[Vec<u32>], j: &[Vec<u32>]) -> usize {
    let f = PrimeMatrices::new(n, fp_prime(fp));
    let mut jech = FpEchelon::new(fp, n * n);
    for x in j {
        jech.insert(x.clone());
    }
    let canonical = |v: &Vec<u32>| {
        let mut w = v.clone();
        jech.reduce(&mut w);
        w
    };
    let mut q = FpEchelon::new(fp, n * n);
    for x in a {
        q.insert(canonical(x));
    }
    let reps: Vec<Vec<u32>> = q.rows().to_vec();
    let d = reps.len();
    let regular: Vec<Vec<u32>> = reps
        .iter()
        .map(|x| {
            let mut m = vec![0u32; d * d];
            for (col, y) in reps.iter().enumerate() {
                let coords = q.coordinates(&canonical(&f.mul(x, y)));
                for (row, c) in coords.into_iter().enumerate() {
                    m[row * d + col] = c;
                }
            }
            m
        })
        .collect();
    radical_of_span(fp, d, &regular).len()
}

fn fp_prime(fp: Fp) -> crate::exactlin::Prime {
    crate::exactlin::Prime::new(fp.modulus()).expect("field modulus is prime")
}
