//! Shared test corpus and independent oracles.
#![allow(dead_code)]

use std::path::PathBuf;

use num_rational::BigRational;
use num_traits::{One, Zero};
use terwilliger::schemes::{
    chang_graphs, cycle, johnson, parse_graph_file, parse_scheme_file, rook4, scheme_from_srg, shrikhande,
    AssociationScheme, RelationTable,
};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

pub fn load_scheme_file(name: &str) -> Option<AssociationScheme> {
    let text = std::fs::read_to_string(data_path(name)).ok()?;
    Some(AssociationScheme::validate(parse_scheme_file(&text).expect("data file parses")).expect("data file is a scheme"))
}

pub fn load_graph_file(name: &str) -> Option<AssociationScheme> {
    let text = std::fs::read_to_string(data_path(name)).ok()?;
    Some(scheme_from_srg(&parse_graph_file(&text).expect("data file parses")).expect("strongly regular").0)
}

/// The thin scheme of a group given by its multiplication table and inverses:
/// `(x, y)` lies in relation `x⁻¹y`.
pub fn group_scheme(mul: impl Fn(usize, usize) -> usize, inv: impl Fn(usize) -> usize, order: usize) -> AssociationScheme {
    let entries = (0..order * order).map(|k| mul(inv(k / order), k % order)).collect();
    AssociationScheme::validate(RelationTable::new(order, order, entries).unwrap()).unwrap()
}

pub fn cyclic_group(n: usize) -> AssociationScheme {
    group_scheme(|a, b| (a + b) % n, |a| (n - a) % n, n)
}

/// S_3 with the identity permutation first.
pub fn symmetric_group3() -> AssociationScheme {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    let mul = |a: usize, b: usize| index([0, 1, 2].map(|i| perms[a][perms[b][i]]));
    let inv = |a: usize| {
        let mut q = [0; 3];
        for i in 0..3 {
            q[perms[a][i]] = i;
        }
        index(q)
    };
    group_scheme(mul, inv, 6)
}

/// The thin scheme of `Z_a × Z_b`.
pub fn product_group(a: usize, b: usize) -> AssociationScheme {
    let split = |g: usize| (g / b, g % b);
    let join = |(i, j): (usize, usize)| i * b + j;
    group_scheme(
        |g, h| {
            let ((i, j), (k, l)) = (split(g), split(h));
            join(((i + k) % a, (j + l) % b))
        },
        |g| {
            let (i, j) = split(g);
            join(((a - i) % a, (b - j) % b))
        },
        a * b,
    )
}

pub fn complete(n: usize) -> AssociationScheme {
    let entries = (0..n * n).map(|k| usize::from(k / n != k % n)).collect();
    AssociationScheme::validate(RelationTable::new(n, if n == 1 { 1 } else { 2 }, entries).unwrap()).unwrap()
}

/// Schemes with constructions in the crate or in the tests, plus the data files
/// that are present.
pub fn corpus() -> Vec<(String, AssociationScheme)> {
    let mut out: Vec<(String, AssociationScheme)> = vec![("K1".into(), complete(1)), ("K4".into(), complete(4))];
    for n in [2, 3, 4, 5, 6, 7, 9] {
        out.push((format!("Z{n}"), cyclic_group(n)));
    }
    out.push(("S3".into(), symmetric_group3()));
    out.push(("C5".into(), scheme_from_srg(&cycle(5)).unwrap().0));
    for n in 4..=10 {
        out.push((format!("J({n},2)"), johnson(n).unwrap()));
    }
    out.push(("rook4".into(), scheme_from_srg(&rook4()).unwrap().0));
    out.push(("shrikhande".into(), scheme_from_srg(&shrikhande()).unwrap().0));
    for (k, g) in chang_graphs().iter().enumerate() {
        out.push((format!("chang-{}", k + 1), scheme_from_srg(g).unwrap().0));
    }
    if let Some(s) = load_scheme_file("as15_5.txt") {
        out.push(("as15_5".into(), s));
    }
    for no in [9, 10] {
        if let Some(s) = load_graph_file(&format!("srg26_no{no:02}.txt")) {
            out.push((format!("srg26-{no}"), s));
        }
    }
    out
}

/// The products `E*_i σ_j E*_k` at `x`, read directly off the relation table.
pub fn naive_generators(s: &AssociationScheme, x: usize) -> Vec<Vec<Vec<u8>>> {
    let n = s.order();
    let r = s.rank();
    let mut out = Vec::new();
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let m: Vec<Vec<u8>> = (0..n)
                    .map(|y| {
                        (0..n)
                            .map(|z| u8::from(s.relation(x, y) == i && s.relation(y, z) == j && s.relation(x, z) == k))
                            .collect()
                    })
                    .collect();
                if m.iter().flatten().any(|&e| e == 1) {
                    out.push(m);
                }
            }
        }
    }
    out
}

#[allow(clippy::needless_range_loop)]
fn rank_q(vectors: &[Vec<BigRational>]) -> usize {
    let mut rows: Vec<Vec<BigRational>> = vectors.to_vec();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for i in 0..rows.len() {
            if i != rank && !rows[i][c].is_zero() {
                let f = rows[i][c].clone() / pivot.clone();
                for j in c..cols {
                    let d = rows[rank][j].clone() * f.clone();
                    rows[i][j] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[allow(clippy::needless_range_loop)]
fn rank_f2(vectors: &[Vec<u8>]) -> usize {
    let mut rows: Vec<Vec<u8>> = vectors.to_vec();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][c] == 1) else { continue };
        rows.swap(rank, p);
        for i in 0..rows.len() {
            if i != rank && rows[i][c] == 1 {
                for j in c..cols {
                    rows[i][j] ^= rows[rank][j];
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Keeps every pairwise product that raises the rank, recomputing the rank
/// from scratch each time, until a full pass adds nothing.
fn naive_closure<T: Clone>(
    seeds: Vec<Vec<Vec<T>>>,
    mul: impl Fn(&[Vec<T>], &[Vec<T>]) -> Vec<Vec<T>>,
    rank: impl Fn(&[Vec<T>]) -> usize,
) -> usize {
    let flat = |m: &Vec<Vec<T>>| m.iter().flatten().cloned().collect::<Vec<T>>();
    let mut span: Vec<Vec<Vec<T>>> = Vec::new();
    let mut flats: Vec<Vec<T>> = Vec::new();
    let consider = |m: Vec<Vec<T>>, span: &mut Vec<Vec<Vec<T>>>, flats: &mut Vec<Vec<T>>| {
        let before = rank(flats);
        flats.push(flat(&m));
        if rank(flats) > before {
            span.push(m);
            true
        } else {
            flats.pop();
            false
        }
    };
    for m in seeds {
        consider(m, &mut span, &mut flats);
    }
    loop {
        let mut grew = false;
        let current = span.clone();
        for a in &current {
            for b in &current {
                grew |= consider(mul(a, b), &mut span, &mut flats);
            }
        }
        if !grew {
            return span.len();
        }
    }
}

fn identity_u8(n: usize) -> Vec<Vec<u8>> {
    (0..n).map(|i| (0..n).map(|j| u8::from(i == j)).collect()).collect()
}

pub fn naive_dim_q(s: &AssociationScheme, x: usize) -> usize {
    let to_q = |m: &Vec<Vec<u8>>| -> Vec<Vec<BigRational>> {
        m.iter()
            .map(|r| r.iter().map(|&e| if e == 1 { BigRational::one() } else { BigRational::zero() }).collect())
            .collect()
    };
    let mut seeds = vec![to_q(&identity_u8(s.order()))];
    seeds.extend(naive_generators(s, x).iter().map(to_q));
    let mul = |a: &[Vec<BigRational>], b: &[Vec<BigRational>]| -> Vec<Vec<BigRational>> {
        let n = a.len();
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).fold(BigRational::zero(), |acc, k| acc + a[i][k].clone() * b[k][j].clone())).collect())
            .collect()
    };
    naive_closure(seeds, mul, rank_q)
}

pub fn naive_dim_f2(s: &AssociationScheme, x: usize) -> usize {
    let mut seeds = vec![identity_u8(s.order())];
    seeds.extend(naive_generators(s, x));
    let mul = |a: &[Vec<u8>], b: &[Vec<u8>]| -> Vec<Vec<u8>> {
        let n = a.len();
        (0..n).map(|i| (0..n).map(|j| (0..n).fold(0, |acc, k| acc ^ (a[i][k] & b[k][j]))).collect()).collect()
    };
    naive_closure(seeds, mul, rank_f2)
}
