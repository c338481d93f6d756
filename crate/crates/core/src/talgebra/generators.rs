use serde::Serialize;

use crate::exactlin::{Int, IntMatrix};
use crate::schemes::SubconstituentFrame;

/// The 0/1 matrix `E*_i σ_j E*_k`, kept as its list of ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub triple: (usize, usize, usize),
    /// `(row, col)` positions of the ones, row-major.
    pub ones: Vec<(usize, usize)>,
}

impl Generator {
    pub fn matrix(&self, n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for &(r, c) in &self.ones {
            m.set(r, c, Int::from(1));
        }
        m
    }
}

/// The nonzero triple products of a frame, plus the identity.
#[derive(Debug, Clone, Serialize)]
pub struct GeneratorSet {
    order: usize,
    generators: Vec<Generator>,
    zero_triples: Vec<(usize, usize, usize)>,
}

impl GeneratorSet {
    /// Matrix size `N`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Nonzero triples in lexicographic order of `(i, j, k)`.
    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Triples whose product vanishes.
    pub fn zero_triples(&self) -> &[(usize, usize, usize)] {
        &self.zero_triples
    }

    pub fn get(&self, triple: (usize, usize, usize)) -> Option<&Generator> {
        self.generators.iter().find(|g| g.triple == triple)
    }

    /// `I_N`, which is `Σ_s E*_s σ_0 E*_s`.
    pub fn identity(&self) -> Generator {
        Generator { triple: (0, 0, 0), ones: (0..self.order).map(|i| (i, i)).collect() }
    }

    pub fn matrices(&self) -> Vec<IntMatrix> {
        self.generators.iter().map(|g| g.matrix(self.order)).collect()
    }
}

pub fn generators(frame: &SubconstituentFrame<'_>) -> GeneratorSet {
    let r = frame.rank();
    let scheme = frame.scheme();
    let mut generators = Vec::new();
    let mut zero_triples = Vec::new();
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let ones: Vec<(usize, usize)> = frame
                    .cell(i)
                    .iter()
                    .flat_map(|&y| frame.cell(k).iter().map(move |&z| (y, z)))
                    .filter(|&(y, z)| scheme.relation(y, z) == j)
                    .collect();
                if ones.is_empty() {
                    zero_triples.push((i, j, k));
                } else {
                    generators.push(Generator { triple: (i, j, k), ones });
                }
            }
        }
    }
    GeneratorSet { order: frame.order(), generators, zero_triples }
}
