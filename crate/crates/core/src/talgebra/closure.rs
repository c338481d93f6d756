use crate::exactlin::{Domain, Echelon, IntMatrix};

use super::field::MatrixField;
use super::generators::GeneratorSet;

/// An echelon basis of a space of `N × N` matrices over a field.
#[derive(Debug, Clone)]
pub struct AlgebraBasis<F: MatrixField> {
    field: F,
    basis: F::Basis,
}

impl<F: MatrixField> AlgebraBasis<F> {
    /// The span of `vectors` (not closed under anything).
    pub fn span(field: F, vectors: impl IntoIterator<Item = F::Vector>) -> Self {
        let mut basis = field.empty_basis();
        for v in vectors {
            basis.insert(v);
        }
        AlgebraBasis { field, basis }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn domain(&self) -> Domain {
        self.field.domain()
    }

    /// Matrix size `N`.
    pub fn order(&self) -> usize {
        self.field.order()
    }

    pub fn dim(&self) -> usize {
        self.basis.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn elements(&self) -> &[F::Vector] {
        self.basis.rows()
    }

    pub fn echelon(&self) -> &F::Basis {
        &self.basis
    }

    pub fn contains(&self, v: &F::Vector) -> bool {
        self.basis.contains(v)
    }

    pub fn contains_all(&self, other: &AlgebraBasis<F>) -> bool {
        other.elements().iter().all(|v| self.contains(v))
    }

    pub fn to_int_matrices(&self) -> Vec<IntMatrix> {
        self.elements().iter().map(|v| self.field.to_int(v)).collect()
    }

    /// Every product of two basis elements lies in the span.
    pub fn is_closed(&self) -> bool {
        let els = self.elements();
        els.iter().all(|a| els.iter().all(|b| self.contains(&self.field.mul(a, b))))
    }

    pub fn contains_identity(&self) -> bool {
        self.contains(&self.field.identity())
    }

    pub fn is_transpose_closed(&self) -> bool {
        self.elements().iter().all(|a| self.contains(&self.field.transpose(a)))
    }
}

/// The smallest unital subalgebra containing `seeds`.
///
/// Products are only formed between newly added elements and everything
/// seen so far, so each pair is multiplied once per order.
pub fn close_vectors<F: MatrixField>(field: F, seeds: impl IntoIterator<Item = F::Vector>) -> AlgebraBasis<F> {
    let mut basis = field.empty_basis();
    let mut elems: Vec<F::Vector> = Vec::new();
    let mut fresh: Vec<F::Vector> = Vec::new();
    for v in std::iter::once(field.identity()).chain(seeds) {
        if basis.insert(v.clone()) {
            fresh.push(v);
        }
    }
    while !fresh.is_empty() {
        let start = elems.len();
        elems.append(&mut fresh);
        for i in start..elems.len() {
            for j in 0..elems.len() {
                // pairs of two fresh elements are handled once, from the larger index
                if j >= start && j > i {
                    continue;
                }
                let mut products = vec![field.mul(&elems[i], &elems[j])];
                if i != j {
                    products.push(field.mul(&elems[j], &elems[i]));
                }
                for prod in products {
                    if basis.insert(prod.clone()) {
                        fresh.push(prod);
                    }
                }
            }
        }
    }
    AlgebraBasis { field, basis }
}

/// The Terwilliger algebra over `field`: the unital closure of the generators.
pub fn close_over_field<F: MatrixField>(gens: &GeneratorSet, field: F) -> AlgebraBasis<F> {
    assert_eq!(gens.order(), field.order(), "generator and field sizes differ");
    let seeds: Vec<F::Vector> = gens.generators().iter().map(|g| field.from_entries(&g.ones)).collect();
    close_vectors(field, seeds)
}
