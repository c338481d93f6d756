//! The integral form `ZT(x)` as a lattice in `Z^{N²}`.

use crate::exactlin::{from_int, with_fallback, Checked, Coeff, HnfBuilder, Int, IntMatrix, IntegerLattice};

use super::generators::{Generator, GeneratorSet};

/// `v · g` for a flattened `n × n` matrix `v` and a 0/1 generator `g`.
fn right_mul<C: Coeff>(v: &[C], g: &Generator, n: usize) -> Checked<Vec<C>> {
    let mut out = vec![C::nil(); n * n];
    for &(c, b) in &g.ones {
        for a in 0..n {
            let x = &v[a * n + c];
            if !x.is_nil() {
                out[a * n + b] = out[a * n + b].plus(x)?;
            }
        }
    }
    Ok(out)
}

fn dense<C: Coeff>(g: &Generator, n: usize) -> Vec<C> {
    let mut v = vec![C::nil(); n * n];
    for &(r, c) in &g.ones {
        v[r * n + c] = C::from_i64(1);
    }
    v
}

fn close_with<C: Coeff>(gens: &GeneratorSet) -> Checked<IntegerLattice> {
    let n = gens.order();
    let mut hnf = HnfBuilder::<C>::new(n * n);
    hnf.insert(&dense(&gens.identity(), n))?;
    for g in gens.generators() {
        hnf.insert(&dense(g, n))?;
    }
    // The lattice contains I, so once L·g ⊆ L for every generator g it
    // contains every word in the generators and equals ZT(x).
    loop {
        let snapshot: Vec<Vec<C>> = hnf.rows().to_vec();
        let mut grew = false;
        for row in &snapshot {
            for g in gens.generators() {
                grew |= hnf.insert(&right_mul(row, g, n)?)?;
            }
        }
        if !grew {
            return Ok(hnf.to_lattice());
        }
    }
}

/// `ZT(x)`: the ring generated by the triple products over the integers.
pub fn close_over_integers(gens: &GeneratorSet) -> IntegerLattice {
    with_fallback(|| close_with::<i64>(gens), || close_with::<Int>(gens))
}

/// The lattice `ZT'` spanned by the generators and the identity, without products.
pub fn generator_lattice(gens: &GeneratorSet) -> IntegerLattice {
    let n = gens.order();
    let mut vecs: Vec<Vec<Int>> = vec![dense(&gens.identity(), n)];
    vecs.extend(gens.generators().iter().map(|g| dense(g, n)));
    IntegerLattice::from_generators(n * n, &vecs)
}

fn ring_check<C: Coeff>(lattice: &IntegerLattice, n: usize) -> Checked<bool> {
    let hnf = lattice.builder::<C>()?;
    let rows: Vec<IntMatrix> = lattice.basis().iter().map(|r| IntMatrix::unflatten(n, r)).collect();
    for a in &rows {
        for b in &rows {
            let prod: Vec<C> = a.mul(b).flatten().iter().map(from_int).collect::<Checked<_>>()?;
            if !hnf.contains(&prod)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Is the lattice of flattened `n × n` matrices closed under multiplication?
pub fn is_ring(lattice: &IntegerLattice, n: usize) -> bool {
    with_fallback(|| ring_check::<i64>(lattice, n), || ring_check::<Int>(lattice, n))
}
