//! Terwilliger (subconstituent) algebras of association schemes over the
//! rationals, the integers and prime fields.

pub mod exactlin;
pub mod schemes;
pub mod talgebra;
