use num_rational::BigRational;
use num_traits::One;

use super::RationalMatrix;
use crate::algebra::WeightTriple;
use crate::graph::LabelledGraph;
use crate::{Error, Result};

/// `Deg - Adj` of the loopless graph, edge `{u, v}` with label `l` weighing `w(l)`.
pub fn weighted_laplacian(g: &LabelledGraph, w: &WeightTriple) -> Result<RationalMatrix> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut m = RationalMatrix::zeros(g.num_vertices());
    for e in g.non_loop_edges() {
        let x = w.get(e.label);
        m.add_at(e.u, e.u, x);
        m.add_at(e.v, e.v, x);
        m.add_at(e.u, e.v, &-x);
        m.add_at(e.v, e.u, &-x);
    }
    Ok(m)
}

/// Cofactor obtained by deleting row and column `i`.
pub fn cofactor_at(g: &LabelledGraph, w: &WeightTriple, i: usize) -> Result<BigRational> {
    let l = weighted_laplacian(g, w)?;
    if l.dim() == 1 {
        return Ok(BigRational::one());
    }
    Ok(l.minor(i).determinant())
}

/// Weighted spanning-tree generating function at `w` via the first canonical vertex.
pub fn tree_gf_cofactor(g: &LabelledGraph, w: &WeightTriple) -> Result<BigRational> {
    cofactor_at(g, w, 0)
}
