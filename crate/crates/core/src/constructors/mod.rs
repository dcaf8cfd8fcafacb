//! Builders for concrete algebras: group algebras, association schemes,
//! copivotal coalgebras, and the built-in example catalog.

mod catalog;
mod coalgebra;
mod group;
mod scheme;

pub use catalog::{builtin, catalog};
pub use coalgebra::{
    coalgebra_regular_dual_indicator, coalgebra_regular_indicator, comodule_to_module, dual_coalgebra,
    dualize_coalgebra, regular_comodule, CopivotalCoalgebra,
};
pub use group::{group_algebra, group_grouplike, group_involution, CayleyTable};
pub use scheme::{scheme_involution, scheme_to_grouplike, SchemeAlgebra, SchemeRelations};

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::pivotal::PivotalAlgebra;

/// Extends generator images to every basis element, for algebras whose basis is
/// closed under multiplication (group-like bases with coefficient 1).
/// `R(b_k b_g) = R(b_k) R(b_g)` is applied breadth-first from the unit.
pub fn extend_from_generators(a: &PivotalAlgebra, gens: &[(usize, Matrix)]) -> Result<Vec<Matrix>> {
    let n = a.dim();
    let field = a.field();
    let unit = a
        .unit()
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .collect::<Vec<_>>();
    let e = match unit.as_slice() {
        [(i, x)] if x.is_one() => *i,
        _ => return Err(Error::Structure("generators need a unit that is a basis element".into())),
    };
    let d = gens.first().map_or(0, |(_, m)| m.rows());
    let mut images: Vec<Option<Matrix>> = vec![None; n];
    images[e] = Some(Matrix::identity(d, field));
    let mut queue = VecDeque::from([e]);
    while let Some(k) = queue.pop_front() {
        for (g, rg) in gens {
            let target = match a.product(k, *g) {
                [(m, c)] if c.is_one() => *m,
                _ => {
                    return Err(Error::Structure(format!(
                        "{} * {} is not a basis element",
                        a.labels()[k],
                        a.labels()[*g]
                    )))
                }
            };
            if images[target].is_none() {
                let rk = images[k].as_ref().expect("visited");
                images[target] = Some(rk.mul(rg)?);
                queue.push_back(target);
            }
        }
    }
    images
        .into_iter()
        .enumerate()
        .map(|(i, m)| m.ok_or_else(|| Error::Structure(format!("generators do not reach {}", a.labels()[i]))))
        .collect()
}
