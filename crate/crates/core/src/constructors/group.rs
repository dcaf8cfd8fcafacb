use crate::error::{Error, Result};
use crate::formulas::GroupLikeData;
use crate::linalg::Matrix;
use crate::pivotal::PivotalAlgebra;
use crate::scalars::{FieldTag, Rational, Scalar};

/// Multiplication table of a finite group: `table[i][j]` is the index of `g_i g_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidCayleyTable(msg.into())
}

fn is_perm(n: usize, xs: impl IntoIterator<Item = usize>) -> bool {
    let mut seen = vec![false; n];
    xs.into_iter().all(|x| x < n && !std::mem::replace(&mut seen[x], true))
}

impl CayleyTable {
    /// Validates the table: Latin square, two-sided identity, associativity.
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<CayleyTable> {
        let n = labels.len();
        if n == 0 {
            return Err(invalid("empty group"));
        }
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(invalid(format!("table must be {n}x{n}")));
        }
        for i in 0..n {
            if !is_perm(n, table[i].iter().copied()) {
                return Err(invalid(format!("row {i} is not a permutation")));
            }
            if !is_perm(n, (0..n).map(|r| table[r][i])) {
                return Err(invalid(format!("column {i} is not a permutation")));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| invalid("no identity element"))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(invalid(format!(
                            "not associative at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        let inverse = (0..n)
            .map(|a| (0..n).find(|&b| table[a][b] == identity).expect("Latin square"))
            .collect();
        Ok(CayleyTable {
            labels,
            table,
            identity,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Number of `x` with `x² = e`.
    pub fn count_square_roots_of_identity(&self) -> usize {
        (0..self.order())
            .filter(|&x| self.mul(x, x) == self.identity)
            .count()
    }
}

/// `kG` with `S(x) = x⁻¹`, `g = e`, `Δ(x) = x ⊗ x`, `ε ≡ 1`, `Λ = |G|⁻¹ Σ x` and `φ = δ_e`.
pub fn group_algebra(table: &CayleyTable, field: FieldTag) -> Result<PivotalAlgebra> {
    let n = table.order();
    let one = Scalar::one(field);
    let mult = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, table.mul(i, j), one.clone()))
        .collect();
    let e = table.identity();
    let delta_e: Vec<Scalar> = (0..n)
        .map(|i| if i == e { one.clone() } else { Scalar::zero(field) })
        .collect();
    let antipode = Matrix::permutation(&table.inverse, field);
    let lambda = Scalar::from_rational(field, Rational::new(1.into(), (n as i64).into()));
    PivotalAlgebra::new(field, table.labels.clone(), mult, delta_e.clone(), antipode, delta_e.clone())?
        .with_comultiplication((0..n).map(|k| (k, k, k, one.clone())).collect())?
        .with_counit(vec![one.clone(); n])?
        .with_integral(vec![lambda; n])?
        .with_trace_form(delta_e)
}

/// Group elements as a group-like basis: `ε ≡ 1`, `x* = x⁻¹`.
pub fn group_grouplike(table: &CayleyTable, field: FieldTag) -> Result<GroupLikeData> {
    let a = group_algebra(table, field)?;
    GroupLikeData::from_algebra(&a, vec![Scalar::one(field); table.order()], table.inverse.clone())
}

/// Permutation matrix of a group automorphism of order dividing 2.
pub fn group_involution(table: &CayleyTable, perm: &[usize], field: FieldTag) -> Result<Matrix> {
    let n = table.order();
    if perm.len() != n || perm.iter().any(|&p| p >= n) {
        return Err(Error::NotAutomorphism(format!("expected a permutation of {n} elements")));
    }
    let mut seen = vec![false; n];
    if perm.iter().any(|&p| std::mem::replace(&mut seen[p], true)) {
        return Err(Error::NotAutomorphism("map is not a bijection".into()));
    }
    for a in 0..n {
        for b in 0..n {
            if perm[table.mul(a, b)] != table.mul(perm[a], perm[b]) {
                return Err(Error::NotAutomorphism(format!(
                    "tau({0}{1}) != tau({0})tau({1})",
                    table.labels[a], table.labels[b]
                )));
            }
        }
    }
    if let Some(a) = (0..n).find(|&a| perm[perm[a]] != a) {
        return Err(Error::NotInvolutive(format!("tau^2({}) != {}", table.labels[a], table.labels[a])));
    }
    Ok(Matrix::permutation(perm, field))
}
