//! Dense exact linear algebra over any [`FieldTag`].
//!
//! Kernels and ranks come from a reduced row echelon form computed by
//! Gauss-Jordan elimination with eager normalization. Among the rows eligible
//! as a pivot, the one with the fewest nonzero entries is taken, which keeps the
//! large sparse invariance systems from filling in. The reduced form itself is
//! unique, so the pivot choice never changes the output. Determinants use
//! fraction-free Bareiss elimination; over `Q(q)` each row is first cleared to
//! polynomials so every division is an exact polynomial division.

use std::fmt;

use thiserror::Error;

use crate::scalars::{FieldTag, Poly, RatFun, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("target vector is not in the span of the basis")]
    NotInSpan,
    #[error(transparent)]
    Field(#[from] ScalarError),
}

type LResult<T> = Result<T, LinalgError>;

fn mismatch(msg: impl Into<String>) -> LinalgError {
    LinalgError::DimensionMismatch(msg.into())
}

/// A dense row-major matrix whose entries all live in `field`.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldTag,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, field: FieldTag) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            data: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(n: usize, field: FieldTag) -> Matrix {
        let mut m = Matrix::zeros(n, n, field);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one(field);
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        field: FieldTag,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix {
            rows,
            cols,
            field,
            data,
        }
    }

    /// Builds a matrix from rows, coercing every entry into `field`.
    pub fn from_rows(field: FieldTag, rows: Vec<Vec<Scalar>>) -> LResult<Matrix> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(mismatch(format!(
                    "row {i} has {} entries, expected {ncols}",
                    row.len()
                )));
            }
            for x in row {
                data.push(x.coerce(field)?);
            }
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            field,
            data,
        })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(field: FieldTag, rows: &[&[i64]]) -> Matrix {
        let r = rows
            .iter()
            .map(|row| row.iter().map(|&x| Scalar::from_int(field, x)).collect())
            .collect();
        Matrix::from_rows(field, r).expect("consistent integer rows")
    }

    /// Reshapes a row-major vector.
    pub fn from_flat(rows: usize, cols: usize, field: FieldTag, data: Vec<Scalar>) -> LResult<Matrix> {
        if data.len() != rows * cols {
            return Err(mismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        let data = data
            .into_iter()
            .map(|x| x.coerce(field))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix {
            rows,
            cols,
            field,
            data,
        })
    }

    /// Permutation matrix sending basis vector `j` to `perm[j]`.
    pub fn permutation(perm: &[usize], field: FieldTag) -> Matrix {
        let n = perm.len();
        let mut m = Matrix::zeros(n, n, field);
        for (j, &i) in perm.iter().enumerate() {
            m.data[i * n + j] = Scalar::one(field);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Row-major entries.
    pub fn as_flat(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Matrix) -> LResult<Matrix> {
        self.check_same_shape(other, "add")?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Matrix) -> LResult<Matrix> {
        self.check_same_shape(other, "sub")?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    fn check_same_shape(&self, other: &Matrix, op: &str) -> LResult<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(mismatch(format!(
                "{op}: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> LResult<Matrix> {
        if self.cols != other.rows {
            return Err(mismatch(format!(
                "mul: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> LResult<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(mismatch(format!(
                "mul_vec: {} columns, vector of length {}",
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(self.field), |acc, (a, b)| &acc + &(a * b))
            })
            .collect())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, self.field, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn trace(&self) -> LResult<Scalar> {
        if !self.is_square() {
            return Err(mismatch(format!("trace of {}x{}", self.rows, self.cols)));
        }
        Ok((0..self.rows).fold(Scalar::zero(self.field), |acc, i| &acc + self.get(i, i)))
    }

    /// Basis of `{x : A x = 0}`: one vector per free column in ascending order,
    /// each scaled so its first nonzero entry is 1.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let mut rows = self.to_rows();
        let pivots = reduce_rows(&mut rows, self.cols);
        let mut is_pivot = vec![None; self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            is_pivot[p] = Some(i);
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![Scalar::zero(self.field); self.cols];
            v[free] = Scalar::one(self.field);
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -&rows[i][free];
            }
            basis.push(normalize_leading(v));
        }
        basis
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.to_rows();
        reduce_rows(&mut rows, self.cols).len()
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows = self.to_rows();
        let pivots = reduce_rows(&mut rows, self.cols);
        let m = Matrix::from_rows(self.field, rows).unwrap_or_else(|_| Matrix::zeros(0, self.cols, self.field));
        (m, pivots)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det_bareiss(&self) -> LResult<Scalar> {
        if !self.is_square() {
            return Err(mismatch(format!("det of {}x{}", self.rows, self.cols)));
        }
        if self.rows == 0 {
            return Ok(Scalar::one(self.field));
        }
        if self.field == FieldTag::RationalFunction {
            return Ok(self.det_bareiss_polynomial());
        }
        let mut a = self.to_rows();
        Ok(bareiss(&mut a, Scalar::one(self.field)).unwrap_or_else(|| Scalar::zero(self.field)))
    }

    fn det_bareiss_polynomial(&self) -> Scalar {
        // Clear each row to a polynomial row; det(A) = det(P) / prod(row multipliers).
        let mut multiplier = RatFun::one();
        let mut rows: Vec<Vec<Poly>> = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let entries: Vec<RatFun> = self
                .row(r)
                .iter()
                .map(|x| match x.coerce(FieldTag::RationalFunction) {
                    Ok(Scalar::RatFun(f)) => f,
                    _ => unreachable!("matrix entries share the field"),
                })
                .collect();
            let mut lcm = Poly::one();
            for e in &entries {
                let g = lcm.gcd(e.den());
                lcm = (&lcm * e.den()).exact_div(&g);
            }
            multiplier = multiplier.mul(&RatFun::from_poly(lcm.clone()));
            rows.push(
                entries
                    .iter()
                    .map(|e| (e.num() * &lcm).exact_div(e.den()))
                    .collect(),
            );
        }
        match bareiss(&mut rows, Poly::one()) {
            Some(det) => Scalar::RatFun(
                RatFun::new(det, Poly::one())
                    .expect("unit denominator")
                    .mul(&multiplier.inv().expect("nonzero multiplier")),
            ),
            None => Scalar::zero(FieldTag::RationalFunction),
        }
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> LResult<Option<Matrix>> {
        if !self.is_square() {
            return Err(mismatch(format!("inverse of {}x{}", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut rows: Vec<Vec<Scalar>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend((0..n).map(|c| {
                    if c == r {
                        Scalar::one(self.field)
                    } else {
                        Scalar::zero(self.field)
                    }
                }));
                row
            })
            .collect();
        let pivots = reduce_rows(&mut rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] >= n {
            return Ok(None);
        }
        let inv = rows.into_iter().map(|row| row[n..].to_vec()).collect();
        Ok(Some(Matrix::from_rows(self.field, inv)?))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[{}]", self.field)?;
        let rows: Vec<String> = (0..self.rows)
            .map(|r| {
                let cells: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

fn normalize_leading(v: Vec<Scalar>) -> Vec<Scalar> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(lead) if !lead.is_one() => {
            let inv = lead.try_inv().expect("nonzero leading entry");
            v.iter().map(|x| x * &inv).collect()
        }
        _ => v,
    }
}

/// Scales `v` so its first nonzero entry is 1.
pub fn normalize_first_nonzero(v: Vec<Scalar>) -> Vec<Scalar> {
    normalize_leading(v)
}

/// In-place Gauss-Jordan reduction to reduced row echelon form. Returns pivot
/// columns; the first `pivots.len()` rows hold the nonzero rows in order.
fn reduce_rows(rows: &mut Vec<Vec<Scalar>>, ncols: usize) -> Vec<usize> {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..ncols {
        if next == rows.len() {
            break;
        }
        let candidate = (next..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r].iter().filter(|x| !x.is_zero()).count());
        let Some(pr) = candidate else { continue };
        rows.swap(next, pr);
        let inv = rows[next][col].try_inv().expect("nonzero pivot");
        if !inv.is_one() {
            for x in rows[next].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let support: Vec<usize> = (0..ncols).filter(|&c| !rows[next][c].is_zero()).collect();
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for &c in &support {
                row[c] = &row[c] - &(&factor * &pivot_row[c]);
            }
        }
        pivots.push(col);
        next += 1;
    }
    rows.truncate(pivots.len());
    pivots
}

/// Arithmetic needed by Bareiss elimination.
trait Domain: Clone {
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn exact_div(&self, other: &Self) -> Self;
}

impl Domain for Scalar {
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Self {
        self / other
    }
}

impl Domain for Poly {
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Self {
        Poly::exact_div(self, other)
    }
}

/// Bareiss determinant; `None` when the matrix is singular.
fn bareiss<T: Domain>(a: &mut [Vec<T>], one: T) -> Option<T> {
    let n = a.len();
    let mut prev = one;
    let mut negate = false;
    for k in 0..n {
        if a[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !a[r][k].is_zero())?;
            a.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = t.exact_div(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Some(if negate { det.neg() } else { det })
}

/// Coefficients `c` with `Σ c_i basis_i = target`.
pub fn solve_in_span(basis: &[Vec<Scalar>], target: &[Scalar], field: FieldTag) -> LResult<Vec<Scalar>> {
    let n = target.len();
    if let Some((i, b)) = basis.iter().enumerate().find(|(_, b)| b.len() != n) {
        return Err(mismatch(format!(
            "basis vector {i} has length {}, target has length {n}",
            b.len()
        )));
    }
    let k = basis.len();
    let mut rows: Vec<Vec<Scalar>> = (0..n)
        .map(|r| {
            let mut row: Vec<Scalar> = basis.iter().map(|b| b[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let pivots = reduce_rows(&mut rows, k + 1);
    if pivots.last() == Some(&k) {
        return Err(LinalgError::NotInSpan);
    }
    let mut coeffs = vec![Scalar::zero(field); k];
    for (i, &p) in pivots.iter().enumerate() {
        coeffs[p] = rows[i][k].clone();
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldTag = FieldTag::Rational;

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from_int(Q, x)).collect()
    }

    #[test]
    fn basic_ops() {
        assert_eq!(Matrix::identity(3, Q).trace().unwrap(), Scalar::from_int(Q, 3));
        let swap = Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]);
        assert_eq!(swap.mul(&swap).unwrap(), Matrix::identity(2, Q));
        let m = Matrix::from_i64(Q, &[&[1, 2, 3], &[4, 5, 6]]);
        let t = m.transpose();
        assert_eq!((t.rows(), t.cols()), (3, 2));
        assert!(matches!(m.mul(&m), Err(LinalgError::DimensionMismatch(_))));
        assert!(m.trace().is_err());
    }

    #[test]
    fn kernels() {
        assert!(Matrix::identity(2, Q).kernel_basis().is_empty());
        let z = Matrix::zeros(2, 2, Q).kernel_basis();
        assert_eq!(z, vec![ints(&[1, 0]), ints(&[0, 1])]);
        // x + y = 0: free column 1 gives (-1, 1), scaled to leading 1.
        let k = Matrix::from_i64(Q, &[&[1, 1]]).kernel_basis();
        assert_eq!(k, vec![ints(&[1, -1])]);
    }

    #[test]
    fn span_solving() {
        let e1 = ints(&[1, 0]);
        let e2 = ints(&[0, 1]);
        assert_eq!(
            solve_in_span(&[e1.clone(), e2], &ints(&[1, 2]), Q).unwrap(),
            ints(&[1, 2])
        );
        assert_eq!(
            solve_in_span(&[e1], &ints(&[0, 1]), Q),
            Err(LinalgError::NotInSpan)
        );
        let b = [ints(&[1, 1]), ints(&[1, -1])];
        assert_eq!(solve_in_span(&b, &ints(&[3, 1]), Q).unwrap(), ints(&[2, 1]));
    }

    #[test]
    fn ranks() {
        assert_eq!(Matrix::identity(4, Q).rank(), 4);
        assert_eq!(Matrix::zeros(3, 5, Q).rank(), 0);
        assert_eq!(Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn determinants() {
        let m = Matrix::from_i64(Q, &[&[1, 2], &[3, 4]]);
        assert_eq!(m.det_bareiss().unwrap(), Scalar::from_int(Q, -2));
        assert!(Matrix::identity(5, Q).det_bareiss().unwrap().is_one());
        let f = FieldTag::RationalFunction;
        let d = Matrix::from_rows(
            f,
            vec![
                vec![Scalar::q_pow(1), Scalar::zero(f)],
                vec![Scalar::zero(f), Scalar::q_pow(-1)],
            ],
        )
        .unwrap();
        assert!(d.det_bareiss().unwrap().is_one());
        let singular = Matrix::from_i64(Q, &[&[0, 0], &[0, 1]]);
        assert!(singular.det_bareiss().unwrap().is_zero());
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_i64(Q, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2, Q));
        assert!(Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]).inverse().unwrap().is_none());
    }
}
