//! Simple modules `V_ℓ` of `U_q(sl2)` over `Q(q)` and their indicators,
//! computed from the generators `E`, `F`, `K` alone.
//!
//! Basis `v_{-ℓ}, …, v_ℓ` (index `j = i + ℓ`), with
//! `K v_i = q^{2i} v_i`, `E v_i = [ℓ+i+1] v_{i+1}`, `F v_i = [ℓ-i+1] v_{i-1}`
//! and `v_{±(ℓ+1)} = 0`.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::pivotal::{
    eigenspace_dims, flip_form, flip_operator, intertwiner_kernel, normalize_form, IndicatorReport, ValidationReport,
};
use crate::scalars::{FieldTag, Scalar};

pub const DEFAULT_MAX_TWO_ELL: u32 = 8;

const FIELD: FieldTag = FieldTag::RationalFunction;

#[derive(Debug, Clone, PartialEq)]
pub struct QslModule {
    pub two_ell: u32,
    pub dim: usize,
    pub e: Matrix,
    pub f: Matrix,
    pub k: Matrix,
    pub kinv: Matrix,
}

/// `[n]_q = (q^n - q^{-n}) / (q - q^{-1})`, for `n ≥ 0`.
pub fn q_integer(n: u32) -> Scalar {
    let n = i64::from(n);
    (0..n).fold(Scalar::zero(FIELD), |acc, k| &acc + &Scalar::q_pow(n - 1 - 2 * k))
}

pub fn build_vl(two_ell: u32) -> QslModule {
    let dim = two_ell as usize + 1;
    let mut e = Matrix::zeros(dim, dim, FIELD);
    let mut f = Matrix::zeros(dim, dim, FIELD);
    for j in 0..dim - 1 {
        // ℓ + i + 1 = j + 1 and ℓ - (i + 1) + 1 = 2ℓ - j.
        e.set(j + 1, j, q_integer(j as u32 + 1));
        f.set(j, j + 1, q_integer(two_ell - j as u32));
    }
    // q^{2i} = q^{2j - 2ℓ}.
    let k = Matrix::from_fn(dim, dim, FIELD, |r, c| {
        if r == c {
            Scalar::q_pow(2 * r as i64 - i64::from(two_ell))
        } else {
            Scalar::zero(FIELD)
        }
    });
    let kinv = Matrix::from_fn(dim, dim, FIELD, |r, c| {
        if r == c {
            Scalar::q_pow(i64::from(two_ell) - 2 * r as i64)
        } else {
            Scalar::zero(FIELD)
        }
    });
    QslModule {
        two_ell,
        dim,
        e,
        f,
        k,
        kinv,
    }
}

/// Checks `KK⁻¹ = 1`, `KEK⁻¹ = q²E`, `KFK⁻¹ = q⁻²F` and
/// `EF - FE = (K - K⁻¹)/(q - q⁻¹)`.
pub fn verify_relations(m: &QslModule) -> ValidationReport {
    let mut report = ValidationReport::default();
    let mut check = |name: &str, lhs: Result<Matrix>, rhs: Result<Matrix>| match (lhs, rhs) {
        (Ok(l), Ok(r)) if l == r => {}
        (Ok(_), Ok(_)) => report.push(name, "matrices differ"),
        (Err(e), _) | (_, Err(e)) => report.push(name, e.to_string()),
    };
    let q2 = Scalar::q_pow(2);
    let qm2 = Scalar::q_pow(-2);
    let id = Matrix::identity(m.dim, FIELD);
    check("K K^-1 = 1", m.k.mul(&m.kinv).map_err(Error::from), Ok(id));
    check(
        "K E K^-1 = q^2 E",
        m.k.mul(&m.e).and_then(|x| x.mul(&m.kinv)).map_err(Error::from),
        Ok(m.e.scale(&q2)),
    );
    check(
        "K F K^-1 = q^-2 F",
        m.k.mul(&m.f).and_then(|x| x.mul(&m.kinv)).map_err(Error::from),
        Ok(m.f.scale(&qm2)),
    );
    let denom = (&Scalar::q_pow(1) - &Scalar::q_pow(-1)).try_inv().expect("q - 1/q is nonzero");
    let commutator = m
        .e
        .mul(&m.f)
        .and_then(|ef| m.f.mul(&m.e).and_then(|fe| ef.sub(&fe)))
        .map_err(Error::from);
    let cartan = m.k.sub(&m.kinv).map(|d| d.scale(&denom)).map_err(Error::from);
    check("EF - FE = (K - K^-1)/(q - q^-1)", commutator, cartan);
    report
}

/// `ν(V_ℓ)` or, with `twisted`, `ν^τ(V_ℓ)` for `τ(E, F, K) = (-E, -F, K)`,
/// with the default bound on `2ℓ`.
pub fn qsl2_indicator(two_ell: u32, twisted: bool) -> Result<IndicatorReport> {
    qsl2_indicator_bounded(two_ell, twisted, DEFAULT_MAX_TWO_ELL)
}

pub fn qsl2_indicator_bounded(two_ell: u32, twisted: bool, max: u32) -> Result<IndicatorReport> {
    if two_ell > max {
        return Err(Error::BoundExceeded { requested: two_ell, max });
    }
    let v = build_vl(two_ell);
    let report = verify_relations(&v);
    if let Some(bad) = report.violations.first() {
        return Err(Error::Structure(format!("V_l relation failed: {}", bad.axiom)));
    }
    let sign = if twisted { -Scalar::one(FIELD) } else { Scalar::one(FIELD) };
    // S(E) = -E K⁻¹, S(F) = -K F, S(K) = K⁻¹.
    let s_e = v.e.mul(&v.kinv)?.neg();
    let s_f = v.k.mul(&v.f)?.neg();
    let lefts = [v.k.transpose(), v.e.scale(&sign).transpose(), v.f.scale(&sign).transpose()];
    let rights = [v.kinv.clone(), s_e, s_f];
    let forms = intertwiner_kernel(lefts.iter().zip(&rights), v.dim, v.dim, FIELD);
    let [m] = forms.as_slice() else {
        return Err(Error::UnexpectedFormDimension(forms.len()));
    };
    let m = normalize_form(m);
    let flipped = flip_form(&v.k, &m);
    let (r, c) = (0..v.dim * v.dim)
        .map(|x| (x / v.dim, x % v.dim))
        .find(|&(r, c)| !m.get(r, c).is_zero())
        .ok_or(Error::NoSign)?;
    let nu = flipped.get(r, c) / m.get(r, c);
    if flipped != m.scale(&nu) {
        return Err(Error::NoSign);
    }
    let op = flip_operator(&v.k, std::slice::from_ref(&m), FIELD)?;
    let (dim_plus, dim_minus) = eigenspace_dims(&op)?;
    let gens = [&v.e, &v.f, &v.k];
    let end_dim = intertwiner_kernel(gens.iter().copied().zip(gens.iter().copied()), v.dim, v.dim, FIELD).len();
    let self_dual = !m.det_bareiss()?.is_zero();
    Ok(IndicatorReport {
        nu,
        dim_bil: 1,
        dim_plus,
        dim_minus,
        end_dim,
        self_dual,
        abs_simple: end_dim == 1,
        canonical_form: Some(m),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i64) -> Scalar {
        Scalar::q_pow(k)
    }

    #[test]
    fn small_modules() {
        let v0 = build_vl(0);
        assert!(v0.e.is_zero() && v0.f.is_zero());
        assert_eq!(v0.k, Matrix::identity(1, FIELD));
        let v1 = build_vl(1);
        assert_eq!(v1.k.get(0, 0), &q(-1));
        assert_eq!(v1.k.get(1, 1), &q(1));
        assert!(v1.e.get(1, 0).is_one());
        assert_eq!(q_integer(2), &q(1) + &q(-1));
        assert!(verify_relations(&build_vl(2)).is_ok());
    }

    #[test]
    fn perturbed_module_fails_commutator() {
        let mut v = build_vl(2);
        let bumped = v.e.get(1, 0) + &Scalar::one(FIELD);
        v.e.set(1, 0, bumped);
        let report = verify_relations(&v);
        assert!(report.violations.iter().any(|x| x.axiom.starts_with("EF")));
    }

    #[test]
    fn spin_half_form() {
        let r = qsl2_indicator(1, false).unwrap();
        assert_eq!(r.nu, -Scalar::one(FIELD));
        let m = r.canonical_form.unwrap();
        let expected = Matrix::from_rows(
            FIELD,
            vec![vec![Scalar::zero(FIELD), Scalar::one(FIELD)], vec![-q(1), Scalar::zero(FIELD)]],
        )
        .unwrap();
        assert_eq!(m, expected);
        assert_eq!(qsl2_indicator(1, true).unwrap().nu, Scalar::one(FIELD));
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(qsl2_indicator(9, false), Err(Error::BoundExceeded { requested: 9, max: 8 })));
        assert!(qsl2_indicator_bounded(9, false, 9).is_ok());
    }
}
