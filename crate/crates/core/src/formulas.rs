//! Closed-form character formulas for the indicator.
//!
//! Each function here computes `ν` without ever touching the space of invariant
//! forms, so it can be compared against [`crate::pivotal::fs_indicator`].
//! Twisted variants evaluate the untwisted formula on `A^τ`.

use std::borrow::Cow;

use crate::error::{Error, Result};
use crate::linalg::{solve_in_span, Matrix};
use crate::pivotal::{
    fs_indicator, hom_space, dual_module, span_contains_invertible, twist_algebra, ModuleRep, PivotalAlgebra,
};
use crate::scalars::{FieldTag, Scalar};

fn effective<'a>(a: &'a PivotalAlgebra, twist: Option<&str>) -> Result<Cow<'a, PivotalAlgebra>> {
    Ok(match twist {
        None => Cow::Borrowed(a),
        Some(t) => Cow::Owned(twist_algebra(a, t)?),
    })
}

fn dot(a: &[Scalar], b: &[Scalar], field: FieldTag) -> Scalar {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Scalar::zero(field), |acc, (x, y)| &acc + &(x * y))
}

/// `E = Σ E'_t ⊗ E''_t`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeparabilityIdempotent {
    pub terms: Vec<(Vec<Scalar>, Vec<Scalar>)>,
}

impl SeparabilityIdempotent {
    /// Coefficient matrix `T[i][j]` of `b_i ⊗ b_j`.
    fn tensor(&self, a: &PivotalAlgebra) -> Matrix {
        let n = a.dim();
        let mut t = Matrix::zeros(n, n, a.field());
        for (l, r) in &self.terms {
            for (i, x) in l.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                for (j, y) in r.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                    t.set(i, j, t.get(i, j) + &(x * y));
                }
            }
        }
        t
    }

    /// Checks `E¹E² = 1` and `aE = Ea` for every basis element.
    pub fn validate(&self, a: &PivotalAlgebra) -> Result<()> {
        let n = a.dim();
        if self.terms.iter().any(|(l, r)| l.len() != n || r.len() != n) {
            return Err(Error::InvalidIdempotent(format!("term vectors must have length {n}")));
        }
        let mut product = a.zero_vec();
        for (l, r) in &self.terms {
            for (k, x) in a.mul(l, r).into_iter().enumerate() {
                product[k] = &product[k] + &x;
            }
        }
        if product != a.unit() {
            return Err(Error::InvalidIdempotent("E1 E2 != 1".into()));
        }
        let t = self.tensor(a);
        for i in 0..n {
            let left = a.left_mult_matrix(i).mul(&t)?;
            let right = t.mul(&a.right_mult_matrix(i).transpose())?;
            if left != right {
                return Err(Error::InvalidIdempotent(format!(
                    "{0} E != E {0}",
                    a.labels()[i]
                )));
            }
        }
        Ok(())
    }
}

/// `χ_V(S^τ(E¹) g E²)`.
pub fn fs_via_separability(
    a: &PivotalAlgebra,
    v: &ModuleRep,
    e: &SeparabilityIdempotent,
    twist: Option<&str>,
) -> Result<Scalar> {
    e.validate(a)?;
    let a = effective(a, twist)?;
    let s = a.antipode();
    let rg = v.act(a.pivot());
    let mut total = Scalar::zero(a.field());
    for (l, r) in &e.terms {
        let m = v.act(&s.mul_vec(l)?).mul(&rg)?.mul(&v.act(r))?;
        total = &total + &m.trace()?;
    }
    Ok(total)
}

fn require_integral(a: &PivotalAlgebra) -> Result<(&[Scalar], &[Scalar])> {
    let lambda = a
        .integral()
        .ok_or_else(|| Error::MissingData("integral".into()))?;
    let counit = a
        .counit()
        .ok_or_else(|| Error::MissingData("counit".into()))?;
    let field = a.field();
    if !dot(counit, lambda, field).is_one() {
        return Err(Error::NotAnIntegral("counit(integral) != 1".into()));
    }
    for i in 0..a.dim() {
        let b = a.basis_vec(i);
        let expected: Vec<Scalar> = lambda.iter().map(|x| x * &counit[i]).collect();
        if a.mul(&b, lambda) != expected || a.mul(lambda, &b) != expected {
            return Err(Error::NotAnIntegral(format!(
                "{0} L != counit({0}) L or L {0} != counit({0}) L",
                a.labels()[i]
            )));
        }
    }
    Ok((lambda, counit))
}

/// Coefficients of `Δ(v)` as an `n × n` matrix.
fn coproduct(a: &PivotalAlgebra, v: &[Scalar]) -> Result<Matrix> {
    let comult = a.comultiplication().ok_or(Error::MissingComultiplication)?;
    let mut t = Matrix::zeros(a.dim(), a.dim(), a.field());
    for (k, x) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (i, j, c) in &comult[k] {
            t.set(*i, *j, t.get(*i, *j) + &(x * c));
        }
    }
    Ok(t)
}

/// `E = Σ S(Λ₁) ⊗ Λ₂` for a normalized two-sided integral `Λ`.
pub fn hopf_integral_idempotent(a: &PivotalAlgebra) -> Result<SeparabilityIdempotent> {
    a.comultiplication().ok_or(Error::MissingComultiplication)?;
    let (lambda, _) = require_integral(a)?;
    let t = a.hopf_antipode().mul(&coproduct(a, lambda)?)?;
    let terms = (0..a.dim())
        .filter_map(|j| {
            let col = t.column(j);
            col.iter()
                .any(|x| !x.is_zero())
                .then(|| (col, a.basis_vec(j)))
        })
        .collect();
    let e = SeparabilityIdempotent { terms };
    e.validate(a)?;
    Ok(e)
}

/// Gram matrix, dual basis and volume of a symmetric trace form `φ`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricFormData {
    pub phi: Vec<Scalar>,
    /// Column `i` holds the coordinates of `b_i^∨`.
    pub dual_basis: Matrix,
    pub volume: Vec<Scalar>,
    pub gram: Matrix,
}

impl SymmetricFormData {
    pub fn dual_vector(&self, i: usize) -> Vec<Scalar> {
        self.dual_basis.column(i)
    }
}

pub fn symmetric_form_data(a: &PivotalAlgebra) -> Result<SymmetricFormData> {
    let phi = a
        .trace_form()
        .ok_or_else(|| Error::MissingData("trace_form".into()))?
        .to_vec();
    let n = a.dim();
    let field = a.field();
    let gram = Matrix::from_fn(n, n, field, |i, j| {
        dot(&phi, &a.mul(&a.basis_vec(i), &a.basis_vec(j)), field)
    });
    if gram != gram.transpose() {
        let (i, j) = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| gram.get(i, j) != gram.get(j, i))
            .expect("asymmetric entry exists");
        return Err(Error::NotSymmetric(format!(
            "phi({0}*{1}) != phi({1}*{0})",
            a.labels()[i],
            a.labels()[j]
        )));
    }
    let inv = gram.inverse()?.ok_or(Error::DegenerateTraceForm)?;
    let mut volume = a.zero_vec();
    for i in 0..n {
        for (k, x) in a.mul(&a.basis_vec(i), &inv.column(i)).into_iter().enumerate() {
            volume[k] = &volume[k] + &x;
        }
    }
    for i in 0..n {
        let b = a.basis_vec(i);
        if a.mul(&b, &volume) != a.mul(&volume, &b) {
            return Err(Error::VolumeNotCentral(format!("fails against {}", a.labels()[i])));
        }
    }
    Ok(SymmetricFormData {
        phi,
        dual_basis: inv,
        volume,
        gram,
    })
}

/// `E = Σ b_i ⊗ b_i^∨ v_A⁻¹`, the separability idempotent of a symmetric algebra
/// with invertible volume.
pub fn symmetric_idempotent(a: &PivotalAlgebra, data: &SymmetricFormData) -> Result<SeparabilityIdempotent> {
    let n = a.dim();
    let lv = Matrix::from_fn(n, n, a.field(), |r, c| {
        a.mul(&data.volume, &a.basis_vec(c))[r].clone()
    });
    // v⁻¹ solves v x = 1.
    let vinv = lv
        .inverse()?
        .ok_or_else(|| Error::InvalidIdempotent("volume element is not invertible".into()))?
        .mul_vec(a.unit())?;
    let terms = (0..n)
        .map(|i| (a.basis_vec(i), a.mul(&data.dual_vector(i), &vinv)))
        .collect();
    let e = SeparabilityIdempotent { terms };
    e.validate(a)?;
    Ok(e)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricResult {
    pub nu: Scalar,
    pub schur: Scalar,
    /// False when `V` is not absolutely simple; the values are then only indicative.
    pub abs_simple: bool,
}

/// `ν(V) = (dim V / χ(v_A)) Σ χ(S^τ(b_i) g b_i^∨)` and `c_V = χ(v_A) / dim V²`.
pub fn fs_via_symmetric(
    a: &PivotalAlgebra,
    v: &ModuleRep,
    data: &SymmetricFormData,
    twist: Option<&str>,
) -> Result<SymmetricResult> {
    let a = effective(a, twist)?;
    let field = a.field();
    let chi_v = v.character(&data.volume);
    if chi_v.is_zero() {
        return Err(Error::ZeroVolumeCharacter);
    }
    let d = Scalar::from_int(field, v.dim as i64);
    let rg = v.act(a.pivot());
    let s = a.antipode();
    let mut total = Scalar::zero(field);
    for i in 0..a.dim() {
        let m = v.act(&s.column(i)).mul(&rg)?.mul(&v.act(&data.dual_vector(i)))?;
        total = &total + &m.trace()?;
    }
    let nu = &(&d / &chi_v) * &total;
    let schur = &chi_v / &(&d * &d);
    let abs_simple = hom_space(v, v)?.len() == 1;
    Ok(SymmetricResult { nu, schur, abs_simple })
}

/// Trace of `Q(a) = S^τ(a) g` on `A`.
pub fn fs_regular_trace_q(a: &PivotalAlgebra, twist: Option<&str>) -> Result<Scalar> {
    let s = a.twisted_antipode(twist)?;
    let mut total = Scalar::zero(a.field());
    for i in 0..a.dim() {
        let q = a.mul(&s.column(i), a.pivot());
        total = &total + &q[i];
    }
    Ok(total)
}

/// `(Trace S_V, Trace Q_V)` on the image of `A → End(V)`.
pub fn trace_s_on_image(a: &PivotalAlgebra, v: &ModuleRep, twist: Option<&str>) -> Result<(Scalar, Scalar)> {
    let a = effective(a, twist)?;
    if hom_space(v, v)?.len() != 1 {
        return Err(Error::NotAbsolutelySimple(v.name.clone()));
    }
    if !span_contains_invertible(&hom_space(v, &dual_module(&a, v, None)?)?)? {
        return Err(Error::NotSelfDual(v.name.clone()));
    }
    let field = a.field();
    let n = a.dim();
    let flat: Vec<Vec<Scalar>> = v.action.iter().map(|m| m.as_flat().to_vec()).collect();
    let cols = Matrix::from_fn(v.dim * v.dim, n, field, |r, c| flat[c][r].clone());
    let (_, pivots) = cols.rref();
    let basis: Vec<Vec<Scalar>> = pivots.iter().map(|&i| flat[i].clone()).collect();
    let s = a.antipode();
    let rg = v.act(a.pivot());
    let mut trace_s = Scalar::zero(field);
    let mut trace_q = Scalar::zero(field);
    for (pos, &i) in pivots.iter().enumerate() {
        let s_image = v.act(&s.column(i));
        let q_image = s_image.mul(&rg)?;
        let cs = solve_in_span(&basis, s_image.as_flat(), field)?;
        let cq = solve_in_span(&basis, q_image.as_flat(), field)?;
        trace_s = &trace_s + &cs[pos];
        trace_q = &trace_q + &cq[pos];
    }
    Ok((trace_s, trace_q))
}

/// `(Trace S, Σ ν(V_i) χ_i(g))` over a complete list of absolutely simple modules.
pub fn trace_s_global(a: &PivotalAlgebra, simples: &[ModuleRep]) -> Result<(Scalar, Scalar)> {
    let found: usize = simples.iter().map(|v| v.dim * v.dim).sum();
    if found != a.dim() {
        return Err(Error::IncompleteSimplesList {
            found,
            expected: a.dim(),
        });
    }
    let lhs = a.antipode().trace()?;
    let mut rhs = Scalar::zero(a.field());
    for v in simples {
        let nu = fs_indicator(a, v, None)?.nu;
        rhs = &rhs + &(&nu * &v.character(a.pivot()));
    }
    Ok((lhs, rhs))
}

/// `ν(V; α) = Σ α(S(Λ₁)) χ_V(Λ₂ Λ₃)` for the Hopf twist by a central character.
pub fn hopf_character_twist_formula(a: &PivotalAlgebra, v: &ModuleRep, alpha: &[Scalar]) -> Result<Scalar> {
    let comult = a.comultiplication().ok_or(Error::MissingComultiplication)?;
    let (lambda, _) = require_integral(a)?;
    let field = a.field();
    let n = a.dim();
    if alpha.len() != n {
        return Err(Error::Structure(format!("character has length {}, expected {n}", alpha.len())));
    }
    let alpha_s: Vec<Scalar> = (0..n)
        .map(|i| dot(alpha, &a.hopf_antipode().column(i), field))
        .collect();
    let chi = v.character_vector();
    let chi_prod = |i: usize, j: usize| -> Scalar {
        a.product(i, j)
            .iter()
            .fold(Scalar::zero(field), |acc, (k, c)| &acc + &(c * &chi[*k]))
    };
    let mut total = Scalar::zero(field);
    for (k, lk) in lambda.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (i, j, c1) in &comult[k] {
            let w = &(lk * c1) * &alpha_s[*i];
            if w.is_zero() {
                continue;
            }
            for (p, r, c2) in &comult[*j] {
                total = &total + &(&(&w * c2) * &chi_prod(*p, *r));
            }
        }
    }
    Ok(total)
}

/// Structure of a group-like algebra: basis `b_0 = 1, …, b_{n-1}`, degrees
/// `ε(b_i)`, the index involution `*`, and constants `b_i b_j = Σ p_{ij}^k b_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupLikeData {
    pub field: FieldTag,
    pub valency: Vec<Scalar>,
    pub star: Vec<usize>,
    /// Dense `p_{ij}^k` at index `(i * n + j) * n + k`.
    pub p: Vec<Scalar>,
}

fn axiom(name: &str, detail: String) -> Error {
    Error::AxiomViolation {
        axiom: name.into(),
        detail,
    }
}

impl GroupLikeData {
    pub fn from_algebra(a: &PivotalAlgebra, valency: Vec<Scalar>, star: Vec<usize>) -> Result<GroupLikeData> {
        let n = a.dim();
        if valency.len() != n || star.len() != n {
            return Err(Error::Structure("valency and star must have one entry per basis element".into()));
        }
        let mut p = vec![Scalar::zero(a.field()); n * n * n];
        for i in 0..n {
            for j in 0..n {
                for (k, c) in a.product(i, j) {
                    p[(i * n + j) * n + k] = c.clone();
                }
            }
        }
        Ok(GroupLikeData {
            field: a.field(),
            valency,
            star,
            p,
        })
    }

    pub fn rank(&self) -> usize {
        self.valency.len()
    }

    pub fn p(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.rank();
        &self.p[(i * n + j) * n + k]
    }

    /// Doi's axioms (G0)-(G3), plus multiplicativity of the degree map.
    pub fn validate(&self) -> Result<()> {
        let n = self.rank();
        let field = self.field;
        if self.p.len() != n * n * n || self.star.len() != n {
            return Err(Error::Structure("inconsistent group-like data sizes".into()));
        }
        let delta = |a: usize, b: usize| if a == b { Scalar::one(field) } else { Scalar::zero(field) };
        for j in 0..n {
            for k in 0..n {
                if *self.p(0, j, k) != delta(j, k) || *self.p(j, 0, k) != delta(j, k) {
                    return Err(axiom("G0", format!("b_0 is not a unit at (j, k) = ({j}, {k})")));
                }
            }
        }
        for i in 0..n {
            if self.star[i] >= n || self.star[self.star[i]] != i {
                return Err(axiom("G1", format!("* is not an involution at {i}")));
            }
            if self.valency[i].is_zero() {
                return Err(Error::ZeroValency(i));
            }
            if self.valency[i] != self.valency[self.star[i]] {
                return Err(axiom("G1", format!("eps(b_{i}) != eps(b_{i}*)")));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let image = (0..n).fold(Scalar::zero(field), |acc, k| &acc + &(self.p(i, j, k) * &self.valency[k]));
                if image != &self.valency[i] * &self.valency[j] {
                    return Err(axiom("G1", format!("eps is not multiplicative at ({i}, {j})")));
                }
                for k in 0..n {
                    if self.p(i, j, k) != self.p(self.star[j], self.star[i], self.star[k]) {
                        return Err(axiom("G2", format!("p_{{{i},{j}}}^{k} != p_{{{j}*,{i}*}}^{{{k}*}}")));
                    }
                }
                let expected = if j == self.star[i] { self.valency[i].clone() } else { Scalar::zero(field) };
                if *self.p(i, j, 0) != expected {
                    return Err(axiom("G3", format!("p_{{{i},{j}}}^0 != delta_{{{i},{j}*}} eps(b_{i})")));
                }
            }
        }
        Ok(())
    }

    /// Checks `τ(i*) = τ(i)*` and `p_{τi,τj}^{τk} = p_{ij}^k`.
    pub fn validate_involution(&self, tau: &[usize]) -> Result<()> {
        let n = self.rank();
        if tau.len() != n || tau.iter().any(|&t| t >= n) {
            return Err(Error::NotSchemeInvolution("permutation has the wrong length or range".into()));
        }
        for i in 0..n {
            if tau[tau[i]] != i {
                return Err(Error::NotSchemeInvolution(format!("tau is not involutive at {i}")));
            }
            if tau[self.star[i]] != self.star[tau[i]] {
                return Err(Error::NotSchemeInvolution(format!("tau(i*) != tau(i)* at i = {i}")));
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.p(tau[i], tau[j], tau[k]) != self.p(i, j, k) {
                        return Err(Error::NotSchemeInvolution(format!(
                            "p at (i, j, k) = ({i}, {j}, {k}) is not preserved"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `χ(b_a b_b) = Σ_k p_{ab}^k χ(b_k)`.
    fn chi_product(&self, chi: &[Scalar], a: usize, b: usize) -> Scalar {
        (0..self.rank()).fold(Scalar::zero(self.field), |acc, k| &acc + &(self.p(a, b, k) * &chi[k]))
    }
}

/// `ν^τ(V) = (1 / (c_V d)) Σ_i ε(b_i)⁻¹ χ(b_{τ(i)} b_i)` with `c_V = χ(v_A) / d²`
/// and `v_A = Σ_i ε(b_i)⁻¹ b_i b_{i*}`.
pub fn doi_grouplike_indicator(
    gl: &GroupLikeData,
    chi: &[Scalar],
    d: usize,
    tau: Option<&[usize]>,
) -> Result<Scalar> {
    gl.validate()?;
    let n = gl.rank();
    if chi.len() != n {
        return Err(Error::Structure(format!("character has length {}, expected {n}", chi.len())));
    }
    let identity: Vec<usize> = (0..n).collect();
    let tau = match tau {
        Some(t) => {
            gl.validate_involution(t)?;
            t
        }
        None => &identity,
    };
    let field = gl.field;
    let mut chi_volume = Scalar::zero(field);
    let mut sum = Scalar::zero(field);
    for i in 0..n {
        let inv_eps = gl.valency[i].try_inv()?;
        chi_volume = &chi_volume + &(&inv_eps * &gl.chi_product(chi, i, gl.star[i]));
        sum = &sum + &(&inv_eps * &gl.chi_product(chi, tau[i], i));
    }
    if chi_volume.is_zero() {
        return Err(Error::ZeroVolumeCharacter);
    }
    let d = Scalar::from_int(field, d as i64);
    // 1 / (c_V d) = d / χ(v_A)
    Ok(&(&d / &chi_volume) * &sum)
}
