use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::pivotal::{dual_module, fs_indicator, IndicatorReport, ModuleRep, PivotalAlgebra};
use crate::scalars::{FieldTag, Scalar};

/// A finite-dimensional copivotal coalgebra `(C, S, γ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CopivotalCoalgebra {
    field: FieldTag,
    labels: Vec<String>,
    /// Dense `μ_k^{ij}` at `(k * n + i) * n + j`: `Δ(c_k) = Σ μ_k^{ij} c_i ⊗ c_j`.
    mu: Vec<Scalar>,
    counit: Vec<Scalar>,
    antipode: Matrix,
    gamma: Vec<Scalar>,
}

fn violation(msg: impl Into<String>) -> Error {
    Error::CopivotalAxiomViolation(msg.into())
}

impl CopivotalCoalgebra {
    /// Assembles a coalgebra from sparse constants `(k, i, j, c)`; no axioms are checked.
    pub fn new(
        field: FieldTag,
        labels: Vec<String>,
        comult: Vec<(usize, usize, usize, Scalar)>,
        counit: Vec<Scalar>,
        antipode: Matrix,
        gamma: Vec<Scalar>,
    ) -> Result<CopivotalCoalgebra> {
        let n = labels.len();
        let shape = |m: String| Error::Structure(m);
        if counit.len() != n || gamma.len() != n {
            return Err(shape(format!("counit and gamma must have length {n}")));
        }
        if antipode.rows() != n || antipode.cols() != n {
            return Err(shape(format!("antipode must be {n}x{n}")));
        }
        let mut mu = vec![Scalar::zero(field); n * n * n];
        let mut seen = vec![false; n * n * n];
        for (k, i, j, c) in comult {
            if i >= n || j >= n || k >= n {
                return Err(shape(format!("comultiplication constant ({k}, {i}, {j}) out of range")));
            }
            let idx = (k * n + i) * n + j;
            if std::mem::replace(&mut seen[idx], true) {
                return Err(shape(format!("duplicate comultiplication constant ({k}, {i}, {j})")));
            }
            mu[idx] = c.coerce(field)?;
        }
        let coerce = |v: Vec<Scalar>| v.into_iter().map(|x| x.coerce(field)).collect::<std::result::Result<Vec<_>, _>>();
        Ok(CopivotalCoalgebra {
            field,
            labels,
            mu,
            counit: coerce(counit)?,
            antipode,
            gamma: coerce(gamma)?,
        })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mu(&self, k: usize, i: usize, j: usize) -> &Scalar {
        let n = self.dim();
        &self.mu[(k * n + i) * n + j]
    }

    fn zero(&self) -> Scalar {
        Scalar::zero(self.field)
    }

    fn eval(&self, f: &[Scalar], v: &[Scalar]) -> Scalar {
        f.iter().zip(v).fold(self.zero(), |acc, (a, b)| &acc + &(a * b))
    }

    /// `Δ(v)` as a dense `n × n` coefficient array.
    fn coproduct(&self, v: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.zero(); n * n];
        for (k, x) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for ij in 0..n * n {
                let m = &self.mu[k * n * n + ij];
                if !m.is_zero() {
                    out[ij] = &out[ij] + &(x * m);
                }
            }
        }
        out
    }

    /// Checks coassociativity, counit laws, that `S` is an anti-coalgebra map,
    /// that `γ` is convolution-invertible with inverse `γ̄ = γ ∘ S`, and
    /// `S²(c) = γ(c₁) c₂ γ̄(c₃)`.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        let basis = |k: usize| -> Vec<Scalar> {
            (0..n)
                .map(|i| if i == k { Scalar::one(self.field) } else { self.zero() })
                .collect()
        };
        let gamma_bar: Vec<Scalar> = (0..n).map(|i| self.eval(&self.gamma, &self.antipode.column(i))).collect();
        for k in 0..n {
            let c = basis(k);
            let d = self.coproduct(&c);
            // (Δ ⊗ id)Δ vs (id ⊗ Δ)Δ, compared on dense n³ arrays.
            let mut left = vec![self.zero(); n * n * n];
            let mut right = vec![self.zero(); n * n * n];
            for i in 0..n {
                for j in 0..n {
                    let x = &d[i * n + j];
                    if x.is_zero() {
                        continue;
                    }
                    for a in 0..n {
                        for b in 0..n {
                            let l = self.mu(i, a, b);
                            if !l.is_zero() {
                                let idx = (a * n + b) * n + j;
                                left[idx] = &left[idx] + &(x * l);
                            }
                            let r = self.mu(j, a, b);
                            if !r.is_zero() {
                                let idx = (i * n + a) * n + b;
                                right[idx] = &right[idx] + &(x * r);
                            }
                        }
                    }
                }
            }
            if left != right {
                return Err(violation(format!("coassociativity fails at {}", self.labels[k])));
            }
            let mut eps_left = vec![self.zero(); n];
            let mut eps_right = vec![self.zero(); n];
            let mut gamma_twist = vec![self.zero(); n];
            for i in 0..n {
                for j in 0..n {
                    let x = &d[i * n + j];
                    if x.is_zero() {
                        continue;
                    }
                    eps_left[j] = &eps_left[j] + &(x * &self.counit[i]);
                    eps_right[i] = &eps_right[i] + &(x * &self.counit[j]);
                }
            }
            if eps_left != c || eps_right != c {
                return Err(violation(format!("counit law fails at {}", self.labels[k])));
            }
            // γ ∗ γ̄ = ε
            let conv = (0..n * n).fold(self.zero(), |acc, ij| {
                &acc + &(&d[ij] * &(&self.gamma[ij / n] * &gamma_bar[ij % n]))
            });
            if conv != self.counit[k] {
                return Err(violation(format!("gamma * gamma_bar != counit at {}", self.labels[k])));
            }
            // γ(c₁) c₂ γ̄(c₃) with Δ²(c) = (Δ ⊗ id)Δ(c) stored in `left`.
            for a in 0..n {
                for b in 0..n {
                    for j in 0..n {
                        let x = &left[(a * n + b) * n + j];
                        if !x.is_zero() {
                            gamma_twist[b] = &gamma_twist[b] + &(&(x * &self.gamma[a]) * &gamma_bar[j]);
                        }
                    }
                }
            }
            let s2 = self.antipode.mul_vec(&self.antipode.column(k))?;
            if s2 != gamma_twist {
                return Err(violation(format!(
                    "S^2(c) != gamma(c1) c2 gamma_bar(c3) at {}",
                    self.labels[k]
                )));
            }
            // Δ(S c) = S(c₂) ⊗ S(c₁), ε(S c) = ε(c)
            let sc = self.antipode.column(k);
            let lhs = self.coproduct(&sc);
            let mut rhs = vec![self.zero(); n * n];
            for i in 0..n {
                for j in 0..n {
                    let x = &d[i * n + j];
                    if x.is_zero() {
                        continue;
                    }
                    for a in 0..n {
                        for b in 0..n {
                            let y = &(self.antipode.get(a, j) * self.antipode.get(b, i));
                            if !y.is_zero() {
                                rhs[a * n + b] = &rhs[a * n + b] + &(x * y);
                            }
                        }
                    }
                }
            }
            if lhs != rhs {
                return Err(violation(format!("S is not an anti-coalgebra map at {}", self.labels[k])));
            }
            if self.eval(&self.counit, &sc) != self.counit[k] {
                return Err(violation(format!("counit(S(c)) != counit(c) at {}", self.labels[k])));
            }
        }
        Ok(())
    }
}

/// The dual pivotal algebra `(C^∨, S^∨, γ)` on the dual basis `δ_i`.
pub fn dualize_coalgebra(coalg: &CopivotalCoalgebra) -> Result<PivotalAlgebra> {
    coalg.validate()?;
    let n = coalg.dim();
    let mut mult = Vec::new();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let m = coalg.mu(k, i, j);
                if !m.is_zero() {
                    mult.push((i, j, k, m.clone()));
                }
            }
        }
    }
    let labels = coalg.labels.iter().map(|l| format!("d_{l}")).collect();
    PivotalAlgebra::new(
        coalg.field,
        labels,
        mult,
        coalg.counit.clone(),
        coalg.antipode.transpose(),
        coalg.gamma.clone(),
    )
}

/// The copivotal coalgebra `A^∨` dual to a pivotal algebra.
pub fn dual_coalgebra(a: &PivotalAlgebra) -> Result<CopivotalCoalgebra> {
    let comult = a
        .structure_constants()
        .into_iter()
        .map(|(i, j, k, c)| (k, i, j, c))
        .collect();
    let labels = a
        .labels()
        .iter()
        .map(|l| l.strip_prefix("d_").map_or_else(|| format!("d_{l}"), str::to_string))
        .collect();
    CopivotalCoalgebra::new(
        a.field(),
        labels,
        comult,
        a.unit().to_vec(),
        a.antipode().transpose(),
        a.pivot().to_vec(),
    )
}

/// Turns a right comodule `ρ(v_b) = Σ_a v_a ⊗ c_{ab}` into the left module
/// `λ ⇀ v = v₍₀₎ λ(v₍₁₎)`; `corep[a][b]` holds the coordinates of `c_{ab}`.
pub fn comodule_to_module(coalg: &CopivotalCoalgebra, name: &str, corep: &[Vec<Vec<Scalar>>]) -> Result<ModuleRep> {
    let d = corep.len();
    let n = coalg.dim();
    if corep.iter().any(|row| row.len() != d || row.iter().any(|c| c.len() != n)) {
        return Err(Error::Structure(format!(
            "comodule {name:?}: expected a {d}x{d} array of length-{n} coefficient vectors"
        )));
    }
    let action = (0..n)
        .map(|i| Matrix::from_fn(d, d, coalg.field, |a, b| corep[a][b][i].clone()))
        .collect();
    ModuleRep::new(name, coalg.field, action)
}

/// The regular comodule `(C, Δ)` as a module over `C^∨`.
pub fn regular_comodule(coalg: &CopivotalCoalgebra) -> ModuleRep {
    let n = coalg.dim();
    let action = (0..n)
        .map(|i| Matrix::from_fn(n, n, coalg.field, |a, k| coalg.mu(k, a, i).clone()))
        .collect();
    ModuleRep {
        name: "reg_C".into(),
        dim: n,
        field: coalg.field,
        action,
    }
}

/// Trace of `c ↦ S(c₁) γ(c₂)`.
pub fn coalgebra_regular_indicator(coalg: &CopivotalCoalgebra) -> Result<Scalar> {
    coalg.validate()?;
    let n = coalg.dim();
    let mut total = Scalar::zero(coalg.field);
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let m = coalg.mu(k, i, j);
                if !m.is_zero() {
                    total = &total + &(&(m * &coalg.gamma[j]) * coalg.antipode.get(k, i));
                }
            }
        }
    }
    Ok(total)
}

/// Definition-level indicator of `reg_C^∨` over the dual pivotal algebra.
pub fn coalgebra_regular_dual_indicator(coalg: &CopivotalCoalgebra) -> Result<IndicatorReport> {
    let a = dualize_coalgebra(coalg)?;
    let reg = regular_comodule(coalg);
    let dual = dual_module(&a, &reg, None)?;
    fs_indicator(&a, &dual, None)
}
