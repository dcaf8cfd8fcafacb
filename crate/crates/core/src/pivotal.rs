//! Pivotal algebras `(A, S, g)`, their modules, and the indicator itself.
//!
//! Conventions used throughout:
//! - modules act on column vectors, `R(b_i)` is the action of basis element `i`;
//! - a bilinear form is a Gram matrix `M` with `b(v, w) = vᵀ M w`;
//! - `M` is invariant when `R(a)ᵀ M = M R(S(a))`, i.e. `b(a v, w) = b(v, S(a) w)`;
//! - the transposition `b(v, w) ↦ b(w, g v)` acts on Gram matrices as `M ↦ R(g)ᵀ Mᵀ`.

use std::collections::HashSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{normalize_first_nonzero, solve_in_span, Matrix};
use crate::scalars::{FieldTag, Scalar};

/// One violated axiom with the basis indices that witness it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: String,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.axiom, self.detail)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, axiom: &str, detail: impl Into<String>) {
        self.violations.push(Violation {
            axiom: axiom.to_string(),
            detail: detail.into(),
        });
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }
}

/// A named involutive algebra automorphism, stored as the matrix whose column
/// `j` is `τ(b_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Involution {
    pub name: String,
    pub matrix: Matrix,
}

/// Comultiplication constants: `Δ(b_k) = Σ c · b_i ⊗ b_j` over `images[k]`.
pub type Comultiplication = Vec<Vec<(usize, usize, Scalar)>>;

#[derive(Debug, Clone)]
pub struct PivotalAlgebra {
    field: FieldTag,
    labels: Vec<String>,
    products: Vec<Vec<(usize, Scalar)>>,
    unit: Vec<Scalar>,
    antipode: Matrix,
    hopf_antipode: Option<Matrix>,
    pivot: Vec<Scalar>,
    comult: Option<Comultiplication>,
    counit: Option<Vec<Scalar>>,
    integral: Option<Vec<Scalar>>,
    trace_form: Option<Vec<Scalar>>,
    involutions: Vec<Involution>,
}

fn structure(msg: impl Into<String>) -> Error {
    Error::Structure(msg.into())
}

fn check_vec(name: &str, v: &[Scalar], n: usize, field: FieldTag) -> Result<Vec<Scalar>> {
    if v.len() != n {
        return Err(structure(format!("{name} has length {}, expected {n}", v.len())));
    }
    Ok(v.iter().map(|x| x.coerce(field)).collect::<std::result::Result<_, _>>()?)
}

fn check_square(name: &str, m: &Matrix, n: usize, field: FieldTag) -> Result<()> {
    if m.rows() != n || m.cols() != n {
        return Err(structure(format!(
            "{name} is {}x{}, expected {n}x{n}",
            m.rows(),
            m.cols()
        )));
    }
    if m.field() != field {
        return Err(structure(format!("{name} is over {}, expected {field}", m.field())));
    }
    Ok(())
}

impl PivotalAlgebra {
    /// Builds an algebra from sparse structure constants `(i, j, k, c)` meaning
    /// `b_i b_j` has coefficient `c` on `b_k`. Duplicate triples are rejected.
    pub fn new(
        field: FieldTag,
        labels: Vec<String>,
        mult: Vec<(usize, usize, usize, Scalar)>,
        unit: Vec<Scalar>,
        antipode: Matrix,
        pivot: Vec<Scalar>,
    ) -> Result<PivotalAlgebra> {
        let n = labels.len();
        if n == 0 {
            return Err(structure("algebra has no basis"));
        }
        let mut seen_labels = HashSet::new();
        for l in &labels {
            if !seen_labels.insert(l.as_str()) {
                return Err(structure(format!("duplicate basis label {l:?}")));
            }
        }
        let mut products = vec![Vec::new(); n * n];
        let mut seen = HashSet::new();
        for (i, j, k, c) in mult {
            if i >= n || j >= n || k >= n {
                return Err(structure(format!("structure constant ({i}, {j}, {k}) out of range for dim {n}")));
            }
            if !seen.insert((i, j, k)) {
                return Err(structure(format!("duplicate structure constant ({i}, {j}, {k})")));
            }
            let c = c.coerce(field)?;
            if !c.is_zero() {
                products[i * n + j].push((k, c));
            }
        }
        for p in &mut products {
            p.sort_by_key(|(k, _)| *k);
        }
        let unit = check_vec("unit", &unit, n, field)?;
        let pivot = check_vec("pivotal element", &pivot, n, field)?;
        check_square("antipode", &antipode, n, field)?;
        Ok(PivotalAlgebra {
            field,
            labels,
            products,
            unit,
            antipode,
            hopf_antipode: None,
            pivot,
            comult: None,
            counit: None,
            integral: None,
            trace_form: None,
            involutions: Vec::new(),
        })
    }

    pub fn with_comultiplication(mut self, comult: Vec<(usize, usize, usize, Scalar)>) -> Result<Self> {
        let n = self.dim();
        let mut images: Comultiplication = vec![Vec::new(); n];
        let mut seen = HashSet::new();
        for (k, i, j, c) in comult {
            if i >= n || j >= n || k >= n {
                return Err(structure(format!("comultiplication constant ({k}, {i}, {j}) out of range")));
            }
            if !seen.insert((k, i, j)) {
                return Err(structure(format!("duplicate comultiplication constant ({k}, {i}, {j})")));
            }
            let c = c.coerce(self.field)?;
            if !c.is_zero() {
                images[k].push((i, j, c));
            }
        }
        self.comult = Some(images);
        Ok(self)
    }

    pub fn with_counit(mut self, counit: Vec<Scalar>) -> Result<Self> {
        self.counit = Some(check_vec("counit", &counit, self.dim(), self.field)?);
        Ok(self)
    }

    pub fn with_integral(mut self, integral: Vec<Scalar>) -> Result<Self> {
        self.integral = Some(check_vec("integral", &integral, self.dim(), self.field)?);
        Ok(self)
    }

    pub fn with_trace_form(mut self, phi: Vec<Scalar>) -> Result<Self> {
        self.trace_form = Some(check_vec("trace form", &phi, self.dim(), self.field)?);
        Ok(self)
    }

    pub fn with_involution(mut self, name: &str, matrix: Matrix) -> Result<Self> {
        check_square(&format!("involution {name:?}"), &matrix, self.dim(), self.field)?;
        if self.involutions.iter().any(|t| t.name == name) {
            return Err(structure(format!("duplicate involution {name:?}")));
        }
        self.involutions.push(Involution {
            name: name.to_string(),
            matrix,
        });
        Ok(self)
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

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn pivot(&self) -> &[Scalar] {
        &self.pivot
    }

    /// Matrix whose column `j` is `S(b_j)`.
    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    /// The Hopf antipode used to build integral idempotents. Differs from
    /// [`Self::antipode`] once the pivotal structure has been twisted.
    pub fn hopf_antipode(&self) -> &Matrix {
        self.hopf_antipode.as_ref().unwrap_or(&self.antipode)
    }

    pub fn comultiplication(&self) -> Option<&Comultiplication> {
        self.comult.as_ref()
    }

    pub fn counit(&self) -> Option<&[Scalar]> {
        self.counit.as_deref()
    }

    pub fn integral(&self) -> Option<&[Scalar]> {
        self.integral.as_deref()
    }

    pub fn trace_form(&self) -> Option<&[Scalar]> {
        self.trace_form.as_deref()
    }

    pub fn involutions(&self) -> &[Involution] {
        &self.involutions
    }

    /// Nonzero structure constants of `b_i b_j`.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.products[i * self.dim() + j]
    }

    /// All nonzero structure constants as `(i, j, k, c)`, sorted.
    pub fn structure_constants(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.product(i, j) {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn zero_vec(&self) -> Vec<Scalar> {
        vec![Scalar::zero(self.field); self.dim()]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero_vec();
        v[i] = Scalar::one(self.field);
        v
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_vec();
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x * y;
                for (k, c) in self.product(i, j) {
                    out[*k] = &out[*k] + &(&xy * c);
                }
            }
        }
        out
    }

    /// Matrix of `x ↦ b_i x`.
    pub fn left_mult_matrix(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim(), self.dim(), self.field);
        for j in 0..self.dim() {
            for (k, c) in self.product(i, j) {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    /// Matrix of `x ↦ x b_i`.
    pub fn right_mult_matrix(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim(), self.dim(), self.field);
        for j in 0..self.dim() {
            for (k, c) in self.product(j, i) {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    pub fn apply(&self, map: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
        map.mul_vec(v).expect("map matches algebra dimension")
    }

    pub fn involution(&self, name: &str) -> Result<&Matrix> {
        self.involutions
            .iter()
            .find(|t| t.name == name)
            .map(|t| &t.matrix)
            .ok_or_else(|| Error::UnknownInvolution(name.to_string()))
    }

    /// `S ∘ τ` for the named involution, or `S` when untwisted.
    pub fn twisted_antipode(&self, twist: Option<&str>) -> Result<Matrix> {
        match twist {
            None => Ok(self.antipode.clone()),
            Some(name) => Ok(self.antipode.mul(self.involution(name)?)?),
        }
    }

    fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    fn describe(&self, v: &[Scalar]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c})*{}", self.label(i)))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// Checks every pivotal-algebra axiom and every registered involution.
pub fn validate_pivotal(a: &PivotalAlgebra) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = a.dim();
    let basis: Vec<Vec<Scalar>> = (0..n).map(|i| a.basis_vec(i)).collect();
    let products: Vec<Vec<Scalar>> = (0..n * n)
        .map(|ij| a.mul(&basis[ij / n], &basis[ij % n]))
        .collect();

    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let left = a.mul(&products[i * n + j], &basis[k]);
                let right = a.mul(&basis[i], &products[j * n + k]);
                if left != right {
                    report.push(
                        "associativity",
                        format!("({}*{})*{} != {}*({}*{})", a.label(i), a.label(j), a.label(k), a.label(i), a.label(j), a.label(k)),
                    );
                }
            }
        }
    }
    for i in 0..n {
        if a.mul(&a.unit, &basis[i]) != basis[i] || a.mul(&basis[i], &a.unit) != basis[i] {
            report.push("unit", format!("1*{0} or {0}*1 differs from {0}", a.label(i)));
        }
    }

    let s = &a.antipode;
    let s_basis: Vec<Vec<Scalar>> = (0..n).map(|i| s.column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = a.apply(s, &products[i * n + j]);
            let rhs = a.mul(&s_basis[j], &s_basis[i]);
            if lhs != rhs {
                report.push(
                    "anti-multiplicativity",
                    format!("S({0}*{1}) != S({1})*S({0})", a.label(i), a.label(j)),
                );
            }
        }
    }
    if a.apply(s, &a.unit) != a.unit {
        report.push("anti-multiplicativity", "S(1) != 1");
    }

    let g = &a.pivot;
    let sg = a.apply(s, g);
    if a.mul(&sg, g) != a.unit || a.mul(g, &sg) != a.unit {
        report.push("S(g) = g^-1", format!("S(g)*g = {}", a.describe(&a.mul(&sg, g))));
    }
    for i in 0..n {
        let s2 = a.apply(s, &s_basis[i]);
        if a.mul(&s2, g) != a.mul(g, &basis[i]) {
            report.push("S^2(a) = g a g^-1", format!("fails at basis element {}", a.label(i)));
        }
    }

    for inv in &a.involutions {
        let t = &inv.matrix;
        let name = &inv.name;
        let t_basis: Vec<Vec<Scalar>> = (0..n).map(|i| t.column(i)).collect();
        if t.mul(t).map(|m| m != Matrix::identity(n, a.field)).unwrap_or(true) {
            report.push("involution: tau^2 = id", name.to_string());
        }
        for i in 0..n {
            for j in 0..n {
                if a.apply(t, &products[i * n + j]) != a.mul(&t_basis[i], &t_basis[j]) {
                    report.push(
                        "involution: multiplicative",
                        format!("{name}({0}*{1}) != {name}({0})*{name}({1})", a.label(i), a.label(j)),
                    );
                }
            }
        }
        if a.apply(t, g) != *g {
            report.push("involution: tau(g) = g", name.to_string());
        }
        if a.apply(t, &a.unit) != a.unit {
            report.push("involution: tau(1) = 1", name.to_string());
        }
        let commutes = match (t.mul(s), s.mul(t)) {
            (Ok(ts), Ok(st)) => ts == st,
            _ => false,
        };
        if !commutes {
            report.push("involution: tau S = S tau", name.to_string());
        }
    }
    report
}

/// A left module: one `dim × dim` action matrix per algebra basis element.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleRep {
    pub name: String,
    pub dim: usize,
    pub field: FieldTag,
    pub action: Vec<Matrix>,
}

impl ModuleRep {
    pub fn new(name: &str, field: FieldTag, action: Vec<Matrix>) -> Result<ModuleRep> {
        let dim = action.first().map_or(0, Matrix::rows);
        for (i, m) in action.iter().enumerate() {
            if m.rows() != dim || m.cols() != dim {
                return Err(structure(format!(
                    "module {name:?}: action matrix {i} is {}x{}, expected {dim}x{dim}",
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != field {
                return Err(structure(format!("module {name:?}: action matrix {i} is over {}", m.field())));
            }
        }
        Ok(ModuleRep {
            name: name.to_string(),
            dim,
            field,
            action,
        })
    }

    /// `R(v)` for an algebra element given in coordinates.
    pub fn act(&self, v: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.dim, self.dim, self.field);
        for (i, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            out = out
                .add(&self.action[i].scale(c))
                .expect("action matrices share a shape");
        }
        out
    }

    pub fn character(&self, v: &[Scalar]) -> Scalar {
        self.act(v).trace().expect("square action")
    }

    /// `χ(b_i)` for every basis element.
    pub fn character_vector(&self) -> Vec<Scalar> {
        self.action
            .iter()
            .map(|m| m.trace().expect("square action"))
            .collect()
    }

    /// Conjugates every action matrix: `P⁻¹ R(b) P`.
    pub fn conjugate(&self, p: &Matrix) -> Result<ModuleRep> {
        let pinv = p
            .inverse()?
            .ok_or_else(|| structure("conjugating matrix is singular"))?;
        let action = self
            .action
            .iter()
            .map(|m| pinv.mul(m).and_then(|x| x.mul(p)))
            .collect::<std::result::Result<_, _>>()?;
        Ok(ModuleRep {
            name: self.name.clone(),
            dim: self.dim,
            field: self.field,
            action,
        })
    }
}

/// Checks that `V` is a unital module over `A`.
pub fn validate_module(a: &PivotalAlgebra, v: &ModuleRep) -> ValidationReport {
    let mut report = ValidationReport::default();
    if v.action.len() != a.dim() {
        report.push(
            "module shape",
            format!("module {:?} has {} action matrices, algebra has dim {}", v.name, v.action.len(), a.dim()),
        );
        return report;
    }
    if v.field != a.field() {
        report.push("module shape", format!("module {:?} is over {}, algebra over {}", v.name, v.field, a.field()));
        return report;
    }
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let lhs = v.action[i].mul(&v.action[j]).expect("square");
            let mut rhs = Matrix::zeros(v.dim, v.dim, v.field);
            for (k, c) in a.product(i, j) {
                rhs = rhs.add(&v.action[*k].scale(c)).expect("square");
            }
            if lhs != rhs {
                report.push(
                    "module action",
                    format!("R({0})R({1}) != R({0}*{1}) at (i, j) = ({i}, {j})", a.label(i), a.label(j)),
                );
            }
        }
    }
    if v.act(a.unit()) != Matrix::identity(v.dim, v.field) {
        report.push("module unit", format!("R(1) is not the identity on {:?}", v.name));
    }
    report
}

pub fn regular_module(a: &PivotalAlgebra) -> ModuleRep {
    ModuleRep {
        name: "reg".into(),
        dim: a.dim(),
        field: a.field(),
        action: (0..a.dim()).map(|i| a.left_mult_matrix(i)).collect(),
    }
}

/// `R^∨(b_i) = R(S^τ(b_i))ᵀ`.
pub fn dual_module(a: &PivotalAlgebra, v: &ModuleRep, twist: Option<&str>) -> Result<ModuleRep> {
    let st = a.twisted_antipode(twist)?;
    let action = (0..a.dim()).map(|i| v.act(&st.column(i)).transpose()).collect();
    Ok(ModuleRep {
        name: format!("{}^*", v.name),
        dim: v.dim,
        field: v.field,
        action,
    })
}

/// Basis of `{X : L X = X R for every pair (L, R)}` with `X` of shape
/// `rows × cols`, returned as matrices in canonical kernel order.
pub fn intertwiner_kernel<'a>(
    pairs: impl IntoIterator<Item = (&'a Matrix, &'a Matrix)>,
    rows: usize,
    cols: usize,
    field: FieldTag,
) -> Vec<Matrix> {
    let unknowns = rows * cols;
    let mut equations: Vec<Vec<Scalar>> = Vec::new();
    let zero = Scalar::zero(field);
    for (l, r) in pairs {
        for a in 0..rows {
            for b in 0..cols {
                let mut eq = vec![zero.clone(); unknowns];
                for k in 0..rows {
                    let c = l.get(a, k);
                    if !c.is_zero() {
                        eq[k * cols + b] = &eq[k * cols + b] + c;
                    }
                }
                for k in 0..cols {
                    let c = r.get(k, b);
                    if !c.is_zero() {
                        eq[a * cols + k] = &eq[a * cols + k] - c;
                    }
                }
                if eq.iter().any(|x| !x.is_zero()) {
                    equations.push(eq);
                }
            }
        }
    }
    let system = if equations.is_empty() {
        Matrix::zeros(0, unknowns, field)
    } else {
        Matrix::from_rows(field, equations).expect("equations share the field")
    };
    system
        .kernel_basis()
        .into_iter()
        .map(|v| Matrix::from_flat(rows, cols, field, v).expect("kernel vector length"))
        .collect()
}

/// Canonical basis of `Hom_A(V, W)` as `dim W × dim V` matrices.
pub fn hom_space(v: &ModuleRep, w: &ModuleRep) -> Result<Vec<Matrix>> {
    if v.action.len() != w.action.len() {
        return Err(structure("modules over algebras of different dimension"));
    }
    Ok(intertwiner_kernel(
        w.action.iter().zip(&v.action),
        w.dim,
        v.dim,
        v.field,
    ))
}

/// Invariant bilinear forms on a module, as Gram matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct FormBasis {
    pub module: String,
    pub twist: Option<String>,
    pub forms: Vec<Matrix>,
}

/// Gram matrices `M` with `R(b_i)ᵀ M = M R(S^τ(b_i))` for every `i`.
pub fn invariant_form_space(a: &PivotalAlgebra, v: &ModuleRep, twist: Option<&str>) -> Result<FormBasis> {
    let st = a.twisted_antipode(twist)?;
    let lefts: Vec<Matrix> = v.action.iter().map(Matrix::transpose).collect();
    let rights: Vec<Matrix> = (0..a.dim()).map(|i| v.act(&st.column(i))).collect();
    let forms = intertwiner_kernel(lefts.iter().zip(&rights), v.dim, v.dim, v.field);
    Ok(FormBasis {
        module: v.name.clone(),
        twist: twist.map(str::to_string),
        forms,
    })
}

/// `M ↦ Gᵀ Mᵀ` where `G` is the action of the pivotal element.
pub fn flip_form(pivot_action: &Matrix, m: &Matrix) -> Matrix {
    pivot_action
        .transpose()
        .mul(&m.transpose())
        .expect("form and pivot action share a shape")
}

/// Matrix of the flip on the span of `forms`; column `j` holds the coordinates
/// of the flipped `forms[j]`.
pub fn flip_operator(pivot_action: &Matrix, forms: &[Matrix], field: FieldTag) -> Result<Matrix> {
    let k = forms.len();
    let basis: Vec<Vec<Scalar>> = forms.iter().map(|m| m.as_flat().to_vec()).collect();
    let mut op = Matrix::zeros(k, k, field);
    for (j, m) in forms.iter().enumerate() {
        let image = flip_form(pivot_action, m);
        let coords = solve_in_span(&basis, image.as_flat(), field)?;
        for (i, c) in coords.into_iter().enumerate() {
            op.set(i, j, c);
        }
    }
    Ok(op)
}

pub fn transposition_on_forms(a: &PivotalAlgebra, v: &ModuleRep, forms: &FormBasis) -> Result<Matrix> {
    flip_operator(&v.act(a.pivot()), &forms.forms, v.field)
}

#[derive(Debug, Clone, PartialEq)]
pub struct IndicatorReport {
    pub nu: Scalar,
    pub dim_bil: usize,
    pub dim_plus: usize,
    pub dim_minus: usize,
    pub end_dim: usize,
    pub self_dual: bool,
    pub abs_simple: bool,
    pub canonical_form: Option<Matrix>,
}

/// Dimensions of the `±1` eigenspaces of an involutive operator.
pub fn eigenspace_dims(op: &Matrix) -> Result<(usize, usize)> {
    let k = op.rows();
    let id = Matrix::identity(k, op.field());
    let plus = k - op.sub(&id)?.rank();
    let minus = k - op.add(&id)?.rank();
    Ok((plus, minus))
}

/// Scales a matrix so its first nonzero entry in row-major order is 1.
pub fn normalize_form(m: &Matrix) -> Matrix {
    let flat = normalize_first_nonzero(m.as_flat().to_vec());
    Matrix::from_flat(m.rows(), m.cols(), m.field(), flat).expect("same shape")
}

/// Whether the span of `maps` contains an invertible matrix. Tries each basis
/// element, then a fixed pseudo-random sequence of integer combinations; a
/// nonzero determinant polynomial on the span is detected with overwhelming
/// probability and the answer is deterministic.
pub fn span_contains_invertible(maps: &[Matrix]) -> Result<bool> {
    let Some(first) = maps.first() else {
        return Ok(false);
    };
    if !first.is_square() {
        return Ok(false);
    }
    for m in maps {
        if !m.det_bareiss()?.is_zero() {
            return Ok(true);
        }
    }
    if maps.len() == 1 {
        return Ok(false);
    }
    let field = first.field();
    let mut rng = ChaCha8Rng::seed_from_u64(0x005e_edf5);
    for _ in 0..12 {
        let mut combo = Matrix::zeros(first.rows(), first.cols(), field);
        for m in maps {
            let c = Scalar::from_int(field, rng.gen_range(-9..=9));
            combo = combo.add(&m.scale(&c))?;
        }
        if !combo.det_bareiss()?.is_zero() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The indicator `ν^τ(V)` as the trace of the transposition on invariant forms.
pub fn fs_indicator(a: &PivotalAlgebra, v: &ModuleRep, twist: Option<&str>) -> Result<IndicatorReport> {
    let forms = invariant_form_space(a, v, twist)?;
    let op = transposition_on_forms(a, v, &forms)?;
    let nu = op.trace()?;
    let (dim_plus, dim_minus) = eigenspace_dims(&op)?;
    let end_dim = hom_space(v, v)?.len();
    let dual = dual_module(a, v, twist)?;
    let self_dual = span_contains_invertible(&hom_space(v, &dual)?)?;
    let canonical_form = match forms.forms.as_slice() {
        [m] => Some(normalize_form(m)),
        _ => None,
    };
    Ok(IndicatorReport {
        nu,
        dim_bil: forms.forms.len(),
        dim_plus,
        dim_minus,
        end_dim,
        self_dual,
        abs_simple: end_dim == 1,
        canonical_form,
    })
}

/// `A^τ = (A, S∘τ, g)`.
pub fn twist_algebra(a: &PivotalAlgebra, tau: &str) -> Result<PivotalAlgebra> {
    let mut out = a.clone();
    out.antipode = a.twisted_antipode(Some(tau))?;
    out.hopf_antipode = Some(a.hopf_antipode().clone());
    Ok(out)
}

/// `(A, T_α, 1)` with `T_α(h) = α(h₁) S(h₂)` for a central character `α`.
pub fn pivotal_from_character(a: &PivotalAlgebra, alpha: &[Scalar]) -> Result<PivotalAlgebra> {
    let comult = a.comultiplication().ok_or(Error::MissingComultiplication)?;
    let n = a.dim();
    let field = a.field();
    let alpha = check_vec("character", alpha, n, field)?;
    let eval = |v: &[Scalar]| -> Scalar {
        v.iter()
            .zip(&alpha)
            .fold(Scalar::zero(field), |acc, (x, y)| &acc + &(x * y))
    };
    if !eval(a.unit()).is_one() {
        return Err(Error::NotCentralCharacter("alpha(1) != 1".into()));
    }
    for i in 0..n {
        for j in 0..n {
            let prod = a.mul(&a.basis_vec(i), &a.basis_vec(j));
            if eval(&prod) != &alpha[i] * &alpha[j] {
                return Err(Error::NotCentralCharacter(format!(
                    "alpha({0}*{1}) != alpha({0})alpha({1})",
                    a.label(i),
                    a.label(j)
                )));
            }
        }
    }
    for (k, terms) in comult.iter().enumerate() {
        let mut left = a.zero_vec();
        let mut right = a.zero_vec();
        for (i, j, c) in terms {
            left[*j] = &left[*j] + &(c * &alpha[*i]);
            right[*i] = &right[*i] + &(c * &alpha[*j]);
        }
        if left != right {
            return Err(Error::NotCentralCharacter(format!(
                "alpha(h1)h2 != alpha(h2)h1 at h = {}",
                a.label(k)
            )));
        }
    }
    let s = a.hopf_antipode();
    let mut t = Matrix::zeros(n, n, field);
    for (k, terms) in comult.iter().enumerate() {
        let mut col = a.zero_vec();
        for (i, j, c) in terms {
            let coeff = c * &alpha[*i];
            if coeff.is_zero() {
                continue;
            }
            for r in 0..n {
                let sj = s.get(r, *j);
                if !sj.is_zero() {
                    col[r] = &col[r] + &(&coeff * sj);
                }
            }
        }
        for (r, x) in col.into_iter().enumerate() {
            t.set(r, k, x);
        }
    }
    let mut out = a.clone();
    out.hopf_antipode = Some(s.clone());
    out.antipode = t;
    out.pivot = a.unit().to_vec();
    out.involutions.clear();
    Ok(out)
}
