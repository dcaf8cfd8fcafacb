//! The JSON input format.
//!
//! A document names a field, exactly one structure section (`algebra`,
//! `group`, `scheme` or `coalgebra`) and optional modules, involutions and
//! extra data. Scalars are strings in the scalar grammar or JSON integers.
//! [`InputDocument::build`] turns a parsed document into algebra objects;
//! axiom checking is separate ([`LoadedDocument::validate`]).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::constructors::{
    comodule_to_module, dualize_coalgebra, extend_from_generators, group_algebra, group_grouplike, group_involution,
    scheme_involution, scheme_to_grouplike, CayleyTable, CopivotalCoalgebra, SchemeRelations,
};
use crate::error::{Error, Result};
use crate::formulas::{hopf_integral_idempotent, symmetric_form_data, GroupLikeData};
use crate::linalg::Matrix;
use crate::pivotal::{pivotal_from_character, validate_module, validate_pivotal, ModuleRep, PivotalAlgebra, ValidationReport};
use crate::scalars::{parse_scalar, FieldTag, Scalar};

/// A scalar literal: an integer or a string in the scalar grammar.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarLit {
    Int(i64),
    Text(String),
}

impl ScalarLit {
    pub fn parse(&self, field: FieldTag, path: &str) -> Result<Scalar> {
        match self {
            ScalarLit::Int(n) => Ok(Scalar::from_int(field, *n)),
            ScalarLit::Text(s) => parse_scalar(s, field).map_err(|e| Error::Document(format!("{path}: {e} in {s:?}"))),
        }
    }
}

impl From<i64> for ScalarLit {
    fn from(n: i64) -> Self {
        ScalarLit::Int(n)
    }
}

impl From<&Scalar> for ScalarLit {
    fn from(s: &Scalar) -> Self {
        match s.as_i64() {
            Some(n) => ScalarLit::Int(n),
            None => ScalarLit::Text(s.to_canonical_string()),
        }
    }
}

/// Rows of scalar literals.
pub type MatrixLit = Vec<Vec<ScalarLit>>;

/// `(i, j, k, c)`: for `mult`, `b_i b_j` has coefficient `c` on `b_k`; for
/// `comult`, `Δ(b_i)` has coefficient `c` on `b_j ⊗ b_k`.
pub type Triple = (usize, usize, usize, ScalarLit);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSection {
    pub basis: Vec<String>,
    pub mult: Vec<Triple>,
    pub unit: Vec<ScalarLit>,
    /// `antipode[j]` holds the coordinates of `S(b_j)`.
    pub antipode: Vec<Vec<ScalarLit>>,
    pub pivot: Vec<ScalarLit>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comult: Option<Vec<Triple>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<ScalarLit>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grouplike: Option<GroupLikeSection>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupLikeSection {
    pub valency: Vec<ScalarLit>,
    pub star: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSection {
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchemeSection {
    pub relations: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoalgebraSection {
    pub basis: Vec<String>,
    pub comult: Vec<Triple>,
    pub counit: Vec<ScalarLit>,
    /// `antipode[j]` holds the coordinates of `S(c_j)`.
    pub antipode: Vec<Vec<ScalarLit>>,
    pub gamma: Vec<ScalarLit>,
}

/// A module given by exactly one of: all action matrices, generator images,
/// or (coalgebra documents) a comodule coefficient array.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSection {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<MatrixLit>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<BTreeMap<String, MatrixLit>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corep: Option<Vec<Vec<Vec<ScalarLit>>>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InvolutionSection {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perm: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub images: Option<Vec<Vec<ScalarLit>>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterTwistSection {
    pub name: String,
    pub alpha: Vec<ScalarLit>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterSection {
    pub name: String,
    pub dim: usize,
    pub values: Vec<ScalarLit>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scheme: Option<SchemeSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coalgebra: Option<CoalgebraSection>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub modules: Vec<ModuleSection>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub involutions: Vec<InvolutionSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub integral: Option<Vec<ScalarLit>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace_form: Option<Vec<ScalarLit>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub character_twists: Vec<CharacterTwistSection>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub characters: Vec<CharacterSection>,
    /// The modules form a complete list of absolutely simple modules.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub complete_simples: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SectionKind {
    Algebra,
    Group,
    Scheme,
    Coalgebra,
}

/// A character given by values `χ(b_i)` on the basis, without a module.
#[derive(Debug, Clone, PartialEq)]
pub struct Character {
    pub name: String,
    pub dim: usize,
    pub values: Vec<Scalar>,
}

#[derive(Debug, Clone)]
pub struct LoadedDocument {
    pub description: Option<String>,
    pub field: FieldTag,
    pub kind: SectionKind,
    pub algebra: PivotalAlgebra,
    pub modules: Vec<ModuleRep>,
    pub grouplike: Option<GroupLikeData>,
    /// Involutions that permute the basis, as index permutations.
    pub index_involutions: Vec<(String, Vec<usize>)>,
    pub character_twists: Vec<(String, Vec<Scalar>)>,
    pub characters: Vec<Character>,
    pub complete_simples: bool,
    pub group: Option<CayleyTable>,
    pub scheme: Option<SchemeRelations>,
    /// For schemes, the adjacency matrices acting on the points.
    pub standard_module: Option<ModuleRep>,
    pub coalgebra: Option<CopivotalCoalgebra>,
}

fn vector(field: FieldTag, lits: &[ScalarLit], path: &str) -> Result<Vec<Scalar>> {
    lits.iter()
        .enumerate()
        .map(|(i, l)| l.parse(field, &format!("{path}[{i}]")))
        .collect()
}

fn matrix(field: FieldTag, rows: &MatrixLit, path: &str) -> Result<Matrix> {
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(r, row)| vector(field, row, &format!("{path}[{r}]")))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, parsed).map_err(|e| Error::Document(format!("{path}: {e}")))
}

/// Matrix whose column `j` is `images[j]`.
fn images_matrix(field: FieldTag, images: &[Vec<ScalarLit>], n: usize, path: &str) -> Result<Matrix> {
    if images.len() != n || images.iter().any(|v| v.len() != n) {
        return Err(Error::Document(format!("{path}: expected {n} image vectors of length {n}")));
    }
    Ok(matrix(field, &images.to_vec(), path)?.transpose())
}

fn triples(field: FieldTag, ts: &[Triple], path: &str) -> Result<Vec<(usize, usize, usize, Scalar)>> {
    ts.iter()
        .enumerate()
        .map(|(t, (i, j, k, c))| Ok((*i, *j, *k, c.parse(field, &format!("{path}[{t}]"))?)))
        .collect()
}

fn check_perm(perm: &[usize], n: usize, path: &str) -> Result<()> {
    let mut seen = vec![false; n];
    if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
        return Err(Error::Document(format!("{path}: not a permutation of {n} indices")));
    }
    Ok(())
}

/// The index permutation of a permutation matrix, if it is one.
fn as_permutation(m: &Matrix) -> Option<Vec<usize>> {
    (0..m.cols())
        .map(|j| {
            let col = m.column(j);
            let nz: Vec<usize> = (0..col.len()).filter(|&i| !col[i].is_zero()).collect();
            match nz.as_slice() {
                [i] if col[*i].is_one() => Some(*i),
                _ => None,
            }
        })
        .collect()
}

impl InputDocument {
    pub fn from_json(text: &str) -> Result<InputDocument> {
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize") + "\n"
    }

    pub fn build(&self) -> Result<LoadedDocument> {
        let field: FieldTag = self.field.parse()?;
        let sections = [
            self.algebra.is_some(),
            self.group.is_some(),
            self.scheme.is_some(),
            self.coalgebra.is_some(),
        ];
        if sections.iter().filter(|&&b| b).count() != 1 {
            return Err(Error::Document(
                "exactly one of \"algebra\", \"group\", \"scheme\", \"coalgebra\" must be present".into(),
            ));
        }
        let mut grouplike = None;
        let mut group = None;
        let mut scheme = None;
        let mut standard_module = None;
        let mut coalgebra = None;
        let (kind, mut algebra) = if let Some(sec) = &self.algebra {
            let n = sec.basis.len();
            let mut a = PivotalAlgebra::new(
                field,
                sec.basis.clone(),
                triples(field, &sec.mult, "algebra.mult")?,
                vector(field, &sec.unit, "algebra.unit")?,
                images_matrix(field, &sec.antipode, n, "algebra.antipode")?,
                vector(field, &sec.pivot, "algebra.pivot")?,
            )?;
            if let Some(c) = &sec.comult {
                a = a.with_comultiplication(triples(field, c, "algebra.comult")?)?;
            }
            if let Some(c) = &sec.counit {
                a = a.with_counit(vector(field, c, "algebra.counit")?)?;
            }
            if let Some(gl) = &sec.grouplike {
                check_perm(&gl.star, n, "algebra.grouplike.star")?;
                grouplike = Some(GroupLikeData::from_algebra(
                    &a,
                    vector(field, &gl.valency, "algebra.grouplike.valency")?,
                    gl.star.clone(),
                )?);
            }
            (SectionKind::Algebra, a)
        } else if let Some(sec) = &self.group {
            let table = CayleyTable::new(sec.elements.clone(), sec.table.clone())?;
            let a = group_algebra(&table, field)?;
            grouplike = Some(group_grouplike(&table, field)?);
            group = Some(table);
            (SectionKind::Group, a)
        } else if let Some(sec) = &self.scheme {
            let rels = SchemeRelations::new(sec.relations.clone())?;
            let built = scheme_to_grouplike(&rels, field)?;
            grouplike = Some(built.grouplike);
            standard_module = Some(built.standard);
            scheme = Some(rels);
            (SectionKind::Scheme, built.algebra)
        } else {
            let sec = self.coalgebra.as_ref().expect("one section present");
            let n = sec.basis.len();
            let coalg = CopivotalCoalgebra::new(
                field,
                sec.basis.clone(),
                triples(field, &sec.comult, "coalgebra.comult")?,
                vector(field, &sec.counit, "coalgebra.counit")?,
                images_matrix(field, &sec.antipode, n, "coalgebra.antipode")?,
                vector(field, &sec.gamma, "coalgebra.gamma")?,
            )?;
            let a = dualize_coalgebra(&coalg)?;
            coalgebra = Some(coalg);
            (SectionKind::Coalgebra, a)
        };
        let n = algebra.dim();

        if let Some(l) = &self.integral {
            algebra = algebra.with_integral(vector(field, l, "integral")?)?;
        }
        if let Some(phi) = &self.trace_form {
            algebra = algebra.with_trace_form(vector(field, phi, "trace_form")?)?;
        }

        let mut index_involutions = Vec::new();
        for (t, inv) in self.involutions.iter().enumerate() {
            let path = format!("involutions[{t}]");
            let m = match (&inv.perm, &inv.images) {
                (Some(perm), None) => {
                    check_perm(perm, n, &path)?;
                    match (&group, &grouplike, kind) {
                        (Some(table), _, _) => group_involution(table, perm, field)?,
                        (None, Some(gl), SectionKind::Scheme) => scheme_involution(gl, perm)?,
                        _ => Matrix::permutation(perm, field),
                    }
                }
                (None, Some(images)) => images_matrix(field, images, n, &path)?,
                _ => {
                    return Err(Error::Document(format!("{path}: give exactly one of \"perm\", \"images\"")));
                }
            };
            if let Some(p) = as_permutation(&m) {
                index_involutions.push((inv.name.clone(), p));
            }
            algebra = algebra.with_involution(&inv.name, m)?;
        }

        let mut modules = Vec::new();
        for (t, sec) in self.modules.iter().enumerate() {
            let path = format!("modules[{t}]");
            let module = match (&sec.action, &sec.generators, &sec.corep) {
                (Some(action), None, None) => {
                    if action.len() != n {
                        return Err(Error::Document(format!(
                            "{path}.action: expected {n} matrices, found {}",
                            action.len()
                        )));
                    }
                    let ms = action
                        .iter()
                        .enumerate()
                        .map(|(i, m)| matrix(field, m, &format!("{path}.action[{i}]")))
                        .collect::<Result<Vec<_>>>()?;
                    ModuleRep::new(&sec.name, field, ms)?
                }
                (None, Some(gens), None) => {
                    let mut parsed = Vec::new();
                    for (label, m) in gens {
                        let idx = algebra
                            .labels()
                            .iter()
                            .position(|l| l == label)
                            .ok_or_else(|| Error::Document(format!("{path}.generators: unknown basis label {label:?}")))?;
                        parsed.push((idx, matrix(field, m, &format!("{path}.generators.{label}"))?));
                    }
                    ModuleRep::new(&sec.name, field, extend_from_generators(&algebra, &parsed)?)?
                }
                (None, None, Some(corep)) => {
                    let coalg = coalgebra
                        .as_ref()
                        .ok_or_else(|| Error::Document(format!("{path}.corep: only valid for coalgebra documents")))?;
                    let parsed = corep
                        .iter()
                        .enumerate()
                        .map(|(a, row)| {
                            row.iter()
                                .enumerate()
                                .map(|(b, c)| vector(field, c, &format!("{path}.corep[{a}][{b}]")))
                                .collect::<Result<Vec<_>>>()
                        })
                        .collect::<Result<Vec<_>>>()?;
                    comodule_to_module(coalg, &sec.name, &parsed)?
                }
                _ => {
                    return Err(Error::Document(format!(
                        "{path}: give exactly one of \"action\", \"generators\", \"corep\""
                    )))
                }
            };
            if modules.iter().any(|m: &ModuleRep| m.name == module.name) {
                return Err(Error::Document(format!("{path}: duplicate module name {:?}", module.name)));
            }
            modules.push(module);
        }

        let character_twists = self
            .character_twists
            .iter()
            .enumerate()
            .map(|(t, c)| Ok((c.name.clone(), vector(field, &c.alpha, &format!("character_twists[{t}].alpha"))?)))
            .collect::<Result<Vec<_>>>()?;
        let characters = self
            .characters
            .iter()
            .enumerate()
            .map(|(t, c)| {
                Ok(Character {
                    name: c.name.clone(),
                    dim: c.dim,
                    values: vector(field, &c.values, &format!("characters[{t}].values"))?,
                })
            })
            .collect::<Result<Vec<_>>>()?;

        Ok(LoadedDocument {
            description: self.description.clone(),
            field,
            kind,
            algebra,
            modules,
            grouplike,
            index_involutions,
            character_twists,
            characters,
            complete_simples: self.complete_simples,
            group,
            scheme,
            standard_module,
            coalgebra,
        })
    }
}

impl LoadedDocument {
    pub fn module(&self, name: &str) -> Option<&ModuleRep> {
        self.modules.iter().find(|m| m.name == name)
    }

    /// Every axiom the document's data should satisfy.
    pub fn validate(&self) -> ValidationReport {
        let a = &self.algebra;
        let mut report = validate_pivotal(a);
        for m in &self.modules {
            report.extend(validate_module(a, m));
        }
        if let Some(gl) = &self.grouplike {
            if let Err(e) = gl.validate() {
                report.push("group-like axioms", e.to_string());
            }
        }
        if a.integral().is_some() {
            if let Err(e) = hopf_integral_idempotent(a) {
                report.push("integral", e.to_string());
            }
        }
        if a.trace_form().is_some() {
            if let Err(e) = symmetric_form_data(a) {
                report.push("trace form", e.to_string());
            }
        }
        for (name, alpha) in &self.character_twists {
            if let Err(e) = pivotal_from_character(a, alpha) {
                report.push("character twist", format!("{name}: {e}"));
            }
        }
        for c in &self.characters {
            if c.values.len() != a.dim() {
                report.push(
                    "character shape",
                    format!("{}: {} values for an algebra of dim {}", c.name, c.values.len(), a.dim()),
                );
            }
        }
        report
    }
}
