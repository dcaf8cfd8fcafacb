use fsind_core::constructors::{coalgebra_regular_dual_indicator, coalgebra_regular_indicator};
use fsind_core::document::{LoadedDocument, SectionKind};
use fsind_core::formulas::{
    doi_grouplike_indicator, fs_regular_trace_q, fs_via_separability, fs_via_symmetric, hopf_character_twist_formula,
    hopf_integral_idempotent, symmetric_form_data, symmetric_idempotent, trace_s_global, trace_s_on_image,
    SeparabilityIdempotent,
};
use fsind_core::pivotal::{fs_indicator, pivotal_from_character, IndicatorReport};
use fsind_core::qsl2::qsl2_indicator_bounded;
use fsind_core::{Error, Matrix, ModuleRep, PivotalAlgebra, Scalar};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Definition,
    Separability,
    Symmetric,
    All,
}

impl Method {
    fn wants(self, m: Method) -> bool {
        self == Method::All || self == m
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MethodResult {
    pub method: String,
    pub value: Option<String>,
    pub skipped: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndicatorRow {
    pub module: String,
    pub twist: Option<String>,
    /// `none`, `involution`, `character` or `tau` (for U_q(sl2)).
    pub twist_kind: String,
    pub dim: usize,
    pub nu: String,
    pub dim_bil: usize,
    pub dim_plus: usize,
    pub dim_minus: usize,
    pub end_dim: usize,
    pub self_dual: bool,
    pub abs_simple: bool,
    pub canonical_form: Option<Vec<Vec<String>>>,
    pub schur: Option<String>,
    pub trace_s: Option<String>,
    pub trace_q: Option<String>,
    pub methods: Vec<MethodResult>,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularRow {
    pub twist: Option<String>,
    pub trace_q: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoiRow {
    pub character: String,
    pub twist: Option<String>,
    pub nu: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GlobalTrace {
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoalgebraCheck {
    pub trace_q: String,
    pub definition: String,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    pub description: Option<String>,
    pub field: String,
    pub kind: String,
    pub rows: Vec<IndicatorRow>,
    pub regular: Vec<RegularRow>,
    pub doi: Vec<DoiRow>,
    pub trace_s_global: Option<GlobalTrace>,
    pub coalgebra: Option<CoalgebraCheck>,
    pub discrepancy: bool,
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    fn finish(mut self) -> Self {
        self.discrepancy = self.rows.iter().any(|r| !r.agree)
            || self.trace_s_global.as_ref().is_some_and(|g| !g.equal)
            || self.coalgebra.as_ref().is_some_and(|c| !c.equal);
        self
    }
}

/// How a module is twisted for one table cell.
#[derive(Debug, Clone)]
pub enum Twist {
    None,
    Involution(String),
    Character(String, Vec<Scalar>),
}

impl Twist {
    fn name(&self) -> Option<String> {
        match self {
            Twist::None => None,
            Twist::Involution(n) | Twist::Character(n, _) => Some(n.clone()),
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Twist::None => "none",
            Twist::Involution(_) => "involution",
            Twist::Character(..) => "character",
        }
    }
}

fn kind_name(kind: SectionKind) -> &'static str {
    match kind {
        SectionKind::Algebra => "algebra",
        SectionKind::Group => "group",
        SectionKind::Scheme => "scheme",
        SectionKind::Coalgebra => "coalgebra",
    }
}

fn form_strings(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(Scalar::to_canonical_string).collect())
        .collect()
}

fn computed(method: &str, value: &Scalar) -> MethodResult {
    MethodResult {
        method: method.into(),
        value: Some(value.to_canonical_string()),
        skipped: None,
    }
}

fn skipped(method: &str, reason: impl Into<String>) -> MethodResult {
    MethodResult {
        method: method.into(),
        value: None,
        skipped: Some(reason.into()),
    }
}

/// The idempotent used by the separability route: the Hopf one when an
/// integral is declared, otherwise the one coming from the trace form.
fn separability_idempotent(a: &PivotalAlgebra) -> CliResult<Option<SeparabilityIdempotent>> {
    if a.integral().is_some() && a.comultiplication().is_some() {
        return Ok(Some(hopf_integral_idempotent(a)?));
    }
    if a.trace_form().is_some() {
        return Ok(Some(symmetric_idempotent(a, &symmetric_form_data(a)?)?));
    }
    Ok(None)
}

/// Every available method for one module and twist. With a single requested
/// method, missing prerequisites are an error instead of a skipped entry.
pub fn indicator_row(doc: &LoadedDocument, v: &ModuleRep, twist: &Twist, method: Method) -> CliResult<IndicatorRow> {
    let strict = method != Method::All;
    let twisted;
    let (alg, inv) = match twist {
        Twist::None => (&doc.algebra, None),
        Twist::Involution(n) => (&doc.algebra, Some(n.as_str())),
        Twist::Character(_, alpha) => {
            twisted = pivotal_from_character(&doc.algebra, alpha)?;
            (&twisted, None)
        }
    };
    let def = fs_indicator(alg, v, inv)?;
    let mut methods = Vec::new();
    let mut values = vec![def.nu.clone()];
    if method.wants(Method::Definition) {
        methods.push(computed("definition", &def.nu));
    }
    if method.wants(Method::Separability) {
        match separability_idempotent(alg)? {
            Some(e) => {
                let nu = fs_via_separability(alg, v, &e, inv)?;
                methods.push(computed("separability", &nu));
                values.push(nu);
            }
            None if strict => {
                return Err(CliError::MissingPrerequisite(
                    "the separability route needs an integral or a trace form".into(),
                ))
            }
            None => methods.push(skipped("separability", "no integral or trace form")),
        }
    }
    let mut schur = None;
    if method.wants(Method::Symmetric) {
        if alg.trace_form().is_some() {
            let data = symmetric_form_data(alg)?;
            match fs_via_symmetric(alg, v, &data, inv) {
                Ok(r) => {
                    methods.push(computed("symmetric", &r.nu));
                    values.push(r.nu);
                    schur = Some(r.schur.to_canonical_string());
                }
                Err(Error::ZeroVolumeCharacter) => methods.push(skipped("symmetric", "character vanishes on the volume")),
                Err(e) => return Err(e.into()),
            }
        } else if strict {
            return Err(CliError::MissingPrerequisite("the symmetric route needs a trace form".into()));
        } else {
            methods.push(skipped("symmetric", "no trace form"));
        }
    }
    if method == Method::All {
        doi_method(doc, v, twist, &mut methods, &mut values)?;
        if let Twist::Character(_, alpha) = twist {
            if doc.algebra.integral().is_some() {
                let nu = hopf_character_twist_formula(&doc.algebra, v, alpha)?;
                methods.push(computed("character_formula", &nu));
                values.push(nu);
            } else {
                methods.push(skipped("character_formula", "no integral"));
            }
        }
    }
    let mut agree = values.iter().all(|x| *x == def.nu);
    let (mut trace_s, mut trace_q) = (None, None);
    if matches!(twist, Twist::None) && def.self_dual && def.abs_simple && method == Method::All {
        let (ts, tq) = trace_s_on_image(alg, v, None)?;
        let d = Scalar::from_int(v.field, v.dim as i64);
        agree &= ts == &def.nu * &v.character(alg.pivot()) && tq == &def.nu * &d;
        trace_s = Some(ts.to_canonical_string());
        trace_q = Some(tq.to_canonical_string());
    }
    Ok(row_from_report(v.name.clone(), twist.name(), twist.kind(), v.dim, &def, methods, schur, trace_s, trace_q, agree))
}

#[allow(clippy::too_many_arguments)]
fn row_from_report(
    module: String,
    twist: Option<String>,
    twist_kind: &str,
    dim: usize,
    r: &IndicatorReport,
    methods: Vec<MethodResult>,
    schur: Option<String>,
    trace_s: Option<String>,
    trace_q: Option<String>,
    agree: bool,
) -> IndicatorRow {
    IndicatorRow {
        module,
        twist,
        twist_kind: twist_kind.into(),
        dim,
        nu: r.nu.to_canonical_string(),
        dim_bil: r.dim_bil,
        dim_plus: r.dim_plus,
        dim_minus: r.dim_minus,
        end_dim: r.end_dim,
        self_dual: r.self_dual,
        abs_simple: r.abs_simple,
        canonical_form: r.canonical_form.as_ref().map(form_strings),
        schur,
        trace_s,
        trace_q,
        methods,
        agree,
    }
}

fn index_perm<'a>(doc: &'a LoadedDocument, name: &str) -> Option<&'a [usize]> {
    doc.index_involutions
        .iter()
        .find(|(n, _)| n == name)
        .map(|(_, p)| p.as_slice())
}

fn doi_method(
    doc: &LoadedDocument,
    v: &ModuleRep,
    twist: &Twist,
    methods: &mut Vec<MethodResult>,
    values: &mut Vec<Scalar>,
) -> CliResult<()> {
    let Some(gl) = &doc.grouplike else {
        return Ok(());
    };
    let perm = match twist {
        Twist::None => None,
        Twist::Involution(n) => match index_perm(doc, n) {
            Some(p) => Some(p),
            None => {
                methods.push(skipped("doi", "involution does not permute the basis"));
                return Ok(());
            }
        },
        Twist::Character(..) => {
            methods.push(skipped("doi", "character twists are not basis permutations"));
            return Ok(());
        }
    };
    match doi_grouplike_indicator(gl, &v.character_vector(), v.dim, perm) {
        Ok(nu) => {
            methods.push(computed("doi", &nu));
            values.push(nu);
        }
        Err(Error::ZeroVolumeCharacter) => methods.push(skipped("doi", "character vanishes on the volume")),
        Err(e) => return Err(e.into()),
    }
    Ok(())
}

fn all_twists(doc: &LoadedDocument) -> Vec<Twist> {
    std::iter::once(Twist::None)
        .chain(doc.algebra.involutions().iter().map(|t| Twist::Involution(t.name.clone())))
        .chain(doc.character_twists.iter().map(|(n, a)| Twist::Character(n.clone(), a.clone())))
        .collect()
}

/// Resolves a twist name against involutions first, then character twists.
pub fn find_twist(doc: &LoadedDocument, name: Option<&str>) -> CliResult<Twist> {
    let Some(name) = name else {
        return Ok(Twist::None);
    };
    if doc.algebra.involutions().iter().any(|t| t.name == name) {
        return Ok(Twist::Involution(name.into()));
    }
    if let Some((n, a)) = doc.character_twists.iter().find(|(n, _)| n == name) {
        return Ok(Twist::Character(n.clone(), a.clone()));
    }
    Err(Error::UnknownInvolution(name.into()).into())
}

fn empty_report(doc: &LoadedDocument) -> ReportDocument {
    ReportDocument {
        description: doc.description.clone(),
        field: doc.field.to_string(),
        kind: kind_name(doc.kind).into(),
        rows: Vec::new(),
        regular: Vec::new(),
        doi: Vec::new(),
        trace_s_global: None,
        coalgebra: None,
        discrepancy: false,
    }
}

pub fn indicator_report(doc: &LoadedDocument, module: &str, twist: Option<&str>, method: Method) -> CliResult<ReportDocument> {
    let v = doc
        .module(module)
        .ok_or_else(|| CliError::Usage(format!("no module named {module:?}")))?;
    let twist = find_twist(doc, twist)?;
    let mut report = empty_report(doc);
    report.rows.push(indicator_row(doc, v, &twist, method)?);
    Ok(report.finish())
}

/// Every module against every twist, with all methods, plus the regular,
/// Doi, global trace and coalgebra checks that apply.
pub fn table_report(doc: &LoadedDocument) -> CliResult<ReportDocument> {
    let twists = all_twists(doc);
    let cells: Vec<(&ModuleRep, &Twist)> = doc
        .modules
        .iter()
        .flat_map(|v| twists.iter().map(move |t| (v, t)))
        .collect();
    let rows = cells
        .par_iter()
        .map(|(v, t)| indicator_row(doc, v, t, Method::All))
        .collect::<CliResult<Vec<_>>>()?;
    let mut report = empty_report(doc);
    report.rows = rows;
    for t in &twists {
        let trace = match t {
            Twist::None => fs_regular_trace_q(&doc.algebra, None)?,
            Twist::Involution(n) => fs_regular_trace_q(&doc.algebra, Some(n))?,
            Twist::Character(_, alpha) => fs_regular_trace_q(&pivotal_from_character(&doc.algebra, alpha)?, None)?,
        };
        report.regular.push(RegularRow {
            twist: t.name(),
            trace_q: trace.to_canonical_string(),
        });
    }
    if let Some(gl) = &doc.grouplike {
        let perms = std::iter::once((None, None)).chain(
            doc.index_involutions
                .iter()
                .map(|(n, p)| (Some(n.clone()), Some(p.as_slice()))),
        );
        for (name, perm) in perms {
            for c in &doc.characters {
                let nu = doi_grouplike_indicator(gl, &c.values, c.dim, perm)?;
                report.doi.push(DoiRow {
                    character: c.name.clone(),
                    twist: name.clone(),
                    nu: nu.to_canonical_string(),
                });
            }
        }
    }
    if doc.complete_simples && !doc.modules.is_empty() {
        let (lhs, rhs) = trace_s_global(&doc.algebra, &doc.modules)?;
        report.trace_s_global = Some(GlobalTrace {
            equal: lhs == rhs,
            lhs: lhs.to_canonical_string(),
            rhs: rhs.to_canonical_string(),
        });
    }
    if let Some(coalg) = &doc.coalgebra {
        let trace = coalgebra_regular_indicator(coalg)?;
        let def = coalgebra_regular_dual_indicator(coalg)?.nu;
        report.coalgebra = Some(CoalgebraCheck {
            equal: trace == def,
            trace_q: trace.to_canonical_string(),
            definition: def.to_canonical_string(),
        });
    }
    Ok(report.finish())
}

pub fn qsl2_report(two_ell: u32, twisted: bool, max: u32) -> CliResult<ReportDocument> {
    let r = qsl2_indicator_bounded(two_ell, twisted, max)?;
    let twist = twisted.then(|| "tau".to_string());
    let kind = if twisted { "tau" } else { "none" };
    let row = row_from_report(
        format!("V(2l={two_ell})"),
        twist,
        kind,
        two_ell as usize + 1,
        &r,
        vec![computed("definition", &r.nu)],
        None,
        None,
        None,
        true,
    );
    Ok(ReportDocument {
        description: Some("simple U_q(sl2) module".into()),
        field: fsind_core::FieldTag::RationalFunction.to_string(),
        kind: "qsl2".into(),
        rows: vec![row],
        regular: Vec::new(),
        doi: Vec::new(),
        trace_s_global: None,
        coalgebra: None,
        discrepancy: false,
    })
}
