use std::path::Path;

use fsind_core::constructors::SchemeRelations;
use fsind_core::document::{InputDocument, LoadedDocument, SchemeSection};
use fsind_core::FieldTag;

use crate::error::{CliError, CliResult};

pub const SKIP_VALIDATION_VAR: &str = "FSIND_SKIP_VALIDATION";

pub fn skip_validation_requested() -> bool {
    std::env::var(SKIP_VALIDATION_VAR).is_ok_and(|v| v == "1")
}

/// Parses a JSON document, or a scheme relation matrix when the text does not
/// start with `{`.
pub fn parse_input(text: &str) -> CliResult<InputDocument> {
    if text.trim_start().starts_with('{') {
        return Ok(InputDocument::from_json(text)?);
    }
    let rels = SchemeRelations::parse(text)?;
    Ok(InputDocument {
        description: None,
        field: FieldTag::Rational.to_string(),
        algebra: None,
        group: None,
        scheme: Some(SchemeSection {
            relations: rels.relations().to_vec(),
        }),
        coalgebra: None,
        modules: Vec::new(),
        involutions: Vec::new(),
        integral: None,
        trace_form: None,
        character_twists: Vec::new(),
        characters: Vec::new(),
        complete_simples: false,
    })
}

pub fn read_input(path: &Path) -> CliResult<InputDocument> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_input(&text)
}

/// Builds the document and, when `validate` is set, rejects any axiom violation.
pub fn load(doc: &InputDocument, validate: bool) -> CliResult<LoadedDocument> {
    let loaded = doc.build()?;
    if validate {
        let report = loaded.validate();
        if !report.is_ok() {
            return Err(CliError::Invalid(report));
        }
    }
    Ok(loaded)
}
