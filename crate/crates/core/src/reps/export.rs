//! JSON interchange for representations and classification reports.
//!
//! A representation document looks like
//!
//! ```json
//! {"kind": "V", "dim": 6, "beta": "0,1", "a": "1,0", "b": "2,2",
//!  "mu": [...], "x": [[...], ...], "y": [...], "s": [...],
//!  "field": {"p": 3, "k": 2, "modulus": [1, 0, 1]},
//!  "params": {"r": 2, "t": 1, "c": ["1,0"], "epsilon": "2,0"}}
//! ```
//!
//! Field elements are literals as printed by [`FieldCtx::format`]; matrices
//! are lists of rows. `field` and `params` may be omitted when the reader
//! supplies the algebra.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, AlgebraParams, Planck};
use crate::field::{FieldCtx, FieldDescriptor, FieldElem, FieldError};
use crate::linalg::Matrix;

use super::{ClassificationReport, RelationReport, RepError, RepKind, Representation};

#[derive(Debug, Error)]
pub enum ExportError {
    #[error("invalid document: {0}")]
    Schema(String),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("document has no field/params and none were supplied")]
    MissingContext,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Rep(#[from] RepError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsJson {
    pub r: u32,
    pub t: u32,
    pub c: Vec<String>,
    pub epsilon: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationJson {
    pub kind: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    pub a: String,
    pub b: String,
    pub mu: Vec<String>,
    pub x: Vec<Vec<String>>,
    pub y: Vec<Vec<String>>,
    pub s: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldDescriptor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationJson {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub label: String,
    pub irreducible: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_multiplicity: Option<usize>,
    pub relations: Vec<RelationJson>,
    pub representation: RepresentationJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationJson {
    pub field: FieldDescriptor,
    pub params: ParamsJson,
    pub a: String,
    pub b: String,
    pub complete: bool,
    pub beta_representatives: Vec<String>,
    pub classes: Vec<ClassJson>,
}

pub fn params_json(params: &AlgebraParams) -> ParamsJson {
    let ctx = params.ctx();
    ParamsJson {
        r: params.r(),
        t: params.t().as_int(),
        c: params.c().iter().map(|&e| ctx.format(e)).collect(),
        epsilon: ctx.format(params.epsilon()),
    }
}

pub fn params_from_json(field: &FieldDescriptor, params: &ParamsJson) -> Result<AlgebraParams, ExportError> {
    let ctx = Arc::new(FieldCtx::from_descriptor(field)?);
    let t = Planck::from_int(params.t as i64)?;
    let c = params
        .c
        .iter()
        .map(|l| ctx.parse(l))
        .collect::<Result<Vec<_>, _>>()?;
    let eps = ctx.parse(&params.epsilon)?;
    Ok(AlgebraParams::with_epsilon(ctx, params.r, t, c, eps)?)
}

fn matrix_json(ctx: &FieldCtx, m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows()
        .into_iter()
        .map(|row| row.into_iter().map(|e| ctx.format(e)).collect())
        .collect()
}

pub fn relations_json(report: &RelationReport) -> Vec<RelationJson> {
    report
        .checks
        .iter()
        .map(|c| RelationJson {
            name: c.name.clone(),
            passed: c.passed,
            first_failure: c.first_failure.map(|(r, c)| [r, c]),
        })
        .collect()
}

/// Serialize a representation; `with_context` embeds `field` and `params`.
pub fn to_json(rep: &Representation, with_context: bool) -> RepresentationJson {
    let ctx = rep.ctx();
    let zero = ctx.format(ctx.zero());
    let (kind, beta, m, a, b) = match rep.kind() {
        RepKind::V { beta, a, b } => ("V", Some(ctx.format(*beta)), None, ctx.format(*a), ctx.format(*b)),
        RepKind::W { m } => ("W", None, Some(*m), zero.clone(), zero),
        RepKind::Unlabeled => ("unlabeled", None, None, zero.clone(), zero),
    };
    RepresentationJson {
        kind: kind.to_string(),
        dim: rep.dim(),
        beta,
        m,
        a,
        b,
        mu: rep.mu().iter().map(|&e| ctx.format(e)).collect(),
        x: matrix_json(ctx, rep.x()),
        y: matrix_json(ctx, rep.y()),
        s: matrix_json(ctx, rep.s()),
        field: with_context.then(|| ctx.descriptor()),
        params: with_context.then(|| params_json(rep.params())),
    }
}

pub fn report_json(report: &ClassificationReport) -> ClassificationJson {
    let ctx = report.params.ctx();
    ClassificationJson {
        field: ctx.descriptor(),
        params: params_json(&report.params),
        a: ctx.format(report.a),
        b: ctx.format(report.b),
        complete: report.complete,
        beta_representatives: report.beta_representatives.iter().map(|&e| ctx.format(e)).collect(),
        classes: report
            .classes
            .iter()
            .map(|c| ClassJson {
                label: c.label.clone(),
                irreducible: c.irreducible,
                root_multiplicity: c.root_multiplicity,
                relations: relations_json(&c.relations),
                representation: to_json(&c.rep, false),
            })
            .collect(),
    }
}

fn parse_matrix(ctx: &FieldCtx, name: &str, dim: usize, rows: &[Vec<String>]) -> Result<Matrix, ExportError> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(ExportError::Schema(format!("{name} must be a {dim}x{dim} matrix")));
    }
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|l| ctx.parse(l)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(parsed).expect("shape checked"))
}

/// Rebuild a representation. The document's own `field`/`params` take
/// precedence over `fallback`.
pub fn from_json(
    doc: &RepresentationJson,
    fallback: Option<&AlgebraParams>,
) -> Result<Representation, ExportError> {
    let params = match (&doc.field, &doc.params) {
        (Some(f), Some(p)) => params_from_json(f, p)?,
        (None, None) => fallback.cloned().ok_or(ExportError::MissingContext)?,
        _ => {
            return Err(ExportError::Schema(
                "field and params must appear together".into(),
            ))
        }
    };
    let ctx = params.ctx();
    let dim = doc.dim;
    let x = parse_matrix(ctx, "x", dim, &doc.x)?;
    let y = parse_matrix(ctx, "y", dim, &doc.y)?;
    let s = parse_matrix(ctx, "s", dim, &doc.s)?;
    let mu = doc
        .mu
        .iter()
        .map(|l| ctx.parse(l))
        .collect::<Result<Vec<FieldElem>, _>>()?;
    let kind = match doc.kind.as_str() {
        "V" => {
            let beta = doc
                .beta
                .as_deref()
                .ok_or_else(|| ExportError::Schema("V needs beta".into()))?;
            RepKind::V {
                beta: ctx.parse(beta)?,
                a: ctx.parse(&doc.a)?,
                b: ctx.parse(&doc.b)?,
            }
        }
        "W" => RepKind::W {
            m: doc.m.ok_or_else(|| ExportError::Schema("W needs m".into()))? % params.r(),
        },
        "unlabeled" => RepKind::Unlabeled,
        other => return Err(ExportError::Schema(format!("unknown kind {other:?}"))),
    };
    if kind != RepKind::Unlabeled && mu.len() != dim {
        return Err(ExportError::Schema(format!("mu must have {dim} entries")));
    }
    Ok(Representation::labeled(params, kind, mu, x, y, s)?)
}

/// Every representation in a document that is either a single
/// representation or a classification report.
pub fn load_representations(
    text: &str,
    fallback: Option<&AlgebraParams>,
) -> Result<Vec<Representation>, ExportError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("classes").is_some() {
        let doc: ClassificationJson = serde_json::from_value(value)?;
        let params = params_from_json(&doc.field, &doc.params)?;
        doc.classes
            .iter()
            .map(|c| from_json(&c.representation, Some(&params)))
            .collect()
    } else {
        let doc: RepresentationJson = serde_json::from_value(value)?;
        Ok(vec![from_json(&doc, fallback)?])
    }
}
