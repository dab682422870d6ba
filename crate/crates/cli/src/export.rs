//! Text export of the presentation matrix and Seifert family in a
//! SageMath-compatible layout, plus a machine-readable JSON report.

use clasp_core::laurent::LaurentPoly;
use clasp_core::seifert::eps_tuple;
use clasp_core::{Laurent, PolyMatrix};
use serde_json::{json, Value};
use thiserror::Error;

use crate::pipeline::Report;

#[derive(Error, Debug)]
pub enum ExportError {
    #[error("text export needs the presentation matrix; run with the pairwise flag")]
    MissingPresentation,
}

fn poly_matrix_line(matrix: &PolyMatrix) -> String {
    matrix_line(matrix, |p: &Laurent| p.to_string())
}

fn int_matrix_line(matrix: &[Vec<i64>]) -> String {
    matrix_line(matrix, |x: &i64| x.to_string())
}

fn matrix_line<T, F: Fn(&T) -> String>(matrix: &[Vec<T>], render: F) -> String {
    let rows: Vec<String> = matrix
        .iter()
        .map(|row| {
            let entries: Vec<String> = row.iter().map(&render).collect();
            format!("[{}]", entries.join(", "))
        })
        .collect();
    format!("Matrix([{}])", rows.join(", "))
}

fn eps_header(eps: &[i8]) -> String {
    let parts: Vec<String> = eps.iter().map(|e| e.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// The exported text file: the presentation matrix, then every generalized
/// Seifert matrix under its sign-tuple header, tuples in lexicographic order
/// with `-1` before `1`.
pub fn export_text(report: &Report) -> Result<String, ExportError> {
    let presentation = report
        .presentation
        .as_ref()
        .ok_or(ExportError::MissingPresentation)?;
    let mut out = String::new();
    out.push_str("Presentation Matrix\n");
    out.push_str(&poly_matrix_line(presentation));
    out.push_str("\n\n\nGeneralized Seifert Matrices\n");
    for (index, matrix) in report.family.matrices.iter().enumerate() {
        let eps = eps_tuple(index, report.family.mu);
        out.push('\n');
        out.push_str(&eps_header(&eps));
        out.push('\n');
        out.push_str(&int_matrix_line(matrix));
        out.push('\n');
    }
    Ok(out)
}

/// Machine-readable report with deterministic field order.
pub fn report_json(report: &Report) -> Value {
    let family: Vec<Value> = report
        .family
        .matrices
        .iter()
        .enumerate()
        .map(|(index, matrix)| {
            json!({
                "eps": eps_tuple(index, report.family.mu),
                "matrix": matrix,
            })
        })
        .collect();
    let edges: Vec<Value> = report
        .spine
        .edges
        .iter()
        .map(|e| json!([e.lower, e.upper, e.sign]))
        .collect();
    let signature = report.signature.as_ref().map(|(point, result)| {
        json!({
            "theta": point.theta(),
            "signature": result.signature,
            "nullity": result.nullity,
            "eigenvalues": result.eigenvalues,
        })
    });
    json!({
        "braid": {
            "strands": report.braid.strands,
            "word": report.braid.word,
            "colors": report.braid.colors,
            "mu": report.braid.mu,
        },
        "drag_order": report.drag_order.order(),
        "spine": {
            "vertex_colors": report.spine.colors,
            "edges": edges,
            "vertices": report.spine.vertex_count(),
            "edge_count": report.spine.edge_count(),
            "rank": report.spine.rank(),
        },
        "complex_sign": report.complex_sign,
        "chi_excluding_color": report.chi,
        "seifert_matrices": family,
        "conway_potential": {
            "numerator": report.conway.numerator.to_string(),
            "denominator_exponents": report.conway.denom_exponents,
        },
        "alexander_polynomial": report.alexander.to_string(),
        "presentation_matrix": report
            .presentation
            .as_ref()
            .map(|m| {
                m.iter()
                    .map(|row| row.iter().map(LaurentPoly::to_string).collect::<Vec<_>>())
                    .collect::<Vec<_>>()
            }),
        "signature": signature,
        "latex": report.latex,
    })
}
