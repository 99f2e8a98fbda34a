//! JSON renditions of the library's outputs — vectors, dimension tables,
//! matrices and verification reports — plus the inverse parser for vectors,
//! so identities can be piped back in.

use serde_json::{json, Value};

use crate::algebra::matrix::ChangeOfBasis;
use crate::algebra::vector::{BasisKind, PlateVector, VectorLabel};
use crate::combinatorics::DimensionTable;
use crate::error::{Error, Result};
use crate::oracle::verify::VerificationReport;
use crate::text::{format_point, format_rational, parse_csp, parse_osp, parse_rational};

/// `{"n": …, "basis": …, "terms": [{"coef": "p/q", "label": …}, …]}` with
/// the terms in lex order of their labels and whole coefficients printed
/// without the "/1".
pub fn vector_json(v: &PlateVector) -> Value {
    let terms: Vec<Value> = v
        .terms_sorted()
        .into_iter()
        .map(|(label, coef)| {
            json!({
                "coef": format_rational(coef),
                "label": label.to_string(),
            })
        })
        .collect();
    json!({
        "n": v.n(),
        "basis": v.basis().name(),
        "terms": terms,
    })
}

fn field<'a>(value: &'a Value, name: &str) -> Result<&'a Value> {
    value
        .get(name)
        .ok_or_else(|| Error::domain(format!("vector JSON is missing the '{name}' field")))
}

fn string_field<'a>(value: &'a Value, name: &str) -> Result<&'a str> {
    field(value, name)?
        .as_str()
        .ok_or_else(|| Error::domain(format!("vector JSON field '{name}' must be a string")))
}

/// Parses the schema produced by [`vector_json`].
pub fn vector_from_json(value: &Value) -> Result<PlateVector> {
    let n = field(value, "n")?
        .as_u64()
        .and_then(|n| u32::try_from(n).ok())
        .ok_or_else(|| Error::domain("vector JSON field 'n' must be a small integer"))?;
    let basis = BasisKind::parse(string_field(value, "basis")?)?;
    let terms = field(value, "terms")?
        .as_array()
        .ok_or_else(|| Error::domain("vector JSON field 'terms' must be an array"))?;
    let mut out = PlateVector::zero(n, basis);
    for term in terms {
        let coef = parse_rational(string_field(term, "coef")?)?;
        let label_text = string_field(term, "label")?;
        let label = match basis {
            BasisKind::Canonical => VectorLabel::Csp(parse_csp(label_text, Some(n))?),
            BasisKind::Plate | BasisKind::DualFace => VectorLabel::Osp(parse_osp(label_text)?),
        };
        out.add_term(label, coef)?;
    }
    Ok(out)
}

/// Parses a vector from JSON text, mapping malformed JSON to a parse error.
pub fn vector_from_json_text(text: &str) -> Result<PlateVector> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| Error::parse(e.column().saturating_sub(1), e.to_string()))?;
    vector_from_json(&value)
}

/// Dimension table of the four spaces, with the factor-count refinements of
/// the two graded ones. Counts are serialized as strings: they outgrow
/// 64-bit integers quickly.
pub fn dims_json(table: &DimensionTable) -> Value {
    let strings = |row: &[num_bigint::BigUint]| -> Vec<String> {
        row.iter().map(|v| v.to_string()).collect()
    };
    json!({
        "n": table.n,
        "dims": {
            "hatP": table.ordered_bell.to_string(),
            "P": table.cyclic_bell.to_string(),
            "hatP1": table.factorial.to_string(),
            "P1": table.pointed_quotient.to_string(),
        },
        "canonical_by_factor_count": strings(&table.composite_row),
        "permutations_by_factor_count": strings(&table.stirling1_row),
    })
}

/// Dense row-major matrix with its row/column labels. Entries stay exact:
/// they are emitted as strings alongside a numeric form when one fits.
pub fn matrix_json(matrix: &ChangeOfBasis) -> Value {
    let labels: Vec<String> = matrix
        .labels()
        .iter()
        .map(|label| label.to_string())
        .collect();
    let rows: Vec<Value> = matrix
        .dense_rows()
        .map(|row| {
            Value::Array(
                row.iter()
                    .map(|entry| match i64::try_from(entry) {
                        Ok(small) => json!(small),
                        Err(_) => json!(entry.to_string()),
                    })
                    .collect(),
            )
        })
        .collect();
    json!({
        "n": matrix.n(),
        "labels": labels,
        "rows": rows,
    })
}

/// `{"oracle": …, "seed": …, "trials": …, "passed": …}` plus the first
/// failing point and the two side values when a trial failed.
pub fn report_json(report: &VerificationReport) -> Value {
    let mut value = json!({
        "oracle": report.oracle.name(),
        "seed": report.seed,
        "trials": report.trials,
        "passed": report.passed,
    });
    if let Some(counterexample) = &report.counterexample {
        value["failed_point"] = Value::String(format_point(counterexample.point.coords()));
        value["lhs"] = Value::String(format_rational(&counterexample.lhs));
        value["rhs"] = Value::String(format_rational(&counterexample.rhs));
    }
    value
}
