use std::fmt::Write as _;

use pekt::characters::CharacterTable;
use pekt::combinatorics::{class_size, partitions};
use pekt::jfunction::{j_by_correlators, j_closed};
use pekt::lambda::{LambdaAlgebra, LambdaElement};
use pekt::point::{correlator as class_sum, graded_trace, module_decomposition};
use pekt::{rational_to_string, JSeries, Partition, QSeries, Rational, Space};
use serde_json::{json, Value};

use crate::nu::{parse_nu, ParsedNu};
use crate::{CliError, Format, JMode};

fn coefficients(s: &QSeries) -> Vec<String> {
    s.coeffs().iter().map(rational_to_string).collect()
}

fn to_json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn unsupported(command: &str, format: Format) -> CliError {
    CliError::Usage(format!("{command} does not support --format {format:?}").to_lowercase())
}

fn csv_text(rows: Vec<Vec<String>>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(&row).map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
}

pub fn classes(n: usize, format: Format) -> Result<String, CliError> {
    let rows: Vec<(Partition, String, String)> = partitions(n)?
        .into_iter()
        .map(|p| {
            let ct = p.cycle_type();
            let size = class_size(&ct).to_string();
            let z = ct.centralizer_order().to_string();
            (p, size, z)
        })
        .collect();
    match format {
        Format::Text => {
            let mut out = String::new();
            for (p, size, z) in &rows {
                writeln!(out, "{p}\tsize {size}\tcentralizer {z}").unwrap();
            }
            Ok(out)
        }
        Format::Json => Ok(to_json_text(&json!({
            "n": n,
            "classes": rows.iter().map(|(p, size, z)| json!({
                "cycle_type": p.to_string(),
                "size": size,
                "centralizer_order": z,
            })).collect::<Vec<_>>(),
        }))),
        Format::Csv => {
            let mut table = vec![vec!["cycle_type".into(), "size".into(), "centralizer_order".into()]];
            table.extend(rows.into_iter().map(|(p, s, z)| vec![p.to_string(), s, z]));
            csv_text(table)
        }
    }
}

pub fn characters(n: usize, format: Format) -> Result<String, CliError> {
    let table = CharacterTable::new(n)?;
    let classes: Vec<String> = table.classes().iter().map(|c| c.to_string()).collect();
    let irreps: Vec<String> = table.irreps().iter().map(|p| p.to_string()).collect();
    let values: Vec<Vec<String>> = table
        .values()
        .iter()
        .map(|row| row.iter().map(|v| v.to_string()).collect())
        .collect();
    match format {
        Format::Csv => {
            let mut rows = vec![std::iter::once("irrep".to_string()).chain(classes).collect()];
            for (name, row) in irreps.into_iter().zip(values) {
                rows.push(std::iter::once(name).chain(row).collect());
            }
            csv_text(rows)
        }
        Format::Json => Ok(to_json_text(&json!({
            "n": n,
            "classes": classes,
            "irreps": irreps,
            "values": values,
        }))),
        Format::Text => {
            let width = classes
                .iter()
                .chain(&irreps)
                .chain(values.iter().flatten())
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(1);
            let mut out = format!("{:>width$}", "");
            for c in &classes {
                write!(out, " {c:>width$}").unwrap();
            }
            out.push('\n');
            for (name, row) in irreps.iter().zip(&values) {
                write!(out, "{name:>width$}").unwrap();
                for v in row {
                    write!(out, " {v:>width$}").unwrap();
                }
                out.push('\n');
            }
            Ok(out)
        }
    }
}

pub fn trace(mu: &Partition, space: Space, q_order: usize, format: Format) -> Result<String, CliError> {
    let ct = mu.cycle_type();
    let tr: QSeries = graded_trace(&ct, space, q_order);
    let space_name = match space {
        Space::Full => "full",
        Space::Coxeter => "coxeter",
    };
    match format {
        Format::Text => Ok(format!("{tr}\n")),
        Format::Json => Ok(to_json_text(&json!({
            "cycle_type": mu.to_string(),
            "space": space_name,
            "q_order": q_order,
            "coefficients": coefficients(&tr),
        }))),
        Format::Csv => Err(unsupported("trace", format)),
    }
}

fn correlator_output<A: LambdaAlgebra>(
    nu: &LambdaElement<Rational, A>,
    n: usize,
    q_order: usize,
    weight_cap: usize,
    format: Format,
) -> Result<String, CliError> {
    let value = class_sum(nu, n, q_order, weight_cap)?;
    match format {
        Format::Text => Ok(format!("{value}\n")),
        Format::Json => Ok(to_json_text(&json!({
            "n": n,
            "algebra": A::NAME,
            "q_order": value.q_order(),
            "weight_cap": value.weight_cap(),
            "terms": value.to_json(),
        }))),
        Format::Csv => Err(unsupported("correlator", format)),
    }
}

pub fn correlator(
    n: usize,
    nu: &str,
    q_order: usize,
    weight_cap: usize,
    format: Format,
) -> Result<String, CliError> {
    match parse_nu(nu, weight_cap, q_order)? {
        ParsedNu::PowerSums(l) => correlator_output(&l, n, q_order, weight_cap, format),
        ParsedNu::Rank1(l) => correlator_output(&l, n, q_order, weight_cap, format),
    }
}

pub fn module_decompose(n: usize, q_order: usize, format: Format) -> Result<String, CliError> {
    let table = CharacterTable::new(n)?;
    let parts = module_decomposition::<Rational>(n, q_order, &table)?;
    match format {
        Format::Text => {
            let mut out = String::new();
            for (shape, s) in &parts {
                writeln!(out, "{shape}: {s}").unwrap();
            }
            Ok(out)
        }
        Format::Json => Ok(to_json_text(&json!({
            "n": n,
            "q_order": q_order,
            "multiplicities": parts.iter().map(|(shape, s)| json!({
                "irrep": shape.to_string(),
                "q_coefficients": coefficients(s),
            })).collect::<Vec<_>>(),
        }))),
        Format::Csv => {
            let header = std::iter::once("irrep".to_string())
                .chain((0..=q_order).map(|k| format!("q^{k}")))
                .collect();
            let mut rows = vec![header];
            for (shape, s) in &parts {
                rows.push(std::iter::once(shape.to_string()).chain(coefficients(s)).collect());
            }
            csv_text(rows)
        }
    }
}

fn jfunction_output<A: LambdaAlgebra>(
    nu: &LambdaElement<Rational, A>,
    mode: JMode,
    n_max: usize,
    q_order: usize,
    weight_cap: usize,
    format: Format,
) -> Result<String, CliError> {
    let j: JSeries<A> = match mode {
        JMode::Correlators => j_by_correlators(nu, n_max, q_order, weight_cap)?,
        JMode::Closed => j_closed(nu, q_order, weight_cap)?,
    };
    match format {
        Format::Json => Ok(to_json_text(&j.to_json())),
        Format::Text => Ok(format!(
            "# mode {}, exact through weight {}\n{}\n",
            j.provenance, j.complete_weight, j.value
        )),
        Format::Csv => Err(unsupported("jfunction", format)),
    }
}

pub fn jfunction(
    nu: &str,
    mode: JMode,
    n_max: usize,
    q_order: usize,
    weight_cap: usize,
    format: Format,
) -> Result<String, CliError> {
    match parse_nu(nu, weight_cap, q_order)? {
        ParsedNu::PowerSums(l) => jfunction_output(&l, mode, n_max, q_order, weight_cap, format),
        ParsedNu::Rank1(l) => jfunction_output(&l, mode, n_max, q_order, weight_cap, format),
    }
}
