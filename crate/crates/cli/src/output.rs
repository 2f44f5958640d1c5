//! Serialization of results to CSV and JSON.
//!
//! CSV floats are printed with 18 significant digits (`{:.17e}`), enough
//! that parsing an emitted value recovers it bit for bit. JSON goes through
//! serde_json, whose shortest-roundtrip encoding has the same property.

use std::io::Write;

use corrsphere::{Barycenter, ClusterModel, DistanceMatrix, StandardizedPoint};
use serde_json::json;

/// Fixed-precision float encoding; `parse(fmt_f64(v)) == v` for every
/// finite v.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.17e}")
}

fn join_floats(values: &[f64], delimiter: char) -> String {
    values
        .iter()
        .map(|&v| fmt_f64(v))
        .collect::<Vec<_>>()
        .join(&delimiter.to_string())
}

/// Header used when standardize output carries identifiers or named columns.
fn standardize_header(
    ids: bool,
    column_names: Option<&[String]>,
    dim: usize,
    delimiter: char,
) -> Option<String> {
    if !ids && column_names.is_none() {
        return None;
    }
    let mut cells = Vec::new();
    if ids {
        cells.push("id".to_owned());
    }
    match column_names {
        Some(names) => cells.extend(names.iter().cloned()),
        None => cells.extend((1..=dim).map(|i| format!("c{i}"))),
    }
    Some(cells.join(&delimiter.to_string()))
}

pub fn write_standardized_csv(
    out: &mut dyn Write,
    points: &[StandardizedPoint],
    ids: Option<&[String]>,
    column_names: Option<&[String]>,
    delimiter: char,
) -> std::io::Result<()> {
    if let Some(header) = standardize_header(ids.is_some(), column_names, points[0].dim(), delimiter)
    {
        writeln!(out, "{header}")?;
    }
    for (j, p) in points.iter().enumerate() {
        match ids {
            Some(ids) => writeln!(out, "{}{delimiter}{}", ids[j], join_floats(p.values(), delimiter))?,
            None => writeln!(out, "{}", join_floats(p.values(), delimiter))?,
        }
    }
    Ok(())
}

pub fn write_standardized_json(
    out: &mut dyn Write,
    points: &[StandardizedPoint],
    ids: Option<&[String]>,
) -> std::io::Result<()> {
    let value = json!({
        "ids": ids,
        "points": points.iter().map(|p| p.values().to_vec()).collect::<Vec<_>>(),
    });
    writeln!(out, "{value}")
}

pub fn write_distance_matrix_csv(
    out: &mut dyn Write,
    matrix: &DistanceMatrix,
    ids: Option<&[String]>,
    delimiter: char,
) -> std::io::Result<()> {
    if let Some(ids) = ids {
        writeln!(out, "{delimiter}{}", ids.join(&delimiter.to_string()))?;
        for (i, id) in ids.iter().enumerate() {
            writeln!(out, "{id}{delimiter}{}", join_floats(matrix.row(i), delimiter))?;
        }
    } else {
        for i in 0..matrix.len() {
            writeln!(out, "{}", join_floats(matrix.row(i), delimiter))?;
        }
    }
    Ok(())
}

pub fn write_distance_matrix_json(
    out: &mut dyn Write,
    matrix: &DistanceMatrix,
    ids: Option<&[String]>,
) -> std::io::Result<()> {
    let rows: Vec<Vec<f64>> = (0..matrix.len()).map(|i| matrix.row(i).to_vec()).collect();
    let value = json!({
        "n": matrix.len(),
        "ids": ids,
        "entries": rows,
    });
    writeln!(out, "{value}")
}

pub fn write_barycenter_csv(
    out: &mut dyn Write,
    barycenter: &Barycenter,
    delimiter: char,
) -> std::io::Result<()> {
    let dim = barycenter.point.dim();
    let header: Vec<String> = (1..=dim)
        .map(|i| format!("g{i}"))
        .chain(["eigenvalue".to_owned(), "objective".to_owned(), "degenerate".to_owned()])
        .collect();
    writeln!(out, "{}", header.join(&delimiter.to_string()))?;
    writeln!(
        out,
        "{}{delimiter}{}{delimiter}{}{delimiter}{}",
        join_floats(barycenter.point.values(), delimiter),
        fmt_f64(barycenter.eigenvalue),
        fmt_f64(barycenter.objective),
        barycenter.degenerate,
    )
}

pub fn write_barycenter_json(out: &mut dyn Write, barycenter: &Barycenter) -> std::io::Result<()> {
    let value = json!({
        "point": barycenter.point.values().to_vec(),
        "eigenvalue": barycenter.eigenvalue,
        "objective": barycenter.objective,
        "degenerate": barycenter.degenerate,
    });
    writeln!(out, "{value}")
}

pub fn write_cluster_csv(
    out: &mut dyn Write,
    model: &ClusterModel,
    ids: Option<&[String]>,
    delimiter: char,
) -> std::io::Result<()> {
    writeln!(out, "{}{delimiter}cluster", if ids.is_some() { "id" } else { "row" })?;
    for (j, &label) in model.assignments.iter().enumerate() {
        match ids {
            Some(ids) => writeln!(out, "{}{delimiter}{label}", ids[j])?,
            None => writeln!(out, "{}{delimiter}{label}", j + 1)?,
        }
    }
    Ok(())
}

pub fn write_cluster_json(out: &mut dyn Write, model: &ClusterModel) -> std::io::Result<()> {
    let value = json!({
        "centers": model.centers.iter().map(|c| c.values().to_vec()).collect::<Vec<_>>(),
        "assignments": model.assignments,
        "inertia": model.inertia,
        "iterations": model.iterations_run,
        "converged": model.converged,
    });
    writeln!(out, "{value}")
}
