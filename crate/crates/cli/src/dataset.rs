//! CSV ingestion: rows are samples, columns are vector components.
//!
//! Parsing is strict — ragged widths, non-numeric or non-finite fields, and
//! duplicate identifiers are reported with 1-based file positions rather
//! than patched over. An optional transpose supports the gene-expression
//! layout where columns are the samples.

use std::io::Read;

use corrsphere::SamplePoint;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("empty input: no data rows")]
    EmptyFile,

    #[error("ragged row at line {row}: expected {expected} fields, found {found}")]
    RaggedRows {
        row: u64,
        expected: usize,
        found: usize,
    },

    #[error("non-numeric field at line {row}, column {column}: {value:?}")]
    NonNumericField {
        row: u64,
        column: usize,
        value: String,
    },

    #[error("id column {name:?} not found in header")]
    UnknownIdColumn { name: String },

    #[error("duplicate identifier {id:?} at line {row}")]
    DuplicateId { id: String, row: u64 },

    #[error("each sample needs at least 2 components, found {found}")]
    TooFewComponents { found: usize },

    #[error("failed to read input: {0}")]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

/// Options for [`parse_csv`].
#[derive(Debug, Clone)]
pub struct ParseOptions {
    pub delimiter: u8,
    pub has_header: bool,
    pub id_column: Option<String>,
}

impl Default for ParseOptions {
    fn default() -> Self {
        Self {
            delimiter: b',',
            has_header: false,
            id_column: None,
        }
    }
}

/// A rectangular batch of raw sample points with optional row identifiers.
#[derive(Debug, Clone)]
pub struct Dataset {
    pub points: Vec<SamplePoint>,
    pub ids: Option<Vec<String>>,
    /// Names of the data columns when the input carried a header.
    pub column_names: Option<Vec<String>>,
    pub source: String,
}

impl Dataset {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.points[0].dim()
    }

    /// Swaps samples and components: column j of the input becomes sample j.
    /// Column names, when present, become the identifiers of the transposed
    /// samples; row identifiers do not survive.
    pub fn transposed(self) -> Result<Dataset, ParseError> {
        let n = self.points.len();
        if n < 2 {
            return Err(ParseError::TooFewComponents { found: n });
        }
        let dim = self.points[0].dim();
        let points = (0..dim)
            .map(|j| {
                let column: Vec<f64> = self.points.iter().map(|p| p.values()[j]).collect();
                SamplePoint::new(column).expect("columns of a valid dataset are valid points")
            })
            .collect();
        Ok(Dataset {
            points,
            ids: self.column_names,
            column_names: None,
            source: self.source,
        })
    }
}

/// Parses delimiter-separated numeric text into a [`Dataset`].
///
/// Every data row must have the same width; fields must parse as finite
/// numbers. With `has_header`, the first record names the columns and
/// `id_column` may select one of them as the row identifier.
pub fn parse_csv<R: Read>(
    stream: R,
    options: &ParseOptions,
    source: &str,
) -> Result<Dataset, ParseError> {
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(options.delimiter)
        .has_headers(false)
        .flexible(true)
        .from_reader(stream);

    let mut records = reader.records();

    let mut id_index = None;
    let mut column_names = None;
    let mut expected_width = None;

    if options.has_header {
        let header = match records.next() {
            Some(record) => record?,
            None => return Err(ParseError::EmptyFile),
        };
        let names: Vec<String> = header.iter().map(str::to_owned).collect();
        if let Some(wanted) = &options.id_column {
            let index = names.iter().position(|name| name == wanted).ok_or_else(|| {
                ParseError::UnknownIdColumn {
                    name: wanted.clone(),
                }
            })?;
            id_index = Some(index);
        }
        expected_width = Some(names.len());
        let data_names: Vec<String> = names
            .iter()
            .enumerate()
            .filter(|(i, _)| Some(*i) != id_index)
            .map(|(_, name)| name.clone())
            .collect();
        column_names = Some(data_names);
    } else if options.id_column.is_some() {
        return Err(ParseError::UnknownIdColumn {
            name: options.id_column.clone().unwrap(),
        });
    }

    let mut points = Vec::new();
    let mut ids: Vec<String> = Vec::new();

    for record in records {
        let record = record?;
        let line = record.position().map_or(0, |p| p.line());
        // A record with a single empty field is a blank line; skip it.
        if record.len() == 1 && record.get(0) == Some("") {
            continue;
        }
        let width = *expected_width.get_or_insert(record.len());
        if record.len() != width {
            return Err(ParseError::RaggedRows {
                row: line,
                expected: width,
                found: record.len(),
            });
        }
        let mut values = Vec::with_capacity(width.saturating_sub(id_index.is_some() as usize));
        for (i, field) in record.iter().enumerate() {
            if Some(i) == id_index {
                let id = field.to_owned();
                if ids.contains(&id) {
                    return Err(ParseError::DuplicateId { id, row: line });
                }
                ids.push(id);
                continue;
            }
            let parsed: f64 = field.trim().parse().map_err(|_| ParseError::NonNumericField {
                row: line,
                column: i + 1,
                value: field.to_owned(),
            })?;
            if !parsed.is_finite() {
                return Err(ParseError::NonNumericField {
                    row: line,
                    column: i + 1,
                    value: field.to_owned(),
                });
            }
            values.push(parsed);
        }
        if values.len() < 2 {
            return Err(ParseError::TooFewComponents { found: values.len() });
        }
        points.push(SamplePoint::new(values).expect("fields were validated finite"));
    }

    if points.is_empty() {
        return Err(ParseError::EmptyFile);
    }

    Ok(Dataset {
        points,
        ids: id_index.map(|_| ids),
        column_names,
        source: source.to_owned(),
    })
}
