//! The newform constant table as CSV.

use std::io::Write;

use zerobound_core::newform::table_row;
use zerobound_core::NewformSpec;

use crate::error::{Error, Result};

pub const HEADER: [&str; 9] = ["N", "kappa", "T0", "cL1", "cL2", "cL3", "c1", "c2", "c3"];

/// The level/weight pairs shipped with the crate.
pub const BUNDLED_PAIRS: &str = include_str!("../data/newform_pairs.csv");

/// Reads `N,kappa` rows; a header row is recognised by a non-numeric first field.
pub fn parse_pairs(text: &str, label: &str) -> Result<Vec<NewformSpec>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut specs = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record?;
        let line = record.position().map_or(i + 1, |p| p.line() as usize);
        let err = |message: String| Error::Parse {
            label: label.to_string(),
            line,
            message,
        };
        if record.len() != 2 {
            return Err(err(format!("expected 2 fields, found {}", record.len())));
        }
        let (n, k) = (&record[0], &record[1]);
        if i == 0 && n.parse::<f64>().is_err() {
            continue;
        }
        let level = n.parse().map_err(|_| err(format!("invalid level {n:?}")))?;
        let weight = k
            .parse()
            .map_err(|_| err(format!("invalid weight {k:?}")))?;
        specs.push(NewformSpec::new(level, weight)?);
    }
    Ok(specs)
}

pub fn write_table<W: Write>(specs: &[NewformSpec], out: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(HEADER)?;
    for spec in specs {
        let row = table_row(spec)?;
        let ceilings = row.ceilings()?;
        let mut record = vec![
            spec.level().to_string(),
            spec.weight().to_string(),
            row.t0.to_string(),
        ];
        record.extend(ceilings.iter().map(i64::to_string));
        writer.write_record(&record)?;
    }
    writer.flush().map_err(|source| Error::Io {
        path: "<output>".into(),
        source,
    })?;
    Ok(())
}
