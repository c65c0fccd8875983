//! Plain-text zero tables: one ordinate per line, `#` starts a comment line.

use std::path::Path;

use zerobound_core::ZeroList;

use crate::error::{read_file, Error, Result};

pub fn parse_zeros(text: &str, label: &str) -> Result<ZeroList> {
    let mut ordinates = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse {
            label: label.to_string(),
            line: i + 1,
            message,
        };
        let value: f64 = line
            .parse()
            .map_err(|_| err(format!("cannot parse {line:?} as a number")))?;
        if !(value.is_finite() && value > 0.0) {
            return Err(err(format!("ordinate {value} is not a positive real")));
        }
        ordinates.push(value);
    }
    Ok(ZeroList::new(ordinates, label)?)
}

pub fn load_zeros(path: &Path) -> Result<ZeroList> {
    parse_zeros(&read_file(path)?, &path.display().to_string())
}
