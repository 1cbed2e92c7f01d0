//! File formats: addition tables as JSON objects, measures as JSON arrays
//! of exact rationals written "p/q". Round trips are bit-exact.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{CertifiedAlgebra, PartialAlgebra};
use crate::error::{Error, Result};
use crate::measure::SignedMeasure;
use crate::rat::{parse_rat, rat_string, Rat};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub size: usize,
    pub zero: usize,
    pub one: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    /// row a, column b: index of a + b, null where the sum is undefined
    pub add: Vec<Vec<Option<usize>>>,
}

impl AlgebraFile {
    pub fn from_table(table: &PartialAlgebra) -> Self {
        AlgebraFile {
            size: table.size(),
            zero: table.zero(),
            one: table.one(),
            labels: table.labels().map(|ls| ls.to_vec()),
            add: table.table_rows(),
        }
    }

    pub fn into_table(self) -> Result<PartialAlgebra> {
        let mut flat = Vec::with_capacity(self.size * self.size);
        if self.add.len() != self.size {
            return Err(Error::Parse(format!(
                "{} rows in a table of size {}",
                self.add.len(),
                self.size
            )));
        }
        for (i, row) in self.add.into_iter().enumerate() {
            if row.len() != self.size {
                return Err(Error::Parse(format!(
                    "row {i} has {} cells, expected {}",
                    row.len(),
                    self.size
                )));
            }
            flat.extend(row);
        }
        PartialAlgebra::from_parts(self.size, self.zero, self.one, self.labels, flat)
    }
}

/// Reads a table without certifying it; malformed JSON or out-of-range
/// indices are input errors.
pub fn read_table(path: &Path) -> Result<PartialAlgebra> {
    let text = fs::read_to_string(path)?;
    let file: AlgebraFile = serde_json::from_str(&text)?;
    file.into_table()
}

/// Reads and certifies; a table failing the axioms is rejected with the
/// failure report.
pub fn read_algebra(path: &Path) -> Result<CertifiedAlgebra> {
    read_table(path)?.certify()
}

pub fn write_table(table: &PartialAlgebra, path: &Path) -> Result<()> {
    let file = AlgebraFile::from_table(table);
    fs::write(path, serde_json::to_string_pretty(&file)?)?;
    Ok(())
}

pub fn write_algebra(alg: &CertifiedAlgebra, path: &Path) -> Result<()> {
    write_table(alg.table(), path)
}

pub fn read_values(path: &Path) -> Result<Vec<Rat>> {
    let text = fs::read_to_string(path)?;
    let raw: Vec<String> = serde_json::from_str(&text)?;
    raw.iter().map(|s| parse_rat(s)).collect()
}

/// Reads a measure and checks additivity against the algebra.
pub fn read_measure(path: &Path, alg: &CertifiedAlgebra) -> Result<SignedMeasure> {
    SignedMeasure::new(alg, read_values(path)?)
}

pub fn write_measure(m: &SignedMeasure, path: &Path) -> Result<()> {
    let raw: Vec<String> = m.values().iter().map(rat_string).collect();
    fs::write(path, serde_json::to_string_pretty(&raw)?)?;
    Ok(())
}
