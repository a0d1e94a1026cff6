//! Empirical moments from CSV sample tables. Decimal entries are converted
//! exactly to rationals before averaging, so the pipeline stays exact from
//! ingestion onward.

use std::collections::BTreeMap;

use hopfwick::{Letter, MomentSpec, Multiset, Rat};

use crate::error::{CliError, CliResult};

/// A rectangular table of samples, one column per letter.
pub struct SampleTable {
    letters: Vec<Letter>,
    rows: Vec<Vec<Rat>>,
}

impl SampleTable {
    /// Parses CSV text: a header row of letters, then one decimal per cell.
    pub fn parse(text: &str) -> CliResult<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| CliError::Validation("empty sample table".into()))?;
        let letters = header
            .split(',')
            .map(|cell| Letter::new(cell.trim()).map_err(CliError::from))
            .collect::<CliResult<Vec<_>>>()?;
        {
            let mut sorted = letters.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != letters.len() {
                return Err(CliError::Validation("duplicate column letter".into()));
            }
        }
        let mut rows = Vec::new();
        for (line_no, line) in lines.enumerate() {
            let cells = line.split(',').map(str::trim).collect::<Vec<_>>();
            if cells.len() != letters.len() {
                return Err(CliError::Validation(format!(
                    "row {} has {} cells, expected {}",
                    line_no + 2,
                    cells.len(),
                    letters.len()
                )));
            }
            let row = cells
                .iter()
                .map(|cell| {
                    Rat::from_decimal_str(cell).map_err(|_| {
                        CliError::Validation(format!(
                            "row {}: `{cell}` is not a finite decimal",
                            line_no + 2
                        ))
                    })
                })
                .collect::<CliResult<Vec<_>>>()?;
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(CliError::Validation("sample table has no data rows".into()));
        }
        Ok(SampleTable { letters, rows })
    }

    #[cfg(test)]
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    #[cfg(test)]
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Empirical joint moments: the exact average of each monomial.
    pub fn moments(&self, max_degree: u32) -> CliResult<MomentSpec> {
        let count = Rat::from_int(self.rows.len() as i64);
        let mut values = BTreeMap::new();
        for m in Multiset::enumerate(&self.letters, max_degree) {
            let mut acc = Rat::zero();
            for row in &self.rows {
                let mut term = Rat::one();
                for (letter, power) in m.iter() {
                    let column = self
                        .letters
                        .iter()
                        .position(|l| l == letter)
                        .expect("own letter");
                    term *= row[column].pow(power);
                }
                acc += term;
            }
            values.insert(m, (acc / count.clone()).expect("row count is positive"));
        }
        MomentSpec::new(self.letters.clone(), max_degree, values).map_err(CliError::from)
    }
}
