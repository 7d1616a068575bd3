//! Published comparison numbers and the win/lose comparison against them.
//!
//! The bundled table (`data/published_reference.csv`) is static data: it is
//! never produced or modified by this crate.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Read;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::benchmarks::FunctionId;
use crate::error::{Error, Result};
use crate::optimizers::Algorithm;

use super::CellResult;

const PUBLISHED_CSV: &str = include_str!("../../data/published_reference.csv");

/// Which published comparison a record belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PublishedTable {
    /// MFO, ABC, SCA, BBO, KH at 40 particles / 500 iterations.
    Table3,
    /// PSO2011 and vortex search at 50 particles / 10000 iterations.
    Table4,
}

impl PublishedTable {
    fn from_number(n: u8) -> Result<Self> {
        match n {
            3 => Ok(Self::Table3),
            4 => Ok(Self::Table4),
            other => Err(Error::Reference(format!("unknown table number {other}"))),
        }
    }

    /// `(particles, iterations, dimension)` the measured LDW-SCSA cells must use.
    pub fn required_settings(self) -> (usize, usize, usize) {
        match self {
            Self::Table3 => (40, 500, 30),
            Self::Table4 => (50, 500, 30),
        }
    }
}

impl fmt::Display for PublishedTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Table3 => "table3",
            Self::Table4 => "table4",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReferenceRecord {
    pub table: PublishedTable,
    pub function: FunctionId,
    /// Lower-case algorithm tag, e.g. `mfo`, `pso2011`, `ldw_scsa`.
    pub algorithm: String,
    pub particles: usize,
    pub iterations: usize,
    pub mean: Option<f64>,
    pub sd: Option<f64>,
}

#[derive(Debug, Deserialize)]
struct RawRecord {
    table: u8,
    function: String,
    algorithm: String,
    particles: usize,
    iterations: usize,
    mean: Option<f64>,
    sd: Option<f64>,
}

/// Immutable collection of published means and standard deviations.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceTable {
    records: Vec<ReferenceRecord>,
}

impl ReferenceTable {
    /// The bundled published numbers.
    pub fn published() -> &'static ReferenceTable {
        static TABLE: OnceLock<ReferenceTable> = OnceLock::new();
        TABLE.get_or_init(|| Self::from_csv(PUBLISHED_CSV.as_bytes()).expect("bundled reference data is well-formed"))
    }

    /// Parses the `table,function,algorithm,particles,iterations,mean,sd`
    /// layout; lines starting with `#` are comments.
    pub fn from_csv<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .from_reader(reader);
        let mut records = Vec::new();
        for row in rdr.deserialize::<RawRecord>() {
            let raw = row?;
            records.push(ReferenceRecord {
                table: PublishedTable::from_number(raw.table)?,
                function: raw
                    .function
                    .parse()
                    .map_err(|_| Error::Reference(format!("bad function id `{}`", raw.function)))?,
                algorithm: raw.algorithm.to_ascii_lowercase(),
                particles: raw.particles,
                iterations: raw.iterations,
                mean: raw.mean,
                sd: raw.sd,
            });
        }
        Ok(Self { records })
    }

    pub fn records(&self) -> &[ReferenceRecord] {
        &self.records
    }

    pub fn lookup(&self, table: PublishedTable, function: FunctionId, algorithm: &str) -> Option<&ReferenceRecord> {
        self.records
            .iter()
            .find(|r| r.table == table && r.function == function && r.algorithm == algorithm)
    }

    /// Competitor tags of `table` in first-appearance order, excluding the
    /// published LDW-SCSA column.
    pub fn competitors(&self, table: PublishedTable) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for r in self.records.iter().filter(|r| r.table == table) {
            if r.algorithm != Algorithm::LdwScsa.as_str() && !out.contains(&r.algorithm) {
                out.push(r.algorithm.clone());
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Win,
    /// Equal means; counted as a win.
    Tie,
    Lose,
    /// The competitor has no published value for this function.
    Unavailable,
}

impl Outcome {
    pub fn is_win(self) -> bool {
        matches!(self, Self::Win | Self::Tie)
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Win => "win",
            Self::Tie => "tie",
            Self::Lose => "lose",
            Self::Unavailable => "n/a",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FunctionComparison {
    pub function: FunctionId,
    /// Measured LDW-SCSA mean after zero classification.
    pub measured_mean: f64,
    pub outcomes: BTreeMap<String, Outcome>,
    /// No competitor with a published value beat the measured mean.
    pub best_overall: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub table: PublishedTable,
    pub competitors: Vec<String>,
    pub functions: Vec<FunctionComparison>,
    /// Number of functions where `best_overall` holds.
    pub best_count: usize,
}

/// Marks, per function, whether the measured LDW-SCSA mean is at most each
/// published competitor mean. Fails if the measured cells were run with
/// settings other than the table's.
pub fn compare_to_reference(
    cells: &[CellResult],
    reference: &ReferenceTable,
    table: PublishedTable,
) -> Result<ComparisonReport> {
    let (pn, mi, dim) = table.required_settings();
    let ldw: Vec<&CellResult> = cells.iter().filter(|c| c.algorithm == Algorithm::LdwScsa).collect();
    if ldw.is_empty() {
        return Err(Error::SettingsMismatch("no LDW-SCSA cells to compare".into()));
    }
    let matching: Vec<&CellResult> = ldw
        .iter()
        .copied()
        .filter(|c| c.particles == pn && c.iterations == mi && c.dimension == dim)
        .collect();
    if matching.is_empty() {
        let c = ldw[0];
        return Err(Error::SettingsMismatch(format!(
            "{table} needs particles={pn}, iterations={mi}, dimension={dim}; measured cells use \
             particles={}, iterations={}, dimension={}",
            c.particles, c.iterations, c.dimension
        )));
    }

    let competitors = reference.competitors(table);
    let mut functions = Vec::new();
    for cell in matching {
        let measured = cell.mean_classified;
        let mut outcomes = BTreeMap::new();
        for name in &competitors {
            let published = reference.lookup(table, cell.function, name).and_then(|r| r.mean);
            let outcome = match published {
                None => Outcome::Unavailable,
                Some(p) if measured < p => Outcome::Win,
                Some(p) if measured == p => Outcome::Tie,
                Some(_) => Outcome::Lose,
            };
            outcomes.insert(name.clone(), outcome);
        }
        let best_overall = outcomes.values().all(|o| *o != Outcome::Lose);
        functions.push(FunctionComparison {
            function: cell.function,
            measured_mean: measured,
            outcomes,
            best_overall,
        });
    }
    functions.sort_by_key(|f| f.function);
    let best_count = functions.iter().filter(|f| f.best_overall).count();
    Ok(ComparisonReport {
        table,
        competitors,
        functions,
        best_count,
    })
}
