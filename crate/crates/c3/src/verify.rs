//! Comparison of the computed spoke-graded stems against the frozen
//! reference grid (weights 16 down to -16, stems 0..=25). Reference cells
//! are comma-separated tokens: `Z3` a 3-adic tower, `A(C3)` the rank-2
//! Burnside component, `pi_n` the full 3-primary part of the classical
//! n-stem, and bare numbers cyclic summands (`3`, `9`, `3^2`, ...).

use grp3::FinAbelian3Group;
use serde::Deserialize;
use stems::Catalog;

use crate::column::WeightColumn;
use crate::entry::c3_stem;
use crate::C3Error;

const TABLE3_JSONL: &str = include_str!("../fixtures/table3.jsonl");

#[derive(Clone, Debug, Deserialize)]
pub struct Table3Row {
    pub j: i64,
    /// Groups for stems 0..=25, in order.
    pub groups: Vec<String>,
    #[serde(default)]
    pub note: Option<String>,
}

/// The frozen reference grid, weights descending from 16 to -16.
pub fn bundled_table3() -> Vec<Table3Row> {
    TABLE3_JSONL
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).expect("reference grid row parses"))
        .collect()
}

/// Parse one reference cell into a 3-complete group.
pub fn parse_cell(catalog: &Catalog, text: &str) -> Result<FinAbelian3Group, C3Error> {
    let t = text.trim();
    if t == "0" {
        return Ok(FinAbelian3Group::zero());
    }
    let mut acc = FinAbelian3Group::zero();
    for token in t.split(',') {
        let token = token.trim();
        let part = if token == "A(C3)" {
            FinAbelian3Group::free(2)
        } else if token == "Z3" {
            FinAbelian3Group::free(1)
        } else if let Some(n) = token.strip_prefix("pi_") {
            let n: u32 = n
                .parse()
                .map_err(|_| C3Error::BadTableCell(format!("bad stem symbol `{token}`")))?;
            catalog.pi_cl(n)?
        } else {
            FinAbelian3Group::from_notation(token)
                .ok_or_else(|| C3Error::BadTableCell(format!("bad token `{token}`")))?
        };
        acc = acc.direct_sum(&part);
    }
    Ok(acc)
}

#[derive(Clone, Debug)]
pub struct Mismatch {
    pub i: i64,
    pub j: i64,
    pub expected: String,
    pub computed: String,
}

/// Every cell of the reference grid compared against the engine.
pub fn table3_mismatches(catalog: &Catalog, rows: &[Table3Row]) -> Result<Vec<Mismatch>, C3Error> {
    let mut out = Vec::new();
    for row in rows {
        let column = WeightColumn::compute(catalog, row.j)?;
        for (i, cell) in row.groups.iter().enumerate() {
            let i = i as i64;
            let expected = parse_cell(catalog, cell)?;
            let entry = c3_stem(catalog, &column, i)?;
            if entry.group3 != expected {
                out.push(Mismatch {
                    i,
                    j: row.j,
                    expected: format!("{cell} = {}", expected.display()),
                    computed: entry.group3.display(),
                });
            }
        }
    }
    Ok(out)
}
