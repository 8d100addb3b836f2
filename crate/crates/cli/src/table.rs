//! Sweep tables and their CSV rendering.
//!
//! CSV conventions: mandatory header row, `,` field separator, `.` decimal
//! separator, `\n` line endings. Floats are written with 17 significant
//! digits so every cell round-trips through decimal to the identical bits,
//! making output byte-reproducible.

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(u64),
    Empty,
}

#[derive(Debug, Clone)]
pub struct SweepTable {
    header: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

impl SweepTable {
    pub fn new(header: Vec<&'static str>) -> Self {
        Self { header, rows: Vec::new() }
    }

    /// Append a row; a non-finite numeric cell is a numerical failure.
    pub fn push_row(&mut self, row: Vec<Cell>) -> Result<(), CliError> {
        debug_assert_eq!(row.len(), self.header.len());
        for cell in &row {
            if let Cell::Num(v) = cell {
                if !v.is_finite() {
                    return Err(CliError::numerics(format!(
                        "non-finite value {v} in sweep output"
                    )));
                }
            }
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            let mut first = true;
            for cell in row {
                if !first {
                    out.push(',');
                }
                first = false;
                match cell {
                    Cell::Num(v) => out.push_str(&format_float(*v)),
                    Cell::Int(n) => out.push_str(&n.to_string()),
                    Cell::Empty => {}
                }
            }
            out.push('\n');
        }
        out
    }
}

/// 17 significant digits: enough to reconstruct any f64 exactly.
pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_cells_round_trip() {
        for &v in &[
            0.75,
            -7.571_700_774_210_601e-3,
            23.0 / (4.0 * std::f64::consts::PI),
            1e-300,
            -3.333_333_333_333_333e5,
        ] {
            let s = format_float(v);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back.to_bits(), v.to_bits(), "round trip failed for {s}");
        }
    }

    #[test]
    fn csv_layout() {
        let mut t = SweepTable::new(vec!["a", "b", "c"]);
        t.push_row(vec![Cell::Int(1), Cell::Num(0.5), Cell::Empty]).unwrap();
        assert_eq!(t.to_csv(), "a,b,c\n1,5.0000000000000000e-1,\n");
    }

    #[test]
    fn non_finite_rejected() {
        let mut t = SweepTable::new(vec!["a"]);
        assert!(t.push_row(vec![Cell::Num(f64::NAN)]).is_err());
        assert!(t.push_row(vec![Cell::Num(f64::INFINITY)]).is_err());
    }
}
