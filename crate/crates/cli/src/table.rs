//! Rectangular numeric tables and their CSV / JSON serialisations.

use std::fmt::Write as _;

/// Column names plus rows of finite numbers.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputTable {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl OutputTable {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Self {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        assert_eq!(row.len(), self.columns.len(), "row width must match header");
        self.rows.push(row);
    }

    /// True when every value is finite.
    pub fn is_finite(&self) -> bool {
        self.rows.iter().flatten().all(|x| x.is_finite())
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&x| format_number(x)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// `{"columns": [...], "rows": [[...], ...]}` with numbers written exactly
    /// as in the CSV form.
    pub fn to_json(&self) -> String {
        let columns = serde_json::to_string(&self.columns).expect("strings serialise");
        let mut out = format!("{{\"columns\":{columns},\"rows\":[");
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push('[');
            for (j, &x) in row.iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                let _ = write!(out, "{}", format_number(x));
            }
            out.push(']');
        }
        out.push_str("]}\n");
        out
    }
}

/// Nine significant digits; exponent form below 1e-4 (and from 1e9 up),
/// plain decimal otherwise. Zero is written as `0`.
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{x:.8e}");
    let exp: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .unwrap_or(0);
    if !(-4..9).contains(&exp) {
        return sci;
    }
    let decimals = (8 - exp) as usize;
    format!("{x:.decimals$}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_formatting() {
        assert_eq!(format_number(0.0), "0");
        assert_eq!(format_number(1.0), "1.00000000");
        assert_eq!(format_number(0.007_225_546_012), "0.00722554601");
        assert_eq!(format_number(5.601_477_782_875), "5.60147778");
        assert_eq!(format_number(464.141_990_764_995), "464.141991");
        assert_eq!(format_number(1.25e-5), "1.25000000e-5");
        assert_eq!(format_number(-2.0e-7), "-2.00000000e-7");
        assert_eq!(format_number(9.999_999_999_6), "10.0000000");
        assert_eq!(format_number(1e-4), "0.000100000000");
    }

    #[test]
    fn csv_and_json_layout() {
        let mut t = OutputTable::new(["t", "beta"]);
        t.push(vec![0.0, 0.0]);
        t.push(vec![1.0, 0.367_879_441_171]);
        assert_eq!(t.to_csv(), "t,beta\n0,0\n1.00000000,0.367879441\n");
        let v: serde_json::Value = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(v["columns"][1], "beta");
        assert_eq!(v["rows"][1][1].as_f64().unwrap(), 0.367_879_441);
    }
}
