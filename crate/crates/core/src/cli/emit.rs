use std::io::{self, Write};
use std::path::Path;

use super::config::OutputFormat;
use super::sweep::{SweepRow, SWEEP_COLUMNS};

/// Formats like C's `%.12g`: 12 significant digits, trailing zeros dropped,
/// exponent form outside `1e-5 ≤ |x| < 1e12`. Infinities print as `inf`.
pub fn format_sig12(x: f64) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..12).contains(&exp) {
        let mantissa = strip_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (11 - exp) as usize;
        strip_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

enum Cell {
    Num(f64),
    Flag(bool),
    Missing,
}

impl SweepRow {
    fn cells(&self) -> [Cell; 20] {
        use Cell::*;
        [
            Num(self.p),
            Num(self.p_prime),
            Num(self.para_gas),
            Num(self.ortho_gas),
            Num(self.ratio_gas),
            Num(self.para_liq),
            Num(self.ortho_liq),
            Num(self.ratio_liq),
            Num(self.negativity_liq),
            Flag(self.entangled),
            Num(self.purity_gas),
            Num(self.purity_liq),
            Num(self.entropy_gas_bits),
            Num(self.sx_gas),
            Num(self.sy_gas),
            Num(self.sz_gas),
            Num(self.sx_liq),
            Num(self.sy_liq),
            Num(self.sz_liq),
            self.mc_trace_dist.map_or(Missing, Num),
        ]
    }
}

fn csv_token(cell: &Cell) -> String {
    match cell {
        Cell::Num(x) => format_sig12(*x),
        Cell::Flag(b) => u8::from(*b).to_string(),
        Cell::Missing => String::new(),
    }
}

fn json_token(cell: &Cell) -> String {
    match cell {
        Cell::Num(x) if x.is_finite() => format_sig12(*x),
        Cell::Num(x) => format!("\"{}\"", format_sig12(*x)),
        Cell::Flag(b) => u8::from(*b).to_string(),
        Cell::Missing => "null".to_string(),
    }
}

/// Serializes sweep rows as CSV (header + one line per row) or as a JSON
/// array of objects keyed by the CSV header names.
pub fn emit(rows: &[SweepRow], format: OutputFormat) -> Vec<u8> {
    let mut out = String::new();
    match format {
        OutputFormat::Csv => {
            out.push_str(&SWEEP_COLUMNS.join(","));
            out.push('\n');
            for row in rows {
                let tokens: Vec<String> = row.cells().iter().map(csv_token).collect();
                out.push_str(&tokens.join(","));
                out.push('\n');
            }
        }
        OutputFormat::Json => {
            out.push('[');
            for (i, row) in rows.iter().enumerate() {
                out.push_str(if i == 0 { "\n  {" } else { ",\n  {" });
                let fields: Vec<String> = SWEEP_COLUMNS
                    .iter()
                    .zip(row.cells().iter())
                    .map(|(k, c)| format!("\"{k}\": {}", json_token(c)))
                    .collect();
                out.push_str(&fields.join(", "));
                out.push('}');
            }
            if !rows.is_empty() {
                out.push('\n');
            }
            out.push_str("]\n");
        }
    }
    out.into_bytes()
}

/// Writes to `path`, or to standard output when `path` is `None`.
pub fn write_output(bytes: &[u8], path: Option<&Path>) -> io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, bytes),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()
        }
    }
}
