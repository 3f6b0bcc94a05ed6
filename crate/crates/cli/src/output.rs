use std::fmt::Write;

use crate::{ChiTable, Format};

pub(crate) fn render_chi(t: &ChiTable<'_>, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", t.to_json()),
        Format::Csv => {
            let mut s = String::from("a,b,value\n");
            for (a, b, v) in t.series.table() {
                writeln!(s, "{a},{b},{v}").expect("string write");
            }
            s
        }
        Format::Pretty => pretty(t),
    }
}

/// Rows are powers of `z₁`, columns powers of `z₂`.
fn pretty(t: &ChiTable<'_>) -> String {
    let d = t.max_deg;
    let cells: Vec<Vec<String>> =
        (0..=d).map(|a| (0..=d).map(|b| t.series.coeff(a, b).to_string()).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1).max(d.to_string().len());
    let mut s = String::new();
    writeln!(s, "chi_{}({}) by {}, convention {}", t.n, t.f, t.method, t.convention).expect("write");
    write!(s, "{:>6}", "a\\b").expect("write");
    for b in 0..=d {
        write!(s, " {b:>width$}").expect("write");
    }
    s.push('\n');
    for (a, row) in cells.iter().enumerate() {
        write!(s, "{a:>6}").expect("write");
        for c in row {
            write!(s, " {c:>width$}").expect("write");
        }
        s.push('\n');
    }
    if let Some(ok) = t.agreement {
        writeln!(s, "agreement: {}", if ok { "MATCH" } else { "MISMATCH" }).expect("write");
    }
    s
}
