//! Text renderings: census CSV and per-prime FPR lines.

use std::fmt::Write as _;

use costas_core::density::Census;
use costas_core::fpr::FprReport;
use serde::Serialize;

pub const CSV_HEADER: &str = "x,count,pi_x,ratio,predicted";

/// Census rows as versioned CSV. `{:.6}` never uses locale separators.
pub fn census_csv(census: &Census) -> String {
    let mut out = String::from("# format=1\n");
    out.push_str(CSV_HEADER);
    out.push('\n');
    for row in &census.rows {
        let predicted = row.predicted.map(|v| format!("{v:.6}")).unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{:.6},{}",
            row.x, row.count, row.pi_x, row.ratio, predicted
        )
        .unwrap();
    }
    out
}

#[derive(Serialize)]
pub struct FprLine {
    pub p: u64,
    pub candidates: Vec<u64>,
    pub fprs: Vec<u64>,
    pub t4_root: Option<u64>,
    pub t4_applicable: bool,
    pub g4_applicable: bool,
}

impl From<FprReport> for FprLine {
    fn from(r: FprReport) -> Self {
        FprLine {
            p: r.p,
            candidates: r.candidates,
            fprs: r.fprs,
            t4_root: r.t4_root,
            t4_applicable: r.t4_applicable,
            g4_applicable: r.g4_applicable,
        }
    }
}

pub const FPR_HEADER: &str = "p,candidates,fprs,t4_root,t4_applicable,g4_applicable";

fn join(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(";")
}

/// Lists are `;`-separated so every line keeps six fields.
pub fn fpr_csv(lines: &[FprLine]) -> String {
    let mut out = String::from(FPR_HEADER);
    out.push('\n');
    for l in lines {
        let root = l.t4_root.map(|r| r.to_string()).unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{},{}",
            l.p,
            join(&l.candidates),
            join(&l.fprs),
            root,
            l.t4_applicable,
            l.g4_applicable
        )
        .unwrap();
    }
    out
}

pub fn fpr_json(lines: &[FprLine]) -> String {
    let mut s = serde_json::to_string(lines).expect("plain data serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use costas_core::fpr::fpr_report;

    #[test]
    fn fpr_line_for_eleven() {
        let line = FprLine::from(fpr_report(11).unwrap());
        assert_eq!(
            fpr_csv(&[line]),
            format!("{FPR_HEADER}\n11,4;8,8,7,true,false\n")
        );
    }

    #[test]
    fn census_csv_shape() {
        let c = costas_core::density::census_t4(100, None).unwrap();
        let csv = census_csv(&c);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "# format=1");
        assert_eq!(lines[1], CSV_HEADER);
        assert!(lines[2..].iter().all(|l| l.split(',').count() == 5));
        assert!(!csv.contains('\r'));
    }
}
