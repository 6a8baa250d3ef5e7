use serde::Serialize;

use crate::commands::{CensusReport, GitRow, LocalReport, StabilityReport};
use crate::config::Format;
use crate::error::CliResult;

fn json<T: Serialize + ?Sized>(value: &T) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    let bytes = w.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

pub fn stability(r: &StabilityReport, format: Format) -> CliResult<String> {
    match format {
        Format::Json => json(r),
        Format::Csv => csv_table(
            &[
                "genus",
                "degree",
                "d_beta",
                "d_gamma",
                "d_rest",
                "class",
                "inequality",
                "lhs",
                "rhs",
                "strict",
                "weak",
            ],
            r.inequalities.iter().map(|i| {
                vec![
                    r.genus.to_string(),
                    r.degree.to_string(),
                    r.d_beta.to_string(),
                    r.d_gamma.to_string(),
                    r.d_rest.to_string(),
                    r.class.to_string(),
                    i.name.clone(),
                    i.lhs.to_string(),
                    i.rhs.to_string(),
                    i.strict.to_string(),
                    i.weak.to_string(),
                ]
            }),
        ),
    }
}

/// CSV rows are followed by one `total` row per class and a final `all` row.
pub fn census(r: &CensusReport, format: Format) -> CliResult<String> {
    match format {
        Format::Json => json(r),
        Format::Csv => {
            let rows = r.rows.iter().map(|row| {
                vec![
                    row.d_beta.to_string(),
                    row.d_gamma.to_string(),
                    row.d_rest.to_string(),
                    row.class.to_string(),
                    row.labeled_count.clone(),
                    opt(&row.stratum_dimension),
                ]
            });
            let totals = r.totals.iter().map(|t| {
                vec![
                    "total".into(),
                    String::new(),
                    String::new(),
                    t.class.to_string(),
                    t.labeled_count.clone(),
                    String::new(),
                ]
            });
            let all = std::iter::once(vec![
                "total".into(),
                String::new(),
                String::new(),
                "all".into(),
                r.grand_total.clone(),
                String::new(),
            ]);
            csv_table(
                &[
                    "d_beta",
                    "d_gamma",
                    "d_rest",
                    "class",
                    "labeled_count",
                    "stratum_dimension",
                ],
                rows.chain(totals).chain(all),
            )
        }
    }
}

/// In CSV the configuration and representative columns hold compact JSON.
pub fn git(rows: &[GitRow], format: Format) -> CliResult<String> {
    match format {
        Format::Json => json(rows),
        Format::Csv => {
            let mut out = Vec::with_capacity(rows.len());
            for r in rows {
                out.push(vec![
                    r.index.to_string(),
                    serde_json::to_string(&r.configuration)?,
                    r.in_y.to_string(),
                    r.closed_form.to_string(),
                    r.brute_force.to_string(),
                    r.agree.to_string(),
                    opt(&r.power),
                    opt(&r.witness),
                    match &r.representative {
                        Some(c) => serde_json::to_string(c)?,
                        None => String::new(),
                    },
                ]);
            }
            csv_table(
                &[
                    "index",
                    "configuration",
                    "in_y",
                    "closed_form",
                    "brute_force",
                    "agree",
                    "power",
                    "witness",
                    "representative",
                ],
                out,
            )
        }
    }
}

pub fn local(r: &LocalReport, format: Format) -> CliResult<String> {
    match format {
        Format::Json => json(r),
        Format::Csv => csv_table(
            &["suite", "cases", "passed", "failed", "first_failure"],
            r.suites.iter().map(|s| {
                vec![
                    s.name.clone(),
                    s.cases.to_string(),
                    s.passed.to_string(),
                    s.failures.len().to_string(),
                    s.failures
                        .first()
                        .map(|f| format!("case {}: {}", f.case, f.message))
                        .unwrap_or_default(),
                ]
            }),
        ),
    }
}
