//! Sweep report structure and its CSV/JSON encodings.
//!
//! Both encodings are rendered by hand with 17-significant-digit numbers so
//! identical configurations produce byte-identical output. The CSV carries
//! the per-frame table under the exact row field names, followed by
//! `#`-prefixed trailer lines with the summary; the JSON is one object with
//! a `rows` array and a `summary` object.

use crate::config::OutputFormat;
use crate::numfmt::fmt_f64;

pub const ROW_FIELDS: [&str; 8] = [
    "beta",
    "nu",
    "lam",
    "w_ratio",
    "energy_numeric",
    "energy_ratio_numeric",
    "energy_ratio_closed",
    "photon_energy",
];

pub const SUMMARY_FIELDS: [&str; 9] = [
    "h_est",
    "max_rel_residual",
    "max_ratio_error",
    "null_deviation",
    "tolerance",
    "ratio_pass",
    "fit_pass",
    "null_pass",
    "pass",
];

/// One frame of the sweep, keyed by its boost speed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameRow {
    pub beta: f64,
    pub nu: f64,
    pub lam: f64,
    pub w_ratio: f64,
    pub energy_numeric: f64,
    pub energy_ratio_numeric: f64,
    pub energy_ratio_closed: f64,
    pub photon_energy: f64,
}

impl FrameRow {
    fn values(&self) -> [f64; 8] {
        [
            self.beta,
            self.nu,
            self.lam,
            self.w_ratio,
            self.energy_numeric,
            self.energy_ratio_numeric,
            self.energy_ratio_closed,
            self.photon_energy,
        ]
    }
}

/// Sweep-level fit results and invariant verdicts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Summary {
    pub h_est: f64,
    pub max_rel_residual: f64,
    pub max_ratio_error: f64,
    pub null_deviation: f64,
    pub tolerance: f64,
    pub ratio_pass: bool,
    pub fit_pass: bool,
    pub null_pass: bool,
    pub pass: bool,
}

/// Machine-readable sweep report: rows sorted by beta ascending plus the
/// summary.
#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub rows: Vec<FrameRow>,
    pub summary: Summary,
}

impl RunReport {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.render_csv(),
            OutputFormat::Json => self.render_json(),
        }
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&ROW_FIELDS.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.values().iter().map(|v| fmt_f64(*v)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out.push_str("# summary\n");
        out.push_str("# ");
        out.push_str(&SUMMARY_FIELDS.join(","));
        out.push('\n');
        let s = &self.summary;
        out.push_str(&format!(
            "# {},{},{},{},{},{},{},{},{}\n",
            fmt_f64(s.h_est),
            fmt_f64(s.max_rel_residual),
            fmt_f64(s.max_ratio_error),
            fmt_f64(s.null_deviation),
            fmt_f64(s.tolerance),
            s.ratio_pass,
            s.fit_pass,
            s.null_pass,
            s.pass
        ));
        out
    }

    fn render_json(&self) -> String {
        let mut out = String::from("{\n  \"rows\": [\n");
        for (i, row) in self.rows.iter().enumerate() {
            let cells: Vec<String> = ROW_FIELDS
                .iter()
                .zip(row.values())
                .map(|(name, v)| format!("\"{name}\": {}", fmt_f64(v)))
                .collect();
            out.push_str("    { ");
            out.push_str(&cells.join(", "));
            out.push_str(" }");
            if i + 1 < self.rows.len() {
                out.push(',');
            }
            out.push('\n');
        }
        let s = &self.summary;
        out.push_str("  ],\n  \"summary\": {\n");
        out.push_str(&format!("    \"h_est\": {},\n", fmt_f64(s.h_est)));
        out.push_str(&format!(
            "    \"max_rel_residual\": {},\n",
            fmt_f64(s.max_rel_residual)
        ));
        out.push_str(&format!(
            "    \"max_ratio_error\": {},\n",
            fmt_f64(s.max_ratio_error)
        ));
        out.push_str(&format!(
            "    \"null_deviation\": {},\n",
            fmt_f64(s.null_deviation)
        ));
        out.push_str(&format!("    \"tolerance\": {},\n", fmt_f64(s.tolerance)));
        out.push_str(&format!("    \"ratio_pass\": {},\n", s.ratio_pass));
        out.push_str(&format!("    \"fit_pass\": {},\n", s.fit_pass));
        out.push_str(&format!("    \"null_pass\": {},\n", s.null_pass));
        out.push_str(&format!("    \"pass\": {}\n", s.pass));
        out.push_str("  }\n}\n");
        out
    }
}

/// Renders a flat list of (name, value) pairs in the selected format; used
/// by the single-shot commands.
pub fn render_scalars(fields: &[(&str, f64)], format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => {
            let header: Vec<&str> = fields.iter().map(|(name, _)| *name).collect();
            let values: Vec<String> = fields.iter().map(|(_, v)| fmt_f64(*v)).collect();
            format!("{}\n{}\n", header.join(","), values.join(","))
        }
        OutputFormat::Json => {
            let cells: Vec<String> = fields
                .iter()
                .map(|(name, v)| format!("  \"{name}\": {}", fmt_f64(*v)))
                .collect();
            format!("{{\n{}\n}}\n", cells.join(",\n"))
        }
    }
}
