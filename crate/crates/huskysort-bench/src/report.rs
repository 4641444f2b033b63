//! Benchmark report assembly and rendering (CSV and markdown).

use std::fmt::Write as _;

use anyhow::{bail, Result};

use huskysort::stats::SortStats;

/// One (algorithm, n) cell of a benchmark.
#[derive(Debug, Clone)]
pub struct ReportRow {
    pub algorithm: String,
    pub n: usize,
    pub median_ns: u64,
    pub mean_ns: u64,
    /// Median time divided by the baseline algorithm's median at the same n.
    pub normalized: f64,
    pub stats: SortStats,
    pub residual_inversions: u64,
}

#[derive(Debug, Clone, Default)]
pub struct BenchmarkReport {
    pub rows: Vec<ReportRow>,
}

/// The fixed CSV schema; columns never change order.
pub const CSV_HEADER: &str = "algorithm,n,median_ns,mean_ns,normalized,comparisons,swaps,array_accesses,cleanup_ran,residual_inversions";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Csv,
    Markdown,
}

impl ReportFormat {
    pub fn parse(s: &str) -> Result<ReportFormat> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "markdown" => Ok(ReportFormat::Markdown),
            _ => bail!("unknown report format '{s}' (known: csv, markdown)"),
        }
    }
}

fn row_cells(row: &ReportRow) -> [String; 10] {
    [
        row.algorithm.clone(),
        row.n.to_string(),
        row.median_ns.to_string(),
        row.mean_ns.to_string(),
        format!("{:.2}", row.normalized),
        row.stats.comparisons.to_string(),
        row.stats.swaps.to_string(),
        row.stats.array_accesses.to_string(),
        row.stats.cleanup_ran.to_string(),
        row.residual_inversions.to_string(),
    ]
}

impl BenchmarkReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(CSV_HEADER);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row_cells(row).join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_markdown(&self) -> String {
        let header: Vec<&str> = CSV_HEADER.split(',').collect();
        let rows: Vec<[String; 10]> = self.rows.iter().map(row_cells).collect();
        let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
        for cells in &rows {
            for (w, cell) in widths.iter_mut().zip(cells.iter()) {
                *w = (*w).max(cell.len());
            }
        }
        let mut out = String::new();
        let emit = |out: &mut String, cells: &[&str]| {
            out.push('|');
            for (cell, w) in cells.iter().zip(&widths) {
                let _ = write!(out, " {cell:>w$} |");
            }
            out.push('\n');
        };
        emit(&mut out, &header);
        out.push('|');
        for w in &widths {
            let _ = write!(out, "{}|", "-".repeat(w + 2));
        }
        out.push('\n');
        for cells in &rows {
            let refs: Vec<&str> = cells.iter().map(String::as_str).collect();
            emit(&mut out, &refs);
        }
        out
    }

    pub fn emit(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Csv => self.to_csv(),
            ReportFormat::Markdown => self.to_markdown(),
        }
    }
}
