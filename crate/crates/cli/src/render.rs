//! Plain-text and JSON output for each command.

use serde_json::{json, Value};

use fistab::combinatorics::{monotone_injections, Diagram, Injection, Permutation, Tableau};
use fistab::linalg::RationalMatrix;
use fistab::multiplicity::{DimensionPolynomial, MultiplicityTable};
use fistab::oracle::VerifyReport;
use fistab::presentation::{ALambda, PresentationMatrix};
use fistab::Result;

const GREEK: [&str; 24] = [
    "α", "β", "γ", "δ", "ε", "ζ", "η", "θ", "ι", "κ", "λ", "μ", "ν", "ξ", "ο", "π", "ρ", "σ", "τ",
    "υ", "φ", "χ", "ψ", "ω",
];

/// Comma-separated parts, `0` for the empty partition.
pub fn shape_label(shape: &Diagram) -> String {
    if shape.is_empty() {
        return "0".into();
    }
    shape
        .rows()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Names for a tableau basis: `θ` for a single tableau, otherwise Greek
/// letters in basis order.
pub fn tableau_names(count: usize) -> Vec<String> {
    if count == 1 {
        return vec!["θ".into()];
    }
    (0..count)
        .map(|i| match GREEK.get(i) {
            Some(g) => (*g).to_string(),
            None => format!("t{}", i + 1),
        })
        .collect()
}

fn injection_label(f: &Injection) -> String {
    if f.images().is_empty() {
        return "∅".into();
    }
    let sep = if f.target() > 9 { "." } else { "" };
    f.images()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn legend(tableaux: &[Tableau], names: &[String]) -> String {
    tableaux
        .iter()
        .zip(names)
        .map(|(t, n)| format!("{n} = {t}\n"))
        .collect()
}

pub fn multiplicities_text(table: &MultiplicityTable) -> String {
    let mut out = String::from("shape\tmultiplicity\n");
    for (shape, m) in table.entries() {
        out.push_str(&format!("{}\t{m}\n", shape_label(shape)));
    }
    out
}

pub fn multiplicities_json(table: &MultiplicityTable, onset: usize) -> String {
    let entries: Vec<Value> = table
        .entries()
        .iter()
        .map(|(shape, m)| json!({ "shape": shape.rows(), "multiplicity": m }))
        .collect();
    let value = json!({
        "x_max": table.x_max(),
        "y_max": table.y_max(),
        "onset": onset,
        "multiplicities": entries,
    });
    let mut text = serde_json::to_string_pretty(&value).expect("JSON values serialize");
    text.push('\n');
    text
}

pub fn dimension_text(p: &DimensionPolynomial) -> String {
    format!("{p}\n")
}

pub fn decomposition_text(n: usize, dimension: usize, entries: &[(Diagram, usize)]) -> String {
    let mut out = format!("n = {n}, dimension {dimension}\nshape\tmultiplicity\n");
    for (shape, m) in entries.iter().filter(|(_, m)| *m > 0) {
        out.push_str(&format!("{}\t{m}\n", shape_label(shape)));
    }
    out
}

pub fn verify_text(report: &VerifyReport) -> String {
    let mut out = format!("n = {}, onset {}\n", report.n, report.onset);
    for c in &report.checks {
        let line = match &c.target {
            None => format!(
                "{}+: eventual {}, not observable at n = {}\n",
                shape_label(&c.shape),
                c.eventual,
                report.n
            ),
            Some(t) => format!(
                "{}+ -> {}: eventual {}, observed {} {}\n",
                shape_label(&c.shape),
                shape_label(t),
                c.eventual,
                c.observed,
                if c.ok() { "ok" } else { "MISMATCH" }
            ),
        };
        out.push_str(&line);
    }
    for (shape, m) in &report.unexpected {
        out.push_str(&format!("unexpected {}: {m}\n", shape_label(shape)));
    }
    out.push_str(&format!(
        "dimension {}, polynomial {} {}\n",
        report.dimension,
        report.polynomial_value,
        if report.dimension_ok() {
            "ok"
        } else {
            "MISMATCH"
        }
    ));
    let verdict = if report.pre_stable() {
        if report.agrees() {
            "PRE-STABLE (agrees)"
        } else {
            "PRE-STABLE (disagrees, below onset)"
        }
    } else if report.agrees() {
        "PASS"
    } else {
        "FAIL"
    };
    out.push_str(verdict);
    out.push('\n');
    out
}

/// A matrix with row and column labels, columns right-aligned.
pub fn labeled_matrix(m: &RationalMatrix, rows: &[String], cols: &[String]) -> String {
    let cells: Vec<Vec<String>> = (0..m.nrows())
        .map(|i| m.row(i).iter().map(ToString::to_string).collect())
        .collect();
    let label_width = rows.iter().map(|r| r.chars().count()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..m.ncols())
        .map(|j| {
            cells
                .iter()
                .map(|r| r[j].chars().count())
                .chain(std::iter::once(cols[j].chars().count()))
                .max()
                .unwrap_or(1)
        })
        .collect();
    let pad = |s: &str, w: usize| format!("{}{s}", " ".repeat(w.saturating_sub(s.chars().count())));
    let mut out = " ".repeat(label_width);
    for (c, w) in cols.iter().zip(&widths) {
        out.push_str("  ");
        out.push_str(&pad(c, *w));
    }
    out.push('\n');
    for (label, row) in rows.iter().zip(&cells) {
        out.push_str(&format!(
            "{label}{}",
            " ".repeat(label_width - label.chars().count())
        ));
        for (v, w) in row.iter().zip(&widths) {
            out.push_str("  ");
            out.push_str(&pad(v, *w));
        }
        out.push('\n');
    }
    out
}

fn block_labels(k: usize, degrees: &[usize], names: &[String]) -> Vec<String> {
    let prefix = degrees.len() > 1;
    let mut out = Vec::new();
    for (b, &x) in degrees.iter().enumerate() {
        for p in monotone_injections(k, x) {
            for name in names {
                let base = format!("{}×{name}", injection_label(&p));
                out.push(if prefix {
                    format!("{}:{base}", b + 1)
                } else {
                    base
                });
            }
        }
    }
    out
}

pub fn amatrix_text(shape: &Diagram, z: &PresentationMatrix) -> Result<String> {
    let a = ALambda::new(shape);
    let m = a.presentation(z)?;
    let names = tableau_names(a.module().dimension());
    let rows = block_labels(shape.size(), z.generator_degrees(), &names);
    let cols = block_labels(shape.size(), z.relation_degrees(), &names);
    let mut out = legend(a.module().tableaux(), &names);
    out.push_str(&format!(
        "{} x {}, corank {}\n",
        m.nrows(),
        m.ncols(),
        m.corank()
    ));
    out.push_str(&labeled_matrix(&m, &rows, &cols));
    Ok(out)
}

pub fn specht_text(shape: &Diagram, sigma: &Permutation) -> Result<String> {
    let module = fistab::specht::SpechtModule::new(shape);
    let m = module.action(sigma)?;
    let names = tableau_names(module.dimension());
    let mut out = legend(module.tableaux(), &names);
    out.push_str(&labeled_matrix(&m, &names, &names));
    Ok(out)
}

/// Reads `2,1,3`, `2 1 3` or `[2 1 3]`.
pub fn parse_permutation(text: &str) -> std::result::Result<Permutation, String> {
    let trimmed = text.trim().trim_start_matches('[').trim_end_matches(']');
    let images = trimmed
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|e| format!("bad image {s:?}: {e}"))
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Permutation::new(images).map_err(|e| e.to_string())
}
