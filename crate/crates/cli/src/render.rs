//! CSV and human-readable text renderings.

use std::fmt::Write as _;

use maxden_core::classify::Classification;
use maxden_core::engine::{AdjustmentTable, BlowupContext, DmaxReport, ResidueReport};
use maxden_core::{Factorization, GeneratingSet, Semigroup};

fn list(values: &[u64]) -> String {
    let parts: Vec<String> = values.iter().map(u64::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn spaced(values: &[u64]) -> String {
    values.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

/// Left-aligned columns separated by two spaces.
pub fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|x| x.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            let pad = widths[c] - cell.chars().count();
            line.push_str(cell);
            line.extend(std::iter::repeat_n(' ', pad));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// A table laid out with one column per item and one row per label,
/// wrapped into blocks so that no line exceeds `width`.
pub fn horizontal(labels: &[&str], columns: &[Vec<String>], width: usize) -> String {
    let label_width = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
    let col_widths: Vec<usize> = columns
        .iter()
        .map(|c| c.iter().map(|x| x.chars().count()).max().unwrap_or(0))
        .collect();

    let mut blocks: Vec<std::ops::Range<usize>> = Vec::new();
    let mut start = 0;
    let mut used = label_width;
    for (i, w) in col_widths.iter().enumerate() {
        if i > start && used + 3 + w > width {
            blocks.push(start..i);
            start = i;
            used = label_width;
        }
        used += 3 + w;
    }
    if start < columns.len() || columns.is_empty() {
        blocks.push(start..columns.len());
    }

    let mut out = String::new();
    for (b, range) in blocks.iter().enumerate() {
        if b > 0 {
            out.push('\n');
        }
        for (r, label) in labels.iter().enumerate() {
            let mut line = format!("{label:<label_width$}");
            for c in range.clone() {
                let _ = write!(line, " | {:>w$}", columns[c][r], w = col_widths[c]);
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
    }
    out
}

fn csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn factorization_list(fs: &[Factorization]) -> String {
    fs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn dmax_csv(value: u64, report: Option<&DmaxReport>) -> String {
    match report {
        Some(report) => csv(
            &["residue", "dmax_si", "witness"],
            report.per_residue.iter().map(|r| {
                vec![r.residue.to_string(), r.dmax_si.to_string(), r.witness.to_string()]
            }),
        ),
        None => csv(&["value"], [vec![value.to_string()]]),
    }
}

pub fn dmax_text(
    s: &Semigroup,
    value: u64,
    method_used: &str,
    report: Option<&DmaxReport>,
    verified: bool,
) -> String {
    let mut out = format!("S = {s}\n");
    if let Some(report) = report {
        let mut rows = vec![vec![
            "residue".to_string(),
            "adj(S_i)".to_string(),
            "dmax(S_i)".to_string(),
            "witness".to_string(),
        ]];
        for r in &report.per_residue {
            let adjusted: Vec<u64> = r.rsets.iter().map(|x| x.u).collect();
            rows.push(vec![
                r.residue.to_string(),
                list(&adjusted),
                r.dmax_si.to_string(),
                r.witness.to_string(),
            ]);
        }
        out.push('\n');
        out.push_str(&aligned(&rows));
        out.push('\n');
    }
    let _ = writeln!(out, "dmax(S) = {value}  (method: {method_used})");
    if verified {
        out.push_str("verified against the general method\n");
    }
    out
}

pub fn scan_csv(table: &AdjustmentTable) -> String {
    csv(
        &["s", "ord", "adj"],
        table
            .scan_log
            .iter()
            .map(|r| vec![r.s.to_string(), r.order.to_string(), r.adj.to_string()]),
    )
}

pub fn table_text(
    s: &Semigroup,
    ctx: &BlowupContext,
    table: &AdjustmentTable,
    report: &ResidueReport,
    width: usize,
) -> String {
    let i = table.residue;
    let f = ctx.blowup_apery_by_class()[i as usize];
    let last = table.scan_log.last().map_or(f, |r| r.s);
    let mut out = format!("S = {s}, e = {}\n", s.multiplicity());
    let _ = writeln!(out, "D = {}", list(ctx.dset().elements()));
    let _ = writeln!(out, "residue {i}: f = {f}, scan stops at {last}\n");

    let row_label = format!("s in S_{i}");
    let columns: Vec<Vec<String>> = table
        .scan_log
        .iter()
        .map(|r| vec![r.s.to_string(), r.order.to_string(), r.adj.to_string()])
        .collect();
    out.push_str(&horizontal(&[&row_label, "ord(s)", "adj(s)"], &columns, width));

    let _ = writeln!(out, "\nadj(S_{i}) = {}\n", list(&table.adjusted_elements()));

    let mut rows = vec![vec![
        "u".to_string(),
        "minord".to_string(),
        "bound".to_string(),
        "|R(u)|".to_string(),
        "witness".to_string(),
        "R(u)".to_string(),
    ]];
    for r in &report.rsets {
        rows.push(vec![
            r.u.to_string(),
            r.min_order.to_string(),
            r.length_bound.map_or("-".to_string(), |b| b.to_string()),
            r.len().to_string(),
            r.witness.to_string(),
            factorization_list(&r.factorizations),
        ]);
    }
    out.push_str(&aligned(&rows));
    let _ = writeln!(
        out,
        "\ndmax(S_{i}) = {}, attained at s = {}",
        report.dmax_si, report.witness
    );
    out
}

pub fn classify_csv(c: &Classification) -> String {
    let arith = c
        .arithmetic_sequence
        .map(|a| format!("{} {} {}", a.e, a.d, a.t))
        .unwrap_or_default();
    csv(
        &["additive", "blowup_symmetric", "supersymmetric", "arithmetic_sequence"],
        [vec![
            c.additive.to_string(),
            c.blowup_symmetric.to_string(),
            c.supersymmetric.to_string(),
            arith,
        ]],
    )
}

pub fn classify_text(s: &Semigroup, c: &Classification) -> String {
    let yes_no = |b: bool| if b { "yes" } else { "no" }.to_string();
    let arith = c.arithmetic_sequence.map_or("no".to_string(), |a| {
        format!("yes (e = {}, d = {}, t = {})", a.e, a.d, a.t)
    });
    let rows = vec![
        vec!["additive".to_string(), yes_no(c.additive)],
        vec!["blowup symmetric".to_string(), yes_no(c.blowup_symmetric)],
        vec!["supersymmetric".to_string(), yes_no(c.supersymmetric)],
        vec!["arithmetic sequence".to_string(), arith],
    ];
    format!("S = {s}\n\n{}", aligned(&rows))
}

pub fn apery_csv(elements: &[u64], maximal: &[u64]) -> String {
    csv(
        &["element", "maximal"],
        elements
            .iter()
            .map(|w| vec![w.to_string(), maximal.contains(w).to_string()]),
    )
}

pub fn apery_text(s: &Semigroup, u: u64, elements: &[u64], maximal: &[u64]) -> String {
    format!(
        "S = {s}\nF(S) = {}\nAp(S; {u}) = {}\nmaxAp(S; {u}) = {}\n",
        s.frobenius(),
        list(elements),
        list(maximal)
    )
}

pub fn blowup_csv(ctx: &BlowupContext) -> String {
    csv(
        &["residue", "blowup_apery"],
        ctx.blowup_apery_by_class()
            .iter()
            .enumerate()
            .map(|(i, f)| vec![i.to_string(), f.to_string()]),
    )
}

pub fn blowup_text(ctx: &BlowupContext) -> String {
    let b = ctx.blowup();
    format!(
        "S = {}\nD = {}\nB = {b}\nF(B) = {}\nAp(B; {}) by residue = {}\n",
        ctx.source(),
        list(ctx.dset().elements()),
        b.frobenius(),
        ctx.multiplicity(),
        spaced(ctx.blowup_apery_by_class()),
    )
}

pub fn factorizations_csv(arity: usize, all: &[Factorization]) -> String {
    let names: Vec<String> = (0..arity).map(|k| format!("x{k}")).collect();
    let mut header: Vec<&str> = names.iter().map(String::as_str).collect();
    header.push("length");
    csv(
        &header,
        all.iter().map(|f| {
            let mut row: Vec<String> = f.coefficients().iter().map(u64::to_string).collect();
            row.push(f.length().to_string());
            row
        }),
    )
}

pub fn factorizations_text(set: &GeneratingSet, target: u64, all: &[Factorization]) -> String {
    let mut out = format!("generators {set}, target {target}: {} factorizations\n", all.len());
    if !all.is_empty() {
        out.push('\n');
        let rows: Vec<Vec<String>> = all
            .iter()
            .map(|f| vec![f.to_string(), format!("length {}", f.length())])
            .collect();
        out.push_str(&aligned(&rows));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn horizontal_wraps_at_width() {
        let cols: Vec<Vec<String>> = (0..6).map(|k| vec![format!("{k}{k}"), k.to_string()]).collect();
        let text = horizontal(&["a", "bb"], &cols, 20);
        assert!(text.lines().all(|l| l.chars().count() <= 20), "{text}");
        assert_eq!(text, "a  | 00 | 11 | 22\nbb |  0 |  1 |  2\n\na  | 33 | 44 | 55\nbb |  3 |  4 |  5\n");
    }

    #[test]
    fn aligned_pads_columns() {
        let rows = vec![
            vec!["x".to_string(), "1".to_string()],
            vec!["long".to_string(), "22".to_string()],
        ];
        assert_eq!(aligned(&rows), "x     1\nlong  22\n");
    }
}
