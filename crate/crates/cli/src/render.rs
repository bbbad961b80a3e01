use std::fmt::Write;

use genosc_core::{
    ClassificationReport, Complex64, CompoundMatrix, Label, Matrix, SpectralVerdict, Spectrum,
};
use serde::Serialize;

pub(crate) fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

/// `%g`-style rendering with 6 significant digits.
pub(crate) fn fmt_g(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent in {:e} output");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..6).contains(&exp) {
        let sign = if exp < 0 { '-' } else { '+' };
        return format!("{}e{sign}{:02}", trim_zeros(mantissa), exp.abs());
    }
    let decimals = (5 - exp) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn fmt_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        fmt_g(z.re)
    } else {
        let sign = if z.im < 0.0 { '-' } else { '+' };
        format!("{} {sign} {}i", fmt_g(z.re), fmt_g(z.im.abs()))
    }
}

/// Right-aligned table; the first row is the header.
fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    m.rows().map(|r| r.iter().map(|&x| fmt_g(x)).collect()).collect()
}

#[derive(Serialize)]
struct CompoundJson<'a> {
    #[serde(flatten)]
    compound: &'a CompoundMatrix,
    /// 1-based index subset labelling each row and column.
    index_sets: Vec<&'a [usize]>,
}

pub(crate) fn compound_json(c: &CompoundMatrix) -> String {
    let sets: Vec<_> = (0..c.matrix.n()).map(|r| c.index_set(r)).collect();
    to_json(&CompoundJson {
        compound: c,
        index_sets: sets.iter().map(|s| s.indices()).collect(),
    })
}

pub(crate) fn compound_text(c: &CompoundMatrix) -> String {
    let m = c.matrix.n();
    let labels: Vec<String> = (0..m).map(|r| c.index_set(r).to_string()).collect();
    let mut rows = vec![std::iter::once(String::new()).chain(labels.iter().cloned()).collect()];
    for (label, r) in labels.iter().zip(matrix_rows(&c.matrix)) {
        rows.push(std::iter::once(label.clone()).chain(r).collect());
    }
    format!(
        "compound order {} of a {n}x{n} matrix ({m}x{m})\n\n{}",
        c.order,
        table(&rows),
        n = c.source_n
    )
}

fn eigen_lines(s: &Spectrum, out: &mut String) {
    for (i, z) in s.eigenvalues().iter().enumerate() {
        let _ = writeln!(out, "  λ{:<3} {:<28} |λ| = {}", i + 1, fmt_complex(*z), fmt_g(z.norm()));
    }
}

fn verdict_lines(v: &SpectralVerdict, out: &mut String) {
    let status = if v.passed { "passed" } else { "FAILED" };
    let _ = writeln!(out, "{} shape: {status}", v.shape);
    for msg in &v.violations {
        let _ = writeln!(out, "  - {msg}");
    }
}

pub(crate) fn spectrum_text(s: &Spectrum) -> String {
    let mut out = format!("eigenvalues ({}), spectral radius {}\n", s.len(), fmt_g(s.spectral_radius()));
    eigen_lines(s, &mut out);
    out
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    spectrum: &'a Spectrum,
    verdict: &'a SpectralVerdict,
}

pub(crate) fn verify_json(s: &Spectrum, v: &SpectralVerdict) -> String {
    to_json(&VerifyJson {
        spectrum: s,
        verdict: v,
    })
}

pub(crate) fn verify_text(s: &Spectrum, v: &SpectralVerdict) -> String {
    let mut out = spectrum_text(s);
    out.push('\n');
    verdict_lines(v, &mut out);
    out
}

pub(crate) fn report_text(r: &ClassificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "label: {}", r.label);
    let _ = writeln!(
        out,
        "n = {}, tau = {}, spectral tol = {}\n",
        r.n,
        fmt_g(r.tolerances.tau),
        fmt_g(r.tolerances.spectral_tol)
    );
    let yes_no = |b: bool| if b { "yes" } else { "no" }.to_string();
    let mut rows = vec![vec![
        "order".to_string(),
        "dim".into(),
        "jss-primitive".into(),
        "strict".into(),
        "J partition (outside | J)".into(),
    ]];
    for o in &r.per_order {
        rows.push(vec![
            o.order.to_string(),
            o.dimension.to_string(),
            yes_no(o.jss_primitive),
            yes_no(o.strict),
            o.j_partition.as_ref().map_or("-".into(), ToString::to_string),
        ]);
    }
    out.push_str(&table(&rows));
    out.push('\n');
    out.push_str(&spectrum_text(&r.spectrum));
    if !r.spectral.is_empty() {
        out.push('\n');
        for v in &r.spectral {
            verdict_lines(v, &mut out);
        }
    }
    let _ = writeln!(out, "\nnote: {}", r.note);
    out
}

#[derive(Serialize)]
pub(crate) struct Search<'a> {
    pub n: usize,
    pub label: Label,
    pub trials: usize,
    pub seed: u64,
    #[serde(serialize_with = "serialize_found")]
    pub found: &'a [(Matrix, ClassificationReport)],
}

#[derive(Serialize)]
struct Found<'a> {
    matrix: &'a Matrix,
    report: &'a ClassificationReport,
}

fn serialize_found<S: serde::Serializer>(
    found: &&[(Matrix, ClassificationReport)],
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_seq(found.iter().map(|(matrix, report)| Found { matrix, report }))
}

pub(crate) fn search_json(s: &Search) -> String {
    to_json(s)
}

pub(crate) fn search_text(s: &Search) -> String {
    let mut out = format!(
        "{} of {} random {n}x{n} matrices labelled {} (seed {})\n",
        s.found.len(),
        s.trials,
        s.label,
        s.seed,
        n = s.n
    );
    for (k, (m, r)) in s.found.iter().enumerate() {
        let confirmed = if r.spectrum_confirms_label() { "confirmed" } else { "NOT confirmed" };
        let _ = writeln!(out, "\n# match {}: spectrum {confirmed}", k + 1);
        for row in matrix_rows(m) {
            let _ = writeln!(out, "{}", row.join(","));
        }
    }
    out
}
