//! Spectra of real matrices and the spectral shapes predicted for
//! generalized oscillatory (GO), even oscillatory (GEO) and odd oscillatory
//! (GOO) matrices.
//!
//! "Equal modulus" and "real" are tolerance predicates:
//!
//! * `|λ|` and `|μ|` are equal iff `||λ| − |μ|| ≤ tol · max(|λ|, |μ|)`;
//! * `λ` is real iff `|Im λ| ≤ tol · (1 + |λ|)`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::eigen::real_eigenvalues;
use crate::error::{invalid, Error, Result};
use crate::matrix::{compound, CombIndex, Matrix};

pub const DEFAULT_SPECTRAL_TOL: f64 = 1e-6;

/// Eigenvalues in canonical order: modulus descending; within one modulus
/// level (moduli equal up to `multiplicity_tol`) by `|arg|` ascending, and
/// positive argument before negative.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Spectrum {
    eigenvalues: Vec<Complex64>,
    multiplicity_tol: f64,
}

impl Spectrum {
    pub fn from_values(values: Vec<Complex64>, multiplicity_tol: f64) -> Self {
        let mut values: Vec<Complex64> = values
            .into_iter()
            .map(|z| {
                // -0.0 would put a real eigenvalue at arg -π
                Complex64::new(z.re + 0.0, z.im + 0.0)
            })
            .collect();
        values.sort_by(|a, b| b.norm().total_cmp(&a.norm()));
        let mut out = Vec::with_capacity(values.len());
        for level in modulus_levels(&values, multiplicity_tol) {
            let mut block = values[level].to_vec();
            block.sort_by(|a, b| a.arg().abs().total_cmp(&b.arg().abs()));
            // |arg| ties (up to tolerance) list the positive argument first
            let mut start = 0;
            for i in 1..=block.len() {
                if i == block.len()
                    || block[i].arg().abs() - block[i - 1].arg().abs() > multiplicity_tol * PI
                {
                    block[start..i].sort_by(|a, b| {
                        (a.arg() < 0.0)
                            .cmp(&(b.arg() < 0.0))
                            .then_with(|| b.re.total_cmp(&a.re))
                    });
                    start = i;
                }
            }
            out.extend(block);
        }
        Self {
            eigenvalues: out,
            multiplicity_tol,
        }
    }

    pub fn from_real(values: &[f64], multiplicity_tol: f64) -> Self {
        Self::from_values(
            values.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
            multiplicity_tol,
        )
    }

    pub fn eigenvalues(&self) -> &[Complex64] {
        &self.eigenvalues
    }

    pub fn multiplicity_tol(&self) -> f64 {
        self.multiplicity_tol
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn spectral_radius(&self) -> f64 {
        self.eigenvalues.first().map_or(0.0, |z| z.norm())
    }
}

/// Index ranges of consecutive eigenvalues (already sorted by modulus) whose
/// neighbouring moduli are equal within `tol`.
fn modulus_levels(sorted: &[Complex64], tol: f64) -> Vec<std::ops::Range<usize>> {
    let mut levels = Vec::new();
    let mut start = 0;
    for i in 1..=sorted.len() {
        if i == sorted.len() || !same_modulus(sorted[i - 1], sorted[i], tol) {
            levels.push(start..i);
            start = i;
        }
    }
    levels
}

pub fn is_real(z: Complex64, tol: f64) -> bool {
    z.im.abs() <= tol * (1.0 + z.norm())
}

pub fn same_modulus(a: Complex64, b: Complex64, tol: f64) -> bool {
    let (ma, mb) = (a.norm(), b.norm());
    (ma - mb).abs() <= tol * ma.max(mb)
}

/// `arg μ = −arg λ`, i.e. `λ·μ` is a positive real. A zero eigenvalue has no
/// argument and pairs with anything.
fn opposite_args(a: Complex64, b: Complex64, tol: f64) -> bool {
    if a.norm() == 0.0 || b.norm() == 0.0 {
        return true;
    }
    let mut d = a.arg() + b.arg();
    if d > PI {
        d -= 2.0 * PI;
    } else if d <= -PI {
        d += 2.0 * PI;
    }
    d.abs() <= tol * PI
}

/// All eigenvalues of `a`, conjugate-closed, in canonical order.
pub fn eigenvalues(a: &Matrix, tol: f64) -> Result<Spectrum> {
    let values = real_eigenvalues(a)?;
    let scale = a.frobenius_norm().max(f64::MIN_POSITIVE);
    for z in values.iter().filter(|z| z.im != 0.0) {
        let twins = values
            .iter()
            .filter(|w| (**w - z.conj()).norm() <= tol * scale)
            .count();
        let selves = values
            .iter()
            .filter(|w| (**w - *z).norm() <= tol * scale)
            .count();
        if twins < selves {
            return Err(Error::NumericFailure(format!(
                "eigenvalue {z} has no matching conjugate"
            )));
        }
    }
    Ok(Spectrum::from_values(values, tol))
}

/// All `C(n, j)` products `λ_{i1}···λ_{ij}` over increasing index tuples.
pub fn kronecker_products(s: &Spectrum, j: usize) -> Result<Vec<Complex64>> {
    let n = s.len();
    if j == 0 || j > n {
        return Err(invalid(format!("order {j} outside [1, {n}]")));
    }
    Ok(CombIndex::all(n, j)
        .iter()
        .map(|c| {
            c.indices()
                .iter()
                .map(|&i| s.eigenvalues[i - 1])
                .product()
        })
        .collect())
}

/// Greedy nearest-neighbour pairing of two multisets, largest modulus first.
/// Returns the largest distance between paired values. Not an optimal
/// assignment, but adequate when the clusters are well separated.
pub fn greedy_match_deviation(expected: &[Complex64], actual: &[Complex64]) -> Result<f64> {
    if expected.len() != actual.len() {
        return Err(invalid(format!(
            "multisets differ in size: {} vs {}",
            expected.len(),
            actual.len()
        )));
    }
    let mut order: Vec<&Complex64> = expected.iter().collect();
    order.sort_by(|a, b| b.norm().total_cmp(&a.norm()));
    let mut used = vec![false; actual.len()];
    let mut worst = 0.0_f64;
    for e in order {
        let (best, d) = actual
            .iter()
            .enumerate()
            .filter(|(i, _)| !used[*i])
            .map(|(i, a)| (i, (a - e).norm()))
            .min_by(|x, y| x.1.total_cmp(&y.1))
            .expect("equal lengths");
        used[best] = true;
        worst = worst.max(d);
    }
    Ok(worst)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SpectralShape {
    GoShape,
    GeoShape,
    GooShape,
}

impl std::fmt::Display for SpectralShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SpectralShape::GoShape => "GO",
            SpectralShape::GeoShape => "GEO",
            SpectralShape::GooShape => "GOO",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralVerdict {
    pub shape: SpectralShape,
    pub passed: bool,
    pub violations: Vec<String>,
}

impl SpectralVerdict {
    fn new(shape: SpectralShape, violations: Vec<String>) -> Self {
        Self {
            shape,
            passed: violations.is_empty(),
            violations,
        }
    }
}

pub fn verify(s: &Spectrum, shape: SpectralShape, tol: f64) -> SpectralVerdict {
    match shape {
        SpectralShape::GoShape => verify_go(s, tol),
        SpectralShape::GeoShape => verify_geo(s, tol),
        SpectralShape::GooShape => verify_goo(s, tol),
    }
}

/// Simple, positive, pairwise distinct in modulus:
/// `λ_1 > λ_2 > … > λ_n > 0`.
pub fn verify_go(s: &Spectrum, tol: f64) -> SpectralVerdict {
    let ev = &s.eigenvalues;
    let mut v = Vec::new();
    for (i, &z) in ev.iter().enumerate() {
        if !is_real(z, tol) {
            v.push(format!("λ_{} = {} is not real", i + 1, fmt_c(z)));
        } else if z.re <= 0.0 {
            v.push(format!("λ_{} = {} is not positive", i + 1, fmt_c(z)));
        }
    }
    for i in 1..ev.len() {
        if same_modulus(ev[i - 1], ev[i], tol) {
            v.push(drop_violation(ev, i));
        }
    }
    SpectralVerdict::new(SpectralShape::GoShape, v)
}

/// `|λ_1| ≥ |λ_2| > |λ_3| ≥ |λ_4| > …`, at most two eigenvalues per circle,
/// `arg λ_{i+1} = −arg λ_i` for `i = 1, 3, 5, …`, and `λ_n` real when `n`
/// is odd.
pub fn verify_geo(s: &Spectrum, tol: f64) -> SpectralVerdict {
    let ev = &s.eigenvalues;
    let n = ev.len();
    let mut v = crowded_levels(ev, tol);
    // 1-based drops between (2,3), (4,5), …
    for i in (2..n).step_by(2) {
        if same_modulus(ev[i - 1], ev[i], tol) {
            v.push(drop_violation(ev, i));
        }
    }
    for i in (1..n).step_by(2) {
        if !opposite_args(ev[i - 1], ev[i], tol) {
            v.push(pair_violation(ev, i));
        }
    }
    if n % 2 == 1 && !is_real(ev[n - 1], tol) {
        v.push(format!(
            "n = {n} is odd but λ_{n} = {} is not real",
            fmt_c(ev[n - 1])
        ));
    }
    SpectralVerdict::new(SpectralShape::GeoShape, v)
}

/// `λ_1 = ρ > |λ_2| ≥ |λ_3| > |λ_4| ≥ …` with `λ_1` simple and positive, at
/// most two eigenvalues per circle, `arg λ_{i+1} = −arg λ_i` for
/// `i = 2, 4, …`, and `λ_n` real when `n` is even.
pub fn verify_goo(s: &Spectrum, tol: f64) -> SpectralVerdict {
    let ev = &s.eigenvalues;
    let n = ev.len();
    let mut v = Vec::new();
    if let Some(&l1) = ev.first() {
        if !is_real(l1, tol) || l1.re <= 0.0 {
            v.push(format!("λ_1 = {} is not a positive real", fmt_c(l1)));
        }
    }
    v.extend(crowded_levels(ev, tol));
    // 1-based drops between (1,2), (3,4), …
    for i in (1..n).step_by(2) {
        if same_modulus(ev[i - 1], ev[i], tol) {
            v.push(drop_violation(ev, i));
        }
    }
    for i in (2..n).step_by(2) {
        if !opposite_args(ev[i - 1], ev[i], tol) {
            v.push(pair_violation(ev, i));
        }
    }
    if n > 0 && n.is_multiple_of(2) && !is_real(ev[n - 1], tol) {
        v.push(format!(
            "n = {n} is even but λ_{n} = {} is not real",
            fmt_c(ev[n - 1])
        ));
    }
    SpectralVerdict::new(SpectralShape::GooShape, v)
}

fn crowded_levels(ev: &[Complex64], tol: f64) -> Vec<String> {
    modulus_levels(ev, tol)
        .into_iter()
        .filter(|r| r.len() > 2)
        .map(|r| {
            format!(
                "λ_{}..λ_{} share modulus {:.6} ({} eigenvalues on one circle)",
                r.start + 1,
                r.end,
                ev[r.start].norm(),
                r.len()
            )
        })
        .collect()
}

/// `i` is the 1-based index of the first element of the pair.
fn drop_violation(ev: &[Complex64], i: usize) -> String {
    format!(
        "|λ_{}| = {:.6} and |λ_{}| = {:.6} are not strictly separated",
        i,
        ev[i - 1].norm(),
        i + 1,
        ev[i].norm()
    )
}

fn pair_violation(ev: &[Complex64], i: usize) -> String {
    format!(
        "arg λ_{} ≠ −arg λ_{} ({} and {})",
        i + 1,
        i,
        fmt_c(ev[i]),
        fmt_c(ev[i - 1])
    )
}

fn fmt_c(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im > 0.0 {
        format!("{}+{}i", z.re, z.im)
    } else {
        format!("{}-{}i", z.re, -z.im)
    }
}

/// `ρ(A^(j)) / ρ(A^(j−1))` for `j = 1..n`, with `ρ(A^(0)) = 1`. For a GO
/// matrix these are exactly its eigenvalues in decreasing order.
pub fn ratio_chain(a: &Matrix) -> Result<Vec<f64>> {
    let n = a.n();
    let norm = a.frobenius_norm();
    let mut prev = 1.0;
    let mut out = Vec::with_capacity(n);
    for j in 1..=n {
        if prev <= 1e-12 * norm.powi(j as i32 - 1) || prev == 0.0 {
            return Err(Error::DegenerateSpectrum(format!(
                "spectral radius of compound order {} is {prev:e}, cannot form ratio",
                j - 1
            )));
        }
        let c = compound(a, j)?;
        let rho = eigenvalues(&c.matrix, DEFAULT_SPECTRAL_TOL)?.spectral_radius();
        out.push(rho / prev);
        prev = rho;
    }
    Ok(out)
}
