//! GO / GEO / GOO classification from J-sign-symmetric primitivity of every
//! compound order, cross-checked against the predicted spectral shape.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::matrix::{binomial, compound, Matrix};
use crate::primitivity::jss_primitive_from_pattern;
use crate::sign::{find_j_strict, sign_pattern_with_scale, JPartition};
use crate::spectra::{eigenvalues, verify, SpectralShape, SpectralVerdict, Spectrum};

pub const DEFAULT_TAU: f64 = 1e-9;
pub const DEFAULT_MAX_DIM: usize = 12;

/// Printed on every report: the criteria are sufficient, not necessary.
pub const SUFFICIENCY_NOTE: &str = "The compound-order criteria are sufficient conditions only: \
label NONE means the criteria are not established, not that the spectrum violates the GO/GEO/GOO shapes.";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Label {
    Go,
    Geo,
    Goo,
    /// Both the even and the odd criterion hold but not every order does.
    /// Even and odd orders together cover `1..=n`, so for `n ≥ 2` this is
    /// never produced; it is kept so the label set stays closed.
    GeoAndGoo,
    None,
}

impl Label {
    /// Spectral shapes implied by the label.
    pub fn shapes(self) -> &'static [SpectralShape] {
        match self {
            Label::Go => &[SpectralShape::GoShape],
            Label::Geo => &[SpectralShape::GeoShape],
            Label::Goo => &[SpectralShape::GooShape],
            Label::GeoAndGoo => &[SpectralShape::GeoShape, SpectralShape::GooShape],
            Label::None => &[],
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::Go => "GO",
            Label::Geo => "GEO",
            Label::Goo => "GOO",
            Label::GeoAndGoo => "GEO_AND_GOO",
            Label::None => "NONE",
        })
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "GO" => Ok(Label::Go),
            "GEO" => Ok(Label::Geo),
            "GOO" => Ok(Label::Goo),
            "GEO_AND_GOO" => Ok(Label::GeoAndGoo),
            "NONE" => Ok(Label::None),
            other => Err(invalid(format!("unknown label {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrderAnalysis {
    pub order: usize,
    /// Dimension `C(n, order)` of the compound matrix.
    pub dimension: usize,
    pub jss_primitive: bool,
    pub strict: bool,
    pub j_partition: Option<JPartition>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Tolerances {
    pub tau: f64,
    pub spectral_tol: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub per_order: Vec<OrderAnalysis>,
    pub label: Label,
    pub spectrum: Spectrum,
    /// One verdict per shape implied by `label`; empty for `NONE`.
    pub spectral: Vec<SpectralVerdict>,
    pub tolerances: Tolerances,
    pub note: &'static str,
}

impl ClassificationReport {
    pub fn order(&self, j: usize) -> Option<&OrderAnalysis> {
        self.per_order.get(j.checked_sub(1)?)
    }

    /// True when every implied spectral shape was confirmed.
    pub fn spectrum_confirms_label(&self) -> bool {
        self.spectral.iter().all(|v| v.passed)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClassifyOptions {
    pub tau: f64,
    pub spectral_tol: f64,
    /// Largest accepted dimension; the biggest compound has `C(n, n/2)` rows.
    pub max_dim: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self {
            tau: DEFAULT_TAU,
            spectral_tol: crate::spectra::DEFAULT_SPECTRAL_TOL,
            max_dim: DEFAULT_MAX_DIM,
        }
    }
}

pub fn classify(a: &Matrix, tau: f64, spectral_tol: f64) -> Result<ClassificationReport> {
    classify_with(
        a,
        &ClassifyOptions {
            tau,
            spectral_tol,
            ..ClassifyOptions::default()
        },
    )
}

pub fn classify_with(a: &Matrix, opts: &ClassifyOptions) -> Result<ClassificationReport> {
    let n = a.n();
    if n < 2 {
        return Err(invalid("classification needs a matrix of dimension at least 2"));
    }
    if n > opts.max_dim {
        return Err(Error::Capacity(format!(
            "dimension {n} exceeds the limit of {}: the order-{} compound alone would be {m}x{m}",
            opts.max_dim,
            n / 2,
            m = binomial(n, n / 2)
        )));
    }
    if !(0.0..).contains(&opts.tau) || !(0.0..).contains(&opts.spectral_tol) {
        return Err(invalid("tolerances must be nonnegative"));
    }

    let per_order = (1..=n)
        .into_par_iter()
        .map(|j| analyze_order(a, j, opts.tau))
        .collect::<Result<Vec<_>>>()?;
    let label = derive_label(&per_order);

    let spectrum = eigenvalues(a, opts.spectral_tol)?;
    let spectral = label
        .shapes()
        .iter()
        .map(|&shape| verify(&spectrum, shape, opts.spectral_tol))
        .collect();

    Ok(ClassificationReport {
        n,
        per_order,
        label,
        spectrum,
        spectral,
        tolerances: Tolerances {
            tau: opts.tau,
            spectral_tol: opts.spectral_tol,
        },
        note: SUFFICIENCY_NOTE,
    })
}

/// Sign analysis of one compound order.
///
/// The zero cutoff is `τ · max(max|A^(j)|, (max|A|)^j)`: a minor that cancels
/// exactly in real arithmetic leaves rounding noise of size `~ε·(max|A|)^j`,
/// which must read as ZERO even when it is the largest entry (as for the
/// `1×1` compound holding `det A`).
pub fn analyze_order(a: &Matrix, j: usize, tau: f64) -> Result<OrderAnalysis> {
    let c = compound(a, j)?.matrix;
    let scale = c.max_abs().max(a.max_abs().powi(j as i32));
    let scale = if scale > 0.0 { scale } else { 1.0 };
    let pattern = sign_pattern_with_scale(&c, tau, scale);
    let strict = find_j_strict(&pattern).is_some();
    let v = jss_primitive_from_pattern(&c, &pattern, tau * scale)?;
    Ok(OrderAnalysis {
        order: j,
        dimension: c.n(),
        jss_primitive: v.verdict,
        strict,
        j_partition: v.j_partition,
    })
}

fn derive_label(per_order: &[OrderAnalysis]) -> Label {
    let pass = |parity: usize| {
        per_order
            .iter()
            .filter(|o| o.order % 2 == parity)
            .all(|o| o.jss_primitive)
    };
    let all = per_order.iter().all(|o| o.jss_primitive);
    match (all, pass(0), pass(1)) {
        (true, _, _) => Label::Go,
        (false, true, true) => Label::GeoAndGoo,
        (false, true, false) => Label::Geo,
        (false, false, true) => Label::Goo,
        (false, false, false) => Label::None,
    }
}

/// Random matrix with entries uniform on `{−10.0, −9.9, …, 10.0}`.
pub fn random_decimal_matrix(n: usize, rng: &mut impl Rng) -> Matrix {
    Matrix::from_fn(n, |_, _| f64::from(rng.random_range(-100i32..=100)) / 10.0)
}

/// Samples `trials` random one-decimal matrices and keeps those classified
/// as `target`, together with their reports. Deterministic for a seed.
pub fn search_examples_with_reports(
    n: usize,
    target: Label,
    trials: usize,
    rng_seed: u64,
    opts: &ClassifyOptions,
) -> Result<Vec<(Matrix, ClassificationReport)>> {
    if n < 2 {
        return Err(invalid("search needs n ≥ 2"));
    }
    if trials == 0 {
        return Err(invalid("search needs at least one trial"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let candidates: Vec<Matrix> = (0..trials)
        .map(|_| random_decimal_matrix(n, &mut rng))
        .collect();
    let found = candidates
        .into_par_iter()
        .filter_map(|m| match classify_with(&m, opts) {
            Ok(r) if r.label == target => Some(Ok((m, r))),
            Ok(_) => None,
            // a tolerance conflict on one sample is not a search failure
            Err(Error::InvariantViolation(_) | Error::NumericFailure(_)) => None,
            Err(e) => Some(Err(e)),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(found)
}

pub fn search_examples(
    n: usize,
    target: Label,
    trials: usize,
    rng_seed: u64,
) -> Result<Vec<Matrix>> {
    Ok(
        search_examples_with_reports(n, target, trials, rng_seed, &ClassifyOptions::default())?
            .into_iter()
            .map(|(m, _)| m)
            .collect(),
    )
}
