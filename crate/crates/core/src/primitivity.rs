//! Primitivity of nonnegative patterns and J-sign-symmetric primitivity.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::sign::{apply_diag_similarity, find_j, JPartition, Sign, SignPattern};

/// Square boolean matrix stored as packed rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoolMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BoolMatrix {
    pub fn zeros(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Self {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut b = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                if f(i, k) {
                    b.set(i, k);
                }
            }
        }
        b
    }

    /// Structural nonzeros of a sign pattern.
    pub fn from_pattern(p: &SignPattern) -> Self {
        Self::from_fn(p.n(), |i, k| p.get(i, k) != Sign::Zero)
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, k| i == k)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, k: usize) -> bool {
        self.bits[i * self.words + k / 64] >> (k % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, k: usize) {
        self.bits[i * self.words + k / 64] |= 1 << (k % 64);
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    pub fn is_full(&self) -> bool {
        let tail = self.n % 64;
        (0..self.n).all(|i| {
            let row = self.row(i);
            let (last, body) = row.split_last().unwrap();
            body.iter().all(|&w| w == u64::MAX)
                && if tail == 0 {
                    *last == u64::MAX
                } else {
                    *last == (1u64 << tail) - 1
                }
        })
    }

    /// Boolean product over the (or, and) semiring.
    pub fn bool_mul(&self, rhs: &BoolMatrix) -> BoolMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let mut out = Self::zeros(self.n);
        for i in 0..self.n {
            let dst = i * out.words;
            for k in 0..self.n {
                if self.get(i, k) {
                    for (o, &w) in out.bits[dst..dst + out.words]
                        .iter_mut()
                        .zip(rhs.row(k))
                    {
                        *o |= w;
                    }
                }
            }
        }
        out
    }

    /// `m`-th boolean power by repeated squaring.
    pub fn bool_pow(&self, m: u64) -> BoolMatrix {
        let mut result = Self::identity(self.n);
        let mut base = self.clone();
        let mut e = m;
        while e > 0 {
            if e & 1 == 1 {
                result = result.bool_mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.bool_mul(&base);
            }
        }
        result
    }
}

/// True iff the `m`-th boolean power of `b` has no false entry.
pub fn bool_pow_reaches_all(b: &BoolMatrix, m: u64) -> bool {
    b.bool_pow(m).is_full()
}

/// Wielandt's bound `(n − 1)² + 1` on the exponent of a primitive pattern.
pub fn wielandt_exponent(n: usize) -> u64 {
    let n = n as u64;
    if n == 0 {
        1
    } else {
        (n - 1) * (n - 1) + 1
    }
}

pub fn is_primitive(b: &BoolMatrix) -> bool {
    b.n() > 0 && bool_pow_reaches_all(b, wielandt_exponent(b.n()))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JssVerdict {
    pub verdict: bool,
    pub j_partition: Option<JPartition>,
}

/// Decides whether `a` is diagonally ±1-similar to a primitive nonnegative
/// matrix, using the J found by non-strict sign-symmetry as the witness.
pub fn is_jss_primitive(a: &Matrix, tau: f64) -> Result<JssVerdict> {
    let scale = a.max_abs();
    is_jss_primitive_with_scale(a, tau, if scale > 0.0 { scale } else { 1.0 })
}

pub(crate) fn is_jss_primitive_with_scale(a: &Matrix, tau: f64, scale: f64) -> Result<JssVerdict> {
    let pattern = crate::sign::sign_pattern_with_scale(a, tau, scale);
    jss_primitive_from_pattern(a, &pattern, tau * scale)
}

pub(crate) fn jss_primitive_from_pattern(
    a: &Matrix,
    pattern: &SignPattern,
    cutoff: f64,
) -> Result<JssVerdict> {
    let Some(j) = find_j(pattern) else {
        return Ok(JssVerdict {
            verdict: false,
            j_partition: None,
        });
    };
    let b = apply_diag_similarity(a, &j)?;
    let n = b.n();
    for i in 0..n {
        for k in 0..n {
            if b[(i, k)] < -cutoff {
                return Err(Error::InvariantViolation(format!(
                    "entry ({}, {}) of D·A·D is {} below the zero tolerance {cutoff}",
                    i + 1,
                    k + 1,
                    b[(i, k)]
                )));
            }
        }
    }
    // negatives within tolerance are clamped to zero
    let support = BoolMatrix::from_fn(n, |i, k| b[(i, k)] > cutoff);
    Ok(JssVerdict {
        verdict: is_primitive(&support),
        j_partition: Some(j),
    })
}
