//! Sign patterns and (strict) J-sign-symmetry.
//!
//! A matrix is J-sign-symmetric when some ±1 diagonal `D` makes `D·A·D`
//! entrywise nonnegative. Finding `J` is a 2-coloring problem on the index
//! graph: a positive entry `(i, k)` puts `i` and `k` on the same side, a
//! negative entry puts them on opposite sides.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::matrix::{write_index_set, Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignPattern {
    n: usize,
    signs: Vec<Sign>,
}

impl SignPattern {
    pub fn from_signs(n: usize, signs: Vec<Sign>) -> Result<Self> {
        if signs.len() != n * n {
            return Err(invalid(format!(
                "expected {} signs, got {}",
                n * n,
                signs.len()
            )));
        }
        Ok(Self { n, signs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Sign at 0-based position `(i, k)`.
    #[inline]
    pub fn get(&self, i: usize, k: usize) -> Sign {
        self.signs[i * self.n + k]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn has_zero(&self) -> bool {
        self.signs.contains(&Sign::Zero)
    }
}

/// Entrywise signs of `a`; an entry is ZERO when `|a_ik| ≤ τ·max|a|`.
pub fn sign_pattern(a: &Matrix, tau: f64) -> SignPattern {
    let scale = a.max_abs();
    sign_pattern_with_scale(a, tau, if scale > 0.0 { scale } else { 1.0 })
}

/// Entrywise signs of `a` with an explicit reference magnitude.
pub fn sign_pattern_with_scale(a: &Matrix, tau: f64, scale: f64) -> SignPattern {
    let cutoff = tau * scale;
    let signs = a
        .as_slice()
        .iter()
        .map(|&x| {
            if x.abs() <= cutoff {
                Sign::Zero
            } else if x > 0.0 {
                Sign::Pos
            } else {
                Sign::Neg
            }
        })
        .collect();
    SignPattern { n: a.n(), signs }
}

/// A subset `J ⊆ {1, …, n}` together with its ±1 similarity diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct JPartition {
    n: usize,
    members: Vec<usize>,
    complement: Vec<usize>,
    diag_signs: Vec<i8>,
}

impl JPartition {
    /// `members` are 1-based; order and duplicates are normalised away.
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut in_j = vec![false; n];
        for m in members {
            if m < 1 || m > n {
                return Err(invalid(format!("index {m} outside [1, {n}]")));
            }
            in_j[m - 1] = true;
        }
        Ok(Self::from_flags(&in_j))
    }

    fn from_flags(in_j: &[bool]) -> Self {
        let n = in_j.len();
        let members = (1..=n).filter(|&i| in_j[i - 1]).collect();
        let complement = (1..=n).filter(|&i| !in_j[i - 1]).collect();
        let diag_signs = in_j.iter().map(|&f| if f { -1 } else { 1 }).collect();
        Self {
            n,
            members,
            complement,
            diag_signs,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_flags(&vec![false; n])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    pub fn diag_signs(&self) -> &[i8] {
        &self.diag_signs
    }

    pub fn contains(&self, i: usize) -> bool {
        (1..=self.n).contains(&i) && self.diag_signs[i - 1] < 0
    }

    /// The same bipartition with the roles of `J` and its complement swapped.
    pub fn flipped(&self) -> Self {
        let flags: Vec<bool> = self.diag_signs.iter().map(|&s| s > 0).collect();
        Self::from_flags(&flags)
    }

    /// True when `side` (1-based, any order) is one of the two blocks.
    pub fn splits_off(&self, side: &[usize]) -> bool {
        let mut side = side.to_vec();
        side.sort_unstable();
        side.dedup();
        side == self.members || side == self.complement
    }

    /// Unordered bipartition equality.
    pub fn same_bipartition(&self, other: &JPartition) -> bool {
        self.n == other.n && (self == other || *self == other.flipped())
    }
}

impl fmt::Display for JPartition {
    /// Renders as `outside | J`, e.g. `{1,3} | {2}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_index_set(f, &self.complement)?;
        f.write_str(" | ")?;
        write_index_set(f, &self.members)
    }
}

/// Strict J-sign-symmetry: no ZERO entries, and `a_ik < 0` exactly when `i`
/// and `k` lie on different sides. Vertex 1 is always placed outside `J`.
pub fn find_j_strict(p: &SignPattern) -> Option<JPartition> {
    if p.has_zero() {
        return None;
    }
    two_color(p)
}

/// Non-strict J-sign-symmetry. ZERO entries impose nothing, so each connected
/// component of the constraint graph is colored independently with its
/// smallest vertex outside `J`.
pub fn find_j(p: &SignPattern) -> Option<JPartition> {
    two_color(p)
}

fn two_color(p: &SignPattern) -> Option<JPartition> {
    let n = p.n();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for v in 0..n {
                let s = match (p.get(u, v), p.get(v, u)) {
                    (Sign::Zero, s) | (s, _) => s,
                };
                if s == Sign::Zero {
                    continue;
                }
                let want = cu ^ (s == Sign::Neg);
                match color[v] {
                    None => {
                        color[v] = Some(want);
                        queue.push_back(v);
                    }
                    Some(c) if c != want => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let flags: Vec<bool> = color.into_iter().map(Option::unwrap).collect();
    // the BFS only looked at one direction of each pair; check every entry
    for i in 0..n {
        for k in 0..n {
            let split = flags[i] != flags[k];
            match p.get(i, k) {
                Sign::Pos if split => return None,
                Sign::Neg if !split => return None,
                _ => {}
            }
        }
    }
    Some(JPartition::from_flags(&flags))
}

/// `D·A·D` with `D = diag(diag_signs)`.
pub fn apply_diag_similarity(a: &Matrix, j: &JPartition) -> Result<Matrix> {
    if a.n() != j.n() {
        return Err(invalid(format!(
            "matrix is {0}x{0} but partition is over {1} indices",
            a.n(),
            j.n()
        )));
    }
    let s = j.diag_signs();
    Ok(Matrix::from_fn(a.n(), |i, k| {
        if s[i] == s[k] {
            a[(i, k)]
        } else {
            -a[(i, k)]
        }
    }))
}
