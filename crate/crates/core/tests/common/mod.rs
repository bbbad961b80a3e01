//! Fixtures and independent oracles shared by the integration suites.
#![allow(dead_code)]

use genosc_core::{BoolMatrix, Complex64, Matrix, Sign, SignPattern};
use rand::Rng;

pub fn example1() -> Matrix {
    Matrix::from_rows(&[[4.0, -6.8, 4.4], [-1.2, 6.3, -1.1], [1.8, -2.6, 3.4]]).unwrap()
}

pub const EXAMPLE1_COMPOUND2: [[f64; 3]; 3] = [
    [17.04, 0.88, -20.24],
    [1.84, 5.68, -11.68],
    [-8.22, -2.1, 18.56],
];
pub const EXAMPLE1_DET: f64 = 23.792;
pub const EXAMPLE1_EIGENVALUES: [f64; 3] = [9.69542, 3.24937, 0.755205];

pub fn example2() -> Matrix {
    Matrix::from_rows(&[
        [7.0, 5.2, 7.8, 18.6],
        [-6.9, 4.4, 5.3, 37.5],
        [2.1, 4.0, 5.6, 20.8],
        [-9.0, 1.8, -2.4, 17.4],
    ])
    .unwrap()
}

pub const EXAMPLE2_COMPOUND2: [[f64; 6]; 6] = [
    [66.68, 90.92, 390.84, -6.76, 113.16, 193.92],
    [17.08, 22.82, 106.54, -2.08, 33.76, 58.08],
    [59.4, 53.4, 289.2, -26.52, 57.0, 180.36],
    [-36.84, -49.77, -222.27, 3.44, -58.48, -99.76],
    [27.18, 64.26, 217.44, -20.1, 9.06, 182.22],
    [39.78, 45.36, 223.74, -19.68, 32.16, 147.36],
];
pub const EXAMPLE2_DET: f64 = 278.964;
pub const EXAMPLE2_EIGENVALUES: [(f64, f64); 4] = [
    (17.813, 16.2621),
    (17.813, -16.2621),
    (-0.613045, 0.322013),
    (-0.613045, -0.322013),
];

pub fn example3() -> Matrix {
    Matrix::from_rows(&[
        [1.0, 8.0, 3.0, 0.4],
        [5.7, 7.4, 8.7, 9.5],
        [1.5, 9.7, 2.5, 6.0],
        [4.0, 8.6, 9.9, 2.2],
    ])
    .unwrap()
}

pub const EXAMPLE3_COMPOUND3: [[f64; 4]; 4] = [
    [57.08, -189.674, -30.92, 344.494],
    [-116.34, 146.028, 10.122, -403.644],
    [-41.97, 124.98, 10.14, -310.608],
    [163.601, -265.352, -81.065, 572.437],
];
pub const EXAMPLE3_EIGENVALUES: [(f64, f64); 4] = [
    (23.8704, 0.0),
    (-5.58952, 2.36837),
    (-5.58952, -2.36837),
    (0.408632, 0.0),
];

pub fn uniform_matrix(n: usize, rng: &mut impl Rng) -> Matrix {
    Matrix::from_fn(n, |_, _| rng.random_range(-1.0..1.0))
}

pub fn to_nalgebra(a: &Matrix) -> nalgebra::DMatrix<f64> {
    nalgebra::DMatrix::from_row_slice(a.n(), a.n(), a.as_slice())
}

/// Determinant through nalgebra's LU, independent of this crate.
pub fn reference_det(a: &Matrix) -> f64 {
    to_nalgebra(a).determinant()
}

/// Product of Euclidean row norms; bounds |det| from above.
pub fn hadamard_bound(a: &Matrix) -> f64 {
    a.rows()
        .map(|r| r.iter().map(|x| x * x).sum::<f64>().sqrt())
        .product()
}

/// Every flag vector J (true = in J) satisfying the sign constraints.
pub fn brute_force_j(p: &SignPattern) -> Vec<Vec<bool>> {
    let n = p.n();
    (0..1u32 << n)
        .map(|mask| (0..n).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|f| {
            (0..n).all(|i| {
                (0..n).all(|k| match p.get(i, k) {
                    Sign::Pos => f[i] == f[k],
                    Sign::Neg => f[i] != f[k],
                    Sign::Zero => true,
                })
            })
        })
        .collect()
}

pub fn pattern_from_code(n: usize, mut code: usize) -> SignPattern {
    const ALL: [Sign; 3] = [Sign::Neg, Sign::Zero, Sign::Pos];
    let signs = (0..n * n)
        .map(|_| {
            let s = ALL[code % 3];
            code /= 3;
            s
        })
        .collect();
    SignPattern::from_signs(n, signs).unwrap()
}

pub fn random_pattern(n: usize, zero_prob: f64, rng: &mut impl Rng) -> SignPattern {
    let signs = (0..n * n)
        .map(|_| {
            if rng.random_bool(zero_prob) {
                Sign::Zero
            } else if rng.random_bool(0.5) {
                Sign::Pos
            } else {
                Sign::Neg
            }
        })
        .collect();
    SignPattern::from_signs(n, signs).unwrap()
}

pub fn random_bool_matrix(n: usize, density: f64, rng: &mut impl Rng) -> BoolMatrix {
    BoolMatrix::from_fn(n, |_, _| rng.random_bool(density))
}

/// Primitivity by sequential multiplication: some power up to the Wielandt
/// bound is full.
pub fn primitive_by_sequential_powers(b: &BoolMatrix) -> bool {
    let n = b.n();
    let bound = (n - 1) * (n - 1) + 1;
    let mut p = b.clone();
    for _ in 1..bound {
        if p.is_full() {
            return true;
        }
        p = p.bool_mul(b);
    }
    p.is_full()
}

/// Primitivity by the classical characterization: strongly connected and the
/// gcd of all simple cycle lengths is 1.
pub fn primitive_by_cycle_gcd(b: &BoolMatrix) -> bool {
    let n = b.n();
    let reach_all = |from: usize| {
        let mut seen = vec![false; n];
        let mut stack = vec![from];
        seen[from] = true;
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if b.get(u, v) && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    };
    if !(0..n).all(reach_all) {
        return false;
    }
    let mut g = 0;
    for start in 0..n {
        // simple cycles whose smallest vertex is `start`
        let mut on_path = vec![false; n];
        cycle_lengths(b, start, start, 1, &mut on_path, &mut g);
    }
    g == 1
}

fn cycle_lengths(b: &BoolMatrix, start: usize, u: usize, len: usize, on_path: &mut [bool], g: &mut usize) {
    if *g == 1 {
        return;
    }
    on_path[u] = true;
    for v in start..b.n() {
        if !b.get(u, v) {
            continue;
        }
        if v == start {
            *g = gcd(*g, len);
        } else if !on_path[v] {
            cycle_lengths(b, start, v, len + 1, on_path, g);
        }
    }
    on_path[u] = false;
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
