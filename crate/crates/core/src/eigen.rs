//! Eigenvalues of a dense real nonsymmetric matrix.
//!
//! Balancing, Householder reduction to upper Hessenberg form, then the
//! Francis double-shift QR iteration (the EISPACK `balanc`/`orthes`/`hqr`
//! sequence). Only eigenvalues are produced.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::Matrix;

const RADIX: f64 = 2.0;
/// Iterations allowed for a single eigenvalue (or pair) to deflate.
const MAX_ITER_PER_ROOT: usize = 200;

/// Working copy of the matrix as row vectors.
type Work = Vec<Vec<f64>>;

pub(crate) fn real_eigenvalues(a: &Matrix) -> Result<Vec<Complex64>> {
    let n = a.n();
    let mut h: Work = a.to_rows();
    if n == 1 {
        return Ok(vec![Complex64::new(h[0][0], 0.0)]);
    }
    balance(&mut h);
    hessenberg(&mut h);
    hqr(h)
}

/// Diagonal similarity by powers of two that roughly equalises row and
/// column norms.
fn balance(h: &mut Work) {
    let n = h.len();
    let sqrdx = RADIX * RADIX;
    loop {
        let mut done = true;
        for i in 0..n {
            let mut c = 0.0;
            let mut r = 0.0;
            for j in 0..n {
                if j != i {
                    c += h[j][i].abs();
                    r += h[i][j].abs();
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            let mut g = r / RADIX;
            while c < g {
                f *= RADIX;
                c *= sqrdx;
            }
            g = r * RADIX;
            while c > g {
                f /= RADIX;
                c /= sqrdx;
            }
            if (c + r) / f < 0.95 * s {
                done = false;
                let g = 1.0 / f;
                for v in h[i].iter_mut() {
                    *v *= g;
                }
                for row in h.iter_mut() {
                    row[i] *= f;
                }
            }
        }
        if done {
            break;
        }
    }
}

/// Orthogonal reduction to upper Hessenberg form.
fn hessenberg(h: &mut Work) {
    let n = h.len();
    let high = n - 1;
    let mut ort = vec![0.0; n];
    for m in 1..high {
        let scale: f64 = (m..=high).map(|i| h[i][m - 1].abs()).sum();
        if scale == 0.0 {
            continue;
        }
        let mut hh = 0.0;
        for i in (m..=high).rev() {
            ort[i] = h[i][m - 1] / scale;
            hh += ort[i] * ort[i];
        }
        let mut g = hh.sqrt();
        if ort[m] > 0.0 {
            g = -g;
        }
        hh -= ort[m] * g;
        ort[m] -= g;

        for j in m..n {
            let f = (m..=high).rev().map(|i| ort[i] * h[i][j]).sum::<f64>() / hh;
            for i in m..=high {
                h[i][j] -= f * ort[i];
            }
        }
        for row in h.iter_mut() {
            let f = (m..=high).rev().map(|j| ort[j] * row[j]).sum::<f64>() / hh;
            for j in m..=high {
                row[j] -= f * ort[j];
            }
        }
        ort[m] *= scale;
        h[m][m - 1] = scale * g;
    }
    for (i, row) in h.iter_mut().enumerate() {
        for v in row.iter_mut().take(i.saturating_sub(1)) {
            *v = 0.0;
        }
    }
}

/// Double-shift QR on an upper Hessenberg matrix.
fn hqr(mut h: Work) -> Result<Vec<Complex64>> {
    let nn = h.len();
    let eps = f64::EPSILON;
    let mut re = vec![0.0; nn];
    let mut im = vec![0.0; nn];
    let mut exshift = 0.0;
    let (mut p, mut q, mut r, mut s, mut z): (f64, f64, f64, f64, f64);
    let (mut w, mut x, mut y);

    let mut norm = 0.0;
    for (i, row) in h.iter().enumerate() {
        for v in &row[i.saturating_sub(1)..] {
            norm += v.abs();
        }
    }

    if norm == 0.0 {
        return Ok(vec![Complex64::new(0.0, 0.0); nn]);
    }

    let mut n = nn as isize - 1;
    let mut iter = 0;
    while n >= 0 {
        let nu = n as usize;
        // look for a single small subdiagonal element
        let mut l = nu;
        while l > 0 {
            s = h[l - 1][l - 1].abs() + h[l][l].abs();
            if s == 0.0 {
                s = norm;
            }
            if h[l][l - 1].abs() < eps * s {
                break;
            }
            l -= 1;
        }

        if l == nu {
            re[nu] = h[nu][nu] + exshift;
            im[nu] = 0.0;
            n -= 1;
            iter = 0;
        } else if l + 1 == nu {
            w = h[nu][nu - 1] * h[nu - 1][nu];
            p = (h[nu - 1][nu - 1] - h[nu][nu]) / 2.0;
            q = p * p + w;
            z = q.abs().sqrt();
            x = h[nu][nu] + exshift;
            if q >= 0.0 {
                z = if p >= 0.0 { p + z } else { p - z };
                re[nu - 1] = x + z;
                re[nu] = if z != 0.0 { x - w / z } else { x + z };
                im[nu - 1] = 0.0;
                im[nu] = 0.0;
            } else {
                re[nu - 1] = x + p;
                re[nu] = x + p;
                im[nu - 1] = z;
                im[nu] = -z;
            }
            n -= 2;
            iter = 0;
        } else {
            x = h[nu][nu];
            y = h[nu - 1][nu - 1];
            w = h[nu][nu - 1] * h[nu - 1][nu];

            if iter > 0 && iter % 10 == 0 && iter % 30 != 0 {
                // ad hoc shift
                exshift += x;
                for i in 0..=nu {
                    h[i][i] -= x;
                }
                s = h[nu][nu - 1].abs() + h[nu - 1][nu - 2].abs();
                x = 0.75 * s;
                y = x;
                w = -0.4375 * s * s;
            }
            if iter > 0 && iter % 30 == 0 {
                s = (y - x) / 2.0;
                s = s * s + w;
                if s > 0.0 {
                    s = s.sqrt();
                    if y < x {
                        s = -s;
                    }
                    s = x - w / ((y - x) / 2.0 + s);
                    for i in 0..=nu {
                        h[i][i] -= s;
                    }
                    exshift += s;
                    x = 0.964;
                    y = x;
                    w = x;
                }
            }
            iter += 1;
            if iter > MAX_ITER_PER_ROOT {
                return Err(Error::NumericFailure(format!(
                    "QR iteration did not converge for eigenvalue {} after {MAX_ITER_PER_ROOT} iterations",
                    nu + 1
                )));
            }

            // look for two consecutive small subdiagonal elements
            let mut m = nu - 2;
            loop {
                z = h[m][m];
                r = x - z;
                s = y - z;
                p = (r * s - w) / h[m + 1][m] + h[m][m + 1];
                q = h[m + 1][m + 1] - z - r - s;
                r = h[m + 2][m + 1];
                s = p.abs() + q.abs() + r.abs();
                p /= s;
                q /= s;
                r /= s;
                if m == l {
                    break;
                }
                if h[m][m - 1].abs() * (q.abs() + r.abs())
                    < eps * (p.abs() * (h[m - 1][m - 1].abs() + z.abs() + h[m + 1][m + 1].abs()))
                {
                    break;
                }
                m -= 1;
            }
            for i in m + 2..=nu {
                h[i][i - 2] = 0.0;
                if i > m + 2 {
                    h[i][i - 3] = 0.0;
                }
            }

            // double QR step on rows l..=n, columns m..=n
            for k in m..nu {
                let notlast = k != nu - 1;
                if k != m {
                    p = h[k][k - 1];
                    q = h[k + 1][k - 1];
                    r = if notlast { h[k + 2][k - 1] } else { 0.0 };
                    x = p.abs() + q.abs() + r.abs();
                    if x == 0.0 {
                        continue;
                    }
                    p /= x;
                    q /= x;
                    r /= x;
                }
                s = (p * p + q * q + r * r).sqrt();
                if p < 0.0 {
                    s = -s;
                }
                if s == 0.0 {
                    continue;
                }
                if k != m {
                    h[k][k - 1] = -s * x;
                } else if l != m {
                    h[k][k - 1] = -h[k][k - 1];
                }
                p += s;
                x = p / s;
                y = q / s;
                z = r / s;
                q /= p;
                r /= p;

                for j in k..nn {
                    p = h[k][j] + q * h[k + 1][j];
                    if notlast {
                        p += r * h[k + 2][j];
                        h[k + 2][j] -= p * z;
                    }
                    h[k][j] -= p * x;
                    h[k + 1][j] -= p * y;
                }
                for row in h.iter_mut().take(nu.min(k + 3) + 1) {
                    p = x * row[k] + y * row[k + 1];
                    if notlast {
                        p += z * row[k + 2];
                        row[k + 2] -= p * r;
                    }
                    row[k] -= p;
                    row[k + 1] -= p * q;
                }
            }
        }
    }

    if re.iter().chain(&im).any(|v| !v.is_finite()) {
        return Err(Error::NumericFailure(
            "QR iteration produced non-finite eigenvalues".into(),
        ));
    }
    Ok(re
        .into_iter()
        .zip(im)
        .map(|(a, b)| Complex64::new(a, b))
        .collect())
}
