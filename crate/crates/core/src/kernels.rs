// Copyright 2026 The boson-sampler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Matrix functions over [`ComplexMatrix`]: permanent, determinant, the
//! 3x3 mixed-symmetry immanant, and index-selection helpers.
//!
//! The permanent uses Ryser's inclusion-exclusion formula walked in Gray-code
//! order, so each step updates the row sums with a single column, for
//! `O(2^n n)` work. Above [`PARALLEL_THRESHOLD`] the Gray-code sequence is
//! split into contiguous chunks evaluated on the rayon pool.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// Order from which [`permanent`] splits the Gray-code walk across threads.
pub const PARALLEL_THRESHOLD: usize = 14;

const PARALLEL_CHUNKS: u64 = 512;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Permanent of a square matrix.
pub fn permanent(m: &ComplexMatrix) -> Result<Complex64> {
    let n = m.require_square("permanent")?;
    Ok(match n {
        0 => ONE,
        1 => m[(0, 0)],
        2 => m[(0, 0)] * m[(1, 1)] + m[(0, 1)] * m[(1, 0)],
        3 => {
            let [a, b, c, d, e, f, g, h, i] = entries3(m);
            a * e * i + b * f * g + c * d * h + c * e * g + b * d * i + a * f * h
        }
        _ if n < PARALLEL_THRESHOLD => ryser_serial(m),
        _ => ryser_parallel(m),
    })
}

/// Ryser/Gray-code permanent on the calling thread, for any order.
pub fn permanent_ryser(m: &ComplexMatrix) -> Result<Complex64> {
    m.require_square("permanent")?;
    Ok(ryser_serial(m))
}

fn ryser_serial(m: &ComplexMatrix) -> Complex64 {
    let n = m.rows();
    if n == 0 {
        return ONE;
    }
    let cols = m.transpose();
    let total = 1u64 << n;
    finish_ryser(n, ryser_chunk(&cols, 1, total))
}

fn ryser_parallel(m: &ComplexMatrix) -> Complex64 {
    let n = m.rows();
    let cols = m.transpose();
    let total = 1u64 << n;
    // Fixed chunking and an in-order sum keep the result bit-identical
    // regardless of thread count or scheduling.
    let chunks = PARALLEL_CHUNKS.min(total - 1);
    let step = (total - 1).div_ceil(chunks);
    let partial: Vec<Complex64> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = 1 + c * step;
            let end = (start + step).min(total);
            if start >= end {
                ZERO
            } else {
                ryser_chunk(&cols, start, end)
            }
        })
        .collect();
    finish_ryser(n, partial.into_iter().sum())
}

#[inline]
fn finish_ryser(n: usize, sum: Complex64) -> Complex64 {
    if n % 2 == 1 {
        -sum
    } else {
        sum
    }
}

/// Sum of `(-1)^|S| prod_i rowsum_i(S)` over Gray codes `g(k)`, `k` in `[start, end)`.
/// `cols` is the transposed matrix so a column is a contiguous row.
fn ryser_chunk(cols: &ComplexMatrix, start: u64, end: u64) -> Complex64 {
    let n = cols.rows();
    let mut row_sums = vec![ZERO; n];
    let mut gray = (start - 1) ^ ((start - 1) >> 1);
    for j in 0..n {
        if gray >> j & 1 == 1 {
            for (s, &a) in row_sums.iter_mut().zip(cols.row(j)) {
                *s += a;
            }
        }
    }
    let mut acc = ZERO;
    for k in start..end {
        let j = k.trailing_zeros() as usize;
        let bit = 1u64 << j;
        let col = cols.row(j);
        if gray & bit == 0 {
            for (s, &a) in row_sums.iter_mut().zip(col) {
                *s += a;
            }
        } else {
            for (s, &a) in row_sums.iter_mut().zip(col) {
                *s -= a;
            }
        }
        gray ^= bit;
        let prod = row_sums.iter().fold(ONE, |p, &s| p * s);
        if gray.count_ones() % 2 == 1 {
            acc -= prod;
        } else {
            acc += prod;
        }
    }
    acc
}

/// Determinant of a square matrix. Explicit expansion up to 3x3, LU with
/// partial pivoting beyond.
pub fn determinant(m: &ComplexMatrix) -> Result<Complex64> {
    let n = m.require_square("determinant")?;
    Ok(match n {
        0 => ONE,
        1 => m[(0, 0)],
        2 => m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)],
        3 => {
            let [a, b, c, d, e, f, g, h, i] = entries3(m);
            a * e * i + b * f * g + c * d * h - c * e * g - b * d * i - a * f * h
        }
        _ => lu_determinant(m),
    })
}

fn lu_determinant(m: &ComplexMatrix) -> Complex64 {
    let n = m.rows();
    let mut a: Vec<Complex64> = m.as_slice().to_vec();
    let mut det = ONE;
    for k in 0..n {
        let pivot = (k..n)
            .max_by(|&x, &y| a[x * n + k].norm().total_cmp(&a[y * n + k].norm()))
            .unwrap_or(k);
        if a[pivot * n + k] == ZERO {
            return ZERO;
        }
        if pivot != k {
            for j in 0..n {
                a.swap(k * n + j, pivot * n + j);
            }
            det = -det;
        }
        let p = a[k * n + k];
        det *= p;
        for i in k + 1..n {
            let factor = a[i * n + k] / p;
            for j in k + 1..n {
                let v = a[k * n + j];
                a[i * n + j] -= factor * v;
            }
        }
    }
    det
}

/// Immanant of a 3x3 matrix for the two-dimensional irreducible character
/// of S3: `2aei - bfg - cdh`.
pub fn immanant3(m: &ComplexMatrix) -> Result<Complex64> {
    if m.rows() != 3 || m.cols() != 3 {
        return Err(Error::dim(format!(
            "immanant3 needs a 3x3 matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let [a, b, c, d, e, f, g, h, i] = entries3(m);
    Ok(2.0 * a * e * i - b * f * g - c * d * h)
}

#[inline]
fn entries3(m: &ComplexMatrix) -> [Complex64; 9] {
    let s = m.as_slice();
    [s[0], s[1], s[2], s[3], s[4], s[5], s[6], s[7], s[8]]
}

/// Entries at the given rows and columns, in the order listed.
pub fn submatrix(m: &ComplexMatrix, rows: &[usize], cols: &[usize]) -> Result<ComplexMatrix> {
    check_indices(rows, m.rows(), "row")?;
    check_indices(cols, m.cols(), "column")?;
    let data = rows
        .iter()
        .flat_map(|&i| cols.iter().map(move |&j| m[(i, j)]))
        .collect();
    ComplexMatrix::new(rows.len(), cols.len(), data)
}

/// Row `i` of the result is row `order[i]` of `m`.
pub fn permute_rows(m: &ComplexMatrix, order: &[usize]) -> Result<ComplexMatrix> {
    if order.len() != m.rows() {
        return Err(Error::index(format!(
            "row order has {} entries for {} rows",
            order.len(),
            m.rows()
        )));
    }
    let all: Vec<usize> = (0..m.cols()).collect();
    submatrix(m, order, &all)
}

fn check_indices(idx: &[usize], bound: usize, what: &str) -> Result<()> {
    let mut seen = vec![false; bound];
    for &i in idx {
        if i >= bound {
            return Err(Error::index(format!("{what} index {i} out of range 0..{bound}")));
        }
        if std::mem::replace(&mut seen[i], true) {
            return Err(Error::index(format!("duplicate {what} index {i}")));
        }
    }
    Ok(())
}
