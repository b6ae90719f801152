//! Lattice invariants of a matrix `g` over the valuation ring.
//!
//! For `K = G ∩ GL_n(O)` we have `gK = hK` exactly when the column lattices `gOⁿ` and
//! `hOⁿ` coincide, so the reduced column Hermite form of `g` is a canonical key for the
//! left coset `gK`. The Hermite diagonal gives the Iwasawa shape and full pivoting gives
//! the elementary divisors (the Cartan type).

use crate::error::PadicError;
use crate::matrix::LocalMatrix;
use crate::residue::{Res, ResMatrix, Ring};

/// The canonical form of the lattice `gOⁿ` (and of the `G_m` valuation).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetKey {
    /// `G_m` valuation.
    pub gm: i64,
    /// `s` with `p^s g` integral and primitive.
    pub shift: i32,
    /// Valuations of the Hermite diagonal of `p^s g`.
    pub diag: Vec<u32>,
    /// Entries strictly above the diagonal, row-major, reduced modulo their row's pivot.
    pub upper: Vec<Res>,
}

impl CosetKey {
    /// The Hermite diagonal of `g` itself: `diag[i] − shift`.
    pub fn diagonal(&self) -> Vec<i64> {
        self.diag.iter().map(|&v| v as i64 - self.shift as i64).collect()
    }

    /// The upper triangular Hermite representative of the coset, as an integral residue
    /// matrix of `p^shift g`.
    pub fn hermite_matrix(&self, ring: &Ring) -> ResMatrix {
        let n = self.diag.len();
        let mut m = vec![vec![ring.zero(); n]; n];
        let mut it = self.upper.iter();
        for i in 0..n {
            m[i][i] = ring.pi_pow(self.diag[i]);
            for j in (i + 1)..n {
                m[i][j] = *it.next().expect("upper entries");
            }
        }
        m
    }
}

fn col_axpy(ring: &Ring, m: &mut ResMatrix, dst: usize, f: Res, src: usize) {
    for row in m.iter_mut() {
        let t = ring.mul(f, row[src]);
        row[dst] = ring.sub(row[dst], t);
    }
}

fn swap_cols(m: &mut ResMatrix, a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// Column Hermite form of an integral residue matrix: upper triangular, pivots exactly
/// `p^{v_i}`, entries right of a pivot reduced modulo that pivot.
pub fn hermite(ring: &Ring, mut m: ResMatrix) -> Result<(Vec<u32>, ResMatrix), PadicError> {
    let n = m.len();
    let prec = ring.precision();
    let mut vals = vec![0u32; n];
    for i in (0..n).rev() {
        let (j, v) = (0..=i)
            .map(|j| (j, ring.val(m[i][j])))
            .min_by_key(|&(j, v)| (v, std::cmp::Reverse(j)))
            .unwrap();
        if v >= prec {
            return Err(PadicError::Singular);
        }
        swap_cols(&mut m, i, j);
        let unit = ring.div_pow(m[i][i], v);
        let uinv = ring.inv(unit);
        for row in m.iter_mut() {
            row[i] = ring.mul(row[i], uinv);
        }
        for j in 0..i {
            let x = m[i][j];
            if x != ring.zero() {
                let f = ring.div_pow(x, v);
                col_axpy(ring, &mut m, j, f, i);
            }
        }
        m[i][i] = ring.pi_pow(v);
        vals[i] = v;
    }
    // The computation describes L + p^M Oⁿ; it equals L once every elementary divisor,
    // hence their sum D, is below M.
    let d: u32 = vals.iter().sum();
    if d >= prec {
        return Err(PadicError::Precision {
            needed: d + 1,
            available: prec,
        });
    }
    for i in (0..n).rev() {
        for j in (i + 1)..n {
            let x = m[i][j];
            let r = ring.reduce_mod(x, vals[i]);
            let f = ring.div_pow(ring.sub(x, r), vals[i]);
            col_axpy(ring, &mut m, j, f, i);
            m[i][j] = r;
        }
    }
    // Entries below the diagonal are exactly zero; everything above row i in the columns
    // we touched is reduced in later (smaller i) passes, and all are canonical now.
    for (i, row) in m.iter_mut().enumerate() {
        for x in row.iter_mut().take(i) {
            *x = ring.zero();
        }
    }
    Ok((vals, m))
}

/// The canonical key of the coset `gK` from an integral residue matrix of `p^shift g`.
pub fn key_of_res(ring: &Ring, m: ResMatrix, shift: i32, gm: i64) -> Result<CosetKey, PadicError> {
    let (diag, h) = hermite(ring, m)?;
    let n = diag.len();
    let upper = (0..n).flat_map(|i| h[i][(i + 1)..n].to_vec()).collect();
    Ok(CosetKey { gm, shift, diag, upper })
}

/// The shift `s = −min valuation` making `p^s g` integral and primitive.
pub fn primitive_shift(g: &LocalMatrix) -> Result<i32, PadicError> {
    g.min_valuation().map(|v| -v).ok_or(PadicError::Singular)
}

/// The canonical key of `gK` for `K = G ∩ GL_n(O)`.
pub fn coset_key(ring: &Ring, g: &LocalMatrix) -> Result<CosetKey, PadicError> {
    let s = primitive_shift(g)?;
    key_of_res(ring, g.to_res(ring, s), s, g.gm)
}

/// Elementary-divisor valuations of `g` (sorted decreasingly).
pub fn elementary_divisors(ring: &Ring, g: &LocalMatrix) -> Result<Vec<i64>, PadicError> {
    let s = primitive_shift(g)?;
    let mut m = g.to_res(ring, s);
    let n = m.len();
    let prec = ring.precision();
    let mut vals = Vec::with_capacity(n);
    for k in 0..n {
        let mut best = (prec, k, k);
        for i in k..n {
            for j in k..n {
                let v = ring.val(m[i][j]);
                if v < best.0 {
                    best = (v, i, j);
                }
            }
        }
        let (v, bi, bj) = best;
        if v >= prec {
            return Err(PadicError::Singular);
        }
        m.swap(k, bi);
        swap_cols(&mut m, k, bj);
        let uinv = ring.inv(ring.div_pow(m[k][k], v));
        for row in m.iter_mut() {
            row[k] = ring.mul(row[k], uinv);
        }
        for j in (k + 1)..n {
            let f = ring.div_pow(m[k][j], v);
            col_axpy(ring, &mut m, j, f, k);
        }
        for i in (k + 1)..n {
            let f = ring.div_pow(m[i][k], v);
            let pivot_row = m[k].clone();
            for (x, y) in m[i].iter_mut().zip(pivot_row) {
                *x = ring.sub(*x, ring.mul(f, y));
            }
        }
        vals.push(v as i64 - s as i64);
    }
    let d: i64 = vals.iter().map(|v| v + s as i64).sum();
    if d >= prec as i64 {
        return Err(PadicError::Precision {
            needed: (d + 1) as u32,
            available: prec,
        });
    }
    vals.sort_unstable_by(|a, b| b.cmp(a));
    Ok(vals)
}
