//! Exact ranks and reduced simplicial homology.
//!
//! Over the rationals, ranks come from fraction-free elimination on integer
//! rows (content-normalized after every step). Arithmetic starts in `i128`
//! and restarts in arbitrary precision if an intermediate value overflows.
//! Over a prime field the same elimination runs modulo `p`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::ring::FieldSpec;
use crate::varset::VarSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, i64)>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize, mut entries: Vec<(usize, usize, i64)>) -> Result<Self> {
        entries.retain(|e| e.2 != 0);
        entries.sort_by_key(|e| (e.0, e.1));
        for w in entries.windows(2) {
            if (w[0].0, w[0].1) == (w[1].0, w[1].1) {
                return Err(Error::Malformed(format!("duplicate entry at ({}, {})", w[0].0, w[0].1)));
            }
        }
        if let Some(e) = entries.iter().find(|e| e.0 >= rows || e.1 >= cols) {
            return Err(Error::Malformed(format!("entry ({}, {}) outside a {rows}x{cols} matrix", e.0, e.1)));
        }
        Ok(SparseMatrix { rows, cols, entries })
    }

    pub fn identity(k: usize) -> Self {
        SparseMatrix { rows: k, cols: k, entries: (0..k).map(|i| (i, i, 1)).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[(usize, usize, i64)] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries
            .binary_search_by_key(&(r, c), |e| (e.0, e.1))
            .map(|k| self.entries[k].2)
            .unwrap_or(0)
    }

    fn sparse_rows(&self) -> Vec<Vec<(usize, i64)>> {
        let mut rows = vec![Vec::new(); self.rows];
        for &(r, c, v) in &self.entries {
            rows[r].push((c, v));
        }
        rows
    }

    pub fn rank(&self, field: FieldSpec) -> usize {
        rank_of_rows(self.sparse_rows(), field)
    }
}

/// Rank of the matrix whose rows are given as sorted `(column, value)` lists.
pub fn rank_of_rows(rows: Vec<Vec<(usize, i64)>>, field: FieldSpec) -> usize {
    match field {
        FieldSpec::Rationals => {
            let small: Vec<Vec<(usize, i128)>> =
                rows.iter().map(|r| r.iter().map(|&(c, v)| (c, v as i128)).collect()).collect();
            match eliminate::<i128>(small) {
                Some(r) => r,
                None => {
                    let big = rows.into_iter().map(|r| r.into_iter().map(|(c, v)| (c, BigInt::from(v))).collect());
                    eliminate::<BigInt>(big.collect()).expect("arbitrary precision never overflows")
                }
            }
        }
        FieldSpec::Prime(p) => rank_mod_p(rows, p),
    }
}

trait ExactInt: Clone + PartialEq {
    fn is_zero(&self) -> bool;
    /// `a*x - b*y`, or `None` on overflow.
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn scaled(a: &Self, x: &Self) -> Option<Self>;
    fn neg_scaled(a: &Self, x: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn is_one_abs(&self) -> bool;
}

impl ExactInt for i128 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn scaled(a: &Self, x: &Self) -> Option<Self> {
        a.checked_mul(*x)
    }
    fn neg_scaled(a: &Self, x: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_neg()
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_one_abs(&self) -> bool {
        self.abs() == 1
    }
}

impl ExactInt for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn scaled(a: &Self, x: &Self) -> Option<Self> {
        Some(a * x)
    }
    fn neg_scaled(a: &Self, x: &Self) -> Option<Self> {
        Some(-(a * x))
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_one_abs(&self) -> bool {
        self.abs() == BigInt::from(1)
    }
}

/// Row-by-row elimination; the pivot of a row is its first nonzero entry.
fn eliminate<T: ExactInt>(rows: Vec<Vec<(usize, T)>>) -> Option<usize> {
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::new();
    for mut row in rows {
        while let Some((c, _)) = row.first() {
            let c = *c;
            match pivots.get(&c) {
                None => {
                    pivots.insert(c, row);
                    break;
                }
                Some(piv) => {
                    row = combine(&piv[0].1, &row, &row[0].1, piv)?;
                    normalize(&mut row);
                }
            }
        }
    }
    Some(pivots.len())
}

/// `a*r - b*p` on sorted sparse rows.
fn combine<T: ExactInt>(a: &T, r: &[(usize, T)], b: &T, p: &[(usize, T)]) -> Option<Vec<(usize, T)>> {
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let ci = r.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cj = p.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        let (c, v) = if ci < cj {
            let v = T::scaled(a, &r[i].1)?;
            i += 1;
            (ci, v)
        } else if cj < ci {
            let v = T::neg_scaled(b, &p[j].1)?;
            j += 1;
            (cj, v)
        } else {
            let v = T::cross(a, &r[i].1, b, &p[j].1)?;
            i += 1;
            j += 1;
            (ci, v)
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    Some(out)
}

fn normalize<T: ExactInt>(row: &mut [(usize, T)]) {
    let Some(first) = row.first() else { return };
    let mut g = first.1.gcd(&first.1);
    for (_, v) in row.iter().skip(1) {
        if g.is_one_abs() {
            return;
        }
        g = g.gcd(v);
    }
    if !g.is_one_abs() && !g.is_zero() {
        for (_, v) in row.iter_mut() {
            *v = v.div_exact(&g);
        }
    }
}

fn rank_mod_p(rows: Vec<Vec<(usize, i64)>>, p: u64) -> usize {
    let p128 = p as u128;
    let reduce = |v: i64| -> u64 { (v as i128).rem_euclid(p as i128) as u64 };
    let inv = |a: u64| -> u64 { pow_mod(a, p - 2, p) };
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    for row in rows {
        let mut row: Vec<(usize, u64)> =
            row.into_iter().map(|(c, v)| (c, reduce(v))).filter(|e| e.1 != 0).collect();
        while let Some(&(c, lead)) = row.first() {
            match pivots.get(&c) {
                None => {
                    let s = inv(lead);
                    for e in &mut row {
                        e.1 = ((e.1 as u128 * s as u128) % p128) as u64;
                    }
                    pivots.insert(c, row);
                    break;
                }
                Some(piv) => {
                    // row -= lead * piv (piv is monic)
                    let mut out = Vec::with_capacity(row.len() + piv.len());
                    let (mut i, mut j) = (0, 0);
                    while i < row.len() || j < piv.len() {
                        let ci = row.get(i).map(|e| e.0).unwrap_or(usize::MAX);
                        let cj = piv.get(j).map(|e| e.0).unwrap_or(usize::MAX);
                        let (col, v) = if ci < cj {
                            i += 1;
                            (ci, row[i - 1].1)
                        } else {
                            let sub = ((lead as u128 * piv[j].1 as u128) % p128) as u64;
                            let base = if ci == cj {
                                i += 1;
                                row[i - 1].1
                            } else {
                                0
                            };
                            j += 1;
                            (cj, (base + p - sub) % p)
                        };
                        if v != 0 {
                            out.push((col, v));
                        }
                    }
                    row = out;
                }
            }
        }
    }
    pivots.len()
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc: u128 = 1;
    let m128 = m as u128;
    let mut base = (b % m) as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m128;
        }
        base = base * base % m128;
        e >>= 1;
    }
    b = acc as u64;
    b
}

/// Face lists and index maps used to assemble boundary matrices.
struct FaceIndex {
    by_size: Vec<Vec<VarSet>>,
    position: Vec<HashMap<VarSet, usize>>,
}

impl FaceIndex {
    fn new(cx: &SimplicialComplex) -> Self {
        let by_size = cx.faces_by_size();
        let position = by_size.iter().map(|g| g.iter().enumerate().map(|(k, &f)| (f, k)).collect()).collect();
        FaceIndex { by_size, position }
    }

    /// Columns of `∂_i` (one per `i`-face) as sparse rows over the `(i-1)`-faces.
    fn boundary_rows(&self, i: i64) -> Vec<Vec<(usize, i64)>> {
        let k = (i + 1) as usize;
        self.by_size[k]
            .iter()
            .map(|&face| {
                let mut row: Vec<(usize, i64)> = face
                    .iter()
                    .enumerate()
                    .map(|(pos, v)| {
                        let sign = if pos % 2 == 0 { 1 } else { -1 };
                        (self.position[k - 1][&face.without(v)], sign)
                    })
                    .collect();
                row.sort_by_key(|e| e.0);
                row
            })
            .collect()
    }
}

/// `∂_i : C_i → C_{i-1}` with rows indexed by `(i-1)`-faces and columns by
/// `i`-faces, both in canonical order; the empty face is the only `(-1)`-face.
pub fn boundary_matrix(cx: &SimplicialComplex, i: i64) -> Result<SparseMatrix> {
    let dim = cx.dim();
    if i < 0 || i > dim {
        // ∂_{-1} is the zero map out of C_{-1}; only degrees 0..=dim carry data.
        if i == -1 {
            return SparseMatrix::new(0, 1, Vec::new());
        }
        return Err(Error::OutOfRange { index: i, lo: -1, hi: dim });
    }
    let idx = FaceIndex::new(cx);
    let k = (i + 1) as usize;
    let rows = idx.by_size[k - 1].len();
    let cols = idx.by_size[k].len();
    let entries = idx
        .boundary_rows(i)
        .into_iter()
        .enumerate()
        .flat_map(|(col, r)| r.into_iter().map(move |(row, v)| (row, col, v)))
        .collect();
    SparseMatrix::new(rows, cols, entries)
}

/// Dimensions of reduced homology in degrees `-1..=dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyVector {
    dims: Vec<u64>,
}

impl HomologyVector {
    pub fn from_dims(dims: Vec<u64>) -> Self {
        HomologyVector { dims }
    }

    /// `dim H̃_i`; zero outside `[-1, dim]`.
    pub fn get(&self, i: i64) -> u64 {
        if i < -1 {
            return 0;
        }
        self.dims.get((i + 1) as usize).copied().unwrap_or(0)
    }

    pub fn top_degree(&self) -> i64 {
        self.dims.len() as i64 - 2
    }

    pub fn nonzero_degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.dims.iter().enumerate().filter(|(_, &d)| d > 0).map(|(k, _)| k as i64 - 1)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims.iter().enumerate().map(|(k, &d)| if k % 2 == 1 { d as i64 } else { -(d as i64) }).sum()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.dims
    }
}

/// `dim H̃_i = f_i - rank ∂_i - rank ∂_{i+1}`.
pub fn reduced_homology(cx: &SimplicialComplex, field: FieldSpec) -> HomologyVector {
    let idx = FaceIndex::new(cx);
    let top = cx.dim();
    // ranks[k] = rank ∂_{k-1}, k = 0..=top+1 (∂_{-1} = 0)
    let mut ranks = vec![0usize; (top + 3) as usize];
    for i in 0..=top {
        ranks[(i + 1) as usize] = rank_of_rows(idx.boundary_rows(i), field);
    }
    let dims = (-1..=top)
        .map(|i| {
            let f = idx.by_size[(i + 1) as usize].len();
            (f - ranks[(i + 1) as usize] - ranks[(i + 2) as usize]) as u64
        })
        .collect();
    HomologyVector { dims }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(ix: &[usize]) -> VarSet {
        VarSet::from_indices(ix.iter().copied())
    }

    #[test]
    fn identity_and_zero_rank() {
        assert_eq!(SparseMatrix::identity(5).rank(FieldSpec::Rationals), 5);
        assert_eq!(SparseMatrix::new(4, 3, vec![]).unwrap().rank(FieldSpec::Rationals), 0);
        assert_eq!(SparseMatrix::identity(5).rank(FieldSpec::Prime(3)), 5);
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // [[1,1],[1,-1]] has determinant -2
        let m = SparseMatrix::new(2, 2, vec![(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, -1)]).unwrap();
        assert_eq!(m.rank(FieldSpec::Rationals), 2);
        assert_eq!(m.rank(FieldSpec::Prime(2)), 1);
        assert_eq!(m.rank(FieldSpec::Prime(3)), 2);
    }

    #[test]
    fn rejects_duplicate_entries() {
        assert!(SparseMatrix::new(2, 2, vec![(0, 0, 1), (0, 0, 2)]).is_err());
        assert!(SparseMatrix::new(2, 2, vec![(2, 0, 1)]).is_err());
    }

    #[test]
    fn augmentation_of_points() {
        let pts = SimplicialComplex::from_facets(4, (0..4).map(VarSet::singleton)).unwrap();
        let d0 = boundary_matrix(&pts, 0).unwrap();
        assert_eq!((d0.rows(), d0.cols()), (1, 4));
        assert!((0..4).all(|c| d0.get(0, c) == 1));
        let h = reduced_homology(&pts, FieldSpec::Rationals);
        assert_eq!(h.get(0), 3);
        assert_eq!(h.get(-1), 0);
    }

    #[test]
    fn hollow_triangle_homology() {
        let t = SimplicialComplex::from_facets(3, [vs(&[0, 1]), vs(&[1, 2]), vs(&[0, 2])]).unwrap();
        let d1 = boundary_matrix(&t, 1).unwrap();
        assert_eq!((d1.rows(), d1.cols()), (3, 3));
        assert_eq!(d1.rank(FieldSpec::Rationals), 2);
        let h = reduced_homology(&t, FieldSpec::Rationals);
        assert_eq!(h.as_slice(), &[0, 0, 1]);
        assert!(boundary_matrix(&t, 2).is_err());
    }

    #[test]
    fn simplex_and_empty_face() {
        assert!(reduced_homology(&SimplicialComplex::simplex(4), FieldSpec::Rationals).is_zero());
        let e = reduced_homology(&SimplicialComplex::empty_face(3), FieldSpec::Rationals);
        assert_eq!(e.as_slice(), &[1]);
        assert_eq!(e.get(-1), 1);
    }

    #[test]
    fn bigint_fallback_agrees() {
        // Rows with huge entries force the arbitrary-precision path.
        let big = 1i64 << 62;
        let rows = vec![
            vec![(0, big), (1, big - 1), (2, 3)],
            vec![(0, big - 1), (1, big), (2, 5)],
            vec![(0, 2 * (big / 2) - 1), (1, 2 * (big / 2) - 1), (2, 8)],
        ];
        assert!(eliminate::<i128>(rows.iter().map(|r| r.iter().map(|&(c, v)| (c, v as i128)).collect()).collect()).is_none());
        let via_big = eliminate::<BigInt>(
            rows.iter().map(|r| r.iter().map(|&(c, v)| (c, BigInt::from(v))).collect()).collect(),
        )
        .unwrap();
        assert_eq!(rank_of_rows(rows, FieldSpec::Rationals), via_big);
    }
}
