//! Matrices and subspaces of V = GF(q)^n.
//!
//! Vectors are rows and matrices act on the right: `w -> w g`. A subspace is
//! stored by the reduced row echelon form of a basis, which is unique, so
//! equality and hashing of subspaces are plain comparisons of that form.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gfq::FqField;

/// Default cap on the number of subspaces an enumeration may produce.
pub const DEFAULT_SUBSPACE_CAP: usize = 1_000_000;

#[derive(Clone)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
    field: Arc<FqField>,
}

fn same_field(a: &Arc<FqField>, b: &Arc<FqField>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
            && same_field(&self.field, &other.field)
    }
}

impl Eq for Matrix {}

impl Hash for Matrix {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
        self.cols.hash(state);
        self.data.hash(state);
    }
}

/// Canonical order: shape first, then row-major entries lexicographically.
impl Ord for Matrix {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.rows, self.cols, &self.data).cmp(&(other.rows, other.cols, &other.data))
    }
}

impl PartialOrd for Matrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[u32]> = self.data.chunks(self.cols.max(1)).collect();
        write!(f, "{:?}", &rows[..self.rows.min(rows.len())])
    }
}

/// JSON form of a matrix: nested integer arrays over prime fields,
/// arrays of coefficient vectors over extension fields.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixRepr {
    Residues(Vec<Vec<u32>>),
    Coefficients(Vec<Vec<Vec<u32>>>),
}

impl Matrix {
    pub fn new(field: &Arc<FqField>, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(&bad) = data.iter().find(|&&x| x >= field.order()) {
            return Err(Error::NotAnElement(bad));
        }
        Ok(Self {
            rows,
            cols,
            data,
            field: field.clone(),
        })
    }

    pub fn from_rows(field: &Arc<FqField>, rows: &[Vec<u32>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(field, rows.len(), cols, rows.concat())
    }

    pub fn zeros(field: &Arc<FqField>, rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
            field: field.clone(),
        }
    }

    pub fn identity(field: &Arc<FqField>, n: usize) -> Self {
        Self::diagonal(field, &vec![1; n])
    }

    pub fn diagonal(field: &Arc<FqField>, diag: &[u32]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(field, n, n);
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * n + i] = d;
        }
        m
    }

    /// `I + a E_{ij}`.
    pub fn transvection(field: &Arc<FqField>, n: usize, i: usize, j: usize, a: u32) -> Self {
        let mut m = Self::identity(field, n);
        m.data[i * n + j] = field.add(m.data[i * n + j], a);
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &Arc<FqField> {
        &self.field
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j));
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
            field: self.field.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if !same_field(&self.field, &other.field) {
            return Err(Error::MixedFields);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul_unchecked(other))
    }

    /// Product without shape or field checks.
    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let f = &*self.field;
        let (n, m, k) = (self.rows, other.cols, self.cols);
        let mut data = vec![0u32; n * m];
        for i in 0..n {
            for t in 0..k {
                let a = self.data[i * k + t];
                if a == 0 {
                    continue;
                }
                let orow = &other.data[t * m..(t + 1) * m];
                let out = &mut data[i * m..(i + 1) * m];
                for (o, &b) in out.iter_mut().zip(orow) {
                    *o = f.add(*o, f.mul(a, b));
                }
            }
        }
        Self {
            rows: n,
            cols: m,
            data,
            field: self.field.clone(),
        }
    }

    /// Reduced row echelon form, zero rows kept at the bottom.
    pub fn rref(&self) -> Self {
        let mut out = self.clone();
        rref_in_place(&self.field, self.rows, self.cols, &mut out.data);
        out
    }

    pub fn rank(&self) -> usize {
        let mut data = self.data.clone();
        rref_in_place(&self.field, self.rows, self.cols, &mut data).len()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Gauss-Jordan on `[A | I]`.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let f = &*self.field;
        let mut aug = vec![0u32; n * 2 * n];
        for i in 0..n {
            aug[i * 2 * n..i * 2 * n + n].copy_from_slice(self.row(i));
            aug[i * 2 * n + n + i] = 1;
        }
        let pivots = rref_in_place(f, n, 2 * n, &mut aug);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            data.extend_from_slice(&aug[i * 2 * n + n..(i + 1) * 2 * n]);
        }
        Some(Self {
            rows: n,
            cols: n,
            data,
            field: self.field.clone(),
        })
    }

    pub fn determinant(&self) -> Option<u32> {
        if !self.is_square() {
            return None;
        }
        let f = &*self.field;
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = 1u32;
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| a[r * n + c] != 0) else {
                return Some(0);
            };
            if p != c {
                for j in 0..n {
                    a.swap(p * n + j, c * n + j);
                }
                det = f.neg(det);
            }
            let pv = a[c * n + c];
            det = f.mul(det, pv);
            let pinv = f.inv(pv).unwrap();
            for r in c + 1..n {
                let factor = f.mul(a[r * n + c], pinv);
                if factor == 0 {
                    continue;
                }
                for j in c..n {
                    let v = f.mul(factor, a[c * n + j]);
                    a[r * n + j] = f.sub(a[r * n + j], v);
                }
            }
        }
        Some(det)
    }

    pub fn to_repr(&self) -> MatrixRepr {
        if self.field.degree() == 1 {
            MatrixRepr::Residues((0..self.rows).map(|i| self.row(i).to_vec()).collect())
        } else {
            MatrixRepr::Coefficients(
                (0..self.rows)
                    .map(|i| {
                        self.row(i)
                            .iter()
                            .map(|&x| self.field.coefficients(x))
                            .collect()
                    })
                    .collect(),
            )
        }
    }

    pub fn from_repr(field: &Arc<FqField>, repr: &MatrixRepr) -> Result<Self> {
        match repr {
            MatrixRepr::Residues(rows) => {
                if field.degree() != 1 {
                    // a single residue per entry is the constant coefficient
                    let rows: Vec<Vec<u32>> = rows
                        .iter()
                        .map(|r| r.iter().map(|&c| field.encode(&[c])).collect())
                        .collect();
                    return Self::from_rows(field, &rows);
                }
                Self::from_rows(field, rows)
            }
            MatrixRepr::Coefficients(rows) => {
                let p = field.characteristic();
                let mut encoded = Vec::with_capacity(rows.len());
                for r in rows {
                    let mut out = Vec::with_capacity(r.len());
                    for c in r {
                        if c.len() > field.degree() as usize || c.iter().any(|&x| x >= p) {
                            return Err(Error::NotAnElement(c.iter().copied().max().unwrap_or(0)));
                        }
                        out.push(field.encode(c));
                    }
                    encoded.push(out);
                }
                Self::from_rows(field, &encoded)
            }
        }
    }
}

/// Row-reduces `data` in place; returns the pivot columns.
fn rref_in_place(f: &FqField, rows: usize, cols: usize, data: &mut [u32]) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| data[i * cols + c] != 0) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                data.swap(p * cols + j, r * cols + j);
            }
        }
        let pinv = f.inv(data[r * cols + c]).unwrap();
        for j in c..cols {
            data[r * cols + j] = f.mul(data[r * cols + j], pinv);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = data[i * cols + c];
            if factor == 0 {
                continue;
            }
            for j in c..cols {
                let v = f.mul(factor, data[r * cols + j]);
                data[i * cols + j] = f.sub(data[i * cols + j], v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A subspace of GF(q)^n in canonical (RREF, no zero rows) form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    basis: Matrix,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{:?}>", self.basis)
    }
}

impl Subspace {
    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        let mut data = m.data.clone();
        let rank = rref_in_place(&m.field, m.rows, m.cols, &mut data).len();
        data.truncate(rank * m.cols);
        Self {
            basis: Matrix {
                rows: rank,
                cols: m.cols,
                data,
                field: m.field.clone(),
            },
        }
    }

    pub fn span(field: &Arc<FqField>, n: usize, vectors: &[Vec<u32>]) -> Result<Self> {
        let m = Matrix::new(field, vectors.len(), n, vectors.concat())?;
        Ok(Self::row_space(&m))
    }

    pub fn zero(field: &Arc<FqField>, n: usize) -> Self {
        Self {
            basis: Matrix::zeros(field, 0, n),
        }
    }

    pub fn whole(field: &Arc<FqField>, n: usize) -> Self {
        Self {
            basis: Matrix::identity(field, n),
        }
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols
    }

    pub fn field(&self) -> &Arc<FqField> {
        &self.basis.field
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_whole(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient_dim() != other.ambient_dim() || !same_field(self.field(), other.field()) {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let n = self.ambient_dim();
        let mut data = self.basis.data.clone();
        data.extend_from_slice(&other.basis.data);
        let m = Matrix {
            rows: self.dim() + other.dim(),
            cols: n,
            data,
            field: self.field().clone(),
        };
        Ok(Self::row_space(&m))
    }

    /// `{x : w . x = 0 for all w in self}`.
    pub fn annihilator(&self) -> Self {
        let f = &**self.field();
        let n = self.ambient_dim();
        let k = self.dim();
        let pivots: Vec<usize> = (0..k)
            .map(|i| (0..n).find(|&j| self.basis.get(i, j) != 0).unwrap())
            .collect();
        let mut data = Vec::new();
        let mut rows = 0;
        for free in (0..n).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0u32; n];
            v[free] = 1;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(self.basis.get(i, free));
            }
            data.extend(v);
            rows += 1;
        }
        Self::row_space(&Matrix {
            rows,
            cols: n,
            data,
            field: self.field().clone(),
        })
    }

    /// Intersection through annihilators: `a ∩ b = ann(ann(a) + ann(b))`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    pub fn contains_vector(&self, v: &[u32]) -> bool {
        if v.len() != self.ambient_dim() {
            return false;
        }
        let mut data = self.basis.data.clone();
        data.extend_from_slice(v);
        let rank = rref_in_place(self.field(), self.dim() + 1, self.ambient_dim(), &mut data).len();
        rank == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient_dim() == other.ambient_dim()
            && (0..self.dim()).all(|i| other.contains_vector(self.basis.row(i)))
    }

    /// `W g` in canonical form.
    pub fn image(&self, g: &Matrix) -> Result<Self> {
        if g.rows != self.ambient_dim() || !g.is_square() {
            return Err(Error::AmbientMismatch);
        }
        if !same_field(self.field(), &g.field) {
            return Err(Error::MixedFields);
        }
        Ok(self.image_unchecked(g))
    }

    pub(crate) fn image_unchecked(&self, g: &Matrix) -> Self {
        Self::row_space(&self.basis.mul_unchecked(g))
    }

    pub fn is_invariant_under(&self, g: &Matrix) -> bool {
        g.rows == self.ambient_dim() && self.image_unchecked(g) == *self
    }
}

/// Number of subspaces (of dimension `k`, or all) counted from pivot patterns.
fn count_subspaces(q: u32, n: usize, k: Option<usize>) -> u128 {
    let dims: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (0..=n).collect(),
    };
    let mut total = 0u128;
    for k in dims {
        for pivots in combinations(n, k) {
            let free: usize = pivots
                .iter()
                .enumerate()
                .map(|(i, &p)| n - 1 - p - (k - 1 - i))
                .sum();
            total = total.saturating_add((q as u128).saturating_pow(free as u32));
        }
    }
    total
}

/// k-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// All subspaces of GF(q)^n (only dimension `k` if given), each once, sorted
/// by dimension and then by canonical basis.
pub fn enumerate_subspaces(
    field: &Arc<FqField>,
    n: usize,
    k: Option<usize>,
    cap: usize,
) -> Result<Vec<Subspace>> {
    if let Some(k) = k {
        if k > n {
            return Err(Error::DimensionMismatch(format!("k = {k} > n = {n}")));
        }
    }
    let q = field.order();
    let count = count_subspaces(q, n, k);
    if count > cap as u128 {
        return Err(Error::TooManySubspaces { count, cap });
    }
    let dims: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (0..=n).collect(),
    };
    let mut out = Vec::with_capacity(count as usize);
    for k in dims {
        for pivots in combinations(n, k) {
            let slots: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(i, &p)| {
                    let pivots = &pivots;
                    (p + 1..n).filter(move |c| !pivots.contains(c)).map(move |c| (i, c))
                })
                .collect();
            let mut digits = vec![0u32; slots.len()];
            loop {
                let mut data = vec![0u32; k * n];
                for (i, &p) in pivots.iter().enumerate() {
                    data[i * n + p] = 1;
                }
                for (&(i, c), &d) in slots.iter().zip(&digits) {
                    data[i * n + c] = d;
                }
                out.push(Subspace {
                    basis: Matrix {
                        rows: k,
                        cols: n,
                        data,
                        field: field.clone(),
                    },
                });
                // odometer over free entries
                let mut pos = 0;
                while pos < digits.len() {
                    digits[pos] += 1;
                    if digits[pos] < q {
                        break;
                    }
                    digits[pos] = 0;
                    pos += 1;
                }
                if pos == digits.len() {
                    break;
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// A family of subspaces of one ambient space, ordered by inclusion.
#[derive(Debug, Clone)]
pub struct SubspaceLattice {
    ambient_dim: usize,
    elements: Vec<Subspace>,
}

impl SubspaceLattice {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn elements(&self) -> &[Subspace] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, w: &Subspace) -> bool {
        self.elements.binary_search(w).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Subspace> {
        self.elements.iter()
    }

    /// Pairwise sums and intersections stay inside the family.
    pub fn is_closed(&self) -> bool {
        self.elements.iter().all(|a| {
            self.elements.iter().all(|b| {
                a.sum(b).is_ok_and(|s| self.contains(&s))
                    && a.intersect(b).is_ok_and(|i| self.contains(&i))
            })
        })
    }
}

/// Subspaces `W` with `W h = W` for every generator `h`; with
/// `proper_nontrivial` the zero space and `V` are dropped.
pub fn invariant_subspaces(
    field: &Arc<FqField>,
    n: usize,
    gens: &[Matrix],
    proper_nontrivial: bool,
) -> Result<SubspaceLattice> {
    for g in gens {
        if g.rows != n || !g.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} generator in dimension {n}",
                g.rows, g.cols
            )));
        }
        if !same_field(&g.field, field) {
            return Err(Error::MixedFields);
        }
        if !g.is_invertible() {
            return Err(Error::SingularElement);
        }
    }
    let elements = enumerate_subspaces(field, n, None, DEFAULT_SUBSPACE_CAP)?
        .into_iter()
        .filter(|w| !proper_nontrivial || (!w.is_zero() && !w.is_whole()))
        .filter(|w| gens.iter().all(|g| w.is_invariant_under(g)))
        .collect();
    Ok(SubspaceLattice {
        ambient_dim: n,
        elements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> Arc<FqField> {
        Arc::new(FqField::prime(p).unwrap())
    }

    #[test]
    fn rref_examples() {
        let f2 = gf(2);
        let id = Matrix::identity(&f2, 3);
        assert_eq!(id.rref(), id);

        let m = Matrix::from_rows(&f2, &[vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(m.rref(), Matrix::identity(&f2, 2));

        let f3 = gf(3);
        let m = Matrix::from_rows(&f3, &[vec![1, 2], vec![2, 1]]).unwrap();
        let w = Subspace::row_space(&m);
        assert_eq!(w.dim(), 1);
        assert_eq!(w.basis().row(0), &[1, 2]);
    }

    #[test]
    fn sum_and_intersection_examples() {
        let f2 = gf(2);
        let e1 = Subspace::span(&f2, 3, &[vec![1, 0, 0]]).unwrap();
        let e12 = Subspace::span(&f2, 3, &[vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        assert_eq!(e1.intersect(&e12).unwrap(), e1);
        assert_eq!(e1.sum(&Subspace::zero(&f2, 3)).unwrap(), e1);

        let a = Subspace::span(&f2, 2, &[vec![1, 0]]).unwrap();
        let b = Subspace::span(&f2, 2, &[vec![0, 1]]).unwrap();
        assert!(a.sum(&b).unwrap().is_whole());
        assert!(a.intersect(&b).unwrap().is_zero());

        assert_eq!(a.sum(&e1).unwrap_err(), Error::AmbientMismatch);
    }

    #[test]
    fn subspace_counts() {
        let f2 = gf(2);
        assert_eq!(enumerate_subspaces(&f2, 2, None, 100).unwrap().len(), 5);
        assert_eq!(enumerate_subspaces(&f2, 2, Some(1), 100).unwrap().len(), 3);
        let f3 = gf(3);
        assert_eq!(enumerate_subspaces(&f3, 2, Some(1), 100).unwrap().len(), 4);
        assert!(matches!(
            enumerate_subspaces(&f3, 4, None, 10),
            Err(Error::TooManySubspaces { .. })
        ));
    }

    #[test]
    fn invariant_subspace_examples() {
        let f2 = gf(2);
        let id = Matrix::identity(&f2, 2);
        let lat = invariant_subspaces(&f2, 2, &[id], true).unwrap();
        assert_eq!(lat.len(), 3);

        let gl22: Vec<Matrix> = [[1, 1, 0, 1], [0, 1, 1, 0]]
            .iter()
            .map(|d| Matrix::new(&f2, 2, 2, d.to_vec()).unwrap())
            .collect();
        assert!(invariant_subspaces(&f2, 2, &gl22, true).unwrap().is_empty());

        let f3 = gf(3);
        let d = Matrix::diagonal(&f3, &[2, 1]);
        let lat = invariant_subspaces(&f3, 2, &[d], true).unwrap();
        let e1 = Subspace::span(&f3, 2, &[vec![1, 0]]).unwrap();
        let e2 = Subspace::span(&f3, 2, &[vec![0, 1]]).unwrap();
        assert_eq!(lat.elements(), &[e2, e1]);

        let singular = Matrix::zeros(&f3, 2, 2);
        assert_eq!(
            invariant_subspaces(&f3, 2, &[singular], true).unwrap_err(),
            Error::SingularElement
        );
    }

    #[test]
    fn inverse_and_determinant() {
        let f3 = gf(3);
        let m = Matrix::from_rows(&f3, &[vec![1, 2], vec![0, 2]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(&f3, 2));
        assert_eq!(m.determinant(), Some(2));
        assert!(Matrix::zeros(&f3, 2, 2).inverse().is_none());
    }

    #[test]
    fn extension_repr_round_trip() {
        let f4 = Arc::new(FqField::of_order(4).unwrap());
        let m = Matrix::new(&f4, 1, 2, vec![2, 3]).unwrap();
        let repr = m.to_repr();
        assert_eq!(
            repr,
            MatrixRepr::Coefficients(vec![vec![vec![0, 1], vec![1, 1]]])
        );
        assert_eq!(Matrix::from_repr(&f4, &repr).unwrap(), m);
    }
}
