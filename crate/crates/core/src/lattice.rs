//! Exact integer linear algebra: vectors, matrices, determinants, Hermite and
//! Smith normal forms, and finite quotients of nested rational lattices.
//!
//! Everything is arbitrary precision. Intermediate entries of the normal form
//! computations grow quickly even when inputs are tiny, so nothing here ever
//! narrows to a machine integer.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Largest square matrix accepted by [`determinant`].
pub const MAX_DET_DIM: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension {0} exceeds the supported maximum of {MAX_DET_DIM}")]
    TooLarge(usize),
    #[error("the zero vector has no primitive generator")]
    ZeroVector,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("generators span rank {rank}, expected full rank {dim}")]
    RankDeficient { rank: usize, dim: usize },
    #[error("sublattice is not contained in the superlattice")]
    NotContained,
    #[error("lattice denominator must be positive")]
    BadDenominator,
}

/// A point of `Z^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        IntVector(entries)
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        IntVector(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        IntVector(vec![BigInt::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// The pairing `<self, other>`.
    pub fn dot(&self, other: &IntVector) -> BigInt {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn sub(&self, other: &IntVector) -> IntVector {
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn add(&self, other: &IntVector) -> IntVector {
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> IntVector {
        IntVector(self.0.iter().map(|a| -a).collect())
    }

    /// gcd of the entries (zero for the zero vector).
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    /// Entries as `i64`, if they all fit.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.0.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl Index<usize> for IntVector {
    type Output = BigInt;
    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from equal-length rows.
    ///
    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        IntMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        IntMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
        )
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[IntVector]) -> Self {
        let r = cols.first().map_or(0, IntVector::dim);
        let mut m = IntMatrix::zeros(r, cols.len());
        for (j, v) in cols.iter().enumerate() {
            for i in 0..r {
                m.data[i * cols.len() + j] = v[i].clone();
            }
        }
        m
    }

    /// Matrix whose rows are the given vectors.
    pub fn from_row_vectors(rows: &[IntVector]) -> Self {
        IntMatrix::from_rows(rows.iter().map(|v| v.entries().to_vec()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vector(&self, r: usize) -> IntVector {
        IntVector::new(self.row(r).to_vec())
    }

    pub fn column(&self, c: usize) -> IntVector {
        IntVector::new((0..self.rows).map(|r| self.get(r, c).clone()).collect())
    }

    pub fn columns(&self) -> Vec<IntVector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn data(&self) -> &[BigInt] {
        &self.data
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "incompatible matrix product");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &IntVector) -> IntVector {
        assert_eq!(self.cols, v.dim(), "incompatible matrix-vector product");
        IntVector::new(
            (0..self.rows)
                .map(|r| self.row(r).iter().zip(v.entries()).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }

    pub fn scale(&self, s: &BigInt) -> IntMatrix {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let x = self.get(r, c);
                    if r == c { x.is_one() } else { x.is_zero() }
                })
            })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] -= q * row[src]
    fn row_sub(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let t = &self.data[src * self.cols + c] * q;
            self.data[dst * self.cols + c] -= t;
        }
    }

    /// col[dst] -= q * col[src]
    fn col_sub(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let t = &self.data[r * self.cols + src] * q;
            self.data[r * self.cols + dst] -= t;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let x = std::mem::take(&mut self.data[r * self.cols + c]);
            self.data[r * self.cols + c] = -x;
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &IntMatrix) -> Result<BigInt, LatticeError> {
    if !m.is_square() {
        return Err(LatticeError::NonSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    if n > MAX_DET_DIM {
        return Err(LatticeError::TooLarge(n));
    }
    Ok(bareiss(m.clone()))
}

fn bareiss(mut a: IntMatrix) -> BigInt {
    let n = a.rows;
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                a.set(i, j, v);
            }
        }
        prev = a.get(k, k).clone();
    }
    sign * a.get(n - 1, n - 1)
}

/// Adjugate of a square matrix, so that `m * adj(m) = det(m) * I`.
pub fn adjugate(m: &IntMatrix) -> Result<IntMatrix, LatticeError> {
    if !m.is_square() {
        return Err(LatticeError::NonSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    if n > MAX_DET_DIM {
        return Err(LatticeError::TooLarge(n));
    }
    if n == 1 {
        return Ok(IntMatrix::identity(1));
    }
    let mut adj = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let minor = IntMatrix::from_rows(
                (0..n)
                    .filter(|&r| r != i)
                    .map(|r| (0..n).filter(|&c| c != j).map(|c| m.get(r, c).clone()).collect())
                    .collect(),
            );
            let cof = bareiss(minor);
            // adj[j][i] = (-1)^(i+j) * minor(i, j)
            adj.set(j, i, if (i + j) % 2 == 0 { cof } else { -cof });
        }
    }
    Ok(adj)
}

/// Row-style Hermite normal form: returns `(H, U)` with `U` unimodular and
/// `U * m = H`. `H` is in row echelon form, each pivot is positive and the
/// entries above a pivot lie in `[0, pivot)`. Zero rows sit at the bottom.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut r = 0;
    for c in 0..h.cols {
        if r == h.rows {
            break;
        }
        // Euclid on column c over rows r..
        loop {
            let pivot = (r..h.rows)
                .filter(|&i| !h.get(i, c).is_zero())
                .min_by(|&a, &b| h.get(a, c).abs().cmp(&h.get(b, c).abs()));
            let Some(p) = pivot else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..h.rows {
                if h.get(i, c).is_zero() {
                    continue;
                }
                let q = h.get(i, c).div_floor(h.get(r, c));
                h.row_sub(i, r, &q);
                u.row_sub(i, r, &q);
                if !h.get(i, c).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = h.get(i, c).div_floor(h.get(r, c));
            h.row_sub(i, r, &q);
            u.row_sub(i, r, &q);
        }
        r += 1;
    }
    (h, u)
}

/// Rank of an integer matrix.
pub fn rank(m: &IntMatrix) -> usize {
    let (h, _) = hermite_normal_form(m);
    (0..h.rows).filter(|&r| h.row(r).iter().any(|x| !x.is_zero())).count()
}

/// Smith normal form: returns `(S, U, V)` with `U`, `V` unimodular and
/// `U * m * V = S`, `S` diagonal with nonnegative entries `d1 | d2 | ...`.
pub fn smith_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let mut s = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut v = IntMatrix::identity(m.cols);
    let n = m.rows.min(m.cols);
    for t in 0..n {
        loop {
            // smallest nonzero entry of the trailing block goes to (t, t)
            let mut best: Option<(usize, usize)> = None;
            for i in t..s.rows {
                for j in t..s.cols {
                    let x = s.get(i, j);
                    if !x.is_zero()
                        && best.is_none_or(|(bi, bj)| x.abs() < s.get(bi, bj).abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            s.swap_rows(t, bi);
            u.swap_rows(t, bi);
            s.swap_cols(t, bj);
            v.swap_cols(t, bj);

            let mut clean = true;
            for i in t + 1..s.rows {
                let q = s.get(i, t).div_floor(s.get(t, t));
                s.row_sub(i, t, &q);
                u.row_sub(i, t, &q);
                if !s.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..s.cols {
                let q = s.get(t, j).div_floor(s.get(t, t));
                s.col_sub(j, t, &q);
                v.col_sub(j, t, &q);
                if !s.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility of the trailing block by the pivot
            let bad = (t + 1..s.rows).find(|&i| {
                (t + 1..s.cols).any(|j| !s.get(i, j).is_multiple_of(s.get(t, t)))
            });
            match bad {
                Some(i) => {
                    // row t += row i, then reduce again
                    let minus_one = -BigInt::one();
                    s.row_sub(t, i, &minus_one);
                    u.row_sub(t, i, &minus_one);
                }
                None => break,
            }
        }
        if s.get(t, t).is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    (s, u, v)
}

/// The diagonal of a Smith form.
pub fn smith_diagonal(m: &IntMatrix) -> Vec<BigInt> {
    let (s, _, _) = smith_normal_form(m);
    (0..s.rows.min(s.cols)).map(|i| s.get(i, i).clone()).collect()
}

/// Divides out the content of a nonzero vector.
pub fn primitive(v: &IntVector) -> Result<IntVector, LatticeError> {
    let g = v.content();
    if g.is_zero() {
        return Err(LatticeError::ZeroVector);
    }
    Ok(IntVector::new(v.entries().iter().map(|x| x / &g).collect()))
}

/// A lattice in `Q^n`: the integer row span of `basis`, divided by `denominator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalLattice {
    pub basis: IntMatrix,
    pub denominator: BigInt,
}

impl RationalLattice {
    pub fn new(basis: IntMatrix, denominator: BigInt) -> Result<Self, LatticeError> {
        if !denominator.is_positive() {
            return Err(LatticeError::BadDenominator);
        }
        Ok(RationalLattice { basis, denominator })
    }

    /// The integer lattice spanned by the rows of `basis`.
    pub fn integral(basis: IntMatrix) -> Self {
        RationalLattice { basis, denominator: BigInt::one() }
    }

    /// `Z^n`.
    pub fn standard(n: usize) -> Self {
        RationalLattice::integral(IntMatrix::identity(n))
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }
}

/// A finite abelian group `Z/d1 x Z/d2 x ...` in invariant-factor form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteAbelianGroup {
    invariant_factors: Vec<BigInt>,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        FiniteAbelianGroup { invariant_factors: Vec::new() }
    }

    /// Normalizes an arbitrary list of cyclic orders (`Z/a x Z/b x ...`) into
    /// invariant factors. Zero orders are rejected since the group must be finite.
    pub fn from_cyclic_orders(orders: &[BigInt]) -> Option<Self> {
        if orders.iter().any(|d| d.is_zero()) {
            return None;
        }
        let n = orders.len();
        let mut diag = IntMatrix::zeros(n, n);
        for (i, d) in orders.iter().enumerate() {
            diag.set(i, i, d.abs());
        }
        let factors = smith_diagonal(&diag).into_iter().filter(|d| !d.is_one()).collect();
        Some(FiniteAbelianGroup { invariant_factors: factors })
    }

    pub fn from_u64(orders: &[u64]) -> Option<Self> {
        Self::from_cyclic_orders(&orders.iter().map(|&d| BigInt::from(d)).collect::<Vec<_>>())
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariant_factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.invariant_factors.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Basis (as the nonzero rows of the Hermite form) of the row span of `m`.
fn row_basis(m: &IntMatrix) -> IntMatrix {
    let (h, _) = hermite_normal_form(m);
    let rows: Vec<Vec<BigInt>> = (0..h.rows())
        .filter(|&r| h.row(r).iter().any(|x| !x.is_zero()))
        .map(|r| h.row(r).to_vec())
        .collect();
    if rows.is_empty() {
        IntMatrix::zeros(0, m.cols())
    } else {
        IntMatrix::from_rows(rows)
    }
}

/// The finite group `sup / sub` for full-rank lattices `sub ⊆ sup` in `Q^n`.
pub fn lattice_quotient(
    sub: &RationalLattice,
    sup: &RationalLattice,
) -> Result<FiniteAbelianGroup, LatticeError> {
    let n = sup.dim();
    if sub.dim() != n {
        return Err(LatticeError::DimensionMismatch(sub.dim(), n));
    }
    if n > MAX_DET_DIM {
        return Err(LatticeError::TooLarge(n));
    }
    let common = sub.denominator.lcm(&sup.denominator);
    let sub_int = row_basis(&sub.basis.scale(&(&common / &sub.denominator)));
    let sup_int = row_basis(&sup.basis.scale(&(&common / &sup.denominator)));
    for b in [&sub_int, &sup_int] {
        if b.rows() != n {
            return Err(LatticeError::RankDeficient { rank: b.rows(), dim: n });
        }
    }
    // express each sub generator in the sup basis: x * B = s  =>  x = s * adj(B) / det(B)
    let det = bareiss(sup_int.clone());
    let adj = adjugate(&sup_int)?;
    let scaled = sub_int.mul(&adj);
    let mut change = IntMatrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            let (q, rem) = scaled.get(r, c).div_rem(&det);
            if !rem.is_zero() {
                return Err(LatticeError::NotContained);
            }
            change.set(r, c, q);
        }
    }
    let diag = smith_diagonal(&change);
    Ok(FiniteAbelianGroup::from_cyclic_orders(&diag)
        .expect("full-rank change of basis has nonzero Smith diagonal"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows)
    }

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant(&IntMatrix::identity(3)).unwrap(), big(1));
        assert_eq!(determinant(&m(&[&[1, 0, 0], &[0, 1, 0], &[-1, -1, -1]])).unwrap(), big(-1));
        assert_eq!(determinant(&m(&[&[2, 0], &[0, 3]])).unwrap(), big(6));
        // needs a pivot swap
        assert_eq!(determinant(&m(&[&[0, 1], &[1, 0]])).unwrap(), big(-1));
        assert_eq!(determinant(&m(&[&[1, 2], &[2, 4]])).unwrap(), big(0));
    }

    #[test]
    fn determinant_errors() {
        assert_eq!(
            determinant(&IntMatrix::zeros(2, 3)),
            Err(LatticeError::NonSquare { rows: 2, cols: 3 })
        );
        assert_eq!(determinant(&IntMatrix::identity(9)), Err(LatticeError::TooLarge(9)));
    }

    #[test]
    fn hnf_examples() {
        let (h, u) = hermite_normal_form(&IntMatrix::identity(3));
        assert!(h.is_identity() && u.is_identity());

        let (h, _) = hermite_normal_form(&m(&[&[0, 1], &[1, 0]]));
        assert!(h.is_identity());

        let a = m(&[&[2, 4], &[6, 8]]);
        let (h, u) = hermite_normal_form(&a);
        assert_eq!(h, m(&[&[2, 0], &[0, 4]]));
        assert_eq!(u.mul(&a), h);
        assert_eq!(determinant(&u).unwrap().abs(), big(1));
    }

    #[test]
    fn hnf_reduces_above_pivots() {
        let a = m(&[&[3, 5, 1], &[0, 2, 7]]);
        let (h, u) = hermite_normal_form(&a);
        assert_eq!(u.mul(&a), h);
        // pivot columns 0 and 1: entry above the second pivot is in [0, pivot)
        assert!(h.get(0, 0).is_positive() && h.get(1, 1).is_positive());
        assert!(!h.get(0, 1).is_negative() && h.get(0, 1) < h.get(1, 1));
    }

    #[test]
    fn snf_examples() {
        assert_eq!(smith_diagonal(&m(&[&[2, 0], &[0, 3]])), vec![big(1), big(6)]);
        assert_eq!(smith_diagonal(&m(&[&[2, 4], &[6, 8]])), vec![big(2), big(4)]);
        let (s, _, _) = smith_normal_form(&IntMatrix::zeros(2, 3));
        assert!(s.is_zero());
    }

    #[test]
    fn snf_transforms() {
        let a = m(&[&[4, 6, 2], &[2, 8, 10], &[6, 0, 4]]);
        let (s, u, v) = smith_normal_form(&a);
        assert_eq!(u.mul(&a).mul(&v), s);
        assert_eq!(determinant(&u).unwrap().abs(), big(1));
        assert_eq!(determinant(&v).unwrap().abs(), big(1));
    }

    #[test]
    fn primitive_examples() {
        let p = |xs: &[i64]| primitive(&IntVector::from_i64(xs)).unwrap();
        assert_eq!(p(&[2, -4, 6]), IntVector::from_i64(&[1, -2, 3]));
        assert_eq!(p(&[0, 0, 5]), IntVector::from_i64(&[0, 0, 1]));
        assert_eq!(p(&[3, -1, -1]), IntVector::from_i64(&[3, -1, -1]));
        assert_eq!(primitive(&IntVector::zero(3)), Err(LatticeError::ZeroVector));
    }

    #[test]
    fn quotient_examples() {
        let z2 = RationalLattice::standard(2);
        let quarter = RationalLattice::new(IntMatrix::identity(2), big(4)).unwrap();
        assert_eq!(lattice_quotient(&z2, &quarter).unwrap(), FiniteAbelianGroup::from_u64(&[4, 4]).unwrap());
        assert!(lattice_quotient(&z2, &z2).unwrap().is_trivial());

        // (1/2, 0) and (0, 1/6) = (3, 0)/6 and (0, 1)/6
        let sup = RationalLattice::new(m(&[&[3, 0], &[0, 1]]), big(6)).unwrap();
        let g = lattice_quotient(&z2, &sup).unwrap();
        assert_eq!(g.invariant_factors(), &[big(2), big(6)]);
        assert_eq!(g.order(), big(12));
    }

    #[test]
    fn quotient_errors() {
        let z2 = RationalLattice::standard(2);
        let half = RationalLattice::new(IntMatrix::identity(2), big(2)).unwrap();
        assert_eq!(lattice_quotient(&half, &z2), Err(LatticeError::NotContained));
        let line = RationalLattice::integral(m(&[&[1, 0], &[2, 0]]));
        assert!(matches!(lattice_quotient(&line, &z2), Err(LatticeError::RankDeficient { .. })));
        assert_eq!(
            RationalLattice::new(IntMatrix::identity(2), big(0)),
            Err(LatticeError::BadDenominator)
        );
    }

    #[test]
    fn group_normalization() {
        let g = FiniteAbelianGroup::from_u64(&[6, 2]).unwrap();
        assert_eq!(g.invariant_factors(), &[big(2), big(6)]);
        let g = FiniteAbelianGroup::from_u64(&[2, 3]).unwrap();
        assert_eq!(g.invariant_factors(), &[big(6)]);
        assert_eq!(g.to_string(), "6");
        assert!(FiniteAbelianGroup::from_u64(&[1, 1]).unwrap().is_trivial());
        assert!(FiniteAbelianGroup::from_u64(&[0]).is_none());
    }
}
