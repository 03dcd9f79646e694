//! Exact linear algebra over the rationals.
//!
//! Everything here is index-agnostic: columns are 0-based and there is no
//! notion of the cyclic extension of a point's columns.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar, always kept in lowest terms with a positive denominator.
pub type Rat = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The rational `p/q`.
pub fn rat_frac(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Canonical text form: `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Inverse of [`format_rat`]. Accepts non-reduced input and normalizes it.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("bad rational {s:?}")))
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(parse_int(p)?, q))
        }
    }
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rat).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer matrix from row slices; convenient in tests.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rat>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch(format!(
                    "column {c} has length {}, expected {rows}",
                    col.len()
                )));
            }
            for (r, x) in col.iter().enumerate() {
                m.set(r, c, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Rat) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn set_column(&mut self, c: usize, v: &[Rat]) {
        assert_eq!(v.len(), self.rows, "column length mismatch");
        for (r, x) in v.iter().enumerate() {
            self.set(r, c, x.clone());
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Submatrix on the listed columns, in the listed order.
    pub fn select_columns(&self, cols: &[usize]) -> RatMatrix {
        let mut m = Self::zeros(self.rows, cols.len());
        for (j, &c) in cols.iter().enumerate() {
            for r in 0..self.rows {
                m.set(r, j, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut m = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(c, r, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut m = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Rat::zero();
                for t in 0..self.cols {
                    let a = self.get(r, t);
                    if !a.is_zero() {
                        acc += a * other.get(t, c);
                    }
                }
                m.set(r, c, acc);
            }
        }
        Ok(m)
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).recip();
            for c in col..m.cols {
                let x = m.get(row, c) * &inv;
                m.set(row, c, x);
            }
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for c in col..m.cols {
                        let x = m.get(r, c) - &factor * m.get(row, c);
                        m.set(r, c, x);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Determinant of a square matrix by Gaussian elimination.
    pub fn det(&self) -> Result<Rat> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Rat::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(Rat::zero());
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            for r in col + 1..n {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col) / &pivot;
                for c in col..n {
                    let x = m.get(r, c) - &factor * m.get(col, c);
                    m.set(r, c, x);
                }
            }
        }
        Ok(det)
    }

    /// Signed maximal minor on the listed columns, taken in the listed order.
    pub fn minor(&self, cols: &[usize]) -> Result<Rat> {
        if cols.len() != self.rows {
            return Err(Error::WrongTupleLength {
                expected: self.rows,
                got: cols.len(),
            });
        }
        if let Some(&c) = cols.iter().find(|&&c| c >= self.cols) {
            return Err(Error::DimensionMismatch(format!("column {c} out of range")));
        }
        self.select_columns(cols).det()
    }

    pub fn inverse(&self) -> Result<RatMatrix> {
        let n = self.rows;
        if n != self.cols {
            return Err(Error::DimensionMismatch("inverse of non-square matrix".into()));
        }
        let mut aug = Self::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Rat::one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::DependentBasis);
        }
        let mut inv = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.get(r, n + c).clone());
            }
        }
        Ok(inv)
    }

    /// Basis of the right kernel `{x : M x = 0}`.
    pub fn null_space(&self) -> Vec<Vec<Rat>> {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Rat::zero(); self.cols];
                x[f] = Rat::one();
                for (r, &p) in pivots.iter().enumerate() {
                    x[p] = -red.get(r, f).clone();
                }
                x
            })
            .collect()
    }
}

fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Coordinates of `target` in the basis given by the columns `basis`.
///
/// Uses Cramer's rule when the basis is square; otherwise an exact solve.
pub fn cramer_expand(target: &[Rat], basis: &[Vec<Rat>]) -> Result<Vec<Rat>> {
    let dim = target.len();
    let m = RatMatrix::from_columns(dim, basis)?;
    if basis.len() == dim {
        let d = m.det()?;
        if d.is_zero() {
            return Err(Error::DependentBasis);
        }
        return (0..basis.len())
            .map(|j| {
                let mut replaced = m.clone();
                replaced.set_column(j, target);
                Ok(replaced.det()? / &d)
            })
            .collect();
    }
    if m.rank() < basis.len() {
        return Err(Error::DependentBasis);
    }
    let mut aug = RatMatrix::zeros(dim, basis.len() + 1);
    for (r, t) in target.iter().enumerate() {
        for c in 0..basis.len() {
            aug.set(r, c, m.get(r, c).clone());
        }
        aug.set(r, basis.len(), t.clone());
    }
    let (red, pivots) = aug.rref();
    if pivots.contains(&basis.len()) {
        return Err(Error::NotInSpan);
    }
    Ok((0..basis.len()).map(|r| red.get(r, basis.len()).clone()).collect())
}

/// Linear combination `Σ c_j · v_j`.
pub fn combine(coeffs: &[Rat], vectors: &[Vec<Rat>], dim: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); dim];
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            *o += c * x;
        }
    }
    out
}

/// Linear subspace of `Q^ambient`, stored in reduced echelon form.
///
/// Two subspaces are equal exactly when their stored forms are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rat>>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|v| format!("({})", v.iter().map(format_rat).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "Subspace<{}>[{}]", self.ambient, rows.join(" "))
    }
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, &RatMatrix::identity(ambient).to_rows())
    }

    /// Span of the given vectors, each of length `ambient`.
    pub fn span(ambient: usize, vectors: &[Vec<Rat>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let m = RatMatrix::from_rows(vectors.to_vec()).expect("vectors of equal length");
        assert_eq!(m.cols(), ambient, "vector length differs from ambient dimension");
        let (red, pivots) = m.rref();
        Subspace {
            ambient,
            basis: (0..pivots.len()).map(|r| red.row(r).to_vec()).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Canonical basis vectors.
    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        if is_zero_vec(v) {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Subspace::span(self.ambient, &rows).dim() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &rows)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimensions differ");
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient);
        }
        let mut cols = self.basis.clone();
        cols.extend(other.basis.iter().map(|v| v.iter().map(|x| -x).collect()));
        let m = RatMatrix::from_columns(self.ambient, &cols).expect("consistent lengths");
        let p = self.dim();
        let vectors: Vec<Vec<Rat>> = m
            .null_space()
            .iter()
            .map(|x| combine(&x[..p], &self.basis, self.ambient))
            .collect();
        Subspace::span(self.ambient, &vectors)
    }
}

/// Complete flag `F_1 ⊂ F_2 ⊂ … ⊂ F_k` in `Q^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagK {
    parts: Vec<Subspace>,
}

impl FlagK {
    /// Validates strict nesting and `dim F_i = i`.
    pub fn new(parts: Vec<Subspace>) -> Result<Self> {
        let k = parts.len();
        for (idx, s) in parts.iter().enumerate() {
            if s.ambient() != k || s.dim() != idx + 1 {
                return Err(Error::Degenerate(format!(
                    "flag step {} has dimension {} in ambient {}",
                    idx + 1,
                    s.dim(),
                    s.ambient()
                )));
            }
            if idx > 0 && !parts[idx - 1].is_subspace_of(s) {
                return Err(Error::Degenerate(format!("flag step {idx} is not nested")));
            }
        }
        Ok(FlagK { parts })
    }

    /// Flag of the leading column spans of an invertible matrix.
    pub fn from_columns(columns: &[Vec<Rat>]) -> Result<Self> {
        let k = columns.len();
        Self::new((1..=k).map(|i| Subspace::span(k, &columns[..i])).collect())
    }

    pub fn standard(k: usize) -> Self {
        let id = RatMatrix::identity(k);
        Self::from_columns(&(0..k).map(|c| id.column(c)).collect::<Vec<_>>()).expect("identity")
    }

    pub fn antistandard(k: usize) -> Self {
        let id = RatMatrix::identity(k);
        Self::from_columns(&(0..k).rev().map(|c| id.column(c)).collect::<Vec<_>>())
            .expect("identity")
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    /// `F_i`, with `F_0 = 0`.
    pub fn get(&self, i: usize) -> Subspace {
        if i == 0 {
            Subspace::zero(self.k())
        } else {
            self.parts[i - 1].clone()
        }
    }

    pub fn parts(&self) -> &[Subspace] {
        &self.parts
    }
}

/// The permutation `w` (one-line, 1-based) with
/// `dim(F1_i ∩ F2_j) = |{1..i} ∩ {w(1)..w(j)}|`.
pub fn rel_position(f1: &FlagK, f2: &FlagK) -> Vec<usize> {
    let k = f1.k();
    assert_eq!(k, f2.k(), "flags live in different ambient spaces");
    let r = |i: usize, j: usize| -> usize {
        if i == 0 || j == 0 {
            0
        } else {
            f1.get(i).intersect(&f2.get(j)).dim()
        }
    };
    (1..=k)
        .map(|j| {
            (1..=k)
                .find(|&i| r(i, j) > r(i, j - 1))
                .expect("dimension jumps by one at every step")
        })
        .collect()
}

/// `F1_i ∩ F2_{k-i} = 0` for every `i`.
pub fn transversal(f1: &FlagK, f2: &FlagK) -> bool {
    let k = f1.k();
    (1..k).all(|i| f1.get(i).intersect(&f2.get(k - i)).dim() == 0)
}

/// Sign of a rational as -1, 0, 1.
pub fn sign(x: &Rat) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn rational_text_roundtrip() {
        assert_eq!(format_rat(&rat_frac(6, -4)), "-3/2");
        assert_eq!(format_rat(&rat(7)), "7");
        assert_eq!(parse_rat("-3/2").unwrap(), rat_frac(-3, 2));
        assert_eq!(parse_rat("10/5").unwrap(), rat(2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn minor_of_identity_and_swap() {
        let id = RatMatrix::identity(3);
        assert_eq!(id.minor(&[0, 1, 2]).unwrap(), rat(1));
        assert_eq!(id.minor(&[1, 0, 2]).unwrap(), rat(-1));
        assert!(matches!(
            id.minor(&[0, 1]),
            Err(Error::WrongTupleLength { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn det_small() {
        assert_eq!(m(&[&[2, 3], &[1, 4]]).det().unwrap(), rat(5));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det().unwrap(), rat(-1));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det().unwrap(), rat(0));
    }

    #[test]
    fn inverse_times_self() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), RatMatrix::identity(3));
    }

    #[test]
    fn intersections() {
        let a = Subspace::span(3, &[vec![rat(1), rat(0), rat(0)], vec![rat(0), rat(1), rat(0)]]);
        let b = Subspace::span(3, &[vec![rat(0), rat(1), rat(0)], vec![rat(0), rat(0), rat(1)]]);
        let c = a.intersect(&b);
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&[rat(0), rat(5), rat(0)]));
        assert_eq!(a.intersect(&a), a);
        let e3 = Subspace::span(3, &[vec![rat(0), rat(0), rat(1)]]);
        assert_eq!(a.intersect(&e3).dim(), 0);
    }

    #[test]
    fn canonical_form_is_unique() {
        let a = Subspace::span(2, &[vec![rat(1), rat(1)], vec![rat(1), rat(-1)]]);
        assert_eq!(a, Subspace::full(2));
        let b = Subspace::span(2, &[vec![rat(2), rat(4)]]);
        let c = Subspace::span(2, &[vec![rat(-1), rat(-2)]]);
        assert_eq!(b, c);
    }

    #[test]
    fn rel_position_basics() {
        for k in 1..5 {
            let s = FlagK::standard(k);
            let a = FlagK::antistandard(k);
            let id: Vec<usize> = (1..=k).collect();
            let w0: Vec<usize> = (1..=k).rev().collect();
            assert_eq!(rel_position(&s, &s), id);
            assert_eq!(rel_position(&s, &a), w0);
            assert!(transversal(&s, &a));
            if k >= 2 {
                assert!(!transversal(&s, &s));
            }
        }
    }

    #[test]
    fn cramer_identity_target() {
        let basis = vec![vec![rat(1), rat(2)], vec![rat(3), rat(5)]];
        assert_eq!(cramer_expand(&basis[0], &basis).unwrap(), vec![rat(1), rat(0)]);
        let dep = vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]];
        assert_eq!(cramer_expand(&[rat(1), rat(0)], &dep), Err(Error::DependentBasis));
        let line = vec![vec![rat(1), rat(2), rat(0)]];
        assert_eq!(cramer_expand(&[rat(0), rat(0), rat(1)], &line), Err(Error::NotInSpan));
        assert_eq!(cramer_expand(&[rat(2), rat(4), rat(0)], &line).unwrap(), vec![rat(2)]);
    }

    #[test]
    fn null_space_is_kernel() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let ns = a.null_space();
        assert_eq!(ns.len(), 2);
        for x in ns {
            assert!(is_zero_vec(&a.mul_vec(&x)));
        }
    }
}
