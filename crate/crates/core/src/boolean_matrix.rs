//! Square Boolean matrices with `max` as addition and the max-min product.
//!
//! Rows are packed one bit per entry into a `u64` (column `j` at bit `j - 1`),
//! so dimensions are limited to 64. Row-by-column products are computed as an
//! OR of whole rows of the right factor.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_DIM: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u8>>", into = "Vec<Vec<u8>>")]
pub struct BoolMatrix {
    n: usize,
    rows: Vec<u64>,
}

fn check_dim(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DIM {
        return Err(Error::InvalidDimension {
            n,
            reason: "matrix dimension must be between 1 and 64",
        });
    }
    Ok(())
}

fn row_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl BoolMatrix {
    pub fn zero(n: usize) -> Self {
        check_dim(n).expect("dimension");
        BoolMatrix { n, rows: vec![0; n] }
    }

    pub fn identity(n: usize) -> Self {
        check_dim(n).expect("dimension");
        BoolMatrix {
            n,
            rows: (0..n).map(|i| 1u64 << i).collect(),
        }
    }

    /// Builds an `n x n` matrix from the 1-based predicate `entry(i, j)`.
    pub fn from_fn(n: usize, mut entry: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = BoolMatrix::zero(n);
        for i in 1..=n {
            for j in 1..=n {
                if entry(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Builds a matrix from rows of 0/1 values.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        check_dim(n)?;
        let mut m = BoolMatrix::zero(n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::MalformedMatrix(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                match v {
                    0 => {}
                    1 => m.rows[i] |= 1 << j,
                    other => {
                        return Err(Error::MalformedMatrix(format!("entry {other} is not 0/1")))
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.rows[i - 1] >> (j - 1)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        let bit = 1u64 << (j - 1);
        if value {
            self.rows[i - 1] |= bit;
        } else {
            self.rows[i - 1] &= !bit;
        }
    }

    /// Packed row `i` (1-based); column `j` sits at bit `j - 1`.
    pub fn row_bits(&self, i: usize) -> u64 {
        self.rows[i - 1]
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (1..=self.n)
            .map(|i| (1..=self.n).map(|j| u8::from(self.get(i, j))).collect())
            .collect()
    }

    pub fn count_ones(&self) -> u32 {
        self.rows.iter().map(|r| r.count_ones()).sum()
    }

    /// Entrywise `<=`.
    pub fn le(&self, other: &BoolMatrix) -> bool {
        self.n == other.n && self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0)
    }

    pub fn is_upper_triangular(&self) -> bool {
        // row i may only use columns i..=n
        self.rows
            .iter()
            .enumerate()
            .all(|(i, &r)| r & ((1u64 << i) - 1) == 0)
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, &r)| r & !row_mask(i + 1) == 0)
    }

    /// Unit diagonal, upper triangular, and every 1 at `(i, j)` with `i < j`
    /// forces 1s along `(i, i+1..=j)` and `(i+1..j, j)`.
    pub fn is_stair_triangular(&self) -> bool {
        if !self.is_upper_triangular() {
            return false;
        }
        let n = self.n;
        (1..=n).all(|i| self.get(i, i))
            && (1..=n).all(|i| {
                (i + 1..=n).all(|j| {
                    !self.get(i, j)
                        || ((i + 1..=j).all(|k| self.get(i, k))
                            && (i + 1..j).all(|k| self.get(k, j)))
                })
            })
    }

    fn same_size(&self, other: &BoolMatrix) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Dimension {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }
}

impl Ord for BoolMatrix {
    /// Row-major bit pattern read as a binary number, entry `(1, 1)` most significant.
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            self.rows
                .iter()
                .map(|r| r.reverse_bits())
                .cmp(other.rows.iter().map(|r| r.reverse_bits()))
        })
    }
}

impl PartialOrd for BoolMatrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            if i > 1 {
                f.write_str("\n")?;
            }
            for j in 1..=self.n {
                f.write_str(if self.get(i, j) { "1" } else { "0" })?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.to_string().lines().map(str::to_owned).collect();
        write!(f, "BoolMatrix[{}]", rows.join("/"))
    }
}

impl FromStr for BoolMatrix {
    type Err = Error;

    /// One row per line (or `/`-separated), characters `0` and `1` only.
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split(['\n', '/'])
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|line| {
                line.chars()
                    .map(|c| match c {
                        '0' => Ok(0u8),
                        '1' => Ok(1u8),
                        other => Err(Error::Parse(format!("unexpected character '{other}'"))),
                    })
                    .collect::<Result<Vec<u8>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        BoolMatrix::from_rows(&rows)
    }
}

impl TryFrom<Vec<Vec<u8>>> for BoolMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<u8>>) -> Result<Self> {
        BoolMatrix::from_rows(&rows)
    }
}

impl From<BoolMatrix> for Vec<Vec<u8>> {
    fn from(m: BoolMatrix) -> Self {
        m.to_rows()
    }
}

/// Entrywise max.
pub fn mat_add(a: &BoolMatrix, b: &BoolMatrix) -> Result<BoolMatrix> {
    a.same_size(b)?;
    Ok(BoolMatrix {
        n: a.n,
        rows: a.rows.iter().zip(&b.rows).map(|(x, y)| x | y).collect(),
    })
}

/// `(AB)_ij = 1` iff some `k` has `A_ik = B_kj = 1`.
pub fn mat_mul(a: &BoolMatrix, b: &BoolMatrix) -> Result<BoolMatrix> {
    a.same_size(b)?;
    let rows = a
        .rows
        .iter()
        .map(|&row| {
            let mut bits = row;
            let mut acc = 0u64;
            while bits != 0 {
                let k = bits.trailing_zeros() as usize;
                acc |= b.rows[k];
                bits &= bits - 1;
            }
            acc
        })
        .collect();
    Ok(BoolMatrix { n: a.n, rows })
}

/// Matrix with 1s exactly at `(i, n+1-i)`.
pub fn antidiagonal(n: usize) -> BoolMatrix {
    BoolMatrix::from_fn(n, |i, j| j == n + 1 - i)
}

/// `PAP` for the antidiagonal `P`: reverses both row and column order.
pub fn conjugate_by_p(a: &BoolMatrix) -> BoolMatrix {
    let n = a.n;
    BoolMatrix::from_fn(n, |i, j| a.get(n + 1 - i, n + 1 - j))
}

/// Flips every entry on or above the diagonal of an upper triangular matrix.
pub fn negate_upper_triangle(a: &BoolMatrix) -> Result<BoolMatrix> {
    if !a.is_upper_triangular() {
        return Err(Error::MalformedMatrix(
            "upper-triangle negation needs an upper triangular matrix".into(),
        ));
    }
    let n = a.n;
    let rows = a
        .rows
        .iter()
        .enumerate()
        .map(|(i, &r)| r ^ (row_mask(n) & !((1u64 << i) - 1)))
        .collect();
    Ok(BoolMatrix { n, rows })
}

/// Drops the first column and the last row: `result(i, j) = A(i, j + 1)`.
pub fn crop_first_col_last_row(a: &BoolMatrix) -> Result<BoolMatrix> {
    if a.n < 2 {
        return Err(Error::InvalidDimension {
            n: a.n,
            reason: "cropping needs at least a 2x2 matrix",
        });
    }
    let m = a.n - 1;
    Ok(BoolMatrix {
        n: m,
        rows: a.rows[..m].iter().map(|r| r >> 1).collect(),
    })
}

/// Subsets of the `n x n` Boolean matrices that are enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Shape {
    Full,
    Upper,
    Lower,
    Stair,
}

impl Shape {
    pub fn cap(self) -> usize {
        match self {
            Shape::Full => 4,
            Shape::Upper | Shape::Lower => 5,
            Shape::Stair => 10,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Shape::Full => "full",
            Shape::Upper => "upper",
            Shape::Lower => "lower",
            Shape::Stair => "stair",
        }
    }

    pub fn contains(self, m: &BoolMatrix) -> bool {
        match self {
            Shape::Full => true,
            Shape::Upper => m.is_upper_triangular(),
            Shape::Lower => m.is_lower_triangular(),
            Shape::Stair => m.is_stair_triangular(),
        }
    }

    /// Closed-form size of the set.
    pub fn expected_count(self, n: usize) -> u128 {
        match self {
            Shape::Full => 1u128 << (n * n),
            Shape::Upper | Shape::Lower => 1u128 << (n * (n + 1) / 2),
            Shape::Stair => crate::counting::catalan(n as u64),
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "full" => Ok(Shape::Full),
            "upper" => Ok(Shape::Upper),
            "lower" => Ok(Shape::Lower),
            "stair" => Ok(Shape::Stair),
            other => Err(Error::Parse(format!("unknown matrix shape '{other}'"))),
        }
    }
}

/// All matrices of the shape, ascending in row-major bit order.
pub fn enumerate_matrices(n: usize, shape: Shape) -> Result<Vec<BoolMatrix>> {
    if n > shape.cap() {
        return Err(Error::CapExceeded {
            what: format!("{shape} matrices"),
            n,
            cap: shape.cap(),
        });
    }
    enumerate_matrices_uncapped(n, shape)
}

pub fn enumerate_matrices_uncapped(n: usize, shape: Shape) -> Result<Vec<BoolMatrix>> {
    check_dim(n)?;
    if shape == Shape::Stair {
        return Ok(enumerate_stair(n));
    }
    let free: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| match shape {
            Shape::Upper => i <= j,
            Shape::Lower => j <= i,
            _ => true,
        })
        .collect();
    let k = free.len();
    if k >= 64 {
        return Err(Error::CapExceeded {
            what: format!("{shape} matrices"),
            n,
            cap: shape.cap(),
        });
    }
    Ok((0..1u64 << k)
        .map(|x| {
            let mut m = BoolMatrix::zero(n);
            for (p, &(i, j)) in free.iter().enumerate() {
                if (x >> (k - 1 - p)) & 1 == 1 {
                    m.rows[i] |= 1 << j;
                }
            }
            m
        })
        .collect())
}

/// Stair matrices are determined by the last column `r_i >= i` reached by row
/// `i`, with `r` weakly increasing.
fn enumerate_stair(n: usize) -> Vec<BoolMatrix> {
    fn go(n: usize, reach: &mut Vec<usize>, out: &mut Vec<BoolMatrix>) {
        let i = reach.len() + 1;
        if i > n {
            out.push(BoolMatrix::from_fn(n, |a, b| a <= b && b <= reach[a - 1]));
            return;
        }
        let lo = reach.last().copied().unwrap_or(1).max(i);
        for r in lo..=n {
            reach.push(r);
            go(n, reach, out);
            reach.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::with_capacity(n), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> BoolMatrix {
        s.parse().unwrap()
    }

    #[test]
    fn addition() {
        assert_eq!(mat_add(&m("00/10"), &m("10/10")).unwrap(), m("10/10"));
        let a = m("101/011/110");
        assert_eq!(mat_add(&a, &a).unwrap(), a);
        assert_eq!(mat_add(&a, &BoolMatrix::zero(3)).unwrap(), a);
        assert!(mat_add(&a, &BoolMatrix::zero(2)).is_err());
    }

    #[test]
    fn multiplication() {
        assert_eq!(mat_mul(&m("00/11"), &m("10/10")).unwrap(), m("00/10"));
        let a = m("101/011/110");
        assert_eq!(mat_mul(&a, &BoolMatrix::identity(3)).unwrap(), a);
        assert_eq!(mat_mul(&a, &BoolMatrix::zero(3)).unwrap(), BoolMatrix::zero(3));
    }

    #[test]
    fn triangular_predicates() {
        let lower = m("10/11");
        assert!(lower.is_lower_triangular() && !lower.is_upper_triangular());
        for n in 1..5 {
            for x in [BoolMatrix::identity(n), BoolMatrix::zero(n)] {
                assert!(x.is_lower_triangular() && x.is_upper_triangular());
            }
        }
    }

    #[test]
    fn stair_predicate() {
        assert!(m("1000/0100/0011/0001").is_stair_triangular());
        assert!(BoolMatrix::identity(5).is_stair_triangular());
        assert!(!m("101/010/001").is_stair_triangular());
        // row condition holds but column (2,3) missing
        assert!(!m("111/010/001").is_stair_triangular());
        assert!(!m("10/11").is_stair_triangular());
        assert!(!BoolMatrix::zero(2).is_stair_triangular());
    }

    #[test]
    fn antidiagonal_and_conjugation() {
        assert_eq!(antidiagonal(2), m("01/10"));
        assert_eq!(antidiagonal(1), m("1"));
        for n in 1..=6 {
            let p = antidiagonal(n);
            assert_eq!(mat_mul(&p, &p).unwrap(), BoolMatrix::identity(n));
            assert_eq!(conjugate_by_p(&BoolMatrix::identity(n)), BoolMatrix::identity(n));
        }
        let d = m("000/110/111");
        assert_eq!(conjugate_by_p(&d), m("111/011/000"));
        assert_eq!(conjugate_by_p(&conjugate_by_p(&d)), d);
        let p = antidiagonal(3);
        let direct = mat_mul(&mat_mul(&p, &d).unwrap(), &p).unwrap();
        assert_eq!(conjugate_by_p(&d), direct);
    }

    #[test]
    fn negation_and_crop() {
        let s = m("1000/0100/0011/0001");
        let negated = negate_upper_triangle(&s).unwrap();
        assert_eq!(negated, m("0111/0011/0000/0000"));
        assert_eq!(negate_upper_triangle(&negated).unwrap(), s);
        assert_eq!(negate_upper_triangle(&BoolMatrix::identity(2)).unwrap(), m("01/00"));
        assert!(negate_upper_triangle(&m("10/11")).is_err());

        assert_eq!(crop_first_col_last_row(&negated).unwrap(), m("111/011/000"));
        assert_eq!(crop_first_col_last_row(&BoolMatrix::zero(2)).unwrap(), m("0"));
        assert_eq!(crop_first_col_last_row(&BoolMatrix::identity(3)).unwrap(), m("00/10"));
        assert!(crop_first_col_last_row(&m("1")).is_err());
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(enumerate_matrices(3, Shape::Upper).unwrap().len(), 64);
        assert_eq!(enumerate_matrices(2, Shape::Full).unwrap().len(), 16);
        assert_eq!(enumerate_matrices(3, Shape::Stair).unwrap().len(), 5);
        assert_eq!(enumerate_matrices(4, Shape::Lower).unwrap().len(), 1024);
        for shape in [Shape::Full, Shape::Upper, Shape::Lower, Shape::Stair] {
            let all = enumerate_matrices(3, shape).unwrap();
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            assert!(all.iter().all(|x| shape.contains(x)));
        }
        let full2: Vec<String> = enumerate_matrices(2, Shape::Full)
            .unwrap()
            .iter()
            .map(|x| x.to_string().replace('\n', ""))
            .collect();
        let expected: Vec<String> = (0..16).map(|x| format!("{x:04b}")).collect();
        assert_eq!(full2, expected);
        assert!(matches!(
            enumerate_matrices(5, Shape::Full),
            Err(Error::CapExceeded { cap: 4, .. })
        ));
    }

    #[test]
    fn stair_matches_filtered_upper() {
        for n in 1..=5 {
            let filtered: Vec<BoolMatrix> = enumerate_matrices(n, Shape::Upper)
                .unwrap()
                .into_iter()
                .filter(BoolMatrix::is_stair_triangular)
                .collect();
            assert_eq!(filtered, enumerate_matrices(n, Shape::Stair).unwrap());
        }
    }

    #[test]
    fn text_and_json() {
        let a = m("10\n11");
        assert_eq!(a.to_string(), "10\n11");
        assert_eq!(serde_json::to_string(&a).unwrap(), "[[1,0],[1,1]]");
        let back: BoolMatrix = serde_json::from_str("[[1,0],[1,1]]").unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<BoolMatrix>("[[1,2],[0,0]]").is_err());
        assert!("10\n1".parse::<BoolMatrix>().is_err());
        assert!("1x".parse::<BoolMatrix>().is_err());
    }
}
