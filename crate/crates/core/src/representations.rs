//! Matrix representations of Catalan monoids and semirings.
//!
//! * [`rep_b`]: the graph matrix of a map, `(i, ia)` set. Multiplicative only.
//! * [`rep_s`]: `(i, j)` set iff `i <= j <= ia`. An isomorphism from the
//!   extensive semiring `C_n` onto the stair triangular matrices.
//! * [`rep_m`]: row `i` holds `(i+1)a - 1` left-justified 1s. Sends the
//!   decreasing semiring `C-_{n+1}` into lower triangular `n x n` matrices.
//! * [`rep_m_conjugated`]: `P M(a) P`, landing in upper triangular matrices.
//!
//! The image of [`rep_m`] is read as a Young diagram inside the staircase
//! `(n, n-1, ..., 1)` with rows counted from the bottom (French convention).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::boolean_matrix::{conjugate_by_p, crop_first_col_last_row, negate_upper_triangle, BoolMatrix};
use crate::chain_maps::{bar, MonoidClass, Transformation};
use crate::error::{Error, Result};

/// Largest staircase enumerated by [`enumerate_staircase_partitions`] without `force`.
pub const STAIRCASE_CAP: usize = 12;

/// Graph matrix: row `i` has its single 1 in column `ia`.
pub fn rep_b(a: &Transformation) -> BoolMatrix {
    BoolMatrix::from_fn(a.n(), |i, j| a.apply(i) as usize == j)
}

/// Stair matrix of an extensive order-preserving map.
pub fn rep_s(a: &Transformation) -> Result<BoolMatrix> {
    a.check_class(MonoidClass::C)?;
    Ok(BoolMatrix::from_fn(a.n(), |i, j| i <= j && j <= a.apply(i) as usize))
}

/// Lower triangular `n x n` matrix of a decreasing order-preserving map on `n + 1` points.
pub fn rep_m(a: &Transformation) -> Result<BoolMatrix> {
    a.check_class(MonoidClass::Cminus)?;
    if a.n() < 2 {
        return Err(Error::InvalidDimension {
            n: a.n(),
            reason: "the row-length map needs a chain of at least two points",
        });
    }
    let n = a.n() - 1;
    Ok(BoolMatrix::from_fn(n, |i, j| a.apply(i + 1) as usize > j))
}

/// `P M(a) P`, an upper triangular matrix.
pub fn rep_m_conjugated(a: &Transformation) -> Result<BoolMatrix> {
    rep_m(a).map(|m| conjugate_by_p(&m))
}

/// Negate the upper triangle of `S(a)`, then drop its first column and last row.
///
/// For `a` extensive on `n + 1` points the result equals `rep_m_conjugated(bar(a))`.
pub fn complement_pipeline(a: &Transformation) -> Result<BoolMatrix> {
    let steps = ComplementSteps::new(a)?;
    Ok(steps.cropped)
}

/// Every intermediate value of the complement construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplementSteps {
    pub alpha: Transformation,
    pub stair: BoolMatrix,
    pub negated: BoolMatrix,
    pub cropped: BoolMatrix,
    pub alpha_bar: Transformation,
    pub m_of_bar: BoolMatrix,
    pub pmp_of_bar: BoolMatrix,
}

impl ComplementSteps {
    pub fn new(a: &Transformation) -> Result<Self> {
        if a.n() < 2 {
            return Err(Error::InvalidDimension {
                n: a.n(),
                reason: "the complement construction needs a chain of at least two points",
            });
        }
        let stair = rep_s(a)?;
        let negated = negate_upper_triangle(&stair)?;
        let cropped = crop_first_col_last_row(&negated)?;
        let alpha_bar = bar(a);
        let m_of_bar = rep_m(&alpha_bar)?;
        let pmp_of_bar = conjugate_by_p(&m_of_bar);
        Ok(ComplementSteps {
            alpha: a.clone(),
            stair,
            negated,
            cropped,
            alpha_bar,
            m_of_bar,
            pmp_of_bar,
        })
    }

    /// Whether the two routes around the cycle agree.
    pub fn closes(&self) -> bool {
        self.cropped == self.pmp_of_bar
    }
}

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse("partition parts must be weakly decreasing".into()));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Fits inside `(n, n-1, ..., 1)`.
    pub fn in_staircase(&self, n: usize) -> bool {
        self.parts.len() <= n
            && self
                .parts
                .iter()
                .enumerate()
                .all(|(k, &p)| p as usize <= n - k)
    }

    /// Cells drawn bottom row first, `#` for a cell and `.` for the rest of the staircase.
    pub fn diagram(&self, n: usize) -> String {
        let mut lines = Vec::with_capacity(n);
        for k in 0..n {
            let width = n - k;
            let filled = self.parts.get(k).copied().unwrap_or(0) as usize;
            let row: String = (0..width).map(|c| if c < filled { '#' } else { '.' }).collect();
            lines.push(row);
        }
        lines.reverse();
        lines.join("\n")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Reads a `rep_m` image as a Young diagram: row lengths from row `n` up to
/// row 1, zeros dropped.
pub fn matrix_to_partition(a: &BoolMatrix) -> Result<Partition> {
    if !a.is_lower_triangular() {
        return Err(Error::MalformedMatrix("not lower triangular".into()));
    }
    let mut lengths = Vec::with_capacity(a.n());
    for i in 1..=a.n() {
        let row = a.row_bits(i);
        // left-justified: bits 0..len set, nothing above
        let len = row.trailing_ones();
        if len < 64 && row >> len != 0 {
            return Err(Error::MalformedMatrix(format!("row {i} is not left-justified")));
        }
        lengths.push(len);
    }
    if lengths.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::MalformedMatrix(
            "row lengths must weakly increase from top to bottom".into(),
        ));
    }
    Ok(Partition {
        parts: lengths.into_iter().rev().filter(|&l| l > 0).collect(),
    })
}

/// Partitions inside the staircase `(n, ..., 1)`, ordered like the decreasing
/// maps they come from: lexicographically by top-to-bottom row lengths.
pub fn enumerate_staircase_partitions(n: usize) -> Result<Vec<Partition>> {
    if n > STAIRCASE_CAP {
        return Err(Error::CapExceeded {
            what: "staircase partitions".into(),
            n,
            cap: STAIRCASE_CAP,
        });
    }
    enumerate_staircase_partitions_uncapped(n)
}

pub fn enumerate_staircase_partitions_uncapped(n: usize) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::InvalidDimension {
            n,
            reason: "the staircase needs at least one row",
        });
    }
    fn go(n: usize, rows: &mut Vec<u32>, out: &mut Vec<Partition>) {
        let i = rows.len() + 1;
        if i > n {
            out.push(Partition {
                parts: rows.iter().rev().copied().filter(|&l| l > 0).collect(),
            });
            return;
        }
        let lo = rows.last().copied().unwrap_or(0);
        for len in lo..=i as u32 {
            rows.push(len);
            go(n, rows, out);
            rows.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::with_capacity(n), &mut out);
    Ok(out)
}

/// One element with every representation whose domain contains it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepresentationRecord {
    pub transformation: Transformation,
    #[serde(rename = "B")]
    pub b: BoolMatrix,
    #[serde(rename = "S", skip_serializing_if = "Option::is_none")]
    pub s: Option<BoolMatrix>,
    #[serde(rename = "M", skip_serializing_if = "Option::is_none")]
    pub m: Option<BoolMatrix>,
    #[serde(rename = "PMP", skip_serializing_if = "Option::is_none")]
    pub pmp: Option<BoolMatrix>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<Partition>,
}

impl RepresentationRecord {
    pub fn new(a: &Transformation) -> Self {
        let m = rep_m(a).ok();
        RepresentationRecord {
            transformation: a.clone(),
            b: rep_b(a),
            s: rep_s(a).ok(),
            pmp: m.as_ref().map(conjugate_by_p),
            partition: m.as_ref().and_then(|m| matrix_to_partition(m).ok()),
            m,
        }
    }
}
