//! Self-maps of the chain `1 < 2 < ... < n`.
//!
//! Transformations act on the **right**: the image of `i` under `a` is written
//! `ia`, and the product `ab` first applies `a` and then `b`, so that
//! `i(ab) = (ia)b`. [`compose`] follows this convention throughout the crate.
//!
//! All values are 1-based. The monoids handled here are
//!
//! * `O_n`: order-preserving maps (`i <= j` implies `ia <= ja`),
//! * `C_n`: extensive order-preserving maps (`i <= ia`),
//! * `C-_n`: decreasing order-preserving maps (`ia <= i`).
//!
//! Each carries the pointwise-max addition, which turns it into an
//! additively idempotent semiring.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` enumerated for `O_n` without `force`.
pub const ORDER_PRESERVING_CAP: usize = 8;
/// Largest `n` enumerated for `C_n` and `C-_n` without `force`.
pub const CATALAN_CAP: usize = 10;
/// Digit-string encoding is only used up to this chain size.
pub const DIGIT_ENCODING_MAX: usize = 9;

/// A self-map of `{1, ..., n}` stored as its image vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Transformation {
    images: Vec<u32>,
}

impl Transformation {
    /// Builds a transformation from 1-based images. The chain size is `images.len()`.
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidDimension {
                n,
                reason: "a transformation needs at least one point",
            });
        }
        if let Some(&bad) = images.iter().find(|&&v| v == 0 || v as usize > n) {
            return Err(Error::OutOfRange {
                value: u64::from(bad),
                n,
            });
        }
        Ok(Transformation { images })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "the chain must be nonempty");
        Transformation {
            images: (1..=n as u32).collect(),
        }
    }

    /// Constant map onto `value`.
    pub fn constant(n: usize, value: u32) -> Result<Self> {
        Self::new(vec![value; n])
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> u32 {
        self.images[i - 1]
    }

    pub fn is_order_preserving(&self) -> bool {
        self.images.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn is_extensive(&self) -> bool {
        self.points().all(|(i, v)| i <= v)
    }

    pub fn is_decreasing(&self) -> bool {
        self.points().all(|(i, v)| v <= i)
    }

    pub fn belongs_to(&self, class: MonoidClass) -> bool {
        self.is_order_preserving()
            && match class {
                MonoidClass::O => true,
                MonoidClass::C => self.is_extensive(),
                MonoidClass::Cminus => self.is_decreasing(),
            }
    }

    /// Names the first defining predicate of `class` that fails, if any.
    pub fn check_class(&self, class: MonoidClass) -> Result<()> {
        if !self.is_order_preserving() {
            return Err(Error::Domain(self.to_string(), "order-preserving"));
        }
        match class {
            MonoidClass::C if !self.is_extensive() => {
                Err(Error::Domain(self.to_string(), "extensive"))
            }
            MonoidClass::Cminus if !self.is_decreasing() => {
                Err(Error::Domain(self.to_string(), "decreasing"))
            }
            _ => Ok(()),
        }
    }

    fn points(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.images.iter().enumerate().map(|(i, &v)| (i as u32 + 1, v))
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= DIGIT_ENCODING_MAX {
            for v in &self.images {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.images.iter().map(u32::to_string).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Transformation({self})")
    }
}

impl FromStr for Transformation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_transformation(s)
    }
}

impl TryFrom<Vec<u32>> for Transformation {
    type Error = Error;

    fn try_from(images: Vec<u32>) -> Result<Self> {
        Transformation::new(images)
    }
}

impl From<Transformation> for Vec<u32> {
    fn from(t: Transformation) -> Self {
        t.images
    }
}

/// Parses either the digit encoding `1244` (chains of size at most 9) or a
/// comma-separated list `10,1,3`, optionally wrapped in brackets.
pub fn parse_transformation(text: &str) -> Result<Transformation> {
    let body = text.trim();
    let body = body
        .strip_prefix('[')
        .and_then(|b| b.strip_suffix(']'))
        .unwrap_or(body)
        .trim();
    if body.is_empty() {
        return Err(Error::Parse("empty transformation".into()));
    }
    let images = if body.contains(',') {
        body.split(',')
            .map(|part| {
                let part = part.trim();
                part.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("'{part}' is not a positive integer")))
            })
            .collect::<Result<Vec<_>>>()?
    } else {
        if !body.chars().all(|c| c.is_ascii_digit()) {
            return Err(Error::Parse(format!("'{body}' is not a digit string")));
        }
        if body.len() > DIGIT_ENCODING_MAX {
            return Err(Error::Parse(format!(
                "digit encoding is limited to n <= {DIGIT_ENCODING_MAX}; use commas"
            )));
        }
        body.bytes().map(|b| u32::from(b - b'0')).collect()
    };
    Transformation::new(images)
}

pub fn format_transformation(a: &Transformation) -> String {
    a.to_string()
}

/// The three monoids of order-preserving maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonoidClass {
    /// All order-preserving maps.
    O,
    /// Extensive order-preserving maps.
    C,
    /// Decreasing order-preserving maps.
    Cminus,
}

impl MonoidClass {
    pub fn cap(self) -> usize {
        match self {
            MonoidClass::O => ORDER_PRESERVING_CAP,
            MonoidClass::C | MonoidClass::Cminus => CATALAN_CAP,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MonoidClass::O => "O",
            MonoidClass::C => "C",
            MonoidClass::Cminus => "C-",
        }
    }

    /// Closed-form size of the class on an `n`-chain.
    pub fn expected_count(self, n: usize) -> u128 {
        match self {
            MonoidClass::O => crate::counting::order_preserving_count(n as u64),
            MonoidClass::C | MonoidClass::Cminus => crate::counting::catalan(n as u64),
        }
    }
}

impl fmt::Display for MonoidClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonoidClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "o" => Ok(MonoidClass::O),
            "c" => Ok(MonoidClass::C),
            "cminus" | "c-" => Ok(MonoidClass::Cminus),
            other => Err(Error::Parse(format!("unknown monoid class '{other}'"))),
        }
    }
}

fn same_size(a: &Transformation, b: &Transformation) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::Dimension {
            left: a.n(),
            right: b.n(),
        });
    }
    Ok(())
}

/// Right-action product: `i(ab) = (ia)b`.
pub fn compose(a: &Transformation, b: &Transformation) -> Result<Transformation> {
    same_size(a, b)?;
    Ok(Transformation {
        images: a.images.iter().map(|&v| b.apply(v as usize)).collect(),
    })
}

/// Pointwise maximum; the semiring addition.
pub fn add(a: &Transformation, b: &Transformation) -> Result<Transformation> {
    same_size(a, b)?;
    Ok(Transformation {
        images: a.images.iter().zip(&b.images).map(|(&x, &y)| x.max(y)).collect(),
    })
}

/// Pointwise minimum; the lattice meet.
pub fn meet(a: &Transformation, b: &Transformation) -> Result<Transformation> {
    same_size(a, b)?;
    Ok(Transformation {
        images: a.images.iter().zip(&b.images).map(|(&x, &y)| x.min(y)).collect(),
    })
}

/// Pointwise comparison; coincides with `add(a, b) == b`.
pub fn leq(a: &Transformation, b: &Transformation) -> Result<bool> {
    same_size(a, b)?;
    Ok(a.images.iter().zip(&b.images).all(|(x, y)| x <= y))
}

/// `k`-fold product; `power(a, 0)` is the identity map.
pub fn power(a: &Transformation, k: u32) -> Transformation {
    let mut acc = Transformation::identity(a.n());
    let mut base = a.clone();
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            acc = compose(&acc, &base).expect("same chain");
        }
        k >>= 1;
        if k > 0 {
            base = compose(&base, &base).expect("same chain");
        }
    }
    acc
}

/// Conjugation by the order reversal of the chain: `i -> m+1 - (m+1-i)a` on an
/// `m`-chain. Swaps extensive and decreasing maps and preserves products.
pub fn bar(a: &Transformation) -> Transformation {
    let m = a.n() as u32;
    Transformation {
        images: (1..=m).map(|i| m + 1 - a.apply((m + 1 - i) as usize)).collect(),
    }
}

/// All maps of the class in lexicographic order of image vectors.
pub fn enumerate(n: usize, class: MonoidClass) -> Result<Vec<Transformation>> {
    if n > class.cap() {
        return Err(Error::CapExceeded {
            what: format!("enumeration of {class}"),
            n,
            cap: class.cap(),
        });
    }
    enumerate_uncapped(n, class)
}

/// As [`enumerate`] without the size cap.
pub fn enumerate_uncapped(n: usize, class: MonoidClass) -> Result<Vec<Transformation>> {
    if n == 0 {
        return Err(Error::InvalidDimension {
            n,
            reason: "the chain must be nonempty",
        });
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    fill(n, class, &mut current, &mut out);
    Ok(out)
}

fn fill(n: usize, class: MonoidClass, current: &mut Vec<u32>, out: &mut Vec<Transformation>) {
    let pos = current.len() as u32 + 1;
    if pos as usize > n {
        out.push(Transformation {
            images: current.clone(),
        });
        return;
    }
    let floor = current.last().copied().unwrap_or(1);
    let (lo, hi) = match class {
        MonoidClass::O => (floor, n as u32),
        MonoidClass::C => (floor.max(pos), n as u32),
        MonoidClass::Cminus => (floor, pos),
    };
    for v in lo..=hi {
        current.push(v);
        fill(n, class, current, out);
        current.pop();
    }
}

/// Covering pairs `(i, j)` with `elements[i] < elements[j]` and nothing strictly
/// between them, sorted by `(i, j)`.
pub fn hasse_edges(elements: &[Transformation]) -> Vec<(usize, usize)> {
    let below = |x: &Transformation, y: &Transformation| x != y && leq(x, y).unwrap_or(false);
    let mut edges = Vec::new();
    for (i, a) in elements.iter().enumerate() {
        for (j, b) in elements.iter().enumerate() {
            if !below(a, b) {
                continue;
            }
            let covered = !elements.iter().any(|c| below(a, c) && below(c, b));
            if covered {
                edges.push((i, j));
            }
        }
    }
    edges
}
