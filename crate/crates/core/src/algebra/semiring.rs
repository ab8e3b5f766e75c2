use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Carriers up to this size get full operation tables at construction.
pub const TABLE_THRESHOLD: usize = 1024;
/// Carriers up to this size have their axioms checked at construction.
pub const AXIOM_CHECK_THRESHOLD: usize = 200;

pub type BinaryOp<T> = Arc<dyn Fn(&T, &T) -> T + Send + Sync>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Operation {
    Mul,
    Add,
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Operation::Mul => "mul",
            Operation::Add => "add",
        })
    }
}

/// Which operations a check looks at. `Mul` alone is the multiplicative
/// reduct, `Add` alone the additive one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ops {
    Mul,
    Add,
    Both,
}

impl Ops {
    pub fn operations(self) -> &'static [Operation] {
        match self {
            Ops::Mul => &[Operation::Mul],
            Ops::Add => &[Operation::Add],
            Ops::Both => &[Operation::Mul, Operation::Add],
        }
    }
}

impl fmt::Display for Ops {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ops::Mul => "{mul}",
            Ops::Add => "{add}",
            Ops::Both => "{mul,add}",
        })
    }
}

/// A finite additively idempotent semiring over an indexed carrier.
///
/// Elements are referred to by their position in `elements`. Operation tables
/// are precomputed for carriers up to [`TABLE_THRESHOLD`]; larger carriers
/// evaluate the operations on demand and panic if a result leaves the carrier.
pub struct FiniteSemiring<T> {
    name: String,
    elements: Vec<T>,
    index: HashMap<T, usize>,
    add_op: BinaryOp<T>,
    mul_op: BinaryOp<T>,
    add_table: Option<Vec<u32>>,
    mul_table: Option<Vec<u32>>,
    axioms_checked: bool,
}

impl<T> fmt::Debug for FiniteSemiring<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteSemiring")
            .field("name", &self.name)
            .field("len", &self.elements.len())
            .field("axioms_checked", &self.axioms_checked)
            .finish()
    }
}

impl<T> FiniteSemiring<T>
where
    T: Clone + Eq + Hash + fmt::Display,
{
    /// Builds the structure and, for carriers up to [`AXIOM_CHECK_THRESHOLD`],
    /// verifies the ai-semiring axioms.
    pub fn new(
        name: impl Into<String>,
        elements: Vec<T>,
        add: BinaryOp<T>,
        mul: BinaryOp<T>,
    ) -> Result<Self> {
        let s = Self::new_trusted(name, elements, add, mul)?;
        if s.len() <= AXIOM_CHECK_THRESHOLD {
            s.check_axioms()?;
            Ok(FiniteSemiring {
                axioms_checked: true,
                ..s
            })
        } else {
            Ok(s)
        }
    }

    /// Builds the structure without checking axioms. Closure under both
    /// operations is still verified whenever tables are built.
    pub fn new_trusted(
        name: impl Into<String>,
        elements: Vec<T>,
        add: BinaryOp<T>,
        mul: BinaryOp<T>,
    ) -> Result<Self> {
        let name = name.into();
        if elements.is_empty() {
            return Err(Error::InvalidDimension {
                n: 0,
                reason: "a semiring carrier must be nonempty",
            });
        }
        let mut index = HashMap::with_capacity(elements.len());
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(Error::Parse(format!("duplicate element {} in {name}", render(e))));
            }
        }
        let mut s = FiniteSemiring {
            name,
            elements,
            index,
            add_op: add,
            mul_op: mul,
            add_table: None,
            mul_table: None,
            axioms_checked: false,
        };
        if s.len() <= TABLE_THRESHOLD {
            s.add_table = Some(s.build_table(&s.add_op)?);
            s.mul_table = Some(s.build_table(&s.mul_op)?);
        }
        Ok(s)
    }

    fn build_table(&self, op: &BinaryOp<T>) -> Result<Vec<u32>> {
        let n = self.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &self.elements {
            for b in &self.elements {
                let c = op(a, b);
                let k = self
                    .index
                    .get(&c)
                    .ok_or_else(|| Error::NotInCarrier(render(&c)))?;
                table.push(*k as u32);
            }
        }
        Ok(table)
    }

    /// The substructure on `indices`, which must be closed under both operations.
    pub fn subsemiring(&self, name: impl Into<String>, indices: &[usize]) -> Result<Self> {
        let elements = indices.iter().map(|&i| self.elements[i].clone()).collect();
        Self::new(name, elements, self.add_op.clone(), self.mul_op.clone())
    }

    /// Whether `indices` is closed under both operations.
    pub fn is_closed(&self, indices: &[usize]) -> bool {
        let mut member = vec![false; self.len()];
        for &i in indices {
            member[i] = true;
        }
        indices.iter().all(|&a| {
            indices
                .iter()
                .all(|&b| member[self.add(a, b)] && member[self.mul(a, b)])
        })
    }

    pub fn index_of(&self, e: &T) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// Checks the ai-semiring axioms exhaustively over all triples.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.len();
        let fail = |axiom: &'static str, items: &[usize]| {
            let at: Vec<String> = items.iter().map(|&i| render(&self.elements[i])).collect();
            Err(Error::AxiomViolation {
                structure: self.name.clone(),
                axiom,
                at: at.join(", "),
            })
        };
        for a in 0..n {
            if self.add(a, a) != a {
                return fail("additive idempotency", &[a]);
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("additive commutativity", &[a, b]);
                }
                let ab_add = self.add(a, b);
                let ab_mul = self.mul(a, b);
                for c in 0..n {
                    if self.add(ab_add, c) != self.add(a, self.add(b, c)) {
                        return fail("additive associativity", &[a, b, c]);
                    }
                    if self.mul(ab_mul, c) != self.mul(a, self.mul(b, c)) {
                        return fail("multiplicative associativity", &[a, b, c]);
                    }
                    let bc_add = self.add(b, c);
                    if self.mul(a, bc_add) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail("left distributivity", &[a, b, c]);
                    }
                    if self.mul(bc_add, a) != self.add(self.mul(b, a), self.mul(c, a)) {
                        return fail("right distributivity", &[a, b, c]);
                    }
                }
            }
        }
        Ok(())
    }

    fn lookup(&self, op: &BinaryOp<T>, a: usize, b: usize) -> usize {
        let c = op(&self.elements[a], &self.elements[b]);
        match self.index.get(&c) {
            Some(&k) => k,
            None => panic!("operation on {} left the carrier: {}", self.name, render(&c)),
        }
    }
}

impl<T> FiniteSemiring<T> {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &T {
        &self.elements[i]
    }

    pub fn axioms_checked(&self) -> bool {
        self.axioms_checked
    }

    pub fn op(&self, op: Operation, a: usize, b: usize) -> usize
    where
        T: Clone + Eq + Hash + fmt::Display,
    {
        match op {
            Operation::Add => self.add(a, b),
            Operation::Mul => self.mul(a, b),
        }
    }

    pub fn add(&self, a: usize, b: usize) -> usize
    where
        T: Clone + Eq + Hash + fmt::Display,
    {
        match &self.add_table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.lookup(&self.add_op, a, b),
        }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize
    where
        T: Clone + Eq + Hash + fmt::Display,
    {
        match &self.mul_table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.lookup(&self.mul_op, a, b),
        }
    }

    /// `a^k` for `k >= 1` by repeated squaring.
    pub fn pow(&self, a: usize, k: u32) -> usize
    where
        T: Clone + Eq + Hash + fmt::Display,
    {
        assert!(k >= 1, "exponent must be positive");
        let mut k = k;
        let mut base = a;
        let mut acc: Option<usize> = None;
        loop {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => base,
                    Some(x) => self.mul(x, base),
                });
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = self.mul(base, base);
        }
        acc.expect("k >= 1")
    }
}

/// Single-line rendering of an element (matrix rows joined by `/`).
pub fn render<T: fmt::Display>(e: &T) -> String {
    e.to_string().replace('\n', "/")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn max_min_chain(n: u32) -> Result<FiniteSemiring<u32>> {
        FiniteSemiring::new(
            format!("chain{n}"),
            (0..n).collect(),
            Arc::new(|a: &u32, b: &u32| *a.max(b)),
            Arc::new(|a: &u32, b: &u32| *a.min(b)),
        )
    }

    #[test]
    fn tables_and_axioms() {
        let s = max_min_chain(4).unwrap();
        assert!(s.axioms_checked());
        assert_eq!(s.add(1, 3), 3);
        assert_eq!(s.mul(1, 3), 1);
        assert_eq!(s.pow(2, 5), 2);
    }

    #[test]
    fn detects_axiom_violations() {
        let err = FiniteSemiring::new(
            "bad",
            vec![0u32, 1],
            Arc::new(|a: &u32, b: &u32| (a + b) % 2),
            Arc::new(|a: &u32, b: &u32| a * b),
        )
        .unwrap_err();
        assert!(matches!(err, Error::AxiomViolation { axiom: "additive idempotency", .. }));
    }

    #[test]
    fn detects_leaving_the_carrier() {
        let err = FiniteSemiring::new(
            "open",
            vec![1u32, 2],
            Arc::new(|a: &u32, b: &u32| *a.max(b)),
            Arc::new(|a: &u32, b: &u32| a * b),
        )
        .unwrap_err();
        assert_eq!(err, Error::NotInCarrier("4".into()));
    }

    #[test]
    fn pow_matches_naive() {
        let s = FiniteSemiring::new(
            "mod-mult",
            (0u32..6).collect(),
            Arc::new(|a: &u32, b: &u32| *a.max(b)),
            Arc::new(|a: &u32, b: &u32| *a.max(b)),
        )
        .unwrap();
        for a in 0..s.len() {
            let mut naive = a;
            for k in 1..10 {
                assert_eq!(s.pow(a, k), naive);
                naive = s.mul(naive, a);
            }
        }
    }

    #[test]
    fn subsemiring_closure() {
        let s = max_min_chain(4).unwrap();
        assert!(s.is_closed(&[0, 2]));
        let sub = s.subsemiring("sub", &[0, 2]).unwrap();
        assert_eq!(sub.len(), 2);
        assert_eq!(sub.add(0, 1), 1);
    }
}
