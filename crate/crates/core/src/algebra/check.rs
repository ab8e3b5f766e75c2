//! Exhaustive checks over finite carriers: identities, homomorphisms,
//! injectivity and isomorphism search.
//!
//! Every failing check carries a witness that can be re-evaluated against the
//! structures it came from.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::semiring::{render, FiniteSemiring, Operation, Ops};
use super::term::Identity;
use crate::error::{Error, Result};

/// Default number of assignments an identity check may enumerate.
pub const DEFAULT_BUDGET: u64 = 100_000_000;
/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "CATALAN_BUDGET";
/// Largest carrier handed to the isomorphism search.
pub const ISOMORPHISM_CAP: usize = 42;
/// Search nodes the isomorphism search may visit.
pub const ISOMORPHISM_NODE_BUDGET: u64 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Binding {
    pub variable: String,
    pub index: usize,
    pub value: String,
}

/// Why a check failed: the offending assignment and the two values that differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub bindings: Vec<Binding>,
    pub relation: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub pairs_checked: u64,
    /// Image index of every source element when an isomorphism was found.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bijection: Option<Vec<usize>>,
}

impl CheckReport {
    pub fn holding(pairs_checked: u64) -> Self {
        CheckReport {
            verdict: Verdict::Holds,
            witness: None,
            pairs_checked,
            bijection: None,
        }
    }

    pub fn failing(pairs_checked: u64, witness: Witness) -> Self {
        CheckReport {
            verdict: Verdict::Fails,
            witness: Some(witness),
            pairs_checked,
            bijection: None,
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    /// Carrier indices of the witness bindings, in binding order.
    pub fn witness_indices(&self) -> Option<Vec<usize>> {
        self.witness
            .as_ref()
            .map(|w| w.bindings.iter().map(|b| b.index).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub budget: u64,
    pub parallel: bool,
}

impl Default for CheckOptions {
    /// Budget from `CATALAN_BUDGET` when set, sequential evaluation.
    fn default() -> Self {
        let budget = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_BUDGET);
        CheckOptions {
            budget,
            parallel: false,
        }
    }
}

fn binding<T: fmt::Display>(variable: impl Into<String>, index: usize, s: &FiniteSemiring<T>) -> Binding {
    Binding {
        variable: variable.into(),
        index,
        value: render(s.element(index)),
    }
}

/// Number of assignments `|S|^vars`, saturating.
pub fn assignment_count(len: usize, vars: usize) -> u128 {
    (0..vars).fold(1u128, |acc, _| acc.saturating_mul(len as u128))
}

fn decode(mut code: u64, len: usize, out: &mut [usize]) {
    // first variable is the most significant digit
    for slot in out.iter_mut().rev() {
        *slot = (code % len as u64) as usize;
        code /= len as u64;
    }
}

pub fn check_identity<T>(id: &Identity, s: &FiniteSemiring<T>) -> Result<CheckReport>
where
    T: Clone + Eq + Hash + fmt::Display + Sync,
{
    check_identity_with(id, s, &CheckOptions::default())
}

/// Evaluates both sides under every assignment in lexicographic order of
/// carrier indices; on failure the first offending assignment is reported.
pub fn check_identity_with<T>(id: &Identity, s: &FiniteSemiring<T>, opts: &CheckOptions) -> Result<CheckReport>
where
    T: Clone + Eq + Hash + fmt::Display + Sync,
{
    let vars = id.variables.len();
    let required = assignment_count(s.len(), vars);
    if required > u128::from(opts.budget) {
        return Err(Error::Budget {
            required,
            budget: opts.budget,
        });
    }
    let total = required as u64;
    let lhs = id.lhs.compile(&id.variables);
    let rhs = id.rhs.compile(&id.variables);
    let differs = |code: u64| -> Option<(u64, Vec<usize>, usize, usize)> {
        let mut assignment = vec![0usize; vars];
        decode(code, s.len(), &mut assignment);
        let l = lhs.eval(&assignment, s);
        let r = rhs.eval(&assignment, s);
        (l != r).then_some((code, assignment, l, r))
    };
    let found = if opts.parallel {
        (0..total).into_par_iter().find_map_first(differs)
    } else {
        (0..total).find_map(differs)
    };
    Ok(match found {
        None => CheckReport::holding(total),
        Some((code, assignment, l, r)) => {
            let bindings = id
                .variables
                .iter()
                .zip(&assignment)
                .map(|(v, &i)| binding(v.to_string(), i, s))
                .collect();
            CheckReport::failing(
                code + 1,
                Witness {
                    bindings,
                    relation: id.to_string(),
                    lhs: render(s.element(l)),
                    rhs: render(s.element(r)),
                },
            )
        }
    })
}

/// Checks `f(a o b) = f(a) o f(b)` for every ordered pair and each selected
/// operation. Pairs are visited in lexicographic order, operations in the
/// order `mul`, `add`.
pub fn check_homomorphism<A, B, F>(f: F, source: &FiniteSemiring<A>, target: &FiniteSemiring<B>, ops: Ops) -> Result<CheckReport>
where
    A: Clone + Eq + Hash + fmt::Display,
    B: Clone + Eq + Hash + fmt::Display,
    F: Fn(&A) -> B,
{
    let images = map_into(&f, source, target)?;
    let n = source.len();
    let mut pairs = 0u64;
    for a in 0..n {
        for b in 0..n {
            pairs += 1;
            for &op in ops.operations() {
                let direct = images[source.op(op, a, b)];
                let via_images = target.op(op, images[a], images[b]);
                if direct != via_images {
                    return Ok(CheckReport::failing(
                        pairs,
                        Witness {
                            bindings: vec![binding("a", a, source), binding("b", b, source)],
                            relation: format!("f(a {op} b) = f(a) {op} f(b)"),
                            lhs: render(target.element(direct)),
                            rhs: render(target.element(via_images)),
                        },
                    ));
                }
            }
        }
    }
    Ok(CheckReport::holding(pairs))
}

fn map_into<A, B, F>(f: &F, source: &FiniteSemiring<A>, target: &FiniteSemiring<B>) -> Result<Vec<usize>>
where
    A: Clone + Eq + Hash + fmt::Display,
    B: Clone + Eq + Hash + fmt::Display,
    F: Fn(&A) -> B,
{
    source
        .elements()
        .iter()
        .map(|e| {
            let image = f(e);
            target
                .index_of(&image)
                .ok_or_else(|| Error::NotInCarrier(render(&image)))
        })
        .collect()
}

/// Holds iff `f` takes `|source|` distinct values; a failure names the first
/// colliding pair.
pub fn check_injective<A, B, F>(f: F, source: &FiniteSemiring<A>) -> CheckReport
where
    A: Clone + Eq + Hash + fmt::Display,
    B: Eq + Hash + fmt::Display,
    F: Fn(&A) -> B,
{
    let mut seen: HashMap<B, usize> = HashMap::with_capacity(source.len());
    for (j, e) in source.elements().iter().enumerate() {
        let image = f(e);
        if let Some(&i) = seen.get(&image) {
            let rendered = render(&image);
            return CheckReport::failing(
                j as u64 + 1,
                Witness {
                    bindings: vec![binding("a", i, source), binding("b", j, source)],
                    relation: "f(a) = f(b) with a != b".into(),
                    lhs: rendered.clone(),
                    rhs: rendered,
                },
            );
        }
        seen.insert(image, j);
    }
    CheckReport::holding(source.len() as u64)
}

/// Searches for a bijection preserving the selected operations.
///
/// Backtracking assigns source elements in index order, pruning candidates
/// whose local invariants differ and partial maps that already contradict an
/// operation. `pairs_checked` counts search nodes.
pub fn check_isomorphism_exists<A, B>(source: &FiniteSemiring<A>, target: &FiniteSemiring<B>, ops: Ops) -> Result<CheckReport>
where
    A: Clone + Eq + Hash + fmt::Display,
    B: Clone + Eq + Hash + fmt::Display,
{
    if source.len() != target.len() {
        return Ok(CheckReport::failing(
            0,
            Witness {
                bindings: vec![],
                relation: "carrier sizes agree".into(),
                lhs: source.len().to_string(),
                rhs: target.len().to_string(),
            },
        ));
    }
    let n = source.len();
    if n > ISOMORPHISM_CAP {
        return Err(Error::CapExceeded {
            what: "isomorphism search".into(),
            n,
            cap: ISOMORPHISM_CAP,
        });
    }
    let operations = ops.operations();
    let sig_a: Vec<Signature> = (0..n).map(|x| signature(source, x, operations)).collect();
    let sig_b: Vec<Signature> = (0..n).map(|x| signature(target, x, operations)).collect();
    let mut search = Search {
        source,
        target,
        operations,
        sig_a: &sig_a,
        sig_b: &sig_b,
        forward: vec![None; n],
        used_by: vec![None; n],
        nodes: 0,
    };
    let found = search.extend(0)?;
    let nodes = search.nodes;
    Ok(if found {
        let bijection: Vec<usize> = search.forward.iter().map(|x| x.expect("complete")).collect();
        CheckReport {
            verdict: Verdict::Holds,
            witness: None,
            pairs_checked: nodes,
            bijection: Some(bijection),
        }
    } else {
        CheckReport::failing(
            nodes,
            Witness {
                bindings: vec![],
                relation: format!("some bijection {} -> {} preserves {ops}", source.name(), target.name()),
                lhs: "exhausted".into(),
                rhs: format!("{nodes} search nodes"),
            },
        )
    })
}

type Signature = Vec<(bool, usize, usize, usize, usize)>;

/// Per operation: idempotent?, #left-absorbed, #right-absorbed, #fixed as left
/// unit, size of the row image. Preserved by any isomorphism.
fn signature<T>(s: &FiniteSemiring<T>, x: usize, operations: &[Operation]) -> Signature
where
    T: Clone + Eq + Hash + fmt::Display,
{
    let n = s.len();
    operations
        .iter()
        .map(|&op| {
            let mut row = vec![false; n];
            let (mut left, mut right, mut unit) = (0, 0, 0);
            for y in 0..n {
                let xy = s.op(op, x, y);
                row[xy] = true;
                left += usize::from(xy == x);
                right += usize::from(s.op(op, y, x) == x);
                unit += usize::from(xy == y);
            }
            let image = row.iter().filter(|&&b| b).count();
            (s.op(op, x, x) == x, left, right, unit, image)
        })
        .collect()
}

struct Search<'a, A, B> {
    source: &'a FiniteSemiring<A>,
    target: &'a FiniteSemiring<B>,
    operations: &'a [Operation],
    sig_a: &'a [Signature],
    sig_b: &'a [Signature],
    forward: Vec<Option<usize>>,
    used_by: Vec<Option<usize>>,
    nodes: u64,
}

impl<A, B> Search<'_, A, B>
where
    A: Clone + Eq + Hash + fmt::Display,
    B: Clone + Eq + Hash + fmt::Display,
{
    fn extend(&mut self, next: usize) -> Result<bool> {
        let n = self.forward.len();
        if next == n {
            return Ok(true);
        }
        for candidate in 0..n {
            if self.used_by[candidate].is_some() || self.sig_a[next] != self.sig_b[candidate] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > ISOMORPHISM_NODE_BUDGET {
                return Err(Error::Budget {
                    required: u128::from(self.nodes),
                    budget: ISOMORPHISM_NODE_BUDGET,
                });
            }
            self.forward[next] = Some(candidate);
            self.used_by[candidate] = Some(next);
            if self.consistent(next) && self.extend(next + 1)? {
                return Ok(true);
            }
            self.forward[next] = None;
            self.used_by[candidate] = None;
        }
        Ok(false)
    }

    /// Every constraint that mentions `newest` (as operand or as result) and
    /// only assigned elements.
    fn consistent(&self, newest: usize) -> bool {
        for p in 0..=newest {
            for q in 0..=newest {
                let fp = self.forward[p].expect("assigned");
                let fq = self.forward[q].expect("assigned");
                for &op in self.operations {
                    let r = self.source.op(op, p, q);
                    if p != newest && q != newest && r != newest {
                        continue;
                    }
                    let image = self.target.op(op, fp, fq);
                    match self.forward[r] {
                        Some(fr) if fr != image => return false,
                        Some(_) => {}
                        // r is unassigned, so its future image must still be free
                        None if self.used_by[image].is_some() => return false,
                        None => {}
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;

    fn chain(n: u32) -> FiniteSemiring<u32> {
        FiniteSemiring::new(
            format!("chain{n}"),
            (0..n).collect(),
            Arc::new(|a: &u32, b: &u32| *a.max(b)),
            Arc::new(|a: &u32, b: &u32| *a.min(b)),
        )
        .unwrap()
    }

    #[test]
    fn trivial_identity_holds() {
        let s = chain(3);
        let report = check_identity(&"x = x".parse().unwrap(), &s).unwrap();
        assert!(report.holds());
        assert_eq!(report.pairs_checked, 3);
    }

    #[test]
    fn first_witness_is_lexicographic() {
        let s = chain(3);
        let id: Identity = "x = y".parse().unwrap();
        let report = check_identity(&id, &s).unwrap();
        assert_eq!(report.witness_indices(), Some(vec![0, 1]));
        assert_eq!(report.pairs_checked, 2);
        let par = check_identity_with(&id, &s, &CheckOptions { budget: 100, parallel: true }).unwrap();
        assert_eq!(par, report);
    }

    #[test]
    fn budget_is_enforced() {
        let s = chain(10);
        let id: Identity = "x y z = z y x".parse().unwrap();
        let err = check_identity_with(&id, &s, &CheckOptions { budget: 999, parallel: false }).unwrap_err();
        assert_eq!(err, Error::Budget { required: 1000, budget: 999 });
    }

    #[test]
    fn identity_map_is_a_homomorphism() {
        let s = chain(4);
        let report = check_homomorphism(|x: &u32| *x, &s, &s, Ops::Both).unwrap();
        assert!(report.holds());
        assert_eq!(report.pairs_checked, 16);
        assert!(check_injective(|x: &u32| *x, &s).holds());
    }

    #[test]
    fn constant_map_is_not_injective() {
        let s = chain(2);
        let report = check_injective(|_: &u32| 0u32, &s);
        assert_eq!(report.verdict, Verdict::Fails);
        assert_eq!(report.witness_indices(), Some(vec![0, 1]));
    }

    #[test]
    fn image_outside_target_is_an_error() {
        let s = chain(2);
        let err = check_homomorphism(|x: &u32| x + 5, &s, &s, Ops::Mul).unwrap_err();
        assert_eq!(err, Error::NotInCarrier("5".into()));
    }

    #[test]
    fn isomorphism_search() {
        let a = chain(4);
        let report = check_isomorphism_exists(&a, &a, Ops::Both).unwrap();
        assert_eq!(report.bijection, Some(vec![0, 1, 2, 3]));
        let b = chain(3);
        let report = check_isomorphism_exists(&a, &b, Ops::Both).unwrap();
        assert_eq!(report.verdict, Verdict::Fails);
        // order-reversed chain: min as addition, max as multiplication
        let reversed = FiniteSemiring::new(
            "reversed",
            (0u32..4).collect(),
            Arc::new(|a: &u32, b: &u32| *a.min(b)),
            Arc::new(|a: &u32, b: &u32| *a.max(b)),
        )
        .unwrap();
        let report = check_isomorphism_exists(&a, &reversed, Ops::Add).unwrap();
        assert_eq!(report.bijection, Some(vec![3, 2, 1, 0]));
        let report = check_isomorphism_exists(&a, &reversed, Ops::Both).unwrap();
        assert_eq!(report.bijection, Some(vec![3, 2, 1, 0]));
        let max_max = FiniteSemiring::new(
            "max-max",
            (0u32..4).collect(),
            Arc::new(|a: &u32, b: &u32| *a.max(b)),
            Arc::new(|a: &u32, b: &u32| *a.max(b)),
        )
        .unwrap();
        assert!(check_isomorphism_exists(&a, &max_max, Ops::Add).unwrap().holds());
        let report = check_isomorphism_exists(&a, &max_max, Ops::Both).unwrap();
        assert_eq!(report.verdict, Verdict::Fails);
    }
}
