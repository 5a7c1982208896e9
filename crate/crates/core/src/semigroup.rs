//! Finite semigroups given by an explicit Cayley table.

use thiserror::Error;

use crate::linalg::int;
use crate::report::{CheckConfig, CheckReport, Verdict, Witness};

/// An element of a semigroup, as an index into its element list.
pub type Element = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("semigroup must have at least one element")]
    Empty,
    #[error("table has {found} entries, expected {expected}")]
    Shape { expected: usize, found: usize },
    #[error("table entry {value} at ({row},{col}) is out of range for order {order}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("element index {index} out of range for order {order}")]
    NoSuchElement { index: usize, order: usize },
}

/// A finite semigroup. `table[i * n + j]` is the index of `elements[i] * elements[j]`.
///
/// Associativity is not a constructor invariant; use [`validate_semigroup`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SemigroupTable {
    name: String,
    elements: Vec<String>,
    table: Vec<Element>,
    commutative: bool,
}

impl SemigroupTable {
    pub fn new(
        name: impl Into<String>,
        elements: Vec<String>,
        table: Vec<Element>,
        commutative: bool,
    ) -> Result<Self, SemigroupError> {
        let n = elements.len();
        if n == 0 {
            return Err(SemigroupError::Empty);
        }
        if table.len() != n * n {
            return Err(SemigroupError::Shape {
                expected: n * n,
                found: table.len(),
            });
        }
        for (pos, &v) in table.iter().enumerate() {
            if v >= n {
                return Err(SemigroupError::OutOfRange {
                    row: pos / n,
                    col: pos % n,
                    value: v,
                    order: n,
                });
            }
        }
        for (i, e) in elements.iter().enumerate() {
            if elements[..i].contains(e) {
                return Err(SemigroupError::DuplicateLabel(e.clone()));
            }
        }
        Ok(Self {
            name: name.into(),
            elements,
            table,
            commutative,
        })
    }

    fn from_fn(name: &str, labels: Vec<String>, f: impl Fn(usize, usize) -> usize, commutative: bool) -> Self {
        let n = labels.len();
        let table = (0..n * n).map(|ij| f(ij / n, ij % n)).collect();
        Self::new(name, labels, table, commutative).expect("generated table is well formed")
    }

    /// The one-element semigroup `{e}`.
    pub fn trivial(name: &str) -> Self {
        Self::from_fn(name, vec!["e".into()], |_, _| 0, true)
    }

    /// Cyclic group of order `n` with elements `g0 .. g{n-1}`.
    pub fn cyclic(name: &str, n: usize) -> Self {
        Self::from_fn(name, (0..n).map(|i| format!("g{i}")).collect(), |i, j| (i + j) % n, true)
    }

    /// Chain semilattice `s0 < s1 < ...` under minimum.
    pub fn chain(name: &str, n: usize) -> Self {
        Self::from_fn(name, (0..n).map(|i| format!("s{i}")).collect(), |i, j| i.min(j), true)
    }

    /// Left-zero band: `x * y = x`. Not commutative for `n > 1`.
    pub fn left_zero(name: &str, n: usize) -> Self {
        Self::from_fn(name, (0..n).map(|i| format!("l{i}")).collect(), |i, _| i, n == 1)
    }

    /// Null semigroup: every product is `z0`.
    pub fn null(name: &str, n: usize) -> Self {
        Self::from_fn(name, (0..n).map(|i| format!("z{i}")).collect(), |_, _| 0, true)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(&self, name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            ..self.clone()
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn label(&self, a: Element) -> &str {
        &self.elements[a]
    }

    pub fn index_of(&self, label: &str) -> Option<Element> {
        self.elements.iter().position(|e| e == label)
    }

    /// The declared commutativity flag.
    pub fn declared_commutative(&self) -> bool {
        self.commutative
    }

    /// Whether the table itself is commutative, regardless of the flag.
    pub fn is_commutative(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Table lookup. Panics on out-of-range indices; see [`Self::try_mul`].
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.table[a * self.order() + b]
    }

    pub fn try_mul(&self, a: Element, b: Element) -> Result<Element, SemigroupError> {
        let n = self.order();
        for index in [a, b] {
            if index >= n {
                return Err(SemigroupError::NoSuchElement { index, order: n });
            }
        }
        Ok(self.mul(a, b))
    }

    /// Enumerates `0..n` in order; handy for nested loops.
    pub fn iter(&self) -> std::ops::Range<Element> {
        0..self.order()
    }
}

/// Lists every associativity violation `(i, j, k)` and, when the table is
/// flagged commutative, every commutativity violation `(i, j)`. The table
/// shape was already validated at construction.
pub fn validate_semigroup(t: &SemigroupTable, cfg: &CheckConfig) -> Verdict {
    let cap = cfg.cap();
    let index = |e: Element| int(e as i64);
    let mut verdict = Verdict::new(format!("semigroup {}", t.name()));
    let mut assoc = CheckReport::new("semigroup-associativity");
    'outer: for i in t.iter() {
        for j in t.iter() {
            for k in t.iter() {
                let left = t.mul(t.mul(i, j), k);
                let right = t.mul(i, t.mul(j, k));
                if left != right {
                    assoc.record(
                        Witness {
                            omega: vec![i, j, k],
                            basis: vec![],
                            lhs: vec![index(left)],
                            rhs: vec![index(right)],
                        },
                        cap,
                    );
                    if cfg.stop_at_first {
                        break 'outer;
                    }
                }
            }
        }
    }
    verdict.push(assoc);
    if t.declared_commutative() {
        let mut comm = CheckReport::new("semigroup-commutativity");
        for i in t.iter() {
            for j in t.iter() {
                if t.mul(i, j) != t.mul(j, i) {
                    comm.record(
                        Witness {
                            omega: vec![i, j],
                            basis: vec![],
                            lhs: vec![index(t.mul(i, j))],
                            rhs: vec![index(t.mul(j, i))],
                        },
                        cap,
                    );
                }
            }
        }
        verdict.push(comm);
    }
    verdict
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_semigroup_passes() {
        let t = SemigroupTable::trivial("T");
        assert!(validate_semigroup(&t, &CheckConfig::default()).passed());
        assert_eq!(t.mul(0, 0), 0);
    }

    #[test]
    fn cyclic_two_passes_and_commutes() {
        let t = SemigroupTable::cyclic("C2", 2);
        let v = validate_semigroup(&t, &CheckConfig::default());
        assert!(v.passed());
        assert_eq!(v.reports.len(), 2);
        assert_eq!(t.mul(1, 1), 0);
        assert!(t.is_commutative());
    }

    #[test]
    fn left_zero_flagged_commutative_fails_only_commutativity() {
        let base = SemigroupTable::left_zero("L", 2);
        let flagged = SemigroupTable::new("L", base.elements().to_vec(), vec![0, 0, 1, 1], true).unwrap();
        let v = validate_semigroup(&flagged, &CheckConfig::default());
        assert!(v.reports[0].passed, "left-zero band is associative");
        assert!(!v.reports[1].passed);
        assert_eq!(v.reports[1].violations, 2);
        assert_eq!(flagged.mul(0, 1), 0);
    }

    #[test]
    fn non_associative_table_reports_triples() {
        // a*b = b, everything else a: (b*a)*b = a*b = b but b*(a*b) = b*b = a
        let t = SemigroupTable::new("N", vec!["a".into(), "b".into()], vec![0, 1, 0, 0], false).unwrap();
        let v = validate_semigroup(&t, &CheckConfig::default());
        assert!(!v.passed());
        let w = &v.reports[0].witnesses[0];
        let (i, j, k) = (w.omega[0], w.omega[1], w.omega[2]);
        assert_ne!(t.mul(t.mul(i, j), k), t.mul(i, t.mul(j, k)));
    }

    #[test]
    fn malformed_tables_rejected() {
        assert_eq!(
            SemigroupTable::new("X", vec!["a".into()], vec![1], false),
            Err(SemigroupError::OutOfRange {
                row: 0,
                col: 0,
                value: 1,
                order: 1
            })
        );
        assert!(matches!(
            SemigroupTable::new("X", vec!["a".into(), "b".into()], vec![0; 3], false),
            Err(SemigroupError::Shape { .. })
        ));
        assert!(matches!(
            SemigroupTable::new("X", vec!["a".into(), "a".into()], vec![0; 4], false),
            Err(SemigroupError::DuplicateLabel(_))
        ));
        assert_eq!(SemigroupTable::new("X", vec![], vec![], false), Err(SemigroupError::Empty));
    }

    #[test]
    fn try_mul_rejects_out_of_range() {
        let t = SemigroupTable::cyclic("C2", 2);
        assert_eq!(t.try_mul(1, 1), Ok(0));
        assert!(t.try_mul(2, 0).is_err());
    }

    #[test]
    fn shipped_generators_are_semigroups() {
        for t in [
            SemigroupTable::trivial("a"),
            SemigroupTable::cyclic("b", 3),
            SemigroupTable::chain("c", 3),
            SemigroupTable::left_zero("d", 3),
            SemigroupTable::null("e", 3),
        ] {
            assert!(validate_semigroup(&t, &CheckConfig::default()).passed(), "{}", t.name());
            if t.declared_commutative() {
                assert!(t.is_commutative());
            }
        }
    }
}
