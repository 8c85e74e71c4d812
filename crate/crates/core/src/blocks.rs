//! Block combinatorics and the arc-diagram weight dictionary.
//!
//! A strictly dominant tuple `b` determines two finite subsets of the
//! positive vertex line `I₀ = {1, 2, 3, …}`: the positive entries
//! `I_∨(b) = {b_r | b_r > 0}` and the complement of `I_∧(b)`, namely
//! `{1 − b_r | b_r ≤ 0}`.  Each vertex is labelled by which of the two
//! sets it lies in: both `∨`, only the first `×`, only the second `∘`,
//! neither `∧`.  The resulting diagrams have `#× + #∘ + 2·#∨ = n` and
//! classify the blocks: two strictly dominant tuples lie in the same
//! block exactly when their diagrams agree after forgetting `∨`/`∧`.

use std::collections::BTreeSet;
use std::fmt;

use serde_json::{json, Map, Value};

use crate::orders::Tuple;
use crate::{Error, Result};

/// Label of one vertex of an arc diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Label {
    Circle,
    Vee,
    Wedge,
    Cross,
}

impl Label {
    pub fn as_char(self) -> char {
        match self {
            Label::Circle => 'o',
            Label::Vee => 'v',
            Label::Wedge => '^',
            Label::Cross => 'x',
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// An arc diagram: finitely many non-`∧` labels on the vertices
/// `1, 2, 3, …` plus an implicit all-`∧` tail.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ArcDiagram {
    n: usize,
    non_wedge: std::collections::BTreeMap<i64, Label>,
}

impl ArcDiagram {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self, vertex: i64) -> Label {
        assert!(vertex >= 1, "vertices are positive");
        self.non_wedge.get(&vertex).copied().unwrap_or(Label::Wedge)
    }

    pub fn non_wedge(&self) -> &std::collections::BTreeMap<i64, Label> {
        &self.non_wedge
    }

    /// Counts of (`×`, `∘`, `∨`) labels.
    pub fn counts(&self) -> (usize, usize, usize) {
        let count = |l: Label| self.non_wedge.values().filter(|&&x| x == l).count();
        (count(Label::Cross), count(Label::Circle), count(Label::Vee))
    }

    /// Finite text rendering: vertices `1..=max+2` followed by the
    /// all-wedge tail `^oo`.
    pub fn render(&self) -> String {
        let max = self.non_wedge.keys().max().copied().unwrap_or(0);
        let mut out: String = (1..=max + 2).map(|i| self.label(i).as_char()).collect();
        out.push_str(" ^oo");
        out
    }

    pub fn to_json(&self) -> Value {
        let mut labels = Map::new();
        for (vertex, label) in &self.non_wedge {
            labels.insert(vertex.to_string(), json!(label.as_char().to_string()));
        }
        json!({ "non_wedge": labels, "n": self.n })
    }
}

/// The weight dictionary sending a strictly dominant tuple to its arc
/// diagram.
pub fn weight_diagram(b: &Tuple) -> Result<ArcDiagram> {
    if !b.is_strictly_dominant() {
        return Err(Error::InvalidInput(format!(
            "the weight dictionary requires a strictly dominant tuple, got {b}"
        )));
    }
    let vee_set: BTreeSet<i64> = b.entries().iter().copied().filter(|&x| x > 0).collect();
    let co_wedge: BTreeSet<i64> = b
        .entries()
        .iter()
        .filter(|&&x| x <= 0)
        .map(|&x| 1 - x)
        .collect();
    let mut non_wedge = std::collections::BTreeMap::new();
    for &i in vee_set.union(&co_wedge) {
        let label = match (vee_set.contains(&i), co_wedge.contains(&i)) {
            (true, true) => Label::Vee,
            (true, false) => Label::Cross,
            (false, true) => Label::Circle,
            (false, false) => unreachable!(),
        };
        non_wedge.insert(i, label);
    }
    let diagram = ArcDiagram {
        n: b.len(),
        non_wedge,
    };
    let (cross, circle, vee) = diagram.counts();
    assert_eq!(
        cross + circle + 2 * vee,
        b.len(),
        "label counts violate the diagram invariant for {b}"
    );
    Ok(diagram)
}

/// Block statistics of a tuple: the number of positive entries, the number
/// of non-positive entries, and the atypicality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockStats {
    pub n0: usize,
    pub n1: usize,
    pub atypicality: usize,
}

pub fn block_stats(b: &Tuple) -> BlockStats {
    let n0 = b.count_positive();
    BlockStats {
        n0,
        n1: b.len() - n0,
        atypicality: b.atypicality(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::crystal_op;
    use crate::orders::prime_map;
    use crate::tensor::{Gen, Space};
    use std::collections::BTreeMap;

    fn t(entries: &[i64]) -> Tuple {
        Tuple::new(entries.to_vec())
    }

    fn strictly_dominant_box(n: usize, lo: i64, hi: i64) -> impl Iterator<Item = Tuple> {
        Tuple::box_iter(n, lo, hi).filter(Tuple::is_strictly_dominant)
    }

    #[test]
    fn dictionary_examples() {
        let d = weight_diagram(&t(&[2, -1])).unwrap();
        assert_eq!(d.label(1), Label::Wedge);
        assert_eq!(d.label(2), Label::Vee);
        assert_eq!(d.label(3), Label::Wedge);
        assert_eq!(d.render(), "^v^^ ^oo");

        let d = weight_diagram(&t(&[1, 0])).unwrap();
        assert_eq!(d.label(1), Label::Vee);
        assert_eq!(d.render(), "v^^ ^oo");

        let d = weight_diagram(&t(&[2, 1])).unwrap();
        assert_eq!((d.label(1), d.label(2)), (Label::Cross, Label::Cross));
        assert_eq!(d.render(), "xx^^ ^oo");

        // A circle: entry 0 contributes vertex 1 to neither set.
        let d = weight_diagram(&t(&[0])).unwrap();
        assert_eq!(d.label(1), Label::Circle);
        assert_eq!(d.render(), "o^^ ^oo");

        assert!(weight_diagram(&t(&[1, 2])).is_err());
    }

    #[test]
    fn json_golden() {
        let d = weight_diagram(&t(&[2, -1])).unwrap();
        assert_eq!(
            serde_json::to_string(&d.to_json()).unwrap(),
            r#"{"non_wedge":{"2":"v"},"n":2}"#
        );
    }

    #[test]
    fn block_stats_examples() {
        assert_eq!(
            block_stats(&t(&[2, -1])),
            BlockStats { n0: 1, n1: 1, atypicality: 1 }
        );
        assert_eq!(
            block_stats(&t(&[5, 3])),
            BlockStats { n0: 2, n1: 0, atypicality: 0 }
        );
        assert_eq!(
            block_stats(&t(&[1, 0])),
            BlockStats { n0: 1, n1: 1, atypicality: 1 }
        );
    }

    #[test]
    fn dictionary_is_injective_with_valid_counts() {
        for n in 1..=3 {
            let mut seen: BTreeMap<ArcDiagram, Tuple> = BTreeMap::new();
            for b in strictly_dominant_box(n, -4, 4) {
                let d = weight_diagram(&b).unwrap();
                let (cross, circle, vee) = d.counts();
                assert_eq!(cross + circle + 2 * vee, n);
                if let Some(other) = seen.insert(d, b.clone()) {
                    panic!("diagram collision between {other} and {b}");
                }
            }
        }
    }

    #[test]
    fn atypicality_matches_prime_collisions() {
        for n in 1..=3 {
            for b in strictly_dominant_box(n, -4, 4) {
                let p = prime_map(&b);
                let collisions = (0..n)
                    .flat_map(|r| (r + 1..n).map(move |s| (r, s)))
                    .filter(|&(r, s)| p.get(r) == p.get(s))
                    .count();
                assert_eq!(b.atypicality(), collisions, "at {b}");
            }
        }
    }

    fn replace_entry(b: &Tuple, old: i64, new: i64) -> Tuple {
        let idx: Vec<usize> = (0..b.len()).filter(|&r| b.get(r) == old).collect();
        assert_eq!(idx.len(), 1, "entry {old} not unique in {b}");
        b.bump(idx[0], new - old)
    }

    /// Replays the inductive procedure connecting a strictly dominant tuple
    /// to a typical one by crystal operators, certifying each step against
    /// the predicted entry replacement and the endpoint by its typicality.
    fn connect_to_typical(b: &Tuple) -> Tuple {
        let space = Space::type_c(b.len());
        let mut cur = b.clone();
        for _ in 0..10_000 {
            if cur.is_typical() {
                return cur;
            }
            let entries: BTreeSet<i64> = cur.entries().iter().copied().collect();
            let r = (0..cur.len())
                .find(|&r| {
                    (r + 1..cur.len()).any(|s| cur.get(r) + cur.get(s) == 1)
                })
                .expect("an atypical tuple has an atypical pair");
            let i = cur.get(r);
            assert!(i > 0);
            let j = (i..)
                .find(|&j| !entries.contains(&(j + 1)) && !entries.contains(&(-j)))
                .unwrap();
            let (gen, index, expected) = if j == i {
                (Gen::F, i, replace_entry(&cur, i, i + 1))
            } else if entries.contains(&j) {
                (Gen::F, j, replace_entry(&cur, j, j + 1))
            } else {
                assert!(entries.contains(&(1 - j)));
                (Gen::E, j, replace_entry(&cur, 1 - j, -j))
            };
            let next = crystal_op(&space, &cur, index, gen)
                .unwrap_or_else(|| panic!("step vanished at {cur}"));
            assert_eq!(next, expected, "crystal step disagrees at {cur}");
            assert!(next.is_strictly_dominant(), "left B+ at {next}");
            assert!(next.atypicality() <= cur.atypicality());
            cur = next;
        }
        panic!("connection procedure did not terminate from {b}");
    }

    #[test]
    fn connection_reaches_typical_tuples() {
        for n in 1..=3 {
            for b in strictly_dominant_box(n, -3, 3) {
                let a = connect_to_typical(&b);
                assert!(a.is_typical());
                assert!(a.is_strictly_dominant());
                assert_eq!(a.count_positive(), b.count_positive());
                assert_eq!(a.len(), b.len());
            }
        }
    }
}
