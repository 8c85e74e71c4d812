//! Kashiwara crystal operators on tuples.
//!
//! The crystal operator `f̃_i` (resp. `ẽ_i`) acts through the reduced
//! i-signature: cancel every `e … f` pair (ignoring dots in between), then
//! bump the entry at the rightmost surviving `f` (resp. leftmost surviving
//! `e`).  The result is `∅` — here `None` — when no mark survives.
//!
//! The module also provides the antidominance predicates, the standard
//! tuples `z_k = (1−k,…,1−k)`, an explicit crystal word connecting the
//! all-zero tuple `z = z_1` to any antidominant tuple, and a box-bounded
//! breadth-first exploration of the component of `z` with a JSON/DOT
//! adjacency export.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::orders::Tuple;
use crate::tensor::{isig, Gen, Mark, Signature, Space};
use crate::{Error, Result};

/// Cancels `e…f` pairs (dots in between allowed) until every surviving `e`
/// is to the right of every surviving `f`.  The result is independent of
/// the cancellation order; this implementation matches each `f` with the
/// nearest unmatched `e` on its left.
pub fn reduce_signature(sig: &Signature) -> Signature {
    let mut out = vec![Mark::Dot; sig.0.len()];
    let mut open_e: Vec<usize> = Vec::new();
    for (t, mark) in sig.0.iter().enumerate() {
        match mark {
            Mark::Dot => {}
            Mark::E => open_e.push(t),
            Mark::F => {
                if open_e.pop().is_none() {
                    out[t] = Mark::F;
                }
            }
        }
    }
    for t in open_e {
        out[t] = Mark::E;
    }
    Signature(out)
}

/// Applies `f̃_i` or `ẽ_i` to `b` in the given space, or `None` when the
/// reduced i-signature has no surviving mark of the requested kind.
pub fn crystal_op(space: &Space, b: &Tuple, i: i64, gen: Gen) -> Option<Tuple> {
    assert_eq!(space.n(), b.len(), "space rank must match tuple length");
    let reduced = reduce_signature(&isig(space, b, i));
    let slot = match gen {
        Gen::F => reduced.0.iter().rposition(|m| *m == Mark::F)?,
        Gen::E => reduced.0.iter().position(|m| *m == Mark::E)?,
    };
    let direction = match space.sigma() {
        None => 1,
        Some(sigma) => sigma.get(slot).value(),
    };
    let delta = match gen {
        Gen::F => direction,
        Gen::E => -direction,
    };
    Some(b.bump(slot, delta))
}

/// The tuple `z_k = (1−k, …, 1−k)` of length `n`.
pub fn z_k(n: usize, k: i64) -> Tuple {
    Tuple::new(vec![1 - k; n])
}

/// Membership in the connected component of the all-zero tuple: holds
/// exactly when `b` is antidominant (weakly increasing).
pub fn component_membership(b: &Tuple) -> bool {
    b.is_antidominant()
}

/// The prinjectivity predicate coincides with antidominance.
pub fn prinjective(b: &Tuple) -> bool {
    b.is_antidominant()
}

/// Applies a word of crystal operators in order, returning the full path
/// `[start, …, end]`, or `None` if some step vanishes.
pub fn apply_word(space: &Space, start: &Tuple, word: &[(Gen, i64)]) -> Option<Vec<Tuple>> {
    let mut path = vec![start.clone()];
    for &(gen, i) in word {
        let next = crystal_op(space, path.last().unwrap(), i, gen)?;
        path.push(next);
    }
    Some(path)
}

/// Builds a crystal word carrying `z = (0,…,0)` to the antidominant tuple
/// `b` and certifies it by application before returning.
///
/// The first attempt is the direct per-slot word: slot `r` contributes
/// `f̃_0 f̃_1 ⋯ f̃_{b_r−1}` when `b_r ≥ 0` and `ẽ_1 ẽ_2 ⋯ ẽ_{−b_r}` when
/// `b_r < 0`, the slots with negative entries being processed right-to-left
/// first, then the rest left-to-right.  That word can vanish midway — on
/// `(−2,0,2)` the zero in slot 2 emits an `e`-mark that cancels the final
/// `f̃_1`, and reaching the tuple requires overshooting slot 2 and coming
/// back, which no per-slot monotone word does — so when it dies a bounded
/// breadth-first search over a slightly enlarged entry box supplies a word
/// instead.
pub fn connect_to_z(b: &Tuple) -> Result<Vec<(Gen, i64)>> {
    if !b.is_antidominant() {
        return Err(Error::InvalidInput(format!(
            "connect_to_z requires an antidominant tuple, got {b}"
        )));
    }
    let n = b.len();
    let t = (1..=n).rev().find(|&r| b.get(r - 1) < 0).unwrap_or(0);
    let slot_word = |r: usize| -> Vec<(Gen, i64)> {
        let x = b.get(r - 1);
        if x >= 0 {
            (0..x).map(|i| (Gen::F, i)).collect()
        } else {
            (1..=-x).map(|i| (Gen::E, i)).collect()
        }
    };
    let mut word = Vec::new();
    for r in (1..=t).rev() {
        word.extend(slot_word(r));
    }
    for r in t + 1..=n {
        word.extend(slot_word(r));
    }
    let space = Space::type_c(n);
    let z = z_k(n, 1);
    if let Some(path) = apply_word(&space, &z, &word) {
        if path.last().unwrap() == b {
            return Ok(word);
        }
    }
    let word = search_word(b)
        .unwrap_or_else(|| panic!("no crystal word connects z to the antidominant tuple {b}"));
    let path = apply_word(&space, &z, &word).expect("searched word must apply");
    assert_eq!(path.last().unwrap(), b, "searched word missed its target");
    Ok(word)
}

/// Breadth-first search for a crystal word from `z` to `b`, inside the
/// entry box spanned by `b` and `0` enlarged by a growing margin.
fn search_word(b: &Tuple) -> Option<Vec<(Gen, i64)>> {
    let n = b.len();
    let space = Space::type_c(n);
    let z = z_k(n, 1);
    if *b == z {
        return Some(Vec::new());
    }
    let min = b.entries().iter().copied().min().unwrap_or(0).min(0);
    let max = b.entries().iter().copied().max().unwrap_or(0).max(0);
    for margin in 0..=4 {
        let (lo, hi) = (min - margin, max + margin);
        let max_index = lo.abs().max(hi.abs()) + 1;
        let mut parent: BTreeMap<Tuple, (Tuple, (Gen, i64))> = BTreeMap::new();
        let mut queue = VecDeque::from([z.clone()]);
        let mut seen = BTreeSet::from([z.clone()]);
        while let Some(cur) = queue.pop_front() {
            for i in 0..=max_index {
                for gen in [Gen::F, Gen::E] {
                    let Some(next) = crystal_op(&space, &cur, i, gen) else {
                        continue;
                    };
                    if next.entries().iter().any(|&x| x < lo || x > hi)
                        || !seen.insert(next.clone())
                    {
                        continue;
                    }
                    parent.insert(next.clone(), (cur.clone(), (gen, i)));
                    if next == *b {
                        let mut word = Vec::new();
                        let mut at = &next;
                        while let Some((prev, step)) = parent.get(at) {
                            word.push(*step);
                            at = prev;
                        }
                        word.reverse();
                        return Some(word);
                    }
                    queue.push_back(next);
                }
            }
        }
    }
    None
}

/// Result of a box-bounded breadth-first search from `z = (0,…,0)`.
#[derive(Clone, Debug)]
pub struct ComponentReport {
    pub n: usize,
    pub lo: i64,
    pub hi: i64,
    /// Tuples reachable from `z` without leaving the box.
    pub reached: BTreeSet<Tuple>,
    /// Crystal edges between reached tuples, keyed `"f0"`, `"e2"`, ….
    pub adjacency: BTreeMap<Tuple, BTreeMap<String, Tuple>>,
    /// Antidominant tuples of the box the bounded search did not reach.
    pub unreached_antidominant: Vec<Tuple>,
    /// Reached tuples that are not antidominant (must be empty).
    pub non_antidominant_reached: Vec<Tuple>,
}

/// Explores the component of `z` inside the box `[lo,hi]^n` with both
/// `f̃_i` and `ẽ_i` moves, for every index `i` that can act on the box.
pub fn component_bfs(n: usize, lo: i64, hi: i64) -> ComponentReport {
    assert!(lo <= hi, "empty box");
    let space = Space::type_c(n);
    let in_box = |b: &Tuple| b.entries().iter().all(|&x| lo <= x && x <= hi);
    let max_index = lo.abs().max(hi.abs()) + 1;

    let mut reached = BTreeSet::new();
    let mut adjacency = BTreeMap::new();
    let z = z_k(n, 1);
    if in_box(&z) {
        let mut queue = VecDeque::from([z.clone()]);
        reached.insert(z);
        while let Some(b) = queue.pop_front() {
            let mut edges = BTreeMap::new();
            for i in 0..=max_index {
                for (gen, name) in [(Gen::F, 'f'), (Gen::E, 'e')] {
                    if let Some(c) = crystal_op(&space, &b, i, gen) {
                        if in_box(&c) {
                            if reached.insert(c.clone()) {
                                queue.push_back(c.clone());
                            }
                            edges.insert(format!("{name}{i}"), c);
                        }
                    }
                }
            }
            adjacency.insert(b, edges);
        }
    }

    let unreached_antidominant = Tuple::box_iter(n, lo, hi)
        .filter(|b| b.is_antidominant() && !reached.contains(b))
        .collect();
    let non_antidominant_reached = reached
        .iter()
        .filter(|b| !b.is_antidominant())
        .cloned()
        .collect();
    ComponentReport {
        n,
        lo,
        hi,
        reached,
        adjacency,
        unreached_antidominant,
        non_antidominant_reached,
    }
}

/// Renders the component graph in DOT format for graph viewers.
pub fn component_dot(report: &ComponentReport) -> String {
    let mut out = String::from("digraph component {\n");
    for b in &report.reached {
        out.push_str(&format!("  \"{b}\";\n"));
    }
    for (b, edges) in &report.adjacency {
        for (label, c) in edges {
            out.push_str(&format!("  \"{b}\" -> \"{c}\" [label=\"{label}\"];\n"));
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orders::{total_weight_c, total_weight_a, Domain, SignVector, Weight};
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn t(entries: &[i64]) -> Tuple {
        Tuple::new(entries.to_vec())
    }

    fn sig(text: &str) -> Signature {
        Signature(
            text.chars()
                .map(|c| match c {
                    'f' => Mark::F,
                    'e' => Mark::E,
                    '.' => Mark::Dot,
                    _ => panic!("bad mark {c}"),
                })
                .collect(),
        )
    }

    #[test]
    fn reduction_examples() {
        assert_eq!(reduce_signature(&sig("fee.ffeff")), sig("f.......f"));
        assert_eq!(reduce_signature(&sig("...")), sig("..."));
        assert_eq!(reduce_signature(&sig("ef")), sig(".."));
        assert_eq!(reduce_signature(&sig("fe")), sig("fe"));
        assert_eq!(reduce_signature(&sig("e.f")), sig("..."));
        assert_eq!(reduce_signature(&sig("eeff")), sig("...."));
        assert_eq!(reduce_signature(&sig("efef")), sig("...."));
    }

    #[test]
    fn crystal_op_examples() {
        let b = t(&[2, -1, -1, 4, -2, -2, 3, 2, -2]);
        let space = Space::type_c(9);
        assert_eq!(
            crystal_op(&space, &b, 2, Gen::F),
            Some(t(&[2, -1, -1, 4, -2, -2, 3, 2, -1]))
        );
        assert_eq!(crystal_op(&space, &b, 2, Gen::E), None);
        assert_eq!(
            crystal_op(&Space::type_c(2), &t(&[0, 0]), 0, Gen::F),
            Some(t(&[0, 1]))
        );
    }

    #[test]
    fn partial_inverse_type_c() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let n = rng.gen_range(1..=4);
            let b = Tuple::new((0..n).map(|_| rng.gen_range(-3..=3)).collect());
            let space = Space::type_c(n);
            for i in 0..=4 {
                if let Some(c) = crystal_op(&space, &b, i, Gen::F) {
                    assert_eq!(crystal_op(&space, &c, i, Gen::E), Some(b.clone()));
                }
                if let Some(c) = crystal_op(&space, &b, i, Gen::E) {
                    assert_eq!(crystal_op(&space, &c, i, Gen::F), Some(b.clone()));
                }
            }
        }
    }

    #[test]
    fn partial_inverse_type_a() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..500 {
            let n = rng.gen_range(1..=4);
            let b = Tuple::new((0..n).map(|_| rng.gen_range(-3..=3)).collect());
            let sigma = SignVector::all(n)
                .into_iter()
                .choose(&mut rng)
                .unwrap();
            let space = Space::type_a(sigma);
            for i in -4..=4 {
                if let Some(c) = crystal_op(&space, &b, i, Gen::F) {
                    assert_eq!(crystal_op(&space, &c, i, Gen::E), Some(b.clone()));
                }
                if let Some(c) = crystal_op(&space, &b, i, Gen::E) {
                    assert_eq!(crystal_op(&space, &c, i, Gen::F), Some(b.clone()));
                }
            }
        }
    }

    #[test]
    fn weight_shift_by_simple_root() {
        let alpha_c = |i: i64| -> Weight {
            if i == 0 {
                Weight::eps(Domain::TypeC, 0, -2)
            } else {
                Weight::eps(Domain::TypeC, i - 1, 1)
                    .add(&Weight::eps(Domain::TypeC, i, -1))
                    .unwrap()
            }
        };
        for b in Tuple::box_iter(2, -2, 2) {
            let space = Space::type_c(2);
            for i in 0..=3 {
                if let Some(c) = crystal_op(&space, &b, i, Gen::F) {
                    let shift = total_weight_c(&c).sub(&total_weight_c(&b)).unwrap();
                    let expected = Weight::zero(Domain::TypeC).sub(&alpha_c(i)).unwrap();
                    assert_eq!(shift, expected, "f{i} on {b}");
                }
            }
        }
        let alpha_a = |i: i64| -> Weight {
            Weight::eps(Domain::TypeA, i, 1)
                .add(&Weight::eps(Domain::TypeA, i + 1, -1))
                .unwrap()
        };
        for sigma in SignVector::all(2) {
            let space = Space::type_a(sigma.clone());
            for b in Tuple::box_iter(2, -2, 2) {
                for i in -3..=3 {
                    if let Some(c) = crystal_op(&space, &b, i, Gen::F) {
                        let shift = total_weight_a(&c, &sigma)
                            .sub(&total_weight_a(&b, &sigma))
                            .unwrap();
                        let expected = Weight::zero(Domain::TypeA).sub(&alpha_a(i)).unwrap();
                        assert_eq!(shift, expected, "f{i} on {b} with {sigma}");
                    }
                }
            }
        }
    }

    #[test]
    fn antidominance_is_closed_under_crystal_ops() {
        let space = Space::type_c(3);
        for b in Tuple::box_iter(3, -2, 2).filter(Tuple::is_antidominant) {
            for i in 0..=3 {
                for gen in [Gen::F, Gen::E] {
                    if let Some(c) = crystal_op(&space, &b, i, gen) {
                        assert!(c.is_antidominant(), "{b} lost antidominance at i={i}");
                    }
                }
            }
        }
    }

    #[test]
    fn connecting_word_examples() {
        assert_eq!(connect_to_z(&t(&[0, 0])).unwrap(), vec![]);
        assert_eq!(connect_to_z(&t(&[0, 1])).unwrap(), vec![(Gen::F, 0)]);
        assert_eq!(
            connect_to_z(&t(&[-1, 2])).unwrap(),
            vec![(Gen::E, 1), (Gen::F, 0), (Gen::F, 1)]
        );
        assert!(connect_to_z(&t(&[2, -1])).is_err());
    }

    #[test]
    fn connecting_word_stays_in_certificate_box() {
        for b in Tuple::box_iter(3, -2, 2).filter(Tuple::is_antidominant) {
            let word = connect_to_z(&b).unwrap();
            let path = apply_word(&Space::type_c(3), &z_k(3, 1), &word).unwrap();
            assert_eq!(path.last().unwrap(), &b);
            let lo = b.entries().iter().copied().min().unwrap().min(0) - 4;
            let hi = b.entries().iter().copied().max().unwrap().max(0) + 4;
            for p in &path {
                assert!(p.entries().iter().all(|&x| (lo..=hi).contains(&x)));
            }
        }
    }

    /// The direct per-slot word vanishes for this tuple (the zero entry
    /// blocks the last raise), so the search fallback must supply a word.
    #[test]
    fn fallback_word_for_blocked_tuple() {
        let b = t(&[-2, 0, 2]);
        let word = connect_to_z(&b).unwrap();
        let path = apply_word(&Space::type_c(3), &z_k(3, 1), &word).unwrap();
        assert_eq!(path.last().unwrap(), &b);
        assert!(path
            .iter()
            .all(|p| p.entries().iter().all(|&x| (-2..=2).contains(&x))));
    }

    #[test]
    fn bfs_matches_antidominance() {
        let report = component_bfs(2, -2, 2);
        assert!(report.non_antidominant_reached.is_empty());
        assert!(report.unreached_antidominant.is_empty());
        let expected: BTreeSet<Tuple> = Tuple::box_iter(2, -2, 2)
            .filter(Tuple::is_antidominant)
            .collect();
        assert_eq!(report.reached, expected);
    }

    #[test]
    fn standard_tuples() {
        assert_eq!(z_k(2, 3), t(&[-2, -2]));
        assert_eq!(total_weight_c(&z_k(2, 3)), Weight::eps(Domain::TypeC, 2, -2));
        assert_eq!(z_k(3, 1), t(&[0, 0, 0]));
        assert!(component_membership(&t(&[0, 0])));
        assert!(!component_membership(&t(&[2, -1])));
        assert!(prinjective(&t(&[-1, 2])));
    }

    #[test]
    fn dot_export_mentions_edges() {
        let report = component_bfs(1, 0, 1);
        let dot = component_dot(&report);
        assert!(dot.contains("\"0\" -> \"1\" [label=\"f0\"]"));
        assert!(dot.starts_with("digraph component {"));
    }
}
