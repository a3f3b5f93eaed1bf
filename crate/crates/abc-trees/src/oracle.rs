//! Brute-force baselines for cross-checking the search.
//!
//! Everything here is deliberately independent of the main pipeline: degree
//! sequences come from a direct partition recursion instead of the
//! reverse-search walk, trees are enumerated through their sequence
//! encoding, and index values are summed naively. Agreement between the two
//! routes is therefore evidence, not tautology.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::degseq::DegreeSequence;

/// Largest order the labeled-tree sweep accepts; `n^(n-2)` trees get out of
/// hand quickly.
pub const MAX_BRUTE_FORCE_N: u32 = 10;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("order must be at least 2, got {0}")]
    OrderTooSmall(u32),
    #[error("brute force is capped at order {MAX_BRUTE_FORCE_N}, got {0}")]
    OrderTooLarge(u32),
}

/// All tree degree sequences of order `n`, generated by walking the integer
/// partitions of `2n - 2` into `n` positive parts, largest part first.
pub fn partition_sequences(n: u32) -> Result<Vec<DegreeSequence>, OracleError> {
    if n < 2 {
        return Err(OracleError::OrderTooSmall(n));
    }
    let n = n as usize;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    descend(n - 1, 2 * n - 2, n, &mut cur, &mut out);
    Ok(out)
}

fn descend(bound: usize, rem: usize, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<DegreeSequence>) {
    if slots == 0 {
        debug_assert_eq!(rem, 0);
        out.push(DegreeSequence::new(cur.clone()).expect("partition yields a tree sequence"));
        return;
    }
    // Leave room for at least 1 in every later slot, and do not drop below
    // the average still needed.
    let hi = bound.min(rem - (slots - 1));
    let lo = rem.div_ceil(slots);
    for d in (lo..=hi).rev() {
        cur.push(d as u32);
        descend(d, rem - d, slots - 1, cur, out);
        cur.pop();
    }
}

/// A labeled tree produced by the exhaustive sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledTree {
    pub edges: Vec<(usize, usize)>,
    /// Vertex degrees by label.
    pub degrees: Vec<u32>,
}

impl LabeledTree {
    /// Naive index evaluation: plain left-to-right summation.
    pub fn abc(&self) -> f64 {
        self.edges
            .iter()
            .map(|&(u, v)| {
                let (du, dv) = (self.degrees[u] as f64, self.degrees[v] as f64);
                ((du + dv - 2.0) / (du * dv)).sqrt()
            })
            .sum()
    }

    /// Degrees sorted largest first.
    pub fn degree_multiset(&self) -> Vec<u32> {
        let mut ds = self.degrees.clone();
        ds.sort_unstable_by(|a, b| b.cmp(a));
        ds
    }
}

fn decode_tree(code: &[usize], n: usize) -> LabeledTree {
    let mut degrees = vec![1u32; n];
    for &a in code {
        degrees[a] += 1;
    }
    let mut remaining = degrees.clone();
    let mut edges = Vec::with_capacity(n - 1);
    for &a in code {
        let leaf = (0..n).find(|&v| remaining[v] == 1).expect("a leaf always remains");
        edges.push((leaf, a));
        remaining[leaf] = 0;
        remaining[a] -= 1;
    }
    let u = (0..n).find(|&v| remaining[v] == 1).unwrap();
    let v = (u + 1..n).find(|&v| remaining[v] == 1).unwrap();
    edges.push((u, v));
    LabeledTree { edges, degrees }
}

/// Visits every labeled tree on `n` vertices once, via all `n^(n-2)`
/// sequence encodings in lexicographic order. Returns the number visited.
pub fn for_each_labeled_tree<F: FnMut(&LabeledTree)>(
    n: u32,
    mut visit: F,
) -> Result<u64, OracleError> {
    if n < 2 {
        return Err(OracleError::OrderTooSmall(n));
    }
    if n > MAX_BRUTE_FORCE_N {
        return Err(OracleError::OrderTooLarge(n));
    }
    let n = n as usize;
    let mut code = vec![0usize; n - 2];
    let mut seen = 0u64;
    loop {
        visit(&decode_tree(&code, n));
        seen += 1;
        // Odometer increment over base-n digits.
        let mut i = code.len();
        loop {
            if i == 0 {
                return Ok(seen);
            }
            i -= 1;
            code[i] += 1;
            if code[i] < n {
                break;
            }
            code[i] = 0;
        }
    }
}

/// The minimal index over every labeled tree of order `n`, with the first
/// witness encountered.
#[derive(Debug, Clone, PartialEq)]
pub struct BruteForceMin {
    pub abc: f64,
    pub witness: LabeledTree,
    pub trees_seen: u64,
}

pub fn min_abc_all_trees(n: u32) -> Result<BruteForceMin, OracleError> {
    let mut best: Option<LabeledTree> = None;
    let mut min = f64::INFINITY;
    let trees_seen = for_each_labeled_tree(n, |t| {
        let v = t.abc();
        if v < min {
            min = v;
            best = Some(t.clone());
        }
    })?;
    Ok(BruteForceMin {
        abc: min,
        witness: best.expect("at least one tree exists"),
        trees_seen,
    })
}

/// The minimal index over labeled trees realizing `seq`, or None when the
/// sweep sees no tree with that degree multiset (it always does for valid
/// sequences).
pub fn min_abc_for_sequence(seq: &DegreeSequence) -> Result<Option<f64>, OracleError> {
    let want = seq.degrees().to_vec();
    let mut min: Option<f64> = None;
    for_each_labeled_tree(seq.n() as u32, |t| {
        if t.degree_multiset() == want {
            let v = t.abc();
            if min.is_none_or(|m| v < m) {
                min = Some(v);
            }
        }
    })?;
    Ok(min)
}

/// One sweep that records, for every degree sequence of order `n`, the
/// minimal index over the labeled trees realizing it.
pub fn min_abc_by_sequence(n: u32) -> Result<BTreeMap<DegreeSequence, f64>, OracleError> {
    let mut map: BTreeMap<DegreeSequence, f64> = BTreeMap::new();
    for_each_labeled_tree(n, |t| {
        let seq = DegreeSequence::new(t.degree_multiset()).expect("tree degrees form a sequence");
        let v = t.abc();
        map.entry(seq)
            .and_modify(|m| {
                if v < *m {
                    *m = v;
                }
            })
            .or_insert(v);
    })?;
    Ok(map)
}

#[cfg(test)]
mod test {
    use super::*;
    use crate::degseq;
    use std::collections::HashSet;

    fn seq(degrees: &[u32]) -> DegreeSequence {
        DegreeSequence::new(degrees.to_vec()).unwrap()
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partition_sequences(2).unwrap().len(), 1);
        assert_eq!(partition_sequences(5).unwrap().len(), 3);
        assert_eq!(partition_sequences(9).unwrap().len(), 15);
        assert_eq!(partition_sequences(12).unwrap().len(), 42);
        assert!(partition_sequences(1).is_err());
    }

    #[test]
    fn partitions_agree_with_the_enumerator() {
        for n in 2..=14u32 {
            let from_partitions: HashSet<_> = partition_sequences(n).unwrap().into_iter().collect();
            let mut from_walk = HashSet::new();
            degseq::enumerate(n, None, |s| {
                from_walk.insert(s.clone());
            })
            .unwrap();
            assert_eq!(from_partitions, from_walk, "n = {n}");
        }
    }

    #[test]
    fn labeled_tree_counts() {
        // n^(n-2) labeled trees.
        assert_eq!(for_each_labeled_tree(2, |_| {}).unwrap(), 1);
        assert_eq!(for_each_labeled_tree(3, |_| {}).unwrap(), 3);
        assert_eq!(for_each_labeled_tree(4, |_| {}).unwrap(), 16);
        assert_eq!(for_each_labeled_tree(6, |_| {}).unwrap(), 1296);
        assert!(for_each_labeled_tree(11, |_| {}).is_err());
        assert!(for_each_labeled_tree(1, |_| {}).is_err());
    }

    #[test]
    fn decoded_trees_are_trees() {
        for_each_labeled_tree(6, |t| {
            assert_eq!(t.edges.len(), 5);
            let sum: u32 = t.degrees.iter().sum();
            assert_eq!(sum, 10);
            // Degrees really count edge endpoints.
            let mut check = vec![0u32; 6];
            for &(u, v) in &t.edges {
                assert_ne!(u, v);
                check[u] += 1;
                check[v] += 1;
            }
            assert_eq!(check, t.degrees);
        })
        .unwrap();
    }

    #[test]
    fn minimum_over_order_four_is_the_path() {
        let min = min_abc_all_trees(4).unwrap();
        assert_eq!(min.trees_seen, 16);
        assert_eq!(min.witness.degree_multiset(), vec![2, 2, 1, 1]);
        assert!((min.abc - 3.0 * 0.5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn per_sequence_minimum_examples() {
        let v = min_abc_for_sequence(&seq(&[3, 2, 2, 1, 1, 1]))
            .unwrap()
            .unwrap();
        assert!((v - 3.6449237056739161).abs() < 1e-12);

        let star = min_abc_for_sequence(&seq(&[4, 1, 1, 1, 1])).unwrap().unwrap();
        assert!((star - 12f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn bulk_map_covers_every_sequence() {
        let map = min_abc_by_sequence(7).unwrap();
        assert_eq!(map.len(), 7);
        let p7 = map.get(&seq(&[2, 2, 2, 2, 2, 1, 1])).unwrap();
        assert!((p7 - 6.0 * 0.5f64.sqrt()).abs() < 1e-12);
    }
}
