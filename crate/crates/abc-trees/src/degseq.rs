//! Tree degree sequences and their exhaustive enumeration.
//!
//! A degree sequence of a tree on `n` vertices is a non-increasing list of
//! `n` positive integers summing to `2n - 2`. The enumerator walks all such
//! sequences for a fixed `n` without materializing candidates that cannot be
//! completed: every sequence of length `< n` reached during the walk extends
//! to at least one full-length sequence, which gives constant amortized cost
//! per emitted sequence.

use std::fmt;

use thiserror::Error;

/// Errors from sequence construction and enumeration.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum DegSeqError {
    /// Trees need at least two vertices.
    #[error("order must be at least 2, got {0}")]
    OrderTooSmall(u32),
    /// The input does not describe any tree.
    #[error("not a tree degree sequence: {0}")]
    NotTreeSequence(String),
    /// Extension degree outside the admissible range.
    #[error("extension degree {z} not admissible (allowed 2..={max})")]
    BadExtension { z: u32, max: u32 },
    /// The base sequence `(1, 1)` has no predecessor.
    #[error("the base sequence (1, 1) cannot be truncated")]
    NoPredecessor,
    /// Shard coordinates do not form a valid partition slot.
    #[error("shard index {index} out of range for {count} shards")]
    BadShard { index: u32, count: u32 },
}

/// Reports whether `degrees` is the degree sequence of some tree: sorted in
/// non-increasing order, every entry positive, and summing to `2n - 2`.
pub fn is_tree_degree_sequence(degrees: &[u32]) -> bool {
    let n = degrees.len();
    if n < 2 {
        return false;
    }
    if degrees.windows(2).any(|w| w[0] < w[1]) {
        return false;
    }
    if degrees.iter().any(|&d| d == 0) {
        return false;
    }
    degrees.iter().map(|&d| d as u64).sum::<u64>() == 2 * n as u64 - 2
}

/// A validated tree degree sequence.
///
/// Ordering is lexicographic on the underlying degrees, which is the
/// tie-breaking order used everywhere a canonical representative is needed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeSequence {
    degrees: Vec<u32>,
}

impl DegreeSequence {
    /// Validates and wraps a candidate sequence.
    pub fn new(degrees: Vec<u32>) -> Result<Self, DegSeqError> {
        if is_tree_degree_sequence(&degrees) {
            Ok(Self { degrees })
        } else {
            Err(DegSeqError::NotTreeSequence(format!("{degrees:?}")))
        }
    }

    /// Wraps a sequence the caller already knows to be valid.
    pub(crate) fn from_sorted_unchecked(degrees: Vec<u32>) -> Self {
        debug_assert!(is_tree_degree_sequence(&degrees));
        Self { degrees }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    /// The degrees, largest first.
    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Largest degree.
    pub fn max_degree(&self) -> u32 {
        self.degrees[0]
    }

    /// Number of leaves (degree-1 vertices).
    pub fn leaf_count(&self) -> usize {
        self.degrees.iter().filter(|&&d| d == 1).count()
    }

    /// Number of degree-2 vertices.
    pub fn two_count(&self) -> usize {
        self.degrees.iter().filter(|&&d| d == 2).count()
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.degrees.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// Appends an internal degree `z` to `parent` and pads with leaves.
///
/// Writing `parent` as `(c_1, ..., c_h, 1, ..., 1)` with all `c_i > 1`, the
/// result is `(c_1, ..., c_h, z, 1, ..., 1)` with `z - 1` additional ones, a
/// sequence of order `n + z - 1`. Admissible degrees are `2 <= z <= c_h`; on
/// the base sequence `(1, 1)` any `z >= 2` is admissible and the enumerator
/// bounds it by the target order instead.
pub fn extend(parent: &DegreeSequence, z: u32) -> Result<DegreeSequence, DegSeqError> {
    let head = parent.degrees.iter().take_while(|&&d| d > 1).count();
    let max = if head == 0 { u32::MAX } else { parent.degrees[head - 1] };
    if z < 2 || z > max {
        return Err(DegSeqError::BadExtension { z, max });
    }
    let mut out = Vec::with_capacity(parent.n() + z as usize - 1);
    out.extend_from_slice(&parent.degrees[..head]);
    out.push(z);
    out.resize(parent.n() + z as usize - 1, 1);
    Ok(DegreeSequence::from_sorted_unchecked(out))
}

/// Removes the smallest degree `d > 1` together with `d - 1` trailing ones,
/// returning the shorter sequence and the removed degree.
///
/// This inverts [`extend`]: every sequence other than `(1, 1)` has exactly
/// one predecessor, so iterating leads back to the base in finitely many
/// steps.
pub fn truncate(seq: &DegreeSequence) -> Result<(DegreeSequence, u32), DegSeqError> {
    let head = seq.degrees.iter().take_while(|&&d| d > 1).count();
    if head == 0 {
        return Err(DegSeqError::NoPredecessor);
    }
    let d = seq.degrees[head - 1];
    let mut out = Vec::with_capacity(seq.n() - d as usize + 1);
    out.extend_from_slice(&seq.degrees[..head - 1]);
    out.resize(seq.n() - d as usize + 1, 1);
    Ok((DegreeSequence::from_sorted_unchecked(out), d))
}

/// One slot of a deterministic partition of the enumeration work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shard {
    count: u32,
    index: u32,
}

impl Shard {
    pub fn new(count: u32, index: u32) -> Result<Self, DegSeqError> {
        if count == 0 || index >= count {
            return Err(DegSeqError::BadShard { index, count });
        }
        Ok(Self { count, index })
    }

    pub fn count(&self) -> u32 {
        self.count
    }

    pub fn index(&self) -> u32 {
        self.index
    }
}

/// Cursor into the enumeration tree of degree sequences.
///
/// The cursor holds one (possibly partial) sequence for a fixed target
/// order. [`EnumCursor::descend`] applies one admissible extension,
/// [`EnumCursor::ascend`] undoes the most recent one, both in time
/// independent of the sequence length. The path of extension degrees taken
/// from the base uniquely addresses the current position and can be replayed
/// to reconstruct it.
#[derive(Debug, Clone)]
pub struct EnumCursor {
    target: usize,
    /// `buf[..len]` is the current sequence; everything at or past
    /// `head_len` holds a literal 1 so ascending never has to repair tails.
    buf: Vec<u32>,
    head_len: usize,
    len: usize,
    twos: usize,
    path: Vec<u32>,
}

impl EnumCursor {
    /// Cursor positioned at the base sequence `(1, 1)`.
    pub fn new(target_n: u32) -> Result<Self, DegSeqError> {
        if target_n < 2 {
            return Err(DegSeqError::OrderTooSmall(target_n));
        }
        let target = target_n as usize;
        Ok(Self {
            target,
            buf: vec![1; target],
            head_len: 0,
            len: 2,
            twos: 0,
            path: Vec::new(),
        })
    }

    /// Reconstructs the cursor at the position addressed by `path`.
    pub fn replay(target_n: u32, path: &[u32]) -> Result<Self, DegSeqError> {
        let mut cur = Self::new(target_n)?;
        for &z in path {
            cur.descend(z)?;
        }
        Ok(cur)
    }

    /// Target order of the enumeration.
    pub fn target_n(&self) -> usize {
        self.target
    }

    /// Order of the current sequence.
    pub fn order(&self) -> usize {
        self.len
    }

    /// The current sequence.
    pub fn current(&self) -> &[u32] {
        &self.buf[..self.len]
    }

    /// Extension degrees applied since the base sequence.
    pub fn branch_path(&self) -> &[u32] {
        &self.path
    }

    /// Whether the current sequence has reached the target order.
    pub fn at_target(&self) -> bool {
        self.len == self.target
    }

    /// Number of leaves in the current sequence.
    pub fn leaf_count(&self) -> usize {
        self.len - self.head_len
    }

    /// Number of degree-2 entries in the current sequence.
    pub fn two_count(&self) -> usize {
        self.twos
    }

    /// Largest admissible extension degree, or 0 when none exists.
    ///
    /// Extensions are capped both by the smallest internal degree already
    /// present and by the room left before the target order; 2 is always
    /// admissible below the target, so the walk never reaches a dead end.
    pub fn max_extension(&self) -> u32 {
        if self.at_target() {
            return 0;
        }
        let room = (self.target - self.len + 1) as u32;
        if self.head_len == 0 {
            room
        } else {
            room.min(self.buf[self.head_len - 1])
        }
    }

    /// Applies the extension `z`, growing the sequence by `z - 1`.
    pub fn descend(&mut self, z: u32) -> Result<(), DegSeqError> {
        let max = self.max_extension();
        if z < 2 || z > max {
            return Err(DegSeqError::BadExtension { z, max });
        }
        self.descend_unchecked(z);
        Ok(())
    }

    fn descend_unchecked(&mut self, z: u32) {
        debug_assert!(z >= 2 && z <= self.max_extension());
        self.buf[self.head_len] = z;
        self.head_len += 1;
        self.len += z as usize - 1;
        self.twos += usize::from(z == 2);
        self.path.push(z);
    }

    /// Undoes the most recent extension; returns false at the base.
    pub fn ascend(&mut self) -> bool {
        let Some(z) = self.path.pop() else {
            return false;
        };
        self.head_len -= 1;
        self.buf[self.head_len] = 1;
        self.len -= z as usize - 1;
        self.twos -= usize::from(z == 2);
        true
    }
}

fn walk<F: FnMut(&EnumCursor)>(cur: &mut EnumCursor, visit: &mut F) {
    if cur.at_target() {
        visit(cur);
        return;
    }
    let mut z = cur.max_extension();
    while z >= 2 {
        cur.descend_unchecked(z);
        walk(cur, visit);
        cur.ascend();
        z -= 1;
    }
}

/// Branch paths of the enumeration subtrees handed out to shards, in the
/// same depth-first order the unsharded walk uses.
fn shard_roots(target_n: u32, shard_count: u32) -> Vec<Vec<u32>> {
    let root_branches = (target_n as usize).saturating_sub(2);
    let cutoff = if shard_count as usize <= root_branches { 1 } else { 2 };
    let mut items = Vec::new();
    let mut cur = EnumCursor::new(target_n).expect("validated by caller");
    collect_roots(&mut cur, 0, cutoff, &mut items);
    items
}

fn collect_roots(cur: &mut EnumCursor, depth: usize, cutoff: usize, items: &mut Vec<Vec<u32>>) {
    if cur.at_target() || depth == cutoff {
        items.push(cur.branch_path().to_vec());
        return;
    }
    let mut z = cur.max_extension();
    while z >= 2 {
        cur.descend_unchecked(z);
        collect_roots(cur, depth + 1, cutoff, items);
        cur.ascend();
        z -= 1;
    }
}

/// Runs the walk, invoking `visit` on the cursor at every full-length
/// sequence, and returns how many were visited. With a shard, only the
/// subtrees assigned round-robin to `shard.index()` are walked.
pub(crate) fn visit_sequences<F: FnMut(&EnumCursor)>(
    target_n: u32,
    shard: Option<Shard>,
    mut visit: F,
) -> Result<u64, DegSeqError> {
    let mut visited = 0u64;
    let mut counting = |cur: &EnumCursor| {
        visited += 1;
        visit(cur);
    };
    match shard {
        None => {
            let mut cur = EnumCursor::new(target_n)?;
            walk(&mut cur, &mut counting);
        }
        Some(shard) => {
            EnumCursor::new(target_n)?;
            for (i, path) in shard_roots(target_n, shard.count()).iter().enumerate() {
                if i as u32 % shard.count() != shard.index() {
                    continue;
                }
                let mut cur = EnumCursor::replay(target_n, path)?;
                walk(&mut cur, &mut counting);
            }
        }
    }
    Ok(visited)
}

/// Calls `visit` once per degree sequence of trees of order `target_n`, in
/// the deterministic enumeration order.
pub fn enumerate<F: FnMut(&DegreeSequence)>(
    target_n: u32,
    shard: Option<Shard>,
    mut visit: F,
) -> Result<u64, DegSeqError> {
    visit_sequences(target_n, shard, |cur| {
        visit(&DegreeSequence::from_sorted_unchecked(cur.current().to_vec()))
    })
}

/// Number of degree sequences of trees of order `target_n` (restricted to
/// one shard when given).
pub fn count(target_n: u32, shard: Option<Shard>) -> Result<u64, DegSeqError> {
    visit_sequences(target_n, shard, |_| {})
}

#[cfg(test)]
mod test {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn seq(degrees: &[u32]) -> DegreeSequence {
        DegreeSequence::new(degrees.to_vec()).unwrap()
    }

    #[test]
    fn recognizes_tree_sequences() {
        assert!(is_tree_degree_sequence(&[1, 1]));
        assert!(is_tree_degree_sequence(&[2, 1, 1]));
        assert!(is_tree_degree_sequence(&[3, 2, 2, 1, 1, 1]));
        assert!(is_tree_degree_sequence(&[6, 5, 1, 1, 1, 1, 1, 1, 1, 1, 1]));
        assert!(!is_tree_degree_sequence(&[]));
        assert!(!is_tree_degree_sequence(&[1]));
        assert!(!is_tree_degree_sequence(&[2, 2]));
        assert!(!is_tree_degree_sequence(&[1, 2, 1]));
        assert!(!is_tree_degree_sequence(&[3, 3, 1, 1]));
        assert!(!is_tree_degree_sequence(&[2, 1, 0, 1]));
    }

    #[test]
    fn constructor_rejects_invalid() {
        assert!(DegreeSequence::new(vec![2, 1, 1]).is_ok());
        assert!(matches!(
            DegreeSequence::new(vec![3, 3, 1, 1]),
            Err(DegSeqError::NotTreeSequence(_))
        ));
    }

    #[test]
    fn accessors() {
        let s = seq(&[4, 2, 2, 1, 1, 1, 1]);
        assert_eq!(s.n(), 7);
        assert_eq!(s.max_degree(), 4);
        assert_eq!(s.leaf_count(), 4);
        assert_eq!(s.two_count(), 2);
        assert_eq!(s.to_string(), "(4, 2, 2, 1, 1, 1, 1)");
    }

    #[test]
    fn extend_appends_and_pads() {
        let base = seq(&[1, 1]);
        assert_eq!(extend(&base, 4).unwrap(), seq(&[4, 1, 1, 1, 1]));
        assert_eq!(extend(&seq(&[2, 1, 1]), 2).unwrap(), seq(&[2, 2, 1, 1]));
        let d65 = seq(&[6, 5, 1, 1, 1, 1, 1, 1, 1, 1, 1]);
        assert_eq!(
            extend(&d65, 3).unwrap(),
            seq(&[6, 5, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1])
        );
    }

    #[test]
    fn extend_children_of_one_parent() {
        // All extensions of (6, 5, 1^9): z runs over 2..=5.
        let parent = seq(&[6, 5, 1, 1, 1, 1, 1, 1, 1, 1, 1]);
        let children: Vec<_> = (2..=5).map(|z| extend(&parent, z).unwrap()).collect();
        assert_eq!(children[0], seq(&[6, 5, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1]));
        assert_eq!(children[1], seq(&[6, 5, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]));
        assert_eq!(
            children[2],
            seq(&[6, 5, 4, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1])
        );
        assert_eq!(
            children[3],
            seq(&[6, 5, 5, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1])
        );
        assert!(matches!(
            extend(&parent, 6),
            Err(DegSeqError::BadExtension { z: 6, max: 5 })
        ));
    }

    #[test]
    fn extend_rejects_out_of_range() {
        assert!(matches!(
            extend(&seq(&[2, 1, 1]), 3),
            Err(DegSeqError::BadExtension { z: 3, max: 2 })
        ));
        assert!(matches!(
            extend(&seq(&[1, 1]), 1),
            Err(DegSeqError::BadExtension { z: 1, .. })
        ));
    }

    #[test]
    fn truncate_removes_smallest_internal_degree() {
        let (p, z) = truncate(&seq(&[6, 5, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1])).unwrap();
        assert_eq!(p, seq(&[6, 5, 1, 1, 1, 1, 1, 1, 1, 1, 1]));
        assert_eq!(z, 3);

        let (p, z) = truncate(&seq(&[4, 1, 1, 1, 1])).unwrap();
        assert_eq!(p, seq(&[1, 1]));
        assert_eq!(z, 4);

        let (p, z) = truncate(&seq(&[2, 2, 1, 1])).unwrap();
        assert_eq!(p, seq(&[2, 1, 1]));
        assert_eq!(z, 2);

        assert_eq!(truncate(&seq(&[1, 1])), Err(DegSeqError::NoPredecessor));
    }

    #[test]
    fn enumeration_order_small() {
        let mut seen = Vec::new();
        enumerate(4, None, |s| seen.push(s.clone())).unwrap();
        assert_eq!(seen, vec![seq(&[3, 1, 1, 1]), seq(&[2, 2, 1, 1])]);

        let mut seen = Vec::new();
        enumerate(5, None, |s| seen.push(s.clone())).unwrap();
        assert_eq!(
            seen,
            vec![
                seq(&[4, 1, 1, 1, 1]),
                seq(&[3, 2, 1, 1, 1]),
                seq(&[2, 2, 2, 1, 1]),
            ]
        );
    }

    #[test]
    fn counts_match_partition_numbers() {
        // S(n) = p(n - 2), the number of integer partitions of n - 2.
        let expected = [
            (2, 1),
            (3, 1),
            (4, 2),
            (5, 3),
            (7, 7),
            (9, 15),
            (10, 22),
            (12, 42),
            (21, 490),
            (29, 3010),
            (32, 5604),
        ];
        for (n, want) in expected {
            assert_eq!(count(n, None).unwrap(), want, "n = {n}");
        }
    }

    #[test]
    fn rejects_tiny_orders() {
        assert_eq!(count(0, None), Err(DegSeqError::OrderTooSmall(0)));
        assert_eq!(count(1, None), Err(DegSeqError::OrderTooSmall(1)));
        assert!(EnumCursor::new(1).is_err());
    }

    #[test]
    fn enumeration_is_sound_and_duplicate_free() {
        let n = 12;
        let mut seen = HashSet::new();
        let visited = enumerate(n, None, |s| {
            assert_eq!(s.n(), n as usize);
            assert!(is_tree_degree_sequence(s.degrees()));
            assert!(seen.insert(s.clone()), "duplicate {s}");
        })
        .unwrap();
        assert_eq!(visited, seen.len() as u64);
        assert_eq!(visited, 42);
    }

    #[test]
    fn cursor_descend_ascend_round_trip() {
        let mut cur = EnumCursor::new(9).unwrap();
        assert_eq!(cur.current(), &[1, 1]);
        assert_eq!(cur.max_extension(), 8);
        cur.descend(4).unwrap();
        assert_eq!(cur.current(), &[4, 1, 1, 1, 1]);
        cur.descend(3).unwrap();
        assert_eq!(cur.current(), &[4, 3, 1, 1, 1, 1, 1]);
        assert_eq!(cur.branch_path(), &[4, 3]);
        assert_eq!(cur.leaf_count(), 5);
        assert_eq!(cur.max_extension(), 3);
        assert!(matches!(cur.descend(4), Err(DegSeqError::BadExtension { .. })));

        assert!(cur.ascend());
        assert_eq!(cur.current(), &[4, 1, 1, 1, 1]);
        assert!(cur.ascend());
        assert_eq!(cur.current(), &[1, 1]);
        assert!(!cur.ascend());
    }

    #[test]
    fn replay_reaches_same_position() {
        let mut cur = EnumCursor::new(13).unwrap();
        for z in [6, 5, 3] {
            cur.descend(z).unwrap();
        }
        let replayed = EnumCursor::replay(13, cur.branch_path()).unwrap();
        assert_eq!(replayed.current(), cur.current());
        assert_eq!(replayed.two_count(), cur.two_count());
        assert_eq!(replayed.leaf_count(), cur.leaf_count());
    }

    #[test]
    fn shards_partition_the_enumeration() {
        for n in [4, 10, 17, 25] {
            let mut full = Vec::new();
            enumerate(n, None, |s| full.push(s.clone())).unwrap();
            for shard_count in [2, 3, 7] {
                let mut union = Vec::new();
                let mut total = 0;
                for index in 0..shard_count {
                    let shard = Shard::new(shard_count, index).unwrap();
                    total += enumerate(n, Some(shard), |s| union.push(s.clone())).unwrap();
                }
                assert_eq!(total, full.len() as u64, "n = {n}, shards = {shard_count}");
                let full_set: HashSet<_> = full.iter().cloned().collect();
                let union_set: HashSet<_> = union.iter().cloned().collect();
                assert_eq!(union.len(), union_set.len(), "shard overlap");
                assert_eq!(full_set, union_set);
            }
        }
    }

    #[test]
    fn sharded_counts_cover_more_shards_than_subtrees() {
        // 7 shards at n = 4 leaves some shards empty but loses nothing.
        let total: u64 = (0..7)
            .map(|i| count(4, Some(Shard::new(7, i).unwrap())).unwrap())
            .sum();
        assert_eq!(total, 2);
    }

    #[test]
    fn shard_validation() {
        assert!(Shard::new(0, 0).is_err());
        assert!(Shard::new(3, 3).is_err());
        assert!(Shard::new(3, 2).is_ok());
    }

    proptest! {
        #[test]
        fn truncate_inverts_extend(path in prop::collection::vec(2u32..=6, 0..6)) {
            // Apply whatever prefix of the random path is admissible.
            let mut cur = seq(&[1, 1]);
            for &z in &path {
                let head = cur.degrees().iter().take_while(|&&d| d > 1).count();
                let max = if head == 0 { u32::MAX } else { cur.degrees()[head - 1] };
                if z > max {
                    continue;
                }
                let child = extend(&cur, z).unwrap();
                let (back, removed) = truncate(&child).unwrap();
                prop_assert_eq!(&back, &cur);
                prop_assert_eq!(removed, z);
                cur = child;
            }
        }

        #[test]
        fn extend_inverts_truncate(idx in 0usize..15, n in 3u32..12) {
            let mut all = Vec::new();
            enumerate(n, None, |s| all.push(s.clone())).unwrap();
            let s = &all[idx % all.len()];
            let (parent, z) = truncate(s).unwrap();
            prop_assert_eq!(&extend(&parent, z).unwrap(), s);
        }
    }
}
