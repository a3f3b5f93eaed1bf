//! Candidate filters and structural checks for minimal trees.
//!
//! For orders of 10 and above, minimal trees are known to keep their
//! degree-2 count close to their leaf count, and their leaves sit on short
//! pendant paths. The filters prune the candidate space along those lines;
//! the property report makes the pendant-path structure of a winner
//! explicit.

use thiserror::Error;

use crate::degseq::DegreeSequence;
use crate::greedy::GreedyTree;

/// Orders below this are searched unfiltered and carry no structural
/// guarantees.
pub const PROPOSITION_FLOOR: u32 = 10;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FilterError {
    #[error("delta window radius must be at least 1")]
    ZeroRadius,
    #[error("structural properties apply from order {PROPOSITION_FLOOR} on, got {n}")]
    BelowPropositionFloor { n: usize },
}

/// How aggressively to prune candidates by their degree-2 count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FilterMode {
    /// Keep only sequences whose degree-2 count equals the leaf count or
    /// exceeds it by one.
    Strict,
    /// Keep sequences with at least as many degree-2 vertices as leaves.
    Relaxed,
    /// No pruning; the exhaustive baseline.
    #[default]
    Off,
}

/// An inclusive window of admissible maximum degrees, used to carry the
/// observation that the maximum degree moves by at most one between
/// consecutive orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeltaWindow {
    center: u32,
    radius: u32,
}

impl DeltaWindow {
    pub fn new(center: u32, radius: u32) -> Result<Self, FilterError> {
        if radius == 0 {
            return Err(FilterError::ZeroRadius);
        }
        Ok(Self { center, radius })
    }

    pub fn center(&self) -> u32 {
        self.center
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn contains(&self, delta: u32) -> bool {
        delta >= self.center.saturating_sub(self.radius) && delta <= self.center + self.radius
    }
}

/// Filter settings for one search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FilterConfig {
    pub mode: FilterMode,
    pub delta_window: Option<DeltaWindow>,
}

impl FilterConfig {
    pub fn off() -> Self {
        Self::default()
    }

    pub fn strict() -> Self {
        Self {
            mode: FilterMode::Strict,
            ..Self::default()
        }
    }

    pub fn relaxed() -> Self {
        Self {
            mode: FilterMode::Relaxed,
            ..Self::default()
        }
    }

    pub fn with_window(mut self, window: DeltaWindow) -> Self {
        self.delta_window = Some(window);
        self
    }
}

/// Whether `seq` survives the filter.
///
/// Below [`PROPOSITION_FLOOR`] everything passes: the structural results the
/// filters encode do not cover small orders. Mode [`FilterMode::Off`] also
/// ignores the delta window, keeping the off setting a true baseline.
pub fn passes(seq: &DegreeSequence, cfg: &FilterConfig) -> bool {
    passes_counts(
        seq.n(),
        seq.leaf_count(),
        seq.two_count(),
        seq.max_degree(),
        cfg,
    )
}

/// Filter decision from precomputed counts, for callers that track them
/// incrementally.
pub(crate) fn passes_counts(
    n: usize,
    leaves: usize,
    twos: usize,
    max_degree: u32,
    cfg: &FilterConfig,
) -> bool {
    if n < PROPOSITION_FLOOR as usize {
        return true;
    }
    let counts_ok = match cfg.mode {
        FilterMode::Off => return true,
        FilterMode::Strict => twos == leaves || twos == leaves + 1,
        FilterMode::Relaxed => twos >= leaves,
    };
    counts_ok
        && cfg
            .delta_window
            .map_or(true, |w| w.contains(max_degree))
}

/// The pendant-path structure of a tree.
///
/// A pendant path runs from a branch vertex (degree at least 3) through
/// degree-2 vertices to a leaf; its length is its edge count. Trees with
/// maximum degree at most 2 have no branch vertex and are recorded as a
/// whole-graph path instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PendantProfile {
    WholeGraphPath,
    /// Pendant path lengths in ascending order, one per leaf.
    Lengths(Vec<u32>),
}

impl PendantProfile {
    /// The recorded lengths; empty for a whole-graph path.
    pub fn lengths(&self) -> &[u32] {
        match self {
            PendantProfile::WholeGraphPath => &[],
            PendantProfile::Lengths(ls) => ls,
        }
    }

    pub fn is_whole_graph_path(&self) -> bool {
        matches!(self, PendantProfile::WholeGraphPath)
    }

    /// Number of pendant paths of length `len`.
    pub fn count_of(&self, len: u32) -> usize {
        self.lengths().iter().filter(|&&l| l == len).count()
    }
}

/// Computes the pendant-path profile of a tree.
pub fn pendant_path_profile(tree: &GreedyTree) -> PendantProfile {
    let deg = tree.degrees();
    if deg.iter().all(|&d| d <= 2) {
        return PendantProfile::WholeGraphPath;
    }
    let mut lengths = Vec::new();
    for v in 0..tree.n() {
        if deg[v] != 1 {
            continue;
        }
        // Walk from the leaf toward the root; degree-2 vertices other than
        // the root pass straight through, and the root itself is a branch
        // vertex whenever one exists.
        let mut len = 1u32;
        let mut u = tree.parent_of(v).expect("leaves are never the root here");
        while deg[u] == 2 {
            len += 1;
            u = tree.parent_of(u).expect("degree-2 root is impossible here");
        }
        lengths.push(len);
    }
    lengths.sort_unstable();
    PendantProfile::Lengths(lengths)
}

/// Structural facts about one tree, stated for orders where they are
/// meaningful.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    /// No pendant path has length 4 or more.
    pub no_path_ge_4: bool,
    /// At most one pendant path has length 3.
    pub at_most_one_path_3: bool,
    /// Every leaf lies on a pendant path of length 2 or 3.
    pub all_leaves_on_short_paths: bool,
    /// No pendant path has length 3.
    pub no_path_3: bool,
    pub profile: PendantProfile,
}

impl PropertyReport {
    /// The conjunction every minimal tree of order at least 10 satisfies.
    pub fn propositions_hold(&self) -> bool {
        self.no_path_ge_4 && self.at_most_one_path_3 && self.all_leaves_on_short_paths
    }
}

/// Evaluates the structural properties of `tree`.
///
/// Rejects orders below [`PROPOSITION_FLOOR`]: the properties simply do not
/// hold there, and reporting them would invite misuse.
pub fn verify_properties(tree: &GreedyTree) -> Result<PropertyReport, FilterError> {
    let n = tree.n();
    if n < PROPOSITION_FLOOR as usize {
        return Err(FilterError::BelowPropositionFloor { n });
    }
    let profile = pendant_path_profile(tree);
    let report = match &profile {
        PendantProfile::WholeGraphPath => PropertyReport {
            no_path_ge_4: true,
            at_most_one_path_3: true,
            all_leaves_on_short_paths: false,
            no_path_3: true,
            profile,
        },
        PendantProfile::Lengths(ls) => PropertyReport {
            no_path_ge_4: ls.iter().all(|&l| l < 4),
            at_most_one_path_3: ls.iter().filter(|&&l| l == 3).count() <= 1,
            all_leaves_on_short_paths: ls.iter().all(|&l| l == 2 || l == 3),
            no_path_3: ls.iter().all(|&l| l != 3),
            profile,
        },
    };
    Ok(report)
}

#[cfg(test)]
mod test {
    use super::*;
    use crate::degseq;
    use crate::greedy::build_greedy_tree;

    fn seq(degrees: &[u32]) -> DegreeSequence {
        DegreeSequence::new(degrees.to_vec()).unwrap()
    }

    fn profile(degrees: &[u32]) -> PendantProfile {
        pendant_path_profile(&build_greedy_tree(&seq(degrees)))
    }

    #[test]
    fn strict_keeps_balanced_counts() {
        let cfg = FilterConfig::strict();
        // Nine 2s against eight leaves: within one, kept.
        assert!(passes(
            &seq(&[8, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1]),
            &cfg
        ));
        // Equal counts, kept.
        assert!(passes(&seq(&[3, 3, 2, 2, 2, 2, 1, 1, 1, 1]), &cfg));
        // One 2 against seven leaves, dropped.
        assert!(!passes(&seq(&[5, 4, 2, 1, 1, 1, 1, 1, 1, 1]), &cfg));
        // Nine 2s against two leaves: more than one over, dropped.
        assert!(!passes(&seq(&[2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1]), &cfg));
    }

    #[test]
    fn relaxed_keeps_any_surplus_of_twos() {
        let cfg = FilterConfig::relaxed();
        assert!(passes(&seq(&[2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1]), &cfg));
        assert!(passes(&seq(&[3, 3, 2, 2, 2, 2, 1, 1, 1, 1]), &cfg));
        assert!(!passes(&seq(&[5, 4, 2, 1, 1, 1, 1, 1, 1, 1]), &cfg));
    }

    #[test]
    fn small_orders_bypass_every_filter() {
        let star = seq(&[4, 1, 1, 1, 1]);
        for cfg in [
            FilterConfig::strict(),
            FilterConfig::relaxed(),
            FilterConfig::strict().with_window(DeltaWindow::new(2, 1).unwrap()),
        ] {
            assert!(passes(&star, &cfg));
        }
    }

    #[test]
    fn off_ignores_the_window() {
        let s = seq(&[5, 4, 2, 1, 1, 1, 1, 1, 1, 1]);
        let far_off = DeltaWindow::new(20, 1).unwrap();
        assert!(passes(&s, &FilterConfig::off().with_window(far_off)));
        assert!(!passes(&s, &FilterConfig::relaxed().with_window(far_off)));
    }

    #[test]
    fn window_bounds_the_maximum_degree() {
        let s = seq(&[3, 3, 2, 2, 2, 2, 1, 1, 1, 1]);
        let near = FilterConfig::strict().with_window(DeltaWindow::new(4, 1).unwrap());
        let far = FilterConfig::strict().with_window(DeltaWindow::new(6, 1).unwrap());
        assert!(passes(&s, &near));
        assert!(!passes(&s, &far));

        let w = DeltaWindow::new(2, 3).unwrap();
        assert!(w.contains(1));
        assert!(w.contains(5));
        assert!(!w.contains(6));
        assert!(DeltaWindow::new(4, 0).is_err());
    }

    #[test]
    fn profiles_of_known_shapes() {
        assert_eq!(profile(&[5, 1, 1, 1, 1, 1]).lengths(), &[1, 1, 1, 1, 1]);
        assert_eq!(profile(&[3, 2, 2, 1, 1, 1]).lengths(), &[1, 2, 2]);
        assert!(profile(&[2, 2, 2, 2, 2, 1, 1]).is_whole_graph_path());
        assert!(profile(&[1, 1]).is_whole_graph_path());
        assert_eq!(
            profile(&[8, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1]).lengths(),
            &[2, 2, 2, 2, 2, 2, 2, 3]
        );
    }

    #[test]
    fn property_report_flags() {
        // All leaves on length-2 paths.
        let r = verify_properties(&build_greedy_tree(&seq(&[
            9, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1,
        ])))
        .unwrap();
        assert!(r.no_path_ge_4);
        assert!(r.at_most_one_path_3);
        assert!(r.all_leaves_on_short_paths);
        assert!(r.no_path_3);
        assert!(r.propositions_hold());

        // One length-3 path among length-2 paths.
        let r = verify_properties(&build_greedy_tree(&seq(&[
            8, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1,
        ])))
        .unwrap();
        assert!(r.propositions_hold());
        assert!(!r.no_path_3);

        // Two length-4 paths.
        let r = verify_properties(&build_greedy_tree(&seq(&[
            3, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1,
        ])))
        .unwrap();
        assert_eq!(r.profile.lengths(), &[3, 4, 4]);
        assert!(!r.no_path_ge_4);
        assert!(!r.propositions_hold());

        // A star: every leaf on a length-1 path.
        let r = verify_properties(&build_greedy_tree(&seq(&[
            9, 1, 1, 1, 1, 1, 1, 1, 1, 1,
        ])))
        .unwrap();
        assert!(!r.all_leaves_on_short_paths);
        assert!(r.no_path_ge_4);

        // The whole graph is a path.
        let r = verify_properties(&build_greedy_tree(&seq(&[
            2, 2, 2, 2, 2, 2, 2, 2, 1, 1,
        ])))
        .unwrap();
        assert!(r.profile.is_whole_graph_path());
        assert!(!r.all_leaves_on_short_paths);
        assert!(r.no_path_3);
    }

    #[test]
    fn properties_rejected_below_floor() {
        assert_eq!(
            verify_properties(&build_greedy_tree(&seq(&[3, 2, 2, 1, 1, 1]))),
            Err(FilterError::BelowPropositionFloor { n: 6 })
        );
    }

    #[test]
    fn profile_invariants_across_enumeration() {
        for n in [10u32, 11, 12, 13] {
            degseq::enumerate(n, None, |s| {
                let tree = build_greedy_tree(s);
                let p = pendant_path_profile(&tree);
                if s.max_degree() <= 2 {
                    assert!(p.is_whole_graph_path());
                } else {
                    assert_eq!(p.lengths().len(), s.leaf_count());
                    let total: u32 = p.lengths().iter().sum();
                    assert!(total <= n - 1);
                    assert!(p.lengths().iter().all(|&l| l >= 1));
                }
            })
            .unwrap();
        }
    }
}
