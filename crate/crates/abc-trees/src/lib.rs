//! Exhaustive search for the trees of a given order with minimal
//! atom-bond connectivity (ABC) index.
//!
//! The index of a graph sums `sqrt((d(u) + d(v) - 2) / (d(u) * d(v)))` over
//! its edges. Two structural facts collapse the search space from all trees
//! to a per-degree-sequence representative: every degree sequence is
//! realized by a greedy tree that minimizes the index among its
//! realizations, and the degree sequences of order `n` can be enumerated in
//! constant amortized time. The search therefore walks degree sequences,
//! evaluates one greedy tree each, and arbitrates near-ties in extended
//! precision (below order 10, distinct minimal trees tie exactly).
//!
//! Start from the `examples/` directory; each example is a runnable tour of
//! one capability:
//!
//! ```text
//! cargo run --release -p abc-trees --example count_sequences
//! cargo run --release -p abc-trees --example enumerate_sequences
//! cargo run --release -p abc-trees --example greedy_abc
//! cargo run --release -p abc-trees --example search_order
//! cargo run --release -p abc-trees --example search_range
//! cargo run --release -p abc-trees --example sharded_search
//! cargo run --release -p abc-trees --example checkpoint_resume
//! cargo run --release -p abc-trees --example oracle_crosscheck
//! cargo run --release -p abc-trees --example bench_enumeration
//! ```
//!
//! The same operations are scriptable through the `abc-trees` binary
//! (`count`, `enum`, `search`, `verify`, `oracle-check`, `bench`).
//!
//! Module map: [`degseq`] enumerates degree sequences, [`greedy`] builds
//! and evaluates greedy trees, [`filters`] prunes candidates and checks
//! pendant-path structure, [`search`] runs the minimum search with tie
//! arbitration, sharding, and checkpoints, [`record`] de/serializes result
//! records, [`oracle`] supplies brute-force baselines, and [`cli`] wires it
//! all into the binary.

pub mod cli;
pub mod degseq;
pub mod filters;
pub mod greedy;
pub mod oracle;
pub mod record;
pub mod search;

pub use degseq::{DegreeSequence, Shard};
pub use filters::{DeltaWindow, FilterConfig, FilterMode, PendantProfile, PropertyReport};
pub use greedy::{abc_index, abc_of_sequence, build_greedy_tree, AbcValue, FixedAbc, GreedyTree,
                 Precision};
pub use search::{compare_runs, find_min, find_min_sharded, merge_shard_records, search_range,
                 SearchRecord, Winner};
