//! Count tree degree sequences without materializing them.
//!
//! The number of degree sequences of trees on `n` vertices equals the
//! number of integer partitions of `n - 2`, so these counts grow
//! subexponentially while the number of trees explodes. The count is also
//! the exact amount of work one search over order `n` performs with filters
//! off.

use abc_trees::degseq;
use abc_trees::Shard;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("sequences per order:");
    for n in [2u32, 5, 10, 21, 29, 32, 40, 50, 60] {
        let total = degseq::count(n, None)?;
        println!("  n = {n:>2}: {total}");
    }

    // Sharded counting partitions the same work: the slices add up exactly.
    let n = 40;
    let shard_count = 7;
    println!("\norder {n} split across {shard_count} shards:");
    let mut total = 0;
    for index in 0..shard_count {
        let part = degseq::count(n, Some(Shard::new(shard_count, index)?))?;
        println!("  shard {index}: {part}");
        total += part;
    }
    println!("  sum: {total}");
    assert_eq!(total, degseq::count(n, None)?);
    Ok(())
}
