//! Interrupt a range search and resume it from its checkpoint.
//!
//! With a checkpoint path, the search rewrites the file atomically after
//! every completed order and finishes it with a `#complete n=K` marker. A
//! rerun replays the completed orders and picks up behind the marker; a
//! checkpoint that does not fit the requested range is refused rather than
//! silently recomputed.

use abc_trees::record::{read_checkpoint, write_checkpoint};
use abc_trees::search::search_range;
use abc_trees::FilterMode;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = tempfile::tempdir()?;
    let checkpoint = dir.path().join("orders.jsonl");

    println!("first run over orders 10..=16:");
    search_range(10, 16, FilterMode::Strict, None, Some(&checkpoint), |rec| {
        println!("  searched order {:>2}: {}", rec.n, rec.abc_min.to_decimal_string())
    })?;

    // Simulate an interruption after order 13 by truncating the checkpoint.
    let (records, marker) = read_checkpoint(&checkpoint)?;
    println!("\ncheckpoint holds {} orders, marker at n={marker}", records.len());
    write_checkpoint(&checkpoint, &records[..4])?;
    println!("truncated checkpoint back to orders 10..=13");

    println!("\nsecond run over the same range:");
    let mut recomputed = 0u32;
    search_range(10, 16, FilterMode::Strict, None, Some(&checkpoint), |rec| {
        // Replayed records come back with their original timings; freshly
        // searched orders are the ones past the marker.
        if rec.n <= 13 {
            println!("  replayed order {:>2} from the checkpoint", rec.n);
        } else {
            recomputed += 1;
            println!("  searched order {:>2}: {}", rec.n, rec.abc_min.to_decimal_string());
        }
    })?;
    assert_eq!(recomputed, 3);

    // A mismatched range is an error, not a quiet restart.
    let refused = search_range(12, 20, FilterMode::Strict, None, Some(&checkpoint), |_| {});
    println!("\nresuming under a different range: {}", refused.unwrap_err());
    Ok(())
}
