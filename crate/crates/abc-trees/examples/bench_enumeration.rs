//! Measure the per-sequence cost of the enumeration.
//!
//! The walk is designed to spend constant amortized time per emitted
//! sequence: no partial sequence is ever abandoned, and each step touches
//! a bounded amount of state. The per-sequence nanoseconds should
//! therefore stay flat as the counts grow by orders of magnitude.

use std::time::Instant;

use abc_trees::degseq;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // One warm-up pass keeps the first row honest.
    degseq::count(30, None)?;

    println!("    n      sequences   elapsed_ms   ns_per_sequence");
    let mut per_seq = Vec::new();
    for n in (30..=55u32).step_by(5) {
        let started = Instant::now();
        let total = degseq::count(n, None)?;
        let elapsed = started.elapsed();
        let ns = elapsed.as_nanos() as f64 / total as f64;
        per_seq.push(ns);
        println!(
            "{n:>5} {total:>14} {:>12.3} {ns:>17.1}",
            elapsed.as_secs_f64() * 1e3
        );
    }

    let first = per_seq.first().unwrap();
    let last = per_seq.last().unwrap();
    println!(
        "\ncost ratio across a {}x count increase: {:.2}",
        degseq::count(55, None)? / degseq::count(30, None)?,
        last / first
    );
    Ok(())
}
