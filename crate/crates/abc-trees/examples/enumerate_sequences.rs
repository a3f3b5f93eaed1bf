//! Walk the degree sequences of one order, and look at the parent/child
//! structure behind the enumeration.
//!
//! Sequences are generated by growing a head of internal degrees: removing
//! the smallest internal degree (with its matching leaves) steps to a
//! shorter sequence, and the inverse extension steps are what the
//! enumerator explores. Every partial sequence completes, so no work is
//! wasted on dead ends.

use abc_trees::degseq::{self, extend, truncate, DegreeSequence};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("all degree sequences of order 9, in enumeration order:");
    degseq::enumerate(9, None, |seq| println!("  {seq}"))?;

    // One step down and back up: truncation removes the smallest internal
    // degree, extension reinserts it.
    let seq = DegreeSequence::new(vec![6, 5, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1])?;
    let (parent, removed) = truncate(&seq)?;
    println!("\n{seq}");
    println!("  truncates to {parent} releasing degree {removed}");
    let back = extend(&parent, removed)?;
    assert_eq!(back, seq);

    // The admissible extensions of that parent: anything from 2 up to its
    // smallest internal degree.
    println!("  all extensions of {parent}:");
    for z in 2..=5 {
        println!("    z = {z}: {}", extend(&parent, z)?);
    }
    Ok(())
}
