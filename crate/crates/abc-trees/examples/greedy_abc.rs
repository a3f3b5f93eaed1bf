//! Build greedy trees and evaluate their atom-bond connectivity index.
//!
//! The greedy tree assigns a sequence's degrees in breadth-first order,
//! largest first. It minimizes the index among all realizations of its
//! sequence, which is what lets the search treat one tree per sequence as
//! representative.

use abc_trees::filters::pendant_path_profile;
use abc_trees::greedy::{abc_index, abc_of_sequence, build_greedy_tree, Precision};
use abc_trees::DegreeSequence;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for degrees in [
        vec![2, 2, 2, 1, 1],
        vec![4, 1, 1, 1, 1],
        vec![3, 2, 2, 1, 1, 1],
        vec![6, 5, 1, 1, 1, 1, 1, 1, 1, 1, 1],
        vec![3, 3, 2, 2, 2, 2, 1, 1, 1, 1],
    ] {
        let seq = DegreeSequence::new(degrees)?;
        let tree = build_greedy_tree(&seq);
        println!("{seq}");
        println!("  parent array:    {:?}", tree.parent_array());
        println!("  index:           {}", abc_index(&tree).to_decimal_string());
        println!("  pendant profile: {:?}", pendant_path_profile(&tree).lengths());
    }

    // Exact ties exist: every edge touching a degree-2 vertex contributes
    // sqrt(1/2), so these two order-7 trees share their whole term multiset.
    // Extended precision (40 fraction digits) confirms the tie is exact
    // rather than a float artifact.
    let path = DegreeSequence::new(vec![2, 2, 2, 2, 2, 1, 1])?;
    let spider = DegreeSequence::new(vec![3, 2, 2, 2, 1, 1, 1])?;
    let a = abc_of_sequence(&path, Precision::Extended);
    let b = abc_of_sequence(&spider, Precision::Extended);
    println!("\n{path}   -> {}", a.to_decimal_string());
    println!("{spider} -> {}", b.to_decimal_string());
    assert_eq!(a, b);
    println!("exactly tied in extended precision");
    Ok(())
}
