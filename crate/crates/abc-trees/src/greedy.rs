//! Greedy trees and atom-bond connectivity evaluation.
//!
//! The greedy tree of a degree sequence assigns degrees in breadth-first
//! order, largest first: vertex `v` (in creation order) receives the `v`-th
//! largest degree, and children are attached to the earliest vertex with
//! capacity left. Among all trees realizing a degree sequence, this tree
//! minimizes the atom-bond connectivity index
//! `sum over edges uv of sqrt((d(u) + d(v) - 2) / (d(u) * d(v)))`,
//! so the search only ever evaluates greedy trees.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::degseq::DegreeSequence;

/// Errors from reconstructing a tree out of a serialized parent array.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("parent array needs at least 2 entries, got {0}")]
    TooShort(usize),
    #[error("entry 0 of a parent array must be -1")]
    BadRoot,
    #[error("parent of vertex {v} must lie in 0..{v}, got {p}")]
    BadParent { v: usize, p: i64 },
}

/// A rooted tree in creation order: vertex 0 is the root and every other
/// vertex has a parent with a smaller label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyTree {
    degree: Vec<u32>,
    /// Parent labels; entry 0 is unused and held at 0.
    parent: Vec<u32>,
}

impl GreedyTree {
    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.degree.len()
    }

    /// Degree of every vertex, indexed by creation order.
    pub fn degrees(&self) -> &[u32] {
        &self.degree
    }

    /// Parent of `v`, or None for the root.
    pub fn parent_of(&self, v: usize) -> Option<usize> {
        (v > 0).then(|| self.parent[v] as usize)
    }

    /// Edges `(parent, child)` in creation order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n()).map(|v| (self.parent[v] as usize, v))
    }

    /// Parent array with -1 marking the root, the serialized form.
    pub fn parent_array(&self) -> Vec<i64> {
        let mut out = vec![-1i64];
        out.extend(self.parent[1..].iter().map(|&p| p as i64));
        out
    }

    /// Rebuilds a tree from its serialized parent array, recomputing vertex
    /// degrees from the edges.
    pub fn from_parent_array(parents: &[i64]) -> Result<Self, TreeError> {
        let n = parents.len();
        if n < 2 {
            return Err(TreeError::TooShort(n));
        }
        if parents[0] != -1 {
            return Err(TreeError::BadRoot);
        }
        let mut degree = vec![0u32; n];
        let mut parent = vec![0u32; n];
        for (v, &p) in parents.iter().enumerate().skip(1) {
            if p < 0 || p >= v as i64 {
                return Err(TreeError::BadParent { v, p });
            }
            parent[v] = p as u32;
            degree[v] += 1;
            degree[p as usize] += 1;
        }
        Ok(Self { degree, parent })
    }
}

/// Builds the greedy tree of a degree sequence.
///
/// Children are handed out by a running pointer, so the children of each
/// vertex form a contiguous label range and vertex degrees coincide with the
/// sequence entry by entry.
pub fn build_greedy_tree(seq: &DegreeSequence) -> GreedyTree {
    let deg = seq.degrees();
    let n = deg.len();
    let mut parent = vec![0u32; n];
    let mut next_child = 1usize;
    for p in 0..n {
        let need = if p == 0 { deg[0] } else { deg[p] - 1 };
        for _ in 0..need {
            parent[next_child] = p as u32;
            next_child += 1;
        }
    }
    debug_assert_eq!(next_child, n);
    GreedyTree {
        degree: deg.to_vec(),
        parent,
    }
}

/// Precision regime for index evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precision {
    /// Hardware floats with compensated summation.
    Standard,
    /// Fixed-point arithmetic carrying 40 decimal fraction digits.
    Extended,
}

/// An evaluated atom-bond connectivity index.
#[derive(Debug, Clone, PartialEq)]
pub enum AbcValue {
    Standard(f64),
    Extended(FixedAbc),
}

impl AbcValue {
    /// The value as a hardware float.
    pub fn value(&self) -> f64 {
        match self {
            AbcValue::Standard(v) => *v,
            AbcValue::Extended(v) => v.to_f64(),
        }
    }

    pub fn precision(&self) -> Precision {
        match self {
            AbcValue::Standard(_) => Precision::Standard,
            AbcValue::Extended(_) => Precision::Extended,
        }
    }

    /// Decimal rendering: 15 significant digits for standard values, 30 for
    /// extended ones, so the precision regime survives a round trip.
    pub fn to_decimal_string(&self) -> String {
        match self {
            AbcValue::Standard(v) => {
                let frac = 15usize.saturating_sub(f64_int_digits(*v));
                format!("{v:.frac$}")
            }
            AbcValue::Extended(v) => v.to_decimal_string(30),
        }
    }
}

fn f64_int_digits(v: f64) -> usize {
    if v < 10.0 {
        1
    } else {
        v.log10().floor() as usize + 1
    }
}

/// Compensated (Kahan) summation; both evaluation routes go through this so
/// their results agree bit for bit.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct KahanSum {
    sum: f64,
    carry: f64,
}

impl KahanSum {
    pub(crate) fn add(&mut self, x: f64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum
    }
}

#[inline]
fn edge_term(du: u32, dv: u32) -> f64 {
    ((du + dv - 2) as f64 / (du as f64 * dv as f64)).sqrt()
}

/// Index of an already-built tree in standard precision.
pub fn abc_index(tree: &GreedyTree) -> AbcValue {
    let deg = tree.degrees();
    if deg.len() == 2 {
        return AbcValue::Standard(0.0);
    }
    let mut sum = KahanSum::default();
    for (u, v) in tree.edges() {
        sum.add(edge_term(deg[u], deg[v]));
    }
    AbcValue::Standard(sum.value())
}

/// Index of the greedy tree of `degrees` without materializing the tree.
///
/// Follows the same child-assignment walk as [`build_greedy_tree`], adding
/// edge terms in creation order, and therefore returns exactly the value
/// [`abc_index`] would.
pub(crate) fn abc_standard_of_slice(degrees: &[u32]) -> f64 {
    let n = degrees.len();
    if n == 2 {
        return 0.0;
    }
    let mut sum = KahanSum::default();
    let mut p = 0usize;
    let mut need = degrees[0];
    for c in 1..n {
        while need == 0 {
            p += 1;
            need = degrees[p] - 1;
        }
        sum.add(edge_term(degrees[p], degrees[c]));
        need -= 1;
    }
    sum.value()
}

/// Index of the greedy tree of `seq` in the requested precision.
pub fn abc_of_sequence(seq: &DegreeSequence, precision: Precision) -> AbcValue {
    match precision {
        Precision::Standard => AbcValue::Standard(abc_standard_of_slice(seq.degrees())),
        Precision::Extended => AbcValue::Extended(FixedAbc::of_sequence(seq)),
    }
}

/// Decimal fraction digits carried by [`FixedAbc`].
const EXT_FRAC_DIGITS: u32 = 40;

/// An index value in fixed-point form, `units * 10^-40`.
///
/// Each edge term is the integer square root of
/// `(du + dv - 2) * 10^80 / (du * dv)`, which undershoots the exact term by
/// less than two units, tight enough to separate any candidates that
/// standard floats cannot. Equal term multisets produce identical units, so
/// exact ties stay exact.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FixedAbc {
    units: BigUint,
}

impl FixedAbc {
    /// Evaluates the greedy tree of `seq` in fixed point.
    pub fn of_sequence(seq: &DegreeSequence) -> Self {
        let degrees = seq.degrees();
        let n = degrees.len();
        let mut units = BigUint::ZERO;
        if n == 2 {
            return Self { units };
        }
        let pow80 = BigUint::from(10u32).pow(2 * EXT_FRAC_DIGITS);
        let mut cache: BTreeMap<(u32, u32), BigUint> = BTreeMap::new();
        let mut p = 0usize;
        let mut need = degrees[0];
        for c in 1..n {
            while need == 0 {
                p += 1;
                need = degrees[p] - 1;
            }
            let (du, dv) = (degrees[p], degrees[c]);
            let term = cache
                .entry((du, dv))
                .or_insert_with(|| edge_units(du, dv, &pow80));
            units += &*term;
            need -= 1;
        }
        Self { units }
    }

    /// The value as a hardware float (rounding, for display and coarse
    /// comparison only).
    pub fn to_f64(&self) -> f64 {
        self.units.to_f64().unwrap_or(f64::INFINITY) / 1e40
    }

    /// `|self - other|` in units.
    pub fn abs_diff_units(&self, other: &FixedAbc) -> BigUint {
        if self.units >= other.units {
            &self.units - &other.units
        } else {
            &other.units - &self.units
        }
    }

    /// Units corresponding to a tolerance of `10^-exp`.
    pub fn tolerance_units(exp: u32) -> BigUint {
        BigUint::from(10u32).pow(EXT_FRAC_DIGITS - exp)
    }

    /// Decimal rendering with `sig` significant digits, rounded half up.
    pub fn to_decimal_string(&self, sig: usize) -> String {
        let plain = self.units.to_string();
        let int_digits = plain.len().saturating_sub(EXT_FRAC_DIGITS as usize).max(1);
        let frac = sig.saturating_sub(int_digits) as u32;
        let divisor = BigUint::from(10u32).pow(EXT_FRAC_DIGITS - frac);
        let rounded = (&self.units + &divisor / 2u32) / divisor;
        let mut s = rounded.to_string();
        let frac = frac as usize;
        if s.len() <= frac {
            s.insert_str(0, &"0".repeat(frac - s.len() + 1));
        }
        if frac > 0 {
            s.insert(s.len() - frac, '.');
        }
        s
    }

    /// Parses a plain decimal string (as produced by
    /// [`FixedAbc::to_decimal_string`]) back into fixed point.
    pub(crate) fn parse_decimal(s: &str) -> Option<Self> {
        let (int_part, frac_part) = s.split_once('.').unwrap_or((s, ""));
        if int_part.is_empty()
            || frac_part.len() > EXT_FRAC_DIGITS as usize
            || !int_part.bytes().all(|b| b.is_ascii_digit())
            || !frac_part.bytes().all(|b| b.is_ascii_digit())
        {
            return None;
        }
        let mut digits = String::with_capacity(int_part.len() + EXT_FRAC_DIGITS as usize);
        digits.push_str(int_part);
        digits.push_str(frac_part);
        digits.push_str(&"0".repeat(EXT_FRAC_DIGITS as usize - frac_part.len()));
        let units = digits.parse().ok()?;
        Some(Self { units })
    }
}

fn edge_units(du: u32, dv: u32, pow80: &BigUint) -> BigUint {
    (BigUint::from(du + dv - 2) * pow80 / (du as u64 * dv as u64)).sqrt()
}
