//! Exact rank computations over Q by fraction-free sparse elimination.
//!
//! Vectors are cleared of denominators on entry; rows are kept as primitive
//! integer vectors so entries stay small.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::Scalar;

type Row = BTreeMap<usize, BigInt>;

/// An incrementally built row space in echelon form.
#[derive(Debug, Clone, Default)]
pub struct RowSpace {
    // lead column -> row whose first nonzero entry sits in that column
    pivots: BTreeMap<usize, Row>,
}

fn to_integer_row<'a>(entries: impl IntoIterator<Item = (usize, &'a Scalar)>) -> Row {
    let entries: Vec<(usize, &Scalar)> = entries.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    let lcm = entries.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let mut row = Row::new();
    for (col, c) in entries {
        let v = c.numer() * (&lcm / c.denom());
        let slot = row.entry(col).or_insert_with(BigInt::zero);
        *slot += v;
    }
    row.retain(|_, v| !v.is_zero());
    make_primitive(&mut row);
    row
}

fn make_primitive(row: &mut Row) {
    let mut g = BigInt::zero();
    for v in row.values() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for v in row.values_mut() {
        *v /= &g;
    }
}

impl RowSpace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces against the pivots; returns the nonzero remainder if any.
    fn reduce(&self, mut row: Row) -> Option<Row> {
        loop {
            let (&lead, lead_val) = row.first_key_value()?;
            let Some(pivot) = self.pivots.get(&lead) else {
                return Some(row);
            };
            let pivot_val = &pivot[&lead];
            let g = pivot_val.gcd(lead_val);
            let row_factor = pivot_val / &g;
            let pivot_factor = lead_val / &g;
            if !row_factor.is_one() {
                for v in row.values_mut() {
                    *v *= &row_factor;
                }
            }
            for (col, pv) in pivot {
                let slot = row.entry(*col).or_insert_with(BigInt::zero);
                *slot -= &pivot_factor * pv;
                if slot.is_zero() {
                    row.remove(col);
                }
            }
            make_primitive(&mut row);
        }
    }

    /// Adds a vector given as `(column, coefficient)` pairs; returns whether
    /// the rank grew.
    pub fn insert<'a>(&mut self, entries: impl IntoIterator<Item = (usize, &'a Scalar)>) -> bool {
        match self.reduce(to_integer_row(entries)) {
            Some(mut row) => {
                if row.first_key_value().is_some_and(|(_, v)| v.is_negative()) {
                    for v in row.values_mut() {
                        *v = -&*v;
                    }
                }
                let lead = *row.first_key_value().expect("nonzero").0;
                self.pivots.insert(lead, row);
                true
            }
            None => false,
        }
    }

    pub fn contains<'a>(&self, entries: impl IntoIterator<Item = (usize, &'a Scalar)>) -> bool {
        self.reduce(to_integer_row(entries)).is_none()
    }

    /// Columns that are not pivot leads; their unit vectors span a
    /// complement of the row space.
    pub fn free_columns(&self, ncols: usize) -> Vec<usize> {
        (0..ncols).filter(|c| !self.pivots.contains_key(c)).collect()
    }
}

/// Rank of a list of sparse rows.
pub fn rank<'a, I, R>(rows: I) -> usize
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = (usize, &'a Scalar)>,
{
    let mut space = RowSpace::new();
    for r in rows {
        space.insert(r);
    }
    space.rank()
}
