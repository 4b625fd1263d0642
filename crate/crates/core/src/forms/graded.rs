//! Finite graded pieces of Ω•_V and of the Karoubi quotients dR•.
//!
//! Every computation works on one (degree, total length) piece at a time.
//! d, products and the Euler grading preserve total length, so each piece
//! is finite and the truncation is exact.

use std::collections::HashMap;

use num_traits::One;

use super::{differential, multiply_forms, FormBasisElement, FormSum};
use crate::error::{Error, Result};
use crate::linalg::RowSpace;
use crate::path::{paths_of_length, Path};
use crate::quiver::Quiver;
use crate::scalar::Scalar;

/// Caps on the pieces that may be requested.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_degree: usize,
    pub max_length: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self { max_degree: 3, max_length: 6 }
    }
}

impl Bounds {
    fn check(&self, degree: usize, length: usize) -> Result<()> {
        if degree > self.max_degree || length > self.max_length {
            return Err(Error::BoundExceeded(format!(
                "piece (degree {degree}, length {length}) outside degree <= {}, length <= {}",
                self.max_degree, self.max_length
            )));
        }
        Ok(())
    }
}

/// Basis of the (degree, length) piece of Ω•_V, in a fixed order.
pub fn basis(q: &Quiver, degree: usize, length: usize) -> Vec<FormBasisElement> {
    if length < degree {
        return Vec::new();
    }
    // by_source[len][v] = paths of that length starting at v
    let by_source: Vec<Vec<Vec<Path>>> = (0..=length)
        .map(|len| {
            let mut groups = vec![Vec::new(); q.vertex_count()];
            for p in paths_of_length(q, len) {
                groups[p.source()].push(p);
            }
            groups
        })
        .collect();
    let mut out = Vec::new();
    // reversed entry lists: pn first
    let mut partial: Vec<(Vec<Path>, usize)> = Vec::new();
    if degree == 0 {
        for group in &by_source[length] {
            for p in group {
                out.push(FormBasisElement { entries: vec![p.clone()] });
            }
        }
        return out;
    }
    for len in 1..=length - (degree - 1) {
        for group in &by_source[len] {
            for p in group {
                partial.push((vec![p.clone()], length - len));
            }
        }
    }
    for remaining_tails in (0..degree - 1).rev() {
        let mut next = Vec::new();
        for (rev, budget) in partial {
            let v = rev.last().unwrap().target();
            for len in 1..=budget.saturating_sub(remaining_tails) {
                for p in &by_source[len][v] {
                    let mut r = rev.clone();
                    r.push(p.clone());
                    next.push((r, budget - len));
                }
            }
        }
        partial = next;
    }
    for (rev, budget) in partial {
        let v = rev.last().unwrap().target();
        for p0 in &by_source[budget][v] {
            let mut entries = Vec::with_capacity(degree + 1);
            entries.push(p0.clone());
            entries.extend(rev.iter().rev().cloned());
            out.push(FormBasisElement { entries });
        }
    }
    out.sort();
    out
}

struct Piece {
    basis: Vec<FormBasisElement>,
    index: HashMap<FormBasisElement, usize>,
}

impl Piece {
    fn new(q: &Quiver, degree: usize, length: usize) -> Self {
        let basis = basis(q, degree, length);
        let index = basis.iter().enumerate().map(|(i, b)| (b.clone(), i)).collect();
        Self { basis, index }
    }

    fn row<'a>(&'a self, x: &'a FormSum) -> impl Iterator<Item = (usize, &'a Scalar)> + 'a {
        x.iter().map(|(b, c)| (*self.index.get(b).expect("form lies in the piece"), c))
    }
}

fn supercommutator(x: &FormSum, dx: usize, y: &FormSum, dy: usize) -> FormSum {
    let mut out = multiply_forms(x, y);
    let sign = if (dx * dy) % 2 == 0 { -Scalar::one() } else { Scalar::one() };
    out.add_scaled(&multiply_forms(y, x), &sign);
    out
}

/// Span of all supercommutators [Ω^i, Ω^{n−i}] inside the (n, ℓ) piece.
fn commutator_space(q: &Quiver, degree: usize, length: usize, piece: &Piece) -> RowSpace {
    let mut space = RowSpace::new();
    for i in 0..=degree / 2 {
        let j = degree - i;
        for li in 0..=length {
            let lj = length - li;
            let left = basis(q, i, li);
            if left.is_empty() {
                continue;
            }
            let right = basis(q, j, lj);
            for x in &left {
                let xs = FormSum::single(x.clone());
                for y in &right {
                    let c = supercommutator(&xs, i, &FormSum::single(y.clone()), j);
                    if !c.is_zero() {
                        space.insert(piece.row(&c));
                    }
                }
            }
        }
    }
    space
}

/// dim H^n of (Ω•_V, d) on the length-ℓ piece.
pub fn graded_homology_dim(q: &Quiver, degree: usize, length: usize, bounds: Bounds) -> Result<usize> {
    bounds.check(degree, length)?;
    let here = Piece::new(q, degree, length);
    let up = Piece::new(q, degree + 1, length);
    let mut out_rank = RowSpace::new();
    for b in &here.basis {
        let db = differential(&FormSum::single(b.clone()));
        out_rank.insert(up.row(&db));
    }
    let in_rank = if degree == 0 {
        0
    } else {
        let mut space = RowSpace::new();
        for b in basis(q, degree - 1, length) {
            let db = differential(&FormSum::single(b));
            space.insert(here.row(&db));
        }
        space.rank()
    };
    Ok(here.basis.len() - out_rank.rank() - in_rank)
}

/// A graded piece of dR^n: its dimension and basis elements of Ω^n whose
/// classes form a basis of the quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KaroubiPiece {
    pub dim: usize,
    pub representatives: Vec<FormBasisElement>,
}

pub fn karoubi_dim(q: &Quiver, degree: usize, length: usize, bounds: Bounds) -> Result<KaroubiPiece> {
    bounds.check(degree, length)?;
    let piece = Piece::new(q, degree, length);
    let space = commutator_space(q, degree, length, &piece);
    let free = space.free_columns(piece.basis.len());
    Ok(KaroubiPiece { dim: free.len(), representatives: free.into_iter().map(|c| piece.basis[c].clone()).collect() })
}

/// dim H^n of the Karoubi complex dR• on the length-ℓ piece.
pub fn karoubi_homology_dim(q: &Quiver, degree: usize, length: usize, bounds: Bounds) -> Result<usize> {
    bounds.check(degree, length)?;
    let here = Piece::new(q, degree, length);
    let up = Piece::new(q, degree + 1, length);
    let comm_here = commutator_space(q, degree, length, &here);
    let comm_up = commutator_space(q, degree + 1, length, &up);

    let mut image_up = comm_up.clone();
    for b in &here.basis {
        image_up.insert(up.row(&differential(&FormSum::single(b.clone()))));
    }
    let rank_out = image_up.rank() - comm_up.rank();

    let rank_in = if degree == 0 {
        0
    } else {
        let mut image_here = comm_here.clone();
        for b in basis(q, degree - 1, length) {
            image_here.insert(here.row(&differential(&FormSum::single(b))));
        }
        image_here.rank() - comm_here.rank()
    };
    let dim = here.basis.len() - comm_here.rank();
    Ok(dim - rank_out - rank_in)
}

/// Whether `x` vanishes in the Karoubi quotient, piece by piece.
pub fn is_zero_in_karoubi(q: &Quiver, x: &FormSum) -> bool {
    super::graded_components(x).into_iter().all(|((degree, length), component)| {
        let piece = Piece::new(q, degree, length);
        let space = commutator_space(q, degree, length, &piece);
        space.contains(piece.row(&component))
    })
}

/// Normal form of a 1-form in dR^1 on the basis `q da`, where `q` runs from
/// target(a) back to source(a).
///
/// `p0 d(c1 … cm)` becomes Σ_j (c_{j+1} … c_m p0 c_1 … c_{j−1}) dc_j, since
/// moving a degree-0 factor around a 1-form only changes it by a commutator.
pub fn reduce_dr1(q: &Quiver, x: &FormSum) -> Result<FormSum> {
    let mut out = FormSum::zero();
    for (b, c) in x {
        if b.degree() != 1 {
            return Err(Error::Precondition(format!("reduce_dr1 expects 1-forms, got degree {}", b.degree())));
        }
        let p0 = b.leading();
        let p1 = &b.tails()[0];
        if p0.target() != p1.source() {
            continue;
        }
        let arrows = p1.arrows();
        for (j, &a) in arrows.iter().enumerate() {
            let mut seq = Vec::with_capacity(arrows.len() - 1 + p0.len());
            seq.extend_from_slice(&arrows[j + 1..]);
            seq.extend_from_slice(p0.arrows());
            seq.extend_from_slice(&arrows[..j]);
            let coeff = Path::from_parts_unchecked(seq, q.target(a), q.source(a));
            out.add_term(FormBasisElement { entries: vec![coeff, Path::arrow(q, a)] }, c.clone());
        }
    }
    Ok(out)
}
