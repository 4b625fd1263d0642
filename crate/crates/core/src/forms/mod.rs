//! Relative noncommutative differential forms Ω•_V of a path algebra.
//!
//! A basis element `p0 dp1 … dpn` is stored as the entry list
//! `[p0, p1, …, pn]` with length(p_i) ≥ 1 for i ≥ 1, source(p_i) =
//! target(p_{i+1}) and source(p0) = target(p1).

mod cartan;
mod graded;
mod symplectic;

pub use cartan::{contract, euler_derivation, lie_derivative};
pub use graded::{
    basis, graded_homology_dim, is_zero_in_karoubi, karoubi_dim, karoubi_homology_dim, reduce_dr1, Bounds,
    KaroubiPiece,
};
pub use symplectic::{is_symplectic, symplectic_form, tau};

use std::fmt;

use num_traits::One;

use crate::path::{Path, PathSum};
use crate::quiver::Quiver;
use crate::scalar::{format_terms, LinComb, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormBasisElement {
    entries: Vec<Path>,
}

pub type FormSum = LinComb<FormBasisElement>;

impl FormBasisElement {
    /// Normalizes a raw tensor `(a0, …, an)` of paths: `None` when a tail
    /// entry is an idempotent (zero in A/V) or neighbouring entries do not
    /// match over V.
    pub fn new(entries: Vec<Path>) -> Option<Self> {
        if entries.is_empty() || entries[1..].iter().any(Path::is_trivial) {
            return None;
        }
        if entries.windows(2).any(|w| w[0].source() != w[1].target()) {
            return None;
        }
        Some(Self { entries })
    }

    pub fn leading(&self) -> &Path {
        &self.entries[0]
    }

    pub fn tails(&self) -> &[Path] {
        &self.entries[1..]
    }

    pub fn entries(&self) -> &[Path] {
        &self.entries
    }

    pub fn degree(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn total_length(&self) -> usize {
        self.entries.iter().map(Path::len).sum()
    }

    pub fn display(&self, q: &Quiver) -> String {
        let mut s = self.entries[0].display(q);
        for t in &self.entries[1..] {
            s.push_str(&format!(" d({})", t.display(q)));
        }
        s
    }
}

/// Degree-0 form of a path.
pub fn path_form(p: &Path) -> FormSum {
    FormSum::single(FormBasisElement { entries: vec![p.clone()] })
}

pub fn from_paths(x: &PathSum) -> FormSum {
    x.map_linear(path_form)
}

/// Builds a form from a raw entry list, zero when it does not normalize.
pub fn raw_form(entries: Vec<Path>) -> FormSum {
    FormBasisElement::new(entries).map(FormSum::single).unwrap_or_default()
}

/// The form `dp` of a path (zero for idempotents).
pub fn d_path(p: &Path) -> FormSum {
    raw_form(vec![Path::trivial(p.target()), p.clone()])
}

/// Product of two basis elements:
/// (a0,…,an)(a_{n+1},…,a_m) = Σ_{i=0}^{n} (−1)^{n−i} (a0,…,a_i a_{i+1},…,a_m).
fn multiply_basis(x: &FormBasisElement, y: &FormBasisElement, out: &mut FormSum, coeff: &Scalar) {
    let n = x.degree();
    let all: Vec<&Path> = x.entries.iter().chain(&y.entries).collect();
    for i in 0..=n {
        let Some(fused) = all[i].compose(all[i + 1]) else {
            continue;
        };
        let mut entries = Vec::with_capacity(all.len() - 1);
        entries.extend(all[..i].iter().map(|p| (*p).clone()));
        entries.push(fused);
        entries.extend(all[i + 2..].iter().map(|p| (*p).clone()));
        if let Some(b) = FormBasisElement::new(entries) {
            let c = if (n - i) % 2 == 0 { coeff.clone() } else { -coeff.clone() };
            out.add_term(b, c);
        }
    }
}

pub fn multiply_forms(x: &FormSum, y: &FormSum) -> FormSum {
    let mut out = FormSum::zero();
    for (bx, cx) in x {
        for (by, cy) in y {
            multiply_basis(bx, by, &mut out, &(cx * cy));
        }
    }
    out
}

/// d(a0, …, an) = (1, a0, …, an).
pub fn differential(x: &FormSum) -> FormSum {
    x.map_linear(|b| {
        let p0 = b.leading();
        if p0.is_trivial() {
            return FormSum::zero();
        }
        let mut entries = Vec::with_capacity(b.entries.len() + 1);
        entries.push(Path::trivial(p0.target()));
        entries.extend(b.entries.iter().cloned());
        raw_form(entries)
    })
}

/// Σ_i e_i as a degree-0 form.
pub fn unit_form(q: &Quiver) -> FormSum {
    (0..q.vertex_count()).map(|v| (FormBasisElement { entries: vec![Path::trivial(v)] }, Scalar::one())).collect()
}

/// The component of the given degree.
pub fn homogeneous(x: &FormSum, degree: usize) -> FormSum {
    x.filter(|b| b.degree() == degree)
}

/// Splits a form into its (degree, length) components.
pub fn graded_components(x: &FormSum) -> std::collections::BTreeMap<(usize, usize), FormSum> {
    let mut out: std::collections::BTreeMap<(usize, usize), FormSum> = Default::default();
    for (b, c) in x {
        out.entry((b.degree(), b.total_length())).or_default().add_term(b.clone(), c.clone());
    }
    out
}

pub fn display_form(x: &FormSum, q: &Quiver) -> String {
    format_terms(x, |b| format!("[{}]", b.display(q)))
}

/// Renders a form with the quiver's labels.
pub struct FormDisplay<'a>(pub &'a FormSum, pub &'a Quiver);

impl fmt::Display for FormDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&display_form(self.0, self.1))
    }
}
