//! Paths and the path algebra.
//!
//! A [`Path`] stores its arrows in traversal order (first-traversed arrow
//! first). The algebra product follows left concatenation: `p·q` is nonzero
//! only when `source(p) = target(q)` and then traverses `q` before `p`.

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::scalar::{format_terms, LinComb, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    arrows: Vec<usize>,
    source: usize,
    target: usize,
}

/// An element of the path algebra.
pub type PathSum = LinComb<Path>;

impl Path {
    /// The idempotent e_v (0-based vertex).
    pub fn trivial(vertex: usize) -> Self {
        Self { arrows: Vec::new(), source: vertex, target: vertex }
    }

    pub fn arrow(q: &Quiver, id: usize) -> Self {
        Self { arrows: vec![id], source: q.source(id), target: q.target(id) }
    }

    /// A nonempty composable arrow sequence in traversal order.
    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Result<Self> {
        let (&first, &last) = match (arrows.first(), arrows.last()) {
            (Some(f), Some(l)) => (f, l),
            _ => return Err(Error::NotComposable("empty arrow sequence".into())),
        };
        for w in arrows.windows(2) {
            if q.target(w[0]) != q.source(w[1]) {
                return Err(Error::NotComposable(format!(
                    "`{}` ends at e{} but `{}` starts at e{}",
                    q.label(w[0]),
                    q.target(w[0]) + 1,
                    q.label(w[1]),
                    q.source(w[1]) + 1
                )));
            }
        }
        Ok(Self { source: q.source(first), target: q.target(last), arrows })
    }

    /// Builds from parts already known to compose; the caller guarantees it.
    pub(crate) fn from_parts_unchecked(arrows: Vec<usize>, source: usize, target: usize) -> Self {
        Self { arrows, source, target }
    }

    /// Parses `a b a*` (traversal order) or `e2`.
    pub fn parse(q: &Quiver, text: &str) -> Result<Self> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if let [single] = tokens.as_slice() {
            if let Some(v) = parse_vertex_token(single) {
                if v == 0 || v > q.vertex_count() {
                    return Err(Error::VertexOutOfRange(v));
                }
                return Ok(Self::trivial(v - 1));
            }
        }
        let ids = tokens.iter().map(|t| q.arrow_id(t)).collect::<Result<Vec<_>>>()?;
        Self::from_arrows(q, ids)
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn is_closed(&self) -> bool {
        self.source == self.target
    }

    /// `self · other`: traverse `other`, then `self`. `None` is the zero
    /// of the algebra.
    pub fn compose(&self, other: &Path) -> Option<Path> {
        if self.source != other.target {
            return None;
        }
        let mut arrows = Vec::with_capacity(self.len() + other.len());
        arrows.extend_from_slice(&other.arrows);
        arrows.extend_from_slice(&self.arrows);
        Some(Path { arrows, source: other.source, target: self.target })
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.is_trivial() {
            format!("e{}", self.source + 1)
        } else {
            self.arrows.iter().map(|&a| q.label(a)).collect::<Vec<_>>().join(" ")
        }
    }

    pub fn to_sum(&self) -> PathSum {
        PathSum::single(self.clone())
    }
}

pub(crate) fn parse_vertex_token(token: &str) -> Option<usize> {
    let rest = token.strip_prefix('e')?;
    if rest.is_empty() || !rest.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    rest.parse().ok()
}

/// compose(p, q) as an algebra element.
pub fn compose(p: &Path, q: &Path) -> PathSum {
    p.compose(q).map(|r| r.to_sum()).unwrap_or_default()
}

/// Bilinear product in the path algebra.
pub fn multiply(x: &PathSum, y: &PathSum) -> PathSum {
    let mut out = PathSum::zero();
    for (p, c) in x {
        for (r, d) in y {
            if let Some(pr) = p.compose(r) {
                out.add_term(pr, c * d);
            }
        }
    }
    out
}

/// Σ_i e_i.
pub fn unit(q: &Quiver) -> PathSum {
    (0..q.vertex_count()).map(|v| (Path::trivial(v), Scalar::one())).collect()
}

/// All paths of the given length, grouped by source vertex.
pub fn paths_of_length(q: &Quiver, len: usize) -> Vec<Path> {
    let mut layer: Vec<Path> = (0..q.vertex_count()).map(Path::trivial).collect();
    for _ in 0..len {
        let mut next = Vec::new();
        for p in &layer {
            for (id, a) in q.arrows().iter().enumerate() {
                if a.source == p.target {
                    let mut arrows = p.arrows.clone();
                    arrows.push(id);
                    next.push(Path { arrows, source: p.source, target: a.target });
                }
            }
        }
        layer = next;
    }
    layer.sort();
    layer
}

/// Renders a path-algebra element with the quiver's labels.
pub struct PathSumDisplay<'a> {
    pub sum: &'a PathSum,
    pub quiver: &'a Quiver,
}

impl fmt::Display for PathSumDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.sum, |p| format!("[{}]", p.display(self.quiver))))
    }
}

pub fn display_sum<'a>(sum: &'a PathSum, quiver: &'a Quiver) -> PathSumDisplay<'a> {
    PathSumDisplay { sum, quiver }
}
