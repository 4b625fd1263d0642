//! V-derivations of a path algebra, stored by their values on arrows.

use crate::error::{Error, Result};
use crate::path::{Path, PathSum};
use crate::quiver::Quiver;
use crate::scalar::{format_terms, Scalar};

/// A derivation killing every vertex idempotent. The image of arrow `a` is
/// a combination of paths from source(a) to target(a).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    images: Vec<PathSum>,
}

impl Derivation {
    pub fn new(q: &Quiver, images: Vec<PathSum>) -> Result<Self> {
        if images.len() != q.arrow_count() {
            return Err(Error::LengthMismatch { expected: q.arrow_count(), actual: images.len() });
        }
        for (id, img) in images.iter().enumerate() {
            if img.keys().any(|p| p.source() != q.source(id) || p.target() != q.target(id)) {
                return Err(Error::IncompatibleDerivation { arrow: q.label(id).to_string() });
            }
        }
        Ok(Self { images })
    }

    pub fn zero(q: &Quiver) -> Self {
        Self { images: vec![PathSum::zero(); q.arrow_count()] }
    }

    /// E(a) = a for every arrow.
    pub fn euler(q: &Quiver) -> Self {
        Self { images: (0..q.arrow_count()).map(|a| Path::arrow(q, a).to_sum()).collect() }
    }

    pub fn image(&self, arrow: usize) -> &PathSum {
        &self.images[arrow]
    }

    pub fn images(&self) -> &[PathSum] {
        &self.images
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(PathSum::is_zero)
    }

    /// Leibniz rule along the path.
    pub fn apply_path(&self, p: &Path) -> PathSum {
        let arrows = p.arrows();
        let mut out = PathSum::zero();
        for (j, &a) in arrows.iter().enumerate() {
            for (img, c) in &self.images[a] {
                let mut seq = Vec::with_capacity(arrows.len() + img.len());
                seq.extend_from_slice(&arrows[..j]);
                seq.extend_from_slice(img.arrows());
                seq.extend_from_slice(&arrows[j + 1..]);
                out.add_term(Path::from_parts_unchecked(seq, p.source(), p.target()), c.clone());
            }
        }
        out
    }

    pub fn apply(&self, x: &PathSum) -> PathSum {
        x.map_linear(|p| self.apply_path(p))
    }

    /// [θ, γ](a) = θ(γ(a)) − γ(θ(a)).
    pub fn commutator(&self, other: &Self) -> Self {
        let images = (0..self.images.len())
            .map(|a| &self.apply(&other.images[a]) - &other.apply(&self.images[a]))
            .collect();
        Self { images }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { images: self.images.iter().zip(&other.images).map(|(x, y)| x + y).collect() }
    }

    pub fn scaled(&self, factor: &Scalar) -> Self {
        Self { images: self.images.iter().map(|x| x.scaled(factor)).collect() }
    }

    /// One `label ↦ image` line per arrow.
    pub fn display(&self, q: &Quiver) -> String {
        (0..self.images.len())
            .map(|a| {
                format!("{} -> {}", q.label(a), format_terms(&self.images[a], |p| format!("[{}]", p.display(q))))
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// derivation_commutator as a free function.
pub fn derivation_commutator(theta: &Derivation, gamma: &Derivation) -> Derivation {
    theta.commutator(gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::examples::calogero;
    use crate::scalar::int;

    #[test]
    fn rejects_incompatible_images() {
        let d = calogero().double();
        let q = d.quiver();
        let mut images = vec![PathSum::zero(); 4];
        images[0] = Path::parse(q, "b").unwrap().to_sum();
        assert!(matches!(Derivation::new(q, images), Err(Error::IncompatibleDerivation { .. })));
        let mut images = vec![PathSum::zero(); 4];
        images[0] = Path::parse(q, "a b").unwrap().to_sum();
        assert!(Derivation::new(q, images).is_ok());
    }

    #[test]
    fn euler_scales_by_length() {
        let d = calogero().double();
        let q = d.quiver();
        let e = Derivation::euler(q);
        let p = Path::parse(q, "a b b* a*").unwrap();
        assert_eq!(e.apply_path(&p), PathSum::term(p, int(4)));
        assert!(e.apply_path(&Path::trivial(0)).is_zero());
    }

    #[test]
    fn commutator_basics() {
        let d = calogero().double();
        let q = d.quiver();
        let e = Derivation::euler(q);
        assert!(e.commutator(&e).is_zero());
        assert!(e.commutator(&Derivation::zero(q)).is_zero());
    }
}
