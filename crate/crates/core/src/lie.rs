//! The necklace Lie algebra of a double quiver: the Kontsevich bracket and
//! Hamiltonian derivations.

use crate::derivation::Derivation;
use crate::necklace::{partial_derivative_sum, project_to_necklaces, NecklaceSum, NecklaceWord};
use crate::path::{multiply, PathSum};
use crate::quiver::DoubleQuiver;

pub use crate::derivation::derivation_commutator;

/// {w1, w2} = Σ_a (∂w1/∂a · ∂w2/∂a* − ∂w1/∂a* · ∂w2/∂a), summed over the
/// arrows `a` of the base quiver and projected to necklaces.
pub fn kontsevich_bracket(d: &DoubleQuiver, w1: &NecklaceSum, w2: &NecklaceSum) -> NecklaceSum {
    let q = d.quiver();
    let mut product = PathSum::zero();
    for a in 0..d.base_arrow_count() {
        let s = d.star(a);
        let d1a = partial_derivative_sum(q, w1, a);
        let d1s = partial_derivative_sum(q, w1, s);
        let d2a = partial_derivative_sum(q, w2, a);
        let d2s = partial_derivative_sum(q, w2, s);
        product.add_assign_ref(&multiply(&d1a, &d2s));
        product.sub_assign_ref(&multiply(&d1s, &d2a));
    }
    project_to_necklaces(q, &product)
}

/// θ_w(a) = −∂w/∂a*, θ_w(a*) = ∂w/∂a for every base arrow `a`.
pub fn hamiltonian_derivation(d: &DoubleQuiver, w: &NecklaceSum) -> Derivation {
    let q = d.quiver();
    let mut images = vec![PathSum::zero(); q.arrow_count()];
    for a in 0..d.base_arrow_count() {
        let s = d.star(a);
        images[a] = -&partial_derivative_sum(q, w, s);
        images[s] = partial_derivative_sum(q, w, a);
    }
    Derivation::new(q, images).expect("partial derivatives are endpoint compatible")
}

/// θ_w for a single necklace word.
pub fn hamiltonian_of_word(d: &DoubleQuiver, w: &NecklaceWord) -> Derivation {
    hamiltonian_derivation(d, &w.to_sum())
}
