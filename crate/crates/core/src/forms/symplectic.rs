//! The symplectic 2-form ω = Σ_a da* da of a double quiver and the map
//! τ(θ) = i_θ ω from derivations to dR^1.

use super::{contract, is_zero_in_karoubi, lie_derivative, raw_form, reduce_dr1, FormSum};
use crate::derivation::Derivation;
use crate::path::Path;
use crate::quiver::DoubleQuiver;

/// ω = Σ_{a base} da* da.
pub fn symplectic_form(d: &DoubleQuiver) -> FormSum {
    let q = d.quiver();
    let mut out = FormSum::zero();
    for a in 0..d.base_arrow_count() {
        let star = d.star(a);
        let entries = vec![Path::trivial(q.source(a)), Path::arrow(q, star), Path::arrow(q, a)];
        out.add_assign_ref(&raw_form(entries));
    }
    out
}

/// τ(θ) = i_θ ω, written in the dR^1 normal form.
pub fn tau(d: &DoubleQuiver, theta: &Derivation) -> FormSum {
    reduce_dr1(d.quiver(), &contract(theta, &symplectic_form(d))).expect("i_θ ω is a 1-form")
}

/// Whether L_θ ω vanishes in dR^2.
pub fn is_symplectic(d: &DoubleQuiver, theta: &Derivation) -> bool {
    is_zero_in_karoubi(d.quiver(), &lie_derivative(theta, &symplectic_form(d)))
}
